use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod run;

#[derive(Parser, Debug)]
#[command(name = "hsw", version, about = "Exact computations in the spherical affine Hecke module")]
pub struct Cli {
    /// Preset name (A1, A2, B2, G2, GL3, A1xA1, ...) or path to a JSON root datum.
    #[arg(long, global = true, default_value = "A1")]
    pub datum: String,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

/// `w·t_λ` with `w` a word in the finite simple reflections.
#[derive(Args, Debug, Clone)]
pub struct Elt {
    /// Finite Weyl group element as a word, e.g. `s1,s2` (`e` for the identity).
    #[arg(long, default_value = "e")]
    pub w: String,
    /// Weight in coordinates of X, e.g. `1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

/// A decorated word `(ω, s̄)`; `ω` is the length-zero part of `t_λ`.
#[derive(Args, Debug, Clone)]
pub struct Decorated {
    /// Weight whose translation has the desired length-zero part.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Comma-separated simple reflections, e.g. `s0,s`.
    #[arg(long, default_value = "")]
    pub word: String,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Length of w·t_λ.
    Length(Elt),
    /// A reduced expression ω·s_1⋯s_r.
    ReducedWord(Elt),
    /// T_x · T_y in the standard basis.
    HeckeMul {
        #[arg(long, default_value = "e")]
        left_w: String,
        #[arg(long, allow_hyphen_values = true)]
        left_lambda: Option<String>,
        #[arg(long, default_value = "e")]
        right_w: String,
        #[arg(long, allow_hyphen_values = true)]
        right_lambda: Option<String>,
    },
    /// The Bernstein element θ_λ.
    Theta {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// The spherical character m(ω, s̄).
    BsChar(Decorated),
    /// ⟨b_λ, b_μ⟩ for canonical basis elements.
    Pairing {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Predicted graded rank of Hom between Bott-Samelson objects.
    HomRank {
        #[arg(long, allow_hyphen_values = true)]
        left_omega: Option<String>,
        #[arg(long, default_value = "")]
        left_word: String,
        #[arg(long, allow_hyphen_values = true)]
        right_omega: Option<String>,
        #[arg(long, default_value = "")]
        right_word: String,
    },
    /// The canonical basis element b_λ.
    CanonicalBasis {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Multiplicities of b_λ in m(ω, s̄), characteristic 0.
    Decompose(Decorated),
    /// Lusztig's q-analogue M^χ_η(q) and the multiplicity of χ in V(η).
    QAnalogue {
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
    /// Stalks of canonical basis elements against q-analogues.
    KatoCheck {
        /// Check every dominant pair with ℓ(w_-λ) up to this length.
        #[arg(long, default_value_t = 4)]
        max_length: u32,
        #[arg(long, allow_hyphen_values = true, requires = "mu")]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "lambda")]
        mu: Option<String>,
    },
    /// Graded Hom ranks of modules against the character pairing.
    OracleCheck {
        /// Even degree cutoff for the Hom computation.
        #[arg(long, default_value_t = 16, allow_hyphen_values = true)]
        cutoff: i32,
        #[arg(long, allow_hyphen_values = true)]
        left_omega: Option<String>,
        /// Compare a single pair instead of the default grid.
        #[arg(long)]
        left_word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        right_omega: Option<String>,
        #[arg(long)]
        right_word: Option<String>,
    },
    /// Run the full property suite.
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("HSW_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(e.exit_code())
        }
    }
}
