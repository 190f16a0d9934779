use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use anyhow::anyhow;
use serde_json::{json, Value};

use hsw_core::affine_weyl::{AffineElt, AffineWeyl, ReflectionKind};
use hsw_core::lattice::{self, IVec};
use hsw_core::report::Check;
use hsw_core::spherical::{self, Spherical};
use hsw_core::{hecke, json as js, qanalogue, verify, HeckeElt, Integer, LaurentPoly, ModuleOracle, RootDatum};

use crate::{Cli, Decorated, Elt, Output, Verb};

/// An error with the process exit status it maps to.
pub struct CliError {
    code: u8,
    inner: anyhow::Error,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        self.code
    }

    fn usage(e: impl Into<anyhow::Error>) -> Self {
        CliError { code: 2, inner: e.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.inner)
    }
}

impl From<hsw_core::Error> for CliError {
    fn from(e: hsw_core::Error) -> Self {
        use hsw_core::Error::*;
        let code = match e {
            CutoffTooSmall { .. } | Triangularity(_) | Internal(_) => 1,
            _ => 2,
        };
        CliError { code, inner: e.into() }
    }
}

pub struct Report {
    pub text: String,
    pub ok: bool,
}

type Res<T> = Result<T, CliError>;

fn load_datum(spec: &str) -> Res<RootDatum> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(anyhow!("{spec}: {e}")))?;
        Ok(RootDatum::from_json(&text)?)
    } else {
        Ok(RootDatum::preset(spec)?)
    }
}

fn parse_weight(g: &AffineWeyl, text: Option<&str>) -> Res<IVec> {
    let Some(text) = text.map(str::trim).filter(|t| !t.is_empty()) else {
        return Ok(lattice::zero_vec(g.datum().rank()));
    };
    let v: Vec<i64> = text
        .trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::usage(anyhow!("bad weight `{text}`: {e}")))?;
    g.datum().check_weight(&v)?;
    Ok(v.into_iter().collect())
}

fn parse_finite(g: &AffineWeyl, text: &str) -> Res<hsw_core::WeylElt> {
    let word = g.parse_word(text)?;
    let mut fin = Vec::with_capacity(word.len());
    for k in word {
        match g.simples()[k].kind {
            ReflectionKind::Finite(i) => fin.push(i),
            ReflectionKind::Affine(_) => {
                return Err(CliError::usage(anyhow!("`{text}` must be a word in finite reflections")))
            }
        }
    }
    Ok(g.datum().weyl_from_word(&fin))
}

fn parse_elt(g: &AffineWeyl, w: &str, lambda: Option<&str>) -> Res<AffineElt> {
    Ok(g.elt(parse_finite(g, w)?, &parse_weight(g, lambda)?))
}

fn parse_decorated(g: &AffineWeyl, omega: Option<&str>, word: &str) -> Res<(AffineElt, Vec<usize>)> {
    let l = parse_weight(g, omega)?;
    Ok((g.omega_of_weight(&l), g.parse_word(word)?))
}

fn decorated_label(g: &AffineWeyl, x: &(AffineElt, Vec<usize>)) -> String {
    format!("({}, ({}))", g.elt_label(&x.0), g.word_label(&x.1))
}

fn q_text(p: &LaurentPoly) -> String {
    p.to_string().replace('v', "q")
}

fn checks_report(checks: &[Check], datum: &str, verb: &str, json_out: bool) -> Report {
    let ok = checks.iter().all(Check::passed);
    let text = if json_out {
        pretty(json!({
            "datum": datum,
            "verb": verb,
            "pass": ok,
            "checks": checks.iter().map(js::check).collect::<Vec<_>>(),
        }))
    } else {
        let mut s = String::new();
        for c in checks {
            let _ = writeln!(s, "{} {} ({} checked)", if c.passed() { "PASS" } else { "FAIL" }, c.name, c.checked);
            for f in c.failures.iter().take(10) {
                let _ = writeln!(s, "    {f}");
            }
        }
        let _ = writeln!(s, "{}", if ok { "all checks passed" } else { "some checks failed" });
        s
    };
    Report { text, ok }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Res<Report> {
    let datum = load_datum(&cli.datum)?;
    let name = datum.name().to_string();
    let g = Arc::new(AffineWeyl::new(datum));
    let json_out = cli.output == Output::Json;
    let done = |verb: &str, fields: Value, text: String| -> Report {
        let text = if json_out {
            let mut obj = json!({ "datum": name, "verb": verb });
            if let (Value::Object(o), Value::Object(f)) = (&mut obj, fields) {
                o.extend(f);
            }
            pretty(obj)
        } else {
            text
        };
        Report { text, ok: true }
    };

    Ok(match &cli.verb {
        Verb::Length(Elt { w, lambda }) => {
            let x = parse_elt(&g, w, lambda.as_deref())?;
            let l = g.length(&x);
            done("length", json!({ "element": js::affine_elt(&x), "length": l }), format!("{l}\n"))
        }
        Verb::ReducedWord(Elt { w, lambda }) => {
            let x = parse_elt(&g, w, lambda.as_deref())?;
            let rw = g.reduced_word(&x);
            let word = if rw.word.is_empty() { "()".to_string() } else { g.word_label(&rw.word) };
            done(
                "reduced-word",
                json!({
                    "element": js::affine_elt(&x),
                    "omega": js::affine_elt(&rw.omega),
                    "word": js::word(&g, &rw.word),
                }),
                format!("omega: {}\nword: {word}\n", g.elt_label(&rw.omega)),
            )
        }
        Verb::HeckeMul { left_w, left_lambda, right_w, right_lambda } => {
            let x = parse_elt(&g, left_w, left_lambda.as_deref())?;
            let y = parse_elt(&g, right_w, right_lambda.as_deref())?;
            let h = HeckeElt::basis(x.clone()).mul_basis(&g, &y);
            done(
                "hecke-mul",
                json!({ "left": js::affine_elt(&x), "right": js::affine_elt(&y), "product": js::hecke(&g, &h) }),
                format!("{}\n", h.display(&g)),
            )
        }
        Verb::Theta { lambda } => {
            let l = parse_weight(&g, Some(lambda))?;
            let h = hecke::theta::<Integer>(&g, &l);
            done("theta", json!({ "lambda": js::weight(&l), "theta": js::hecke(&g, &h) }), format!("{}\n", h.display(&g)))
        }
        Verb::BsChar(Decorated { omega, word }) => {
            let (o, w) = parse_decorated(&g, omega.as_deref(), word)?;
            let m = spherical::bs_char::<Integer>(&g, &o, &w)?;
            done(
                "bs-char",
                json!({ "omega": js::affine_elt(&o), "word": js::word(&g, &w), "character": js::sph(&g, &m) }),
                format!("{}\n", m.display(&g)),
            )
        }
        Verb::Pairing { lambda, mu } => {
            let l = parse_weight(&g, Some(lambda))?;
            let m = parse_weight(&g, Some(mu))?;
            let sph = Spherical::<Integer>::new(g.clone());
            let p = spherical::pairing(&*sph.canonical_basis(&l)?, &*sph.canonical_basis(&m)?);
            done(
                "pairing",
                json!({ "lambda": js::weight(&l), "mu": js::weight(&m), "pairing": js::laurent(&p) }),
                format!("{p}\n"),
            )
        }
        Verb::HomRank { left_omega, left_word, right_omega, right_word } => {
            let x = parse_decorated(&g, left_omega.as_deref(), left_word)?;
            let y = parse_decorated(&g, right_omega.as_deref(), right_word)?;
            let p = spherical::hom_rank::<Integer>(&g, (&x.0, &x.1), (&y.0, &y.1))?;
            done(
                "hom-rank",
                json!({
                    "left_word": { "omega": js::affine_elt(&x.0), "word": js::word(&g, &x.1) },
                    "right_word": { "omega": js::affine_elt(&y.0), "word": js::word(&g, &y.1) },
                    "rank": js::laurent(&p),
                }),
                format!("{p}\n"),
            )
        }
        Verb::CanonicalBasis { lambda } => {
            let l = parse_weight(&g, Some(lambda))?;
            let sph = Spherical::<Integer>::new(g.clone());
            let b = sph.canonical_basis(&l)?;
            done(
                "canonical-basis",
                json!({ "lambda": js::weight(&l), "element": js::sph(&g, &b) }),
                format!("{}\n", b.display(&g)),
            )
        }
        Verb::Decompose(Decorated { omega, word }) => {
            let (o, w) = parse_decorated(&g, omega.as_deref(), word)?;
            let sph = Spherical::<Integer>::new(g.clone());
            let d = sph.decompose_bs(&o, &w)?;
            let table = js::decomposition(&g, &d);
            let mut text = String::from("characteristic 0\n");
            for row in table["summands"].as_array().into_iter().flatten() {
                let l: Vec<i64> = serde_json::from_value(row["lambda"].clone()).unwrap_or_default();
                let _ = writeln!(text, "b({}): {}", join(&l), d[&l.iter().copied().collect::<IVec>()]);
            }
            done(
                "decompose",
                json!({ "omega": js::affine_elt(&o), "word": js::word(&g, &w), "decomposition": table }),
                text,
            )
        }
        Verb::QAnalogue { eta, chi } => {
            let e = parse_weight(&g, Some(eta))?;
            let c = parse_weight(&g, Some(chi))?;
            let q = qanalogue::lusztig_q::<Integer>(g.datum(), &c, &e)?;
            let m = qanalogue::freudenthal_mult(g.datum(), &e, &c)?;
            done(
                "q-analogue",
                json!({ "eta": js::weight(&e), "chi": js::weight(&c), "q_analogue": js::laurent(&q), "multiplicity": m }),
                format!("M(q) = {}\nmultiplicity = {m}\n", q_text(&q)),
            )
        }
        Verb::KatoCheck { max_length, lambda, mu } => {
            let sph = Spherical::<Integer>::new(g.clone());
            let rows = match (lambda, mu) {
                (Some(l), Some(m)) => {
                    let l = parse_weight(&g, Some(l))?;
                    let m = parse_weight(&g, Some(m))?;
                    vec![qanalogue::kato_check(&sph, &l, &m)?]
                }
                _ => qanalogue::kato_grid(&sph, *max_length)?,
            };
            let ok = rows.iter().all(|r| r.pass);
            let text = if json_out {
                pretty(json!({
                    "datum": name,
                    "verb": "kato-check",
                    "pass": ok,
                    "rows": rows.iter().map(js::kato_row).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = String::new();
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{} λ=({}) μ=({}): {} | {}",
                        if r.pass { "PASS" } else { "FAIL" },
                        join(&r.lambda),
                        join(&r.mu),
                        r.lhs,
                        r.rhs
                    );
                }
                let _ = writeln!(s, "{} of {} pairs pass", rows.iter().filter(|r| r.pass).count(), rows.len());
                s
            };
            Report { text, ok }
        }
        Verb::OracleCheck { cutoff, left_omega, left_word, right_omega, right_word } => {
            if *cutoff < 0 || cutoff % 2 != 0 {
                return Err(hsw_core::Error::BadCutoff(*cutoff).into());
            }
            let oracle = ModuleOracle::new(g.clone())?;
            let rows = match (left_word, right_word) {
                (None, None) => oracle.grid::<Integer>(&verify::oracle_objects(&g), *cutoff)?,
                (l, r) => {
                    let x = parse_decorated(&g, left_omega.as_deref(), l.as_deref().unwrap_or(""))?;
                    let y = parse_decorated(&g, right_omega.as_deref(), r.as_deref().unwrap_or(""))?;
                    vec![oracle.oracle_vs_hecke::<Integer>((&x.0, &x.1), (&y.0, &y.1), *cutoff)?]
                }
            };
            let ok = rows.iter().all(|r| r.pass);
            let text = if json_out {
                pretty(json!({
                    "datum": name,
                    "verb": "oracle-check",
                    "pass": ok,
                    "rows": rows.iter().map(|r| js::oracle_row(&g, r)).collect::<Vec<_>>(),
                }))
            } else {
                let mut s = String::new();
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{} Hom({}, {}): {} | {}",
                        if r.pass { "PASS" } else { "FAIL" },
                        decorated_label(&g, &r.left),
                        decorated_label(&g, &r.right),
                        r.oracle,
                        r.predicted
                    );
                }
                let _ = writeln!(s, "{} of {} pairs pass", rows.iter().filter(|r| r.pass).count(), rows.len());
                s
            };
            Report { text, ok }
        }
        Verb::Verify => {
            let checks = verify::run_suite(&g, &verify::Bounds::for_group(&g))?;
            checks_report(&checks, &name, "verify", json_out)
        }
    })
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
