//! The property suite behind `hsw verify` and the acceptance tests.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::affine_weyl::{AffineElt, AffineWeyl};
use crate::error::Result;
use crate::hecke::{self, Hecke};
use crate::laurent::Laurent;
use crate::lattice::IVec;
use crate::oracle::Oracle;
use crate::qanalogue;
use crate::report::Check;
use crate::scalar::{Coeff, Field};
use crate::spherical::{self, Spherical};

/// Sizes of the grids checked by [`run_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub bernstein_box: i64,
    pub length: u32,
    pub canonical_length: u32,
    pub decomposition_word: usize,
    pub kato_length: u32,
    pub q_one_box: i64,
    pub random_pairs: usize,
    pub pushforward_word: usize,
    pub oracle_cutoff: i32,
    pub oracle: bool,
}

impl Bounds {
    /// Defaults that finish in seconds for the rank one and two presets.
    pub fn for_group(g: &AffineWeyl) -> Self {
        let d = g.datum();
        let small = d.positive_roots().len() <= 3;
        let rank1 = d.rank() == 1;
        Bounds {
            bernstein_box: if small { 2 } else { 1 },
            length: if rank1 { 6 } else if small { 5 } else { 3 },
            canonical_length: if rank1 { 6 } else if small { 5 } else { 3 },
            decomposition_word: if rank1 { 6 } else if small { 4 } else { 3 },
            kato_length: if rank1 { 6 } else if small { 4 } else { 2 },
            q_one_box: if small { 2 } else { 1 },
            random_pairs: 200,
            pushforward_word: 3,
            oracle_cutoff: 16,
            oracle: d.rank() <= 2 && d.positive_roots().len() <= 4,
        }
    }
}

/// Length-zero elements `ω_λ` for `λ` in the unit coordinate box.
pub fn omegas(g: &AffineWeyl) -> Vec<AffineElt> {
    let mut out: Vec<AffineElt> = Vec::new();
    for l in hecke::weight_box(g.datum().rank(), 1) {
        let w = g.omega_of_weight(&l);
        if !out.contains(&w) {
            out.push(w);
        }
    }
    out.sort_by_key(|x| (x.w.clone(), x.lambda.clone()));
    out
}

/// All words of length at most `n` in the simple reflections.
pub fn words_up_to(g: &AffineWeyl, n: usize) -> Vec<Vec<usize>> {
    let k = g.simples().len();
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Weights `λ` with `ℓ(w_λ) <= max_len`.
pub fn weights_up_to(g: &AffineWeyl, max_len: u32) -> Vec<IVec> {
    let d = g.datum();
    let bound = i64::from(max_len) + d.positive_roots().len() as i64;
    let mut out: Vec<IVec> = hecke::weight_box(d.rank(), bound)
        .into_iter()
        .filter(|l| g.min_rep_length(l) <= max_len)
        .collect();
    out.sort_by_key(|l| (g.min_rep_length(l), l.clone()));
    out
}

pub fn lengths(g: &AffineWeyl, max_len: u32) -> Check {
    let mut c = Check::new(format!("length formula vs BFS word length (ℓ <= {max_len})"));
    match g.check_lengths_bfs(max_len) {
        Ok(r) => {
            c.checked = r.checked;
            c.failures = r.mismatches;
        }
        Err(e) => c.fail(e.to_string()),
    }
    c
}

/// Bar invariance, triangularity, leading coefficient and positivity of
/// `b_λ` for every `λ` with `ℓ(w_λ) <= max_len`.
pub fn canonical_structure<C: Coeff>(sph: &Spherical<C>, max_len: u32) -> Vec<Check> {
    let g = sph.group();
    let mut bar = Check::new(format!("canonical basis is bar-invariant (ℓ(w_λ) <= {max_len})"));
    let mut tri = Check::new("canonical basis is unitriangular with lower terms in v^-1 Z[v^-1]");
    let mut pos = Check::new("canonical basis coefficients are nonnegative");
    for l in weights_up_to(g, max_len) {
        let b = match sph.canonical_basis(&l) {
            Ok(b) => b,
            Err(e) => {
                tri.fail(e.to_string());
                continue;
            }
        };
        let label = || format!("b{:?}", l.as_slice());
        bar.record(sph.bar(&b) == *b, label);
        let top = g.min_rep_length(&l);
        let lower_ok = b.iter().all(|(mu, f)| {
            if *mu == l {
                *f == Laurent::one()
            } else {
                g.min_rep_length(mu) < top && f.in_neg_part()
            }
        });
        tri.record(lower_ok && b.coeff(&l) == Laurent::one(), label);
        pos.record(b.iter().all(|(_, f)| f.has_nonneg_coeffs()), label);
    }
    vec![bar, tri, pos]
}

/// `m(e, s̄) = Σ c_λ b_λ` with bar-invariant, nonnegative `c_λ` for every
/// word of length at most `max_word`.
pub fn decomposition_structure<C: Coeff>(sph: &Spherical<C>, max_word: usize) -> Check {
    let g = sph.group();
    let mut c = Check::new(format!("Bott-Samelson decompositions are bar-invariant and positive (words <= {max_word})"));
    let e = g.identity();
    for w in words_up_to(g, max_word) {
        let label = || format!("({})", g.word_label(&w));
        match sph.decompose_bs(&e, &w) {
            Ok(d) => {
                let ok = d.values().all(|f| f.is_bar_invariant() && f.has_nonneg_coeffs());
                let m = spherical::bs_char::<C>(g, &e, &w).unwrap();
                let mut sum = spherical::Sph::zero();
                for (l, f) in &d {
                    sum.add_scaled(&sph.canonical_basis(l).unwrap(), f);
                }
                c.record(ok && sum == m, label);
            }
            Err(err) => c.fail(format!("{}: {err}", label())),
        }
    }
    c
}

fn random_elt(g: &AffineWeyl, omegas: &[AffineElt], rng: &mut StdRng, max_len: usize) -> AffineElt {
    let n = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..n).map(|_| rng.gen_range(0..g.simples().len())).collect();
    g.from_word(&omegas[rng.gen_range(0..omegas.len())], &word)
}

/// `project(h₁ h₂) = project(h₁) · h₂` on random pairs of short elements,
/// and `project(T_ω · fl_bs_char(s̄)) = bs_char(ω, s̄)` for short words.
pub fn pushforward<C: Coeff>(g: &AffineWeyl, pairs: usize, max_word: usize, seed: u64) -> Vec<Check> {
    let om = omegas(g);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(pairs);
    for _ in 0..pairs {
        let x1 = random_elt(g, &om, &mut rng, 4);
        let x2 = random_elt(g, &om, &mut rng, 4);
        let y = random_elt(g, &om, &mut rng, 4);
        let c = Laurent::<C>::monomial(rng.gen_range(-2..=2), C::from_int(rng.gen_range(-3..=3)));
        samples.push((x1, x2, y, c));
    }
    let results: Vec<bool> = samples
        .par_iter()
        .map(|(x1, x2, y, c)| {
            let h1 = Hecke::basis(x1.clone()).add(&Hecke::term(x2.clone(), c.clone()));
            let h2 = Hecke::basis(y.clone());
            spherical::project(g, &h1.mul(g, &h2)) == spherical::act(g, &spherical::project(g, &h1), &h2)
        })
        .collect();
    let mut module = Check::new(format!("project(h·h') = project(h)·h' on {pairs} random pairs"));
    for (i, ok) in results.into_iter().enumerate() {
        module.record(ok, || {
            let (x1, x2, y, _) = &samples[i];
            format!("{} + c·{} times {}", g.elt_label(x1), g.elt_label(x2), g.elt_label(y))
        });
    }
    let mut push = Check::new(format!("project(T_ω·fl_bs_char(s̄)) = bs_char(ω, s̄) for words <= {max_word}"));
    for omega in &om {
        for w in words_up_to(g, max_word) {
            let lhs = spherical::project(g, &Hecke::<C>::basis(omega.clone()).mul(g, &spherical::fl_bs_char(g, &w)));
            let rhs = spherical::bs_char::<C>(g, omega, &w);
            push.record(rhs.map(|r| r == lhs).unwrap_or(false), || {
                format!("{} ({})", g.elt_label(omega), g.word_label(&w))
            });
        }
    }
    vec![module, push]
}

pub fn kato<C: Coeff>(sph: &Spherical<C>, max_len: u32) -> Check {
    let mut c = Check::new(format!("Kato identity for dominant pairs with ℓ(w_-λ) <= {max_len}"));
    match qanalogue::kato_grid(sph, max_len) {
        Ok(rows) => {
            for r in rows {
                c.record(r.pass, || format!("λ={:?} μ={:?}: {} != {}", r.lambda.as_slice(), r.mu.as_slice(), r.lhs, r.rhs));
            }
        }
        Err(e) => c.fail(e.to_string()),
    }
    c
}

pub fn q_one(g: &AffineWeyl, bound: i64) -> Check {
    let mut c = Check::new(format!("q-analogue at q=1 equals Freudenthal multiplicity (box {bound})"));
    match qanalogue::q_one_grid(g.datum(), bound) {
        Ok(rows) => {
            for r in rows {
                c.record(r.pass, || {
                    format!("η={:?} χ={:?}: {} != {}", r.eta.as_slice(), r.chi.as_slice(), r.lusztig_at_one, r.freudenthal)
                });
            }
        }
        Err(e) => c.fail(e.to_string()),
    }
    c
}

/// The decorated words compared by the oracle grid: the empty word for
/// each `ω` in the unit box, every single simple reflection and two
/// words of length two.
pub fn oracle_objects(g: &AffineWeyl) -> Vec<(AffineElt, Vec<usize>)> {
    let e = g.identity();
    let n = g.simples().len();
    let mut out = vec![(e.clone(), vec![])];
    for omega in omegas(g) {
        if omega != e {
            out.push((omega, vec![]));
        }
    }
    for k in 0..n {
        out.push((e.clone(), vec![k]));
    }
    out.push((e.clone(), vec![0, n - 1]));
    out.push((e, vec![n - 1, 0]));
    out
}

pub fn oracle_grid<F: Field>(oracle: &Oracle<F>, objects: &[(AffineElt, Vec<usize>)], cutoff: i32) -> Check {
    let g = oracle.group();
    let mut c = Check::new(format!("graded Hom ranks equal the character pairing (cutoff {cutoff})"));
    match oracle.grid::<num_bigint::BigInt>(objects, cutoff) {
        Ok(rows) => {
            for r in rows {
                c.record(r.pass, || {
                    format!(
                        "Hom({} ({}), {} ({})): {} != {}",
                        g.elt_label(&r.left.0),
                        g.word_label(&r.left.1),
                        g.elt_label(&r.right.0),
                        g.word_label(&r.right.1),
                        r.oracle,
                        r.predicted
                    )
                });
            }
        }
        Err(e) => c.fail(e.to_string()),
    }
    c
}

/// Every check in the suite for one group.
pub fn run_suite(g: &std::sync::Arc<AffineWeyl>, b: &Bounds) -> Result<Vec<Check>> {
    type Z = num_bigint::BigInt;
    let mut out = hecke::verify_bernstein::<Z>(g, b.bernstein_box);
    out.push(hecke::verify_quadratic_affine::<Z>(g));
    if g.datum().fundamental_weights().is_some_and(|fw| fw.len() == g.datum().rank()) {
        out.push(lengths(g, b.length));
    }
    let sph = Spherical::<Z>::new(g.clone());
    out.extend(canonical_structure(&sph, b.canonical_length));
    out.push(decomposition_structure(&sph, b.decomposition_word));
    out.extend(pushforward::<Z>(g, b.random_pairs, b.pushforward_word, 0x5eed));
    out.push(kato(&sph, b.kato_length));
    out.push(q_one(g, b.q_one_box));
    if b.oracle {
        let oracle = Oracle::<crate::Rational>::new(g.clone())?;
        out.push(oracle_grid(&oracle, &oracle_objects(g), b.oracle_cutoff));
    }
    Ok(out)
}
