//! The affine Hecke algebra in the `T_w` basis.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::affine_weyl::{AffineElt, AffineWeyl};
use crate::lattice::{self, pair, IVec};
use crate::laurent::Laurent;
use crate::report::Check;
use crate::scalar::Coeff;

/// A finitely supported combination `Σ c_x T_x`.
#[derive(Clone, PartialEq, Eq)]
pub struct Hecke<C> {
    terms: HashMap<AffineElt, Laurent<C>>,
}

impl<C: Coeff> std::fmt::Debug for Hecke<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coeff> Default for Hecke<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Hecke<C> {
    pub fn zero() -> Self {
        Hecke { terms: HashMap::new() }
    }

    pub fn basis(x: AffineElt) -> Self {
        Self::term(x, Laurent::one())
    }

    pub fn term(x: AffineElt, c: Laurent<C>) -> Self {
        let mut h = Self::zero();
        h.add_term(x, &c);
        h
    }

    pub fn one(g: &AffineWeyl) -> Self {
        Self::basis(g.identity())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: &AffineElt) -> Laurent<C> {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&AffineElt, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, x: AffineElt, c: &Laurent<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Hecke { terms: self.terms.iter().map(|(x, c)| (x.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut out = Self::zero();
        for (x, d) in &self.terms {
            out.add_term(x.clone(), &(d * c));
        }
        out
    }

    /// Terms sorted by length, then weight, then finite part.
    pub fn sorted_terms(&self, g: &AffineWeyl) -> Vec<(AffineElt, Laurent<C>)> {
        let mut v: Vec<_> = self.terms.iter().map(|(x, c)| (g.length(x), x.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.lambda.cmp(&b.1.lambda)).then_with(|| a.1.w.cmp(&b.1.w)));
        v.into_iter().map(|(_, x, c)| (x, c)).collect()
    }

    pub fn display(&self, g: &AffineWeyl) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (x, c)) in self.sorted_terms(g).into_iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let label = g.elt_label(&x);
            if c == Laurent::one() {
                let _ = write!(out, "T[{label}]");
            } else {
                let _ = write!(out, "({c})T[{label}]");
            }
        }
        out
    }

    /// `self · T_s` for the simple reflection with index `k`.
    pub fn mul_simple(&self, g: &AffineWeyl, k: usize) -> Self {
        let mut out = Self::zero();
        out.terms.reserve(self.terms.len() * 2);
        for (y, c) in &self.terms {
            let ys = g.mul_simple(y, k);
            if g.length(&ys) < g.length(y) {
                out.add_term(y.clone(), &c.times_v_minus_v_inv());
            }
            out.add_term(ys, c);
        }
        out
    }

    /// `self · T_s⁻¹`, using `T_s⁻¹ = T_s - (v - v⁻¹)`.
    pub fn mul_simple_inv(&self, g: &AffineWeyl, k: usize) -> Self {
        let mut out = Self::zero();
        out.terms.reserve(self.terms.len() * 2);
        for (y, c) in &self.terms {
            let ys = g.mul_simple(y, k);
            if g.length(&ys) > g.length(y) {
                out.add_term(y.clone(), &(-c.times_v_minus_v_inv()));
            }
            out.add_term(ys, c);
        }
        out
    }

    /// `self · (T_s + v⁻¹)`.
    pub fn mul_cs(&self, g: &AffineWeyl, k: usize) -> Self {
        let mut out = self.mul_simple(g, k);
        for (y, c) in &self.terms {
            out.add_term(y.clone(), &c.shift(-1));
        }
        out
    }

    /// `self · T_ω` for `ℓ(ω) = 0`.
    pub fn mul_omega(&self, g: &AffineWeyl, omega: &AffineElt) -> Self {
        if omega.w.is_identity() && omega.lambda.iter().all(|&c| c == 0) {
            return self.clone();
        }
        Hecke { terms: self.terms.iter().map(|(y, c)| (g.mul(y, omega), c.clone())).collect() }
    }

    pub fn mul_basis(&self, g: &AffineWeyl, x: &AffineElt) -> Self {
        let rw = g.reduced_word(x);
        let mut out = self.mul_omega(g, &rw.omega);
        for &k in &rw.word {
            out = out.mul_simple(g, k);
        }
        out
    }

    /// `self · (T_x)⁻¹`.
    pub fn mul_basis_inv(&self, g: &AffineWeyl, x: &AffineElt) -> Self {
        let rw = g.reduced_word(x);
        let mut out = self.clone();
        for &k in rw.word.iter().rev() {
            out = out.mul_simple_inv(g, k);
        }
        out.mul_omega(g, &g.inverse(&rw.omega))
    }

    pub fn mul(&self, g: &AffineWeyl, other: &Self) -> Self {
        let mut out = Self::zero();
        for (x, c) in &other.terms {
            let part = self.mul_basis(g, x);
            for (y, d) in part.terms {
                out.add_term(y, &(&d * c));
            }
        }
        out
    }

    /// `v -> v⁻¹`, `T_x -> (T_{x⁻¹})⁻¹ = T_ω T_{s_1}⁻¹ ⋯ T_{s_r}⁻¹`.
    pub fn bar(&self, g: &AffineWeyl) -> Self {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            let part = bar_basis(g, x);
            let cb = c.bar();
            for (y, d) in part.terms {
                out.add_term(y, &(&d * &cb));
            }
        }
        out
    }
}

pub fn bar_basis<C: Coeff>(g: &AffineWeyl, x: &AffineElt) -> Hecke<C> {
    let rw = g.reduced_word(x);
    let mut out = Hecke::basis(rw.omega.clone());
    for &k in &rw.word {
        out = out.mul_simple_inv(g, k);
    }
    out
}

pub fn inv_t<C: Coeff>(g: &AffineWeyl, x: &AffineElt) -> Hecke<C> {
    Hecke::one(g).mul_basis_inv(g, x)
}

/// `T_s + v⁻¹`.
pub fn cs<C: Coeff>(g: &AffineWeyl, k: usize) -> Hecke<C> {
    let mut h = Hecke::basis(g.simples()[k].elt.clone());
    h.add_term(g.identity(), &Laurent::v_pow(-1));
    h
}

/// `θ_λ = T_{t_μ} (T_{t_ν})⁻¹` for the datum's standard dominant
/// decomposition `λ = μ - ν`.
pub fn theta<C: Coeff>(g: &AffineWeyl, lambda: &[i64]) -> Hecke<C> {
    let (mu, nu) = g.datum().dominant_decomposition(lambda);
    theta_with(g, &mu, &nu)
}

pub fn theta_with<C: Coeff>(g: &AffineWeyl, mu: &[i64], nu: &[i64]) -> Hecke<C> {
    debug_assert!(g.datum().is_dominant(mu) && g.datum().is_dominant(nu));
    Hecke::basis(g.translation(mu)).mul_basis_inv(g, &g.translation(nu))
}

/// Weights with every lattice coordinate in `[-bound, bound]`.
pub fn weight_box(rank: usize, bound: i64) -> Vec<IVec> {
    let mut out = vec![IVec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Checks the Bernstein relations: (1) `T_v T_w = T_{vw}` when lengths
/// add, (2) `θ_λ θ_μ = θ_{λ+μ}`, (3) `T_s θ_λ = θ_λ T_s` when
/// `⟨λ,α∨⟩ = 0`, (4) `θ_λ = T_s θ_{λ-α} T_s` when `⟨λ,α∨⟩ = 1`.
pub fn verify_bernstein<C: Coeff>(g: &AffineWeyl, bound: i64) -> Vec<Check> {
    use rayon::prelude::*;

    let d = g.datum();
    let weyl = g.weyl();
    let mut r1 = Check::new("bernstein (1): T_v T_w = T_vw");
    for v in weyl {
        for w in weyl {
            let vw = d.weyl_mul(v, w);
            if vw.length() != v.length() + w.length() {
                continue;
            }
            let zero = lattice::zero_vec(d.rank());
            let lhs = Hecke::<C>::basis(g.elt(v.clone(), &zero)).mul_basis(g, &g.elt(w.clone(), &zero));
            r1.record(lhs == Hecke::basis(g.elt(vw, &zero)), || format!("v={v:?} w={w:?}"));
        }
    }

    let weights = weight_box(d.rank(), bound);
    let sums: Vec<IVec> = weight_box(d.rank(), 2 * bound);
    let thetas: HashMap<IVec, Hecke<C>> =
        sums.par_iter().map(|l| (l.clone(), theta::<C>(g, l))).collect();

    let pairs: Vec<(&IVec, &IVec)> =
        weights.iter().flat_map(|a| weights.iter().map(move |b| (a, b))).collect();
    let r2_results: Vec<(bool, String)> = pairs
        .par_iter()
        .map(|(a, b)| {
            let (mu, nu) = d.dominant_decomposition(b);
            let lhs = thetas[*a]
                .mul_basis(g, &g.translation(&mu))
                .mul_basis_inv(g, &g.translation(&nu));
            let sum = lattice::add(a, b);
            (lhs == thetas[&sum], format!("λ={:?} μ={:?}", a.as_slice(), b.as_slice()))
        })
        .collect();
    let mut r2 = Check::new("bernstein (2): θ_λ θ_μ = θ_{λ+μ}");
    for (ok, msg) in r2_results {
        r2.record(ok, || msg);
    }

    let mut r3 = Check::new("bernstein (3): T_s θ_λ = θ_λ T_s when ⟨λ,α∨⟩ = 0");
    let mut r4 = Check::new("bernstein (4): θ_λ = T_s θ_{λ-α} T_s when ⟨λ,α∨⟩ = 1");
    let cases: Vec<(usize, &IVec)> =
        (0..d.semisimple_rank()).flat_map(|i| weights.iter().map(move |l| (i, l))).collect();
    let results: Vec<(u8, bool, String)> = cases
        .par_iter()
        .filter_map(|&(i, l)| {
            let k = g.simple_index(crate::affine_weyl::ReflectionKind::Finite(i)).unwrap();
            let ts = Hecke::<C>::basis(g.simples()[k].elt.clone());
            let p = pair(l, &d.simple_coroots()[i]);
            let msg = format!("α{} λ={:?}", i + 1, l.as_slice());
            match p {
                0 => {
                    let th = &thetas[l];
                    Some((3, ts.mul(g, th) == th.mul_simple(g, k), msg))
                }
                1 => {
                    let shifted = lattice::sub(l, &d.simple_roots()[i]);
                    let th = thetas.get(&shifted).cloned().unwrap_or_else(|| theta::<C>(g, &shifted));
                    let rhs = ts.mul(g, &th).mul_simple(g, k);
                    Some((4, rhs == thetas[l], msg))
                }
                _ => None,
            }
        })
        .collect();
    for (which, ok, msg) in results {
        let target = if which == 3 { &mut r3 } else { &mut r4 };
        target.record(ok, || msg);
    }
    vec![r1, r2, r3, r4]
}

/// `(T_{s0} + v⁻¹)(T_{s0} - v) = 0` for every affine simple reflection.
pub fn verify_quadratic_affine<C: Coeff>(g: &AffineWeyl) -> Check {
    let mut check = Check::new("quadratic relation for affine simples");
    for (k, s) in g.simples().iter().enumerate() {
        if !matches!(s.kind, crate::affine_weyl::ReflectionKind::Affine(_)) {
            continue;
        }
        let ts = Hecke::<C>::basis(s.elt.clone());
        let mut left = ts.clone();
        left.add_term(g.identity(), &Laurent::v_pow(-1));
        let mut right = ts;
        right.add_term(g.identity(), &(-Laurent::v_pow(1)));
        let prod = left.mul(g, &right);
        check.record(prod.is_zero(), || format!("{}: {}", g.reflection_label(k), prod.display(g)));
    }
    check
}
