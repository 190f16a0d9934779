//! An independent model of the spherical category at `ħ = 0`.
//!
//! Objects are graded modules over `C = O(t*) ⊗ O(T(t*/W))`, stored as
//! free graded right `O(t*)`-modules together with the action of the
//! tangent coordinates `θ_j` (one per fundamental invariant `y_j`) and of
//! the left `O(t*)`-action left over from the bimodule they came from.
//! All operators are matrices of polynomials; column `i` is the image of
//! the `i`-th generator.
//!
//! Polynomials live in `Q[x_1, …, x_r, ħ]` where `x_i` are the coordinates
//! of `t* = X ⊗ Q`; module data never involves `ħ`.

pub mod linalg;
pub mod poly;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::affine_weyl::{AffineElt, AffineWeyl, ReflectionKind};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::scalar::{Coeff, Field};
use crate::spherical;
pub use poly::{Mono, Poly};

/// A matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMat<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<F>>,
}

impl<F: Field> PolyMat<F> {
    pub fn zero(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMat { rows, cols, entries: vec![Poly::zero(nvars); rows * cols] }
    }

    pub fn identity(nvars: usize, n: usize) -> Self {
        let mut m = Self::zero(nvars, n, n);
        for i in 0..n {
            m.set(i, i, Poly::one(nvars));
        }
        m
    }

    pub fn scalar(n: usize, p: &Poly<F>) -> Self {
        let mut m = Self::zero(p.nvars(), n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<F>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn add(&self, other: &Self) -> Self {
        PolyMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        PolyMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, p: &Poly<F>) -> Self {
        PolyMat { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|a| a.mul(p)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let nvars = self.entries.first().map_or(1, Poly::nvars);
        let mut out = Self::zero(nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let s = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    datum: Arc<crate::RootDatum>,
    nvars: usize,
    degrees: Vec<i32>,
    theta: Vec<PolyMat<F>>,
    left: Vec<PolyMat<F>>,
}

impl<F: Field> GradedModule<F> {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn theta(&self) -> &[PolyMat<F>] {
        &self.theta
    }

    pub fn left(&self) -> &[PolyMat<F>] {
        &self.left
    }

    /// The matrix of left multiplication by an arbitrary polynomial.
    pub fn left_poly(&self, p: &Poly<F>) -> PolyMat<F> {
        let n = self.rank();
        let mut powers: Vec<Vec<PolyMat<F>>> =
            self.left.iter().map(|l| vec![PolyMat::identity(self.nvars, n), l.clone()]).collect();
        let mut out = PolyMat::zero(self.nvars, n, n);
        for (m, c) in p.terms() {
            let mut term = PolyMat::scalar(n, &Poly::constant(self.nvars, c.clone()));
            for (i, &e) in m.iter().enumerate().take(self.left.len()) {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&self.left[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Checks that all operators commute pairwise and are homogeneous of
    /// the expected degrees.
    pub fn check_consistency(&self, theta_degrees: &[i32]) -> Result<()> {
        let ops: Vec<(&PolyMat<F>, i32)> = self
            .theta
            .iter()
            .zip(theta_degrees)
            .map(|(t, &d)| (t, d))
            .chain(self.left.iter().map(|l| (l, 2)))
            .collect();
        for (a, da) in &ops {
            for i in 0..self.rank() {
                for k in 0..self.rank() {
                    let p = a.get(k, i);
                    let want = self.degrees[i] + da - self.degrees[k];
                    if !p.is_zero() && (!p.is_homogeneous() || 2 * p.degree().unwrap() as i32 != want) {
                        return Err(Error::Internal(format!("operator entry {p} has the wrong degree")));
                    }
                }
            }
        }
        for (x, (a, _)) in ops.iter().enumerate() {
            for (b, _) in &ops[x + 1..] {
                if !a.mul(b).sub(&b.mul(a)).is_zero() {
                    return Err(Error::Internal("module operators do not commute".into()));
                }
            }
        }
        Ok(())
    }
}

/// Fundamental invariants of `W` acting on `Q[t*]`, found degree by degree
/// as images of the Reynolds operator.
pub fn fundamental_invariants<F: Field>(g: &AffineWeyl) -> Result<Vec<Poly<F>>> {
    let r = g.datum().rank();
    let nvars = r + 1;
    let order = F::from_int(g.weyl().len() as i64);
    let mut gens: Vec<Poly<F>> = Vec::new();
    let actions: Vec<Vec<Poly<F>>> = g.weyl().iter().map(|w| linear_images::<F>(w.matrix(), r, None)).collect();
    for deg in 1..=32u32 {
        if gens.len() == r {
            break;
        }
        let monos = poly::monomials(nvars, r, deg);
        let index: HashMap<&Mono, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_row = |p: &Poly<F>| -> Vec<F> {
            let mut row = vec![F::zero(); monos.len()];
            for (m, c) in p.terms() {
                row[index[m]] = c.clone();
            }
            row
        };
        let mut span: Vec<Vec<F>> = products_of_degree(&gens, deg).iter().map(&to_row).collect();
        let mut current = linalg::rank(span.clone());
        for m in &monos {
            let base = Poly::monomial(m.clone(), F::one());
            let mut avg = Poly::zero(nvars);
            for act in &actions {
                avg = avg.add(&base.substitute(act));
            }
            let avg = avg.scale(&(F::one() / order.clone()));
            if avg.is_zero() {
                continue;
            }
            span.push(to_row(&avg));
            let next = linalg::rank(span.clone());
            if next > current {
                current = next;
                gens.push(avg);
            } else {
                span.pop();
            }
        }
    }
    if gens.len() != r {
        return Err(Error::Internal(format!("found {} fundamental invariants, expected {r}", gens.len())));
    }
    Ok(gens)
}

fn products_of_degree<F: Field>(gens: &[Poly<F>], deg: u32) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    fn rec<F: Field>(gens: &[Poly<F>], start: usize, left: u32, acc: Poly<F>, out: &mut Vec<Poly<F>>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..gens.len() {
            let d = gens[i].degree().unwrap_or(0);
            if d <= left {
                rec(gens, i, left - d, acc.mul(&gens[i]), out);
            }
        }
    }
    if let Some(first) = gens.first() {
        rec(gens, 0, deg, Poly::one(first.nvars()), &mut out);
    }
    out
}

/// Images of the coordinates under `ξ ↦ Aξ + ħλ`, i.e. the substitution
/// computing `f ∘ (ξ ↦ Aξ + ħλ)`.
fn linear_images<F: Field>(a: &crate::lattice::IMat, r: usize, shift: Option<&[i64]>) -> Vec<Poly<F>> {
    let nvars = r + 1;
    let mut out: Vec<Poly<F>> = (0..r)
        .map(|i| {
            let mut coeffs: Vec<F> = (0..r).map(|k| F::from_int(a.get(i, k))).collect();
            coeffs.push(F::from_int(shift.map_or(0, |s| s[i])));
            Poly::linear(nvars, &coeffs)
        })
        .collect();
    out.push(Poly::var(nvars, r));
    out
}

type BsCache<F> = HashMap<(AffineElt, Vec<usize>), Arc<GradedModule<F>>>;

/// Builds atoms, tensor products and Hom spaces for one affine Weyl group.
pub struct Oracle<F: Field> {
    g: Arc<AffineWeyl>,
    invariants: Vec<Poly<F>>,
    theta_degrees: Vec<i32>,
    bs_cache: RwLock<BsCache<F>>,
}

#[derive(Clone, Debug)]
pub struct OracleRow<C: Coeff> {
    pub left: (AffineElt, Vec<usize>),
    pub right: (AffineElt, Vec<usize>),
    pub oracle: Laurent<C>,
    pub predicted: Laurent<C>,
    pub cutoff: i32,
    pub pass: bool,
}

impl<F: Field> Oracle<F> {
    pub fn new(g: impl Into<Arc<AffineWeyl>>) -> Result<Self> {
        let g = g.into();
        let invariants = fundamental_invariants::<F>(&g)?;
        let theta_degrees = invariants.iter().map(|y| 2 * y.degree().unwrap_or(0) as i32 - 2).collect();
        Ok(Oracle { g, invariants, theta_degrees, bs_cache: RwLock::new(HashMap::new()) })
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.g
    }

    pub fn invariants(&self) -> &[Poly<F>] {
        &self.invariants
    }

    fn nvars(&self) -> usize {
        self.g.datum().rank() + 1
    }

    fn hbar(&self) -> usize {
        self.g.datum().rank()
    }

    /// `f ↦ f ∘ x` where `x` acts on `t* × A¹` by `(ξ, ħ) ↦ (w(ξ + ħλ), ħ)`.
    pub fn compose(&self, f: &Poly<F>, x: &AffineElt) -> Poly<F> {
        let shift = x.w.apply(&x.lambda);
        f.substitute(&linear_images::<F>(x.w.matrix(), self.hbar(), Some(&shift)))
    }

    /// `x · f = f ∘ x⁻¹`.
    pub fn act(&self, x: &AffineElt, f: &Poly<F>) -> Poly<F> {
        self.compose(f, &self.g.inverse(x))
    }

    fn finish(&self, m: GradedModule<F>) -> Result<GradedModule<F>> {
        m.check_consistency(&self.theta_degrees)?;
        Ok(m)
    }

    /// `R ⊗_{R^s} R ⟨-1⟩` for the simple reflection with index `k`, with
    /// generators `1 ⊗ 1` and `β∨ ⊗ 1`.
    pub fn atom_d(&self, k: usize) -> Result<GradedModule<F>> {
        let simple = self
            .g
            .simples()
            .get(k)
            .ok_or_else(|| Error::UnknownReflection(format!("index {k}")))?;
        let datum = self.g.datum();
        let coroot = match simple.kind {
            ReflectionKind::Finite(i) => datum.simple_coroots()[i].clone(),
            ReflectionKind::Affine(c) => datum.highest_coroot_root(c).coroot.clone(),
        };
        datum.half_weight(&coroot)?;
        let nvars = self.nvars();
        let r = self.hbar();
        let coeffs: Vec<F> = coroot.iter().map(|&c| F::from_int(c)).collect();
        let b = Poly::linear(nvars, &coeffs);
        let s = &simple.elt;
        let denom = b.sub(&self.act(s, &b));
        // f ⊗ 1 = (1 ⊗ 1)·P + (β∨ ⊗ 1)·Q with P, Q invariant under s.
        let split = |f: &Poly<F>| -> Result<(Poly<F>, Poly<F>)> {
            let q = f
                .sub(&self.act(s, f))
                .div_linear(&denom)
                .ok_or_else(|| Error::Internal("invariant splitting failed".into()))?;
            Ok((f.sub(&b.mul(&q)), q))
        };
        let gens = [Poly::one(nvars), b.clone()];
        let mut left = Vec::with_capacity(r);
        for x in 0..r {
            let mut m = PolyMat::zero(nvars, 2, 2);
            let xv = Poly::var(nvars, x);
            for (i, gen) in gens.iter().enumerate() {
                let (p, q) = split(&xv.mul(gen))?;
                m.set(0, i, p.set_zero(r));
                m.set(1, i, q.set_zero(r));
            }
            left.push(m);
        }
        let mut theta = Vec::with_capacity(self.invariants.len());
        for y in &self.invariants {
            let mut m = PolyMat::zero(nvars, 2, 2);
            for (i, gen) in gens.iter().enumerate() {
                // ħ⁻¹ (y·e_i − e_i·y) at ħ = 0.
                let (p, q) = split(&y.mul(gen))?;
                let p = if i == 0 { p.sub(y) } else { p };
                let q = if i == 1 { q.sub(y) } else { q };
                let err = || Error::Internal("θ is not divisible by ħ".into());
                m.set(0, i, p.div_var(r).ok_or_else(err)?.set_zero(r));
                m.set(1, i, q.div_var(r).ok_or_else(err)?.set_zero(r));
            }
            theta.push(m);
        }
        self.finish(GradedModule { datum: self.g.datum_arc().clone(), nvars, degrees: vec![-1, 1], theta, left })
    }

    /// The rank one module attached to `x ∈ W_aff`: left multiplication
    /// by `f` acts as `x⁻¹·f`, and `θ_j` by `ħ⁻¹(x⁻¹·y_j − y_j)`.
    pub fn atom_e(&self, x: &AffineElt) -> Result<GradedModule<F>> {
        let nvars = self.nvars();
        let r = self.hbar();
        let left = (0..r)
            .map(|i| PolyMat::scalar(1, &self.compose(&Poly::var(nvars, i), x).set_zero(r)))
            .collect();
        let mut theta = Vec::with_capacity(self.invariants.len());
        for y in &self.invariants {
            let t = self
                .compose(y, x)
                .sub(y)
                .div_var(r)
                .ok_or_else(|| Error::Internal("θ is not divisible by ħ".into()))?
                .set_zero(r);
            theta.push(PolyMat::scalar(1, &t));
        }
        self.finish(GradedModule { datum: self.g.datum_arc().clone(), nvars, degrees: vec![0], theta, left })
    }

    pub fn tensor(&self, m: &GradedModule<F>, n: &GradedModule<F>) -> Result<GradedModule<F>> {
        if m.datum != n.datum {
            return Err(Error::DatumMismatch);
        }
        let nvars = m.nvars;
        let (a, b) = (m.rank(), n.rank());
        let mut memo: HashMap<Vec<(Mono, String)>, PolyMat<F>> = HashMap::new();
        let mut embed = |p: &Poly<F>| -> PolyMat<F> {
            let key: Vec<(Mono, String)> = p.terms().map(|(m, c)| (m.clone(), c.to_string())).collect();
            memo.entry(key).or_insert_with(|| n.left_poly(p)).clone()
        };
        let mut blocks = |op: &PolyMat<F>, extra: Option<&PolyMat<F>>| -> PolyMat<F> {
            let mut out = PolyMat::zero(nvars, a * b, a * b);
            for j in 0..a {
                for i in 0..a {
                    let mut blk = embed(op.get(j, i));
                    if i == j {
                        if let Some(e) = extra {
                            blk = blk.add(e);
                        }
                    }
                    for k2 in 0..b {
                        for k in 0..b {
                            out.set(j * b + k2, i * b + k, blk.get(k2, k).clone());
                        }
                    }
                }
            }
            out
        };
        let left = m.left.iter().map(|l| blocks(l, None)).collect();
        let theta = m.theta.iter().zip(&n.theta).map(|(tm, tn)| blocks(tm, Some(tn))).collect();
        let degrees = m.degrees.iter().flat_map(|&d| n.degrees.iter().map(move |&e| d + e)).collect();
        self.finish(GradedModule { datum: m.datum.clone(), nvars, degrees, theta, left })
    }

    /// `E_ω ⊗ D_{s_1} ⊗ ⋯ ⊗ D_{s_r}`.
    pub fn bs_module(&self, omega: &AffineElt, word: &[usize]) -> Result<Arc<GradedModule<F>>> {
        self.g.check_length_zero(omega)?;
        let key = (omega.clone(), word.to_vec());
        if let Some(m) = self.bs_cache.read().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let mut m = self.atom_e(omega)?;
        for &k in word {
            m = self.tensor(&m, &self.atom_d(k)?)?;
        }
        let m = Arc::new(m);
        self.bs_cache.write().unwrap().insert(key, m.clone());
        Ok(m)
    }

    /// Graded dimensions of `Hom_C(M, N)` in every degree up to `hi`.
    pub fn hom_dimensions(&self, m: &GradedModule<F>, n: &GradedModule<F>, hi: i32) -> Result<Vec<(i32, usize)>> {
        if m.datum != n.datum {
            return Err(Error::DatumMismatch);
        }
        let lo = n.degrees.iter().min().copied().unwrap_or(0) - m.degrees.iter().max().copied().unwrap_or(0);
        Ok((lo..=hi)
            .into_par_iter()
            .map(|d| (d, hom_dimension(m, n, d, self.hbar())))
            .collect())
    }

    /// `grk Hom(M, N)`: the Hilbert series of Hom times `(1 − v²)^r`,
    /// truncated at `cutoff − 2`; the coefficients in degrees
    /// `cutoff − 1` and `cutoff` must vanish.
    pub fn hom_graded_rank<C: Coeff>(&self, m: &GradedModule<F>, n: &GradedModule<F>, cutoff: i32) -> Result<Laurent<C>> {
        if cutoff < 0 || cutoff % 2 != 0 {
            return Err(Error::BadCutoff(cutoff));
        }
        let dims = self.hom_dimensions(m, n, cutoff)?;
        let series = Laurent::from_terms(dims.iter().map(|&(d, k)| (d, C::from_int(k as i64))));
        let factor = (0..self.hbar()).fold(Laurent::<C>::one(), |acc, _| {
            &acc * &Laurent::from_i64_terms(&[(0, 1), (2, -1)])
        });
        let full = &series * &factor;
        let keep = Laurent::from_terms(full.terms().iter().filter(|(e, _)| *e <= cutoff - 2).cloned());
        let residue = Laurent::from_terms(
            full.terms().iter().filter(|(e, _)| *e > cutoff - 2 && *e <= cutoff).cloned(),
        );
        if !residue.is_zero() {
            return Err(Error::CutoffTooSmall { cutoff, residue: residue.to_string() });
        }
        Ok(keep)
    }

    /// Compares the oracle against the pairing of Bott–Samelson characters.
    pub fn oracle_vs_hecke<C: Coeff>(
        &self,
        left: (&AffineElt, &[usize]),
        right: (&AffineElt, &[usize]),
        cutoff: i32,
    ) -> Result<OracleRow<C>> {
        let m = self.bs_module(left.0, left.1)?;
        let n = self.bs_module(right.0, right.1)?;
        let oracle = self.hom_graded_rank::<C>(&m, &n, cutoff)?;
        let predicted = spherical::hom_rank::<C>(&self.g, left, right)?;
        Ok(OracleRow {
            left: (left.0.clone(), left.1.to_vec()),
            right: (right.0.clone(), right.1.to_vec()),
            pass: oracle == predicted,
            oracle,
            predicted,
            cutoff,
        })
    }

    /// All ordered pairs from `objects`, in parallel.
    pub fn grid<C: Coeff>(&self, objects: &[(AffineElt, Vec<usize>)], cutoff: i32) -> Result<Vec<OracleRow<C>>> {
        for (w, word) in objects {
            self.bs_module(w, word)?;
        }
        let pairs: Vec<(usize, usize)> =
            (0..objects.len()).flat_map(|i| (0..objects.len()).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (a, b) = (&objects[i], &objects[j]);
                self.oracle_vs_hecke((&a.0, &a.1), (&b.0, &b.1), cutoff)
            })
            .collect()
    }
}

/// `dim Hom_d(M, N)`: right `O`-linear maps of degree `d` commuting with
/// every `θ_j`.
fn hom_dimension<F: Field>(m: &GradedModule<F>, n: &GradedModule<F>, d: i32, r: usize) -> usize {
    let nvars = m.nvars;
    // Unknowns: coefficient of a monomial in entry (k, i) of the matrix of F.
    let mut unknowns: Vec<(usize, usize, Mono)> = Vec::new();
    for i in 0..m.rank() {
        for k in 0..n.rank() {
            let deg = m.degrees[i] + d - n.degrees[k];
            if deg < 0 || deg % 2 != 0 {
                continue;
            }
            for mono in poly::monomials(nvars, r, (deg / 2) as u32) {
                unknowns.push((k, i, mono));
            }
        }
    }
    if unknowns.is_empty() {
        return 0;
    }
    let mut eqs: HashMap<(usize, usize, usize, Mono), HashMap<usize, F>> = HashMap::new();
    let mut push = |key: (usize, usize, usize, Mono), col: usize, c: F| {
        let row = eqs.entry(key).or_default();
        let e = row.entry(col).or_insert_with(F::zero);
        *e = e.clone() + c;
    };
    for (j, (tm, tn)) in m.theta.iter().zip(&n.theta).enumerate() {
        for (col, (k, i, mono)) in unknowns.iter().enumerate() {
            let x = Poly::monomial(mono.clone(), F::one());
            // (θ_N F)_{k', i} picks up θ_N[k', k] · x.
            for k2 in 0..n.rank() {
                for (mm, c) in tn.get(k2, *k).mul(&x).terms() {
                    push((j, k2, *i, mm.clone()), col, c.clone());
                }
            }
            // (F θ_M)_{k, i'} picks up x · θ_M[i, i'].
            for i2 in 0..m.rank() {
                for (mm, c) in x.mul(tm.get(*i, i2)).terms() {
                    push((j, *k, i2, mm.clone()), col, -c.clone());
                }
            }
        }
    }
    let rows: Vec<Vec<F>> = eqs
        .into_values()
        .filter(|row| row.values().any(|c| !c.is_zero()))
        .map(|row| {
            let mut dense = vec![F::zero(); unknowns.len()];
            for (col, c) in row {
                dense[col] = c;
            }
            dense
        })
        .collect();
    linalg::nullity(rows, unknowns.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;
    use crate::{Integer, Rational};

    fn a1() -> (Oracle<Rational>, Arc<AffineWeyl>) {
        let g = Arc::new(AffineWeyl::preset("A1").unwrap());
        (Oracle::new(g.clone()).unwrap(), g)
    }

    fn lp(t: &[(i32, i64)]) -> Laurent<Integer> {
        Laurent::from_i64_terms(t)
    }

    #[test]
    fn a1_atoms() {
        let (o, g) = a1();
        let u = Poly::<Rational>::var(2, 0);
        assert_eq!(o.invariants(), &[u.mul(&u)]);
        let s0 = g.simple_index(ReflectionKind::Affine(0)).unwrap();
        let d = o.atom_d(s0).unwrap();
        let two = Rational::from_integer(2.into());
        let mut theta = PolyMat::zero(2, 2, 2);
        theta.set(0, 0, u.scale(&-two.clone()));
        theta.set(0, 1, u.mul(&u).scale(&two));
        theta.set(1, 0, Poly::constant(2, two.clone()));
        theta.set(1, 1, u.scale(&-two.clone()));
        assert_eq!(d.theta()[0], theta);
        let mut left = PolyMat::zero(2, 2, 2);
        left.set(0, 1, u.mul(&u));
        left.set(1, 0, Poly::one(2));
        assert_eq!(d.left()[0], left);
        let omega = g.omega_of_weight(&ivec(&[1]));
        let e = o.atom_e(&omega).unwrap();
        assert_eq!(e.theta()[0], PolyMat::scalar(1, &u.scale(&-two.clone())));
        let t = o.atom_e(&g.translation(&ivec(&[3]))).unwrap();
        assert_eq!(t.theta()[0], PolyMat::scalar(1, &u.scale(&Rational::from_integer(6.into()))));
    }

    #[test]
    fn a1_golden_hom_ranks() {
        let (o, g) = a1();
        let s = g.simple_index(ReflectionKind::Finite(0)).unwrap();
        let s0 = g.simple_index(ReflectionKind::Affine(0)).unwrap();
        let ds = o.atom_d(s).unwrap();
        let ds0 = o.atom_d(s0).unwrap();
        let hom = |m: &GradedModule<Rational>, n: &GradedModule<Rational>| o.hom_graded_rank::<Integer>(m, n, 16).unwrap();
        assert_eq!(hom(&ds0, &ds0), lp(&[(0, 1), (2, 1)]));
        assert_eq!(hom(&ds, &ds), lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(hom(&ds0, &ds), lp(&[(0, 1), (2, 1)]));
        assert_eq!(hom(&ds, &ds0), lp(&[(0, 1), (2, 1)]));
        let e = o.atom_e(&g.identity()).unwrap();
        let w1 = o.atom_e(&g.omega_of_weight(&ivec(&[1]))).unwrap();
        assert!(hom(&w1, &e).is_zero());
        assert_eq!(hom(&e, &e), Laurent::one());
    }

    #[test]
    fn a1_grid_matches_prediction() {
        let (o, g) = a1();
        let s = g.simple_index(ReflectionKind::Finite(0)).unwrap();
        let s0 = g.simple_index(ReflectionKind::Affine(0)).unwrap();
        let e = g.identity();
        let w1 = g.omega_of_weight(&ivec(&[1]));
        let objects = vec![
            (e.clone(), vec![]),
            (e.clone(), vec![s0]),
            (e.clone(), vec![s]),
            (e.clone(), vec![s0, s]),
            (e.clone(), vec![s, s0]),
            (w1, vec![]),
        ];
        for row in o.grid::<Integer>(&objects, 16).unwrap() {
            assert!(row.pass, "{:?} vs {:?}: {} != {}", row.left, row.right, row.oracle, row.predicted);
        }
    }

    #[test]
    fn errors() {
        let (o, g) = a1();
        assert!(matches!(o.hom_graded_rank::<Integer>(&o.atom_e(&g.identity()).unwrap(), &o.atom_e(&g.identity()).unwrap(), 3), Err(Error::BadCutoff(3))));
        let s = g.simple_index(ReflectionKind::Finite(0)).unwrap();
        let ds = o.atom_d(s).unwrap();
        assert!(matches!(o.hom_graded_rank::<Integer>(&ds, &ds, 0), Err(Error::CutoffTooSmall { .. })));
        let pgl = Oracle::<Rational>::new(AffineWeyl::new(crate::RootDatum::new("PGL2", 1, vec![ivec(&[1])], vec![ivec(&[2])]).unwrap())).unwrap();
        assert!(matches!(pgl.atom_d(0), Err(Error::NoHalfWeight(_))));
        let a2 = Oracle::<Rational>::new(AffineWeyl::preset("A2").unwrap()).unwrap();
        assert!(matches!(o.tensor(&ds, &a2.atom_d(0).unwrap()), Err(Error::DatumMismatch)));
    }
}
