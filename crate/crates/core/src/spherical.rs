//! The spherical right module `M_sph = M_triv ⊗_{H_W} H_aff` with basis
//! `m_λ = m_0 · T_{w_λ}`, its bar involution and canonical basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use crate::affine_weyl::{AffineElt, AffineWeyl};
use crate::error::{Error, Result};
use crate::hecke::Hecke;
use crate::lattice::IVec;
use crate::laurent::Laurent;
use crate::scalar::Coeff;

/// A finitely supported combination `Σ c_λ m_λ`.
#[derive(Clone, PartialEq, Eq)]
pub struct Sph<C> {
    terms: HashMap<IVec, Laurent<C>>,
}

impl<C: Coeff> std::fmt::Debug for Sph<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sorted: BTreeMap<_, _> = self.terms.iter().collect();
        f.debug_map().entries(sorted).finish()
    }
}

impl<C: Coeff> Default for Sph<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Sph<C> {
    pub fn zero() -> Self {
        Sph { terms: HashMap::new() }
    }

    pub fn basis(lambda: &[i64]) -> Self {
        Self::term(lambda, Laurent::one())
    }

    pub fn term(lambda: &[i64], c: Laurent<C>) -> Self {
        let mut m = Self::zero();
        m.add_term(lambda.iter().copied().collect(), &c);
        m
    }

    pub fn from_terms<I: IntoIterator<Item = (IVec, Laurent<C>)>>(terms: I) -> Self {
        let mut m = Self::zero();
        for (l, c) in terms {
            m.add_term(l, &c);
        }
        m
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

    pub fn coeff(&self, lambda: &[i64]) -> Laurent<C> {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IVec, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, lambda: IVec, c: &Laurent<C>) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn add_scaled(&mut self, other: &Self, c: &Laurent<C>) {
        for (l, d) in &other.terms {
            self.add_term(l.clone(), &(d * c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &Laurent::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &(-Laurent::one()));
        out
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Terms with the longest `w_λ` first, ties broken by weight.
    pub fn sorted_terms(&self, g: &AffineWeyl) -> Vec<(IVec, Laurent<C>)> {
        let mut v: Vec<_> =
            self.terms.iter().map(|(l, c)| (g.min_rep_length(l), l.clone(), c.clone())).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        v.into_iter().map(|(_, l, c)| (l, c)).collect()
    }

    pub fn display(&self, g: &AffineWeyl) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (l, c)) in self.sorted_terms(g).into_iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let lam: Vec<String> = l.iter().map(|x| x.to_string()).collect();
            if c == Laurent::one() {
                let _ = write!(out, "m({})", lam.join(","));
            } else {
                let _ = write!(out, "({c})m({})", lam.join(","));
            }
        }
        out
    }

    pub fn is_bar_invariant_in(&self, sph: &Spherical<C>) -> bool {
        sph.bar(self) == *self
    }
}

/// `π(T_x) = v^{ℓ(u)} m_λ` where `x = u · w_λ`.
pub fn project_basis<C: Coeff>(g: &AffineWeyl, x: &AffineElt) -> (IVec, Laurent<C>) {
    let (u, lambda) = g.coset_decompose(x);
    (lambda, Laurent::v_pow(u.length() as i32))
}

pub fn project<C: Coeff>(g: &AffineWeyl, h: &Hecke<C>) -> Sph<C> {
    let mut out = Sph::zero();
    for (x, c) in h.iter() {
        let (l, p) = project_basis::<C>(g, x);
        out.add_term(l, &(&p * c));
    }
    out
}

/// `m · T_s`.
pub fn act_simple<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, k: usize) -> Sph<C> {
    let mut out = Sph::zero();
    for (l, c) in &m.terms {
        let wl = g.min_rep(l);
        let y = g.mul_simple(&wl, k);
        if g.length(&y) < g.length(&wl) {
            out.add_term(l.clone(), &c.times_v_minus_v_inv());
        }
        let (l2, p) = project_basis::<C>(g, &y);
        out.add_term(l2, &(&p * c));
    }
    out
}

/// `m · T_s⁻¹ = m · T_s - (v - v⁻¹) m`.
pub fn act_simple_inv<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, k: usize) -> Sph<C> {
    let mut out = act_simple(g, m, k);
    for (l, c) in &m.terms {
        out.add_term(l.clone(), &(-c.times_v_minus_v_inv()));
    }
    out
}

/// `m · (T_s + v⁻¹)`.
pub fn act_cs<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, k: usize) -> Sph<C> {
    let mut out = act_simple(g, m, k);
    for (l, c) in &m.terms {
        out.add_term(l.clone(), &c.shift(-1));
    }
    out
}

pub fn act_omega<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, omega: &AffineElt) -> Sph<C> {
    let mut out = Sph::zero();
    for (l, c) in &m.terms {
        let y = g.mul(&g.min_rep(l), omega);
        let (l2, p) = project_basis::<C>(g, &y);
        out.add_term(l2, &(&p * c));
    }
    out
}

pub fn act_basis<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, x: &AffineElt) -> Sph<C> {
    let rw = g.reduced_word(x);
    let mut out = act_omega(g, m, &rw.omega);
    for &k in &rw.word {
        out = act_simple(g, &out, k);
    }
    out
}

/// The right action `m · h`.
pub fn act<C: Coeff>(g: &AffineWeyl, m: &Sph<C>, h: &Hecke<C>) -> Sph<C> {
    let mut out = Sph::zero();
    for (x, c) in h.iter() {
        out.add_scaled(&act_basis(g, m, x), c);
    }
    out
}

/// `m(ω, s̄) = m_0 · T_ω · (T_{s_1} + v⁻¹) ⋯ (T_{s_r} + v⁻¹)`.
pub fn bs_char<C: Coeff>(g: &AffineWeyl, omega: &AffineElt, word: &[usize]) -> Result<Sph<C>> {
    g.check_length_zero(omega)?;
    let zero = crate::lattice::zero_vec(g.datum().rank());
    let mut m = act_omega(g, &Sph::basis(&zero), omega);
    for &k in word {
        m = act_cs(g, &m, k);
    }
    Ok(m)
}

/// `(T_{s_1} + v⁻¹) ⋯ (T_{s_r} + v⁻¹)` in the Hecke algebra.
pub fn fl_bs_char<C: Coeff>(g: &AffineWeyl, word: &[usize]) -> Hecke<C> {
    word.iter().fold(Hecke::one(g), |acc, &k| acc.mul_cs(g, k))
}

/// `⟨v^i m_λ, v^j m_μ⟩ = v^{-i-j} δ_{λμ}`, extended biadditively.
pub fn pairing<C: Coeff>(m: &Sph<C>, n: &Sph<C>) -> Laurent<C> {
    let mut out = Laurent::zero();
    for (l, c) in &m.terms {
        if let Some(d) = n.terms.get(l) {
            out += &(c * d).bar();
        }
    }
    out
}

/// The predicted graded rank of Hom between Bott–Samelson objects.
pub fn hom_rank<C: Coeff>(
    g: &AffineWeyl,
    left: (&AffineElt, &[usize]),
    right: (&AffineElt, &[usize]),
) -> Result<Laurent<C>> {
    Ok(pairing(&bs_char::<C>(g, left.0, left.1)?, &bs_char::<C>(g, right.0, right.1)?))
}

/// The module together with memo tables for the bar involution and the
/// canonical basis.
pub struct Spherical<C> {
    g: Arc<AffineWeyl>,
    bar_cache: RwLock<HashMap<IVec, Arc<Sph<C>>>>,
    canon_cache: RwLock<HashMap<IVec, Arc<Sph<C>>>>,
}

impl<C: Coeff> Spherical<C> {
    pub fn new(g: impl Into<Arc<AffineWeyl>>) -> Self {
        Spherical {
            g: g.into(),
            bar_cache: RwLock::new(HashMap::new()),
            canon_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.g
    }

    /// `bar(m_λ) = m_0 · T_ω T_{s_1}⁻¹ ⋯ T_{s_r}⁻¹` along a reduced word of
    /// `w_λ`.
    pub fn bar_basis(&self, lambda: &[i64]) -> Arc<Sph<C>> {
        if let Some(b) = self.bar_cache.read().unwrap().get(lambda) {
            return b.clone();
        }
        let g = &*self.g;
        let rw = g.reduced_word(&g.min_rep(lambda));
        let zero = crate::lattice::zero_vec(g.datum().rank());
        let mut m = act_omega(g, &Sph::basis(&zero), &rw.omega);
        for &k in &rw.word {
            m = act_simple_inv(g, &m, k);
        }
        let m = Arc::new(m);
        self.bar_cache.write().unwrap().insert(lambda.iter().copied().collect(), m.clone());
        m
    }

    pub fn bar(&self, m: &Sph<C>) -> Sph<C> {
        let mut out = Sph::zero();
        for (l, c) in &m.terms {
            out.add_scaled(&self.bar_basis(l), &c.bar());
        }
        out
    }

    /// `b_λ`: bar-invariant, `m_λ` plus lower terms with coefficients in
    /// `v⁻¹Z[v⁻¹]`.
    pub fn canonical_basis(&self, lambda: &[i64]) -> Result<Arc<Sph<C>>> {
        if let Some(b) = self.canon_cache.read().unwrap().get(lambda) {
            return Ok(b.clone());
        }
        let g = &*self.g;
        let top = g.min_rep_length(lambda);
        let rw = g.reduced_word(&g.min_rep(lambda));
        let mut c = bs_char::<C>(g, &rw.omega, &rw.word)?;
        if c.coeff(lambda) != Laurent::one() {
            return Err(Error::Triangularity(lambda.to_vec()));
        }
        loop {
            let mut candidates: Vec<(u32, IVec)> = Vec::new();
            for (mu, f) in &c.terms {
                if mu.as_slice() == lambda {
                    continue;
                }
                let l = g.min_rep_length(mu);
                if l >= top {
                    return Err(Error::Triangularity(lambda.to_vec()));
                }
                if !f.in_neg_part() {
                    candidates.push((l, mu.clone()));
                }
            }
            let Some((_, mu)) = candidates.into_iter().max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
            else {
                break;
            };
            let f = c.coeff(&mu).sym_complete();
            let b = self.canonical_basis(&mu)?;
            c.add_scaled(&b, &(-f));
        }
        let c = Arc::new(c);
        self.canon_cache.write().unwrap().insert(lambda.iter().copied().collect(), c.clone());
        Ok(c)
    }

    /// Coefficients `c_λ` with `m(ω, s̄) = Σ c_λ b_λ`.
    pub fn decompose_bs(&self, omega: &AffineElt, word: &[usize]) -> Result<BTreeMap<IVec, Laurent<C>>> {
        let m = bs_char::<C>(&self.g, omega, word)?;
        self.decompose(&m)
    }

    pub fn decompose(&self, m: &Sph<C>) -> Result<BTreeMap<IVec, Laurent<C>>> {
        let g = &*self.g;
        let mut rest = m.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let (_, mu) = rest
                .terms
                .keys()
                .map(|mu| (g.min_rep_length(mu), mu.clone()))
                .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)))
                .unwrap();
            let f = rest.coeff(&mu);
            let b = self.canonical_basis(&mu)?;
            rest.add_scaled(&b, &(-f.clone()));
            if !rest.coeff(&mu).is_zero() {
                return Err(Error::Triangularity(mu.to_vec()));
            }
            out.insert(mu, f);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{bar_basis, cs};
    use num_bigint::BigInt;

    type S = Sph<BigInt>;
    type L = Laurent<BigInt>;

    fn a1() -> Arc<AffineWeyl> {
        Arc::new(AffineWeyl::preset("A1").unwrap())
    }

    fn lp(t: &[(i32, i64)]) -> L {
        L::from_i64_terms(t)
    }

    #[test]
    fn projections() {
        let g = a1();
        assert_eq!(project(&g, &Hecke::<BigInt>::one(&g)), S::basis(&[0]));
        let ts = Hecke::<BigInt>::basis(g.simples()[0].elt.clone());
        assert_eq!(project(&g, &ts), S::term(&[0], lp(&[(1, 1)])));
        let ts0 = Hecke::<BigInt>::basis(g.simples()[1].elt.clone());
        assert_eq!(project(&g, &ts0), S::basis(&[-2]));
    }

    #[test]
    fn actions() {
        let g = a1();
        let m0 = S::basis(&[0]);
        assert_eq!(act(&g, &m0, &cs::<BigInt>(&g, 0)), S::term(&[0], lp(&[(1, 1), (-1, 1)])));
        assert_eq!(act(&g, &m0, &Hecke::one(&g)), m0);
        assert_eq!(act_simple(&g, &S::basis(&[-2]), 0), S::basis(&[2]));
    }

    #[test]
    fn a1_bs_chars() {
        let g = a1();
        let e = g.identity();
        let m = bs_char::<BigInt>(&g, &e, &[1]).unwrap();
        assert_eq!(m, S::from_terms([(IVec::from_slice(&[-2]), L::one()), (IVec::from_slice(&[0]), lp(&[(-1, 1)]))]));
        let m = bs_char::<BigInt>(&g, &e, &[1, 0]).unwrap();
        let expect = S::from_terms([
            (IVec::from_slice(&[2]), L::one()),
            (IVec::from_slice(&[-2]), lp(&[(-1, 1)])),
            (IVec::from_slice(&[0]), lp(&[(0, 1), (-2, 1)])),
        ]);
        assert_eq!(m, expect);
        assert_eq!(bs_char::<BigInt>(&g, &e, &[]).unwrap(), S::basis(&[0]));
        let not_zero = g.translation(&[2]);
        assert!(matches!(bs_char::<BigInt>(&g, &not_zero, &[]), Err(Error::NotLengthZero(2))));
    }

    #[test]
    fn pairings() {
        let g = a1();
        let e = g.identity();
        assert_eq!(pairing(&S::basis(&[0]), &S::basis(&[0])), L::one());
        let vv = S::term(&[0], lp(&[(1, 1), (-1, 1)]));
        assert_eq!(pairing(&vv, &vv), lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(hom_rank::<BigInt>(&g, (&e, &[1]), (&e, &[1])).unwrap(), lp(&[(0, 1), (2, 1)]));
        assert_eq!(hom_rank::<BigInt>(&g, (&e, &[0]), (&e, &[0])).unwrap(), lp(&[(-2, 1), (0, 2), (2, 1)]));
        let omega1 = g.omega_of_weight(&[-1]);
        assert!(hom_rank::<BigInt>(&g, (&omega1, &[]), (&e, &[])).unwrap().is_zero());
    }

    #[test]
    fn bar_matches_hecke_bar() {
        let g = a1();
        let sph = Spherical::<BigInt>::new(g.clone());
        for n in -6..=6 {
            let wl = g.min_rep(&[n]);
            let via_hecke = project(&g, &bar_basis::<BigInt>(&g, &wl));
            assert_eq!(*sph.bar_basis(&[n]), via_hecke, "λ = {n}");
        }
        assert_eq!(sph.bar(&S::term(&[0], lp(&[(1, 1)]))), S::term(&[0], lp(&[(-1, 1)])));
        let m = bs_char::<BigInt>(&g, &g.identity(), &[1]).unwrap();
        assert_eq!(sph.bar(&m), m);
    }

    #[test]
    fn a1_canonical_basis() {
        let g = a1();
        let sph = Spherical::<BigInt>::new(g.clone());
        assert_eq!(*sph.canonical_basis(&[0]).unwrap(), S::basis(&[0]));
        assert_eq!(
            *sph.canonical_basis(&[-2]).unwrap(),
            S::from_terms([(IVec::from_slice(&[-2]), L::one()), (IVec::from_slice(&[0]), lp(&[(-1, 1)]))])
        );
        assert_eq!(
            *sph.canonical_basis(&[2]).unwrap(),
            S::from_terms([
                (IVec::from_slice(&[2]), L::one()),
                (IVec::from_slice(&[-2]), lp(&[(-1, 1)])),
                (IVec::from_slice(&[0]), lp(&[(-2, 1)])),
            ])
        );
    }

    #[test]
    fn a1_decompositions() {
        let g = a1();
        let sph = Spherical::<BigInt>::new(g.clone());
        let e = g.identity();
        let d = sph.decompose_bs(&e, &[1, 0]).unwrap();
        let expect: BTreeMap<IVec, L> =
            [(IVec::from_slice(&[2]), L::one()), (IVec::from_slice(&[0]), L::one())].into_iter().collect();
        assert_eq!(d, expect);
        let d = sph.decompose_bs(&e, &[]).unwrap();
        assert_eq!(d.len(), 1);
        let d = sph.decompose_bs(&e, &[1]).unwrap();
        assert_eq!(d.keys().collect::<Vec<_>>(), vec![&IVec::from_slice(&[-2])]);
    }
}
