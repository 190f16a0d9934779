//! Lusztig's q-analogues of weight multiplicity, a Freudenthal oracle for
//! their value at `q = 1`, and the characteristic-zero stalk identity
//! relating them to the spherical canonical basis.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::affine_weyl::AffineWeyl;
use crate::error::{Error, Result};
use crate::lattice::{self, pair, IVec};
use crate::laurent::Laurent;
use crate::root_datum::RootDatum;
use crate::scalar::Coeff;
use crate::spherical::Spherical;

/// `Σ q^{Σ n_α}` over ways of writing `beta = Σ n_α α` with `α > 0`.
pub fn kostant_q<C: Coeff>(d: &RootDatum, beta: &[i64]) -> Laurent<C> {
    let Some(coords) = d.root_lattice_coords(beta) else {
        return Laurent::zero();
    };
    if coords.iter().any(|&c| c < 0) {
        return Laurent::zero();
    }
    let roots: Vec<IVec> = d.positive_roots().iter().map(|r| r.coords.clone()).collect();
    let mut memo = HashMap::new();
    kostant_rec(&roots, 0, coords, &mut memo)
}

fn kostant_rec<C: Coeff>(
    roots: &[IVec],
    i: usize,
    rest: IVec,
    memo: &mut HashMap<(usize, IVec), Laurent<C>>,
) -> Laurent<C> {
    if rest.iter().all(|&c| c == 0) {
        return Laurent::one();
    }
    if i == roots.len() {
        return Laurent::zero();
    }
    if let Some(p) = memo.get(&(i, rest.clone())) {
        return p.clone();
    }
    let mut out = Laurent::zero();
    let mut cur = rest.clone();
    let mut n = 0;
    loop {
        out += &kostant_rec(roots, i + 1, cur.clone(), memo).shift(n);
        cur = lattice::sub(&cur, &roots[i]);
        if cur.iter().any(|&c| c < 0) {
            break;
        }
        n += 1;
    }
    memo.insert((i, rest), out.clone());
    out
}

/// `M^χ_η(q) = Σ_w (-1)^{ℓ(w)} P_q(w(η+ρ) - (χ+ρ))`.
pub fn lusztig_q<C: Coeff>(d: &RootDatum, chi: &[i64], eta: &[i64]) -> Result<Laurent<C>> {
    d.check_weight(chi)?;
    d.check_weight(eta)?;
    if !d.is_dominant(eta) {
        return Err(Error::NotDominant(eta.to_vec()));
    }
    let two_rho = d.two_rho();
    let shifted = lattice::add(&lattice::scale(eta, 2), two_rho);
    let target = lattice::add(&lattice::scale(chi, 2), two_rho);
    let mut out = Laurent::zero();
    for w in d.weyl_enumerate() {
        let diff = lattice::sub(&w.apply(&shifted), &target);
        if diff.iter().any(|c| c % 2 != 0) {
            return Err(Error::NonIntegralHalving(diff.to_vec()));
        }
        let beta: IVec = diff.iter().map(|c| c / 2).collect();
        let p = kostant_q::<C>(d, &beta);
        if w.length() % 2 == 0 {
            out += &p;
        } else {
            out -= &p;
        }
    }
    Ok(out)
}

/// `(x, y) = Σ_{α>0} ⟨x,α∨⟩⟨y,α∨⟩`, a `W`-invariant form.
fn form(d: &RootDatum, x: &[i64], y: &[i64]) -> i64 {
    d.positive_roots().iter().map(|r| pair(x, &r.coroot) * pair(y, &r.coroot)).sum()
}

fn below(d: &RootDatum, eta: &[i64], mu: &[i64]) -> Option<i64> {
    let c = d.root_lattice_coords(&lattice::sub(eta, mu))?;
    c.iter().all(|&x| x >= 0).then(|| c.iter().sum())
}

/// Weights of the irreducible representation of highest weight `eta`:
/// those whose dominant conjugate lies below `eta`.
pub fn weight_saturation(d: &RootDatum, eta: &[i64]) -> Result<Vec<IVec>> {
    if !d.is_dominant(eta) {
        return Err(Error::NotDominant(eta.to_vec()));
    }
    let start: IVec = eta.iter().copied().collect();
    let mut seen: HashSet<IVec> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        for r in d.positive_roots() {
            for next in [lattice::sub(&mu, &r.root), lattice::add(&mu, &r.root)] {
                if seen.contains(&next) {
                    continue;
                }
                if below(d, eta, &d.dominant_conjugate(&next)).is_some() {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<IVec> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// All weight multiplicities of `V(eta)` by Freudenthal's recursion.
pub fn freudenthal_all(d: &RootDatum, eta: &[i64]) -> Result<BTreeMap<IVec, i64>> {
    let weights = weight_saturation(d, eta)?;
    let mut ordered: Vec<(i64, IVec)> = weights
        .into_iter()
        .map(|mu| (below(d, eta, &mu).unwrap_or(i64::MAX), mu))
        .collect();
    ordered.sort();
    let present: HashSet<IVec> = ordered.iter().map(|(_, m)| m.clone()).collect();
    let two_rho = d.two_rho();
    let top = lattice::add(&lattice::scale(eta, 2), two_rho);
    let top_norm = form(d, &top, &top);
    let mut mult: BTreeMap<IVec, i64> = BTreeMap::new();
    for (_, mu) in ordered {
        if mu.as_slice() == eta {
            mult.insert(mu, 1);
            continue;
        }
        // Everything is scaled by 4 to keep ρ integral.
        let m2 = lattice::add(&lattice::scale(&mu, 2), two_rho);
        let denom = top_norm - form(d, &m2, &m2);
        let mut num = 0i64;
        for r in d.positive_roots() {
            let mut k = 1;
            loop {
                let up = lattice::add(&mu, &lattice::scale(&r.root, k));
                if !present.contains(&up) {
                    break;
                }
                let m = mult.get(&up).copied().unwrap_or(0);
                num += 2 * m * 4 * form(d, &up, &r.root);
                k += 1;
            }
        }
        if denom == 0 || num % denom != 0 {
            return Err(Error::Internal(format!("Freudenthal recursion failed at {:?}", mu.as_slice())));
        }
        mult.insert(mu, num / denom);
    }
    Ok(mult)
}

pub fn freudenthal_mult(d: &RootDatum, eta: &[i64], chi: &[i64]) -> Result<i64> {
    Ok(freudenthal_all(d, eta)?.get(chi).copied().unwrap_or(0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KatoRow<C: Coeff> {
    pub lambda: IVec,
    pub mu: IVec,
    pub lhs: Laurent<C>,
    pub rhs: Laurent<C>,
    pub pass: bool,
}

/// Compares `v^{ℓ(w_{-w0 μ}) - ℓ(w_{-μ})}` times the coefficient of
/// `m_{-μ}` in `b_{-w0 λ}` with `M^{-w0 μ}_{-w0 λ}(v⁻²)`.
pub fn kato_check<C: Coeff>(sph: &Spherical<C>, lambda: &[i64], mu: &[i64]) -> Result<KatoRow<C>> {
    let g = sph.group();
    let d = g.datum();
    d.check_weight(lambda)?;
    d.check_weight(mu)?;
    for x in [lambda, mu] {
        if !d.is_dominant(x) {
            return Err(Error::NotDominant(x.to_vec()));
        }
    }
    let w0 = d.w0();
    let neg_w0_lambda = lattice::neg(&w0.apply(lambda));
    let neg_w0_mu = lattice::neg(&w0.apply(mu));
    let neg_mu = lattice::neg(mu);
    let b = sph.canonical_basis(&neg_w0_lambda)?;
    let shift = g.min_rep_length(&neg_w0_mu) as i32 - g.min_rep_length(&neg_mu) as i32;
    let lhs = b.coeff(&neg_mu).shift(shift);
    let rhs = lusztig_q::<C>(d, &neg_w0_mu, &neg_w0_lambda)?.substitute(-2);
    Ok(KatoRow {
        lambda: lambda.iter().copied().collect(),
        mu: mu.iter().copied().collect(),
        pass: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Weights in the coordinate box `|x_i| <= bound`.
pub fn weights_in_box(d: &RootDatum, bound: i64) -> Vec<IVec> {
    crate::hecke::weight_box(d.rank(), bound)
}

/// Dominant `λ` with `ℓ(w_{-λ}) <= max_len`, found in a coordinate box
/// large enough for simply connected data.
pub fn kato_grid_weights(g: &AffineWeyl, max_len: u32) -> Vec<IVec> {
    let d = g.datum();
    let bound = i64::from(max_len) + d.positive_roots().len() as i64;
    let mut out: Vec<IVec> = weights_in_box(d, bound)
        .into_iter()
        .filter(|l| d.is_dominant(l) && g.min_rep_length(&lattice::neg(l)) <= max_len)
        .collect();
    out.sort_by_key(|l| (g.min_rep_length(&lattice::neg(l)), l.clone()));
    out
}

pub fn kato_grid<C: Coeff>(sph: &Spherical<C>, max_len: u32) -> Result<Vec<KatoRow<C>>> {
    use rayon::prelude::*;
    let ws = kato_grid_weights(sph.group(), max_len);
    // Warm the canonical-basis cache in order of length so that parallel
    // workers mostly read.
    for l in &ws {
        let neg_w0 = lattice::neg(&sph.group().datum().w0().apply(l));
        sph.canonical_basis(&neg_w0)?;
    }
    let pairs: Vec<(&IVec, &IVec)> = ws.iter().flat_map(|l| ws.iter().map(move |m| (l, m))).collect();
    pairs.par_iter().map(|(l, m)| kato_check(sph, l, m)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QOneRow {
    pub eta: IVec,
    pub chi: IVec,
    pub lusztig_at_one: i64,
    pub freudenthal: i64,
    pub pass: bool,
}

/// `M^χ_η(1) = dim V(η)_χ` for every weight `χ` of `V(η)` and every
/// dominant `η` in the coordinate box.
pub fn q_one_grid(d: &RootDatum, bound: i64) -> Result<Vec<QOneRow>> {
    use rayon::prelude::*;
    let etas: Vec<IVec> = weights_in_box(d, bound)
        .into_iter()
        .filter(|l| l.iter().all(|&c| c >= 0) && d.is_dominant(l))
        .collect();
    let per_eta: Vec<Result<Vec<QOneRow>>> = etas
        .par_iter()
        .map(|eta| {
            let mults = freudenthal_all(d, eta)?;
            let mut rows = Vec::new();
            for (chi, m) in mults {
                let q = lusztig_q::<num_bigint::BigInt>(d, &chi, eta)?.eval_one();
                let q = num_traits::ToPrimitive::to_i64(&q).unwrap_or(i64::MIN);
                rows.push(QOneRow { eta: eta.clone(), chi, lusztig_at_one: q, freudenthal: m, pass: q == m });
            }
            Ok(rows)
        })
        .collect();
    let mut out = Vec::new();
    for r in per_eta {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use std::sync::Arc;

    type L = Laurent<BigInt>;

    fn lp(t: &[(i32, i64)]) -> L {
        L::from_i64_terms(t)
    }

    #[test]
    fn kostant_examples() {
        let a1 = RootDatum::preset("A1").unwrap();
        assert_eq!(kostant_q::<BigInt>(&a1, &[0]), L::one());
        assert_eq!(kostant_q::<BigInt>(&a1, &[2]), lp(&[(1, 1)]));
        assert!(kostant_q::<BigInt>(&a1, &[-2]).is_zero());
        assert!(kostant_q::<BigInt>(&a1, &[1]).is_zero());
        let a2 = RootDatum::preset("A2").unwrap();
        assert_eq!(kostant_q::<BigInt>(&a2, &[1, 1]), lp(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn lusztig_examples() {
        let a1 = RootDatum::preset("A1").unwrap();
        assert_eq!(lusztig_q::<BigInt>(&a1, &[2], &[2]).unwrap(), L::one());
        assert_eq!(lusztig_q::<BigInt>(&a1, &[0], &[2]).unwrap(), lp(&[(1, 1)]));
        let a2 = RootDatum::preset("A2").unwrap();
        assert_eq!(lusztig_q::<BigInt>(&a2, &[0, 0], &[1, 1]).unwrap(), lp(&[(1, 1), (2, 1)]));
        assert!(matches!(lusztig_q::<BigInt>(&a1, &[0], &[-2]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn freudenthal_examples() {
        let a1 = RootDatum::preset("A1").unwrap();
        assert_eq!(freudenthal_mult(&a1, &[2], &[2]).unwrap(), 1);
        assert_eq!(freudenthal_mult(&a1, &[2], &[0]).unwrap(), 1);
        let a2 = RootDatum::preset("A2").unwrap();
        assert_eq!(freudenthal_mult(&a2, &[1, 1], &[0, 0]).unwrap(), 2);
        let total: i64 = freudenthal_all(&a2, &[2, 0]).unwrap().values().sum();
        assert_eq!(total, 6);
        let g2 = RootDatum::preset("G2").unwrap();
        // The 7- and 14-dimensional representations.
        let dims: Vec<i64> = [[1, 0], [0, 1]]
            .iter()
            .map(|e| freudenthal_all(&g2, e).unwrap().values().sum())
            .collect();
        assert!(dims.contains(&7) && dims.contains(&14));
    }

    #[test]
    fn kato_a1_examples() {
        let g = Arc::new(AffineWeyl::preset("A1").unwrap());
        let sph = Spherical::<BigInt>::new(g);
        let r = kato_check(&sph, &[2], &[0]).unwrap();
        assert_eq!(r.lhs, lp(&[(-2, 1)]));
        assert!(r.pass);
        let r = kato_check(&sph, &[2], &[2]).unwrap();
        assert_eq!(r.lhs, L::one());
        assert!(r.pass);
        let r = kato_check(&sph, &[1], &[1]).unwrap();
        assert!(r.pass && r.lhs == L::one());
    }
}
