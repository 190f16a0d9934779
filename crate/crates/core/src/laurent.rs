//! Laurent polynomials in one variable `v` over an exact coefficient ring.
//!
//! Terms are kept as a sorted list of `(exponent, coefficient)` pairs with
//! no zero coefficients, so structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::scalar::Coeff;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<C> {
    terms: Vec<(i32, C)>,
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i32, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Laurent { terms: vec![(exp, c)] }
        }
    }

    /// `v^exp` with coefficient one.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, C::one())
    }

    /// `v - v^-1`, the structure constant of the quadratic relation.
    pub fn v_minus_v_inv() -> Self {
        Self::from_terms([(1, C::one()), (-1, -C::one())])
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let mut v: Vec<(i32, C)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, C)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Laurent { terms: out }
    }

    pub fn from_i64_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, C::from_int(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i32) -> C {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// The involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiplication by `v - v^-1`.
    pub fn times_v_minus_v_inv(&self) -> Self {
        self.shift(1) - self.shift(-1)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())).collect(),
        }
    }

    /// The unique bar-invariant `g` with `self - g` supported in strictly
    /// negative degrees.
    pub fn sym_complete(&self) -> Self {
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            if *e > 0 {
                out.push((*e, c.clone()));
                out.push((-*e, c.clone()));
            } else if *e == 0 {
                out.push((0, c.clone()));
            }
        }
        Self::from_terms(out)
    }

    /// The substitution `v -> v^k`.
    pub fn substitute(&self, k: i32) -> Self {
        assert!(k != 0, "substitution exponent must be nonzero");
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> C {
        self.terms.iter().fold(C::zero(), |acc, (_, c)| acc + c.clone())
    }

    /// Every exponent is strictly negative, i.e. the polynomial lies in
    /// `v^-1 Z[v^-1]`.
    pub fn in_neg_part(&self) -> bool {
        self.terms.iter().all(|t| t.0 < 0)
    }

    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_positive())
    }

    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    fn add_scaled(&mut self, other: &Self, sign: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if sign { other.clone() } else { -other.clone() };
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut j = 0;
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        while let Some((ea, _)) = a.peek() {
            if j >= other.terms.len() {
                break;
            }
            let (eb, cb) = &other.terms[j];
            if ea < eb {
                out.push(a.next().unwrap());
            } else if ea > eb {
                let c = if sign { cb.clone() } else { -cb.clone() };
                out.push((*eb, c));
                j += 1;
            } else {
                let (e, mut c) = a.next().unwrap();
                if sign {
                    c += cb;
                } else {
                    c -= cb;
                }
                if !c.is_zero() {
                    out.push((e, c));
                }
                j += 1;
            }
        }
        out.extend(a);
        for (eb, cb) in &other.terms[j..] {
            let c = if sign { cb.clone() } else { -cb.clone() };
            out.push((*eb, c));
        }
        self.terms = out;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.terms.last().unwrap().0 + other.terms.last().unwrap().0;
        let mut acc: Vec<C> = vec![C::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut acc[(ea + eb - lo) as usize];
                *slot += &(ca.clone() * cb.clone());
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i32, c))
            .collect();
        Laurent { terms }
    }
}

impl<C: Coeff> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for Laurent<C> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        self.add_scaled(rhs, true);
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, rhs: &Laurent<C>) {
        self.add_scaled(rhs, false);
    }
}

impl<C: Coeff> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self.add_scaled(&rhs, true);
        self
    }
}

impl<C: Coeff> Add<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, true);
        out
    }
}

impl<C: Coeff> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self.add_scaled(&rhs, false);
        self
    }
}

impl<C: Coeff> Sub<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, false);
        out
    }
}

impl<C: Coeff> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Coeff> Mul<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    /// Lowest exponent first, e.g. `v^-2 + 2 + v^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "v")?,
                1 => write!(f, "{mag}v")?,
                _ if unit => write!(f, "v^{e}")?,
                _ => write!(f, "{mag}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = Laurent<BigInt>;

    fn p(t: &[(i32, i64)]) -> L {
        L::from_i64_terms(t)
    }

    #[test]
    fn square_of_quantum_two() {
        let q2 = p(&[(1, 1), (-1, 1)]);
        assert_eq!(&q2 * &q2, p(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(&q2 * &L::one(), q2);
        assert!((&p(&[(1, 1), (-1, -1)]) * &L::zero()).is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(L::v_pow(1).bar(), L::v_pow(-1));
        let sym = p(&[(2, 1), (0, 2), (-2, 1)]);
        assert_eq!(sym.bar(), sym);
        let f = p(&[(3, 2), (-1, -5), (0, 7)]);
        assert_eq!(f.bar().bar(), f);
    }

    #[test]
    fn sym_complete_examples() {
        assert_eq!(p(&[(0, 1), (-2, 1)]).sym_complete(), L::one());
        assert!(L::v_pow(-1).sym_complete().is_zero());
        assert_eq!(L::v_pow(3).sym_complete(), p(&[(3, 1), (-3, 1)]));
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(L::v_pow(1).substitute(-2), L::v_pow(-2));
        assert_eq!(L::one().substitute(-2), L::one());
        assert_eq!(p(&[(1, 1), (2, 1)]).substitute(-2), p(&[(-2, 1), (-4, 1)]));
    }

    #[test]
    fn cancellation_leaves_canonical_form() {
        let f = p(&[(1, 1), (-1, -1)]);
        let g = &f - &f;
        assert!(g.is_zero());
        assert_eq!(g, L::zero());
        assert_eq!(p(&[(1, 1), (1, -1), (0, 0)]), L::zero());
    }

    #[test]
    fn display_is_lowest_exponent_first() {
        assert_eq!(p(&[(2, 1), (0, 2), (-2, 1)]).to_string(), "v^-2 + 2 + v^2");
        assert_eq!(p(&[(1, 1), (-1, -1)]).to_string(), "-v^-1 + v");
        assert_eq!(p(&[(1, 3)]).to_string(), "3v");
        assert_eq!(L::zero().to_string(), "0");
    }

    #[test]
    fn small_integer_coefficients_agree() {
        let a = Laurent::<i64>::from_i64_terms(&[(1, 2), (-3, 1)]);
        let b = Laurent::<i64>::from_i64_terms(&[(0, -1), (2, 4)]);
        let big = (&a * &b).map_coeffs(|c| BigInt::from(*c));
        let expected = &p(&[(1, 2), (-3, 1)]) * &p(&[(0, -1), (2, 4)]);
        assert_eq!(big, expected);
    }
}
