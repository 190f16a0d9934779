//! Sparse multivariate polynomials over an exact field.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::scalar::Field;

pub type Mono = SmallVec<[u16; 4]>;

#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "x{v}")?,
                    _ => write!(f, "x{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

pub fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| u32::from(e)).sum()
}

/// Monomials of total degree `deg` in the first `used` of `nvars` variables.
pub fn monomials(nvars: usize, used: usize, deg: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur: Mono = smallvec::smallvec![0; nvars];
    fn rec(i: usize, used: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        if i + 1 == used {
            cur[i] = left as u16;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, used, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if used == 0 {
        if deg == 0 {
            out.push(cur);
        }
        return out;
    }
    rec(0, used, deg, &mut cur, &mut out);
    out
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(smallvec::smallvec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m: Mono = smallvec::smallvec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, F::one());
        p
    }

    pub fn monomial(m: Mono, c: F) -> Self {
        let mut p = Self::zero(m.len());
        p.add_term(m, c);
        p
    }

    /// `Σ coeffs[i] x_i`.
    pub fn linear(nvars: usize, coeffs: &[F]) -> Self {
        let mut p = Self::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m: Mono = smallvec::smallvec![0; nvars];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.len(), self.nvars);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Total degree in the variables, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(mono_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Replaces `x_i` by `images[i]`.
    pub fn substitute(&self, images: &[Poly<F>]) -> Self {
        let n = images.first().map_or(self.nvars, |p| p.nvars);
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![Poly::one(n), p.clone()]).collect();
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(n, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Drops every term involving `x_i`, i.e. sets `x_i = 0`.
    pub fn set_zero(&self, i: usize) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m[i] == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Exact division by `x_i`.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                return None;
            }
            let mut m2 = m.clone();
            m2[i] -= 1;
            out.add_term(m2, c.clone());
        }
        Some(out)
    }

    /// Exact division by a nonzero polynomial of degree one without
    /// constant term.
    pub fn div_linear(&self, l: &Self) -> Option<Self> {
        let z = (0..self.nvars).rev().find(|&i| {
            let mut m: Mono = smallvec::smallvec![0; self.nvars];
            m[i] = 1;
            l.terms.contains_key(&m)
        })?;
        let mut zm: Mono = smallvec::smallvec![0; self.nvars];
        zm[z] = 1;
        let lead = l.terms[&zm].clone();
        // Lex order with x_z most significant.
        let key = |m: &Mono| -> Mono {
            let mut k: Mono = SmallVec::with_capacity(m.len());
            k.push(m[z]);
            k.extend(m.iter().enumerate().filter(|(i, _)| *i != z).map(|(_, e)| *e));
            k
        };
        let mut rest = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((m, c)) = rest
            .terms
            .iter()
            .max_by_key(|(m, _)| key(m))
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if m[z] == 0 {
                return None;
            }
            let mut qm = m.clone();
            qm[z] -= 1;
            let qc = c / lead.clone();
            let t = Poly::monomial(qm, qc);
            rest = rest.sub(&t.mul(l));
            q = q.add(&t);
        }
        Some(q)
    }
}
