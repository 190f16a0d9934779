//! The extended affine Weyl group `W_aff = W ⋉ X`.
//!
//! Elements are pairs `w·t_λ` with the product
//! `(w1 t_λ1)(w2 t_λ2) = (w1 w2) t_{w2⁻¹ λ1 + λ2}` and level-one action
//! `(w t_λ)·ξ = w(ξ + λ)`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, pair, zero_vec, IVec};
use crate::root_datum::RootDatum;
use crate::weyl::WeylElt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineElt {
    pub w: WeylElt,
    pub lambda: IVec,
}

impl fmt::Debug for AffineElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·t{:?}", self.w.matrix(), self.lambda.as_slice())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum ReflectionKind {
    /// Simple root index, zero-based.
    Finite(usize),
    /// Irreducible component index.
    Affine(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleReflection {
    pub kind: ReflectionKind,
    pub elt: AffineElt,
}

/// `x = omega · s_{word[0]} ⋯ s_{word[r-1]}`, with word entries indexing
/// [`AffineWeyl::simples`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub omega: AffineElt,
    pub word: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LengthCheck {
    pub checked: usize,
    pub omegas: usize,
    pub mismatches: Vec<String>,
}

pub struct AffineWeyl {
    datum: Arc<RootDatum>,
    weyl: Vec<WeylElt>,
    simples: Vec<SimpleReflection>,
    min_reps: RwLock<HashMap<IVec, AffineElt>>,
    words: RwLock<HashMap<AffineElt, Arc<ReducedWord>>>,
}

impl fmt::Debug for AffineWeyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineWeyl({})", self.datum.name())
    }
}

impl AffineWeyl {
    pub fn new(datum: impl Into<Arc<RootDatum>>) -> Self {
        let datum = datum.into();
        let weyl = datum.weyl_enumerate();
        let mut simples: Vec<SimpleReflection> = (0..datum.semisimple_rank())
            .map(|i| SimpleReflection {
                kind: ReflectionKind::Finite(i),
                elt: AffineElt { w: datum.weyl_simple(i), lambda: zero_vec(datum.rank()) },
            })
            .collect();
        for c in 0..datum.components().len() {
            let beta = datum.highest_coroot_root(c);
            let k = datum
                .positive_roots()
                .iter()
                .position(|r| r == beta)
                .expect("highest root is a positive root");
            simples.push(SimpleReflection {
                kind: ReflectionKind::Affine(c),
                elt: AffineElt { w: datum.weyl_reflection(k), lambda: lattice::neg(&beta.root) },
            });
        }
        AffineWeyl {
            datum,
            weyl,
            simples,
            min_reps: RwLock::new(HashMap::new()),
            words: RwLock::new(HashMap::new()),
        }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::preset(name)?))
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn weyl(&self) -> &[WeylElt] {
        &self.weyl
    }

    pub fn simples(&self) -> &[SimpleReflection] {
        &self.simples
    }

    pub fn simple_index(&self, kind: ReflectionKind) -> Option<usize> {
        self.simples.iter().position(|s| s.kind == kind)
    }

    pub fn identity(&self) -> AffineElt {
        AffineElt { w: self.datum.weyl_identity(), lambda: zero_vec(self.datum.rank()) }
    }

    pub fn translation(&self, lambda: &[i64]) -> AffineElt {
        AffineElt { w: self.datum.weyl_identity(), lambda: lambda.iter().copied().collect() }
    }

    pub fn elt(&self, w: WeylElt, lambda: &[i64]) -> AffineElt {
        AffineElt { w, lambda: lambda.iter().copied().collect() }
    }

    pub fn mul(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        AffineElt {
            w: self.datum.weyl_mul(&x.w, &y.w),
            lambda: lattice::add(&y.w.apply_inv(&x.lambda), &y.lambda),
        }
    }

    pub fn inverse(&self, x: &AffineElt) -> AffineElt {
        AffineElt { w: x.w.inverse(), lambda: lattice::neg(&x.w.apply(&x.lambda)) }
    }

    pub fn act(&self, x: &AffineElt, xi: &[i64]) -> IVec {
        x.w.apply(&lattice::add(xi, &x.lambda))
    }

    /// `ℓ(w t_λ) = Σ_{α>0, wα>0} |⟨λ,α∨⟩| + Σ_{α>0, wα<0} |1 + ⟨λ,α∨⟩|`.
    pub fn length(&self, x: &AffineElt) -> u32 {
        let c = x.w.matrix().apply_transpose(self.datum.two_rho_check());
        let mut total = 0i64;
        for r in self.datum.positive_roots() {
            let n = pair(&x.lambda, &r.coroot);
            total += if pair(&r.root, &c) > 0 { n.abs() } else { (1 + n).abs() };
        }
        total as u32
    }

    pub fn mul_simple(&self, x: &AffineElt, k: usize) -> AffineElt {
        self.mul(x, &self.simples[k].elt)
    }

    pub fn simple_mul(&self, k: usize, x: &AffineElt) -> AffineElt {
        self.mul(&self.simples[k].elt, x)
    }

    pub fn reduced_word(&self, x: &AffineElt) -> Arc<ReducedWord> {
        if let Some(r) = self.words.read().unwrap().get(x) {
            return r.clone();
        }
        let word = Arc::new(self.compute_reduced_word(x));
        self.words.write().unwrap().insert(x.clone(), word.clone());
        word
    }

    fn compute_reduced_word(&self, x: &AffineElt) -> ReducedWord {
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len as usize);
        while len > 0 {
            let (k, next, next_len) = (0..self.simples.len())
                .find_map(|k| {
                    let y = self.mul_simple(&cur, k);
                    let l = self.length(&y);
                    (l < len).then_some((k, y, l))
                })
                .unwrap_or_else(|| panic!("no descent at positive length for {x:?}"));
            debug_assert_eq!(next_len + 1, len);
            word.push(k);
            cur = next;
            len = next_len;
        }
        word.reverse();
        ReducedWord { omega: cur, word }
    }

    pub fn omega_part(&self, x: &AffineElt) -> AffineElt {
        self.reduced_word(x).omega.clone()
    }

    pub fn from_word(&self, omega: &AffineElt, word: &[usize]) -> AffineElt {
        word.iter().fold(omega.clone(), |acc, &k| self.mul_simple(&acc, k))
    }

    /// The shortest element `w_λ` of the coset `W t_λ`.
    pub fn min_rep(&self, lambda: &[i64]) -> AffineElt {
        if let Some(x) = self.min_reps.read().unwrap().get(lambda) {
            return x.clone();
        }
        let mut best: Option<(u32, AffineElt)> = None;
        let mut ties = 0;
        for u in &self.weyl {
            let x = self.elt(u.clone(), lambda);
            let l = self.length(&x);
            match &best {
                Some((b, _)) if l > *b => {}
                Some((b, _)) if l == *b => ties += 1,
                _ => {
                    best = Some((l, x));
                    ties = 0;
                }
            }
        }
        assert_eq!(ties, 0, "minimal coset representative of {lambda:?} is not unique");
        let x = best.expect("Weyl group is nonempty").1;
        self.min_reps.write().unwrap().insert(lambda.iter().copied().collect(), x.clone());
        x
    }

    pub fn min_rep_length(&self, lambda: &[i64]) -> u32 {
        self.length(&self.min_rep(lambda))
    }

    /// `x = u · w_λ` with lengths adding.
    pub fn coset_decompose(&self, x: &AffineElt) -> (WeylElt, IVec) {
        let m = self.min_rep(&x.lambda);
        let u = self.datum.weyl_mul(&x.w, &m.w.inverse());
        (u, x.lambda.clone())
    }

    pub fn check_length_zero(&self, omega: &AffineElt) -> Result<()> {
        match self.length(omega) {
            0 => Ok(()),
            l => Err(Error::NotLengthZero(l)),
        }
    }

    /// The length-zero element `ω_λ := omega_part(t_λ)`.
    pub fn omega_of_weight(&self, lambda: &[i64]) -> AffineElt {
        self.omega_part(&self.translation(lambda))
    }

    pub fn parse_reflection(&self, token: &str) -> Result<usize> {
        let t = token.trim();
        let bad = || Error::UnknownReflection(t.to_string());
        let kind = if t == "s" && self.datum.semisimple_rank() == 1 {
            ReflectionKind::Finite(0)
        } else if t == "s0" {
            ReflectionKind::Affine(0)
        } else if let Some(c) = t.strip_prefix("s0:") {
            ReflectionKind::Affine(c.parse().map_err(|_| bad())?)
        } else if let Some(i) = t.strip_prefix('s') {
            let i: usize = i.parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            ReflectionKind::Finite(i - 1)
        } else {
            return Err(bad());
        };
        self.simple_index(kind).ok_or_else(bad)
    }

    /// Parses `s1,s2,s0` or `s0:1`; the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        text.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty() && *t != "()" && *t != "e")
            .map(|t| self.parse_reflection(t))
            .collect()
    }

    pub fn reflection_label(&self, k: usize) -> String {
        match self.simples[k].kind {
            ReflectionKind::Finite(i) if self.datum.semisimple_rank() == 1 => {
                debug_assert_eq!(i, 0);
                "s".to_string()
            }
            ReflectionKind::Finite(i) => format!("s{}", i + 1),
            ReflectionKind::Affine(0) if self.datum.components().len() == 1 => "s0".to_string(),
            ReflectionKind::Affine(c) => format!("s0:{c}"),
        }
    }

    pub fn word_label(&self, word: &[usize]) -> String {
        word.iter().map(|&k| self.reflection_label(k)).collect::<Vec<_>>().join(",")
    }

    pub fn elt_label(&self, x: &AffineElt) -> String {
        let fin = self.datum.weyl_word(&x.w);
        let w = if fin.is_empty() {
            "e".to_string()
        } else {
            fin.iter()
                .map(|&i| {
                    self.reflection_label(self.simple_index(ReflectionKind::Finite(i)).unwrap())
                })
                .collect::<Vec<_>>()
                .join("")
        };
        let lam: Vec<String> = x.lambda.iter().map(|c| c.to_string()).collect();
        format!("{w}·t({})", lam.join(","))
    }

    /// Compares the length formula with breadth-first word length. Every
    /// element of length at most `max_len` is written `ω·y` with `ℓ(ω) = 0`
    /// and `y` in the Coxeter ball of radius `max_len`; both the lengths and
    /// the ball sizes must agree.
    pub fn check_lengths_bfs(&self, max_len: u32) -> Result<LengthCheck> {
        let d = &*self.datum;
        let fw = d
            .fundamental_weights()
            .filter(|fw| fw.len() == d.rank())
            .ok_or_else(|| Error::Unsupported("length enumeration needs a semisimple datum".into()))?
            .to_vec();
        let bound = i64::from(max_len) + d.positive_roots().len() as i64;

        let mut ball: HashMap<AffineElt, u32> = HashMap::new();
        let mut queue = VecDeque::new();
        ball.insert(self.identity(), 0);
        queue.push_back(self.identity());
        while let Some(y) = queue.pop_front() {
            let dy = ball[&y];
            if dy == max_len {
                continue;
            }
            for k in 0..self.simples.len() {
                let z = self.mul_simple(&y, k);
                if !ball.contains_key(&z) {
                    ball.insert(z.clone(), dy + 1);
                    queue.push_back(z);
                }
            }
        }

        let mut short: HashSet<AffineElt> = HashSet::new();
        let mut omegas = Vec::new();
        let n = d.rank();
        let mut coords = vec![-bound; n];
        loop {
            let mut lambda = zero_vec(n);
            for (i, c) in coords.iter().enumerate() {
                lambda = lattice::add(&lambda, &lattice::scale(&fw[i], *c));
            }
            for u in &self.weyl {
                let x = self.elt(u.clone(), &lambda);
                let l = self.length(&x);
                if l <= max_len {
                    if l == 0 {
                        omegas.push(x.clone());
                    }
                    short.insert(x);
                }
            }
            let mut k = 0;
            while k < n && coords[k] == bound {
                coords[k] = -bound;
                k += 1;
            }
            if k == n {
                break;
            }
            coords[k] += 1;
        }

        let mut report = LengthCheck { omegas: omegas.len(), ..Default::default() };
        for omega in &omegas {
            for (y, dy) in &ball {
                let x = self.mul(omega, y);
                report.checked += 1;
                let l = self.length(&x);
                if l != *dy {
                    report.mismatches.push(format!(
                        "{}: formula {l}, word length {dy}",
                        self.elt_label(&x)
                    ));
                } else if !short.contains(&x) {
                    report.mismatches.push(format!("{} missing from enumeration", self.elt_label(&x)));
                }
            }
        }
        if short.len() != omegas.len() * ball.len() {
            report.mismatches.push(format!(
                "{} elements of length <= {max_len}, but {} Ω-translates of the Coxeter ball",
                short.len(),
                omegas.len() * ball.len()
            ));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    fn a1() -> AffineWeyl {
        AffineWeyl::preset("A1").unwrap()
    }

    #[test]
    fn a1_lengths() {
        let g = a1();
        let s = g.datum().weyl_simple(0);
        let e = g.datum().weyl_identity();
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&g.elt(e.clone(), &[1])), 1);
        assert_eq!(g.length(&g.elt(s.clone(), &[-1])), 0);
        assert_eq!(g.length(&g.elt(s.clone(), &[1])), 2);
        for n in -5i64..=5 {
            assert_eq!(g.length(&g.elt(e.clone(), &[n])), n.unsigned_abs() as u32);
            assert_eq!(g.length(&g.elt(s.clone(), &[n])), (1 + n).unsigned_abs() as u32);
        }
    }

    #[test]
    fn a1_simples() {
        let g = a1();
        assert_eq!(g.simples().len(), 2);
        let s0 = &g.simples()[1];
        assert_eq!(s0.kind, ReflectionKind::Affine(0));
        assert_eq!(s0.elt, g.elt(g.datum().weyl_simple(0), &[-2]));
        assert_eq!(g.mul(&s0.elt, &g.simples()[0].elt), g.translation(&[2]));
    }

    #[test]
    fn simples_are_involutions_of_length_one() {
        for name in ["A1", "A2", "B2", "G2", "GL2", "GL3", "A1xA2"] {
            let g = AffineWeyl::preset(name).unwrap();
            assert_eq!(g.simples().len(), g.datum().semisimple_rank() + g.datum().components().len());
            for s in g.simples() {
                assert_eq!(g.length(&s.elt), 1, "{name} {:?}", s.kind);
                assert_eq!(g.mul(&s.elt, &s.elt), g.identity());
            }
        }
    }

    #[test]
    fn a2_affine_simple_uses_highest_root() {
        let g = AffineWeyl::preset("A2").unwrap();
        let s0 = &g.simples()[2].elt;
        assert_eq!(s0.lambda, ivec(&[-1, -1]));
    }

    #[test]
    fn a1_reduced_words() {
        let g = a1();
        let r = g.reduced_word(&g.translation(&[2]));
        assert_eq!(r.omega, g.identity());
        assert_eq!(r.word, vec![1, 0]);
        let omega1 = g.elt(g.datum().weyl_simple(0), &[-1]);
        let r = g.reduced_word(&omega1);
        assert_eq!(r.omega, omega1);
        assert!(r.word.is_empty());
        assert!(g.reduced_word(&g.identity()).word.is_empty());
    }

    #[test]
    fn a1_min_reps_and_cosets() {
        let g = a1();
        let s = g.datum().weyl_simple(0);
        assert_eq!(g.min_rep(&[1]), g.translation(&[1]));
        assert_eq!(g.min_rep(&[-1]), g.elt(s.clone(), &[-1]));
        assert_eq!(g.min_rep(&[0]), g.identity());
        let (u, lam) = g.coset_decompose(&g.translation(&[2]));
        assert!(u.is_identity());
        assert_eq!(lam, ivec(&[2]));
        let x = g.elt(s.clone(), &[1]);
        let (u, lam) = g.coset_decompose(&x);
        assert_eq!(u, s);
        assert_eq!(u.length() + g.min_rep_length(&lam), g.length(&x));
    }

    #[test]
    fn omega_parts() {
        let g = a1();
        let omega1 = g.elt(g.datum().weyl_simple(0), &[-1]);
        assert_eq!(g.omega_part(&omega1), omega1);
        assert_eq!(g.omega_part(&g.translation(&[2])), g.identity());
        assert_eq!(g.omega_part(&g.identity()), g.identity());
        assert_eq!(g.omega_of_weight(&[1]), omega1);
    }

    #[test]
    fn word_parsing() {
        let g = a1();
        assert_eq!(g.parse_word("s0,s").unwrap(), vec![1, 0]);
        assert_eq!(g.parse_word("s1, s0:0").unwrap(), vec![0, 1]);
        assert!(g.parse_word("").unwrap().is_empty());
        assert!(g.parse_word("s2").is_err());
        assert!(g.parse_word("t").is_err());
        assert_eq!(g.word_label(&[1, 0]), "s0,s");
        let p = AffineWeyl::preset("A1xA1").unwrap();
        assert_eq!(p.parse_word("s0:1,s2").unwrap(), vec![3, 1]);
        assert_eq!(p.word_label(&[2, 3]), "s0:0,s0:1");
    }

    #[test]
    fn length_bfs_a1_a2() {
        for (name, l) in [("A1", 6), ("A2", 4)] {
            let g = AffineWeyl::preset(name).unwrap();
            let rep = g.check_lengths_bfs(l).unwrap();
            assert!(rep.mismatches.is_empty(), "{:?}", rep.mismatches);
            assert!(rep.checked > 0);
        }
    }
}
