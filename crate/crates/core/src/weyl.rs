//! The finite Weyl group, with elements stored as matrices on `X`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::lattice::{pair, IMat, IVec};
use crate::root_datum::RootDatum;

#[derive(Clone)]
pub struct WeylElt {
    mat: IMat,
    inv: IMat,
    len: u32,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len.cmp(&other.len).then_with(|| self.mat.cmp(&other.mat))
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt({:?}, len {})", self.mat, self.len)
    }
}

impl WeylElt {
    pub fn matrix(&self) -> &IMat {
        &self.mat
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt { mat: self.inv.clone(), inv: self.mat.clone(), len: self.len }
    }

    /// `w(lambda)`.
    pub fn apply(&self, lambda: &[i64]) -> IVec {
        self.mat.apply(lambda)
    }

    /// `w^{-1}(lambda)`.
    pub fn apply_inv(&self, lambda: &[i64]) -> IVec {
        self.inv.apply(lambda)
    }

    /// The contragredient action on coweights, `c -> c o w^{-1}`.
    pub fn apply_coweight(&self, c: &[i64]) -> IVec {
        self.inv.apply_transpose(c)
    }
}

impl RootDatum {
    pub fn weyl_identity(&self) -> WeylElt {
        let id = IMat::identity(self.rank());
        WeylElt { mat: id.clone(), inv: id, len: 0 }
    }

    pub fn weyl_simple(&self, i: usize) -> WeylElt {
        let m = IMat::reflection(&self.simple_roots()[i], &self.simple_coroots()[i]);
        WeylElt { mat: m.clone(), inv: m, len: 1 }
    }

    /// The reflection in a positive root (given by its index in
    /// `positive_roots`).
    pub fn weyl_reflection(&self, root: usize) -> WeylElt {
        let r = &self.positive_roots()[root];
        let m = IMat::reflection(&r.root, &r.coroot);
        let mut w = WeylElt { mat: m.clone(), inv: m, len: 0 };
        w.len = self.weyl_length_of(&w.mat);
        w
    }

    pub fn is_positive_root(&self, beta: &[i64]) -> bool {
        pair(beta, self.two_rho_check()) > 0
    }

    /// `|{alpha > 0 : w(alpha) < 0}|`.
    fn weyl_length_of(&self, mat: &IMat) -> u32 {
        let c = mat.apply_transpose(self.two_rho_check());
        self.positive_roots().iter().filter(|r| pair(&r.root, &c) < 0).count() as u32
    }

    pub fn weyl_mul(&self, a: &WeylElt, b: &WeylElt) -> WeylElt {
        if a.len == 0 {
            return b.clone();
        }
        if b.len == 0 {
            return a.clone();
        }
        let mat = a.mat.mul(&b.mat);
        let inv = b.inv.mul(&a.inv);
        let len = self.weyl_length_of(&mat);
        WeylElt { mat, inv, len }
    }

    /// Whether `w s_i < w`.
    pub fn weyl_has_right_descent(&self, w: &WeylElt, i: usize) -> bool {
        !self.is_positive_root(&w.apply(&self.simple_roots()[i]))
    }

    /// A reduced word, as simple-root indices, found by peeling right
    /// descents in index order.
    pub fn weyl_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut cur = w.clone();
        let mut word = Vec::with_capacity(w.len as usize);
        while cur.len > 0 {
            let i = (0..self.semisimple_rank())
                .find(|&i| self.weyl_has_right_descent(&cur, i))
                .expect("a nontrivial Weyl element has a descent");
            cur = self.weyl_mul(&cur, &self.weyl_simple(i));
            word.push(i);
        }
        word.reverse();
        word
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElt {
        word.iter().fold(self.weyl_identity(), |acc, &i| self.weyl_mul(&acc, &self.weyl_simple(i)))
    }

    /// All elements, sorted by length, with the identity first and `w0`
    /// last.
    pub fn weyl_enumerate(&self) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let e = self.weyl_identity();
        seen.insert(e.clone());
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            for i in 0..self.semisimple_rank() {
                let ws = self.weyl_mul(&w, &self.weyl_simple(i));
                if seen.insert(ws.clone()) {
                    queue.push_back(ws);
                }
            }
            out.push(w);
        }
        out.sort();
        out
    }

    pub fn w0(&self) -> WeylElt {
        let mut w = self.weyl_identity();
        loop {
            let Some(i) = (0..self.semisimple_rank()).find(|&i| !self.weyl_has_right_descent(&w, i)) else {
                return w;
            };
            w = self.weyl_mul(&w, &self.weyl_simple(i));
        }
    }

    /// The dominant element of the `W`-orbit of `lambda`.
    pub fn dominant_conjugate(&self, lambda: &[i64]) -> IVec {
        let mut cur: IVec = lambda.iter().copied().collect();
        loop {
            let Some(i) = (0..self.semisimple_rank())
                .find(|&i| pair(&cur, &self.simple_coroots()[i]) < 0)
            else {
                return cur;
            };
            let k = pair(&cur, &self.simple_coroots()[i]);
            cur = crate::lattice::sub(&cur, &crate::lattice::scale(&self.simple_roots()[i], k));
        }
    }
}
