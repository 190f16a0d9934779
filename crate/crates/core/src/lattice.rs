//! Small integer vectors and matrices for weights, coweights and Weyl group
//! elements. Ranks are tiny, so everything stays inline.

use std::fmt;

use smallvec::SmallVec;

/// An integer vector: a weight in `X` or a coweight in `X^vee`, in the
/// coordinates of the datum's lattice basis.
pub type IVec = SmallVec<[i64; 4]>;

pub fn ivec(entries: &[i64]) -> IVec {
    IVec::from_slice(entries)
}

pub fn zero_vec(n: usize) -> IVec {
    smallvec::smallvec![0; n]
}

pub fn unit_vec(n: usize, i: usize) -> IVec {
    let mut v = zero_vec(n);
    v[i] = 1;
    v
}

/// The pairing between a weight and a coweight.
#[inline]
pub fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[i64], k: i64) -> IVec {
    a.iter().map(|x| x * k).collect()
}

pub fn neg(a: &[i64]) -> IVec {
    a.iter().map(|x| -x).collect()
}

/// Square integer matrix, row-major, acting on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IMat {
    n: usize,
    data: SmallVec<[i64; 16]>,
}

impl IMat {
    pub fn identity(n: usize) -> Self {
        let mut data = SmallVec::from_elem(0, n * n);
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IMat { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = SmallVec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend_from_slice(r);
        }
        IMat { n, data }
    }

    /// The reflection `x -> x - <x, coroot> root`.
    pub fn reflection(root: &[i64], coroot: &[i64]) -> Self {
        let n = root.len();
        let mut m = Self::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] -= root[i] * coroot[j];
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn apply(&self, v: &[i64]) -> IVec {
        let n = self.n;
        (0..n)
            .map(|i| {
                let row = &self.data[i * n..(i + 1) * n];
                pair(row, v)
            })
            .collect()
    }

    /// Row vector times matrix, i.e. the transpose action on coweights:
    /// `<M x, c> = <x, c.M>`.
    pub fn apply_transpose(&self, c: &[i64]) -> IVec {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|i| c[i] * self.data[i * n + j]).sum())
            .collect()
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        let n = self.n;
        let mut data = SmallVec::from_elem(0, n * n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        IMat { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &IMat) -> IMat {
        let n = self.n + other.n;
        let mut m = IMat { n, data: SmallVec::from_elem(0, n * n) };
        for i in 0..self.n {
            for j in 0..self.n {
                m.data[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m.data[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        m
    }
}

impl fmt::Debug for IMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_is_involution() {
        let alpha = ivec(&[2, -1]);
        let coroot = ivec(&[1, 0]);
        let s = IMat::reflection(&alpha, &coroot);
        assert!(s.mul(&s).is_identity());
        assert_eq!(s.apply(&alpha), neg(&alpha));
    }

    #[test]
    fn transpose_action_is_adjoint() {
        let m = IMat::from_rows(&[vec![1, 2], vec![-1, 0]]);
        let x = ivec(&[3, -4]);
        let c = ivec(&[5, 7]);
        assert_eq!(pair(&m.apply(&x), &c), pair(&x, &m.apply_transpose(&c)));
    }
}
