//! Root data of finite type: simple roots and coroots in a lattice `X = Z^n`,
//! positive-root closure, highest coroots, and the declarative file format.

use std::collections::{HashMap, VecDeque};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, gcd, pair, unit_vec, zero_vec, IVec};

const MAX_POSITIVE_ROOTS: usize = 4096;

/// A positive root together with its coroot, both as lattice vectors, and
/// their coordinates in the simple roots / simple coroots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub root: IVec,
    pub coroot: IVec,
    pub coords: IVec,
    pub coroot_coords: IVec,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// One block of the JSON root-datum format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatumBlock {
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    pub name: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum DatumDocument {
    Single(DatumBlock),
    Product(Vec<DatumBlock>),
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Vec<IVec>,
    simple_coroots: Vec<IVec>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    two_rho: IVec,
    two_rho_check: IVec,
    components: Vec<Vec<usize>>,
    highest: Vec<usize>,
    fundamental: Option<Vec<IVec>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        simple_roots: Vec<IVec>,
        simple_coroots: Vec<IVec>,
    ) -> Result<Self> {
        Self::build(name.into(), rank, simple_roots, simple_coroots, None)
    }

    fn build(
        name: String,
        rank: usize,
        simple_roots: Vec<IVec>,
        simple_coroots: Vec<IVec>,
        fundamental: Option<Vec<IVec>>,
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidDatum("rank must be positive".into()));
        }
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidDatum(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        if simple_roots.iter().chain(&simple_coroots).any(|v| v.len() != rank) {
            return Err(Error::InvalidDatum(format!("all vectors must have length {rank}")));
        }
        let n = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| pair(&simple_roots[i], &simple_coroots[j])).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                let a = cartan[i][j];
                if i == j && a != 2 {
                    return Err(Error::InvalidDatum(format!("<alpha_{i}, alpha_{i}^vee> = {a}, expected 2")));
                }
                if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidDatum(format!(
                        "pairing matrix is not a generalized Cartan matrix at ({i}, {j})"
                    )));
                }
            }
        }
        if rank_of(&simple_roots) != n {
            return Err(Error::InvalidDatum("simple roots are linearly dependent".into()));
        }

        let positive = root_closure(&simple_roots, &simple_coroots)?;
        let mut two_rho = zero_vec(rank);
        let mut two_rho_check = zero_vec(rank);
        for r in &positive {
            two_rho = lattice::add(&two_rho, &r.root);
            two_rho_check = lattice::add(&two_rho_check, &r.coroot);
        }

        let components = connected_components(&cartan);
        let highest = components
            .iter()
            .map(|comp| {
                positive
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| comp.iter().any(|&i| r.coords[i] != 0))
                    .max_by_key(|(_, r)| r.coroot_coords.iter().sum::<i64>())
                    .map(|(k, _)| k)
                    .expect("every component has a simple root")
            })
            .collect();

        let mut datum = RootDatum {
            name,
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            positive,
            two_rho,
            two_rho_check,
            components,
            highest,
            fundamental: None,
        };
        datum.fundamental = fundamental.or_else(|| datum.search_fundamental_weights());
        Ok(datum)
    }

    /// Presets: `A<n>`, `B<n>`, `C<n>`, `D<n>`, `F4`, `G2` (simply connected,
    /// fundamental-weight basis) and `GL<n>` (standard basis), or products
    /// written `A1xA2`.
    pub fn preset(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name
            .split(['x', '×', '*'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        if parts.is_empty() {
            return Err(Error::UnknownPreset(name.into()));
        }
        let mut blocks = Vec::new();
        for p in &parts {
            blocks.push(preset_block(p).ok_or_else(|| Error::UnknownPreset(name.into()))?);
        }
        Self::from_blocks(&blocks, Some(name.to_string()))
    }

    /// Block-diagonal product of declarative blocks.
    pub fn from_blocks(blocks: &[PresetParts], name: Option<String>) -> Result<Self> {
        let rank: usize = blocks.iter().map(|b| b.block.rank).sum();
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let mut fundamental = Some(Vec::new());
        let mut offset = 0;
        for b in blocks {
            let embed = |v: &Vec<i64>| -> IVec {
                let mut out = zero_vec(rank);
                out[offset..offset + v.len()].copy_from_slice(v);
                out
            };
            if b.block.simple_roots.iter().chain(&b.block.simple_coroots).any(|v| v.len() != b.block.rank) {
                return Err(Error::InvalidDatum(format!(
                    "block `{}` has vectors of the wrong length",
                    b.block.name
                )));
            }
            roots.extend(b.block.simple_roots.iter().map(embed));
            coroots.extend(b.block.simple_coroots.iter().map(embed));
            match (&mut fundamental, &b.fundamental) {
                (Some(f), Some(bf)) => f.extend(bf.iter().map(embed)),
                _ => fundamental = None,
            }
            offset += b.block.rank;
        }
        let name = name.unwrap_or_else(|| {
            blocks.iter().map(|b| b.block.name.as_str()).collect::<Vec<_>>().join("x")
        });
        Self::build(name, rank, roots, coroots, fundamental)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DatumDocument =
            serde_json::from_str(text).map_err(|e| Error::DatumParse(e.to_string()))?;
        let blocks = match doc {
            DatumDocument::Single(b) => vec![b],
            DatumDocument::Product(bs) => bs,
        };
        if blocks.is_empty() {
            return Err(Error::DatumParse("empty product".into()));
        }
        let parts: Vec<PresetParts> =
            blocks.into_iter().map(|block| PresetParts { block, fundamental: None }).collect();
        Self::from_blocks(&parts, None)
    }

    pub fn to_block(&self) -> DatumBlock {
        DatumBlock {
            rank: self.rank,
            simple_roots: self.simple_roots.iter().map(|v| v.to_vec()).collect(),
            simple_coroots: self.simple_coroots.iter().map(|v| v.to_vec()).collect(),
            name: self.name.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension of the lattice `X`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[IVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[IVec] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn two_rho(&self) -> &IVec {
        &self.two_rho
    }

    pub fn two_rho_check(&self) -> &IVec {
        &self.two_rho_check
    }

    /// Simple-root indices of each irreducible component.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The positive root `beta` whose coroot is the highest coroot of the
    /// given component.
    pub fn highest_coroot_root(&self, component: usize) -> &Root {
        &self.positive[self.highest[component]]
    }

    pub fn fundamental_weights(&self) -> Option<&[IVec]> {
        self.fundamental.as_deref()
    }

    pub fn check_weight(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::RankMismatch(v.to_vec(), self.rank));
        }
        Ok(())
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple_coroots.iter().all(|c| pair(v, c) >= 0)
    }

    /// Coordinates of `beta` in the simple roots, if it lies in the root
    /// lattice.
    pub fn root_lattice_coords(&self, beta: &[i64]) -> Option<IVec> {
        let n = self.semisimple_rank();
        // Solve sum_i c_i a_ij = <beta, alpha_j^vee>.
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|j| {
                let mut row: Vec<Ratio<i64>> =
                    (0..n).map(|i| Ratio::from_integer(self.cartan[i][j])).collect();
                row.push(Ratio::from_integer(pair(beta, &self.simple_coroots[j])));
                row
            })
            .collect();
        let sol = solve_square(&mut m)?;
        let mut coords = IVec::new();
        for x in sol {
            if !x.is_integer() {
                return None;
            }
            coords.push(x.to_integer());
        }
        let mut back = zero_vec(self.rank);
        for (i, c) in coords.iter().enumerate() {
            back = lattice::add(&back, &lattice::scale(&self.simple_roots[i], *c));
        }
        (back.as_slice() == beta).then_some(coords)
    }

    /// Writes `lambda = mu - nu` with `mu`, `nu` dominant.
    pub fn dominant_decomposition(&self, lambda: &[i64]) -> (IVec, IVec) {
        let pairings: Vec<i64> = self.simple_coroots.iter().map(|c| pair(lambda, c)).collect();
        let nu = match &self.fundamental {
            Some(fw) => {
                let mut nu = zero_vec(self.rank);
                for (i, p) in pairings.iter().enumerate() {
                    if *p < 0 {
                        nu = lattice::add(&nu, &lattice::scale(&fw[i], -p));
                    }
                }
                nu
            }
            None => {
                // <2 rho, alpha_i^vee> = 2 for every simple root.
                let worst = pairings.iter().map(|p| -p).max().unwrap_or(0).max(0);
                lattice::scale(&self.two_rho, (worst + 1) / 2)
            }
        };
        (lattice::add(lambda, &nu), nu)
    }

    /// Some weight `delta` with `<delta, coroot> = 1`. Exists for every
    /// coroot exactly when the coroot is primitive in `X^vee`.
    pub fn half_weight(&self, coroot: &[i64]) -> Result<IVec> {
        let g = coroot.iter().fold(0, |g, &c| gcd(g, c));
        if g != 1 {
            return Err(Error::NoHalfWeight(coroot.to_vec()));
        }
        // Extended Euclid on the coordinates.
        let mut delta = zero_vec(self.rank);
        let mut cur = 0i64;
        let mut coef_cur: IVec = zero_vec(self.rank);
        for (i, &c) in coroot.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if cur == 0 {
                cur = c;
                coef_cur = unit_vec(self.rank, i);
                continue;
            }
            let (g, x, y) = ext_gcd(cur, c);
            coef_cur = lattice::scale(&coef_cur, x);
            coef_cur[i] += y;
            cur = g;
        }
        if cur < 0 {
            coef_cur = lattice::neg(&coef_cur);
            cur = -cur;
        }
        debug_assert_eq!(cur, 1);
        delta.copy_from_slice(&coef_cur);
        debug_assert_eq!(pair(&delta, coroot), 1);
        Ok(delta)
    }

    fn search_fundamental_weights(&self) -> Option<Vec<IVec>> {
        if self.rank > 6 {
            return None;
        }
        let n = self.semisimple_rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut best: Option<IVec> = None;
            let bound = 2i64;
            let mut cur = vec![-bound; self.rank];
            'search: loop {
                let cand: IVec = cur.iter().copied().collect();
                let ok = (0..n).all(|j| pair(&cand, &self.simple_coroots[j]) == i64::from(i == j));
                if ok {
                    let norm = |v: &IVec| v.iter().map(|x| x.abs()).sum::<i64>();
                    if best.as_ref().is_none_or(|b| norm(&cand) < norm(b)) {
                        best = Some(cand);
                    }
                }
                for k in 0..self.rank {
                    if cur[k] < bound {
                        cur[k] += 1;
                        continue 'search;
                    }
                    cur[k] = -bound;
                }
                break;
            }
            out.push(best?);
        }
        Some(out)
    }
}

/// A preset block together with its fundamental weights.
#[derive(Clone, Debug)]
pub struct PresetParts {
    pub block: DatumBlock,
    pub fundamental: Option<Vec<Vec<i64>>>,
}

fn preset_block(name: &str) -> Option<PresetParts> {
    let upper = name.to_ascii_uppercase();
    if let Some(n) = upper.strip_prefix("GL") {
        let n: usize = n.parse().ok().filter(|&n| n >= 1)?;
        let roots: Vec<Vec<i64>> = (0..n - 1)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = -1;
                v
            })
            .collect();
        let fundamental = (0..n - 1).map(|i| (0..n).map(|k| i64::from(k <= i)).collect()).collect();
        return Some(PresetParts {
            block: DatumBlock {
                rank: n,
                simple_roots: roots.clone(),
                simple_coroots: roots,
                name: format!("GL{n}"),
            },
            fundamental: Some(fundamental),
        });
    }
    let (letter, n) = upper.split_at(1);
    let n: usize = n.parse().ok().filter(|&n| n >= 1)?;
    let cartan = cartan_matrix(letter.chars().next()?, n)?;
    // Fundamental-weight basis: alpha_i = sum_j <alpha_i, alpha_j^vee> w_j,
    // alpha_j^vee = e_j.
    let coroots: Vec<Vec<i64>> = (0..n).map(|j| unit_vec(n, j).to_vec()).collect();
    Some(PresetParts {
        block: DatumBlock {
            rank: n,
            simple_roots: cartan,
            simple_coroots: coroots.clone(),
            name: format!("{letter}{n}"),
        },
        fundamental: Some(coroots),
    })
}

/// Cartan matrix `a_ij = <alpha_i, alpha_j^vee>` in Bourbaki numbering.
fn cartan_matrix(kind: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match kind {
        'A' => chain(&mut a, n),
        'B' if n >= 2 => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        'C' if n >= 2 => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        'D' if n >= 4 => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        'F' if n == 4 => {
            chain(&mut a, 4);
            a[1][2] = -2;
        }
        'G' if n == 2 => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
        _ => return None,
    }
    Some(a)
}

fn root_closure(simple: &[IVec], coroots: &[IVec]) -> Result<Vec<Root>> {
    let n = simple.len();
    let mut out: Vec<Root> = Vec::new();
    let mut seen: HashMap<IVec, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let r = Root {
            root: simple[i].clone(),
            coroot: coroots[i].clone(),
            coords: unit_vec(n, i),
            coroot_coords: unit_vec(n, i),
        };
        seen.insert(r.coords.clone(), out.len());
        out.push(r.clone());
        queue.push_back(r);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let k = pair(&r.root, &coroots[i]);
            let kc = pair(&simple[i], &r.coroot);
            if k == 0 && kc == 0 {
                continue;
            }
            let mut coords = r.coords.clone();
            coords[i] -= k;
            if coords.iter().any(|&c| c < 0) {
                continue;
            }
            if seen.contains_key(&coords) {
                continue;
            }
            let mut coroot_coords = r.coroot_coords.clone();
            coroot_coords[i] -= kc;
            let new = Root {
                root: lattice::sub(&r.root, &lattice::scale(&simple[i], k)),
                coroot: lattice::sub(&r.coroot, &lattice::scale(&coroots[i], kc)),
                coords,
                coroot_coords,
            };
            seen.insert(new.coords.clone(), out.len());
            out.push(new.clone());
            if out.len() > MAX_POSITIVE_ROOTS {
                return Err(Error::NonFiniteType(MAX_POSITIVE_ROOTS));
            }
            queue.push_back(new);
        }
    }
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coords.cmp(&a.coords)));
    Ok(out)
}

fn connected_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if cartan[i][j] != 0 && comp[j] == usize::MAX {
                    comp[j] = id;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn rank_of(vectors: &[IVec]) -> usize {
    let mut m: Vec<Vec<Ratio<i64>>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c] / m[rank][c];
                for k in c..cols {
                    let t = m[rank][k] * f;
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves an augmented square system; `None` if singular.
fn solve_square(m: &mut [Vec<Ratio<i64>>]) -> Option<Vec<Ratio<i64>>> {
    let n = m.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let inv = Ratio::one() / m[c][c];
        for k in c..=n {
            m[c][k] *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for k in c..=n {
                    let t = m[c][k] * f;
                    m[r][k] -= t;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n]).collect())
}
