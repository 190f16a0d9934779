//! Gaussian elimination over an exact field.

use crate::scalar::Field;

/// Rank of the matrix given by `rows` (all rows the same length).
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Dimension of the solution space of `A x = 0` with `ncols` unknowns.
pub fn nullity<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> usize {
    ncols - rank(rows)
}
