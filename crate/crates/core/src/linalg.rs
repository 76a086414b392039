//! Gaussian elimination over `F_p` on row-major residue matrices.

use crate::ff::PrimeField;

pub type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce(field: PrimeField, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = row[c];
                for (v, &pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *v = field.sub(*v, field.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: PrimeField, m: &[Vec<u64>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(field, &mut work).len()
}

/// Greedy maximal independent subset of the rows, original order kept.
pub fn independent_rows(field: PrimeField, m: &[Vec<u64>]) -> Matrix {
    let mut kept: Matrix = Vec::new();
    let mut current = 0;
    for row in m {
        kept.push(row.clone());
        let r = rank(field, &kept);
        if r == current {
            kept.pop();
        } else {
            current = r;
        }
    }
    kept
}

/// Whether two generator matrices span the same row space.
pub fn same_row_space(field: PrimeField, a: &[Vec<u64>], b: &[Vec<u64>]) -> bool {
    let ra = rank(field, a);
    if ra != rank(field, b) {
        return false;
    }
    let stacked: Matrix = a.iter().chain(b).cloned().collect();
    rank(field, &stacked) == ra
}
