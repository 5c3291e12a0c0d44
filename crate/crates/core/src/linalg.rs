//! Dense linear algebra over a coefficient field.

use crate::poly::{Coeff, Field};

/// Row echelon form in place; returns pivot columns.
pub fn echelon(rows: &mut [Vec<Coeff>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Coefficients `c` with `sum c_i v_i = target`, if any.
pub fn solve_combination(vectors: &[Vec<Coeff>], target: &[Coeff], field: &Field) -> Option<Vec<Coeff>> {
    let n = vectors.len();
    let dim = target.len();
    // Augmented system: columns are the vectors, last column the target.
    let mut rows: Vec<Vec<Coeff>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Coeff> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = echelon(&mut rows);
    if pivots.contains(&n) {
        return None;
    }
    let mut sol = vec![Coeff::zero(field); n];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = rows[r][n].clone();
    }
    Some(sol)
}
