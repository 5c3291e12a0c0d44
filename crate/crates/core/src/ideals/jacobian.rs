//! Jacobian matrices, minors and singular-locus ideals.

use std::collections::HashMap;
use std::sync::Arc;

use crate::poly::{Poly, Ring};

use super::IdealError;

/// `m x n` matrix of partial derivatives, rows indexed by equations.
pub fn jacobian(eqs: &[Poly], vars: &[usize]) -> Vec<Vec<Poly>> {
    eqs.iter().map(|f| vars.iter().map(|&v| f.derivative(v)).collect()).collect()
}

/// All `r x r` minors, by Laplace expansion along the first chosen row with
/// memoisation over (row set, column set). Zero minors are dropped.
pub fn minors(matrix: &[Vec<Poly>], r: usize, ring: &Arc<Ring>, max_minors: usize) -> Result<Vec<Poly>, IdealError> {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    if r == 0 {
        return Ok(vec![Poly::one(ring)]);
    }
    if r > m || r > n {
        return Ok(Vec::new());
    }
    if m > 64 || n > 64 {
        return Err(IdealError::Budget("matrix too large for minor expansion".into()));
    }
    let count = binomial(m, r).saturating_mul(binomial(n, r));
    if count > max_minors as u128 {
        return Err(IdealError::Budget(format!("{count} minors of size {r} exceed the cap of {max_minors}")));
    }
    let mut memo: HashMap<(u64, u64), Poly> = HashMap::new();
    let mut out = Vec::new();
    for rows in subsets(m, r) {
        for cols in subsets(n, r) {
            let d = det(matrix, mask(&rows), mask(&cols), ring, &mut memo);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |acc, &i| acc | 1 << i)
}

fn det(matrix: &[Vec<Poly>], rows: u64, cols: u64, ring: &Arc<Ring>, memo: &mut HashMap<(u64, u64), Poly>) -> Poly {
    if rows == 0 {
        return Poly::one(ring);
    }
    if let Some(d) = memo.get(&(rows, cols)) {
        return d.clone();
    }
    let r0 = rows.trailing_zeros() as usize;
    let rest = rows & !(1 << r0);
    let mut acc = Poly::zero(ring);
    let mut sign_pos = true;
    let mut c = cols;
    while c != 0 {
        let j = c.trailing_zeros() as usize;
        c &= !(1 << j);
        let entry = &matrix[r0][j];
        if !entry.is_zero() {
            let sub = det(matrix, rest, cols & !(1 << j), ring, memo);
            if !sub.is_zero() {
                let t = entry * &sub;
                acc = if sign_pos { &acc + &t } else { &acc - &t };
            }
        }
        sign_pos = !sign_pos;
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Generators of the singular locus of the variety cut out by `eqs`, assumed
/// reduced and equidimensional of codimension `codim`: the equations
/// together with the `codim x codim` minors of the Jacobian.
pub fn singular_locus_ideal(eqs: &[Poly], ring: &Arc<Ring>, codim: usize, max_minors: usize) -> Result<Vec<Poly>, IdealError> {
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    let jac = jacobian(eqs, &vars);
    let mut gens: Vec<Poly> = eqs.to_vec();
    gens.extend(minors(&jac, codim, ring, max_minors)?);
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    #[test]
    fn two_by_two_minors() {
        let r = Ring::new(["x", "y"], Field::Rational);
        let m = vec![
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
            vec![parse_poly(&r, "1").unwrap(), parse_poly(&r, "x").unwrap()],
        ];
        let d = minors(&m, 2, &r, 100).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].to_string(), "x^2 - y");
    }

    #[test]
    fn three_by_three_determinant() {
        let r = Ring::new(["a"], Field::Rational);
        let c = |n: i64| Poly::from_i64(&r, n);
        let m = vec![vec![c(2), c(0), c(1)], vec![c(1), c(3), c(2)], vec![c(1), c(1), c(1)]];
        let d = minors(&m, 3, &r, 10).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert!(d.is_empty());
        let m2 = vec![vec![c(2), c(0), c(1)], vec![c(1), c(3), c(2)], vec![c(1), c(1), c(2)]];
        assert_eq!(minors(&m2, 3, &r, 10).unwrap()[0].to_string(), "6");
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
    }
}
