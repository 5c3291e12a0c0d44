//! Sparse monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

/// Product of variables, stored as `(variable, exponent)` pairs sorted by
/// variable with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i as u32, 1)])
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(i as u32, e)])
        }
    }

    /// From a dense exponent vector.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32, e))
                .collect(),
        )
    }

    /// From arbitrary `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(i, e)| (i as u32, e))
            .collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => out.push((i, e)),
            }
        }
        Monomial(out)
    }

    pub fn to_exponents(&self, nvars: usize) -> Vec<u32> {
        let mut v = vec![0; nvars];
        for &(i, e) in &self.0 {
            v[i as usize] = e;
        }
        v
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(i, e)| (i as usize, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0
            .binary_search_by_key(&(i as u32), |&(v, _)| v)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0.iter().map(|&(i, e)| weights[i as usize] as u64 * e as u64).sum()
    }

    /// Highest variable index present, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(i, _)| i as usize)
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.exponent(i) > 0
    }

    /// Variable and exponent when this is a pure power `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        match self.0.as_slice() {
            [(i, e)] => Some((*i as usize, *e)),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(i, x)| (i, x * e)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.0 {
            while j < other.0.len() && other.0[j].0 < v {
                j += 1;
            }
            if j == other.0.len() || other.0[j].0 != v || other.0[j].1 < e {
                return false;
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.0.len());
        for &(v, e) in &other.0 {
            let d = e - self.exponent(v as usize);
            if d > 0 {
                out.push((v, d));
            }
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, u32::min)
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (v, x, y) = match (a.get(i), b.get(j)) {
                (None, None) => break,
                (Some(&(v, x)), None) => {
                    i += 1;
                    (v, x, 0)
                }
                (None, Some(&(v, y))) => {
                    j += 1;
                    (v, 0, y)
                }
                (Some(&(v, x)), Some(&(w, y))) => match v.cmp(&w) {
                    Ordering::Less => {
                        i += 1;
                        (v, x, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (w, 0, y)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (v, x, y)
                    }
                },
            };
            let e = f(x, y);
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial(out)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other).is_one()
    }

    /// Drops variable `i`, returning its exponent.
    pub fn without_var(&self, i: usize) -> (Monomial, u32) {
        let e = self.exponent(i);
        (Monomial(self.0.iter().copied().filter(|&(v, _)| v as usize != i).collect()), e)
    }

    /// Renames variables through `map` (old index to new index).
    pub fn remap(&self, map: &[usize]) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(i, e)| (map[i as usize], e)))
    }
}

/// Last variable (scanning from the high end) where two monomials differ,
/// with the exponents there.
fn last_difference(a: &Monomial, b: &Monomial) -> Option<(u32, u32)> {
    let (x, y) = (&a.0, &b.0);
    let (mut i, mut j) = (x.len(), y.len());
    while i > 0 || j > 0 {
        let xi = if i > 0 { Some(x[i - 1]) } else { None };
        let yj = if j > 0 { Some(y[j - 1]) } else { None };
        match (xi, yj) {
            (Some((v, e)), Some((w, f))) => match v.cmp(&w) {
                Ordering::Equal => {
                    if e != f {
                        return Some((e, f));
                    }
                    i -= 1;
                    j -= 1;
                }
                Ordering::Greater => return Some((e, 0)),
                Ordering::Less => return Some((0, f)),
            },
            (Some((_, e)), None) => return Some((e, 0)),
            (None, Some((_, f))) => return Some((0, f)),
            (None, None) => unreachable!(),
        }
    }
    None
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    // Variable 0 is the largest.
    let (x, y) = (&a.0, &b.0);
    let n = x.len().min(y.len());
    for k in 0..n {
        let ((v, e), (w, f)) = (x[k], y[k]);
        if v != w {
            // The monomial containing the smaller-index variable wins.
            return if v < w { Ordering::Greater } else { Ordering::Less };
        }
        if e != f {
            return e.cmp(&f);
        }
    }
    x.len().cmp(&y.len())
}

fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => match last_difference(a, b) {
            None => Ordering::Equal,
            Some((e, f)) => f.cmp(&e),
        },
        o => o,
    }
}

/// Degrevlex with variable 0 largest; the canonical order for display and storage.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Monomial orders used by the Groebner engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Variables `0..block` form the first (eliminated) block; each block
    /// is ordered by degrevlex.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Elimination { block } => {
                let split = |m: &Monomial| {
                    let (lo, hi): (Vec<_>, Vec<_>) =
                        m.0.iter().copied().partition(|&(v, _)| (v as usize) < *block);
                    (Monomial(lo), Monomial(hi))
                };
                let (a1, a2) = split(a);
                let (b1, b2) = split(b);
                degrevlex_cmp(&a1, &b1).then_with(|| degrevlex_cmp(&a2, &b2))
            }
        }
    }
}
