//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Coeff, Monomial, MonomialOrder, Poly, Ring};

use super::{Budget, IdealError};

/// Polynomial as terms sorted descending under a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct OPoly {
    pub(crate) terms: Vec<(Monomial, Coeff)>,
}

impl OPoly {
    pub(crate) fn from_poly(p: &Poly, order: MonomialOrder) -> OPoly {
        let mut terms: Vec<(Monomial, Coeff)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        OPoly { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Arc<Ring>) -> Poly {
        Poly::from_terms(ring, self.terms.iter().cloned())
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Coeff {
        &self.terms[0].1
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self) -> OPoly {
        if let Some(inv) = self.terms.first().and_then(|t| t.1.inv()) {
            if !inv.is_one() {
                for t in &mut self.terms {
                    t.1 = t.1.mul(&inv);
                }
            }
        }
        self
    }

    fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }
}

/// `a - c * m * b` with both inputs sorted descending.
fn sub_mul(a: &[(Monomial, Coeff)], c: &Coeff, m: &Monomial, b: &[(Monomial, Coeff)], order: MonomialOrder) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = b.iter().map(|(n, d)| (n.mul(m), d.mul(c)));
    let shifted: Vec<(Monomial, Coeff)> = shifted.collect();
    while i < a.len() && j < shifted.len() {
        match order.cmp(&a[i].0, &shifted[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted[j].0.clone(), shifted[j].1.neg()));
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].1.sub(&shifted[j].1);
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(shifted[j..].iter().map(|(n, d)| (n.clone(), d.neg())));
    out
}

/// Full reduction of `p` modulo `basis` (leading-monic elements).
pub(crate) fn reduce(p: &OPoly, basis: &[&OPoly], order: MonomialOrder) -> OPoly {
    let mut rest = p.terms.clone();
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    while !rest.is_empty() {
        let (m, c) = rest[0].clone();
        let divisor = basis.iter().find(|g| g.lm().divides(&m));
        match divisor {
            Some(g) => {
                let shift = g.lm().quotient_of(&m).expect("divides");
                let scale = c.mul(&g.lc().inv().expect("nonzero"));
                rest = sub_mul(&rest, &scale, &shift, &g.terms, order);
            }
            None => {
                rem.push((m, c));
                rest.remove(0);
            }
        }
    }
    OPoly { terms: rem }
}

fn spoly(f: &OPoly, g: &OPoly, order: MonomialOrder) -> OPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l).expect("lcm");
    let mg = g.lm().quotient_of(&l).expect("lcm");
    let lf: Vec<(Monomial, Coeff)> = f.terms.iter().map(|(m, c)| (m.mul(&mf), c.mul(&g.lc().clone()))).collect();
    OPoly { terms: sub_mul(&lf, f.lc(), &mg, &g.terms, order) }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// A reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    pub(crate) elems: Vec<OPoly>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Basis elements, monic, sorted by ascending leading monomial.
    pub fn polys(&self) -> Vec<Poly> {
        self.elems.iter().map(|e| e.to_poly(&self.ring)).collect()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm().clone()).collect()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].lm().is_one()
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        let basis: Vec<&OPoly> = self.elems.iter().collect();
        reduce(&OPoly::from_poly(p, self.order), &basis, self.order).to_poly(&self.ring)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Every variable has a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let lms = self.leading_monomials();
        (0..self.ring.nvars()).all(|v| lms.iter().any(|m| m.as_pure_power().is_some_and(|(i, _)| i == v)))
    }

    /// Monomials outside the leading ideal, ascending; `None` unless zero-dimensional.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.is_unit() {
            return Some(Vec::new());
        }
        if !self.is_zero_dimensional() {
            return None;
        }
        let lms = self.leading_monomials();
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![Monomial::one()];
        while let Some(m) = stack.pop() {
            if seen.contains(&m) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for v in 0..self.ring.nvars() {
                stack.push(m.mul(&Monomial::var(v)));
            }
            seen.insert(m);
        }
        Some(seen.into_iter().collect())
    }

    /// Krull dimension of the quotient ring; `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_unit() {
            return None;
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        // Largest set of variables containing the support of no leading monomial.
        let supports: Vec<u64> = lms.iter().map(|m| m.pairs().fold(0u64, |acc, (i, _)| acc | (1 << i))).collect();
        let mut best = 0;
        fn search(next: usize, n: usize, set: u64, size: usize, supports: &[u64], best: &mut usize) {
            if size + (n - next) <= *best {
                return;
            }
            if next == n {
                *best = size;
                return;
            }
            let with = set | (1 << next);
            if supports.iter().all(|s| s & !with != 0) {
                search(next + 1, n, with, size + 1, supports, best);
            }
            search(next + 1, n, set, size, supports, best);
        }
        search(0, n, 0, 0, &supports, &mut best);
        Some(best)
    }
}

/// Computes a reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner(ring: &Arc<Ring>, gens: &[Poly], order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis, IdealError> {
    for g in gens {
        if !crate::poly::same_ring(g.ring(), ring) {
            return Err(IdealError::Ring(format!("generator {g} lives in {:?}, expected {ring:?}", g.ring())));
        }
    }
    let mut basis: Vec<OPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<OPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| OPoly::from_poly(g, order).monic()).collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for f in inputs {
        let act: Vec<&OPoly> = basis.iter().zip(&active).filter(|(_, &a)| a).map(|(g, _)| g).collect();
        let h = reduce(&f, &act, order);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit_basis(ring, order));
        }
        update(&mut basis, &mut active, &mut pairs, h.monic());
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(IdealError::Budget(format!("more than {} S-pairs", budget.max_pairs)));
        }
        let k = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].lcm, &pairs[b].lcm).then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j))))
            .expect("nonempty");
        let pair = pairs.swap_remove(k);
        let s = spoly(&basis[pair.i], &basis[pair.j], order);
        let act: Vec<&OPoly> = basis.iter().zip(&active).filter(|(_, &a)| a).map(|(g, _)| g).collect();
        let h = reduce(&s, &act, order);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return Ok(unit_basis(ring, order));
        }
        if h.max_degree() > budget.max_degree {
            return Err(IdealError::Budget(format!("basis degree above {}", budget.max_degree)));
        }
        if basis.len() >= budget.max_basis {
            return Err(IdealError::Budget(format!("basis larger than {}", budget.max_basis)));
        }
        update(&mut basis, &mut active, &mut pairs, h.monic());
    }

    // Minimal, then reduced.
    let mut kept: Vec<OPoly> = Vec::new();
    let live: Vec<OPoly> = basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    for (i, g) in live.iter().enumerate() {
        let redundant = live.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            kept.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<&OPoly> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g).collect();
        let head = OPoly { terms: vec![kept[i].terms[0].clone()] };
        let tail = OPoly { terms: kept[i].terms[1..].to_vec() };
        let rt = reduce(&tail, &others, order);
        let mut terms = head.terms;
        terms.extend(rt.terms);
        reduced.push(OPoly { terms }.monic());
    }
    reduced.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(GroebnerBasis { ring: ring.clone(), order, elems: reduced })
}

fn unit_basis(ring: &Arc<Ring>, order: MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        order,
        elems: vec![OPoly { terms: vec![(Monomial::one(), Coeff::one(ring.field()))] }],
    }
}

/// Gebauer–Möller installation of a new basis element.
fn update(basis: &mut Vec<OPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: OPoly) {
    let hid = basis.len();
    let hlm = h.lm().clone();
    let cands: Vec<(usize, Monomial)> = (0..basis.len()).filter(|&g| active[g]).map(|g| (g, hlm.lcm(basis[g].lm()))).collect();

    // Chain criterion among the new pairs.
    let mut d: Vec<(usize, Monomial)> = Vec::new();
    for (k, (g, l)) in cands.iter().enumerate() {
        let coprime = hlm.is_coprime(basis[*g].lm());
        let dominated_c = cands[k + 1..].iter().any(|(_, l2)| l2.divides(l));
        let dominated_d = d.iter().any(|(_, l2)| l2.divides(l));
        if coprime || (!dominated_c && !dominated_d) {
            d.push((*g, l.clone()));
        }
    }
    // Product criterion.
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|(g, _)| !hlm.is_coprime(basis[*g].lm()))
        .map(|(g, l)| Pair { i: g, j: hid, lcm: l })
        .collect();
    // Old pairs made redundant by h.
    pairs.retain(|p| {
        let li = hlm.lcm(basis[p.i].lm());
        let lj = hlm.lcm(basis[p.j].lm());
        !(hlm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    pairs.extend(e);
    for g in 0..basis.len() {
        if active[g] && hlm.divides(basis[g].lm()) {
            active[g] = false;
        }
    }
    basis.push(h);
    active.push(true);
}
