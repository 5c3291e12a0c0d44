//! Sparse multivariate polynomials over a [`Ring`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::field::{Coeff, Field};
use super::monomial::Monomial;
use super::PolyError;

/// Polynomial ring: named variables over a coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, field: Field) -> Arc<Ring> {
        Arc::new(Ring { names: names.into_iter().map(Into::into).collect(), field })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: Field) -> Arc<Ring> {
        Arc::new(Ring { names: self.names.clone(), field })
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Result of [`Poly::weighted_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedDegree {
    /// Largest weight of a term; `None` for the zero polynomial.
    pub degree: Option<u64>,
    /// All terms share one weight (the zero polynomial counts as homogeneous).
    pub homogeneous: bool,
}

/// A sparse polynomial; terms are kept in degrevlex order with no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Poly {
        Poly::term(ring, Monomial::one(), c)
    }

    pub fn from_i64(ring: &Arc<Ring>, n: i64) -> Poly {
        Poly::constant(ring, Coeff::from_i64(ring.field(), n))
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::from_i64(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Poly {
        assert!(i < ring.nvars(), "variable index {i} out of range");
        Poly::term(ring, Monomial::var(i), Coeff::one(ring.field()))
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Poly {
        assert!(c.in_field(ring.field()), "coefficient {c:?} not in {}", ring.field());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Poly {
        let mut out = Poly::zero(ring);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading (degrevlex-largest) down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| Coeff::zero(self.field()))
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one())
    }

    /// Leading term in degrevlex.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        assert!(c.in_field(self.ring.field()), "coefficient {c:?} not in {}", self.ring.field());
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(format!("{:?}", self.ring), format!("{:?}", other.ring)))
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c.mul(d));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Weighted degree under `weights` and whether the polynomial is quasi-homogeneous.
    pub fn weighted_degree(&self, weights: &[u32]) -> WeightedDegree {
        assert_eq!(weights.len(), self.ring.nvars(), "weight vector length");
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            None => WeightedDegree { degree: None, homogeneous: true },
            Some(first) => {
                let mut max = first;
                let mut homogeneous = true;
                for d in degs {
                    homogeneous &= d == first;
                    max = max.max(d);
                }
                WeightedDegree { degree: Some(max), homogeneous }
            }
        }
    }

    /// Quasi-homogeneous of exactly weight `d` (zero counts for any `d`).
    pub fn is_quasi_homogeneous_of(&self, weights: &[u32], d: u64) -> bool {
        self.terms.keys().all(|m| m.weighted_degree(weights) == d)
    }

    /// Variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flat_map(|m| m.pairs().map(|(i, _)| i)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.contains_var(i))
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = self.field().clone();
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.without_var(i);
            let reduced = rest.mul(&Monomial::var_pow(i, e - 1));
            out.add_term(reduced, c.mul(&Coeff::from_i64(&field, e as i64)));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; the images fix the target ring.
    pub fn compose(&self, target: &Arc<Ring>, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::Arity { expected: self.ring.nvars(), got: images.len() });
        }
        for img in images {
            if !same_ring(img.ring(), target) {
                return Err(PolyError::RingMismatch(format!("{:?}", img.ring()), format!("{target:?}")));
            }
        }
        let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let c = c.embed(target.field())?;
            let mut t = Poly::constant(target, c);
            for (i, e) in m.pairs() {
                let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                t = &t * &p;
                if t.is_zero() {
                    break;
                }
            }
            for (n, d) in t.terms {
                out.add_term(n, d);
            }
        }
        Ok(out)
    }

    /// Replaces the listed variables by polynomials of the same ring.
    pub fn substitute(&self, subs: &[(usize, Poly)]) -> Result<Poly, PolyError> {
        let mut images: Vec<Poly> = (0..self.ring.nvars()).map(|i| Poly::var(&self.ring, i)).collect();
        for (i, p) in subs {
            self.check_ring(p)?;
            images[*i] = p.clone();
        }
        self.compose(&self.ring.clone(), &images)
    }

    /// Evaluates at a point whose coordinates lie in the polynomial's field.
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff, PolyError> {
        if point.len() != self.ring.nvars() {
            return Err(PolyError::Arity { expected: self.ring.nvars(), got: point.len() });
        }
        let field = self.field();
        for c in point {
            if !c.in_field(field) {
                return Err(PolyError::FieldMismatch(c.field().to_string(), field.to_string()));
            }
        }
        let mut acc = Coeff::zero(field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.pairs() {
                t = t.mul(&point[i].pow(e as u128));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Evaluates at a point in an extension (or reduction) of the coefficient field.
    pub fn evaluate_in(&self, point: &[Coeff]) -> Result<Coeff, PolyError> {
        let Some(first) = point.first() else {
            return Ok(self.constant_term());
        };
        let target = first.field();
        self.change_field(&target)?.evaluate(point)
    }

    /// Moves coefficients into another field: reduction `Q -> F_p` or the
    /// embedding `F_p -> F_{p^k}`.
    pub fn change_field(&self, field: &Field) -> Result<Poly, PolyError> {
        if self.field() == field {
            return Ok(self.clone());
        }
        let ring = self.ring.with_field(field.clone());
        self.to_ring(&ring, &(0..self.ring.nvars()).collect::<Vec<_>>())
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `map[i]`.
    pub fn to_ring(&self, target: &Arc<Ring>, map: &[usize]) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.remap(map), c.embed(target.field())?);
        }
        Ok(out)
    }

    /// Same polynomial viewed in a ring with more (or renamed) variables,
    /// matching variables by name.
    pub fn to_ring_by_name(&self, target: &Arc<Ring>) -> Result<Poly, PolyError> {
        let map = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| PolyError::UnknownVariable(n.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        self.to_ring(target, &map)
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Keeps only terms passing `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient, landing in `target`.
    pub fn map_coeffs(&self, target: &Arc<Ring>, f: impl Fn(&Coeff) -> Coeff) -> Poly {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

macro_rules! impl_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$checked(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

impl_op!(Add, add, try_add);
impl_op!(Sub, sub, try_sub);
impl_op!(Mul, mul, try_mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms().enumerate() {
            let (negative, mag) = c.signed_repr();
            let unit = mag == "1";
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !unit || m.is_one() {
                factors.push(mag);
            }
            for (i, e) in m.pairs() {
                if e == 1 {
                    factors.push(names[i].clone());
                } else {
                    factors.push(format!("{}^{}", names[i], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
