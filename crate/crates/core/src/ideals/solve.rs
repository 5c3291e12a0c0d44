//! Points of zero-dimensional ideals over finite fields.
//!
//! Points are searched in `F_{p^k}` for `k = 1..=4` by fixing one coordinate
//! at a time through the minimal polynomial of that coordinate in the
//! quotient algebra. The number of distinct geometric points is known in
//! advance from the length of the radical, so the search can report
//! whether it found everything.

use std::collections::HashMap;
use std::sync::Arc;

use crate::linalg;
use crate::poly::{Coeff, Field, Monomial, MonomialOrder, Poly, Ring, UniPoly, MAX_EXTENSION_DEGREE};

use super::groebner::{groebner, GroebnerBasis};
use super::{Budget, IdealError};

/// Frobenius orbit of geometric points, given by one representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointOrbit {
    /// Size of the orbit, i.e. the degree of the residue field.
    pub degree: usize,
    pub coords: Vec<Coeff>,
}

#[derive(Clone, Debug)]
pub struct PointSet {
    pub orbits: Vec<PointOrbit>,
    /// Dimension of the quotient algebra (points with multiplicity).
    pub length: usize,
    /// Number of distinct geometric points, from the trace form.
    pub distinct: usize,
}

impl PointSet {
    /// Geometric points accounted for by the orbits found.
    pub fn found(&self) -> usize {
        self.orbits.iter().map(|o| o.degree).sum()
    }

    /// Every geometric point was found.
    pub fn complete(&self) -> bool {
        self.found() == self.distinct
    }

    /// The scheme is reduced (no multiple points).
    pub fn reduced(&self) -> bool {
        self.length == self.distinct
    }
}

fn vector_of(p: &Poly, index: &HashMap<Monomial, usize>, dim: usize, field: &Field) -> Vec<Coeff> {
    let mut v = vec![Coeff::zero(field); dim];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Number of distinct geometric points of a zero-dimensional ideal: the
/// length of its radical, obtained by adding the squarefree part of each
/// coordinate's minimal polynomial (Seidenberg's lemma; F_p is perfect).
pub fn distinct_point_count(gb: &GroebnerBasis, budget: &Budget) -> Result<usize, IdealError> {
    let basis = gb.standard_monomials().ok_or(IdealError::NotZeroDimensional)?;
    let ring = gb.ring().clone();
    let mut extra = Vec::new();
    for v in 0..ring.nvars() {
        let mp = minimal_polynomial(gb, &basis, v);
        let rad = mp.squarefree();
        if rad.degree() < mp.degree() {
            let terms = rad.coeffs().iter().enumerate().map(|(i, c)| (Monomial::var_pow(v, i as u32), c.clone()));
            extra.push(Poly::from_terms(&ring, terms.collect::<Vec<_>>()));
        }
    }
    if extra.is_empty() {
        return Ok(basis.len());
    }
    let mut gens = gb.polys();
    gens.extend(extra);
    let radical = groebner(&ring, &gens, gb.order(), budget)?;
    radical.standard_monomials().map(|b| b.len()).ok_or(IdealError::NotZeroDimensional)
}

/// Minimal polynomial of variable `v` in the quotient algebra.
fn minimal_polynomial(gb: &GroebnerBasis, basis: &[Monomial], v: usize) -> UniPoly {
    let ring = gb.ring().clone();
    let field = ring.field().clone();
    let dim = basis.len();
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let x = Poly::var(&ring, v);
    let mut powers: Vec<Vec<Coeff>> = Vec::new();
    let mut cur = gb.normal_form(&Poly::one(&ring));
    loop {
        let vec = vector_of(&cur, &index, dim, &field);
        if let Some(c) = linalg::solve_combination(&powers, &vec, &field) {
            // x^j = sum c_i x^i  =>  minimal polynomial x^j - sum c_i x^i
            let mut coeffs: Vec<Coeff> = c.iter().map(Coeff::neg).collect();
            coeffs.push(Coeff::one(&field));
            return UniPoly::new(&field, coeffs);
        }
        powers.push(vec);
        cur = gb.normal_form(&(&cur * &x));
    }
}

fn search(ring: &Arc<Ring>, gens: &[Poly], fixed: &mut Vec<Option<Coeff>>, budget: &Budget, out: &mut Vec<Vec<Coeff>>) -> Result<(), IdealError> {
    let gb = groebner(ring, gens, MonomialOrder::DegRevLex, budget)?;
    if gb.is_unit() {
        return Ok(());
    }
    let Some(v) = fixed.iter().position(Option::is_none) else {
        out.push(fixed.iter().map(|c| c.clone().expect("fixed")).collect());
        return Ok(());
    };
    let basis = gb.standard_monomials().ok_or(IdealError::NotZeroDimensional)?;
    let mp = minimal_polynomial(&gb, &basis, v);
    for r in mp.roots().map_err(|e| IdealError::Ring(e.to_string()))? {
        let mut next: Vec<Poly> = gb.polys();
        next.push(&Poly::var(ring, v) - &Poly::constant(ring, r.clone()));
        fixed[v] = Some(r);
        search(ring, &next, fixed, budget, out)?;
        fixed[v] = None;
    }
    Ok(())
}

fn frobenius_point(pt: &[Coeff]) -> Vec<Coeff> {
    pt.iter().map(Coeff::frobenius).collect()
}

fn point_key(pt: &[Coeff]) -> String {
    pt.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Geometric points of the zero-dimensional ideal `gens` over a prime field,
/// grouped into Frobenius orbits of size at most 4.
pub fn solve_zero_dimensional(ring: &Arc<Ring>, gens: &[Poly], budget: &Budget) -> Result<PointSet, IdealError> {
    let p = match ring.field() {
        Field::Prime(p) => *p,
        f => return Err(IdealError::Ring(format!("point search needs a prime field, got {f}"))),
    };
    let gb = groebner(ring, gens, MonomialOrder::DegRevLex, budget)?;
    if gb.is_unit() {
        return Ok(PointSet { orbits: Vec::new(), length: 0, distinct: 0 });
    }
    let basis = gb.standard_monomials().ok_or(IdealError::NotZeroDimensional)?;
    let length = basis.len();
    let distinct = distinct_point_count(&gb, budget)?;
    let mut orbits: Vec<PointOrbit> = Vec::new();
    for k in 1..=MAX_EXTENSION_DEGREE {
        if orbits.iter().map(|o| o.degree).sum::<usize>() >= distinct {
            break;
        }
        let field = Field::finite(p, k).map_err(|e| IdealError::Ring(e.to_string()))?;
        let ext_ring = ring.with_field(field.clone());
        let lifted: Vec<Poly> = gb
            .polys()
            .iter()
            .map(|g| g.change_field(&field))
            .collect::<Result<_, _>>()
            .map_err(|e| IdealError::Ring(e.to_string()))?;
        let mut pts = Vec::new();
        search(&ext_ring, &lifted, &mut vec![None; ring.nvars()], budget, &mut pts)?;
        let mut seen: Vec<String> = Vec::new();
        for pt in pts {
            // Minimal degree j: smallest j with Frob^j(pt) = pt.
            let mut img = frobenius_point(&pt);
            let mut orbit = vec![pt.clone()];
            while img != pt {
                orbit.push(img.clone());
                img = frobenius_point(&img);
            }
            if orbit.len() != k {
                continue;
            }
            let rep = orbit.iter().min_by_key(|q| point_key(q)).expect("nonempty").clone();
            let key = point_key(&rep);
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            orbits.push(PointOrbit { degree: k, coords: rep });
        }
    }
    Ok(PointSet { orbits, length, distinct })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn sys(field: Field, names: &[&str], eqs: &[&str]) -> (Arc<Ring>, Vec<Poly>) {
        let r = Ring::new(names.iter().copied(), field);
        let g = eqs.iter().map(|e| parse_poly(&r, e).unwrap()).collect();
        (r, g)
    }

    #[test]
    fn six_rational_points() {
        let (r, g) = sys(Field::Prime(7), &["x", "y"], &["x^2 - 1", "y^3 - y"]);
        let s = solve_zero_dimensional(&r, &g, &Budget::default()).unwrap();
        assert_eq!(s.distinct, 6);
        assert!(s.complete());
        assert!(s.orbits.iter().all(|o| o.degree == 1));
    }

    #[test]
    fn conjugate_pair() {
        let (r, g) = sys(Field::Prime(7), &["x"], &["x^2 + 1"]);
        let s = solve_zero_dimensional(&r, &g, &Budget::default()).unwrap();
        assert_eq!(s.orbits.len(), 1);
        assert_eq!(s.orbits[0].degree, 2);
        assert_eq!(s.found(), 2);
    }

    #[test]
    fn multiplicity_detected() {
        let (r, g) = sys(Field::Prime(101), &["x", "y"], &["x^2", "y - x"]);
        let s = solve_zero_dimensional(&r, &g, &Budget::default()).unwrap();
        assert_eq!(s.length, 2);
        assert_eq!(s.distinct, 1);
        assert!(!s.reduced() && s.complete());
    }

    #[test]
    fn large_prime_cubic_extension() {
        let p = 2147483647;
        // The modulus of the cubic extension is irreducible over F_p.
        let f = Field::finite(p, 3).unwrap();
        let Field::Extension(e) = &f else { unreachable!() };
        let m: Vec<String> = e.modulus().iter().enumerate().map(|(i, c)| format!("{c}*x^{i}")).collect();
        let (r, g) = sys(Field::Prime(p), &["x", "y"], &[&m.join(" + "), "y - x^2"]);
        let s = solve_zero_dimensional(&r, &g, &Budget::default()).unwrap();
        assert_eq!(s.distinct, 3);
        assert!(s.complete());
        assert_eq!(s.orbits.len(), 1);
        assert_eq!(s.orbits[0].degree, 3);
    }
}
