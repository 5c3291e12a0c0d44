//! Ideals: Groebner bases, emptiness and dimension tests, Jacobian criteria
//! and point enumeration for zero-dimensional schemes.

mod groebner;
mod jacobian;
mod solve;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::poly::{MonomialOrder, Poly, Ring};

pub use groebner::{groebner, GroebnerBasis};
pub use jacobian::{jacobian, minors, singular_locus_ideal, subsets};
pub use solve::{distinct_point_count, solve_zero_dimensional, PointOrbit, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("computation budget exceeded: {0}")]
    Budget(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("{0}")]
    Ring(String),
}

/// Resource caps for Groebner computations. Exceeding any cap makes the
/// answer inconclusive instead of partial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_minors: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 200_000, max_basis: 5_000, max_degree: 200, max_minors: 20_000 }
    }
}

/// Three-valued answer for predicates that may run out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    True,
    False,
    Inconclusive,
}

impl Answer {
    pub fn from_bool(b: bool) -> Answer {
        if b {
            Answer::True
        } else {
            Answer::False
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::True => "true",
            Answer::False => "false",
            Answer::Inconclusive => "inconclusive",
        })
    }
}

/// Finitely generated ideal in a polynomial ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Poly>) -> Ideal {
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn with(&self, more: impl IntoIterator<Item = Poly>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(more);
        Ideal { ring: self.ring.clone(), gens }
    }

    pub fn groebner(&self, order: MonomialOrder, budget: &Budget) -> Result<GroebnerBasis, IdealError> {
        groebner(&self.ring, &self.gens, order, budget)
    }

    /// The variety over the algebraic closure is empty, i.e. the basis is `{1}`.
    pub fn is_empty(&self, budget: &Budget) -> Answer {
        match self.groebner(MonomialOrder::DegRevLex, budget) {
            Ok(gb) => Answer::from_bool(gb.is_unit()),
            Err(_) => Answer::Inconclusive,
        }
    }

    pub fn is_zero_dimensional(&self, budget: &Budget) -> Answer {
        match self.groebner(MonomialOrder::DegRevLex, budget) {
            Ok(gb) => Answer::from_bool(gb.is_zero_dimensional()),
            Err(_) => Answer::Inconclusive,
        }
    }

    /// Empty or finite.
    pub fn is_at_most_zero_dimensional(&self, budget: &Budget) -> Answer {
        match self.groebner(MonomialOrder::DegRevLex, budget) {
            Ok(gb) => Answer::from_bool(gb.is_unit() || gb.is_zero_dimensional()),
            Err(_) => Answer::Inconclusive,
        }
    }

    pub fn contains(&self, f: &Poly, budget: &Budget) -> Answer {
        match self.groebner(MonomialOrder::DegRevLex, budget) {
            Ok(gb) => Answer::from_bool(gb.contains(f)),
            Err(_) => Answer::Inconclusive,
        }
    }

    /// Generators of the elimination ideal `I ∩ k[remaining variables]`,
    /// expressed in the original ring.
    pub fn eliminate(&self, vars: &[usize], budget: &Budget) -> Result<Vec<Poly>, IdealError> {
        let n = self.ring.nvars();
        // Reorder so the eliminated variables come first.
        let mut order: Vec<usize> = vars.to_vec();
        order.extend((0..n).filter(|v| !vars.contains(v)));
        let names: Vec<String> = order.iter().map(|&i| self.ring.names()[i].clone()).collect();
        let tmp = Ring::new(names, self.ring.field().clone());
        let mut to_tmp = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            to_tmp[old] = new;
        }
        let gens: Vec<Poly> = self.gens.iter().map(|g| g.to_ring(&tmp, &to_tmp)).collect::<Result<_, _>>().map_err(|e| IdealError::Ring(e.to_string()))?;
        let gb = groebner(&tmp, &gens, MonomialOrder::Elimination { block: vars.len() }, budget)?;
        let back: Vec<usize> = order.clone();
        gb.polys()
            .into_iter()
            .filter(|p| p.variables().iter().all(|&v| v >= vars.len()))
            .map(|p| p.to_ring(&self.ring, &back).map_err(|e| IdealError::Ring(e.to_string())))
            .collect()
    }

    pub fn points(&self, budget: &Budget) -> Result<PointSet, IdealError> {
        solve_zero_dimensional(&self.ring, &self.gens, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, Field};

    fn ideal(field: Field, names: &[&str], eqs: &[&str]) -> Ideal {
        let r = Ring::new(names.iter().copied(), field);
        let g = eqs.iter().map(|e| parse_poly(&r, e).unwrap()).collect();
        Ideal::new(&r, g)
    }

    #[test]
    fn membership_over_q() {
        let i = ideal(Field::Rational, &["x", "y"], &["x^2 + y^2 - 1", "x - y"]);
        let f = parse_poly(i.ring(), "2*y^2 - 1").unwrap();
        assert_eq!(i.contains(&f, &Budget::default()), Answer::True);
        let g = parse_poly(i.ring(), "y^2 - 1").unwrap();
        assert_eq!(i.contains(&g, &Budget::default()), Answer::False);
    }

    #[test]
    fn unit_and_nonempty() {
        let b = Budget::default();
        assert_eq!(ideal(Field::Rational, &["x"], &["x", "x^2 + 1"]).is_empty(&b), Answer::True);
        assert_eq!(ideal(Field::Prime(7), &["x"], &["x^2 + 1"]).is_empty(&b), Answer::False);
    }

    #[test]
    fn zero_dimensionality() {
        let b = Budget::default();
        let i = ideal(Field::Prime(7), &["x", "y"], &["x^2 - 1", "y^3 - y"]);
        assert_eq!(i.is_zero_dimensional(&b), Answer::True);
        let gb = i.groebner(MonomialOrder::DegRevLex, &b).unwrap();
        assert_eq!(gb.standard_monomials().unwrap().len(), 6);
        let umbrella = ideal(Field::Rational, &["x", "y", "z"], &["x^2 - y^2*z"]);
        assert_eq!(umbrella.is_zero_dimensional(&b), Answer::False);
        assert_eq!(umbrella.groebner(MonomialOrder::DegRevLex, &b).unwrap().dimension(), Some(2));
    }

    #[test]
    fn budget_gives_inconclusive() {
        let tight = Budget { max_pairs: 1, ..Budget::default() };
        let i = ideal(Field::Prime(101), &["x", "y", "z"], &["x^2 + y*z + 1", "y^2 + x*z + 2", "z^2 + x*y + 3"]);
        assert_eq!(i.is_empty(&tight), Answer::Inconclusive);
    }

    #[test]
    fn elimination() {
        let i = ideal(Field::Rational, &["t", "x", "y"], &["x - t^2", "y - t^3"]);
        let e = i.eliminate(&[0], &Budget::default()).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].to_string(), "x^3 - y^2");
    }

    #[test]
    fn lex_basis_shape() {
        let i = ideal(Field::Rational, &["x", "y"], &["x^2 + y^2 - 1", "x - y"]);
        let gb = i.groebner(MonomialOrder::Lex, &Budget::default()).unwrap();
        let polys: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(polys, vec!["y^2 - 1/2", "x - y"]);
    }
}
