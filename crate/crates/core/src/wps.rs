//! Weighted projective spaces, their affine charts and fixed loci.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::poly::{Field, Monomial, Poly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WpsError {
    #[error("weights must be positive (coordinate '{0}')")]
    NonPositiveWeight(String),
    #[error("duplicate coordinate name '{0}'")]
    DuplicateName(String),
    #[error("{names} names for {weights} weights")]
    Length { names: usize, weights: usize },
    #[error("unknown coordinate '{0}'")]
    UnknownCoordinate(String),
    #[error("empty weighted projective space")]
    Empty,
}

/// `P(a_0, ..., a_n)` with named coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedSpace {
    names: Vec<String>,
    weights: Vec<u32>,
}

impl WeightedSpace {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, weights: Vec<u32>) -> Result<Self, WpsError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != weights.len() {
            return Err(WpsError::Length { names: names.len(), weights: weights.len() });
        }
        if names.is_empty() {
            return Err(WpsError::Empty);
        }
        for (i, n) in names.iter().enumerate() {
            if weights[i] == 0 {
                return Err(WpsError::NonPositiveWeight(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(WpsError::DuplicateName(n.clone()));
            }
        }
        Ok(WeightedSpace { names, weights })
    }

    /// Anonymous coordinates `x1, ..., xn`.
    pub fn from_weights(weights: &[u32]) -> Result<Self, WpsError> {
        WeightedSpace::new((1..=weights.len()).map(|i| format!("x{i}")), weights.to_vec())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Projective dimension.
    pub fn dimension(&self) -> usize {
        self.names.len() - 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weight_of(&self, name: &str) -> Option<u32> {
        self.index_of(name).map(|i| self.weights[i])
    }

    /// Weights sorted ascending; the isomorphism-relevant data for comparisons.
    pub fn sorted_weights(&self) -> Vec<u32> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }

    /// Polynomial ring on the coordinates.
    pub fn ring(&self, field: Field) -> Arc<Ring> {
        Ring::new(self.names.iter().cloned(), field)
    }

    /// Exponent vectors of all monomials of weighted degree `d`, in
    /// descending lexicographic order of exponents.
    pub fn monomials_of_weight(&self, d: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.len()];
        self.knapsack(0, d, &mut exps, &mut out);
        out
    }

    fn knapsack(&self, i: usize, rest: u64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.len() {
            if rest == 0 {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let w = self.weights[i] as u64;
        let max = rest / w;
        for e in (0..=max).rev() {
            exps[i] = e as u32;
            self.knapsack(i + 1, rest - e * w, exps, out);
        }
        exps[i] = 0;
    }

    /// Ideal of the base locus of `|O(d)|`: all weight-`d` monomials. An
    /// empty list means the whole space is the base locus.
    pub fn base_locus_ideal(&self, d: u64, ring: &Arc<Ring>) -> Vec<Poly> {
        assert_eq!(ring.nvars(), self.len(), "ring does not match the space");
        self.monomials_of_weight(d)
            .into_iter()
            .map(|m| Poly::term(ring, m, crate::poly::Coeff::one(ring.field())))
            .collect()
    }

    /// The affine chart `{x != 0}` as the quotient of `{x = 1}` by `mu_alpha`.
    pub fn chart_of(&self, coordinate: &str) -> Result<Chart, WpsError> {
        let index = self.index_of(coordinate).ok_or_else(|| WpsError::UnknownCoordinate(coordinate.into()))?;
        Ok(self.chart_at(index))
    }

    pub fn chart_at(&self, index: usize) -> Chart {
        let alpha = self.weights[index];
        let others = (0..self.len()).filter(|&i| i != index).collect::<Vec<_>>();
        Chart {
            coordinate: self.names[index].clone(),
            index,
            alpha,
            names: others.iter().map(|&i| self.names[i].clone()).collect(),
            weights: others.iter().map(|&i| self.weights[i]).collect(),
            residuals: others.iter().map(|&i| self.weights[i] % alpha).collect(),
            ambient_indices: others,
        }
    }

    /// Divisibility of weights by each prime; flags spaces that are not well formed.
    pub fn well_formed_report(&self) -> WellFormedReport {
        let max = self.weights.iter().copied().max().unwrap_or(1);
        let mut primes = Vec::new();
        for q in 2..=max {
            if !(2..q).take_while(|r| r * r <= q).all(|r| q % r != 0) {
                continue;
            }
            let coords: Vec<usize> = (0..self.len()).filter(|&i| self.weights[i].is_multiple_of(q)).collect();
            if coords.is_empty() {
                continue;
            }
            let missing = self.len() - coords.len();
            primes.push(PrimeDivisibility {
                prime: q,
                coordinates: coords.iter().map(|&i| self.names[i].clone()).collect(),
                weights: coords.iter().map(|&i| self.weights[i]).collect(),
                flagged: missing <= 1,
            });
        }
        let well_formed = primes.iter().all(|p| !p.flagged);
        WellFormedReport { primes, well_formed }
    }

    /// Adds a weight-1 coordinate (the projective cone).
    pub fn cone(&self, name: &str) -> Result<WeightedSpace, WpsError> {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        names.push(name.to_string());
        weights.push(1);
        WeightedSpace::new(names, weights)
    }

    /// Drops the named coordinates.
    pub fn without(&self, drop: &[String]) -> Result<WeightedSpace, WpsError> {
        for d in drop {
            if self.index_of(d).is_none() {
                return Err(WpsError::UnknownCoordinate(d.clone()));
            }
        }
        let keep: Vec<usize> = (0..self.len()).filter(|&i| !drop.contains(&self.names[i])).collect();
        WeightedSpace::new(keep.iter().map(|&i| self.names[i].clone()), keep.iter().map(|&i| self.weights[i]).collect())
    }
}

impl fmt::Display for WeightedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", format_weights(&self.sorted_weights()))
    }
}

impl fmt::Debug for WeightedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.names.iter().zip(&self.weights).map(|(n, w)| format!("{n}:{w}")).collect();
        write!(f, "P[{}]", parts.join(", "))
    }
}

/// Formats sorted weights with multiplicities, e.g. `(1,4,5^2,6)`.
pub fn format_weights(sorted: &[u32]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(sorted[i].to_string());
        } else {
            parts.push(format!("{}^{}", sorted[i], j - i));
        }
        i = j;
    }
    format!("({})", parts.join(","))
}

/// An affine chart of a weighted projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub coordinate: String,
    /// Index of the chart coordinate in the ambient space.
    pub index: usize,
    /// Weight of the chart coordinate; the chart is `A^n / mu_alpha`.
    pub alpha: u32,
    /// Remaining coordinates in declared order.
    pub names: Vec<String>,
    pub weights: Vec<u32>,
    /// `weights[i] mod alpha`.
    pub residuals: Vec<u32>,
    /// Ambient index of each remaining coordinate.
    pub ambient_indices: Vec<usize>,
}

impl Chart {
    pub fn residual_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| self.residuals[i])
    }

    /// Positive divisors of `alpha` greater than 1, ascending.
    pub fn subgroup_orders(&self) -> Vec<u32> {
        (2..=self.alpha).filter(|d| self.alpha.is_multiple_of(*d)).collect()
    }

    /// For each subgroup order `d > 1`, the coordinate subspace fixed by
    /// `mu_d`: the coordinates whose weight is not divisible by `d` vanish.
    pub fn fixed_loci(&self) -> Vec<FixedLocus> {
        self.subgroup_orders()
            .into_iter()
            .map(|d| {
                let (free, vanishing): (Vec<usize>, Vec<usize>) =
                    (0..self.names.len()).partition(|&i| self.weights[i].is_multiple_of(d));
                FixedLocus { order: d, vanishing, free }
            })
            .collect()
    }

    pub fn fixed_locus(&self, d: u32) -> Option<FixedLocus> {
        self.fixed_loci().into_iter().find(|f| f.order == d)
    }
}

/// The fixed subspace of `mu_d` on a chart, as chart-coordinate indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedLocus {
    pub order: u32,
    /// Chart coordinates forced to vanish.
    pub vanishing: Vec<usize>,
    /// Chart coordinates left free.
    pub free: Vec<usize>,
}

impl FixedLocus {
    pub fn free_names<'a>(&self, chart: &'a Chart) -> Vec<&'a str> {
        self.free.iter().map(|&i| chart.names[i].as_str()).collect()
    }

    /// Whether the locus is just the chart origin.
    pub fn is_origin(&self) -> bool {
        self.free.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeDivisibility {
    pub prime: u32,
    pub coordinates: Vec<String>,
    pub weights: Vec<u32>,
    /// The prime divides all weights, or all but one.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellFormedReport {
    pub primes: Vec<PrimeDivisibility>,
    pub well_formed: bool,
}

impl WellFormedReport {
    pub fn flagged_primes(&self) -> Vec<u32> {
        self.primes.iter().filter(|p| p.flagged).map(|p| p.prime).collect()
    }
}
