//! Building X, T and intermediate varieties from a key and a section table.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dataio::{self, ClassRecord, Dataset, Level};
use crate::poly::{parse_poly, Field, Poly, Ring};
use crate::wps::WeightedSpace;

use super::PipelineError;

/// Default characteristic: a prime below `2^31` congruent to 1 modulo
/// `lcm(1..=14)`, so every root of unity of order at most 14 is rational.
pub const DEFAULT_PRIME: u64 = 2_147_024_881;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub prime: u64,
    pub seed: u64,
    /// Keep only the linear terms of each row (used for LPC at the top-weight point).
    pub truncate_rhs: bool,
    /// Apply only rows of weight at most this bound.
    pub max_weight: Option<u32>,
}

impl BuildOptions {
    pub fn new(prime: u64, seed: u64) -> BuildOptions {
        BuildOptions { prime, seed, truncate_rhs: false, max_weight: None }
    }
}

/// A quasi-homogeneous variety in a weighted projective space, over `F_p`.
#[derive(Clone, Debug)]
pub struct Variety {
    pub space: WeightedSpace,
    pub ring: Arc<Ring>,
    pub equations: Vec<Poly>,
    /// Projective dimension.
    pub dimension: usize,
    /// The key's primality witness, carried through the substitutions.
    pub witness: Option<Poly>,
}

/// Specialization of every weight-0 name to a random nonzero constant,
/// drawn in sorted-name order from a seeded generator.
pub fn specialize(names: &[String], zero_weight: &dyn Fn(&str) -> bool, field: &Field, seed: u64) -> BTreeMap<String, crate::poly::Coeff> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sorted: Vec<&String> = names.iter().filter(|n| zero_weight(n)).collect();
    sorted.sort();
    sorted.into_iter().map(|n| (n.clone(), field.random_nonzero(&mut rng))).collect()
}

/// Which rows go into a variety: those tagged at most `level`, and of weight
/// at most the bound when one is given.
fn applied_rows(class: &ClassRecord, level: Level, max_weight: Option<u32>) -> Vec<&dataio::Row> {
    class.rows.iter().filter(|r| r.level <= level && max_weight.is_none_or(|b| r.weight <= b)).collect()
}

/// Substitutes the section rows into the key equations.
pub fn build(data: &Dataset, class: &ClassRecord, level: Level, opts: &BuildOptions) -> Result<Variety, PipelineError> {
    let key = data.key(&class.key).ok_or_else(|| PipelineError::Data(format!("unknown key '{}'", class.key)))?;
    let (eq_text, _) = data.key_equations(key);
    if eq_text.is_empty() {
        return Err(PipelineError::NoEquations(key.name.clone()));
    }
    let resolved = dataio::resolve_key(key, class)?;
    let names = dataio::class_ring_names(key, &resolved, class)?;
    let field = Field::prime(opts.prime).map_err(|e| PipelineError::Data(e.to_string()))?;
    let big = Ring::new(names.clone(), field.clone());
    let zero_weight = |n: &str| resolved.weight_of(n).is_none_or(|w| w == 0) && !class.coordinate_change.as_ref().is_some_and(|c| c.replaces.iter().any(|r| r == n));
    let values = specialize(&names, &zero_weight, &field, opts.seed);

    let mut images: Vec<Poly> = (0..big.nvars()).map(|i| Poly::var(&big, i)).collect();
    for (n, v) in &values {
        images[big.index_of(n).expect("name")] = Poly::constant(&big, v.clone());
    }
    let params_only = images.clone();
    let specialize_text = |text: &str| -> Result<Poly, PipelineError> { Ok(parse_poly(&big, text)?.compose(&big, &params_only)?) };
    if let Some(ch) = &class.coordinate_change {
        for (old, img) in ch.replaces.iter().zip(&ch.images) {
            images[big.index_of(old).expect("name")] = specialize_text(img)?;
        }
    }
    let rows = applied_rows(class, level, opts.max_weight);
    for row in &rows {
        let (rhs, _) = dataio::expand_rhs(&resolved, class, row)?;
        let mut p = specialize_text(&rhs)?;
        if opts.truncate_rhs {
            p = p.filter_terms(|m| m.degree() == 1);
        }
        images[big.index_of(&row.coordinate).expect("name")] = p;
    }
    // Images never mention eliminated or replaced names, so one pass suffices;
    // a second guards against data that chains them.
    let apply = |p: &Poly| -> Result<Poly, PipelineError> {
        let once = p.compose(&big, &images)?;
        Ok(once.compose(&big, &images)?)
    };

    let mut drop: Vec<String> = rows.iter().map(|r| r.coordinate.clone()).collect();
    drop.sort();
    let space = resolved.space()?.without(&drop).map_err(|e| PipelineError::Data(e.to_string()))?;
    let ring = space.ring(field.clone());
    let to_target = |p: Poly| -> Result<Poly, PipelineError> {
        for v in p.variables() {
            if ring.index_of(&big.names()[v]).is_none() {
                return Err(PipelineError::Data(format!("'{}' survives the substitutions", big.names()[v])));
            }
        }
        let map: Vec<usize> = big.names().iter().map(|n| ring.index_of(n).unwrap_or(0)).collect();
        Ok(p.to_ring(&ring, &map)?)
    };
    let mut equations = Vec::new();
    for text in &eq_text {
        let e = to_target(apply(&parse_poly(&big, text)?)?)?;
        if !e.is_zero() && !equations.contains(&e) {
            equations.push(e);
        }
    }
    let witness = match parse_poly(&big, &key.witness) {
        Ok(w) => Some(to_target(apply(&w)?)?),
        Err(_) => None,
    };
    Ok(Variety { space, ring, equations, dimension: key.dimension - rows.len(), witness })
}

/// Ambient of the variety at a level, without equations.
pub fn ambient(data: &Dataset, class: &ClassRecord, level: Level) -> Result<WeightedSpace, PipelineError> {
    let key = data.key(&class.key).ok_or_else(|| PipelineError::Data(format!("unknown key '{}'", class.key)))?;
    let resolved = dataio::resolve_key(key, class)?;
    Ok(dataio::ambient_at(&resolved, class, level)?)
}

/// X of the class.
pub fn build_x(data: &Dataset, class: &ClassRecord, opts: &BuildOptions) -> Result<Variety, PipelineError> {
    build(data, class, Level::X, opts)
}

/// T = X cut by the weight-one row.
pub fn build_t(data: &Dataset, class: &ClassRecord, opts: &BuildOptions) -> Result<Variety, PipelineError> {
    build(data, class, Level::T, opts)
}

/// The intermediate variety cut by rows of weight at most `bound`, up to T.
pub fn intermediate(data: &Dataset, class: &ClassRecord, bound: u32, opts: &BuildOptions) -> Result<Variety, PipelineError> {
    let o = BuildOptions { max_weight: Some(bound), ..opts.clone() };
    build(data, class, Level::T, &o)
}

/// Profile of T from that of X: one more weight-one cut.
pub fn derive_t_profile(profile: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out = profile.to_vec();
    match out.first_mut() {
        Some((1, m)) => *m += 1,
        _ => out.insert(0, (1, 1)),
    }
    out
}
