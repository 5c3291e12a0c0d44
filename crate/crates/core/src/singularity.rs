//! Cyclic quotient singularities: types, baskets, and local classification
//! of points on affine charts of quasi-homogeneous varieties.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::ideals::{groebner, jacobian, minors, Budget, IdealError, PointSet};
use crate::linalg;
use crate::poly::{Coeff, Field, Monomial, MonomialOrder, Poly, PolyError, Ring, UniPoly};
use crate::wps::{Chart, WeightedSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SingularityError {
    #[error("cannot parse quotient type '{0}'")]
    ParseType(String),
    #[error("cannot parse basket '{0}'")]
    ParseBasket(String),
    #[error("{0} is not a surface type 1/r(b,r-b)")]
    NotSurfaceType(String),
    #[error("point is not on the variety: {0}")]
    NotOnVariety(String),
    #[error("rank {rank} exceeds the codimension {codim}; the declared dimension is wrong")]
    DimensionMismatch { rank: usize, codim: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Other(String),
}

/// `1/r(a_1, ..., a_k)`: weights reduced mod `r` and sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientType {
    pub order: u32,
    pub weights: Vec<u32>,
}

impl QuotientType {
    pub fn new(order: u32, weights: &[u32]) -> QuotientType {
        let mut w: Vec<u32> = weights.iter().map(|x| x % order).collect();
        w.sort_unstable();
        QuotientType { order, weights: w }
    }

    /// Pair of weights summing to the order, if any.
    fn antipodal_pair(&self) -> Option<(usize, usize)> {
        let n = self.weights.len();
        for i in 0..n {
            for j in i + 1..n {
                if (self.weights[i] + self.weights[j]).is_multiple_of(self.order) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `1/r(b, r-b)` with `b` coprime to `r`.
    pub fn is_surface_type(&self) -> bool {
        self.weights.len() == 2
            && self.weights[0] > 0
            && self.weights[0] + self.weights[1] == self.order
            && self.weights[0].gcd(&self.order) == 1
    }

    /// Terminal 3-fold type `1/r(1, b, r-b)` up to a change of generator.
    pub fn is_terminal_threefold(&self) -> bool {
        self.reid_form().is_some()
    }

    /// Surface `1/r(b, r-b)` to the 3-fold type `1/r(1, b, r-b)`.
    pub fn promote(&self) -> Result<QuotientType, SingularityError> {
        if !self.is_surface_type() {
            return Err(SingularityError::NotSurfaceType(self.to_string()));
        }
        Ok(QuotientType::new(self.order, &[1, self.weights[0], self.weights[1]]))
    }

    /// Inverse of [`promote`](Self::promote): drop the weight-1 direction.
    pub fn demote(&self) -> Option<QuotientType> {
        if self.weights.len() != 3 {
            return None;
        }
        let (i, j) = self.antipodal_pair()?;
        let k = 3 - i - j;
        (self.weights[k] == 1).then(|| QuotientType::new(self.order, &[self.weights[i], self.weights[j]]))
    }

    /// `(r, b)` with the type equal to `1/r(1, -1, b)` after a change of generator.
    pub fn reid_form(&self) -> Option<(u32, u32)> {
        if self.weights.len() != 3 || self.order < 2 {
            return None;
        }
        let r = self.order as i64;
        let (i, j) = self.antipodal_pair()?;
        let c = self.weights[3 - i - j] as i64;
        let a = self.weights[i] as i64;
        let g = a.extended_gcd(&r);
        if g.gcd != 1 || c.gcd(&r) != 1 {
            return None;
        }
        let a_inv = g.x.rem_euclid(r);
        Some((self.order, (c * a_inv).rem_euclid(r) as u32))
    }

    /// Same singularity after a change of primitive root.
    pub fn isomorphic(&self, other: &QuotientType) -> bool {
        if self.order != other.order || self.weights.len() != other.weights.len() {
            return false;
        }
        (1..self.order.max(2)).filter(|k| k.gcd(&self.order) == 1).any(|k| {
            let scaled: Vec<u32> = self.weights.iter().map(|w| w * k).collect();
            QuotientType::new(self.order, &scaled) == *other
        })
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        write!(f, "1/{}({})", self.order, w.join(","))
    }
}

impl fmt::Debug for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QuotientType {
    type Err = SingularityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SingularityError::ParseType(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = t.strip_prefix("1/").ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let order: u32 = rest[..open].parse().map_err(|_| bad())?;
        let inner = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let weights: Vec<u32> = inner.split(',').map(|x| x.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
        if order < 2 || weights.is_empty() || weights.iter().any(|&w| w == 0 || w >= order) {
            return Err(bad());
        }
        Ok(QuotientType::new(order, &weights))
    }
}

/// Multiset of quotient singularities.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basket(pub BTreeMap<QuotientType, u32>);

impl Basket {
    pub fn add(&mut self, q: QuotientType, count: u32) {
        if count > 0 {
            *self.0.entry(q).or_insert(0) += count;
        }
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One entry per point.
    pub fn expanded(&self) -> Vec<QuotientType> {
        self.0.iter().flat_map(|(q, &n)| std::iter::repeat_n(q.clone(), n as usize)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&QuotientType, u32)> {
        self.0.iter().map(|(q, &n)| (q, n))
    }

    /// Entries in `self` but not `other` and vice versa, with multiplicity.
    pub fn difference(&self, other: &Basket) -> (Basket, Basket) {
        let mut only_self = Basket::default();
        let mut only_other = Basket::default();
        for (q, &n) in &self.0 {
            let m = other.0.get(q).copied().unwrap_or(0);
            if n > m {
                only_self.add(q.clone(), n - m);
            }
        }
        for (q, &m) in &other.0 {
            let n = self.0.get(q).copied().unwrap_or(0);
            if m > n {
                only_other.add(q.clone(), m - n);
            }
        }
        (only_self, only_other)
    }

    /// Equal up to isomorphism of each point (change of generator).
    pub fn isomorphic(&self, other: &Basket) -> bool {
        let mut rest = other.expanded();
        for q in self.expanded() {
            match rest.iter().position(|r| r.isomorphic(&q)) {
                Some(i) => {
                    rest.remove(i);
                }
                None => return false,
            }
        }
        rest.is_empty()
    }

    /// Parses `{2x1/4(1,1,3), 1/6(1,1,5)}`; `×` and `*` also work as the multiplier sign.
    pub fn parse(s: &str) -> Result<Basket, SingularityError> {
        let bad = || SingularityError::ParseBasket(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(bad)?;
        let mut b = Basket::default();
        if inner.is_empty() {
            return Ok(b);
        }
        // Split on commas outside parentheses.
        let mut depth = 0;
        let mut items = Vec::new();
        let mut cur = String::new();
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    items.push(std::mem::take(&mut cur));
                    continue;
                }
                _ => {}
            }
            cur.push(c);
        }
        items.push(cur);
        for item in items {
            let (count, ty) = match item.find(['x', '×', '*']) {
                Some(i) if item[..i].chars().all(|c| c.is_ascii_digit()) && i > 0 => {
                    let sep = item[i..].chars().next().unwrap().len_utf8();
                    (item[..i].parse::<u32>().map_err(|_| bad())?, &item[i + sep..])
                }
                _ => (1, item.as_str()),
            };
            b.add(ty.parse()?, count);
        }
        Ok(b)
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(q, &n)| if n == 1 { q.to_string() } else { format!("{n}x{q}") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Promotes surface findings to the 3-fold basket.
pub fn assemble_basket(findings: &[(QuotientType, u32)]) -> Result<Basket, SingularityError> {
    let mut b = Basket::default();
    for (q, n) in findings {
        b.add(q.promote()?, *n);
    }
    Ok(b)
}

/// For `1/r(1, b, r-b)` (or `1/r(b, r-b)`): some ambient weight is `b` or `r-b` mod `r`.
pub fn residue_check(q: &QuotientType, weights: &[u32]) -> bool {
    let r = q.order;
    let Some((i, j)) = q.antipodal_pair() else {
        return false;
    };
    let wanted = [q.weights[i], q.weights[j]];
    weights.iter().any(|w| wanted.contains(&(w % r)))
}

/// A chart slice `{x = 1}` of a quasi-homogeneous affine cone, restricted
/// to a stratum where some chart coordinates vanish.
#[derive(Clone, Debug)]
pub struct ChartSystem {
    pub chart: Chart,
    pub ring: Arc<Ring>,
    pub equations: Vec<Poly>,
    /// Chart coordinates set to zero on this stratum (not equations of the variety).
    pub zero: Vec<usize>,
    /// Dimension of the slice.
    pub local_dimension: usize,
}

impl ChartSystem {
    /// Restricts `equations` (in the ring of `ambient`) to the chart of `coordinate`.
    pub fn new(ambient: &WeightedSpace, equations: &[Poly], coordinate: &str, zero: &[String], local_dimension: usize) -> Result<ChartSystem, SingularityError> {
        let chart = ambient.chart_of(coordinate).map_err(|e| SingularityError::Other(e.to_string()))?;
        let field = equations.first().map(|e| e.field().clone()).ok_or_else(|| SingularityError::Other("no equations".into()))?;
        let ring = Ring::new(chart.names.iter().cloned(), field);
        let mut images = Vec::with_capacity(ambient.len());
        for i in 0..ambient.len() {
            if i == chart.index {
                images.push(Poly::one(&ring));
            } else {
                let k = chart.ambient_indices.iter().position(|&a| a == i).expect("chart index");
                images.push(Poly::var(&ring, k));
            }
        }
        let eqs: Vec<Poly> = equations.iter().map(|e| e.compose(&ring, &images)).collect::<Result<_, _>>()?;
        let zero = zero
            .iter()
            .map(|n| chart.names.iter().position(|c| c == n).ok_or_else(|| SingularityError::Other(format!("'{n}' is not a chart coordinate"))))
            .collect::<Result<_, _>>()?;
        Ok(ChartSystem { chart, ring, equations: eqs.into_iter().filter(|e| !e.is_zero()).collect(), zero, local_dimension })
    }

    fn zero_polys(&self) -> Vec<Poly> {
        self.zero.iter().map(|&i| Poly::var(&self.ring, i)).collect()
    }
}

/// Solves away equations of the form `c*x + g` with `x` absent from `g`,
/// substituting into the remaining equations and into `extra`.
pub fn eliminate_linear(eqs: &[Poly], extra: &[Poly]) -> (Vec<Poly>, Vec<Poly>, Vec<usize>) {
    let mut eqs: Vec<Poly> = eqs.to_vec();
    let mut extra: Vec<Poly> = extra.to_vec();
    let mut gone = Vec::new();
    loop {
        let mut found = None;
        'search: for (k, e) in eqs.iter().enumerate() {
            for v in e.variables() {
                let lin = Monomial::var(v);
                let c = e.coeff(&lin);
                if c.is_zero() {
                    continue;
                }
                if e.terms().filter(|(m, _)| m.contains_var(v)).count() == 1 {
                    found = Some((k, v, c));
                    break 'search;
                }
            }
        }
        let Some((k, v, c)) = found else { break };
        let e = eqs.remove(k);
        let ring = e.ring().clone();
        let rest = &e - &Poly::term(&ring, Monomial::var(v), c.clone());
        let image = rest.scale(&c.inv().expect("nonzero").neg());
        let sub = |p: &Poly| p.substitute(&[(v, image.clone())]).expect("same ring");
        eqs = eqs.iter().map(sub).filter(|p| !p.is_zero()).collect();
        extra = extra.iter().map(sub).collect();
        gone.push(v);
    }
    (eqs, extra, gone)
}

/// Smoothness of a chart slice along its stratum.
#[derive(Clone, Debug)]
pub enum Smoothness {
    Smooth,
    /// Singular locus on the stratum has the given dimension; points when finite.
    Singular { dimension: usize, points: Option<PointSet> },
    Inconclusive(String),
}

/// Jacobian criterion on the slice, after eliminating linearly solvable coordinates.
pub fn check_smooth(sys: &ChartSystem, budget: &Budget) -> Smoothness {
    let (eqs, zero, gone) = eliminate_linear(&sys.equations, &sys.zero_polys());
    let vars: Vec<usize> = (0..sys.ring.nvars()).filter(|v| !gone.contains(v)).collect();
    let Some(codim) = vars.len().checked_sub(sys.local_dimension) else {
        return Smoothness::Inconclusive("slice has fewer coordinates than its dimension".into());
    };
    let jac = jacobian(&eqs, &vars);
    let mins = match minors(&jac, codim, &sys.ring, budget.max_minors) {
        Ok(m) => m,
        Err(e) => return Smoothness::Inconclusive(e.to_string()),
    };
    let mut gens = eqs.clone();
    gens.extend(zero.clone());
    gens.extend(mins);
    let gb = match groebner(&sys.ring, &gens, MonomialOrder::DegRevLex, budget) {
        Ok(g) => g,
        Err(e) => return Smoothness::Inconclusive(e.to_string()),
    };
    if gb.is_unit() {
        return Smoothness::Smooth;
    }
    // Eliminated coordinates are determined by the others; their generators are absent
    // from the basis, so measure dimension on the remaining variables.
    let mut with_gone = gb.polys();
    for &v in &gone {
        with_gone.push(Poly::var(&sys.ring, v));
    }
    let dim = groebner(&sys.ring, &with_gone, MonomialOrder::DegRevLex, budget).ok().and_then(|g| g.dimension()).unwrap_or(0);
    let points = if dim == 0 { crate::ideals::solve_zero_dimensional(&sys.ring, &gb.polys(), budget).ok() } else { None };
    Smoothness::Singular { dimension: dim, points }
}

/// Equations translated so that a point sits at the origin.
#[derive(Clone, Debug)]
pub struct LocalizedSystem {
    pub ring: Arc<Ring>,
    /// Ambient weight of each local coordinate.
    pub weights: Vec<u32>,
    /// Order of the stabilizer of the point.
    pub order: u32,
    pub equations: Vec<Poly>,
    pub local_dimension: usize,
}

/// Translates the chart equations to `point` (coordinates in any extension of the base).
pub fn localize(sys: &ChartSystem, point: &[Coeff]) -> Result<LocalizedSystem, SingularityError> {
    let field = point.first().map(Coeff::field).unwrap_or_else(|| sys.ring.field().clone());
    let ring = sys.ring.with_field(field.clone());
    let shifted: Vec<Poly> = (0..ring.nvars())
        .map(|i| &Poly::var(&ring, i) + &Poly::constant(&ring, point[i].clone()))
        .collect();
    let mut eqs = Vec::with_capacity(sys.equations.len());
    for e in &sys.equations {
        let lifted = e.change_field(&field)?;
        let t = lifted.to_ring(&ring, &(0..ring.nvars()).collect::<Vec<_>>())?.compose(&ring, &shifted)?;
        if !t.constant_term().is_zero() {
            return Err(SingularityError::NotOnVariety(format!("{e} does not vanish")));
        }
        eqs.push(t);
    }
    Ok(LocalizedSystem { ring, weights: sys.chart.weights.clone(), order: stabilizer_order(&sys.chart, point), equations: eqs, local_dimension: sys.local_dimension })
}

/// `gcd(alpha, w_i : x_i != 0)`: the order of the stabilizer in `mu_alpha`.
pub fn stabilizer_order(chart: &Chart, point: &[Coeff]) -> u32 {
    point
        .iter()
        .zip(&chart.weights)
        .filter(|(c, _)| !c.is_zero())
        .fold(chart.alpha, |g, (_, &w)| g.gcd(&w))
}

/// The `alpha` points of the slice `{x = 1}` over a projective point with
/// `x != 0`: `lambda^{w_i} x_i` for every root of `lambda^alpha = 1/x`.
/// Prime-field points may move to an extension of degree at most 4; points
/// already in an extension stay in their field.
pub fn lift_point(chart: &Chart, point: &[Coeff]) -> Result<Vec<Vec<Coeff>>, SingularityError> {
    let x = point.get(chart.index).ok_or_else(|| SingularityError::Other("point has too few coordinates".into()))?;
    let inv = x.inv().ok_or_else(|| SingularityError::Other(format!("{} vanishes at the point", chart.coordinate)))?;
    let base = x.field();
    let candidates: Vec<Field> = if x.is_base() && base.degree() == 1 {
        (1..=crate::poly::MAX_EXTENSION_DEGREE).map(|k| Field::finite(base.characteristic(), k)).collect::<Result<_, _>>()?
    } else {
        vec![base]
    };
    for field in candidates {
        let c = inv.embed(&field)?;
        let mut coeffs = vec![Coeff::zero(&field); chart.alpha as usize + 1];
        coeffs[0] = c.neg();
        coeffs[chart.alpha as usize] = Coeff::one(&field);
        let roots = UniPoly::new(&field, coeffs).roots()?;
        if roots.len() < chart.alpha as usize {
            continue;
        }
        let lifts = roots
            .iter()
            .map(|l| {
                chart
                    .ambient_indices
                    .iter()
                    .zip(&chart.weights)
                    .map(|(&i, &w)| Ok(l.pow(w as u128).mul(&point[i].embed(&field)?)))
                    .collect::<Result<Vec<_>, SingularityError>>()
            })
            .collect::<Result<_, _>>()?;
        return Ok(lifts);
    }
    Err(SingularityError::Other(format!("no {}-th root of 1/{x} in extensions of degree <= 4; resample", chart.alpha)))
}

/// Outcome of a local linear-part classification.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LpcOutcome {
    Smooth,
    Quotient { singularity: QuotientType },
    NotQuasiSmooth { corank: usize },
    /// Complement weights include a residue not coprime to the order.
    Degenerate { order: u32, weights: Vec<u32> },
}

impl fmt::Display for LpcOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpcOutcome::Smooth => write!(f, "smooth"),
            LpcOutcome::Quotient { singularity } => write!(f, "{singularity}"),
            LpcOutcome::NotQuasiSmooth { corank } => write!(f, "not quasi-smooth (corank {corank})"),
            LpcOutcome::Degenerate { order, weights } => write!(f, "degenerate 1/{order}{weights:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpcResult {
    pub rank: usize,
    /// Local coordinates chosen to complement the linear parts.
    pub complement: Vec<String>,
    pub outcome: LpcOutcome,
}

/// Rank of the linear parts, then a complement of coordinates chosen by
/// ascending residual weight (ties in declared order); the residues of the
/// complement give the type.
pub fn lpc_classify(sys: &LocalizedSystem) -> Result<LpcResult, SingularityError> {
    let n = sys.ring.nvars();
    let field = sys.ring.field().clone();
    let mut rows: Vec<Vec<Coeff>> = Vec::new();
    for e in &sys.equations {
        if !e.constant_term().is_zero() {
            return Err(SingularityError::NotOnVariety(e.to_string()));
        }
        let row: Vec<Coeff> = (0..n).map(|j| e.coeff(&Monomial::var(j))).collect();
        if row.iter().any(|c| !c.is_zero()) {
            rows.push(row);
        }
    }
    let rank = linalg::rank(&rows);
    let codim = n.checked_sub(sys.local_dimension).ok_or_else(|| SingularityError::Other("dimension exceeds coordinates".into()))?;
    if rank > codim {
        return Err(SingularityError::DimensionMismatch { rank, codim });
    }
    if rank < codim {
        return Ok(LpcResult { rank, complement: Vec::new(), outcome: LpcOutcome::NotQuasiSmooth { corank: codim - rank } });
    }
    let s = sys.order.max(1);
    let mut cand: Vec<usize> = (0..n).collect();
    cand.sort_by_key(|&j| (sys.weights[j] % s, j));
    let mut chosen = Vec::new();
    let mut current = rows.clone();
    let mut current_rank = rank;
    for j in cand {
        if chosen.len() == sys.local_dimension {
            break;
        }
        let mut unit = vec![Coeff::zero(&field); n];
        unit[j] = Coeff::one(&field);
        current.push(unit);
        let r = linalg::rank(&current);
        if r > current_rank {
            current_rank = r;
            chosen.push(j);
        } else {
            current.pop();
        }
    }
    let complement = chosen.iter().map(|&j| sys.ring.names()[j].clone()).collect();
    let residues: Vec<u32> = chosen.iter().map(|&j| sys.weights[j] % s).collect();
    let outcome = if s == 1 {
        LpcOutcome::Smooth
    } else if residues.iter().all(|&w| w != 0 && w.gcd(&s) == 1) {
        LpcOutcome::Quotient { singularity: QuotientType::new(s, &residues) }
    } else {
        LpcOutcome::Degenerate { order: s, weights: residues }
    };
    Ok(LpcResult { rank, complement, outcome })
}

/// Points sharing a stabilizer order and local type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointClass {
    pub order: u32,
    pub outcome: LpcOutcome,
    /// Points on the chart slice (each projective point has `alpha/order` of them).
    pub affine_points: usize,
    /// Points of the projective variety.
    pub points: usize,
    /// Residue-field degrees of the Frobenius orbits found.
    pub field_degrees: Vec<usize>,
    pub sample: String,
}

/// All points with nontrivial stabilizer on one stratum of one chart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub chart: String,
    pub alpha: u32,
    pub classes: Vec<FixedPointClass>,
    /// Subgroup orders whose fixed locus meets the stratum in positive dimension.
    pub non_isolated: Vec<u32>,
    /// Some geometric points were not found (residue degree above 4).
    pub incomplete: bool,
}

impl Census {
    /// Quotient findings as `(type, number of points)`.
    pub fn findings(&self) -> Vec<(QuotientType, u32)> {
        self.classes
            .iter()
            .filter_map(|c| match &c.outcome {
                LpcOutcome::Quotient { singularity } => Some((singularity.clone(), c.points as u32)),
                _ => None,
            })
            .collect()
    }

    pub fn count_of_order(&self, d: u32) -> usize {
        self.classes.iter().filter(|c| c.order == d).map(|c| c.points).sum()
    }
}

fn point_string(ring: &Ring, pt: &[Coeff]) -> String {
    let parts: Vec<String> = ring.names().iter().zip(pt).filter(|(_, c)| !c.is_zero()).map(|(n, c)| format!("{n}={c}")).collect();
    if parts.is_empty() {
        "origin".into()
    } else {
        parts.join(",")
    }
}

/// Finds every point of the stratum fixed by a nontrivial subgroup of
/// `mu_alpha` and classifies it.
pub fn fixed_point_census(sys: &ChartSystem, budget: &Budget) -> Result<Census, SingularityError> {
    let chart = &sys.chart;
    let mut census = Census { chart: chart.coordinate.clone(), alpha: chart.alpha, ..Census::default() };
    let mut orders = chart.subgroup_orders();
    orders.reverse();
    let mut acc: BTreeMap<(u32, LpcOutcome), (usize, Vec<usize>, String)> = BTreeMap::new();
    for d in orders {
        let locus = chart.fixed_locus(d).expect("divisor");
        let mut gens = sys.equations.clone();
        gens.extend(sys.zero_polys());
        gens.extend(locus.vanishing.iter().map(|&i| Poly::var(&sys.ring, i)));
        let gb = groebner(&sys.ring, &gens, MonomialOrder::DegRevLex, budget)?;
        if gb.is_unit() {
            continue;
        }
        if !gb.is_zero_dimensional() {
            census.non_isolated.push(d);
            continue;
        }
        let pts = crate::ideals::solve_zero_dimensional(&sys.ring, &gb.polys(), budget)?;
        if !pts.complete() {
            census.incomplete = true;
        }
        for orbit in &pts.orbits {
            let s = stabilizer_order(chart, &orbit.coords);
            if s != d {
                continue;
            }
            let local = localize(sys, &orbit.coords)?;
            let res = lpc_classify(&local)?;
            let entry = acc.entry((s, res.outcome)).or_insert_with(|| (0, Vec::new(), point_string(&sys.ring, &orbit.coords)));
            entry.0 += orbit.degree;
            entry.1.push(orbit.degree);
        }
    }
    for ((order, outcome), (affine, mut degrees, sample)) in acc {
        let orbit = (chart.alpha / order) as usize;
        if affine % orbit != 0 {
            return Err(SingularityError::Other(format!(
                "{affine} slice points of stabilizer {order} do not form mu_{} orbits",
                chart.alpha
            )));
        }
        degrees.sort_unstable();
        census.classes.push(FixedPointClass { order, outcome, affine_points: affine, points: affine / orbit, field_degrees: degrees, sample });
    }
    census.non_isolated.sort_unstable();
    Ok(census)
}

/// Number of `1/2(1,1)`-type points (stabilizer exactly 2) on the stratum.
pub fn half_point_count(sys: &ChartSystem, budget: &Budget) -> Result<usize, SingularityError> {
    Ok(fixed_point_census(sys, budget)?.count_of_order(2))
}
