//! Text formats for key varieties, class records with their section
//! tables, and verification reports; ingestion and cross-validation.
//!
//! Everything is TOML tagged with [`FORMAT`]. The shipped dataset is
//! compiled into the library and can be overridden by a directory with the
//! same layout (`keys.toml` plus `classes/*.toml`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::poly::{identifiers, parse_poly, Field, Poly, Ring};
use crate::singularity::{Basket, QuotientType};
use crate::wps::{format_weights, WeightedSpace};

pub const FORMAT: &str = "fanokit/1";

/// Environment variable naming an alternative dataset directory.
pub const DATA_ENV: &str = "FANOKIT_DATA";

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("{file}: {msg}")]
    Parse { file: String, msg: String },
    #[error("{file}: unsupported format tag '{found}' (expected '{FORMAT}')")]
    Format { file: String, found: String },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Generators and grading of a key variety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyDescriptor {
    pub name: String,
    pub description: String,
    /// Dimension of the projective key variety.
    pub dimension: usize,
    pub coordinates: Vec<String>,
    /// Named gradings; each entry is a weight expression in `d` per coordinate.
    /// Keys without gradings take their weights from each class record.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub gradings: BTreeMap<String, Vec<String>>,
    /// Key whose equations this one reuses (projective cones).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_of: Option<String>,
    /// Polynomial `b` whose zero locus on X must be a prime divisor.
    pub witness: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<String>,
    /// Defining equations; absent in the shipped data and supplied by the user.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equations: Vec<String>,
    /// Hilbert numerator, e.g. `1 - 9*t^2 + ...`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_locus_dimension: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyFile {
    pub format: String,
    #[serde(rename = "key")]
    pub keys: Vec<KeyDescriptor>,
}

/// Which variety a section row cuts: X itself, the weight-one hyperplane
/// section T, or (when `h^0(O(1)) = 2`) the curve C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    X,
    T,
    C,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::X => "X",
            Level::T => "T",
            Level::C => "C",
        })
    }
}

/// `coordinate = rhs`, where `rhs` has the row weight. The literal
/// `generic` expands to every monomial of that weight with fresh parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub weight: u32,
    pub coordinate: String,
    pub rhs: String,
    pub level: Level,
}

pub const GENERIC: &str = "generic";

/// Linear change of coordinates applied to the key before the rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordinateChange {
    /// Old coordinates and their images in the new ones.
    pub replaces: Vec<String>,
    pub new: Vec<String>,
    pub images: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Embedding {
    pub level: Level,
    pub coordinates: Vec<String>,
    /// Weights as printed in the source table; absent when the source gives no embedding.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<Vec<u32>>,
    /// Known misprint: the corrected weights and an explanation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Erratum {
    pub corrected: Vec<u32>,
    pub note: String,
}

/// A point type the source text reports on one stratum of the chart plan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Finding {
    /// A chart coordinate of the plan, or `rest` for the locus where all vanish.
    pub stratum: String,
    pub count: u32,
    pub singularity: String,
}

/// Candidate record plus section table for one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassRecord {
    pub format: String,
    pub number: u32,
    pub key: String,
    /// Weights of the key coordinates when the key has no gradings; 0 marks an affine parameter.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub key_weights: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    /// Weights of the ambient of X.
    pub ambient: Vec<u32>,
    pub basket: String,
    /// `(a_i, m_i)`: X is cut by `m_i` sections of weight `a_i`.
    pub profile: Vec<(u32, u32)>,
    pub parameters: Vec<String>,
    /// Parameter count in the source, if printed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter_count: Option<usize>,
    /// Parameters outside the printed count (coordinate changes, quadratic forms).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_parameters: Vec<String>,
    /// Charts analysed in order; the remaining coordinates cover the rest.
    pub charts: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinate_change: Option<CoordinateChange>,
    pub embedding: Embedding,
    pub rows: Vec<Row>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dataset {
    pub keys: Vec<KeyDescriptor>,
    /// Sorted by class number.
    pub classes: Vec<ClassRecord>,
}

const BUILTIN_KEYS: &str = include_str!("../../../data/keys.toml");

macro_rules! builtin_classes {
    ($($n:literal),* $(,)?) => {
        &[$(($n, include_str!(concat!("../../../data/classes/No", $n, ".toml")))),*]
    };
}

const BUILTIN_CLASSES: &[(&str, &str)] = builtin_classes!(
    "308", "360", "393", "501", "512", "550", "569", "574", "577", "642", "644", "872", "878", "1091", "1181", "1185",
    "1186", "1218", "1253", "1413", "1766", "2422", "4850", "4938", "5202", "5859", "5866", "6860", "6865", "11004",
    "16227",
);

fn parse_toml<T: for<'de> Deserialize<'de>>(file: &str, text: &str) -> Result<T, DataError> {
    toml::from_str(text).map_err(|e| DataError::Parse { file: file.to_string(), msg: e.to_string() })
}

fn check_format(file: &str, tag: &str) -> Result<(), DataError> {
    if tag != FORMAT {
        return Err(DataError::Format { file: file.to_string(), found: tag.to_string() });
    }
    Ok(())
}

pub fn parse_keys(file: &str, text: &str) -> Result<Vec<KeyDescriptor>, DataError> {
    let k: KeyFile = parse_toml(file, text)?;
    check_format(file, &k.format)?;
    Ok(k.keys)
}

pub fn parse_class(file: &str, text: &str) -> Result<ClassRecord, DataError> {
    let c: ClassRecord = parse_toml(file, text)?;
    check_format(file, &c.format)?;
    Ok(c)
}

/// Canonical text of a key file.
pub fn keys_to_string(keys: &[KeyDescriptor]) -> String {
    toml::to_string(&KeyFile { format: FORMAT.into(), keys: keys.to_vec() }).expect("serializable")
}

pub fn class_to_string(c: &ClassRecord) -> String {
    toml::to_string(c).expect("serializable")
}

/// Replaces equations (and optionally numerator and parameters) of a key with
/// those in a user file: a TOML table with `key`, `parameters`, `equations`
/// and optionally `numerator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyEquations {
    pub format: String,
    pub key: String,
    #[serde(default)]
    pub parameters: Vec<String>,
    pub equations: Vec<String>,
    #[serde(default)]
    pub numerator: Option<String>,
}

impl Dataset {
    pub fn builtin() -> Dataset {
        let keys = parse_keys("keys.toml", BUILTIN_KEYS).expect("shipped keys parse");
        let mut classes: Vec<ClassRecord> = BUILTIN_CLASSES
            .iter()
            .map(|(n, t)| parse_class(&format!("No{n}.toml"), t).expect("shipped class parses"))
            .collect();
        classes.sort_by_key(|c| c.number);
        Dataset { keys, classes }
    }

    /// Reads `dir/keys.toml` and `dir/classes/*.toml`; equation files in
    /// `dir/equations/*.toml` are merged into their keys.
    pub fn load(dir: &Path) -> Result<Dataset, DataError> {
        let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| DataError::Io(p.display().to_string(), e));
        let kp = dir.join("keys.toml");
        let mut keys = parse_keys(&kp.display().to_string(), &read(&kp)?)?;
        let mut classes = Vec::new();
        for p in sorted_toml_files(&dir.join("classes"))? {
            classes.push(parse_class(&p.display().to_string(), &read(&p)?)?);
        }
        classes.sort_by_key(|c| c.number);
        let eq_dir = dir.join("equations");
        if eq_dir.is_dir() {
            for p in sorted_toml_files(&eq_dir)? {
                let e: KeyEquations = parse_toml(&p.display().to_string(), &read(&p)?)?;
                check_format(&p.display().to_string(), &e.format)?;
                merge_equations(&mut keys, e)?;
            }
        }
        Ok(Dataset { keys, classes })
    }

    /// `FANOKIT_DATA` if set, else the built-in data.
    pub fn from_env() -> Result<Dataset, DataError> {
        match std::env::var_os(DATA_ENV) {
            Some(d) => Dataset::load(Path::new(&d)),
            None => Ok(Dataset::builtin()),
        }
    }

    /// Writes the canonical form; `load` of the result reproduces `self`.
    pub fn save(&self, dir: &Path) -> Result<(), DataError> {
        let io = |p: &Path, e| DataError::Io(p.display().to_string(), e);
        let cdir = dir.join("classes");
        std::fs::create_dir_all(&cdir).map_err(|e| io(&cdir, e))?;
        let kp = dir.join("keys.toml");
        std::fs::write(&kp, keys_to_string(&self.keys)).map_err(|e| io(&kp, e))?;
        for c in &self.classes {
            let p = cdir.join(format!("No{}.toml", c.number));
            std::fs::write(&p, class_to_string(c)).map_err(|e| io(&p, e))?;
        }
        Ok(())
    }

    pub fn key(&self, name: &str) -> Option<&KeyDescriptor> {
        self.keys.iter().find(|k| k.name == name)
    }

    pub fn class(&self, number: u32) -> Option<&ClassRecord> {
        self.classes.iter().find(|c| c.number == number)
    }

    /// Equations of a key, following `cone_of`.
    pub fn key_equations(&self, key: &KeyDescriptor) -> (Vec<String>, Vec<String>) {
        let mut k = key;
        let mut seen = 0;
        while k.equations.is_empty() && seen < 8 {
            match k.cone_of.as_deref().and_then(|n| self.key(n)) {
                Some(base) => k = base,
                None => break,
            }
            seen += 1;
        }
        (k.equations.clone(), k.parameters.clone())
    }

    pub fn merge_equations(&mut self, e: KeyEquations) -> Result<(), DataError> {
        merge_equations(&mut self.keys, e)
    }
}

fn merge_equations(keys: &mut [KeyDescriptor], e: KeyEquations) -> Result<(), DataError> {
    let k = keys
        .iter_mut()
        .find(|k| k.name == e.key)
        .ok_or_else(|| DataError::Invalid(format!("equations for unknown key '{}'", e.key)))?;
    k.equations = e.equations;
    k.parameters = e.parameters;
    if e.numerator.is_some() {
        k.numerator = e.numerator;
    }
    Ok(())
}

fn sorted_toml_files(dir: &Path) -> Result<Vec<PathBuf>, DataError> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| DataError::Io(dir.display().to_string(), e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    out.sort();
    Ok(out)
}

/// Evaluates `d`, `d+k`, `d-k` or an integer.
pub fn eval_weight(expr: &str, d: Option<i64>) -> Result<i64, DataError> {
    let e: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(n) = e.parse::<i64>() {
        return Ok(n);
    }
    let bad = || DataError::Invalid(format!("bad weight expression '{expr}'"));
    let rest = e.strip_prefix('d').ok_or_else(bad)?;
    let d = d.ok_or_else(|| DataError::Invalid(format!("weight '{expr}' needs a value of d")))?;
    if rest.is_empty() {
        return Ok(d);
    }
    let (sign, num) = match rest.split_at(1) {
        ("+", n) => (1, n),
        ("-", n) => (-1, n),
        _ => return Err(bad()),
    };
    Ok(d + sign * num.parse::<i64>().map_err(|_| bad())?)
}

/// Key coordinates of a class after any coordinate change, with weights
/// (0 for affine parameters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedKey {
    pub names: Vec<String>,
    pub weights: Vec<u32>,
}

impl ResolvedKey {
    pub fn weight_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| self.weights[i])
    }

    /// Projective coordinates only.
    pub fn space(&self) -> Result<WeightedSpace, DataError> {
        let (n, w): (Vec<_>, Vec<_>) = self.names.iter().zip(&self.weights).filter(|(_, &w)| w > 0).map(|(n, &w)| (n.clone(), w)).unzip();
        WeightedSpace::new(n, w).map_err(|e| DataError::Invalid(e.to_string()))
    }

    pub fn affine(&self) -> Vec<String> {
        self.names.iter().zip(&self.weights).filter(|(_, &w)| w == 0).map(|(n, _)| n.clone()).collect()
    }
}

/// Key coordinates and weights before the coordinate change.
pub fn original_key_weights(key: &KeyDescriptor, class: &ClassRecord) -> Result<Vec<u32>, DataError> {
    let ctx = |m: String| DataError::Invalid(format!("No.{}: {m}", class.number));
    let weights: Vec<u32> = if key.gradings.is_empty() {
        class.key_weights.clone().ok_or_else(|| ctx(format!("key {} needs key_weights", key.name)))?
    } else {
        let g = class.grading.as_deref().ok_or_else(|| ctx(format!("key {} needs a grading", key.name)))?;
        let exprs = key.gradings.get(g).ok_or_else(|| ctx(format!("unknown grading '{g}'")))?;
        exprs
            .iter()
            .map(|e| {
                let w = eval_weight(e, class.d)?;
                u32::try_from(w).map_err(|_| ctx(format!("negative weight {w} from '{e}'")))
            })
            .collect::<Result<_, _>>()?
    };
    if weights.len() != key.coordinates.len() {
        return Err(ctx(format!("{} weights for {} key coordinates", weights.len(), key.coordinates.len())));
    }
    Ok(weights)
}

pub fn resolve_key(key: &KeyDescriptor, class: &ClassRecord) -> Result<ResolvedKey, DataError> {
    let mut names = key.coordinates.clone();
    let weights = original_key_weights(key, class)?;
    if let Some(ch) = &class.coordinate_change {
        if ch.replaces.len() != ch.new.len() || ch.new.len() != ch.images.len() {
            return Err(DataError::Invalid(format!("No.{}: coordinate change lists differ in length", class.number)));
        }
        for (old, new) in ch.replaces.iter().zip(&ch.new) {
            let i = names
                .iter()
                .position(|n| n == old)
                .ok_or_else(|| DataError::Invalid(format!("No.{}: coordinate change replaces unknown '{old}'", class.number)))?;
            if names.contains(new) {
                return Err(DataError::Invalid(format!("No.{}: new coordinate '{new}' already exists", class.number)));
            }
            names[i] = new.clone();
        }
    }
    Ok(ResolvedKey { names, weights })
}

/// Coordinates eliminated by rows of level at most `level`.
pub fn eliminated(class: &ClassRecord, level: Level) -> Vec<String> {
    class.rows.iter().filter(|r| r.level <= level).map(|r| r.coordinate.clone()).collect()
}

/// Ambient of the variety at `level` (X, T or C).
pub fn ambient_at(key: &ResolvedKey, class: &ClassRecord, level: Level) -> Result<WeightedSpace, DataError> {
    key.space()?.without(&eliminated(class, level)).map_err(|e| DataError::Invalid(format!("No.{}: {e}", class.number)))
}

/// Fresh parameter names for a `generic` row.
pub fn generic_parameters(row: &Row, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g_{}_{}", row.coordinate, i)).collect()
}

/// Text of a row's RHS with `generic` expanded over the coordinates left by all rows.
pub fn expand_rhs(key: &ResolvedKey, class: &ClassRecord, row: &Row) -> Result<(String, Vec<String>), DataError> {
    if row.rhs.trim() != GENERIC {
        return Ok((row.rhs.clone(), Vec::new()));
    }
    let last = class.rows.iter().map(|r| r.level).max().unwrap_or(Level::X);
    let space = ambient_at(key, class, last)?;
    let monos = space.monomials_of_weight(row.weight as u64);
    let params = generic_parameters(row, monos.len());
    let ring = space.ring(Field::Rational);
    let terms: Vec<String> = monos
        .iter()
        .zip(&params)
        .map(|(m, p)| format!("{p}*{}", Poly::term(&ring, m.clone(), crate::poly::Coeff::one(ring.field()))))
        .collect();
    Ok((if terms.is_empty() { "0".into() } else { terms.join(" + ") }, params))
}

/// All names a class's polynomials may mention, in a fixed order.
pub fn class_ring_names(key: &KeyDescriptor, resolved: &ResolvedKey, class: &ClassRecord) -> Result<Vec<String>, DataError> {
    let mut names = resolved.names.clone();
    if let Some(ch) = &class.coordinate_change {
        names.extend(ch.replaces.iter().cloned());
    }
    let mut extra: BTreeSet<String> = key.parameters.iter().cloned().collect();
    extra.extend(class.parameters.iter().cloned());
    extra.extend(class.extra_parameters.iter().cloned());
    for row in &class.rows {
        extra.extend(expand_rhs(resolved, class, row)?.1);
    }
    for e in extra {
        if !names.contains(&e) {
            names.push(e);
        }
    }
    Ok(names)
}

/// Outcome of [`validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub records: usize,
    pub errors: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.errors.is_empty()
    }
}

/// Schema-level and cross-reference checks on one class.
pub fn validate_class(data: &Dataset, class: &ClassRecord) -> Vec<String> {
    let mut errs = Vec::new();
    let tag = format!("No.{}", class.number);
    let Some(key) = data.key(&class.key) else {
        return vec![format!("{tag}: unknown key '{}'", class.key)];
    };
    let resolved = match resolve_key(key, class) {
        Ok(r) => r,
        Err(e) => return vec![e.to_string()],
    };
    let names = match class_ring_names(key, &resolved, class) {
        Ok(n) => n,
        Err(e) => return vec![e.to_string()],
    };
    let ring = Ring::new(names.clone(), Field::Rational);
    // Weights with parameters and affine coordinates in degree 0.
    let mut weights = vec![0u32; names.len()];
    for (i, n) in names.iter().enumerate() {
        weights[i] = resolved.weight_of(n).unwrap_or(0);
    }
    let affine = resolved.affine();
    let params: BTreeSet<&String> = class.parameters.iter().chain(&class.extra_parameters).chain(&key.parameters).chain(&affine).collect();
    let mut used: BTreeSet<String> = BTreeSet::new();

    // Profile law.
    let sum: u32 = class.profile.iter().map(|p| p.1).sum();
    if key.dimension < 3 || sum as usize != key.dimension - 3 {
        errs.push(format!("{tag}: profile multiplicities sum to {sum}, but the key has dimension {}", key.dimension));
    }
    if class.profile.windows(2).any(|w| w[0].0 >= w[1].0) || class.profile.iter().any(|p| p.0 == 0 || p.1 == 0) {
        errs.push(format!("{tag}: profile degrees must be positive and strictly increasing"));
    }
    let mut x_weights: BTreeMap<u32, u32> = BTreeMap::new();
    for r in class.rows.iter().filter(|r| r.level == Level::X) {
        *x_weights.entry(r.weight).or_insert(0) += 1;
    }
    let profile: BTreeMap<u32, u32> = class.profile.iter().copied().collect();
    if x_weights != profile {
        errs.push(format!("{tag}: X-level rows {x_weights:?} do not match the profile {profile:?}"));
    }

    // Coordinate change images.
    if let Some(ch) = &class.coordinate_change {
        for (old, img) in ch.replaces.iter().zip(&ch.images) {
            let w = key.coordinates.iter().position(|c| c == old).map(|i| original_key_weights(key, class).map(|ws| ws[i]));
            match (w, parse_poly(&ring, img)) {
                (Some(Ok(w)), Ok(p)) => {
                    if !p.is_quasi_homogeneous_of(&weights, w as u64) {
                        errs.push(format!("{tag}: coordinate change image '{img}' is not of weight {w}"));
                    }
                    if ch.replaces.iter().any(|r| ring.index_of(r).is_some_and(|i| p.contains_var(i))) {
                        errs.push(format!("{tag}: coordinate change image '{img}' uses a replaced coordinate"));
                    }
                }
                (_, Err(e)) => errs.push(format!("{tag}: coordinate change '{img}': {e}")),
                _ => errs.push(format!("{tag}: coordinate change replaces unknown '{old}'")),
            }
            used.extend(identifiers(img).unwrap_or_default());
        }
    }

    // Rows.
    let mut seen = BTreeSet::new();
    let elim: BTreeSet<&String> = class.rows.iter().map(|r| &r.coordinate).collect();
    for row in &class.rows {
        match resolved.weight_of(&row.coordinate) {
            None => errs.push(format!("{tag}: row eliminates unknown coordinate '{}'", row.coordinate)),
            Some(0) => errs.push(format!("{tag}: row eliminates the affine parameter '{}'", row.coordinate)),
            Some(w) if w != row.weight => errs.push(format!("{tag}: {} has weight {w}, listed in the weight-{} row", row.coordinate, row.weight)),
            _ => {}
        }
        if !seen.insert(&row.coordinate) {
            errs.push(format!("{tag}: '{}' is eliminated twice", row.coordinate));
        }
        let (rhs, _) = match expand_rhs(&resolved, class, row) {
            Ok(r) => r,
            Err(e) => {
                errs.push(e.to_string());
                continue;
            }
        };
        if let Err(e) = check_rhs(&ring, &weights, row, &rhs, &elim, &params) {
            errs.push(format!("{tag}: {e}"));
        }
        used.extend(identifiers(&rhs).unwrap_or_default());
    }
    if let Some(n) = class.parameter_count {
        if n != class.parameters.len() {
            errs.push(format!("{tag}: {} parameters declared, {n} printed", class.parameters.len()));
        }
    }
    for p in class.parameters.iter().chain(&class.extra_parameters) {
        if !used.contains(p) {
            errs.push(format!("{tag}: parameter '{p}' is never used"));
        }
    }

    // Ambient of X.
    match ambient_at(&resolved, class, Level::X) {
        Ok(s) => {
            let mut want = class.ambient.clone();
            want.sort_unstable();
            if s.sorted_weights() != want {
                errs.push(format!("{tag}: ambient {} differs from the record P{}", s, format_weights(&want)));
            }
        }
        Err(e) => errs.push(e.to_string()),
    }
    if Basket::parse(&class.basket).is_err() {
        errs.push(format!("{tag}: cannot parse basket '{}'", class.basket));
    }
    let strata: BTreeSet<&str> = class.charts.iter().map(String::as_str).chain(["rest"]).collect();
    for f in &class.findings {
        if !strata.contains(f.stratum.as_str()) {
            errs.push(format!("{tag}: finding on unknown stratum '{}'", f.stratum));
        }
        if f.singularity.parse::<QuotientType>().is_err() {
            errs.push(format!("{tag}: cannot parse finding '{}'", f.singularity));
        }
    }
    match ambient_at(&resolved, class, Level::T) {
        Ok(t) => {
            for c in &class.charts {
                if t.index_of(c).is_none() {
                    errs.push(format!("{tag}: chart '{c}' is not a coordinate of T"));
                }
            }
        }
        Err(e) => errs.push(e.to_string()),
    }
    if let Some(printed) = &class.embedding.printed {
        if class.embedding.coordinates.len() != printed.len() {
            errs.push(format!("{tag}: embedding lists {} coordinates and {} weights", class.embedding.coordinates.len(), printed.len()));
        }
    }
    if let Err(e) = parse_poly(&Ring::new(resolved.names.clone(), Field::Rational), &key.witness) {
        errs.push(format!("{tag}: witness '{}' does not parse over the key coordinates: {e}", key.witness));
    }
    errs
}

fn check_rhs(ring: &Arc<Ring>, weights: &[u32], row: &Row, rhs: &str, elim: &BTreeSet<&String>, params: &BTreeSet<&String>) -> Result<(), String> {
    let p = parse_poly(ring, rhs).map_err(|e| format!("row {} = {rhs}: {e}", row.coordinate))?;
    if !p.is_zero() && !p.is_quasi_homogeneous_of(weights, row.weight as u64) {
        return Err(format!("row {} = {rhs} is not of weight {}", row.coordinate, row.weight));
    }
    for id in identifiers(rhs).unwrap_or_default() {
        if elim.contains(&id) {
            return Err(format!("row {} = {rhs} uses the eliminated coordinate {id}", row.coordinate));
        }
    }
    // Every weight-0 identifier must be a declared parameter or affine coordinate.
    for id in identifiers(rhs).unwrap_or_default() {
        let i = ring.index_of(&id).expect("parsed");
        if weights[i] == 0 && !params.contains(&id) && !row.rhs.contains(GENERIC) {
            return Err(format!("row {} uses undeclared parameter {id}", row.coordinate));
        }
    }
    Ok(())
}

/// Checks every class and the key table.
pub fn validate(data: &Dataset) -> ValidationReport {
    let mut errors = Vec::new();
    let mut names = BTreeSet::new();
    for k in &data.keys {
        if !names.insert(&k.name) {
            errors.push(format!("key '{}' listed twice", k.name));
        }
        for (g, ws) in &k.gradings {
            if ws.len() != k.coordinates.len() {
                errors.push(format!("key {}: grading {g} has {} weights for {} coordinates", k.name, ws.len(), k.coordinates.len()));
            }
        }
        if let Some(base) = &k.cone_of {
            if data.key(base).is_none() {
                errors.push(format!("key {}: cone of unknown key '{base}'", k.name));
            }
        }
    }
    let mut numbers = BTreeSet::new();
    for c in &data.classes {
        if !numbers.insert(c.number) {
            errors.push(format!("No.{} listed twice", c.number));
        }
        errors.extend(validate_class(data, c));
    }
    ValidationReport { records: data.classes.len(), errors }
}
