//! Acceptance suite. Runs without the libtest harness and prints one line
//! per criterion; exits non-zero if any required criterion fails.
//!
//! Criterion 9 needs key-variety equations that are not shipped. It runs
//! only when `FANOKIT_KEY_EQUATIONS` lists equation files (path-separated).

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use fanokit::dataio::{Dataset, KeyEquations, Level};
use fanokit::hilbert::{anticanonical_degree, genus, HilbertSeries};
use fanokit::ideals::{groebner, Budget, Ideal};
use fanokit::pipeline::{self, claim_c, derive_t_profile, ClaimCMode, Depth, Variety, Verdict, VerifyOptions, DEFAULT_PRIME};
use fanokit::poly::{parse_poly, Coeff, Field, Monomial, MonomialOrder, Poly, Ring};
use fanokit::singularity::{localize, lpc_classify, stabilizer_order, Basket, ChartSystem, LpcOutcome, QuotientType};
use fanokit::wps::WeightedSpace;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Equation degrees, ambient weights, a pure power `(variable, exponent)` per
/// equation, and the genus when checked.
type CiFixture = (Vec<u32>, Vec<u32>, Vec<(usize, u32)>, Option<i64>);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p >= 5` with `alpha | p - 1`, so `mu_alpha` is rational.
fn prime_for(alpha: u32) -> u64 {
    (5u64..).find(|&p| is_prime(p) && (p - 1) % alpha as u64 == 0).unwrap()
}

fn roots_of_unity(alpha: u32, p: u64) -> Vec<u64> {
    (1..p).filter(|&z| pow_mod(z, alpha as u64, p) == 1).collect()
}

fn primitive_root_of_unity(alpha: u32, p: u64) -> u64 {
    let all = roots_of_unity(alpha, p);
    *all.iter().find(|&&z| (1..alpha).all(|k| pow_mod(z, k as u64, p) != 1)).unwrap()
}

/// Every vector of `F_p^n`, as residues.
fn all_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(n as u32);
    (0..total).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = k % p;
                k /= p;
                d
            })
            .collect()
    })
}

fn coeffs(field: &Field, v: &[u64]) -> Vec<Coeff> {
    v.iter().map(|&c| Coeff::from_i64(field, c as i64)).collect()
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let data = Dataset::builtin();
    let numbers: Vec<u32> = data.classes.iter().map(|c| c.number).collect();
    let reports = pipeline::verify_all(&data, &numbers, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let sigma = data.classes.iter().filter(|c| c.key == "Sigma12").count();
    let pi = data.classes.iter().filter(|c| c.key.starts_with("Pi")).count();
    ensure(sigma == 23 && pi == 8, || format!("{sigma} + {pi} classes"))?;
    for r in &reports {
        let c = r.checks.iter().find(|c| c.name == "ambient").ok_or("no ambient check")?;
        ensure(c.verdict == Verdict::Pass, || format!("No.{}: {}", r.class, c.detail))?;
    }
    let amb = |n: u32| reports.iter().find(|r| r.class == n).map(|r| r.ambient.clone()).unwrap_or_default();
    ensure(amb(393) == "P(1,4,5^2,6,7,8,9)", || format!("No.393 gives {}", amb(393)))?;
    ensure(amb(2422) == "P(1,2^2,3^2,4,5,7)", || format!("No.2422 gives {}", amb(2422)))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} classes in {:.0?}", reports.len(), elapsed))
}

fn t_embedding() -> Outcome {
    let start = Instant::now();
    let data = Dataset::builtin();
    let numbers: Vec<u32> = data.classes.iter().map(|c| c.number).collect();
    let reports = pipeline::verify_all(&data, &numbers, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let mut derived = Vec::new();
    for r in &reports {
        let c = r.checks.iter().find(|c| c.name == "embedding").ok_or("no embedding check")?;
        ensure(c.verdict == Verdict::Pass, || format!("No.{}: {}", r.class, c.detail))?;
        if c.detail.contains("derived") {
            derived.push(r.class);
        }
    }
    let t = |n: u32| reports.iter().find(|r| r.class == n).map(|r| r.t_ambient.clone()).unwrap_or_default();
    ensure(t(393) == "P(4,5^2,6,7,8,9)", || format!("No.393 gives {}", t(393)))?;
    ensure(t(1181) == "P(2,3,4,5^2,7,12)", || format!("No.1181 gives {}", t(1181)))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("{} classes in {:.0?}; derived without printed weights: {:?}", reports.len(), elapsed, derived))
}

fn profile_law() -> Outcome {
    let data = Dataset::builtin();
    for c in &data.classes {
        let key = data.key(&c.key).ok_or("unknown key")?;
        let sum: u32 = c.profile.iter().map(|e| e.1).sum();
        ensure(sum as usize + 3 == key.dimension, || format!("No.{}: {:?} against dim {}", c.number, c.profile, key.dimension))?;
    }
    let p1218 = &data.class(1218).ok_or("no 1218")?.profile;
    ensure(p1218[0] == (1, 1), || format!("No.1218 profile {p1218:?}"))?;
    let t1218 = derive_t_profile(p1218);
    ensure(t1218 == [(1, 2), (2, 3), (3, 2), (4, 2), (5, 1)], || format!("No.1218 T profile {t1218:?}"))?;
    let p393 = &data.class(393).ok_or("no 393")?.profile;
    let t393 = derive_t_profile(p393);
    let mut expected = vec![(1, 1)];
    expected.extend(p393.iter().copied());
    ensure(p393[0].0 > 1 && t393 == expected, || format!("No.393 T profile {t393:?}"))?;
    Ok(format!("{} records; both branches of the weight-one cut", data.classes.len()))
}

fn fixed_loci() -> Outcome {
    let data = Dataset::builtin();
    let t1181 = pipeline::ambient(&data, data.class(1181).unwrap(), Level::T).map_err(|e| e.to_string())?;
    let p1 = t1181.chart_of("p1").map_err(|e| e.to_string())?;
    let nonfree: Vec<Vec<&str>> = p1.fixed_loci().iter().map(|f| f.free_names(&p1)).collect();
    ensure(nonfree == [vec!["u"]], || format!("No.1181 p1 chart: {nonfree:?}"))?;
    let t393 = pipeline::ambient(&data, data.class(393).unwrap(), Level::T).map_err(|e| e.to_string())?;
    let p2 = t393.chart_of("p2").map_err(|e| e.to_string())?;
    let l7 = p2.fixed_locus(7).ok_or("no mu_7 on the p2 chart")?;
    ensure(p2.alpha == 7 && l7.is_origin(), || format!("No.393 p2 chart: {:?}", l7.free_names(&p2)))?;

    // Random charts against brute-force stabilizers of every F_p point.
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut points = 0usize;
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let weights: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=12)).collect();
        let space = WeightedSpace::from_weights(&weights).map_err(|e| e.to_string())?;
        let chart = space.chart_at(0);
        let p = prime_for(chart.alpha);
        let field = Field::prime(p).unwrap();
        let mu = roots_of_unity(chart.alpha, p);
        for v in all_vectors(p, n - 1) {
            let fixing: Vec<u64> = mu
                .iter()
                .copied()
                .filter(|&z| v.iter().zip(&chart.weights).all(|(&x, &w)| pow_mod(z, w as u64, p) * x % p == x))
                .collect();
            let s = fixing.len() as u32;
            let pt = coeffs(&field, &v);
            ensure(stabilizer_order(&chart, &pt) == s, || format!("P{weights:?} at {v:?}: brute force {s}"))?;
            for locus in chart.fixed_loci() {
                let inside = locus.vanishing.iter().all(|&i| v[i] == 0);
                ensure(inside == s.is_multiple_of(locus.order), || format!("P{weights:?} at {v:?}: mu_{} locus", locus.order))?;
            }
            points += 1;
        }
    }
    Ok(format!("No.1181 u-line, No.393 p2-point; 50 random charts, {points} points"))
}

/// Points of `V(gens)` over `F_p` by enumeration.
fn brute_points(gens: &[Poly], field: &Field, n: usize) -> BTreeSet<Vec<u64>> {
    let p = field.characteristic();
    all_vectors(p, n).filter(|v| gens.iter().all(|g| g.evaluate(&coeffs(field, v)).unwrap().is_zero())).collect()
}

fn groebner_oracle() -> Outcome {
    let start = Instant::now();
    let budget = Budget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut nonempty = 0;
    for case in 0..200 {
        let p = if case % 2 == 0 { 7 } else { 11 };
        let n = rng.gen_range(1..=3);
        let field = Field::prime(p).unwrap();
        let ring = Ring::new((0..n).map(|i| format!("x{i}")), field.clone());
        let gens: Vec<Poly> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let terms = (0..rng.gen_range(1..=4)).map(|_| {
                    let mut e = vec![0u32; n];
                    for _ in 0..rng.gen_range(0..=3) {
                        e[rng.gen_range(0..n)] += 1;
                    }
                    (Monomial::from_exponents(&e), field.random_nonzero(&mut rng))
                });
                Poly::from_terms(&ring, terms.collect::<Vec<_>>())
            })
            .collect();
        let brute = brute_points(&gens, &field, n);
        let here = || format!("case {case} over F_{p}: {gens:?}");

        // The basis of the ideal itself: rational points are its zeros.
        let gb = groebner(&ring, &gens, MonomialOrder::DegRevLex, &budget).map_err(|e| e.to_string())?;
        ensure(!gb.is_unit() || brute.is_empty(), || format!("{}: unit ideal with points", here()))?;
        for v in &brute {
            let pt = coeffs(&field, v);
            ensure(gb.polys().iter().all(|g| g.evaluate(&pt).unwrap().is_zero()), || format!("{}: basis misses {v:?}", here()))?;
        }

        // With the field equations the variety is exactly the rational points.
        let mut with_field = gens.clone();
        with_field.extend((0..n).map(|i| &Poly::var(&ring, i).pow(p as u32) - &Poly::var(&ring, i)));
        let ideal = Ideal::new(&ring, with_field);
        let gbf = ideal.groebner(MonomialOrder::DegRevLex, &budget).map_err(|e| e.to_string())?;
        let count = gbf.standard_monomials().ok_or_else(|| format!("{}: not zero-dimensional", here()))?.len();
        ensure(count == brute.len(), || format!("{}: {count} standard monomials, {} points", here(), brute.len()))?;
        if !brute.is_empty() {
            let pts = ideal.points(&budget).map_err(|e| e.to_string())?;
            let found: BTreeSet<Vec<u64>> = pts.orbits.iter().map(|o| o.coords.iter().map(|c| c.as_u64().unwrap()).collect()).collect();
            ensure(pts.complete() && found == brute, || format!("{}: solver found {found:?}", here()))?;
            nonempty += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("200 ideals ({nonempty} with rational points) in {elapsed:.0?}"))
}

/// Monomials of weight `n` not divisible by any of `leading`.
fn count_standard(weights: &[u32], leading: &[Monomial], n: u32) -> usize {
    let space = WeightedSpace::from_weights(weights).unwrap();
    space.monomials_of_weight(n as u64).iter().filter(|m| !leading.iter().any(|l| l.divides(m))).count()
}

fn hilbert_fixtures() -> Outcome {
    // Pure powers of distinct variables form a regular sequence with the same
    // Hilbert function as the general complete intersection.
    let fixtures: Vec<CiFixture> = vec![
        (vec![6], vec![1, 1, 1, 1, 3], vec![(4, 2)], Some(2)),
        (vec![2, 3], vec![1, 1, 1, 1, 1, 1], vec![(0, 2), (1, 3)], Some(4)),
        (vec![4], vec![1, 1, 1, 1, 1], vec![(0, 4)], Some(3)),
        (vec![2, 2, 2], vec![1, 1, 1, 1, 1, 1, 1], vec![(0, 2), (1, 2), (2, 2)], Some(5)),
        (vec![6], vec![1, 1, 1, 2, 3], vec![(4, 2)], None),
        (vec![6, 6], vec![1, 1, 2, 2, 3, 3], vec![(2, 3), (4, 2)], None),
    ];
    for (degrees, weights, powers, g) in &fixtures {
        let s = HilbertSeries::complete_intersection(degrees, weights);
        let deg = anticanonical_degree(&s).map_err(|e| e.to_string())?;
        let expected = BigRational::new(
            degrees.iter().map(|&d| BigInt::from(d)).product(),
            weights.iter().map(|&a| BigInt::from(a)).product(),
        );
        ensure(deg == expected, || format!("X{degrees:?} in P{weights:?}: degree {deg}, expected {expected}"))?;
        let leading: Vec<Monomial> = powers.iter().map(|&(v, e)| Monomial::var_pow(v, e)).collect();
        for (m, (&(v, e), &d)) in leading.iter().zip(powers.iter().zip(degrees)) {
            assert_eq!(weights[v] * e, d, "fixture power {m:?}");
        }
        let series = s.expand(13);
        for n in 0..=12u32 {
            let oracle = count_standard(weights, &leading, n);
            ensure(series[n as usize] == BigInt::from(oracle), || format!("X{degrees:?} in P{weights:?}: coefficient {n} is {}, counted {oracle}", series[n as usize]))?;
        }
        if let Some(g) = g {
            let got = genus(&s).genus;
            ensure(got == *g, || format!("X{degrees:?} in P{weights:?}: genus {got}"))?;
        }
    }
    Ok(format!("{} fixtures to order 12; X6 degree 2 genus 2, X(2,3) degree 6", fixtures.len()))
}

/// A chart `{w = 1}` of weight `alpha` with local coordinates of the given
/// weights. The last `n - k` coordinates are cut out by equations of their own
/// weight; `flat` drops every term linear on the chart.
struct Planted {
    alpha: u32,
    weights: Vec<u32>,
    k: usize,
    flat: bool,
}

fn system(alpha: u32, weights: &[u32], k: usize) -> Planted {
    Planted { alpha, weights: weights.to_vec(), k, flat: false }
}

fn flat(alpha: u32, weights: &[u32], k: usize) -> Planted {
    Planted { alpha, weights: weights.to_vec(), k, flat: true }
}

fn planted_equations(s: &Planted, space: &WeightedSpace, ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = s.weights.len();
    let field = ring.field().clone();
    (s.k..n)
        .map(|j| {
            let x = j + 1;
            let target = Monomial::var(x);
            let mut pool: Vec<Monomial> = space
                .monomials_of_weight(s.weights[j] as u64)
                .into_iter()
                .filter(|m| *m != target && (1..=n).any(|v| m.contains_var(v)))
                .filter(|m| !s.flat || (1..=n).map(|v| m.exponent(v)).sum::<u32>() > 1)
                .collect();
            pool.retain(|_| rng.gen_bool(0.6));
            let mut terms: Vec<(Monomial, Coeff)> = pool.into_iter().map(|m| (m, field.random_nonzero(rng))).collect();
            if !s.flat {
                terms.push((target, Coeff::one(&field)));
            }
            Poly::from_terms(ring, terms)
        })
        .collect()
}

/// Tangent space at the chart origin and its `mu_alpha` eigenspaces, all by
/// enumeration over `F_p`.
fn lpc_oracle(s: &Planted, eqs: &[Poly], field: &Field) -> LpcOutcome {
    let p = field.characteristic();
    let n = s.weights.len();
    let mut origin = vec![Coeff::zero(field); n + 1];
    origin[0] = Coeff::one(field);
    let jac: Vec<Vec<u64>> = eqs.iter().map(|e| (1..=n).map(|v| e.derivative(v).evaluate(&origin).unwrap().as_u64().unwrap()).collect()).collect();
    let tangent: Vec<Vec<u64>> = all_vectors(p, n).filter(|v| jac.iter().all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p == 0)).collect();
    let log_p = |count: usize| {
        let mut d = 0;
        let mut c = 1;
        while c < count {
            c *= p as usize;
            d += 1;
        }
        assert_eq!(c, count, "subspace size is a power of p");
        d
    };
    let dim = log_p(tangent.len());
    if dim > s.k {
        return LpcOutcome::NotQuasiSmooth { corank: dim - s.k };
    }
    let z = primitive_root_of_unity(s.alpha, p);
    let mut residues = Vec::new();
    for r in 0..s.alpha {
        let zr = pow_mod(z, r as u64, p);
        let eigen =
            tangent.iter().filter(|v| v.iter().zip(&s.weights).all(|(&x, &w)| pow_mod(z, w as u64, p) * x % p == zr * x % p)).count();
        residues.extend(std::iter::repeat_n(r, log_p(eigen)));
    }
    assert_eq!(residues.len(), dim, "the action is diagonalizable");
    if s.alpha == 1 {
        LpcOutcome::Smooth
    } else if residues.iter().all(|&r| r != 0 && num_integer::gcd(r, s.alpha) == 1) {
        LpcOutcome::Quotient { singularity: QuotientType::new(s.alpha, &residues) }
    } else {
        LpcOutcome::Degenerate { order: s.alpha, weights: residues }
    }
}

fn lpc_suite() -> Outcome {
    let systems = vec![
        system(2, &[1, 1, 1, 3], 3),
        system(3, &[1, 1, 2, 4], 3),
        system(3, &[1, 2, 5], 2),
        system(4, &[1, 3, 6], 2),
        system(4, &[1, 1, 3, 6], 3),
        system(5, &[2, 3, 6, 4], 2),
        system(5, &[1, 2, 3, 7], 3),
        system(5, &[1, 1, 4, 3], 3),
        system(5, &[2, 3, 7, 12], 2),
        system(6, &[1, 5, 7, 2], 2),
        system(6, &[1, 1, 5, 8], 3),
        system(7, &[2, 5, 3], 2),
        system(7, &[1, 6, 9], 2),
        system(8, &[1, 3, 5, 9], 3),
        system(9, &[4, 5, 2, 7], 2),
        system(9, &[1, 4, 5, 11], 3),
        system(10, &[3, 7, 4], 2),
        system(11, &[1, 10, 3], 2),
        system(12, &[5, 7, 1, 6], 2),
        system(12, &[1, 5, 7, 13], 3),
        system(1, &[1, 1, 2], 2),
        system(4, &[1, 2, 5], 2),
        system(6, &[2, 3, 1, 4], 2),
        flat(5, &[2, 3, 6, 4], 2),
        flat(3, &[1, 2, 4, 5], 2),
    ];
    let mut quotients = 0;
    for seed in 1..=3u64 {
        for (i, s) in systems.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + i as u64);
            let mut names = vec!["w".to_string()];
            names.extend((1..=s.weights.len()).map(|i| format!("y{i}")));
            let mut weights = vec![s.alpha];
            weights.extend(&s.weights);
            let space = WeightedSpace::new(names, weights).map_err(|e| e.to_string())?;
            let field = Field::prime(prime_for(s.alpha)).unwrap();
            let ring = space.ring(field.clone());
            let eqs = planted_equations(s, &space, &ring, &mut rng);
            ensure(eqs.iter().all(|e| e.is_quasi_homogeneous_of(space.weights(), e.leading().map_or(0, |(m, _)| m.weighted_degree(space.weights())))), || "planted equation is not quasi-homogeneous".into())?;
            let expected = lpc_oracle(s, &eqs, &field);
            let sys = ChartSystem::new(&space, &eqs, "w", &[], s.k).map_err(|e| e.to_string())?;
            let local = localize(&sys, &vec![Coeff::zero(&field); s.weights.len()]).map_err(|e| e.to_string())?;
            let brute_order = roots_of_unity(s.alpha, field.characteristic()).len() as u32;
            ensure(local.order == brute_order, || format!("system {i}: stabilizer {} against {brute_order}", local.order))?;
            let got = lpc_classify(&local).map_err(|e| e.to_string())?.outcome;
            ensure(got == expected, || format!("seed {seed}, system {i} (1/{} {:?}): lpc {got}, oracle {expected}", s.alpha, s.weights))?;
            if matches!(got, LpcOutcome::Quotient { .. }) {
                quotients += 1;
            }
        }
    }
    Ok(format!("{} systems x 3 seeds ({quotients} quotient outcomes)", systems.len()))
}

fn divisor_fixture(equation: &str) -> Variety {
    let space = WeightedSpace::new(["x0", "x1", "x2", "x3", "x4"], vec![1; 5]).unwrap();
    let ring = space.ring(Field::prime(DEFAULT_PRIME).unwrap());
    Variety {
        equations: vec![parse_poly(&ring, equation).unwrap()],
        witness: Some(parse_poly(&ring, "x0").unwrap()),
        dimension: 3,
        space,
        ring,
    }
}

fn claim_c_fixtures() -> Outcome {
    let budget = Budget::default();
    // {x0 = 0} cuts a quadric cone: one node at (0:0:0:0:1).
    let node = claim_c(&divisor_fixture("x1^2 + x2^2 + x3^2 + x0*x4"), &ClaimCMode::Full, &budget);
    ensure(node.verdict == Verdict::Pass && node.singular_dimension == Some(0), || format!("node: {node:?}"))?;
    // {x0 = 0} cuts x1^2*x3 + x2^2*x4, singular along {x1 = x2 = 0}.
    let line = claim_c(&divisor_fixture("x0^3 + x1^2*x3 + x2^2*x4"), &ClaimCMode::Full, &budget);
    ensure(line.verdict == Verdict::Fail && line.singular_dimension == Some(1), || format!("line: {line:?}"))?;
    Ok(format!("node: {}; line: {}", node.status, line.status))
}

fn conditional_full_depth() -> Option<Outcome> {
    let paths = std::env::var_os("FANOKIT_KEY_EQUATIONS")?;
    Some((|| {
        let mut data = Dataset::builtin();
        for path in std::env::split_paths(&paths) {
            let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            let e: KeyEquations = toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            data.merge_equations(e).map_err(|e| e.to_string())?;
        }
        let opts = VerifyOptions { depth: Depth::Full, ..VerifyOptions::default() };
        let mut done = Vec::new();
        for number in [393, 308] {
            let class = data.class(number).ok_or("missing class")?;
            if data.key_equations(data.key(&class.key).unwrap()).0.is_empty() {
                continue;
            }
            let r = pipeline::verify_candidate(&data, class, &opts).map_err(|e| e.to_string())?;
            let expected = Basket::parse(&class.basket).map_err(|e| e.to_string())?;
            let got = r.basket.as_deref().map(Basket::parse).transpose().map_err(|e| e.to_string())?;
            ensure(got.as_ref().is_some_and(|b| b.isomorphic(&expected)), || format!("No.{number}: basket {:?}, expected {expected}", r.basket))?;
            done.push(number);
        }
        ensure(!done.is_empty(), || "no supplied equations cover No.393 or No.308".into())?;
        Ok(format!("full depth reproduced the baskets of {done:?}"))
    })())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("table reproduction", table_reproduction),
        ("T-embedding reproduction", t_embedding),
        ("profile law", profile_law),
        ("fixed loci and stabilizer oracle", fixed_loci),
        ("Groebner oracle equivalence", groebner_oracle),
        ("Hilbert fixtures", hilbert_fixtures),
        ("LPC oracle suite", lpc_suite),
        ("divisor singularity fixtures", claim_c_fixtures),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {why}", i + 1);
            }
        }
    }
    match conditional_full_depth() {
        None => println!("criterion 9 (full depth with supplied key equations): SKIP: set FANOKIT_KEY_EQUATIONS to run"),
        Some(Ok(detail)) => println!("criterion 9 (full depth with supplied key equations): PASS: {detail}"),
        Some(Err(why)) => {
            failed += 1;
            println!("criterion 9 (full depth with supplied key equations): FAIL: {why}");
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
