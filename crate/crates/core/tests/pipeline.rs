mod common;

use fanokit::dataio::{self, Dataset, Level};
use fanokit::ideals::Budget;
use fanokit::pipeline::{self, BuildOptions, ClaimCMode, Depth, Verdict, VerifyOptions, DEFAULT_PRIME};
use fanokit::poly::{parse_poly, Poly};
use fanokit::singularity::Basket;

fn full(seeds: &[u64]) -> VerifyOptions {
    VerifyOptions { seeds: seeds.to_vec(), depth: Depth::Full, ..VerifyOptions::default() }
}

#[test]
fn synthetic_record_passes_end_to_end() {
    let data = common::synthetic();
    assert!(dataio::validate_class(&data, data.class(1).unwrap()).is_empty());
    let r = pipeline::verify_candidate(&data, data.class(1).unwrap(), &full(&[1, 2, 3])).unwrap();
    let text = pipeline::render_text(std::slice::from_ref(&r));
    assert_eq!(r.verdict, Verdict::Pass, "{text}");
    assert!(text.contains("A:pass B:pass C:pass"), "{text}");
    assert_eq!(r.basket.as_deref(), Some("{1/2(1,1,1)}"));
    assert_eq!(r.ambient, "P(1^4,2)");
    assert_eq!(r.t_ambient, "P(1^3,2)");
}

#[test]
fn singular_fixture_fails_claim_a_with_point() {
    let data = common::synthetic();
    let r = pipeline::verify_candidate(&data, data.class(2).unwrap(), &full(&[1, 2, 3])).unwrap();
    assert_eq!(r.claims["A"].verdict, Verdict::Fail);
    assert_eq!(r.claims["B"].verdict, Verdict::Inconclusive);
    assert_eq!(r.verdict, Verdict::Fail);
    let a = r.seeds[0].a.as_ref().unwrap();
    let bad: Vec<_> = a.strata.iter().filter(|s| s.verdict == Verdict::Fail).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].stratum.chart, "x1");
    assert!(bad[0].status.contains("dimension 0"), "{}", bad[0].status);
}

#[test]
fn substitution_is_sound() {
    // Back-substituting the rows into the key equation reproduces the built X.
    let data = common::synthetic();
    let class = data.class(2).unwrap();
    let x = pipeline::build_x(&data, class, &BuildOptions::new(101, 7)).unwrap();
    let direct = parse_poly(&x.ring, "y^2*x1 + x2^5 + x3^5 + x4^5").unwrap();
    assert_eq!(x.equations, vec![direct]);
    let t = pipeline::build_t(&data, class, &BuildOptions::new(101, 7)).unwrap();
    assert_eq!(t.equations, vec![parse_poly(&t.ring, "y^2*x1 + 2*x2^5 + x3^5").unwrap()]);
    assert_eq!(t.dimension, 2);
    assert!(x.equations[0].is_quasi_homogeneous_of(x.space.weights(), 5));
    assert!(t.equations[0].is_quasi_homogeneous_of(t.space.weights(), 5));
}

#[test]
fn generic_rows_depend_only_on_seed() {
    let data = common::synthetic();
    let class = data.class(1).unwrap();
    let a = pipeline::build_t(&data, class, &BuildOptions::new(DEFAULT_PRIME, 5)).unwrap();
    let b = pipeline::build_t(&data, class, &BuildOptions::new(DEFAULT_PRIME, 5)).unwrap();
    let c = pipeline::build_t(&data, class, &BuildOptions::new(DEFAULT_PRIME, 6)).unwrap();
    assert_eq!(a.equations, b.equations);
    assert_ne!(a.equations, c.equations);
}

#[test]
fn intermediate_bounds() {
    let data = common::synthetic();
    let class = data.class(1).unwrap();
    let o = BuildOptions::new(101, 1);
    let key = pipeline::intermediate(&data, class, 0, &o).unwrap();
    assert_eq!(key.space.len(), 6);
    assert_eq!(key.dimension, 4);
    let ring = &key.ring;
    let f: Poly = parse_poly(ring, "y^2*x1 + z*y + x1^5 + x2^5 + x3^5 + x4^5").unwrap();
    assert_eq!(key.equations, vec![f]);
    let top = pipeline::intermediate(&data, class, 3, &o).unwrap();
    let t = pipeline::build_t(&data, class, &o).unwrap();
    assert_eq!(top.equations, t.equations);
    let only_x4 = pipeline::intermediate(&data, class, 1, &o).unwrap();
    assert_eq!(only_x4.space.names(), ["x1", "x2", "x3", "y", "z"]);
}

#[test]
fn t_profile_case_split() {
    assert_eq!(pipeline::derive_t_profile(&[(1, 1), (2, 3), (3, 2), (4, 2), (5, 1)]), vec![(1, 2), (2, 3), (3, 2), (4, 2), (5, 1)]);
    assert_eq!(pipeline::derive_t_profile(&[(2, 2), (3, 2)]), vec![(1, 1), (2, 2), (3, 2)]);
    let twice = pipeline::derive_t_profile(&pipeline::derive_t_profile(&[(2, 2)]));
    assert_eq!(twice, vec![(1, 2), (2, 2)]);
}

#[test]
fn strata_cover_plan_then_rest() {
    let data = Dataset::builtin();
    let class = data.class(393).unwrap();
    let t = pipeline::ambient(&data, class, Level::T).unwrap();
    let s = pipeline::strata(&t, &class.charts).unwrap();
    assert_eq!(s.len(), t.len());
    assert_eq!(s[0].chart, "p1");
    assert!(s[0].zero.is_empty());
    assert_eq!(s[1].chart, "p2");
    assert_eq!(s[1].zero, ["p1"]);
    assert_eq!(s.last().unwrap().zero.len(), t.len() - 1);
    assert!(pipeline::strata(&t, &["nope".to_string()]).is_err());
}

#[test]
fn missing_equations_are_inconclusive() {
    let data = Dataset::builtin();
    let r = pipeline::verify_candidate(&data, data.class(393).unwrap(), &full(&[1, 2, 3])).unwrap();
    for claim in ["A", "B", "C"] {
        assert_eq!(r.claims[claim].verdict, Verdict::Inconclusive, "{claim}");
    }
    assert!(r.claims["A"].reason.contains("key equations not supplied"));
    assert_eq!(r.verdict, Verdict::Inconclusive);
}

#[test]
fn tables_only_on_builtin() {
    let data = Dataset::builtin();
    let numbers: Vec<u32> = data.classes.iter().map(|c| c.number).collect();
    let reports = pipeline::verify_all(&data, &numbers, &VerifyOptions::default()).unwrap();
    assert_eq!(reports.len(), 31);
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Pass, "{}", pipeline::render_text(std::slice::from_ref(r)));
    }
    let r393 = reports.iter().find(|r| r.class == 393).unwrap();
    assert_eq!(r393.ambient, "P(1,4,5^2,6,7,8,9)");
    assert_eq!(r393.t_ambient, "P(4,5^2,6,7,8,9)");
    let json = pipeline::render_json(&reports);
    let back: Vec<pipeline::VerificationReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, reports);
    assert_eq!(pipeline::render_json(&back), json);
}

#[test]
fn claim_b_reports_symmetric_difference() {
    let data = common::synthetic();
    let class = data.class(1).unwrap();
    let t = pipeline::build_t(&data, class, &BuildOptions::new(DEFAULT_PRIME, 1)).unwrap();
    let a = pipeline::claim_a(&t, &class.charts, &Budget::default()).unwrap();
    assert_eq!(a.verdict, Verdict::Pass);
    let wrong = Basket::parse("{1/3(1,1,2)}").unwrap();
    let b = pipeline::claim_b(&a, &wrong, &class.ambient);
    assert_eq!(b.verdict, Verdict::Fail);
    assert_eq!(b.only_computed, "{1/2(1,1,1)}");
    assert_eq!(b.only_expected, "{1/3(1,1,2)}");
    let empty = pipeline::claim_b(&pipeline::ClaimAOutcome { verdict: Verdict::Pass, strata: vec![] }, &Basket::default(), &[1]);
    assert_eq!(empty.verdict, Verdict::Pass);
}

#[test]
fn claim_c_base_locus_mode() {
    let data = common::synthetic();
    let x = pipeline::build_x(&data, data.class(1).unwrap(), &BuildOptions::new(DEFAULT_PRIME, 2)).unwrap();
    let c = pipeline::claim_c(&x, &ClaimCMode::BaseLocus { weights: vec![1, 2] }, &Budget::default());
    assert_eq!(c.verdict, Verdict::Pass, "{}", c.status);
    let full = pipeline::claim_c(&x, &ClaimCMode::Full, &Budget::default());
    assert_eq!(full.verdict, Verdict::Pass, "{}", full.status);
}
