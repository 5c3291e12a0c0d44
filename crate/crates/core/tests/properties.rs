use std::sync::Arc;

use fanokit::dataio::Dataset;
use fanokit::hilbert::{anticanonical_degree, IntPoly, HilbertSeries};
use fanokit::ideals::{groebner, Budget};
use fanokit::pipeline::derive_t_profile;
use fanokit::poly::{parse_poly, Coeff, Field, Monomial, MonomialOrder, Poly, Ring};
use fanokit::singularity::{localize, lpc_classify, Basket, ChartSystem, QuotientType};
use fanokit::wps::WeightedSpace;
use proptest::prelude::*;

fn ring(p: u64, n: usize) -> Arc<Ring> {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Ring::new(names, Field::prime(p).unwrap())
}

fn poly_strategy(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -20i64..20), 0..=max_terms)
}

fn build(r: &Arc<Ring>, terms: &[(Vec<u32>, i64)]) -> Poly {
    Poly::from_terms(r, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), Coeff::from_i64(r.field(), *c))))
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(t in poly_strategy(3, 4, 6)) {
        let r = ring(101, 3);
        let p = build(&r, &t);
        prop_assert_eq!(parse_poly(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn ring_laws(a in poly_strategy(3, 3, 4), b in poly_strategy(3, 3, 4), c in poly_strategy(3, 3, 4)) {
        let r = ring(7, 3);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_rule(a in poly_strategy(3, 3, 4), b in poly_strategy(3, 3, 4), v in 0usize..3) {
        let r = ring(11, 3);
        let (a, b) = (build(&r, &a), build(&r, &b));
        let lhs = (&a * &b).derivative(v);
        let rhs = &(&a.derivative(v) * &b) + &(&a * &b.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weighted_scaling(coeffs in prop::collection::vec(1i64..100, 1..8), d in 1u64..9, lambda in 2i64..50, pt in prop::collection::vec(0i64..101, 3)) {
        let space = WeightedSpace::new(["x", "y", "z"], vec![1, 2, 3]).unwrap();
        let f = Field::prime(101).unwrap();
        let r = space.ring(f.clone());
        let monos = space.monomials_of_weight(d);
        let p = Poly::from_terms(&r, monos.iter().zip(coeffs.iter().cycle()).map(|(m, &c)| (m.clone(), Coeff::from_i64(&f, c))));
        prop_assert!(p.is_quasi_homogeneous_of(space.weights(), d));
        let l = Coeff::from_i64(&f, lambda);
        let x: Vec<Coeff> = pt.iter().map(|&c| Coeff::from_i64(&f, c)).collect();
        let scaled: Vec<Coeff> = x.iter().zip(space.weights()).map(|(c, &w)| l.pow(w as u128).mul(c)).collect();
        prop_assert_eq!(p.evaluate(&scaled).unwrap(), l.pow(d as u128).mul(&p.evaluate(&x).unwrap()));
    }

    #[test]
    fn groebner_is_deterministic_and_closed(gens in prop::collection::vec(poly_strategy(3, 2, 3), 1..4)) {
        let r = ring(7, 3);
        let gens: Vec<Poly> = gens.iter().map(|t| build(&r, t)).collect();
        let budget = Budget::default();
        let gb = groebner(&r, &gens, MonomialOrder::DegRevLex, &budget).unwrap();
        let mut rev = gens.clone();
        rev.reverse();
        let again = groebner(&r, &rev, MonomialOrder::DegRevLex, &budget).unwrap();
        prop_assert_eq!(gb.polys(), again.polys());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        // Buchberger: every S-polynomial of the basis reduces to zero.
        let basis = gb.polys();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let (mi, ci) = basis[i].leading().unwrap();
                let (mj, cj) = basis[j].leading().unwrap();
                let l = mi.lcm(mj);
                let s = &basis[i].mul_monomial(&mi.quotient_of(&l).unwrap()).scale(&ci.inv().unwrap())
                    - &basis[j].mul_monomial(&mj.quotient_of(&l).unwrap()).scale(&cj.inv().unwrap());
                prop_assert!(gb.normal_form(&s).is_zero());
            }
        }
    }

    #[test]
    fn degree_is_invariant_under_extra_factor(degrees in prop::collection::vec(1u32..7, 1..3), extra in 1u32..6) {
        let mut weights = vec![1, 1, 1, 1, 2, 3];
        weights.truncate(4 + degrees.len());
        let s = HilbertSeries::complete_intersection(&degrees, &weights);
        let mut w2 = weights.clone();
        w2.push(extra);
        let t = HilbertSeries::new(s.numerator.mul(&IntPoly::one_minus_t_pow(extra)), &w2);
        prop_assert_eq!(s.expand(20), t.expand(20));
        prop_assert_eq!(anticanonical_degree(&s).ok(), anticanonical_degree(&t).ok());
    }

    #[test]
    fn promotion_round_trip(r in 2u32..30, b in 1u32..30) {
        let b = b % r;
        prop_assume!(b > 0 && num_gcd(b, r) == 1);
        let q = QuotientType::new(r, &[b, r - b]);
        let up = q.promote().unwrap();
        prop_assert!(up.is_terminal_threefold());
        prop_assert_eq!(up.demote().unwrap(), q);
    }

    #[test]
    fn basket_display_round_trip(entries in prop::collection::vec((2u32..12, 1u32..12, 1u32..4), 0..5)) {
        let mut b = Basket::default();
        for (r, a, n) in entries {
            let a = a % r;
            if a > 0 && num_gcd(a, r) == 1 {
                b.add(QuotientType::new(r, &[1, a, r - a]), n);
            }
        }
        prop_assert_eq!(Basket::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn lpc_is_invariant_under_equation_changes(u in 1i64..11, v in 1i64..11, swap in any::<bool>()) {
        let space = WeightedSpace::new(["w", "x1", "x2", "x3", "x4"], vec![5, 2, 3, 5, 4]).unwrap();
        let f = Field::prime(11).unwrap();
        let r = space.ring(f.clone());
        let mut eqs = vec![
            parse_poly(&r, &format!("{u}*(x3 - x1*x2)")).unwrap(),
            parse_poly(&r, &format!("{v}*(x4 - x1^2) + x3*x1^0 - x1*x2")).unwrap(),
        ];
        if swap {
            eqs.reverse();
        }
        let sys = ChartSystem::new(&space, &eqs, "w", &[], 2).unwrap();
        let origin = vec![Coeff::zero(&f); 4];
        let res = lpc_classify(&localize(&sys, &origin).unwrap()).unwrap();
        prop_assert_eq!(res.outcome.to_string(), "1/5(2,3)");
        prop_assert_eq!(res.complement, vec!["x1".to_string(), "x2".to_string()]);
    }

    #[test]
    fn t_profile_adds_weight_one_cuts(rest in prop::collection::btree_map(2u32..9, 1u32..4, 0..4), m1 in 0u32..3) {
        let mut profile: Vec<(u32, u32)> = Vec::new();
        if m1 > 0 {
            profile.push((1, m1));
        }
        profile.extend(rest);
        let once = derive_t_profile(&profile);
        let twice = derive_t_profile(&once);
        let ones = |p: &[(u32, u32)]| p.iter().find(|e| e.0 == 1).map_or(0, |e| e.1);
        prop_assert_eq!(ones(&twice), m1 + 2);
        prop_assert_eq!(twice.iter().map(|e| e.1).sum::<u32>(), profile.iter().map(|e| e.1).sum::<u32>() + 2);
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn dataset_load_save_load_is_identity() {
    let dir = std::env::temp_dir().join(format!("fanokit-roundtrip-{}", std::process::id()));
    let data = Dataset::builtin();
    data.save(&dir).unwrap();
    let back = Dataset::load(&dir).unwrap();
    assert_eq!(back, data);
    let again = dir.join("again");
    back.save(&again).unwrap();
    for c in &data.classes {
        let name = format!("classes/No{}.toml", c.number);
        assert_eq!(std::fs::read(dir.join(&name)).unwrap(), std::fs::read(again.join(&name)).unwrap());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
