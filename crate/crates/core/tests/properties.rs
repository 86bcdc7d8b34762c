//! Property-based cross-checks over the public API: structural invariants
//! of the arithmetic and parsing layers, dual-route agreement for
//! intersection numbers, and scaling, ordering, and coordinate invariances
//! of the resolution oracles.

use proptest::prelude::*;

use germlct::blowup::BlowupOptions;
use germlct::field::CoeffField;
use germlct::fuzz::{generate, run_campaign, GenSpec};
use germlct::germ::{are_transverse_at_origin, CurveGerm, WeightedGerm};
use germlct::invariants::{
    intersection_multiplicity, intersection_multiplicity_resultant,
    is_log_canonical_at_origin, lct_at_origin, pair_mult,
};
use germlct::linfeas::{
    is_feasible, is_feasible_with_order, verify_certificate, verify_witness, LinSystem, Rel,
    Verdict,
};
use germlct::parse::parse_poly_xy;
use germlct::poly::BivarPoly;
use germlct::rational::Rational;
use germlct::theorems::LocalConfig;

fn opts() -> BlowupOptions {
    BlowupOptions::default()
}

/// One deterministic configuration per seed, through the campaign generator.
fn config_for(seed: u64) -> LocalConfig {
    generate(&GenSpec::new(seed, 1)).pop().expect("one configuration")
}

fn poly_from(terms: &[((u32, u32), (i64, i64))]) -> BivarPoly {
    BivarPoly::from_rational_terms(
        CoeffField::rationals(),
        terms.iter().map(|&(key, (num, den))| (key, Rational::ratio(num, den))),
    )
}

fn scale_weights(divisor: &WeightedGerm, t: &Rational) -> WeightedGerm {
    WeightedGerm::new(
        divisor.components().iter().map(|(g, w)| (g.clone(), t * w)).collect(),
    )
    .expect("scaling preserves validity")
}

prop_compose! {
    fn arb_terms()(
        terms in prop::collection::vec(((0u32..5, 0u32..5), (-9i64..=9, 1i64..=9)), 1..6)
    ) -> Vec<((u32, u32), (i64, i64))> {
        terms
    }
}

proptest! {
    #[test]
    fn multiplicity_is_additive_under_products(a in arb_terms(), b in arb_terms()) {
        let f = poly_from(&a);
        let g = poly_from(&b);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(f.mul(&g).multiplicity(), f.multiplicity() + g.multiplicity());
    }

    #[test]
    fn display_and_parse_round_trip(a in arb_terms()) {
        let f = poly_from(&a);
        prop_assume!(!f.is_zero());
        let text = f.display("x", "y");
        let back = parse_poly_xy(&text).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn transversality_is_symmetric(seed in any::<u64>()) {
        let cfg = config_for(seed);
        prop_assert_eq!(
            are_transverse_at_origin(cfg.delta1(), cfg.delta2()),
            are_transverse_at_origin(cfg.delta2(), cfg.delta1())
        );
        for (germ, _) in cfg.omega().components() {
            prop_assert_eq!(
                are_transverse_at_origin(cfg.delta1(), germ),
                are_transverse_at_origin(germ, cfg.delta1())
            );
        }
    }

    #[test]
    fn pair_mult_dominates_total_multiplicity(seed in any::<u64>()) {
        let cfg = config_for(seed);
        let pm = pair_mult(cfg.omega(), cfg.delta1(), &opts()).unwrap();
        prop_assert!(pm >= cfg.omega().total_mult());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn intersection_routes_agree(seed in any::<u64>()) {
        let cfg = config_for(seed);
        let mut germs: Vec<&CurveGerm> = vec![cfg.delta1(), cfg.delta2()];
        germs.extend(cfg.omega().components().iter().map(|(g, _)| g));
        for i in 0..germs.len() {
            for j in (i + 1)..germs.len() {
                let via_tree = intersection_multiplicity(germs[i], germs[j], &opts()).unwrap();
                let via_resultant =
                    intersection_multiplicity_resultant(germs[i], germs[j]).unwrap();
                prop_assert_eq!(via_tree, via_resultant);
            }
        }
    }

    #[test]
    fn lct_scales_inversely_with_the_weights(
        seed in any::<u64>(),
        num in 1i64..=6,
        den in 1i64..=6,
    ) {
        let cfg = config_for(seed);
        let t = Rational::ratio(num, den);
        let base = lct_at_origin(cfg.omega(), &opts()).unwrap();
        let scaled = lct_at_origin(&scale_weights(cfg.omega(), &t), &opts()).unwrap();
        let base = base.lct.as_rational().unwrap();
        let scaled = scaled.lct.as_rational().unwrap();
        prop_assert_eq!(scaled.clone(), base.checked_div(&t).unwrap());
    }

    #[test]
    fn adding_a_component_never_raises_the_threshold(
        seed in any::<u64>(),
        other in any::<u64>(),
    ) {
        let cfg = config_for(seed);
        let donor = config_for(other);
        let (extra, weight) = donor.omega().components()[0].clone();
        let extra = CurveGerm::new("extra", extra.poly().clone()).unwrap();
        let enlarged = match cfg.omega().with_component(extra, weight) {
            Ok(d) => d,
            // The donated component overlaps an existing one; nothing to test.
            Err(_) => return Ok(()),
        };
        let before = lct_at_origin(cfg.omega(), &opts()).unwrap();
        let after = lct_at_origin(&enlarged, &opts()).unwrap();
        prop_assert!(after.lct.as_rational().unwrap() <= before.lct.as_rational().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Binary-search refinement of the log-canonicality predicate brackets
    /// the exact threshold to within 1/1000.
    #[test]
    fn lct_matches_binary_search_refinement(seed in any::<u64>()) {
        let cfg = config_for(seed);
        let divisor = cfg.omega();
        let exact = lct_at_origin(divisor, &opts()).unwrap();
        let exact = exact.lct.as_rational().unwrap().clone();
        let lc_at = |t: &Rational| {
            is_log_canonical_at_origin(&scale_weights(divisor, t), &opts()).unwrap().is_lc
        };

        let mut lo = Rational::zero();
        let mut hi = &exact + &Rational::one();
        prop_assert!(lc_at(&lo));
        prop_assert!(!lc_at(&hi));
        let tolerance = Rational::ratio(1, 1000);
        let half = Rational::ratio(1, 2);
        while &(&hi - &lo) > &tolerance {
            let mid = &(&lo + &hi) * &half;
            if lc_at(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        prop_assert!(lo <= exact && exact < hi);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Multiplicities, intersection numbers, and thresholds are invariant
    /// under invertible linear coordinate changes.
    #[test]
    fn invariants_survive_linear_coordinate_changes(
        seed in any::<u64>(),
        a in -3i64..=3,
        b in -3i64..=3,
        c in -3i64..=3,
        d in -3i64..=3,
    ) {
        prop_assume!(a * d - b * c != 0);
        let field = CoeffField::rationals();
        let elem = |v: i64| field.from_rational(Rational::from_int(v));
        let substitute = |g: &CurveGerm| {
            CurveGerm::new(
                g.label().to_string(),
                g.poly().linear_substitute(&elem(a), &elem(b), &elem(c), &elem(d)),
            )
            .expect("coordinate changes preserve validity")
        };

        let cfg = config_for(seed);
        let transformed = WeightedGerm::new(
            cfg.omega()
                .components()
                .iter()
                .map(|(g, w)| (substitute(g), w.clone()))
                .collect(),
        )
        .unwrap();

        for ((g, _), (h, _)) in cfg.omega().components().iter().zip(transformed.components()) {
            prop_assert_eq!(g.mult_at_origin(), h.mult_at_origin());
        }

        let before = lct_at_origin(cfg.omega(), &opts()).unwrap();
        let after = lct_at_origin(&transformed, &opts()).unwrap();
        prop_assert_eq!(before.lct, after.lct);

        let d1 = substitute(cfg.delta1());
        let d2 = substitute(cfg.delta2());
        prop_assert_eq!(
            intersection_multiplicity(cfg.delta1(), cfg.delta2(), &opts()).unwrap(),
            intersection_multiplicity(&d1, &d2, &opts()).unwrap()
        );
    }
}

prop_compose! {
    fn arb_system()(
        rows in prop::collection::vec(
            (prop::collection::vec(-4i64..=4, 3), 0usize..=4, -6i64..=6),
            1..7,
        )
    ) -> LinSystem {
        let mut sys = LinSystem::new(vec!["u".into(), "v".into(), "w".into()]);
        for (coeffs, rel_pick, rhs) in rows {
            let rel = match rel_pick {
                0 | 3 => Rel::Le,
                1 | 4 => Rel::Lt,
                _ => Rel::Eq,
            };
            sys.push(
                coeffs.into_iter().map(Rational::from_int).collect(),
                rel,
                Rational::from_int(rhs),
            )
            .unwrap();
        }
        sys
    }
}

proptest! {
    #[test]
    fn feasibility_is_order_independent_and_evidence_verifies(sys in arb_system()) {
        let natural = is_feasible(&sys).unwrap();
        let reversed: Vec<usize> = (0..sys.variables().len()).rev().collect();
        let swapped = is_feasible_with_order(&sys, &reversed).unwrap();
        prop_assert_eq!(natural.is_feasible(), swapped.is_feasible());
        for verdict in [&natural, &swapped] {
            match verdict {
                Verdict::Feasible { witness } => prop_assert!(verify_witness(&sys, witness)),
                Verdict::Infeasible { certificate } => {
                    prop_assert!(verify_certificate(&sys, certificate))
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tiny_campaigns_are_deterministic_and_partition(seed in any::<u64>()) {
        let spec = GenSpec::new(seed, 2);
        let first = run_campaign(&spec, &opts());
        let second = run_campaign(&spec, &opts());
        prop_assert_eq!(first.to_json(), second.to_json());
        prop_assert!(first.failures.is_empty());
        for tally in first.tallies.values() {
            prop_assert_eq!(tally.asserted + tally.vacuous + tally.lc, 2);
        }
    }
}
