//! Randomized invariants: label bijections, algebraic laws, distribution
//! completeness, reduced-state positivity, and report canonicalization.

use mubkit_core::characters::FieldCharacters;
use mubkit_core::entanglement::{partial_trace, BellLabel, BellState, Subsystem};
use mubkit_core::finite_field::FieldContext;
use mubkit_core::galois_ring::RingContext;
use mubkit_core::mub::{field_phase_basis, StateVector};
use mubkit_core::phase_operator::phase_statistics;
use mubkit_core::report::VerificationReport;
use mubkit_core::{root_of_unity, C64};
use proptest::prelude::*;

fn finite_value() -> impl Strategy<Value = f64> {
    prop_oneof![
        Just(0.0),
        -1e12f64..1e12,
        -1e-6f64..1e-6,
        Just(204.0),
        Just(-2.0 * std::f64::consts::PI * std::f64::consts::PI / 3.0),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn report_emission_is_canonical(
        rows in prop::collection::vec(
            ("[a-z]{1,10}(\\.[a-z]{1,6})?", finite_value(), finite_value(), 0.0f64..1.0),
            0..8,
        )
    ) {
        let mut report = VerificationReport::new();
        for (name, measured, expected, tolerance) in rows {
            report.record(name, "randomized row", measured, expected, tolerance);
        }
        let emitted = report.to_json();
        let reparsed = VerificationReport::from_json(&emitted).unwrap();
        prop_assert_eq!(reparsed.to_json(), emitted);

        let summary = report.summary();
        prop_assert_eq!(summary.pass + summary.fail, report.checks().len() as u64);
        let pass_rule_holds = report
            .checks()
            .iter()
            .all(|c| c.pass == ((c.measured - c.expected).abs() <= c.tolerance));
        prop_assert!(pass_rule_holds);
    }

    #[test]
    fn merged_reports_are_sorted_and_lossless(
        left in prop::collection::vec("[a-z]{1,6}", 0..5),
        right in prop::collection::vec("[a-z]{1,6}", 0..5),
    ) {
        let mut a = VerificationReport::new();
        for name in &left {
            a.record(name.clone(), "row", 0.0, 0.0, 0.0);
        }
        let mut b = VerificationReport::new();
        for name in &right {
            b.record(name.clone(), "row", 0.0, 0.0, 0.0);
        }
        let merged = VerificationReport::merge([a, b]);
        prop_assert_eq!(merged.checks().len(), left.len() + right.len());
        let names: Vec<_> = merged.checks().iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        prop_assert_eq!(names, sorted);
    }

    #[test]
    fn field_labels_are_a_bijection(label in 0u64..27) {
        let ctx = FieldContext::new(3, 3).unwrap();
        let element = ctx.unlabel(label).unwrap();
        prop_assert_eq!(element.label(), label);
    }

    #[test]
    fn field_algebra_laws(a in 0u64..25, b in 0u64..25, c in 0u64..25) {
        let ctx = FieldContext::new(5, 2).unwrap();
        let (a, b, c) = (ctx.unlabel(a).unwrap(), ctx.unlabel(b).unwrap(), ctx.unlabel(c).unwrap());
        prop_assert_eq!(a.add(&b).label(), b.add(&a).label());
        prop_assert_eq!(a.mul(&b.add(&c)).label(), a.mul(&b).add(&a.mul(&c)).label());
        prop_assert_eq!(a.add(&b).add(&c).label(), a.add(&b.add(&c)).label());
    }

    #[test]
    fn field_trace_is_additive(a in 0u64..27, b in 0u64..27) {
        let ctx = FieldContext::new(3, 3).unwrap();
        let (a, b) = (ctx.unlabel(a).unwrap(), ctx.unlabel(b).unwrap());
        prop_assert_eq!(a.add(&b).trace(), (a.trace() + b.trace()) % 3);
    }

    #[test]
    fn ring_labels_and_trace(a in 0u64..64, b in 0u64..64) {
        let ctx = RingContext::new(3).unwrap();
        let x = ctx.unlabel(a).unwrap();
        let y = ctx.unlabel(b).unwrap();
        prop_assert_eq!(x.label(), a);
        prop_assert_eq!(x.add(&y).trace(), (x.trace() + y.trace()) % 4);
        // units are exactly the elements with nonzero Teichmuller part
        let (teich, _) = x.two_adic_decompose();
        prop_assert_eq!(x.is_unit(), !teich.is_zero());
    }

    #[test]
    fn root_of_unity_is_a_homomorphism(a in -200i64..200, b in -200i64..200, den in 1u64..40) {
        let left: C64 = root_of_unity(a + b, den);
        let right = root_of_unity::<f64>(a, den) * root_of_unity::<f64>(b, den);
        prop_assert!((left - right).norm() < 1e-12);
    }

    #[test]
    fn phase_distribution_is_complete(beta in -10.0f64..10.0, a in 0u64..5, k in 0u64..5) {
        let ctx = FieldContext::new(5, 1).unwrap();
        let chars = FieldCharacters::new(&ctx).unwrap();
        let basis = field_phase_basis::<f64>(&chars, a, k).unwrap();
        let stats = phase_statistics(&basis, beta).unwrap();
        let total: f64 = stats.distribution.iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
        prop_assert!(stats.variance >= -1e-12);
    }

    #[test]
    fn gauss_sum_magnitude_on_generic_pairs(k in 1u64..6, c in 1u64..7) {
        let ctx = FieldContext::new(7, 1).unwrap();
        let chars = FieldCharacters::new(&ctx).unwrap();
        let g: C64 = chars.gauss_sum(k, &ctx.unlabel(c).unwrap()).unwrap();
        prop_assert!((g.norm() - 7f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn reduced_states_are_positive(
        raw in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9),
        probe in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 3),
    ) {
        let mut amps: Vec<C64> = raw.iter().map(|&(re, im)| C64::new(re, im)).collect();
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        prop_assume!(norm > 1e-3);
        for z in &mut amps {
            *z /= norm;
        }
        let label = BellLabel { h: 0, a: None, b: None, k: Some(0) };
        let state = BellState::from_amps(3, label, amps).unwrap();
        let z: Vec<C64> = probe.iter().map(|&(re, im)| C64::new(re, im)).collect();
        for keep in [Subsystem::First, Subsystem::Second] {
            let rho = partial_trace(&state, keep);
            prop_assert!((rho.trace() - C64::new(1.0, 0.0)).norm() < 1e-9);
            // z-dagger rho z stays nonnegative for a Gram-built matrix
            let mut quad = C64::new(0.0, 0.0);
            for r in 0..3 {
                for c in 0..3 {
                    quad += z[r].conj() * rho.entry(r, c) * z[c];
                }
            }
            prop_assert!(quad.im.abs() < 1e-9);
            prop_assert!(quad.re > -1e-9);
        }
    }

    #[test]
    fn state_vector_inner_is_conjugate_symmetric(
        raw_u in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4),
        raw_v in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4),
    ) {
        let u = StateVector::from_amps(raw_u.iter().map(|&(re, im)| C64::new(re, im)).collect()).unwrap();
        let v = StateVector::from_amps(raw_v.iter().map(|&(re, im)| C64::new(re, im)).collect()).unwrap();
        let uv = u.inner(&v);
        let vu = v.inner(&u);
        prop_assert!((uv - vu.conj()).norm() < 1e-12);
    }
}
