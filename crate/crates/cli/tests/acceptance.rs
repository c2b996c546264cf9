//! Acceptance gate: eleven go/no-go criteria covering construction,
//! verification, frozen values, closed forms, statistics, entanglement, and
//! the command-line battery. Each criterion prints exactly one PASS or FAIL
//! line; a FAIL also panics so the harness reports red.
//!
//! The frozen tables here are deliberate duplicates of values asserted inside
//! the library. They were derived by hand and must never be regenerated from
//! the code they test.

use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mubkit_core::characters::{ring_additive_character, ring_exponential_sum, FieldCharacters};
use mubkit_core::entanglement::{
    bell_fourier_family, bell_galois_family, bell_ring_family, verify_entangled_family, ShiftMode,
};
use mubkit_core::finite_field::FieldContext;
use mubkit_core::galois_ring::{lift_basic_primitive, RingContext};
use mubkit_core::mub::{field_phase_basis, mub_field, mub_ring, verify_mub};
use mubkit_core::phase_operator::{
    commutator_field, diagonal_variance_estimate, phase_operator_field, phase_statistics, s_sum,
    s_sum_closed, t_sum, t_sum_closed,
};
use mubkit_core::report::VerificationReport;
use mubkit_core::{quarter_phase, C64};

const VERIFY_TOL: f64 = 1e-9;
const CLOSED_FORM_TOL: f64 = 1e-10;
const GOLDEN_TOL: f64 = 1e-12;

const RING_LIFTS: [(usize, &[u64]); 4] = [
    (1, &[3, 1]),
    (2, &[1, 1, 1]),
    (3, &[3, 1, 2, 1]),
    (4, &[1, 3, 2, 0, 1]),
];

const TEICH_M2: [[u64; 2]; 4] = [[0, 0], [1, 0], [0, 1], [3, 3]];
const TEICH_M3: [[u64; 3]; 8] = [
    [0, 0, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 3, 2],
    [2, 3, 3],
    [3, 3, 1],
    [1, 2, 1],
];

const TWO_ADIC_M2: [[[u64; 2]; 4]; 4] = [
    [[0, 0], [2, 0], [0, 2], [2, 2]],
    [[1, 0], [3, 0], [1, 2], [3, 2]],
    [[0, 1], [2, 1], [0, 3], [2, 3]],
    [[3, 3], [1, 3], [3, 1], [1, 1]],
];

const TRACE_M2: [u64; 4] = [0, 2, 3, 3];
const TRACE_M3: [u64; 8] = [0, 3, 2, 2, 1, 2, 1, 1];

const MUB_M1_CODES: [[[u8; 2]; 2]; 2] = [[[0, 0], [0, 2]], [[0, 1], [0, 3]]];
const MUB_M2_CODES: [[[u8; 4]; 4]; 4] = [
    [[0, 0, 0, 0], [0, 0, 2, 2], [0, 2, 2, 0], [0, 2, 0, 2]],
    [[0, 2, 3, 3], [0, 2, 1, 1], [0, 0, 1, 3], [0, 0, 3, 1]],
    [[0, 3, 3, 2], [0, 3, 1, 0], [0, 1, 1, 2], [0, 1, 3, 0]],
    [[0, 3, 2, 3], [0, 3, 0, 1], [0, 1, 0, 3], [0, 1, 2, 1]],
];
const MUB_M3_A0_SIGNS: [[i8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, -1],
    [1, 1, 1, -1, 1, -1, -1, -1],
    [1, 1, -1, 1, -1, -1, -1, 1],
    [1, -1, 1, -1, -1, -1, 1, 1],
    [1, 1, -1, -1, -1, 1, 1, -1],
    [1, -1, -1, -1, 1, 1, -1, 1],
    [1, -1, -1, 1, 1, -1, 1, -1],
];
const BELL_M1_CODES: [[u8; 2]; 4] = [[0, 0], [0, 2], [0, 1], [0, 3]];

fn conclude(n: u32, what: &str, outcome: Result<(), String>) {
    match outcome {
        Ok(()) => println!("criterion {n} PASS: {what}"),
        Err(why) => {
            println!("criterion {n} FAIL: {what}: {why}");
            panic!("acceptance criterion {n} failed: {why}");
        }
    }
}

fn report_clean(report: &VerificationReport) -> Result<(), String> {
    let failing: Vec<String> = report
        .checks()
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} measured {:e}", c.name, c.measured))
        .collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(failing.join("; "))
    }
}

fn within_budget(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

#[test]
fn criterion_01_field_sets_build_and_verify() {
    let outcome = (|| {
        let start = Instant::now();
        for (p, m) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)] {
            let ctx = FieldContext::new(p, m).map_err(|e| e.to_string())?;
            let set = mub_field::<f64>(&ctx, 0).map_err(|e| e.to_string())?;
            let q = ctx.q() as usize;
            if set.bases().len() != q + 1 {
                return Err(format!(
                    "q = {q}: expected {} bases, got {}",
                    q + 1,
                    set.bases().len()
                ));
            }
            report_clean(&verify_mub(&set, VERIFY_TOL).map_err(|e| e.to_string())?)?;
        }
        within_budget(start.elapsed(), Duration::from_secs(10))
    })();
    conclude(
        1,
        "complete field basis sets for q in {3,5,7,9,25,27} verify at 1e-9 within 10s",
        outcome,
    );
}

#[test]
fn criterion_02_ring_sets_build_and_verify() {
    let outcome = (|| {
        let start = Instant::now();
        for m in 1..=3usize {
            let ctx = RingContext::new(m).map_err(|e| e.to_string())?;
            let set = mub_ring::<f64>(&ctx, 0).map_err(|e| e.to_string())?;
            let dim = ctx.dim() as usize;
            if set.bases().len() != dim + 1 {
                return Err(format!(
                    "m = {m}: expected {} bases, got {}",
                    dim + 1,
                    set.bases().len()
                ));
            }
            report_clean(&verify_mub(&set, VERIFY_TOL).map_err(|e| e.to_string())?)?;
        }
        within_budget(start.elapsed(), Duration::from_secs(5))
    })();
    conclude(
        2,
        "complete ring basis sets for m in {1,2,3} verify at 1e-9 within 5s",
        outcome,
    );
}

#[test]
fn criterion_03_frozen_amplitude_tables() {
    let outcome = (|| {
        let mut worst: f64 = 0.0;

        let set = mub_ring::<f64>(&RingContext::new(1).map_err(|e| e.to_string())?, 0)
            .map_err(|e| e.to_string())?;
        let s2 = 2f64.sqrt().recip();
        for (a, block) in MUB_M1_CODES.iter().enumerate() {
            for (b, codes) in block.iter().enumerate() {
                for (n, &code) in codes.iter().enumerate() {
                    let want = quarter_phase::<f64>(code as u64).scale(s2);
                    worst = worst.max((set.bases()[a].vectors()[b].amps()[n] - want).norm());
                }
            }
        }

        let set = mub_ring::<f64>(&RingContext::new(2).map_err(|e| e.to_string())?, 0)
            .map_err(|e| e.to_string())?;
        for (a, block) in MUB_M2_CODES.iter().enumerate() {
            for (b, codes) in block.iter().enumerate() {
                for (n, &code) in codes.iter().enumerate() {
                    let want = quarter_phase::<f64>(code as u64).scale(0.5);
                    worst = worst.max((set.bases()[a].vectors()[b].amps()[n] - want).norm());
                }
            }
        }

        let set = mub_ring::<f64>(&RingContext::new(3).map_err(|e| e.to_string())?, 0)
            .map_err(|e| e.to_string())?;
        let s8 = 8f64.sqrt().recip();
        for (b, signs) in MUB_M3_A0_SIGNS.iter().enumerate() {
            for (n, &sign) in signs.iter().enumerate() {
                let want = C64::new(sign as f64 * s8, 0.0);
                worst = worst.max((set.bases()[0].vectors()[b].amps()[n] - want).norm());
            }
        }

        if worst <= GOLDEN_TOL {
            Ok(())
        } else {
            Err(format!("worst amplitude deviation {worst:e}"))
        }
    })();
    conclude(
        3,
        "generated amplitudes match the frozen tables for dimensions 2, 4, 8 at 1e-12",
        outcome,
    );
}

#[test]
fn criterion_04_ring_structure_is_exact() {
    let outcome = (|| {
        for (m, expected) in RING_LIFTS {
            let ctx = RingContext::new(m).map_err(|e| e.to_string())?;
            if ctx.h() != expected {
                return Err(format!(
                    "m = {m}: lift {:?} differs from {expected:?}",
                    ctx.h()
                ));
            }
            let relift = lift_basic_primitive(ctx.hbar()).map_err(|e| e.to_string())?;
            if relift != expected {
                return Err(format!(
                    "m = {m}: re-lift {relift:?} differs from {expected:?}"
                ));
            }
        }

        let ctx2 = RingContext::new(2).map_err(|e| e.to_string())?;
        let teich2 = ctx2.teichmuller_set();
        for (i, want) in TEICH_M2.iter().enumerate() {
            if teich2[i].coeffs() != want.as_slice() {
                return Err(format!(
                    "Teichmuller m=2 position {i} is {:?}",
                    teich2[i].coeffs()
                ));
            }
            if teich2[i].trace() != TRACE_M2[i] {
                return Err(format!("trace m=2 position {i} is {}", teich2[i].trace()));
            }
        }
        let ctx3 = RingContext::new(3).map_err(|e| e.to_string())?;
        let teich3 = ctx3.teichmuller_set();
        for (i, want) in TEICH_M3.iter().enumerate() {
            if teich3[i].coeffs() != want.as_slice() {
                return Err(format!(
                    "Teichmuller m=3 position {i} is {:?}",
                    teich3[i].coeffs()
                ));
            }
            if teich3[i].trace() != TRACE_M3[i] {
                return Err(format!("trace m=3 position {i} is {}", teich3[i].trace()));
            }
        }

        for (a, row) in TWO_ADIC_M2.iter().enumerate() {
            for (b, want) in row.iter().enumerate() {
                let y = teich2[a].add(&teich2[b].scale(2));
                if y.coeffs() != want.as_slice() {
                    return Err(format!("a + 2b at ({a}, {b}) is {:?}", y.coeffs()));
                }
                let (ta, tb) = y.two_adic_decompose();
                if ta.coeffs() != teich2[a].coeffs() || tb.coeffs() != teich2[b].coeffs() {
                    return Err(format!("decomposition at ({a}, {b}) broke the round trip"));
                }
            }
        }
        Ok(())
    })();
    conclude(
        4,
        "ring lifts, Teichmuller sets, traces, and the a + 2b table are exact",
        outcome,
    );
}

#[test]
fn criterion_05_character_laws() {
    let outcome = (|| {
        let ctx = FieldContext::new(3, 2).map_err(|e| e.to_string())?;
        let chars = FieldCharacters::new(&ctx).map_err(|e| e.to_string())?;
        let mut worst: f64 = 0.0;
        for x in ctx.elements() {
            for y in ctx.elements() {
                let lhs: C64 = chars.additive(&x.add(&y));
                let rhs = chars.additive::<f64>(&x) * chars.additive::<f64>(&y);
                worst = worst.max((lhs - rhs).norm());
            }
        }
        if worst > CLOSED_FORM_TOL {
            return Err(format!("additive homomorphism off by {worst:e} at q = 9"));
        }

        let ctx = FieldContext::new(7, 1).map_err(|e| e.to_string())?;
        let chars = FieldCharacters::new(&ctx).map_err(|e| e.to_string())?;
        let mut worst: f64 = 0.0;
        for k in [1u64, 2, 3] {
            for x in ctx.elements().filter(|x| !x.is_zero()) {
                for y in ctx.elements().filter(|y| !y.is_zero()) {
                    let lhs: C64 = chars
                        .genuine_multiplicative(k, &x.mul(&y))
                        .map_err(|e| e.to_string())?;
                    let rhs = chars
                        .genuine_multiplicative::<f64>(k, &x)
                        .map_err(|e| e.to_string())?
                        * chars
                            .genuine_multiplicative::<f64>(k, &y)
                            .map_err(|e| e.to_string())?;
                    worst = worst.max((lhs - rhs).norm());
                }
            }
        }
        if worst > CLOSED_FORM_TOL {
            return Err(format!(
                "multiplicative homomorphism off by {worst:e} at q = 7"
            ));
        }

        for (p, m) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2)] {
            let ctx = FieldContext::new(p, m).map_err(|e| e.to_string())?;
            let chars = FieldCharacters::new(&ctx).map_err(|e| e.to_string())?;
            let q = ctx.q();
            let sqrt_q = (q as f64).sqrt();
            for k in 0..q - 1 {
                for c in ctx.elements() {
                    let g: C64 = chars.gauss_sum(k, &c).map_err(|e| e.to_string())?;
                    let dev = match (k == 0, c.is_zero()) {
                        (true, true) => (g - C64::new(q as f64 - 1.0, 0.0)).norm(),
                        (true, false) => (g - C64::new(-1.0, 0.0)).norm(),
                        (false, true) => g.norm(),
                        (false, false) => (g.norm() - sqrt_q).abs(),
                    };
                    if dev > VERIFY_TOL {
                        return Err(format!(
                            "Gauss sum case (q={q}, k={k}, c={}) off by {dev:e}",
                            c.label()
                        ));
                    }
                }
            }
        }

        for m in 1..=3usize {
            let ctx = RingContext::new(m).map_err(|e| e.to_string())?;
            let dim = ctx.dim() as f64;
            for y in ctx.elements() {
                let gamma: C64 = ring_exponential_sum(&y);
                let dev = if y.is_zero() {
                    (gamma - C64::new(dim, 0.0)).norm()
                } else if y.is_unit() {
                    (gamma.norm() - dim.sqrt()).abs()
                } else {
                    gamma.norm()
                };
                if dev > VERIFY_TOL {
                    return Err(format!(
                        "ring exponential sum at (m={m}, y={}) off by {dev:e}",
                        y.label()
                    ));
                }
            }
        }

        let ctx = RingContext::new(2).map_err(|e| e.to_string())?;
        let at_x = ring_additive_character::<f64>(&ctx.teich_element(2));
        let at_two = ring_additive_character::<f64>(&ctx.constant(2));
        let dev = (at_x - C64::new(0.0, -1.0))
            .norm()
            .max((at_two - C64::new(1.0, 0.0)).norm());
        if dev > GOLDEN_TOL {
            return Err(format!("quartit additive character values off by {dev:e}"));
        }
        Ok(())
    })();
    conclude(
        5,
        "additive/multiplicative homomorphisms, Gauss four-case law, and ring trichotomy hold",
        outcome,
    );
}

#[test]
fn criterion_06_phase_operator_closed_forms() {
    let outcome = (|| {
        for q in [3u64, 5, 7, 11] {
            let ctx = FieldContext::new(q, 1).map_err(|e| e.to_string())?;
            let chars = FieldCharacters::new(&ctx).map_err(|e| e.to_string())?;
            for n in ctx.elements() {
                for m in ctx.elements() {
                    let ds: C64 = s_sum(&chars, &n, &m);
                    let cs: C64 = s_sum_closed(&chars, &n, &m);
                    if (ds - cs).norm() > CLOSED_FORM_TOL {
                        return Err(format!(
                            "linear sum closed form off at q={q}, ({}, {})",
                            n.label(),
                            m.label()
                        ));
                    }
                    let dt: C64 = t_sum(&chars, &n, &m);
                    let ct: C64 = t_sum_closed(&chars, &n, &m);
                    if (dt - ct).norm() > CLOSED_FORM_TOL {
                        return Err(format!(
                            "quadratic sum closed form off at q={q}, ({}, {})",
                            n.label(),
                            m.label()
                        ));
                    }
                }
            }

            let theta = phase_operator_field::<f64>(&ctx, 1, 0).map_err(|e| e.to_string())?;
            let want = PI * (q as f64 - 1.0) / q as f64;
            for n in 0..theta.dim() {
                if (theta.entry(n, n) - C64::new(want, 0.0)).norm() > VERIFY_TOL {
                    return Err(format!(
                        "diagonal entry {n} differs from pi(q-1)/q at q={q}"
                    ));
                }
            }
            if theta.hermiticity_deviation() > VERIFY_TOL {
                return Err(format!("operator at q={q} is not Hermitian"));
            }
        }
        Ok(())
    })();
    conclude(
        6,
        "phase-operator partial sums match their closed forms for q in {3,5,7,11} at 1e-10",
        outcome,
    );
}

#[test]
fn criterion_07_commutator_fixed_entry_decreases() {
    let outcome = (|| {
        let mut previous = f64::INFINITY;
        for q in [3u64, 5, 7, 11, 13] {
            let ctx = FieldContext::new(q, 1).map_err(|e| e.to_string())?;
            let u = commutator_field::<f64>(&ctx, 0, 0).map_err(|e| e.to_string())?;
            let magnitude = u.entry(0, 1).norm();
            let predicted = (PI / q as f64) / (PI / q as f64).sin();
            if (magnitude - predicted).abs() > CLOSED_FORM_TOL {
                return Err(format!(
                    "entry magnitude {magnitude} differs from {predicted} at q={q}"
                ));
            }
            if magnitude >= previous {
                return Err(format!("magnitude failed to decrease at q={q}"));
            }
            previous = magnitude;

            for n in 0..u.dim() {
                if u.entry(n, n).norm() != 0.0 {
                    return Err(format!("diagonal entry {n} nonzero at q={q}"));
                }
            }
            if u.antihermiticity_deviation() > VERIFY_TOL {
                return Err(format!("commutator at q={q} is not antihermitian"));
            }
        }
        Ok(())
    })();
    conclude(
        7,
        "the (0,1) commutator magnitude equals (pi/q)/sin(pi/q) and strictly decreases",
        outcome,
    );
}

#[test]
fn criterion_08_variance_estimate_rational_form() {
    let outcome = (|| {
        let q3 = diagonal_variance_estimate(3);
        if (q3 + 4.0 / 27.0 * PI * PI).abs() > GOLDEN_TOL {
            return Err(format!("estimate at q = 3 is {q3}, want -(4/27) pi^2"));
        }
        for q in [9u64, 81] {
            let qf = q as f64;
            let exact = -(2.0 * PI * PI / 3.0) * (qf - 1.0) * (qf - 2.0) / (qf * qf);
            let got = diagonal_variance_estimate(q);
            if (got - exact).abs() > GOLDEN_TOL {
                return Err(format!("estimate at q = {q} is {got}, want {exact}"));
            }
        }
        let limit = -2.0 * PI * PI / 3.0;
        let err9 = (diagonal_variance_estimate(9) - limit).abs();
        let err81 = (diagonal_variance_estimate(81) - limit).abs();
        if err81 >= err9 {
            return Err(format!(
                "distance to the limit grew: q=9 gives {err9:e}, q=81 gives {err81:e}"
            ));
        }
        Ok(())
    })();
    conclude(
        8,
        "the diagonal variance estimate matches -(2 pi^2/3)(q-1)(q-2)/q^2 and converges",
        outcome,
    );
}

#[test]
fn criterion_09_entangled_families() {
    let outcome = (|| {
        for q in [2u64, 3, 4, 5, 8] {
            let family = bell_fourier_family::<f64>(q).map_err(|e| e.to_string())?;
            report_clean(
                &verify_entangled_family(&family, VERIFY_TOL).map_err(|e| e.to_string())?,
            )?;
        }

        // families with quadratic labels additionally expose unbiased pairs
        let mut quadratic = Vec::new();
        let ctx = FieldContext::new(3, 1).map_err(|e| e.to_string())?;
        quadratic.push(
            bell_galois_family::<f64>(&ctx, ShiftMode::IntegerModQ).map_err(|e| e.to_string())?,
        );
        for m in 1..=2usize {
            let ctx = RingContext::new(m).map_err(|e| e.to_string())?;
            quadratic.push(bell_ring_family::<f64>(&ctx).map_err(|e| e.to_string())?);
        }
        for family in &quadratic {
            let report = verify_entangled_family(family, VERIFY_TOL).map_err(|e| e.to_string())?;
            report_clean(&report)?;
            for required in [
                "unbiasedness",
                "shift_orthogonality",
                "maximal_entanglement",
            ] {
                if !report.checks().iter().any(|c| c.name.ends_with(required)) {
                    return Err(format!(
                        "family of {} states produced no {required} check",
                        family.states().len()
                    ));
                }
            }
        }

        let family = bell_ring_family::<f64>(&RingContext::new(1).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let s2 = 2f64.sqrt().recip();
        let mut worst: f64 = 0.0;
        for (idx, state) in family.states().iter().enumerate() {
            let h = idx / 4;
            let codes = BELL_M1_CODES[idx % 4];
            for (n, &code) in codes.iter().enumerate() {
                let want = quarter_phase::<f64>(code as u64).scale(s2);
                worst = worst.max((state.amp(n, (n + h) % 2) - want).norm());
                worst = worst.max(state.amp(n, (n + h + 1) % 2).norm());
            }
        }
        if worst > GOLDEN_TOL {
            return Err(format!(
                "two-qubit family deviates from the Bell quartet by {worst:e}"
            ));
        }
        Ok(())
    })();
    conclude(
        9,
        "entangled families verify for q in {2,3,4,5,8} and match the Bell quartet at 1e-12",
        outcome,
    );
}

#[test]
fn criterion_10_statistics_and_determinism() {
    let outcome = (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d75626b6974);
        for q in [3u64, 5, 7] {
            let ctx = FieldContext::new(q, 1).map_err(|e| e.to_string())?;
            let chars = FieldCharacters::new(&ctx).map_err(|e| e.to_string())?;
            let mut worst_total: f64 = 0.0;
            let mut worst_identity: f64 = 0.0;
            for _ in 0..1000 {
                let a = rng.gen_range(0..q);
                let k = rng.gen_range(0..q);
                let beta = rng.gen_range(0.0..TAU);
                let basis = field_phase_basis::<f64>(&chars, a, k).map_err(|e| e.to_string())?;
                let eig = basis
                    .eigenvalues()
                    .expect("phase bases carry eigenvalues")
                    .to_vec();
                let stats = phase_statistics(&basis, beta).map_err(|e| e.to_string())?;
                let total: f64 = stats.distribution.iter().sum();
                worst_total = worst_total.max((total - 1.0).abs());
                let m2: f64 = stats
                    .distribution
                    .iter()
                    .zip(&eig)
                    .map(|(p, th)| p * th * th)
                    .sum();
                let alt = m2 - stats.expectation * stats.expectation;
                worst_identity = worst_identity.max((stats.variance - alt).abs());
            }
            if worst_total > VERIFY_TOL {
                return Err(format!(
                    "distribution mass off by {worst_total:e} at q = {q}"
                ));
            }
            if worst_identity > VERIFY_TOL {
                return Err(format!(
                    "variance identity off by {worst_identity:e} at q = {q}"
                ));
            }
        }

        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let a = dir.path().join("sweep_a.csv");
        let b = dir.path().join("sweep_b.csv");
        for file in [&a, &b] {
            let status = Command::new(env!("CARGO_BIN_EXE_mubkit"))
                .args([
                    "phase-sweep",
                    "--p",
                    "5",
                    "--m",
                    "1",
                    "--a",
                    "1",
                    "--k",
                    "1",
                    "--steps",
                    "64",
                    "--out",
                ])
                .arg(file)
                .status()
                .map_err(|e| e.to_string())?;
            if !status.success() {
                return Err(format!("phase-sweep exited with {status}"));
            }
        }
        let bytes_a = std::fs::read(&a).map_err(|e| e.to_string())?;
        let bytes_b = std::fs::read(&b).map_err(|e| e.to_string())?;
        if bytes_a != bytes_b {
            return Err("two identical sweep invocations produced different bytes".into());
        }
        let rows = bytes_a.iter().filter(|&&c| c == b'\n').count();
        if rows != 64 * 5 + 1 {
            return Err(format!("expected {} sweep lines, got {rows}", 64 * 5 + 1));
        }
        Ok(())
    })();
    conclude(
        10,
        "1000 random probes per q in {3,5,7} stay complete and sweeps are byte-deterministic",
        outcome,
    );
}

#[test]
fn criterion_11_command_line_battery() {
    let outcome = (|| {
        let start = Instant::now();
        let output = Command::new(env!("CARGO_BIN_EXE_mubkit"))
            .arg("paper-suite")
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if output.status.code() != Some(0) {
            let tail: String = String::from_utf8_lossy(&output.stdout)
                .lines()
                .rev()
                .take(5)
                .collect::<Vec<_>>()
                .join(" | ");
            return Err(format!(
                "exit {:?}; output tail: {tail}",
                output.status.code()
            ));
        }
        within_budget(elapsed, Duration::from_secs(60))
    })();
    conclude(11, "the command-line battery exits 0 within 60s", outcome);
}
