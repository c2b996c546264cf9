//! The built-in verification battery.
//!
//! Every reproducible identity the library implements is evaluated here and
//! scored as a report row: basis-set geometry, frozen amplitude tables,
//! character sum laws, ring structure tables, phase-operator closed forms,
//! commutator behavior, phase statistics, and entangled families. The
//! resulting merged report is what the command-line `paper-suite` prints.
//!
//! Each row carries a pinned default tolerance (1e-9 for floating identities,
//! 1e-12 for frozen amplitude tables, 0 for exact integer tables); a caller
//! override replaces all of them.

use std::f64::consts::PI;

use crate::characters::{ring_additive_character, ring_exponential_sum, FieldCharacters};
use crate::entanglement::{
    bell_fourier_family, bell_galois_family, bell_ring_family, verify_entangled_family, ShiftMode,
};
use crate::error::Result;
use crate::finite_field::FieldContext;
use crate::galois_ring::{lift_basic_primitive, RingContext};
use crate::mub::{field_phase_basis, mub_field, mub_ring, verify_mub};
use crate::phase_operator::{
    commutator_field, diagonal_variance_estimate, phase_operator_field, phase_operator_ring,
    phase_statistics, s_sum, s_sum_closed, t_sum, t_sum_closed,
};
use crate::report::VerificationReport;
use crate::{quarter_phase, C64};

const DEFAULT_TOL: f64 = 1e-9;
const GOLDEN_TOL: f64 = 1e-12;
const EXACT_TOL: f64 = 0.0;

fn tol(over: Option<f64>, default: f64) -> f64 {
    over.unwrap_or(default)
}

/// Field cases (p, m) giving q in {3, 5, 7, 9, 25, 27}.
const FIELD_CASES: [(u64, usize); 6] = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)];

/// Canonical monic lifts of the default binary moduli.
const RING_LIFTS: [(usize, &[u64]); 4] = [
    (1, &[3, 1]),
    (2, &[1, 1, 1]),
    (3, &[3, 1, 2, 1]),
    (4, &[1, 3, 2, 0, 1]),
];

/// Teichmuller coefficient tables, position-major.
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

/// Coefficients of teich(a) + 2 teich(b) at m = 2, indexed [a][b].
const TWO_ADIC_M2: [[[u64; 2]; 4]; 4] = [
    [[0, 0], [2, 0], [0, 2], [2, 2]],
    [[1, 0], [3, 0], [1, 2], [3, 2]],
    [[0, 1], [2, 1], [0, 3], [2, 3]],
    [[3, 3], [1, 3], [3, 1], [1, 1]],
];

/// Trace values over the Teichmuller set at m = 3, position-major.
const TRACE_M3: [u64; 8] = [0, 3, 2, 2, 1, 2, 1, 1];

/// Quarter-power codes (amplitude = i^code / 2) of the four quadratic bases
/// at m = 2, indexed [a][b][position].
const MUB_M2_CODES: [[[u8; 4]; 4]; 4] = [
    [[0, 0, 0, 0], [0, 0, 2, 2], [0, 2, 2, 0], [0, 2, 0, 2]],
    [[0, 2, 3, 3], [0, 2, 1, 1], [0, 0, 1, 3], [0, 0, 3, 1]],
    [[0, 3, 3, 2], [0, 3, 1, 0], [0, 1, 1, 2], [0, 1, 3, 0]],
    [[0, 3, 2, 3], [0, 3, 0, 1], [0, 1, 0, 3], [0, 1, 2, 1]],
];

/// Sign matrix (entries +-1/sqrt(8)) of the first quadratic basis at m = 3.
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

/// Quarter-power codes of the two quadratic qubit bases, indexed [a][b][n].
const MUB_M1_CODES: [[[u8; 2]; 2]; 2] = [[[0, 0], [0, 2]], [[0, 1], [0, 3]]];

/// Quarter-power codes of the two-qubit entangled family: the nonzero
/// coefficient pattern per (a, b), identical at every shift.
const BELL_M1_CODES: [[u8; 2]; 4] = [[0, 0], [0, 2], [0, 1], [0, 3]];

fn basis_set_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut parts = Vec::new();
    for (p, m) in FIELD_CASES {
        let ctx = FieldContext::new(p, m)?;
        parts.push(verify_mub(&mub_field::<f64>(&ctx, 0)?, t)?);
    }
    for m in 1..=3usize {
        let ctx = RingContext::new(m)?;
        parts.push(verify_mub(&mub_ring::<f64>(&ctx, 0)?, t)?);
    }
    Ok(VerificationReport::merge(parts))
}

fn golden_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, GOLDEN_TOL);
    let mut report = VerificationReport::new();

    let ctx = RingContext::new(1)?;
    let set = mub_ring::<f64>(&ctx, 0)?;
    let s2 = 2f64.sqrt().recip();
    let mut worst: f64 = 0.0;
    for (a, block) in MUB_M1_CODES.iter().enumerate() {
        for (b, codes) in block.iter().enumerate() {
            for (n, &code) in codes.iter().enumerate() {
                let expected = quarter_phase::<f64>(code as u64).scale(s2);
                let got = set.bases()[a].vectors()[b].amps()[n];
                worst = worst.max((got - expected).norm());
            }
        }
    }
    report.record(
        "golden.mub.ring.q2.amplitudes",
        "the qubit quadratic bases are (1, +-1)/sqrt(2) and (1, +-i)/sqrt(2)",
        worst,
        0.0,
        t,
    );

    let ctx = RingContext::new(2)?;
    let set = mub_ring::<f64>(&ctx, 0)?;
    let mut worst: f64 = 0.0;
    for (a, block) in MUB_M2_CODES.iter().enumerate() {
        for (b, codes) in block.iter().enumerate() {
            for (n, &code) in codes.iter().enumerate() {
                let expected = quarter_phase::<f64>(code as u64).scale(0.5);
                let got = set.bases()[a].vectors()[b].amps()[n];
                worst = worst.max((got - expected).norm());
            }
        }
    }
    report.record(
        "golden.mub.ring.q4.amplitudes",
        "all four quartit quadratic bases match the frozen quarter-power table",
        worst,
        0.0,
        t,
    );

    let ctx = RingContext::new(3)?;
    let set = mub_ring::<f64>(&ctx, 0)?;
    let s8 = 8f64.sqrt().recip();
    let mut worst: f64 = 0.0;
    for (b, signs) in MUB_M3_A0_SIGNS.iter().enumerate() {
        for (n, &sign) in signs.iter().enumerate() {
            let expected = C64::new(sign as f64 * s8, 0.0);
            let got = set.bases()[0].vectors()[b].amps()[n];
            worst = worst.max((got - expected).norm());
        }
    }
    report.record(
        "golden.mub.ring.q8.first_basis",
        "the first two-three-qubit quadratic basis is the frozen sign matrix over sqrt(8)",
        worst,
        0.0,
        t,
    );

    let ctx = RingContext::new(1)?;
    let family = bell_ring_family::<f64>(&ctx)?;
    let mut worst: f64 = 0.0;
    for (idx, state) in family.states().iter().enumerate() {
        let h = (idx / 4) as u64;
        let codes = BELL_M1_CODES[idx % 4];
        for (n, &code) in codes.iter().enumerate() {
            let expected = quarter_phase::<f64>(code as u64).scale(s2);
            let col = (n + h as usize) % 2;
            worst = worst.max((state.amp(n, col) - expected).norm());
        }
    }
    report.record(
        "golden.bell.ring.q2.amplitudes",
        "the two-qubit family is the standard Bell quartet plus its i-phased partner",
        worst,
        0.0,
        t,
    );

    Ok(report)
}

fn ring_structure_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, EXACT_TOL);
    let mut report = VerificationReport::new();

    for (m, expected) in RING_LIFTS {
        let ctx = RingContext::new(m)?;
        let mismatches = (ctx.h() != expected) as u64 as f64
            + (lift_basic_primitive(ctx.hbar())? != expected) as u64 as f64;
        report.record(
            format!("ring.lift.m{m}.coefficients"),
            "the monic lift of the default binary modulus matches its frozen coefficients",
            mismatches,
            0.0,
            t,
        );
    }

    let ctx = RingContext::new(2)?;
    let teich = ctx.teichmuller_set();
    let mismatches = teich
        .iter()
        .zip(TEICH_M2.iter())
        .filter(|(got, want)| got.coeffs() != want.as_slice())
        .count() as f64;
    report.record(
        "ring.teichmuller.m2.table",
        "the quartit Teichmuller set is (0, 1, x, 3 + 3x)",
        mismatches,
        0.0,
        t,
    );

    let ctx3 = RingContext::new(3)?;
    let teich3 = ctx3.teichmuller_set();
    let mismatches = teich3
        .iter()
        .zip(TEICH_M3.iter())
        .filter(|(got, want)| got.coeffs() != want.as_slice())
        .count() as f64;
    report.record(
        "ring.teichmuller.m3.table",
        "the eight-element Teichmuller set matches its frozen coefficient table",
        mismatches,
        0.0,
        t,
    );

    let mut mismatches = 0u64;
    for (a, row) in TWO_ADIC_M2.iter().enumerate() {
        for (b, want) in row.iter().enumerate() {
            let y = teich[a].add(&teich[b].scale(2));
            if y.coeffs() != want.as_slice() {
                mismatches += 1;
            }
            let (ta, tb) = y.two_adic_decompose();
            if ta.coeffs() != teich[a].coeffs() || tb.coeffs() != teich[b].coeffs() {
                mismatches += 1;
            }
        }
    }
    report.record(
        "ring.two_adic.m2.table",
        "every a + 2b combination and its decomposition match the frozen 4 x 4 table",
        mismatches as f64,
        0.0,
        t,
    );

    let mut mismatches = 0u64;
    mismatches += (ctx.one().trace() != 2) as u64;
    mismatches += (ctx.teich_element(2).trace() != 3) as u64;
    mismatches += (ctx.teich_element(3).trace() != 3) as u64;
    mismatches += (ctx.constant(2).trace() != 0) as u64;
    report.record(
        "ring.trace.m2.values",
        "the quartit ring traces are tr(1) = 2, tr(x) = 3, tr(3 + 3x) = 3, tr(2) = 0",
        mismatches as f64,
        0.0,
        t,
    );

    let mismatches = teich3
        .iter()
        .zip(TRACE_M3.iter())
        .filter(|(y, &want)| y.trace() != want)
        .count() as f64;
    report.record(
        "ring.trace.m3.values",
        "the ring traces over the eight-element Teichmuller set are (0,3,2,2,1,2,1,1)",
        mismatches,
        0.0,
        t,
    );

    Ok(report)
}

fn character_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut report = VerificationReport::new();

    for (p, m) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2)] {
        let ctx = FieldContext::new(p, m)?;
        let chars = FieldCharacters::new(&ctx)?;
        let q = ctx.q();
        let sqrt_q = (q as f64).sqrt();
        let mut worst: f64 = 0.0;
        for k in 0..q - 1 {
            for c in ctx.elements() {
                let g: C64 = chars.gauss_sum(k, &c)?;
                let dev = match (k == 0, c.is_zero()) {
                    (true, true) => (g - C64::new(q as f64 - 1.0, 0.0)).norm(),
                    (true, false) => (g - C64::new(-1.0, 0.0)).norm(),
                    (false, true) => g.norm(),
                    (false, false) => (g.norm() - sqrt_q).abs(),
                };
                worst = worst.max(dev);
            }
        }
        report.record(
            format!("characters.gauss.four_case_law.q{q}"),
            "Gauss sums take the values q - 1, -1, 0, and magnitude sqrt(q) by case",
            worst,
            0.0,
            t,
        );
    }

    let ctx = FieldContext::new(3, 1)?;
    let chars = FieldCharacters::new(&ctx)?;
    let g: C64 = chars.gauss_sum(1, &ctx.one())?;
    report.record(
        "characters.gauss.quadratic.q3",
        "the quadratic Gauss sum at q = 3 equals i sqrt(3)",
        (g - C64::new(0.0, 3f64.sqrt())).norm(),
        0.0,
        tol(over, GOLDEN_TOL),
    );

    for (p, m) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2)] {
        let ctx = FieldContext::new(p, m)?;
        let chars = FieldCharacters::new(&ctx)?;
        let q = ctx.q();
        let mut excess: f64 = 0.0;
        for d in [2u64, 3] {
            if q % d == 0 {
                continue;
            }
            let bound = (d as f64 - 1.0) * (q as f64).sqrt();
            let mut coeffs = vec![ctx.zero(); d as usize + 1];
            coeffs[d as usize] = ctx.one();
            let combos = q.pow(d as u32);
            for combo in 0..combos {
                let mut rest = combo;
                for c in coeffs.iter_mut().take(d as usize) {
                    *c = ctx.unlabel(rest % q)?;
                    rest /= q;
                }
                let w: C64 = chars.weil_sum(&coeffs);
                excess = excess.max(w.norm() - bound);
            }
        }
        report.record(
            format!("characters.weil_bound.q{q}"),
            "nonconstant low-degree character sums stay within (d - 1) sqrt(q)",
            excess.max(0.0),
            0.0,
            t,
        );
    }

    for m in 1..=3usize {
        let ctx = RingContext::new(m)?;
        let dim = ctx.dim() as f64;
        let sqrt_dim = dim.sqrt();
        let mut worst: f64 = 0.0;
        for y in ctx.elements() {
            let gamma: C64 = ring_exponential_sum(&y);
            let dev = if y.is_zero() {
                (gamma - C64::new(dim, 0.0)).norm()
            } else if y.is_unit() {
                (gamma.norm() - sqrt_dim).abs()
            } else {
                gamma.norm()
            };
            worst = worst.max(dev);
        }
        report.record(
            format!("ring.exponential_sum.m{m}.trichotomy"),
            "the Teichmuller exponential sum is 2^m at zero, 0 off units, sqrt(2^m) on units",
            worst,
            0.0,
            t,
        );
    }

    let ctx = RingContext::new(2)?;
    let dev_x =
        (ring_additive_character::<f64>(&ctx.teich_element(2)) - C64::new(0.0, -1.0)).norm();
    let dev_two = (ring_additive_character::<f64>(&ctx.constant(2)) - C64::new(1.0, 0.0)).norm();
    report.record(
        "ring.additive_character.m2.values",
        "the quartit additive character sends x to -i and 2 to +1",
        dev_x.max(dev_two),
        0.0,
        tol(over, GOLDEN_TOL),
    );

    Ok(report)
}

fn phase_operator_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut report = VerificationReport::new();

    for q in [3u64, 5, 7, 11] {
        let ctx = FieldContext::new(q, 1)?;
        let chars = FieldCharacters::new(&ctx)?;
        let mut worst_s: f64 = 0.0;
        let mut worst_t: f64 = 0.0;
        for n in ctx.elements() {
            for m in ctx.elements() {
                let ds: C64 = s_sum(&chars, &n, &m);
                let cs: C64 = s_sum_closed(&chars, &n, &m);
                worst_s = worst_s.max((ds - cs).norm());
                let dt: C64 = t_sum(&chars, &n, &m);
                let ct: C64 = t_sum_closed(&chars, &n, &m);
                worst_t = worst_t.max((dt - ct).norm());
            }
        }
        report.record(
            format!("phase_op.s_closed_form.q{q}"),
            "the linear partial sum matches q(q-1)/2 on and q/(x-1) off the diagonal",
            worst_s,
            0.0,
            t,
        );
        report.record(
            format!("phase_op.t_closed_form.q{q}"),
            "the quadratic partial sum matches its two-term geometric-series form",
            worst_t,
            0.0,
            t,
        );
    }

    let ctx = FieldContext::new(3, 2)?;
    let chars = FieldCharacters::new(&ctx)?;
    let mut worst: f64 = 0.0;
    for n in ctx.elements() {
        let s: C64 = s_sum(&chars, &n, &n);
        worst = worst.max((s - C64::new(36.0, 0.0)).norm());
    }
    report.record(
        "phase_op.s_diagonal.q9",
        "the diagonal linear sum equals q(q-1)/2 even over proper extensions",
        worst,
        0.0,
        t,
    );

    for q in [3u64, 5, 7] {
        let ctx = FieldContext::new(q, 1)?;
        let theta = phase_operator_field::<f64>(&ctx, 1, 0)?;
        let expected = PI * (q as f64 - 1.0) / q as f64;
        let mut diag: f64 = 0.0;
        for n in 0..theta.dim() {
            diag = diag.max((theta.entry(n, n) - C64::new(expected, 0.0)).norm());
        }
        report.record(
            format!("phase_op.field.q{q}.diagonal"),
            "every diagonal element of the phase operator equals pi (q - 1)/q",
            diag,
            0.0,
            t,
        );
        report.record(
            format!("phase_op.field.q{q}.hermiticity"),
            "the phase operator is Hermitian",
            theta.hermiticity_deviation(),
            0.0,
            t,
        );
    }

    for m in 1..=2usize {
        let ctx = RingContext::new(m)?;
        let theta = phase_operator_ring::<f64>(&ctx, 1, 0)?;
        let dim = ctx.dim() as f64;
        let expected = PI * (dim - 1.0) / dim;
        let mut diag: f64 = 0.0;
        for n in 0..theta.dim() {
            diag = diag.max((theta.entry(n, n) - C64::new(expected, 0.0)).norm());
        }
        report.record(
            format!("phase_op.ring.m{m}.diagonal"),
            "every diagonal element of the ring phase operator equals pi (q - 1)/q",
            diag,
            0.0,
            t,
        );
    }

    let ctx = FieldContext::new(5, 1)?;
    let chars = FieldCharacters::new(&ctx)?;
    let theta = phase_operator_field::<f64>(&ctx, 1, 0)?;
    let basis = field_phase_basis::<f64>(&chars, 1, 0)?;
    let eig = basis.eigenvalues().unwrap();
    let mut residual: f64 = 0.0;
    for (b, v) in basis.vectors().iter().enumerate() {
        let image = theta.apply(v);
        let r = image
            .iter()
            .zip(v.amps())
            .map(|(out, amp)| (out - amp * eig[b]).norm_sqr())
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    report.record(
        "phase_op.eigen_residual.q5",
        "each quadratic basis vector is an eigenvector with eigenvalue 2 pi b / q",
        residual,
        0.0,
        t,
    );

    Ok(report)
}

fn commutator_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut report = VerificationReport::new();

    let mut previous = f64::INFINITY;
    let mut growth: f64 = 0.0;
    for q in [3u64, 5, 7, 11, 13] {
        let ctx = FieldContext::new(q, 1)?;
        let u = commutator_field::<f64>(&ctx, 0, 0)?;
        let magnitude = u.entry(0, 1).norm();
        let predicted = (PI / q as f64) / (PI / q as f64).sin();
        report.record(
            format!("commutator.field.q{q}.fixed_entry"),
            "the (0, 1) commutator magnitude equals (pi/q) / sin(pi/q)",
            (magnitude - predicted).abs(),
            0.0,
            t,
        );
        if previous.is_finite() {
            growth = growth.max(magnitude - previous);
        }
        previous = magnitude;
    }
    report.record(
        "commutator.fixed_entry.monotone_decrease",
        "the fixed-entry magnitude strictly decreases with growing q",
        growth.max(0.0),
        0.0,
        tol(over, EXACT_TOL),
    );

    let ctx = FieldContext::new(5, 1)?;
    let u = commutator_field::<f64>(&ctx, 1, 0)?;
    let mut diag: f64 = 0.0;
    for n in 0..u.dim() {
        diag = diag.max(u.entry(n, n).norm());
    }
    report.record(
        "commutator.field.q5.diagonal",
        "the phase-number commutator vanishes exactly on the diagonal",
        diag,
        0.0,
        tol(over, EXACT_TOL),
    );
    report.record(
        "commutator.field.q5.antihermiticity",
        "the phase-number commutator is antihermitian",
        u.antihermiticity_deviation(),
        0.0,
        t,
    );

    report.record(
        "statistics.variance_estimate.q3.exact",
        "the diagonal variance combination at q = 3 equals -(4/27) pi^2",
        (diagonal_variance_estimate(3) + 4.0 / 27.0 * PI * PI).abs(),
        0.0,
        tol(over, GOLDEN_TOL),
    );
    for q in [9u64, 81] {
        let qf = q as f64;
        let exact = -(2.0 * PI * PI / 3.0) * (qf - 1.0) * (qf - 2.0) / (qf * qf);
        report.record(
            format!("statistics.variance_estimate.q{q}.rational"),
            "the diagonal variance combination equals -(2 pi^2/3)(q-1)(q-2)/q^2",
            (diagonal_variance_estimate(q) - exact).abs(),
            0.0,
            tol(over, GOLDEN_TOL),
        );
    }
    let limit = -2.0 * PI * PI / 3.0;
    let err9 = (diagonal_variance_estimate(9) - limit).abs();
    let err81 = (diagonal_variance_estimate(81) - limit).abs();
    report.record(
        "statistics.variance_estimate.error_decreases",
        "the distance to the limit -2 pi^2/3 shrinks from q = 9 to q = 81",
        (err81 - err9).max(0.0),
        0.0,
        tol(over, EXACT_TOL),
    );

    Ok(report)
}

fn statistics_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut report = VerificationReport::new();

    for q in [3u64, 5, 7] {
        let ctx = FieldContext::new(q, 1)?;
        let chars = FieldCharacters::new(&ctx)?;
        let mut completeness: f64 = 0.0;
        let mut identity: f64 = 0.0;
        for a in [0u64, 1] {
            for k in [0u64, 1] {
                let basis = field_phase_basis::<f64>(&chars, a, k)?;
                let eig = basis.eigenvalues().unwrap().to_vec();
                for beta in [0.0f64, 0.37, 1.1, 2.9] {
                    let stats = phase_statistics(&basis, beta)?;
                    let total: f64 = stats.distribution.iter().sum();
                    completeness = completeness.max((total - 1.0).abs());
                    let m2: f64 = stats
                        .distribution
                        .iter()
                        .zip(&eig)
                        .map(|(p, th)| p * th * th)
                        .sum();
                    let alt = m2 - stats.expectation * stats.expectation;
                    identity = identity.max((stats.variance - alt).abs());
                }
            }
        }
        report.record(
            format!("statistics.completeness.q{q}"),
            "phase distributions sum to one for every probe and basis",
            completeness,
            0.0,
            t,
        );
        report.record(
            format!("statistics.variance_identity.q{q}"),
            "the central and raw second-moment variance forms agree",
            identity,
            0.0,
            t,
        );
    }

    let ctx = FieldContext::new(3, 1)?;
    let chars = FieldCharacters::new(&ctx)?;
    let basis = field_phase_basis::<f64>(&chars, 0, 0)?;
    let stats = phase_statistics(&basis, 0.0)?;
    let dev = (stats.distribution[0] - 1.0)
        .abs()
        .max(stats.distribution[1].abs())
        .max(stats.distribution[2].abs());
    report.record(
        "statistics.known_point.q3",
        "the flat probe at beta = 0 is exactly the first vector of the a = 0 basis",
        dev,
        0.0,
        tol(over, GOLDEN_TOL),
    );

    Ok(report)
}

fn entanglement_section(over: Option<f64>) -> Result<VerificationReport> {
    let t = tol(over, DEFAULT_TOL);
    let mut parts = Vec::new();
    for q in [2u64, 3, 4, 5, 8] {
        parts.push(verify_entangled_family(&bell_fourier_family::<f64>(q)?, t)?);
    }
    for q in [3u64, 5] {
        let ctx = FieldContext::new(q, 1)?;
        let family = bell_galois_family::<f64>(&ctx, ShiftMode::IntegerModQ)?;
        parts.push(verify_entangled_family(&family, t)?);
    }
    for m in 1..=3usize {
        let ctx = RingContext::new(m)?;
        parts.push(verify_entangled_family(&bell_ring_family::<f64>(&ctx)?, t)?);
    }
    Ok(VerificationReport::merge(parts))
}

fn report_integrity_section(over: Option<f64>) -> Result<VerificationReport> {
    let mut sample = VerificationReport::new();
    sample.record("sample.b", "placeholder", 0.5, 0.5, 1e-9);
    sample.record("sample.a", "placeholder", 204.0, 204.0, 1e-9);
    let emitted = sample.to_json();
    let reparsed = VerificationReport::from_json(&emitted)?;
    let canonical = (reparsed.to_json() == emitted) as u64;
    let csv_ok = sample
        .to_csv()
        .starts_with("name,paper_anchor,measured,expected,tolerance,pass\n")
        as u64;

    let mut report = VerificationReport::new();
    report.record(
        "report.roundtrip_canonical",
        "emitting, parsing, and re-emitting a report reproduces identical bytes",
        (2 - canonical - csv_ok) as f64,
        0.0,
        tol(over, EXACT_TOL),
    );
    Ok(report)
}

/// Run the complete battery, merged and sorted by check name. `tolerance`
/// replaces every per-section default when given.
pub fn verification_suite(tolerance: Option<f64>) -> Result<VerificationReport> {
    Ok(VerificationReport::merge([
        basis_set_section(tolerance)?,
        golden_section(tolerance)?,
        ring_structure_section(tolerance)?,
        character_section(tolerance)?,
        phase_operator_section(tolerance)?,
        commutator_section(tolerance)?,
        statistics_section(tolerance)?,
        entanglement_section(tolerance)?,
        report_integrity_section(tolerance)?,
    ]))
}
