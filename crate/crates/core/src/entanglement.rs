//! Maximally entangled two-dit states built from shifted diagonals
//! |n, n + h> weighted by Fourier, quadratic field, or quadratic ring phases.
//!
//! For a fixed shift h the states with a common quadratic label form an
//! orthonormal set, distinct quadratic labels are mutually unbiased, and
//! distinct shifts occupy disjoint ket blocks, so they are exactly
//! orthogonal. Tracing out either subsystem of any family member leaves the
//! maximally mixed state, the defining mark of maximal entanglement.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::ring_additive_character;
use crate::error::{Error, Result};
use crate::finite_field::FieldContext;
use crate::galois_ring::RingContext;
use crate::mub::StateVector;
use crate::phase_operator::OperatorMatrix;
use crate::report::VerificationReport;
use crate::scalar::{root_of_unity, Scalar};

/// How the second tensor slot is shifted against the first.
///
/// `IntegerModQ` adds h to the position index modulo q and is the default;
/// `FieldAddition` adds the field element with label h instead. The two
/// agree on prime fields and differ on proper extensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ShiftMode {
    #[default]
    IntegerModQ,
    FieldAddition,
}

/// Phase family a Bell-type state was drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BellKind {
    Fourier,
    Galois,
    Ring,
}

impl BellKind {
    pub fn tag(&self) -> &'static str {
        match self {
            BellKind::Fourier => "fourier",
            BellKind::Galois => "galois",
            BellKind::Ring => "ring",
        }
    }
}

/// Indices identifying one state: the shift h always, then either the
/// Fourier index k or the quadratic pair (a, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BellLabel {
    pub h: u64,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub k: Option<u64>,
}

/// A pure state of two q-level systems, amplitudes row-major: position
/// n q + n' holds the coefficient of |n, n'>.
#[derive(Clone, Debug)]
pub struct BellState<T: Scalar> {
    q: u64,
    label: BellLabel,
    state: StateVector<T>,
}

impl<T: Scalar> BellState<T> {
    /// Wrap raw amplitudes; the length must be q^2 and the norm must be 1.
    pub fn from_amps(q: u64, label: BellLabel, amps: Vec<Complex<T>>) -> Result<Self> {
        let expected = (q * q) as usize;
        if amps.len() != expected {
            return Err(Error::DimensionMismatch(amps.len(), expected));
        }
        let state = StateVector::from_amps(amps)?;
        let norm = state.norm();
        if (norm - T::one()).abs() > T::BUILD_TOL {
            return Err(Error::Malformed(format!("state norm {norm} is not 1")));
        }
        Ok(BellState { q, label, state })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn label(&self) -> BellLabel {
        self.label
    }

    pub fn state(&self) -> &StateVector<T> {
        &self.state
    }

    /// Coefficient of |n, n'>.
    pub fn amp(&self, n: usize, n_prime: usize) -> Complex<T> {
        self.state.amps()[n * self.q as usize + n_prime]
    }
}

/// Which tensor slot survives a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

/// |psi_h^k> = (1/sqrt(q)) sum_n w_q^{kn} |n, n + h mod q>.
pub fn bell_fourier<T: Scalar>(q: u64, h: u64, k: u64) -> Result<BellState<T>> {
    if q < 2 {
        return Err(Error::Malformed(format!(
            "two-dit dimension {q} is below 2"
        )));
    }
    if h >= q {
        return Err(Error::ShiftOutOfRange(h, q));
    }
    if k >= q {
        return Err(Error::CharacterIndexOutOfRange(k, q));
    }
    let scale = T::from_u64(q).unwrap().sqrt().recip();
    let mut amps = vec![Complex::zero(); (q * q) as usize];
    for n in 0..q {
        let col = (n + h) % q;
        amps[(n * q + col) as usize] = root_of_unity::<T>((k * n) as i64, q).scale(scale);
    }
    BellState::from_amps(
        q,
        BellLabel {
            h,
            a: None,
            b: None,
            k: Some(k),
        },
        amps,
    )
}

/// |psi_h^{a,b}> = (1/sqrt(q)) sum_n w_p^{tr(a n^2 + b n)} |n, n + h>,
/// the shift acting on position labels or by field addition per `mode`.
pub fn bell_galois<T: Scalar>(
    ctx: &FieldContext,
    h: u64,
    a_label: u64,
    b_label: u64,
    mode: ShiftMode,
) -> Result<BellState<T>> {
    if ctx.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let q = ctx.q();
    if h >= q {
        return Err(Error::ShiftOutOfRange(h, q));
    }
    let a = ctx.unlabel(a_label)?;
    let b = ctx.unlabel(b_label)?;
    let h_elem = ctx.unlabel(h)?;
    let scale = T::from_u64(q).unwrap().sqrt().recip();
    let mut amps = vec![Complex::zero(); (q * q) as usize];
    for n in ctx.elements() {
        let row = n.label();
        let col = match mode {
            ShiftMode::IntegerModQ => (row + h) % q,
            ShiftMode::FieldAddition => n.add(&h_elem).label(),
        };
        let quad = a.mul(&n.mul(&n)).add(&b.mul(&n));
        amps[(row * q + col) as usize] =
            root_of_unity::<T>(quad.trace() as i64, ctx.p()).scale(scale);
    }
    BellState::from_amps(
        q,
        BellLabel {
            h,
            a: Some(a_label),
            b: Some(b_label),
            k: None,
        },
        amps,
    )
}

/// |psi_h^{a,b}> = (1/sqrt(2^m)) sum_n i^{tr~[(a + 2b) n]} |n, n + h>,
/// n running over the Teichmuller set, a and b Teichmuller positions, the
/// shift acting on positions modulo 2^m.
pub fn bell_ring<T: Scalar>(
    ctx: &RingContext,
    h: u64,
    a_index: u64,
    b_index: u64,
) -> Result<BellState<T>> {
    let q = ctx.dim();
    if h >= q {
        return Err(Error::ShiftOutOfRange(h, q));
    }
    if a_index >= q {
        return Err(Error::LabelOutOfRange(a_index, q));
    }
    if b_index >= q {
        return Err(Error::LabelOutOfRange(b_index, q));
    }
    let teich = ctx.teichmuller_set();
    let c = teich[a_index as usize].add(&teich[b_index as usize].scale(2));
    let scale = T::from_u64(q).unwrap().sqrt().recip();
    let mut amps = vec![Complex::zero(); (q * q) as usize];
    for (i, n) in teich.iter().enumerate() {
        let col = (i as u64 + h) % q;
        amps[(i as u64 * q + col) as usize] = ring_additive_character::<T>(&c.mul(n)).scale(scale);
    }
    BellState::from_amps(
        q,
        BellLabel {
            h,
            a: Some(a_index),
            b: Some(b_index),
            k: None,
        },
        amps,
    )
}

/// A collection of Bell-type states over a common dimension, ordered by
/// (h, a, b) or (h, k) ascending.
#[derive(Clone, Debug)]
pub struct BellFamily<T: Scalar> {
    q: u64,
    kind: BellKind,
    states: Vec<BellState<T>>,
}

impl<T: Scalar> BellFamily<T> {
    pub fn from_parts(q: u64, kind: BellKind, states: Vec<BellState<T>>) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::EmptyInput("entangled family"));
        }
        for s in &states {
            if s.q != q {
                return Err(Error::DimensionMismatch(s.q as usize, q as usize));
            }
        }
        Ok(BellFamily { q, kind, states })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn kind(&self) -> BellKind {
        self.kind
    }

    pub fn states(&self) -> &[BellState<T>] {
        &self.states
    }
}

/// All q^2 Fourier states: a full orthonormal basis of the two-dit space.
pub fn bell_fourier_family<T: Scalar>(q: u64) -> Result<BellFamily<T>> {
    if q < 2 {
        return Err(Error::Malformed(format!(
            "two-dit dimension {q} is below 2"
        )));
    }
    let states = (0..q * q)
        .into_par_iter()
        .map(|i| bell_fourier(q, i / q, i % q))
        .collect::<Result<Vec<_>>>()?;
    BellFamily::from_parts(q, BellKind::Fourier, states)
}

/// All q^3 quadratic field states over (h, a, b).
pub fn bell_galois_family<T: Scalar>(ctx: &FieldContext, mode: ShiftMode) -> Result<BellFamily<T>> {
    let q = ctx.q();
    let states = (0..q * q * q)
        .into_par_iter()
        .map(|i| bell_galois(ctx, i / (q * q), (i / q) % q, i % q, mode))
        .collect::<Result<Vec<_>>>()?;
    BellFamily::from_parts(q, BellKind::Galois, states)
}

/// All q^3 quadratic ring states over (h, a, b), q = 2^m.
pub fn bell_ring_family<T: Scalar>(ctx: &RingContext) -> Result<BellFamily<T>> {
    let q = ctx.dim();
    let states = (0..q * q * q)
        .into_par_iter()
        .map(|i| bell_ring(ctx, i / (q * q), (i / q) % q, i % q))
        .collect::<Result<Vec<_>>>()?;
    BellFamily::from_parts(q, BellKind::Ring, states)
}

/// Reduced density matrix of one subsystem,
/// rho_1(n, n') = sum_j A(n, j) A(n', j)* and the transposed-index analogue
/// for the second slot. A Gram construction, so positive semidefinite by
/// shape with trace equal to the squared norm.
pub fn partial_trace<T: Scalar>(state: &BellState<T>, keep: Subsystem) -> OperatorMatrix<T> {
    let q = state.q as usize;
    let mut rho = OperatorMatrix::zeros(q);
    for r in 0..q {
        for c in 0..q {
            let mut sum = Complex::zero();
            for j in 0..q {
                sum += match keep {
                    Subsystem::First => state.amp(r, j) * state.amp(c, j).conj(),
                    Subsystem::Second => state.amp(j, r) * state.amp(j, c).conj(),
                };
            }
            rho.set(r, c, sum);
        }
    }
    rho
}

fn max_distance_from_maximally_mixed<T: Scalar>(rho: &OperatorMatrix<T>) -> T {
    let q = rho.dim();
    let mixed = T::from_usize(q).unwrap().recip();
    let mut worst = T::zero();
    for r in 0..q {
        for c in 0..q {
            let expected = if r == c { mixed } else { T::zero() };
            let dev = (rho.entry(r, c) - Complex::new(expected, T::zero())).norm();
            if dev > worst {
                worst = dev;
            }
        }
    }
    worst
}

/// Check the four defining layers of a family: same-(h, label-block)
/// orthonormality, same-shift unbiasedness across quadratic labels,
/// exact orthogonality across shifts, and maximal mixing of every reduced
/// state. Each layer contributes its worst deviation as one report row.
pub fn verify_entangled_family<T: Scalar>(
    family: &BellFamily<T>,
    tolerance: f64,
) -> Result<VerificationReport> {
    let states = family.states();
    let q = T::from_u64(family.q()).unwrap();
    let unbiased = q.sqrt().recip();

    // (within, unbiased, cross) deviations plus whether the middle layer has
    // any pairs at all (it never does for the Fourier family)
    let (within_dev, unbiased_dev, cross_dev, has_unbiased, has_cross) = (0..states.len())
        .into_par_iter()
        .map(|i| {
            let si = &states[i];
            let mut within = (si.state.norm() - T::one()).abs();
            let mut unb = T::zero();
            let mut cross = T::zero();
            let mut has_unb = false;
            let mut has_cross = false;
            for sj in &states[i + 1..] {
                let overlap = si.state.inner(&sj.state).norm();
                if si.label.h != sj.label.h {
                    has_cross = true;
                    cross = cross.max(overlap);
                } else if (si.label.a == sj.label.a && si.label.b != sj.label.b)
                    || si.label.k != sj.label.k
                {
                    within = within.max(overlap);
                } else {
                    has_unb = true;
                    unb = unb.max((overlap - unbiased).abs());
                }
            }
            (within, unb, cross, has_unb, has_cross)
        })
        .reduce(
            || (T::zero(), T::zero(), T::zero(), false, false),
            |x, y| {
                (
                    x.0.max(y.0),
                    x.1.max(y.1),
                    x.2.max(y.2),
                    x.3 || y.3,
                    x.4 || y.4,
                )
            },
        );

    let reduced_dev = states
        .par_iter()
        .map(|s| {
            let first = max_distance_from_maximally_mixed(&partial_trace(s, Subsystem::First));
            let second = max_distance_from_maximally_mixed(&partial_trace(s, Subsystem::Second));
            first.max(second)
        })
        .reduce(T::zero, T::max);

    let prefix = format!("bell.{}.q{}", family.kind().tag(), family.q());
    let mut report = VerificationReport::new();
    report.record(
        format!("{prefix}.orthonormality"),
        "states sharing a shift and quadratic label form an orthonormal set",
        within_dev.to_f64().unwrap(),
        0.0,
        tolerance,
    );
    if has_unbiased {
        report.record(
            format!("{prefix}.unbiasedness"),
            "same-shift overlaps across distinct quadratic labels all have magnitude 1/sqrt(q)",
            unbiased_dev.to_f64().unwrap(),
            0.0,
            tolerance,
        );
    }
    if has_cross {
        report.record(
            format!("{prefix}.shift_orthogonality"),
            "states with distinct shifts occupy disjoint ket blocks and are orthogonal",
            cross_dev.to_f64().unwrap(),
            0.0,
            tolerance,
        );
    }
    report.record(
        format!("{prefix}.maximal_entanglement"),
        "tracing out either subsystem leaves the maximally mixed state",
        reduced_dev.to_f64().unwrap(),
        0.0,
        tolerance,
    );
    Ok(report)
}
