//! The quadratic phase operator Theta = sum_b theta_b |theta_b^a><theta_b^a|
//! with theta_b = 2 pi b / q, its matrix elements through the partial sums
//! S(n,m) = sum_b b w^{tr[b(n-m)]} and T(n,m) = sum_b b^2 w^{tr[b(n-m)]},
//! the phase-number commutator, and phase statistics of pure probe states.
//!
//! Every operator is built twice, spectrally (sum of weighted projectors) and
//! through the S-sum expansion of its matrix elements, and the two builds are
//! required to agree; disagreement panics as a broken construction.

use num_complex::Complex;
use num_traits::Zero;

use crate::characters::{ring_additive_character, FieldCharacters};
use crate::error::{Error, Result};
use crate::finite_field::{FieldContext, FieldElement};
use crate::galois_ring::RingContext;
use crate::mub::{field_phase_basis, ring_phase_basis, Basis, BasisLabel, StateVector};
use crate::scalar::{root_of_unity, Scalar};

/// Largest dimension for dense operator work (q^2 entries).
pub const MAX_OPERATOR_DIM: u64 = 1 << 10;

/// A dense q x q complex matrix.
#[derive(Clone, Debug)]
pub struct OperatorMatrix<T: Scalar> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        OperatorMatrix {
            dim,
            entries: vec![Complex::zero(); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, n: usize, m: usize) -> Complex<T> {
        self.entries[n * self.dim + m]
    }

    pub fn set(&mut self, n: usize, m: usize, value: Complex<T>) {
        self.entries[n * self.dim + m] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::zero(), |acc, i| acc + self.entry(i, i))
    }

    pub fn mul(&self, other: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let mut out = OperatorMatrix::zeros(self.dim);
        for n in 0..self.dim {
            for j in 0..self.dim {
                let a = self.entry(n, j);
                if a.is_zero() {
                    continue;
                }
                for m in 0..self.dim {
                    let v = out.entry(n, m) + a * other.entry(j, m);
                    out.set(n, m, v);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &OperatorMatrix<T>) -> OperatorMatrix<T> {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        OperatorMatrix {
            dim: self.dim,
            entries,
        }
    }

    /// Theta |v> as raw amplitudes.
    pub fn apply(&self, v: &StateVector<T>) -> Vec<Complex<T>> {
        assert_eq!(self.dim, v.dim(), "operator/state dimension mismatch");
        (0..self.dim)
            .map(|n| {
                (0..self.dim).fold(Complex::zero(), |acc: Complex<T>, m| {
                    acc + self.entry(n, m) * v.amps()[m]
                })
            })
            .collect()
    }

    /// Largest |entry(n,m) - conj(entry(m,n))|.
    pub fn hermiticity_deviation(&self) -> T {
        let mut worst = T::zero();
        for n in 0..self.dim {
            for m in 0..self.dim {
                let dev = (self.entry(n, m) - self.entry(m, n).conj()).norm();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }

    /// Largest |entry + conj(transposed entry)|; zero for antihermitian matrices.
    pub fn antihermiticity_deviation(&self) -> T {
        let mut worst = T::zero();
        for n in 0..self.dim {
            for m in 0..self.dim {
                let dev = (self.entry(n, m) + self.entry(m, n).conj()).norm();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }

    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|e| e.norm())
            .fold(T::zero(), T::max)
    }

    pub fn max_entry_distance(&self, other: &OperatorMatrix<T>) -> T {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

/// S(n,m) = sum over b in F_q of label(b) w_p^{tr[b(n-m)]}, by direct summation.
pub fn s_sum<T: Scalar>(chars: &FieldCharacters, n: &FieldElement, m: &FieldElement) -> Complex<T> {
    let ctx = chars.context();
    let d = n.sub(m);
    let mut total = Complex::zero();
    for b in ctx.elements() {
        let weight = T::from_u64(b.label()).unwrap();
        total += chars.additive::<T>(&b.mul(&d)).scale(weight);
    }
    total
}

/// Closed form of S: q(q-1)/2 on the diagonal, q/(x - 1) with
/// x = w_p^{tr(n-m)} off it. The off-diagonal form is exact for prime q,
/// where tr(b d) = b tr(d) for integer b; for m > 1 it is diagnostic only.
pub fn s_sum_closed<T: Scalar>(
    chars: &FieldCharacters,
    n: &FieldElement,
    m: &FieldElement,
) -> Complex<T> {
    let q = chars.context().q();
    if n == m {
        let diag = T::from_u64(q * (q - 1) / 2).unwrap();
        return Complex::new(diag, T::zero());
    }
    let x: Complex<T> = root_of_unity(n.sub(m).trace() as i64, chars.context().p());
    let qf = T::from_u64(q).unwrap();
    Complex::new(qf, T::zero()) / (x - Complex::new(T::one(), T::zero()))
}

/// T(n,m) = sum over b in F_q of label(b)^2 w_p^{tr[b(n-m)]}, direct summation.
pub fn t_sum<T: Scalar>(chars: &FieldCharacters, n: &FieldElement, m: &FieldElement) -> Complex<T> {
    let ctx = chars.context();
    let d = n.sub(m);
    let mut total = Complex::zero();
    for b in ctx.elements() {
        let weight = T::from_u64(b.label() * b.label()).unwrap();
        total += chars.additive::<T>(&b.mul(&d)).scale(weight);
    }
    total
}

/// Closed form of T: the diagonal is sum of squares q^3/3 - q^2/2 + q/6; off
/// the diagonal, for prime q, differentiating the geometric series twice gives
/// T(n,m) = -q^2/(1-x) - 2qx/(1-x)^2 with x = w_p^{tr(n-m)}.
pub fn t_sum_closed<T: Scalar>(
    chars: &FieldCharacters,
    n: &FieldElement,
    m: &FieldElement,
) -> Complex<T> {
    let q = chars.context().q();
    if n == m {
        let diag = T::from_u64((q - 1) * q * (2 * q - 1) / 6).unwrap();
        return Complex::new(diag, T::zero());
    }
    let x: Complex<T> = root_of_unity(n.sub(m).trace() as i64, chars.context().p());
    let one = Complex::new(T::one(), T::zero());
    let qf = Complex::new(T::from_u64(q).unwrap(), T::zero());
    -qf * qf / (one - x) - (qf + qf) * x / ((one - x) * (one - x))
}

/// The number operator N = diag(0, 1, ..., q-1).
pub fn number_operator<T: Scalar>(dim: usize) -> OperatorMatrix<T> {
    let mut n_op = OperatorMatrix::zeros(dim);
    for n in 0..dim {
        n_op.set(n, n, Complex::new(T::from_usize(n).unwrap(), T::zero()));
    }
    n_op
}

fn check_operator_dim(dim: u64) -> Result<()> {
    if dim > MAX_OPERATOR_DIM {
        return Err(Error::OperatorTooLarge(dim, MAX_OPERATOR_DIM));
    }
    Ok(())
}

/// Spectral build: Theta = sum_b theta_b |v_b><v_b| from a basis carrying
/// eigenvalues.
fn spectral_operator<T: Scalar>(basis: &Basis<T>) -> Result<OperatorMatrix<T>> {
    let eigenvalues = basis
        .eigenvalues()
        .ok_or_else(|| Error::Malformed("basis carries no phase eigenvalues".into()))?;
    let dim = basis.dim();
    let mut theta = OperatorMatrix::zeros(dim);
    for (v, &lambda) in basis.vectors().iter().zip(eigenvalues) {
        for n in 0..dim {
            for m in 0..dim {
                let add = (v.amps()[n] * v.amps()[m].conj()).scale(lambda);
                let val = theta.entry(n, m) + add;
                theta.set(n, m, val);
            }
        }
    }
    Ok(theta)
}

fn assert_phase_operator_shape<T: Scalar>(theta: &OperatorMatrix<T>, dim: u64) {
    let herm = theta.hermiticity_deviation();
    assert!(
        herm <= T::BUILD_TOL,
        "phase operator is not Hermitian: deviation {herm}"
    );
    let qf = T::from_u64(dim).unwrap();
    let expected_diag = T::PI() * (qf - T::one()) / qf;
    for n in 0..theta.dim() {
        let dev = (theta.entry(n, n) - Complex::new(expected_diag, T::zero())).norm();
        assert!(
            dev <= T::BUILD_TOL,
            "diagonal entry {n} is not pi(q-1)/q: off by {dev}"
        );
    }
}

/// Field phase operator for basis index a and character index k, built
/// spectrally and revalidated against its S-sum expansion
/// Theta(n,m) = (2 pi / q^2) psi_k(n-m) w_p^{tr[a(n^2-m^2)]} S(n,m).
pub fn phase_operator_field<T: Scalar>(
    ctx: &FieldContext,
    a_label: u64,
    k: u64,
) -> Result<OperatorMatrix<T>> {
    check_operator_dim(ctx.q())?;
    let chars = FieldCharacters::new(ctx)?;
    let basis = field_phase_basis::<T>(&chars, a_label, k)?;
    let theta = spectral_operator(&basis)?;

    let q = ctx.q();
    let a = ctx.unlabel(a_label)?;
    let scale = T::TAU() / T::from_u64(q * q).unwrap();
    let elements: Vec<FieldElement> = ctx.elements().collect();
    let mut expansion = OperatorMatrix::zeros(q as usize);
    for (ni, n) in elements.iter().enumerate() {
        for (mi, m) in elements.iter().enumerate() {
            let label_phase = root_of_unity::<T>(ni as i64 - mi as i64, q).powu(k as u32);
            let quad = a.mul(&n.mul(n).sub(&m.mul(m)));
            let value =
                label_phase * chars.additive::<T>(&quad) * s_sum::<T>(&chars, n, m).scale(scale);
            expansion.set(ni, mi, value);
        }
    }
    let gap = theta.max_entry_distance(&expansion);
    assert!(
        gap <= T::VERIFY_TOL,
        "spectral and expansion builds disagree by {gap}"
    );
    assert_phase_operator_shape(&theta, q);
    Ok(theta)
}

/// Ring phase operator for Teichmuller index a, cross-validated against the
/// expansion with S~(n,m) = sum_b index(b) i^{tr~[2b(n-m)]} and prefactor
/// i^{tr~[a(n-m)]}.
pub fn phase_operator_ring<T: Scalar>(
    ctx: &RingContext,
    a_index: u64,
    k: u64,
) -> Result<OperatorMatrix<T>> {
    check_operator_dim(ctx.dim())?;
    let basis = ring_phase_basis::<T>(ctx, a_index, k)?;
    let theta = spectral_operator(&basis)?;

    let dim = ctx.dim();
    let teich = ctx.teichmuller_set();
    let a = &teich[a_index as usize];
    let scale = T::TAU() / T::from_u64(dim * dim).unwrap();
    let mut expansion = OperatorMatrix::zeros(dim as usize);
    for (ni, n) in teich.iter().enumerate() {
        for (mi, m) in teich.iter().enumerate() {
            let d = n.sub(m);
            let label_phase = root_of_unity::<T>(ni as i64 - mi as i64, dim).powu(k as u32);
            let mut s_ring = Complex::zero();
            for (bi, b) in teich.iter().enumerate() {
                let weight = T::from_usize(bi).unwrap();
                s_ring += ring_additive_character::<T>(&b.scale(2).mul(&d)).scale(weight);
            }
            let value =
                label_phase * ring_additive_character::<T>(&a.mul(&d)) * s_ring.scale(scale);
            expansion.set(ni, mi, value);
        }
    }
    let gap = theta.max_entry_distance(&expansion);
    assert!(
        gap <= T::VERIFY_TOL,
        "spectral and expansion builds disagree by {gap}"
    );
    assert_phase_operator_shape(&theta, dim);
    Ok(theta)
}

/// The phase-number commutator [Theta, N] = Theta N - N Theta, computed from
/// its elementwise form u(n,m) = (m - n) Theta(n,m) with the integer label
/// difference, and cross-validated against the dense matrix commutator.
///
/// Diagonal exactly zero; antihermitian.
pub fn commutator_field<T: Scalar>(
    ctx: &FieldContext,
    a_label: u64,
    k: u64,
) -> Result<OperatorMatrix<T>> {
    let theta = phase_operator_field::<T>(ctx, a_label, k)?;
    let dim = theta.dim();
    let chars = FieldCharacters::new(ctx)?;
    let a = ctx.unlabel(a_label)?;
    let q = ctx.q();
    let scale = T::TAU() / T::from_u64(q * q).unwrap();
    let elements: Vec<FieldElement> = ctx.elements().collect();

    let mut u = OperatorMatrix::zeros(dim);
    for (ni, n) in elements.iter().enumerate() {
        for (mi, m) in elements.iter().enumerate() {
            if ni == mi {
                continue; // (m - n) factor vanishes: diagonal is exactly zero
            }
            let diff = T::from_i64(mi as i64 - ni as i64).unwrap();
            let label_phase = root_of_unity::<T>(ni as i64 - mi as i64, q).powu(k as u32);
            let quad = a.mul(&n.mul(n).sub(&m.mul(m)));
            let value = label_phase
                * chars.additive::<T>(&quad)
                * s_sum::<T>(&chars, n, m).scale(scale * diff);
            u.set(ni, mi, value);
        }
    }

    let n_op = number_operator::<T>(dim);
    let direct = theta.mul(&n_op).sub(&n_op.mul(&theta));
    let gap = u.max_entry_distance(&direct);
    assert!(
        gap <= T::VERIFY_TOL,
        "elementwise and dense commutators disagree by {gap}"
    );
    let anti = u.antihermiticity_deviation();
    assert!(
        anti <= T::BUILD_TOL,
        "commutator is not antihermitian: deviation {anti}"
    );
    Ok(u)
}

/// The exact diagonal second-moment combination
/// (4 pi^2 / q^4) q T(n,n) - (8 pi^2 / q^4) S(n,n)^2
/// = -(2 pi^2 / 3)(q-1)(q-2)/q^2, which tends to -2 pi^2 / 3 from above.
pub fn diagonal_variance_estimate(q: u64) -> f64 {
    let qf = q as f64;
    let s_diag = qf * (qf - 1.0) / 2.0;
    let t_diag = (qf - 1.0) * qf * (2.0 * qf - 1.0) / 6.0;
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    4.0 * pi2 / qf.powi(4) * qf * t_diag - 8.0 * pi2 / qf.powi(4) * s_diag * s_diag
}

/// Probe state |f> with amplitudes u_n = exp(i n beta) / sqrt(q).
#[derive(Clone, Debug)]
pub struct PhaseProbeState<T: Scalar> {
    beta: T,
    state: StateVector<T>,
}

impl<T: Scalar> PhaseProbeState<T> {
    pub fn new(dim: usize, beta: T) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput("probe state dimension"));
        }
        if !beta.is_finite() {
            return Err(Error::Malformed(
                "probe parameter beta must be finite".into(),
            ));
        }
        let scale = T::from_usize(dim).unwrap().sqrt().recip();
        let amps = (0..dim)
            .map(|n| Complex::from_polar(scale, beta * T::from_usize(n).unwrap()))
            .collect();
        let state = StateVector::from_amps(amps)?;
        debug_assert!(
            (state.norm() - T::one()).abs() < T::from_f64(1e-12).unwrap().max(T::BUILD_TOL)
        );
        Ok(PhaseProbeState { beta, state })
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn state(&self) -> &StateVector<T> {
        &self.state
    }
}

/// Distribution, expectation, and variance of the phase eigenvalues in a
/// probe state.
#[derive(Clone, Debug)]
pub struct PhaseStats<T: Scalar> {
    pub basis_label: BasisLabel,
    pub k: u64,
    pub beta: T,
    pub distribution: Vec<T>,
    pub expectation: T,
    pub variance: T,
}

/// P(b) = |<theta_b|f>|^2, <Theta> = sum theta_b P(b), and the variance
/// sum (theta_b - <Theta>)^2 P(b), cross-checked against
/// sum theta_b^2 P(b) - <Theta>^2.
pub fn phase_statistics<T: Scalar>(basis: &Basis<T>, beta: T) -> Result<PhaseStats<T>> {
    let eigenvalues = basis
        .eigenvalues()
        .ok_or_else(|| Error::Malformed("basis carries no phase eigenvalues".into()))?;
    let probe = PhaseProbeState::new(basis.dim(), beta)?;
    let distribution: Vec<T> = basis
        .vectors()
        .iter()
        .map(|v| v.inner(probe.state()).norm_sqr())
        .collect();

    let total = distribution.iter().fold(T::zero(), |acc, &p| acc + p);
    assert!(
        (total - T::one()).abs() <= T::VERIFY_TOL,
        "phase distribution does not sum to 1: {total}"
    );

    let expectation = distribution
        .iter()
        .zip(eigenvalues)
        .fold(T::zero(), |acc, (&p, &th)| acc + p * th);
    let variance = distribution
        .iter()
        .zip(eigenvalues)
        .fold(T::zero(), |acc, (&p, &th)| {
            acc + p * (th - expectation) * (th - expectation)
        });
    let second_moment = distribution
        .iter()
        .zip(eigenvalues)
        .fold(T::zero(), |acc, (&p, &th)| acc + p * th * th);
    let alt = second_moment - expectation * expectation;
    assert!(
        (variance - alt).abs() <= T::VERIFY_TOL,
        "variance identity violated: {variance} vs {alt}"
    );

    Ok(PhaseStats {
        basis_label: basis.label(),
        k: basis.k(),
        beta,
        distribution,
        expectation,
        variance,
    })
}

/// One emitted row of a beta sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow<T: Scalar> {
    pub beta: T,
    pub b: u64,
    pub probability: T,
    pub expectation: T,
    pub variance: T,
}

/// A full sweep: q rows per grid point plus the sweep-level extrema.
#[derive(Clone, Debug)]
pub struct BetaSweep<T: Scalar> {
    pub rows: Vec<SweepRow<T>>,
    pub max_abs_expectation: T,
    pub max_probability: T,
}

/// Evaluate phase statistics over a beta grid, row order (grid point, b).
pub fn beta_sweep<T: Scalar>(basis: &Basis<T>, betas: &[T]) -> Result<BetaSweep<T>> {
    if betas.is_empty() {
        return Err(Error::EmptyInput("beta grid"));
    }
    let mut rows = Vec::with_capacity(betas.len() * basis.dim());
    let mut max_abs_expectation = T::zero();
    let mut max_probability = T::zero();
    for &beta in betas {
        let stats = phase_statistics(basis, beta)?;
        max_abs_expectation = max_abs_expectation.max(stats.expectation.abs());
        for (b, &p) in stats.distribution.iter().enumerate() {
            max_probability = max_probability.max(p);
            rows.push(SweepRow {
                beta,
                b: b as u64,
                probability: p,
                expectation: stats.expectation,
                variance: stats.variance,
            });
        }
    }
    Ok(BetaSweep {
        rows,
        max_abs_expectation,
        max_probability,
    })
}
