//! Quantum phase states and complete sets of mutually unbiased bases.
//!
//! Field construction (odd characteristic): the vector with basis index a and
//! vector index b has amplitude psi_k(n) kappa(a n^2 + b n) / sqrt(q) at
//! position label(n). Ring construction (m qubits): amplitude
//! psi~_k(n) kappa~((a + 2b) n) / sqrt(2^m) at the Teichmuller position of n,
//! with a, b drawn from the Teichmuller set. Either way the q (or 2^m) bases
//! plus the computational basis form a complete set: every cross-basis
//! overlap has magnitude 1 / sqrt(dim).

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::characters::{ring_additive_character, FieldCharacters};
use crate::error::{Error, Result};
use crate::finite_field::FieldContext;
use crate::galois_ring::RingContext;
use crate::report::VerificationReport;
use crate::scalar::{root_of_unity, Scalar};

/// A normalized q-dimensional state.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Scalar> {
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    pub fn from_amps(amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyInput("state vector amplitudes"));
        }
        Ok(StateVector { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    /// <self|other> (conjugate-linear in self).
    pub fn inner(&self, other: &StateVector<T>) -> Complex<T> {
        assert_eq!(
            self.amps.len(),
            other.amps.len(),
            "inner product dimension mismatch"
        );
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * *b)
    }

    pub fn norm(&self) -> T {
        self.amps
            .iter()
            .map(|a| a.norm_sqr())
            .fold(T::zero(), |acc, x| acc + x)
            .sqrt()
    }
}

/// Which basis of a complete set a vector family is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// The standard basis |0>, ..., |q-1>.
    Computational,
    /// The plain Fourier (phase-state) basis, no quadratic twist.
    Fourier,
    /// The basis with quadratic index a, as a field label or Teichmuller position.
    Index(u64),
}

impl BasisLabel {
    pub fn index(&self) -> Option<u64> {
        match self {
            BasisLabel::Index(a) => Some(*a),
            _ => None,
        }
    }
}

/// An orthonormal basis, optionally carrying phase eigenvalues.
#[derive(Clone, Debug)]
pub struct Basis<T: Scalar> {
    label: BasisLabel,
    k: u64,
    vectors: Vec<StateVector<T>>,
    eigenvalues: Option<Vec<T>>,
}

impl<T: Scalar> Basis<T> {
    /// Assemble a basis from raw vectors (deserialization path). Checks shape
    /// only; orthonormality is verify_mub's job.
    pub fn from_parts(label: BasisLabel, k: u64, vectors: Vec<StateVector<T>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyInput("basis vectors"));
        }
        let dim = vectors[0].dim();
        for v in &vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch(v.dim(), dim));
            }
        }
        Ok(Basis {
            label,
            k,
            vectors,
            eigenvalues: None,
        })
    }

    pub fn label(&self) -> BasisLabel {
        self.label
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn vectors(&self) -> &[StateVector<T>] {
        &self.vectors
    }

    pub fn eigenvalues(&self) -> Option<&[T]> {
        self.eigenvalues.as_deref()
    }

    /// Largest |<v_i|v_j> - delta_ij| over all vector pairs.
    pub fn orthonormality_deviation(&self) -> T {
        let mut worst = T::zero();
        for (i, vi) in self.vectors.iter().enumerate() {
            for (j, vj) in self.vectors.iter().enumerate() {
                let overlap = vi.inner(vj);
                let target = if i == j { T::one() } else { T::zero() };
                let dev = (overlap - Complex::new(target, T::zero())).norm();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }

    fn assert_built_orthonormal(&self) {
        let dev = self.orthonormality_deviation();
        assert!(
            dev <= T::BUILD_TOL,
            "constructed basis {:?} is not orthonormal: deviation {dev}",
            self.label
        );
    }
}

/// Where a MUB set came from: the algebraic context that generated it.
#[derive(Clone, Debug)]
pub enum MubProvenance {
    Field(FieldContext),
    Ring(RingContext),
}

/// A complete (or partial, when deserialized) set of bases of one dimension.
#[derive(Clone, Debug)]
pub struct MubSet<T: Scalar> {
    provenance: MubProvenance,
    k: u64,
    bases: Vec<Basis<T>>,
}

impl<T: Scalar> MubSet<T> {
    pub fn from_parts(provenance: MubProvenance, k: u64, bases: Vec<Basis<T>>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::EmptyInput("bases"));
        }
        let dim = bases[0].dim();
        for b in &bases {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch(b.dim(), dim));
            }
        }
        Ok(MubSet {
            provenance,
            k,
            bases,
        })
    }

    pub fn provenance(&self) -> &MubProvenance {
        &self.provenance
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.bases[0].dim()
    }

    pub fn bases(&self) -> &[Basis<T>] {
        &self.bases
    }

    pub fn kind_tag(&self) -> &'static str {
        match self.provenance {
            MubProvenance::Field(_) => "field",
            MubProvenance::Ring(_) => "ring",
        }
    }
}

/// The standard basis as an explicit vector family.
pub fn computational_basis<T: Scalar>(dim: usize, k: u64) -> Basis<T> {
    let vectors = (0..dim)
        .map(|i| {
            let mut amps = vec![Complex::zero(); dim];
            amps[i] = Complex::new(T::one(), T::zero());
            StateVector { amps }
        })
        .collect();
    Basis {
        label: BasisLabel::Computational,
        k,
        vectors,
        eigenvalues: None,
    }
}

/// Phase-state basis: vector k has amplitudes exp(2 pi i k n / q) / sqrt(q)
/// and eigenvalue theta0 + 2 pi k / q.
pub fn pegg_barnett_basis<T: Scalar>(q: u64, theta0: T) -> Result<Basis<T>> {
    if q < 2 {
        return Err(Error::Malformed(format!(
            "phase basis needs dimension >= 2, got {q}"
        )));
    }
    let scale = T::from_u64(q).unwrap().sqrt().recip();
    let vectors = (0..q)
        .map(|k| {
            let amps = (0..q)
                .map(|n| root_of_unity::<T>((k * n) as i64, q).scale(scale))
                .collect();
            StateVector { amps }
        })
        .collect();
    let eigenvalues = (0..q)
        .map(|k| theta0 + T::TAU() * T::from_u64(k).unwrap() / T::from_u64(q).unwrap())
        .collect();
    let basis = Basis {
        label: BasisLabel::Fourier,
        k: 0,
        vectors,
        eigenvalues: Some(eigenvalues),
    };
    basis.assert_built_orthonormal();
    Ok(basis)
}

/// One quadratic phase basis over a field: vectors indexed by b with
/// amplitudes psi_k(n) kappa(a n^2 + b n) / sqrt(q).
pub fn field_phase_basis<T: Scalar>(
    chars: &FieldCharacters,
    a_label: u64,
    k: u64,
) -> Result<Basis<T>> {
    let ctx = chars.context();
    let q = ctx.q();
    if ctx.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if k >= q {
        return Err(Error::CharacterIndexOutOfRange(k, q));
    }
    let a = ctx.unlabel(a_label)?;
    let scale = T::from_u64(q).unwrap().sqrt().recip();
    let mut vectors = Vec::with_capacity(q as usize);
    let mut eigenvalues = Vec::with_capacity(q as usize);
    for b_label in 0..q {
        let b = ctx.unlabel(b_label)?;
        let mut amps = vec![Complex::zero(); q as usize];
        for n in ctx.elements() {
            let quad = a.mul(&n).add(&b).mul(&n); // (a n + b) n = a n^2 + b n
            let phase = chars.multiplicative_label::<T>(k, n.label())? * chars.additive::<T>(&quad);
            debug_assert!((phase.norm() - T::one()).abs() <= T::BUILD_TOL);
            amps[n.label() as usize] = phase.scale(scale);
        }
        vectors.push(StateVector { amps });
        eigenvalues.push(T::TAU() * T::from_u64(b_label).unwrap() / T::from_u64(q).unwrap());
    }
    let basis = Basis {
        label: BasisLabel::Index(a_label),
        k,
        vectors,
        eigenvalues: Some(eigenvalues),
    };
    basis.assert_built_orthonormal();
    Ok(basis)
}

/// The complete field MUB set: one basis per a in F_q (ascending label),
/// the computational basis last, q + 1 bases in total.
pub fn mub_field<T: Scalar>(ctx: &FieldContext, k: u64) -> Result<MubSet<T>> {
    if ctx.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if k >= ctx.q() {
        return Err(Error::CharacterIndexOutOfRange(k, ctx.q()));
    }
    let chars = FieldCharacters::new(ctx)?;
    let mut bases = (0..ctx.q())
        .into_par_iter()
        .map(|a| field_phase_basis::<T>(&chars, a, k))
        .collect::<Result<Vec<_>>>()?;
    bases.push(computational_basis(ctx.q() as usize, k));
    MubSet::from_parts(MubProvenance::Field(ctx.clone()), k, bases)
}

/// One quadratic phase basis over a ring: a and b are Teichmuller positions,
/// amplitudes psi~_k(n) kappa~((a + 2b) n) / sqrt(2^m) at position index(n).
pub fn ring_phase_basis<T: Scalar>(ctx: &RingContext, a_index: u64, k: u64) -> Result<Basis<T>> {
    let dim = ctx.dim();
    if k >= dim {
        return Err(Error::CharacterIndexOutOfRange(k, dim));
    }
    if a_index >= dim {
        return Err(Error::LabelOutOfRange(a_index, dim));
    }
    let teich = ctx.teichmuller_set();
    let a = &teich[a_index as usize];
    let scale = T::from_u64(dim).unwrap().sqrt().recip();
    let mut vectors = Vec::with_capacity(dim as usize);
    let mut eigenvalues = Vec::with_capacity(dim as usize);
    for (b_index, b) in teich.iter().enumerate() {
        let c = a.add(&b.scale(2)); // a + 2b
        let amps = teich
            .iter()
            .enumerate()
            .map(|(n_index, n)| {
                let label_phase = root_of_unity::<T>((n_index as u64 * k) as i64, dim);
                let additive = ring_additive_character::<T>(&c.mul(n));
                (label_phase * additive).scale(scale)
            })
            .collect();
        vectors.push(StateVector { amps });
        eigenvalues
            .push(T::TAU() * T::from_u64(b_index as u64).unwrap() / T::from_u64(dim).unwrap());
    }
    let basis = Basis {
        label: BasisLabel::Index(a_index),
        k,
        vectors,
        eigenvalues: Some(eigenvalues),
    };
    basis.assert_built_orthonormal();
    Ok(basis)
}

/// The complete ring MUB set: one basis per Teichmuller element a (ascending
/// position), computational last, 2^m + 1 bases.
pub fn mub_ring<T: Scalar>(ctx: &RingContext, k: u64) -> Result<MubSet<T>> {
    if k >= ctx.dim() {
        return Err(Error::CharacterIndexOutOfRange(k, ctx.dim()));
    }
    let mut bases = (0..ctx.dim())
        .into_par_iter()
        .map(|a| ring_phase_basis::<T>(ctx, a, k))
        .collect::<Result<Vec<_>>>()?;
    bases.push(computational_basis(ctx.dim() as usize, k));
    MubSet::from_parts(MubProvenance::Ring(ctx.clone()), k, bases)
}

/// Check every within-basis Gram entry against the identity and every
/// cross-basis overlap magnitude against 1/sqrt(q).
///
/// The report carries the worst deviation of each layer; pass/fail is decided
/// at `tolerance`.
pub fn verify_mub<T: Scalar>(set: &MubSet<T>, tolerance: f64) -> Result<VerificationReport> {
    let dim = set.dim();
    let q = T::from_usize(dim).unwrap();
    let unbiased = q.sqrt().recip();

    let gram_dev = set
        .bases
        .par_iter()
        .map(|b| b.orthonormality_deviation())
        .reduce(T::zero, T::max);

    let pairs: Vec<(usize, usize)> = (0..set.bases.len())
        .flat_map(|i| (i + 1..set.bases.len()).map(move |j| (i, j)))
        .collect();
    let cross_dev = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut worst = T::zero();
            for vi in set.bases[i].vectors() {
                for vj in set.bases[j].vectors() {
                    let dev = (vi.inner(vj).norm() - unbiased).abs();
                    if dev > worst {
                        worst = dev;
                    }
                }
            }
            worst
        })
        .reduce(T::zero, T::max);

    let prefix = format!("mub.{}.q{}", set.kind_tag(), dim);
    let mut report = VerificationReport::new();
    report.record(
        format!("{prefix}.orthonormality"),
        "within each basis the Gram matrix is the identity",
        gram_dev.to_f64().unwrap(),
        0.0,
        tolerance,
    );
    if set.bases.len() > 1 {
        report.record(
            format!("{prefix}.unbiasedness"),
            "overlaps across distinct bases all have magnitude 1/sqrt(q)",
            cross_dev.to_f64().unwrap(),
            0.0,
            tolerance,
        );
    }
    Ok(report)
}
