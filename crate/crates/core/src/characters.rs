//! Characters of finite fields and Galois rings, and the exponential sums
//! built from them: Weil sums, Gauss sums, and the ring sums Gamma(y) over
//! the Teichmuller set.
//!
//! Every character value is exp(2 pi i r / n) for an exact integer pair
//! (r, n), reduced mod n before any floating-point work, so phases stay
//! accurate for large exponents.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::finite_field::{FieldContext, FieldElement};
use crate::galois_ring::RingElement;
use crate::scalar::{quarter_phase, root_of_unity, Scalar};

/// Which character family a parameter indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterKind {
    /// kappa_c(x) = kappa(c x); the parameter is the label of the shift c.
    AdditiveField,
    /// psi_k(n) = exp(2 pi i n k / q) on integer labels.
    MultiplicativeLabel,
    /// chi_k on F_q*, defined through a discrete-log table.
    MultiplicativeGenuine,
    /// kappa_tilde twisted by a ring element: y -> kappa_tilde(c y).
    AdditiveRing,
}

/// A character choice: family plus its integer parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharacterSpec {
    pub kind: CharacterKind,
    pub parameter: u64,
}

impl CharacterSpec {
    /// Range-check the parameter against the context cardinality:
    /// [0, q) for everything except genuine multiplicative, which is [0, q-1).
    pub fn validate(&self, cardinality: u64) -> Result<()> {
        let bound = match self.kind {
            CharacterKind::MultiplicativeGenuine => cardinality - 1,
            _ => cardinality,
        };
        if self.parameter >= bound {
            return Err(Error::CharacterIndexOutOfRange(self.parameter, bound));
        }
        Ok(())
    }
}

/// Character evaluator for one field context.
///
/// Holds the discrete-log table of a fixed primitive element, so genuine
/// multiplicative characters chi_k(g^j) = exp(2 pi i j k / (q-1)) are table
/// lookups.
#[derive(Clone, Debug)]
pub struct FieldCharacters {
    ctx: FieldContext,
    generator: FieldElement,
    dlog: Vec<u64>,
}

const NO_LOG: u64 = u64::MAX;

impl FieldCharacters {
    /// Evaluator over the smallest-label primitive element.
    pub fn new(ctx: &FieldContext) -> Result<Self> {
        let g = ctx.primitive_element();
        Self::with_generator(ctx, g)
    }

    /// Evaluator over an explicit generator; rejects non-primitive elements.
    pub fn with_generator(ctx: &FieldContext, generator: FieldElement) -> Result<Self> {
        let q = ctx.q();
        let mut dlog = vec![NO_LOG; q as usize];
        let mut acc = ctx.one();
        for j in 0..q - 1 {
            let slot = &mut dlog[acc.label() as usize];
            if *slot != NO_LOG {
                return Err(Error::GeneratorNotPrimitive(generator.label(), q - 1));
            }
            *slot = j;
            acc = acc.mul(&generator);
        }
        if !acc.is_one() {
            return Err(Error::GeneratorNotPrimitive(generator.label(), q - 1));
        }
        Ok(FieldCharacters {
            ctx: ctx.clone(),
            generator,
            dlog,
        })
    }

    pub fn context(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    /// Discrete log of x base the stored generator; zero has none.
    pub fn dlog(&self, x: &FieldElement) -> Result<u64> {
        let j = self.dlog[x.label() as usize];
        if j == NO_LOG {
            return Err(Error::CharacterAtZero);
        }
        Ok(j)
    }

    /// kappa(x) = omega_p^{tr(x)}.
    pub fn additive<T: Scalar>(&self, x: &FieldElement) -> Complex<T> {
        root_of_unity(x.trace() as i64, self.ctx.p())
    }

    /// kappa_c(x) = kappa(c x); c = 0 gives the trivial character.
    pub fn additive_shifted<T: Scalar>(&self, c: &FieldElement, x: &FieldElement) -> Complex<T> {
        self.additive(&c.mul(x))
    }

    /// psi_k(n) = exp(2 pi i n k / q) on integer labels.
    pub fn multiplicative_label<T: Scalar>(&self, k: u64, n: u64) -> Result<Complex<T>> {
        let q = self.ctx.q();
        if k >= q {
            return Err(Error::CharacterIndexOutOfRange(k, q));
        }
        if n >= q {
            return Err(Error::LabelOutOfRange(n, q));
        }
        Ok(root_of_unity((k * n) as i64, q))
    }

    /// chi_k(x) = exp(2 pi i k dlog(x) / (q-1)); undefined at zero.
    pub fn genuine_multiplicative<T: Scalar>(
        &self,
        k: u64,
        x: &FieldElement,
    ) -> Result<Complex<T>> {
        let order = self.ctx.q() - 1;
        if k >= order {
            return Err(Error::CharacterIndexOutOfRange(k, order));
        }
        let j = self.dlog(x)?;
        Ok(root_of_unity((k * j) as i64, order))
    }

    /// chi_k extended to all of F_q: chi_0(0) = 1, chi_k(0) = 0 for k != 0.
    ///
    /// The trivial character stays identically 1 so sums over the whole field
    /// degenerate the way plain additive sums do; nontrivial characters
    /// vanish at 0 so Gauss-type sums over all of F_q match the sums over
    /// F_q*.
    pub fn genuine_extended<T: Scalar>(&self, k: u64, x: &FieldElement) -> Result<Complex<T>> {
        if x.is_zero() {
            let order = self.ctx.q() - 1;
            if k >= order {
                return Err(Error::CharacterIndexOutOfRange(k, order));
            }
            return Ok(if k == 0 {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::zero()
            });
        }
        self.genuine_multiplicative(k, x)
    }

    /// Weil sum W(f) = sum over all x in F_q of kappa(f(x)).
    ///
    /// Coefficients are low degree first. For deg f = d with gcd(d, q) = 1
    /// the magnitude obeys |W(f)| <= (d-1) sqrt(q).
    pub fn weil_sum<T: Scalar>(&self, f: &[FieldElement]) -> Complex<T> {
        let mut total = Complex::zero();
        for x in self.ctx.elements() {
            let mut value = self.ctx.zero();
            for c in f.iter().rev() {
                value = value.mul(&x).add(c);
            }
            total += self.additive::<T>(&value);
        }
        total
    }

    /// Gauss sum G(chi_k, kappa_c) = sum over x in F_q* of chi_k(x) kappa(c x).
    ///
    /// The four magnitude laws: q-1 when both characters are trivial, -1 for
    /// trivial chi and nontrivial kappa, 0 for nontrivial chi and trivial
    /// kappa, and magnitude sqrt(q) when both are nontrivial.
    pub fn gauss_sum<T: Scalar>(&self, k: u64, c: &FieldElement) -> Result<Complex<T>> {
        let mut total = Complex::zero();
        for x in self.ctx.elements() {
            if x.is_zero() {
                continue;
            }
            total += self.genuine_multiplicative::<T>(k, &x)? * self.additive_shifted::<T>(c, &x);
        }
        Ok(total)
    }

    /// Generalized Gauss sum: sum over all x in F_q of chi_k(f(x)) kappa(c g(x)),
    /// with chi extended to 0 as in `genuine_extended`.
    pub fn generalized_gauss_sum<T: Scalar>(
        &self,
        f: &[FieldElement],
        g: &[FieldElement],
        k: u64,
        c: &FieldElement,
    ) -> Result<Complex<T>> {
        let eval = |coeffs: &[FieldElement], x: &FieldElement| {
            let mut value = self.ctx.zero();
            for coeff in coeffs.iter().rev() {
                value = value.mul(x).add(coeff);
            }
            value
        };
        let mut total = Complex::zero();
        for x in self.ctx.elements() {
            let chi = self.genuine_extended::<T>(k, &eval(f, &x))?;
            if chi.is_zero() {
                continue;
            }
            total += chi * self.additive_shifted::<T>(c, &eval(g, &x));
        }
        Ok(total)
    }
}

/// kappa_tilde(y) = i^{tr(y)}, the additive character of R_{4^m}.
pub fn ring_additive_character<T: Scalar>(y: &RingElement) -> Complex<T> {
    quarter_phase(y.trace())
}

/// Gamma(y) = sum over u in the Teichmuller set of kappa_tilde(y u).
///
/// The magnitude trichotomy is asserted on every call: 2^m at y = 0, 0 when
/// y is a nonzero element with zero Teichmuller part, sqrt(2^m) when y is a
/// unit. A violation means the ring construction is broken.
pub fn ring_exponential_sum<T: Scalar>(y: &RingElement) -> Complex<T> {
    let ctx = y.context();
    let mut total: Complex<T> = Complex::zero();
    for u in ctx.teichmuller_set() {
        total += ring_additive_character::<T>(&y.mul(&u));
    }
    let dim = T::from_u64(ctx.dim()).unwrap();
    let expected = if y.is_zero() {
        dim
    } else if !y.is_unit() {
        T::zero()
    } else {
        dim.sqrt()
    };
    assert!(
        (total.norm() - expected).abs() <= T::VERIFY_TOL,
        "Gamma magnitude trichotomy violated at y = {:?}: |Gamma| = {}, expected {}",
        y.coeffs(),
        total.norm(),
        expected
    );
    total
}
