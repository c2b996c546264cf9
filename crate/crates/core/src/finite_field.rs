//! Galois fields F_q = F_p[x]/(g) with q = p^m, represented as coefficient
//! vectors (low degree first) modulo a monic irreducible g.
//!
//! Elements carry a cheap handle to their context; contexts are immutable and
//! safe to share across threads. The canonical integer label of an element is
//! its base-p coefficient encoding, label(sum a_j x^j) = sum a_j p^j.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::arith;
use crate::error::{Error, Result};
use crate::polynomial as poly;

/// Largest supported field cardinality p^m.
pub const MAX_FIELD_CARDINALITY: u64 = 1 << 20;

#[derive(Debug)]
struct FieldInner {
    p: u64,
    m: usize,
    q: u64,
    modulus: Vec<u64>,
    generator: OnceLock<u64>,
}

/// Immutable description of F_{p^m}: characteristic, degree, and modulus.
#[derive(Clone, Debug)]
pub struct FieldContext {
    inner: Arc<FieldInner>,
}

/// An element of F_{p^m}: m coefficients mod p plus its context handle.
#[derive(Clone)]
pub struct FieldElement {
    coeffs: Vec<u64>,
    field: FieldContext,
}

fn bounded_cardinality(p: u64, m: usize) -> Result<u64> {
    match arith::checked_pow(p, m) {
        Some(q) if q <= MAX_FIELD_CARDINALITY => Ok(q),
        Some(q) => Err(Error::CardinalityTooLarge(q, MAX_FIELD_CARDINALITY)),
        None => Err(Error::CardinalityTooLarge(u64::MAX, MAX_FIELD_CARDINALITY)),
    }
}

/// Rabin-style irreducibility test for f over F_p.
///
/// f of degree n is irreducible iff x^{p^n} = x mod f and, for every prime
/// r | n, gcd(f, x^{p^{n/r}} - x) = 1.
pub fn is_irreducible(f: &[u64], p: u64) -> Result<bool> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = poly::reduce_coeffs(f, p);
    let n = match poly::degree(&f) {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::BadPolynomial),
    };
    let f = poly::to_monic(&f, p);

    // powers[i] = x^{p^i} mod f, built by iterated p-th powering.
    let x = poly::rem_monic(&[0, 1], &f, p);
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(x.clone());
    for _ in 0..n {
        let prev = powers.last().unwrap();
        powers.push(poly::powmod(prev, p, &f, p));
    }
    if powers[n] != x {
        return Ok(false);
    }
    for r in arith::prime_factors(n as u64) {
        let k = n / r as usize;
        let diff = poly::sub(&powers[k], &x, p);
        let g = poly::gcd(&f, &diff, p);
        if poly::degree(&g) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lexicographically smallest monic irreducible of degree m over F_p,
/// comparing coefficient vectors low-degree-first.
pub fn find_irreducible(p: u64, m: usize) -> Result<Vec<u64>> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m < 1 {
        return Err(Error::DegreeOutOfRange);
    }
    let q = bounded_cardinality(p, m)?;

    for i in 0..q {
        // Decode i so that a_0 is the primary sort key and a_{m-1} ticks fastest.
        let mut candidate = vec![0u64; m + 1];
        let mut rest = i;
        for j in (0..m).rev() {
            candidate[j] = rest % p;
            rest /= p;
        }
        candidate[m] = 1;
        if is_irreducible(&candidate, p)? {
            return Ok(candidate);
        }
    }
    unreachable!("irreducible polynomials exist for every prime p and degree m")
}

impl FieldContext {
    /// F_{p^m} with the canonical (lex-smallest) irreducible modulus.
    pub fn new(p: u64, m: usize) -> Result<Self> {
        let modulus = find_irreducible(p, m)?;
        Self::with_modulus(p, &modulus)
    }

    /// F_q found by splitting q into p^m; fails when q is not a prime power.
    pub fn from_cardinality(q: u64) -> Result<Self> {
        let (p, m) = arith::prime_power_split(q)
            .ok_or_else(|| Error::Malformed(format!("{q} is not a prime power")))?;
        Self::new(p, m)
    }

    /// F_{p^m} with an explicit monic irreducible modulus of degree m.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus = poly::reduce_coeffs(modulus, p);
        let m = match poly::degree(&modulus) {
            Some(m) if m >= 1 => m,
            _ => return Err(Error::BadPolynomial),
        };
        if modulus[m] != 1 {
            return Err(Error::BadPolynomial);
        }
        let q = bounded_cardinality(p, m)?;
        if !is_irreducible(&modulus, p)? {
            return Err(Error::NotIrreducible(modulus, p));
        }
        Ok(FieldContext {
            inner: Arc::new(FieldInner {
                p,
                m,
                q,
                modulus,
                generator: OnceLock::new(),
            }),
        })
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> usize {
        self.inner.m
    }

    /// Cardinality q = p^m.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Monic modulus, low-degree coefficient first, length m + 1.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.inner.m],
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.constant(1)
    }

    /// The constant c mod p embedded in the field.
    pub fn constant(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.inner.m];
        coeffs[0] = c % self.inner.p;
        FieldElement {
            coeffs,
            field: self.clone(),
        }
    }

    /// Element from arbitrary coefficients; reduced mod p and mod the modulus.
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let reduced = poly::rem_monic(
            &poly::reduce_coeffs(coeffs, self.inner.p),
            &self.inner.modulus,
            self.inner.p,
        );
        self.element_with_trimmed(reduced)
    }

    /// Inverse of `label`: base-p digits of i become the coefficients.
    pub fn unlabel(&self, label: u64) -> Result<FieldElement> {
        if label >= self.inner.q {
            return Err(Error::LabelOutOfRange(label, self.inner.q));
        }
        let p = self.inner.p;
        let mut coeffs = vec![0u64; self.inner.m];
        let mut rest = label;
        for c in coeffs.iter_mut() {
            *c = rest % p;
            rest /= p;
        }
        Ok(FieldElement {
            coeffs,
            field: self.clone(),
        })
    }

    /// All q elements in ascending label order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |l| self.unlabel(l).expect("label < q"))
    }

    /// A fixed generator of the multiplicative group: the nonzero element of
    /// smallest label whose order is q - 1.
    pub fn primitive_element(&self) -> FieldElement {
        let label = *self.inner.generator.get_or_init(|| {
            let group = self.inner.q - 1;
            let factors = arith::prime_factors(group);
            'outer: for l in 1..self.inner.q {
                let g = self.unlabel(l).expect("label < q");
                for &r in &factors {
                    if g.pow(group / r).is_one() {
                        continue 'outer;
                    }
                }
                return l;
            }
            unreachable!("the multiplicative group of a finite field is cyclic")
        });
        self.unlabel(label).expect("generator label < q")
    }

    pub fn same_context(&self, other: &FieldContext) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }

    fn element_with_trimmed(&self, trimmed: Vec<u64>) -> FieldElement {
        let mut coeffs = trimmed;
        coeffs.resize(self.inner.m, 0);
        FieldElement {
            coeffs,
            field: self.clone(),
        }
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other)
    }
}

impl Eq for FieldContext {}

impl FieldElement {
    pub fn context(&self) -> &FieldContext {
        &self.field
    }

    /// Coefficients mod p, low degree first, fixed length m.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Base-p positional encoding of the coefficient vector.
    pub fn label(&self) -> u64 {
        let p = self.field.inner.p;
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_context(other);
        let p = self.field.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_context(other);
        let p = self.field.inner.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.inner.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_context(other);
        let inner = &self.field.inner;
        let product = poly::mul(&self.coeffs, &other.coeffs, inner.p);
        let reduced = poly::rem_monic(&product, &inner.modulus, inner.p);
        self.field.element_with_trimmed(reduced)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::NonInvertible);
        }
        // x^{q-2} = x^{-1} in F_q*.
        Ok(self.pow(self.field.inner.q - 2))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut result = self.field.one();
        let mut acc = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&acc);
            }
            acc = acc.mul(&acc);
            e >>= 1;
        }
        result
    }

    /// Frobenius automorphism x -> x^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.inner.p)
    }

    /// Absolute trace tr(x) = x + x^p + ... + x^{p^{m-1}}, returned as the
    /// residue in [0, p). The sum is asserted to land in the prime subfield.
    pub fn trace(&self) -> u64 {
        let mut acc = self.clone();
        let mut sum = self.clone();
        for _ in 1..self.field.inner.m {
            acc = acc.frobenius();
            sum = sum.add(&acc);
        }
        assert!(
            sum.coeffs[1..].iter().all(|&c| c == 0),
            "trace of {:?} has coefficients outside the prime subfield",
            self.coeffs
        );
        sum.coeffs[0]
    }

    fn check_context(&self, other: &FieldElement) {
        assert!(
            self.field.same_context(&other.field),
            "field context mismatch: operands from different fields"
        );
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_context(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FieldElement({:?} mod {:?}, p={})",
            self.coeffs, self.field.inner.modulus, self.field.inner.p
        )
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
