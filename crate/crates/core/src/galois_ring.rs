//! Galois rings R_{4^m} = Z4[x]/(h), where h is the basic primitive lift of a
//! primitive binary polynomial hbar: writing hbar(x) = e(x) - d(x) with e the
//! even-power part and d the odd-power part, h is fixed by
//! h(x^2) = +/-(e(x)^2 - d(x)^2), the sign chosen so h is monic.
//!
//! The Teichmuller set T_m = (0, 1, xi, ..., xi^{2^m - 2}) gives every element
//! a unique 2-adic decomposition y = a + 2b with a, b in T_m; its ordering is
//! the canonical basis indexing for every ring construction downstream.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::finite_field::is_irreducible;
use crate::polynomial as poly;

/// Largest supported extension degree m (ring cardinality 4^m).
pub const MAX_RING_DEGREE: usize = 10;

#[derive(Debug)]
struct RingInner {
    m: usize,
    h: Vec<u64>,
    hbar: Vec<u64>,
    teich: Vec<Vec<u64>>,
    teich_index: HashMap<Vec<u64>, usize>,
}

/// Immutable description of R_{4^m}: the lifted modulus and Teichmuller set.
#[derive(Clone, Debug)]
pub struct RingContext {
    inner: Arc<RingInner>,
}

/// An element of R_{4^m}: m coefficients mod 4 plus its context handle.
#[derive(Clone)]
pub struct RingElement {
    coeffs: Vec<u64>,
    ring: RingContext,
}

/// True iff hbar is primitive over F_2: irreducible with a root of
/// multiplicative order exactly 2^m - 1.
pub fn is_primitive_binary(hbar: &[u64]) -> Result<bool> {
    let f = poly::reduce_coeffs(hbar, 2);
    let m = match poly::degree(&f) {
        Some(m) if m >= 1 => m,
        _ => return Err(Error::BadPolynomial),
    };
    if !is_irreducible(&f, 2)? {
        return Ok(false);
    }
    let group = (1u64 << m) - 1;
    if poly::powmod(&[0, 1], group, &f, 2) != vec![1] {
        return Ok(false);
    }
    for r in arith::prime_factors(group) {
        if poly::powmod(&[0, 1], group / r, &f, 2) == vec![1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lex-smallest primitive binary polynomial of degree m
/// (coefficients compared low-degree-first).
pub fn find_primitive_binary(m: usize) -> Result<Vec<u64>> {
    if !(1..=MAX_RING_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange);
    }
    for i in 0..(1u64 << m) {
        let mut candidate = vec![0u64; m + 1];
        let mut rest = i;
        for j in (0..m).rev() {
            candidate[j] = rest % 2;
            rest /= 2;
        }
        candidate[m] = 1;
        if is_primitive_binary(&candidate)? {
            return Ok(candidate);
        }
    }
    unreachable!("primitive polynomials exist for every degree")
}

/// Basic primitive lift of hbar to Z4.
///
/// Splits hbar = e - d into even and odd parts (0/1 coefficients lifted as
/// integers), forms e^2 - d^2 over Z4, substitutes x^2 -> x, and negates when
/// m is odd so the result is monic. The lift is asserted to reduce to hbar
/// mod 2 and to divide x^{2^m - 1} - 1 over Z4.
pub fn lift_basic_primitive(hbar: &[u64]) -> Result<Vec<u64>> {
    let f = poly::reduce_coeffs(hbar, 2);
    let m = match poly::degree(&f) {
        Some(m) if m >= 1 => m,
        _ => return Err(Error::BadPolynomial),
    };
    if m > MAX_RING_DEGREE {
        return Err(Error::DegreeOutOfRange);
    }
    if !is_primitive_binary(&f)? {
        return Err(Error::NotPrimitive(f));
    }

    let mut even = vec![0u64; m + 1];
    let mut odd = vec![0u64; m + 1];
    for (j, &c) in f.iter().enumerate() {
        if j % 2 == 0 {
            even[j] = c;
        } else {
            odd[j] = c;
        }
    }
    let e2 = poly::mul(&even, &even, 4);
    let d2 = poly::mul(&odd, &odd, 4);
    let g = poly::sub(&e2, &d2, 4);
    let g = if m % 2 == 1 { poly::neg(&g, 4) } else { g };

    let mut h = vec![0u64; m + 1];
    for (j, slot) in h.iter_mut().enumerate() {
        debug_assert!(
            g.get(2 * j + 1).is_none_or(|&c| c == 0),
            "odd power survived squaring"
        );
        *slot = g.get(2 * j).copied().unwrap_or(0);
    }
    assert_eq!(h[m], 1, "lift must be monic");
    assert_eq!(
        poly::reduce_coeffs(&h, 2),
        f,
        "lift must reduce to hbar mod 2"
    );
    let group = (1u64 << m) - 1;
    assert_eq!(
        poly::powmod(&[0, 1], group, &h, 4),
        vec![1],
        "lift must divide x^(2^m - 1) - 1 over Z4"
    );
    Ok(h)
}

impl RingContext {
    /// R_{4^m} over the default binary polynomial for m: x+1, x^2+x+1,
    /// x^3+x+1, x^4+x+1 for m <= 4, the lex-smallest primitive above that.
    pub fn new(m: usize) -> Result<Self> {
        let hbar: Vec<u64> = match m {
            0 => return Err(Error::DegreeOutOfRange),
            1 => vec![1, 1],
            2 => vec![1, 1, 1],
            3 => vec![1, 1, 0, 1],
            4 => vec![1, 1, 0, 0, 1],
            _ => find_primitive_binary(m)?,
        };
        Self::from_binary(&hbar)
    }

    /// R_{4^m} built by lifting an explicit primitive binary polynomial.
    pub fn from_binary(hbar: &[u64]) -> Result<Self> {
        let h = lift_basic_primitive(hbar)?;
        let hbar = poly::reduce_coeffs(hbar, 2);
        let m = poly::degree(&h).expect("lift is monic");

        // Teichmuller set: 0 followed by the powers of xi = [x].
        let order = (1u64 << m) - 1;
        let xi = poly::rem_monic(&[0, 1], &h, 4);
        let mut teich: Vec<Vec<u64>> = Vec::with_capacity(1 << m);
        teich.push(fixed(Vec::new(), m));
        let mut acc = vec![1u64];
        for _ in 0..order {
            teich.push(fixed(acc.clone(), m));
            acc = poly::rem_monic(&poly::mul(&acc, &xi, 4), &h, 4);
        }
        // xi has order exactly 2^m - 1: the loop must close at 1 and must not
        // revisit 1 earlier.
        assert_eq!(fixed(acc, m), teich[1], "xi^(2^m - 1) != 1: broken lift");
        let mut teich_index = HashMap::with_capacity(teich.len());
        for (i, t) in teich.iter().enumerate() {
            assert!(
                teich_index.insert(t.clone(), i).is_none(),
                "xi has order below 2^m - 1: broken lift"
            );
        }

        Ok(RingContext {
            inner: Arc::new(RingInner {
                m,
                h,
                hbar,
                teich,
                teich_index,
            }),
        })
    }

    pub fn m(&self) -> usize {
        self.inner.m
    }

    /// Ring cardinality 4^m.
    pub fn cardinality(&self) -> u64 {
        1u64 << (2 * self.inner.m)
    }

    /// Dimension 2^m of the state spaces built over this ring.
    pub fn dim(&self) -> u64 {
        1u64 << self.inner.m
    }

    /// Lifted monic modulus over Z4, low-degree coefficient first.
    pub fn h(&self) -> &[u64] {
        &self.inner.h
    }

    /// The binary polynomial that was lifted.
    pub fn hbar(&self) -> &[u64] {
        &self.inner.hbar
    }

    pub fn zero(&self) -> RingElement {
        RingElement {
            coeffs: vec![0; self.inner.m],
            ring: self.clone(),
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(1)
    }

    pub fn constant(&self, c: u64) -> RingElement {
        let mut coeffs = vec![0; self.inner.m];
        coeffs[0] = c % 4;
        RingElement {
            coeffs,
            ring: self.clone(),
        }
    }

    /// xi = [x], the distinguished root of h of order 2^m - 1.
    pub fn xi(&self) -> RingElement {
        self.teich_element(if self.inner.m == 1 { 1 } else { 2 })
    }

    /// The Teichmuller set (0, 1, xi, ..., xi^{2^m - 2}) in canonical order.
    pub fn teichmuller_set(&self) -> Vec<RingElement> {
        (0..self.inner.teich.len())
            .map(|i| self.teich_element(i))
            .collect()
    }

    /// The i-th Teichmuller element; panics if i >= 2^m.
    pub fn teich_element(&self, i: usize) -> RingElement {
        RingElement {
            coeffs: self.inner.teich[i].clone(),
            ring: self.clone(),
        }
    }

    /// Position of y in the Teichmuller ordering, if y lies in T_m.
    pub fn teich_index(&self, y: &RingElement) -> Option<usize> {
        self.inner.teich_index.get(&y.coeffs).copied()
    }

    /// Element from arbitrary coefficients, reduced mod 4 and mod h.
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> RingElement {
        let reduced = poly::rem_monic(&poly::reduce_coeffs(coeffs, 4), &self.inner.h, 4);
        RingElement {
            coeffs: fixed(reduced, self.inner.m),
            ring: self.clone(),
        }
    }

    /// Inverse of `label`: base-4 digits of i become the coefficients.
    pub fn unlabel(&self, label: u64) -> Result<RingElement> {
        if label >= self.cardinality() {
            return Err(Error::LabelOutOfRange(label, self.cardinality()));
        }
        let mut coeffs = vec![0u64; self.inner.m];
        let mut rest = label;
        for c in coeffs.iter_mut() {
            *c = rest % 4;
            rest /= 4;
        }
        Ok(RingElement {
            coeffs,
            ring: self.clone(),
        })
    }

    /// All 4^m elements in ascending label order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.cardinality()).map(move |l| self.unlabel(l).expect("label < 4^m"))
    }

    pub fn same_context(&self, other: &RingContext) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.h == other.inner.h
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other)
    }
}

impl Eq for RingContext {}

fn fixed(mut coeffs: Vec<u64>, m: usize) -> Vec<u64> {
    coeffs.resize(m, 0);
    coeffs
}

impl RingElement {
    pub fn context(&self) -> &RingContext {
        &self.ring
    }

    /// Coefficients mod 4, low degree first, fixed length m.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Base-4 positional encoding of the coefficient vector.
    pub fn label(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * 4 + c)
    }

    /// A unit has a nonzero Teichmuller part; equivalently some odd coefficient.
    pub fn is_unit(&self) -> bool {
        self.coeffs.iter().any(|&c| c % 2 == 1)
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.check_context(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % 4)
            .collect();
        RingElement {
            coeffs,
            ring: self.ring.clone(),
        }
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.check_context(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + 4 - b) % 4)
            .collect();
        RingElement {
            coeffs,
            ring: self.ring.clone(),
        }
    }

    pub fn neg(&self) -> RingElement {
        let coeffs = self.coeffs.iter().map(|&a| (4 - a) % 4).collect();
        RingElement {
            coeffs,
            ring: self.ring.clone(),
        }
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.check_context(other);
        let product = poly::mul(&self.coeffs, &other.coeffs, 4);
        let reduced = poly::rem_monic(&product, &self.ring.inner.h, 4);
        RingElement {
            coeffs: fixed(reduced, self.ring.inner.m),
            ring: self.ring.clone(),
        }
    }

    pub fn scale(&self, c: u64) -> RingElement {
        let coeffs = self.coeffs.iter().map(|&a| a * (c % 4) % 4).collect();
        RingElement {
            coeffs,
            ring: self.ring.clone(),
        }
    }

    pub fn pow(&self, mut e: u64) -> RingElement {
        let mut result = self.ring.one();
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

    /// Unique decomposition y = a + 2b with a, b in the Teichmuller set.
    ///
    /// a = y^{2^m} (squaring kills the 2-torsion part), and b is recovered by
    /// scanning T_m for the element with 2b = y - a; both membership facts are
    /// asserted.
    pub fn two_adic_decompose(&self) -> (RingElement, RingElement) {
        let m = self.ring.inner.m;
        let a = self.pow(1u64 << m);
        assert!(
            self.ring.teich_index(&a).is_some(),
            "2-adic part a = y^(2^m) escaped the Teichmuller set"
        );
        let target = self.sub(&a);
        for b in self.ring.teichmuller_set() {
            if b.scale(2) == target {
                debug_assert_eq!(a.add(&b.scale(2)), *self);
                return (a, b);
            }
        }
        panic!("no Teichmuller element b satisfies 2b = y - a: broken ring construction");
    }

    /// Ring Frobenius sigma(a + 2b) = a^2 + 2b^2.
    pub fn frobenius(&self) -> RingElement {
        let (a, b) = self.two_adic_decompose();
        a.mul(&a).add(&b.mul(&b).scale(2))
    }

    /// Ring trace: sum of sigma^k(y) for k = 0..m, asserted to be a constant
    /// polynomial; returned as the residue mod 4.
    pub fn trace(&self) -> u64 {
        let mut acc = self.clone();
        let mut sum = self.clone();
        for _ in 1..self.ring.inner.m {
            acc = acc.frobenius();
            sum = sum.add(&acc);
        }
        assert!(
            sum.coeffs[1..].iter().all(|&c| c == 0),
            "ring trace of {:?} is not a constant polynomial",
            self.coeffs
        );
        sum.coeffs[0]
    }

    fn check_context(&self, other: &RingElement) {
        assert!(
            self.ring.same_context(&other.ring),
            "ring context mismatch: operands from different rings"
        );
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_context(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingElement({:?} mod {:?})",
            self.coeffs, self.ring.inner.h
        )
    }
}

impl std::ops::Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement::add(self, rhs)
    }
}

impl std::ops::Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        RingElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        RingElement::mul(self, rhs)
    }
}
