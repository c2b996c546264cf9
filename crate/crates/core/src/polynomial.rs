//! Coefficient-vector polynomial arithmetic over Z_n, low-degree coefficient
//! first. Division requires a monic divisor, which keeps every routine valid
//! over Z4 as well as over prime fields; gcd and inversion are prime-only.

/// Removes trailing zero coefficients. The zero polynomial becomes `[]`.
pub(crate) fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Degree, or None for the zero polynomial.
pub(crate) fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub(crate) fn reduce_coeffs(f: &[u64], n: u64) -> Vec<u64> {
    trim(f.iter().map(|&c| c % n).collect())
}

pub(crate) fn sub(a: &[u64], b: &[u64], n: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + n - y) % n;
    }
    trim(out)
}

pub(crate) fn neg(a: &[u64], n: u64) -> Vec<u64> {
    trim(a.iter().map(|&c| (n - c % n) % n).collect())
}

pub(crate) fn mul(a: &[u64], b: &[u64], n: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % n;
        }
    }
    trim(out)
}

/// Remainder of a by a monic divisor d, coefficients mod n.
pub(crate) fn rem_monic(a: &[u64], d: &[u64], n: u64) -> Vec<u64> {
    let dd = degree(d).expect("monic divisor must be nonzero");
    debug_assert_eq!(d[dd], 1, "divisor must be monic");
    let mut r: Vec<u64> = a.to_vec();
    while let Some(rd) = degree(&r) {
        if rd < dd {
            break;
        }
        let lead = r[rd];
        let shift = rd - dd;
        for (j, &c) in d.iter().enumerate().take(dd + 1) {
            let idx = shift + j;
            r[idx] = (r[idx] + n - (lead * c) % n) % n;
        }
    }
    trim(r)
}

/// base^e mod (monic f), coefficients mod n, by binary exponentiation.
pub(crate) fn powmod(base: &[u64], mut e: u64, f: &[u64], n: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut acc = rem_monic(base, f, n);
    while e > 0 {
        if e & 1 == 1 {
            result = rem_monic(&mul(&result, &acc, n), f, n);
        }
        acc = rem_monic(&mul(&acc, &acc, n), f, n);
        e >>= 1;
    }
    result
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    // Fermat: a^{p-2}. p is prime and a != 0 mod p.
    debug_assert!(!a.is_multiple_of(p));
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Scales a nonzero polynomial to monic form. Prime modulus only.
pub(crate) fn to_monic(f: &[u64], p: u64) -> Vec<u64> {
    let d = degree(f).expect("zero polynomial has no monic form");
    let s = inv_mod_prime(f[d], p);
    trim(f.iter().map(|&c| c * s % p).collect())
}

/// Monic gcd over F_p.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = reduce_coeffs(a, p);
    let mut y = reduce_coeffs(b, p);
    while !y.is_empty() {
        let m = to_monic(&y, p);
        let r = rem_monic(&x, &m, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        to_monic(&x, p)
    }
}
