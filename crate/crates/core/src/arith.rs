//! Small integer helpers shared by the algebraic modules.

/// Deterministic primality by trial division; sufficient for p <= 2^20.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// p^m with overflow checking.
pub(crate) fn checked_pow(p: u64, m: usize) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..m {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// Writes n = p^m for the given prime p, if possible.
pub(crate) fn log_base(n: u64, p: u64) -> Option<usize> {
    if n < p {
        return None;
    }
    let mut acc = n;
    let mut m = 0usize;
    while acc > 1 {
        if !acc.is_multiple_of(p) {
            return None;
        }
        acc /= p;
        m += 1;
    }
    Some(m)
}

/// Splits q into (p, m) with p prime and q = p^m.
pub(crate) fn prime_power_split(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = *prime_factors(q).first()?;
    log_base(q, p).map(|m| (p, m))
}
