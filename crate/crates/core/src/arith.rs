//! Plain integer helpers: gcd, modular arithmetic, primality, totients.
//!
//! Everything here works on `i64` with `i128` intermediates, which is far
//! more range than the desk-scale ring norms this crate targets.

/// Greatest common divisor, always nonnegative.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        let sign = if a < 0 { -1 } else { 1 };
        return (a.abs(), sign, 0);
    }
    let (g, x, y) = egcd(b, a.rem_euclid(b));
    // a = q*b + r with r = a.rem_euclid(b), q = a.div_euclid(b)
    (g, y, x - a.div_euclid(b) * y)
}

/// Multiplicative inverse of `a` modulo `n` (n > 1), in [0, n).
pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    debug_assert!(n > 1);
    let (g, x, _) = egcd(a.rem_euclid(n), n);
    if g == 1 {
        Some(x.rem_euclid(n))
    } else {
        None
    }
}

/// base^exp mod n by binary exponentiation, n > 0.
pub fn mod_pow(base: i64, mut exp: u64, n: i64) -> i64 {
    debug_assert!(n > 0);
    let n128 = n as i128;
    let mut base = (base as i128).rem_euclid(n128);
    let mut acc: i128 = 1 % n128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % n128;
        }
        base = base * base % n128;
        exp >>= 1;
    }
    acc as i64
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5i64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, ascending.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    assert!(n > 0, "factorize expects a positive integer");
    let mut out = Vec::new();
    let mut d = 2i64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(n: i64) -> i64 {
    let mut phi = 1i64;
    for (p, e) in factorize(n) {
        phi *= (p - 1) * p.pow(e - 1);
    }
    phi
}

/// All positive divisors of n, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let mut out = vec![1i64];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pk = 1i64;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Least d >= 1 with a^d = 1 mod n, or None when gcd(a, n) != 1.
///
/// Tests the divisors of phi(n) in ascending order, so it only needs
/// O(d(phi) log phi) modular multiplications.
pub fn multiplicative_order(a: i64, n: i64) -> Option<u64> {
    let a = a.rem_euclid(n);
    if gcd(a, n) != 1 {
        return None;
    }
    let phi = euler_phi(n);
    divisors(phi)
        .into_iter()
        .find(|&d| mod_pow(a, d as u64, n) == 1)
        .map(|d| d as u64)
}
