//! Exact arithmetic for integer quaternions and the commutative subring
//! H(K1) = { a + b(i+j+k) }.
//!
//! All operations are pure and exact. Products are computed with `i128`
//! intermediates and narrowed back to `i64`; a result outside the 64-bit
//! range panics instead of wrapping, so overflow can never corrupt a
//! computation silently.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};

#[inline]
fn narrow(v: i128, what: &str) -> i64 {
    i64::try_from(v)
        .unwrap_or_else(|_| panic!("integer overflow in {what}: {v} exceeds the 64-bit range"))
}

/// An integer quaternion a0 + a1*i + a2*j + a3*k.
///
/// Multiplication follows the Hamilton rules i^2 = j^2 = k^2 = -1,
/// ij = -ji = k, jk = -kj = i, ki = -ik = j. It is associative but not
/// commutative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuaternionInt {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl QuaternionInt {
    pub const ZERO: QuaternionInt = QuaternionInt::new(0, 0, 0, 0);
    pub const ONE: QuaternionInt = QuaternionInt::new(1, 0, 0, 0);

    pub const fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        QuaternionInt { a0, a1, a2, a3 }
    }

    /// Conjugate: negates the vector part.
    pub fn conjugate(self) -> Self {
        QuaternionInt::new(self.a0, -self.a1, -self.a2, -self.a3)
    }

    /// N(q) = q * conjugate(q) = a0^2 + a1^2 + a2^2 + a3^2.
    pub fn norm(self) -> i64 {
        let n = (self.a0 as i128) * (self.a0 as i128)
            + (self.a1 as i128) * (self.a1 as i128)
            + (self.a2 as i128) * (self.a2 as i128)
            + (self.a3 as i128) * (self.a3 as i128);
        narrow(n, "quaternion norm")
    }

    /// True when the i, j, k components are all zero.
    pub fn vector_part_is_zero(self) -> bool {
        self.a1 == 0 && self.a2 == 0 && self.a3 == 0
    }
}

impl Mul for QuaternionInt {
    type Output = QuaternionInt;

    fn mul(self, r: QuaternionInt) -> QuaternionInt {
        let (a0, a1, a2, a3) = (
            self.a0 as i128,
            self.a1 as i128,
            self.a2 as i128,
            self.a3 as i128,
        );
        let (b0, b1, b2, b3) = (r.a0 as i128, r.a1 as i128, r.a2 as i128, r.a3 as i128);
        QuaternionInt::new(
            narrow(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, "quaternion product"),
            narrow(a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2, "quaternion product"),
            narrow(a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1, "quaternion product"),
            narrow(a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0, "quaternion product"),
        )
    }
}

impl Add for QuaternionInt {
    type Output = QuaternionInt;

    fn add(self, r: QuaternionInt) -> QuaternionInt {
        QuaternionInt::new(
            narrow(self.a0 as i128 + r.a0 as i128, "quaternion sum"),
            narrow(self.a1 as i128 + r.a1 as i128, "quaternion sum"),
            narrow(self.a2 as i128 + r.a2 as i128, "quaternion sum"),
            narrow(self.a3 as i128 + r.a3 as i128, "quaternion sum"),
        )
    }
}

impl Sub for QuaternionInt {
    type Output = QuaternionInt;

    fn sub(self, r: QuaternionInt) -> QuaternionInt {
        self + (-r)
    }
}

impl Neg for QuaternionInt {
    type Output = QuaternionInt;

    fn neg(self) -> QuaternionInt {
        QuaternionInt::new(
            narrow(-(self.a0 as i128), "quaternion negation"),
            narrow(-(self.a1 as i128), "quaternion negation"),
            narrow(-(self.a2 as i128), "quaternion negation"),
            narrow(-(self.a3 as i128), "quaternion negation"),
        )
    }
}

/// An element a + b*w of H(K1), where w = i + j + k.
///
/// Since w^2 = -3 the subring is commutative, with
/// (a + bw)(c + dw) = (ac - 3bd) + (ad + bc)w and norm a^2 + 3b^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct K1Element {
    /// Complete (scalar) part.
    pub a: i64,
    /// Coefficient of w = i + j + k.
    pub b: i64,
}

impl K1Element {
    pub const ZERO: K1Element = K1Element::new(0, 0);
    pub const ONE: K1Element = K1Element::new(1, 0);
    pub const MINUS_ONE: K1Element = K1Element::new(-1, 0);

    pub const fn new(a: i64, b: i64) -> Self {
        K1Element { a, b }
    }

    /// The full quaternion a + b*i + b*j + b*k.
    pub fn embed(self) -> QuaternionInt {
        QuaternionInt::new(self.a, self.b, self.b, self.b)
    }

    /// Conjugate (a, -b); agrees with quaternion conjugation on embeddings.
    pub fn conj(self) -> Self {
        K1Element::new(self.a, narrow(-(self.b as i128), "K1 conjugate"))
    }

    /// N(a + bw) = a^2 + 3b^2.
    pub fn norm(self) -> i64 {
        let n = (self.a as i128) * (self.a as i128) + 3 * (self.b as i128) * (self.b as i128);
        narrow(n, "K1 norm")
    }

    /// Quaternion Mannheim weight |a| + 3|b|.
    pub fn qm_weight(self) -> u64 {
        self.a.unsigned_abs() + 3 * self.b.unsigned_abs()
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Prime in H(K1) exactly when the norm is a rational prime.
    pub fn is_prime(self) -> bool {
        arith::is_prime(self.norm())
    }

    /// Parses the element text format; see the module docs of [`crate`].
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl Add for K1Element {
    type Output = K1Element;

    fn add(self, r: K1Element) -> K1Element {
        K1Element::new(
            narrow(self.a as i128 + r.a as i128, "K1 sum"),
            narrow(self.b as i128 + r.b as i128, "K1 sum"),
        )
    }
}

impl Sub for K1Element {
    type Output = K1Element;

    fn sub(self, r: K1Element) -> K1Element {
        K1Element::new(
            narrow(self.a as i128 - r.a as i128, "K1 difference"),
            narrow(self.b as i128 - r.b as i128, "K1 difference"),
        )
    }
}

impl Neg for K1Element {
    type Output = K1Element;

    fn neg(self) -> K1Element {
        K1Element::new(
            narrow(-(self.a as i128), "K1 negation"),
            narrow(-(self.b as i128), "K1 negation"),
        )
    }
}

impl Mul for K1Element {
    type Output = K1Element;

    fn mul(self, r: K1Element) -> K1Element {
        let (a, b) = (self.a as i128, self.b as i128);
        let (c, d) = (r.a as i128, r.b as i128);
        K1Element::new(
            narrow(a * c - 3 * b * d, "K1 product"),
            narrow(a * d + b * c, "K1 product"),
        )
    }
}

/// Canonical text rendering: `a` when b = 0, otherwise `a+bw` / `a-bw`
/// with the coefficient always written out (`1-1w`, `0+2w`, `-3`).
impl fmt::Display for K1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "{}", self.a)
        } else {
            write!(
                f,
                "{}{}{}w",
                self.a,
                if self.b < 0 { '-' } else { '+' },
                self.b.unsigned_abs()
            )
        }
    }
}

fn parse_int(s: &str, whole: &str) -> Result<i64> {
    s.parse::<i64>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?} in element {whole:?}")))
}

/// Accepts `a`, `a+bw`, `a-bw`, `bw`, the pair forms `(a,b)` and `a,b`,
/// and a pair whose second component carries the `w` marker (`1,-1w`).
impl FromStr for K1Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let body = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(&t);
        if let Some((lhs, rhs)) = body.split_once(',') {
            let a = parse_int(lhs, s)?;
            let b = parse_int(rhs.strip_suffix('w').unwrap_or(rhs), s)?;
            return Ok(K1Element::new(a, b));
        }
        if let Some(body) = body.strip_suffix('w') {
            // Split at the last sign that is not leading; what's left of it
            // is the complete part.
            let split = body
                .char_indices()
                .rev()
                .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
                .map(|(i, _)| i);
            let (a_str, b_str) = match split {
                Some(i) => (&body[..i], &body[i..]),
                None => ("", body),
            };
            let a = if a_str.is_empty() {
                0
            } else {
                parse_int(a_str, s)?
            };
            let b = match b_str {
                "" | "+" => 1,
                "-" => -1,
                _ => parse_int(b_str, s)?,
            };
            return Ok(K1Element::new(a, b));
        }
        Ok(K1Element::new(parse_int(body, s)?, 0))
    }
}

/// Canonical representation of a prime p as a^2 + 3b^2.
///
/// Picks the solution with the smallest a >= 0 and b > 0, so the result is
/// deterministic across runs and file formats. Returns None when no
/// representation exists (p = 2 and all p = 2 mod 3). Note that p = 3
/// is representable as (0, 1) even though downstream modulus construction
/// rejects it.
pub fn represent_prime(p: i64) -> Option<K1Element> {
    if p < 2 {
        return None;
    }
    let mut a = 0i64;
    while a * a <= p {
        let rest = p - a * a;
        if rest % 3 == 0 {
            let square = rest / 3;
            let b = square.isqrt();
            if b > 0 && b * b == square {
                return Some(K1Element::new(a, b));
            }
        }
        a += 1;
    }
    None
}
