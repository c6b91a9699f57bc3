//! The finite rings H(K1)_m for m = pi^k or a product of distinct primes:
//! canonical representatives by rounded division, ring arithmetic, the
//! integer isomorphism H(K1)_m = Z_N, unit orders, primitive roots and
//! partial generators.
//!
//! When the complete part and vector coefficient of m are coprime, the map
//! a + bw -> a + b*t (mod N) with t^2 = -3 (mod N) is a ring isomorphism
//! onto Z_N. Inversion and order computations route through that
//! isomorphism on purpose: `Z[w]` is not Euclidean, so a ring-side gcd
//! would be a trap.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::quat::K1Element;

/// How a modulus was built. Everything downstream is derived from this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// m = pi^power for a single prime pi.
    PrimePower { pi: K1Element, power: u32 },
    /// m = pi1 * pi2 for primes of distinct norms.
    TwoPrimes { pi1: K1Element, pi2: K1Element },
    /// m = pi1 * ... * pik for three or more primes of pairwise distinct
    /// norms. Experimental: the same partial-generator search applies, but
    /// no code family is built on it.
    MultiPrimes { primes: Vec<K1Element> },
}

impl Provenance {
    fn constituent_primes(&self) -> Vec<K1Element> {
        match self {
            Provenance::PrimePower { pi, .. } => vec![*pi],
            Provenance::TwoPrimes { pi1, pi2 } => vec![*pi1, *pi2],
            Provenance::MultiPrimes { primes } => primes.clone(),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ModulusInner {
    m: K1Element,
    norm: i64,
    /// Image of w under the integer isomorphism: t in [0, N) with
    /// t^2 = -3 (mod N) and a + b*t = 0 (mod N).
    t: i64,
    provenance: Provenance,
}

/// A modulus of H(K1) together with its cached norm and isomorphism data.
///
/// Cheap to clone and share; all ring values are immutable after
/// construction, so a `Modulus` may be used freely across threads.
#[derive(Debug, Clone)]
pub struct Modulus {
    inner: Arc<ModulusInner>,
}

impl PartialEq for Modulus {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Modulus {}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.m)
    }
}

impl Modulus {
    /// Builds a modulus, checking every hypothesis the ring theory needs:
    /// each constituent must be prime, norms of distinct constituents must
    /// differ, norm 3 is rejected (pi^2 = -3 has non-coprime parts), and
    /// the final product must have coprime parts.
    pub fn new(provenance: Provenance) -> Result<Modulus> {
        let primes = provenance.constituent_primes();
        for pi in &primes {
            if !pi.is_prime() {
                return Err(Error::NotPrime(*pi));
            }
            if pi.norm() == 3 {
                return Err(Error::PartsNotCoprime {
                    modulus: *pi * *pi,
                });
            }
        }
        match &provenance {
            Provenance::PrimePower { power, .. } => {
                if *power == 0 {
                    return Err(Error::Invalid("prime power exponent must be >= 1".into()));
                }
            }
            Provenance::TwoPrimes { pi1, pi2 } => {
                if pi1.norm() == pi2.norm() {
                    return Err(Error::EqualPrimes {
                        pi1: *pi1,
                        pi2: *pi2,
                    });
                }
            }
            Provenance::MultiPrimes { primes } => {
                if primes.len() < 3 {
                    return Err(Error::Invalid(
                        "a multi-prime modulus needs at least three primes; \
                         use TwoPrimes or PrimePower otherwise"
                            .into(),
                    ));
                }
                for i in 0..primes.len() {
                    for j in i + 1..primes.len() {
                        if primes[i].norm() == primes[j].norm() {
                            return Err(Error::EqualPrimes {
                                pi1: primes[i],
                                pi2: primes[j],
                            });
                        }
                    }
                }
            }
        }

        let m = match &provenance {
            Provenance::PrimePower { pi, power } => {
                let mut acc = K1Element::ONE;
                for _ in 0..*power {
                    acc = acc * *pi;
                }
                acc
            }
            Provenance::TwoPrimes { pi1, pi2 } => *pi1 * *pi2,
            Provenance::MultiPrimes { primes } => {
                primes.iter().fold(K1Element::ONE, |acc, p| acc * *p)
            }
        };

        if arith::gcd(m.a, m.b) != 1 {
            return Err(Error::PartsNotCoprime { modulus: m });
        }
        let norm = m.norm();
        // gcd(b, N) = 1 follows from gcd(a, b) = 1: a common prime factor
        // of b and N = a^2 + 3b^2 would divide a^2.
        let b_inv = arith::mod_inverse(m.b, norm)
            .unwrap_or_else(|| panic!("vector coefficient of {m} not invertible mod {norm}"));
        let t = (-(m.a as i128) * (b_inv as i128)).rem_euclid(norm as i128) as i64;
        assert_eq!(
            ((t as i128) * (t as i128) + 3).rem_euclid(norm as i128),
            0,
            "v-image {t} of modulus {m} does not square to -3 mod {norm}"
        );

        Ok(Modulus {
            inner: Arc::new(ModulusInner {
                m,
                norm,
                t,
                provenance,
            }),
        })
    }

    pub fn prime_power(pi: K1Element, power: u32) -> Result<Modulus> {
        Modulus::new(Provenance::PrimePower { pi, power })
    }

    pub fn two_primes(pi1: K1Element, pi2: K1Element) -> Result<Modulus> {
        Modulus::new(Provenance::TwoPrimes { pi1, pi2 })
    }

    /// Experimental: modulus from three or more distinct primes.
    pub fn multi_primes(primes: Vec<K1Element>) -> Result<Modulus> {
        Modulus::new(Provenance::MultiPrimes { primes })
    }

    /// Convenience: represent p = a^2 + 3b^2 and raise to the given power.
    pub fn from_prime(p: i64, power: u32) -> Result<Modulus> {
        let pi = crate::quat::represent_prime(p).ok_or(Error::Unrepresentable { p })?;
        Modulus::prime_power(pi, power)
    }

    /// The ring modulus m itself.
    pub fn element(&self) -> K1Element {
        self.inner.m
    }

    /// N(m); also the size of the residue ring.
    pub fn norm(&self) -> i64 {
        self.inner.norm
    }

    /// The integer t with w = t under the isomorphism to Z_N.
    pub fn v_image(&self) -> i64 {
        self.inner.t
    }

    pub fn provenance(&self) -> &Provenance {
        &self.inner.provenance
    }

    /// phi(N): the order of the unit group.
    pub fn unit_group_order(&self) -> u64 {
        arith::euler_phi(self.inner.norm) as u64
    }

    /// Canonical representative of x mod m by rounded division: subtract
    /// round(x * conj(m) / N) * m with componentwise nearest-integer
    /// rounding. For odd N no rounding tie can occur, which makes the
    /// representative unique with N(rep) < N.
    pub fn reduce(&self, x: K1Element) -> Residue {
        let num = x * self.inner.m.conj();
        let q = K1Element::new(
            round_div_nearest(num.a, self.inner.norm),
            round_div_nearest(num.b, self.inner.norm),
        );
        let rep = x - q * self.inner.m;
        debug_assert!(
            self.inner.norm % 2 == 0 || rep.norm() < self.inner.norm,
            "canonical representative {rep} of {x} has norm >= {}",
            self.inner.norm
        );
        Residue {
            rep,
            modulus: self.clone(),
        }
    }

    /// Inverse of the integer isomorphism: the residue of the rational
    /// integer g.
    pub fn from_integer(&self, g: i64) -> Residue {
        self.reduce(K1Element::new(g.rem_euclid(self.inner.norm), 0))
    }

    pub fn zero(&self) -> Residue {
        self.reduce(K1Element::ZERO)
    }

    pub fn one(&self) -> Residue {
        self.reduce(K1Element::ONE)
    }

    pub fn minus_one(&self) -> Residue {
        self.reduce(K1Element::MINUS_ONE)
    }

    /// A generator of the unit group of a prime-power modulus.
    ///
    /// With no candidate, scans the integers 2, 3, 4, ... and returns the
    /// residue of the first primitive root, so the result is reproducible.
    /// A supplied candidate is validated and returned as-is, which lets a
    /// caller pin a specific generator such as 1-1w. Before returning, the
    /// certificate g^(phi/2) = -1 is checked.
    pub fn find_primitive_root(&self, candidate: Option<K1Element>) -> Result<Residue> {
        if !matches!(self.provenance(), Provenance::PrimePower { .. }) {
            return Err(Error::Invalid(
                "primitive roots are searched over prime-power moduli only".into(),
            ));
        }
        let phi = self.unit_group_order();
        let root = match candidate {
            Some(c) => {
                let r = self.reduce(c);
                if arith::multiplicative_order(r.to_integer(), self.norm()) != Some(phi) {
                    return Err(Error::CandidateNotPrimitive { candidate: c });
                }
                r
            }
            None => {
                let g = (2..self.norm())
                    .find(|&g| arith::multiplicative_order(g, self.norm()) == Some(phi))
                    .ok_or(Error::NotFound)?;
                self.from_integer(g)
            }
        };
        assert_eq!(
            root.pow(phi / 2),
            self.minus_one(),
            "generator certificate failed: {root}^{} != -1 mod {self}",
            phi / 2
        );
        Ok(root)
    }

    /// For a modulus built from distinct primes: the least nonnegative
    /// integer residue e with e = 1 mod every other prime and
    /// multiplicative order exactly phi(p_target).
    ///
    /// `target` is 1-based. The search ascends the integers and tests both
    /// conditions through the integer isomorphism.
    pub fn find_partial_generator(&self, target: usize) -> Result<Residue> {
        let primes = match self.provenance() {
            Provenance::TwoPrimes { .. } | Provenance::MultiPrimes { .. } => {
                self.provenance().constituent_primes()
            }
            Provenance::PrimePower { .. } => {
                return Err(Error::Invalid(
                    "partial generators are searched over multi-prime moduli only".into(),
                ))
            }
        };
        if target == 0 || target > primes.len() {
            return Err(Error::Invalid(format!(
                "target prime index {target} out of range 1..={}",
                primes.len()
            )));
        }
        let p_target = primes[target - 1].norm();
        let phi_target = (p_target - 1) as u64;
        let others = self.norm() / p_target;
        for g in 1..self.norm() {
            if g.rem_euclid(others) == 1
                && arith::multiplicative_order(g, p_target) == Some(phi_target)
            {
                return Ok(self.from_integer(g));
            }
        }
        Err(Error::NotFound)
    }
}

/// Nearest-integer division num/n for n > 0, ties toward +infinity.
///
/// For odd n a tie would need 2*num = n (mod 2n), which is impossible by
/// parity; the assertion documents that and guards hypothetical even
/// moduli.
fn round_div_nearest(num: i64, n: i64) -> i64 {
    debug_assert!(n > 0);
    let num2 = 2 * num as i128;
    let n2 = 2 * n as i128;
    if n % 2 == 1 {
        assert!(
            num2.rem_euclid(n2) != n as i128,
            "rounding tie while reducing by an odd-norm modulus"
        );
    }
    (num2 + n as i128).div_euclid(n2) as i64
}

/// A canonical residue class representative in H(K1)_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    rep: K1Element,
    modulus: Modulus,
}

impl Residue {
    pub fn rep(&self) -> K1Element {
        self.rep
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep == K1Element::ONE
    }

    /// Image under the ring isomorphism to Z_N: a + b*t mod N.
    pub fn to_integer(&self) -> i64 {
        let n = self.modulus.inner.norm as i128;
        ((self.rep.a as i128) + (self.rep.b as i128) * (self.modulus.inner.t as i128))
            .rem_euclid(n) as i64
    }

    pub fn is_unit(&self) -> bool {
        arith::gcd(self.to_integer(), self.modulus.norm()) == 1
    }

    /// Multiplicative inverse, computed through the integer isomorphism.
    pub fn inverse(&self) -> Result<Residue> {
        let x = self.to_integer();
        let n = self.modulus.norm();
        match arith::mod_inverse(x, n) {
            Some(inv) => Ok(self.modulus.from_integer(inv)),
            None => Err(Error::NotAUnit {
                value: self.rep,
                gcd: arith::gcd(x, n),
            }),
        }
    }

    /// Square-and-multiply on residues.
    pub fn pow(&self, mut exp: u64) -> Residue {
        let mut base = self.clone();
        let mut acc = self.modulus.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Least d >= 1 with self^d = 1, by testing divisors of phi(N).
    pub fn order(&self) -> Result<u64> {
        arith::multiplicative_order(self.to_integer(), self.modulus.norm()).ok_or(
            Error::NotAUnit {
                value: self.rep,
                gcd: arith::gcd(self.to_integer(), self.modulus.norm()),
            },
        )
    }

    /// True when self - 1 is divisible by `pi` in H(K1).
    pub fn congruent_one_mod(&self, pi: K1Element) -> Result<bool> {
        let sub = Modulus::prime_power(pi, 1)?;
        Ok(sub.reduce(self.rep - K1Element::ONE).is_zero())
    }

    fn require_same_modulus(&self, rhs: &Residue) {
        assert!(
            self.modulus == rhs.modulus,
            "residue arithmetic across different moduli: {} vs {}",
            self.modulus,
            rhs.modulus
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Add for &Residue {
    type Output = Residue;

    fn add(self, rhs: &Residue) -> Residue {
        self.require_same_modulus(rhs);
        self.modulus.reduce(self.rep + rhs.rep)
    }
}

impl Sub for &Residue {
    type Output = Residue;

    fn sub(self, rhs: &Residue) -> Residue {
        self.require_same_modulus(rhs);
        self.modulus.reduce(self.rep - rhs.rep)
    }
}

impl Mul for &Residue {
    type Output = Residue;

    fn mul(self, rhs: &Residue) -> Residue {
        self.require_same_modulus(rhs);
        self.modulus.reduce(self.rep * rhs.rep)
    }
}

impl Neg for &Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        self.modulus.reduce(-self.rep)
    }
}
