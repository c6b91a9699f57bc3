//! Construction of the two cyclic code families over H(K1) residue rings,
//! their generator matrices and the polynomial encoder.
//!
//! Both families use a degree-one monic generator g(x) = x - root:
//!
//! * prime-square family: over H(K1) mod pi^2 with N = p^2, a primitive
//!   root alpha gives alpha^(phi(p^2)/2) = -1, so x - alpha divides
//!   x^n + 1 with n = p(p-1)/2. Codewords live in the quotient by
//!   x^n + 1, so the cyclic shift wraps with a negation.
//! * two-prime family: over H(K1) mod pi1*pi2, a partial generator e
//!   (e = 1 mod the other prime, order phi(p_target)) gives e^n = 1 with
//!   n = phi(p_target), so x - e divides x^n - 1 and the shift is the
//!   plain cyclic one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{split_elements, Poly, QuotientSign};
use crate::quat::K1Element;
use crate::residue::{Modulus, Residue};

/// Which construction produced a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeFamily {
    PrimeSquare { pi: K1Element },
    TwoPrimes { pi1: K1Element, pi2: K1Element, target: u8 },
}

/// A cyclic code of length n over H(K1)_m with generator x - root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    ring: Modulus,
    family: CodeFamily,
    length: usize,
    sign: QuotientSign,
    root: Residue,
    gen: Poly,
}

impl CodeSpec {
    /// Code of length p(p-1)/2 over H(K1) mod pi^2, quotient x^n + 1.
    ///
    /// `candidate` pins the primitive root (for example 1-1w for p = 7);
    /// without it the ascending integer search picks the generator.
    pub fn build_pi2(pi: K1Element, candidate: Option<K1Element>) -> Result<CodeSpec> {
        let ring = Modulus::prime_power(pi, 2)?;
        let root = ring.find_primitive_root(candidate)?;
        let length = (ring.unit_group_order() / 2) as usize;
        let sign = QuotientSign::Plus;
        // Proves (x - root) | x^n + 1 with zero remainder.
        Poly::divide_by_linear(length, sign, &root)?;
        Ok(CodeSpec {
            gen: Poly::x_minus(&root),
            family: CodeFamily::PrimeSquare { pi },
            ring,
            length,
            sign,
            root,
        })
    }

    /// Code of length phi(p_target) over H(K1) mod pi1*pi2, quotient
    /// x^n - 1. `target` selects which prime's unit group sets the length
    /// (1 or 2).
    pub fn build_crt(pi1: K1Element, pi2: K1Element, target: u8) -> Result<CodeSpec> {
        if !(1..=2).contains(&target) {
            return Err(Error::Invalid(format!("target must be 1 or 2, got {target}")));
        }
        let ring = Modulus::two_primes(pi1, pi2)?;
        let root = ring.find_partial_generator(target as usize)?;
        let p_target = if target == 1 { pi1.norm() } else { pi2.norm() };
        let length = (p_target - 1) as usize;
        let sign = QuotientSign::Minus;
        Poly::divide_by_linear(length, sign, &root)?;
        Ok(CodeSpec {
            gen: Poly::x_minus(&root),
            family: CodeFamily::TwoPrimes { pi1, pi2, target },
            ring,
            length,
            sign,
            root,
        })
    }

    pub fn ring(&self) -> &Modulus {
        &self.ring
    }

    pub fn family(&self) -> &CodeFamily {
        &self.family
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn quotient_sign(&self) -> QuotientSign {
        self.sign
    }

    pub fn root(&self) -> &Residue {
        &self.root
    }

    pub fn gen_poly(&self) -> &Poly {
        &self.gen
    }

    /// The (n-1) x n banded matrix whose row i holds the coefficients of
    /// x^i * g(x): -root on the diagonal, 1 to its right. Every band entry
    /// is a unit, so the code is a free module over the ring.
    pub fn generator_matrix(&self) -> Vec<Vec<Residue>> {
        let n = self.length;
        let mut rows = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let mut row = vec![self.ring.zero(); n];
            row[i] = -&self.root;
            row[i + 1] = self.ring.one();
            rows.push(row);
        }
        rows
    }

    /// Non-systematic encoding c(x) = m(x) * g(x); the product degree stays
    /// below n, so no quotient reduction is needed. Identical to the
    /// vector-matrix product with the generator matrix.
    pub fn encode(&self, message: &[Residue]) -> Result<Vec<Residue>> {
        if message.len() != self.length - 1 {
            return Err(Error::LengthMismatch {
                expected: self.length - 1,
                got: message.len(),
            });
        }
        let m = Poly::from_residues(&self.ring, message.to_vec());
        let c = &m * &self.gen;
        debug_assert!(c.degree().is_none_or(|d| d < self.length));
        Ok((0..self.length).map(|i| c.coeff(i)).collect())
    }

    /// Membership test: a word is in the code exactly when it evaluates to
    /// zero at the generator's root.
    pub fn is_codeword(&self, word: &[Residue]) -> Result<bool> {
        self.check_len(word)?;
        Ok(Poly::from_residues(&self.ring, word.to_vec())
            .eval(&self.root)
            .is_zero())
    }

    /// Multiplication by x in the ambient quotient: a cyclic shift whose
    /// wrapped symbol is negated for the x^n + 1 family and kept as-is for
    /// the x^n - 1 family. Preserves membership either way.
    pub fn shift(&self, word: &[Residue]) -> Result<Vec<Residue>> {
        self.check_len(word)?;
        let last = word.last().expect("length >= 1 checked above");
        let wrapped = match self.sign {
            QuotientSign::Plus => -last,
            QuotientSign::Minus => last.clone(),
        };
        let mut out = Vec::with_capacity(self.length);
        out.push(wrapped);
        out.extend_from_slice(&word[..self.length - 1]);
        Ok(out)
    }

    pub(crate) fn check_len(&self, word: &[Residue]) -> Result<()> {
        if word.len() != self.length {
            return Err(Error::LengthMismatch {
                expected: self.length,
                got: word.len(),
            });
        }
        Ok(())
    }

    /// Re-runs the structural checks a freshly built code satisfies:
    /// root annihilation, the zero-remainder linear split, the length
    /// formula of the family, and unit band entries.
    pub fn validate(&self) -> Result<()> {
        let q = Poly::divide_by_linear(self.length, self.sign, &self.root)?;
        let product = &Poly::x_minus(&self.root) * &q;
        if product != Poly::ambient(&self.ring, self.length, self.sign) {
            return Err(Error::InternalContradiction(
                "linear split does not multiply back to the ambient polynomial".into(),
            ));
        }
        let expected_len = match &self.family {
            CodeFamily::PrimeSquare { pi } => {
                let p = pi.norm();
                (p * (p - 1) / 2) as usize
            }
            CodeFamily::TwoPrimes { pi1, pi2, target } => {
                let p = if *target == 1 { pi1.norm() } else { pi2.norm() };
                (p - 1) as usize
            }
        };
        if self.length != expected_len {
            return Err(Error::Invalid(format!(
                "length {} does not match the family formula {expected_len}",
                self.length
            )));
        }
        if !self.root.is_unit() {
            return Err(Error::NotAUnit {
                value: self.root.rep(),
                gcd: crate::arith::gcd(self.root.to_integer(), self.ring.norm()),
            });
        }
        Ok(())
    }

    /// Compact single-line JSON with a fixed field order; see the README
    /// for the schema.
    pub fn to_json_string(&self) -> String {
        let (family, pi, power, pi1, pi2, target) = match &self.family {
            CodeFamily::PrimeSquare { pi } => (
                "prime_square",
                Some([pi.a, pi.b]),
                Some(2u32),
                None,
                None,
                None,
            ),
            CodeFamily::TwoPrimes { pi1, pi2, target } => (
                "two_primes",
                None,
                None,
                Some([pi1.a, pi1.b]),
                Some([pi2.a, pi2.b]),
                Some(*target),
            ),
        };
        let file = SpecFile {
            family: family.into(),
            pi,
            power,
            pi1,
            pi2,
            target,
            modulus: [self.ring.element().a, self.ring.element().b],
            ring_norm: self.ring.norm(),
            length: self.length,
            quotient_sign: self.sign.as_int(),
            root: [self.root.rep().a, self.root.rep().b],
        };
        serde_json::to_string(&file).expect("code spec serialization cannot fail")
    }

    /// Loads a code-spec file. Structural consistency (modulus, ring norm,
    /// quotient sign vs family) is enforced here; semantic properties of
    /// the root are left to [`CodeSpec::validate`] so that a tampered file
    /// can be loaded and then reported by verification.
    pub fn from_json_str(s: &str) -> Result<CodeSpec> {
        let file: SpecFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("code spec: {e}")))?;
        let (ring, family, sign) = match file.family.as_str() {
            "prime_square" => {
                let pi = file
                    .pi
                    .ok_or_else(|| Error::Parse("prime_square spec needs \"pi\"".into()))?;
                let power = file.power.unwrap_or(2);
                if power != 2 {
                    return Err(Error::Parse("prime_square spec uses power 2".into()));
                }
                let pi = K1Element::new(pi[0], pi[1]);
                (
                    Modulus::prime_power(pi, 2)?,
                    CodeFamily::PrimeSquare { pi },
                    QuotientSign::Plus,
                )
            }
            "two_primes" => {
                let pi1 = file
                    .pi1
                    .ok_or_else(|| Error::Parse("two_primes spec needs \"pi1\"".into()))?;
                let pi2 = file
                    .pi2
                    .ok_or_else(|| Error::Parse("two_primes spec needs \"pi2\"".into()))?;
                let target = file
                    .target
                    .ok_or_else(|| Error::Parse("two_primes spec needs \"target\"".into()))?;
                if !(1..=2).contains(&target) {
                    return Err(Error::Parse("target must be 1 or 2".into()));
                }
                let pi1 = K1Element::new(pi1[0], pi1[1]);
                let pi2 = K1Element::new(pi2[0], pi2[1]);
                (
                    Modulus::two_primes(pi1, pi2)?,
                    CodeFamily::TwoPrimes { pi1, pi2, target },
                    QuotientSign::Minus,
                )
            }
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        if file.quotient_sign != sign.as_int() {
            return Err(Error::Parse(format!(
                "quotient_sign {} does not match family {}",
                file.quotient_sign, file.family
            )));
        }
        let stored_m = K1Element::new(file.modulus[0], file.modulus[1]);
        if stored_m != ring.element() || file.ring_norm != ring.norm() {
            return Err(Error::Parse(format!(
                "stored modulus {stored_m}/{} disagrees with the recomputed {}/{}",
                file.ring_norm,
                ring.element(),
                ring.norm()
            )));
        }
        let root = ring.reduce(K1Element::new(file.root[0], file.root[1]));
        Ok(CodeSpec {
            gen: Poly::x_minus(&root),
            family,
            ring,
            length: file.length,
            sign,
            root,
        })
    }
}

/// On-disk schema. Field order is part of the format.
#[derive(Serialize, Deserialize)]
struct SpecFile {
    family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi1: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pi2: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<u8>,
    modulus: [i64; 2],
    ring_norm: i64,
    length: usize,
    quotient_sign: i8,
    root: [i64; 2],
}

/// Parses a word (or message) in polynomial text form, zero-padding up to
/// `n` coefficients.
pub fn parse_word(ring: &Modulus, s: &str, n: usize) -> Result<Vec<Residue>> {
    let parts = split_elements(s)?;
    if parts.len() > n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: parts.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    for part in parts {
        out.push(ring.reduce(part.parse::<K1Element>()?));
    }
    out.resize(n, ring.zero());
    Ok(out)
}

/// Renders a word as comma-separated element text, constant term first,
/// all positions written out.
pub fn word_text(word: &[Residue]) -> String {
    word.iter()
        .map(|r| r.rep().to_string())
        .collect::<Vec<_>>()
        .join(",")
}
