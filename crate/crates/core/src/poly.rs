//! Dense univariate polynomials over a residue ring, with division by
//! monic polynomials and the linear-factor splits of x^n +/- 1 that the
//! code constructions rest on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quat::K1Element;
use crate::residue::{Modulus, Residue};

/// Sign of the ambient quotient polynomial: x^n + 1 or x^n - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientSign {
    Plus,
    Minus,
}

impl QuotientSign {
    /// +1 or -1, as written in the code-spec file format.
    pub fn as_int(self) -> i8 {
        match self {
            QuotientSign::Plus => 1,
            QuotientSign::Minus => -1,
        }
    }

    pub fn from_int(v: i8) -> Result<Self> {
        match v {
            1 => Ok(QuotientSign::Plus),
            -1 => Ok(QuotientSign::Minus),
            _ => Err(Error::Parse(format!("quotient_sign must be 1 or -1, got {v}"))),
        }
    }

    /// The constant term of x^n + sign as a ring element.
    fn constant(self) -> K1Element {
        match self {
            QuotientSign::Plus => K1Element::ONE,
            QuotientSign::Minus => K1Element::MINUS_ONE,
        }
    }
}

/// Coefficients ascending by degree, all canonical, no trailing zeros.
/// The zero polynomial has an empty coefficient vector and degree `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Modulus,
    coeffs: Vec<Residue>,
}

impl Poly {
    pub fn zero(ring: &Modulus) -> Poly {
        Poly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn from_residues(ring: &Modulus, coeffs: Vec<Residue>) -> Poly {
        for c in &coeffs {
            assert!(
                c.modulus() == ring,
                "polynomial coefficient from a different modulus"
            );
        }
        let mut p = Poly {
            ring: ring.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_elements(ring: &Modulus, elems: &[K1Element]) -> Poly {
        Poly::from_residues(ring, elems.iter().map(|&e| ring.reduce(e)).collect())
    }

    pub fn constant(ring: &Modulus, c: K1Element) -> Poly {
        Poly::from_elements(ring, &[c])
    }

    /// x - root, the generator shape every code here uses.
    pub fn x_minus(root: &Residue) -> Poly {
        let ring = root.modulus().clone();
        Poly::from_residues(&ring, vec![-root, ring.one()])
    }

    /// The ambient polynomial x^n + sign.
    pub fn ambient(ring: &Modulus, n: usize, sign: QuotientSign) -> Poly {
        let mut coeffs = vec![K1Element::ZERO; n + 1];
        coeffs[0] = sign.constant();
        coeffs[n] = K1Element::ONE;
        Poly::from_elements(ring, &coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Residue::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Modulus {
        &self.ring
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Residue] {
        &self.coeffs
    }

    /// Coefficient of x^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Residue {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading(&self) -> Option<&Residue> {
        self.coeffs.last()
    }

    fn require_same_ring(&self, rhs: &Poly) {
        assert!(
            self.ring == rhs.ring,
            "polynomial arithmetic across different moduli"
        );
    }

    pub fn scalar_mul(&self, c: &Residue) -> Poly {
        Poly::from_residues(&self.ring, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Residue) -> Residue {
        assert!(
            at.modulus() == &self.ring,
            "evaluation point from a different modulus"
        );
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Long division: self = q * divisor + r with deg r < deg divisor.
    /// Exact over the ring because only the divisor's leading coefficient
    /// is inverted.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.require_same_ring(divisor);
        let Some(db) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lead = divisor.leading().expect("nonzero divisor has a leading coefficient");
        let lead_inv = lead.inverse().map_err(|_| Error::NonUnitLeadingCoefficient {
            coeff: lead.rep(),
        })?;
        let Some(da) = self.degree() else {
            return Ok((Poly::zero(&self.ring), Poly::zero(&self.ring)));
        };
        if da < db {
            return Ok((Poly::zero(&self.ring), self.clone()));
        }

        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ring.zero(); da - db + 1];
        for k in (db..=da).rev() {
            let factor = &rem[k] * &lead_inv;
            if factor.is_zero() {
                continue;
            }
            for i in 0..=db {
                rem[k - db + i] = &rem[k - db + i] - &(&factor * &divisor.coeffs[i]);
            }
            quot[k - db] = factor;
        }
        Ok((
            Poly::from_residues(&self.ring, quot),
            Poly::from_residues(&self.ring, rem),
        ))
    }

    /// Q with (x - root) * Q = x^n + sign, by synthetic division.
    ///
    /// Requires root^n + sign = 0; the remainder is then exactly zero and
    /// Q = x^(n-1) + root*x^(n-2) + ... + root^(n-1).
    pub fn divide_by_linear(n: usize, sign: QuotientSign, root: &Residue) -> Result<Poly> {
        if n == 0 {
            return Err(Error::Invalid("ambient degree must be >= 1".into()));
        }
        let ring = root.modulus();
        let expect = ring.reduce(-sign.constant());
        if root.pow(n as u64) != expect {
            return Err(Error::RootCheckFailed {
                root: root.rep(),
                length: n,
                sign: sign.as_int(),
            });
        }
        let mut coeffs = vec![ring.one(); n];
        for i in (0..n - 1).rev() {
            coeffs[i] = &coeffs[i + 1] * root;
        }
        Ok(Poly::from_residues(ring, coeffs))
    }

    /// Comma-separated coefficients, constant term first, each in element
    /// text form. Parenthesized pair elements are allowed.
    pub fn parse(ring: &Modulus, s: &str) -> Result<Poly> {
        let elems = split_elements(s)?
            .iter()
            .map(|part| part.parse::<K1Element>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_elements(ring, &elems))
    }
}

/// Splits a comma-separated element list, ignoring commas inside
/// parenthesized pairs.
pub fn split_elements(s: &str) -> Result<Vec<&str>> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced ')' in {s:?}")))?;
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '(' in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for c in &self.coeffs {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        self.require_same_ring(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_residues(&self.ring, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self.require_same_ring(rhs);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_residues(&self.ring, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_residues(&self.ring, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.require_same_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut acc = vec![self.ring.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = &acc[i + j] + &(a * b);
            }
        }
        Poly::from_residues(&self.ring, acc)
    }
}
