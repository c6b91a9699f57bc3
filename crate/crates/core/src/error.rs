use std::fmt;

use crate::quat::K1Element;

/// Errors reported by modulus construction, polynomial division, code
/// building and decoding.
///
/// Mismatched moduli in arithmetic and integer overflow are programming
/// errors rather than data conditions; those panic instead of returning
/// a variant here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The element is not prime in H(K1): its norm a^2 + 3b^2 is not a
    /// rational prime.
    NotPrime(K1Element),
    /// The complete part and the vector coefficient of the modulus share a
    /// common factor, so the residue ring is not isomorphic to Z_N. This
    /// rejects p = 3 (pi = i+j+k, pi^2 = -3) in particular.
    PartsNotCoprime { modulus: K1Element },
    /// A two-prime modulus needs primes of distinct norms.
    EqualPrimes { pi1: K1Element, pi2: K1Element },
    /// No (a, b) with a^2 + 3b^2 = p exists.
    Unrepresentable { p: i64 },
    /// The residue is not invertible; carries the gcd witness with the
    /// ring norm.
    NotAUnit { value: K1Element, gcd: i64 },
    /// A user-supplied generator candidate does not generate the unit group.
    CandidateNotPrimitive { candidate: K1Element },
    /// `root^length + sign != 0`, so x - root does not divide the ambient
    /// polynomial.
    RootCheckFailed {
        root: K1Element,
        length: usize,
        sign: i8,
    },
    /// Polynomial division requires the divisor's leading coefficient to be
    /// a unit.
    NonUnitLeadingCoefficient { coeff: K1Element },
    DivisionByZeroPoly,
    LengthMismatch { expected: usize, got: usize },
    /// Two error patterns share a syndrome; the requested error set is not
    /// uniquely decodable for this code.
    SyndromeCollision {
        syndrome: K1Element,
        first: (usize, K1Element),
        second: (usize, K1Element),
    },
    /// An error pattern has syndrome zero (its value reduces to zero).
    ZeroSyndrome { position: usize, value: K1Element },
    /// An exhaustive check was asked to run over a ring larger than its
    /// guard allows.
    GuardExceeded { norm: i64, limit: i64 },
    /// An exhaustive search came up empty.
    NotFound,
    /// Two routes that must agree disagreed. This signals a bug and is
    /// surfaced loudly rather than papered over.
    InternalContradiction(String),
    Parse(String),
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(x) => write!(f, "{x} is not prime in H(K1) (norm {})", x.norm()),
            Error::PartsNotCoprime { modulus } => write!(
                f,
                "modulus {modulus} has non-coprime complete part and vector coefficient; \
                 the residue ring is not isomorphic to Z_{}",
                modulus.norm()
            ),
            Error::EqualPrimes { pi1, pi2 } => {
                write!(f, "primes {pi1} and {pi2} have equal norms")
            }
            Error::Unrepresentable { p } => {
                write!(f, "no H(K1) representation: {p} != a^2 + 3b^2 for any a, b")
            }
            Error::NotAUnit { value, gcd } => {
                write!(f, "{value} is not a unit (gcd with ring norm is {gcd})")
            }
            Error::CandidateNotPrimitive { candidate } => {
                write!(f, "candidate {candidate} does not generate the unit group")
            }
            Error::RootCheckFailed { root, length, sign } => write!(
                f,
                "{root}^{length} {} 1 is nonzero, so x - ({root}) does not divide the ambient polynomial",
                if *sign >= 0 { "+" } else { "-" }
            ),
            Error::NonUnitLeadingCoefficient { coeff } => {
                write!(f, "leading coefficient {coeff} is not a unit")
            }
            Error::DivisionByZeroPoly => write!(f, "polynomial division by zero"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::SyndromeCollision {
                syndrome,
                first,
                second,
            } => write!(
                f,
                "syndrome collision: value {} at position {} and value {} at position {} \
                 share syndrome {syndrome}",
                first.1, first.0, second.1, second.0
            ),
            Error::ZeroSyndrome { position, value } => write!(
                f,
                "error value {value} at position {position} has zero syndrome"
            ),
            Error::GuardExceeded { norm, limit } => {
                write!(f, "ring norm {norm} exceeds the exhaustive-check guard {limit}")
            }
            Error::NotFound => write!(f, "exhaustive search found no matching element"),
            Error::InternalContradiction(msg) => write!(f, "internal contradiction: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
