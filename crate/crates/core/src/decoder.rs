//! Syndrome decoding of single errors of quaternion Mannheim weight one,
//! plus a discrete-log cross-check decoder.
//!
//! The default error set is {+1, -1}: by the weight formula |a| + 3|b|,
//! the weight-one error values are exactly the units +1 and -1 at a single
//! coordinate. The table maps each syndrome value * root^position to its
//! pattern; construction fails loudly if two patterns collide or a
//! syndrome is zero, so a built table is itself the decodability
//! certificate for its error set. Errors outside the set (two corrupted
//! positions, or a value not in the set) may alias a tabled pattern and
//! miscorrect; that is inherent to single-error syndrome decoding and is
//! not detected.

use std::collections::HashMap;

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quat::K1Element;
use crate::residue::Residue;

/// The weight-one error values +1 and -1.
pub const DEFAULT_ERROR_SET: [K1Element; 2] = [K1Element::ONE, K1Element::MINUS_ONE];

/// Injective map from syndromes to (position, error value).
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    entries: HashMap<K1Element, (usize, K1Element)>,
    error_set: Vec<K1Element>,
}

impl SyndromeTable {
    /// Builds the table for `code`, defaulting to the weight-one error set.
    ///
    /// Entry for position l and value e: syndrome e * root^l. Duplicate or
    /// zero syndromes abort construction with the colliding patterns.
    pub fn build(code: &CodeSpec, error_set: Option<&[K1Element]>) -> Result<SyndromeTable> {
        let set: Vec<K1Element> = error_set.unwrap_or(&DEFAULT_ERROR_SET).to_vec();
        let values: Vec<Residue> = set.iter().map(|&e| code.ring().reduce(e)).collect();
        let mut entries = HashMap::new();
        let mut root_pow = code.ring().one();
        for position in 0..code.length() {
            for (value, raw) in values.iter().zip(&set) {
                let syndrome = value * &root_pow;
                if syndrome.is_zero() {
                    return Err(Error::ZeroSyndrome {
                        position,
                        value: *raw,
                    });
                }
                if let Some(&first) = entries.get(&syndrome.rep()) {
                    return Err(Error::SyndromeCollision {
                        syndrome: syndrome.rep(),
                        first,
                        second: (position, *raw),
                    });
                }
                entries.insert(syndrome.rep(), (position, *raw));
            }
            root_pow = &root_pow * code.root();
        }
        Ok(SyndromeTable {
            entries,
            error_set: set,
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn error_set(&self) -> &[K1Element] {
        &self.error_set
    }

    pub fn lookup(&self, syndrome: &Residue) -> Option<(usize, K1Element)> {
        self.entries.get(&syndrome.rep()).copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeStatus {
    /// Syndrome zero: the received word is already a codeword.
    Clean,
    /// A tabled single error was subtracted; `corrected` is a codeword.
    Corrected,
    /// The syndrome matches no pattern; the word is returned unchanged.
    Uncorrectable,
}

impl std::fmt::Display for DecodeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DecodeStatus::Clean => "clean",
            DecodeStatus::Corrected => "corrected",
            DecodeStatus::Uncorrectable => "uncorrectable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: DecodeStatus,
    /// The subtracted (position, value) when status is Corrected.
    pub error: Option<(usize, K1Element)>,
    pub corrected: Vec<Residue>,
}

/// Evaluation of the received word at the generator's root; zero exactly
/// on codewords.
pub fn syndrome(code: &CodeSpec, received: &[Residue]) -> Result<Residue> {
    code.check_len(received)?;
    Ok(Poly::from_residues(code.ring(), received.to_vec()).eval(code.root()))
}

/// Table lookup decoding.
pub fn decode(code: &CodeSpec, table: &SyndromeTable, received: &[Residue]) -> Result<DecodeResult> {
    let s = syndrome(code, received)?;
    if s.is_zero() {
        return Ok(DecodeResult {
            status: DecodeStatus::Clean,
            error: None,
            corrected: received.to_vec(),
        });
    }
    match table.lookup(&s) {
        Some((position, value)) => {
            let mut corrected = received.to_vec();
            corrected[position] = &corrected[position] - &code.ring().reduce(value);
            debug_assert!(code.is_codeword(&corrected).unwrap());
            Ok(DecodeResult {
                status: DecodeStatus::Corrected,
                error: Some((position, value)),
                corrected,
            })
        }
        None => Ok(DecodeResult {
            status: DecodeStatus::Uncorrectable,
            error: None,
            corrected: received.to_vec(),
        }),
    }
}

/// Discrete-log decoding for the prime-square family, used as a redundant
/// cross-check of the table decoder.
///
/// The primitive root has order 2n and root^n = -1, so the syndrome of
/// +1 at position l is root^l and of -1 at position l is root^(n+l):
/// the log d of the syndrome in [0, 2n) splits into the sign (d < n or
/// not) and the position (d mod n). A syndrome with no logarithm is a
/// zero divisor or outside the single-error set: Uncorrectable.
pub fn dlog_decode(code: &CodeSpec, received: &[Residue]) -> Result<DecodeResult> {
    if !matches!(code.family(), crate::code::CodeFamily::PrimeSquare { .. }) {
        return Err(Error::Invalid(
            "discrete-log decoding applies to the prime-square family only".into(),
        ));
    }
    let s = syndrome(code, received)?;
    if s.is_zero() {
        return Ok(DecodeResult {
            status: DecodeStatus::Clean,
            error: None,
            corrected: received.to_vec(),
        });
    }
    let n = code.length();
    let mut log_table = HashMap::with_capacity(2 * n);
    let mut power = code.ring().one();
    for d in 0..2 * n {
        log_table.entry(power.rep()).or_insert(d);
        power = &power * code.root();
    }
    match log_table.get(&s.rep()) {
        Some(&d) => {
            let (position, value) = if d < n {
                (d, K1Element::ONE)
            } else {
                (d - n, K1Element::MINUS_ONE)
            };
            let mut corrected = received.to_vec();
            corrected[position] = &corrected[position] - &code.ring().reduce(value);
            debug_assert!(code.is_codeword(&corrected).unwrap());
            Ok(DecodeResult {
                status: DecodeStatus::Corrected,
                error: Some((position, value)),
                corrected,
            })
        }
        None => Ok(DecodeResult {
            status: DecodeStatus::Uncorrectable,
            error: None,
            corrected: received.to_vec(),
        }),
    }
}
