//! Brute-force reference implementations used to cross-check the fast
//! paths: element orders by successive multiplication, exhaustive ring
//! isomorphism checks, ascending-integer element searches, and an
//! exhaustive single-error decoder.
//!
//! These share only the element arithmetic and the reduction with the
//! main paths; they avoid square-and-multiply, factorization and table
//! lookups on purpose, so a bug in either side shows up as a mismatch.

use std::collections::HashSet;

use crate::arith;
use crate::code::CodeSpec;
use crate::decoder::{DecodeResult, DecodeStatus, DEFAULT_ERROR_SET};
use crate::error::{Error, Result};
use crate::quat::K1Element;
use crate::residue::{Modulus, Residue};

/// Largest ring norm the exhaustive checks will run over.
pub const EXHAUSTIVE_GUARD: i64 = 10_000;

/// Least d >= 1 with r^d = 1, found by successive multiplication.
pub fn brute_order(r: &Residue) -> Result<u64> {
    if !r.is_unit() {
        return Err(Error::NotAUnit {
            value: r.rep(),
            gcd: arith::gcd(r.to_integer(), r.modulus().norm()),
        });
    }
    let one = r.modulus().one();
    let mut acc = r.clone();
    let mut d = 1u64;
    while acc != one {
        acc = &acc * r;
        d += 1;
        assert!(
            d <= r.modulus().norm() as u64,
            "order search exceeded the ring size; the unit group is broken"
        );
    }
    Ok(d)
}

/// Counts from an exhaustive isomorphism check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoReport {
    pub norm: i64,
    /// Residues checked for both round-trip directions and distinctness.
    pub residues: usize,
    /// Ordered pairs checked for preservation of + and *.
    pub pairs: usize,
}

/// Verifies over all of Z_N that `from_integer` and `to_integer` are
/// mutually inverse bijections and that both ring operations are
/// preserved, for every one of the N^2 ordered pairs.
pub fn exhaustive_iso_check(m: &Modulus) -> Result<IsoReport> {
    let n = m.norm();
    if n > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded {
            norm: n,
            limit: EXHAUSTIVE_GUARD,
        });
    }
    let residues: Vec<Residue> = (0..n).map(|g| m.from_integer(g)).collect();
    let mut seen = HashSet::new();
    for (g, r) in residues.iter().enumerate() {
        if r.to_integer() != g as i64 {
            return Err(Error::InternalContradiction(format!(
                "to_integer(from_integer({g})) = {} in Z_{n}",
                r.to_integer()
            )));
        }
        if m.reduce(r.rep()) != *r {
            return Err(Error::InternalContradiction(format!(
                "representative {r} is not a fixed point of reduce"
            )));
        }
        if !seen.insert(r.rep()) {
            return Err(Error::InternalContradiction(format!(
                "representative {r} occurs twice; from_integer is not injective"
            )));
        }
    }
    let mut pairs = 0usize;
    for x in &residues {
        let ix = x.to_integer() as i128;
        for y in &residues {
            let iy = y.to_integer() as i128;
            let prod = (x * y).to_integer() as i128;
            let sum = (x + y).to_integer() as i128;
            if prod != (ix * iy).rem_euclid(n as i128) || sum != (ix + iy).rem_euclid(n as i128) {
                return Err(Error::InternalContradiction(format!(
                    "ring operations not preserved at ({ix}, {iy}) in Z_{n}"
                )));
            }
            pairs += 1;
        }
    }
    Ok(IsoReport {
        norm: n,
        residues: residues.len(),
        pairs,
    })
}

/// What [`brute_search_element`] looks for.
#[derive(Debug, Clone)]
pub struct SearchSpec {
    /// Exact multiplicative order, by successive multiplication.
    pub order: u64,
    /// When set, the element must be congruent to 1 modulo this prime.
    pub congruent_one_mod: Option<K1Element>,
}

/// Ascending-integer exhaustive search for a unit with the given order
/// (and optional congruence). Independent of the fast searches, which it
/// must agree with.
pub fn brute_search_element(m: &Modulus, spec: &SearchSpec) -> Result<Residue> {
    if m.norm() > EXHAUSTIVE_GUARD {
        return Err(Error::GuardExceeded {
            norm: m.norm(),
            limit: EXHAUSTIVE_GUARD,
        });
    }
    for g in 1..m.norm() {
        let r = m.from_integer(g);
        if !r.is_unit() {
            continue;
        }
        if let Some(pi) = spec.congruent_one_mod {
            if !r.congruent_one_mod(pi)? {
                continue;
            }
        }
        if brute_order(&r)? == spec.order {
            return Ok(r);
        }
    }
    Err(Error::NotFound)
}

/// Exhaustive single-error decoder: tries the no-error case and all
/// n * |error_set| single subtractions, and demands a unique codeword
/// among the candidates. Several hits would falsify the syndrome table's
/// injectivity, so that case is an error rather than a result.
pub fn reference_decode(
    code: &CodeSpec,
    error_set: Option<&[K1Element]>,
    received: &[Residue],
) -> Result<DecodeResult> {
    code.check_len(received)?;
    let set = error_set.unwrap_or(&DEFAULT_ERROR_SET);
    let mut matches: Vec<DecodeResult> = Vec::new();
    if code.is_codeword(received)? {
        matches.push(DecodeResult {
            status: DecodeStatus::Clean,
            error: None,
            corrected: received.to_vec(),
        });
    }
    for position in 0..code.length() {
        for &value in set {
            let mut candidate = received.to_vec();
            candidate[position] = &candidate[position] - &code.ring().reduce(value);
            if code.is_codeword(&candidate)? {
                matches.push(DecodeResult {
                    status: DecodeStatus::Corrected,
                    error: Some((position, value)),
                    corrected: candidate,
                });
            }
        }
    }
    match matches.len() {
        0 => Ok(DecodeResult {
            status: DecodeStatus::Uncorrectable,
            error: None,
            corrected: received.to_vec(),
        }),
        1 => Ok(matches.pop().expect("length checked")),
        k => Err(Error::InternalContradiction(format!(
            "{k} distinct corrections yield codewords; the error set is not uniquely decodable"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoder::{decode, SyndromeTable};

    fn pi_squared() -> Modulus {
        Modulus::prime_power(K1Element::new(2, 1), 2).unwrap()
    }

    fn crt_modulus() -> Modulus {
        Modulus::two_primes(K1Element::new(2, 1), K1Element::new(1, 2)).unwrap()
    }

    #[test]
    fn brute_orders() {
        let m = pi_squared();
        assert_eq!(brute_order(&m.reduce(K1Element::new(1, -1))).unwrap(), 42);
        assert_eq!(brute_order(&m.one()).unwrap(), 1);
        assert_eq!(brute_order(&m.minus_one()).unwrap(), 2);
        assert!(brute_order(&m.reduce(K1Element::new(7, 0))).is_err());
    }

    #[test]
    fn iso_checks_pass() {
        let pi = Modulus::prime_power(K1Element::new(2, 1), 1).unwrap();
        let report = exhaustive_iso_check(&pi).unwrap();
        assert_eq!((report.norm, report.residues, report.pairs), (7, 7, 49));

        let report = exhaustive_iso_check(&pi_squared()).unwrap();
        assert_eq!((report.norm, report.residues, report.pairs), (49, 49, 2401));

        let report = exhaustive_iso_check(&crt_modulus()).unwrap();
        assert_eq!((report.norm, report.residues, report.pairs), (91, 91, 8281));
    }

    #[test]
    fn iso_guard() {
        let m = Modulus::prime_power(K1Element::new(5, 2), 3).unwrap();
        assert!(m.norm() > EXHAUSTIVE_GUARD);
        assert!(matches!(
            exhaustive_iso_check(&m).unwrap_err(),
            Error::GuardExceeded { .. }
        ));
    }

    #[test]
    fn searches_agree_with_fast_paths() {
        let m = crt_modulus();
        let e = brute_search_element(
            &m,
            &SearchSpec {
                order: 12,
                congruent_one_mod: Some(K1Element::new(2, 1)),
            },
        )
        .unwrap();
        assert_eq!(e.to_integer(), 15);
        assert_eq!(e, m.find_partial_generator(2).unwrap());

        let f = brute_search_element(
            &m,
            &SearchSpec {
                order: 6,
                congruent_one_mod: Some(K1Element::new(1, 2)),
            },
        )
        .unwrap();
        assert_eq!(f.to_integer(), 40);
        assert_eq!(f, m.find_partial_generator(1).unwrap());

        let g = brute_search_element(
            &pi_squared(),
            &SearchSpec {
                order: 42,
                congruent_one_mod: None,
            },
        )
        .unwrap();
        assert_eq!(g.to_integer(), 3);
        assert_eq!(g, pi_squared().find_primitive_root(None).unwrap());

        assert!(matches!(
            brute_search_element(
                &m,
                &SearchSpec {
                    order: 11,
                    congruent_one_mod: None
                }
            )
            .unwrap_err(),
            Error::NotFound
        ));
    }

    #[test]
    fn reference_decoder_basics() {
        let code = CodeSpec::build_pi2(K1Element::new(2, 1), Some(K1Element::new(1, -1))).unwrap();
        let table = SyndromeTable::build(&code, None).unwrap();

        let mut msg = vec![code.ring().zero(); code.length() - 1];
        msg[4] = code.ring().from_integer(11);
        let sent = code.encode(&msg).unwrap();
        assert_eq!(
            reference_decode(&code, None, &sent).unwrap().status,
            DecodeStatus::Clean
        );

        let mut received = sent.clone();
        received[9] = &received[9] + &code.ring().one();
        let by_table = decode(&code, &table, &received).unwrap();
        let by_search = reference_decode(&code, None, &received).unwrap();
        assert_eq!(by_table, by_search);
        assert_eq!(by_search.corrected, sent);

        let mut word = vec![code.ring().zero(); code.length()];
        word[0] = code.ring().reduce(K1Element::new(7, 0));
        assert_eq!(
            reference_decode(&code, None, &word).unwrap().status,
            DecodeStatus::Uncorrectable
        );
    }
}
