//! Exact-arithmetic cyclic codes over finite quaternion integer rings.
//!
//! The commutative subring H(K1) = { a + b(i+j+k) } of the integer
//! quaternions has (i+j+k)^2 = -3 and norm a^2 + 3b^2. For a prime
//! element pi whose complete part and vector coefficient stay coprime
//! after multiplication, the quotient by pi^2 (or by a product of
//! distinct primes) is isomorphic to Z_N with N the norm of the modulus.
//! This crate builds those rings, constructs the cyclic codes generated
//! by x - root over them, and decodes single errors of quaternion
//! Mannheim weight one by syndrome lookup, with brute-force oracles
//! cross-checking every fast path.
//!
//! Element text format used by the parsers and renderers: `a` for a
//! scalar, `a+bw` / `a-bw` with w = i+j+k otherwise (`1-1w`, `-3`,
//! `0+2w`), plus the pair forms `(a,b)` and `a,b`. Polynomials and words
//! are comma-separated elements, constant term first.

pub mod arith;
pub mod code;
pub mod decoder;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod quat;
pub mod residue;

pub use code::{parse_word, word_text, CodeFamily, CodeSpec};
pub use decoder::{
    decode, dlog_decode, syndrome, DecodeResult, DecodeStatus, SyndromeTable, DEFAULT_ERROR_SET,
};
pub use error::{Error, Result};
pub use oracle::{brute_order, brute_search_element, exhaustive_iso_check, IsoReport, SearchSpec};
pub use poly::{Poly, QuotientSign};
pub use quat::{represent_prime, K1Element, QuaternionInt};
pub use residue::{Modulus, Provenance, Residue};
