//! Seeded property checks for the ring, polynomial and code layers, plus
//! the brute-force oracle agreements.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qmcodes_core::arith;
use qmcodes_core::oracle::{self, SearchSpec};
use qmcodes_core::poly::{Poly, QuotientSign};
use qmcodes_core::{
    decode, dlog_decode, represent_prime, CodeSpec, K1Element, Modulus, QuaternionInt, Residue,
    SyndromeTable,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_quat(rng: &mut ChaCha8Rng) -> QuaternionInt {
    QuaternionInt::new(
        rng.random_range(-50..=50),
        rng.random_range(-50..=50),
        rng.random_range(-50..=50),
        rng.random_range(-50..=50),
    )
}

fn random_k1(rng: &mut ChaCha8Rng, bound: i64) -> K1Element {
    K1Element::new(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}

/// Basis-product table multiplication, independent of the component
/// formulas in the library.
fn table_mul(q: QuaternionInt, r: QuaternionInt) -> QuaternionInt {
    // entry [i][j] = (sign, basis index) of e_i * e_j for (1, i, j, k)
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let qc = [q.a0, q.a1, q.a2, q.a3];
    let rc = [r.a0, r.a1, r.a2, r.a3];
    let mut out = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            let (sign, basis) = TABLE[i][j];
            out[basis] += sign * qc[i] * rc[j];
        }
    }
    QuaternionInt::new(out[0], out[1], out[2], out[3])
}

#[test]
fn hamilton_mul_matches_basis_table() {
    let mut rng = rng(1);
    for _ in 0..1000 {
        let q = random_quat(&mut rng);
        let r = random_quat(&mut rng);
        assert_eq!(q * r, table_mul(q, r));
    }
    let w = QuaternionInt::new(0, 1, 1, 1);
    assert_eq!(table_mul(w, w), QuaternionInt::new(-3, 0, 0, 0));
}

#[test]
fn norm_multiplicativity_1000_pairs() {
    let mut rng = rng(2);
    for _ in 0..1000 {
        let q = random_quat(&mut rng);
        let r = random_quat(&mut rng);
        assert_eq!((q * r).norm(), q.norm() * r.norm());
    }
}

#[test]
fn conjugation_is_an_anti_automorphism() {
    let mut rng = rng(3);
    for _ in 0..1000 {
        let q = random_quat(&mut rng);
        let r = random_quat(&mut rng);
        assert_eq!((q * r).conjugate(), r.conjugate() * q.conjugate());
    }
}

#[test]
fn k1_embedding_consistency_1000_pairs() {
    let mut rng = rng(4);
    for _ in 0..1000 {
        let x = random_k1(&mut rng, 50);
        let y = random_k1(&mut rng, 50);
        assert_eq!((x * y).embed(), x.embed() * y.embed());
        assert_eq!((x + y).embed(), x.embed() + y.embed());
        assert_eq!(x * y, y * x);
    }
}

#[test]
fn representable_primes_below_1000() {
    for p in 2..1000i64 {
        if !arith::is_prime(p) {
            continue;
        }
        let rep = represent_prime(p);
        let expected = p == 3 || p % 3 == 1;
        assert_eq!(rep.is_some(), expected, "p = {p}");
        if let Some(pi) = rep {
            assert_eq!(pi.norm(), p);
            assert!(pi.a >= 0 && pi.b > 0);
            // Smallest complete part among solutions.
            for a in 0..pi.a {
                let rest = p - a * a;
                assert!(rest % 3 != 0 || {
                    let b = (rest / 3).isqrt();
                    b * b != rest / 3
                });
            }
        }
    }
}

proptest! {
    #[test]
    fn element_text_round_trips(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let x = K1Element::new(a, b);
        prop_assert_eq!(x.to_string().parse::<K1Element>().unwrap(), x);
    }

    #[test]
    fn qm_weight_triangle(a in -1000i64..1000, b in -1000i64..1000,
                          c in -1000i64..1000, d in -1000i64..1000) {
        let x = K1Element::new(a, b);
        let y = K1Element::new(c, d);
        prop_assert!((x + y).qm_weight() <= x.qm_weight() + y.qm_weight());
        prop_assert_eq!(x.qm_weight() == 0, x.is_zero());
    }
}

fn test_moduli() -> Vec<Modulus> {
    vec![
        Modulus::prime_power(K1Element::new(2, 1), 1).unwrap(),
        Modulus::prime_power(K1Element::new(2, 1), 2).unwrap(),
        Modulus::two_primes(K1Element::new(2, 1), K1Element::new(1, 2)).unwrap(),
        Modulus::two_primes(K1Element::new(2, 1), K1Element::new(4, 1)).unwrap(),
    ]
}

#[test]
fn reduction_properties_10k_per_modulus() {
    for m in test_moduli() {
        assert_eq!(m.norm() % 2, 1, "all code moduli have odd norm");
        let mut rng = rng(5);
        for _ in 0..10_000 {
            let x = random_k1(&mut rng, 1_000_000);
            let r = m.reduce(x);
            // Idempotence, class invariance, strict norm bound.
            assert_eq!(m.reduce(r.rep()), r);
            let t = random_k1(&mut rng, 1000);
            assert_eq!(m.reduce(x + t * m.element()), r);
            assert!(r.rep().norm() < m.norm());
        }
    }
}

#[test]
fn exhaustive_isomorphism_small_rings() {
    for m in test_moduli() {
        let report = oracle::exhaustive_iso_check(&m).unwrap();
        assert_eq!(report.residues as i64, m.norm());
        assert_eq!(report.pairs as i64, m.norm() * m.norm());
    }
}

#[test]
fn primitive_root_certificates() {
    for p in [7i64, 13, 19, 31, 37, 43] {
        let pi = represent_prime(p).unwrap();
        let m = Modulus::prime_power(pi, 2).unwrap();
        let g = m.find_primitive_root(None).unwrap();
        let phi = m.unit_group_order();
        assert_eq!(phi as i64, p * (p - 1));
        assert_eq!(g.pow(phi / 2), m.minus_one());
        assert_eq!(oracle::brute_order(&g).unwrap(), phi);
        assert_eq!(g.order().unwrap(), phi);
    }
}

#[test]
fn partial_generator_certificates() {
    for (pi1, pi2) in [
        (K1Element::new(2, 1), K1Element::new(1, 2)),
        (K1Element::new(2, 1), K1Element::new(4, 1)),
    ] {
        let m = Modulus::two_primes(pi1, pi2).unwrap();
        for (target, p_target, other) in [(1, pi1.norm(), pi2), (2, pi2.norm(), pi1)] {
            let e = m.find_partial_generator(target).unwrap();
            let phi = (p_target - 1) as u64;
            assert_eq!(oracle::brute_order(&e).unwrap(), phi);
            assert!(e.congruent_one_mod(other).unwrap());
            assert!(e.pow(phi).is_one());
            let by_search = oracle::brute_search_element(
                &m,
                &SearchSpec {
                    order: phi,
                    congruent_one_mod: Some(other),
                },
            )
            .unwrap();
            assert_eq!(by_search, e);
        }
    }
}

fn random_residue(rng: &mut ChaCha8Rng, m: &Modulus) -> Residue {
    m.from_integer(rng.random_range(0..m.norm()))
}

fn random_poly(rng: &mut ChaCha8Rng, m: &Modulus, max_deg: usize) -> Poly {
    let len = rng.random_range(0..=max_deg + 1);
    Poly::from_residues(m, (0..len).map(|_| random_residue(rng, m)).collect())
}

#[test]
fn division_identity_1000_pairs() {
    let m = Modulus::prime_power(K1Element::new(2, 1), 2).unwrap();
    let mut rng = rng(6);
    let mut checked = 0;
    while checked < 1000 {
        let a = random_poly(&mut rng, &m, 12);
        let b = random_poly(&mut rng, &m, 6);
        if b.is_zero() || !b.leading().unwrap().is_unit() {
            continue;
        }
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
            assert!(dr < db);
        }
        // Remainder theorem against Horner evaluation.
        let at = random_residue(&mut rng, &m);
        let (_, rem) = a.divmod(&Poly::x_minus(&at)).unwrap();
        assert_eq!(rem.coeff(0), a.eval(&at));
        checked += 1;
    }
}

#[test]
fn code_invariants() {
    let codes = [
        CodeSpec::build_pi2(K1Element::new(2, 1), Some(K1Element::new(1, -1))).unwrap(),
        CodeSpec::build_crt(K1Element::new(2, 1), K1Element::new(1, 2), 2).unwrap(),
    ];
    for code in &codes {
        let n = code.length();
        let sign = match code.quotient_sign() {
            QuotientSign::Plus => 1i64,
            QuotientSign::Minus => -1,
        };
        // Root annihilation: root^n + sign = 0.
        let ring = code.ring();
        let shifted = &code.root().pow(n as u64) + &ring.from_integer(sign.rem_euclid(ring.norm()));
        assert!(shifted.is_zero());

        // Linear split multiplies back to the ambient polynomial.
        let q = Poly::divide_by_linear(n, code.quotient_sign(), code.root()).unwrap();
        assert_eq!(
            &Poly::x_minus(code.root()) * &q,
            Poly::ambient(ring, n, code.quotient_sign())
        );

        let matrix = code.generator_matrix();
        let mut rng = rng(7);
        for _ in 0..500 {
            let msg: Vec<Residue> = (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
            let word = code.encode(&msg).unwrap();
            // Encoder agrees with the vector-matrix product.
            let mut by_matrix = vec![ring.zero(); n];
            for (coef, row) in msg.iter().zip(&matrix) {
                for (acc, entry) in by_matrix.iter_mut().zip(row) {
                    *acc = &*acc + &(coef * entry);
                }
            }
            assert_eq!(word, by_matrix);
            // Syndrome-zero on every encoded word.
            assert!(qmcodes_core::syndrome(code, &word).unwrap().is_zero());
        }

        // Linearity.
        for _ in 0..100 {
            let m1: Vec<Residue> = (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
            let m2: Vec<Residue> = (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
            let sum: Vec<Residue> = m1.iter().zip(&m2).map(|(x, y)| x + y).collect();
            let w1 = code.encode(&m1).unwrap();
            let w2 = code.encode(&m2).unwrap();
            let ws = code.encode(&sum).unwrap();
            let added: Vec<Residue> = w1.iter().zip(&w2).map(|(x, y)| x + y).collect();
            assert_eq!(ws, added);
        }

        // Ideal closure under the quotient shift.
        for _ in 0..200 {
            let msg: Vec<Residue> = (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
            let word = code.encode(&msg).unwrap();
            let shifted = code.shift(&word).unwrap();
            assert!(code.is_codeword(&shifted).unwrap());
        }
    }
}

#[test]
fn decoder_equivalence_and_round_trip() {
    let code = CodeSpec::build_pi2(K1Element::new(2, 1), Some(K1Element::new(1, -1))).unwrap();
    let table = SyndromeTable::build(&code, None).unwrap();
    let ring = code.ring();
    let n = code.length();
    let mut rng = rng(8);

    // Round-trip a sample of corrupted codewords exactly.
    for _ in 0..20 {
        let msg: Vec<Residue> = (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
        let sent = code.encode(&msg).unwrap();
        for pos in 0..n {
            for value in qmcodes_core::DEFAULT_ERROR_SET {
                let mut received = sent.clone();
                received[pos] = &received[pos] + &ring.reduce(value);
                let res = decode(&code, &table, &received).unwrap();
                assert_eq!(res.corrected, sent);
                assert_eq!(res.error, Some((pos, value)));
            }
        }
    }

    // Table, discrete-log and exhaustive decoders agree on random words,
    // corrupted and uncorrupted alike.
    for trial in 0..200 {
        let received: Vec<Residue> = if trial % 2 == 0 {
            (0..n).map(|_| random_residue(&mut rng, ring)).collect()
        } else {
            let msg: Vec<Residue> =
                (0..n - 1).map(|_| random_residue(&mut rng, ring)).collect();
            let mut w = code.encode(&msg).unwrap();
            let pos = rng.random_range(0..n);
            let value = if rng.random_bool(0.5) {
                K1Element::ONE
            } else {
                K1Element::MINUS_ONE
            };
            w[pos] = &w[pos] + &ring.reduce(value);
            w
        };
        let by_table = decode(&code, &table, &received).unwrap();
        let by_dlog = dlog_decode(&code, &received).unwrap();
        let by_reference = oracle::reference_decode(&code, None, &received).unwrap();
        assert_eq!(by_table, by_dlog);
        assert_eq!(by_table, by_reference);
    }
}

#[test]
fn correctable_patterns_have_weight_one() {
    let code = CodeSpec::build_pi2(K1Element::new(2, 1), Some(K1Element::new(1, -1))).unwrap();
    let table = SyndromeTable::build(&code, None).unwrap();
    for value in table.error_set() {
        assert_eq!(value.qm_weight(), 1);
    }
    assert_eq!(table.len(), 2 * code.length());
}
