//! Python extension module exposing the main types and operations:
//! K1Element, Modulus, Residue, Code, SyndromeTable and decoding.
//!
//! Wherever a list of ring elements is expected, plain ints, (a, b)
//! tuples, K1Element and Residue values may be mixed freely.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qmcodes_core as qc;

fn err(e: qc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Anything convertible to a ring element.
#[derive(FromPyObject)]
enum ElementLike {
    Residue(PyResidue),
    Element(PyK1Element),
    Pair((i64, i64)),
    Int(i64),
}

fn to_residue(m: &qc::Modulus, v: ElementLike) -> PyResult<qc::Residue> {
    match v {
        ElementLike::Residue(r) => {
            if r.inner.modulus() != m {
                return Err(PyValueError::new_err(
                    "residue belongs to a different modulus",
                ));
            }
            Ok(r.inner)
        }
        ElementLike::Element(e) => Ok(m.reduce(e.inner)),
        ElementLike::Pair((a, b)) => Ok(m.reduce(qc::K1Element::new(a, b))),
        ElementLike::Int(g) => Ok(m.from_integer(g.rem_euclid(m.norm()))),
    }
}

fn to_word(m: &qc::Modulus, items: Vec<ElementLike>) -> PyResult<Vec<qc::Residue>> {
    items.into_iter().map(|v| to_residue(m, v)).collect()
}

/// An element a + b*w of H(K1) with w = i + j + k.
#[pyclass(name = "K1Element", frozen, from_py_object)]
#[derive(Clone)]
struct PyK1Element {
    inner: qc::K1Element,
}

#[pymethods]
impl PyK1Element {
    #[new]
    fn new(a: i64, b: i64) -> Self {
        PyK1Element {
            inner: qc::K1Element::new(a, b),
        }
    }

    /// Parses `a`, `a+bw`, `a-bw`, `(a,b)` or `a,b`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyK1Element {
            inner: qc::K1Element::parse(text).map_err(err)?,
        })
    }

    #[getter]
    fn a(&self) -> i64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> i64 {
        self.inner.b
    }

    fn norm(&self) -> i64 {
        self.inner.norm()
    }

    fn qm_weight(&self) -> u64 {
        self.inner.qm_weight()
    }

    fn is_prime(&self) -> bool {
        self.inner.is_prime()
    }

    fn conj(&self) -> Self {
        PyK1Element {
            inner: self.inner.conj(),
        }
    }

    /// The quaternion components (a, b, b, b).
    fn embed(&self) -> (i64, i64, i64, i64) {
        let q = self.inner.embed();
        (q.a0, q.a1, q.a2, q.a3)
    }

    fn __add__(&self, other: &Self) -> Self {
        PyK1Element {
            inner: self.inner + other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyK1Element {
            inner: self.inner - other.inner,
        }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyK1Element {
            inner: self.inner * other.inner,
        }
    }

    fn __neg__(&self) -> Self {
        PyK1Element { inner: -self.inner }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("K1Element({}, {})", self.inner.a, self.inner.b)
    }
}

/// Canonical prime representation p = a^2 + 3b^2, or None.
#[pyfunction]
fn represent_prime(p: i64) -> Option<PyK1Element> {
    qc::represent_prime(p).map(|inner| PyK1Element { inner })
}

/// A modulus of H(K1) with its residue ring H(K1)_m = Z_N.
#[pyclass(name = "Modulus", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModulus {
    inner: qc::Modulus,
}

#[pymethods]
impl PyModulus {
    #[staticmethod]
    fn prime_power(pi: &PyK1Element, power: u32) -> PyResult<Self> {
        Ok(PyModulus {
            inner: qc::Modulus::prime_power(pi.inner, power).map_err(err)?,
        })
    }

    #[staticmethod]
    fn two_primes(pi1: &PyK1Element, pi2: &PyK1Element) -> PyResult<Self> {
        Ok(PyModulus {
            inner: qc::Modulus::two_primes(pi1.inner, pi2.inner).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_prime(p: i64, power: u32) -> PyResult<Self> {
        Ok(PyModulus {
            inner: qc::Modulus::from_prime(p, power).map_err(err)?,
        })
    }

    /// The modulus element m itself.
    #[getter]
    fn element(&self) -> PyK1Element {
        PyK1Element {
            inner: self.inner.element(),
        }
    }

    #[getter]
    fn norm(&self) -> i64 {
        self.inner.norm()
    }

    /// t with w = t (mod N) under the integer isomorphism.
    #[getter]
    fn v_image(&self) -> i64 {
        self.inner.v_image()
    }

    fn unit_group_order(&self) -> u64 {
        self.inner.unit_group_order()
    }

    fn reduce(&self, x: ElementLike) -> PyResult<PyResidue> {
        Ok(PyResidue {
            inner: to_residue(&self.inner, x)?,
        })
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_integer(&self, g: i64) -> PyResidue {
        PyResidue {
            inner: self.inner.from_integer(g),
        }
    }

    fn zero(&self) -> PyResidue {
        PyResidue {
            inner: self.inner.zero(),
        }
    }

    fn one(&self) -> PyResidue {
        PyResidue {
            inner: self.inner.one(),
        }
    }

    #[pyo3(signature = (candidate=None))]
    fn primitive_root(&self, candidate: Option<&PyK1Element>) -> PyResult<PyResidue> {
        Ok(PyResidue {
            inner: self
                .inner
                .find_primitive_root(candidate.map(|c| c.inner))
                .map_err(err)?,
        })
    }

    fn partial_generator(&self, target: usize) -> PyResult<PyResidue> {
        Ok(PyResidue {
            inner: self.inner.find_partial_generator(target).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Modulus({}, norm={})",
            self.inner.element(),
            self.inner.norm()
        )
    }
}

/// A canonical residue in H(K1)_m.
#[pyclass(name = "Residue", frozen, from_py_object)]
#[derive(Clone)]
struct PyResidue {
    inner: qc::Residue,
}

impl PyResidue {
    fn same_ring(&self, other: &Self) -> PyResult<()> {
        if self.inner.modulus() != other.inner.modulus() {
            return Err(PyValueError::new_err(
                "residue arithmetic across different moduli",
            ));
        }
        Ok(())
    }
}

#[pymethods]
impl PyResidue {
    #[getter]
    fn rep(&self) -> PyK1Element {
        PyK1Element {
            inner: self.inner.rep(),
        }
    }

    #[getter]
    fn modulus(&self) -> PyModulus {
        PyModulus {
            inner: self.inner.modulus().clone(),
        }
    }

    fn to_integer(&self) -> i64 {
        self.inner.to_integer()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.inner.is_unit()
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(PyResidue {
            inner: self.inner.inverse().map_err(err)?,
        })
    }

    fn pow(&self, exp: u64) -> Self {
        PyResidue {
            inner: self.inner.pow(exp),
        }
    }

    fn order(&self) -> PyResult<u64> {
        self.inner.order().map_err(err)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.same_ring(other)?;
        Ok(PyResidue {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.same_ring(other)?;
        Ok(PyResidue {
            inner: &self.inner - &other.inner,
        })
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.same_ring(other)?;
        Ok(PyResidue {
            inner: &self.inner * &other.inner,
        })
    }

    fn __neg__(&self) -> Self {
        PyResidue {
            inner: -&self.inner,
        }
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Residue({} mod {})",
            self.inner.rep(),
            self.inner.modulus().element()
        )
    }
}

/// A cyclic code over H(K1)_m with generator x - root.
#[pyclass(name = "Code", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCode {
    inner: qc::CodeSpec,
}

#[pymethods]
impl PyCode {
    /// Length p(p-1)/2 code over H(K1) mod pi^2 (quotient x^n + 1).
    #[staticmethod]
    #[pyo3(signature = (pi, candidate=None))]
    fn build_pi2(pi: &PyK1Element, candidate: Option<&PyK1Element>) -> PyResult<Self> {
        Ok(PyCode {
            inner: qc::CodeSpec::build_pi2(pi.inner, candidate.map(|c| c.inner)).map_err(err)?,
        })
    }

    /// Length phi(p_target) code over H(K1) mod pi1*pi2 (quotient x^n - 1).
    #[staticmethod]
    fn build_crt(pi1: &PyK1Element, pi2: &PyK1Element, target: u8) -> PyResult<Self> {
        Ok(PyCode {
            inner: qc::CodeSpec::build_crt(pi1.inner, pi2.inner, target).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyCode {
            inner: qc::CodeSpec::from_json_str(text).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn ring_norm(&self) -> i64 {
        self.inner.ring().norm()
    }

    /// +1 for the x^n + 1 quotient, -1 for x^n - 1.
    #[getter]
    fn quotient_sign(&self) -> i8 {
        self.inner.quotient_sign().as_int()
    }

    #[getter]
    fn family(&self) -> &'static str {
        match self.inner.family() {
            qc::CodeFamily::PrimeSquare { .. } => "prime_square",
            qc::CodeFamily::TwoPrimes { .. } => "two_primes",
        }
    }

    #[getter]
    fn root(&self) -> PyResidue {
        PyResidue {
            inner: self.inner.root().clone(),
        }
    }

    #[getter]
    fn modulus(&self) -> PyModulus {
        PyModulus {
            inner: self.inner.ring().clone(),
        }
    }

    fn validate(&self) -> PyResult<()> {
        self.inner.validate().map_err(err)
    }

    fn generator_matrix(&self) -> Vec<Vec<PyResidue>> {
        self.inner
            .generator_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|inner| PyResidue { inner }).collect())
            .collect()
    }

    /// Parses comma-separated element text, zero-padded to length n.
    fn parse_word(&self, text: &str) -> PyResult<Vec<PyResidue>> {
        Ok(
            qc::parse_word(self.inner.ring(), text, self.inner.length())
                .map_err(err)?
                .into_iter()
                .map(|inner| PyResidue { inner })
                .collect(),
        )
    }

    fn word_text(&self, word: Vec<ElementLike>) -> PyResult<String> {
        Ok(qc::word_text(&to_word(self.inner.ring(), word)?))
    }

    /// c(x) = m(x) * g(x) for a message of n-1 coefficients.
    fn encode(&self, message: Vec<ElementLike>) -> PyResult<Vec<PyResidue>> {
        let msg = to_word(self.inner.ring(), message)?;
        Ok(self
            .inner
            .encode(&msg)
            .map_err(err)?
            .into_iter()
            .map(|inner| PyResidue { inner })
            .collect())
    }

    fn is_codeword(&self, word: Vec<ElementLike>) -> PyResult<bool> {
        let w = to_word(self.inner.ring(), word)?;
        self.inner.is_codeword(&w).map_err(err)
    }

    fn shift(&self, word: Vec<ElementLike>) -> PyResult<Vec<PyResidue>> {
        let w = to_word(self.inner.ring(), word)?;
        Ok(self
            .inner
            .shift(&w)
            .map_err(err)?
            .into_iter()
            .map(|inner| PyResidue { inner })
            .collect())
    }

    fn syndrome(&self, word: Vec<ElementLike>) -> PyResult<PyResidue> {
        let w = to_word(self.inner.ring(), word)?;
        Ok(PyResidue {
            inner: qc::syndrome(&self.inner, &w).map_err(err)?,
        })
    }

    /// Builds the syndrome lookup table; `error_set` defaults to
    /// [+1, -1], the values of quaternion Mannheim weight one.
    #[pyo3(signature = (error_set=None))]
    fn syndrome_table(&self, error_set: Option<Vec<PyK1Element>>) -> PyResult<PySyndromeTable> {
        let set: Option<Vec<qc::K1Element>> =
            error_set.map(|v| v.into_iter().map(|e| e.inner).collect());
        let table = qc::SyndromeTable::build(&self.inner, set.as_deref()).map_err(err)?;
        Ok(PySyndromeTable {
            code: self.inner.clone(),
            table,
        })
    }

    /// Discrete-log cross-check decoder (prime-square family only).
    fn dlog_decode(&self, word: Vec<ElementLike>) -> PyResult<PyDecodeResult> {
        let w = to_word(self.inner.ring(), word)?;
        Ok(PyDecodeResult {
            inner: qc::dlog_decode(&self.inner, &w).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!(
            "Code({}, n={}, N={}, root={})",
            self.family(),
            self.inner.length(),
            self.inner.ring().norm(),
            self.inner.root()
        )
    }
}

/// Injective syndrome -> (position, value) lookup for one code.
#[pyclass(name = "SyndromeTable", frozen)]
struct PySyndromeTable {
    code: qc::CodeSpec,
    table: qc::SyndromeTable,
}

#[pymethods]
impl PySyndromeTable {
    #[getter]
    fn size(&self) -> usize {
        self.table.len()
    }

    #[getter]
    fn error_set(&self) -> Vec<PyK1Element> {
        self.table
            .error_set()
            .iter()
            .map(|&inner| PyK1Element { inner })
            .collect()
    }

    fn decode(&self, word: Vec<ElementLike>) -> PyResult<PyDecodeResult> {
        let w = to_word(self.code.ring(), word)?;
        Ok(PyDecodeResult {
            inner: qc::decode(&self.code, &self.table, &w).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.table.len()
    }

    fn __repr__(&self) -> String {
        format!("SyndromeTable({} entries)", self.table.len())
    }
}

/// Outcome of a decode: status, the subtracted error, the corrected word.
#[pyclass(name = "DecodeResult", frozen)]
struct PyDecodeResult {
    inner: qc::DecodeResult,
}

#[pymethods]
impl PyDecodeResult {
    /// "clean", "corrected" or "uncorrectable".
    #[getter]
    fn status(&self) -> String {
        self.inner.status.to_string()
    }

    #[getter]
    fn error(&self) -> Option<(usize, PyK1Element)> {
        self.inner
            .error
            .map(|(pos, inner)| (pos, PyK1Element { inner }))
    }

    #[getter]
    fn corrected(&self) -> Vec<PyResidue> {
        self.inner
            .corrected
            .iter()
            .map(|r| PyResidue { inner: r.clone() })
            .collect()
    }

    fn __repr__(&self) -> String {
        match self.inner.error {
            Some((pos, value)) => format!("DecodeResult({}, {value} @ {pos})", self.inner.status),
            None => format!("DecodeResult({})", self.inner.status),
        }
    }
}

#[pymodule]
fn qmcodes(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyK1Element>()?;
    m.add_class::<PyModulus>()?;
    m.add_class::<PyResidue>()?;
    m.add_class::<PyCode>()?;
    m.add_class::<PySyndromeTable>()?;
    m.add_class::<PyDecodeResult>()?;
    m.add_function(wrap_pyfunction!(represent_prime, m)?)?;
    Ok(())
}
