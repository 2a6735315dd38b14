//! Cyclic codes over GF(q): construction from a generator polynomial or as a
//! BCH code, generator/parity-check matrices, and encoding.
//!
//! Repeated-root lengths are first-class: N may share a factor with q (over
//! characteristic 2, N = 2n with n odd gives x^N - 1 = (x^n - 1)^2), in which
//! case there is no defining set and divisibility of the generator is checked
//! directly against x^N - 1.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyclo::{cyclotomic_coset, minimal_poly, ord_mod};
use crate::error::{Error, Result};
use crate::gf::{ext_field, nth_root_of_unity, Field, MAX_FIELD_DEGREE};
use crate::poly::Poly;

/// BCH designed-distance metadata retained on codes built by [`bch_code`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BchParams {
    pub delta: u64,
    pub b: u64,
}

#[derive(Clone, Debug)]
pub struct CyclicCode {
    field: Field,
    length: usize,
    generator: Poly,
    check: Poly,
    dimension: usize,
    simple_root: bool,
    defining_set: Option<BTreeSet<u64>>,
    bch: Option<BchParams>,
}

/// Dense row-major matrix of canonical field-element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zero(field: &Field, rows: usize, cols: usize) -> Self {
        Self { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Rank by Gaussian elimination (on a copy).
    pub fn rank(&self) -> usize {
        let f = self.field.clone();
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| m[r * cols + col] != 0);
            let Some(p) = pivot else { continue };
            m.swap_unchecked_rows(p, rank, cols);
            let inv = f.inv(m[rank * cols + col]).unwrap();
            for c in col..cols {
                m[rank * cols + c] = f.mul(m[rank * cols + c], inv);
            }
            for r in 0..rows {
                if r != rank && m[r * cols + col] != 0 {
                    let factor = m[r * cols + col];
                    for c in col..cols {
                        let sub = f.mul(factor, m[rank * cols + c]);
                        m[r * cols + c] = f.add(m[r * cols + c], sub);
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Matrix-vector product M * v.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u32;
                for (c, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = f.add(acc, f.mul(self.get(r, c), x));
                    }
                }
                acc
            })
            .collect()
    }
}

trait SwapRows {
    fn swap_unchecked_rows(&mut self, a: usize, b: usize, cols: usize);
}

impl SwapRows for Vec<u32> {
    fn swap_unchecked_rows(&mut self, a: usize, b: usize, cols: usize) {
        if a == b {
            return;
        }
        for c in 0..cols {
            self.swap(a * cols + c, b * cols + c);
        }
    }
}

/// Build a cyclic code of length N from a monic generator dividing x^N - 1.
pub fn cyclic_from_generator(field: &Field, length: usize, generator: Poly) -> Result<CyclicCode> {
    if generator.field() != field {
        return Err(Error::FieldMismatch("generator is over a different field".into()));
    }
    if generator.is_zero() || !generator.is_monic() {
        return Err(Error::InvalidGenerator("generator must be monic and nonzero".into()));
    }
    let modulus = Poly::x_pow_n_minus_one(field, length);
    let (check, rem) = modulus.divmod(&generator)?;
    if !rem.is_zero() {
        return Err(Error::InvalidGenerator(format!(
            "generator {} does not divide x^{length} - 1",
            generator.to_index_list()
        )));
    }
    let dimension = length - generator.degree().unwrap();
    let simple_root = modulus.is_squarefree()? && generator.is_squarefree()?;
    let defining_set = if simple_root {
        compute_defining_set(field, length as u64, &generator)
    } else {
        None
    };
    Ok(CyclicCode {
        field: field.clone(),
        length,
        generator,
        check,
        dimension,
        simple_root,
        defining_set,
        bch: None,
    })
}

/// For a simple-root code, T = { i : g(beta^i) = 0 }, computed when the
/// splitting field fits the supported degree cap.
fn compute_defining_set(field: &Field, n: u64, g: &Poly) -> Option<BTreeSet<u64>> {
    let m = ord_mod(field.order(), n).ok()?;
    let degree = field.degree() * m as u32;
    if degree > MAX_FIELD_DEGREE {
        return None;
    }
    let ext = ext_field(field, m as u32).ok()?;
    let beta = nth_root_of_unity(&ext, n).ok()?.value();
    let mut set = BTreeSet::new();
    for i in 0..n {
        let point = ext.pow(beta, i as i64).ok()?;
        if g.eval_embedded(&ext, point).ok()? == 0 {
            set.insert(i);
        }
    }
    Some(set)
}

/// The BCH code C_(q,n,delta,b): generator lcm{ m_(beta^b), ..., m_(beta^(b+delta-2)) }.
///
/// delta = 1 yields the full [n, n] code with generator 1 (empty lcm), which
/// the rate-1/2 families use when the designed distance degenerates.
pub fn bch_code(field: &Field, n: u64, delta: u64, b: u64) -> Result<CyclicCode> {
    if n == 0 {
        return Err(Error::InvalidLength("n must be positive".into()));
    }
    let m = ord_mod(field.order(), n)? as u32;
    if field.degree() * m > MAX_FIELD_DEGREE {
        return Err(Error::UnsupportedField(format!(
            "splitting field GF({}^{m}) exceeds the supported degree cap",
            field.order()
        )));
    }
    let ext = ext_field(field, m)?;
    let beta = nth_root_of_unity(&ext, n)?.value();
    let mut generator = Poly::one(field);
    let mut defining = BTreeSet::new();
    for offset in 0..delta.saturating_sub(1) {
        let i = (b + offset) % n;
        if defining.contains(&i) {
            continue; // exponent already covered by an earlier coset
        }
        let coset = cyclotomic_coset(field.order(), n, i)?;
        generator = generator.lcm(&minimal_poly(&ext, beta, i, field)?)?;
        defining.extend(coset.members);
    }
    let mut code = cyclic_from_generator(field, n as usize, generator)?;
    code.defining_set = Some(defining);
    code.bch = Some(BchParams { delta, b: b % n });
    Ok(code)
}

impl CyclicCode {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn check_poly(&self) -> &Poly {
        &self.check
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_simple_root(&self) -> bool {
        self.simple_root
    }

    pub fn defining_set(&self) -> Option<&BTreeSet<u64>> {
        self.defining_set.as_ref()
    }

    pub fn bch_params(&self) -> Option<BchParams> {
        self.bch
    }

    /// k rows of shifted generator coefficients; empty matrix when k = 0.
    pub fn generator_matrix(&self) -> Matrix {
        let k = self.dimension;
        let mut m = Matrix::zero(&self.field, k, self.length);
        for i in 0..k {
            for (j, &c) in self.generator.coeffs().iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        m
    }

    /// (N - k) rows built from the reciprocal of the check polynomial; the
    /// product with any codeword is zero. Empty matrix when k = N.
    pub fn parity_check_matrix(&self) -> Matrix {
        let k = self.dimension;
        let r = self.length - k;
        let mut m = Matrix::zero(&self.field, r, self.length);
        // row j holds h_(k + j - i) at column i: the reversed check polynomial
        // sliding across the word
        for j in 0..r {
            for i in 0..self.length {
                let idx = (k + j).wrapping_sub(i);
                if idx <= k {
                    m.set(j, i, self.check.coeff(idx));
                }
            }
        }
        m
    }

    /// Codeword = message polynomial times the generator.
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        if message.len() != self.dimension {
            return Err(Error::Domain(format!(
                "message length {} != dimension {}",
                message.len(),
                self.dimension
            )));
        }
        let msg = Poly::from_coeffs(&self.field, message.to_vec());
        let cw = msg.mul(&self.generator)?;
        let mut out = cw.coeffs().to_vec();
        out.resize(self.length, 0);
        Ok(out)
    }

    /// Membership test: the word polynomial reduces to zero mod the generator.
    pub fn contains(&self, word: &[u32]) -> Result<bool> {
        if word.len() != self.length {
            return Ok(false);
        }
        let w = Poly::from_coeffs(&self.field, word.to_vec());
        if w.is_zero() {
            return Ok(true);
        }
        w.divisible_by(&self.generator)
    }

    /// Cyclic shift of a word by one position.
    pub fn shift(&self, word: &[u32]) -> Vec<u32> {
        let n = self.length;
        let mut out = vec![0u32; n];
        for (i, &c) in word.iter().enumerate() {
            out[(i + 1) % n] = c;
        }
        out
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            q: self.q(),
            n: self.length,
            generator: self.generator.coeffs().to_vec(),
            k: self.dimension,
            family: None,
        }
    }
}

/// JSON wire form: {q, N, generator (ascending index list), k, family?}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeJson {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: usize,
    pub generator: Vec<u32>,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl CodeJson {
    pub fn into_code(self) -> Result<CyclicCode> {
        let s = self.q.trailing_zeros();
        if self.q == 0 || self.q != 1 << s {
            return Err(Error::UnsupportedField(format!("q = {} is not a power of 2", self.q)));
        }
        let field = crate::gf::field_create(s)?;
        let g = Poly::from_coeffs(&field, self.generator);
        let code = cyclic_from_generator(&field, self.n, g)?;
        if code.dimension() != self.k {
            return Err(Error::InvalidGenerator(format!(
                "declared k = {} but generator implies k = {}",
                self.k,
                code.dimension()
            )));
        }
        Ok(code)
    }
}
