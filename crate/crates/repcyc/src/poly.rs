//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored ascending by degree (index = exponent), as canonical
//! field-element indices, normalized so the highest-index coefficient is
//! nonzero. The zero polynomial is the empty coefficient vector and its degree
//! is `None`. All gcd/lcm results are monic.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({:?}, {})", self.field, self.to_index_list())
    }
}

impl Poly {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: vec![1] }
    }

    /// c * x^deg.
    pub fn monomial(field: &Field, c: u32, deg: usize) -> Self {
        if c == 0 {
            return Self::zero(field);
        }
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self { field: field.clone(), coeffs }
    }

    /// x - 1 (== x + 1 in characteristic 2).
    pub fn x_minus_one(field: &Field) -> Self {
        Self { field: field.clone(), coeffs: vec![1, 1] }
    }

    /// x^n - 1.
    pub fn x_pow_n_minus_one(field: &Field, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 1;
        coeffs[n] = 1;
        Self { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_same(&self, rhs: &Self) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(format!(
                "{:?} vs {:?}",
                self.field, rhs.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0u32; n];
        for i in 0..n {
            out[i] = self.field.add(self.coeff(i), rhs.coeff(i));
        }
        Ok(Self::from_coeffs(&self.field, out))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = self.field.add(out[i + j], self.field.mul(a, b));
                }
            }
        }
        Ok(Self::from_coeffs(&self.field, out))
    }

    pub fn mul_scalar(&self, c: u32) -> Self {
        if c == 0 {
            return Self::zero(&self.field);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        Self { field: self.field.clone(), coeffs }
    }

    /// Exact (quotient, remainder) with deg(remainder) < deg(divisor).
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = self.field.inv(divisor.leading_coeff())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = self.field.mul(c, lead_inv);
            quot[i - dd] = q;
            for (j, &dcoef) in divisor.coeffs.iter().enumerate() {
                if dcoef != 0 {
                    let idx = i - dd + j;
                    rem[idx] = self.field.add(rem[idx], self.field.mul(q, dcoef));
                }
            }
            debug_assert_eq!(rem[i], 0);
        }
        Ok((
            Self::from_coeffs(&self.field, quot),
            Self::from_coeffs(&self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// True when `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading_coeff();
        if lead == 0 || lead == 1 {
            return self.clone();
        }
        self.mul_scalar(self.field.inv(lead).expect("nonzero leading coefficient"))
    }

    /// Monic gcd; gcd(f, 0) = monic(f); gcd(0, 0) is a domain error.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::Domain("gcd(0, 0)".into()));
        }
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm = f * g / gcd(f, g).
    pub fn lcm(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let g = self.gcd(rhs)?;
        let (q, r) = self.mul(rhs)?.divmod(&g)?;
        debug_assert!(r.is_zero());
        Ok(q.monic())
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, a: u32) -> u32 {
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, a), c);
        }
        acc
    }

    /// Evaluate at a point of an extension field, mapping the coefficients
    /// through the canonical embedding. `ext` must designate `self.field` as
    /// its base.
    pub fn eval_embedded(&self, ext: &Field, a: u32) -> Result<u32> {
        if ext.base() != Some(&self.field) {
            return Err(Error::FieldMismatch(format!(
                "{:?} is not an extension of {:?}",
                ext, self.field
            )));
        }
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = ext.add(ext.mul(acc, a), ext.embed_from_base(c)?);
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(&self.field);
        }
        let mut out = vec![0u32; self.coeffs.len() - 1];
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            // i * c in characteristic 2: c when i is odd, 0 when even
            if i % 2 == 1 {
                out[i - 1] = c;
            }
        }
        Self::from_coeffs(&self.field, out)
    }

    /// True iff gcd(f, f') = 1, i.e. f has no repeated roots in any extension.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("squarefreeness of the zero polynomial".into()));
        }
        let d = self.derivative();
        if d.is_zero() {
            // f is a polynomial in x^2, i.e. a square in characteristic 2
            return Ok(self.degree() == Some(0));
        }
        Ok(self.gcd(&d)?.is_one())
    }

    /// Small non-negative power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut out = Self::one(&self.field);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Textual coefficient list, ascending degree: "[1,1,0,1]" for x^3+x+1.
    pub fn to_index_list(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    /// Parse the ascending coefficient-list form produced by
    /// [`Poly::to_index_list`].
    pub fn parse_index_list(field: &Field, s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Domain(format!("malformed polynomial literal: {s}")))?;
        let mut coeffs = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let v: u32 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Domain(format!("bad coefficient {tok:?} in {s}")))?;
                if (v as u64) >= field.order() {
                    return Err(Error::Domain(format!(
                        "coefficient {v} outside field of order {}",
                        field.order()
                    )));
                }
                coeffs.push(v);
            }
        }
        Ok(Self::from_coeffs(field, coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_index_list())
    }
}
