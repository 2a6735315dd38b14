//! Finite fields of characteristic 2.
//!
//! Base fields GF(2^s) come from a fixed table of primitive polynomials, so
//! construction is deterministic across runs and platforms. Extension fields
//! GF((2^s)^m) are built over GF(2) internally; the base field is a subfield
//! designation used when descending coefficients (e.g. of minimal polynomials)
//! back to GF(q).
//!
//! Elements are canonical indices in `[0, order)`: the bits of an index are the
//! polynomial-basis coordinates over GF(2), so addition is XOR and every field
//! shares the same zero/one encoding (0 and 1). Multiplication goes through
//! per-field log/antilog tables built once at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported extension degree over GF(2). The log/antilog tables are
/// dense, so this caps memory at a few MB per field; nothing in the toolkit
/// needs fields beyond GF(2^13).
pub const MAX_FIELD_DEGREE: u32 = 20;

/// Lexicographically least (smallest integer encoding, bit i = coefficient of
/// x^i) primitive polynomial over GF(2) for each degree 1..=20.
pub const PRIMITIVE_POLYS: [u32; 20] = [
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xb,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11d,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201b,   // x^13 + x^4 + x^3 + x + 1
    0x402b,   // x^14 + x^5 + x^3 + x + 1
    0x8003,   // x^15 + x + 1
    0x1002d,  // x^16 + x^5 + x^3 + x^2 + 1
    0x20009,  // x^17 + x^3 + 1
    0x40027,  // x^18 + x^5 + x^2 + x + 1
    0x80027,  // x^19 + x^5 + x^2 + x + 1
    0x100009, // x^20 + x^3 + 1
];

struct FieldRepr {
    /// Extension degree over GF(2).
    degree: u32,
    /// 2^degree.
    order: u64,
    /// Order q of the designated base field (== `order` for base fields).
    base_order: u64,
    /// Defining primitive polynomial over GF(2), bit i = coefficient of x^i.
    primitive_poly: u32,
    /// log[v] = discrete log of element index v (v != 0) base alpha.
    log: Vec<u32>,
    /// exp[l] = element index of alpha^l, doubled so products need no modulo.
    exp: Vec<u32>,
    /// Designated base field, for extension fields built by [`ext_field`].
    base: Option<Field>,
    /// embed[v] = image in this field of base-field element v.
    embed: Vec<u32>,
}

/// A finite field GF(2^k), cheaply cloneable.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
            && self.0.primitive_poly == other.0.primitive_poly
            && self.0.base_order == other.0.base_order
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.base_order == self.0.order {
            write!(f, "GF({})", self.0.order)
        } else {
            write!(f, "GF({}^{})", self.0.base_order, self.ext_degree())
        }
    }
}

fn build_tables(degree: u32, poly: u32) -> Result<(Vec<u32>, Vec<u32>)> {
    let order: u64 = 1 << degree;
    let period = (order - 1) as usize;
    let mut log = vec![0u32; order as usize];
    let mut exp = vec![0u32; 2 * period.max(1)];
    // alpha is the class of x, except in GF(2) where the group is trivial.
    let mut v: u64 = 1;
    for l in 0..period {
        if l > 0 && v == 1 {
            return Err(Error::Internal(format!(
                "polynomial {poly:#x} is not primitive of degree {degree}"
            )));
        }
        exp[l] = v as u32;
        exp[l + period] = v as u32;
        log[v as usize] = l as u32;
        v <<= 1;
        if v >> degree & 1 == 1 {
            v ^= poly as u64;
        }
    }
    if v != 1 {
        return Err(Error::Internal(format!(
            "polynomial {poly:#x} has non-full period at degree {degree}"
        )));
    }
    Ok((log, exp))
}

/// Build the base field GF(2^s) from the fixed primitive-polynomial table.
pub fn field_create(s: u32) -> Result<Field> {
    if s < 1 || s > 16 {
        return Err(Error::UnsupportedField(format!(
            "GF(2^{s}): s must be in 1..=16"
        )));
    }
    let poly = PRIMITIVE_POLYS[(s - 1) as usize];
    let (log, exp) = build_tables(s, poly)?;
    let order = 1u64 << s;
    Ok(Field(Arc::new(FieldRepr {
        degree: s,
        order,
        base_order: order,
        primitive_poly: poly,
        log,
        exp,
        base: None,
        embed: Vec::new(),
    })))
}

/// Build GF(q^m) over the base field GF(q), with the canonical subfield
/// embedding. The image of the base field's primitive element is a root of the
/// base field's defining polynomial inside GF(q^m) (the one of smallest
/// discrete log), which makes the embedding a field homomorphism.
pub fn ext_field(base: &Field, m: u32) -> Result<Field> {
    if m < 1 {
        return Err(Error::UnsupportedField("extension degree m must be >= 1".into()));
    }
    let degree = base.0.degree * m;
    if degree > MAX_FIELD_DEGREE {
        return Err(Error::UnsupportedField(format!(
            "GF(2^{degree}) exceeds the supported degree cap of {MAX_FIELD_DEGREE}"
        )));
    }
    let poly = PRIMITIVE_POLYS[(degree - 1) as usize];
    let (log, exp) = build_tables(degree, poly)?;
    let order = 1u64 << degree;
    let mut repr = FieldRepr {
        degree,
        order,
        base_order: base.0.order,
        primitive_poly: poly,
        log,
        exp,
        base: Some(base.clone()),
        embed: Vec::new(),
    };
    repr.embed = build_embedding(&repr, base)?;
    Ok(Field(Arc::new(repr)))
}

/// Find the embedding table base-index -> extension-index.
fn build_embedding(ext: &FieldRepr, base: &Field) -> Result<Vec<u32>> {
    let q = base.0.order;
    let period = ext.order - 1;
    let image_log: u64 = if base.0.degree == 1 {
        0 // GF(2): 1 maps to 1
    } else {
        let e = period / (q - 1);
        // Roots of the base defining polynomial inside GF(q^m) all lie in the
        // subfield of order q; pick the one with smallest log, deterministically.
        let mut found = None;
        for t in 1..q - 1 {
            let l = e * t;
            // evaluate base.primitive_poly (coefficients in GF(2)) at alpha^l
            let mut acc: u32 = 0;
            for i in 0..=base.0.degree {
                if base.0.primitive_poly >> i & 1 == 1 {
                    acc ^= ext.exp[((l * i as u64) % period) as usize];
                }
            }
            if acc == 0 {
                found = Some(l);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::Internal("no root of the base defining polynomial in the extension".into())
        })?
    };
    // embed(v) for v = sum of bits b_i x^i over GF(2): sum of image^i over set bits
    let mut table = vec![0u32; q as usize];
    for v in 0..q {
        let mut acc: u32 = 0;
        for i in 0..base.0.degree {
            if v >> i & 1 == 1 {
                acc ^= ext.exp[((image_log * i as u64) % period) as usize];
            }
        }
        table[v as usize] = acc;
    }
    Ok(table)
}

impl Field {
    /// Field order 2^degree.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Extension degree over GF(2).
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Order q of the designated base field.
    pub fn base_order(&self) -> u64 {
        self.0.base_order
    }

    /// Extension degree m over the designated base field.
    pub fn ext_degree(&self) -> u32 {
        self.0.degree / self.base().map_or(self.0.degree, |b| b.0.degree)
    }

    /// Defining primitive polynomial over GF(2).
    pub fn primitive_poly(&self) -> u32 {
        self.0.primitive_poly
    }

    /// The designated base field, if this field was built by [`ext_field`].
    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    /// Index of the fixed primitive element alpha.
    pub fn alpha(&self) -> u32 {
        if self.0.degree == 1 {
            1
        } else {
            2
        }
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.0.order && (b as u64) < self.0.order);
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &self.0;
        r.exp[(r.log[a as usize] + r.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::Domain("inversion of zero".into()));
        }
        let r = &self.0;
        let period = (r.order - 1) as u32;
        Ok(r.exp[((period - r.log[a as usize]) % period) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with exponent reduction mod (order - 1) for nonzero bases.
    pub fn pow(&self, a: u32, e: i64) -> Result<u32> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::Domain("negative power of zero".into())),
            };
        }
        let period = (self.0.order - 1) as i64;
        let l = self.0.log[a as usize] as i64;
        let ep = (e % period + period) % period;
        Ok(self.0.exp[((l * ep) % period) as usize])
    }

    /// Discrete log base alpha; error on zero.
    pub fn dlog(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::Domain("discrete log of zero".into()));
        }
        Ok(self.0.log[a as usize] as u64)
    }

    /// alpha^l.
    pub fn from_log(&self, l: u64) -> u32 {
        let period = self.0.order - 1;
        self.0.exp[(l % period) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, a: u32) -> Result<u64> {
        let period = self.0.order - 1;
        let l = self.dlog(a)?;
        Ok(period / gcd_u64(period, l))
    }

    /// Image of a base-field element under the canonical embedding.
    pub fn embed_from_base(&self, v: u32) -> Result<u32> {
        if self.0.base.is_none() {
            return Err(Error::FieldMismatch(
                "field has no designated base to embed from".into(),
            ));
        }
        if (v as u64) >= self.0.base_order {
            return Err(Error::Domain(format!("element {v} outside base field")));
        }
        Ok(self.0.embed[v as usize])
    }

    /// Express an element as a base-field element if it lies in the designated
    /// subfield; `None` otherwise.
    pub fn descend_to_base(&self, v: u32) -> Option<u32> {
        let base = self.0.base.as_ref()?;
        if v == 0 {
            return Some(0);
        }
        if v == 1 {
            return Some(1);
        }
        let q = base.0.order;
        let e = (self.0.order - 1) / (q - 1);
        let l = self.0.log[v as usize] as u64;
        if l % e != 0 {
            return None;
        }
        // v = image^t where image = embed(alpha_base)
        let image = self.0.embed[base.alpha() as usize];
        let image_log = self.0.log[image as usize] as u64;
        let period = self.0.order - 1;
        // solve image_log * t = l (mod period); both are multiples of e
        let lq = l / e;
        let gq = image_log / e; // coprime to q-1 since image generates the subfield
        let t = (lq * mod_inverse(gq, q - 1)) % (q - 1);
        debug_assert_eq!(self.from_log(image_log * t % period), v);
        Some(base.from_log(t))
    }

    /// True when the element lies in the designated subfield.
    pub fn in_base(&self, v: u32) -> bool {
        self.descend_to_base(v).is_some()
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) must be 1
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    (((old_s % m as i128) + m as i128) % m as i128) as u64
}

/// A field element paired with its field, for the typed public surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElem {
    field: Field,
    value: u32,
}

impl FieldElem {
    pub fn new(field: &Field, value: u32) -> Result<Self> {
        if (value as u64) >= field.order() {
            return Err(Error::Domain(format!(
                "index {value} outside field of order {}",
                field.order()
            )));
        }
        Ok(Self { field: field.clone(), value })
    }

    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), value: 0 }
    }

    pub fn one(field: &Field) -> Self {
        Self { field: field.clone(), value: 1 }
    }

    pub fn alpha(field: &Field) -> Self {
        Self { field: field.clone(), value: field.alpha() }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
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
        Ok(Self { field: self.field.clone(), value: self.field.add(self.value, rhs.value) })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same(rhs)?;
        Ok(Self { field: self.field.clone(), value: self.field.mul(self.value, rhs.value) })
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self { field: self.field.clone(), value: self.field.inv(self.value)? })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Ok(Self { field: self.field.clone(), value: self.field.pow(self.value, e)? })
    }

    /// Multiplicative order; error on zero.
    pub fn order(&self) -> Result<u64> {
        self.field.elem_order(self.value)
    }
}

/// The n-th root of unity beta = alpha^((q^m - 1)/n); n must divide q^m - 1.
pub fn nth_root_of_unity(field: &Field, n: u64) -> Result<FieldElem> {
    let period = field.order() - 1;
    if n == 0 || period % n != 0 {
        return Err(Error::InvalidLength(format!(
            "n = {n} does not divide {} - 1",
            field.order()
        )));
    }
    let beta = field.from_log(period / n);
    Ok(FieldElem { field: field.clone(), value: beta })
}
