//! q-cyclotomic cosets modulo n, coset-leader order statistics, minimal
//! polynomials, and the factorization of x^n - 1.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Poly;

/// Desk-scale cap on n for full coset-leader sweeps.
pub const MAX_COSET_MODULUS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub q: u64,
    pub n: u64,
    pub leader: u64,
    /// Orbit in generation order from the leader: leader, leader*q, ...
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Multiplicative order of q modulo n; requires gcd(q, n) = 1.
pub fn ord_mod(q: u64, n: u64) -> Result<u64> {
    if n == 0 || gcd(q % n.max(1), n) != 1 {
        return Err(Error::InvalidLength(format!("gcd({q}, {n}) != 1")));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut v = q % n;
    let mut ell = 1u64;
    while v != 1 {
        v = v * q % n;
        ell += 1;
    }
    Ok(ell)
}

/// The q-cyclotomic coset of a modulo n, with its leader.
pub fn cyclotomic_coset(q: u64, n: u64, a: u64) -> Result<CyclotomicCoset> {
    if n == 0 || gcd(q % n.max(1), n) != 1 {
        return Err(Error::InvalidLength(format!("gcd({q}, {n}) != 1")));
    }
    let a = a % n;
    let mut members = vec![a];
    let mut cur = a * q % n;
    while cur != a {
        members.push(cur);
        cur = cur * q % n;
    }
    let leader = *members.iter().min().unwrap();
    // rotate so the orbit is generated from the leader
    let pos = members.iter().position(|&m| m == leader).unwrap();
    members.rotate_left(pos);
    Ok(CyclotomicCoset { q, n, leader, members })
}

/// All nonzero coset leaders modulo n, ascending, with their coset sizes.
#[derive(Clone, Debug)]
pub struct CosetLeaderProfile {
    pub q: u64,
    pub n: u64,
    /// Strictly increasing nonzero leaders.
    pub leaders: Vec<u64>,
    /// sizes[i] = |coset of leaders[i]|.
    pub sizes: Vec<u64>,
}

impl CosetLeaderProfile {
    /// h-th smallest nonzero leader, 1-based.
    pub fn kth_smallest(&self, h: usize) -> Option<u64> {
        if h == 0 {
            return None;
        }
        self.leaders.get(h - 1).copied()
    }

    /// h-th largest nonzero leader, 1-based.
    pub fn kth_largest(&self, h: usize) -> Option<u64> {
        if h == 0 || h > self.leaders.len() {
            return None;
        }
        Some(self.leaders[self.leaders.len() - h])
    }
}

/// Sweep 1..n in increasing order, marking visited residues, so leaders come
/// out ascending with O(n) memory.
pub fn coset_leaders(q: u64, n: u64) -> Result<CosetLeaderProfile> {
    if n == 0 || gcd(q % n.max(1), n) != 1 {
        return Err(Error::InvalidLength(format!("gcd({q}, {n}) != 1")));
    }
    if n > MAX_COSET_MODULUS {
        return Err(Error::Resource(format!(
            "n = {n} exceeds the coset sweep cap {MAX_COSET_MODULUS}"
        )));
    }
    let mut seen = vec![false; n as usize];
    let mut leaders = Vec::new();
    let mut sizes = Vec::new();
    for a in 1..n {
        if seen[a as usize] {
            continue;
        }
        let mut size = 0u64;
        let mut cur = a;
        while !seen[cur as usize] {
            seen[cur as usize] = true;
            size += 1;
            cur = cur * q % n;
        }
        leaders.push(a);
        sizes.push(size);
    }
    Ok(CosetLeaderProfile { q, n, leaders, sizes })
}

/// The coset-leader statistic driving the rate-1/2 constructions: for prime
/// m >= 3 and n = 2^m - 1, h = (2^(m-1) - 1)/m and delta is the h-th nonzero
/// 2-cyclotomic coset leader modulo n in increasing order.
///
/// The h-th *smallest* ordering is used: it reproduces the quoted closed
/// forms (delta = 1, 5, 19 for m = 3, 5, 7) and the dimension count
/// n - h*m = 2^(m-1), while the h-th largest does not. `delta_largest` is
/// exposed alongside for comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeltaH {
    pub m: u32,
    pub h: u64,
    pub delta: u64,
    pub delta_largest: u64,
}

fn is_prime(m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= m {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn delta_h(m: u32) -> Result<DeltaH> {
    if !is_prime(m) || m < 3 {
        return Err(Error::Domain(format!("m = {m} must be a prime >= 3")));
    }
    let n = (1u64 << m) - 1;
    let h = ((1u64 << (m - 1)) - 1) / m as u64;
    let profile = coset_leaders(2, n)?;
    let delta = profile
        .kth_smallest(h as usize)
        .ok_or_else(|| Error::Internal(format!("fewer than h = {h} leaders mod {n}")))?;
    let delta_largest = profile.kth_largest(h as usize).unwrap();
    Ok(DeltaH { m, h, delta, delta_largest })
}

/// The alternating-sum lower bound on delta_h for prime m >= 11:
/// (2^m - 2)/m - 1 + 2*Lambda, where Lambda mixes binomial terms with a floor
/// term and v = floor(log2 m). Exact rational arithmetic; the sum is integral.
pub fn lambda_bound(m: u32) -> Result<(u64, u64)> {
    if !is_prime(m) || !(11..=19).contains(&m) {
        return Err(Error::Resource(format!(
            "m = {m} outside the supported prime range 11..=19"
        )));
    }
    let v = 31 - m.leading_zeros(); // floor(log2 m)
    // sum_{i=2}^{floor(m/(v+2))} (-1)^i / i * C(m - i(v+1) - 1, i - 1) * 2^(m - i(v+2))
    let upper = m / (v + 2);
    let (mut num, mut den) = (0i128, 1i128);
    for i in 2..=upper {
        let top = m as i128 - (i * (v + 1)) as i128 - 1;
        let bin = binomial_i128(top, (i - 1) as i128);
        let pow = 1i128 << (m - i * (v + 2));
        let sign = if i % 2 == 0 { 1 } else { -1 };
        // accumulate sign * bin * pow / i
        num = num * i as i128 + sign * bin * pow * den;
        den *= i as i128;
        let g = gcd_i128(num, den).max(1);
        num /= g;
        den /= g;
    }
    let floor_term = ((1i128 << (m - v - 2)) - (1i128 << v)) / ((1i128 << (v + 1)) - 1);
    let lambda_num = num + (floor_term + 1) * den;
    if lambda_num % den != 0 {
        return Err(Error::Internal("Lambda is not an integer".into()));
    }
    let lambda = (lambda_num / den) as u64;
    let bound = ((1u64 << m) - 2) / m as u64 - 1 + 2 * lambda;
    Ok((lambda, bound))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn binomial_i128(n: i128, k: i128) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc = 1i128;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The minimal polynomial of beta^i over the designated base field of `ext`:
/// the product of (x - beta^j) over the coset of i, with every coefficient
/// descended to the base field.
pub fn minimal_poly(ext: &Field, beta: u32, i: u64, base: &Field) -> Result<Poly> {
    if ext.base() != Some(base) {
        return Err(Error::FieldMismatch(format!(
            "{base:?} is not the designated base of {ext:?}"
        )));
    }
    let n = ext.elem_order(beta)?;
    let coset = cyclotomic_coset(base.order(), n, i % n)?;
    // product over the coset, computed coefficient-wise in the extension
    let mut coeffs = vec![0u32; coset.size() + 1];
    coeffs[0] = 1;
    let mut deg = 0usize;
    for &j in &coset.members {
        let root = ext.pow(beta, j as i64)?;
        // multiply (x - root) into coeffs[..=deg]
        deg += 1;
        for t in (0..deg).rev() {
            let scaled = ext.mul(coeffs[t], root);
            let higher = if t == 0 { 0 } else { coeffs[t - 1] };
            coeffs[t] = ext.add(higher, scaled);
        }
        // leading term shifts up implicitly: coeffs[deg] handled below
        coeffs[deg] = 1;
    }
    // descend coefficients to the base field
    let mut base_coeffs = Vec::with_capacity(coeffs.len());
    for &c in &coeffs {
        let b = ext.descend_to_base(c).ok_or_else(|| {
            Error::Internal(format!(
                "minimal polynomial coefficient {c} lies outside the base subfield"
            ))
        })?;
        base_coeffs.push(b);
    }
    Ok(Poly::from_coeffs(base, base_coeffs))
}

/// Factor x^n - 1 over the designated base field of `ext`, keyed by coset
/// leader. The product of all values is x^n - 1.
pub fn factor_xn_minus_1(ext: &Field, n: u64, base: &Field) -> Result<BTreeMap<u64, Poly>> {
    let beta = crate::gf::nth_root_of_unity(ext, n)?;
    let profile = coset_leaders(base.order(), n)?;
    let mut map = BTreeMap::new();
    map.insert(0u64, Poly::x_minus_one(base));
    for &leader in &profile.leaders {
        map.insert(leader, minimal_poly(ext, beta.value(), leader, base)?);
    }
    Ok(map)
}
