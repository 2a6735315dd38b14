//! Classical bounds on [n, k, d]_q linear codes and distance-optimality
//! classification. All arithmetic is over exact big integers; no verdict can
//! drift under recomputation.

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundName {
    SpherePacking,
    Fu,
    Singleton,
    Griesmer,
}

impl BoundName {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundName::SpherePacking => "sphere_packing",
            BoundName::Fu => "fu",
            BoundName::Singleton => "singleton",
            BoundName::Griesmer => "griesmer",
        }
    }
}

impl std::fmt::Display for BoundName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bound evaluated at fixed parameters: `admits` with the exact
/// (lhs, rhs) pair behind the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound: BoundName,
    pub admits: bool,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimality {
    /// (n, k, d+1, q) is rejected by the listed bounds while (n, k, d, q) is
    /// admitted by every applicable one.
    DistanceOptimal { via: Vec<BoundName> },
    /// These bounds cannot certify optimality of the parameters.
    NotDeterminedHere,
}

#[derive(Clone, Debug)]
pub struct BoundVerdict {
    pub n: u32,
    pub k: u32,
    pub d: u32,
    pub q: u64,
    pub per_bound: Vec<BoundCheck>,
    pub optimality: Optimality,
    /// Smallest d' > d rejected by some bound (always exists: Singleton
    /// rejects n - k + 2).
    pub smallest_rejected: u32,
}

impl BoundVerdict {
    pub fn is_optimal(&self) -> bool {
        matches!(self.optimality, Optimality::DistanceOptimal { .. })
    }

    pub fn verdict_str(&self) -> String {
        match &self.optimality {
            Optimality::DistanceOptimal { via } => {
                let names: Vec<&str> = via.iter().map(|b| b.as_str()).collect();
                format!("distance_optimal({})", names.join("+"))
            }
            Optimality::NotDeterminedHere => "not_determined_here".into(),
        }
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// V_(q,n)(r) = sum_{i=0..r} C(n,i) (q-1)^i, the ball volume in the Hamming
/// metric.
pub fn hamming_volume(q: u64, n: u32, r: u32) -> BigUint {
    let qm1 = BigUint::from(q - 1);
    let mut acc = BigUint::from(0u32);
    let mut pw = BigUint::from(1u32);
    for i in 0..=r.min(n) {
        acc += binomial(n as u64, i as u64) * &pw;
        pw *= &qm1;
    }
    acc
}

fn q_pow(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

/// Sphere packing: V(floor((d-1)/2)) <= q^(n-k).
pub fn sphere_packing_check(n: u32, k: u32, d: u32, q: u64) -> BoundCheck {
    let lhs = hamming_volume(q, n, (d - 1) / 2);
    let rhs = q_pow(q, n - k);
    BoundCheck { bound: BoundName::SpherePacking, admits: lhs <= rhs, lhs, rhs }
}

pub fn sphere_packing_admits(n: u32, k: u32, d: u32, q: u64) -> bool {
    sphere_packing_check(n, k, d, q).admits
}

/// The paper-quoted sufficient condition for distance optimality:
/// V(floor(d/2)) > q^(n-k), i.e. no code of the same size reaches d + 1
/// (or d + 2 for even d, which the classifier refines with the even-d bound).
pub fn sphere_packing_optimal(n: u32, k: u32, d: u32, q: u64) -> bool {
    hamming_volume(q, n, d / 2) > q_pow(q, n - k)
}

/// Even-distance bound: for even d,
/// sum_{i=0..(d-2)/2} C(n-1,i) (q-1)^i <= q^(n-1-k).
pub fn fu_bound_check(n: u32, k: u32, d: u32, q: u64) -> Result<BoundCheck> {
    if d % 2 != 0 || d == 0 {
        return Err(Error::NotApplicable(format!(
            "the even-distance bound needs even d, got {d}"
        )));
    }
    let lhs = hamming_volume(q, n - 1, (d - 2) / 2);
    let rhs = q_pow(q, n - 1 - k);
    Ok(BoundCheck { bound: BoundName::Fu, admits: lhs <= rhs, lhs, rhs })
}

pub fn fu_bound_admits(n: u32, k: u32, d: u32, q: u64) -> Result<bool> {
    Ok(fu_bound_check(n, k, d, q)?.admits)
}

/// Singleton: d <= n - k + 1.
pub fn singleton_check(n: u32, k: u32, d: u32) -> BoundCheck {
    BoundCheck {
        bound: BoundName::Singleton,
        admits: d <= n - k + 1,
        lhs: BigUint::from(d),
        rhs: BigUint::from(n - k + 1),
    }
}

pub fn singleton_admits(n: u32, k: u32, d: u32) -> bool {
    singleton_check(n, k, d).admits
}

/// Griesmer: sum_{i=0..k-1} ceil(d / q^i) <= n.
pub fn griesmer_check(n: u32, k: u32, d: u32, q: u64) -> BoundCheck {
    let mut lhs = BigUint::from(0u32);
    let d_big = BigUint::from(d);
    for i in 0..k {
        let qi = q_pow(q, i);
        // ceil(d / q^i)
        let term = (&d_big + &qi - BigUint::from(1u32)) / &qi;
        if term <= BigUint::from(1u32) {
            // all remaining terms are 1
            lhs += BigUint::from((k - i) as u64);
            break;
        }
        lhs += term;
    }
    BoundCheck { bound: BoundName::Griesmer, admits: lhs <= BigUint::from(n), lhs, rhs: BigUint::from(n) }
}

pub fn griesmer_admits(n: u32, k: u32, d: u32, q: u64) -> bool {
    griesmer_check(n, k, d, q).admits
}

/// All applicable bounds at (n, k, d', q); the even-distance bound joins in
/// only when d' is even.
fn checks_at(n: u32, k: u32, d: u32, q: u64) -> Vec<BoundCheck> {
    let mut v = vec![
        sphere_packing_check(n, k, d, q),
        singleton_check(n, k, d),
        griesmer_check(n, k, d, q),
    ];
    if d % 2 == 0 {
        v.push(fu_bound_check(n, k, d, q).expect("even d"));
    }
    v.sort_by_key(|c| c.bound);
    v
}

/// Classify (n, k, d, q): distance-optimal iff every applicable bound admits
/// the parameters and at least one bound rejects (n, k, d+1, q). For linear
/// codes rejecting d+1 rules out every d' > d.
pub fn classify(n: u32, k: u32, d: u32, q: u64) -> BoundVerdict {
    assert!(k >= 1 && k <= n && d >= 1 && d <= n, "parameter ranges");
    let per_bound = checks_at(n, k, d, q);
    let admitted = per_bound.iter().all(|c| c.admits);

    let mut smallest_rejected = n - k + 2; // Singleton rejects here at the latest
    let mut via: Vec<BoundName> = Vec::new();
    for dp in d + 1..=n - k + 1 {
        let rejecting: Vec<BoundName> = checks_at(n, k, dp, q)
            .into_iter()
            .filter(|c| !c.admits)
            .map(|c| c.bound)
            .collect();
        if !rejecting.is_empty() {
            smallest_rejected = dp;
            via = rejecting;
            break;
        }
    }
    if via.is_empty() {
        via.push(BoundName::Singleton);
    }
    let optimality = if admitted && smallest_rejected == d + 1 {
        Optimality::DistanceOptimal { via }
    } else {
        Optimality::NotDeterminedHere
    };
    BoundVerdict { n, k, d, q, per_bound, optimality, smallest_rejected }
}
