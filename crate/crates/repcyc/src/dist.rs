//! Minimum-distance engines.
//!
//! Two independent routes are provided and cross-checked in tests:
//! exhaustive codeword enumeration over the generator matrix, and a low-weight
//! search that looks for linearly dependent parity-check columns in increasing
//! weight. Both are deterministic: the exhaustive engine reports the first
//! minimal-weight codeword in message-lexicographic order, the column search
//! the first dependent support in colexicographic order (with the coefficient
//! solution scaled monic at the lowest support index).
//!
//! Budgets count subset visits, not time, so behavior is reproducible across
//! machines.

use std::collections::HashMap;

use crate::code::{CyclicCode, Matrix};
use crate::error::{Error, Result};

/// Outcome of a distance computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceResult {
    /// The minimum distance is exactly `d`; `witness` is a codeword of that
    /// weight when one was materialized.
    Exact { d: u32, witness: Option<Vec<u32>> },
    /// No nonzero codeword of weight < `low` exists.
    LowerBound { low: u32 },
    /// The minimum distance lies in `low..=high`; `witness` attains `high`.
    Interval { low: u32, high: u32, witness: Option<Vec<u32>> },
    /// The code has no nonzero codeword at all (dimension zero).
    NoNonzeroWords,
}

impl DistanceResult {
    pub fn exact(d: u32) -> Self {
        DistanceResult::Exact { d, witness: None }
    }

    /// Best proven lower bound on the distance.
    pub fn low(&self) -> u32 {
        match self {
            DistanceResult::Exact { d, .. } => *d,
            DistanceResult::LowerBound { low } => *low,
            DistanceResult::Interval { low, .. } => *low,
            DistanceResult::NoNonzeroWords => u32::MAX,
        }
    }

    /// Best proven upper bound, when one exists.
    pub fn high(&self) -> Option<u32> {
        match self {
            DistanceResult::Exact { d, .. } => Some(*d),
            DistanceResult::LowerBound { .. } => None,
            DistanceResult::Interval { high, .. } => Some(*high),
            DistanceResult::NoNonzeroWords => None,
        }
    }

    pub fn exact_value(&self) -> Option<u32> {
        match self {
            DistanceResult::Exact { d, .. } => Some(*d),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[u32]> {
        match self {
            DistanceResult::Exact { witness, .. } | DistanceResult::Interval { witness, .. } => {
                witness.as_deref()
            }
            _ => None,
        }
    }

    pub fn status_str(&self) -> &'static str {
        match self {
            DistanceResult::Exact { .. } => "exact",
            DistanceResult::LowerBound { .. } => "lower_bound",
            DistanceResult::Interval { .. } => "interval",
            DistanceResult::NoNonzeroWords => "no_nonzero_words",
        }
    }

    pub fn value_str(&self) -> String {
        match self {
            DistanceResult::Exact { d, .. } => d.to_string(),
            DistanceResult::LowerBound { low } => format!(">={low}"),
            DistanceResult::Interval { low, high, .. } => format!("{low}..{high}"),
            DistanceResult::NoNonzeroWords => "-".into(),
        }
    }
}

/// Subset-visit budget for the column-dependency search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_visits: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_visits: 10_000_000_000 }
    }
}

const EXHAUSTIVE_LOG2_CAP: u32 = 24;
const WEIGHT_DIST_LOG2_CAP: u32 = 22;

fn log2_size(q: u64, k: usize) -> u32 {
    (q.trailing_zeros() as usize * k) as u32
}

/// Exact minimum weight by enumerating all q^k codewords. The witness is the
/// first minimal-weight codeword in message-lexicographic order.
pub fn min_distance_exhaustive(c: &CyclicCode) -> Result<DistanceResult> {
    if c.dimension() == 0 {
        return Ok(DistanceResult::NoNonzeroWords);
    }
    if log2_size(c.q(), c.dimension()) > EXHAUSTIVE_LOG2_CAP {
        return Err(Error::Resource(format!(
            "q^k = {}^{} exceeds the exhaustive enumeration cap",
            c.q(),
            c.dimension()
        )));
    }
    let g = c.generator_matrix();
    let (d, msg) = min_weight_rows(&g)
        .ok_or_else(|| Error::Internal("nonzero code with no nonzero codeword".into()))?;
    let witness = c.encode(&msg)?;
    Ok(DistanceResult::Exact { d, witness: Some(witness) })
}

/// A_w counts for w = 0..=N by exhaustive enumeration.
pub fn weight_distribution(c: &CyclicCode) -> Result<Vec<u64>> {
    if log2_size(c.q(), c.dimension()) > WEIGHT_DIST_LOG2_CAP {
        return Err(Error::Resource(format!(
            "q^k = {}^{} exceeds the weight distribution cap",
            c.q(),
            c.dimension()
        )));
    }
    Ok(weight_distribution_rows(&c.generator_matrix(), c.length()))
}

/// BCH bound: 1 + the longest circular run of consecutive residues in the
/// defining set. Only defined for simple-root codes.
pub fn bch_lower_bound(c: &CyclicCode) -> Result<u32> {
    if !c.is_simple_root() {
        return Err(Error::NotApplicable(
            "BCH bound requires a simple-root cyclic code".into(),
        ));
    }
    let ds = c.defining_set().ok_or_else(|| {
        Error::NotApplicable("defining set unavailable (splitting field too large)".into())
    })?;
    let n = c.length();
    if ds.len() == n {
        return Ok(n as u32 + 1); // zero code, vacuous
    }
    let member = |i: usize| ds.contains(&((i % n) as u64));
    let mut best = 0usize;
    let mut run = 0usize;
    for i in 0..2 * n {
        if member(i) {
            run += 1;
            best = best.max(run.min(n));
        } else {
            run = 0;
        }
    }
    Ok(best as u32 + 1)
}

/// Searches weights w = 1..=wmax for linearly dependent parity-check columns.
/// Returns `Exact(d)` with a canonical witness when a dependency of weight
/// d <= wmax exists, otherwise `LowerBound(wmax + 1)`.
pub fn min_weight_upto(c: &CyclicCode, wmax: u32, budget: &Budget) -> Result<DistanceResult> {
    let n = c.length();
    let wmax = wmax.min(n as u32);
    if wmax == 0 {
        return Err(Error::Domain("wmax must be >= 1".into()));
    }
    if c.dimension() == n {
        // full space: every single column of the (empty) parity matrix is zero
        let mut w = vec![0u32; n];
        w[0] = 1;
        return Ok(DistanceResult::Exact { d: 1, witness: Some(w) });
    }
    let h = c.parity_check_matrix();
    let mut ctx = SearchCtx { visits: 0, max_visits: budget.max_visits };
    let field = c.field().clone();

    let outcome = if field.order() == 2 && h.rows() <= 64 {
        let cols: Vec<u64> = (0..n)
            .map(|j| {
                let mut v = 0u64;
                for r in 0..h.rows() {
                    v |= (h.get(r, j) as u64) << r;
                }
                v
            })
            .collect();
        search_gf2(&cols, wmax, &mut ctx)
    } else if field.order() == 4 && h.rows() <= 64 {
        let cols = plane_cols::<2>(&h);
        search_planes::<2>(&cols, wmax, &mut ctx, gf4_scalar_mul, &GF4_INV)
    } else if field.order() == 8 && h.rows() <= 64 {
        let cols = plane_cols::<3>(&h);
        search_planes::<3>(&cols, wmax, &mut ctx, gf8_scalar_mul, &GF8_INV)
    } else {
        search_generic(&h, wmax, &mut ctx)
    };

    match outcome {
        LevelOutcome::Found { weight, support } => {
            let coeffs = solve_dependency(&h, &support)?;
            let mut witness = vec![0u32; n];
            for (&col, &cf) in support.iter().zip(coeffs.iter()) {
                witness[col] = cf;
            }
            debug_assert!(c.contains(&witness)?);
            Ok(DistanceResult::Exact { d: weight, witness: Some(witness) })
        }
        LevelOutcome::NoneUpTo(w) => Ok(DistanceResult::LowerBound { low: w + 1 }),
        LevelOutcome::BudgetOut(completed) => Err(Error::Budget { completed }),
    }
}

struct SearchCtx {
    visits: u64,
    max_visits: u64,
}

impl SearchCtx {
    #[inline]
    fn tick(&mut self) -> bool {
        self.visits += 1;
        self.visits <= self.max_visits
    }
}

enum LevelOutcome {
    Found { weight: u32, support: Vec<usize> },
    NoneUpTo(u32),
    BudgetOut(u32),
}

/// GF(2): a support of weight w is dependent iff its columns XOR to zero.
/// Scan (w-1)-subsets T in colex order and complete them from a syndrome map
/// with a column index above max(T); the colex-least support is the candidate
/// with the smallest completing index.
fn search_gf2(cols: &[u64], wmax: u32, ctx: &mut SearchCtx) -> LevelOutcome {
    let n = cols.len();
    let mut map: HashMap<u64, Vec<u32>> = HashMap::new();
    for (j, &s) in cols.iter().enumerate() {
        map.entry(s).or_default().push(j as u32);
    }
    for w in 1..=wmax {
        let w1 = (w - 1) as usize;
        if w1 > n {
            break;
        }
        let mut best: Option<(u32, Vec<usize>)> = None;
        if w1 == 0 {
            if !ctx.tick() {
                return LevelOutcome::BudgetOut(w - 1);
            }
            if let Some(list) = map.get(&0) {
                best = Some((list[0], Vec::new()));
            }
        } else if w1 <= n {
            let mut t: Vec<usize> = (0..w1).collect();
            // sxor[i] = xor of columns t[i..]; a colex step only touches
            // positions 0..=p, so suffixes above p stay valid
            let mut sxor = vec![0u64; w1 + 1];
            for i in (0..w1).rev() {
                sxor[i] = sxor[i + 1] ^ cols[t[i]];
            }
            'scan: loop {
                if let Some((bj, _)) = &best {
                    if t[w1 - 1] as u32 >= *bj {
                        break 'scan;
                    }
                }
                if !ctx.tick() {
                    return LevelOutcome::BudgetOut(w - 1);
                }
                let s = sxor[0];
                if let Some(list) = map.get(&s) {
                    let lo = t[w1 - 1] as u32;
                    if let Some(pos) = list.iter().position(|&j| j > lo) {
                        let j = list[pos];
                        if best.as_ref().map_or(true, |(bj, _)| j < *bj) {
                            best = Some((j, t.clone()));
                        }
                    }
                }
                // colex successor
                let mut p = 0usize;
                loop {
                    let limit = if p + 1 == w1 { n } else { t[p + 1] };
                    if t[p] + 1 < limit {
                        t[p] += 1;
                        break;
                    }
                    p += 1;
                    if p == w1 {
                        break 'scan;
                    }
                }
                for (i, slot) in t.iter_mut().enumerate().take(p) {
                    *slot = i;
                }
                for i in (0..=p).rev() {
                    sxor[i] = sxor[i + 1] ^ cols[t[i]];
                }
            }
        }
        if let Some((j, t)) = best {
            let mut support = t;
            support.push(j as usize);
            return LevelOutcome::Found { weight: w, support };
        }
    }
    LevelOutcome::NoneUpTo(wmax)
}

/// Columns as P bit-planes over the rows (P = 2 for GF(4), 3 for GF(8); the
/// plane-mixing rules below assume the fixed defining polynomials x^2+x+1 and
/// x^3+x+1 from the primitive table).
fn plane_cols<const P: usize>(h: &Matrix) -> Vec<[u64; P]> {
    (0..h.cols())
        .map(|j| {
            let mut col = [0u64; P];
            for r in 0..h.rows() {
                let v = h.get(r, j);
                for (b, plane) in col.iter_mut().enumerate() {
                    *plane |= ((v as u64 >> b) & 1) << r;
                }
            }
            col
        })
        .collect()
}

/// Scalar multiply a GF(4) plane column (basis {1, alpha}, alpha^2 = alpha+1).
#[inline]
fn gf4_scalar_mul(col: &[u64; 2], s: u32) -> [u64; 2] {
    let (a, b) = (col[0], col[1]);
    match s {
        0 => [0, 0],
        1 => [a, b],
        2 => [b, a ^ b],
        _ => [a ^ b, a],
    }
}

/// Scalar multiply a GF(8) plane column (basis {1, y, y^2}, y^3 = y + 1).
#[inline]
fn gf8_scalar_mul(col: &[u64; 3], s: u32) -> [u64; 3] {
    let (a, b, c) = (col[0], col[1], col[2]);
    let mut out = [0u64; 3];
    if s & 1 != 0 {
        out[0] ^= a;
        out[1] ^= b;
        out[2] ^= c;
    }
    if s & 2 != 0 {
        out[0] ^= c;
        out[1] ^= a ^ c;
        out[2] ^= b;
    }
    if s & 4 != 0 {
        out[0] ^= b;
        out[1] ^= b ^ c;
        out[2] ^= a ^ c;
    }
    out
}

#[inline]
fn plane_entry<const P: usize>(col: &[u64; P], row: u32) -> u32 {
    let mut v = 0u32;
    for (b, plane) in col.iter().enumerate() {
        v |= (((plane >> row) & 1) as u32) << b;
    }
    v
}

const GF4_INV: [u32; 4] = [0, 1, 3, 2];
const GF8_INV: [u32; 8] = [0, 1, 5, 6, 7, 2, 3, 4];

/// DFS over supports in colex order (largest element outermost, ascending),
/// keeping a stack of eliminated pivot columns. A candidate support of weight
/// w is dependent iff the last reduced column is zero; lighter dependencies
/// cannot appear because lower levels were exhausted first.
fn search_planes<const P: usize>(
    cols: &[[u64; P]],
    wmax: u32,
    ctx: &mut SearchCtx,
    scalar_mul: fn(&[u64; P], u32) -> [u64; P],
    inv: &[u32],
) -> LevelOutcome {
    let n = cols.len();
    for w in 1..=wmax {
        let w = w as usize;
        if w > n {
            break;
        }
        // stack[l] = (column index, normalized reduced column, pivot row)
        let mut idx = vec![0usize; w];
        let mut reduced: Vec<[u64; P]> = vec![[0u64; P]; w];
        let mut pivot = vec![0u32; w];
        let mut lvl = 0usize;
        idx[0] = w - 1;
        'dfs: loop {
            let hi = if lvl == 0 { n } else { idx[lvl - 1] };
            if idx[lvl] >= hi {
                if lvl == 0 {
                    break 'dfs;
                }
                lvl -= 1;
                idx[lvl] += 1;
                continue;
            }
            if !ctx.tick() {
                return LevelOutcome::BudgetOut(w as u32 - 1);
            }
            // reduce the candidate column against the pivot stack
            let mut red = cols[idx[lvl]];
            for l in 0..lvl {
                let cf = plane_entry(&red, pivot[l]);
                if cf != 0 {
                    let sub = scalar_mul(&reduced[l], cf);
                    for p in 0..P {
                        red[p] ^= sub[p];
                    }
                }
            }
            let zero = red.iter().all(|&p| p == 0);
            if zero {
                if lvl + 1 == w {
                    let mut support: Vec<usize> = idx[..w].to_vec();
                    support.sort_unstable();
                    return LevelOutcome::Found { weight: w as u32, support };
                }
                // a lighter dependency would have been found at a lower level
                debug_assert!(false, "unexpected dependent prefix");
                idx[lvl] += 1;
                continue;
            }
            if lvl + 1 == w {
                idx[lvl] += 1;
                continue;
            }
            // find pivot row and normalize the pivot entry to 1
            let mask = red.iter().fold(0u64, |acc, &p| acc | p);
            let prow = mask.trailing_zeros();
            let entry = plane_entry(&red, prow);
            reduced[lvl] = scalar_mul(&red, inv[entry as usize]);
            pivot[lvl] = prow;
            lvl += 1;
            idx[lvl] = w - 1 - lvl;
        }
    }
    LevelOutcome::NoneUpTo(wmax)
}

/// Fallback engine for fields beyond GF(8) or parity matrices taller than 64
/// rows: the same colex DFS with field-arithmetic elimination.
fn search_generic(h: &Matrix, wmax: u32, ctx: &mut SearchCtx) -> LevelOutcome {
    let n = h.cols();
    let rows = h.rows();
    let f = h.field().clone();
    let cols: Vec<Vec<u32>> = (0..n)
        .map(|j| (0..rows).map(|r| h.get(r, j)).collect())
        .collect();
    for w in 1..=wmax {
        let w = w as usize;
        if w > n {
            break;
        }
        let mut idx = vec![0usize; w];
        let mut reduced: Vec<Vec<u32>> = vec![vec![0; rows]; w];
        let mut pivot = vec![0usize; w];
        let mut lvl = 0usize;
        idx[0] = w - 1;
        'dfs: loop {
            let hi = if lvl == 0 { n } else { idx[lvl - 1] };
            if idx[lvl] >= hi {
                if lvl == 0 {
                    break 'dfs;
                }
                lvl -= 1;
                idx[lvl] += 1;
                continue;
            }
            if !ctx.tick() {
                return LevelOutcome::BudgetOut(w as u32 - 1);
            }
            let mut red = cols[idx[lvl]].clone();
            for l in 0..lvl {
                let cf = red[pivot[l]];
                if cf != 0 {
                    for r in 0..rows {
                        red[r] = f.add(red[r], f.mul(cf, reduced[l][r]));
                    }
                }
            }
            let zero = red.iter().all(|&v| v == 0);
            if zero {
                if lvl + 1 == w {
                    let mut support: Vec<usize> = idx[..w].to_vec();
                    support.sort_unstable();
                    return LevelOutcome::Found { weight: w as u32, support };
                }
                debug_assert!(false, "unexpected dependent prefix");
                idx[lvl] += 1;
                continue;
            }
            if lvl + 1 == w {
                idx[lvl] += 1;
                continue;
            }
            let prow = red.iter().position(|&v| v != 0).unwrap();
            let inv = f.inv(red[prow]).unwrap();
            for r in 0..rows {
                reduced[lvl][r] = f.mul(red[r], inv);
            }
            pivot[lvl] = prow;
            lvl += 1;
            idx[lvl] = w - 1 - lvl;
        }
    }
    LevelOutcome::NoneUpTo(wmax)
}

/// Solve for the dependency coefficients on a known support: the nullspace of
/// the r x w submatrix is one-dimensional; scale it monic at the lowest index.
fn solve_dependency(h: &Matrix, support: &[usize]) -> Result<Vec<u32>> {
    let f = h.field().clone();
    let w = support.len();
    let rows = h.rows();
    if rows == 0 {
        // full space: any single column works with coefficient 1
        return Ok(vec![1; w]);
    }
    let mut m: Vec<Vec<u32>> = (0..rows)
        .map(|r| support.iter().map(|&j| h.get(r, j)).collect())
        .collect();
    // row-reduce, tracking pivot columns
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..w {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(p, rank);
        let inv = f.inv(m[rank][col])?;
        for c in 0..w {
            m[rank][c] = f.mul(m[rank][c], inv);
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..w {
                    m[r][c] = f.add(m[r][c], f.mul(factor, m[rank][c]));
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank != w - 1 {
        return Err(Error::Internal(format!(
            "support of size {w} has rank {rank}, expected {}",
            w - 1
        )));
    }
    // the unique free column gets coefficient 1; back-substitute the pivots
    let free = (0..w).find(|c| !pivots.contains(c)).unwrap();
    let mut coeffs = vec![0u32; w];
    coeffs[free] = 1;
    for (r, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = m[r][free]; // -m = m in characteristic 2
    }
    // normalize: monic at the lowest support index
    let lead = coeffs[0];
    if lead != 0 && lead != 1 {
        let inv = f.inv(lead)?;
        for c in coeffs.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    if coeffs[0] == 0 {
        return Err(Error::Internal("dependency misses the lowest support index".into()));
    }
    Ok(coeffs)
}

// ---------------------------------------------------------------------------
// Shared exhaustive enumeration over generator rows (also used for the
// Plotkin-sum linear codes).
// ---------------------------------------------------------------------------

/// Packed codeword accumulator: one u64 bit-plane set per block of 64
/// positions.
struct PackedRows {
    planes: usize,
    words: usize,
    /// scaled[r * q + v] = packed v * row_r (v in 0..q)
    scaled: Vec<Vec<u64>>,
    q: u32,
}

fn pack_rows(m: &Matrix) -> PackedRows {
    let f = m.field().clone();
    let planes = f.degree() as usize;
    let q = f.order() as u32;
    let n = m.cols();
    let words = n.div_ceil(64);
    let mut scaled = Vec::with_capacity(m.rows() * q as usize);
    for r in 0..m.rows() {
        for v in 0..q {
            let mut packed = vec![0u64; planes * words];
            for c in 0..n {
                let e = f.mul(m.get(r, c), v);
                for b in 0..planes {
                    if (e >> b) & 1 == 1 {
                        packed[b * words + c / 64] |= 1u64 << (c % 64);
                    }
                }
            }
            scaled.push(packed);
        }
    }
    PackedRows { planes, words, scaled, q }
}

fn packed_weight(p: &PackedRows, acc: &[u64]) -> u32 {
    let mut total = 0u32;
    for w in 0..p.words {
        let mut mask = 0u64;
        for b in 0..p.planes {
            mask |= acc[b * p.words + w];
        }
        total += mask.count_ones();
    }
    total
}

/// Visit every codeword (including zero) in message-lex order, calling
/// `visit(weight, message_digits)`.
fn enumerate_rows(m: &Matrix, mut visit: impl FnMut(u32, &[u32])) {
    let k = m.rows();
    let p = pack_rows(m);
    let mut acc = vec![0u64; p.planes * p.words];
    let mut msg = vec![0u32; k];
    // iterative mixed-radix counter in lex order with incremental updates
    fn rec(
        p: &PackedRows,
        depth: usize,
        k: usize,
        acc: &mut Vec<u64>,
        msg: &mut Vec<u32>,
        visit: &mut impl FnMut(u32, &[u32]),
    ) {
        if depth == k {
            visit(packed_weight(p, acc), msg);
            return;
        }
        for v in 0..p.q {
            msg[depth] = v;
            if v != 0 {
                // undo v-1, apply v: in characteristic 2 both are XORs
                let prev = &p.scaled[depth * p.q as usize + (v - 1) as usize];
                let cur = &p.scaled[depth * p.q as usize + v as usize];
                for (a, (x, y)) in acc.iter_mut().zip(prev.iter().zip(cur.iter())) {
                    *a ^= x ^ y;
                }
            }
            rec(p, depth + 1, k, acc, msg, visit);
        }
        // restore: undo the final digit q-1
        let last = &p.scaled[depth * p.q as usize + (p.q - 1) as usize];
        for (a, x) in acc.iter_mut().zip(last.iter()) {
            *a ^= x;
        }
        msg[depth] = 0;
    }
    rec(&p, 0, k, &mut acc, &mut msg, &mut visit);
}

/// Minimum nonzero weight over all codewords, with the lex-first message
/// attaining it. `None` when the matrix has no rows.
pub(crate) fn min_weight_rows(m: &Matrix) -> Option<(u32, Vec<u32>)> {
    if m.rows() == 0 {
        return None;
    }
    let mut best: Option<(u32, Vec<u32>)> = None;
    enumerate_rows(m, |w, msg| {
        if w > 0 && best.as_ref().map_or(true, |(bw, _)| w < *bw) {
            best = Some((w, msg.to_vec()));
        }
    });
    best
}

/// Weight counts A_0..A_n over all q^rows codewords spanned by the rows.
pub(crate) fn weight_distribution_rows(m: &Matrix, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    enumerate_rows(m, |w, _| counts[w as usize] += 1);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{bch_code, cyclic_from_generator};
    use crate::gf::field_create;
    use crate::poly::Poly;

    #[test]
    fn hamming_code_distance_three() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 7, 3, 1).unwrap();
        let r = min_distance_exhaustive(&c).unwrap();
        assert_eq!(r.exact_value(), Some(3));
        let w = r.witness().unwrap();
        assert_eq!(w.iter().filter(|&&x| x != 0).count(), 3);
        assert!(c.contains(w).unwrap());
    }

    #[test]
    fn even_weight_subcode_distance_four() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 7, 4, 0).unwrap(); // (x-1) m_1: the [7,3,4] code
        assert_eq!(c.dimension(), 3);
        assert_eq!(min_distance_exhaustive(&c).unwrap().exact_value(), Some(4));
    }

    #[test]
    fn repetition_code_distance_seven() {
        let f = field_create(1).unwrap();
        let g = Poly::x_pow_n_minus_one(&f, 7)
            .divmod(&Poly::x_minus_one(&f))
            .unwrap()
            .0;
        let c = cyclic_from_generator(&f, 7, g).unwrap();
        assert_eq!(c.dimension(), 1);
        assert_eq!(min_distance_exhaustive(&c).unwrap().exact_value(), Some(7));
    }

    #[test]
    fn zero_code_has_no_words() {
        let f = field_create(1).unwrap();
        let c = cyclic_from_generator(&f, 7, Poly::x_pow_n_minus_one(&f, 7)).unwrap();
        assert_eq!(min_distance_exhaustive(&c).unwrap(), DistanceResult::NoNonzeroWords);
    }

    #[test]
    fn hamming_weight_distribution() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 7, 3, 1).unwrap();
        assert_eq!(weight_distribution(&c).unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
    }

    #[test]
    fn full_space_weight_distribution_is_binomial() {
        let f = field_create(1).unwrap();
        let c = cyclic_from_generator(&f, 3, Poly::one(&f)).unwrap();
        assert_eq!(weight_distribution(&c).unwrap(), vec![1, 3, 3, 1]);
        let z = cyclic_from_generator(&f, 4, Poly::x_pow_n_minus_one(&f, 4)).unwrap();
        assert_eq!(weight_distribution(&z).unwrap(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn parity_code_search_finds_weight_two() {
        let f = field_create(1).unwrap();
        let c = cyclic_from_generator(&f, 9, Poly::x_minus_one(&f)).unwrap();
        let r = min_weight_upto(&c, 9, &Budget::default()).unwrap();
        assert_eq!(r.exact_value(), Some(2));
        // canonical witness: colex-first support {0, 1}
        assert_eq!(r.witness().unwrap(), &[1, 1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn search_equals_exhaustive_on_small_codes() {
        let f2 = field_create(1).unwrap();
        let f4 = field_create(2).unwrap();
        let f8 = field_create(3).unwrap();
        let codes = vec![
            bch_code(&f2, 7, 3, 1).unwrap(),
            bch_code(&f2, 7, 4, 0).unwrap(),
            bch_code(&f2, 15, 5, 1).unwrap(),
            bch_code(&f2, 15, 7, 0).unwrap(),
            bch_code(&f2, 31, 8, 0).unwrap(),
            bch_code(&f4, 15, 3, 0).unwrap(),
            bch_code(&f4, 15, 4, 1).unwrap(),
            bch_code(&f4, 5, 2, 0).unwrap(),
            bch_code(&f8, 9, 3, 0).unwrap(),
        ];
        for c in &codes {
            let ex = min_distance_exhaustive(&c).unwrap().exact_value().unwrap();
            let se = min_weight_upto(&c, c.length() as u32, &Budget::default())
                .unwrap()
                .exact_value()
                .unwrap();
            assert_eq!(ex, se, "q={} n={} k={}", c.q(), c.length(), c.dimension());
        }
    }

    #[test]
    fn search_monotonicity_and_lower_bounds() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 31, 8, 0).unwrap();
        let mut prev = 0;
        for wmax in 1..=7 {
            let r = min_weight_upto(&c, wmax, &Budget::default()).unwrap();
            assert!(r.low() >= prev);
            prev = r.low();
            if wmax < 7 {
                assert_eq!(r, DistanceResult::LowerBound { low: wmax + 1 });
            }
        }
        assert_eq!(
            min_weight_upto(&c, 8, &Budget::default()).unwrap().exact_value(),
            Some(8)
        );
    }

    #[test]
    fn witnesses_live_in_the_code_with_reported_weight() {
        let f4 = field_create(2).unwrap();
        let c = bch_code(&f4, 15, 4, 0).unwrap();
        let r = min_weight_upto(&c, 15, &Budget::default()).unwrap();
        let d = r.exact_value().unwrap();
        let w = r.witness().unwrap();
        assert_eq!(w.iter().filter(|&&x| x != 0).count() as u32, d);
        assert!(c.contains(w).unwrap());
        let h = c.parity_check_matrix();
        assert!(h.mul_vec(w).iter().all(|&x| x == 0));
        // monic at the lowest support index
        let first = w.iter().find(|&&x| x != 0).unwrap();
        assert_eq!(*first, 1);
    }

    #[test]
    fn budget_exhaustion_reports_completed_level() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 31, 8, 0).unwrap();
        let tiny = Budget { max_visits: 40 };
        match min_weight_upto(&c, 8, &tiny) {
            Err(Error::Budget { completed }) => assert!(completed < 8),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn bch_bound_examples() {
        let f = field_create(1).unwrap();
        let c = bch_code(&f, 7, 3, 1).unwrap();
        assert_eq!(bch_lower_bound(&c).unwrap(), 3);
        let c = bch_code(&f, 127, 8, 0).unwrap();
        assert!(bch_lower_bound(&c).unwrap() >= 8);
        let c = bch_code(&f, 7, 2, 0).unwrap();
        assert_eq!(bch_lower_bound(&c).unwrap(), 2);
        // repeated-root codes are rejected
        let g = Poly::x_minus_one(&f).pow(2).unwrap();
        let c = cyclic_from_generator(&f, 14, g).unwrap();
        assert!(matches!(bch_lower_bound(&c), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn bch_bound_never_exceeds_true_distance() {
        let f2 = field_create(1).unwrap();
        let f4 = field_create(2).unwrap();
        for (fld, n) in [(&f2, 15u64), (&f2, 31), (&f4, 15)] {
            for delta in 2..=6u64 {
                let c = bch_code(fld, n, delta, 0).unwrap();
                if c.dimension() == 0 {
                    continue;
                }
                if c.dimension() as u32 * fld.order().trailing_zeros() > 20 {
                    continue; // beyond the enumeration cap
                }
                let d = min_distance_exhaustive(&c).unwrap().exact_value().unwrap();
                assert!(bch_lower_bound(&c).unwrap() <= d);
            }
        }
    }
}
