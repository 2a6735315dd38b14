//! Acceptance suite: one test per criterion, each printing a PASS line with a
//! short summary (run with `--nocapture` to see them).
//!
//! 1. Results-table reproduction with exact distances.
//! 2. Combination-identity oracle over full divisor-pair grids.
//! 3. Plotkin/cyclic weight-distribution equality on the same grids.
//! 4. Distance-optimality verdicts for every bound-certified claim.
//! 5. Coset-leader statistic delta_h: closed forms, Lambda bound, dimension identity.
//! 6. The rate-1/2 example instances with search-confirmed distances.
//! 7. Always-on property sweeps (fields, cosets, divmod, shift closure, engine agreement).

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use repcyc::bounds::{classify, fu_bound_check, BoundName, Optimality};
use repcyc::catalog::{table1, CodeRecord};
use repcyc::code::{cyclic_from_generator, CyclicCode};
use repcyc::cyclo::{coset_leaders, cyclotomic_coset, delta_h, factor_xn_minus_1, lambda_bound, ord_mod};
use repcyc::dist::{min_distance_exhaustive, min_weight_upto, Budget, DistanceResult};
use repcyc::families::{build_family, FamilyId};
use repcyc::gf::{ext_field, field_create, nth_root_of_unity, Field};
use repcyc::poly::Poly;
use repcyc::vanlint::{equivalence_check, predicted_distance, vanlint_combine};

/// The printed results table: (q, N, K, printed d, label).
const PRINTED_TABLE: [(u64, usize, usize, u32, &str); 28] = [
    (2, 14, 7, 4, "optimal"),
    (2, 14, 11, 2, "optimal"),
    (2, 30, 14, 8, "optimal"),
    (2, 30, 17, 6, "best_known"),
    (2, 30, 24, 4, "optimal"),
    (2, 62, 40, 8, "optimal"),
    (2, 62, 46, 6, "best_known"),
    (2, 62, 55, 4, "optimal"),
    (2, 126, 100, 8, "best_known"),
    (2, 126, 107, 7, "best_known"),
    (2, 126, 118, 4, "optimal"),
    (2, 254, 224, 8, "best_known"),
    (2, 254, 232, 6, "best_known"),
    (2, 254, 245, 4, "optimal"),
    (4, 10, 6, 4, "optimal"),
    (4, 14, 9, 4, "optimal"),
    (4, 30, 20, 6, "best_known"),
    (4, 30, 24, 4, "optimal"),
    (4, 42, 37, 3, "optimal"),
    (4, 62, 55, 4, "optimal"),
    (4, 126, 112, 6, "best_known"),
    (4, 126, 118, 4, "optimal"),
    (4, 126, 121, 3, "optimal"),
    (4, 170, 164, 3, "optimal"),
    (4, 254, 245, 4, "optimal"),
    (8, 18, 14, 4, "optimal"),
    (8, 126, 120, 4, "optimal"),
    (8, 126, 122, 3, "optimal"),
];

fn find_row<'a>(records: &'a [CodeRecord], q: u64, n: usize, k: usize) -> &'a CodeRecord {
    records
        .iter()
        .find(|r| r.q == q && r.n == n && r.k == k)
        .unwrap_or_else(|| panic!("row [{n},{k}]_{q} missing from the table"))
}

#[test]
fn criterion_1_table_reproduction() {
    let started = Instant::now();
    let records = table1(true, &Budget::default()).expect("table construction");

    // every printed row reproduced with exact (q, N, K)
    assert_eq!(records.len(), PRINTED_TABLE.len());
    for &(q, n, k, _, label) in &PRINTED_TABLE {
        let r = find_row(&records, q, n, k);
        assert_eq!(r.optimality_label.as_str(), label, "label of [{n},{k}]_{q}");
    }

    // the 19 rows with N <= 126 and printed d <= 6, plus the two distance-8
    // rows, get search-exact distances matching their claims
    let mut searched = 0;
    for &(q, n, k, d, _) in &PRINTED_TABLE {
        let extra = (q, n, k) == (2, 30, 14) || (q, n, k) == (2, 62, 40);
        if (n <= 126 && d <= 6) || extra {
            searched += 1;
            let r = find_row(&records, q, n, k);
            assert_eq!(r.d_status, "exact", "[{n},{k}]_{q}");
            assert_eq!(r.d_value, r.d_claimed, "[{n},{k}]_{q}");
            assert_eq!(r.d_value, d.to_string(), "[{n},{k}]_{q}");
        }
    }
    assert_eq!(searched, 19 + 2);

    // every remaining row resolves exactly as well (combination identity with
    // exactly-verified components)
    for r in &records {
        assert_eq!(r.d_status, "exact", "[{},{}]_{}", r.n, r.k, r.q);
        assert_eq!(r.d_value, r.d_claimed, "[{},{}]_{}", r.n, r.k, r.q);
        assert!(!r.notes.contains("contradicts"), "[{},{}]_{}: {}", r.n, r.k, r.q, r.notes);
    }

    // the [126,107] row flags the printed-7 / stated-6 discrepancy and
    // reports the computed value
    let odd = find_row(&records, 2, 126, 107);
    assert_eq!(odd.d_claimed, "6");
    assert_eq!(odd.d_value, "6");
    assert!(odd.notes.contains("table prints d = 7"), "notes: {}", odd.notes);
    assert!(odd.notes.contains("computed d = 6"), "notes: {}", odd.notes);

    let secs = started.elapsed().as_secs_f64();
    assert!(secs < 600.0, "table verification took {secs:.1}s, budget is 600s");
    println!(
        "acceptance criterion 1: PASS — 28 printed rows reproduced, {} search-exact distances (incl. the flagged [126,107]), {} identity-exact, {:.1}s",
        searched + 1,
        records.len() - searched - 1,
        secs
    );
}

/// One divisor-pair instance of the combination grid.
struct GridInstance {
    g1: Poly,
    g2: Poly,
    k1: usize,
    k2: usize,
}

/// All ordered pairs (g1, g2) of divisors of x^n - 1 with g1 g2 | x^n - 1
/// (factor sets disjoint) and q^(k1+k2) <= 2^bits_cap, k1+k2 <= k_cap.
fn divisor_pair_grid(field: &Field, n: u64, bits_cap: u32, k_cap: usize) -> Vec<GridInstance> {
    let m = ord_mod(field.order(), n).unwrap() as u32;
    let ext = ext_field(field, m).unwrap();
    let factors: Vec<Poly> = factor_xn_minus_1(&ext, n, field).unwrap().into_values().collect();
    let nf = factors.len();
    let log2q = field.order().trailing_zeros() as usize;
    let mut out = Vec::new();
    let total = 3usize.pow(nf as u32);
    for mut code in 0..total {
        let mut g1 = Poly::one(field);
        let mut g2 = Poly::one(field);
        for factor in factors.iter().take(nf) {
            match code % 3 {
                1 => g1 = g1.mul(factor).unwrap(),
                2 => g2 = g2.mul(factor).unwrap(),
                _ => {}
            }
            code /= 3;
        }
        let d1 = g1.degree().unwrap();
        let d2 = g2.degree().unwrap();
        let k1 = n as usize - d1;
        let k2 = n as usize - d1 - d2;
        let k = k1 + k2;
        if k > k_cap || k * log2q > bits_cap as usize {
            continue;
        }
        out.push(GridInstance { g1, g2, k1, k2 });
    }
    out
}

fn grid_fields() -> Vec<(Field, u64, usize)> {
    // (field, n, k1+k2 cap); the (4,15) entry also honors its stated k-cap 11,
    // which the global 2^20 bit budget tightens to 10
    let f2 = field_create(1).unwrap();
    let f4 = field_create(2).unwrap();
    vec![
        (f2.clone(), 7, usize::MAX),
        (f2, 15, usize::MAX),
        (f4.clone(), 3, usize::MAX),
        (f4.clone(), 5, usize::MAX),
        (f4, 15, 11),
    ]
}

fn exhaustive_distance(c: &CyclicCode) -> DistanceResult {
    min_distance_exhaustive(c).unwrap()
}

#[test]
fn criterion_2_combination_identity_oracle() {
    let started = Instant::now();
    let mut counts = Vec::new();
    for (field, n, k_cap) in grid_fields() {
        let grid = divisor_pair_grid(&field, n, 20, k_cap);
        counts.push((field.order(), n, grid.len()));
        grid.par_iter().for_each(|inst| {
            let cc = vanlint_combine(&field, n as usize, &inst.g1, &inst.g2).unwrap();
            // dimension matches the combination formula
            let gcd = inst.g1.gcd(&inst.g2).unwrap();
            let expect_dim = 2 * n as usize - 2 * inst.g1.degree().unwrap()
                - inst.g2.degree().unwrap()
                + gcd.degree().unwrap();
            assert_eq!(cc.code().dimension(), expect_dim);
            assert_eq!(cc.code().dimension(), inst.k1 + inst.k2);

            // exhaustive d(combined) = min{2 d(C1), d(C2)}, exactly
            let d_combined = exhaustive_distance(cc.code());
            let d1 = exhaustive_distance(cc.c1());
            let d2 = exhaustive_distance(cc.c2());
            let expected = predicted_distance(&d1, &d2);
            assert_eq!(
                d_combined.exact_value(),
                expected.exact_value(),
                "q={} n={n} g1={} g2={}: combined {:?} vs min-identity {:?}",
                field.order(),
                inst.g1.to_index_list(),
                inst.g2.to_index_list(),
                d_combined,
                expected
            );
            if matches!(d_combined, DistanceResult::NoNonzeroWords) {
                assert!(matches!(expected, DistanceResult::NoNonzeroWords));
            }
        });
    }
    // grid sizes are deterministic; freeze them
    assert_eq!(
        counts,
        vec![(2, 7, 27), (2, 15, 198), (4, 3, 27), (4, 5, 27), (4, 15, 2932)]
    );
    let total: usize = counts.iter().map(|c| c.2).sum();
    println!(
        "acceptance criterion 2: PASS — {total} divisor-pair instances, distance identity and dimension formula exact on all, {:.1}s",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_3_weight_distribution_equivalence() {
    let started = Instant::now();
    let mut total = 0usize;
    for (field, n, k_cap) in grid_fields() {
        let grid = divisor_pair_grid(&field, n, 18, k_cap);
        total += grid.len();
        grid.par_iter().for_each(|inst| {
            assert!(
                equivalence_check(&field, n as usize, &inst.g1, &inst.g2).unwrap(),
                "q={} n={n} g1={} g2={}",
                field.order(),
                inst.g1.to_index_list(),
                inst.g2.to_index_list()
            );
        });
    }
    assert!(total > 1000, "grid unexpectedly small: {total}");
    println!(
        "acceptance criterion 3: PASS — Plotkin/cyclic weight distributions equal on {total} instances, {:.1}s",
        started.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_4_optimality_verdicts() {
    // distance-3 family: (q,m) in {(4,2),(4,3),(8,2)}
    for (q, m) in [(4u64, 2u32), (4, 3), (8, 2)] {
        let fam = build_family(FamilyId::T32, q, m).unwrap();
        let v = classify(fam.length() as u32, fam.dimension() as u32, 3, q);
        assert!(v.is_optimal(), "T32 (q,m)=({q},{m})");
    }
    // distance-4 family where qm > 8
    for (q, m) in [(4u64, 3u32), (8, 2)] {
        let fam = build_family(FamilyId::T33, q, m).unwrap();
        assert!(q * m as u64 > 8);
        let v = classify(fam.length() as u32, fam.dimension() as u32, 4, q);
        assert!(v.is_optimal(), "T33 (q,m)=({q},{m})");
        match v.optimality {
            Optimality::DistanceOptimal { ref via } => {
                assert!(via.contains(&BoundName::SpherePacking))
            }
            _ => unreachable!(),
        }
    }
    // the GF(4) distance-4 family at m = 3
    let fam = build_family(FamilyId::T37, 4, 3).unwrap();
    assert_eq!((fam.length(), fam.dimension()), (62, 55));
    assert!(classify(62, 55, 4, 4).is_optimal());

    // the even-distance bound rejects (30, 26, 4)_4 with margin 88 > 64
    let c = fu_bound_check(30, 26, 4, 4).unwrap();
    assert!(!c.admits);
    assert_eq!(c.lhs.to_string(), "88");
    assert_eq!(c.rhs.to_string(), "64");

    // Griesmer certifies [10, 6, 4]_4
    let v = classify(10, 6, 4, 4);
    assert!(v.is_optimal());
    match v.optimality {
        Optimality::DistanceOptimal { ref via } => assert!(via.contains(&BoundName::Griesmer)),
        _ => unreachable!(),
    }
    println!("acceptance criterion 4: PASS — all bound-certified optimality claims classified DistanceOptimal");
}

#[test]
fn criterion_5_coset_leader_statistic() {
    // closed forms for m in {3, 5, 7}
    let expected = [(3u32, 1u64), (5, 5), (7, 19)];
    for (m, want) in expected {
        let d = delta_h(m).unwrap();
        assert_eq!(d.delta, want, "m = {m}");
    }
    // Lambda-based lower bound stays below the enumerated value
    for m in [11u32, 13] {
        let (_lambda, bound) = lambda_bound(m).unwrap();
        let d = delta_h(m).unwrap();
        assert!(bound <= d.delta, "m = {m}: {bound} > {}", d.delta);
    }
    // dimension identity n - h*m = 2^(m-1), checked on the constructed codes
    for m in [3u32, 5, 7, 11, 13] {
        let d = delta_h(m).unwrap();
        let n = (1u64 << m) - 1;
        assert_eq!(n - d.h * m as u64, 1u64 << (m - 1), "arithmetic identity at m = {m}");
        let fam = build_family(FamilyId::T71, 2, m).unwrap();
        assert_eq!(
            fam.combined.c1().dimension() as u64,
            1u64 << (m - 1),
            "dim C_(2,n,delta_h+2,1) at m = {m}"
        );
        assert_eq!(fam.dimension() as u64, n, "combined dimension at m = {m}");
    }
    println!("acceptance criterion 5: PASS — delta_h = 1/5/19 at m = 3/5/7, Lambda bounds hold at m = 11/13, dimension identity at m in {{3,5,7,11,13}}");
}

#[test]
fn criterion_6_rate_half_examples() {
    let budget = Budget::default();

    let fam = build_family(FamilyId::T71, 2, 3).unwrap();
    assert_eq!((fam.length(), fam.dimension()), (14, 7));
    let d = min_weight_upto(fam.code(), 14, &budget).unwrap();
    assert_eq!(d.exact_value(), Some(4), "[14,7] distance");

    let fam = build_family(FamilyId::T71, 2, 5).unwrap();
    assert_eq!((fam.length(), fam.dimension()), (62, 31));
    let d = min_weight_upto(fam.code(), 8, &budget).unwrap();
    assert_eq!(d.exact_value(), Some(8), "[62,31] distance");

    let fam = build_family(FamilyId::T72, 2, 3).unwrap();
    assert_eq!((fam.length(), fam.dimension()), (14, 11));
    let d = min_weight_upto(fam.code(), 14, &budget).unwrap();
    assert_eq!(d.exact_value(), Some(2), "[14,11] distance");

    // [62, 42]: a weight-6 codeword exists and nothing lighter does
    let fam = build_family(FamilyId::T72, 2, 5).unwrap();
    assert_eq!((fam.length(), fam.dimension()), (62, 42));
    let d = min_weight_upto(fam.code(), 6, &budget).unwrap();
    assert_eq!(d.exact_value(), Some(6), "[62,42] distance");
    let w = d.witness().unwrap();
    assert_eq!(w.iter().filter(|&&x| x != 0).count(), 6);
    assert!(fam.code().contains(w).unwrap());

    println!("acceptance criterion 6: PASS — [14,7,4], [62,31,8], [14,11,2], [62,42,6] all search-confirmed");
}

#[test]
fn criterion_7_property_suites() {
    let started = Instant::now();

    // field axioms, exhaustive for orders <= 64
    for s in 1..=6u32 {
        let f = field_create(s).unwrap();
        let q = f.order() as u32;
        for a in 0..q {
            assert_eq!(f.add(a, a), 0);
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    // coset partition for every modulus n <= 127 coprime to q, and
    // minimal-polynomial irreducibility wherever the splitting field fits
    let f2 = field_create(1).unwrap();
    for n in (1u64..=127).step_by(2) {
        let profile = coset_leaders(2, n).unwrap();
        let covered: u64 = profile.sizes.iter().sum();
        assert_eq!(covered, n - 1, "partition of Z_{n}");
        let m = ord_mod(2, n).unwrap() as u32;
        if m > 14 {
            continue;
        }
        let ext = ext_field(&f2, m).unwrap();
        let beta = nth_root_of_unity(&ext, n).unwrap();
        let factors = factor_xn_minus_1(&ext, n, &f2).unwrap();
        let mut product = Poly::one(&f2);
        for (leader, poly) in &factors {
            product = product.mul(poly).unwrap();
            if *leader == 0 {
                continue;
            }
            // irreducible: roots exactly at the coset members
            let coset: BTreeSet<u64> =
                cyclotomic_coset(2, n, *leader).unwrap().members.into_iter().collect();
            assert_eq!(poly.degree(), Some(coset.len()));
            for j in 0..n {
                let point = ext.pow(beta.value(), j as i64).unwrap();
                let val = poly.eval_embedded(&ext, point).unwrap();
                assert_eq!(val == 0, coset.contains(&j), "root pattern of factor {leader} mod {n}");
            }
        }
        assert_eq!(product, Poly::x_pow_n_minus_one(&f2, n as usize), "factorization of x^{n}-1");
    }

    // divmod reconstruction on 10^4 seeded random pairs
    let fields = [field_create(1).unwrap(), field_create(2).unwrap(), field_create(3).unwrap()];
    let mut state = 0xfeed_5eed_u64;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for trial in 0..10_000 {
        let fld = &fields[trial % 3];
        let q = fld.order();
        let df = (next() % 16) as usize;
        let dg = (next() % 9) as usize;
        let f: Vec<u32> = (0..=df).map(|_| (next() % q) as u32).collect();
        let mut g: Vec<u32> = (0..=dg).map(|_| (next() % q) as u32).collect();
        g[dg] = 1 + (next() % (q - 1)) as u32;
        let fp = Poly::from_coeffs(fld, f);
        let gp = Poly::from_coeffs(fld, g);
        let (quot, rem) = fp.divmod(&gp).unwrap();
        assert_eq!(quot.mul(&gp).unwrap().add(&rem).unwrap(), fp);
    }

    // shift closure for all constructed codes with N <= 62
    let mut shift_codes: Vec<CyclicCode> = Vec::new();
    for (id, q, ms) in [
        (FamilyId::T31, 2u64, vec![4u32, 5]),
        (FamilyId::T32, 4, vec![2]),
        (FamilyId::T34, 4, vec![2, 3]),
        (FamilyId::T35, 4, vec![2, 3]),
        (FamilyId::T37, 4, vec![2, 3]),
        (FamilyId::T41, 2, vec![3, 4, 5]),
        (FamilyId::T42, 2, vec![4, 5]),
        (FamilyId::T61, 4, vec![2]),
        (FamilyId::T62, 4, vec![2, 3]),
        (FamilyId::T71, 2, vec![3, 5]),
        (FamilyId::T72, 2, vec![3, 5]),
        (FamilyId::T34, 8, vec![2]),
        (FamilyId::T35, 8, vec![2]),
    ] {
        for m in ms {
            let fam = build_family(id, q, m).unwrap();
            if fam.length() <= 62 {
                shift_codes.push(fam.code().clone());
                shift_codes.push(fam.combined.c1().clone());
                shift_codes.push(fam.combined.c2().clone());
            }
        }
    }
    assert!(shift_codes.len() > 20);
    for c in &shift_codes {
        let g = c.generator_matrix();
        for r in 0..g.rows() {
            let shifted = c.shift(g.row(r));
            assert!(c.contains(&shifted).unwrap(), "shift closure, N = {}", c.length());
        }
    }

    // engine agreement: exhaustive vs column search on every grid code with
    // q^k <= 2^16 (exact equality up to the per-field weight cap, one-sided
    // agreement beyond it)
    let mut compared = 0usize;
    for (field, n, k_cap) in grid_fields() {
        let grid = divisor_pair_grid(&field, n, 16, k_cap);
        let cap = if field.order() == 2 { 10 } else { 6 };
        compared += grid.len();
        grid.par_iter().for_each(|inst| {
            let cc = vanlint_combine(&field, n as usize, &inst.g1, &inst.g2).unwrap();
            let code = cc.code();
            let ex = exhaustive_distance(code);
            match ex {
                DistanceResult::NoNonzeroWords => {
                    let s = min_weight_upto(code, cap, &Budget::default()).unwrap();
                    assert_eq!(s, DistanceResult::LowerBound { low: cap + 1 });
                }
                ref r => {
                    let d = r.exact_value().unwrap();
                    if d <= cap {
                        let s = min_weight_upto(code, d, &Budget::default()).unwrap();
                        assert_eq!(s.exact_value(), Some(d), "q={} N={}", field.order(), code.length());
                    } else {
                        let s = min_weight_upto(code, cap, &Budget::default()).unwrap();
                        assert_eq!(s, DistanceResult::LowerBound { low: cap + 1 });
                    }
                }
            }
        });
    }
    assert!(compared > 500);

    println!(
        "acceptance criterion 7: PASS — field axioms (orders <= 64), coset/factorization sweep (n <= 127), 10^4 divmod reconstructions, shift closure ({} codes), engine agreement ({} codes), {:.1}s",
        shift_codes.len(),
        compared,
        started.elapsed().as_secs_f64()
    );
}
