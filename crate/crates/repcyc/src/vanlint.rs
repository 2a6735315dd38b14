//! The length-doubling combination of two nested cyclic codes.
//!
//! For q even and n odd, the Plotkin sum {(u | u+v)} of C1 = <g1> and
//! C2 = <g1 g2> is permutation-equivalent to the repeated-root cyclic code of
//! length 2n generated by g1^2 g2 / gcd(g1, g2), with dimension
//! 2n - 2 deg g1 - deg g2 + deg gcd(g1, g2) and minimum distance
//! min{2 d(C1), d(C2)}.
//!
//! Equivalence is certified at desk scale by weight-distribution equality (a
//! permutation invariant); the explicit coordinate permutation is not
//! constructed. Weight-distribution equality is evidence, not proof, of
//! permutation equivalence — the underlying theorem guarantees the fact.

use crate::code::{cyclic_from_generator, CyclicCode, Matrix};
use crate::dist::{
    bch_lower_bound, min_distance_exhaustive, weight_distribution_rows, DistanceResult,
};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Poly;

/// A linear code presented by a generator matrix with independent rows.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    length: usize,
    gen: Matrix,
}

impl LinearCode {
    pub fn from_generator_matrix(gen: Matrix) -> Self {
        Self { field: gen.field().clone(), length: gen.cols(), gen }
    }

    pub fn from_cyclic(c: &CyclicCode) -> Self {
        Self::from_generator_matrix(c.generator_matrix())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    pub fn generator_matrix(&self) -> &Matrix {
        &self.gen
    }

    pub fn weight_distribution(&self) -> Vec<u64> {
        weight_distribution_rows(&self.gen, self.length)
    }
}

/// Plotkin sum / [u | u+v] construction: generator [[G1 | G1], [0 | G2]],
/// parameters [2n, k1 + k2, min{2 d1, d2}].
pub fn plotkin_sum(c1: &LinearCode, c2: &LinearCode) -> Result<LinearCode> {
    if c1.field != c2.field {
        return Err(Error::FieldMismatch("Plotkin sum needs a common field".into()));
    }
    if c1.length != c2.length {
        return Err(Error::InvalidLength(format!(
            "Plotkin sum needs equal lengths, got {} and {}",
            c1.length, c2.length
        )));
    }
    let n = c1.length;
    let (k1, k2) = (c1.dimension(), c2.dimension());
    let mut gen = Matrix::zero(&c1.field, k1 + k2, 2 * n);
    for r in 0..k1 {
        for c in 0..n {
            let v = c1.gen.get(r, c);
            gen.set(r, c, v);
            gen.set(r, c + n, v);
        }
    }
    for r in 0..k2 {
        for c in 0..n {
            gen.set(k1 + r, c + n, c2.gen.get(r, c));
        }
    }
    Ok(LinearCode::from_generator_matrix(gen))
}

/// The combined repeated-root cyclic code with its two components.
#[derive(Clone, Debug)]
pub struct CombinedCode {
    base_length: usize,
    g1: Poly,
    g2: Poly,
    c1: CyclicCode,
    c2: CyclicCode,
    code: CyclicCode,
    predicted_dim: usize,
    predicted: DistanceResult,
}

impl CombinedCode {
    pub fn base_length(&self) -> usize {
        self.base_length
    }

    pub fn g1(&self) -> &Poly {
        &self.g1
    }

    pub fn g2(&self) -> &Poly {
        &self.g2
    }

    /// First component C1 = <g1>, length n.
    pub fn c1(&self) -> &CyclicCode {
        &self.c1
    }

    /// Second component C2 = <g1 g2>, length n; a subcode of C1.
    pub fn c2(&self) -> &CyclicCode {
        &self.c2
    }

    /// The length-2n repeated-root cyclic code.
    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    pub fn predicted_dim(&self) -> usize {
        self.predicted_dim
    }

    /// min{2 d(C1), d(C2)} as derivable from the component distances known at
    /// construction time (exact for small components, BCH bounds otherwise).
    pub fn predicted_distance(&self) -> &DistanceResult {
        &self.predicted
    }
}

/// Distance information obtainable cheaply for a length-n component: exact by
/// enumeration when q^k <= 2^16, otherwise the BCH lower bound.
pub(crate) fn component_distance(c: &CyclicCode) -> DistanceResult {
    if c.dimension() == 0 {
        return DistanceResult::NoNonzeroWords;
    }
    let bits = c.q().trailing_zeros() as usize * c.dimension();
    if bits <= 16 {
        if let Ok(r) = min_distance_exhaustive(c) {
            return r;
        }
    }
    match bch_lower_bound(c) {
        Ok(b) => DistanceResult::LowerBound { low: b },
        Err(_) => DistanceResult::LowerBound { low: 1 },
    }
}

/// Combine the distance statuses of the two components into the status of the
/// combined code via d = min{2 d1, d2}. A component with no nonzero codewords
/// contributes nothing to the min (its distance is +infinity).
pub fn predicted_distance(d1: &DistanceResult, d2: &DistanceResult) -> DistanceResult {
    let lo1 = match d1 {
        DistanceResult::NoNonzeroWords => None,
        x => Some(2 * x.low()),
    };
    let lo2 = match d2 {
        DistanceResult::NoNonzeroWords => None,
        x => Some(x.low()),
    };
    let hi1 = d1.high().map(|h| 2 * h);
    let hi2 = d2.high();

    let low = match (lo1, lo2) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return DistanceResult::NoNonzeroWords,
    };
    let high = match (hi1, hi2) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    };
    match high {
        Some(h) if h == low => DistanceResult::exact(low),
        Some(h) => DistanceResult::Interval { low, high: h, witness: None },
        None => DistanceResult::LowerBound { low },
    }
}

/// Build the combined cyclic code C(C1, C2) of length 2n from g1 and g2, both
/// divisors of x^n - 1 (n odd). C2 is the cyclic code generated by g1 g2,
/// whose canonical generator is g1 g2 / gcd(g1, g2).
pub fn vanlint_combine(field: &Field, n: usize, g1: &Poly, g2: &Poly) -> Result<CombinedCode> {
    if n % 2 == 0 {
        return Err(Error::InvalidLength(format!("base length n = {n} must be odd")));
    }
    if !g1.is_monic() || !g2.is_monic() {
        return Err(Error::InvalidGenerator("g1 and g2 must be monic".into()));
    }
    let modulus = Poly::x_pow_n_minus_one(field, n);
    if !modulus.divisible_by(g1)? {
        return Err(Error::InvalidGenerator(format!(
            "g1 = {} does not divide x^{n} - 1",
            g1.to_index_list()
        )));
    }
    if !modulus.divisible_by(g2)? {
        return Err(Error::InvalidGenerator(format!(
            "g2 = {} does not divide x^{n} - 1",
            g2.to_index_list()
        )));
    }
    let gcd = g1.gcd(g2)?;
    let (g2_reduced, rem) = g2.divmod(&gcd)?;
    debug_assert!(rem.is_zero());
    let generator = g1.mul(g1)?.mul(&g2_reduced)?.monic();
    let code = cyclic_from_generator(field, 2 * n, generator)?;

    let predicted_dim = 2 * n - 2 * g1.degree().unwrap() - g2.degree().unwrap()
        + gcd.degree().unwrap();
    debug_assert_eq!(code.dimension(), predicted_dim);

    let c1 = cyclic_from_generator(field, n, g1.clone())?;
    let c2 = cyclic_from_generator(field, n, g1.lcm(g2)?)?;
    let predicted = predicted_distance(&component_distance(&c1), &component_distance(&c2));

    Ok(CombinedCode {
        base_length: n,
        g1: g1.clone(),
        g2: g2.clone(),
        c1,
        c2,
        code,
        predicted_dim,
        predicted,
    })
}

/// Weight-distribution equality between the Plotkin sum and the combined
/// cyclic code, enumerable while q^(k1+k2) <= 2^22.
pub fn equivalence_check(field: &Field, n: usize, g1: &Poly, g2: &Poly) -> Result<bool> {
    let combined = vanlint_combine(field, n, g1, g2)?;
    let k = combined.code.dimension();
    if field.order().trailing_zeros() as usize * k > 22 {
        return Err(Error::Resource(format!(
            "q^k = {}^{k} exceeds the equivalence enumeration cap",
            field.order()
        )));
    }
    let p = plotkin_sum(
        &LinearCode::from_cyclic(&combined.c1),
        &LinearCode::from_cyclic(&combined.c2),
    )?;
    let wd_plotkin = p.weight_distribution();
    let wd_cyclic = weight_distribution_rows(&combined.code.generator_matrix(), 2 * n);
    Ok(wd_plotkin == wd_cyclic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::bch_code;
    use crate::cyclo::factor_xn_minus_1;
    use crate::dist::min_weight_upto;
    use crate::gf::{ext_field, field_create};

    fn gf2() -> Field {
        field_create(1).unwrap()
    }

    fn m_beta_7(f: &Field) -> Poly {
        Poly::from_coeffs(f, vec![1, 1, 0, 1])
    }

    #[test]
    fn plotkin_degenerate_cases() {
        let f = gf2();
        // C2 = {0}: two copies of each C1 word, distance 2 d1
        let c1 = LinearCode::from_cyclic(&bch_code(&f, 7, 2, 0).unwrap());
        let zero = LinearCode::from_generator_matrix(Matrix::zero(&f, 0, 7));
        let p = plotkin_sum(&c1, &zero).unwrap();
        assert_eq!((p.length(), p.dimension()), (14, 6));
        let wd = p.weight_distribution();
        assert!(wd.iter().enumerate().all(|(w, &c)| c == 0 || w % 2 == 0));
        assert_eq!(wd.iter().skip(1).position(|&c| c > 0).map(|i| i + 1), Some(4));

        // C1 full space, C2 = {0, all-ones}: distance min{2, n} = 2
        let full = LinearCode::from_cyclic(
            &crate::code::cyclic_from_generator(&f, 7, Poly::one(&f)).unwrap(),
        );
        let rep = LinearCode::from_cyclic(
            &crate::code::cyclic_from_generator(
                &f,
                7,
                Poly::x_pow_n_minus_one(&f, 7).divmod(&Poly::x_minus_one(&f)).unwrap().0,
            )
            .unwrap(),
        );
        let p = plotkin_sum(&full, &rep).unwrap();
        let wd = p.weight_distribution();
        assert_eq!(wd.iter().skip(1).position(|&c| c > 0).map(|i| i + 1), Some(2));
    }

    #[test]
    fn combine_length_fourteen() {
        // g1 = x - 1, g2 = m_beta: generator (x-1)^2 m_beta, [14, 9, 4]
        let f = gf2();
        let cc = vanlint_combine(&f, 7, &Poly::x_minus_one(&f), &m_beta_7(&f)).unwrap();
        assert_eq!(cc.code().length(), 14);
        assert_eq!(cc.code().dimension(), 9);
        assert_eq!(cc.predicted_dim(), 9);
        let expect = Poly::x_minus_one(&f)
            .pow(2)
            .unwrap()
            .mul(&m_beta_7(&f))
            .unwrap();
        assert_eq!(cc.code().generator(), &expect);
        assert_eq!(cc.predicted_distance(), &DistanceResult::exact(4));
        let d = min_weight_upto(cc.code(), 14, &Default::default()).unwrap();
        assert_eq!(d.exact_value(), Some(4));
    }

    #[test]
    fn combine_gcd_interaction() {
        // g1 = (x-1) m_beta, g2 = m_beta m_beta3: generator (x-1)^2 m_beta^2 m_beta3 / m_beta
        let f = gf2();
        let g2_ext = ext_field(&f, 3).unwrap();
        let factors = factor_xn_minus_1(&g2_ext, 7, &f).unwrap();
        let m1 = factors[&1].clone();
        let m3 = factors[&3].clone();
        let g1 = Poly::x_minus_one(&f).mul(&m1).unwrap();
        let g2 = m1.mul(&m3).unwrap();
        let cc = vanlint_combine(&f, 7, &g1, &g2).unwrap();
        // generator = g1^2 g2 / gcd = (x-1)^2 m1^2 m3
        let expect = Poly::x_minus_one(&f)
            .pow(2)
            .unwrap()
            .mul(&m1.pow(2).unwrap())
            .unwrap()
            .mul(&m3)
            .unwrap();
        assert_eq!(cc.code().generator(), &expect);
        // 2n - 2 deg(g1) - deg(g2) + deg(gcd) = 14 - 8 - 6 + 3
        assert_eq!(cc.code().dimension(), 3);
    }

    #[test]
    fn combine_rejects_bad_inputs() {
        let f = gf2();
        assert!(vanlint_combine(&f, 6, &Poly::x_minus_one(&f), &Poly::one(&f)).is_err());
        // (x+1)^2 does not divide the squarefree x^7 - 1
        let not_divisor = Poly::from_coeffs(&f, vec![1, 0, 1]);
        assert!(vanlint_combine(&f, 7, &not_divisor, &Poly::one(&f)).is_err());
    }

    #[test]
    fn predicted_distance_cases() {
        use DistanceResult as D;
        assert_eq!(predicted_distance(&D::exact(2), &D::exact(3)), D::exact(3));
        assert_eq!(
            predicted_distance(&D::exact(4), &D::LowerBound { low: 8 }),
            D::exact(8)
        );
        assert_eq!(predicted_distance(&D::exact(1), &D::exact(2)), D::exact(2));
        assert_eq!(
            predicted_distance(&D::LowerBound { low: 3 }, &D::exact(8)),
            D::Interval { low: 6, high: 8, witness: None }
        );
        assert_eq!(
            predicted_distance(&D::LowerBound { low: 5 }, &D::LowerBound { low: 10 }),
            D::LowerBound { low: 10 }
        );
        // zero-code components act as +infinity
        assert_eq!(predicted_distance(&D::exact(2), &D::NoNonzeroWords), D::exact(4));
        assert_eq!(
            predicted_distance(&D::NoNonzeroWords, &D::NoNonzeroWords),
            D::NoNonzeroWords
        );
    }

    #[test]
    fn subcode_property() {
        let f = gf2();
        let cc = vanlint_combine(&f, 7, &Poly::x_minus_one(&f), &m_beta_7(&f)).unwrap();
        // every generator row of C2 lies in C1
        let g = cc.c2().generator_matrix();
        for r in 0..g.rows() {
            assert!(cc.c1().contains(g.row(r)).unwrap());
        }
    }

    #[test]
    fn equivalence_small_cases() {
        let f = gf2();
        assert!(equivalence_check(&f, 7, &Poly::x_minus_one(&f), &m_beta_7(&f)).unwrap());

        // g2 = 1: C2 = C1, distributions still match
        assert!(equivalence_check(&f, 7, &m_beta_7(&f), &Poly::one(&f)).unwrap());

        // (4, 3): x^3 - 1 over GF(4) splits into three linear factors
        let f4 = field_create(2).unwrap();
        let e4 = ext_field(&f4, 1).unwrap();
        let factors = factor_xn_minus_1(&e4, 3, &f4).unwrap();
        let g2 = factors[&1].clone();
        assert!(equivalence_check(&f4, 3, &Poly::x_minus_one(&f4), &g2).unwrap());
    }
}
