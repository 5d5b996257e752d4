//! Generalized hypergeometric series pFq with explicit convergence-domain
//! enforcement.
//!
//! The split parameter k of the x⁵ + x + 3 example has a known
//! representation as a three-term ₄F₃ combination, but at the argument that
//! representation calls for (−253125/256, magnitude ≈ 988.8) the series
//! diverges: for p = q + 1 the sum only converges for |z| < 1. This module
//! therefore evaluates the series strictly inside its domain and reports
//! [`Error::DivergentArgument`] outside it; the solver pipeline never uses it
//! to obtain k, which comes from the resolvent numerically.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
// See closed_form: required for f64 math under no_std, shadowed otherwise.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;

pub const DEFAULT_SERIES_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Parameters of ₚFq(upper; lower; z): rational Pochhammer parameters, a
/// complex argument, and the stopping controls.
#[derive(Clone, Debug)]
pub struct PfqParams {
    pub upper: Vec<BigRational>,
    pub lower: Vec<BigRational>,
    pub z: Complex64,
    pub tol: f64,
    pub max_terms: usize,
}

impl PfqParams {
    pub fn new(upper: Vec<BigRational>, lower: Vec<BigRational>, z: Complex64) -> Self {
        Self { upper, lower, z, tol: DEFAULT_SERIES_TOL, max_terms: DEFAULT_MAX_TERMS }
    }
}

/// A converged partial sum with diagnostics.
#[derive(Clone, Copy, Debug)]
pub struct PfqSum {
    pub value: Complex64,
    /// Terms actually accumulated (the n = 0 term counts).
    pub terms: usize,
    /// Geometric bound on the truncation error; zero for terminating series.
    pub tail_bound: f64,
}

fn is_nonpositive_integer(r: &BigRational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Sum the series by the term-ratio recurrence
/// t ← t · ∏(aᵢ+n)/∏(bⱼ+n) · z/(n+1), one multiply per term.
///
/// Preconditions follow the classical convergence domain: p ≤ q converges
/// everywhere, p = q+1 needs |z| < 1, anything else only terminates. A
/// non-positive-integer upper parameter terminates the series and lifts the
/// domain restriction.
pub fn pfq(params: &PfqParams) -> Result<PfqSum, Error> {
    for (index, b) in params.lower.iter().enumerate() {
        if is_nonpositive_integer(b) {
            return Err(Error::PoleParameter { index });
        }
    }

    let p = params.upper.len();
    let q = params.lower.len();
    let terminating = params.upper.iter().any(is_nonpositive_integer);
    let magnitude = params.z.norm();
    if !terminating {
        let divergent = (p == q + 1 && magnitude >= 1.0) || (p > q + 1 && magnitude > 0.0);
        if divergent {
            return Err(Error::DivergentArgument { magnitude });
        }
    }

    let upper: Vec<f64> = params.upper.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
    let lower: Vec<f64> = params.lower.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();

    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for n in 0..params.max_terms {
        let nf = n as f64;
        // A zero Pochhammer factor ends the series exactly.
        if upper.iter().any(|a| a + nf == 0.0) {
            return Ok(PfqSum { value: sum, terms: n + 1, tail_bound: 0.0 });
        }
        let mut ratio = params.z / (nf + 1.0);
        for a in &upper {
            ratio *= a + nf;
        }
        for b in &lower {
            ratio /= b + nf;
        }
        term *= ratio;
        sum += term;
        if term.norm() <= params.tol * sum.norm() {
            // Bound the tail geometrically: for p = q+1 the step ratio tends
            // to |z|, so the larger of |z| and the last observed ratio caps
            // every remaining step.
            let rho = if p == q + 1 { magnitude.max(ratio.norm()) } else { ratio.norm() };
            let tail_bound =
                if rho < 1.0 { term.norm() * rho / (1.0 - rho) } else { f64::INFINITY };
            return Ok(PfqSum { value: sum, terms: n + 2, tail_bound });
        }
    }
    Err(Error::NoConvergence { iterations: params.max_terms })
}

/// The three ₄F₃ parameter sets of the pair-sum series representation, each
/// with its scalar weight applied in [`pair_sum_candidate`].
pub fn pair_sum_parameter_sets() -> [(Vec<BigRational>, Vec<BigRational>); 3] {
    let r = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    [
        (
            vec![r(-1, 20), r(3, 20), r(7, 20), r(11, 20)],
            vec![r(1, 4), r(1, 2), r(3, 4)],
        ),
        (
            vec![r(-9, 20), r(13, 20), r(17, 20), r(21, 20)],
            vec![r(3, 4), r(5, 4), r(3, 2)],
        ),
        (
            vec![r(1, 5), r(2, 5), r(3, 5), r(4, 5)],
            vec![r(1, 2), r(3, 4), r(5, 4)],
        ),
    ]
}

/// The argument the closed-form pair-sum representation calls for; far
/// outside the series' convergence disk.
pub fn pair_sum_native_argument() -> BigRational {
    BigRational::new(BigInt::from(-253_125), BigInt::from(256))
}

/// Evaluate the three-term combination
/// √2·₄F₃(…) − 45/(16√2)·₄F₃(…) + (3/2)·₄F₃(…) at a caller-supplied
/// argument with |z| < 1.
///
/// This exists to regression-test the term plumbing; the argument the
/// closed form itself calls for is inadmissible and yields
/// [`Error::DivergentArgument`].
pub fn pair_sum_candidate(z: Complex64, tol: f64, max_terms: usize) -> Result<PfqSum, Error> {
    let sets = pair_sum_parameter_sets();
    let mut sums = [Complex64::zero(); 3];
    let mut terms = 0usize;
    let mut tails = [0.0f64; 3];
    for (i, (upper, lower)) in sets.into_iter().enumerate() {
        let mut params = PfqParams::new(upper, lower, z);
        params.tol = tol;
        params.max_terms = max_terms;
        let s = pfq(&params)?;
        sums[i] = s.value;
        terms = terms.max(s.terms);
        tails[i] = s.tail_bound;
    }
    let sqrt2 = 2.0f64.sqrt();
    let w = [sqrt2, -45.0 / (16.0 * sqrt2), 1.5];
    let value = w[0] * sums[0] + w[1] * sums[1] + w[2] * sums[2];
    let tail_bound = w[0].abs() * tails[0] + w[1].abs() * tails[1] + w[2].abs() * tails[2];
    Ok(PfqSum { value, terms, tail_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn r(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Independent oracle: exact rational term coefficients from running
    /// Pochhammer numerator/denominator products, summed against explicit
    /// powers of z. No term-ratio recurrence anywhere.
    fn direct_sum(upper: &[BigRational], lower: &[BigRational], z: Complex64, terms: usize) -> Complex64 {
        let mut total = Complex64::zero();
        let mut numerator = BigRational::one(); // ∏ (aᵢ)ₙ
        let mut denominator = BigRational::one(); // ∏ (bⱼ)ₙ · n!
        for n in 0..terms {
            let coeff = &numerator / &denominator;
            let zn = (0..n).fold(Complex64::new(1.0, 0.0), |acc, _| acc * z);
            total += coeff.to_f64().unwrap() * zn;
            for a in upper {
                numerator *= a + r(n as i64, 1);
            }
            for b in lower {
                denominator *= b + r(n as i64, 1);
            }
            denominator *= r(n as i64 + 1, 1);
        }
        total
    }

    /// ∏(a)ₙ / ∏(b)ₙ / n! as an exact rational.
    fn exact_coefficient(upper: &[BigRational], lower: &[BigRational], n: usize) -> BigRational {
        let mut c = BigRational::one();
        for a in upper {
            c *= pochhammer(a, n);
        }
        for b in lower {
            c /= pochhammer(b, n);
        }
        for i in 1..=n {
            c /= r(i as i64, 1);
        }
        c
    }

    fn pochhammer(a: &BigRational, n: usize) -> BigRational {
        let mut p = BigRational::one();
        for i in 0..n {
            p *= a + r(i as i64, 1);
        }
        p
    }

    #[test]
    fn zero_upper_parameter_terminates_at_one() {
        let params = PfqParams::new(vec![r(0, 1), r(1, 2)], vec![r(1, 3)], c(0.7, 0.2));
        let s = pfq(&params).unwrap();
        assert_eq!(s.value, c(1.0, 0.0));
        assert_eq!(s.terms, 1);
        assert_eq!(s.tail_bound, 0.0);
    }

    #[test]
    fn exponential_series_converges_everywhere() {
        // ₀F₀(;;z) = e^z; p ≤ q has no argument restriction.
        let params = PfqParams::new(vec![], vec![], c(3.0, 0.0));
        let s = pfq(&params).unwrap();
        assert!((s.value - c(3.0f64.exp(), 0.0)).norm() < 1e-13);
        assert!(s.tail_bound < 1e-12);
    }

    #[test]
    fn log_identity() {
        // ₂F₁(1,1;2;z) = -ln(1-z)/z, so at z = 1/2 the sum is 2 ln 2.
        let params = PfqParams::new(vec![r(1, 1), r(1, 1)], vec![r(2, 1)], c(0.5, 0.0));
        let s = pfq(&params).unwrap();
        let expected = 2.0 * core::f64::consts::LN_2;
        assert!((s.value - c(expected, 0.0)).norm() < 1e-12, "value {}", s.value);
    }

    #[test]
    fn native_argument_is_divergent() {
        let [set0, _, _] = pair_sum_parameter_sets();
        let z = pair_sum_native_argument().to_f64().unwrap();
        let params = PfqParams::new(set0.0, set0.1, c(z, 0.0));
        let err = pfq(&params).unwrap_err();
        match err {
            Error::DivergentArgument { magnitude } => {
                assert!((magnitude - 988.769_531_25).abs() < 1e-9)
            }
            other => panic!("expected DivergentArgument, got {other:?}"),
        }
    }

    #[test]
    fn pair_sum_candidate_rejects_native_argument() {
        let z = pair_sum_native_argument().to_f64().unwrap();
        let err =
            pair_sum_candidate(c(z, 0.0), DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS).unwrap_err();
        assert!(matches!(err, Error::DivergentArgument { .. }));
    }

    #[test]
    fn pole_parameter_rejected() {
        let params = PfqParams::new(vec![r(1, 2)], vec![r(-1, 1), r(1, 2)], c(0.1, 0.0));
        assert_eq!(pfq(&params).unwrap_err(), Error::PoleParameter { index: 0 });
    }

    #[test]
    fn max_terms_exhaustion() {
        let mut params = PfqParams::new(vec![r(1, 1), r(1, 1)], vec![r(2, 1)], c(0.99, 0.0));
        params.max_terms = 10;
        assert!(matches!(pfq(&params).unwrap_err(), Error::NoConvergence { .. }));
    }

    #[test]
    fn combination_at_zero() {
        let s = pair_sum_candidate(Complex64::zero(), DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS)
            .unwrap();
        let sqrt2 = 2.0f64.sqrt();
        let expected = sqrt2 - 45.0 / (16.0 * sqrt2) + 1.5;
        assert!((s.value - c(expected, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn combination_matches_direct_summation() {
        let z = c(0.1, 0.0);
        let s = pair_sum_candidate(z, DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS).unwrap();
        let sqrt2 = 2.0f64.sqrt();
        let mut expected = Complex64::zero();
        for ((upper, lower), w) in pair_sum_parameter_sets()
            .into_iter()
            .zip([sqrt2, -45.0 / (16.0 * sqrt2), 1.5])
        {
            // 64 terms put the oracle's own truncation near 0.1^64, far
            // below the comparison tolerance.
            expected += w * direct_sum(&upper, &lower, z, 64);
        }
        assert!((s.value - expected).norm() < 1e-12, "{} vs {expected}", s.value);
        // Reference value: 0.97363005368571082 (30-digit arithmetic).
        assert!((s.value - c(0.973_630_053_685_710_8, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn combination_near_disk_edge_converges() {
        let s = pair_sum_candidate(c(-0.99, 0.0), DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS)
            .unwrap();
        assert!(s.terms < DEFAULT_MAX_TERMS);
        // Reference value: 0.534195562287428275 (30-digit arithmetic).
        assert!((s.value - c(0.534_195_562_287_428_3, 0.0)).norm() < 1e-10, "value {}", s.value);
    }

    #[test]
    fn recurrence_matches_pochhammer_exactly() {
        // The coefficient recurrence c ← c · ∏(a+n)/∏(b+n)/(n+1), run in
        // exact rationals, must reproduce the direct Pochhammer formula.
        for (upper, lower) in pair_sum_parameter_sets() {
            let mut c = BigRational::one();
            for n in 0..20usize {
                assert_eq!(c, exact_coefficient(&upper, &lower, n), "term {n}");
                let mut ratio = BigRational::one();
                for a in &upper {
                    ratio *= a + r(n as i64, 1);
                }
                for b in &lower {
                    ratio /= b + r(n as i64, 1);
                }
                ratio /= r(n as i64 + 1, 1);
                c *= ratio;
            }
        }
    }

    #[test]
    fn terminating_series_is_exact() {
        // ₂F₁(-2,1;1;z) = (1-z)²; at the dyadic z = 1/2 every float
        // operation is exact, so the partial sum equals 1/4 with no error.
        let params = PfqParams::new(vec![r(-2, 1), r(1, 1)], vec![r(1, 1)], c(0.5, 0.0));
        let s = pfq(&params).unwrap();
        assert_eq!(s.value, c(0.25, 0.0));
        assert_eq!(s.tail_bound, 0.0);
        // And as exact rationals via the oracle: Σ c_n z^n = (1-z)².
        let direct = direct_sum(&[r(-2, 1), r(1, 1)], &[r(1, 1)], c(0.5, 0.0), 3);
        assert_eq!(direct, c(0.25, 0.0));
    }

    #[test]
    fn terminating_series_beyond_unit_disk() {
        // Termination lifts the |z| < 1 restriction.
        let params = PfqParams::new(vec![r(-3, 1), r(2, 1)], vec![r(5, 2)], c(4.0, 0.0));
        let s = pfq(&params).unwrap();
        let expected = direct_sum(&[r(-3, 1), r(2, 1)], &[r(5, 2)], c(4.0, 0.0), 4);
        assert!((s.value - expected).norm() < 1e-12 * expected.norm());
    }

    #[test]
    fn tail_bound_dominates_true_remainder() {
        // Stop early with a loose tolerance and compare the reported bound
        // against the actual distance to the analytic value.
        for z in [0.4, -0.45, 0.25] {
            let mut params = PfqParams::new(vec![r(1, 1), r(1, 1)], vec![r(2, 1)], c(z, 0.0));
            params.tol = 1e-6;
            let s = pfq(&params).unwrap();
            let exact = -(1.0 - z).ln() / z;
            let remainder = (s.value - c(exact, 0.0)).norm();
            assert!(
                s.tail_bound >= remainder,
                "z = {z}: bound {} < remainder {remainder}",
                s.tail_bound
            );
        }
    }

    #[test]
    fn tail_bound_dominates_for_the_4f3_combination() {
        for z in [0.3, -0.4, 0.45] {
            let loose = pair_sum_candidate(c(z, 0.0), 1e-6, DEFAULT_MAX_TERMS).unwrap();
            let tight = pair_sum_candidate(c(z, 0.0), 1e-15, DEFAULT_MAX_TERMS).unwrap();
            let remainder = (loose.value - tight.value).norm();
            assert!(
                loose.tail_bound >= remainder,
                "z = {z}: bound {} < remainder {remainder}",
                loose.tail_bound
            );
        }
    }
}
