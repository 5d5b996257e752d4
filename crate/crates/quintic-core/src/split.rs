//! Split a depressed quintic into a quadratic and a cubic factor using a
//! resolvent root k: x⁵+Cx³+Dx²+Ex+F = (x² − kx + n)(x³ + kx² + lx + m).
//!
//! Given k and the pair product n, the remaining coefficients follow from
//! matching terms: l = C − n + k² and m = D − nk + lk. The product relation
//! mn = F is kept as a cross-check rather than used to compute m, so a
//! near-zero n never divides anything.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::poly::{DensePolynomial, DepressedQuintic};
use crate::resolvent::{self, build_resolvent};
use crate::roots::{real_roots, RootSet, DEFAULT_IMAG_TOL};

/// Splits whose recomposition residual exceeds this are rejected outright.
pub const RESIDUAL_CEILING: f64 = 1e-6;
/// Residuals below this mark a split as clean rather than merely acceptable.
pub const CLEAN_RESIDUAL: f64 = 1e-9;
/// |Resolvent(k)| relative to the coefficient scale above which k is not
/// accepted as a resolvent root at all.
pub const ROOT_CHECK_TOL: f64 = 1e-6;

/// How the pair product n was determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NSource {
    /// Explicit formula n = (2(k⁵+Ck³+Dk²+Ek) − F)/(5k³+Ck−D).
    Formula,
    /// Branch of the quadratic n² − (3k²+C)n + (k⁴+Ck²+Dk+E) = 0, selected
    /// by recomposition residual after the explicit formula degenerated.
    FallbackBranch(usize),
}

/// A quadratic × cubic factorization of a depressed quintic.
#[derive(Clone, Debug)]
pub struct SplitResult {
    pub k: Complex64,
    pub n: Complex64,
    pub l: Complex64,
    pub m: Complex64,
    /// x² − kx + n
    pub quadratic: DensePolynomial,
    /// x³ + kx² + lx + m
    pub cubic: DensePolynomial,
    /// Max of the recomposition coefficient residual and, when n ≠ 0, the
    /// relative defect of the cross-relation mn = F.
    pub residual: f64,
    pub n_source: NSource,
}

impl SplitResult {
    pub fn is_clean(&self) -> bool {
        self.residual < CLEAN_RESIDUAL
    }
}

pub(crate) fn rational_to_c64(r: &BigRational) -> Complex64 {
    Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
}

fn assemble(dq: &DepressedQuintic, k: Complex64, n: Complex64, source: NSource) -> SplitResult {
    let [c, d, _, f] = dq.coefficients_f64();
    let l = c - n + k * k;
    let m = d - n * k + l * k;
    let one = Complex64::new(1.0, 0.0);
    let quadratic = DensePolynomial::new(vec![n, -k, one]);
    let cubic = DensePolynomial::new(vec![m, l, k, one]);
    let mut residual = (&quadratic * &cubic).residual_norm(&dq.to_dense());
    if n != Complex64::new(0.0, 0.0) {
        let cross = (m * n - f).norm() / (1.0 + f.abs());
        residual = residual.max(cross);
    }
    SplitResult { k, n, l, m, quadratic, cubic, residual, n_source: source }
}

/// Split at a specific resolvent root k.
///
/// The pair product comes from the explicit formula where its denominator is
/// healthy; otherwise both fallback branches are tried and judged by
/// recomposition residual. A fallback branch with n ≈ 0 is rejected: the
/// product relation mn = F cannot certify m there, which is exactly the x⁵,
/// k = 0 degeneracy.
pub fn split(dq: &DepressedQuintic, k: Complex64) -> Result<SplitResult, Error> {
    let res_dense = build_resolvent(dq).to_dense();
    let value = res_dense.eval(k).norm();
    let scale = res_dense.eval_scale(k);
    let relative = if scale == 0.0 { value } else { value / scale };
    if relative > ROOT_CHECK_TOL {
        return Err(Error::NotAResolventRoot { relative_magnitude: relative });
    }

    match resolvent::n_from_k(dq, k) {
        Ok(params) => Ok(assemble(dq, k, params.n, NSource::Formula)),
        Err(degenerate @ Error::DegenerateDenominator { .. }) => {
            let branches = resolvent::n_fallback(dq, k);
            let n_floor = 1e-12 * (1.0 + k.norm() * k.norm());
            let best = branches
                .iter()
                .enumerate()
                .filter(|(_, p)| p.n.norm() > n_floor)
                .map(|(i, p)| assemble(dq, k, p.n, NSource::FallbackBranch(i)))
                .min_by(|a, b| a.residual.total_cmp(&b.residual));
            match best {
                Some(split) if split.residual <= RESIDUAL_CEILING => Ok(split),
                _ => Err(degenerate),
            }
        }
        Err(other) => Err(other),
    }
}

/// Evaluate every resolvent root as a split candidate and keep the best.
///
/// Real candidates are tried first (a real pair sum keeps both factors
/// real-coefficient for real quintics), each group ordered by descending
/// denominator magnitude. Candidates whose denominator trips the degeneracy
/// guard are skipped. The first clean split (residual below
/// [`CLEAN_RESIDUAL`]) in that preference order wins, since clean splits differ
/// only by rounding noise, so comparing their residuals would hand the
/// choice to that noise. If nothing is clean, the minimal residual wins,
/// ties going to the larger denominator magnitude.
pub fn choose_split_root(dq: &DepressedQuintic, rs: &RootSet) -> Result<SplitResult, Error> {
    let reals: Vec<Complex64> = real_roots(rs, DEFAULT_IMAG_TOL)
        .into_iter()
        .map(|r| Complex64::new(r, 0.0))
        .collect();
    let complexes: Vec<Complex64> = rs
        .roots
        .iter()
        .filter(|z| z.im.abs() >= DEFAULT_IMAG_TOL * (1.0 + z.re.abs()))
        .copied()
        .collect();

    let mut candidates: Vec<(Complex64, f64)> = Vec::with_capacity(rs.roots.len());
    for group in [reals, complexes] {
        let mut entries: Vec<(Complex64, f64)> = group
            .into_iter()
            .map(|k| (k, resolvent::denominator(dq, k).norm()))
            .collect();
        entries.sort_by(|a, b| b.1.total_cmp(&a.1));
        candidates.extend(entries);
    }

    let total = candidates.len();
    let mut best: Option<SplitResult> = None;
    for (k, denom_mag) in candidates {
        if denom_mag < resolvent::denominator_threshold(dq, k) {
            continue; // degeneracy guard
        }
        let Ok(candidate) = split(dq, k) else { continue };
        if candidate.residual > RESIDUAL_CEILING {
            continue;
        }
        if candidate.is_clean() {
            return Ok(candidate);
        }
        let better = match &best {
            None => true,
            Some(current) => {
                candidate.residual < current.residual
                    || (candidate.residual == current.residual
                        && denom_mag > resolvent::denominator(dq, current.k).norm())
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or(Error::NoViableSplit { candidates: total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DepressedQuintic;
    use crate::roots::find_all_roots_default;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn integer_witness_split_is_exact() {
        // x^5 - 5x^3 + 4x at k = 3: quadratic x^2 - 3x + 2, cubic
        // x^3 + 3x^2 + 2x, every coefficient an exact small integer.
        let dq = DepressedQuintic::from_integers(-5, 0, 4, 0);
        let s = split(&dq, c(3.0, 0.0)).unwrap();
        assert_eq!(s.quadratic, DensePolynomial::from_real(&[2.0, -3.0, 1.0]));
        assert_eq!(s.cubic, DensePolynomial::from_real(&[0.0, 2.0, 3.0, 1.0]));
        assert_eq!(s.residual, 0.0);
        assert_eq!(s.n_source, NSource::Formula);
        assert!(s.is_clean());
    }

    #[test]
    fn split_x5_plus_x_plus_3() {
        let dq = DepressedQuintic::from_integers(0, 0, 1, 3);
        #[allow(clippy::excessive_precision)]
        let k = c(2.083_759_079_224_164_573_6, 0.0); // 20-digit reference value
        let s = split(&dq, k).unwrap();
        // n = (2(k^5+k)-3)/(5k^3), l = k^2 - n, m = 3/n up to the cross-check.
        assert!((s.n - c(1.762_628_568_403_480_8, 0.0)).norm() < 1e-12);
        assert!((s.l - c(2.579_423_331_845_657_3, 0.0)).norm() < 1e-12);
        assert!((s.m - c(1.702_003_504_185_389, 0.0)).norm() < 1e-12);
        assert!(s.residual < 1e-10, "residual {}", s.residual);
    }

    #[test]
    fn complex_pair_sum_also_splits() {
        // k = r2 + r4 for x^5 + x + 3 is genuinely complex; the factors pick
        // up complex coefficients but still recompose the quintic.
        let dq = DepressedQuintic::from_integers(0, 0, 1, 3);
        let resolvent_roots =
            find_all_roots_default(&build_resolvent(&dq).to_dense()).unwrap();
        let k = *resolvent_roots
            .roots
            .iter()
            .find(|z| z.im.abs() > 0.1)
            .expect("complex resolvent root");
        let s = split(&dq, k).unwrap();
        assert!(s.residual < 1e-10, "residual {}", s.residual);
        assert!(s.quadratic.coefficients().iter().any(|c| c.im.abs() > 0.1));
    }

    #[test]
    fn x5_at_zero_is_degenerate() {
        let dq = DepressedQuintic::from_integers(0, 0, 0, 0);
        let err = split(&dq, Complex64::new(0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::DegenerateDenominator { .. }));
    }

    #[test]
    fn rejects_non_root() {
        let dq = DepressedQuintic::from_integers(-5, 0, 4, 0);
        let err = split(&dq, c(10.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotAResolventRoot { .. }));
    }

    #[test]
    fn fallback_branch_selected_by_residual() {
        // k = 0 is a genuine resolvent root of x^5 - 5x^3 + 4x (pairs {1,-1}
        // and {2,-2}) with a vanishing denominator; the fallback branches are
        // n ∈ {-1, -4} and both recompose exactly.
        let dq = DepressedQuintic::from_integers(-5, 0, 4, 0);
        let s = split(&dq, Complex64::new(0.0, 0.0)).unwrap();
        assert!(matches!(s.n_source, NSource::FallbackBranch(_)));
        assert_eq!(s.residual, 0.0);
    }

    #[test]
    fn choose_on_integer_witness() {
        let dq = DepressedQuintic::from_integers(-5, 0, 4, 0);
        let resolvent_roots =
            find_all_roots_default(&build_resolvent(&dq).to_dense()).unwrap();
        let s = choose_split_root(&dq, &resolvent_roots).unwrap();
        assert_eq!(s.residual, 0.0);
        // The degeneracy guard removes k ∈ {0, ±1} (denominator 5k^3 - 5k
        // vanishes there), so the winner comes from {±2, ±3}.
        assert!(s.k.im == 0.0 && s.k.re.abs() > 1.5);
    }

    #[test]
    fn choose_on_x5_plus_x_plus_3() {
        let dq = DepressedQuintic::from_integers(0, 0, 1, 3);
        let resolvent_roots =
            find_all_roots_default(&build_resolvent(&dq).to_dense()).unwrap();
        let s = choose_split_root(&dq, &resolvent_roots).unwrap();
        assert!((s.k - c(2.083_759_079_224_164_6, 0.0)).norm() < 1e-10, "k = {}", s.k);
        assert!(s.residual < 1e-10);
    }

    #[test]
    fn choose_handles_zero_root_quintic() {
        // x^5 + x^3 + x has 0 among its roots; a valid split still exists
        // through a pair that avoids it.
        let dq = DepressedQuintic::from_integers(1, 0, 1, 0);
        let resolvent_roots =
            find_all_roots_default(&build_resolvent(&dq).to_dense()).unwrap();
        let s = choose_split_root(&dq, &resolvent_roots).unwrap();
        assert!(s.residual < 1e-9, "residual {}", s.residual);
    }

    #[test]
    fn no_viable_split_for_x5() {
        let dq = DepressedQuintic::from_integers(0, 0, 0, 0);
        let resolvent_roots =
            find_all_roots_default(&build_resolvent(&dq).to_dense()).unwrap();
        let err = choose_split_root(&dq, &resolvent_roots).unwrap_err();
        assert!(matches!(err, Error::NoViableSplit { .. }));
    }
}
