//! The degree-10 pair-sum resolvent of a depressed quintic, built two
//! independent ways, and the companion pair-product n derived from a
//! resolvent root k.
//!
//! For a quintic with roots r₁..r₅ the resolvent's ten roots are exactly the
//! ten pairwise sums rᵢ + rⱼ (i < j). A root k of the resolvent is therefore
//! the sum of two quintic roots, and n below is their product; together they
//! determine the quadratic factor x² − kx + n.
//!
//! Both builders work in exact rational arithmetic so that their agreement
//! can be checked with equality rather than a tolerance.

use alloc::vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::poly::{rat, DepressedQuintic, ExactPolynomial};

/// Which construction produced the resolvent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolventSource {
    /// Direct expanded coefficient formulas.
    Expanded,
    /// Expansion of the product form
    /// (2(k⁵+Ck³+Dk²+Ek)−F)(13k⁵+6Ck³−5Dk²+(C²−2E)k+F−DC) − (k⁴+Ck²+Dk+E)(5k³+Ck−D)².
    ProductForm,
}

/// Monic degree-10 polynomial in k whose roots are the pairwise sums of the
/// quintic's roots. Coefficients are exact rationals, ascending degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolvent {
    poly: ExactPolynomial,
    pub source: ResolventSource,
}

impl Resolvent {
    pub fn polynomial(&self) -> &ExactPolynomial {
        &self.poly
    }

    /// The 11 coefficients, ascending degree. The k¹⁰ coefficient is 1.
    pub fn coefficients(&self) -> &[BigRational] {
        self.poly.coefficients()
    }

    pub fn to_dense(&self) -> crate::poly::DensePolynomial {
        self.poly.to_dense()
    }
}

/// Build the resolvent from the expanded coefficient formulas:
///
/// k¹⁰ + 3Ck⁸ + Dk⁷ + (3C²−3E)k⁶ + (2DC−11F)k⁵ + (C³−D²−2CE)k⁴
///     + (DC²−4DE−4CF)k³ + (7DF−CD²−4E²+EC²)k² + (4EF−FC²−D³)k
///     + (−F²+FDC−D²E)
pub fn build_resolvent(dq: &DepressedQuintic) -> Resolvent {
    let (c, d, e, f) = (&dq.c, &dq.d, &dq.e, &dq.f);
    let c2 = c * c;
    let d2 = d * d;

    let k0 = -(f * f) + f * d * c - &d2 * e;
    let k1 = rat(4) * e * f - f * &c2 - &d2 * d;
    let k2 = rat(7) * d * f - c * &d2 - rat(4) * e * e + e * &c2;
    let k3 = d * &c2 - rat(4) * d * e - rat(4) * c * f;
    let k4 = &c2 * c - &d2 - rat(2) * c * e;
    let k5 = rat(2) * d * c - rat(11) * f;
    let k6 = rat(3) * &c2 - rat(3) * e;
    let k7 = d.clone();
    let k8 = rat(3) * c;

    Resolvent {
        poly: ExactPolynomial::new(vec![
            k0,
            k1,
            k2,
            k3,
            k4,
            k5,
            k6,
            k7,
            k8,
            BigRational::zero(),
            rat(1),
        ]),
        source: ResolventSource::Expanded,
    }
}

/// Build the resolvent by expanding the product form in exact arithmetic.
/// Must agree with [`build_resolvent`] coefficient-for-coefficient.
pub fn build_resolvent_product_form(dq: &DepressedQuintic) -> Resolvent {
    let (c, d, e, f) = (&dq.c, &dq.d, &dq.e, &dq.f);

    // 2(k⁵ + Ck³ + Dk² + Ek) − F
    let first = ExactPolynomial::new(vec![
        -f.clone(),
        rat(2) * e,
        rat(2) * d,
        rat(2) * c,
        BigRational::zero(),
        rat(2),
    ]);
    // 13k⁵ + 6Ck³ − 5Dk² + (C² − 2E)k + F − DC
    let second = ExactPolynomial::new(vec![
        f - d * c,
        c * c - rat(2) * e,
        rat(-5) * d,
        rat(6) * c,
        BigRational::zero(),
        rat(13),
    ]);
    // k⁴ + Ck² + Dk + E
    let quartic = ExactPolynomial::new(vec![
        e.clone(),
        d.clone(),
        c.clone(),
        BigRational::zero(),
        rat(1),
    ]);
    // 5k³ + Ck − D
    let denom = ExactPolynomial::new(vec![-d.clone(), c.clone(), BigRational::zero(), rat(5)]);

    let poly = first.mul(&second).sub(&quartic.mul(&denom.mul(&denom)));
    Resolvent { poly, source: ResolventSource::ProductForm }
}

/// Pair-sum candidate k with its companion pair product n and the magnitude
/// of the denominator that produced n.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitParameters {
    pub k: Complex64,
    pub n: Complex64,
    pub denominator_magnitude: f64,
}

impl SplitParameters {
    /// Relative residual of the defining relation
    /// n(3k² − n + C) = k⁴ + Ck² + Dk + E.
    pub fn relation_residual(&self, dq: &DepressedQuintic) -> f64 {
        let [c, d, e, _] = dq.coefficients_f64();
        let k = self.k;
        let n = self.n;
        let lhs = n * (3.0 * k * k - n + c);
        let rhs = k * k * k * k + c * k * k + d * k + e;
        (lhs - rhs).norm() / (1.0 + rhs.norm())
    }
}

/// Degeneracy guard for the explicit n formula's denominator 5k³ + Ck − D.
/// The denominator vanishes on a measure-zero set of k where the quadratic
/// fallback is still valid.
pub fn denominator_threshold(dq: &DepressedQuintic, k: Complex64) -> f64 {
    let [c, d, _, _] = dq.coefficients_f64();
    let s = 1.0 + k.norm();
    1e-8 * s * s * s * (1.0 + c.abs().max(d.abs()))
}

pub(crate) fn denominator(dq: &DepressedQuintic, k: Complex64) -> Complex64 {
    let [c, d, _, _] = dq.coefficients_f64();
    5.0 * k * k * k + c * k - d
}

/// Explicit pair product: n = (2(k⁵+Ck³+Dk²+Ek) − F) / (5k³ + Ck − D).
///
/// Fails with [`Error::DegenerateDenominator`] when the denominator magnitude
/// drops below the guard threshold; callers should fall back to
/// [`n_fallback`].
pub fn n_from_k(dq: &DepressedQuintic, k: Complex64) -> Result<SplitParameters, Error> {
    let [c, d, e, f] = dq.coefficients_f64();
    let den = denominator(dq, k);
    let magnitude = den.norm();
    let threshold = denominator_threshold(dq, k);
    if magnitude < threshold {
        return Err(Error::DegenerateDenominator { magnitude, threshold });
    }
    let k2 = k * k;
    let k3 = k2 * k;
    let num = 2.0 * (k3 * k2 + c * k3 + d * k2 + e * k) - f;
    Ok(SplitParameters { k, n: num / den, denominator_magnitude: magnitude })
}

/// Both solutions of the quadratic the pair product always satisfies:
/// n² − (3k² + C)n + (k⁴ + Ck² + Dk + E) = 0.
///
/// Valid even where the explicit formula degenerates. The caller selects a
/// branch by recomposition residual; nothing here picks one.
pub fn n_fallback(dq: &DepressedQuintic, k: Complex64) -> [SplitParameters; 2] {
    let [c, d, e, _] = dq.coefficients_f64();
    let k2 = k * k;
    let b = -(3.0 * k2 + c);
    let q = k2 * k2 + c * k2 + d * k + e;
    let roots = crate::closed_form::solve_quadratic(b, q);
    let magnitude = denominator(dq, k).norm();
    [
        SplitParameters { k, n: roots.r1, denominator_magnitude: magnitude },
        SplitParameters { k, n: roots.r2, denominator_magnitude: magnitude },
    ]
}
