//! Dense univariate polynomials over complex floats and over exact rationals,
//! plus the quintic depression transform.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. Normalization strips trailing zero coefficients, so
//! the leading coefficient is nonzero unless the polynomial is identically
//! zero (represented by an empty vector).
//!
//! The two coefficient domains are deliberately one-way: exact rationals
//! convert to complex floats for root finding, never the other direction.
//! Resolvent construction stays exact; only root extraction rounds.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Polynomial with complex floating-point coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePolynomial {
    coeffs: Vec<Complex64>,
}

impl DensePolynomial {
    /// Build from ascending-degree coefficients; trailing exact zeros are stripped.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![Complex64::new(1.0, 0.0)] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.re == 0.0 && c.im == 0.0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Complex64 {
        self.coeffs.get(i).copied().unwrap_or_else(Complex64::zero)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// True when every coefficient has an exactly zero imaginary part.
    pub fn has_real_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Horner-scheme evaluation.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Backward-error scale at `x`: sum of |c_i| |x|^i.
    pub fn eval_scale(&self, x: Complex64) -> f64 {
        let ax = x.norm();
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * ax + c.norm();
        }
        acc
    }

    pub fn derivative(&self) -> DensePolynomial {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Self::new(coeffs)
    }

    /// Scale-relative coefficient distance: max over indices of
    /// |p_i - q_i| / (1 + max(|p_i|, |q_i|)), with implicit zero padding on
    /// degree mismatch. Zero iff the normalized coefficient lists agree.
    pub fn residual_norm(&self, other: &DensePolynomial) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut worst = 0.0f64;
        for i in 0..len {
            let a = self.coeff(i);
            let b = other.coeff(i);
            let r = (a - b).norm() / (1.0 + a.norm().max(b.norm()));
            worst = worst.max(r);
        }
        worst
    }

    /// Monic polynomial with the given roots, expanded by repeated convolution.
    pub fn from_roots(roots: &[Complex64]) -> DensePolynomial {
        let mut p = Self::one();
        for &r in roots {
            p = &p * &Self::new(vec![-r, Complex64::one()]);
        }
        p
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    /// Convolution product; degree is additive for nonzero operands.
    fn mul(self, rhs: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePolynomial::new(out)
    }
}

/// Polynomial with arbitrary-precision rational coefficients, ascending degree.
/// All arithmetic is closed under the rationals; nothing here ever rounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Substitute x -> x + t, i.e. return p(x + t). Synthetic-division Taylor
    /// shift; exact.
    pub fn taylor_shift(&self, t: &BigRational) -> ExactPolynomial {
        let n = self.coeffs.len();
        if n == 0 {
            return Self::zero();
        }
        let mut work = self.coeffs.clone();
        let mut out = vec![BigRational::zero(); n];
        // Repeated synthetic division by (x - t) yields the Taylor
        // coefficients of p about t, which are the coefficients of p(x + t).
        for slot in out.iter_mut() {
            let mut rem = BigRational::zero();
            for c in work.iter_mut().rev() {
                rem = rem * t + &*c;
                *c = rem.clone();
            }
            *slot = work.remove(0);
        }
        Self::new(out)
    }

    /// One-way exact-to-float conversion.
    pub fn to_dense(&self) -> DensePolynomial {
        DensePolynomial::new(
            self.coeffs
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
                .collect(),
        )
    }
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Monic quintic x⁵ + a₄x⁴ + a₃x³ + a₂x² + a₁x + a₀ with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralQuintic {
    pub a4: BigRational,
    pub a3: BigRational,
    pub a2: BigRational,
    pub a1: BigRational,
    pub a0: BigRational,
}

impl GeneralQuintic {
    pub fn new(
        a4: BigRational,
        a3: BigRational,
        a2: BigRational,
        a1: BigRational,
        a0: BigRational,
    ) -> Self {
        Self { a4, a3, a2, a1, a0 }
    }

    pub fn from_integers(a4: i64, a3: i64, a2: i64, a1: i64, a0: i64) -> Self {
        Self::new(rat(a4), rat(a3), rat(a2), rat(a1), rat(a0))
    }

    pub fn to_exact_polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::new(vec![
            self.a0.clone(),
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            BigRational::one(),
        ])
    }

    pub fn to_dense(&self) -> DensePolynomial {
        self.to_exact_polynomial().to_dense()
    }

    /// Quintic whose roots are this one's shifted by +s, i.e. p(x - s).
    pub fn shift_roots(&self, s: &BigRational) -> GeneralQuintic {
        let shifted = self.to_exact_polynomial().taylor_shift(&(-s.clone()));
        debug_assert!(shifted.coeff(5).is_one());
        GeneralQuintic::new(
            shifted.coeff(4),
            shifted.coeff(3),
            shifted.coeff(2),
            shifted.coeff(1),
            shifted.coeff(0),
        )
    }

    /// Eliminate the x⁴ term by the substitution y = x + a₄/5.
    ///
    /// Roots of the original equal roots of the depressed quintic minus the
    /// returned shift.
    pub fn depress(&self) -> DepressedQuintic {
        let shift = &self.a4 / rat(5);
        // p(y - shift) has zero y⁴ coefficient.
        let dep = self.to_exact_polynomial().taylor_shift(&(-shift.clone()));
        debug_assert!(dep.coeff(4).is_zero());
        debug_assert!(dep.coeff(5).is_one());
        DepressedQuintic {
            c: dep.coeff(3),
            d: dep.coeff(2),
            e: dep.coeff(1),
            f: dep.coeff(0),
            shift,
        }
    }
}

/// Depressed quintic x⁵ + Cx³ + Dx² + Ex + F together with the depression
/// shift (the substitution was x = y − shift).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedQuintic {
    pub c: BigRational,
    pub d: BigRational,
    pub e: BigRational,
    pub f: BigRational,
    pub shift: BigRational,
}

impl DepressedQuintic {
    /// A quintic already in depressed form (zero shift).
    pub fn new(c: BigRational, d: BigRational, e: BigRational, f: BigRational) -> Self {
        Self { c, d, e, f, shift: BigRational::zero() }
    }

    pub fn from_integers(c: i64, d: i64, e: i64, f: i64) -> Self {
        Self::new(rat(c), rat(d), rat(e), rat(f))
    }

    pub fn to_exact_polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::new(vec![
            self.f.clone(),
            self.e.clone(),
            self.d.clone(),
            self.c.clone(),
            BigRational::zero(),
            BigRational::one(),
        ])
    }

    pub fn to_dense(&self) -> DensePolynomial {
        self.to_exact_polynomial().to_dense()
    }

    /// (C, D, E, F) rounded to floats, in that order.
    pub fn coefficients_f64(&self) -> [f64; 4] {
        [
            self.c.to_f64().unwrap_or(f64::NAN),
            self.d.to_f64().unwrap_or(f64::NAN),
            self.e.to_f64().unwrap_or(f64::NAN),
            self.f.to_f64().unwrap_or(f64::NAN),
        ]
    }

    /// Depressed quintic whose roots are this one's multiplied by λ:
    /// (C, D, E, F) → (λ²C, λ³D, λ⁴E, λ⁵F).
    pub fn scale_roots(&self, lambda: &BigRational) -> DepressedQuintic {
        let l2 = lambda * lambda;
        let l3 = &l2 * lambda;
        let l4 = &l3 * lambda;
        let l5 = &l4 * lambda;
        DepressedQuintic::new(&self.c * l2, &self.d * l3, &self.e * l4, &self.f * l5)
    }
}
