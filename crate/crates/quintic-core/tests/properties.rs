//! Property tests for the algebraic invariants: polynomial arithmetic laws,
//! exact depression round trips, builder equivalence, rootfinder
//! reconstruction, and Vieta closure of the closed-form solvers.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use quintic_core::poly::{DensePolynomial, DepressedQuintic, GeneralQuintic};
use quintic_core::resolvent::{build_resolvent, build_resolvent_product_form, n_from_k};
use quintic_core::roots::find_all_roots_default;
use quintic_core::closed_form::{solve_cubic, solve_quadratic};

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=20)
        .prop_map(|(num, den)| BigRational::new(BigInt::from(num), BigInt::from(den)))
}

fn complex(limit: f64) -> impl Strategy<Value = Complex64> {
    (-limit..limit, -limit..limit).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly(max_len: usize) -> impl Strategy<Value = DensePolynomial> {
    prop::collection::vec(complex(10.0), 1..=max_len).prop_map(DensePolynomial::new)
}

proptest! {
    #[test]
    fn mul_commutes(p in poly(8), q in poly(8)) {
        // Commutative up to rounding: swapping operands permutes the
        // convolution's summation order.
        let ab = &p * &q;
        let ba = &q * &p;
        prop_assert!(ab.residual_norm(&ba) < 1e-13);
    }

    #[test]
    fn mul_associates(p in poly(5), q in poly(5), r in poly(5)) {
        let left = &(&p * &q) * &r;
        let right = &p * &(&q * &r);
        prop_assert!(left.residual_norm(&right) < 1e-12);
    }

    #[test]
    fn mul_degree_is_additive(p in poly(8), q in poly(8)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn eval_distributes_over_mul(p in poly(6), q in poly(6), x in complex(2.0)) {
        let lhs = (&p * &q).eval(x);
        let rhs = p.eval(x) * q.eval(x);
        // Relative to the evaluation scale, which stays honest when x sits
        // near a root and the values themselves nearly vanish.
        let scale = 1.0 + p.eval_scale(x) * q.eval_scale(x);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn depression_round_trip_exact(
        a4 in rational(), a3 in rational(), a2 in rational(),
        a1 in rational(), a0 in rational(),
    ) {
        let q = GeneralQuintic::new(a4, a3, a2, a1, a0);
        let d = q.depress();
        let back = d.to_exact_polynomial().taylor_shift(&d.shift);
        prop_assert_eq!(back, q.to_exact_polynomial());
    }

    #[test]
    fn builders_agree_exactly(
        c in rational(), d in rational(), e in rational(), f in rational(),
    ) {
        let dq = DepressedQuintic::new(c, d, e, f);
        let expanded = build_resolvent(&dq);
        let product = build_resolvent_product_form(&dq);
        prop_assert_eq!(expanded.polynomial(), product.polynomial());
    }

    #[test]
    fn n_satisfies_its_defining_relation_at_resolvent_roots(
        c in -5.0f64..5.0, d in -5.0f64..5.0, e in -5.0f64..5.0, f in -5.0f64..5.0,
    ) {
        // The explicit n formula lands on the n(3k² − n + C) = k⁴+Ck²+Dk+E
        // branch exactly when k annihilates the resolvent; that is what the
        // resolvent encodes. Check it at every well-conditioned root.
        let dq = DepressedQuintic::new(
            BigRational::from_float(c).unwrap(),
            BigRational::from_float(d).unwrap(),
            BigRational::from_float(e).unwrap(),
            BigRational::from_float(f).unwrap(),
        );
        let resolvent = build_resolvent(&dq);
        let rs = match find_all_roots_default(&resolvent.to_dense()) {
            Ok(rs) => rs,
            Err(_) => return Err(TestCaseError::reject("no convergence")),
        };
        for &k in &rs.roots {
            if let Ok(params) = n_from_k(&dq, k) {
                // Stay well out of the near-degenerate shell: the root error
                // in k enters n amplified by 1/denominator, so the relation
                // residual only reaches 1e-10 for healthy denominators.
                if params.denominator_magnitude > 1.0 {
                    prop_assert!(
                        params.relation_residual(&dq) < 1e-10,
                        "residual {} at k = {k} (denominator {})",
                        params.relation_residual(&dq),
                        params.denominator_magnitude
                    );
                }
            }
        }
    }

    #[test]
    fn roots_reconstruct_polynomial(p in poly(11)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        // Avoid leading coefficients so tiny that normalization is ill-posed.
        prop_assume!(p.leading_coeff().unwrap().norm() > 1e-3);
        let rs = match find_all_roots_default(&p) {
            Ok(rs) => rs,
            Err(_) => return Err(TestCaseError::reject("no convergence")),
        };
        let lead = p.leading_coeff().unwrap();
        let rebuilt = DensePolynomial::new(
            DensePolynomial::from_roots(&rs.roots)
                .coefficients()
                .iter()
                .map(|&c| c * lead)
                .collect(),
        );
        prop_assert!(rebuilt.residual_norm(&p) < 1e-8, "residual {}", rebuilt.residual_norm(&p));
    }

    #[test]
    fn real_polynomials_have_conjugate_closed_roots(
        coeffs in prop::collection::vec(-10.0f64..10.0, 2..=11),
    ) {
        let p = DensePolynomial::from_real(&coeffs);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        prop_assume!(p.leading_coeff().unwrap().norm() > 1e-3);
        let rs = match find_all_roots_default(&p) {
            Ok(rs) => rs,
            Err(_) => return Err(TestCaseError::reject("no convergence")),
        };
        for &z in &rs.roots {
            let nearest = rs
                .roots
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            prop_assert!(nearest < 1e-9, "conjugate of {z} missing by {nearest:e}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quadratic_vieta_closure(b in complex(10.0), c in complex(10.0)) {
        let r = solve_quadratic(b, c);
        let sum = r.r1 + r.r2;
        let prod = r.r1 * r.r2;
        prop_assert!((sum + b).norm() <= 1e-11 * (1.0 + b.norm()), "sum {} vs -b {}", sum, -b);
        prop_assert!((prod - c).norm() <= 1e-11 * (1.0 + c.norm()), "prod {} vs c {}", prod, c);
    }

    #[test]
    fn cubic_vieta_closure(p2 in complex(10.0), p1 in complex(10.0), p0 in complex(10.0)) {
        let r = solve_cubic(p2, p1, p0);
        let e1 = r.r1 + r.r2 + r.r3;
        let e2 = r.r1 * r.r2 + r.r1 * r.r3 + r.r2 * r.r3;
        let e3 = r.r1 * r.r2 * r.r3;
        // Scale by the root magnitudes: the symmetric functions accumulate
        // them even though the coefficients stay in the sampled box.
        let big = 1.0 + [r.r1, r.r2, r.r3].iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert!((e1 + p2).norm() <= 1e-11 * (1.0 + p2.norm()) * big);
        prop_assert!((e2 - p1).norm() <= 1e-11 * (1.0 + p1.norm()) * big * big);
        prop_assert!((e3 + p0).norm() <= 1e-11 * (1.0 + p0.norm()) * big * big);
    }
}
