//! Closed-form radical solvers for quadratics and cubics over the complex
//! numbers, and the full quintic pipeline that chains depression, resolvent
//! root extraction, splitting, and these solvers.
//!
//! Everything works in complex arithmetic unconditionally: the split factors
//! may have complex coefficients when the chosen pair sum k is complex, so a
//! separate real-only path would just double the test surface.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;
// f64 math in no_std resolves through the Float trait (libm); in builds
// where some dependency links std, the inherent methods shadow it and this
// import goes quiet.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::poly::{DepressedQuintic, GeneralQuintic};
use crate::resolvent::{build_resolvent, Resolvent};
use crate::roots::{self, RootSet};
use crate::split::{self, SplitResult};

/// Roots of a monic quadratic x² + bx + c.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticRoots {
    pub r1: Complex64,
    pub r2: Complex64,
}

/// Roots of a monic cubic x³ + p₂x² + p₁x + p₀.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicRoots {
    pub r1: Complex64,
    pub r2: Complex64,
    pub r3: Complex64,
}

/// Solve x² + bx + c = 0.
///
/// Cancellation-stable: computes the root where b and the square root do not
/// cancel, then recovers the other from the product c.
pub fn solve_quadratic(b: Complex64, c: Complex64) -> QuadraticRoots {
    let mut s = (b * b - 4.0 * c).sqrt();
    // Align s with b so that b + s never cancels.
    if b.re * s.re + b.im * s.im < 0.0 {
        s = -s;
    }
    let big = -(b + s) / 2.0;
    if big.is_zero() {
        // b + s == 0 with the aligned branch forces b = c = 0.
        return QuadraticRoots { r1: Complex64::zero(), r2: Complex64::zero() };
    }
    QuadraticRoots { r1: big, r2: c / big }
}

/// Solve x³ + p₂x² + p₁x + p₀ = 0 by depression and the cube-root method,
/// entirely in complex arithmetic (covers the casus irreducibilis with the
/// same code path).
pub fn solve_cubic(p2: Complex64, p1: Complex64, p0: Complex64) -> CubicRoots {
    let third = p2 / 3.0;
    // t = x + p2/3 turns the cubic into t³ + pt + q.
    let p = p1 - p2 * third;
    let q = 2.0 * third * third * third - third * p1 + p0;

    if p.is_zero() && q.is_zero() {
        return CubicRoots { r1: -third, r2: -third, r3: -third };
    }

    // u³ is a root of w² + qw − p³/27; take the branch of larger magnitude
    // to dodge cancellation. The partner is recovered as v = −p/(3u), which
    // pins the branch pairing to uv = −p/3 exactly.
    let half_q = q / 2.0;
    let disc = (half_q * half_q + p * p * p / 27.0).sqrt();
    let u_cubed = {
        let plus = -half_q + disc;
        let minus = -half_q - disc;
        if plus.norm() >= minus.norm() {
            plus
        } else {
            minus
        }
    };

    let r = u_cubed.norm().cbrt();
    let theta = u_cubed.arg() / 3.0;
    const TAU_THIRD: f64 = 2.0 * core::f64::consts::FRAC_PI_3;

    let mut out = [Complex64::zero(); 3];
    for (j, slot) in out.iter_mut().enumerate() {
        let u = Complex64::from_polar(r, theta + TAU_THIRD * j as f64);
        let v = if u.is_zero() { Complex64::zero() } else { -p / (3.0 * u) };
        *slot = u + v - third;
    }
    CubicRoots { r1: out[0], r2: out[1], r3: out[2] }
}

/// How the pair product n was obtained inside the chosen split.
pub use crate::split::NSource;

/// Everything the quintic pipeline produced on the way to the five roots.
#[derive(Clone, Debug)]
pub struct QuinticSolution {
    pub depressed: DepressedQuintic,
    pub resolvent: Resolvent,
    pub resolvent_roots: RootSet,
    pub split: SplitResult,
    /// The five roots of the input quintic, sorted by (re, im).
    pub roots: Vec<Complex64>,
    /// Backward-error residuals |q(x)| / scale, parallel to `roots`.
    pub residuals: Vec<f64>,
}

/// Tuning knobs for [`solve_quintic_with`].
#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Force the split to use the resolvent root at this index (in the sorted
    /// root order) instead of the automatic candidate selection.
    pub root_index: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: roots::DEFAULT_TOL, max_iter: roots::DEFAULT_MAX_ITER, root_index: None }
    }
}

/// Solve a monic quintic: depress, build the resolvent, extract its roots,
/// split into quadratic × cubic, solve both factors in closed form, and undo
/// the depression shift.
pub fn solve_quintic(q: &GeneralQuintic) -> Result<QuinticSolution, Error> {
    solve_quintic_with(q, &SolveOptions::default())
}

pub fn solve_quintic_with(
    q: &GeneralQuintic,
    opts: &SolveOptions,
) -> Result<QuinticSolution, Error> {
    let depressed = q.depress();
    let resolvent = build_resolvent(&depressed);
    let resolvent_roots = roots::find_all_roots(&resolvent.to_dense(), opts.tol, opts.max_iter)?;

    let split = match opts.root_index {
        Some(i) => {
            let k = *resolvent_roots
                .roots
                .get(i)
                .ok_or(Error::NoViableSplit { candidates: resolvent_roots.roots.len() })?;
            split::split(&depressed, k)?
        }
        None => split::choose_split_root(&depressed, &resolvent_roots)?,
    };

    let quad = solve_quadratic(-split.k, split.n);
    let cubic = solve_cubic(split.k, split.l, split.m);

    let shift = split::rational_to_c64(&depressed.shift);
    let mut roots: Vec<Complex64> = [quad.r1, quad.r2, cubic.r1, cubic.r2, cubic.r3]
        .iter()
        .map(|&y| y - shift)
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let dense = q.to_dense();
    let residuals = roots
        .iter()
        .map(|&x| {
            let v = dense.eval(x).norm();
            if v == 0.0 {
                0.0
            } else {
                v / dense.eval_scale(x)
            }
        })
        .collect();

    Ok(QuinticSolution { depressed, resolvent, resolvent_roots, split, roots, residuals })
}
