//! Numeric root extraction for dense complex polynomials of low degree
//! (the resolvent needs 10, the brute-force oracle needs 5).
//!
//! Simultaneous Aberth-Ehrlich iteration from a deterministic starting
//! configuration, followed by Newton polishing, conjugate symmetrization for
//! real-coefficient inputs, and a verified cluster collapse that restores
//! accuracy at multiple roots. No randomness anywhere: the same input always
//! produces the same output.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Zero;
// See closed_form: required for f64 math under no_std, shadowed otherwise.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::poly::DensePolynomial;

/// Relative residual |p(z)| / Σ|cᵢ||z|ⁱ below which a simple root counts as
/// converged.
pub const DEFAULT_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_ITER: usize = 500;
/// Roots with |Im| below this (relative) threshold are treated as real.
pub const DEFAULT_IMAG_TOL: f64 = 1e-9;

/// Roots closer than this (relative) distance are candidates for a common
/// multiple root; the merge only happens if a multiplicity-aware refinement
/// confirms it.
const CLUSTER_RADIUS_REL: f64 = 2e-3;

/// Fixed irrational rotation of the starting circle, so the initial
/// configuration never aligns with root symmetries (1/√2 turns).
const START_ROTATION: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// All roots of a polynomial, with per-root backward-error residuals.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// Roots sorted by (re, im), with multiplicity.
    pub roots: Vec<Complex64>,
    /// |p(root)| / Σ|cᵢ||root|ⁱ for each root, parallel to `roots`.
    pub residuals: Vec<f64>,
    /// Aberth sweeps performed.
    pub iterations: usize,
    /// Estimated multiplicity per root (cluster size after verified collapse).
    pub multiplicities: Vec<usize>,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Real roots of the set: entries with |Im| < imag_tol · (1 + |Re|), with the
/// imaginary part zeroed. May be empty.
pub fn real_roots(rs: &RootSet, imag_tol: f64) -> Vec<f64> {
    rs.roots
        .iter()
        .filter(|z| z.im.abs() < imag_tol * (1.0 + z.re.abs()))
        .map(|z| z.re)
        .collect()
}

fn residual_at(p: &DensePolynomial, z: Complex64) -> f64 {
    let v = p.eval(z).norm();
    if v == 0.0 {
        return 0.0;
    }
    let scale = p.eval_scale(z);
    if scale == 0.0 {
        v
    } else {
        v / scale
    }
}

/// Find all complex roots of `p`, multiplicities included.
///
/// Fails with [`Error::ZeroPolynomial`] on the zero polynomial and
/// [`Error::NoConvergence`] if the iteration budget runs out before every
/// root meets its (multiplicity-relaxed) residual bound.
pub fn find_all_roots(
    p: &DensePolynomial,
    tol: f64,
    max_iter: usize,
) -> Result<RootSet, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let degree = p.degree().expect("nonzero polynomial");
    if degree == 0 {
        return Ok(RootSet {
            roots: Vec::new(),
            residuals: Vec::new(),
            iterations: 0,
            multiplicities: Vec::new(),
        });
    }

    // Exact zero roots split off first: every leading zero coefficient is a
    // root at the origin with no rounding error at all.
    let zero_count = p
        .coefficients()
        .iter()
        .take_while(|c| c.re == 0.0 && c.im == 0.0)
        .count();
    let reduced = DensePolynomial::new(p.coefficients()[zero_count..].to_vec());

    let mut iterations = 0;
    let (mut found, mut mults) = if reduced.degree() == Some(0) {
        (Vec::new(), Vec::new())
    } else {
        let (roots, iters) = aberth(&reduced, tol, max_iter)?;
        iterations = iters;
        let mut roots = roots;
        polish(&reduced, &mut roots);
        if reduced.has_real_coefficients() {
            symmetrize_conjugates(&mut roots);
        }
        let mults = collapse_clusters(&reduced, &mut roots);
        (roots, mults)
    };

    for _ in 0..zero_count {
        found.push(Complex64::zero());
        mults.push(zero_count);
    }

    // Sort roots and carry multiplicities along.
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| {
        found[a]
            .re
            .total_cmp(&found[b].re)
            .then(found[a].im.total_cmp(&found[b].im))
    });
    let roots: Vec<Complex64> = order.iter().map(|&i| found[i]).collect();
    let multiplicities: Vec<usize> = order.iter().map(|&i| mults[i]).collect();
    let residuals: Vec<f64> = roots.iter().map(|&z| residual_at(p, z)).collect();

    // Multiple roots cannot reach the simple-root residual level; relax the
    // bound to tol^(1/m) for an estimated multiplicity m.
    for (r, &m) in residuals.iter().zip(&multiplicities) {
        let bound = tol.powf(1.0 / m as f64);
        if *r > bound {
            return Err(Error::NoConvergence { iterations });
        }
    }

    Ok(RootSet { roots, residuals, iterations, multiplicities })
}

/// Find all roots with the default tolerance and iteration budget.
pub fn find_all_roots_default(p: &DensePolynomial) -> Result<RootSet, Error> {
    find_all_roots(p, DEFAULT_TOL, DEFAULT_MAX_ITER)
}

/// Core simultaneous iteration. Returns raw roots and the sweep count.
fn aberth(
    p: &DensePolynomial,
    tol: f64,
    max_iter: usize,
) -> Result<(Vec<Complex64>, usize), Error> {
    let degree = p.degree().expect("degree >= 1");
    let deriv = p.derivative();
    let lead = p.leading_coeff().expect("nonzero");

    // Starting points on a circle just outside the Cauchy root bound,
    // rotated so the configuration is never symmetric about the real axis.
    let radius = 1.0
        + p.coefficients()[..degree]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let angle = core::f64::consts::TAU * (j as f64 / degree as f64 + START_ROTATION);
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let step_floor = 4.0 * f64::EPSILON;
    for sweep in 1..=max_iter {
        let mut all_settled = true;
        for i in 0..degree {
            let pz = p.eval(z[i]);
            if pz.is_zero() {
                continue;
            }
            let converged = residual_at(p, z[i]) <= tol;
            let dz = deriv.eval(z[i]);
            let newton = if dz.is_zero() {
                // Stationary point; nudge instead of dividing by zero.
                Complex64::new(f64::EPSILON * (1.0 + z[i].norm()), 0.0)
            } else {
                pz / dz
            };
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.is_zero() {
                        Complex64::zero()
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let w = if denom.is_zero() { newton } else { newton / denom };
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::NoConvergence { iterations: sweep });
            }
            // Settled means the residual criterion holds, or the step has hit
            // the rounding floor (multiple roots stop improving before the
            // simple-root residual level is reachable).
            if !converged && w.norm() > step_floor * (1.0 + z[i].norm()) {
                all_settled = false;
            }
            z[i] -= w;
        }
        if all_settled {
            return Ok((z, sweep));
        }
    }

    // Budget exhausted; the caller's residual gate decides whether the final
    // configuration is acceptable.
    Ok((z, max_iter))
}

/// A few plain Newton steps per root, kept only while |p| decreases.
fn polish(p: &DensePolynomial, roots: &mut [Complex64]) {
    let deriv = p.derivative();
    for z in roots.iter_mut() {
        for _ in 0..3 {
            let pz = p.eval(*z);
            if pz.is_zero() {
                break;
            }
            let dz = deriv.eval(*z);
            if dz.is_zero() {
                break;
            }
            let candidate = *z - pz / dz;
            if p.eval(candidate).norm() < pz.norm() {
                *z = candidate;
            } else {
                break;
            }
        }
    }
}

/// For real-coefficient polynomials the root multiset is conjugate-closed.
/// Pair every root with the root nearest its conjugate and average the pair
/// into an exactly conjugate-symmetric configuration; self-paired roots snap
/// onto the real axis.
fn symmetrize_conjugates(roots: &mut [Complex64]) {
    let n = roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = roots[i].conj();
        let mut best = i;
        let mut best_dist = (target - roots[i]).norm();
        for (j, z) in roots.iter().enumerate().skip(i + 1) {
            if used[j] {
                continue;
            }
            let dist = (target - z).norm();
            if dist < best_dist {
                best = j;
                best_dist = dist;
            }
        }
        if best_dist > 1e-3 * (1.0 + roots[i].norm()) {
            continue; // nothing convincingly conjugate; leave it alone
        }
        if best == i {
            roots[i] = Complex64::new(roots[i].re, 0.0);
        } else {
            used[best] = true;
            let w = (roots[i] + roots[best].conj()) / 2.0;
            roots[i] = w;
            roots[best] = w.conj();
        }
    }
}

/// Group nearby roots, refine each group's centroid, and collapse the group
/// onto the refined point only when that verifiably does not lose accuracy.
/// Returns the multiplicity estimate for every root.
///
/// Refinement runs Newton on the (m−1)-th derivative: a multiplicity-m root
/// of p is a simple root of p^(m−1), where evaluations sit far above the
/// rounding floor that makes p itself uninformative near a multiple root.
/// The centroid seed is already accurate (the approximants' errors nearly
/// cancel), and this polish takes it to machine precision.
fn collapse_clusters(p: &DensePolynomial, roots: &mut [Complex64]) -> Vec<usize> {
    let n = roots.len();
    let mut group = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if group[i] != usize::MAX {
            continue;
        }
        let id = groups.len();
        group[i] = id;
        let mut members = vec![i];
        // Grow the group transitively.
        let mut cursor = 0;
        while cursor < members.len() {
            let a = members[cursor];
            cursor += 1;
            for b in 0..n {
                if group[b] != usize::MAX {
                    continue;
                }
                let limit =
                    CLUSTER_RADIUS_REL * (1.0 + roots[a].norm().max(roots[b].norm()));
                if (roots[a] - roots[b]).norm() <= limit {
                    group[b] = id;
                    members.push(b);
                }
            }
        }
        groups.push(members);
    }

    let mut mults = vec![1usize; n];
    for members in &groups {
        let m = members.len();
        if m < 2 {
            continue;
        }
        let centroid = members.iter().map(|&i| roots[i]).sum::<Complex64>() / m as f64;
        let mut lower = p.clone();
        for _ in 1..m {
            lower = lower.derivative();
        }
        let lower_deriv = lower.derivative();
        let mut refined = centroid;
        for _ in 0..20 {
            let v = lower.eval(refined);
            if v.is_zero() {
                break;
            }
            let dv = lower_deriv.eval(refined);
            if dv.is_zero() {
                break;
            }
            let step = v / dv;
            refined -= step;
            if step.norm() <= f64::EPSILON * (1.0 + refined.norm()) {
                break;
            }
        }
        // Merge only if the refined point is at least as good as the best
        // member; a false cluster of distinct simple roots lands on a mere
        // critical point and fails this.
        let best_member = members
            .iter()
            .map(|&i| p.eval(roots[i]).norm())
            .fold(f64::INFINITY, f64::min);
        let floor = 8.0 * f64::EPSILON * p.eval_scale(refined);
        if p.eval(refined).norm() <= (4.0 * best_member).max(floor) {
            for &i in members {
                roots[i] = refined;
                mults[i] = m;
            }
        }
    }
    mults
}
