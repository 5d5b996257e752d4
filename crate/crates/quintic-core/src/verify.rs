//! Brute-force harness for the structural claim behind the whole pipeline:
//! the resolvent's ten roots are exactly the ten pairwise sums of the
//! quintic's roots.
//!
//! Nothing here trusts the splitter: quintic roots come from the numeric
//! rootfinder directly, their pairwise sums are formed by enumeration, and
//! the two ten-element multisets are matched one-to-one.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::closed_form::{solve_cubic, solve_quadratic};
use crate::error::Error;
use crate::poly::{DepressedQuintic, GeneralQuintic};
use crate::resolvent::build_resolvent;
use crate::roots::{find_all_roots_default, RootSet};
use crate::split::{choose_split_root, rational_to_c64, SplitResult};

/// Matching tolerance for well-separated roots.
pub const MATCH_TOL: f64 = 1e-7;
/// Matching tolerance once repeated roots degrade both sides in tandem.
pub const RELAXED_MATCH_TOL: f64 = 1e-4;
/// Quintic root pairs closer than this flag the repeated-root regime.
pub const REPEATED_ROOT_DETECTION: f64 = 1e-3;
/// Rejection-sampling floor for the distance between quintic roots.
pub const MIN_ROOT_SEPARATION: f64 = 0.05;
/// Rejection-sampling floor for the distance between pairwise sums.
pub const MIN_SUM_SEPARATION: f64 = 0.02;

/// One matched (resolvent root, pairwise sum) pair.
#[derive(Clone, Copy, Debug)]
pub struct MatchedPair {
    pub resolvent_root: Complex64,
    pub pair_sum: Complex64,
    pub distance: f64,
}

/// A perfect matching between two equal-size multisets of complex values.
#[derive(Clone, Debug)]
pub struct MatchReport {
    pub pairs: Vec<MatchedPair>,
    pub max_distance: f64,
    pub matched: bool,
}

/// All sums rᵢ + rⱼ for i < j, in index order.
pub fn pairwise_sums(roots: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(roots.len(), 5, "pairwise_sums expects exactly five roots");
    let mut sums = Vec::with_capacity(10);
    for i in 0..5 {
        for j in (i + 1)..5 {
            sums.push(roots[i] + roots[j]);
        }
    }
    sums
}

fn sorted_lexicographic(values: &[Complex64]) -> Vec<Complex64> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    v
}

/// Match two multisets one-to-one, minimizing the worst pair distance.
///
/// Greedy nearest-neighbor on lexicographically sorted values first; if the
/// greedy worst distance misses `tol`, an exact bottleneck assignment runs
/// (best-first search with pruning; exhaustive in effect, cheap for n = 10
/// because near-misses prune almost everything).
pub fn multiset_match(a: &[Complex64], b: &[Complex64], tol: f64) -> MatchReport {
    assert_eq!(a.len(), b.len(), "multiset_match expects equal lengths");
    let left = sorted_lexicographic(a);
    let right = sorted_lexicographic(b);
    let n = left.len();
    if n == 0 {
        return MatchReport { pairs: Vec::new(), max_distance: 0.0, matched: true };
    }

    // Greedy pass.
    let mut taken = vec![false; n];
    let mut assignment = vec![usize::MAX; n];
    let mut greedy_max = 0.0f64;
    for (i, &x) in left.iter().enumerate() {
        let (j, dist) = right
            .iter()
            .enumerate()
            .filter(|(j, _)| !taken[*j])
            .map(|(j, y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("unused candidate remains");
        taken[j] = true;
        assignment[i] = j;
        greedy_max = greedy_max.max(dist);
    }

    let (assignment, max_distance) = if greedy_max > tol {
        bottleneck_assignment(&left, &right, assignment, greedy_max)
    } else {
        (assignment, greedy_max)
    };

    let pairs = assignment
        .iter()
        .enumerate()
        .map(|(i, &j)| MatchedPair {
            resolvent_root: left[i],
            pair_sum: right[j],
            distance: (left[i] - right[j]).norm(),
        })
        .collect();
    MatchReport { pairs, max_distance, matched: max_distance < tol }
}

/// Exact min-max assignment by depth-first search with pruning, seeded with
/// the greedy solution. Candidates are tried in increasing distance, and any
/// branch that cannot beat the best known bottleneck is cut immediately;
/// exact for n = 10 without ever enumerating the 10! permutations.
fn bottleneck_assignment(
    left: &[Complex64],
    right: &[Complex64],
    initial: Vec<usize>,
    initial_max: f64,
) -> (Vec<usize>, f64) {
    let n = left.len();
    let mut dist = vec![vec![0.0f64; n]; n];
    let mut order = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            dist[i][j] = (left[i] - right[j]).norm();
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&x, &y| dist[i][x].total_cmp(&dist[i][y]));
        order[i] = idx;
    }

    struct Search<'a> {
        dist: &'a [Vec<f64>],
        order: &'a [Vec<usize>],
        taken: Vec<bool>,
        current: Vec<usize>,
        best: Vec<usize>,
        best_max: f64,
    }

    impl Search<'_> {
        fn go(&mut self, row: usize, partial_max: f64) {
            let n = self.taken.len();
            if row == n {
                self.best = self.current.clone();
                self.best_max = partial_max;
                return;
            }
            let order = self.order; // shared reference, free to copy out
            for &j in &order[row] {
                if self.taken[j] {
                    continue;
                }
                let d = self.dist[row][j];
                if d >= self.best_max {
                    break; // candidates are distance-sorted
                }
                self.taken[j] = true;
                self.current[row] = j;
                self.go(row + 1, partial_max.max(d));
                self.taken[j] = false;
            }
        }
    }

    let mut search = Search {
        dist: &dist,
        order: &order,
        taken: vec![false; n],
        current: vec![usize::MAX; n],
        best: initial,
        best_max: initial_max,
    };
    search.go(0, 0.0);
    (search.best, search.best_max)
}

/// Everything one structural check produces. Sub-module failures are
/// recorded in `errors` and leave the corresponding fields empty instead of
/// aborting the remaining checks.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub depressed: DepressedQuintic,
    pub oracle_roots: Option<RootSet>,
    pub resolvent_roots: Option<RootSet>,
    pub match_report: Option<MatchReport>,
    pub split: Option<SplitResult>,
    /// Roots recovered through the closed-form quadratic and cubic solvers.
    pub closed_roots: Vec<Complex64>,
    /// Backward-error residuals of `closed_roots` against the input quintic.
    pub closed_residuals: Vec<f64>,
    /// True when the quintic has (numerically) repeated roots; the match
    /// then runs at [`RELAXED_MATCH_TOL`].
    pub repeated_roots: bool,
    pub match_tolerance: f64,
    pub errors: Vec<Error>,
}

impl CheckReport {
    /// Did the resolvent-vs-pairwise-sums match succeed?
    pub fn matched(&self) -> bool {
        self.match_report.as_ref().is_some_and(|m| m.matched)
    }
}

/// Run the full structural check on one quintic: oracle roots, pairwise
/// sums, resolvent roots, multiset match, split, and closed-form roots.
pub fn full_check(q: &GeneralQuintic) -> CheckReport {
    let depressed = q.depress();
    let mut report = CheckReport {
        depressed: depressed.clone(),
        oracle_roots: None,
        resolvent_roots: None,
        match_report: None,
        split: None,
        closed_roots: Vec::new(),
        closed_residuals: Vec::new(),
        repeated_roots: false,
        match_tolerance: MATCH_TOL,
        errors: Vec::new(),
    };

    let oracle = match find_all_roots_default(&depressed.to_dense()) {
        Ok(rs) => rs,
        Err(e) => {
            report.errors.push(e);
            return report;
        }
    };
    report.repeated_roots = has_repeated_roots(&oracle);
    if report.repeated_roots {
        report.match_tolerance = RELAXED_MATCH_TOL;
    }

    let resolvent = build_resolvent(&depressed);
    match find_all_roots_default(&resolvent.to_dense()) {
        Ok(rroots) => {
            let sums = pairwise_sums(&oracle.roots);
            report.match_report =
                Some(multiset_match(&rroots.roots, &sums, report.match_tolerance));
            match choose_split_root(&depressed, &rroots) {
                Ok(split) => {
                    let quad = solve_quadratic(-split.k, split.n);
                    let cubic = solve_cubic(split.k, split.l, split.m);
                    let shift = rational_to_c64(&depressed.shift);
                    let dense = q.to_dense();
                    for y in [quad.r1, quad.r2, cubic.r1, cubic.r2, cubic.r3] {
                        let x = y - shift;
                        let v = dense.eval(x).norm();
                        let scale = dense.eval_scale(x);
                        report.closed_roots.push(x);
                        report
                            .closed_residuals
                            .push(if v == 0.0 { 0.0 } else { v / scale });
                    }
                    report.split = Some(split);
                }
                Err(e) => report.errors.push(e),
            }
            report.resolvent_roots = Some(rroots);
        }
        Err(e) => report.errors.push(e),
    }
    report.oracle_roots = Some(oracle);
    report
}

fn has_repeated_roots(rs: &RootSet) -> bool {
    if rs.multiplicities.iter().any(|&m| m > 1) {
        return true;
    }
    let n = rs.roots.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = 1.0 + rs.roots[i].norm().max(rs.roots[j].norm());
            if (rs.roots[i] - rs.roots[j]).norm() < REPEATED_ROOT_DETECTION * scale {
                return true;
            }
        }
    }
    false
}

/// Random monic quintic with coefficients uniform over the grid
/// {k/1000 : |k| ≤ 1000·bound}.
pub fn sample_quintic<R: Rng>(rng: &mut R, bound: u32) -> GeneralQuintic {
    let granularity = 1000i64;
    let span = granularity * i64::from(bound);
    let mut draw = || {
        num_rational::BigRational::new(
            num_bigint::BigInt::from(rng.gen_range(-span..=span)),
            num_bigint::BigInt::from(granularity),
        )
    };
    GeneralQuintic::new(draw(), draw(), draw(), draw(), draw())
}

/// Sample quintics until one is comfortably away from the repeated-root
/// locus: both the roots themselves and their pairwise sums must be
/// separated. Returns the accepted quintic and how many draws were rejected.
pub fn sample_separated_quintic<R: Rng>(rng: &mut R, bound: u32) -> (GeneralQuintic, usize) {
    let mut rejected = 0;
    loop {
        let q = sample_quintic(rng, bound);
        if let Ok(rs) = find_all_roots_default(&q.to_dense()) {
            let sums = pairwise_sums(&rs.roots);
            if min_separation(&rs.roots) >= MIN_ROOT_SEPARATION
                && min_separation(&sums) >= MIN_SUM_SEPARATION
            {
                return (q, rejected);
            }
        }
        rejected += 1;
        assert!(rejected < 10_000, "rejection sampling failed to terminate");
    }
}

fn min_separation(values: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            best = best.min((values[i] - values[j]).norm());
        }
    }
    best
}
