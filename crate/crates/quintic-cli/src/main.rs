//! Command-line interface for the quintic pair-sum resolvent pipeline.
//!
//! Subcommands: `resolvent` (exact coefficients), `solve` (full pipeline
//! report), `verify` (seeded random structural checks), `pfq` (series
//! evaluation). Stdout carries data, stderr carries diagnostics, and the
//! exit code is the pass/fail channel: 0 success, 1 domain failure
//! (no viable split, unmatched trial, divergent series), 2 parse error,
//! 3 convergence failure.

mod parse;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use serde::Serialize;

use quintic_core::error::Error;
use quintic_core::hypergeom::{self, PfqParams};
use quintic_core::poly::GeneralQuintic;
use quintic_core::resolvent::build_resolvent;
use quintic_core::roots::{self, find_all_roots};
use quintic_core::split::{choose_split_root, split};
use quintic_core::verify::{full_check, multiset_match, pairwise_sums, sample_separated_quintic};
use quintic_core::{solve_cubic, solve_quadratic};

use report::{
    complex_descending, complex_field, depressed_field, exact_descending, format_f64,
    match_field, polynomial_text, RunReport,
};

#[derive(Parser)]
#[command(name = "quintic", version, about = "Quintic solver via the pair-sum resolvent")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact degree-10 resolvent of a quintic.
    ///
    /// Pass 4 coefficients C D E F for the depressed form x^5+Cx^3+Dx^2+Ex+F,
    /// or 5 coefficients a4 a3 a2 a1 a0 for a general monic quintic.
    /// Each may be an integer, a decimal, or a rational p/q.
    Resolvent {
        #[arg(num_args = 4..=5, value_parser = parse::parse_rational, allow_negative_numbers = true)]
        coeffs: Vec<BigRational>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Solve a quintic: split into quadratic × cubic and apply the closed forms.
    Solve {
        #[arg(num_args = 4..=5, value_parser = parse::parse_rational, allow_negative_numbers = true)]
        coeffs: Vec<BigRational>,
        /// Relative residual tolerance for root finding.
        #[arg(long, default_value_t = roots::DEFAULT_TOL)]
        tol: f64,
        /// Iteration budget for root finding.
        #[arg(long, default_value_t = roots::DEFAULT_MAX_ITER)]
        max_iter: usize,
        /// Force the split to use the resolvent root at this index (sorted
        /// by re, then im) instead of the automatic selection.
        #[arg(long)]
        root_index: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Significant digits for numeric output (17 = lossless round trip).
        #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u8).range(1..=17))]
        precision: u8,
    },
    /// Run the structural check on seeded random quintics: resolvent roots
    /// must equal the pairwise sums of the quintic's roots.
    Verify {
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coefficients are sampled uniformly from [-bound, bound].
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=1000))]
        bound: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a generalized hypergeometric series pFq(upper; lower; z).
    Pfq {
        /// Comma-separated rational upper parameters.
        #[arg(long, value_parser = parse::parse_rational, value_delimiter = ',', allow_hyphen_values = true)]
        upper: Option<Vec<BigRational>>,
        /// Comma-separated rational lower parameters.
        #[arg(long, value_parser = parse::parse_rational, value_delimiter = ',', allow_hyphen_values = true)]
        lower: Option<Vec<BigRational>>,
        /// Argument "RE" or "RE,IM"; parts may be integers, decimals, or p/q.
        #[arg(long, value_parser = parse::parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        /// Evaluate the fixed three-term 4F3 combination that represents the
        /// pair sum of the x^5+x+3 example (requires |z| < 1; the argument
        /// the closed form itself calls for, -253125/256, diverges).
        #[arg(long, conflicts_with_all = ["upper", "lower"])]
        pair_sum_candidate: bool,
        #[arg(long, default_value_t = hypergeom::DEFAULT_SERIES_TOL)]
        tol: f64,
        #[arg(long, default_value_t = hypergeom::DEFAULT_MAX_TERMS)]
        max_terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u8).range(1..=17))]
        precision: u8,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Resolvent { coeffs, format } => cmd_resolvent(&coeffs, format),
        Command::Solve { coeffs, tol, max_iter, root_index, format, precision } => {
            cmd_solve(&coeffs, tol, max_iter, root_index, format, precision as usize)
        }
        Command::Verify { count, seed, bound, format } => cmd_verify(count, seed, bound, format),
        Command::Pfq { upper, lower, z, pair_sum_candidate, tol, max_terms, format, precision } => {
            cmd_pfq(upper, lower, z, pair_sum_candidate, tol, max_terms, format, precision as usize)
        }
    };
    ExitCode::from(code)
}

/// Exit codes: domain failures are 1, convergence failures 3 (parse errors
/// exit 2 through clap before any command runs).
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NoViableSplit { .. }
        | Error::DivergentArgument { .. }
        | Error::PoleParameter { .. }
        | Error::DegenerateDenominator { .. }
        | Error::NotAResolventRoot { .. } => 1,
        Error::NoConvergence { .. } | Error::ZeroPolynomial => 3,
    }
}

fn quintic_from_coeffs(coeffs: &[BigRational]) -> GeneralQuintic {
    match coeffs {
        [c, d, e, f] => GeneralQuintic::new(
            BigRational::from_integer(0.into()),
            c.clone(),
            d.clone(),
            e.clone(),
            f.clone(),
        ),
        [a4, a3, a2, a1, a0] => {
            GeneralQuintic::new(a4.clone(), a3.clone(), a2.clone(), a1.clone(), a0.clone())
        }
        _ => unreachable!("clap enforces 4..=5 coefficients"),
    }
}

#[derive(Serialize)]
struct ResolventReport {
    quintic: Vec<String>,
    depressed: report::DepressedField,
    resolvent: Vec<String>,
    timing_ms: f64,
}

fn cmd_resolvent(coeffs: &[BigRational], format: Format) -> u8 {
    let start = Instant::now();
    let q = quintic_from_coeffs(coeffs);
    let dq = q.depress();
    let resolvent = build_resolvent(&dq);
    let out = ResolventReport {
        quintic: exact_descending(q.to_exact_polynomial().coefficients()),
        depressed: depressed_field(&dq),
        resolvent: exact_descending(resolvent.coefficients()),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serialize")),
        Format::Text => {
            println!("quintic:    {}", polynomial_text(&out.quintic, "x"));
            println!(
                "depressed:  C = {}, D = {}, E = {}, F = {}, shift = {}",
                out.depressed.c, out.depressed.d, out.depressed.e, out.depressed.f,
                out.depressed.shift
            );
            println!("resolvent:  {}", polynomial_text(&out.resolvent, "k"));
            println!("timing_ms:  {}", out.timing_ms);
        }
    }
    0
}

fn emit_run_report(report: &RunReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).expect("serialize")),
        Format::Text => print!("{}", report.render_text()),
    }
}

fn cmd_solve(
    coeffs: &[BigRational],
    tol: f64,
    max_iter: usize,
    root_index: Option<usize>,
    format: Format,
    precision: usize,
) -> u8 {
    let start = Instant::now();
    let q = quintic_from_coeffs(coeffs);
    let dq = q.depress();
    let resolvent = build_resolvent(&dq);

    let resolvent_roots = match find_all_roots(&resolvent.to_dense(), tol, max_iter) {
        Ok(rs) => rs,
        Err(e) => {
            eprintln!("root finding failed: {e}");
            return exit_code(&e);
        }
    };

    let chosen = match root_index {
        Some(i) => match resolvent_roots.roots.get(i) {
            Some(&k) => split(&dq, k),
            None => {
                eprintln!(
                    "--root-index {i} out of range (resolvent has {} roots)",
                    resolvent_roots.roots.len()
                );
                return 2;
            }
        },
        None => choose_split_root(&dq, &resolvent_roots),
    };

    let split_result = match chosen {
        Ok(s) => s,
        Err(e) => {
            let mut partial = RunReport::partial(&q, &dq, &resolvent, Some(e.to_string()));
            partial.timing_ms = start.elapsed().as_secs_f64() * 1e3;
            emit_run_report(&partial, format);
            eprintln!("split failed: {e}");
            return exit_code(&e);
        }
    };

    let quad = solve_quadratic(-split_result.k, split_result.n);
    let cubic = solve_cubic(split_result.k, split_result.l, split_result.m);
    let shift = dq.shift.to_f64().unwrap_or(f64::NAN);
    let mut solution_roots: Vec<Complex64> = [quad.r1, quad.r2, cubic.r1, cubic.r2, cubic.r3]
        .iter()
        .map(|y| y - Complex64::new(shift, 0.0))
        .collect();
    solution_roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let dense = q.to_dense();
    let residuals: Vec<f64> = solution_roots
        .iter()
        .map(|&x| {
            let v = dense.eval(x).norm();
            if v == 0.0 { 0.0 } else { v / dense.eval_scale(x) }
        })
        .collect();

    // Self-consistency: the resolvent's roots against the pairwise sums of
    // the returned roots, compared in the depressed variable.
    let depressed_roots: Vec<Complex64> = solution_roots
        .iter()
        .map(|x| x + Complex64::new(shift, 0.0))
        .collect();
    let sums = pairwise_sums(&depressed_roots);
    let m = multiset_match(&resolvent_roots.roots, &sums, quintic_core::verify::MATCH_TOL);

    let report = RunReport {
        quintic: exact_descending(q.to_exact_polynomial().coefficients()),
        depressed: depressed_field(&dq),
        resolvent: exact_descending(resolvent.coefficients()),
        k: Some(complex_field(split_result.k, precision)),
        n: Some(complex_field(split_result.n, precision)),
        l: Some(complex_field(split_result.l, precision)),
        m: Some(complex_field(split_result.m, precision)),
        quadratic: Some(complex_descending(&split_result.quadratic, precision)),
        cubic: Some(complex_descending(&split_result.cubic, precision)),
        roots: Some(solution_roots.iter().map(|&z| complex_field(z, precision)).collect()),
        residuals: Some(residuals.iter().map(|&r| format_f64(r, precision)).collect()),
        match_report: Some(match_field(&m, precision)),
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
        error: None,
    };
    emit_run_report(&report, format);
    0
}

#[derive(Serialize)]
struct VerifyReport {
    trials: usize,
    passed: usize,
    pass_rate: f64,
    rejected_samples: usize,
    worst_max_distance: String,
    worst_split_residual: String,
    repeated_root_trials: usize,
    seed: u64,
    bound: u32,
    timing_ms: f64,
}

fn cmd_verify(count: usize, seed: u64, bound: u32, format: Format) -> u8 {
    let start = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut passed = 0usize;
    let mut rejected = 0usize;
    let mut repeated = 0usize;
    let mut worst_distance = 0.0f64;
    let mut worst_residual = 0.0f64;

    for trial in 0..count {
        let (q, r) = sample_separated_quintic(&mut rng, bound);
        rejected += r;
        let report = full_check(&q);
        if report.repeated_roots {
            repeated += 1;
        }
        let ok = report.matched();
        if let Some(m) = &report.match_report {
            worst_distance = worst_distance.max(m.max_distance);
        }
        if let Some(s) = &report.split {
            worst_residual = worst_residual.max(s.residual);
        }
        if ok {
            passed += 1;
        } else {
            eprintln!(
                "trial {trial}: UNMATCHED quintic {:?} (max distance {:?}, errors: {:?})",
                exact_descending(q.to_exact_polynomial().coefficients()),
                report.match_report.as_ref().map(|m| m.max_distance),
                report.errors
            );
        }
    }

    let out = VerifyReport {
        trials: count,
        passed,
        pass_rate: passed as f64 / count.max(1) as f64,
        rejected_samples: rejected,
        worst_max_distance: format_f64(worst_distance, 17),
        worst_split_residual: format_f64(worst_residual, 17),
        repeated_root_trials: repeated,
        seed,
        bound,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).expect("serialize")),
        Format::Text => {
            println!("trials:               {}", out.trials);
            println!("passed:               {}", out.passed);
            println!("pass_rate:            {}", out.pass_rate);
            println!("rejected_samples:     {}", out.rejected_samples);
            println!("worst_max_distance:   {}", out.worst_max_distance);
            println!("worst_split_residual: {}", out.worst_split_residual);
            println!("repeated_root_trials: {}", out.repeated_root_trials);
            println!("timing_ms:            {}", out.timing_ms);
        }
    }
    if passed == count {
        0
    } else {
        1
    }
}

#[derive(Serialize)]
struct PfqReport {
    value: report::ComplexField,
    terms: usize,
    tail_bound: String,
    timing_ms: f64,
}

#[allow(clippy::too_many_arguments)]
fn cmd_pfq(
    upper: Option<Vec<BigRational>>,
    lower: Option<Vec<BigRational>>,
    z: Complex64,
    pair_sum_candidate: bool,
    tol: f64,
    max_terms: usize,
    format: Format,
    precision: usize,
) -> u8 {
    let start = Instant::now();
    let result = if pair_sum_candidate {
        hypergeom::pair_sum_candidate(z, tol, max_terms)
    } else {
        let (Some(upper), Some(lower)) = (upper, lower) else {
            eprintln!("--upper and --lower are required unless --pair-sum-candidate is set");
            return 2;
        };
        let mut params = PfqParams::new(upper, lower, z);
        params.tol = tol;
        params.max_terms = max_terms;
        hypergeom::pfq(&params)
    };

    match result {
        Ok(sum) => {
            let out = PfqReport {
                value: complex_field(sum.value, precision),
                terms: sum.terms,
                tail_bound: format_f64(sum.tail_bound, precision),
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            };
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out).expect("serialize"))
                }
                Format::Text => {
                    println!("value:      {} + {}i", out.value.re, out.value.im);
                    println!("terms:      {}", out.terms);
                    println!("tail_bound: {}", out.tail_bound);
                    println!("timing_ms:  {}", out.timing_ms);
                }
            }
            0
        }
        Err(e) => {
            eprintln!("series evaluation failed: {e}");
            exit_code(&e)
        }
    }
}
