//! Report assembly and rendering. JSON and text modes share the same
//! formatting helpers, so both report identical numbers at equal precision.
//!
//! JSON schema (solve):
//! ```json
//! {
//!   "quintic":   ["1", "0", "0", "0", "1", "3"],          // exact, descending degree
//!   "depressed": {"c": "0", "d": "0", "e": "1", "f": "3", "shift": "0"},
//!   "resolvent": ["1", "0", ..., "-9"],                   // exact, descending degree
//!   "k": {"re": "...", "im": "..."},                      // decimal strings
//!   "n": {...}, "l": {...}, "m": {...},
//!   "quadratic": [{"re": ...}, ...],                      // descending degree
//!   "cubic":     [{...}, ...],
//!   "roots":     [{...}; 5],
//!   "residuals": ["...", ...],
//!   "match":     {"matched": true, "max_distance": "...", "pairs": [...]},
//!   "timing_ms": 0.42,
//!   "error":     null
//! }
//! ```
//! Omitted stages (after a failed split) serialize as null.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use quintic_core::poly::{DensePolynomial, DepressedQuintic, GeneralQuintic};
use quintic_core::verify::MatchReport;
use quintic_core::Resolvent;

/// Significant-digit formatter. At 17 digits the shortest round-trip
/// representation is used, so parsing the string back yields the same bits.
pub fn format_f64(x: f64, precision: usize) -> String {
    if precision >= 17 {
        format!("{x}")
    } else {
        format!("{x:.*e}", precision.saturating_sub(1))
    }
}

#[derive(Serialize, Clone)]
pub struct ComplexField {
    pub re: String,
    pub im: String,
}

pub fn complex_field(z: Complex64, precision: usize) -> ComplexField {
    ComplexField { re: format_f64(z.re, precision), im: format_f64(z.im, precision) }
}

/// Exact coefficients in descending degree, as strings.
pub fn exact_descending(coeffs: &[BigRational]) -> Vec<String> {
    coeffs.iter().rev().map(|c| c.to_string()).collect()
}

pub fn complex_descending(p: &DensePolynomial, precision: usize) -> Vec<ComplexField> {
    p.coefficients().iter().rev().map(|&c| complex_field(c, precision)).collect()
}

/// Pretty polynomial in one indeterminate from descending exact coefficients.
pub fn polynomial_text(coeffs_desc: &[String], var: &str) -> String {
    let degree = coeffs_desc.len() - 1;
    let mut out = String::new();
    for (i, c) in coeffs_desc.iter().enumerate() {
        let power = degree - i;
        if c == "0" {
            continue;
        }
        let (sign, magnitude) = match c.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("+", c.as_str()),
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let coeff_part = if magnitude == "1" && power != 0 {
            String::new()
        } else if magnitude.contains('/') && power != 0 {
            format!("({magnitude})")
        } else {
            magnitude.to_string()
        };
        let var_part = match power {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{power}"),
        };
        out.push_str(&coeff_part);
        out.push_str(&var_part);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
pub struct DepressedField {
    pub c: String,
    pub d: String,
    pub e: String,
    pub f: String,
    pub shift: String,
}

pub fn depressed_field(dq: &DepressedQuintic) -> DepressedField {
    DepressedField {
        c: dq.c.to_string(),
        d: dq.d.to_string(),
        e: dq.e.to_string(),
        f: dq.f.to_string(),
        shift: dq.shift.to_string(),
    }
}

#[derive(Serialize)]
pub struct MatchPairField {
    pub resolvent_root: ComplexField,
    pub pair_sum: ComplexField,
    pub distance: String,
}

#[derive(Serialize)]
pub struct MatchField {
    pub matched: bool,
    pub max_distance: String,
    pub pairs: Vec<MatchPairField>,
}

pub fn match_field(m: &MatchReport, precision: usize) -> MatchField {
    MatchField {
        matched: m.matched,
        max_distance: format_f64(m.max_distance, precision),
        pairs: m
            .pairs
            .iter()
            .map(|p| MatchPairField {
                resolvent_root: complex_field(p.resolvent_root, precision),
                pair_sum: complex_field(p.pair_sum, precision),
                distance: format_f64(p.distance, precision),
            })
            .collect(),
    }
}

/// The solve command's full report; also reused (with later fields null) as
/// the partial report when no viable split exists.
#[derive(Serialize)]
pub struct RunReport {
    pub quintic: Vec<String>,
    pub depressed: DepressedField,
    pub resolvent: Vec<String>,
    pub k: Option<ComplexField>,
    pub n: Option<ComplexField>,
    pub l: Option<ComplexField>,
    pub m: Option<ComplexField>,
    pub quadratic: Option<Vec<ComplexField>>,
    pub cubic: Option<Vec<ComplexField>>,
    pub roots: Option<Vec<ComplexField>>,
    pub residuals: Option<Vec<String>>,
    #[serde(rename = "match")]
    pub match_report: Option<MatchField>,
    pub timing_ms: f64,
    pub error: Option<String>,
}

impl RunReport {
    pub fn partial(
        q: &GeneralQuintic,
        dq: &DepressedQuintic,
        resolvent: &Resolvent,
        error: Option<String>,
    ) -> Self {
        RunReport {
            quintic: exact_descending(q.to_exact_polynomial().coefficients()),
            depressed: depressed_field(dq),
            resolvent: exact_descending(resolvent.coefficients()),
            k: None,
            n: None,
            l: None,
            m: None,
            quadratic: None,
            cubic: None,
            roots: None,
            residuals: None,
            match_report: None,
            timing_ms: 0.0,
            error,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("quintic:    {}\n", polynomial_text(&self.quintic, "x")));
        out.push_str(&format!(
            "depressed:  C = {}, D = {}, E = {}, F = {}, shift = {}\n",
            self.depressed.c, self.depressed.d, self.depressed.e, self.depressed.f,
            self.depressed.shift
        ));
        out.push_str(&format!("resolvent:  {}\n", polynomial_text(&self.resolvent, "k")));
        let scalar = |name: &str, v: &Option<ComplexField>| match v {
            Some(f) => format!("{name} = {}\n", pair_text(f)),
            None => String::new(),
        };
        out.push_str(&scalar("k", &self.k));
        out.push_str(&scalar("n", &self.n));
        out.push_str(&scalar("l", &self.l));
        out.push_str(&scalar("m", &self.m));
        if let Some(q) = &self.quadratic {
            out.push_str(&format!("quadratic:  {}\n", complex_poly_text(q, "x")));
        }
        if let Some(c) = &self.cubic {
            out.push_str(&format!("cubic:      {}\n", complex_poly_text(c, "x")));
        }
        if let (Some(roots), Some(residuals)) = (&self.roots, &self.residuals) {
            out.push_str("roots:\n");
            for (i, (r, res)) in roots.iter().zip(residuals).enumerate() {
                out.push_str(&format!("  {i}: {}  (residual {res})\n", pair_text(r)));
            }
        }
        if let Some(m) = &self.match_report {
            out.push_str(&format!(
                "match:      matched = {}, max distance = {}\n",
                m.matched, m.max_distance
            ));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error:      {e}\n"));
        }
        out.push_str(&format!("timing_ms:  {}\n", self.timing_ms));
        out
    }
}

fn pair_text(f: &ComplexField) -> String {
    if f.im.parse::<f64>() == Ok(0.0) {
        f.re.clone()
    } else if let Some(mag) = f.im.strip_prefix('-') {
        format!("{} - {}i", f.re, mag)
    } else {
        format!("{} + {}i", f.re, f.im)
    }
}

fn complex_poly_text(coeffs_desc: &[ComplexField], var: &str) -> String {
    let degree = coeffs_desc.len() - 1;
    let terms: Vec<String> = coeffs_desc
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let power = degree - i;
            let var_part = match power {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{power}"),
            };
            format!("({}){var_part}", pair_text(c))
        })
        .collect();
    terms.join(" + ")
}
