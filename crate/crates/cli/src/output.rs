use std::collections::BTreeMap;
use std::fmt::Write as _;

use colpart::algebra::{BigRational, LaurentPoly};
use colpart::BlockDistribution;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// Exact number as a string: an integer when the denominator is 1,
/// otherwise `num/den`.
pub fn exact(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `r` rounded half away from zero to `digits` places.
pub fn decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = (r * BigRational::from(scale)).round().to_integer();
    let neg = scaled.is_negative();
    let mut s = scaled.abs().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// `{y exponent: coefficient}` for a polynomial in `y` alone.
pub fn y_map(p: &LaurentPoly) -> BTreeMap<i32, String> {
    p.terms().map(|((_, ye), c)| (ye, exact(c))).collect()
}

#[derive(Serialize)]
pub struct DistDoc {
    pub command: &'static str,
    pub graph: String,
    pub k: u32,
    pub method: String,
    pub vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distribution: Option<BTreeMap<i32, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
    pub expected: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_decimal: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimals: Option<usize>,
    pub elapsed_ms: u128,
}

impl DistDoc {
    pub fn distribution_of(d: &BlockDistribution) -> BTreeMap<i32, String> {
        y_map(d.poly())
    }
}

#[derive(Serialize)]
pub struct SeriesTerm {
    pub n: usize,
    pub coefficients: BTreeMap<i32, String>,
}

#[derive(Serialize)]
pub struct SeriesDoc {
    pub command: &'static str,
    pub source: String,
    pub k: u32,
    #[serde(rename = "N")]
    pub max_n: usize,
    pub series: Vec<SeriesTerm>,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
pub struct GfDoc {
    pub command: &'static str,
    pub source: String,
    pub k: u32,
    pub num: String,
    pub den: String,
    #[serde(skip)]
    pub num_poly: LaurentPoly,
    #[serde(skip)]
    pub den_poly: LaurentPoly,
}

#[derive(Serialize)]
pub struct ClassRow {
    pub parts: Vec<usize>,
    pub representative: Vec<Vec<usize>>,
    pub size: String,
    pub support: usize,
}

#[derive(Serialize)]
pub struct ClassesDoc {
    pub command: &'static str,
    pub m: usize,
    pub k: usize,
    pub count: usize,
    pub total: String,
    pub classes: Vec<ClassRow>,
}

#[derive(Serialize)]
pub struct CheckRow {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    pub command: &'static str,
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckRow>,
    pub elapsed_ms: u128,
}

fn csv_header() -> String {
    "x_exp,y_exp,coefficient\n".to_owned()
}

pub fn dist_csv(doc: &DistDoc) -> String {
    let mut out = csv_header();
    for (ye, c) in doc.distribution.iter().flatten() {
        let _ = writeln!(out, "0,{ye},{c}");
    }
    out
}

pub fn series_csv(doc: &SeriesDoc) -> String {
    let mut out = csv_header();
    for t in &doc.series {
        for (ye, c) in &t.coefficients {
            let _ = writeln!(out, "{},{ye},{c}", t.n);
        }
    }
    out
}

pub fn gf_csv(doc: &GfDoc) -> String {
    let mut out = "part,x_exp,y_exp,coefficient\n".to_owned();
    for (part, p) in [("num", &doc.num_poly), ("den", &doc.den_poly)] {
        for ((xe, ye), c) in p.terms() {
            let _ = writeln!(out, "{part},{xe},{ye},{}", exact(c));
        }
    }
    out
}

pub fn classes_csv(doc: &ClassesDoc) -> String {
    let mut out = "parts,size,support\n".to_owned();
    for c in &doc.classes {
        let parts: Vec<String> = c.parts.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{},{},{}", parts.join(" "), c.size, c.support);
    }
    out
}

pub fn verify_text(doc: &VerifyDoc) -> String {
    let mut out = String::new();
    for c in &doc.checks {
        if c.ok {
            let _ = writeln!(out, "PASS {}", c.name);
        } else {
            let _ = writeln!(out, "FAIL {}: {}", c.name, c.detail);
        }
    }
    let _ = writeln!(
        out,
        "{} suite: {} passed, {} failed, {} ms",
        doc.suite, doc.passed, doc.failed, doc.elapsed_ms
    );
    out
}

/// The first y exponent at which two polynomials in `y` differ.
pub fn first_difference(label: &str, got: &LaurentPoly, want: &LaurentPoly) -> Option<String> {
    let diff = got - want;
    let ((xe, ye), _) = diff.terms().next()?;
    let show = |p: &LaurentPoly| {
        let c = p.coeff(xe, ye);
        if c.is_zero() {
            "0".to_owned()
        } else {
            exact(&c)
        }
    };
    Some(format!(
        "{label}: coefficient of y^{ye} is {} but expected {}",
        show(got),
        show(want)
    ))
}
