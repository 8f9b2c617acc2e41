//! Output data shapes and renderers. JSON schemas carry a `schema`
//! version field; all scalars are exact `p/q` strings, never floats.

use capelli_core::verify::SuiteReport;
use capelli_core::{MultiPoly, Rat, Tables};
use serde::Serialize;

pub const SCHEMA: &str = "capelli/1";

#[derive(Serialize)]
pub struct TermDto {
    pub exp: Vec<u32>,
    pub coeff: String,
}

#[derive(Serialize)]
pub struct ComputeDto {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(rename = "case")]
    pub case_name: String,
    pub n: usize,
    pub r: String,
    pub s: String,
    pub lambda: Vec<i64>,
    pub ell: i64,
    pub d_lambda: Option<String>,
    pub which: String,
    pub polynomial: Option<Vec<TermDto>>,
}

#[derive(Serialize)]
pub struct TableDto {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(rename = "case")]
    pub case_name: String,
    pub n: usize,
    pub r: String,
    pub s: String,
    pub max_ell: i64,
    pub weights: Vec<Vec<i64>>,
    /// `entries[mu][lambda] = p_mu(rho + lambda)`.
    pub entries: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct OpDto {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(rename = "case")]
    pub case_name: String,
    pub n: usize,
    pub r: String,
    pub s: String,
    pub which: String,
    pub truncation: i64,
    pub degree_shift: i64,
    pub window: i64,
    pub weights: Vec<Vec<i64>>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct FailureDto {
    pub check: String,
    pub lambda: Option<Vec<i64>>,
    pub mu: Option<Vec<i64>>,
    pub residual: String,
}

#[derive(Serialize)]
pub struct ReportDto {
    pub suite: String,
    #[serde(rename = "case")]
    pub case_name: String,
    pub n: usize,
    pub r: String,
    pub s: String,
    pub max_ell: i64,
    pub checks: u64,
    pub pass: bool,
    pub failures: Vec<FailureDto>,
}

#[derive(Serialize)]
pub struct VerifyDto {
    pub schema: &'static str,
    pub command: &'static str,
    pub pass: bool,
    pub reports: Vec<ReportDto>,
}

pub fn report_dto(report: &SuiteReport) -> ReportDto {
    ReportDto {
        suite: report.suite.clone(),
        case_name: report.case_name.clone(),
        n: report.n,
        r: report.r.to_string(),
        s: report.s.to_string(),
        max_ell: report.max_ell,
        checks: report.checks,
        pass: report.pass(),
        failures: report
            .failures
            .iter()
            .map(|f| FailureDto {
                check: f.check.clone(),
                lambda: f.lambda.clone(),
                mu: f.mu.clone(),
                residual: f.residual.clone(),
            })
            .collect(),
    }
}

/// Terms in canonical order, leading (graded-lex greatest) first.
pub fn poly_terms(p: &MultiPoly) -> Vec<TermDto> {
    let mut terms: Vec<(Vec<u32>, Rat)> = p
        .terms()
        .map(|(m, c)| (m.0.clone(), c.clone()))
        .collect();
    terms.reverse();
    terms
        .into_iter()
        .map(|(exp, coeff)| TermDto {
            exp,
            coeff: coeff.to_string(),
        })
        .collect()
}

fn latex_rat(x: &Rat) -> String {
    use capelli_core::scalar::rat_int;
    let minus = x < &rat_int(0);
    let mag = if minus { -x.clone() } else { x.clone() };
    let body = if mag.is_integer() {
        format!("{}", mag.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    };
    if minus {
        format!("-{body}")
    } else {
        body
    }
}

/// LaTeX rendering in canonical term order with explicit fraction
/// coefficients.
pub fn latex_poly(p: &MultiPoly) -> String {
    use capelli_core::scalar::rat_int;
    if p.is_zero() {
        return "0".to_string();
    }
    let one = rat_int(1);
    let mut out = String::new();
    let terms: Vec<_> = p.terms().collect();
    for (i, (mono, coeff)) in terms.iter().rev().enumerate() {
        let neg = *coeff < &rat_int(0);
        let mag = if neg { -(*coeff).clone() } else { (*coeff).clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut vars = String::new();
        for (vi, &e) in mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if p.nvars() == 1 {
                "z".to_string()
            } else {
                format!("z_{{{}}}", vi + 1)
            };
            if e == 1 {
                vars.push_str(&format!("{name} "));
            } else {
                vars.push_str(&format!("{name}^{{{e}}} "));
            }
        }
        let vars = vars.trim_end().to_string();
        if vars.is_empty() {
            out.push_str(&latex_rat(&mag));
        } else if mag == one {
            out.push_str(&vars);
        } else {
            out.push_str(&format!("{} {}", latex_rat(&mag), vars));
        }
    }
    out
}

pub fn table_entries(tables: &Tables) -> (Vec<Vec<i64>>, Vec<Vec<String>>) {
    let weights: Vec<Vec<i64>> = tables.weights().iter().map(|w| w.0.clone()).collect();
    let entries: Vec<Vec<String>> = (0..tables.len())
        .map(|mu| {
            (0..tables.len())
                .map(|lam| tables.value(mu, lam).to_string())
                .collect()
        })
        .collect();
    (weights, entries)
}
