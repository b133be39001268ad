//! Verification suites with JSON reports.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factor::{order_sensitivity, solve_factorization};
use crate::fixtures::{load_all, Fixture};
use crate::greencheck::{lemma59_check, prefix_sum_check, thm55_check, CheckMode};
use crate::omega::{omega_matrix, omega_matrix_bruteforce, WREATH_BOUND};
use crate::oracle::modified_kostka;
use crate::rpart::{default_total_order, sample_linear_extensions};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub violations: Vec<String>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: &str, params: Value, violations: Vec<String>) -> Self {
        let pass = violations.is_empty();
        Report { suite: suite.to_string(), params, violations, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Merges several reports into one under `suite`.
    pub fn combine(suite: &str, params: Value, parts: Vec<Report>) -> Self {
        let violations = parts
            .iter()
            .flat_map(|p| p.violations.iter().map(move |v| format!("[{} {}] {v}", p.suite, p.params)))
            .collect();
        Report::new(suite, params, violations)
    }
}

pub const SUITES: [&str; 7] = ["fixtures", "lemma59", "thm55", "oracle", "symmetry", "classical-r1", "orders"];

/// Parameters shared by the suites; each suite reads the fields it needs.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n: u32,
    pub r: usize,
    pub q: Vec<i64>,
    pub samples: usize,
    pub seed: u64,
    pub wreath_bound: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: 2, r: 3, q: Vec::new(), samples: 5, seed: 1, wreath_bound: WREATH_BOUND }
    }
}

/// Printed tables against the solver. Errata entries are reported as
/// violations unless `apply_errata` is set.
pub fn verify_fixtures(fixtures: &[Fixture], apply_errata: bool) -> Result<Report> {
    let mut violations = Vec::new();
    for f in fixtures {
        let f = if apply_errata { f.corrected()? } else { f.clone() };
        for v in f.corrected()?.self_check() {
            violations.push(format!("{}: transcription: {v}", f.id));
        }
        let res = solve_factorization(&omega_matrix(f.order())?)?;
        violations.extend(f.compare(&res).into_iter().map(|v| format!("{}: {v}", f.id)));
    }
    let ids: Vec<&str> = fixtures.iter().map(|f| f.id.as_str()).collect();
    Ok(Report::new("fixtures", json!({"fixtures": ids, "errata_applied": apply_errata}), violations))
}

pub fn verify_oracle(n: u32, r: usize, bound: u64) -> Result<Report> {
    let order = default_total_order(n, r);
    let a = omega_matrix(&order)?;
    let b = omega_matrix_bruteforce(&order, bound)?;
    let mut violations = Vec::new();
    for (i, l) in order.items().iter().enumerate() {
        for (j, m) in order.items().iter().enumerate() {
            if a.entries[(i, j)] != b.entries[(i, j)] {
                violations.push(format!("({l},{m}): cosets {} != wreath {}", a.entries[(i, j)], b.entries[(i, j)]));
            }
        }
    }
    Ok(Report::new("oracle", json!({"n": n, "r": r}), violations))
}

/// Structural invariants of `Omega` and of the factorization.
pub fn verify_symmetry(n: u32, r: usize) -> Result<Report> {
    let om = omega_matrix(&default_total_order(n, r))?;
    let res = solve_factorization(&om)?;
    let mut violations = res.invariant_violations();
    let items = om.order.items();
    for (i, l) in items.iter().enumerate() {
        for (j, m) in items.iter().enumerate() {
            if let Err(e) = crate::omega::check_nonneg_integral(&om.entries[(i, j)]) {
                violations.push(format!("omega({l},{m}): {e}"));
            }
        }
    }
    if !om.is_transpose_symmetric() {
        violations.push("omega(l,m) != omega(tl,tm)".into());
    }
    if r <= 2 {
        if !om.is_symmetric() {
            violations.push("omega is not symmetric".into());
        }
        if res.p_minus != res.p_plus {
            violations.push("P- != P+".into());
        }
    }
    Ok(Report::new("symmetry", json!({"n": n, "r": r}), violations))
}

pub fn verify_classical(n: u32) -> Result<Report> {
    let res = solve_factorization(&omega_matrix(&default_total_order(n, 1))?)?;
    let items = res.order.items();
    let mut violations = Vec::new();
    for (i, l) in items.iter().enumerate() {
        for (j, m) in items.iter().enumerate() {
            let want = modified_kostka(&l.component(0).to_vec(), &m.component(0).to_vec());
            if res.p_minus[(i, j)] != want {
                violations.push(format!("K~({l},{m}) = {}, charge oracle gives {want}", res.p_minus[(i, j)]));
            }
        }
    }
    Ok(Report::new("classical-r1", json!({"n": n}), violations))
}

/// Order dependence across sampled linear extensions. Only differences on
/// dominance-comparable pairs count as violations, and only for `r <= 2`.
pub fn verify_orders(n: u32, r: usize, samples: usize, seed: u64) -> Result<Report> {
    let om = omega_matrix(&default_total_order(n, r))?;
    let orders = sample_linear_extensions(n, r, samples, seed);
    let rep = order_sensitivity(&om, &orders)?;
    let fmt = |d: &crate::factor::EntryDifference| format!("K{}({},{}): {:?}", d.sign, d.lambda, d.mu, d.values);
    let violations = if r <= 2 { rep.comparable.iter().map(fmt).collect() } else { Vec::new() };
    Ok(Report::new(
        "orders",
        json!({
            "n": n, "r": r, "samples": rep.orders, "seed": seed,
            "comparable_differences": rep.comparable.iter().map(fmt).collect::<Vec<_>>(),
            "incomparable_differences": rep.incomparable.iter().map(fmt).collect::<Vec<_>>(),
        }),
        violations,
    ))
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Report> {
    match name {
        "fixtures" => verify_fixtures(&load_all()?, false),
        "lemma59" => Ok(Report::combine(
            "lemma59",
            json!({"n": p.n, "r": p.r}),
            vec![lemma59_check(p.n, p.r)?, prefix_sum_check(p.n, p.r)?],
        )),
        "thm55" => {
            let mode = if p.q.is_empty() { CheckMode::Symbolic } else { CheckMode::Numeric(p.q.clone()) };
            thm55_check(p.n, p.r, &mode)
        }
        "oracle" => verify_oracle(p.n, p.r, p.wreath_bound),
        "symmetry" => verify_symmetry(p.n, p.r),
        "classical-r1" => verify_classical(p.n),
        "orders" => verify_orders(p.n, p.r, p.samples, p.seed),
        other => Err(Error::InvalidInput(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_cases() {
        let p = SuiteParams { n: 2, r: 2, q: vec![2], samples: 3, seed: 7, ..Default::default() };
        for s in ["lemma59", "thm55", "oracle", "symmetry", "orders"] {
            let rep = run_suite(s, &p).unwrap();
            assert!(rep.pass, "{}", rep.to_json());
        }
        assert!(verify_classical(3).unwrap().pass);
        assert!(run_suite("nope", &p).is_err());
    }

    #[test]
    fn report_json_shape() {
        let rep = Report::new("x", json!({"n": 1}), vec!["bad".into()]);
        let v: Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["suite"], "x");
        assert_eq!(v["pass"], false);
        assert_eq!(v["violations"][0], "bad");
    }
}
