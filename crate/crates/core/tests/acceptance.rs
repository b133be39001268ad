//! One line per acceptance criterion. `--strict` also counts known failures.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};

use kostka_core::exact::Cyclotomic;
use kostka_core::factor::solve_factorization;
use kostka_core::fixtures::{load, Fixture};
use kostka_core::greencheck::{lemma59_check, prefix_sum_check, thm55_check, CheckMode};
use kostka_core::omega::{epsilon_value, omega_matrix, rho_character, wreath_group, WREATH_BOUND};
use kostka_core::rpart::{compositions, enumerate_contingency, enumerate_rpartitions, factorial};
use kostka_core::symgrp::{char_table, double_cosets};
use kostka_core::verify::{verify_classical, verify_oracle, verify_symmetry};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(violations: Vec<String>, summary: impl Into<String>) -> Outcome {
    let mut detail = summary.into();
    if !violations.is_empty() {
        let shown: Vec<_> = violations.iter().take(5).cloned().collect();
        detail = format!("{} violation(s): {}", violations.len(), shown.join("; "));
    }
    Outcome { ok: violations.is_empty(), detail }
}

fn fixture_run(id: &str) -> Vec<(Fixture, Vec<String>, kostka_core::factor::FactorizationResult)> {
    load(id)
        .unwrap()
        .into_iter()
        .map(|f| {
            let res = solve_factorization(&omega_matrix(f.order()).unwrap()).unwrap();
            let mut v = f.corrected().unwrap().self_check();
            v.extend(f.compare(&res));
            (f, v, res)
        })
        .collect()
}

fn c1() -> Outcome {
    let v: Vec<String> = fixture_run("n1r3").into_iter().flat_map(|(_, v, _)| v).collect();
    outcome(v, "omega, P-, Lambda, P+ reproduced")
}

fn c2() -> Outcome {
    let runs = fixture_run("n1rk");
    let n = runs.len();
    outcome(runs.into_iter().flat_map(|(_, v, _)| v).collect(), format!("r = 2..=6, {n} instances"))
}

fn c3() -> Outcome {
    let mut runs = fixture_run("n2r3");
    let (f, mut v, res) = runs.remove(0);
    let div = f.ic_plus_divergence(&res);
    if div.is_empty() {
        v.push("IC+ candidate coincides with the printed IC+ table".into());
    }
    let cells: Vec<String> = div.iter().map(|(a, b)| format!("({a},{b})")).collect();
    outcome(v, format!("tables match; IC+ candidate differs at {}", cells.join(" ")))
}

fn c4() -> Outcome {
    let mut runs = fixture_run("n3r3");
    let (f, v, res) = runs.remove(0);
    let fixed = f.corrected().unwrap().compare(&res);
    let mut o = outcome(v, "22 a-values, 22 diagonal values, all P+- entries match");
    if !o.ok && fixed.is_empty() {
        o.detail += "; the departures are exactly the recorded errata, and the corrected table matches";
    }
    o
}

fn c5() -> Outcome {
    let mut v = Vec::new();
    for (n, r) in [(1, 3), (1, 4), (2, 3), (2, 4), (3, 3)] {
        v.extend(verify_oracle(n, r, WREATH_BOUND).unwrap().violations.into_iter().map(|x| format!("({n},{r}) {x}")));
    }
    outcome(v, "cosets = wreath at (1,3) (1,4) (2,3) (2,4) (3,3)")
}

fn c6() -> Outcome {
    let mut v = Vec::new();
    let mut cases = 0;
    for n in 0..=4 {
        for r in 1..=4 {
            for rep in [lemma59_check(n, r).unwrap(), prefix_sum_check(n, r).unwrap()] {
                cases += rep.params["cases"].as_u64().unwrap();
                v.extend(rep.violations);
            }
        }
    }
    outcome(v, format!("{cases} (lambda, mu, h) cases"))
}

fn c7() -> Outcome {
    let mut v = Vec::new();
    for (n, r) in [(1, 3), (2, 3)] {
        v.extend(thm55_check(n, r, &CheckMode::Symbolic).unwrap().violations);
    }
    v.extend(thm55_check(3, 3, &CheckMode::Numeric(vec![2, 3, 4])).unwrap().violations);
    outcome(v, "symbolic at (1,3) (2,3); numeric at (3,3), q = 2, 3, 4")
}

fn c8() -> Outcome {
    let mut v = Vec::new();
    let mut count = 0;
    let grid = (1..=5)
        .map(|n| (n, 1))
        .chain((1..=4).map(|n| (n, 2)))
        .chain((1..=3).flat_map(|n| (3..=4).map(move |r| (n, r))));
    for (n, r) in grid {
        count += 1;
        v.extend(verify_symmetry(n, r).unwrap().violations.into_iter().map(|x| format!("({n},{r}) {x}")));
    }
    for id in ["n1r3", "n1rk", "n2r3", "n3r3"] {
        for (f, _, res) in fixture_run(id) {
            count += 1;
            v.extend(res.invariant_violations().into_iter().map(|x| format!("{} {x}", f.id)));
        }
    }
    outcome(v, format!("{count} solved instances"))
}

fn c9() -> Outcome {
    let v = (1..=5).flat_map(|n| verify_classical(n).unwrap().violations).collect();
    outcome(v, "n = 1..=5 against the charge oracle")
}

fn c10() -> Outcome {
    let mut v = Vec::new();
    for n in 0..=6 {
        let t = char_table(n);
        let k = t.partitions.len();
        for a in 0..k {
            for b in 0..k {
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                if t.row_inner(a, b) != want {
                    v.push(format!("orthogonality n={n} ({a},{b})"));
                }
            }
        }
    }
    for n in 0..=6 {
        for r in 1..=2 {
            let cs = compositions(n, r);
            for m in &cs {
                for mp in &cs {
                    let dcs = double_cosets(m, mp).unwrap();
                    let total: u128 = dcs.iter().map(|d| d.size).sum();
                    let mut labels: Vec<_> = dcs.iter().map(|d| d.label.clone()).collect();
                    labels.sort();
                    let mut want = enumerate_contingency(m, mp).unwrap();
                    want.sort();
                    if total != factorial(n) || labels != want {
                        v.push(format!("cosets {:?} {:?}", m.0, mp.0));
                    }
                }
            }
        }
    }
    for n in 1..=3usize {
        for r in 1..=3u32 {
            let g = wreath_group(n, r, WREATH_BOUND).unwrap();
            for l in enumerate_rpartitions(n as u32, r as usize) {
                let lt = l.transpose();
                for w in &g.elements {
                    if rho_character(&lt, w, &g) != rho_character(&l, w, &g) * Cyclotomic::from_int(epsilon_value(w)) {
                        v.push(format!("transpose twist {l}"));
                        break;
                    }
                }
            }
        }
    }
    for n in 0..=4 {
        for r in 1..=4 {
            for l in enumerate_rpartitions(n, r) {
                if l.weight().dim_xm_unip() - l.dim_x() != 2 * l.n_value() as i64 {
                    v.push(format!("dimension shift {l}"));
                }
            }
        }
    }
    outcome(v, "orthogonality, coset completeness, transpose twist, dimension shift")
}

type Criterion = (u32, &'static str, Duration, bool, fn() -> Outcome);

fn main() {
    let strict = std::env::args().any(|a| a == "--strict");
    let s = Duration::from_secs;
    // the fourth flag marks a failure that is understood and excluded from the exit code
    let criteria: [Criterion; 10] = [
        (1, "n=1 r=3 tables", s(1), false, c1),
        (2, "n=1 closed forms", s(5), false, c2),
        (3, "n=2 r=3 tables", s(10), false, c3),
        (4, "n=3 r=3 tables", s(60), true, c4),
        (5, "dual-route oracle", s(600), false, c5),
        (6, "exponent identities", s(60), false, c6),
        (7, "Green inner products", s(300), false, c7),
        (8, "structural invariants", s(600), false, c8),
        (9, "classical limit", s(600), false, c9),
        (10, "property suites", s(600), false, c10),
    ];
    let mut failed = 0;
    for (k, name, limit, known, f) in criteria {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let in_time = took <= limit;
        let pass = o.ok && in_time;
        let time_note = if in_time { String::new() } else { format!(" [over the {}s limit]", limit.as_secs()) };
        let tag = if pass { "PASS" } else { "FAIL" };
        let known_note = if !pass && known { " (known)" } else { "" };
        println!("{tag} {k:>2} {name}{known_note} ({:.2}s){time_note}: {}", took.as_secs_f64(), o.detail);
        if !pass && (!known || strict) {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
