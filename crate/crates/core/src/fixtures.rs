//! Worked-example tables, stored as text and compared against solved instances.
//!
//! File format: `key value` header lines, then `[section]` blocks. Lists hold
//! one polynomial per line; matrices hold one row per line with `|` between
//! cells, and short rows are padded with zeros.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{parse_laurent, parse_ratfunc, rat, Matrix};
use crate::factor::{modified_pplus, reconstruct, FactorizationResult, Triangular};
use crate::omega::check_nonneg_integral;
use crate::rpart::{enumerate_rpartitions, OrderedIndex, RPartition};
use crate::{Poly, RatFunc};

const N1R3: &str = include_str!("../fixtures/n1r3.txt");
const N2R3: &str = include_str!("../fixtures/n2r3.txt");
const N3R3: &str = include_str!("../fixtures/n3r3.txt");

pub const FIXTURE_IDS: [&str; 4] = ["n1r3", "n1rk", "n2r3", "n3r3"];

#[derive(Clone, Debug, Default)]
pub struct Fixture {
    pub id: String,
    pub order: Option<OrderedIndex>,
    pub a: Option<Vec<i64>>,
    pub omega: Option<Matrix<Poly>>,
    pub p_minus: Option<Matrix<Poly>>,
    pub p_plus: Option<Matrix<Poly>>,
    pub lambda: Option<Vec<RatFunc>>,
    pub theta: Option<Vec<Poly>>,
    pub lambda_prime: Option<Vec<RatFunc>>,
    pub p_double_prime: Option<Matrix<Poly>>,
    pub ic_minus: Option<Matrix<Poly>>,
    /// `t^{-a(tau mu) - a(nu) + a(tau nu)} K~+`, as displayed.
    pub ic_plus_modified: Option<Matrix<Poly>>,
    /// The IC+ table computed geometrically, as displayed.
    pub ic_plus_printed: Option<Matrix<Poly>>,
    pub errata: Vec<Erratum>,
}

/// A printed value replaced by `corrected` in [`Fixture::corrected`].
#[derive(Clone, Debug, PartialEq)]
pub struct Erratum {
    pub section: String,
    pub lambda: RPartition,
    pub corrected: String,
}

impl Fixture {
    pub fn order(&self) -> &OrderedIndex {
        self.order.as_ref().expect("fixtures carry an order")
    }

    pub fn parse(id: &str, text: &str) -> Result<Fixture> {
        let mut header = BTreeMap::new();
        let mut sections: Vec<(String, Vec<String>)> = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                sections.push((name.to_string(), Vec::new()));
            } else if let Some((_, body)) = sections.last_mut() {
                body.push(line.to_string());
            } else if let Some((k, v)) = line.split_once(' ') {
                header.insert(k.to_string(), v.trim().to_string());
            }
        }
        let bad = |m: String| Error::InvalidInput(format!("fixture {id}: {m}"));
        let order_lines = sections.iter().find(|(n, _)| n == "order").ok_or_else(|| bad("missing [order]".into()))?;
        let items = order_lines.1.iter().map(|s| s.parse()).collect::<Result<Vec<RPartition>>>()?;
        let order = OrderedIndex::new(items)?;
        for (key, want) in [("n", order.n() as usize), ("r", order.r())] {
            if header.get(key).map(|v| v.parse::<usize>().ok()) != Some(Some(want)) {
                return Err(bad(format!("header {key} disagrees with the order")));
            }
        }
        let k = order.len();
        let mut f = Fixture { id: id.to_string(), ..Default::default() };
        for (name, body) in &sections {
            let list_len =
                || if body.len() == k { Ok(()) } else { Err(bad(format!("[{name}] has {} lines", body.len()))) };
            match name.as_str() {
                "order" => {}
                "a" => {
                    list_len()?;
                    f.a = Some(
                        body.iter()
                            .map(|s| s.parse().map_err(|_| bad(format!("bad a value {s}"))))
                            .collect::<Result<_>>()?,
                    );
                }
                "lambda" | "lambda_prime" => {
                    list_len()?;
                    let v = body.iter().map(|s| parse_ratfunc(s)).collect::<Result<Vec<_>>>()?;
                    if name == "lambda" {
                        f.lambda = Some(v)
                    } else {
                        f.lambda_prime = Some(v)
                    }
                }
                "errata" => {
                    for line in body {
                        let cells: Vec<&str> = line.split('|').map(str::trim).collect();
                        let [section, lambda, corrected] = cells[..] else {
                            return Err(bad(format!("bad erratum {line:?}")));
                        };
                        if !matches!(section, "a" | "lambda") {
                            return Err(bad(format!("errata only cover a and lambda, not {section}")));
                        }
                        f.errata.push(Erratum {
                            section: section.to_string(),
                            lambda: lambda.parse()?,
                            corrected: corrected.to_string(),
                        });
                    }
                }
                "theta" => {
                    list_len()?;
                    f.theta = Some(body.iter().map(|s| parse_laurent(s)).collect::<Result<_>>()?);
                }
                _ => {
                    if body.len() != k {
                        return Err(bad(format!("[{name}] has {} rows", body.len())));
                    }
                    let mut m = Matrix::filled(k, k, Poly::zero());
                    for (i, row) in body.iter().enumerate() {
                        let cells: Vec<&str> = row.split('|').collect();
                        if cells.len() > k {
                            return Err(bad(format!("[{name}] row {i} too long")));
                        }
                        for (j, c) in cells.iter().enumerate() {
                            m[(i, j)] = parse_laurent(c)?;
                        }
                    }
                    let slot = match name.as_str() {
                        "omega" => &mut f.omega,
                        "p_minus" => &mut f.p_minus,
                        "p_plus" => &mut f.p_plus,
                        "p_double_prime" => &mut f.p_double_prime,
                        "ic_minus" => &mut f.ic_minus,
                        "ic_plus_modified" => &mut f.ic_plus_modified,
                        "ic_plus_printed" => &mut f.ic_plus_printed,
                        other => return Err(bad(format!("unknown section [{other}]"))),
                    };
                    *slot = Some(m);
                }
            }
        }
        f.order = Some(order);
        Ok(f)
    }

    /// The fixture with every erratum applied.
    pub fn corrected(&self) -> Result<Fixture> {
        let mut f = self.clone();
        for e in &self.errata {
            let i = self
                .order()
                .position(&e.lambda)
                .ok_or_else(|| Error::InvalidInput(format!("erratum for unknown {}", e.lambda)))?;
            match e.section.as_str() {
                "a" => {
                    let v = e.corrected.parse().map_err(|_| Error::InvalidInput(e.corrected.clone()))?;
                    f.a.as_mut().ok_or_else(|| Error::InvalidInput("no [a] section".into()))?[i] = v;
                }
                _ => {
                    f.lambda.as_mut().ok_or_else(|| Error::InvalidInput("no [lambda] section".into()))?[i] =
                        parse_ratfunc(&e.corrected)?;
                }
            }
        }
        f.errata.clear();
        Ok(f)
    }

    /// Transcription guards that use only the fixture's own tables.
    pub fn self_check(&self) -> Vec<String> {
        let mut out = Vec::new();
        let order = self.order();
        let items = order.items();
        if let Some(a) = &self.a {
            if *a != order.a_values() {
                out.push("a column disagrees with the a-function".into());
            }
        }
        if let (Some(pm), Some(pp), Some(l)) = (&self.p_minus, &self.p_plus, &self.lambda) {
            match l.iter().map(|x| x.try_to_laurent()).collect::<Result<Vec<_>>>() {
                Err(e) => out.push(format!("lambda: {e}")),
                Ok(xi) => {
                    let rec = reconstruct(&Triangular { p_minus: pm.clone(), p_plus: pp.clone(), xi });
                    match &self.omega {
                        Some(om) if *om != rec => out.push("P- Lambda tP+ differs from the listed Omega".into()),
                        _ => {}
                    }
                    for (i, li) in items.iter().enumerate() {
                        for (j, lj) in items.iter().enumerate() {
                            if let Err(e) = check_nonneg_integral(&rec[(i, j)]) {
                                out.push(format!("reconstructed Omega({li},{lj}) = {}: {e}", rec[(i, j)]));
                            }
                            let (ti, tj) =
                                (order.position(&li.transpose()).unwrap(), order.position(&lj.transpose()).unwrap());
                            if rec[(i, j)] != rec[(ti, tj)] {
                                out.push(format!("reconstructed Omega not transpose-symmetric at ({li},{lj})"));
                            }
                        }
                    }
                }
            }
        }
        if let (Some(l), Some(th), Some(lp)) = (&self.lambda, &self.theta, &self.lambda_prime) {
            for (i, li) in items.iter().enumerate() {
                if l[i].mul_laurent(&th[i]) != lp[i] {
                    out.push(format!("Lambda Theta differs from Lambda' at {li}"));
                }
            }
        }
        if let (Some(pp), Some(th), Some(pdp)) = (&self.p_plus, &self.theta, &self.p_double_prime) {
            if modified_pplus(pp, th) != *pdp {
                out.push("P+ Theta^-1 differs from P''".into());
            }
        }
        if let (Some(pm), Some(ic)) = (&self.p_minus, &self.ic_minus) {
            let a = order.a_values();
            for (i, li) in items.iter().enumerate() {
                for (j, lj) in items.iter().enumerate() {
                    if pm[(i, j)].shift(-a[i]) != ic[(i, j)] {
                        out.push(format!("IC- at ({li},{lj}) is not t^-a P-"));
                    }
                }
            }
        }
        out
    }

    /// Every listed table that differs from `res`, plus the expected
    /// divergence of the IC+ candidate from the printed IC+ table.
    pub fn compare(&self, res: &FactorizationResult) -> Vec<String> {
        let mut out = Vec::new();
        if res.order.items() != self.order().items() {
            out.push("order differs".into());
            return out;
        }
        let items = self.order().items();
        let mut mat = |name: &str, want: &Option<Matrix<Poly>>, got: &Matrix<Poly>| {
            if let Some(w) = want {
                for (i, li) in items.iter().enumerate() {
                    for (j, lj) in items.iter().enumerate() {
                        if w[(i, j)].to_string() != got[(i, j)].to_string() {
                            out.push(format!("{name}({li},{lj}): expected {}, got {}", w[(i, j)], got[(i, j)]));
                        }
                    }
                }
            }
        };
        mat("omega", &self.omega, &res.omega.entries);
        mat("p_minus", &self.p_minus, &res.p_minus);
        mat("p_plus", &self.p_plus, &res.p_plus);
        mat("p_double_prime", &self.p_double_prime, &modified_pplus(&res.p_plus, &res.theta));
        mat("ic_minus", &self.ic_minus, &res.ic_minus.values());
        mat("ic_plus_modified", &self.ic_plus_modified, &res.ic_plus.values());
        if self.ic_plus_modified.is_none() && self.id != "n2r3" {
            mat("ic_plus", &self.ic_plus_printed, &res.ic_plus.values());
        }
        let mut list = |name: &str, want: Option<Vec<String>>, got: Vec<String>| {
            if let Some(w) = want {
                for ((l, a), b) in items.iter().zip(&w).zip(&got) {
                    if a != b {
                        out.push(format!("{name}({l}): expected {a}, got {b}"));
                    }
                }
            }
        };
        let strs = |v: &[RatFunc]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        list(
            "a",
            self.a.as_ref().map(|v| v.iter().map(ToString::to_string).collect()),
            res.order.a_values().iter().map(ToString::to_string).collect(),
        );
        list("lambda", self.lambda.as_deref().map(strs), strs(&res.lambda));
        list(
            "theta",
            self.theta.as_ref().map(|v| v.iter().map(ToString::to_string).collect()),
            res.theta.iter().map(ToString::to_string).collect(),
        );
        list("lambda_prime", self.lambda_prime.as_deref().map(strs), strs(&res.lambda_prime));
        out
    }

    /// Entries where the IC+ candidate differs from the printed IC+ table.
    pub fn ic_plus_divergence(&self, res: &FactorizationResult) -> Vec<(RPartition, RPartition)> {
        let Some(printed) = &self.ic_plus_printed else { return Vec::new() };
        let items = self.order().items();
        let cand = res.ic_plus.values();
        let mut out = Vec::new();
        for (i, li) in items.iter().enumerate() {
            for (j, lj) in items.iter().enumerate() {
                if printed[(i, j)] != cand[(i, j)] {
                    out.push((li.clone(), lj.clone()));
                }
            }
        }
        out
    }
}

/// The `n = 1` tables for general `r`, from their closed forms.
pub fn n1_general(r: usize) -> Result<Fixture> {
    if r < 2 {
        return Err(Error::InvalidInput("closed forms need r >= 2".into()));
    }
    // lambda_i has the box in slot r+1-i
    let items = (1..=r).map(|i| RPartition::single(r, r - i, vec![1])).collect::<Result<Vec<_>>>()?;
    let order = OrderedIndex::new(items)?;
    let ri = r as i64;
    let one = || Poly::constant(rat(1));
    let pm = Matrix::from_fn(r, r, |i, j| if j <= i { Poly::t_pow(ri - 1 - i as i64) } else { Poly::zero() });
    let pp = Matrix::from_fn(r, r, |i, j| {
        if i == j {
            Poly::t_pow(ri - 1 - i as i64)
        } else if j == 0 && i > 0 {
            Poly::t_pow(i as i64 - 1)
        } else {
            Poly::zero()
        }
    });
    let lambda =
        (0..r as i64)
            .map(|i| {
                if i == 0 {
                    RatFunc::one()
                } else {
                    RatFunc::from_laurent(Poly::t_pow(2 * i) - Poly::t_pow(2 * i - ri))
                }
            })
            .collect();
    let theta = (0..r as i64).map(|i| if i == 0 { one() } else { Poly::t_pow(ri - 2 * i) }).collect();
    let lambda_prime =
        (0..r).map(|i| RatFunc::from_laurent(if i == 0 { one() } else { Poly::t_pow_minus_one(ri) })).collect();
    let ic_minus = Matrix::from_fn(r, r, |i, j| if j <= i { one() } else { Poly::zero() });
    let ic_plus = Matrix::from_fn(r, r, |i, j| if i == j || j == 0 { one() } else { Poly::zero() });
    let a = order.a_values();
    Ok(Fixture {
        id: format!("n1r{r}"),
        a: Some(a),
        p_minus: Some(pm),
        p_plus: Some(pp),
        lambda: Some(lambda),
        theta: Some(theta),
        lambda_prime: Some(lambda_prime),
        ic_minus: Some(ic_minus),
        ic_plus_printed: Some(ic_plus),
        order: Some(order),
        ..Default::default()
    })
}

/// Fixtures by id; `n1rk` expands to `r = 2..=6`.
pub fn load(id: &str) -> Result<Vec<Fixture>> {
    match id {
        "n1r3" => Ok(vec![Fixture::parse(id, N1R3)?]),
        "n2r3" => Ok(vec![Fixture::parse(id, N2R3)?]),
        "n3r3" => Ok(vec![Fixture::parse(id, N3R3)?]),
        "n1rk" => (2..=6).map(n1_general).collect(),
        other => Err(Error::InvalidInput(format!("unknown fixture {other:?}; expected one of {FIXTURE_IDS:?}"))),
    }
}

pub fn load_all() -> Result<Vec<Fixture>> {
    let mut v = Vec::new();
    for id in FIXTURE_IDS {
        v.extend(load(id)?);
    }
    Ok(v)
}

/// Sanity: every fixture covers all of `P(n,r)`.
pub fn covers(f: &Fixture) -> bool {
    let o = f.order();
    enumerate_rpartitions(o.n(), o.r()).len() == o.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::solve_factorization;
    use crate::omega::omega_matrix;

    #[test]
    fn fixtures_are_self_consistent() {
        for f in load_all().unwrap() {
            assert!(covers(&f));
            let v = f.corrected().unwrap().self_check();
            assert!(v.is_empty(), "{}: {v:#?}", f.id);
            assert_eq!(f.errata.is_empty(), f.self_check().is_empty(), "{}", f.id);
        }
    }

    #[test]
    fn errata_are_the_only_n3r3_departures() {
        let f = &load("n3r3").unwrap()[0];
        assert_eq!(f.errata.len(), 3);
        let res = solve_factorization(&omega_matrix(f.order()).unwrap()).unwrap();
        assert_eq!(f.compare(&res).len(), 3);
        assert!(f.corrected().unwrap().compare(&res).is_empty());
    }

    #[test]
    fn small_fixtures_reproduce() {
        for id in ["n1r3", "n1rk", "n2r3"] {
            for f in load(id).unwrap() {
                let res = solve_factorization(&omega_matrix(f.order()).unwrap()).unwrap();
                let diff = f.compare(&res);
                assert!(diff.is_empty(), "{}: {diff:#?}", f.id);
            }
        }
    }

    #[test]
    fn ic_plus_candidate_departs_from_printed_table() {
        let f = &load("n2r3").unwrap()[0];
        let res = solve_factorization(&omega_matrix(f.order()).unwrap()).unwrap();
        let d = f.ic_plus_divergence(&res);
        assert!(!d.is_empty());
        assert!(d.iter().all(|(l, _)| l.to_string() == "(1;1;-)"), "{d:?}");
        let f = &load("n1r3").unwrap()[0];
        let res = solve_factorization(&omega_matrix(f.order()).unwrap()).unwrap();
        assert!(f.ic_plus_divergence(&res).is_empty());
    }

    #[test]
    fn malformed_text_is_rejected() {
        assert!(Fixture::parse("x", "n 1\nr 3\n").is_err());
        assert!(Fixture::parse("x", "n 1\nr 2\n[order]\n(-;-;1)\n(-;1;-)\n(1;-;-)\n").is_err());
        assert!(Fixture::parse("x", "n 1\nr 3\n[order]\n(-;-;1)\n(-;1;-)\n(1;-;-)\n[bogus]\n1\n1\n1\n").is_err());
        assert!(load("n9r9").is_err());
    }
}
