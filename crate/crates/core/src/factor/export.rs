//! JSON, CSV and LaTeX renderings of a [`FactorizationResult`].

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::derived::{IcEntry, IcMatrix, IcPlusCandidate};
use super::solve::FactorizationResult;
use crate::error::{Error, Result};
use crate::exact::{parse_laurent, parse_ratfunc, Matrix};
use crate::omega::OmegaMatrix;
use crate::rpart::OrderedIndex;
use crate::{Poly, RatFunc};

/// A named piece of a solved factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Block {
    Omega,
    PMinus,
    PPlus,
    PDoublePrime,
    Lambda,
    Theta,
    LambdaPrime,
    IcMinus,
    IcPlus,
    Diagonal,
}

impl Block {
    pub const ALL: [Block; 10] = [
        Block::Omega,
        Block::PMinus,
        Block::PPlus,
        Block::PDoublePrime,
        Block::Lambda,
        Block::Theta,
        Block::LambdaPrime,
        Block::IcMinus,
        Block::IcPlus,
        Block::Diagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Block::Omega => "omega",
            Block::PMinus => "p-minus",
            Block::PPlus => "p-plus",
            Block::PDoublePrime => "p-double-prime",
            Block::Lambda => "lambda",
            Block::Theta => "theta",
            Block::LambdaPrime => "lambda-prime",
            Block::IcMinus => "ic-minus",
            Block::IcPlus => "ic-plus",
            Block::Diagonal => "diagonal",
        }
    }
}

impl FromStr for Block {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Block::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown block {s:?}")))
    }
}

/// Header row plus string cells.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn ic_cell(e: &IcEntry) -> String {
    match &e.in_s {
        Some(p) => p.to_string_in("s"),
        None => format!("{}!", e.value),
    }
}

fn matrix_table(order: &OrderedIndex, cell: impl Fn(usize, usize) -> String) -> Table {
    let items = order.items();
    let mut header = vec![String::new()];
    header.extend(items.iter().map(ToString::to_string));
    let rows = items
        .iter()
        .enumerate()
        .map(|(i, l)| std::iter::once(l.to_string()).chain((0..items.len()).map(|j| cell(i, j))).collect())
        .collect();
    Table { header, rows }
}

fn diagonal_table<T: ToString>(order: &OrderedIndex, name: &str, v: &[T]) -> Table {
    Table {
        header: vec!["lambda".into(), name.into()],
        rows: order.items().iter().zip(v).map(|(l, x)| vec![l.to_string(), x.to_string()]).collect(),
    }
}

impl OmegaMatrix {
    pub fn table(&self) -> Table {
        matrix_table(&self.order, |i, j| self.entries[(i, j)].to_string())
    }
}

impl FactorizationResult {
    pub fn table(&self, block: Block) -> Table {
        let o = &self.order;
        match block {
            Block::Omega => matrix_table(o, |i, j| self.omega.entries[(i, j)].to_string()),
            Block::PMinus => matrix_table(o, |i, j| self.p_minus[(i, j)].to_string()),
            Block::PPlus => matrix_table(o, |i, j| self.p_plus[(i, j)].to_string()),
            Block::PDoublePrime => {
                let pp = super::derived::modified_pplus(&self.p_plus, &self.theta);
                matrix_table(o, |i, j| pp[(i, j)].to_string())
            }
            Block::Lambda => diagonal_table(o, "lambda", &self.lambda),
            Block::Theta => diagonal_table(o, "theta", &self.theta),
            Block::LambdaPrime => diagonal_table(o, "lambda_prime", &self.lambda_prime),
            Block::IcMinus => matrix_table(o, |i, j| ic_cell(&self.ic_minus.entries[(i, j)])),
            Block::IcPlus => matrix_table(o, |i, j| ic_cell(&self.ic_plus.entries[(i, j)])),
            Block::Diagonal => Table {
                header: vec!["lambda".into(), "a".into(), "xi".into()],
                rows: o
                    .items()
                    .iter()
                    .zip(&self.lambda)
                    .map(|(l, x)| vec![l.to_string(), l.a_value().to_string(), x.to_string()])
                    .collect(),
            },
        }
    }

    pub fn to_json_value(&self) -> Value {
        let m = |x: &Matrix<Poly>| x.map(ToString::to_string).to_rows();
        let d = |v: &[RatFunc]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let ic = |x: &Matrix<IcEntry>| {
            (
                x.map(|e| e.value.to_string()).to_rows(),
                x.map(|e| e.in_s.as_ref().map(|p| p.to_string_in("s"))).to_rows(),
            )
        };
        let (icm_v, icm_s) = ic(&self.ic_minus.entries);
        let (icp_v, icp_s) = ic(&self.ic_plus.entries);
        json!({
            "n": self.omega.n,
            "r": self.omega.r,
            "order": self.order,
            "a": self.order.a_values(),
            "omega": m(&self.omega.entries),
            "p_minus": m(&self.p_minus),
            "p_plus": m(&self.p_plus),
            "lambda": d(&self.lambda),
            "theta": self.theta.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "lambda_prime": d(&self.lambda_prime),
            "ic_minus": {"values": icm_v, "in_s": icm_s},
            "ic_plus": {"values": icp_v, "in_s": icp_s, "column_hypothesis": self.ic_plus.column_hypothesis},
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: FactorJson = serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let order = OrderedIndex::new(v.order)?;
        let k = order.len();
        let mat = |rows: &[Vec<String>], parse: &dyn Fn(&str) -> Result<Poly>| -> Result<Matrix<Poly>> {
            let parsed =
                rows.iter().map(|r| r.iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
            let m = Matrix::from_rows(parsed).ok_or_else(|| Error::Mismatch("ragged matrix".into()))?;
            if m.rows() != k || m.cols() != k {
                return Err(Error::Mismatch("matrix size disagrees with the order".into()));
            }
            Ok(m)
        };
        let in_t = |s: &str| parse_laurent(s);
        let in_s = |s: &str| crate::exact::parse_ratfunc_in(s, 's').and_then(|f| f.try_to_laurent());
        let ic = |j: &IcJson| -> Result<Matrix<IcEntry>> {
            let values = mat(&j.values, &in_t)?;
            let mut entries = Vec::with_capacity(k);
            for i in 0..k {
                let mut row = Vec::with_capacity(k);
                for c in 0..k {
                    let s = j.in_s.get(i).and_then(|r| r.get(c)).ok_or_else(|| Error::Mismatch("in_s size".into()))?;
                    row.push(IcEntry { value: values[(i, c)].clone(), in_s: s.as_deref().map(in_s).transpose()? });
                }
                entries.push(row);
            }
            Ok(Matrix::from_rows(entries).expect("square"))
        };
        let diag = |v: &[String]| -> Result<Vec<RatFunc>> {
            if v.len() != k {
                return Err(Error::Mismatch("diagonal length".into()));
            }
            v.iter().map(|s| parse_ratfunc(s)).collect()
        };
        let omega = OmegaMatrix { n: order.n(), r: order.r(), order: order.clone(), entries: mat(&v.omega, &in_t)? };
        Ok(FactorizationResult {
            omega,
            p_minus: mat(&v.p_minus, &in_t)?,
            p_plus: mat(&v.p_plus, &in_t)?,
            lambda: diag(&v.lambda)?,
            theta: v.theta.iter().map(|s| parse_laurent(s)).collect::<Result<_>>()?,
            lambda_prime: diag(&v.lambda_prime)?,
            ic_minus: IcMatrix { entries: ic(&v.ic_minus)? },
            ic_plus: IcPlusCandidate {
                entries: ic(&v.ic_plus)?,
                column_hypothesis: v.ic_plus.column_hypothesis.unwrap_or_default(),
            },
            order,
        })
    }
}

#[derive(Deserialize)]
struct IcJson {
    values: Vec<Vec<String>>,
    in_s: Vec<Vec<Option<String>>>,
    column_hypothesis: Option<Vec<bool>>,
}

#[derive(Deserialize)]
struct FactorJson {
    order: Vec<crate::rpart::RPartition>,
    omega: Vec<Vec<String>>,
    p_minus: Vec<Vec<String>>,
    p_plus: Vec<Vec<String>>,
    lambda: Vec<String>,
    theta: Vec<String>,
    lambda_prime: Vec<String>,
    ic_minus: IcJson,
    ic_plus: IcJson,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        std::iter::once(&self.header)
            .chain(&self.rows)
            .map(|r| r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",") + "\n")
            .collect()
    }

    /// A `tabular` with the first column as row labels.
    pub fn to_latex(&self) -> String {
        let cols = self.header.len();
        let mut s = format!("\\begin{{tabular}}{{|c|{}|}}\n\\hline\n", "c".repeat(cols.saturating_sub(1)));
        let line = |r: &[String]| r.iter().map(|c| latex_cell(c)).collect::<Vec<_>>().join(" & ") + " \\\\\n";
        s += &line(&self.header);
        s += "\\hline\n";
        for r in &self.rows {
            s += &line(r);
        }
        s + "\\hline\n\\end{tabular}\n"
    }

    pub fn to_json_value(&self) -> Value {
        json!({"header": self.header, "rows": self.rows})
    }
}

/// `t^-3*(x)` style strings to math mode; r-partitions keep their text.
pub fn latex_cell(c: &str) -> String {
    if c.is_empty() {
        return String::new();
    }
    if c.starts_with('(') && c.contains(';') {
        return format!("${}$", c.replace('-', "\\emptyset"));
    }
    let mut out = String::new();
    let chars: Vec<char> = c.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '^' => {
                let start = i + 1;
                let mut j = start;
                if j < chars.len() && chars[j] == '-' {
                    j += 1;
                }
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let e: String = chars[start..j].iter().collect();
                out += &format!("^{{{e}}}");
                i = j;
                continue;
            }
            '*' => {}
            ch => out.push(ch),
        }
        i += 1;
    }
    format!("${out}$")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::solve_factorization;
    use crate::omega::omega_matrix;
    use crate::rpart::default_total_order;

    #[test]
    fn json_round_trip() {
        for (n, r) in [(1, 3), (2, 2)] {
            let res = solve_factorization(&omega_matrix(&default_total_order(n, r)).unwrap()).unwrap();
            let back = FactorizationResult::from_json(&res.to_json()).unwrap();
            assert_eq!(back, res);
        }
        assert!(FactorizationResult::from_json("[]").is_err());
    }

    #[test]
    fn tables() {
        let res = solve_factorization(&omega_matrix(&default_total_order(1, 3)).unwrap()).unwrap();
        let csv = res.table(Block::Diagonal).to_csv();
        assert_eq!(csv, "lambda,a,xi\n(-;-;1),2,1\n(-;1;-),1,t^2 - t^-1\n(1;-;-),0,t^4 - t\n");
        let tex = res.table(Block::PMinus).to_latex();
        assert!(tex.contains("$t^{2}$ & $0$ & $0$"), "{tex}");
        assert_eq!(latex_cell("2*t^-3 + 1"), "$2t^{-3} + 1$");
        assert_eq!("ic-plus".parse::<Block>().unwrap(), Block::IcPlus);
        assert!("bogus".parse::<Block>().is_err());
    }
}
