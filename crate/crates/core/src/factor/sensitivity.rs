//! Dependence of `K~+-` on the chosen linear extension of dominance.

use serde::Serialize;

use super::solve::solve_factorization;
use crate::error::{Error, Result};
use crate::omega::OmegaMatrix;
use crate::rpart::{dominance_leq, OrderedIndex, RPartition};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryDifference {
    pub sign: &'static str,
    pub lambda: RPartition,
    pub mu: RPartition,
    /// One value per order.
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderSensitivity {
    pub orders: usize,
    pub comparable: Vec<EntryDifference>,
    pub incomparable: Vec<EntryDifference>,
}

impl OrderSensitivity {
    pub fn is_empty(&self) -> bool {
        self.comparable.is_empty() && self.incomparable.is_empty()
    }
}

/// Solves under each order and lists the entries that disagree.
pub fn order_sensitivity(omega: &OmegaMatrix, orders: &[OrderedIndex]) -> Result<OrderSensitivity> {
    if orders.is_empty() {
        return Err(Error::InvalidInput("no orders given".into()));
    }
    let results = orders.iter().map(|o| solve_factorization(&omega.reorder(o)?)).collect::<Result<Vec<_>>>()?;
    let items = omega.order.items();
    let mut report = OrderSensitivity { orders: orders.len(), comparable: Vec::new(), incomparable: Vec::new() };
    for l in items {
        for m in items {
            let cmp = dominance_leq(m, l)? || dominance_leq(l, m)?;
            for (sign, minus) in [("minus", true), ("plus", false)] {
                let values: Vec<String> = results
                    .iter()
                    .map(|res| {
                        let (i, j) = (res.order.position(l).unwrap(), res.order.position(m).unwrap());
                        let p = if minus { &res.p_minus } else { &res.p_plus };
                        p[(i, j)].to_string()
                    })
                    .collect();
                if values.iter().any(|v| *v != values[0]) {
                    let d = EntryDifference { sign, lambda: l.clone(), mu: m.clone(), values };
                    if cmp {
                        report.comparable.push(d);
                    } else {
                        report.incomparable.push(d);
                    }
                }
            }
        }
    }
    Ok(report)
}
