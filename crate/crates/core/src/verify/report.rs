//! Pass/fail checks and their CSV / JSON forms.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{CostRow, TrotterSweep};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Comparison {
    AtMost(f64),
    AtLeast(f64),
    Below(f64),
    Within(f64, f64),
}

impl Comparison {
    pub fn holds(&self, v: f64) -> bool {
        match *self {
            Comparison::AtMost(t) => v <= t,
            Comparison::AtLeast(t) => v >= t,
            Comparison::Below(t) => v < t,
            Comparison::Within(lo, hi) => lo <= v && v <= hi,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::AtMost(t) => write!(f, "<= {t:e}"),
            Comparison::AtLeast(t) => write!(f, ">= {t}"),
            Comparison::Below(t) => write!(f, "< {t}"),
            Comparison::Within(lo, hi) => write!(f, "in [{lo}, {hi}]"),
        }
    }
}

impl Serialize for Comparison {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One measured quantity against its threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub suite: String,
    pub case: String,
    pub metric: String,
    pub value: f64,
    pub threshold: Comparison,
    pub pass: bool,
}

impl Check {
    pub fn new(suite: &str, case: impl Into<String>, metric: &str, value: f64, threshold: Comparison) -> Self {
        Self { suite: suite.into(), case: case.into(), metric: metric.into(), value, threshold, pass: threshold.holds(value) }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}/{} {} = {:e} ({})",
            if self.pass { "PASS" } else { "FAIL" },
            self.suite,
            self.case,
            self.metric,
            self.value,
            self.threshold
        )
    }
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Invalid(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

/// Columns: suite, case, metric, value, threshold, pass.
pub fn checks_csv(checks: &[Check]) -> Result<String> {
    to_csv(checks)
}

pub fn checks_json(checks: &[Check]) -> Result<String> {
    serde_json::to_string_pretty(checks).map_err(|e| Error::Invalid(e.to_string()))
}

/// One line per `(jz, N)`.
pub fn sweeps_csv(sweeps: &[TrotterSweep]) -> Result<String> {
    to_csv(&sweeps.iter().flat_map(|s| s.rows.iter().cloned()).collect::<Vec<_>>())
}

pub fn costs_csv(rows: &[CostRow]) -> Result<String> {
    to_csv(rows)
}
