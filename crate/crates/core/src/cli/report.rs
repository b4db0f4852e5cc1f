//! Machine-readable verdicts.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Girth;
use crate::perm::factorial;
use crate::theory::VerdictReport;

use super::parse::parse_spec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CayleyJson {
    pub vertices: u64,
    pub degree: usize,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Theorem1Json {
    pub applicable: bool,
    pub confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckJson {
    /// False when the hypothesis does not hold and the check was skipped.
    pub checked: bool,
    pub failures: Vec<String>,
}

/// The JSON schema of `analyze --json`. Orders the whole-graph search did not
/// compute are `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub input: String,
    pub n: usize,
    pub girth: Girth,
    pub tgraph_aut_order: u64,
    pub cayley: CayleyJson,
    pub aut_order: Option<u64>,
    pub ge_order: Option<u64>,
    pub le_order: Option<u64>,
    pub le_is_klein: Option<bool>,
    pub r_normal: Option<bool>,
    pub theorem1: Theorem1Json,
    pub lemma2: CheckJson,
    pub theorem4: CheckJson,
    pub failures: Vec<String>,
    pub runtime_ms: u64,
}

fn narrow(value: u128, what: &str) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Consistency(format!("{what} {value} does not fit in 64 bits")))
}

fn narrow_opt(value: Option<u128>, what: &str) -> Result<Option<u64>> {
    value.map(|v| narrow(v, what)).transpose()
}

impl ReportJson {
    pub fn from_report(r: &VerdictReport, runtime_ms: u64) -> Result<Self> {
        Ok(ReportJson {
            input: r.input.to_string(),
            n: r.n(),
            girth: r.girth,
            tgraph_aut_order: narrow(r.tgraph_aut_order, "tgraph_aut_order")?,
            cayley: CayleyJson {
                vertices: narrow(r.cayley_order_v, "vertices")?,
                degree: r.cayley_degree,
                bipartite: r.bipartite,
            },
            aut_order: narrow_opt(r.aut_order, "aut_order")?,
            ge_order: narrow_opt(r.ge_order, "ge_order")?,
            le_order: narrow_opt(r.le_order, "le_order")?,
            le_is_klein: r.le_is_klein,
            r_normal: r.r_normal,
            theorem1: Theorem1Json {
                applicable: r.theorem1_applicable,
                confirmed: r.theorem1_confirmed,
            },
            lemma2: CheckJson {
                checked: r.lemma2_skipped.is_none(),
                failures: r.lemma2_failures.clone(),
            },
            theorem4: CheckJson {
                checked: r.theorem4_skipped.is_none(),
                failures: r.theorem4_failures.clone(),
            },
            failures: r.failures.clone(),
            runtime_ms,
        })
    }

    /// Pretty JSON with keys in sorted order at every level.
    pub fn to_json(&self) -> String {
        // serde_json's default map is a BTreeMap, so going through Value sorts keys
        let value = serde_json::to_value(self).expect("report is plain data");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// Internal consistency of a report, independent of how it was produced.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidReport(m));
        let s = parse_spec(&self.input).map_err(|e| Error::InvalidReport(format!("input: {e}")))?;
        if s.n() != self.n {
            return bad(format!("input has {} points but n = {}", s.n(), self.n));
        }
        if s.len() != self.cayley.degree {
            return bad(format!("input has {} edges but degree = {}", s.len(), self.cayley.degree));
        }
        match factorial(self.n) {
            Some(f) if f as u64 == self.cayley.vertices => {}
            _ => return bad(format!("{} vertices is not {}!", self.cayley.vertices, self.n)),
        }
        if self.tgraph_aut_order == 0 {
            return bad("tgraph_aut_order is zero".to_string());
        }
        let whole = [self.aut_order.is_some(), self.ge_order.is_some(), self.le_order.is_some()];
        if whole.iter().any(|&b| b != whole[0]) || self.le_is_klein.is_some() != whole[0] || self.r_normal.is_some() != whole[0] {
            return bad("whole-graph fields must be all present or all null".to_string());
        }
        if let (Some(aut), Some(ge), Some(le)) = (self.aut_order, self.ge_order, self.le_order) {
            if le == 0 || ge % le != 0 {
                return bad(format!("|L_e| = {le} does not divide |G_e| = {ge}"));
            }
            if ge.checked_mul(self.cayley.vertices) != Some(aut) {
                return bad(format!("|Aut| = {aut} is not n!·|G_e|"));
            }
            if self.le_is_klein == Some(true) && le != 4 {
                return bad(format!("Klein four L_e has order {le}"));
            }
        }
        if self.theorem1.applicable != self.girth.is_at_least(5) {
            return bad("theorem1.applicable disagrees with girth".to_string());
        }
        if self.theorem1.confirmed && (!self.theorem1.applicable || self.r_normal != Some(true) || self.le_order != Some(1)) {
            return bad("theorem1.confirmed without its conclusions".to_string());
        }
        for (name, check) in [("lemma2", &self.lemma2), ("theorem4", &self.theorem4)] {
            if !check.checked && !check.failures.is_empty() {
                return bad(format!("{name} has failures but was not checked"));
            }
        }
        if self.failures.len() < self.lemma2.failures.len() + self.theorem4.failures.len() {
            return bad("failures omits check failures".to_string());
        }
        Ok(())
    }
}

/// Parses and validates `analyze --json` output.
pub fn parse_report_json(text: &str) -> Result<ReportJson> {
    let report: ReportJson = serde_json::from_str(text).map_err(|e| Error::InvalidReport(e.to_string()))?;
    report.validate()?;
    Ok(report)
}
