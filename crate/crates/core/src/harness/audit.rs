//! Parameter audits: measured output sizes against each construction's exact
//! closed forms.

use std::fmt;

use rayon::prelude::*;

use crate::instance::Params;
use crate::reductions::Promise;

use super::registry::{Caps, Entry, ReduceOptions};

pub const AUDIT_HEADER: &str =
    "reduction,seed,n,m,l,n_out,m_out,l_out,bound_n,bound_m,bound_l,formula,ok";

#[derive(Clone, Debug)]
pub struct AuditRow {
    pub reduction: &'static str,
    pub seed: u64,
    pub params_in: Params,
    pub outcome: std::result::Result<(Params, Promise), String>,
}

impl AuditRow {
    pub fn ok(&self) -> bool {
        matches!(&self.outcome, Ok((out, promise)) if promise.violations(*out).is_empty())
    }
}

/// CSV fields carry no commas; formulas use `;` where they would.
fn csv_safe(s: &str) -> String {
    s.replace(',', ";")
}

impl fmt::Display for AuditRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params_in;
        write!(f, "{},{},{},{},{},", self.reduction, self.seed, p.n, p.m, p.l)?;
        match &self.outcome {
            Ok((o, pr)) => write!(
                f,
                "{},{},{},{},{},{},{},{}",
                o.n,
                o.m,
                o.l,
                pr.n,
                pr.m,
                pr.l,
                csv_safe(&pr.formula),
                self.ok()
            ),
            Err(e) => write!(f, "-,-,-,-,-,-,error: {},false", csv_safe(e)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub rows: Vec<AuditRow>,
}

impl AuditReport {
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(AuditRow::ok)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from(AUDIT_HEADER);
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

pub fn audit_case(entry: &Entry, seed: u64, caps: Caps) -> AuditRow {
    let inst = (entry.sample)(seed, caps);
    let outcome = (entry.reduce)(&inst, &ReduceOptions::default())
        .map(|r| (r.report.params_out, r.report.promise))
        .map_err(|e| e.to_string());
    AuditRow {
        reduction: entry.name,
        seed,
        params_in: inst.params(),
        outcome,
    }
}

pub fn audit(entry: &Entry, seeds: u64, first_seed: u64, caps: Caps) -> AuditReport {
    let rows = (first_seed..first_seed + seeds)
        .into_par_iter()
        .map(|seed| audit_case(entry, seed, caps))
        .collect();
    AuditReport { rows }
}
