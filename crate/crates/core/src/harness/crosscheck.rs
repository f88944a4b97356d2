//! Answer-preservation campaigns over seeded inputs.

use std::fmt;

use rayon::prelude::*;

use crate::bits::Bits;
use crate::instance::{Instance, Params};
use crate::solvers::{anywalk_enum_oracle, nfa_enum_oracle, walk_enum_oracle, walk_frontiers};

use super::registry::{reference_answer, Caps, Entry, ReduceOptions};

/// Environment variable capping crosscheck parallelism.
pub const THREADS_ENV: &str = "RW_LAB_THREADS";

#[derive(Clone, Debug)]
pub struct CrosscheckConfig {
    pub seeds: u64,
    pub first_seed: u64,
    pub caps: Caps,
    /// Harness self-test: negate every output answer so that each case fails.
    pub corrupt: bool,
}

impl Default for CrosscheckConfig {
    fn default() -> Self {
        CrosscheckConfig {
            seeds: 200,
            first_seed: 0,
            caps: Caps::default(),
            corrupt: false,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CaseResult {
    pub seed: u64,
    pub params_in: Option<Params>,
    pub params_out: Option<Params>,
    pub input_answer: Option<bool>,
    pub output_answer: Option<bool>,
    /// Exhaustive oracle on the input, when it fits the enumeration budget.
    pub oracle: Option<bool>,
    pub problems: Vec<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "YES",
        Some(false) => "NO",
        None => "-",
    }
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seed {} {} in={} out={} oracle={}",
            self.seed,
            if self.passed() { "pass" } else { "FAIL" },
            yes_no(self.input_answer),
            yes_no(self.output_answer),
            yes_no(self.oracle),
        )?;
        for p in &self.problems {
            write!(f, " [{p}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub reduction: &'static str,
    pub cases: Vec<CaseResult>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cases.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn summary(&self) -> String {
        format!("{}: {}/{} pass", self.reduction, self.passed(), self.cases.len())
    }
}

fn oracle_answer(inst: &Instance) -> Option<bool> {
    match inst {
        Instance::Walk(w) => walk_enum_oracle(w).ok(),
        Instance::AnyWalk(a) => anywalk_enum_oracle(a).ok(),
        Instance::Nfa(x) => nfa_enum_oracle(&x.nfa, &x.input).ok(),
        _ => None,
    }
}

/// Frontiers of the OMv driver must equal the DP frontiers on real vertices
/// and vanish on padding.
fn frontier_problem(inst: &Instance, frontiers: &[Bits]) -> Option<String> {
    let Instance::Walk(w) = inst else { return None };
    let dp = walk_frontiers(w);
    if dp.len() != frontiers.len() {
        return Some(format!("{} driver frontiers, {} DP frontiers", frontiers.len(), dp.len()));
    }
    let n = w.graph.n;
    for (i, (u, x)) in frontiers.iter().zip(&dp).enumerate() {
        let padding = u.len() - n;
        if u.slice(0, n) != *x || u.slice(n, padding).any() {
            return Some(format!("u_{i} differs from DP frontier"));
        }
    }
    None
}

pub fn run_case(entry: &Entry, seed: u64, caps: Caps, corrupt: bool) -> CaseResult {
    let inst = (entry.sample)(seed, caps);
    let mut case = CaseResult {
        seed,
        params_in: Some(inst.params()),
        ..CaseResult::default()
    };
    match reference_answer(&inst) {
        Ok(a) => case.input_answer = Some(a),
        Err(e) => case.problems.push(format!("input solve: {e}")),
    }
    case.oracle = oracle_answer(&inst);
    if let (Some(o), Some(a)) = (case.oracle, case.input_answer) {
        if o != a {
            case.problems.push("reference solver disagrees with oracle".into());
        }
    }
    match (entry.reduce)(&inst, &ReduceOptions::default()) {
        Ok(reduced) => {
            case.params_out = Some(reduced.report.params_out);
            case.output_answer = Some(reduced.answer != corrupt);
            for out in &reduced.report.outputs {
                let v = out.validate();
                if !v.is_empty() {
                    case.problems.push(format!("invalid output: {}", v[0]));
                }
            }
            if let Some(fr) = &reduced.frontiers {
                case.problems.extend(frontier_problem(&inst, fr));
            }
        }
        Err(e) => case.problems.push(format!("reduction: {e}")),
    }
    if let (Some(a), Some(b)) = (case.input_answer, case.output_answer) {
        if a != b {
            case.problems.push("answer not preserved".into());
        }
    }
    case
}

/// Thread cap from [`THREADS_ENV`], if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&t: &usize| t > 0)
}

/// Runs `cfg.seeds` cases in parallel (capped by `RW_LAB_THREADS`), results in
/// seed order.
pub fn crosscheck(entry: &Entry, cfg: &CrosscheckConfig) -> CrosscheckReport {
    let run = || -> Vec<CaseResult> {
        (cfg.first_seed..cfg.first_seed + cfg.seeds)
            .into_par_iter()
            .map(|seed| run_case(entry, seed, cfg.caps, cfg.corrupt))
            .collect()
    };
    let cases = match thread_cap().and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(run),
        None => run(),
    };
    CrosscheckReport {
        reduction: entry.name,
        cases,
    }
}
