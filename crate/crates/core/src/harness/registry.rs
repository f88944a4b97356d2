//! Every reduction by name, with an input sampler and a uniform entry point.

use crate::error::{precondition, Error, Result};
use crate::gen::{random_clique_instance, random_nfa, random_ov, random_small_anywalk, random_small_walk};
use crate::instance::{Color, Instance, InstanceKind, Variant, WalkInstance};
use crate::reductions::{self as red, OmvMode, Promise, ReductionReport};
use crate::solvers::{self, Frontier};

/// Size caps for sampled inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_n: usize,
    pub max_l: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_n: 6, max_l: 6 }
    }
}

/// Optional knobs of the parameterized reductions; `None` picks the default.
#[derive(Clone, Debug, Default)]
pub struct ReduceOptions {
    /// Clique gadget size `k`; `k'` is then `inst.k - 2k`.
    pub k: Option<usize>,
    pub target_n: Option<usize>,
    pub target_l: Option<usize>,
    pub target_m: Option<usize>,
}

/// A reduction's output together with the answer of the reference solver on it.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub report: ReductionReport,
    pub answer: bool,
    /// OMv driver frontiers `u_0..u_ℓ`, when the reduction produces them.
    pub frontiers: Option<Vec<Frontier>>,
}

pub struct Entry {
    pub name: &'static str,
    pub input: InstanceKind,
    pub sample: fn(u64, Caps) -> Instance,
    pub reduce: fn(&Instance, &ReduceOptions) -> Result<Reduced>,
}

fn decide(report: ReductionReport) -> Result<Reduced> {
    let answer = solvers::solve(report.output())?
        .as_bool()
        .ok_or_else(|| Error::Precondition(format!("{} output has no yes/no answer", report.name)))?;
    Ok(Reduced {
        report,
        answer,
        frontiers: None,
    })
}

fn as_walk<'a>(inst: &'a Instance, name: &str) -> Result<&'a WalkInstance> {
    match inst {
        Instance::Walk(w) => Ok(w),
        other => precondition(format!("{name} expects a walk instance, got {}", other.kind().name())),
    }
}

macro_rules! walk_entry {
    ($name:literal, $sample:expr, $f:path) => {
        Entry {
            name: $name,
            input: InstanceKind::Walk,
            sample: $sample,
            reduce: |inst, _| decide($f(as_walk(inst, $name)?)?),
        }
    };
}

fn walk_sample(seed: u64, caps: Caps, colors: Color, variant: Variant) -> Instance {
    Instance::Walk(random_small_walk(seed, caps.max_n, caps.max_l, colors, variant))
}

/// Colors in `lo..=hi`, varied by seed.
fn colors_for(seed: u64, lo: Color, hi: Color) -> Color {
    lo + (seed % u64::from(hi - lo + 1)) as Color
}

fn omv_reduce(inst: &Instance, mode: OmvMode) -> Result<Reduced> {
    let run = red::red_walk_to_omv(as_walk(inst, "red_walk_to_omv")?, mode)?;
    Ok(Reduced {
        report: run.report,
        answer: run.answer,
        frontiers: Some(run.frontiers),
    })
}

/// Splits a clique size `q >= 3` into `2k + k'` with `k = ⌊(q-1)/2⌋`.
pub fn default_clique_split(q: usize) -> Option<(usize, usize)> {
    (q >= 3).then(|| {
        let k = (q - 1) / 2;
        (k, q - 2 * k)
    })
}

/// `(k, k')` pairs exercised by sampled clique inputs.
pub const CLIQUE_SPLITS: [(usize, usize); 3] = [(1, 1), (1, 2), (2, 1)];

/// DirNode2 → DirEdge2 → NFA → DirNodeΣ → DirNode2 as one report with the
/// composite closed form.
pub fn equivalence_cycle_report(inst: &WalkInstance) -> Result<ReductionReport> {
    if inst.graph.num_colors != 2 {
        return precondition(format!(
            "equivalence_cycle needs C = 2, got C={}",
            inst.graph.num_colors
        ));
    }
    let steps = red::equivalence_cycle(inst)?;
    let last = steps.into_iter().last().expect("four steps");
    let p = Instance::Walk(inst.clone()).params();
    Ok(ReductionReport {
        name: "equivalence_cycle",
        params_in: p,
        params_out: last.params_out,
        outputs: last.outputs,
        promise: Promise::exact(
            2 * (2 * p.n + 1),
            4 * (p.m + 1),
            p.l + 1,
            "n'=2(2n+1) m'=4(m+1) l'=l+1",
        ),
    })
}

/// Default padding: two filler vertices, both dummy edges between them
/// (directed) or the one (undirected), and three extra steps.
fn pad_default(w: &WalkInstance, opts: &ReduceOptions) -> Result<ReductionReport> {
    let gadget = usize::from(opts.target_l.is_none_or(|tl| tl > w.l()));
    let target_l = opts.target_l.unwrap_or(w.l() + 3);
    let target_n = opts.target_n.unwrap_or(w.graph.n + 2 * gadget + 2);
    let dummies = if w.graph.directed { 2 } else { 1 };
    let target_m = opts
        .target_m
        .or_else(|| (opts.target_n.is_none()).then_some(w.graph.m() + 3 * gadget + dummies));
    red::pad_instance(w, target_n, target_l, target_m)
}

pub static REGISTRY: &[Entry] = &[
    walk_entry!(
        "red_dirnode2_to_diredge2",
        |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_NODE),
        red::red_dirnode2_to_diredge2
    ),
    walk_entry!(
        "red_diredgeC_to_nfa",
        |s, c| walk_sample(s, c, colors_for(s, 1, 4), Variant::DIR_EDGE),
        red::red_diredge_c_to_nfa
    ),
    Entry {
        name: "red_nfa_to_dirnodeC",
        input: InstanceKind::Nfa,
        sample: |s, c| Instance::Nfa(random_nfa(s, c.max_n, 3, c.max_l)),
        reduce: |inst, _| match inst {
            Instance::Nfa(x) => decide(red::red_nfa_to_dirnode_c(x)?),
            other => precondition(format!(
                "red_nfa_to_dirnodeC expects an nfa instance, got {}",
                other.kind().name()
            )),
        },
    },
    walk_entry!(
        "red_dirnodeN_to_dirnode2",
        |s, c| walk_sample(s, c, colors_for(s, 2, 8), Variant::DIR_NODE),
        red::red_dirnode_n_to_dirnode2
    ),
    walk_entry!(
        "red_dirnode2_to_undiredge2",
        |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_NODE),
        red::red_dirnode2_to_undiredge2
    ),
    walk_entry!(
        "red_dirnode2_to_undirnode2",
        |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_NODE),
        red::red_dirnode2_to_undirnode2
    ),
    walk_entry!(
        "red_undirected_to_directed",
        |s, c| {
            let v = if s % 2 == 0 { Variant::UNDIR_EDGE } else { Variant::UNDIR_NODE };
            walk_sample(s, c, colors_for(s / 2, 1, 4), v)
        },
        red::red_undirected_to_directed
    ),
    walk_entry!(
        "red_walk_to_anywalk",
        |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::UNDIR_EDGE),
        red::red_walk_to_anywalk
    ),
    Entry {
        name: "red_anywalk_to_walk",
        input: InstanceKind::AnyWalk,
        sample: |s, c| {
            Instance::AnyWalk(random_small_anywalk(s, c.max_n, c.max_l, colors_for(s, 1, 3), Variant::UNDIR_EDGE))
        },
        reduce: |inst, _| match inst {
            Instance::AnyWalk(a) => decide(red::red_anywalk_to_walk(a)?),
            other => precondition(format!(
                "red_anywalk_to_walk expects an anywalk instance, got {}",
                other.kind().name()
            )),
        },
    },
    Entry {
        name: "pad_instance",
        input: InstanceKind::Walk,
        sample: |s, c| walk_sample(s, c, colors_for(s, 1, 3), Variant::DIR_EDGE),
        reduce: |inst, opts| decide(pad_default(as_walk(inst, "pad_instance")?, opts)?),
    },
    Entry {
        name: "equivalence_cycle",
        input: InstanceKind::Walk,
        sample: |s, c| walk_sample(s, c, 2, Variant::DIR_NODE),
        reduce: |inst, _| decide(equivalence_cycle_report(as_walk(inst, "equivalence_cycle")?)?),
    },
    Entry {
        name: "red_walk_to_cfl",
        input: InstanceKind::Walk,
        sample: |s, c| {
            let mut w = random_small_walk(s, c.max_n, c.max_l, colors_for(s, 1, 2), Variant::DIR_EDGE);
            if w.seq.is_empty() {
                w.seq.push(colors_for(s / 2, 1, w.graph.num_colors));
            }
            Instance::Walk(w)
        },
        reduce: |inst, _| decide(red::red_walk_to_cfl(as_walk(inst, "red_walk_to_cfl")?)?),
    },
    walk_entry!(
        "red_walk_to_wordbreak",
        |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_EDGE),
        red::red_walk_to_wordbreak
    ),
    Entry {
        name: "red_walk_to_omv",
        input: InstanceKind::Walk,
        sample: |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_EDGE),
        reduce: |inst, _| omv_reduce(inst, OmvMode::TwoInstance),
    },
    Entry {
        name: "red_walk_to_omv_block",
        input: InstanceKind::Walk,
        sample: |s, c| walk_sample(s, c, colors_for(s, 1, 2), Variant::DIR_EDGE),
        reduce: |inst, _| omv_reduce(inst, OmvMode::BlockDiagonal),
    },
    Entry {
        name: "red_ov_to_nfa",
        input: InstanceKind::Ov,
        sample: |s, c| Instance::Ov(random_ov(s, c.max_n, c.max_l)),
        reduce: |inst, _| match inst {
            Instance::Ov(o) => decide(red::red_ov_to_nfa(o)?),
            other => precondition(format!(
                "red_ov_to_nfa expects an ov instance, got {}",
                other.kind().name()
            )),
        },
    },
    Entry {
        name: "red_clique_to_nfa",
        input: InstanceKind::Clique,
        sample: |s, c| {
            let (k, kp) = CLIQUE_SPLITS[(s % 3) as usize];
            Instance::Clique(random_clique_instance(s, c.max_n, 2 * k + kp))
        },
        reduce: |inst, opts| match inst {
            Instance::Clique(q) => {
                let (k, kp) = match opts.k {
                    Some(k) if 2 * k < q.k => (k, q.k - 2 * k),
                    Some(k) => {
                        return precondition(format!("k={k} leaves no room for k' in q={}", q.k));
                    }
                    None => default_clique_split(q.k).ok_or_else(|| {
                        Error::Precondition(format!("clique size {} is below 3", q.k))
                    })?,
                };
                decide(red::red_clique_to_nfa(q, k, kp)?)
            }
            other => precondition(format!(
                "red_clique_to_nfa expects a clique instance, got {}",
                other.kind().name()
            )),
        },
    },
];

pub fn lookup(name: &str) -> Result<&'static Entry> {
    REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Unknown(format!("reduction {name:?}")))
}

pub fn names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.name)
}

/// Reference answer for an input instance (frontier DP, NFA simulation or
/// brute force, depending on the kind).
pub fn reference_answer(inst: &Instance) -> Result<bool> {
    solvers::solve(inst)?
        .as_bool()
        .ok_or_else(|| Error::Precondition(format!("{} has no yes/no answer", inst.kind().name())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn names_are_unique_and_cover_every_construction() {
        let names: HashSet<_> = names().collect();
        assert_eq!(names.len(), REGISTRY.len());
        for want in [
            "red_dirnode2_to_diredge2",
            "red_diredgeC_to_nfa",
            "red_nfa_to_dirnodeC",
            "red_dirnodeN_to_dirnode2",
            "red_dirnode2_to_undiredge2",
            "red_dirnode2_to_undirnode2",
            "red_undirected_to_directed",
            "red_walk_to_anywalk",
            "red_anywalk_to_walk",
            "pad_instance",
            "equivalence_cycle",
            "red_walk_to_cfl",
            "red_walk_to_wordbreak",
            "red_walk_to_omv",
            "red_walk_to_omv_block",
            "red_ov_to_nfa",
            "red_clique_to_nfa",
        ] {
            assert!(names.contains(want), "{want} missing");
        }
    }

    #[test]
    fn every_entry_reduces_its_own_samples() {
        for e in REGISTRY {
            for seed in 0..5 {
                let inst = (e.sample)(seed, Caps::default());
                assert_eq!(inst.kind(), e.input, "{}", e.name);
                assert!(inst.validate().is_empty(), "{} seed {seed}", e.name);
                let out = (e.reduce)(&inst, &ReduceOptions::default())
                    .unwrap_or_else(|err| panic!("{} seed {seed}: {err}", e.name));
                assert!(out.report.violations().is_empty(), "{}: {:?}", e.name, out.report.violations());
            }
        }
    }

    #[test]
    fn clique_split() {
        assert_eq!(default_clique_split(3), Some((1, 1)));
        assert_eq!(default_clique_split(4), Some((1, 2)));
        assert_eq!(default_clique_split(5), Some((2, 1)));
        assert_eq!(default_clique_split(2), None);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(lookup("red_nope"), Err(Error::Unknown(_))));
    }
}
