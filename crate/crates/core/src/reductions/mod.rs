//! One operation per construction. Every reduction returns a
//! [`ReductionReport`]: the produced instance(s), the measured parameters on
//! both sides and the exact sizes the construction promises, evaluated on the
//! input independently of the construction code.

use std::fmt;

use crate::error::{precondition, Result};
use crate::format::serialize_instance;
use crate::instance::{ColoredGraph, ColoringMode, Instance, Params, Variant, WalkInstance};

pub mod cfl;
pub mod clique;
pub mod equivalence;
pub mod omv;
pub mod ov;
pub mod padding;
pub mod wordbreak;

pub use cfl::red_walk_to_cfl;
pub use clique::red_clique_to_nfa;
pub use equivalence::{
    equivalence_cycle, gadget, red_anywalk_to_walk, red_diredge_c_to_nfa, red_dirnode2_to_diredge2,
    red_dirnode2_to_undiredge2, red_dirnode2_to_undirnode2, red_dirnode_n_to_dirnode2,
    red_nfa_to_dirnode_c, red_undirected_to_directed, red_walk_to_anywalk,
};
pub use omv::{red_walk_to_omv, OmvMode, OmvRun};
pub use ov::red_ov_to_nfa;
pub use padding::pad_instance;
pub use wordbreak::red_walk_to_wordbreak;

/// How a measured output parameter must relate to its promised value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exactly(usize),
    AtMost(usize),
}

impl Bound {
    pub fn holds(self, actual: usize) -> bool {
        match self {
            Bound::Exactly(v) => actual == v,
            Bound::AtMost(v) => actual <= v,
        }
    }

    pub fn value(self) -> usize {
        match self {
            Bound::Exactly(v) | Bound::AtMost(v) => v,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exactly(v) => write!(f, "={v}"),
            Bound::AtMost(v) => write!(f, "<={v}"),
        }
    }
}

/// Promised output sizes plus the closed form they were evaluated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Promise {
    pub n: Bound,
    pub m: Bound,
    pub l: Bound,
    pub formula: String,
}

impl Promise {
    pub fn exact(n: usize, m: usize, l: usize, formula: impl Into<String>) -> Self {
        Promise {
            n: Bound::Exactly(n),
            m: Bound::Exactly(m),
            l: Bound::Exactly(l),
            formula: formula.into(),
        }
    }

    /// Identity accounting: output parameters equal the input ones.
    pub fn identity(p: Params) -> Self {
        Promise::exact(p.n, p.m, p.l, "n'=n m'=m l'=l")
    }

    /// Human-readable list of broken bounds; empty when all hold.
    pub fn violations(&self, out: Params) -> Vec<String> {
        let mut v = Vec::new();
        for (name, bound, actual) in [("n'", self.n, out.n), ("m'", self.m, out.m), ("l'", self.l, out.l)] {
            if !bound.holds(actual) {
                v.push(format!("{name}={actual} violates {name}{bound} ({})", self.formula));
            }
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub name: &'static str,
    /// Usually one instance; the two-instance OMv reduction produces two.
    pub outputs: Vec<Instance>,
    pub params_in: Params,
    pub params_out: Params,
    pub promise: Promise,
}

impl ReductionReport {
    pub(crate) fn new(name: &'static str, input: &Instance, output: Instance, promise: Promise) -> Self {
        ReductionReport {
            name,
            params_in: input.params(),
            params_out: output.params(),
            outputs: vec![output],
            promise,
        }
    }

    pub fn output(&self) -> &Instance {
        &self.outputs[0]
    }

    pub fn into_output(self) -> Instance {
        self.outputs.into_iter().next().expect("reports carry an output")
    }

    pub fn violations(&self) -> Vec<String> {
        self.promise.violations(self.params_out)
    }

    /// `# reduction <name> params_in n m l params_out n' m' l' bound <expr>`
    pub fn header(&self) -> String {
        format!(
            "# reduction {} params_in {} params_out {} bound {}",
            self.name, self.params_in, self.params_out, self.promise.formula
        )
    }

    /// Header followed by the output instance(s) in the core file format.
    pub fn serialize(&self) -> String {
        let mut s = self.header();
        s.push('\n');
        for out in &self.outputs {
            s.push_str(&serialize_instance(out));
        }
        s
    }
}

/// Smallest `b` with `2^b >= c` (so `ceil_log2(1) = 0`).
pub fn ceil_log2(c: usize) -> usize {
    let mut b = 0;
    while (1usize << b) < c {
        b += 1;
    }
    b
}

pub(crate) fn require_variant(g: &ColoredGraph, want: Variant, what: &str) -> Result<()> {
    if g.variant() != want {
        return precondition(format!("{what} expects a {want} graph, got {}", g.variant()));
    }
    Ok(())
}

pub(crate) fn require_two_colors(g: &ColoredGraph, what: &str) -> Result<()> {
    if g.num_colors > 2 {
        return precondition(format!("{what} expects C <= 2, got C={}", g.num_colors));
    }
    Ok(())
}

pub(crate) fn require_edge_mode(g: &ColoredGraph, what: &str) -> Result<()> {
    if g.mode != ColoringMode::Edge {
        return precondition(format!("{what} expects an edge-colored graph"));
    }
    Ok(())
}

pub(crate) fn walk(w: WalkInstance) -> Instance {
    Instance::Walk(w)
}
