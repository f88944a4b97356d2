//! Reference decision procedures and exhaustive oracles.

pub mod brute;
pub mod cfl;
pub mod matrix;
pub mod nfa;
pub mod omv;
pub mod walk;
pub mod wordbreak;

pub use brute::{
    anywalk_enum_oracle, clique_bruteforce, list_cliques, matching_walks, nfa_enum_oracle,
    ov_bruteforce, walk_enum_oracle,
};
pub use cfl::{cfl_reach_solve, dyck2_membership};
pub use matrix::{
    matrix_power, solve_uniform_color_power, solve_walk_matrix_chain, uniform_color, walk_matrix_chain,
};
pub use nfa::{nfa_accepts, solve_nfa};
pub use omv::{solve_omv, OmvEngine};
pub use walk::{solve_anywalk, solve_walk_dp, walk_frontiers, Frontier, StepTable};
pub use wordbreak::word_break_solve;

use crate::bits::Bits;
use crate::error::Result;
use crate::instance::Instance;

/// Outcome of the reference solver for an instance kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Decision(bool),
    /// OMv answers, one vector per round.
    Vectors(Vec<Bits>),
}

impl Answer {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Answer::Decision(b) => Some(*b),
            Answer::Vectors(_) => None,
        }
    }
}

/// Dispatches to the reference solver of the instance's kind.
pub fn solve(instance: &Instance) -> Result<Answer> {
    Ok(match instance {
        Instance::Walk(w) => Answer::Decision(solve_walk_dp(w)),
        Instance::AnyWalk(w) => Answer::Decision(solve_anywalk(w)),
        Instance::Nfa(x) => Answer::Decision(solve_nfa(x)),
        Instance::Cfl(c) => Answer::Decision(cfl_reach_solve(c)),
        Instance::WordBreak(w) => Answer::Decision(word_break_solve(w)),
        Instance::Omv(o) => Answer::Vectors(solve_omv(o)?),
        Instance::Ov(o) => Answer::Decision(ov_bruteforce(o)),
        Instance::Clique(c) => Answer::Decision(clique_bruteforce(c)?),
    })
}
