//! Colored Walk → OMv, driving the engine(s) online.

use crate::bits::{Bits, BoolMatrix};
use crate::error::Result;
use crate::instance::{Color, Instance, OmvInstance, Params, Variant, WalkInstance};
use crate::solvers::OmvEngine;

use super::{require_two_colors, require_variant, walk, Promise, ReductionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmvMode {
    /// One `N × N` engine per color.
    TwoInstance,
    /// A single `2N × 2N` engine on `diag(M⁽¹⁾, M⁽²⁾)`.
    BlockDiagonal,
}

impl std::str::FromStr for OmvMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "two-instance" | "two_instance" => Ok(OmvMode::TwoInstance),
            "block-diagonal" | "block_diagonal" => Ok(OmvMode::BlockDiagonal),
            other => Err(format!("unknown OMv mode {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OmvRun {
    /// Outputs are the OMv instance(s) with the query vectors actually issued.
    pub report: ReductionReport,
    pub answer: bool,
    /// `u₀..u_ℓ`, each of length `N`.
    pub frontiers: Vec<Bits>,
    /// Rounds issued per engine.
    pub rounds_used: Vec<usize>,
}

/// `M⁽ᶜ⁾[u][v] = 1` iff `(v, u)` is an edge of color `c`, padded to `N × N`.
fn transposed_color_matrix(inst: &WalkInstance, c: Color, dim: usize) -> BoolMatrix {
    let mut m = BoolMatrix::zeros(dim, dim);
    for (u, v, col) in inst.graph.colored_edges() {
        if col == c {
            m.set(v, u, true);
        }
    }
    m
}

/// Runs `u₀ = e_s`, `u_i = M⁽ᶜⁱ⁾ u_{i-1}` with `N = max(n, ℓ)` and answers
/// `u_ℓ[t]`.
pub fn red_walk_to_omv(inst: &WalkInstance, mode: OmvMode) -> Result<OmvRun> {
    const NAME: &str = "red_walk_to_omv";
    let g = &inst.graph;
    require_variant(g, Variant::DIR_EDGE, NAME)?;
    require_two_colors(g, NAME)?;
    let dim = g.n.max(inst.l());
    let mats = [1, 2].map(|c| transposed_color_matrix(inst, c, dim));
    let mut u = Bits::indicator(dim, inst.s);
    let mut frontiers = vec![u.clone()];

    let (outputs, rounds_used) = match mode {
        OmvMode::TwoInstance => {
            let mut engines = mats.clone().map(|m| OmvEngine::new(m).expect("square"));
            let mut issued = [Vec::new(), Vec::new()];
            for &c in &inst.seq {
                let k = c as usize - 1;
                issued[k].push(u.clone());
                u = engines[k].round(&u)?;
                frontiers.push(u.clone());
            }
            let [m1, m2] = mats;
            let [r1, r2] = issued;
            let used = vec![r1.len(), r2.len()];
            let outs = vec![
                Instance::Omv(OmvInstance { matrix: m1, rounds: r1 }),
                Instance::Omv(OmvInstance { matrix: m2, rounds: r2 }),
            ];
            (outs, used)
        }
        OmvMode::BlockDiagonal => {
            let [m1, m2] = mats;
            let block = m1.block_diagonal(&m2);
            let mut engine = OmvEngine::new(block.clone()).expect("square");
            let mut issued = Vec::with_capacity(inst.l());
            for &c in &inst.seq {
                let offset = (c as usize - 1) * dim;
                let v = u.embed(2 * dim, offset);
                let answer = engine.round(&v)?;
                issued.push(v);
                u = answer.slice(offset, dim);
                frontiers.push(u.clone());
            }
            let used = vec![issued.len()];
            (vec![Instance::Omv(OmvInstance { matrix: block, rounds: issued })], used)
        }
    };

    let answer = u.get(inst.t);
    let input = walk(inst.clone());
    let p = input.params();
    let (n_out, formula) = match mode {
        OmvMode::TwoInstance => (dim, "N=max(n,l) nnz=m rounds=l (summed over both engines)"),
        OmvMode::BlockDiagonal => (2 * dim, "N'=2max(n,l) nnz=m rounds=l"),
    };
    let params_out = Params::new(
        outputs.iter().map(|o| o.params().n).max().unwrap_or(0),
        outputs.iter().map(|o| o.params().m).sum(),
        outputs.iter().map(|o| o.params().l).sum(),
    );
    let report = ReductionReport {
        name: NAME,
        outputs,
        params_in: p,
        params_out,
        promise: Promise::exact(n_out, p.m, p.l, formula),
    };
    Ok(OmvRun {
        report,
        answer,
        frontiers,
        rounds_used,
    })
}
