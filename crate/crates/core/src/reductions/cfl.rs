//! Colored Walk → Dyck-2 CFL reachability.

use crate::error::{precondition, Result};
use crate::instance::{dyck, CflInstance, ColoredGraph, Grammar, Instance, Variant, WalkInstance};

use super::{require_two_colors, require_variant, walk, Promise, ReductionReport};

/// Relabels every edge of color `c` with the opening parenthesis `(_c` and
/// appends a tail `t = u₀ → u₁ → … → u_ℓ` whose `i`-th edge is labeled
/// `)_{c_{ℓ+1-i}}`. Vertex `u_i` (`i ≥ 1`) has index `n + i - 1`; the target
/// becomes `u_ℓ`.
pub fn red_walk_to_cfl(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_walk_to_cfl";
    let g = &inst.graph;
    require_variant(g, Variant::DIR_EDGE, NAME)?;
    require_two_colors(g, NAME)?;
    let l = inst.l();
    if l == 0 {
        return precondition(format!("{NAME} needs l >= 1 (Dyck-2 has no empty word)"));
    }
    let u = |i: usize| if i == 0 { inst.t } else { g.n + i - 1 };
    let tail = (1..=l).map(|i| (u(i - 1), u(i), dyck::close(inst.seq[l - i])));
    let edges = g
        .colored_edges()
        .map(|(a, b, c)| (a, b, dyck::open(c)))
        .chain(tail);
    let out = CflInstance {
        graph: ColoredGraph::edge_colored(true, g.n + l, 4, edges),
        s: inst.s,
        t: u(l),
        grammar: Grammar::dyck2(),
    };
    let input = walk(inst.clone());
    let p = input.params();
    let promise = Promise::exact(p.n + p.l, p.m + p.l, 0, "n'=n+l m'=m+l");
    Ok(ReductionReport::new(NAME, &input, Instance::Cfl(out), promise))
}
