//! Parameter padding: isolated filler vertices, dummy edges among them, and the
//! `s₀ ⇄ s₁ → s` gadget that lengthens the color sequence.

use crate::error::{precondition, Result};
use crate::gen::max_edges;
use crate::instance::{ColoredGraph, ColoringMode, Variant, WalkInstance};

use super::{walk, Promise, ReductionReport};

/// Pads `inst` to exactly `target_n` vertices and length `target_l`, and
/// optionally to exactly `target_m` edges.
///
/// Length padding needs an odd `target_l - ℓ = 2k + 1` and a directed
/// edge-colored graph: it adds `s₀ = n`, `s₁ = n + 1` with edges `s₀ -1- s₁`,
/// `s₁ -1- s₀`, `s₁ -2- s`, moves the source to `s₁` and prefixes the sequence
/// with `1^{2k} 2`. Filler vertices get node color 1; dummy edges have color 1
/// and join filler vertices only, in lexicographic order.
pub fn pad_instance(
    inst: &WalkInstance,
    target_n: usize,
    target_l: usize,
    target_m: Option<usize>,
) -> Result<ReductionReport> {
    const NAME: &str = "pad_instance";
    let g = &inst.graph;
    let l = inst.l();
    if target_l < l {
        return precondition(format!("{NAME}: target_l={target_l} < l={l}"));
    }
    let delta = target_l - l;
    let lengthen = delta > 0;
    if lengthen {
        if g.variant() != Variant::DIR_EDGE {
            return precondition(format!(
                "{NAME}: length padding needs a dir-edge graph, got {}",
                g.variant()
            ));
        }
        if delta.is_multiple_of(2) {
            return precondition(format!(
                "{NAME}: target_l - l = {delta} must be odd (prefix 1^(2k) 2)"
            ));
        }
    }
    let core_n = g.n + if lengthen { 2 } else { 0 };
    let core_m = g.m() + if lengthen { 3 } else { 0 };
    if target_n < core_n {
        return precondition(format!("{NAME}: target_n={target_n} < required {core_n}"));
    }
    let filler = target_n - core_n;
    let dummies = match target_m {
        None => 0,
        Some(tm) if tm < core_m => {
            return precondition(format!("{NAME}: target_m={tm} < required {core_m}"));
        }
        Some(tm) => tm - core_m,
    };
    if dummies > max_edges(filler, g.directed) {
        return precondition(format!(
            "{NAME}: {dummies} dummy edges do not fit among {filler} filler vertices"
        ));
    }
    let dummy_edges = filler_edges(core_n, filler, g.directed).take(dummies);

    let mut s = inst.s;
    let mut seq = Vec::with_capacity(target_l);
    let graph = match g.mode {
        ColoringMode::Edge => {
            let mut edges: Vec<_> = g.colored_edges().collect();
            let mut num_colors = g.num_colors;
            if lengthen {
                let (s0, s1) = (g.n, g.n + 1);
                edges.extend([(s0, s1, 1), (s1, s0, 1), (s1, inst.s, 2)]);
                num_colors = num_colors.max(2);
                s = s1;
                seq.extend(std::iter::repeat_n(1, delta - 1));
                seq.push(2);
            }
            edges.extend(dummy_edges.map(|(u, v)| (u, v, 1)));
            ColoredGraph::edge_colored(g.directed, target_n, num_colors, edges)
        }
        ColoringMode::Node => {
            let mut colors = g.colors.clone();
            colors.resize(target_n, 1);
            let edges = g.edges.iter().copied().chain(dummy_edges);
            ColoredGraph::node_colored(g.directed, target_n, g.num_colors, edges, colors)
        }
    };
    seq.extend(&inst.seq);
    let out = WalkInstance {
        graph,
        s,
        t: inst.t,
        seq,
    };
    let input = walk(inst.clone());
    let promise = Promise::exact(
        target_n,
        core_m + dummies,
        target_l,
        format!("n'={target_n} m'=m+{} l'={target_l}", core_m - g.m() + dummies),
    );
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

/// Simple-graph edges on `first..first + count`, lexicographic.
fn filler_edges(
    first: usize,
    count: usize,
    directed: bool,
) -> impl Iterator<Item = (usize, usize)> {
    let range = first..first + count;
    range.clone().flat_map(move |u| {
        range
            .clone()
            .filter(move |&v| if directed { v != u } else { v > u })
            .map(move |v| (u, v))
    })
}
