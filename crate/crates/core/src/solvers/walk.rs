//! Frontier DP for every Colored Walk variant and for NFA simulation.

use crate::bits::Bits;
use crate::instance::{AnyWalkInstance, Color, ColoredGraph, WalkInstance};

/// Set of vertices (or NFA states) reachable under the prefix consumed so far.
pub type Frontier = Bits;

/// Per-color adjacency in CSR form, built once per solve: the successors of
/// `u` along color `c` are `targets[c][offsets[c][u]..offsets[c][u + 1]]`.
pub struct StepTable {
    n: usize,
    offsets: Vec<Vec<u32>>,
    targets: Vec<Vec<u32>>,
}

impl StepTable {
    /// Builds the table from `(from, to, color)` arcs with colors `1..=num_colors`.
    pub fn from_arcs(
        n: usize,
        num_colors: Color,
        arcs: impl Iterator<Item = (usize, usize, Color)> + Clone,
    ) -> Self {
        let k = num_colors as usize;
        let mut offsets = vec![vec![0u32; n + 1]; k];
        for (u, _, c) in arcs.clone() {
            offsets[c as usize - 1][u + 1] += 1;
        }
        for off in &mut offsets {
            for u in 0..n {
                off[u + 1] += off[u];
            }
        }
        let mut fill = offsets.clone();
        let mut targets: Vec<Vec<u32>> = offsets.iter().map(|off| vec![0u32; off[n] as usize]).collect();
        for (u, v, c) in arcs {
            let ci = c as usize - 1;
            targets[ci][fill[ci][u] as usize] = v as u32;
            fill[ci][u] += 1;
        }
        StepTable { n, offsets, targets }
    }

    pub fn for_graph(g: &ColoredGraph) -> Self {
        StepTable::from_arcs(g.n, g.num_colors, g.arcs())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One DP step: every successor of a frontier vertex along `color`.
    pub fn step(&self, frontier: &Frontier, color: Color) -> Frontier {
        let mut next = Bits::zeros(self.n);
        let Some(ci) = (color as usize).checked_sub(1).filter(|&i| i < self.offsets.len()) else {
            return next;
        };
        let (offsets, targets) = (&self.offsets[ci], &self.targets[ci]);
        for u in frontier.ones_iter() {
            for &v in &targets[offsets[u] as usize..offsets[u + 1] as usize] {
                next.set(v as usize, true);
            }
        }
        next
    }

    /// Runs the DP from `start` over `seq`, stopping early on an empty frontier.
    pub fn run(&self, start: Frontier, seq: &[Color]) -> Frontier {
        let mut x = start;
        for &c in seq {
            if !x.any() {
                break;
            }
            x = self.step(&x, c);
        }
        x
    }
}

/// All frontiers `x_0..x_l` of a walk instance.
pub fn walk_frontiers(inst: &WalkInstance) -> Vec<Frontier> {
    let table = StepTable::for_graph(&inst.graph);
    let mut out = Vec::with_capacity(inst.seq.len() + 1);
    out.push(Bits::indicator(inst.graph.n, inst.s));
    for &c in &inst.seq {
        let next = table.step(out.last().expect("nonempty"), c);
        out.push(next);
    }
    out
}

/// Decides a Colored Walk instance of any variant in `O((n + m) · l)`.
pub fn solve_walk_dp(inst: &WalkInstance) -> bool {
    let table = StepTable::for_graph(&inst.graph);
    table
        .run(Bits::indicator(inst.graph.n, inst.s), &inst.seq)
        .get(inst.t)
}

/// AnyWalk: start from every vertex, accept on a nonempty final frontier.
pub fn solve_anywalk(inst: &AnyWalkInstance) -> bool {
    let table = StepTable::for_graph(&inst.graph);
    table.run(Bits::ones(inst.graph.n), &inst.seq).any()
}
