//! Reductions among the Colored Walk variants, NFA acceptance and AnyWalk.

use crate::error::{precondition, Result};
use crate::instance::{
    AnyWalkInstance, Color, ColoredGraph, ColoringMode, Instance, Nfa, NfaInstance, Variant,
    WalkInstance,
};

use super::{
    ceil_log2, require_edge_mode, require_two_colors, require_variant, walk, Promise,
    ReductionReport,
};

/// Vertex layout of the undirected gadgets: vertex `v` of the input becomes
/// `v_in = 6v`, `v^(i) = 6v + i` for `i = 1..=4` and `v_out = 6v + 5`.
pub mod gadget {
    use crate::instance::{Color, Vertex};

    pub const WIDTH: usize = 6;

    pub fn v_in(v: Vertex) -> Vertex {
        WIDTH * v
    }

    pub fn inner(v: Vertex, i: usize) -> Vertex {
        debug_assert!((1..=4).contains(&i));
        WIDTH * v + i
    }

    pub fn v_out(v: Vertex) -> Vertex {
        WIDTH * v + 5
    }

    /// `v_in, v^(1), .., v^(4), v_out`.
    pub fn path(v: Vertex) -> [Vertex; 6] {
        [v_in(v), inner(v, 1), inner(v, 2), inner(v, 3), inner(v, 4), v_out(v)]
    }

    /// Edge colors along `path(v)` in the edge-colored gadget.
    pub fn col_edge(c: Color) -> [Color; 5] {
        [2, c, c, 1, 2]
    }

    /// Node colors of `v^(1..4), v_out` in the node-colored gadget.
    pub fn col_node(c: Color) -> [Color; 5] {
        [2, c, 2, 2, 1]
    }

    /// Index of `(v, i)`, `i = 1..=b`, in the binary expansion.
    pub fn bit_vertex(v: Vertex, i: usize, b: usize) -> Vertex {
        v * b + (i - 1)
    }
}

/// Directed Node-2 → Directed Edge-2: `c'(u, v) := c(v)`.
pub fn red_dirnode2_to_diredge2(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_dirnode2_to_diredge2";
    require_variant(&inst.graph, Variant::DIR_NODE, NAME)?;
    require_two_colors(&inst.graph, NAME)?;
    let g = &inst.graph;
    let graph = ColoredGraph::edge_colored(
        true,
        g.n,
        g.num_colors,
        g.edges.iter().map(|&(u, v)| (u, v, g.colors[v])),
    );
    let out = WalkInstance {
        graph,
        s: inst.s,
        t: inst.t,
        seq: inst.seq.clone(),
    };
    let input = walk(inst.clone());
    let promise = Promise::identity(input.params());
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

/// Directed Edge-C → NFA: `Q = V`, `Σ = C`, `q0 = s`, `F = {t}`.
pub fn red_diredge_c_to_nfa(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_diredgeC_to_nfa";
    require_variant(&inst.graph, Variant::DIR_EDGE, NAME)?;
    let g = &inst.graph;
    let mut nfa = Nfa {
        n_states: g.n,
        alphabet: g.num_colors,
        transitions: g.colored_edges().map(|(u, v, c)| (u, c, v)).collect(),
        q0: inst.s,
        accepting: vec![inst.t],
    };
    nfa.canonicalize();
    let input = walk(inst.clone());
    let promise = Promise::identity(input.params());
    let out = Instance::Nfa(NfaInstance {
        nfa,
        input: inst.seq.clone(),
    });
    Ok(ReductionReport::new(NAME, &input, out, promise))
}

/// NFA → Directed Node-Σ in three stages:
///
/// 1. loop removal: `(q, j)` for `j ∈ {1, 2}` at index `2q + j - 1`, every
///    transition flips the copy;
/// 2. single accepting state `f0 = 2n`, entered from every `(f, j)` on the
///    fixed symbol `1`, which is appended to the input;
/// 3. product graph on `Q̂ × Σ` with `(q, σ)` at index `q·Σ + σ - 1`,
///    node color `σ`, source `(q̂0, 1)` and target `(f0, 1)`.
pub fn red_nfa_to_dirnode_c(inst: &NfaInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_nfa_to_dirnodeC";
    let m = &inst.nfa;
    let sigma = m.alphabet as usize;
    if sigma == 0 {
        return precondition(format!("{NAME} needs a nonempty alphabet"));
    }
    const FIXED: Color = 1;
    let n = m.n_states;
    let copy = |q: usize, j: usize| 2 * q + (j - 1);
    let f0 = 2 * n;

    let mut delta = Vec::with_capacity(2 * (m.transitions.len() + m.accepting.len()));
    for &(q, a, r) in &m.transitions {
        delta.push((copy(q, 1), a, copy(r, 2)));
        delta.push((copy(q, 2), a, copy(r, 1)));
    }
    for &f in &m.accepting {
        delta.push((copy(f, 1), FIXED, f0));
        delta.push((copy(f, 2), FIXED, f0));
    }
    let mut input = inst.input.clone();
    input.push(FIXED);

    let states = 2 * n + 1;
    let vertex = |q: usize, s: usize| q * sigma + (s - 1);
    let mut edges = Vec::with_capacity(delta.len() * sigma);
    for &(q, a, r) in &delta {
        for s in 1..=sigma {
            edges.push((vertex(q, s), vertex(r, a as usize)));
        }
    }
    let node_colors = (0..states * sigma).map(|i| (i % sigma) as Color + 1).collect();
    let graph = ColoredGraph::node_colored(true, states * sigma, m.alphabet, edges, node_colors);
    let last = *input.last().expect("input has the appended symbol");
    let out = WalkInstance {
        graph,
        s: vertex(copy(m.q0, 1), FIXED as usize),
        t: vertex(f0, last as usize),
        seq: input,
    };
    let input_inst = Instance::Nfa(inst.clone());
    let p = input_inst.params();
    let promise = Promise::exact(
        (2 * p.n + 1) * sigma,
        2 * (p.m + m.accepting.len()) * sigma,
        p.l + 1,
        "n'=(2n+1)S m'=2(m+|F|)S l'=l+1",
    );
    Ok(ReductionReport::new(NAME, &input_inst, walk(out), promise))
}

/// Bit `i` (1 = most significant) of the `b`-bit encoding of `c - 1`, as a color.
fn bit_color(c: Color, i: usize, b: usize) -> Color {
    (((c - 1) >> (b - i)) & 1) + 1
}

/// Directed Node-C → Directed Node-2: each vertex becomes a path of
/// `B = ⌈log₂ C⌉` vertices spelling the binary code of its color.
pub fn red_dirnode_n_to_dirnode2(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_dirnodeN_to_dirnode2";
    require_variant(&inst.graph, Variant::DIR_NODE, NAME)?;
    let g = &inst.graph;
    if g.num_colors < 2 {
        return precondition(format!("{NAME} needs C >= 2 (B = ceil(log2 C) would be 0)"));
    }
    let b = ceil_log2(g.num_colors as usize);
    let at = |v, i| gadget::bit_vertex(v, i, b);
    let mut edges: Vec<_> = g.edges.iter().map(|&(u, v)| (at(u, b), at(v, 1))).collect();
    for v in 0..g.n {
        for i in 1..b {
            edges.push((at(v, i), at(v, i + 1)));
        }
    }
    let mut colors = vec![0; g.n * b];
    for v in 0..g.n {
        for i in 1..=b {
            colors[at(v, i)] = bit_color(g.colors[v], i, b);
        }
    }
    let seq = inst
        .seq
        .iter()
        .flat_map(|&c| (1..=b).map(move |i| bit_color(c, i, b)))
        .collect();
    let out = WalkInstance {
        graph: ColoredGraph::node_colored(true, g.n * b, 2, edges, colors),
        s: at(inst.s, b),
        t: at(inst.t, b),
        seq,
    };
    let input = walk(inst.clone());
    let p = input.params();
    let promise = Promise::exact(
        p.n * b,
        p.m + p.n * (b - 1),
        p.l * b,
        format!("B=ceil(log2 C)={b} n'=nB m'=m+n(B-1) l'=lB"),
    );
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

fn gadget_sequence(seq: &[Color], col: fn(Color) -> [Color; 5]) -> Vec<Color> {
    seq.iter()
        .flat_map(|&c| std::iter::once(1).chain(col(c)))
        .collect()
}

fn gadget_promise(p: crate::instance::Params) -> Promise {
    Promise::exact(6 * p.n, p.m + 5 * p.n, 6 * p.l, "n'=6n m'=m+5n l'=6l")
}

/// Directed Node-2 → Undirected Edge-2 with path colors `(2, c, c, 1, 2)`.
pub fn red_dirnode2_to_undiredge2(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_dirnode2_to_undiredge2";
    require_variant(&inst.graph, Variant::DIR_NODE, NAME)?;
    require_two_colors(&inst.graph, NAME)?;
    let g = &inst.graph;
    let mut edges: Vec<_> = g
        .edges
        .iter()
        .map(|&(u, v)| (gadget::v_out(u), gadget::v_in(v), 1))
        .collect();
    for v in 0..g.n {
        let p = gadget::path(v);
        for (i, c) in gadget::col_edge(g.colors[v]).into_iter().enumerate() {
            edges.push((p[i], p[i + 1], c));
        }
    }
    let out = WalkInstance {
        graph: ColoredGraph::edge_colored(false, 6 * g.n, 2, edges),
        s: gadget::v_out(inst.s),
        t: gadget::v_out(inst.t),
        seq: gadget_sequence(&inst.seq, gadget::col_edge),
    };
    let input = walk(inst.clone());
    let promise = gadget_promise(input.params());
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

/// Directed Node-2 → Undirected Node-2 with `v_in`, `v_out` colored 1 and
/// `v^(1..4)` colored `(2, c, 2, 2)`.
pub fn red_dirnode2_to_undirnode2(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_dirnode2_to_undirnode2";
    require_variant(&inst.graph, Variant::DIR_NODE, NAME)?;
    require_two_colors(&inst.graph, NAME)?;
    let g = &inst.graph;
    let mut edges: Vec<_> = g
        .edges
        .iter()
        .map(|&(u, v)| (gadget::v_out(u), gadget::v_in(v)))
        .collect();
    let mut colors = vec![0; 6 * g.n];
    for v in 0..g.n {
        let p = gadget::path(v);
        for i in 0..5 {
            edges.push((p[i], p[i + 1]));
        }
        colors[p[0]] = 1;
        for (i, c) in gadget::col_node(g.colors[v]).into_iter().enumerate() {
            colors[p[i + 1]] = c;
        }
    }
    let out = WalkInstance {
        graph: ColoredGraph::node_colored(false, 6 * g.n, 2, edges, colors),
        s: gadget::v_out(inst.s),
        t: gadget::v_out(inst.t),
        seq: gadget_sequence(&inst.seq, gadget::col_node),
    };
    let input = walk(inst.clone());
    let promise = gadget_promise(input.params());
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

/// Undirected → directed by adding both orientations of every edge.
pub fn red_undirected_to_directed(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_undirected_to_directed";
    let g = &inst.graph;
    if g.directed {
        return precondition(format!("{NAME} expects an undirected graph"));
    }
    let graph = match g.mode {
        ColoringMode::Edge => ColoredGraph::edge_colored(
            true,
            g.n,
            g.num_colors,
            g.colored_edges().flat_map(|(u, v, c)| [(u, v, c), (v, u, c)]),
        ),
        ColoringMode::Node => ColoredGraph::node_colored(
            true,
            g.n,
            g.num_colors,
            g.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]),
            g.colors.clone(),
        ),
    };
    let out = WalkInstance {
        graph,
        s: inst.s,
        t: inst.t,
        seq: inst.seq.clone(),
    };
    let input = walk(inst.clone());
    let p = input.params();
    let promise = Promise::exact(p.n, 2 * p.m, p.l, "n'=n m'=2m l'=l");
    Ok(ReductionReport::new(NAME, &input, walk(out), promise))
}

/// Walk (edge-colored, C <= 2) → AnyWalk: `s' -3- s`, `t -4- t'`,
/// sequence `3, seq, 4`.
pub fn red_walk_to_anywalk(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_walk_to_anywalk";
    let g = &inst.graph;
    require_edge_mode(g, NAME)?;
    require_two_colors(g, NAME)?;
    let (s2, t2) = (g.n, g.n + 1);
    let edges = g
        .colored_edges()
        .chain([(s2, inst.s, 3), (inst.t, t2, 4)]);
    let graph = ColoredGraph::edge_colored(g.directed, g.n + 2, 4, edges);
    let mut seq = vec![3];
    seq.extend(&inst.seq);
    seq.push(4);
    let out = Instance::AnyWalk(AnyWalkInstance { graph, seq });
    let input = walk(inst.clone());
    let p = input.params();
    let promise = Promise::exact(p.n + 2, p.m + 2, p.l + 2, "n'=n+2 m'=m+2 l'=l+2");
    Ok(ReductionReport::new(NAME, &input, out, promise))
}

/// AnyWalk (edge-colored, σ colors) → Walk: `s'` and `t'` joined to every
/// vertex by color `σ + 1`, sequence `σ+1, seq, σ+1`.
pub fn red_anywalk_to_walk(inst: &AnyWalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_anywalk_to_walk";
    let g = &inst.graph;
    require_edge_mode(g, NAME)?;
    let extra = g.num_colors + 1;
    let (s2, t2) = (g.n, g.n + 1);
    let edges = g
        .colored_edges()
        .chain((0..g.n).flat_map(|v| [(s2, v, extra), (v, t2, extra)]));
    let graph = ColoredGraph::edge_colored(g.directed, g.n + 2, extra, edges);
    let mut seq = vec![extra];
    seq.extend(&inst.seq);
    seq.push(extra);
    let out = walk(WalkInstance {
        graph,
        s: s2,
        t: t2,
        seq,
    });
    let input = Instance::AnyWalk(inst.clone());
    let p = input.params();
    let promise = Promise::exact(p.n + 2, p.m + 2 * p.n, p.l + 2, "n'=n+2 m'=m+2n l'=l+2");
    Ok(ReductionReport::new(NAME, &input, out, promise))
}

/// DirNode2 → DirEdge2 → NFA → DirNodeΣ → DirNode2, one report per step.
pub fn equivalence_cycle(inst: &WalkInstance) -> Result<Vec<ReductionReport>> {
    let a = red_dirnode2_to_diredge2(inst)?;
    let Instance::Walk(edge2) = a.output() else { unreachable!() };
    let b = red_diredge_c_to_nfa(edge2)?;
    let Instance::Nfa(nfa) = b.output() else { unreachable!() };
    let c = red_nfa_to_dirnode_c(nfa)?;
    let Instance::Walk(node_sigma) = c.output() else { unreachable!() };
    let d = red_dirnode_n_to_dirnode2(node_sigma)?;
    Ok(vec![a, b, c, d])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{nfa_accepts, solve_walk_dp};

    fn j0() -> WalkInstance {
        WalkInstance {
            graph: ColoredGraph::node_colored(true, 3, 2, [(0, 1), (1, 2)], vec![1, 2, 1]),
            s: 0,
            t: 2,
            seq: vec![2, 1],
        }
    }

    fn out_walk(r: &ReductionReport) -> &WalkInstance {
        match r.output() {
            Instance::Walk(w) => w,
            other => panic!("expected walk, got {:?}", other.kind()),
        }
    }

    #[test]
    fn node_to_edge_recolors_by_target() {
        let r = red_dirnode2_to_diredge2(&j0()).unwrap();
        let w = out_walk(&r);
        assert_eq!(w.graph.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(w.graph.colors, vec![2, 1]);
        assert!(solve_walk_dp(w));
        assert!(r.violations().is_empty());
    }

    #[test]
    fn wrong_variant_is_rejected() {
        let mut w = j0();
        w.graph.directed = false;
        assert!(red_dirnode2_to_diredge2(&w).is_err());
        assert!(red_diredge_c_to_nfa(&j0()).is_err());
        assert!(red_dirnode2_to_undiredge2(&w).is_err());
    }

    #[test]
    fn binary_expansion_for_c4() {
        let w = WalkInstance {
            graph: ColoredGraph::node_colored(true, 2, 4, [(0, 1)], vec![1, 3]),
            s: 0,
            t: 1,
            seq: vec![3],
        };
        let r = red_dirnode_n_to_dirnode2(&w).unwrap();
        let o = out_walk(&r);
        // 3 - 1 = 0b10
        assert_eq!(o.seq, vec![2, 1]);
        assert_eq!((o.graph.n, o.graph.m()), (4, 3));
        assert!(solve_walk_dp(o));
    }

    #[test]
    fn binary_expansion_is_identity_for_c2() {
        let r = red_dirnode_n_to_dirnode2(&j0()).unwrap();
        assert_eq!(out_walk(&r), &j0());
    }

    #[test]
    fn c_below_two_is_rejected() {
        let mut w = j0();
        w.graph.num_colors = 1;
        w.graph.colors = vec![1; 3];
        w.seq = vec![1];
        assert!(red_dirnode_n_to_dirnode2(&w).is_err());
    }

    #[test]
    fn undirected_gadget_sizes() {
        let r = red_dirnode2_to_undiredge2(&j0()).unwrap();
        assert_eq!(r.params_out, crate::instance::Params::new(18, 17, 12));
        let w = out_walk(&r);
        assert_eq!(&w.seq[..6], &[1, 2, 2, 2, 1, 2]);
        assert!(solve_walk_dp(w));
    }

    #[test]
    fn nfa_loop_is_unrolled_into_alternation() {
        let x = NfaInstance {
            nfa: Nfa {
                n_states: 1,
                alphabet: 1,
                transitions: vec![(0, 1, 0)],
                q0: 0,
                accepting: vec![0],
            },
            input: vec![1, 1],
        };
        assert!(nfa_accepts(&x.nfa, &x.input));
        let r = red_nfa_to_dirnode_c(&x).unwrap();
        assert!(solve_walk_dp(out_walk(&r)));
        assert!(r.violations().is_empty(), "{:?}", r.violations());
    }

    #[test]
    fn anywalk_round_trip_shapes() {
        let w = WalkInstance {
            graph: ColoredGraph::edge_colored(false, 2, 2, [(0, 1, 1)]),
            s: 0,
            t: 0,
            seq: vec![],
        };
        let r = red_walk_to_anywalk(&w).unwrap();
        let Instance::AnyWalk(a) = r.output() else { panic!() };
        assert_eq!(a.seq, vec![3, 4]);
        assert!(crate::solvers::solve_anywalk(a));
        let back = red_anywalk_to_walk(a).unwrap();
        assert_eq!(back.params_out, crate::instance::Params::new(6, 11, 4));
    }
}
