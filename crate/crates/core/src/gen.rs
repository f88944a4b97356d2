//! Seeded random instance generation.
//!
//! All generators draw from `ChaCha8Rng` (a counter-based stream cipher
//! generator) seeded with a 64-bit seed, so audits are reproducible across
//! platforms. Edge sets are drawn uniformly without replacement by rejection
//! sampling; when more than half of all possible edges are requested the
//! complement is sampled instead.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{Bits, BoolMatrix};
use crate::error::{precondition, Result};
use crate::instance::{
    AnyWalkInstance, CflInstance, CliqueInstance, Color, ColoredGraph, ColoringMode, Grammar,
    Instance, InstanceKind, Nfa, NfaInstance, OmvInstance, OvInstance, Variant, Vertex,
    WalkInstance, WordBreakInstance,
};

pub type LabRng = ChaCha8Rng;

pub fn rng(seed: u64) -> LabRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Number of edges in a complete simple graph of the given direction.
pub fn max_edges(n: usize, directed: bool) -> usize {
    let pairs = n * n.saturating_sub(1);
    if directed {
        pairs
    } else {
        pairs / 2
    }
}

/// `⌈n^e⌉` with a small tolerance so that exact integer powers do not round up.
pub fn ceil_pow(n: usize, e: f64) -> usize {
    ((n as f64).powf(e) - 1e-9).ceil().max(0.0) as usize
}

fn random_pair<R: Rng>(rng: &mut R, n: usize, directed: bool) -> (Vertex, Vertex) {
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        return if directed { (u, v) } else { (u.min(v), u.max(v)) };
    }
}

/// `m` distinct loop-free edges chosen uniformly, sorted.
pub fn random_edge_set<R: Rng>(rng: &mut R, n: usize, m: usize, directed: bool) -> Vec<(Vertex, Vertex)> {
    let max = max_edges(n, directed);
    assert!(m <= max, "requested {m} edges, at most {max} possible");
    let invert = m > max / 2;
    let want = if invert { max - m } else { m };
    let mut chosen = HashSet::with_capacity(want);
    while chosen.len() < want {
        chosen.insert(random_pair(rng, n, directed));
    }
    let mut edges: Vec<_> = if invert {
        let mut all = Vec::with_capacity(m);
        for u in 0..n {
            let lo = if directed { 0 } else { u + 1 };
            for v in lo..n {
                if u != v && !chosen.contains(&(u, v)) {
                    all.push((u, v));
                }
            }
        }
        all
    } else {
        chosen.into_iter().collect()
    };
    edges.sort_unstable();
    edges
}

fn colors<R: Rng>(rng: &mut R, count: usize, num_colors: Color) -> Vec<Color> {
    (0..count).map(|_| rng.gen_range(1..=num_colors)).collect()
}

/// Random colored graph with exactly `m` edges.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    num_colors: Color,
    variant: Variant,
) -> Result<ColoredGraph> {
    if n == 0 {
        return precondition("graph needs at least one vertex");
    }
    if num_colors == 0 {
        return precondition("color count must be at least 1");
    }
    let max = max_edges(n, variant.directed);
    if m > max {
        return precondition(format!(
            "{m} edges infeasible: a simple {} graph on {n} vertices has at most {max}",
            if variant.directed { "directed" } else { "undirected" }
        ));
    }
    let edges = random_edge_set(rng, n, m, variant.directed);
    let g = match variant.mode {
        ColoringMode::Edge => {
            let c = colors(rng, edges.len(), num_colors);
            ColoredGraph::edge_colored(
                variant.directed,
                n,
                num_colors,
                edges.into_iter().zip(c).map(|((u, v), c)| (u, v, c)),
            )
        }
        ColoringMode::Node => {
            let c = colors(rng, n, num_colors);
            ColoredGraph::node_colored(variant.directed, n, num_colors, edges, c)
        }
    };
    Ok(g)
}

/// Random walk instance with explicit sizes.
pub fn random_walk<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    l: usize,
    num_colors: Color,
    variant: Variant,
) -> Result<WalkInstance> {
    let graph = random_graph(rng, n, m, num_colors, variant)?;
    let s = rng.gen_range(0..n);
    let t = rng.gen_range(0..n);
    let seq = colors(rng, l, num_colors);
    Ok(WalkInstance { graph, s, t, seq })
}

/// Random walk instance parameterized by density and length exponents:
/// `m = min(⌈n^alpha⌉, max edges)`, `l = ⌈n^beta⌉`.
pub fn gen_random_walk_instance(
    n: usize,
    alpha: f64,
    beta: f64,
    num_colors: Color,
    variant: Variant,
    seed: u64,
) -> Result<WalkInstance> {
    if n < 2 {
        return precondition("n must be at least 2");
    }
    if !(1.0..=2.0).contains(&alpha) {
        return precondition(format!("alpha={alpha} outside [1,2]"));
    }
    if beta.is_nan() || beta <= 0.0 {
        return precondition(format!("beta={beta} must be positive"));
    }
    let m = ceil_pow(n, alpha).min(max_edges(n, variant.directed));
    let l = ceil_pow(n, beta);
    random_walk(&mut rng(seed), n, m, l, num_colors, variant)
}

/// Small walk instance with sizes drawn from the given caps; every variant
/// and density gets exercised across seeds.
pub fn random_small_walk(
    seed: u64,
    max_n: usize,
    max_l: usize,
    num_colors: Color,
    variant: Variant,
) -> WalkInstance {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n.max(1));
    let m = r.gen_range(0..=max_edges(n, variant.directed));
    let l = r.gen_range(0..=max_l);
    random_walk(&mut r, n, m, l, num_colors, variant).expect("sizes are feasible by construction")
}

pub fn random_small_anywalk(
    seed: u64,
    max_n: usize,
    max_l: usize,
    num_colors: Color,
    variant: Variant,
) -> AnyWalkInstance {
    let w = random_small_walk(seed, max_n, max_l, num_colors, variant);
    AnyWalkInstance {
        graph: w.graph,
        seq: w.seq,
    }
}

/// Random NFA (loops and parallel transitions allowed) with an input string.
pub fn random_nfa(seed: u64, max_states: usize, max_sigma: Color, max_input: usize) -> NfaInstance {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_states.max(1));
    let sigma = r.gen_range(1..=max_sigma.max(1));
    let mut all: Vec<(usize, Color, usize)> = (0..n)
        .flat_map(|q| (1..=sigma).flat_map(move |a| (0..n).map(move |p| (q, a, p))))
        .collect();
    let m = r.gen_range(0..=all.len());
    all.shuffle(&mut r);
    all.truncate(m);
    let q0 = r.gen_range(0..n);
    let accepting: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.3)).collect();
    let len = r.gen_range(0..=max_input);
    let input = colors(&mut r, len, sigma);
    let mut nfa = Nfa {
        n_states: n,
        alphabet: sigma,
        transitions: all,
        q0,
        accepting,
    };
    nfa.canonicalize();
    NfaInstance { nfa, input }
}

pub fn random_bits<R: Rng>(rng: &mut R, len: usize, p: f64) -> Bits {
    let bools: Vec<bool> = (0..len).map(|_| rng.gen_bool(p)).collect();
    Bits::from_bools(&bools)
}

pub fn random_ov(seed: u64, max_size: usize, max_d: usize) -> OvInstance {
    let mut r = rng(seed);
    let d = r.gen_range(1..=max_d.max(1));
    let na = r.gen_range(0..=max_size);
    let nb = r.gen_range(0..=max_size);
    // bias toward ones so both answers occur
    let p = r.gen_range(0.3..0.8);
    let a = (0..na).map(|_| random_bits(&mut r, d, p)).collect();
    let b = (0..nb).map(|_| random_bits(&mut r, d, p)).collect();
    OvInstance { d, a, b }
}

/// Erdős–Rényi style graph for clique experiments.
pub fn random_clique_instance(seed: u64, max_n: usize, k: usize) -> CliqueInstance {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n.max(1));
    let p = r.gen_range(0.3..0.95);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    CliqueInstance::new(n, edges, k)
}

pub fn random_word_break(seed: u64, max_text: usize, max_words: usize) -> WordBreakInstance {
    let mut r = rng(seed);
    let text_len = r.gen_range(0..=max_text);
    let text = (0..text_len).map(|_| r.gen_range(0..3u8)).collect();
    let count = r.gen_range(0..=max_words);
    let mut dict = HashSet::new();
    for _ in 0..count {
        let len = r.gen_range(1..=4);
        dict.insert((0..len).map(|_| r.gen_range(0..3u8)).collect::<Vec<_>>());
    }
    let mut w = WordBreakInstance {
        text,
        dictionary: dict.into_iter().collect(),
    };
    w.canonicalize();
    w
}

pub fn random_omv(seed: u64, max_dim: usize) -> OmvInstance {
    let mut r = rng(seed);
    let dim = r.gen_range(0..=max_dim);
    let rows = (0..dim).map(|_| random_bits(&mut r, dim, 0.4)).collect();
    let rounds_n = r.gen_range(0..=dim);
    let rounds = (0..rounds_n).map(|_| random_bits(&mut r, dim, 0.4)).collect();
    OmvInstance {
        matrix: BoolMatrix::from_rows(rows, dim),
        rounds,
    }
}

/// Random CFL instance over Dyck-2 labels.
pub fn random_cfl(seed: u64, max_n: usize) -> CflInstance {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n.max(1));
    let m = r.gen_range(0..=max_edges(n, true));
    let graph = random_graph(&mut r, n, m, 4, Variant::DIR_EDGE).expect("feasible sizes");
    CflInstance {
        graph,
        s: r.gen_range(0..n),
        t: r.gen_range(0..n),
        grammar: Grammar::dyck2(),
    }
}

/// A random valid instance of the given kind (used for format round trips).
pub fn random_instance(kind: InstanceKind, seed: u64) -> Instance {
    let variant = Variant::ALL[(seed % 4) as usize];
    let colors = 1 + (seed % 4) as Color;
    match kind {
        InstanceKind::Walk => Instance::Walk(random_small_walk(seed, 8, 8, colors, variant)),
        InstanceKind::AnyWalk => {
            Instance::AnyWalk(random_small_anywalk(seed, 8, 8, colors, variant))
        }
        InstanceKind::Nfa => Instance::Nfa(random_nfa(seed, 6, 3, 8)),
        InstanceKind::Cfl => Instance::Cfl(random_cfl(seed, 6)),
        InstanceKind::WordBreak => Instance::WordBreak(random_word_break(seed, 12, 6)),
        InstanceKind::Omv => Instance::Omv(random_omv(seed, 8)),
        InstanceKind::Ov => Instance::Ov(random_ov(seed, 6, 5)),
        InstanceKind::Clique => Instance::Clique(random_clique_instance(seed, 9, 3)),
    }
}
