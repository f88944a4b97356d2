//! Instance data model for every problem in the lab.
//!
//! Vertices and NFA states are dense indices `0..n`; colors and NFA symbols
//! are `1..=C`. Graphs are kept in canonical form: edges sorted, undirected
//! edges stored once as `(u, v)` with `u < v`. [`ColoredGraph::arcs`] gives
//! the solver-facing view where every traversable direction carries the color
//! observed when stepping along it.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::bits::{Bits, BoolMatrix};
use crate::error::{Error, Result, Violation};

pub type Vertex = usize;
pub type Color = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColoringMode {
    Node,
    Edge,
}

/// Direction × coloring mode. The alphabet size is a separate parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variant {
    pub directed: bool,
    pub mode: ColoringMode,
}

impl Variant {
    pub const DIR_EDGE: Variant = Variant {
        directed: true,
        mode: ColoringMode::Edge,
    };
    pub const DIR_NODE: Variant = Variant {
        directed: true,
        mode: ColoringMode::Node,
    };
    pub const UNDIR_EDGE: Variant = Variant {
        directed: false,
        mode: ColoringMode::Edge,
    };
    pub const UNDIR_NODE: Variant = Variant {
        directed: false,
        mode: ColoringMode::Node,
    };

    pub const ALL: [Variant; 4] = [
        Variant::DIR_EDGE,
        Variant::DIR_NODE,
        Variant::UNDIR_EDGE,
        Variant::UNDIR_NODE,
    ];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.directed { "dir" } else { "undir" };
        let m = match self.mode {
            ColoringMode::Node => "node",
            ColoringMode::Edge => "edge",
        };
        write!(f, "{d}-{m}")
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dir-edge" => Ok(Variant::DIR_EDGE),
            "dir-node" => Ok(Variant::DIR_NODE),
            "undir-edge" => Ok(Variant::UNDIR_EDGE),
            "undir-node" => Ok(Variant::UNDIR_NODE),
            _ => Err(Error::Unknown(format!("variant {s:?}"))),
        }
    }
}

/// Simple graph with a coloring on nodes or on edges.
///
/// `colors` has one entry per vertex in node mode and one entry per edge
/// (parallel to `edges`) in edge mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    pub directed: bool,
    pub n: usize,
    pub mode: ColoringMode,
    pub num_colors: Color,
    pub edges: Vec<(Vertex, Vertex)>,
    pub colors: Vec<Color>,
}

impl ColoredGraph {
    /// Edge-colored graph from `(u, v, color)` triples; canonicalizes.
    pub fn edge_colored(
        directed: bool,
        n: usize,
        num_colors: Color,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Color)>,
    ) -> Self {
        let (edges, colors) = edges.into_iter().map(|(u, v, c)| ((u, v), c)).unzip();
        let mut g = ColoredGraph {
            directed,
            n,
            mode: ColoringMode::Edge,
            num_colors,
            edges,
            colors,
        };
        g.canonicalize();
        g
    }

    /// Node-colored graph; `node_colors[v]` is the color of `v`.
    pub fn node_colored(
        directed: bool,
        n: usize,
        num_colors: Color,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
        node_colors: Vec<Color>,
    ) -> Self {
        let mut g = ColoredGraph {
            directed,
            n,
            mode: ColoringMode::Node,
            num_colors,
            edges: edges.into_iter().collect(),
            colors: node_colors,
        };
        g.canonicalize();
        g
    }

    pub fn variant(&self) -> Variant {
        Variant {
            directed: self.directed,
            mode: self.mode,
        }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Orients undirected edges as `u < v` and sorts the edge list (carrying
    /// edge colors along).
    pub fn canonicalize(&mut self) {
        if !self.directed {
            for e in &mut self.edges {
                if e.0 > e.1 {
                    *e = (e.1, e.0);
                }
            }
        }
        match self.mode {
            ColoringMode::Node => self.edges.sort_unstable(),
            ColoringMode::Edge if self.colors.len() == self.edges.len() => {
                let mut pairs: Vec<_> = self
                    .edges
                    .iter()
                    .copied()
                    .zip(self.colors.iter().copied())
                    .collect();
                pairs.sort_unstable();
                (self.edges, self.colors) = pairs.into_iter().unzip();
            }
            // length mismatch is a validation error; leave it visible
            ColoringMode::Edge => {}
        }
    }

    /// Color observed when stepping along edge index `e` into `target`.
    #[inline]
    fn step_color(&self, e: usize, target: Vertex) -> Color {
        match self.mode {
            ColoringMode::Edge => self.colors[e],
            ColoringMode::Node => self.colors[target],
        }
    }

    /// Every traversable direction `(from, to, color)`: undirected edges
    /// appear in both directions, and the color is the edge color (edge mode)
    /// or the color of `to` (node mode).
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + Clone + '_ {
        self.edges.iter().enumerate().flat_map(move |(e, &(u, v))| {
            let fwd = Some((u, v, self.step_color(e, v)));
            let bwd = (!self.directed).then(|| (v, u, self.step_color(e, u)));
            fwd.into_iter().chain(bwd)
        })
    }

    /// Stored edges with their edge colors. Edge mode only.
    pub fn colored_edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        debug_assert_eq!(self.mode, ColoringMode::Edge);
        self.edges.iter().zip(&self.colors).map(|(&(u, v), &c)| (u, v, c))
    }

    /// Adjacency matrix of the arcs with step color `color`.
    pub fn color_matrix(&self, color: Color) -> BoolMatrix {
        let mut a = BoolMatrix::zeros(self.n, self.n);
        for (u, v, c) in self.arcs() {
            if c == color {
                a.set(u, v, true);
            }
        }
        a
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.num_colors < 1 {
            out.push(Violation::new("C", "color count must be at least 1"));
        }
        let mut seen = HashSet::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            if u >= self.n || v >= self.n {
                out.push(Violation::new(
                    "edges",
                    format!("endpoint out of range ({u},{v}) with n={}", self.n),
                ));
                continue;
            }
            if u == v {
                out.push(Violation::new("edges", format!("loop ({u},{v})")));
            }
            if !self.directed && u > v {
                out.push(Violation::new(
                    "edges",
                    format!("undirected edge ({u},{v}) not stored as u < v"),
                ));
            }
            let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !seen.insert(key) {
                out.push(Violation::new("edges", format!("duplicate ({u},{v})")));
            }
        }
        let (want, what) = match self.mode {
            ColoringMode::Node => (self.n, "one color per node"),
            ColoringMode::Edge => (self.edges.len(), "one color per edge"),
        };
        if self.colors.len() != want {
            out.push(Violation::new(
                "colors",
                format!("expected {what} ({want}), found {}", self.colors.len()),
            ));
        }
        for (i, &c) in self.colors.iter().enumerate() {
            if let Some(msg) = color_problem(c, self.num_colors) {
                out.push(Violation::new(format!("colors[{i}]"), msg));
            }
        }
        out
    }
}

pub(crate) fn color_problem(c: Color, num_colors: Color) -> Option<String> {
    if c == 0 {
        Some("color 0 out of range (colors start at 1)".to_string())
    } else if c > num_colors {
        Some(format!("color {c} > C={num_colors}"))
    } else {
        None
    }
}

fn seq_violations(seq: &[Color], num_colors: Color, out: &mut Vec<Violation>) {
    for (i, &c) in seq.iter().enumerate() {
        if let Some(msg) = color_problem(c, num_colors) {
            out.push(Violation::new(format!("seq[{i}]"), msg));
        }
    }
}

fn vertex_violation(name: &str, v: Vertex, n: usize, out: &mut Vec<Violation>) {
    if v >= n {
        out.push(Violation::new(name, format!("vertex {v} out of range (n={n})")));
    }
}

/// Colored Walk instance: does an `s`-`t` walk with color sequence `seq` exist?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkInstance {
    pub graph: ColoredGraph,
    pub s: Vertex,
    pub t: Vertex,
    pub seq: Vec<Color>,
}

impl WalkInstance {
    pub fn l(&self) -> usize {
        self.seq.len()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.graph.validate();
        vertex_violation("s", self.s, self.graph.n, &mut out);
        vertex_violation("t", self.t, self.graph.n, &mut out);
        seq_violations(&self.seq, self.graph.num_colors, &mut out);
        out
    }
}

/// Colored Walk without fixed endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnyWalkInstance {
    pub graph: ColoredGraph,
    pub seq: Vec<Color>,
}

impl AnyWalkInstance {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.graph.validate();
        seq_violations(&self.seq, self.graph.num_colors, &mut out);
        out
    }
}

/// NFA without ε-transitions. Symbols are `1..=alphabet`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub n_states: usize,
    pub alphabet: Color,
    /// Sorted, duplicate-free `(from, symbol, to)` triples.
    pub transitions: Vec<(usize, Color, usize)>,
    pub q0: usize,
    /// Sorted, duplicate-free.
    pub accepting: Vec<usize>,
}

impl Nfa {
    pub fn canonicalize(&mut self) {
        self.transitions.sort_unstable();
        self.transitions.dedup();
        self.accepting.sort_unstable();
        self.accepting.dedup();
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n_states == 0 {
            out.push(Violation::new("n", "NFA needs at least one state"));
        }
        vertex_violation("q0", self.q0, self.n_states, &mut out);
        for &f in &self.accepting {
            vertex_violation("accept", f, self.n_states, &mut out);
        }
        if self.accepting.windows(2).any(|w| w[0] == w[1]) {
            out.push(Violation::new("accept", "duplicate accepting state"));
        }
        let mut seen = HashSet::new();
        for &(q, a, r) in &self.transitions {
            if q >= self.n_states || r >= self.n_states {
                out.push(Violation::new(
                    "transitions",
                    format!("state out of range ({q},{a},{r})"),
                ));
            }
            if let Some(msg) = color_problem(a, self.alphabet) {
                out.push(Violation::new(
                    "transitions",
                    format!("({q},{a},{r}): symbol {msg}"),
                ));
            }
            if !seen.insert((q, a, r)) {
                out.push(Violation::new(
                    "transitions",
                    format!("duplicate ({q},{a},{r})"),
                ));
            }
        }
        out
    }
}

/// An NFA together with its input string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NfaInstance {
    pub nfa: Nfa,
    pub input: Vec<Color>,
}

impl NfaInstance {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.nfa.validate();
        for (i, &a) in self.input.iter().enumerate() {
            if let Some(msg) = color_problem(a, self.nfa.alphabet) {
                out.push(Violation::new(format!("input[{i}]"), msg));
            }
        }
        out
    }
}

/// Context-free grammar in the normal form used by the CFL solver: unary
/// rules `X -> a` and binary rules `X -> Y Z`, no ε-rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    pub nonterminals: usize,
    pub terminals: Color,
    pub unary: Vec<(usize, Color)>,
    pub binary: Vec<(usize, usize, usize)>,
    pub start: usize,
}

/// Terminal encoding of the two parenthesis types.
pub mod dyck {
    use super::Color;
    pub const OPEN1: Color = 1;
    pub const CLOSE1: Color = 2;
    pub const OPEN2: Color = 3;
    pub const CLOSE2: Color = 4;

    /// Opening terminal for walk color `c ∈ {1,2}`.
    pub fn open(c: Color) -> Color {
        2 * c - 1
    }

    /// Closing terminal for walk color `c ∈ {1,2}`.
    pub fn close(c: Color) -> Color {
        2 * c
    }
}

impl Grammar {
    /// Dyck-2 (`S -> SS | (1 S )1 | (1 )1 | (2 S )2 | (2 )2`) in normal form.
    ///
    /// Nonterminals: `S=0`, `O1=1`, `C1=2`, `O2=3`, `C2=4`, `A1=5`, `A2=6`
    /// with `Oi -> (i`, `Ci -> )i` and `Ai -> S Ci`.
    pub fn dyck2() -> Self {
        const S: usize = 0;
        const O1: usize = 1;
        const C1: usize = 2;
        const O2: usize = 3;
        const C2: usize = 4;
        const A1: usize = 5;
        const A2: usize = 6;
        let mut g = Grammar {
            nonterminals: 7,
            terminals: 4,
            unary: vec![
                (O1, dyck::OPEN1),
                (C1, dyck::CLOSE1),
                (O2, dyck::OPEN2),
                (C2, dyck::CLOSE2),
            ],
            binary: vec![
                (S, S, S),
                (S, O1, A1),
                (S, O1, C1),
                (S, O2, A2),
                (S, O2, C2),
                (A1, S, C1),
                (A2, S, C2),
            ],
            start: S,
        };
        g.canonicalize();
        g
    }

    pub fn canonicalize(&mut self) {
        self.unary.sort_unstable();
        self.unary.dedup();
        self.binary.sort_unstable();
        self.binary.dedup();
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let nt = self.nonterminals;
        vertex_violation("grammar.start", self.start, nt, &mut out);
        for &(x, a) in &self.unary {
            if x >= nt {
                out.push(Violation::new("grammar.unary", format!("nonterminal {x} out of range")));
            }
            if let Some(msg) = color_problem(a, self.terminals) {
                out.push(Violation::new("grammar.unary", format!("terminal {msg}")));
            }
        }
        for &(x, y, z) in &self.binary {
            if x >= nt || y >= nt || z >= nt {
                out.push(Violation::new(
                    "grammar.binary",
                    format!("rule ({x},{y},{z}) references unknown nonterminal"),
                ));
            }
        }
        out
    }
}

/// CFL Reachability: does an `s`-`t` walk spell a word of `grammar`?
/// Edge colors of `graph` are terminals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CflInstance {
    pub graph: ColoredGraph,
    pub s: Vertex,
    pub t: Vertex,
    pub grammar: Grammar,
}

impl CflInstance {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.graph.validate();
        if !self.graph.directed || self.graph.mode != ColoringMode::Edge {
            out.push(Violation::new("graph", "CFL graphs are directed and edge-labeled"));
        }
        if self.graph.num_colors > self.grammar.terminals {
            out.push(Violation::new(
                "graph",
                format!(
                    "label count C={} exceeds grammar terminals {}",
                    self.graph.num_colors, self.grammar.terminals
                ),
            ));
        }
        vertex_violation("s", self.s, self.graph.n, &mut out);
        vertex_violation("t", self.t, self.graph.n, &mut out);
        out.extend(self.grammar.validate());
        out
    }
}

/// Symbols of Word Break texts are `0..WORD_ALPHABET`.
pub const WORD_ALPHABET: u8 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordBreakInstance {
    pub text: Vec<u8>,
    /// Sorted, distinct, nonempty words.
    pub dictionary: Vec<Vec<u8>>,
}

impl WordBreakInstance {
    pub fn canonicalize(&mut self) {
        self.dictionary.sort();
    }

    /// Total dictionary length.
    pub fn total_dictionary_len(&self) -> usize {
        self.dictionary.iter().map(Vec::len).sum()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let check = |field: String, w: &[u8], out: &mut Vec<Violation>| {
            if let Some(&x) = w.iter().find(|&&x| x >= WORD_ALPHABET) {
                out.push(Violation::new(field, format!("symbol {x} outside {{0,1,2}}")));
            }
        };
        check("text".into(), &self.text, &mut out);
        let mut seen = HashSet::new();
        for (i, w) in self.dictionary.iter().enumerate() {
            if w.is_empty() {
                out.push(Violation::new(format!("dictionary[{i}]"), "empty word"));
            }
            if !seen.insert(w) {
                out.push(Violation::new(format!("dictionary[{i}]"), "duplicate word"));
            }
            check(format!("dictionary[{i}]"), w, &mut out);
        }
        out
    }
}

/// OMv instance: a square matrix and the query vectors of each round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmvInstance {
    pub matrix: BoolMatrix,
    pub rounds: Vec<Bits>,
}

impl OmvInstance {
    pub fn dim(&self) -> usize {
        self.matrix.n_rows()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.matrix.n_rows();
        if self.matrix.n_cols() != n {
            out.push(Violation::new("matrix", "matrix is not square"));
        }
        if self.rounds.len() > n {
            out.push(Violation::new(
                "rounds",
                format!("{} rounds exceed dimension {n}", self.rounds.len()),
            ));
        }
        for (i, r) in self.rounds.iter().enumerate() {
            if r.len() != n {
                out.push(Violation::new(
                    format!("rounds[{i}]"),
                    format!("length {} differs from dimension {n}", r.len()),
                ));
            }
        }
        out
    }
}

/// Orthogonal Vectors: vector lists `a`, `b` in `{0,1}^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvInstance {
    pub d: usize,
    pub a: Vec<Bits>,
    pub b: Vec<Bits>,
}

impl OvInstance {
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (name, set) in [("a", &self.a), ("b", &self.b)] {
            for (i, v) in set.iter().enumerate() {
                if v.len() != self.d {
                    out.push(Violation::new(
                        format!("{name}[{i}]"),
                        format!("length {} differs from d={}", v.len(), self.d),
                    ));
                }
            }
        }
        out
    }
}

/// k-Clique on an undirected uncolored simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueInstance {
    pub n: usize,
    /// Sorted, each edge once with `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
    pub k: usize,
}

impl CliqueInstance {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>, k: usize) -> Self {
        let mut c = CliqueInstance {
            n,
            edges: edges.into_iter().collect(),
            k,
        };
        c.canonicalize();
        c
    }

    pub fn canonicalize(&mut self) {
        for e in &mut self.edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        self.edges.sort_unstable();
    }

    pub fn adjacency(&self) -> Vec<Bits> {
        let mut adj = vec![Bits::zeros(self.n); self.n];
        for &(u, v) in &self.edges {
            adj[u].set(v, true);
            adj[v].set(u, true);
        }
        adj
    }

    pub fn validate(&self) -> Vec<Violation> {
        let as_graph = ColoredGraph {
            directed: false,
            n: self.n,
            mode: ColoringMode::Node,
            num_colors: 1,
            edges: self.edges.clone(),
            colors: vec![1; self.n],
        };
        as_graph.validate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Walk,
    AnyWalk,
    Nfa,
    Cfl,
    WordBreak,
    Omv,
    Ov,
    Clique,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 8] = [
        InstanceKind::Walk,
        InstanceKind::AnyWalk,
        InstanceKind::Nfa,
        InstanceKind::Cfl,
        InstanceKind::WordBreak,
        InstanceKind::Omv,
        InstanceKind::Ov,
        InstanceKind::Clique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Walk => "walk",
            InstanceKind::AnyWalk => "anywalk",
            InstanceKind::Nfa => "nfa",
            InstanceKind::Cfl => "cfl",
            InstanceKind::WordBreak => "wordbreak",
            InstanceKind::Omv => "omv",
            InstanceKind::Ov => "ov",
            InstanceKind::Clique => "clique",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InstanceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown(format!("instance kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Walk(WalkInstance),
    AnyWalk(AnyWalkInstance),
    Nfa(NfaInstance),
    Cfl(CflInstance),
    WordBreak(WordBreakInstance),
    Omv(OmvInstance),
    Ov(OvInstance),
    Clique(CliqueInstance),
}

/// Size parameters `(n, m, l)` of an instance. The meaning per kind:
///
/// | kind      | n        | m                  | l          |
/// |-----------|----------|--------------------|------------|
/// | walk      | vertices | edges              | seq length |
/// | anywalk   | vertices | edges              | seq length |
/// | nfa       | states   | transitions        | input len  |
/// | cfl       | vertices | edges              | 0          |
/// | wordbreak | text len | total dict length  | word count |
/// | omv       | dim      | nonzeros of matrix | rounds     |
/// | ov        | \|A\|    | d                  | \|B\|      |
/// | clique    | vertices | edges              | k          |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Params {
    pub n: usize,
    pub m: usize,
    pub l: usize,
}

impl Params {
    pub fn new(n: usize, m: usize, l: usize) -> Self {
        Params { n, m, l }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.n, self.m, self.l)
    }
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::Walk(_) => InstanceKind::Walk,
            Instance::AnyWalk(_) => InstanceKind::AnyWalk,
            Instance::Nfa(_) => InstanceKind::Nfa,
            Instance::Cfl(_) => InstanceKind::Cfl,
            Instance::WordBreak(_) => InstanceKind::WordBreak,
            Instance::Omv(_) => InstanceKind::Omv,
            Instance::Ov(_) => InstanceKind::Ov,
            Instance::Clique(_) => InstanceKind::Clique,
        }
    }

    pub fn params(&self) -> Params {
        match self {
            Instance::Walk(w) => Params::new(w.graph.n, w.graph.m(), w.seq.len()),
            Instance::AnyWalk(w) => Params::new(w.graph.n, w.graph.m(), w.seq.len()),
            Instance::Nfa(x) => {
                Params::new(x.nfa.n_states, x.nfa.transitions.len(), x.input.len())
            }
            Instance::Cfl(c) => Params::new(c.graph.n, c.graph.m(), 0),
            Instance::WordBreak(w) => {
                Params::new(w.text.len(), w.total_dictionary_len(), w.dictionary.len())
            }
            Instance::Omv(o) => Params::new(o.dim(), o.matrix.count_ones(), o.rounds.len()),
            Instance::Ov(o) => Params::new(o.a.len(), o.d, o.b.len()),
            Instance::Clique(c) => Params::new(c.n, c.edges.len(), c.k),
        }
    }

    /// All invariant violations; empty iff the instance is valid.
    pub fn validate(&self) -> Vec<Violation> {
        match self {
            Instance::Walk(w) => w.validate(),
            Instance::AnyWalk(w) => w.validate(),
            Instance::Nfa(x) => x.validate(),
            Instance::Cfl(c) => c.validate(),
            Instance::WordBreak(w) => w.validate(),
            Instance::Omv(o) => o.validate(),
            Instance::Ov(o) => o.validate(),
            Instance::Clique(c) => c.validate(),
        }
    }

    /// `Ok(self)` if valid, otherwise [`Error::Invalid`] with all violations.
    pub fn validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Invalid(v))
        }
    }
}

/// Free-function form of [`Instance::validate`].
pub fn validate_instance(instance: &Instance) -> Vec<Violation> {
    instance.validate()
}
