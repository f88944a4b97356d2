//! Line-oriented text format for instances.
//!
//! One instance per `kind` block. Blank lines and lines starting with `#`
//! are ignored, so reduction headers can precede an instance. The serializer
//! is canonical: fields in a fixed order, sorted edge/transition lists,
//! values separated by single spaces.
//!
//! ```text
//! kind walk
//! graph directed edge n=3 C=2
//! edge 0 1 1
//! edge 0 2 2
//! edge 1 2 2
//! st 0 2
//! seq 1 2
//! ```

use std::fmt::Write;
use std::str::FromStr;

use crate::bits::{Bits, BoolMatrix};
use crate::error::{Error, Result};
use crate::instance::{
    AnyWalkInstance, CflInstance, CliqueInstance, Color, ColoredGraph, ColoringMode, Grammar,
    Instance, InstanceKind, Nfa, NfaInstance, OmvInstance, OvInstance, WalkInstance,
    WordBreakInstance,
};

#[derive(Clone)]
struct Line<'a> {
    no: usize,
    key: &'a str,
    rest: Vec<&'a str>,
}

struct Lines<'a> {
    items: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

fn perr<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut items = Vec::new();
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut toks = trimmed.split_whitespace();
            let key = toks.next().unwrap_or_default();
            items.push(Line {
                no: i + 1,
                key,
                rest: toks.collect(),
            });
        }
        Lines {
            items,
            pos: 0,
            last_line,
        }
    }

    fn peek_key(&self) -> Option<&'a str> {
        self.items.get(self.pos).map(|l| l.key)
    }

    fn next_if(&mut self, key: &str) -> Option<Line<'a>> {
        if self.peek_key() == Some(key) {
            self.pos += 1;
            Some(self.items[self.pos - 1].clone())
        } else {
            None
        }
    }

    fn expect(&mut self, key: &str) -> Result<Line<'a>> {
        match self.items.get(self.pos) {
            Some(l) if l.key == key => {
                self.pos += 1;
                Ok(self.items[self.pos - 1].clone())
            }
            Some(l) => perr(l.no, format!("expected `{key}`, found `{}`", l.key)),
            None => perr(self.last_line + 1, format!("expected `{key}`, found end of input")),
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.items.len()
    }
}

fn num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .or_else(|_| perr(line, format!("{what}: expected a non-negative integer, found {tok:?}")))
}

fn nums<T: FromStr>(l: &Line<'_>, what: &str) -> Result<Vec<T>> {
    l.rest.iter().map(|t| num(l.no, t, what)).collect()
}

fn exact<'a, 'b>(l: &'b Line<'a>, count: usize) -> Result<&'b [&'a str]> {
    if l.rest.len() != count {
        return perr(
            l.no,
            format!("`{}` takes {count} fields, found {}", l.key, l.rest.len()),
        );
    }
    Ok(&l.rest)
}

fn kv<T: FromStr>(l: &Line<'_>, tok: &str, key: &str) -> Result<T> {
    match tok.split_once('=') {
        Some((k, v)) if k == key => num(l.no, v, key),
        _ => perr(l.no, format!("expected `{key}=<value>`, found {tok:?}")),
    }
}

fn bitstring(l: &Line<'_>) -> Result<Bits> {
    match l.rest.len() {
        0 => Ok(Bits::zeros(0)),
        1 => Bits::from_bitstring(l.rest[0])
            .map_or_else(|| perr(l.no, format!("invalid bitstring {:?}", l.rest[0])), Ok),
        _ => perr(l.no, "bitstring must be a single token"),
    }
}

fn symbols(l: &Line<'_>) -> Result<Vec<u8>> {
    match l.rest.len() {
        0 => Ok(Vec::new()),
        1 => l.rest[0]
            .bytes()
            .map(|b| match b {
                b'0'..=b'9' => Ok(b - b'0'),
                _ => perr(l.no, format!("invalid symbol {:?}", b as char)),
            })
            .collect(),
        _ => perr(l.no, "symbol string must be a single token"),
    }
}

fn parse_graph(lines: &mut Lines<'_>) -> Result<ColoredGraph> {
    let h = &lines.expect("graph")?;
    let f = exact(h, 4)?;
    let directed = match f[0] {
        "directed" => true,
        "undirected" => false,
        x => return perr(h.no, format!("expected directed|undirected, found {x:?}")),
    };
    let mode = match f[1] {
        "node" => ColoringMode::Node,
        "edge" => ColoringMode::Edge,
        x => return perr(h.no, format!("expected node|edge, found {x:?}")),
    };
    let n: usize = kv(h, f[2], "n")?;
    let num_colors: Color = kv(h, f[3], "C")?;
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    while let Some(ref l) = lines.next_if("edge") {
        let want = if mode == ColoringMode::Edge { 3 } else { 2 };
        let v: Vec<usize> = nums(l, "edge")?;
        if v.len() != want {
            return perr(l.no, format!("`edge` takes {want} fields, found {}", v.len()));
        }
        edges.push((v[0], v[1]));
        if mode == ColoringMode::Edge {
            colors.push(v[2] as Color);
        }
    }
    if mode == ColoringMode::Node {
        let mut node_colors: Vec<Option<Color>> = vec![None; n];
        while let Some(ref l) = lines.next_if("nodecolor") {
            let v: Vec<usize> = nums(l, "nodecolor")?;
            if v.len() != 2 {
                return perr(l.no, "`nodecolor` takes 2 fields");
            }
            if v[0] >= n {
                return perr(l.no, format!("nodecolor vertex {} out of range (n={n})", v[0]));
            }
            if node_colors[v[0]].replace(v[1] as Color).is_some() {
                return perr(l.no, format!("vertex {} colored twice", v[0]));
            }
        }
        colors = node_colors
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.map_or_else(|| perr(h.no, format!("vertex {v} has no nodecolor")), Ok))
            .collect::<Result<_>>()?;
    }
    let mut g = ColoredGraph {
        directed,
        n,
        mode,
        num_colors,
        edges,
        colors,
    };
    g.canonicalize();
    Ok(g)
}

fn parse_st(lines: &mut Lines<'_>) -> Result<(usize, usize)> {
    let l = &lines.expect("st")?;
    let f = exact(l, 2)?;
    Ok((num(l.no, f[0], "s")?, num(l.no, f[1], "t")?))
}

fn parse_walk(lines: &mut Lines<'_>) -> Result<WalkInstance> {
    let graph = parse_graph(lines)?;
    let (s, t) = parse_st(lines)?;
    let seq = nums(&lines.expect("seq")?, "seq")?;
    Ok(WalkInstance { graph, s, t, seq })
}

fn parse_anywalk(lines: &mut Lines<'_>) -> Result<AnyWalkInstance> {
    let graph = parse_graph(lines)?;
    let seq = nums(&lines.expect("seq")?, "seq")?;
    Ok(AnyWalkInstance { graph, seq })
}

fn parse_nfa(lines: &mut Lines<'_>) -> Result<NfaInstance> {
    let h = &lines.expect("nfa")?;
    let f = exact(h, 3)?;
    let n_states = kv(h, f[0], "n")?;
    let alphabet = kv(h, f[1], "sigma")?;
    let q0 = kv(h, f[2], "q0")?;
    let accepting = nums(&lines.expect("accept")?, "accept")?;
    let mut transitions = Vec::new();
    while let Some(ref l) = lines.next_if("trans") {
        let f = exact(l, 3)?;
        transitions.push((
            num(l.no, f[0], "state")?,
            num(l.no, f[1], "symbol")?,
            num(l.no, f[2], "state")?,
        ));
    }
    let input = nums(&lines.expect("input")?, "input")?;
    let mut nfa = Nfa {
        n_states,
        alphabet,
        transitions,
        q0,
        accepting,
    };
    let raw_len = (nfa.transitions.len(), nfa.accepting.len());
    nfa.canonicalize();
    if raw_len != (nfa.transitions.len(), nfa.accepting.len()) {
        return perr(h.no, "duplicate transition or accepting state");
    }
    Ok(NfaInstance { nfa, input })
}

fn parse_grammar(lines: &mut Lines<'_>) -> Result<Grammar> {
    let h = &lines.expect("grammar")?;
    if h.rest == ["dyck2"] {
        return Ok(Grammar::dyck2());
    }
    let f = exact(h, 3)?;
    let mut g = Grammar {
        nonterminals: kv(h, f[0], "nonterminals")?,
        terminals: kv(h, f[1], "terminals")?,
        start: kv(h, f[2], "start")?,
        unary: Vec::new(),
        binary: Vec::new(),
    };
    while let Some(ref l) = lines.next_if("unary") {
        let f = exact(l, 2)?;
        g.unary.push((num(l.no, f[0], "nonterminal")?, num(l.no, f[1], "terminal")?));
    }
    while let Some(ref l) = lines.next_if("binary") {
        let f = exact(l, 3)?;
        g.binary.push((
            num(l.no, f[0], "nonterminal")?,
            num(l.no, f[1], "nonterminal")?,
            num(l.no, f[2], "nonterminal")?,
        ));
    }
    g.canonicalize();
    Ok(g)
}

fn parse_cfl(lines: &mut Lines<'_>) -> Result<CflInstance> {
    let graph = parse_graph(lines)?;
    let (s, t) = parse_st(lines)?;
    let grammar = parse_grammar(lines)?;
    Ok(CflInstance { graph, s, t, grammar })
}

fn parse_wordbreak(lines: &mut Lines<'_>) -> Result<WordBreakInstance> {
    let text = symbols(&lines.expect("text")?)?;
    let mut dictionary = Vec::new();
    while let Some(ref l) = lines.next_if("word") {
        dictionary.push(symbols(l)?);
    }
    let mut w = WordBreakInstance { text, dictionary };
    w.canonicalize();
    Ok(w)
}

fn parse_omv(lines: &mut Lines<'_>) -> Result<OmvInstance> {
    let h = &lines.expect("omv")?;
    let f = exact(h, 2)?;
    let dim: usize = kv(h, f[0], "N")?;
    let n_rounds: usize = kv(h, f[1], "rounds")?;
    let mut rows = Vec::with_capacity(dim);
    for _ in 0..dim {
        let l = &lines.expect("row")?;
        let r = bitstring(l)?;
        if r.len() != dim {
            return perr(l.no, format!("row length {} differs from N={dim}", r.len()));
        }
        rows.push(r);
    }
    let mut rounds = Vec::with_capacity(n_rounds);
    for _ in 0..n_rounds {
        rounds.push(bitstring(&lines.expect("round")?)?);
    }
    Ok(OmvInstance {
        matrix: BoolMatrix::from_rows(rows, dim),
        rounds,
    })
}

fn parse_ov(lines: &mut Lines<'_>) -> Result<OvInstance> {
    let h = &lines.expect("ov")?;
    let d = kv(h, exact(h, 1)?[0], "d")?;
    let mut a = Vec::new();
    while let Some(ref l) = lines.next_if("a") {
        a.push(bitstring(l)?);
    }
    let mut b = Vec::new();
    while let Some(ref l) = lines.next_if("b") {
        b.push(bitstring(l)?);
    }
    Ok(OvInstance { d, a, b })
}

fn parse_clique(lines: &mut Lines<'_>) -> Result<CliqueInstance> {
    let h = &lines.expect("clique")?;
    let f = exact(h, 2)?;
    let n = kv(h, f[0], "n")?;
    let k = kv(h, f[1], "k")?;
    let mut edges = Vec::new();
    while let Some(ref l) = lines.next_if("edge") {
        let f = exact(l, 2)?;
        edges.push((num(l.no, f[0], "edge")?, num(l.no, f[1], "edge")?));
    }
    Ok(CliqueInstance::new(n, edges, k))
}

fn parse_block(lines: &mut Lines<'_>) -> Result<Instance> {
    let h = &lines.expect("kind")?;
    let kind: InstanceKind = exact(h, 1)?[0]
        .parse()
        .or_else(|e: Error| perr(h.no, e.to_string()))?;
    let inst = match kind {
        InstanceKind::Walk => Instance::Walk(parse_walk(lines)?),
        InstanceKind::AnyWalk => Instance::AnyWalk(parse_anywalk(lines)?),
        InstanceKind::Nfa => Instance::Nfa(parse_nfa(lines)?),
        InstanceKind::Cfl => Instance::Cfl(parse_cfl(lines)?),
        InstanceKind::WordBreak => Instance::WordBreak(parse_wordbreak(lines)?),
        InstanceKind::Omv => Instance::Omv(parse_omv(lines)?),
        InstanceKind::Ov => Instance::Ov(parse_ov(lines)?),
        InstanceKind::Clique => Instance::Clique(parse_clique(lines)?),
    };
    inst.validated()
}

/// Parses and validates exactly one instance.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let inst = parse_block(&mut lines)?;
    if let Some(l) = lines.items.get(lines.pos) {
        return perr(l.no, format!("unexpected `{}` after end of instance", l.key));
    }
    Ok(inst)
}

/// Like [`parse_instance`] but rejects any other instance kind.
pub fn parse_instance_as(text: &str, kind: InstanceKind) -> Result<Instance> {
    let inst = parse_instance(text)?;
    if inst.kind() != kind {
        return Err(Error::Precondition(format!(
            "expected a {kind} instance, found {}",
            inst.kind()
        )));
    }
    Ok(inst)
}

/// Parses a file holding one or more consecutive instance blocks.
pub fn parse_instances(text: &str) -> Result<Vec<Instance>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.done() {
        out.push(parse_block(&mut lines)?);
    }
    Ok(out)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn line(out: &mut String, key: &str, rest: &str) {
    if rest.is_empty() {
        let _ = writeln!(out, "{key}");
    } else {
        let _ = writeln!(out, "{key} {rest}");
    }
}

fn write_graph(out: &mut String, g: &ColoredGraph) {
    let dir = if g.directed { "directed" } else { "undirected" };
    let mode = match g.mode {
        ColoringMode::Node => "node",
        ColoringMode::Edge => "edge",
    };
    let _ = writeln!(out, "graph {dir} {mode} n={} C={}", g.n, g.num_colors);
    let mut g = g.clone();
    g.canonicalize();
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        match g.mode {
            ColoringMode::Edge => {
                let _ = writeln!(out, "edge {u} {v} {}", g.colors[i]);
            }
            ColoringMode::Node => {
                let _ = writeln!(out, "edge {u} {v}");
            }
        }
    }
    if g.mode == ColoringMode::Node {
        for (v, c) in g.colors.iter().enumerate() {
            let _ = writeln!(out, "nodecolor {v} {c}");
        }
    }
}

fn symbol_string(w: &[u8]) -> String {
    w.iter().map(|&x| char::from(b'0' + x)).collect()
}

/// Canonical text of `inst`; [`parse_instance`] inverts it exactly.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind {}", inst.kind());
    match inst {
        Instance::Walk(w) => {
            write_graph(&mut out, &w.graph);
            let _ = writeln!(out, "st {} {}", w.s, w.t);
            line(&mut out, "seq", &join(&w.seq));
        }
        Instance::AnyWalk(w) => {
            write_graph(&mut out, &w.graph);
            line(&mut out, "seq", &join(&w.seq));
        }
        Instance::Nfa(x) => {
            let mut nfa = x.nfa.clone();
            nfa.canonicalize();
            let _ = writeln!(out, "nfa n={} sigma={} q0={}", nfa.n_states, nfa.alphabet, nfa.q0);
            line(&mut out, "accept", &join(&nfa.accepting));
            for (q, a, r) in &nfa.transitions {
                let _ = writeln!(out, "trans {q} {a} {r}");
            }
            line(&mut out, "input", &join(&x.input));
        }
        Instance::Cfl(c) => {
            write_graph(&mut out, &c.graph);
            let _ = writeln!(out, "st {} {}", c.s, c.t);
            let mut g = c.grammar.clone();
            g.canonicalize();
            if g == Grammar::dyck2() {
                let _ = writeln!(out, "grammar dyck2");
            } else {
                let _ = writeln!(
                    out,
                    "grammar nonterminals={} terminals={} start={}",
                    g.nonterminals, g.terminals, g.start
                );
                for (x, a) in &g.unary {
                    let _ = writeln!(out, "unary {x} {a}");
                }
                for (x, y, z) in &g.binary {
                    let _ = writeln!(out, "binary {x} {y} {z}");
                }
            }
        }
        Instance::WordBreak(w) => {
            line(&mut out, "text", &symbol_string(&w.text));
            let mut dict = w.dictionary.clone();
            dict.sort();
            for word in &dict {
                line(&mut out, "word", &symbol_string(word));
            }
        }
        Instance::Omv(o) => {
            let _ = writeln!(out, "omv N={} rounds={}", o.dim(), o.rounds.len());
            for r in o.matrix.rows() {
                line(&mut out, "row", &r.to_bitstring());
            }
            for r in &o.rounds {
                line(&mut out, "round", &r.to_bitstring());
            }
        }
        Instance::Ov(o) => {
            let _ = writeln!(out, "ov d={}", o.d);
            for v in &o.a {
                line(&mut out, "a", &v.to_bitstring());
            }
            for v in &o.b {
                line(&mut out, "b", &v.to_bitstring());
            }
        }
        Instance::Clique(c) => {
            let _ = writeln!(out, "clique n={} k={}", c.n, c.k);
            let mut c = c.clone();
            c.canonicalize();
            for (u, v) in &c.edges {
                let _ = writeln!(out, "edge {u} {v}");
            }
        }
    }
    out
}
