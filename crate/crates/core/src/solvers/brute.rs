//! Exponential oracles. None of these share code with the polynomial solvers:
//! adjacency is rebuilt here from the raw edge and color lists.

use crate::error::{Error, Result};
use crate::instance::{
    AnyWalkInstance, CliqueInstance, Color, ColoredGraph, ColoringMode, Nfa, OvInstance, Vertex,
    WalkInstance,
};

/// Maximum number of search-tree nodes an enumeration may visit.
pub const ENUM_BUDGET: u64 = 1 << 26;

/// Maximum number of k-subsets the clique oracle may consider.
pub const CLIQUE_BUDGET: u64 = 100_000_000;

/// Neighbor lists `(w, observed color)`, expanded by hand from the edge list.
fn neighbor_lists(g: &ColoredGraph) -> Vec<Vec<(Vertex, Color)>> {
    let mut adj = vec![Vec::new(); g.n];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        let (into_v, into_u) = match g.mode {
            ColoringMode::Edge => (g.colors[i], g.colors[i]),
            ColoringMode::Node => (g.colors[v], g.colors[u]),
        };
        adj[u].push((v, into_v));
        if !g.directed {
            adj[v].push((u, into_u));
        }
    }
    adj
}

struct Search<'a> {
    adj: &'a [Vec<(Vertex, Color)>],
    seq: &'a [Color],
    visited: u64,
}

impl Search<'_> {
    /// Depth-first search over walks; `accept` is tested on the final vertex.
    fn walk(&mut self, v: Vertex, depth: usize, accept: &dyn Fn(Vertex) -> bool) -> Result<bool> {
        self.visited += 1;
        if self.visited > ENUM_BUDGET {
            return Err(Error::TooLarge(format!(
                "walk enumeration exceeded {ENUM_BUDGET} search nodes"
            )));
        }
        if depth == self.seq.len() {
            return Ok(accept(v));
        }
        let want = self.seq[depth];
        for &(w, c) in &self.adj[v] {
            if c == want && self.walk(w, depth + 1, accept)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Enumerates all walks of length `l` from `s` and checks colors and endpoint.
pub fn walk_enum_oracle(inst: &WalkInstance) -> Result<bool> {
    let adj = neighbor_lists(&inst.graph);
    let mut search = Search {
        adj: &adj,
        seq: &inst.seq,
        visited: 0,
    };
    let t = inst.t;
    search.walk(inst.s, 0, &|v| v == t)
}

/// AnyWalk by enumeration from every start vertex.
pub fn anywalk_enum_oracle(inst: &AnyWalkInstance) -> Result<bool> {
    let adj = neighbor_lists(&inst.graph);
    let mut search = Search {
        adj: &adj,
        seq: &inst.seq,
        visited: 0,
    };
    for s in 0..inst.graph.n {
        if search.walk(s, 0, &|_| true)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every walk of length `seq.len()` from `start` whose observed colors equal
/// `seq`, as vertex lists (used to check gadget forcing).
pub fn matching_walks(g: &ColoredGraph, start: Vertex, seq: &[Color]) -> Result<Vec<Vec<Vertex>>> {
    fn go(
        adj: &[Vec<(Vertex, Color)>],
        seq: &[Color],
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
        visited: &mut u64,
    ) -> Result<()> {
        *visited += 1;
        if *visited > ENUM_BUDGET {
            return Err(Error::TooLarge("walk listing exceeded budget".into()));
        }
        let depth = path.len() - 1;
        if depth == seq.len() {
            out.push(path.clone());
            return Ok(());
        }
        let v = *path.last().expect("path starts nonempty");
        for &(w, c) in &adj[v] {
            if c == seq[depth] {
                path.push(w);
                go(adj, seq, path, out, visited)?;
                path.pop();
            }
        }
        Ok(())
    }
    let adj = neighbor_lists(g);
    let mut out = Vec::new();
    go(&adj, seq, &mut vec![start], &mut out, &mut 0)?;
    Ok(out)
}

/// Enumerates NFA runs depth-first.
pub fn nfa_enum_oracle(nfa: &Nfa, input: &[Color]) -> Result<bool> {
    let mut delta = vec![Vec::new(); nfa.n_states];
    for &(q, a, r) in &nfa.transitions {
        delta[q].push((r, a));
    }
    let mut search = Search {
        adj: &delta,
        seq: input,
        visited: 0,
    };
    let accepting = &nfa.accepting;
    search.walk(nfa.q0, 0, &|q| accepting.contains(&q))
}

/// True iff some `a ∈ A`, `b ∈ B` have disjoint supports. `O(|A| |B| d)`.
pub fn ov_bruteforce(inst: &OvInstance) -> bool {
    inst.a.iter().any(|a| {
        inst.b
            .iter()
            .any(|b| (0..inst.d).all(|k| !(a.get(k) && b.get(k))))
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// True iff the graph has `k` pairwise adjacent vertices. Enumerates
/// increasing vertex tuples, pruning on the first non-adjacent pair.
pub fn clique_bruteforce(inst: &CliqueInstance) -> Result<bool> {
    let (n, k) = (inst.n, inst.k);
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let subsets = binomial(n, k);
    if subsets > CLIQUE_BUDGET {
        return Err(Error::TooLarge(format!(
            "C({n},{k}) = {subsets} subsets exceed the guard {CLIQUE_BUDGET}"
        )));
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in &inst.edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    fn extend(adj: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, k: usize) -> bool {
        if chosen.len() == k {
            return true;
        }
        for v in from..adj.len() {
            if chosen.iter().all(|&u| adj[u][v]) {
                chosen.push(v);
                if extend(adj, chosen, v + 1, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(extend(&adj, &mut Vec::with_capacity(k), 0, k))
}

/// All `k`-cliques as sorted vertex lists, in lexicographic order.
pub fn list_cliques(inst: &CliqueInstance, k: usize) -> Result<Vec<Vec<Vertex>>> {
    let n = inst.n;
    let subsets = binomial(n, k);
    if subsets > CLIQUE_BUDGET {
        return Err(Error::TooLarge(format!(
            "C({n},{k}) = {subsets} subsets exceed the guard {CLIQUE_BUDGET}"
        )));
    }
    let adj = inst.adjacency();
    fn extend(
        adj: &[crate::bits::Bits],
        chosen: &mut Vec<usize>,
        from: usize,
        k: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for v in from..adj.len() {
            if chosen.iter().all(|&u| adj[u].get(v)) {
                chosen.push(v);
                extend(adj, chosen, v + 1, k, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&adj, &mut Vec::new(), 0, k, &mut out);
    Ok(out)
}
