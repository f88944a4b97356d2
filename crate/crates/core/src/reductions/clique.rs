//! k-Clique → dense NFA via clique gadgets over binary node IDs.

use crate::bits::Bits;
use crate::error::{precondition, Result};
use crate::instance::{CliqueInstance, Color, Instance, Nfa, NfaInstance, Vertex};
use crate::solvers::list_cliques;

use super::{ceil_log2, Promise, ReductionReport};

const START: usize = 0;
const ACCEPT: usize = 1;

/// Encoding of the symbols `0, 1, 2, 3` as NFA symbols `1..=4`.
fn sym(x: u8) -> Color {
    Color::from(x) + 1
}

/// Width of node IDs: `⌈log₂ n⌉` bits, at least one.
pub fn id_bits(n: usize) -> usize {
    ceil_log2(n).max(1)
}

/// Node ID of `v`, most significant bit first, as NFA symbols.
pub fn node_id(v: Vertex, bits: usize) -> Vec<Color> {
    (0..bits).rev().map(|i| sym(((v >> i) & 1) as u8)).collect()
}

struct Builder {
    n_states: usize,
    transitions: Vec<(usize, Color, usize)>,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.n_states += 1;
        self.n_states - 1
    }

    /// `N(u)` from `from` to `to`: one parallel path per neighbor ID.
    fn neighbor_check(&mut self, from: usize, to: usize, neighbors: &[Vec<Color>]) {
        for id in neighbors {
            let mut q = from;
            for (i, &a) in id.iter().enumerate() {
                let r = if i + 1 == id.len() { to } else { self.fresh() };
                self.transitions.push((q, a, r));
                q = r;
            }
        }
    }

    /// `CG(U)`: `k'` serial repetitions of `N(u₁) … N(u_k)`; returns the
    /// start and accepting state.
    fn clique_gadget(&mut self, ids: &[Vec<Vec<Color>>], clique: &[Vertex], k_prime: usize) -> (usize, usize) {
        let start = self.fresh();
        let mut q = start;
        for _ in 0..k_prime {
            for &u in clique {
                let next = self.fresh();
                self.neighbor_check(q, next, &ids[u]);
                q = next;
            }
        }
        (start, q)
    }
}

/// Builds the NFA and string deciding `(2k + k')`-Clique. States `0` and `1`
/// are the looping start and accept states; gadgets `CG(U)` for every
/// `k`-clique `U` follow in lexicographic order, then the copies `CG'(U)`.
pub fn red_clique_to_nfa(inst: &CliqueInstance, k: usize, k_prime: usize) -> Result<ReductionReport> {
    const NAME: &str = "red_clique_to_nfa";
    if k == 0 || k_prime == 0 {
        return precondition(format!("{NAME} needs k, k' >= 1"));
    }
    if inst.k != 2 * k + k_prime {
        return precondition(format!(
            "{NAME}: clique size {} differs from 2k+k' = {}",
            inst.k,
            2 * k + k_prime
        ));
    }
    let b = id_bits(inst.n);
    let suffix_cliques = list_cliques(inst, k_prime)?;
    let mut builder = Builder {
        n_states: 2,
        transitions: (0..4)
            .flat_map(|x| [(START, sym(x), START), (ACCEPT, sym(x), ACCEPT)])
            .collect(),
    };

    let mut input = vec![sym(2)];
    let gadget_cliques = if suffix_cliques.is_empty() {
        Vec::new()
    } else {
        for vs in &suffix_cliques {
            let block: Vec<Color> = vs
                .iter()
                .flat_map(|&v| node_id(v, b).repeat(k))
                .collect();
            input.extend(&block);
            input.push(sym(3));
            input.extend(&block);
            input.push(sym(2));
        }
        list_cliques(inst, k)?
    };

    let adj = inst.adjacency();
    let ids: Vec<Vec<Vec<Color>>> = adj
        .iter()
        .map(|row| row.ones_iter().map(|v| node_id(v, b)).collect())
        .collect();
    let cg: Vec<_> = gadget_cliques
        .iter()
        .map(|u| builder.clique_gadget(&ids, u, k_prime))
        .collect();
    let cg_prime: Vec<_> = gadget_cliques
        .iter()
        .map(|u| builder.clique_gadget(&ids, u, k_prime))
        .collect();
    for (&(start, _), &(_, end)) in cg.iter().zip(&cg_prime) {
        builder.transitions.push((START, sym(2), start));
        builder.transitions.push((end, sym(2), ACCEPT));
    }
    for (i, u) in gadget_cliques.iter().enumerate() {
        for (j, w) in gadget_cliques.iter().enumerate() {
            if forms_clique(&adj, u, w) {
                builder.transitions.push((cg[i].1, sym(3), cg_prime[j].0));
            }
        }
    }

    let mut nfa = Nfa {
        n_states: builder.n_states,
        alphabet: 4,
        transitions: builder.transitions,
        q0: START,
        accepting: vec![ACCEPT],
    };
    nfa.canonicalize();
    let promise = clique_promise(inst, k, k_prime)?;
    let input_inst = Instance::Clique(inst.clone());
    let out = Instance::Nfa(NfaInstance { nfa, input });
    Ok(ReductionReport::new(NAME, &input_inst, out, promise))
}

/// `U ∪ W` is a `2k`-clique: disjoint and every cross pair adjacent.
fn forms_clique(adj: &[Bits], u: &[Vertex], w: &[Vertex]) -> bool {
    u.iter().all(|&a| w.iter().all(|&c| adj[a].get(c)))
}

/// Closed-form sizes, evaluated from clique counts and degrees.
fn clique_promise(inst: &CliqueInstance, k: usize, k_prime: usize) -> Result<Promise> {
    let b = id_bits(inst.n);
    let ck_prime = list_cliques(inst, k_prime)?.len();
    if ck_prime == 0 {
        return Ok(Promise::exact(2, 8, 1, "C(k') empty: n'=2 m'=8 l'=1"));
    }
    let ck = list_cliques(inst, k)?;
    let mut deg = vec![0usize; inst.n];
    for &(u, v) in &inst.edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let deg_sum: usize = ck.iter().map(|u| u.iter().map(|&x| deg[x]).sum::<usize>()).sum();
    let edge_set: std::collections::HashSet<_> = inst.edges.iter().copied().collect();
    let adjacent = |a: Vertex, c: Vertex| edge_set.contains(&(a.min(c), a.max(c)));
    let bridges = ck
        .iter()
        .flat_map(|u| ck.iter().map(move |w| (u, w)))
        .filter(|(u, w)| u.iter().all(|&a| w.iter().all(|&c| adjacent(a, c))))
        .count();
    let n = 2 + 2 * (ck.len() * (k_prime * k + 1) + k_prime * deg_sum * (b - 1));
    let m = 8 + 2 * ck.len() + bridges + 2 * k_prime * deg_sum * b;
    let l = 1 + ck_prime * (2 * k_prime * k * b + 2);
    Ok(Promise::exact(
        n,
        m,
        l,
        format!(
            "b={b} |C(k)|={} |C(k')|={ck_prime} bridges={bridges} n'=2+2(|C(k)|(k'k+1)+k'(b-1)deg) \
             m'=8+2|C(k)|+bridges+2k'b*deg l'=1+|C(k')|(2k'kb+2)",
            ck.len()
        ),
    ))
}
