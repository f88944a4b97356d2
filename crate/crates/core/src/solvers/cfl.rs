//! Single-pair CFL reachability by the classic worklist fixpoint.

use crate::bits::Bits;
use crate::instance::{dyck, CflInstance, Color};

/// Decides whether `(start, s, t)` is in the least relation closed under
///
/// * `(X, u, v)` for every edge `u -a-> v` and rule `X -> a`,
/// * `(X, u, w)` whenever `(Y, u, v)`, `(Z, v, w)` and `X -> Y Z`.
///
/// Facts are stored twice, as `out[X][u] ∋ v` and `inc[X][v] ∋ u`, so that a
/// new fact can be joined with both its right and its left partners.
pub fn cfl_reach_solve(inst: &CflInstance) -> bool {
    let n = inst.graph.n;
    let g = &inst.grammar;
    let nt = g.nonterminals;
    let mut facts = Facts {
        out: vec![vec![Bits::zeros(n); n]; nt],
        inc: vec![vec![Bits::zeros(n); n]; nt],
        work: Vec::new(),
    };

    let mut by_left: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nt];
    let mut by_right: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nt];
    for &(x, y, z) in &g.binary {
        by_left[y].push((x, z));
        by_right[z].push((x, y));
    }

    for (u, v, a) in inst.graph.arcs() {
        for &(x, b) in &g.unary {
            if a == b {
                add(&mut facts, x, u, v);
            }
        }
    }

    while let Some((y, u, v)) = facts.work.pop() {
        for &(x, z) in &by_left[y] {
            let right: Vec<usize> = facts.out[z][v].ones_iter().collect();
            for w in right {
                add(&mut facts, x, u, w);
            }
        }
        for &(x, l) in &by_right[y] {
            let left: Vec<usize> = facts.inc[l][u].ones_iter().collect();
            for w in left {
                add(&mut facts, x, w, v);
            }
        }
    }
    facts.out[g.start][inst.s].get(inst.t)
}

struct Facts {
    out: Vec<Vec<Bits>>,
    inc: Vec<Vec<Bits>>,
    work: Vec<(usize, usize, usize)>,
}

fn add(f: &mut Facts, x: usize, u: usize, v: usize) {
    if !f.out[x][u].get(v) {
        f.out[x][u].set(v, true);
        f.inc[x][v].set(u, true);
        f.work.push((x, u, v));
    }
}

/// Dyck-2 membership by a stack scan. The empty word is not a member.
pub fn dyck2_membership(word: &[Color]) -> bool {
    let mut stack = Vec::new();
    for &a in word {
        match a {
            dyck::OPEN1 | dyck::OPEN2 => stack.push(a),
            dyck::CLOSE1 | dyck::CLOSE2 => {
                if stack.pop() != Some(a - 1) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    !word.is_empty() && stack.is_empty()
}
