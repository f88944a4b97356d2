//! Matrix-product baselines: the left-to-right chain `A^(c_1) ⋯ A^(c_l)` and
//! repeated squaring for single-color sequences.

use crate::bits::BoolMatrix;
use crate::error::{precondition, Result};
use crate::instance::{Color, WalkInstance};

/// Boolean product of the per-color adjacency matrices along `seq`, starting
/// from the identity.
pub fn walk_matrix_chain(inst: &WalkInstance) -> BoolMatrix {
    let g = &inst.graph;
    let mats: Vec<BoolMatrix> = (1..=g.num_colors).map(|c| g.color_matrix(c)).collect();
    let mut p = BoolMatrix::identity(g.n);
    for &c in &inst.seq {
        p = match mats.get(c as usize - 1) {
            Some(a) => p.mul(a),
            None => BoolMatrix::zeros(g.n, g.n),
        };
    }
    p
}

/// Entry `(s, t)` of the chain product. Works for every variant since the
/// per-color matrices come from the traversable arcs.
pub fn solve_walk_matrix_chain(inst: &WalkInstance) -> bool {
    walk_matrix_chain(inst).get(inst.s, inst.t)
}

/// `A^l` by repeated squaring; requires all sequence entries to be equal.
pub fn solve_uniform_color_power(inst: &WalkInstance) -> Result<bool> {
    let Some(&c) = inst.seq.first() else {
        return Ok(inst.s == inst.t);
    };
    if let Some(i) = inst.seq.iter().position(|&x| x != c) {
        return precondition(format!(
            "sequence is not uniform: seq[{i}]={} differs from seq[0]={c}",
            inst.seq[i]
        ));
    }
    Ok(matrix_power(&inst.graph.color_matrix(c), inst.seq.len()).get(inst.s, inst.t))
}

pub fn matrix_power(a: &BoolMatrix, mut e: usize) -> BoolMatrix {
    let mut result = BoolMatrix::identity(a.n_rows());
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// Color of a uniform sequence, if it is one.
pub fn uniform_color(seq: &[Color]) -> Option<Color> {
    let c = *seq.first()?;
    seq.iter().all(|&x| x == c).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::ColoredGraph;

    fn cycle(l: usize) -> WalkInstance {
        WalkInstance {
            graph: ColoredGraph::edge_colored(true, 3, 1, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]),
            s: 0,
            t: 0,
            seq: vec![1; l],
        }
    }

    #[test]
    fn cycle_powers() {
        assert!(solve_uniform_color_power(&cycle(3)).unwrap());
        assert!(!solve_uniform_color_power(&cycle(4)).unwrap());
        assert!(solve_uniform_color_power(&cycle(0)).unwrap());
        assert!(solve_walk_matrix_chain(&cycle(6)));
    }

    #[test]
    fn non_uniform_sequence_is_rejected() {
        let mut w = cycle(2);
        w.graph.num_colors = 2;
        w.seq = vec![1, 2];
        assert!(solve_uniform_color_power(&w).is_err());
    }

    #[test]
    fn empty_chain_is_identity() {
        let mut w = cycle(0);
        w.t = 1;
        assert!(!solve_walk_matrix_chain(&w));
        assert_eq!(walk_matrix_chain(&w), BoolMatrix::identity(3));
    }
}
