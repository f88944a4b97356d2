//! Frontier certificates for Directed 2-Edge Colored Walk and their batched
//! verification.
//!
//! A certificate lists `x_0..x_ℓ` together with a claimed answer. It is valid
//! iff `x_0 = e_s`, `x_i = A_{c_i}ᵀ x_{i-1}` for every step, and the claim
//! equals `x_ℓ[t]`. The step equations are checked per color as one matrix
//! identity `X_c = A_cᵀ X'_c`, split into column blocks of width at most `n`.

use std::fmt::Write as _;

use crate::bits::{Bits, BoolMatrix};
use crate::error::{precondition, Error, Result};
use crate::instance::{Color, Variant, WalkInstance};
use crate::solvers::walk_frontiers;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub xs: Vec<Bits>,
    pub claim: bool,
}

fn require_two_color_dir_edge(inst: &WalkInstance) -> Result<()> {
    let g = &inst.graph;
    if g.variant() != Variant::DIR_EDGE || g.num_colors > 2 {
        return precondition(format!(
            "certificates need a dir-edge graph with C <= 2, got {} with C={}",
            g.variant(),
            g.num_colors
        ));
    }
    Ok(())
}

/// The honest certificate, computed by the forward DP.
pub fn build_certificate(inst: &WalkInstance) -> Result<Certificate> {
    require_two_color_dir_edge(inst)?;
    let xs = walk_frontiers(inst);
    let claim = xs.last().expect("x_0 is always present").get(inst.t);
    Ok(Certificate { xs, claim })
}

fn check_dimensions(inst: &WalkInstance, cert: &Certificate) -> Result<()> {
    require_two_color_dir_edge(inst)?;
    let (n, l) = (inst.graph.n, inst.l());
    if cert.xs.len() != l + 1 {
        return Err(Error::Dimension(format!(
            "certificate has {} vectors, expected l+1 = {}",
            cert.xs.len(),
            l + 1
        )));
    }
    if let Some(i) = cert.xs.iter().position(|x| x.len() != n) {
        return Err(Error::Dimension(format!(
            "x_{i} has length {}, expected n = {n}",
            cert.xs[i].len()
        )));
    }
    Ok(())
}

fn endpoints_hold(inst: &WalkInstance, cert: &Certificate) -> bool {
    cert.xs[0] == Bits::indicator(inst.graph.n, inst.s) && cert.xs[inst.l()].get(inst.t) == cert.claim
}

/// `A_cᵀ`: row `v` marks the `u` with an edge `(u, v)` of color `c`.
fn transposed_adjacency(inst: &WalkInstance, c: Color) -> BoolMatrix {
    let n = inst.graph.n;
    let mut at = BoolMatrix::zeros(n, n);
    for (u, v, col) in inst.graph.colored_edges() {
        if col == c {
            at.set(v, u, true);
        }
    }
    at
}

/// Matrix whose columns are the given vectors.
fn columns(vectors: impl Iterator<Item = Bits>, n: usize) -> BoolMatrix {
    BoolMatrix::from_rows(vectors.collect(), n).transpose()
}

/// Checks `X_c = A_cᵀ X'_c` for one color, `n` columns at a time.
fn color_batch_holds(inst: &WalkInstance, cert: &Certificate, c: Color) -> bool {
    let n = inst.graph.n;
    let steps: Vec<usize> = (1..=inst.l()).filter(|&i| inst.seq[i - 1] == c).collect();
    if steps.is_empty() {
        return true;
    }
    let at = transposed_adjacency(inst, c);
    steps.chunks(n.max(1)).all(|block| {
        let x = columns(block.iter().map(|&i| cert.xs[i].clone()), n);
        let x_prev = columns(block.iter().map(|&i| cert.xs[i - 1].clone()), n);
        at.mul(&x_prev) == x
    })
}

/// Batched verification. `Ok(true)` iff the certificate equals the honest one.
pub fn verify_certificate(inst: &WalkInstance, cert: &Certificate) -> Result<bool> {
    check_dimensions(inst, cert)?;
    if !endpoints_hold(inst, cert) {
        return Ok(false);
    }
    let (ok1, ok2) = rayon::join(
        || color_batch_holds(inst, cert, 1),
        || color_batch_holds(inst, cert, 2),
    );
    Ok(ok1 && ok2)
}

/// Step-by-step verification: `x_i = A_{c_i}ᵀ x_{i-1}` one product at a time.
pub fn verify_certificate_stepwise(inst: &WalkInstance, cert: &Certificate) -> Result<bool> {
    check_dimensions(inst, cert)?;
    if !endpoints_hold(inst, cert) {
        return Ok(false);
    }
    let at = [transposed_adjacency(inst, 1), transposed_adjacency(inst, 2)];
    Ok((1..=inst.l()).all(|i| {
        let c = inst.seq[i - 1] as usize;
        at[c - 1].mul_vec(&cert.xs[i - 1]) == cert.xs[i]
    }))
}

impl Certificate {
    /// `certificate n=<n> l=<l> claim=<0|1>` followed by one bitstring per
    /// vector.
    pub fn to_text(&self) -> String {
        let n = self.xs.first().map_or(0, Bits::len);
        let mut s = format!(
            "certificate n={n} l={} claim={}\n",
            self.xs.len().saturating_sub(1),
            u8::from(self.claim)
        );
        for x in &self.xs {
            let _ = writeln!(s, "{}", x.to_bitstring());
        }
        s
    }

    pub fn parse(text: &str) -> Result<Certificate> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line, message: String| Error::Parse { line, message };
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty certificate".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "certificate" {
            return Err(err(hl, format!("expected `certificate n= l= claim=`, got {header:?}")));
        }
        let field = |i: usize, key: &str| -> Result<usize> {
            fields[i]
                .strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| err(hl, format!("bad field {:?}, expected {key}<int>", fields[i])))
        };
        let (n, l, claim) = (field(1, "n=")?, field(2, "l=")?, field(3, "claim=")?);
        if claim > 1 {
            return Err(err(hl, format!("claim must be 0 or 1, got {claim}")));
        }
        let mut xs = Vec::with_capacity(l + 1);
        for (ln, line) in lines {
            let x = Bits::from_bitstring(line)
                .ok_or_else(|| err(ln, format!("not a bitstring: {line:?}")))?;
            if x.len() != n {
                return Err(err(ln, format!("bitstring length {} differs from n={n}", x.len())));
            }
            xs.push(x);
        }
        if xs.len() != l + 1 {
            return Err(err(hl, format!("expected {} vectors, found {}", l + 1, xs.len())));
        }
        Ok(Certificate { xs, claim: claim == 1 })
    }
}
