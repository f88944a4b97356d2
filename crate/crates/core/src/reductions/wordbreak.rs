//! Colored Walk → Word Break.

use crate::error::Result;
use crate::instance::{Instance, Variant, WalkInstance, WordBreakInstance};

use super::{require_two_colors, require_variant, walk, Promise, ReductionReport};

fn zeros(k: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(0, k)
}

/// With vertices renamed to `1..=n`, the text is
/// `0^s c₁ 0^n c₂ 0^n … c_ℓ 0^{n-t}` and the dictionary holds `0^u c 0^{n-v}`
/// for every edge `(u, v)` of color `c`. For `ℓ = 0` the text is empty when
/// `s = t` and `"0"` otherwise.
pub fn red_walk_to_wordbreak(inst: &WalkInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_walk_to_wordbreak";
    let g = &inst.graph;
    require_variant(g, Variant::DIR_EDGE, NAME)?;
    require_two_colors(g, NAME)?;
    let n = g.n;
    let (s, t) = (inst.s + 1, inst.t + 1);

    let text: Vec<u8> = if inst.seq.is_empty() {
        if s == t { vec![] } else { vec![0] }
    } else {
        let mut text: Vec<u8> = zeros(s).collect();
        for (i, &c) in inst.seq.iter().enumerate() {
            if i > 0 {
                text.extend(zeros(n));
            }
            text.push(c as u8);
        }
        text.extend(zeros(n - t));
        text
    };
    let mut out = WordBreakInstance {
        text,
        dictionary: g
            .colored_edges()
            .map(|(u, v, c)| {
                let (u, v) = (u + 1, v + 1);
                zeros(u).chain([c as u8]).chain(zeros(n - v)).collect()
            })
            .collect(),
    };
    out.canonicalize();

    let input = walk(inst.clone());
    let p = input.params();
    let big_n = match p.l {
        0 => usize::from(s != t),
        l => l * (n + 1) + s - t,
    };
    // Σ (n + 1 + u - v) over edges, kept in signed arithmetic
    let drift: i64 = g.edges.iter().map(|&(u, v)| u as i64 - v as i64).sum();
    let big_m = (p.m as i64 * (n as i64 + 1) + drift) as usize;
    let promise = Promise::exact(
        big_n,
        big_m,
        p.m,
        "N=l(n+1)+s-t M=m(n+1)+sum(u-v) |D|=m",
    );
    Ok(ReductionReport::new(NAME, &input, Instance::WordBreak(out), promise))
}
