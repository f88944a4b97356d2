//! Orthogonal Vectors → sparse NFA.

use crate::error::{precondition, Result};
use crate::instance::{Color, Instance, Nfa, NfaInstance, OvInstance};

use super::{Promise, ReductionReport};

/// Encoding of the ternary symbols `0, 1, 2` as NFA symbols `1, 2, 3`.
fn sym(x: u8) -> Color {
    Color::from(x) + 1
}

/// State `q^(i)_k` of the chain for `a_i`; `s = 0`, `t = 1`.
pub fn chain_state(i: usize, k: usize, d: usize) -> usize {
    2 + i * (d + 1) + k
}

/// One chain `q^(i)_0 → … → q^(i)_d` per `a_i`: step `k` reads `0` always and
/// `1` iff `a_i[k] = 0`. `s` and `t` loop on every symbol, `s -2-> q^(i)_0`,
/// `q^(i)_d -2-> t`, and the input is `2 b₁ 2 b₂ 2 … b_|B| 2`.
pub fn red_ov_to_nfa(inst: &OvInstance) -> Result<ReductionReport> {
    const NAME: &str = "red_ov_to_nfa";
    let d = inst.d;
    if d == 0 {
        return precondition(format!("{NAME} needs d >= 1"));
    }
    let (s, t) = (0, 1);
    let mut transitions = Vec::new();
    for x in 0..3 {
        transitions.push((s, sym(x), s));
        transitions.push((t, sym(x), t));
    }
    for (i, a) in inst.a.iter().enumerate() {
        let q = |k| chain_state(i, k, d);
        transitions.push((s, sym(2), q(0)));
        transitions.push((q(d), sym(2), t));
        for k in 1..=d {
            transitions.push((q(k - 1), sym(0), q(k)));
            if !a.get(k - 1) {
                transitions.push((q(k - 1), sym(1), q(k)));
            }
        }
    }
    let mut input = vec![sym(2)];
    for b in &inst.b {
        input.extend((0..d).map(|k| sym(u8::from(b.get(k)))));
        input.push(sym(2));
    }
    let mut nfa = Nfa {
        n_states: 2 + inst.a.len() * (d + 1),
        alphabet: 3,
        transitions,
        q0: s,
        accepting: vec![t],
    };
    nfa.canonicalize();

    let zeros: usize = inst.a.iter().map(|a| d - a.count_ones()).sum();
    let promise = Promise::exact(
        2 + inst.a.len() * (d + 1),
        6 + inst.a.len() * (d + 2) + zeros,
        1 + inst.b.len() * (d + 1),
        "n'=2+|A|(d+1) m'=6+sum_i(d+2+zeros(a_i)) l'=1+|B|(d+1)",
    );
    let input_inst = Instance::Ov(inst.clone());
    let out = Instance::Nfa(NfaInstance { nfa, input });
    Ok(ReductionReport::new(NAME, &input_inst, out, promise))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;
    use crate::solvers::solve_nfa;

    fn ov(a: &[&str], b: &[&str]) -> OvInstance {
        let v = |s: &[&str]| s.iter().map(|x| Bits::from_bitstring(x).unwrap()).collect();
        OvInstance {
            d: a.first().or(b.first()).map_or(1, |x| x.len()),
            a: v(a),
            b: v(b),
        }
    }

    fn accepts(r: &ReductionReport) -> bool {
        let Instance::Nfa(x) = r.output() else { panic!() };
        solve_nfa(x)
    }

    #[test]
    fn one_dimensional_cases() {
        assert!(accepts(&red_ov_to_nfa(&ov(&["0"], &["1"])).unwrap()));
        assert!(!accepts(&red_ov_to_nfa(&ov(&["1"], &["1"])).unwrap()));
    }

    #[test]
    fn sizes_match_closed_forms() {
        let r = red_ov_to_nfa(&ov(&["10", "11"], &["01", "10", "11"])).unwrap();
        assert!(r.violations().is_empty(), "{:?}", r.violations());
        assert!(accepts(&r));
    }

    #[test]
    fn zero_dimension_is_rejected() {
        let inst = OvInstance { d: 0, a: vec![], b: vec![] };
        assert!(red_ov_to_nfa(&inst).is_err());
    }
}
