use crate::bits::Bits;
use crate::instance::{Color, Nfa, NfaInstance};

use super::walk::StepTable;

/// Subset simulation in `O(|δ| · |x|)`.
pub fn nfa_accepts(nfa: &Nfa, input: &[Color]) -> bool {
    let table = StepTable::from_arcs(
        nfa.n_states,
        nfa.alphabet,
        nfa.transitions.iter().map(|&(q, a, r)| (q, r, a)),
    );
    let last = table.run(Bits::indicator(nfa.n_states, nfa.q0), input);
    nfa.accepting.iter().any(|&f| last.get(f))
}

pub fn solve_nfa(inst: &NfaInstance) -> bool {
    nfa_accepts(&inst.nfa, &inst.input)
}
