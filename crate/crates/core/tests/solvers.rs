use proptest::prelude::*;

use rwlab::gen::{random_nfa, random_small_anywalk, random_small_walk, rng};
use rwlab::solvers::{
    anywalk_enum_oracle, cfl_reach_solve, clique_bruteforce, dyck2_membership, nfa_accepts,
    nfa_enum_oracle, ov_bruteforce, solve_anywalk, solve_omv, solve_uniform_color_power,
    solve_walk_dp, solve_walk_matrix_chain, walk_enum_oracle, walk_frontiers, word_break_solve,
    OmvEngine, StepTable,
};
use rwlab::{
    AnyWalkInstance, Bits, BoolMatrix, CflInstance, CliqueInstance, Color, ColoredGraph, Error,
    Grammar, Nfa, OmvInstance, OvInstance, Variant, WalkInstance, WordBreakInstance,
};

fn i0(seq: Vec<Color>) -> WalkInstance {
    WalkInstance {
        graph: ColoredGraph::edge_colored(true, 3, 2, [(0, 1, 1), (1, 2, 2), (0, 2, 2)]),
        s: 0,
        t: 2,
        seq,
    }
}

#[test]
fn i0_walks() {
    assert!(walk_enum_oracle(&i0(vec![1, 2])).unwrap());
    assert!(solve_walk_dp(&i0(vec![1, 2])));
    assert!(!walk_enum_oracle(&i0(vec![2, 2])).unwrap());
    assert!(!solve_walk_dp(&i0(vec![2, 2])));
}

#[test]
fn empty_walks() {
    let mut w = i0(vec![]);
    assert!(!solve_walk_dp(&w));
    w.t = 0;
    assert!(solve_walk_dp(&w));
}

#[test]
fn anywalk_examples() {
    let g = i0(vec![]).graph;
    let any = |seq: Vec<Color>| AnyWalkInstance { graph: g.clone(), seq };
    assert!(solve_anywalk(&any(vec![2])));
    assert!(!solve_anywalk(&any(vec![1, 1])));
    assert!(!anywalk_enum_oracle(&any(vec![1, 1])).unwrap());
    assert!(solve_anywalk(&any(vec![])));
}

fn two_state() -> Nfa {
    Nfa {
        n_states: 2,
        alphabet: 2,
        transitions: vec![(0, 1, 1), (1, 2, 0)],
        q0: 0,
        accepting: vec![0],
    }
}

#[test]
fn nfa_examples() {
    let m = two_state();
    assert!(nfa_accepts(&m, &[]));
    assert!(nfa_accepts(&m, &[1, 2, 1, 2]));
    assert!(nfa_enum_oracle(&m, &[1, 2, 1, 2]).unwrap());
    assert!(!nfa_accepts(&m, &[1, 1]));
    assert!(!nfa_enum_oracle(&m, &[1, 1]).unwrap());
}

#[test]
fn matrix_chain_matches_dp_on_200_seeds() {
    assert!(solve_walk_matrix_chain(&i0(vec![1, 2])));
    for seed in 0..200 {
        let w = random_small_walk(seed, 8, 8, 2, Variant::DIR_EDGE);
        assert_eq!(solve_walk_matrix_chain(&w), solve_walk_dp(&w), "seed {seed}");
    }
}

#[test]
fn uniform_power_matches_dp_on_100_seeds() {
    for seed in 0..100 {
        let w = random_small_walk(seed, 8, 12, 1, Variant::ALL[(seed % 4) as usize]);
        assert_eq!(solve_uniform_color_power(&w).unwrap(), solve_walk_dp(&w), "seed {seed}");
    }
}

#[test]
fn uniform_power_rejects_mixed_sequences() {
    assert!(matches!(solve_uniform_color_power(&i0(vec![1, 2])), Err(Error::Precondition(_))));
}

fn path_cfl(word: &[Color]) -> CflInstance {
    let edges: Vec<_> = word.iter().enumerate().map(|(i, &a)| (i, i + 1, a)).collect();
    CflInstance {
        graph: ColoredGraph::edge_colored(true, word.len() + 1, 4, edges),
        s: 0,
        t: word.len(),
        grammar: Grammar::dyck2(),
    }
}

#[test]
fn cfl_examples() {
    let pair = CflInstance {
        graph: ColoredGraph::edge_colored(true, 2, 4, [(0, 1, 1), (1, 0, 2)]),
        s: 0,
        t: 0,
        grammar: Grammar::dyck2(),
    };
    assert!(cfl_reach_solve(&pair));
    let lone = CflInstance {
        graph: ColoredGraph::edge_colored(true, 2, 4, [(0, 1, 1)]),
        s: 0,
        t: 1,
        grammar: Grammar::dyck2(),
    };
    assert!(!cfl_reach_solve(&lone));
}

#[test]
fn dyck_path_agreement_on_100_words() {
    use rand::Rng;
    let mut r = rng(11);
    for _ in 0..100 {
        let len = r.gen_range(1..=10);
        // even lengths with a bias toward matched pairs so both answers occur
        let word: Vec<Color> = if r.gen_bool(0.5) {
            let mut stack = Vec::new();
            let mut w = Vec::new();
            for _ in 0..len {
                if !stack.is_empty() && r.gen_bool(0.5) {
                    let o: Color = stack.pop().unwrap();
                    w.push(o + 1);
                } else {
                    let o = if r.gen_bool(0.5) { 1 } else { 3 };
                    stack.push(o);
                    w.push(o);
                }
            }
            while let Some(o) = stack.pop() {
                w.push(o + 1);
            }
            w
        } else {
            (0..len).map(|_| r.gen_range(1..=4)).collect()
        };
        assert_eq!(cfl_reach_solve(&path_cfl(&word)), dyck2_membership(&word), "{word:?}");
    }
}

#[test]
fn word_break_examples() {
    let wb = |text: Vec<u8>, dict: Vec<Vec<u8>>| WordBreakInstance { text, dictionary: dict };
    assert!(word_break_solve(&wb(vec![0, 1, 2, 0], vec![vec![0, 1], vec![2, 0]])));
    assert!(!word_break_solve(&wb(vec![0], vec![vec![0, 0]])));
}

#[test]
fn omv_examples() {
    let mut id = OmvEngine::new(BoolMatrix::identity(4)).unwrap();
    let v = Bits::from_bitstring("1010").unwrap();
    assert_eq!(id.round(&v).unwrap(), v);
    let mut zero = OmvEngine::new(BoolMatrix::zeros(4, 4)).unwrap();
    assert!(!zero.round(&v).unwrap().any());
}

#[test]
fn omv_rounds_against_independent_products() {
    use rand::Rng;
    let mut r = rng(8);
    let cells: Vec<Vec<bool>> = (0..8).map(|_| (0..8).map(|_| r.gen_bool(0.4)).collect()).collect();
    let rows = cells.iter().map(|row| Bits::from_bools(row)).collect();
    let vs: Vec<Vec<bool>> = (0..8).map(|_| (0..8).map(|_| r.gen_bool(0.4)).collect()).collect();
    let inst = OmvInstance {
        matrix: BoolMatrix::from_rows(rows, 8),
        rounds: vs.iter().map(|v| Bits::from_bools(v)).collect(),
    };
    let answers = solve_omv(&inst).unwrap();
    for (v, ans) in vs.iter().zip(&answers) {
        let want: Vec<bool> = (0..8).map(|i| (0..8).any(|j| cells[i][j] && v[j])).collect();
        assert_eq!(ans.to_bools(), want);
    }
    let mut e = OmvEngine::new(inst.matrix.clone()).unwrap();
    for v in &inst.rounds {
        e.round(v).unwrap();
    }
    assert!(matches!(e.round(&inst.rounds[0]), Err(Error::RoundsExhausted(8))));
}

#[test]
fn ov_examples() {
    let b = |s: &str| Bits::from_bitstring(s).unwrap();
    assert!(ov_bruteforce(&OvInstance { d: 2, a: vec![b("10")], b: vec![b("01")] }));
    assert!(!ov_bruteforce(&OvInstance { d: 2, a: vec![b("11")], b: vec![b("10"), b("01")] }));
    assert!(ov_bruteforce(&OvInstance { d: 2, a: vec![b("00")], b: vec![b("11")] }));
}

#[test]
fn clique_examples() {
    assert!(clique_bruteforce(&CliqueInstance::new(3, [(0, 1), (1, 2), (0, 2)], 3)).unwrap());
    assert!(!clique_bruteforce(&CliqueInstance::new(3, [(0, 1), (1, 2)], 3)).unwrap());
    assert!(clique_bruteforce(&CliqueInstance::new(4, [], 1)).unwrap());
}

#[test]
fn oracle_guard_trips() {
    let edges: Vec<_> = (0..8).flat_map(|u| (0..8).filter(move |&v| v != u).map(move |v| (u, v, 1))).collect();
    let w = WalkInstance {
        graph: ColoredGraph::edge_colored(true, 9, 1, edges),
        s: 0,
        t: 8,
        seq: vec![1; 15],
    };
    assert!(matches!(walk_enum_oracle(&w), Err(Error::TooLarge(_))));
}

fn variant_strategy() -> impl Strategy<Value = Variant> {
    prop::sample::select(Variant::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn dp_equals_oracle(seed in any::<u64>(), colors in 1u32..=4, variant in variant_strategy()) {
        let w = random_small_walk(seed, 8, 8, colors, variant);
        prop_assert_eq!(solve_walk_dp(&w), walk_enum_oracle(&w).unwrap());
    }

    #[test]
    fn anywalk_dp_equals_oracle(seed in any::<u64>(), colors in 1u32..=4, variant in variant_strategy()) {
        let a = random_small_anywalk(seed, 7, 7, colors, variant);
        prop_assert_eq!(solve_anywalk(&a), anywalk_enum_oracle(&a).unwrap());
    }

    #[test]
    fn frontier_semantics(seed in any::<u64>(), colors in 1u32..=3, variant in variant_strategy()) {
        let w = random_small_walk(seed, 6, 6, colors, variant);
        let xs = walk_frontiers(&w);
        for (i, x) in xs.iter().enumerate() {
            for v in 0..w.graph.n {
                let prefix = WalkInstance { graph: w.graph.clone(), s: w.s, t: v, seq: w.seq[..i].to_vec() };
                prop_assert_eq!(x.get(v), walk_enum_oracle(&prefix).unwrap());
            }
        }
    }

    #[test]
    fn step_is_monotone(seed in any::<u64>(), bits_x in any::<u64>(), extra in any::<u64>(), color in 1u32..=3) {
        let w = random_small_walk(seed, 8, 1, 3, Variant::ALL[(seed % 4) as usize]);
        let n = w.graph.n;
        let table = StepTable::for_graph(&w.graph);
        let x: Vec<bool> = (0..n).map(|i| bits_x >> i & 1 == 1).collect();
        let y: Vec<bool> = (0..n).map(|i| x[i] || extra >> i & 1 == 1).collect();
        let (fx, fy) = (table.step(&Bits::from_bools(&x), color), table.step(&Bits::from_bools(&y), color));
        prop_assert!(fx.is_subset(&fy));
    }

    #[test]
    fn nfa_simulation_equals_run_enumeration(seed in any::<u64>()) {
        let x = random_nfa(seed, 5, 3, 6);
        prop_assert_eq!(nfa_accepts(&x.nfa, &x.input), nfa_enum_oracle(&x.nfa, &x.input).unwrap());
    }

    #[test]
    fn matrix_chain_equals_dp(seed in any::<u64>(), colors in 1u32..=3, variant in variant_strategy()) {
        let w = random_small_walk(seed, 10, 10, colors, variant);
        prop_assert_eq!(solve_walk_matrix_chain(&w), solve_walk_dp(&w));
    }

    #[test]
    fn uniform_power_equals_dp(seed in any::<u64>(), variant in variant_strategy()) {
        let w = random_small_walk(seed, 10, 40, 1, variant);
        prop_assert_eq!(solve_uniform_color_power(&w).unwrap(), solve_walk_dp(&w));
    }

    #[test]
    fn cfl_on_path_equals_dyck(word in prop::collection::vec(1u32..=4, 0..10)) {
        prop_assert_eq!(cfl_reach_solve(&path_cfl(&word)), dyck2_membership(&word));
    }
}
