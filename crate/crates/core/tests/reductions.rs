use rwlab::gen::{random_small_walk, rng};
use rwlab::harness::registry::{lookup, Caps};
use rwlab::harness::{audit, crosscheck, CrosscheckConfig};
use rwlab::reductions::{
    gadget, pad_instance, red_anywalk_to_walk, red_clique_to_nfa, red_diredge_c_to_nfa,
    red_dirnode2_to_diredge2, red_dirnode2_to_undiredge2, red_dirnode2_to_undirnode2,
    red_dirnode_n_to_dirnode2, red_nfa_to_dirnode_c, red_ov_to_nfa, red_undirected_to_directed,
    red_walk_to_anywalk, red_walk_to_cfl, red_walk_to_omv, red_walk_to_wordbreak, OmvMode,
    ReductionReport,
};
use rwlab::solvers::{
    cfl_reach_solve, clique_bruteforce, matching_walks, nfa_accepts, solve_anywalk,
    solve_uniform_color_power, solve_walk_dp, walk_enum_oracle, word_break_solve,
};
use rwlab::verifier::build_certificate;
use rwlab::{
    AnyWalkInstance, CliqueInstance, Color, ColoredGraph, Instance, Nfa, NfaInstance, Params,
    Variant, WalkInstance,
};

fn i0(seq: Vec<Color>) -> WalkInstance {
    WalkInstance {
        graph: ColoredGraph::edge_colored(true, 3, 2, [(0, 1, 1), (1, 2, 2), (0, 2, 2)]),
        s: 0,
        t: 2,
        seq,
    }
}

fn j0() -> WalkInstance {
    WalkInstance {
        graph: ColoredGraph::node_colored(true, 3, 2, [(0, 1), (1, 2)], vec![1, 2, 1]),
        s: 0,
        t: 2,
        seq: vec![2, 1],
    }
}

fn walk_out(r: &ReductionReport) -> &WalkInstance {
    match r.output() {
        Instance::Walk(w) => w,
        other => panic!("expected a walk output, got {:?}", other.kind()),
    }
}

fn nfa_out(r: &ReductionReport) -> &NfaInstance {
    match r.output() {
        Instance::Nfa(x) => x,
        other => panic!("expected an nfa output, got {:?}", other.kind()),
    }
}

#[test]
fn j0_node_to_edge_colors() {
    let r = red_dirnode2_to_diredge2(&j0()).unwrap();
    let w = walk_out(&r);
    let colors: Vec<_> = w.graph.colored_edges().collect();
    assert_eq!(colors, vec![(0, 1, 2), (1, 2, 1)]);
    assert!(walk_enum_oracle(&j0()).unwrap());
    assert!(walk_enum_oracle(w).unwrap());
}

#[test]
fn node_to_edge_with_empty_sequence() {
    let mut w = j0();
    w.seq.clear();
    let r = red_dirnode2_to_diredge2(&w).unwrap();
    assert!(!solve_walk_dp(walk_out(&r)));
    w.t = w.s;
    assert!(solve_walk_dp(walk_out(&red_dirnode2_to_diredge2(&w).unwrap())));
}

#[test]
fn i0_to_nfa() {
    let r = red_diredge_c_to_nfa(&i0(vec![1, 2])).unwrap();
    let x = nfa_out(&r);
    assert_eq!((x.nfa.n_states, x.nfa.alphabet), (3, 2));
    assert_eq!(nfa_accepts(&x.nfa, &x.input), solve_walk_dp(&i0(vec![1, 2])));
    assert!(nfa_accepts(&x.nfa, &x.input));
}

#[test]
fn empty_string_nfa_accepts_when_s_is_t() {
    let mut w = i0(vec![]);
    w.t = 0;
    let r = red_diredge_c_to_nfa(&w).unwrap();
    assert!(nfa_accepts(&nfa_out(&r).nfa, &[]));
}

#[test]
fn nfa_with_empty_input_reduces_to_q0_in_f() {
    for accepting in [vec![0], vec![1]] {
        let x = NfaInstance {
            nfa: Nfa {
                n_states: 2,
                alphabet: 2,
                transitions: vec![(0, 1, 1), (1, 2, 0)],
                q0: 0,
                accepting: accepting.clone(),
            },
            input: vec![],
        };
        let r = red_nfa_to_dirnode_c(&x).unwrap();
        assert_eq!(walk_out(&r).seq, vec![1]);
        assert_eq!(solve_walk_dp(walk_out(&r)), accepting.contains(&0));
    }
}

#[test]
fn nfa_with_empty_alphabet_is_rejected() {
    let x = NfaInstance {
        nfa: Nfa {
            n_states: 1,
            alphabet: 0,
            transitions: vec![],
            q0: 0,
            accepting: vec![0],
        },
        input: vec![],
    };
    assert!(red_nfa_to_dirnode_c(&x).is_err());
}

#[test]
fn c4_single_edge_binary_expansion() {
    let w = WalkInstance {
        graph: ColoredGraph::node_colored(true, 2, 4, [(0, 1)], vec![1, 3]),
        s: 0,
        t: 1,
        seq: vec![3],
    };
    let r = red_dirnode_n_to_dirnode2(&w).unwrap();
    let o = walk_out(&r);
    assert_eq!(o.seq.len(), 2);
    assert!(walk_enum_oracle(&w).unwrap());
    assert!(walk_enum_oracle(o).unwrap());
}

#[test]
fn j0_through_undirected_gadgets() {
    for r in [
        red_dirnode2_to_undiredge2(&j0()).unwrap(),
        red_dirnode2_to_undirnode2(&j0()).unwrap(),
    ] {
        let o = walk_out(&r);
        assert_eq!(o.graph.n, 18);
        assert!(!o.graph.directed);
        assert_eq!(walk_enum_oracle(o).unwrap(), walk_enum_oracle(&j0()).unwrap());
    }
}

#[test]
fn undirected_gadget_with_empty_sequence() {
    let mut w = j0();
    w.seq.clear();
    for t in [0, 2] {
        w.t = t;
        for r in [
            red_dirnode2_to_undiredge2(&w).unwrap(),
            red_dirnode2_to_undirnode2(&w).unwrap(),
        ] {
            assert!(walk_out(&r).seq.is_empty());
            assert_eq!(solve_walk_dp(walk_out(&r)), t == 0);
        }
    }
}

#[test]
fn reverse_walk_probe() {
    // u→v and v→u with different node colors: seq [c] with c ≠ c(v) from u
    // must not be matched by walking an edge backwards.
    for (cu, cv) in [(1, 2), (2, 1)] {
        let w = WalkInstance {
            graph: ColoredGraph::node_colored(true, 2, 2, [(0, 1), (1, 0)], vec![cu, cv]),
            s: 0,
            t: 1,
            seq: vec![cu],
        };
        assert!(!walk_enum_oracle(&w).unwrap());
        for r in [
            red_dirnode2_to_undiredge2(&w).unwrap(),
            red_dirnode2_to_undirnode2(&w).unwrap(),
        ] {
            assert!(!walk_enum_oracle(walk_out(&r)).unwrap(), "{}", r.name);
        }
    }
}

#[test]
fn undirected_to_directed_examples() {
    let mut w = WalkInstance {
        graph: ColoredGraph::edge_colored(false, 2, 1, [(0, 1, 1)]),
        s: 0,
        t: 1,
        seq: vec![1],
    };
    let r = red_undirected_to_directed(&w).unwrap();
    assert!(solve_walk_dp(&w) && solve_walk_dp(walk_out(&r)));
    w.t = 0;
    w.seq = vec![1, 1];
    let r = red_undirected_to_directed(&w).unwrap();
    assert!(walk_enum_oracle(&w).unwrap());
    assert!(walk_enum_oracle(walk_out(&r)).unwrap());
    assert_eq!(r.params_out.m, 2);
}

#[test]
fn walk_to_anywalk_examples() {
    let mut w = WalkInstance {
        graph: ColoredGraph::edge_colored(false, 3, 2, [(0, 1, 1)]),
        s: 2,
        t: 2,
        seq: vec![],
    };
    for t in [2, 0] {
        w.t = t;
        let r = red_walk_to_anywalk(&w).unwrap();
        let Instance::AnyWalk(a) = r.output() else { panic!() };
        assert_eq!(a.seq, vec![3, 4]);
        assert_eq!(solve_anywalk(a), t == 2);
    }
    let mut u = i0(vec![1, 2]);
    u.graph.directed = false;
    u.graph.canonicalize();
    let r = red_walk_to_anywalk(&u).unwrap();
    let Instance::AnyWalk(a) = r.output() else { panic!() };
    assert_eq!(solve_anywalk(a), solve_walk_dp(&u));
}

#[test]
fn anywalk_to_walk_examples() {
    let a = AnyWalkInstance {
        graph: ColoredGraph::edge_colored(false, 2, 1, [(0, 1, 1)]),
        seq: vec![1],
    };
    assert!(solve_walk_dp(walk_out(&red_anywalk_to_walk(&a).unwrap())));
    let empty = AnyWalkInstance {
        graph: ColoredGraph::edge_colored(false, 1, 1, []),
        seq: vec![],
    };
    assert!(solve_walk_dp(walk_out(&red_anywalk_to_walk(&empty).unwrap())));
}

#[test]
fn pad_i0_to_seven() {
    for seq in [vec![1, 2], vec![2, 2], vec![2, 1]] {
        let w = i0(seq);
        let r = pad_instance(&w, 5, 7, None).unwrap();
        assert_eq!(walk_out(&r).l(), 7);
        assert_eq!(walk_enum_oracle(walk_out(&r)).unwrap(), walk_enum_oracle(&w).unwrap());
    }
}

#[test]
fn pad_vertices_only() {
    let w = i0(vec![1, 2]);
    let r = pad_instance(&w, 12, 2, None).unwrap();
    assert_eq!(r.params_out, Params::new(12, 3, 2));
    assert!(solve_walk_dp(walk_out(&r)));
}

#[test]
fn cfl_examples() {
    let r = red_walk_to_cfl(&i0(vec![1, 2])).unwrap();
    let Instance::Cfl(c) = r.output() else { panic!() };
    assert_eq!(c.graph.n, 5);
    assert!(cfl_reach_solve(c));
    let w = WalkInstance {
        graph: ColoredGraph::edge_colored(true, 2, 2, [(0, 1, 2)]),
        s: 0,
        t: 1,
        seq: vec![1],
    };
    let Instance::Cfl(c) = red_walk_to_cfl(&w).unwrap().into_output() else { panic!() };
    assert!(!cfl_reach_solve(&c));
}

#[test]
fn wordbreak_examples() {
    let r = red_walk_to_wordbreak(&i0(vec![1, 2])).unwrap();
    let Instance::WordBreak(wb) = r.output() else { panic!() };
    assert_eq!(wb.text, vec![0, 1, 0, 0, 0, 2]);
    assert!(word_break_solve(wb));
    // one step along an existing edge: the whole text is a dictionary word
    let w = i0(vec![2]);
    let Instance::WordBreak(wb) = red_walk_to_wordbreak(&w).unwrap().into_output() else { panic!() };
    assert_eq!(wb.text, vec![0, 2]);
    assert!(wb.dictionary.contains(&wb.text));
    assert!(word_break_solve(&wb));
}

#[test]
fn omv_examples() {
    let run = red_walk_to_omv(&i0(vec![1, 2]), OmvMode::TwoInstance).unwrap();
    assert!(run.answer);
    assert_eq!(run.rounds_used.iter().sum::<usize>(), 2);
    for seed in 0..100 {
        let mut w = random_small_walk(seed, 6, 6, 1, Variant::DIR_EDGE);
        w.graph.num_colors = 2;
        for mode in [OmvMode::TwoInstance, OmvMode::BlockDiagonal] {
            let run = red_walk_to_omv(&w, mode).unwrap();
            assert_eq!(run.answer, solve_uniform_color_power(&w).unwrap(), "seed {seed}");
        }
    }
}

#[test]
fn ov_examples() {
    use rwlab::Bits;
    use rwlab::OvInstance;
    let one = |s: &str| Bits::from_bitstring(s).unwrap();
    let yes = OvInstance { d: 1, a: vec![one("0")], b: vec![one("1")] };
    let no = OvInstance { d: 1, a: vec![one("1")], b: vec![one("1")] };
    let accepts = |o: &OvInstance| {
        let r = red_ov_to_nfa(o).unwrap();
        let x = nfa_out(&r).clone();
        nfa_accepts(&x.nfa, &x.input)
    };
    assert!(accepts(&yes));
    assert!(!accepts(&no));
}

#[test]
fn clique_examples() {
    let k3 = CliqueInstance::new(3, [(0, 1), (1, 2), (0, 2)], 3);
    let p3 = CliqueInstance::new(3, [(0, 1), (1, 2)], 3);
    for (g, want) in [(k3, true), (p3, false)] {
        assert_eq!(clique_bruteforce(&g).unwrap(), want);
        let r = red_clique_to_nfa(&g, 1, 1).unwrap();
        let x = nfa_out(&r);
        assert_eq!(nfa_accepts(&x.nfa, &x.input), want);
    }
}

/// Answer preservation through the registry on 300 seeds per construction.
#[test]
fn registry_crosscheck_300_seeds() {
    let caps = |name: &str| match name {
        "red_ov_to_nfa" => Caps { max_n: 8, max_l: 6 },
        "red_clique_to_nfa" => Caps { max_n: 9, max_l: 0 },
        "red_nfa_to_dirnodeC" => Caps { max_n: 6, max_l: 6 },
        _ => Caps::default(),
    };
    for e in rwlab::harness::REGISTRY {
        let cfg = CrosscheckConfig {
            seeds: 300,
            caps: caps(e.name),
            ..CrosscheckConfig::default()
        };
        let r = crosscheck(e, &cfg);
        assert!(r.all_passed(), "{}: first failure {}", r.summary(), r.failures().next().unwrap());
    }
}

#[test]
fn audit_rows_from_the_examples() {
    // n=5, m=8, l=3
    let mut r = rng(3);
    let w = rwlab::gen::random_walk(&mut r, 5, 8, 3, 2, Variant::DIR_NODE).unwrap();
    let rep = red_dirnode2_to_undiredge2(&w).unwrap();
    assert_eq!(rep.params_out, Params::new(30, 33, 18));
    assert!(rep.violations().is_empty());

    let id = red_dirnode2_to_diredge2(&w).unwrap();
    assert_eq!(id.params_out, id.params_in);

    let w5 = rwlab::gen::random_walk(&mut r, 5, 8, 3, 5, Variant::DIR_NODE).unwrap();
    let b = red_dirnode_n_to_dirnode2(&w5).unwrap();
    assert_eq!(b.params_out.l, 9);
    assert_eq!(b.params_out.n, 15);
}

#[test]
fn audit_passes_for_every_registered_reduction() {
    for e in rwlab::harness::REGISTRY {
        let caps = if e.name == "red_clique_to_nfa" { Caps { max_n: 9, max_l: 0 } } else { Caps::default() };
        let rep = audit(e, 100, 0, caps);
        assert!(rep.all_ok(), "{}: {}", e.name, rep.rows.iter().find(|r| !r.ok()).unwrap());
    }
}

#[test]
fn unknown_reduction_name() {
    assert!(lookup("red_walk_to_sat").is_err());
}

/// Both gadget claims by exhaustive length-5 enumeration from every `v_in`.
#[test]
fn gadget_forcing() {
    for seed in 0..50 {
        let w = random_small_walk(seed, 6, 2, 2, Variant::DIR_NODE);
        let edge = red_dirnode2_to_undiredge2(&w).unwrap();
        let node = red_dirnode2_to_undirnode2(&w).unwrap();
        for v in 0..w.graph.n {
            for c in 1..=2 {
                let expected: Vec<Vec<usize>> = if c == w.graph.colors[v] {
                    vec![gadget::path(v).to_vec()]
                } else {
                    vec![]
                };
                let e = matching_walks(&walk_out(&edge).graph, gadget::v_in(v), &gadget::col_edge(c)).unwrap();
                assert_eq!(e, expected, "edge gadget seed {seed} v {v} c {c}");
                let nw = matching_walks(&walk_out(&node).graph, gadget::v_in(v), &gadget::col_node(c)).unwrap();
                assert_eq!(nw, expected, "node gadget seed {seed} v {v} c {c}");
            }
        }
    }
}

#[test]
fn omv_frontiers_equal_certificate_vectors() {
    for seed in 0..100 {
        let w = random_small_walk(seed, 6, 8, 2, Variant::DIR_EDGE);
        let cert = build_certificate(&w).unwrap();
        for mode in [OmvMode::TwoInstance, OmvMode::BlockDiagonal] {
            let run = red_walk_to_omv(&w, mode).unwrap();
            assert_eq!(run.frontiers.len(), cert.xs.len());
            for (u, x) in run.frontiers.iter().zip(&cert.xs) {
                assert_eq!(&u.slice(0, w.graph.n), x, "seed {seed}");
            }
        }
    }
}
