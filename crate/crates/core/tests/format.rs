use rwlab::format::parse_instances;
use rwlab::gen::{gen_random_walk_instance, random_instance};
use rwlab::{parse_instance, serialize_instance, ColoredGraph, Instance, InstanceKind, Variant, WalkInstance};

#[test]
fn round_trip_every_kind_for_150_seeds() {
    for kind in InstanceKind::ALL {
        for seed in 0..150 {
            let inst = random_instance(kind, seed);
            let text = serialize_instance(&inst);
            let back = parse_instance(&text).unwrap_or_else(|e| panic!("{kind:?} seed {seed}: {e}\n{text}"));
            assert_eq!(back, inst, "{kind:?} seed {seed}");
            assert_eq!(serialize_instance(&back), text);
        }
    }
}

#[test]
fn round_trip_generated_walks() {
    for seed in 0..100 {
        let variant = Variant::ALL[(seed % 4) as usize];
        let w = gen_random_walk_instance(12, 1.5, 1.0, 3, variant, seed).unwrap();
        let inst = Instance::Walk(w);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst, "seed {seed}");
    }
}

#[test]
fn generator_is_deterministic() {
    for kind in InstanceKind::ALL {
        for seed in [0, 1, 99] {
            let a = serialize_instance(&random_instance(kind, seed));
            let b = serialize_instance(&random_instance(kind, seed));
            assert_eq!(a, b);
        }
    }
    let a = gen_random_walk_instance(20, 1.3, 0.8, 2, Variant::UNDIR_NODE, 5).unwrap();
    let b = gen_random_walk_instance(20, 1.3, 0.8, 2, Variant::UNDIR_NODE, 5).unwrap();
    assert_eq!(a, b);
}

#[test]
fn empty_graph_text_is_fixed() {
    let inst = Instance::Walk(WalkInstance {
        graph: ColoredGraph::edge_colored(true, 1, 1, []),
        s: 0,
        t: 0,
        seq: vec![],
    });
    assert_eq!(serialize_instance(&inst), "kind walk\ngraph directed edge n=1 C=1\nst 0 0\nseq\n");
}

#[test]
fn edges_are_emitted_sorted() {
    let text = "kind walk\ngraph undirected edge n=3 C=2\nedge 2 1 1\nedge 0 2 2\nst 0 2\nseq 2\n";
    let out = serialize_instance(&parse_instance(text).unwrap());
    assert_eq!(out, "kind walk\ngraph undirected edge n=3 C=2\nedge 0 2 2\nedge 1 2 1\nst 0 2\nseq 2\n");
}

#[test]
fn duplicate_and_self_loop_edges_are_rejected() {
    let dup = "kind walk\ngraph undirected edge n=3 C=2\nedge 0 1 1\nedge 1 0 2\nst 0 2\nseq 2\n";
    assert!(parse_instance(dup).is_err());
    let looped = "kind walk\ngraph directed edge n=3 C=2\nedge 1 1 1\nst 0 2\nseq 2\n";
    assert!(parse_instance(looped).is_err());
}

#[test]
fn stream_of_mixed_kinds() {
    let text: String = InstanceKind::ALL.iter().map(|&k| serialize_instance(&random_instance(k, 3)) + "\n").collect();
    let parsed = parse_instances(&text).unwrap();
    assert_eq!(parsed.len(), InstanceKind::ALL.len());
    for (inst, kind) in parsed.iter().zip(InstanceKind::ALL) {
        assert_eq!(inst.kind(), kind);
    }
}
