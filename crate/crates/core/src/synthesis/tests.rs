use super::*;

pub(crate) fn small_cycle_lts() -> Lts {
    let mut lts = Lts::new("s0");
    for s in ["s1", "s2", "s3", "s4", "s5", "s6"] {
        lts.add_state(s).unwrap();
    }
    for l in ["a", "b", "c", "d"] {
        lts.add_label(l).unwrap();
    }
    let arcs = [
        ("s0", "a", "s1"),
        ("s0", "b", "s2"),
        ("s1", "b", "s3"),
        ("s2", "a", "s3"),
        ("s3", "c", "s4"),
        ("s4", "a", "s5"),
        ("s4", "d", "s0"),
        ("s5", "b", "s6"),
        ("s5", "d", "s1"),
        ("s6", "d", "s3"),
    ];
    for (s, l, t) in arcs {
        lts.add_arc_by_name(s, l, t).unwrap();
    }
    lts
}

fn props(list: &str) -> Properties {
    Properties::parse(list).unwrap()
}

fn assert_solution(lts: &Lts, outcome: &SynthesisOutcome) {
    assert!(outcome.success);
    let net = outcome.net.as_ref().unwrap();
    assert!(net.reachability_graph().unwrap().lts().is_isomorphic(lts));
    for r in &outcome.computed_regions {
        assert!(r.is_region_of(lts));
    }
}

#[test]
fn small_cycle_lts_none() {
    let lts = small_cycle_lts();
    let outcome = synthesize(&lts, &Properties::none()).unwrap();
    assert_solution(&lts, &outcome);
    assert_eq!(outcome.render(&lts, false), "success: Yes\n");
}

#[test]
fn small_cycle_lts_plain_pure_variants() {
    let lts = small_cycle_lts();
    for list in ["plain,pure", "pure", "plain", "2-bounded"] {
        let p = props(list);
        let outcome = synthesize(&lts, &p).unwrap();
        assert_solution(&lts, &outcome);
        let net = outcome.net.unwrap();
        if p.pure {
            assert!(net.is_pure().holds(), "{list}");
        }
        if p.plain {
            assert!(net.is_plain().holds(), "{list}");
        }
        if list == "2-bounded" {
            assert!(net.k_bounded(2).holds());
        }
    }
}

#[test]
fn small_cycle_lts_safe_fails_at_b_s4() {
    let lts = small_cycle_lts();
    let outcome = synthesize(&lts, &props("safe")).unwrap();
    assert!(!outcome.success);
    assert!(outcome.failed_state_separation.is_empty());
    assert_eq!(outcome.failed_events(&lts), "{b=[s4]}");
    assert_eq!(outcome.failed_state_pairs(&lts), "[]");
    let c = lts.label_id("c").unwrap();
    let s456: Vec<StateId> = ["s4", "s5", "s6"].iter().map(|s| lts.state_id(s).unwrap()).collect();
    let found = outcome.regions.iter().any(|r| {
        report::separated_events(&lts, r)
            .iter()
            .any(|(t, states)| *t == c && *states == s456)
    });
    assert!(found, "{}", outcome.render(&lts, true));
}

#[test]
fn small_cycle_lts_locations() {
    let mut lts = small_cycle_lts();
    for (l, loc) in [("a", "A"), ("b", "B"), ("c", "A"), ("d", "A")] {
        let id = lts.label_id(l).unwrap();
        lts.set_location(id, Some(loc.to_string()));
    }
    let outcome = synthesize(&lts, &Properties::none()).unwrap();
    assert_solution(&lts, &outcome);
    let net = outcome.net.unwrap();
    let b = net.transition_id("b").unwrap();
    for t in net.transitions().filter(|&t| t != b) {
        for &(p, _) in net.preset(b) {
            assert_eq!(net.weight_to_transition(p, t), 0);
        }
    }
}

#[test]
fn word_abbaac() {
    let word = ["a", "b", "b", "a", "a", "c"];
    let (lts, outcome) = word_synthesize(&Properties::none(), &word).unwrap();
    assert!(!outcome.success);
    assert_eq!(outcome.separation_failure_points(&lts), "a, b, [a] b, a, a, c");
}

#[test]
fn word_ab_succeeds() {
    let (lts, outcome) = word_synthesize(&Properties::none(), &["a", "b"]).unwrap();
    assert!(outcome.success);
    let rg = outcome.net.as_ref().unwrap().reachability_graph().unwrap();
    assert!(rg.lts().language_equivalent(&lts).holds());
    assert_eq!(outcome.separation_failure_points(&lts), "a, b");
}

#[test]
fn general_path_agrees_with_fast_paths() {
    let lts = small_cycle_lts();
    for list in ["none", "pure", "plain"] {
        let fast = synthesize_with(&lts, &props(list), Strategy::Auto).unwrap();
        let general = synthesize_with(&lts, &props(list), Strategy::General).unwrap();
        assert_eq!(fast.success, general.success, "{list}");
        assert_solution(&lts, &general);
    }
}

#[test]
fn cyclic_language_input_is_rejected() {
    assert_eq!(
        synthesize_language_only(&small_cycle_lts(), &Properties::none()).unwrap_err(),
        SynthesisError::CyclicInput
    );
}

#[test]
fn nondeterministic_input_is_rejected() {
    let mut lts = Lts::new("s0");
    lts.add_state("s1").unwrap();
    lts.add_state("s2").unwrap();
    lts.add_label("a").unwrap();
    lts.add_arc_by_name("s0", "a", "s1").unwrap();
    lts.add_arc_by_name("s0", "a", "s2").unwrap();
    assert!(matches!(
        synthesize(&lts, &Properties::none()),
        Err(SynthesisError::Nondeterministic(_))
    ));
}

#[test]
fn problems_enumerated_in_order() {
    let lts = Lts::from_word(&["a"]);
    assert_eq!(
        enumerate_separation_problems(&lts),
        vec![SeparationProblem::Event(1, 0), SeparationProblem::State(0, 1)]
    );
    assert_eq!(region_basis(&lts).unwrap().len(), 1);
}
