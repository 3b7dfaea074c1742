use apt_core::generators::{bitnet, cyclenet, philnet_bistate};
use apt_core::synthesis::{
    enumerate_separation_problems, synthesize, synthesize_with, word_synthesize, Properties, SynthesisError, Strategy as Solver,
};
use apt_core::{Lts, PetriNet};
use proptest::prelude::*;

mod common;
use common::{deterministic_lts, nets};

const STATE_LIMIT: usize = 24;

fn small_graph(net: &PetriNet) -> Option<Lts> {
    let lts = net.reachability_graph_with_limit(STATE_LIMIT).ok()?.into_lts();
    lts.is_totally_reachable().holds().then_some(lts)
}

fn solves(net: &PetriNet, lts: &Lts) -> bool {
    net.reachability_graph_with_limit(lts.num_states() + 1)
        .is_ok_and(|rg| rg.lts().is_isomorphic(lts))
}

fn prefixes_of(net: &PetriNet, word: &[&str]) -> bool {
    let lts = Lts::from_word(word);
    net.reachability_graph_with_limit(word.len() + 2)
        .is_ok_and(|rg| rg.lts().language_equivalent(&lts).holds())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The reachability graph of a net is always solvable, and stays so under
    /// the structural properties that net already has.
    #[test]
    fn reachability_graphs_are_synthesisable(net in nets(3, 3)) {
        let Some(lts) = small_graph(&net) else { return Ok(()) };
        let mut lists = vec!["none"];
        if net.is_pure().holds() {
            lists.push("pure");
        }
        if net.is_plain().holds() {
            lists.push("plain");
        }
        for list in lists {
            let outcome = synthesize(&lts, &Properties::parse(list).unwrap()).unwrap();
            prop_assert!(outcome.success, "{list} failed");
            let synthesised = outcome.net.unwrap();
            prop_assert!(solves(&synthesised, &lts));
            if list == "pure" {
                prop_assert!(synthesised.is_pure().holds());
            }
            if list == "plain" {
                prop_assert!(synthesised.is_plain().holds());
            }
        }
    }

    #[test]
    fn success_means_isomorphic(lts in deterministic_lts(5, 2)) {
        prop_assume!(lts.is_totally_reachable().holds());
        for strategy in [Solver::Auto, Solver::General] {
            let outcome = synthesize_with(&lts, &Properties::none(), strategy).unwrap();
            prop_assert_eq!(outcome.net.is_some(), outcome.success);
            if let Some(net) = &outcome.net {
                prop_assert!(solves(net, &lts));
                prop_assert!(outcome.failed_state_separation.is_empty());
                prop_assert!(outcome.failed_event_separation.is_empty());
            } else {
                prop_assert!(!outcome.failed_state_separation.is_empty() || !outcome.failed_event_separation.is_empty());
            }
        }
    }

    #[test]
    fn strategies_agree(lts in deterministic_lts(4, 2), list in prop::sample::select(vec!["none", "pure", "plain", "plain,pure", "2-bounded"])) {
        prop_assume!(lts.is_totally_reachable().holds());
        let props = Properties::parse(list).unwrap();
        let fast = synthesize_with(&lts, &props, Solver::Auto).unwrap();
        let general = synthesize_with(&lts, &props, Solver::General).unwrap();
        prop_assert_eq!(fast.success, general.success);
        prop_assert_eq!(fast.failed_state_separation, general.failed_state_separation);
        prop_assert_eq!(fast.failed_event_separation, general.failed_event_separation);
    }

    #[test]
    fn words_are_synthesised_up_to_language(word in prop::collection::vec(prop::sample::select(vec!["a", "b", "c"]), 1..7)) {
        let (lts, outcome) = word_synthesize(&Properties::none(), &word).unwrap();
        prop_assert_eq!(lts.num_states(), word.len() + 1);
        if let Some(net) = &outcome.net {
            prop_assert!(prefixes_of(net, &word));
        } else {
            prop_assert!(!outcome.separation_failure_points(&lts).is_empty());
        }
    }
}

#[test]
fn generated_nets_are_resynthesised() {
    for net in [bitnet(3), philnet_bistate(2), philnet_bistate(3), cyclenet(4, 2)] {
        let lts = net.reachability_graph().unwrap().into_lts();
        let outcome = synthesize(&lts, &Properties::parse("plain,pure").unwrap()).unwrap();
        assert!(outcome.success);
        assert!(solves(outcome.net.as_ref().unwrap(), &lts));
    }
}

#[test]
fn every_problem_is_listed_once() {
    let lts = bitnet(2).reachability_graph().unwrap().into_lts();
    let problems = enumerate_separation_problems(&lts);
    let n = lts.num_states();
    let disabled: usize = lts.states().map(|s| lts.labels().filter(|&t| !lts.is_enabled(s, t)).count()).sum();
    assert_eq!(problems.len(), n * (n - 1) / 2 + disabled);
}

#[test]
fn unknown_properties_are_rejected() {
    assert!(matches!(Properties::parse("plain,shiny"), Err(SynthesisError::UnknownProperty(p)) if p == "shiny"));
}

#[test]
fn single_letter_word_succeeds() {
    let (_, outcome) = word_synthesize(&Properties::none(), &["a"]).unwrap();
    let net = outcome.net.unwrap();
    assert!(prefixes_of(&net, &["a"]));
}
