use apt_core::io::{parse, parse_lts, parse_net, print, print_lts, print_net, Document};
use apt_core::{Lts, PetriNet};
use proptest::prelude::*;

mod common;
use common::{deterministic_lts, random_net};

fn same_net(a: &PetriNet, b: &PetriNet) -> bool {
    a.num_places() == b.num_places()
        && a.num_transitions() == b.num_transitions()
        && a.places().all(|p| a.place_name(p) == b.place_name(p))
        && a.transitions().all(|t| {
            a.transition_name(t) == b.transition_name(t)
                && a.label(t) == b.label(t)
                && a.location(t) == b.location(t)
                && a.preset(t) == b.preset(t)
                && a.postset(t) == b.postset(t)
        })
        && a.initial_marking() == b.initial_marking()
}

fn same_lts(a: &Lts, b: &Lts) -> bool {
    a.num_states() == b.num_states()
        && a.initial() == b.initial()
        && a.states().all(|s| a.state_name(s) == b.state_name(s))
        && a.labels().all(|l| a.label_name(l) == b.label_name(l) && a.location(l) == b.location(l))
        && a.arcs() == b.arcs()
}

fn name() -> impl Strategy<Value = String> {
    prop_oneof!["[a-z][a-z0-9_]{0,5}", "[a-z \"\\\\]{1,6}"]
}

proptest! {
    #[test]
    fn nets_round_trip(net in random_net(), name in name(), description in name()) {
        let mut net = net;
        net.set_name(name);
        net.set_description(description);
        let text = print_net(&net);
        let back = parse_net(&text).unwrap();
        prop_assert!(same_net(&net, &back), "{}", text);
        prop_assert_eq!(print_net(&back), text);
    }

    #[test]
    fn lts_round_trip(lts in deterministic_lts(6, 3), name in name()) {
        let mut lts = lts;
        lts.set_name(name);
        let text = print_lts(&lts);
        let back = parse_lts(&text).unwrap();
        prop_assert!(same_lts(&lts, &back), "{}", text);
        prop_assert_eq!(print_lts(&back), text);
    }

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,80}") {
        let _ = parse(&text);
    }

    #[test]
    fn token_soup_never_panics(
        tokens in prop::collection::vec(
            prop_oneof![
                Just(".type"), Just("LPN"), Just("LTS"), Just(".places"), Just(".transitions"),
                Just(".flows"), Just(".initial_marking"), Just(".states"), Just(".labels"),
                Just(".arcs"), Just("p"), Just("t"), Just("s0"), Just("a"), Just("{"), Just("}"),
                Just("["), Just("]"), Just(","), Just(":"), Just("->"), Just("*"), Just("="),
                Just("2"), Just("initial"), Just("\"x\""), Just("/*"), Just("*/"), Just("//"),
            ],
            0..40,
        )
    ) {
        let text = tokens.join(" ");
        if let Ok(doc) = parse(&text) {
            let printed = print(&doc);
            let again = parse(&printed).unwrap();
            prop_assert_eq!(print(&again), printed);
        }
    }
}

#[test]
fn documents_report_their_kind() {
    let net = parse(include_str!("fixtures/net.apt")).unwrap();
    let lts = parse(include_str!("fixtures/lts.apt")).unwrap();
    assert!(matches!(net, Document::Net(_)));
    assert!(matches!(lts, Document::Lts(_)));
}

#[test]
fn errors_are_positioned() {
    let err = parse_net(".type LPN\n.places p\n.flows t: {p} -> {}").unwrap_err();
    assert_eq!(err.line, 3);
    assert!(err.to_string().starts_with("3:"));
    assert!(parse_lts(include_str!("fixtures/net.apt")).is_err());
}
