use super::*;

const NET: &str = include_str!("../../tests/fixtures/net.apt");
const LTS: &str = include_str!("../../tests/fixtures/lts.apt");

#[test]
fn fixture_net_parses() {
    let net = parse_net(NET).unwrap();
    assert_eq!(net.num_places(), 5);
    assert_eq!(net.num_transitions(), 4);
    assert_eq!(net.initial_marking().tokens(), &[1, 1, 0, 0, 1]);
    assert_eq!(net.description(), "A Petri net N_1 having the small cycle property");
    let c = net.transition_id("c").unwrap();
    assert_eq!(net.postset(c).len(), 3);
}

#[test]
fn fixture_lts_parses() {
    let lts = parse_lts(LTS).unwrap();
    assert_eq!(lts.num_states(), 7);
    assert_eq!(lts.num_arcs(), 10);
    assert_eq!(lts.state_name(lts.initial()), "s0");
}

#[test]
fn print_is_a_fixed_point() {
    for text in [NET, LTS] {
        let once = print(&parse(text).unwrap());
        let twice = print(&parse(&once).unwrap());
        assert_eq!(once, twice);
    }
}

#[test]
fn repetition_accumulates() {
    let a = parse_net(".type LPN .places p .transitions t .flows t: {p, p} -> {} .initial_marking {p, 2*p}").unwrap();
    assert_eq!(a.weight_to_transition(0, 0), 2);
    assert_eq!(a.initial_marking().get(0), 3);
    assert!(print_net(&a).contains("t: { 2 * p } -> {}"));
}

#[test]
fn sections_in_any_order() {
    let text = ".arcs s0 a s1 .labels a .type LTS .states s0 s1[initial]";
    let lts = parse_lts(text).unwrap();
    assert_eq!(lts.initial(), 1);
    assert_eq!(lts.num_arcs(), 1);
}

#[test]
fn errors_carry_positions() {
    let cases = [
        (".type LPN\n.places p p", (2, 11)),
        (".type LPN\n.places p\n.initial_marking {0 * p}", (3, 19)),
        (".type LPN\n.places p\n.initial_marking {q}", (3, 19)),
        (".type LTS\n.states s0 s1", (2, 9)),
        (".type LTS\n.states s0[initial] s1[initial]", (2, 24)),
        (".type LTS\n.type LPN", (2, 1)),
        (".type LTS\n.places p", (2, 1)),
        (".places p\n.type LTS", (1, 1)),
        (".type LTS .states s0[initial] .labels a .arcs s0 b s0", (1, 50)),
    ];
    for (text, at) in cases {
        let e = parse(text).unwrap_err();
        assert_eq!((e.line, e.column), at, "{text}: {e}");
    }
    assert!(parse("").is_err());
}

#[test]
fn locations_and_labels_round_trip() {
    let text = ".type LPN .places p .transitions t[label=\"x\", location=\"A\"] .flows t: {p} -> {}";
    let net = parse_net(text).unwrap();
    assert_eq!(net.label(0), "x");
    assert_eq!(net.location(0), Some("A"));
    let again = parse_net(&print_net(&net)).unwrap();
    assert_eq!(again.label(0), "x");
    assert_eq!(again.location(0), Some("A"));
}

#[test]
fn dot_counts() {
    let lts_dot = lts_to_dot(&parse_lts(LTS).unwrap());
    assert_eq!(lts_dot.matches(" -> ").count(), 10);
    assert_eq!(lts_dot.matches("shape").count(), 1);
    assert_eq!(lts_dot.lines().filter(|l| l.trim_start().starts_with('s') && !l.contains("->")).count(), 7);
    let net_dot = net_to_dot(&parse_net(NET).unwrap());
    assert_eq!(net_dot.matches("shape=").count(), 9);
    let empty = lts_to_dot(&Lts::new("s0"));
    assert!(empty.contains("s0 [label=\"s0\", peripheries=2]"));
}
