//! Strategies shared by the property tests.

#![allow(dead_code)]

use apt_core::{Lts, PetriNet};
use proptest::prelude::*;

/// Nets of up to 10 places and 6 transitions.
pub fn random_net() -> impl Strategy<Value = PetriNet> {
    nets(10, 6)
}

/// Nets with up to `places` places and `transitions` transitions, weights and
/// initial tokens at most 2.
pub fn nets(places: usize, transitions: usize) -> impl Strategy<Value = PetriNet> {
    (1..=places, 1..=transitions).prop_flat_map(|(p, t)| {
        let arcs = prop::collection::vec((0..p, 0..t, 1u64..=2), 0..=2 * (p + t));
        (Just(p), Just(t), arcs.clone(), arcs, prop::collection::vec(0u64..=2, p))
            .prop_map(|(p, t, pre, post, m0)| {
                let mut net = PetriNet::new();
                for i in 0..p {
                    net.add_place(&format!("p{i}")).unwrap();
                }
                for i in 0..t {
                    net.add_transition(&format!("t{i}")).unwrap();
                }
                for (pl, tr, w) in pre {
                    net.add_flow_to_transition(pl, tr, w);
                }
                for (pl, tr, w) in post {
                    net.add_flow_to_place(tr, pl, w);
                }
                for (pl, m) in m0.into_iter().enumerate() {
                    net.set_initial_tokens(pl, m);
                }
                net
            })
    })
}

/// A deterministic LTS with up to `states` states over up to `labels` labels;
/// not necessarily totally reachable.
pub fn deterministic_lts(states: usize, labels: usize) -> impl Strategy<Value = Lts> {
    (1..=states, 1..=labels).prop_flat_map(|(n, l)| {
        prop::collection::vec(prop::option::weighted(0.5, 0..n), n * l).prop_map(move |delta| {
            let mut lts = Lts::new("s0");
            for s in 1..n {
                lts.add_state(&format!("s{s}")).unwrap();
            }
            for i in 0..l {
                lts.add_label(&((b'a' + i as u8) as char).to_string()).unwrap();
            }
            for (i, target) in delta.into_iter().enumerate() {
                if let Some(t) = target {
                    lts.add_arc(i / l, i % l, t);
                }
            }
            lts
        })
    })
}
