//! Parameterised net families used for testing and benchmarking.

use crate::net::PetriNet;

fn fresh(net: &mut PetriNet, name: &str) -> usize {
    net.add_place(name).expect("generated names are unique")
}

fn transition(net: &mut PetriNet, name: &str) -> usize {
    net.add_transition(name).expect("generated names are unique")
}

/// `n` independent bits, each flipped by `set_i` and `unset_i`; the
/// reachability graph has `2^n` states.
pub fn bitnet(n: usize) -> PetriNet {
    assert!(n >= 1, "bitnet needs at least one bit");
    let mut net = PetriNet::new();
    net.set_name(format!("{n}-bitnet"));
    for i in 0..n {
        let off = fresh(&mut net, &format!("off_{i}"));
        let on = fresh(&mut net, &format!("on_{i}"));
        net.set_initial_tokens(off, 1);
        let set = transition(&mut net, &format!("set_{i}"));
        net.add_flow_to_transition(off, set, 1);
        net.add_flow_to_place(set, on, 1);
        let unset = transition(&mut net, &format!("unset_{i}"));
        net.add_flow_to_transition(on, unset, 1);
        net.add_flow_to_place(unset, off, 1);
    }
    net
}

/// Dining philosophers where philosopher `i` takes forks `f_i` and
/// `f_{i+1 mod n}` in one step and puts both back in one step.
pub fn philnet_bistate(n: usize) -> PetriNet {
    assert!(n >= 2, "philnet needs at least two philosophers");
    let mut net = PetriNet::new();
    net.set_name(format!("{n}-bistate-philnet"));
    let mut thinking = Vec::with_capacity(n);
    let mut eating = Vec::with_capacity(n);
    let mut forks = Vec::with_capacity(n);
    for i in 0..n {
        thinking.push(fresh(&mut net, &format!("thinking_{i}")));
        eating.push(fresh(&mut net, &format!("eating_{i}")));
        forks.push(fresh(&mut net, &format!("f_{i}")));
        net.set_initial_tokens(thinking[i], 1);
        net.set_initial_tokens(forks[i], 1);
    }
    for i in 0..n {
        let (left, right) = (forks[i], forks[(i + 1) % n]);
        let take = transition(&mut net, &format!("take_{i}"));
        let put = transition(&mut net, &format!("put_{i}"));
        for p in [thinking[i], left, right] {
            net.add_flow_to_transition(p, take, 1);
            net.add_flow_to_place(put, p, 1);
        }
        net.add_flow_to_place(take, eating[i], 1);
        net.add_flow_to_transition(eating[i], put, 1);
    }
    net
}

/// A ring of `n` places `q_i` with `t_i: q_i -> q_{i+1 mod n}` and `k` tokens
/// on `q_0`.
pub fn cyclenet(n: usize, k: u64) -> PetriNet {
    assert!(n >= 1 && k >= 1, "cyclenet needs n >= 1 and k >= 1");
    let mut net = PetriNet::new();
    net.set_name(format!("{n}-cyclenet-{k}"));
    let places: Vec<usize> = (0..n).map(|i| fresh(&mut net, &format!("q_{i}"))).collect();
    for i in 0..n {
        let t = transition(&mut net, &format!("t_{i}"));
        net.add_flow_to_transition(places[i], t, 1);
        net.add_flow_to_place(t, places[(i + 1) % n], 1);
    }
    net.set_initial_tokens(places[0], k);
    net
}
