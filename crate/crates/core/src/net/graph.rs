use std::collections::{HashMap, VecDeque};

use super::{Marking, NetError, OmegaMarking, PetriNet, TransitionId};
use crate::lts::{Lts, StateId};

pub const DEFAULT_STATE_LIMIT: usize = 1_000_000;

/// The reachability graph of a net: an LTS over labels plus the marking of
/// every state and the transition behind every arc.
#[derive(Clone, Debug)]
pub struct ReachabilityGraph {
    lts: Lts,
    markings: Vec<Marking>,
    edges: Vec<(StateId, TransitionId, StateId)>,
    parent: Vec<Option<(StateId, TransitionId)>>,
}

/// A Karp–Miller coverability graph. For bounded nets it coincides with the
/// reachability graph.
#[derive(Clone, Debug)]
pub struct CoverabilityGraph {
    lts: Lts,
    markings: Vec<OmegaMarking>,
    edges: Vec<(StateId, TransitionId, StateId)>,
    parent: Vec<Option<(StateId, TransitionId)>>,
}

fn build_lts(net: &PetriNet, num_states: usize, edges: &[(StateId, TransitionId, StateId)]) -> Lts {
    let mut lts = Lts::new("s0");
    for i in 1..num_states {
        lts.add_state(&format!("s{i}"))
            .expect("generated state names are fresh");
    }
    for t in net.transitions() {
        let label = lts.ensure_label(net.label(t));
        if let Some(loc) = net.location(t) {
            lts.set_location(label, Some(loc.to_string()));
        }
    }
    for &(s, t, s2) in edges {
        let label = lts.label_id(net.label(t)).expect("label declared above");
        lts.add_arc(s, label, s2);
    }
    lts
}

fn path_to(parent: &[Option<(StateId, TransitionId)>], mut state: StateId) -> Vec<TransitionId> {
    let mut path = Vec::new();
    while let Some((prev, t)) = parent[state] {
        path.push(t);
        state = prev;
    }
    path.reverse();
    path
}

macro_rules! graph_accessors {
    ($ty:ty, $marking:ty) => {
        impl $ty {
            pub fn lts(&self) -> &Lts {
                &self.lts
            }

            pub fn into_lts(self) -> Lts {
                self.lts
            }

            pub fn num_states(&self) -> usize {
                self.markings.len()
            }

            pub fn marking(&self, state: StateId) -> &$marking {
                &self.markings[state]
            }

            pub fn markings(&self) -> &[$marking] {
                &self.markings
            }

            /// `(source, transition, target)` in discovery order.
            pub fn edges(&self) -> &[(StateId, TransitionId, StateId)] {
                &self.edges
            }

            /// The transitions on the discovery path from the initial state,
            /// which is a shortest path.
            pub fn path_to(&self, state: StateId) -> Vec<TransitionId> {
                path_to(&self.parent, state)
            }
        }
    };
}

graph_accessors!(ReachabilityGraph, Marking);
graph_accessors!(CoverabilityGraph, OmegaMarking);

impl CoverabilityGraph {
    pub fn is_finite(&self) -> bool {
        self.markings.iter().all(OmegaMarking::is_finite)
    }
}

impl PetriNet {
    pub fn reachability_graph(&self) -> Result<ReachabilityGraph, NetError> {
        self.reachability_graph_with_limit(DEFAULT_STATE_LIMIT)
    }

    /// Breadth-first exploration from the initial marking; states are named
    /// `s0, s1, ...` in discovery order and transitions are tried in
    /// declaration order.
    pub fn reachability_graph_with_limit(&self, limit: usize) -> Result<ReachabilityGraph, NetError> {
        let mut markings = vec![self.initial_marking().clone()];
        let mut parent = vec![None];
        let mut index = HashMap::from([(markings[0].clone(), 0)]);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0]);
        while let Some(s) = queue.pop_front() {
            for t in self.transitions() {
                if !self.is_enabled(&markings[s], t) {
                    continue;
                }
                let next = self.fire(&markings[s], t).expect("checked enabled");
                let target = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        if markings.len() >= limit {
                            return Err(NetError::StateLimitExceeded(limit));
                        }
                        let id = markings.len();
                        index.insert(next.clone(), id);
                        markings.push(next);
                        parent.push(Some((s, t)));
                        queue.push_back(id);
                        id
                    }
                };
                edges.push((s, t, target));
            }
        }
        let lts = build_lts(self, markings.len(), &edges);
        Ok(ReachabilityGraph {
            lts,
            markings,
            edges,
            parent,
        })
    }

    /// Breadth-first Karp–Miller construction. A new marking is accelerated
    /// against its ancestors on the discovery path: every place it strictly
    /// exceeds on a covered ancestor becomes ω. Markings equal to any
    /// previously seen node are merged.
    pub fn coverability_graph(&self) -> CoverabilityGraph {
        let mut markings = vec![self.initial_marking().to_omega()];
        let mut parent: Vec<Option<(StateId, TransitionId)>> = vec![None];
        let mut index = HashMap::from([(markings[0].clone(), 0)]);
        let mut edges = Vec::new();
        let mut queue = VecDeque::from([0]);
        while let Some(s) = queue.pop_front() {
            for t in self.transitions() {
                let Some(mut next) = self.fire_omega(&markings[s], t) else {
                    continue;
                };
                accelerate(&mut next, s, &markings, &parent);
                let target = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = markings.len();
                        index.insert(next.clone(), id);
                        markings.push(next);
                        parent.push(Some((s, t)));
                        queue.push_back(id);
                        id
                    }
                };
                edges.push((s, t, target));
            }
        }
        let lts = build_lts(self, markings.len(), &edges);
        CoverabilityGraph {
            lts,
            markings,
            edges,
            parent,
        }
    }
}

fn accelerate(
    next: &mut OmegaMarking,
    from: StateId,
    markings: &[OmegaMarking],
    parent: &[Option<(StateId, TransitionId)>],
) {
    loop {
        let mut changed = false;
        let mut ancestor = Some(from);
        while let Some(v) = ancestor {
            let m = &markings[v];
            if m.le(next) && m != next {
                for p in 0..m.tokens().len() {
                    if m.get(p) != next.get(p) && !next.get(p).is_omega() {
                        next.set(p, super::Tokens::Omega);
                        changed = true;
                    }
                }
            }
            ancestor = parent[v].map(|(prev, _)| prev);
        }
        if !changed {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::n1;
    use super::*;

    #[test]
    fn n1_reachability_graph_matches_fixture() {
        let net = n1();
        let rg = net.reachability_graph().unwrap();
        assert_eq!(rg.num_states(), 7);
        assert_eq!(rg.lts().num_arcs(), 10);
        assert_eq!(
            rg.marking(1).display(&net),
            "[ [p0:0] [p1:1] [p2:0] [p3:0] [p4:2] ]"
        );
        let cg = net.coverability_graph();
        assert!(cg.is_finite());
        assert_eq!(cg.edges(), rg.edges());
        for s in 0..7 {
            assert_eq!(cg.marking(s), &rg.marking(s).to_omega());
        }
    }

    #[test]
    fn unbounded_producer() {
        let mut net = PetriNet::new();
        let p = net.add_place("p").unwrap();
        let t = net.add_transition("t").unwrap();
        net.add_flow_to_place(t, p, 1);
        assert_eq!(
            net.reachability_graph_with_limit(100).unwrap_err(),
            NetError::StateLimitExceeded(100)
        );
        let cg = net.coverability_graph();
        assert_eq!(cg.num_states(), 2);
        assert!(cg.marking(1).get(p).is_omega());
        assert!(cg.edges().contains(&(1, t, 1)));
    }

    #[test]
    fn no_transitions_single_state() {
        let mut net = PetriNet::new();
        net.add_place("p").unwrap();
        let rg = net.reachability_graph().unwrap();
        assert_eq!(rg.num_states(), 1);
        assert_eq!(rg.lts().num_arcs(), 0);
    }
}
