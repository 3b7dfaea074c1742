//! Place/transition Petri nets.

mod behaviour;
mod graph;
mod marking;
mod separability;
mod structure;

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

pub use behaviour::{BoundednessWitness, ConflictWitness, WordOutcome};
pub use graph::{CoverabilityGraph, ReachabilityGraph, DEFAULT_STATE_LIMIT};
pub use marking::{Marking, OmegaMarking, Tokens};
pub use separability::{Separability, SeparabilityMode};
pub use structure::{Connectivity, Element};

pub type PlaceId = usize;
pub type TransitionId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("identifier '{0}' is already declared")]
    DuplicateName(String),
    #[error("unknown place '{0}'")]
    UnknownPlace(String),
    #[error("unknown transition '{0}'")]
    UnknownTransition(String),
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("transition '{transition}' is not enabled: place '{place}' holds too few tokens")]
    NotEnabled { transition: String, place: String },
    #[error("more than {0} reachable markings; the net is possibly unbounded, try the coverability module")]
    StateLimitExceeded(usize),
    #[error("the net is unbounded (place '{0}')")]
    Unbounded(String),
    #[error("the initial marking is not divisible by {0}")]
    NotDivisible(u64),
    #[error("{0}")]
    InvalidArgument(String),
}

#[derive(Clone, Debug)]
struct Transition {
    name: String,
    label: String,
    location: Option<String>,
    pre: Vec<(PlaceId, u64)>,
    post: Vec<(PlaceId, u64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Place(PlaceId),
    Transition(TransitionId),
}

/// Pre- and post-sets of places, derived from the transition flows.
#[derive(Clone, Debug, Default)]
struct PlaceAdjacency {
    /// Transitions that put tokens on the place.
    producers: Vec<Vec<TransitionId>>,
    /// Transitions that take tokens from the place.
    consumers: Vec<Vec<TransitionId>>,
}

/// An arc-weighted, labelled place/transition net with an initial marking.
///
/// Flows are stored per transition; the place-side view is computed on demand
/// and cached until the next structural change.
#[derive(Clone, Debug, Default)]
pub struct PetriNet {
    name: String,
    description: String,
    places: Vec<String>,
    transitions: Vec<Transition>,
    names: HashMap<String, Node>,
    initial: Marking,
    adjacency: OnceLock<PlaceAdjacency>,
}

fn add_weight(list: &mut Vec<(PlaceId, u64)>, place: PlaceId, weight: u64) {
    if weight == 0 {
        return;
    }
    match list.iter_mut().find(|(p, _)| *p == place) {
        Some((_, w)) => *w += weight,
        None => {
            list.push((place, weight));
            list.sort_unstable();
        }
    }
}

fn weight_of(list: &[(PlaceId, u64)], place: PlaceId) -> u64 {
    list.iter()
        .find(|(p, _)| *p == place)
        .map_or(0, |(_, w)| *w)
}

impl PetriNet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn set_description(&mut self, description: impl Into<String>) {
        self.description = description.into();
    }

    fn invalidate(&mut self) {
        self.adjacency = OnceLock::new();
    }

    pub fn add_place(&mut self, name: &str) -> Result<PlaceId, NetError> {
        if self.names.contains_key(name) {
            return Err(NetError::DuplicateName(name.to_string()));
        }
        let id = self.places.len();
        self.places.push(name.to_string());
        self.names.insert(name.to_string(), Node::Place(id));
        self.initial.push(0);
        self.invalidate();
        Ok(id)
    }

    /// Adds a transition labelled with its own name.
    pub fn add_transition(&mut self, name: &str) -> Result<TransitionId, NetError> {
        if self.names.contains_key(name) {
            return Err(NetError::DuplicateName(name.to_string()));
        }
        let id = self.transitions.len();
        self.transitions.push(Transition {
            name: name.to_string(),
            label: name.to_string(),
            location: None,
            pre: Vec::new(),
            post: Vec::new(),
        });
        self.names.insert(name.to_string(), Node::Transition(id));
        self.invalidate();
        Ok(id)
    }

    pub fn set_label(&mut self, t: TransitionId, label: impl Into<String>) {
        self.transitions[t].label = label.into();
    }

    pub fn set_location(&mut self, t: TransitionId, location: Option<String>) {
        self.transitions[t].location = location;
    }

    /// Adds `weight` to F(p, t).
    pub fn add_flow_to_transition(&mut self, p: PlaceId, t: TransitionId, weight: u64) {
        add_weight(&mut self.transitions[t].pre, p, weight);
        self.invalidate();
    }

    /// Adds `weight` to F(t, p).
    pub fn add_flow_to_place(&mut self, t: TransitionId, p: PlaceId, weight: u64) {
        add_weight(&mut self.transitions[t].post, p, weight);
        self.invalidate();
    }

    pub fn set_initial_tokens(&mut self, p: PlaceId, tokens: u64) {
        self.initial.set(p, tokens);
    }

    pub fn set_initial_marking(&mut self, marking: Marking) {
        assert_eq!(marking.len(), self.places.len());
        self.initial = marking;
    }

    pub fn initial_marking(&self) -> &Marking {
        &self.initial
    }

    pub fn num_places(&self) -> usize {
        self.places.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }

    pub fn places(&self) -> std::ops::Range<PlaceId> {
        0..self.places.len()
    }

    pub fn transitions(&self) -> std::ops::Range<TransitionId> {
        0..self.transitions.len()
    }

    pub fn place_name(&self, p: PlaceId) -> &str {
        &self.places[p]
    }

    pub fn transition_name(&self, t: TransitionId) -> &str {
        &self.transitions[t].name
    }

    pub fn label(&self, t: TransitionId) -> &str {
        &self.transitions[t].label
    }

    pub fn location(&self, t: TransitionId) -> Option<&str> {
        self.transitions[t].location.as_deref()
    }

    pub fn place_id(&self, name: &str) -> Option<PlaceId> {
        match self.names.get(name) {
            Some(Node::Place(p)) => Some(*p),
            _ => None,
        }
    }

    pub fn transition_id(&self, name: &str) -> Option<TransitionId> {
        match self.names.get(name) {
            Some(Node::Transition(t)) => Some(*t),
            _ => None,
        }
    }

    /// Transitions carrying `label`, in declaration order.
    pub fn transitions_with_label<'a>(
        &'a self,
        label: &'a str,
    ) -> impl Iterator<Item = TransitionId> + 'a {
        self.transitions().filter(move |&t| self.label(t) == label)
    }

    /// Distinct labels in order of first use.
    pub fn labels(&self) -> Vec<&str> {
        let mut seen = Vec::new();
        for t in &self.transitions {
            if !seen.contains(&t.label.as_str()) {
                seen.push(t.label.as_str());
            }
        }
        seen
    }

    /// Non-zero F(p, t) entries of `t`, sorted by place.
    pub fn preset(&self, t: TransitionId) -> &[(PlaceId, u64)] {
        &self.transitions[t].pre
    }

    /// Non-zero F(t, p) entries of `t`, sorted by place.
    pub fn postset(&self, t: TransitionId) -> &[(PlaceId, u64)] {
        &self.transitions[t].post
    }

    /// F(p, t)
    pub fn weight_to_transition(&self, p: PlaceId, t: TransitionId) -> u64 {
        weight_of(&self.transitions[t].pre, p)
    }

    /// F(t, p)
    pub fn weight_to_place(&self, t: TransitionId, p: PlaceId) -> u64 {
        weight_of(&self.transitions[t].post, p)
    }

    fn adjacency(&self) -> &PlaceAdjacency {
        self.adjacency.get_or_init(|| {
            let mut adj = PlaceAdjacency {
                producers: vec![Vec::new(); self.places.len()],
                consumers: vec![Vec::new(); self.places.len()],
            };
            for (t, tr) in self.transitions.iter().enumerate() {
                for &(p, _) in &tr.pre {
                    adj.consumers[p].push(t);
                }
                for &(p, _) in &tr.post {
                    adj.producers[p].push(t);
                }
            }
            adj
        })
    }

    /// The pre-set •p: transitions with F(t, p) > 0.
    pub fn place_preset(&self, p: PlaceId) -> &[TransitionId] {
        &self.adjacency().producers[p]
    }

    /// The post-set p•: transitions with F(p, t) > 0.
    pub fn place_postset(&self, p: PlaceId) -> &[TransitionId] {
        &self.adjacency().consumers[p]
    }

    pub fn is_enabled(&self, marking: &Marking, t: TransitionId) -> bool {
        self.deficient_place(marking, t).is_none()
    }

    fn deficient_place(&self, marking: &Marking, t: TransitionId) -> Option<PlaceId> {
        self.transitions[t]
            .pre
            .iter()
            .find(|&&(p, w)| marking.get(p) < w)
            .map(|&(p, _)| p)
    }

    pub fn fire(&self, marking: &Marking, t: TransitionId) -> Result<Marking, NetError> {
        if let Some(p) = self.deficient_place(marking, t) {
            return Err(NetError::NotEnabled {
                transition: self.transition_name(t).to_string(),
                place: self.place_name(p).to_string(),
            });
        }
        let mut next = marking.clone();
        for &(p, w) in &self.transitions[t].pre {
            next.set(p, next.get(p) - w);
        }
        for &(p, w) in &self.transitions[t].post {
            next.set(p, next.get(p) + w);
        }
        Ok(next)
    }

    pub fn is_enabled_omega(&self, marking: &OmegaMarking, t: TransitionId) -> bool {
        self.transitions[t]
            .pre
            .iter()
            .all(|&(p, w)| marking.get(p).covers(w))
    }

    /// Fires `t` under ω-semantics; `None` if not enabled.
    pub fn fire_omega(&self, marking: &OmegaMarking, t: TransitionId) -> Option<OmegaMarking> {
        if !self.is_enabled_omega(marking, t) {
            return None;
        }
        let mut next = marking.clone();
        for &(p, w) in &self.transitions[t].pre {
            next.set(p, next.get(p).minus(w));
        }
        for &(p, w) in &self.transitions[t].post {
            next.set(p, next.get(p).plus(w));
        }
        Some(next)
    }

    /// Fires a sequence of transitions from the initial marking.
    pub fn fire_sequence(&self, sequence: &[TransitionId]) -> Result<Marking, NetError> {
        sequence
            .iter()
            .try_fold(self.initial.clone(), |m, &t| self.fire(&m, t))
    }

    /// gcd of the initial token counts; 0 if there are none.
    pub fn gcd_initial_marking(&self) -> u64 {
        use num_integer::Integer;
        self.initial.tokens().iter().fold(0u64, |acc, &x| acc.gcd(&x))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// N1 of the running example.
    pub(crate) fn n1() -> PetriNet {
        let mut net = PetriNet::new();
        let p: Vec<PlaceId> = (0..5)
            .map(|i| net.add_place(&format!("p{i}")).unwrap())
            .collect();
        let [a, b, c, d] = ["a", "b", "c", "d"].map(|t| net.add_transition(t).unwrap());
        net.add_flow_to_transition(p[0], a, 1);
        net.add_flow_to_place(a, p[4], 1);
        net.add_flow_to_transition(p[4], b, 1);
        net.add_flow_to_transition(p[1], b, 1);
        net.add_flow_to_place(b, p[3], 1);
        net.add_flow_to_transition(p[4], c, 1);
        net.add_flow_to_transition(p[3], c, 1);
        for &q in &[p[0], p[1], p[2]] {
            net.add_flow_to_place(c, q, 1);
        }
        net.add_flow_to_transition(p[2], d, 1);
        net.add_flow_to_place(d, p[4], 1);
        for &q in &[p[0], p[1], p[4]] {
            net.set_initial_tokens(q, 1);
        }
        net
    }

    #[test]
    fn firing_rule() {
        let net = n1();
        let m1 = net.fire(net.initial_marking(), 0).unwrap();
        assert_eq!(m1.tokens(), &[0, 1, 0, 0, 2]);
        assert_eq!(
            net.fire(net.initial_marking(), 3),
            Err(NetError::NotEnabled {
                transition: "d".into(),
                place: "p2".into()
            })
        );
        assert_eq!(net.gcd_initial_marking(), 1);
    }

    #[test]
    fn empty_preset_is_always_enabled() {
        let mut net = PetriNet::new();
        let p = net.add_place("p").unwrap();
        let t = net.add_transition("t").unwrap();
        net.add_flow_to_place(t, p, 1);
        assert!(net.is_enabled(net.initial_marking(), t));
    }

    #[test]
    fn places_and_transitions_are_disjoint() {
        let mut net = PetriNet::new();
        net.add_place("x").unwrap();
        assert_eq!(net.add_transition("x"), Err(NetError::DuplicateName("x".into())));
    }

    #[test]
    fn adjacency_cache_follows_mutation() {
        let mut net = PetriNet::new();
        let p = net.add_place("p").unwrap();
        let t = net.add_transition("t").unwrap();
        assert!(net.place_postset(p).is_empty());
        net.add_flow_to_transition(p, t, 2);
        assert_eq!(net.place_postset(p), &[t]);
        assert_eq!(net.weight_to_transition(p, t), 2);
    }
}
