//! Finite labelled transition systems.
//!
//! States and labels are addressed by dense indices in insertion order, which
//! also fixes the iteration order of every analysis.

mod analysis;
mod cycles;
mod equivalence;
mod parikh;
mod tree;

use std::collections::{HashMap, HashSet};

use thiserror::Error;

pub use analysis::{NondeterminismWitness, PersistenceWitness, ReachabilityWitness};
pub(crate) use analysis::tarjan;
pub use cycles::DEFAULT_CYCLE_LIMIT;
pub use equivalence::{Isomorphism, LanguageDifference};
pub use parikh::ParikhVector;
pub use tree::SpanningTree;

pub type StateId = usize;
pub type LabelId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LtsError {
    #[error("identifier '{0}' is already declared")]
    DuplicateName(String),
    #[error("unknown state '{0}'")]
    UnknownState(String),
    #[error("unknown label '{0}'")]
    UnknownLabel(String),
    #[error("state '{0}' is not reachable from the initial state")]
    Unreachable(String),
    #[error("transition system is not deterministic: state '{state}' has two '{label}' arcs")]
    Nondeterministic { state: String, label: String },
    #[error("more than {0} cycles enumerated; raise the cycle limit")]
    CycleLimitExceeded(usize),
}

/// A single arc `source [label> target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub source: StateId,
    pub label: LabelId,
    pub target: StateId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Label {
    name: String,
    location: Option<String>,
}

/// A finite labelled transition system with a designated initial state.
#[derive(Clone, Debug)]
pub struct Lts {
    name: String,
    description: String,
    states: Vec<String>,
    labels: Vec<Label>,
    names: HashMap<String, Node>,
    arcs: Vec<Arc>,
    arc_set: HashSet<Arc>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    initial: StateId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    State(StateId),
    Label(LabelId),
}

impl Lts {
    /// Creates a transition system containing only its initial state.
    pub fn new(initial_state: &str) -> Self {
        let mut lts = Lts {
            name: String::new(),
            description: String::new(),
            states: Vec::new(),
            labels: Vec::new(),
            names: HashMap::new(),
            arcs: Vec::new(),
            arc_set: HashSet::new(),
            outgoing: Vec::new(),
            incoming: Vec::new(),
            initial: 0,
        };
        lts.add_state(initial_state)
            .expect("fresh transition system has no names");
        lts
    }

    /// The linear transition system `s0 [w1> s1 [w2> ... sn` of a word.
    /// The label set is the set of distinct letters in order of first use.
    pub fn from_word<S: AsRef<str>>(word: &[S]) -> Self {
        let mut lts = Lts::new("s0");
        for (i, letter) in word.iter().enumerate() {
            let label = lts.ensure_label(letter.as_ref());
            let next = lts
                .add_state(&format!("s{}", i + 1))
                .expect("state names of a word are fresh");
            lts.add_arc(i, label, next);
        }
        lts
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

    pub fn add_state(&mut self, name: &str) -> Result<StateId, LtsError> {
        if self.names.contains_key(name) {
            return Err(LtsError::DuplicateName(name.to_string()));
        }
        let id = self.states.len();
        self.states.push(name.to_string());
        self.names.insert(name.to_string(), Node::State(id));
        self.outgoing.push(Vec::new());
        self.incoming.push(Vec::new());
        Ok(id)
    }

    pub fn add_label(&mut self, name: &str) -> Result<LabelId, LtsError> {
        if self.names.contains_key(name) {
            return Err(LtsError::DuplicateName(name.to_string()));
        }
        let id = self.labels.len();
        self.labels.push(Label {
            name: name.to_string(),
            location: None,
        });
        self.names.insert(name.to_string(), Node::Label(id));
        Ok(id)
    }

    /// Returns the label with this name, declaring it first if necessary.
    ///
    /// Panics if the name is already used by a state.
    pub fn ensure_label(&mut self, name: &str) -> LabelId {
        match self.label_id(name) {
            Some(id) => id,
            None => self.add_label(name).expect("name clashes with a state"),
        }
    }

    pub fn set_location(&mut self, label: LabelId, location: Option<String>) {
        self.labels[label].location = location;
    }

    pub fn set_initial(&mut self, state: StateId) {
        assert!(state < self.states.len());
        self.initial = state;
    }

    /// Adds an arc. Returns false if the arc was already present.
    pub fn add_arc(&mut self, source: StateId, label: LabelId, target: StateId) -> bool {
        assert!(source < self.states.len() && target < self.states.len());
        assert!(label < self.labels.len());
        let arc = Arc {
            source,
            label,
            target,
        };
        if !self.arc_set.insert(arc) {
            return false;
        }
        let index = self.arcs.len();
        self.arcs.push(arc);
        self.outgoing[source].push(index);
        self.incoming[target].push(index);
        true
    }

    pub fn add_arc_by_name(&mut self, source: &str, label: &str, target: &str) -> Result<bool, LtsError> {
        let s = self
            .state_id(source)
            .ok_or_else(|| LtsError::UnknownState(source.to_string()))?;
        let t = self
            .label_id(label)
            .ok_or_else(|| LtsError::UnknownLabel(label.to_string()))?;
        let s2 = self
            .state_id(target)
            .ok_or_else(|| LtsError::UnknownState(target.to_string()))?;
        Ok(self.add_arc(s, t, s2))
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_labels(&self) -> usize {
        self.labels.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn state_name(&self, state: StateId) -> &str {
        &self.states[state]
    }

    pub fn label_name(&self, label: LabelId) -> &str {
        &self.labels[label].name
    }

    pub fn location(&self, label: LabelId) -> Option<&str> {
        self.labels[label].location.as_deref()
    }

    pub fn has_locations(&self) -> bool {
        self.labels.iter().any(|l| l.location.is_some())
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        match self.names.get(name) {
            Some(Node::State(id)) => Some(*id),
            _ => None,
        }
    }

    pub fn label_id(&self, name: &str) -> Option<LabelId> {
        match self.names.get(name) {
            Some(Node::Label(id)) => Some(*id),
            _ => None,
        }
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.states.len()
    }

    pub fn labels(&self) -> std::ops::Range<LabelId> {
        0..self.labels.len()
    }

    pub fn label_names(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(|l| l.name.as_str())
    }

    /// All arcs in insertion order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> Arc {
        self.arcs[index]
    }

    /// Outgoing arcs of a state in insertion order.
    pub fn outgoing(&self, state: StateId) -> impl Iterator<Item = &Arc> + '_ {
        self.outgoing[state].iter().map(move |&i| &self.arcs[i])
    }

    pub(crate) fn outgoing_indices(&self, state: StateId) -> &[usize] {
        &self.outgoing[state]
    }

    pub fn incoming(&self, state: StateId) -> impl Iterator<Item = &Arc> + '_ {
        self.incoming[state].iter().map(move |&i| &self.arcs[i])
    }

    pub fn has_arc(&self, source: StateId, label: LabelId, target: StateId) -> bool {
        self.arc_set.contains(&Arc {
            source,
            label,
            target,
        })
    }

    pub fn is_enabled(&self, state: StateId, label: LabelId) -> bool {
        self.outgoing(state).any(|a| a.label == label)
    }

    /// The first successor of `state` under `label`, if any.
    pub fn successor(&self, state: StateId, label: LabelId) -> Option<StateId> {
        self.outgoing(state).find(|a| a.label == label).map(|a| a.target)
    }

    /// Follows a label sequence from `state` in a deterministic system.
    pub fn replay(&self, state: StateId, labels: &[LabelId]) -> Option<StateId> {
        labels
            .iter()
            .try_fold(state, |s, &label| self.successor(s, label))
    }
}
