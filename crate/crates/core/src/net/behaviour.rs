use std::collections::{HashSet, VecDeque};

use super::{Marking, NetError, PetriNet, PlaceId, ReachabilityGraph, TransitionId};
use crate::lts::PersistenceWitness;
use crate::Verdict;

/// A place exceeding the bound and a shortest firing sequence that shows it.
/// For plain unboundedness the sequence leads to the first ω-marking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundednessWitness {
    pub place: PlaceId,
    pub sequence: Vec<TransitionId>,
}

/// Why a conflict-freeness property (BCF, BiCF, persistence) fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConflictWitness {
    /// The property is only defined for plain nets.
    NotPlain,
    /// After `sequence`, `first` and `second` are both enabled but in conflict.
    Conflict {
        sequence: Vec<TransitionId>,
        first: TransitionId,
        second: TransitionId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordOutcome {
    pub accepted: bool,
    /// Length of the longest fireable prefix of the word.
    pub prefix_len: usize,
    /// A firing sequence realising that prefix.
    pub sequence: Vec<TransitionId>,
}

impl PetriNet {
    /// Bounded iff the coverability graph has no ω.
    pub fn bounded(&self) -> Verdict<BoundednessWitness> {
        let cg = self.coverability_graph();
        cg.markings()
            .iter()
            .position(|m| !m.is_finite())
            .map(|s| BoundednessWitness {
                place: cg.marking(s).first_omega().expect("not finite"),
                sequence: cg.path_to(s),
            })
            .into()
    }

    /// k-bounded iff no reachable marking puts more than `k` tokens on a
    /// place. The search is breadth-first and stops at the first violation,
    /// so it terminates on unbounded nets too.
    pub fn k_bounded(&self, k: u64) -> Verdict<BoundednessWitness> {
        let violation = |m: &Marking| m.tokens().iter().position(|&n| n > k);
        let initial = self.initial_marking().clone();
        if let Some(place) = violation(&initial) {
            return Verdict::Violated(BoundednessWitness {
                place,
                sequence: Vec::new(),
            });
        }
        let mut seen = HashSet::from([initial.clone()]);
        let mut queue = VecDeque::from([(initial, Vec::new())]);
        while let Some((m, sequence)) = queue.pop_front() {
            for t in self.transitions() {
                let Ok(next) = self.fire(&m, t) else {
                    continue;
                };
                if !seen.insert(next.clone()) {
                    continue;
                }
                let mut seq: Vec<TransitionId> = sequence.clone();
                seq.push(t);
                if let Some(place) = violation(&next) {
                    return Verdict::Violated(BoundednessWitness {
                        place,
                        sequence: seq,
                    });
                }
                queue.push_back((next, seq));
            }
        }
        Verdict::Holds
    }

    /// Every transition labels some arc of the coverability graph.
    pub fn weakly_live(&self) -> Verdict<TransitionId> {
        let cg = self.coverability_graph();
        let mut fired = vec![false; self.num_transitions()];
        for &(_, t, _) in cg.edges() {
            fired[t] = true;
        }
        fired.iter().position(|f| !f).into()
    }

    /// The reachability graph, after checking boundedness on the coverability
    /// graph.
    pub fn bounded_reachability_graph(&self) -> Result<ReachabilityGraph, NetError> {
        if let Some(w) = self.bounded().into_witness() {
            return Err(NetError::Unbounded(self.place_name(w.place).to_string()));
        }
        self.reachability_graph()
    }

    pub fn persistent(&self) -> Result<Verdict<ConflictWitness>, NetError> {
        let rg = self.bounded_reachability_graph()?;
        let verdict = rg
            .lts()
            .is_persistent()
            .map_err(|e| NetError::InvalidArgument(e.to_string()))?;
        let to_transition = |label| {
            self.transitions_with_label(rg.lts().label_name(label))
                .next()
                .expect("every label stems from a transition")
        };
        Ok(verdict.map(|PersistenceWitness { state, first, second }| {
            ConflictWitness::Conflict {
                sequence: rg.path_to(state),
                first: to_transition(first),
                second: to_transition(second),
            }
        }))
    }

    /// Witness: a firing sequence to a marking from which M0 is unreachable.
    pub fn reversible(&self) -> Result<Verdict<Vec<TransitionId>>, NetError> {
        let rg = self.bounded_reachability_graph()?;
        Ok(rg.lts().is_reversible().map(|s| rg.path_to(s)))
    }

    fn conflict_search(
        &self,
        in_conflict: impl Fn(&Marking, TransitionId, TransitionId) -> bool,
    ) -> Result<Verdict<ConflictWitness>, NetError> {
        if !self.is_plain().holds() {
            return Ok(Verdict::Violated(ConflictWitness::NotPlain));
        }
        let rg = self.bounded_reachability_graph()?;
        for (s, m) in rg.markings().iter().enumerate() {
            let enabled: Vec<TransitionId> =
                self.transitions().filter(|&t| self.is_enabled(m, t)).collect();
            for (i, &t) in enabled.iter().enumerate() {
                for &u in &enabled[i + 1..] {
                    if in_conflict(m, t, u) {
                        return Ok(Verdict::Violated(ConflictWitness::Conflict {
                            sequence: rg.path_to(s),
                            first: t,
                            second: u,
                        }));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Behaviourally conflict-free: simultaneously enabled transitions have
    /// disjoint pre-sets.
    pub fn is_bcf(&self) -> Result<Verdict<ConflictWitness>, NetError> {
        self.conflict_search(|_, t, u| {
            self.preset(t)
                .iter()
                .any(|&(p, _)| self.weight_to_transition(p, u) > 0)
        })
    }

    /// Binary-conflict-free: simultaneously enabled transitions are enabled
    /// concurrently, i.e. M(p) >= F(p,t) + F(p,u).
    pub fn is_bicf(&self) -> Result<Verdict<ConflictWitness>, NetError> {
        self.conflict_search(|m, t, u| {
            self.places().any(|p| {
                m.get(p) < self.weight_to_transition(p, t) + self.weight_to_transition(p, u)
            })
        })
    }

    /// Whether some firing sequence is labelled with `word`. The search is
    /// bounded by the word length, so it terminates on unbounded nets.
    pub fn word_in_language<S: AsRef<str>>(&self, word: &[S]) -> Result<WordOutcome, NetError> {
        let labels = self.labels();
        if let Some(unknown) = word.iter().find(|w| !labels.contains(&w.as_ref())) {
            return Err(NetError::UnknownLabel(unknown.as_ref().to_string()));
        }
        let mut best = WordOutcome {
            accepted: word.is_empty(),
            prefix_len: 0,
            sequence: Vec::new(),
        };
        let mut visited = HashSet::new();
        let mut stack = vec![(self.initial_marking().clone(), Vec::new())];
        while let Some((m, sequence)) = stack.pop() {
            let depth = sequence.len();
            if depth > best.prefix_len {
                best.prefix_len = depth;
                best.sequence = sequence.clone();
            }
            if depth == word.len() {
                best.accepted = true;
                break;
            }
            let candidates: Vec<TransitionId> =
                self.transitions_with_label(word[depth].as_ref()).collect();
            for &t in candidates.iter().rev() {
                if let Ok(next) = self.fire(&m, t) {
                    if visited.insert((depth + 1, next.clone())) {
                        let mut seq = sequence.clone();
                        seq.push(t);
                        stack.push((next, seq));
                    }
                }
            }
        }
        Ok(best)
    }

    /// Transition names of a sequence, for reports.
    pub fn sequence_names(&self, sequence: &[TransitionId]) -> Vec<String> {
        sequence
            .iter()
            .map(|&t| self.transition_name(t).to_string())
            .collect()
    }
}
