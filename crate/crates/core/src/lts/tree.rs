use std::collections::VecDeque;

use super::{Lts, LtsError, ParikhVector, StateId};

/// Breadth-first spanning tree rooted at the initial state.
///
/// Children are explored in arc insertion order, so the tree is a pure
/// function of the transition system.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    parent_arc: Vec<Option<usize>>,
    parikh: Vec<ParikhVector>,
    chords: Vec<usize>,
    bfs_order: Vec<StateId>,
}

impl SpanningTree {
    pub fn new(lts: &Lts) -> Result<Self, LtsError> {
        let n = lts.num_states();
        let mut parent_arc = vec![None; n];
        let mut parikh: Vec<Option<ParikhVector>> = vec![None; n];
        let mut bfs_order = Vec::with_capacity(n);
        let mut chords = Vec::new();

        parikh[lts.initial()] = Some(ParikhVector::zero(lts.num_labels()));
        let mut queue = VecDeque::from([lts.initial()]);
        while let Some(s) = queue.pop_front() {
            bfs_order.push(s);
            for &index in lts.outgoing_indices(s) {
                let arc = lts.arc(index);
                if parikh[arc.target].is_none() {
                    let mut pv = parikh[s].clone().unwrap();
                    pv.increment(arc.label);
                    parikh[arc.target] = Some(pv);
                    parent_arc[arc.target] = Some(index);
                    queue.push_back(arc.target);
                } else {
                    chords.push(index);
                }
            }
        }
        if let Some(s) = parikh.iter().position(Option::is_none) {
            return Err(LtsError::Unreachable(lts.state_name(s).to_string()));
        }
        chords.sort_unstable();
        Ok(SpanningTree {
            parent_arc,
            parikh: parikh.into_iter().map(Option::unwrap).collect(),
            chords,
            bfs_order,
        })
    }

    /// Index (into [`Lts::arcs`]) of the tree arc entering `state`.
    pub fn parent_arc(&self, state: StateId) -> Option<usize> {
        self.parent_arc[state]
    }

    /// Parikh vector of the tree path from the initial state to `state`.
    pub fn parikh(&self, state: StateId) -> &ParikhVector {
        &self.parikh[state]
    }

    /// Non-tree arcs, in insertion order.
    pub fn chords(&self) -> &[usize] {
        &self.chords
    }

    pub fn bfs_order(&self) -> &[StateId] {
        &self.bfs_order
    }

    /// Labels along the tree path from the initial state to `state`.
    pub fn path(&self, lts: &Lts, state: StateId) -> Vec<usize> {
        let mut labels = Vec::new();
        let mut s = state;
        while let Some(index) = self.parent_arc[s] {
            let arc = lts.arc(index);
            labels.push(arc.label);
            s = arc.source;
        }
        labels.reverse();
        labels
    }

    /// For every chord `s [t> s'` the vector `Psi_s + 1_t - Psi_s'`; these
    /// span the Parikh vectors of all cycles of the system.
    pub fn cycle_rows(&self, lts: &Lts) -> Vec<Vec<i64>> {
        self.chords
            .iter()
            .map(|&index| {
                let arc = lts.arc(index);
                let mut row = self.parikh[arc.source].diff(&self.parikh[arc.target]);
                row[arc.label] += 1;
                row
            })
            .collect()
    }
}
