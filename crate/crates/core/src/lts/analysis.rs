use std::collections::VecDeque;

use super::{LabelId, Lts, LtsError, SpanningTree, StateId};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReachabilityWitness {
    UnreachableState(StateId),
    UnusedLabel(LabelId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondeterminismWitness {
    pub state: StateId,
    pub label: LabelId,
    pub targets: (StateId, StateId),
}

/// A reachable state enabling two labels whose diamond does not close.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceWitness {
    pub state: StateId,
    pub first: LabelId,
    pub second: LabelId,
}

impl Lts {
    /// States reachable from the initial state, in breadth-first order.
    pub fn reachable_states(&self) -> Vec<StateId> {
        self.reachable_from(self.initial())
    }

    pub fn reachable_from(&self, start: StateId) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for arc in self.outgoing(s) {
                if !seen[arc.target] {
                    seen[arc.target] = true;
                    queue.push_back(arc.target);
                }
            }
        }
        order
    }

    fn reachable_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.num_states()];
        for s in self.reachable_states() {
            mask[s] = true;
        }
        mask
    }

    pub fn is_totally_reachable(&self) -> Verdict<ReachabilityWitness> {
        let reachable = self.reachable_mask();
        if let Some(s) = reachable.iter().position(|&r| !r) {
            return Verdict::Violated(ReachabilityWitness::UnreachableState(s));
        }
        let mut used = vec![false; self.num_labels()];
        for arc in self.arcs() {
            used[arc.label] = true;
        }
        match used.iter().position(|&u| !u) {
            Some(t) => Verdict::Violated(ReachabilityWitness::UnusedLabel(t)),
            None => Verdict::Holds,
        }
    }

    pub fn is_deterministic(&self) -> Verdict<NondeterminismWitness> {
        for s in self.reachable_states() {
            let mut target: Vec<Option<StateId>> = vec![None; self.num_labels()];
            for arc in self.outgoing(s) {
                match target[arc.label] {
                    Some(other) if other != arc.target => {
                        return Verdict::Violated(NondeterminismWitness {
                            state: s,
                            label: arc.label,
                            targets: (other, arc.target),
                        });
                    }
                    _ => target[arc.label] = Some(arc.target),
                }
            }
        }
        Verdict::Holds
    }

    pub(crate) fn require_deterministic(&self) -> Result<(), LtsError> {
        match self.is_deterministic() {
            Verdict::Holds => Ok(()),
            Verdict::Violated(w) => Err(LtsError::Nondeterministic {
                state: self.state_name(w.state).to_string(),
                label: self.label_name(w.label).to_string(),
            }),
        }
    }

    /// Persistence is only meaningful for deterministic systems, where the
    /// closing state of a diamond is unique.
    pub fn is_persistent(&self) -> Result<Verdict<PersistenceWitness>, LtsError> {
        self.require_deterministic()?;
        for s in self.reachable_states() {
            let enabled: Vec<(LabelId, StateId)> =
                self.outgoing(s).map(|a| (a.label, a.target)).collect();
            for (i, &(t, after_t)) in enabled.iter().enumerate() {
                for &(u, after_u) in &enabled[i + 1..] {
                    let tu = self.successor(after_t, u);
                    let ut = self.successor(after_u, t);
                    if tu.is_none() || tu != ut {
                        return Ok(Verdict::Violated(PersistenceWitness {
                            state: s,
                            first: t,
                            second: u,
                        }));
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }

    /// Whether the initial state can be reached back from every reachable
    /// state. The witness is the first offending state in breadth-first order.
    pub fn is_reversible(&self) -> Verdict<StateId> {
        let mut coreachable = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.initial()]);
        coreachable[self.initial()] = true;
        while let Some(s) = queue.pop_front() {
            for arc in self.incoming(s) {
                if !coreachable[arc.source] {
                    coreachable[arc.source] = true;
                    queue.push_back(arc.source);
                }
            }
        }
        self.reachable_states()
            .into_iter()
            .find(|&s| !coreachable[s])
            .into()
    }

    pub fn spanning_tree(&self) -> Result<SpanningTree, LtsError> {
        SpanningTree::new(self)
    }

    /// Strongly connected components, each sorted, ordered by their
    /// smallest state.
    pub fn strongly_connected_components(&self) -> Vec<Vec<StateId>> {
        let successors: Vec<Vec<usize>> = self
            .states()
            .map(|s| self.outgoing(s).map(|a| a.target).collect())
            .collect();
        tarjan(&successors)
    }

    pub fn weakly_connected_components(&self) -> Vec<Vec<StateId>> {
        let mut parent: Vec<usize> = self.states().collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for arc in self.arcs() {
            let a = find(&mut parent, arc.source);
            let b = find(&mut parent, arc.target);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        group_by_root(self.num_states(), |s| find(&mut parent, s))
    }
}

fn group_by_root(n: usize, mut root: impl FnMut(usize) -> usize) -> Vec<Vec<usize>> {
    let mut slot: Vec<Option<usize>> = vec![None; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = root(v);
        match slot[r] {
            Some(i) => components[i].push(v),
            None => {
                slot[r] = Some(components.len());
                components.push(vec![v]);
            }
        }
    }
    components
}

/// Iterative Tarjan over an adjacency list. Components come back sorted and
/// ordered by smallest member.
pub(crate) fn tarjan(successors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = successors.len();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut component_of = vec![UNVISITED; n];
    let mut next_index = 0;
    let mut num_components = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        // (vertex, position in its successor list)
        let mut call_stack = vec![(root, 0usize)];
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call_stack.last_mut() {
            let v = top.0;
            if top.1 < successors[v].len() {
                let w = successors[v][top.1];
                top.1 += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call_stack.push((w, 0));
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            } else {
                call_stack.pop();
                if let Some(&(parent, _)) = call_stack.last() {
                    lowlink[parent] = lowlink[parent].min(lowlink[v]);
                }
                if lowlink[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        component_of[w] = num_components;
                        if w == v {
                            break;
                        }
                    }
                    num_components += 1;
                }
            }
        }
    }
    group_by_root(n, |v| component_of[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Lts {
        let mut lts = Lts::new("s0");
        lts.add_state("s1").unwrap();
        lts.add_label("a").unwrap();
        lts.add_arc_by_name("s0", "a", "s1").unwrap();
        lts
    }

    #[test]
    fn unreachable_states_are_excluded() {
        let mut lts = Lts::new("s0");
        lts.add_state("s1").unwrap();
        lts.add_state("s2").unwrap();
        lts.add_label("a").unwrap();
        lts.add_arc_by_name("s1", "a", "s2").unwrap();
        assert_eq!(lts.reachable_states(), vec![0]);
        assert_eq!(
            lts.is_totally_reachable(),
            Verdict::Violated(ReachabilityWitness::UnreachableState(1))
        );
    }

    #[test]
    fn unused_label_breaks_total_reachability() {
        let mut lts = chain();
        lts.add_label("e").unwrap();
        assert_eq!(
            lts.is_totally_reachable(),
            Verdict::Violated(ReachabilityWitness::UnusedLabel(1))
        );
    }

    #[test]
    fn nondeterminism_witness() {
        let mut lts = chain();
        lts.add_state("s2").unwrap();
        lts.add_arc_by_name("s0", "a", "s2").unwrap();
        let w = lts.is_deterministic().into_witness().unwrap();
        assert_eq!((w.state, w.label, w.targets), (0, 0, (1, 2)));
        assert!(matches!(
            lts.is_persistent(),
            Err(LtsError::Nondeterministic { .. })
        ));
    }

    #[test]
    fn open_diamond_is_not_persistent() {
        let mut lts = Lts::new("s0");
        for s in ["s1", "s2"] {
            lts.add_state(s).unwrap();
        }
        lts.add_label("a").unwrap();
        lts.add_label("b").unwrap();
        lts.add_arc_by_name("s0", "a", "s1").unwrap();
        lts.add_arc_by_name("s0", "b", "s2").unwrap();
        let w = lts.is_persistent().unwrap().into_witness().unwrap();
        assert_eq!((w.state, w.first, w.second), (0, 0, 1));
    }

    #[test]
    fn single_label_is_persistent() {
        let mut lts = chain();
        lts.add_arc_by_name("s1", "a", "s0").unwrap();
        assert!(lts.is_persistent().unwrap().holds());
    }

    #[test]
    fn linear_word_is_not_reversible() {
        assert_eq!(chain().is_reversible(), Verdict::Violated(1));
        assert!(Lts::new("s0").is_reversible().holds());
    }

    #[test]
    fn components_of_a_single_arc() {
        let lts = chain();
        assert_eq!(lts.strongly_connected_components(), vec![vec![0], vec![1]]);
        assert_eq!(lts.weakly_connected_components(), vec![vec![0, 1]]);
        let mut two = Lts::new("s0");
        two.add_state("s1").unwrap();
        assert_eq!(two.weakly_connected_components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn spanning_tree_of_a_cycle_has_one_chord() {
        let mut lts = chain();
        lts.add_arc_by_name("s1", "a", "s0").unwrap();
        let tree = lts.spanning_tree().unwrap();
        assert_eq!(tree.chords(), &[1]);
        assert_eq!(tree.parikh(1).counts(), &[1]);
        assert_eq!(tree.cycle_rows(&lts), vec![vec![2]]);
    }

    #[test]
    fn spanning_tree_rejects_unreachable_states() {
        let mut lts = Lts::new("s0");
        lts.add_state("lost").unwrap();
        assert_eq!(
            lts.spanning_tree().unwrap_err(),
            LtsError::Unreachable("lost".into())
        );
    }
}
