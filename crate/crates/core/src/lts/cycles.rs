//! Parikh vectors of small cycles.
//!
//! Every cycle decomposes into simple cycles through its own states, so the
//! `<`-minimal cyclic Parikh vectors are already attained by simple cycles.
//! Simple cycles are enumerated with Johnson's circuit algorithm on the
//! reachable part and expanded over parallel arcs with different labels.

use std::collections::{BTreeMap, BTreeSet};

use super::analysis::tarjan;
use super::{LabelId, Lts, LtsError, ParikhVector};

pub const DEFAULT_CYCLE_LIMIT: usize = 1_000_000;

impl Lts {
    pub fn small_cycle_parikh_vectors(&self) -> Result<Vec<ParikhVector>, LtsError> {
        self.small_cycle_parikh_vectors_with_limit(DEFAULT_CYCLE_LIMIT)
    }

    /// The `<`-minimal Parikh vectors of nontrivial cycles around reachable
    /// states, in ascending order. Fails once more than `limit` labelled
    /// simple cycles have been enumerated.
    pub fn small_cycle_parikh_vectors_with_limit(
        &self,
        limit: usize,
    ) -> Result<Vec<ParikhVector>, LtsError> {
        let cyclic = self.simple_cycle_parikh_vectors(limit)?;
        Ok(minimal_elements(&cyclic))
    }

    /// Every small cycle has the same Parikh vector.
    pub fn cycles_same_pv(&self) -> Result<bool, LtsError> {
        Ok(self.small_cycle_parikh_vectors()?.len() <= 1)
    }

    /// Distinct small-cycle Parikh vectors have pairwise disjoint supports.
    pub fn weak_small_cycle_property(&self) -> Result<bool, LtsError> {
        let pvs = self.small_cycle_parikh_vectors()?;
        for (i, a) in pvs.iter().enumerate() {
            for b in &pvs[i + 1..] {
                if a.support().any(|t| b.get(t) > 0) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn simple_cycle_parikh_vectors(&self, limit: usize) -> Result<BTreeSet<ParikhVector>, LtsError> {
        let mut vertices = self.reachable_states();
        vertices.sort_unstable();
        let mut position = vec![usize::MAX; self.num_states()];
        for (i, &s) in vertices.iter().enumerate() {
            position[s] = i;
        }
        // Distinct successor vertices, plus the labels on each vertex pair.
        let mut labels: BTreeMap<(usize, usize), Vec<LabelId>> = BTreeMap::new();
        let mut successors = vec![Vec::new(); vertices.len()];
        for (i, &s) in vertices.iter().enumerate() {
            for arc in self.outgoing(s) {
                let j = position[arc.target];
                let entry = labels.entry((i, j)).or_default();
                if entry.is_empty() {
                    successors[i].push(j);
                }
                entry.push(arc.label);
            }
        }

        let mut search = CircuitSearch {
            successors: &successors,
            labels: &labels,
            num_labels: self.num_labels(),
            start: 0,
            in_component: vec![false; vertices.len()],
            blocked: vec![false; vertices.len()],
            blocked_by: vec![BTreeSet::new(); vertices.len()],
            path: Vec::new(),
            found: BTreeSet::new(),
            emitted: 0,
            limit,
        };

        for start in 0..vertices.len() {
            // Strongly connected component of `start` within vertices >= start.
            let restricted: Vec<Vec<usize>> = (start..vertices.len())
                .map(|v| {
                    successors[v]
                        .iter()
                        .filter(|&&w| w >= start)
                        .map(|&w| w - start)
                        .collect()
                })
                .collect();
            let component = tarjan(&restricted)
                .into_iter()
                .find(|c| c.contains(&0))
                .unwrap();
            let has_self_loop = labels.contains_key(&(start, start));
            if component.len() == 1 && !has_self_loop {
                continue;
            }
            search.start = start;
            search.in_component.iter_mut().for_each(|x| *x = false);
            for v in component {
                search.in_component[v + start] = true;
            }
            for v in start..vertices.len() {
                search.blocked[v] = false;
                search.blocked_by[v].clear();
            }
            search.circuit(start);
            if search.emitted > limit {
                return Err(LtsError::CycleLimitExceeded(limit));
            }
        }
        Ok(search.found)
    }
}

struct CircuitSearch<'a> {
    successors: &'a [Vec<usize>],
    labels: &'a BTreeMap<(usize, usize), Vec<LabelId>>,
    num_labels: usize,
    start: usize,
    in_component: Vec<bool>,
    blocked: Vec<bool>,
    blocked_by: Vec<BTreeSet<usize>>,
    path: Vec<usize>,
    found: BTreeSet<ParikhVector>,
    emitted: usize,
    limit: usize,
}

impl CircuitSearch<'_> {
    fn circuit(&mut self, v: usize) -> bool {
        if self.emitted > self.limit {
            return true;
        }
        let mut closed = false;
        self.path.push(v);
        self.blocked[v] = true;
        for &w in &self.successors[v] {
            if !self.in_component[w] {
                continue;
            }
            if w == self.start {
                self.emit();
                closed = true;
            } else if !self.blocked[w] && self.circuit(w) {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &w in &self.successors[v] {
                if self.in_component[w] {
                    self.blocked_by[w].insert(v);
                }
            }
        }
        self.path.pop();
        closed
    }

    fn unblock(&mut self, u: usize) {
        let mut pending = vec![u];
        while let Some(u) = pending.pop() {
            self.blocked[u] = false;
            for w in std::mem::take(&mut self.blocked_by[u]) {
                if self.blocked[w] {
                    pending.push(w);
                }
            }
        }
    }

    /// Expands the vertex circuit in `path` over all label choices.
    fn emit(&mut self) {
        let edges: Vec<&Vec<LabelId>> = (0..self.path.len())
            .map(|i| {
                let from = self.path[i];
                let to = self.path[(i + 1) % self.path.len()];
                &self.labels[&(from, to)]
            })
            .collect();
        let mut choice = vec![0usize; edges.len()];
        loop {
            let mut pv = ParikhVector::zero(self.num_labels);
            for (edge, &c) in edges.iter().zip(&choice) {
                pv.increment(edge[c]);
            }
            self.found.insert(pv);
            self.emitted += 1;
            if self.emitted > self.limit {
                return;
            }
            // odometer increment
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return;
                }
                choice[i] += 1;
                if choice[i] < edges[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

pub(crate) fn minimal_elements(vectors: &BTreeSet<ParikhVector>) -> Vec<ParikhVector> {
    vectors
        .iter()
        .filter(|v| !vectors.iter().any(|w| w.strictly_below(v)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn with_states(n: usize, labels: &[&str]) -> Lts {
        let mut lts = Lts::new("s0");
        for i in 1..n {
            lts.add_state(&format!("s{i}")).unwrap();
        }
        for l in labels {
            lts.add_label(l).unwrap();
        }
        lts
    }

    #[test]
    fn acyclic_has_no_small_cycles() {
        let mut lts = with_states(3, &["a", "b"]);
        lts.add_arc_by_name("s0", "a", "s1").unwrap();
        lts.add_arc_by_name("s1", "b", "s2").unwrap();
        lts.add_arc_by_name("s0", "b", "s2").unwrap();
        assert!(lts.small_cycle_parikh_vectors().unwrap().is_empty());
        assert!(lts.cycles_same_pv().unwrap());
    }

    #[test]
    fn two_self_loops() {
        let mut lts = with_states(1, &["a", "b"]);
        lts.add_arc_by_name("s0", "a", "s0").unwrap();
        lts.add_arc_by_name("s0", "b", "s0").unwrap();
        let pvs = lts.small_cycle_parikh_vectors().unwrap();
        let shown: Vec<String> = pvs.iter().map(|p| p.display(&lts)).collect();
        assert_eq!(shown, vec!["(b:1)", "(a:1)"]);
        assert!(!lts.cycles_same_pv().unwrap());
        assert!(lts.weak_small_cycle_property().unwrap());
    }

    #[test]
    fn non_minimal_cycle_is_filtered() {
        // a-loop at s0, and s1 -a-> s2 -b-> s1
        let mut lts = with_states(3, &["a", "b", "c"]);
        lts.add_arc_by_name("s0", "a", "s0").unwrap();
        lts.add_arc_by_name("s0", "c", "s1").unwrap();
        lts.add_arc_by_name("s1", "a", "s2").unwrap();
        lts.add_arc_by_name("s2", "b", "s1").unwrap();
        let pvs = lts.small_cycle_parikh_vectors().unwrap();
        assert_eq!(pvs.len(), 1);
        assert_eq!(pvs[0].display(&lts), "(a:1)");
        assert!(lts.cycles_same_pv().unwrap());
    }

    #[test]
    fn unreachable_cycles_are_ignored() {
        let mut lts = with_states(2, &["a"]);
        lts.add_arc_by_name("s1", "a", "s1").unwrap();
        assert!(lts.small_cycle_parikh_vectors().unwrap().is_empty());
    }

    #[test]
    fn overlapping_supports_break_weak_property() {
        let mut lts = with_states(2, &["a", "b", "c"]);
        lts.add_arc_by_name("s0", "a", "s1").unwrap();
        lts.add_arc_by_name("s1", "b", "s0").unwrap();
        lts.add_arc_by_name("s1", "c", "s0").unwrap();
        assert_eq!(lts.small_cycle_parikh_vectors().unwrap().len(), 2);
        assert!(!lts.weak_small_cycle_property().unwrap());
    }

    #[test]
    fn cycle_limit_is_enforced() {
        let mut lts = with_states(1, &["a", "b"]);
        lts.add_arc_by_name("s0", "a", "s0").unwrap();
        lts.add_arc_by_name("s0", "b", "s0").unwrap();
        assert_eq!(
            lts.small_cycle_parikh_vectors_with_limit(1),
            Err(LtsError::CycleLimitExceeded(1))
        );
    }
}
