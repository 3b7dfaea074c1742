use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{LabelId, Lts, StateId};
use crate::Verdict;

/// Result of an isomorphism check. Labels are matched by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isomorphism {
    /// State bijection from the first system into the second.
    Isomorphic(Vec<StateId>),
    LabelMismatch(String),
    NotIsomorphic,
}

impl Isomorphism {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Isomorphism::Isomorphic(_))
    }
}

/// A shortest word enabled in exactly one of two systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageDifference {
    pub word: Vec<String>,
    pub enabled_in_first: bool,
}

#[derive(PartialEq, Eq)]
struct Signature {
    in_degree: usize,
    out_degree: usize,
    enabled: BTreeSet<LabelId>,
}

fn signatures(lts: &Lts, label_map: impl Fn(LabelId) -> LabelId) -> Vec<Signature> {
    lts.states()
        .map(|s| Signature {
            in_degree: lts.incoming(s).count(),
            out_degree: lts.outgoing(s).count(),
            enabled: lts.outgoing(s).map(|a| label_map(a.label)).collect(),
        })
        .collect()
}

struct IsoSearch<'a> {
    first: &'a Lts,
    second: &'a Lts,
    label_map: Vec<LabelId>,
    order: Vec<StateId>,
    sig_first: Vec<Signature>,
    sig_second: Vec<Signature>,
    forward: Vec<Option<StateId>>,
    backward: Vec<Option<StateId>>,
}

impl IsoSearch<'_> {
    fn candidates(&self, v: StateId) -> Vec<StateId> {
        if v == self.first.initial() {
            return vec![self.second.initial()];
        }
        // Anchor on an arc from an already mapped state, if there is one.
        for arc in self.first.incoming(v) {
            if let Some(image) = self.forward[arc.source] {
                let label = self.label_map[arc.label];
                return self
                    .second
                    .outgoing(image)
                    .filter(|a| a.label == label)
                    .map(|a| a.target)
                    .collect();
            }
        }
        self.second.states().collect()
    }

    /// Arcs between `v`/`w` and the already mapped states must correspond
    /// exactly, in both directions.
    fn consistent(&self, v: StateId, w: StateId) -> bool {
        let image = |x: StateId| if x == v { Some(w) } else { self.forward[x] };
        let preimage = |y: StateId| if y == w { Some(v) } else { self.backward[y] };

        let mut out_first = 0;
        for arc in self.first.outgoing(v) {
            if let Some(target) = image(arc.target) {
                if !self.second.has_arc(w, self.label_map[arc.label], target) {
                    return false;
                }
                out_first += 1;
            }
        }
        let out_second = self
            .second
            .outgoing(w)
            .filter(|a| preimage(a.target).is_some())
            .count();
        if out_first != out_second {
            return false;
        }

        let mut in_first = 0;
        for arc in self.first.incoming(v) {
            if arc.source == v {
                continue;
            }
            if let Some(source) = self.forward[arc.source] {
                if !self.second.has_arc(source, self.label_map[arc.label], w) {
                    return false;
                }
                in_first += 1;
            }
        }
        let in_second = self
            .second
            .incoming(w)
            .filter(|a| a.source != w && self.backward[a.source].is_some())
            .count();
        in_first == in_second
    }

    fn extend(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for w in self.candidates(v) {
            if self.backward[w].is_some() || self.sig_first[v] != self.sig_second[w] {
                continue;
            }
            if !self.consistent(v, w) {
                continue;
            }
            self.forward[v] = Some(w);
            self.backward[w] = Some(v);
            if self.extend(k + 1) {
                return true;
            }
            self.forward[v] = None;
            self.backward[w] = None;
        }
        false
    }
}

impl Lts {
    /// Searches a bijection between the state sets that maps initial state to
    /// initial state and preserves arcs in both directions.
    ///
    /// States are visited in breadth-first order and each is anchored on an
    /// arc from an already mapped state, so deterministic inputs are matched
    /// by a simultaneous walk without backtracking.
    pub fn isomorphism(&self, other: &Lts) -> Isomorphism {
        if self.num_labels() != other.num_labels() {
            return Isomorphism::LabelMismatch(format!(
                "{} labels versus {}",
                self.num_labels(),
                other.num_labels()
            ));
        }
        let mut label_map = Vec::with_capacity(self.num_labels());
        for t in self.labels() {
            match other.label_id(self.label_name(t)) {
                Some(u) => label_map.push(u),
                None => {
                    return Isomorphism::LabelMismatch(format!(
                        "label '{}' missing in second system",
                        self.label_name(t)
                    ))
                }
            }
        }
        if self.num_states() != other.num_states() || self.num_arcs() != other.num_arcs() {
            return Isomorphism::NotIsomorphic;
        }

        let mut order = self.reachable_states();
        let mut placed = vec![false; self.num_states()];
        for &s in &order {
            placed[s] = true;
        }
        order.extend(self.states().filter(|&s| !placed[s]));

        let mut search = IsoSearch {
            first: self,
            second: other,
            sig_first: signatures(self, |t| label_map[t]),
            sig_second: signatures(other, |t| t),
            label_map,
            order,
            forward: vec![None; self.num_states()],
            backward: vec![None; other.num_states()],
        };
        if search.extend(0) {
            Isomorphism::Isomorphic(search.forward.into_iter().map(Option::unwrap).collect())
        } else {
            Isomorphism::NotIsomorphic
        }
    }

    pub fn is_isomorphic(&self, other: &Lts) -> bool {
        self.isomorphism(other).is_isomorphic()
    }

    /// Coarsest bisimulation on the disjoint union, by signature refinement.
    /// Returns the related state pairs when the initial states are bisimilar.
    pub fn bisimulation(&self, other: &Lts) -> Option<Vec<(StateId, StateId)>> {
        let n1 = self.num_states();
        let n = n1 + other.num_states();
        let mut label_ids: HashMap<&str, usize> = HashMap::new();
        for name in self.label_names().chain(other.label_names()) {
            let next = label_ids.len();
            label_ids.entry(name).or_insert(next);
        }
        let mut successors: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for arc in self.arcs() {
            successors[arc.source].push((label_ids[self.label_name(arc.label)], arc.target));
        }
        for arc in other.arcs() {
            successors[n1 + arc.source]
                .push((label_ids[other.label_name(arc.label)], n1 + arc.target));
        }

        let mut block = vec![0usize; n];
        let mut num_blocks = 1;
        loop {
            let mut ids: HashMap<(usize, BTreeSet<(usize, usize)>), usize> = HashMap::new();
            let mut refined = vec![0usize; n];
            for s in 0..n {
                let moves: BTreeSet<(usize, usize)> =
                    successors[s].iter().map(|&(t, x)| (t, block[x])).collect();
                let next = ids.len();
                refined[s] = *ids.entry((block[s], moves)).or_insert(next);
            }
            let count = ids.len();
            block = refined;
            if count == num_blocks {
                break;
            }
            num_blocks = count;
        }

        if block[self.initial()] != block[n1 + other.initial()] {
            return None;
        }
        let mut relation = Vec::new();
        for s in self.states() {
            for s2 in other.states() {
                if block[s] == block[n1 + s2] {
                    relation.push((s, s2));
                }
            }
        }
        Some(relation)
    }

    pub fn is_bisimilar(&self, other: &Lts) -> bool {
        self.bisimulation(other).is_some()
    }

    /// Prefix-language equality via the product of both subset
    /// constructions. A failing check reports a shortest distinguishing word.
    pub fn language_equivalent(&self, other: &Lts) -> Verdict<LanguageDifference> {
        let mut names: Vec<&str> = Vec::new();
        for name in self.label_names().chain(other.label_names()) {
            if !names.contains(&name) {
                names.push(name);
            }
        }
        let step = |lts: &Lts, from: &Vec<StateId>, name: &str| -> Vec<StateId> {
            let Some(label) = lts.label_id(name) else {
                return Vec::new();
            };
            let set: BTreeSet<StateId> = from
                .iter()
                .flat_map(|&s| lts.outgoing(s))
                .filter(|a| a.label == label)
                .map(|a| a.target)
                .collect();
            set.into_iter().collect()
        };

        type Pair = (Vec<StateId>, Vec<StateId>);
        let start: Pair = (vec![self.initial()], vec![other.initial()]);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start.clone(), None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair) = queue.pop_front() {
            for (t, name) in names.iter().enumerate() {
                let a = step(self, &pair.0, name);
                let b = step(other, &pair.1, name);
                if a.is_empty() != b.is_empty() {
                    let mut word = vec![name.to_string()];
                    let mut cursor = &pair;
                    while let Some(Some((prev, label))) = parent.get(cursor) {
                        word.push(names[*label].to_string());
                        cursor = prev;
                    }
                    word.reverse();
                    return Verdict::Violated(LanguageDifference {
                        word,
                        enabled_in_first: !a.is_empty(),
                    });
                }
                if a.is_empty() {
                    continue;
                }
                let next = (a, b);
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((pair.clone(), t)));
                    queue.push_back(next);
                }
            }
        }
        Verdict::Holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(states: usize, labels: &[&str], arcs: &[(usize, &str, usize)]) -> Lts {
        let mut lts = Lts::new("s0");
        for i in 1..states {
            lts.add_state(&format!("s{i}")).unwrap();
        }
        for l in labels {
            lts.add_label(l).unwrap();
        }
        for &(s, t, s2) in arcs {
            lts.add_arc_by_name(&format!("s{s}"), t, &format!("s{s2}")).unwrap();
        }
        lts
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let lts = build(3, &["a", "b"], &[(0, "a", 1), (1, "b", 2), (2, "a", 0)]);
        assert_eq!(lts.isomorphism(&lts), Isomorphism::Isomorphic(vec![0, 1, 2]));
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        let two = build(2, &["a"], &[(0, "a", 1)]);
        let three = build(3, &["a"], &[(0, "a", 1), (1, "a", 2)]);
        assert_eq!(two.isomorphism(&three), Isomorphism::NotIsomorphic);
    }

    #[test]
    fn label_sets_must_agree() {
        let a = build(2, &["a"], &[(0, "a", 1)]);
        let b = build(2, &["b"], &[(0, "b", 1)]);
        assert!(matches!(a.isomorphism(&b), Isomorphism::LabelMismatch(_)));
    }

    #[test]
    fn isomorphism_follows_renamed_states() {
        let a = build(3, &["a", "b"], &[(0, "a", 1), (0, "b", 2)]);
        let b = build(3, &["a", "b"], &[(0, "a", 2), (0, "b", 1)]);
        assert_eq!(a.isomorphism(&b), Isomorphism::Isomorphic(vec![0, 2, 1]));
    }

    #[test]
    fn nondeterministic_isomorphism_needs_backtracking() {
        // s0 -a-> s1 -b-> s3 and s0 -a-> s2; the second system lists the
        // branches in the other order
        let a = build(4, &["a", "b"], &[(0, "a", 1), (0, "a", 2), (1, "b", 3)]);
        let b = build(4, &["a", "b"], &[(0, "a", 1), (0, "a", 2), (2, "b", 3)]);
        assert!(a.is_isomorphic(&b));
        let c = build(4, &["a", "b"], &[(0, "a", 1), (0, "a", 2), (2, "b", 2)]);
        assert!(!a.is_isomorphic(&c));
    }

    #[test]
    fn loop_and_two_cycle_are_bisimilar_not_isomorphic() {
        let one = build(1, &["a"], &[(0, "a", 0)]);
        let two = build(2, &["a"], &[(0, "a", 1), (1, "a", 0)]);
        assert!(!one.is_isomorphic(&two));
        let relation = one.bisimulation(&two).unwrap();
        assert_eq!(relation, vec![(0, 0), (0, 1)]);
        assert!(one.language_equivalent(&two).holds());
    }

    #[test]
    fn branching_difference_is_not_bisimilar_but_language_equal() {
        // a.(b + c) versus a.b + a.c
        let det = build(4, &["a", "b", "c"], &[(0, "a", 1), (1, "b", 2), (1, "c", 3)]);
        let split = build(
            5,
            &["a", "b", "c"],
            &[(0, "a", 1), (0, "a", 2), (1, "b", 3), (2, "c", 4)],
        );
        assert!(!det.is_bisimilar(&split));
        assert!(det.language_equivalent(&split).holds());
    }

    #[test]
    fn shortest_distinguishing_word() {
        let ab = build(3, &["a", "b"], &[(0, "a", 1), (1, "b", 2)]);
        let abc = build(4, &["a", "b", "c"], &[(0, "a", 1), (1, "b", 2), (1, "c", 3)]);
        let diff = ab.language_equivalent(&abc).into_witness().unwrap();
        assert_eq!(diff.word, vec!["a", "c"]);
        assert!(!diff.enabled_in_first);
        assert!(ab.language_equivalent(&ab).holds());
    }
}
