use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{Marking, NetError, PetriNet, TransitionId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparabilityMode {
    /// Parikh vectors decompose into k Parikh vectors of sequences from M.
    Weak,
    /// Sequences lie in the shuffle product of k sequences from M.
    Strong,
}

/// Separability is only ever refuted; without a counterexample the answer is
/// inconclusive up to the length bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separability {
    No(Vec<TransitionId>),
    Inconclusive,
}

type Parikh = Vec<u32>;

impl PetriNet {
    /// Searches firing sequences of length at most `length_bound` from the
    /// initial marking `k·M` for one that is not separable from `M`.
    pub fn separable(
        &self,
        k: u64,
        length_bound: usize,
        mode: SeparabilityMode,
    ) -> Result<Separability, NetError> {
        if k < 2 {
            return Err(NetError::InvalidArgument(format!(
                "separability needs k >= 2, got {k}"
            )));
        }
        let base = self
            .initial_marking()
            .divided(k)
            .ok_or(NetError::NotDivisible(k))?;
        Ok(match mode {
            SeparabilityMode::Weak => self.weak_separability(&base, k as usize, length_bound),
            SeparabilityMode::Strong => self.strong_separability(&base, k as usize, length_bound),
        })
    }

    /// Parikh vectors of sequences of length at most `bound` fireable from
    /// `from`, each with a sequence realising it, in breadth-first order.
    fn fireable_parikh_vectors(
        &self,
        from: &Marking,
        bound: usize,
    ) -> Vec<(Parikh, Vec<TransitionId>)> {
        let zero = vec![0u32; self.num_transitions()];
        let mut found = vec![(zero.clone(), Vec::new())];
        let mut seen = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([(zero, from.clone(), Vec::new())]);
        while let Some((psi, m, seq)) = queue.pop_front() {
            if seq.len() == bound {
                continue;
            }
            for t in self.transitions() {
                let Ok(next) = self.fire(&m, t) else {
                    continue;
                };
                let mut psi2 = psi.clone();
                psi2[t] += 1;
                if seen.insert(psi2.clone()) {
                    let mut seq2: Vec<TransitionId> = seq.clone();
                    seq2.push(t);
                    found.push((psi2.clone(), seq2.clone()));
                    queue.push_back((psi2, next, seq2));
                }
            }
        }
        found
    }

    fn weak_separability(&self, base: &Marking, k: usize, bound: usize) -> Separability {
        let small: HashSet<Parikh> = self
            .fireable_parikh_vectors(base, bound)
            .into_iter()
            .map(|(psi, _)| psi)
            .collect();
        let mut memo = HashMap::new();
        for (psi, seq) in self.fireable_parikh_vectors(self.initial_marking(), bound) {
            if !decomposes(&psi, k, &small, &mut memo) {
                return Separability::No(seq);
            }
        }
        Separability::Inconclusive
    }

    fn strong_separability(&self, base: &Marking, k: usize, bound: usize) -> Separability {
        // All ways of splitting the run so far into k runs from `base`, as
        // sorted tuples of their current markings.
        type Splits = BTreeSet<Vec<Marking>>;
        let start: Splits = BTreeSet::from([vec![base.clone(); k]]);
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, self.initial_marking().clone(), Vec::new())]);
        while let Some((splits, m, seq)) = queue.pop_front() {
            if seq.len() == bound {
                continue;
            }
            for t in self.transitions() {
                let Ok(next) = self.fire(&m, t) else {
                    continue;
                };
                let mut next_splits = Splits::new();
                for tuple in &splits {
                    for i in 0..k {
                        if i > 0 && tuple[i] == tuple[i - 1] {
                            continue;
                        }
                        if let Ok(mi) = self.fire(&tuple[i], t) {
                            let mut tuple2 = tuple.clone();
                            tuple2[i] = mi;
                            tuple2.sort();
                            next_splits.insert(tuple2);
                        }
                    }
                }
                let mut seq2 = seq.clone();
                seq2.push(t);
                if next_splits.is_empty() {
                    return Separability::No(seq2);
                }
                if seen.insert(next_splits.clone()) {
                    queue.push_back((next_splits, next, seq2));
                }
            }
        }
        Separability::Inconclusive
    }
}

fn decomposes(
    psi: &Parikh,
    k: usize,
    small: &HashSet<Parikh>,
    memo: &mut HashMap<(Parikh, usize), bool>,
) -> bool {
    if k == 1 {
        return small.contains(psi);
    }
    if let Some(&r) = memo.get(&(psi.clone(), k)) {
        return r;
    }
    let result = small.iter().any(|phi| {
        phi.iter().zip(psi).all(|(a, b)| a <= b) && {
            let rest: Parikh = psi.iter().zip(phi).map(|(a, b)| a - b).collect();
            decomposes(&rest, k - 1, small, memo)
        }
    });
    memo.insert((psi.clone(), k), result);
    result
}
