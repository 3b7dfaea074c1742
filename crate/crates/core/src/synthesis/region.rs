use std::collections::VecDeque;

use crate::lts::{LabelId, Lts, StateId};

/// A region `(ℝ, 𝔹, 𝔽)` of a transition system, stored as the initial value
/// `ℝ(s0)` and per-label backward and forward weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Region {
    pub initial: u64,
    pub backward: Vec<u64>,
    pub forward: Vec<u64>,
}

impl Region {
    /// The pure region with the given effect and initial value:
    /// `𝔹 = max(0, -𝔼)`, `𝔽 = max(0, 𝔼)`.
    pub fn from_effect(initial: u64, effect: &[i64]) -> Region {
        Region {
            initial,
            backward: effect.iter().map(|&e| (-e).max(0) as u64).collect(),
            forward: effect.iter().map(|&e| e.max(0) as u64).collect(),
        }
    }

    /// `𝔼(t) = 𝔽(t) - 𝔹(t)`
    pub fn effect(&self, t: LabelId) -> i64 {
        self.forward[t] as i64 - self.backward[t] as i64
    }

    pub fn effects(&self) -> Vec<i64> {
        (0..self.forward.len()).map(|t| self.effect(t)).collect()
    }

    pub fn is_pure(&self) -> bool {
        self.backward
            .iter()
            .zip(&self.forward)
            .all(|(&b, &f)| b == 0 || f == 0)
    }

    /// `ℝ(s)` for every state, or `None` if this is not a region of `lts`:
    /// some state is unreachable, an arc is blocked, or two paths disagree.
    pub fn values(&self, lts: &Lts) -> Option<Vec<i64>> {
        let mut values = vec![None; lts.num_states()];
        values[lts.initial()] = Some(self.initial as i64);
        let mut queue = VecDeque::from([lts.initial()]);
        while let Some(s) = queue.pop_front() {
            let r = values[s].expect("queued states have values");
            for arc in lts.outgoing(s) {
                if r < self.backward[arc.label] as i64 {
                    return None;
                }
                let next = r + self.effect(arc.label);
                match values[arc.target] {
                    Some(v) if v != next => return None,
                    Some(_) => {}
                    None => {
                        values[arc.target] = Some(next);
                        queue.push_back(arc.target);
                    }
                }
            }
        }
        values.into_iter().collect()
    }

    pub fn is_region_of(&self, lts: &Lts) -> bool {
        self.values(lts).is_some()
    }

    /// Whether the region prevents `t` at a state with value `value`.
    pub fn disables(&self, value: i64, t: LabelId) -> bool {
        value < self.backward[t] as i64
    }

    /// `Region { init=1, 0:a:0, 1:c:0 }`: backward and forward weight around
    /// each label.
    pub fn display(&self, lts: &Lts) -> String {
        let mut out = format!("Region {{ init={}", self.initial);
        for t in lts.labels() {
            out.push_str(&format!(
                ", {}:{}:{}",
                self.backward[t],
                lts.label_name(t),
                self.forward[t]
            ));
        }
        out.push_str(" }");
        out
    }
}

/// The smallest `ℝ(s0)` making effects `effect` and backward weights
/// `backward` a region: every value and every arc precondition must hold.
pub(crate) fn minimal_initial(lts: &Lts, psi: &[Vec<i64>], backward: &[u64], effect: &[i64]) -> u64 {
    let value = |s: StateId| -> i64 { psi[s].iter().zip(effect).map(|(p, e)| p * e).sum() };
    let mut need: i64 = 0;
    for s in lts.states() {
        need = need.max(-value(s));
    }
    for arc in lts.arcs() {
        need = need.max(backward[arc.label] as i64 - value(arc.source));
    }
    need as u64
}
