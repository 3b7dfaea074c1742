use std::fmt::Write;

use super::{LabelId, Lts};

/// Per-label occurrence counts of a label sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhVector(Vec<u64>);

impl ParikhVector {
    pub fn zero(num_labels: usize) -> Self {
        ParikhVector(vec![0; num_labels])
    }

    pub fn from_counts(counts: Vec<u64>) -> Self {
        ParikhVector(counts)
    }

    pub fn of_sequence(num_labels: usize, sequence: &[LabelId]) -> Self {
        let mut pv = Self::zero(num_labels);
        for &t in sequence {
            pv.0[t] += 1;
        }
        pv
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, label: LabelId) -> u64 {
        self.0[label]
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn increment(&mut self, label: LabelId) {
        self.0[label] += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ParikhVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self <= other` and `self != other`.
    pub fn strictly_below(&self, other: &ParikhVector) -> bool {
        self.le(other) && self != other
    }

    pub fn add(&self, other: &ParikhVector) -> ParikhVector {
        ParikhVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Integer-valued difference `self - other`.
    pub fn diff(&self, other: &ParikhVector) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    pub fn support(&self) -> impl Iterator<Item = LabelId> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(t, _)| t)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Renders as `(a:1,b:1)`, omitting zero entries.
    pub fn display(&self, lts: &Lts) -> String {
        let mut out = String::from("(");
        for (i, t) in self.support().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{}:{}", lts.label_name(t), self.0[t]).unwrap();
        }
        out.push(')');
        out
    }
}
