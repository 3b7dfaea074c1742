/// Outcome of a yes/no property check that carries a witness when the
/// property does not hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }

    pub fn into_witness(self) -> Option<W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Violated(w) => Verdict::Violated(f(w)),
        }
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(witness: Option<W>) -> Self {
        match witness {
            None => Verdict::Holds,
            Some(w) => Verdict::Violated(w),
        }
    }
}
