use std::fmt;

use super::{PetriNet, PlaceId};

/// Token counts indexed by place.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking(Vec<u64>);

impl Marking {
    pub fn zero(num_places: usize) -> Self {
        Marking(vec![0; num_places])
    }

    pub fn from_tokens(tokens: Vec<u64>) -> Self {
        Marking(tokens)
    }

    pub(crate) fn push(&mut self, tokens: u64) {
        self.0.push(tokens);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, p: PlaceId) -> u64 {
        self.0[p]
    }

    pub fn set(&mut self, p: PlaceId, tokens: u64) {
        self.0[p] = tokens;
    }

    pub fn tokens(&self) -> &[u64] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Marking) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Marking) -> Marking {
        Marking(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `k·M`
    pub fn scaled(&self, k: u64) -> Marking {
        Marking(self.0.iter().map(|a| a * k).collect())
    }

    /// `M / k` if every entry is divisible by `k`.
    pub fn divided(&self, k: u64) -> Option<Marking> {
        if k == 0 || self.0.iter().any(|a| a % k != 0) {
            return None;
        }
        Some(Marking(self.0.iter().map(|a| a / k).collect()))
    }

    /// `[ [p0:1] [p1:0] ]`
    pub fn display(&self, net: &PetriNet) -> String {
        self.to_omega().display(net)
    }

    pub fn to_omega(&self) -> OmegaMarking {
        OmegaMarking(self.0.iter().map(|&n| Tokens::Finite(n)).collect())
    }
}

/// A token count or ω ("arbitrarily many").
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tokens {
    Finite(u64),
    Omega,
}

impl Tokens {
    pub fn is_omega(self) -> bool {
        self == Tokens::Omega
    }

    /// `self >= n`
    pub fn covers(self, n: u64) -> bool {
        match self {
            Tokens::Finite(m) => m >= n,
            Tokens::Omega => true,
        }
    }

    pub fn plus(self, n: u64) -> Tokens {
        match self {
            Tokens::Finite(m) => Tokens::Finite(m + n),
            Tokens::Omega => Tokens::Omega,
        }
    }

    pub fn minus(self, n: u64) -> Tokens {
        match self {
            Tokens::Finite(m) => Tokens::Finite(m - n),
            Tokens::Omega => Tokens::Omega,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Tokens::Finite(m) => Some(m),
            Tokens::Omega => None,
        }
    }
}

impl fmt::Display for Tokens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tokens::Finite(n) => write!(f, "{n}"),
            Tokens::Omega => f.write_str("ω"),
        }
    }
}

fn tokens_le(a: Tokens, b: Tokens) -> bool {
    match (a, b) {
        (_, Tokens::Omega) => true,
        (Tokens::Omega, Tokens::Finite(_)) => false,
        (Tokens::Finite(x), Tokens::Finite(y)) => x <= y,
    }
}

/// A marking over ℕ ∪ {ω}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaMarking(Vec<Tokens>);

impl OmegaMarking {
    pub fn new(tokens: Vec<Tokens>) -> Self {
        OmegaMarking(tokens)
    }

    pub fn get(&self, p: PlaceId) -> Tokens {
        self.0[p]
    }

    pub fn set(&mut self, p: PlaceId, tokens: Tokens) {
        self.0[p] = tokens;
    }

    pub fn tokens(&self) -> &[Tokens] {
        &self.0
    }

    /// Componentwise `self <= other` with ω above every number.
    pub fn le(&self, other: &OmegaMarking) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| tokens_le(a, b))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|t| !t.is_omega())
    }

    pub fn first_omega(&self) -> Option<PlaceId> {
        self.0.iter().position(|t| t.is_omega())
    }

    pub fn to_finite(&self) -> Option<Marking> {
        self.0
            .iter()
            .map(|t| t.finite())
            .collect::<Option<Vec<_>>>()
            .map(Marking)
    }

    pub fn display(&self, net: &PetriNet) -> String {
        let mut out = String::from("[");
        for (p, t) in self.0.iter().enumerate() {
            out.push_str(&format!(" [{}:{}]", net.place_name(p), t));
        }
        out.push_str(" ]");
        out
    }
}
