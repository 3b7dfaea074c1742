//! Linear-algebraic and set-based structure of nets: incidence matrices,
//! S- and T-invariants, siphons and traps.

use thiserror::Error;

use crate::net::{PetriNet, PlaceId, TransitionId};
use crate::solve::{minimal_semipositive_solutions, minimal_support_solutions, Side};
use crate::Verdict;

pub const DEFAULT_PLACE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("net has {places} places; siphon and trap search is limited to {cap}")]
    TooManyPlaces { places: usize, cap: usize },
}

/// `|P| × |T|` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrices {
    /// `B[p][t] = F(p, t)`
    pub backward: Vec<Vec<i64>>,
    /// `F[p][t] = F(t, p)`
    pub forward: Vec<Vec<i64>>,
    /// `C = F - B`
    pub incidence: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    /// Place weightings conserved by every firing.
    S,
    /// Transition multisets whose firing reproduces the marking.
    T,
}

impl InvariantKind {
    fn side(self) -> Side {
        match self {
            InvariantKind::S => Side::Rows,
            InvariantKind::T => Side::Columns,
        }
    }
}

pub fn incidence_matrices(net: &PetriNet) -> IncidenceMatrices {
    let weight = |w: u64| i64::try_from(w).expect("arc weight fits in i64");
    let backward: Vec<Vec<i64>> = net
        .places()
        .map(|p| net.transitions().map(|t| weight(net.weight_to_transition(p, t))).collect())
        .collect();
    let forward: Vec<Vec<i64>> = net
        .places()
        .map(|p| net.transitions().map(|t| weight(net.weight_to_place(t, p))).collect())
        .collect();
    let incidence = forward
        .iter()
        .zip(&backward)
        .map(|(f, b)| f.iter().zip(b).map(|(x, y)| x - y).collect())
        .collect();
    IncidenceMatrices {
        backward,
        forward,
        incidence,
    }
}

/// The minimal semipositive invariants (S: indexed by place, T: by
/// transition), sorted lexicographically.
pub fn invariants(net: &PetriNet, kind: InvariantKind) -> Vec<Vec<u64>> {
    let c = incidence_matrices(net).incidence;
    if c.is_empty() && kind == InvariantKind::T {
        // No places: every transition is its own T-invariant.
        return (0..net.num_transitions())
            .map(|t| (0..net.num_transitions()).map(|u| u64::from(t == u)).collect())
            .rev()
            .collect();
    }
    minimal_semipositive_solutions(&c, kind.side())
}

/// Covered iff every place (S) or transition (T) lies in the support of some
/// semipositive invariant. Witness: the first uncovered index.
pub fn covered_by_invariants(net: &PetriNet, kind: InvariantKind) -> Verdict<usize> {
    let n = match kind {
        InvariantKind::S => net.num_places(),
        InvariantKind::T => net.num_transitions(),
    };
    let c = incidence_matrices(net).incidence;
    if c.is_empty() {
        return Verdict::Holds;
    }
    let mut covered = vec![false; n];
    for v in minimal_support_solutions(&c, kind.side()) {
        for (i, &x) in v.iter().enumerate() {
            covered[i] |= x > 0;
        }
    }
    covered.iter().position(|&c| !c).into()
}

/// Inclusion-minimal nonempty siphons (`•S ⊆ S•`), each sorted, in
/// lexicographic order.
pub fn minimal_siphons(net: &PetriNet) -> Result<Vec<Vec<PlaceId>>, StructureError> {
    minimal_siphons_with_cap(net, DEFAULT_PLACE_CAP)
}

pub fn minimal_siphons_with_cap(
    net: &PetriNet,
    cap: usize,
) -> Result<Vec<Vec<PlaceId>>, StructureError> {
    let (pre, post) = place_masks(net, cap)?;
    // A transition producing into S must consume from S.
    Ok(minimal_closed_sets(net.num_places(), &post, &pre))
}

/// Inclusion-minimal nonempty traps (`S• ⊆ •S`).
pub fn minimal_traps(net: &PetriNet) -> Result<Vec<Vec<PlaceId>>, StructureError> {
    minimal_traps_with_cap(net, DEFAULT_PLACE_CAP)
}

pub fn minimal_traps_with_cap(
    net: &PetriNet,
    cap: usize,
) -> Result<Vec<Vec<PlaceId>>, StructureError> {
    let (pre, post) = place_masks(net, cap)?;
    // A transition consuming from S must produce into S.
    Ok(minimal_closed_sets(net.num_places(), &pre, &post))
}

/// Per transition: bitmask of its pre-places and of its post-places.
fn place_masks(net: &PetriNet, cap: usize) -> Result<(Vec<u64>, Vec<u64>), StructureError> {
    let places = net.num_places();
    if places > cap.min(64) {
        return Err(StructureError::TooManyPlaces {
            places,
            cap: cap.min(64),
        });
    }
    let mask = |list: &[(PlaceId, u64)]| list.iter().fold(0u64, |m, &(p, _)| m | 1 << p);
    let pre = net.transitions().map(|t| mask(net.preset(t))).collect();
    let post = net.transitions().map(|t: TransitionId| mask(net.postset(t))).collect();
    Ok((pre, post))
}

/// Minimal nonempty sets S such that every transition whose `trigger` mask
/// meets S also has its `required` mask meeting S.
fn minimal_closed_sets(places: usize, trigger: &[u64], required: &[u64]) -> Vec<Vec<PlaceId>> {
    let mut found: Vec<u64> = Vec::new();
    for p in 0..places {
        let below = (1u64 << p) - 1;
        search(1 << p, below, trigger, required, &mut found);
    }
    found.sort_unstable();
    found.dedup();
    let minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&s| !found.iter().any(|&r| r != s && r & s == r))
        .collect();
    let mut sets: Vec<Vec<PlaceId>> = minimal
        .into_iter()
        .map(|s| (0..places).filter(|&p| s >> p & 1 == 1).collect())
        .collect();
    sets.sort();
    sets
}

fn search(included: u64, excluded: u64, trigger: &[u64], required: &[u64], found: &mut Vec<u64>) {
    if found.iter().any(|&f| f & !included == 0) {
        // Some known closed set is already inside; nothing minimal here.
        return;
    }
    let violated = trigger
        .iter()
        .zip(required)
        .find(|&(&t, &r)| t & included != 0 && r & included == 0);
    let Some((_, &options)) = violated else {
        found.push(included);
        return;
    };
    let mut excluded = excluded;
    let mut rest = options & !excluded;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        search(included | bit, excluded, trigger, required, found);
        excluded |= bit;
        rest &= !bit;
    }
}
