use super::{PetriNet, PlaceId, TransitionId};
use crate::lts::tarjan;
use crate::Verdict;

/// A node of the net graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Element {
    Place(PlaceId),
    Transition(TransitionId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub weakly_connected: bool,
    pub strongly_connected: bool,
    /// Weak components over places and transitions, ordered by first member.
    pub weak_components: Vec<Vec<Element>>,
    pub strong_components: Vec<Vec<Element>>,
}

impl PetriNet {
    pub fn element_name(&self, e: Element) -> &str {
        match e {
            Element::Place(p) => self.place_name(p),
            Element::Transition(t) => self.transition_name(t),
        }
    }

    /// All (p, t) pairs with F(p,t) > 0 or F(t,p) > 0, sorted by place.
    fn flow_pairs(&self) -> Vec<(PlaceId, TransitionId)> {
        let mut pairs: Vec<(PlaceId, TransitionId)> = self
            .transitions()
            .flat_map(|t| {
                self.preset(t)
                    .iter()
                    .chain(self.postset(t))
                    .map(move |&(p, _)| (p, t))
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// Plain iff every arc weight is at most 1. Witness: a heavier arc.
    pub fn is_plain(&self) -> Verdict<(PlaceId, TransitionId)> {
        self.flow_pairs()
            .into_iter()
            .find(|&(p, t)| self.weight_to_transition(p, t) > 1 || self.weight_to_place(t, p) > 1)
            .into()
    }

    /// All side conditions: F(p,t) > 0 and F(t,p) > 0.
    pub fn side_conditions(&self) -> Vec<(PlaceId, TransitionId)> {
        self.flow_pairs()
            .into_iter()
            .filter(|&(p, t)| self.weight_to_transition(p, t) > 0 && self.weight_to_place(t, p) > 0)
            .collect()
    }

    /// Side conditions where at least one of the two arcs is weighted.
    pub fn non_plain_side_conditions(&self) -> Vec<(PlaceId, TransitionId)> {
        self.side_conditions()
            .into_iter()
            .filter(|&(p, t)| self.weight_to_transition(p, t) > 1 || self.weight_to_place(t, p) > 1)
            .collect()
    }

    pub fn is_pure(&self) -> Verdict<(PlaceId, TransitionId)> {
        self.side_conditions().into_iter().next().into()
    }

    /// ON: |p•| <= 1 for every place.
    pub fn is_output_nonbranching(&self) -> Verdict<PlaceId> {
        self.places()
            .find(|&p| self.place_postset(p).len() > 1)
            .into()
    }

    fn plain_place_witness(&self) -> Option<PlaceId> {
        self.is_plain().into_witness().map(|(p, _)| p)
    }

    /// CF: plain, and every place with |p•| > 1 has p• ⊆ •p.
    pub fn is_conflict_free(&self) -> Verdict<PlaceId> {
        self.plain_place_witness()
            .or_else(|| {
                self.places().find(|&p| {
                    let post = self.place_postset(p);
                    post.len() > 1 && !post.iter().all(|t| self.place_preset(p).contains(t))
                })
            })
            .into()
    }

    /// T-net: plain, |p•| <= 1 and |•p| <= 1.
    pub fn is_tnet(&self) -> Verdict<PlaceId> {
        self.plain_place_witness()
            .or_else(|| {
                self.places()
                    .find(|&p| self.place_postset(p).len() > 1 || self.place_preset(p).len() > 1)
            })
            .into()
    }

    /// Marked graph: plain, |p•| = 1 and |•p| = 1.
    pub fn is_marked_graph(&self) -> Verdict<PlaceId> {
        self.plain_place_witness()
            .or_else(|| {
                self.places()
                    .find(|&p| self.place_postset(p).len() != 1 || self.place_preset(p).len() != 1)
            })
            .into()
    }

    /// Places and transitions without any adjacent arc.
    pub fn isolated_elements(&self) -> Vec<Element> {
        let places = self
            .places()
            .filter(|&p| self.place_preset(p).is_empty() && self.place_postset(p).is_empty())
            .map(Element::Place);
        let transitions = self
            .transitions()
            .filter(|&t| self.preset(t).is_empty() && self.postset(t).is_empty())
            .map(Element::Transition);
        places.chain(transitions).collect()
    }

    pub fn has_isolated_elements(&self) -> bool {
        !self.isolated_elements().is_empty()
    }

    /// Connectivity of the bipartite graph with places numbered first.
    pub fn connectivity(&self) -> Connectivity {
        let np = self.num_places();
        let n = np + self.num_transitions();
        let mut forward = vec![Vec::new(); n];
        let mut undirected = vec![Vec::new(); n];
        for t in self.transitions() {
            for &(p, _) in self.preset(t) {
                forward[p].push(np + t);
                undirected[p].push(np + t);
                undirected[np + t].push(p);
            }
            for &(p, _) in self.postset(t) {
                forward[np + t].push(p);
                undirected[p].push(np + t);
                undirected[np + t].push(p);
            }
        }
        let to_elements = |components: Vec<Vec<usize>>| -> Vec<Vec<Element>> {
            components
                .into_iter()
                .map(|c| {
                    c.into_iter()
                        .map(|i| {
                            if i < np {
                                Element::Place(i)
                            } else {
                                Element::Transition(i - np)
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let weak = to_elements(tarjan(&undirected));
        let strong = to_elements(tarjan(&forward));
        Connectivity {
            weakly_connected: weak.len() <= 1,
            strongly_connected: strong.len() <= 1,
            weak_components: weak,
            strong_components: strong,
        }
    }
}
