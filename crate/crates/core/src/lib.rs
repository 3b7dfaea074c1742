//! Analysis of place/transition Petri nets and finite labelled transition
//! systems, and region-based synthesis of Petri nets from transition systems.
//!
//! All arithmetic on regions and invariants is exact.

pub mod generators;
pub mod io;
pub mod lts;
pub mod net;
pub mod solve;
pub mod structure;
pub mod synthesis;
mod verdict;

pub use lts::{Lts, LtsError, ParikhVector, SpanningTree};
pub use net::{Marking, NetError, OmegaMarking, PetriNet};
pub use verdict::Verdict;
