//! Region-based synthesis of injectively labelled Petri nets from transition
//! systems.
//!
//! Every reachable state `s` with a disabled label `t` gives an event/state
//! separation problem (a region must block `t` at `s`); every pair of distinct
//! states gives a state separation problem (some region must tell them
//! apart). A net with one place per region solves the input exactly when all
//! problems are solved.

mod minimize;
mod properties;
mod region;
mod report;
mod solver;

use thiserror::Error;

use crate::lts::{LabelId, Lts, LtsError, StateId};
use crate::net::{NetError, PetriNet};
use crate::solve::{integer_kernel_basis, BigInt, SolveError};

pub use minimize::minimize_regions;
pub use properties::Properties;
pub use region::Region;
pub use solver::Strategy;

use solver::Context;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthesisError {
    #[error("unknown property '{0}'")]
    UnknownProperty(String),
    #[error("input is not deterministic: {0}")]
    Nondeterministic(String),
    #[error("input is not totally reachable: {0}")]
    NotTotallyReachable(String),
    #[error("language-only synthesis needs an acyclic input; limited unfolding of cycles is not supported")]
    CyclicInput,
    #[error("solver failure: {0}")]
    Solver(#[from] SolveError),
    #[error("internal error: synthesised net does not check out ({0})")]
    Verification(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeparationProblem {
    /// Some region must block the label at the state.
    Event(StateId, LabelId),
    /// Some region must give the two states different values.
    State(StateId, StateId),
}

/// Result of a synthesis run.
#[derive(Clone, Debug)]
pub struct SynthesisOutcome {
    pub success: bool,
    /// The synthesised net, one place per region, on success.
    pub net: Option<PetriNet>,
    /// Regions kept after minimisation, in discovery order.
    pub regions: Vec<Region>,
    /// All regions computed before minimisation.
    pub computed_regions: Vec<Region>,
    pub failed_state_separation: Vec<(StateId, StateId)>,
    /// Unsolvable event/state problems grouped by label, in label order.
    pub failed_event_separation: Vec<(LabelId, Vec<StateId>)>,
}

/// Effect vectors with zero effect on every fundamental cycle; every pure
/// region's effect is a rational combination of them.
pub fn region_basis(lts: &Lts) -> Result<Vec<Vec<BigInt>>, SynthesisError> {
    check_preconditions(lts)?;
    let tree = lts.spanning_tree().map_err(|e| SynthesisError::NotTotallyReachable(e.to_string()))?;
    Ok(integer_kernel_basis(&tree.cycle_rows(lts), lts.num_labels()))
}

/// Event/state problems (by label, then state) followed by state pairs.
pub fn enumerate_separation_problems(lts: &Lts) -> Vec<SeparationProblem> {
    let reachable = lts.reachable_states();
    let mut states = reachable.clone();
    states.sort_unstable();
    let mut problems = Vec::new();
    for t in lts.labels() {
        for &s in &states {
            if !lts.is_enabled(s, t) {
                problems.push(SeparationProblem::Event(s, t));
            }
        }
    }
    for (i, &s) in states.iter().enumerate() {
        for &s2 in &states[i + 1..] {
            problems.push(SeparationProblem::State(s, s2));
        }
    }
    problems
}

fn check_preconditions(lts: &Lts) -> Result<(), SynthesisError> {
    if let Some(w) = lts.is_deterministic().into_witness() {
        return Err(SynthesisError::Nondeterministic(format!(
            "state {} has two {} arcs",
            lts.state_name(w.state),
            lts.label_name(w.label)
        )));
    }
    if let Some(w) = lts.is_totally_reachable().into_witness() {
        let what = match w {
            crate::lts::ReachabilityWitness::UnreachableState(s) => {
                format!("state {} is unreachable", lts.state_name(s))
            }
            crate::lts::ReachabilityWitness::UnusedLabel(t) => {
                format!("label {} never occurs", lts.label_name(t))
            }
        };
        return Err(SynthesisError::NotTotallyReachable(what));
    }
    Ok(())
}

/// Synthesises a net whose reachability graph is isomorphic to `lts` (or,
/// with the `language` property, has the same prefix language).
pub fn synthesize(lts: &Lts, props: &Properties) -> Result<SynthesisOutcome, SynthesisError> {
    synthesize_with(lts, props, Strategy::Auto)
}

pub fn synthesize_with(
    lts: &Lts,
    props: &Properties,
    strategy: Strategy,
) -> Result<SynthesisOutcome, SynthesisError> {
    if props.language {
        require_acyclic(lts)?;
    }
    run(lts, props, strategy)
}

/// Synthesis up to language equivalence, for acyclic inputs.
pub fn synthesize_language_only(lts: &Lts, props: &Properties) -> Result<SynthesisOutcome, SynthesisError> {
    let mut props = props.clone();
    props.language = true;
    synthesize_with(lts, &props, Strategy::Auto)
}

/// Synthesises a net whose firing sequences are exactly the prefixes of
/// `word`. Returns the linear transition system of the word as well.
pub fn word_synthesize<S: AsRef<str>>(
    props: &Properties,
    word: &[S],
) -> Result<(Lts, SynthesisOutcome), SynthesisError> {
    let lts = Lts::from_word(word);
    let outcome = synthesize_language_only(&lts, props)?;
    Ok((lts, outcome))
}

fn require_acyclic(lts: &Lts) -> Result<(), SynthesisError> {
    let has_self_loop = lts.arcs().iter().any(|a| a.source == a.target);
    if has_self_loop || lts.strongly_connected_components().iter().any(|c| c.len() > 1) {
        return Err(SynthesisError::CyclicInput);
    }
    Ok(())
}

fn run(lts: &Lts, props: &Properties, strategy: Strategy) -> Result<SynthesisOutcome, SynthesisError> {
    check_preconditions(lts)?;
    let ctx = Context::new(lts, props).map_err(|e: LtsError| SynthesisError::NotTotallyReachable(e.to_string()))?;
    let problems: Vec<SeparationProblem> = enumerate_separation_problems(lts)
        .into_iter()
        .filter(|p| !props.language || matches!(p, SeparationProblem::Event(..)))
        .collect();

    let mut regions: Vec<Region> = Vec::new();
    let mut values: Vec<Vec<i64>> = Vec::new();
    let mut failed = Vec::new();
    for &problem in &problems {
        if values.iter().zip(&regions).any(|(v, r)| solves(r, v, problem)) {
            continue;
        }
        match ctx.solve(problem, strategy)? {
            Some(region) => {
                let v = region
                    .values(lts)
                    .ok_or_else(|| SynthesisError::Verification("solver returned a non-region".into()))?;
                if !solves(&region, &v, problem) {
                    return Err(SynthesisError::Verification(
                        "solver returned a region that does not separate".into(),
                    ));
                }
                regions.push(region);
                values.push(v);
            }
            None => failed.push(problem),
        }
    }

    let solved_sets: Vec<Vec<usize>> = regions
        .iter()
        .zip(&values)
        .map(|(r, v)| {
            (0..problems.len())
                .filter(|&p| solves(r, v, problems[p]))
                .collect()
        })
        .collect();
    let kept: Vec<Region> = minimize_regions(problems.len(), &solved_sets)
        .into_iter()
        .map(|r| regions[r].clone())
        .collect();

    let mut failed_state_separation = Vec::new();
    let mut failed_event_separation: Vec<(LabelId, Vec<StateId>)> = Vec::new();
    for problem in failed {
        match problem {
            SeparationProblem::State(s, s2) => failed_state_separation.push((s, s2)),
            SeparationProblem::Event(s, t) => match failed_event_separation.last_mut() {
                Some((label, states)) if *label == t => states.push(s),
                _ => failed_event_separation.push((t, vec![s])),
            },
        }
    }
    let success = failed_state_separation.is_empty() && failed_event_separation.is_empty();
    let net = if success {
        let net = build_net(lts, &kept);
        verify(lts, props, &net)?;
        Some(net)
    } else {
        None
    };
    Ok(SynthesisOutcome {
        success,
        net,
        regions: kept,
        computed_regions: regions,
        failed_state_separation,
        failed_event_separation,
    })
}

fn solves(region: &Region, values: &[i64], problem: SeparationProblem) -> bool {
    match problem {
        SeparationProblem::Event(s, t) => region.disables(values[s], t),
        SeparationProblem::State(s, s2) => values[s] != values[s2],
    }
}

/// One place per region: `F(p, t) = 𝔹(t)`, `F(t, p) = 𝔽(t)`, `M0(p) = ℝ(s0)`.
/// Transitions are the labels, named after them.
pub fn build_net(lts: &Lts, regions: &[Region]) -> PetriNet {
    let mut net = PetriNet::new();
    net.set_name(lts.name());
    let transitions: Vec<usize> = lts
        .labels()
        .map(|t| {
            let id = net
                .add_transition(lts.label_name(t))
                .expect("label names are distinct");
            net.set_location(id, lts.location(t).map(str::to_string));
            id
        })
        .collect();
    let mut counter = 0;
    for region in regions {
        let place = loop {
            let name = format!("p{counter}");
            counter += 1;
            if let Ok(p) = net.add_place(&name) {
                break p;
            }
        };
        for t in lts.labels() {
            net.add_flow_to_transition(place, transitions[t], region.backward[t]);
            net.add_flow_to_place(transitions[t], place, region.forward[t]);
        }
        net.set_initial_tokens(place, region.initial);
    }
    net
}

fn verify(lts: &Lts, props: &Properties, net: &PetriNet) -> Result<(), SynthesisError> {
    let fail = |what: &str| Err(SynthesisError::Verification(what.to_string()));
    let rg = match net.reachability_graph_with_limit(lts.num_states() + 1) {
        Ok(rg) => rg,
        Err(NetError::StateLimitExceeded(_)) => return fail("reachability graph too large"),
        Err(e) => return Err(SynthesisError::Verification(e.to_string())),
    };
    if props.language {
        if !rg.lts().language_equivalent(lts).holds() {
            return fail("languages differ");
        }
    } else if !rg.lts().is_isomorphic(lts) {
        return fail("reachability graph is not isomorphic to the input");
    }
    if props.pure && !net.is_pure().holds() {
        return fail("net is not pure");
    }
    if props.requires_plain() && !net.is_plain().holds() {
        return fail("net is not plain");
    }
    if props.output_nonbranching && !net.is_output_nonbranching().holds() {
        return fail("net is not output-nonbranching");
    }
    if props.tnet && !net.is_tnet().holds() {
        return fail("net is not a T-net");
    }
    if props.conflict_free && !net.is_conflict_free().holds() {
        return fail("net is not conflict-free");
    }
    if let Some(k) = props.k_bounded {
        let within = rg.markings().iter().all(|m| m.tokens().iter().all(|&n| n <= k));
        if !within {
            return fail("net is not k-bounded");
        }
    }
    for t in net.transitions() {
        for u in net.transitions() {
            let (Some(a), Some(b)) = (net.location(t), net.location(u)) else {
                continue;
            };
            let shared = net
                .preset(t)
                .iter()
                .any(|&(p, _)| net.weight_to_transition(p, u) > 0);
            if a != b && shared {
                return fail("differently located transitions share a pre-place");
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
