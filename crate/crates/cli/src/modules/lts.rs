use apt_core::io::{to_dot, Document};
use apt_core::lts::ReachabilityWitness;
use apt_core::Lts;

use super::net::{conflict, element_names};
use super::{as_lts, precondition, sequence, LTS, OUTPUT, PN_OR_LTS};
use crate::args::Values;
use crate::registry::{Kind, ModuleDescriptor, Param};
use crate::report::{list, Report};
use crate::CliError;

type Run = Result<Report, CliError>;

fn states(lts: &Lts, ss: &[usize]) -> String {
    list(ss.iter().map(|&s| lts.state_name(s)))
}

fn cycle_error(e: apt_core::LtsError) -> CliError {
    CliError::Precondition(e.to_string())
}

fn connectivity(v: &Values, strong: bool) -> Run {
    let key = if strong { "strongly_connected" } else { "weakly_connected" };
    let mut r = Report::new();
    match v.document("pn_or_lts") {
        Document::Net(net) => {
            let c = net.connectivity();
            let (holds, components) = if strong {
                (c.strongly_connected, c.strong_components)
            } else {
                (c.weakly_connected, c.weak_components)
            };
            r.yes_no(key, holds);
            r.put("components", list(components.iter().map(|comp| element_names(net, comp))));
        }
        Document::Lts(lts) => {
            let components = if strong {
                lts.strongly_connected_components()
            } else {
                lts.weakly_connected_components()
            };
            r.yes_no(key, components.len() <= 1);
            r.put("components", list(components.iter().map(|c| states(lts, c))));
        }
    }
    Ok(r)
}

fn weakly_connected(v: &Values) -> Run {
    connectivity(v, false)
}

pub const WEAKLY_CONNECTED: ModuleDescriptor = ModuleDescriptor {
    name: "weakly_connected",
    params: &[PN_OR_LTS],
    description: "Check if a Petri net or LTS is weakly connected, and list its weakly connected components.",
    run: weakly_connected,
};

fn strongly_connected(v: &Values) -> Run {
    connectivity(v, true)
}

pub const STRONGLY_CONNECTED: ModuleDescriptor = ModuleDescriptor {
    name: "strongly_connected",
    params: &[PN_OR_LTS],
    description: "Check if a Petri net or LTS is strongly connected, and list its strongly connected components.",
    run: strongly_connected,
};

fn persistent(v: &Values) -> Run {
    let mut r = Report::new();
    match v.document("pn_or_lts") {
        Document::Net(net) => conflict(&mut r, "persistent", net, net.persistent().map_err(precondition)?),
        Document::Lts(lts) => {
            let verdict = lts.is_persistent().map_err(|e| CliError::Precondition(e.to_string()))?;
            r.yes_no("persistent", verdict.holds());
            if let Some(w) = verdict.into_witness() {
                r.put("witness_state", lts.state_name(w.state));
                r.put("witness_labels", list([lts.label_name(w.first), lts.label_name(w.second)]));
            }
        }
    }
    Ok(r)
}

pub const PERSISTENT: ModuleDescriptor = ModuleDescriptor {
    name: "persistent",
    params: &[PN_OR_LTS],
    description: "Check if a bounded Petri net or a deterministic LTS is persistent: enabled labels never disable each other.",
    run: persistent,
};

fn reversible(v: &Values) -> Run {
    let mut r = Report::new();
    match v.document("pn_or_lts") {
        Document::Net(net) => {
            let verdict = net.reversible().map_err(precondition)?;
            r.yes_no("reversible", verdict.holds());
            if let Some(seq) = verdict.into_witness() {
                r.put("witness_firing_sequence", sequence(net, &seq));
            }
        }
        Document::Lts(lts) => {
            let verdict = lts.is_reversible();
            r.yes_no("reversible", verdict.holds());
            if let Some(s) = verdict.into_witness() {
                r.put("witness_state", lts.state_name(s));
            }
        }
    }
    Ok(r)
}

pub const REVERSIBLE: ModuleDescriptor = ModuleDescriptor {
    name: "reversible",
    params: &[PN_OR_LTS],
    description: "Check if the initial state can be reached again from every reachable state.",
    run: reversible,
};

fn compute_pvs(v: &Values) -> Run {
    let lts = as_lts(v.document("pn_or_lts"))?;
    let pvs = lts.small_cycle_parikh_vectors().map_err(cycle_error)?;
    let mut r = Report::new();
    r.put("parikh_vectors", list(pvs.iter().map(|pv| pv.display(&lts))));
    Ok(r)
}

pub const COMPUTE_PVS: ModuleDescriptor = ModuleDescriptor {
    name: "compute_pvs",
    params: &[PN_OR_LTS],
    description: "Compute the Parikh vectors of all small cycles.",
    run: compute_pvs,
};

fn cycles_same_pv(v: &Values) -> Run {
    let lts = as_lts(v.document("pn_or_lts"))?;
    let pvs = lts.small_cycle_parikh_vectors().map_err(cycle_error)?;
    let mut r = Report::new();
    r.yes_no("cycles_same_pv", pvs.len() <= 1);
    if pvs.len() > 1 {
        r.put("witness", list(pvs[..2].iter().map(|pv| pv.display(&lts))));
    }
    Ok(r)
}

pub const CYCLES_SAME_PV: ModuleDescriptor = ModuleDescriptor {
    name: "cycles_same_pv",
    params: &[PN_OR_LTS],
    description: "Check if all small cycles have the same Parikh vector.",
    run: cycles_same_pv,
};

fn weak_small_cycle(v: &Values) -> Run {
    let lts = as_lts(v.document("pn_or_lts"))?;
    let holds = lts.weak_small_cycle_property().map_err(cycle_error)?;
    let mut r = Report::new();
    r.yes_no("weak_small_cycle_property", holds);
    Ok(r)
}

pub const WEAK_SMALL_CYCLE: ModuleDescriptor = ModuleDescriptor {
    name: "weak_small_cycle",
    params: &[PN_OR_LTS],
    description: "Check if distinct small-cycle Parikh vectors have disjoint supports.",
    run: weak_small_cycle,
};

const FIRST: Param = Param {
    name: "first",
    kind: Kind::NetOrLts,
    optional: false,
    description: "A Petri net (via its reachability graph) or an LTS",
};

const SECOND: Param = Param {
    name: "second",
    kind: Kind::NetOrLts,
    optional: false,
    description: "Another Petri net or LTS",
};

fn isomorphism(v: &Values) -> Run {
    let a = as_lts(v.document("first"))?;
    let b = as_lts(v.document("second"))?;
    let mut r = Report::new();
    r.yes_no("isomorphic", a.is_isomorphic(&b));
    Ok(r)
}

pub const ISOMORPHISM: ModuleDescriptor = ModuleDescriptor {
    name: "isomorphism",
    params: &[FIRST, SECOND],
    description: "Check if two LTS (or reachability graphs) are isomorphic, matching labels by name.",
    run: isomorphism,
};

fn bisimulation(v: &Values) -> Run {
    let a = as_lts(v.document("first"))?;
    let b = as_lts(v.document("second"))?;
    let mut r = Report::new();
    r.yes_no("bisimilar", a.is_bisimilar(&b));
    Ok(r)
}

pub const BISIMULATION: ModuleDescriptor = ModuleDescriptor {
    name: "bisimulation",
    params: &[FIRST, SECOND],
    description: "Check if two LTS (or reachability graphs) are bisimilar.",
    run: bisimulation,
};

fn language_equivalence(v: &Values) -> Run {
    let a = as_lts(v.document("first"))?;
    let b = as_lts(v.document("second"))?;
    let verdict = a.language_equivalent(&b);
    let mut r = Report::new();
    r.yes_no("language_equivalent", verdict.holds());
    if let Some(w) = verdict.into_witness() {
        r.put("witness_word", list(&w.word));
        r.put("enabled_in", if w.enabled_in_first { "first" } else { "second" });
    }
    Ok(r)
}

pub const LANGUAGE_EQUIVALENCE: ModuleDescriptor = ModuleDescriptor {
    name: "language_equivalence",
    params: &[FIRST, SECOND],
    description: "Check if two LTS (or labelled Petri nets) have the same prefix language.",
    run: language_equivalence,
};

fn draw(v: &Values) -> Run {
    let mut r = Report::new();
    r.document(v.output("output"), to_dot(v.document("pn_or_lts")));
    Ok(r)
}

pub const DRAW: ModuleDescriptor = ModuleDescriptor {
    name: "draw",
    params: &[
        Param {
            name: "pn_or_lts",
            kind: Kind::NetOrLts,
            optional: false,
            description: "The Petri net or LTS to draw",
        },
        OUTPUT,
    ],
    description: "Translate a Petri net or LTS into the DOT format of GraphViz.",
    run: draw,
};

fn deterministic(v: &Values) -> Run {
    let lts = v.lts("lts");
    let verdict = lts.is_deterministic();
    let mut r = Report::new();
    r.yes_no("deterministic", verdict.holds());
    if let Some(w) = verdict.into_witness() {
        r.put("witness_state", lts.state_name(w.state));
        r.put("witness_label", lts.label_name(w.label));
    }
    Ok(r)
}

pub const DETERMINISTIC: ModuleDescriptor = ModuleDescriptor {
    name: "deterministic",
    params: &[LTS],
    description: "Check if no reachable state of an LTS has two arcs with the same label.",
    run: deterministic,
};

fn totally_reachable(v: &Values) -> Run {
    let lts = v.lts("lts");
    let verdict = lts.is_totally_reachable();
    let mut r = Report::new();
    r.yes_no("totally_reachable", verdict.holds());
    match verdict.into_witness() {
        Some(ReachabilityWitness::UnreachableState(s)) => {
            r.put("witness_state", lts.state_name(s));
        }
        Some(ReachabilityWitness::UnusedLabel(l)) => {
            r.put("witness_label", lts.label_name(l));
        }
        None => {}
    }
    Ok(r)
}

pub const TOTALLY_REACHABLE: ModuleDescriptor = ModuleDescriptor {
    name: "totally_reachable",
    params: &[LTS],
    description: "Check if every state of an LTS is reachable and every label occurs on some reachable arc.",
    run: totally_reachable,
};
