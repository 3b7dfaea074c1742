//! The registered modules, in the order they are listed.

mod generate;
mod lts;
mod net;
mod synth;

use std::borrow::Cow;

use apt_core::io::Document;
use apt_core::net::NetError;
use apt_core::{Lts, PetriNet};

use crate::registry::{Kind, ModuleDescriptor, Param};
use crate::report::Report;
use crate::{args::Values, CliError};

pub(crate) const PN: Param = Param {
    name: "pn",
    kind: Kind::Net,
    optional: false,
    description: "The Petri net that should be examined",
};

pub(crate) const LTS: Param = Param {
    name: "lts",
    kind: Kind::Lts,
    optional: false,
    description: "The LTS that should be examined",
};

pub(crate) const PN_OR_LTS: Param = Param {
    name: "pn_or_lts",
    kind: Kind::NetOrLts,
    optional: false,
    description: "A Petri net (via its reachability graph) or an LTS",
};

pub(crate) const OUTPUT: Param = Param {
    name: "output",
    kind: Kind::Output,
    optional: true,
    description: "File to write the result to; standard output if omitted or -",
};

pub(crate) fn precondition(e: NetError) -> CliError {
    CliError::Precondition(e.to_string())
}

/// An LTS as is, or the reachability graph of a bounded net.
pub(crate) fn as_lts(doc: &Document) -> Result<Cow<'_, Lts>, CliError> {
    match doc {
        Document::Lts(lts) => Ok(Cow::Borrowed(lts)),
        Document::Net(net) => Ok(Cow::Owned(net.bounded_reachability_graph().map_err(precondition)?.into_lts())),
    }
}

pub(crate) fn sequence(net: &PetriNet, seq: &[usize]) -> String {
    crate::report::list(net.sequence_names(seq))
}

fn help(values: &Values) -> Result<Report, CliError> {
    let mut report = Report::new();
    match values.text("module") {
        None => report.raw(&crate::module_list()),
        Some(name) => report.raw(&crate::resolve(name)?.help()),
    };
    Ok(report)
}

const HELP: ModuleDescriptor = ModuleDescriptor {
    name: "help",
    params: &[Param {
        name: "module",
        kind: Kind::Text,
        optional: true,
        description: "Name or unique prefix of the module to describe",
    }],
    description: "Print usage information for a module, or list all modules.",
    run: help,
};

pub static MODULES: &[ModuleDescriptor] = &[
    HELP,
    // Petri net structure
    net::ISOLATED,
    net::PLAIN,
    net::PURE,
    net::SIDE_CONDITIONS,
    net::NON_PLAIN_SIDE_CONDITIONS,
    net::MARKED_GRAPH,
    net::TNET,
    net::ON,
    net::CF,
    net::MATRICES,
    net::S_INVARIANTS,
    net::T_INVARIANTS,
    net::COVERED_BY_S_INVARIANTS,
    net::COVERED_BY_T_INVARIANTS,
    net::SIPHONS,
    net::TRAPS,
    net::GCD,
    // Petri net behaviour
    net::BOUNDED,
    net::WEAKLY_LIVE,
    net::BCF,
    net::BICF,
    net::SEPARABLE,
    net::WORD_IN_LANGUAGE,
    net::COVERABILITY_GRAPH,
    // Either kind
    lts::WEAKLY_CONNECTED,
    lts::STRONGLY_CONNECTED,
    lts::PERSISTENT,
    lts::REVERSIBLE,
    lts::COMPUTE_PVS,
    lts::CYCLES_SAME_PV,
    lts::WEAK_SMALL_CYCLE,
    lts::ISOMORPHISM,
    lts::BISIMULATION,
    lts::LANGUAGE_EQUIVALENCE,
    lts::DRAW,
    // LTS only
    lts::DETERMINISTIC,
    lts::TOTALLY_REACHABLE,
    // Synthesis
    synth::SYNTHESIZE,
    synth::WORD_SYNTHESIZE,
    // Generators
    generate::BITNET,
    generate::PHILNET,
    generate::CYCLE,
];
