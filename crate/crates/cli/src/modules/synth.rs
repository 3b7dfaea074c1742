use apt_core::io::print_net;
use apt_core::synthesis::{synthesize, word_synthesize, Properties, SynthesisError};

use super::{LTS, OUTPUT};
use crate::args::Values;
use crate::registry::{Kind, ModuleDescriptor, Param};
use crate::report::Report;
use crate::CliError;

fn synthesis_error(e: SynthesisError) -> CliError {
    match e {
        SynthesisError::UnknownProperty(_) => CliError::Usage(e.to_string()),
        _ => CliError::Precondition(e.to_string()),
    }
}

const OPTIONS: Param = Param {
    name: "options",
    kind: Kind::Text,
    optional: false,
    description: "Comma-separated properties: none, pure, plain, output-nonbranching, t-net, conflict-free, safe, k-bounded, language, verbose",
};

fn synthesize_module(v: &Values) -> Result<Report, CliError> {
    let props = Properties::parse(v.text("options").expect("required")).map_err(synthesis_error)?;
    let lts = v.lts("lts");
    let outcome = synthesize(lts, &props).map_err(synthesis_error)?;
    let mut r = Report::new();
    r.raw(&outcome.render(lts, props.verbose));
    if let Some(net) = &outcome.net {
        r.document(v.output("output"), print_net(net));
    }
    Ok(r)
}

pub const SYNTHESIZE: ModuleDescriptor = ModuleDescriptor {
    name: "synthesize",
    params: &[OPTIONS, LTS, OUTPUT],
    description: "Synthesize a Petri net whose reachability graph is isomorphic to an LTS (or, with language, has the same language).",
    run: synthesize_module,
};

fn word_synthesize_module(v: &Values) -> Result<Report, CliError> {
    let props = Properties::parse(v.text("options").expect("required")).map_err(synthesis_error)?;
    let word: Vec<&str> = v
        .text("word")
        .expect("required")
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let (lts, outcome) = word_synthesize(&props, &word).map_err(synthesis_error)?;
    let mut r = Report::new();
    r.yes_no("success", outcome.success);
    if !outcome.success {
        r.put("separationFailurePoints", outcome.separation_failure_points(&lts));
    }
    if let Some(net) = &outcome.net {
        r.document(v.output("output"), print_net(net));
    }
    Ok(r)
}

pub const WORD_SYNTHESIZE: ModuleDescriptor = ModuleDescriptor {
    name: "word_synthesize",
    params: &[
        OPTIONS,
        Param {
            name: "word",
            kind: Kind::Text,
            optional: false,
            description: "Comma-separated letters of the word",
        },
        OUTPUT,
    ],
    description: "Synthesize a Petri net whose firing sequences are exactly the prefixes of a word.",
    run: word_synthesize_module,
};
