use apt_core::io::print_lts_with_comments;
use apt_core::net::{ConflictWitness, Element, Separability, SeparabilityMode};
use apt_core::structure::{self, InvariantKind};
use apt_core::{PetriNet, Verdict};

use super::{precondition, sequence, OUTPUT, PN};
use crate::args::Values;
use crate::registry::{Kind, ModuleDescriptor, Param};
use crate::report::{list, Report};
use crate::CliError;

type Run = Result<Report, CliError>;

fn places(net: &PetriNet, ps: &[usize]) -> String {
    let names: Vec<&str> = ps.iter().map(|&p| net.place_name(p)).collect();
    format!("{{{}}}", names.join(", "))
}

fn arc_witness(report: &mut Report, net: &PetriNet, verdict: Verdict<(usize, usize)>) {
    if let Some((p, t)) = verdict.into_witness() {
        report.put("witness_place", net.place_name(p));
        report.put("witness_transition", net.transition_name(t));
    }
}

fn place_witness(report: &mut Report, key: &str, net: &PetriNet, verdict: Verdict<usize>) {
    report.yes_no(key, verdict.holds());
    if let Some(p) = verdict.into_witness() {
        report.put("witness_place", net.place_name(p));
    }
}

fn pairs(net: &PetriNet, pairs: &[(usize, usize)]) -> String {
    list(pairs.iter().map(|&(p, t)| format!("({}, {})", net.place_name(p), net.transition_name(t))))
}

fn isolated(v: &Values) -> Run {
    let net = v.net("pn");
    let elements = net.isolated_elements();
    let mut r = Report::new();
    r.yes_no("isolated_elements", !elements.is_empty());
    if !elements.is_empty() {
        r.put("witness_elements", list(elements.iter().map(|&e| net.element_name(e))));
    }
    Ok(r)
}

pub const ISOLATED: ModuleDescriptor = ModuleDescriptor {
    name: "isolated",
    params: &[PN],
    description: "Check if a Petri net has isolated places or transitions.",
    run: isolated,
};

fn plain(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = net.is_plain();
    let mut r = Report::new();
    r.yes_no("plain", verdict.holds());
    arc_witness(&mut r, net, verdict);
    Ok(r)
}

pub const PLAIN: ModuleDescriptor = ModuleDescriptor {
    name: "plain",
    params: &[PN],
    description: "Check if every arc weight of a Petri net is at most one.",
    run: plain,
};

fn pure(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = net.is_pure();
    let mut r = Report::new();
    r.yes_no("pure", verdict.holds());
    arc_witness(&mut r, net, verdict);
    Ok(r)
}

pub const PURE: ModuleDescriptor = ModuleDescriptor {
    name: "pure",
    params: &[PN],
    description: "Check if a Petri net has no side conditions.",
    run: pure,
};

fn side_conditions(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    r.put("side_conditions", pairs(net, &net.side_conditions()));
    Ok(r)
}

pub const SIDE_CONDITIONS: ModuleDescriptor = ModuleDescriptor {
    name: "side_conditions",
    params: &[PN],
    description: "List all side conditions (p, t) of a Petri net: t both consumes from and produces on p.",
    run: side_conditions,
};

fn non_plain_side_conditions(v: &Values) -> Run {
    let net = v.net("pn");
    let found = net.non_plain_side_conditions();
    let mut r = Report::new();
    r.yes_no("non_plain_side_conditions", !found.is_empty());
    if !found.is_empty() {
        r.put("witness", pairs(net, &found));
    }
    Ok(r)
}

pub const NON_PLAIN_SIDE_CONDITIONS: ModuleDescriptor = ModuleDescriptor {
    name: "non_plain_side_conditions",
    params: &[PN],
    description: "Check if a Petri net has side conditions with an arc weight above one.",
    run: non_plain_side_conditions,
};

fn marked_graph(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    place_witness(&mut r, "marked_graph", net, net.is_marked_graph());
    Ok(r)
}

pub const MARKED_GRAPH: ModuleDescriptor = ModuleDescriptor {
    name: "marked_graph",
    params: &[PN],
    description: "Check if a Petri net is a marked graph: plain, and every place has exactly one producer and one consumer.",
    run: marked_graph,
};

fn tnet(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    place_witness(&mut r, "t_net", net, net.is_tnet());
    Ok(r)
}

pub const TNET: ModuleDescriptor = ModuleDescriptor {
    name: "tnet",
    params: &[PN],
    description: "Check if a Petri net is a T-net: plain, and every place has at most one producer and one consumer.",
    run: tnet,
};

fn on(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    place_witness(&mut r, "output_nonbranching", net, net.is_output_nonbranching());
    Ok(r)
}

pub const ON: ModuleDescriptor = ModuleDescriptor {
    name: "on",
    params: &[PN],
    description: "Check if a Petri net is output-nonbranching: every place has at most one consumer.",
    run: on,
};

fn cf(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    place_witness(&mut r, "conflict_free", net, net.is_conflict_free());
    Ok(r)
}

pub const CF: ModuleDescriptor = ModuleDescriptor {
    name: "cf",
    params: &[PN],
    description: "Check if a Petri net is conflict-free: plain, and every place with several consumers is a side condition of each.",
    run: cf,
};

fn rows(m: &[Vec<i64>]) -> String {
    list(m.iter().map(|row| list(row.iter().map(|x| x.to_string()))))
}

fn matrices(v: &Values) -> Run {
    let net = v.net("pn");
    let m = structure::incidence_matrices(net);
    let mut r = Report::new();
    r.put("places", list(net.places().map(|p| net.place_name(p))));
    r.put("transitions", list(net.transitions().map(|t| net.transition_name(t))));
    r.put("backward", rows(&m.backward));
    r.put("forward", rows(&m.forward));
    r.put("incidence", rows(&m.incidence));
    Ok(r)
}

pub const MATRICES: ModuleDescriptor = ModuleDescriptor {
    name: "matrices",
    params: &[PN],
    description: "Compute the backward, forward and incidence matrices of a Petri net (one row per place).",
    run: matrices,
};

fn invariant_report(net: &PetriNet, kind: InvariantKind, key: &str) -> Report {
    let invariants = structure::invariants(net, kind);
    let mut r = Report::new();
    let axis: Vec<&str> = match kind {
        InvariantKind::S => net.places().map(|p| net.place_name(p)).collect(),
        InvariantKind::T => net.transitions().map(|t| net.transition_name(t)).collect(),
    };
    r.put(if kind == InvariantKind::S { "places" } else { "transitions" }, list(axis));
    r.put(key, list(invariants.iter().map(|i| format!("({})", i.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")))));
    r
}

fn s_invariants(v: &Values) -> Run {
    Ok(invariant_report(v.net("pn"), InvariantKind::S, "s_invariants"))
}

pub const S_INVARIANTS: ModuleDescriptor = ModuleDescriptor {
    name: "s_invariants",
    params: &[PN],
    description: "Compute the minimal semipositive S-invariants of a Petri net.",
    run: s_invariants,
};

fn t_invariants(v: &Values) -> Run {
    Ok(invariant_report(v.net("pn"), InvariantKind::T, "t_invariants"))
}

pub const T_INVARIANTS: ModuleDescriptor = ModuleDescriptor {
    name: "t_invariants",
    params: &[PN],
    description: "Compute the minimal semipositive T-invariants of a Petri net.",
    run: t_invariants,
};

fn covered_s(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = structure::covered_by_invariants(net, InvariantKind::S);
    let mut r = Report::new();
    place_witness(&mut r, "covered_by_s_invariants", net, verdict);
    Ok(r)
}

pub const COVERED_BY_S_INVARIANTS: ModuleDescriptor = ModuleDescriptor {
    name: "covered_by_s_invariants",
    params: &[PN],
    description: "Check if every place lies in the support of a semipositive S-invariant.",
    run: covered_s,
};

fn covered_t(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = structure::covered_by_invariants(net, InvariantKind::T);
    let mut r = Report::new();
    r.yes_no("covered_by_t_invariants", verdict.holds());
    if let Some(t) = verdict.into_witness() {
        r.put("witness_transition", net.transition_name(t));
    }
    Ok(r)
}

pub const COVERED_BY_T_INVARIANTS: ModuleDescriptor = ModuleDescriptor {
    name: "covered_by_t_invariants",
    params: &[PN],
    description: "Check if every transition lies in the support of a semipositive T-invariant.",
    run: covered_t,
};

fn siphons(v: &Values) -> Run {
    let net = v.net("pn");
    let found = structure::minimal_siphons(net).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut r = Report::new();
    r.put("minimal_siphons", list(found.iter().map(|s| places(net, s))));
    Ok(r)
}

pub const SIPHONS: ModuleDescriptor = ModuleDescriptor {
    name: "siphons",
    params: &[PN],
    description: "Compute all minimal nonempty siphons of a Petri net.",
    run: siphons,
};

fn traps(v: &Values) -> Run {
    let net = v.net("pn");
    let found = structure::minimal_traps(net).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut r = Report::new();
    r.put("minimal_traps", list(found.iter().map(|s| places(net, s))));
    Ok(r)
}

pub const TRAPS: ModuleDescriptor = ModuleDescriptor {
    name: "traps",
    params: &[PN],
    description: "Compute all minimal nonempty traps of a Petri net.",
    run: traps,
};

fn gcd(v: &Values) -> Run {
    let mut r = Report::new();
    r.put("gcd", v.net("pn").gcd_initial_marking());
    Ok(r)
}

pub const GCD: ModuleDescriptor = ModuleDescriptor {
    name: "gcd",
    params: &[PN],
    description: "Compute the greatest common divisor of the initial token counts.",
    run: gcd,
};

fn bounded(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = match v.int("k") {
        Some(k) => net.k_bounded(k),
        None => net.bounded(),
    };
    let mut r = Report::new();
    r.yes_no("bounded", verdict.holds());
    if let Some(w) = verdict.into_witness() {
        r.put("witness_place", net.place_name(w.place));
        r.put("witness_firing_sequence", sequence(net, &w.sequence));
    }
    Ok(r)
}

pub const BOUNDED: ModuleDescriptor = ModuleDescriptor {
    name: "bounded",
    params: &[
        PN,
        Param {
            name: "k",
            kind: Kind::Int,
            optional: true,
            description: "If given, k-boundedness is checked",
        },
    ],
    description: "Check if a Petri net is bounded or k-bounded.",
    run: bounded,
};

fn weakly_live(v: &Values) -> Run {
    let net = v.net("pn");
    let verdict = net.weakly_live();
    let mut r = Report::new();
    r.yes_no("weakly_live", verdict.holds());
    if let Some(t) = verdict.into_witness() {
        r.put("witness_transition", net.transition_name(t));
    }
    Ok(r)
}

pub const WEAKLY_LIVE: ModuleDescriptor = ModuleDescriptor {
    name: "weakly_live",
    params: &[PN],
    description: "Check if every transition of a Petri net can fire at least once.",
    run: weakly_live,
};

pub(crate) fn conflict(r: &mut Report, key: &str, net: &PetriNet, verdict: Verdict<ConflictWitness>) {
    r.yes_no(key, verdict.holds());
    match verdict.into_witness() {
        None => {}
        Some(ConflictWitness::NotPlain) => {
            r.put("reason", "net is not plain");
        }
        Some(ConflictWitness::Conflict { sequence: seq, first, second }) => {
            r.put("witness_firing_sequence", sequence(net, &seq));
            r.put("witness_transitions", list([net.transition_name(first), net.transition_name(second)]));
        }
    }
}

fn bcf(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    conflict(&mut r, "bcf", net, net.is_bcf().map_err(precondition)?);
    Ok(r)
}

pub const BCF: ModuleDescriptor = ModuleDescriptor {
    name: "bcf",
    params: &[PN],
    description: "Check if a bounded plain Petri net is behaviourally conflict-free: simultaneously enabled transitions have disjoint pre-sets.",
    run: bcf,
};

fn bicf(v: &Values) -> Run {
    let net = v.net("pn");
    let mut r = Report::new();
    conflict(&mut r, "bicf", net, net.is_bicf().map_err(precondition)?);
    Ok(r)
}

pub const BICF: ModuleDescriptor = ModuleDescriptor {
    name: "bicf",
    params: &[PN],
    description: "Check if a bounded plain Petri net is binary-conflict-free: simultaneously enabled transitions can fire concurrently.",
    run: bicf,
};

fn separable(v: &Values) -> Run {
    let net = v.net("pn");
    let k = v.int("k").expect("required");
    let length = v.int("length").expect("required") as usize;
    let mode = match v.text("mode") {
        None | Some("weak") => SeparabilityMode::Weak,
        Some("strong") => SeparabilityMode::Strong,
        Some(other) => {
            return Err(CliError::Usage(format!("mode must be 'weak' or 'strong', got '{other}'")));
        }
    };
    let key = match mode {
        SeparabilityMode::Weak => "weakly_separable",
        SeparabilityMode::Strong => "strongly_separable",
    };
    let mut r = Report::new();
    match net.separable(k, length, mode).map_err(precondition)? {
        Separability::No(seq) => {
            r.put(key, "No");
            r.put("witness_firing_sequence", sequence(net, &seq));
        }
        Separability::Inconclusive => {
            r.put(key, format!("Inconclusive (no counterexample up to length {length})"));
        }
    }
    Ok(r)
}

pub const SEPARABLE: ModuleDescriptor = ModuleDescriptor {
    name: "separable",
    params: &[
        PN,
        Param {
            name: "k",
            kind: Kind::Int,
            optional: false,
            description: "Factor k >= 2; the initial marking must be divisible by it",
        },
        Param {
            name: "length",
            kind: Kind::Int,
            optional: false,
            description: "Longest firing sequence examined",
        },
        Param {
            name: "mode",
            kind: Kind::Text,
            optional: true,
            description: "weak (default) or strong",
        },
    ],
    description: "Search for a firing sequence from k times the initial marking that does not split into k sequences from the initial marking.",
    run: separable,
};

fn word_in_language(v: &Values) -> Run {
    let net = v.net("pn");
    let word: Vec<&str> = v
        .text("word")
        .expect("required")
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let outcome = net.word_in_language(&word).map_err(|e| CliError::Input(e.to_string()))?;
    let mut r = Report::new();
    r.yes_no("word_in_language", outcome.accepted);
    if !outcome.accepted {
        r.put("longest_fireable_prefix", list(&word[..outcome.prefix_len]));
    }
    r.put("firing_sequence", sequence(net, &outcome.sequence));
    Ok(r)
}

pub const WORD_IN_LANGUAGE: ModuleDescriptor = ModuleDescriptor {
    name: "word_in_language",
    params: &[
        PN,
        Param {
            name: "word",
            kind: Kind::Text,
            optional: false,
            description: "Comma-separated sequence of labels",
        },
    ],
    description: "Check if a labelled Petri net can fire a sequence carrying the given labels.",
    run: word_in_language,
};

fn coverability_graph(v: &Values) -> Run {
    let net = v.net("pn");
    let cg = net.coverability_graph();
    let comments: Vec<String> = cg.markings().iter().map(|m| m.display(net)).collect();
    let mut lts = cg.into_lts();
    lts.set_name(net.name());
    let mut r = Report::new();
    r.document(v.output("output"), print_lts_with_comments(&lts, &comments));
    Ok(r)
}

pub const COVERABILITY_GRAPH: ModuleDescriptor = ModuleDescriptor {
    name: "coverability_graph",
    params: &[PN, OUTPUT],
    description: "Compute the coverability graph of a Petri net; for bounded nets this is the reachability graph. States carry their markings as comments.",
    run: coverability_graph,
};

pub(crate) fn element_names(net: &PetriNet, elements: &[Element]) -> String {
    list(elements.iter().map(|&e| net.element_name(e)))
}
