use std::fmt::Write;

use super::Document;
use crate::lts::Lts;
use crate::net::PetriNet;

pub fn print(doc: &Document) -> String {
    match doc {
        Document::Net(net) => print_net(net),
        Document::Lts(lts) => print_lts(lts),
    }
}

pub(crate) fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn header(out: &mut String, name: &str, description: &str, kind: &str) {
    writeln!(out, ".name {}", quote(name)).unwrap();
    if !description.is_empty() {
        writeln!(out, ".description {}", quote(description)).unwrap();
    }
    writeln!(out, ".type {kind}").unwrap();
}

fn multiset(net: &PetriNet, entries: &[(usize, u64)]) -> String {
    let items: Vec<String> = entries
        .iter()
        .map(|&(p, n)| match n {
            1 => net.place_name(p).to_string(),
            n => format!("{n} * {}", net.place_name(p)),
        })
        .collect();
    if items.is_empty() {
        "{}".into()
    } else {
        format!("{{ {} }}", items.join(", "))
    }
}

/// Canonical text of a net: declaration order, `n * p` weights.
pub fn print_net(net: &PetriNet) -> String {
    let mut out = String::new();
    header(&mut out, net.name(), net.description(), "LPN");
    out.push_str("\n.places\n");
    for p in net.places() {
        writeln!(out, "{}", net.place_name(p)).unwrap();
    }
    out.push_str("\n.transitions\n");
    for t in net.transitions() {
        let mut attrs = Vec::new();
        if net.label(t) != net.transition_name(t) {
            attrs.push(format!("label={}", quote(net.label(t))));
        }
        if let Some(loc) = net.location(t) {
            attrs.push(format!("location={}", quote(loc)));
        }
        out.push_str(net.transition_name(t));
        if !attrs.is_empty() {
            write!(out, "[{}]", attrs.join(", ")).unwrap();
        }
        out.push('\n');
    }
    out.push_str("\n.flows\n");
    for t in net.transitions() {
        writeln!(
            out,
            "{}: {} -> {}",
            net.transition_name(t),
            multiset(net, net.preset(t)),
            multiset(net, net.postset(t))
        )
        .unwrap();
    }
    let marked: Vec<(usize, u64)> = net
        .places()
        .map(|p| (p, net.initial_marking().get(p)))
        .filter(|&(_, n)| n > 0)
        .collect();
    writeln!(out, "\n.initial_marking {}", multiset(net, &marked)).unwrap();
    out
}

pub fn print_lts(lts: &Lts) -> String {
    print_lts_with_comments(lts, &[])
}

/// Like [`print_lts`], with `comments[s]` written after state `s`, as in
/// reachability graphs annotated with markings.
pub fn print_lts_with_comments(lts: &Lts, comments: &[String]) -> String {
    let mut out = String::new();
    header(&mut out, lts.name(), lts.description(), "LTS");
    out.push_str("\n.states\n");
    for s in lts.states() {
        out.push_str(lts.state_name(s));
        if s == lts.initial() {
            out.push_str("[initial]");
        }
        if let Some(c) = comments.get(s) {
            write!(out, " /* {} */", c.replace("*/", "* /")).unwrap();
        }
        out.push('\n');
    }
    out.push_str("\n.labels\n");
    for l in lts.labels() {
        out.push_str(lts.label_name(l));
        if let Some(loc) = lts.location(l) {
            write!(out, "[location={}]", quote(loc)).unwrap();
        }
        out.push('\n');
    }
    out.push_str("\n.arcs\n");
    let mut arcs = lts.arcs().to_vec();
    arcs.sort_unstable();
    for a in arcs {
        writeln!(
            out,
            "{} {} {}",
            lts.state_name(a.source),
            lts.label_name(a.label),
            lts.state_name(a.target)
        )
        .unwrap();
    }
    out
}
