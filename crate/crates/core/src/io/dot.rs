use std::fmt::Write;

use super::print::quote;
use super::Document;
use crate::lts::Lts;
use crate::net::PetriNet;

pub fn to_dot(doc: &Document) -> String {
    match doc {
        Document::Net(net) => net_to_dot(net),
        Document::Lts(lts) => lts_to_dot(lts),
    }
}

/// States as circles (the initial one doubled), one edge per arc.
pub fn lts_to_dot(lts: &Lts) -> String {
    let mut out = format!("digraph {} {{\n", quote(lts.name()));
    out.push_str("  node [shape=circle];\n");
    for s in lts.states() {
        let extra = if s == lts.initial() { ", peripheries=2" } else { "" };
        writeln!(out, "  s{s} [label={}{extra}];", quote(lts.state_name(s))).unwrap();
    }
    for a in lts.arcs() {
        writeln!(out, "  s{} -> s{} [label={}];", a.source, a.target, quote(lts.label_name(a.label))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Places as circles showing their initial tokens, transitions as boxes.
pub fn net_to_dot(net: &PetriNet) -> String {
    let mut out = format!("digraph {} {{\n", quote(net.name()));
    for p in net.places() {
        let tokens = net.initial_marking().get(p);
        let label = if tokens > 0 {
            format!("{}\n{tokens}", net.place_name(p))
        } else {
            net.place_name(p).to_string()
        };
        writeln!(out, "  p{p} [shape=circle, label={}];", quote(&label).replace('\n', "\\n")).unwrap();
    }
    for t in net.transitions() {
        writeln!(out, "  t{t} [shape=box, label={}];", quote(net.label(t))).unwrap();
    }
    let weight = |w: u64| if w > 1 { format!(" [label=\"{w}\"]") } else { String::new() };
    for t in net.transitions() {
        for &(p, w) in net.preset(t) {
            writeln!(out, "  p{p} -> t{t}{};", weight(w)).unwrap();
        }
        for &(p, w) in net.postset(t) {
            writeln!(out, "  t{t} -> p{p}{};", weight(w)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
