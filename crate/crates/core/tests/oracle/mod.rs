//! Brute-force oracles shared by the acceptance criteria.

use std::collections::{HashSet, VecDeque};

use apt_core::solve::Relation;
use apt_core::synthesis::{synthesize, Properties};
use apt_core::Lts;

/// A transition function `state * labels + label -> target`.
type Delta = Vec<Option<u8>>;

const MAX_STATES: usize = 4;
const MAX_PLACES: usize = 3;
const MAX_VALUE: u8 = 2;

/// Renumbers `delta` in breadth-first order (labels in order) from state 0.
/// `None` unless every state is reachable and every label occurs.
fn canonical(delta: &[Option<u8>], states: usize, labels: usize) -> Option<Delta> {
    let mut number = vec![None; states];
    let mut order = vec![0usize];
    number[0] = Some(0u8);
    let mut i = 0;
    while i < order.len() {
        let s = order[i];
        for l in 0..labels {
            if let Some(t) = delta[s * labels + l] {
                let t = t as usize;
                if number[t].is_none() {
                    number[t] = Some(order.len() as u8);
                    order.push(t);
                }
            }
        }
        i += 1;
    }
    if order.len() < states {
        return None;
    }
    let mut out = vec![None; states * labels];
    for (new, &old) in order.iter().enumerate() {
        for l in 0..labels {
            out[new * labels + l] = delta[old * labels + l].map(|t| number[t as usize].unwrap());
        }
    }
    (0..labels)
        .all(|l| (0..states).any(|s| out[s * labels + l].is_some()))
        .then_some(out)
}

/// All deterministic, totally reachable transition systems with `states`
/// states over `labels` labels, one per isomorphism class.
fn transition_systems(states: usize, labels: usize) -> Vec<Delta> {
    let slots = states * labels;
    let choices = states + 1;
    let mut out = Vec::new();
    for code in 0..choices.pow(slots as u32) {
        let mut c = code;
        let delta: Delta = (0..slots)
            .map(|_| {
                let d = c % choices;
                c /= choices;
                d.checked_sub(1).map(|t| t as u8)
            })
            .collect();
        if canonical(&delta, states, labels).as_ref() == Some(&delta) {
            out.push(delta);
        }
    }
    out
}

#[derive(Clone, Copy)]
struct PlaceType {
    initial: u8,
    backward: [u8; 2],
    forward: [u8; 2],
}

fn place_types(labels: usize) -> Vec<PlaceType> {
    let range = 0..=MAX_VALUE;
    let mut out = Vec::new();
    for initial in range.clone() {
        for b0 in range.clone() {
            for f0 in range.clone() {
                for b1 in range.clone() {
                    for f1 in range.clone() {
                        if labels == 1 && (b1 > 0 || f1 > 0) {
                            continue;
                        }
                        out.push(PlaceType {
                            initial,
                            backward: [b0, b1],
                            forward: [f0, f1],
                        });
                    }
                }
            }
        }
    }
    out
}

/// Breadth-first reachability graph of a net, already in canonical numbering.
/// `None` if it exceeds `MAX_STATES` states or some label never fires.
fn reachability(places: &[PlaceType], labels: usize) -> Option<(usize, Delta)> {
    let mut markings: Vec<Vec<u8>> = vec![places.iter().map(|p| p.initial).collect()];
    let mut delta: Delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for l in 0..labels {
            let m = &markings[s];
            let enabled = places.iter().zip(m).all(|(p, &v)| v >= p.backward[l]);
            let target = if enabled {
                let next: Vec<u8> = places
                    .iter()
                    .zip(m)
                    .map(|(p, &v)| v - p.backward[l] + p.forward[l])
                    .collect();
                let t = match markings.iter().position(|x| *x == next) {
                    Some(t) => t,
                    None => {
                        if markings.len() == MAX_STATES {
                            return None;
                        }
                        markings.push(next);
                        queue.push_back(markings.len() - 1);
                        markings.len() - 1
                    }
                };
                Some(t as u8)
            } else {
                None
            };
            delta.push(target);
        }
    }
    let states = markings.len();
    (0..labels)
        .all(|l| (0..states).any(|s| delta[s * labels + l].is_some()))
        .then_some((states, delta))
}

/// Reachability graphs of every net with at most `MAX_PLACES` distinct places.
fn realisable(labels: usize) -> (usize, HashSet<(usize, Delta)>) {
    let types = place_types(labels);
    let mut seen = HashSet::new();
    let mut nets = 0;
    let mut visit = |places: &[PlaceType]| {
        nets += 1;
        if let Some(graph) = reachability(places, labels) {
            seen.insert(graph);
        }
    };
    visit(&[]);
    for i in 0..types.len() {
        visit(&[types[i]]);
        for j in i + 1..types.len() {
            visit(&[types[i], types[j]]);
            if MAX_PLACES >= 3 {
                for k in j + 1..types.len() {
                    visit(&[types[i], types[j], types[k]]);
                }
            }
        }
    }
    (nets, seen)
}

fn to_lts(states: usize, labels: usize, delta: &[Option<u8>]) -> Lts {
    let mut lts = Lts::new("s0");
    for s in 1..states {
        lts.add_state(&format!("s{s}")).unwrap();
    }
    for l in 0..labels {
        lts.add_label(["a", "b"][l]).unwrap();
    }
    for s in 0..states {
        for l in 0..labels {
            if let Some(t) = delta[s * labels + l] {
                lts.add_arc(s, l, t as usize);
            }
        }
    }
    lts
}

pub struct SweepStats {
    pub systems: usize,
    pub brute_force_solvable: usize,
    pub synthesised: usize,
    pub nets: usize,
}

/// Synthesis agrees with net enumeration on every small transition system.
pub fn sweep() -> Result<SweepStats, String> {
    let mut stats = SweepStats {
        systems: 0,
        brute_force_solvable: 0,
        synthesised: 0,
        nets: 0,
    };
    for labels in 1..=2 {
        let (nets, realisable) = realisable(labels);
        stats.nets += nets;
        for states in 1..=MAX_STATES {
            for delta in transition_systems(states, labels) {
                stats.systems += 1;
                let lts = to_lts(states, labels, &delta);
                let brute = realisable.contains(&(states, delta.clone()));
                let outcome = synthesize(&lts, &Properties::none()).map_err(|e| e.to_string())?;
                if brute {
                    stats.brute_force_solvable += 1;
                    if !outcome.success {
                        return Err(format!("net exists but synthesis failed on {delta:?}"));
                    }
                }
                if outcome.success {
                    stats.synthesised += 1;
                    let net = outcome.net.as_ref().unwrap();
                    let rg = net
                        .reachability_graph_with_limit(states + 1)
                        .map_err(|e| format!("{delta:?}: {e}"))?;
                    if !rg.lts().is_isomorphic(&lts) {
                        return Err(format!("synthesised net does not solve {delta:?}"));
                    }
                    let small = net.num_places() <= MAX_PLACES
                        && net.initial_marking().tokens().iter().all(|&m| m <= MAX_VALUE as u64)
                        && net.transitions().all(|t| {
                            net.preset(t).iter().chain(net.postset(t)).all(|&(_, w)| w <= MAX_VALUE as u64)
                        });
                    if small && !brute {
                        return Err(format!("enumeration missed a small net solving {delta:?}"));
                    }
                }
            }
        }
    }
    Ok(stats)
}

/// Some integer point of `[-r, r]^n` (or `[0, r]` where `nonnegative`)
/// satisfying every row `(coefficients, relation, rhs)`.
pub fn brute_force_point(
    rows: &[(Vec<i64>, Relation, i64)],
    nonnegative: &[bool],
    r: i64,
) -> Option<Vec<i64>> {
    let n = nonnegative.len();
    let width = (2 * r + 1) as usize;
    (0..width.pow(n as u32)).find_map(|code| {
        let mut c = code;
        let x: Vec<i64> = (0..n)
            .map(|_| {
                let v = (c % width) as i64 - r;
                c /= width;
                v
            })
            .collect();
        let in_box = x.iter().zip(nonnegative).all(|(&v, &nn)| !nn || v >= 0);
        let ok = in_box
            && rows.iter().all(|(a, rel, b)| {
                let lhs: i64 = a.iter().zip(&x).map(|(a, x)| a * x).sum();
                match rel {
                    Relation::Eq => lhs == *b,
                    Relation::Le => lhs <= *b,
                    Relation::Ge => lhs >= *b,
                }
            });
        ok.then_some(x)
    })
}
