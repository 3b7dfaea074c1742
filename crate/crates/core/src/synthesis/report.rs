use super::{Region, SynthesisOutcome};
use crate::lts::{LabelId, Lts, StateId};

impl SynthesisOutcome {
    /// Report lines for the synthesis module. With `verbose`, every kept
    /// region is listed with the event/state problems it solves.
    pub fn render(&self, lts: &Lts, verbose: bool) -> String {
        let mut out = format!("success: {}\n", if self.success { "Yes" } else { "No" });
        if verbose {
            out.push_str("solvedEventStateSeparationProblems:\n");
            for region in &self.regions {
                out.push_str(&region.display(lts));
                out.push_str(":\n");
                for (t, states) in separated_events(lts, region) {
                    out.push_str(&format!(
                        "\tseparates event {} at states {}\n",
                        lts.label_name(t),
                        state_list(lts, &states)
                    ));
                }
            }
        }
        if verbose || !self.success {
            out.push_str(&format!(
                "failedStateSeparationProblems: {}\n",
                self.failed_state_pairs(lts)
            ));
            out.push_str(&format!(
                "failedEventStateSeparationProblems: {}\n",
                self.failed_events(lts)
            ));
        }
        out
    }

    /// `[[s0, s1], [s2, s3]]`
    pub fn failed_state_pairs(&self, lts: &Lts) -> String {
        let items: Vec<String> = self
            .failed_state_separation
            .iter()
            .map(|&(s, s2)| format!("[{}, {}]", lts.state_name(s), lts.state_name(s2)))
            .collect();
        format!("[{}]", items.join(", "))
    }

    /// `{b=[s4], c=[s0, s2]}`
    pub fn failed_events(&self, lts: &Lts) -> String {
        let items: Vec<String> = self
            .failed_event_separation
            .iter()
            .map(|(t, states)| format!("{}={}", lts.label_name(*t), state_list(lts, states)))
            .collect();
        format!("{{{}}}", items.join(", "))
    }

    /// For a word's linear transition system: the word with every label that
    /// cannot be prevented at position `i` inserted in brackets before the
    /// `i`-th letter, e.g. `a, b, [a] b, a, a, c`.
    pub fn separation_failure_points(&self, word_lts: &Lts) -> String {
        let mut at: Vec<Vec<LabelId>> = vec![Vec::new(); word_lts.num_states()];
        for (t, states) in &self.failed_event_separation {
            for &s in states {
                at[s].push(*t);
            }
        }
        for labels in &mut at {
            labels.sort_unstable();
        }
        let mut items = Vec::new();
        let mut state = word_lts.initial();
        loop {
            let mut item: Vec<String> = at[state]
                .iter()
                .map(|&t| format!("[{}]", word_lts.label_name(t)))
                .collect();
            let next = word_lts.outgoing(state).next();
            if let Some(arc) = next {
                item.push(word_lts.label_name(arc.label).to_string());
            }
            if !item.is_empty() {
                items.push(item.join(" "));
            }
            match next {
                Some(arc) => state = arc.target,
                None => break,
            }
        }
        items.join(", ")
    }
}

/// Per label, the states where `t` is disabled in `lts` and the region
/// prevents it.
pub(crate) fn separated_events(lts: &Lts, region: &Region) -> Vec<(LabelId, Vec<StateId>)> {
    let Some(values) = region.values(lts) else {
        return Vec::new();
    };
    lts.labels()
        .filter_map(|t| {
            let states: Vec<StateId> = lts
                .states()
                .filter(|&s| !lts.is_enabled(s, t) && region.disables(values[s], t))
                .collect();
            (!states.is_empty()).then_some((t, states))
        })
        .collect()
}

fn state_list(lts: &Lts, states: &[StateId]) -> String {
    let names: Vec<&str> = states.iter().map(|&s| lts.state_name(s)).collect();
    format!("[{}]", names.join(", "))
}
