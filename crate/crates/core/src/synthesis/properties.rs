use std::fmt;

use super::SynthesisError;

/// Requested properties of a synthesised net.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Properties {
    pub pure: bool,
    pub plain: bool,
    pub output_nonbranching: bool,
    pub tnet: bool,
    pub conflict_free: bool,
    pub k_bounded: Option<u64>,
    /// Only the prefix language has to match; states are not separated.
    pub language: bool,
    pub verbose: bool,
}

impl Properties {
    pub fn none() -> Self {
        Self::default()
    }

    /// Parses a comma-separated list such as `plain,pure`, `safe`,
    /// `3-bounded` or `none`.
    pub fn parse(list: &str) -> Result<Self, SynthesisError> {
        let mut props = Properties::default();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let lower = item.to_ascii_lowercase();
            match lower.as_str() {
                "none" => {}
                "pure" => props.pure = true,
                "plain" => props.plain = true,
                "output-nonbranching" | "on" => props.output_nonbranching = true,
                "t-net" | "tnet" => props.tnet = true,
                "conflict-free" | "cf" => props.conflict_free = true,
                "safe" => props.add_bound(1),
                "language" => props.language = true,
                "verbose" => props.verbose = true,
                other => {
                    let k = other
                        .strip_suffix("-bounded")
                        .and_then(|k| k.parse::<u64>().ok())
                        .ok_or_else(|| SynthesisError::UnknownProperty(item.to_string()))?;
                    props.add_bound(k);
                }
            }
        }
        Ok(props)
    }

    fn add_bound(&mut self, k: u64) {
        self.k_bounded = Some(self.k_bounded.map_or(k, |old| old.min(k)));
    }

    /// Arc weights are restricted to 0 and 1.
    pub fn requires_plain(&self) -> bool {
        self.plain || self.tnet || self.conflict_free
    }

    /// No structural property beyond what the fast paths handle.
    pub(crate) fn is_unconstrained(&self) -> bool {
        !(self.pure
            || self.requires_plain()
            || self.output_nonbranching
            || self.k_bounded.is_some())
    }
}

impl fmt::Display for Properties {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = Vec::new();
        let flags = [
            (self.pure, "pure"),
            (self.plain, "plain"),
            (self.output_nonbranching, "output-nonbranching"),
            (self.tnet, "t-net"),
            (self.conflict_free, "conflict-free"),
        ];
        items.extend(flags.iter().filter(|(on, _)| *on).map(|(_, n)| n.to_string()));
        if let Some(k) = self.k_bounded {
            items.push(format!("{k}-bounded"));
        }
        if self.language {
            items.push("language".into());
        }
        if self.verbose {
            items.push("verbose".into());
        }
        if items.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&items.join(","))
        }
    }
}
