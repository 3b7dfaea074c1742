//! Benchmark inputs shared by `benches/` and the smoke tests.

use apt_core::generators::{bitnet, philnet_bistate};
use apt_core::synthesis::Properties;
use apt_core::Lts;

/// `(id, lts, properties)` for each synthesis benchmark.
pub fn synthesis_inputs() -> Vec<(String, Lts, Properties)> {
    let mut out: Vec<(String, Lts, Properties)> = [2usize, 3, 4]
        .into_iter()
        .map(|n| {
            let lts = bitnet(n).reachability_graph().unwrap().into_lts();
            (format!("bitnet/{n}"), lts, Properties::none())
        })
        .collect();
    out.push((
        "philnet/3/plain,pure".into(),
        philnet_bistate(3).reachability_graph().unwrap().into_lts(),
        Properties::parse("plain,pure").unwrap(),
    ));
    out
}
