use apt_core::generators::{bitnet, cyclenet, philnet_bistate};
use apt_core::io::print_net;

use super::OUTPUT;
use crate::args::Values;
use crate::registry::{Kind, ModuleDescriptor, Param};
use crate::report::Report;
use crate::CliError;

const N: Param = Param {
    name: "n",
    kind: Kind::Int,
    optional: false,
    description: "Size of the generated net, at least 1",
};

fn size(v: &Values) -> Result<usize, CliError> {
    match v.int("n") {
        Some(0) | None => Err(CliError::Usage("n must be at least 1".into())),
        Some(n) => Ok(n as usize),
    }
}

fn bitnet_generator(v: &Values) -> Result<Report, CliError> {
    let mut r = Report::new();
    r.document(v.output("output"), print_net(&bitnet(size(v)?)));
    Ok(r)
}

pub const BITNET: ModuleDescriptor = ModuleDescriptor {
    name: "bitnet_generator",
    params: &[N, OUTPUT],
    description: "Generate a net of n independent bits; its reachability graph has 2^n states.",
    run: bitnet_generator,
};

fn philnet_generator(v: &Values) -> Result<Report, CliError> {
    let n = size(v)?;
    if n < 2 {
        return Err(CliError::Usage("a philosophers' net needs at least 2 philosophers".into()));
    }
    let mut r = Report::new();
    r.document(v.output("output"), print_net(&philnet_bistate(n)));
    Ok(r)
}

pub const PHILNET: ModuleDescriptor = ModuleDescriptor {
    name: "bistate_philnet_generator",
    params: &[N, OUTPUT],
    description: "Generate a net of n dining philosophers, each either thinking or eating.",
    run: philnet_generator,
};

fn cycle_generator(v: &Values) -> Result<Report, CliError> {
    let n = size(v)?;
    let k = v.int("k").unwrap_or(1);
    let mut r = Report::new();
    r.document(v.output("output"), print_net(&cyclenet(n, k)));
    Ok(r)
}

pub const CYCLE: ModuleDescriptor = ModuleDescriptor {
    name: "cycle_generator",
    params: &[
        N,
        Param {
            name: "k",
            kind: Kind::Int,
            optional: true,
            description: "Tokens on the first place (default 1)",
        },
        OUTPUT,
    ],
    description: "Generate a cycle of n places and n transitions with k tokens on the first place.",
    run: cycle_generator,
};
