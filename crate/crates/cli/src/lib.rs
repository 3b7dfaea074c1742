//! The `apt` command line: a static registry of analysis, synthesis and
//! generator modules, selected by name or unique prefix.
//!
//! Exit status is 0 when the module ran (whatever its answer), 1 for usage
//! and input errors, 2 when an analysis precondition does not hold.

pub mod args;
pub mod modules;
pub mod registry;
pub mod report;

use std::io::Write;

use thiserror::Error;

use registry::{lookup, Lookup};

pub use modules::MODULES;
pub use registry::{Kind, ModuleDescriptor, Param};
pub use report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Wrong arity or an unusable argument; carries usage text.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or malformed input.
    #[error("{0}")]
    Input(String),
    /// The input does not satisfy what the analysis needs, e.g. boundedness.
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            _ => 1,
        }
    }
}

/// Module list printed when no module is named.
pub fn module_list() -> String {
    let mut out = String::from("Usage: apt <module> <args...>\nAvailable modules:\n");
    for m in MODULES {
        out.push_str(&format!("  {:<28} {}\n", m.name, m.summary()));
    }
    out
}

pub fn resolve(name: &str) -> Result<&'static ModuleDescriptor, CliError> {
    match lookup(name) {
        Lookup::Found(m) => Ok(m),
        Lookup::Ambiguous(names) => Err(CliError::Usage(format!(
            "module name '{name}' is ambiguous; candidates: {}",
            names.join(", ")
        ))),
        Lookup::Unknown(similar) if similar.is_empty() => Err(CliError::Usage(format!("unknown module '{name}'"))),
        Lookup::Unknown(similar) => Err(CliError::Usage(format!(
            "unknown module '{name}'; did you mean: {}?",
            similar.join(", ")
        ))),
    }
}

fn dispatch(args: &[String]) -> Result<Report, CliError> {
    let Some((name, rest)) = args.split_first() else {
        let mut report = Report::new();
        report.raw(&module_list());
        return Ok(report);
    };
    let module = resolve(name)?;
    let values = args::Values::convert(module, rest)?;
    (module.run)(&values)
}

fn emit(report: &Report, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Output(format!("cannot write output: {e}"));
    out.write_all(report.text.as_bytes()).map_err(io)?;
    for (path, text) in &report.documents {
        match path {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Output(format!("cannot write {path}: {e}")))?,
            None => out.write_all(text.as_bytes()).map_err(io)?,
        }
    }
    Ok(())
}

/// Runs `apt` with `args` (without the program name).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = dispatch(args).and_then(|report| emit(&report, out));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "{}", e.to_string().trim_end());
            e.exit_code()
        }
    }
}
