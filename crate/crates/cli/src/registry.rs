use crate::args::Values;
use crate::report::Report;
use crate::CliError;

/// What a parameter is converted to before the module runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// Path to an LPN document; `-` reads standard input.
    Net,
    Lts,
    /// Either document kind.
    NetOrLts,
    Int,
    /// A plain string such as a property list or a comma-separated word.
    Text,
    /// Path a document is written to; `-` or absent means standard output.
    Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: &'static str,
    pub kind: Kind,
    pub optional: bool,
    pub description: &'static str,
}

pub type RunFn = fn(&Values) -> Result<Report, CliError>;

/// A registered module. Optional parameters always trail required ones.
#[derive(Clone, Copy)]
pub struct ModuleDescriptor {
    pub name: &'static str,
    pub params: &'static [Param],
    pub description: &'static str,
    pub run: RunFn,
}

impl std::fmt::Debug for ModuleDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleDescriptor")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("description", &self.description)
            .finish()
    }
}

impl ModuleDescriptor {
    pub fn required(&self) -> usize {
        self.params.iter().filter(|p| !p.optional).count()
    }

    pub fn usage_line(&self) -> String {
        let mut line = format!("Usage: apt {}", self.name);
        for p in self.params {
            if p.optional {
                line.push_str(&format!(" [<{}>]", p.name));
            } else {
                line.push_str(&format!(" <{}>", p.name));
            }
        }
        line
    }

    /// The usage line, one line per parameter, then the description.
    pub fn help(&self) -> String {
        let mut out = self.usage_line();
        out.push('\n');
        for p in self.params {
            out.push_str(&format!("  {:<10} {}\n", p.name, p.description));
        }
        out.push_str(self.description);
        out.push('\n');
        out
    }

    /// First sentence of the description.
    pub fn summary(&self) -> &'static str {
        self.description.split('\n').next().unwrap_or("")
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum Lookup {
    Found(&'static ModuleDescriptor),
    Ambiguous(Vec<&'static str>),
    Unknown(Vec<&'static str>),
}

/// Exact name first, then unique prefix. Unknown names come with
/// suggestions of similar names.
pub fn lookup(name: &str) -> Lookup {
    let modules = crate::modules::MODULES;
    if let Some(m) = modules.iter().find(|m| m.name == name) {
        return Lookup::Found(m);
    }
    let matches: Vec<&'static ModuleDescriptor> = modules.iter().filter(|m| m.name.starts_with(name)).collect();
    match matches.as_slice() {
        [only] => Lookup::Found(only),
        [] => Lookup::Unknown(suggestions(name)),
        many => Lookup::Ambiguous(many.iter().map(|m| m.name).collect()),
    }
}

fn suggestions(name: &str) -> Vec<&'static str> {
    let mut scored: Vec<(usize, &'static str)> = crate::modules::MODULES
        .iter()
        .map(|m| (strsim::levenshtein(name, m.name), m.name))
        .filter(|&(d, n)| d <= 3 || (name.len() >= 3 && n.contains(name)))
        .collect();
    scored.sort();
    scored.into_iter().take(3).map(|(_, n)| n).collect()
}

impl PartialEq for ModuleDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.params == other.params && self.description == other.description
    }
}

impl Eq for ModuleDescriptor {}
