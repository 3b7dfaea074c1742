use std::io::Read;

use apt_core::io::{parse, Document};
use apt_core::{Lts, PetriNet};

use crate::registry::{Kind, ModuleDescriptor};
use crate::CliError;

#[derive(Clone, Debug)]
pub enum Value {
    Document(Document),
    Int(u64),
    Text(String),
    Output(String),
}

/// Converted arguments, addressed by parameter name.
#[derive(Debug)]
pub struct Values {
    entries: Vec<(&'static str, Value)>,
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))
    }
}

fn load(path: &str, kind: Kind) -> Result<Document, CliError> {
    let text = read_source(path)?;
    let doc = parse(&text).map_err(|e| CliError::Input(format!("{path}:{e}")))?;
    match (kind, &doc) {
        (Kind::Net, Document::Lts(_)) => Err(CliError::Input(format!("{path}: expected a Petri net, found an LTS"))),
        (Kind::Lts, Document::Net(_)) => Err(CliError::Input(format!("{path}: expected an LTS, found a Petri net"))),
        _ => Ok(doc),
    }
}

impl Values {
    pub fn convert(module: &ModuleDescriptor, args: &[String]) -> Result<Values, CliError> {
        if args.len() < module.required() || args.len() > module.params.len() {
            return Err(CliError::Usage(module.help()));
        }
        let mut entries = Vec::new();
        for (param, arg) in module.params.iter().zip(args) {
            let value = match param.kind {
                Kind::Net | Kind::Lts | Kind::NetOrLts => Value::Document(load(arg, param.kind)?),
                Kind::Int => Value::Int(arg.parse().map_err(|_| {
                    CliError::Input(format!("parameter {} expects a non-negative integer, got '{arg}'", param.name))
                })?),
                Kind::Text => Value::Text(arg.clone()),
                Kind::Output => Value::Output(arg.clone()),
            };
            entries.push((param.name, value));
        }
        Ok(Values { entries })
    }

    fn get(&self, name: &str) -> Option<&Value> {
        self.entries.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }

    pub fn document(&self, name: &str) -> &Document {
        match self.get(name) {
            Some(Value::Document(d)) => d,
            _ => panic!("parameter {name} is not a document"),
        }
    }

    pub fn net(&self, name: &str) -> &PetriNet {
        match self.document(name) {
            Document::Net(net) => net,
            Document::Lts(_) => panic!("parameter {name} is not a net"),
        }
    }

    pub fn lts(&self, name: &str) -> &Lts {
        match self.document(name) {
            Document::Lts(lts) => lts,
            Document::Net(_) => panic!("parameter {name} is not an LTS"),
        }
    }

    pub fn int(&self, name: &str) -> Option<u64> {
        match self.get(name) {
            Some(Value::Int(n)) => Some(*n),
            _ => None,
        }
    }

    pub fn text(&self, name: &str) -> Option<&str> {
        match self.get(name) {
            Some(Value::Text(s)) => Some(s),
            _ => None,
        }
    }

    pub fn output(&self, name: &str) -> Option<&str> {
        match self.get(name) {
            Some(Value::Output(s)) if s != "-" => Some(s),
            _ => None,
        }
    }
}
