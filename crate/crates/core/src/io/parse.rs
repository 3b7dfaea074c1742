use super::lexer::{tokenize, Spanned, Token};
use super::{Document, DocumentKind, ParseError};
use crate::lts::Lts;
use crate::net::PetriNet;

#[derive(Clone, Debug)]
struct Name {
    text: String,
    line: usize,
    column: usize,
}

impl Name {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }
}

#[derive(Clone, Debug)]
struct Attribute {
    key: Name,
    value: Option<String>,
}

#[derive(Clone, Debug)]
struct Declaration {
    name: Name,
    attributes: Vec<Attribute>,
}

type Multiset = Vec<(u64, Name)>;

#[derive(Clone, Debug)]
struct Flow {
    transition: Name,
    pre: Multiset,
    post: Multiset,
}

#[derive(Default)]
struct Sections {
    name: Option<String>,
    description: Option<String>,
    kind: Option<DocumentKind>,
    places: Option<Vec<Declaration>>,
    transitions: Option<Vec<Declaration>>,
    flows: Option<Vec<Flow>>,
    initial_marking: Option<Multiset>,
    states: Option<Vec<Declaration>>,
    labels: Option<Vec<Declaration>>,
    arcs: Option<Vec<[Name; 3]>>,
    positions: Vec<(String, (usize, usize))>,
}

impl Sections {
    fn misplaced(&self, names: &[&str]) -> Option<ParseError> {
        self.positions
            .iter()
            .find(|(n, _)| names.contains(&n.as_str()))
            .map(|(n, (line, column))| {
                ParseError::new(*line, *column, format!("section '.{n}' does not belong to this type"))
            })
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.token)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.here();
        ParseError::new(line, column, message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&want.describe()))
        }
    }

    fn eat(&mut self, want: &Token) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<Name, ParseError> {
        match self.peek() {
            Some(Token::Ident(_)) => {
                let t = self.next().expect("peeked");
                let Token::Ident(text) = t.token else { unreachable!() };
                Ok(Name {
                    text,
                    line: t.line,
                    column: t.column,
                })
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn string(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Token::Str(_)) => {
                let Some(Spanned { token: Token::Str(s), .. }) = self.next() else { unreachable!() };
                Ok(s)
            }
            _ => Err(self.unexpected("a quoted string")),
        }
    }

    fn at_section_end(&self) -> bool {
        matches!(self.peek(), None | Some(Token::Directive(_)))
    }

    fn declarations(&mut self) -> Result<Vec<Declaration>, ParseError> {
        let mut out = Vec::new();
        while !self.at_section_end() {
            let name = self.ident()?;
            let mut attributes = Vec::new();
            if self.eat(&Token::LBracket) {
                loop {
                    let key = self.ident()?;
                    let value = if self.eat(&Token::Equals) {
                        Some(self.string()?)
                    } else {
                        None
                    };
                    attributes.push(Attribute { key, value });
                    if !self.eat(&Token::Comma) {
                        break;
                    }
                }
                self.expect(Token::RBracket)?;
            }
            out.push(Declaration { name, attributes });
        }
        Ok(out)
    }

    fn multiset(&mut self) -> Result<Multiset, ParseError> {
        self.expect(Token::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Token::RBrace) {
            return Ok(out);
        }
        loop {
            let count = if let Some(Token::Int(n)) = self.peek() {
                let n = *n;
                if n == 0 {
                    return Err(self.error("multiplicity must be positive"));
                }
                self.pos += 1;
                self.expect(Token::Star)?;
                n
            } else {
                1
            };
            out.push((count, self.ident()?));
            if !self.eat(&Token::Comma) {
                break;
            }
        }
        self.expect(Token::RBrace)?;
        Ok(out)
    }

    fn flows(&mut self) -> Result<Vec<Flow>, ParseError> {
        let mut out = Vec::new();
        while !self.at_section_end() {
            let transition = self.ident()?;
            self.expect(Token::Colon)?;
            let pre = self.multiset()?;
            self.expect(Token::Arrow)?;
            let post = self.multiset()?;
            out.push(Flow {
                transition,
                pre,
                post,
            });
        }
        Ok(out)
    }

    fn arcs(&mut self) -> Result<Vec<[Name; 3]>, ParseError> {
        let mut out = Vec::new();
        while !self.at_section_end() {
            out.push([self.ident()?, self.ident()?, self.ident()?]);
        }
        Ok(out)
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, at: (usize, usize), what: &str) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(ParseError::new(at.0, at.1, format!("duplicate .{what} section")));
    }
    *slot = Some(value);
    Ok(())
}

fn read_sections(text: &str) -> Result<Sections, ParseError> {
    let tokens = tokenize(text)?;
    let end = {
        let lines: Vec<&str> = text.split('\n').collect();
        (lines.len(), lines.last().map_or(0, |l| l.chars().count()) + 1)
    };
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
    };
    let mut s = Sections::default();
    while let Some(token) = p.peek().cloned() {
        let at = p.here();
        let Token::Directive(directive) = token else {
            return Err(p.unexpected("a section such as '.type'"));
        };
        p.pos += 1;
        s.positions.push((directive.clone(), at));
        match directive.as_str() {
            "name" => {
                let v = p.string()?;
                set_once(&mut s.name, v, at, "name")?;
            }
            "description" => {
                let v = p.string()?;
                set_once(&mut s.description, v, at, "description")?;
            }
            "type" => {
                let kind = match p.ident()? {
                    n if n.text == "LPN" => DocumentKind::Net,
                    n if n.text == "LTS" => DocumentKind::Lts,
                    n => return Err(n.error(format!("unknown type '{}'; expected LPN or LTS", n.text))),
                };
                set_once(&mut s.kind, kind, at, "type")?;
            }
            "places" => {
                let v = p.declarations()?;
                set_once(&mut s.places, v, at, "places")?;
            }
            "transitions" => {
                let v = p.declarations()?;
                set_once(&mut s.transitions, v, at, "transitions")?;
            }
            "flows" => {
                let v = p.flows()?;
                set_once(&mut s.flows, v, at, "flows")?;
            }
            "initial_marking" => {
                let v = p.multiset()?;
                set_once(&mut s.initial_marking, v, at, "initial_marking")?;
            }
            "states" => {
                let v = p.declarations()?;
                set_once(&mut s.states, v, at, "states")?;
            }
            "labels" => {
                let v = p.declarations()?;
                set_once(&mut s.labels, v, at, "labels")?;
            }
            "arcs" => {
                let v = p.arcs()?;
                set_once(&mut s.arcs, v, at, "arcs")?;
            }
            other => return Err(ParseError::new(at.0, at.1, format!("unknown section '.{other}'"))),
        }
    }
    Ok(s)
}

/// Parses an LPN or LTS document.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let s = read_sections(text)?;
    match s.kind {
        None => Err(ParseError::new(1, 1, "missing .type section")),
        Some(DocumentKind::Net) => {
            if let Some(e) = s.misplaced(&["states", "labels", "arcs"]) {
                return Err(e);
            }
            build_net(s).map(Document::Net)
        }
        Some(DocumentKind::Lts) => {
            if let Some(e) = s.misplaced(&["places", "transitions", "flows", "initial_marking"]) {
                return Err(e);
            }
            build_lts(s).map(Document::Lts)
        }
    }
}

fn no_attributes(decl: &Declaration) -> Result<(), ParseError> {
    match decl.attributes.first() {
        Some(a) => Err(a.key.error(format!("unknown attribute '{}'", a.key.text))),
        None => Ok(()),
    }
}

fn attribute_value(attr: &Attribute) -> Result<String, ParseError> {
    attr.value
        .clone()
        .ok_or_else(|| attr.key.error(format!("attribute '{}' needs a value", attr.key.text)))
}

fn build_net(s: Sections) -> Result<PetriNet, ParseError> {
    let mut net = PetriNet::new();
    net.set_name(s.name.unwrap_or_default());
    net.set_description(s.description.unwrap_or_default());
    for decl in s.places.unwrap_or_default() {
        no_attributes(&decl)?;
        net.add_place(&decl.name.text)
            .map_err(|_| decl.name.error(format!("duplicate identifier '{}'", decl.name.text)))?;
    }
    for decl in s.transitions.unwrap_or_default() {
        let t = net
            .add_transition(&decl.name.text)
            .map_err(|_| decl.name.error(format!("duplicate identifier '{}'", decl.name.text)))?;
        for attr in &decl.attributes {
            match attr.key.text.as_str() {
                "label" => net.set_label(t, attribute_value(attr)?),
                "location" => net.set_location(t, Some(attribute_value(attr)?)),
                other => return Err(attr.key.error(format!("unknown attribute '{other}'"))),
            }
        }
    }
    let place = |net: &PetriNet, n: &Name| {
        net.place_id(&n.text)
            .ok_or_else(|| n.error(format!("unknown place '{}'", n.text)))
    };
    let mut seen_flows = Vec::new();
    for flow in s.flows.unwrap_or_default() {
        let t = net
            .transition_id(&flow.transition.text)
            .ok_or_else(|| flow.transition.error(format!("unknown transition '{}'", flow.transition.text)))?;
        if seen_flows.contains(&t) {
            return Err(flow.transition.error(format!("flows of '{}' given twice", flow.transition.text)));
        }
        seen_flows.push(t);
        for (n, name) in &flow.pre {
            let p = place(&net, name)?;
            net.add_flow_to_transition(p, t, *n);
        }
        for (n, name) in &flow.post {
            let p = place(&net, name)?;
            net.add_flow_to_place(t, p, *n);
        }
    }
    for (n, name) in s.initial_marking.unwrap_or_default() {
        let p = place(&net, &name)?;
        let tokens = net.initial_marking().get(p) + n;
        net.set_initial_tokens(p, tokens);
    }
    Ok(net)
}

fn build_lts(s: Sections) -> Result<Lts, ParseError> {
    let states = s.states.unwrap_or_default();
    let Some(first) = states.first() else {
        return Err(ParseError::new(1, 1, "an LTS needs at least one state"));
    };
    let mut lts = Lts::new(&first.name.text);
    lts.set_name(s.name.unwrap_or_default());
    lts.set_description(s.description.unwrap_or_default());
    let mut initial = None;
    for (i, decl) in states.iter().enumerate() {
        if i > 0 {
            lts.add_state(&decl.name.text)
                .map_err(|_| decl.name.error(format!("duplicate identifier '{}'", decl.name.text)))?;
        }
        for attr in &decl.attributes {
            if attr.key.text != "initial" || attr.value.is_some() {
                return Err(attr.key.error(format!("unknown attribute '{}'", attr.key.text)));
            }
            if initial.is_some() {
                return Err(attr.key.error("more than one initial state"));
            }
            initial = Some(i);
        }
    }
    match initial {
        Some(i) => lts.set_initial(i),
        None => return Err(first.name.error("no state is marked [initial]")),
    }
    for decl in s.labels.unwrap_or_default() {
        let l = lts
            .add_label(&decl.name.text)
            .map_err(|_| decl.name.error(format!("duplicate identifier '{}'", decl.name.text)))?;
        for attr in &decl.attributes {
            match attr.key.text.as_str() {
                "location" => lts.set_location(l, Some(attribute_value(attr)?)),
                other => return Err(attr.key.error(format!("unknown attribute '{other}'"))),
            }
        }
    }
    for [src, label, dst] in s.arcs.unwrap_or_default() {
        let state = |n: &Name| {
            lts.state_id(&n.text)
                .ok_or_else(|| n.error(format!("unknown state '{}'", n.text)))
        };
        let (a, b) = (state(&src)?, state(&dst)?);
        let l = lts
            .label_id(&label.text)
            .ok_or_else(|| label.error(format!("unknown label '{}'", label.text)))?;
        lts.add_arc(a, l, b);
    }
    Ok(lts)
}
