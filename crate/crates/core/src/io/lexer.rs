use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    /// `.name`, `.places`, ... without the dot.
    Directive(String),
    Ident(String),
    Str(String),
    Int(u64),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Arrow,
    Star,
    Equals,
}

impl Token {
    pub(crate) fn describe(&self) -> String {
        match self {
            Token::Directive(d) => format!("'.{d}'"),
            Token::Ident(i) => format!("identifier '{i}'"),
            Token::Str(_) => "string".into(),
            Token::Int(n) => format!("number {n}"),
            Token::LBrace => "'{'".into(),
            Token::RBrace => "'}'".into(),
            Token::LBracket => "'['".into(),
            Token::RBracket => "']'".into(),
            Token::Comma => "','".into(),
            Token::Colon => "':'".into(),
            Token::Arrow => "'->'".into(),
            Token::Star => "'*'".into(),
            Token::Equals => "'='".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Spanned {
    pub token: Token,
    pub line: usize,
    pub column: usize,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    fn take_while(&mut self, mut keep: impl FnMut(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(|&c| keep(c)) {
            out.push(c);
            self.bump();
        }
        out
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let token = match c {
            '/' => {
                cur.bump();
                match cur.bump() {
                    Some('/') => {
                        cur.take_while(|c| c != '\n');
                    }
                    Some('*') => loop {
                        match cur.bump() {
                            Some('*') if cur.peek() == Some('/') => {
                                cur.bump();
                                break;
                            }
                            Some(_) => {}
                            None => {
                                return Err(ParseError::new(line, column, "unterminated comment"));
                            }
                        }
                    },
                    _ => return Err(ParseError::new(line, column, "unexpected '/'")),
                }
                continue;
            }
            '.' => {
                cur.bump();
                let word = cur.take_while(is_ident_char);
                if word.is_empty() {
                    return Err(ParseError::new(line, column, "expected a directive after '.'"));
                }
                Token::Directive(word)
            }
            '"' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.bump() {
                        Some('"') => break,
                        Some('\\') => match cur.bump() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            _ => return Err(cur.error("invalid escape in string")),
                        },
                        Some(ch) => s.push(ch),
                        None => return Err(ParseError::new(line, column, "unterminated string")),
                    }
                }
                Token::Str(s)
            }
            '0'..='9' => {
                let digits = cur.take_while(|c| c.is_ascii_digit());
                if cur.peek().is_some_and(is_ident_char) {
                    return Err(ParseError::new(line, column, "identifiers must not start with a digit"));
                }
                let n = digits
                    .parse::<u64>()
                    .map_err(|_| ParseError::new(line, column, "number too large"))?;
                Token::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == '_' => Token::Ident(cur.take_while(is_ident_char)),
            '-' => {
                cur.bump();
                if cur.peek() != Some('>') {
                    return Err(ParseError::new(line, column, "expected '->'; negative numbers are not allowed"));
                }
                cur.bump();
                Token::Arrow
            }
            _ => {
                cur.bump();
                match c {
                    '{' => Token::LBrace,
                    '}' => Token::RBrace,
                    '[' => Token::LBracket,
                    ']' => Token::RBracket,
                    ',' => Token::Comma,
                    ':' => Token::Colon,
                    '*' => Token::Star,
                    '=' => Token::Equals,
                    other => {
                        return Err(ParseError::new(line, column, format!("unexpected character '{other}'")));
                    }
                }
            }
        };
        tokens.push(Spanned { token, line, column });
    }
    Ok(tokens)
}
