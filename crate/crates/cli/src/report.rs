/// Output of a module: `key: value` lines plus documents bound for files or
/// standard output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub documents: Vec<(Option<String>, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.text.push_str(&format!("{key}: {value}\n"));
        self
    }

    pub fn yes_no(&mut self, key: &str, holds: bool) -> &mut Self {
        self.put(key, if holds { "Yes" } else { "No" })
    }

    pub fn raw(&mut self, text: &str) -> &mut Self {
        self.text.push_str(text);
        self
    }

    pub fn document(&mut self, path: Option<&str>, text: String) -> &mut Self {
        self.documents.push((path.map(str::to_string), text));
        self
    }
}

/// `[a, b, c]`
pub fn list<I, S>(items: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let items: Vec<String> = items.into_iter().map(|s| s.as_ref().to_string()).collect();
    format!("[{}]", items.join(", "))
}
