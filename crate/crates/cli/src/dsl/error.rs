use std::fmt;

use super::Pos;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lexical,
    Syntax,
    Name,
    Type,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::Lexical => "lexical",
            ErrorKind::Syntax => "syntax",
            ErrorKind::Name => "name",
            ErrorKind::Type => "type",
        })
    }
}

/// A located error from any stage of the front end.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct DslError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
    pub suggestions: Vec<String>,
}

impl DslError {
    pub fn new(kind: ErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        DslError {
            kind,
            pos,
            message: message.into(),
            suggestions: Vec::new(),
        }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {} error: {}", self.pos.line, self.pos.col, self.kind, self.message)?;
        if !self.suggestions.is_empty() {
            let list: Vec<String> = self.suggestions.iter().map(|s| format!("`{s}`")).collect();
            write!(f, " (did you mean {}?)", list.join(", "))?;
        }
        Ok(())
    }
}

/// Names in `known` that are close to `name`, nearest first.
pub fn suggest<'a>(name: &str, known: impl IntoIterator<Item = &'a String>) -> Vec<String> {
    let mut scored: Vec<(usize, &String)> = known
        .into_iter()
        .filter_map(|k| {
            let d = strsim::levenshtein(name, k);
            let close = d <= 1.max(name.len() / 3) || strsim::jaro_winkler(name, k) > 0.85;
            close.then_some((d, k))
        })
        .collect();
    scored.sort();
    scored.into_iter().take(3).map(|(_, k)| k.clone()).collect()
}
