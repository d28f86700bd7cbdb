//! APX-style framework files: `arg(<id>).` and `att(<id>,<id>).` statements,
//! `%` comments, whitespace anywhere. Attack endpoints must be declared
//! before use and duplicate declarations are rejected, so community
//! benchmark files load directly.

use std::collections::BTreeSet;
use std::fmt;

use argex_core::{ArgumentId, ArgumentationFramework};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _text: &'a str,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            _text: text,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `%`-to-end-of-line comments.
    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('%') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => return,
            }
        }
    }

    fn expect(&mut self, wanted: char) -> Result<(), ParseError> {
        self.skip_trivia();
        match self.peek() {
            Some(c) if c == wanted => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{wanted}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{wanted}`, found end of input"))),
        }
    }

    fn token(&mut self) -> Result<String, ParseError> {
        self.skip_trivia();
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            Err(self.error("expected an identifier"))
        } else {
            Ok(out)
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_trivia();
        self.peek().is_none()
    }
}

/// Parses APX text into a framework.
pub fn parse_af(text: &str) -> Result<ArgumentationFramework, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut arguments: Vec<ArgumentId> = Vec::new();
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut attacks: Vec<(ArgumentId, ArgumentId)> = Vec::new();
    let mut attack_set: BTreeSet<(String, String)> = BTreeSet::new();

    while !scanner.at_end() {
        let keyword = scanner.token()?;
        match keyword.as_str() {
            "arg" => {
                scanner.expect('(')?;
                let name = scanner.token()?;
                scanner.expect(')')?;
                scanner.expect('.')?;
                if !declared.insert(name.clone()) {
                    return Err(scanner.error(format!("duplicate declaration of `{name}`")));
                }
                arguments.push(
                    ArgumentId::new(name.clone())
                        .map_err(|e| scanner.error(e.to_string()))?,
                );
            }
            "att" => {
                scanner.expect('(')?;
                let from = scanner.token()?;
                scanner.expect(',')?;
                let to = scanner.token()?;
                scanner.expect(')')?;
                scanner.expect('.')?;
                for endpoint in [&from, &to] {
                    if !declared.contains(endpoint) {
                        return Err(scanner
                            .error(format!("attack endpoint `{endpoint}` is not declared")));
                    }
                }
                if !attack_set.insert((from.clone(), to.clone())) {
                    return Err(
                        scanner.error(format!("duplicate declaration of `att({from},{to})`"))
                    );
                }
                attacks.push((
                    ArgumentId::new(from).map_err(|e| scanner.error(e.to_string()))?,
                    ArgumentId::new(to).map_err(|e| scanner.error(e.to_string()))?,
                ));
            }
            other => {
                return Err(scanner.error(format!(
                    "expected `arg` or `att`, found `{other}`"
                )))
            }
        }
    }

    ArgumentationFramework::new(arguments, attacks).map_err(|e| scanner.error(e.to_string()))
}

/// Canonical APX text for a framework: sorted `arg` lines, then sorted
/// `att` lines. Re-parsing yields an identical framework.
pub fn write_apx(af: &ArgumentationFramework) -> String {
    let mut out = String::new();
    for argument in af.arguments() {
        out.push_str(&format!("arg({argument}).\n"));
    }
    for (from, to) in af.attack_pairs() {
        out.push_str(&format!("att({from},{to}).\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_is_an_empty_framework() {
        let af = parse_af("").unwrap();
        assert_eq!(af.argument_count(), 0);
        let af = parse_af("  % only a comment\n").unwrap();
        assert_eq!(af.argument_count(), 0);
    }

    #[test]
    fn whitespace_and_comments_are_insignificant() {
        let af = parse_af("arg( a ).%x\n  arg(b)\n.\natt ( a , b ) .").unwrap();
        assert_eq!(af.argument_count(), 2);
        assert_eq!(af.attack_count(), 1);
    }

    #[test]
    fn undeclared_attack_endpoint_is_positioned() {
        let err = parse_af("arg(a).\natt(a,b).").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("`b`"));
    }

    #[test]
    fn duplicate_argument_is_rejected() {
        let err = parse_af("arg(a). arg(a).").unwrap_err();
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn duplicate_attack_is_rejected() {
        let err = parse_af("arg(a). arg(b). att(a,b). att(a,b).").unwrap_err();
        assert!(err.message.contains("duplicate"));
    }

    #[test]
    fn unknown_keyword_is_rejected() {
        let err = parse_af("argument(a).").unwrap_err();
        assert!(err.message.contains("argument"));
    }

    #[test]
    fn writer_emits_canonical_text() {
        let af = parse_af("arg(b). arg(a). att(b,a).").unwrap();
        assert_eq!(write_apx(&af), "arg(a).\narg(b).\natt(b,a).\n");
    }
}
