use std::fmt;

use super::error::{DslError, ErrorKind};
use super::Pos;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Semi,
    Arrow,
    LArrow,
    Dot,
    Plus,
    Minus,
    Star,
    Assign,
    EqEq,
    NotEq,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::Int(n) => return write!(f, "`{n}`"),
            Tok::Str(s) => return write!(f, "\"{s}\""),
            Tok::LBrace => "`{`",
            Tok::RBrace => "`}`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::LBracket => "`[`",
            Tok::RBracket => "`]`",
            Tok::Colon => "`:`",
            Tok::Comma => "`,`",
            Tok::Semi => "`;`",
            Tok::Arrow => "`->`",
            Tok::LArrow => "`<-`",
            Tok::Dot => "`.`",
            Tok::Plus => "`+`",
            Tok::Minus => "`-`",
            Tok::Star => "`*`",
            Tok::Assign => "`=`",
            Tok::EqEq => "`==`",
            Tok::NotEq => "`!=`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `text` into tokens. `#` starts a comment that runs to the end of the line.
pub fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    fn bump(c: char, line: &mut usize, col: &mut usize) {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    }
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                chars.next();
                bump(c, &mut line, &mut col);
            }
            continue;
        }
        if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| is_ident_char(**c)) {
                s.push(c);
                chars.next();
                bump(c, &mut line, &mut col);
            }
            out.push(Token { tok: Tok::Ident(s), pos });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                s.push(c);
                chars.next();
                bump(c, &mut line, &mut col);
            }
            let n = s
                .parse()
                .map_err(|_| DslError::new(ErrorKind::Lexical, pos, format!("integer `{s}` is too large")))?;
            out.push(Token { tok: Tok::Int(n), pos });
            continue;
        }
        if c == '"' {
            chars.next();
            bump(c, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => {
                        bump('"', &mut line, &mut col);
                        break;
                    }
                    Some(c) if c != '\n' => {
                        s.push(c);
                        bump(c, &mut line, &mut col);
                    }
                    _ => return Err(DslError::new(ErrorKind::Lexical, pos, "unterminated string")),
                }
            }
            out.push(Token { tok: Tok::Str(s), pos });
            continue;
        }
        chars.next();
        bump(c, &mut line, &mut col);
        let mut two = |next: char, tok: Tok, chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            if chars.peek() == Some(&next) {
                chars.next();
                bump(next, &mut line, &mut col);
                Some(tok)
            } else {
                None
            }
        };
        let tok = match c {
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '.' => Tok::Dot,
            '+' => Tok::Plus,
            '*' => Tok::Star,
            '-' => two('>', Tok::Arrow, &mut chars).unwrap_or(Tok::Minus),
            '=' => two('=', Tok::EqEq, &mut chars).unwrap_or(Tok::Assign),
            '<' => two('-', Tok::LArrow, &mut chars)
                .ok_or_else(|| DslError::new(ErrorKind::Lexical, pos, "expected `<-`"))?,
            '!' => two('=', Tok::NotEq, &mut chars)
                .ok_or_else(|| DslError::new(ErrorKind::Lexical, pos, "expected `!=`"))?,
            other => {
                return Err(DslError::new(ErrorKind::Lexical, pos, format!("unexpected character `{other}`")));
            }
        };
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col } });
    Ok(out)
}
