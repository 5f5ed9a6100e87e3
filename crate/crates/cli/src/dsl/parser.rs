use super::ast::{Expr, ExprKind, Ident, Item, Script};
use super::error::{DslError, ErrorKind};
use super::lexer::{lex, Tok, Token};
use super::Pos;

/// Words that cannot be used as names.
pub const KEYWORDS: [&str; 15] = [
    "space", "map", "bundle", "on", "dim", "let", "eval", "assert", "check", "push", "spush", "pull", "ppull", "c1",
    "unit",
];

pub fn parse_script(text: &str) -> Result<Script, DslError> {
    let mut p = Parser::new(text)?;
    let mut items = Vec::new();
    while p.peek() != &Tok::Eof {
        items.push(p.item()?);
    }
    Ok(Script { items })
}

pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.expect(Tok::Eof)?;
    Ok(e)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, DslError> {
        Ok(Parser { toks: lex(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> DslError {
        DslError::new(ErrorKind::Syntax, self.pos(), format!("expected {expected}, found {}", self.peek()))
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, DslError> {
        if self.peek() == &tok {
            Ok(self.next().pos)
        } else {
            Err(self.error(&tok.to_string()))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), DslError> {
        match self.peek() {
            Tok::Ident(s) if s == word => {
                self.next();
                Ok(())
            }
            _ => Err(self.error(&format!("`{word}`"))),
        }
    }

    fn name(&mut self) -> Result<Ident, DslError> {
        match self.peek().clone() {
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => Err(DslError::new(
                ErrorKind::Syntax,
                self.pos(),
                format!("`{s}` is a keyword and cannot be used as a name"),
            )),
            Tok::Ident(s) => {
                let pos = self.next().pos;
                Ok(Ident { name: s, pos })
            }
            _ => Err(self.error("a name")),
        }
    }

    fn int(&mut self) -> Result<i64, DslError> {
        let negative = self.eat(&Tok::Minus);
        match self.peek() {
            &Tok::Int(n) => {
                self.next();
                Ok(if negative { -n } else { n })
            }
            _ => Err(self.error("an integer")),
        }
    }

    /// `{ entry, entry, ... }`, allowing an empty list and a trailing comma.
    fn braced<T>(&mut self, mut entry: impl FnMut(&mut Self) -> Result<T, DslError>) -> Result<Vec<T>, DslError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        while self.peek() != &Tok::RBrace {
            out.push(entry(self)?);
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }

    fn item(&mut self) -> Result<Item, DslError> {
        let word = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error("a declaration or statement")),
        };
        match word.as_str() {
            "space" => {
                self.next();
                let name = self.name()?;
                let points = self.braced(|p| {
                    let pt = p.name()?;
                    p.expect(Tok::Colon)?;
                    p.keyword("dim")?;
                    Ok((pt, p.int()?))
                })?;
                Ok(Item::Space { name, points })
            }
            "map" => {
                self.next();
                let name = self.name()?;
                self.expect(Tok::Colon)?;
                let src = self.name()?;
                self.expect(Tok::Arrow)?;
                let tgt = self.name()?;
                let graph = self.braced(|p| {
                    let a = p.name()?;
                    p.expect(Tok::Arrow)?;
                    Ok((a, p.name()?))
                })?;
                Ok(Item::Map { name, src, tgt, graph })
            }
            "bundle" => {
                self.next();
                let name = self.name()?;
                self.keyword("on")?;
                let base = self.name()?;
                let values = self.braced(|p| {
                    let pt = p.name()?;
                    p.expect(Tok::Colon)?;
                    p.expect(Tok::LParen)?;
                    let a = p.int()?;
                    p.expect(Tok::Comma)?;
                    let b = p.int()?;
                    p.expect(Tok::RParen)?;
                    Ok((pt, (a, b)))
                })?;
                Ok(Item::Bundle { name, base, values })
            }
            "let" => {
                self.next();
                let name = self.name()?;
                self.expect(Tok::Assign)?;
                Ok(Item::Let { name, expr: self.expr()? })
            }
            "eval" => {
                self.next();
                Ok(Item::Eval(self.expr()?))
            }
            "assert" => {
                self.next();
                let lhs = self.expr()?;
                let equal = match self.peek() {
                    Tok::EqEq => true,
                    Tok::NotEq => false,
                    _ => return Err(self.error("`==` or `!=`")),
                };
                self.next();
                Ok(Item::Assert { lhs, rhs: self.expr()?, equal })
            }
            "check" => {
                self.next();
                let pos = self.pos();
                match self.next().tok {
                    Tok::Ident(name) | Tok::Str(name) => Ok(Item::Check(Ident { name, pos })),
                    other => Err(DslError::new(
                        ErrorKind::Syntax,
                        pos,
                        format!("expected an axiom name, found {other}"),
                    )),
                }
            }
            _ => Err(self.error("a declaration or statement")),
        }
    }

    /// `sum := prefix (("+" | "-") prefix)*`
    pub fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.prefix()?;
        loop {
            let pos = self.pos();
            let kind = if self.eat(&Tok::Plus) {
                ExprKind::Add(Box::new(lhs), Box::new(self.prefix()?))
            } else if self.eat(&Tok::Minus) {
                ExprKind::Sub(Box::new(lhs), Box::new(self.prefix()?))
            } else {
                return Ok(lhs);
            };
            lhs = Expr::new(kind, pos);
        }
    }

    /// `prefix := "-" prefix | INT "*" prefix | product`
    fn prefix(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        if self.eat(&Tok::Minus) {
            return Ok(Expr::new(ExprKind::Neg(Box::new(self.prefix()?)), pos));
        }
        if let &Tok::Int(k) = self.peek() {
            self.next();
            self.expect(Tok::Star)?;
            return Ok(Expr::new(ExprKind::Scale(k, Box::new(self.prefix()?)), pos));
        }
        self.product()
    }

    /// `product := atom ("." atom)*`
    fn product(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.atom()?;
        loop {
            let pos = self.pos();
            if !self.eat(&Tok::Dot) {
                return Ok(lhs);
            }
            lhs = Expr::new(ExprKind::Product(Box::new(lhs), Box::new(self.atom()?)), pos);
        }
    }

    fn call<T>(&mut self, body: impl FnOnce(&mut Self) -> Result<T, DslError>) -> Result<T, DslError> {
        self.next();
        self.expect(Tok::LParen)?;
        let out = body(self)?;
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let pos = self.pos();
        let kind = match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                return Ok(e);
            }
            Tok::LBracket => {
                self.next();
                let src = self.name()?;
                self.expect(Tok::LArrow)?;
                let p = self.name()?;
                self.expect(Tok::Comma)?;
                let s = self.name()?;
                self.expect(Tok::Arrow)?;
                let tgt = self.name()?;
                let mut bundles = Vec::new();
                if self.eat(&Tok::Semi) {
                    bundles.push(self.name()?);
                    while self.eat(&Tok::Comma) {
                        bundles.push(self.name()?);
                    }
                }
                self.expect(Tok::RBracket)?;
                ExprKind::Bicycle { src, p, s, tgt, bundles }
            }
            Tok::Ident(w) if w == "unit" => ExprKind::Unit(self.call(|p| p.name())?),
            Tok::Ident(w) if w == "c1" => ExprKind::Chern(self.call(|p| p.name())?),
            Tok::Ident(w) if w == "push" || w == "pull" => {
                let (f, e) = self.call(|p| {
                    let f = p.name()?;
                    p.expect(Tok::Comma)?;
                    Ok((f, p.expr()?))
                })?;
                if w == "push" {
                    ExprKind::Push(f, Box::new(e))
                } else {
                    ExprKind::Pull(f, Box::new(e))
                }
            }
            Tok::Ident(w) if w == "spush" || w == "ppull" => {
                let (e, g) = self.call(|p| {
                    let e = p.expr()?;
                    p.expect(Tok::Comma)?;
                    Ok((e, p.name()?))
                })?;
                if w == "spush" {
                    ExprKind::SPush(Box::new(e), g)
                } else {
                    ExprKind::PPull(Box::new(e), g)
                }
            }
            Tok::Ident(w) if KEYWORDS.contains(&w.as_str()) => return Err(self.error("an expression")),
            Tok::Ident(_) => ExprKind::Name(self.name()?),
            _ => return Err(self.error("an expression")),
        };
        Ok(Expr::new(kind, pos))
    }
}
