//! Pretty printer. Its output parses back to the same tree.

use std::fmt;

use super::ast::{Expr, ExprKind, Ident, Item, Script};
use super::lexer::{is_ident_char, is_ident_start};

const SUM: u8 = 1;
const PREFIX: u8 = 2;
const PRODUCT: u8 = 3;
const ATOM: u8 = 4;

fn prec(e: &Expr) -> u8 {
    match e.kind {
        ExprKind::Add(..) | ExprKind::Sub(..) => SUM,
        ExprKind::Neg(_) | ExprKind::Scale(..) => PREFIX,
        ExprKind::Product(..) => PRODUCT,
        _ => ATOM,
    }
}

struct At<'a>(&'a Expr, u8);

impl fmt::Display for At<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let At(e, min) = *self;
        if prec(e) < min {
            write!(f, "({e})")
        } else {
            write!(f, "{e}")
        }
    }
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Name(n) => write!(f, "{n}"),
            ExprKind::Unit(x) => write!(f, "unit({x})"),
            ExprKind::Chern(l) => write!(f, "c1({l})"),
            ExprKind::Bicycle { src, p, s, tgt, bundles } => {
                write!(f, "[{src} <- {p}, {s} -> {tgt}")?;
                if !bundles.is_empty() {
                    let names: Vec<&str> = bundles.iter().map(|b| b.name.as_str()).collect();
                    write!(f, " ; {}", names.join(", "))?;
                }
                f.write_str("]")
            }
            ExprKind::Push(m, e) => write!(f, "push({m}, {e})"),
            ExprKind::SPush(e, m) => write!(f, "spush({e}, {m})"),
            ExprKind::Pull(m, e) => write!(f, "pull({m}, {e})"),
            ExprKind::PPull(e, m) => write!(f, "ppull({e}, {m})"),
            ExprKind::Product(l, r) => write!(f, "{} . {}", At(l, PRODUCT), At(r, ATOM)),
            ExprKind::Add(l, r) => write!(f, "{} + {}", At(l, SUM), At(r, PREFIX)),
            ExprKind::Sub(l, r) => write!(f, "{} - {}", At(l, SUM), At(r, PREFIX)),
            ExprKind::Neg(e) => write!(f, "-{}", At(e, PREFIX)),
            ExprKind::Scale(k, e) => write!(f, "{k} * {}", At(e, PREFIX)),
        }
    }
}

fn axiom_name(name: &str) -> String {
    let plain = name.chars().next().is_some_and(is_ident_start) && name.chars().all(is_ident_char);
    if plain {
        name.to_string()
    } else {
        format!("\"{name}\"")
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T>(items: &[T], each: impl Fn(&T) -> String) -> String {
            if items.is_empty() {
                "{ }".into()
            } else {
                format!("{{ {} }}", items.iter().map(each).collect::<Vec<_>>().join(", "))
            }
        }
        match self {
            Item::Space { name, points } => {
                write!(f, "space {name} {}", list(points, |(p, d)| format!("{p}: dim {d}")))
            }
            Item::Map { name, src, tgt, graph } => {
                write!(f, "map {name} : {src} -> {tgt} {}", list(graph, |(a, b)| format!("{a} -> {b}")))
            }
            Item::Bundle { name, base, values } => {
                write!(f, "bundle {name} on {base} {}", list(values, |(p, (a, b))| format!("{p}: ({a}, {b})")))
            }
            Item::Let { name, expr } => write!(f, "let {name} = {expr}"),
            Item::Eval(e) => write!(f, "eval {e}"),
            Item::Assert { lhs, rhs, equal } => {
                write!(f, "assert {lhs} {} {rhs}", if *equal { "==" } else { "!=" })
            }
            Item::Check(id) => write!(f, "check {}", axiom_name(&id.name)),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}
