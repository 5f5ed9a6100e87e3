//! A small text language for finite models and bivariant expressions.
//!
//! ```text
//! space X { x0: dim 0, x1: dim 1 }
//! map f : X -> Y { x0 -> y0, x1 -> y0 }
//! bundle L on X { x0: (1, 0), x1: (0, 1) }
//! let a = [X <- p, s -> Y ; L]
//! eval push(f, a) . c1(M) + 2 * unit(Y)
//! assert unit(X) . a == a
//! check PPPU
//! ```
//!
//! Product is `.`; `c1(L) . e` and `e . c1(M)` are the left and right Chern
//! operators. `push(f, e)` and `pull(f, e)` act on the source, `spush(e, g)`
//! and `ppull(e, g)` on the target; `spush` and `pull` need smooth maps.

pub mod ast;
mod elab;
mod error;
mod lexer;
mod parser;
mod printer;

pub use ast::{Expr, ExprKind, Ident, Item, Script};
pub use elab::{elaborate, Env, Program, Statement};
pub use error::{DslError, ErrorKind};
pub use parser::{parse_expr, parse_script, KEYWORDS};

/// A 1-based line and column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

/// Parses and elaborates a whole script.
pub fn load(text: &str) -> Result<Program, DslError> {
    elaborate(&parse_script(text)?)
}
