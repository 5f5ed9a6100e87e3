use super::Pos;

/// A name together with where it was written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(name: impl Into<String>) -> Self {
        Ident {
            name: name.into(),
            pos: Pos::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Space {
        name: Ident,
        points: Vec<(Ident, i64)>,
    },
    Map {
        name: Ident,
        src: Ident,
        tgt: Ident,
        graph: Vec<(Ident, Ident)>,
    },
    Bundle {
        name: Ident,
        base: Ident,
        values: Vec<(Ident, (i64, i64))>,
    },
    Let {
        name: Ident,
        expr: Expr,
    },
    Eval(Expr),
    Assert {
        lhs: Expr,
        rhs: Expr,
        equal: bool,
    },
    Check(Ident),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Name(Ident),
    Unit(Ident),
    Chern(Ident),
    /// `[X <- p, s -> Y ; L1, ..., Lr]`.
    Bicycle {
        src: Ident,
        p: Ident,
        s: Ident,
        tgt: Ident,
        bundles: Vec<Ident>,
    },
    /// `push(f, e)`: proper pushforward.
    Push(Ident, Box<Expr>),
    /// `spush(e, g)`: smooth pushforward.
    SPush(Box<Expr>, Ident),
    /// `pull(f, e)`: smooth pullback.
    Pull(Ident, Box<Expr>),
    /// `ppull(e, g)`: proper pullback.
    PPull(Box<Expr>, Ident),
    Product(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Scale(i64, Box<Expr>),
}

impl Expr {
    pub fn new(kind: ExprKind, pos: Pos) -> Self {
        Expr { kind, pos }
    }

    /// A copy with every position reset, for comparing structure alone.
    pub fn unlocated(&self) -> Expr {
        let b = |e: &Expr| Box::new(e.unlocated());
        let i = |id: &Ident| Ident::new(id.name.clone());
        let kind = match &self.kind {
            ExprKind::Name(n) => ExprKind::Name(i(n)),
            ExprKind::Unit(n) => ExprKind::Unit(i(n)),
            ExprKind::Chern(n) => ExprKind::Chern(i(n)),
            ExprKind::Bicycle { src, p, s, tgt, bundles } => ExprKind::Bicycle {
                src: i(src),
                p: i(p),
                s: i(s),
                tgt: i(tgt),
                bundles: bundles.iter().map(i).collect(),
            },
            ExprKind::Push(f, e) => ExprKind::Push(i(f), b(e)),
            ExprKind::SPush(e, g) => ExprKind::SPush(b(e), i(g)),
            ExprKind::Pull(f, e) => ExprKind::Pull(i(f), b(e)),
            ExprKind::PPull(e, g) => ExprKind::PPull(b(e), i(g)),
            ExprKind::Product(l, r) => ExprKind::Product(b(l), b(r)),
            ExprKind::Add(l, r) => ExprKind::Add(b(l), b(r)),
            ExprKind::Sub(l, r) => ExprKind::Sub(b(l), b(r)),
            ExprKind::Neg(e) => ExprKind::Neg(b(e)),
            ExprKind::Scale(k, e) => ExprKind::Scale(*k, b(e)),
        };
        Expr::new(kind, Pos::default())
    }
}

impl Script {
    /// A copy with every position reset, for comparing structure alone.
    pub fn unlocated(&self) -> Script {
        let i = |id: &Ident| Ident::new(id.name.clone());
        let items = self
            .items
            .iter()
            .map(|item| match item {
                Item::Space { name, points } => Item::Space {
                    name: i(name),
                    points: points.iter().map(|(p, d)| (i(p), *d)).collect(),
                },
                Item::Map { name, src, tgt, graph } => Item::Map {
                    name: i(name),
                    src: i(src),
                    tgt: i(tgt),
                    graph: graph.iter().map(|(a, b)| (i(a), i(b))).collect(),
                },
                Item::Bundle { name, base, values } => Item::Bundle {
                    name: i(name),
                    base: i(base),
                    values: values.iter().map(|(p, v)| (i(p), *v)).collect(),
                },
                Item::Let { name, expr } => Item::Let {
                    name: i(name),
                    expr: expr.unlocated(),
                },
                Item::Eval(e) => Item::Eval(e.unlocated()),
                Item::Assert { lhs, rhs, equal } => Item::Assert {
                    lhs: lhs.unlocated(),
                    rhs: rhs.unlocated(),
                    equal: *equal,
                },
                Item::Check(id) => Item::Check(i(id)),
            })
            .collect();
        Script { items }
    }
}
