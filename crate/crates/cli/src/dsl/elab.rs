use std::collections::{BTreeMap, BTreeSet};

use bicycles_core::group::canonicalize;
use bicycles_core::ops::{closed, unit};
use bicycles_core::{FiniteSpace, GroupElement, Label, LineBundle, Point, PointMap, RawBicycle};

use super::ast::{Expr, ExprKind, Ident, Item, Script};
use super::error::{suggest, DslError, ErrorKind};
use super::Pos;

/// Everything declared so far, by kind.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub spaces: BTreeMap<String, FiniteSpace>,
    pub maps: BTreeMap<String, PointMap>,
    pub bundles: BTreeMap<String, LineBundle>,
    pub elements: BTreeMap<String, GroupElement>,
}

/// A statement with its values computed.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Statement {
    Eval {
        expr: Expr,
        value: GroupElement,
    },
    Assert {
        lhs: Expr,
        rhs: Expr,
        equal: bool,
        lhs_value: GroupElement,
        rhs_value: GroupElement,
    },
    Check(Ident),
}

impl Statement {
    /// Whether an assertion's expectation is met. Other statements always hold.
    pub fn holds(&self) -> bool {
        match self {
            Statement::Assert { equal, lhs_value, rhs_value, .. } => (lhs_value == rhs_value) == *equal,
            _ => true,
        }
    }
}

/// An elaborated script: declarations resolved, every expression evaluated.
#[derive(Clone, Debug)]
pub struct Program {
    pub env: Env,
    pub statements: Vec<Statement>,
}

fn type_error(pos: Pos, message: impl Into<String>) -> DslError {
    DslError::new(ErrorKind::Type, pos, message)
}

fn lookup<'a, T>(table: &'a BTreeMap<String, T>, kind: &str, id: &Ident) -> Result<&'a T, DslError> {
    table.get(&id.name).ok_or_else(|| {
        let mut e = DslError::new(ErrorKind::Name, id.pos, format!("unknown {kind} `{}`", id.name));
        e.suggestions = suggest(&id.name, table.keys());
        e
    })
}

fn fresh<T>(table: &BTreeMap<String, T>, kind: &str, id: &Ident) -> Result<(), DslError> {
    if table.contains_key(&id.name) {
        Err(DslError::new(ErrorKind::Name, id.pos, format!("{kind} `{}` is already declared", id.name)))
    } else {
        Ok(())
    }
}

fn point_in(space: &FiniteSpace, space_name: &str, id: &Ident) -> Result<Point, DslError> {
    let p = Point::named(&id.name);
    if space.contains(&p) {
        return Ok(p);
    }
    let names: Vec<String> = space.points().map(|p| p.to_string()).collect();
    let mut e = DslError::new(ErrorKind::Name, id.pos, format!("space `{space_name}` has no point `{}`", id.name));
    e.suggestions = suggest(&id.name, &names);
    Err(e)
}

/// Checks that `entries` names every point of `space` exactly once.
fn total<T>(
    space: &FiniteSpace,
    space_name: &str,
    what: &str,
    at: &Ident,
    entries: &[(Ident, T)],
) -> Result<(), DslError> {
    let mut seen = BTreeSet::new();
    for (p, _) in entries {
        let pt = point_in(space, space_name, p)?;
        if !seen.insert(pt) {
            return Err(type_error(p.pos, format!("{what} `{}` lists `{}` twice", at.name, p.name)));
        }
    }
    if let Some(missing) = space.points().find(|p| !seen.contains(*p)) {
        return Err(type_error(at.pos, format!("{what} `{}` says nothing about `{missing}`", at.name)));
    }
    Ok(())
}

impl Env {
    /// The declared name of `space`, or its points when it has none.
    pub fn space_name(&self, space: &FiniteSpace) -> String {
        self.spaces
            .iter()
            .find(|(_, s)| *s == space)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| {
                let pts: Vec<String> = space.points().map(|p| p.to_string()).collect();
                format!("{{{}}}", pts.join(", "))
            })
    }

    fn declare(&mut self, item: &Item) -> Result<(), DslError> {
        match item {
            Item::Space { name, points } => {
                fresh(&self.spaces, "space", name)?;
                let mut seen = BTreeSet::new();
                for (p, _) in points {
                    if !seen.insert(&p.name) {
                        return Err(type_error(p.pos, format!("space `{}` lists `{}` twice", name.name, p.name)));
                    }
                }
                let space = FiniteSpace::new(points.iter().map(|(p, d)| (Point::named(&p.name), *d)))
                    .map_err(|e| type_error(name.pos, e.to_string()))?;
                self.spaces.insert(name.name.clone(), space);
            }
            Item::Map { name, src, tgt, graph } => {
                fresh(&self.maps, "map", name)?;
                let source = lookup(&self.spaces, "space", src)?;
                let target = lookup(&self.spaces, "space", tgt)?;
                total(source, &src.name, "map", name, graph)?;
                let mut pairs = Vec::new();
                for (a, b) in graph {
                    pairs.push((point_in(source, &src.name, a)?, point_in(target, &tgt.name, b)?));
                }
                let map = PointMap::new(source.clone(), target.clone(), pairs)
                    .map_err(|e| type_error(name.pos, e.to_string()))?;
                self.maps.insert(name.name.clone(), map);
            }
            Item::Bundle { name, base, values } => {
                fresh(&self.bundles, "bundle", name)?;
                let space = lookup(&self.spaces, "space", base)?;
                total(space, &base.name, "bundle", name, values)?;
                let vals = values.iter().map(|(p, (a, b))| (Point::named(&p.name), Label(*a, *b)));
                let bundle = LineBundle::new(space.clone(), vals).map_err(|e| type_error(name.pos, e.to_string()))?;
                self.bundles.insert(name.name.clone(), bundle);
            }
            Item::Let { name, expr } => {
                fresh(&self.elements, "element", name)?;
                let value = self.eval(expr)?;
                self.elements.insert(name.name.clone(), value);
            }
            Item::Eval(_) | Item::Assert { .. } | Item::Check(_) => {}
        }
        Ok(())
    }

    fn smooth(&self, id: &Ident) -> Result<&PointMap, DslError> {
        let f = lookup(&self.maps, "map", id)?;
        if f.is_smooth() {
            Ok(f)
        } else {
            Err(type_error(id.pos, format!("map {} is not smooth", id.name)))
        }
    }

    fn same_space(&self, pos: Pos, what: &str, want: &FiniteSpace, got: &FiniteSpace) -> Result<(), DslError> {
        if want == got {
            Ok(())
        } else {
            Err(type_error(
                pos,
                format!("{what}: expected `{}`, found `{}`", self.space_name(want), self.space_name(got)),
            ))
        }
    }

    fn same_type(&self, pos: Pos, op: &str, a: &GroupElement, b: &GroupElement) -> Result<(), DslError> {
        self.same_space(pos, &format!("{op} of elements with different sources"), a.src(), b.src())?;
        self.same_space(pos, &format!("{op} of elements with different targets"), a.tgt(), b.tgt())
    }

    /// Evaluates an expression to its canonical form.
    pub fn eval(&self, e: &Expr) -> Result<GroupElement, DslError> {
        let core = |r: bicycles_core::Result<GroupElement>| r.map_err(|err| type_error(e.pos, err.to_string()));
        match &e.kind {
            ExprKind::Name(n) => lookup(&self.elements, "element", n).cloned(),
            ExprKind::Unit(x) => Ok(unit(lookup(&self.spaces, "space", x)?)),
            ExprKind::Chern(l) => Ok(closed::chern_class(lookup(&self.bundles, "bundle", l)?)),
            ExprKind::Bicycle { src, p, s, tgt, bundles } => {
                let x = lookup(&self.spaces, "space", src)?;
                let y = lookup(&self.spaces, "space", tgt)?;
                let pm = lookup(&self.maps, "map", p)?;
                let sm = lookup(&self.maps, "map", s)?;
                self.same_space(p.pos, &format!("target of `{}`", p.name), x, pm.target())?;
                self.same_space(s.pos, &format!("target of `{}`", s.name), y, sm.target())?;
                self.same_space(s.pos, &format!("source of `{}`", s.name), pm.source(), sm.source())?;
                let mut ls = Vec::new();
                for b in bundles {
                    let l = lookup(&self.bundles, "bundle", b)?;
                    self.same_space(b.pos, &format!("base of `{}`", b.name), pm.source(), l.base())?;
                    ls.push(l.clone());
                }
                let raw = RawBicycle::new(pm.clone(), sm.clone(), ls).map_err(|err| type_error(e.pos, err.to_string()))?;
                Ok(canonicalize(&raw))
            }
            ExprKind::Push(f, a) => {
                let fm = lookup(&self.maps, "map", f)?;
                let a = self.eval(a)?;
                self.same_space(f.pos, &format!("push along `{}`", f.name), fm.source(), a.src())?;
                core(closed::proper_pushforward(fm, &a))
            }
            ExprKind::SPush(a, g) => {
                let gm = self.smooth(g)?;
                let a = self.eval(a)?;
                self.same_space(g.pos, &format!("spush along `{}`", g.name), gm.source(), a.tgt())?;
                core(closed::smooth_pushforward(&a, gm))
            }
            ExprKind::Pull(f, a) => {
                let fm = self.smooth(f)?;
                let a = self.eval(a)?;
                self.same_space(f.pos, &format!("pull along `{}`", f.name), fm.target(), a.src())?;
                core(closed::smooth_pullback(fm, &a))
            }
            ExprKind::PPull(a, g) => {
                let gm = lookup(&self.maps, "map", g)?;
                let a = self.eval(a)?;
                self.same_space(g.pos, &format!("ppull along `{}`", g.name), gm.target(), a.tgt())?;
                core(closed::proper_pullback(&a, gm))
            }
            ExprKind::Product(l, r) => {
                if let ExprKind::Chern(name) = &l.kind {
                    let bundle = lookup(&self.bundles, "bundle", name)?;
                    let a = self.eval(r)?;
                    self.same_space(e.pos, "c1(_) . _: base of the bundle vs source", a.src(), bundle.base())?;
                    return core(closed::chern_left(bundle, &a));
                }
                if let ExprKind::Chern(name) = &r.kind {
                    let bundle = lookup(&self.bundles, "bundle", name)?;
                    let a = self.eval(l)?;
                    self.same_space(e.pos, "_ . c1(_): base of the bundle vs target", a.tgt(), bundle.base())?;
                    return core(closed::chern_right(&a, bundle));
                }
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                self.same_space(e.pos, "product: target of the left factor vs source of the right", a.tgt(), b.src())?;
                core(closed::product(&a, &b))
            }
            ExprKind::Add(l, r) | ExprKind::Sub(l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                let minus = matches!(e.kind, ExprKind::Sub(..));
                self.same_type(e.pos, if minus { "difference" } else { "sum" }, &a, &b)?;
                core(if minus { a.sub(&b) } else { a.add(&b) })
            }
            ExprKind::Neg(a) => Ok(self.eval(a)?.neg()),
            ExprKind::Scale(k, a) => Ok(self.eval(a)?.scale(*k)),
        }
    }
}

/// Resolves every name and evaluates every expression of `script`.
pub fn elaborate(script: &Script) -> Result<Program, DslError> {
    let mut env = Env::default();
    let mut statements = Vec::new();
    for item in &script.items {
        env.declare(item)?;
        match item {
            Item::Eval(expr) => statements.push(Statement::Eval {
                expr: expr.clone(),
                value: env.eval(expr)?,
            }),
            Item::Assert { lhs, rhs, equal } => {
                let (lhs_value, rhs_value) = (env.eval(lhs)?, env.eval(rhs)?);
                env.same_type(rhs.pos, "comparison", &lhs_value, &rhs_value)?;
                statements.push(Statement::Assert {
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    equal: *equal,
                    lhs_value,
                    rhs_value,
                });
            }
            Item::Check(id) => statements.push(Statement::Check(id.clone())),
            _ => {}
        }
    }
    Ok(Program { env, statements })
}
