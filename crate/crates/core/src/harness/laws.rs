//! Instance builders and checks for every axiom.

use std::fmt;

use super::axioms::{AxiomId, ForgetLaw, GammaLaw, Law, OracleCheck, TheoryAxiom, VbLaw};
use super::gen::Gen;
use super::instance::{Instance, Materialized};
use crate::error::Result;
use crate::geometry::{compose, fiber_product, FiniteSpace, LineBundle, PointMap};
use crate::group::{canonicalize, canonicalize_vb, GroupElement};
use crate::ops::{self, decompose_normal_form, oracle, VbElement, VbProduct};
use crate::theory::oriented::raw;
use crate::theory::{
    forget_map, gamma_universal, om_orientation, om_product, om_pullback, om_pushforward,
    BivariantTheory,
};

/// Outcome of evaluating one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated { lhs: String, rhs: String },
    Error(String),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    fn and(self, other: impl FnOnce() -> Result<Verdict>) -> Result<Verdict> {
        match self {
            Verdict::Holds => other(),
            v => Ok(v),
        }
    }
}

fn compare<E: PartialEq + fmt::Display>(lhs: E, rhs: E) -> Verdict {
    if lhs == rhs {
        Verdict::Holds
    } else {
        Verdict::Violated {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// The operations the shared laws need.
trait Ops {
    type E: PartialEq + fmt::Display;
    fn lift(&self, a: &GroupElement) -> Result<Self::E>;
    fn product(&self, a: &Self::E, b: &Self::E) -> Result<Self::E>;
    fn push(&self, f: &PointMap, a: &Self::E) -> Result<Self::E>;
    fn spush(&self, a: &Self::E, g: &PointMap) -> Result<Self::E>;
    fn pull(&self, f: &PointMap, a: &Self::E) -> Result<Self::E>;
    fn ppull(&self, a: &Self::E, g: &PointMap) -> Result<Self::E>;
    fn unit(&self, x: &FiniteSpace) -> Self::E;
}

struct InTheory<'a, T>(&'a T);

impl<T: BivariantTheory> Ops for InTheory<'_, T> {
    type E = T::Element;

    fn lift(&self, a: &GroupElement) -> Result<T::Element> {
        gamma_universal(self.0, a)
    }
    fn product(&self, a: &T::Element, b: &T::Element) -> Result<T::Element> {
        self.0.product(a, b)
    }
    fn push(&self, f: &PointMap, a: &T::Element) -> Result<T::Element> {
        self.0.proper_pushforward(f, a)
    }
    fn spush(&self, a: &T::Element, g: &PointMap) -> Result<T::Element> {
        self.0.smooth_pushforward(a, g)
    }
    fn pull(&self, f: &PointMap, a: &T::Element) -> Result<T::Element> {
        self.0.smooth_pullback(f, a)
    }
    fn ppull(&self, a: &T::Element, g: &PointMap) -> Result<T::Element> {
        self.0.proper_pullback(a, g)
    }
    fn unit(&self, x: &FiniteSpace) -> T::Element {
        self.0.unit(x)
    }
}

struct InVector(VbProduct);

impl Ops for InVector {
    type E = VbElement;

    fn lift(&self, a: &GroupElement) -> Result<VbElement> {
        Ok(VbElement(a.clone()))
    }
    fn product(&self, a: &VbElement, b: &VbElement) -> Result<VbElement> {
        self.0.apply(a, b)
    }
    fn push(&self, f: &PointMap, a: &VbElement) -> Result<VbElement> {
        a.proper_pushforward(f)
    }
    fn spush(&self, a: &VbElement, g: &PointMap) -> Result<VbElement> {
        a.smooth_pushforward(g)
    }
    fn pull(&self, f: &PointMap, a: &VbElement) -> Result<VbElement> {
        a.smooth_pullback(f)
    }
    fn ppull(&self, a: &VbElement, g: &PointMap) -> Result<VbElement> {
        a.proper_pullback(g)
    }
    fn unit(&self, x: &FiniteSpace) -> VbElement {
        self.0.unit(x)
    }
}

/// Builds a random instance for `id`.
pub fn build(id: AxiomId, g: &mut Gen<'_>) -> Instance {
    match id {
        AxiomId::Theory(TheoryAxiom::Law(l)) | AxiomId::Vector(_, VbLaw::Law(l)) => build_law(l, g),
        AxiomId::Theory(a) => build_theory(a, g),
        AxiomId::Gamma(l) => build_gamma(l, g),
        AxiomId::Oracle(o) => build_oracle(o, g),
        AxiomId::Vector(_, VbLaw::Bilinear) => {
            let (x, y, z) = (g.space(), g.space(), g.space());
            g.element(x, y);
            g.element(x, y);
            g.element(y, z);
            g.element(y, z);
        }
        AxiomId::Vector(_, VbLaw::Bigrading) => {
            let (x, y, z) = (g.space(), g.space(), g.space());
            let e = g.generator(x, y, None);
            let mid = g.first_target(e);
            g.generator(y, z, mid);
        }
        AxiomId::Forget(f) => build_forget(f, g),
    }
    std::mem::take(&mut g.inst)
}

/// Evaluates `id` on an instance in `theory`. Axioms about the concrete
/// bicycle groups ignore `theory`.
pub fn evaluate<T: BivariantTheory>(theory: &T, id: AxiomId, inst: &Instance) -> Verdict {
    let run = || -> Result<Verdict> {
        let m = inst.materialize()?;
        match id {
            AxiomId::Theory(TheoryAxiom::Law(l)) => check_law(&InTheory(theory), l, &m),
            AxiomId::Theory(a) => check_theory(theory, a, &m),
            AxiomId::Gamma(l) => check_gamma(theory, l, &m),
            AxiomId::Oracle(o) => check_oracle(o, &m),
            AxiomId::Vector(p, VbLaw::Law(l)) => check_law(&InVector(p), l, &m),
            AxiomId::Vector(p, VbLaw::Bilinear) => check_bilinear(p, &m),
            AxiomId::Vector(p, VbLaw::Bigrading) => check_bigrading(p, &m),
            AxiomId::Forget(f) => check_forget(f, &m),
        }
    };
    run().unwrap_or_else(|e| Verdict::Error(e.to_string()))
}

fn build_law(law: Law, g: &mut Gen<'_>) {
    let (x, y) = (g.space(), g.space());
    match law {
        Law::A1 => {
            let (z, w) = (g.space(), g.space());
            g.element(x, y);
            g.element(y, z);
            g.element(z, w);
        }
        Law::Unit => {
            g.element(x, y);
        }
        Law::A2a => {
            g.element(x, y);
            let (x1, _) = g.map_from(x);
            g.map_from(x1);
        }
        Law::A2b => {
            g.element(x, y);
            let (y1, _) = g.smooth_from(y);
            g.smooth_from(y1);
        }
        Law::A2p => {
            g.element(x, y);
            g.map_from(x);
            g.smooth_from(y);
        }
        Law::A3a => {
            g.element(x, y);
            let (x1, _) = g.smooth_into(x);
            g.smooth_into(x1);
        }
        Law::A3b => {
            g.element(x, y);
            let (y1, _) = g.map_into(y);
            g.map_into(y1);
        }
        Law::A3p => {
            g.element(x, y);
            g.smooth_into(x);
            g.map_into(y);
        }
        Law::A12a | Law::A12b | Law::A13a | Law::A13b => {
            let z = g.space();
            g.element(x, y);
            g.element(y, z);
            match law {
                Law::A12a => g.map_from(x),
                Law::A12b => g.smooth_from(z),
                Law::A13a => g.smooth_into(x),
                _ => g.map_into(z),
            };
        }
        Law::A23a => {
            g.element(x, y);
            g.map_from(x);
            g.map_into(y);
        }
        Law::A23b => {
            g.element(x, y);
            g.smooth_into(x);
            g.smooth_from(y);
        }
        Law::A23c => {
            let (x1, _) = g.map_into(x);
            g.smooth_into(x);
            g.element(x1, y);
        }
        Law::A23d => {
            g.map_into(y);
            let (y2, _) = g.smooth_into(y);
            g.element(x, y2);
        }
        Law::A123a | Law::A123b => {
            let (y1, _) = if law == Law::A123a {
                g.smooth_from(y)
            } else {
                g.map_into(y)
            };
            let z = g.space();
            g.element(x, y);
            g.element(y1, z);
        }
    }
}

fn check_law<O: Ops>(o: &O, law: Law, m: &Materialized) -> Result<Verdict> {
    let e = |i: usize| o.lift(m.element(i));
    let map = |i: usize| &m.maps[i];
    Ok(match law {
        Law::A1 => {
            let (a, b, c) = (e(0)?, e(1)?, e(2)?);
            compare(o.product(&o.product(&a, &b)?, &c)?, o.product(&a, &o.product(&b, &c)?)?)
        }
        Law::Unit => {
            let a = e(0)?;
            compare(o.product(&o.unit(&m.spaces[0]), &a)?, a)
                .and(|| {
                    let a = e(0)?;
                    Ok(compare(o.product(&a, &o.unit(&m.spaces[1]))?, a))
                })?
        }
        Law::A2a => {
            let a = e(0)?;
            compare(o.push(&compose(map(0), map(1))?, &a)?, o.push(map(1), &o.push(map(0), &a)?)?)
        }
        Law::A2b => {
            let a = e(0)?;
            compare(o.spush(&a, &compose(map(0), map(1))?)?, o.spush(&o.spush(&a, map(0))?, map(1))?)
        }
        Law::A2p => {
            let a = e(0)?;
            compare(o.spush(&o.push(map(0), &a)?, map(1))?, o.push(map(0), &o.spush(&a, map(1))?)?)
        }
        Law::A3a => {
            let a = e(0)?;
            compare(o.pull(&compose(map(1), map(0))?, &a)?, o.pull(map(1), &o.pull(map(0), &a)?)?)
        }
        Law::A3b => {
            let a = e(0)?;
            compare(o.ppull(&a, &compose(map(1), map(0))?)?, o.ppull(&o.ppull(&a, map(0))?, map(1))?)
        }
        Law::A3p => {
            let a = e(0)?;
            compare(o.pull(map(0), &o.ppull(&a, map(1))?)?, o.ppull(&o.pull(map(0), &a)?, map(1))?)
        }
        Law::A12a => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.push(map(0), &o.product(&a, &b)?)?, o.product(&o.push(map(0), &a)?, &b)?)
        }
        Law::A12b => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.spush(&o.product(&a, &b)?, map(0))?, o.product(&a, &o.spush(&b, map(0))?)?)
        }
        Law::A13a => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.pull(map(0), &o.product(&a, &b)?)?, o.product(&o.pull(map(0), &a)?, &b)?)
        }
        Law::A13b => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.ppull(&o.product(&a, &b)?, map(0))?, o.product(&a, &o.ppull(&b, map(0))?)?)
        }
        Law::A23a => {
            let a = e(0)?;
            compare(o.ppull(&o.push(map(0), &a)?, map(1))?, o.push(map(0), &o.ppull(&a, map(1))?)?)
        }
        Law::A23b => {
            let a = e(0)?;
            compare(o.pull(map(0), &o.spush(&a, map(1))?)?, o.spush(&o.pull(map(0), &a)?, map(1))?)
        }
        Law::A23c => {
            // f = map 0 (proper), g = map 1 (smooth); g' and f' are the projections.
            let a = e(0)?;
            let sq = fiber_product(map(0), map(1))?;
            compare(o.pull(map(1), &o.push(map(0), &a)?)?, o.push(&sq.second, &o.pull(&sq.first, &a)?)?)
        }
        Law::A23d => {
            let a = e(0)?;
            let sq = fiber_product(map(0), map(1))?;
            compare(o.ppull(&o.spush(&a, map(1))?, map(0))?, o.spush(&o.ppull(&a, &sq.second)?, &sq.first)?)
        }
        Law::A123a => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.product(&o.spush(&a, map(0))?, &b)?, o.product(&a, &o.pull(map(0), &b)?)?)
        }
        Law::A123b => {
            let (a, b) = (e(0)?, e(1)?);
            compare(o.product(&o.ppull(&a, map(0))?, &b)?, o.product(&a, &o.push(map(0), &b)?)?)
        }
    })
}

fn build_theory(a: TheoryAxiom, g: &mut Gen<'_>) {
    match a {
        TheoryAxiom::Law(l) => build_law(l, g),
        TheoryAxiom::Pppu => {
            let y = g.space();
            g.smooth_into(y);
            g.map_into(y);
        }
        TheoryAxiom::Ppu => {
            let x = g.space();
            g.smooth_into(x);
            g.bundle(x);
            let y = g.space();
            g.map_into(y);
            g.bundle(y);
        }
        TheoryAxiom::Ch1 | TheoryAxiom::Ch2 => {
            let (x, y) = (g.space(), g.space());
            g.element(x, y);
            let n = if a == TheoryAxiom::Ch1 { 1 } else { 2 };
            for _ in 0..n {
                g.bundle(x);
            }
            for _ in 0..n {
                g.bundle(y);
            }
        }
        TheoryAxiom::Ch3 => {
            let (x, y, z) = (g.space(), g.space(), g.space());
            g.element(x, y);
            g.element(y, z);
            g.bundle(x);
            g.bundle(z);
        }
        TheoryAxiom::Ch4 => {
            let (x, y) = (g.space(), g.space());
            g.element(x, y);
            let (x1, _) = g.map_from(x);
            g.bundle(x1);
            let (y1, _) = g.smooth_from(y);
            g.bundle(y1);
        }
        TheoryAxiom::Ch5 => {
            let (x, y) = (g.space(), g.space());
            g.element(x, y);
            g.smooth_into(x);
            g.bundle(x);
            g.map_into(y);
            g.bundle(y);
        }
        TheoryAxiom::Uc => {
            let x = g.space();
            g.bundle(x);
        }
        TheoryAxiom::Psrel => {
            let (x, y) = (g.space(), g.space());
            g.element(x, y);
        }
    }
}

fn check_theory<T: BivariantTheory>(t: &T, a: TheoryAxiom, m: &Materialized) -> Result<Verdict> {
    let e = |i: usize| gamma_universal(t, m.element(i));
    let map = |i: usize| &m.maps[i];
    let bundle = |i: usize| &m.bundles[i];
    match a {
        TheoryAxiom::Law(l) => check_law(&InTheory(t), l, m),
        TheoryAxiom::Pppu => {
            let (s, p) = (map(0), map(1));
            let sq = fiber_product(s, p)?;
            let (p1, s1) = (&sq.first, &sq.second);
            let lhs = t.product(
                &t.smooth_pushforward(&t.unit(s.source()), s)?,
                &t.proper_pushforward(p, &t.unit(p.source()))?,
            )?;
            let one = t.unit(&sq.space);
            let first = t.smooth_pushforward(&t.proper_pushforward(p1, &one)?, s1)?;
            let second = t.proper_pushforward(p1, &t.smooth_pushforward(&one, s1)?)?;
            compare(lhs.clone(), first).and(|| Ok(compare(lhs, second)))
        }
        TheoryAxiom::Ppu => {
            let (f, l) = (map(0), bundle(0));
            let pulled = t.smooth_pullback(f, &t.unit(f.target()))?;
            let first = compare(
                t.chern_left(&l.pullback(f)?, &pulled)?,
                t.chern_right(&pulled, l)?,
            );
            first.and(|| {
                let (g, mb) = (map(1), bundle(1));
                let pulled = t.proper_pullback(&t.unit(g.target()), g)?;
                Ok(compare(
                    t.chern_right(&pulled, &mb.pullback(g)?)?,
                    t.chern_left(mb, &pulled)?,
                ))
            })
        }
        TheoryAxiom::Ch1 => {
            let a = e(0)?;
            let (l, mb) = (bundle(0), bundle(1));
            let l2 = l.tensor(&LineBundle::trivial(l.base()))?;
            let m2 = mb.tensor(&LineBundle::trivial(mb.base()))?;
            compare(t.chern_left(l, &a)?, t.chern_left(&l2, &a)?)
                .and(|| Ok(compare(t.chern_right(&a, mb)?, t.chern_right(&a, &m2)?)))
        }
        TheoryAxiom::Ch2 => {
            let a = e(0)?;
            let (l1, l2, m1, m2) = (bundle(0), bundle(1), bundle(2), bundle(3));
            compare(
                t.chern_left(l1, &t.chern_left(l2, &a)?)?,
                t.chern_left(l2, &t.chern_left(l1, &a)?)?,
            )
            .and(|| {
                Ok(compare(
                    t.chern_right(&t.chern_right(&a, m1)?, m2)?,
                    t.chern_right(&t.chern_right(&a, m2)?, m1)?,
                ))
            })
        }
        TheoryAxiom::Ch3 => {
            let (a, b) = (e(0)?, e(1)?);
            let (l, n) = (bundle(0), bundle(1));
            let ab = t.product(&a, &b)?;
            compare(t.chern_left(l, &ab)?, t.product(&t.chern_left(l, &a)?, &b)?)
                .and(|| Ok(compare(t.chern_right(&ab, n)?, t.product(&a, &t.chern_right(&b, n)?)?)))
        }
        TheoryAxiom::Ch4 => {
            let a = e(0)?;
            let (f, l, g, mb) = (map(0), bundle(0), map(1), bundle(1));
            compare(
                t.proper_pushforward(f, &t.chern_left(&l.pullback(f)?, &a)?)?,
                t.chern_left(l, &t.proper_pushforward(f, &a)?)?,
            )
            .and(|| {
                Ok(compare(
                    t.smooth_pushforward(&t.chern_right(&a, &mb.pullback(g)?)?, g)?,
                    t.chern_right(&t.smooth_pushforward(&a, g)?, mb)?,
                ))
            })
        }
        TheoryAxiom::Ch5 => {
            let a = e(0)?;
            let (f, l, g, mb) = (map(0), bundle(0), map(1), bundle(1));
            compare(
                t.smooth_pullback(f, &t.chern_left(l, &a)?)?,
                t.chern_left(&l.pullback(f)?, &t.smooth_pullback(f, &a)?)?,
            )
            .and(|| {
                Ok(compare(
                    t.proper_pullback(&t.chern_right(&a, mb)?, g)?,
                    t.chern_right(&t.proper_pullback(&a, g)?, &mb.pullback(g)?)?,
                ))
            })
        }
        TheoryAxiom::Uc => {
            let l = bundle(0);
            let one = t.unit(l.base());
            Ok(compare(t.chern_left(l, &one)?, t.chern_right(&one, l)?))
        }
        TheoryAxiom::Psrel => {
            let a = m.element(0);
            for (g, _) in a.terms() {
                let r = g.labels.len();
                let reference = decompose_normal_form(a.src(), a.tgt(), g, r)?.evaluate(t)?;
                for j in 0..r {
                    let v = compare(decompose_normal_form(a.src(), a.tgt(), g, j)?.evaluate(t)?, reference.clone());
                    if !v.holds() {
                        return Ok(v);
                    }
                }
            }
            Ok(Verdict::Holds)
        }
    }
}

fn build_gamma(l: GammaLaw, g: &mut Gen<'_>) {
    let x = g.space();
    if l == GammaLaw::Unit {
        return;
    }
    let y = g.space();
    g.element(x, y);
    match l {
        GammaLaw::Unit => {}
        GammaLaw::Product => {
            let z = g.space();
            g.element(y, z);
        }
        GammaLaw::Pushforward => {
            g.map_from(x);
            g.smooth_from(y);
        }
        GammaLaw::Pullback => {
            g.smooth_into(x);
            g.map_into(y);
        }
        GammaLaw::Chern => {
            g.bundle(x);
            g.bundle(y);
        }
    }
}

fn check_gamma<T: BivariantTheory>(t: &T, l: GammaLaw, m: &Materialized) -> Result<Verdict> {
    let gamma = |a: &GroupElement| gamma_universal(t, a);
    if l == GammaLaw::Unit {
        let x = &m.spaces[0];
        return Ok(compare(gamma(&ops::unit(x))?, t.unit(x)));
    }
    let a = m.element(0);
    let ga = gamma(a)?;
    match l {
        GammaLaw::Unit => unreachable!(),
        GammaLaw::Product => {
            let b = m.element(1);
            Ok(compare(gamma(&ops::product(a, b)?)?, t.product(&ga, &gamma(b)?)?))
        }
        GammaLaw::Pushforward => {
            let (f, g) = (&m.maps[0], &m.maps[1]);
            compare(gamma(&ops::proper_pushforward(f, a)?)?, t.proper_pushforward(f, &ga)?).and(|| {
                Ok(compare(gamma(&ops::smooth_pushforward(a, g)?)?, t.smooth_pushforward(&ga, g)?))
            })
        }
        GammaLaw::Pullback => {
            let (f, g) = (&m.maps[0], &m.maps[1]);
            compare(gamma(&ops::smooth_pullback(f, a)?)?, t.smooth_pullback(f, &ga)?).and(|| {
                Ok(compare(gamma(&ops::proper_pullback(a, g)?)?, t.proper_pullback(&ga, g)?))
            })
        }
        GammaLaw::Chern => {
            let (l, mb) = (&m.bundles[0], &m.bundles[1]);
            compare(gamma(&ops::chern_left(l, a)?)?, t.chern_left(l, &ga)?)
                .and(|| Ok(compare(gamma(&ops::chern_right(a, mb)?)?, t.chern_right(&ga, mb)?)))
        }
    }
}

fn build_oracle(o: OracleCheck, g: &mut Gen<'_>) {
    let (x, y) = (g.space(), g.space());
    match o {
        OracleCheck::Product => {
            let z = g.space();
            g.raw(x, y);
            g.raw(y, z);
        }
        OracleCheck::ProperPushforward => {
            g.raw(x, y);
            g.map_from(x);
        }
        OracleCheck::SmoothPushforward => {
            g.raw(x, y);
            g.smooth_from(y);
        }
        OracleCheck::SmoothPullback => {
            g.raw(x, y);
            g.smooth_into(x);
        }
        OracleCheck::ProperPullback => {
            g.raw(x, y);
            g.map_into(y);
        }
        OracleCheck::Chern => {
            g.raw(x, y);
            g.bundle(x);
            g.bundle(y);
        }
        OracleCheck::Whitney | OracleCheck::Tensor => {
            let z = g.space();
            g.raw_vb(x, y);
            g.raw_vb(y, z);
        }
        OracleCheck::Cycles => {
            let f = g.map(x, y);
            let z = g.space();
            let h = g.map(y, z);
            g.raw_cycle(f);
            g.raw_cycle(h);
            g.map_into(y);
            g.bundle(x);
        }
    }
}

fn check_oracle(o: OracleCheck, m: &Materialized) -> Result<Verdict> {
    // The raw bicycles' own maps come first in the map list.
    let last_map = m.maps.last().expect("oracle instances have maps");
    Ok(match o {
        OracleCheck::Product => {
            let (a, b) = (&m.raws[0], &m.raws[1]);
            compare(canonicalize(&oracle::product(a, b)?), ops::product(&canonicalize(a), &canonicalize(b))?)
        }
        OracleCheck::ProperPushforward => {
            let a = &m.raws[0];
            compare(
                canonicalize(&oracle::proper_pushforward(last_map, a)?),
                ops::proper_pushforward(last_map, &canonicalize(a))?,
            )
        }
        OracleCheck::SmoothPushforward => {
            let a = &m.raws[0];
            compare(
                canonicalize(&oracle::smooth_pushforward(a, last_map)?),
                ops::smooth_pushforward(&canonicalize(a), last_map)?,
            )
        }
        OracleCheck::SmoothPullback => {
            let a = &m.raws[0];
            compare(
                canonicalize(&oracle::smooth_pullback(last_map, a)?),
                ops::smooth_pullback(last_map, &canonicalize(a))?,
            )
        }
        OracleCheck::ProperPullback => {
            let a = &m.raws[0];
            compare(
                canonicalize(&oracle::proper_pullback(a, last_map)?),
                ops::proper_pullback(&canonicalize(a), last_map)?,
            )
        }
        OracleCheck::Chern => {
            let a = &m.raws[0];
            let (l, mb) = (&m.bundles[m.bundles.len() - 2], &m.bundles[m.bundles.len() - 1]);
            compare(
                canonicalize(&oracle::chern_left(l, a)?),
                ops::chern_left(l, &canonicalize(a))?,
            )
            .and(|| {
                Ok(compare(
                    canonicalize(&oracle::chern_right(a, mb)?),
                    ops::chern_right(&canonicalize(a), mb)?,
                ))
            })?
        }
        OracleCheck::Whitney | OracleCheck::Tensor => {
            let (a, b) = (&m.raw_vbs[0], &m.raw_vbs[1]);
            let (raw, prod) = if o == OracleCheck::Whitney {
                (oracle::whitney_product(a, b)?, VbProduct::Whitney)
            } else {
                (oracle::tensor_product(a, b)?, VbProduct::Tensor)
            };
            let closed = prod.apply(&VbElement(canonicalize_vb(a)), &VbElement(canonicalize_vb(b)))?;
            compare(VbElement(canonicalize_vb(&raw)), closed)
        }
        OracleCheck::Cycles => {
            let (a, b) = (&m.raw_cycles[0], &m.raw_cycles[1]);
            let (ca, cb) = (raw::canonicalize(a), raw::canonicalize(b));
            let h = &m.maps[m.maps.len() - 1];
            let l = &m.bundles[m.bundles.len() - 1];
            compare(raw::canonicalize(&raw::product(a, b)?), om_product(&ca, &cb)?)
                .and(|| Ok(compare(raw::canonicalize(&raw::pullback(h, a)?), om_pullback(h, &ca)?)))?
                .and(|| Ok(compare(raw::canonicalize(&raw::orientation(l, a)?), om_orientation(l, &ca)?)))?
        }
    })
}

fn check_bilinear(p: VbProduct, m: &Materialized) -> Result<Verdict> {
    let e = |i: usize| VbElement(m.element(i).clone());
    let (a, a2, b, b2) = (e(0), e(1), e(2), e(3));
    compare(p.apply(&a.add(&a2)?, &b)?, p.apply(&a, &b)?.add(&p.apply(&a2, &b)?)?)
        .and(|| Ok(compare(p.apply(&a, &b.add(&b2)?)?, p.apply(&a, &b)?.add(&p.apply(&a, &b2)?)?)))
}

fn check_bigrading(p: VbProduct, m: &Materialized) -> Result<Verdict> {
    let (a, b) = (VbElement(m.element(0).clone()), VbElement(m.element(1).clone()));
    let ab = p.apply(&a, &b)?;
    for (m_deg, r) in a.bidegrees() {
        for (n_deg, k) in b.bidegrees() {
            let want = (m_deg + n_deg, p.rank(r, k));
            if let Some(got) = ab.bidegrees().find(|d| *d != want) {
                return Ok(Verdict::Violated {
                    lhs: format!("bidegree {got:?} in {ab}"),
                    rhs: format!("bidegree {want:?}"),
                });
            }
        }
    }
    Ok(Verdict::Holds)
}

fn build_forget(f: ForgetLaw, g: &mut Gen<'_>) {
    let x = g.space();
    let (y, mf) = g.map_from(x);
    match f {
        ForgetLaw::Product | ForgetLaw::Pushforward => {
            let (_, mg) = g.map_from(y);
            if f == ForgetLaw::Product {
                g.cycle(mf);
                g.cycle(mg);
            } else {
                let gf = g.compose(mf, mg);
                g.cycle(gf);
            }
        }
        ForgetLaw::Chern => {
            g.cycle(mf);
            g.bundle(x);
        }
    }
}

fn check_forget(f: ForgetLaw, m: &Materialized) -> Result<Verdict> {
    Ok(match f {
        ForgetLaw::Product => {
            let (a, b) = (m.cycle(0), m.cycle(1));
            compare(forget_map(&om_product(a, b)?), ops::product(&forget_map(a), &forget_map(b))?)
        }
        ForgetLaw::Pushforward => {
            let a = m.cycle(0);
            let (mf, mg) = (&m.maps[0], &m.maps[1]);
            compare(
                forget_map(&om_pushforward(mf, mg, a)?),
                ops::proper_pushforward(mf, &forget_map(a))?,
            )
        }
        ForgetLaw::Chern => {
            let a = m.cycle(0);
            let l = &m.bundles[0];
            compare(forget_map(&om_orientation(l, a)?), ops::chern_left(l, &forget_map(a))?)
        }
    })
}
