//! Axiom instances as plain data: spaces plus index-based references to them,
//! so the shrinker can delete points and keep every map, bundle and element
//! consistent.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{FiniteSpace, Label, Labels, LineBundle, Point, PointMap, VBundle};
use crate::group::{CanonicalGenerator, GroupElement, RawBicycle, RawVbBicycle};
use crate::theory::oriented::raw::RawCycle;
use crate::theory::{OmElement, OmGenerator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapSpec {
    pub src: usize,
    pub tgt: usize,
    pub graph: BTreeMap<Point, Point>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BundleSpec {
    pub base: usize,
    pub values: BTreeMap<Point, Label>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VBundleSpec {
    pub base: usize,
    pub rank: usize,
    pub values: BTreeMap<Point, Labels>,
}

/// Where the terms of an element live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ElemKind {
    /// A bicycle class in `Z(src, tgt)`.
    Bicycle { src: usize, tgt: usize },
    /// A cycle class over the structure map with the given index; `y` unused.
    Cycle { over: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub x: Point,
    pub y: Option<Point>,
    pub d: i64,
    pub labels: Labels,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElemSpec {
    pub kind: ElemKind,
    pub terms: Vec<Term>,
}

/// A representative bicycle `V -p-> X`, `V -s-> Y` with line bundles on `V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawSpec {
    pub p: usize,
    pub s: usize,
    pub bundles: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawVbSpec {
    pub p: usize,
    pub s: usize,
    pub bundle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawCycleSpec {
    pub h: usize,
    pub structure: usize,
    pub bundles: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub spaces: Vec<BTreeMap<Point, i64>>,
    pub maps: Vec<MapSpec>,
    pub bundles: Vec<BundleSpec>,
    pub vbundles: Vec<VBundleSpec>,
    pub elements: Vec<ElemSpec>,
    pub raws: Vec<RawSpec>,
    pub raw_vbs: Vec<RawVbSpec>,
    pub raw_cycles: Vec<RawCycleSpec>,
}

/// An instance turned into model values.
#[derive(Clone, Debug)]
pub struct Materialized {
    pub spaces: Vec<FiniteSpace>,
    pub maps: Vec<PointMap>,
    pub bundles: Vec<LineBundle>,
    pub vbundles: Vec<VBundle>,
    elements: Vec<Materialed>,
    pub raws: Vec<RawBicycle>,
    pub raw_vbs: Vec<RawVbBicycle>,
    pub raw_cycles: Vec<RawCycle>,
}

#[derive(Clone, Debug)]
enum Materialed {
    Bicycle(GroupElement),
    Cycle(OmElement),
}

impl Materialized {
    /// # Panics
    /// If element `i` is a cycle.
    pub fn element(&self, i: usize) -> &GroupElement {
        match &self.elements[i] {
            Materialed::Bicycle(e) => e,
            Materialed::Cycle(_) => panic!("element {i} is a cycle"),
        }
    }

    /// # Panics
    /// If element `i` is a bicycle.
    pub fn cycle(&self, i: usize) -> &OmElement {
        match &self.elements[i] {
            Materialed::Cycle(e) => e,
            Materialed::Bicycle(_) => panic!("element {i} is a bicycle"),
        }
    }
}

impl Instance {
    pub fn total_points(&self) -> usize {
        self.spaces.iter().map(BTreeMap::len).sum()
    }

    pub fn largest_space(&self) -> usize {
        self.spaces.iter().map(BTreeMap::len).max().unwrap_or(0)
    }

    pub fn materialize(&self) -> Result<Materialized> {
        let spaces: Vec<FiniteSpace> = self
            .spaces
            .iter()
            .map(|s| FiniteSpace::new(s.iter().map(|(p, d)| (p.clone(), *d))))
            .collect::<Result<_>>()?;
        let maps: Vec<PointMap> = self
            .maps
            .iter()
            .map(|m| {
                PointMap::new(
                    spaces[m.src].clone(),
                    spaces[m.tgt].clone(),
                    m.graph.iter().map(|(a, b)| (a.clone(), b.clone())),
                )
            })
            .collect::<Result<_>>()?;
        let bundles: Vec<LineBundle> = self
            .bundles
            .iter()
            .map(|b| LineBundle::new(spaces[b.base].clone(), b.values.iter().map(|(p, l)| (p.clone(), *l))))
            .collect::<Result<_>>()?;
        let vbundles: Vec<VBundle> = self
            .vbundles
            .iter()
            .map(|b| {
                VBundle::new(
                    spaces[b.base].clone(),
                    b.rank,
                    b.values.iter().map(|(p, l)| (p.clone(), l.clone())),
                )
            })
            .collect::<Result<_>>()?;
        let elements = self
            .elements
            .iter()
            .map(|e| match e.kind {
                ElemKind::Bicycle { src, tgt } => {
                    let terms = e
                        .terms
                        .iter()
                        .map(|t| {
                            let y = t
                                .y
                                .clone()
                                .ok_or_else(|| Error::Theory(format!("bicycle term at {} has no target point", t.x)))?;
                            Ok((CanonicalGenerator::new(t.x.clone(), y, t.d, t.labels.clone()), t.coeff))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    GroupElement::from_terms(&spaces[src], &spaces[tgt], terms).map(Materialed::Bicycle)
                }
                ElemKind::Cycle { over } => OmElement::from_terms(
                    &maps[over],
                    e.terms.iter().map(|t| {
                        (
                            OmGenerator {
                                x: t.x.clone(),
                                d: t.d,
                                labels: t.labels.clone(),
                            },
                            t.coeff,
                        )
                    }),
                )
                .map(Materialed::Cycle),
            })
            .collect::<Result<_>>()?;
        let raws = self
            .raws
            .iter()
            .map(|r| {
                RawBicycle::new(
                    maps[r.p].clone(),
                    maps[r.s].clone(),
                    r.bundles.iter().map(|&b| bundles[b].clone()).collect(),
                )
            })
            .collect::<Result<_>>()?;
        let raw_vbs = self
            .raw_vbs
            .iter()
            .map(|r| RawVbBicycle::new(maps[r.p].clone(), maps[r.s].clone(), vbundles[r.bundle].clone()))
            .collect::<Result<_>>()?;
        let raw_cycles = self
            .raw_cycles
            .iter()
            .map(|r| {
                RawCycle::new(
                    maps[r.h].clone(),
                    maps[r.structure].clone(),
                    r.bundles.iter().map(|&b| bundles[b].clone()).collect(),
                )
            })
            .collect::<Result<_>>()?;
        Ok(Materialized {
            spaces,
            maps,
            bundles,
            vbundles,
            elements,
            raws,
            raw_vbs,
            raw_cycles,
        })
    }

    /// Removes a point and, transitively, every point mapped onto a removed
    /// point, along with all data that mention removed points.
    pub fn without_point(&self, space: usize, point: &Point) -> Instance {
        let mut out = self.clone();
        let mut work = vec![(space, point.clone())];
        while let Some((s, p)) = work.pop() {
            if out.spaces[s].remove(&p).is_none() {
                continue;
            }
            for m in &mut out.maps {
                if m.tgt == s {
                    for (a, _) in m.graph.iter().filter(|(_, b)| **b == p) {
                        work.push((m.src, a.clone()));
                    }
                }
                if m.src == s {
                    m.graph.remove(&p);
                }
            }
            for b in out.bundles.iter_mut().filter(|b| b.base == s) {
                b.values.remove(&p);
            }
            for b in out.vbundles.iter_mut().filter(|b| b.base == s) {
                b.values.remove(&p);
            }
            for e in &mut out.elements {
                match e.kind {
                    ElemKind::Bicycle { src, tgt } => e.terms.retain(|t| {
                        !(src == s && t.x == p) && !(tgt == s && t.y.as_ref() == Some(&p))
                    }),
                    ElemKind::Cycle { over } => {
                        if out.maps[over].src == s {
                            e.terms.retain(|t| t.x != p);
                        }
                    }
                }
            }
        }
        out
    }

    /// Smaller variants of this instance, in a fixed order.
    pub fn shrink_candidates(&self) -> Vec<Instance> {
        let mut out = Vec::new();
        for (i, s) in self.spaces.iter().enumerate() {
            for p in s.keys() {
                out.push(self.without_point(i, p));
            }
        }
        for (i, e) in self.elements.iter().enumerate() {
            for j in 0..e.terms.len() {
                let mut c = self.clone();
                c.elements[i].terms.remove(j);
                out.push(c);
            }
        }
        for (i, e) in self.elements.iter().enumerate() {
            for (j, t) in e.terms.iter().enumerate() {
                for l in t.labels.iter() {
                    let mut c = self.clone();
                    c.elements[i].terms[j].labels.remove(l);
                    out.push(c);
                }
                if t.coeff.abs() > 1 {
                    let mut c = self.clone();
                    c.elements[i].terms[j].coeff = t.coeff.signum();
                    out.push(c);
                }
            }
        }
        for (i, r) in self.raws.iter().enumerate() {
            for j in 0..r.bundles.len() {
                let mut c = self.clone();
                c.raws[i].bundles.remove(j);
                out.push(c);
            }
        }
        for (i, b) in self.bundles.iter().enumerate() {
            for (p, l) in &b.values {
                if *l != Label::ZERO {
                    let mut c = self.clone();
                    c.bundles[i].values.insert(p.clone(), Label::ZERO);
                    out.push(c);
                }
            }
        }
        out
    }
}

fn space_name(i: usize) -> String {
    format!("S{i}")
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.spaces.iter().enumerate() {
            write!(f, "space {} {{", space_name(i))?;
            for (k, (p, d)) in s.iter().enumerate() {
                write!(f, "{} {p}: dim {d}", if k == 0 { "" } else { "," })?;
            }
            writeln!(f, " }}")?;
        }
        for (i, m) in self.maps.iter().enumerate() {
            write!(f, "map m{i} : {} -> {} {{", space_name(m.src), space_name(m.tgt))?;
            for (k, (a, b)) in m.graph.iter().enumerate() {
                write!(f, "{} {a} -> {b}", if k == 0 { "" } else { "," })?;
            }
            writeln!(f, " }}")?;
        }
        for (i, b) in self.bundles.iter().enumerate() {
            write!(f, "bundle L{i} on {} {{", space_name(b.base))?;
            for (k, (p, l)) in b.values.iter().enumerate() {
                write!(f, "{} {p}: {l}", if k == 0 { "" } else { "," })?;
            }
            writeln!(f, " }}")?;
        }
        for (i, b) in self.vbundles.iter().enumerate() {
            write!(f, "vbundle E{i} on {} rank {} {{", space_name(b.base), b.rank)?;
            for (k, (p, l)) in b.values.iter().enumerate() {
                write!(f, "{} {p}: {l}", if k == 0 { "" } else { "," })?;
            }
            writeln!(f, " }}")?;
        }
        for (i, e) in self.elements.iter().enumerate() {
            match e.kind {
                ElemKind::Bicycle { src, tgt } => {
                    write!(f, "element e{i} : {} -> {} =", space_name(src), space_name(tgt))?
                }
                ElemKind::Cycle { over } => write!(f, "cycle e{i} over m{over} =")?,
            }
            if e.terms.is_empty() {
                f.write_str(" 0")?;
            }
            for (k, t) in e.terms.iter().enumerate() {
                let sep = if k == 0 { " " } else { " + " };
                match &t.y {
                    Some(y) => write!(f, "{sep}{} * ({}, {y}, {}, {})", t.coeff, t.x, t.d, t.labels)?,
                    None => write!(f, "{sep}{} * ({}, {}, {})", t.coeff, t.x, t.d, t.labels)?,
                }
            }
            writeln!(f)?;
        }
        for (i, r) in self.raws.iter().enumerate() {
            let ls: Vec<String> = r.bundles.iter().map(|b| format!("L{b}")).collect();
            writeln!(f, "bicycle r{i} = [m{} , m{}; {}]", r.p, r.s, ls.join(", "))?;
        }
        for (i, r) in self.raw_vbs.iter().enumerate() {
            writeln!(f, "vbicycle r{i} = [m{} , m{}; E{}]", r.p, r.s, r.bundle)?;
        }
        for (i, r) in self.raw_cycles.iter().enumerate() {
            let ls: Vec<String> = r.bundles.iter().map(|b| format!("L{b}")).collect();
            writeln!(f, "rcycle c{i} = [m{} over m{}; {}]", r.h, r.structure, ls.join(", "))?;
        }
        Ok(())
    }
}
