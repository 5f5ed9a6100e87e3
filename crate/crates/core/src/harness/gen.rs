//! Random instance construction.

use std::collections::BTreeMap;

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::config::TrialConfig;
use super::instance::{
    BundleSpec, ElemKind, ElemSpec, Instance, MapSpec, RawCycleSpec, RawSpec, RawVbSpec, Term,
    VBundleSpec,
};
use crate::geometry::{Label, Labels, Point};

/// Relative dimensions drawn for generated smooth maps.
const REL_DIMS: std::ops::RangeInclusive<i64> = -1..=2;
const MAX_TERMS: usize = 4;
const MAX_COEFF: i64 = 3;

pub struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    cfg: &'a TrialConfig,
    pub inst: Instance,
}

impl<'a> Gen<'a> {
    pub fn new(rng: &'a mut ChaCha8Rng, cfg: &'a TrialConfig) -> Self {
        Gen {
            rng,
            cfg,
            inst: Instance::default(),
        }
    }

    pub fn finish(self) -> Instance {
        self.inst
    }

    fn prefix(&self) -> char {
        let i = self.inst.spaces.len();
        assert!(i < 26, "too many spaces in one instance");
        (b'a' + i as u8) as char
    }

    fn dim(&mut self) -> i64 {
        self.rng.random_range(self.cfg.dim_range.0..=self.cfg.dim_range.1)
    }

    pub fn label(&mut self) -> Label {
        let b = self.cfg.label_bound;
        Label(self.rng.random_range(-b..=b), self.rng.random_range(-b..=b))
    }

    fn labels(&mut self, n: usize) -> Labels {
        (0..n).map(|_| self.label()).collect()
    }

    fn rank(&mut self) -> usize {
        self.rng.random_range(0..=self.cfg.max_rank)
    }

    fn points(&self, s: usize) -> Vec<Point> {
        self.inst.spaces[s].keys().cloned().collect()
    }

    fn push_space(&mut self, dims: Vec<i64>) -> usize {
        let prefix = self.prefix();
        let space = dims
            .into_iter()
            .enumerate()
            .map(|(i, d)| (Point::named(&format!("{prefix}{i}")), d))
            .collect();
        self.inst.spaces.push(space);
        self.inst.spaces.len() - 1
    }

    /// A space with `1..=max_points` points of random dimension.
    pub fn space(&mut self) -> usize {
        let n = self.rng.random_range(1..=self.cfg.max_points);
        let dims = (0..n).map(|_| self.dim()).collect();
        self.push_space(dims)
    }

    fn push_map(&mut self, src: usize, tgt: usize, graph: BTreeMap<Point, Point>) -> usize {
        self.inst.maps.push(MapSpec { src, tgt, graph });
        self.inst.maps.len() - 1
    }

    /// A random map between existing spaces.
    pub fn map(&mut self, src: usize, tgt: usize) -> usize {
        let targets = self.points(tgt);
        let graph = self
            .points(src)
            .into_iter()
            .map(|p| (p, targets.choose(self.rng).expect("target is non-empty").clone()))
            .collect();
        self.push_map(src, tgt, graph)
    }

    /// A new space with a random map into `tgt`; returns `(space, map)`.
    pub fn map_into(&mut self, tgt: usize) -> (usize, usize) {
        let src = self.space();
        (src, self.map(src, tgt))
    }

    /// A new space with a random map out of `src`; returns `(space, map)`.
    pub fn map_from(&mut self, src: usize) -> (usize, usize) {
        let tgt = self.space();
        (tgt, self.map(src, tgt))
    }

    /// A new space with a smooth map into `tgt`; returns `(space, map)`.
    pub fn smooth_into(&mut self, tgt: usize) -> (usize, usize) {
        let rel = self.rng.random_range(REL_DIMS);
        let targets: Vec<(Point, i64)> = self.inst.spaces[tgt].iter().map(|(p, d)| (p.clone(), *d)).collect();
        let n = self.rng.random_range(1..=self.cfg.max_points);
        let images: Vec<(Point, i64)> = (0..n).map(|_| targets.choose(self.rng).expect("target is non-empty").clone()).collect();
        let src = self.push_space(images.iter().map(|(_, d)| d + rel).collect());
        let graph = self.points(src).into_iter().zip(images.into_iter().map(|(p, _)| p)).collect();
        (src, self.push_map(src, tgt, graph))
    }

    /// A new space with a smooth map out of `src`; returns `(space, map)`.
    pub fn smooth_from(&mut self, src: usize) -> (usize, usize) {
        let rel = self.rng.random_range(REL_DIMS);
        let sources: Vec<(Point, i64)> = self.inst.spaces[src].iter().map(|(p, d)| (p.clone(), *d)).collect();
        // Points of equal dimension may share an image; each point can also get its own.
        let mut dims: Vec<i64> = Vec::new();
        let mut graph = BTreeMap::new();
        let mut images: Vec<usize> = Vec::new();
        for (p, d) in &sources {
            let reuse: Vec<usize> = images.iter().copied().filter(|&i| dims[i] == d - rel).collect();
            let i = match reuse.choose(self.rng) {
                Some(&i) if self.rng.random_bool(0.5) => i,
                _ => {
                    dims.push(d - rel);
                    dims.len() - 1
                }
            };
            images.push(i);
            graph.insert(p.clone(), i);
        }
        let extra = self.rng.random_range(0..=1);
        for _ in 0..extra {
            let d = self.dim();
            dims.push(d);
        }
        let tgt = self.push_space(dims);
        let names = self.points(tgt);
        let graph = graph.into_iter().map(|(p, i)| (p, names[i].clone())).collect();
        (tgt, self.push_map(src, tgt, graph))
    }

    /// Records `g ∘ f` as a new map.
    pub fn compose(&mut self, f: usize, g: usize) -> usize {
        let (fm, gm) = (&self.inst.maps[f], &self.inst.maps[g]);
        assert_eq!(fm.tgt, gm.src);
        let graph = fm.graph.iter().map(|(a, b)| (a.clone(), gm.graph[b].clone())).collect();
        let (src, tgt) = (fm.src, gm.tgt);
        self.push_map(src, tgt, graph)
    }

    pub fn bundle(&mut self, base: usize) -> usize {
        let values = self
            .points(base)
            .into_iter()
            .map(|p| (p, self.label()))
            .collect();
        self.inst.bundles.push(BundleSpec { base, values });
        self.inst.bundles.len() - 1
    }

    pub fn vbundle(&mut self, base: usize) -> usize {
        let rank = self.rank();
        let values = self
            .points(base)
            .into_iter()
            .map(|p| (p, self.labels(rank)))
            .collect();
        self.inst.vbundles.push(VBundleSpec { base, rank, values });
        self.inst.vbundles.len() - 1
    }

    fn term(&mut self, x: Point, y: Option<Point>, coeff: i64) -> Term {
        let rank = self.rank();
        Term {
            x,
            y,
            d: self.dim(),
            labels: self.labels(rank),
            coeff,
        }
    }

    fn coeff(&mut self) -> i64 {
        let c = self.rng.random_range(1..=MAX_COEFF);
        if self.rng.random_bool(0.5) {
            -c
        } else {
            c
        }
    }

    fn push_element(&mut self, kind: ElemKind, terms: Vec<Term>) -> usize {
        self.inst.elements.push(ElemSpec { kind, terms });
        self.inst.elements.len() - 1
    }

    /// A random element of `Z(src, tgt)` with up to a few terms.
    pub fn element(&mut self, src: usize, tgt: usize) -> usize {
        let (xs, ys) = (self.points(src), self.points(tgt));
        let n = self.rng.random_range(1..=MAX_TERMS);
        let terms = (0..n)
            .map(|_| {
                let x = xs.choose(self.rng).expect("non-empty").clone();
                let y = ys.choose(self.rng).expect("non-empty").clone();
                let c = self.coeff();
                self.term(x, Some(y), c)
            })
            .collect();
        self.push_element(ElemKind::Bicycle { src, tgt }, terms)
    }

    /// A single generator of `Z(src, tgt)`, optionally starting at a fixed point.
    pub fn generator(&mut self, src: usize, tgt: usize, x: Option<Point>) -> usize {
        let x = x.unwrap_or_else(|| self.points(src).choose(self.rng).expect("non-empty").clone());
        let y = self.points(tgt).choose(self.rng).expect("non-empty").clone();
        let t = self.term(x, Some(y), 1);
        self.push_element(ElemKind::Bicycle { src, tgt }, vec![t])
    }

    /// A random cycle over the structure map `over`.
    pub fn cycle(&mut self, over: usize) -> usize {
        let src = self.inst.maps[over].src;
        let xs = self.points(src);
        let n = self.rng.random_range(1..=MAX_TERMS);
        let terms = (0..n)
            .map(|_| {
                let x = xs.choose(self.rng).expect("non-empty").clone();
                let c = self.coeff();
                self.term(x, None, c)
            })
            .collect();
        self.push_element(ElemKind::Cycle { over }, terms)
    }

    /// A representative bicycle from `x` to `y` on a fresh source space.
    pub fn raw(&mut self, x: usize, y: usize) -> usize {
        let (v, p) = self.map_into(x);
        let s = self.map(v, y);
        let bundles = (0..self.rank()).map(|_| self.bundle(v)).collect();
        self.inst.raws.push(RawSpec { p, s, bundles });
        self.inst.raws.len() - 1
    }

    /// A representative vector-bundle bicycle from `x` to `y`.
    pub fn raw_vb(&mut self, x: usize, y: usize) -> usize {
        let (v, p) = self.map_into(x);
        let s = self.map(v, y);
        let bundle = self.vbundle(v);
        self.inst.raw_vbs.push(RawVbSpec { p, s, bundle });
        self.inst.raw_vbs.len() - 1
    }

    /// A representative cycle over the structure map `structure`.
    pub fn raw_cycle(&mut self, structure: usize) -> usize {
        let x = self.inst.maps[structure].src;
        let (v, h) = self.map_into(x);
        let bundles = (0..self.rank()).map(|_| self.bundle(v)).collect();
        self.inst.raw_cycles.push(RawCycleSpec { h, structure, bundles });
        self.inst.raw_cycles.len() - 1
    }

    /// The `x` point of the first term of element `e`.
    pub fn first_target(&self, e: usize) -> Option<Point> {
        self.inst.elements[e].terms.first().and_then(|t| t.y.clone())
    }
}
