//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::geometry::{FiniteSpace, Label, Labels, LineBundle, Point, PointMap};
use crate::group::{CanonicalGenerator, GroupElement, RawBicycle};

pub fn space(prefix: &str, dims: &[i64]) -> FiniteSpace {
    FiniteSpace::new(dims.iter().enumerate().map(|(i, d)| (Point::named(&format!("{prefix}{i}")), *d)))
        .expect("distinct names")
}

pub fn map(src: &FiniteSpace, tgt: &FiniteSpace, images: &[usize]) -> PointMap {
    let targets: Vec<&Point> = tgt.points().collect();
    PointMap::new(
        src.clone(),
        tgt.clone(),
        src.points().zip(images).map(|(p, &i)| (p.clone(), targets[i].clone())),
    )
    .expect("total map")
}

fn dims(max: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=3, 1..=max)
}

pub fn arb_space(prefix: &'static str, max: usize) -> BoxedStrategy<FiniteSpace> {
    dims(max).prop_map(move |d| space(prefix, &d)).boxed()
}

/// A random map between fixed spaces; `tgt` must be non-empty.
pub fn arb_map(src: &FiniteSpace, tgt: &FiniteSpace) -> BoxedStrategy<PointMap> {
    let (src, tgt) = (src.clone(), tgt.clone());
    prop::collection::vec(0..tgt.len(), src.len())
        .prop_map(move |images| map(&src, &tgt, &images))
        .boxed()
}

/// A random map into `tgt` from a fresh space.
pub fn arb_map_into(prefix: &'static str, tgt: &FiniteSpace, max: usize) -> BoxedStrategy<PointMap> {
    let tgt = tgt.clone();
    arb_space(prefix, max).prop_flat_map(move |src| arb_map(&src, &tgt)).boxed()
}

/// A smooth map into `tgt` from a fresh space.
pub fn arb_smooth_into(prefix: &'static str, tgt: &FiniteSpace, max: usize) -> BoxedStrategy<PointMap> {
    let tgt = tgt.clone();
    (prop::collection::vec(0..tgt.len(), 1..=max), -1i64..=2)
        .prop_map(move |(images, rel)| {
            let targets: Vec<(&Point, i64)> = tgt.iter().collect();
            let src = space(prefix, &images.iter().map(|&i| targets[i].1 + rel).collect::<Vec<_>>());
            map(&src, &tgt, &images)
        })
        .boxed()
}

/// A random map from `src` to a fresh space.
pub fn arb_map_from(src: &FiniteSpace, prefix: &'static str, max: usize) -> BoxedStrategy<PointMap> {
    let src = src.clone();
    arb_space(prefix, max).prop_flat_map(move |tgt| arb_map(&src, &tgt)).boxed()
}

/// A smooth map from `src` to a fresh space. Points of equal dimension that
/// draw the same slot share an image.
pub fn arb_smooth_from(src: &FiniteSpace, prefix: &'static str) -> BoxedStrategy<PointMap> {
    let src = src.clone();
    (prop::collection::vec(0usize..2, src.len()), -1i64..=2)
        .prop_map(move |(slots, rel)| {
            let name = |d: i64, c: usize| Point::named(&format!("{prefix}{}_{c}", d - rel));
            let tgt = FiniteSpace::new(
                src.iter()
                    .zip(&slots)
                    .map(|((_, d), &c)| (name(d, c), d - rel))
                    .collect::<std::collections::BTreeMap<_, _>>(),
            )
            .expect("distinct names");
            PointMap::new(
                src.clone(),
                tgt,
                src.iter().zip(&slots).map(|((p, d), &c)| (p.clone(), name(d, c))),
            )
            .expect("total")
        })
        .boxed()
}

pub fn arb_label() -> impl Strategy<Value = Label> {
    (-2i64..=2, -2i64..=2).prop_map(|(a, b)| Label(a, b))
}

pub fn arb_labels(max_rank: usize) -> impl Strategy<Value = Labels> {
    prop::collection::vec(arb_label(), 0..=max_rank).prop_map(|v| v.into_iter().collect())
}

pub fn arb_bundle(base: &FiniteSpace) -> BoxedStrategy<LineBundle> {
    let base = base.clone();
    prop::collection::vec(arb_label(), base.len())
        .prop_map(move |ls| LineBundle::new(base.clone(), base.points().cloned().zip(ls)).expect("total"))
        .boxed()
}

pub fn arb_element(src: &FiniteSpace, tgt: &FiniteSpace) -> BoxedStrategy<GroupElement> {
    let (src, tgt) = (src.clone(), tgt.clone());
    prop::collection::vec(
        (0..src.len(), 0..tgt.len(), -2i64..=4, arb_labels(3), -3i64..=3),
        0..=4,
    )
    .prop_map(move |terms| {
        let xs: Vec<&Point> = src.points().collect();
        let ys: Vec<&Point> = tgt.points().collect();
        GroupElement::from_terms(
            &src,
            &tgt,
            terms.into_iter().map(|(x, y, d, labels, c)| {
                (CanonicalGenerator::new(xs[x].clone(), ys[y].clone(), d, labels), c)
            }),
        )
        .expect("valid terms")
    })
    .boxed()
}

/// A representative bicycle from `x` to `y` with up to `max` source points.
pub fn arb_raw(x: &FiniteSpace, y: &FiniteSpace, max: usize) -> BoxedStrategy<RawBicycle> {
    let (x, y) = (x.clone(), y.clone());
    (0usize..=3).prop_flat_map(move |r| arb_raw_with_rank(&x, &y, max, r)).boxed()
}

pub fn arb_raw_with_rank(x: &FiniteSpace, y: &FiniteSpace, max: usize, rank: usize) -> BoxedStrategy<RawBicycle> {
    let (x, y) = (x.clone(), y.clone());
    arb_space("v", max)
        .prop_flat_map(move |v| {
            (
                arb_map(&v, &x),
                arb_map(&v, &y),
                prop::collection::vec(arb_bundle(&v), rank),
            )
        })
        .prop_map(|(p, s, bundles)| RawBicycle::new(p, s, bundles).expect("shared source"))
        .boxed()
}
