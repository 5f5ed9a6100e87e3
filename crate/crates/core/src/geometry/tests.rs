use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::test_support::{arb_bundle, arb_map, arb_map_into, arb_smooth_into, arb_space, map, space};

fn p(name: &str) -> Point {
    Point::named(name)
}

#[test]
fn space_rejects_duplicates() {
    assert_eq!(
        FiniteSpace::new([("a", 0), ("a", 1)]),
        Err(Error::DuplicatePoint(p("a")))
    );
}

#[test]
fn map_must_be_total_and_land_in_target() {
    let x = space("x", &[0, 0]);
    let y = space("y", &[0]);
    assert_eq!(
        PointMap::new(x.clone(), y.clone(), [("x0", "y0")]),
        Err(Error::NotTotal(p("x1")))
    );
    assert!(matches!(
        PointMap::new(x, y, [("x0", "y0"), ("x1", "z")]),
        Err(Error::UnknownPoint { .. })
    ));
}

#[test]
fn compose_identity_laws() {
    let x = space("x", &[0, 1]);
    let y = space("y", &[2]);
    let f = map(&x, &y, &[0, 0]);
    assert_eq!(compose(&PointMap::identity(&x), &f).unwrap(), f);
    assert_eq!(compose(&f, &PointMap::identity(&y)).unwrap(), f);
    assert_eq!(compose(&f, &f), Err(Error::Composition));
}

#[test]
fn compose_of_constant_maps() {
    let (x, y, z) = (FiniteSpace::point("x", 0), FiniteSpace::point("y", 0), FiniteSpace::point("z", 0));
    let g = compose(&map(&x, &y, &[0]), &map(&y, &z, &[0])).unwrap();
    assert_eq!(g.apply(&p("x")), Some(&p("z")));
}

#[test]
fn smooth_rel_dim_examples() {
    let x = space("x", &[0, 3]);
    assert_eq!(PointMap::identity(&x).smooth_rel_dim(), Some(0));
    let v = FiniteSpace::point("v", 2);
    let y = FiniteSpace::point("y", 1);
    assert_eq!(map(&v, &y, &[0]).smooth_rel_dim(), Some(1));
    let v2 = FiniteSpace::new([("v1", 2), ("v2", 3)]).unwrap();
    assert_eq!(map(&v2, &y, &[0, 0]).smooth_rel_dim(), None);
    let empty = FiniteSpace::empty();
    assert_eq!(map(&empty, &y, &[]).smooth_rel_dim(), Some(0));
}

#[test]
fn fiber_product_dimension_rule() {
    let v = FiniteSpace::point("v", 1);
    let y = FiniteSpace::point("y", 0);
    let w = FiniteSpace::point("w", 2);
    let sq = fiber_product(&map(&v, &y, &[0]), &map(&w, &y, &[0])).unwrap();
    let vw = Point::pair(p("v"), p("w"));
    assert_eq!(sq.space.dim(&vw), Some(3));
    assert_eq!(sq.second.smooth_rel_dim(), Some(1));
    assert_eq!(sq.first.smooth_rel_dim(), Some(2));
}

#[test]
fn fiber_product_with_identity_is_the_other_leg() {
    let y = space("y", &[0, 1]);
    let w = space("w", &[1, 2, 2]);
    let f = map(&w, &y, &[0, 1, 1]);
    let sq = fiber_product(&PointMap::identity(&y), &f).unwrap();
    assert_eq!(sq.space.len(), w.len());
    for (q, d) in sq.space.iter() {
        let (a, b) = q.as_pair().unwrap();
        assert_eq!(f.apply(b), Some(a));
        assert_eq!(w.dim(b), Some(d));
    }
}

#[test]
fn fiber_product_of_disjoint_images_is_empty() {
    let y = space("y", &[0, 0]);
    let v = FiniteSpace::point("v", 0);
    let w = FiniteSpace::point("w", 0);
    let sq = fiber_product(&map(&v, &y, &[0]), &map(&w, &y, &[1])).unwrap();
    assert!(sq.space.is_empty());
    assert_eq!(
        fiber_product(&map(&v, &y, &[0]), &PointMap::identity(&v)).map(|s| s.space),
        Err(Error::TargetMismatch)
    );
}

#[test]
fn disjoint_union_examples() {
    let a = space("a", &[0, 1]);
    let b = space("b", &[2, 3, 4]);
    assert_eq!(disjoint_union(&a, &b).len(), 5);
    let u = disjoint_union(&a, &FiniteSpace::empty());
    assert_eq!(u.len(), 2);
    assert_eq!(u.dim(&Point::left(p("a1"))), Some(1));

    let l = LineBundle::constant(&a, Label(1, 0));
    let m = LineBundle::constant(&b, Label(0, 1));
    let lm = l.disjoint_union(&m);
    assert_eq!(lm.pullback(&inl(&a, &b)).unwrap(), l);
    assert_eq!(lm.pullback(&inr(&a, &b)).unwrap(), m);
}

#[test]
fn bundle_pullback_examples() {
    let v = FiniteSpace::new([("v1", 0), ("v2", 1)]).unwrap();
    let y = FiniteSpace::point("y", 0);
    let f = map(&v, &y, &[0, 0]);
    let l = LineBundle::new(y.clone(), [("y", Label(0, 3))]).unwrap();
    let pulled = l.pullback(&f).unwrap();
    assert_eq!(pulled.value(&p("v1")), Some(Label(0, 3)));
    assert_eq!(pulled.value(&p("v2")), Some(Label(0, 3)));
    assert_eq!(l.pullback(&PointMap::identity(&y)).unwrap(), l);
    assert_eq!(
        LineBundle::constant(&y, Label(1, 0)).pullback(&f).unwrap(),
        LineBundle::constant(&v, Label(1, 0))
    );
    assert_eq!(l.pullback(&PointMap::identity(&v)), Err(Error::BaseMismatch));
}

#[test]
fn vector_bundle_sum_and_tensor_ranks() {
    let x = FiniteSpace::point("x", 0);
    let e = VBundle::new(x.clone(), 1, [("x", Labels::singleton(Label(1, 0)))]).unwrap();
    let f = VBundle::new(
        x.clone(),
        2,
        [("x", Labels::from_iter([Label(0, 1), Label(2, 2)]))],
    )
    .unwrap();
    assert_eq!(e.whitney_sum(&f).unwrap().rank(), 3);
    let t = e.tensor(&f).unwrap();
    assert_eq!(t.rank(), 2);
    assert_eq!(t.value(&p("x")), Some(&Labels::from_iter([Label(1, 1), Label(3, 2)])));
    assert!(matches!(
        VBundle::new(x, 2, [("x", Labels::singleton(Label(0, 0)))]),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn display_forms() {
    let x = FiniteSpace::new([("a", 0), ("b", -1)]).unwrap();
    assert_eq!(x.to_string(), "{ a: dim 0, b: dim -1 }");
    assert_eq!(Point::pair(p("a"), Point::left(p("b"))).to_string(), "<a,inl(b)>");
}

/// Pairs `(v, w)` with equal images, found by scanning all pairs.
fn brute_force_pairs(a: &PointMap, b: &PointMap) -> BTreeMap<(Point, Point), i64> {
    let mut out = BTreeMap::new();
    for (v, dv) in a.source().iter() {
        for (w, dw) in b.source().iter() {
            let (ya, yb) = (a.apply(v).unwrap(), b.apply(w).unwrap());
            if ya == yb {
                out.insert((v.clone(), w.clone()), dv + dw - a.target().dim(ya).unwrap());
            }
        }
    }
    out
}

fn pairs_of(sq: &FiberSquare) -> BTreeMap<(Point, Point), i64> {
    sq.space
        .iter()
        .map(|(q, d)| {
            let (v, w) = q.as_pair().unwrap();
            assert_eq!(sq.first.apply(q), Some(v));
            assert_eq!(sq.second.apply(q), Some(w));
            ((v.clone(), w.clone()), d)
        })
        .collect()
}

fn two_legs() -> impl Strategy<Value = (PointMap, PointMap)> {
    arb_space("y", 4).prop_flat_map(|y| (arb_map_into("v", &y, 4), arb_map_into("w", &y, 4)))
}

fn three_legs() -> impl Strategy<Value = (PointMap, PointMap, PointMap)> {
    arb_space("y", 3).prop_flat_map(|y| {
        (arb_map_into("u", &y, 3), arb_map_into("v", &y, 3), arb_map_into("w", &y, 3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn base_change_preserves_smoothness(
        (s, q) in arb_space("y", 4).prop_flat_map(|y| (arb_smooth_into("v", &y, 4), arb_map_into("w", &y, 4)))
    ) {
        let d = s.smooth_rel_dim().unwrap();
        let sq = fiber_product(&s, &q).unwrap();
        let expected = if sq.space.is_empty() { 0 } else { d };
        prop_assert_eq!(sq.second.smooth_rel_dim(), Some(expected));
        let sq = fiber_product(&q, &s).unwrap();
        prop_assert_eq!(sq.first.smooth_rel_dim(), Some(expected));
    }
}

proptest! {
    #[test]
    fn fiber_product_matches_pair_scan((a, b) in two_legs()) {
        prop_assert_eq!(pairs_of(&fiber_product(&a, &b).unwrap()), brute_force_pairs(&a, &b));
    }

    #[test]
    fn fiber_product_is_commutative((a, b) in two_legs()) {
        let ab = pairs_of(&fiber_product(&a, &b).unwrap());
        let ba: BTreeMap<_, _> = pairs_of(&fiber_product(&b, &a).unwrap())
            .into_iter()
            .map(|((w, v), d)| ((v, w), d))
            .collect();
        prop_assert_eq!(ab, ba);
    }

    #[test]
    fn fiber_product_is_associative((a, b, c) in three_legs()) {
        let ab = fiber_product(&a, &b).unwrap();
        let left = fiber_product(&compose(&ab.first, &a).unwrap(), &c).unwrap();
        let bc = fiber_product(&b, &c).unwrap();
        let right = fiber_product(&a, &compose(&bc.first, &b).unwrap()).unwrap();
        let flatten_left: BTreeMap<_, _> = left.space.iter().map(|(q, d)| {
            let (uv, w) = q.as_pair().unwrap();
            let (u, v) = uv.as_pair().unwrap();
            ((u.clone(), v.clone(), w.clone()), d)
        }).collect();
        let flatten_right: BTreeMap<_, _> = right.space.iter().map(|(q, d)| {
            let (u, vw) = q.as_pair().unwrap();
            let (v, w) = vw.as_pair().unwrap();
            ((u.clone(), v.clone(), w.clone()), d)
        }).collect();
        prop_assert_eq!(flatten_left, flatten_right);
    }

    #[test]
    fn bundle_pullback_is_functorial(
        (f, g, l) in arb_space("z", 3)
            .prop_flat_map(|z| (arb_map_into("y", &z, 4), arb_bundle(&z)))
            .prop_flat_map(|(g, l)| (arb_map_into("x", g.source(), 4), Just(g), Just(l)))
    ) {
        let gf = compose(&f, &g).unwrap();
        prop_assert_eq!(l.pullback(&gf).unwrap(), l.pullback(&g).unwrap().pullback(&f).unwrap());
    }

    #[test]
    fn composition_is_associative(
        (f, g, h) in arb_space("w", 3)
            .prop_flat_map(|w| arb_map_into("z", &w, 3))
            .prop_flat_map(|h| (arb_map_into("y", h.source(), 3), Just(h)))
            .prop_flat_map(|(g, h)| (arb_map_into("x", g.source(), 3), Just(g), Just(h)))
    ) {
        let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
        let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn restriction_of_bundle_unions(
        (a, b) in (arb_space("a", 4), arb_space("b", 4))
            .prop_flat_map(|(a, b)| (arb_bundle(&a), arb_bundle(&b)))
    ) {
        let (x, y) = (a.base(), b.base());
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.pullback(&inl(x, y)).unwrap(), a.clone());
        prop_assert_eq!(u.pullback(&inr(x, y)).unwrap(), b.clone());
        let whole = copair(&inl(x, y), &inr(x, y)).unwrap();
        prop_assert_eq!(whole, PointMap::identity(&disjoint_union(x, y)));
    }

    #[test]
    fn maps_between_fixed_spaces_are_total(
        (f, x) in (arb_space("x", 5), arb_space("y", 5)).prop_flat_map(|(x, y)| (arb_map(&x, &y), Just(x)))
    ) {
        for q in x.points() {
            prop_assert!(f.apply(q).is_some());
        }
    }
}
