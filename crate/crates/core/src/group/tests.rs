use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::geometry::{FiniteSpace, Label, Labels, LineBundle, Point, PointMap};
use crate::test_support::{arb_element, arb_raw, arb_raw_with_rank, arb_space, map, space};

fn labels(ls: &[(i64, i64)]) -> Labels {
    ls.iter().map(|&(a, b)| Label(a, b)).collect()
}

fn one_point_bicycle(dim: i64, values: &[(i64, i64)]) -> RawBicycle {
    let v = FiniteSpace::point("v", dim);
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 0);
    let bundles = values
        .iter()
        .map(|&(a, b)| LineBundle::constant(&v, Label(a, b)))
        .collect();
    RawBicycle::new(map(&v, &x, &[0]), map(&v, &y, &[0]), bundles).unwrap()
}

#[test]
fn canonicalize_empty_source_is_zero() {
    let x = space("x", &[0]);
    let empty = FiniteSpace::empty();
    let b = RawBicycle::new(map(&empty, &x, &[]), map(&empty, &x, &[]), vec![]).unwrap();
    assert!(canonicalize(&b).is_zero());
    assert_eq!(canonicalize(&b).to_string(), "0");
}

#[test]
fn canonicalize_single_point_sorts_labels() {
    let b = one_point_bicycle(1, &[(1, 0), (0, 1)]);
    assert_eq!(canonicalize(&b).to_string(), "1 * (x, y, 1, {(0,1), (1,0)})");
}

#[test]
fn canonicalize_ignores_bundle_order() {
    let a = one_point_bicycle(1, &[(1, 0), (0, 1)]);
    let b = one_point_bicycle(1, &[(0, 1), (1, 0)]);
    assert_eq!(canonicalize(&a), canonicalize(&b));
    assert!(bicycles_isomorphic(&a, &b).unwrap());
}

#[test]
fn isomorphism_examples() {
    let a = one_point_bicycle(1, &[(1, 0)]);
    assert!(bicycles_isomorphic(&a, &a).unwrap());
    let b = one_point_bicycle(2, &[(1, 0)]);
    assert!(!bicycles_isomorphic(&a, &b).unwrap());
    let c = one_point_bicycle(1, &[(1, 1)]);
    assert!(!bicycles_isomorphic(&a, &c).unwrap());
}

#[test]
fn isomorphism_search_is_bounded() {
    let x = FiniteSpace::point("x", 0);
    let v = space("v", &[0; ISO_SEARCH_LIMIT + 1]);
    let to_x = map(&v, &x, &[0; ISO_SEARCH_LIMIT + 1]);
    let b = RawBicycle::new(to_x.clone(), to_x, vec![]).unwrap();
    assert_eq!(
        bicycles_isomorphic(&b, &b),
        Err(Error::TooLarge(ISO_SEARCH_LIMIT + 1, ISO_SEARCH_LIMIT))
    );
}

#[test]
fn raw_bicycle_shape_is_checked() {
    let x = space("x", &[0]);
    let v = space("v", &[0]);
    let w = space("w", &[0]);
    assert_eq!(
        RawBicycle::new(map(&v, &x, &[0]), map(&w, &x, &[0]), vec![]),
        Err(Error::SourceMismatch)
    );
    assert_eq!(
        RawBicycle::new(map(&v, &x, &[0]), map(&v, &x, &[0]), vec![LineBundle::trivial(&w)]),
        Err(Error::BaseMismatch)
    );
}

#[test]
fn degree_examples() {
    let y = FiniteSpace::point("y", 0);
    let g = CanonicalGenerator::new("x", "y", 1, labels(&[(0, 0), (1, 1)]));
    assert_eq!(g.degree(&y), 1);
    assert_eq!(g.bidegree(&y), (1, 2));
    let unit = CanonicalGenerator::new("y", "y", 0, Labels::new());
    assert_eq!(unit.degree(&y), 0);
    let h = CanonicalGenerator::new("x", "y", 3, Labels::new());
    assert_eq!(h.degree(&y), -3);
}

#[test]
fn group_arithmetic() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 0);
    let g = GroupElement::generator(&x, &y, CanonicalGenerator::new("x", "y", 0, Labels::new())).unwrap();
    let zero = GroupElement::zero(&x, &y);
    assert_eq!(g.add(&zero).unwrap(), g);
    assert!(g.add(&g.neg()).unwrap().is_zero());
    assert_eq!(g.scale(2).sub(&g).unwrap(), g);
    assert_eq!(g.scale(0), zero);
    assert!(g.add(&GroupElement::zero(&y, &x)).is_err());
}

#[test]
fn generator_points_must_exist() {
    let x = FiniteSpace::point("x", 0);
    let bad = GroupElement::generator(&x, &x, CanonicalGenerator::new("x", "z", 0, Labels::new()));
    assert!(matches!(bad, Err(Error::UnknownPoint { .. })));
}

#[test]
fn serialization_orders_terms() {
    let x = space("x", &[0, 0]);
    let y = space("y", &[0]);
    let e = GroupElement::from_terms(
        &x,
        &y,
        [
            (CanonicalGenerator::new("x1", "y0", 0, Labels::new()), -2),
            (CanonicalGenerator::new("x0", "y0", 2, labels(&[(1, -1)])), 3),
            (CanonicalGenerator::new("x0", "y0", 1, Labels::new()), 1),
        ],
    )
    .unwrap();
    assert_eq!(
        e.to_string(),
        "1 * (x0, y0, 1, {}) + 3 * (x0, y0, 2, {(1,-1)}) + -2 * (x1, y0, 0, {})"
    );
}

/// The same bicycle with its source points renamed in a shuffled order and
/// its bundles listed in a different order.
fn relabeled(b: &RawBicycle, order: &[usize], rotate: usize) -> RawBicycle {
    let old: Vec<(Point, i64)> = b.source().iter().map(|(p, d)| (p.clone(), d)).collect();
    let renamed: Vec<Point> = (0..old.len()).map(|i| Point::named(&format!("w{}", order[i]))).collect();
    let w = FiniteSpace::new(renamed.iter().cloned().zip(old.iter().map(|(_, d)| *d))).unwrap();
    let back = PointMap::new(w.clone(), b.source().clone(), renamed.iter().cloned().zip(old.iter().map(|(p, _)| p.clone()))).unwrap();
    let p = crate::geometry::compose(&back, &b.p).unwrap();
    let s = crate::geometry::compose(&back, &b.s).unwrap();
    let mut bundles: Vec<LineBundle> = b.bundles.iter().map(|l| l.pullback(&back).unwrap()).collect();
    if !bundles.is_empty() {
        let k = rotate % bundles.len();
        bundles.rotate_left(k);
    }
    RawBicycle::new(p, s, bundles).unwrap()
}

fn arb_pair_of_raws() -> impl Strategy<Value = (RawBicycle, RawBicycle)> {
    (arb_space("x", 2), arb_space("y", 2)).prop_flat_map(|(x, y)| (arb_raw(&x, &y, 4), arb_raw(&x, &y, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn isomorphism_implies_equal_canonical_forms((a, b) in arb_pair_of_raws()) {
        if bicycles_isomorphic(&a, &b).unwrap() {
            prop_assert_eq!(canonicalize(&a), canonicalize(&b));
        }
    }

    #[test]
    fn relabeled_bicycles_are_isomorphic(
        (b, order, rotate) in (arb_space("x", 3), arb_space("y", 3))
            .prop_flat_map(|(x, y)| arb_raw(&x, &y, 4))
            .prop_flat_map(|b| {
                let n = b.source().len();
                (Just(b), Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 0usize..3)
            })
    ) {
        let c = relabeled(&b, &order, rotate);
        prop_assert!(bicycles_isomorphic(&b, &c).unwrap());
        prop_assert_eq!(canonicalize(&b), canonicalize(&c));
    }

    #[test]
    fn canonicalize_is_additive(
        (a, b) in (arb_space("x", 2), arb_space("y", 2), 0usize..=3)
            .prop_flat_map(|(x, y, r)| (arb_raw_with_rank(&x, &y, 4, r), arb_raw_with_rank(&x, &y, 4, r)))
    ) {
        let sum = canonicalize(&a.disjoint_union(&b).unwrap());
        prop_assert_eq!(sum, canonicalize(&a).add(&canonicalize(&b)).unwrap());
    }

    #[test]
    fn homogeneous_slices_sum_to_the_element(
        e in (arb_space("x", 3), arb_space("y", 3)).prop_flat_map(|(x, y)| arb_element(&x, &y))
    ) {
        let mut total = GroupElement::zero(e.src(), e.tgt());
        let mut degrees: Vec<i64> = e.degrees().collect();
        degrees.sort();
        degrees.dedup();
        for i in degrees {
            let slice = e.homogeneous(i);
            prop_assert!(slice.degrees().all(|d| d == i));
            total = total.add(&slice).unwrap();
        }
        prop_assert_eq!(total, e);
    }

    #[test]
    fn group_laws(
        (a, b) in (arb_space("x", 3), arb_space("y", 3)).prop_flat_map(|(x, y)| (arb_element(&x, &y), arb_element(&x, &y)))
    ) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.scale(3), a.add(&a).unwrap().add(&a).unwrap());
        prop_assert!(a.terms().all(|(_, c)| c != 0));
    }
}
