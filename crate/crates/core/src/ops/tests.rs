use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::geometry::{FiniteSpace, Label, Labels, LineBundle, PointMap, VBundle};
use crate::group::{canonicalize, canonicalize_vb, CanonicalGenerator, GroupElement, RawBicycle, RawVbBicycle};
use crate::test_support::{
    arb_bundle, arb_element, arb_map_from, arb_map_into, arb_raw, arb_smooth_from, arb_smooth_into, arb_space, map,
    space,
};
use crate::theory::CobordismBicycles;

fn labels(ls: &[(i64, i64)]) -> Labels {
    ls.iter().map(|&(a, b)| Label(a, b)).collect()
}

fn gen(x: &str, y: &str, d: i64, ls: &[(i64, i64)]) -> CanonicalGenerator {
    CanonicalGenerator::new(x, y, d, labels(ls))
}

fn element(src: &FiniteSpace, tgt: &FiniteSpace, terms: &[(CanonicalGenerator, i64)]) -> GroupElement {
    GroupElement::from_terms(src, tgt, terms.iter().cloned()).unwrap()
}

/// `[X <- {v} -> Y; L_1..L_r]` for one point.
fn single(x: &FiniteSpace, y: &FiniteSpace, g: &CanonicalGenerator) -> RawBicycle {
    let v = FiniteSpace::point("v", g.d);
    let bundles = g.labels.iter().map(|l| LineBundle::constant(&v, *l)).collect();
    RawBicycle::new(
        PointMap::constant(&v, x, &g.x).unwrap(),
        PointMap::constant(&v, y, &g.y).unwrap(),
        bundles,
    )
    .unwrap()
}

#[test]
fn product_of_singletons() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 0);
    let z = FiniteSpace::point("z", 0);
    let a = single(&x, &y, &gen("x", "y", 1, &[(1, 0)]));
    let b = single(&y, &z, &gen("y", "z", 0, &[]));
    let via_oracle = canonicalize(&oracle::product(&a, &b).unwrap());
    assert_eq!(via_oracle.to_string(), "1 * (x, z, 1, {(1,0)})");
    assert_eq!(product(&canonicalize(&a), &canonicalize(&b)).unwrap(), via_oracle);
}

#[test]
fn product_with_unit_and_mismatched_middle() {
    let x = FiniteSpace::point("x", 0);
    let y = space("y", &[2, 1]);
    let a = element(&x, &y, &[(gen("x", "y0", 3, &[(1, 1)]), 2)]);
    assert_eq!(product(&a, &unit(&y)).unwrap(), a);
    let b = element(&y, &x, &[(gen("y1", "x", 0, &[]), 1)]);
    assert!(product(&a, &b).unwrap().is_zero());
    assert_eq!(product(&a, &a), Err(Error::SpaceMismatch("product")));
}

#[test]
fn pushforward_collisions_add_coefficients() {
    let x = space("x", &[0, 0]);
    let x1 = FiniteSpace::point("p", 0);
    let y = FiniteSpace::point("y", 0);
    let v = space("v", &[1, 1]);
    let raw = RawBicycle::new(map(&v, &x, &[0, 1]), map(&v, &y, &[0, 0]), vec![]).unwrap();
    let f = map(&x, &x1, &[0, 0]);
    let via_oracle = canonicalize(&oracle::proper_pushforward(&f, &raw).unwrap());
    assert_eq!(via_oracle.to_string(), "2 * (p, y, 1, {})");
    assert_eq!(proper_pushforward(&f, &canonicalize(&raw)).unwrap(), via_oracle);
    let a = canonicalize(&raw);
    assert_eq!(proper_pushforward(&PointMap::identity(&x), &a).unwrap(), a);
}

#[test]
fn smooth_pushforward_shifts_degree_by_minus_relative_dimension() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 1);
    let y1 = FiniteSpace::point("y'", 0);
    let g = map(&y, &y1, &[0]);
    let a = element(&x, &y, &[(gen("x", "y", 2, &[(0, 1)]), 1)]);
    let pushed = smooth_pushforward(&a, &g).unwrap();
    let (t, _) = pushed.terms().next().unwrap();
    // dim s grows by dim g = 1, so -i + r = dim s lowers i by one.
    assert_eq!(t.degree(&y1), a.terms().next().unwrap().0.degree(&y) - 1);
    assert_eq!(smooth_pushforward(&a, &PointMap::identity(&y)).unwrap(), a);

    let y2 = space("y", &[1, 2]);
    let not_smooth = map(&y2, &y1, &[0, 0]);
    let b = element(&x, &y2, &[]);
    assert_eq!(smooth_pushforward(&b, &not_smooth), Err(Error::NotSmooth));
}

#[test]
fn smooth_pullback_over_two_point_fiber() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 0);
    let x1 = space("u", &[1, 1]);
    let f = map(&x1, &x, &[0, 0]);
    let g = gen("x", "y", 2, &[(1, 0)]);
    let via_oracle = canonicalize(&oracle::smooth_pullback(&f, &single(&x, &y, &g)).unwrap());
    assert_eq!(via_oracle.to_string(), "1 * (u0, y, 3, {(1,0)}) + 1 * (u1, y, 3, {(1,0)})");
    let a = element(&x, &y, &[(g, 1)]);
    assert_eq!(smooth_pullback(&f, &a).unwrap(), via_oracle);
    assert_eq!(smooth_pullback(&PointMap::identity(&x), &a).unwrap(), a);

    let x2 = space("w", &[1]);
    let x3 = space("x", &[0, 0]);
    let empty_fiber = map(&x2, &x3, &[0]);
    let b = element(&x3, &y, &[(gen("x1", "y", 0, &[]), 1)]);
    assert!(smooth_pullback(&empty_fiber, &b).unwrap().is_zero());
}

#[test]
fn proper_pullback_over_two_point_fiber() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 1);
    let y1 = space("t", &[1, 3]);
    let g = map(&y1, &y, &[0, 0]);
    let gg = gen("x", "y", 2, &[]);
    let via_oracle = canonicalize(&oracle::proper_pullback(&single(&x, &y, &gg), &g).unwrap());
    assert_eq!(via_oracle.to_string(), "1 * (x, t0, 2, {}) + 1 * (x, t1, 4, {})");
    let a = element(&x, &y, &[(gg, 1)]);
    let pulled = proper_pullback(&a, &g).unwrap();
    assert_eq!(pulled, via_oracle);
    assert!(pulled.degrees().all(|d| d == a.degrees().next().unwrap()));
    assert_eq!(proper_pullback(&a, &PointMap::identity(&y)).unwrap(), a);
}

#[test]
fn chern_operators() {
    let x = space("x", &[0, 1]);
    let y = FiniteSpace::point("y", 0);
    let a = element(&x, &y, &[(gen("x1", "y", 1, &[]), 1)]);
    let trivial = chern_left(&LineBundle::trivial(&x), &a).unwrap();
    assert_eq!(trivial.to_string(), "1 * (x1, y, 1, {(0,0)})");

    let l = LineBundle::new(x.clone(), [("x0", Label(1, 2)), ("x1", Label(-1, 0))]).unwrap();
    let raw = RawBicycle::new(PointMap::identity(&x), PointMap::identity(&x), vec![l.clone()]).unwrap();
    assert_eq!(chern_left(&l, &unit(&x)).unwrap(), canonicalize(&raw));
    assert_eq!(chern_class(&l), canonicalize(&raw));

    let l2 = LineBundle::constant(&x, Label(0, 1));
    assert_eq!(
        chern_left(&l, &chern_left(&l2, &a).unwrap()).unwrap(),
        chern_left(&l2, &chern_left(&l, &a).unwrap()).unwrap()
    );
    assert_eq!(chern_left(&LineBundle::trivial(&y), &a), Err(Error::BaseMismatch));
}

#[test]
fn units() {
    assert!(unit(&FiniteSpace::empty()).is_zero());
    let x = space("x", &[0, 2]);
    assert_eq!(unit(&x).to_string(), "1 * (x0, x0, 0, {}) + 1 * (x1, x1, 2, {})");
    assert!(unit(&x).degrees().all(|d| d == 0));
}

#[test]
fn vector_bundle_products() {
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 1);
    let z = FiniteSpace::point("z", 0);
    let a = VbElement(element(&x, &y, &[(gen("x", "y", 1, &[(1, 0), (0, 1)]), 1)]));
    let b = VbElement(element(&y, &z, &[(gen("y", "z", 2, &[(1, 1), (2, 0), (0, 0)]), 1)]));
    let sum = whitney_product(&a, &b).unwrap();
    assert_eq!(sum.bidegrees().collect::<Vec<_>>(), vec![(2, 5)]);

    assert_eq!(VbProduct::Tensor.apply(&VbProduct::Tensor.unit(&x), &a).unwrap(), a);
    assert_eq!(VbProduct::Tensor.apply(&a, &VbProduct::Tensor.unit(&y)).unwrap(), a);
    assert_eq!(VbProduct::Whitney.apply(&VbProduct::Whitney.unit(&x), &a).unwrap(), a);
}

#[test]
fn tensor_of_split_bundles() {
    let (la, lb, lc) = (Label(1, 0), Label(0, 2), Label(-1, 1));
    let x = FiniteSpace::point("x", 0);
    let y = FiniteSpace::point("y", 0);
    let z = FiniteSpace::point("z", 0);
    let v = FiniteSpace::point("v", 0);
    let e = VBundle::new(v.clone(), 1, [("v", Labels::singleton(la))]).unwrap();
    let f = VBundle::new(v.clone(), 2, [("v", labels(&[(0, 2), (-1, 1)]))]).unwrap();
    let ra = RawVbBicycle::new(map(&v, &x, &[0]), map(&v, &y, &[0]), e).unwrap();
    let rb = RawVbBicycle::new(map(&v, &y, &[0]), map(&v, &z, &[0]), f).unwrap();
    let via_oracle = canonicalize_vb(&oracle::tensor_product(&ra, &rb).unwrap());
    let expected: Labels = [la + lb, la + lc].into_iter().collect();
    assert_eq!(
        via_oracle,
        element(&x, &z, &[(CanonicalGenerator::new("x", "z", 0, expected), 1)])
    );
    let closed = tensor_product(&VbElement(canonicalize_vb(&ra)), &VbElement(canonicalize_vb(&rb))).unwrap();
    assert_eq!(closed.0, via_oracle);
}

#[test]
fn normal_form_reproduces_the_generator() {
    let x = space("x", &[0, 1]);
    let y = FiniteSpace::point("y", 2);
    let g0 = gen("x1", "y", 3, &[]);
    let e0 = decompose_normal_form(&x, &y, &g0, 0).unwrap();
    assert!(matches!(&e0, Expr::SmoothPush(inner, _) if matches!(**inner, Expr::ProperPush(_, ref u) if matches!(**u, Expr::Unit(_)))));
    let g = gen("x0", "y", 1, &[(1, 0), (0, 1)]);
    let single = GroupElement::generator(&x, &y, g.clone()).unwrap();
    for j in 0..=2 {
        let value = decompose_normal_form(&x, &y, &g, j).unwrap().evaluate(&CobordismBicycles).unwrap();
        assert_eq!(value, single, "insertion index {j}");
    }
    assert!(decompose_normal_form(&x, &y, &g, 3).is_err());
}

fn source_target() -> impl Strategy<Value = (FiniteSpace, FiniteSpace)> {
    (arb_space("x", 3), arb_space("y", 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_matches_oracle(
        (a, b) in (arb_space("x", 2), arb_space("y", 2), arb_space("z", 2))
            .prop_flat_map(|(x, y, z)| (arb_raw(&x, &y, 3), arb_raw(&y, &z, 3)))
    ) {
        prop_assert_eq!(
            canonicalize(&oracle::product(&a, &b).unwrap()),
            product(&canonicalize(&a), &canonicalize(&b)).unwrap()
        );
    }

    #[test]
    fn pushforwards_match_oracle(
        (a, f, g) in source_target().prop_flat_map(|(x, y)| {
            (arb_raw(&x, &y, 3), arb_map_from(&x, "u", 3), arb_smooth_from(&y, "t"))
        })
    ) {
        prop_assert_eq!(
            canonicalize(&oracle::proper_pushforward(&f, &a).unwrap()),
            proper_pushforward(&f, &canonicalize(&a)).unwrap()
        );
        prop_assert_eq!(
            canonicalize(&oracle::smooth_pushforward(&a, &g).unwrap()),
            smooth_pushforward(&canonicalize(&a), &g).unwrap()
        );
    }

    #[test]
    fn pullbacks_match_oracle(
        (a, f, g) in source_target().prop_flat_map(|(x, y)| {
            (arb_raw(&x, &y, 3), arb_smooth_into("u", &x, 3), arb_map_into("t", &y, 3))
        })
    ) {
        prop_assert_eq!(
            canonicalize(&oracle::smooth_pullback(&f, &a).unwrap()),
            smooth_pullback(&f, &canonicalize(&a)).unwrap()
        );
        prop_assert_eq!(
            canonicalize(&oracle::proper_pullback(&a, &g).unwrap()),
            proper_pullback(&canonicalize(&a), &g).unwrap()
        );
    }

    #[test]
    fn chern_operators_match_oracle(
        (a, l, m) in source_target().prop_flat_map(|(x, y)| (arb_raw(&x, &y, 3), arb_bundle(&x), arb_bundle(&y)))
    ) {
        prop_assert_eq!(canonicalize(&oracle::chern_left(&l, &a).unwrap()), chern_left(&l, &canonicalize(&a)).unwrap());
        prop_assert_eq!(canonicalize(&oracle::chern_right(&a, &m).unwrap()), chern_right(&canonicalize(&a), &m).unwrap());
    }

    #[test]
    fn degree_is_additive(
        (a, b) in (arb_space("x", 2), arb_space("y", 1), arb_space("z", 2))
            .prop_flat_map(|(x, y, z)| (arb_element(&x, &y), arb_element(&y, &z)))
    ) {
        for (g, _) in a.terms() {
            for (h, _) in b.terms().filter(|(h, _)| h.x == g.y) {
                let single = product(
                    &GroupElement::generator(a.src(), a.tgt(), g.clone()).unwrap(),
                    &GroupElement::generator(b.src(), b.tgt(), h.clone()).unwrap(),
                ).unwrap();
                let deg: Vec<i64> = single.degrees().collect();
                prop_assert_eq!(deg, vec![g.degree(a.tgt()) + h.degree(b.tgt())]);
            }
        }
    }

    #[test]
    fn chern_operators_raise_degree_by_one(
        (a, l) in source_target().prop_flat_map(|(x, y)| (arb_element(&x, &y), arb_bundle(&x)))
    ) {
        let c = chern_left(&l, &a).unwrap();
        let mut before: Vec<i64> = a.degrees().map(|d| d + 1).collect();
        let mut after: Vec<i64> = c.degrees().collect();
        before.sort();
        after.sort();
        prop_assert_eq!(before, after);
    }
}
