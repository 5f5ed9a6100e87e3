//! Deterministic inputs for the benchmarks.

use bicycles_core::harness::{Gen, Materialized, TrialConfig};
use bicycles_core::{GroupElement, RawBicycle};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn materialize(seed: u64, max_points: usize, build: impl FnOnce(&mut Gen<'_>)) -> Materialized {
    let cfg = TrialConfig::default().with_max_points(max_points);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Gen::new(&mut rng, &cfg);
    build(&mut g);
    g.finish().materialize().expect("generated instances are valid")
}

/// A composable pair `(a, b)` with `a: X -> Y` and `b: Y -> Z`.
pub fn product_pair(seed: u64, max_points: usize) -> (GroupElement, GroupElement) {
    let m = materialize(seed, max_points, |g| {
        let (x, y, z) = (g.space(), g.space(), g.space());
        g.element(x, y);
        g.element(y, z);
    });
    (m.element(0).clone(), m.element(1).clone())
}

/// A representative bicycle on a source of up to `max_points` points.
pub fn raw_bicycle(seed: u64, max_points: usize) -> RawBicycle {
    let mut m = materialize(seed, max_points, |g| {
        let (x, y) = (g.space(), g.space());
        g.raw(x, y);
    });
    m.raws.pop().expect("one raw bicycle")
}

/// Composable representatives `(a, b)` with `a: X -> Y` and `b: Y -> Z`.
pub fn raw_pair(seed: u64, max_points: usize) -> (RawBicycle, RawBicycle) {
    let mut m = materialize(seed, max_points, |g| {
        let (x, y, z) = (g.space(), g.space(), g.space());
        g.raw(x, y);
        g.raw(y, z);
    });
    let b = m.raws.pop().expect("two raw bicycles");
    (m.raws.pop().expect("two raw bicycles"), b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(product_pair(3, 4), product_pair(3, 4));
        assert_eq!(raw_bicycle(3, 6), raw_bicycle(3, 6));
        let (a, b) = product_pair(5, 6);
        assert_eq!(a.tgt(), b.src());
        let (p, q) = raw_pair(5, 6);
        assert_eq!(p.y_space(), q.x_space());
    }
}
