mod common;

use cfk::algebra::{rank_over_fraction_field, FieldPoly, PolyMatrix};
use cfk::catalogue::{self, torus_knot_alexander};
use cfk::harness::{catalogue_complexes, random_knotlike, FuzzConfig};
use cfk::invariants::{nu, tau, upsilon_at, v_s};
use cfk::{CfkComplex, Rational};

fn small_catalogue() -> Vec<CfkComplex> {
    catalogue_complexes().into_iter().filter(|c| c.len() <= 12).collect()
}

fn fuzz(n: usize) -> Vec<CfkComplex> {
    let cfg = FuzzConfig { seed: 11, ..Default::default() };
    (0..n).filter_map(|i| random_knotlike(&cfg, i, 2000)).collect()
}

fn ts() -> Vec<Rational> {
    [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1), (5, 4), (3, 2), (7, 4), (2, 1)].iter().map(|&(p, q)| Rational::new(p, q)).collect()
}

#[test]
fn tau_and_nu_match_enumeration() {
    for c in small_catalogue().iter().chain(&fuzz(60)) {
        assert_eq!(tau(c).unwrap(), common::tau(c), "tau of {}", c.name());
        assert_eq!(nu(c).unwrap(), common::nu(c), "nu of {}", c.name());
    }
}

#[test]
fn v_s_matches_enumeration() {
    for c in small_catalogue().iter().chain(&fuzz(40)) {
        let (lo, hi) = c.alexander_range();
        for s in lo - 1..=hi + 1 {
            assert_eq!(v_s(c, s).unwrap(), common::v_s(c, s), "V_{s} of {}", c.name());
        }
    }
}

#[test]
fn upsilon_matches_filtration_oracle() {
    for c in small_catalogue().iter().chain(&fuzz(60)) {
        for t in ts() {
            assert_eq!(upsilon_at(c, t).unwrap(), common::upsilon(c, t), "Upsilon({t}) of {}", c.name());
        }
    }
}

#[test]
fn upsilon_of_figure_six_oracle_values() {
    let c = catalogue::fixture("fig6_C").unwrap();
    let r = |p, q| Rational::new(p, q);
    // 0, 2 - 3t, -4 + 3t, 0 on the four pieces
    for (t, v) in [(r(1, 2), r(0, 1)), (r(5, 6), r(-1, 2)), (r(7, 6), r(-1, 2)), (r(3, 2), r(0, 1))] {
        assert_eq!(common::upsilon(&c, t), v, "oracle at {t}");
    }
}

#[test]
fn torus_polynomials_match_semigroup_formula() {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 9), (5, 7)] {
        assert_eq!(torus_knot_alexander(p, q).unwrap(), common::torus_alexander(p, q), "T({p},{q})");
    }
}

#[test]
fn figure_eight_differential_rank() {
    let c = catalogue::figure_eight();
    let mut dense = vec![vec![0u8; c.len()]; c.len()];
    let mut m = PolyMatrix::zeros(c.len(), c.len());
    for a in c.arrows() {
        dense[a.to][a.from] = 1;
        m.set(a.to, a.from, FieldPoly::one());
    }
    assert_eq!(common::dense_rank(dense), 2);
    assert_eq!(rank_over_fraction_field(&m), 2);
}
