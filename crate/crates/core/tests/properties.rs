use std::collections::BTreeMap;

use proptest::prelude::*;

use cfk::catalogue::{self, staircase_from_alexander, thin_complex, LaurentPoly};
use cfk::harness::{random_knotlike, FuzzConfig};
use cfk::invariants::{
    alexander_poly, vs_duality_check, epsilon, genus, hfk_hat, nu, nu_minus, tau, upsilon_at, v_s,
};
use cfk::region::{region_complex, Region};
use cfk::{reduce, split_unknot_summand, violations, CfkComplex, Level, Rational};

#[derive(Debug, PartialEq, Eq)]
struct Suite {
    tau: i64,
    nu: i64,
    epsilon: i8,
    nu_minus: i64,
    v: Vec<u64>,
    upsilon: Vec<Rational>,
    hfk_by_s: BTreeMap<i64, usize>,
}

fn suite(c: &CfkComplex) -> Suite {
    let mut hfk_by_s = BTreeMap::new();
    for ((s, _), d) in hfk_hat(c) {
        *hfk_by_s.entry(s).or_insert(0) += d;
    }
    Suite {
        tau: tau(c).unwrap(),
        nu: nu(c).unwrap(),
        epsilon: epsilon(c).unwrap(),
        nu_minus: nu_minus(c).unwrap(),
        v: (-4..=4).map(|s| v_s(c, s).unwrap()).collect(),
        upsilon: (0..=8).map(|k| upsilon_at(c, Rational::new(k, 4)).unwrap()).collect(),
        hfk_by_s,
    }
}

fn knotlike(seed: u64) -> CfkComplex {
    let cfg = FuzzConfig { seed, ..Default::default() };
    (0..).find_map(|i| random_knotlike(&cfg, i, 2000)).unwrap()
}

fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

/// A symmetric staircase polynomial from step lengths read top to middle.
fn staircase_poly(steps: &[i64]) -> LaurentPoly {
    let g: i64 = steps.iter().sum();
    let mut exps = vec![g];
    for d in steps.iter().chain(steps.iter().rev()) {
        exps.push(exps.last().unwrap() - d);
    }
    LaurentPoly::from_terms(exps.iter().enumerate().map(|(i, &e)| (e, if i % 2 == 0 { 1 } else { -1 })))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn reduce_preserves_invariants(seed in seeds()) {
        let c = knotlike(seed);
        let (r, trace) = reduce(&c);
        prop_assert!(violations(&r, Level::Basic).is_empty());
        prop_assert_eq!(r.len() + 2 * trace.cancelled_pairs.len(), c.len());
        prop_assert_eq!(suite(&r), suite(&c));
    }

    #[test]
    fn reduced_generators_count_bigraded_homology(seed in seeds()) {
        let (r, _) = reduce(&knotlike(seed));
        let (lo, hi) = r.alexander_range();
        // every generator has exactly one translate in the column i = 0
        let mut total = 0;
        for j in lo - 1..=hi + 1 {
            let piece = region_complex(&r, Region::BigradedPiece(0, j));
            total += piece.module.homology_f2().unwrap().values().sum::<usize>();
        }
        prop_assert_eq!(total, r.len());
        prop_assert_eq!(genus(&r), r.generators().iter().map(|g| g.alexander).max().unwrap());
        for a in r.arrows() {
            prop_assert!(a.u_power > 0 || r.alexander(a.from) != r.alexander(a.to));
        }
    }

    #[test]
    fn dual_is_an_involution(seed in seeds()) {
        let c = knotlike(seed);
        let dd = c.dual().dual();
        prop_assert!(dd.is_isomorphic(&c));
        prop_assert!(violations(&c.dual(), Level::Knotlike).is_empty());
        prop_assert_eq!(suite(&dd), suite(&c));
    }

    #[test]
    fn vs_duality_on_all_s(seed in seeds()) {
        let c = knotlike(seed);
        let (lo, hi) = c.alexander_range();
        for s in lo - 1..=hi + 1 {
            prop_assert!(vs_duality_check(&c, s).unwrap(), "s = {}", s);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn tensor_commutes_and_associates(a in seeds(), b in seeds(), c in seeds()) {
        let (x, y, z) = (knotlike(a), knotlike(b), knotlike(c));
        let xy = reduce(&x.tensor(&y)).0;
        prop_assert!(violations(&xy, Level::Knotlike).is_empty());
        prop_assert_eq!(suite(&xy), suite(&reduce(&y.tensor(&x)).0));
        let left = reduce(&xy.tensor(&z)).0;
        let right = reduce(&x.tensor(&reduce(&y.tensor(&z)).0)).0;
        prop_assert_eq!(suite(&left), suite(&right));
    }

    #[test]
    fn unknot_summand_splits_when_v0_vanishes(seed in seeds()) {
        let x = knotlike(seed);
        // C ⊗ C* always has V₀ = 0 on both sides
        let c = reduce(&x.tensor(&x.dual())).0;
        prop_assert_eq!(v_s(&c, 0).unwrap(), 0);
        prop_assert_eq!(v_s(&c.dual(), 0).unwrap(), 0);
        let split = split_unknot_summand(&c).unwrap();
        prop_assert_eq!(split.remainder.len() + 1, c.len());
        let m = cfk::reduce::u_matrix(&split.remainder);
        prop_assert_eq!(2 * cfk::algebra::rank_over_fraction_field(&m), split.remainder.len());
    }

    #[test]
    fn staircases(steps in proptest::collection::vec(1i64..4, 0..4)) {
        let d = staircase_poly(&steps);
        let c = staircase_from_alexander(&d).unwrap();
        let g: i64 = steps.iter().sum();
        prop_assert!(violations(&c, Level::Knotlike).is_empty());
        prop_assert_eq!(alexander_poly(&c), d);
        prop_assert_eq!((tau(&c).unwrap(), nu(&c).unwrap(), nu_minus(&c).unwrap(), genus(&c)), (g, g, g, g));
        prop_assert_eq!(epsilon(&c).unwrap(), g.signum() as i8);
    }

    #[test]
    fn thin_complexes(t in -3i64..=3, boxes in 0usize..3) {
        let c = thin_complex(t, boxes);
        prop_assert!(violations(&c, Level::Knotlike).is_empty());
        prop_assert_eq!(tau(&c).unwrap(), t);
        prop_assert_eq!(epsilon(&c).unwrap(), t.signum() as i8);
        let bare = suite(&thin_complex(t, 0));
        let with = suite(&c);
        prop_assert_eq!((with.tau, with.nu, with.epsilon, with.nu_minus, &with.v, &with.upsilon),
                        (bare.tau, bare.nu, bare.epsilon, bare.nu_minus, &bare.v, &bare.upsilon));
    }
}

#[test]
fn dual_of_figure_eight_is_isomorphic() {
    let c = catalogue::figure_eight();
    assert!(c.dual().is_isomorphic(&c));
    assert_eq!(suite(&c.dual()), suite(&c));
}
