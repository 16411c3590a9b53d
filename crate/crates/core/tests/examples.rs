use std::cmp::Ordering;
use std::collections::BTreeMap;

use cfk::algebra::{f2, membership_solve, snf, BitVector, FieldPoly, PolyMatrix};
use cfk::catalogue::{self, cable_alexander, named, staircase_from_alexander, torus_knot_alexander, LaurentPoly};
use cfk::invariants::{
    concordance_genus_bound, epsilon, epsilon_order, genus, hfk_minus, nu, nu_minus, tau, upsilon_pl, v0_equivalent,
    v_s,
};
use cfk::{reduce, region_complex, split_unknot_summand, CfkComplex, Region};

fn w(exps: &[u32]) -> FieldPoly {
    FieldPoly::from_exponents(exps.iter().copied())
}

#[test]
fn snf_of_small_matrices() {
    let m = PolyMatrix::from_dense(vec![vec![w(&[1]), w(&[0])], vec![w(&[]), w(&[1])]]);
    assert_eq!(snf(&m).diagonal, vec![w(&[0]), w(&[2])]);
    assert_eq!(snf(&PolyMatrix::from_dense(vec![vec![w(&[0])]])).diagonal, vec![w(&[0])]);
    let zero = PolyMatrix::zeros(2, 2);
    assert!(snf(&zero).diagonal.iter().all(FieldPoly::is_zero));
}

#[test]
fn membership_examples() {
    let e = |i| BitVector::unit(2, i);
    let mut sum = e(0);
    sum.xor_assign(&e(1));
    assert_eq!(membership_solve(&[e(0)], &[sum, e(1)]), vec![true]);
    assert_eq!(membership_solve(&[e(0)], &[e(1)]), vec![false]);
}

#[test]
fn figure_four_hat_map_at_minus_one_misses_the_class() {
    let c = catalogue::fixture("fig4").unwrap();
    let vertical = region_complex(&c, Region::Vertical);
    let n = vertical.basis.len();
    let hook = region_complex(&c, Region::HookHat(-1));
    let project = |z: &BitVector| {
        BitVector::from_indices(
            n,
            z.ones().filter(|&k| hook.basis[k].1 == 0).map(|k| vertical.position(hook.basis[k].0).unwrap()),
        )
    };
    let mut span: Vec<BitVector> =
        f2::kernel(hook.basis.len(), &hook.module.f2_columns()).iter().map(project).collect();
    span.extend(vertical.module.f2_columns());
    let class = BitVector::unit(n, vertical.position(c.index_of("c").unwrap()).unwrap());
    assert_eq!(membership_solve(&[class], &span), vec![false]);
}

#[test]
fn dual_of_trefoil() {
    let d = catalogue::trefoil().dual();
    let g = |id: &str| d.generator(d.index_of(id).unwrap()).clone();
    assert_eq!((g("a").maslov, g("a").alexander), (0, -1));
    assert_eq!((g("b").maslov, g("b").alexander), (1, 0));
    assert_eq!((g("c").maslov, g("c").alexander), (2, 1));
    let expected = CfkComplex::from_ids(
        "mirror",
        &[("a", 0, -1), ("b", 1, 0), ("c", 2, 1)],
        &[("a", "b", 1), ("c", "b", 0)],
    )
    .unwrap();
    assert!(d.is_isomorphic(&expected));
    assert!(catalogue::unknot().dual().is_isomorphic(&catalogue::unknot()));
}

#[test]
fn tensor_examples() {
    let t = catalogue::trefoil();
    assert!(catalogue::unknot().tensor(&t).is_isomorphic(&t));
    let tt = t.tensor(&t);
    assert_eq!((tt.len(), tau(&tt).unwrap()), (9, 2));
    let slice = t.tensor(&t.dual());
    assert_eq!(slice.len(), 9);
    assert_eq!((v_s(&slice, 0).unwrap(), epsilon(&slice).unwrap()), (0, 0));
}

#[test]
fn reduce_examples() {
    let t = catalogue::trefoil();
    let (r, trace) = reduce(&t);
    assert!(r.is_isomorphic(&t) && trace.cancelled_pairs.is_empty());
    let pair = CfkComplex::from_ids("pair", &[("x", 1, 0), ("y", 0, 0)], &[("x", "y", 0)]).unwrap();
    assert!(reduce(&pair).0.is_empty());
    // golden: the slice complex has no bidegree (0, 0) arrow to cancel
    let slice = t.tensor(&t.dual());
    let (r, _) = reduce(&slice);
    assert_eq!(r.len(), 9);
    assert!(slice.arrows().iter().all(|a| a.u_power > 0 || slice.alexander(a.from) != slice.alexander(a.to)));
}

#[test]
fn split_of_slice_complex() {
    let t = catalogue::trefoil();
    let c = t.tensor(&t.dual());
    let s = split_unknot_summand(&c).unwrap();
    let x = c.index_of(&s.distinguished).unwrap();
    assert_eq!((c.maslov(x), c.alexander(x)), (0, 0));
    assert_eq!(s.remainder.len(), 8);
    let u = split_unknot_summand(&catalogue::unknot()).unwrap();
    assert_eq!(u.distinguished, "x");
    assert!(u.remainder.is_empty());
}

#[test]
fn figure_eight_split_matches_picture() {
    let s = split_unknot_summand(&catalogue::figure_eight()).unwrap();
    assert_eq!(s.distinguished, "x");
    assert_eq!((s.remainder.len(), s.remainder.arrows().len()), (4, 4));
    // the distinguished generator carries no arrows at all
    let (r, _) = reduce(&catalogue::figure_eight());
    let x = r.index_of("x").unwrap();
    assert!(r.outgoing(x).is_empty() && r.incoming(x).is_empty());
}

#[test]
fn trefoil_distinguished_generator_has_incoming_horizontal_arrow() {
    let t = catalogue::trefoil();
    let a = t.index_of("a").unwrap();
    // horizontal: preserves j, so A(to) - u = A(from)
    assert!(t.incoming(a).iter().any(|&(from, u)| t.alexander(a) - i64::from(u) == t.alexander(from)));
}

#[test]
fn hfk_minus_examples() {
    let h = hfk_minus(&catalogue::trefoil(), -2..=1);
    assert_eq!(h[&1].ranks, BTreeMap::from([(0, 1)]));
    assert_eq!(h[&-2].ranks, BTreeMap::from([(-4, 1)]));
}

#[test]
fn invariant_examples() {
    let c6 = catalogue::fixture("fig6_C").unwrap();
    assert_eq!(nu(&catalogue::fixture("fig4").unwrap()).unwrap(), 0);
    assert_eq!(epsilon(&catalogue::fixture("fig4").unwrap()).unwrap(), -1);
    assert_eq!((tau(&c6).unwrap(), nu(&c6).unwrap(), nu_minus(&c6).unwrap(), epsilon(&c6).unwrap()), (0, 0, 2, 0));
    assert_eq!(genus(&c6), 3);
    assert_eq!(concordance_genus_bound(&c6).unwrap(), 3);
    let pl = upsilon_pl(&c6).unwrap();
    let flipped: Vec<_> = pl.breakpoints.iter().rev().map(|t| cfk::Rational::from_integer(2) - t).collect();
    assert_eq!(flipped, pl.breakpoints);
}

#[test]
fn orders_and_equivalence() {
    let (t, u) = (catalogue::trefoil(), catalogue::unknot());
    assert_eq!(epsilon_order(&t, &u).unwrap(), Ordering::Greater);
    assert_eq!(epsilon_order(&u, &t).unwrap(), Ordering::Less);
    for c in [t.clone(), catalogue::figure_eight(), catalogue::fixture("fig6_C").unwrap()] {
        assert_eq!(epsilon_order(&c, &c).unwrap(), Ordering::Equal);
    }
    assert!(v0_equivalent(&t, &t).unwrap());
    assert!(!v0_equivalent(&t, &u).unwrap());
    assert!(v0_equivalent(&catalogue::figure_eight(), &u).unwrap());
    let slice = named("T(2,3) # -T(2,3)").unwrap();
    assert!(v0_equivalent(&slice, &u).unwrap());
    assert_eq!(epsilon_order(&slice, &u).unwrap(), Ordering::Equal);
}

#[test]
fn staircase_examples() {
    let t25 = staircase_from_alexander(&torus_knot_alexander(2, 5).unwrap()).unwrap();
    assert_eq!((t25.len(), tau(&t25).unwrap()), (5, 2));
    assert!(staircase_from_alexander(&LaurentPoly::one()).unwrap().is_isomorphic(&catalogue::unknot()));
    let t45 = staircase_from_alexander(&torus_knot_alexander(4, 5).unwrap()).unwrap();
    assert_eq!(tau(&t45).unwrap(), 6);
    let cable = cable_alexander(&torus_knot_alexander(2, 3).unwrap(), 2, 5, 1).unwrap();
    assert_eq!(tau(&staircase_from_alexander(&cable).unwrap()).unwrap(), 4);
    let nonstair = LaurentPoly::from_terms([(1, -1), (0, 3), (-1, -1)]);
    assert!(staircase_from_alexander(&nonstair).is_err());
}
