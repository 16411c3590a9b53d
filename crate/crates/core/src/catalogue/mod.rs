//! Complexes for specific knots and hand-drawn examples.

mod laurent;
mod named;

pub use laurent::LaurentPoly;
pub use named::named;

use num_integer::Integer;

use crate::complex::{Arrow, CfkComplex, Generator};
use crate::error::CfkError;
use crate::region::{region_complex, Region};

pub const FIXTURES: [&str; 6] = ["fig1", "fig4", "fig5_left", "fig5_center", "fig5_right", "fig6_C"];

pub fn unknot() -> CfkComplex {
    CfkComplex::from_ids("U", &[("x", 0, 0)], &[]).expect("static data")
}

/// Right-handed trefoil: ∂b = Ua + c.
pub fn trefoil() -> CfkComplex {
    CfkComplex::from_ids(
        "T(2,3)",
        &[("a", 0, 1), ("b", -1, 0), ("c", -2, -1)],
        &[("b", "a", 1), ("b", "c", 0)],
    )
    .expect("static data")
}

/// A box `a -> b, a -> Uc, b -> Ue, c -> e` plus an isolated generator `x`.
pub fn figure_eight() -> CfkComplex {
    CfkComplex::from_ids(
        "fig1",
        &[("a", 0, 0), ("b", -1, -1), ("c", 1, 1), ("e", 0, 0), ("x", 0, 0)],
        &[("a", "b", 0), ("a", "c", 1), ("b", "e", 1), ("c", "e", 0)],
    )
    .expect("static data")
}

pub fn fixture(name: &str) -> Result<CfkComplex, CfkError> {
    let c = match name {
        "fig1" | "fig8" => figure_eight(),
        "fig4" | "fig5_left" => CfkComplex::from_ids(
            name,
            &[("a", 2, 1), ("b", 1, 0), ("c", 0, -1)],
            &[("a", "b", 0), ("c", "b", 1)],
        )?,
        "fig5_center" => unknot(),
        "fig5_right" => trefoil(),
        "fig6_C" => CfkComplex::from_ids(
            name,
            &[("a", -3, 0), ("b", -4, -3), ("c", 2, 3), ("e", 1, 0), ("x", 0, 0)],
            &[("a", "b", 0), ("a", "c", 3), ("b", "e", 3), ("c", "e", 0), ("x", "e", 1)],
        )?,
        _ => return Err(CfkError::UnknownFixture(name.to_string())),
    };
    Ok(c.with_name(name))
}

/// Shifts Maslov gradings so the vertical homology sits in grading 0.
pub fn normalize_maslov(c: &CfkComplex) -> CfkComplex {
    let h = region_complex(c, Region::Vertical).module.homology_f2().expect("basic-valid complex");
    match h.keys().next() {
        Some(g) if h.len() == 1 => c.shifted(-g.to_integer(), 0),
        _ => c.clone(),
    }
}

/// Exponents `a_0 > a_1 > ... > a_2m` of a staircase-shaped polynomial:
/// symmetric, coefficients alternating `+1, -1, ...` from the top.
pub fn staircase_exponents(d: &LaurentPoly) -> Result<Vec<i64>, CfkError> {
    let terms: Vec<(i64, i64)> = d.terms().rev().collect();
    if terms.is_empty() || terms.len().is_multiple_of(2) {
        return Err(CfkError::NotStaircase(format!("{d} has an even number of terms")));
    }
    for (i, &(_, c)) in terms.iter().enumerate() {
        let want = if i % 2 == 0 { 1 } else { -1 };
        if c != want {
            return Err(CfkError::NotStaircase(format!("{d}: coefficients must alternate +1, -1")));
        }
    }
    if !d.is_symmetric() {
        return Err(CfkError::NotStaircase(format!("{d} is not symmetric")));
    }
    Ok(terms.into_iter().map(|(e, _)| e).collect())
}

/// The staircase complex of an L-space knot with Alexander polynomial `d`.
pub fn staircase_from_alexander(d: &LaurentPoly) -> Result<CfkComplex, CfkError> {
    let a = staircase_exponents(d)?;
    let mut maslov = vec![0i64; a.len()];
    for i in (1..a.len()).step_by(2) {
        maslov[i] = maslov[i - 1] - 2 * (a[i - 1] - a[i]) + 1;
        maslov[i + 1] = maslov[i] - 1;
    }
    let gens = (0..a.len()).map(|i| Generator::new(format!("x{i}"), maslov[i], a[i])).collect();
    let mut arrows = Vec::new();
    for i in (1..a.len()).step_by(2) {
        arrows.push(Arrow { from: i, to: i - 1, u_power: (a[i - 1] - a[i]) as u32 });
        arrows.push(Arrow { from: i, to: i + 1, u_power: 0 });
    }
    let c = CfkComplex::new(format!("staircase({d})"), gens, arrows)?;
    Ok(normalize_maslov(&c))
}

/// Symmetrized Alexander polynomial of the torus knot T(p, q).
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly, CfkError> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(CfkError::Precondition(format!("T({p},{q}) needs coprime p, q >= 2")));
    }
    let t_minus_one = |k: i64| LaurentPoly::from_terms([(k, 1), (0, -1)]);
    let num = t_minus_one(p * q).mul(&t_minus_one(1));
    let den = t_minus_one(p).mul(&t_minus_one(q));
    let quot = num.div_exact(&den).ok_or_else(|| CfkError::Internal("torus knot division".into()))?;
    Ok(quot.symmetrized())
}

/// Alexander polynomial of the (p, q)-cable of an L-space knot with
/// polynomial `d` and genus `companion_genus`.
pub fn cable_alexander(d: &LaurentPoly, p: i64, q: i64, companion_genus: i64) -> Result<LaurentPoly, CfkError> {
    if p < 1 || q < 1 || p.gcd(&q) != 1 {
        return Err(CfkError::Cable(format!("cable parameters ({p},{q}) must be coprime and positive")));
    }
    if q < p * (2 * companion_genus - 1) {
        return Err(CfkError::Cable(format!(
            "q = {q} is below p(2g - 1) = {}; the cable is not an L-space knot",
            p * (2 * companion_genus - 1)
        )));
    }
    let pattern = if p == 1 { LaurentPoly::one() } else { torus_knot_alexander(p, q)? };
    let out = d.substitute_power(p).mul(&pattern);
    staircase_exponents(&out).map_err(|e| CfkError::Cable(e.to_string()))?;
    Ok(out)
}

/// Unit staircase for `tau` (dualized when negative) plus `boxes` square
/// summands on the same diagonal.
pub fn thin_complex(tau: i64, boxes: usize) -> CfkComplex {
    let n = tau.unsigned_abs() as i64;
    let d = LaurentPoly::from_terms((0..=2 * n).map(|i| (n - i, if i % 2 == 0 { 1 } else { -1 })));
    let stair = staircase_from_alexander(&d).expect("unit staircase");
    let mut c = if tau < 0 { stair.dual() } else { stair };
    for k in 0..boxes {
        let ids = [format!("box{k}a"), format!("box{k}b"), format!("box{k}c"), format!("box{k}e")];
        let b = CfkComplex::from_ids(
            "box",
            &[(&ids[0], -tau, 0), (&ids[1], -1 - tau, -1), (&ids[2], 1 - tau, 1), (&ids[3], -tau, 0)],
            &[(&ids[0], &ids[1], 0), (&ids[0], &ids[2], 1), (&ids[1], &ids[3], 1), (&ids[2], &ids[3], 0)],
        )
        .expect("static data");
        c = c.direct_sum(&b);
    }
    c.with_name(format!("thin({tau},{boxes})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{violations, Level};

    #[test]
    fn fixtures_are_knotlike() {
        for name in FIXTURES {
            let c = fixture(name).unwrap();
            assert!(violations(&c, Level::Knotlike).is_empty(), "{name}");
        }
        assert!(matches!(fixture("fig9"), Err(CfkError::UnknownFixture(_))));
    }

    #[test]
    fn staircase_of_trefoil_polynomial() {
        let d = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
        let s = staircase_from_alexander(&d).unwrap();
        assert!(s.is_isomorphic(&trefoil()));
        assert_eq!(staircase_from_alexander(&LaurentPoly::one()).unwrap().len(), 1);
    }

    #[test]
    fn torus_polynomials() {
        let t23 = torus_knot_alexander(2, 3).unwrap();
        assert_eq!(t23.to_string(), "t - 1 + t^-1");
        let t25 = torus_knot_alexander(2, 5).unwrap();
        assert_eq!(t25.to_string(), "t^2 - t + 1 - t^-1 + t^-2");
        let t45 = torus_knot_alexander(4, 5).unwrap();
        assert_eq!(t45.to_string(), "t^6 - t^5 + t^2 - 1 + t^-2 - t^-5 + t^-6");
        assert!(torus_knot_alexander(2, 4).is_err());
    }

    #[test]
    fn cable_of_trefoil() {
        let t23 = torus_knot_alexander(2, 3).unwrap();
        let c = cable_alexander(&t23, 2, 5, 1).unwrap();
        assert_eq!(c.to_string(), "t^4 - t^3 + 1 - t^-3 + t^-4");
        assert_eq!(cable_alexander(&LaurentPoly::one(), 2, 5, 0).unwrap(), torus_knot_alexander(2, 5).unwrap());
        assert!(matches!(cable_alexander(&t23, 2, 1, 1), Err(CfkError::Cable(_))));
    }

    #[test]
    fn thin_complexes() {
        assert!(thin_complex(0, 1).is_isomorphic(&figure_eight()));
        assert!(thin_complex(0, 0).is_isomorphic(&unknot()));
        assert!(thin_complex(1, 0).is_isomorphic(&trefoil()));
        for (tau, b) in [(2, 2), (-2, 1), (-1, 3)] {
            assert!(violations(&thin_complex(tau, b), Level::Knotlike).is_empty());
        }
    }
}
