//! V_s, ν⁻ and the dual-side V'_s.

use crate::algebra::chain::{add_shifted, pair};
use crate::algebra::{f2, Echelon, SparseVector, Tracking};
use crate::complex::CfkComplex;
use crate::error::CfkError;
use crate::region::{region_complex, Region};
use crate::slice::{boundary_columns, transfer, Slice};

/// V_s: the power of U by which the image of H(hook_minus(s)) falls short
/// of H(C{i <= 0}) ≅ F₂[U].
pub fn v_s(c: &CfkComplex, s: i64) -> Result<u64, CfkError> {
    let minus = region_complex(c, Region::Minus);
    let hm = minus.module.graded_reduction(Tracking { representatives: false, projections: true });
    if hm.free_rank() != 1 {
        return Err(CfkError::FreeRank(hm.free_rank()));
    }
    let hook = region_complex(c, Region::HookMinus(s));
    let hh = hook.module.graded_reduction(Tracking { representatives: true, projections: false });
    if hh.free_rank() != 1 {
        return Err(CfkError::FreeRank(hh.free_rank()));
    }
    // hook basis element k is U^{n_k} x_k; C{i <= 0} uses x itself
    let mut image = SparseVector::new();
    for (k, p) in &hh.representatives[0] {
        let (x, n) = hook.basis[*k];
        let pos = minus.position(x).expect("minus region holds every generator");
        add_shifted(&mut image, &SparseVector::from([(pos, p.clone())]), n as u32);
    }
    let coefficient = pair(&hm.projections[0], &image);
    let n = coefficient
        .as_monomial()
        .ok_or_else(|| CfkError::Internal(format!("hook generator maps to {coefficient}, not a power of U")))?;
    let top = minus.module.grading(hm.free[0]);
    let bottom = hook.module.grading(hh.free[0]);
    debug_assert_eq!(top - bottom, (2 * i64::from(n)).into());
    Ok(u64::from(n))
}

/// V_s computed degree by degree over F₂: the least n such that some cycle
/// of the hook in Maslov grading -2n survives in H(C{i <= 0}).
pub fn v_s_truncated(c: &CfkComplex, s: i64) -> Result<u64, CfkError> {
    let top = minus_top_grading(c)?;
    let hook = |i: i64, j: i64| i <= 0 && j <= s;
    let minus = |i: i64, _: i64| i <= 0;
    let bound = (c.alexander_range().1 - s).max(0);
    for n in 0..=bound {
        let degree = top - 2 * n;
        let h0 = Slice::new(c, degree, hook);
        let h_1 = Slice::new(c, degree - 1, hook);
        let cycles = f2::kernel(h_1.len(), &boundary_columns(c, &h0, &h_1));
        let ambient = Slice::new(c, degree, minus);
        let mut b = Echelon::new(ambient.len());
        for col in boundary_columns(c, &Slice::new(c, degree + 1, minus), &ambient) {
            b.insert(&col);
        }
        if cycles.iter().any(|z| !b.contains(&transfer(z, &h0, &ambient))) {
            return Ok(n as u64);
        }
    }
    Err(CfkError::Certification(format!("V_{s} exceeds the bound {bound}")))
}

/// Maslov grading of the generator of H(C{i <= 0}) ≅ F₂[U].
fn minus_top_grading(c: &CfkComplex) -> Result<i64, CfkError> {
    let minus = region_complex(c, Region::Minus);
    let h = minus.module.graded_reduction(Tracking::NONE);
    match h.free.as_slice() {
        [g] => Ok(minus.module.grading(*g).to_integer()),
        other => Err(CfkError::FreeRank(other.len())),
    }
}

/// `(s, V_s)` from `-(max |A|) - 1` up to and including ν⁻.
pub fn v_sequence(c: &CfkComplex) -> Result<Vec<(i64, u64)>, CfkError> {
    let (lo, hi) = c.alexander_range();
    let start = -(lo.abs().max(hi.abs())) - 1;
    let mut out = Vec::new();
    for s in start..=hi.max(0) + 1 {
        let v = v_s(c, s)?;
        out.push((s, v));
        if v == 0 {
            return Ok(out);
        }
    }
    Err(CfkError::Internal("V_s did not vanish within the Alexander range".into()))
}

pub fn nu_minus(c: &CfkComplex) -> Result<i64, CfkError> {
    Ok(v_sequence(c)?.last().expect("nonempty sequence").0)
}

/// V'_s: dimension of the kernel of H(C{i >= 0}) -> H(C{min(i, j - s) >= 0}).
pub fn v_prime(c: &CfkComplex, s: i64) -> Result<u64, CfkError> {
    let plus = |i: i64, _: i64| i >= 0;
    let quotient = |i: i64, j: i64| i >= 0 && j >= s;
    let (mlo, mhi) = maslov_range(c);
    let (alo, ahi) = c.alexander_range();
    let ceiling = mhi + 2 * (ahi - alo + s.abs() + 2) + 2;
    let mut dead = 0;
    let mut bottom: Option<i64> = None;
    for degree in mlo - 1..=ceiling {
        let here = Slice::new(c, degree, plus);
        let below = Slice::new(c, degree - 1, plus);
        let cycles = f2::kernel(below.len(), &boundary_columns(c, &here, &below));
        let mut b = Echelon::new(here.len());
        for col in boundary_columns(c, &Slice::new(c, degree + 1, plus), &here) {
            b.insert(&col);
        }
        let mut span = b.clone();
        let classes: Vec<_> = cycles.into_iter().filter(|z| span.insert(z).is_none()).collect();
        match (classes.len(), bottom) {
            (0, Some(m)) if (degree - m) % 2 == 0 => return Err(CfkError::FreeRank(0)),
            (0, _) => continue,
            (1, _) => {}
            (k, _) => return Err(CfkError::FreeRank(k)),
        }
        bottom.get_or_insert(degree);
        let q = Slice::new(c, degree, quotient);
        let mut qb = Echelon::new(q.len());
        for col in boundary_columns(c, &Slice::new(c, degree + 1, quotient), &q) {
            qb.insert(&col);
        }
        if qb.contains(&transfer(&classes[0], &here, &q)) {
            dead += 1;
        } else {
            return Ok(dead);
        }
    }
    Err(CfkError::Certification(format!("V'_{s} did not stabilise below grading {ceiling}")))
}

fn maslov_range(c: &CfkComplex) -> (i64, i64) {
    let lo = c.generators().iter().map(|g| g.maslov).min().unwrap_or(0);
    let hi = c.generators().iter().map(|g| g.maslov).max().unwrap_or(0);
    (lo, hi)
}

/// Checks V_s(C) = V'_{-s}(C*).
pub fn vs_duality_check(c: &CfkComplex, s: i64) -> Result<bool, CfkError> {
    Ok(v_s(c, s)? == v_prime(&c.dual(), -s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn small_values() {
        assert_eq!(v_s(&catalogue::unknot(), 0).unwrap(), 0);
        assert_eq!(v_s(&catalogue::trefoil(), 0).unwrap(), 1);
        assert_eq!(v_s(&catalogue::trefoil(), 1).unwrap(), 0);
        let c = catalogue::fixture("fig6_C").unwrap();
        assert_eq!(v_s(&c, 0).unwrap(), 2);
        assert_eq!(nu_minus(&c).unwrap(), 2);
        assert_eq!(nu_minus(&catalogue::unknot()).unwrap(), 0);
    }

    #[test]
    fn truncated_route_agrees() {
        for c in [catalogue::unknot(), catalogue::trefoil(), catalogue::fixture("fig6_C").unwrap()] {
            for s in -3..=3 {
                assert_eq!(v_s(&c, s).unwrap(), v_s_truncated(&c, s).unwrap(), "{} at {s}", c.name());
            }
        }
    }

    #[test]
    fn vs_duality_examples() {
        assert!(vs_duality_check(&catalogue::trefoil(), 0).unwrap());
        for s in -1..=1 {
            assert!(vs_duality_check(&catalogue::unknot(), s).unwrap());
        }
        assert!(vs_duality_check(&catalogue::fixture("fig6_C").unwrap(), 0).unwrap());
    }
}
