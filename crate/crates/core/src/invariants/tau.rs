//! τ, ν and ε from the vertical complex and the hat-flavoured hooks.

use crate::algebra::{f2, BitVector, Echelon, Tracking};
use crate::complex::CfkComplex;
use crate::error::CfkError;
use crate::region::{region_complex, Region, RegionComplex};

/// Vertical complex with its boundary space, after checking its homology
/// is one-dimensional.
struct Vertical {
    region: RegionComplex,
    boundaries: Echelon,
}

impl Vertical {
    fn new(c: &CfkComplex) -> Result<Self, CfkError> {
        let region = region_complex(c, Region::Vertical);
        let dim: usize = region.module.homology_f2()?.values().sum();
        if dim != 1 {
            return Err(CfkError::FreeRank(dim));
        }
        let mut boundaries = Echelon::new(region.basis.len());
        for col in region.module.f2_columns() {
            boundaries.insert(&col);
        }
        Ok(Self { region, boundaries })
    }

    /// Whether some cycle supported on `allowed` generators is not a boundary.
    fn hits_homology(&self, allowed: impl Fn(usize) -> bool) -> bool {
        let keep: Vec<usize> =
            (0..self.region.basis.len()).filter(|&k| allowed(self.region.basis[k].0)).collect();
        let cols = self.region.module.f2_columns();
        let sub: Vec<BitVector> = keep.iter().map(|&k| cols[k].clone()).collect();
        f2::kernel(self.region.basis.len(), &sub).iter().any(|z| {
            let v = BitVector::from_indices(self.region.basis.len(), z.ones().map(|i| keep[i]));
            !self.boundaries.contains(&v)
        })
    }
}

/// Least s such that C{i = 0, j <= s} carries the vertical homology.
pub fn tau(c: &CfkComplex) -> Result<i64, CfkError> {
    let vertical = Vertical::new(c)?;
    for s in c.s_scan_range() {
        if vertical.hits_homology(|x| c.alexander(x) <= s) {
            if cfg!(debug_assertions) {
                if let Ok(t) = tau_from_hfk_minus(c) {
                    assert_eq!(t, s, "τ routes disagree on {}", c.name());
                }
            }
            return Ok(s);
        }
    }
    Err(CfkError::Internal("vertical homology not reached within the Alexander range".into()))
}

/// τ as minus the Alexander grading of the free generator of HFK⁻.
pub fn tau_from_hfk_minus(c: &CfkComplex) -> Result<i64, CfkError> {
    let h = super::hfk::hfk_minus_module(c).graded_reduction(Tracking::NONE);
    match h.free.as_slice() {
        [g] => Ok(-c.alexander(*g)),
        other => Err(CfkError::FreeRank(other.len())),
    }
}

/// Least s >= τ for which the hat hook at s surjects onto the vertical homology.
pub fn nu(c: &CfkComplex) -> Result<i64, CfkError> {
    let vertical = Vertical::new(c)?;
    let t = tau(c)?;
    let (_, hi) = c.alexander_range();
    for s in t..=hi.max(t) + 1 {
        let hook = region_complex(c, Region::HookHat(s));
        let n = hook.basis.len();
        let cycles = f2::kernel(n, &hook.module.f2_columns());
        let surjects = cycles.iter().any(|z| {
            // project onto the translates with n_x = 0, which live in C{i = 0}
            let v = BitVector::from_indices(
                vertical.region.basis.len(),
                z.ones().filter(|&k| hook.basis[k].1 == 0).map(|k| {
                    vertical.region.position(hook.basis[k].0).expect("vertical holds every generator")
                }),
            );
            !vertical.boundaries.contains(&v)
        });
        if surjects {
            return Ok(s);
        }
    }
    Err(CfkError::Internal("hat hook never surjects".into()))
}

/// ε from the excess of ν over τ on the complex and its dual.
pub fn epsilon(c: &CfkComplex) -> Result<i8, CfkError> {
    let d = c.dual();
    let low = nu(c)? == tau(c)? + 1;
    let high = nu(&d)? == tau(&d)? + 1;
    match (low, high) {
        (true, true) => Err(CfkError::EpsilonConflict),
        (true, false) => Ok(-1),
        (false, true) => Ok(1),
        (false, false) => Ok(0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    #[test]
    fn trefoil_values() {
        let t = catalogue::trefoil();
        assert_eq!(tau(&t).unwrap(), 1);
        assert_eq!(tau(&t.dual()).unwrap(), -1);
        assert_eq!(nu(&t).unwrap(), 1);
        assert_eq!(epsilon(&t).unwrap(), 1);
        assert_eq!(tau_from_hfk_minus(&t).unwrap(), 1);
    }

    #[test]
    fn unknot_values() {
        let u = catalogue::unknot();
        assert_eq!((tau(&u).unwrap(), nu(&u).unwrap(), epsilon(&u).unwrap()), (0, 0, 0));
    }

    #[test]
    fn figure_four_values() {
        let c = catalogue::fixture("fig4").unwrap();
        assert_eq!(tau(&c).unwrap(), -1);
        assert_eq!(nu(&c).unwrap(), 0);
        assert_eq!(epsilon(&c).unwrap(), -1);
    }

    #[test]
    fn figure_eight_epsilon() {
        assert_eq!(epsilon(&catalogue::figure_eight()).unwrap(), 0);
    }
}
