//! Subquotient complexes C{X} for the finitely supported regions X used by
//! the invariants.
//!
//! A basis element of a region complex is a translate `U^n x`, which sits at
//! `(i, j) = (-n, A(x) - n)` in Maslov grading `M(x) - 2n`.

use std::fmt;

use num_rational::Ratio;

use crate::algebra::{FieldPoly, FreeChainModule, PolyMatrix};
use crate::complex::CfkComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// {i = 0}, over F₂.
    Vertical,
    /// {max(i, j - s) = 0}, over F₂.
    HookHat(i64),
    /// {max(i, j - s) <= 0}, free over F₂[U].
    HookMinus(i64),
    /// C(a, b) = {i = a, j = b} of the associated bigraded complex, over F₂.
    BigradedPiece(i64, i64),
    /// {i = 0, j = s}, over F₂.
    AssocGradedHat(i64),
    /// {i <= 0, j = s}, over F₂.
    HfkMinusColumn(i64),
    /// {i <= 0}, free over F₂[U].
    Minus,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Vertical => write!(f, "vertical"),
            Region::HookHat(s) => write!(f, "hook_hat({s})"),
            Region::HookMinus(s) => write!(f, "hook_minus({s})"),
            Region::BigradedPiece(a, b) => write!(f, "bigraded_piece({a}, {b})"),
            Region::AssocGradedHat(s) => write!(f, "assoc_graded_hat({s})"),
            Region::HfkMinusColumn(s) => write!(f, "hfk_minus_column({s})"),
            Region::Minus => write!(f, "minus"),
        }
    }
}

/// A region complex together with the translate each basis element stands for.
#[derive(Clone, Debug)]
pub struct RegionComplex {
    pub module: FreeChainModule,
    /// `(generator index, n)` for the translate `U^n x`.
    pub basis: Vec<(usize, i64)>,
}

impl RegionComplex {
    pub fn position(&self, generator: usize) -> Option<usize> {
        self.basis.iter().position(|(g, _)| *g == generator)
    }
}

pub fn region_complex(c: &CfkComplex, region: Region) -> RegionComplex {
    let n = c.len();
    // Each region here contains at most one translate of each generator.
    let power: Vec<Option<i64>> = (0..n)
        .map(|x| {
            let a = c.alexander(x);
            match region {
                Region::Vertical | Region::Minus => Some(0),
                Region::HookHat(s) | Region::HookMinus(s) => Some((a - s).max(0)),
                Region::BigradedPiece(i, j) => (a == j - i).then_some(-i),
                Region::AssocGradedHat(s) => (a == s).then_some(0),
                Region::HfkMinusColumn(s) => (a >= s).then_some(a - s),
            }
        })
        .collect();
    let basis: Vec<(usize, i64)> =
        power.iter().enumerate().filter_map(|(x, p)| p.map(|p| (x, p))).collect();
    let mut pos = vec![usize::MAX; n];
    for (k, (x, _)) in basis.iter().enumerate() {
        pos[*x] = k;
    }
    let mut d = PolyMatrix::zeros(basis.len(), basis.len());
    for arrow in c.arrows() {
        let (Some(nx), Some(ny)) = (power[arrow.from], power[arrow.to]) else {
            continue;
        };
        let exponent = nx + i64::from(arrow.u_power) - ny;
        let entry = match region {
            Region::Vertical => arrow.u_power == 0,
            Region::HookHat(_) | Region::HfkMinusColumn(_) => exponent == 0,
            Region::BigradedPiece(..) | Region::AssocGradedHat(_) => {
                arrow.u_power == 0 && c.alexander(arrow.from) == c.alexander(arrow.to)
            }
            Region::HookMinus(_) | Region::Minus => {
                debug_assert!(exponent >= 0, "filtered arrow leaves the hook");
                d.set(pos[arrow.to], pos[arrow.from], FieldPoly::monomial(exponent as u32));
                continue;
            }
        };
        if entry {
            d.set(pos[arrow.to], pos[arrow.from], FieldPoly::one());
        }
    }
    let gradings =
        basis.iter().map(|&(x, p)| Ratio::from_integer(c.maslov(x) - 2 * p)).collect();
    RegionComplex {
        module: FreeChainModule::new_unchecked(gradings, d, Ratio::from_integer(2)),
        basis,
    }
}
