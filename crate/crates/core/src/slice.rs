//! Fixed-Maslov slices of region complexes as F₂ vector spaces.
//!
//! In a single Maslov degree each generator contributes at most one
//! translate, so a slice of any region is finite dimensional even when the
//! region is not finitely generated over F₂.

use std::collections::HashMap;

use crate::algebra::BitVector;
use crate::complex::CfkComplex;

#[derive(Clone, Debug)]
pub struct Slice {
    /// `(generator, n)` for the translate `U^n x`.
    pub elems: Vec<(usize, i64)>,
    index: HashMap<usize, usize>,
}

impl Slice {
    /// Translates of Maslov grading `degree` whose position `(i, j)`
    /// satisfies `keep`, ordered by generator index.
    pub fn new(c: &CfkComplex, degree: i64, keep: impl Fn(i64, i64) -> bool) -> Self {
        let elems = (0..c.len())
            .filter_map(|x| {
                let diff = c.maslov(x) - degree;
                if diff.rem_euclid(2) != 0 {
                    return None;
                }
                let n = diff / 2;
                keep(-n, c.alexander(x) - n).then_some((x, n))
            })
            .collect();
        Self::from_elems(elems)
    }

    pub fn from_elems(elems: Vec<(usize, i64)>) -> Self {
        let index = elems.iter().enumerate().map(|(k, (x, _))| (*x, k)).collect();
        Self { elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn position(&self, generator: usize) -> Option<usize> {
        self.index.get(&generator).copied()
    }

    /// Reorders elements so those satisfying `first` come first (stable).
    pub fn partitioned(&self, first: impl Fn(usize, i64) -> bool) -> Self {
        let (mut a, b): (Vec<_>, Vec<_>) = self.elems.iter().partition(|(x, n)| first(*x, *n));
        a.extend(b);
        Self::from_elems(a)
    }
}

/// Boundary of each element of `from`, in the coordinates of `to`; terms
/// landing outside `to` are dropped (quotient convention).
pub fn boundary_columns(c: &CfkComplex, from: &Slice, to: &Slice) -> Vec<BitVector> {
    from.elems
        .iter()
        .map(|&(x, n)| {
            let mut v = BitVector::zeros(to.len());
            for &(y, a) in c.outgoing(x) {
                if let Some(k) = to.position(y) {
                    if to.elems[k].1 == n + i64::from(a) {
                        v.flip(k);
                    }
                }
            }
            v
        })
        .collect()
}

/// Re-expresses a vector over `from` in the coordinates of `to`, dropping
/// translates that `to` does not contain.
pub fn transfer(v: &BitVector, from: &Slice, to: &Slice) -> BitVector {
    let mut out = BitVector::zeros(to.len());
    for k in v.ones() {
        let (x, n) = from.elems[k];
        if let Some(j) = to.position(x) {
            if to.elems[j].1 == n {
                out.flip(j);
            }
        }
    }
    out
}
