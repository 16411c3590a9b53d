//! ĤFK, HFK⁻ and the Alexander polynomial.

use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::algebra::{f2, BitVector, Echelon, FieldPoly, FreeChainModule, PolyMatrix};
use crate::catalogue::LaurentPoly;
use crate::complex::CfkComplex;
use crate::region::{region_complex, Region, RegionComplex};

/// Associated graded of C{i <= 0} with respect to the Alexander filtration,
/// as a free F₂[U]-module on the generators: an arrow `(x -> y, a)` survives
/// iff `A(y) = A(x) + a`, with entry `U^a`.
pub fn hfk_minus_module(c: &CfkComplex) -> FreeChainModule {
    let mut d = PolyMatrix::zeros(c.len(), c.len());
    for a in c.arrows() {
        if c.alexander(a.to) == c.alexander(a.from) + i64::from(a.u_power) {
            d.set(a.to, a.from, FieldPoly::monomial(a.u_power));
        }
    }
    let gradings = c.generators().iter().map(|g| Ratio::from_integer(g.maslov)).collect();
    FreeChainModule::new_unchecked(gradings, d, Ratio::from_integer(2))
}

/// ĤFK as a table `(s, M) -> dimension`, nonzero entries only.
pub fn hfk_hat(c: &CfkComplex) -> BTreeMap<(i64, i64), usize> {
    let (lo, hi) = c.alexander_range();
    let mut out = BTreeMap::new();
    for s in lo..=hi {
        let r = region_complex(c, Region::AssocGradedHat(s));
        for (m, dim) in r.module.homology_f2().expect("associated graded is variable-free") {
            if dim > 0 {
                out.insert((s, m.to_integer()), dim);
            }
        }
    }
    out
}

/// Graded Euler characteristic of ĤFK.
pub fn alexander_poly(c: &CfkComplex) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for ((s, m), dim) in hfk_hat(c) {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        p.add_term(s, sign * dim as i64);
    }
    p
}

/// One Alexander grading of HFK⁻.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfkMinusColumn {
    /// Maslov grading -> dimension.
    pub ranks: BTreeMap<i64, usize>,
    /// Maslov grading of each chosen homology basis element.
    pub basis_gradings: Vec<i64>,
    /// Column `k` is the image under U of basis element `k`, written in the
    /// basis of column `s - 1`.
    pub u_action: Vec<BitVector>,
}

struct ColumnHomology {
    region: RegionComplex,
    boundaries: Echelon,
    boundary_count: usize,
    reps: Vec<BitVector>,
}

impl ColumnHomology {
    fn new(c: &CfkComplex, s: i64) -> Self {
        let region = region_complex(c, Region::HfkMinusColumn(s));
        let n = region.basis.len();
        let cols = region.module.f2_columns();
        let mut boundaries = Echelon::new(n);
        for col in &cols {
            boundaries.insert(col);
        }
        let boundary_count = boundaries.rank();
        let mut span = boundaries.clone();
        let mut reps: Vec<BitVector> =
            f2::kernel(n, &cols).into_iter().filter(|z| span.insert(z).is_none()).collect();
        reps.sort_by_key(|z| grading_of(&region, z));
        Self { region, boundaries, boundary_count, reps }
    }

    /// Coordinates of a cycle in the chosen homology basis.
    fn coordinates(&self, z: &BitVector) -> BitVector {
        let n = self.region.basis.len();
        let mut e = Echelon::with_tracking(n, self.boundary_count + self.reps.len() + 1);
        for b in self.boundaries.basis() {
            e.insert(b);
        }
        for r in &self.reps {
            e.insert(r);
        }
        let dep = e.insert(z).expect("a cycle lies in cycles = boundaries + reps");
        BitVector::from_indices(
            self.reps.len(),
            (0..self.reps.len()).filter(|&k| dep.get(self.boundary_count + k)),
        )
    }
}

fn grading_of(region: &RegionComplex, z: &BitVector) -> i64 {
    z.first_one().map_or(0, |k| region.module.grading(k).to_integer())
}

/// HFK⁻ in Alexander gradings `s_range`, with the U-action into the next
/// lower column.
pub fn hfk_minus(c: &CfkComplex, s_range: std::ops::RangeInclusive<i64>) -> BTreeMap<i64, HfkMinusColumn> {
    let mut out = BTreeMap::new();
    for s in s_range {
        let here = ColumnHomology::new(c, s);
        let below = ColumnHomology::new(c, s - 1);
        let u_action = here
            .reps
            .iter()
            .map(|z| {
                let image = BitVector::from_indices(
                    below.region.basis.len(),
                    z.ones().map(|k| {
                        let (x, _) = here.region.basis[k];
                        below.region.position(x).expect("U-translate stays in the region")
                    }),
                );
                below.coordinates(&image)
            })
            .collect();
        let basis_gradings: Vec<i64> = here.reps.iter().map(|z| grading_of(&here.region, z)).collect();
        let mut ranks = BTreeMap::new();
        for m in &basis_gradings {
            *ranks.entry(*m).or_insert(0) += 1;
        }
        out.insert(s, HfkMinusColumn { ranks, basis_gradings, u_action });
    }
    out
}
