//! Finite free chain modules over F₂ or F₂[w] and their homology.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use super::f2::{BitVector, Echelon};
use super::matrix::PolyMatrix;
use super::poly::FieldPoly;
use crate::error::CfkError;

pub type Grading = Ratio<i64>;

/// A free module with a distinguished basis, a grading on the basis and a
/// square differential. Column `j` of the differential is the boundary of
/// basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainModule {
    gradings: Vec<Grading>,
    differential: PolyMatrix,
    variable_degree: Grading,
}

impl FreeChainModule {
    /// Builds a module after checking ∂² = 0 and homogeneity.
    pub fn new(
        gradings: Vec<Grading>,
        differential: PolyMatrix,
        variable_degree: Grading,
    ) -> Result<Self, CfkError> {
        let m = Self::new_unchecked(gradings, differential, variable_degree);
        m.check()?;
        Ok(m)
    }

    pub fn new_unchecked(
        gradings: Vec<Grading>,
        differential: PolyMatrix,
        variable_degree: Grading,
    ) -> Self {
        assert_eq!(differential.rows(), gradings.len());
        assert_eq!(differential.cols(), gradings.len());
        Self { gradings, differential, variable_degree }
    }

    pub fn check(&self) -> Result<(), CfkError> {
        for (row, col, p) in self.differential.iter() {
            for k in p.exponents() {
                let lhs = self.gradings[row] - self.variable_degree * i64::from(k);
                if lhs != self.gradings[col] - 1 {
                    return Err(CfkError::Inhomogeneous { row, col });
                }
            }
        }
        let sq = self.differential.mul(&self.differential);
        if let Some((row, col, _)) = sq.iter().next() {
            return Err(CfkError::NotSquareZero(format!(
                "entry ({row}, {col}) of the squared differential is nonzero"
            )));
        }
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.gradings.len()
    }

    pub fn gradings(&self) -> &[Grading] {
        &self.gradings
    }

    pub fn grading(&self, i: usize) -> Grading {
        self.gradings[i]
    }

    pub fn differential(&self) -> &PolyMatrix {
        &self.differential
    }

    pub fn variable_degree(&self) -> Grading {
        self.variable_degree
    }

    fn is_variable_free(&self) -> bool {
        self.differential.iter().all(|(_, _, p)| p.is_one())
    }

    /// Boundaries of the basis elements as F₂ vectors, setting w = 1.
    /// Only meaningful for variable-free differentials.
    pub fn f2_columns(&self) -> Vec<BitVector> {
        let n = self.generator_count();
        let mut cols = vec![BitVector::zeros(n); n];
        for (r, c, _) in self.differential.iter() {
            cols[c].flip(r);
        }
        cols
    }

    /// Graded F₂ homology dimensions. Only defined for variable-free
    /// differentials.
    pub fn homology_f2(&self) -> Result<BTreeMap<Grading, usize>, CfkError> {
        if !self.is_variable_free() {
            return Err(CfkError::NotVariableFree);
        }
        let sq = self.differential.mul(&self.differential);
        if !sq.is_zero() {
            return Err(CfkError::NotSquareZero("differential squares to a nonzero map".into()));
        }
        let n = self.generator_count();
        let mut by_grading: BTreeMap<Grading, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.gradings.iter().enumerate() {
            by_grading.entry(*g).or_default().push(i);
        }
        let cols = self.f2_columns();
        let rank_from = |g: &Grading| -> usize {
            by_grading.get(g).map_or(0, |idx| {
                let mut e = Echelon::new(n);
                for &i in idx {
                    e.insert(&cols[i]);
                }
                e.rank()
            })
        };
        let mut out = BTreeMap::new();
        for (g, idx) in &by_grading {
            let dim = idx.len() - rank_from(g) - rank_from(&(g + 1));
            if dim > 0 {
                out.insert(*g, dim);
            }
        }
        Ok(out)
    }

    /// Rank of the differential over F₂ (variable-free case) or over the
    /// fraction field in general.
    pub fn differential_rank(&self) -> usize {
        super::snf::rank_over_fraction_field(&self.differential)
    }

    /// Homology over F₂[w] by graded cancellation; see [`GradedHomology`].
    pub fn graded_reduction(&self, track: Tracking) -> GradedHomology {
        GradedReducer::new(self, track).run()
    }
}

/// What extra data a graded reduction should record.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tracking {
    /// Cycle representatives of the surviving free generators.
    pub representatives: bool,
    /// Coordinate functionals onto the surviving free generators.
    pub projections: bool,
}

impl Tracking {
    pub const NONE: Tracking = Tracking { representatives: false, projections: false };
    pub const ALL: Tracking = Tracking { representatives: true, projections: true };
}

/// A vector in a free module with monomial-ish support: generator index to
/// polynomial coefficient.
pub type SparseVector = BTreeMap<usize, FieldPoly>;

/// Decomposition of the homology of a homogeneous free complex over F₂[w]
/// into free summands and cyclic torsion summands.
#[derive(Clone, Debug)]
pub struct GradedHomology {
    /// Basis elements that survive cancellation; their classes freely
    /// generate the free part, in the grading of the original element.
    pub free: Vec<usize>,
    /// `(target, w-exponent)` for each torsion summand F₂[w]/w^e, e > 0.
    pub torsion: Vec<(usize, u32)>,
    /// Cycle representative of each free generator, in original coordinates.
    pub representatives: Vec<SparseVector>,
    /// For each free generator `g`, a functional whose value on a cycle is
    /// the coefficient of `[g]` in its class (modulo torsion components).
    pub projections: Vec<SparseVector>,
}

impl GradedHomology {
    pub fn free_rank(&self) -> usize {
        self.free.len()
    }
}

struct GradedReducer {
    n: usize,
    cols: Vec<BTreeMap<usize, u32>>,
    rows: Vec<BTreeMap<usize, u32>>,
    queue: BTreeSet<(u32, usize, usize)>,
    alive: Vec<bool>,
    track: Tracking,
    reps: Vec<SparseVector>,
    proj: Vec<SparseVector>,
}

impl GradedReducer {
    fn new(m: &FreeChainModule, track: Tracking) -> Self {
        let n = m.generator_count();
        let mut cols = vec![BTreeMap::new(); n];
        let mut rows = vec![BTreeMap::new(); n];
        let mut queue = BTreeSet::new();
        for (r, c, p) in m.differential.iter() {
            let e = p.as_monomial().expect("homogeneous differential has monomial entries");
            cols[c].insert(r, e);
            rows[r].insert(c, e);
            queue.insert((e, r, c));
        }
        let unit = |i: usize| SparseVector::from([(i, FieldPoly::one())]);
        let reps = if track.representatives { (0..n).map(unit).collect() } else { Vec::new() };
        let proj = if track.projections { (0..n).map(unit).collect() } else { Vec::new() };
        Self { n, cols, rows, queue, alive: vec![true; n], track, reps, proj }
    }

    fn toggle(&mut self, row: usize, col: usize, e: u32) {
        match self.cols[col].get(&row).copied() {
            Some(old) => {
                assert_eq!(old, e, "inhomogeneous update at ({row}, {col})");
                self.cols[col].remove(&row);
                self.rows[row].remove(&col);
                self.queue.remove(&(e, row, col));
            }
            None => {
                self.cols[col].insert(row, e);
                self.rows[row].insert(col, e);
                self.queue.insert((e, row, col));
            }
        }
    }

    fn remove_line(&mut self, i: usize) {
        for (r, e) in std::mem::take(&mut self.cols[i]) {
            self.rows[r].remove(&i);
            self.queue.remove(&(e, r, i));
        }
        for (c, e) in std::mem::take(&mut self.rows[i]) {
            self.cols[c].remove(&i);
            self.queue.remove(&(e, i, c));
        }
        self.alive[i] = false;
    }

    fn run(mut self) -> GradedHomology {
        let mut torsion = Vec::new();
        while let Some(&(e, y, x)) = self.queue.iter().next() {
            let col_x: Vec<(usize, u32)> =
                self.cols[x].iter().filter(|(k, _)| **k != y).map(|(k, f)| (*k, *f)).collect();
            let row_y: Vec<(usize, u32)> =
                self.rows[y].iter().filter(|(z, _)| **z != x).map(|(z, g)| (*z, *g)).collect();
            for &(z, g) in &row_y {
                for &(k, f) in &col_x {
                    self.toggle(k, z, g + f - e);
                }
            }
            if self.track.representatives {
                let rx = self.reps[x].clone();
                for &(z, g) in &row_y {
                    add_shifted(&mut self.reps[z], &rx, g - e);
                }
            }
            if self.track.projections {
                let py = self.proj[y].clone();
                for &(k, f) in &col_x {
                    add_shifted(&mut self.proj[k], &py, f - e);
                }
            }
            self.remove_line(x);
            self.remove_line(y);
            if e > 0 {
                torsion.push((y, e));
            }
        }
        let free: Vec<usize> = (0..self.n).filter(|&i| self.alive[i]).collect();
        let pick = |v: &Vec<SparseVector>| -> Vec<SparseVector> {
            if v.is_empty() {
                Vec::new()
            } else {
                free.iter().map(|&i| v[i].clone()).collect()
            }
        };
        GradedHomology {
            representatives: pick(&self.reps),
            projections: pick(&self.proj),
            free,
            torsion,
        }
    }
}

/// `target += w^k * source`.
pub fn add_shifted(target: &mut SparseVector, source: &SparseVector, k: u32) {
    for (i, p) in source {
        let entry = target.entry(*i).or_default();
        *entry += &p.shift(k);
        if entry.is_zero() {
            target.remove(i);
        }
    }
}

/// Applies the differential to a sparse vector.
pub fn apply_differential(d: &PolyMatrix, v: &SparseVector) -> SparseVector {
    let mut out = SparseVector::new();
    for (r, c, p) in d.iter() {
        if let Some(coef) = v.get(&c) {
            let entry = out.entry(r).or_default();
            *entry += &(p * coef);
            if entry.is_zero() {
                out.remove(&r);
            }
        }
    }
    out
}

/// Pairing of a functional with a vector.
pub fn pair(functional: &SparseVector, v: &SparseVector) -> FieldPoly {
    let mut out = FieldPoly::zero();
    for (i, p) in v {
        if let Some(q) = functional.get(i) {
            out += &(p * q);
        }
    }
    out
}
