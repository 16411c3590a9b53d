//! Dense linear algebra over F₂ on packed bit vectors.

use super::poly::FieldPoly;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Row-echelon basis of a subspace, pivoting on the lowest set index.
///
/// Each stored row optionally carries a companion vector recording which
/// inserted vectors it is a combination of.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, BitVector, BitVector)>,
    inserted: usize,
    track: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self::with_tracking(dim, 0)
    }

    /// Tracks combinations of up to `capacity` inserted vectors.
    pub fn with_tracking(dim: usize, capacity: usize) -> Self {
        Self { dim, rows: Vec::new(), inserted: 0, track: capacity }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder and the
    /// combination of basis rows that was used.
    fn reduce_tracked(&self, v: &BitVector) -> (BitVector, BitVector) {
        let mut v = v.clone();
        let mut combo = BitVector::zeros(self.track);
        for (pivot, row, c) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (v, combo)
    }

    /// Normal form of `v` modulo the span; zero iff `v` is in the span.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (pivot, row, _) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`. Returns `None` if it was independent, or the dependency
    /// (a combination of earlier inserted vectors plus this one summing to
    /// zero) when tracking is enabled.
    pub fn insert(&mut self, v: &BitVector) -> Option<BitVector> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let idx = self.inserted;
        self.inserted += 1;
        let (r, mut combo) = self.reduce_tracked(v);
        if self.track > 0 {
            assert!(idx < self.track, "tracking capacity exceeded");
            combo.flip(idx);
        }
        match r.first_one() {
            None => Some(combo),
            Some(p) => {
                // keep rows fully reduced at the new pivot so reduce() stays single-pass
                for (_, row, c) in self.rows.iter_mut() {
                    if row.get(p) {
                        row.xor_assign(&r);
                        c.xor_assign(&combo);
                    }
                }
                let pos = self.rows.partition_point(|(q, _, _)| *q < p);
                self.rows.insert(pos, (p, r, combo));
                None
            }
        }
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _, _)| *p)
    }

    pub fn basis(&self) -> impl Iterator<Item = &BitVector> {
        self.rows.iter().map(|(_, r, _)| r)
    }
}

/// Rank of a list of vectors.
pub fn rank(dim: usize, vectors: &[BitVector]) -> usize {
    let mut e = Echelon::new(dim);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Basis of the kernel of the linear map sending the `i`-th unit vector to
/// `columns[i]` (each of length `target_dim`). Kernel vectors have length
/// `columns.len()`.
pub fn kernel(target_dim: usize, columns: &[BitVector]) -> Vec<BitVector> {
    let mut e = Echelon::with_tracking(target_dim, columns.len());
    columns.iter().filter_map(|c| e.insert(c)).map(|mut k| {
        // companion vectors were sized to the capacity, which equals the column count
        k.len = columns.len();
        k
    }).collect()
}

/// Image of a vector under the map whose columns are given.
pub fn apply(target_dim: usize, columns: &[BitVector], v: &BitVector) -> BitVector {
    let mut out = BitVector::zeros(target_dim);
    for i in v.ones() {
        out.xor_assign(&columns[i]);
    }
    out
}

/// For each target, whether it lies in the F₂-span of `span`.
pub fn membership_solve(targets: &[BitVector], span: &[BitVector]) -> Vec<bool> {
    let dim = targets.first().or(span.first()).map_or(0, BitVector::len);
    let mut e = Echelon::new(dim);
    for v in span {
        e.insert(v);
    }
    targets.iter().map(|t| e.contains(t)).collect()
}

/// Expands a vector over the truncated ring F₂[w]/w^N into F₂ coordinates:
/// entry `i` contributes bit `i * N + k` for each exponent `k < N`.
pub fn expand_truncated(v: &[FieldPoly], truncation: usize) -> BitVector {
    let mut out = BitVector::zeros(v.len() * truncation);
    for (i, p) in v.iter().enumerate() {
        for k in p.exponents() {
            if (k as usize) < truncation {
                out.flip(i * truncation + k as usize);
            }
        }
    }
    out
}

/// Span membership over F₂[w]/w^N. The span of a vector over the truncated
/// ring includes all of its `w^k` multiples, so each spanning vector is
/// expanded together with its shifts.
pub fn membership_solve_truncated(
    targets: &[Vec<FieldPoly>],
    span: &[Vec<FieldPoly>],
    truncation: usize,
) -> Vec<bool> {
    let expanded_span: Vec<BitVector> = span
        .iter()
        .flat_map(|v| {
            (0..truncation as u32).map(move |k| {
                let shifted: Vec<FieldPoly> = v.iter().map(|p| p.shift(k)).collect();
                expand_truncated(&shifted, truncation)
            })
        })
        .collect();
    let expanded_targets: Vec<BitVector> =
        targets.iter().map(|t| expand_truncated(t, truncation)).collect();
    membership_solve(&expanded_targets, &expanded_span)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let e1 = BitVector::from_indices(2, [0]);
        let e2 = BitVector::from_indices(2, [1]);
        let e12 = BitVector::from_indices(2, [0, 1]);
        assert_eq!(membership_solve(std::slice::from_ref(&e1), &[e12, e2.clone()]), vec![true]);
        assert_eq!(membership_solve(&[e1], &[e2]), vec![false]);
    }

    #[test]
    fn truncated_membership_uses_multiples() {
        // target (w, 0) is w * (1, 0) but not in the F₂-span of {(1, w)} alone
        let target = vec![FieldPoly::monomial(1), FieldPoly::zero()];
        let span = vec![vec![FieldPoly::one(), FieldPoly::zero()]];
        assert_eq!(membership_solve_truncated(std::slice::from_ref(&target), &span, 3), vec![true]);
        let span = vec![vec![FieldPoly::one(), FieldPoly::monomial(1)]];
        assert_eq!(membership_solve_truncated(&[target], &span, 3), vec![false]);
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let c = vec![
            BitVector::from_indices(3, [0, 1]),
            BitVector::from_indices(3, [1, 2]),
            BitVector::from_indices(3, [0, 2]),
        ];
        let k = kernel(3, &c);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], BitVector::from_indices(3, [0, 1, 2]));
        assert!(apply(3, &c, &k[0]).is_zero());
    }

    #[test]
    fn reduce_is_normal_form() {
        let mut e = Echelon::new(4);
        e.insert(&BitVector::from_indices(4, [1, 3]));
        e.insert(&BitVector::from_indices(4, [0, 1]));
        let v = BitVector::from_indices(4, [0, 2]);
        let r = e.reduce(&v);
        for p in e.pivots() {
            assert!(!r.get(p));
        }
        assert_eq!(rank(4, &[v.clone(), v]), 1);
    }
}
