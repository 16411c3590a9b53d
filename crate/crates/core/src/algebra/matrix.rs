use std::collections::BTreeMap;

use super::poly::FieldPoly;

/// Sparse matrix over F₂[w]. Absent entries are zero and zero entries are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), FieldPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldPoly::one());
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<FieldPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> FieldPoly {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<&FieldPoly> {
        self.entries.get(&(row, col))
    }

    pub fn set(&mut self, row: usize, col: usize, value: FieldPoly) {
        assert!(row < self.rows && col < self.cols, "index ({row}, {col}) out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: &FieldPoly) {
        let cur = self.get(row, col);
        self.set(row, col, &cur + value);
    }

    /// Iterates over stored nonzero entries in (row, col) order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &FieldPoly)> {
        self.entries.iter().map(|(&(r, c), p)| (r, c, p))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Vec<FieldPoly>> {
        let mut d = vec![vec![FieldPoly::zero(); self.cols]; self.rows];
        for (r, c, p) in self.iter() {
            d[r][c] = p.clone();
        }
        d
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut by_row: BTreeMap<usize, Vec<(usize, &FieldPoly)>> = BTreeMap::new();
        for (r, c, p) in other.iter() {
            by_row.entry(r).or_default().push((c, p));
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for (i, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        out
    }

    /// Largest degree among stored entries.
    pub fn max_degree(&self) -> Option<u32> {
        self.entries.values().filter_map(FieldPoly::degree).max()
    }
}
