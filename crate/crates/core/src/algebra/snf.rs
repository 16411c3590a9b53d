//! Smith normal form over F₂[w].
//!
//! F₂[w] is Euclidean, so the usual pivot-and-divide loop terminates. The
//! pivot is always a minimal-degree nonzero entry of the remaining block,
//! ties broken by (row, col), which makes the output a pure function of the
//! input.

use super::matrix::PolyMatrix;
use super::poly::FieldPoly;

/// `original = row_transform * D * col_transform`, where `D` is the
/// `rows x cols` matrix carrying `diagonal` on its main diagonal.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diagonal: Vec<FieldPoly>,
    pub row_transform: PolyMatrix,
    pub col_transform: PolyMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix `D` with the original shape.
    pub fn diagonal_matrix(&self) -> PolyMatrix {
        let mut d = PolyMatrix::zeros(self.row_transform.rows(), self.col_transform.rows());
        for (i, p) in self.diagonal.iter().enumerate() {
            d.set(i, i, p.clone());
        }
        d
    }
}

pub fn snf(m: &PolyMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_dense();
    let mut p = PolyMatrix::identity(rows).to_dense();
    let mut q = PolyMatrix::identity(cols).to_dense();
    let n = rows.min(cols);

    'outer: for t in 0..n {
        loop {
            let Some((pi, pj)) = min_degree_entry(&a, t) else {
                break 'outer;
            };
            if pi != t {
                a.swap(pi, t);
                for row in p.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                q.swap(pj, t);
            }

            let pivot = a[t][t].clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let (quot, rem) = a[i][t].div_rem(&pivot);
                // row_i += quot * row_t; P gains quot * P[:, i] in column t
                for j in t..cols {
                    let delta = &quot * &a[t][j];
                    a[i][j] += &delta;
                }
                for row in p.iter_mut() {
                    let delta = &quot * &row[i];
                    row[t] += &delta;
                }
                dirty |= !rem.is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let (quot, rem) = a[t][j].div_rem(&pivot);
                // col_j += quot * col_t; Q gains quot * Q[j, :] in row t
                for row in a.iter_mut().skip(t) {
                    let delta = &quot * &row[t];
                    row[j] += &delta;
                }
                let qj = q[j].clone();
                for (k, x) in qj.iter().enumerate() {
                    let delta = &quot * x;
                    q[t][k] += &delta;
                }
                dirty |= !rem.is_zero();
            }
            if dirty {
                continue;
            }

            // The pivot must divide the rest of the block.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !pivot.divides(&a[i][j]));
            match offender {
                Some((i, _)) => {
                    // row_t += row_i; P[:, i] += P[:, t]
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += &v;
                    }
                    for row in p.iter_mut() {
                        let v = row[t].clone();
                        row[i] += &v;
                    }
                }
                None => break,
            }
        }
    }

    let diagonal = (0..n).map(|i| a[i][i].clone()).collect();
    SnfResult {
        diagonal,
        row_transform: PolyMatrix::from_dense(p),
        col_transform: PolyMatrix::from_dense(q),
    }
}

fn min_degree_entry(a: &[Vec<FieldPoly>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u32, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if let Some(d) = x.degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Rank over the fraction field F₂(w): the number of nonzero invariant factors.
pub fn rank_over_fraction_field(m: &PolyMatrix) -> usize {
    snf(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(k: u32) -> FieldPoly {
        FieldPoly::monomial(k)
    }

    fn check(m: &PolyMatrix, r: &SnfResult) {
        let rebuilt = r.row_transform.mul(&r.diagonal_matrix()).mul(&r.col_transform);
        assert_eq!(&rebuilt, m);
        for pair in r.diagonal.windows(2) {
            assert!(pair[0].divides(&pair[1]), "{:?} does not divide {:?}", pair[0], pair[1]);
        }
    }

    /// Determinant over F₂[w] by cofactor expansion; fine for the small sizes used here.
    fn det(m: &[Vec<FieldPoly>]) -> FieldPoly {
        let n = m.len();
        if n == 0 {
            return FieldPoly::one();
        }
        let mut acc = FieldPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<FieldPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            acc += &(&m[0][j] * &det(&minor));
        }
        acc
    }

    #[test]
    fn unit_matrix() {
        let m = PolyMatrix::from_dense(vec![vec![FieldPoly::one()]]);
        let r = snf(&m);
        assert_eq!(r.diagonal, vec![FieldPoly::one()]);
        check(&m, &r);
    }

    #[test]
    fn upper_triangular_w_block() {
        let m = PolyMatrix::from_dense(vec![vec![w(1), w(0)], vec![FieldPoly::zero(), w(1)]]);
        let r = snf(&m);
        assert_eq!(r.diagonal, vec![FieldPoly::one(), w(2)]);
        check(&m, &r);
    }

    #[test]
    fn zero_matrix() {
        let m = PolyMatrix::zeros(2, 2);
        let r = snf(&m);
        assert_eq!(r.diagonal, vec![FieldPoly::zero(), FieldPoly::zero()]);
        assert_eq!(rank_over_fraction_field(&m), 0);
    }

    #[test]
    fn fraction_field_rank() {
        assert_eq!(rank_over_fraction_field(&PolyMatrix::from_dense(vec![vec![w(1)]])), 1);
    }

    #[test]
    fn non_divisible_diagonal_gets_fixed() {
        // diag(w, w + 1): gcd 1, so the invariant factors are 1 and w(w+1).
        let m = PolyMatrix::from_dense(vec![
            vec![w(1), FieldPoly::zero()],
            vec![FieldPoly::zero(), FieldPoly::from_exponents([1, 0])],
        ]);
        let r = snf(&m);
        assert_eq!(r.diagonal, vec![FieldPoly::one(), FieldPoly::from_exponents([2, 1])]);
        check(&m, &r);
    }

    fn matrix() -> impl Strategy<Value = PolyMatrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(
                proptest::collection::vec(0u32..=4, 0..3).prop_map(FieldPoly::from_exponents),
                r * c,
            )
            .prop_map(move |v| {
                let rows = v.chunks(c).map(|ch| ch.to_vec()).collect();
                PolyMatrix::from_dense(rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn transforms_reproduce_input_and_are_unimodular(m in matrix()) {
            let r = snf(&m);
            check(&m, &r);
            prop_assert!(det(&r.row_transform.to_dense()).is_one());
            prop_assert!(det(&r.col_transform.to_dense()).is_one());
        }
    }
}
