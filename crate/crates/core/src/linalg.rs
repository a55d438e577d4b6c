//! Dense matrices over a [`FiniteField`]: echelon forms, ranks and row-space
//! intersection.

use crate::field::{FieldElement, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElement>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Sub-matrix made of the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let rows = (0..self.rows)
            .map(|i| cols.iter().map(|&j| self[(i, j)]).collect())
            .collect();
        Matrix::from_rows(cols.len(), rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form with first-nonzero pivoting.
    /// Returns the pivot columns.
    pub fn rref_in_place(&mut self, f: &FiniteField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, c)]).unwrap();
            for j in c..self.cols {
                let v = self[(r, j)];
                self[(r, j)] = f.mul(v, inv);
            }
            let pivot_row: Vec<FieldElement> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                let nf = f.neg(factor);
                for (off, &pv) in pivot_row.iter().enumerate() {
                    if pv.is_zero() {
                        continue;
                    }
                    let j = c + off;
                    self[(i, j)] = f.add(self[(i, j)], f.mul(nf, pv));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self, f: &FiniteField) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(f);
        (m, p)
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        self.rref(f).1.len()
    }

    /// Canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self, f: &FiniteField) -> Matrix {
        let (m, pivots) = self.rref(f);
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Matrix::from_rows(self.cols, rows)
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, f: &FiniteField, v: &[FieldElement]) -> bool {
        let base = self.rank(f);
        let ext = self.vstack(&Matrix::from_rows(self.cols, vec![v.to_vec()]));
        ext.rank(f) == base
    }

    /// Basis of `{x : self * x = 0}`, one basis vector per free column.
    pub fn right_kernel(&self, f: &FiniteField) -> Vec<Vec<FieldElement>> {
        let (m, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![FieldElement::ZERO; self.cols];
                x[fc] = FieldElement::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = f.neg(m[(i, fc)]);
                }
                x
            })
            .collect()
    }

    /// `v * self` for a row vector `v`.
    pub fn left_mul(&self, f: &FiniteField, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Row-space intersection by Zassenhaus: reduce `[[A, A], [B, 0]]`; rows whose
/// left half vanished carry a basis of `rowspace(A) ∩ rowspace(B)` in their
/// right half. The result is returned in canonical RREF.
pub fn rowspace_intersection(f: &FiniteField, a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.cols(), b.cols(), "column counts differ");
    let n = a.cols();
    let mut block = Matrix::zeros(a.rows() + b.rows(), 2 * n);
    for i in 0..a.rows() {
        for j in 0..n {
            block[(i, j)] = a[(i, j)];
            block[(i, n + j)] = a[(i, j)];
        }
    }
    for i in 0..b.rows() {
        for j in 0..n {
            block[(a.rows() + i, j)] = b[(i, j)];
        }
    }
    let pivots = block.rref_in_place(f);
    let rows: Vec<Vec<FieldElement>> = pivots
        .iter()
        .enumerate()
        .filter(|(_, &c)| c >= n)
        .map(|(i, _)| block.row(i)[n..].to_vec())
        .collect();
    Matrix::from_rows(n, rows).row_space_basis(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &FiniteField, rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix {
        let rows = (0..r)
            .map(|_| (0..c).map(|_| f.el(rng.gen_range(0..f.order()))).collect())
            .collect();
        Matrix::from_rows(c, rows)
    }

    #[test]
    fn identity_intersection() {
        let f = FiniteField::new(3, 2).unwrap();
        let i = Matrix::identity(4);
        assert_eq!(rowspace_intersection(&f, &i, &i), i);
    }

    #[test]
    fn disjoint_spaces_give_empty_basis() {
        let f = FiniteField::new(2, 2).unwrap();
        let one = FieldElement::ONE;
        let zero = FieldElement::ZERO;
        let a = Matrix::from_rows(3, vec![vec![one, zero, zero]]);
        let b = Matrix::from_rows(3, vec![vec![zero, one, zero], vec![zero, zero, one]]);
        assert_eq!(rowspace_intersection(&f, &a, &b).rows(), 0);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = FiniteField::new(5, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random_matrix(&f, &mut rng, 3, 7);
        let ker = m.right_kernel(&f);
        assert_eq!(ker.len(), 7 - m.rank(&f));
        let mt = m.transpose();
        for x in ker {
            assert!(mt.left_mul(&f, &x).iter().all(|v| v.is_zero()));
        }
    }

    #[test]
    fn intersection_dimension_identity() {
        let f = FiniteField::new(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let shared = random_matrix(&f, &mut rng, 2, 8);
            let (ea, eb) = (rng.gen_range(0..4), rng.gen_range(0..4));
            let a = shared.vstack(&random_matrix(&f, &mut rng, ea, 8));
            let b = shared.vstack(&random_matrix(&f, &mut rng, eb, 8));
            let meet = rowspace_intersection(&f, &a, &b);
            let (ra, rb) = (a.rank(&f), b.rank(&f));
            let sum = a.vstack(&b).rank(&f);
            assert_eq!(meet.rows(), ra + rb - sum);
            for i in 0..meet.rows() {
                assert!(a.row_space_contains(&f, meet.row(i)));
                assert!(b.row_space_contains(&f, meet.row(i)));
            }
        }
    }
}
