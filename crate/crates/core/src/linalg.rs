//! Exact linear algebra over the rationals: Gaussian elimination, kernel
//! bases, incremental rank tracking, and the small dense matrices used by
//! the matrix representation oracle.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::Rat;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RatMatrix::zero(dim, dim);
        for i in 0..dim {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = &*v * c;
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(&other.data) {
            *v += w;
        }
        out
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<Rat> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let c = self.at(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { c.clone() } else { Rat::zero() };
                if self.at(i, j) != &expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let pivot_row = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let pr = match pivot_row {
                None => continue,
                Some(pr) => pr,
            };
            self.swap_rows(row, pr);
            let inv = self.at(row, col).clone().recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let v = self.at(r, c) - &(self.at(row, c) * &factor);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                // pivot entry is 1, so x_p = -M[r][f]
                v[p] = -m.at(r, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solution of `M x = b` when it exists and is unique.
    pub fn solve_unique(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RatMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        if pivots.len() != self.cols {
            return None; // underdetermined
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained row space in reduced echelon form; used for
/// exact rank updates when closing a set of vectors under an action.
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; inserts the remainder and
    /// returns true if it was independent.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.cols {
                    let delta = &row[c] * &factor;
                    v[c] -= delta;
                }
            }
        }
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            None => return false,
            Some(p) => p,
        };
        let inv = v[pivot].clone().recip();
        for x in &mut v {
            *x = &*x * &inv;
        }
        // Keep the basis reduced above the new pivot.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for c in 0..self.cols {
                    let delta = &v[c] * &factor;
                    row[c] -= delta;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn rref_and_rank() {
        let mut m = RatMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(1), int(0), int(1)],
        ]);
        assert_eq!(m.rank(), 2);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = RatMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
        ]);
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            // Mv = 0 exactly.
            for r in 0..m.rows() {
                let dot: Rat = m.row(r).iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_unique_system() {
        let m = RatMatrix::from_rows(vec![vec![int(2), int(1)], vec![int(1), int(-1)]]);
        let x = m.solve_unique(&[int(5), int(1)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);

        // Inconsistent system.
        let m = RatMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(1)]]);
        assert!(m.solve_unique(&[int(0), int(1)]).is_none());
    }

    #[test]
    fn row_space_ranks() {
        let mut rs = RowSpace::new(3);
        assert!(rs.insert(vec![int(1), int(2), int(3)]));
        assert!(rs.insert(vec![int(0), int(1), int(1)]));
        assert!(!rs.insert(vec![int(1), int(3), int(4)]));
        assert_eq!(rs.rank(), 2);
        assert!(rs.insert(vec![rat(1, 2), int(0), int(0)]));
        assert_eq!(rs.rank(), 3);
    }

    #[test]
    fn matrix_products() {
        let a = RatMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]);
        let i = RatMatrix::identity(2);
        assert_eq!(a.mul(&i), a);
        let sq = a.mul(&a);
        assert_eq!(sq.at(0, 0), &int(7));
        assert_eq!(sq.at(1, 1), &int(22));
        assert_eq!(
            i.scale(&rat(5, 2)).as_scalar_multiple_of_identity(),
            Some(rat(5, 2))
        );
        assert_eq!(a.as_scalar_multiple_of_identity(), None);
    }
}
