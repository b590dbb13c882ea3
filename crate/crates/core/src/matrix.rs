//! Dense matrices over an exact [`Field`].
//!
//! Vectors are columns: a matrix acts on the left of `Vec<Scalar>` coordinate
//! vectors. Row reduction is plain Gauss-Jordan, which is exact over both
//! supported fields.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::{residue, Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from its rows. Panics on ragged input.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { field, rows: n, cols, data }
    }

    pub fn from_columns(field: Field, columns: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Self::from_rows(field, rows, cols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                let start = i * out.cols;
                f.axpy(&mut out.data[start..start + other.cols], a, other.row(k));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = self.field;
        let support: Vec<usize> = (0..v.len()).filter(|&j| !f.is_zero(&v[j])).collect();
        if let Some(p) = f.small_prime() {
            let vs: Vec<(usize, u64)> = support.iter().map(|&j| (j, residue(&v[j]))).collect();
            return (0..self.rows)
                .map(|i| {
                    let row = self.row(i);
                    let acc: u128 = vs.iter().map(|&(j, x)| (residue(&row[j]) * x) as u128).sum();
                    Scalar::Mod((acc % p as u128) as u64)
                })
                .collect();
        }
        if support.len() * 2 > v.len() {
            return (0..self.rows).map(|i| f.dot(self.row(i), v)).collect();
        }
        let mut out = f.zero_vec(self.rows);
        for &j in &support {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, &v[j]));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.field.sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, a: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.field.scale(a, &self.data) }
    }

    /// `self += a * other`
    pub fn axpy(&mut self, a: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, a, &other.data);
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, &self[(i, i)]))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(&m[(i, c)])) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(&m[(r, c)]).expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = f.mul(&m[(r, j)], &inv);
            }
            let pivot_row = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r || f.is_zero(&m[(i, c)]) {
                    continue;
                }
                let factor = f.neg(&m[(i, c)]);
                let start = i * m.cols + c;
                f.axpy(&mut m.data[start..start + pivot_row.len()], &factor, &pivot_row);
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = f.zero_vec(self.cols);
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(&reduced[(r, fc)]);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = f.zero_vec(self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = f.one();
        }
        let Rref { reduced, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = reduced[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    /// Row reduction without the Gauss-Jordan back-substitution pass, used as
    /// an independent check: forward elimination then a separate backward sweep.
    fn naive_rref(m: &Matrix) -> Matrix {
        let f = m.field();
        let mut rows = m.row_vecs();
        let mut lead = 0;
        let mut pivots = Vec::new();
        for c in 0..m.cols() {
            if let Some(p) = (lead..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) {
                rows.swap(lead, p);
                let inv = f.inv(&rows[lead][c]).unwrap();
                rows[lead] = f.scale(&inv, &rows[lead]);
                for i in lead + 1..rows.len() {
                    let factor = f.neg(&rows[i][c]);
                    let pivot = rows[lead].clone();
                    f.axpy(&mut rows[i], &factor, &pivot);
                }
                pivots.push((lead, c));
                lead += 1;
            }
        }
        for &(r, c) in pivots.iter().rev() {
            for i in 0..r {
                let factor = f.neg(&rows[i][c]);
                let pivot = rows[r].clone();
                f.axpy(&mut rows[i], &factor, &pivot);
            }
        }
        Matrix::from_rows(f, rows, m.cols())
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = gf(5);
        let id = Matrix::identity(f, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);

        let z = Matrix::zeros(f, 2, 3);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let f = gf(5);
        let m = Matrix::from_i64(f, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::from_i64(f, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(naive_rref(&m), r.reduced);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(5);
        assert!(Matrix::identity(f, 3).kernel_basis().is_empty());
        let k = Matrix::zeros(f, 2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v, &f.unit_vec(3, i));
        }
        let k = Matrix::from_i64(f, &[&[1, 2]]).kernel_basis();
        assert_eq!(k, vec![vec![f.from_i64(3), f.one()]]);
    }

    #[test]
    fn inverse_and_solve() {
        let f = gf(7);
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let b = vec![f.from_i64(1), f.from_i64(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).solve(&b).is_none());
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6, prop::sample::select(vec![2u64, 3, 5, 7])).prop_flat_map(|(r, c, p)| {
            prop::collection::vec(0..p, r * c).prop_map(move |vals| {
                let f = Field::Prime(p);
                let rows = vals.chunks(c).map(|ch| ch.iter().map(|&v| Scalar::Mod(v)).collect()).collect();
                Matrix::from_rows(f, rows, c)
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in arb_matrix()) {
            let once = m.rref().reduced;
            prop_assert_eq!(once.rref().reduced, once.clone());
            prop_assert_eq!(naive_rref(&m), once);
        }

        #[test]
        fn rref_preserves_row_space(m in arb_matrix()) {
            let r = m.rref().reduced;
            // every original row is a combination of the reduced rows and vice versa
            let rt = r.transpose();
            let mt = m.transpose();
            for i in 0..m.rows() {
                prop_assert!(rt.solve(m.row(i)).is_some());
            }
            for i in 0..r.rows() {
                prop_assert!(mt.solve(r.row(i)).is_some());
            }
        }

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            for v in &kernel {
                prop_assert!(m.field().is_zero_vec(&m.mul_vec(v)));
            }
            let k = Matrix::from_rows(m.field(), kernel.clone(), m.cols());
            prop_assert_eq!(k.rank(), kernel.len());
        }
    }
}
