//! Subspaces of a coordinate space, kept in reduced row-echelon form so that
//! equal subspaces have identical representations.

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// Reduced echelon rows, sorted by pivot column.
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { field, ambient, rows: vec![], pivots: vec![] }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: (0..ambient).map(|i| field.unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Column space of a matrix.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), (0..m.cols()).map(|j| m.column(j)))
    }

    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.field(), m.cols(), m.kernel_basis())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Adds `v` to the span. Returns `true` when the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient space");
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pc]).unwrap();
        v = f.scale(&inv, &v);
        for row in &mut self.rows {
            if !f.is_zero(&row[pc]) {
                let factor = f.neg(&row[pc]);
                f.axpy(row, &factor, &v);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if !f.is_zero(&v[pc]) {
                let factor = f.neg(&v[pc]);
                f.axpy(&mut v, &factor, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let r = self.reduce(v.to_vec());
        self.field.is_zero_vec(&r)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = self.field.zero_vec(self.ambient);
        for (c, row) in coords.iter().zip(&self.rows) {
            self.field.axpy(&mut v, c, row);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a, b) = 0
        let f = self.field;
        let (du, dw) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(f, self.ambient, du + dw);
        for (j, u) in self.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, j)] = u[i].clone();
            }
        }
        for (j, w) in other.rows.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, du + j)] = f.neg(&w[i]);
            }
        }
        let vecs = m.kernel_basis().into_iter().map(|k| self.combine(&k[..du]));
        Subspace::span(f, self.ambient, vecs)
    }

    /// Image under a linear map given as a matrix.
    pub fn map(&self, m: &Matrix) -> Subspace {
        Subspace::span(self.field, m.rows(), self.rows.iter().map(|r| m.mul_vec(r)))
    }
}

/// A quotient `upper / lower` of nested subspaces with a canonical basis of
/// coset representatives.
///
/// The representatives span the normal forms of `upper` modulo `lower`; they
/// vanish on `lower`'s pivot columns, so coordinates are read off directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subquotient {
    lower: Subspace,
    reps: Subspace,
}

impl Subquotient {
    pub fn new(upper: &Subspace, lower: &Subspace) -> Self {
        debug_assert!(lower.is_subspace_of(upper));
        let reps =
            Subspace::span(upper.field(), upper.ambient(), upper.basis().iter().map(|u| lower.reduce(u.clone())));
        Subquotient { lower: lower.clone(), reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn lower(&self) -> &Subspace {
        &self.lower
    }

    /// Representatives of the basis cosets, as ambient vectors.
    pub fn representatives(&self) -> &[Vec<Scalar>] {
        self.reps.basis()
    }

    /// Ambient column that identifies each representative.
    pub fn pivots(&self) -> &[usize] {
        self.reps.pivots()
    }

    /// Coordinates of the coset of `v`; `None` if `v` is not in `upper`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.reps.coordinates(&self.lower.reduce(v.to_vec()))
    }

    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.reps.combine(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_representation() {
        let f = Field::prime(5).unwrap();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let a = Subspace::span(f, 3, [v(&[1, 2, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(f, 3, [v(&[1, 3, 1]), v(&[2, 4, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[1, 3, 1])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn subquotient_coordinates() {
        let f = Field::prime(7).unwrap();
        let full = Subspace::full(f, 3);
        let lower = Subspace::span(f, 3, [f.unit_vec(3, 1)]);
        let q = Subquotient::new(&full, &lower);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.pivots(), &[0, 2]);
        let c = q.coordinates(&[f.one(), f.from_i64(5), f.from_i64(2)]).unwrap();
        assert_eq!(c, vec![f.one(), f.from_i64(2)]);
    }

    proptest! {
        #[test]
        fn intersection_and_sum_dimensions(
            a in prop::collection::vec(prop::collection::vec(0u64..3, 5), 0..5),
            b in prop::collection::vec(prop::collection::vec(0u64..3, 5), 0..5),
        ) {
            let f = Field::Prime(3);
            let conv = |vs: Vec<Vec<u64>>| vs.into_iter().map(|v| v.into_iter().map(Scalar::Mod).collect::<Vec<_>>()).collect::<Vec<_>>();
            let u = Subspace::span(f, 5, conv(a));
            let w = Subspace::span(f, 5, conv(b));
            let s = u.sum(&w);
            let i = u.intersection(&w);
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&w));
        }
    }
}
