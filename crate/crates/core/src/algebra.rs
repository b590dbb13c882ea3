//! Finite-dimensional unital associative algebras given by structure constants.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::{residue, Field, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// Coordinates relative to an algebra's basis.
pub type Element = Vec<Scalar>;

#[derive(Debug, Clone)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    /// Sparse product table: entry `i * dim + j` lists the nonzero coordinates of `b_i b_j`.
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Element,
    /// Memoized [`Algebra::validate`]; cleared by [`Algebra::set_product`].
    validation: OnceLock<ValidationReport>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.labels == other.labels && self.table == other.table && self.unit == other.unit
    }
}

impl Eq for Algebra {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub associative: bool,
    pub unital: bool,
    /// First basis triple `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub failing_triple: Option<(usize, usize, usize)>,
    /// First basis index on which the declared unit fails.
    pub failing_unit: Option<usize>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.associative && self.unital
    }
}

impl Algebra {
    /// Builds an algebra from dense products `products[i][j] = b_i b_j`.
    pub fn from_products(
        field: Field,
        labels: Vec<String>,
        products: Vec<Vec<Element>>,
        unit: Element,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut alg = Algebra::zero_products(field, labels, unit)?;
        if products.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: products.len() });
        }
        for (i, row) in products.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            for (j, v) in row.into_iter().enumerate() {
                alg.set_product(i, j, v)?;
            }
        }
        Ok(alg)
    }

    /// An algebra with every product zero; fill with [`Algebra::set_product`].
    pub fn zero_products(field: Field, labels: Vec<String>, unit: Element) -> Result<Self> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: unit.len() });
        }
        Ok(Algebra { field, labels, table: vec![Vec::new(); dim * dim], unit, validation: OnceLock::new() })
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Element) -> Result<()> {
        let dim = self.dim();
        if v.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
        }
        if i >= dim || j >= dim {
            return Err(Error::InvalidInput(format!("basis index ({i}, {j}) out of range")));
        }
        self.validation = OnceLock::new();
        self.table[i * dim + j] = v.into_iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).collect();
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn zero(&self) -> Element {
        self.field.zero_vec(self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.field.unit_vec(self.dim(), i)
    }

    /// Nonzero coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_product_vec(&self, i: usize, j: usize) -> Element {
        let mut v = self.zero();
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Product of two elements; errors when either has the wrong length.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Result<Element> {
        for x in [a, b] {
            if x.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), got: x.len() });
            }
        }
        Ok(self.mul(a, b))
    }

    /// Product of two elements of the right length.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let f = self.field;
        let d = self.dim();
        debug_assert!(a.len() == d && b.len() == d);
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let entries = &self.table[i * d + j];
                if entries.is_empty() {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, s) in entries {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Scalar], e: usize) -> Element {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        self.mul(e, e) == e
    }

    /// Matrix of `x -> a x`.
    pub fn left_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for j in 0..d {
                for (k, s) in &self.table[i * d + j] {
                    m[(*k, j)] = f.add(&m[(*k, j)], &f.mul(ai, s));
                }
            }
        }
        m
    }

    /// Matrix of `x -> x a`.
    pub fn right_matrix(&self, a: &[Scalar]) -> Matrix {
        let f = self.field;
        let d = self.dim();
        let mut m = Matrix::zeros(f, d, d);
        for (j, aj) in a.iter().enumerate() {
            if f.is_zero(aj) {
                continue;
            }
            for i in 0..d {
                for (k, s) in &self.table[i * d + j] {
                    m[(*k, i)] = f.add(&m[(*k, i)], &f.mul(aj, s));
                }
            }
        }
        m
    }

    /// Associativity on basis triples with a dense residue table.
    fn first_nonassociative_mod(&self, p: u64) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let mut t = vec![0u64; d * d * d];
        for (ij, entries) in self.table.iter().enumerate() {
            for (k, c) in entries {
                t[ij * d + k] = residue(c);
            }
        }
        let at = |i: usize, j: usize| &t[(i * d + j) * d..(i * d + j + 1) * d];
        let (mut lhs, mut rhs) = (vec![0u64; d], vec![0u64; d]);
        // With p < 2^16 at most d <= 128 terms below 2^32 are summed, so
        // reduction can wait until the comparison.
        let lazy = p < 1 << 16;
        let reduce = |x: u64| if lazy { x } else { x % p };
        for i in 0..d {
            for j in 0..d {
                let bij = at(i, j);
                for k in 0..d {
                    lhs.fill(0);
                    rhs.fill(0);
                    for (l, &c) in bij.iter().enumerate().filter(|(_, c)| **c != 0) {
                        for (x, &y) in lhs.iter_mut().zip(at(l, k)) {
                            *x = reduce(*x + c * y);
                        }
                    }
                    for (m, &c) in at(j, k).iter().enumerate().filter(|(_, c)| **c != 0) {
                        for (x, &y) in rhs.iter_mut().zip(at(i, m)) {
                            *x = reduce(*x + c * y);
                        }
                    }
                    if lhs.iter().zip(&rhs).any(|(x, y)| x % p != y % p) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Associativity on basis triples and the unit law; computed once.
    pub fn validate(&self) -> ValidationReport {
        self.validation.get_or_init(|| self.check_axioms()).clone()
    }

    fn check_axioms(&self) -> ValidationReport {
        let d = self.dim();
        let f = self.field;
        let (mut lhs, mut rhs) = (f.zero_vec(d), f.zero_vec(d));
        // Adds `c * b_x b_y` into `out`.
        let accumulate = |out: &mut [Scalar], c: &Scalar, x: usize, y: usize| {
            for (k, s) in &self.table[x * d + y] {
                out[*k] = f.add(&out[*k], &f.mul(c, s));
            }
        };
        let mut failing_triple = None;
        if let Some(p) = f.small_prime().filter(|_| d <= 128) {
            failing_triple = self.first_nonassociative_mod(p);
        } else {
            'outer: for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        lhs.fill(f.zero());
                        rhs.fill(f.zero());
                        for (l, c) in &self.table[i * d + j] {
                            accumulate(&mut lhs, c, *l, k);
                        }
                        for (m, c) in &self.table[j * d + k] {
                            accumulate(&mut rhs, c, i, *m);
                        }
                        if lhs != rhs {
                            failing_triple = Some((i, j, k));
                            break 'outer;
                        }
                    }
                }
            }
        }
        let failing_unit = (0..d).find(|&i| {
            let b = self.basis_element(i);
            self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b
        });
        ValidationReport {
            associative: failing_triple.is_none(),
            unital: failing_unit.is_none(),
            failing_triple,
            failing_unit,
        }
    }

    /// Span of `u v` over bases of `u` and `v`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.field, self.dim());
        for a in u.basis() {
            let l = self.left_matrix(a);
            for b in v.basis() {
                out.insert(l.mul_vec(b));
                if out.dim() == self.dim() {
                    return out;
                }
            }
        }
        out
    }

    pub fn is_left_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let l = self.left_matrix(&self.basis_element(i));
            s.basis().iter().all(|v| s.contains(&l.mul_vec(v)))
        })
    }

    pub fn is_right_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let r = self.right_matrix(&self.basis_element(i));
            s.basis().iter().all(|v| s.contains(&r.mul_vec(v)))
        })
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        self.is_left_ideal(s) && self.is_right_ideal(s)
    }

    /// Two-sided ideal generated by the given elements.
    pub fn ideal_closure<I>(&self, generators: I) -> Subspace
    where
        I: IntoIterator<Item = Element>,
    {
        let d = self.dim();
        let lefts: Vec<Matrix> = (0..d).map(|i| self.left_matrix(&self.basis_element(i))).collect();
        let rights: Vec<Matrix> = (0..d).map(|i| self.right_matrix(&self.basis_element(i))).collect();
        let mut s = Subspace::zero(self.field, d);
        let mut queue: Vec<Element> = generators.into_iter().collect();
        while let Some(v) = queue.pop() {
            if !s.insert(v.clone()) {
                continue;
            }
            for m in lefts.iter().chain(&rights) {
                let w = m.mul_vec(&v);
                if !s.contains(&w) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// True when some power of the subspace is zero.
    pub fn is_nilpotent_subspace(&self, s: &Subspace) -> bool {
        let mut power = s.clone();
        loop {
            if power.is_zero() {
                return true;
            }
            let next = self.subspace_product(&power, s);
            if next.dim() == power.dim() {
                return false;
            }
            power = next;
        }
    }

    pub fn is_nilpotent_element(&self, a: &[Scalar]) -> bool {
        let mut p = a.to_vec();
        for _ in 0..self.dim() {
            if self.field.is_zero_vec(&p) {
                return true;
            }
            p = self.mul(&p, a);
        }
        self.field.is_zero_vec(&p)
    }

    /// `{x : x b_i = b_i x for all i}`
    pub fn center(&self) -> Subspace {
        let d = self.dim();
        let f = self.field;
        let mut system = Matrix::zeros(f, 0, d);
        for i in 0..d {
            let b = self.basis_element(i);
            // x -> x b - b x
            let m = self.right_matrix(&b).sub(&self.left_matrix(&b));
            system = system.vstack(&m);
        }
        Subspace::kernel(&system)
    }

    /// The subalgebra spanned by `basis`, presented in its echelon basis.
    ///
    /// `unit` is the element that acts as identity on the subalgebra; it need
    /// not be the unit of `self` (corner algebras `eAe` have unit `e`).
    pub fn subalgebra(&self, basis: &Subspace, unit: &[Scalar]) -> Result<Algebra> {
        let coords_of = |v: &[Scalar]| {
            basis
                .coordinates(v)
                .ok_or_else(|| Error::InvalidAlgebra("subspace is not closed under multiplication".into()))
        };
        let unit_coords = coords_of(unit)?;
        let labels: Vec<String> =
            basis.basis().iter().zip(basis.pivots()).map(|(v, &p)| self.element_label(v, p)).collect();
        let mut sub = Algebra::zero_products(self.field, labels, unit_coords)?;
        let f = self.field;
        let support: Vec<Vec<(usize, &Scalar)>> =
            basis.basis().iter().map(|v| v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).collect()).collect();
        let d = self.dim();
        for (i, su) in support.iter().enumerate() {
            for (j, sv) in support.iter().enumerate() {
                let mut out = f.zero_vec(d);
                for &(a, x) in su {
                    for &(b, y) in sv {
                        let entries = &self.table[a * d + b];
                        if entries.is_empty() {
                            continue;
                        }
                        let c = f.mul(x, y);
                        for (k, s) in entries {
                            out[*k] = f.add(&out[*k], &f.mul(&c, s));
                        }
                    }
                }
                sub.set_product(i, j, coords_of(&out)?)?;
            }
        }
        Ok(sub)
    }

    /// Label for a vector: the basis label when `v` is a basis vector, else the
    /// label of its pivot column marked as a combination.
    pub(crate) fn element_label(&self, v: &[Scalar], pivot: usize) -> String {
        let f = self.field;
        let support: Vec<usize> = (0..v.len()).filter(|&k| !f.is_zero(&v[k])).collect();
        if support.len() == 1 && f.is_one(&v[support[0]]) {
            self.labels[support[0]].clone()
        } else {
            format!("{}~", self.labels[pivot])
        }
    }

    /// Minimal polynomial of `a` inside the subalgebra with identity `one`,
    /// as monic coefficients (lowest degree first).
    pub fn minimal_polynomial(&self, a: &[Scalar], one: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut powers: Vec<Element> = vec![one.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let m = Matrix::from_columns(f, &powers, self.dim());
            if let Some(c) = m.solve(&next) {
                // next = sum c_i a^i  =>  x^k - sum c_i x^i
                let mut coeffs: Vec<Scalar> = c.iter().map(|ci| f.neg(ci)).collect();
                coeffs.push(f.one());
                return coeffs;
            }
            powers.push(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, polynomial_quotient, triangular};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn truncated_polynomial_products() {
        let a = polynomial_quotient(gf(5), 3);
        let x = a.basis_element(1);
        assert_eq!(a.mul(&x, &x), a.basis_element(2));
        assert_eq!(a.mul(&a.basis_element(2), &x), a.zero());
        assert!(a.validate().is_valid());
    }

    #[test]
    fn unit_law_on_random_elements() {
        use rand::SeedableRng;
        let a = triangular(3, gf(7));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let x = a.field().random_vec(&mut rng, a.dim());
            assert_eq!(a.mul(a.unit(), &x), x);
            assert_eq!(a.mul(&x, a.unit()), x);
        }
    }

    #[test]
    fn non_associative_witness() {
        let f = gf(5);
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        // e1 e1 = e2, e2 e1 = e1, everything else zero
        let products = vec![vec![v(&[0, 1]), v(&[0, 0])], vec![v(&[1, 0]), v(&[0, 0])]];
        let a = Algebra::from_products(f, vec!["e1".into(), "e2".into()], products, v(&[1, 0])).unwrap();
        let report = a.validate();
        assert!(!report.associative);
        assert_eq!(report.failing_triple, Some((0, 0, 0)));
    }

    #[test]
    fn non_unital_declared_unit() {
        let f = gf(5);
        let a = Algebra::from_products(f, vec!["e1".into()], vec![vec![vec![f.zero()]]], vec![f.one()]).unwrap();
        let report = a.validate();
        assert!(report.associative);
        assert!(!report.unital);
    }

    #[test]
    fn multiply_checks_lengths() {
        let a = polynomial_quotient(gf(5), 3);
        assert!(matches!(a.multiply(&[Scalar::Mod(1)], &a.basis_element(0)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn centers() {
        let f = gf(5);
        let m2 = matrix_algebra(2, f);
        let z = m2.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(m2.unit()));

        let comm = polynomial_quotient(f, 4);
        assert_eq!(comm.center(), Subspace::full(f, 4));

        let t = triangular(2, gf(7));
        let z = t.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(t.unit()));
    }

    #[test]
    fn subspace_products() {
        let f = gf(7);
        let a = polynomial_quotient(f, 3);
        let r = Subspace::span(f, 3, [a.basis_element(1), a.basis_element(2)]);
        assert_eq!(a.subspace_product(&r, &r), Subspace::span(f, 3, [a.basis_element(2)]));
        assert!(a.subspace_product(&r, &Subspace::zero(f, 3)).is_zero());
        let full = Subspace::full(f, 3);
        assert_eq!(a.subspace_product(&full, &full), full);
    }
}
