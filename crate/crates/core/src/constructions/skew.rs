//! Skew group algebras `Λ#G` for cyclic groups acting by algebra automorphisms.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

use super::path::{path_algebra, PathAlgebra, QuiverSpec};

/// A cyclic group of the given order acting through a generator `σ`, given by
/// the images of the basis elements of `Λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    pub order: usize,
    pub generator: Vec<Element>,
}

impl GroupAction {
    fn matrix(&self, lambda: &Algebra) -> Matrix {
        Matrix::from_columns(lambda.field(), &self.generator, lambda.dim())
    }

    /// Checks that `σ` is a unital algebra automorphism with `σ^order = id`.
    pub fn verify(&self, lambda: &Algebra) -> Result<()> {
        let d = lambda.dim();
        let f = lambda.field();
        if self.order == 0 {
            return Err(Error::InvalidInput("group order must be positive".into()));
        }
        if self.generator.len() != d || self.generator.iter().any(|v| v.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: self.generator.len() });
        }
        let s = self.matrix(lambda);
        if s.inverse().is_none() {
            return Err(Error::InvalidInput("action is not invertible".into()));
        }
        if s.mul_vec(lambda.unit()) != *lambda.unit() {
            return Err(Error::InvalidInput("action does not fix the unit".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = s.mul_vec(&lambda.basis_product_vec(i, j));
                let rhs = lambda.mul(&self.generator[i], &self.generator[j]);
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!(
                        "action is not multiplicative on ({}, {})",
                        lambda.labels()[i],
                        lambda.labels()[j]
                    )));
                }
            }
        }
        let mut power = Matrix::identity(f, d);
        for _ in 0..self.order {
            power = s.mul(&power);
        }
        if power != Matrix::identity(f, d) {
            return Err(Error::InvalidInput(format!("generator does not satisfy s^{} = 1", self.order)));
        }
        Ok(())
    }
}

/// `Λ#G` with basis `b ⊗ σ^t` (index `i * order + t`) and product
/// `(a ⊗ σ^s)(b ⊗ σ^t) = a σ^s(b) ⊗ σ^(s+t)`.
pub fn skew_group_algebra(lambda: &Algebra, action: &GroupAction) -> Result<Algebra> {
    let f = lambda.field();
    let g = action.order;
    let p = f.characteristic();
    if p != 0 && (g as u64).is_multiple_of(p) {
        return Err(Error::BadCharacteristic { characteristic: p, order: g });
    }
    action.verify(lambda)?;
    let d = lambda.dim();
    let s = action.matrix(lambda);
    let mut powers = vec![Matrix::identity(f, d)];
    for t in 1..g {
        powers.push(s.mul(&powers[t - 1]));
    }
    let n = d * g;
    let labels = (0..n)
        .map(|k| {
            let (i, t) = (k / g, k % g);
            match t {
                0 => format!("{}#1", lambda.labels()[i]),
                1 => format!("{}#s", lambda.labels()[i]),
                _ => format!("{}#s^{t}", lambda.labels()[i]),
            }
        })
        .collect();
    let mut unit = f.zero_vec(n);
    for (i, c) in lambda.unit().iter().enumerate() {
        unit[i * g] = c.clone();
    }
    let mut alg = Algebra::zero_products(f, labels, unit)?;
    for i in 0..d {
        let a = lambda.basis_element(i);
        for sa in 0..g {
            for j in 0..d {
                let prod = lambda.mul(&a, &powers[sa].column(j));
                for tb in 0..g {
                    let st = (sa + tb) % g;
                    let mut v = f.zero_vec(n);
                    for (k, c) in prod.iter().enumerate() {
                        v[k * g + st] = c.clone();
                    }
                    alg.set_product(i * g + sa, j * g + tb, v)?;
                }
            }
        }
    }
    Ok(alg)
}

/// The two-armed quiver `2 <- 1 -> 2'`, `2 -> 3`, `2' -> 3'` with the
/// involution swapping the arms, and its skew group algebra.
#[derive(Debug, Clone)]
pub struct TwoArmedExample {
    pub lambda: PathAlgebra,
    pub action: GroupAction,
    pub skew: Algebra,
    /// Block sizes of the expected quiver's vertices.
    pub expected_block_sizes: Vec<usize>,
    /// Arrows `(from, to)` of the expected quiver, 0-based.
    pub expected_arrows: Vec<(usize, usize)>,
}

pub fn two_armed_example(field: Field) -> Result<TwoArmedExample> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic { characteristic: 2, order: 2 });
    }
    let q = QuiverSpec::new(
        &["1", "2", "3", "2'", "3'"],
        &[("alpha", 0, 1), ("beta", 1, 2), ("alpha'", 0, 3), ("beta'", 3, 4)],
    );
    let lambda = path_algebra(field, &q, &[], None)?;
    let vertex_perm = [0, 3, 4, 1, 2];
    let arrow_perm = [2, 3, 0, 1];
    let generator = quiver_automorphism(&lambda, &vertex_perm, &arrow_perm)?;
    let action = GroupAction { order: 2, generator };
    let skew = skew_group_algebra(&lambda.algebra, &action)?;
    Ok(TwoArmedExample {
        lambda,
        action,
        skew,
        expected_block_sizes: vec![2, 1, 1, 2],
        expected_arrows: vec![(1, 0), (0, 3), (2, 0)],
    })
}

/// Images of the basis paths under a permutation of vertices and arrows.
pub fn quiver_automorphism(pa: &PathAlgebra, vertex_perm: &[usize], arrow_perm: &[usize]) -> Result<Vec<Element>> {
    let q = &pa.quiver;
    for (a, arrow) in q.arrows.iter().enumerate() {
        let img = &q.arrows[arrow_perm[a]];
        if img.from != vertex_perm[arrow.from] || img.to != vertex_perm[arrow.to] {
            return Err(Error::InvalidInput(format!("arrow permutation does not respect {}", arrow.name)));
        }
    }
    // each basis element is a path; map it arrow by arrow
    let d = pa.algebra.dim();
    let mut images = Vec::with_capacity(d);
    for i in 0..d {
        let b = pa.algebra.basis_element(i);
        let image = (0..q.vertices.len())
            .find(|&v| pa.vertex_idempotent(v) == b)
            .map(|v| pa.vertex_idempotent(vertex_perm[v]))
            .or_else(|| {
                let arrows = pa.basis_arrows(i);
                let mapped: Vec<usize> = arrows.iter().map(|&a| arrow_perm[a]).collect();
                pa.path_element(0, &mapped)
            })
            .ok_or_else(|| Error::InvalidInput("path image outside the algebra".into()))?;
        images.push(image);
    }
    Ok(images)
}
