//! Standard families of algebras used as test instances and CLI outputs.

mod path;
mod random;
mod skew;

pub use path::{path_algebra, Arrow, PathAlgebra, QuiverSpec, Relation};
pub use random::{
    random_acyclic_quiver, random_radical_graded, random_relations, scramble, ComponentSpec, GradedProfile,
    RandomGraded,
};
pub use skew::{skew_group_algebra, two_armed_example, GroupAction, TwoArmedExample};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Field;

/// `k[x]/(x^n)` with basis `1, x, ..., x^(n-1)`.
pub fn polynomial_quotient(field: Field, n: usize) -> Algebra {
    assert!(n >= 1, "k[x]/(x^0) is the zero ring");
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut a = Algebra::zero_products(field, labels, field.unit_vec(n, 0)).unwrap();
    for i in 0..n {
        for j in 0..n - i {
            a.set_product(i, j, field.unit_vec(n, i + j)).unwrap();
        }
    }
    a
}

fn unit_label(n: usize, a: usize, b: usize) -> String {
    if n < 10 {
        format!("E{}{}", a + 1, b + 1)
    } else {
        format!("E{}_{}", a + 1, b + 1)
    }
}

/// Matrix units `E_ab` spanning the algebra of matrices with the given
/// pattern of allowed positions, under `E_ab E_cd = δ_bc E_ad`.
fn matrix_units(n: usize, field: Field, allowed: impl Fn(usize, usize) -> bool) -> Algebra {
    assert!(n >= 1);
    let pos: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| allowed(a, b)).collect();
    let d = pos.len();
    let index = |a: usize, b: usize| pos.iter().position(|&p| p == (a, b));
    let labels = pos.iter().map(|&(a, b)| unit_label(n, a, b)).collect();
    let mut unit = field.zero_vec(d);
    for a in 0..n {
        unit[index(a, a).unwrap()] = field.one();
    }
    let mut alg = Algebra::zero_products(field, labels, unit).unwrap();
    for (i, &(a, b)) in pos.iter().enumerate() {
        for (j, &(c, e)) in pos.iter().enumerate() {
            if b == c {
                alg.set_product(i, j, field.unit_vec(d, index(a, e).unwrap())).unwrap();
            }
        }
    }
    alg
}

/// Full matrix algebra `M_n(k)`, basis `E_ab` in row-major order.
pub fn matrix_algebra(n: usize, field: Field) -> Algebra {
    matrix_units(n, field, |_, _| true)
}

/// Upper-triangular `n x n` matrices, basis `E_ab` (a <= b) in row-major order.
pub fn triangular(n: usize, field: Field) -> Algebra {
    matrix_units(n, field, |a, b| a <= b)
}

/// Direct product of algebras over a common field.
pub fn direct_product(factors: &[Algebra]) -> Result<Algebra> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidInput("empty direct product".into()));
    };
    let field = first.field();
    if let Some(bad) = factors.iter().find(|a| a.field() != field) {
        return Err(Error::InvalidInput(format!("direct product mixes {} and {}", field, bad.field())));
    }
    let d: usize = factors.iter().map(Algebra::dim).sum();
    let mut labels = Vec::with_capacity(d);
    let mut unit: Element = Vec::with_capacity(d);
    let mut offsets = Vec::with_capacity(factors.len());
    for (k, a) in factors.iter().enumerate() {
        offsets.push(labels.len());
        labels.extend(a.labels().iter().map(|l| format!("{}.{}", k + 1, l)));
        unit.extend(a.unit().iter().cloned());
    }
    let mut alg = Algebra::zero_products(field, labels, unit)?;
    for (a, &off) in factors.iter().zip(&offsets) {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let mut v = field.zero_vec(d);
                for (k, c) in a.basis_product(i, j) {
                    v[off + k] = c.clone();
                }
                alg.set_product(off + i, off + j, v)?;
            }
        }
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{radical, radical_oracle, OracleLimits};

    #[test]
    fn small_families() {
        let f = Field::prime(5).unwrap();
        let k = matrix_algebra(1, f);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.unit(), &vec![f.one()]);

        let m2 = matrix_algebra(2, f);
        assert_eq!(m2.dim(), 4);
        assert!(m2.validate().is_valid());
        assert!(radical(&m2).unwrap().is_zero());

        let t = triangular(2, f);
        assert_eq!(t.dim(), 3);
        assert!(t.validate().is_valid());
        assert_eq!(radical_oracle(&t, &OracleLimits::default()).unwrap().dim(), 1);

        let p = direct_product(&[m2, t, polynomial_quotient(f, 3)]).unwrap();
        assert_eq!(p.dim(), 10);
        assert!(p.validate().is_valid());
        assert_eq!(radical(&p).unwrap().dim(), 3);
    }

    #[test]
    fn product_rejects_mixed_fields() {
        let a = matrix_algebra(1, Field::prime(5).unwrap());
        let b = matrix_algebra(1, Field::prime(7).unwrap());
        assert!(direct_product(&[a, b]).is_err());
    }
}
