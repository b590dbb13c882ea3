//! Graded algebras, the associated graded algebra `gr A`, and the
//! radical-graded predicate.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::radical::{chain_from_radical, radical, RadicalChain};
use crate::subspace::{Subquotient, Subspace};

/// An algebra with a homogeneous basis: `degrees[i]` is the degree of `b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub algebra: Algebra,
    pub degrees: Vec<usize>,
}

impl GradedAlgebra {
    pub fn new(algebra: Algebra, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), got: degrees.len() });
        }
        Ok(GradedAlgebra { algebra, degrees })
    }

    /// Everything in degree 0.
    pub fn trivial(algebra: Algebra) -> Self {
        let d = algebra.dim();
        GradedAlgebra { algebra, degrees: vec![0; d] }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn indices_of_degree(&self, m: usize) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == m).collect()
    }

    /// `A_m` as a subspace.
    pub fn component(&self, m: usize) -> Subspace {
        let a = &self.algebra;
        Subspace::span(a.field(), a.dim(), self.indices_of_degree(m).into_iter().map(|i| a.basis_element(i)))
    }

    /// `⊕_{i >= m} A_i`.
    pub fn at_least(&self, m: usize) -> Subspace {
        let a = &self.algebra;
        Subspace::span(a.field(), a.dim(), (0..a.dim()).filter(|&i| self.degrees[i] >= m).map(|i| a.basis_element(i)))
    }

    pub fn component_dims(&self) -> Vec<usize> {
        (0..=self.max_degree()).map(|m| self.indices_of_degree(m).len()).collect()
    }

    /// The degree-zero part as an algebra (basis in the order of `self`).
    pub fn degree_zero(&self) -> Result<Algebra> {
        let a = &self.algebra;
        let idx = self.indices_of_degree(0);
        let unit = self.degree_zero_unit()?;
        let labels = idx.iter().map(|&i| a.labels()[i].clone()).collect();
        let mut a0 = Algebra::zero_products(a.field(), labels, unit)?;
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate() {
                let v = a.basis_product_vec(i, j);
                a0.set_product(p, q, idx.iter().map(|&k| v[k].clone()).collect())?;
            }
        }
        Ok(a0)
    }

    fn degree_zero_unit(&self) -> Result<Element> {
        let a = &self.algebra;
        let f = a.field();
        if (0..a.dim()).any(|i| self.degrees[i] != 0 && !f.is_zero(&a.unit()[i])) {
            return Err(Error::NotRadicalGraded("unit is not homogeneous of degree 0".into()));
        }
        Ok(self.indices_of_degree(0).iter().map(|&i| a.unit()[i].clone()).collect())
    }

    /// Embedding of `A_0` into `A` (columns are the degree-zero basis vectors).
    pub fn degree_zero_embedding(&self) -> Matrix {
        let a = &self.algebra;
        let cols: Vec<Element> = self.indices_of_degree(0).into_iter().map(|i| a.basis_element(i)).collect();
        Matrix::from_columns(a.field(), &cols, a.dim())
    }

    /// Why the algebra is not radical-graded, if it is not: every product
    /// must be homogeneous of the right degree, the unit must lie in degree
    /// 0, `A_0` must be semisimple and `A_m = (A_1)^m` for `m >= 1`.
    pub fn radical_graded_failure(&self) -> Option<String> {
        let a = &self.algebra;
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                let target = self.degrees[i] + self.degrees[j];
                if let Some((k, _)) = a.basis_product(i, j).iter().find(|(k, _)| self.degrees[*k] != target) {
                    return Some(format!(
                        "{} * {} has a component {} outside degree {target}",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[*k]
                    ));
                }
            }
        }
        let a0 = match self.degree_zero() {
            Ok(a0) => a0,
            Err(e) => return Some(e.to_string()),
        };
        match radical(&a0) {
            Ok(r) if r.is_zero() => {}
            Ok(r) => return Some(format!("degree-zero part has a radical of dimension {}", r.dim())),
            Err(e) => return Some(e.to_string()),
        }
        let a1 = self.component(1);
        let mut power = a1.clone();
        for m in 1..=self.max_degree() {
            if power != self.component(m) {
                return Some(format!("degree {m} is not generated by degree 1"));
            }
            power = a.subspace_product(&power, &a1);
        }
        None
    }

    pub fn is_radical_graded(&self) -> bool {
        self.radical_graded_failure().is_none()
    }

    pub fn require_radical_graded(&self) -> Result<()> {
        match self.radical_graded_failure() {
            None => Ok(()),
            Some(why) => Err(Error::NotRadicalGraded(why)),
        }
    }

    /// Radical chain read off the grading (valid for radical-graded algebras).
    pub fn graded_chain(&self) -> RadicalChain {
        chain_from_radical(&self.algebra, self.at_least(1))
    }
}

/// `gr A = A/r ⊕ r/r² ⊕ ...` together with the coset data.
#[derive(Debug, Clone)]
pub struct AssociatedGraded {
    pub graded: GradedAlgebra,
    pub chain: RadicalChain,
    /// `r^m / r^{m+1}` for each degree `m`.
    pub layers: Vec<Subquotient>,
}

impl AssociatedGraded {
    /// Image in `gr A` of an element of `r^m`, read in `r^m / r^{m+1}`.
    pub fn initial_form(&self, m: usize, x: &[crate::field::Scalar]) -> Option<Element> {
        let layer = self.layers.get(m)?;
        let coords = layer.coordinates(x)?;
        let offset: usize = self.layers[..m].iter().map(Subquotient::dim).sum();
        let mut v = self.graded.algebra.zero();
        for (k, c) in coords.into_iter().enumerate() {
            v[offset + k] = c;
        }
        Some(v)
    }
}

pub fn associated_graded(a: &Algebra) -> Result<AssociatedGraded> {
    Ok(associated_graded_with(a, chain_from_radical(a, radical(a)?)))
}

pub fn associated_graded_with(a: &Algebra, chain: RadicalChain) -> AssociatedGraded {
    let f = a.field();
    let s = chain.loewy_length;
    let layers: Vec<Subquotient> = (0..s).map(|m| Subquotient::new(&chain.power(m), &chain.power(m + 1))).collect();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut reps: Vec<(usize, Element)> = Vec::new();
    for (m, layer) in layers.iter().enumerate() {
        for (v, &p) in layer.representatives().iter().zip(layer.pivots()) {
            labels.push(a.element_label(v, p));
            degrees.push(m);
            reps.push((m, v.clone()));
        }
    }
    let offsets: Vec<usize> = layers
        .iter()
        .scan(0, |acc, l| {
            let o = *acc;
            *acc += l.dim();
            Some(o)
        })
        .collect();
    let n = reps.len();
    let unit_coords = layers[0].coordinates(a.unit()).unwrap();
    let mut unit = f.zero_vec(n);
    for (k, c) in unit_coords.into_iter().enumerate() {
        unit[k] = c;
    }
    let mut g = Algebra::zero_products(f, labels, unit).unwrap();
    for (i, (di, x)) in reps.iter().enumerate() {
        let l = a.left_matrix(x);
        for (j, (dj, y)) in reps.iter().enumerate() {
            let deg = di + dj;
            let mut v = f.zero_vec(n);
            if deg < s {
                let coords = layers[deg].coordinates(&l.mul_vec(y)).expect("r^i r^j lies in r^(i+j)");
                for (k, c) in coords.into_iter().enumerate() {
                    v[offsets[deg] + k] = c;
                }
            }
            g.set_product(i, j, v).unwrap();
        }
    }
    AssociatedGraded { graded: GradedAlgebra { algebra: g, degrees }, chain, layers }
}

/// Checks that the product on `gr A` does not depend on representatives:
/// changing `x ∈ r^i` by an element of `r^{i+1}` does not change `x y` modulo
/// `r^{i+j+1}`.
pub fn check_representative_independence(a: &Algebra, gr: &AssociatedGraded) -> bool {
    let s = gr.chain.loewy_length;
    for i in 0..s {
        let next = gr.chain.power(i + 1);
        for j in 0..s {
            let deg = i + j;
            if deg >= s {
                continue;
            }
            for x in next.basis() {
                for y in gr.layers[j].representatives() {
                    let lx = a.mul(x, y);
                    let rx = a.mul(y, x);
                    let target = &gr.layers[deg];
                    if !a.field().is_zero_vec(&target.coordinates(&lx).unwrap_or_default())
                        || !a.field().is_zero_vec(&target.coordinates(&rx).unwrap_or_default())
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The canonical degree-preserving linear map `A -> gr A`,
/// `x ∈ A_m ↦ x + r^{m+1}`, for a graded algebra.
pub fn canonical_map(g: &GradedAlgebra, gr: &AssociatedGraded) -> Option<Matrix> {
    let a = &g.algebra;
    let cols: Option<Vec<Element>> = (0..a.dim()).map(|i| gr.initial_form(g.degrees[i], &a.basis_element(i))).collect();
    Some(Matrix::from_columns(a.field(), &cols?, gr.graded.algebra.dim()))
}

/// For a radical-graded `A`, whether the canonical map `A -> gr A` is a
/// bijective algebra morphism.
pub fn canonical_map_is_isomorphism(g: &GradedAlgebra) -> Result<bool> {
    g.require_radical_graded()?;
    let a = &g.algebra;
    let gr = associated_graded(a)?;
    let Some(phi) = canonical_map(g, &gr) else {
        return Ok(false);
    };
    if phi.rank() != a.dim() || gr.graded.algebra.dim() != a.dim() {
        return Ok(false);
    }
    let b = &gr.graded.algebra;
    for i in 0..a.dim() {
        let pi = phi.column(i);
        for j in 0..a.dim() {
            if phi.mul_vec(&a.basis_product_vec(i, j)) != b.mul(&pi, &phi.column(j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, polynomial_quotient, triangular, two_armed_example};
    use crate::field::Field;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn semisimple_is_degree_zero() {
        let s = matrix_algebra(2, gf(5));
        let gr = associated_graded(&s).unwrap();
        assert_eq!(gr.graded.degrees, vec![0; 4]);
        assert_eq!(gr.graded.algebra, s);
        assert!(GradedAlgebra::trivial(s).is_radical_graded());
    }

    #[test]
    fn truncated_polynomial_is_its_own_gr() {
        let a = polynomial_quotient(gf(7), 3);
        let gr = associated_graded(&a).unwrap();
        assert_eq!(gr.graded.degrees, vec![0, 1, 2]);
        assert_eq!(gr.graded.algebra, a);
        assert!(gr.graded.is_radical_graded());
    }

    #[test]
    fn nilpotent_in_degree_zero_is_not_radical_graded() {
        let a = polynomial_quotient(gf(7), 2);
        assert!(!GradedAlgebra::trivial(a.clone()).is_radical_graded());
        assert!(GradedAlgebra::new(a, vec![0, 1]).unwrap().is_radical_graded());
    }

    #[test]
    fn gr_of_gr_is_identical() {
        let ex = two_armed_example(gf(5)).unwrap();
        for a in [triangular(3, gf(5)), ex.skew] {
            let gr = associated_graded(&a).unwrap();
            assert_eq!(gr.graded.algebra.dim(), a.dim());
            assert!(gr.graded.is_radical_graded());
            assert!(check_representative_independence(&a, &gr));
            let grgr = associated_graded(&gr.graded.algebra).unwrap();
            assert_eq!(grgr.graded, gr.graded);
        }
    }

    #[test]
    fn radical_graded_maps_isomorphically() {
        let a = polynomial_quotient(gf(7), 4);
        let g = GradedAlgebra::new(a, vec![0, 1, 2, 3]).unwrap();
        assert!(canonical_map_is_isomorphism(&g).unwrap());

        // k[x]/(x^3) with x in degree 1 but x^2 declared degree 1 too
        let a = polynomial_quotient(gf(7), 3);
        let bad = GradedAlgebra::new(a, vec![0, 1, 1]).unwrap();
        assert!(!bad.is_radical_graded());
        assert!(matches!(canonical_map_is_isomorphism(&bad), Err(Error::NotRadicalGraded(_))));
    }
}
