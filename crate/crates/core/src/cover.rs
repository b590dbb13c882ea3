//! Covers of radical-graded algebras by truncated tensor algebras.
//!
//! For `A = ⊕ A_m` radical-graded, `f: T(A_0, A_1) -> A` is the identity in
//! degrees 0 and 1 and `f_m(u ⊗ w) = f_{m-1}(u) w` above. Its kernel is a
//! graded ideal; `A ≅ T / ker f` is certified by surjectivity in every
//! degree, dimension bookkeeping and multiplicativity on a basis.

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::graded::GradedAlgebra;
use crate::matrix::Matrix;
use crate::quiver::{arrow_component, bimodule_rank, Bimodule, Quiver, Vertex};
use crate::subspace::Subspace;
use crate::tensor::{truncated_tensor_algebra, TruncatedTensorAlgebra};
use crate::wedderburn::{decompose, WedderburnData, WedderburnOptions};

/// Degrees 0 and 1 of a radical-graded algebra: `A_0` with its blocks and
/// `A_1` as an `A_0`-bimodule.
#[derive(Debug, Clone)]
pub struct GradedBase {
    pub wedderburn: WedderburnData,
    pub top: Bimodule,
    /// Columns: degree-0 basis vectors in `A`.
    pub embed0: Matrix,
    /// Columns: degree-1 basis vectors in `A`.
    pub embed1: Matrix,
    pub loewy_length: usize,
}

impl GradedBase {
    pub fn new(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<Self> {
        g.require_radical_graded()?;
        let a = &g.algebra;
        let f = a.field();
        let a0 = g.degree_zero()?;
        let wedderburn = decompose(&a0, opts)?;
        let deg0 = g.indices_of_degree(0);
        let deg1 = g.indices_of_degree(1);
        let embed0 = g.degree_zero_embedding();
        let embed1 = Matrix::from_columns(f, &deg1.iter().map(|&i| a.basis_element(i)).collect::<Vec<_>>(), a.dim());
        let act = |left: bool, s: usize| {
            let x = a.basis_element(deg0[s]);
            let cols: Vec<Element> = deg1
                .iter()
                .map(|&i| {
                    let b = a.basis_element(i);
                    let p = if left { a.mul(&x, &b) } else { a.mul(&b, &x) };
                    deg1.iter().map(|&k| p[k].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, &cols, deg1.len())
        };
        let top = Bimodule {
            field: f,
            dim: deg1.len(),
            left: (0..deg0.len()).map(|s| act(true, s)).collect(),
            right: (0..deg0.len()).map(|s| act(false, s)).collect(),
        };
        let loewy_length = g.max_degree() + 1;
        Ok(GradedBase { wedderburn, top, embed0, embed1, loewy_length })
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.wedderburn.sizes()
    }

    /// Natural quiver read off `A_1` (which is `r/r²` for radical-graded `A`).
    pub fn natural_quiver(&self) -> Result<Quiver> {
        let w = &self.wedderburn;
        let k = w.blocks.len();
        let sizes = self.sizes();
        let mut arrows = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                arrows[i][j] = bimodule_rank(arrow_component(w, &self.top, i, j).dim(), sizes[j], sizes[i])?;
            }
        }
        let vertices =
            sizes.iter().enumerate().map(|(id, &n)| Vertex { id, label: format!("{}", id + 1), n }).collect();
        Ok(Quiver { vertices, arrows })
    }

    /// `T(A_0, A_1)` truncated at the Loewy length.
    pub fn tensor_algebra(&self) -> TruncatedTensorAlgebra {
        truncated_tensor_algebra(&self.wedderburn, &self.top, self.loewy_length)
    }
}

/// Degree-wise maps `T_m -> A` determined by degree 0 (`embed0`) and degree 1
/// (`phi`), extended by `u ⊗ w ↦ F(u) F(w)`.
pub fn tensor_cover_maps(t: &TruncatedTensorAlgebra, a: &Algebra, embed0: &Matrix, phi: &Matrix) -> Vec<Matrix> {
    let f = a.field();
    let mut maps = vec![embed0.clone()];
    if t.truncation >= 1 {
        maps.push(phi.clone());
    }
    for m in 2..=t.truncation {
        let prev = &maps[m - 1];
        let cols: Vec<Element> =
            t.basis_pairs(m).iter().map(|(u, w)| a.mul(&prev.mul_vec(u), &phi.mul_vec(w))).collect();
        maps.push(Matrix::from_columns(f, &cols, a.dim()));
    }
    maps
}

/// The maps of all degrees side by side: `T -> A`.
pub fn total_map(t: &TruncatedTensorAlgebra, maps: &[Matrix], a_dim: usize) -> Matrix {
    let f = t.algebra().field();
    let cols: Vec<Element> = maps.iter().flat_map(|m| (0..m.cols()).map(|j| m.column(j))).collect();
    Matrix::from_columns(f, &cols, a_dim)
}

/// `F(ψ(z, w)) = F(z) F(w)` for basis `z` of degree `m-1` and `w` of degree 1,
/// and `F(s w) = F(s) F(w)`, `F(w s) = F(w) F(s)` in degree 1.
pub fn check_well_defined(t: &TruncatedTensorAlgebra, a: &Algebra, maps: &[Matrix]) -> bool {
    let f = a.field();
    if t.truncation == 0 {
        return true;
    }
    let dims = t.degree_dims();
    for s in 0..dims[0] {
        let fs = maps[0].column(s);
        for j in 0..dims[1] {
            let fw = maps[1].column(j);
            let lhs = maps[1].mul_vec(&t.generator.left[s].column(j));
            let rhs = maps[1].mul_vec(&t.generator.right[s].column(j));
            if lhs != a.mul(&fs, &fw) || rhs != a.mul(&fw, &fs) {
                return false;
            }
        }
    }
    for m in 2..=t.truncation {
        for z in 0..dims[m - 1] {
            let fz = maps[m - 1].column(z);
            for w in 0..dims[1] {
                let psi = t.psi(m, &f.unit_vec(dims[m - 1], z), &f.unit_vec(dims[1], w));
                if maps[m].mul_vec(&psi) != a.mul(&fz, &maps[1].column(w)) {
                    return false;
                }
            }
        }
    }
    true
}

/// `F(x y) = F(x) F(y)` for `x` in degrees 0 and 1 and `y` in a basis of
/// `T`. Degrees 0 and 1 generate `T`, so this covers all products.
pub fn check_multiplicative(t: &TruncatedTensorAlgebra, a: &Algebra, total: &Matrix) -> bool {
    let ta = t.algebra();
    let images: Vec<Element> = (0..ta.dim()).map(|i| total.column(i)).collect();
    let generators = if t.truncation >= 2 { t.offset(2) } else { ta.dim() };
    for i in 0..generators {
        let li = a.left_matrix(&images[i]);
        for j in 0..ta.dim() {
            if total.mul_vec(&ta.basis_product_vec(i, j)) != li.mul_vec(&images[j]) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub verdict: bool,
    pub loewy_length: usize,
    /// `dim M^{⊗m}` for `m = 0..=L`.
    pub degree_dims: Vec<usize>,
    pub kernel_dims: Vec<usize>,
    pub s_lower: usize,
    pub image_dims: Vec<usize>,
    pub well_defined: bool,
    pub multiplicative: bool,
    pub surjective: bool,
    /// Every degree `>= rl(A)` lies in the kernel.
    pub kernel_contains_high_degrees: bool,
    /// The kernel lies in `J`, the ideal of positive degrees.
    pub containment_in_j: bool,
    /// The kernel meets degrees 0 and 1 trivially, so it lies in `J²`.
    pub kernel_trivial_in_low_degrees: bool,
    /// Echelon bases of the kernel in each degree (local coordinates).
    #[serde(skip)]
    pub relations: Vec<Subspace>,
}

/// The cover `T(A_0, A_1) -> A` of a radical-graded algebra, truncated at
/// the Loewy length.
pub fn gabriel_cover(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<CoverReport> {
    gabriel_cover_truncated(g, opts, None)
}

/// As [`gabriel_cover`] with tensor degrees up to `truncation`. Below the
/// Loewy length the cover cannot be surjective.
pub fn gabriel_cover_truncated(
    g: &GradedAlgebra,
    opts: &WedderburnOptions,
    truncation: Option<usize>,
) -> Result<CoverReport> {
    let base = GradedBase::new(g, opts)?;
    let a = &g.algebra;
    let t = truncated_tensor_algebra(&base.wedderburn, &base.top, truncation.unwrap_or(base.loewy_length));
    let maps = tensor_cover_maps(&t, a, &base.embed0, &base.embed1);
    let well_defined = check_well_defined(&t, a, &maps);
    let total = total_map(&t, &maps, a.dim());
    let multiplicative = check_multiplicative(&t, a, &total);
    let rl = base.loewy_length;
    let degree_dims = t.degree_dims();
    let relations: Vec<Subspace> = maps.iter().map(Subspace::kernel).collect();
    let kernel_dims: Vec<usize> = relations.iter().map(Subspace::dim).collect();
    let image_dims: Vec<usize> = maps.iter().map(Matrix::rank).collect();
    let surjective = (0..rl).all(|m| maps.get(m).is_some_and(|f| Subspace::image(f) == g.component(m)));
    let kernel_contains_high_degrees = (rl..degree_dims.len()).all(|m| kernel_dims[m] == degree_dims[m]);
    let kernel_trivial_in_low_degrees = kernel_dims.iter().take(2).all(|&k| k == 0);
    let bookkeeping: usize = degree_dims.iter().zip(&kernel_dims).map(|(d, k)| d - k).sum();
    let verdict = well_defined
        && multiplicative
        && surjective
        && bookkeeping == a.dim()
        && kernel_contains_high_degrees
        && kernel_trivial_in_low_degrees;
    let containment_in_j = kernel_dims[0] == 0;
    Ok(CoverReport {
        verdict,
        loewy_length: rl,
        degree_dims,
        kernel_dims,
        s_lower: rl,
        image_dims,
        well_defined,
        multiplicative,
        surjective,
        kernel_contains_high_degrees,
        containment_in_j,
        kernel_trivial_in_low_degrees,
        relations,
    })
}

/// Fails with [`Error::NotRadicalGraded`] on inputs that are not; otherwise
/// a shorthand for [`gabriel_cover`].
pub fn require_cover(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<CoverReport> {
    let report = gabriel_cover(g, opts)?;
    if !report.verdict {
        return Err(Error::InvalidAlgebra("graded cover verification failed".into()));
    }
    Ok(report)
}
