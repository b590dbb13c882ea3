//! Basic algebras as corner sums, and the comparison of the basic algebra of
//! a radical-graded algebra with that of its free tensor cover.

use serde::Serialize;

use crate::algebra::{Algebra, Element};
use crate::cover::{check_multiplicative, tensor_cover_maps, total_map, GradedBase};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::GradedAlgebra;
use crate::matrix::Matrix;
use crate::quiver::{analyze, Analysis, AnalysisOptions, Bimodule, Quiver};
use crate::subspace::Subspace;
use crate::tensor::{free_path_tensor_algebra, predicted_free_dims, FreeBimodule, TruncatedTensorAlgebra};
use crate::wedderburn::{WedderburnData, WedderburnOptions};

#[derive(Debug, Clone)]
pub struct BasicAlgebraData {
    pub algebra: Algebra,
    /// The idempotents `ε_i` in the ambient algebra.
    pub idempotents: Vec<Element>,
    /// `⊕ ε_i A ε_j` inside the ambient algebra.
    pub embedding: Subspace,
}

/// `Σ_{i,j} ε_i A ε_j`.
pub fn corner_sum(a: &Algebra, idempotents: &[Element]) -> Subspace {
    let mut out = Subspace::zero(a.field(), a.dim());
    for ei in idempotents {
        let left: Vec<Element> = (0..a.dim()).map(|k| a.mul(ei, &a.basis_element(k))).collect();
        for ej in idempotents {
            for x in &left {
                out.insert(a.mul(x, ej));
            }
        }
    }
    out
}

/// The corner algebra `εAε` with `ε = Σ ε_i`.
pub fn corner_algebra(a: &Algebra, idempotents: &[Element]) -> Result<BasicAlgebraData> {
    let unit = corner_unit(a, idempotents);
    let embedding = corner_sum(a, idempotents);
    let algebra = a.subalgebra(&embedding, &unit)?;
    Ok(BasicAlgebraData { algebra, idempotents: idempotents.to_vec(), embedding })
}

/// The basic algebra of an analysed algebra: the corner at one lifted
/// primitive idempotent per block.
pub fn basic_algebra(an: &Analysis) -> Result<BasicAlgebraData> {
    corner_algebra(&an.algebra, &an.primitive.elements)
}

/// The corner of a graded algebra at degree-zero idempotents, graded by
/// pivot degree. The corner is spanned by homogeneous vectors, so its
/// echelon basis is homogeneous.
pub fn graded_corner(g: &GradedAlgebra, idempotents: &[Element]) -> Result<(BasicAlgebraData, GradedAlgebra)> {
    let data = corner_algebra(&g.algebra, idempotents)?;
    let degrees = data.embedding.pivots().iter().map(|&p| g.degrees[p]).collect();
    let graded = GradedAlgebra::new(data.algebra.clone(), degrees)?;
    Ok((data, graded))
}

/// A radical-graded algebra is basic when its degree-zero part is `k^s`;
/// with `s` orthogonal idempotents in degree zero that is `dim A_0 = s`.
pub fn graded_is_basic(g: &GradedAlgebra, idempotents: usize) -> bool {
    g.is_radical_graded() && g.component(0).dim() == idempotents
}

/// Generators of the component `ē_j M ē_i`: with `ε = E_11` in each block,
/// the basis `v` of `ε_j M ε_i` is cut into chunks of `n_j n_i` and each
/// chunk gives `Σ_{a,b} E^j_{a1} v_(a,b) E^i_{1b}`.
pub fn component_generators(w: &WedderburnData, m: &Bimodule, i: usize, j: usize) -> Vec<Element> {
    let f = m.field;
    let (bi, bj) = (&w.blocks[i], &w.blocks[j]);
    let v = m.corner(bj.primitive_idempotent(), bi.primitive_idempotent());
    let chunk = bi.n * bj.n;
    v.basis()
        .chunks(chunk)
        .map(|vs| {
            let mut g = f.zero_vec(m.dim);
            for (idx, x) in vs.iter().enumerate() {
                let (a, b) = (idx / bi.n, idx % bi.n);
                let y = m.left_action(&bj.matrix_units[a][0]).mul_vec(x);
                let y = m.right_action(&bi.matrix_units[0][b]).mul_vec(&y);
                g = f.add_vec(&g, &y);
            }
            g
        })
        .collect()
}

/// `T(A_0, M^F) -> A` for the quiver of a radical-graded `A`, sending the
/// free generator of each arrow to a component generator.
#[derive(Debug, Clone)]
pub struct FreeCover {
    pub base: GradedBase,
    pub quiver: Quiver,
    pub tensor: TruncatedTensorAlgebra,
    pub free: FreeBimodule,
    /// `π: M^F -> A_1` in local coordinates.
    pub pi: Matrix,
    pub maps: Vec<Matrix>,
    pub total: Matrix,
}

impl FreeCover {
    pub fn new(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<Self> {
        Self::from_base(g, GradedBase::new(g, opts)?)
    }

    /// Degree dimensions of the free tensor algebra, without building it.
    pub fn predicted_dims(base: &GradedBase) -> Result<Vec<usize>> {
        let quiver = base.natural_quiver()?;
        Ok(predicted_free_dims(&quiver.sizes(), &quiver.arrows, base.loewy_length))
    }

    pub fn from_base(g: &GradedAlgebra, base: GradedBase) -> Result<Self> {
        let quiver = base.natural_quiver()?;
        let w = &base.wedderburn;
        let s = &w.semisimple;
        let f = s.field();
        let (tensor, free) = free_path_tensor_algebra(w, &quiver.arrows, base.loewy_length);
        let k = w.blocks.len();
        let mut gens: Vec<Vec<Vec<Element>>> = vec![vec![Vec::new(); k]; k];
        for (i, row) in gens.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = component_generators(w, &base.top, i, j);
            }
        }
        let mut used = vec![vec![0usize; k]; k];
        let mut cols: Vec<Element> = Vec::with_capacity(free.bimodule.dim);
        for &(i, j) in &free.arrows {
            let v = gens[i][j].get(used[i][j]).cloned().unwrap_or_else(|| f.zero_vec(base.top.dim));
            used[i][j] += 1;
            let (bi, bj) = (&w.blocks[i].basis, &w.blocks[j].basis);
            for x in bj.basis() {
                let lx = base.top.left_action(x).mul_vec(&v);
                for y in bi.basis() {
                    cols.push(base.top.right_action(y).mul_vec(&lx));
                }
            }
        }
        let pi = Matrix::from_columns(f, &cols, base.top.dim);
        let phi = base.embed1.mul(&pi);
        let maps = tensor_cover_maps(&tensor, &g.algebra, &base.embed0, &phi);
        let total = total_map(&tensor, &maps, g.algebra.dim());
        Ok(FreeCover { base, quiver, tensor, free, pi, maps, total })
    }

    pub fn surjective(&self, a: &Algebra) -> bool {
        Subspace::image(&self.total).dim() == a.dim()
    }

    /// `d_i = E_11` of each block, in degree 0 of the tensor algebra.
    pub fn tensor_idempotents(&self) -> Vec<Element> {
        self.base.wedderburn.blocks.iter().map(|b| self.tensor.embed(0, b.primitive_idempotent())).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoBasicsReport {
    pub verdict: bool,
    pub sizes: Vec<usize>,
    pub arrows: Vec<Vec<usize>>,
    pub free_degree_dims: Vec<usize>,
    pub cover_surjective: bool,
    pub cover_multiplicative: bool,
    /// `dim ⊕ d_i T d_j`.
    pub dim_c: usize,
    /// `dim ⊕ ε_i A ε_j`.
    pub dim_b: usize,
    pub dim_image: usize,
    pub image_equals_b: bool,
    pub b_is_basic: bool,
    pub c_is_basic: bool,
}

/// The cover maps the basic algebra of `T(A_0, M^F)` onto that of `A`:
/// `F(⊕ d_i T d_j) = ⊕ ε_i A ε_j` with `ε_i = F(d_i)`.
pub fn verify_two_basics(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<TwoBasicsReport> {
    two_basics(g, &FreeCover::new(g, opts)?)
}

/// [`verify_two_basics`] on a cover already built from `g`.
pub fn two_basics(g: &GradedAlgebra, fc: &FreeCover) -> Result<TwoBasicsReport> {
    let a = &g.algebra;
    let d = fc.tensor_idempotents();
    let eps: Vec<Element> = d.iter().map(|x| fc.total.mul_vec(x)).collect();
    let (c, c_graded) = graded_corner(&fc.tensor.graded, &d)?;
    let (b, b_graded) = graded_corner(g, &eps)?;
    let image = c.embedding.map(&fc.total);
    let cover_surjective = fc.surjective(a);
    let cover_multiplicative = check_multiplicative(&fc.tensor, a, &fc.total);
    let image_equals_b = image == b.embedding;
    let b_is_basic = graded_is_basic(&b_graded, eps.len());
    let c_is_basic = graded_is_basic(&c_graded, d.len());
    let verdict = cover_surjective && cover_multiplicative && image_equals_b && b_is_basic && c_is_basic;
    Ok(TwoBasicsReport {
        verdict,
        sizes: fc.quiver.sizes(),
        arrows: fc.quiver.arrows.clone(),
        free_degree_dims: fc.tensor.degree_dims(),
        cover_surjective,
        cover_multiplicative,
        dim_c: c.embedding.dim(),
        dim_b: b.embedding.dim(),
        dim_image: image.dim(),
        image_equals_b,
        b_is_basic,
        c_is_basic,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct QuiverEqualityReport {
    pub verdict: bool,
    /// Natural quiver of `A`, computed from scratch.
    pub quiver_a: Quiver,
    /// Natural quiver of the free tensor algebra on the quiver of `A`.
    pub quiver_t: Quiver,
    /// Vertex `i` of `quiver_t` goes to `mapping[i]` of `quiver_a`.
    pub mapping: Option<Vec<usize>>,
}

/// `Δ_{T(A_0, M^F)} = Δ_A` up to a size-preserving vertex bijection.
/// Needs the cover to be injective in degree 1, so that `M^F ≅ r/r²`;
/// otherwise [`Error::NotApplicable`].
pub fn verify_quiver_equality(g: &GradedAlgebra, opts: &WedderburnOptions) -> Result<QuiverEqualityReport> {
    quiver_equality(g, &FreeCover::new(g, opts)?, opts)
}

/// [`verify_quiver_equality`] on a cover already built from `g`.
pub fn quiver_equality(g: &GradedAlgebra, fc: &FreeCover, opts: &WedderburnOptions) -> Result<QuiverEqualityReport> {
    let kernel = Subspace::kernel(&fc.pi).dim();
    if kernel > 0 {
        return Err(Error::NotApplicable(format!("free bimodule maps onto r/r^2 with a {kernel}-dimensional kernel")));
    }
    let quiver_t = GradedBase::new(&fc.tensor.graded, opts)?.natural_quiver()?;
    let quiver_a = analyze(&g.algebra, &AnalysisOptions { wedderburn: *opts })?.natural_quiver()?;
    let mapping = quiver_t.isomorphism(&quiver_a, true);
    Ok(QuiverEqualityReport { verdict: mapping.is_some(), quiver_a, quiver_t, mapping })
}

/// The unit of a corner algebra in ambient coordinates.
pub fn corner_unit(a: &Algebra, idempotents: &[Element]) -> Vec<Scalar> {
    let f = a.field();
    idempotents.iter().fold(a.zero(), |acc, e| f.add_vec(&acc, e))
}
