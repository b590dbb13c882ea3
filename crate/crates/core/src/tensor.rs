//! Tensor products of bimodules over a split semisimple algebra and truncated
//! tensor algebras `T(A_0, M) = A_0 ⊕ M ⊕ M⊗M ⊕ ...`.
//!
//! With matrix units `E^k_ab` of the blocks and `ε_k = E^k_11`,
//!
//! ```text
//! M ⊗_{A_0} N ≅ ⊕_k (M ε_k) ⊗_k (ε_k N),    x ⊗ y ↦ Σ_k Σ_a x E^k_a1 ⊗ E^k_1a y.
//! ```
//!
//! [`tensor_by_relations`] builds the same space as the quotient of the plain
//! tensor product by the middle relations and serves as a cross-check.

use crate::algebra::{Algebra, Element};
use crate::field::{Field, Scalar};
use crate::graded::GradedAlgebra;
use crate::matrix::Matrix;
use crate::quiver::Bimodule;
use crate::subspace::{Subquotient, Subspace};
use crate::wedderburn::WedderburnData;

fn kron(f: Field, a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Matrix::zeros(f, ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let x = &a[(i, j)];
            if f.is_zero(x) {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    m[(i * rb + k, j * cb + l)] = f.mul(x, &b[(k, l)]);
                }
            }
        }
    }
    m
}

fn kron_vec(f: Field, x: &[Scalar], y: &[Scalar]) -> Element {
    x.iter().flat_map(|a| y.iter().map(move |b| f.mul(a, b))).collect()
}

/// Matrix of an operator restricted to an invariant subspace.
fn restrict(m: &Matrix, sub: &Subspace) -> Matrix {
    let cols: Vec<Element> =
        sub.basis().iter().map(|b| sub.coordinates(&m.mul_vec(b)).expect("invariant subspace")).collect();
    Matrix::from_columns(m.field(), &cols, sub.dim())
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct CornerPart {
    block: usize,
    /// `M ε_k` inside `M`.
    left: Subspace,
    /// `ε_k N` inside `N`.
    right: Subspace,
    offset: usize,
    /// `x -> coords(x E_a1)` in `left`, one per matrix unit `a`.
    left_maps: Vec<Matrix>,
    /// `y -> coords(E_1a y)` in `right`.
    right_maps: Vec<Matrix>,
}

/// `M ⊗_{A_0} N` realized on idempotent corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorProduct {
    pub bimodule: Bimodule,
    parts: Vec<CornerPart>,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.bimodule.dim
    }

    /// Image of `x ⊗ y`.
    pub fn psi(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let f = self.bimodule.field;
        let mut out = f.zero_vec(self.dim());
        for part in &self.parts {
            let rd = part.right.dim();
            for (lm, rm) in part.left_maps.iter().zip(&part.right_maps) {
                let cx = lm.mul_vec(x);
                let cy = rm.mul_vec(y);
                for (i, ci) in cx.iter().enumerate() {
                    if f.is_zero(ci) {
                        continue;
                    }
                    let row = &mut out[part.offset + i * rd..part.offset + (i + 1) * rd];
                    f.axpy(row, ci, &cy);
                }
            }
        }
        out
    }

    /// Basis elements as pairs `(u, w)`: `u` a vector of `M`, `w` of `N`.
    pub fn basis_pairs(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::with_capacity(self.dim());
        for part in &self.parts {
            for u in part.left.basis() {
                for w in part.right.basis() {
                    out.push((u.clone(), w.clone()));
                }
            }
        }
        out
    }
}

pub fn bimodule_tensor(w: &WedderburnData, m: &Bimodule, n: &Bimodule) -> TensorProduct {
    let f = m.field;
    let mut parts = Vec::new();
    let mut offset = 0;
    for (k, block) in w.blocks.iter().enumerate() {
        let eps = block.primitive_idempotent();
        let left = Subspace::image(&m.right_action(eps));
        let right = Subspace::image(&n.left_action(eps));
        let size = left.dim() * right.dim();
        if size > 0 {
            // Echelon coordinates are the entries at the pivots.
            let at_pivots = |a: &Matrix, sub: &Subspace| {
                let rows: Vec<Element> = sub.pivots().iter().map(|&p| a.row(p).to_vec()).collect();
                Matrix::from_rows(f, rows, a.cols())
            };
            let units = &block.matrix_units;
            let left_maps = (0..units.len()).map(|a| at_pivots(&m.right_action(&units[a][0]), &left)).collect();
            let right_maps = (0..units.len()).map(|a| at_pivots(&n.left_action(&units[0][a]), &right)).collect();
            parts.push(CornerPart { block: k, left, right, offset, left_maps, right_maps });
            offset += size;
        }
    }
    let dim = offset;
    let s_dim = w.semisimple.dim();
    let mut left_ops = Vec::with_capacity(s_dim);
    let mut right_ops = Vec::with_capacity(s_dim);
    for s in 0..s_dim {
        let mut l = Matrix::zeros(f, dim, dim);
        let mut r = Matrix::zeros(f, dim, dim);
        for part in &parts {
            let (ld, rd) = (part.left.dim(), part.right.dim());
            let lm = kron(f, &restrict(&m.left[s], &part.left), &Matrix::identity(f, rd));
            let rm = kron(f, &Matrix::identity(f, ld), &restrict(&n.right[s], &part.right));
            for i in 0..ld * rd {
                for j in 0..ld * rd {
                    l[(part.offset + i, part.offset + j)] = lm[(i, j)].clone();
                    r[(part.offset + i, part.offset + j)] = rm[(i, j)].clone();
                }
            }
        }
        left_ops.push(l);
        right_ops.push(r);
    }
    TensorProduct { bimodule: Bimodule { field: f, dim, left: left_ops, right: right_ops }, parts }
}

/// `M ⊗_k N` modulo the middle relations `x s ⊗ y - x ⊗ s y`.
#[derive(Debug, Clone)]
pub struct RelationTensor {
    pub bimodule: Bimodule,
    pub relations: Subspace,
    pub cosets: Subquotient,
}

pub fn tensor_by_relations(base: &Algebra, m: &Bimodule, n: &Bimodule) -> RelationTensor {
    let f = m.field;
    let (dm, dn) = (m.dim, n.dim);
    let total = dm * dn;
    let mut relations = Subspace::zero(f, total);
    for s in 0..base.dim() {
        for i in 0..dm {
            let xs = m.right[s].column(i);
            for j in 0..dn {
                let sy = n.left[s].column(j);
                let a = kron_vec(f, &xs, &f.unit_vec(dn, j));
                let b = kron_vec(f, &f.unit_vec(dm, i), &sy);
                relations.insert(f.sub_vec(&a, &b));
            }
        }
    }
    let cosets = Subquotient::new(&Subspace::full(f, total), &relations);
    let induced = |op: &Matrix| {
        let cols: Vec<Element> =
            cosets.representatives().iter().map(|v| cosets.coordinates(&op.mul_vec(v)).unwrap()).collect();
        Matrix::from_columns(f, &cols, cosets.dim())
    };
    let left = m.left.iter().map(|l| induced(&kron(f, l, &Matrix::identity(f, dn)))).collect();
    let right = n.right.iter().map(|r| induced(&kron(f, &Matrix::identity(f, dm), r))).collect();
    RelationTensor { bimodule: Bimodule { field: f, dim: cosets.dim(), left, right }, relations, cosets }
}

/// The regular bimodule of an algebra over itself.
pub fn regular_bimodule(s: &Algebra) -> Bimodule {
    Bimodule {
        field: s.field(),
        dim: s.dim(),
        left: (0..s.dim()).map(|i| s.left_matrix(&s.basis_element(i))).collect(),
        right: (0..s.dim()).map(|i| s.right_matrix(&s.basis_element(i))).collect(),
    }
}

/// `A_0 ⊕ M ⊕ M^{⊗2} ⊕ ... ⊕ M^{⊗L}` with products above degree `L`
/// dropped.
#[derive(Debug, Clone)]
pub struct TruncatedTensorAlgebra {
    pub base: WedderburnData,
    pub generator: Bimodule,
    pub truncation: usize,
    /// `components[m]` is `M^{⊗m}` as a bimodule; `components[0]` is `A_0`.
    pub components: Vec<Bimodule>,
    /// `tensors[m]` realizes `M^{⊗m} = M^{⊗(m-1)} ⊗ M` for `m >= 2`.
    tensors: Vec<Option<TensorProduct>>,
    offsets: Vec<usize>,
    pub graded: GradedAlgebra,
}

impl TruncatedTensorAlgebra {
    pub fn algebra(&self) -> &Algebra {
        &self.graded.algebra
    }

    pub fn degree_dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim).collect()
    }

    pub fn offset(&self, m: usize) -> usize {
        self.offsets[m]
    }

    /// Embeds degree-`m` coordinates into the whole algebra.
    pub fn embed(&self, m: usize, x: &[Scalar]) -> Element {
        let mut v = self.algebra().zero();
        for (k, c) in x.iter().enumerate() {
            v[self.offsets[m] + k] = c.clone();
        }
        v
    }

    /// Degree-`m` coordinates of an element.
    pub fn part(&self, m: usize, x: &[Scalar]) -> Element {
        x[self.offsets[m]..self.offsets[m] + self.components[m].dim].to_vec()
    }

    /// `z ⊗ w` for `z ∈ M^{⊗(m-1)}` and `w ∈ M`, as degree-`m` coordinates.
    pub fn psi(&self, m: usize, z: &[Scalar], w: &[Scalar]) -> Element {
        if m == 1 {
            return self.generator.left_action(z).mul_vec(w);
        }
        self.tensors[m].as_ref().expect("degree within truncation").psi(z, w)
    }

    /// Each degree-`m` basis element (`m >= 2`) as a pair `(u, w)` with `u`
    /// in degree `m - 1` and `w` in `M`.
    pub fn basis_pairs(&self, m: usize) -> Vec<(Element, Element)> {
        self.tensors[m].as_ref().map(TensorProduct::basis_pairs).unwrap_or_default()
    }
}

pub fn truncated_tensor_algebra(base: &WedderburnData, m: &Bimodule, truncation: usize) -> TruncatedTensorAlgebra {
    let s = &base.semisimple;
    let f = s.field();
    let mut components = vec![regular_bimodule(s)];
    let mut tensors = vec![None];
    if truncation >= 1 {
        components.push(m.clone());
        tensors.push(None);
    }
    for _ in 2..=truncation {
        let t = bimodule_tensor(base, components.last().unwrap(), m);
        components.push(t.bimodule.clone());
        tensors.push(Some(t));
    }
    let mut offsets = Vec::new();
    let mut total = 0;
    for c in &components {
        offsets.push(total);
        total += c.dim;
    }
    let mut labels = s.labels().to_vec();
    let mut degrees = vec![0; s.dim()];
    for (deg, c) in components.iter().enumerate().skip(1) {
        for k in 0..c.dim {
            labels.push(format!("t{deg}.{}", k + 1));
            degrees.push(deg);
        }
    }
    let mut unit = f.zero_vec(total);
    unit[..s.dim()].clone_from_slice(s.unit());
    let algebra = Algebra::zero_products(f, labels, unit).unwrap();
    let mut t = TruncatedTensorAlgebra {
        base: base.clone(),
        generator: m.clone(),
        truncation,
        components,
        tensors,
        offsets,
        graded: GradedAlgebra { algebra, degrees },
    };
    fill_products(&mut t);
    t
}

/// `table[a][b][i][j]`: degree-`(a+b)` coordinates of `x_i y_j` for basis
/// elements `x_i` of degree `a` and `y_j` of degree `b`.
fn fill_products(t: &mut TruncatedTensorAlgebra) {
    let f = t.generator.field;
    let l = t.truncation;
    let dims = t.degree_dims();
    let mut table: Vec<Vec<Vec<Vec<Element>>>> = vec![vec![Vec::new(); l + 1]; l + 1];
    for b in 0..=l {
        for a in 0..=l - b {
            let deg = a + b;
            let rows: Vec<Vec<Element>> = (0..dims[a])
                .map(|i| {
                    let x = f.unit_vec(dims[a], i);
                    if b == 0 {
                        return (0..dims[0]).map(|j| t.components[a].right[j].mul_vec(&x)).collect();
                    }
                    if a == 0 {
                        return (0..dims[b]).map(|j| t.components[b].left[i].column(j)).collect();
                    }
                    if b == 1 {
                        return (0..dims[1]).map(|j| t.psi(deg, &x, &f.unit_vec(dims[1], j))).collect();
                    }
                    // x (u ⊗ w) = (x u) ⊗ w
                    t.basis_pairs(b)
                        .iter()
                        .map(|(u, w)| {
                            let mut xu = f.zero_vec(dims[deg - 1]);
                            for (c, uc) in u.iter().enumerate() {
                                if !f.is_zero(uc) {
                                    f.axpy(&mut xu, uc, &table[a][b - 1][i][c]);
                                }
                            }
                            t.psi(deg, &xu, w)
                        })
                        .collect()
                })
                .collect();
            table[a][b] = rows;
        }
    }
    let total = t.algebra().dim();
    for a in 0..=l {
        for b in 0..=l {
            for i in 0..dims[a] {
                for j in 0..dims[b] {
                    let v = if a + b <= l {
                        let mut v = f.zero_vec(total);
                        let o = t.offsets[a + b];
                        for (k, c) in table[a][b][i][j].iter().enumerate() {
                            v[o + k] = c.clone();
                        }
                        v
                    } else {
                        f.zero_vec(total)
                    };
                    t.graded.algebra.set_product(t.offsets[a] + i, t.offsets[b] + j, v).unwrap();
                }
            }
        }
    }
}

/// The free bimodule with `t_ij` generators `g` satisfying `ē_j g ē_i = g`
/// for each pair: one copy of `A_j ⊗ A_i` per arrow `i -> j`.
#[derive(Debug, Clone)]
pub struct FreeBimodule {
    pub bimodule: Bimodule,
    /// `(from, to)` per arrow, in order.
    pub arrows: Vec<(usize, usize)>,
    pub offsets: Vec<usize>,
    /// The free generator of each arrow, `ē_to ⊗ ē_from`.
    pub generators: Vec<Element>,
}

pub fn free_bimodule(w: &WedderburnData, arrows: &[Vec<usize>]) -> FreeBimodule {
    let s = &w.semisimple;
    let f = s.field();
    let mut list = Vec::new();
    for (i, row) in arrows.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            for _ in 0..c {
                list.push((i, j));
            }
        }
    }
    let sizes: Vec<usize> = list.iter().map(|&(i, j)| w.blocks[j].dim() * w.blocks[i].dim()).collect();
    let mut offsets = Vec::new();
    let mut dim = 0;
    for sz in &sizes {
        offsets.push(dim);
        dim += sz;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for k in 0..s.dim() {
        let b = s.basis_element(k);
        let (lk, rk) = (s.left_matrix(&b), s.right_matrix(&b));
        let mut l = Matrix::zeros(f, dim, dim);
        let mut r = Matrix::zeros(f, dim, dim);
        for (&(i, j), &o) in list.iter().zip(&offsets) {
            let (bi, bj) = (&w.blocks[i].basis, &w.blocks[j].basis);
            let lm = kron(f, &restrict(&lk, bj), &Matrix::identity(f, bi.dim()));
            let rm = kron(f, &Matrix::identity(f, bj.dim()), &restrict(&rk, bi));
            for p in 0..lm.rows() {
                for q in 0..lm.cols() {
                    l[(o + p, o + q)] = lm[(p, q)].clone();
                    r[(o + p, o + q)] = rm[(p, q)].clone();
                }
            }
        }
        left.push(l);
        right.push(r);
    }
    let generators = list
        .iter()
        .zip(&offsets)
        .map(|(&(i, j), &o)| {
            let (bi, bj) = (&w.blocks[i], &w.blocks[j]);
            let g = kron_vec(
                f,
                &bj.basis.coordinates(&bj.central_idempotent).unwrap(),
                &bi.basis.coordinates(&bi.central_idempotent).unwrap(),
            );
            let mut v = f.zero_vec(dim);
            for (k, c) in g.into_iter().enumerate() {
                v[o + k] = c;
            }
            v
        })
        .collect();
    FreeBimodule { bimodule: Bimodule { field: f, dim, left, right }, arrows: list, offsets, generators }
}

/// `dim M^{⊗m}` for `m = 0..=truncation` when `M` has `simples[i][j]`
/// simple summands of dimension `n_i n_j` at `(i, j)`.
pub fn predicted_tensor_dims(sizes: &[usize], simples: &[Vec<usize>], truncation: usize) -> Vec<usize> {
    let k = sizes.len();
    let mut power: Vec<Vec<usize>> = (0..k).map(|i| (0..k).map(|j| usize::from(i == j)).collect()).collect();
    let mut dims = Vec::new();
    for _ in 0..=truncation {
        dims.push(
            (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| power[i][j] * sizes[i] * sizes[j]).sum(),
        );
        power = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| (0..k).map(|l| power[i][l].saturating_mul(simples[l][j])).fold(0, usize::saturating_add))
                    .collect()
            })
            .collect();
    }
    dims
}

/// Degree dimensions of the free tensor algebra on a quiver: each arrow
/// `i -> j` contributes `n_i n_j` simple summands.
pub fn predicted_free_dims(sizes: &[usize], arrows: &[Vec<usize>], truncation: usize) -> Vec<usize> {
    let simples: Vec<Vec<usize>> = arrows
        .iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &t)| t * sizes[i] * sizes[j]).collect())
        .collect();
    predicted_tensor_dims(sizes, &simples, truncation)
}

/// The free tensor algebra `T(A_0, M^F)` of a quiver on the blocks of `w`,
/// truncated at degree `truncation`.
pub fn free_path_tensor_algebra(
    w: &WedderburnData,
    arrows: &[Vec<usize>],
    truncation: usize,
) -> (TruncatedTensorAlgebra, FreeBimodule) {
    let free = free_bimodule(w, arrows);
    (truncated_tensor_algebra(w, &free.bimodule, truncation), free)
}
