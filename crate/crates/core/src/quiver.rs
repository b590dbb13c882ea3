//! Bimodules over split semisimple algebras, the radical bimodule `r/r²`, and
//! the natural and ordinary quivers.
//!
//! Paths compose like functions, so arrows `i -> j` are counted by the
//! component `ē_j (r/r²) ē_i`. The convention lives in [`arrow_component`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::radical::{chain_from_radical, quotient, radical, Quotient, RadicalChain};
use crate::subspace::{Subquotient, Subspace};
use crate::wedderburn::{decompose, lift_idempotents, IdempotentFamily, WedderburnData, WedderburnOptions};

/// A finite-dimensional bimodule over an algebra `S`, given by the action
/// matrices of the basis of `S` on both sides (column vectors; the right
/// action of `s` is `x -> x s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub field: Field,
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    fn combine(&self, mats: &[Matrix], s: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (c, a) in s.iter().zip(mats) {
            if !self.field.is_zero(c) {
                m.axpy(c, a);
            }
        }
        m
    }

    pub fn left_action(&self, s: &[Scalar]) -> Matrix {
        self.combine(&self.left, s)
    }

    pub fn right_action(&self, s: &[Scalar]) -> Matrix {
        self.combine(&self.right, s)
    }

    /// `e M e'` as a subspace of `M`.
    pub fn corner(&self, e: &[Scalar], e2: &[Scalar]) -> Subspace {
        Subspace::image(&self.left_action(e).mul(&self.right_action(e2)))
    }

    /// Checks the bimodule axioms against the base algebra.
    pub fn check(&self, base: &Algebra) -> Result<()> {
        let d = base.dim();
        let bad = |what: &str| Err(Error::InvalidInput(format!("bimodule {what}")));
        if self.left.len() != d || self.right.len() != d {
            return bad("has the wrong number of action matrices");
        }
        let id = Matrix::identity(self.field, self.dim);
        if self.left_action(base.unit()) != id || self.right_action(base.unit()) != id {
            return bad("unit does not act as the identity");
        }
        for i in 0..d {
            for j in 0..d {
                let p = base.basis_product_vec(i, j);
                if self.left_action(&p) != self.left[i].mul(&self.left[j]) {
                    return bad("left action is not multiplicative");
                }
                if self.right_action(&p) != self.right[j].mul(&self.right[i]) {
                    return bad("right action is not multiplicative");
                }
                if self.left[i].mul(&self.right[j]) != self.right[j].mul(&self.left[i]) {
                    return bad("actions do not commute");
                }
            }
        }
        Ok(())
    }

    /// Sub-bimodule generated by the given vectors.
    pub fn generated(&self, gens: impl IntoIterator<Item = Element>) -> Subspace {
        let mut s = Subspace::zero(self.field, self.dim);
        let mut queue: Vec<Element> = gens.into_iter().collect();
        while let Some(v) = queue.pop() {
            if !s.insert(v.clone()) {
                continue;
            }
            for m in self.left.iter().chain(&self.right) {
                let w = m.mul_vec(&v);
                if !s.contains(&w) {
                    queue.push(w);
                }
            }
        }
        s
    }

    /// Restriction to an invariant subspace, in its echelon basis.
    pub fn restrict(&self, sub: &Subspace) -> Bimodule {
        let f = self.field;
        let k = sub.dim();
        let restrict = |m: &Matrix| {
            let cols: Vec<Element> = sub.basis().iter().map(|b| sub.coordinates(&m.mul_vec(b)).unwrap()).collect();
            Matrix::from_columns(f, &cols, k)
        };
        Bimodule {
            field: f,
            dim: k,
            left: self.left.iter().map(restrict).collect(),
            right: self.right.iter().map(restrict).collect(),
        }
    }

    /// Dimension of the algebra of operators `x -> a x b`.
    /// A basis of the span of all `x -> s x t`; it contains the identity.
    pub fn operator_basis(&self) -> Vec<Matrix> {
        let d = self.dim;
        let mut ops = Subspace::zero(self.field, d * d);
        for l in &self.left {
            for r in &self.right {
                ops.insert(l.mul(r).row_vecs().concat());
            }
        }
        ops.basis()
            .iter()
            .map(|v| Matrix::from_rows(self.field, v.chunks(d).map(<[Scalar]>::to_vec).collect(), d))
            .collect()
    }

    pub fn operator_dim(&self) -> usize {
        self.operator_basis().len()
    }
}

/// `⌈m / (n_i n_j)⌉` with `m = dim / (n_i n_j)` the number of simple summands.
pub fn bimodule_rank(dim: usize, n_i: usize, n_j: usize) -> Result<usize> {
    let k = n_i * n_j;
    if k == 0 || !dim.is_multiple_of(k) {
        return Err(Error::MalformedBimodule { dim, divisor: k });
    }
    Ok((dim / k).div_ceil(k))
}

/// Result of the generator search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinGenerators {
    pub generators: Vec<Element>,
    /// `⌈dim / c⌉` where `c` bounds the dimension of a cyclic sub-bimodule:
    /// the exact maximum when every element was tried, else the dimension of
    /// the operator algebra.
    pub lower_bound: usize,
    pub exhaustive: bool,
}

impl MinGenerators {
    pub fn is_certified(&self) -> bool {
        self.generators.len() == self.lower_bound
    }
}

#[derive(Debug, Clone, Copy)]
pub struct GeneratorSearch {
    pub max_dim: usize,
    /// Enumerate every element when `|k|^dim` is at most this.
    pub exhaustive_budget: u64,
    pub random_candidates: usize,
    pub seed: u64,
}

impl Default for GeneratorSearch {
    fn default() -> Self {
        GeneratorSearch { max_dim: 24, exhaustive_budget: 1 << 12, random_candidates: 48, seed: 0 }
    }
}

/// A generating set of the bimodule found greedily: each step adds the
/// candidate that enlarges the generated sub-bimodule most.
pub fn min_generators_oracle(m: &Bimodule, search: &GeneratorSearch) -> Result<MinGenerators> {
    let f = m.field;
    let d = m.dim;
    if d > search.max_dim {
        return Err(Error::OracleLimit(format!("bimodule of dimension {d} exceeds {}", search.max_dim)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let exhaustive = match f.order() {
        Some(q) => (q as u128).checked_pow(d as u32).is_some_and(|t| t <= search.exhaustive_budget as u128),
        None => false,
    };
    // Sub-bimodules add, so each candidate only needs its cyclic span once.
    let ops = m.operator_basis();
    let cyclic = |vs: Vec<Element>| -> Vec<(Element, Subspace)> {
        let mut seen: Vec<(Element, Subspace)> = Vec::new();
        for v in vs {
            let g = Subspace::span(f, d, ops.iter().map(|o| o.mul_vec(&v)));
            if !seen.iter().any(|(_, h)| *h == g) {
                seen.push((v, g));
            }
        }
        seen
    };
    let all = exhaustive.then(|| cyclic(all_vectors(f, d)));
    let bound_denominator = match &all {
        Some(spans) => spans.iter().map(|(_, g)| g.dim()).max().unwrap_or(0),
        None => ops.len(),
    };
    let lower_bound = if d == 0 { 0 } else { d.div_ceil(bound_denominator.max(1)) };

    let mut current = Subspace::zero(f, d);
    let mut generators = Vec::new();
    while current.dim() < d {
        let fresh;
        let candidates = match &all {
            Some(spans) => spans,
            None => {
                fresh = cyclic(
                    (0..d)
                        .map(|i| f.unit_vec(d, i))
                        .chain((0..search.random_candidates).map(|_| f.random_vec(&mut rng, d)))
                        .collect(),
                );
                &fresh
            }
        };
        let mut best: Option<(usize, &Element, Subspace)> = None;
        for (c, span) in candidates {
            if span.is_subspace_of(&current) {
                continue;
            }
            let g = current.sum(span);
            if best.as_ref().is_none_or(|(bd, _, _)| g.dim() > *bd) {
                best = Some((g.dim(), c, g));
            }
        }
        let (_, c, g) = best.expect("a vector outside a proper subspace");
        generators.push(c.clone());
        current = g;
    }
    Ok(MinGenerators { generators, lower_bound, exhaustive })
}

fn all_vectors(f: Field, d: usize) -> Vec<Element> {
    let q = f.order().unwrap();
    let total = q.pow(d as u32);
    (1..total)
        .map(|mut k| {
            (0..d)
                .map(|_| {
                    let digit = k % q;
                    k /= q;
                    Scalar::Mod(digit)
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub label: String,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverArrows {
    pub from: usize,
    pub to: usize,
    pub count: usize,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<Vertex>,
    arrows: Vec<QuiverArrows>,
}

/// Vertices with block sizes and an arrow-count matrix, `arrows[i][j]` being
/// the number of arrows `i -> j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Vec<usize>>,
}

impl Quiver {
    pub fn new(sizes: &[usize], arrows: &[(usize, usize)]) -> Self {
        let k = sizes.len();
        let mut m = vec![vec![0; k]; k];
        for &(a, b) in arrows {
            m[a][b] += 1;
        }
        Quiver {
            vertices: sizes.iter().enumerate().map(|(id, &n)| Vertex { id, label: format!("{}", id + 1), n }).collect(),
            arrows: m,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().flatten().sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.n).collect()
    }

    /// Same vertex set; arrows between the same ordered pairs, never more
    /// than in `sup`.
    pub fn is_dense_subquiver_of(&self, sup: &Quiver) -> bool {
        let k = self.vertex_count();
        k == sup.vertex_count()
            && (0..k).all(|i| {
                (0..k).all(|j| {
                    let (a, b) = (self.arrows[i][j], sup.arrows[i][j]);
                    (a > 0) == (b > 0) && a <= b
                })
            })
    }

    /// A vertex bijection `σ` with `other.arrows[σ i][σ j] = self.arrows[i][j]`
    /// (and matching block sizes when asked), by brute force.
    pub fn isomorphism(&self, other: &Quiver, respect_sizes: bool) -> Option<Vec<usize>> {
        let k = self.vertex_count();
        if k != other.vertex_count() || k > 8 {
            return None;
        }
        let mut perm: Vec<usize> = (0..k).collect();
        let mut used = vec![false; k];
        fn extend(
            q: &Quiver,
            o: &Quiver,
            sizes: bool,
            pos: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let k = q.vertex_count();
            if pos == k {
                return true;
            }
            for c in 0..k {
                if used[c] || (sizes && q.vertices[pos].n != o.vertices[c].n) {
                    continue;
                }
                perm[pos] = c;
                let ok = (0..=pos)
                    .all(|i| q.arrows[i][pos] == o.arrows[perm[i]][c] && q.arrows[pos][i] == o.arrows[c][perm[i]]);
                if ok {
                    used[c] = true;
                    if extend(q, o, sizes, pos + 1, perm, used) {
                        return true;
                    }
                    used[c] = false;
                }
            }
            false
        }
        extend(self, other, respect_sizes, 0, &mut perm, &mut used).then_some(perm)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in &self.vertices {
            out.push_str(&format!("  {} [label=\"{}:{}(n={})\"];\n", v.id, v.id, escape(&v.label), v.n));
        }
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                for _ in 0..c {
                    out.push_str(&format!("  {i} -> {j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(j, &c)| QuiverArrows {
                    from: i,
                    to: j,
                    count: c,
                })
            })
            .collect();
        serde_json::to_value(QuiverJson { vertices: self.vertices.clone(), arrows }).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Quiver> {
        let q: QuiverJson = serde_json::from_value(v.clone()).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let k = q.vertices.len();
        let mut arrows = vec![vec![0; k]; k];
        for a in q.arrows {
            if a.from >= k || a.to >= k {
                return Err(Error::InvalidInput(format!("arrow {} -> {} outside the vertex set", a.from, a.to)));
            }
            arrows[a.from][a.to] += a.count;
        }
        Ok(Quiver { vertices: q.vertices, arrows })
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Everything computed on the way to the quivers of an algebra.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub algebra: Algebra,
    pub chain: RadicalChain,
    pub quotient: Quotient,
    pub wedderburn: WedderburnData,
    /// `r / r²` inside `A`.
    pub top: Subquotient,
    /// `r / r²` as an `A/r`-bimodule.
    pub bimodule: Bimodule,
    /// One lifted primitive idempotent per block.
    pub primitive: IdempotentFamily,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalysisOptions {
    pub wedderburn: WedderburnOptions,
}

pub fn analyze(a: &Algebra, opts: &AnalysisOptions) -> Result<Analysis> {
    let report = a.validate();
    if let Some((i, j, k)) = report.failing_triple {
        return Err(Error::InvalidAlgebra(format!(
            "not associative on ({}, {}, {})",
            a.labels()[i],
            a.labels()[j],
            a.labels()[k]
        )));
    }
    if let Some(i) = report.failing_unit {
        return Err(Error::InvalidAlgebra(format!("declared unit fails on {}", a.labels()[i])));
    }
    let chain = chain_from_radical(a, radical(a)?);
    let quotient = quotient(a, chain.radical())?;
    let wedderburn = decompose(&quotient.algebra, &opts.wedderburn)?;
    let (top, bimodule) = radical_bimodule(a, &chain, &quotient)?;
    let primitive = lift_idempotents(a, &quotient, &wedderburn.primitive_idempotents(), chain.loewy_length)?;
    Ok(Analysis { algebra: a.clone(), chain, quotient, wedderburn, top, bimodule, primitive })
}

/// `r/r²` with the induced actions of `A/r`.
pub fn radical_bimodule(a: &Algebra, chain: &RadicalChain, quotient: &Quotient) -> Result<(Subquotient, Bimodule)> {
    let f = a.field();
    let r = chain.radical();
    let r2 = chain.power(2);
    let top = Subquotient::new(r, &r2);
    let m = top.dim();
    let reps = top.representatives();
    let s = &quotient.algebra;
    let action = |left: bool, x: &[Scalar]| {
        let cols: Vec<Element> = reps
            .iter()
            .map(|v| {
                let p = if left { a.mul(x, v) } else { a.mul(v, x) };
                top.coordinates(&p).expect("r is an ideal")
            })
            .collect();
        Matrix::from_columns(f, &cols, m)
    };
    let lifts: Vec<Element> = (0..s.dim()).map(|k| quotient.lift(&s.basis_element(k))).collect();
    let bimodule = Bimodule {
        field: f,
        dim: m,
        left: lifts.iter().map(|x| action(true, x)).collect(),
        right: lifts.iter().map(|x| action(false, x)).collect(),
    };
    // independence of representatives: r acts as zero on r/r²
    for x in r.basis() {
        if !action(true, x).is_zero() || !action(false, x).is_zero() {
            return Err(Error::InvalidAlgebra("radical does not annihilate r/r^2".into()));
        }
    }
    Ok((top, bimodule))
}

/// The component of `r/r²` whose rank counts arrows `i -> j`.
pub fn arrow_component(w: &WedderburnData, m: &Bimodule, i: usize, j: usize) -> Subspace {
    m.corner(&w.blocks[j].central_idempotent, &w.blocks[i].central_idempotent)
}

impl Analysis {
    pub fn block_count(&self) -> usize {
        self.wedderburn.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.wedderburn.sizes()
    }

    pub fn loewy_length(&self) -> usize {
        self.chain.loewy_length
    }

    /// `ē_j M ē_i`, housing the arrows `i -> j`.
    pub fn component(&self, i: usize, j: usize) -> Subspace {
        arrow_component(&self.wedderburn, &self.bimodule, i, j)
    }

    /// Labelled by the first basis label in the support of the central
    /// idempotent; repeated labels get primes.
    fn vertices(&self) -> Vec<Vertex> {
        let s = &self.wedderburn.semisimple;
        let f = s.field();
        let mut seen: Vec<String> = Vec::new();
        self.wedderburn
            .blocks
            .iter()
            .enumerate()
            .map(|(id, b)| {
                let e = &b.central_idempotent;
                let mut label =
                    (0..e.len()).find(|&k| !f.is_zero(&e[k])).map(|k| s.labels()[k].clone()).unwrap_or_default();
                while seen.contains(&label) {
                    label.push('\'');
                }
                seen.push(label.clone());
                Vertex { id, label, n: b.n }
            })
            .collect()
    }

    /// `t_ij`: ranks of the block components.
    pub fn natural_quiver(&self) -> Result<Quiver> {
        let k = self.block_count();
        let sizes = self.sizes();
        let mut arrows = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                arrows[i][j] = bimodule_rank(self.component(i, j).dim(), sizes[j], sizes[i])?;
            }
        }
        Ok(Quiver { vertices: self.vertices(), arrows })
    }

    /// `m_ij = dim ε_j (r/r²) ε_i` for lifted primitive idempotents,
    /// cross-checked against `dim(component) / (n_i n_j)`.
    pub fn ordinary_quiver(&self) -> Result<Quiver> {
        let k = self.block_count();
        let sizes = self.sizes();
        let a = &self.algebra;
        let r = self.chain.radical();
        let r2 = self.chain.power(2);
        let mut arrows = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let (ei, ej) = (&self.primitive.elements[i], &self.primitive.elements[j]);
                let corner = |x: &Subspace| {
                    Subspace::span(a.field(), a.dim(), x.basis().iter().map(|v| a.mul(&a.mul(ej, v), ei)))
                };
                let m = corner(r).dim() - corner(&r2).dim();
                let dim = self.component(i, j).dim();
                let nn = sizes[i] * sizes[j];
                if !dim.is_multiple_of(nn) || dim / nn != m {
                    return Err(Error::InvalidAlgebra(format!(
                        "corner count {m} for {i} -> {j} disagrees with component dimension {dim} / {nn}"
                    )));
                }
                arrows[i][j] = m;
            }
        }
        Ok(Quiver { vertices: self.vertices(), arrows })
    }

    pub fn is_basic(&self) -> bool {
        self.sizes().iter().all(|&n| n == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        matrix_algebra, path_algebra, polynomial_quotient, triangular, two_armed_example, QuiverSpec,
    };

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn radical_bimodules() {
        let a = polynomial_quotient(gf(7), 3);
        let an = analyze(&a, &AnalysisOptions::default()).unwrap();
        assert_eq!(an.bimodule.dim, 1);
        an.bimodule.check(&an.wedderburn.semisimple).unwrap();
        assert_eq!(an.natural_quiver().unwrap().arrows, vec![vec![1]]);

        let s = matrix_algebra(2, gf(7));
        let an = analyze(&s, &AnalysisOptions::default()).unwrap();
        assert_eq!(an.bimodule.dim, 0);
        assert_eq!(an.ordinary_quiver().unwrap().arrow_count(), 0);
        assert_eq!(an.component(0, 0).dim(), 0);
    }

    #[test]
    fn a2_component() {
        let q = QuiverSpec::new(&["1", "2"], &[("a", 0, 1)]);
        let pa = path_algebra(gf(7), &q, &[], None).unwrap();
        let an = analyze(&pa.algebra, &AnalysisOptions::default()).unwrap();
        let dims: Vec<usize> =
            (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).map(|(i, j)| an.component(i, j).dim()).collect();
        assert_eq!(dims.iter().sum::<usize>(), 1);
        let nat = an.natural_quiver().unwrap();
        assert_eq!(nat, an.ordinary_quiver().unwrap());
        assert!(nat.isomorphism(&Quiver::new(&[1, 1], &[(0, 1)]), true).is_some());
    }

    #[test]
    fn rank_formula() {
        assert_eq!(bimodule_rank(1, 1, 1).unwrap(), 1);
        assert_eq!(bimodule_rank(4, 1, 2).unwrap(), 1);
        assert!(matches!(bimodule_rank(3, 1, 2), Err(Error::MalformedBimodule { dim: 3, divisor: 2 })));
        assert_eq!(bimodule_rank(12, 1, 2).unwrap(), 3);
        assert_eq!(bimodule_rank(0, 2, 2).unwrap(), 0);
    }

    #[test]
    fn oracle_examples() {
        let f = gf(3);
        // regular bimodule of M_2 over itself
        let m2 = matrix_algebra(2, f);
        let reg = Bimodule {
            field: f,
            dim: 4,
            left: (0..4).map(|i| m2.left_matrix(&m2.basis_element(i))).collect(),
            right: (0..4).map(|i| m2.right_matrix(&m2.basis_element(i))).collect(),
        };
        reg.check(&m2).unwrap();
        let g = min_generators_oracle(&reg, &GeneratorSearch::default()).unwrap();
        assert_eq!(g.generators.len(), 1);
        assert!(g.is_certified());

        // scalars acting on k^2
        let k = matrix_algebra(1, f);
        let diag =
            Bimodule { field: f, dim: 2, left: vec![Matrix::identity(f, 2)], right: vec![Matrix::identity(f, 2)] };
        diag.check(&k).unwrap();
        let g = min_generators_oracle(&diag, &GeneratorSearch::default()).unwrap();
        assert_eq!(g.generators.len(), 2);
        assert!(g.is_certified() && g.exhaustive);
    }

    #[test]
    fn dense_subquivers() {
        let q = Quiver::new(&[1, 1], &[(0, 1)]);
        assert!(q.is_dense_subquiver_of(&q));
        let thick = Quiver::new(&[1, 1], &[(0, 1), (0, 1)]);
        assert!(q.is_dense_subquiver_of(&thick));
        assert!(!thick.is_dense_subquiver_of(&q));
        assert!(!q.is_dense_subquiver_of(&Quiver::new(&[1, 1, 1], &[(0, 1)])));
    }

    #[test]
    fn exports() {
        let single = Quiver::new(&[1], &[]);
        assert_eq!(single.to_dot(), "digraph quiver {\n  0 [label=\"0:1(n=1)\"];\n}\n");
        let a2 = Quiver::new(&[1, 1], &[(0, 1)]);
        assert_eq!(a2.to_dot().matches("->").count(), 1);
        let json = a2.to_json();
        assert_eq!(json["arrows"][0]["from"], 0);
        assert_eq!(json["arrows"][0]["count"], 1);
        assert_eq!(Quiver::from_json(&json).unwrap(), a2);
    }

    #[test]
    fn two_armed_quivers() {
        let ex = two_armed_example(gf(5)).unwrap();
        let an = analyze(&ex.skew, &AnalysisOptions::default()).unwrap();
        assert_eq!(an.bimodule.dim, 8);
        let expected = Quiver::new(&ex.expected_block_sizes, &ex.expected_arrows);
        let nat = an.natural_quiver().unwrap();
        let ord = an.ordinary_quiver().unwrap();
        assert_eq!(nat, ord);
        assert!(nat.isomorphism(&expected, true).is_some());
        assert_eq!(nat.to_dot().matches("->").count(), 3);
    }

    #[test]
    fn triangular_three() {
        let an = analyze(&triangular(3, gf(5)), &AnalysisOptions::default()).unwrap();
        let q = an.natural_quiver().unwrap();
        assert_eq!(q.arrow_count(), 2);
        assert_eq!(q, an.ordinary_quiver().unwrap());
    }
}
