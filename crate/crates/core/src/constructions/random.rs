//! Seeded random instances: acyclic quivers with relations and
//! radical-graded quotients of truncated tensor algebras.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::path::{Arrow, QuiverSpec, Relation};
use super::{direct_product, matrix_algebra};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::GradedAlgebra;
use crate::matrix::Matrix;
use crate::quiver::Bimodule;
use crate::radical::quotient;
use crate::tensor::{predicted_tensor_dims, truncated_tensor_algebra};
use crate::wedderburn::{decompose, WedderburnOptions};

/// Acyclic quiver on at most `max_vertices` vertices with at most
/// `max_arrows` arrows, all going from lower to higher index before a random
/// relabelling.
pub fn random_acyclic_quiver<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_arrows: usize) -> QuiverSpec {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let arrows = if n > 1 { rng.gen_range(0..=max_arrows) } else { 0 };
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let arrows = (0..arrows)
        .map(|k| {
            let a = rng.gen_range(0..n - 1);
            let b = rng.gen_range(a + 1..n);
            Arrow { name: format!("a{k}"), from: order[a], to: order[b] }
        })
        .collect();
    QuiverSpec { vertices: (1..=n).map(|v| v.to_string()).collect(), arrows }
}

/// Paths of length `min_len..=max_len` as arrow lists, grouped by endpoints.
fn parallel_paths(q: &QuiverSpec, min_len: usize, max_len: usize) -> Vec<Vec<Vec<usize>>> {
    let n = q.vertices.len();
    let mut layer: Vec<(usize, usize, Vec<usize>)> =
        q.arrows.iter().enumerate().map(|(k, a)| (a.from, a.to, vec![k])).collect();
    let mut groups: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n * n];
    for len in 1..=max_len {
        if len >= min_len {
            for (s, t, p) in &layer {
                groups[s * n + t].push(p.clone());
            }
        }
        let mut next = Vec::new();
        for (s, t, p) in &layer {
            for (k, a) in q.arrows.iter().enumerate() {
                if a.from == *t {
                    let mut p2 = p.clone();
                    p2.push(k);
                    next.push((*s, a.to, p2));
                }
            }
        }
        layer = next;
    }
    groups.into_iter().filter(|g| !g.is_empty()).collect()
}

/// Up to `count` random uniform relations in path lengths `2..=3`.
pub fn random_relations<R: Rng + ?Sized>(rng: &mut R, field: Field, q: &QuiverSpec, count: usize) -> Vec<Relation> {
    let groups = parallel_paths(q, 2, 3);
    if groups.is_empty() {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let g = groups.choose(rng).unwrap();
            let k = rng.gen_range(1..=g.len().min(3));
            let terms = g
                .choose_multiple(rng, k)
                .map(|p| {
                    let c = loop {
                        let c = field.random(rng);
                        if !field.is_zero(&c) {
                            break c;
                        }
                    };
                    (c, p.clone())
                })
                .collect();
            Relation { terms }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub from: usize,
    pub to: usize,
    /// Dimension of the component; a multiple of `n_from * n_to`.
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedProfile {
    pub block_sizes: Vec<usize>,
    pub components: Vec<ComponentSpec>,
    pub truncation: usize,
    /// Number of random corner-homogeneous ideal generators in degrees >= 2.
    #[serde(default)]
    pub relations: usize,
    /// Apply a random homogeneous change of basis.
    #[serde(default)]
    pub scramble: bool,
}

impl GradedProfile {
    pub fn validate(&self) -> Result<()> {
        let k = self.block_sizes.len();
        if k == 0 || self.block_sizes.contains(&0) {
            return Err(Error::InvalidInput("block sizes must be positive".into()));
        }
        for c in &self.components {
            if c.from >= k || c.to >= k {
                return Err(Error::InvalidInput(format!("component {} -> {} outside the blocks", c.from, c.to)));
            }
            let nn = self.block_sizes[c.from] * self.block_sizes[c.to];
            if c.dim % nn != 0 {
                return Err(Error::MalformedBimodule { dim: c.dim, divisor: nn });
            }
        }
        Ok(())
    }

    /// `dim M^{⊗m}` for `m = 0..=truncation`, before any relations: with
    /// `C` the matrix of multiplicities, degree `m` has `(C^m)_ij` simple
    /// summands of dimension `n_i n_j` for each pair.
    pub fn tensor_dims(&self) -> Vec<usize> {
        let n = &self.block_sizes;
        let mut c = vec![vec![0usize; n.len()]; n.len()];
        for comp in &self.components {
            c[comp.from][comp.to] += comp.dim / (n[comp.from] * n[comp.to]);
        }
        predicted_tensor_dims(n, &c, self.truncation)
    }

    /// A random profile: blocks of size in `1..=max_n`, a few components.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_blocks: usize, max_n: usize, max_truncation: usize) -> Self {
        let k = rng.gen_range(1..=max_blocks);
        let block_sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=max_n)).collect();
        let count = rng.gen_range(1..=k + 1);
        let components = (0..count)
            .map(|_| {
                let (from, to) = (rng.gen_range(0..k), rng.gen_range(0..k));
                let nn = block_sizes[from] * block_sizes[to];
                ComponentSpec { from, to, dim: nn * rng.gen_range(1..=2) }
            })
            .collect();
        GradedProfile {
            block_sizes,
            components,
            truncation: rng.gen_range(1..=max_truncation),
            relations: rng.gen_range(0..=3),
            scramble: true,
        }
    }
}

/// Block-supported bimodule over `∏ M_{n_i}` in the matrix-unit basis of
/// [`direct_product`]: each component of dim `c n_i n_j` is `c` copies of
/// the `n_to x n_from` matrices.
fn block_bimodule(field: Field, sizes: &[usize], components: &[ComponentSpec]) -> Bimodule {
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &n| {
            let o = *acc;
            *acc += n * n;
            Some(o)
        })
        .collect();
    let s_dim: usize = sizes.iter().map(|n| n * n).sum();
    let mut copies = Vec::new();
    for c in components {
        for _ in 0..c.dim / (sizes[c.from] * sizes[c.to]) {
            copies.push((c.from, c.to));
        }
    }
    let dim: usize = copies.iter().map(|&(i, j)| sizes[i] * sizes[j]).sum();
    let mut left = vec![Matrix::zeros(field, dim, dim); s_dim];
    let mut right = vec![Matrix::zeros(field, dim, dim); s_dim];
    let mut base = 0;
    for &(i, j) in &copies {
        let (ni, nj) = (sizes[i], sizes[j]);
        // F_pq with p < n_j, q < n_i at base + p n_i + q
        for p in 0..nj {
            for q in 0..ni {
                let col = base + p * ni + q;
                // E^j_ap F_pq = F_aq
                for a in 0..nj {
                    left[offsets[j] + a * nj + p][(base + a * ni + q, col)] = field.one();
                }
                // F_pq E^i_qb = F_pb
                for b in 0..ni {
                    right[offsets[i] + q * ni + b][(base + p * ni + b, col)] = field.one();
                }
            }
        }
        base += ni * nj;
    }
    Bimodule { field, dim, left, right }
}

#[derive(Debug, Clone)]
pub struct RandomGraded {
    pub graded: GradedAlgebra,
    pub profile: GradedProfile,
    /// Dimension of the ideal divided out of the truncated tensor algebra.
    pub ideal_dim: usize,
}

/// `T(A_0, M) / K` for `A_0 = ∏ M_{n_i}`, `M` as in the profile and `K` the
/// ideal generated by random corner-homogeneous elements of degree `>= 2`.
pub fn random_radical_graded(seed: u64, field: Field, profile: &GradedProfile) -> Result<RandomGraded> {
    profile.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors: Vec<Algebra> = profile.block_sizes.iter().map(|&n| matrix_algebra(n, field)).collect();
    let s = direct_product(&factors)?;
    let m = block_bimodule(field, &profile.block_sizes, &profile.components);
    m.check(&s)?;
    let w = decompose(&s, &WedderburnOptions { seed, ..Default::default() })?;
    let t = truncated_tensor_algebra(&w, &m, profile.truncation);
    let ta = t.algebra();
    let dims = t.degree_dims();
    let central: Vec<Element> = w.central_idempotents().iter().map(|e| t.embed(0, e)).collect();
    let mut gens = Vec::new();
    let degrees: Vec<usize> = (2..dims.len()).filter(|&d| dims[d] > 0).collect();
    if !degrees.is_empty() {
        for _ in 0..profile.relations {
            let d = *degrees.choose(&mut rng).unwrap();
            let x = t.embed(d, &field.random_vec(&mut rng, dims[d]));
            let (ei, ej) = (central.choose(&mut rng).unwrap(), central.choose(&mut rng).unwrap());
            let y = ta.mul(&ta.mul(ej, &x), ei);
            if !field.is_zero_vec(&y) {
                gens.push(y);
            }
        }
    }
    let ideal = ta.ideal_closure(gens);
    let q = quotient(ta, &ideal)?;
    let degrees: Vec<usize> = q.cosets().pivots().iter().map(|&p| t.graded.degrees[p]).collect();
    let mut graded = GradedAlgebra::new(q.algebra, degrees)?;
    if profile.scramble {
        graded = scramble(&graded, &mut rng)?;
    }
    Ok(RandomGraded { graded, profile: profile.clone(), ideal_dim: ideal.dim() })
}

fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let rows = (0..n).map(|_| field.random_vec(rng, n)).collect();
        let m = Matrix::from_rows(field, rows, n);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random invertible change of basis inside each homogeneous component.
pub fn scramble<R: Rng + ?Sized>(g: &GradedAlgebra, rng: &mut R) -> Result<GradedAlgebra> {
    let a = &g.algebra;
    let f = a.field();
    let mut p = Matrix::zeros(f, a.dim(), a.dim());
    let mut order = Vec::new();
    for d in 0..=g.max_degree() {
        let idx = g.indices_of_degree(d);
        let block = random_invertible(f, idx.len(), rng);
        for (c, _) in idx.iter().enumerate() {
            for (r, &row) in idx.iter().enumerate() {
                p[(row, order.len() + c)] = block[(r, c)].clone();
            }
        }
        order.extend(idx.iter().map(|_| d));
    }
    // column `c` of `p` is the `c`-th new basis vector
    let pinv = p.inverse().expect("block diagonal of invertible blocks");
    let cols: Vec<Element> = (0..a.dim()).map(|c| p.column(c)).collect();
    let labels = (0..a.dim()).map(|k| format!("b{k}")).collect();
    let mut out = Algebra::zero_products(f, labels, pinv.mul_vec(a.unit()))?;
    for (i, u) in cols.iter().enumerate() {
        let l = a.left_matrix(u);
        for (j, v) in cols.iter().enumerate() {
            out.set_product(i, j, pinv.mul_vec(&l.mul_vec(v)))?;
        }
    }
    GradedAlgebra::new(out, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::path_algebra;
    use crate::quiver::{analyze, AnalysisOptions};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn profile(sizes: &[usize], comps: &[(usize, usize, usize)], truncation: usize) -> GradedProfile {
        GradedProfile {
            block_sizes: sizes.to_vec(),
            components: comps.iter().map(|&(from, to, dim)| ComponentSpec { from, to, dim }).collect(),
            truncation,
            relations: 0,
            scramble: false,
        }
    }

    #[test]
    fn forced_polynomial() {
        let r = random_radical_graded(0, gf(7), &profile(&[1], &[(0, 0, 1)], 2)).unwrap();
        assert_eq!(r.graded.component_dims(), vec![1, 1, 1]);
        let an = analyze(&r.graded.algebra, &AnalysisOptions::default()).unwrap();
        assert_eq!(an.loewy_length(), 3);
    }

    #[test]
    fn forced_a2() {
        let r = random_radical_graded(0, gf(7), &profile(&[1, 1], &[(0, 1, 1)], 1)).unwrap();
        assert_eq!(r.graded.algebra.dim(), 3);
        let an = analyze(&r.graded.algebra, &AnalysisOptions::default()).unwrap();
        assert_eq!(an.natural_quiver().unwrap().arrows, vec![vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn predicted_tensor_dims() {
        let p = profile(&[1, 2], &[(0, 1, 2), (1, 1, 4)], 3);
        let r = random_radical_graded(0, gf(7), &p).unwrap();
        assert_eq!(p.tensor_dims(), r.graded.component_dims());
        assert_eq!(p.tensor_dims(), vec![5, 6, 6, 6]);
    }

    #[test]
    fn block_bimodule_is_bimodule() {
        let f = gf(5);
        let sizes = [1, 2, 3];
        let s = direct_product(&sizes.iter().map(|&n| matrix_algebra(n, f)).collect::<Vec<_>>()).unwrap();
        let m = block_bimodule(
            f,
            &sizes,
            &[ComponentSpec { from: 0, to: 1, dim: 4 }, ComponentSpec { from: 2, to: 1, dim: 6 }],
        );
        m.check(&s).unwrap();
        assert_eq!(m.dim, 10);
    }

    #[test]
    fn random_instances_are_radical_graded() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..6 {
            let p = GradedProfile::random(&mut rng, 3, 2, 3);
            let r = random_radical_graded(seed, gf(101), &p).unwrap();
            assert!(r.graded.algebra.validate().is_valid());
            assert!(r.graded.is_radical_graded(), "{:?}", r.graded.radical_graded_failure());
        }
    }

    #[test]
    fn random_quiver_relations_are_uniform() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = gf(7);
        for _ in 0..20 {
            let q = random_acyclic_quiver(&mut rng, 6, 8);
            assert!(q.is_acyclic());
            let rels = random_relations(&mut rng, f, &q, 2);
            let pa = path_algebra(f, &q, &rels, None).unwrap();
            assert!(pa.algebra.validate().is_valid());
        }
    }
}
