//! Block decomposition of split semisimple algebras, matrix units, and lifting
//! of idempotents modulo the radical.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::poly::{linear_factors, split_roots, Poly};
use crate::radical::Quotient;
use crate::subspace::Subspace;

#[derive(Debug, Clone, Copy)]
pub struct WedderburnOptions {
    pub seed: u64,
    /// Random candidates tried per refinement step of the minimal left ideal search.
    pub trials: usize,
}

impl Default for WedderburnOptions {
    fn default() -> Self {
        WedderburnOptions { seed: 0, trials: 200 }
    }
}

/// A simple block `S e ≅ M_n(k)` with explicit matrix units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub central_idempotent: Element,
    pub basis: Subspace,
    pub n: usize,
    /// `matrix_units[a][b]` is the preimage of the matrix unit `E_ab`.
    pub matrix_units: Vec<Vec<Element>>,
}

impl Block {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Preimage of `E_11`.
    pub fn primitive_idempotent(&self) -> &Element {
        &self.matrix_units[0][0]
    }

    /// The `n x n` matrix of a block element.
    pub fn representation(&self, x: &[Scalar]) -> Option<Matrix> {
        let f = self.basis.field();
        let n = self.n;
        let cols: Vec<Element> = self.matrix_units.iter().flatten().cloned().collect();
        let u = Matrix::from_columns(f, &cols, self.basis.ambient());
        let c = u.solve(x)?;
        Some(Matrix::from_rows(f, (0..n).map(|a| c[a * n..(a + 1) * n].to_vec()).collect(), n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnData {
    pub semisimple: Algebra,
    pub blocks: Vec<Block>,
}

impl WedderburnData {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.n).collect()
    }

    pub fn primitive_idempotents(&self) -> IdempotentFamily {
        IdempotentFamily {
            elements: self.blocks.iter().map(|b| b.primitive_idempotent().clone()).collect(),
            complete: self.blocks.iter().all(|b| b.n == 1),
        }
    }

    pub fn central_idempotents(&self) -> Vec<Element> {
        self.blocks.iter().map(|b| b.central_idempotent.clone()).collect()
    }

    /// Re-checks every structural claim: central orthogonal idempotents summing
    /// to 1, `Σ n² = dim S`, and the matrix unit relations in every block.
    pub fn check(&self) -> Result<()> {
        let s = &self.semisimple;
        let f = s.field();
        let fail = |msg: String| Err(Error::NotSemisimple(msg));
        let mut total = s.zero();
        let z = s.center();
        for (i, bi) in self.blocks.iter().enumerate() {
            let e = &bi.central_idempotent;
            total = f.add_vec(&total, e);
            if !z.contains(e) {
                return fail(format!("block {i} idempotent is not central"));
            }
            for (j, bj) in self.blocks.iter().enumerate() {
                let p = s.mul(e, &bj.central_idempotent);
                let expected = if i == j { e.clone() } else { s.zero() };
                if p != expected {
                    return fail(format!("central idempotents {i}, {j} are not orthogonal idempotents"));
                }
            }
            let n = bi.n;
            let mut diag = s.zero();
            for a in 0..n {
                diag = f.add_vec(&diag, &bi.matrix_units[a][a]);
                for b in 0..n {
                    if !bi.basis.contains(&bi.matrix_units[a][b]) {
                        return fail(format!("matrix unit outside block {i}"));
                    }
                    for c in 0..n {
                        for d in 0..n {
                            let p = s.mul(&bi.matrix_units[a][b], &bi.matrix_units[c][d]);
                            let expected = if b == c { bi.matrix_units[a][d].clone() } else { s.zero() };
                            if p != expected {
                                return fail(format!("matrix units of block {i} violate E_ab E_cd = δ_bc E_ad"));
                            }
                        }
                    }
                }
            }
            if &diag != e {
                return fail(format!("diagonal matrix units of block {i} do not sum to its central idempotent"));
            }
        }
        if &total != s.unit() {
            return fail("central idempotents do not sum to 1".into());
        }
        let sq: usize = self.blocks.iter().map(|b| b.n * b.n).sum();
        if sq != s.dim() {
            return fail(format!("sum of n_i^2 is {sq}, dimension is {}", s.dim()));
        }
        Ok(())
    }
}

/// Pairwise orthogonal idempotents; `complete` when they sum to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentFamily {
    pub elements: Vec<Element>,
    pub complete: bool,
}

/// `e Z` for the center `Z`, as a subspace.
fn center_part(s: &Algebra, z: &Subspace, e: &[Scalar]) -> Subspace {
    Subspace::span(s.field(), s.dim(), z.basis().iter().map(|b| s.mul(e, b)))
}

/// `Π_{l≠k} (y - λ_l e) / (λ_k - λ_l)` for each root `λ_k`.
fn spectral_idempotents(s: &Algebra, y: &[Scalar], e: &[Scalar], roots: &[Scalar]) -> Vec<Element> {
    let f = s.field();
    roots
        .iter()
        .enumerate()
        .map(|(k, lk)| {
            let mut acc = e.to_vec();
            for (l, ll) in roots.iter().enumerate() {
                if l == k {
                    continue;
                }
                let shifted = f.sub_vec(y, &f.scale(ll, e));
                let inv = f.inv(&f.sub(lk, ll)).unwrap();
                acc = f.scale(&inv, &s.mul(&acc, &shifted));
            }
            acc
        })
        .collect()
}

/// Primitive central idempotents of a split semisimple algebra.
pub fn central_idempotents(s: &Algebra) -> Result<Vec<Element>> {
    let f = s.field();
    let z = s.center();
    let mut done = Vec::new();
    let mut todo = vec![s.unit().clone()];
    while let Some(e) = todo.pop() {
        let ez = center_part(s, &z, &e);
        if ez.dim() == 1 {
            done.push(e);
            continue;
        }
        let mut split = None;
        for b in ez.basis() {
            let coeffs = s.minimal_polynomial(b, &e);
            let poly = Poly::new(f, coeffs);
            let roots = split_roots(&poly)?;
            let mut distinct = roots.clone();
            distinct.dedup();
            if distinct.len() < roots.len() {
                return Err(Error::NotSemisimple("central element with a repeated eigenvalue".into()));
            }
            if distinct.len() > 1 {
                split = Some(spectral_idempotents(s, b, &e, &distinct));
                break;
            }
        }
        match split {
            Some(parts) => todo.extend(parts),
            None => return Err(Error::NotSemisimple("center is not split semisimple".into())),
        }
    }
    if done.len() != z.dim() {
        return Err(Error::NotSemisimple(format!(
            "found {} central idempotents for a center of dimension {}",
            done.len(),
            z.dim()
        )));
    }
    Ok(done)
}

/// Integer square root when `d` is a perfect square.
fn exact_sqrt(d: usize) -> Option<usize> {
    let r = (d as f64).sqrt().round() as usize;
    (r * r == d).then_some(r)
}

/// `{x ∈ sub : y x = 0}`.
fn left_annihilated(s: &Algebra, sub: &Subspace, y: &[Scalar]) -> Subspace {
    let f = s.field();
    let l = s.left_matrix(y);
    let images: Vec<Element> = sub.basis().iter().map(|b| l.mul_vec(b)).collect();
    let m = Matrix::from_columns(f, &images, s.dim());
    Subspace::span(f, s.dim(), m.kernel_basis().into_iter().map(|c| sub.combine(&c)))
}

/// Candidate elements of the corner `p B p`, deterministic first, then random.
fn corner_candidates<'a>(
    s: &'a Algebra,
    block: &'a Subspace,
    p: &'a [Scalar],
    rng: &'a mut ChaCha8Rng,
    trials: usize,
) -> impl Iterator<Item = Element> + 'a {
    let f = s.field();
    let corner = move |x: &[Scalar]| s.mul(&s.mul(p, x), p);
    let basis: Vec<Element> = block.basis().to_vec();
    let n = basis.len();
    let singles = (0..n).map({
        let basis = basis.clone();
        move |i| corner(&basis[i])
    });
    let pairs = (0..n).flat_map(move |i| (0..n).map(move |j| (i, j))).flat_map({
        let basis = basis.clone();
        move |(i, j)| {
            let prod = corner(&s.mul(&basis[i], &basis[j]));
            let sum = corner(&f.add_vec(&basis[i], &basis[j]));
            [prod, sum]
        }
    });
    let randoms = (0..trials).map(move |_| {
        let c = f.random_vec(rng, n);
        corner(&block.combine(&c))
    });
    singles.chain(pairs).chain(randoms)
}

/// A minimal left ideal `L ⊆ S e` of dimension `n`, with a primitive
/// idempotent generating it.
///
/// Starts from `p = e` and repeatedly replaces `p` by a generalized
/// eigenspace projection of some element of the corner `p S p`, which strictly
/// lowers the rank of `p`. A candidate `y` whose eigenvalue `λ` has a
/// one-dimensional eigenspace finishes at once: any nonzero `v` with
/// `(y - λp) v = 0` inside `S p` generates a minimal left ideal.
pub fn minimal_left_ideal(s: &Algebra, e: &[Scalar], opts: &WedderburnOptions) -> Result<(Subspace, Element)> {
    let f = s.field();
    let d = s.dim();
    let block = Subspace::span(f, d, (0..d).map(|i| s.mul(&s.basis_element(i), e)));
    let n = exact_sqrt(block.dim())
        .ok_or_else(|| Error::NonSplit(format!("block of dimension {} is not a full matrix algebra", block.dim())))?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut p = e.to_vec();
    let mut tried = 0;
    loop {
        let left = left_ideal(s, &p);
        if left.dim() == n {
            return Ok((left, p));
        }
        let rank = left.dim() / n;
        let mut next = None;
        for y in corner_candidates(s, &block, &p, &mut rng, opts.trials) {
            tried += 1;
            let poly = Poly::new(f, s.minimal_polynomial(&y, &p));
            let (roots, _) = linear_factors(&poly);
            let mut distinct = roots.clone();
            distinct.dedup();
            if let Some(q) = rank_one_from_eigenspace(s, &left, &y, &p, &distinct, n) {
                next = Some(q);
                break;
            }
            if distinct.len() < 2 {
                continue;
            }
            for lambda in &distinct {
                if let Some(q) = generalized_projection(s, &y, &p, &poly, lambda) {
                    let r = left_ideal(s, &q).dim() / n;
                    if r > 0 && r < rank {
                        next = Some(q);
                        break;
                    }
                }
            }
            if next.is_some() {
                break;
            }
        }
        match next {
            Some(q) => p = q,
            None => return Err(Error::SearchExhausted(tried)),
        }
    }
}

/// `S x`.
fn left_ideal(s: &Algebra, x: &[Scalar]) -> Subspace {
    Subspace::span(s.field(), s.dim(), (0..s.dim()).map(|i| s.mul(&s.basis_element(i), x)))
}

/// If some eigenvalue of `y` on the corner has a one-dimensional eigenspace,
/// returns a primitive idempotent of `S p` built from it.
fn rank_one_from_eigenspace(
    s: &Algebra,
    left: &Subspace,
    y: &[Scalar],
    p: &[Scalar],
    roots: &[Scalar],
    n: usize,
) -> Option<Element> {
    let f = s.field();
    for lambda in roots {
        let shifted = f.sub_vec(y, &f.scale(lambda, p));
        let ker = left_annihilated(s, left, &shifted);
        if ker.dim() == n {
            let v = ker.basis()[0].clone();
            let l = left_ideal(s, &v);
            if l.dim() == n {
                return idempotent_in(s, &l);
            }
        }
    }
    None
}

/// An idempotent generating the minimal left ideal `l`: any `w` with
/// `w v ≠ 0` for a generator `v` gives `v w` of rank one, and a rank-one
/// non-nilpotent element is a scalar multiple of an idempotent.
fn idempotent_in(s: &Algebra, l: &Subspace) -> Option<Element> {
    let f = s.field();
    let d = s.dim();
    for v in l.basis() {
        for i in 0..d {
            let x = s.mul(v, &s.basis_element(i));
            if f.is_zero_vec(&x) {
                continue;
            }
            let sq = s.mul(&x, &x);
            // x^2 = c x with c ≠ 0
            let k = x.iter().position(|c| !f.is_zero(c)).unwrap();
            let c = f.div(&sq[k], &x[k]);
            if !f.is_zero(&c) && sq == f.scale(&c, &x) {
                let e = f.scale(&f.inv(&c).unwrap(), &x);
                if left_ideal(s, &e) == *l {
                    return Some(e);
                }
            }
        }
    }
    None
}

/// Projection onto the generalized `λ`-eigenspace of `y` inside `p S p`:
/// `u(y) (y - λ)^m` with `u (x-λ)^m + v g = 1`, `g` the cofactor.
fn generalized_projection(s: &Algebra, y: &[Scalar], p: &[Scalar], minpoly: &Poly, lambda: &Scalar) -> Option<Element> {
    let f = s.field();
    let lin = Poly::linear(f, lambda);
    let mut m = 0;
    let mut cof = minpoly.clone();
    loop {
        let (q, r) = cof.div_rem(&lin);
        if !r.is_zero() {
            break;
        }
        cof = q;
        m += 1;
    }
    if m == 0 || cof.degree() == Some(0) {
        return None;
    }
    let power = lin.pow(m);
    let (g, _u, v) = power.ext_gcd(&cof);
    if g.degree() != Some(0) {
        return None;
    }
    // v cof ≡ 1 mod (x-λ)^m: projection onto the λ-part
    let proj = v.mul(&cof).rem(minpoly);
    Some(eval_in(s, &proj, y, p))
}

fn eval_in(s: &Algebra, poly: &Poly, y: &[Scalar], one: &[Scalar]) -> Element {
    let f = s.field();
    let mut acc = s.zero();
    for c in poly.coeffs().iter().rev() {
        acc = s.mul(&acc, y);
        acc = f.add_vec(&acc, &f.scale(c, one));
    }
    acc
}

/// Block data for a primitive central idempotent `e`: size `n` and matrix
/// units from the left action on a minimal left ideal.
pub fn block_data(s: &Algebra, e: &[Scalar], opts: &WedderburnOptions) -> Result<Block> {
    let f = s.field();
    let d = s.dim();
    let basis = Subspace::span(f, d, (0..d).map(|i| s.mul(&s.basis_element(i), e)));
    let (left, _) = minimal_left_ideal(s, e, opts)?;
    let n = left.dim();
    // ρ: block -> M_n, x -> matrix of v -> x v on the echelon basis of `left`
    let rho = |x: &[Scalar]| -> Element {
        let l = s.left_matrix(x);
        let mut out = Vec::with_capacity(n * n);
        let images: Vec<Element> = left.basis().iter().map(|v| left.coordinates(&l.mul_vec(v)).unwrap()).collect();
        for a in 0..n {
            for b in 0..n {
                out.push(images[b][a].clone());
            }
        }
        out
    };
    let cols: Vec<Element> = basis.basis().iter().map(|b| rho(b)).collect();
    let m = Matrix::from_columns(f, &cols, n * n);
    if m.rank() != n * n || basis.dim() != n * n {
        return Err(Error::NotSemisimple("left action on a minimal left ideal is not bijective".into()));
    }
    let mut units = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            let c = m.solve(&f.unit_vec(n * n, a * n + b)).unwrap();
            units[a][b] = basis.combine(&c);
        }
    }
    // multiplicativity on basis pairs; ρ is linear, so ρ(xy) comes from the
    // coordinates of xy in the block
    let as_matrix = |v: &Element| Matrix::from_rows(f, v.chunks(n).map(<[Scalar]>::to_vec).collect(), n);
    let reps: Vec<Matrix> = cols.iter().map(as_matrix).collect();
    for (x, rx) in basis.basis().iter().zip(&reps) {
        for (y, ry) in basis.basis().iter().zip(&reps) {
            let Some(c) = basis.coordinates(&s.mul(x, y)) else {
                return Err(Error::NotSemisimple("block is not closed under multiplication".into()));
            };
            if rx.mul(ry).row_vecs().concat() != m.mul_vec(&c) {
                return Err(Error::NotSemisimple("block representation is not multiplicative".into()));
            }
        }
    }
    Ok(Block { central_idempotent: e.to_vec(), basis, n, matrix_units: units })
}

/// Full decomposition of a split semisimple algebra. Blocks are ordered by
/// `(n, support of the central idempotent)`.
pub fn decompose(s: &Algebra, opts: &WedderburnOptions) -> Result<WedderburnData> {
    let f = s.field();
    let mut blocks = central_idempotents(s)?.iter().map(|e| block_data(s, e, opts)).collect::<Result<Vec<_>>>()?;
    let support = |v: &Element| (0..v.len()).filter(|&i| !f.is_zero(&v[i])).collect::<Vec<_>>();
    blocks.sort_by_key(|b| (b.n, support(&b.central_idempotent)));
    let data = WedderburnData { semisimple: s.clone(), blocks };
    data.check()?;
    Ok(data)
}

/// Lifts a family of orthogonal idempotents of `A/I` (`I` nilpotent of
/// index at most `nilpotency`) to orthogonal idempotents of `A`.
pub fn lift_idempotents(
    a: &Algebra,
    quotient: &Quotient,
    family: &IdempotentFamily,
    nilpotency: usize,
) -> Result<IdempotentFamily> {
    let f = a.field();
    let q = &quotient.algebra;
    for (i, x) in family.elements.iter().enumerate() {
        if !q.is_idempotent(x) {
            return Err(Error::InvalidInput(format!("family element {i} is not idempotent")));
        }
        for (j, y) in family.elements.iter().enumerate() {
            if i != j && !f.is_zero_vec(&q.mul(x, y)) {
                return Err(Error::InvalidInput(format!("family elements {i}, {j} are not orthogonal")));
            }
        }
    }
    let rounds = (usize::BITS - nilpotency.max(1).saturating_sub(1).leading_zeros()) as usize + 1;
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let mut lifted: Vec<Element> = Vec::new();
    let mut used = a.zero();
    for target in &family.elements {
        let c = f.sub_vec(a.unit(), &used);
        let mut x = a.mul(&a.mul(&c, &quotient.lift(target)), &c);
        for _ in 0..rounds {
            let x2 = a.mul(&x, &x);
            let x3 = a.mul(&x2, &x);
            x = f.sub_vec(&f.scale(&three, &x2), &f.scale(&two, &x3));
        }
        if !a.is_idempotent(&x) || &quotient.project(&x) != target {
            return Err(Error::InvalidInput("idempotent lifting did not converge; is the ideal nilpotent?".into()));
        }
        used = f.add_vec(&used, &x);
        lifted.push(x);
    }
    let complete =
        f.is_zero_vec(&f.sub_vec(&family.elements.iter().fold(q.zero(), |acc, e| f.add_vec(&acc, e)), q.unit()));
    if complete && &used != a.unit() {
        return Err(Error::InvalidInput("lifted complete family does not sum to 1".into()));
    }
    Ok(IdempotentFamily { elements: lifted, complete })
}

/// Checks the lifting properties: idempotent, pairwise orthogonal, projecting
/// onto the given family, and summing to 1 when complete.
pub fn check_lift(a: &Algebra, quotient: &Quotient, family: &IdempotentFamily, lifted: &IdempotentFamily) -> bool {
    let f = a.field();
    let els = &lifted.elements;
    if els.len() != family.elements.len() {
        return false;
    }
    let idem = els.iter().all(|e| a.is_idempotent(e));
    let orth =
        els.iter().enumerate().all(|(i, x)| els.iter().enumerate().all(|(j, y)| i == j || f.is_zero_vec(&a.mul(x, y))));
    let proj = els.iter().zip(&family.elements).all(|(x, t)| &quotient.project(x) == t);
    let sum = !family.complete || els.iter().fold(a.zero(), |acc, e| f.add_vec(&acc, e)) == *a.unit();
    idem && orth && proj && sum
}
