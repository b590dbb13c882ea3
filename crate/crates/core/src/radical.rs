//! Jacobson radical, radical powers and quotient algebras.
//!
//! Over the rationals, and over GF(p) with p > dim A, the radical is the kernel
//! of the trace form `(x, y) -> tr(L_{xy})` of the left regular
//! representation. For small p the trace form is refined by the sequence of
//! ideals of Cohen, Ivanyos and Wales: with `l = floor(log_p n)`,
//! `I_{-1} = A` and
//!
//! ```text
//! I_i = { a in I_{i-1} : g_i(ab) = 0 for all b in A },
//! g_i(a) = tr(â^(p^i)) / p^i  (mod p)
//! ```
//!
//! where `â` is any integer lift of the left-multiplication matrix of `a`.
//! `I_l` is the radical. The brute-force [`radical_oracle`] is independent of
//! all of this and is used to cross-check it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{residue, Field, Scalar};
use crate::matrix::Matrix;
use crate::subspace::{Subquotient, Subspace};

pub fn radical(a: &Algebra) -> Result<Subspace> {
    let rad = match a.field() {
        Field::Rationals => trace_form_kernel(a),
        Field::Prime(p) => trace_power_sequence(a, p),
    };
    if !is_nilpotent_ideal(a, &rad) {
        return Err(Error::InvalidAlgebra(
            "trace-form radical is not a nilpotent ideal; is the algebra associative?".into(),
        ));
    }
    Ok(rad)
}

/// Gram matrix of the trace form on the basis.
fn trace_gram(a: &Algebra) -> Matrix {
    let f = a.field();
    let d = a.dim();
    let traces: Vec<Scalar> = (0..d).map(|k| a.left_matrix(&a.basis_element(k)).trace()).collect();
    let mut g = Matrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let mut t = f.zero();
            for (k, c) in a.basis_product(i, j) {
                t = f.add(&t, &f.mul(c, &traces[*k]));
            }
            g[(i, j)] = t;
        }
    }
    g
}

fn trace_form_kernel(a: &Algebra) -> Subspace {
    Subspace::kernel(&trace_gram(a))
}

/// True when the trace form is nondegenerate. Over the rationals or GF(p)
/// with p > dim, this is equivalent to semisimplicity.
pub fn trace_form_nondegenerate(a: &Algebra) -> bool {
    trace_gram(a).rank() == a.dim()
}

fn is_nilpotent_ideal(a: &Algebra, s: &Subspace) -> bool {
    a.is_two_sided_ideal(s) && a.is_nilpotent_subspace(s)
}

/// Every term contains the radical, so the sequence can stop at the first
/// nilpotent ideal.
fn trace_power_sequence(a: &Algebra, p: u64) -> Subspace {
    let f = a.field();
    let d = a.dim();
    let mut ideal = trace_form_kernel(a);
    let mut level = 1u32;
    while (p as u128).pow(level) <= d as u128 && !is_nilpotent_ideal(a, &ideal) {
        let pi = p.pow(level);
        let modulus = pi * p;
        let basis: Vec<Element> = ideal.basis().to_vec();
        if basis.is_empty() {
            break;
        }
        // g_i is linear on the ideal, so its values on the basis suffice.
        let g: Vec<u64> = basis
            .iter()
            .map(|x| {
                let t = IntMatrix::lift(&a.left_matrix(x), modulus).pow(pi).trace();
                debug_assert_eq!(t % pi, 0, "trace of p^i-th power not divisible by p^i");
                (t / pi) % p
            })
            .collect();
        // values[l][j] = g_i(x_l b_j)
        let mut values = Matrix::zeros(f, basis.len(), d);
        for (l, x) in basis.iter().enumerate() {
            for j in 0..d {
                let prod = a.mul(x, &a.basis_element(j));
                let coords = ideal.coordinates(&prod).expect("the ideal absorbs products");
                let v = coords.iter().zip(&g).map(|(c, gm)| residue(c) * gm % p).sum::<u64>() % p;
                values[(l, j)] = Scalar::Mod(v);
            }
        }
        // coefficients c with sum_l c_l values[l][j] = 0 for every j
        let coeffs = values.transpose().kernel_basis();
        ideal = Subspace::span(
            f,
            d,
            coeffs.iter().map(|c| {
                let mut v = f.zero_vec(d);
                for (cl, x) in c.iter().zip(&basis) {
                    f.axpy(&mut v, cl, x);
                }
                v
            }),
        );
        level += 1;
    }
    ideal
}

/// Square matrix of residues modulo a small modulus.
struct IntMatrix {
    n: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl IntMatrix {
    fn lift(m: &Matrix, modulus: u64) -> Self {
        let n = m.rows();
        let f = m.field();
        let data = (0..n * n).map(|k| f.residue(&m[(k / n, k % n)]) % modulus).collect();
        IntMatrix { n, modulus, data }
    }

    fn identity(n: usize, modulus: u64) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % modulus;
        }
        IntMatrix { n, modulus, data }
    }

    fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let m = self.modulus as u128;
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b != 0 {
                        let cur = &mut data[i * n + j];
                        *cur = ((*cur as u128 + a as u128 * b as u128) % m) as u64;
                    }
                }
            }
        }
        IntMatrix { n, modulus: self.modulus, data }
    }

    fn pow(&self, mut e: u64) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.n, self.modulus);
        let mut base = IntMatrix { n: self.n, modulus: self.modulus, data: self.data.clone() };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn trace(&self) -> u64 {
        (0..self.n).fold(0, |acc, i| (acc + self.data[i * self.n + i]) % self.modulus)
    }
}

/// Size limits for [`radical_oracle`].
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    pub max_dim: usize,
    pub max_char: u64,
    /// Largest number of candidate elements enumerated per extension step.
    pub enumeration_budget: u64,
    pub random_candidates: usize,
    pub seed: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_dim: 12, max_char: 5, enumeration_budget: 1 << 16, random_candidates: 256, seed: 0 }
    }
}

/// Largest nilpotent two-sided ideal by direct search.
///
/// Grows a nilpotent ideal `R` one element at a time: `x` is accepted when the
/// ideal generated by `R` and `x` is still nilpotent. When every element
/// outside `R` can be enumerated within budget the result is exact; otherwise
/// candidates are basis vectors, sums and differences of pairs, and seeded
/// random elements.
pub fn radical_oracle(a: &Algebra, limits: &OracleLimits) -> Result<Subspace> {
    let f = a.field();
    let d = a.dim();
    let p = match f {
        Field::Prime(p) if p <= limits.max_char && d <= limits.max_dim => p,
        _ => {
            return Err(Error::OracleLimit(format!(
                "dim {d} over {f} exceeds dim <= {} over GF(p <= {})",
                limits.max_dim, limits.max_char
            )))
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut current = Subspace::zero(f, d);
    'grow: loop {
        let free: Vec<usize> = (0..d).filter(|c| !current.pivots().contains(c)).collect();
        let count = (p as u128).checked_pow(free.len() as u32).unwrap_or(u128::MAX);
        let candidates: Box<dyn Iterator<Item = Element>> = if count <= limits.enumeration_budget as u128 {
            Box::new(projective_vectors(f, p, d, free))
        } else {
            let mut c: Vec<Element> = (0..d).map(|i| a.basis_element(i)).collect();
            for i in 0..d {
                for j in i + 1..d {
                    c.push(f.add_vec(&a.basis_element(i), &a.basis_element(j)));
                    c.push(f.sub_vec(&a.basis_element(i), &a.basis_element(j)));
                }
            }
            for _ in 0..limits.random_candidates {
                c.push(f.random_vec(&mut rng, d));
            }
            Box::new(c.into_iter())
        };
        for x in candidates {
            if current.contains(&x) || !a.is_nilpotent_element(&x) {
                continue;
            }
            let generators = current.basis().iter().cloned().chain(std::iter::once(x));
            let ideal = a.ideal_closure(generators);
            if a.is_nilpotent_subspace(&ideal) {
                current = ideal;
                continue 'grow;
            }
        }
        return Ok(current);
    }
}

/// Nonzero vectors supported on `free` whose first nonzero entry is 1.
fn projective_vectors(f: Field, p: u64, d: usize, free: Vec<usize>) -> impl Iterator<Item = Element> {
    let k = free.len();
    let total = (p as u128).pow(k as u32);
    (1..total).filter_map(move |mut n| {
        let mut v = f.zero_vec(d);
        let mut first = None;
        for &c in &free {
            let digit = (n % p as u128) as u64;
            n /= p as u128;
            if digit != 0 && first.is_none() {
                first = Some(digit);
            }
            v[c] = Scalar::Mod(digit);
        }
        (first == Some(1)).then_some(v)
    })
}

/// Powers `r, r^2, ..., r^s = 0` of the radical with the Loewy length `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalChain {
    pub powers: Vec<Subspace>,
    pub loewy_length: usize,
}

impl RadicalChain {
    pub fn radical(&self) -> &Subspace {
        &self.powers[0]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Subspace::dim).collect()
    }

    /// `r^i`, with `r^0 = A`.
    pub fn power(&self, i: usize) -> Subspace {
        if i == 0 {
            let r = &self.powers[0];
            return Subspace::full(r.field(), r.ambient());
        }
        self.powers
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.powers[0].field(), self.powers[0].ambient()))
    }
}

pub fn radical_chain(a: &Algebra) -> Result<RadicalChain> {
    Ok(chain_from_radical(a, radical(a)?))
}

pub fn chain_from_radical(a: &Algebra, rad: Subspace) -> RadicalChain {
    let mut powers = vec![rad.clone()];
    while !powers.last().unwrap().is_zero() {
        let next = a.subspace_product(powers.last().unwrap(), &rad);
        powers.push(next);
    }
    let loewy_length = powers.len();
    RadicalChain { powers, loewy_length }
}

/// `A / I` together with the projection data.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: Algebra,
    cosets: Subquotient,
}

impl Quotient {
    pub fn ideal(&self) -> &Subspace {
        self.cosets.lower()
    }

    pub fn cosets(&self) -> &Subquotient {
        &self.cosets
    }

    /// Coordinates of `x + I`.
    pub fn project(&self, x: &[Scalar]) -> Element {
        self.cosets.coordinates(x).expect("vector of the ambient algebra")
    }

    /// A representative in `A` of the given coset.
    pub fn lift(&self, q: &[Scalar]) -> Element {
        self.cosets.lift(q)
    }

    /// Matrix of the projection `A -> A/I`.
    pub fn projection_matrix(&self) -> Matrix {
        let d = self.ideal().ambient();
        let f = self.algebra.field();
        let cols: Vec<Element> = (0..d).map(|i| self.project(&f.unit_vec(d, i))).collect();
        Matrix::from_columns(f, &cols, self.algebra.dim())
    }
}

pub fn quotient(a: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if !a.is_two_sided_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    let f = a.field();
    let cosets = Subquotient::new(&Subspace::full(f, a.dim()), ideal);
    let labels = cosets.representatives().iter().zip(cosets.pivots()).map(|(v, &p)| a.element_label(v, p)).collect();
    let unit = cosets.coordinates(a.unit()).unwrap();
    let mut q = Algebra::zero_products(f, labels, unit)?;
    let reps = cosets.representatives();
    for (i, u) in reps.iter().enumerate() {
        let l = a.left_matrix(u);
        for (j, v) in reps.iter().enumerate() {
            q.set_product(i, j, cosets.coordinates(&l.mul_vec(v)).unwrap())?;
        }
    }
    let quot = Quotient { algebra: q, cosets };
    // projection is multiplicative on basis pairs
    for i in 0..a.dim() {
        let pi = quot.project(&a.basis_element(i));
        for j in 0..a.dim() {
            let lhs = quot.project(&a.basis_product_vec(i, j));
            let rhs = quot.algebra.mul(&pi, &quot.project(&a.basis_element(j)));
            if lhs != rhs {
                return Err(Error::NotAnIdeal);
            }
        }
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{direct_product, matrix_algebra, polynomial_quotient, triangular};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn span(a: &Algebra, idx: &[usize]) -> Subspace {
        Subspace::span(a.field(), a.dim(), idx.iter().map(|&i| a.basis_element(i)))
    }

    #[test]
    fn semisimple_product_has_zero_radical() {
        let f = gf(7);
        let a = direct_product(&[matrix_algebra(1, f), matrix_algebra(1, f)]).unwrap();
        assert!(radical(&a).unwrap().is_zero());
        assert!(radical_oracle(&a, &OracleLimits { max_char: 7, ..Default::default() }).unwrap().is_zero());
    }

    #[test]
    fn triangular_radical_is_strict_upper() {
        let a = triangular(2, gf(7));
        // basis E11, E12, E22
        let expected = span(&a, &[1]);
        assert_eq!(radical(&a).unwrap(), expected);
        let limits = OracleLimits { max_char: 7, ..Default::default() };
        assert_eq!(radical_oracle(&a, &limits).unwrap(), expected);
    }

    #[test]
    fn truncated_polynomial_radical() {
        let a = polynomial_quotient(gf(7), 3);
        let expected = span(&a, &[1, 2]);
        assert_eq!(radical(&a).unwrap(), expected);
        let limits = OracleLimits { max_char: 7, ..Default::default() };
        assert_eq!(radical_oracle(&a, &limits).unwrap(), expected);
    }

    #[test]
    fn small_characteristic_matrix_blocks() {
        // M_2 over GF(2) and GF(3): the trace form of the regular representation
        // is 2 * tr and vanishes in characteristic 2, yet the radical is zero.
        for p in [2, 3] {
            let a = matrix_algebra(2, gf(p));
            assert!(radical(&a).unwrap().is_zero(), "p = {p}");
        }
        let a = direct_product(&[matrix_algebra(2, gf(2)), triangular(2, gf(2))]).unwrap();
        assert_eq!(radical(&a).unwrap().dim(), 1);
        assert_eq!(radical(&a).unwrap(), radical_oracle(&a, &OracleLimits::default()).unwrap());
    }

    #[test]
    fn oracle_refuses_large_instances() {
        let a = polynomial_quotient(gf(7), 3);
        assert!(matches!(radical_oracle(&a, &OracleLimits::default()), Err(Error::OracleLimit(_))));
    }

    #[test]
    fn chains() {
        let a = polynomial_quotient(gf(7), 3);
        let c = radical_chain(&a).unwrap();
        assert_eq!(c.dims(), vec![2, 1, 0]);
        assert_eq!(c.loewy_length, 3);

        let s = matrix_algebra(2, gf(7));
        let c = radical_chain(&s).unwrap();
        assert_eq!(c.dims(), vec![0]);
        assert_eq!(c.loewy_length, 1);

        let t = triangular(2, gf(7));
        let c = radical_chain(&t).unwrap();
        assert_eq!(c.dims(), vec![1, 0]);
        assert_eq!(c.loewy_length, 2);
    }

    #[test]
    fn quotients() {
        let f = gf(7);
        let a = polynomial_quotient(f, 3);
        let q = quotient(&a, &radical(&a).unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 1);
        assert!(q.algebra.validate().is_valid());

        let same = quotient(&a, &Subspace::zero(f, 3)).unwrap();
        assert_eq!(same.algebra, a);

        let t = triangular(2, f);
        let q = quotient(&t, &radical(&t).unwrap()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        // diagonal idempotents: E11 E11 = E11, E11 E22 = 0
        let e11 = q.project(&t.basis_element(0));
        let e22 = q.project(&t.basis_element(2));
        assert_eq!(q.algebra.mul(&e11, &e11), e11);
        assert_eq!(q.algebra.mul(&e22, &e22), e22);
        assert!(f.is_zero_vec(&q.algebra.mul(&e11, &e22)));
        assert_eq!(q.algebra.labels(), &["E11".to_string(), "E22".to_string()]);

        let not_ideal = span(&t, &[0]);
        assert!(matches!(quotient(&t, &not_ideal), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn trace_form_witness() {
        let a = direct_product(&[matrix_algebra(2, gf(7)), matrix_algebra(1, gf(7))]).unwrap();
        assert!(trace_form_nondegenerate(&a));
        assert!(!trace_form_nondegenerate(&triangular(2, gf(7))));
    }
}
