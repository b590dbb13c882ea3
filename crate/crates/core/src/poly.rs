//! Univariate polynomials and root splitting over the supported fields.
//!
//! Only linear factors are ever needed: minimal polynomials of central elements
//! of a split semisimple algebra factor completely, and anything else is
//! reported as [`Error::NonSplit`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

/// Largest prime for which roots are found by evaluating every field element.
const EXHAUSTIVE_ROOT_LIMIT: u64 = 1 << 16;

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: Field, c: Scalar) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `x - root`
    pub fn linear(field: Field, root: &Scalar) -> Self {
        Self::new(field, vec![field.neg(root), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.leading()).unwrap();
        Poly::new(self.field, self.field.scale(&inv, &self.coeffs))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
                f.add(&a, &b)
            })
            .collect();
        Poly::new(f, c)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut c = f.zero_vec(self.coeffs.len() + other.coeffs.len() - 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            f.axpy(&mut c[i..i + other.coeffs.len()], a, &other.coeffs);
        }
        Poly::new(f, c)
    }

    pub fn scale(&self, a: &Scalar) -> Poly {
        Poly::new(self.field, self.field.scale(a, &self.coeffs))
    }

    /// Quotient and remainder. Panics when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = f.inv(&d.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = f.zero_vec(rem.len() - dd);
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            let neg = f.neg(&c);
            f.axpy(&mut rem[k..k + dd + 1], &neg, &d.coeffs);
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, u, v)` with `u*self + v*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(&r0.leading()).unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    pub fn from_roots(field: Field, roots: &[Scalar]) -> Poly {
        roots.iter().fold(Poly::one(field), |acc, r| acc.mul(&Poly::linear(field, r)))
    }
}

/// Splits off every linear factor of `f`.
///
/// Returns the roots with multiplicity (sorted) and the cofactor, which has no
/// roots in the field.
pub fn linear_factors(f: &Poly) -> (Vec<Scalar>, Poly) {
    assert!(!f.is_zero(), "linear_factors of the zero polynomial");
    let field = f.field();
    let distinct = match field {
        Field::Prime(p) => prime_field_roots(f, p),
        Field::Rationals => rational_roots(f),
    };
    let mut rest = f.clone();
    let mut roots = Vec::new();
    for r in distinct {
        let lin = Poly::linear(field, &r);
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            roots.push(r.clone());
        }
    }
    roots.sort();
    (roots, rest)
}

/// All roots of `f` with multiplicity, or `NonSplit` when `f` has an
/// irreducible factor of degree two or more.
pub fn split_roots(f: &Poly) -> Result<Vec<Scalar>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("split_roots of the zero polynomial".into()));
    }
    let (roots, rest) = linear_factors(f);
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::NonSplit(f.field().to_string()));
    }
    Ok(roots)
}

fn prime_field_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field();
    if f.degree() == Some(0) {
        return vec![];
    }
    // gcd(f, x^p - x) is the product of the distinct linear factors.
    let x = Poly::x(field);
    let xp = x.pow_mod(p, &f.monic());
    let g = f.gcd(&xp.sub(&x));
    if g.degree() == Some(0) {
        return vec![];
    }
    let mut roots = if p <= EXHAUSTIVE_ROOT_LIMIT {
        (0..p).map(Scalar::Mod).filter(|a| field.is_zero(&g.eval(a))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let mut out = Vec::new();
        split_squarefree_product(&g, p, &mut rng, &mut out);
        out
    };
    roots.sort();
    roots
}

/// Equal-degree splitting of a product of distinct linear factors, p odd.
fn split_squarefree_product(g: &Poly, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Scalar>) {
    use rand::Rng;
    let field = g.field();
    match g.degree() {
        Some(0) | None => return,
        Some(1) => {
            let m = g.monic();
            out.push(field.neg(&m.coeffs()[0]));
            return;
        }
        _ => {}
    }
    loop {
        let a = Scalar::Mod(rng.gen_range(0..p));
        let shifted = Poly::new(field, vec![a, field.one()]);
        let h = shifted.pow_mod((p - 1) / 2, g).sub(&Poly::one(field));
        let d = g.gcd(&h);
        let deg = d.degree().unwrap_or(0);
        if deg > 0 && deg < g.degree().unwrap() {
            let (q, _) = g.div_rem(&d);
            split_squarefree_product(&d, p, rng, out);
            split_squarefree_product(&q, p, rng, out);
            return;
        }
    }
}

/// Distinct rational roots via the rational root theorem on the primitive
/// integer form.
fn rational_roots(f: &Poly) -> Vec<Scalar> {
    let field = f.field();
    let rats: Vec<BigRational> = f.coeffs().iter().map(|c| field.rational(c).unwrap()).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    let mut roots = Vec::new();
    // factor out x^k
    let lowest = ints.iter().position(|c| !c.is_zero()).unwrap();
    if lowest > 0 {
        roots.push(field.zero());
        ints.drain(..lowest);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let nums = divisors(&a0);
    let dens = divisors(&an);
    let mut candidates = Vec::new();
    for n in &nums {
        for d in &dens {
            let q = BigRational::new(n.clone(), d.clone());
            candidates.push(q.clone());
            candidates.push(-q);
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        let s = Scalar::Rat(c);
        if field.is_zero(&f.eval(&s)) {
            roots.push(s);
        }
    }
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
