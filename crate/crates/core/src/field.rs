//! Exact scalar fields: prime fields GF(p) and the rationals.
//!
//! Scalars do not carry their field. Every arithmetic operation goes through a
//! [`Field`] value, which keeps scalars small and lets matrices and algebras
//! store the field exactly once.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// GF(p) with p prime.
    Prime(u64),
    Rationals,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    /// Canonical residue in `0..p`.
    Mod(u64),
    Rat(BigRational),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod((v as i128).rem_euclid(*p as i128) as u64),
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Mod(r.to_u64().expect("residue fits in u64"))
            }
            Field::Rationals => Scalar::Rat(BigRational::from_integer(v.clone())),
        }
    }

    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match self {
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self.inv(&d).ok_or_else(|| Error::InvalidInput("denominator vanishes mod p".into()))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(num.clone(), den.clone()))),
        }
    }

    /// `p` when products of residues fit in a `u64`.
    pub(crate) fn small_prime(&self) -> Option<u64> {
        match self {
            Field::Prime(p) if *p <= u32::MAX as u64 => Some(*p),
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(x) => x.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                let (s, carry) = x.overflowing_add(*y);
                Scalar::Mod(if carry || s >= *p { s.wrapping_sub(*p) } else { s })
            }
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mul_mod(*x, *y, *p)),
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Scalar::Mod(x)) => Some(Scalar::Mod(pow_mod(*x, p - 2, *p))),
            (Field::Rationals, Scalar::Rat(x)) => Some(Scalar::Rat(x.recip())),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let inv = self.inv(b).expect("division by zero");
        self.mul(a, &inv)
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `y += a * x`
    pub fn axpy(&self, y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
        if self.is_zero(a) {
            return;
        }
        if let (Some(p), Scalar::Mod(a)) = (self.small_prime(), a) {
            for (yi, xi) in y.iter_mut().zip(x) {
                let x = residue(xi);
                if x != 0 {
                    *yi = Scalar::Mod((residue(yi) + a * x) % p);
                }
            }
            return;
        }
        for (yi, xi) in y.iter_mut().zip(x) {
            if !self.is_zero(xi) {
                *yi = self.add(yi, &self.mul(a, xi));
            }
        }
    }

    pub fn scale(&self, a: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|xi| self.mul(a, xi)).collect()
    }

    pub fn add_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.add(a, b)).collect()
    }

    pub fn sub_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(y).map(|(a, b)| self.sub(a, b)).collect()
    }

    pub fn dot(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        if let Some(p) = self.small_prime() {
            let acc: u128 = x.iter().zip(y).map(|(a, b)| (residue(a) * residue(b)) as u128).sum();
            return Scalar::Mod((acc % p as u128) as u64);
        }
        let mut acc = self.zero();
        for (a, b) in x.iter().zip(y) {
            if !self.is_zero(a) && !self.is_zero(b) {
                acc = self.add(&acc, &self.mul(a, b));
            }
        }
        acc
    }

    pub fn is_zero_vec(&self, x: &[Scalar]) -> bool {
        x.iter().all(|a| self.is_zero(a))
    }

    pub fn zero_vec(&self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    pub fn unit_vec(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec(n);
        v[i] = self.one();
        v
    }

    /// Uniform element for finite fields, a small integer in `-4..=4` for the rationals.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(rng.gen_range(0..*p)),
            Field::Rationals => self.from_i64(rng.gen_range(-4..=4)),
        }
    }

    pub fn random_vec<R: Rng + ?Sized>(&self, rng: &mut R, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.random(rng)).collect()
    }

    /// Residue in `0..p` of a prime-field scalar.
    pub fn residue(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Mod(x) => *x,
            Scalar::Rat(_) => panic!("residue of a rational scalar"),
        }
    }

    /// All elements, for prime fields.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        self.order().map(|p| (0..p).map(Scalar::Mod))
    }

    /// Decimal integer for GF(p), "num/den" for the rationals.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Mod(x) => x.to_string(),
            Scalar::Rat(x) => format!("{}/{}", x.numer(), x.denom()),
        }
    }

    /// Parses "n" or "n/d".
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse scalar {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                self.from_ratio(&n, &d)
            }
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    pub fn rational(&self, a: &Scalar) -> Option<BigRational> {
        match a {
            Scalar::Rat(x) => Some(x.clone()),
            Scalar::Mod(_) => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(x) if x.is_integer() => write!(f, "{}", x.numer()),
            Scalar::Rat(x) => write!(f, "{}/{}", x.numer(), x.denom()),
        }
    }
}

pub(crate) fn residue(a: &Scalar) -> u64 {
    match a {
        Scalar::Mod(x) => *x,
        Scalar::Rat(_) => panic!("rational scalar in a prime field"),
    }
}

fn mul_mod(x: u64, y: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        x * y % p
    } else {
        (x as u128 * y as u128 % p as u128) as u64
    }
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = base as u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        assert_eq!(f.mul(&three, &f.inv(&three).unwrap()), f.one());
        assert_eq!(f.from_i64(-1), Scalar::Mod(6));
        assert_eq!(f.neg(&f.zero()), f.zero());
        assert_eq!(f.parse("3/2").unwrap(), f.mul(&three, &f.inv(&f.from_i64(2)).unwrap()));
    }

    #[test]
    fn rational_format_round_trip() {
        let q = Field::Rationals;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.parse(&q.format(&x)).unwrap(), x);
        assert_eq!(q.format(&q.from_i64(5)), "5/1");
    }
}
