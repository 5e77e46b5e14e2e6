use std::fmt;
use std::hash::Hash;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// A field descriptor. Elements are plain values; all arithmetic goes through
/// the descriptor so that a modulus never has to be stored per element.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the canonical ring map `Z -> k`.
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    fn name(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// Uniform for finite fields; small numerators and denominators for ℚ.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Bit size of the representation; only meaningful for ℚ.
    fn bit_size(&self, _a: &Self::Elem) -> u64 {
        0
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
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

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

/// The prime field GF(r). Residues are stored in `[0, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    r: u32,
}

impl PrimeField {
    pub fn new(r: u64) -> Result<Self> {
        if !super::is_prime(r) || r > u32::MAX as u64 / 2 {
            return Err(Error::UnsupportedField(format!("GF({r}) needs a prime modulus below 2^31")));
        }
        Ok(PrimeField { r: r as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.r
    }

    #[inline]
    fn reduce(&self, x: u64) -> u32 {
        (x % self.r as u64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.r
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.r as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.r {
            s - self.r
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.r - b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.r - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, r)
        let (mut old_r, mut r) = (*a as i64, self.r as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        Some(old_s.rem_euclid(self.r as i64) as u32)
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.r as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.r as u64)
    }
    fn name(&self) -> String {
        format!("GF({})", self.r)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = self.parse(n)?;
            let d = self.parse(d)?;
            return self.div(&n, &d).ok_or_else(|| Error::Parse(format!("division by zero in `{s}`")));
        }
        s.parse::<i64>().map(|n| self.from_i64(n)).map_err(|e| Error::Parse(format!("`{s}`: {e}")))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.random_range(0..self.r)
    }
}

/// The rational numbers with arbitrary-precision numerator and denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("`{t}`: {e}")));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(BigRational::new(parse_int(n)?, d))
            }
            None => Ok(BigRational::from_integer(parse_int(s)?)),
        }
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.random_range(-9..=9);
        let d: i64 = rng.random_range(1..=5);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    fn bit_size(&self, a: &BigRational) -> u64 {
        a.numer().abs().bits() + a.denom().bits()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn rational_parse_and_reduce() {
        let q = Rationals;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert!(q.parse("1/0").is_err());
        assert_eq!(q.bit_size(&q.from_i64(0)), 1);
    }

    #[test]
    fn residues_parse_fractions() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 4);
        assert_eq!(f.parse("1/2").unwrap(), 3);
    }

    proptest! {
        #[test]
        fn prime_field_axioms(r in prop::sample::select(vec![2u64, 3, 5, 7, 101]),
                              a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
            let f = PrimeField::new(r).unwrap();
            let (a, b, c) = (f.from_i64(a as i64), f.from_i64(b as i64), f.from_i64(c as i64));
            prop_assert!(a < f.modulus() && b < f.modulus());
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
            prop_assert_eq!(f.sub(&a, &b), f.add(&a, &f.neg(&b)));
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            } else {
                prop_assert!(f.inv(&a).is_none());
            }
        }
    }
}
