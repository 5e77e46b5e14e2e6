use std::sync::Arc;

use rand::Rng;

use super::field::Field;
use crate::error::{Error, Result};

/// Fixed irreducible polynomials for the non-prime fields, listed as
/// coefficients `c_0, …, c_{e-1}` of the monic defining polynomial
/// `x^e + c_{e-1} x^{e-1} + … + c_0`.
const DEFINING_POLYS: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),       // x^2 + x + 1
    (2, 3, &[1, 1, 0]),    // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]), // x^4 + x + 1
    (3, 2, &[1, 0]),       // x^2 + 1
    (3, 3, &[1, 2, 0]),    // x^3 + 2x + 1
    (5, 2, &[2, 0]),       // x^2 + 2
    (7, 2, &[1, 0]),       // x^2 + 1
];

#[derive(Debug)]
struct Tables {
    p: u32,
    e: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// The finite field with `q = p^e` elements, backed by full addition and
/// multiplication tables.
///
/// An element is encoded as the integer `Σ c_k p^k` where `Σ c_k θ^k` is its
/// polynomial representative and `θ` is a root of the defining polynomial in
/// [`GfQ::defining_polynomial`]. The prime subfield is `{0, …, p-1}`.
#[derive(Debug, Clone)]
pub struct GfQ {
    q: u32,
    tables: Arc<Tables>,
}

impl PartialEq for GfQ {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for GfQ {}

impl GfQ {
    /// Builds GF(q). Prime `q` of any size up to 251 and the prime powers
    /// 4, 8, 16, 9, 27, 25, 49 are supported.
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::UnsupportedField(format!("{q} is not a prime power")))?;
        if q > 256 {
            return Err(Error::UnsupportedField(format!("GF({q}) is too large for table arithmetic")));
        }
        let modulus: Vec<u32> = if e == 1 {
            vec![]
        } else {
            DEFINING_POLYS
                .iter()
                .find(|(pp, ee, _)| *pp == p && *ee == e)
                .map(|(_, _, c)| c.to_vec())
                .ok_or_else(|| Error::UnsupportedField(format!("no defining polynomial for GF({p}^{e})")))?
        };
        let qs = q as usize;
        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x;
            for _ in 0..e {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = encode(&s);
                // schoolbook product then reduce by the defining polynomial
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e as usize..prod.len()).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    // x^e = -Σ m_i x^i
                    for (i, m) in modulus.iter().enumerate() {
                        let idx = k - e as usize + i;
                        prod[idx] = (prod[idx] + (p - (c * m) % p)) % p;
                    }
                }
                mul[a as usize * qs + b as usize] = encode(&prod[..e as usize]);
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..qs {
            neg[a] = (0..q).find(|&b| add[a * qs + b as usize] == 0).unwrap();
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * qs + b as usize] == 1)
                    .ok_or_else(|| Error::Internal(format!("GF({q}) tables are not a field")))?;
            }
        }
        Ok(GfQ { q, tables: Arc::new(Tables { p, e, add, mul, neg, inv }) })
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn prime(&self) -> u32 {
        self.tables.p
    }

    pub fn degree(&self) -> u32 {
        self.tables.e
    }

    /// Coefficients `c_0..c_{e-1}` of the monic defining polynomial (empty for prime fields).
    pub fn defining_polynomial(&self) -> Vec<u32> {
        let (p, e) = (self.tables.p, self.tables.e);
        DEFINING_POLYS.iter().find(|(pp, ee, _)| *pp == p && *ee == e).map(|(_, _, c)| c.to_vec()).unwrap_or_default()
    }

    /// The basis `1, θ, …, θ^{e-1}` of GF(q) over its prime field.
    pub fn prime_basis(&self) -> Vec<u32> {
        (0..self.tables.e).map(|k| self.tables.p.pow(k)).collect()
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        let order = self.q - 1;
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                for k in 1..order {
                    if x == 1 {
                        return k == order;
                    }
                    x = self.mul(&x, &g);
                }
                x == 1
            })
            .unwrap_or(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

impl Field for GfQ {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.tables.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.tables.add[(*a * self.q + *b) as usize]
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.tables.neg[*b as usize])
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        self.tables.neg[*a as usize]
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.tables.mul[(*a * self.q + *b) as usize]
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.tables.inv[*a as usize])
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.tables.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.q as u64)
    }
    fn name(&self) -> String {
        format!("GF({})", self.q)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let v: u32 = s.trim().parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        if v >= self.q {
            return Err(Error::Parse(format!("{v} is not an element code of GF({})", self.q)));
        }
        Ok(v)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.random_range(0..self.q)
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    (x == 1).then_some((p, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_fields_are_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
            let f = GfQ::new(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let ab = f.mul(&a, &b);
                    assert_eq!(ab, f.mul(&b, &a));
                    for c in f.elements() {
                        assert_eq!(f.mul(&ab, &c), f.mul(&a, &f.mul(&b, &c)), "GF({q})");
                        assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
            }
            let g = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(&x, &g);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(GfQ::new(6).is_err());
        assert!(GfQ::new(1).is_err());
        assert!(GfQ::new(32).is_err());
    }

    #[test]
    fn prime_subfield_is_closed() {
        let f = GfQ::new(9).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert!(f.add(&a, &b) < 3 && f.mul(&a, &b) < 3);
            }
        }
        assert_eq!(f.prime_basis(), vec![1, 3]);
    }
}
