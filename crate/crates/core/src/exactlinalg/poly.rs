//! Univariate polynomials over a finite field: characteristic polynomials and
//! factorisation into irreducibles, as needed by the Meataxe.
//!
//! A polynomial is a coefficient vector, constant term first, with no
//! trailing zeros (the zero polynomial is the empty vector).

use rand::Rng;

use super::field::Field;
use super::matrix::Matrix;

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, p: &mut Poly<F::Elem>) {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
}

/// Degree; `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut out: Poly<F::Elem> = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, &mut out);
    out
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let mut out: Poly<F::Elem> = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, &mut out);
    out
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F::Elem>, Poly<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = f.sub(&r[shift + i], &f.mul(&c, bc));
        }
        q[shift] = c;
        trim(f, &mut r);
    }
    trim(f, &mut q);
    (q, r)
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = f.inv(lead).expect("nonzero leading coefficient");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Field>(f: &F, a: &[F::Elem], mut e: u64, m: &[F::Elem]) -> Poly<F::Elem> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[f.one()], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// `a^(q^k) mod m` by `k` successive `q`-th powers.
fn frobenius_power<F: Field>(f: &F, a: &[F::Elem], q: u64, k: usize, m: &[F::Elem]) -> Poly<F::Elem> {
    let mut x = rem(f, a, m);
    for _ in 0..k {
        x = powmod(f, &x, q, m);
    }
    x
}

/// Evaluates `p(A)` by Horner's rule.
pub fn eval_matrix<F: Field>(p: &[F::Elem], a: &Matrix<F>) -> Matrix<F> {
    let f = a.field();
    let n = a.rows();
    let mut acc = Matrix::zeros(f, n, n);
    for c in p.iter().rev() {
        acc = acc.mul(a).expect("square matrix");
        acc.add_scalar_diag(c);
    }
    acc
}

/// Characteristic polynomial `det(xI - A)`, via reduction to upper
/// Hessenberg form followed by the standard three-term recurrence.
pub fn charpoly<F: Field>(a: &Matrix<F>) -> Poly<F::Elem> {
    let f = a.field().clone();
    let n = a.rows();
    assert_eq!(n, a.cols(), "characteristic polynomial of a non-square matrix");
    let mut h: Vec<Vec<F::Elem>> = a.row_vecs();
    for m in 1..n.saturating_sub(1) {
        let c = m - 1;
        let Some(i) = (m..n).find(|&i| !f.is_zero(&h[i][c])) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot_inv = f.inv(&h[m][c]).expect("nonzero pivot");
        for k in m + 1..n {
            if f.is_zero(&h[k][c]) {
                continue;
            }
            let u = f.mul(&h[k][c], &pivot_inv);
            for j in 0..n {
                let t = f.mul(&u, &h[m][j]);
                h[k][j] = f.sub(&h[k][j], &t);
            }
            for row in h.iter_mut() {
                let t = f.mul(&u, &row[k]);
                row[m] = f.add(&row[m], &t);
            }
        }
    }
    // p[m] = (x - h_mm) p[m-1] - Σ_{i<m} h_im (Π_{k=i+1..m} h_{k,k-1}) p[i-1], 1-based
    let mut p: Vec<Poly<F::Elem>> = vec![vec![f.one()]];
    for m in 1..=n {
        let x_minus = vec![f.neg(&h[m - 1][m - 1]), f.one()];
        let mut pm = mul(&f, &x_minus, &p[m - 1]);
        let mut t = f.one();
        for i in (1..m).rev() {
            t = f.mul(&t, &h[i][i - 1]);
            let coeff = f.mul(&h[i - 1][m - 1], &t);
            if f.is_zero(&coeff) {
                continue;
            }
            let term: Poly<F::Elem> = p[i - 1].iter().map(|c| f.mul(c, &coeff)).collect();
            pm = sub(&f, &pm, &term);
        }
        p.push(pm);
    }
    p.pop().unwrap()
}

/// Distinct monic irreducible factors of `p`, sorted by degree (ties keep
/// discovery order). Requires a finite field.
pub fn irreducible_factors<F: Field, R: Rng + ?Sized>(f: &F, p: &[F::Elem], rng: &mut R) -> Vec<Poly<F::Elem>> {
    let q = f.order().expect("factorisation needs a finite field");
    let mut rest = monic(f, p);
    let mut out = Vec::new();
    let x: Poly<F::Elem> = vec![f.zero(), f.one()];
    let mut d = 1;
    while let Some(dr) = degree(&rest) {
        if dr == 0 {
            break;
        }
        if dr < 2 * d {
            // no factor of degree < d is left, so `rest` is irreducible
            out.push(rest);
            break;
        }
        let xq = frobenius_power(f, &x, q, d, &rest);
        let g = gcd(f, &sub(f, &xq, &x), &rest);
        if degree(&g).unwrap_or(0) > 0 {
            // strip every power of these factors from `rest`
            loop {
                let c = gcd(f, &rest, &g);
                if degree(&c).unwrap_or(0) == 0 {
                    break;
                }
                rest = divrem(f, &rest, &c).0;
            }
            out.extend(equal_degree_split(f, &g, d, q, rng));
        }
        d += 1;
    }
    out.sort_by_key(|g| g.len());
    out
}

/// Cantor–Zassenhaus splitting of a squarefree product of degree-`d` irreducibles.
fn equal_degree_split<F: Field, R: Rng + ?Sized>(
    f: &F,
    g: &[F::Elem],
    d: usize,
    q: u64,
    rng: &mut R,
) -> Vec<Poly<F::Elem>> {
    let n = degree(g).unwrap();
    if n == d {
        return vec![monic(f, g)];
    }
    loop {
        let mut a: Poly<F::Elem> = (0..n).map(|_| f.random(rng)).collect();
        trim(f, &mut a);
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^{(q^d-1)/2} = (Π_{k<d} a^{q^k})^{(q-1)/2}
            let mut norm = vec![f.one()];
            let mut ak = rem(f, &a, g);
            for _ in 0..d {
                norm = mulmod(f, &norm, &ak, g);
                ak = powmod(f, &ak, q, g);
            }
            sub(f, &powmod(f, &norm, (q - 1) / 2, g), &[f.one()])
        } else {
            // absolute trace to GF(2): Σ_{k < d·log2 q} a^{2^k}
            let bits = d * q.trailing_zeros() as usize;
            let mut t = Vec::new();
            let mut ak = rem(f, &a, g);
            for _ in 0..bits {
                t = add(f, &t, &ak);
                ak = mulmod(f, &ak, &ak, g);
            }
            t
        };
        let h = gcd(f, &b, g);
        let dh = degree(&h).unwrap_or(0);
        if dh > 0 && dh < n {
            let other = divrem(f, g, &h).0;
            let mut out = equal_degree_split(f, &h, d, q, rng);
            out.extend(equal_degree_split(f, &other, d, q, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::PrimeField;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn det(f: &PrimeField, m: &Matrix<PrimeField>) -> u32 {
        let n = m.rows();
        let mut a = m.row_vecs();
        let mut d = 1u32;
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
            if p != c {
                a.swap(p, c);
                d = f.neg(&d);
            }
            d = f.mul(&d, &a[c][c]);
            let inv = f.inv(&a[c][c]).unwrap();
            for r in c + 1..n {
                let u = f.mul(&a[r][c], &inv);
                for j in 0..n {
                    let t = f.mul(&u, &a[c][j]);
                    a[r][j] = f.sub(&a[r][j], &t);
                }
            }
        }
        d
    }

    fn eval(f: &PrimeField, p: &[u32], t: u32) -> u32 {
        p.iter().rev().fold(0, |acc, c| f.add(&f.mul(&acc, &t), c))
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(n in 1usize..6, entries in prop::collection::vec(0u32..7, 36)) {
            let f = PrimeField::new(7).unwrap();
            let a = Matrix::from_fn(&f, n, n, |i, j| entries[i * 6 + j]);
            let p = charpoly(&a);
            prop_assert_eq!(p.len(), n + 1);
            for t in 0..7u32 {
                let mut shifted = a.scale(&f.neg(&1));
                shifted.add_scalar_diag(&t);
                prop_assert_eq!(eval(&f, &p, t), det(&f, &shifted));
            }
            prop_assert!(eval_matrix(&p, &a).is_zero());
        }

        #[test]
        fn factors_divide_and_are_irreducible(r in prop::sample::select(vec![2u64, 3, 5]),
                                              coeffs in prop::collection::vec(0u32..5, 1..9),
                                              seed in 0u64..1000) {
            let f = PrimeField::new(r).unwrap();
            let mut p: Vec<u32> = coeffs.iter().map(|c| c % r as u32).collect();
            p.push(1);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let factors = irreducible_factors(&f, &p, &mut rng);
            let mut prod_deg = 0;
            for g in &factors {
                prop_assert!(rem(&f, &p, g).is_empty());
                prop_assert_eq!(g.last(), Some(&1));
                // irreducible: no root-free check suffices only for deg ≤ 3; use brute force over monic divisors
                let dg = degree(g).unwrap();
                prod_deg += dg;
                for t in 0..r as u32 {
                    if dg > 1 {
                        prop_assert_ne!(eval(&f, g, t), 0);
                    }
                }
            }
            // the radical of p has the same roots as p
            for t in 0..r as u32 {
                let is_root = eval(&f, &p, t) == 0;
                let covered = factors.iter().any(|g| g.len() == 2 && eval(&f, g, t) == 0);
                prop_assert_eq!(is_root, covered);
            }
            prop_assert!(prod_deg < p.len());
        }
    }

    #[test]
    fn splits_known_polynomials() {
        let f = PrimeField::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // (x^2+x+1)^2 (x+1) over GF(2) = x^5 + x^4 + x^3 + x^2 + x + 1
        let p = vec![1, 1, 1, 1, 1, 1];
        let fs = irreducible_factors(&f, &p, &mut rng);
        assert_eq!(fs, vec![vec![1, 1], vec![1, 1, 1]]);
        // x^4 + x = x (x+1)(x^2+x+1)
        let fs = irreducible_factors(&f, &[0, 1, 0, 0, 1], &mut rng);
        assert_eq!(fs.len(), 3);
        let g5 = PrimeField::new(5).unwrap();
        // x^2 - 1 = (x-1)(x+1)
        let fs = irreducible_factors(&g5, &[4, 0, 1], &mut rng);
        assert_eq!(fs.len(), 2);
        // x^2 + 2 is irreducible mod 5
        let fs = irreducible_factors(&g5, &[2, 0, 1], &mut rng);
        assert_eq!(fs, vec![vec![2, 0, 1]]);
    }
}
