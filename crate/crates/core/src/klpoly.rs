//! Kazhdan–Lusztig polynomials and the signed basis elements `C_w`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coxeter::{CoxeterSystem, ElemId, SubsetJ};
use crate::exactlinalg::Field;
use crate::par;

/// Polynomial in `q` with integer coefficients, stored densely with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentFreePoly {
    coeffs: Vec<i64>,
}

impl LaurentFreePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Coefficients from degree 0 upward.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// `self + c·q^shift·other`.
    fn add_shifted(&mut self, other: &Self, shift: usize, c: i64) {
        if other.coeffs.len() + shift > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len() + shift, 0);
        }
        for (k, &a) in other.coeffs.iter().enumerate() {
            self.coeffs[k + shift] += c * a;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for LaurentFreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "q".into(),
                (1, m) => format!("{m}q"),
                (k, 1) => format!("q^{k}"),
                (k, m) => format!("{m}q^{k}"),
            };
            if first {
                write!(f, "{sign}{body}")?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// All `P_{x,z}` for `z` in a lower Bruhat interval (or the whole group).
#[derive(Debug, Clone)]
pub struct KlTable {
    /// `rows[z]`: `(x, P_{x,z})` for `x ≤ z`, sorted by `x`; `None` outside the interval.
    rows: Vec<Option<Vec<(ElemId, LaurentFreePoly)>>>,
}

impl KlTable {
    /// Tabulates every pair of the group.
    pub fn full(sys: &CoxeterSystem) -> Self {
        Self::for_interval(sys, sys.longest())
    }

    /// Tabulates `P_{x,z}` for all `x ≤ z ≤ w`.
    pub fn for_interval(sys: &CoxeterSystem, w: ElemId) -> Self {
        let members = sys.lower_interval(w);
        let mut levels: BTreeMap<usize, Vec<ElemId>> = BTreeMap::new();
        for &z in &members {
            levels.entry(sys.length(z)).or_default().push(z);
        }
        let mut table = KlTable { rows: vec![None; sys.order()] };
        for level in levels.values() {
            let rows = par::map(level, |&z| table.compute_row(sys, z));
            for (&z, row) in level.iter().zip(rows) {
                table.rows[z.index()] = Some(row);
            }
        }
        table
    }

    fn compute_row(&self, sys: &CoxeterSystem, w: ElemId) -> Vec<(ElemId, LaurentFreePoly)> {
        let lw = sys.length(w);
        if lw == 0 {
            return vec![(w, LaurentFreePoly::one())];
        }
        let s = sys.word(w)[0] as usize;
        let v = sys.mul_simple_left(s, w);
        let lv = sys.length(v);
        // z < v with sz < z and μ(z, v) ≠ 0
        let corrections: Vec<(ElemId, i64)> = self.rows[v.index()]
            .as_ref()
            .expect("lower level computed")
            .iter()
            .filter(|(z, _)| *z != v && sys.length(sys.mul_simple_left(s, *z)) < sys.length(*z))
            .filter_map(|(z, p)| {
                let gap = lv - sys.length(*z);
                if gap.is_multiple_of(2) {
                    return None;
                }
                let mu = p.coeff((gap - 1) / 2);
                (mu != 0).then_some((*z, mu))
            })
            .collect();
        sys.lower_interval(w)
            .into_iter()
            .map(|x| {
                let sx = sys.mul_simple_left(s, x);
                let c = usize::from(sys.length(sx) < sys.length(x));
                let mut p = LaurentFreePoly::zero();
                p.add_shifted(&self.get(sys, sx, v), 1 - c, 1);
                p.add_shifted(&self.get(sys, x, v), c, 1);
                for &(z, mu) in &corrections {
                    if sys.bruhat_leq(x, z) {
                        p.add_shifted(&self.get(sys, x, z), (lw - sys.length(z)) / 2, -mu);
                    }
                }
                (x, p)
            })
            .collect()
    }

    /// `P_{x,z}`; zero when `x ≰ z`.
    ///
    /// # Panics
    /// When `z` lies outside the tabulated interval.
    pub fn get(&self, sys: &CoxeterSystem, x: ElemId, z: ElemId) -> LaurentFreePoly {
        if !sys.bruhat_leq(x, z) {
            return LaurentFreePoly::zero();
        }
        let row = self.rows[z.index()].as_ref().expect("element outside the tabulated interval");
        let k = row.binary_search_by_key(&x, |(y, _)| *y).expect("comparable pair tabulated");
        row[k].1.clone()
    }

    /// `μ(x, z)`: the coefficient of `q^{(ℓ(z)-ℓ(x)-1)/2}` in `P_{x,z}`.
    pub fn mu(&self, sys: &CoxeterSystem, x: ElemId, z: ElemId) -> i64 {
        let (lx, lz) = (sys.length(x), sys.length(z));
        if lz <= lx || (lz - lx) % 2 == 0 {
            return 0;
        }
        self.get(sys, x, z).coeff((lz - lx - 1) / 2)
    }

    /// `(x, z, P_{x,z})` for every tabulated comparable pair, ordered by `z` then `x`.
    pub fn entries(&self) -> impl Iterator<Item = (ElemId, ElemId, &LaurentFreePoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(z, row)| row.iter().flatten().map(move |(x, p)| (*x, ElemId(z as u32), p)))
    }
}

/// `P_{y,w}`, computed over the interval `[e, w]`.
pub fn kl_polynomial(sys: &CoxeterSystem, y: ElemId, w: ElemId) -> LaurentFreePoly {
    if !sys.bruhat_leq(y, w) {
        return LaurentFreePoly::zero();
    }
    KlTable::for_interval(sys, w).get(sys, y, w)
}

/// Sparse element of the group algebra `kW`.
#[derive(Debug, Clone)]
pub struct GroupAlgebraVector<F: Field> {
    field: F,
    support: BTreeMap<ElemId, F::Elem>,
}

impl<F: Field> PartialEq for GroupAlgebraVector<F> {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support
    }
}

impl<F: Field> GroupAlgebraVector<F> {
    pub fn zero(field: &F) -> Self {
        Self { field: field.clone(), support: BTreeMap::new() }
    }

    pub fn basis(field: &F, w: ElemId) -> Self {
        let mut v = Self::zero(field);
        v.add_term(w, &field.one());
        v
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn support(&self) -> &BTreeMap<ElemId, F::Elem> {
        &self.support
    }

    pub fn coeff(&self, w: ElemId) -> F::Elem {
        self.support.get(&w).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_term(&mut self, w: ElemId, c: &F::Elem) {
        let sum = self.field.add(&self.coeff(w), c);
        if self.field.is_zero(&sum) {
            self.support.remove(&w);
        } else {
            self.support.insert(w, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(*w, c);
        }
        out
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field);
        for (w, a) in &self.support {
            out.add_term(*w, &self.field.mul(a, c));
        }
        out
    }

    /// Product in `kW`.
    pub fn mul(&self, sys: &CoxeterSystem, other: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for (a, ca) in &self.support {
            for (b, cb) in &other.support {
                out.add_term(sys.mul(*a, *b), &self.field.mul(ca, cb));
            }
        }
        out
    }

    /// `g · self`.
    pub fn left_translate(&self, sys: &CoxeterSystem, g: ElemId) -> Self {
        let mut out = Self::zero(&self.field);
        for (w, c) in &self.support {
            out.add_term(sys.mul(g, *w), c);
        }
        out
    }

    /// Coordinates in the enumeration basis of `W`.
    pub fn to_dense(&self, order: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); order];
        for (w, c) in &self.support {
            v[w.index()] = c.clone();
        }
        v
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `C_w = Σ_{y ≤ w} (-1)^{ℓ(w)-ℓ(y)} P_{y,w}(1) y`.
pub fn c_element<F: Field>(sys: &CoxeterSystem, table: &KlTable, w: ElemId, field: &F) -> GroupAlgebraVector<F> {
    let mut v = GroupAlgebraVector::zero(field);
    for y in sys.lower_interval(w) {
        let p1 = table.get(sys, y, w).eval_one();
        let c = sign(sys.length(w) - sys.length(y)) * p1;
        v.add_term(y, &field.from_i64(c));
    }
    v
}

/// `η_J = Σ_{w ∈ W_J} (-1)^{ℓ(w)} w`.
pub fn eta_element<F: Field>(sys: &CoxeterSystem, j: SubsetJ, field: &F) -> GroupAlgebraVector<F> {
    let mut v = GroupAlgebraVector::zero(field);
    for w in sys.parabolic_subgroup(j) {
        v.add_term(w, &field.from_i64(sign(sys.length(w))));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{PrimeField, Rationals};

    #[test]
    fn small_types_are_trivial() {
        for label in ["A1", "A2", "B2"] {
            let sys = CoxeterSystem::build(label).unwrap();
            let t = KlTable::full(&sys);
            let mut pairs = 0;
            for (_, _, p) in t.entries() {
                assert_eq!(*p, LaurentFreePoly::one(), "{label}");
                pairs += 1;
            }
            if label == "A2" {
                assert_eq!(pairs, 19);
            }
        }
    }

    #[test]
    fn a3_singular_pair() {
        let sys = CoxeterSystem::build("A3").unwrap();
        let y = sys.parse_word("s1").unwrap();
        let w = sys.parse_word("s1*s0*s2*s1").unwrap();
        let p = kl_polynomial(&sys, y, w);
        assert_eq!(p.coeffs(), &[1, 1]);
        assert_eq!(p.to_string(), "1 + q");
        assert_eq!(kl_polynomial(&sys, w, y), LaurentFreePoly::zero());
        assert_eq!(kl_polynomial(&sys, w, w), LaurentFreePoly::one());
    }

    #[test]
    fn c_element_examples() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let t = KlTable::full(&sys);
        let f = Rationals;
        let ce = c_element(&sys, &t, ElemId::IDENTITY, &f);
        assert_eq!(ce, GroupAlgebraVector::basis(&f, ElemId::IDENTITY));
        let s0 = sys.simple(0);
        let cs = c_element(&sys, &t, s0, &f);
        let mut expect = GroupAlgebraVector::basis(&f, s0);
        expect.add_term(ElemId::IDENTITY, &f.from_i64(-1));
        assert_eq!(cs, expect);
    }

    #[test]
    fn eta_examples() {
        let sys = CoxeterSystem::build("A2").unwrap();
        let f = PrimeField::new(5).unwrap();
        assert_eq!(eta_element(&sys, SubsetJ::EMPTY, &f), GroupAlgebraVector::basis(&f, ElemId::IDENTITY));
        let eta = eta_element(&sys, SubsetJ::single(0), &f);
        assert_eq!(eta.support().len(), 2);
        assert_eq!(eta.coeff(sys.simple(0)), 4);
        let full = eta_element(&sys, sys.full_set(), &f);
        assert_eq!(full.support().len(), 6);
        for w in sys.ids() {
            let expect = if sys.length(w).is_multiple_of(2) { 1 } else { 4 };
            assert_eq!(full.coeff(w), expect);
        }
    }

    #[test]
    fn longest_parabolic_c_is_signed_eta() {
        let f = Rationals;
        for label in ["A1", "A2", "B2", "A3", "G2"] {
            let sys = CoxeterSystem::build(label).unwrap();
            let t = KlTable::full(&sys);
            for j in SubsetJ::all(sys.rank()) {
                let wj = sys.longest_element(j);
                let c = c_element(&sys, &t, wj, &f);
                let eta = eta_element(&sys, j, &f).scale(&f.from_i64(sign(sys.length(wj))));
                assert_eq!(c, eta, "{label} {j}");
            }
        }
    }

    #[test]
    fn degree_bound_and_inverse_symmetry() {
        for label in ["A3", "B3"] {
            let sys = CoxeterSystem::build(label).unwrap();
            let t = KlTable::full(&sys);
            for (x, z, p) in t.entries() {
                assert_eq!(p.coeff(0), 1);
                if x != z {
                    let bound = (sys.length(z) - sys.length(x) - 1) / 2;
                    assert!(p.degree().unwrap() <= bound);
                }
                assert_eq!(*p, t.get(&sys, sys.inverse(x), sys.inverse(z)));
            }
        }
    }

    #[test]
    fn interval_table_matches_full_table() {
        let sys = CoxeterSystem::build("B3").unwrap();
        let full = KlTable::full(&sys);
        let w = sys.parse_word("s1*s2*s1*s0*s1").unwrap();
        let part = KlTable::for_interval(&sys, w);
        for x in sys.lower_interval(w) {
            assert_eq!(full.get(&sys, x, w), part.get(&sys, x, w));
        }
    }

    #[test]
    fn display() {
        assert_eq!(LaurentFreePoly::from_coeffs(vec![1, 0, -2, 0]).to_string(), "1 - 2q^2");
        assert_eq!(LaurentFreePoly::zero().to_string(), "0");
        assert_eq!(LaurentFreePoly::from_coeffs(vec![0, 3]).to_string(), "3q");
    }
}
