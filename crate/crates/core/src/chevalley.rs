//! `SL_n(F_q)` as explicit matrices: root elements, Weyl representatives,
//! the Bruhat normal form of flags and partial flags, and the rank-one
//! decomposition behind the `τ_i` group-algebra elements.
//!
//! `U_w` denotes the subgroup generated by the root subgroups `U_α` with
//! `α > 0` and `wα < 0`. A flag `gB` is written uniquely as `u·ẇ·B` with
//! `u ∈ U_{w⁻¹}`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::coxeter::{CoxeterSystem, ElemId, SubsetJ};
use crate::error::{Error, Result};
use crate::exactlinalg::{Field, GfQ, Matrix};

/// An element of `SL_n(F_q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement(Matrix<GfQ>);

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.row_vecs().hash(state);
    }
}

impl GroupElement {
    /// Checks that the matrix is square with determinant 1.
    pub fn new(m: Matrix<GfQ>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::NotSpecialLinear(format!("{}×{} matrix", m.rows(), m.cols())));
        }
        let d = m.det()?;
        if !m.field().is_one(&d) {
            return Err(Error::NotSpecialLinear(format!("determinant {d}")));
        }
        Ok(GroupElement(m))
    }

    pub fn matrix(&self) -> &Matrix<GfQ> {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        *self.0.get(i, j)
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement(self.0.mul(&other.0).expect("same degree"))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.inverse().expect("invertible"))
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Matrix::identity(self.0.field(), self.0.rows())
    }

    /// Upper triangular, i.e. in the standard Borel subgroup.
    pub fn is_upper_triangular(&self) -> bool {
        let n = self.0.rows();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .row_vecs()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Bruhat coordinates `(w, u)` of the coset `u·ẇ·P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagPoint {
    pub weyl: ElemId,
    /// Entries of `u` at the roots `β_k = s_{i_1}⋯s_{i_{k-1}}(α_{i_k})` of the
    /// ShortLex word `s_{i_1}⋯s_{i_t}` of `w`.
    pub u_part: Vec<u32>,
}

/// `ṡ_i u ṡ_i⁻¹ = x·ṡ_i·t·y` with `x, y ∈ U_{α_i}` and `t` in the torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Decomposition {
    pub x: GroupElement,
    pub t: GroupElement,
    pub y: GroupElement,
}

#[derive(Debug)]
pub struct SlGroup {
    n: usize,
    field: GfQ,
    weyl: CoxeterSystem,
    reps: Vec<GroupElement>,
    perm_index: HashMap<Vec<usize>, ElemId>,
    /// Matrix positions `(a, b)`, `a < b`, carrying the `u_part` of each `w`.
    coords: Vec<Vec<(usize, usize)>>,
}

impl SlGroup {
    pub fn new(n: usize, q: u32) -> Result<Self> {
        if !(2..=5).contains(&n) {
            return Err(Error::UnknownType(format!("SL{n}: degree must lie in 2..=5")));
        }
        let field = GfQ::new(q)?;
        let weyl = CoxeterSystem::build(&format!("A{}", n - 1))?;
        let mut group = SlGroup { n, field, weyl, reps: Vec::new(), perm_index: HashMap::new(), coords: Vec::new() };
        let simple: Vec<GroupElement> = (0..n - 1).map(|i| group.simple_rep(i)).collect();
        for w in group.weyl.ids() {
            let rep = group.weyl.word(w).iter().fold(group.identity(), |acc, &i| acc.mul(&simple[i as usize]));
            group.perm_index.insert(permutation_of(&rep), w);
            group.reps.push(rep);
            let mut roots = Vec::new();
            let word = group.weyl.word(w);
            for (k, &i) in word.iter().enumerate() {
                // apply s_{i_{k-1}}, …, s_{i_1} to α_{i_k} = e_i - e_{i+1}
                let (mut a, mut b) = (i as usize, i as usize + 1);
                for &s in word[..k].iter().rev() {
                    a = transpose(a, s as usize);
                    b = transpose(b, s as usize);
                }
                debug_assert!(a < b);
                roots.push((a, b));
            }
            group.coords.push(roots);
        }
        Ok(group)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.field.size()
    }

    pub fn field(&self) -> &GfQ {
        &self.field
    }

    pub fn weyl(&self) -> &CoxeterSystem {
        &self.weyl
    }

    pub fn label(&self) -> String {
        format!("SL{}(F{})", self.n, self.q())
    }

    /// `|SL_n(F_q)| = q^{n(n-1)/2} Π_{k=2}^{n} (q^k - 1)`.
    pub fn order(&self) -> u64 {
        let q = self.q() as u64;
        let n = self.n as u32;
        q.pow(n * (n - 1) / 2) * (2..=n).map(|k| q.pow(k) - 1).product::<u64>()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(Matrix::identity(&self.field, self.n))
    }

    pub fn element(&self, m: Matrix<GfQ>) -> Result<GroupElement> {
        if m.rows() != self.n || m.field() != &self.field {
            return Err(Error::NotSpecialLinear(format!("not a matrix of {}", self.label())));
        }
        GroupElement::new(m)
    }

    pub fn from_rows(&self, rows: Vec<Vec<u32>>) -> Result<GroupElement> {
        for row in &rows {
            if let Some(&bad) = row.iter().find(|&&c| c >= self.q()) {
                return Err(Error::NotSpecialLinear(format!("entry {bad} outside GF({})", self.q())));
            }
        }
        self.element(Matrix::from_rows(&self.field, self.n, rows)?)
    }

    /// `I + c·E_{ab}` for the root `e_a - e_b`, `a ≠ b`.
    pub fn root_element(&self, a: usize, b: usize, c: u32) -> Result<GroupElement> {
        if a == b || a >= self.n || b >= self.n {
            return Err(Error::IndexOutOfRange { index: a.max(b), rank: self.n });
        }
        let mut m = Matrix::identity(&self.field, self.n);
        m.set(a, b, c);
        Ok(GroupElement(m))
    }

    /// `x_{α_i}(c)`.
    pub fn simple_root_element(&self, i: usize, c: u32) -> Result<GroupElement> {
        self.weyl.check_index(i)?;
        self.root_element(i, i + 1, c)
    }

    /// `ṡ_i`: the identity with the block `[[0,1],[-1,0]]` at rows `i, i+1`.
    pub fn simple_rep(&self, i: usize) -> GroupElement {
        let f = &self.field;
        let mut m = Matrix::identity(f, self.n);
        m.set(i, i, 0);
        m.set(i + 1, i + 1, 0);
        m.set(i, i + 1, 1);
        m.set(i + 1, i, f.neg(&1));
        GroupElement(m)
    }

    /// `ẇ`: the product of the `ṡ_i` along the ShortLex word of `w`.
    pub fn weyl_rep(&self, w: ElemId) -> &GroupElement {
        &self.reps[w.index()]
    }

    /// The Weyl element whose representatives have the monomial pattern of `g`.
    pub fn weyl_of_monomial(&self, g: &GroupElement) -> Option<ElemId> {
        self.perm_index.get(&permutation_of(g)).copied()
    }

    /// `diag(.., c, c⁻¹, ..)` at positions `i, i+1`.
    pub fn torus_simple(&self, i: usize, c: u32) -> Result<GroupElement> {
        self.weyl.check_index(i)?;
        let inv = self.field.inv(&c).ok_or(Error::DegenerateDecomposition)?;
        let mut m = Matrix::identity(&self.field, self.n);
        m.set(i, i, c);
        m.set(i + 1, i + 1, inv);
        Ok(GroupElement(m))
    }

    /// Positions `(a, b)` of the positive roots `e_a - e_b` with `w(e_a - e_b) < 0`.
    pub fn u_subgroup_roots(&self, w: ElemId) -> Vec<(usize, usize)> {
        let sigma = permutation_of(self.weyl_rep(w));
        let mut roots = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if sigma[a] > sigma[b] {
                    roots.push((a, b));
                }
            }
        }
        roots
    }

    /// All elements of `U_w`, ordered by their entries on the roots of
    /// [`Self::u_subgroup_roots`] read as base-`q` digits.
    pub fn u_subgroup_elements(&self, w: ElemId) -> Vec<GroupElement> {
        let roots = self.u_subgroup_roots(w);
        self.pattern_elements(&roots)
    }

    /// All of `U`.
    pub fn unipotent_elements(&self) -> Vec<GroupElement> {
        self.u_subgroup_elements(self.weyl.longest())
    }

    fn pattern_elements(&self, roots: &[(usize, usize)]) -> Vec<GroupElement> {
        let q = self.q();
        let count = (q as usize).pow(roots.len() as u32);
        (0..count)
            .map(|mut idx| {
                let mut m = Matrix::identity(&self.field, self.n);
                for &(a, b) in roots.iter().rev() {
                    m.set(a, b, (idx % q as usize) as u32);
                    idx /= q as usize;
                }
                GroupElement(m)
            })
            .collect()
    }

    /// Bruhat coordinates of `gB`.
    pub fn flag_canonical(&self, g: &GroupElement) -> FlagPoint {
        let f = &self.field;
        let n = self.n;
        let mut m = g.0.clone();
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            // clear the earlier pivot rows, oldest first, with earlier columns
            for (j, &p) in pivots.iter().enumerate() {
                let c = *m.get(p, k);
                if c == 0 {
                    continue;
                }
                let factor = f.div(&c, m.get(p, j)).expect("pivot is nonzero");
                for r in 0..n {
                    let v = f.sub(m.get(r, k), &f.mul(&factor, m.get(r, j)));
                    m.set(r, k, v);
                }
            }
            let p = (0..n).rev().find(|&r| *m.get(r, k) != 0).expect("g is invertible");
            pivots.push(p);
        }
        let w = *self.perm_index.get(&pivots).expect("every permutation is a Weyl element");
        let rep = self.weyl_rep(w);
        for (k, &p) in pivots.iter().enumerate() {
            let scale = f.div(&rep.get(p, k), m.get(p, k)).expect("pivot is nonzero");
            for r in 0..n {
                let v = f.mul(m.get(r, k), &scale);
                m.set(r, k, v);
            }
        }
        let u = GroupElement(m).mul(&rep.inverse());
        FlagPoint { weyl: w, u_part: self.coords[w.index()].iter().map(|&(a, b)| u.get(a, b)).collect() }
    }

    /// `u·ẇ` for the flag point `(w, u)`.
    pub fn flag_rep(&self, p: &FlagPoint) -> GroupElement {
        let mut u = Matrix::identity(&self.field, self.n);
        for (&(a, b), &c) in self.coords[p.weyl.index()].iter().zip(&p.u_part) {
            u.set(a, b, c);
        }
        GroupElement(u).mul(self.weyl_rep(p.weyl))
    }

    /// Bruhat coordinates of `gP_K`: `w ∈ X_K`, `u ∈ U_{w⁻¹}`.
    pub fn parabolic_canonical(&self, g: &GroupElement, k: SubsetJ) -> FlagPoint {
        let full = self.flag_canonical(g);
        let w_min = self.weyl.min_coset_rep(full.weyl, k);
        if w_min == full.weyl {
            return full;
        }
        let u = self
            .flag_rep(&FlagPoint { weyl: full.weyl, u_part: full.u_part.clone() })
            .mul(&self.weyl_rep(full.weyl).inverse());
        self.flag_canonical(&u.mul(self.weyl_rep(w_min)))
    }

    pub fn format_point(&self, p: &FlagPoint) -> String {
        let coords: Vec<String> = p.u_part.iter().map(u32::to_string).collect();
        format!("({}; {})", self.weyl.format_word(p.weyl), coords.join(","))
    }

    /// Solves the rank-one block equation for `u = x_{α_i}(a)`, `a ≠ 0`:
    /// `x = y = x_{α_i}(-1/a)` and `t = diag(a, 1/a)` in the block.
    pub fn sl2_decompose(&self, i: usize, u: &GroupElement) -> Result<Sl2Decomposition> {
        self.weyl.check_index(i)?;
        let a = u.get(i, i + 1);
        if *u != self.simple_root_element(i, a)? {
            return Err(Error::NotSpecialLinear(format!("not an element of the root subgroup of α{i}")));
        }
        let f = &self.field;
        let inv = f.inv(&a).ok_or(Error::DegenerateDecomposition)?;
        let x = self.simple_root_element(i, f.neg(&inv))?;
        let t = self.torus_simple(i, a)?;
        let y = x.clone();
        let s = self.simple_rep(i);
        let lhs = s.mul(u).mul(&s.inverse());
        let rhs = x.mul(&s).mul(&t).mul(&y);
        if lhs != rhs {
            return Err(Error::Internal("rank-one decomposition failed to verify".into()));
        }
        Ok(Sl2Decomposition { x, t, y })
    }

    /// `τ_i = u⁻¹ṡ_i⁻¹(x - 1)` as the formal sum `(+1)·u⁻¹ṡ_i⁻¹x + (-1)·u⁻¹ṡ_i⁻¹`.
    pub fn tau_group_element(&self, i: usize, u: &GroupElement) -> Result<Vec<(GroupElement, i64)>> {
        let dec = self.sl2_decompose(i, u)?;
        let base = u.inverse().mul(&self.simple_rep(i).inverse());
        Ok(vec![(base.mul(&dec.x), 1), (base, -1)])
    }

    /// `x_{±α_i}(b)` for `b` in the additive basis of `F_q`, and the `ṡ_i`.
    pub fn group_generators(&self) -> Vec<GroupElement> {
        let mut gens = Vec::new();
        for i in 0..self.n - 1 {
            for b in self.field.prime_basis() {
                gens.push(self.root_element(i, i + 1, b).expect("valid root"));
                gens.push(self.root_element(i + 1, i, b).expect("valid root"));
            }
            gens.push(self.simple_rep(i));
        }
        gens
    }

    /// Generators of the standard Borel subgroup: torus elements at a
    /// primitive element and `x_{α_i}(b)` for `b` in the additive basis.
    pub fn borel_generators(&self) -> Vec<GroupElement> {
        let zeta = self.field.primitive_element();
        let mut gens = Vec::new();
        for i in 0..self.n - 1 {
            if zeta != 1 {
                gens.push(self.torus_simple(i, zeta).expect("valid index"));
            }
            for b in self.field.prime_basis() {
                gens.push(self.root_element(i, i + 1, b).expect("valid root"));
            }
        }
        gens
    }

    /// Closure of `gens` under multiplication; only for small groups.
    pub fn generated_elements(&self, gens: &[GroupElement], cap: usize) -> Result<Vec<GroupElement>> {
        let mut seen: HashSet<GroupElement> = HashSet::from([self.identity()]);
        let mut out = vec![self.identity()];
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(g) = queue.pop_front() {
            for s in gens {
                let h = g.mul(s);
                if seen.insert(h.clone()) {
                    if out.len() >= cap {
                        return Err(Error::CapExceeded { size: out.len() + 1, cap });
                    }
                    out.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }
}

/// Enumeration of `G/P_K` by Bruhat coordinates, `w ∈ X_K` in enumeration
/// order and `u_part` read as base-`q` digits.
#[derive(Debug, Clone)]
pub struct FlagSpace {
    k: SubsetJ,
    q: usize,
    offsets: HashMap<ElemId, usize>,
    points: Vec<FlagPoint>,
}

impl FlagSpace {
    pub fn new(group: &SlGroup, k: SubsetJ) -> Result<Self> {
        group.weyl.check_subset(k)?;
        let q = group.q() as usize;
        let mut offsets = HashMap::new();
        let mut points = Vec::new();
        for w in group.weyl.min_coset_reps(k) {
            offsets.insert(w, points.len());
            let len = group.weyl.length(w);
            for mut idx in 0..q.pow(len as u32) {
                let mut u_part = vec![0u32; len];
                for slot in u_part.iter_mut().rev() {
                    *slot = (idx % q) as u32;
                    idx /= q;
                }
                points.push(FlagPoint { weyl: w, u_part });
            }
        }
        Ok(FlagSpace { k, q, offsets, points })
    }

    pub fn subset(&self) -> SubsetJ {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[FlagPoint] {
        &self.points
    }

    pub fn index(&self, p: &FlagPoint) -> Option<usize> {
        let base = self.offsets.get(&p.weyl)?;
        Some(base + p.u_part.iter().fold(0, |acc, &c| acc * self.q + c as usize))
    }
}

fn transpose(a: usize, s: usize) -> usize {
    if a == s {
        s + 1
    } else if a == s + 1 {
        s
    } else {
        a
    }
}

/// `σ` with column `k` of a monomial matrix nonzero in row `σ(k)`.
fn permutation_of(g: &GroupElement) -> Vec<usize> {
    let n = g.0.rows();
    (0..n).map(|k| (0..n).find(|&r| g.get(r, k) != 0).unwrap_or(0)).collect()
}
