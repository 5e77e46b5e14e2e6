//! Finite crystallographic Coxeter systems built from Cartan data.
//!
//! An element is stored as its action on the positive roots (a signed
//! permutation), so equality is canonical and the length is the number of
//! positive roots sent to negative ones. The whole group is enumerated once,
//! breadth-first by length with ties broken by the lexicographic order of the
//! action; that enumeration order is the order of every list returned here,
//! and [`ElemId`] indexes into it.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on |W| for enumeration.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// A subset of the simple indices `0..rank`, as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetJ(u32);

impl SubsetJ {
    pub const EMPTY: SubsetJ = SubsetJ(0);

    pub fn from_bits(bits: u32) -> Self {
        SubsetJ(bits)
    }

    pub fn full(rank: usize) -> Self {
        SubsetJ(((1u64 << rank) - 1) as u32)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SubsetJ(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn single(i: usize) -> Self {
        SubsetJ(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: SubsetJ) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetJ) -> SubsetJ {
        SubsetJ(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetJ) -> SubsetJ {
        SubsetJ(self.0 & other.0)
    }

    pub fn complement(self, rank: usize) -> SubsetJ {
        SubsetJ(!self.0 & Self::full(rank).0)
    }

    pub fn with(self, i: usize) -> SubsetJ {
        SubsetJ(self.0 | 1 << i)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `0..rank`, in increasing bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = SubsetJ> {
        (0..1u32 << rank).map(SubsetJ)
    }

    /// Parses a sorted index list such as `[0,1]` or `[]`.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("subset `{s}` must look like [0,1]")))?;
        let mut bits = 0u32;
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok.parse().map_err(|e| Error::Parse(format!("subset index `{tok}`: {e}")))?;
            if i >= 32 {
                return Err(Error::Parse(format!("subset index {i} too large")));
            }
            bits |= 1 << i;
        }
        Ok(SubsetJ(bits))
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Index of an element in its system's enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Signed image of a positive root: `+(k+1)` for `β_k`, `-(k+1)` for `-β_k`.
type SignedRoot = i16;

fn signed(k: usize, negative: bool) -> SignedRoot {
    let v = (k + 1) as SignedRoot;
    if negative {
        -v
    } else {
        v
    }
}

fn unsign(s: SignedRoot) -> (usize, bool) {
    ((s.unsigned_abs() - 1) as usize, s < 0)
}

/// A Weyl group element: its action on the positive roots of its system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    tag: u64,
    action: Vec<SignedRoot>,
    length: usize,
}

impl CoxeterElement {
    pub fn length(&self) -> usize {
        self.length
    }

    /// Image of the positive root `k`: `(index, negative)`.
    pub fn root_image(&self, k: usize) -> (usize, bool) {
        unsign(self.action[k])
    }
}

#[derive(Debug)]
pub struct CoxeterSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Vec<i32>>,
    tag: u64,
    elements: Vec<CoxeterElement>,
    index: HashMap<Vec<SignedRoot>, ElemId>,
    right: Vec<ElemId>,
    left: Vec<ElemId>,
    words: Vec<Vec<u8>>,
    longest: ElemId,
    bruhat: OnceLock<Vec<Vec<u64>>>,
}

impl CoxeterSystem {
    /// Builds the system for a type label such as `A3`, `B2`, `G2`, `D4`.
    pub fn build(label: &str) -> Result<Self> {
        let cartan = cartan_matrix(label)?;
        Self::from_cartan(label, cartan, DEFAULT_ELEMENT_CAP)
    }

    pub fn from_cartan(label: &str, cartan: Vec<Vec<i32>>, cap: usize) -> Result<Self> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if rank > 16 {
            return Err(Error::GroupTooLarge { cap });
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::RaggedMatrix { row: i, expected: rank, found: row.len() });
            }
            for (j, &a) in row.iter().enumerate() {
                let ok = if i == j { a == 2 } else { a <= 0 && (a == 0) == (cartan[j][i] == 0) };
                if !ok {
                    return Err(Error::UnknownType(format!("{label}: invalid Cartan entry ({i},{j}) = {a}")));
                }
            }
        }
        let positive_roots = enumerate_roots(&cartan, cap)?;
        let root_index: HashMap<&[i32], usize> =
            positive_roots.iter().enumerate().map(|(k, r)| (r.as_slice(), k)).collect();
        let reflect: Vec<Vec<SignedRoot>> = (0..rank)
            .map(|i| {
                positive_roots
                    .iter()
                    .map(|beta| {
                        let img = reflect_root(&cartan, i, beta);
                        let negative = img.iter().any(|&c| c < 0);
                        let abs: Vec<i32> = img.iter().map(|c| c.abs()).collect();
                        signed(root_index[abs.as_slice()], negative)
                    })
                    .collect()
            })
            .collect();

        let mut hasher = DefaultHasher::new();
        label.hash(&mut hasher);
        cartan.hash(&mut hasher);
        let tag = hasher.finish();

        let nroots = positive_roots.len();
        let identity = CoxeterElement { tag, action: (0..nroots).map(|k| signed(k, false)).collect(), length: 0 };
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity.action.clone(), ElemId(0))]);
        let mut level = vec![identity];
        while !level.is_empty() {
            let mut next: HashSet<Vec<SignedRoot>> = HashSet::new();
            for w in &level {
                for i in 0..rank {
                    // w s_i > w iff w(α_i) > 0
                    if w.action[i] > 0 {
                        next.insert(right_mul_action(&w.action, &reflect[i]));
                    }
                }
            }
            let mut next: Vec<Vec<SignedRoot>> = next.into_iter().collect();
            next.sort();
            level = next
                .into_iter()
                .map(|action| {
                    let length = action.iter().filter(|&&s| s < 0).count();
                    CoxeterElement { tag, action, length }
                })
                .collect();
            for w in &level {
                index.insert(w.action.clone(), ElemId(elements.len() as u32));
                elements.push(w.clone());
                if elements.len() > cap {
                    return Err(Error::GroupTooLarge { cap });
                }
            }
        }

        let n = elements.len();
        let mut right = Vec::with_capacity(n * rank);
        let mut left = Vec::with_capacity(n * rank);
        for w in &elements {
            for refl in &reflect {
                right.push(index[&right_mul_action(&w.action, refl)]);
            }
            for refl in &reflect {
                left.push(index[&left_mul_action(refl, &w.action)]);
            }
        }
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for id in 1..n {
            let len = elements[id].length;
            let i = (0..rank)
                .find(|&i| elements[left[id * rank + i].index()].length < len)
                .expect("nonidentity element has a left descent");
            let rest = left[id * rank + i].index();
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[rest]);
            words[id] = word;
        }
        let longest = ElemId(n as u32 - 1);
        Ok(CoxeterSystem {
            label: label.to_string(),
            rank,
            cartan,
            positive_roots,
            tag,
            elements,
            index,
            right,
            left,
            words,
            longest,
            bruhat: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn full_set(&self) -> SubsetJ {
        SubsetJ::full(self.rank)
    }

    pub fn ids(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn element(&self, id: ElemId) -> &CoxeterElement {
        &self.elements[id.index()]
    }

    pub fn id_of(&self, w: &CoxeterElement) -> Result<ElemId> {
        if w.tag != self.tag {
            return Err(Error::MismatchedSystems);
        }
        self.index.get(&w.action).copied().ok_or(Error::MismatchedSystems)
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.elements[w.index()].length
    }

    pub fn simple(&self, i: usize) -> ElemId {
        self.right[i]
    }

    pub fn longest(&self) -> ElemId {
        self.longest
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
        }
        Ok(())
    }

    pub fn check_subset(&self, j: SubsetJ) -> Result<()> {
        if !j.is_subset_of(self.full_set()) {
            return Err(Error::InvalidSubset { bits: j.bits(), rank: self.rank });
        }
        Ok(())
    }

    /// `w s_i`.
    pub fn mul_simple_right(&self, w: ElemId, i: usize) -> ElemId {
        self.right[w.index() * self.rank + i]
    }

    /// `s_i w`.
    pub fn mul_simple_left(&self, i: usize, w: ElemId) -> ElemId {
        self.left[w.index() * self.rank + i]
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        self.words[b.index()].iter().fold(a, |acc, &i| self.mul_simple_right(acc, i as usize))
    }

    pub fn inverse(&self, a: ElemId) -> ElemId {
        self.words[a.index()].iter().rev().fold(ElemId::IDENTITY, |acc, &i| self.mul_simple_right(acc, i as usize))
    }

    /// Composition of root actions. Fails when the elements come from another system.
    pub fn multiply(&self, w: &CoxeterElement, v: &CoxeterElement) -> Result<CoxeterElement> {
        if w.tag != self.tag || v.tag != self.tag {
            return Err(Error::MismatchedSystems);
        }
        let action: Vec<SignedRoot> = v
            .action
            .iter()
            .map(|&s| {
                let (k, neg) = unsign(s);
                let (m, neg2) = unsign(w.action[k]);
                signed(m, neg ^ neg2)
            })
            .collect();
        let length = action.iter().filter(|&&s| s < 0).count();
        Ok(CoxeterElement { tag: self.tag, action, length })
    }

    /// ShortLex-minimal reduced word (simple indices).
    pub fn word(&self, w: ElemId) -> &[u8] {
        &self.words[w.index()]
    }

    /// Product of the simple reflections in `word`, left to right.
    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        word.iter().try_fold(ElemId::IDENTITY, |acc, &i| {
            self.check_index(i)?;
            Ok(self.mul_simple_right(acc, i))
        })
    }

    /// `s0*s1*s0`, or `e` for the identity.
    pub fn format_word(&self, w: ElemId) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".to_string();
        }
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
    }

    /// Parses `s0*s1`, `e` or the empty string. The word need not be reduced.
    pub fn parse_word(&self, s: &str) -> Result<ElemId> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(ElemId::IDENTITY);
        }
        let letters = s
            .split('*')
            .map(|t| {
                let t = t.trim();
                t.strip_prefix('s')
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("malformed letter `{t}` in word `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_word(&letters)
    }

    /// `R(w) = {i | ℓ(w s_i) < ℓ(w)}`.
    pub fn right_descents(&self, w: ElemId) -> SubsetJ {
        let action = &self.elements[w.index()].action;
        SubsetJ::from_indices(&(0..self.rank).filter(|&i| action[i] < 0).collect::<Vec<_>>())
    }

    pub fn left_descents(&self, w: ElemId) -> SubsetJ {
        let len = self.length(w);
        SubsetJ::from_indices(
            &(0..self.rank).filter(|&i| self.length(self.mul_simple_left(i, w)) < len).collect::<Vec<_>>(),
        )
    }

    /// Simple reflections occurring in any reduced word of `w`.
    pub fn support(&self, w: ElemId) -> SubsetJ {
        SubsetJ::from_indices(&self.word(w).iter().map(|&i| i as usize).collect::<Vec<_>>())
    }

    fn bruhat_table(&self) -> &Vec<Vec<u64>> {
        self.bruhat.get_or_init(|| {
            // [e, w] = [e, sw] ∪ s·[e, sw] for any left descent s of w
            let n = self.order();
            let blocks = n.div_ceil(64);
            let mut below: Vec<Vec<u64>> = Vec::with_capacity(n);
            for w in 0..n {
                let mut set = vec![0u64; blocks];
                if w == 0 {
                    set[0] = 1;
                } else {
                    let s = self.words[w][0] as usize;
                    let v = self.mul_simple_left(s, ElemId(w as u32)).index();
                    for y in 0..n {
                        if below[v][y / 64] >> (y % 64) & 1 == 1 {
                            set[y / 64] |= 1 << (y % 64);
                            let sy = self.mul_simple_left(s, ElemId(y as u32)).index();
                            set[sy / 64] |= 1 << (sy % 64);
                        }
                    }
                }
                below.push(set);
            }
            below
        })
    }

    /// Bruhat order `y ≤ w`.
    pub fn bruhat_leq(&self, y: ElemId, w: ElemId) -> bool {
        let (y, w) = (y.index(), w.index());
        if self.elements[y].length > self.elements[w].length {
            return false;
        }
        self.bruhat_table()[w][y / 64] >> (y % 64) & 1 == 1
    }

    /// `y ≤ w` by the descent recursion alone, without the cached table.
    pub fn bruhat_leq_recursive(&self, y: ElemId, w: ElemId) -> bool {
        if self.length(y) > self.length(w) {
            return false;
        }
        if self.length(w) == 0 {
            return y == ElemId::IDENTITY;
        }
        let s = self.words[w.index()][0] as usize;
        let sw = self.mul_simple_left(s, w);
        let sy = self.mul_simple_left(s, y);
        if self.length(sy) < self.length(y) {
            self.bruhat_leq_recursive(sy, sw)
        } else {
            self.bruhat_leq_recursive(y, sw)
        }
    }

    /// Elements of `[e, w]` in enumeration order.
    pub fn lower_interval(&self, w: ElemId) -> Vec<ElemId> {
        self.ids().filter(|&y| self.bruhat_leq(y, w)).collect()
    }

    /// The longest element `w_J` of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: SubsetJ) -> ElemId {
        let mut w = ElemId::IDENTITY;
        while let Some(i) = j.iter().find(|&i| self.elements[w.index()].action[i] > 0) {
            w = self.mul_simple_right(w, i);
        }
        w
    }

    /// Elements of `W_J`, in enumeration order.
    pub fn parabolic_subgroup(&self, j: SubsetJ) -> Vec<ElemId> {
        self.ids().filter(|&w| self.support(w).is_subset_of(j)).collect()
    }

    /// The minimal-length representative of `w W_J`.
    pub fn min_coset_rep(&self, w: ElemId, j: SubsetJ) -> ElemId {
        let mut w = w;
        while let Some(i) = j.iter().find(|&i| self.elements[w.index()].action[i] < 0) {
            w = self.mul_simple_right(w, i);
        }
        w
    }

    /// `X_J`: elements of minimal length in their left coset `x W_J`.
    pub fn min_coset_reps(&self, j: SubsetJ) -> Vec<ElemId> {
        self.ids().filter(|&x| self.right_descents(x).intersection(j).is_empty()).collect()
    }

    /// `Y_J = {x ∈ X_J | R(x w_J) = J}`.
    pub fn y_set(&self, j: SubsetJ) -> Vec<ElemId> {
        let wj = self.longest_element(j);
        self.min_coset_reps(j).into_iter().filter(|&x| self.right_descents(self.mul(x, wj)) == j).collect()
    }

    /// Number of `w` with `w² = e`.
    pub fn count_involutions(&self) -> usize {
        self.ids().filter(|&w| self.mul(w, w) == ElemId::IDENTITY).count()
    }

    /// Number of positive roots in the span of the simple roots in `J`.
    pub fn parabolic_root_count(&self, j: SubsetJ) -> usize {
        self.positive_roots.iter().filter(|r| r.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i))).count()
    }
}

fn right_mul_action(w: &[SignedRoot], refl: &[SignedRoot]) -> Vec<SignedRoot> {
    // (w s)(β_k) = w(s β_k)
    refl.iter()
        .map(|&s| {
            let (m, neg) = unsign(s);
            let (t, neg2) = unsign(w[m]);
            signed(t, neg ^ neg2)
        })
        .collect()
}

fn left_mul_action(refl: &[SignedRoot], w: &[SignedRoot]) -> Vec<SignedRoot> {
    // (s w)(β_k) = s(w β_k)
    w.iter()
        .map(|&s| {
            let (m, neg) = unsign(s);
            let (t, neg2) = unsign(refl[m]);
            signed(t, neg ^ neg2)
        })
        .collect()
}

/// `s_i(β) = β - ⟨β, α_i^∨⟩ α_i` with `⟨α_j, α_i^∨⟩ = A_ij`.
fn reflect_root(cartan: &[Vec<i32>], i: usize, beta: &[i32]) -> Vec<i32> {
    let pairing: i32 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

fn enumerate_roots(cartan: &[Vec<i32>], cap: usize) -> Result<Vec<Vec<i32>>> {
    let rank = cartan.len();
    let mut roots: Vec<Vec<i32>> = (0..rank)
        .map(|i| {
            let mut e = vec![0; rank];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: HashSet<Vec<i32>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                let img = reflect_root(cartan, i, beta);
                if img.iter().all(|&c| c >= 0) && seen.insert(img.clone()) {
                    next.push(img);
                }
            }
        }
        roots.extend(next.iter().cloned());
        if roots.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        frontier = next;
    }
    // by height, then with α_0 before α_1 before …
    roots.sort_by_key(|r| (r.iter().sum::<i32>(), std::cmp::Reverse(r.clone())));
    Ok(roots)
}

/// Number of involutions in the symmetric group on `n` letters, by
/// `T(n) = T(n-1) + (n-1)·T(n-2)` with `T(0) = T(1) = 1`.
pub fn telephone_number(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 2..=n {
        (prev, cur) = (cur, cur + (k as u64 - 1) * prev);
    }
    cur
}

/// Cartan matrix for a label such as `A3`, `B2`, `C3`, `D4`, `E6`, `F4`, `G2`.
pub fn cartan_matrix(label: &str) -> Result<Vec<Vec<i32>>> {
    let label = label.trim();
    let unknown = || Error::UnknownType(label.to_string());
    let mut chars = label.chars();
    let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let chain = |n: usize| {
        let mut a = vec![vec![0; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let a = match (family, n) {
        ('A', n) => chain(n),
        ('B', n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            a
        }
        ('C', n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            a
        }
        ('D', n) if n >= 3 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        ('E', 6..=8) => {
            let mut a = vec![vec![0; n]; n];
            let mut edges = vec![(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)];
            edges.extend((5..n - 1).map(|i| (i, i + 1)));
            for i in 0..n {
                a[i][i] = 2;
            }
            for (i, j) in edges {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            a
        }
        ('F', 4) => {
            let mut a = chain(4);
            a[1][2] = -2;
            a
        }
        ('G', 2) => vec![vec![2, -1], vec![-3, 2]],
        _ => return Err(unknown()),
    };
    Ok(a)
}
