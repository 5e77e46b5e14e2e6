//! The span of the translates `w·D_J` for `w ∈ Y_J`, the `τ_i` operators on
//! it and the descent reduction back to `D_J`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{CoxeterSystem, ElemId, SubsetJ};
use crate::error::{Error, Result};
use crate::exactlinalg::Field;
use crate::klpoly::{c_element, GroupAlgebraVector, KlTable};
use crate::par;

/// Ψ = (h, c): the maximal support length and the number of support
/// elements of that length. The derived order is the dictionary order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsiMeasure {
    pub h: usize,
    pub c: usize,
}

impl PsiMeasure {
    pub const BASE: PsiMeasure = PsiMeasure { h: 0, c: 1 };
}

impl fmt::Display for PsiMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.c)
    }
}

/// Vector in the free module on `{w·D_J | w ∈ Y_J}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EModelVector<E> {
    j: SubsetJ,
    coords: BTreeMap<ElemId, E>,
}

impl<E: Clone> EModelVector<E> {
    pub fn subset(&self) -> SubsetJ {
        self.j
    }

    pub fn coords(&self) -> &BTreeMap<ElemId, E> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// `τ_j` applied to a vector whose coefficient at `w_1` is nonzero.
    Direct,
    /// One letter of the detour through `w_2`.
    Detour,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate<E> {
    /// The τ word, in the order applied.
    pub steps: Vec<usize>,
    pub kinds: Vec<StepKind>,
    /// Ψ of the input followed by Ψ after each step.
    pub trace: Vec<PsiMeasure>,
    pub final_scalar: E,
}

/// The model for a fixed system, subset `J` and scalar field.
#[derive(Debug, Clone)]
pub struct EModel<'a, F: Field> {
    sys: &'a CoxeterSystem,
    field: F,
    j: SubsetJ,
    wj: ElemId,
    y: Vec<ElemId>,
    in_y: Vec<bool>,
}

impl<'a, F: Field> EModel<'a, F> {
    pub fn new(sys: &'a CoxeterSystem, j: SubsetJ, field: &F) -> Result<Self> {
        sys.check_subset(j)?;
        let y = sys.y_set(j);
        let mut in_y = vec![false; sys.order()];
        for w in &y {
            in_y[w.index()] = true;
        }
        Ok(EModel { sys, field: field.clone(), j, wj: sys.longest_element(j), y, in_y })
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.sys
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn subset(&self) -> SubsetJ {
        self.j
    }

    pub fn y_set(&self) -> &[ElemId] {
        &self.y
    }

    pub fn in_y(&self, w: ElemId) -> bool {
        self.in_y[w.index()]
    }

    pub fn zero(&self) -> EModelVector<F::Elem> {
        EModelVector { j: self.j, coords: BTreeMap::new() }
    }

    /// `w·D_J`.
    pub fn basis(&self, w: ElemId) -> Result<EModelVector<F::Elem>> {
        self.from_terms(&[(w, self.field.one())])
    }

    /// `D_J`.
    pub fn d_j(&self) -> EModelVector<F::Elem> {
        self.basis(ElemId::IDENTITY).expect("identity lies in every Y_J")
    }

    pub fn from_terms(&self, terms: &[(ElemId, F::Elem)]) -> Result<EModelVector<F::Elem>> {
        let mut v = self.zero();
        for (w, c) in terms {
            if !self.in_y(*w) {
                return Err(Error::NotInYSet(self.sys.format_word(*w)));
            }
            self.add_term(&mut v, *w, c);
        }
        Ok(v)
    }

    pub fn coeff(&self, v: &EModelVector<F::Elem>, w: ElemId) -> F::Elem {
        v.coords.get(&w).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn add_term(&self, v: &mut EModelVector<F::Elem>, w: ElemId, c: &F::Elem) {
        let sum = self.field.add(&self.coeff(v, w), c);
        if self.field.is_zero(&sum) {
            v.coords.remove(&w);
        } else {
            v.coords.insert(w, sum);
        }
    }

    pub fn scale(&self, v: &EModelVector<F::Elem>, c: &F::Elem) -> EModelVector<F::Elem> {
        let mut out = self.zero();
        for (w, a) in &v.coords {
            self.add_term(&mut out, *w, &self.field.mul(a, c));
        }
        out
    }

    pub fn add(&self, a: &EModelVector<F::Elem>, b: &EModelVector<F::Elem>) -> EModelVector<F::Elem> {
        let mut out = a.clone();
        for (w, c) in &b.coords {
            self.add_term(&mut out, *w, c);
        }
        out
    }

    /// The three-case action of `τ_i` on `w·D_J`, extended linearly.
    pub fn tau_apply(&self, i: usize, v: &EModelVector<F::Elem>) -> Result<EModelVector<F::Elem>> {
        self.sys.check_index(i)?;
        let sys = self.sys;
        let mut out = self.zero();
        for (&w, a) in &v.coords {
            let sw = sys.mul_simple_left(i, w);
            if sys.length(sw) < sys.length(w) {
                if !self.in_y(sw) {
                    return Err(Error::Internal(format!("s{i}·{} left Y_J{}", sys.format_word(w), self.j)));
                }
                self.add_term(&mut out, w, a);
                self.add_term(&mut out, sw, &self.field.neg(a));
            } else {
                let wwj = sys.mul(w, self.wj);
                if sys.length(sys.mul_simple_left(i, wwj)) < sys.length(wwj) {
                    self.add_term(&mut out, w, a);
                }
            }
        }
        Ok(out)
    }

    /// Applies `τ_{j_1}`, then `τ_{j_2}`, and so on.
    pub fn tau_word(&self, word: &[usize], v: &EModelVector<F::Elem>) -> Result<EModelVector<F::Elem>> {
        word.iter().try_fold(v.clone(), |acc, &i| self.tau_apply(i, &acc))
    }

    pub fn psi(&self, v: &EModelVector<F::Elem>) -> Result<PsiMeasure> {
        let h = v.coords.keys().map(|&w| self.sys.length(w)).max().ok_or(Error::ZeroVector)?;
        let c = v.coords.keys().filter(|&&w| self.sys.length(w) == h).count();
        Ok(PsiMeasure { h, c })
    }

    /// Coefficient of `w_1·D_J` in `τ_{j_k} ⋯ τ_{j_1} w_2·D_J`.
    pub fn kappa(&self, w1: ElemId, taus: &[usize], w2: ElemId) -> Result<F::Elem> {
        if !self.in_y(w1) {
            return Err(Error::NotInYSet(self.sys.format_word(w1)));
        }
        let v = self.tau_word(taus, &self.basis(w2)?)?;
        Ok(self.coeff(&v, w1))
    }

    /// Drives a nonzero vector to a nonzero multiple of `D_J` with τ steps.
    pub fn reduce_to_generator(&self, a: &EModelVector<F::Elem>) -> Result<ReductionCertificate<F::Elem>> {
        let sys = self.sys;
        let bound = 10 * sys.order() * sys.order();
        let mut cur = a.clone();
        let mut psi = self.psi(&cur)?;
        let mut cert = ReductionCertificate {
            steps: Vec::new(),
            kinds: Vec::new(),
            trace: vec![psi],
            final_scalar: self.field.zero(),
        };
        let mut apply = |cur: &mut EModelVector<F::Elem>, i: usize, kind: StepKind| -> Result<PsiMeasure> {
            *cur = self.tau_apply(i, cur)?;
            let psi = self.psi(cur).map_err(|_| Error::Internal(format!("τ{i} annihilated the vector")))?;
            cert.steps.push(i);
            cert.kinds.push(kind);
            cert.trace.push(psi);
            if cert.steps.len() > bound {
                return Err(Error::StepBoundExceeded { bound });
            }
            Ok(psi)
        };

        while psi != PsiMeasure::BASE {
            let w = cur
                .coords
                .keys()
                .copied()
                .filter(|&w| sys.length(w) == psi.h)
                .min_by(|&x, &y| sys.word(x).cmp(sys.word(y)))
                .expect("support is nonempty");
            let word = sys.word(w);
            let wwj = sys.mul(w, self.wj);
            let k = self.j.union(sys.support(wwj));
            let j = k
                .iter()
                .find(|&j| sys.length(sys.mul_simple_left(j, wwj)) > sys.length(wwj))
                .ok_or_else(|| Error::Internal(format!("no ascent for {} in K", sys.format_word(w))))?;
            // strip the prefix of the reduced word until s_j becomes a left descent
            let mut z = wwj;
            let mut w1 = w;
            let mut t_prime = None;
            for (t, &i) in word.iter().enumerate() {
                z = sys.mul_simple_left(i as usize, z);
                w1 = sys.mul_simple_left(i as usize, w1);
                if sys.length(sys.mul_simple_left(j, z)) < sys.length(z) {
                    t_prime = Some(t + 1);
                    break;
                }
            }
            let t_prime = t_prime.ok_or_else(|| Error::Internal("no descent along the reduced word".into()))?;

            if !self.field.is_zero(&self.coeff(&cur, w1)) {
                let next = apply(&mut cur, j, StepKind::Direct)?;
                if next >= psi {
                    return Err(Error::Internal(format!("Ψ did not drop: {psi} -> {next}")));
                }
                psi = next;
                continue;
            }

            let (letters, _) = self
                .detour(&cur, word, t_prime, w1)
                .ok_or_else(|| Error::Internal(format!("no detour from {}", sys.format_word(w1))))?;
            let mut next = psi;
            for i in letters {
                next = apply(&mut cur, i, StepKind::Detour)?;
            }
            if next == psi {
                let after = apply(&mut cur, j, StepKind::Direct)?;
                if after >= next {
                    return Err(Error::Internal(format!("Ψ did not drop: {next} -> {after}")));
                }
                next = after;
            }
            psi = next;
        }
        cert.final_scalar = self.coeff(&cur, ElemId::IDENTITY);
        Ok(cert)
    }

    /// Least `l`, then lexicographically least positions `n(1) < … < n(l)`
    /// among the first `t'` letters, with `w_2 = s_{i_{n(1)}}⋯s_{i_{n(l)}} w_1`
    /// of length `ℓ(w_1) + l`, in `Y_J` and in the support.
    fn detour(
        &self,
        cur: &EModelVector<F::Elem>,
        word: &[u8],
        t_prime: usize,
        w1: ElemId,
    ) -> Option<(Vec<usize>, ElemId)> {
        let sys = self.sys;
        for l in 1..=t_prime {
            for positions in (0..t_prime).combinations(l) {
                let letters: Vec<usize> = positions.iter().map(|&p| word[p] as usize).collect();
                let w2 = letters.iter().rev().fold(w1, |acc, &i| sys.mul_simple_left(i, acc));
                if sys.length(w2) == sys.length(w1) + l && self.in_y(w2) && !self.field.is_zero(&self.coeff(cur, w2)) {
                    return Some((letters, w2));
                }
            }
        }
        None
    }

    /// Replays a certificate on its input and checks every recorded value.
    pub fn replay(&self, a: &EModelVector<F::Elem>, cert: &ReductionCertificate<F::Elem>) -> Result<bool> {
        if cert.trace.len() != cert.steps.len() + 1 || cert.kinds.len() != cert.steps.len() {
            return Ok(false);
        }
        if self.field.is_zero(&cert.final_scalar) || self.psi(a)? != cert.trace[0] {
            return Ok(false);
        }
        let mut cur = a.clone();
        for (k, &i) in cert.steps.iter().enumerate() {
            cur = self.tau_apply(i, &cur)?;
            match self.psi(&cur) {
                Ok(p) if p == cert.trace[k + 1] => {}
                _ => return Ok(false),
            }
            if cert.kinds[k] == StepKind::Direct && cert.trace[k + 1] >= cert.trace[k] {
                return Ok(false);
            }
        }
        Ok(cur == self.scale(&self.d_j(), &cert.final_scalar))
    }

    /// A random nonzero vector: each `Y_J` element enters the support with
    /// probability 1/2, with a random nonzero coefficient.
    pub fn random_vector<R: Rng + ?Sized>(&self, rng: &mut R) -> EModelVector<F::Elem> {
        loop {
            let mut v = self.zero();
            for &w in &self.y {
                if rng.random_bool(0.5) {
                    let c = self.field.random_nonzero(rng);
                    self.add_term(&mut v, w, &c);
                }
            }
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// Reduces `count` seeded random vectors in parallel and replays each
    /// certificate. Vector `k` uses the stream seeded by `seed + k`.
    pub fn fuzz(&self, count: usize, seed: u64) -> FuzzReport {
        let outcomes = par::map_range(count, |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            let v = self.random_vector(&mut rng);
            match self.reduce_to_generator(&v) {
                Ok(cert) => match self.replay(&v, &cert) {
                    Ok(true) => Ok(cert.steps.len()),
                    Ok(false) => Err(format!("vector {k}: certificate does not replay")),
                    Err(e) => Err(format!("vector {k}: {e}")),
                },
                Err(e) => Err(format!("vector {k}: {e}")),
            }
        });
        let mut report = FuzzReport { runs: count, ..FuzzReport::default() };
        for o in outcomes {
            match o {
                Ok(steps) => {
                    report.successes += 1;
                    report.total_steps += steps;
                    report.max_steps = report.max_steps.max(steps);
                }
                Err(msg) => report.failures.push(msg),
            }
        }
        report
    }

    pub fn format_vector(&self, v: &EModelVector<F::Elem>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.coords.iter().map(|(w, c)| format!("{}·{}D", self.field.format(c), self.sys.format_word(*w))).join(" + ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FuzzReport {
    pub runs: usize,
    pub successes: usize,
    pub total_steps: usize,
    pub max_steps: usize,
    pub failures: Vec<String>,
}

/// Three bases of the left ideal `kW·C_{w_J}`:
/// 1. `w·C_{w_J}` for `w ∈ X_J`;
/// 2. `C_{x w_J}` for `x ∈ X_J`;
/// 3. `w·C_{w_J}` for `w ∈ Y_J` together with `C_{x w_J}` for `x ∈ X_J ∖ Y_J`.
pub fn ideal_basis<F: Field>(
    sys: &CoxeterSystem,
    table: &KlTable,
    j: SubsetJ,
    variant: u8,
    field: &F,
) -> Result<Vec<GroupAlgebraVector<F>>> {
    sys.check_subset(j)?;
    let wj = sys.longest_element(j);
    let cwj = c_element(sys, table, wj, field);
    let x = sys.min_coset_reps(j);
    let translate = |w: ElemId| cwj.left_translate(sys, w);
    let c_of = |x: ElemId| c_element(sys, table, sys.mul(x, wj), field);
    match variant {
        1 => Ok(x.into_iter().map(translate).collect()),
        2 => Ok(x.into_iter().map(c_of).collect()),
        3 => {
            let y = sys.y_set(j);
            Ok(x.into_iter().map(|w| if y.contains(&w) { translate(w) } else { c_of(w) }).collect())
        }
        v => Err(Error::InvalidVariant(v)),
    }
}
