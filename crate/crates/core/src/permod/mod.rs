//! Permutation modules `k[G/P_K]` for `G = SL_n(F_q)` in cross
//! characteristic, the alternating vectors `η_J` and `D_J`, the submodule
//! lattice they generate and its subquotients `E_J`.

pub mod meataxe;

use serde::Serialize;

use crate::chevalley::{FlagPoint, FlagSpace, GroupElement, SlGroup};
use crate::coxeter::{ElemId, SubsetJ};
use crate::error::{Error, Result};
use crate::exactlinalg::{
    next_prime, spin, Field, GfQ, LinearOperator, Matrix, Permutation, PrimeField, SubspaceBasis,
};
use crate::klpoly::{c_element, GroupAlgebraVector, KlTable};
use crate::walgebra::{EModel, EModelVector};

pub use meataxe::{composition_factors, CompositionReport, MeataxeStep, DEFAULT_BUDGET};

/// Default cap on the number of points.
pub const DEFAULT_POINT_CAP: usize = 10_000;

/// Dense coordinates on the points of `G/P_K`.
pub type FlagVector<E> = Vec<E>;

#[derive(Debug)]
pub struct PermutationModule<'g, F: Field> {
    group: &'g SlGroup,
    field: F,
    space: FlagSpace,
    generators: Vec<Permutation>,
    borel: Vec<Permutation>,
}

impl<'g, F: Field> PermutationModule<'g, F> {
    /// `k[G/P_K]`; `K = ∅` gives the flag module `k[G/B]`.
    pub fn new(group: &'g SlGroup, k: SubsetJ, field: &F) -> Result<Self> {
        Self::with_cap(group, k, field, DEFAULT_POINT_CAP)
    }

    pub fn with_cap(group: &'g SlGroup, k: SubsetJ, field: &F, cap: usize) -> Result<Self> {
        let p = group.field().prime() as u64;
        if field.characteristic() == p {
            return Err(Error::CrossCharacteristic { p, r: field.characteristic() });
        }
        group.weyl().check_subset(k)?;
        let size: usize = group
            .weyl()
            .min_coset_reps(k)
            .iter()
            .map(|&w| (group.q() as usize).saturating_pow(group.weyl().length(w) as u32))
            .sum();
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        let space = FlagSpace::new(group, k)?;
        let mut module = PermutationModule { group, field: field.clone(), space, generators: vec![], borel: vec![] };
        module.generators = group.group_generators().iter().map(|g| module.permutation(g)).collect();
        module.borel = group.borel_generators().iter().map(|g| module.permutation(g)).collect();
        Ok(module)
    }

    pub fn group(&self) -> &SlGroup {
        self.group
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn parabolic(&self) -> SubsetJ {
        self.space.subset()
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn points(&self) -> &[FlagPoint] {
        self.space.points()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn borel_generators(&self) -> &[Permutation] {
        &self.borel
    }

    /// Index of the point `g·P_K`.
    pub fn point_of(&self, g: &GroupElement) -> usize {
        let p = self.group.parabolic_canonical(g, self.space.subset());
        self.space.index(&p).expect("canonical points are enumerated")
    }

    /// The permutation of the points induced by `g`.
    pub fn permutation(&self, g: &GroupElement) -> Permutation {
        let images =
            self.space.points().iter().map(|p| self.point_of(&g.mul(&self.group.flag_rep(p))) as u32).collect();
        Permutation::new(images).expect("a group element permutes the cosets")
    }

    pub fn zero(&self) -> FlagVector<F::Elem> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, idx: usize) -> FlagVector<F::Elem> {
        let mut v = self.zero();
        v[idx] = self.field.one();
        v
    }

    /// `g·v`.
    pub fn act(&self, g: &GroupElement, v: &[F::Elem]) -> FlagVector<F::Elem> {
        self.permutation(g).apply(&self.field, v)
    }

    pub fn add(&self, a: &[F::Elem], b: &[F::Elem]) -> FlagVector<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[F::Elem], b: &[F::Elem]) -> FlagVector<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &[F::Elem], c: &F::Elem) -> FlagVector<F::Elem> {
        a.iter().map(|x| self.field.mul(x, c)).collect()
    }

    /// `Σ_{w ∈ W_J} (-1)^{ℓ(w)} ẇ·P_K`.
    pub fn alternating_vector(&self, j: SubsetJ) -> Result<FlagVector<F::Elem>> {
        let weyl = self.group.weyl();
        weyl.check_subset(j)?;
        let mut v = self.zero();
        for w in weyl.parabolic_subgroup(j) {
            let idx = self.point_of(self.group.weyl_rep(w));
            let c = self.field.from_i64(if weyl.length(w).is_multiple_of(2) { 1 } else { -1 });
            v[idx] = self.field.add(&v[idx], &c);
        }
        Ok(v)
    }

    /// `η_J`; the module must be `k[G/B]`.
    pub fn eta_vector(&self, j: SubsetJ) -> Result<FlagVector<F::Elem>> {
        self.expect_parabolic(SubsetJ::EMPTY)?;
        self.alternating_vector(j)
    }

    /// `D_J`; the module must be `k[G/P_{J'}]` with `J' = I ∖ J`.
    pub fn d_vector(&self, j: SubsetJ) -> Result<FlagVector<F::Elem>> {
        self.expect_parabolic(j.complement(self.group.weyl().rank()))?;
        self.alternating_vector(j)
    }

    fn expect_parabolic(&self, k: SubsetJ) -> Result<()> {
        if self.parabolic() != k {
            return Err(Error::ParabolicMismatch { expected: k.to_string(), found: self.parabolic().to_string() });
        }
        Ok(())
    }

    /// `kG·v` by spin-up under the generators.
    pub fn submodule_of(&self, v: &[F::Elem]) -> Result<SubspaceBasis<F>> {
        self.submodule_of_all(&[v.to_vec()])
    }

    pub fn submodule_of_all(&self, seeds: &[FlagVector<F::Elem>]) -> Result<SubspaceBasis<F>> {
        spin(&self.field, self.dim(), seeds, &self.generators)
    }

    /// `span{u·ẇ·v | u ∈ U, w ∈ W}`.
    pub fn uw_span(&self, v: &[F::Elem]) -> SubspaceBasis<F> {
        let mut s = SubspaceBasis::new(&self.field, self.dim());
        let units = self.group.unipotent_elements();
        for w in self.group.weyl().ids() {
            let wv = self.act(self.group.weyl_rep(w), v);
            for u in &units {
                s.insert(&self.act(u, &wv));
            }
        }
        s
    }

    /// Image of `Σ c_y y ∈ kW` applied to the base point: `Σ c_y ẏ·P_K`.
    pub fn weyl_image(&self, v: &GroupAlgebraVector<F>) -> FlagVector<F::Elem> {
        let mut out = self.zero();
        for (y, c) in v.support() {
            let idx = self.point_of(self.group.weyl_rep(*y));
            out[idx] = self.field.add(&out[idx], c);
        }
        out
    }

    /// Vector of `Σ_w a_w ẇD_J` for a W-level vector; the module must be `k[G/P_{J'}]`.
    pub fn emodel_image(&self, model: &EModel<'_, F>, v: &EModelVector<F::Elem>) -> Result<FlagVector<F::Elem>> {
        let d = self.d_vector(model.subset())?;
        let mut out = self.zero();
        for (w, c) in v.coords() {
            let term = self.scale(&self.act(self.group.weyl_rep(*w), &d), c);
            out = self.add(&out, &term);
        }
        Ok(out)
    }

    /// Vectors fixed by the Borel subgroup inside the `B`-invariant subspace `s`.
    pub fn b_fixed_points(&self, s: &SubspaceBasis<F>) -> Result<SubspaceBasis<F>> {
        let f = &self.field;
        let d = s.dim();
        if d == 0 {
            return Ok(s.clone());
        }
        let restricted = s.restrict(&self.borel)?;
        // c·(R_g - I) = 0 for every generator g
        let mut stacked = Matrix::zeros(f, d, d * restricted.len().max(1));
        for (k, r) in restricted.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    let mut v = r.get(i, j).clone();
                    if i == j {
                        v = f.sub(&v, &f.one());
                    }
                    stacked.set(i, k * d + j, v);
                }
            }
        }
        let coeffs = stacked.left_nullspace();
        let vectors: Vec<FlagVector<F::Elem>> = coeffs
            .iter()
            .map(|c| {
                let mut v = self.zero();
                for (ci, row) in c.iter().zip(s.rows()) {
                    v = self.add(&v, &self.scale(row, ci));
                }
                v
            })
            .collect();
        SubspaceBasis::from_vectors(f, self.dim(), &vectors)
    }

    /// `Σ_{u ∈ U_{w_J w⁻¹}} u·ẇ·D_J` for `w ∈ Y_J`.
    pub fn orbit_sum(&self, j: SubsetJ, w: ElemId) -> Result<FlagVector<F::Elem>> {
        let weyl = self.group.weyl();
        let d = self.d_vector(j)?;
        let wd = self.act(self.group.weyl_rep(w), &d);
        let y = weyl.mul(weyl.longest_element(j), weyl.inverse(w));
        let mut out = self.zero();
        for u in self.group.u_subgroup_elements(y) {
            out = self.add(&out, &self.act(&u, &wd));
        }
        Ok(out)
    }

    /// `{u·ẇ·D_J | w ∈ Y_J, u ∈ U_{w_J w⁻¹}}`, the expected basis of `kG·D_J`.
    pub fn e_prime_basis(&self, j: SubsetJ) -> Result<Vec<FlagVector<F::Elem>>> {
        let weyl = self.group.weyl();
        let d = self.d_vector(j)?;
        let mut out = Vec::new();
        for w in weyl.y_set(j) {
            let wd = self.act(self.group.weyl_rep(w), &d);
            let y = weyl.mul(weyl.longest_element(j), weyl.inverse(w));
            for u in self.group.u_subgroup_elements(y) {
                out.push(self.act(&u, &wd));
            }
        }
        Ok(out)
    }

    /// Matrices of the generators, for the Meataxe.
    pub fn generator_matrices(&self) -> Vec<Matrix<F>> {
        self.generators.iter().map(|p| p.to_matrix(&self.field)).collect()
    }
}

/// `Σ_{w ∈ Y_J} q^{ℓ(w_J w⁻¹)}`.
pub fn expected_e_prime_dim(group: &SlGroup, j: SubsetJ) -> usize {
    let weyl = group.weyl();
    let wj = weyl.longest_element(j);
    weyl.y_set(j).into_iter().map(|w| (group.q() as usize).pow(weyl.length(weyl.mul(wj, weyl.inverse(w))) as u32)).sum()
}

/// Dimensions attached to one `J` in `k[G/B]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EQuotientDims {
    pub subset: String,
    pub dim_m: usize,
    pub dim_m_prime: usize,
    pub dim_e: usize,
}

/// The submodules `M_J = kG·η_J` of `k[G/B]` for every `J`, indexed by bitmask.
#[derive(Debug, Clone)]
pub struct FlagLattice<F: Field> {
    pub rank: usize,
    pub submodules: Vec<SubspaceBasis<F>>,
}

impl<F: Field> FlagLattice<F> {
    pub fn new(module: &PermutationModule<'_, F>) -> Result<Self> {
        let rank = module.group().weyl().rank();
        let submodules =
            SubsetJ::all(rank).map(|j| module.submodule_of(&module.eta_vector(j)?)).collect::<Result<Vec<_>>>()?;
        Ok(FlagLattice { rank, submodules })
    }

    pub fn m(&self, j: SubsetJ) -> &SubspaceBasis<F> {
        &self.submodules[j.bits() as usize]
    }

    /// `M'_J = Σ_{K ⊋ J} M_K`.
    pub fn m_prime(&self, j: SubsetJ) -> Result<SubspaceBasis<F>> {
        let any = self.m(j);
        let mut acc = SubspaceBasis::new(any.field(), any.ambient_dim());
        for k in SubsetJ::all(self.rank).filter(|&k| j.is_subset_of(k) && k != j) {
            acc = acc.sum(self.m(k))?;
        }
        Ok(acc)
    }

    pub fn e_quotient_dims(&self, j: SubsetJ) -> Result<EQuotientDims> {
        let m = self.m(j);
        let mp = self.m_prime(j)?;
        if !mp.is_subspace_of(m) {
            return Err(Error::Internal(format!("M'_{j} is not contained in M_{j}")));
        }
        Ok(EQuotientDims { subset: j.to_string(), dim_m: m.dim(), dim_m_prime: mp.dim(), dim_e: m.dim() - mp.dim() })
    }

    /// Vectors of `M_J` completing a basis of `M'_J`: a section of `E_J`.
    pub fn e_quotient_section(&self, j: SubsetJ) -> Result<Vec<FlagVector<F::Elem>>> {
        let mut acc = self.m_prime(j)?;
        let mut section = Vec::new();
        for row in self.m(j).rows() {
            if acc.insert(row).is_some() {
                section.push(row.clone());
            }
        }
        Ok(section)
    }

    /// `J ⊆ K ⇒ M_K ⊆ M_J`, for every pair.
    pub fn containment_holds(&self) -> bool {
        SubsetJ::all(self.rank).all(|j| {
            SubsetJ::all(self.rank).filter(|&k| j.is_subset_of(k)).all(|k| self.m(k).is_subspace_of(self.m(j)))
        })
    }
}

/// Outcome of the `U`-average identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UAverageReport {
    pub identity_holds: bool,
    /// Whether `p ≡ 1 (mod r)`.
    pub trivial_regime: bool,
    /// Dimension of the submodule generated by the average, and whether every
    /// generator fixes it; only computed in the trivial regime.
    pub generated_dim: Option<usize>,
    pub generated_is_trivial: Option<bool>,
}

/// Expands `Σ_{u∈U} u·η` for `η = Σ_w ẇB` and compares it with
/// `Σ_w q^{ℓ(w_0 w)} Σ_{u ∈ U_{w⁻¹}} u·ẇB`.
pub fn u_average_check<F: Field>(module: &PermutationModule<'_, F>) -> Result<UAverageReport> {
    module.expect_parabolic(SubsetJ::EMPTY)?;
    let group = module.group();
    let weyl = group.weyl();
    let f = module.field();
    let mut eta = module.zero();
    for w in weyl.ids() {
        let idx = module.point_of(group.weyl_rep(w));
        eta[idx] = f.add(&eta[idx], &f.one());
    }
    let mut lhs = module.zero();
    for u in group.unipotent_elements() {
        lhs = module.add(&lhs, &module.act(&u, &eta));
    }
    let top = weyl.length(weyl.longest());
    let mut rhs = module.zero();
    for w in weyl.ids() {
        let coeff = f.from_i64((group.q() as i64).pow((top - weyl.length(w)) as u32));
        let wb = module.basis_vector(module.point_of(group.weyl_rep(w)));
        for u in group.u_subgroup_elements(weyl.inverse(w)) {
            rhs = module.add(&rhs, &module.scale(&module.act(&u, &wb), &coeff));
        }
    }
    let p = group.field().prime() as u64;
    let r = f.characteristic();
    let trivial_regime = r != 0 && p % r == 1;
    let (generated_dim, generated_is_trivial) = if trivial_regime {
        let sub = module.submodule_of(&lhs)?;
        let fixed = module.generators().iter().all(|g| g.apply(f, &lhs) == lhs);
        (Some(sub.dim()), Some(fixed && sub.dim() <= 1))
    } else {
        (None, None)
    };
    Ok(UAverageReport { identity_holds: lhs == rhs, trivial_regime, generated_dim, generated_is_trivial })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicQuotientReport {
    pub subset: String,
    pub dim_flag_module: usize,
    pub dim_n: usize,
    pub dim_parabolic_module: usize,
    /// `dim k[G/B] - dim N_J = dim k[G/P_J]`.
    pub quotient_matches: bool,
    /// `Σ_{K ∩ J = ∅} dim E_K`.
    pub e_sum: usize,
    pub e_sum_matches: bool,
}

/// Compares `k[G/B] / N_J`, `N_J = Σ_{i ∈ J} M_{{i}}`, with `k[G/P_J]`.
pub fn parabolic_quotient_check<F: Field>(
    module: &PermutationModule<'_, F>,
    lattice: &FlagLattice<F>,
    j: SubsetJ,
) -> Result<ParabolicQuotientReport> {
    let mut n = SubspaceBasis::new(module.field(), module.dim());
    for i in j.iter() {
        n = n.sum(lattice.m(SubsetJ::single(i)))?;
    }
    let parabolic = PermutationModule::new(module.group(), j, module.field())?;
    let e_sum: usize = SubsetJ::all(lattice.rank)
        .filter(|k| k.intersection(j).is_empty())
        .map(|k| lattice.e_quotient_dims(k).map(|d| d.dim_e))
        .sum::<Result<usize>>()?;
    Ok(ParabolicQuotientReport {
        subset: j.to_string(),
        dim_flag_module: module.dim(),
        dim_n: n.dim(),
        dim_parabolic_module: parabolic.dim(),
        quotient_matches: module.dim() - n.dim() == parabolic.dim(),
        e_sum,
        e_sum_matches: e_sum == parabolic.dim(),
    })
}

/// Counts for the rank-one identities relating `ṡ_i u ẇ η_J` to `ẇη_J`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RankOneReport {
    /// Cases checked for the statements with `ww_J < s_iww_J`, `s_iw < w`, and
    /// `s_iw > w, s_iww_J < ww_J`.
    pub checked: [usize; 3],
    pub failures: Vec<String>,
}

/// Checks, for every `J`, `i`, `w ∈ X_J` and `u ∈ U_{α_i} ∖ {1}`:
/// `ṡ_iuẇη_J = ṡ_iẇη_J` when `ww_J < s_iww_J`; `= xẇη_J` when `s_iw < w`;
/// `= (x - 1)ẇη_J` when `s_iw > w` and `s_iww_J < ww_J`.
pub fn rank_one_identities<F: Field>(module: &PermutationModule<'_, F>) -> Result<RankOneReport> {
    module.expect_parabolic(SubsetJ::EMPTY)?;
    let group = module.group();
    let weyl = group.weyl();
    let mut report = RankOneReport::default();
    for j in SubsetJ::all(weyl.rank()) {
        let eta = module.eta_vector(j)?;
        let wj = weyl.longest_element(j);
        for w in weyl.min_coset_reps(j) {
            let weta = module.act(group.weyl_rep(w), &eta);
            let wwj = weyl.mul(w, wj);
            for i in 0..weyl.rank() {
                let s = group.simple_rep(i);
                let siw_lower = weyl.length(weyl.mul_simple_left(i, w)) < weyl.length(w);
                let siwwj_lower = weyl.length(weyl.mul_simple_left(i, wwj)) < weyl.length(wwj);
                for a in 1..group.q() {
                    let u = group.simple_root_element(i, a)?;
                    let x = group.sl2_decompose(i, &u)?.x;
                    let lhs = module.act(&s.mul(&u), &weta);
                    let label = |part: &str| format!("{part}: J={j} i={i} w={} a={a}", weyl.format_word(w));
                    if !siwwj_lower {
                        report.checked[0] += 1;
                        if lhs != module.act(&s, &weta) {
                            report.failures.push(label("ascent"));
                        }
                    }
                    if siw_lower {
                        report.checked[1] += 1;
                        if lhs != module.act(&x, &weta) {
                            report.failures.push(label("descent"));
                        }
                    }
                    if !siw_lower && siwwj_lower {
                        report.checked[2] += 1;
                        if lhs != module.sub(&module.act(&x, &weta), &weta) {
                            report.failures.push(label("mixed"));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TauConsistencyReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Applies the group-algebra `τ_i` (for every `u ∈ U_{α_i} ∖ {1}`) to each
/// `ẇD_J`, `w ∈ Y_J`, and compares with the W-level table, for every `J`.
pub fn tau_consistency(group: &SlGroup, field: &PrimeField) -> Result<TauConsistencyReport> {
    let weyl = group.weyl();
    let mut report = TauConsistencyReport::default();
    for j in SubsetJ::all(weyl.rank()) {
        let module = PermutationModule::new(group, j.complement(weyl.rank()), field)?;
        let model = EModel::new(weyl, j, field)?;
        let d = module.d_vector(j)?;
        for &w in model.y_set() {
            let wd = module.act(group.weyl_rep(w), &d);
            for i in 0..weyl.rank() {
                let expected = module.emodel_image(&model, &model.tau_apply(i, &model.basis(w)?)?)?;
                for a in 1..group.q() {
                    let u = group.simple_root_element(i, a)?;
                    let mut got = module.zero();
                    for (g, sign) in group.tau_group_element(i, &u)? {
                        let term = module.scale(&module.act(&g, &wd), &field.from_i64(sign));
                        got = module.add(&got, &term);
                    }
                    report.checked += 1;
                    if got != expected {
                        report.failures.push(format!("J={j} w={} i={i} a={a}", weyl.format_word(w)));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Checks that `C_{xw_J}` applied to the base point of `k[G/P_{J'}]` vanishes
/// for every `x ∈ X_J ∖ Y_J`. Returns the number of elements checked.
pub fn c_vanishing_check<F: Field>(
    module: &PermutationModule<'_, F>,
    table: &KlTable,
    j: SubsetJ,
) -> Result<(usize, bool)> {
    let weyl = module.group().weyl();
    module.expect_parabolic(j.complement(weyl.rank()))?;
    let wj = weyl.longest_element(j);
    let y = weyl.y_set(j);
    let mut checked = 0;
    let mut ok = true;
    for x in weyl.min_coset_reps(j).into_iter().filter(|x| !y.contains(x)) {
        let c = c_element(weyl, table, weyl.mul(x, wj), module.field());
        checked += 1;
        ok &= module.weyl_image(&c).iter().all(|a| module.field().is_zero(a));
    }
    Ok((checked, ok))
}

/// Outcome of the field-extension experiment on orbit sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionReport {
    pub subset: String,
    /// `(w, moved)` for each `w ∈ Y_J` with `w_J w⁻¹ ≠ e`.
    pub moved: Vec<(String, bool)>,
}

/// Over `F_{q²}`, checks whether the orbit sum `Σ_{u ∈ U_{w_Jw⁻¹}(F_q)} uẇD_J`
/// is moved by some element of `U_{w_Jw⁻¹}(F_{q²})`. Needs `q` prime.
pub fn extension_experiment(n: usize, q: u32, j: SubsetJ, field: &PrimeField) -> Result<ExtensionReport> {
    if GfQ::new(q)?.degree() != 1 {
        return Err(Error::UnsupportedField(format!("the extension experiment needs a prime q, got {q}")));
    }
    let big = SlGroup::new(n, q * q)?;
    let weyl = big.weyl();
    let module = PermutationModule::new(&big, j.complement(weyl.rank()), field)?;
    let d = module.d_vector(j)?;
    let mut moved = Vec::new();
    for w in weyl.y_set(j) {
        let y = weyl.mul(weyl.longest_element(j), weyl.inverse(w));
        if y == ElemId::IDENTITY {
            continue;
        }
        let wd = module.act(big.weyl_rep(w), &d);
        let all = big.u_subgroup_elements(y);
        // the prime subfield of F_{q²} is {0, …, q-1}
        let small: Vec<&GroupElement> =
            all.iter().filter(|u| (0..n).all(|a| (0..n).all(|b| u.get(a, b) < q))).collect();
        let mut sum = module.zero();
        for u in &small {
            sum = module.add(&sum, &module.act(u, &wd));
        }
        let is_moved = all.iter().any(|g| module.act(g, &sum) != sum);
        moved.push((weyl.format_word(w), is_moved));
    }
    Ok(ExtensionReport { subset: j.to_string(), moved })
}

/// Composition factors of `k[G/P_K]` (or of an invariant subspace of it).
pub fn meataxe_length(
    module: &PermutationModule<'_, PrimeField>,
    sub: Option<&SubspaceBasis<PrimeField>>,
    seed: u64,
) -> Result<CompositionReport> {
    let gens = match sub {
        Some(s) => s.restrict(module.generators())?,
        None => module.generator_matrices(),
    };
    composition_factors(module.field(), &gens, seed, DEFAULT_BUDGET)
}

/// The least prime above `|G|`: a coefficient field in which `k[G]` is semisimple.
pub fn semisimple_characteristic(group: &SlGroup) -> u64 {
    next_prime(group.order())
}
