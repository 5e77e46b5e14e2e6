//! Composition series over finite fields by Norton's irreducibility test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlinalg::poly::{charpoly, degree, eval_matrix, irreducible_factors};
use crate::exactlinalg::{spin, Field, Matrix, SubspaceBasis};

/// Random algebra elements tried per split attempt.
pub const DEFAULT_BUDGET: usize = 200;

/// How one module was settled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeataxeStep {
    pub dim: usize,
    /// Random elements drawn before the decision.
    pub attempts: usize,
    /// Degree of the characteristic-polynomial factor that decided the case.
    pub factor_degree: usize,
    /// `None` when the module was proved irreducible, otherwise the submodule dimension.
    pub split: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    /// Sorted ascending.
    pub factor_dims: Vec<usize>,
    pub length: usize,
    pub seed: u64,
    pub steps: Vec<MeataxeStep>,
}

enum Outcome<F: Field> {
    Irreducible,
    Split(SubspaceBasis<F>),
}

/// Composition factor dimensions of the module given by `gens` (acting on
/// row vectors). Deterministic for a fixed seed.
pub fn composition_factors<F: Field>(
    field: &F,
    gens: &[Matrix<F>],
    seed: u64,
    budget: usize,
) -> Result<CompositionReport> {
    if field.order().is_none() {
        return Err(Error::UnsupportedField(format!("the Meataxe needs a finite field, got {}", field.name())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::new();
    let dim = gens.first().map_or(0, Matrix::rows);
    let mut dims = Vec::new();
    let mut stack = vec![gens.to_vec()];
    while let Some(g) = stack.pop() {
        let d = g.first().map_or(dim, Matrix::rows);
        if d == 0 {
            continue;
        }
        if d == 1 || g.is_empty() {
            // no generators: every line is a submodule
            dims.extend(std::iter::repeat_n(1, if g.is_empty() { d } else { 1 }));
            continue;
        }
        let (outcome, step) = norton(field, &g, &mut rng, budget)?;
        steps.push(step);
        match outcome {
            Outcome::Irreducible => dims.push(d),
            Outcome::Split(sub) => {
                let quotient = quotient_action(&sub, &g);
                let restricted = sub.restrict(&g)?;
                stack.push(quotient);
                stack.push(restricted);
            }
        }
    }
    dims.sort_unstable();
    Ok(CompositionReport { length: dims.len(), factor_dims: dims, seed, steps })
}

/// Action on `V / S`, with the standard basis vectors at the non-pivot
/// columns of `S` as the quotient basis.
pub fn quotient_action<F: Field>(sub: &SubspaceBasis<F>, gens: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let keep = sub.non_pivots();
    let f = sub.field();
    gens.iter()
        .map(|m| {
            let rows = keep
                .iter()
                .map(|&j| {
                    let img = sub.reduce(m.row(j));
                    keep.iter().map(|&c| img[c].clone()).collect()
                })
                .collect();
            Matrix::from_rows(f, keep.len(), rows).expect("rows have equal length")
        })
        .collect()
}

fn random_element<F: Field, R: Rng + ?Sized>(field: &F, gens: &[Matrix<F>], rng: &mut R) -> Matrix<F> {
    let d = gens[0].rows();
    let mut acc = Matrix::zeros(field, d, d);
    for _ in 0..rng.random_range(2..=4) {
        let mut prod = gens[rng.random_range(0..gens.len())].clone();
        for _ in 1..rng.random_range(1..=6) {
            prod = prod.mul(&gens[rng.random_range(0..gens.len())]).expect("square matrices");
        }
        let c = field.random_nonzero(rng);
        acc = acc.add(&prod.scale(&c)).expect("square matrices");
    }
    acc
}

fn norton<F: Field, R: Rng + ?Sized>(
    field: &F,
    gens: &[Matrix<F>],
    rng: &mut R,
    budget: usize,
) -> Result<(Outcome<F>, MeataxeStep)> {
    let d = gens[0].rows();
    let transposed: Vec<Matrix<F>> = gens.iter().map(Matrix::transpose).collect();
    for attempt in 1..=budget {
        let a = random_element(field, gens, rng);
        let cp = charpoly(&a);
        for factor in irreducible_factors(field, &cp, rng) {
            let deg = degree(&factor).unwrap_or(0);
            let n = eval_matrix(&factor, &a);
            let kernel = n.left_nullspace();
            let Some(v) = kernel.first() else { continue };
            let step = |split| MeataxeStep { dim: d, attempts: attempt, factor_degree: deg, split };
            let s = spin(field, d, std::slice::from_ref(v), gens)?;
            if s.dim() < d {
                let sd = s.dim();
                return Ok((Outcome::Split(s), step(Some(sd))));
            }
            if kernel.len() != deg {
                continue;
            }
            let w = n.right_nullspace().swap_remove(0);
            let dual = spin(field, d, &[w], &transposed)?;
            if dual.dim() == d {
                return Ok((Outcome::Irreducible, step(None)));
            }
            // the annihilator of an invariant subspace of the dual is invariant
            let ann = Matrix::from_rows(field, d, dual.rows().to_vec())?.right_nullspace();
            let sub = SubspaceBasis::from_vectors(field, d, &ann)?;
            let sd = sub.dim();
            return Ok((Outcome::Split(sub), step(Some(sd))));
        }
    }
    Err(Error::BudgetExceeded { attempts: budget, dim: d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::{Permutation, PrimeField};

    fn perm_gens(f: &PrimeField, perms: &[Vec<u32>]) -> Vec<Matrix<PrimeField>> {
        perms.iter().map(|p| Permutation::new(p.clone()).unwrap().to_matrix(f)).collect()
    }

    #[test]
    fn one_dimensional() {
        let f = PrimeField::new(5).unwrap();
        let g = vec![Matrix::identity(&f, 1)];
        let r = composition_factors(&f, &g, 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1]);
    }

    #[test]
    fn symmetric_group_on_three_points() {
        // S3 acting on 3 points: 1 + 2 when 3 is invertible, 1 + 1 + 1 in characteristic 3
        let perms = [vec![1, 0, 2], vec![1, 2, 0]];
        let f5 = PrimeField::new(5).unwrap();
        let r = composition_factors(&f5, &perm_gens(&f5, &perms), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1, 2]);
        let f3 = PrimeField::new(3).unwrap();
        let r = composition_factors(&f3, &perm_gens(&f3, &perms), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1, 1, 1]);
        let f2 = PrimeField::new(2).unwrap();
        let r = composition_factors(&f2, &perm_gens(&f2, &perms), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1, 2]);
    }

    #[test]
    fn regular_cyclic_group_splits_into_lines() {
        // C4 over GF(5) is split semisimple: four characters
        let f = PrimeField::new(5).unwrap();
        let r = composition_factors(&f, &perm_gens(&f, &[vec![1, 2, 3, 0]]), 9, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1, 1, 1, 1]);
        // C3 over GF(2): x^3 - 1 = (x - 1)(x^2 + x + 1)
        let f = PrimeField::new(2).unwrap();
        let r = composition_factors(&f, &perm_gens(&f, &[vec![1, 2, 0]]), 9, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.factor_dims, [1, 2]);
    }

    #[test]
    fn deterministic_under_seed() {
        let f = PrimeField::new(7).unwrap();
        let g = perm_gens(&f, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]]);
        let a = composition_factors(&f, &g, 42, DEFAULT_BUDGET).unwrap();
        let b = composition_factors(&f, &g, 42, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.factor_dims, [1, 4]);
    }

    #[test]
    fn rationals_rejected() {
        let q = crate::exactlinalg::Rationals;
        let g = vec![Matrix::identity(&q, 2)];
        assert!(matches!(composition_factors(&q, &g, 0, 10), Err(Error::UnsupportedField(_))));
    }
}
