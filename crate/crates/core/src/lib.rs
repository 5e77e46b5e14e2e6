//! Computational toolkit for the principal series permutation module of
//! `SL_n` over finite fields in cross characteristic.
//!
//! The crate is organised bottom-up:
//!
//! * [`coxeter`] builds finite crystallographic Weyl groups from Cartan data
//!   and answers length, descent, Bruhat and parabolic questions.
//! * [`klpoly`] computes Kazhdan–Lusztig polynomials and the signed basis
//!   elements `C_w` of the group algebra.
//! * [`walgebra`] models the span of the translates `w·D_J` (`w ∈ Y_J`), the
//!   three-case `τ_i` operators on it and the descent reduction that drives
//!   any nonzero vector back to a multiple of `D_J`.
//! * [`exactlinalg`] provides exact scalar fields and the dense linear algebra
//!   kernel (echelon forms, subspace arithmetic, spin-up).
//! * [`chevalley`] realises `SL_n(F_q)` concretely: root elements, Weyl
//!   representatives and the Bruhat normal form of flags.
//! * [`permod`] assembles permutation modules `k[G/P_K]`, their submodule
//!   lattice and a Meataxe composition series.
//!
//! Data-parallel loops go through [`par`], which uses rayon when the
//! `parallel` feature is enabled and plain iterators otherwise.

#![allow(clippy::needless_range_loop, clippy::wrong_self_convention)]

pub mod chevalley;
pub mod coxeter;
pub mod error;
pub mod exactlinalg;
pub mod klpoly;
pub mod par;
pub mod permod;
pub mod walgebra;

pub use error::{Error, Result};
