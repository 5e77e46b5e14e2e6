//! Exact scalar fields and the dense linear algebra kernel.
//!
//! Vectors are plain `Vec<F::Elem>` in row convention; a [`Matrix`] acts on
//! row vectors from the right. Everything here is value-semantic.

mod field;
mod gfq;
mod matrix;
pub mod poly;
mod subspace;

pub use field::{Field, PrimeField, Rationals};
pub use gfq::GfQ;
pub use matrix::{rref, Matrix};
pub use subspace::{spin, LinearOperator, Permutation, SubspaceBasis};

/// Returns true if `n` is prime (trial division; inputs here are small).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}
