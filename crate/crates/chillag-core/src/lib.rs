//! Exact engine for tables of semisimple finite-dimensional commutative
//! algebras: finite permutation groups and their class algebras, cyclotomic
//! field arithmetic, ordinary character tables, pi-partial characters and
//! projective indecomposables, together with table-sum bound certificates
//! and Galois column tests.
//!
//! The crate is `no_std` (alloc required); all IO and file formats live in
//! the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod chartab;
pub mod cyclo;
pub mod group;
pub mod numeric;
pub mod perm;
pub mod pipart;
pub mod rat;
pub mod sfca;
