//! Finite posets and lattices with exact symmetry-breaking machinery:
//! automorphism groups, distinguishing and distinguishing-chromatic numbers,
//! Birkhoff's representation of distributive lattices, and the constructive
//! colorings built on top of it.
//!
//! The crate is `no_std` (with `alloc`) and fully deterministic: every
//! operation is a pure function of its inputs, and all results are
//! independent of iteration order or hashing.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod colorings;
pub mod lattice;
pub mod perm;
pub mod poset;
pub mod symmetry;

pub use bitset::Bitset;
pub use perm::Permutation;
pub use poset::{LinearExtension, Poset, PosetError, RankData};
