//! Exact-arithmetic toolkit for matching fields of Grassmannians and the
//! polytopes attached to them.
//!
//! Everything here is computed over exact rationals: weight matrices and the
//! matching fields they induce, the Grassmannian poset with its order and
//! chain polytopes, lattice polytopes with LP-based membership and dilation
//! counting, tropical maps and the vertex-level certificates that exhibit the
//! diagonal and FFLV matching field polytopes as mutation equivalent, and
//! initial terms of Pluecker forms.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `matchfield-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combin;
pub mod linalg;
pub mod lp;
pub mod matching_field;
pub mod mutation;
pub mod numeric;
pub mod pluecker;
pub mod polytope;
pub mod poset;

pub use matching_field::{MatchingField, TripleSequence, WeightMatrix};
pub use polytope::{AffineMap, EhrhartPolynomial, LatticePolytope};
pub use poset::{AntiChain, Filter, GrassmannPoset};
