//! Green's structure of finite semigroups computed from orbits of actions.
//!
//! A semigroup `S` is given by generators inside a regular ambient semigroup
//! `U` (full transformations, partial permutations, bipartitions or a Rees
//! 0-matrix semigroup over a permutation group). Instead of listing the
//! elements of `S`, the engine enumerates the orbit of `S` on λ-values and
//! ρ-values, computes stabiliser permutation groups for each strongly
//! connected component, and describes every `R`-class by a representative
//! plus that data. Size, Green's classes, membership, factorisation,
//! idempotents, regularity and the `D`-class order all follow.
//!
//! Conventions: maps act on the right and products compose left to right,
//! `(i)(xy) = ((i)x)y`. Internal indices are zero-based; all text
//! input and output is one-based.

pub mod element;
pub mod engine;
pub mod error;
pub mod greens;
pub mod oracle;
pub mod orbit;
pub mod perm;
pub mod perm_group;
pub mod random;
pub mod text;
pub mod cli;

pub use element::{Element, LambdaValue, RhoValue};
pub use engine::{Green, Location, Mode, Semigroup};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use perm_group::PermGroup;
