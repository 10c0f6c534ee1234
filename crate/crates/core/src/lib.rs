//! Finite groups, modular representations, 2-cocycles, projective
//! representations and weight-conjecture checks on explicit small groups.

pub mod arith;
pub mod auts;
pub mod awc;
pub mod bnpair;
pub mod classes;
pub mod cocycle;
pub mod error;
pub mod field;
pub mod group;
pub mod io;
pub mod library;
pub mod matrix;
pub mod meataxe;
pub mod modrep;
pub mod ordchar;
pub mod perm;
pub mod poly;
pub mod projrep;
pub mod quotient;
pub mod rep;
pub mod report;
pub mod schreier;
pub mod subgroup;
pub mod zmod;

pub use error::{Error, Result};
pub use group::{Elt, PermutationGroup};
pub use perm::Perm;
pub use subgroup::Subgroup;
