//! Exact q-characters of the fundamental representations of quantum loop
//! algebras of classical type.
//!
//! The library works entirely in the loop-weight lattice with spectral
//! parameters confined to integer powers of `q`, so every computation is
//! exact integer arithmetic:
//!
//! - [`root_system`]: Cartan data for types A-D, Weyl orbits with canonical
//!   minimal-length words, stabilizer orders.
//! - [`classical`]: Weyl dimension formula and Freudenthal multiplicities,
//!   the independent oracles everything is checked against.
//! - [`lweight`]: the free abelian group on the generators `w[i;k]`.
//! - [`braid`]: the braid-group action on loop weights, the descent words
//!   `w_{r,j}`, and their closed-form evaluations.
//! - [`partitions`]: the constrained partition families indexing dominant
//!   loop weights, and the type-D flip combinatorics.
//! - [`qcharacter`]: partition monomials, spin corrections, dominant
//!   loop-weight tables, and full character assembly.
//! - [`verify`]: the executable identity suite.
//! - [`output`]: deterministic JSON/text documents for the CLI.
//!
//! ```
//! use qchar::root_system::{Kind, RootSystem};
//! use qchar::qcharacter::full_character;
//!
//! let rs = RootSystem::new(Kind::C, 2).unwrap();
//! let ch = full_character(&rs, 2, 0).unwrap();
//! assert_eq!(ch.mass(), 5);
//! ```

pub mod braid;
pub mod classical;
pub mod error;
pub mod lweight;
pub mod output;
pub mod partitions;
pub mod qcharacter;
pub mod root_system;
pub mod verify;

pub use error::{Error, Result};
pub use lweight::LWeight;
pub use qcharacter::LCharacter;
pub use root_system::{Kind, RootSystem, Weight};
