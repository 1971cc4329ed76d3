//! Isomorph-free generation of small graphs, canonical forms, brute-force
//! oracles and exhaustive verification suites.

mod canon;
mod generate;
pub mod oracle;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonicalize, Canonical, CanonicalForm};
pub use generate::{enumerate_canonical, enumerate_graphs, EnumFilter, MAX_ENUM_VERTICES};
