//! Exact computation of finite-group invariants — cyclic subgroup counts,
//! full subgroup lattices, order sequences, and the classifier chain
//! nilpotent / supersolvable / solvable — plus a verification harness that
//! checks a catalog of subgroup-counting theorems, their sharpness
//! witnesses, and one open conjecture over reproducible group corpora.
//!
//! Everything is exact: integer tables, bitsets, and rationals. No floats,
//! no external group databases.

pub mod constructors;
pub mod group;
pub mod invariants;
pub mod numtheory;
pub mod verifier;

pub use group::{Caps, Group};
