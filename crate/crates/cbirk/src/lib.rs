//! Exact-arithmetic toolkit for c-Birkhoff polytopes of the symmetric
//! group: heaps of reduced words, c-singletons, the affine relations on the
//! span of their permutation matrices, the entry-selection projection, and
//! the unitriangular transfer onto heap order polytopes.

pub mod coxeter;
pub mod error;
pub mod heap;
pub mod matrix;
pub mod perm;
pub mod polytope;
pub mod projection;
pub mod relations;
pub mod sorting;
pub mod transfer;

pub use coxeter::CoxeterElement;
pub use error::{Error, Result};
pub use heap::{Heap, OrderIdeal};
pub use matrix::{Int, IntMatrix, Matrix, Rat};
pub use num_bigint::BigUint;
pub use perm::{Permutation, PermutationMatrix, Word};
pub use sorting::SingletonTable;
