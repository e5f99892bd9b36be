//! Exact invariants of finite commutative unitary rings: the Erdős-Burgess
//! constant of the multiplicative semigroup, the Davenport constant of the
//! unit group, maximal ideals with their indices, and an explicit long
//! idempotent-product-free sequence built from the ideal structure.

pub mod cli;
pub mod davenport;
pub mod eb;
pub mod elements;
pub mod error;
pub mod group;
pub mod ideal;
pub mod ring;
pub mod search;
pub mod sequence;

pub use elements::ElementSet;
pub use error::{Error, Result};
pub use ring::FiniteRing;
