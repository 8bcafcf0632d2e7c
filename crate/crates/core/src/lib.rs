//! Burnside rings of finite `p`-groups and of the fusion systems `F_S(G)`
//! that finite groups induce on their Sylow subgroups.
//!
//! * [`permgroup`]: permutation groups, subgroup lattices, Sylow subgroups.
//! * [`burnside`]: `A(S)` in orbit coordinates, table of marks, the
//!   congruence map into the obstruction group.
//! * [`fusion`]: `F`-conjugacy classes and normalizer lifts.
//! * [`stablesets`]: `F`-stable sets, the irreducible stable sets `α_P`, and
//!   unique decomposition.

pub mod burnside;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod fusion;
pub mod permgroup;
pub mod ses;
pub mod stablesets;

pub use error::{Error, Result};
