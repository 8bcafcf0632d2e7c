//! Finite permutation groups: closure, subgroup lattices, conjugacy,
//! normalizers, transporters and Sylow subgroups.

mod group;
mod input;
mod perm;
mod subgroups;
mod sylow;

pub use group::{
    centralizer, generate_group, generate_group_with, minimal_generators, normalizer, transporter,
    Group, Limits, Subgroup,
};
pub use input::{parse_group_file, GroupSpec};
pub use perm::Permutation;
pub use subgroups::{
    class_table, class_table_with, enumerate_subgroups, enumerate_subgroups_with, SubgroupClass,
    SubgroupClassTable,
};
pub use sylow::{is_prime, p_part, sylow_subgroup};
