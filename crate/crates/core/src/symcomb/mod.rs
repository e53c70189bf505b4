//! Partitions, permutations, tableaux, conjugacy classes, and the counting
//! formulas (hook lengths, two-/three-row closed forms, skew counts).

mod partition;
mod permutation;
mod tableau;
mod skew;

pub use partition::{Partition, CycleType, partitions_of, dim_two_row, dim_three_row};
pub use permutation::{Permutation, ConjClass, conjugacy_classes, power_cycle_type};
pub use tableau::{Tableau, standard_tableaux};
pub use skew::SkewShape;
