//! Partitions, Young diagrams, colored diagrams, fillings and their
//! statistics: everything that lives on boxes.

mod colored;
mod filling;
mod partition;
mod superfill;
mod tableau;

pub use colored::{color_sum, merge_fillings, split_filling, ColoredDiagram};
pub use filling::{
    enumerate_fillings, ides, ides_of_word, standard_fillings, Filling, FillingStats, ShapeTables,
};
pub(crate) use filling::next_permutation as filling_next_permutation;
pub use partition::{partitions_of, partitions_up_to, BoxPos, Partition};
pub use superfill::{
    enumerate_superfillings, super_stats, SuperFilling, SuperLetter, SuperOrder, SuperStats,
};
pub use tableau::{kostka_number, kostka_table, ssyt, standard_tableaux, KostkaTable};
