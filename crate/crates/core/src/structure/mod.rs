//! Through-block decomposition, the order on projective partitions, mixing and labels.

mod decomposition;
mod mixing;
mod permutation;
mod symmetry;
mod words;

pub use decomposition::{
    dominates, is_building, projective_from, strictly_dominates, through_block_decomposition, Decomposition,
};
pub use mixing::{
    boxvert, boxvert_mixing, enumerate_mixing, mix, square, square_mixing, Link, MixingPartition,
};
pub use permutation::Permutation;
pub use symmetry::{equivalence_classes, equivalence_witness, equivalent, p_sigma, sym_group, transport};
pub use words::{word_h, word_u, AltWord, Z2Word};
