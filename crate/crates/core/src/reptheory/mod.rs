//! Characters of S_n, Fourier transforms at the permutation representation,
//! isotypic projections and the first/second-order summaries built on them.

mod characters;
mod group;
mod projection;
mod rank_function;
mod summary;

pub use characters::{character_table, CharacterTable};
pub use group::SymmetricGroup;
pub use projection::{isotypic_projection, projection_lengths, squared_length, GroupVector};
pub use rank_function::{fourier_transform, same_transform, RankFunction};
pub use summary::{
    first_order_summary, second_order_summary, unordered_pairs, FirstOrderSummary,
    SecondOrderSummary,
};
