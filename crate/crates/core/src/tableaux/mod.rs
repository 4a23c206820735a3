//! Magic squares, tableaux (multisets of permutations), signed moves, and the
//! S_n × S_n action that permutes positions and relabels items.

mod birkhoff;
mod canonical;
mod moves;
mod square;
mod symmetry;
mod tableau;

pub use birkhoff::{birkhoff_decompose, perfect_matching};
pub use canonical::{
    brute_force_canonical_move, brute_force_canonical_square, canonical_form, canonical_move,
    canonical_square, orbit_size, square_orbit_size, stabilizer, CanonicalForm,
};
pub use moves::{apply_move, try_apply_move, Move, Sign};
pub use square::MagicSquare;
pub use symmetry::{apply_symmetry, Symmetry, SymmetryAction};
pub use tableau::{tableau_sum, Tableau};
