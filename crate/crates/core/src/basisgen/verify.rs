use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::tableaux::{MagicSquare, Move, Symmetry, SymmetryAction};

use super::basis::MarkovBasis;
use super::fiber::{enumerate_fiber, MoveIndex};
use super::orbits::square_orbits_up_to;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub up_to_degree: usize,
    pub connected: bool,
    pub squares_checked: usize,
    pub moves_used: usize,
    /// A square whose fiber falls apart, if any.
    pub certificate: Option<MagicSquare>,
}

/// Checks that the symmetric closure of the basis connects the fiber over one
/// representative of every square orbit with line sum up to `up_to_degree`.
/// The closure is invariant under S_n × S_n, so that covers every square.
pub fn verify_basis(basis: &MarkovBasis, up_to_degree: usize) -> Result<VerifyReport> {
    let moves = basis.symmetric_closure();
    let levels = square_orbits_up_to(basis.n, up_to_degree.max(1))?;
    let squares: Vec<MagicSquare> = levels.into_iter().take(up_to_degree).flatten().collect();
    Ok(check_squares(&moves, &squares, up_to_degree))
}

/// Checks the basis's own (unsymmetrized) move list on every square, not just
/// orbit representatives. Exhaustive, so only practical for small cases.
pub fn verify_moves_exhaustive(n: usize, moves: &[Move], up_to_degree: usize) -> Result<VerifyReport> {
    let all = Symmetry::all(n)?;
    let levels = square_orbits_up_to(n, up_to_degree.max(1))?;
    let squares: Vec<MagicSquare> = levels
        .into_iter()
        .take(up_to_degree)
        .flatten()
        .flat_map(|b| {
            let mut orbit: Vec<MagicSquare> = all.iter().map(|g| b.act(g).expect("same degree")).collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit
        })
        .collect();
    Ok(check_squares(moves, &squares, up_to_degree))
}

fn check_squares(moves: &[Move], squares: &[MagicSquare], up_to_degree: usize) -> VerifyReport {
    let index = MoveIndex::new(moves);
    let failing = squares
        .par_iter()
        .filter(|b| index.components(&enumerate_fiber(b)).len() > 1)
        .min();
    VerifyReport {
        up_to_degree,
        connected: failing.is_none(),
        squares_checked: squares.len(),
        moves_used: moves.len(),
        certificate: failing.cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basisgen::compute_markov_basis;

    #[test]
    fn s3_needs_its_move() {
        let basis = compute_markov_basis(3, None).unwrap();
        assert_eq!(basis.move_count(), 1);
        assert!(verify_basis(&basis, 3).unwrap().connected);

        let empty = MarkovBasis { classes: vec![], moves: Some(vec![]), ..basis };
        let report = verify_basis(&empty, 3).unwrap();
        assert!(!report.connected);
        assert_eq!(report.certificate, Some(MagicSquare::all_ones(3)));
    }

    #[test]
    fn empty_basis_in_degree_one() {
        let empty = MarkovBasis { n: 4, max_degree: 1, degrees: vec![], classes: vec![], moves: Some(vec![]) };
        let report = verify_basis(&empty, 1).unwrap();
        assert!(report.connected);
        assert_eq!(report.squares_checked, 1);
    }
}
