use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_degree, Result};
use crate::symgroup::enumerate_sn;
use crate::tableaux::{orbit_size, square_orbit_size, MagicSquare, Move, Symmetry, SymmetryAction};

use super::fiber::{enumerate_fiber, share_row_components};
use super::orbits::next_square_orbits;
use super::theory::degree_bound;

/// One connecting move on a representative fiber.
///
/// `fiber_count` is the number of squares in the orbit of the move's square,
/// which is how many moves of this kind the expanded basis holds. `orbit_size`
/// is the size of the move's own orbit under S_n × S_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveClass {
    pub degree: usize,
    pub fiber_count: u64,
    pub orbit_size: u64,
    #[serde(rename = "move")]
    pub representative: Move,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degree: usize,
    pub moves: u64,
    pub classes: usize,
    pub square_orbits: usize,
    pub fibers_searched: usize,
    pub norm_skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovBasis {
    pub n: usize,
    pub max_degree: usize,
    pub degrees: Vec<DegreeSummary>,
    pub classes: Vec<MoveClass>,
    /// Every move of the basis, sorted; absent when only classes were kept.
    pub moves: Option<Vec<Move>>,
}

impl MarkovBasis {
    pub fn move_count(&self) -> u64 {
        self.degrees.iter().map(|d| d.moves).sum()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, d: usize) -> Option<&DegreeSummary> {
        self.degrees.iter().find(|s| s.degree == d)
    }

    /// The stored moves, or the expansion of the classes.
    pub fn expanded_moves(&self) -> Vec<Move> {
        match &self.moves {
            Some(m) => m.clone(),
            None => expand_classes(self.n, &self.classes),
        }
    }

    /// Every image of every class representative under S_n × S_n.
    pub fn symmetric_closure(&self) -> Vec<Move> {
        let all = Symmetry::all(self.n).expect("valid degree");
        let set: HashSet<Move> = self
            .classes
            .par_iter()
            .flat_map_iter(|c| all.iter().map(move |g| c.representative.act(g).expect("same degree")))
            .collect();
        let mut out: Vec<Move> = set.into_iter().collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BasisOptions {
    pub max_degree: Option<usize>,
    /// Skip fibers whose squares are too large for two tableaux to avoid a
    /// nearly agreeing pair of rows.
    pub norm_pruning: bool,
    pub expand: bool,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions { max_degree: None, norm_pruning: true, expand: true }
    }
}

/// Above this value of ‖b‖², every two tableaux over `b` have rows agreeing in
/// at least `n - d + 2` positions, and a move of degree below `d` links them.
pub fn norm_threshold(n: usize, d: usize) -> u64 {
    ((n + 1).saturating_sub(d) * d * d) as u64
}

pub fn compute_markov_basis(n: usize, max_degree: Option<usize>) -> Result<MarkovBasis> {
    compute_markov_basis_with(n, BasisOptions { max_degree, ..BasisOptions::default() })
}

pub fn compute_markov_basis_with(n: usize, opts: BasisOptions) -> Result<MarkovBasis> {
    check_degree(n, 2, 6)?;
    let max_degree = opts.max_degree.unwrap_or(degree_bound(n)?);
    let sn = enumerate_sn(n)?;
    let mut reps = vec![crate::tableaux::canonical_square(&MagicSquare::permutation(&sn[0]))];
    let mut degrees = Vec::new();
    let mut classes = Vec::new();
    for d in 2..=max_degree {
        reps = next_square_orbits(&reps, &sn);
        let threshold = norm_threshold(n, d);
        let per_rep: Vec<(bool, Vec<Move>)> = reps
            .par_iter()
            .map(|b| {
                if opts.norm_pruning && b.norm_squared() > threshold {
                    return (false, Vec::new());
                }
                (true, star_moves(b))
            })
            .collect();
        let mut summary = DegreeSummary { degree: d, square_orbits: reps.len(), ..Default::default() };
        for (b, (searched, moves)) in reps.iter().zip(per_rep) {
            if !searched {
                summary.norm_skipped += 1;
                continue;
            }
            summary.fibers_searched += 1;
            if moves.is_empty() {
                continue;
            }
            let fiber_count = square_orbit_size(b);
            for m in moves {
                summary.moves += fiber_count;
                summary.classes += 1;
                classes.push(MoveClass { degree: d, fiber_count, orbit_size: orbit_size(&m), representative: m });
            }
        }
        degrees.push(summary);
    }
    let moves = opts.expand.then(|| expand_classes(n, &classes));
    Ok(MarkovBasis { n, max_degree, degrees, classes, moves })
}

/// Moves joining the components of the fiber over `b`, given that lower-degree
/// fibers are already connected: the smallest tableau of the first component
/// against the smallest tableau of every other component.
pub(crate) fn star_moves(b: &MagicSquare) -> Vec<Move> {
    let fiber = enumerate_fiber(b);
    let comps = share_row_components(&fiber);
    let hub = &fiber[comps[0][0]];
    comps[1..]
        .iter()
        .map(|c| Move::new(hub.clone(), fiber[c[0]].clone()).expect("distinct tableaux in one fiber"))
        .collect()
}

/// Carries each class representative to every square of its orbit along a
/// fixed transversal (the first group element, in enumeration order, reaching
/// each square).
pub fn expand_classes(n: usize, classes: &[MoveClass]) -> Vec<Move> {
    let all = Symmetry::all(n).expect("valid degree");
    let mut out: Vec<Move> = classes
        .par_iter()
        .flat_map_iter(|c| {
            let b = c.representative.square();
            let mut seen = HashSet::new();
            let mut moves = Vec::with_capacity(c.fiber_count as usize);
            for g in &all {
                if seen.insert(b.act(g).expect("same degree")) {
                    moves.push(c.representative.act(g).expect("same degree"));
                }
            }
            debug_assert_eq!(moves.len() as u64, c.fiber_count);
            moves
        })
        .collect();
    out.sort_unstable();
    out
}
