use crate::error::{Error, Result};
use crate::symgroup::{enumerate_sn, Permutation};

use super::{MagicSquare, Move, Tableau};

/// An element of S_n × S_n: `positions` permutes the columns of a tableau
/// (the positions of a ranking), `labels` renames the items.
///
/// A row π becomes `labels ∘ π ∘ positions⁻¹`, so the item that sat in position
/// `j` now sits in position `positions(j)` under the name `labels(π(j))`.
/// On magic squares this moves entry `(i, j)` to `(labels(i), positions(j))`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Symmetry {
    pub positions: Permutation,
    pub labels: Permutation,
}

impl Symmetry {
    pub fn new(positions: Permutation, labels: Permutation) -> Result<Self> {
        if positions.degree() != labels.degree() {
            return Err(Error::MismatchedDegree { left: positions.degree(), right: labels.degree() });
        }
        Ok(Symmetry { positions, labels })
    }

    pub fn identity(n: usize) -> Self {
        Symmetry { positions: Permutation::identity(n), labels: Permutation::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.positions.degree()
    }

    /// `self ∘ other`: act by `other` first.
    pub fn compose(&self, other: &Symmetry) -> Result<Self> {
        Ok(Symmetry {
            positions: self.positions.compose(&other.positions)?,
            labels: self.labels.compose(&other.labels)?,
        })
    }

    pub fn inverse(&self) -> Self {
        Symmetry { positions: self.positions.inverse(), labels: self.labels.inverse() }
    }

    /// All (n!)² elements, positions varying slowest.
    pub fn all(n: usize) -> Result<Vec<Symmetry>> {
        let sn = enumerate_sn(n)?;
        Ok(sn
            .iter()
            .flat_map(|&positions| sn.iter().map(move |&labels| Symmetry { positions, labels }))
            .collect())
    }

    #[inline]
    pub(crate) fn act_on_permutation(&self, p: &Permutation) -> Permutation {
        let n = p.degree();
        let mut out = [0u8; 8];
        for j in 0..n {
            out[self.positions.image(j)] = self.labels.image(p.image(j)) as u8;
        }
        Permutation::from_images_unchecked(&out[..n])
    }

    pub(crate) fn act_on_square(&self, b: &MagicSquare) -> MagicSquare {
        let n = b.n();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            let ni = self.labels.image(i);
            for j in 0..n {
                entries[ni * n + self.positions.image(j)] = b.get(i, j);
            }
        }
        MagicSquare::from_parts_unchecked(n, entries, b.line_sum())
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::MismatchedDegree { left: self.n(), right: n });
        }
        Ok(())
    }
}

/// Objects on which S_n × S_n acts.
pub trait SymmetryAction: Sized {
    fn act(&self, g: &Symmetry) -> Result<Self>;
}

impl SymmetryAction for Permutation {
    fn act(&self, g: &Symmetry) -> Result<Self> {
        g.check(self.degree())?;
        Ok(g.act_on_permutation(self))
    }
}

impl SymmetryAction for MagicSquare {
    fn act(&self, g: &Symmetry) -> Result<Self> {
        g.check(self.n())?;
        Ok(g.act_on_square(self))
    }
}

impl SymmetryAction for Tableau {
    fn act(&self, g: &Symmetry) -> Result<Self> {
        g.check(self.n())?;
        Ok(self.act_unchecked(g))
    }
}

impl SymmetryAction for Move {
    fn act(&self, g: &Symmetry) -> Result<Self> {
        g.check(self.n())?;
        Ok(self.act_unchecked(g))
    }
}

pub fn apply_symmetry<T: SymmetryAction>(g: &Symmetry, x: &T) -> Result<T> {
    x.act(g)
}
