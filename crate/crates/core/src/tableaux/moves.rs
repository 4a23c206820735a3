use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reptheory::RankFunction;
use crate::symgroup::Permutation;

use super::{MagicSquare, Symmetry, Tableau};

/// A difference of two tableaux with equal sums.
///
/// Stored reduced (no permutation on both sides) and oriented so that
/// `plus < minus`; a move and its negation are the same move.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMove")]
pub struct Move {
    plus: Tableau,
    minus: Tableau,
}

#[derive(Deserialize)]
struct RawMove {
    plus: Tableau,
    minus: Tableau,
}

impl TryFrom<RawMove> for Move {
    type Error = Error;
    fn try_from(raw: RawMove) -> Result<Self> {
        Move::new(raw.plus, raw.minus)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    /// add the plus side, remove the minus side
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Move {
    pub fn new(plus: Tableau, minus: Tableau) -> Result<Self> {
        if plus.n() != minus.n() {
            return Err(Error::MismatchedDegree { left: plus.n(), right: minus.n() });
        }
        if plus.degree() != minus.degree() {
            return Err(Error::InvalidMove(format!(
                "sides have {} and {} rows",
                plus.degree(),
                minus.degree()
            )));
        }
        if plus.sum_unchecked() != minus.sum_unchecked() {
            return Err(Error::InvalidMove("sides have different sums".into()));
        }
        Self::reduced(plus, minus).ok_or_else(|| Error::InvalidMove("both sides are equal".into()))
    }

    pub fn parse(plus: &[&str], minus: &[&str]) -> Result<Self> {
        Self::new(Tableau::parse_rows(plus)?, Tableau::parse_rows(minus)?)
    }

    /// Drops common rows and orients; `None` for the zero move. Sums are not checked.
    pub(crate) fn reduced(plus: Tableau, minus: Tableau) -> Option<Self> {
        let n = plus.n();
        let (a, b) = (plus.rows(), minus.rows());
        let (mut i, mut j) = (0, 0);
        let (mut p, mut m) = (Vec::with_capacity(a.len()), Vec::with_capacity(b.len()));
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                p.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                m.push(b[j]);
                j += 1;
            } else {
                i += 1;
                j += 1;
            }
        }
        if p.is_empty() {
            return None;
        }
        let (plus, minus) = (Tableau::from_sorted_unchecked(n, p), Tableau::from_sorted_unchecked(n, m));
        Some(Self::oriented(plus, minus))
    }

    /// Orients an already reduced pair.
    pub(crate) fn oriented(plus: Tableau, minus: Tableau) -> Self {
        if plus <= minus {
            Move { plus, minus }
        } else {
            Move { plus: minus, minus: plus }
        }
    }

    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn degree(&self) -> usize {
        self.plus.degree()
    }

    pub fn plus(&self) -> &Tableau {
        &self.plus
    }

    pub fn minus(&self) -> &Tableau {
        &self.minus
    }

    /// The common magic square of both sides.
    pub fn square(&self) -> MagicSquare {
        self.plus.sum_unchecked()
    }

    /// Signed count changes, one entry per distinct permutation.
    pub fn delta(&self) -> Vec<(Permutation, i64)> {
        let mut out: Vec<(Permutation, i64)> = Vec::new();
        for (rows, s) in [(self.plus.rows(), 1), (self.minus.rows(), -1)] {
            for r in rows {
                match out.last_mut() {
                    Some((q, c)) if q == r => *c += s,
                    _ => out.push((*r, s)),
                }
            }
        }
        out
    }

    /// `(added, removed)` sides for a given sign.
    pub fn sides(&self, sign: Sign) -> (&Tableau, &Tableau) {
        match sign {
            Sign::Plus => (&self.plus, &self.minus),
            Sign::Minus => (&self.minus, &self.plus),
        }
    }

    pub(crate) fn act_unchecked(&self, g: &Symmetry) -> Move {
        Self::oriented(self.plus.act_unchecked(g), self.minus.act_unchecked(g))
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} - {:?}", self.plus, self.minus)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// In-place application; leaves `f` untouched and returns `false` if a count would go negative.
pub fn try_apply_move(f: &mut RankFunction, m: &Move, sign: Sign) -> bool {
    let (add, remove) = m.sides(sign);
    let rows = remove.rows();
    let mut k = 0;
    while k < rows.len() {
        let mut run = 1;
        while k + run < rows.len() && rows[k + run] == rows[k] {
            run += 1;
        }
        if f.get(&rows[k]) < run as u64 {
            return false;
        }
        k += run;
    }
    let counts = f.counts_mut();
    for r in rows {
        counts[r.lex_rank()] -= 1;
    }
    for r in add.rows() {
        counts[r.lex_rank()] += 1;
    }
    true
}

/// `f ± m`, or `None` when the result would have a negative count.
pub fn apply_move(f: &RankFunction, m: &Move, sign: Sign) -> Option<RankFunction> {
    let mut g = f.clone();
    try_apply_move(&mut g, m, sign).then_some(g)
}
