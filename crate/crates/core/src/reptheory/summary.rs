use serde::Serialize;

use super::{fourier_transform, isotypic_projection, RankFunction};
use crate::error::{Error, Result};
use crate::scalar::{round_rational, truncate_rational, Rational, Scalar};
use crate::symgroup::Partition;

/// Percentages of voters per (string position, digit) cell.
///
/// Row `a`, column `b` holds the share of rankings whose `a`-th digit is `b`;
/// this is the transpose of the Fourier matrix and the layout of the
/// reported first-order table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstOrderSummary {
    pub n: usize,
    pub total: u64,
    #[serde(skip)]
    pub exact: Vec<Vec<Rational>>,
    /// Percentages truncated toward zero at one decimal.
    pub percent: Vec<Vec<f64>>,
}

pub fn first_order_summary(f: &RankFunction) -> Result<FirstOrderSummary> {
    let total = f.total();
    if total == 0 {
        return Err(Error::EmptyData);
    }
    let n = f.n();
    let m = fourier_transform(f);
    let exact: Vec<Vec<Rational>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| Rational::new(100 * m.get(b, a) as i128, total as i128))
                .collect()
        })
        .collect();
    let percent = exact
        .iter()
        .map(|row| row.iter().map(|x| truncate_rational(x, 1)).collect())
        .collect();
    Ok(FirstOrderSummary {
        n,
        total,
        exact,
        percent,
    })
}

/// The unordered pairs `{i, j}` (0-based, `i < j`) in lexicographic order.
pub fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Pair-incidence view of the projection onto `S^(n-2,2)`.
///
/// Row `{a, b}` (string positions) and column `{k, l}` (digits) hold
/// `Σ_π q(π) [{π(a), π(b)} = {k, l}]` where `q` is the exact projection.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecondOrderSummary {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    #[serde(skip)]
    pub exact: Vec<Vec<Rational>>,
    /// Entries rounded half away from zero.
    pub rounded: Vec<Vec<i64>>,
}

impl SecondOrderSummary {
    fn pair_index(&self, pair: (usize, usize)) -> Option<usize> {
        let key = (pair.0.min(pair.1), pair.0.max(pair.1));
        self.pairs.iter().position(|&p| p == key)
    }

    /// Exact entry for 1-based pairs as printed in reports.
    pub fn entry(&self, row: (usize, usize), col: (usize, usize)) -> Option<Rational> {
        let r = self.pair_index((row.0.checked_sub(1)?, row.1.checked_sub(1)?))?;
        let c = self.pair_index((col.0.checked_sub(1)?, col.1.checked_sub(1)?))?;
        Some(self.exact[r][c])
    }

    /// Largest rounded entry and its 1-based (row, column) pairs.
    pub fn max_entry(&self) -> (i64, (usize, usize), (usize, usize)) {
        let mut best = (i64::MIN, (0, 0), (0, 0));
        for (r, row) in self.rounded.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v > best.0 {
                    let (a, b) = self.pairs[r];
                    let (k, l) = self.pairs[c];
                    best = (v, (a + 1, b + 1), (k + 1, l + 1));
                }
            }
        }
        best
    }
}

pub fn second_order_summary(f: &RankFunction) -> Result<SecondOrderSummary> {
    let n = f.n();
    if n < 4 {
        return Err(Error::DegreeOutOfRange { n, min: 4, max: crate::MAX_DEGREE });
    }
    let lambda = Partition::new(vec![n - 2, 2])?;
    let q = isotypic_projection::<Rational>(f, &lambda)?;
    let pairs = unordered_pairs(n);
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
    let group = super::SymmetricGroup::get(n)?;
    let mut exact = vec![vec![Rational::from_int(0); pairs.len()]; pairs.len()];
    for (g, value) in group.elements().iter().zip(q.values()) {
        for (r, &(a, b)) in pairs.iter().enumerate() {
            let c = index(g.image(a), g.image(b));
            exact[r][c] += value;
        }
    }
    let rounded = exact
        .iter()
        .map(|row| row.iter().map(|x| round_rational(x) as i64).collect())
        .collect();
    Ok(SecondOrderSummary {
        n,
        pairs,
        exact,
        rounded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::Permutation;

    #[test]
    fn anti_diagonal_voter() {
        let f = RankFunction::point_mass("54321".parse().unwrap());
        let s = first_order_summary(&f).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let expect = if a + b == 4 { 100.0 } else { 0.0 };
                assert_eq!(s.percent[a][b], expect);
            }
        }
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(first_order_summary(&RankFunction::zeros(3).unwrap()), Err(Error::EmptyData));
    }

    #[test]
    fn rows_and_columns_sum_to_100() {
        let f = RankFunction::from_pairs(4, [("2143".parse().unwrap(), 3), ("1342".parse().unwrap(), 4)]).unwrap();
        let s = first_order_summary(&f).unwrap();
        for k in 0..4 {
            let row: Rational = s.exact[k].iter().sum();
            let col: Rational = s.exact.iter().map(|r| r[k]).sum();
            assert_eq!(row, Rational::from_int(100));
            assert_eq!(col, Rational::from_int(100));
        }
    }

    #[test]
    fn second_order_of_uniform_is_zero() {
        let s = second_order_summary(&RankFunction::uniform(4).unwrap()).unwrap();
        assert!(s.rounded.iter().flatten().all(|&v| v == 0));
        assert!(second_order_summary(&RankFunction::uniform(3).unwrap()).is_err());
    }

    #[test]
    fn second_order_lines_sum_to_zero() {
        let f = RankFunction::point_mass(Permutation::identity(5));
        let s = second_order_summary(&f).unwrap();
        for k in 0..s.pairs.len() {
            let row: Rational = s.exact[k].iter().sum();
            let col: Rational = s.exact.iter().map(|r| r[k]).sum();
            assert_eq!(row, Rational::from_int(0));
            assert_eq!(col, Rational::from_int(0));
        }
    }
}
