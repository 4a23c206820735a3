use rayon::prelude::*;

use super::{RankFunction, SymmetricGroup};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symgroup::{Partition, Permutation};

/// A function on S_n with values in `T`, indexed like [`RankFunction`].
#[derive(Debug, Clone, PartialEq)]
pub struct GroupVector<T> {
    n: usize,
    values: Vec<T>,
}

impl<T: Scalar> GroupVector<T> {
    pub fn zeros(n: usize) -> Result<Self> {
        let order = SymmetricGroup::get(n)?.order();
        Ok(GroupVector {
            n,
            values: vec![T::zero(); order],
        })
    }

    pub fn from_rank_function(f: &RankFunction) -> Self {
        GroupVector {
            n: f.n(),
            values: f.counts().iter().map(|&c| T::from_int(c as i128)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: &Permutation) -> &T {
        &self.values[p.lex_rank()]
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn add_assign(&mut self, other: &GroupVector<T>) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedDegree {
                left: self.n,
                right: other.n,
            });
        }
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a = a.clone() + b.clone();
        }
        Ok(())
    }

    /// `g ↦ v(s⁻¹ g)`, the left-regular action of `s`.
    pub fn left_translate(&self, s: &Permutation) -> Self {
        let s_inv = s.inverse();
        let group = SymmetricGroup::get(self.n).expect("degree in range");
        let values = group
            .elements()
            .iter()
            .map(|g| self.values[s_inv.compose_unchecked(g).lex_rank()].clone())
            .collect();
        GroupVector { n: self.n, values }
    }
}

/// `‖v‖² / n!`, the normalization used for reported squared lengths.
pub fn squared_length<T: Scalar>(v: &GroupVector<T>) -> T {
    let order = v.values.len() as i128;
    let sum = v
        .values
        .iter()
        .fold(T::zero(), |acc, x| acc + x.clone() * x.clone());
    sum / T::from_int(order)
}

/// Component of `f` in the isotypic subspace of `S^λ`:
/// `f_λ(g) = (d_λ / n!) Σ_h χ_λ(h) f(g h)`.
pub fn isotypic_projection<T: Scalar>(f: &RankFunction, lambda: &Partition) -> Result<GroupVector<T>> {
    let group = SymmetricGroup::get(f.n())?;
    let chars = group.characters();
    let li = chars.index_of(lambda).ok_or_else(|| Error::PartitionMismatch {
        partition: lambda.to_string(),
        n: f.n(),
    })?;
    let order = group.order();
    let chi: Vec<i128> = (0..order)
        .map(|h| chars.values()[li][group.class_of(h)] as i128)
        .collect();
    let d = chars.dimension(li) as i128;
    let counts = f.counts();
    let values = (0..order)
        .into_par_iter()
        .map(|g| {
            let s: i128 = (0..order)
                .map(|h| chi[h] * counts[group.product(g, h)] as i128)
                .sum();
            T::from_ratio(d * s, order as i128)
        })
        .collect();
    Ok(GroupVector { n: f.n(), values })
}

/// Squared length (divided by n!) of each isotypic component, in partition order.
///
/// Uses `‖f_λ‖² = ⟨f, f_λ⟩` and groups the double sum by conjugacy class, so each
/// length is `d_λ Σ_μ χ_λ(μ) A(μ) / (n!)²` with `A(μ) = Σ_{h∈μ} Σ_g f(g) f(gh)`.
pub fn projection_lengths<T: Scalar>(f: &RankFunction) -> Result<Vec<(Partition, T)>> {
    let group = SymmetricGroup::get(f.n())?;
    let chars = group.characters();
    let order = group.order();
    let counts = f.counts();
    let support: Vec<usize> = (0..order).filter(|&g| counts[g] > 0).collect();
    let mut autocorr = vec![0i128; chars.partitions().len()];
    for h in 0..order {
        let s: i128 = support
            .iter()
            .map(|&g| counts[g] as i128 * counts[group.product(g, h)] as i128)
            .sum();
        autocorr[group.class_of(h)] += s;
    }
    let denom = (order as i128) * (order as i128);
    Ok(chars
        .partitions()
        .iter()
        .enumerate()
        .map(|(li, lam)| {
            let num: i128 = chars.values()[li]
                .iter()
                .zip(&autocorr)
                .map(|(&chi, &a)| chi as i128 * a)
                .sum();
            (lam.clone(), T::from_ratio(chars.dimension(li) as i128 * num, denom))
        })
        .collect())
}
