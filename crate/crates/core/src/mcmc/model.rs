use num_traits::Float;

use crate::error::{Error, Result};
use crate::reptheory::RankFunction;
use crate::symgroup::{enumerate_sn, Permutation};

/// `P(π) = exp(Tr(Θ ρ(π))) / Z`, where `Tr(Θ ρ(π)) = Σ_j Θ[π(j)][j]`
/// (row = item, column = position, as in the first-order counts).
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialModel<T> {
    n: usize,
    theta: Vec<T>,
    log_z: T,
}

impl<T: Float> ExponentialModel<T> {
    pub fn new(n: usize, theta: Vec<T>) -> Result<Self> {
        if theta.len() != n * n {
            return Err(Error::Format(format!("theta needs {} entries, got {}", n * n, theta.len())));
        }
        let exps: Vec<T> = enumerate_sn(n)?.iter().map(|p| trace(n, &theta, p)).collect();
        // log-sum-exp
        let m = exps.iter().copied().fold(T::neg_infinity(), T::max);
        let s = exps.iter().fold(T::zero(), |acc, &e| acc + (e - m).exp());
        Ok(ExponentialModel { n, theta, log_z: m + s.ln() })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![T::zero(); n * n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> &[T] {
        &self.theta
    }

    pub fn log_partition(&self) -> T {
        self.log_z
    }

    pub fn trace(&self, p: &Permutation) -> T {
        trace(self.n, &self.theta, p)
    }
}

fn trace<T: Float>(n: usize, theta: &[T], p: &Permutation) -> T {
    (0..n).fold(T::zero(), |acc, j| acc + theta[p.image(j) * n + j])
}

pub fn model_log_density<T: Float>(m: &ExponentialModel<T>, p: &Permutation) -> Result<T> {
    if p.degree() != m.n {
        return Err(Error::MismatchedDegree { left: m.n, right: p.degree() });
    }
    Ok(m.trace(p) - m.log_z)
}

/// `Σ_π f(π) log P(π)`; depends on `f` only through its first-order counts.
pub fn log_likelihood<T: Float>(m: &ExponentialModel<T>, f: &RankFunction) -> Result<T> {
    let mut acc = T::zero();
    for (p, c) in f.iter() {
        acc = acc + T::from(c).expect("count fits") * model_log_density(m, &p)?;
    }
    Ok(acc)
}
