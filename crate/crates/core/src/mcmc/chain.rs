use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basisgen::MarkovBasis;
use crate::error::{Error, Result};
use crate::reptheory::{fourier_transform, projection_lengths, RankFunction};
use crate::symgroup::{factorial, Partition, Permutation};
use crate::tableaux::{try_apply_move, Move, Sign, Symmetry};
use crate::FourierMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Uniform,
    Hypergeometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisMode {
    Full,
    Symmetrized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainConfig {
    pub target: Target,
    pub basis_mode: BasisMode,
    pub steps_per_sample: u64,
    pub num_samples: usize,
    pub burn_in: u64,
    pub seed: u64,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig {
            target: Target::Hypergeometric,
            basis_mode: BasisMode::Symmetrized,
            steps_per_sample: 10_000,
            num_samples: 100,
            burn_in: 0,
            seed: 0,
        }
    }
}

impl ChainConfig {
    pub fn validate(&self) -> Result<()> {
        if self.steps_per_sample == 0 || self.num_samples == 0 {
            return Err(Error::Format("steps per sample and sample count must be positive".into()));
        }
        Ok(())
    }
}

/// A point of a fiber plus the generator driving the walk.
///
/// The generator is ChaCha8 seeded from a 64-bit seed. Each step draws, in
/// order: the move index, the sign, the symmetry element when symmetrizing
/// (positions then labels, each as a lexicographic rank), and for Metropolis
/// steps one acceptance uniform.
#[derive(Debug, Clone)]
pub struct ChainState {
    pub current: RankFunction,
    pub fixed_transform: FourierMatrix,
    pub step_count: u64,
    rng: ChaCha8Rng,
}

impl ChainState {
    pub fn new(f0: RankFunction, seed: u64) -> Self {
        let fixed_transform = fourier_transform(&f0);
        ChainState { current: f0, fixed_transform, step_count: 0, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn is_conserved(&self) -> bool {
        fourier_transform(&self.current) == self.fixed_transform
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    Moved,
    /// The move would make a count negative.
    Infeasible,
    /// Feasible but refused by the Metropolis rule.
    Rejected,
}

/// Where proposals come from.
#[derive(Debug, Clone, Copy)]
pub enum Proposal<'a> {
    /// a uniformly chosen move of the full list
    Full(&'a [Move]),
    /// a uniformly chosen class representative moved by a uniform group element
    Symmetrized(&'a [Move]),
}

fn propose(state: &mut ChainState, proposal: Proposal<'_>) -> (Move, Sign) {
    let (moves, symmetrize) = match proposal {
        Proposal::Full(m) => (m, false),
        Proposal::Symmetrized(m) => (m, true),
    };
    assert!(!moves.is_empty(), "proposal needs at least one move");
    let k = state.rng.random_range(0..moves.len());
    let sign = if state.rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
    if !symmetrize {
        return (moves[k].clone(), sign);
    }
    let n = state.current.n();
    let order = factorial(n);
    let positions = Permutation::from_lex_rank(n, state.rng.random_range(0..order));
    let labels = Permutation::from_lex_rank(n, state.rng.random_range(0..order));
    (moves[k].act_unchecked(&Symmetry { positions, labels }), sign)
}

fn step(state: &mut ChainState, proposal: Proposal<'_>, target: Target) -> StepOutcome {
    let (m, sign) = propose(state, proposal);
    let outcome = match target {
        Target::Uniform => {
            if try_apply_move(&mut state.current, &m, sign) {
                StepOutcome::Moved
            } else {
                StepOutcome::Infeasible
            }
        }
        Target::Hypergeometric => {
            let u: f64 = state.rng.random();
            match metropolis_log_ratio(&state.current, &m, sign) {
                None => StepOutcome::Infeasible,
                Some(lr) if lr >= 0.0 || u.ln() < lr => {
                    let ok = try_apply_move(&mut state.current, &m, sign);
                    debug_assert!(ok);
                    StepOutcome::Moved
                }
                Some(_) => StepOutcome::Rejected,
            }
        }
    };
    state.step_count += 1;
    outcome
}

/// One step of the plain walk: uniform move, uniform sign, move if feasible.
pub fn walk_step(state: &mut ChainState, moves: &[Move]) -> StepOutcome {
    step(state, Proposal::Full(moves), Target::Uniform)
}

/// One step of the walk whose moves are random images of class representatives.
pub fn symmetrized_step(state: &mut ChainState, representatives: &[Move]) -> StepOutcome {
    step(state, Proposal::Symmetrized(representatives), Target::Uniform)
}

/// One Metropolis step towards weights proportional to `Π 1/f(σ)!`.
pub fn metropolis_step(state: &mut ChainState, proposal: Proposal<'_>) -> StepOutcome {
    step(state, proposal, Target::Hypergeometric)
}

/// `ln(a! / b!)`, exactly for small arguments.
fn ln_factorial_ratio(a: u64, b: u64) -> f64 {
    if a.max(b) <= 20 {
        let (fa, fb) = (factorial_u64(a), factorial_u64(b));
        return (fa as f64 / fb as f64).ln();
    }
    let (lo, hi, s) = if a > b { (b, a, 1.0) } else { (a, b, -1.0) };
    s * ((lo + 1)..=hi).map(|k| (k as f64).ln()).sum::<f64>()
}

fn factorial_u64(k: u64) -> u64 {
    (1..=k).product()
}

/// Log of the weight ratio `w(f ± m) / w(f)` over the changed cells only, or
/// `None` when the move is infeasible.
pub fn metropolis_log_ratio(f: &RankFunction, m: &Move, sign: Sign) -> Option<f64> {
    let s = if sign == Sign::Plus { 1 } else { -1 };
    let mut lr = 0.0;
    for (p, d) in m.delta() {
        let c = f.get(&p);
        let next = c as i64 + s * d;
        if next < 0 {
            return None;
        }
        // w ∝ 1/c!, so the ratio is c!/next!
        lr += ln_factorial_ratio(c, next as u64);
    }
    Some(lr)
}

/// `-Σ ln f(σ)!`, the unnormalized log weight of the conditional distribution.
pub fn hypergeometric_log_weight(f: &RankFunction) -> f64 {
    -f.counts().iter().map(|&c| ln_factorial_ratio(c, 0)).sum::<f64>()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainSample {
    pub step: u64,
    pub lengths: Vec<(Partition, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainRun {
    pub config: ChainConfig,
    pub samples: Vec<ChainSample>,
    pub moved: u64,
    pub infeasible: u64,
    pub rejected: u64,
}

impl ChainRun {
    pub fn means(&self) -> Vec<(Partition, f64)> {
        crate::mcmc::mean_lengths(&self.samples)
    }
}

/// Runs a chain from `f0`, recording projection lengths every
/// `steps_per_sample` steps after the burn-in.
pub fn run_chain(f0: &RankFunction, basis: &MarkovBasis, config: &ChainConfig) -> Result<ChainRun> {
    config.validate()?;
    if basis.n != f0.n() {
        return Err(Error::MismatchedDegree { left: basis.n, right: f0.n() });
    }
    let moves = match config.basis_mode {
        BasisMode::Full => basis.expanded_moves(),
        BasisMode::Symmetrized => basis.classes.iter().map(|c| c.representative.clone()).collect(),
    };
    if moves.is_empty() {
        return Err(Error::InvalidMove("basis has no moves".into()));
    }
    let proposal = match config.basis_mode {
        BasisMode::Full => Proposal::Full(&moves),
        BasisMode::Symmetrized => Proposal::Symmetrized(&moves),
    };
    let mut state = ChainState::new(f0.clone(), config.seed);
    let mut run = ChainRun { config: *config, samples: Vec::new(), moved: 0, infeasible: 0, rejected: 0 };
    let tally = |o: StepOutcome, run: &mut ChainRun| match o {
        StepOutcome::Moved => run.moved += 1,
        StepOutcome::Infeasible => run.infeasible += 1,
        StepOutcome::Rejected => run.rejected += 1,
    };
    for _ in 0..config.burn_in {
        let o = step(&mut state, proposal, config.target);
        tally(o, &mut run);
    }
    for _ in 0..config.num_samples {
        for _ in 0..config.steps_per_sample {
            let o = step(&mut state, proposal, config.target);
            tally(o, &mut run);
        }
        assert!(state.is_conserved(), "first-order counts changed during the walk");
        run.samples.push(ChainSample { step: state.step_count, lengths: projection_lengths::<f64>(&state.current)? });
    }
    Ok(run)
}

/// Independent chains, one per seed, run in parallel.
pub fn run_chains(f0: &RankFunction, basis: &MarkovBasis, config: &ChainConfig, seeds: &[u64]) -> Result<Vec<ChainRun>> {
    seeds
        .par_iter()
        .map(|&seed| run_chain(f0, basis, &ChainConfig { seed, ..*config }))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn latin_pair() -> (RankFunction, Move) {
        let m = Move::parse(&["123", "231", "312"], &["132", "213", "321"]).unwrap();
        let f = m.plus().to_rank_function();
        (f, m)
    }

    #[test]
    fn infeasible_step_still_advances() {
        let (f, m) = latin_pair();
        let mut s = ChainState::new(f.clone(), 3);
        let mut saw_infeasible = false;
        for _ in 0..50 {
            let before = s.current.clone();
            let k = s.step_count;
            if walk_step(&mut s, std::slice::from_ref(&m)) == StepOutcome::Infeasible {
                assert_eq!(s.current, before);
                saw_infeasible = true;
            }
            assert_eq!(s.step_count, k + 1);
            assert!(s.is_conserved());
        }
        assert!(saw_infeasible);
    }

    #[test]
    fn degree_two_ratio() {
        // counts (a,b) on the plus side, (c,d) on the minus side
        let m = Move::parse(&["1234", "2143"], &["1243", "2134"]).unwrap();
        let (a, b, c, d) = (3u64, 0u64, 5u64, 2u64);
        let mut f = RankFunction::zeros(4).unwrap();
        let set = |f: &mut RankFunction, s: &str, v| f.set(&s.parse().unwrap(), v).unwrap();
        set(&mut f, "1234", a);
        set(&mut f, "2143", b);
        set(&mut f, "1243", c);
        set(&mut f, "2134", d);
        let lr = metropolis_log_ratio(&f, &m, Sign::Plus).unwrap();
        let expect = (c * d) as f64 / ((a + 1) * (b + 1)) as f64;
        assert!((lr.exp() - expect).abs() < 1e-12);
        // cross-check against full weights
        let g = crate::tableaux::apply_move(&f, &m, Sign::Plus).unwrap();
        let direct = hypergeometric_log_weight(&g) - hypergeometric_log_weight(&f);
        assert!((direct - lr).abs() < 1e-12);
    }

    #[test]
    fn large_counts_use_logs() {
        assert!((ln_factorial_ratio(30, 28) - (30f64 * 29.0).ln()).abs() < 1e-12);
        assert!((ln_factorial_ratio(5, 7) + (42f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn deterministic_given_seed() {
        let basis = crate::basisgen::compute_markov_basis(4, None).unwrap();
        let f = RankFunction::from_pairs(4, crate::symgroup::enumerate_sn(4).unwrap().into_iter().map(|p| (p, 2))).unwrap();
        let cfg = ChainConfig { steps_per_sample: 50, num_samples: 3, seed: 9, ..ChainConfig::default() };
        let a = run_chain(&f, &basis, &cfg).unwrap();
        let b = run_chain(&f, &basis, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mismatched_basis() {
        let basis = crate::basisgen::compute_markov_basis(3, None).unwrap();
        let f = RankFunction::uniform(4).unwrap();
        assert!(run_chain(&f, &basis, &ChainConfig::default()).is_err());
    }
}
