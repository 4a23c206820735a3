//! Random walks on fibers driven by a Markov basis, Metropolis sampling from
//! the conditional distribution given the first-order counts, bootstrap
//! resampling, and the exponential model whose sufficient statistic those
//! counts are.

mod bootstrap;
mod chain;
mod model;
mod output;

pub use bootstrap::{bootstrap, bootstrap_replicates};
pub use chain::{
    hypergeometric_log_weight, metropolis_log_ratio, metropolis_step, run_chain, run_chains, symmetrized_step,
    walk_step, BasisMode, ChainConfig, ChainRun, ChainSample, ChainState, Proposal, StepOutcome, Target,
};
pub use model::{log_likelihood, model_log_density, ExponentialModel};
pub use output::{histogram, mean_lengths, write_histogram_csv, write_samples_jsonl, HistogramBin};
