//! Ground-truth oracles for small instances and the stochastic hill-climbing
//! reference search.

mod oracle;
mod shc;
mod supermodular;

pub use oracle::{
    binomial, brute_force_best_k, brute_force_shapley, OracleResult, DEFAULT_SUBSET_LIMIT,
    MAX_SHAPLEY_CONTRIBUTORS,
};
pub use shc::{shc_rank, shc_rank_traced, InitStrategy, RestartStats, ShcOutcome, ShcParams};
pub use supermodular::{
    check_supermodular, ChainCheck, SupermodularityOutcome, Violation, ViolationKind,
    MAX_EXHAUSTIVE_CONTRIBUTORS,
};
