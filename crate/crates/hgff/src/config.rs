//! Run-wide budgets and sweep defaults.

use serde::Serialize;

/// Environment variable that overrides the field-size budget.
pub const BUDGET_ENV: &str = "HGFF_BUDGET";

pub const DEFAULT_Q_MAX: u64 = 1 << 20;
pub const DEFAULT_PHI_MAX: u64 = 4096;
/// Upper bound on the number of inner terms a single direct period sum may visit.
pub const DEFAULT_SUM_MAX: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub q_max: u64,
    pub phi_max: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            q_max: q_max(),
            phi_max: DEFAULT_PHI_MAX,
            seed: 0x5eed,
            workers: 0,
        }
    }
}

/// Field budget: `HGFF_BUDGET` if set to a positive integer, else 2^20.
pub fn q_max() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_Q_MAX)
}
