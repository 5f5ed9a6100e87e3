use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on generated space sizes accepted by [`TrialConfig::validate`].
pub const MAX_POINTS_LIMIT: usize = 6;
/// Upper bound on generated label counts accepted by [`TrialConfig::validate`].
pub const MAX_RANK_LIMIT: usize = 3;

/// Parameters of a randomized axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_points: usize,
    pub max_rank: usize,
    /// Inclusive range of point dimensions.
    pub dim_range: (i64, i64),
    /// Label coordinates are drawn from `-label_bound..=label_bound`.
    pub label_bound: i64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 1,
            trials: 500,
            max_points: 4,
            max_rank: 3,
            dim_range: (-1, 3),
            label_bound: 2,
        }
    }
}

impl TrialConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_max_points(mut self, max_points: usize) -> Self {
        self.max_points = max_points;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidConfig(m.to_owned()));
        if self.max_points == 0 || self.max_points > MAX_POINTS_LIMIT {
            return bad(&format!("max_points must be in 1..={MAX_POINTS_LIMIT}"));
        }
        if self.max_rank > MAX_RANK_LIMIT {
            return bad(&format!("max_rank must be at most {MAX_RANK_LIMIT}"));
        }
        if self.dim_range.0 > self.dim_range.1 {
            return bad("dim_range is empty");
        }
        if self.label_bound < 0 {
            return bad("label_bound must be non-negative");
        }
        Ok(())
    }
}
