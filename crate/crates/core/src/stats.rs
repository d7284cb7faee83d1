//! Color-class statistics and per-iteration instrumentation.
//!
//! The spread metric is the population standard deviation of the non-empty
//! class sizes: `sqrt(sum((|C_k| - mean)^2) / num_colors)` with
//! `mean = num_vertices / num_colors`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::balancing::BalanceMode;
use crate::engine::{Chunking, ColoringStrategy, ConflictStrategy, Problem, QueueMode, UNCOLORED};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("vertex {0} is uncolored")]
    Uncolored(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationStats {
    /// 1-based.
    pub iteration: usize,
    pub coloring: ColoringStrategy,
    /// `None` for the sequential completion pass.
    pub removal: Option<ConflictStrategy>,
    pub work_before: usize,
    pub work_after: usize,
    pub coloring_ms: f64,
    pub removal_ms: f64,
    pub sequential_fallback: bool,
}

impl IterationStats {
    pub fn total_ms(&self) -> f64 {
        self.coloring_ms + self.removal_ms
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub problem: Problem,
    pub schedule: String,
    pub balance: BalanceMode,
    pub workers: usize,
    pub chunking: Chunking,
    pub queue: QueueMode,
    pub max_iterations: usize,
    pub fallback_used: bool,
    pub fallback_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColoringStats {
    pub num_vertices: usize,
    pub num_colors: usize,
    /// Color -> class size, non-empty classes only.
    pub class_cardinalities: BTreeMap<u32, usize>,
    pub mean_cardinality: f64,
    pub stddev_cardinality: f64,
    pub iterations: Vec<IterationStats>,
    pub total_ms: f64,
    pub run: Option<RunInfo>,
}

impl ColoringStats {
    /// Summed wall time of all coloring phases.
    pub fn coloring_ms(&self) -> f64 {
        self.iterations.iter().map(|i| i.coloring_ms).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}

pub fn color_stats(colors: &[u32]) -> Result<ColoringStats, StatsError> {
    let mut hist = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        if c == UNCOLORED {
            return Err(StatsError::Uncolored(v));
        }
        *hist.entry(c).or_insert(0usize) += 1;
    }
    let k = hist.len();
    let (mean, std) = if k == 0 {
        (0.0, 0.0)
    } else {
        let mean = colors.len() as f64 / k as f64;
        let var = hist.values().map(|&x| (x as f64 - mean).powi(2)).sum::<f64>() / k as f64;
        (mean, var.sqrt())
    };
    Ok(ColoringStats {
        num_vertices: colors.len(),
        num_colors: k,
        class_cardinalities: hist,
        mean_cardinality: mean,
        stddev_cardinality: std,
        iterations: Vec::new(),
        total_ms: 0.0,
        run: None,
    })
}
