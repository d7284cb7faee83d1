use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::balancing::BalanceMode;

/// Default iteration cap before the sequential completion pass takes over.
pub const DEFAULT_MAX_ITERATIONS: usize = 100;

/// Chunk size used by the tuned presets.
pub const TUNED_CHUNK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringStrategy {
    /// First-fit (or a balancing policy) over each queued vertex's distance-2 neighborhood.
    Vertex,
    /// Per-net forbidden pass followed by reverse first-fit of the local queue.
    Net,
    /// Most optimistic net coloring: net-level first-fit with recoloring of local duplicates.
    NetFirstFit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConflictStrategy {
    Vertex,
    Net,
}

/// How vertex-based conflict removal builds the next queue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QueueMode {
    /// Append straight into one shared queue (atomic tail).
    SharedAppend,
    /// Private per-worker buffers concatenated at the barrier.
    LocalBuffers,
}

/// Grain of the dynamic chunk claiming.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chunking {
    /// One chunk of `ceil(len / workers)` per worker.
    Static,
    Fixed(usize),
}

impl Chunking {
    pub fn resolve(self, len: usize, workers: usize) -> usize {
        match self {
            Chunking::Static => len.div_ceil(workers.max(1)).max(1),
            Chunking::Fixed(c) => c.max(1),
        }
    }
}

/// Per-iteration choice of strategies, plus the knobs shared by all phases.
///
/// Iterations are numbered from 1. The coloring phase is `net_coloring`
/// for iterations `1..=net_coloring_iters` and vertex-based afterwards;
/// conflict removal is net-based for `1..=net_removal_iters`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategySchedule {
    pub name: String,
    pub net_coloring: ColoringStrategy,
    pub net_coloring_iters: usize,
    pub net_removal_iters: usize,
    pub balance: BalanceMode,
    pub chunking: Chunking,
    pub queue: QueueMode,
    pub max_iterations: usize,
}

impl StrategySchedule {
    pub fn coloring_strategy(&self, iteration: usize) -> ColoringStrategy {
        if iteration <= self.net_coloring_iters {
            self.net_coloring
        } else {
            ColoringStrategy::Vertex
        }
    }

    pub fn conflict_strategy(&self, iteration: usize) -> ConflictStrategy {
        if iteration <= self.net_removal_iters {
            ConflictStrategy::Net
        } else {
            ConflictStrategy::Vertex
        }
    }

    pub fn with_chunk(mut self, chunk: usize) -> Self {
        self.chunking = Chunking::Fixed(chunk);
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }
}

/// The eight named algorithm configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Preset {
    #[serde(rename = "V-V")]
    VV,
    #[serde(rename = "V-V-64")]
    VV64,
    #[serde(rename = "V-V-64D")]
    VV64D,
    #[serde(rename = "V-Ninf")]
    VNinf,
    #[serde(rename = "V-N1")]
    VN1,
    #[serde(rename = "V-N2")]
    VN2,
    #[serde(rename = "N1-N2")]
    N1N2,
    #[serde(rename = "N2-N2")]
    N2N2,
}

impl Preset {
    pub const ALL: [Preset; 8] =
        [Preset::VV, Preset::VV64, Preset::VV64D, Preset::VNinf, Preset::VN1, Preset::VN2, Preset::N1N2, Preset::N2N2];

    pub fn name(self) -> &'static str {
        match self {
            Preset::VV => "V-V",
            Preset::VV64 => "V-V-64",
            Preset::VV64D => "V-V-64D",
            Preset::VNinf => "V-Ninf",
            Preset::VN1 => "V-N1",
            Preset::VN2 => "V-N2",
            Preset::N1N2 => "N1-N2",
            Preset::N2N2 => "N2-N2",
        }
    }

    pub fn schedule(self) -> StrategySchedule {
        let (net_coloring_iters, net_removal_iters, chunking, queue) = match self {
            Preset::VV => (0, 0, Chunking::Static, QueueMode::SharedAppend),
            Preset::VV64 => (0, 0, Chunking::Fixed(TUNED_CHUNK), QueueMode::SharedAppend),
            Preset::VV64D => (0, 0, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
            Preset::VNinf => (0, usize::MAX, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
            Preset::VN1 => (0, 1, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
            Preset::VN2 => (0, 2, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
            Preset::N1N2 => (1, 2, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
            Preset::N2N2 => (2, 2, Chunking::Fixed(TUNED_CHUNK), QueueMode::LocalBuffers),
        };
        StrategySchedule {
            name: self.name().to_string(),
            net_coloring: ColoringStrategy::Net,
            net_coloring_iters,
            net_removal_iters,
            balance: BalanceMode::None,
            chunking,
            queue,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('∞', "INF");
        Preset::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_uppercase() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                format!("unknown algorithm '{s}' (expected one of {})", names.join(", "))
            })
    }
}
