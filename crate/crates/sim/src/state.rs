//! Simulation state, options, trajectories, and errors.

use std::collections::{BTreeMap, BTreeSet};

use biopathqa_model::{ColoredMultiset, FiringStyle, Marking, ModelError};
use thiserror::Error;

/// Ceiling on enumerated trajectories unless overridden.
pub const DEFAULT_MAX_TRAJECTORIES: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("place `{place}` holds {count} tokens of color `{color}` at step {step}, above the token cap {cap}")]
    CapExceeded {
        place: String,
        color: String,
        count: u64,
        cap: u64,
        step: u64,
    },
    #[error("more than {max} trajectories; raise the trajectory bound or shorten the horizon")]
    TooManyTrajectories { max: u64 },
    #[error("unknown transition `{transition}`")]
    UnknownTransition { transition: String },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Tokens scheduled by a durative transition, appearing in the marking at
/// state `due_step`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingProduction {
    pub due_step: u64,
    pub place: String,
    pub amount: ColoredMultiset,
}

/// A point in a simulation: the step index, the marking s_k, tokens still in
/// transit, and the step at which each in-progress durative transition
/// completes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimState {
    pub step: u64,
    pub marking: Marking,
    pub pending: Vec<PendingProduction>,
    pub busy: BTreeMap<String, u64>,
}

impl SimState {
    /// The start state of a run: step 0, the net's initial marking, nothing
    /// in transit.
    pub fn initial(marking: Marking) -> Self {
        Self {
            step: 0,
            marking,
            pending: Vec::new(),
            busy: BTreeMap::new(),
        }
    }
}

/// One complete or truncated run of the net.
///
/// A complete trajectory over horizon K stores firing sets T_0..T_K and
/// markings s_0..s_{K+1}; the trailing marking exists because T_K is chosen
/// and applied at s_K, and it stays internal. A truncated trajectory ends at
/// the state where no candidate firing set existed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<Marking>,
    pub firings: Vec<BTreeSet<String>>,
    pub complete: bool,
}

impl Trajectory {
    /// The observable markings s_0..s_K (the trailing internal marking of a
    /// complete trajectory is dropped).
    pub fn exposed_states(&self) -> &[Marking] {
        if self.complete {
            &self.states[..self.states.len() - 1]
        } else {
            &self.states
        }
    }

    /// The observable firing sets T_0..T_K.
    pub fn exposed_firings(&self) -> &[BTreeSet<String>] {
        &self.firings
    }

    /// Index of the last observable state.
    pub fn last_step(&self) -> u64 {
        (self.exposed_states().len() - 1) as u64
    }
}

/// Parameters of a trajectory enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimOptions {
    /// Horizon K: trajectories observe states s_0..s_K.
    pub steps: u64,
    /// Per-place per-color token ceiling for unbounded places.
    pub max_tokens: u64,
    /// Overrides the net's firing style when set.
    pub style: Option<FiringStyle>,
    /// Enumeration aborts once this many trajectories exist.
    pub max_trajectories: u64,
    /// Treats every durative transition as non-reentrant.
    pub non_reentrant: bool,
}

impl SimOptions {
    pub fn new(steps: u64, max_tokens: u64) -> Self {
        Self {
            steps,
            max_tokens,
            style: None,
            max_trajectories: DEFAULT_MAX_TRAJECTORIES,
            non_reentrant: false,
        }
    }
}

/// Every trajectory of a run plus runtime diagnostics (currently only
/// serial-style must-fire conflicts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub trajectories: Vec<Trajectory>,
    pub diagnostics: Vec<String>,
}

impl EnumerationResult {
    /// Complete trajectories only; truncated runs are excluded from query
    /// evaluation.
    pub fn complete(&self) -> impl Iterator<Item = &Trajectory> {
        self.trajectories.iter().filter(|t| t.complete)
    }
}
