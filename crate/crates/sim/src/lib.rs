//! Execution semantics for guarded-arc Petri nets.
//!
//! The simulator computes enabledness, conflict, and firing-set selection
//! per firing style, applies durative production schedules, and enumerates
//! every trajectory up to a horizon. Enumeration is exhaustive and returns
//! trajectories in a canonical deterministic order.

mod exec;
mod ops;
mod state;

pub use exec::{enumerate_trajectories, step};
pub use ops::{
    candidate_firing_sets, consumption, enabled_set, must_fire_set, overconsumed,
    priority_filter, stimulation_factor,
};
pub use state::{
    EnumerationResult, PendingProduction, SimError, SimOptions, SimState, Trajectory,
    DEFAULT_MAX_TRAJECTORIES,
};
