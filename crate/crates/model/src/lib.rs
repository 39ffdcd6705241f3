//! Core value types for guarded-arc Petri nets.
//!
//! A guarded-arc Petri net extends a place/transition net with colored
//! tokens, per-arc guards, reset/inhibitor/read arcs, transition priorities,
//! durations, stimulation factors, and must-fire guards. Everything in this
//! crate is an immutable value type; execution lives in `biopathqa-sim`.

mod multiset;
mod net;
mod validate;

pub use multiset::{ms_add, ms_leq, ms_scale, ms_sub_saturating, ColoredMultiset, DEFAULT_COLOR};
pub use net::{
    guard_satisfied, ArcKind, CondKind, CondRhs, Condition, FiringStyle, FluentRef, Guard,
    GuardedNet, Marking, NetArc, PlaceDef, Stimulation, TransitionDef,
};
pub use validate::{jointly_satisfiable, validate_net, Diagnostic, Severity};

use thiserror::Error;

/// Errors raised by model-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    /// A multiset subtraction would have produced a negative count.
    #[error("multiset underflow on color `{color}`")]
    Underflow { color: String },
    /// A guard references a fluent that resolves to no place in the marking.
    #[error("unknown fluent `{fluent}`")]
    UnknownFluent { fluent: String },
}
