//! Query language for pathway simulations.
//!
//! A query statement names a property of the simulated trajectories (a
//! rate, a value, an occurrence, or a cascade of conditions), optionally
//! modifies the pathway through interventions and an initial setup, and
//! optionally filters trajectories through observations. Comparative
//! statements ask for the direction of change between the nominal pathway
//! and the modified one. [`parse_query`] builds the AST and [`render`]
//! prints it back in canonical form.

mod ast;
mod lexer;
mod parser;
mod render;

pub use ast::{
    AggOp, CascadeLink, Direction, DirectionOrHole, Intervention, Interval, IntervalFormula,
    IntervalQuantity, Number, NumberOrHole, Observation, Point, PointFormula, QueryDescription,
    QueryStatement,
};
pub use parser::{parse_query, ParseError};
pub use render::render;
