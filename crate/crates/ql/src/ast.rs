//! Abstract syntax for query statements.

use std::fmt;

use biopathqa_model::FluentRef;

/// A decimal number with an exact representation: `mantissa / 10^scale`.
///
/// Stored in normalized form, so `5.0` and `5` compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Number {
    pub mantissa: i64,
    pub scale: u32,
}

impl Number {
    /// Builds a number, trimming trailing zero fraction digits.
    pub fn new(mut mantissa: i64, mut scale: u32) -> Self {
        while scale > 0 && mantissa % 10 == 0 {
            mantissa /= 10;
            scale -= 1;
        }
        Number { mantissa, scale }
    }

    /// Builds a whole number.
    pub fn from_int(value: i64) -> Self {
        Number { mantissa: value, scale: 0 }
    }

    /// Returns the value as a non-negative integer, if it is one.
    pub fn as_quantity(&self) -> Option<u64> {
        if self.scale == 0 {
            u64::try_from(self.mantissa).ok()
        } else {
            None
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let divisor = 10_i64.pow(self.scale);
        let sign = if self.mantissa < 0 { "-" } else { "" };
        let magnitude = self.mantissa.unsigned_abs();
        let whole = magnitude / divisor.unsigned_abs();
        let frac = magnitude % divisor.unsigned_abs();
        write!(f, "{sign}{whole}.{frac:0width$}", width = self.scale as usize)
    }
}

/// A numeric slot: either a literal or a named unknown for the engine to solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NumberOrHole {
    Number(Number),
    Hole(String),
}

impl fmt::Display for NumberOrHole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumberOrHole::Number(n) => write!(f, "{n}"),
            NumberOrHole::Hole(name) => write!(f, "{name}"),
        }
    }
}

/// Direction of change between the modified and the nominal pathway.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Less,
    Greater,
    Equal,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::Less => "<",
            Direction::Greater => ">",
            Direction::Equal => "=",
        };
        write!(f, "{s}")
    }
}

/// A direction slot: either a literal or a named unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectionOrHole {
    Direction(Direction),
    Hole(String),
}

/// A time step on a trajectory, written `time step 5` or `time step k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Point {
    Step(u64),
    Hole(String),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Step(n) => write!(f, "time step {n}"),
            Point::Hole(name) => write!(f, "time step {name}"),
        }
    }
}

/// A pair of points delimiting a sub-sequence of time steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub from: Point,
    pub to: Point,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} and {}", self.from, self.to)
    }
}

/// Aggregate operator applied across per-trajectory values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggOp {
    Minimum,
    Maximum,
    Average,
}

impl fmt::Display for AggOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AggOp::Minimum => "minimum",
            AggOp::Maximum => "maximum",
            AggOp::Average => "average",
        };
        write!(f, "{s}")
    }
}

/// The measured quantity of an interval formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalQuantity {
    /// `rate of production of f` : net change per time step.
    ProductionRate(FluentRef),
    /// `rate of firing of a` : firings per time step.
    FiringRate(String),
    /// `total production of f` : net change over the interval.
    TotalProduction(FluentRef),
}

/// A formula evaluated at a single time step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointFormula {
    ValueHigher { fluent: FluentRef, value: NumberOrHole },
    ValueLower { fluent: FluentRef, value: NumberOrHole },
    ValueIs { fluent: FluentRef, value: NumberOrHole },
    Occurs { action: String },
    DoesNotOccur { action: String },
    SwitchesTo { from: String, to: String },
}

/// A formula evaluated over an interval of time steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalFormula {
    Quantity { quantity: IntervalQuantity, value: NumberOrHole },
    /// `f is accumulating` : never decreases and ends strictly higher.
    Accumulating { fluent: FluentRef },
    /// `f is decreasing` : never increases and ends strictly lower.
    Decreasing { fluent: FluentRef },
}

/// A simple formula with an optional anchor, usable as an observation
/// or as a whole query description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observation {
    Point {
        formula: PointFormula,
        /// `at time step i`; an absent anchor quantifies over all steps.
        at: Option<Point>,
    },
    Interval {
        formula: IntervalFormula,
        /// `when observed between ...`; an absent anchor means the full run.
        between: Option<Interval>,
    },
}

/// One link of a cascade following the head formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CascadeLink {
    /// `after f1, f2` : these formulas hold at some strictly earlier step.
    After(Vec<PointFormula>),
    /// `when f1, f2` : these formulas hold at the same step as the head.
    When(Vec<PointFormula>),
    /// `when p` : an unknown condition for the engine to derive.
    WhenCondition(String),
}

/// The question part of a query statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryDescription {
    /// A simple formula, optionally required on every trajectory.
    Observed {
        observation: Observation,
        all_trajectories: bool,
    },
    /// A point formula chained to earlier or simultaneous conditions.
    Cascade {
        head: PointFormula,
        links: Vec<CascadeLink>,
        all_trajectories: bool,
    },
    /// `<aggop> rate/total ... is n when observed between ...`
    AggregateInterval {
        op: AggOp,
        quantity: IntervalQuantity,
        value: NumberOrHole,
        between: Interval,
    },
    /// `<aggop> value of f is n when observed at ...`
    AggregatePoint {
        op: AggOp,
        fluent: FluentRef,
        value: NumberOrHole,
        at: Point,
    },
    /// `rates/totals ... are [r1, ...] when observed between ...`
    AllInterval {
        quantity: IntervalQuantity,
        values: Vec<Number>,
        between: Interval,
    },
    /// `values of f are [r1, ...] when observed at ...`
    AllPoint {
        fluent: FluentRef,
        values: Vec<Number>,
        at: Point,
    },
    /// `direction of change in <aggop> rate/total ... is d ...`
    ComparativeInterval {
        op: AggOp,
        quantity: IntervalQuantity,
        direction: DirectionOrHole,
        between: Interval,
    },
    /// `direction of change in <aggop> value of f is d ...`
    ComparativePoint {
        op: AggOp,
        fluent: FluentRef,
        direction: DirectionOrHole,
        at: Point,
    },
}

impl QueryDescription {
    /// True for the direction-of-change forms, which compare a nominal
    /// pathway against a modified one.
    pub fn is_comparative(&self) -> bool {
        matches!(
            self,
            QueryDescription::ComparativeInterval { .. } | QueryDescription::ComparativePoint { .. }
        )
    }
}

/// A pathway modification requested by the query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intervention {
    /// `remove f as soon as produced`
    RemoveAsProduced { fluent: FluentRef },
    /// `disable a`
    Disable { action: String },
    /// `continuously transform f1 in quantity q to f2`
    ContinuouslyTransform {
        from: FluentRef,
        quantity: NumberOrHole,
        to: FluentRef,
    },
    /// `make f inhibit a`
    MakeInhibit { fluent: FluentRef, action: String },
    /// `continuously supply f in quantity q`
    ContinuouslySupply { fluent: FluentRef, quantity: NumberOrHole },
    /// `continuously transfer f in quantity q across l1,l2 to lower gradient`
    TransferAcross {
        fluent: String,
        quantity: NumberOrHole,
        from_location: String,
        to_location: String,
    },
    /// `add delay of q time units in availability of f`
    AddDelay { quantity: NumberOrHole, fluent: FluentRef },
    /// `set value of f to q`
    SetValue { fluent: FluentRef, value: NumberOrHole },
}

/// A parsed query statement: the description plus its optional clauses.
///
/// For comparative descriptions the interventions and observations come
/// from the nested `comparing ... obtained` block and apply only to the
/// modified pathway; the initial setup applies to both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryStatement {
    pub description: QueryDescription,
    pub interventions: Vec<Intervention>,
    pub observations: Vec<Observation>,
    pub initial_setup: Vec<Intervention>,
}
