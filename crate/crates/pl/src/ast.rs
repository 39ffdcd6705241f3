use std::fmt;

use biopathqa_model::{CondKind, CondRhs, Condition, FiringStyle, FluentRef};

/// Value domain of a fluent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainType {
    Integer,
    Binary,
}

impl fmt::Display for DomainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainType::Integer => write!(f, "integer"),
            DomainType::Binary => write!(f, "binary"),
        }
    }
}

/// How an effect changes a fluent: by a signed amount, or by removing
/// everything (`*`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta {
    Change(i64),
    ResetAll,
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Change(n) if *n >= 0 => write!(f, "+{}", n),
            Delta::Change(n) => write!(f, "{}", n),
            Delta::ResetAll => write!(f, "*"),
        }
    }
}

/// One `f change value by e` clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Effect {
    pub fluent: FluentRef,
    pub delta: Delta,
}

impl fmt::Display for Effect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} change value by {}", self.fluent, self.delta)
    }
}

/// A may-execute or (normally) must-execute statement for one action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecuteStatement {
    pub action: String,
    pub effects: Vec<Effect>,
    pub conditions: Vec<Condition>,
    pub must: bool,
}

/// One pathway statement, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Execute(ExecuteStatement),
    Inhibit {
        action: String,
        conditions: Vec<Condition>,
    },
    Stimulate {
        action: String,
        factor: u64,
        conditions: Vec<Condition>,
    },
    Initially(Vec<(FluentRef, u64)>),
    Duration {
        action: String,
        duration: u64,
    },
    Priority {
        action: String,
        priority: u64,
    },
}

/// A parsed pathway specification.
///
/// Domain declarations are merged into one list; firing-style statements
/// are kept in order of appearance so the consistency check can flag
/// duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathwaySpec {
    pub domains: Vec<(FluentRef, DomainType)>,
    pub statements: Vec<Statement>,
    pub firing_styles: Vec<FiringStyle>,
}

impl PathwaySpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// The effective firing style: the first declared one, or ANY (`*`).
    pub fn firing_style(&self) -> FiringStyle {
        self.firing_styles
            .first()
            .copied()
            .unwrap_or(FiringStyle::Any)
    }

    /// Declared domain of a fluent; undeclared fluents are integer.
    pub fn domain_of(&self, fluent: &FluentRef) -> DomainType {
        self.domains
            .iter()
            .find(|(f, _)| f == fluent)
            .map(|(_, d)| *d)
            .unwrap_or(DomainType::Integer)
    }
}

/// Renders a condition in pathway syntax.
pub(crate) fn render_condition(cond: &Condition) -> String {
    let rhs = |r: &CondRhs| match r {
        CondRhs::Const(w) => w.to_string(),
        CondRhs::Fluent(f) => f.to_string(),
    };
    match (&cond.kind, &cond.rhs) {
        (CondKind::Ge, CondRhs::Const(w)) => {
            format!("{} has value {} or higher", cond.lhs, w)
        }
        (CondKind::Ge, CondRhs::Fluent(f)) => {
            format!("{} has value {} or higher", cond.lhs, f)
        }
        (CondKind::Lt, r) => format!("{} has value lower than {}", cond.lhs, rhs(r)),
        (CondKind::Le, CondRhs::Const(w)) => {
            format!("{} has value lower than {}", cond.lhs, w + 1)
        }
        (CondKind::Le, r) => format!("{} has value lower than {}", cond.lhs, rhs(r)),
        (CondKind::Eq, r) => format!("{} has value equal to {}", cond.lhs, rhs(r)),
        (CondKind::Gt, r) => format!("{} has value higher than {}", cond.lhs, rhs(r)),
    }
}

fn render_conditions(conds: &[Condition]) -> String {
    conds
        .iter()
        .map(render_condition)
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Execute(ex) => {
                let verb = if ex.must {
                    "normally must execute"
                } else {
                    "may execute"
                };
                let effects = ex
                    .effects
                    .iter()
                    .map(Effect::to_string)
                    .collect::<Vec<_>>()
                    .join(", ");
                write!(f, "{} {} causing {}", ex.action, verb, effects)?;
                if !ex.conditions.is_empty() {
                    write!(f, " if {}", render_conditions(&ex.conditions))?;
                }
                Ok(())
            }
            Statement::Inhibit { action, conditions } => {
                write!(f, "inhibit {}", action)?;
                if !conditions.is_empty() {
                    write!(f, " if {}", render_conditions(conditions))?;
                }
                Ok(())
            }
            Statement::Stimulate {
                action,
                factor,
                conditions,
            } => {
                write!(f, "normally stimulate {} by factor {}", action, factor)?;
                if !conditions.is_empty() {
                    write!(f, " if {}", render_conditions(conditions))?;
                }
                Ok(())
            }
            Statement::Initially(items) => {
                let items = items
                    .iter()
                    .map(|(fluent, w)| format!("{} has value {}", fluent, w))
                    .collect::<Vec<_>>()
                    .join(", ");
                write!(f, "initially {}", items)
            }
            Statement::Duration { action, duration } => {
                write!(f, "{} executes in {} time units", action, duration)
            }
            Statement::Priority { action, priority } => {
                write!(f, "priority of {} is {}", action, priority)
            }
        }
    }
}

/// Renders a specification back to canonical pathway text: the merged
/// domain declaration first, then statements in order, then any
/// firing-style statements. Reparsing the result yields an equal AST.
pub fn render(spec: &PathwaySpec) -> String {
    let mut out = String::new();
    if !spec.domains.is_empty() {
        let items = spec
            .domains
            .iter()
            .map(|(fluent, ty)| format!("{} is {}", fluent, ty))
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("domain of {}\n", items));
    }
    for st in &spec.statements {
        out.push_str(&st.to_string());
        out.push('\n');
    }
    for style in &spec.firing_styles {
        out.push_str(&format!("firing style {}\n", style));
    }
    out
}
