//! Net structure: fluent references, guards, arcs, transitions, markings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::multiset::{ColoredMultiset, DEFAULT_COLOR};
use crate::ModelError;

/// Reference to a fluent: a simple fluent reads the default color of the
/// place named after it; a locational fluent reads color `fluent` at place
/// `location`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FluentRef {
    pub fluent: String,
    pub location: Option<String>,
}

impl FluentRef {
    /// A simple (global) fluent.
    pub fn simple(fluent: &str) -> Self {
        Self {
            fluent: fluent.to_string(),
            location: None,
        }
    }

    /// A locational fluent `fluent atloc location`.
    pub fn at(fluent: &str, location: &str) -> Self {
        Self {
            fluent: fluent.to_string(),
            location: Some(location.to_string()),
        }
    }

    /// The (place, color) pair this reference reads.
    pub fn place_color(&self) -> (&str, &str) {
        match &self.location {
            Some(loc) => (loc.as_str(), self.fluent.as_str()),
            None => (self.fluent.as_str(), DEFAULT_COLOR),
        }
    }
}

impl fmt::Display for FluentRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            Some(loc) => write!(f, "{} atloc {}", self.fluent, loc),
            None => write!(f, "{}", self.fluent),
        }
    }
}

/// Comparison operator of a guard condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CondKind {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

/// Right-hand side of a guard condition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CondRhs {
    Const(u64),
    Fluent(FluentRef),
}

/// An atomic guard condition `lhs <kind> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Condition {
    pub kind: CondKind,
    pub lhs: FluentRef,
    pub rhs: CondRhs,
}

impl Condition {
    pub fn new(lhs: FluentRef, kind: CondKind, rhs: CondRhs) -> Self {
        Self { kind, lhs, rhs }
    }
}

/// A propositional formula over guard conditions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Guard {
    True,
    Cond(Condition),
    Not(Box<Guard>),
    And(Vec<Guard>),
    Or(Vec<Guard>),
}

impl Guard {
    /// Conjunction of `conds`, normalized: empty list is TRUE, a single
    /// condition stays bare.
    pub fn conjunction(conds: Vec<Condition>) -> Guard {
        let mut guards: Vec<Guard> = conds.into_iter().map(Guard::Cond).collect();
        match guards.len() {
            0 => Guard::True,
            1 => guards.pop().unwrap(),
            _ => Guard::And(guards),
        }
    }

    /// All fluent references mentioned anywhere in the formula.
    pub fn fluent_refs(&self) -> BTreeSet<FluentRef> {
        let mut refs = BTreeSet::new();
        self.collect_refs(&mut refs);
        refs
    }

    fn collect_refs(&self, refs: &mut BTreeSet<FluentRef>) {
        match self {
            Guard::True => {}
            Guard::Cond(c) => {
                refs.insert(c.lhs.clone());
                if let CondRhs::Fluent(r) = &c.rhs {
                    refs.insert(r.clone());
                }
            }
            Guard::Not(g) => g.collect_refs(refs),
            Guard::And(gs) | Guard::Or(gs) => {
                for g in gs {
                    g.collect_refs(refs);
                }
            }
        }
    }
}

/// Kind of an arc between a place and a transition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcKind {
    Input,
    Output,
    Reset,
    Inhibitor,
    Read,
}

/// A guarded arc. `weight` is empty for RESET arcs and nonempty otherwise;
/// an INHIBITOR weight is the threshold at which the transition is disabled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NetArc {
    pub kind: ArcKind,
    pub place: String,
    pub transition: String,
    pub guard: Guard,
    pub weight: ColoredMultiset,
}

/// Marking-dependent stimulation: while `guard` holds, the transition's
/// consumption and production scale by `factor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stimulation {
    pub guard: Guard,
    pub factor: u64,
}

/// A transition with its guard, priority (lower number = higher priority),
/// duration in time steps, optional stimulation, and must-fire guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionDef {
    pub id: String,
    pub guard: Guard,
    pub priority: u64,
    pub duration: u64,
    pub stimulation: Option<Stimulation>,
    pub must_fire_guards: Vec<Guard>,
    pub reentrant: bool,
}

impl TransitionDef {
    /// A transition with default attributes: guard TRUE, priority 1,
    /// duration 1, no stimulation, no must-fire guards, reentrant.
    pub fn new(id: &str) -> Self {
        Self {
            id: id.to_string(),
            guard: Guard::True,
            priority: 1,
            duration: 1,
            stimulation: None,
            must_fire_guards: Vec::new(),
            reentrant: true,
        }
    }
}

/// A place with its per-color caps: colors in `binary_colors` are capped at
/// one token, all others are unbounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceDef {
    pub id: String,
    pub binary_colors: BTreeSet<String>,
}

impl PlaceDef {
    pub fn new(id: &str) -> Self {
        Self {
            id: id.to_string(),
            binary_colors: BTreeSet::new(),
        }
    }

    /// Cap for `color`: `Some(1)` when binary, `None` when unbounded.
    pub fn cap(&self, color: &str) -> Option<u64> {
        if self.binary_colors.contains(color) {
            Some(1)
        } else {
            None
        }
    }
}

/// Token assignment of each place.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Marking {
    places: BTreeMap<String, ColoredMultiset>,
}

impl Marking {
    /// The empty marking over no places.
    pub fn new() -> Self {
        Self::default()
    }

    /// A marking with an (empty) entry for every given place.
    pub fn with_places<'a>(places: impl IntoIterator<Item = &'a str>) -> Self {
        let mut m = Self::new();
        for p in places {
            m.places.insert(p.to_string(), ColoredMultiset::new());
        }
        m
    }

    /// Tokens at `place`, or `None` when the place is unknown.
    pub fn get(&self, place: &str) -> Option<&ColoredMultiset> {
        self.places.get(place)
    }

    /// Replaces the tokens at `place`.
    pub fn set(&mut self, place: &str, tokens: ColoredMultiset) {
        self.places.insert(place.to_string(), tokens);
    }

    /// Count of `color` at `place` (0 when the place is known but empty).
    pub fn count(&self, place: &str, color: &str) -> u64 {
        self.places.get(place).map_or(0, |ms| ms.count(color))
    }

    /// Iterates (place, tokens) in place order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &ColoredMultiset)> {
        self.places.iter().map(|(p, ms)| (p.as_str(), ms))
    }

    /// Place ids present in the marking.
    pub fn place_ids(&self) -> impl Iterator<Item = &str> {
        self.places.keys().map(|p| p.as_str())
    }

    /// True when the marking has an entry for `place`.
    pub fn has_place(&self, place: &str) -> bool {
        self.places.contains_key(place)
    }

    /// Value of a fluent reference under this marking.
    pub fn resolve(&self, fluent: &FluentRef) -> Result<u64, ModelError> {
        let (place, color) = fluent.place_color();
        match self.places.get(place) {
            Some(ms) => Ok(ms.count(color)),
            None => Err(ModelError::UnknownFluent {
                fluent: fluent.to_string(),
            }),
        }
    }
}

/// How candidate firing sets are selected at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiringStyle {
    /// At most one transition fires per step ("1").
    Serial,
    /// Any non-overconsuming subset of the enabled transitions fires ("*").
    Any,
    /// Only inclusion-maximal non-overconsuming subsets fire ("max").
    Max,
}

impl FiringStyle {
    /// Parses the pathway-language spelling: "1", "*", or "max".
    pub fn parse(text: &str) -> Option<FiringStyle> {
        match text {
            "1" => Some(FiringStyle::Serial),
            "*" => Some(FiringStyle::Any),
            "max" => Some(FiringStyle::Max),
            _ => None,
        }
    }
}

impl fmt::Display for FiringStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiringStyle::Serial => write!(f, "1"),
            FiringStyle::Any => write!(f, "*"),
            FiringStyle::Max => write!(f, "max"),
        }
    }
}

/// A guarded-arc Petri net. Places and transitions keep declaration order;
/// the simulator uses it for canonical branch ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardedNet {
    pub places: Vec<PlaceDef>,
    pub colors: BTreeSet<String>,
    pub transitions: Vec<TransitionDef>,
    pub arcs: Vec<NetArc>,
    pub initial_marking: Marking,
    pub firing_style: FiringStyle,
}

impl GuardedNet {
    /// An empty net with the given firing style.
    pub fn new(firing_style: FiringStyle) -> Self {
        Self {
            places: Vec::new(),
            colors: BTreeSet::new(),
            transitions: Vec::new(),
            arcs: Vec::new(),
            initial_marking: Marking::new(),
            firing_style,
        }
    }

    pub fn place(&self, id: &str) -> Option<&PlaceDef> {
        self.places.iter().find(|p| p.id == id)
    }

    pub fn transition(&self, id: &str) -> Option<&TransitionDef> {
        self.transitions.iter().find(|t| t.id == id)
    }

    /// Declaration index of a transition, used for canonical ordering.
    pub fn transition_index(&self, id: &str) -> Option<usize> {
        self.transitions.iter().position(|t| t.id == id)
    }

    /// Arcs of the given kind attached to transition `t`.
    pub fn arcs_of<'a>(&'a self, t: &'a str, kind: ArcKind) -> impl Iterator<Item = &'a NetArc> {
        self.arcs
            .iter()
            .filter(move |a| a.transition == t && a.kind == kind)
    }

    /// The initial marking extended with an empty entry for every place.
    pub fn initial_state(&self) -> Marking {
        let mut m = self.initial_marking.clone();
        for p in &self.places {
            if !m.has_place(&p.id) {
                m.set(&p.id, ColoredMultiset::new());
            }
        }
        m
    }
}

/// Truth value of a guard under the valuation induced by a marking.
pub fn guard_satisfied(guard: &Guard, marking: &Marking) -> Result<bool, ModelError> {
    match guard {
        Guard::True => Ok(true),
        Guard::Cond(c) => {
            let lhs = marking.resolve(&c.lhs)?;
            let rhs = match &c.rhs {
                CondRhs::Const(v) => *v,
                CondRhs::Fluent(r) => marking.resolve(r)?,
            };
            Ok(match c.kind {
                CondKind::Lt => lhs < rhs,
                CondKind::Le => lhs <= rhs,
                CondKind::Gt => lhs > rhs,
                CondKind::Ge => lhs >= rhs,
                CondKind::Eq => lhs == rhs,
            })
        }
        Guard::Not(g) => Ok(!guard_satisfied(g, marking)?),
        Guard::And(gs) => {
            for g in gs {
                if !guard_satisfied(g, marking)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Guard::Or(gs) => {
            for g in gs {
                if guard_satisfied(g, marking)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ModelError;

    fn cond(lhs: FluentRef, kind: CondKind, rhs: u64) -> Guard {
        Guard::Cond(Condition::new(lhs, kind, CondRhs::Const(rhs)))
    }

    #[test]
    fn true_guard_holds_anywhere() {
        let marking = Marking::new();
        assert!(guard_satisfied(&Guard::True, &marking).unwrap());
    }

    #[test]
    fn simple_fluent_reads_default_color() {
        let mut marking = Marking::new();
        marking.set("f1", ColoredMultiset::plain(3));
        let g = cond(FluentRef::simple("f1"), CondKind::Lt, 5);
        assert!(guard_satisfied(&g, &marking).unwrap());
    }

    #[test]
    fn locational_conjunction_evaluates_the_tree() {
        let mut marking = Marking::new();
        marking.set("l1", ColoredMultiset::from_pairs([("f3", 5)]));
        let g = Guard::And(vec![
            cond(FluentRef::at("f3", "l1"), CondKind::Gt, 7),
            Guard::Not(Box::new(cond(FluentRef::at("f3", "l1"), CondKind::Lt, 3))),
        ]);
        assert!(!guard_satisfied(&g, &marking).unwrap());
    }

    #[test]
    fn missing_place_is_an_unknown_fluent() {
        let marking = Marking::new();
        let g = cond(FluentRef::simple("f9"), CondKind::Ge, 1);
        assert_eq!(
            guard_satisfied(&g, &marking),
            Err(ModelError::UnknownFluent { fluent: "f9".to_string() })
        );
    }

    #[test]
    fn fluent_against_fluent_comparison() {
        let mut marking = Marking::new();
        marking.set("l1", ColoredMultiset::from_pairs([("f1", 4)]));
        marking.set("l2", ColoredMultiset::from_pairs([("f1", 2)]));
        let g = Guard::Cond(Condition::new(
            FluentRef::at("f1", "l1"),
            CondKind::Gt,
            CondRhs::Fluent(FluentRef::at("f1", "l2")),
        ));
        assert!(guard_satisfied(&g, &marking).unwrap());
    }

    #[test]
    fn marking_resolve_follows_the_reference_shape() {
        let mut marking = Marking::new();
        marking.set("f", ColoredMultiset::plain(7));
        marking.set("l", ColoredMultiset::from_pairs([("f", 2)]));
        assert_eq!(marking.resolve(&FluentRef::simple("f")).unwrap(), 7);
        assert_eq!(marking.resolve(&FluentRef::at("f", "l")).unwrap(), 2);
    }

    #[test]
    fn firing_style_round_trips_through_text() {
        for style in [FiringStyle::Serial, FiringStyle::Any, FiringStyle::Max] {
            assert_eq!(FiringStyle::parse(&style.to_string()), Some(style));
        }
        assert_eq!(FiringStyle::parse("serial"), None);
    }
}
