//! Colored multisets: the universal token/weight/marking payload.

use std::collections::BTreeMap;
use std::fmt;

use crate::ModelError;

/// Color used for simple (non-locational) fluents.
pub const DEFAULT_COLOR: &str = "_";

/// A multiset of colored tokens. Counts are always >= 1; zero entries are
/// absent, so equality is extensional over nonzero entries.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct ColoredMultiset {
    counts: BTreeMap<String, u64>,
}

impl ColoredMultiset {
    /// The empty multiset.
    pub fn new() -> Self {
        Self::default()
    }

    /// A singleton multiset of `count` tokens of `color`.
    pub fn of(color: &str, count: u64) -> Self {
        let mut ms = Self::new();
        ms.set(color, count);
        ms
    }

    /// A multiset of `count` tokens of the default color.
    pub fn plain(count: u64) -> Self {
        Self::of(DEFAULT_COLOR, count)
    }

    /// Builds a multiset from (color, count) pairs; zero counts are dropped.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, u64)>) -> Self {
        let mut ms = Self::new();
        for (color, count) in pairs {
            ms.set(color, count);
        }
        ms
    }

    /// Tokens of `color` (0 when absent).
    pub fn count(&self, color: &str) -> u64 {
        self.counts.get(color).copied().unwrap_or(0)
    }

    /// Sets the count for `color`, removing the entry when it reaches 0.
    pub fn set(&mut self, color: &str, count: u64) {
        if count == 0 {
            self.counts.remove(color);
        } else {
            self.counts.insert(color.to_string(), count);
        }
    }

    /// True when no color has tokens.
    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Iterates (color, count) pairs in color order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(c, n)| (c.as_str(), *n))
    }

    /// Colors with a nonzero count, in order.
    pub fn colors(&self) -> impl Iterator<Item = &str> {
        self.counts.keys().map(|c| c.as_str())
    }

    /// Total tokens across all colors.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl fmt::Display for ColoredMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (color, count)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{color}:{count}")?;
        }
        write!(f, "}}")
    }
}

/// Pointwise sum per color.
pub fn ms_add(a: &ColoredMultiset, b: &ColoredMultiset) -> ColoredMultiset {
    let mut out = a.clone();
    for (color, count) in b.iter() {
        out.set(color, out.count(color) + count);
    }
    out
}

/// Pointwise difference. The caller must guarantee `b <= a`; a violation
/// signals an internal semantics error and is reported as `Underflow`.
pub fn ms_sub_saturating(
    a: &ColoredMultiset,
    b: &ColoredMultiset,
) -> Result<ColoredMultiset, ModelError> {
    let mut out = a.clone();
    for (color, count) in b.iter() {
        let have = out.count(color);
        if count > have {
            return Err(ModelError::Underflow {
                color: color.to_string(),
            });
        }
        out.set(color, have - count);
    }
    Ok(out)
}

/// Every count multiplied by `n`.
pub fn ms_scale(a: &ColoredMultiset, n: u64) -> ColoredMultiset {
    let mut out = ColoredMultiset::new();
    for (color, count) in a.iter() {
        out.set(color, count * n);
    }
    out
}

/// True iff `a <= b` pointwise.
pub fn ms_leq(a: &ColoredMultiset, b: &ColoredMultiset) -> bool {
    a.iter().all(|(color, count)| count <= b.count(color))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_pointwise() {
        let a = ColoredMultiset::from_pairs([("h", 2)]);
        let b = ColoredMultiset::from_pairs([("h", 4), ("e", 1)]);
        assert_eq!(ms_add(&a, &b), ColoredMultiset::from_pairs([("h", 6), ("e", 1)]));
    }

    #[test]
    fn add_empty_is_identity() {
        assert_eq!(
            ms_add(&ColoredMultiset::new(), &ColoredMultiset::new()),
            ColoredMultiset::new()
        );
    }

    #[test]
    fn add_merges_disjoint_colors() {
        let a = ColoredMultiset::from_pairs([("nadh", 2), ("h", 2)]);
        let b = ColoredMultiset::from_pairs([("h", 2), ("h2o", 1)]);
        assert_eq!(
            ms_add(&a, &b),
            ColoredMultiset::from_pairs([("nadh", 2), ("h", 4), ("h2o", 1)])
        );
    }

    #[test]
    fn sub_is_pointwise() {
        let a = ColoredMultiset::from_pairs([("h", 6)]);
        let b = ColoredMultiset::from_pairs([("h", 4)]);
        assert_eq!(
            ms_sub_saturating(&a, &b).unwrap(),
            ColoredMultiset::from_pairs([("h", 2)])
        );
    }

    #[test]
    fn sub_to_zero_drops_the_color() {
        let a = ColoredMultiset::from_pairs([("h", 6)]);
        assert_eq!(ms_sub_saturating(&a, &a).unwrap(), ColoredMultiset::new());
    }

    #[test]
    fn sub_underflow_is_an_error() {
        let a = ColoredMultiset::from_pairs([("h", 2)]);
        let b = ColoredMultiset::from_pairs([("h", 4)]);
        assert_eq!(
            ms_sub_saturating(&a, &b),
            Err(ModelError::Underflow { color: "h".to_string() })
        );
    }

    #[test]
    fn scale_multiplies_every_count() {
        let a = ColoredMultiset::from_pairs([("gefitinib", 1)]);
        assert_eq!(ms_scale(&a, 2), ColoredMultiset::from_pairs([("gefitinib", 2)]));
        assert_eq!(ms_scale(&ColoredMultiset::new(), 5), ColoredMultiset::new());
        let b = ColoredMultiset::from_pairs([("e", 2), ("h", 2)]);
        assert_eq!(ms_scale(&b, 3), ColoredMultiset::from_pairs([("e", 6), ("h", 6)]));
    }

    #[test]
    fn leq_is_pointwise() {
        let a = ColoredMultiset::from_pairs([("h", 2)]);
        let b = ColoredMultiset::from_pairs([("h", 6), ("nadh", 2)]);
        assert!(ms_leq(&a, &b));
        assert!(!ms_leq(
            &ColoredMultiset::from_pairs([("h", 7)]),
            &ColoredMultiset::from_pairs([("h", 6)])
        ));
        let c = ColoredMultiset::from_pairs([("e", 2)]);
        assert!(ms_leq(&c, &c));
    }
}
