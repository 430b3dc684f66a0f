// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Named-inequality reports shared by every verification routine.

use alloc::string::String;
use alloc::vec::Vec;

/// How an entry's two sides are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum BoundKind {
    /// `lhs < rhs`; passes only with a strictly positive margin.
    Strict,
    /// `lhs ≤ rhs`; a zero margin passes.
    NonStrict,
    /// `lhs = rhs`; margin is minus the absolute residual.
    Identity,
}

/// One checked inequality.
///
/// `margin` is `rhs - lhs` for inequalities (in whatever units the producer
/// states, log units for the lattice bounds) and `-|lhs - rhs|` for identities.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub passed: bool,
}

impl BoundEntry {
    /// Entry for `lhs ≤ rhs` (or `<` when `kind` is [`BoundKind::Strict`]).
    pub fn compare(name: impl Into<String>, kind: BoundKind, lhs: f64, rhs: f64) -> Self {
        let margin = rhs - lhs;
        Self::with_margin(name, kind, lhs, rhs, margin)
    }

    /// Entry whose pass/fail is decided by an externally computed `margin`
    /// (for example a certified lower bound of `rhs - lhs`).
    pub fn with_margin(name: impl Into<String>, kind: BoundKind, lhs: f64, rhs: f64, margin: f64) -> Self {
        let passed = match kind {
            BoundKind::Strict => margin > 0.0,
            BoundKind::NonStrict => margin >= 0.0,
            BoundKind::Identity => margin >= 0.0,
        };
        Self {
            name: name.into(),
            kind,
            lhs,
            rhs,
            margin,
            passed,
        }
    }

    /// Entry for `lhs = rhs` up to `tol`.
    pub fn identity(name: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let residual = (lhs - rhs).abs();
        Self {
            name: name.into(),
            kind: BoundKind::Identity,
            lhs,
            rhs,
            margin: -residual,
            passed: residual <= tol,
        }
    }

    /// Entry for an identity that was decided exactly (for instance with
    /// integer arithmetic); `lhs` and `rhs` are only informative.
    pub fn exact_identity(name: impl Into<String>, lhs: f64, rhs: f64, holds: bool) -> Self {
        Self {
            name: name.into(),
            kind: BoundKind::Identity,
            lhs,
            rhs,
            margin: 0.0,
            passed: holds,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub title: String,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: BoundEntry) {
        self.entries.push(entry);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    /// Smallest margin among the inequality entries.
    pub fn worst_margin(&self) -> Option<f64> {
        self.entries
            .iter()
            .filter(|e| e.kind != BoundKind::Identity)
            .map(|e| e.margin)
            .reduce(f64::min)
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_needs_positive_margin() {
        assert!(!BoundEntry::compare("a", BoundKind::Strict, 1.0, 1.0).passed);
        assert!(BoundEntry::compare("a", BoundKind::NonStrict, 1.0, 1.0).passed);
        assert!(BoundEntry::compare("a", BoundKind::Strict, 0.5, 1.0).passed);
    }

    #[test]
    fn report_aggregates() {
        let mut r = BoundReport::new("t");
        r.push(BoundEntry::compare("ok", BoundKind::NonStrict, 0.0, 2.0));
        r.push(BoundEntry::identity("id", 1.0, 1.0 + 1e-15, 1e-12));
        assert!(r.passed());
        assert_eq!(r.worst_margin(), Some(2.0));
        r.push(BoundEntry::compare("bad", BoundKind::NonStrict, 3.0, 2.0));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.worst_margin(), Some(-1.0));
    }
}
