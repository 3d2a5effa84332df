//! Constructive strongly antimagic labelings of double spiders.
//!
//! The base rules label a canonical spider edge by edge in numbered steps;
//! each step hands out a contiguous block of labels, in increasing order.
//! [`strongly_antimagic_label`] reduces an arbitrary double spider to one
//! the base rules cover, labels it, and grows the labeling back with the
//! composition operators in [`compose`].

mod compose;
mod driver;
mod even_right;
mod odd_right;
mod paths;
mod rules;
mod type_a;
mod type_bc;

use std::fmt;

use thiserror::Error;

use crate::labeling::{LabelingError, Violation};
use crate::spider::{EdgeAddress, SpiderError};

pub use compose::{attach_pendants_to_degree_class, extend_leaves, insert_unit_path, LabeledSpider, LabeledTree};
pub use driver::{label_canonical, strongly_antimagic_label, BaseRule, Construction, ReductionKind, ReductionStep};
pub use even_right::{label_even_right, EvenCaseContext};
pub use odd_right::label_odd_right;
pub use rules::RuleLabeling;
pub use type_a::label_type_a;
pub use type_bc::{figure2_labeling, figure2_spider, label_type_bc, TypeBcContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Spider(#[from] SpiderError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("{rule}: precondition violated: {reason}")]
    Precondition { rule: &'static str, reason: String },
    #[error("step {step}: edge {edge}: {reason}")]
    RuleConflict { step: u8, edge: EdgeAddress, reason: String },
    #[error("edge {0} was never labeled")]
    Unlabeled(EdgeAddress),
    #[error("{stage}: result is not strongly antimagic ({})", violation.as_ref().map_or("no witness".to_string(), |v| v.to_string()))]
    NotStronglyAntimagic { stage: String, violation: Option<Violation> },
    #[error("no vertex has degree {0}")]
    EmptyDegreeClass(usize),
    #[error("the tree has no leaves")]
    NoLeaves,
}

impl ConstructError {
    pub(crate) fn precondition(rule: &'static str, reason: impl Into<String>) -> Self {
        ConstructError::Precondition { rule, reason: reason.into() }
    }
}

/// One label assignment made by a base rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub step: u8,
    pub edge: EdgeAddress,
    pub label: usize,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step={} edge={} label={}", self.step, self.edge, self.label)
    }
}

/// Odd integers in `lo..=hi` (empty when `lo > hi`).
pub(crate) fn odd_in(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|j| j % 2 == 1)
}

/// Even integers in `lo..=hi`.
pub(crate) fn even_in(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|j| j % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_filters() {
        assert_eq!(odd_in(1, 7).collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert_eq!(odd_in(2, 7).collect::<Vec<_>>(), vec![3, 5, 7]);
        assert_eq!(even_in(4, 4).collect::<Vec<_>>(), vec![4]);
        assert_eq!(even_in(4, 2).count(), 0);
        assert_eq!(odd_in(3, 1).count(), 0);
    }
}
