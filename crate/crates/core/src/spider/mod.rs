//! Double spiders: two hubs joined by a core path, each hub carrying at least
//! two pendant paths.
//!
//! A [`DoubleSpiderSpec`] is whatever the user wrote down. [`canonicalize`]
//! picks the orientation the constructions expect (the left hub carries at
//! least as many paths as the right one) and sorts each side ascending. Two
//! specs describe isomorphic trees exactly when their canonical forms are
//! equal.

mod address;
mod enumerate;
mod format;
mod layout;
mod params;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use address::{AddressParseError, EdgeAddress, VertexAddress};
pub use enumerate::{enumerate_instances, Instances};
pub use format::{format_instance, parse_instance};
pub use layout::SpiderLayout;
pub use params::{classify, CaseTag, Parameters};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiderError {
    #[error("core length must be at least 1")]
    EmptyCore,
    #[error("the {side} side needs at least two paths, got {count}")]
    TooFewPaths { side: Side, count: usize },
    #[error("path lengths must be positive (found 0 on the {0} side)")]
    ZeroLength(Side),
    #[error("sides are not in canonical orientation")]
    NotCanonical,
    #[error("every pendant path must have length at least 2 to delete a leaf level")]
    UnitPathPresent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A double spider as written: core length plus the pendant path lengths on
/// each hub, in any order and orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleSpiderSpec {
    pub core_length: usize,
    pub left_lengths: Vec<usize>,
    pub right_lengths: Vec<usize>,
}

impl DoubleSpiderSpec {
    pub fn new(core_length: usize, left_lengths: Vec<usize>, right_lengths: Vec<usize>) -> Self {
        DoubleSpiderSpec { core_length, left_lengths, right_lengths }
    }

    pub fn validate(&self) -> Result<(), SpiderError> {
        if self.core_length == 0 {
            return Err(SpiderError::EmptyCore);
        }
        for (side, lengths) in [(Side::Left, &self.left_lengths), (Side::Right, &self.right_lengths)] {
            if lengths.len() < 2 {
                return Err(SpiderError::TooFewPaths { side, count: lengths.len() });
            }
            if lengths.contains(&0) {
                return Err(SpiderError::ZeroLength(side));
            }
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.core_length + self.left_lengths.iter().sum::<usize>() + self.right_lengths.iter().sum::<usize>()
    }
}

/// A double spider in canonical orientation with both sides sorted ascending.
///
/// Orientation rule: the left side has at least as many paths; on equal
/// counts the side with more copies of the globally shortest path length is
/// the right side, and remaining ties put the lexicographically smaller
/// sorted sequence on the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalDoubleSpider {
    core: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

pub fn canonicalize(spec: &DoubleSpiderSpec) -> Result<CanonicalDoubleSpider, SpiderError> {
    spec.validate()?;
    let mut left = spec.left_lengths.clone();
    let mut right = spec.right_lengths.clone();
    left.sort_unstable();
    right.sort_unstable();
    if should_swap(&left, &right) {
        std::mem::swap(&mut left, &mut right);
    }
    Ok(CanonicalDoubleSpider { core: spec.core_length, left, right })
}

/// Decides whether sorted sides `left`/`right` must be exchanged.
pub(crate) fn should_swap(left: &[usize], right: &[usize]) -> bool {
    match left.len().cmp(&right.len()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let shortest = left[0].min(right[0]);
            let copies = |side: &[usize]| side.iter().filter(|&&l| l == shortest).count();
            match copies(left).cmp(&copies(right)) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => left < right,
            }
        }
    }
}

impl CanonicalDoubleSpider {
    /// Accepts sides that are already canonical (after sorting each side);
    /// refuses to reorient.
    pub fn from_sides(core: usize, left: Vec<usize>, right: Vec<usize>) -> Result<Self, SpiderError> {
        let spec = DoubleSpiderSpec::new(core, left, right);
        let canonical = canonicalize(&spec)?;
        let mut left = spec.left_lengths;
        left.sort_unstable();
        if canonical.left != left {
            return Err(SpiderError::NotCanonical);
        }
        Ok(canonical)
    }

    pub fn core(&self) -> usize {
        self.core
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn edge_count(&self) -> usize {
        self.core + self.left.iter().sum::<usize>() + self.right.iter().sum::<usize>()
    }

    pub fn to_spec(&self) -> DoubleSpiderSpec {
        DoubleSpiderSpec::new(self.core, self.left.clone(), self.right.clone())
    }

    pub fn parameters(&self) -> Parameters {
        Parameters::derive(self)
    }

    pub fn materialize(&self) -> SpiderLayout {
        SpiderLayout::new(self)
    }

    /// Shortens every pendant path by one edge (removes the leaf set).
    pub fn delete_leaf_level(&self) -> Result<CanonicalDoubleSpider, SpiderError> {
        if self.left.iter().chain(&self.right).any(|&l| l < 2) {
            return Err(SpiderError::UnitPathPresent);
        }
        let shrink = |side: &[usize]| side.iter().map(|l| l - 1).collect::<Vec<_>>();
        // A uniform decrement preserves counts, minimum multiplicities and
        // lexicographic order, so the orientation stays canonical.
        Ok(CanonicalDoubleSpider { core: self.core, left: shrink(&self.left), right: shrink(&self.right) })
    }

    /// Sort key used by the enumeration: edge count, core, right, left.
    pub(crate) fn enumeration_key(&self) -> (usize, usize, &[usize], &[usize]) {
        (self.edge_count(), self.core, &self.right, &self.left)
    }
}

impl fmt::Display for CanonicalDoubleSpider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "core={} left={{{}}} right={{{}}}", self.core, join(&self.left), join(&self.right))
    }
}
