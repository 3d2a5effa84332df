//! Edge labelings, vertex sums and the (strongly) antimagic checks.
//!
//! A labeling of a tree with `m` edges assigns each edge id a label; it is
//! valid when the labels are exactly `1..=m`. The vertex sum of `u` is the
//! sum of the labels on edges at `u`. Antimagic means all vertex sums differ;
//! strongly antimagic adds that a vertex of smaller degree always has the
//! smaller sum.

mod file;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::tree::Tree;

pub use file::{format_labeling, parse_labeling, LabelingFile, LabelingFileError};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<usize>,
}

impl EdgeLabeling {
    /// `labels[e]` is the label of edge id `e`.
    pub fn new(labels: Vec<usize>) -> Self {
        EdgeLabeling { labels }
    }

    pub fn total_edges(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    /// First reason the labels are not a bijection onto `1..=m`, if any.
    pub fn bijection_defect(&self) -> Option<BijectionDefect> {
        let m = self.labels.len();
        let mut seen = vec![false; m + 1];
        for &l in &self.labels {
            if l == 0 || l > m {
                return Some(BijectionDefect::OutOfRange { label: l, max: m });
            }
            if seen[l] {
                return Some(BijectionDefect::Repeated(l));
            }
            seen[l] = true;
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BijectionDefect {
    OutOfRange { label: usize, max: usize },
    Repeated(usize),
}

impl fmt::Display for BijectionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BijectionDefect::OutOfRange { label, max } => write!(f, "label {label} is outside 1..={max}"),
            BijectionDefect::Repeated(l) => write!(f, "label {l} is used more than once"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling covers {labels} edges but the tree has {edges}")]
    EdgeCountMismatch { edges: usize, labels: usize },
    #[error("not a bijection: {0}")]
    NotBijective(BijectionDefect),
}

/// Vertex id with its degree and sum, as reported in violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexSum {
    pub vertex: usize,
    pub degree: usize,
    pub sum: usize,
}

impl fmt::Display for VertexSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} (degree {}, sum {})", self.vertex, self.degree, self.sum)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotBijective(BijectionDefect),
    /// Two vertices share a sum.
    EqualSums {
        first: VertexSum,
        second: VertexSum,
    },
    /// `lower` has smaller degree than `higher` but not a smaller sum.
    DegreeOrder {
        lower: VertexSum,
        higher: VertexSum,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotBijective(d) => write!(f, "bijection: {d}"),
            Violation::EqualSums { first, second } => write!(f, "equal sums: {first} and {second}"),
            Violation::DegreeOrder { lower, higher } => {
                write!(f, "degree order: {lower} does not sum below {higher}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSumReport {
    pub sums: Vec<usize>,
    pub degrees: Vec<usize>,
    /// Degree -> vertices of that degree, ascending ids.
    pub degree_classes: BTreeMap<usize, Vec<usize>>,
    pub bijection_ok: bool,
    pub antimagic_ok: bool,
    pub strong_ok: bool,
    /// First offending pair when `strong_ok` is false, scanning vertices in
    /// (degree, id) order.
    pub violation: Option<Violation>,
}

impl VertexSumReport {
    /// Full evaluation. Never fails; a wrong edge count is a caller bug and
    /// panics, use [`verify_strongly_antimagic`] for checked input.
    pub fn evaluate(tree: &Tree, labeling: &EdgeLabeling) -> Self {
        let sums = sums_unchecked(tree, labeling);
        let degrees = tree.degrees();
        let mut degree_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &d) in degrees.iter().enumerate() {
            degree_classes.entry(d).or_default().push(v);
        }
        let defect = labeling.bijection_defect();
        let mut report = VertexSumReport {
            sums,
            degrees,
            degree_classes,
            bijection_ok: defect.is_none(),
            antimagic_ok: false,
            strong_ok: false,
            violation: defect.map(Violation::NotBijective),
        };
        if report.bijection_ok {
            report.antimagic_ok = report.sums_distinct();
            report.strong_ok = report.antimagic_ok && report.degree_monotone();
            if !report.strong_ok {
                report.violation = report.first_violation();
            }
        }
        report
    }

    pub fn sum(&self, v: usize) -> usize {
        self.sums[v]
    }

    pub fn vertex_sum(&self, v: usize) -> VertexSum {
        VertexSum { vertex: v, degree: self.degrees[v], sum: self.sums[v] }
    }

    /// Sums of the vertices of degree `k`, ascending.
    pub fn class_sums(&self, k: usize) -> Vec<usize> {
        let mut s: Vec<usize> =
            self.degree_classes.get(&k).map_or(Vec::new(), |vs| vs.iter().map(|&v| self.sums[v]).collect());
        s.sort_unstable();
        s
    }

    fn sums_distinct(&self) -> bool {
        let mut sorted = self.sums.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Every occupied degree class sits strictly above all lower classes.
    fn degree_monotone(&self) -> bool {
        let mut below: Option<usize> = None;
        for vs in self.degree_classes.values() {
            let lo = vs.iter().map(|&v| self.sums[v]).min().expect("classes are nonempty");
            let hi = vs.iter().map(|&v| self.sums[v]).max().expect("classes are nonempty");
            if below.is_some_and(|b| b >= lo) {
                return false;
            }
            below = Some(below.map_or(hi, |b| b.max(hi)));
        }
        true
    }

    fn first_violation(&self) -> Option<Violation> {
        let mut order: Vec<usize> = (0..self.sums.len()).collect();
        order.sort_by_key(|&v| (self.degrees[v], v));
        for (i, &u) in order.iter().enumerate() {
            for &v in &order[i + 1..] {
                let (a, b) = (self.vertex_sum(u), self.vertex_sum(v));
                if a.sum == b.sum {
                    return Some(Violation::EqualSums { first: a, second: b });
                }
                if a.degree < b.degree && a.sum > b.sum {
                    return Some(Violation::DegreeOrder { lower: a, higher: b });
                }
            }
        }
        None
    }
}

fn sums_unchecked(tree: &Tree, labeling: &EdgeLabeling) -> Vec<usize> {
    assert_eq!(tree.edge_count(), labeling.total_edges(), "labeling does not match tree");
    let mut sums = vec![0; tree.vertex_count()];
    for (e, &(u, v)) in tree.edges().iter().enumerate() {
        sums[u] += labeling.label(e);
        sums[v] += labeling.label(e);
    }
    sums
}

fn check_sizes(tree: &Tree, labeling: &EdgeLabeling) -> Result<(), LabelingError> {
    if tree.edge_count() != labeling.total_edges() {
        return Err(LabelingError::EdgeCountMismatch { edges: tree.edge_count(), labels: labeling.total_edges() });
    }
    Ok(())
}

/// `sums[v]` is the vertex sum at vertex id `v`.
pub fn vertex_sums(tree: &Tree, labeling: &EdgeLabeling) -> Result<Vec<usize>, LabelingError> {
    check_sizes(tree, labeling)?;
    Ok(sums_unchecked(tree, labeling))
}

pub fn verify_bijection(labeling: &EdgeLabeling) -> bool {
    labeling.bijection_defect().is_none()
}

pub fn verify_antimagic(tree: &Tree, labeling: &EdgeLabeling) -> Result<bool, LabelingError> {
    Ok(verify_strongly_antimagic(tree, labeling)?.antimagic_ok)
}

/// Evaluates the labeling; `strong_ok` on the returned report is the verdict.
pub fn verify_strongly_antimagic(tree: &Tree, labeling: &EdgeLabeling) -> Result<VertexSumReport, LabelingError> {
    check_sizes(tree, labeling)?;
    if let Some(defect) = labeling.bijection_defect() {
        return Err(LabelingError::NotBijective(defect));
    }
    Ok(VertexSumReport::evaluate(tree, labeling))
}
