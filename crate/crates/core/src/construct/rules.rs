//! Bookkeeping shared by the base rules: records each assignment with its
//! step number and rejects relabeled edges or labels outside `1..=m`.

use super::{ConstructError, TraceEntry};
use crate::labeling::EdgeLabeling;
use crate::spider::{EdgeAddress, SpiderLayout};

/// Output of a base rule: the labeling plus the assignment trace in the
/// order the steps made them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleLabeling {
    pub labeling: EdgeLabeling,
    pub trace: Vec<TraceEntry>,
}

impl RuleLabeling {
    /// Label range `(min, max)` handed out by `step`, if it assigned anything.
    pub fn step_range(&self, step: u8) -> Option<(usize, usize)> {
        let labels = self.trace.iter().filter(|e| e.step == step).map(|e| e.label);
        labels.fold(None, |acc, l| match acc {
            None => Some((l, l)),
            Some((lo, hi)) => Some((lo.min(l), hi.max(l))),
        })
    }
}

pub(crate) struct RuleBuilder<'a> {
    layout: &'a SpiderLayout,
    labels: Vec<Option<usize>>,
    used: Vec<bool>,
    trace: Vec<TraceEntry>,
}

impl<'a> RuleBuilder<'a> {
    pub(crate) fn new(layout: &'a SpiderLayout) -> Self {
        let m = layout.edge_count();
        RuleBuilder { layout, labels: vec![None; m], used: vec![false; m + 1], trace: Vec::new() }
    }

    pub(crate) fn set(&mut self, step: u8, edge: EdgeAddress, label: i64) -> Result<(), ConstructError> {
        let conflict = |reason: String| ConstructError::RuleConflict { step, edge, reason };
        let id = self.layout.edge_id(&edge).ok_or_else(|| conflict("no such edge".into()))?;
        let m = self.labels.len();
        if label < 1 || label as usize > m {
            return Err(conflict(format!("label {label} outside 1..={m}")));
        }
        let label = label as usize;
        if let Some(old) = self.labels[id] {
            return Err(conflict(format!("already labeled {old}")));
        }
        if self.used[label] {
            return Err(conflict(format!("label {label} already used")));
        }
        self.labels[id] = Some(label);
        self.used[label] = true;
        self.trace.push(TraceEntry { step, edge, label });
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<RuleLabeling, ConstructError> {
        let layout = self.layout;
        let labels = self
            .labels
            .into_iter()
            .enumerate()
            .map(|(id, l)| l.ok_or_else(|| ConstructError::Unlabeled(layout.edge_address(id))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RuleLabeling { labeling: EdgeLabeling::new(labels), trace: self.trace })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spider::{canonicalize, DoubleSpiderSpec};

    fn layout() -> SpiderLayout {
        canonicalize(&DoubleSpiderSpec::new(1, vec![1, 1], vec![1, 1])).unwrap().materialize()
    }

    #[test]
    fn rejects_conflicts() {
        let l = layout();
        let mut b = RuleBuilder::new(&l);
        b.set(1, EdgeAddress::Core(1), 5).unwrap();
        assert!(matches!(b.set(2, EdgeAddress::Core(1), 4), Err(ConstructError::RuleConflict { step: 2, .. })));
        assert!(b.set(2, EdgeAddress::LeftUnit(1), 5).is_err());
        assert!(b.set(2, EdgeAddress::LeftUnit(1), 0).is_err());
        assert!(b.set(2, EdgeAddress::LeftUnit(1), 6).is_err());
        assert!(b.set(2, EdgeAddress::LeftUnit(3), 1).is_err());
        assert_eq!(b.finish().unwrap_err(), ConstructError::Unlabeled(EdgeAddress::RightOdd { path: 1, pos: 1 }));
    }

    #[test]
    fn step_ranges() {
        let l = layout();
        let mut b = RuleBuilder::new(&l);
        b.set(1, EdgeAddress::RightOdd { path: 1, pos: 1 }, 1).unwrap();
        b.set(1, EdgeAddress::RightOdd { path: 2, pos: 1 }, 2).unwrap();
        b.set(2, EdgeAddress::LeftUnit(1), 3).unwrap();
        b.set(2, EdgeAddress::LeftUnit(2), 4).unwrap();
        b.set(3, EdgeAddress::Core(1), 5).unwrap();
        let r = b.finish().unwrap();
        assert_eq!(r.labeling.labels(), &[5, 1, 2, 3, 4]);
        assert_eq!(r.step_range(2), Some((3, 4)));
        assert_eq!(r.step_range(9), None);
        assert_eq!(r.trace[0].to_string(), "step=1 edge=R/odd/1/1 label=1");
    }
}
