//! Operations that grow a strongly antimagic labeling into a labeling of a
//! larger tree while keeping it strongly antimagic.

use super::paths::PathLabels;
use super::ConstructError;
use crate::labeling::{verify_strongly_antimagic, EdgeLabeling, VertexSumReport};
use crate::spider::{CanonicalDoubleSpider, EdgeAddress, Side, SpiderLayout};
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub tree: Tree,
    pub labeling: EdgeLabeling,
    pub report: VertexSumReport,
}

impl LabeledTree {
    pub fn new(tree: Tree, labeling: EdgeLabeling) -> Result<Self, ConstructError> {
        let report = verify_strongly_antimagic(&tree, &labeling)?;
        Ok(LabeledTree { tree, labeling, report })
    }
}

/// A labeled canonical double spider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSpider {
    pub layout: SpiderLayout,
    pub labeling: EdgeLabeling,
    pub report: VertexSumReport,
}

impl LabeledSpider {
    pub fn new(layout: SpiderLayout, labeling: EdgeLabeling) -> Result<Self, ConstructError> {
        let report = verify_strongly_antimagic(layout.tree(), &labeling)?;
        Ok(LabeledSpider { layout, labeling, report })
    }

    pub fn spider(&self) -> &CanonicalDoubleSpider {
        self.layout.spider()
    }

    pub fn label_of(&self, edge: &EdgeAddress) -> Option<usize> {
        self.layout.edge_id(edge).map(|id| self.labeling.label(id))
    }

    /// `(phi(v_l), phi(v_r))`.
    pub fn hub_sums(&self) -> (usize, usize) {
        (self.report.sum(self.layout.left_hub()), self.report.sum(self.layout.right_hub()))
    }

    pub fn is_strong(&self) -> bool {
        self.report.strong_ok
    }

    pub fn to_labeled_tree(&self) -> LabeledTree {
        LabeledTree { tree: self.layout.tree().clone(), labeling: self.labeling.clone(), report: self.report.clone() }
    }

    fn require_strong(&self, stage: &str) -> Result<(), ConstructError> {
        if self.report.strong_ok {
            Ok(())
        } else {
            Err(ConstructError::NotStronglyAntimagic {
                stage: stage.to_string(),
                violation: self.report.violation.clone(),
            })
        }
    }
}

/// Hangs a new leaf on every vertex of degree `k`. New edges take labels
/// `1..=n` in increasing order of the old vertex sums; old labels move up by
/// `n`.
pub fn attach_pendants_to_degree_class(input: &LabeledTree, k: usize) -> Result<LabeledTree, ConstructError> {
    if !input.report.strong_ok {
        return Err(ConstructError::NotStronglyAntimagic {
            stage: "input".into(),
            violation: input.report.violation.clone(),
        });
    }
    let mut class = input.tree.vertices_of_degree(k);
    if class.is_empty() {
        return Err(ConstructError::EmptyDegreeClass(k));
    }
    class.sort_by_key(|&v| input.report.sum(v));
    let n = class.len();
    let tree = input.tree.with_pendants(&class);
    let labels = input.labeling.labels().iter().map(|l| l + n).chain(1..=n).collect();
    let out = LabeledTree::new(tree, EdgeLabeling::new(labels))?;
    if !out.report.strong_ok {
        return Err(ConstructError::NotStronglyAntimagic {
            stage: format!("pendants on degree {k}"),
            violation: out.report.violation.clone(),
        });
    }
    Ok(out)
}

/// [`attach_pendants_to_degree_class`] on the leaves.
pub fn extend_leaves(input: &LabeledTree) -> Result<LabeledTree, ConstructError> {
    attach_pendants_to_degree_class(input, 1).map_err(|e| match e {
        ConstructError::EmptyDegreeClass(_) => ConstructError::NoLeaves,
        other => other,
    })
}

/// Lengthens every pendant path of a labeled spider by one edge.
pub(crate) fn extend_spider_leaves(input: &LabeledSpider) -> Result<LabeledSpider, ConstructError> {
    input.require_strong("input")?;
    let grown = extend_leaves(&input.to_labeled_tree())?;
    let old_tree = input.layout.tree();
    let m = old_tree.edge_count();
    let new_label_at = |leaf: usize| {
        (m..grown.tree.edge_count()).find(|&e| grown.tree.edge(e).0 == leaf).map(|e| grown.labeling.label(e))
    };
    let mut paths = PathLabels::read(&input.layout, &grown.labeling);
    let sides = [(input.layout.left_paths(), &mut paths.left), (input.layout.right_paths(), &mut paths.right)];
    for (ids, labels) in sides {
        for (path_ids, path_labels) in ids.iter().zip(labels.iter_mut()) {
            let (u, v) = old_tree.edge(*path_ids.last().expect("paths are nonempty"));
            let leaf = if old_tree.degree(u) == 1 { u } else { v };
            path_labels.push(new_label_at(leaf).expect("every leaf received a pendant"));
        }
    }
    let (layout, labeling) = paths.build()?;
    let out = LabeledSpider::new(layout, labeling)?;
    out.require_strong("leaf extension")?;
    Ok(out)
}

/// Adds a unit path at one hub: the new edge is labeled 1, every old label
/// moves up by one.
///
/// On the left this needs `deg(v_l) > deg(v_r) >= 3` in the enlarged spider
/// and `phi(v_l) > phi(v_r)` in the input; on the right it needs
/// `deg(v_l) >= deg(v_r) > 3` in the enlarged spider.
pub fn insert_unit_path(input: &LabeledSpider, side: Side) -> Result<LabeledSpider, ConstructError> {
    const RULE: &str = "unit path insertion";
    input.require_strong("input")?;
    let p = input.layout.params();
    let (mut dl, mut dr) = (p.left_hub_degree(), p.right_hub_degree());
    match side {
        Side::Left => dl += 1,
        Side::Right => dr += 1,
    }
    match side {
        Side::Left => {
            if !(dl > dr && dr >= 3) {
                return Err(ConstructError::precondition(RULE, format!("hub degrees {dl}, {dr} after insertion")));
            }
            let (sl, sr) = input.hub_sums();
            if sl <= sr {
                return Err(ConstructError::precondition(RULE, format!("hub sums {sl} <= {sr}")));
            }
        }
        Side::Right => {
            if !(dl >= dr && dr > 3) {
                return Err(ConstructError::precondition(RULE, format!("hub degrees {dl}, {dr} after insertion")));
            }
        }
    }
    let mut paths = PathLabels::read(&input.layout, &input.labeling);
    paths.shift_all(1);
    match side {
        Side::Left => paths.left.insert(0, vec![1]),
        Side::Right => paths.right.insert(0, vec![1]),
    }
    let (layout, labeling) = paths.build()?;
    let out = LabeledSpider::new(layout, labeling)?;
    out.require_strong("unit path insertion")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{figure2_labeling, label_type_a};
    use crate::spider::{canonicalize, DoubleSpiderSpec};

    fn type_a(s: usize) -> LabeledSpider {
        let layout = canonicalize(&DoubleSpiderSpec::new(s, vec![1, 1], vec![1, 1])).unwrap().materialize();
        let rule = label_type_a(&layout).unwrap();
        LabeledSpider::new(layout, rule.labeling).unwrap()
    }

    #[test]
    fn pendant_labels_follow_old_sums() {
        let base = type_a(3).to_labeled_tree();
        let old_leaves = base.tree.leaves();
        let grown = extend_leaves(&base).unwrap();
        let m = base.tree.edge_count();
        for (i, e) in (m..grown.tree.edge_count()).enumerate() {
            let anchor = grown.tree.edge(e).0;
            let rank = old_leaves.iter().filter(|&&v| base.report.sum(v) < base.report.sum(anchor)).count();
            assert_eq!(grown.labeling.label(e), rank + 1, "edge {i}");
        }
        assert!(grown.report.strong_ok);
    }

    #[test]
    fn k2_has_no_strong_labeling_to_extend() {
        let k2 = LabeledTree::new(Tree::path(2), EdgeLabeling::new(vec![1])).unwrap();
        assert!(matches!(extend_leaves(&k2), Err(ConstructError::NotStronglyAntimagic { .. })));
    }

    #[test]
    fn missing_degree_class() {
        let base = type_a(1).to_labeled_tree();
        assert_eq!(attach_pendants_to_degree_class(&base, 5).unwrap_err(), ConstructError::EmptyDegreeClass(5));
        assert!(attach_pendants_to_degree_class(&base, 3).unwrap().report.strong_ok);
    }

    #[test]
    fn spider_leaf_extension_matches_shape() {
        let (layout, rule) = figure2_labeling();
        let fig = LabeledSpider::new(layout, rule.labeling).unwrap();
        let grown = extend_spider_leaves(&fig).unwrap();
        assert_eq!(grown.spider(), &canonicalize(&DoubleSpiderSpec::new(2, vec![2, 4], vec![2, 2])).unwrap());
        assert!(grown.is_strong());
    }

    #[test]
    fn left_insertion_shifts_sums() {
        let base = type_a(2);
        let out = insert_unit_path(&base, Side::Left).unwrap();
        assert_eq!(out.spider().left(), &[1, 1, 1]);
        let (sl, sr) = base.hub_sums();
        assert_eq!(out.hub_sums(), (sl + 3 + 1, sr + 3));
        assert_eq!(out.label_of(&EdgeAddress::Core(1)), Some(7));
    }

    #[test]
    fn insertion_preconditions() {
        let base = type_a(2);
        assert!(matches!(insert_unit_path(&base, Side::Right), Err(ConstructError::Precondition { .. })));
    }
}
