//! Labels of a double spider read path by path, independent of edge ids.
//! Used to carry a labeling across a change of shape.

use super::ConstructError;
use crate::labeling::EdgeLabeling;
use crate::spider::{should_swap, CanonicalDoubleSpider, SpiderLayout};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PathLabels {
    /// From the left hub to the right hub.
    pub core: Vec<usize>,
    /// Each path listed from its hub to its leaf.
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
}

impl PathLabels {
    pub fn read(layout: &SpiderLayout, labeling: &EdgeLabeling) -> Self {
        let grab = |ids: &[usize]| ids.iter().map(|&e| labeling.label(e)).collect::<Vec<_>>();
        PathLabels {
            core: grab(&layout.core_edges()),
            left: layout.left_paths().iter().map(|p| grab(p)).collect(),
            right: layout.right_paths().iter().map(|p| grab(p)).collect(),
        }
    }

    pub fn shift_all(&mut self, by: usize) {
        for l in self.core.iter_mut().chain(self.left.iter_mut().flatten()).chain(self.right.iter_mut().flatten()) {
            *l += by;
        }
    }

    /// Rebuilds the canonical spider with these labels, mirroring the whole
    /// picture when the path lengths call for the other orientation.
    pub fn build(mut self) -> Result<(SpiderLayout, EdgeLabeling), ConstructError> {
        self.left.sort_by_key(Vec::len);
        self.right.sort_by_key(Vec::len);
        let lengths = |side: &[Vec<usize>]| side.iter().map(Vec::len).collect::<Vec<_>>();
        if should_swap(&lengths(&self.left), &lengths(&self.right)) {
            std::mem::swap(&mut self.left, &mut self.right);
            self.core.reverse();
        }
        let spider = CanonicalDoubleSpider::from_sides(self.core.len(), lengths(&self.left), lengths(&self.right))?;
        let layout = spider.materialize();
        let mut labels = vec![0; layout.edge_count()];
        for (&id, &l) in layout.core_edges().iter().zip(&self.core) {
            labels[id] = l;
        }
        let sides = [(layout.left_paths(), &self.left), (layout.right_paths(), &self.right)];
        for (ids, values) in sides {
            for (path_ids, path_labels) in ids.iter().zip(values) {
                for (&id, &l) in path_ids.iter().zip(path_labels) {
                    labels[id] = l;
                }
            }
        }
        Ok((layout, EdgeLabeling::new(labels)))
    }
}
