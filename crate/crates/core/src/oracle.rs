//! Exact search for (strongly) antimagic labelings of small trees.
//!
//! Labels are handed out from `m` downward; each search node picks the edge
//! that receives the current label. A vertex whose edges are all labeled has
//! its final sum, and partially labeled vertices are bounded using the labels
//! still available (always `1..=next`). The search is complete: when it runs
//! to the end without a witness, none exists.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::labeling::EdgeLabeling;
use crate::tree::Tree;

pub const DEFAULT_MAX_EDGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Trees with more edges are refused outright.
    pub max_edges: usize,
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_edges: DEFAULT_MAX_EDGES, max_nodes: None, time_limit: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found {
        labeling: EdgeLabeling,
        nodes: u64,
    },
    /// The search space was exhausted.
    NoneExists {
        nodes: u64,
    },
    BudgetExhausted {
        nodes: u64,
    },
}

impl OracleOutcome {
    pub fn witness(&self) -> Option<&EdgeLabeling> {
        match self {
            OracleOutcome::Found { labeling, .. } => Some(labeling),
            _ => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match *self {
            OracleOutcome::Found { nodes, .. }
            | OracleOutcome::NoneExists { nodes }
            | OracleOutcome::BudgetExhausted { nodes } => nodes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("tree has {edges} edges; the search is limited to {max}")]
    TooLarge { edges: usize, max: usize },
}

pub fn find_strongly_antimagic(tree: &Tree, budget: &SearchBudget) -> Result<OracleOutcome, OracleError> {
    Search::run(tree, budget, true)
}

pub fn find_antimagic(tree: &Tree, budget: &SearchBudget) -> Result<OracleOutcome, OracleError> {
    Search::run(tree, budget, false)
}

struct Search<'a> {
    tree: &'a Tree,
    strong: bool,
    degrees: Vec<usize>,
    labels: Vec<usize>,
    sums: Vec<usize>,
    open: Vec<usize>,
    nodes: u64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    out_of_budget: bool,
}

impl<'a> Search<'a> {
    fn run(tree: &'a Tree, budget: &SearchBudget, strong: bool) -> Result<OracleOutcome, OracleError> {
        let m = tree.edge_count();
        if m > budget.max_edges {
            return Err(OracleError::TooLarge { edges: m, max: budget.max_edges });
        }
        let degrees = tree.degrees();
        let mut search = Search {
            tree,
            strong,
            open: degrees.clone(),
            degrees,
            labels: vec![0; m],
            sums: vec![0; tree.vertex_count()],
            nodes: 0,
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            out_of_budget: false,
        };
        let found = search.descend(m);
        let nodes = search.nodes;
        Ok(if found {
            OracleOutcome::Found { labeling: EdgeLabeling::new(search.labels), nodes }
        } else if search.out_of_budget {
            OracleOutcome::BudgetExhausted { nodes }
        } else {
            OracleOutcome::NoneExists { nodes }
        })
    }

    /// Places `label` (and every smaller one); true once all edges are set.
    fn descend(&mut self, label: usize) -> bool {
        if label == 0 {
            return true;
        }
        for e in self.candidate_edges() {
            self.nodes += 1;
            if self.max_nodes.is_some_and(|cap| self.nodes > cap)
                || (self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d))
            {
                self.out_of_budget = true;
                return false;
            }
            let (u, v) = self.tree.edge(e);
            self.assign(e, u, v, label);
            if self.feasible(label - 1) && self.descend(label - 1) {
                return true;
            }
            self.unassign(e, u, v);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }

    /// Unlabeled edges, those touching the fewest open slots first.
    fn candidate_edges(&self) -> Vec<usize> {
        let mut edges: Vec<usize> = (0..self.labels.len()).filter(|&e| self.labels[e] == 0).collect();
        edges.sort_by_key(|&e| {
            let (u, v) = self.tree.edge(e);
            (self.open[u].min(self.open[v]), e)
        });
        edges
    }

    fn assign(&mut self, e: usize, u: usize, v: usize, label: usize) {
        self.labels[e] = label;
        for w in [u, v] {
            self.sums[w] += label;
            self.open[w] -= 1;
        }
    }

    fn unassign(&mut self, e: usize, u: usize, v: usize) {
        let label = self.labels[e];
        self.labels[e] = 0;
        for w in [u, v] {
            self.sums[w] -= label;
            self.open[w] += 1;
        }
    }

    /// Range of final sums still reachable by `v` when labels `1..=avail`
    /// remain.
    fn reach(&self, v: usize, avail: usize) -> (usize, usize) {
        let r = self.open[v];
        let low = r * (r + 1) / 2;
        let high = if r <= avail { r * avail - r * (r.saturating_sub(1)) / 2 } else { usize::MAX / 4 };
        (self.sums[v] + low, self.sums[v] + high)
    }

    fn feasible(&self, avail: usize) -> bool {
        let n = self.sums.len();
        for u in 0..n {
            let (ulo, uhi) = self.reach(u, avail);
            for v in u + 1..n {
                let (vlo, vhi) = self.reach(v, avail);
                if self.open[u] == 0 && self.open[v] == 0 && self.sums[u] == self.sums[v] {
                    return false;
                }
                if self.strong {
                    let (du, dv) = (self.degrees[u], self.degrees[v]);
                    if du < dv && ulo >= vhi {
                        return false;
                    }
                    if dv < du && vlo >= uhi {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::VertexSumReport;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn k2_has_no_antimagic_labeling() {
        let k2 = Tree::path(2);
        assert!(matches!(find_antimagic(&k2, &budget()), Ok(OracleOutcome::NoneExists { .. })));
        assert!(matches!(find_strongly_antimagic(&k2, &budget()), Ok(OracleOutcome::NoneExists { .. })));
    }

    #[test]
    fn witnesses_verify() {
        for tree in [Tree::path(3), Tree::path(6), Tree::star(5)] {
            let out = find_strongly_antimagic(&tree, &budget()).unwrap();
            let labeling = out.witness().expect("paths and stars are strongly antimagic");
            assert!(VertexSumReport::evaluate(&tree, labeling).strong_ok);
        }
    }

    #[test]
    fn size_and_node_limits() {
        let big = Tree::path(12);
        assert_eq!(find_antimagic(&big, &budget()), Err(OracleError::TooLarge { edges: 11, max: 10 }));
        let tight = SearchBudget { max_edges: 20, max_nodes: Some(3), time_limit: None };
        assert!(matches!(find_strongly_antimagic(&Tree::path(15), &tight), Ok(OracleOutcome::BudgetExhausted { .. })));
    }

    #[test]
    fn antimagic_but_not_necessarily_strong_search() {
        let t = Tree::new(5, vec![(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let out = find_antimagic(&t, &budget()).unwrap();
        let report = VertexSumReport::evaluate(&t, out.witness().unwrap());
        assert!(report.antimagic_ok);
    }
}
