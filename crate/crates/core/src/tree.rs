//! Plain undirected trees with indexed vertices and edges.
//!
//! Vertices are `0..vertex_count()`, edges `0..edge_count()`. Edge `i` is the
//! unordered pair `edges()[i]`. Labelings are indexed by edge position, so
//! the edge order of a tree is part of its identity.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("edge {edge} references vertex {vertex}, but the tree has {vertices} vertices")]
    VertexOutOfRange { edge: usize, vertex: usize, vertices: usize },
    #[error("edge {0} is a self-loop")]
    SelfLoop(usize),
    #[error("expected {expected} edges for {vertices} vertices, got {got}")]
    EdgeCount { vertices: usize, expected: usize, got: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("a tree needs at least one vertex")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    /// incident edge ids per vertex
    incidence: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree, checking that the edge list is connected and acyclic.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() + 1 != vertex_count {
            return Err(TreeError::EdgeCount { vertices: vertex_count, expected: vertex_count - 1, got: edges.len() });
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(TreeError::VertexOutOfRange { edge: id, vertex: w, vertices: vertex_count });
                }
            }
            if u == v {
                return Err(TreeError::SelfLoop(id));
            }
            incidence[u].push(id);
            incidence[v].push(id);
        }
        let tree = Tree { edges, incidence };
        // |E| = |V| - 1 plus connectivity rules out cycles.
        if !tree.is_connected() {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    pub fn path(vertex_count: usize) -> Self {
        let edges = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Tree::new(vertex_count, edges).expect("paths are trees")
    }

    /// Star with `leaves` leaves around vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Tree::new(leaves + 1, edges).expect("stars are trees")
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    /// Leaves in increasing vertex order.
    pub fn leaves(&self) -> Vec<usize> {
        self.vertices_of_degree(1)
    }

    pub fn vertices_of_degree(&self, k: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == k).collect()
    }

    /// Appends one pendant edge per listed vertex. The `i`-th new edge gets id
    /// `edge_count() + i` and joins `anchors[i]` to the new vertex
    /// `vertex_count() + i`.
    pub fn with_pendants(&self, anchors: &[usize]) -> Tree {
        let n = self.vertex_count();
        let mut edges = self.edges.clone();
        edges.extend(anchors.iter().enumerate().map(|(i, &a)| (a, n + i)));
        Tree::new(n + anchors.len(), edges).expect("adding pendant edges keeps a tree")
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }
}
