use std::collections::HashMap;

use super::{CanonicalDoubleSpider, EdgeAddress, Parameters, VertexAddress};
use crate::tree::Tree;

/// A canonical double spider materialized as a [`Tree`], with both directions
/// of the address map.
///
/// Vertex ids follow the derived order of [`VertexAddress`] and edge ids the
/// derived order of [`EdgeAddress`]; both are therefore deterministic.
#[derive(Debug, Clone)]
pub struct SpiderLayout {
    spider: CanonicalDoubleSpider,
    params: Parameters,
    tree: Tree,
    vertices: Vec<VertexAddress>,
    edges: Vec<EdgeAddress>,
    vertex_ids: HashMap<VertexAddress, usize>,
    edge_ids: HashMap<EdgeAddress, usize>,
    /// Edge ids of each left path, hub to leaf, in sorted path order.
    left_paths: Vec<Vec<usize>>,
    right_paths: Vec<Vec<usize>>,
}

/// One pendant path in hub-to-leaf order: (edge, far endpoint) per step.
type PathSpec = Vec<(EdgeAddress, VertexAddress)>;

fn right_path(len: usize, odd: bool, path: usize) -> PathSpec {
    (1..=len)
        .map(|pos| {
            if odd {
                (EdgeAddress::RightOdd { path, pos }, VertexAddress::RightOdd { path, pos })
            } else {
                (EdgeAddress::RightEven { path, pos }, VertexAddress::RightEven { path, pos })
            }
        })
        .collect()
}

fn left_path(len: usize, path: usize) -> PathSpec {
    if len == 1 {
        return vec![(EdgeAddress::LeftUnit(path), VertexAddress::LeftUnit(path))];
    }
    // Hub edge has the largest index; the vertex after edge `pos` (walking
    // outward) is the one carrying index `pos`.
    (1..=len)
        .rev()
        .map(|pos| {
            if len % 2 == 1 {
                (EdgeAddress::LeftOdd { path, pos }, VertexAddress::LeftOdd { path, pos })
            } else {
                (EdgeAddress::LeftEven { path, pos }, VertexAddress::LeftEven { path, pos })
            }
        })
        .collect()
}

/// A layout is a function of its spider.
impl PartialEq for SpiderLayout {
    fn eq(&self, other: &Self) -> bool {
        self.spider == other.spider
    }
}

impl Eq for SpiderLayout {}

impl SpiderLayout {
    pub fn new(spider: &CanonicalDoubleSpider) -> Self {
        let params = spider.parameters();
        let s = spider.core();

        // (edge, endpoint, endpoint) triples, then sorted into canonical order.
        let mut raw: Vec<(EdgeAddress, VertexAddress, VertexAddress)> = Vec::new();
        let core_vertex = |j: usize| match j {
            1 => VertexAddress::LeftHub,
            j if j == s + 1 => VertexAddress::RightHub,
            j => VertexAddress::Core(j),
        };
        for j in 1..=s {
            raw.push((EdgeAddress::Core(j), core_vertex(j), core_vertex(j + 1)));
        }

        let mut right_specs = Vec::new();
        let (mut odd_i, mut even_i) = (0, 0);
        for &len in spider.right() {
            let spec = if len % 2 == 1 {
                odd_i += 1;
                right_path(len, true, odd_i)
            } else {
                even_i += 1;
                right_path(len, false, even_i)
            };
            right_specs.push(spec);
        }
        let mut left_specs = Vec::new();
        let (mut odd_i, mut even_i, mut unit_i) = (0, 0, 0);
        for &len in spider.left() {
            let counter = match len {
                1 => &mut unit_i,
                l if l % 2 == 1 => &mut odd_i,
                _ => &mut even_i,
            };
            *counter += 1;
            left_specs.push(left_path(len, *counter));
        }
        for (hub, specs) in [(VertexAddress::RightHub, &right_specs), (VertexAddress::LeftHub, &left_specs)] {
            for spec in specs {
                let mut prev = hub;
                for &(e, v) in spec {
                    raw.push((e, prev, v));
                    prev = v;
                }
            }
        }

        let mut vertices: Vec<VertexAddress> = raw.iter().flat_map(|&(_, u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let vertex_ids: HashMap<VertexAddress, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        raw.sort_unstable_by_key(|&(e, _, _)| e);
        let edges: Vec<EdgeAddress> = raw.iter().map(|&(e, _, _)| e).collect();
        let edge_ids: HashMap<EdgeAddress, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let pairs = raw.iter().map(|&(_, u, v)| (vertex_ids[&u], vertex_ids[&v])).collect();
        let tree = Tree::new(vertices.len(), pairs).expect("a double spider is a tree");

        let to_ids = |specs: &[PathSpec]| -> Vec<Vec<usize>> {
            specs.iter().map(|spec| spec.iter().map(|(e, _)| edge_ids[e]).collect()).collect()
        };
        let left_paths = to_ids(&left_specs);
        let right_paths = to_ids(&right_specs);

        SpiderLayout {
            spider: spider.clone(),
            params,
            tree,
            vertices,
            edges,
            vertex_ids,
            edge_ids,
            left_paths,
            right_paths,
        }
    }

    pub fn spider(&self) -> &CanonicalDoubleSpider {
        &self.spider
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_addresses(&self) -> &[EdgeAddress] {
        &self.edges
    }

    pub fn vertex_addresses(&self) -> &[VertexAddress] {
        &self.vertices
    }

    pub fn edge_address(&self, id: usize) -> EdgeAddress {
        self.edges[id]
    }

    pub fn vertex_address(&self, id: usize) -> VertexAddress {
        self.vertices[id]
    }

    pub fn edge_id(&self, addr: &EdgeAddress) -> Option<usize> {
        self.edge_ids.get(addr).copied()
    }

    pub fn vertex_id(&self, addr: &VertexAddress) -> Option<usize> {
        self.vertex_ids.get(addr).copied()
    }

    pub fn left_hub(&self) -> usize {
        self.vertex_ids[&VertexAddress::LeftHub]
    }

    pub fn right_hub(&self) -> usize {
        self.vertex_ids[&VertexAddress::RightHub]
    }

    /// Core edge ids from the left hub to the right hub.
    pub fn core_edges(&self) -> Vec<usize> {
        (1..=self.spider.core()).map(|j| self.edge_ids[&EdgeAddress::Core(j)]).collect()
    }

    /// Edge ids of the left paths (ascending length), each from hub to leaf.
    pub fn left_paths(&self) -> &[Vec<usize>] {
        &self.left_paths
    }

    pub fn right_paths(&self) -> &[Vec<usize>] {
        &self.right_paths
    }

    /// True for edges that touch a leaf.
    pub fn is_pendant(&self, id: usize) -> bool {
        let (u, v) = self.tree.edge(id);
        self.tree.degree(u) == 1 || self.tree.degree(v) == 1
    }
}
