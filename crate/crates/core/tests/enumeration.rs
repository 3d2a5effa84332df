//! Cross-checks the instance enumerator against a brute-force generator that
//! deduplicates by tree isomorphism.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use dspider::spider::enumerate_instances;

const MAX_EDGES: usize = 12;

/// Partitions of `n` into at least `min_parts` parts, non-increasing.
fn partitions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_parts);
    out
}

/// Adjacency lists of the double spider, built directly.
fn adjacency(core: usize, left: &[usize], right: &[usize]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new()];
    let add = |adj: &mut Vec<Vec<usize>>, u: usize| {
        adj.push(vec![u]);
        let v = adj.len() - 1;
        adj[u].push(v);
        v
    };
    let mut prev = 0;
    for _ in 0..core {
        prev = add(&mut adj, prev);
    }
    let right_hub = prev;
    for (hub, side) in [(0, left), (right_hub, right)] {
        for &len in side {
            let mut at = hub;
            for _ in 0..len {
                at = add(&mut adj, at);
            }
        }
    }
    adj
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&u| u != parent).map(|&u| rooted_code(adj, u, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

/// Isomorphism invariant that separates non-isomorphic trees: the smallest
/// rooted encoding over the tree's centers.
fn tree_code(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                degree[u] -= 1;
                if degree[u] == 1 {
                    next.push(u);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(adj, c, usize::MAX)).min().unwrap()
}

fn brute_force(max_edges: usize) -> BTreeMap<usize, BTreeSet<String>> {
    let mut by_size: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for m in 5..=max_edges {
        for core in 1..=m - 4 {
            for left_edges in 2..=m - core - 2 {
                for left in partitions(left_edges, 2) {
                    for right in partitions(m - core - left_edges, 2) {
                        by_size.entry(m).or_default().insert(tree_code(&adjacency(core, &left, &right)));
                    }
                }
            }
        }
    }
    by_size
}

#[test]
fn partition_helper() {
    assert_eq!(partitions(4, 1).len(), 5);
    assert_eq!(partitions(4, 2), vec![vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
}

#[test]
fn enumeration_matches_isomorphism_classes() {
    let expected = brute_force(MAX_EDGES);
    let mut seen: BTreeMap<usize, BTreeSet<String>> = BTreeMap::new();
    for spider in enumerate_instances(MAX_EDGES) {
        let code = tree_code(&adjacency(spider.core(), spider.left(), spider.right()));
        assert!(seen.entry(spider.edge_count()).or_default().insert(code), "{spider} enumerated twice");
    }
    assert_eq!(seen, expected);
}

#[test]
fn enumerated_layouts_are_the_same_trees() {
    for spider in enumerate_instances(10) {
        let tree = spider.materialize().tree().clone();
        let mut adj = vec![Vec::new(); tree.vertex_count()];
        for &(u, v) in tree.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        assert_eq!(tree_code(&adj), tree_code(&adjacency(spider.core(), spider.left(), spider.right())), "{spider}");
    }
}

#[test]
fn enumeration_is_ordered_by_size() {
    let sizes: Vec<usize> = enumerate_instances(MAX_EDGES).map(|s| s.edge_count()).collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(sizes.first(), Some(&5));
    assert_eq!(common::spider(1, &[1, 1], &[1, 1]), enumerate_instances(5).next().unwrap());
}
