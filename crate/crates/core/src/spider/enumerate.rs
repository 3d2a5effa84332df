use super::{should_swap, CanonicalDoubleSpider};

/// Minimum edge count of a double spider (core 1, four unit paths).
const MIN_EDGES: usize = 5;

/// Every canonical double spider with at most `max_edges` edges, each once,
/// ordered by edge count, then core length, then right side, then left side.
pub fn enumerate_instances(max_edges: usize) -> Instances {
    Instances { max_edges, next_m: MIN_EDGES, batch: Vec::new().into_iter() }
}

/// Lazy stream produced by [`enumerate_instances`]; instances are generated
/// one edge count at a time.
#[derive(Debug)]
pub struct Instances {
    max_edges: usize,
    next_m: usize,
    batch: std::vec::IntoIter<CanonicalDoubleSpider>,
}

impl Iterator for Instances {
    type Item = CanonicalDoubleSpider;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(item) = self.batch.next() {
                return Some(item);
            }
            if self.next_m > self.max_edges {
                return None;
            }
            self.batch = instances_with_edges(self.next_m).into_iter();
            self.next_m += 1;
        }
    }
}

fn instances_with_edges(m: usize) -> Vec<CanonicalDoubleSpider> {
    let mut out = Vec::new();
    for core in 1..=m.saturating_sub(4) {
        let pendant = m - core;
        for right_total in 2..=pendant - 2 {
            let left_total = pendant - right_total;
            let rights = partitions(right_total);
            let lefts = partitions(left_total);
            for right in &rights {
                for left in &lefts {
                    if left.len() >= right.len() && !should_swap(left, right) {
                        out.push(CanonicalDoubleSpider { core, left: left.clone(), right: right.clone() });
                    }
                }
            }
        }
    }
    out.sort_unstable_by(|a, b| a.enumeration_key().cmp(&b.enumeration_key()));
    out
}

/// Partitions of `n` into at least two positive parts, as ascending vectors.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(remaining: usize, min_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            if current.len() >= 2 {
                out.push(current.clone());
            }
            return;
        }
        for part in min_part..=remaining {
            // The last part is the whole remainder; skip splits leaving a
            // smaller tail than `part`.
            if remaining - part != 0 && remaining - part < part {
                continue;
            }
            current.push(part);
            extend(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}
