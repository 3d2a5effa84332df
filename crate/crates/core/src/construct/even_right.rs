//! Left hub strictly larger, at least one right even path. The longest right
//! even path `b` is labeled last among the right paths; `alpha` of the other
//! even paths have their two hub-side edges pulled apart, the first `beta`
//! of them (right `P2`s) interleaved with left unit edges.

use super::rules::{RuleBuilder, RuleLabeling};
use super::type_bc::{core_finish, core_late, core_middle};
use super::{even_in, odd_in, ConstructError};
use crate::spider::{classify, CaseTag, EdgeAddress, SpiderLayout};

const RULE: &str = "even right";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenCaseContext {
    /// Right even paths (excluding the last) whose hub edge needs relabeling:
    /// `max(0, (b - 1) - (c + d))`.
    pub alpha: usize,
    /// How many of those are `P2`s: `min(alpha, b2)`.
    pub beta: usize,
    /// `max(0, beta - 1)`.
    pub beta1: usize,
    /// Number of right `P2`s.
    pub b2: usize,
}

impl EvenCaseContext {
    pub fn new(layout: &SpiderLayout) -> Result<Self, ConstructError> {
        let p = layout.params();
        if classify(p) != CaseTag::UnequalEvenRight {
            return Err(ConstructError::precondition(RULE, format!("{} is not in this case", layout.spider())));
        }
        let b = p.right_even.len();
        let alpha = (b - 1).saturating_sub(p.left_odd.len() + p.left_even.len());
        let b2 = p.right_even.iter().filter(|&&y| y == 1).count();
        let beta = alpha.min(b2);
        if alpha > 0 && p.left_units <= p.right_odd.len() + 1 + alpha {
            return Err(ConstructError::precondition(
                RULE,
                format!("expected more than {} left unit paths, got {}", p.right_odd.len() + 1 + alpha, p.left_units),
            ));
        }
        Ok(EvenCaseContext { alpha, beta, beta1: beta.saturating_sub(1), b2 })
    }
}

/// With an even core, no odd paths on either side, no left even path and no
/// right `P2` among the relabeled paths (left `{1,1,1}`, right `{2y, 2y'}`
/// with `y, y' >= 2`) the step rules give both hubs the same sum. There the
/// edges of path `b` take their two label blocks ahead of the matching core
/// blocks instead of after them, which lifts `f(e_1)` by `y_b` and lowers
/// `f(e_{b,1})` by `s/2`.
pub(crate) fn hub_tie_repair(p: &crate::spider::Parameters, ctx: &EvenCaseContext) -> bool {
    p.core_len.is_multiple_of(2)
        && p.right_odd.is_empty()
        && p.left_odd.is_empty()
        && p.left_even.is_empty()
        && ctx.beta == 0
        && ctx.alpha > 0
}

pub fn label_even_right(layout: &SpiderLayout, ctx: &EvenCaseContext) -> Result<RuleLabeling, ConstructError> {
    let p = layout.params();
    let m = p.edge_count() as i64;
    let bn = p.right_even.len();
    let (c, d, t, s) = (p.left_odd.len(), p.left_even.len(), p.left_units, p.core_len);
    let a = p.right_odd.len();
    let (ci, ti, si) = (c as i64, t as i64, s as i64);
    let (s1, s2) = (p.core_early() as i64, p.core_late() as i64);
    let (alpha, beta) = (ctx.alpha, ctx.beta);
    let beta1 = ctx.beta1 as i64;
    let gap = (alpha - beta) as i64;
    let bs = |i: usize| p.right_even_half_edges(i) as i64;
    let ao = |i: usize| p.right_odd_odd_edges(i) as i64;
    let ae = |i: usize| p.right_odd_even_edges(i) as i64;
    let co = |i: usize| p.left_odd_odd_edges(i) as i64;
    let ce = |i: usize| p.left_odd_even_edges(i) as i64;
    let dd = |i: usize| p.left_even_half_edges(i) as i64;
    let a_all = p.right_odd_total() as i64;
    let b_all = p.right_even_total() as i64;
    let c_all = p.left_odd_total() as i64;
    let d_all = p.left_even_total() as i64;
    let yb = p.right_even[bn - 1];
    let half_up = |j: usize| j.div_ceil(2) as i64;
    let half = |j: usize| (j / 2) as i64;
    let re = |path: usize, pos: usize| EdgeAddress::RightEven { path, pos };
    let mut b = RuleBuilder::new(layout);

    for i in 1..=beta {
        b.set(1, re(i, 1), 2 * i as i64 - 1)?;
        if i < beta {
            b.set(1, EdgeAddress::LeftUnit(i), 2 * i as i64)?;
        }
    }
    for i in beta + 1..=alpha {
        let yi = p.right_even[i - 1];
        for j in even_in(4, 2 * yi) {
            b.set(2, re(i, j), beta1 + bs(i - 1) - (i - (beta + 1)) as i64 + ((j - 2) / 2) as i64)?;
        }
    }
    for i in alpha + 1..bn {
        let yi = p.right_even[i - 1];
        for j in even_in(1, 2 * yi) {
            b.set(2, re(i, j), beta1 + bs(i - 1) - gap + half(j))?;
        }
    }
    let early = beta1 + bs(bn - 1) - gap;
    for (idx, &xi) in p.right_odd.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * xi + 1) {
            b.set(3, EdgeAddress::RightOdd { path: i, pos: j }, early + ao(i - 1) + half_up(j))?;
        }
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * wi) {
            b.set(
                4,
                EdgeAddress::LeftOdd { path: i, pos: j },
                early + ao(a) + co(i - 1) - (i as i64 - 1) + half_up(j),
            )?;
        }
    }
    let mid = early + ao(a) + co(c) - ci;
    let reorder = hub_tie_repair(p, ctx);
    if reorder {
        for j in even_in(1, 2 * yb) {
            b.set(6, re(bn, j), mid + half(j))?;
        }
        if s >= 4 {
            core_middle(&mut b, 5, s, mid + yb as i64)?;
        }
    } else {
        if s >= 4 {
            core_middle(&mut b, 5, s, mid)?;
        }
        for j in even_in(1, 2 * yb) {
            b.set(6, re(bn, j), mid + s1 + half(j))?;
        }
    }
    let after_b = beta1 + bs(bn) - gap + ao(a) + co(c) - ci + s1;
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * zi) {
            b.set(7, EdgeAddress::LeftEven { path: i, pos: j }, after_b + dd(i - 1) + half_up(j))?;
        }
    }
    for i in beta + 1..=alpha {
        b.set(8, re(i, 1), after_b + dd(d) + (i - beta) as i64)?;
    }
    let units = beta1 + bs(bn) + ao(a) + co(c) - ci + s1 + dd(d);
    for i in beta.max(1)..=t {
        b.set(9, EdgeAddress::LeftUnit(i), units + i as i64 - beta1)?;
    }
    let r0 = bs(bn) + ao(a) + co(c) - ci + s1 + dd(d) + ti;
    for i in 1..=beta {
        b.set(10, re(i, 2), r0 + (beta + 1 - i) as i64)?;
    }
    for i in beta + 1..=alpha {
        let yi = p.right_even[i - 1];
        for j in odd_in(3, 2 * yi) {
            b.set(11, re(i, j), r0 + bs(i - 1) - (i - (beta + 1)) as i64 + ((j - 1) / 2) as i64)?;
        }
    }
    for i in alpha + 1..bn {
        let yi = p.right_even[i - 1];
        for j in odd_in(1, 2 * yi) {
            b.set(11, re(i, j), r0 + bs(i - 1) - gap + half_up(j))?;
        }
    }
    let late = b_all - yb as i64 - gap;
    for (idx, &xi) in p.right_odd.iter().enumerate() {
        let i = idx + 1;
        let off = late + ao(a) + co(c) - ci + s1 + dd(d) + ti + ae(i - 1);
        for j in even_in(1, 2 * xi) {
            b.set(12, EdgeAddress::RightOdd { path: i, pos: j }, off + half(j))?;
        }
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        let off = late + a_all + co(c) - ci + s1 + dd(d) + ti + ce(i - 1);
        for j in even_in(1, 2 * wi) {
            b.set(13, EdgeAddress::LeftOdd { path: i, pos: j }, off + half(j))?;
        }
    }
    let core_offset = late + a_all + c_all - ci + s1 + dd(d) + ti;
    let tail = late + a_all + c_all - ci + si - s2 + dd(d) + ti;
    if reorder {
        for j in odd_in(1, 2 * yb) {
            b.set(14, re(bn, j), core_offset + half_up(j))?;
        }
        core_late(&mut b, 15, s, core_offset + yb as i64)?;
    } else {
        if s >= 2 {
            core_late(&mut b, 14, s, core_offset)?;
        }
        for j in odd_in(1, 2 * yb) {
            b.set(15, re(bn, j), tail + half_up(j))?;
        }
    }
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        let off = tail + yb as i64 + dd(i - 1);
        for j in even_in(1, 2 * zi) {
            b.set(16, EdgeAddress::LeftEven { path: i, pos: j }, off + half(j))?;
        }
    }
    for i in beta + 1..=alpha {
        b.set(17, re(i, 2), b_all - gap + a_all + c_all - ci + si - s2 + d_all + ti + (i - beta) as i64)?;
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        let label = b_all + a_all + c_all - ci + si - s2 + d_all + ti + i as i64;
        b.set(18, EdgeAddress::LeftOdd { path: i, pos: 2 * wi + 1 }, label)?;
    }
    core_finish(&mut b, 19, s, m)?;
    b.finish()
}
