//! Left hub strictly larger, right side made of odd paths with at least one
//! of length >= 3. The longest right path `a` is treated specially: its hub
//! edge is labeled late.

use super::rules::{RuleBuilder, RuleLabeling};
use super::type_bc::{core_finish, core_late, core_middle};
use super::{even_in, odd_in, ConstructError};
use crate::spider::{classify, CaseTag, EdgeAddress, SpiderLayout};

const RULE: &str = "odd right";

pub fn label_odd_right(layout: &SpiderLayout) -> Result<RuleLabeling, ConstructError> {
    let p = layout.params();
    if classify(p) != CaseTag::UnequalOddRight {
        return Err(ConstructError::precondition(RULE, format!("{} is not in this case", layout.spider())));
    }
    let m = p.edge_count() as i64;
    let a = p.right_odd.len();
    let (c, d, t, s) = (p.left_odd.len(), p.left_even.len(), p.left_units, p.core_len);
    let (ci, ti, si) = (c as i64, t as i64, s as i64);
    let (s1, s2) = (p.core_early() as i64, p.core_late() as i64);
    let ao = |i: usize| p.right_odd_odd_edges(i) as i64;
    let ae = |i: usize| p.right_odd_even_edges(i) as i64;
    let co = |i: usize| p.left_odd_odd_edges(i) as i64;
    let ce = |i: usize| p.left_odd_even_edges(i) as i64;
    let dd = |i: usize| p.left_even_half_edges(i) as i64;
    let a_all = p.right_odd_total() as i64;
    let c_all = p.left_odd_total() as i64;
    let half_up = |j: usize| j.div_ceil(2) as i64;
    let half = |j: usize| (j / 2) as i64;
    let mut b = RuleBuilder::new(layout);

    for (idx, &xi) in p.right_odd.iter().enumerate() {
        let i = idx + 1;
        if i < a {
            for j in odd_in(1, 2 * xi + 1) {
                b.set(1, EdgeAddress::RightOdd { path: i, pos: j }, ao(i - 1) + half_up(j))?;
            }
        } else {
            for j in odd_in(3, 2 * xi + 1) {
                b.set(1, EdgeAddress::RightOdd { path: i, pos: j }, ao(a - 1) + ((j - 1) / 2) as i64)?;
            }
        }
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * wi) {
            let label = ao(a) - 1 + co(i - 1) - (i as i64 - 1) + half_up(j);
            b.set(2, EdgeAddress::LeftOdd { path: i, pos: j }, label)?;
        }
    }
    let mid = ao(a) - 1 + co(c) - ci;
    if s >= 4 {
        core_middle(&mut b, 3, s, mid)?;
    }
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * zi) {
            b.set(4, EdgeAddress::LeftEven { path: i, pos: j }, mid + s1 + dd(i - 1) + half_up(j))?;
        }
    }
    let units = mid + s1 + dd(d);
    for i in 1..=t {
        b.set(5, EdgeAddress::LeftUnit(i), units + i as i64)?;
    }
    for (idx, &xi) in p.right_odd.iter().enumerate() {
        let i = idx + 1;
        for j in even_in(1, 2 * xi) {
            b.set(6, EdgeAddress::RightOdd { path: i, pos: j }, units + ti + ae(i - 1) + half(j))?;
        }
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        let off = a_all - 1 + co(c) - ci + s1 + dd(d) + ti + ce(i - 1);
        for j in even_in(1, 2 * wi) {
            b.set(7, EdgeAddress::LeftOdd { path: i, pos: j }, off + half(j))?;
        }
    }
    if s >= 2 {
        core_late(&mut b, 8, s, a_all - 1 + c_all - ci + s1 + dd(d) + ti)?;
    }
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        let off = a_all - 1 + c_all - ci + si - s2 + dd(d) + ti + dd(i - 1);
        for j in even_in(1, 2 * zi) {
            b.set(9, EdgeAddress::LeftEven { path: i, pos: j }, off + half(j))?;
        }
    }
    b.set(10, EdgeAddress::RightOdd { path: a, pos: 1 }, m - ci - s2)?;
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        b.set(11, EdgeAddress::LeftOdd { path: i, pos: 2 * wi + 1 }, m - ci - s2 + i as i64)?;
    }
    core_finish(&mut b, 12, s, m)?;
    b.finish()
}
