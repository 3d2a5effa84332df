//! Two unit paths on each hub joined by a core of any length.

use super::rules::{RuleBuilder, RuleLabeling};
use super::{even_in, odd_in, ConstructError};
use crate::spider::{EdgeAddress, SpiderLayout};

const RULE: &str = "type (a)";

pub fn label_type_a(layout: &SpiderLayout) -> Result<RuleLabeling, ConstructError> {
    let p = layout.params();
    if p.right_odd != [0, 0]
        || !p.right_even.is_empty()
        || p.left_units != 2
        || !p.left_odd.is_empty()
        || !p.left_even.is_empty()
    {
        return Err(ConstructError::precondition(
            RULE,
            format!("needs left = right = {{1,1}}, got {}", layout.spider()),
        ));
    }
    let s = p.core_len;
    let right_units = [EdgeAddress::RightOdd { path: 1, pos: 1 }, EdgeAddress::RightOdd { path: 2, pos: 1 }];
    let left_units = [EdgeAddress::LeftUnit(1), EdgeAddress::LeftUnit(2)];
    let mut b = RuleBuilder::new(layout);
    if s % 2 == 1 {
        let h = (s - 1) / 2;
        for j in even_in(1, s) {
            b.set(1, EdgeAddress::Core(j), ((s + 1 - j) / 2) as i64)?;
        }
        for (i, &e) in right_units.iter().enumerate() {
            b.set(2, e, (h + 1 + i) as i64)?;
        }
        for (i, &e) in left_units.iter().enumerate() {
            b.set(3, e, (h + 3 + i) as i64)?;
        }
        for j in odd_in(1, s) {
            b.set(4, EdgeAddress::Core(j), (h + 4 + (s + 2 - j) / 2) as i64)?;
        }
    } else {
        let h = s / 2;
        for j in even_in(1, s) {
            b.set(1, EdgeAddress::Core(j), (j / 2) as i64)?;
        }
        for (i, &e) in left_units.iter().enumerate() {
            b.set(2, e, (h + 1 + i) as i64)?;
        }
        for (i, &e) in right_units.iter().enumerate() {
            b.set(3, e, (h + 3 + i) as i64)?;
        }
        for j in odd_in(1, s) {
            b.set(4, EdgeAddress::Core(j), (h + 4 + j.div_ceil(2)) as i64)?;
        }
    }
    b.finish()
}
