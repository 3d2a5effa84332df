//! Right side `{1, k}`: either both hubs of degree 3 with at most one left
//! unit path, or right side `{1, 1}` with no left unit path. The right unit
//! path is the designated `P1`; the other right path is `P_k`.

use super::rules::{RuleBuilder, RuleLabeling};
use super::{even_in, odd_in, ConstructError};
use crate::spider::{canonicalize, CanonicalDoubleSpider, DoubleSpiderSpec, EdgeAddress, SpiderLayout};

const RULE: &str = "type (b)/(c)";

/// Derived constants of the type (b)/(c) rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeBcContext {
    /// Length of the non-designated right path.
    pub k: usize,
    /// 1 when the left unit edge takes the label right after `P1`.
    pub t_shift: usize,
    /// -1 when the left side has an odd path of length >= 3, else 0.
    pub w_shift: i64,
    pub s1: usize,
    pub s2: usize,
}

impl TypeBcContext {
    pub fn new(layout: &SpiderLayout) -> Result<Self, ConstructError> {
        let spider = layout.spider();
        let p = layout.params();
        if spider.right().len() != 2 || spider.right()[0] != 1 {
            return Err(ConstructError::precondition(RULE, format!("right side must be {{1,k}}, got {spider}")));
        }
        if *spider == figure2_spider() {
            return Err(ConstructError::precondition(RULE, "this instance takes the fixed exceptional labeling"));
        }
        let k = spider.right()[1];
        let t = p.left_units;
        let type_b = p.left_hub_degree() == 3 && t <= 1;
        let type_c = t == 0 && k == 1;
        if !type_b && !type_c {
            return Err(ConstructError::precondition(RULE, format!("unsupported shape {spider}")));
        }
        let c = p.left_odd.len();
        let d = p.left_even.len();
        let s = p.core_len;
        let t_shift = (t == 1 && d == 1) || (t == 1 && s == 2 && c == 1 && p.left_odd[0] == 1 && k >= 2);
        Ok(TypeBcContext {
            k,
            t_shift: t_shift as usize,
            w_shift: if c >= 1 { -1 } else { 0 },
            s1: p.core_early(),
            s2: p.core_late(),
        })
    }
}

/// The instance with core 2, left `{1,3}`, right `{1,1}`.
pub fn figure2_spider() -> CanonicalDoubleSpider {
    canonicalize(&DoubleSpiderSpec::new(2, vec![1, 3], vec![1, 1])).expect("valid instance")
}

/// Fixed labeling of [`figure2_spider`]; the general rule does not cover it.
pub fn figure2_labeling() -> (SpiderLayout, RuleLabeling) {
    let layout = figure2_spider().materialize();
    let fixed = [
        (EdgeAddress::LeftOdd { path: 1, pos: 3 }, 7),
        (EdgeAddress::LeftOdd { path: 1, pos: 2 }, 2),
        (EdgeAddress::LeftOdd { path: 1, pos: 1 }, 6),
        (EdgeAddress::LeftUnit(1), 5),
        (EdgeAddress::Core(1), 3),
        (EdgeAddress::Core(2), 8),
        (EdgeAddress::RightOdd { path: 1, pos: 1 }, 1),
        (EdgeAddress::RightOdd { path: 2, pos: 1 }, 4),
    ];
    let mut b = RuleBuilder::new(&layout);
    for (edge, label) in fixed {
        b.set(1, edge, label).expect("fixed labeling is a bijection");
    }
    let rule = b.finish().expect("fixed labeling is complete");
    (layout, rule)
}

pub fn label_type_bc(layout: &SpiderLayout, ctx: &TypeBcContext) -> Result<RuleLabeling, ConstructError> {
    let p = layout.params();
    let m = p.edge_count() as i64;
    let k = ctx.k;
    let pk = |j: usize| {
        if k % 2 == 1 {
            EdgeAddress::RightOdd { path: 2, pos: j }
        } else {
            EdgeAddress::RightEven { path: 1, pos: j }
        }
    };
    let p1 = EdgeAddress::RightOdd { path: 1, pos: 1 };
    let (c, d, t, s) = (p.left_odd.len(), p.left_even.len(), p.left_units, p.core_len);
    let (s1, s2) = (ctx.s1 as i64, ctx.s2 as i64);
    let w = ctx.w_shift;
    let hk = (k / 2) as i64;
    let ki = k as i64;
    let ti = t as i64;
    let co = |i: usize| p.left_odd_odd_edges(i) as i64;
    let ce = |i: usize| p.left_odd_even_edges(i) as i64;
    let dd = |i: usize| p.left_even_half_edges(i) as i64;
    let c_all = p.left_odd_total() as i64;
    let mut b = RuleBuilder::new(layout);

    if k >= 2 {
        for j in even_in(1, k) {
            b.set(1, pk(j), ((k + 2 - j) / 2) as i64)?;
        }
    }
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        if i == 1 {
            for j in odd_in(1, 2 * wi - 1) {
                b.set(2, EdgeAddress::LeftOdd { path: 1, pos: j }, hk + j.div_ceil(2) as i64)?;
            }
        } else {
            for j in odd_in(1, 2 * wi + 1) {
                b.set(2, EdgeAddress::LeftOdd { path: i, pos: j }, hk + co(i - 1) - 1 + j.div_ceil(2) as i64)?;
            }
        }
    }
    let mid = hk + co(c) + w;
    if s >= 4 {
        core_middle(&mut b, 3, s, mid)?;
    }
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        for j in odd_in(1, 2 * zi) {
            b.set(4, EdgeAddress::LeftEven { path: i, pos: j }, mid + s1 + dd(i - 1) + j.div_ceil(2) as i64)?;
        }
    }
    let base = mid + s1 + dd(d);
    if ctx.t_shift == 1 {
        b.set(5, p1, base + 1)?;
        b.set(5, EdgeAddress::LeftUnit(1), base + 2)?;
    } else {
        if t == 1 {
            b.set(5, EdgeAddress::LeftUnit(1), base + 1)?;
        }
        b.set(5, p1, base + ti + 1)?;
    }
    for j in odd_in(1, k) {
        b.set(6, pk(j), base + 1 + ti + ((k + 2 - j) / 2) as i64)?;
    }
    let late = ki + 1 + co(c) + w + s1 + dd(d) + ti;
    for (idx, &wi) in p.left_odd.iter().enumerate() {
        let i = idx + 1;
        for j in even_in(1, 2 * wi) {
            b.set(7, EdgeAddress::LeftOdd { path: i, pos: j }, late + ce(i - 1) + (j / 2) as i64)?;
        }
    }
    if s >= 2 {
        core_late(&mut b, 8, s, ki + 1 + c_all + w + dd(d) + s1 + ti)?;
    }
    for (idx, &zi) in p.left_even.iter().enumerate() {
        let i = idx + 1;
        let off = ki + 1 + c_all + w + s as i64 - s2 + dd(d) + ti + dd(i - 1);
        for j in even_in(1, 2 * zi) {
            b.set(9, EdgeAddress::LeftEven { path: i, pos: j }, off + (j / 2) as i64)?;
        }
    }
    if c >= 1 {
        b.set(10, EdgeAddress::LeftOdd { path: 1, pos: 2 * p.left_odd[0] + 1 }, m - s2)?;
    }
    core_finish(&mut b, 11, s, m)?;
    b.finish()
}

/// Early core block shared by all rules (only called for `s >= 4`).
pub(crate) fn core_middle(b: &mut RuleBuilder<'_>, step: u8, s: usize, offset: i64) -> Result<(), ConstructError> {
    if s.is_multiple_of(2) {
        for j in even_in(2, s - 2) {
            b.set(step, EdgeAddress::Core(j), offset + ((s - j) / 2) as i64)?;
        }
    } else {
        for j in odd_in(3, s - 2) {
            b.set(step, EdgeAddress::Core(j), offset + ((j - 1) / 2) as i64)?;
        }
    }
    Ok(())
}

/// Late core block (`s >= 2`).
pub(crate) fn core_late(b: &mut RuleBuilder<'_>, step: u8, s: usize, offset: i64) -> Result<(), ConstructError> {
    if s.is_multiple_of(2) {
        for j in odd_in(1, s) {
            b.set(step, EdgeAddress::Core(j), offset + ((s + 1 - j) / 2) as i64)?;
        }
    } else {
        for j in even_in(1, s) {
            b.set(step, EdgeAddress::Core(j), offset + (j / 2) as i64)?;
        }
    }
    Ok(())
}

/// The largest labels go to the core edge at the right hub, and for odd
/// `s >= 3` also to the one at the left hub.
pub(crate) fn core_finish(b: &mut RuleBuilder<'_>, step: u8, s: usize, m: i64) -> Result<(), ConstructError> {
    if s == 1 || s.is_multiple_of(2) {
        b.set(step, EdgeAddress::Core(s), m)
    } else {
        b.set(step, EdgeAddress::Core(1), m - 1)?;
        b.set(step, EdgeAddress::Core(s), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::VertexSumReport;

    fn layout(core: usize, left: &[usize], right: &[usize]) -> SpiderLayout {
        canonicalize(&DoubleSpiderSpec::new(core, left.to_vec(), right.to_vec())).unwrap().materialize()
    }

    fn run(l: &SpiderLayout) -> RuleLabeling {
        label_type_bc(l, &TypeBcContext::new(l).unwrap()).unwrap()
    }

    fn at(l: &SpiderLayout, r: &RuleLabeling, e: EdgeAddress) -> usize {
        r.labeling.label(l.edge_id(&e).unwrap())
    }

    #[test]
    fn two_left_p3_example() {
        let l = layout(1, &[3, 3], &[1, 1]);
        let r = run(&l);
        let path = |i| (1..=3).map(|pos| at(&l, &r, EdgeAddress::LeftOdd { path: i, pos })).collect::<Vec<_>>();
        assert_eq!(path(1), vec![1, 6, 8]);
        assert_eq!(path(2), vec![2, 7, 3]);
        assert_eq!(at(&l, &r, EdgeAddress::RightOdd { path: 1, pos: 1 }), 4);
        assert_eq!(at(&l, &r, EdgeAddress::RightOdd { path: 2, pos: 1 }), 5);
        assert_eq!(at(&l, &r, EdgeAddress::Core(1)), 9);
    }

    #[test]
    fn exceptional_labeling_sums() {
        let (l, r) = figure2_labeling();
        let rep = VertexSumReport::evaluate(l.tree(), &r.labeling);
        assert!(rep.strong_ok);
        assert_eq!(rep.sum(l.left_hub()), 15);
        assert_eq!(rep.sum(l.right_hub()), 13);
        assert_eq!(rep.class_sums(2), vec![8, 9, 11]);
        assert_eq!(rep.class_sums(1), vec![1, 4, 5, 6]);
    }

    #[test]
    fn exceptional_instance_is_refused_by_the_general_rule() {
        assert!(TypeBcContext::new(&figure2_spider().materialize()).is_err());
    }

    #[test]
    fn context_flags() {
        let ctx = TypeBcContext::new(&layout(2, &[3, 1], &[1, 2])).unwrap();
        assert_eq!((ctx.k, ctx.t_shift, ctx.w_shift), (2, 1, -1));
        let ctx = TypeBcContext::new(&layout(3, &[2, 1], &[1, 1])).unwrap();
        assert_eq!((ctx.k, ctx.t_shift, ctx.w_shift, ctx.s1, ctx.s2), (1, 1, 0, 0, 2));
        assert!(TypeBcContext::new(&layout(1, &[1, 1, 2], &[1, 1])).is_err());
        assert!(TypeBcContext::new(&layout(1, &[2, 2, 2], &[1, 2])).is_err());
    }

    #[test]
    fn largest_label_on_right_core_edge() {
        let l = layout(4, &[5, 2], &[1, 3]);
        let r = run(&l);
        assert_eq!(at(&l, &r, EdgeAddress::Core(4)), l.edge_count());
    }
}
