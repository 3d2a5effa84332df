//! Reduction to a base case and replay of the reductions.

use std::fmt;

use super::compose::{extend_spider_leaves, insert_unit_path, LabeledSpider};
use super::even_right::{label_even_right, EvenCaseContext};
use super::odd_right::label_odd_right;
use super::rules::RuleLabeling;
use super::type_a::label_type_a;
use super::type_bc::{figure2_labeling, figure2_spider, label_type_bc, TypeBcContext};
use super::{ConstructError, TraceEntry};
use crate::spider::{canonicalize, classify, CanonicalDoubleSpider, CaseTag, DoubleSpiderSpec, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRule {
    TypeA,
    TypeBc,
    Figure2,
    OddRight,
    EvenRight,
}

impl fmt::Display for BaseRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaseRule::TypeA => "type-a",
            BaseRule::TypeBc => "type-bc",
            BaseRule::Figure2 => "fixed-exception",
            BaseRule::OddRight => "odd-right",
            BaseRule::EvenRight => "even-right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// Every pendant path loses its leaf edge.
    DeleteLeafLevel,
    /// One unit path removed from the right hub.
    RemoveRightUnit,
    /// One unit path removed from the left hub.
    RemoveLeftUnit,
}

/// A reduction together with the instances on both sides of it; replaying
/// the inverse operation on `after` must give back `before`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub before: CanonicalDoubleSpider,
    pub after: CanonicalDoubleSpider,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub labeled: LabeledSpider,
    pub base: BaseRule,
    pub residue: CanonicalDoubleSpider,
    /// In the order they were applied; replay runs them backwards.
    pub reductions: Vec<ReductionStep>,
    /// Assignments made by the base rule on the residue.
    pub trace: Vec<TraceEntry>,
}

pub fn strongly_antimagic_label(spec: &DoubleSpiderSpec) -> Result<Construction, ConstructError> {
    label_canonical(&canonicalize(spec)?)
}

pub fn label_canonical(spider: &CanonicalDoubleSpider) -> Result<Construction, ConstructError> {
    let (reductions, residue, base) = plan(spider)?;
    let (layout, rule) = match base {
        BaseRule::Figure2 => figure2_labeling(),
        _ => {
            let layout = residue.materialize();
            let rule = apply_base(base, &layout)?;
            (layout, rule)
        }
    };
    let RuleLabeling { labeling, trace } = rule;
    let mut labeled = LabeledSpider::new(layout, labeling)?;
    if !labeled.is_strong() {
        return Err(ConstructError::NotStronglyAntimagic {
            stage: format!("{base} rule on {residue}"),
            violation: labeled.report.violation.clone(),
        });
    }
    for step in reductions.iter().rev() {
        labeled = match step.kind {
            ReductionKind::DeleteLeafLevel => extend_spider_leaves(&labeled)?,
            ReductionKind::RemoveRightUnit => insert_unit_path(&labeled, Side::Right)?,
            ReductionKind::RemoveLeftUnit => insert_unit_path(&labeled, Side::Left)?,
        };
        if labeled.spider() != &step.before {
            return Err(ConstructError::precondition(
                "replay",
                format!("expected {}, rebuilt {}", step.before, labeled.spider()),
            ));
        }
    }
    Ok(Construction { labeled, base, residue, reductions, trace })
}

fn apply_base(base: BaseRule, layout: &crate::spider::SpiderLayout) -> Result<RuleLabeling, ConstructError> {
    match base {
        BaseRule::TypeA => label_type_a(layout),
        BaseRule::TypeBc => label_type_bc(layout, &TypeBcContext::new(layout)?),
        BaseRule::OddRight => label_odd_right(layout),
        BaseRule::EvenRight => label_even_right(layout, &EvenCaseContext::new(layout)?),
        BaseRule::Figure2 => Ok(figure2_labeling().1),
    }
}

fn without_unit(side: &[usize]) -> Vec<usize> {
    let mut out = side.to_vec();
    let pos = out.iter().position(|&l| l == 1).expect("side has a unit path");
    out.remove(pos);
    out
}

type Plan = (Vec<ReductionStep>, CanonicalDoubleSpider, BaseRule);

/// Reduces until a base rule applies. Every intermediate instance is built
/// with [`CanonicalDoubleSpider::from_sides`], so a reduction that would flip
/// the orientation is reported instead of silently relabeling the hubs.
fn plan(spider: &CanonicalDoubleSpider) -> Result<Plan, ConstructError> {
    let mut steps = Vec::new();
    let mut cur = spider.clone();
    let figure2 = figure2_spider();
    loop {
        if cur == figure2 {
            return Ok((steps, cur, BaseRule::Figure2));
        }
        let p = cur.parameters();
        let shortest = cur.left().iter().chain(cur.right()).copied().min().expect("sides are nonempty");
        let (kind, next) = match classify(&p) {
            CaseTag::UnequalOddRight => return Ok((steps, cur, BaseRule::OddRight)),
            CaseTag::UnequalEvenRight => return Ok((steps, cur, BaseRule::EvenRight)),
            CaseTag::UnequalAllUnitRight if cur.right().len() > 2 => {
                (ReductionKind::RemoveRightUnit, remove_unit(&cur, Side::Right)?)
            }
            CaseTag::UnequalAllUnitRight => {
                if cur.left().contains(&1) && cur.left().len() > 2 {
                    (ReductionKind::RemoveLeftUnit, remove_unit(&cur, Side::Left)?)
                } else {
                    return Ok((steps, cur, BaseRule::TypeBc));
                }
            }
            CaseTag::EqualDeg3 | CaseTag::EqualDegHigh if shortest >= 2 => {
                (ReductionKind::DeleteLeafLevel, cur.delete_leaf_level()?)
            }
            CaseTag::EqualDeg3 => {
                let base =
                    if cur.left() == [1, 1] && cur.right() == [1, 1] { BaseRule::TypeA } else { BaseRule::TypeBc };
                return Ok((steps, cur, base));
            }
            CaseTag::EqualDegHigh => (ReductionKind::RemoveRightUnit, remove_unit(&cur, Side::Right)?),
        };
        steps.push(ReductionStep { kind, before: cur.clone(), after: next.clone() });
        cur = next;
    }
}

fn remove_unit(spider: &CanonicalDoubleSpider, side: Side) -> Result<CanonicalDoubleSpider, ConstructError> {
    let (left, right) = match side {
        Side::Left => (without_unit(spider.left()), spider.right().to_vec()),
        Side::Right => (spider.left().to_vec(), without_unit(spider.right())),
    };
    Ok(CanonicalDoubleSpider::from_sides(spider.core(), left, right)?)
}
