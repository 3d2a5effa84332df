//! Exhaustive check of the construction over all small double spiders.
//!
//! With the `parallel` feature the instances are spread over a rayon pool;
//! results are collected in enumeration order either way, so the report is
//! identical for every worker count.

use std::fmt;

use thiserror::Error;

use crate::construct::{label_canonical, BaseRule};
use crate::labeling::verify_bijection;
use crate::oracle::{find_strongly_antimagic, OracleOutcome, SearchBudget};
use crate::spider::{classify, enumerate_instances, CanonicalDoubleSpider, CaseTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_edges: usize,
    /// Cross-check instances with at most this many edges against the oracle.
    pub oracle_max: Option<usize>,
    /// `None` uses the default pool size; `Some(1)` runs sequentially.
    pub workers: Option<usize>,
    pub oracle_budget: SearchBudget,
}

impl SweepConfig {
    pub fn new(max_edges: usize) -> Self {
        SweepConfig { max_edges, oracle_max: None, workers: None, oracle_budget: SearchBudget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    /// The oracle found a witness, as the construction says it must.
    Witness,
    /// Completed search without a witness: contradicts the construction.
    NoneExists,
    BudgetExhausted,
    Skipped,
}

impl fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleVerdict::Witness => "witness",
            OracleVerdict::NoneExists => "none",
            OracleVerdict::BudgetExhausted => "budget",
            OracleVerdict::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceRecord {
    pub spider: CanonicalDoubleSpider,
    pub case: CaseTag,
    pub base: Option<BaseRule>,
    pub bijection_ok: bool,
    pub strong_ok: bool,
    pub oracle: OracleVerdict,
    pub error: Option<String>,
}

impl InstanceRecord {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.bijection_ok
            && self.strong_ok
            && matches!(self.oracle, OracleVerdict::Witness | OracleVerdict::Skipped)
    }
}

impl fmt::Display for InstanceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let base = self.base.map_or("-".to_string(), |b| b.to_string());
        write!(
            f,
            "m={} {} case={} rule={} strong={} oracle={} {}",
            self.spider.edge_count(),
            self.spider,
            self.case.name(),
            base,
            self.strong_ok,
            self.oracle,
            verdict
        )?;
        if let Some(e) = &self.error {
            write!(f, " error=\"{e}\"")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub max_edges: usize,
    pub records: Vec<InstanceRecord>,
}

impl SweepReport {
    pub fn failures(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn oracle_checked(&self) -> usize {
        self.records.iter().filter(|r| r.oracle != OracleVerdict::Skipped).count()
    }

    /// One line per instance plus a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "instances={} failures={} oracle_checked={}\n",
            self.records.len(),
            self.failures().count(),
            self.oracle_checked()
        ));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max edges must be at least 5, got {0}")]
    TooSmall(usize),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

pub fn check_instance(spider: &CanonicalDoubleSpider, config: &SweepConfig) -> InstanceRecord {
    let case = classify(&spider.parameters());
    let mut record = InstanceRecord {
        spider: spider.clone(),
        case,
        base: None,
        bijection_ok: false,
        strong_ok: false,
        oracle: OracleVerdict::Skipped,
        error: None,
    };
    match label_canonical(spider) {
        Ok(c) => {
            record.base = Some(c.base);
            record.bijection_ok = verify_bijection(&c.labeled.labeling);
            record.strong_ok = c.labeled.report.strong_ok;
        }
        Err(e) => record.error = Some(e.to_string()),
    }
    if config.oracle_max.is_some_and(|max| spider.edge_count() <= max) {
        let tree = spider.materialize().tree().clone();
        record.oracle = match find_strongly_antimagic(&tree, &config.oracle_budget) {
            Ok(OracleOutcome::Found { .. }) => OracleVerdict::Witness,
            Ok(OracleOutcome::NoneExists { .. }) => OracleVerdict::NoneExists,
            Ok(OracleOutcome::BudgetExhausted { .. }) | Err(_) => OracleVerdict::BudgetExhausted,
        };
    }
    record
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    if config.max_edges < 5 {
        return Err(SweepError::TooSmall(config.max_edges));
    }
    let instances: Vec<_> = enumerate_instances(config.max_edges).collect();
    let records = check_all(&instances, config)?;
    Ok(SweepReport { max_edges: config.max_edges, records })
}

#[cfg(feature = "parallel")]
fn check_all(instances: &[CanonicalDoubleSpider], config: &SweepConfig) -> Result<Vec<InstanceRecord>, SweepError> {
    use rayon::prelude::*;

    if config.workers == Some(1) {
        return Ok(check_sequential(instances, config));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.workers {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| SweepError::Pool(e.to_string()))?;
    Ok(pool.install(|| instances.par_iter().map(|s| check_instance(s, config)).collect()))
}

#[cfg(not(feature = "parallel"))]
fn check_all(instances: &[CanonicalDoubleSpider], config: &SweepConfig) -> Result<Vec<InstanceRecord>, SweepError> {
    Ok(check_sequential(instances, config))
}

fn check_sequential(instances: &[CanonicalDoubleSpider], config: &SweepConfig) -> Vec<InstanceRecord> {
    instances.iter().map(|s| check_instance(s, config)).collect()
}
