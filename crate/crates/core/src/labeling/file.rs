//! Labeling text format for canonical double spiders:
//!
//! ```text
//! m = 8
//! edge = core/1, label = 3
//! edge = L/odd/1/3, label = 7
//! ```
//!
//! One record per edge, addresses as printed by
//! [`EdgeAddress`](crate::spider::EdgeAddress). Whitespace is free, blank
//! lines and `#` comments are skipped. Records are written in canonical
//! address order.

use std::collections::HashSet;

use thiserror::Error;

use super::EdgeLabeling;
use crate::error::FormatError;
use crate::spider::{EdgeAddress, SpiderLayout};

/// Syntactic content of a labeling file, not yet matched to a spider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingFile {
    pub m: usize,
    pub records: Vec<(EdgeAddress, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingFileError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("file declares m = {declared} but the instance has {actual} edges")]
    WrongEdgeCount { declared: usize, actual: usize },
    #[error("edge {0} does not exist in this instance")]
    UnknownEdge(EdgeAddress),
    #[error("edge {0} is labeled twice")]
    DuplicateEdge(EdgeAddress),
    #[error("edge {0} has no label")]
    MissingEdge(EdgeAddress),
}

pub fn parse_labeling(text: &str) -> Result<LabelingFile, FormatError> {
    let mut m = None;
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let compact: String = content.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            continue;
        }
        if let Some(value) = compact.strip_prefix("m=") {
            let parsed = value.parse().map_err(|_| FormatError::BadValue { line, value: value.to_string() })?;
            if m.replace(parsed).is_some() {
                return Err(FormatError::DuplicateKey { line, key: "m".into() });
            }
            continue;
        }
        let bad = |message: &str| FormatError::BadRecord { line, message: message.to_string() };
        let (edge_part, label_part) =
            compact.split_once(',').ok_or_else(|| bad("expected `edge = <address>, label = <int>`"))?;
        let address = edge_part.strip_prefix("edge=").ok_or_else(|| bad("record must start with `edge =`"))?;
        let label = label_part.strip_prefix("label=").ok_or_else(|| bad("missing `label =`"))?;
        let address: EdgeAddress =
            address.parse().map_err(|e: crate::spider::AddressParseError| bad(&e.to_string()))?;
        let label = label.parse().map_err(|_| FormatError::BadValue { line, value: label.to_string() })?;
        records.push((address, label));
    }
    Ok(LabelingFile { m: m.ok_or(FormatError::MissingKey("m"))?, records })
}

impl LabelingFile {
    /// Matches records against the layout's edges. Label values are not
    /// checked here; a repeated label is a verification failure, not a
    /// format error.
    pub fn to_labeling(&self, layout: &SpiderLayout) -> Result<EdgeLabeling, LabelingFileError> {
        if self.m != layout.edge_count() {
            return Err(LabelingFileError::WrongEdgeCount { declared: self.m, actual: layout.edge_count() });
        }
        let mut labels = vec![None; layout.edge_count()];
        let mut seen = HashSet::new();
        for &(addr, label) in &self.records {
            let id = layout.edge_id(&addr).ok_or(LabelingFileError::UnknownEdge(addr))?;
            if !seen.insert(addr) {
                return Err(LabelingFileError::DuplicateEdge(addr));
            }
            labels[id] = Some(label);
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(id, l)| l.ok_or(LabelingFileError::MissingEdge(layout.edge_address(id))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EdgeLabeling::new(labels))
    }
}

pub fn format_labeling(layout: &SpiderLayout, labeling: &EdgeLabeling) -> String {
    let mut out = format!("m = {}\n", labeling.total_edges());
    for (id, addr) in layout.edge_addresses().iter().enumerate() {
        out.push_str(&format!("edge = {addr}, label = {}\n", labeling.label(id)));
    }
    out
}
