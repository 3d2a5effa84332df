//! Strongly antimagic labelings of double spiders.

pub mod construct;
pub mod dot;
pub mod error;
pub mod labeling;
pub mod oracle;
pub mod spider;
pub mod sweep;
pub mod tree;
