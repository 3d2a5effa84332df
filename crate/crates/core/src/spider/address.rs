use std::fmt;
use std::str::FromStr;

/// Position of an edge in a canonical double spider.
///
/// On right paths `pos` counts from the hub outward, so the pendant edge has
/// the largest index. On left paths it counts from the leaf inward: the
/// pendant edge is `pos = 1` and the hub edge has the largest index. Core
/// edges run `1..=s` from the left hub. All indices are 1-based.
///
/// The derived order (core, right odd, right even, left odd, left even, left
/// unit) is the canonical edge order used for files and layouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeAddress {
    Core(usize),
    RightOdd { path: usize, pos: usize },
    RightEven { path: usize, pos: usize },
    LeftOdd { path: usize, pos: usize },
    LeftEven { path: usize, pos: usize },
    LeftUnit(usize),
}

impl EdgeAddress {
    /// Position along its own path (unit paths have a single edge, index 1).
    pub fn position(&self) -> usize {
        match *self {
            EdgeAddress::Core(j) => j,
            EdgeAddress::RightOdd { pos, .. }
            | EdgeAddress::RightEven { pos, .. }
            | EdgeAddress::LeftOdd { pos, .. }
            | EdgeAddress::LeftEven { pos, .. } => pos,
            EdgeAddress::LeftUnit(_) => 1,
        }
    }

    pub fn is_odd_edge(&self) -> bool {
        self.position() % 2 == 1
    }
}

impl fmt::Display for EdgeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EdgeAddress::Core(j) => write!(f, "core/{j}"),
            EdgeAddress::RightOdd { path, pos } => write!(f, "R/odd/{path}/{pos}"),
            EdgeAddress::RightEven { path, pos } => write!(f, "R/even/{path}/{pos}"),
            EdgeAddress::LeftOdd { path, pos } => write!(f, "L/odd/{path}/{pos}"),
            EdgeAddress::LeftEven { path, pos } => write!(f, "L/even/{path}/{pos}"),
            EdgeAddress::LeftUnit(i) => write!(f, "L/unit/{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddressParseError(pub String);

impl fmt::Display for AddressParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed edge address `{}`", self.0)
    }
}

impl std::error::Error for AddressParseError {}

fn index(part: &str) -> Option<usize> {
    // Plain decimal only: no sign, no leading zeros, at least 1.
    if part.is_empty() || part.starts_with('0') || !part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    part.parse().ok()
}

impl FromStr for EdgeAddress {
    type Err = AddressParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AddressParseError(s.to_string());
        let parts: Vec<&str> = s.split('/').collect();
        let idx = |k: usize| parts.get(k).copied().and_then(index).ok_or_else(err);
        let addr = match parts.as_slice() {
            ["core", _] => EdgeAddress::Core(idx(1)?),
            ["R", "odd", _, _] => EdgeAddress::RightOdd { path: idx(2)?, pos: idx(3)? },
            ["R", "even", _, _] => EdgeAddress::RightEven { path: idx(2)?, pos: idx(3)? },
            ["L", "odd", _, _] => EdgeAddress::LeftOdd { path: idx(2)?, pos: idx(3)? },
            ["L", "even", _, _] => EdgeAddress::LeftEven { path: idx(2)?, pos: idx(3)? },
            ["L", "unit", _] => EdgeAddress::LeftUnit(idx(2)?),
            _ => return Err(err()),
        };
        Ok(addr)
    }
}

/// Position of a vertex. Path vertices share the indexing of the edge that
/// joins them to the previous vertex on the right side and to the next
/// vertex on the left side, so `pos = 1` on a left path is its leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexAddress {
    LeftHub,
    /// Interior core vertex `v_j`, `2 <= j <= s`.
    Core(usize),
    RightHub,
    RightOdd {
        path: usize,
        pos: usize,
    },
    RightEven {
        path: usize,
        pos: usize,
    },
    LeftOdd {
        path: usize,
        pos: usize,
    },
    LeftEven {
        path: usize,
        pos: usize,
    },
    LeftUnit(usize),
}

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VertexAddress::LeftHub => f.write_str("v_l"),
            VertexAddress::RightHub => f.write_str("v_r"),
            VertexAddress::Core(j) => write!(f, "core/{j}"),
            VertexAddress::RightOdd { path, pos } => write!(f, "R/odd/{path}/{pos}"),
            VertexAddress::RightEven { path, pos } => write!(f, "R/even/{path}/{pos}"),
            VertexAddress::LeftOdd { path, pos } => write!(f, "L/odd/{path}/{pos}"),
            VertexAddress::LeftEven { path, pos } => write!(f, "L/even/{path}/{pos}"),
            VertexAddress::LeftUnit(i) => write!(f, "L/unit/{i}"),
        }
    }
}
