use super::CanonicalDoubleSpider;

/// Path-length bookkeeping of a canonical double spider.
///
/// Right paths split into odd ones of length `2x+1` and even ones of length
/// `2y`; left paths into odd ones of length `2w+1` with `w >= 1`, even ones of
/// length `2z`, and unit paths. Every sequence is ascending, which fixes the
/// path numbering used by [`EdgeAddress`](super::EdgeAddress).
///
/// The prefix sums count odd-position and even-position edges over the first
/// `i` paths of a class; `i = 0` gives 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameters {
    pub core_len: usize,
    /// `x_i`: right odd path `i` has length `2 x_i + 1`.
    pub right_odd: Vec<usize>,
    /// `y_i`: right even path `i` has length `2 y_i`.
    pub right_even: Vec<usize>,
    /// `w_i >= 1`: left odd path `i` has length `2 w_i + 1`.
    pub left_odd: Vec<usize>,
    /// `z_i`: left even path `i` has length `2 z_i`.
    pub left_even: Vec<usize>,
    pub left_units: usize,
}

impl Parameters {
    pub fn derive(spider: &CanonicalDoubleSpider) -> Self {
        let mut p = Parameters {
            core_len: spider.core(),
            right_odd: Vec::new(),
            right_even: Vec::new(),
            left_odd: Vec::new(),
            left_even: Vec::new(),
            left_units: 0,
        };
        for &len in spider.right() {
            if len % 2 == 1 {
                p.right_odd.push(len / 2);
            } else {
                p.right_even.push(len / 2);
            }
        }
        for &len in spider.left() {
            match len {
                1 => p.left_units += 1,
                l if l % 2 == 1 => p.left_odd.push(l / 2),
                l => p.left_even.push(l / 2),
            }
        }
        p
    }

    /// `A^odd_i`: odd-position edges on the first `i` right odd paths.
    pub fn right_odd_odd_edges(&self, i: usize) -> usize {
        self.right_odd[..i].iter().map(|x| x + 1).sum()
    }

    /// `A^even_i`.
    pub fn right_odd_even_edges(&self, i: usize) -> usize {
        self.right_odd[..i].iter().sum()
    }

    /// `B_i`: odd (equivalently even) position edges on the first `i` right even paths.
    pub fn right_even_half_edges(&self, i: usize) -> usize {
        self.right_even[..i].iter().sum()
    }

    /// `C^odd_i`.
    pub fn left_odd_odd_edges(&self, i: usize) -> usize {
        self.left_odd[..i].iter().map(|w| w + 1).sum()
    }

    /// `C^even_i`.
    pub fn left_odd_even_edges(&self, i: usize) -> usize {
        self.left_odd[..i].iter().sum()
    }

    /// `D_i`.
    pub fn left_even_half_edges(&self, i: usize) -> usize {
        self.left_even[..i].iter().sum()
    }

    /// `A^all`: all edges on right odd paths.
    pub fn right_odd_total(&self) -> usize {
        let a = self.right_odd.len();
        self.right_odd_odd_edges(a) + self.right_odd_even_edges(a)
    }

    /// `B^all`.
    pub fn right_even_total(&self) -> usize {
        2 * self.right_even_half_edges(self.right_even.len())
    }

    /// `C^all`.
    pub fn left_odd_total(&self) -> usize {
        let c = self.left_odd.len();
        self.left_odd_odd_edges(c) + self.left_odd_even_edges(c)
    }

    /// `D^all`.
    pub fn left_even_total(&self) -> usize {
        2 * self.left_even_half_edges(self.left_even.len())
    }

    /// `m`, assembled from the class totals.
    pub fn edge_count(&self) -> usize {
        self.right_odd_total()
            + self.right_even_total()
            + self.core_len
            + self.left_odd_total()
            + self.left_even_total()
            + self.left_units
    }

    pub fn left_hub_degree(&self) -> usize {
        self.left_odd.len() + self.left_even.len() + self.left_units + 1
    }

    pub fn right_hub_degree(&self) -> usize {
        self.right_odd.len() + self.right_even.len() + 1
    }

    /// `s_1`: core edges labeled early, `floor(|s - 2| / 2)`.
    pub fn core_early(&self) -> usize {
        self.core_len.abs_diff(2) / 2
    }

    /// `s_2`: core edges still unlabeled after the middle core step: 1 when
    /// `s = 1` or `s` is even, otherwise 2.
    pub fn core_late(&self) -> usize {
        if self.core_len == 1 || self.core_len.is_multiple_of(2) {
            1
        } else {
            2
        }
    }
}

/// Which construction family an instance falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Both hubs have degree 3.
    EqualDeg3,
    /// Both hubs have the same degree, at least 4.
    EqualDegHigh,
    /// Left hub strictly larger; right side made only of unit paths.
    UnequalAllUnitRight,
    /// Left hub strictly larger; no right even path, some right odd path of length >= 3.
    UnequalOddRight,
    /// Left hub strictly larger; at least one right even path.
    UnequalEvenRight,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::EqualDeg3 => "equal-deg3",
            CaseTag::EqualDegHigh => "equal-deg-high",
            CaseTag::UnequalAllUnitRight => "unequal-all-unit-right",
            CaseTag::UnequalOddRight => "unequal-odd-right",
            CaseTag::UnequalEvenRight => "unequal-even-right",
        }
    }
}

pub fn classify(p: &Parameters) -> CaseTag {
    let (dl, dr) = (p.left_hub_degree(), p.right_hub_degree());
    debug_assert!(dl >= dr, "parameters must come from a canonical spider");
    if dl == dr {
        if dl == 3 {
            CaseTag::EqualDeg3
        } else {
            CaseTag::EqualDegHigh
        }
    } else if !p.right_even.is_empty() {
        CaseTag::UnequalEvenRight
    } else if p.right_odd.iter().any(|&x| x >= 1) {
        CaseTag::UnequalOddRight
    } else {
        CaseTag::UnequalAllUnitRight
    }
}
