//! Sprague-Grundy values: the dense table over canonical positions, the
//! `mex` primitive, and the closed-form strategy queries that need no table.

use crate::beatty;
use crate::error::{Error, Result};
use crate::position::Position;
use crate::rules::{self, GameRule, Move};

/// Minimum excludant: the smallest nonnegative integer absent from `values`.
/// `mex` of the empty set is 0.
pub fn mex(values: &[u32]) -> u32 {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for &v in values {
        if (v as usize) <= n {
            seen[v as usize] = true;
        }
    }
    seen.iter().position(|&s| !s).unwrap() as u32
}

/// Dense Sprague-Grundy table over canonical positions `(a, b)` with
/// `a <= a_max` and `a <= b <= b_max`, stored triangular row-major.
///
/// A square table (`a_max == b_max == bound`) covers every canonical
/// position within the bound; a band (`a_max < b_max`) holds long row
/// prefixes, which is all the row-structure checks need. Bands are closed
/// under followers: every move from a stored position lands on a stored
/// position.
///
/// Tables are immutable once built; reads are freely shareable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyTable {
    rule: GameRule,
    a_max: u64,
    b_max: u64,
    row_offset: Vec<usize>,
    values: Vec<u32>,
}

impl GrundyTable {
    /// Full square table over `0 <= a <= b <= bound`, row-major order.
    pub fn build(rule: &GameRule, bound: u64) -> Result<Self> {
        crate::build::rowmajor(rule, bound, bound)
    }

    /// Band table over `a <= a_max`, `a <= b <= b_max`, row-major order.
    pub fn build_band(rule: &GameRule, a_max: u64, b_max: u64) -> Result<Self> {
        crate::build::rowmajor(rule, a_max, b_max)
    }

    /// Square table computed in antidiagonal (wavefront) order; identical
    /// values to [`GrundyTable::build`].
    pub fn build_wavefront(rule: &GameRule, bound: u64) -> Result<Self> {
        crate::build::wavefront(rule, bound, bound)
    }

    /// Band table in wavefront order.
    pub fn build_band_wavefront(rule: &GameRule, a_max: u64, b_max: u64) -> Result<Self> {
        crate::build::wavefront(rule, a_max, b_max)
    }

    pub(crate) fn with_values(rule: GameRule, a_max: u64, b_max: u64, values: Vec<u32>) -> Self {
        let row_offset = row_offsets(a_max, b_max);
        debug_assert_eq!(values.len(), cell_count(a_max, b_max) as usize);
        GrundyTable { rule, a_max, b_max, row_offset, values }
    }

    pub fn rule(&self) -> &GameRule {
        &self.rule
    }

    pub fn a_max(&self) -> u64 {
        self.a_max
    }

    pub fn b_max(&self) -> u64 {
        self.b_max
    }

    /// Bound of a square table (`a_max == b_max`).
    pub fn bound(&self) -> u64 {
        debug_assert_eq!(self.a_max, self.b_max);
        self.b_max
    }

    pub fn is_square(&self) -> bool {
        self.a_max == self.b_max
    }

    #[inline]
    fn idx(&self, a: u64, b: u64) -> usize {
        debug_assert!(a <= b && a <= self.a_max && b <= self.b_max);
        self.row_offset[a as usize] + (b - a) as usize
    }

    /// Unchecked canonical lookup for hot paths.
    #[inline]
    pub(crate) fn g(&self, a: u64, b: u64) -> u32 {
        self.values[self.idx(a, b)]
    }

    /// Symmetric lookup: accepts either pile order.
    pub fn grundy_at(&self, a: u64, b: u64) -> Result<u32> {
        self.grundy(Position::new(a, b))
    }

    /// O(1) table lookup.
    pub fn grundy(&self, p: Position) -> Result<u32> {
        if p.low() > self.a_max || p.high() > self.b_max {
            return Err(Error::OutOfBounds {
                a: p.low(),
                b: p.high(),
                a_max: self.a_max,
                b_max: self.b_max,
            });
        }
        Ok(self.g(p.low(), p.high()))
    }

    /// The sequence `g(a, i)` for `i = 0..=b_max`, using symmetry
    /// `g(a, i) = g(i, a)` below the diagonal.
    pub fn row(&self, a: u64) -> Result<Vec<u32>> {
        if a > self.a_max {
            return Err(Error::OutOfBounds { a, b: a, a_max: self.a_max, b_max: self.b_max });
        }
        let mut out = Vec::with_capacity((self.b_max + 1) as usize);
        for i in 0..a {
            out.push(self.g(i, a));
        }
        for b in a..=self.b_max {
            out.push(self.g(a, b));
        }
        Ok(out)
    }

    /// Iterate every stored canonical position as `(a, b, g)`.
    pub fn iter_cells(&self) -> impl Iterator<Item = (u64, u64, u32)> + '_ {
        (0..=self.a_max).flat_map(move |a| (a..=self.b_max).map(move |b| (a, b, self.g(a, b))))
    }

    /// CSV export: header `a,b,g`, one line per canonical position, sorted
    /// by `(a, b)`, LF endings, no trailing separator.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 8 + 8);
        out.push_str("a,b,g\n");
        for (a, b, g) in self.iter_cells() {
            out.push_str(&format!("{a},{b},{g}\n"));
        }
        out
    }
}

pub(crate) fn cell_count(a_max: u64, b_max: u64) -> u64 {
    // sum over a of (b_max - a + 1)
    (a_max + 1) * (b_max + 1) - a_max * (a_max + 1) / 2
}

fn row_offsets(a_max: u64, b_max: u64) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(a_max as usize + 1);
    let mut acc = 0usize;
    for a in 0..=a_max {
        offsets.push(acc);
        acc += (b_max - a + 1) as usize;
    }
    offsets
}

/// Closed-form P-position test, valid for all three named games (and for the
/// generalized extension family, which preserves the same set): `(low, high)`
/// loses for the player to move iff `low = a(high - low)`.
///
/// Constant time, no table. Inputs past the exact-arithmetic range are never
/// P-positions: `a(n)` would exceed `u64::MAX >= low` there.
pub fn is_p_position(p: Position) -> bool {
    let n = p.high() - p.low();
    beatty::a(n).map(|a| a == p.low()).unwrap_or(false)
}

/// All labeled moves from `p` that land on a P-position; empty exactly when
/// `p` is itself a P-position. Uses the closed form on each follower, so no
/// table is required.
pub fn winning_moves(rule: &GameRule, p: Position) -> Vec<(Move, Position)> {
    rules::moves_with_labels(rule, p)
        .into_iter()
        .filter(|(_, q)| is_p_position(*q))
        .collect()
}
