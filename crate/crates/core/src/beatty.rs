//! Exact integer evaluation of the golden-ratio Beatty sequences
//! `a(n) = floor(n*phi)` and `b(n) = a(n) + n`, where `phi = (1+sqrt(5))/2`,
//! plus classification of any positive integer into exactly one of the two.
//!
//! The two sequences (for n >= 1) partition the positive integers, and
//! `(a(n), b(n))` enumerates the losing positions of all three games handled
//! by this crate. Everything here is integer-only: `floor(n*phi)` is computed
//! as `(n + isqrt(5*n^2)) / 2`, which is exact because `5*n^2` is never a
//! perfect square for n >= 1.

use crate::error::{Error, Result};

/// Which of the two complementary sequences a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    /// The slow sequence `a(n) = floor(n*phi)`.
    A,
    /// The fast sequence `b(n) = floor(n*phi) + n`.
    B,
}

/// The unique (kind, index) pair of a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeattyClass {
    pub kind: SeqKind,
    pub index: u64,
}

/// `floor(sqrt(5) * m)`, exact. Errors only when `5*m^2` overflows `u128`.
fn floor_sqrt5(m: u64) -> Result<u128> {
    let m = m as u128;
    let sq = (m * m).checked_mul(5).ok_or(Error::IndexRange { n: m as u64 })?;
    Ok(sq.isqrt())
}

/// `a(n) = floor(n * phi)`, exact.
pub fn a(n: u64) -> Result<u64> {
    let s = floor_sqrt5(n)?;
    u64::try_from((n as u128 + s) / 2).map_err(|_| Error::IndexRange { n })
}

/// `b(n) = floor(n * phi^2) = a(n) + n`, exact.
pub fn b(n: u64) -> Result<u64> {
    a(n)?.checked_add(n).ok_or(Error::IndexRange { n })
}

/// Classify a positive integer as `a(index)` or `b(index)`.
///
/// The candidate indices are obtained by inverting the sequences with the
/// same integer square-root method, so no search is involved. `v = 0` is
/// rejected: both sequences start at 0.
pub fn classify(v: u64) -> Result<BeattyClass> {
    if v == 0 {
        return Err(Error::ClassifyZero);
    }
    let w = v.checked_add(1).ok_or(Error::IndexRange { n: v })?;
    let s = floor_sqrt5(w)?; // floor(sqrt(5)*(v+1)), irrational inside
    // floor((v+1)/phi) = floor((sqrt(5)-1)(v+1)/2)
    let m = u64::try_from((s - w as u128) / 2).map_err(|_| Error::IndexRange { n: v })?;
    if a(m)? == v {
        return Ok(BeattyClass { kind: SeqKind::A, index: m });
    }
    // floor((v+1)/phi^2) = floor((3(v+1) - sqrt(5)(v+1))/2); the ceiling of
    // the irrational term is s+1.
    let n = u64::try_from((3 * w as u128 - s - 1) / 2).map_err(|_| Error::IndexRange { n: v })?;
    if b(n)? == v {
        return Ok(BeattyClass { kind: SeqKind::B, index: n });
    }
    unreachable!("every positive integer is in exactly one of the two sequences")
}
