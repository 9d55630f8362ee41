//! Table construction.
//!
//! Two cell orders are supported and must produce identical tables:
//!
//! * row-major — ascending `a`, then `b`; the default everywhere;
//! * antidiagonal wavefront — ascending `a + b`. All positions of equal
//!   total are mutually independent (every move strictly decreases the
//!   total), so cell evaluation inside an antidiagonal may run on multiple
//!   threads (`WYTHOFF_THREADS` caps this; 0 or unset means auto).
//!
//! The named games admit an amortized O(1)-per-cell scheme: the single-pile
//! and equal-removal followers of `(a, b)` are exactly the cells already
//! stored in column `b`, column `a`, row `a`, and diagonal `b - a`, so the
//! builder keeps one presence bitset per column and per diagonal plus a
//! running bitset for the current row, and finds each mex with a word-wise
//! scan. The extension's adjoined family additionally needs a staircase
//! region above the cell; its value counts are maintained by an O(a) sliding
//! delta per cell. Band tables (`a_max < b_max`) swap the per-column and
//! per-diagonal bitsets for per-cell stamp marking: O(a_max) per cell,
//! memory proportional to the value range rather than to `b_max` bitmaps.

use crate::error::{Error, Result};
use crate::grundy::{cell_count, GrundyTable};
use crate::position::Position;
use crate::rules::{followers_into, GameRule, RuleId};

/// Thread budget for wavefront construction: `WYTHOFF_THREADS`, where 0 or
/// unset (or unparsable) means the machine's available parallelism.
pub fn construction_threads() -> usize {
    match std::env::var("WYTHOFF_THREADS").ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(0) | None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        Some(n) => n,
    }
}

pub fn rowmajor(rule: &GameRule, a_max: u64, b_max: u64) -> Result<GrundyTable> {
    let mut values = alloc_values(a_max, b_max)?;
    match rule.id() {
        RuleId::GeneralizedE => fill_rowmajor_generic(rule, a_max, b_max, &mut values),
        kind => {
            if a_max == b_max {
                fill_rowmajor_bitsets(kind, a_max, &mut values);
            } else {
                fill_rowmajor_band(kind, a_max, b_max, &mut values);
            }
        }
    }
    Ok(GrundyTable::with_values(rule.clone(), a_max, b_max, values))
}

pub fn wavefront(rule: &GameRule, a_max: u64, b_max: u64) -> Result<GrundyTable> {
    let mut values = alloc_values(a_max, b_max)?;
    let threads = construction_threads();
    let incremental = matches!(rule.id(), RuleId::Wythoff | RuleId::RWythoff) && a_max == b_max && threads <= 1;
    if incremental {
        fill_wavefront_bitsets(rule.id(), a_max, &mut values);
    } else {
        fill_wavefront_scratch(rule, a_max, b_max, &mut values, threads);
    }
    Ok(GrundyTable::with_values(rule.clone(), a_max, b_max, values))
}

fn alloc_values(a_max: u64, b_max: u64) -> Result<Vec<u32>> {
    if a_max > b_max {
        return Err(Error::BadBand { a_max, b_max });
    }
    let cells = cell_count(a_max, b_max);
    let mut values: Vec<u32> = Vec::new();
    values
        .try_reserve_exact(cells as usize)
        .map_err(|_| Error::TableAlloc { cells, a_max, b_max })?;
    values.resize(cells as usize, 0);
    Ok(values)
}

/// Grundy values never exceed the position total, so `a_max + b_max + 2`
/// bits of presence state per structure always suffice.
fn value_cap(a_max: u64, b_max: u64) -> usize {
    (a_max + b_max + 2) as usize
}

// ---------------------------------------------------------------------------
// bit scratch

struct BitRows {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(rows: usize, bits_per_row: usize) -> Self {
        let words_per_row = bits_per_row.div_ceil(64);
        BitRows { words_per_row, bits: vec![0; rows * words_per_row] }
    }

    #[inline]
    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    #[inline]
    fn set(&mut self, r: usize, v: usize) {
        self.bits[r * self.words_per_row + (v >> 6)] |= 1u64 << (v & 63);
    }
}

#[inline]
fn bit_set(words: &mut [u64], v: usize) {
    words[v >> 6] |= 1u64 << (v & 63);
}

#[inline]
fn bit_clear(words: &mut [u64], v: usize) {
    words[v >> 6] &= !(1u64 << (v & 63));
}

#[inline]
fn bit_test(words: &[u64], v: usize) -> bool {
    words[v >> 6] & (1u64 << (v & 63)) != 0
}

/// First index `>= from` clear in every given bitmap. Termination is
/// guaranteed because the caller sizes the bitmaps past any reachable mex.
#[inline]
fn first_clear(bitmaps: &[&[u64]], from: usize) -> usize {
    let mut w = from >> 6;
    let mut mask = !0u64 << (from & 63);
    loop {
        let mut blocked = 0u64;
        for bm in bitmaps {
            blocked |= bm[w];
        }
        let free = !blocked & mask;
        if free != 0 {
            return (w << 6) + free.trailing_zeros() as usize;
        }
        w += 1;
        mask = !0;
    }
}

// ---------------------------------------------------------------------------
// row-major, square tables of the named games

fn fill_rowmajor_bitsets(kind: RuleId, bound: u64, values: &mut [u32]) {
    let cap = value_cap(bound, bound);
    let n = bound as usize;
    let mut col_bits = BitRows::new(n + 1, cap);
    let mut diag_bits = BitRows::new(n + 1, cap);
    let mut merged = vec![0u64; cap.div_ceil(64)];
    // Staircase-region state for the extension's adjoined moves.
    let is_ext = kind == RuleId::EWythoff;
    let mut tri_cnt = vec![0u32; if is_ext { cap } else { 0 }];
    let mut region_cnt = vec![0u32; if is_ext { cap } else { 0 }];
    let mut region_bits = vec![0u64; if is_ext { cap.div_ceil(64) } else { 1 }];

    let mut idx = 0usize;
    for a in 0..=n {
        // Followers below the diagonal, `(j, a)` for j < a, are column a.
        merged.copy_from_slice(col_bits.row(a));
        let mut rm = first_clear(&[&merged], 0);
        if is_ext {
            // Fold column a into the persistent strictly-upper-triangle
            // counts, then start this row's region from them: at b == a the
            // adjoined moves reach exactly the triangle above column a.
            for ap in 0..a {
                tri_cnt[values[cell_index(ap, a, n)] as usize] += 1;
            }
            region_cnt.copy_from_slice(&tri_cnt);
            region_bits.fill(0);
            for (v, &c) in region_cnt.iter().enumerate() {
                if c > 0 {
                    bit_set(&mut region_bits, v);
                }
            }
        }
        for b in a..=n {
            let d = b - a;
            if is_ext && b > a {
                // Slide the region right: per row above, column b enters and
                // column b - (a - ap) leaves.
                for ap in 0..a {
                    let vin = values[cell_index(ap, b, n)] as usize;
                    region_cnt[vin] += 1;
                    if region_cnt[vin] == 1 {
                        bit_set(&mut region_bits, vin);
                    }
                    let vout = values[cell_index(ap, b - (a - ap), n)] as usize;
                    region_cnt[vout] -= 1;
                    if region_cnt[vout] == 0 {
                        bit_clear(&mut region_bits, vout);
                    }
                }
            }
            let g = match kind {
                RuleId::RWythoff => first_clear(&[&merged, diag_bits.row(d)], rm),
                RuleId::Wythoff => first_clear(&[&merged, diag_bits.row(d), col_bits.row(b)], rm),
                RuleId::EWythoff => first_clear(&[&merged, diag_bits.row(d), &region_bits], rm),
                RuleId::GeneralizedE => unreachable!("generic path handles configured rules"),
            };
            values[idx] = g as u32;
            idx += 1;
            bit_set(&mut merged, g);
            col_bits.set(b, g);
            diag_bits.set(d, g);
            if g == rm {
                rm = first_clear(&[&merged], rm);
            }
        }
    }
}

/// Triangular row-major index for a square table of the given bound.
#[inline]
fn cell_index(a: usize, b: usize, bound: usize) -> usize {
    debug_assert!(a <= b && b <= bound);
    a * (bound + 1) - a * (a.saturating_sub(1)) / 2 + (b - a)
}

// ---------------------------------------------------------------------------
// row-major, band tables (small a_max, long rows)

fn fill_rowmajor_band(kind: RuleId, a_max: u64, b_max: u64, values: &mut [u32]) {
    let cap = value_cap(a_max, b_max);
    let (am, bm) = (a_max as usize, b_max as usize);
    let offsets = band_offsets(am, bm);
    let idx = |a: usize, b: usize| offsets[a] + (b - a);
    let mut merged = vec![0u64; cap.div_ceil(64)];
    let mut stamp = vec![0u32; cap];
    let mut stamp_id = 0u32;
    let is_ext = kind == RuleId::EWythoff;
    let mut region_cnt = vec![0u32; if is_ext { cap } else { 0 }];

    for a in 0..=am {
        merged.fill(0);
        for j in 0..a {
            bit_set(&mut merged, values[idx(j, a)] as usize);
        }
        let mut rm = first_clear(&[&merged], 0);
        if is_ext {
            region_cnt.fill(0);
            for ap in 0..a {
                for bp in (ap + 1)..=a {
                    region_cnt[values[idx(ap, bp)] as usize] += 1;
                }
            }
        }
        for b in a..=bm {
            if is_ext && b > a {
                for ap in 0..a {
                    region_cnt[values[idx(ap, b)] as usize] += 1;
                    region_cnt[values[idx(ap, b - (a - ap))] as usize] -= 1;
                }
            }
            stamp_id += 1;
            for j in 1..=a.min(b) {
                stamp[values[idx(a - j, b - j)] as usize] = stamp_id;
            }
            if kind == RuleId::Wythoff {
                for ap in 0..a {
                    stamp[values[idx(ap, b)] as usize] = stamp_id;
                }
            }
            let mut g = rm;
            loop {
                let blocked = bit_test(&merged, g)
                    || stamp[g] == stamp_id
                    || (is_ext && region_cnt[g] > 0);
                if !blocked {
                    break;
                }
                g += 1;
            }
            values[idx(a, b)] = g as u32;
            bit_set(&mut merged, g);
            if g == rm {
                rm = first_clear(&[&merged], rm);
            }
        }
    }
}

fn band_offsets(a_max: usize, b_max: usize) -> Vec<usize> {
    let mut offs = Vec::with_capacity(a_max + 1);
    let mut acc = 0usize;
    for a in 0..=a_max {
        offs.push(acc);
        acc += b_max - a + 1;
    }
    offs
}

// ---------------------------------------------------------------------------
// row-major, any rule, via full follower enumeration

fn fill_rowmajor_generic(rule: &GameRule, a_max: u64, b_max: u64, values: &mut [u32]) {
    let (am, bm) = (a_max as usize, b_max as usize);
    let offsets = band_offsets(am, bm);
    let idx = |a: usize, b: usize| offsets[a] + (b - a);
    let cap = value_cap(a_max, b_max);
    let mut stamp = vec![0u32; cap];
    let mut stamp_id = 0u32;
    let mut buf: Vec<Position> = Vec::new();
    for a in 0..=am {
        for b in a..=bm {
            stamp_id += 1;
            followers_into(rule, Position::new(a as u64, b as u64), &mut buf);
            for q in &buf {
                stamp[values[idx(q.low() as usize, q.high() as usize)] as usize] = stamp_id;
            }
            let mut g = 0usize;
            while stamp[g] == stamp_id {
                g += 1;
            }
            values[idx(a, b)] = g as u32;
        }
    }
}

// ---------------------------------------------------------------------------
// wavefront orders

fn fill_wavefront_bitsets(kind: RuleId, bound: u64, values: &mut [u32]) {
    let cap = value_cap(bound, bound);
    let n = bound as usize;
    let mut row_bits = BitRows::new(n + 1, cap);
    let mut col_bits = BitRows::new(n + 1, cap);
    let mut diag_bits = BitRows::new(n + 1, cap);
    let mut row_rm = vec![0u32; n + 1];
    for s in 0..=(2 * n) {
        for a in s.saturating_sub(n)..=(s / 2) {
            let b = s - a;
            let d = b - a;
            let rm = first_clear(&[row_bits.row(a), col_bits.row(a)], row_rm[a] as usize);
            row_rm[a] = rm as u32;
            let g = match kind {
                RuleId::RWythoff => {
                    first_clear(&[row_bits.row(a), col_bits.row(a), diag_bits.row(d)], rm)
                }
                RuleId::Wythoff => first_clear(
                    &[row_bits.row(a), col_bits.row(a), diag_bits.row(d), col_bits.row(b)],
                    rm,
                ),
                _ => unreachable!("incremental wavefront covers the base game and restriction"),
            };
            values[cell_index(a, b, n)] = g as u32;
            row_bits.set(a, g);
            col_bits.set(b, g);
            diag_bits.set(d, g);
        }
    }
}

/// Wavefront order with per-cell evaluation from scratch. Used for the
/// extension and configured rules (whose adjoined families defeat the
/// incremental bitsets) and whenever cell evaluation is spread over
/// multiple threads.
fn fill_wavefront_scratch(rule: &GameRule, a_max: u64, b_max: u64, values: &mut [u32], threads: usize) {
    let (am, bm) = (a_max as usize, b_max as usize);
    let offsets = band_offsets(am, bm);
    let cap = value_cap(a_max, b_max);
    for s in 0..=(am + bm) {
        let a_lo = s.saturating_sub(bm);
        let a_hi = am.min(s / 2);
        if a_lo > a_hi {
            continue;
        }
        let width = a_hi - a_lo + 1;
        let chunk = width.div_ceil(threads.max(1));
        let computed: Vec<Vec<u32>> = if threads <= 1 || width < 64 {
            let mut scratch = Scratch::new(cap);
            vec![(a_lo..=a_hi)
                .map(|a| cell_from_scratch(rule, a, s - a, values, &offsets, bm, &mut scratch))
                .collect()]
        } else {
            let values = &*values;
            let offsets = &offsets;
            std::thread::scope(|scope| {
                let mut handles = Vec::new();
                let mut start = a_lo;
                while start <= a_hi {
                    let end = (start + chunk - 1).min(a_hi);
                    handles.push(scope.spawn(move || {
                        let mut scratch = Scratch::new(cap);
                        (start..=end)
                            .map(|a| cell_from_scratch(rule, a, s - a, values, offsets, bm, &mut scratch))
                            .collect::<Vec<u32>>()
                    }));
                    start = end + 1;
                }
                handles.into_iter().map(|h| h.join().expect("builder thread")).collect()
            })
        };
        let mut a = a_lo;
        for part in computed {
            for g in part {
                values[offsets[a] + (s - a) - a] = g;
                a += 1;
            }
        }
    }
}

struct Scratch {
    stamp: Vec<u32>,
    id: u32,
    buf: Vec<Position>,
}

impl Scratch {
    fn new(cap: usize) -> Self {
        Scratch { stamp: vec![0; cap], id: 0, buf: Vec::new() }
    }
}

fn cell_from_scratch(
    rule: &GameRule,
    a: usize,
    b: usize,
    values: &[u32],
    offsets: &[usize],
    b_max: usize,
    scratch: &mut Scratch,
) -> u32 {
    let getv = |x: usize, y: usize| -> usize {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        values[offsets[lo] + (hi - lo)] as usize
    };
    debug_assert!(b <= b_max);
    scratch.id += 1;
    let id = scratch.id;
    let stamp = &mut scratch.stamp;
    // Single-pile removals from the larger pile, canonicalized.
    for j in 0..b {
        stamp[getv(a, j)] = id;
    }
    for j in 1..=a.min(b) {
        stamp[getv(a - j, b - j)] = id;
    }
    match rule.id() {
        RuleId::RWythoff => {}
        RuleId::Wythoff => {
            for i in 0..a {
                stamp[getv(i, b)] = id;
            }
        }
        RuleId::EWythoff => {
            for k in 1..=a {
                for l in 0..k {
                    stamp[getv(a - k, b - l)] = id;
                }
            }
        }
        RuleId::GeneralizedE => {
            followers_into(rule, Position::new(a as u64, b as u64), &mut scratch.buf);
            for q in &scratch.buf {
                stamp[getv(q.low() as usize, q.high() as usize)] = id;
            }
        }
    }
    let mut g = 0usize;
    while stamp[g] == id {
        g += 1;
    }
    g as u32
}
