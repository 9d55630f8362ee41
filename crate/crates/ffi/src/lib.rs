//! C ABI for the analysis engine: flat functions over opaque table handles,
//! returning error codes. The matching header lives at `include/wythoff.h`
//! and is written by hand; `tests/capi.rs` keeps the two in sync.
//!
//! Conventions: every fallible function returns a `WYTHOFF_*` status code
//! and writes results through out-pointers, which are touched only on
//! `WYTHOFF_OK`. Handles and strings allocated here must be released with
//! the matching `*_free` function. Panics never cross the boundary.

use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use wythoff::{beatty, grundy, Error, GameRule, GrundyTable, Position};

pub const WYTHOFF_OK: c_int = 0;
/// An input is outside the exact-arithmetic or table range.
pub const WYTHOFF_ERR_RANGE: c_int = 1;
/// The operation is not defined for the requested game.
pub const WYTHOFF_ERR_UNSUPPORTED: c_int = 2;
/// Table allocation failed.
pub const WYTHOFF_ERR_ALLOC: c_int = 3;
/// A required pointer argument was null.
pub const WYTHOFF_ERR_NULL_ARGUMENT: c_int = 4;
/// Invalid configuration value (unknown game id, bad band, ...).
pub const WYTHOFF_ERR_CONFIG: c_int = 5;
/// An internal panic was caught at the boundary.
pub const WYTHOFF_ERR_PANIC: c_int = 6;

pub const WYTHOFF_GAME_WYTHOFF: c_int = 0;
pub const WYTHOFF_GAME_R_WYTHOFF: c_int = 1;
pub const WYTHOFF_GAME_E_WYTHOFF: c_int = 2;

pub const WYTHOFF_SEQ_A: c_int = 0;
pub const WYTHOFF_SEQ_B: c_int = 1;

/// Opaque Sprague-Grundy table handle.
pub struct WythoffTable {
    inner: GrundyTable,
}

fn code_of(err: &Error) -> c_int {
    match err {
        Error::IndexRange { .. }
        | Error::ClassifyZero
        | Error::OutOfBounds { .. }
        | Error::WindowTooSmall { .. } => WYTHOFF_ERR_RANGE,
        Error::FormulaUnavailable { .. } => WYTHOFF_ERR_UNSUPPORTED,
        Error::TableAlloc { .. } => WYTHOFF_ERR_ALLOC,
        Error::BadBand { .. } | Error::Config(_) => WYTHOFF_ERR_CONFIG,
    }
}

fn rule_of(game: c_int) -> Option<GameRule> {
    match game {
        WYTHOFF_GAME_WYTHOFF => Some(GameRule::Wythoff),
        WYTHOFF_GAME_R_WYTHOFF => Some(GameRule::RWythoff),
        WYTHOFF_GAME_E_WYTHOFF => Some(GameRule::EWythoff),
        _ => None,
    }
}

/// `floor(n * phi)` into `*out`.
///
/// # Safety
/// `out` must be a valid pointer to a `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn wythoff_beatty_a(n: u64, out: *mut u64) -> c_int {
    if out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    match beatty::a(n) {
        Ok(v) => {
            *out = v;
            WYTHOFF_OK
        }
        Err(e) => code_of(&e),
    }
}

/// `floor(n * phi^2)` into `*out`.
///
/// # Safety
/// `out` must be a valid pointer to a `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn wythoff_beatty_b(n: u64, out: *mut u64) -> c_int {
    if out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    match beatty::b(n) {
        Ok(v) => {
            *out = v;
            WYTHOFF_OK
        }
        Err(e) => code_of(&e),
    }
}

/// Classify `v >= 1` into sequence A or B with its index.
///
/// # Safety
/// `out_kind` and `out_index` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wythoff_classify(v: u64, out_kind: *mut c_int, out_index: *mut u64) -> c_int {
    if out_kind.is_null() || out_index.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    match beatty::classify(v) {
        Ok(class) => {
            *out_kind = match class.kind {
                beatty::SeqKind::A => WYTHOFF_SEQ_A,
                beatty::SeqKind::B => WYTHOFF_SEQ_B,
            };
            *out_index = class.index;
            WYTHOFF_OK
        }
        Err(e) => code_of(&e),
    }
}

/// Writes 1 to `*out` when `(a, b)` is a losing position of all three
/// games, else 0.
///
/// # Safety
/// `out` must be a valid pointer to an `int`.
#[no_mangle]
pub unsafe extern "C" fn wythoff_is_p_position(a: u64, b: u64, out: *mut c_int) -> c_int {
    if out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    *out = grundy::is_p_position(Position::new(a, b)) as c_int;
    WYTHOFF_OK
}

/// Build a square table for `game` over `0 <= a <= b <= bound` and hand
/// back an owned handle.
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`wythoff_table_free`].
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_build(game: c_int, bound: u64, out: *mut *mut WythoffTable) -> c_int {
    wythoff_table_build_band(game, bound, bound, out)
}

/// Build a band table (`a <= a_max`, `a <= b <= b_max`).
///
/// # Safety
/// As [`wythoff_table_build`].
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_build_band(
    game: c_int,
    a_max: u64,
    b_max: u64,
    out: *mut *mut WythoffTable,
) -> c_int {
    if out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    let Some(rule) = rule_of(game) else {
        return WYTHOFF_ERR_CONFIG;
    };
    match catch_unwind(AssertUnwindSafe(|| GrundyTable::build_band(&rule, a_max, b_max))) {
        Ok(Ok(inner)) => {
            *out = Box::into_raw(Box::new(WythoffTable { inner }));
            WYTHOFF_OK
        }
        Ok(Err(e)) => code_of(&e),
        Err(_) => WYTHOFF_ERR_PANIC,
    }
}

/// Release a table handle. Null is accepted and ignored.
///
/// # Safety
/// `table` must be null or a handle obtained from a build function, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_free(table: *mut WythoffTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Look up the Sprague-Grundy value of `(a, b)` (either pile order).
///
/// # Safety
/// `table` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_grundy(
    table: *const WythoffTable,
    a: u64,
    b: u64,
    out: *mut u32,
) -> c_int {
    if table.is_null() || out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    match (*table).inner.grundy_at(a, b) {
        Ok(g) => {
            *out = g;
            WYTHOFF_OK
        }
        Err(e) => code_of(&e),
    }
}

/// Row and column limits of a handle.
///
/// # Safety
/// `table` must be a live handle; out-pointers valid.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_limits(
    table: *const WythoffTable,
    out_a_max: *mut u64,
    out_b_max: *mut u64,
) -> c_int {
    if table.is_null() || out_a_max.is_null() || out_b_max.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    *out_a_max = (*table).inner.a_max();
    *out_b_max = (*table).inner.b_max();
    WYTHOFF_OK
}

/// CSV export (`a,b,g` header, one canonical cell per line) as a newly
/// allocated NUL-terminated string; release with [`wythoff_string_free`].
///
/// # Safety
/// `table` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wythoff_table_csv(table: *const WythoffTable, out: *mut *mut c_char) -> c_int {
    if table.is_null() || out.is_null() {
        return WYTHOFF_ERR_NULL_ARGUMENT;
    }
    let csv = (*table).inner.to_csv();
    match CString::new(csv) {
        Ok(s) => {
            *out = s.into_raw();
            WYTHOFF_OK
        }
        Err(_) => WYTHOFF_ERR_PANIC,
    }
}

/// Release a string allocated by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by [`wythoff_table_csv`], not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn wythoff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
