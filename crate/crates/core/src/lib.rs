//! Analysis engine for Wythoff's game and two variants that keep its losing
//! positions: a restriction (single-pile removal only from the larger pile)
//! and an extension (an adjoined move taking `k` from the smaller pile and
//! `l < k` from the other). The crate computes dense Sprague-Grundy tables,
//! classifies integers against the golden-ratio Beatty sequences, checks the
//! structural claims about these games exhaustively at configurable bounds,
//! and mines Grundy rows for additive periodicity.

pub mod beatty;
mod build;
pub mod cli;
pub mod conjecture;
pub mod error;
pub mod grundy;
pub mod position;
pub mod report;
pub mod rules;
pub mod verify;

pub use error::{Error, Result};
pub use grundy::GrundyTable;
pub use position::Position;
pub use rules::GameRule;
