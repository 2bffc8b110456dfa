//! Lyndon and inverse Lyndon arrays in linear time over general ordered
//! alphabets.
//!
//! The classical Lyndon array stores at each position the length of the
//! longest Lyndon prefix of the suffix starting there; the inverse Lyndon
//! array does the same for inverse Lyndon words (words strictly greater
//! than all their proper suffixes). Both are built by one nearest-suffix
//! chain walk driven by an amortized LCE engine — the classical array from
//! nearest *smaller* suffixes, the inverse array from nearest *greater*
//! suffixes plus a border correction that the edge LCE already carries.
//!
//! ```
//! use lyndon_arrays::text::{FramedText, SentinelMode};
//! use lyndon_arrays::{ngs, nss};
//!
//! let t = FramedText::from_bytes(&b"banana"[..], SentinelMode::Standard)?;
//! let classical = nss::build_standard(&t)?;
//! assert_eq!(classical.lambda[1..], [8, 1, 2, 1, 2, 1, 1, 1]);
//!
//! let t = FramedText::from_bytes(&b"aababbaa"[..], SentinelMode::Inverse)?;
//! let inverse = ngs::build_inverse(&t)?;
//! assert_eq!(inverse.lambda_inv[1..], [10, 2, 1, 3, 1, 4, 3, 2, 1, 1]);
//! # Ok::<(), lyndon_arrays::Error>(())
//! ```
//!
//! All arrays use framed 1-based positions: position 1 is the leading
//! sentinel, position `n + 2` the terminal one, slot 0 of every array is
//! unused.

// 1-based parallel arrays throughout; indexed loops read better here
#![allow(clippy::needless_range_loop)]

pub mod bench;
mod chain;
pub mod checks;
pub mod error;
pub mod gen;
pub mod lce;
pub mod ngs;
pub mod nss;
pub mod oracle;
pub mod suffix_rules;
pub mod text;

pub use error::{Error, Result};
pub use lce::{LceCounters, LceState};
pub use ngs::{build_inverse, recover_lambda_inv, InverseResult};
pub use nss::{build_standard, StandardResult};
pub use text::{AlphabetOrder, FramedText, SentinelMode};
