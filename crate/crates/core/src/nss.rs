//! Classical Lyndon array via nearest smaller suffixes.
//!
//! In Standard sentinel mode the nearest-smaller-suffix edges determine the
//! Lyndon array directly: the maximal Lyndon subword at `i` ends right
//! before the next smaller suffix, so `lambda[i] = next[i] - i`.

use crate::chain::{build_chain, Seek};
use crate::error::{Error, Result};
use crate::lce::LceCounters;
use crate::text::{FramedText, SentinelMode};

/// Arrays produced by [`build_standard`]; all 1-based over framed
/// positions with slot 0 unused.
///
/// Boundary conventions: `next[1] = next[n] = n + 1`, `prev[1] = 0`,
/// `prev[n] = 1` where `n` is the framed length.
#[derive(Debug, Clone)]
pub struct StandardResult {
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
    pub nlce: Vec<usize>,
    pub plce: Vec<usize>,
    pub lambda: Vec<usize>,
    pub counters: LceCounters,
    pub fingerprint: u64,
}

impl StandardResult {
    pub fn framed_len(&self) -> usize {
        self.next.len() - 1
    }

    /// The Lyndon array restricted to interior positions (sentinels
    /// stripped), aligned with the interior word.
    pub fn interior_lambda(&self) -> &[usize] {
        &self.lambda[2..self.framed_len()]
    }
}

/// Builds next/prev, the per-edge LCEs and the Lyndon array in one
/// left-to-right pass.
pub fn build_standard(t: &FramedText) -> Result<StandardResult> {
    if t.mode() != SentinelMode::Standard {
        return Err(Error::ModeMismatch {
            expected: SentinelMode::Standard,
            found: t.mode(),
        });
    }
    let b = build_chain(t, Seek::Smaller)?;
    let n = t.framed_len();
    let mut lambda = vec![0usize; n + 1];
    for i in 1..=n {
        lambda[i] = b.next[i] - i;
    }
    Ok(StandardResult {
        next: b.next,
        prev: b.prev,
        nlce: b.nlce,
        plce: b.plce,
        lambda,
        counters: b.counters,
        fingerprint: t.fingerprint(),
    })
}
