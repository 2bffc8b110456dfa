//! Inverse Lyndon array via nearest greater suffixes.
//!
//! Inverse Lyndon words may carry borders, so unlike the classical case the
//! next greater suffix does not start right after the maximal factor at
//! `i`: it starts at the second occurrence of the factor's longest border.
//! That border length is exactly the LCE stored on the edge, which gives
//! the recovery identity
//!
//! ```text
//! lambda_inv[i] = next_inv[i] - i + nlce[i]
//! ```
//!
//! so the edge pass already carries everything the array needs and no
//! border is ever computed explicitly.

use crate::chain::{build_chain, Seek};
use crate::error::{Error, Result};
use crate::lce::LceCounters;
use crate::text::{FramedText, SentinelMode};

/// Arrays produced by [`build_inverse`]; all 1-based over framed positions
/// with slot 0 unused.
///
/// Boundary conventions match the classical result: `next_inv[1] =
/// next_inv[n] = n + 1`, `prev_inv[1] = 0`, `prev_inv[n] = 1`.
#[derive(Debug, Clone)]
pub struct InverseResult {
    pub next_inv: Vec<usize>,
    pub prev_inv: Vec<usize>,
    pub nlce: Vec<usize>,
    pub plce: Vec<usize>,
    pub lambda_inv: Vec<usize>,
    pub counters: LceCounters,
    pub fingerprint: u64,
}

impl InverseResult {
    pub fn framed_len(&self) -> usize {
        self.next_inv.len() - 1
    }

    /// The inverse Lyndon array restricted to interior positions
    /// (sentinels stripped), aligned with the interior word.
    pub fn interior_lambda_inv(&self) -> &[usize] {
        &self.lambda_inv[2..self.framed_len()]
    }
}

/// Builds next/prev greater-suffix edges, the per-edge LCEs and the
/// inverse Lyndon array in one left-to-right pass.
pub fn build_inverse(t: &FramedText) -> Result<InverseResult> {
    if t.mode() != SentinelMode::Inverse {
        return Err(Error::ModeMismatch {
            expected: SentinelMode::Inverse,
            found: t.mode(),
        });
    }
    let b = build_chain(t, Seek::Greater)?;
    let lambda_inv = recover_lambda_inv(&b.next, &b.nlce)?;
    Ok(InverseResult {
        next_inv: b.next,
        prev_inv: b.prev,
        nlce: b.nlce,
        plce: b.plce,
        lambda_inv,
        counters: b.counters,
        fingerprint: t.fingerprint(),
    })
}

/// Recovery pass: `lambda_inv[i] = next_inv[i] - i + nlce[i]` applied
/// positionwise. Exposed separately so the pass can be timed on its own.
///
/// Both arrays are 1-based with slot 0 unused, as produced by
/// [`build_inverse`].
pub fn recover_lambda_inv(next_inv: &[usize], nlce: &[usize]) -> Result<Vec<usize>> {
    if next_inv.len() != nlce.len() || next_inv.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "array lengths {} and {} unusable for recovery",
            next_inv.len(),
            nlce.len()
        )));
    }
    let n = next_inv.len() - 1;
    let mut lambda = vec![0usize; n + 1];
    for i in 1..=n {
        lambda[i] = next_inv[i] - i + nlce[i];
    }
    Ok(lambda)
}
