//! Constant-time suffix-comparison rules from the joint arrays.
//!
//! With both the classical and the inverse results built over the same
//! interior word, several suffix pairs can be ordered in O(1):
//!
//! 1. `j < i + lambda[i]` — `x_j` lies inside the maximal Lyndon factor at
//!    `i`, so `x_i < x_j`;
//! 2. `j = next_inv[i]` (equivalently `j = i + lambda_inv[i] - nlce[i]`) —
//!    the defining edge orders the pair;
//! 3. `j < next_inv[i]` — every suffix before the next greater one is
//!    smaller, so `x_i > x_j`;
//! 4. `i = prev[j]` or `i = prev_inv[j]` — again a defining edge.
//!
//! Verdicts are stated for the canonical interior suffix order: plain
//! lexicographic order of the interior suffixes in which a proper prefix
//! ranks before any word extending it. This is the order the Standard
//! framing realizes (`$` below the alphabet). The Inverse framing ranks a
//! prefix-suffix pair the opposite way, so when the rule-2 edge connects
//! such a pair — detectable in O(1) because the edge LCE then spans the
//! whole shorter suffix — the canonical verdict flips to Greater. The
//! remaining clauses can never fire on prefix-suffix pairs anchored at
//! interior positions.
//!
//! Clause order matters only at `i = 1`: the leading sentinel is minimal
//! in one framing and maximal in the other, so the inverse-derived clauses
//! would misorder pairs anchored there. Clause 1 always fires first for
//! `i = 1` (the whole framed word is a Lyndon word), which keeps every
//! verdict canonical; on interior-anchored pairs each clause is sound on
//! its own.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ngs::{build_inverse, InverseResult};
use crate::nss::{build_standard, StandardResult};
use crate::text::{FramedText, SentinelMode};

/// Outcome of a constant-time comparison attempt.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuffixOrdering {
    Less,
    Greater,
    Unknown,
}

/// A verdict plus the clause that produced it (1..=4), `None` when no
/// clause fired.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ComparisonVerdict {
    pub outcome: SuffixOrdering,
    pub rule: Option<u8>,
}

impl ComparisonVerdict {
    fn decided(outcome: SuffixOrdering, rule: u8) -> Self {
        ComparisonVerdict {
            outcome,
            rule: Some(rule),
        }
    }

    fn unknown() -> Self {
        ComparisonVerdict {
            outcome: SuffixOrdering::Unknown,
            rule: None,
        }
    }
}

/// Applies the four clauses in order to the framed pair `i < j`.
///
/// Both results must come from the same interior word (`std` in Standard
/// mode, `inv` in Inverse mode).
pub fn shortcut_compare(
    std: &StandardResult,
    inv: &InverseResult,
    i: usize,
    j: usize,
) -> Result<ComparisonVerdict> {
    if std.framed_len() != inv.framed_len() || std.fingerprint != inv.fingerprint {
        return Err(Error::InputMismatch(
            "standard and inverse results were built over different words".into(),
        ));
    }
    let n = std.framed_len();
    if i >= j {
        return Err(Error::InvalidInput(format!(
            "positions must satisfy i < j, got {} and {}",
            i, j
        )));
    }
    if i < 1 || j > n {
        return Err(Error::OutOfBounds {
            position: j,
            framed_len: n,
        });
    }

    if j < i + std.lambda[i] {
        return Ok(ComparisonVerdict::decided(SuffixOrdering::Less, 1));
    }
    if j == inv.next_inv[i] {
        // edge LCE spanning the whole shorter suffix means x_j is a prefix
        // of x_i; the canonical order then puts x_j first
        let outcome = if inv.nlce[i] == n - j {
            SuffixOrdering::Greater
        } else {
            SuffixOrdering::Less
        };
        return Ok(ComparisonVerdict::decided(outcome, 2));
    }
    if j < inv.next_inv[i] {
        return Ok(ComparisonVerdict::decided(SuffixOrdering::Greater, 3));
    }
    if std.prev[j] == i {
        return Ok(ComparisonVerdict::decided(SuffixOrdering::Less, 4));
    }
    if inv.prev_inv[j] == i {
        return Ok(ComparisonVerdict::decided(SuffixOrdering::Greater, 4));
    }
    Ok(ComparisonVerdict::unknown())
}

/// Both builds over one interior word, ready for [`shortcut_compare`].
pub struct JointBuild {
    pub standard: StandardResult,
    pub inverse: InverseResult,
}

impl JointBuild {
    pub fn new(interior: &[u8]) -> Result<Self> {
        let ts = FramedText::from_bytes(interior, SentinelMode::Standard)?;
        let ti = FramedText::from_bytes(interior, SentinelMode::Inverse)?;
        Ok(JointBuild {
            standard: build_standard(&ts)?,
            inverse: build_inverse(&ti)?,
        })
    }

    pub fn compare(&self, i: usize, j: usize) -> Result<ComparisonVerdict> {
        shortcut_compare(&self.standard, &self.inverse, i, j)
    }
}

/// Demonstration that ordering maximal inverse factors does not order the
/// suffixes: on `babacbabaa` the factors at interior positions 1 and 6 are
/// `baba` and `babaa`, ordered Less, while the suffixes order Greater.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityCounterexample {
    pub word: Vec<u8>,
    pub left_position: usize,
    pub right_position: usize,
    pub left_factor: Vec<u8>,
    pub right_factor: Vec<u8>,
    pub factor_order: Ordering,
    pub suffix_order: Ordering,
}

/// Builds the demonstration word and verifies the inverted pair, panicking
/// if the facts fail to hold (that would indicate a build bug).
pub fn compatibility_counterexample() -> CompatibilityCounterexample {
    let word = b"babacbabaa".to_vec();
    let t = FramedText::from_bytes(word.clone(), SentinelMode::Inverse)
        .expect("demonstration word frames");
    let r = build_inverse(&t).expect("demonstration word builds");

    let factor_at = |interior_pos: usize| -> Vec<u8> {
        let framed = interior_pos + 1;
        let len = r.lambda_inv[framed];
        word[interior_pos - 1..interior_pos - 1 + len].to_vec()
    };
    let left_factor = factor_at(1);
    let right_factor = factor_at(6);
    let factor_order = left_factor.cmp(&right_factor);
    let suffix_order = word[0..].cmp(&word[5..]);

    assert_eq!(left_factor, b"baba", "unexpected factor at position 1");
    assert_eq!(right_factor, b"babaa", "unexpected factor at position 6");
    assert_eq!(factor_order, Ordering::Less, "factors must order Less");
    assert_eq!(
        suffix_order,
        Ordering::Greater,
        "suffixes must order Greater"
    );

    CompatibilityCounterexample {
        word,
        left_position: 1,
        right_position: 6,
        left_factor,
        right_factor,
        factor_order,
        suffix_order,
    }
}
