//! Amortized longest-common-extension engine.
//!
//! All character comparisons performed while building nearest-suffix edges
//! happen inside [`smart_lce`]. The engine keeps one global frontier `rhs`,
//! the rightmost framed position it has inspected, together with the query
//! pair that certified it: after an explicit scan of `(l̂, r̂)` with result
//! `m̂`, the windows `x[l̂..l̂+m̂)` and `x[r̂..r̂+m̂)` are known equal and the
//! symbols at `l̂+m̂` and `r̂+m̂ = rhs` are known to differ.
//!
//! A query `(l, r, m)` with `r + m >= rhs` extends explicitly; every such
//! comparison pushes the frontier, so the total number of explicit
//! comparisons stays linear in the framed length. A query with
//! `r + m < rhs` lies inside the certified window and is answered from
//! stored edge values without touching the text:
//!
//! * adjacent queries `(r-1, r)` mirror to the pair `(u, u+1)` with
//!   `u = l̂ + (r-1-r̂)`, whose LCE is on record as either `plce[u+1]` or
//!   `nlce[u]`;
//! * chain queries at the same distance as the certified pair are answered
//!   by the window remainder `rhs - r`;
//! * other chain queries mirror to the stored edge `(l-d, r-d)` where
//!   `d = r̂ - l̂`.
//!
//! In each reused case a mirror value strictly below the window remainder
//! is exact, a value strictly above it forces a mismatch at the remainder,
//! and a value equal to it is undecided — the engine then extends
//! explicitly starting at the frontier, which keeps the amortization.

use crate::error::{Error, Result};
use crate::text::FramedText;

/// Interior length up to which debug builds shadow every answer with a
/// naive character scan.
pub const SHADOW_ORACLE_LIMIT: usize = 4096;

/// Profiling counters. All monotone non-decreasing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LceCounters {
    /// Symbol pairs inspected, mismatching pair included.
    pub explicit_comparisons: u64,
    /// Queries answered entirely from stored values, zero comparisons.
    pub reuse_hits: u64,
    /// Explicit scan invocations.
    pub extension_calls: u64,
}

/// Read-only view of the caller's edge arrays; the reuse rules select the
/// stored value to consult.
#[derive(Clone, Copy)]
pub struct EdgeView<'a> {
    pub next: &'a [usize],
    pub prev: &'a [usize],
    pub nlce: &'a [usize],
    pub plce: &'a [usize],
}

impl<'a> EdgeView<'a> {
    /// Stored LCE of the adjacent pair `(u, u+1)`. One of the two edges
    /// exists once iteration `u+1` of the build has completed.
    fn adjacent_lce(&self, u: usize) -> usize {
        if self.prev[u + 1] == u {
            self.plce[u + 1]
        } else {
            debug_assert_eq!(self.next[u], u + 1);
            self.nlce[u]
        }
    }

    /// Stored LCE of `(l, r)` when that pair is a recorded edge.
    fn edge_lce(&self, l: usize, r: usize) -> Option<usize> {
        if self.next[l] == r {
            Some(self.nlce[l])
        } else if self.prev[r] == l {
            Some(self.plce[r])
        } else {
            None
        }
    }
}

/// Mutable engine state for one build: the frontier, its certificate, and
/// the counters.
#[derive(Debug)]
pub struct LceState {
    rhs: usize,
    cert_left: usize,
    cert_right: usize,
    counters: LceCounters,
    shadow: bool,
}

impl LceState {
    pub fn new() -> Self {
        LceState {
            rhs: 0,
            cert_left: 0,
            cert_right: 0,
            counters: LceCounters::default(),
            shadow: false,
        }
    }

    /// Cross-checks every answer against a naive scan. Enabled by the
    /// builders in debug builds for texts up to [`SHADOW_ORACLE_LIMIT`].
    pub fn with_shadow_oracle() -> Self {
        let mut s = Self::new();
        s.shadow = true;
        s
    }

    /// Rightmost framed position inspected so far.
    pub fn rhs(&self) -> usize {
        self.rhs
    }

    pub fn counters(&self) -> LceCounters {
        self.counters
    }

    fn extend(&mut self, t: &FramedText, l: usize, r: usize, from: usize) -> usize {
        let n = t.framed_len();
        let mut k = from;
        loop {
            // the terminal sentinel occurs once, so a mismatch is reached
            // no later than r + k = framed_len
            debug_assert!(r + k <= n && l + k < n);
            self.counters.explicit_comparisons += 1;
            if t.rank_at(l + k) != t.rank_at(r + k) {
                break;
            }
            k += 1;
        }
        self.counters.extension_calls += 1;
        debug_assert!(r + k >= self.rhs, "frontier would move backwards");
        self.rhs = r + k;
        self.cert_left = l;
        self.cert_right = r;
        k
    }
}

impl Default for LceState {
    fn default() -> Self {
        Self::new()
    }
}

/// Snapshot of the current counters.
pub fn counters_snapshot(state: &LceState) -> LceCounters {
    state.counters()
}

fn naive_scan(t: &FramedText, l: usize, r: usize) -> usize {
    let n = t.framed_len();
    let mut k = 0;
    while r + k <= n && t.rank_at(l + k) == t.rank_at(r + k) {
        k += 1;
    }
    k
}

/// Longest common extension of the framed suffixes at `l < r`, given a
/// lower bound `m <= lce(l, r)`.
///
/// Queries with `r + m < rhs` are answered from the stored edge values in
/// `edges` (a reuse hit, no character comparison) except in the undecided
/// boundary configuration, where the explicit extension starts at the
/// frontier. All other queries scan from offset `m`.
pub fn smart_lce(
    state: &mut LceState,
    t: &FramedText,
    l: usize,
    r: usize,
    m: usize,
    edges: EdgeView<'_>,
) -> Result<usize> {
    if l >= r {
        return Err(Error::InvalidQuery(format!(
            "l = {} must be < r = {}",
            l, r
        )));
    }
    let shadow = state.shadow && t.interior_len() <= SHADOW_ORACLE_LIMIT;
    let truth = if shadow {
        let v = naive_scan(t, l, r);
        if m > v {
            return Err(Error::ContractViolation(format!(
                "lower bound {} exceeds lce({}, {}) = {}",
                m, l, r, v
            )));
        }
        Some(v)
    } else {
        None
    };

    let got = if r + m >= state.rhs {
        state.extend(t, l, r, m)
    } else if l == r - 1 {
        // mirror the adjacent pair into the certified window
        debug_assert!(r > state.cert_right);
        let u = state.cert_left + (r - 1 - state.cert_right);
        let a = edges.adjacent_lce(u);
        let b = state.rhs - 1 - r;
        if a <= b {
            state.counters.reuse_hits += 1;
            a
        } else if a > b + 1 {
            state.counters.reuse_hits += 1;
            b + 1
        } else {
            // undecided at the window boundary; first comparison lands on rhs
            state.extend(t, l, r, b + 1)
        }
    } else if r - l == state.cert_right - state.cert_left {
        // same distance as the certified pair: the query is a shifted copy
        // of it, so the mismatch sits exactly at the window remainder
        debug_assert!(r >= state.cert_right);
        state.counters.reuse_hits += 1;
        state.rhs - r
    } else if l >= state.cert_right {
        let d = state.cert_right - state.cert_left;
        let rem = state.rhs - r;
        match edges.edge_lce(l - d, r - d) {
            Some(v) if v < rem => {
                state.counters.reuse_hits += 1;
                v
            }
            Some(v) if v > rem => {
                state.counters.reuse_hits += 1;
                rem
            }
            Some(_) => state.extend(t, l, r, rem),
            None => {
                debug_assert!(
                    false,
                    "mirror pair ({}, {}) has no stored edge",
                    l - d,
                    r - d
                );
                state.extend(t, l, r, m)
            }
        }
    } else {
        debug_assert!(false, "chain query ({}, {}) outside certified window", l, r);
        state.extend(t, l, r, m)
    };

    debug_assert!(got >= m);
    if let Some(v) = truth {
        assert_eq!(
            got, v,
            "smart_lce({}, {}, {}) returned {} but the scan gives {}",
            l, r, m, got, v
        );
    }
    Ok(got)
}
