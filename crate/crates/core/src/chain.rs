//! Shared nearest-suffix walker.
//!
//! One loop serves both sentinel modes. For each `r` from left to right it
//! walks the predecessor chain of `r - 1`, fixing `next[l] = r` for every
//! chain element whose suffix compares against `x_r` in the sought
//! direction, and maintaining `m = lce(l, r)` exactly via the stored edge
//! values: when `m` equals `plce[l]` the relation is undecided and a fresh
//! [`smart_lce`] call resolves it; when `m` exceeds `plce[l]` the true
//! value clamps down to `plce[l]`; otherwise `m` carries over unchanged.
//!
//! Seeking smaller suffixes with low sentinels yields the classical
//! next/prev arrays; seeking greater suffixes with high sentinels yields
//! their inverse counterparts. In both cases the leading sentinel is the
//! extreme suffix, so the walk always stops at position 1, and the unique
//! terminal sentinel guarantees every comparison finds a mismatch at or
//! before the framed end.

use crate::error::Result;
use crate::lce::{smart_lce, EdgeView, LceCounters, LceState};
use crate::text::FramedText;

#[cfg(debug_assertions)]
use crate::lce::SHADOW_ORACLE_LIMIT;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Seek {
    /// Fix `next[l] = r` when `x_r` is smaller than `x_l`.
    Smaller,
    /// Fix `next[l] = r` when `x_r` is greater than `x_l`.
    Greater,
}

pub(crate) struct ChainBuild {
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
    pub nlce: Vec<usize>,
    pub plce: Vec<usize>,
    pub counters: LceCounters,
}

pub(crate) fn build_chain(t: &FramedText, seek: Seek) -> Result<ChainBuild> {
    let n = t.framed_len();
    let mut next = vec![0usize; n + 1];
    let mut prev = vec![0usize; n + 1];
    let mut nlce = vec![0usize; n + 1];
    let mut plce = vec![0usize; n + 1];
    next[n] = n + 1;

    #[cfg(debug_assertions)]
    let mut state = if t.interior_len() <= SHADOW_ORACLE_LIMIT {
        LceState::with_shadow_oracle()
    } else {
        LceState::new()
    };
    #[cfg(not(debug_assertions))]
    let mut state = LceState::new();

    for r in 2..=n {
        let mut l = r - 1;
        let mut m = smart_lce(
            &mut state,
            t,
            l,
            r,
            0,
            EdgeView {
                next: &next,
                prev: &prev,
                nlce: &nlce,
                plce: &plce,
            },
        )?;
        loop {
            let (a, b) = (t.rank_at(l + m), t.rank_at(r + m));
            let fires = match seek {
                Seek::Smaller => a > b,
                Seek::Greater => a < b,
            };
            if !fires {
                break;
            }
            next[l] = r;
            nlce[l] = m;
            if m == plce[l] {
                m = smart_lce(
                    &mut state,
                    t,
                    prev[l],
                    r,
                    m,
                    EdgeView {
                        next: &next,
                        prev: &prev,
                        nlce: &nlce,
                        plce: &plce,
                    },
                )?;
            } else if m > plce[l] {
                m = plce[l];
            }
            l = prev[l];
        }
        prev[r] = l;
        plce[r] = m;
    }
    // position 1 holds the extreme suffix and never gains an edge
    debug_assert!((2..n).all(|i| next[i] != 0));
    next[1] = n + 1;

    Ok(ChainBuild {
        next,
        prev,
        nlce,
        plce,
        counters: state.counters(),
    })
}
