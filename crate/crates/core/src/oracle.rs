//! Brute-force reference implementations used as ground truth.
//!
//! Everything here favors being obviously correct over being fast: suffix
//! comparisons are plain character scans and the array constructions test
//! every candidate prefix. These run at desk scale only.
//!
//! Two linear-time membership tests ([`is_lyndon_linear`],
//! [`is_inverse_lyndon_linear`]) are included for the large identity sweeps;
//! they are validated against the naive definitions by the test suite and
//! are not themselves oracles.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::text::{FramedText, Rank, SentinelMode};

/// Suffix permutation of a framed text together with its inverse.
///
/// `sa[k]` is the framed position of the k-th smallest suffix and
/// `isa[sa[k]] = k`; both arrays are 1-based with slot 0 unused.
#[derive(Debug, Clone)]
pub struct SuffixOrderTable {
    pub sa: Vec<usize>,
    pub isa: Vec<usize>,
}

fn require_nonempty<T>(w: &[T]) -> Result<()> {
    if w.is_empty() {
        Err(Error::InvalidInput("empty word".into()))
    } else {
        Ok(())
    }
}

/// Is `w` strictly smaller than each of its proper non-empty suffixes?
///
/// The alphabet order is the `Ord` of the element type; map symbols to
/// ranks first when a non-natural order applies.
pub fn is_lyndon<T: Ord>(w: &[T]) -> Result<bool> {
    require_nonempty(w)?;
    Ok((1..w.len()).all(|i| w < &w[i..]))
}

/// Is every proper non-empty suffix of `w` strictly smaller than `w`?
pub fn is_inverse_lyndon<T: Ord>(w: &[T]) -> Result<bool> {
    require_nonempty(w)?;
    Ok((1..w.len()).all(|i| &w[i..] < w))
}

/// Z-array: `z[i]` = length of the longest common prefix of `w` and `w[i..]`.
fn z_array<T: Eq>(w: &[T]) -> Vec<usize> {
    let n = w.len();
    let mut z = vec![0usize; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && w[k] == w[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

/// Linear-time equivalent of [`is_lyndon`].
pub fn is_lyndon_linear<T: Ord>(w: &[T]) -> Result<bool> {
    require_nonempty(w)?;
    let z = z_array(w);
    // every proper suffix must beat w at its first mismatch; a suffix that
    // is a prefix of w would itself be smaller, so it disqualifies w too
    Ok((1..w.len()).all(|i| i + z[i] < w.len() && w[i + z[i]] > w[z[i]]))
}

/// Linear-time equivalent of [`is_inverse_lyndon`].
pub fn is_inverse_lyndon_linear<T: Ord>(w: &[T]) -> Result<bool> {
    require_nonempty(w)?;
    let z = z_array(w);
    // a suffix that is a prefix (a border) is strictly smaller already
    Ok((1..w.len()).all(|i| i + z[i] == w.len() || w[i + z[i]] < w[z[i]]))
}

/// Length of the longest proper border of `w` (prefix that is also a
/// suffix), 0 when `w` is unbordered. Failure-function construction.
pub fn longest_border<T: Eq>(w: &[T]) -> Result<usize> {
    require_nonempty(w)?;
    let n = w.len();
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && w[i] != w[k] {
            k = pi[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        pi[i] = k;
    }
    Ok(pi[n - 1])
}

fn require_mode(t: &FramedText, expected: SentinelMode) -> Result<()> {
    if t.mode() != expected {
        Err(Error::ModeMismatch {
            expected,
            found: t.mode(),
        })
    } else {
        Ok(())
    }
}

fn check_position(t: &FramedText, i: usize) -> Result<()> {
    if i < 1 || i > t.framed_len() {
        Err(Error::OutOfBounds {
            position: i,
            framed_len: t.framed_len(),
        })
    } else {
        Ok(())
    }
}

/// Longest common prefix of the framed suffixes at `i` and `j`, by scan.
pub fn naive_lce(t: &FramedText, i: usize, j: usize) -> Result<usize> {
    check_position(t, i)?;
    check_position(t, j)?;
    let n = t.framed_len();
    let mut k = 0;
    while i + k <= n && j + k <= n && t.rank_at(i + k) == t.rank_at(j + k) {
        k += 1;
    }
    Ok(k)
}

/// Orders the framed suffixes at `i` and `j`.
pub fn cmp_suffixes(t: &FramedText, i: usize, j: usize) -> Result<Ordering> {
    let k = naive_lce(t, i, j)?;
    let n = t.framed_len();
    if i + k > n {
        return Ok(if j + k > n {
            Ordering::Equal
        } else {
            Ordering::Less
        });
    }
    if j + k > n {
        return Ok(Ordering::Greater);
    }
    Ok(t.rank_at(i + k).cmp(&t.rank_at(j + k)))
}

/// Classical Lyndon array over framed positions by exhaustive prefix
/// testing: `lambda[i]` is the longest `m` with `x[i..i+m-1]` Lyndon.
/// 1-based, slot 0 unused.
pub fn naive_lyndon_array(t: &FramedText) -> Result<Vec<usize>> {
    require_mode(t, SentinelMode::Standard)?;
    naive_prefix_array(t, is_lyndon)
}

/// Inverse Lyndon array over framed positions by exhaustive prefix testing.
pub fn naive_inverse_lyndon_array(t: &FramedText) -> Result<Vec<usize>> {
    require_mode(t, SentinelMode::Inverse)?;
    naive_prefix_array(t, is_inverse_lyndon)
}

fn naive_prefix_array(
    t: &FramedText,
    pred: impl Fn(&[Rank]) -> Result<bool>,
) -> Result<Vec<usize>> {
    let n = t.framed_len();
    let mut lambda = vec![0usize; n + 1];
    for i in 1..=n {
        let suffix: Vec<Rank> = (i..=n).map(|p| t.rank_at(p)).collect();
        for m in 1..=suffix.len() {
            if pred(&suffix[..m])? {
                lambda[i] = m;
            }
        }
    }
    Ok(lambda)
}

/// Nearest-suffix arrays computed straight from the definitions, with the
/// boundary conventions `next[i] = framed_len + 1` / `prev[i] = 0` when no
/// qualifying position exists. In Standard mode the edges point at nearest
/// smaller suffixes, in Inverse mode at nearest greater suffixes. The
/// per-edge LCE values are included.
#[derive(Debug, Clone)]
pub struct NaiveEdges {
    pub next: Vec<usize>,
    pub prev: Vec<usize>,
    pub nlce: Vec<usize>,
    pub plce: Vec<usize>,
}

pub fn naive_edges(t: &FramedText) -> Result<NaiveEdges> {
    let n = t.framed_len();
    let want = match t.mode() {
        SentinelMode::Standard => Ordering::Less, // x_j < x_i to the right
        SentinelMode::Inverse => Ordering::Greater,
    };
    let mut next = vec![0usize; n + 1];
    let mut prev = vec![0usize; n + 1];
    let mut nlce = vec![0usize; n + 1];
    let mut plce = vec![0usize; n + 1];
    for i in 1..=n {
        next[i] = n + 1;
        for j in i + 1..=n {
            if cmp_suffixes(t, j, i)? == want {
                next[i] = j;
                nlce[i] = naive_lce(t, i, j)?;
                break;
            }
        }
        prev[i] = 0;
        for j in (1..i).rev() {
            if cmp_suffixes(t, j, i)? == want {
                prev[i] = j;
                plce[i] = naive_lce(t, j, i)?;
                break;
            }
        }
    }
    Ok(NaiveEdges {
        next,
        prev,
        nlce,
        plce,
    })
}

/// Sorted permutation of all framed suffixes and its inverse.
pub fn naive_suffix_order(t: &FramedText) -> Result<SuffixOrderTable> {
    let n = t.framed_len();
    let mut sa: Vec<usize> = (1..=n).collect();
    sa.sort_by(|&a, &b| cmp_suffixes(t, a, b).expect("positions in range"));
    for w in sa.windows(2) {
        if cmp_suffixes(t, w[0], w[1])? != Ordering::Less {
            return Err(Error::Verification(format!(
                "framed suffixes {} and {} are not strictly ordered",
                w[0], w[1]
            )));
        }
    }
    let mut isa = vec![0usize; n + 1];
    for (k, &p) in sa.iter().enumerate() {
        isa[p] = k + 1;
    }
    let mut sa1 = vec![0usize; n + 1];
    sa1[1..].copy_from_slice(&sa);
    Ok(SuffixOrderTable { sa: sa1, isa })
}

/// Classical Lyndon array obtained as the next-smaller-value distances of
/// the inverse suffix array; a second oracle independent of prefix testing.
pub fn nsv_lyndon_array(t: &FramedText) -> Result<Vec<usize>> {
    require_mode(t, SentinelMode::Standard)?;
    let isa = naive_suffix_order(t)?.isa;
    let n = t.framed_len();
    let mut lambda = vec![0usize; n + 1];
    for i in 1..=n {
        lambda[i] = n - i + 1;
        for j in i + 1..=n {
            if isa[j] < isa[i] {
                lambda[i] = j - i;
                break;
            }
        }
    }
    Ok(lambda)
}

/// The maximal (inverse) Lyndon subword starting at framed position `i`,
/// as a rank sequence. Standard mode uses the classical array, Inverse
/// mode the inverse array.
pub fn maximal_factor(t: &FramedText, i: usize) -> Result<Vec<Rank>> {
    check_position(t, i)?;
    let lambda = match t.mode() {
        SentinelMode::Standard => naive_lyndon_array(t)?,
        SentinelMode::Inverse => naive_inverse_lyndon_array(t)?,
    };
    t.rank_slice(i, i + lambda[i] - 1)
}
