//! Invariant checkers: the identities the built arrays must satisfy, the
//! non-crossing property of edge sets, and word enumeration for exhaustive
//! sweeps. Everything reports the first counterexample through
//! [`Error::Verification`].

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ngs::{build_inverse, recover_lambda_inv, InverseResult};
use crate::nss::{build_standard, StandardResult};
use crate::oracle;
use crate::suffix_rules::{JointBuild, SuffixOrdering};
use crate::text::{FramedText, SentinelMode};

/// Calls `f` once for every word of the given length over the first
/// `sigma` lowercase letters.
pub fn for_each_word<F>(sigma: u8, len: usize, f: &mut F) -> Result<()>
where
    F: FnMut(&[u8]) -> Result<()>,
{
    assert!(sigma >= 1 && len >= 1);
    let mut digits = vec![0u8; len];
    let mut word: Vec<u8> = vec![b'a'; len];
    loop {
        f(&word)?;
        let mut i = 0;
        loop {
            if i == len {
                return Ok(());
            }
            digits[i] += 1;
            if digits[i] < sigma {
                word[i] = b'a' + digits[i];
                break;
            }
            digits[i] = 0;
            word[i] = b'a';
            i += 1;
        }
    }
}

/// All next/prev edges of a standard build, as `(left, right)` pairs.
pub fn edges_standard(r: &StandardResult) -> Vec<(usize, usize)> {
    collect_edges(&r.next, &r.prev)
}

/// All next/prev edges of an inverse build.
pub fn edges_inverse(r: &InverseResult) -> Vec<(usize, usize)> {
    collect_edges(&r.next_inv, &r.prev_inv)
}

fn collect_edges(next: &[usize], prev: &[usize]) -> Vec<(usize, usize)> {
    let n = next.len() - 1;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        if next[i] <= n {
            edges.push((i, next[i]));
        }
        if prev[i] >= 1 {
            edges.push((prev[i], i));
        }
    }
    edges
}

/// Finds a crossing pair `l1 < l2 < r1 < r2`, or `None` when the edge set
/// is laminar. Sweep with a stack of open intervals, O(E log E); decides
/// the same predicate as the pairwise scan below.
pub fn non_crossing_violation(
    edges: &[(usize, usize)],
) -> Option<((usize, usize), (usize, usize))> {
    let mut sorted = edges.to_vec();
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &(l, r) in &sorted {
        while let Some(&(_, rt)) = stack.last() {
            if rt <= l {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&(lt, rt)) = stack.last() {
            // same-l intervals are sorted longest first, so lt < l here
            if r > rt {
                return Some(((lt, rt), (l, r)));
            }
        }
        stack.push((l, r));
    }
    None
}

/// Quadratic reference for [`non_crossing_violation`].
pub fn non_crossing_violation_pairwise(
    edges: &[(usize, usize)],
) -> Option<((usize, usize), (usize, usize))> {
    for (idx, &(l1, r1)) in edges.iter().enumerate() {
        for &(l2, r2) in &edges[idx + 1..] {
            if l1 < l2 && l2 < r1 && r1 < r2 {
                return Some(((l1, r1), (l2, r2)));
            }
            if l2 < l1 && l1 < r2 && r2 < r1 {
                return Some(((l2, r2), (l1, r1)));
            }
        }
    }
    None
}

fn verification(msg: String) -> Error {
    Error::Verification(msg)
}

/// The stored-edge case analysis: for `l = prev[k]`, `r = next[k]`, the
/// relation between `lce(l, k)` and `lce(k, r)` determines `lce(l, r)` and,
/// in the strict cases, one of the two edges at the far pair.
fn check_case_analysis(
    t: &FramedText,
    next: &[usize],
    prev: &[usize],
    edge_conclusion_when_equal: bool,
    tag: &str,
) -> Result<()> {
    let n = t.framed_len();
    for k in 2..n {
        let (l, r) = (prev[k], next[k]);
        if l < 1 || r > n {
            continue;
        }
        let a = oracle::naive_lce(t, l, k)?;
        let b = oracle::naive_lce(t, k, r)?;
        let c = oracle::naive_lce(t, l, r)?;
        let fail = |what: &str| {
            Err(verification(format!(
                "{} case analysis at k={} (l={}, r={}, lce {}/{}/{}): {}",
                tag, k, l, r, a, b, c, what
            )))
        };
        match a.cmp(&b) {
            Ordering::Equal => {
                if c < b {
                    return fail("equal case must give lce(l,r) >= lce(k,r)");
                }
                if edge_conclusion_when_equal && prev[r] != l && next[l] != r {
                    return fail("equal case must fix one of the far edges");
                }
            }
            Ordering::Less => {
                if c != a || prev[r] != l {
                    return fail("smaller case must give lce(l,r) = lce(l,k) and prev[r] = l");
                }
            }
            Ordering::Greater => {
                if c != b || next[l] != r {
                    return fail("greater case must give lce(l,r) = lce(k,r) and next[l] = r");
                }
            }
        }
    }
    Ok(())
}

fn check_boundary_conventions(next: &[usize], prev: &[usize], n: usize, tag: &str) -> Result<()> {
    if next[1] != n + 1 || next[n] != n + 1 || prev[1] != 0 || prev[n] != 1 {
        return Err(verification(format!(
            "{} boundary conventions violated: next[1]={} next[n]={} prev[1]={} prev[n]={}",
            tag, next[1], next[n], prev[1], prev[n]
        )));
    }
    for i in 2..n {
        if !(prev[i] < i && i < next[i]) {
            return Err(verification(format!(
                "{} interior position {} not strictly between its edges",
                tag, i
            )));
        }
    }
    Ok(())
}

fn check_chain_membership(prev: &[usize], n: usize, tag: &str) -> Result<()> {
    for r in 2..=n {
        let mut p = r - 1;
        while p > prev[r] {
            p = prev[p];
        }
        if p != prev[r] {
            return Err(verification(format!(
                "{} prev[{}] = {} is not on the predecessor chain of {}",
                tag,
                r,
                prev[r],
                r - 1
            )));
        }
    }
    Ok(())
}

/// Identities of a standard build: the length identity
/// `lambda[i] = next[i] - i`, Lyndonness of every prev-edge factor,
/// non-crossing of the edge set, chain membership of `prev`, and the
/// stored-edge case analysis against naive LCEs.
pub fn check_standard_identities(t: &FramedText, r: &StandardResult) -> Result<()> {
    let n = t.framed_len();
    check_boundary_conventions(&r.next, &r.prev, n, "standard")?;
    for i in 1..=n {
        if r.lambda[i] != r.next[i] - i {
            return Err(verification(format!(
                "lambda[{}] = {} differs from next[{}] - {} = {}",
                i,
                r.lambda[i],
                i,
                i,
                r.next[i] - i
            )));
        }
    }
    for i in 2..=n {
        let factor = t.rank_slice(r.prev[i], i - 1)?;
        if !oracle::is_lyndon_linear(&factor)? {
            return Err(verification(format!(
                "prev-edge factor x[{}..{}] is not a Lyndon word",
                r.prev[i],
                i - 1
            )));
        }
    }
    if let Some((e1, e2)) = non_crossing_violation(&edges_standard(r)) {
        return Err(verification(format!(
            "standard edges {:?} and {:?} cross",
            e1, e2
        )));
    }
    check_chain_membership(&r.prev, n, "standard")?;
    check_case_analysis(t, &r.next, &r.prev, false, "standard")
}

/// Identities of an inverse build: the recovery identity, the border
/// identities (`next_inv[i] = i + lambda_inv[i] - border(z)` and
/// `nlce[i] = border(z) = lce(i, next_inv[i])`), inverse Lyndonness of
/// every prev-edge factor, non-crossing, chain membership, the case
/// analysis, and the mismatch direction at every next edge.
pub fn check_inverse_identities(t: &FramedText, r: &InverseResult) -> Result<()> {
    let n = t.framed_len();
    check_boundary_conventions(&r.next_inv, &r.prev_inv, n, "inverse")?;
    let recovered = recover_lambda_inv(&r.next_inv, &r.nlce)?;
    if recovered != r.lambda_inv {
        return Err(verification("recovery identity failed".into()));
    }
    for i in 1..=n {
        let factor = t.rank_slice(i, i + r.lambda_inv[i] - 1)?;
        let border = oracle::longest_border(&factor)?;
        if r.next_inv[i] != i + r.lambda_inv[i] - border {
            return Err(verification(format!(
                "next_inv[{}] = {} differs from i + lambda_inv - border = {}",
                i,
                r.next_inv[i],
                i + r.lambda_inv[i] - border
            )));
        }
        if r.nlce[i] != border {
            return Err(verification(format!(
                "nlce[{}] = {} differs from the factor border {}",
                i, r.nlce[i], border
            )));
        }
        if r.next_inv[i] <= n {
            let lce = oracle::naive_lce(t, i, r.next_inv[i])?;
            if lce != border {
                return Err(verification(format!(
                    "lce({}, {}) = {} differs from the factor border {}",
                    i, r.next_inv[i], lce, border
                )));
            }
            // the suffix at the edge target wins strictly right after the border
            if t.rank_at(r.next_inv[i] + lce) <= t.rank_at(i + lce) {
                return Err(verification(format!(
                    "mismatch direction wrong at edge ({}, {})",
                    i, r.next_inv[i]
                )));
            }
        }
    }
    for i in 2..=n {
        let factor = t.rank_slice(r.prev_inv[i], i - 1)?;
        if !oracle::is_inverse_lyndon_linear(&factor)? {
            return Err(verification(format!(
                "prev-edge factor x[{}..{}] is not an inverse Lyndon word",
                r.prev_inv[i],
                i - 1
            )));
        }
    }
    if let Some((e1, e2)) = non_crossing_violation(&edges_inverse(r)) {
        return Err(verification(format!(
            "inverse edges {:?} and {:?} cross",
            e1, e2
        )));
    }
    check_chain_membership(&r.prev_inv, n, "inverse")?;
    check_case_analysis(t, &r.next_inv, &r.prev_inv, true, "inverse")
}

/// Compares a standard build against the prefix-testing oracle, the
/// NSV-over-ISA oracle, and the definitional edge scan.
pub fn check_standard_against_oracles(t: &FramedText, r: &StandardResult) -> Result<()> {
    if r.lambda != oracle::naive_lyndon_array(t)? {
        return Err(verification(
            "lambda differs from prefix-testing oracle".into(),
        ));
    }
    if r.lambda != oracle::nsv_lyndon_array(t)? {
        return Err(verification("lambda differs from NSV oracle".into()));
    }
    let e = oracle::naive_edges(t)?;
    if r.next != e.next || r.prev != e.prev || r.nlce != e.nlce || r.plce != e.plce {
        return Err(verification(
            "standard edges differ from definitional scan".into(),
        ));
    }
    Ok(())
}

/// Compares an inverse build against the prefix-testing oracle and the
/// definitional edge scan.
pub fn check_inverse_against_oracles(t: &FramedText, r: &InverseResult) -> Result<()> {
    if r.lambda_inv != oracle::naive_inverse_lyndon_array(t)? {
        return Err(verification(
            "lambda_inv differs from prefix-testing oracle".into(),
        ));
    }
    let e = oracle::naive_edges(t)?;
    if r.next_inv != e.next || r.prev_inv != e.prev || r.nlce != e.nlce || r.plce != e.plce {
        return Err(verification(
            "inverse edges differ from definitional scan".into(),
        ));
    }
    Ok(())
}

/// Soundness of the constant-time comparison rules against the canonical
/// suffix order (the Standard framing), over every framed pair, plus the
/// positionwise equivalence `next_inv[i] = i + lambda_inv[i] - nlce[i]`
/// behind rules 2 and 3.
pub fn check_shortcut_soundness(interior: &[u8]) -> Result<()> {
    let joint = JointBuild::new(interior)?;
    let t = FramedText::from_bytes(interior, SentinelMode::Standard)?;
    let isa = oracle::naive_suffix_order(&t)?.isa;
    let n = t.framed_len();
    for i in 1..=n {
        let inv = &joint.inverse;
        if inv.next_inv[i] != i + inv.lambda_inv[i] - inv.nlce[i] {
            return Err(verification(format!("rule 2/3 equivalence fails at {}", i)));
        }
    }
    for i in 1..n {
        for j in i + 1..=n {
            let v = joint.compare(i, j)?;
            let sound = match v.outcome {
                SuffixOrdering::Less => isa[i] < isa[j],
                SuffixOrdering::Greater => isa[i] > isa[j],
                SuffixOrdering::Unknown => true,
            };
            if !sound {
                return Err(verification(format!(
                    "rule {:?} verdict {:?} contradicts the suffix order at ({}, {}) of {:?}",
                    v.rule,
                    v.outcome,
                    i,
                    j,
                    String::from_utf8_lossy(interior)
                )));
            }
        }
    }
    Ok(())
}

/// Brute-force check of the classical compatibility property on one word:
/// ordered maximal Lyndon factors imply equally ordered suffixes.
pub fn check_standard_compatibility(interior: &[u8]) -> Result<()> {
    let t = FramedText::from_bytes(interior, SentinelMode::Standard)?;
    let r = build_standard(&t)?;
    let n = t.framed_len();
    for i in 2..n {
        for j in 2..n {
            if i == j {
                continue;
            }
            let fi = t.rank_slice(i, i + r.lambda[i] - 1)?;
            let fj = t.rank_slice(j, j + r.lambda[j] - 1)?;
            if fi < fj && oracle::cmp_suffixes(&t, i, j)? != Ordering::Less {
                return Err(verification(format!(
                    "standard compatibility fails at ({}, {})",
                    i, j
                )));
            }
        }
    }
    Ok(())
}

/// Interior position pairs witnessing that the compatibility property has
/// no inverse analogue: maximal inverse factors ordered Less while the
/// suffixes order Greater. Empty when the word exhibits no such pair.
pub fn inverse_compatibility_witnesses(interior: &[u8]) -> Result<Vec<(usize, usize)>> {
    let t = FramedText::from_bytes(interior, SentinelMode::Inverse)?;
    let r = build_inverse(&t)?;
    let mut out = Vec::new();
    let len = interior.len();
    for i in 1..=len {
        for j in 1..=len {
            if i == j {
                continue;
            }
            let fi = &interior[i - 1..i - 1 + r.lambda_inv[i + 1]];
            let fj = &interior[j - 1..j - 1 + r.lambda_inv[j + 1]];
            if fi < fj && interior[i - 1..] > interior[j - 1..] {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Word-level battery used by the verify command and the exhaustive
/// sweeps: builds both modes and runs every check that fits the size.
pub fn verify_word(interior: &[u8]) -> Result<()> {
    const ORACLE_TIER: usize = 400;
    let ts = FramedText::from_bytes(interior, SentinelMode::Standard)?;
    let ti = FramedText::from_bytes(interior, SentinelMode::Inverse)?;
    let std = build_standard(&ts)?;
    let inv = build_inverse(&ti)?;
    check_standard_identities(&ts, &std)?;
    check_inverse_identities(&ti, &inv)?;
    if interior.len() <= ORACLE_TIER {
        check_standard_against_oracles(&ts, &std)?;
        check_inverse_against_oracles(&ti, &inv)?;
        check_shortcut_soundness(interior)?;
        check_standard_compatibility(interior)?;
        if let Some((e1, e2)) = non_crossing_violation_pairwise(&edges_standard(&std)) {
            return Err(verification(format!("edges {:?} / {:?} cross", e1, e2)));
        }
        if let Some((e1, e2)) = non_crossing_violation_pairwise(&edges_inverse(&inv)) {
            return Err(verification(format!("edges {:?} / {:?} cross", e1, e2)));
        }
    }
    Ok(())
}
