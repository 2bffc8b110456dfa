//! Words framed with virtual sentinels under a total alphabet order.
//!
//! A word of interior length `n` is viewed through framed 1-based positions
//! `1..=n+2`: position 1 holds the opening sentinel `#`, position `n+2` the
//! terminal sentinel `$`, and positions `2..=n+1` the interior symbols. The
//! sentinels are never materialized; [`FramedText::rank_at`] synthesizes
//! their reserved ranks on access, so a raw byte buffer is usable as-is.
//!
//! The two sentinel modes place the reserved ranks on opposite sides of the
//! alphabet: in [`SentinelMode::Standard`] order `# < $ < a` for every
//! symbol `a`, which makes the suffix at position 1 the lexicographic
//! minimum of all framed suffixes; in [`SentinelMode::Inverse`] order
//! `# > $ > a`, which makes it the maximum. Either way the terminal `$`
//! occurs exactly once, so all framed suffixes are pairwise distinct.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};

/// Raw input symbol: a byte widened to 32 bits, or a non-negative integer.
pub type Symbol = u32;

/// Total-order rank of a framed symbol, including the reserved sentinel
/// ranks. Ranks compare with plain integer order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rank(pub i64);

/// Placement of the sentinel ranks relative to the alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SentinelMode {
    /// `# < $ < a` for every alphabet symbol `a`.
    Standard,
    /// `# > $ > a` for every alphabet symbol `a`.
    Inverse,
}

impl SentinelMode {
    #[inline]
    fn hash_rank(self) -> Rank {
        match self {
            SentinelMode::Standard => Rank(-2),
            SentinelMode::Inverse => Rank(i64::MAX),
        }
    }

    #[inline]
    fn dollar_rank(self) -> Rank {
        match self {
            SentinelMode::Standard => Rank(-1),
            SentinelMode::Inverse => Rank(i64::MAX - 1),
        }
    }
}

/// Explicit injective rank assignment for an integer alphabet.
///
/// Byte inputs normally use the natural byte order instead (see
/// [`FramedText::from_bytes`]); an explicit order is for integer-alphabet
/// inputs or non-standard byte orders.
#[derive(Clone, Debug, Default)]
pub struct AlphabetOrder {
    ranks: HashMap<Symbol, u32>,
}

impl AlphabetOrder {
    /// Builds an order from `(symbol, rank)` pairs. Ranks must be injective.
    pub fn from_ranks<I: IntoIterator<Item = (Symbol, u32)>>(pairs: I) -> Result<Self> {
        let mut ranks = HashMap::new();
        let mut seen = HashMap::new();
        for (sym, rank) in pairs {
            if let Some(prev) = seen.insert(rank, sym) {
                return Err(Error::InvalidInput(format!(
                    "rank {} assigned to both symbols {} and {}",
                    rank, prev, sym
                )));
            }
            if ranks.insert(sym, rank).is_some() {
                return Err(Error::InvalidInput(format!(
                    "symbol {} assigned more than one rank",
                    sym
                )));
            }
        }
        Ok(AlphabetOrder { ranks })
    }

    /// Natural order on the symbols themselves (rank = value).
    pub fn natural<I: IntoIterator<Item = Symbol>>(symbols: I) -> Self {
        AlphabetOrder {
            ranks: symbols.into_iter().map(|s| (s, s)).collect(),
        }
    }

    fn rank_of(&self, sym: Symbol) -> Option<u32> {
        self.ranks.get(&sym).copied()
    }
}

#[derive(Debug)]
enum RankStore {
    /// Byte-backed interior under natural byte order; rank = byte value.
    Bytes(Vec<u8>),
    /// Interior already resolved to ranks via an explicit order.
    Ranks(Vec<u32>),
}

/// An interior word plus virtual sentinels and a sentinel mode.
///
/// Immutable after construction; safe to share across threads.
#[derive(Debug)]
pub struct FramedText {
    store: RankStore,
    mode: SentinelMode,
}

impl FramedText {
    /// Frames a byte word under the natural byte order.
    pub fn from_bytes(interior: impl Into<Vec<u8>>, mode: SentinelMode) -> Result<Self> {
        let interior = interior.into();
        if interior.is_empty() {
            return Err(Error::InvalidInput("interior word is empty".into()));
        }
        Ok(FramedText {
            store: RankStore::Bytes(interior),
            mode,
        })
    }

    /// Frames an integer word under an explicit alphabet order.
    ///
    /// Every interior symbol must have a rank; the symbols are resolved to
    /// their ranks once, here.
    pub fn with_order(
        interior: &[Symbol],
        order: &AlphabetOrder,
        mode: SentinelMode,
    ) -> Result<Self> {
        if interior.is_empty() {
            return Err(Error::InvalidInput("interior word is empty".into()));
        }
        let ranks = interior
            .iter()
            .map(|&sym| {
                order
                    .rank_of(sym)
                    .ok_or(Error::UnknownSymbol { symbol: sym })
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(FramedText {
            store: RankStore::Ranks(ranks),
            mode,
        })
    }

    #[inline]
    pub fn mode(&self) -> SentinelMode {
        self.mode
    }

    #[inline]
    pub fn interior_len(&self) -> usize {
        match &self.store {
            RankStore::Bytes(v) => v.len(),
            RankStore::Ranks(v) => v.len(),
        }
    }

    /// Framed length: interior length plus the two sentinels.
    #[inline]
    pub fn framed_len(&self) -> usize {
        self.interior_len() + 2
    }

    /// Rank of the symbol at framed position `i` (1-based).
    ///
    /// Position 1 and position `framed_len` return the reserved sentinel
    /// ranks of the installed mode.
    #[inline]
    pub fn rank_at(&self, i: usize) -> Rank {
        debug_assert!(i >= 1 && i <= self.framed_len());
        if i == 1 {
            self.mode.hash_rank()
        } else if i == self.framed_len() {
            self.mode.dollar_rank()
        } else {
            match &self.store {
                RankStore::Bytes(v) => Rank(v[i - 2] as i64),
                RankStore::Ranks(v) => Rank(v[i - 2] as i64),
            }
        }
    }

    /// Orders the symbols at two framed positions.
    pub fn cmp_symbols(&self, i: usize, j: usize) -> Result<Ordering> {
        let n = self.framed_len();
        for &p in &[i, j] {
            if p < 1 || p > n {
                return Err(Error::OutOfBounds {
                    position: p,
                    framed_len: n,
                });
            }
        }
        Ok(self.rank_at(i).cmp(&self.rank_at(j)))
    }

    /// The interior as bytes, when the text is byte-backed.
    pub fn interior_bytes(&self) -> Option<&[u8]> {
        match &self.store {
            RankStore::Bytes(v) => Some(v),
            RankStore::Ranks(_) => None,
        }
    }

    /// Framed ranks of the subword `x[i..=j]`, sentinels included.
    pub fn rank_slice(&self, i: usize, j: usize) -> Result<Vec<Rank>> {
        let n = self.framed_len();
        if i < 1 || j > n || i > j {
            return Err(Error::OutOfBounds {
                position: j.max(i),
                framed_len: n,
            });
        }
        Ok((i..=j).map(|p| self.rank_at(p)).collect())
    }

    /// Mode-independent fingerprint of the interior content, used to detect
    /// results built over different words (FNV-1a over the interior ranks).
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |v: u32| {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        match &self.store {
            RankStore::Bytes(v) => v.iter().for_each(|&b| eat(b as u32)),
            RankStore::Ranks(v) => v.iter().for_each(|&r| eat(r)),
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frames_banana() {
        let t = FramedText::from_bytes(&b"banana"[..], SentinelMode::Standard).unwrap();
        assert_eq!(t.framed_len(), 8);
        assert_eq!(t.interior_len(), 6);
        assert_eq!(t.rank_at(2), Rank(b'b' as i64));
        assert_eq!(t.rank_at(7), Rank(b'a' as i64));
    }

    #[test]
    fn frames_single_letter() {
        let t = FramedText::from_bytes(&b"a"[..], SentinelMode::Standard).unwrap();
        assert_eq!(t.framed_len(), 3);
    }

    #[test]
    fn empty_interior_rejected() {
        let err = FramedText::from_bytes(Vec::new(), SentinelMode::Standard).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn standard_sentinels_below_alphabet() {
        let t = FramedText::from_bytes(&b"banana"[..], SentinelMode::Standard).unwrap();
        assert!(t.rank_at(1) < t.rank_at(8));
        assert!(t.rank_at(8) < t.rank_at(3)); // $ < a
    }

    #[test]
    fn inverse_sentinels_above_alphabet() {
        let t = FramedText::from_bytes(&b"aababbaa"[..], SentinelMode::Inverse).unwrap();
        assert_eq!(t.framed_len(), 10);
        // # > $ and $ > every interior symbol
        assert_eq!(t.cmp_symbols(1, 10).unwrap(), Ordering::Greater);
        assert_eq!(t.cmp_symbols(10, 2).unwrap(), Ordering::Greater);
    }

    #[test]
    fn cmp_symbols_cases() {
        let t = FramedText::from_bytes(&b"banana"[..], SentinelMode::Standard).unwrap();
        assert_eq!(t.cmp_symbols(2, 3).unwrap(), Ordering::Greater); // b > a
        assert_eq!(t.cmp_symbols(4, 4).unwrap(), Ordering::Equal);
        assert!(matches!(
            t.cmp_symbols(0, 3),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(matches!(
            t.cmp_symbols(2, 9),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn explicit_order_rejects_unknown_symbols() {
        let order = AlphabetOrder::from_ranks([(10, 0), (20, 1)]).unwrap();
        let err = FramedText::with_order(&[10, 30], &order, SentinelMode::Standard).unwrap_err();
        assert!(matches!(err, Error::UnknownSymbol { symbol: 30 }));
    }

    #[test]
    fn explicit_order_rejects_duplicate_ranks() {
        let err = AlphabetOrder::from_ranks([(10, 0), (20, 0)]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn explicit_order_reorders_symbols() {
        // 5 ranked above 9
        let order = AlphabetOrder::from_ranks([(5, 1), (9, 0)]).unwrap();
        let t = FramedText::with_order(&[5, 9], &order, SentinelMode::Standard).unwrap();
        assert_eq!(t.cmp_symbols(2, 3).unwrap(), Ordering::Greater);
    }

    #[test]
    fn framed_text_is_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<FramedText>();
    }

    #[test]
    fn fingerprint_ignores_mode() {
        let a = FramedText::from_bytes(&b"banana"[..], SentinelMode::Standard).unwrap();
        let b = FramedText::from_bytes(&b"banana"[..], SentinelMode::Inverse).unwrap();
        let c = FramedText::from_bytes(&b"bananas"[..], SentinelMode::Standard).unwrap();
        assert_eq!(a.fingerprint(), b.fingerprint());
        assert_ne!(a.fingerprint(), c.fingerprint());
    }
}
