//! Wavelet matrix over the rank sequence `ISA[1..=n]`, supporting range
//! counting within a rank band and successor/predecessor position searches
//! inside a band.
//!
//! Only rank support is stored on the level bit vectors (one prefix popcount
//! per 64-bit word); successor/predecessor run a binary search over counting
//! queries rather than relying on select.

use crate::error::{Error, Result};

/// Bit vector with constant-time rank.
pub(crate) struct BitVec {
    words: Vec<u64>,
    /// ranks[w] = number of set bits in words[0..w]
    ranks: Vec<u32>,
}

impl BitVec {
    fn from_bits(words: Vec<u64>) -> BitVec {
        let mut ranks = Vec::with_capacity(words.len() + 1);
        let mut acc = 0u32;
        ranks.push(0);
        for &w in &words {
            acc += w.count_ones();
            ranks.push(acc);
        }
        BitVec { words, ranks }
    }

    /// Number of set bits in positions [0, k).
    #[inline]
    fn rank1(&self, k: usize) -> usize {
        let w = k >> 6;
        let rem = k & 63;
        let partial = if rem == 0 { 0 } else { (self.words[w] & ((1u64 << rem) - 1)).count_ones() };
        self.ranks[w] as usize + partial as usize
    }
}

/// Range counting / band search over the permutation `ISA`.
///
/// Space is one bit plus rank overhead per level and position, i.e.
/// O(n log n) bits. `count_le` walks the levels once; the band searches
/// binary-search over positions with a counting probe per step.
pub struct RankGrid {
    n: usize,
    bits: usize,
    levels: Vec<Level>,
}

pub(crate) struct Level {
    bv: BitVec,
    zeros: usize,
}

impl RankGrid {
    /// Builds the grid from the 1-based `isa` array (slot 0 unused).
    pub(crate) fn from_isa(isa: &[u32]) -> RankGrid {
        let n = isa.len() - 1;
        // Values are mapped to 0-based ranks.
        let mut cur: Vec<u32> = isa[1..].iter().map(|&v| v - 1).collect();
        let bits = if n <= 1 { 0 } else { (usize::BITS - (n - 1).leading_zeros()) as usize };
        let mut levels = Vec::with_capacity(bits);
        let mut next = vec![0u32; n];
        for depth in 0..bits {
            let bit = bits - 1 - depth;
            let nwords = (n >> 6) + 1;
            let mut words = vec![0u64; nwords];
            for (i, &v) in cur.iter().enumerate() {
                if (v >> bit) & 1 == 1 {
                    words[i >> 6] |= 1u64 << (i & 63);
                }
            }
            let mut lo = 0usize;
            let zeros = cur.iter().filter(|&&v| (v >> bit) & 1 == 0).count();
            let mut hi = zeros;
            for &v in cur.iter() {
                if (v >> bit) & 1 == 0 {
                    next[lo] = v;
                    lo += 1;
                } else {
                    next[hi] = v;
                    hi += 1;
                }
            }
            std::mem::swap(&mut cur, &mut next);
            levels.push(Level { bv: BitVec::from_bits(words), zeros });
        }
        RankGrid { n, bits, levels }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Count of values < `upper` (0-based) among matrix positions [l, r).
    fn count_lt0(&self, mut l: usize, mut r: usize, upper: usize) -> usize {
        if upper == 0 || l >= r {
            return 0;
        }
        if upper >= (1usize << self.bits) {
            return r - l;
        }
        let mut acc = 0usize;
        for (depth, level) in self.levels.iter().enumerate() {
            let bit = self.bits - 1 - depth;
            let (r1l, r1r) = (level.bv.rank1(l), level.bv.rank1(r));
            if (upper >> bit) & 1 == 1 {
                acc += (r - l) - (r1r - r1l);
                l = level.zeros + r1l;
                r = level.zeros + r1r;
            } else {
                l -= r1l;
                r -= r1r;
            }
            if l >= r {
                break;
            }
        }
        acc
    }

    /// |{ m in [i, j] : ISA[m] <= rho }| for 1-based positions and rank.
    pub fn count_le(&self, i: usize, j: usize, rho: usize) -> Result<usize> {
        self.check_window(i, j)?;
        if rho == 0 || rho > self.n {
            return Err(Error::BadRange { i: rho, j: rho, n: self.n });
        }
        Ok(self.count_le_unchecked(i, j, rho))
    }

    #[inline]
    pub(crate) fn count_le_unchecked(&self, i: usize, j: usize, rho: usize) -> usize {
        self.count_lt0(i - 1, j, rho)
    }

    /// Count of positions in [i, j] whose rank lies in [rlo, rhi]; an empty
    /// band yields 0.
    #[inline]
    pub(crate) fn count_band(&self, i: usize, j: usize, rlo: usize, rhi: usize) -> usize {
        if rlo > rhi || i > j {
            return 0;
        }
        self.count_le_unchecked(i, j, rhi) - self.count_le_unchecked(i, j, rlo - 1)
    }

    /// Smallest position p in [lo, hi] with ISA[p] in [rlo, rhi], if any.
    /// An empty band (rlo > rhi) is not an error and yields `None`.
    pub fn successor_in_band(
        &self,
        lo: usize,
        hi: usize,
        rlo: usize,
        rhi: usize,
    ) -> Result<Option<usize>> {
        self.check_window(lo, hi)?;
        self.check_band(rlo, rhi)?;
        Ok(self.successor_in_band_unchecked(lo, hi, rlo, rhi))
    }

    pub(crate) fn successor_in_band_unchecked(
        &self,
        lo: usize,
        hi: usize,
        rlo: usize,
        rhi: usize,
    ) -> Option<usize> {
        if rlo > rhi || self.count_band(lo, hi, rlo, rhi) == 0 {
            return None;
        }
        let (mut a, mut b) = (lo, hi);
        while a < b {
            let mid = (a + b) / 2;
            if self.count_band(lo, mid, rlo, rhi) >= 1 {
                b = mid;
            } else {
                a = mid + 1;
            }
        }
        Some(a)
    }

    /// Largest position p in [lo, hi] with ISA[p] in [rlo, rhi], if any.
    /// An empty band (rlo > rhi) is not an error and yields `None`.
    pub fn predecessor_in_band(
        &self,
        lo: usize,
        hi: usize,
        rlo: usize,
        rhi: usize,
    ) -> Result<Option<usize>> {
        self.check_window(lo, hi)?;
        self.check_band(rlo, rhi)?;
        Ok(self.predecessor_in_band_unchecked(lo, hi, rlo, rhi))
    }

    pub(crate) fn predecessor_in_band_unchecked(
        &self,
        lo: usize,
        hi: usize,
        rlo: usize,
        rhi: usize,
    ) -> Option<usize> {
        if rlo > rhi || self.count_band(lo, hi, rlo, rhi) == 0 {
            return None;
        }
        let (mut a, mut b) = (lo, hi);
        while a < b {
            let mid = (a + b).div_ceil(2);
            if self.count_band(mid, hi, rlo, rhi) >= 1 {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        Some(a)
    }

    fn check_window(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.n {
            return Err(Error::BadRange { i, j, n: self.n });
        }
        Ok(())
    }

    fn check_band(&self, rlo: usize, rhi: usize) -> Result<()> {
        if rlo == 0 || (rhi > self.n && rlo <= rhi) {
            return Err(Error::BadRange { i: rlo, j: rhi, n: self.n });
        }
        Ok(())
    }

    /// Reconstructs the stored sequence (1-based ranks); the grid is lossless.
    #[cfg(test)]
    pub(crate) fn reconstruct(&self) -> Vec<u32> {
        let mut out = vec![0u32];
        out.extend((1..=self.n).map(|p| {
            let mut k = p - 1;
            let mut v = 0usize;
            for (depth, level) in self.levels.iter().enumerate() {
                let bit = self.bits - 1 - depth;
                let r1 = level.bv.rank1(k);
                if (level.bv.words[k >> 6] >> (k & 63)) & 1 == 1 {
                    v |= 1 << bit;
                    k = level.zeros + r1;
                } else {
                    k -= r1;
                }
            }
            v as u32 + 1
        }));
        out
    }

    pub(crate) fn serialize_into(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        out.extend_from_slice(&(self.bits as u32).to_le_bytes());
        for level in &self.levels {
            out.extend_from_slice(&(level.zeros as u64).to_le_bytes());
            out.extend_from_slice(&(level.bv.words.len() as u64).to_le_bytes());
            for &w in &level.bv.words {
                out.extend_from_slice(&w.to_le_bytes());
            }
            for &r in &level.bv.ranks {
                out.extend_from_slice(&r.to_le_bytes());
            }
        }
    }

    pub(crate) fn deserialize_from(buf: &[u8], expect_n: usize) -> Result<RankGrid> {
        let corrupt = |m: &str| Error::Corrupt(format!("wavelet section: {m}"));
        let mut pos = 0usize;
        let mut take = |len: usize| -> Result<&[u8]> {
            if pos + len > buf.len() {
                return Err(corrupt("truncated"));
            }
            let s = &buf[pos..pos + len];
            pos += len;
            Ok(s)
        };
        let n = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
        if n != expect_n {
            return Err(corrupt("length mismatch"));
        }
        let bits = u32::from_le_bytes(take(4)?.try_into().unwrap()) as usize;
        let expect_bits =
            if n <= 1 { 0 } else { (usize::BITS - (n - 1).leading_zeros()) as usize };
        if bits != expect_bits {
            return Err(corrupt("level count mismatch"));
        }
        let nwords = (n >> 6) + 1;
        let mut levels = Vec::with_capacity(bits);
        for _ in 0..bits {
            let zeros = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
            let stored_words = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
            if stored_words != nwords || zeros > n {
                return Err(corrupt("level header"));
            }
            let mut words = Vec::with_capacity(nwords);
            for _ in 0..nwords {
                words.push(u64::from_le_bytes(take(8)?.try_into().unwrap()));
            }
            let mut ranks = Vec::with_capacity(nwords + 1);
            for _ in 0..=nwords {
                ranks.push(u32::from_le_bytes(take(4)?.try_into().unwrap()));
            }
            let rebuilt = BitVec::from_bits(words);
            if rebuilt.ranks != ranks {
                return Err(corrupt("rank superblocks disagree with payload"));
            }
            levels.push(Level { bv: rebuilt, zeros });
        }
        if pos != buf.len() {
            return Err(corrupt("trailing bytes"));
        }
        Ok(RankGrid { n, bits, levels })
    }
}
