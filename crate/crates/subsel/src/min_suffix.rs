//! Minimal-suffix queries in O(tau) candidate comparisons from one machine
//! word per text position.
//!
//! For each position `j` a family of canonical substrings `S_j^l` ending at
//! `j` is defined arithmetically; a bit word records, per block of `tau`
//! consecutive canonical indices, whether the minimal suffix of the block's
//! top canonical substring outgrows the previous block. A query inspects the
//! highest relevant set bit and compares at most `2*tau + 2` candidate start
//! positions, each obtained from a range-minimum query over suffix ranks.

use crate::error::Result;
use crate::esa::EnhancedIndex;

/// Length of the canonical substring `S_j^l` (1-based `j`, `l >= 1`).
///
/// `S_j^l` is `T[j-len+1..j]`; for `l >= 2` it starts at a chunk boundary:
/// `j - len` is a multiple of `2^m` with `m = l/2 - 1`.
pub fn canonical_length(j: usize, l: usize) -> usize {
    debug_assert!(j >= 1 && l >= 1);
    if l == 1 {
        return 1;
    }
    let m = l / 2 - 1;
    let base = if l.is_multiple_of(2) { 2usize << m } else { 3usize << m };
    base + (j & ((1usize << m) - 1))
}

/// Largest `l` such that `S_j^l` is a proper suffix of `T[i..j]`, or 0 when
/// `i == j`. The answer lies among `2m+1, 2m, 2m-1` for
/// `m = floor(log2(j-i+1))`.
pub fn alpha(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j);
    if i == j {
        return 0;
    }
    let len = j - i + 1;
    let m = len.ilog2() as usize;
    let lo = (2 * m).saturating_sub(1).max(1);
    for l in (lo..=2 * m + 1).rev() {
        if canonical_length(j, l) < len {
            return l;
        }
    }
    unreachable!("alpha({i}, {j}) has no candidate");
}

/// Minimal-suffix lengths of all prefixes of `w` in linear time: entry `t`
/// is the length of the minimal non-empty suffix of `w[..=t]`.
///
/// Runs Duval's factorization scan; whenever the current group `w[i..=t]`
/// equals `u^e v` (u Lyndon, v a proper prefix of u), the minimal suffix of
/// the whole prefix is `u` if `v` is empty and otherwise equals the minimal
/// suffix of the prefix ending where `v`'s copy at the group start ends.
pub fn min_suf_all_prefixes(w: &[u8]) -> Vec<u32> {
    let n = w.len();
    assert!(n > 0, "min_suf_all_prefixes on empty input");
    let mut ms = vec![0u32; n];
    let mut i = 0usize;
    while i < n {
        ms[i] = 1;
        let mut j = i + 1;
        let mut k = i;
        while j < n && w[k] <= w[j] {
            if w[k] < w[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
            let period = j - k;
            let rem = (j - i) % period;
            ms[j - 1] = if rem == 0 { period as u32 } else { ms[i + rem - 1] };
        }
        while i <= k {
            i += j - k;
        }
    }
    ms
}

/// Per-position bit words plus the trade-off parameter `tau`.
pub struct MinSuffixIndex {
    tau: u32,
    /// words[j] holds bit `l-1` for the l-th block of canonical indices.
    words: Vec<u64>,
    /// Total characters processed by prefix-minimal-suffix passes during
    /// construction (instrumentation for the construction-work bound).
    duval_work: u64,
}

impl MinSuffixIndex {
    /// Builds the bit words for `esa`'s text. `tau` is clamped to
    /// `[1, max(1, floor(log2 n))]`; the effective value is [`Self::tau`].
    pub fn build(esa: &EnhancedIndex, tau: u32) -> MinSuffixIndex {
        let n = esa.n();
        let tau = clamp_tau(n, tau) as usize;
        let mut words = vec![0u64; n + 1];
        let mut duval_work = 0u64;

        // Bit 1 exists whenever the word has at least one block.
        for (j, w) in words.iter_mut().enumerate().skip(1) {
            if j >= 2 && alpha(1, j) >= tau {
                *w = 1;
            }
        }

        // Levels m carry canonical indices c in {2m+2, 2m+3}; only multiples
        // of tau with block index >= 2 contribute bits.
        let text = esa.text();
        let max_m = if n >= 2 { n.ilog2() as usize } else { 0 };
        for m in 0..=max_m {
            let c_even = 2 * m + 2;
            let c_odd = 2 * m + 3;
            let needed = |c: usize| c.is_multiple_of(tau) && c / tau >= 2;
            if !needed(c_even) && !needed(c_odd) {
                continue;
            }
            let s = 1usize << m;
            if 2 * s > n {
                break;
            }
            let mut p0 = 1usize;
            while p0 <= n {
                let wend = (p0 + 4 * s - 1).min(n);
                let wlen = wend - p0 + 1;
                if wlen >= 2 * s {
                    let lens = min_suf_all_prefixes(text.slice(p0, wend));
                    duval_work += wlen as u64;
                    let tmax = wlen.min(4 * s - 1);
                    for t in 2 * s..=tmax {
                        let c = if t < 3 * s { c_even } else { c_odd };
                        // p0 == 1 means S_j^c is the whole prefix, not proper.
                        if !needed(c) || p0 == 1 {
                            continue;
                        }
                        let j = p0 + t - 1;
                        debug_assert_eq!(canonical_length(j, c), t);
                        let prev = canonical_length(j, c - tau);
                        if lens[t - 1] as usize > prev {
                            words[j] |= 1u64 << (c / tau - 1);
                        }
                    }
                }
                p0 += s;
            }
        }

        MinSuffixIndex { tau: tau as u32, words, duval_work }
    }

    #[inline]
    pub fn tau(&self) -> u32 {
        self.tau
    }

    /// Characters processed by construction-time Duval passes.
    #[inline]
    pub fn duval_work(&self) -> u64 {
        self.duval_work
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_parts(tau: u32, words: Vec<u64>) -> MinSuffixIndex {
        MinSuffixIndex { tau, words, duval_work: 0 }
    }

    /// Start and length of the minimal non-empty suffix of `T[i..j]`, plus
    /// the number of candidate positions inspected (at most `2*tau + 2`).
    pub(crate) fn query(
        &self,
        esa: &EnhancedIndex,
        i: usize,
        j: usize,
    ) -> ((usize, usize), usize) {
        if i == j {
            return ((j, 1), 1);
        }
        let tau = self.tau as usize;
        let a = alpha(i, j);
        debug_assert!(a >= 1);
        let mut cands = 0usize;
        let mut best = esa.fwd.argmin_isa(i, j);
        cands += 1;
        let consider = |l: usize, best: &mut usize, cands: &mut usize| {
            let len = canonical_length(j, l);
            debug_assert!(len < j - i + 1);
            let p = esa.fwd.argmin_isa(j - len + 1, j);
            *cands += 1;
            if p != *best && esa.cmp_sub_unchecked((p, j), (*best, j)) == std::cmp::Ordering::Less
            {
                *best = p;
            }
        };
        let blocks = a / tau;
        if blocks >= 1 {
            let masked = self.words[j] & low_mask(blocks);
            debug_assert!(masked & 1 == 1, "bit 1 must be set when a block exists");
            let h = 64 - masked.leading_zeros() as usize;
            for l in (h - 1) * tau + 1..=h * tau {
                consider(l, &mut best, &mut cands);
            }
            for l in (tau * blocks).max(1)..=a {
                consider(l, &mut best, &mut cands);
            }
        } else {
            for l in 1..=a {
                consider(l, &mut best, &mut cands);
            }
        }
        debug_assert!(cands <= 2 * tau + 2);
        ((best, j - best + 1), cands)
    }

    pub(crate) fn query_checked(
        &self,
        esa: &EnhancedIndex,
        i: usize,
        j: usize,
    ) -> Result<(usize, usize)> {
        esa.check_range(i, j)?;
        Ok(self.query(esa, i, j).0)
    }

    /// Start and length of the minimal non-empty suffix of `T[i..j]`.
    /// `esa` must be the index this structure was built from.
    pub fn min_suffix(&self, esa: &EnhancedIndex, i: usize, j: usize) -> Result<(usize, usize)> {
        self.query_checked(esa, i, j)
    }

    /// Like [`Self::min_suffix`], also returning the candidate count.
    pub fn min_suffix_counted(
        &self,
        esa: &EnhancedIndex,
        i: usize,
        j: usize,
    ) -> Result<((usize, usize), usize)> {
        esa.check_range(i, j)?;
        Ok(self.query(esa, i, j))
    }
}

pub(crate) fn clamp_tau(n: usize, tau: u32) -> u32 {
    let hi = if n >= 2 { n.ilog2() } else { 1 };
    tau.clamp(1, hi.max(1))
}

#[inline]
fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}
