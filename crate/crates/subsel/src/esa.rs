//! Enhanced suffix array: SA/ISA/LCP with range-minimum support for the text
//! and its reverse, giving constant-time substring comparison primitives.
//!
//! All public positions and ranks are 1-based inclusive; internal arrays
//! leave slot 0 unused so no shifting happens at query time.

use std::cmp::Ordering;

use crate::error::Result;
use crate::rmq::ArgRmq;
use crate::sa;
use crate::text::Text;

/// One direction's suffix structures.
pub(crate) struct Esa {
    pub(crate) sa: Vec<u32>,
    pub(crate) isa: Vec<u32>,
    pub(crate) lcp: Vec<u32>,
    rmq_lcp: ArgRmq,
    rmq_isa_min: ArgRmq,
    rmq_isa_max: ArgRmq,
}

impl Esa {
    fn build(bytes: &[u8]) -> Esa {
        let n = bytes.len();
        let sa0 = sa::suffix_array(bytes);
        let lcp0 = sa::lcp_array(bytes, &sa0);
        let mut sa1 = vec![0u32; n + 1];
        let mut isa1 = vec![0u32; n + 1];
        let mut lcp1 = vec![0u32; n + 1];
        for (r, &p) in sa0.iter().enumerate() {
            sa1[r + 1] = p + 1;
            isa1[p as usize + 1] = r as u32 + 1;
        }
        for (r, &v) in lcp0.iter().enumerate() {
            lcp1[r + 1] = v;
        }
        Esa::from_arrays(sa1, isa1, lcp1)
    }

    /// Assembles the structure from prevalidated 1-based arrays (slot 0
    /// unused); used by the loader as well as by [`Esa::build`].
    pub(crate) fn from_arrays(sa: Vec<u32>, isa: Vec<u32>, lcp: Vec<u32>) -> Esa {
        let rmq_lcp = ArgRmq::new_min(&lcp);
        let rmq_isa_min = ArgRmq::new_min(&isa);
        let rmq_isa_max = ArgRmq::new_max(&isa);
        Esa { sa, isa, lcp, rmq_lcp, rmq_isa_min, rmq_isa_max }
    }

    fn n(&self) -> usize {
        self.sa.len() - 1
    }

    /// lcp of the full suffixes starting at `p` and `q`.
    pub(crate) fn lcp_full(&self, p: usize, q: usize) -> usize {
        if p == q {
            return self.n() - p + 1;
        }
        let (r1, r2) = {
            let (a, b) = (self.isa[p] as usize, self.isa[q] as usize);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        };
        let arg = self.rmq_lcp.query(&self.lcp, r1 + 1, r2);
        self.lcp[arg] as usize
    }

    /// lcp of the substrings `[a1..b1]` and `[a2..b2]` in this direction.
    pub(crate) fn lcp_ranges(&self, x: (usize, usize), y: (usize, usize)) -> usize {
        self.lcp_full(x.0, y.0).min(x.1 - x.0 + 1).min(y.1 - y.0 + 1)
    }

    pub(crate) fn argmin_isa(&self, i: usize, j: usize) -> usize {
        self.rmq_isa_min.query(&self.isa, i, j)
    }

    pub(crate) fn argmax_isa(&self, i: usize, j: usize) -> usize {
        self.rmq_isa_max.query(&self.isa, i, j)
    }

    /// Largest alpha such that x^alpha is a prefix of y, both ranges in this
    /// direction's coordinates.
    pub(crate) fn pow_prefix(&self, x: (usize, usize), y: (usize, usize)) -> usize {
        let lx = x.1 - x.0 + 1;
        if self.lcp_ranges(x, y) < lx {
            return 0;
        }
        if y.0 + lx > y.1 {
            return 1;
        }
        let shifted = (y.0 + lx, y.1);
        1 + self.lcp_ranges(y, shifted) / lx
    }

    /// Maximal rank interval whose suffixes share a prefix of length >= |pat|
    /// with the suffix starting at `pat.0`.
    pub(crate) fn rank_interval(&self, pat: (usize, usize)) -> (usize, usize) {
        let n = self.n();
        let len = pat.1 - pat.0 + 1;
        let r0 = self.isa[pat.0] as usize;
        // Smallest rank rlo <= r0 with min(lcp[rlo+1..=r0]) >= len.
        let rlo = {
            let (mut lo, mut hi) = (1, r0);
            while lo < hi {
                let mid = (lo + hi) / 2;
                let arg = self.rmq_lcp.query(&self.lcp, mid + 1, r0);
                if self.lcp[arg] as usize >= len {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            lo
        };
        // Largest rank rhi >= r0 with min(lcp[r0+1..=rhi]) >= len.
        let rhi = {
            let (mut lo, mut hi) = (r0, n);
            while lo < hi {
                let mid = (lo + hi).div_ceil(2);
                let arg = self.rmq_lcp.query(&self.lcp, r0 + 1, mid);
                if self.lcp[arg] as usize >= len {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            lo
        };
        (rlo, rhi)
    }
}

/// Suffix structures for the text and its reverse plus the comparison
/// primitives built on them. Immutable after construction; queries are pure
/// reads, so shared references can be used from any number of threads.
pub struct EnhancedIndex {
    text: Text,
    pub(crate) fwd: Esa,
    pub(crate) rev: Esa,
}

impl EnhancedIndex {
    pub fn build(text: Text) -> EnhancedIndex {
        let fwd = Esa::build(text.as_bytes());
        let reversed: Vec<u8> = text.as_bytes().iter().rev().copied().collect();
        let rev = Esa::build(&reversed);
        EnhancedIndex { text, fwd, rev }
    }

    pub(crate) fn from_parts(text: Text, fwd: Esa, rev: Esa) -> EnhancedIndex {
        EnhancedIndex { text, fwd, rev }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.text.len()
    }

    #[inline]
    pub fn text(&self) -> &Text {
        &self.text
    }

    /// Position holding the rank-`r` suffix (1-based).
    pub fn sa_at(&self, r: usize) -> Result<usize> {
        self.text.check_pos(r)?;
        Ok(self.fwd.sa[r] as usize)
    }

    /// Rank of the suffix starting at `p` (1-based).
    pub fn isa_at(&self, p: usize) -> Result<usize> {
        self.text.check_pos(p)?;
        Ok(self.fwd.isa[p] as usize)
    }

    /// Mapping of a position into reversed-text coordinates.
    #[inline]
    pub(crate) fn rev_pos(&self, p: usize) -> usize {
        self.n() - p + 1
    }

    /// Mapping of a range into reversed-text coordinates.
    #[inline]
    pub(crate) fn rev_range(&self, r: (usize, usize)) -> (usize, usize) {
        (self.rev_pos(r.1), self.rev_pos(r.0))
    }

    /// Longest common prefix of `T[a1..b1]` and `T[a2..b2]`.
    pub fn lcp_sub(&self, x: (usize, usize), y: (usize, usize)) -> Result<usize> {
        self.text.check_range(x.0, x.1)?;
        self.text.check_range(y.0, y.1)?;
        Ok(self.fwd.lcp_ranges(x, y))
    }

    /// Longest common suffix of `T[a1..b1]` and `T[a2..b2]`.
    pub fn lcs_sub(&self, x: (usize, usize), y: (usize, usize)) -> Result<usize> {
        self.text.check_range(x.0, x.1)?;
        self.text.check_range(y.0, y.1)?;
        Ok(self.rev.lcp_ranges(self.rev_range(x), self.rev_range(y)))
    }

    /// Lexicographic comparison of `T[a1..b1]` and `T[a2..b2]`; a proper
    /// prefix compares Less.
    pub fn cmp_sub(&self, x: (usize, usize), y: (usize, usize)) -> Result<Ordering> {
        self.text.check_range(x.0, x.1)?;
        self.text.check_range(y.0, y.1)?;
        Ok(self.cmp_sub_unchecked(x, y))
    }

    pub(crate) fn cmp_sub_unchecked(&self, x: (usize, usize), y: (usize, usize)) -> Ordering {
        let (lx, ly) = (x.1 - x.0 + 1, y.1 - y.0 + 1);
        let l = self.fwd.lcp_ranges(x, y);
        if l == lx || l == ly {
            return lx.cmp(&ly);
        }
        self.text.byte(x.0 + l).cmp(&self.text.byte(y.0 + l))
    }

    /// Comparison of the full suffixes starting at `p` and `q` through their
    /// ranks.
    pub fn cmp_full(&self, p: usize, q: usize) -> Result<Ordering> {
        self.text.check_pos(p)?;
        self.text.check_pos(q)?;
        Ok(self.fwd.isa[p].cmp(&self.fwd.isa[q]))
    }

    /// Position in `[i, j]` whose full suffix has the smallest rank.
    pub fn range_min_rank(&self, i: usize, j: usize) -> Result<usize> {
        self.text.check_range(i, j)?;
        Ok(self.fwd.argmin_isa(i, j))
    }

    /// Position in `[i, j]` whose full suffix has the largest rank.
    pub fn range_max_rank(&self, i: usize, j: usize) -> Result<usize> {
        self.text.check_range(i, j)?;
        Ok(self.fwd.argmax_isa(i, j))
    }

    /// Largest alpha such that `x^alpha` is a prefix of `y`.
    pub fn pow_prefix(&self, x: (usize, usize), y: (usize, usize)) -> Result<usize> {
        self.text.check_range(x.0, x.1)?;
        self.text.check_range(y.0, y.1)?;
        Ok(self.fwd.pow_prefix(x, y))
    }

    /// Largest alpha such that `x^alpha` is a suffix of `y`.
    pub fn pow_suffix(&self, x: (usize, usize), y: (usize, usize)) -> Result<usize> {
        self.text.check_range(x.0, x.1)?;
        self.text.check_range(y.0, y.1)?;
        Ok(self.pow_suffix_unchecked(x, y))
    }

    pub(crate) fn pow_suffix_unchecked(&self, x: (usize, usize), y: (usize, usize)) -> usize {
        self.rev.pow_prefix(self.rev_range(x), self.rev_range(y))
    }

    /// Maximal contiguous rank interval `[rlo, rhi]` of suffixes sharing a
    /// prefix of length >= |pattern| with `T[pattern.0..pattern.1]`.
    pub fn rank_interval(&self, pattern: (usize, usize)) -> Result<(usize, usize)> {
        self.text.check_range(pattern.0, pattern.1)?;
        Ok(self.fwd.rank_interval(pattern))
    }

    pub(crate) fn check_range(&self, i: usize, j: usize) -> Result<()> {
        self.text.check_range(i, j)
    }

    pub(crate) fn check_pos(&self, p: usize) -> Result<()> {
        self.text.check_pos(p)
    }
}
