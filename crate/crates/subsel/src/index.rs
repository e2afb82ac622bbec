//! The combined index: enhanced suffix array, rank grid, minimal-suffix
//! words and maximal-suffix snapshots behind one query façade.

use crate::error::{Error, Result};
use crate::esa::EnhancedIndex;
use crate::lyndon::{self, LyndonFactor};
use crate::max_suffix::MaxSuffixIndex;
use crate::min_suffix::MinSuffixIndex;
use crate::prefix_suffix::{self, Progression};
use crate::selection;
use crate::text::Text;
use crate::wavelet::RankGrid;

/// All structures for one text. Immutable after construction; every query is
/// a pure read, safe for unlimited concurrent readers.
pub struct SubstringIndex {
    esa: EnhancedIndex,
    grid: RankGrid,
    min: MinSuffixIndex,
    max: MaxSuffixIndex,
}

impl SubstringIndex {
    /// Preprocesses `bytes` with trade-off parameter `tau` (clamped to
    /// `[1, max(1, floor(log2 n))]`; see [`SubstringIndex::tau`] for the
    /// effective value).
    pub fn build(bytes: Vec<u8>, tau: u32) -> Result<SubstringIndex> {
        let text = Text::new(bytes)?;
        let esa = EnhancedIndex::build(text);
        let grid = RankGrid::from_isa(&esa.fwd.isa);
        let min = MinSuffixIndex::build(&esa, tau);
        let max = MaxSuffixIndex::build(&esa);
        Ok(SubstringIndex { esa, grid, min, max })
    }

    pub(crate) fn from_parts(
        esa: EnhancedIndex,
        grid: RankGrid,
        min: MinSuffixIndex,
        max: MaxSuffixIndex,
    ) -> SubstringIndex {
        SubstringIndex { esa, grid, min, max }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.esa.n()
    }

    /// Effective trade-off parameter after clamping.
    #[inline]
    pub fn tau(&self) -> u32 {
        self.min.tau()
    }

    #[inline]
    pub fn text(&self) -> &Text {
        self.esa.text()
    }

    #[inline]
    pub fn enhanced(&self) -> &EnhancedIndex {
        &self.esa
    }

    #[inline]
    pub fn rank_grid(&self) -> &RankGrid {
        &self.grid
    }

    #[inline]
    pub fn min_index(&self) -> &MinSuffixIndex {
        &self.min
    }

    #[inline]
    pub fn max_index(&self) -> &MaxSuffixIndex {
        &self.max
    }

    /// Start and length of the minimal non-empty suffix of `T[i..j]`.
    pub fn min_suffix(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        self.min.query_checked(&self.esa, i, j)
    }

    /// Like [`Self::min_suffix`], also returning the number of candidate
    /// positions inspected (at most `2 * tau + 2`).
    pub fn min_suffix_counted(&self, i: usize, j: usize) -> Result<((usize, usize), usize)> {
        self.esa.check_range(i, j)?;
        Ok(self.min.query(&self.esa, i, j))
    }

    /// Start and length of the maximal suffix of `T[i..j]`.
    pub fn max_suffix(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        self.max.query_checked(&self.esa, i, j)
    }

    /// Like [`Self::max_suffix`], also returning the number of suffix-array
    /// primitives spent (bounded by a constant).
    pub fn max_suffix_counted(&self, i: usize, j: usize) -> Result<((usize, usize), usize)> {
        self.esa.check_range(i, j)?;
        Ok(self.max.query(&self.esa, i, j))
    }

    /// Start and length of the k-th smallest suffix of `T[i..j]`.
    pub fn select(&self, i: usize, j: usize, k: usize) -> Result<(usize, usize)> {
        self.esa.check_range(i, j)?;
        if k == 0 || k > j - i + 1 {
            return Err(Error::BadRank { k, len: j - i + 1 });
        }
        Ok(selection::select(&self.esa, &self.grid, i, j, k))
    }

    /// Number of suffixes of `T[i..j]` lexicographically not larger than the
    /// full suffix `T[l..]`.
    pub fn not_larger(&self, i: usize, j: usize, l: usize) -> Result<usize> {
        self.esa.check_range(i, j)?;
        self.esa.check_pos(l)?;
        Ok(selection::not_larger(&self.esa, &self.grid, i, j, l))
    }

    /// Lyndon decomposition of `T[i..j]`, factors left to right.
    pub fn lyndon_decomposition(&self, i: usize, j: usize) -> Result<Vec<LyndonFactor>> {
        self.esa.check_range(i, j)?;
        Ok(lyndon::decompose(&self.esa, &self.min, i, j))
    }

    /// Prefix-suffix query: all lengths `lambda` such that the length-`lambda`
    /// prefix of `T[s.0..s.1]` equals the length-`lambda` suffix of
    /// `T[sp.0..sp.1]`, as disjoint increasing progressions.
    pub fn psq(&self, s: (usize, usize), sp: (usize, usize)) -> Result<Vec<Progression>> {
        self.esa.check_range(s.0, s.1)?;
        self.esa.check_range(sp.0, sp.1)?;
        Ok(prefix_suffix::psq(&self.esa, &self.grid, s, sp))
    }

    /// Construction-work instrumentation of the minimal-suffix structure.
    pub fn min_build_work(&self) -> u64 {
        self.min.duval_work()
    }

    /// Event/removal instrumentation of the maximal-suffix scan.
    pub fn max_build_events(&self) -> (u64, u64) {
        (self.max.events_scheduled(), self.max.removals())
    }
}
