//! Prefix-suffix queries: all lengths `lambda` such that the length-`lambda`
//! prefix of `S` equals the length-`lambda` suffix of `S'`, reported as a
//! short list of disjoint increasing arithmetic progressions.
//!
//! Lengths 1..3 are tested directly. Longer lengths are split into
//! half-doubling ranges `[2^e, 2^e + 2^(e-1) - 1]` and
//! `[2^e + 2^(e-1), 2^(e+1) - 1]`, so each range's width is at most half its
//! smallest member. Within a range `[lo, hi]`, a length is valid iff the
//! length-`lo` prefix of `S` occurs at the matching position near the end of
//! `S'` *and* the length-`lo` suffix of `S'` occurs at the matching position
//! inside `S`; since `hi < 2*lo` the two anchors jointly cover every
//! position. Anchor occurrences inside a window of span <= lo/2 form a single
//! arithmetic progression with the anchor's shortest period as difference, so
//! three band searches per anchor recover them, and a CRT intersection of the
//! two progressions yields the valid lengths.

use crate::esa::EnhancedIndex;
use crate::wavelet::RankGrid;

/// Arithmetic progression of prefix-suffix lengths:
/// `{smallest + t * diff : 0 <= t < count}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progression {
    pub smallest: usize,
    pub diff: usize,
    pub count: usize,
}

impl Progression {
    pub fn singleton(v: usize) -> Progression {
        Progression { smallest: v, diff: 1, count: 1 }
    }

    pub fn largest(&self) -> usize {
        self.smallest + (self.count - 1) * self.diff
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= self.smallest
            && v <= self.largest()
            && (v - self.smallest).is_multiple_of(self.diff)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count).map(move |t| self.smallest + t * self.diff)
    }
}

/// Members of `a` ∩ `b` within `[lo, hi]`, as a progression. Solves the two
/// residue constraints by extended gcd; returns `None` when empty.
pub fn ap_intersect(
    a: &Progression,
    b: &Progression,
    lo: usize,
    hi: usize,
) -> Option<Progression> {
    debug_assert!(a.diff >= 1 && b.diff >= 1);
    let lo = lo.max(a.smallest).max(b.smallest);
    let hi = hi.min(a.largest()).min(b.largest());
    if lo > hi {
        return None;
    }
    if a.count == 1 {
        return b.contains(a.smallest).then(|| clip_singleton(a.smallest, lo, hi)).flatten();
    }
    if b.count == 1 {
        return a.contains(b.smallest).then(|| clip_singleton(b.smallest, lo, hi)).flatten();
    }
    // x ≡ a.smallest (mod da), x ≡ b.smallest (mod db)
    let (da, db) = (a.diff as i128, b.diff as i128);
    let (ra, rb) = (a.smallest as i128, b.smallest as i128);
    let (g, u, _) = ext_gcd(da, db);
    if (rb - ra) % g != 0 {
        return None;
    }
    let step = da / g * db; // lcm
    // x = ra + da * u * (rb - ra)/g  (mod step)
    let mut x = ra + da * ((u * ((rb - ra) / g)).rem_euclid(step / da));
    x = x.rem_euclid(step);
    // smallest member >= lo
    let lo_i = lo as i128;
    let first = x + step * ((lo_i - x).div_euclid(step) + i128::from((lo_i - x).rem_euclid(step) != 0));
    debug_assert!(first >= lo_i && first - step < lo_i);
    if first > hi as i128 {
        return None;
    }
    let count = ((hi as i128 - first) / step + 1) as usize;
    Some(Progression { smallest: first as usize, diff: step as usize, count })
}

fn clip_singleton(v: usize, lo: usize, hi: usize) -> Option<Progression> {
    (v >= lo && v <= hi).then(|| Progression::singleton(v))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Occurrence progression of the substring `pat` within start positions
/// `[wlo, whi]` (a window of span at most |pat|/2 + 1).
fn occurrences(
    esa: &EnhancedIndex,
    grid: &RankGrid,
    pat: (usize, usize),
    wlo: usize,
    whi: usize,
) -> Option<Progression> {
    debug_assert!(wlo <= whi);
    let (rlo, rhi) = esa.fwd.rank_interval(pat);
    let first = grid.successor_in_band_unchecked(wlo, whi, rlo, rhi)?;
    let last = grid.predecessor_in_band_unchecked(wlo, whi, rlo, rhi).unwrap();
    if first == last {
        return Some(Progression::singleton(first));
    }
    let second = grid.successor_in_band_unchecked(first + 1, whi, rlo, rhi).unwrap();
    let d = second - first;
    debug_assert!(
        (last - first).is_multiple_of(d),
        "occurrence gaps must be equal within a half-length window"
    );
    Some(Progression { smallest: first, diff: d, count: (last - first) / d + 1 })
}

/// All valid prefix-suffix lengths for prefix side `s` and suffix side `sp`.
pub(crate) fn psq(
    esa: &EnhancedIndex,
    grid: &RankGrid,
    s: (usize, usize),
    sp: (usize, usize),
) -> Vec<Progression> {
    let m = (s.1 - s.0 + 1).min(sp.1 - sp.0 + 1);
    let mut out: Vec<Progression> = Vec::new();
    for lambda in 1..=m.min(3) {
        let pre = (s.0, s.0 + lambda - 1);
        let suf = (sp.1 - lambda + 1, sp.1);
        if esa.fwd.lcp_ranges(pre, suf) == lambda {
            out.push(Progression::singleton(lambda));
        }
    }
    let mut e = 2usize;
    while (1usize << e) <= m {
        let base = 1usize << e;
        let half = base >> 1;
        for (lo, hi) in [(base, base + half - 1), (base + half, 2 * base - 1)] {
            if lo > m {
                break;
            }
            let hi = hi.min(m);
            if let Some(p) = psq_range(esa, grid, s, sp, lo, hi) {
                out.push(p);
            }
        }
        e += 1;
    }
    debug_assert!(out.windows(2).all(|w| w[0].largest() < w[1].smallest));
    out
}

/// Valid lengths within `[lo, hi]` where `hi < 2*lo`, as one progression.
fn psq_range(
    esa: &EnhancedIndex,
    grid: &RankGrid,
    s: (usize, usize),
    sp: (usize, usize),
    lo: usize,
    hi: usize,
) -> Option<Progression> {
    // Anchor P: length-lo prefix of S must occur at sp.1 - lambda + 1.
    let p_anchor = (s.0, s.0 + lo - 1);
    let p_occ = occurrences(esa, grid, p_anchor, sp.1 - hi + 1, sp.1 - lo + 1)?;
    // lambda = sp.1 - x + 1 maps the occurrence progression to lengths.
    let lambda_a = Progression {
        smallest: sp.1 + 1 - p_occ.largest(),
        diff: p_occ.diff,
        count: p_occ.count,
    };
    // Anchor Q: length-lo suffix of S' must occur at s.0 + lambda - lo.
    let q_anchor = (sp.1 - lo + 1, sp.1);
    let q_occ = occurrences(esa, grid, q_anchor, s.0, s.0 + hi - lo)?;
    // lambda = y - s.0 + lo.
    let lambda_b = Progression {
        smallest: q_occ.smallest - s.0 + lo,
        diff: q_occ.diff,
        count: q_occ.count,
    };
    ap_intersect(&lambda_a, &lambda_b, lo, hi)
}
