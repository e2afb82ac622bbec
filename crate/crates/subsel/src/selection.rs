//! General substring suffix selection: `NotLarger` counting against a full
//! suffix, and the k-th smallest suffix of `T[i..j]` via binary search over
//! suffix ranks plus a prefix-suffix query.

use crate::esa::EnhancedIndex;
use crate::prefix_suffix::{self, Progression};
use crate::wavelet::RankGrid;

/// |{ m in [i, j] : T[m..j] <= T[l..] }|.
///
/// Splits into suffixes already not larger as full suffixes (a rank-band
/// count on the wavelet grid) plus suffixes that are larger in full but whose
/// trimmed form is a prefix of `T[l..]`. The latter are exactly the
/// prefix-suffix lengths of (T[l..], T[i..j]); each reported progression is
/// resolved with at most three full-suffix comparisons because the
/// comparison sign is constant once the shared leading power of the
/// progression's period is stripped.
pub(crate) fn not_larger(
    esa: &EnhancedIndex,
    grid: &RankGrid,
    i: usize,
    j: usize,
    l: usize,
) -> usize {
    let n = esa.n();
    let rho = esa.fwd.isa[l] as usize;
    let mut total = grid.count_le_unchecked(i, j, rho);
    for prog in prefix_suffix::psq(esa, grid, (l, n), (i, j)) {
        total += count_greater_members(esa, j, l, &prog);
    }
    total
}

/// Members m of the progression (prefix-suffix lengths of `T[l..]` against a
/// substring ending at `j`) whose full suffix satisfies `T[m..] > T[l..]`.
fn count_greater_members(esa: &EnhancedIndex, j: usize, l: usize, prog: &Progression) -> usize {
    let n = esa.n();
    let greater = |m: usize| (esa.fwd.isa[m] > esa.fwd.isa[l]) as usize;
    if prog.count == 1 {
        return greater(j - prog.smallest + 1);
    }
    // Start of the longest member; starts increase as lengths decrease.
    let r = j - prog.largest() + 1;
    let d = prog.diff;
    let nu = prog.count - 1; // members are s = 0..=nu at r + s*d
    let rho = (l, l + d - 1);
    let nu_p = esa.fwd.pow_prefix(rho, (r, n));
    let nu_pp = esa.fwd.pow_prefix(rho, (l, n));
    debug_assert!(nu_p >= nu && nu_pp >= 1);
    // T[r + s*d ..] = rho^(nu_p - s) x with x not rho-led, and
    // T[l..] = rho^nu_pp y likewise, so the comparison sign is constant on
    // each of the bands s < s0, s == s0, s > s0 where s0 = nu_p - nu_pp.
    let s0 = nu_p as i64 - nu_pp as i64;
    let mut total = 0usize;
    if s0 > 0 {
        let hi = (nu as i64).min(s0 - 1) as usize;
        total += (hi + 1) * greater(r);
    }
    if s0 >= 0 && s0 <= nu as i64 {
        total += greater(r + s0 as usize * d);
    }
    if s0 < nu as i64 {
        let lo = (s0 + 1).max(0) as usize;
        total += (nu - lo + 1) * greater(r + nu * d);
    }
    total
}

/// Start and length of the k-th lexicographically smallest suffix of
/// `T[i..j]`, 1 <= k <= j - i + 1.
pub(crate) fn select(
    esa: &EnhancedIndex,
    grid: &RankGrid,
    i: usize,
    j: usize,
    k: usize,
) -> (usize, usize) {
    let n = esa.n();
    debug_assert!(1 <= k && k <= j - i + 1);
    // Minimal rank whose suffix S satisfies NotLarger(T[i..j], S) >= k; the
    // count is monotone in the rank.
    let (mut lo, mut hi) = (1usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if not_larger(esa, grid, i, j, esa.fwd.sa[mid] as usize) >= k {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let l = esa.fwd.sa[lo] as usize;
    let total = not_larger(esa, grid, i, j, l);
    debug_assert!(total >= k);
    let q = total - k + 1;
    // The answer is the q-th largest prefix of T[l..] that is a suffix of
    // T[i..j]; walk the progressions from the back.
    let progs = prefix_suffix::psq(esa, grid, (l, n), (i, j));
    debug_assert!(q <= progs.iter().map(|p| p.count).sum::<usize>());
    let mut rem = q;
    for prog in progs.iter().rev() {
        if rem <= prog.count {
            let lambda = prog.largest() - (rem - 1) * prog.diff;
            return (j - lambda + 1, lambda);
        }
        rem -= prog.count;
    }
    unreachable!("q exceeded the total prefix-suffix count");
}
