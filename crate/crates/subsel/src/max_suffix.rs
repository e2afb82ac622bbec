//! Maximal-suffix queries in O(1) from two machine words per position,
//! built by a single left-to-right scan.
//!
//! For each scan position `j`, the interval `[1, j]` carries a *nice
//! partition* into power-of-two blocks (nonincreasing left to right, at most
//! two per length, rightmost of length one). The partition evolves like a
//! binary counter: append a length-1 block, then merge the two leftmost
//! blocks of any length that occurs three times. This process is
//! deterministic, and the resulting multiset of lengths has a closed form:
//! with `K = floor(log2(j+1)) - 1` and `e = j - (2^(K+1) - 1)`, power `t`
//! occurs `1 + bit_t(e)` times for `t = 0..=K`. Queries exploit the closed
//! form to locate blocks with O(1) arithmetic.
//!
//! Alongside the partition, the scan maintains the list of `j`-active
//! positions (p is `j`-active when no p' in (p, j] has `T[p'..j] > T[p..j]`).
//! Adjacent list members (a, b) satisfy: either `T[b..j]` is a proper prefix
//! of `T[a..j]` (the pair is *armed* and will diverge at scan position
//! `b + lcp(T[a..], T[b..])`, where one comparison settles it), or the pair
//! has already diverged with `T[a..j]` on top, in which case `b` can never
//! overtake `a` and the pair needs no further attention. Divergences are
//! buffered in per-position event buckets, so the whole scan is linear.
//!
//! A per-position bit word records which partition blocks contain active
//! positions (two bits per power: right and left copy). A query inspects the
//! block containing `i` and the leftmost active block to its right, computes
//! one candidate start in each via range-maximum queries and the periodicity
//! argument, and returns the larger suffix.

use crate::error::Result;
use crate::esa::EnhancedIndex;

/// Two snapshot words per position: packed block counts and active-block
/// bits, both indexed by (power, copy) slots.
pub struct MaxSuffixIndex {
    /// descriptors[j]: 2-bit block count per power t at bits [2t, 2t+1].
    descriptors: Vec<u64>,
    /// active[j]: bit 2t = right copy of power t holds an active position,
    /// bit 2t+1 = left copy does.
    active: Vec<u64>,
    events_scheduled: u64,
    removals: u64,
}

/// Closed-form parameters of the nice partition of `[1, j]`.
#[inline]
fn partition_params(j: usize) -> (usize, usize) {
    let k = (j + 1).ilog2() as usize - 1;
    let e = j - ((1usize << (k + 1)) - 1);
    (k, e)
}

/// Cumulative length of all blocks of power <= t, from the right end.
#[inline]
fn cum_through(e: usize, t: usize) -> usize {
    let m = (2usize << t) - 1;
    (e & m) + m
}

/// Cumulative length of all blocks of power < t.
#[inline]
fn cum_below(e: usize, t: usize) -> usize {
    let m = (1usize << t) - 1;
    (e & m) + m
}

/// (power, copy) of the block containing position `i` in the partition of
/// `[1, j]`; copy 0 is the right copy.
fn locate_slot(j: usize, i: usize) -> (usize, usize) {
    debug_assert!(1 <= i && i <= j);
    let (k, e) = partition_params(j);
    let d = j - i;
    let g = (d + 1).ilog2() as usize;
    let hi = g.min(k);
    let mut t = g.saturating_sub(2);
    loop {
        debug_assert!(t <= hi, "no block found for j={j} i={i}");
        if cum_through(e, t) > d {
            let off = d - cum_below(e, t);
            let copy = off >> t;
            debug_assert!(copy <= (e >> t) & 1);
            return (t, copy);
        }
        t += 1;
    }
}

/// Bounds `[bl, br]` of the (power, copy) block in the partition of `[1, j]`.
fn block_bounds(j: usize, e: usize, t: usize, copy: usize) -> (usize, usize) {
    let dlo = cum_below(e, t) + copy * (1usize << t);
    let dhi = dlo + (1usize << t) - 1;
    (j - dhi, j - dlo)
}

/// Packed descriptor word of the closed-form partition of `[1, j]`.
fn descriptor_word(j: usize) -> u64 {
    let (k, e) = partition_params(j);
    let mut w = 0u64;
    for t in 0..=k {
        let c = 1 + ((e >> t) & 1) as u64;
        w |= c << (2 * t);
    }
    w
}

/// Construction-time scan state, exposed to tests through a step callback.
struct Scan<'a> {
    esa: &'a EnhancedIndex,
    n: usize,
    prev: Vec<u32>,
    next: Vec<u32>,
    alive: Vec<bool>,
    tail: u32,
    /// Event buckets: head[t] is a 1-based index into `nodes`.
    head: Vec<u32>,
    nodes: Vec<(u32, u32, u32)>,
    // Partition with per-slot active counters.
    count: [u8; 33],
    cnt: [[u32; 2]; 33],
    desc_word: u64,
    active_word: u64,
    part_extent: usize,
    events_scheduled: u64,
    removals: u64,
}

impl<'a> Scan<'a> {
    fn new(esa: &'a EnhancedIndex) -> Scan<'a> {
        let n = esa.n();
        Scan {
            esa,
            n,
            prev: vec![0; n + 2],
            next: vec![0; n + 2],
            alive: vec![false; n + 2],
            tail: 0,
            head: vec![0; n + 2],
            nodes: Vec::new(),
            count: [0; 33],
            cnt: [[0; 2]; 33],
            desc_word: 0,
            active_word: 0,
            part_extent: 0,
            events_scheduled: 0,
            removals: 0,
        }
    }

    fn refresh_slot(&mut self, t: usize) {
        let mask = !(0b11u64 << (2 * t));
        self.desc_word = (self.desc_word & mask) | ((self.count[t] as u64) << (2 * t));
        let mut bits = 0u64;
        if self.count[t] >= 1 && self.cnt[t][0] > 0 {
            bits |= 1 << (2 * t);
        }
        if self.count[t] == 2 && self.cnt[t][1] > 0 {
            bits |= 1 << (2 * t + 1);
        }
        self.active_word = (self.active_word & mask) | bits;
    }

    /// Folds a fresh length-1 block into the partition, cascading merges.
    fn fold(&mut self, counter: u32) {
        let mut t = 0usize;
        let mut carry = counter;
        loop {
            match self.count[t] {
                0 => {
                    self.count[t] = 1;
                    self.cnt[t][0] = carry;
                    self.refresh_slot(t);
                    break;
                }
                1 => {
                    self.count[t] = 2;
                    self.cnt[t][1] = self.cnt[t][0];
                    self.cnt[t][0] = carry;
                    self.refresh_slot(t);
                    break;
                }
                _ => {
                    let merged = self.cnt[t][0] + self.cnt[t][1];
                    self.count[t] = 1;
                    self.cnt[t][0] = carry;
                    self.cnt[t][1] = 0;
                    self.refresh_slot(t);
                    carry = merged;
                    t += 1;
                }
            }
        }
        self.part_extent += 1;
        debug_assert_eq!(self.desc_word, descriptor_word(self.part_extent));
    }

    fn remove(&mut self, p: usize) {
        debug_assert!(self.alive[p] && p < self.part_extent + 1);
        self.alive[p] = false;
        let (pr, nx) = (self.prev[p], self.next[p]);
        if pr != 0 {
            self.next[pr as usize] = nx;
        }
        if nx != 0 {
            self.prev[nx as usize] = pr;
        } else {
            self.tail = pr;
        }
        let (t, copy) = locate_slot(self.part_extent, p);
        self.cnt[t][copy] -= 1;
        self.refresh_slot(t);
        self.removals += 1;
    }

    /// Checks the adjacent pair (a, b), a < b, resolving divergences at or
    /// before `jcur` immediately (cascading to newly adjacent pairs) and
    /// scheduling future ones.
    fn check_pair(&mut self, mut a: usize, b: usize, jcur: usize) {
        loop {
            if a == 0 {
                return;
            }
            let l = self.esa.fwd.lcp_full(a, b);
            let trigger = b + l;
            if trigger > self.n {
                return; // T[b..] is a prefix of T[a..] forever: disarmed
            }
            if trigger > jcur {
                self.nodes.push((a as u32, b as u32, self.head[trigger]));
                self.head[trigger] = self.nodes.len() as u32;
                self.events_scheduled += 1;
                return;
            }
            let ca = self.esa.text().byte(a + l);
            let cb = self.esa.text().byte(b + l);
            debug_assert_ne!(ca, cb);
            if cb > ca {
                // T[b..jcur] overtook T[a..jcur]: a is no longer active.
                self.remove(a);
                a = self.prev[b] as usize;
            } else {
                // T[a..] stays above T[b..] from here on: disarmed.
                return;
            }
        }
    }

    fn step(&mut self, j: usize) {
        // 1. Append j (vacuously j-active) and check the new pair.
        let left = self.tail;
        self.prev[j] = left;
        self.next[j] = 0;
        self.alive[j] = true;
        if left != 0 {
            self.next[left as usize] = j as u32;
        }
        self.tail = j as u32;
        if left != 0 {
            self.check_pair(left as usize, j, j);
        }
        // 2. Drain events whose trigger is j.
        let mut node = self.head[j];
        while node != 0 {
            let (a, b, next_node) = self.nodes[node as usize - 1];
            let (a, b) = (a as usize, b as usize);
            if self.alive[a] && self.alive[b] && self.next[a] as usize == b {
                self.check_pair(a, b, j);
            }
            node = next_node;
        }
        // 3. Fold block [j, j] into the partition. j is never removed at its
        // own step (only left pair members are), so its counter is 1.
        debug_assert!(self.alive[j]);
        self.fold(1);
    }

    #[cfg(test)]
    fn list(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut p = self.tail as usize;
        while p != 0 {
            out.push(p);
            p = self.prev[p] as usize;
        }
        out.reverse();
        out
    }
}

impl MaxSuffixIndex {
    pub fn build(esa: &EnhancedIndex) -> MaxSuffixIndex {
        Self::build_inner(esa, |_, _| {})
    }

    fn build_inner(esa: &EnhancedIndex, mut on_step: impl FnMut(usize, &Scan)) -> MaxSuffixIndex {
        let n = esa.n();
        let mut scan = Scan::new(esa);
        let mut descriptors = vec![0u64; n + 1];
        let mut active = vec![0u64; n + 1];
        for j in 1..=n {
            scan.step(j);
            descriptors[j] = scan.desc_word;
            active[j] = scan.active_word;
            on_step(j, &scan);
        }
        MaxSuffixIndex {
            descriptors,
            active,
            events_scheduled: scan.events_scheduled,
            removals: scan.removals,
        }
    }

    #[inline]
    pub fn events_scheduled(&self) -> u64 {
        self.events_scheduled
    }

    #[inline]
    pub fn removals(&self) -> u64 {
        self.removals
    }

    #[inline]
    pub(crate) fn descriptors(&self) -> &[u64] {
        &self.descriptors
    }

    #[inline]
    pub(crate) fn active_words(&self) -> &[u64] {
        &self.active
    }

    pub(crate) fn from_parts(descriptors: Vec<u64>, active: Vec<u64>) -> MaxSuffixIndex {
        MaxSuffixIndex { descriptors, active, events_scheduled: 0, removals: 0 }
    }

    fn n(&self) -> usize {
        self.descriptors.len() - 1
    }

    /// Block `[bl, br]` of the stored partition of `[1, j]` containing `i`,
    /// plus its slot id (2*power + copy; slot ids grow right to left).
    pub fn locate_block(&self, j: usize, i: usize) -> Result<(usize, usize, usize)> {
        if i == 0 || i > j || j > self.n() {
            return Err(crate::error::Error::BadRange { i, j, n: self.n() });
        }
        let (t, copy) = locate_slot(j, i);
        debug_assert_eq!(
            (self.descriptors[j] >> (2 * t)) & 0b11,
            1 + ((partition_params(j).1 >> t) & 1) as u64
        );
        let (_, e) = partition_params(j);
        let (bl, br) = block_bounds(j, e, t, copy);
        Ok((bl, br, 2 * t + copy))
    }

    /// Leftmost block strictly right of `slot` whose active bit is set in the
    /// snapshot for `j`.
    pub fn next_active_block(
        &self,
        j: usize,
        slot: usize,
    ) -> Result<Option<(usize, usize, usize)>> {
        if j == 0 || j > self.n() || slot > 63 {
            return Err(crate::error::Error::BadRange { i: slot, j, n: self.n() });
        }
        let mask = (1u64 << slot) - 1;
        let cands = self.active[j] & mask;
        if cands == 0 {
            return Ok(None);
        }
        let bit = 63 - cands.leading_zeros() as usize;
        let (t, copy) = (bit / 2, bit % 2);
        let (_, e) = partition_params(j);
        let (bl, br) = block_bounds(j, e, t, copy);
        Ok(Some((bl, br, bit)))
    }

    /// Start of the maximal suffix of `T[i0..j]` under the assumption that
    /// it begins within `[bl, br]`. The result always lies in `[i0, j]`; a
    /// wrong assumption yields a dominated candidate, never an invalid one.
    pub fn max_in_block(
        esa: &EnhancedIndex,
        i0: usize,
        bl: usize,
        br: usize,
        j: usize,
    ) -> usize {
        debug_assert!(i0 <= bl && bl <= br && br <= j);
        debug_assert!(j - bl < 2 * (j - br + 1), "block ratio precondition");
        let p1 = esa.fwd.argmax_isa(bl, br);
        if p1 == i0 {
            return p1;
        }
        let p2 = esa.fwd.argmax_isa(i0, p1 - 1);
        // Is T[p1..j] a prefix of T[p2..j]?
        if esa.fwd.lcp_ranges((p1, j), (p2, j)) < j - p1 + 1 {
            return p1;
        }
        let d = p1 - p2;
        // rho = T[p2..p1-1]; nu = max power of rho that suffixes T[i0..p1-1].
        let nu = esa.pow_suffix_unchecked((p2, p1 - 1), (i0, p1 - 1));
        debug_assert!(nu >= 1);
        p1 - nu * d
    }

    /// Start and length of the maximal suffix of `T[i..j]`, plus the number
    /// of suffix-array primitive operations spent (constant).
    pub(crate) fn query(&self, esa: &EnhancedIndex, i: usize, j: usize) -> ((usize, usize), usize) {
        let mut ops = 0usize;
        let (t, copy) = locate_slot(j, i);
        let (_, e) = partition_params(j);
        let (_, br1) = block_bounds(j, e, t, copy);
        let c1 = Self::max_in_block_counted(esa, i, i, br1, j, &mut ops);
        let slot = 2 * t + copy;
        let mask = (1u64 << slot) - 1;
        let cands = self.active[j] & mask;
        let best = if cands != 0 {
            let bit = 63 - cands.leading_zeros() as usize;
            let (bl, br) = block_bounds(j, e, bit / 2, bit % 2);
            let c2 = Self::max_in_block_counted(esa, i, bl, br, j, &mut ops);
            ops += 1;
            if esa.cmp_sub_unchecked((c2, j), (c1, j)) == std::cmp::Ordering::Greater {
                c2
            } else {
                c1
            }
        } else {
            c1
        };
        ((best, j - best + 1), ops)
    }

    fn max_in_block_counted(
        esa: &EnhancedIndex,
        i0: usize,
        bl: usize,
        br: usize,
        j: usize,
        ops: &mut usize,
    ) -> usize {
        debug_assert!(i0 <= bl && bl <= br && br <= j);
        debug_assert!(j - bl < 2 * (j - br + 1), "block ratio precondition");
        *ops += 1;
        let p1 = esa.fwd.argmax_isa(bl, br);
        if p1 == i0 {
            return p1;
        }
        *ops += 2;
        let p2 = esa.fwd.argmax_isa(i0, p1 - 1);
        if esa.fwd.lcp_ranges((p1, j), (p2, j)) < j - p1 + 1 {
            return p1;
        }
        *ops += 1;
        let d = p1 - p2;
        let nu = esa.pow_suffix_unchecked((p2, p1 - 1), (i0, p1 - 1));
        debug_assert!(nu >= 1);
        p1 - nu * d
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

    /// Start and length of the maximal suffix of `T[i..j]`. `esa` must be
    /// the index this structure was built from.
    pub fn max_suffix(&self, esa: &EnhancedIndex, i: usize, j: usize) -> Result<(usize, usize)> {
        self.query_checked(esa, i, j)
    }

    /// Like [`Self::max_suffix`], also returning the primitive-operation
    /// count spent on the query.
    pub fn max_suffix_counted(
        &self,
        esa: &EnhancedIndex,
        i: usize,
        j: usize,
    ) -> Result<((usize, usize), usize)> {
        esa.check_range(i, j)?;
        Ok(self.query(esa, i, j))
    }
}
