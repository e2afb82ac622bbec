//! Argument range-minimum/maximum structures over `vals[1..=n]`.
//!
//! Blocks of eight entries are summarized by their extreme argument and a
//! sparse table is built over the block summaries, so a query touches at most
//! two partial blocks plus two table cells. Index 0 of the value array is an
//! unused slot; all public indices are 1-based inclusive.

const BLOCK: usize = 8;

pub(crate) struct ArgRmq {
    take_max: bool,
    n: usize,
    /// sparse[lvl][b] = extreme argument over blocks [b, b + 2^lvl)
    sparse: Vec<Vec<u32>>,
}

impl ArgRmq {
    pub fn new_min(vals: &[u32]) -> Self {
        Self::build(vals, false)
    }

    pub fn new_max(vals: &[u32]) -> Self {
        Self::build(vals, true)
    }

    fn build(vals: &[u32], take_max: bool) -> Self {
        let n = vals.len() - 1;
        let nb = n.div_ceil(BLOCK);
        let mut base = Vec::with_capacity(nb);
        for b in 0..nb {
            let lo = 1 + b * BLOCK;
            let hi = (lo + BLOCK - 1).min(n);
            let mut arg = lo;
            for p in lo + 1..=hi {
                if better(vals, take_max, p, arg) {
                    arg = p;
                }
            }
            base.push(arg as u32);
        }
        let levels = if nb <= 1 { 1 } else { nb.ilog2() as usize + 1 };
        let mut sparse = Vec::with_capacity(levels);
        sparse.push(base);
        for lvl in 1..levels {
            let half = 1usize << (lvl - 1);
            let prev = &sparse[lvl - 1];
            let len = nb - (1usize << lvl) + 1;
            let mut cur = Vec::with_capacity(len);
            for b in 0..len {
                let a1 = prev[b] as usize;
                let a2 = prev[b + half] as usize;
                cur.push(if better(vals, take_max, a2, a1) { a2 as u32 } else { a1 as u32 });
            }
            sparse.push(cur);
        }
        ArgRmq { take_max, n, sparse }
    }

    /// Extreme argument over `vals[l..=r]`, 1 <= l <= r <= n.
    pub fn query(&self, vals: &[u32], l: usize, r: usize) -> usize {
        debug_assert!(1 <= l && l <= r && r <= self.n);
        let bl = (l - 1) / BLOCK;
        let br = (r - 1) / BLOCK;
        if br - bl <= 1 {
            return self.scan(vals, l, r);
        }
        // Candidates in left-to-right order so ties resolve leftmost:
        // head partial block, the two sparse windows over the full middle
        // blocks bl+1 ..= br-1, then the tail partial block.
        let mut arg = self.scan(vals, l, (bl + 1) * BLOCK);
        let (lo, hi) = (bl + 1, br - 1);
        let lvl = (hi - lo + 1).ilog2() as usize;
        let a1 = self.sparse[lvl][lo] as usize;
        let a2 = self.sparse[lvl][hi + 1 - (1usize << lvl)] as usize;
        let tail = self.scan(vals, br * BLOCK + 1, r);
        for a in [a1, a2, tail] {
            if better(vals, self.take_max, a, arg) {
                arg = a;
            }
        }
        arg
    }

    fn scan(&self, vals: &[u32], l: usize, r: usize) -> usize {
        let mut arg = l;
        for p in l + 1..=r {
            if better(vals, self.take_max, p, arg) {
                arg = p;
            }
        }
        arg
    }
}

/// Strictly better, so ties resolve to the leftmost argument.
#[inline]
fn better(vals: &[u32], take_max: bool, cand: usize, cur: usize) -> bool {
    if take_max {
        vals[cand] > vals[cur]
    } else {
        vals[cand] < vals[cur]
    }
}
