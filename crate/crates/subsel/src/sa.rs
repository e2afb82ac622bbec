//! Suffix array construction by prefix doubling with counting sort,
//! O(n log n) total. Input and output are 0-based; callers shift to the
//! crate's 1-based convention.

/// Sorted suffix start positions of `text` (0-based).
pub(crate) fn suffix_array(text: &[u8]) -> Vec<u32> {
    let n = text.len();
    assert!(n > 0);
    if n == 1 {
        return vec![0];
    }

    let mut sa: Vec<u32> = vec![0; n];
    let mut rank: Vec<u32> = vec![0; n];
    let mut tmp: Vec<u32> = vec![0; n];

    // Initial order by single byte.
    {
        let mut cnt = [0u32; 257];
        for &b in text {
            cnt[b as usize + 1] += 1;
        }
        for c in 1..257 {
            cnt[c] += cnt[c - 1];
        }
        for (i, &b) in text.iter().enumerate() {
            sa[cnt[b as usize] as usize] = i as u32;
            cnt[b as usize] += 1;
        }
        let mut r = 0u32;
        rank[sa[0] as usize] = 0;
        for idx in 1..n {
            if text[sa[idx] as usize] != text[sa[idx - 1] as usize] {
                r += 1;
            }
            rank[sa[idx] as usize] = r;
        }
        if r as usize + 1 == n {
            return sa;
        }
    }

    let mut cnt: Vec<u32> = vec![0; n + 1];
    let mut order2: Vec<u32> = vec![0; n];
    let mut k = 1usize;
    loop {
        // Sort by the pair (rank[i], rank[i + k]), where a missing second
        // half sorts first. order2 lists suffixes sorted by the second key.
        let mut p = 0;
        for i in n - k..n {
            order2[p] = i as u32;
            p += 1;
        }
        for &i in sa.iter() {
            if i as usize >= k {
                order2[p] = i - k as u32;
                p += 1;
            }
        }
        // Stable counting sort by the first key.
        cnt.iter_mut().for_each(|c| *c = 0);
        for &r in rank.iter() {
            cnt[r as usize + 1] += 1;
        }
        for c in 1..=n {
            cnt[c] += cnt[c - 1];
        }
        for &i in order2.iter() {
            let r = rank[i as usize] as usize;
            sa[cnt[r] as usize] = i;
            cnt[r] += 1;
        }
        // Re-rank.
        let key = |i: usize| -> (u32, i64) {
            (rank[i], if i + k < n { rank[i + k] as i64 } else { -1 })
        };
        let mut r = 0u32;
        tmp[sa[0] as usize] = 0;
        for idx in 1..n {
            if key(sa[idx] as usize) != key(sa[idx - 1] as usize) {
                r += 1;
            }
            tmp[sa[idx] as usize] = r;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if r as usize + 1 == n {
            break;
        }
        k <<= 1;
    }
    sa
}

/// Kasai LCP array, 0-based: `lcp[r]` is the longest common prefix of the
/// suffixes at ranks `r - 1` and `r`; `lcp[0] = 0`.
pub(crate) fn lcp_array(text: &[u8], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut isa = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        isa[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut k = 0usize;
    for p in 0..n {
        let r = isa[p] as usize;
        if r == 0 {
            k = 0;
            continue;
        }
        let q = sa[r - 1] as usize;
        while p + k < n && q + k < n && text[p + k] == text[q + k] {
            k += 1;
        }
        lcp[r] = k as u32;
        k = k.saturating_sub(1);
    }
    lcp
}
