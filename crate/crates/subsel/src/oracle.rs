//! Brute-force reference implementations used by tests and the `verify`
//! subcommand. Everything here works by direct definition on byte slices —
//! no suffix arrays, no shared code with the query structures — so these
//! functions can serve as independent ground truth. Costs range from O(n^2)
//! to O(n^3); callers cap the input size.
//!
//! Positions are 1-based inclusive, matching the rest of the crate.

/// Starts of the suffixes of `T[i..j]` in increasing lexicographic order
/// of `T[m..j]`.
pub fn oracle_sorted_suffixes(text: &[u8], i: usize, j: usize) -> Vec<usize> {
    let mut starts: Vec<usize> = (i..=j).collect();
    starts.sort_by(|&a, &b| text[a - 1..j].cmp(&text[b - 1..j]));
    starts
}

/// Start and length of the lexicographically minimal suffix of `T[i..j]`.
pub fn oracle_min(text: &[u8], i: usize, j: usize) -> (usize, usize) {
    let mut best = j;
    for m in (i..j).rev() {
        if text[m - 1..j] < text[best - 1..j] {
            best = m;
        }
    }
    (best, j - best + 1)
}

/// Start and length of the lexicographically maximal suffix of `T[i..j]`.
pub fn oracle_max(text: &[u8], i: usize, j: usize) -> (usize, usize) {
    let mut best = j;
    for m in (i..j).rev() {
        if text[m - 1..j] > text[best - 1..j] {
            best = m;
        }
    }
    (best, j - best + 1)
}

/// Start and length of the k-th smallest suffix of `T[i..j]`, 1 <= k <= j-i+1.
pub fn oracle_select(text: &[u8], i: usize, j: usize, k: usize) -> (usize, usize) {
    let starts = oracle_sorted_suffixes(text, i, j);
    let m = starts[k - 1];
    (m, j - m + 1)
}

/// For a fixed right end `j`, the minimal-suffix start of `T[i..j]` for every
/// `i` in `1..=j` (index `i - 1` of the result). Uses the identity that the
/// minimal suffix of `T[i..j]` is the smaller of `T[i..j]` and the minimal
/// suffix of `T[i+1..j]`.
pub fn oracle_min_starts_for_end(text: &[u8], j: usize) -> Vec<usize> {
    let mut out = vec![0usize; j];
    let mut best = j;
    out[j - 1] = j;
    for i in (1..j).rev() {
        if text[i - 1..j] < text[best - 1..j] {
            best = i;
        }
        out[i - 1] = best;
    }
    out
}

/// Mirror of [`oracle_min_starts_for_end`] for maximal suffixes.
pub fn oracle_max_starts_for_end(text: &[u8], j: usize) -> Vec<usize> {
    let mut out = vec![0usize; j];
    let mut best = j;
    out[j - 1] = j;
    for i in (1..j).rev() {
        if text[i - 1..j] > text[best - 1..j] {
            best = i;
        }
        out[i - 1] = best;
    }
    out
}

/// The set of `j`-active positions: p is `j`-active when no position
/// p' in (p, j] satisfies `T[p'..j] > T[p..j]`. Direct double loop.
pub fn oracle_active(text: &[u8], j: usize) -> Vec<usize> {
    let mut active = Vec::new();
    for p in 1..=j {
        let mut ok = true;
        for q in p + 1..=j {
            if text[q - 1..j] > text[p - 1..j] {
                ok = false;
                break;
            }
        }
        if ok {
            active.push(p);
        }
    }
    active
}

/// All lengths `lambda` such that the length-`lambda` prefix of `s` equals the
/// length-`lambda` suffix of `sp`, in increasing order.
pub fn oracle_borders(s: &[u8], sp: &[u8]) -> Vec<usize> {
    let m = s.len().min(sp.len());
    (1..=m)
        .filter(|&lambda| s[..lambda] == sp[sp.len() - lambda..])
        .collect()
}

/// Lyndon decomposition of `T[i..j]` as `(start, word_len, exponent)` triples
/// via textbook Duval, with equal adjacent factors grouped into exponents.
pub fn oracle_lyndon(text: &[u8], i: usize, j: usize) -> Vec<(usize, usize, usize)> {
    let s = &text[i - 1..j];
    let n = s.len();
    let mut words: Vec<(usize, usize)> = Vec::new(); // (0-based start, len)
    let mut a = 0usize;
    while a < n {
        let mut b = a + 1;
        let mut c = a;
        while b < n && s[c] <= s[b] {
            if s[c] < s[b] {
                c = a;
            } else {
                c += 1;
            }
            b += 1;
        }
        while a <= c {
            words.push((a, b - c));
            a += b - c;
        }
    }
    let mut out: Vec<(usize, usize, usize)> = Vec::new();
    for (start, len) in words {
        match out.last_mut() {
            Some(f) if f.1 == len && s[f.0..f.0 + len] == s[start..start + len] => f.2 += 1,
            _ => out.push((start, len, 1)),
        }
    }
    out.into_iter().map(|(st, len, e)| (i + st, len, e)).collect()
}

/// Minimal-suffix lengths of every prefix of `w`: entry `t` is the length of
/// the minimal non-empty suffix of `w[..=t]`. Direct per-prefix scan.
pub fn oracle_msl_prefixes(w: &[u8]) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.len());
    for t in 1..=w.len() {
        let pre = &w[..t];
        let mut best = t - 1;
        for m in 0..t {
            if pre[m..] < pre[best..] {
                best = m;
            }
        }
        out.push(t - best);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_suffixes_banana() {
        assert_eq!(oracle_sorted_suffixes(b"banana", 1, 6), vec![6, 4, 2, 1, 5, 3]);
        assert_eq!(oracle_sorted_suffixes(b"banana", 3, 3), vec![3]);
        assert_eq!(oracle_sorted_suffixes(b"aaa", 1, 3), vec![3, 2, 1]);
    }

    #[test]
    fn min_max_select_read_off() {
        assert_eq!(oracle_min(b"banana", 1, 6), (6, 1));
        assert_eq!(oracle_max(b"dcccabab", 1, 8), (1, 8));
        assert_eq!(oracle_max(b"dcccabab", 5, 8), (6, 3));
        assert_eq!(oracle_select(b"banana", 1, 6, 1), oracle_min(b"banana", 1, 6));
        assert_eq!(oracle_select(b"banana", 1, 6, 6), oracle_max(b"banana", 1, 6));
        assert_eq!(oracle_select(b"banana", 1, 6, 2), (4, 3));
    }

    #[test]
    fn active_sets_from_paper_examples() {
        assert_eq!(oracle_active(b"dcccabab", 8), vec![1, 2, 3, 4, 6, 8]);
        assert_eq!(oracle_active(b"dcccababb", 9), vec![1, 2, 3, 4, 8, 9]);
        assert_eq!(oracle_active(b"x", 1), vec![1]);
    }

    #[test]
    fn borders() {
        assert_eq!(oracle_borders(b"anana", b"banana"), vec![1, 3, 5]);
        assert_eq!(oracle_borders(b"abc", b"abc"), vec![3]);
        assert_eq!(oracle_borders(b"xy", b"zw"), Vec::<usize>::new());
    }

    #[test]
    fn lyndon_triples() {
        assert_eq!(oracle_lyndon(b"banana", 1, 6), vec![(1, 1, 1), (2, 2, 2), (6, 1, 1)]);
        assert_eq!(oracle_lyndon(b"aaaa", 1, 4), vec![(1, 1, 4)]);
        assert_eq!(oracle_lyndon(b"abab", 1, 4), vec![(1, 2, 2)]);
    }

    #[test]
    fn msl_prefixes() {
        assert_eq!(oracle_msl_prefixes(b"abaab"), vec![1, 2, 1, 1, 3]);
        assert_eq!(oracle_msl_prefixes(b"aaaa"), vec![1, 1, 1, 1]);
        assert_eq!(oracle_msl_prefixes(b"cba"), vec![1, 1, 1]);
    }
}
