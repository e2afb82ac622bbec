//! Property tests: every query agrees with a brute-force computation on
//! arbitrary texts, and serialization is lossless.

use proptest::prelude::*;

use subsel::oracle;
use subsel::SubstringIndex;

fn arb_text() -> impl Strategy<Value = Vec<u8>> {
    // Small alphabets keep lcp structure interesting.
    (1u8..=4, 1usize..=48).prop_flat_map(|(sigma, len)| {
        prop::collection::vec(b'a'..b'a' + sigma, len..=len)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn min_max_and_select_match_oracle(text in arb_text(), seed in any::<u64>()) {
        let n = text.len();
        let tau = 1 + (seed % 4) as u32;
        let ix = SubstringIndex::build(text.clone(), tau).unwrap();
        let mut s = seed | 1;
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as usize
        };
        for _ in 0..24 {
            let i = 1 + next() % n;
            let j = i + next() % (n - i + 1);
            let k = 1 + next() % (j - i + 1);
            prop_assert_eq!(ix.min_suffix(i, j).unwrap(), oracle::oracle_min(&text, i, j));
            prop_assert_eq!(ix.max_suffix(i, j).unwrap(), oracle::oracle_max(&text, i, j));
            prop_assert_eq!(ix.select(i, j, k).unwrap(), oracle::oracle_select(&text, i, j, k));
        }
    }

    #[test]
    fn psq_matches_borders(text in arb_text(), seed in any::<u64>()) {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1).unwrap();
        let mut s = seed | 1;
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) as usize
        };
        for _ in 0..16 {
            let a1 = 1 + next() % n;
            let b1 = a1 + next() % (n - a1 + 1);
            let a2 = 1 + next() % n;
            let b2 = a2 + next() % (n - a2 + 1);
            let flat: Vec<usize> = ix
                .psq((a1, b1), (a2, b2))
                .unwrap()
                .iter()
                .flat_map(|p| p.iter().collect::<Vec<_>>())
                .collect();
            prop_assert_eq!(flat, oracle::oracle_borders(&text[a1 - 1..b1], &text[a2 - 1..b2]));
        }
    }

    #[test]
    fn lyndon_matches_duval(text in arb_text(), range_seed in any::<u64>()) {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 2).unwrap();
        let i = 1 + (range_seed as usize) % n;
        let j = i + (range_seed >> 32) as usize % (n - i + 1);
        let got: Vec<_> = ix
            .lyndon_decomposition(i, j)
            .unwrap()
            .iter()
            .map(|f| (f.start, f.word_len, f.exponent))
            .collect();
        prop_assert_eq!(got, oracle::oracle_lyndon(&text, i, j));
    }

    #[test]
    fn roundtrip_is_lossless(text in arb_text()) {
        let ix = SubstringIndex::build(text.clone(), 1).unwrap();
        let mut buf = Vec::new();
        ix.save(&mut buf).unwrap();
        let loaded = SubstringIndex::from_bytes(&buf).unwrap();
        let n = text.len();
        for i in 1..=n {
            prop_assert_eq!(ix.min_suffix(i, n).unwrap(), loaded.min_suffix(i, n).unwrap());
            prop_assert_eq!(ix.max_suffix(i, n).unwrap(), loaded.max_suffix(i, n).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Exhaustive oracle agreement on arbitrary short texts.
    #[test]
    fn all_pairs_on_short_texts(text in prop::collection::vec(b'a'..=b'c', 1..=14)) {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1).unwrap();
        for i in 1..=n {
            for j in i..=n {
                prop_assert_eq!(ix.min_suffix(i, j).unwrap(), oracle::oracle_min(&text, i, j));
                prop_assert_eq!(ix.max_suffix(i, j).unwrap(), oracle::oracle_max(&text, i, j));
                for k in 1..=j - i + 1 {
                    prop_assert_eq!(
                        ix.select(i, j, k).unwrap(),
                        oracle::oracle_select(&text, i, j, k)
                    );
                }
            }
        }
    }
}
