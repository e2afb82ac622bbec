//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//!
//! Exhaustive checks compare every query against brute-force oracles over a
//! deterministic corpus of random texts (alphabets 2, 3, 4, 26) plus the
//! structured families: Fibonacci word, Thue-Morse word, a^n, (ab)^(n/2) and
//! the strings "dcccabab" / "dcccababb".

mod common;

use std::time::Instant;

use common::{conclude, corpus_128, corpus_300, par_check, random_text, PAPER_A, PAPER_B};
use subsel::oracle;
use subsel::{EnhancedIndex, MaxSuffixIndex, MinSuffixIndex, SubstringIndex, Text};

/// Criterion 1: minimal suffix, maximal suffix and Lyndon decomposition
/// equal the oracle for ALL (i, j) on the full corpus. Tolerance: exact.
#[test]
fn criterion_1_exhaustive_min_max_lyndon() {
    let texts = corpus_300();
    let started = Instant::now();
    let result = par_check(&texts, |text| {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1)
            .map_err(|e| format!("build failed: {e}"))?;
        let mut checked = 0u64;
        for j in 1..=n {
            let min_starts = oracle::oracle_min_starts_for_end(text, j);
            let max_starts = oracle::oracle_max_starts_for_end(text, j);
            for i in 1..=j {
                let ctx = || format!("i={i} j={j} n={n} text[..8]={:?}", &text[..n.min(8)]);
                let want = (min_starts[i - 1], j - min_starts[i - 1] + 1);
                let got = ix.min_suffix(i, j).map_err(|e| e.to_string())?;
                check!(got == want, "min_suffix {got:?} != {want:?} at {}", ctx());
                let want = (max_starts[i - 1], j - max_starts[i - 1] + 1);
                let got = ix.max_suffix(i, j).map_err(|e| e.to_string())?;
                check!(got == want, "max_suffix {got:?} != {want:?} at {}", ctx());
                let got: Vec<(usize, usize, usize)> = ix
                    .lyndon_decomposition(i, j)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|f| (f.start, f.word_len, f.exponent))
                    .collect();
                let want = oracle::oracle_lyndon(text, i, j);
                check!(got == want, "lyndon {got:?} != {want:?} at {}", ctx());
                checked += 3;
            }
        }
        Ok(checked)
    });
    let detail = result.map(|c| {
        format!(
            "{} texts, {c} queries exact vs oracle in {:.1}s",
            texts.len(),
            started.elapsed().as_secs_f64()
        )
    });
    conclude("1 (exhaustive min/max/lyndon)", detail);
}

/// Criterion 2: select equals the oracle for ALL (i, j, k) on the n <= 128
/// corpus, plus 10^5 random triples at n = 512. Tolerance: exact.
#[test]
fn criterion_2_exhaustive_selection() {
    let texts = corpus_128();
    let started = Instant::now();
    let exhaustive = par_check(&texts, |text| {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1)
            .map_err(|e| format!("build failed: {e}"))?;
        let mut checked = 0u64;
        for j in 1..=n {
            let sorted = oracle::oracle_sorted_suffixes(text, 1, j);
            for i in 1..=j {
                let mut k = 0usize;
                for &m in &sorted {
                    if m < i {
                        continue;
                    }
                    k += 1;
                    let got = ix.select(i, j, k).map_err(|e| e.to_string())?;
                    check!(
                        got == (m, j - m + 1),
                        "select({i},{j},{k}) = {got:?}, oracle ({m},{}) n={n} text[..8]={:?}",
                        j - m + 1,
                        &text[..n.min(8)]
                    );
                    checked += 1;
                }
            }
        }
        Ok(checked)
    });

    let random_512 = exhaustive.and_then(|exh| {
        let n = 512usize;
        let text = random_text(0x512512, 4, n);
        let ix = SubstringIndex::build(text.clone(), 1).map_err(|e| e.to_string())?;
        let sorted_by_end: Vec<Vec<usize>> =
            (0..=n).map(|j| if j == 0 { vec![] } else { oracle::oracle_sorted_suffixes(&text, 1, j) }).collect();
        let mut rng_state = 0x9d2c_5680u64;
        let mut next = move || {
            rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng_state >> 33) as usize
        };
        for _ in 0..100_000 {
            let i = 1 + next() % n;
            let j = i + next() % (n - i + 1);
            let k = 1 + next() % (j - i + 1);
            let m = sorted_by_end[j].iter().copied().filter(|&m| m >= i).nth(k - 1).unwrap();
            let got = ix.select(i, j, k).map_err(|e| e.to_string())?;
            check!(
                got == (m, j - m + 1),
                "random-512 select({i},{j},{k}) = {got:?}, oracle start {m}"
            );
        }
        Ok(exh + 100_000)
    });

    let detail = random_512.map(|c| {
        format!(
            "{} texts exhaustive + 10^5 triples at n=512, {c} selections exact in {:.1}s",
            texts.len(),
            started.elapsed().as_secs_f64()
        )
    });
    conclude("2 (exhaustive selection)", detail);
}

/// Criterion 3: the active-position examples reproduce exactly.
#[test]
fn criterion_3_paper_examples() {
    let result = (|| {
        let got = oracle::oracle_active(PAPER_A, 8);
        check!(got == vec![1, 2, 3, 4, 6, 8], "dcccabab 8-active = {got:?}");
        let got = oracle::oracle_active(PAPER_B, 9);
        check!(got == vec![1, 2, 3, 4, 8, 9], "dcccababb 9-active = {got:?}");
        Ok("8-active {1,2,3,4,6,8} and 9-active {1,2,3,4,8,9} reproduced".to_string())
    })();
    conclude("3 (paper active-set examples)", result);
}

/// Criterion 4: answers identical across tau in {1, 2, 4, floor(log2 n)};
/// candidate count <= 2*tau + 2 per query; construction Duval work
/// <= 16 * n * (floor(log2 n) / tau + 1).
#[test]
fn criterion_4_tau_sweep() {
    // Structured subset of the corpus plus one larger text.
    let mut texts: Vec<Vec<u8>> = corpus_300().into_iter().step_by(7).collect();
    texts.push(random_text(0x7a57e, 3, 1 << 14));
    let started = Instant::now();
    let result = par_check(&texts, |text| {
        let n = text.len();
        let esa = EnhancedIndex::build(Text::new(text.clone()).unwrap());
        let max_tau = if n >= 2 { n.ilog2() } else { 1 };
        let taus: Vec<u32> = [1u32, 2, 4, max_tau.max(1)].to_vec();
        let mins: Vec<MinSuffixIndex> =
            taus.iter().map(|&t| MinSuffixIndex::build(&esa, t)).collect();
        for (ms, &tau) in mins.iter().zip(&taus) {
            let eff = ms.tau() as u64;
            let bound = 16 * n as u64 * (n.max(2).ilog2() as u64 / eff + 1);
            check!(
                ms.duval_work() <= bound,
                "duval work {} > bound {bound} at n={n} tau={tau}",
                ms.duval_work()
            );
        }
        let mut checked = 0u64;
        let pair = |i: usize, j: usize| -> Result<(), String> {
            let mut answers = Vec::with_capacity(mins.len());
            for ms in &mins {
                let (ans, cands) =
                    ms.min_suffix_counted(&esa, i, j).map_err(|e| e.to_string())?;
                check!(
                    cands <= 2 * ms.tau() as usize + 2,
                    "candidate count {cands} > 2*tau+2 at tau={} i={i} j={j}",
                    ms.tau()
                );
                answers.push(ans);
            }
            check!(
                answers.windows(2).all(|w| w[0] == w[1]),
                "answers differ across tau at i={i} j={j}: {answers:?}"
            );
            Ok(())
        };
        if n <= 300 {
            for j in 1..=n {
                for i in 1..=j {
                    pair(i, j)?;
                    checked += 1;
                }
            }
        } else {
            let mut state = 0xabad_cafeu64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..20_000 {
                let i = 1 + next() % n;
                let j = i + next() % (n - i + 1);
                pair(i, j)?;
                checked += 1;
            }
        }
        Ok(checked)
    });
    let detail = result.map(|c| {
        format!(
            "{} texts, {c} queries identical across tau sweep, work bound c=16 held, in {:.1}s",
            texts.len(),
            started.elapsed().as_secs_f64()
        )
    });
    conclude("4 (tau sweep)", detail);
}

/// Criterion 5: construction events + removals <= 3n on every corpus text
/// and on large random texts; per-query primitive operations bounded by a
/// constant (16) independent of n across n in {2^10 .. 2^20}.
#[test]
fn criterion_5_max_suffix_linearity() {
    let started = Instant::now();
    let result = (|| {
        for text in corpus_300() {
            let esa = EnhancedIndex::build(Text::new(text.clone()).unwrap());
            let ms = MaxSuffixIndex::build(&esa);
            let n = text.len() as u64;
            check!(
                ms.events_scheduled() + ms.removals() <= 3 * n,
                "events {} + removals {} > 3n at n={n}",
                ms.events_scheduled(),
                ms.removals()
            );
        }
        let mut per_n = Vec::new();
        for exp in [10u32, 12, 14, 16, 18, 20] {
            let n = 1usize << exp;
            let text = random_text(exp as u64, 4, n);
            let esa = EnhancedIndex::build(Text::new(text).unwrap());
            let ms = MaxSuffixIndex::build(&esa);
            check!(
                ms.events_scheduled() + ms.removals() <= 3 * n as u64,
                "events+removals > 3n at n=2^{exp}"
            );
            let mut state = exp as u64 ^ 0x8badf00d;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            let mut max_ops = 0usize;
            for _ in 0..2000 {
                let i = 1 + next() % n;
                let j = i + next() % (n - i + 1);
                let (_, ops) = ms.max_suffix_counted(&esa, i, j).expect("valid");
                max_ops = max_ops.max(ops);
            }
            check!(max_ops <= 16, "per-query ops {max_ops} > 16 at n=2^{exp}");
            per_n.push((exp, max_ops));
        }
        Ok(format!(
            "events+removals <= 3n everywhere; per-query op ceilings {:?} (bound 16) in {:.1}s",
            per_n,
            started.elapsed().as_secs_f64()
        ))
    })();
    conclude("5 (max-suffix linear construction / O(1) query)", result);
}

/// Criterion 6: psq equals oracle borders exhaustively for all substring
/// pairs on small texts and on 10^5 random pairs per n = 128 text;
/// progression count <= 2*floor(log2 M) + 4 on every call.
#[test]
fn criterion_6_psq_contract() {
    let started = Instant::now();
    let small: Vec<Vec<u8>> = vec![
        random_text(0x600d, 2, 26),
        random_text(0x600e, 3, 24),
        common::unary(24),
        common::alternating(26),
        common::fibonacci_word(24),
        PAPER_A.to_vec(),
    ];
    let exhaustive = par_check(&small, |text| {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1).map_err(|e| e.to_string())?;
        let mut checked = 0u64;
        for a1 in 1..=n {
            for b1 in a1..=n {
                for a2 in 1..=n {
                    for b2 in a2..=n {
                        check_psq(&ix, text, (a1, b1), (a2, b2))?;
                        checked += 1;
                    }
                }
            }
        }
        Ok(checked)
    });

    let sampled = exhaustive.and_then(|exh| {
        let big: Vec<Vec<u8>> = vec![
            random_text(0x128a, 2, 128),
            random_text(0x128b, 4, 128),
            random_text(0x128c, 26, 128),
            common::unary(128),
            common::alternating(128),
            common::fibonacci_word(128),
            common::thue_morse(128),
        ];
        let sampled = par_check(&big, |text| {
            let n = text.len();
            let ix = SubstringIndex::build(text.clone(), 1).map_err(|e| e.to_string())?;
            let mut state = n as u64 ^ 0x9e3779b97f4a7c15;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for _ in 0..100_000 {
                let a1 = 1 + next() % n;
                let b1 = a1 + next() % (n - a1 + 1);
                let a2 = 1 + next() % n;
                let b2 = a2 + next() % (n - a2 + 1);
                check_psq(&ix, text, (a1, b1), (a2, b2))?;
            }
            Ok(100_000)
        })?;
        Ok(exh + sampled)
    });

    let detail = sampled.map(|c| {
        format!(
            "{c} pairs exact vs oracle borders, progression bound held, in {:.1}s",
            started.elapsed().as_secs_f64()
        )
    });
    conclude("6 (prefix-suffix query contract)", detail);
}

fn check_psq(
    ix: &SubstringIndex,
    text: &[u8],
    s: (usize, usize),
    sp: (usize, usize),
) -> Result<(), String> {
    let progs = ix.psq(s, sp).map_err(|e| e.to_string())?;
    let m = (s.1 - s.0 + 1).min(sp.1 - sp.0 + 1);
    check!(
        progs.len() <= 2 * m.ilog2() as usize + 4,
        "progression count {} > 2*floor(log2 {m})+4 for S={s:?} S'={sp:?}",
        progs.len()
    );
    for w in progs.windows(2) {
        check!(
            w[0].largest() < w[1].smallest,
            "progressions not increasing/disjoint for S={s:?} S'={sp:?}"
        );
    }
    let flat: Vec<usize> = progs.iter().flat_map(|p| p.iter().collect::<Vec<_>>()).collect();
    let want = oracle::oracle_borders(&text[s.0 - 1..s.1], &text[sp.0 - 1..sp.1]);
    check!(
        flat == want,
        "psq S={s:?} S'={sp:?}: {flat:?} != oracle {want:?}"
    );
    Ok(())
}

/// Criterion 7: select(i,j,1) == min_suffix(i,j) and
/// select(i,j,j-i+1) == max_suffix(i,j) for all (i, j) on the corpus.
#[test]
fn criterion_7_cross_consistency() {
    let texts = corpus_300();
    let started = Instant::now();
    let result = par_check(&texts, |text| {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1).map_err(|e| e.to_string())?;
        let mut checked = 0u64;
        for j in 1..=n {
            for i in 1..=j {
                let lo = ix.select(i, j, 1).map_err(|e| e.to_string())?;
                let min = ix.min_suffix(i, j).map_err(|e| e.to_string())?;
                check!(lo == min, "select k=1 {lo:?} != min_suffix {min:?} at i={i} j={j}");
                let hi = ix.select(i, j, j - i + 1).map_err(|e| e.to_string())?;
                let max = ix.max_suffix(i, j).map_err(|e| e.to_string())?;
                check!(hi == max, "select k=len {hi:?} != max_suffix {max:?} at i={i} j={j}");
                checked += 2;
            }
        }
        Ok(checked)
    });
    let detail = result.map(|c| {
        format!(
            "{} texts, {c} endpoint selections consistent in {:.1}s",
            texts.len(),
            started.elapsed().as_secs_f64()
        )
    });
    conclude("7 (cross-consistency)", detail);
}

/// Criterion 8: NotLarger(T[i..j], T[SA[r]..]) is nondecreasing in r for
/// all (i, j) on texts with n <= 64.
#[test]
fn criterion_8_not_larger_monotonicity() {
    let started = Instant::now();
    let mut texts: Vec<Vec<u8>> = vec![
        random_text(0x64a, 2, 64),
        random_text(0x64b, 3, 64),
        random_text(0x64c, 4, 64),
        random_text(0x64d, 26, 64),
        common::unary(64),
        common::alternating(64),
        common::fibonacci_word(64),
        common::thue_morse(64),
    ];
    texts.push(PAPER_A.to_vec());
    texts.push(PAPER_B.to_vec());
    let result = par_check(&texts, |text| {
        let n = text.len();
        let ix = SubstringIndex::build(text.clone(), 1).map_err(|e| e.to_string())?;
        let mut checked = 0u64;
        for i in 1..=n {
            for j in i..=n {
                let mut prev = 0usize;
                for r in 1..=n {
                    let l = ix.enhanced().sa_at(r).map_err(|e| e.to_string())?;
                    let c = ix.not_larger(i, j, l).map_err(|e| e.to_string())?;
                    check!(
                        c >= prev,
                        "NotLarger decreased at rank {r}: {c} < {prev} (i={i} j={j})"
                    );
                    prev = c;
                    checked += 1;
                }
            }
        }
        Ok(checked)
    });
    let detail = result.map(|c| {
        format!(
            "{} texts, {c} counts nondecreasing in rank in {:.1}s",
            texts.len(),
            started.elapsed().as_secs_f64()
        )
    });
    conclude("8 (NotLarger monotonicity)", detail);
}

/// Criterion 9: construction at n = 2^20 completes within 30 s; select
/// latency growth across n in {2^14, 2^17, 2^20} is reported with a fitted
/// polylog exponent (informational, non-blocking).
#[test]
fn criterion_9_scaling_smoke() {
    let result = (|| {
        let mut medians = Vec::new();
        let mut build_secs = 0.0f64;
        for &exp in &[14u32, 17, 20] {
            let n = 1usize << exp;
            let text = random_text(exp as u64 ^ 0x5ca1e, 4, n);
            let t0 = Instant::now();
            let ix = SubstringIndex::build(text, 1).map_err(|e| e.to_string())?;
            let build_ms = t0.elapsed().as_millis();
            if exp == 20 {
                build_secs = build_ms as f64 / 1e3;
                check!(
                    build_ms < 30_000,
                    "n=2^20 construction took {build_secs:.1}s, budget 30s"
                );
            }
            let mut state = exp as u64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            let mut lat: Vec<f64> = Vec::with_capacity(2000);
            for _ in 0..2000 {
                let i = 1 + next() % n;
                let j = i + next() % (n - i + 1);
                let k = 1 + next() % (j - i + 1);
                let t = Instant::now();
                std::hint::black_box(ix.select(i, j, k).map_err(|e| e.to_string())?);
                lat.push(t.elapsed().as_secs_f64() * 1e6);
            }
            lat.sort_by(|a, b| a.partial_cmp(b).unwrap());
            medians.push((exp, lat[lat.len() / 2]));
        }
        // Fit latency ~ c * (log2 n)^beta on the medians (informational).
        let (x1, y1) = (medians[0].0 as f64, medians[0].1);
        let (x3, y3) = (medians[2].0 as f64, medians[2].1);
        let beta = (y3 / y1).ln() / (x3 / x1).ln();
        println!(
            "criterion 9: INFO - select medians {:?} us, fitted polylog exponent {:.2} (target <= 3, non-blocking)",
            medians, beta
        );
        Ok(format!(
            "n=2^20 construction {build_secs:.1}s (< 30s); select medians {medians:?} us, polylog exponent {beta:.2}"
        ))
    })();
    conclude("9 (scaling smoke test)", result);
}
