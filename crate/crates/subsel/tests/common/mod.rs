//! Shared corpus generation and a small work-stealing parallel runner for
//! the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

pub fn random_text(seed: u64, sigma: u32, len: usize) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect()
}

/// Prefix of the infinite Fibonacci word.
pub fn fibonacci_word(len: usize) -> Vec<u8> {
    let mut w: Vec<u8> = vec![b'a'];
    let mut prev: Vec<u8> = vec![b'a', b'b'];
    // w, prev alternate roles: next = cur + prev
    std::mem::swap(&mut w, &mut prev);
    while w.len() < len {
        let mut next = w.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut w, next);
    }
    w.truncate(len);
    w
}

/// Prefix of the Thue-Morse word.
pub fn thue_morse(len: usize) -> Vec<u8> {
    (0..len).map(|i| b'a' + (i.count_ones() & 1) as u8).collect()
}

pub fn unary(len: usize) -> Vec<u8> {
    vec![b'a'; len]
}

pub fn alternating(len: usize) -> Vec<u8> {
    (0..len).map(|i| b'a' + (i & 1) as u8).collect()
}

pub const PAPER_A: &[u8] = b"dcccabab";
pub const PAPER_B: &[u8] = b"dcccababb";

/// Structured family members with n capped at `max_n`.
pub fn family_texts(max_n: usize) -> Vec<Vec<u8>> {
    vec![
        fibonacci_word(max_n),
        thue_morse(max_n),
        unary(max_n),
        alternating(max_n),
        PAPER_A.to_vec(),
        PAPER_B.to_vec(),
    ]
}

/// Random texts over alphabets {2, 3, 4, 26}: `per_alphabet` texts each,
/// lengths cycling through `lengths`, deterministic seeds.
pub fn random_corpus(lengths: &[usize], per_alphabet: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for (ai, &sigma) in [2u32, 3, 4, 26].iter().enumerate() {
        for t in 0..per_alphabet {
            let len = lengths[t % lengths.len()];
            out.push(random_text((ai as u64) << 32 | t as u64, sigma, len));
        }
    }
    out
}

/// Criterion-1 corpus: >= 200 texts, n <= 300, all families present.
pub fn corpus_300() -> Vec<Vec<u8>> {
    let lengths = [5, 9, 17, 33, 64, 100, 128, 200, 256, 300];
    let mut texts = random_corpus(&lengths, 50);
    texts.extend(family_texts(300));
    assert!(texts.len() >= 200);
    texts
}

/// Criterion-2 corpus: the same recipe with n <= 128.
pub fn corpus_128() -> Vec<Vec<u8>> {
    let lengths = [5, 17, 33, 64, 97, 128];
    let mut texts = random_corpus(&lengths, 6);
    texts.extend(family_texts(128));
    texts
}

/// Runs `f` over items on two worker threads (matching the harness budget),
/// accumulating a checked-item count; the first error wins.
pub fn par_check<T, F>(items: &[T], f: F) -> Result<u64, String>
where
    T: Sync,
    F: Fn(&T) -> Result<u64, String> + Sync,
{
    let next = AtomicUsize::new(0);
    let total = AtomicU64::new(0);
    let workers = std::thread::available_parallelism().map_or(2, |p| p.get()).min(items.len().max(1));
    let result = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    loop {
                        let idx = next.fetch_add(1, Ordering::Relaxed);
                        if idx >= items.len() {
                            return Ok(());
                        }
                        match f(&items[idx]) {
                            Ok(c) => {
                                total.fetch_add(c, Ordering::Relaxed);
                            }
                            Err(e) => return Err(e),
                        }
                    }
                })
            })
            .collect();
        let mut first_err = None;
        for h in handles {
            if let Err(e) = h.join().expect("worker panicked") {
                first_err.get_or_insert(e);
            }
        }
        first_err
    });
    match result {
        None => Ok(total.load(Ordering::Relaxed)),
        Some(e) => Err(e),
    }
}

/// Prints the per-criterion verdict line and fails the test on Err.
pub fn conclude(criterion: &str, result: Result<String, String>) {
    match result {
        Ok(detail) => println!("criterion {criterion}: PASS - {detail}"),
        Err(detail) => {
            println!("criterion {criterion}: FAIL - {detail}");
            panic!("criterion {criterion} failed: {detail}");
        }
    }
}

#[macro_export]
macro_rules! check {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}
