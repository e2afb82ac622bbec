use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subsel::oracle;
use subsel::text::MAX_TEXT_LEN;
use subsel::SubstringIndex;

const EXIT_IO: u8 = 2;
const EXIT_EMPTY: u8 = 3;
const EXIT_BAD_ARGS: u8 = 4;
const EXIT_CORRUPT: u8 = 5;

#[derive(Parser)]
#[command(name = "subsel", version, about = "Substring suffix query tool")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index file from raw text bytes.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        tau: u32,
        #[arg(long)]
        output: PathBuf,
    },
    /// Run one query: minsuf|maxsuf|select|lyndon|psq with 1-based bounds.
    Query {
        #[arg(long)]
        index: PathBuf,
        /// e.g. `minsuf 1 6`, `select 1 6 2`, `psq 2 6 1 6`
        #[arg(num_args = 1..)]
        op: Vec<String>,
    },
    /// Replay a file of queries, one `op i j [k]` per line, streaming TSV.
    Batch {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        ops: PathBuf,
    },
    /// Cross-check all query types against brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 64)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
        /// Comma-separated alphabet sizes.
        #[arg(long, default_value = "2,3,4,26")]
        alphabets: String,
    },
    /// Latency report for random queries against an index.
    Bench {
        #[arg(long)]
        index: PathBuf,
        #[arg(long, default_value_t = 10000)]
        queries: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("subsel: {msg}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<(), (u8, String)>;

fn run(cli: Cli) -> CmdResult {
    match cli.cmd {
        Cmd::Build { input, tau, output } => cmd_build(input, tau, output),
        Cmd::Query { index, op } => cmd_query(index, op),
        Cmd::Batch { index, ops } => cmd_batch(index, ops),
        Cmd::Verify { max_n, seeds, alphabets } => cmd_verify(max_n, seeds, alphabets),
        Cmd::Bench { index, queries } => cmd_bench(index, queries),
    }
}

fn cmd_build(input: PathBuf, tau: u32, output: PathBuf) -> CmdResult {
    let mut bytes = Vec::new();
    File::open(&input)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| (EXIT_IO, format!("{}: {e}", input.display())))?;
    if bytes.is_empty() {
        return Err((EXIT_EMPTY, format!("{}: input is empty", input.display())));
    }
    if bytes.len() > MAX_TEXT_LEN {
        return Err((EXIT_EMPTY, format!("{}: input exceeds 2^31 - 1 bytes", input.display())));
    }
    let n = bytes.len();
    let started = Instant::now();
    let ix = SubstringIndex::build(bytes, tau).map_err(|e| (EXIT_IO, e.to_string()))?;
    let build_time = started.elapsed();
    if ix.tau() != tau {
        eprintln!("subsel: warning: tau {tau} clamped to {}", ix.tau());
    }
    let file = File::create(&output)
        .map_err(|e| (EXIT_IO, format!("{}: {e}", output.display())))?;
    let mut w = BufWriter::new(file);
    let bytes_written = ix
        .save(&mut w)
        .and_then(|b| {
            w.flush()?;
            Ok(b)
        })
        .map_err(|e| (EXIT_IO, format!("{}: {e}", output.display())))?;
    println!("n: {n}");
    println!("tau: {}", ix.tau());
    println!("build_time_ms: {:.3}", build_time.as_secs_f64() * 1e3);
    println!("bytes_written: {bytes_written}");
    Ok(())
}

fn load_index(path: &PathBuf) -> Result<SubstringIndex, (u8, String)> {
    let mut bytes = Vec::new();
    File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| (EXIT_IO, format!("{}: {e}", path.display())))?;
    SubstringIndex::from_bytes(&bytes)
        .map_err(|e| (EXIT_CORRUPT, format!("{}: {e}", path.display())))
}

fn cmd_query(index: PathBuf, op: Vec<String>) -> CmdResult {
    let ix = load_index(&index)?;
    let tokens: Vec<&str> = op.iter().map(|s| s.as_str()).collect();
    let lines = run_op(&ix, &tokens).map_err(|m| (EXIT_BAD_ARGS, m))?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in lines {
        writeln!(out, "{line}").map_err(|e| (EXIT_IO, e.to_string()))?;
    }
    Ok(())
}

fn cmd_batch(index: PathBuf, ops: PathBuf) -> CmdResult {
    let ix = load_index(&index)?;
    let file = File::open(&ops).map_err(|e| (EXIT_IO, format!("{}: {e}", ops.display())))?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| (EXIT_IO, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let lines = run_op(&ix, &tokens)
            .map_err(|m| (EXIT_BAD_ARGS, format!("line {}: {m}", lineno + 1)))?;
        for l in lines {
            writeln!(out, "{l}").map_err(|e| (EXIT_IO, e.to_string()))?;
        }
    }
    out.flush().map_err(|e| (EXIT_IO, e.to_string()))?;
    Ok(())
}

/// Shared operation parser/runner for `query` and `batch`.
fn run_op(ix: &SubstringIndex, tokens: &[&str]) -> Result<Vec<String>, String> {
    let usage = "expected: minsuf i j | maxsuf i j | select i j k | lyndon i j | psq i j i2 j2";
    if tokens.is_empty() {
        return Err(usage.to_string());
    }
    let arg = |t: &str| t.parse::<usize>().map_err(|_| format!("bad integer {t:?}"));
    let want = |c: usize| {
        if tokens.len() != c + 1 {
            Err(format!("{}: {usage}", tokens[0]))
        } else {
            Ok(())
        }
    };
    match tokens[0] {
        "minsuf" => {
            want(2)?;
            let (i, j) = (arg(tokens[1])?, arg(tokens[2])?);
            let (s, l) = ix.min_suffix(i, j).map_err(|e| e.to_string())?;
            Ok(vec![format!("{s}\t{l}")])
        }
        "maxsuf" => {
            want(2)?;
            let (i, j) = (arg(tokens[1])?, arg(tokens[2])?);
            let (s, l) = ix.max_suffix(i, j).map_err(|e| e.to_string())?;
            Ok(vec![format!("{s}\t{l}")])
        }
        "select" => {
            want(3)?;
            let (i, j, k) = (arg(tokens[1])?, arg(tokens[2])?, arg(tokens[3])?);
            let (s, l) = ix.select(i, j, k).map_err(|e| e.to_string())?;
            Ok(vec![format!("{s}\t{l}")])
        }
        "lyndon" => {
            want(2)?;
            let (i, j) = (arg(tokens[1])?, arg(tokens[2])?);
            let factors = ix.lyndon_decomposition(i, j).map_err(|e| e.to_string())?;
            Ok(factors
                .iter()
                .map(|f| format!("{}\t{}\t{}", f.start, f.word_len, f.exponent))
                .collect())
        }
        "psq" => {
            want(4)?;
            let s = (arg(tokens[1])?, arg(tokens[2])?);
            let sp = (arg(tokens[3])?, arg(tokens[4])?);
            let progs = ix.psq(s, sp).map_err(|e| e.to_string())?;
            Ok(progs
                .iter()
                .map(|p| format!("{}\t{}\t{}", p.smallest, p.diff, p.count))
                .collect())
        }
        other => Err(format!("unknown operation {other:?}: {usage}")),
    }
}

fn cmd_verify(max_n: usize, seeds: u64, alphabets: String) -> CmdResult {
    let sigmas: Vec<u32> = alphabets
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|_| (EXIT_BAD_ARGS, format!("bad alphabet size {s:?}"))))
        .collect::<Result<_, _>>()?;
    if max_n == 0 {
        return Err((EXIT_BAD_ARGS, "max-n must be positive".into()));
    }
    let mut texts: Vec<Vec<u8>> = vec![b"dcccabab".to_vec(), b"dcccababb".to_vec()];
    for seed in 0..seeds {
        for &sigma in &sigmas {
            let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + sigma as u64);
            for len in [max_n, max_n / 2 + 1, 7] {
                let len = len.min(max_n).max(1);
                texts.push((0..len).map(|_| b'a' + rng.gen_range(0..sigma) as u8).collect());
            }
        }
    }
    let mut checked = [0u64; 5]; // min, max, lyndon, select, psq
    for text in &texts {
        let n = text.len();
        let max_tau = if n >= 2 { n.ilog2() } else { 1 };
        for tau in [1, max_tau.max(1)] {
            let ix = SubstringIndex::build(text.clone(), tau)
                .map_err(|e| (EXIT_IO, e.to_string()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64 ^ 0x5eed);
            for j in 1..=n {
                let min_starts = oracle::oracle_min_starts_for_end(text, j);
                let max_starts = oracle::oracle_max_starts_for_end(text, j);
                let sorted = oracle::oracle_sorted_suffixes(text, 1, j);
                for i in 1..=j {
                    let fail = |what: &str| {
                        (
                            1u8,
                            format!(
                                "verify failed: {what} at i={i} j={j} tau={tau} text={:?}",
                                String::from_utf8_lossy(text)
                            ),
                        )
                    };
                    let got = ix.min_suffix(i, j).map_err(|e| (EXIT_IO, e.to_string()))?;
                    if got != (min_starts[i - 1], j - min_starts[i - 1] + 1) {
                        return Err(fail("minsuf"));
                    }
                    checked[0] += 1;
                    let got = ix.max_suffix(i, j).map_err(|e| (EXIT_IO, e.to_string()))?;
                    if got != (max_starts[i - 1], j - max_starts[i - 1] + 1) {
                        return Err(fail("maxsuf"));
                    }
                    checked[1] += 1;
                    let factors = ix
                        .lyndon_decomposition(i, j)
                        .map_err(|e| (EXIT_IO, e.to_string()))?;
                    let triples: Vec<(usize, usize, usize)> =
                        factors.iter().map(|f| (f.start, f.word_len, f.exponent)).collect();
                    if triples != oracle::oracle_lyndon(text, i, j) {
                        return Err(fail("lyndon"));
                    }
                    checked[2] += 1;
                    // sampled selection
                    let k = rng.gen_range(1..=j - i + 1);
                    let rank_k = sorted.iter().filter(|&&m| m >= i).nth(k - 1).copied().unwrap();
                    let got = ix.select(i, j, k).map_err(|e| (EXIT_IO, e.to_string()))?;
                    if got != (rank_k, j - rank_k + 1) {
                        return Err(fail("select"));
                    }
                    checked[3] += 1;
                    // sampled psq
                    let a2 = rng.gen_range(1..=n);
                    let b2 = rng.gen_range(a2..=n);
                    let progs =
                        ix.psq((i, j), (a2, b2)).map_err(|e| (EXIT_IO, e.to_string()))?;
                    let flat: Vec<usize> =
                        progs.iter().flat_map(|p| p.iter().collect::<Vec<_>>()).collect();
                    if flat != oracle::oracle_borders(&text[i - 1..j], &text[a2 - 1..b2]) {
                        return Err(fail("psq"));
                    }
                    checked[4] += 1;
                }
            }
        }
    }
    println!("texts: {}", texts.len());
    println!("minsuf_checked: {}", checked[0]);
    println!("maxsuf_checked: {}", checked[1]);
    println!("lyndon_checked: {}", checked[2]);
    println!("select_checked: {}", checked[3]);
    println!("psq_checked: {}", checked[4]);
    println!("all queries agree with oracles");
    Ok(())
}

fn percentile(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let idx = ((sorted.len() as f64 - 1.0) * p).round() as usize;
    sorted[idx]
}

fn cmd_bench(index: PathBuf, queries: usize) -> CmdResult {
    let ix = load_index(&index)?;
    let n = ix.n();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let report = |name: &str, mut lat: Vec<f64>| {
        lat.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mean: f64 = lat.iter().sum::<f64>() / lat.len().max(1) as f64;
        println!(
            "{name}: queries={} mean_us={:.3} median_us={:.3} p99_us={:.3}",
            lat.len(),
            mean,
            percentile(&lat, 0.5),
            percentile(&lat, 0.99)
        );
    };
    let mut spans = Vec::with_capacity(queries);
    for _ in 0..queries {
        let i = rng.gen_range(1..=n);
        let j = rng.gen_range(i..=n);
        spans.push((i, j));
    }
    let mut lat = Vec::with_capacity(queries);
    for &(i, j) in &spans {
        let t = Instant::now();
        std::hint::black_box(ix.min_suffix(i, j).unwrap());
        lat.push(t.elapsed().as_secs_f64() * 1e6);
    }
    report("minsuf", lat);
    let mut lat = Vec::with_capacity(queries);
    for &(i, j) in &spans {
        let t = Instant::now();
        std::hint::black_box(ix.max_suffix(i, j).unwrap());
        lat.push(t.elapsed().as_secs_f64() * 1e6);
    }
    report("maxsuf", lat);
    let mut lat = Vec::with_capacity(queries);
    let mut krng = ChaCha8Rng::seed_from_u64(43);
    for &(i, j) in &spans {
        let k = krng.gen_range(1..=j - i + 1);
        let t = Instant::now();
        std::hint::black_box(ix.select(i, j, k).unwrap());
        lat.push(t.elapsed().as_secs_f64() * 1e6);
    }
    report("select", lat);
    let mut lat = Vec::with_capacity(queries);
    for &(i, j) in &spans {
        let t = Instant::now();
        std::hint::black_box(ix.lyndon_decomposition(i, j).unwrap());
        lat.push(t.elapsed().as_secs_f64() * 1e6);
    }
    report("lyndon", lat);
    let mut lat = Vec::with_capacity(queries);
    let mut prng = ChaCha8Rng::seed_from_u64(44);
    for &(i, j) in &spans {
        let a2 = prng.gen_range(1..=n);
        let b2 = prng.gen_range(a2..=n);
        let t = Instant::now();
        std::hint::black_box(ix.psq((i, j), (a2, b2)).unwrap());
        lat.push(t.elapsed().as_secs_f64() * 1e6);
    }
    report("psq", lat);

    let bytes = ix.text().as_bytes().to_vec();
    let t = Instant::now();
    let rebuilt = SubstringIndex::build(bytes, ix.tau()).map_err(|e| (EXIT_IO, e.to_string()))?;
    let secs = t.elapsed().as_secs_f64();
    std::hint::black_box(rebuilt.n());
    println!(
        "construction: n={} time_s={:.3} throughput_mb_s={:.2}",
        n,
        secs,
        n as f64 / 1e6 / secs
    );
    Ok(())
}
