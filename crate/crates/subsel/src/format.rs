//! Binary index file format.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! magic      8 bytes  "SUBSEL01"
//! version    u32      currently 1
//! n          u64      text length
//! tau        u32      effective trade-off parameter
//! sections   u32      section count (10)
//! table      sections * { offset u64, length u64, crc32 u32 }
//! payload    section bytes, in table order
//! ```
//!
//! Sections in order: text bytes; SA, ISA, LCP (n u32 each); the same three
//! for the reversed text; wavelet payload (bit words plus rank superblocks);
//! minimal-suffix words (n u64); maximal-suffix snapshots (2n u64:
//! descriptors then active words). Range-minimum tables are rebuilt on load.
//! The loader validates magic, version, n bounds and a CRC32 per section.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::esa::{EnhancedIndex, Esa};
use crate::index::SubstringIndex;
use crate::max_suffix::MaxSuffixIndex;
use crate::min_suffix::MinSuffixIndex;
use crate::text::{Text, MAX_TEXT_LEN};
use crate::wavelet::RankGrid;

const MAGIC: &[u8; 8] = b"SUBSEL01";
const VERSION: u32 = 1;
const SECTION_COUNT: usize = 10;

fn corrupt(msg: impl Into<String>) -> Error {
    Error::Corrupt(msg.into())
}

fn push_u32s(out: &mut Vec<u8>, vals: &[u32]) {
    out.reserve(vals.len() * 4);
    for &v in vals {
        out.extend_from_slice(&v.to_le_bytes());
    }
}

fn push_u64s(out: &mut Vec<u8>, vals: &[u64]) {
    out.reserve(vals.len() * 8);
    for &v in vals {
        out.extend_from_slice(&v.to_le_bytes());
    }
}

fn parse_u32s(buf: &[u8], expect: usize, what: &str) -> Result<Vec<u32>> {
    if buf.len() != expect * 4 {
        return Err(corrupt(format!("{what}: bad section size")));
    }
    Ok(buf.chunks_exact(4).map(|c| u32::from_le_bytes(c.try_into().unwrap())).collect())
}

fn parse_u64s(buf: &[u8], expect: usize, what: &str) -> Result<Vec<u64>> {
    if buf.len() != expect * 8 {
        return Err(corrupt(format!("{what}: bad section size")));
    }
    Ok(buf.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect())
}

/// 1-based array (slot 0 unused) serialized as its n live entries.
fn one_based(vals: Vec<u32>) -> Vec<u32> {
    let mut out = Vec::with_capacity(vals.len() + 1);
    out.push(0);
    out.extend(vals);
    out
}

impl SubstringIndex {
    /// Serializes the index; the byte output is deterministic.
    pub fn save<W: Write>(&self, mut w: W) -> Result<u64> {
        let esa = self.enhanced();
        let n = self.n();
        let mut sections: Vec<Vec<u8>> = Vec::with_capacity(SECTION_COUNT);
        sections.push(esa.text().as_bytes().to_vec());
        for half in [&esa.fwd, &esa.rev] {
            for arr in [&half.sa, &half.isa, &half.lcp] {
                let mut buf = Vec::new();
                push_u32s(&mut buf, &arr[1..]);
                sections.push(buf);
            }
        }
        let mut wl = Vec::new();
        self.rank_grid().serialize_into(&mut wl);
        sections.push(wl);
        let mut mn = Vec::new();
        push_u64s(&mut mn, &self.min_index().words()[1..]);
        sections.push(mn);
        let mut mx = Vec::new();
        push_u64s(&mut mx, &self.max_index().descriptors()[1..]);
        push_u64s(&mut mx, &self.max_index().active_words()[1..]);
        sections.push(mx);
        debug_assert_eq!(sections.len(), SECTION_COUNT);

        let mut header = Vec::new();
        header.extend_from_slice(MAGIC);
        header.extend_from_slice(&VERSION.to_le_bytes());
        header.extend_from_slice(&(n as u64).to_le_bytes());
        header.extend_from_slice(&self.tau().to_le_bytes());
        header.extend_from_slice(&(SECTION_COUNT as u32).to_le_bytes());
        let table_at = header.len();
        let mut offset = (table_at + SECTION_COUNT * 20) as u64;
        for s in &sections {
            header.extend_from_slice(&offset.to_le_bytes());
            header.extend_from_slice(&(s.len() as u64).to_le_bytes());
            header.extend_from_slice(&crc32fast::hash(s).to_le_bytes());
            offset += s.len() as u64;
        }
        w.write_all(&header)?;
        let mut written = header.len() as u64;
        for s in &sections {
            w.write_all(s)?;
            written += s.len() as u64;
        }
        Ok(written)
    }

    /// Loads an index saved by [`SubstringIndex::save`], validating magic,
    /// version, length bounds and per-section checksums.
    pub fn load<R: Read>(mut r: R) -> Result<SubstringIndex> {
        let mut data = Vec::new();
        r.read_to_end(&mut data)?;
        Self::from_bytes(&data)
    }

    pub fn from_bytes(data: &[u8]) -> Result<SubstringIndex> {
        let fixed = 8 + 4 + 8 + 4 + 4;
        if data.len() < fixed {
            return Err(corrupt("file shorter than header"));
        }
        if &data[..8] != MAGIC {
            return Err(corrupt("bad magic"));
        }
        let version = u32::from_le_bytes(data[8..12].try_into().unwrap());
        if version != VERSION {
            return Err(corrupt(format!("unsupported version {version}")));
        }
        let n = u64::from_le_bytes(data[12..20].try_into().unwrap()) as usize;
        if n == 0 || n > MAX_TEXT_LEN {
            return Err(corrupt(format!("text length {n} out of bounds")));
        }
        let tau = u32::from_le_bytes(data[20..24].try_into().unwrap());
        let nsec = u32::from_le_bytes(data[24..28].try_into().unwrap()) as usize;
        if nsec != SECTION_COUNT {
            return Err(corrupt(format!("expected {SECTION_COUNT} sections, found {nsec}")));
        }
        if data.len() < fixed + 20 * SECTION_COUNT {
            return Err(corrupt("file shorter than section table"));
        }
        let mut sections: Vec<&[u8]> = Vec::with_capacity(SECTION_COUNT);
        for s in 0..SECTION_COUNT {
            let at = fixed + 20 * s;
            let off = u64::from_le_bytes(data[at..at + 8].try_into().unwrap()) as usize;
            let len = u64::from_le_bytes(data[at + 8..at + 16].try_into().unwrap()) as usize;
            let crc = u32::from_le_bytes(data[at + 16..at + 20].try_into().unwrap());
            let end = off.checked_add(len).ok_or_else(|| corrupt("section overflow"))?;
            if end > data.len() {
                return Err(corrupt(format!("section {s} exceeds file size")));
            }
            let payload = &data[off..end];
            if crc32fast::hash(payload) != crc {
                return Err(corrupt(format!("section {s}: checksum mismatch")));
            }
            sections.push(payload);
        }

        if sections[0].len() != n {
            return Err(corrupt("text: bad section size"));
        }
        let text = Text::new(sections[0].to_vec()).map_err(|_| corrupt("empty text"))?;
        let mut halves = Vec::with_capacity(2);
        for h in 0..2 {
            let sa = one_based(parse_u32s(sections[1 + 3 * h], n, "sa")?);
            let isa = one_based(parse_u32s(sections[2 + 3 * h], n, "isa")?);
            let lcp = one_based(parse_u32s(sections[3 + 3 * h], n, "lcp")?);
            validate_permutation(&sa, &isa, n)?;
            halves.push(Esa::from_arrays(sa, isa, lcp));
        }
        let rev = halves.pop().unwrap();
        let fwd = halves.pop().unwrap();
        let grid = RankGrid::deserialize_from(sections[7], n)?;
        let min_words = one_based_u64(parse_u64s(sections[8], n, "min-suffix words")?);
        let maxsec = parse_u64s(sections[9], 2 * n, "max-suffix snapshots")?;
        let descriptors = one_based_u64(maxsec[..n].to_vec());
        let active = one_based_u64(maxsec[n..].to_vec());

        let esa = EnhancedIndex::from_parts(text, fwd, rev);
        let min = MinSuffixIndex::from_parts(tau, min_words);
        let max = MaxSuffixIndex::from_parts(descriptors, active);
        Ok(SubstringIndex::from_parts(esa, grid, min, max))
    }
}

fn one_based_u64(vals: Vec<u64>) -> Vec<u64> {
    let mut out = Vec::with_capacity(vals.len() + 1);
    out.push(0);
    out.extend(vals);
    out
}

fn validate_permutation(sa: &[u32], isa: &[u32], n: usize) -> Result<()> {
    for (r, &p) in sa.iter().enumerate().skip(1) {
        let p = p as usize;
        if p == 0 || p > n || isa[p] as usize != r {
            return Err(corrupt("sa/isa are not inverse permutations"));
        }
    }
    Ok(())
}
