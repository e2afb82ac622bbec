//! C ABI for the `subsel` library.
//!
//! Handles are opaque pointers created by `subsel_index_build` or
//! `subsel_index_load_file` and released with `subsel_index_free`. All
//! functions return a [`SubselStatus`]; outputs are written through pointer
//! arguments only on `SUBSEL_STATUS_OK`. Positions are 1-based inclusive,
//! matching the library convention. A built index is immutable, so one
//! handle may be shared by any number of reader threads.

use std::ffi::CStr;
use std::fs::File;
use std::io::BufWriter;
use std::os::raw::c_char;

use subsel::{Error, SubstringIndex};

/// Result codes of every `subsel_*` call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SubselStatus {
    Ok = 0,
    /// A required pointer was null or an argument was malformed.
    InvalidArgument = 1,
    Io = 2,
    EmptyText = 3,
    /// Positions out of bounds, i > j, or k outside [1, j-i+1].
    BadRange = 4,
    CorruptIndex = 5,
    /// Output buffer too small; the required count has been written.
    BufferTooSmall = 6,
}

/// Opaque index handle.
pub struct SubselIndex {
    inner: SubstringIndex,
}

/// One Lyndon factor `w^exponent`; `start` is the position of the first copy.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct SubselLyndonFactor {
    pub start: u64,
    pub word_len: u64,
    pub exponent: u64,
}

/// Arithmetic progression of prefix-suffix lengths.
#[repr(C)]
#[derive(Clone, Copy)]
pub struct SubselProgression {
    pub smallest: u64,
    pub diff: u64,
    pub count: u64,
}

fn status_of(e: &Error) -> SubselStatus {
    match e {
        Error::EmptyText => SubselStatus::EmptyText,
        Error::TextTooLong(_) => SubselStatus::InvalidArgument,
        Error::BadRange { .. } | Error::BadRank { .. } => SubselStatus::BadRange,
        Error::Io(_) => SubselStatus::Io,
        Error::Corrupt(_) => SubselStatus::CorruptIndex,
    }
}

unsafe fn path_from(ptr: *const c_char) -> Option<std::path::PathBuf> {
    if ptr.is_null() {
        return None;
    }
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().ok()?;
    Some(std::path::PathBuf::from(s))
}

/// Builds an index over `text[0..len]` with trade-off parameter `tau`
/// (clamped to the valid range). Writes the new handle to `*out`.
///
/// # Safety
/// `text` must point to `len` readable bytes and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_build(
    text: *const u8,
    len: usize,
    tau: u32,
    out: *mut *mut SubselIndex,
) -> SubselStatus {
    if text.is_null() || out.is_null() {
        return SubselStatus::InvalidArgument;
    }
    let bytes = unsafe { std::slice::from_raw_parts(text, len) }.to_vec();
    match SubstringIndex::build(bytes, tau) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(SubselIndex { inner })) };
            SubselStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Loads an index file written by `subsel_index_save_file` or the CLI.
///
/// # Safety
/// `path` must be a valid NUL-terminated string and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_load_file(
    path: *const c_char,
    out: *mut *mut SubselIndex,
) -> SubselStatus {
    if out.is_null() {
        return SubselStatus::InvalidArgument;
    }
    let Some(path) = (unsafe { path_from(path) }) else {
        return SubselStatus::InvalidArgument;
    };
    let file = match File::open(&path) {
        Ok(f) => f,
        Err(_) => return SubselStatus::Io,
    };
    match SubstringIndex::load(file) {
        Ok(inner) => {
            unsafe { *out = Box::into_raw(Box::new(SubselIndex { inner })) };
            SubselStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Serializes the index to `path`.
///
/// # Safety
/// `handle` must be a live handle and `path` a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_save_file(
    handle: *const SubselIndex,
    path: *const c_char,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    let Some(path) = (unsafe { path_from(path) }) else {
        return SubselStatus::InvalidArgument;
    };
    let file = match File::create(&path) {
        Ok(f) => f,
        Err(_) => return SubselStatus::Io,
    };
    match ix.inner.save(BufWriter::new(file)) {
        Ok(_) => SubselStatus::Ok,
        Err(e) => status_of(&e),
    }
}

/// Releases a handle. A null handle is a no-op.
///
/// # Safety
/// `handle` must have been produced by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_free(handle: *mut SubselIndex) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Text length of the index, or 0 for a null handle.
///
/// # Safety
/// `handle` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_len(handle: *const SubselIndex) -> u64 {
    unsafe { handle.as_ref() }.map_or(0, |ix| ix.inner.n() as u64)
}

/// Effective trade-off parameter of the index, or 0 for a null handle.
///
/// # Safety
/// `handle` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn subsel_index_tau(handle: *const SubselIndex) -> u32 {
    unsafe { handle.as_ref() }.map_or(0, |ix| ix.inner.tau())
}

unsafe fn answer_out(
    res: subsel::Result<(usize, usize)>,
    start: *mut u64,
    len: *mut u64,
) -> SubselStatus {
    match res {
        Ok((s, l)) => {
            unsafe {
                *start = s as u64;
                *len = l as u64;
            }
            SubselStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Minimal non-empty suffix of `T[i..j]` as (start, length).
///
/// # Safety
/// `handle` must be live; `start` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn subsel_min_suffix(
    handle: *const SubselIndex,
    i: u64,
    j: u64,
    start: *mut u64,
    len: *mut u64,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if start.is_null() || len.is_null() {
        return SubselStatus::InvalidArgument;
    }
    unsafe { answer_out(ix.inner.min_suffix(i as usize, j as usize), start, len) }
}

/// Maximal suffix of `T[i..j]` as (start, length).
///
/// # Safety
/// `handle` must be live; `start` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn subsel_max_suffix(
    handle: *const SubselIndex,
    i: u64,
    j: u64,
    start: *mut u64,
    len: *mut u64,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if start.is_null() || len.is_null() {
        return SubselStatus::InvalidArgument;
    }
    unsafe { answer_out(ix.inner.max_suffix(i as usize, j as usize), start, len) }
}

/// k-th lexicographically smallest suffix of `T[i..j]`, 1 <= k <= j-i+1.
///
/// # Safety
/// `handle` must be live; `start` and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn subsel_select(
    handle: *const SubselIndex,
    i: u64,
    j: u64,
    k: u64,
    start: *mut u64,
    len: *mut u64,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if start.is_null() || len.is_null() {
        return SubselStatus::InvalidArgument;
    }
    unsafe { answer_out(ix.inner.select(i as usize, j as usize, k as usize), start, len) }
}

/// Number of suffixes of `T[i..j]` not larger than the full suffix `T[l..]`.
///
/// # Safety
/// `handle` must be live; `count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn subsel_not_larger(
    handle: *const SubselIndex,
    i: u64,
    j: u64,
    l: u64,
    count: *mut u64,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if count.is_null() {
        return SubselStatus::InvalidArgument;
    }
    match ix.inner.not_larger(i as usize, j as usize, l as usize) {
        Ok(c) => {
            unsafe { *count = c as u64 };
            SubselStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Lyndon decomposition of `T[i..j]`. Writes up to `cap` factors to `out`
/// and the total factor count to `*count`; returns `BufferTooSmall` when
/// `cap` is insufficient (the count is still written, so a second call with
/// a larger buffer can follow).
///
/// # Safety
/// `handle` must be live, `count` writable, and `out` must point to at
/// least `cap` writable elements when `cap > 0`.
#[no_mangle]
pub unsafe extern "C" fn subsel_lyndon(
    handle: *const SubselIndex,
    i: u64,
    j: u64,
    out: *mut SubselLyndonFactor,
    cap: usize,
    count: *mut usize,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if count.is_null() || (out.is_null() && cap > 0) {
        return SubselStatus::InvalidArgument;
    }
    let factors = match ix.inner.lyndon_decomposition(i as usize, j as usize) {
        Ok(f) => f,
        Err(e) => return status_of(&e),
    };
    unsafe { *count = factors.len() };
    if factors.len() > cap {
        return SubselStatus::BufferTooSmall;
    }
    for (t, f) in factors.iter().enumerate() {
        unsafe {
            *out.add(t) = SubselLyndonFactor {
                start: f.start as u64,
                word_len: f.word_len as u64,
                exponent: f.exponent as u64,
            };
        }
    }
    SubselStatus::Ok
}

/// Prefix-suffix query: lengths lambda with `T[si..si+lambda-1] ==
/// T[spj-lambda+1..spj]`, reported as increasing arithmetic progressions.
/// Buffer semantics match `subsel_lyndon`.
///
/// # Safety
/// `handle` must be live, `count` writable, and `out` must point to at
/// least `cap` writable elements when `cap > 0`.
#[no_mangle]
pub unsafe extern "C" fn subsel_psq(
    handle: *const SubselIndex,
    si: u64,
    sj: u64,
    spi: u64,
    spj: u64,
    out: *mut SubselProgression,
    cap: usize,
    count: *mut usize,
) -> SubselStatus {
    let Some(ix) = (unsafe { handle.as_ref() }) else {
        return SubselStatus::InvalidArgument;
    };
    if count.is_null() || (out.is_null() && cap > 0) {
        return SubselStatus::InvalidArgument;
    }
    let progs = match ix.inner.psq((si as usize, sj as usize), (spi as usize, spj as usize)) {
        Ok(p) => p,
        Err(e) => return status_of(&e),
    };
    unsafe { *count = progs.len() };
    if progs.len() > cap {
        return SubselStatus::BufferTooSmall;
    }
    for (t, p) in progs.iter().enumerate() {
        unsafe {
            *out.add(t) = SubselProgression {
                smallest: p.smallest as u64,
                diff: p.diff as u64,
                count: p.count as u64,
            };
        }
    }
    SubselStatus::Ok
}
