//! C ABI for fieldsim.
//!
//! Results are returned through opaque handles that the caller releases with
//! the matching `fs_*_free` function. Every fallible call returns an
//! [`FsStatus`]; on anything but `FS_STATUS_OK` the out-parameters are left
//! untouched. Strings are NUL-terminated UTF-8.

#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fieldsim::corpusgen::{generate, WeightTable};
use fieldsim::ranking::{dedup_pairs, rank, DuplicatePair, RankedCandidate};
use fieldsim::{levenshtein, similarity, Field, Mode, SimilarityResult};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidMode = 3,
    InvalidArgument = 4,
    OutOfRange = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Values accepted for the `mode` parameters.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub enum FsMode {
    Mmcwpa = 0,
    McwpaLegacy = 1,
    Levenshtein = 2,
}

fn mode_from(raw: u32) -> Result<Mode, FsStatus> {
    match raw {
        x if x == FsMode::Mmcwpa as u32 => Ok(Mode::Mmcwpa),
        x if x == FsMode::McwpaLegacy as u32 => Ok(Mode::McwpaLegacy),
        x if x == FsMode::Levenshtein as u32 => Ok(Mode::Levenshtein),
        _ => Err(FsStatus::InvalidMode),
    }
}

/// One window match. Positions index the subfield lists as they stood when
/// the match was made.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FsWindowMatch {
    pub pattern_length: usize,
    pub x_subfield_index: usize,
    pub x_offset: usize,
    pub y_subfield_index: usize,
    pub y_offset: usize,
    pub ssnc_contribution: u64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FsRankedCandidate {
    pub index: usize,
    pub rank: usize,
    pub score: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct FsPair {
    pub i: usize,
    pub j: usize,
    pub score: f64,
}

/// Opaque similarity result.
pub struct FsResult(SimilarityResult);

/// Opaque ranking.
pub struct FsRanking(Vec<RankedCandidate>);

/// Opaque list of near-duplicate pairs.
pub struct FsPairs(Vec<DuplicatePair>);

fn guard(body: impl FnOnce() -> Result<(), FsStatus>) -> FsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FsStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => FsStatus::Panic,
    }
}

unsafe fn text<'a>(ptr: *const c_char) -> Result<&'a str, FsStatus> {
    if ptr.is_null() {
        return Err(FsStatus::NullPointer);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| FsStatus::InvalidUtf8)
}

unsafe fn texts<'a>(ptrs: *const *const c_char, count: usize) -> Result<Vec<&'a str>, FsStatus> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if ptrs.is_null() {
        return Err(FsStatus::NullPointer);
    }
    std::slice::from_raw_parts(ptrs, count)
        .iter()
        .map(|&p| text(p))
        .collect()
}

fn out_ptr<T>(out: *mut T) -> Result<*mut T, FsStatus> {
    if out.is_null() {
        Err(FsStatus::NullPointer)
    } else {
        Ok(out)
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fs_status_message(status: u32) -> *const c_char {
    let message: &'static CStr = match status {
        0 => c"ok",
        1 => c"null pointer argument",
        2 => c"string is not valid UTF-8",
        3 => c"unknown mode",
        4 => c"invalid argument",
        5 => c"index out of range",
        6 => c"buffer too small",
        7 => c"internal error",
        _ => c"unknown status",
    };
    message.as_ptr()
}

#[no_mangle]
pub extern "C" fn fs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Scores `x` against `y`. On success `*out` owns a new handle.
#[no_mangle]
pub unsafe extern "C" fn fs_similarity(
    x: *const c_char,
    y: *const c_char,
    mode: u32,
    out: *mut *mut FsResult,
) -> FsStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let (x, y) = (text(x)?, text(y)?);
        let mode = mode_from(mode)?;
        let result = similarity(&Field::new(x), &Field::new(y), mode);
        *out = Box::into_raw(Box::new(FsResult(result)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_result_free(result: *mut FsResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Score in `[0, 1]`; NaN for a null handle.
#[no_mangle]
pub unsafe extern "C" fn fs_result_score(result: *const FsResult) -> f64 {
    result.as_ref().map_or(f64::NAN, |r| r.0.score.value())
}

/// Score truncated to four decimals, as an integer in `0..=10000`.
#[no_mangle]
pub unsafe extern "C" fn fs_result_score_ten_thousandths(result: *const FsResult) -> u32 {
    result.as_ref().map_or(0, |r| r.0.score.ten_thousandths())
}

/// Writes the four-decimal score (for example `0.6731`) into `buf`,
/// NUL-terminated. Needs at least 7 bytes.
#[no_mangle]
pub unsafe extern "C" fn fs_result_format_score(
    result: *const FsResult,
    buf: *mut c_char,
    len: usize,
) -> FsStatus {
    guard(|| {
        let r = result.as_ref().ok_or(FsStatus::NullPointer)?;
        let buf = out_ptr(buf)?;
        let shown = r.0.score.to_string();
        if shown.len() + 1 > len {
            return Err(FsStatus::BufferTooSmall);
        }
        ptr::copy_nonoverlapping(shown.as_ptr(), buf.cast::<u8>(), shown.len());
        *buf.add(shown.len()) = 0;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_result_ssnc(result: *const FsResult) -> u64 {
    result.as_ref().map_or(0, |r| r.0.ssnc)
}

/// Unit counts of the two fields.
#[no_mangle]
pub unsafe extern "C" fn fs_result_lengths(
    result: *const FsResult,
    n: *mut usize,
    m: *mut usize,
) -> FsStatus {
    guard(|| {
        let r = result.as_ref().ok_or(FsStatus::NullPointer)?;
        *out_ptr(n)? = r.0.n;
        *out_ptr(m)? = r.0.m;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_result_trace_len(result: *const FsResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.trace.len())
}

#[no_mangle]
pub unsafe extern "C" fn fs_result_trace_get(
    result: *const FsResult,
    index: usize,
    out: *mut FsWindowMatch,
) -> FsStatus {
    guard(|| {
        let r = result.as_ref().ok_or(FsStatus::NullPointer)?;
        let out = out_ptr(out)?;
        let m = r.0.trace.get(index).ok_or(FsStatus::OutOfRange)?;
        *out = FsWindowMatch {
            pattern_length: m.pattern_length,
            x_subfield_index: m.x_subfield_index,
            x_offset: m.x_offset,
            y_subfield_index: m.y_subfield_index,
            y_offset: m.y_offset,
            ssnc_contribution: m.ssnc_contribution,
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_levenshtein(
    x: *const c_char,
    y: *const c_char,
    distance: *mut usize,
    ratio: *mut f64,
) -> FsStatus {
    guard(|| {
        let (distance, ratio) = (out_ptr(distance)?, out_ptr(ratio)?);
        let result = levenshtein(&Field::new(text(x)?), &Field::new(text(y)?));
        *distance = result.distance;
        *ratio = result.ratio.value();
        Ok(())
    })
}

/// Ranks `count` candidates against `query`. `top_k == 0` keeps all.
#[no_mangle]
pub unsafe extern "C" fn fs_rank(
    query: *const c_char,
    candidates: *const *const c_char,
    count: usize,
    mode: u32,
    top_k: usize,
    out: *mut *mut FsRanking,
) -> FsStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let query = text(query)?;
        let candidates = texts(candidates, count)?;
        let mode = mode_from(mode)?;
        let top = (top_k > 0).then_some(top_k);
        let ranked = rank(query, &candidates, mode, top).map_err(|_| FsStatus::InvalidArgument)?;
        *out = Box::into_raw(Box::new(FsRanking(ranked)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_ranking_len(ranking: *const FsRanking) -> usize {
    ranking.as_ref().map_or(0, |r| r.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn fs_ranking_get(
    ranking: *const FsRanking,
    position: usize,
    out: *mut FsRankedCandidate,
) -> FsStatus {
    guard(|| {
        let r = ranking.as_ref().ok_or(FsStatus::NullPointer)?;
        let out = out_ptr(out)?;
        let c = r.0.get(position).ok_or(FsStatus::OutOfRange)?;
        *out = FsRankedCandidate {
            index: c.index,
            rank: c.rank,
            score: c.score.value(),
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_ranking_free(ranking: *mut FsRanking) {
    if !ranking.is_null() {
        drop(Box::from_raw(ranking));
    }
}

/// Pairs `i < j` scoring at least `threshold` (in `[0, 1]`).
#[no_mangle]
pub unsafe extern "C" fn fs_dedup_pairs(
    records: *const *const c_char,
    count: usize,
    mode: u32,
    threshold: f64,
    out: *mut *mut FsPairs,
) -> FsStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let records = texts(records, count)?;
        let mode = mode_from(mode)?;
        let pairs =
            dedup_pairs(&records, mode, threshold).map_err(|_| FsStatus::InvalidArgument)?;
        *out = Box::into_raw(Box::new(FsPairs(pairs)));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_pairs_len(pairs: *const FsPairs) -> usize {
    pairs.as_ref().map_or(0, |p| p.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn fs_pairs_get(
    pairs: *const FsPairs,
    position: usize,
    out: *mut FsPair,
) -> FsStatus {
    guard(|| {
        let p = pairs.as_ref().ok_or(FsStatus::NullPointer)?;
        let out = out_ptr(out)?;
        let pair = p.0.get(position).ok_or(FsStatus::OutOfRange)?;
        *out = FsPair {
            i: pair.i,
            j: pair.j,
            score: pair.score.value(),
        };
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_pairs_free(pairs: *mut FsPairs) {
    if !pairs.is_null() {
        drop(Box::from_raw(pairs));
    }
}

/// Generates one string of `length` units from a weighted token table.
/// `*out` receives a string to release with [`fs_string_free`].
#[no_mangle]
pub unsafe extern "C" fn fs_generate(
    tokens: *const *const c_char,
    weights: *const f64,
    count: usize,
    length: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> FsStatus {
    guard(|| {
        let out = out_ptr(out)?;
        let tokens = texts(tokens, count)?;
        if count > 0 && weights.is_null() {
            return Err(FsStatus::NullPointer);
        }
        let weights: &[f64] = if count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(weights, count)
        };
        let table = WeightTable::new(tokens.into_iter().zip(weights.iter().copied()))
            .map_err(|_| FsStatus::InvalidArgument)?;
        let generated =
            CString::new(generate(&table, length, seed)).map_err(|_| FsStatus::InvalidArgument)?;
        *out = generated.into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn fs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
