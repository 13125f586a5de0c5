//! C ABI for the rank1 library.
//!
//! Handles are opaque pointers created and freed here; every fallible call
//! returns an [`R1Status`] and writes its result through an out pointer.
//! Strings returned through `char **` out parameters are NUL-terminated,
//! owned by this library, and must be released with [`r1_string_free`].
//! Structured results (decisions, measure reports, conditions) cross the
//! boundary as JSON, matching the `r1 --json` payloads.
//!
//! The generated header lives at `include/rank1.h`.

use std::ffi::{c_char, CStr, CString};

use rank1::engine::{check_measure_conditions, ParamSpec};
use rank1::error::Error;
use rank1::inverse::{decide_self_inverse, invert_params, verify_witness_certificate};
use rank1::measure::normalizer;
use rank1::spacer::{
    compatibility, perp, star, verify_reversal_incompatibility, CompatibilityResult,
    MiddleConstraint, SpacerTuple,
};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R1Status {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed input: empty tuple, bad cut count, unparsable JSON, or an
    /// undersized buffer.
    InvalidArgument = 3,
    LengthMismatch = 4,
    PremiseViolation = 5,
    BeyondPrefix = 6,
    BudgetExceeded = 7,
    LevelOrder = 8,
    PatternTooLong = 9,
    TailCollapse = 10,
    UnspecifiedTail = 11,
    CanonicalConditionFailed = 12,
    NoRecurringAsymmetry = 13,
    IncompatibleRepresentations = 14,
    VerificationFailed = 15,
}

fn status_of(error: &Error) -> R1Status {
    match error {
        Error::EmptyTuple
        | Error::InvalidCutCount(_)
        | Error::LevelSpecMismatch { .. }
        | Error::InvalidParams(_)
        | Error::Io(_) => R1Status::InvalidArgument,
        Error::LengthMismatch { .. } => R1Status::LengthMismatch,
        Error::PremiseViolation(_) => R1Status::PremiseViolation,
        Error::BeyondPrefix { .. } => R1Status::BeyondPrefix,
        Error::BudgetExceeded { .. } => R1Status::BudgetExceeded,
        Error::LevelOrder { .. } => R1Status::LevelOrder,
        Error::PatternTooLong { .. } => R1Status::PatternTooLong,
        Error::TailCollapse { .. } => R1Status::TailCollapse,
        Error::UnspecifiedTail => R1Status::UnspecifiedTail,
        Error::CanonicalConditionFailed { .. } => R1Status::CanonicalConditionFailed,
        Error::NoRecurringAsymmetry => R1Status::NoRecurringAsymmetry,
        Error::IncompatibleRepresentations => R1Status::IncompatibleRepresentations,
        Error::VerificationFailed(_) => R1Status::VerificationFailed,
    }
}

/// Stable name of a status code, as a pointer to a static string.
#[no_mangle]
pub extern "C" fn r1_status_name(status: R1Status) -> *const c_char {
    let name: &'static CStr = match status {
        R1Status::Ok => c"Ok",
        R1Status::NullArgument => c"NullArgument",
        R1Status::InvalidUtf8 => c"InvalidUtf8",
        R1Status::InvalidArgument => c"InvalidArgument",
        R1Status::LengthMismatch => c"LengthMismatch",
        R1Status::PremiseViolation => c"PremiseViolation",
        R1Status::BeyondPrefix => c"BeyondPrefix",
        R1Status::BudgetExceeded => c"BudgetExceeded",
        R1Status::LevelOrder => c"LevelOrder",
        R1Status::PatternTooLong => c"PatternTooLong",
        R1Status::TailCollapse => c"TailCollapse",
        R1Status::UnspecifiedTail => c"UnspecifiedTail",
        R1Status::CanonicalConditionFailed => c"CanonicalConditionFailed",
        R1Status::NoRecurringAsymmetry => c"NoRecurringAsymmetry",
        R1Status::IncompatibleRepresentations => c"IncompatibleRepresentations",
        R1Status::VerificationFailed => c"VerificationFailed",
    };
    name.as_ptr()
}

/// Opaque spacer tuple handle.
pub struct R1SpacerTuple(SpacerTuple);

/// Opaque parameter sequence handle.
pub struct R1ParamSpec(ParamSpec);

/// Window-compatibility verdict in C layout. When `compatible` is false
/// the other fields are zero; `middle_forced` tells whether `middle_value`
/// is meaningful.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct R1Compatibility {
    pub compatible: bool,
    pub offset: u64,
    pub middle_forced: bool,
    pub middle_value: u64,
}

unsafe fn tuple_ref<'a>(ptr: *const R1SpacerTuple) -> Option<&'a SpacerTuple> {
    ptr.as_ref().map(|t| &t.0)
}

unsafe fn params_ref<'a>(ptr: *const R1ParamSpec) -> Option<&'a ParamSpec> {
    ptr.as_ref().map(|p| &p.0)
}

fn give_tuple(out: *mut *mut R1SpacerTuple, tuple: SpacerTuple) -> R1Status {
    unsafe { *out = Box::into_raw(Box::new(R1SpacerTuple(tuple))) };
    R1Status::Ok
}

fn give_params(out: *mut *mut R1ParamSpec, params: ParamSpec) -> R1Status {
    unsafe { *out = Box::into_raw(Box::new(R1ParamSpec(params))) };
    R1Status::Ok
}

fn give_string(out: *mut *mut c_char, value: String) -> R1Status {
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            R1Status::Ok
        }
        Err(_) => R1Status::InvalidArgument,
    }
}

/// Builds a spacer tuple from `len` entries. The tuple must have at least
/// one entry.
///
/// # Safety
/// `values` must point to `len` readable `uint64_t`s and `out` must be a
/// valid pointer. The returned handle is released with [`r1_tuple_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_new(
    values: *const u64,
    len: usize,
    out: *mut *mut R1SpacerTuple,
) -> R1Status {
    if values.is_null() || out.is_null() {
        return R1Status::NullArgument;
    }
    let slice = std::slice::from_raw_parts(values, len);
    match SpacerTuple::new(slice.to_vec()) {
        Ok(tuple) => give_tuple(out, tuple),
        Err(e) => status_of(&e),
    }
}

/// Releases a tuple handle. Null is ignored.
///
/// # Safety
/// `tuple` must be a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_free(tuple: *mut R1SpacerTuple) {
    if !tuple.is_null() {
        drop(Box::from_raw(tuple));
    }
}

/// Number of entries, or 0 for a null handle.
///
/// # Safety
/// `tuple` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_len(tuple: *const R1SpacerTuple) -> usize {
    tuple_ref(tuple).map_or(0, SpacerTuple::len)
}

/// Copies the entries into `buffer`, which must hold at least
/// `r1_tuple_len` values.
///
/// # Safety
/// `tuple` must be a live handle and `buffer` must point to `buffer_len`
/// writable `uint64_t`s.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_values(
    tuple: *const R1SpacerTuple,
    buffer: *mut u64,
    buffer_len: usize,
) -> R1Status {
    let Some(tuple) = tuple_ref(tuple) else {
        return R1Status::NullArgument;
    };
    if buffer.is_null() {
        return R1Status::NullArgument;
    }
    if buffer_len < tuple.len() {
        return R1Status::InvalidArgument;
    }
    std::ptr::copy_nonoverlapping(tuple.values().as_ptr(), buffer, tuple.len());
    R1Status::Ok
}

/// The level-collapsing product `star(s2, s1)`.
///
/// # Safety
/// `s2` and `s1` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_star(
    s2: *const R1SpacerTuple,
    s1: *const R1SpacerTuple,
    out: *mut *mut R1SpacerTuple,
) -> R1Status {
    let (Some(s2), Some(s1)) = (tuple_ref(s2), tuple_ref(s1)) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    give_tuple(out, star(s2, s1))
}

/// The reversed tuple.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_reverse(
    tuple: *const R1SpacerTuple,
    out: *mut *mut R1SpacerTuple,
) -> R1Status {
    let Some(tuple) = tuple_ref(tuple) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    give_tuple(out, tuple.reverse())
}

/// Whether the tuple equals its own reverse.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_is_palindrome(
    tuple: *const R1SpacerTuple,
    out: *mut bool,
) -> R1Status {
    let Some(tuple) = tuple_ref(tuple) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    *out = tuple.is_palindrome();
    R1Status::Ok
}

/// Whether all entries are equal.
///
/// # Safety
/// `tuple` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_tuple_is_constant(
    tuple: *const R1SpacerTuple,
    out: *mut bool,
) -> R1Status {
    let Some(tuple) = tuple_ref(tuple) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    *out = tuple.is_constant();
    R1Status::Ok
}

/// Decides window compatibility of two equal-length tuples.
///
/// # Safety
/// `s` and `s_prime` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_compatibility(
    s: *const R1SpacerTuple,
    s_prime: *const R1SpacerTuple,
    out: *mut R1Compatibility,
) -> R1Status {
    let (Some(s), Some(s_prime)) = (tuple_ref(s), tuple_ref(s_prime)) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match compatibility(s, s_prime) {
        Ok(CompatibilityResult::Compatible { offset, middle }) => {
            let (middle_forced, middle_value) = match middle {
                MiddleConstraint::Forced { value } => (true, value),
                MiddleConstraint::Free => (false, 0),
            };
            *out = R1Compatibility {
                compatible: true,
                offset,
                middle_forced,
                middle_value,
            };
            R1Status::Ok
        }
        Ok(CompatibilityResult::Incompatible) => {
            *out = R1Compatibility {
                compatible: false,
                offset: 0,
                middle_forced: false,
                middle_value: 0,
            };
            R1Status::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// True when the two equal-length tuples are incompatible.
///
/// # Safety
/// `s` and `s_prime` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_perp(
    s: *const R1SpacerTuple,
    s_prime: *const R1SpacerTuple,
    out: *mut bool,
) -> R1Status {
    let (Some(s), Some(s_prime)) = (tuple_ref(s), tuple_ref(s_prime)) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match perp(s, s_prime) {
        Ok(value) => {
            *out = value;
            R1Status::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Checks that `star(s2, s1)` is incompatible with its own reverse, given
/// a non-palindromic `s1` and a non-constant `s2`.
///
/// # Safety
/// `s1` and `s2` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_reversal_incompatibility(
    s1: *const R1SpacerTuple,
    s2: *const R1SpacerTuple,
    out: *mut bool,
) -> R1Status {
    let (Some(s1), Some(s2)) = (tuple_ref(s1), tuple_ref(s2)) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match verify_reversal_incompatibility(s1, s2) {
        Ok(value) => {
            *out = value;
            R1Status::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Parses a parameter sequence from its JSON form:
/// `{"prefix": [{"r": 2, "s": [0]}], "tail": {"type": "periodic", "cycle": [...]}}`
/// or `{"prefix": [...], "tail": {"type": "unspecified"}}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
/// The returned handle is released with [`r1_params_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_params_from_json(
    json: *const c_char,
    out: *mut *mut R1ParamSpec,
) -> R1Status {
    if json.is_null() || out.is_null() {
        return R1Status::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return R1Status::InvalidUtf8;
    };
    match serde_json::from_str::<ParamSpec>(text) {
        Ok(params) => give_params(out, params),
        Err(_) => R1Status::InvalidArgument,
    }
}

/// Serializes a parameter sequence back to JSON.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_params_to_json(
    params: *const R1ParamSpec,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    give_string(
        out,
        serde_json::to_string(params).expect("params serialize"),
    )
}

/// Releases a parameter handle. Null is ignored.
///
/// # Safety
/// `params` must be a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn r1_params_free(params: *mut R1ParamSpec) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// Parameters of the inverse system: every spacer tuple reversed.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_params_invert(
    params: *const R1ParamSpec,
    out: *mut *mut R1ParamSpec,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    give_params(out, invert_params(params))
}

/// Fuses prefix level `at` with its successor (see the library's
/// `collapse_level`).
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_params_collapse(
    params: *const R1ParamSpec,
    at: u64,
    out: *mut *mut R1ParamSpec,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match params.collapse_level(at) {
        Ok(collapsed) => give_params(out, collapsed),
        Err(e) => status_of(&e),
    }
}

/// Moves `count` cycle levels into the explicit prefix.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_params_unroll(
    params: *const R1ParamSpec,
    count: u64,
    out: *mut *mut R1ParamSpec,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match params.unroll(count) {
        Ok(unrolled) => give_params(out, unrolled),
        Err(e) => status_of(&e),
    }
}

/// Materializes the generating word at `level` as a NUL-terminated string
/// of `'0'` and `'1'` characters, within `budget` symbols.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_word(
    params: *const R1ParamSpec,
    level: u64,
    budget: u64,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match params.build_word(level, budget) {
        Ok(word) => give_string(out, word.to_string()),
        Err(e) => status_of(&e),
    }
}

/// Length of the generating word at `level`, as a decimal string (the
/// value can exceed any fixed-width integer).
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_word_length(
    params: *const R1ParamSpec,
    level: u64,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match params.word_length(level) {
        Ok(length) => give_string(out, length.to_string()),
        Err(e) => status_of(&e),
    }
}

/// Number of 0-symbols of the generating word at `level`, as a decimal
/// string.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_zero_count(
    params: *const R1ParamSpec,
    level: u64,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match params.zero_count(level) {
        Ok(count) => give_string(out, count.to_string()),
        Err(e) => status_of(&e),
    }
}

/// The normalizer as JSON: `{"kind":"exact","value":{"num":..,"den":..}}`
/// or `{"kind":"lower_bound",...}`.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_normalizer_json(
    params: *const R1ParamSpec,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    let result = normalizer(params);
    give_string(
        out,
        serde_json::to_string(&result).expect("results serialize"),
    )
}

/// The measure-condition report as JSON.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_conditions_json(
    params: *const R1ParamSpec,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    let report = check_measure_conditions(params);
    give_string(
        out,
        serde_json::to_string(&report).expect("reports serialize"),
    )
}

/// Runs the inverse-isomorphism decision procedure and returns the
/// decision (verdict, certificate, hypothesis record) as JSON.
///
/// # Safety
/// `params` must be a live handle; `out` must be a valid pointer. Release
/// the string with [`r1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn r1_decide_json(
    params: *const R1ParamSpec,
    out: *mut *mut c_char,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if out.is_null() {
        return R1Status::NullArgument;
    }
    match decide_self_inverse(params) {
        Ok(decision) => give_string(
            out,
            serde_json::to_string(&decision).expect("decisions serialize"),
        ),
        Err(e) => status_of(&e),
    }
}

/// Replays a witness certificate (JSON) against the parameters. Writes
/// whether it verified; returns a non-`Ok` status only for malformed
/// input.
///
/// # Safety
/// `params` must be a live handle, `cert_json` a NUL-terminated string,
/// and `verified` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn r1_verify_certificate_json(
    params: *const R1ParamSpec,
    cert_json: *const c_char,
    verified: *mut bool,
) -> R1Status {
    let Some(params) = params_ref(params) else {
        return R1Status::NullArgument;
    };
    if cert_json.is_null() || verified.is_null() {
        return R1Status::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(cert_json).to_str() else {
        return R1Status::InvalidUtf8;
    };
    let certificate = match serde_json::from_str(text) {
        Ok(cert) => cert,
        Err(_) => return R1Status::InvalidArgument,
    };
    match verify_witness_certificate(params, &certificate) {
        Ok(result) => {
            *verified = result.verified;
            R1Status::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn r1_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
