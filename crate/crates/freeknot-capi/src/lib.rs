//! C ABI over the freeknot library. Every function is panic-safe, returns
//! an FkStatus, and writes results through out-pointers. Strings returned
//! through `char **` are owned by the caller and must be released with
//! fk_string_free; diagrams with fk_diagram_free. fk_last_error gives a
//! thread-local message for the most recent failure.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use freeknot::group::{dihedral_shift, reduce, Group, GroupWord};
use freeknot::invariants::{
    closed_invariants, invariant_bundle, invariant_l, slice_obstruction,
};
use freeknot::{ChordDiagram, Error};

/// Result of every fallible call. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FkStatus {
    FkOk = 0,
    FkNullPointer = 1,
    FkInvalidUtf8 = 2,
    FkParseError = 3,
    FkUnsupported = 4,
    FkUndefined = 5,
    FkPanic = 6,
}

/// Opaque diagram handle.
pub struct FkDiagram {
    inner: ChordDiagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

fn status_of(e: &Error) -> FkStatus {
    match e {
        Error::Parse(_) | Error::ParseAt { .. } => FkStatus::FkParseError,
        _ => FkStatus::FkUnsupported,
    }
}

fn fail(e: &Error) -> FkStatus {
    set_error(&e.to_string());
    status_of(e)
}

/// Runs a closure behind a panic guard; a panic becomes FkPanic.
fn guarded(body: impl FnOnce() -> FkStatus) -> FkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            FkStatus::FkPanic
        }
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, FkStatus> {
    if ptr.is_null() {
        set_error("null string argument");
        return Err(FkStatus::FkNullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        FkStatus::FkInvalidUtf8
    })
}

fn write_string(out: *mut *mut c_char, s: String) -> FkStatus {
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(_) => {
            set_error("result contained an interior NUL");
            return FkStatus::FkUnsupported;
        }
    };
    unsafe { *out = c.into_raw() };
    FkStatus::FkOk
}

macro_rules! require {
    ($ptr:expr) => {
        if $ptr.is_null() {
            set_error("null pointer argument");
            return FkStatus::FkNullPointer;
        }
    };
}

unsafe fn diagram<'a>(d: *const FkDiagram) -> &'a ChordDiagram {
    &(*d).inner
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn fk_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must have been returned by a function from this library.
#[no_mangle]
pub unsafe extern "C" fn fk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one diagram line ("long: ..." or "closed: ...") into a handle.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_parse(
    text: *const c_char,
    out: *mut *mut FkDiagram,
) -> FkStatus {
    guarded(|| {
        require!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match ChordDiagram::parse(text) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(FkDiagram { inner }));
                FkStatus::FkOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a diagram handle. Null is a no-op.
///
/// # Safety
/// `d` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_free(d: *mut FkDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Writes the diagram in its line form, e.g. "long: A B A B".
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_display(
    d: *const FkDiagram,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        write_string(out, diagram(d).to_string())
    })
}

/// Writes the label-renamed canonical form used for deduplication.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_canonical(
    d: *const FkDiagram,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        write_string(out, diagram(d).canonical_string())
    })
}

/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_chord_count(
    d: *const FkDiagram,
    out: *mut usize,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        *out = diagram(d).n();
        FkStatus::FkOk
    })
}

/// Writes 1 for a closed diagram, 0 for a long one.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_diagram_is_closed(
    d: *const FkDiagram,
    out: *mut i32,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        *out = diagram(d).is_closed() as i32;
        FkStatus::FkOk
    })
}

/// The even integer invariant of a long diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_invariant_l(d: *const FkDiagram, out: *mut i64) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        match invariant_l(diagram(d)) {
            Ok(l) => {
                *out = l;
                FkStatus::FkOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Normal form of the phi word of a long diagram, e.g. "b a b a".
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_phi_normal_form(
    d: *const FkDiagram,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        match invariant_bundle(diagram(d)) {
            Ok(b) => write_string(out, b.phi_nf.to_string()),
            Err(e) => fail(&e),
        }
    })
}

/// Normal form of the psi word of a long diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_psi_normal_form(
    d: *const FkDiagram,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        match invariant_bundle(diagram(d)) {
            Ok(b) => write_string(out, b.psi_nf.to_string()),
            Err(e) => fail(&e),
        }
    })
}

/// Half the dihedral translation of phi. FkUndefined when the translation
/// is odd (not observed in practice) or the diagram is closed.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_dihedral_shift(d: *const FkDiagram, out: *mut i64) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        let bundle = match invariant_bundle(diagram(d)) {
            Ok(b) => b,
            Err(e) => return fail(&e),
        };
        match dihedral_shift(&bundle.phi).ok().and_then(|e| e.shift()) {
            Some(k) => {
                *out = k;
                FkStatus::FkOk
            }
            None => {
                set_error("dihedral translation is odd; shift undefined");
                FkStatus::FkUndefined
            }
        }
    })
}

/// |l| of a closed diagram, stable under basepoint rotation.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_closed_l_abs(d: *const FkDiagram, out: *mut i64) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        match closed_invariants(diagram(d)) {
            Ok(ci) => {
                *out = ci.l_abs;
                FkStatus::FkOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Lexicographically least psi conjugacy class over all cuts of a closed
/// diagram.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_closed_canonical_psi(
    d: *const FkDiagram,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        match closed_invariants(diagram(d)) {
            Ok(ci) => write_string(out, ci.canonical.to_string()),
            Err(e) => fail(&e),
        }
    })
}

/// Writes 1 when nonzero |l| rules out a disc filling, else 0.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_slice_obstructed(d: *const FkDiagram, out: *mut i32) -> FkStatus {
    guarded(|| {
        require!(d);
        require!(out);
        *out = slice_obstruction(diagram(d)).obstructed as i32;
        FkStatus::FkOk
    })
}

/// Connected sum of two long diagrams into a fresh handle.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fk_connected_sum(
    a: *const FkDiagram,
    b: *const FkDiagram,
    out: *mut *mut FkDiagram,
) -> FkStatus {
    guarded(|| {
        require!(a);
        require!(b);
        require!(out);
        match diagram(a).connected_sum(diagram(b)) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(FkDiagram { inner }));
                FkStatus::FkOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Reduces a word to its normal form. `group` is "g" or "gp"; the word
/// uses the letters a, b, b' with optional ^exponents, or "1".
///
/// # Safety
/// `group` and `word` must be valid NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fk_reduce_word(
    group: *const c_char,
    word: *const c_char,
    out: *mut *mut c_char,
) -> FkStatus {
    guarded(|| {
        require!(out);
        let group = match read_str(group) {
            Ok(g) => g,
            Err(status) => return status,
        };
        let word = match read_str(word) {
            Ok(w) => w,
            Err(status) => return status,
        };
        let tag = match Group::parse(group) {
            Ok(t) => t,
            Err(e) => return fail(&e),
        };
        match GroupWord::parse(tag, word) {
            Ok(w) => write_string(out, reduce(&w).to_string()),
            Err(e) => fail(&e),
        }
    })
}
