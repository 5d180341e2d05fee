//! C interface to `chowcalc`.
//!
//! Classes cross the boundary as opaque `ChowcalcClass` handles. Every
//! fallible function returns a `ChowcalcStatus` and writes its result through
//! an out-pointer; on failure `chowcalc_last_error()` describes what went
//! wrong on the calling thread. Strings returned by the library are owned by
//! the caller and must be released with `chowcalc_string_free`, handles with
//! `chowcalc_class_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chowcalc::calculus::{dual, tensor_line, LineBundle};
use chowcalc::chow::{format_rational, parse_rational, AmbientSpace, ChowClass};
use chowcalc::classes::{
    csm_hypersurface, euler_characteristic, fulton_ci, invert_milnor_to_segre, milnor_ci_raw,
    milnor_hypersurface, milnor_signed, segre_ci, segre_linear_subspace,
};
use chowcalc::render::{machine, parse_coefficients, pretty};
use chowcalc::report::{run_command, Command, Format};
use chowcalc::scenario::Scenario;
use chowcalc::verify::verify_golden_items;
use chowcalc::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowcalcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    AmbientMismatch = 4,
    NotInvertible = 5,
    Parse = 6,
    Io = 7,
    Unsupported = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowcalcFormat {
    Text = 0,
    Machine = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowcalcCommand {
    Segre = 0,
    Fulton = 1,
    Csm = 2,
    Milnor = 3,
    Euler = 4,
    InvertMilnor = 5,
    CheckIdentities = 6,
}

/// Opaque class in `A_*(P^n)`.
pub struct ChowcalcClass {
    inner: ChowClass,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> ChowcalcStatus {
    match err {
        Error::DimensionMismatch { .. } => ChowcalcStatus::DimensionMismatch,
        Error::AmbientMismatch { .. } => ChowcalcStatus::AmbientMismatch,
        Error::NotInvertible => ChowcalcStatus::NotInvertible,
        Error::CodimOutOfRange { .. }
        | Error::InvalidDegree(_)
        | Error::TooManyDegrees { .. }
        | Error::SubspaceOutOfRange { .. } => ChowcalcStatus::InvalidArgument,
        Error::Unsupported(_) | Error::MissingData(_) => ChowcalcStatus::Unsupported,
        Error::InvalidRational(_) | Error::Scenario { .. } | Error::Parse(_) => {
            ChowcalcStatus::Parse
        }
        Error::Io(_) => ChowcalcStatus::Io,
    }
}

enum Failure {
    Status(ChowcalcStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(ChowcalcStatus::NullPointer, format!("{what} is null"))
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure::Status(ChowcalcStatus::InvalidArgument, message.into())
}

/// Runs `body`, converting errors and panics into a status code.
fn guard<F>(body: F) -> ChowcalcStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ChowcalcStatus::Ok
        }
        Ok(Err(Failure::Status(status, message))) => {
            set_last_error(message);
            status
        }
        Ok(Err(Failure::Core(err))) => {
            set_last_error(err.to_string());
            status_of(&err)
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {message}"));
            ChowcalcStatus::Panic
        }
    }
}

unsafe fn class_ref<'a>(ptr: *const ChowcalcClass, what: &str) -> Result<&'a ChowClass, Failure> {
    ptr.as_ref().map(|c| &c.inner).ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn read_degrees(ptr: *const u32, len: usize) -> Result<Vec<u32>, Failure> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ptr.is_null() {
        return Err(null("degrees"));
    }
    Ok(std::slice::from_raw_parts(ptr, len).to_vec())
}

unsafe fn write_class(out: *mut *mut ChowcalcClass, class: ChowClass) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(ChowcalcClass { inner: class }));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(text).map_err(|_| invalid("result contains a NUL byte"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn clear_out<T>(out: *mut *mut T) {
    if !out.is_null() {
        *out = ptr::null_mut();
    }
}

/// Message for the last failed call on this thread, or NULL after a
/// successful one. The pointer stays valid until the next call into the
/// library from the same thread.
#[no_mangle]
pub extern "C" fn chowcalc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a class handle. NULL is ignored.
///
/// # Safety
/// `class` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_free(class: *mut ChowcalcClass) {
    if !class.is_null() {
        drop(Box::from_raw(class));
    }
}

/// Parses comma-separated rationals by codimension (`"0,0,2,-4"`,
/// `"1/2,3"`) into a class in `A_*(P^dim)`. Missing entries are zero.
///
/// # Safety
/// `csv` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_parse(
    csv: *const c_char,
    dim: usize,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let text = read_str(csv, "csv")?;
        write_class(out, parse_coefficients(text, dim)?)
    })
}

/// Builds a class from `len` integer coefficients by codimension.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_from_ints(
    coeffs: *const i64,
    len: usize,
    dim: usize,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let values = if len == 0 {
            &[][..]
        } else if coeffs.is_null() {
            return Err(null("coeffs"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        write_class(out, ChowClass::from_ints(dim, values)?)
    })
}

/// Ambient dimension `n` of the class, or 0 for NULL.
///
/// # Safety
/// `class` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_dim(class: *const ChowcalcClass) -> usize {
    class.as_ref().map_or(0, |c| c.inner.dim())
}

/// Writes `1` to `out` when the classes are equal, `0` otherwise.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_equal(
    a: *const ChowcalcClass,
    b: *const ChowcalcClass,
    out: *mut bool,
) -> ChowcalcStatus {
    guard(|| {
        let (a, b) = (class_ref(a, "a")?, class_ref(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a == b;
        Ok(())
    })
}

/// The codimension-`codim` coefficient as `"p"` or `"p/q"`.
///
/// # Safety
/// `class` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_coefficient(
    class: *const ChowcalcClass,
    codim: usize,
    out: *mut *mut c_char,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let c = class_ref(class, "class")?;
        if codim > c.dim() {
            return Err(Error::CodimOutOfRange { codim, dim: c.dim() }.into());
        }
        write_string(out, format_rational(&c.coeff(codim)))
    })
}

/// Renders a class: `Text` gives `2[P^2] - 4[P^1]`, `Machine` the
/// comma-separated coefficients by codimension.
///
/// # Safety
/// `class` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_class_render(
    class: *const ChowcalcClass,
    format: ChowcalcFormat,
    out: *mut *mut c_char,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let c = class_ref(class, "class")?;
        let text = match format {
            ChowcalcFormat::Text => pretty(c),
            ChowcalcFormat::Machine => machine(c),
        };
        write_string(out, text)
    })
}

/// Sign change `(-1)^i` on the codimension-`i` part.
///
/// # Safety
/// `class` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_dual(
    class: *const ChowcalcClass,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| write_class(out, dual(class_ref(class, "class")?)))
}

/// Tensor of a class with the line bundle `O(degree)`.
///
/// # Safety
/// `class` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_tensor_line(
    class: *const ChowcalcClass,
    degree: i64,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let c = class_ref(class, "class")?;
        write_class(out, tensor_line(c, &LineBundle::new(c.dim(), degree))?)
    })
}

/// Segre class of a reduced linear `P^k` in `P^dim`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_segre_linear_subspace(
    k: usize,
    dim: usize,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| write_class(out, segre_linear_subspace(k, dim)?))
}

/// Segre class of the complete intersection of hypersurfaces of the given
/// degrees in `P^dim`.
///
/// # Safety
/// `degrees` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_segre_ci(
    degrees: *const u32,
    len: usize,
    dim: usize,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| write_class(out, segre_ci(&read_degrees(degrees, len)?, dim)?))
}

/// Fulton class of the complete intersection of the given degrees.
///
/// # Safety
/// `degrees` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_fulton_ci(
    degrees: *const u32,
    len: usize,
    dim: usize,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let ambient = AmbientSpace::projective(dim);
        write_class(out, fulton_ci(&read_degrees(degrees, len)?, &ambient)?)
    })
}

/// Chern-Schwartz-MacPherson class of a degree-`degree` hypersurface whose
/// singular scheme has Segre class `singular_segre`.
///
/// # Safety
/// `singular_segre` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_csm_hypersurface(
    degree: u32,
    singular_segre: *const ChowcalcClass,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let s = class_ref(singular_segre, "singular_segre")?;
        let ambient = AmbientSpace::projective(s.dim());
        write_class(out, csm_hypersurface(degree, s, &ambient)?)
    })
}

/// Milnor class of a degree-`degree` hypersurface.
///
/// # Safety
/// `singular_segre` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_milnor_hypersurface(
    degree: u32,
    singular_segre: *const ChowcalcClass,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let s = class_ref(singular_segre, "singular_segre")?;
        let ambient = AmbientSpace::projective(s.dim());
        write_class(out, milnor_hypersurface(degree, s, &ambient)?)
    })
}

/// Milnor class of the complete intersection of smooth hypersurfaces of
/// degrees `smooth_degrees` with a last hypersurface of degree
/// `last_degree`. With `signed` false the raw class is returned; otherwise
/// it is multiplied by `(-1)^(k-1)` for `k` hypersurfaces, matching
/// `c_SM - c_F`.
///
/// # Safety
/// `smooth_degrees` must point to `len` readable values; `singular_segre`
/// must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_milnor_ci(
    smooth_degrees: *const u32,
    len: usize,
    last_degree: u32,
    singular_segre: *const ChowcalcClass,
    signed: bool,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let smooth = read_degrees(smooth_degrees, len)?;
        let s = class_ref(singular_segre, "singular_segre")?;
        let ambient = AmbientSpace::projective(s.dim());
        let class = if signed {
            milnor_signed(&smooth, last_degree, s, &ambient)?
        } else {
            milnor_ci_raw(&smooth, last_degree, s, &ambient)?
        };
        write_class(out, class)
    })
}

/// Recovers the Segre class of the singular scheme of a degree-`degree`
/// hypersurface from its Milnor class.
///
/// # Safety
/// `milnor` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_invert_milnor(
    milnor: *const ChowcalcClass,
    degree: u32,
    out: *mut *mut ChowcalcClass,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let m = class_ref(milnor, "milnor")?;
        let ambient = AmbientSpace::projective(m.dim());
        write_class(out, invert_milnor_to_segre(m, degree, &ambient)?)
    })
}

/// Degree of the dimension-zero part of a CSM class, as `"p"` or `"p/q"`.
///
/// # Safety
/// `csm` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_euler(
    csm: *const ChowcalcClass,
    out: *mut *mut c_char,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| write_string(out, format_rational(&euler_characteristic(class_ref(csm, "csm")?))))
}

/// Checks that `text` parses as an exact rational `p` or `p/q`.
///
/// # Safety
/// `text` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_rational_validate(text: *const c_char) -> ChowcalcStatus {
    guard(|| {
        parse_rational(read_str(text, "text")?)?;
        Ok(())
    })
}

/// Runs a command on a scenario given as TOML text and writes the rendered
/// report, byte-identical to the CLI output. `all_flags_hold` (optional)
/// receives whether every identity flag in the report is true.
///
/// # Safety
/// `toml` must be a NUL-terminated string; `out` must be writable;
/// `all_flags_hold` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_scenario_run(
    toml: *const c_char,
    command: ChowcalcCommand,
    format: ChowcalcFormat,
    out: *mut *mut c_char,
    all_flags_hold: *mut bool,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let scenario = Scenario::from_toml_str(read_str(toml, "toml")?)?;
        let command = match command {
            ChowcalcCommand::Segre => Command::Segre,
            ChowcalcCommand::Fulton => Command::Fulton,
            ChowcalcCommand::Csm => Command::Csm,
            ChowcalcCommand::Milnor => Command::Milnor,
            ChowcalcCommand::Euler => Command::Euler,
            ChowcalcCommand::InvertMilnor => Command::InvertMilnor,
            ChowcalcCommand::CheckIdentities => Command::CheckIdentities,
        };
        let format = match format {
            ChowcalcFormat::Text => Format::Text,
            ChowcalcFormat::Machine => Format::Machine,
        };
        let report = run_command(command, &scenario)?;
        if !all_flags_hold.is_null() {
            *all_flags_hold = report.all_flags_hold();
        }
        write_string(out, report.render(format))
    })
}

/// Runs the built-in golden checks; writes the report and whether every
/// item passed.
///
/// # Safety
/// `out` must be writable; `all_passed` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn chowcalc_verify_golden(
    out: *mut *mut c_char,
    all_passed: *mut bool,
) -> ChowcalcStatus {
    clear_out(out);
    guard(|| {
        let report = verify_golden_items();
        if !all_passed.is_null() {
            *all_passed = report.all_passed();
        }
        write_string(out, report.render())
    })
}
