//! C interface to `uquad`.
//!
//! Objects are opaque handles released with their `*_free` function.
//! Every fallible call returns a [`UqStatus`]; on failure the message is
//! available from [`uq_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`uq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use uquad::arrangement::{region_family, Permutation, QuadrantArrangement};
use uquad::drawing::{
    assign_coordinates, check_dominance, compact, drawing_to_arrangement, render_svg,
    validate_upright_quad, GridDrawing, SvgOptions,
};
use uquad::family::{build_graph, validate_family, LearningGraph, SetFamily, Universe};
use uquad::{io, recognize, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UqStatus {
    Ok = 0,
    NullArgument = 1,
    /// Malformed text input or invalid UTF-8.
    Parse = 2,
    /// The family violates a learning-space axiom.
    InvalidFamily = 3,
    /// A valid learning space without an st-planar drawing.
    NotStPlanar = 4,
    /// The drawing fails the upright-quad or dominance checks.
    InvalidDrawing = 5,
    /// Input exceeds a size limit.
    TooLarge = 6,
    /// A buffer or argument has the wrong size or content.
    InvalidArgument = 7,
    /// A bug in the library; the message describes the panic.
    Internal = 8,
}

/// A set family.
pub struct UqFamily {
    family: SetFamily,
}

/// A learning graph together with vertex coordinates.
pub struct UqDrawing {
    graph: LearningGraph,
    drawing: GridDrawing,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(UqStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let status = match err {
            Error::Parse(_) => UqStatus::Parse,
            Error::InvalidFamily(_) => UqStatus::InvalidFamily,
            Error::NotPlanar(_)
            | Error::InvalidDrawing(_)
            | Error::MalformedZone(_)
            | Error::DrawingSize { .. } => UqStatus::InvalidDrawing,
            Error::UniverseTooLarge(_) | Error::TooLarge { .. } => UqStatus::TooLarge,
            _ => UqStatus::InvalidArgument,
        };
        Failure(status, err.to_string())
    }
}

fn fail(status: UqStatus, message: impl Into<String>) -> Failure {
    Failure(status, message.into())
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> UqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            UqStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(panic) => {
            let message = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&message);
            UqStatus::Internal
        }
    }
}

unsafe fn utf8<'a>(ptr: *const c_char) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(fail(UqStatus::NullArgument, "null string"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| fail(UqStatus::Parse, format!("input is not UTF-8: {e}")))
}

unsafe fn handle<'a, T>(ptr: *const T) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| fail(UqStatus::NullArgument, "null handle"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(UqStatus::NullArgument, "null output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(fail(UqStatus::NullArgument, "null output pointer"));
    }
    let c = CString::new(s).map_err(|_| fail(UqStatus::Internal, "string contains NUL"))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn buffer<'a, T>(ptr: *mut T, len: usize, needed: usize) -> Result<&'a mut [T], Failure> {
    if len != needed {
        return Err(fail(
            UqStatus::InvalidArgument,
            format!("buffer has {len} entries, expected {needed}"),
        ));
    }
    if ptr.is_null() {
        if needed == 0 {
            return Ok(&mut []);
        }
        return Err(fail(UqStatus::NullArgument, "null buffer"));
    }
    Ok(std::slice::from_raw_parts_mut(ptr, len))
}

/// Message describing the last failed call on this thread, or an empty
/// string after a successful one. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn uq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn uq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a family file.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_family_parse(text: *const c_char, out: *mut *mut UqFamily) -> UqStatus {
    guard(|| {
        let family = io::parse_family(utf8(text)?)?;
        put(out, UqFamily { family })
    })
}

/// Region family of the arrangement placing element `i` at
/// `(i, permutation[i])`, with elements named `a`, `b`, ... and `e26`
/// onwards past `z`.
///
/// # Safety
/// `permutation` must point to `len` readable values (or be null when
/// `len` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn uq_family_from_permutation(
    permutation: *const usize,
    len: usize,
    out: *mut *mut UqFamily,
) -> UqStatus {
    guard(|| {
        let values = if len == 0 {
            Vec::new()
        } else if permutation.is_null() {
            return Err(fail(UqStatus::NullArgument, "null permutation"));
        } else {
            std::slice::from_raw_parts(permutation, len).to_vec()
        };
        let pi = Permutation::new(values)?;
        let a = QuadrantArrangement::from_permutation(Universe::letters(len)?, &pi)?;
        put(
            out,
            UqFamily {
                family: region_family(&a),
            },
        )
    })
}

/// # Safety
/// `family` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_family_free(family: *mut UqFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Number of elements in the universe; 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_family_universe_size(family: *const UqFamily) -> usize {
    family.as_ref().map_or(0, |f| f.family.universe().len())
}

/// Number of states; 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_family_state_count(family: *const UqFamily) -> usize {
    family.as_ref().map_or(0, |f| f.family.len())
}

/// `Ok` for a learning space, `InvalidFamily` with the violations listed in
/// the error message otherwise.
///
/// # Safety
/// `family` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_family_validate(family: *const UqFamily) -> UqStatus {
    guard(|| {
        let f = &handle(family)?.family;
        let report = validate_family(f);
        if report.is_ok() {
            Ok(())
        } else {
            Err(fail(
                UqStatus::InvalidFamily,
                report.render(f.universe(), &[]),
            ))
        }
    })
}

/// Writes the family in file format.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_family_to_text(
    family: *const UqFamily,
    out: *mut *mut c_char,
) -> UqStatus {
    guard(|| put_string(out, io::write_family(&handle(family)?.family)))
}

/// Fills `x_order` and `y_order` (each of the universe's size) with element
/// indices along the two boundary orders. Returns `NotStPlanar` for a
/// learning space that has none.
///
/// # Safety
/// `family` must be a live handle; both buffers must hold `len` writable
/// values.
#[no_mangle]
pub unsafe extern "C" fn uq_recognize(
    family: *const UqFamily,
    x_order: *mut usize,
    y_order: *mut usize,
    len: usize,
) -> UqStatus {
    guard(|| {
        let f = &handle(family)?.family;
        let n = f.universe().len();
        let xs = buffer(x_order, len, n)?;
        let ys = buffer(y_order, len, n)?;
        let orders = recognize(f)?.ok_or_else(|| fail(UqStatus::NotStPlanar, "not st-planar"))?;
        xs.copy_from_slice(&orders.x_order);
        ys.copy_from_slice(&orders.y_order);
        Ok(())
    })
}

/// Grid drawing of an st-planar learning space, optionally compacted.
///
/// # Safety
/// `family` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_draw(
    family: *const UqFamily,
    compacted: bool,
    out: *mut *mut UqDrawing,
) -> UqStatus {
    guard(|| {
        let f = &handle(family)?.family;
        let orders = recognize(f)?.ok_or_else(|| fail(UqStatus::NotStPlanar, "not st-planar"))?;
        let graph = build_graph(f)?;
        let mut drawing = assign_coordinates(f, &orders)?;
        if compacted {
            drawing = compact(&drawing, &graph)?;
        }
        put(out, UqDrawing { graph, drawing })
    })
}

/// Parses a drawing file. The drawing is not validated; see
/// [`uq_drawing_validate`].
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_parse(
    text: *const c_char,
    out: *mut *mut UqDrawing,
) -> UqStatus {
    guard(|| {
        let (graph, drawing) = io::parse_drawing(utf8(text)?)?;
        put(out, UqDrawing { graph, drawing })
    })
}

/// # Safety
/// `drawing` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_free(drawing: *mut UqDrawing) {
    if !drawing.is_null() {
        drop(Box::from_raw(drawing));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `drawing` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_vertex_count(drawing: *const UqDrawing) -> usize {
    drawing.as_ref().map_or(0, |d| d.graph.vertex_count())
}

/// Copies vertex coordinates, in the vertex order of the drawing file.
///
/// # Safety
/// `drawing` must be a live handle; `xs` and `ys` must hold `len` writable
/// values.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_coords(
    drawing: *const UqDrawing,
    xs: *mut i64,
    ys: *mut i64,
    len: usize,
) -> UqStatus {
    guard(|| {
        let d = handle(drawing)?;
        let n = d.graph.vertex_count();
        let xs = buffer(xs, len, n)?;
        let ys = buffer(ys, len, n)?;
        for (i, &(x, y)) in d.drawing.coords().iter().enumerate() {
            xs[i] = x;
            ys[i] = y;
        }
        Ok(())
    })
}

/// `Ok` if the drawing passes the upright-quad and dominance checks,
/// `InvalidDrawing` with the violations in the error message otherwise.
///
/// # Safety
/// `drawing` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_validate(drawing: *const UqDrawing) -> UqStatus {
    guard(|| {
        let d = handle(drawing)?;
        let mut report = validate_upright_quad(&d.drawing, &d.graph);
        if report.is_ok() {
            report.extend(check_dominance(&d.drawing, &d.graph));
        }
        if report.is_ok() {
            Ok(())
        } else {
            Err(fail(
                UqStatus::InvalidDrawing,
                report.render(d.graph.universe(), d.graph.vertices()),
            ))
        }
    })
}

/// Fills `permutation` (of the universe's size) with the canonical
/// arrangement permutation of a valid drawing.
///
/// # Safety
/// `drawing` must be a live handle and `permutation` must hold `len`
/// writable values.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_permutation(
    drawing: *const UqDrawing,
    permutation: *mut usize,
    len: usize,
) -> UqStatus {
    guard(|| {
        let d = handle(drawing)?;
        let out = buffer(permutation, len, d.graph.universe().len())?;
        let a = drawing_to_arrangement(&d.drawing, &d.graph)?;
        out.copy_from_slice(a.permutation().as_slice());
        Ok(())
    })
}

/// Writes the drawing in file format.
///
/// # Safety
/// `drawing` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_to_text(
    drawing: *const UqDrawing,
    out: *mut *mut c_char,
) -> UqStatus {
    guard(|| {
        let d = handle(drawing)?;
        put_string(out, io::write_drawing(&d.graph, &d.drawing))
    })
}

/// Renders the drawing as SVG with `unit` pixels per grid step.
///
/// # Safety
/// `drawing` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn uq_drawing_svg(
    drawing: *const UqDrawing,
    unit: u32,
    labels: bool,
    out: *mut *mut c_char,
) -> UqStatus {
    guard(|| {
        let d = handle(drawing)?;
        if unit == 0 {
            return Err(fail(UqStatus::InvalidArgument, "unit must be positive"));
        }
        put_string(
            out,
            render_svg(&d.drawing, &d.graph, &SvgOptions { unit, labels }),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(Failure::from(Error::Parse("x".into())).0, UqStatus::Parse);
        assert_eq!(
            Failure::from(Error::InvalidDrawing("x".into())).0,
            UqStatus::InvalidDrawing
        );
        assert_eq!(
            Failure::from(Error::UniverseTooLarge(65)).0,
            UqStatus::TooLarge
        );
        assert_eq!(
            Failure::from(Error::UnknownElement("z".into())).0,
            UqStatus::InvalidArgument
        );
    }

    #[test]
    fn panics_become_internal() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, UqStatus::Internal);
        let msg = unsafe { CStr::from_ptr(uq_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "boom");
    }
}
