use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use uquad_ffi::*;

const PREFIX_SUFFIX: &str = "format = \"uquad-family/1\"
universe = [\"a\", \"b\", \"c\"]
states = [[], [\"a\"], [\"c\"], [\"a\", \"b\"], [\"a\", \"c\"], [\"b\", \"c\"], [\"a\", \"b\", \"c\"]]
";

const POWER_SET: &str = "format = \"uquad-family/1\"
universe = [\"a\", \"b\", \"c\"]
states = [[], [\"a\"], [\"b\"], [\"c\"], [\"a\", \"b\"], [\"a\", \"c\"], [\"b\", \"c\"], [\"a\", \"b\", \"c\"]]
";

fn last_error() -> String {
    unsafe { CStr::from_ptr(uq_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn parse(text: &str) -> (UqStatus, *mut UqFamily) {
    let c = CString::new(text).unwrap();
    let mut f = ptr::null_mut();
    let status = unsafe { uq_family_parse(c.as_ptr(), &mut f) };
    (status, f)
}

unsafe fn take_string(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    uq_string_free(s);
    out
}

#[test]
fn recognize_and_draw() {
    let (status, f) = parse(PREFIX_SUFFIX);
    assert_eq!(status, UqStatus::Ok);
    unsafe {
        assert_eq!(uq_family_universe_size(f), 3);
        assert_eq!(uq_family_state_count(f), 7);
        assert_eq!(uq_family_validate(f), UqStatus::Ok);

        let mut x = [0usize; 3];
        let mut y = [0usize; 3];
        assert_eq!(
            uq_recognize(f, x.as_mut_ptr(), y.as_mut_ptr(), 3),
            UqStatus::Ok
        );
        assert_eq!((x, y), ([0, 1, 2], [2, 1, 0]));
        assert_eq!(
            uq_recognize(f, x.as_mut_ptr(), y.as_mut_ptr(), 2),
            UqStatus::InvalidArgument
        );

        let mut d = ptr::null_mut();
        assert_eq!(uq_draw(f, true, &mut d), UqStatus::Ok);
        assert_eq!(uq_drawing_vertex_count(d), 7);
        let mut xs = [0i64; 7];
        let mut ys = [0i64; 7];
        assert_eq!(
            uq_drawing_coords(d, xs.as_mut_ptr(), ys.as_mut_ptr(), 7),
            UqStatus::Ok
        );
        assert_eq!(*xs.iter().max().unwrap(), 2);
        assert_eq!(*ys.iter().max().unwrap(), 2);
        assert_eq!(uq_drawing_validate(d), UqStatus::Ok);

        let mut pi = [0usize; 3];
        assert_eq!(uq_drawing_permutation(d, pi.as_mut_ptr(), 3), UqStatus::Ok);
        assert_eq!(pi, [2, 1, 0]);

        let mut svg = ptr::null_mut();
        assert_eq!(uq_drawing_svg(d, 48, false, &mut svg), UqStatus::Ok);
        let svg = take_string(svg);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<circle").count(), 7);

        let mut text = ptr::null_mut();
        assert_eq!(uq_drawing_to_text(d, &mut text), UqStatus::Ok);
        let text = take_string(text);
        let c = CString::new(text).unwrap();
        let mut d2 = ptr::null_mut();
        assert_eq!(uq_drawing_parse(c.as_ptr(), &mut d2), UqStatus::Ok);
        assert_eq!(uq_drawing_validate(d2), UqStatus::Ok);

        uq_drawing_free(d2);
        uq_drawing_free(d);
        uq_family_free(f);
    }
}

#[test]
fn negatives_and_errors() {
    let (status, f) = parse(POWER_SET);
    assert_eq!(status, UqStatus::Ok);
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(uq_draw(f, false, &mut d), UqStatus::NotStPlanar);
        assert!(d.is_null());
        assert_eq!(last_error(), "not st-planar");
        uq_family_free(f);
    }

    let (status, f) =
        parse("format = \"uquad-family/1\"\nuniverse = [\"a\"]\nstates = [[], [\"z\"]]\n");
    assert_eq!(status, UqStatus::Parse);
    assert!(f.is_null());
    assert!(last_error().starts_with("line 3"), "{}", last_error());

    let (status, f) = parse(
        "format = \"uquad-family/1\"\nuniverse = [\"a\", \"b\"]\nstates = [[], [\"a\", \"b\"]]\n",
    );
    assert_eq!(status, UqStatus::Ok);
    unsafe {
        assert_eq!(uq_family_validate(f), UqStatus::InvalidFamily);
        assert!(last_error().starts_with("L1: "), "{}", last_error());
        let mut x = [0usize; 2];
        let mut y = [0usize; 2];
        assert_eq!(
            uq_recognize(f, x.as_mut_ptr(), y.as_mut_ptr(), 2),
            UqStatus::InvalidFamily
        );
        uq_family_free(f);
    }

    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(uq_family_parse(ptr::null(), &mut f), UqStatus::NullArgument);
        assert_eq!(uq_family_validate(ptr::null()), UqStatus::NullArgument);
        assert_eq!(uq_family_state_count(ptr::null()), 0);
        uq_family_free(ptr::null_mut());
        uq_string_free(ptr::null_mut());
    }
}

#[test]
fn families_from_permutations() {
    unsafe {
        let pi = [1usize, 3, 0, 2];
        let mut f = ptr::null_mut();
        assert_eq!(
            uq_family_from_permutation(pi.as_ptr(), 4, &mut f),
            UqStatus::Ok
        );
        // 1 + n + inversions
        assert_eq!(uq_family_state_count(f), 1 + 4 + 3);
        let mut text = ptr::null_mut();
        assert_eq!(uq_family_to_text(f, &mut text), UqStatus::Ok);
        assert!(take_string(text).starts_with("format = \"uquad-family/1\"\n"));
        uq_family_free(f);

        let bad = [0usize, 0];
        let mut g = ptr::null_mut();
        assert_eq!(
            uq_family_from_permutation(bad.as_ptr(), 2, &mut g),
            UqStatus::InvalidArgument
        );
        assert!(g.is_null());
        assert_eq!(
            uq_family_from_permutation(ptr::null(), 0, &mut g),
            UqStatus::Ok
        );
        assert_eq!(uq_family_state_count(g), 1);
        uq_family_free(g);
    }
}

#[test]
fn crossing_drawing_is_rejected() {
    let text = "format = \"uquad-drawing/1\"
universe = [\"a\", \"b\"]
vertices = [
  { state = [], x = 0, y = 0 },
  { state = [\"a\"], x = 0, y = 1 },
  { state = [\"b\"], x = 1, y = 0 },
  { state = [\"a\", \"b\"], x = 1, y = 1 },
]
edges = [
  { from = 0, to = 1, label = \"a\" },
  { from = 0, to = 2, label = \"b\" },
  { from = 1, to = 3, label = \"b\" },
  { from = 2, to = 3, label = \"a\" },
]
";
    let c = CString::new(text).unwrap();
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(uq_drawing_parse(c.as_ptr(), &mut d), UqStatus::Ok);
        assert_eq!(uq_drawing_validate(d), UqStatus::Ok);
        // move {a} onto the far corner of the square
        let moved = text.replace(
            "{ state = [\"a\"], x = 0, y = 1 }",
            "{ state = [\"a\"], x = 2, y = 2 }",
        );
        let c = CString::new(moved).unwrap();
        let mut e = ptr::null_mut();
        assert_eq!(uq_drawing_parse(c.as_ptr(), &mut e), UqStatus::Ok);
        assert_eq!(uq_drawing_validate(e), UqStatus::InvalidDrawing);
        assert!(!last_error().is_empty());
        let mut pi = [0usize; 2];
        assert_eq!(
            uq_drawing_permutation(e, pi.as_mut_ptr(), 2),
            UqStatus::InvalidDrawing
        );
        uq_drawing_free(e);
        uq_drawing_free(d);
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/uquad.h")
}

#[test]
fn header_declares_every_export() {
    let h = std::fs::read_to_string(header()).unwrap();
    let src =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .split("extern \"C\" fn ")
        .skip(1)
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(
            h.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
    assert!(h.contains("typedef struct UqFamily UqFamily;"));
    assert!(h.contains("UQ_STATUS_NOT_ST_PLANAR = 4"));
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "uquad.h"

int main(void) {
    size_t pi[3] = {2, 1, 0};
    UqFamily *f = NULL;
    if (uq_family_from_permutation(pi, 3, &f) != UQ_STATUS_OK) return 1;
    UqDrawing *d = NULL;
    if (uq_draw(f, true, &d) != UQ_STATUS_OK) return 2;
    char *svg = NULL;
    if (uq_drawing_svg(d, 10, true, &svg) != UQ_STATUS_OK) return 3;
    if (strncmp(svg, "<svg", 4) != 0) return 4;
    uq_string_free(svg);
    printf("%zu %zu\n", uq_family_state_count(f), uq_drawing_vertex_count(d));
    uq_drawing_free(d);
    uq_family_free(f);
    if (uq_family_parse("nonsense = ", &f) != UQ_STATUS_PARSE) return 5;
    if (strlen(uq_last_error()) == 0) return 6;
    return 0;
}
"#;

/// Directory holding the library artifacts built for this test run.
fn artifact_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = artifact_dir().join("libuquad_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let exe = dir.path().join("main");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-I"])
        .arg(header().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "7 7\n");
}
