use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use manin_ffi::*;

fn last_error() -> Option<String> {
    let p = manin_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn algebra_lifecycle() {
    let types = CString::new("A1, A2").unwrap();
    let mut alg = ptr::null_mut();
    unsafe {
        assert_eq!(manin_algebra_new(types.as_ptr(), 1, &mut alg), ManinStatus::Ok);
        assert!(last_error().is_none());
        assert_eq!(manin_algebra_dim(alg), 3 + 8 + 1);
        assert_eq!(manin_algebra_rank(alg), 1 + 2 + 1);
        let mut s = ptr::null_mut();
        assert_eq!(manin_algebra_describe(alg, &mut s), ManinStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_string();
        manin_string_free(s);
        assert_eq!(text, "A1xA2 + C^1");
        manin_algebra_free(alg);
        assert_eq!(manin_algebra_dim(ptr::null()), 0);
        manin_algebra_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_reported() {
    let mut alg = ptr::null_mut();
    unsafe {
        let bad = CString::new("B2").unwrap();
        assert_eq!(manin_algebra_new(bad.as_ptr(), 0, &mut alg), ManinStatus::InvalidInput);
        assert!(alg.is_null());
        assert!(last_error().is_some());
        assert_eq!(manin_algebra_new(ptr::null(), 0, &mut alg), ManinStatus::NullPointer);
        assert!(last_error().unwrap().contains("types"));
        let invalid = [0xffu8, 0];
        assert_eq!(manin_algebra_new(invalid.as_ptr().cast(), 0, &mut alg), ManinStatus::InvalidUtf8);
        // a successful call clears the message
        let ok = CString::new("A1").unwrap();
        assert_eq!(manin_algebra_new(ok.as_ptr(), 0, &mut alg), ManinStatus::Ok);
        assert!(last_error().is_none());
        manin_algebra_free(alg);
    }
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/scenarios").join(name)
}

#[test]
fn scenarios_run_through_the_abi() {
    for (name, code) in [("iwasawa_sl2.json", 0), ("broken_condition_2.json", 1), ("lambda_zero.json", 3)] {
        let text = CString::new(std::fs::read_to_string(scenario(name)).unwrap()).unwrap();
        let mut report = ptr::null_mut();
        let mut exit = -1;
        unsafe {
            assert_eq!(manin_run_scenario(text.as_ptr(), false, &mut report, &mut exit), ManinStatus::Ok);
            assert_eq!(exit, code, "{name}");
            let json: serde_json::Value = serde_json::from_str(CStr::from_ptr(report).to_str().unwrap()).unwrap();
            assert_eq!(json["format"], "manin-report/1");
            assert_eq!(json["exit_code"], code);
            manin_string_free(report);
        }
    }
    let junk = CString::new("{").unwrap();
    let (mut report, mut exit) = (ptr::null_mut(), 0);
    unsafe {
        assert_eq!(manin_run_scenario(junk.as_ptr(), false, &mut report, &mut exit), ManinStatus::Ok);
        assert_eq!(exit, 2);
        manin_string_free(report);
        assert_eq!(manin_run_scenario(junk.as_ptr(), false, ptr::null_mut(), &mut exit), ManinStatus::NullPointer);
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/manin.h")
}

#[test]
fn header_declares_the_abi() {
    let h = std::fs::read_to_string(header()).unwrap();
    for f in [
        "manin_algebra_new",
        "manin_algebra_free",
        "manin_algebra_dim",
        "manin_algebra_rank",
        "manin_algebra_describe",
        "manin_run_scenario",
        "manin_string_free",
        "manin_last_error_message",
        "MANIN_STATUS_INVALID_INPUT = 3",
    ] {
        assert!(h.contains(f), "missing {f}");
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "manin.h"

int main(int argc, char **argv) {
    ManinAlgebra *alg = NULL;
    if (manin_algebra_new("A1,A1", 0, &alg) != MANIN_STATUS_OK) return 10;
    if (manin_algebra_dim(alg) != 6) return 11;
    manin_algebra_free(alg);
    if (manin_algebra_new("Z9", 0, &alg) != MANIN_STATUS_INVALID_INPUT) return 12;
    if (manin_last_error_message() == NULL) return 13;

    FILE *f = fopen(argv[1], "rb");
    if (!f) return 14;
    static char buf[1 << 16];
    size_t n = fread(buf, 1, sizeof buf - 1, f);
    fclose(f);
    buf[n] = 0;
    char *report = NULL;
    int32_t code = -1;
    if (manin_run_scenario(buf, true, &report, &code) != MANIN_STATUS_OK) return 15;
    if (code != 0 || strstr(report, "manin-report/1") == NULL) return 16;
    manin_string_free(report);
    return 0;
}
"#;

/// Compiles a C client against the header and the static library.
#[test]
fn c_client_links_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("client.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    // the test binary lives in target/<profile>/deps, the static library one level up
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap();
    let staticlib = lib_dir.join("libmanin_ffi.a");
    assert!(staticlib.exists(), "{} not built", staticlib.display());
    let bin = dir.path().join("client");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).arg(scenario("iwasawa_sl2.json")).status().unwrap();
    assert_eq!(out.code(), Some(0));
}
