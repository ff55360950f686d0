use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hyperlat_ffi::*;

fn lattice(expr: &str) -> *mut HlLattice {
    let s = CString::new(expr).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hl_lattice_from_expr(s.as_ptr(), &mut out) }, HlStatus::Ok);
    out
}

#[test]
fn lattice_handles() {
    let a = lattice("U+E8(2)");
    let gram: Vec<i64> = {
        let mut rank = 0;
        unsafe { hl_lattice_rank(a, &mut rank) };
        assert_eq!(rank, 10);
        let mut buf = vec![0i64; 100];
        assert_eq!(unsafe { hl_lattice_gram(a, buf.as_mut_ptr(), buf.len()) }, HlStatus::Ok);
        buf
    };
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { hl_lattice_from_gram(gram.as_ptr(), 10, &mut b) }, HlStatus::Ok);
    let mut iso = HlIso::Unknown;
    assert_eq!(unsafe { hl_lattice_isomorphic(a, b, &mut iso) }, HlStatus::Ok);
    assert_eq!(iso, HlIso::Isomorphic);

    let c = lattice("U+E8");
    unsafe { hl_lattice_isomorphic(a, c, &mut iso) };
    assert_eq!(iso, HlIso::Distinct);

    let (mut p, mut n) = (0, 0);
    unsafe { hl_lattice_signature(a, &mut p, &mut n) };
    assert_eq!((p, n), (1, 9));
    let mut det = 0;
    unsafe { hl_lattice_det(a, &mut det) };
    assert_eq!(det, -256);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { hl_lattice_info_json(a, &mut json) }, HlStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { hl_string_free(json) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["two_elementary"]["a"], 8);

    unsafe {
        hl_lattice_free(a);
        hl_lattice_free(b);
        hl_lattice_free(c);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let bad = CString::new("U+").unwrap();
    assert_eq!(unsafe { hl_lattice_from_expr(bad.as_ptr(), &mut out) }, HlStatus::Parse);
    assert!(!hl_last_error().is_null());
    assert_eq!(unsafe { hl_lattice_from_expr(ptr::null(), &mut out) }, HlStatus::NullPointer);
    let asym = [1i64, 2, 3, 4];
    assert_eq!(unsafe { hl_lattice_from_gram(asym.as_ptr(), 2, &mut out) }, HlStatus::InvalidArgument);
    assert_eq!(unsafe { hl_lattice_rank(ptr::null(), &mut 0) }, HlStatus::NullPointer);
}

#[test]
fn vinberg_run() {
    let l = lattice("(2)+A1^2");
    let mut run = ptr::null_mut();
    assert_eq!(unsafe { hl_vinberg_run(l, ptr::null(), 0, &mut run) }, HlStatus::Ok);
    let mut count = 0;
    unsafe { hl_vinberg_root_count(run, &mut count) };
    assert!(count >= 3);
    let mut fv = false;
    unsafe { hl_vinberg_finite_volume(run, &mut fv) };
    assert!(fv);
    let mut buf = [0i64; 3];
    let mut norm = 0;
    for i in 0..count {
        assert_eq!(unsafe { hl_vinberg_root(run, i, buf.as_mut_ptr(), 3, &mut norm) }, HlStatus::Ok);
        assert!(norm < 0);
    }
    assert_eq!(unsafe { hl_vinberg_root(run, count, buf.as_mut_ptr(), 3, &mut norm) }, HlStatus::IndexOutOfRange);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { hl_vinberg_diagram_json(run, &mut json) }, HlStatus::Ok);
    unsafe {
        hl_string_free(json);
        hl_vinberg_free(run);
        hl_lattice_free(l);
    }
}

#[test]
fn verify_subset() {
    let only = CString::new("fixed-blocks").unwrap();
    let mut json = ptr::null_mut();
    let mut passed = false;
    assert_eq!(unsafe { hl_verify_json(only.as_ptr(), &mut json, &mut passed) }, HlStatus::Ok);
    assert!(passed);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(json) }.to_str().unwrap()).unwrap();
    unsafe { hl_string_free(json) };
    assert!(!v["records"].as_array().unwrap().is_empty());
}

#[test]
fn header_declares_exports() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/hyperlat.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
}

/// Compile a C program against the header and the static library.
#[test]
fn c_program_links() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // the test binary lives in target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libhyperlat_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built, skipping");
        return;
    }
    let out = std::env::temp_dir().join(format!("hyperlat_smoke_{}", std::process::id()));
    let status = Command::new(&cc)
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}: {}", run.status.code(), String::from_utf8_lossy(&run.stdout));
}
