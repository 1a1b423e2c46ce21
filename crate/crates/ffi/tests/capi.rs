use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ctz_ffi::*;

fn parse(text: &str) -> *mut CtTransposition {
    let c = CString::new(text).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { ct_transposition_parse(c.as_ptr(), &mut t) }, CtStatus::Ok);
    t
}

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ct_string_free(s) };
    text
}

#[test]
fn transposition_round_trip() {
    let t = parse(" 1(2) , 0(4) ");
    assert_eq!(take(unsafe { ct_transposition_to_string(t) }), "0(4),1(2)");
    assert_eq!(unsafe { ct_transposition_is_horizontal(t) }, 0);
    let mut y = 0;
    assert_eq!(unsafe { ct_transposition_apply(t, 3, &mut y) }, CtStatus::Ok);
    assert_eq!(y, 4);
    assert_eq!(unsafe { ct_transposition_apply(t, i64::MAX, &mut y) }, CtStatus::Overflow);
    unsafe { ct_transposition_free(t) };
}

#[test]
fn errors_carry_messages() {
    let bad = CString::new("0(2)1(2)").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { ct_transposition_parse(bad.as_ptr(), &mut t) }, CtStatus::Parse);
    assert!(t.is_null());
    assert!(take(ct_last_error()).contains("0(2)1(2)"));
    assert_eq!(
        unsafe { ct_transposition_parse(ptr::null(), &mut t) },
        CtStatus::NullPointer
    );
}

#[test]
fn product_orders() {
    let (a, b) = (parse("0(2),1(2)"), parse("0(4),2(4)"));
    let (mut order, mut status) = (0u64, CtOrderStatus::Unknown);
    for m in [CtMethod::Finite, CtMethod::Graph, CtMethod::Trace] {
        let rc = unsafe { ct_product_order(a, b, m, 10_000, &mut order, &mut status) };
        assert_eq!(rc, CtStatus::Ok);
        assert_eq!((order, status), (4, CtOrderStatus::Exact));
    }
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { ct_product_order_json(a, b, CtMethod::Graph, 10_000, &mut json) },
        CtStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["order"], "4");

    let o = parse("1(2),0(4)");
    let rc = unsafe { ct_product_order(o, a, CtMethod::Finite, 10_000, &mut order, &mut status) };
    assert_eq!(rc, CtStatus::NotHorizontal);
    unsafe {
        ct_transposition_free(a);
        ct_transposition_free(b);
        ct_transposition_free(o);
    }
}

#[test]
fn permutations_and_groups() {
    let ts = [parse("0(3),1(3)"), parse("2(4),3(4)")];
    let list: Vec<*const CtTransposition> = ts.iter().map(|&t| t as *const _).collect();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { ct_horizontal_product(list.as_ptr(), 2, &mut p) }, CtStatus::Ok);
    assert_eq!(take(unsafe { ct_permutation_order_string(p) }), "6");
    let v: serde_json::Value =
        serde_json::from_str(&take(unsafe { ct_permutation_cycles_json(p) })).unwrap();
    assert_eq!(v["cycles"], serde_json::json!([[0, 1], [2, 3, 4], [9, 11, 10]]));
    let mut img = 0;
    assert_eq!(unsafe { ct_permutation_image(p, 9, &mut img) }, CtStatus::Ok);
    assert_eq!(img, 11);
    assert_eq!(unsafe { ct_permutation_image(p, 12, &mut img) }, CtStatus::InvalidArgument);

    let ks = [3usize, 4];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ct_group_from_ctk(ks.as_ptr(), 2, 0, false, 120, &mut g) }, CtStatus::Ok);
    assert_eq!(take(unsafe { ct_group_order_string(g) }), "479001600");
    let mut inside = 0;
    assert_eq!(unsafe { ct_group_contains(g, p, &mut inside) }, CtStatus::Ok);
    assert_eq!(inside, 1);

    let ks = [2usize, 3, 4, 5, 7];
    let mut big = ptr::null_mut();
    assert_eq!(
        unsafe { ct_group_from_ctk(ks.as_ptr(), ks.len(), 0, false, 120, &mut big) },
        CtStatus::ResourceLimit
    );
    unsafe {
        ct_group_free(g);
        ct_permutation_free(p);
        ts.iter().for_each(|&t| ct_transposition_free(t));
    }
}

#[test]
fn conjecture_json() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ct_conjecture_json(3, 120, &mut out) }, CtStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["N"], 6);
    assert_eq!(v["order"], "120");
    assert_eq!(v["equal"], false);
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/ctz.h");
    let lib = include_str!("../src/lib.rs");
    let mut count = 0;
    for line in lib.lines() {
        if let Some(rest) = line.split("extern \"C\" fn ").nth(1) {
            let name = rest.split('(').next().unwrap();
            assert!(header.contains(&format!("{name}(")), "{name} missing from header");
            count += 1;
        }
    }
    assert!(count >= 20);
}

/// Compiles and runs the C smoke test against the static library when a C
/// compiler is around.
#[test]
fn c_smoke_program() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libctz_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping", lib.display());
        return;
    }
    let out = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ctz_smoke");
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn which_cc() -> Result<&'static str, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok() {
            return Ok(cc);
        }
    }
    Err(())
}
