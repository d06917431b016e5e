use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hytet_ffi::*;

fn make(lengths: [f64; 6]) -> *mut HytetTetrahedron {
    let mut t = ptr::null_mut();
    let s = unsafe { hytet_tetrahedron_new(lengths.as_ptr(), &mut t) };
    assert_eq!(s, HytetStatus::Ok);
    assert!(!t.is_null());
    t
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hytet_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn regular_volume_and_angles() {
    let t = make([1.0; 6]);
    let mut v = 0.0;
    let mut err = f64::NAN;
    assert_eq!(
        unsafe { hytet_tetrahedron_volume(t, 0.0, &mut v, &mut err) },
        HytetStatus::Ok
    );
    assert!((v - 0.090_597_925_377_724_2).abs() < 1e-10, "{v}");
    assert!(err.is_finite());

    let mut vr = 0.0;
    assert_eq!(
        unsafe { hytet_volume_regular(1.0, 1e-12, &mut vr, ptr::null_mut()) },
        HytetStatus::Ok
    );
    assert!((v - vr).abs() < 1e-10);

    let mut vs = 0.0;
    assert_eq!(
        unsafe { hytet_tetrahedron_volume_sforza(t, 0.0, &mut vs, ptr::null_mut()) },
        HytetStatus::Ok
    );
    assert!((v - vs).abs() < 1e-8);

    let mut a = [0.0; 6];
    assert_eq!(unsafe { hytet_tetrahedron_angles(t, a.as_mut_ptr()) }, HytetStatus::Ok);
    let c = 1f64.cosh();
    for th in a {
        assert!((th - (c / (2.0 * c + 1.0)).acos()).abs() < 1e-12);
    }
    assert_eq!(last_error(), "");
    unsafe { hytet_tetrahedron_free(t) };
}

#[test]
fn existence_and_bounds() {
    let t = make([1.0, 1.0, 1.0, 1.0, 1.0, 3.0]);
    let (mut ok, mut deg) = (true, true);
    assert_eq!(
        unsafe { hytet_tetrahedron_exists(t, &mut ok, &mut deg) },
        HytetStatus::Ok
    );
    assert!(!ok);
    let (mut l1, mut l2) = (0.0, 0.0);
    assert_eq!(
        unsafe { hytet_tetrahedron_bounds(t, &mut l1, &mut l2) },
        HytetStatus::Ok
    );
    assert!(l1 < l2 && l2 < 3.0);

    let mut v = 0.0;
    assert_eq!(
        unsafe { hytet_tetrahedron_volume(t, 0.0, &mut v, ptr::null_mut()) },
        HytetStatus::Nonexistent
    );
    assert!(!last_error().is_empty());
    let mut a = [0.0; 6];
    assert_eq!(
        unsafe { hytet_tetrahedron_angles(t, a.as_mut_ptr()) },
        HytetStatus::Nonexistent
    );
    unsafe { hytet_tetrahedron_free(t) };
}

#[test]
fn bad_input_and_null_pointers() {
    let mut t = ptr::null_mut();
    let bad = [1.0, -1.0, 1.0, 1.0, 1.0, 1.0];
    assert_eq!(
        unsafe { hytet_tetrahedron_new(bad.as_ptr(), &mut t) },
        HytetStatus::Domain
    );
    assert!(t.is_null());
    assert!(last_error().contains("l13"), "{}", last_error());

    let nan = [1.0, 1.0, 1.0, 1.0, 1.0, f64::NAN];
    assert_eq!(
        unsafe { hytet_tetrahedron_new(nan.as_ptr(), &mut t) },
        HytetStatus::Domain
    );

    assert_eq!(
        unsafe { hytet_tetrahedron_new(ptr::null(), &mut t) },
        HytetStatus::NullPointer
    );
    let mut v = 0.0;
    assert_eq!(
        unsafe { hytet_tetrahedron_volume(ptr::null(), 0.0, &mut v, ptr::null_mut()) },
        HytetStatus::NullPointer
    );
    let t = make([1.0; 6]);
    assert_eq!(
        unsafe { hytet_tetrahedron_volume(t, 0.0, ptr::null_mut(), ptr::null_mut()) },
        HytetStatus::NullPointer
    );
    unsafe {
        hytet_tetrahedron_free(t);
        hytet_tetrahedron_free(ptr::null_mut());
    }
}

#[test]
fn monte_carlo_is_reproducible() {
    let t = make([1.0; 6]);
    let (mut a, mut b, mut se) = (0.0, 0.0, 0.0);
    assert_eq!(
        unsafe { hytet_tetrahedron_volume_monte_carlo(t, 7, 50_000, &mut a, &mut se) },
        HytetStatus::Ok
    );
    assert_eq!(
        unsafe { hytet_tetrahedron_volume_monte_carlo(t, 7, 50_000, &mut b, ptr::null_mut()) },
        HytetStatus::Ok
    );
    assert_eq!(a.to_bits(), b.to_bits());
    assert!((a - 0.090_597_925_377_724_2).abs() < 4.0 * se);
    assert_eq!(
        unsafe { hytet_tetrahedron_volume_monte_carlo(t, 7, 0, &mut a, ptr::null_mut()) },
        HytetStatus::Domain
    );
    unsafe { hytet_tetrahedron_free(t) };
}

#[test]
fn fold_is_degenerate_for_monte_carlo() {
    let t = make([1.0, 1.0, 1.0, 1.0, 1.0, 0.0]);
    let mut v = f64::NAN;
    assert_eq!(
        unsafe { hytet_tetrahedron_volume(t, 0.0, &mut v, ptr::null_mut()) },
        HytetStatus::Ok
    );
    assert_eq!(v, 0.0);
    let s = unsafe { hytet_tetrahedron_volume_monte_carlo(t, 1, 1000, &mut v, ptr::null_mut()) };
    assert_eq!(s, HytetStatus::Degenerate);
    unsafe { hytet_tetrahedron_free(t) };
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(hytet_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn header() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("hytet.h")
}

#[test]
fn header_declares_api() {
    let h = std::fs::read_to_string(header()).unwrap();
    for name in [
        "typedef struct HytetTetrahedron HytetTetrahedron;",
        "HYTET_STATUS_OK = 0",
        "HYTET_STATUS_PANIC = 7",
        "hytet_tetrahedron_new(const double *lengths, struct HytetTetrahedron **out)",
        "void hytet_tetrahedron_free(struct HytetTetrahedron *t)",
        "hytet_tetrahedron_volume_monte_carlo",
        "const char *hytet_last_error_message(void)",
    ] {
        assert!(h.contains(name), "missing {name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    assert!(cc.status.success());
    let out = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(header())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
