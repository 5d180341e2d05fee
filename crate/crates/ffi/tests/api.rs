use std::ffi::{c_char, CStr, CString};
use std::ptr;

use chowcalc_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { chowcalc_string_free(s) };
    text
}

fn last_error() -> String {
    let p = chowcalc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn parse(csv: &str, dim: usize) -> *mut ChowcalcClass {
    let csv = CString::new(csv).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chowcalc_class_parse(csv.as_ptr(), dim, &mut out) }, ChowcalcStatus::Ok);
    out
}

fn render(class: *const ChowcalcClass, format: ChowcalcFormat) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chowcalc_class_render(class, format, &mut out) }, ChowcalcStatus::Ok);
    take_string(out)
}

#[test]
fn quadric_hyperplane_milnor_class() {
    unsafe {
        let mut line = ptr::null_mut();
        assert_eq!(chowcalc_segre_linear_subspace(1, 4, &mut line), ChowcalcStatus::Ok);
        assert_eq!(chowcalc_class_dim(line), 4);
        assert_eq!(render(line, ChowcalcFormat::Machine), "0,0,0,1,-3");

        let smooth = [1u32];
        let mut raw = ptr::null_mut();
        let mut signed = ptr::null_mut();
        assert_eq!(chowcalc_milnor_ci(smooth.as_ptr(), 1, 2, line, false, &mut raw), ChowcalcStatus::Ok);
        assert_eq!(chowcalc_milnor_ci(smooth.as_ptr(), 1, 2, line, true, &mut signed), ChowcalcStatus::Ok);
        assert_eq!(render(raw, ChowcalcFormat::Machine), "0,0,0,-1,0");
        assert_eq!(render(signed, ChowcalcFormat::Text), "1[P^1]");
        assert!(chowcalc_last_error().is_null());

        let degrees = [1u32, 2];
        let mut fulton = ptr::null_mut();
        assert_eq!(chowcalc_fulton_ci(degrees.as_ptr(), 2, 4, &mut fulton), ChowcalcStatus::Ok);
        assert_eq!(render(fulton, ChowcalcFormat::Machine), "0,0,2,4,4");

        let mut segre = ptr::null_mut();
        assert_eq!(chowcalc_segre_ci(degrees.as_ptr(), 2, 4, &mut segre), ChowcalcStatus::Ok);
        assert_eq!(render(segre, ChowcalcFormat::Machine), "0,0,2,-6,14");

        let csm = parse("0,0,2,5,4", 4);
        let mut chi = ptr::null_mut();
        assert_eq!(chowcalc_euler(csm, &mut chi), ChowcalcStatus::Ok);
        assert_eq!(take_string(chi), "4");

        for c in [line, raw, signed, fulton, segre, csm] {
            chowcalc_class_free(c);
        }
    }
}

#[test]
fn cubic_union_round_trip() {
    unsafe {
        let milnor = parse("0,0,2,-4,10", 4);
        let mut segre = ptr::null_mut();
        assert_eq!(chowcalc_invert_milnor(milnor, 3, &mut segre), ChowcalcStatus::Ok);
        assert_eq!(render(segre, ChowcalcFormat::Text), "2[P^2] - 4[P^1]");

        let mut back = ptr::null_mut();
        assert_eq!(chowcalc_milnor_hypersurface(3, segre, &mut back), ChowcalcStatus::Ok);
        let mut equal = false;
        assert_eq!(chowcalc_class_equal(back, milnor, &mut equal), ChowcalcStatus::Ok);
        assert!(equal);

        let mut csm = ptr::null_mut();
        assert_eq!(chowcalc_csm_hypersurface(3, segre, &mut csm), ChowcalcStatus::Ok);
        assert_eq!(render(csm, ChowcalcFormat::Machine), "0,3,8,8,4");

        for c in [milnor, segre, back, csm] {
            chowcalc_class_free(c);
        }
    }
}

#[test]
fn calculus_entry_points() {
    unsafe {
        let coeffs = [1i64, 2, 3];
        let mut a = ptr::null_mut();
        assert_eq!(chowcalc_class_from_ints(coeffs.as_ptr(), 3, 2, &mut a), ChowcalcStatus::Ok);
        let mut d = ptr::null_mut();
        assert_eq!(chowcalc_dual(a, &mut d), ChowcalcStatus::Ok);
        assert_eq!(render(d, ChowcalcFormat::Machine), "1,-2,3");

        // (1 + 2H + 3H^2) ⊗ O(1) = 1 + 2H/(1+H) + 3H^2/(1+H)^2 = 1 + 2H + H^2
        let mut t = ptr::null_mut();
        assert_eq!(chowcalc_tensor_line(a, 1, &mut t), ChowcalcStatus::Ok);
        assert_eq!(render(t, ChowcalcFormat::Machine), "1,2,1");

        let mut q = ptr::null_mut();
        assert_eq!(chowcalc_class_coefficient(t, 1, &mut q), ChowcalcStatus::Ok);
        assert_eq!(take_string(q), "2");

        let half = parse("1/2,-3/4", 1);
        assert_eq!(render(half, ChowcalcFormat::Machine), "1/2,-3/4");

        for c in [a, d, t, half] {
            chowcalc_class_free(c);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("1/0").unwrap();
        assert_eq!(chowcalc_class_parse(bad.as_ptr(), 2, &mut out), ChowcalcStatus::Parse);
        assert!(out.is_null());
        assert!(!last_error().is_empty());

        let long = CString::new("1,2,3,4").unwrap();
        assert_eq!(chowcalc_class_parse(long.as_ptr(), 2, &mut out), ChowcalcStatus::DimensionMismatch);

        assert_eq!(chowcalc_class_parse(ptr::null(), 2, &mut out), ChowcalcStatus::NullPointer);
        assert!(last_error().contains("csv"));
        assert_eq!(chowcalc_dual(ptr::null(), &mut out), ChowcalcStatus::NullPointer);

        let a = parse("1,1", 1);
        let b = parse("1,1", 2);
        let mut eq = true;
        assert_eq!(chowcalc_class_equal(a, b, &mut eq), ChowcalcStatus::Ok);
        assert!(!eq);
        assert_eq!(chowcalc_class_dim(ptr::null()), 0);

        assert_eq!(chowcalc_segre_linear_subspace(4, 4, &mut out), ChowcalcStatus::InvalidArgument);
        let mut s = ptr::null_mut();
        assert_eq!(chowcalc_class_coefficient(a, 2, &mut s), ChowcalcStatus::InvalidArgument);
        assert!(s.is_null());

        let zero = parse("0,1", 1);
        let degrees = [1u32, 1];
        assert_eq!(
            chowcalc_milnor_ci(degrees.as_ptr(), 2, 1, zero, false, &mut out),
            ChowcalcStatus::InvalidArgument
        );

        let ok = CString::new("-3/2").unwrap();
        assert_eq!(chowcalc_rational_validate(ok.as_ptr()), ChowcalcStatus::Ok);
        let junk = CString::new("x").unwrap();
        assert_eq!(chowcalc_rational_validate(junk.as_ptr()), ChowcalcStatus::Parse);

        chowcalc_class_free(a);
        chowcalc_class_free(b);
        chowcalc_class_free(zero);
        chowcalc_class_free(ptr::null_mut());
        chowcalc_string_free(ptr::null_mut());
    }
}

const CI: &str = "kind = \"global_ci\"\ndegrees = [1, 2]\n[ambient]\ndim = 4\n[singular_segre]\nkind = \"linear_subspace\"\ndim = 1\n";

#[test]
fn scenarios_match_the_cli() {
    let toml = CString::new(CI).unwrap();
    unsafe {
        let mut out = ptr::null_mut();
        let mut flags = false;
        let status = chowcalc_scenario_run(
            toml.as_ptr(),
            ChowcalcCommand::Milnor,
            ChowcalcFormat::Machine,
            &mut out,
            &mut flags,
        );
        assert_eq!(status, ChowcalcStatus::Ok);
        assert!(flags);
        assert_eq!(take_string(out), "milnor_raw: 0,0,0,-1,0\nmilnor_signed: 0,0,0,1,0\n");

        assert_eq!(
            chowcalc_scenario_run(toml.as_ptr(), ChowcalcCommand::Euler, ChowcalcFormat::Text, &mut out, ptr::null_mut()),
            ChowcalcStatus::Ok
        );
        assert_eq!(take_string(out), "4\n");

        let mut flags = false;
        assert_eq!(
            chowcalc_scenario_run(toml.as_ptr(), ChowcalcCommand::CheckIdentities, ChowcalcFormat::Text, &mut out, &mut flags),
            ChowcalcStatus::Ok
        );
        assert!(flags);
        assert!(take_string(out).contains("identity_2_1: true"));

        assert_eq!(
            chowcalc_scenario_run(toml.as_ptr(), ChowcalcCommand::InvertMilnor, ChowcalcFormat::Text, &mut out, ptr::null_mut()),
            ChowcalcStatus::Unsupported
        );
        assert!(out.is_null());

        let broken = CString::new(CI.replace("[1, 2]", "[0]")).unwrap();
        assert_eq!(
            chowcalc_scenario_run(broken.as_ptr(), ChowcalcCommand::Milnor, ChowcalcFormat::Text, &mut out, ptr::null_mut()),
            ChowcalcStatus::Parse
        );
        assert!(last_error().contains("degrees[0]"));
    }
}

#[test]
fn golden_checks_pass() {
    unsafe {
        let mut out = ptr::null_mut();
        let mut passed = false;
        assert_eq!(chowcalc_verify_golden(&mut out, &mut passed), ChowcalcStatus::Ok);
        assert!(passed);
        assert!(take_string(out).ends_with("16/16 passed\n"));
    }
}

#[test]
fn errors_are_per_thread() {
    let bad = CString::new("q").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { chowcalc_class_parse(bad.as_ptr(), 1, &mut out) }, ChowcalcStatus::Parse);
    std::thread::spawn(|| assert!(chowcalc_last_error().is_null())).join().unwrap();
    assert!(!chowcalc_last_error().is_null());
}
