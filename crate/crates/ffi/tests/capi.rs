use std::ffi::{CStr, CString};
use std::ptr;

use sandwich_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = sw_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn solve_round_trip() {
    unsafe {
        let mut inst = ptr::null_mut();
        let src = c("p swi 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
        assert_eq!(sw_instance_parse(src.as_ptr(), &mut inst), SwStatus::Ok);
        assert_eq!(sw_instance_vertex_count(inst), 4);

        let mut res = ptr::null_mut();
        let cls = c("split");
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Auto, 0, &mut res), SwStatus::Ok);
        assert!(sw_result_is_yes(res));
        let k = sw_result_edge_count(res);
        let mut buf = vec![0u32; 2 * k];
        assert_eq!(sw_result_edges(res, buf.as_mut_ptr(), k), SwStatus::Ok);
        for pair in buf.chunks(2) {
            assert!(pair[0] < pair[1] && pair[1] < 4);
        }
        if k > 0 {
            assert_eq!(sw_result_edges(res, buf.as_mut_ptr(), k - 1), SwStatus::Size);
        }
        sw_result_free(res);

        let mut text = ptr::null_mut();
        assert_eq!(sw_instance_emit(inst, &mut text), SwStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "p swi 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
        sw_string_free(text);
        sw_instance_free(inst);
    }
}

#[test]
fn no_answer_and_pair_arrays() {
    unsafe {
        let forced = [0u32, 1, 1, 2, 2, 3, 0, 3];
        let forbidden = [0u32, 2, 1, 3];
        let mut inst = ptr::null_mut();
        assert_eq!(sw_instance_new(4, forced.as_ptr(), 4, forbidden.as_ptr(), 2, &mut inst), SwStatus::Ok);
        let mut res = ptr::null_mut();
        let cls = c("split");
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Oracle, 0, &mut res), SwStatus::Ok);
        assert!(!sw_result_is_yes(res));
        assert_eq!(sw_result_edge_count(res), 0);
        sw_result_free(res);
        sw_instance_free(inst);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut inst = ptr::null_mut();
        let bad = c("p swi 2\ne 1 2\nf 1 2\n");
        assert_eq!(sw_instance_parse(bad.as_ptr(), &mut inst), SwStatus::Overlap);
        assert!(last_error().contains("forced and forbidden"));
        let bad = c("p swi 2\ne 1 5\n");
        assert_eq!(sw_instance_parse(bad.as_ptr(), &mut inst), SwStatus::Parse);
        assert!(last_error().contains("line 2"));
        assert_eq!(sw_instance_parse(ptr::null(), &mut inst), SwStatus::NullPointer);
        let ok = c("p swi 2\n");
        assert_eq!(sw_instance_parse(ok.as_ptr(), ptr::null_mut()), SwStatus::NullPointer);

        let pairs = [0u32, 0];
        assert_eq!(sw_instance_new(2, pairs.as_ptr(), 1, ptr::null(), 0, &mut inst), SwStatus::Range);

        assert_eq!(sw_instance_parse(ok.as_ptr(), &mut inst), SwStatus::Ok);
        let mut res = ptr::null_mut();
        let cls = c("nope");
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Auto, 0, &mut res), SwStatus::Invalid);
        let cls = c("permutation");
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Poly, 0, &mut res), SwStatus::Invalid);
        sw_instance_free(inst);
        sw_instance_free(ptr::null_mut());
        sw_result_free(ptr::null_mut());
    }
}

#[test]
fn budget_status() {
    unsafe {
        let mut inst = ptr::null_mut();
        let src = c("p swi 6\n");
        assert_eq!(sw_instance_parse(src.as_ptr(), &mut inst), SwStatus::Ok);
        // a full search needs one node per open pair
        let cls = c("permutation");
        let mut res = ptr::null_mut();
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Search, 3, &mut res), SwStatus::Budget);
        assert!(last_error().contains('3'));
        assert_eq!(sw_solve(inst, cls.as_ptr(), SwMethod::Search, 0, &mut res), SwStatus::Ok);
        assert!(sw_result_is_yes(res));
        sw_result_free(res);
        sw_instance_free(inst);
    }
}

#[test]
fn recognize_and_siggers() {
    unsafe {
        let mut yes = false;
        let g = c("p gr 4\ne 1 2\ne 1 3\ne 1 4\n");
        let cls = c("line-bip");
        assert_eq!(sw_recognize(g.as_ptr(), cls.as_ptr(), &mut yes), SwStatus::Ok);
        assert!(!yes);
        let cls = c("threshold");
        assert_eq!(sw_recognize(g.as_ptr(), cls.as_ptr(), &mut yes), SwStatus::Ok);
        assert!(yes);

        let mut s = ptr::null_mut();
        let k = c("p fst 2\nr B 2\nr R 2\nt B 0 1\nt B 1 0\nt B 1 1\nt R 0 0\nt R 0 1\nt R 1 0\n");
        assert_eq!(sw_structure_parse(k.as_ptr(), &mut s), SwStatus::Ok);
        assert_eq!(sw_has_siggers(s, &mut yes), SwStatus::Ok);
        assert!(yes);
        sw_structure_free(s);

        let k3 = c("p fst 3\nr E 2\nt E 0 1\nt E 1 0\nt E 0 2\nt E 2 0\nt E 1 2\nt E 2 1\n");
        assert_eq!(sw_structure_parse(k3.as_ptr(), &mut s), SwStatus::Ok);
        assert_eq!(sw_has_siggers(s, &mut yes), SwStatus::Ok);
        assert!(!yes);
        sw_structure_free(s);
    }
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sandwich.h")).unwrap();
    for name in [
        "sw_last_error",
        "sw_instance_parse",
        "sw_instance_new",
        "sw_instance_free",
        "sw_instance_vertex_count",
        "sw_instance_emit",
        "sw_string_free",
        "sw_solve",
        "sw_result_is_yes",
        "sw_result_edge_count",
        "sw_result_edges",
        "sw_result_free",
        "sw_recognize",
        "sw_structure_parse",
        "sw_structure_free",
        "sw_has_siggers",
        "SW_STATUS_BUDGET",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
