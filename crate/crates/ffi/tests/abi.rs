use std::ffi::{CStr, CString};
use std::ptr;

use packtriple_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(pt_last_error_message()) }.to_string_lossy().into_owned()
}

fn parse(text: &str) -> *mut PtTriple {
    let c = CString::new(text).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { pt_triple_parse(c.as_ptr(), &mut t) }, PT_OK);
    t
}

#[test]
fn build_solve_and_check_a_triple() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(pt_triple_new(3, &mut t), PT_OK);
        assert_eq!(pt_triple_add_edge(t, PT_GRAPH_G1, 0, 1), PT_OK);
        assert_eq!(pt_triple_add_edge(t, PT_GRAPH_G2, 1, 2), PT_OK);
        assert_eq!(pt_triple_add_edge(t, PT_GRAPH_YELLOW, 0, 0), PT_OK);
        assert_eq!(pt_triple_order(t), 3);
        for method in [PT_METHOD_BRUTE, PT_METHOD_BACKTRACK, PT_METHOD_CONSTRUCTIVE] {
            let mut perm = [usize::MAX; 3];
            assert_eq!(pt_solve(t, method, perm.as_mut_ptr(), perm.len()), PT_OK);
            let mut ok = false;
            assert_eq!(pt_is_packing(t, perm.as_ptr(), 3, &mut ok), PT_OK);
            assert!(ok);
            assert_ne!(perm[0], 0);
        }
        let mut prediction = -1;
        assert_eq!(pt_check(t, PT_THEOREM_COR8, &mut prediction), PT_OK);
        assert_eq!(prediction, PT_PREDICT_MUST_PACK);
        let mut s = ptr::null_mut();
        assert_eq!(pt_triple_to_string(t, &mut s), PT_OK);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        pt_string_free(s);
        assert!(text.starts_with("triple 3\n"));
        assert!(text.contains("g3 0 0"));
        pt_triple_free(t);
    }
}

#[test]
fn non_packing_and_error_codes() {
    unsafe {
        let fam = CString::new("BE1").unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(pt_triple_generate(fam.as_ptr(), 0, 0, 0, 0, &mut t), PT_OK);
        let n = pt_triple_order(t);
        let mut perm = vec![0usize; n];
        assert_eq!(pt_solve(t, PT_METHOD_BACKTRACK, perm.as_mut_ptr(), n), PT_NO_PACKING);
        assert_eq!(pt_solve(t, PT_METHOD_BACKTRACK, perm.as_mut_ptr(), n - 1), PT_ERR_BUFFER);
        assert_eq!(pt_solve(t, 99, perm.as_mut_ptr(), n), PT_ERR_INVALID);
        let mut prediction = -1;
        assert_eq!(pt_check(t, PT_THEOREM_BE, &mut prediction), PT_OK);
        assert_eq!(prediction, PT_PREDICT_EXCEPTION_NO_PACK);
        assert_eq!(pt_triple_add_edge(t, PT_GRAPH_G1, 0, 0), PT_ERR_INVALID);
        assert!(!last_error().is_empty());
        pt_triple_free(t);

        let bad = CString::new("triple 2\ng1 0 5\n").unwrap();
        let mut t = ptr::null_mut();
        assert_eq!(pt_triple_parse(bad.as_ptr(), &mut t), PT_ERR_PARSE);
        assert!(t.is_null());
        assert!(last_error().starts_with("2:"), "{}", last_error());

        let big = parse("triple 11\n");
        let mut perm = [0usize; 11];
        assert_eq!(pt_solve(big, PT_METHOD_BRUTE, perm.as_mut_ptr(), 11), PT_ERR_GUARD);
        pt_triple_free(big);

        assert_eq!(pt_triple_order(ptr::null()), 0);
        assert_eq!(pt_solve(ptr::null(), PT_METHOD_BRUTE, perm.as_mut_ptr(), 1), PT_ERR_NULL);
        assert_eq!(pt_triple_parse(ptr::null(), &mut t), PT_ERR_NULL);
        pt_triple_free(ptr::null_mut());
        pt_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/packtriple.h")).unwrap();
    for name in [
        "pt_triple_parse",
        "pt_triple_new",
        "pt_triple_add_edge",
        "pt_triple_generate",
        "pt_triple_free",
        "pt_solve",
        "pt_is_packing",
        "pt_check",
        "pt_last_error_message",
        "typedef struct PtTriple PtTriple",
        "PT_ERR_PANIC",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
