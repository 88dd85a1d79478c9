//! Values stated in the literature, checked against the library.

use num_bigint::BigUint;
use qcox_core::factor::{count_reduced, enumerate_reduced, hurwitz_number, regular_fred_check_dn};
use qcox_core::hurwitz::is_hurwitz_transitive_on_reduced;
use qcox_core::lengths::{full_refl_length, refl_length};
use qcox_core::pqc::{characterization_check, count_rgs_formula, enumerate_rgs, Route};
use qcox_core::weyl::{abc_degree, pairing_det, pdet_abs, WeylType};
use qcox_core::{Element, GroupParams};
use num_rational::BigRational;

fn el(s: &str) -> Element {
    s.parse().unwrap()
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[test]
fn colored_diagonal_has_length_three() {
    assert_eq!(refl_length(&el("G(3,1,3):[1 2 3;1,1,1]")).unwrap(), 3);
}

#[test]
fn identity_full_length_in_mmn() {
    for (m, n) in [(2, 2), (2, 3), (3, 3), (4, 2), (5, 2)] {
        let id = GroupParams::new(m, m, n).unwrap().identity();
        assert_eq!(full_refl_length(&id), 2 * n, "G({m},{m},{n})");
    }
}

#[test]
fn reduced_factorization_counts() {
    assert_eq!(enumerate_reduced(&el("G(1,1,3):[2 3 1;0,0,0]")).unwrap().len(), 3);
    assert_eq!(count_reduced(&el("G(1,1,4):[2 3 4 1;0,0,0,0]")).unwrap(), big(16));
    assert_eq!(count_reduced(&el("G(2,1,2):[2 1;1,0]")).unwrap(), big(4));
    assert_eq!(count_reduced(&el("G(3,1,3):[2 3 1;1,0,0]")).unwrap(), big(27));
    assert_eq!(count_reduced(&el("G(5,5,2):[1 2;1,4]")).unwrap(), big(5));
    assert_eq!(count_reduced(&el("G(2,2,4):[2 1 4 3;1,0,1,0]")).unwrap(), big(192));
}

#[test]
fn denes() {
    for n in 1..=7u64 {
        assert_eq!(hurwitz_number(&[n as usize]).unwrap(), BigUint::from(n).pow((n as u32).saturating_sub(2)));
    }
}

#[test]
fn coxeter_orbits_are_transitive() {
    for n in 2..=5 {
        let p = GroupParams::symmetric(n).unwrap();
        let c = Element::new(p, (0..n).map(|k| (k + 1) % n).collect(), vec![0; n]).unwrap();
        assert!(is_hurwitz_transitive_on_reduced(&c, 100_000).unwrap());
    }
}

#[test]
fn relative_generating_sets() {
    let qc = el("G(3,1,2):[2 1;1,0]");
    assert_eq!(enumerate_rgs(&qc, Route::Both, 1000).unwrap(), vec![Vec::new()]);
    let t = el("G(1,1,3):[2 1 3;0,0,0]");
    assert_eq!(count_rgs_formula(&t).unwrap(), big(2));
    assert_eq!(enumerate_rgs(&t, Route::Both, 1000).unwrap().len(), 2);
}

#[test]
fn symmetric_group_is_all_pqc() {
    for g in GroupParams::symmetric(4).unwrap().elements(100).unwrap() {
        let v = characterization_check(&g, 100).unwrap();
        assert!(v.is_pqc && v.all_agree(), "{g}");
    }
}

#[test]
fn connection_indices() {
    for (name, index) in [("A2", 3), ("A3", 4), ("D4", 4), ("B5", 2)] {
        let ty: WeylType = name.parse().unwrap();
        assert_eq!(ty.connection_index(), index);
        assert_eq!(pairing_det(&ty.simple_reflections(), ty).unwrap().unsigned_abs(), index);
    }
    let b3: WeylType = "B3".parse().unwrap();
    assert_eq!(pdet_abs(&b3.coxeter_element(), b3).unwrap(), 2);
    assert_eq!(abc_degree("A2".parse().unwrap()), big(3));
}

#[test]
fn regular_delta() {
    let d4 = regular_fred_check_dn(4, true).unwrap();
    assert_eq!(d4.delta, BigRational::from_integer(2.into()));
    assert_eq!(d4.fred_enumerated, Some(big(192)));
    assert_eq!(regular_fred_check_dn(8, false).unwrap().delta, BigRational::from_integer(4.into()));
}
