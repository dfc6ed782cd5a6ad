use cohopf::catalog;
use cohopf::hopf::{drinfeld_double, dual_hopf, verify_all, verify_hopf_map, verify_quasitriangular, HopfMap};

#[test]
fn duals_and_doubles_of_catalog_algebras_verify() {
    for name in catalog::NAMES {
        let h = catalog::load(name).unwrap().to_hopf().unwrap();
        let dual = dual_hopf(&h);
        assert!(verify_all(&dual).all_passed(), "dual of {name}");
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.dim(), h.dim() * h.dim());
        let report = verify_all(&d);
        assert!(report.all_passed(), "double of {name}: {:?}", report.failures().collect::<Vec<_>>());
        assert!(verify_quasitriangular(&d).unwrap().all_passed());
        assert!(d.pivot.is_some(), "double of {name} has a pivot");
        let inc = HopfMap::double_inclusion(&h);
        assert!(verify_hopf_map(&h, &d, &inc).unwrap().all_passed(), "inclusion for {name}");
    }
}

#[test]
fn double_of_trivial_is_trivial() {
    let h = catalog::load("trivial").unwrap().to_hopf().unwrap();
    let d = drinfeld_double(&h).unwrap();
    assert_eq!(d.dim(), 1);
    assert_eq!(d.mul, h.mul);
    assert_eq!(d.comul, h.comul);
    assert_eq!(d.rmatrix, Some(vec![1.into()]));
}
