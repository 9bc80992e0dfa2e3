use bisyz::fixtures;
use bisyz::resolution::{
    build_resolution, build_resolution_in, colon_dims_mismatch, normal_form, quotient_gens_nongeneric,
    verify_complex, FreeModule, GradedMap, DEFAULT_BOX,
};
use bisyz::{BiDeg, BiHomPoly};

#[test]
fn colon_ideals_by_dimension() {
    for p in [fixtures::standard_example(), fixtures::nongeneric()] {
        let nf = normal_form(&p).unwrap();
        let j = quotient_gens_nongeneric(&nf).unwrap();
        assert_eq!(colon_dims_mismatch(&j.gens[..3], &nf.g0.mul(&nf.g1), BiDeg::new(5, 4)), None);
        // g0 alone is not enough: (K : g0) also contains g1 w
        assert!(colon_dims_mismatch(&j.gens[..3], &nf.g0, BiDeg::new(5, 4)).is_some());
    }
    let r = build_resolution_in(&fixtures::generic(), DEFAULT_BOX).unwrap();
    let q = &r.quotient.gens;
    assert_eq!(colon_dims_mismatch(&q[..4], &q[4], BiDeg::new(5, 4)), None);
}

#[test]
fn corrupted_shape_is_reported() {
    let p = fixtures::standard_example();
    let cx = build_resolution(&p).unwrap();
    let d4 = cx.d(4);
    // relabel M4 = R(-6,-3) as R(-6,-4) and multiply its column by w
    let source = FreeModule::new(vec![BiDeg::new(6, 4)]);
    let entries = d4.entries().iter().map(|row| vec![row[0].mul(&BiHomPoly::w())]).collect();
    let bad = GradedMap::new(source, d4.target().clone(), entries).unwrap();
    let bad = cx.with_map(4, bad).unwrap();
    let report = verify_complex(&bad, &p, DEFAULT_BOX);
    assert!(report.check("d^2 = 0").unwrap().passed);
    let shape = report.check("shape").unwrap();
    assert!(!shape.passed);
    assert!(shape.detail.contains("(6,4)"), "{}", shape.detail);
    assert_eq!(report.check("exactness").unwrap().first_failure, Some(BiDeg::new(6, 3)));
}

#[test]
fn dropped_generator_breaks_exactness() {
    let p = fixtures::generic();
    let cx = build_resolution(&p).unwrap();
    let d4 = cx.d(4);
    let zero = GradedMap::zero(d4.source().clone(), d4.target().clone());
    let bad = cx.with_map(4, zero).unwrap();
    let report = verify_complex(&bad, &p, DEFAULT_BOX);
    assert!(!report.passed());
    assert_eq!(report.check("exactness").unwrap().first_failure, Some(BiDeg::new(6, 3)));
    assert!(report.check("Euler characteristic").unwrap().passed);
}
