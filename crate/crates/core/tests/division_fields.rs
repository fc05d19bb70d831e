use brauer_core::curve::Curve;
use brauer_core::galois::{choose_sigma_basis, division_field};
use brauer_core::modl::{symbol_length_bound, BoundRule, Classification};
use exact::{cyclotomic_field, Field};

#[test]
fn five_torsion_of_x3_plus_10() {
    let k = cyclotomic_field(5).unwrap();
    let c = Curve::new(&k, k.zero(), k.from_i64(10)).unwrap();
    let df = division_field(&c, 5).unwrap();
    assert_eq!(df.degree(), 4);
    assert_eq!(df.torsion.len(), 24);
    assert!(df.automorphisms[0].is_identity());
    let (sigma, rep) = choose_sigma_basis(&df).unwrap();
    // σ of order 4 in rational canonical form [[0, -1], [1, 0]]
    let m = rep.matrix_of(&df, &sigma).unwrap();
    assert_eq!(m.entries(), [0, 4, 1, 0]);
    assert_eq!(df.act(&sigma, &rep.basis.0), rep.basis.1);
    assert!((1..5).contains(&rep.pairing_exponent));
    assert_eq!(rep.image.order(), 4);
    assert_eq!(rep.image.classification, Classification::SplitCartan);
    assert!(rep.image.containment.normalizer_nonsplit && rep.image.containment.normalizer_split);
    let b = symbol_length_bound(&rep.image, 5).unwrap();
    assert_eq!((b.bound, b.rule, b.subgroup_order), (2, BoundRule::Subfield, Some(2)));
}

#[test]
fn three_torsion_of_twists() {
    let k = cyclotomic_field(3).unwrap();
    for (a6, degree) in [(16, 1), (128, 2)] {
        let c = Curve::new(&k, k.zero(), k.from_i64(a6)).unwrap();
        let df = division_field(&c, 3).unwrap();
        assert_eq!(df.degree(), degree, "a6 = {a6}");
        for p in &df.torsion {
            assert!(df.lifted.contains(p));
            assert!(df.lifted.scalar_mul(3, p).is_infinity());
        }
    }
}
