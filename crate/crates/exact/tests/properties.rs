use exact::factor::{factor, roots};
use exact::galois::{field_norm, min_poly};
use exact::numfield::rat;
use exact::power::is_lth_power;
use exact::serial::{elem_from_json, elem_to_json};
use exact::{cyclotomic_field, Field, NfElem, NumberField, PolyRing};
use proptest::prelude::*;

fn elem(k: &NumberField, coeffs: &[(i64, i64)]) -> NfElem {
    let z = k.gen();
    coeffs.iter().enumerate().fold(k.zero(), |acc, (i, &(n, d))| {
        k.add(&acc, &k.scale_rational(&k.pow(&z, i as u64), &rat(n, d)))
    })
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-50i64..=50, 1i64..=7), 4)
}

/// `Q(ζ5)(√(z+2))`, a relative quadratic extension.
fn tower() -> (NumberField, NumberField) {
    let k = cyclotomic_field(5).unwrap();
    let ring = PolyRing::new(k.clone());
    let c = k.add(&k.gen(), &k.from_i64(2));
    let h = ring.from_coeffs(vec![k.neg(&c), k.zero(), k.one()]);
    let l = NumberField::extend_unchecked(&k, &h, "m").unwrap();
    (k, l)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
        let k = cyclotomic_field(5).unwrap();
        let (a, b, c) = (elem(&k, &a), elem(&k, &b), elem(&k, &c));
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        prop_assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
        if !k.is_zero(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
        }
    }

    #[test]
    fn serialization_round_trips(a in coeffs(), b in coeffs()) {
        let (k, l) = tower();
        let x = l.add(&l.embed(&k, &elem(&k, &a)), &l.mul(&l.gen(), &l.embed(&k, &elem(&k, &b))));
        let v = elem_to_json(&l, &x);
        prop_assert_eq!(elem_from_json(&l, &v).unwrap(), x);
    }

    #[test]
    fn norm_is_multiplicative(a in coeffs(), b in coeffs()) {
        let (k, l) = tower();
        let x = l.add(&l.embed(&k, &elem(&k, &a)), &l.gen());
        let y = l.sub(&l.embed(&k, &elem(&k, &b)), &l.gen());
        let nx = field_norm(&l, &x, &k).unwrap();
        let ny = field_norm(&l, &y, &k).unwrap();
        prop_assert_eq!(field_norm(&l, &l.mul(&x, &y), &k).unwrap(), k.mul(&nx, &ny));
        // the minimal polynomial annihilates its element
        let m = min_poly(&l, &x, &k).unwrap();
        let lifted = PolyRing::new(l.clone()).from_coeffs(m.coeffs().iter().map(|c| l.embed(&k, c)).collect());
        prop_assert!(l.is_zero(&PolyRing::new(l.clone()).eval(&lifted, &x)));
    }

    #[test]
    fn lth_powers_are_detected(a in coeffs()) {
        let k = cyclotomic_field(5).unwrap();
        let a = elem(&k, &a);
        prop_assume!(!k.is_zero(&a));
        prop_assert!(is_lth_power(&k, &k.pow(&a, 5), 5).unwrap());
        // 2 generates a prime of degree 4 in Q(ζ5), so 2a⁵ is never a 5th power
        prop_assert!(!is_lth_power(&k, &k.mul(&k.from_i64(2), &k.pow(&a, 5)), 5).unwrap());
    }

    #[test]
    fn gcd_of_products(r in prop::collection::vec(coeffs(), 3)) {
        let k = cyclotomic_field(5).unwrap();
        let ring = PolyRing::new(k.clone());
        let lin: Vec<_> = r.iter().map(|c| ring.linear(&k.neg(&elem(&k, c)))).collect();
        prop_assume!(lin[0] != lin[1] && lin[1] != lin[2] && lin[0] != lin[2]);
        let a = ring.mul(&lin[0], &lin[1]);
        let b = ring.mul(&lin[0], &lin[2]);
        prop_assert_eq!(ring.gcd(&a, &b), lin[0].clone());
    }
}

#[test]
fn factorization_expands_back() {
    let k = cyclotomic_field(5).unwrap();
    let ring = PolyRing::new(k.clone());
    let z = k.gen();
    // (t² - 2)(t - 1)² (t + z + 1)
    let q = ring.from_coeffs(vec![k.from_i64(-2), k.zero(), k.one()]);
    let one = ring.linear(&k.one());
    let lin = ring.linear(&k.neg(&k.add(&z, &k.one())));
    let p = ring.product([&q, &one, &one, &lin]);
    let f = factor(&k, &p).unwrap();
    assert_eq!(f.expand(&k), p);
    let mut mult: Vec<(usize, usize)> = f.factors.iter().map(|(g, e)| (g.degree().unwrap(), *e)).collect();
    mult.sort();
    assert_eq!(mult, vec![(1, 1), (1, 2), (2, 1)]);
    let mut rs = roots(&k, &p).unwrap();
    rs.sort_by_key(|r| elem_to_json(&k, r).to_string());
    assert_eq!(rs.len(), 2);
    assert!(rs.contains(&k.one()));
    assert!(rs.contains(&k.neg(&k.add(&z, &k.one()))));
}
