//! Factorization over number-field towers by Trager's norm method, applied
//! one tower level at a time: the norm of a shifted polynomial down to the
//! base is factored recursively and the factors are recovered by gcds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{ExactError, Result};
use crate::field::{Field, Rationals};
use crate::modp::{primes_from, Fp};
use crate::numfield::{NfElem, NumberField};
use crate::poly::{Poly, PolyRing};
use crate::zfactor::{factor_rational, to_primitive_int};

/// A factorization `lc · ∏ f_i^{e_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub leading: NfElem,
    pub factors: Vec<(Poly<NfElem>, usize)>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiply the factorization back out.
    pub fn expand(&self, field: &NumberField) -> Poly<NfElem> {
        let ring = PolyRing::new(field.clone());
        let mut acc = ring.constant(self.leading.clone());
        for (f, e) in &self.factors {
            acc = ring.mul(&acc, &ring.pow(f, *e as u64));
        }
        acc
    }
}

pub fn to_q_poly(p: &Poly<NfElem>) -> Poly<BigRational> {
    PolyRing::new(Rationals).from_coeffs(p.coeffs().iter().map(|c| c.coords()[0].clone()).collect())
}

pub fn from_q_poly(p: &Poly<BigRational>) -> Poly<NfElem> {
    let q = NumberField::rationals();
    PolyRing::new(q.clone()).from_coeffs(p.coeffs().iter().map(|c| q.from_rational(c)).collect())
}

/// Factor a nonzero polynomial over `field`.
pub fn factor(field: &NumberField, p: &Poly<NfElem>) -> Result<Factorization> {
    let lc = p.lc().cloned().ok_or(ExactError::ZeroPolynomial)?;
    if field.is_rationals() {
        let (lc, f) = factor_rational(&to_q_poly(p));
        return Ok(Factorization {
            leading: field.from_rational(&lc),
            factors: f.into_iter().map(|(g, e)| (from_q_poly(&g), e)).collect(),
        });
    }
    let ring = PolyRing::new(field.clone());
    let mut factors = Vec::new();
    for (part, mult) in ring.squarefree_decomposition(p) {
        for g in factor_squarefree(field, &part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));
    Ok(Factorization { leading: lc, factors })
}

pub fn is_irreducible(field: &NumberField, p: &Poly<NfElem>) -> Result<bool> {
    if p.degree().unwrap_or(0) <= 1 {
        return Ok(p.degree() == Some(1));
    }
    Ok(factor(field, p)?.is_irreducible())
}

/// Distinct roots of `p` in `field`, sorted.
pub fn roots(field: &NumberField, p: &Poly<NfElem>) -> Result<Vec<NfElem>> {
    let f = factor(field, p)?;
    let mut out: Vec<NfElem> = f
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| field.neg(&g.coeffs()[0]))
        .collect();
    out.sort();
    Ok(out)
}

/// Checked field extension: `h` must be monic and irreducible over `base`.
pub fn extend(base: &NumberField, h: &Poly<NfElem>, label: &str) -> Result<NumberField> {
    let ring = PolyRing::new(base.clone());
    match h.degree() {
        None => return Err(ExactError::ZeroPolynomial),
        Some(0) => return Err(ExactError::ConstantPolynomial),
        _ => {}
    }
    if !ring.is_monic(h) {
        return Err(ExactError::NotMonic);
    }
    let f = factor(base, h)?;
    if !f.is_irreducible() {
        let factor = f.factors[0].0.clone();
        return Err(ExactError::ReduciblePolynomial { factor });
    }
    NumberField::extend_unchecked(base, h, label)
}

/// Monic irreducible factors of a squarefree polynomial over a proper
/// extension of `Q`.
fn factor_squarefree(field: &NumberField, g: &Poly<NfElem>) -> Vec<Poly<NfElem>> {
    let ring = PolyRing::new(field.clone());
    let g = ring.monic(g);
    if g.degree().unwrap_or(0) <= 1 {
        return vec![g];
    }
    if field.is_rationals() {
        let (_, f) = factor_rational(&to_q_poly(&g));
        return f.into_iter().map(|(h, _)| from_q_poly(&h)).collect();
    }
    let base = field.base().unwrap().clone();
    let theta = field.gen();
    for k in 0.. {
        let s = shift_value(k);
        let shift = field.scale_rational(&theta, &BigRational::from_integer(BigInt::from(s)));
        // gs(t) = g(t - s θ)
        let gs = ring.shift(&g, &field.neg(&shift));
        let norm = norm_poly(field, &gs);
        if !is_squarefree_over(&base, &norm) {
            continue;
        }
        let mut out = Vec::new();
        let base_factors = factor_squarefree(&base, &norm);
        if base_factors.len() == 1 {
            return vec![g];
        }
        let mut rest = gs.clone();
        for nf in base_factors {
            let lifted = PolyRing::new(field.clone())
                .from_coeffs(nf.coeffs().iter().map(|c| field.embed(&base, c)).collect());
            let h = ring.gcd(&rest, &lifted);
            if h.degree().unwrap_or(0) == 0 {
                continue;
            }
            rest = ring.div_exact(&rest, &h).expect("gcd divides");
            out.push(ring.shift(&h, &shift));
        }
        debug_assert_eq!(rest.degree(), Some(0));
        out.sort();
        return out;
    }
    unreachable!()
}

fn shift_value(k: i64) -> i64 {
    // 0, 1, -1, 2, -2, ...
    if k == 0 {
        0
    } else if k % 2 == 1 {
        (k + 1) / 2
    } else {
        -(k / 2)
    }
}

/// `N_{F/B}(g)` for `g ∈ F[t]`, by evaluation at integers and
/// interpolation over the base `B`.
pub fn norm_poly(field: &NumberField, g: &Poly<NfElem>) -> Poly<NfElem> {
    let base = field.base().expect("proper extension");
    let ring = PolyRing::new(field.clone());
    let d = (field.degree() * g.degree().expect("nonzero")) as i64;
    let xs: Vec<i64> = (0..=d).map(|i| i - d / 2).collect();
    let ys: Vec<NfElem> = xs
        .iter()
        .map(|&x| field.norm_over(base, &ring.eval(g, &field.from_i64(x))).expect("base is an ancestor"))
        .collect();
    interpolate(base, &xs, &ys)
}

/// Newton interpolation through `(xs[i], ys[i])` over a number field.
pub fn interpolate(field: &NumberField, xs: &[i64], ys: &[NfElem]) -> Poly<NfElem> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let diff = field.sub(&c[i], &c[i - 1]);
            let den = BigRational::from_integer(BigInt::from(xs[i] - xs[i - j]));
            c[i] = field.scale_rational(&diff, &den.recip());
        }
    }
    let ring = PolyRing::new(field.clone());
    let mut p = ring.constant(c[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = ring.add(&ring.mul(&p, &ring.linear(&field.from_i64(xs[i]))), &ring.constant(c[i].clone()));
    }
    p
}

/// Squarefreeness over `field`; over `Q` a modular certificate is tried
/// before falling back to an exact gcd.
pub fn is_squarefree_over(field: &NumberField, p: &Poly<NfElem>) -> bool {
    if field.is_rationals() {
        let int = to_primitive_int(&to_q_poly(p));
        let lc = int.last().unwrap().clone();
        for prime in primes_from(1_000_003).take(3) {
            let pb = BigInt::from(prime);
            if (&lc % &pb).is_zero() {
                continue;
            }
            let fp = Fp::new(prime);
            let v = fp.trim(int.iter().map(|c| ((c % &pb + &pb) % &pb).to_u64().unwrap()).collect());
            if fp.is_squarefree(&v) {
                return true;
            }
        }
        return PolyRing::new(Rationals).is_squarefree(&to_q_poly(p));
    }
    PolyRing::new(field.clone()).is_squarefree(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::cyclotomic_field;

    #[test]
    fn cyclotomic_three_splits_phi3() {
        let k = cyclotomic_field(3).unwrap();
        let ring = PolyRing::new(k.clone());
        let phi = ring.from_coeffs(vec![k.one(), k.one(), k.one()]);
        let f = factor(&k, &phi).unwrap();
        assert_eq!(f.factors.len(), 2);
        let z = k.gen();
        let mut expect = vec![ring.linear(&z), ring.linear(&k.mul(&z, &z))];
        expect.sort();
        let mut got: Vec<_> = f.factors.iter().map(|(g, _)| g.clone()).collect();
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn phi5_irreducible_over_q() {
        let q = NumberField::rationals();
        let ring = PolyRing::new(q.clone());
        let phi = ring.from_coeffs(vec![q.one(); 5]);
        assert!(is_irreducible(&q, &phi).unwrap());
    }

    #[test]
    fn reducible_extension_rejected() {
        let q = NumberField::rationals();
        let ring = PolyRing::new(q.clone());
        let h = ring.from_coeffs(vec![q.from_i64(-1), q.zero(), q.one()]);
        match extend(&q, &h, "w") {
            Err(ExactError::ReduciblePolynomial { factor }) => {
                assert_eq!(factor.degree(), Some(1));
                let r = ring.eval(&factor, &q.one());
                let r2 = ring.eval(&factor, &q.from_i64(-1));
                assert!(r.is_zero() || r2.is_zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sqrt_over_cyclotomic_five() {
        // sqrt(5) lies in Q(ζ5): (2ζ+2ζ^4+1)^2 = 5
        let k = cyclotomic_field(5).unwrap();
        let ring = PolyRing::new(k.clone());
        let h = ring.from_coeffs(vec![k.from_i64(-5), k.zero(), k.one()]);
        let r = roots(&k, &h).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert_eq!(k.mul(x, x), k.from_i64(5));
        }
    }

    #[test]
    fn factor_round_trip_in_tower() {
        let k = cyclotomic_field(3).unwrap();
        let ring_k = PolyRing::new(k.clone());
        // L = K(cbrt 2)
        let h = ring_k.from_coeffs(vec![k.from_i64(-2), k.zero(), k.zero(), k.one()]);
        let l = extend(&k, &h, "c").unwrap();
        let ring = PolyRing::new(l.clone());
        let c = l.gen();
        // t^3 - 2 splits completely over L
        let p = ring.from_coeffs(vec![l.from_i64(-2), l.zero(), l.zero(), l.one()]);
        let f = factor(&l, &p).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert_eq!(f.expand(&l), p);
        // (t^2 + c)(t^2 - c t + 1) recovers both irreducible pieces
        let a = ring.from_coeffs(vec![c.clone(), l.zero(), l.one()]);
        let b = ring.from_coeffs(vec![l.one(), l.neg(&c), l.one()]);
        let f = factor(&l, &ring.mul(&a, &b)).unwrap();
        assert_eq!(f.expand(&l), ring.mul(&a, &b));
        assert!(f.factors.iter().all(|(g, e)| *e == 1 && g.degree().unwrap() >= 1));
    }
}
