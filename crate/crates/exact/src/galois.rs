//! Minimal polynomials, relative norms, automorphisms given by the image of
//! a generator, and fixed fields of automorphism groups.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{ExactError, Result};
use crate::field::Field;
use crate::linalg;
use crate::numfield::{NfElem, NumberField};
use crate::poly::{Poly, PolyRing};

/// Minimal polynomial of `a` (an element of `field`) over the ancestor
/// `sub`, by finding the first linear dependency among powers of `a`.
pub fn min_poly(field: &NumberField, a: &NfElem, sub: &NumberField) -> Result<Poly<NfElem>> {
    let d = field.degree_over(sub)?;
    let ring = PolyRing::new(sub.clone());
    if let Some(r) = field.restrict(sub, a) {
        return Ok(ring.linear(&r));
    }
    let mut columns: Vec<Vec<NfElem>> = vec![field.coords_over(sub, &field.one())];
    let mut power = field.one();
    for k in 1..=d {
        power = field.mul(&power, a);
        let target = field.coords_over(sub, &power);
        let mat: linalg::Matrix<NfElem> =
            (0..d).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        if let Some(x) = linalg::solve(sub, &mat, &target) {
            let mut coeffs: Vec<NfElem> = x.iter().map(|c| sub.neg(c)).collect();
            coeffs.push(sub.one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Ok(ring.from_coeffs(coeffs));
        }
        columns.push(target);
    }
    unreachable!("powers beyond the degree are always dependent")
}

/// Norm of `a` down to an ancestor field.
pub fn field_norm(field: &NumberField, a: &NfElem, sub: &NumberField) -> Result<NfElem> {
    field.norm_over(sub, a)
}

/// Scale `root` of the monic `h` so that the scaled root has a monic
/// minimal polynomial with integral coordinates. Returns `(c, h_c)` with
/// `h_c(c·t) = c^n h(t)`.
pub fn integral_scaling(base: &NumberField, h: &Poly<NfElem>) -> (BigInt, Poly<NfElem>) {
    let c = h
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(&x.denominator()));
    if c.is_one() {
        return (c, h.clone());
    }
    let n = h.degree().unwrap();
    let ring = PolyRing::new(base.clone());
    let mut scale = BigRational::one();
    let cq = BigRational::from_integer(c.clone());
    let mut coeffs = vec![base.zero(); n + 1];
    for i in (0..=n).rev() {
        coeffs[i] = base.scale_rational(&h.coeffs()[i], &scale);
        scale *= &cq;
    }
    (c, ring.from_coeffs(coeffs))
}

/// Automorphism of a simple relative extension `F = B(θ)` fixing `B`,
/// determined by the image of `θ`.
#[derive(Clone)]
pub struct Automorphism {
    field: NumberField,
    image: NfElem,
    powers: Arc<Vec<NfElem>>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.image == other.image
    }
}

impl Eq for Automorphism {}

impl std::hash::Hash for Automorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.image.hash(state)
    }
}

impl std::fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Automorphism({} -> {})", self.field.label(), self.field.format(&self.image))
    }
}

impl Automorphism {
    /// `image` must be a root of the defining polynomial of `field`.
    pub fn new(field: &NumberField, image: NfElem) -> Result<Self> {
        let base = field.base().ok_or(ExactError::NotAnAutomorphism)?;
        let h = field.defining_polynomial();
        let lifted = PolyRing::new(field.clone())
            .from_coeffs(h.coeffs().iter().map(|c| field.embed(base, c)).collect());
        if !PolyRing::new(field.clone()).eval(&lifted, &image).is_zero() {
            return Err(ExactError::NotAnAutomorphism);
        }
        Ok(Self::new_unchecked(field, image))
    }

    pub fn new_unchecked(field: &NumberField, image: NfElem) -> Self {
        let n = field.degree();
        let mut powers = Vec::with_capacity(n);
        let mut p = field.one();
        for _ in 0..n {
            powers.push(p.clone());
            p = field.mul(&p, &image);
        }
        Automorphism { field: field.clone(), image, powers: Arc::new(powers) }
    }

    pub fn identity(field: &NumberField) -> Self {
        Self::new_unchecked(field, field.gen())
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Image of the generator.
    pub fn image(&self) -> &NfElem {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == self.field.gen()
    }

    pub fn apply(&self, a: &NfElem) -> NfElem {
        let f = &self.field;
        let base = f.base().expect("proper extension");
        let mut acc = f.zero();
        for (c, p) in f.coords_over(base, a).iter().zip(self.powers.iter()) {
            if c.is_zero() {
                continue;
            }
            acc = f.add(&acc, &f.mul(&f.embed(base, c), p));
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Self::new_unchecked(&self.field, self.apply(&other.image))
    }

    pub fn order(&self) -> usize {
        let mut g = self.clone();
        let mut k = 1;
        while !g.is_identity() {
            g = self.compose(&g);
            k += 1;
        }
        k
    }

    pub fn pow(&self, e: usize) -> Automorphism {
        let mut g = Self::identity(&self.field);
        for _ in 0..e {
            g = self.compose(&g);
        }
        g
    }

    pub fn inverse(&self) -> Automorphism {
        self.pow(self.order() - 1)
    }
}

/// Check that a finite set of automorphisms is closed under composition
/// (hence a group).
pub fn check_group(group: &[Automorphism]) -> Result<()> {
    for g in group {
        for h in group {
            if !group.contains(&g.compose(h)) {
                return Err(ExactError::NotAGroup);
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
enum Embedding {
    /// The subfield is the base `B` itself.
    Base,
    /// The subfield is the top field.
    Top,
    /// A simple extension `B(η)` with `η ↦ image` and images of `η^i`.
    Primitive(Vec<NfElem>, Arc<Solver>),
}

/// Left inverse of the embedding matrix: an invertible square block on
/// `rows` plus the full matrix for the membership check.
#[derive(Debug)]
struct Solver {
    rows: Vec<usize>,
    inverse: linalg::Matrix<NfElem>,
    full: linalg::Matrix<NfElem>,
}

impl Solver {
    fn new(base: &NumberField, top: &NumberField, powers: &[NfElem]) -> Solver {
        let cols: Vec<Vec<NfElem>> = powers.iter().map(|p| top.coords_over(base, p)).collect();
        let full: linalg::Matrix<NfElem> =
            (0..top.degree()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        // pivot columns of the transpose are independent rows
        let mut transpose = cols.clone();
        let rows = linalg::rref(base, &mut transpose);
        let square: linalg::Matrix<NfElem> = rows.iter().map(|&r| full[r].clone()).collect();
        let inverse = linalg::inverse(base, &square).expect("embedding is injective");
        Solver { rows, inverse, full }
    }
}

/// A field `K'` with `B ⊆ K' ⊆ F` together with its embedding into `F`.
#[derive(Clone, Debug)]
pub struct Subfield {
    pub field: NumberField,
    pub top: NumberField,
    pub base: NumberField,
    embedding: Embedding,
}

impl Subfield {
    pub fn base_of(top: &NumberField) -> Subfield {
        let base = top.base().expect("proper extension").clone();
        Subfield { field: base.clone(), top: top.clone(), base, embedding: Embedding::Base }
    }

    pub fn whole(top: &NumberField) -> Subfield {
        let base = top.base().expect("proper extension").clone();
        Subfield { field: top.clone(), top: top.clone(), base, embedding: Embedding::Top }
    }

    /// `field` must be a simple extension of `top`'s base whose generator
    /// maps to `image` in `top`.
    pub fn primitive(field: &NumberField, top: &NumberField, image: NfElem) -> Subfield {
        let base = top.base().expect("proper extension").clone();
        let mut powers = Vec::with_capacity(field.degree());
        let mut p = top.one();
        for _ in 0..field.degree() {
            powers.push(p.clone());
            p = top.mul(&p, &image);
        }
        let solver = Arc::new(Solver::new(&base, top, &powers));
        Subfield { field: field.clone(), top: top.clone(), base, embedding: Embedding::Primitive(powers, solver) }
    }

    /// `[top : field]`.
    pub fn codegree(&self) -> usize {
        self.top.abs_degree() / self.field.abs_degree()
    }

    /// `[field : base]`.
    pub fn degree(&self) -> usize {
        self.field.abs_degree() / self.base.abs_degree()
    }

    /// Image in `top` of the generator of `field` over the base.
    pub fn generator_image(&self) -> NfElem {
        match &self.embedding {
            Embedding::Base => self.top.one(),
            Embedding::Top => self.top.gen(),
            Embedding::Primitive(p, _) => {
                if p.len() > 1 {
                    p[1].clone()
                } else {
                    self.top.one()
                }
            }
        }
    }

    pub fn embed(&self, a: &NfElem) -> NfElem {
        match &self.embedding {
            Embedding::Base => self.top.embed(&self.base, a),
            Embedding::Top => a.clone(),
            Embedding::Primitive(powers, _) => {
                let t = &self.top;
                let mut acc = t.zero();
                for (c, p) in self.field.coords_over(&self.base, a).iter().zip(powers) {
                    if !c.is_zero() {
                        acc = t.add(&acc, &t.mul(&t.embed(&self.base, c), p));
                    }
                }
                acc
            }
        }
    }

    /// Restriction to the subfield of an automorphism of `top` that maps the
    /// subfield into itself.
    pub fn restrict(&self, g: &Automorphism) -> Result<Automorphism> {
        match &self.embedding {
            Embedding::Base => Ok(Automorphism::identity(&self.field)),
            Embedding::Top => Ok(g.clone()),
            Embedding::Primitive(..) => {
                let image = self.pullback(&g.apply(&self.generator_image()))?;
                Ok(Automorphism::new_unchecked(&self.field, image))
            }
        }
    }

    /// Preimage of an element of `top` lying in the subfield.
    pub fn pullback(&self, b: &NfElem) -> Result<NfElem> {
        match &self.embedding {
            Embedding::Base => self.top.restrict(&self.base, b).ok_or(ExactError::NotInSubfield),
            Embedding::Top => Ok(b.clone()),
            Embedding::Primitive(_, solver) => {
                let coords = self.top.coords_over(&self.base, b);
                let rhs: Vec<NfElem> = solver.rows.iter().map(|&r| coords[r].clone()).collect();
                let x = linalg::mat_vec(&self.base, &solver.inverse, &rhs);
                if linalg::mat_vec(&self.base, &solver.full, &x) != coords {
                    return Err(ExactError::NotInSubfield);
                }
                Ok(self.field.from_coords_over(&self.base, &x))
            }
        }
    }
}

/// Fixed field of a subgroup `group` of `Aut(F/B)` for a simple relative
/// extension `F = B(θ)`. The primitive element is the first candidate of
/// the right degree among `tr_H(θ^k)` for `k = 1, …, n`, then the orbit
/// products `∏_h h(θ + j)` for `j = 1, 2, …`.
pub fn fixed_field(top: &NumberField, group: &[Automorphism], label: &str) -> Result<Subfield> {
    check_group(group)?;
    let n = top.degree();
    if group.len() == 1 {
        return Ok(Subfield::whole(top));
    }
    if group.len() == n {
        return Ok(Subfield::base_of(top));
    }
    if n % group.len() != 0 {
        return Err(ExactError::NotAGroup);
    }
    let base = top.base().unwrap().clone();
    let target = n / group.len();
    let theta = top.gen();
    let trace = |x: &NfElem| group.iter().fold(top.zero(), |acc, h| top.add(&acc, &h.apply(x)));
    let product = |x: &NfElem| group.iter().fold(top.one(), |acc, h| top.mul(&acc, &h.apply(x)));
    let mut candidates: Vec<Box<dyn Fn() -> NfElem + '_>> = Vec::new();
    for k in 1..=n as u64 {
        let th = theta.clone();
        let tr = &trace;
        candidates.push(Box::new(move || tr(&top.pow(&th, k))));
    }
    for j in 1..=64i64 {
        let th = theta.clone();
        let pr = &product;
        candidates.push(Box::new(move || pr(&top.add(&th, &top.from_i64(j)))));
    }
    for cand in candidates {
        let eta = cand();
        let m = min_poly(top, &eta, &base)?;
        if m.degree() != Some(target) {
            continue;
        }
        let (c, scaled) = integral_scaling(&base, &m);
        let field = NumberField::extend_unchecked(&base, &scaled, label)?;
        let image = top.scale_rational(&eta, &BigRational::from_integer(c));
        return Ok(Subfield::primitive(&field, top, image));
    }
    unreachable!("some orbit product generates the fixed field")
}

/// `∏ (t - a_i)` over the distinct elements of `a`'s orbit under `group`.
pub fn orbit_polynomial(group: &[Automorphism], a: &NfElem) -> Poly<NfElem> {
    let field = group[0].field().clone();
    let ring = PolyRing::new(field.clone());
    let mut orbit: Vec<NfElem> = Vec::new();
    for g in group {
        let b = g.apply(a);
        if !orbit.contains(&b) {
            orbit.push(b);
        }
    }
    orbit.iter().fold(ring.one(), |acc, b| ring.mul(&acc, &ring.linear(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{extend, roots};
    use crate::numfield::cyclotomic_field;

    /// K = Q(ζ3), L = K(∛2): Galois of degree 3 over K.
    fn kummer_cubic() -> (NumberField, NumberField) {
        let k = cyclotomic_field(3).unwrap();
        let ring = PolyRing::new(k.clone());
        let h = ring.from_coeffs(vec![k.from_i64(-2), k.zero(), k.zero(), k.one()]);
        (k.clone(), extend(&k, &h, "c").unwrap())
    }

    fn galois_group(l: &NumberField) -> Vec<Automorphism> {
        let base = l.base().unwrap();
        let h = l.defining_polynomial();
        let lifted = PolyRing::new(l.clone()).from_coeffs(h.coeffs().iter().map(|c| l.embed(base, c)).collect());
        roots(l, &lifted).unwrap().into_iter().map(|r| Automorphism::new(l, r).unwrap()).collect()
    }

    #[test]
    fn min_poly_of_generator_and_sum() {
        let (k, l) = kummer_cubic();
        let m = min_poly(&l, &l.gen(), &k).unwrap();
        assert_eq!(m, l.defining_polynomial());
        let a = l.add(&l.gen(), &l.embed(&k, &k.gen()));
        let m = min_poly(&l, &a, &k).unwrap();
        assert_eq!(m.degree(), Some(3));
        let lifted = PolyRing::new(l.clone()).from_coeffs(m.coeffs().iter().map(|c| l.embed(&k, c)).collect());
        assert!(PolyRing::new(l.clone()).eval(&lifted, &a).is_zero());
        let q = NumberField::rationals();
        assert_eq!(min_poly(&l, &a, &q).unwrap().degree(), Some(6));
    }

    #[test]
    fn norm_matches_conjugate_product() {
        let (k, l) = kummer_cubic();
        let g = galois_group(&l);
        assert_eq!(g.len(), 3);
        let a = l.add(&l.mul(&l.gen(), &l.gen()), &l.embed(&k, &k.from_i64(3)));
        let prod = g.iter().fold(l.one(), |acc, s| l.mul(&acc, &s.apply(&a)));
        assert_eq!(l.restrict(&k, &prod).unwrap(), field_norm(&l, &a, &k).unwrap());
        check_group(&g).unwrap();
        assert!(check_group(&g[..2]).is_err() || g[..2].iter().all(|s| s.is_identity()));
    }

    #[test]
    fn fixed_field_extremes() {
        let (k, l) = kummer_cubic();
        let g = galois_group(&l);
        let id = vec![Automorphism::identity(&l)];
        assert_eq!(fixed_field(&l, &id, "e").unwrap().field, l);
        assert_eq!(fixed_field(&l, &g, "e").unwrap().field, k);
    }

    #[test]
    fn fixed_field_of_quartic_subgroup() {
        // The cyclic quartic Q(ζ5)/Q and its subgroup of order 2.
        let q = NumberField::rationals();
        let k = cyclotomic_field(5).unwrap();
        let z = k.gen();
        let group: Vec<Automorphism> =
            (1..=4).map(|e| Automorphism::new(&k, k.pow(&z, e)).unwrap()).collect();
        let sub_group: Vec<Automorphism> = group.iter().filter(|g| g.order() <= 2).cloned().collect();
        assert_eq!(sub_group.len(), 2);
        let sub = fixed_field(&k, &sub_group, "r").unwrap();
        assert_eq!(sub.degree(), 2);
        // the fixed field of complex conjugation is Q(√5)
        let eta = sub.generator_image();
        for g in &sub_group {
            assert_eq!(g.apply(&eta), eta);
        }
        let five = k.from_i64(5);
        let r = roots(&sub.field, &PolyRing::new(sub.field.clone()).from_coeffs(vec![
            sub.field.neg(&sub.field.embed(&q, &q.from_i64(5))),
            sub.field.zero(),
            sub.field.one(),
        ]))
        .unwrap();
        assert_eq!(r.len(), 2);
        let s = sub.embed(&r[0]);
        assert_eq!(k.mul(&s, &s), five);
        assert_eq!(sub.pullback(&s).unwrap(), r[0]);
        assert!(sub.pullback(&z).is_err());
        let not_closed = vec![Automorphism::identity(&k), group[1].clone()];
        assert_eq!(fixed_field(&k, &not_closed, "r").unwrap_err(), ExactError::NotAGroup);
    }
}
