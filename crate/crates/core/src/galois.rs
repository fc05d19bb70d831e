//! The `l`-division field `L = K(E[l])` as a simple extension of `K`, its
//! automorphisms over `K`, the mod-`l` representation and the choice of a
//! basis `(P, σ(P))`.

use std::collections::HashMap;

use exact::factor::factor;
use exact::galois::{integral_scaling, min_poly, Automorphism};
use exact::linalg;
use exact::serial::elem_to_json;
use exact::{Field, NfElem, NumberField, Poly, PolyRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::curve::{division_polynomial, Curve, Point};
use crate::error::{CoreError, Result};
use crate::modl::{closure, GroupImage, MatModL};

/// Label of the generator of `L` over `K`.
pub const DIVISION_FIELD_LABEL: &str = "m";

#[derive(Clone, Debug)]
pub struct DivisionField {
    pub l: u64,
    /// The curve over `K = Q(ζ_l)`.
    pub curve: Curve,
    /// `L`, a simple extension of `K`.
    pub field: NumberField,
    /// The curve over `L`.
    pub lifted: Curve,
    /// The `l² - 1` nonzero torsion points, canonically ordered.
    pub torsion: Vec<Point>,
    /// `Gal(L/K)`, identity first, then by serialized image.
    pub automorphisms: Vec<Automorphism>,
    /// Relative degrees of the tower built before flattening.
    pub tower_degrees: Vec<usize>,
    index: HashMap<Point, usize>,
}

impl DivisionField {
    pub fn degree(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn base(&self) -> &NumberField {
        &self.curve.field
    }

    /// `ζ_l` as an element of `L`.
    pub fn zeta(&self) -> NfElem {
        self.field.embed(self.base(), &self.base().gen())
    }

    pub fn point_index(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `g(p)` for a point over `L`.
    pub fn act(&self, g: &Automorphism, p: &Point) -> Point {
        self.lifted.map_point(p, |c| g.apply(c))
    }

    pub fn automorphism_index(&self, g: &Automorphism) -> Option<usize> {
        self.automorphisms.iter().position(|h| h == g)
    }

    /// The same division field presented as `K[m]/(defining)`; `defining`
    /// must be monic over `K` of degree `[L:K]` with a root in `L` (the
    /// smallest root in canonical order is used).
    pub fn with_generator(&self, defining: &Poly<NfElem>) -> Result<DivisionField> {
        let k = self.base();
        let old = &self.field;
        if defining.degree() != Some(self.degree()) || !PolyRing::new(k.clone()).is_monic(defining) {
            return Err(CoreError::InvalidInput("defining polynomial must be monic of degree [L:K]".into()));
        }
        let ring = PolyRing::new(old.clone());
        let lifted = ring.from_coeffs(defining.coeffs().iter().map(|a| old.embed(k, a)).collect());
        let root = exact::factor::roots(old, &lifted)?
            .into_iter()
            .next()
            .ok_or_else(|| CoreError::InvalidInput("polynomial has no root in the division field".into()))?;
        let field = NumberField::extend_unchecked(k, defining, DIVISION_FIELD_LABEL)?;
        let to_new = FlatMap::new(k, old, &field, &root)?;
        let curve = self.curve.base_change(&field, |a| field.embed(k, a));
        let mut torsion: Vec<Point> = self.torsion.iter().map(|p| curve.map_point(p, |a| to_new.apply(a))).collect();
        torsion.sort_by_cached_key(|p| curve.sort_key(p));
        let mut automorphisms: Vec<Automorphism> = self
            .automorphisms
            .iter()
            .map(|g| Automorphism::new(&field, to_new.apply(&g.apply(&root))))
            .collect::<std::result::Result<_, _>>()?;
        automorphisms.sort_by_cached_key(|g| (!g.is_identity(), elem_to_json(&field, g.image()).to_string()));
        let index = torsion.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(DivisionField {
            l: self.l,
            curve: self.curve.clone(),
            field,
            lifted: curve,
            torsion,
            automorphisms,
            tower_degrees: self.tower_degrees.clone(),
            index,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": exact::serial::tower_to_json(&self.field),
            "degree": self.degree(),
            "tower_degrees": self.tower_degrees,
            "automorphism_images": self.automorphisms.iter().map(|g| elem_to_json(&self.field, g.image())).collect::<Vec<_>>(),
        })
    }
}

/// Build `K(E[l])` by adjoining torsion coordinates until two independent
/// torsion points are rational. The working field is kept a simple
/// extension of `K` so that factoring never recurses through a tall tower.
pub fn division_field(curve: &Curve, l: u64) -> Result<DivisionField> {
    let k = curve.field.clone();
    let ring_k = PolyRing::new(k.clone());
    let psi = division_polynomial(curve, l);
    let mut pieces: Vec<Poly<NfElem>> = factor(&k, &psi)?.factors.into_iter().map(|(h, _)| h).collect();
    pieces.sort_by_key(|h| h.degree());
    let mut stage = Stage::new(&k, ring_k.x());
    let mut tower_degrees = Vec::new();
    loop {
        let c = stage.curve(curve);
        let ring = PolyRing::new(stage.field.clone());
        let mut span = stage.span(&c, &[]);
        let mut adjoin: Option<(Poly<NfElem>, bool)> = None;
        for h in &pieces {
            let lifted = ring.from_coeffs(h.coeffs().iter().map(|a| stage.lift(&k, a)).collect());
            for (g, _) in stage.factor(&lifted)? {
                if g.degree() != Some(1) {
                    if adjoin.as_ref().map_or(true, |(a, _)| a.degree() > g.degree()) {
                        adjoin = Some((g, true));
                    }
                    continue;
                }
                let x0 = stage.field.neg(&g.coeffs()[0]);
                if span.iter().any(|p| p.x() == Some(&x0)) {
                    continue;
                }
                let f = &stage.field;
                let sq = ring.from_coeffs(vec![f.neg(&c.rhs(&x0)), f.zero(), f.one()]);
                match stage.roots(&sq)?.first() {
                    Some(y0) => {
                        let p = Point::Affine { x: x0.clone(), y: y0.clone() };
                        span = stage.span(&c, &[p.clone()]);
                        stage.points.push(p);
                    }
                    None => {
                        if adjoin.as_ref().map_or(true, |(_, is_x)| *is_x) {
                            adjoin = Some((sq, false));
                        }
                    }
                }
            }
            if span.len() == (l * l) as usize {
                break;
            }
        }
        if span.len() == (l * l) as usize {
            break;
        }
        let (g, is_x) = adjoin.ok_or_else(|| CoreError::Internal("nothing left to adjoin".into()))?;
        tower_degrees.push(g.degree().unwrap());
        stage = stage.extend(&g, is_x)?;
        let total = stage.field.degree();
        if total as u64 % l == 0 {
            return Err(CoreError::OutOfScope(format!("l = {l} divides [L:K] (at least {total})")));
        }
    }
    finish(curve, l, stage.reduce(curve)?, tower_degrees)
}

/// A simple extension `K(η)` of `K` reached so far, with `η` a rational
/// combination of torsion coordinates.
struct Stage {
    field: NumberField,
    base: NumberField,
    /// `η = Σ weight · coordinate`, coordinates given as elements of `field`.
    carriers: Vec<(BigRational, NfElem, bool)>,
    /// Torsion points known to be rational over `field`.
    points: Vec<Point>,
}

impl Stage {
    fn new(k: &NumberField, defining: Poly<NfElem>) -> Stage {
        let field = NumberField::extend_unchecked(k, &defining, DIVISION_FIELD_LABEL).expect("linear extension");
        Stage { field, base: k.clone(), carriers: Vec::new(), points: Vec::new() }
    }

    fn lift(&self, k: &NumberField, a: &NfElem) -> NfElem {
        self.field.embed(k, a)
    }

    fn curve(&self, curve: &Curve) -> Curve {
        curve.base_change(&self.field, |a| self.field.embed(&self.base, a))
    }

    fn is_trivial(&self) -> bool {
        self.field.degree() == 1
    }

    /// Factor over the working field; the degree-one placeholder over `K`
    /// is factored over `K` itself.
    fn factor(&self, p: &Poly<NfElem>) -> Result<Vec<(Poly<NfElem>, usize)>> {
        if !self.is_trivial() {
            return Ok(factor(&self.field, p)?.factors);
        }
        let f = &self.field;
        let k = &self.base;
        let down = PolyRing::new(k.clone()).from_coeffs(p.coeffs().iter().map(|a| f.restrict(k, a).unwrap()).collect());
        let up = |q: &Poly<NfElem>| PolyRing::new(f.clone()).from_coeffs(q.coeffs().iter().map(|a| f.embed(k, a)).collect());
        Ok(factor(k, &down)?.factors.iter().map(|(q, e)| (up(q), *e)).collect())
    }

    fn roots(&self, p: &Poly<NfElem>) -> Result<Vec<NfElem>> {
        let mut out: Vec<NfElem> = self
            .factor(p)?
            .into_iter()
            .filter(|(g, _)| g.degree() == Some(1))
            .map(|(g, _)| self.field.neg(&g.coeffs()[0]))
            .collect();
        out.sort();
        Ok(out)
    }

    /// The subgroup generated by the known points and `extra`.
    fn span(&self, c: &Curve, extra: &[Point]) -> Vec<Point> {
        let mut group = vec![Point::Infinity];
        for g in self.points.iter().chain(extra) {
            if group.contains(g) {
                continue;
            }
            let mut next = Vec::new();
            let mut m = Point::Infinity;
            loop {
                for p in &group {
                    next.push(c.add(p, &m));
                }
                m = c.add(&m, g);
                if m.is_infinity() {
                    break;
                }
            }
            group = next;
        }
        group
    }

    /// Replace the generator by the torsion coordinate (or `x + y` of one
    /// point) whose integral minimal polynomial has the smallest height.
    fn reduce(self, curve: &Curve) -> Result<Stage> {
        if self.is_trivial() {
            return Ok(self);
        }
        let k = &self.base;
        let f = &self.field;
        let d = f.degree();
        let c = self.curve(curve);
        let mut best: Option<(u64, Vec<(NfElem, bool)>, BigInt, Poly<NfElem>)> = None;
        for p in self.span(&c, &[]) {
            let Point::Affine { x, y } = &p else { continue };
            let options = [vec![(y.clone(), false)], vec![(x.clone(), true)], vec![(x.clone(), true), (y.clone(), false)]];
            for parts in options {
                let v = parts.iter().fold(f.zero(), |acc, (a, _)| f.add(&acc, a));
                let m = min_poly(f, &v, k)?;
                if m.degree() != Some(d) {
                    continue;
                }
                let (s, scaled) = integral_scaling(k, &m);
                let h = height(&scaled);
                if best.as_ref().map_or(true, |b| h < b.0) {
                    best = Some((h, parts, s, scaled));
                }
            }
        }
        let Some((_, parts, s, defining)) = best else { return Ok(self) };
        let field = NumberField::extend_unchecked(k, &defining, DIVISION_FIELD_LABEL)?;
        let sq = BigRational::from_integer(s);
        let eta = parts.iter().fold(f.zero(), |acc, (a, _)| f.add(&acc, &f.scale_rational(a, &sq)));
        let to_new = FlatMap::new(k, f, &field, &eta)?;
        let carriers = parts.iter().map(|(a, is_x)| (sq.clone(), to_new.apply(a), *is_x)).collect();
        let points = self.points.iter().map(|p| c.map_point(p, |a| to_new.apply(a))).collect();
        Ok(Stage { field, base: k.clone(), carriers, points })
    }

    /// Adjoin a root of `g` (irreducible over the working field), whose root
    /// is an `x`- or `y`-coordinate of a torsion point, and flatten.
    fn extend(self, g: &Poly<NfElem>, is_x: bool) -> Result<Stage> {
        let k = &self.base;
        let (scale, gs) = integral_scaling(&self.field, g);
        let rel = NumberField::extend_unchecked(&self.field, &gs, "w")?;
        let coord = rel.scale_rational(&rel.gen(), &BigRational::new(1.into(), scale.clone()));
        let old_gen = rel.embed(&self.field, &self.field.gen());
        let d = rel.abs_degree() / k.abs_degree();
        let (c, theta, m) = (1i64..)
            .find_map(|c| {
                let theta = rel.add(&rel.gen(), &rel.mul(&rel.from_i64(c), &old_gen));
                let m = min_poly(&rel, &theta, k).ok()?;
                (m.degree() == Some(d)).then_some((c, theta, m))
            })
            .unwrap();
        let (s2, defining) = integral_scaling(k, &m);
        let field = NumberField::extend_unchecked(k, &defining, DIVISION_FIELD_LABEL)?;
        let eta = rel.scale_rational(&theta, &BigRational::from_integer(s2.clone()));
        let to_new = FlatMap::new(k, &rel, &field, &eta)?;
        // η' = s2·(scale·coord + c·η)
        let s2q = BigRational::from_integer(s2);
        let old_factor = &s2q * BigRational::from_integer(c.into());
        let mut carriers: Vec<(BigRational, NfElem, bool)> = self
            .carriers
            .iter()
            .map(|(w, v, x)| (w * &old_factor, to_new.apply(&rel.embed(&self.field, v)), *x))
            .collect();
        carriers.push((&s2q * BigRational::from_integer(scale), to_new.apply(&coord), is_x));
        let lift = |a: &NfElem| to_new.apply(&rel.embed(&self.field, a));
        let points = self
            .points
            .iter()
            .map(|p| match p {
                Point::Infinity => Point::Infinity,
                Point::Affine { x, y } => Point::Affine { x: lift(x), y: lift(y) },
            })
            .collect();
        Ok(Stage { field, base: k.clone(), carriers, points })
    }
}

fn height(p: &Poly<NfElem>) -> u64 {
    p.coeffs().iter().flat_map(|c| c.coords().iter()).map(|q| q.numer().bits() + q.denom().bits()).sum()
}

/// `K`-linear isomorphism from a tower field onto `K(η)` with `η ↦ eta`.
struct FlatMap {
    base: NumberField,
    from: NumberField,
    to: NumberField,
    inverse: linalg::Matrix<NfElem>,
}

impl FlatMap {
    fn new(k: &NumberField, from: &NumberField, to: &NumberField, eta: &NfElem) -> Result<FlatMap> {
        let d = to.degree();
        let mut powers = Vec::with_capacity(d);
        let mut p = from.one();
        for _ in 0..d {
            powers.push(from.coords_over(k, &p));
            p = from.mul(&p, eta);
        }
        let mat: linalg::Matrix<NfElem> = (0..d).map(|i| powers.iter().map(|c| c[i].clone()).collect()).collect();
        let inverse = linalg::inverse(k, &mat).ok_or_else(|| CoreError::Internal("primitive element is degenerate".into()))?;
        Ok(FlatMap { base: k.clone(), from: from.clone(), to: to.clone(), inverse })
    }

    fn apply(&self, a: &NfElem) -> NfElem {
        let coords = self.from.coords_over(&self.base, a);
        self.to.from_coords_over(&self.base, &linalg::mat_vec(&self.base, &self.inverse, &coords))
    }
}

fn finish(curve: &Curve, l: u64, stage: Stage, tower_degrees: Vec<usize>) -> Result<DivisionField> {
    let field = stage.field.clone();
    let lifted = stage.curve(curve);
    let mut torsion: Vec<Point> = stage.span(&lifted, &[]).into_iter().filter(|p| !p.is_infinity()).collect();
    if torsion.len() != (l * l - 1) as usize {
        return Err(CoreError::Internal("torsion span is incomplete".into()));
    }
    torsion.sort_by_cached_key(|p| lifted.sort_key(p));
    for p in &torsion {
        if !lifted.contains(p) || !lifted.scalar_mul(l as i64, p).is_infinity() {
            return Err(CoreError::Internal("constructed point is not l-torsion".into()));
        }
    }

    // each carrier coordinate belongs to some torsion point; an automorphism
    // is fixed by where those points go
    let mut carrier_points: Vec<usize> = Vec::new();
    for (_, v, is_x) in &stage.carriers {
        let i = torsion
            .iter()
            .position(|p| if *is_x { p.x() == Some(v) } else { p.y() == Some(v) })
            .ok_or_else(|| CoreError::Internal("adjoined coordinate is not a torsion coordinate".into()))?;
        carrier_points.push(i);
    }
    let mut distinct: Vec<usize> = carrier_points.clone();
    distinct.sort();
    distinct.dedup();
    let mut images: Vec<NfElem> = Vec::new();
    if stage.carriers.is_empty() {
        images.push(field.gen());
    }
    let mut choice = vec![0usize; distinct.len()];
    while !distinct.is_empty() {
        let unique = (0..choice.len()).all(|i| choice[..i].iter().all(|b| *b != choice[i]));
        if unique {
            let image = stage.carriers.iter().zip(&carrier_points).fold(field.zero(), |acc, ((w, _, is_x), i)| {
                let t = &torsion[choice[distinct.iter().position(|d| d == i).unwrap()]];
                let coord = if *is_x { t.x().unwrap() } else { t.y().unwrap() };
                field.add(&acc, &field.scale_rational(coord, w))
            });
            if !images.contains(&image) && Automorphism::new(&field, image.clone()).is_ok() {
                images.push(image);
            }
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < torsion.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    let d = field.degree();
    if images.len() != d {
        return Err(CoreError::Internal(format!("found {} automorphisms for a field of degree {d}", images.len())));
    }
    let mut automorphisms: Vec<Automorphism> =
        images.into_iter().map(|im| Automorphism::new_unchecked(&field, im)).collect();
    automorphisms.sort_by_cached_key(|g| (!g.is_identity(), elem_to_json(&field, g.image()).to_string()));

    let index: HashMap<Point, usize> = torsion.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let df = DivisionField { l, curve: curve.clone(), field, lifted, torsion, automorphisms, tower_degrees, index };
    for g in &df.automorphisms {
        for p in &df.torsion {
            if df.point_index(&df.act(g, p)).is_none() {
                return Err(CoreError::Internal("automorphism does not permute the torsion".into()));
            }
        }
    }
    Ok(df)
}

/// The matrices of `Gal(L/K)` on a basis `(P, Q)` of `E[l]`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub basis: (Point, Point),
    /// `matrices[i]` is the matrix of `automorphisms[i]`; column `j` is the
    /// image of the `j`-th basis vector.
    pub matrices: Vec<MatModL>,
    /// `e(P, Q) = ζ_l^κ`.
    pub pairing_exponent: u32,
    pub image: GroupImage,
    coords: HashMap<Point, (u32, u32)>,
}

impl Representation {
    /// Coordinates `(i, j)` with `p = iP + jQ`.
    pub fn coordinates(&self, p: &Point) -> Option<(u32, u32)> {
        self.coords.get(p).copied()
    }

    pub fn matrix_of(&self, df: &DivisionField, g: &Automorphism) -> Option<&MatModL> {
        df.automorphism_index(g).map(|i| &self.matrices[i])
    }

    pub fn to_json(&self, df: &DivisionField) -> Value {
        json!({
            "basis": [df.lifted.point_to_json(&self.basis.0), df.lifted.point_to_json(&self.basis.1)],
            "matrices": self.matrices.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
            "pairing_exponent": self.pairing_exponent,
            "image": self.image.to_json(),
        })
    }
}

pub fn representation(df: &DivisionField, p: &Point, q: &Point) -> Result<Representation> {
    let l = df.l;
    let c = &df.lifted;
    let mut coords: HashMap<Point, (u32, u32)> = HashMap::new();
    let mut row = Point::Infinity;
    for i in 0..l as u32 {
        let mut pt = row.clone();
        for j in 0..l as u32 {
            coords.insert(pt.clone(), (i, j));
            pt = c.add(&pt, q);
        }
        row = c.add(&row, p);
    }
    if coords.len() != (l * l) as usize || [p, q].iter().any(|r| df.point_index(r).is_none()) {
        return Err(CoreError::NotABasis);
    }
    let mut matrices = Vec::with_capacity(df.degree());
    for g in &df.automorphisms {
        let (a, cc) = coords[&df.act(g, p)];
        let (b, d) = coords[&df.act(g, q)];
        let m = MatModL::new(l as u32, [a as i64, b as i64, cc as i64, d as i64]);
        if m.det() != 1 {
            return Err(CoreError::Internal(format!("automorphism acts with determinant {}", m.det())));
        }
        matrices.push(m);
    }
    for (i, g) in df.automorphisms.iter().enumerate() {
        for (j, h) in df.automorphisms.iter().enumerate() {
            let gh = df.automorphism_index(&g.compose(h)).ok_or_else(|| CoreError::Internal("not a group".into()))?;
            if matrices[gh] != matrices[i].mul(&matrices[j]) {
                return Err(CoreError::Internal("representation is not a homomorphism".into()));
            }
        }
    }
    let e = c.weil_pairing(p, q, l, &df.torsion)?;
    let zeta = df.zeta();
    let f = &df.field;
    let kappa = (1..l as u32)
        .find(|&k| f.pow(&zeta, k as u64) == e)
        .ok_or_else(|| CoreError::Internal("pairing of a basis is not primitive".into()))?;
    let image = closure(l as u32, &matrices)?;
    Ok(Representation { basis: (p.clone(), q.clone()), matrices, pairing_exponent: kappa, image, coords })
}

/// First pair of torsion points in canonical order forming a basis.
pub fn canonical_basis(df: &DivisionField) -> (Point, Point) {
    let c = &df.lifted;
    let p = df.torsion[0].clone();
    let multiples: Vec<Point> = (1..df.l as i64).map(|k| c.scalar_mul(k, &p)).collect();
    let q = df.torsion.iter().find(|q| !multiples.contains(q)).unwrap().clone();
    (p, q)
}

/// `σ` of maximal order (> 2), and the basis `(P, σ(P))` with `P` the first
/// torsion point for which it is a basis.
pub fn choose_sigma_basis(df: &DivisionField) -> Result<(Automorphism, Representation)> {
    if df.degree() == 1 {
        return Err(CoreError::NoActionNeeded);
    }
    let (p0, q0) = canonical_basis(df);
    let provisional = representation(df, &p0, &q0)?;
    let mut best: Option<(usize, usize)> = None;
    for (i, m) in provisional.matrices.iter().enumerate() {
        let o = m.order().unwrap_or(0) as usize;
        if best.map_or(true, |(_, bo)| o > bo) {
            best = Some((i, o));
        }
    }
    let (si, order) = best.unwrap();
    if order <= 2 {
        return Err(CoreError::FallbackOrder2);
    }
    let sigma = df.automorphisms[si].clone();
    let c = &df.lifted;
    for p in &df.torsion {
        let q = df.act(&sigma, p);
        let multiples: Vec<Point> = (0..df.l as i64).map(|k| c.scalar_mul(k, p)).collect();
        if multiples.contains(&q) {
            continue;
        }
        let rep = representation(df, p, &q)?;
        let m = &rep.matrices[si];
        let l = df.l as u32;
        if m.entries()[0] != 0 || m.entries()[1] != l - 1 || m.entries()[2] != 1 {
            return Err(CoreError::Internal("σ is not in rational canonical form".into()));
        }
        return Ok((sigma, rep));
    }
    Err(CoreError::Internal("no cyclic vector for σ".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact::numfield::cyclotomic_field;

    #[test]
    fn trivial_division_field() {
        let k = cyclotomic_field(3).unwrap();
        let c = Curve::new(&k, k.zero(), k.from_i64(16)).unwrap();
        let df = division_field(&c, 3).unwrap();
        assert_eq!(df.degree(), 1);
        assert_eq!(df.torsion.len(), 8);
        let (p, q) = canonical_basis(&df);
        let rep = representation(&df, &p, &q).unwrap();
        assert!(rep.matrices[0].is_identity());
        assert!(rep.pairing_exponent == 1 || rep.pairing_exponent == 2);
        assert_eq!(choose_sigma_basis(&df).unwrap_err(), CoreError::NoActionNeeded);
        assert_eq!(representation(&df, &p, &c.base_change(&df.field, |a| df.field.embed(&k, a)).scalar_mul(2, &p)).unwrap_err(), CoreError::NotABasis);
    }

    #[test]
    fn quadratic_division_field() {
        // the quadratic twist of y² = x³ + 16 by 2
        let k = cyclotomic_field(3).unwrap();
        let c = Curve::new(&k, k.zero(), k.from_i64(128)).unwrap();
        let df = division_field(&c, 3).unwrap();
        assert_eq!(df.degree(), 2);
        let (p, q) = canonical_basis(&df);
        let rep = representation(&df, &p, &q).unwrap();
        for m in &rep.matrices {
            assert_eq!(m.det(), 1);
        }
        assert_eq!(rep.image.order(), df.degree());
    }
}
