//! Short Weierstrass curves `y² = x³ + a4·x + a6` over number fields:
//! group law, division polynomials, torsion, line functions, Miller's
//! functions `t_P` and the Weil pairing.

use std::collections::HashMap;

use exact::factor::roots;
use exact::serial::elem_to_json;
use exact::{Field, NfElem, NumberField, Poly, PolyRing};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::funcfield::{FfElem, FunctionField};

#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub field: NumberField,
    pub a4: NfElem,
    pub a6: NfElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine { x: NfElem, y: NfElem },
}

impl Point {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&NfElem> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&NfElem> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }
}

impl Curve {
    pub fn new(field: &NumberField, a4: NfElem, a6: NfElem) -> Result<Curve> {
        let c = Curve { field: field.clone(), a4, a6 };
        if c.field.is_zero(&c.discriminant()) {
            return Err(CoreError::SingularCurve);
        }
        Ok(c)
    }

    /// `-16(4·a4³ + 27·a6²)`.
    pub fn discriminant(&self) -> NfElem {
        let f = &self.field;
        let t = f.add(
            &f.mul(&f.from_i64(4), &f.pow(&self.a4, 3)),
            &f.mul(&f.from_i64(27), &f.mul(&self.a6, &self.a6)),
        );
        f.mul(&f.from_i64(-16), &t)
    }

    /// The same curve over a field containing this one.
    pub fn base_change(&self, target: &NumberField, embed: impl Fn(&NfElem) -> NfElem) -> Curve {
        Curve { field: target.clone(), a4: embed(&self.a4), a6: embed(&self.a6) }
    }

    pub fn function_field(&self) -> FunctionField {
        FunctionField::new(&self.field, self.a4.clone(), self.a6.clone())
    }

    /// `x³ + a4·x + a6`.
    pub fn rhs(&self, x: &NfElem) -> NfElem {
        let f = &self.field;
        f.add(&f.add(&f.pow(x, 3), &f.mul(&self.a4, x)), &self.a6)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => self.field.mul(y, y) == self.rhs(x),
        }
    }

    pub fn point(&self, x: NfElem, y: NfElem) -> Result<Point> {
        let p = Point::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(CoreError::NotOnCurve)
        }
    }

    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: x.clone(), y: self.field.neg(y) },
        }
    }

    /// Slope of the line through `p` and `q` (tangent if equal); `None`
    /// when that line is vertical.
    fn slope(&self, x1: &NfElem, y1: &NfElem, x2: &NfElem, y2: &NfElem) -> Option<NfElem> {
        let f = &self.field;
        if x1 != x2 {
            return f.div(&f.sub(y2, y1), &f.sub(x2, x1));
        }
        if y1 != y2 || f.is_zero(y1) {
            return None;
        }
        let num = f.add(&f.mul(&f.from_i64(3), &f.mul(x1, x1)), &self.a4);
        f.div(&num, &f.mul(&f.from_i64(2), y1))
    }

    pub fn add(&self, p: &Point, q: &Point) -> Point {
        let f = &self.field;
        match (p, q) {
            (Point::Infinity, _) => q.clone(),
            (_, Point::Infinity) => p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => {
                let Some(lambda) = self.slope(x1, y1, x2, y2) else {
                    return Point::Infinity;
                };
                let x3 = f.sub(&f.sub(&f.mul(&lambda, &lambda), x1), x2);
                let y3 = f.sub(&f.mul(&lambda, &f.sub(x1, &x3)), y1);
                Point::Affine { x: x3, y: y3 }
            }
        }
    }

    pub fn sub(&self, p: &Point, q: &Point) -> Point {
        self.add(p, &self.neg(q))
    }

    /// `n·p` by double-and-add.
    pub fn scalar_mul(&self, n: i64, p: &Point) -> Point {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    pub fn map_point(&self, p: &Point, g: impl Fn(&NfElem) -> NfElem) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: g(x), y: g(y) },
        }
    }

    pub fn point_to_json(&self, p: &Point) -> Value {
        match p {
            Point::Infinity => json!("O"),
            Point::Affine { x, y } => json!({ "x": elem_to_json(&self.field, x), "y": elem_to_json(&self.field, y) }),
        }
    }

    pub fn point_from_json(&self, v: &Value) -> Result<Point> {
        if v == &json!("O") {
            return Ok(Point::Infinity);
        }
        let get = |k: &str| -> Result<NfElem> {
            let c = v.get(k).ok_or_else(|| CoreError::InvalidInput(format!("point is missing {k}")))?;
            Ok(exact::serial::elem_from_json(&self.field, c)?)
        };
        self.point(get("x")?, get("y")?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": exact::serial::tower_to_json(&self.field),
            "a4": elem_to_json(&self.field, &self.a4),
            "a6": elem_to_json(&self.field, &self.a6),
        })
    }

    /// Canonical ordering key: serialized coordinates.
    pub fn sort_key(&self, p: &Point) -> String {
        self.point_to_json(p).to_string()
    }

    /// Line through `p` and `q` (tangent when equal, vertical when `q = -p`);
    /// a point at infinity contributes the vertical through the other point.
    pub fn line(&self, p: &Point, q: &Point) -> FfElem {
        let ff = self.function_field();
        let vertical = |x0: &NfElem| ff.sub(&ff.x(), &ff.constant(x0.clone()));
        match (p, q) {
            (Point::Infinity, Point::Infinity) => ff.one(),
            (Point::Infinity, Point::Affine { x, .. }) | (Point::Affine { x, .. }, Point::Infinity) => vertical(x),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => match self.slope(x1, y1, x2, y2) {
                None => vertical(x1),
                Some(lambda) => {
                    // y - y1 - λ(x - x1)
                    let f = &self.field;
                    let c = f.sub(&f.mul(&lambda, x1), y1);
                    let a = ff.add(&ff.mul(&ff.constant(f.neg(&lambda)), &ff.x()), &ff.constant(c));
                    ff.add(&ff.y(), &a)
                }
            },
        }
    }

    fn vertical(&self, p: &Point) -> FfElem {
        let ff = self.function_field();
        match p {
            Point::Infinity => ff.one(),
            Point::Affine { x, .. } => ff.sub(&ff.x(), &ff.constant(x.clone())),
        }
    }

    /// Miller's function `f_n` with divisor `n[P] - [nP] - (n-1)[O]`; for
    /// `n = l` and `P ∈ E[l]` this is `t_P`, with divisor `l[P] - l[O]`.
    pub fn miller(&self, n: u64, p: &Point) -> FfElem {
        let ff = self.function_field();
        if p.is_infinity() || n == 0 {
            return ff.one();
        }
        let mut f = ff.one();
        let mut acc = p.clone();
        let bits: Vec<bool> = (0..64 - n.leading_zeros()).rev().map(|i| n >> i & 1 == 1).collect();
        for &bit in &bits[1..] {
            // f_{2k} = f_k² · L_{kP,kP} / V_{2kP}
            let doubled = self.add(&acc, &acc);
            let step = ff.div(&self.line(&acc, &acc), &self.vertical(&doubled)).unwrap();
            f = ff.mul(&ff.mul(&f, &f), &step);
            acc = doubled;
            if bit {
                let next = self.add(&acc, p);
                let step = ff.div(&self.line(&acc, p), &self.vertical(&next)).unwrap();
                f = ff.mul(&f, &step);
                acc = next;
            }
        }
        f
    }

    /// `t_P` with divisor `l[P] - l[O]`.
    pub fn t_function(&self, p: &Point, l: u64) -> Result<FfElem> {
        if p.is_infinity() {
            return Ok(self.function_field().one());
        }
        if !self.scalar_mul(l as i64, p).is_infinity() {
            return Err(CoreError::NotTorsion(l));
        }
        Ok(self.miller(l, p))
    }

    /// Weil pairing `e_l(P, Q)` with an auxiliary point taken from `aux`
    /// (the first one avoiding the supports).
    pub fn weil_pairing(&self, p: &Point, q: &Point, l: u64, aux: &[Point]) -> Result<NfElem> {
        let f = &self.field;
        for r in [p, q] {
            if !self.scalar_mul(l as i64, r).is_infinity() {
                return Err(CoreError::NotTorsion(l));
            }
        }
        if p.is_infinity() || q.is_infinity() {
            return Ok(f.one());
        }
        let avoid = [Point::Infinity, p.clone(), self.neg(q), self.sub(p, q)];
        let s = aux
            .iter()
            .find(|s| !avoid.contains(s))
            .ok_or_else(|| CoreError::InvalidInput("no auxiliary point avoids the supports".into()))?;
        let tp = self.miller(l, p);
        let tq = self.miller(l, q);
        let ff = self.function_field();
        let at = |e: &FfElem, r: &Point| -> NfElem {
            ff.eval(e, r.x().unwrap(), r.y().unwrap()).expect("Miller functions are polynomial")
        };
        let num = f.mul(&at(&tp, &self.add(q, s)), &at(&tq, &self.neg(s)));
        let den = f.mul(&at(&tp, s), &at(&tq, &self.sub(p, s)));
        let e = f.div(&num, &den).ok_or_else(|| CoreError::Internal("degenerate pairing evaluation".into()))?;
        if !f.is_one(&f.pow(&e, l)) {
            return Err(CoreError::Internal("pairing value is not a root of unity".into()));
        }
        Ok(e)
    }

    /// All `l² - 1` nonzero `l`-torsion points rational over the field,
    /// sorted canonically.
    pub fn lth_torsion(&self, l: u64) -> Result<Vec<Point>> {
        let f = &self.field;
        let ring = PolyRing::new(f.clone());
        let psi = division_polynomial(self, l);
        let mut pts = Vec::new();
        for x in roots(f, &psi)? {
            let sq = ring.from_coeffs(vec![f.neg(&self.rhs(&x)), f.zero(), f.one()]);
            for y in roots(f, &sq)? {
                pts.push(Point::Affine { x: x.clone(), y });
            }
        }
        let expected = (l * l - 1) as usize;
        if pts.len() != expected {
            return Err(CoreError::NotDivisionField { found: pts.len(), expected });
        }
        pts.sort_by_cached_key(|p| self.sort_key(p));
        Ok(pts)
    }

    /// Order of vanishing of `e` at `p` (negative for poles).
    pub fn valuation(&self, e: &FfElem, p: &Point) -> i64 {
        let ff = self.function_field();
        match p {
            Point::Infinity => {
                let deg = |r: &crate::funcfield::RatFunc| {
                    r.num().degree().map(|d| d as i64 - r.den().degree().unwrap() as i64)
                };
                let va = deg(&e.a).map(|d| -2 * d);
                let vb = deg(&e.b).map(|d| -2 * d - 3);
                match (va, vb) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) => a,
                    (None, Some(b)) => b,
                    (None, None) => i64::MAX,
                }
            }
            Point::Affine { x, y } => {
                if ff.is_zero(e) {
                    return i64::MAX;
                }
                let f = &self.field;
                if f.is_zero(y) {
                    // uniformizer y; x - x0 has valuation 2 there
                    return self.valuation_at_two_torsion(e, x);
                }
                let r = PolyRing::new(f.clone());
                // common denominator: e = (A + B·y)/D
                let d = r.mul(e.a.den(), e.b.den());
                let a = r.mul(e.a.num(), e.b.den());
                let b = r.mul(e.b.num(), e.a.den());
                let prec = 2 * (a.len().max(b.len()).max(d.len()) + 2);
                let ys = sqrt_series(self, x, y, prec);
                let sa = shifted_series(&r, &a, x, prec);
                let sb = shifted_series(&r, &b, x, prec);
                let num = series_add(f, &sa, &series_mul(f, &sb, &ys, prec));
                first_nonzero(f, &num) - first_nonzero(f, &shifted_series(&r, &d, x, prec))
            }
        }
    }

    fn valuation_at_two_torsion(&self, e: &FfElem, x0: &NfElem) -> i64 {
        // v(g(x)) = 2·ord_{x0} g, v(y) = 1
        let r = PolyRing::new(self.field.clone());
        let ord = |p: &Poly<NfElem>| -> i64 {
            let mut p = p.clone();
            let lin = r.linear(x0);
            let mut k = 0;
            while let Some((q, rem)) = r.div_rem(&p, &lin) {
                if !rem.is_zero() || p.is_zero() {
                    break;
                }
                p = q;
                k += 1;
            }
            k
        };
        let v = |rf: &crate::funcfield::RatFunc| 2 * (ord(rf.num()) - ord(rf.den()));
        match (e.a.is_zero(), e.b.is_zero()) {
            (false, true) => v(&e.a),
            (true, false) => v(&e.b) + 1,
            _ => v(&e.a).min(v(&e.b) + 1),
        }
    }
}

fn shifted_series(r: &PolyRing<NumberField>, p: &Poly<NfElem>, x0: &NfElem, prec: usize) -> Vec<NfElem> {
    let f = &r.base;
    let s = r.shift(p, x0);
    (0..prec).map(|i| s.coeff(i).cloned().unwrap_or_else(|| f.zero())).collect()
}

/// Power series of `y` in `u = x - x0` on the branch through `(x0, y0)`.
fn sqrt_series(c: &Curve, x0: &NfElem, y0: &NfElem, prec: usize) -> Vec<NfElem> {
    let f = &c.field;
    let r = PolyRing::new(f.clone());
    let cubic = r.from_coeffs(vec![c.a6.clone(), c.a4.clone(), f.zero(), f.one()]);
    let g = shifted_series(&r, &cubic, x0, prec);
    let two_y0_inv = f.inv(&f.mul(&f.from_i64(2), y0)).unwrap();
    let mut s = vec![y0.clone()];
    for k in 1..prec {
        let mut acc = g[k].clone();
        for i in 1..k {
            acc = f.sub(&acc, &f.mul(&s[i], &s[k - i]));
        }
        s.push(f.mul(&acc, &two_y0_inv));
    }
    s
}

fn series_add(f: &NumberField, a: &[NfElem], b: &[NfElem]) -> Vec<NfElem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

fn series_mul(f: &NumberField, a: &[NfElem], b: &[NfElem], prec: usize) -> Vec<NfElem> {
    (0..prec)
        .map(|k| (0..=k).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&a[i], &b[k - i]))))
        .collect()
}

fn first_nonzero(f: &NumberField, s: &[NfElem]) -> i64 {
    s.iter().position(|c| !f.is_zero(c)).map(|i| i as i64).expect("series precision too small")
}

/// `ψ_n` for odd `n` (a polynomial in `x`), from the standard recurrence
/// with `ψ_{2m} = y·h_{2m}` and `y² = x³ + a4·x + a6`.
pub fn division_polynomial_raw(curve: &Curve, n: u64) -> Poly<NfElem> {
    let f = &curve.field;
    let r = PolyRing::new(f.clone());
    let (a, b) = (&curve.a4, &curve.a6);
    let c = |v: i64| f.from_i64(v);
    let cubic = r.from_coeffs(vec![b.clone(), a.clone(), f.zero(), f.one()]);
    let cubic2 = r.mul(&cubic, &cubic);
    let mut memo: HashMap<u64, Poly<NfElem>> = HashMap::new();
    memo.insert(0, Poly::zero());
    memo.insert(1, r.one());
    memo.insert(2, r.constant(c(2)));
    let a2 = f.mul(a, a);
    memo.insert(
        3,
        r.from_coeffs(vec![f.neg(&a2), f.mul(&c(12), b), f.mul(&c(6), a), f.zero(), c(3)]),
    );
    let h4 = r.from_coeffs(vec![
        f.sub(&f.mul(&c(-8), &f.mul(b, b)), &f.mul(&a2, a)),
        f.mul(&c(-4), &f.mul(a, b)),
        f.mul(&c(-5), &a2),
        f.mul(&c(20), b),
        f.mul(&c(5), a),
        f.zero(),
        f.one(),
    ]);
    memo.insert(4, r.scale(&h4, &c(4)));
    fn h(
        k: u64,
        memo: &mut HashMap<u64, Poly<NfElem>>,
        r: &PolyRing<NumberField>,
        cubic2: &Poly<NfElem>,
    ) -> Poly<NfElem> {
        if let Some(p) = memo.get(&k) {
            return p.clone();
        }
        let m = k / 2;
        let p = if k % 2 == 1 {
            let (hm2, hm, hm1, hp1) = (h(m + 2, memo, r, cubic2), h(m, memo, r, cubic2), h(m - 1, memo, r, cubic2), h(m + 1, memo, r, cubic2));
            let t1 = r.mul(&hm2, &r.pow(&hm, 3));
            let t2 = r.mul(&hm1, &r.pow(&hp1, 3));
            if m % 2 == 0 {
                r.sub(&r.mul(cubic2, &t1), &t2)
            } else {
                r.sub(&t1, &r.mul(cubic2, &t2))
            }
        } else {
            let (hm, hm2, hm1, hmm2, hp1) = (
                h(m, memo, r, cubic2),
                h(m + 2, memo, r, cubic2),
                h(m - 1, memo, r, cubic2),
                h(m - 2, memo, r, cubic2),
                h(m + 1, memo, r, cubic2),
            );
            let inner = r.sub(&r.mul(&hm2, &r.mul(&hm1, &hm1)), &r.mul(&hmm2, &r.mul(&hp1, &hp1)));
            let half = r.base.inv(&r.base.from_i64(2)).unwrap();
            r.scale(&r.mul(&hm, &inner), &half)
        };
        memo.insert(k, p.clone());
        p
    }
    h(n, &mut memo, &r, &cubic2)
}

/// Monic `ψ_n` for odd `n`, of degree `(n² - 1)/2`.
pub fn division_polynomial(curve: &Curve, n: u64) -> Poly<NfElem> {
    PolyRing::new(curve.field.clone()).monic(&division_polynomial_raw(curve, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact::factor::extend;
    use exact::numfield::cyclotomic_field;

    /// `y² = x³ + 16` over `Q(ζ3)` has full rational 3-torsion.
    fn full_three_torsion() -> Curve {
        let k = cyclotomic_field(3).unwrap();
        Curve::new(&k, k.zero(), k.from_i64(16)).unwrap()
    }

    #[test]
    fn psi3_matches_closed_form() {
        let k = cyclotomic_field(5).unwrap();
        let a = k.add(&k.gen(), &k.from_i64(2));
        let b = k.from_i64(-7);
        let c = Curve::new(&k, a.clone(), b.clone()).unwrap();
        let r = PolyRing::new(k.clone());
        let expect = r.from_coeffs(vec![
            k.neg(&k.mul(&a, &a)),
            k.mul(&k.from_i64(12), &b),
            k.mul(&k.from_i64(6), &a),
            k.zero(),
            k.from_i64(3),
        ]);
        assert_eq!(division_polynomial_raw(&c, 3), expect);
        for l in [3u64, 5, 7] {
            assert_eq!(division_polynomial(&c, l).degree(), Some(((l * l - 1) / 2) as usize));
        }
    }

    #[test]
    fn psi5_vanishes_at_five_torsion() {
        // y² - y = x³ - x² moved to short form; (0,0) becomes (-1/3, -1/2), of order 5
        let q = exact::NumberField::rationals();
        let r = |n, d| q.from_rational(&exact::numfield::rat(n, d));
        let c = Curve::new(&q, r(-1, 3), r(19, 108)).unwrap();
        let p = c.point(r(-1, 3), r(-1, 2)).unwrap();
        let ring = PolyRing::new(q.clone());
        for n in 1..5 {
            assert!(!c.scalar_mul(n, &p).is_infinity());
        }
        assert!(c.scalar_mul(5, &p).is_infinity());
        assert!(ring.eval(&division_polynomial(&c, 5), p.x().unwrap()).is_zero());
        let twice = c.scalar_mul(2, &p);
        assert!(ring.eval(&division_polynomial(&c, 5), twice.x().unwrap()).is_zero());
        for n in [3u64, 7] {
            assert!(!ring.eval(&division_polynomial(&c, n), p.x().unwrap()).is_zero());
        }
    }

    #[test]
    fn group_law() {
        let c = full_three_torsion();
        let k = &c.field;
        let p = c.point(k.zero(), k.from_i64(4)).unwrap();
        assert_eq!(c.add(&p, &Point::Infinity), p);
        assert_eq!(c.add(&p, &c.neg(&p)), Point::Infinity);
        assert_eq!(c.scalar_mul(3, &p), Point::Infinity);
        let t = c.lth_torsion(3).unwrap();
        assert_eq!(t.len(), 8);
        for a in &t {
            for b in &t {
                for d in t.iter().take(3) {
                    assert_eq!(c.add(&c.add(a, b), d), c.add(a, &c.add(b, d)));
                }
            }
        }
        let psi = division_polynomial(&c, 3);
        let r = PolyRing::new(k.clone());
        for a in &t {
            assert!(r.eval(&psi, a.x().unwrap()).is_zero());
        }
    }

    #[test]
    fn not_a_division_field() {
        let q = exact::NumberField::rationals();
        let c = Curve::new(&q, q.from_i64(-2), q.from_i64(5)).unwrap();
        assert!(matches!(c.lth_torsion(3), Err(CoreError::NotDivisionField { .. })));
        assert_eq!(Curve::new(&q, q.zero(), q.zero()).unwrap_err(), CoreError::SingularCurve);
    }

    #[test]
    fn lines_and_t_functions() {
        let c = full_three_torsion();
        let t = c.lth_torsion(3).unwrap();
        let ff = c.function_field();
        let p = &t[0];
        let q = t.iter().find(|q| *q != p && **q != c.neg(p)).unwrap();
        let line = c.line(p, q);
        for r in [p.clone(), q.clone(), c.neg(&c.add(p, q))] {
            assert!(c.valuation(&line, &r) >= 1);
        }
        assert_eq!(c.valuation(&line, &Point::Infinity), -3);
        let vert = c.line(p, &c.neg(p));
        assert_eq!(vert, ff.sub(&ff.x(), &ff.constant(p.x().unwrap().clone())));
        for p in &t {
            let tp = c.t_function(p, 3).unwrap();
            assert_eq!(c.valuation(&tp, p), 3);
            assert_eq!(c.valuation(&tp, &Point::Infinity), -3);
            for r in t.iter().filter(|r| *r != p) {
                assert_eq!(c.valuation(&tp, r), 0);
            }
            // t_P · t_{-P} = (x - x_P)^3 up to a constant
            let prod = ff.mul(&tp, &c.t_function(&c.neg(p), 3).unwrap());
            let cube = ff.pow(&vert_at(&c, p), 3);
            let ratio = ff.div(&prod, &cube).unwrap();
            assert!(ff.as_constant(&ratio).is_some());
        }
        assert_eq!(c.t_function(&Point::Infinity, 3).unwrap(), ff.one());
    }

    fn vert_at(c: &Curve, p: &Point) -> FfElem {
        c.line(p, &c.neg(p))
    }

    #[test]
    fn weil_pairing_properties() {
        let c = full_three_torsion();
        let t = c.lth_torsion(3).unwrap();
        let k = &c.field;
        let p = &t[0];
        let q = t.iter().find(|q| *q != p && **q != c.neg(p)).unwrap();
        let e = c.weil_pairing(p, q, 3, &t).unwrap();
        assert!(!k.is_one(&e));
        assert!(k.is_one(&c.weil_pairing(p, p, 3, &t).unwrap()));
        let e2 = c.weil_pairing(q, p, 3, &t).unwrap();
        assert!(k.is_one(&k.mul(&e, &e2)));
        for (a, b, cc, d) in [(1i64, 2i64, 0i64, 1i64), (2, 1, 1, 1), (1, 1, 2, 0)] {
            let u = c.add(&c.scalar_mul(a, p), &c.scalar_mul(cc, q));
            let v = c.add(&c.scalar_mul(b, p), &c.scalar_mul(d, q));
            let lhs = c.weil_pairing(&u, &v, 3, &t).unwrap();
            let rhs = k.pow_signed(&e, a * d - b * cc).unwrap();
            assert_eq!(lhs, rhs);
        }
        let not_torsion = {
            let q = exact::NumberField::rationals();
            let c2 = Curve::new(&q, q.from_i64(-2), q.from_i64(5)).unwrap();
            let p = c2.point(q.from_i64(1), q.from_i64(2)).unwrap();
            c2.weil_pairing(&p, &p, 3, &[])
        };
        assert_eq!(not_torsion.unwrap_err(), CoreError::NotTorsion(3));
    }

    #[test]
    fn valuation_at_random_point() {
        // over Q(ζ3)(√(1+16)) the point (1, √17) is not torsion
        let c = full_three_torsion();
        let k = &c.field;
        let r = PolyRing::new(k.clone());
        let m = extend(k, &r.from_coeffs(vec![k.from_i64(-17), k.zero(), k.one()]), "s").unwrap();
        let cm = c.base_change(&m, |a| m.embed(k, a));
        let pt = cm.point(m.one(), m.gen()).unwrap();
        let tm = cm.lth_torsion(3).unwrap();
        for p in &tm {
            let tp = cm.t_function(p, 3).unwrap();
            assert_eq!(cm.valuation(&tp, &pt), 0);
        }
        let ff = cm.function_field();
        let f = ff.sub(&ff.x(), &ff.one());
        assert_eq!(cm.valuation(&f, &pt), 1);
        assert_eq!(cm.valuation(&ff.inv(&f).unwrap(), &pt), -1);
    }
}
