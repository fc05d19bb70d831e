//! Function fields `F(E) = F(x)[y]/(y² - x³ - a4·x - a6)` of a short
//! Weierstrass curve over a number field `F`. Elements are `a(x) + b(x)·y`
//! with reduced rational functions `a`, `b` whose denominators are monic.

use exact::galois::{Automorphism, Subfield};
use exact::serial::elem_to_json;
use exact::{Field, NfElem, NumberField, Poly, PolyRing};
use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{CoreError, Result};

/// A reduced fraction of polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly<NfElem>,
    den: Poly<NfElem>,
}

impl RatFunc {
    pub fn num(&self) -> &Poly<NfElem> {
        &self.num
    }

    pub fn den(&self) -> &Poly<NfElem> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

/// `F(x)` for a number field `F`.
#[derive(Clone, Debug)]
pub struct RationalFunctions {
    pub base: NumberField,
    ring: PolyRing<NumberField>,
}

impl PartialEq for RationalFunctions {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl RationalFunctions {
    pub fn new(base: &NumberField) -> Self {
        RationalFunctions { base: base.clone(), ring: PolyRing::new(base.clone()) }
    }

    pub fn ring(&self) -> &PolyRing<NumberField> {
        &self.ring
    }

    pub fn from_poly(&self, p: Poly<NfElem>) -> RatFunc {
        RatFunc { num: p, den: self.ring.one() }
    }

    pub fn constant(&self, c: NfElem) -> RatFunc {
        self.from_poly(self.ring.constant(c))
    }

    pub fn x(&self) -> RatFunc {
        self.from_poly(self.ring.x())
    }

    /// `num / den` in lowest terms; `None` if `den = 0`.
    pub fn fraction(&self, num: Poly<NfElem>, den: Poly<NfElem>) -> Option<RatFunc> {
        let r = &self.ring;
        let lc = den.lc()?.clone();
        if num.is_zero() {
            return Some(RatFunc { num, den: r.one() });
        }
        let inv = self.base.inv(&lc).unwrap();
        let (num, den) = (r.scale(&num, &inv), r.scale(&den, &inv));
        if den.degree() == Some(0) {
            return Some(RatFunc { num, den });
        }
        let g = r.gcd(&num, &den);
        if g.degree() == Some(0) {
            return Some(RatFunc { num, den });
        }
        Some(RatFunc { num: r.div_exact(&num, &g).unwrap(), den: r.div_exact(&den, &g).unwrap() })
    }

    pub fn map_coeffs(&self, a: &RatFunc, f: impl Fn(&NfElem) -> NfElem, target: &RationalFunctions) -> RatFunc {
        let map = |p: &Poly<NfElem>| target.ring.from_coeffs(p.coeffs().iter().map(&f).collect());
        target.fraction(map(&a.num), map(&a.den)).expect("field maps keep denominators nonzero")
    }

    pub fn try_map_coeffs(
        &self,
        a: &RatFunc,
        f: impl Fn(&NfElem) -> Result<NfElem>,
        target: &RationalFunctions,
    ) -> Result<RatFunc> {
        let map = |p: &Poly<NfElem>| -> Result<Poly<NfElem>> {
            Ok(target.ring.from_coeffs(p.coeffs().iter().map(&f).collect::<Result<Vec<_>>>()?))
        };
        target
            .fraction(map(&a.num)?, map(&a.den)?)
            .ok_or_else(|| CoreError::Internal("coefficient map sent a denominator to zero".into()))
    }

    /// Value at `x0`, `None` at a pole.
    pub fn eval(&self, a: &RatFunc, x0: &NfElem) -> Option<NfElem> {
        let d = self.ring.eval(&a.den, x0);
        self.base.div(&self.ring.eval(&a.num, x0), &d)
    }
}

impl Field for RationalFunctions {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        self.from_poly(Poly::zero())
    }

    fn one(&self) -> RatFunc {
        self.from_poly(self.ring.one())
    }

    fn from_int(&self, n: &BigInt) -> RatFunc {
        self.constant(self.base.from_int(n))
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            return self.fraction(r.add(&a.num, &b.num), a.den.clone()).unwrap();
        }
        // a/(g·u) + b/(g·v) = (a·v + b·u)/(g·u·v)
        let g = r.gcd(&a.den, &b.den);
        let u = r.div_exact(&a.den, &g).unwrap();
        let v = r.div_exact(&b.den, &g).unwrap();
        let num = r.add(&r.mul(&a.num, &v), &r.mul(&b.num, &u));
        self.fraction(num, r.mul(&a.den, &v)).unwrap()
    }

    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: self.ring.neg(&a.num), den: a.den.clone() }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        // cross-cancel; the factors stay coprime and the denominators monic
        let g1 = r.gcd(&a.num, &b.den);
        let g2 = r.gcd(&b.num, &a.den);
        let num = r.mul(&r.div_exact(&a.num, &g1).unwrap(), &r.div_exact(&b.num, &g2).unwrap());
        let den = r.mul(&r.div_exact(&a.den, &g2).unwrap(), &r.div_exact(&b.den, &g1).unwrap());
        RatFunc { num, den }
    }

    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.is_zero() {
            return None;
        }
        // already coprime: only the new denominator needs making monic
        let inv = self.base.inv(a.num.lc()?).unwrap();
        Some(RatFunc { num: self.ring.scale(&a.den, &inv), den: self.ring.scale(&a.num, &inv) })
    }
}

/// `F(E)` for `E: y² = x³ + a4·x + a6` over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionField {
    pub rat: RationalFunctions,
    pub a4: NfElem,
    pub a6: NfElem,
    cubic: RatFunc,
}

/// `a(x) + b(x)·y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FfElem {
    pub a: RatFunc,
    pub b: RatFunc,
}

impl FunctionField {
    pub fn new(base: &NumberField, a4: NfElem, a6: NfElem) -> Self {
        let rat = RationalFunctions::new(base);
        let cubic = rat.from_poly(rat.ring.from_coeffs(vec![a6.clone(), a4.clone(), base.zero(), base.one()]));
        FunctionField { rat, a4, a6, cubic }
    }

    pub fn base(&self) -> &NumberField {
        &self.rat.base
    }

    /// `x³ + a4·x + a6` as an element of `F(x)`.
    pub fn cubic(&self) -> &RatFunc {
        &self.cubic
    }

    pub fn elem(&self, a: RatFunc, b: RatFunc) -> FfElem {
        FfElem { a, b }
    }

    pub fn from_rat(&self, a: RatFunc) -> FfElem {
        FfElem { a, b: self.rat.zero() }
    }

    pub fn constant(&self, c: NfElem) -> FfElem {
        self.from_rat(self.rat.constant(c))
    }

    pub fn x(&self) -> FfElem {
        self.from_rat(self.rat.x())
    }

    pub fn y(&self) -> FfElem {
        FfElem { a: self.rat.zero(), b: self.rat.one() }
    }

    /// `a(x) + b(x)·y` from polynomial parts.
    pub fn from_polys(&self, a: Poly<NfElem>, b: Poly<NfElem>) -> FfElem {
        FfElem { a: self.rat.from_poly(a), b: self.rat.from_poly(b) }
    }

    /// Constant value, if the element lies in `F`.
    pub fn as_constant(&self, e: &FfElem) -> Option<NfElem> {
        if !e.b.is_zero() || !e.a.is_polynomial() || e.a.num.degree().unwrap_or(0) > 0 {
            return None;
        }
        Some(e.a.num.coeff(0).cloned().unwrap_or_else(|| self.base().zero()))
    }

    /// `a - b·y`.
    pub fn conjugate(&self, e: &FfElem) -> FfElem {
        FfElem { a: e.a.clone(), b: self.rat.neg(&e.b) }
    }

    /// `N_{F(E)/F(x)}(e) = a² - b²·(x³ + a4·x + a6)`.
    pub fn norm_to_x(&self, e: &FfElem) -> RatFunc {
        let r = &self.rat;
        r.sub(&r.mul(&e.a, &e.a), &r.mul(&r.mul(&e.b, &e.b), &self.cubic))
    }

    /// Apply a map to every number-field coefficient.
    pub fn map_coeffs(&self, e: &FfElem, f: impl Fn(&NfElem) -> NfElem, target: &FunctionField) -> FfElem {
        FfElem { a: self.rat.map_coeffs(&e.a, &f, &target.rat), b: self.rat.map_coeffs(&e.b, &f, &target.rat) }
    }

    pub fn try_map_coeffs(
        &self,
        e: &FfElem,
        f: impl Fn(&NfElem) -> Result<NfElem>,
        target: &FunctionField,
    ) -> Result<FfElem> {
        Ok(FfElem {
            a: self.rat.try_map_coeffs(&e.a, &f, &target.rat)?,
            b: self.rat.try_map_coeffs(&e.b, &f, &target.rat)?,
        })
    }

    /// Value at an affine point `(x0, y0)`, `None` at a pole of `a` or `b`.
    pub fn eval(&self, e: &FfElem, x0: &NfElem, y0: &NfElem) -> Option<NfElem> {
        let f = self.base();
        let a = self.rat.eval(&e.a, x0)?;
        let b = self.rat.eval(&e.b, x0)?;
        Some(f.add(&a, &f.mul(&b, y0)))
    }

    /// All number-field coefficients of numerators and denominators.
    pub fn coefficients<'a>(&self, e: &'a FfElem) -> impl Iterator<Item = &'a NfElem> {
        [&e.a.num, &e.a.den, &e.b.num, &e.b.den].into_iter().flat_map(|p| p.coeffs().iter())
    }

    /// Text rendering in `x` and `y`.
    pub fn display(&self, e: &FfElem) -> String {
        let part = |r: &RatFunc| -> String {
            let n = exact::serial::display_poly(self.base(), &r.num, "x");
            if r.is_polynomial() {
                n
            } else {
                format!("({n})/({})", exact::serial::display_poly(self.base(), &r.den, "x"))
            }
        };
        match (e.a.is_zero(), e.b.is_zero()) {
            (true, true) => "0".into(),
            (false, true) => part(&e.a),
            (true, false) => format!("({})*y", part(&e.b)),
            (false, false) => format!("{} + ({})*y", part(&e.a), part(&e.b)),
        }
    }

    pub fn to_json(&self, e: &FfElem) -> Value {
        let poly = |p: &Poly<NfElem>| -> Value {
            let mut m = Map::new();
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m.insert(i.to_string(), elem_to_json(self.base(), c));
                }
            }
            Value::Object(m)
        };
        let mut m = Map::new();
        m.insert("a_num".into(), poly(&e.a.num));
        m.insert("a_den".into(), poly(&e.a.den));
        m.insert("b_num".into(), poly(&e.b.num));
        m.insert("b_den".into(), poly(&e.b.den));
        Value::Object(m)
    }

    pub fn from_json(&self, v: &Value) -> Result<FfElem> {
        let poly = |key: &str| -> Result<Poly<NfElem>> {
            let obj = v
                .get(key)
                .and_then(Value::as_object)
                .ok_or_else(|| CoreError::InvalidInput(format!("missing polynomial {key}")))?;
            let mut coeffs: Vec<NfElem> = Vec::new();
            for (k, c) in obj {
                let i: usize = k.parse().map_err(|_| CoreError::InvalidInput(format!("bad degree {k}")))?;
                if coeffs.len() <= i {
                    coeffs.resize(i + 1, self.base().zero());
                }
                coeffs[i] = exact::serial::elem_from_json(self.base(), c)?;
            }
            Ok(self.rat.ring.from_coeffs(coeffs))
        };
        let bad = || CoreError::InvalidInput("zero denominator".into());
        let a = self.rat.fraction(poly("a_num")?, poly("a_den")?).ok_or_else(bad)?;
        let b = self.rat.fraction(poly("b_num")?, poly("b_den")?).ok_or_else(bad)?;
        Ok(FfElem { a, b })
    }
}

impl Field for FunctionField {
    type Elem = FfElem;

    fn zero(&self) -> FfElem {
        self.from_rat(self.rat.zero())
    }

    fn one(&self) -> FfElem {
        self.from_rat(self.rat.one())
    }

    fn from_int(&self, n: &BigInt) -> FfElem {
        self.from_rat(self.rat.from_int(n))
    }

    fn is_zero(&self, e: &FfElem) -> bool {
        e.a.is_zero() && e.b.is_zero()
    }

    fn add(&self, p: &FfElem, q: &FfElem) -> FfElem {
        FfElem { a: self.rat.add(&p.a, &q.a), b: self.rat.add(&p.b, &q.b) }
    }

    fn sub(&self, p: &FfElem, q: &FfElem) -> FfElem {
        FfElem { a: self.rat.sub(&p.a, &q.a), b: self.rat.sub(&p.b, &q.b) }
    }

    fn neg(&self, p: &FfElem) -> FfElem {
        FfElem { a: self.rat.neg(&p.a), b: self.rat.neg(&p.b) }
    }

    fn mul(&self, p: &FfElem, q: &FfElem) -> FfElem {
        let r = &self.rat;
        if p.b.is_zero() && q.b.is_zero() {
            return self.from_rat(r.mul(&p.a, &q.a));
        }
        let a = r.add(&r.mul(&p.a, &q.a), &r.mul(&r.mul(&p.b, &q.b), &self.cubic));
        let b = r.add(&r.mul(&p.a, &q.b), &r.mul(&p.b, &q.a));
        FfElem { a, b }
    }

    fn inv(&self, e: &FfElem) -> Option<FfElem> {
        if self.is_zero(e) {
            return None;
        }
        let r = &self.rat;
        let n = r.inv(&self.norm_to_x(e))?;
        Some(FfElem { a: r.mul(&e.a, &n), b: r.neg(&r.mul(&e.b, &n)) })
    }
}

/// Apply an automorphism of the constant field coefficientwise.
pub fn coeff_galois(ff: &FunctionField, g: &Automorphism, e: &FfElem) -> FfElem {
    ff.map_coeffs(e, |c| g.apply(c), ff)
}

/// Fallible inverse for callers that want a typed error.
pub fn ff_inv(ff: &FunctionField, e: &FfElem) -> Result<FfElem> {
    ff.inv(e).ok_or(CoreError::DivisionByZero)
}

/// A Galois extension of constant fields `T/B` seen on function fields:
/// `T(E)` over `B(E)`, with `Gal(T/B)` listed explicitly.
#[derive(Clone, Debug)]
pub struct Descent {
    pub top: FunctionField,
    pub bottom: FunctionField,
    pub sub: Subfield,
    pub group: Vec<Automorphism>,
}

impl Descent {
    /// `top` is a function field over `sub.top`; `group` must be the full
    /// group of automorphisms of `sub.top` fixing `sub`.
    pub fn new(top: &FunctionField, sub: &Subfield, group: Vec<Automorphism>) -> Result<Descent> {
        if top.base() != &sub.top || group.iter().any(|g| g.field() != &sub.top) {
            return Err(CoreError::TowerMismatch);
        }
        let gen = sub.generator_image();
        if group.len() != sub.codegree() || group.iter().any(|g| g.apply(&gen) != gen) {
            return Err(CoreError::InvalidInput("group is not the Galois group of the descent".into()));
        }
        let a4 = sub.pullback(&top.a4).map_err(|_| CoreError::NotInSubfield)?;
        let a6 = sub.pullback(&top.a6).map_err(|_| CoreError::NotInSubfield)?;
        let bottom = FunctionField::new(&sub.field, a4, a6);
        Ok(Descent { top: top.clone(), bottom, sub: sub.clone(), group })
    }

    /// `[T : B]`.
    pub fn degree(&self) -> usize {
        self.group.len()
    }

    pub fn lift(&self, e: &FfElem) -> FfElem {
        self.bottom.map_coeffs(e, |c| self.sub.embed(c), &self.top)
    }

    /// The element as one of `B(E)`; fails unless every coefficient lies in `B`.
    pub fn descend(&self, e: &FfElem) -> Result<FfElem> {
        self.top.try_map_coeffs(e, |c| self.sub.pullback(c).map_err(|_| CoreError::NotInSubfield), &self.bottom)
    }

    pub fn act(&self, g: &Automorphism, e: &FfElem) -> FfElem {
        coeff_galois(&self.top, g, e)
    }

    /// `N_{T(E)/B(E)}(e)`, the product of all conjugates.
    pub fn norm(&self, e: &FfElem) -> Result<FfElem> {
        let t = &self.top;
        let prod = self.group.iter().fold(t.one(), |acc, g| t.mul(&acc, &self.act(g, e)));
        self.descend(&prod)
    }

    /// Distinct conjugates of `e`, each with one automorphism producing it;
    /// the identity comes first.
    pub fn orbit(&self, e: &FfElem) -> Vec<(usize, FfElem)> {
        let mut out: Vec<(usize, FfElem)> = Vec::new();
        let mut order: Vec<usize> = (0..self.group.len()).collect();
        order.sort_by_key(|&i| !self.group[i].is_identity());
        for i in order {
            let c = self.act(&self.group[i], e);
            if !out.iter().any(|(_, d)| *d == c) {
                out.push((i, c));
            }
        }
        out
    }

    /// Automorphisms fixing `e`.
    pub fn stabilizer(&self, e: &FfElem) -> Vec<&Automorphism> {
        self.group.iter().filter(|g| self.act(g, e) == *e).collect()
    }

    /// Minimal polynomial of `e` over `B(E)`.
    pub fn min_poly(&self, e: &FfElem) -> Result<Poly<FfElem>> {
        let ring = PolyRing::new(self.top.clone());
        let p = self
            .orbit(e)
            .iter()
            .fold(ring.one(), |acc, (_, c)| ring.mul(&acc, &ring.linear(c)));
        self.descend_poly(&p)
    }

    pub fn descend_poly(&self, p: &Poly<FfElem>) -> Result<Poly<FfElem>> {
        let coeffs = p.coeffs().iter().map(|c| self.descend(c)).collect::<Result<Vec<_>>>()?;
        Ok(PolyRing::new(self.bottom.clone()).from_coeffs(coeffs))
    }

    /// The unique `f ∈ B(E)[t]` of degree below the degree of `x` with
    /// `f(x) = e`, by interpolation through the conjugates of `x`.
    pub fn express_in_power_basis(&self, e: &FfElem, x: &FfElem) -> Result<Poly<FfElem>> {
        let t = &self.top;
        let ring = PolyRing::new(t.clone());
        let nodes = self.orbit(x);
        let mut f = Poly::zero();
        for (j, (gj, xj)) in nodes.iter().enumerate() {
            let mut basis = ring.one();
            let mut denom = t.one();
            for (k, (_, xk)) in nodes.iter().enumerate() {
                if k != j {
                    basis = ring.mul(&basis, &ring.linear(xk));
                    denom = t.mul(&denom, &t.sub(xj, xk));
                }
            }
            let value = t.div(&self.act(&self.group[*gj], e), &denom).expect("conjugates are distinct");
            f = ring.add(&f, &ring.scale(&basis, &value));
        }
        self.descend_poly(&f).map_err(|_| CoreError::NotInSubfield)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact::factor::{extend, roots};
    use exact::galois::Subfield;
    use exact::numfield::{cyclotomic_field, rat};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn curve_field() -> FunctionField {
        let k = cyclotomic_field(3).unwrap();
        FunctionField::new(&k, k.from_i64(-2), k.from_i64(5))
    }

    fn random_poly(ff: &FunctionField, rng: &mut ChaCha8Rng, deg: usize) -> Poly<NfElem> {
        let k = ff.base();
        let coeffs = (0..=deg)
            .map(|_| {
                let c: Vec<_> = (0..k.abs_degree()).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect();
                NfElem::from_coords(c)
            })
            .collect();
        ff.rat.ring().from_coeffs(coeffs)
    }

    fn random_elem(ff: &FunctionField, rng: &mut ChaCha8Rng) -> FfElem {
        let mut den = random_poly(ff, rng, 1);
        if den.is_zero() {
            den = ff.rat.ring().one();
        }
        let a = ff.rat.fraction(random_poly(ff, rng, 2), den).unwrap();
        let b = ff.rat.from_poly(random_poly(ff, rng, 1));
        ff.elem(a, b)
    }

    #[test]
    fn y_squared_reduces() {
        let ff = curve_field();
        let y = ff.y();
        assert_eq!(ff.mul(&y, &y), ff.from_rat(ff.cubic().clone()));
        let e = ff.add(&ff.x(), &ff.mul(&ff.constant(ff.base().gen()), &y));
        let prod = ff.mul(&e, &ff.conjugate(&e));
        assert!(prod.b.is_zero());
        assert_eq!(prod.a, ff.norm_to_x(&e));
    }

    #[test]
    fn inverses() {
        let ff = curve_field();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let e = random_elem(&ff, &mut rng);
            if ff.is_zero(&e) {
                assert!(ff.inv(&e).is_none());
                continue;
            }
            let inv = ff.inv(&e).unwrap();
            assert_eq!(ff.mul(&e, &inv), ff.one());
        }
        assert_eq!(ff_inv(&ff, &ff.zero()).unwrap_err(), CoreError::DivisionByZero);
    }

    #[test]
    fn json_round_trip() {
        let ff = curve_field();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let e = random_elem(&ff, &mut rng);
        let v = ff.to_json(&e);
        assert_eq!(ff.from_json(&v).unwrap(), e);
        assert_eq!(serde_json::to_string(&ff.to_json(&ff.from_json(&v).unwrap())).unwrap(), v.to_string());
    }

    fn kummer_descent() -> Descent {
        // T = K(∛2) over K = Q(ζ3)
        let k = cyclotomic_field(3).unwrap();
        let rk = PolyRing::new(k.clone());
        let t = extend(&k, &rk.from_coeffs(vec![k.from_i64(-2), k.zero(), k.zero(), k.one()]), "c").unwrap();
        let rt = PolyRing::new(t.clone());
        let h = rt.from_coeffs(vec![t.from_i64(-2), t.zero(), t.zero(), t.one()]);
        let group = roots(&t, &h).unwrap().into_iter().map(|r| Automorphism::new(&t, r).unwrap()).collect();
        let top = FunctionField::new(&t, t.from_i64(-2), t.from_i64(5));
        Descent::new(&top, &Subfield::base_of(&t), group).unwrap()
    }

    #[test]
    fn norms_and_power_basis() {
        let d = kummer_descent();
        let t = d.top.base().clone();
        let c = d.top.constant(t.gen());
        // N(∛2) = 2
        assert_eq!(d.norm(&c).unwrap(), d.bottom.constant(d.bottom.base().from_i64(2)));
        // bottom elements norm to their cube
        let e = d.bottom.add(&d.bottom.x(), &d.bottom.y());
        assert_eq!(d.norm(&d.lift(&e)).unwrap(), d.bottom.pow(&e, 3));
        // e = c0 + c1·c + c2·c² recovers (c0, c1, c2)
        let b = &d.bottom;
        let parts = [b.x(), b.y(), b.add(&b.one(), &b.x())];
        let mut e = d.top.zero();
        for (i, p) in parts.iter().enumerate() {
            e = d.top.add(&e, &d.top.mul(&d.lift(p), &d.top.pow(&c, i as u64)));
        }
        let f = d.express_in_power_basis(&e, &c).unwrap();
        assert_eq!(f.coeffs(), &parts);
        let f = d.express_in_power_basis(&c, &c).unwrap();
        assert_eq!(f, PolyRing::new(b.clone()).x());
        let m = d.min_poly(&c).unwrap();
        assert_eq!(m.degree(), Some(3));
        // y is not a polynomial in a constant of B(E)
        let one = d.top.one();
        assert!(d.express_in_power_basis(&d.top.mul(&c, &d.top.y()), &one).is_err());
    }

    #[test]
    fn norm_is_multiplicative_and_fixed() {
        let d = kummer_descent();
        let t = d.top.base().clone();
        let c = d.top.constant(t.gen());
        let u = d.top.add(&d.top.mul(&c, &d.top.x()), &d.top.y());
        let v = d.top.add(&d.top.x(), &d.top.mul(&c, &c));
        let lhs = d.norm(&d.top.mul(&u, &v)).unwrap();
        let rhs = d.bottom.mul(&d.norm(&u).unwrap(), &d.norm(&v).unwrap());
        assert_eq!(lhs, rhs);
        let g = &d.group[1];
        let h = &d.group[2];
        assert_eq!(d.act(&g.compose(h), &u), d.act(g, &d.act(h, &u)));
    }
}
