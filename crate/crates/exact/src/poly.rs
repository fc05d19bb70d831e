//! Dense univariate polynomials over an arbitrary [`Field`].

use crate::field::Field;

/// Coefficients in ascending degree order, with no trailing zeros. The zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Polynomial arithmetic over the field `F`.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    pub base: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(base: F) -> Self {
        PolyRing { base }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().map_or(false, |c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.base.one())
    }

    /// The polynomial `t`.
    pub fn x(&self) -> Poly<F::Elem> {
        Poly { coeffs: vec![self.base.zero(), self.base.one()] }
    }

    /// `t - c`.
    pub fn linear(&self, c: &F::Elem) -> Poly<F::Elem> {
        Poly { coeffs: vec![self.base.neg(c), self.base.one()] }
    }

    pub fn monomial(&self, c: F::Elem, deg: usize) -> Poly<F::Elem> {
        if self.base.is_zero(&c) {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); deg];
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        self.from_coeffs(out)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.base.sub(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => self.base.neg(y),
                (None, None) => unreachable!(),
            });
        }
        self.from_coeffs(out)
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![self.base.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                let p = self.base.mul(x, y);
                out[i + j] = self.base.add(&out[i + j], &p);
            }
        }
        self.from_coeffs(out)
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.base.is_zero(c) {
            return Poly::zero();
        }
        self.from_coeffs(a.coeffs.iter().map(|x| self.base.mul(x, c)).collect())
    }

    pub fn mul_x_pow(&self, a: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, a: &Poly<F::Elem>, mut e: u64) -> Poly<F::Elem> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Option<(Poly<F::Elem>, Poly<F::Elem>)> {
        let db = b.degree()?;
        let lc_inv = self.base.inv(b.lc()?)?;
        if a.len() < b.len() {
            return Some((Poly::zero(), a.clone()));
        }
        let mut rem = a.coeffs.clone();
        let mut quot = vec![self.base.zero(); a.len() - db];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if self.base.is_zero(top) {
                continue;
            }
            let q = self.base.mul(top, &lc_inv);
            for (j, bj) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(bj) {
                    continue;
                }
                let p = self.base.mul(&q, bj);
                rem[k + j] = self.base.sub(&rem[k + j], &p);
            }
            quot[k] = q;
        }
        rem.truncate(db);
        Some((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        self.div_rem(a, b).map(|(_, r)| r)
    }

    /// Exact quotient `a / b`, `None` if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (q, r) = self.div_rem(a, b)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lc() {
            None => Poly::zero(),
            Some(lc) if self.base.is_one(lc) => a.clone(),
            Some(lc) => {
                let inv = self.base.inv(lc).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.lc().map_or(false, |c| self.base.is_one(c))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.degree() == Some(0) || b.degree() == Some(0) {
            return self.one();
        }
        if a.degree().is_some() && b.degree().is_some() {
            if let Some(g) = self.base.fast_gcd(&a.coeffs, &b.coeffs) {
                return self.from_coeffs(g);
            }
        }
        let mut r0 = self.monic(a);
        let mut r1 = self.monic(b);
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1).expect("nonzero divisor");
            r0 = r1;
            r1 = self.monic(&r);
        }
        r0
    }

    /// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1).expect("nonzero divisor");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = self.base.inv(&lc).expect("nonzero");
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let mut acc = self.base.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.base.add(&self.base.mul(&acc, x), c);
        }
        acc
    }

    /// `a(b(t))`.
    pub fn compose(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut acc = Poly::zero();
        for c in a.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, b), &self.constant(c.clone()));
        }
        acc
    }

    /// `a(t + c)`.
    pub fn shift(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        if self.base.is_zero(c) {
            return a.clone();
        }
        // Repeated synthetic division (Ruffini-Horner).
        let mut coeffs = a.coeffs.clone();
        let n = coeffs.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let p = self.base.mul(&coeffs[j + 1], c);
                coeffs[j] = self.base.add(&coeffs[j], &p);
            }
        }
        self.from_coeffs(coeffs)
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.from_coeffs(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.base.mul(c, &self.base.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn map<G: Field>(
        &self,
        a: &Poly<F::Elem>,
        target: &PolyRing<G>,
        mut f: impl FnMut(&F::Elem) -> G::Elem,
    ) -> Poly<G::Elem> {
        target.from_coeffs(a.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Squarefree decomposition (Yun) in characteristic zero: monic
    /// `(factor, multiplicity)` pairs whose product is `monic(a)`.
    pub fn squarefree_decomposition(&self, a: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let a = self.monic(a);
        if a.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let da = self.derivative(&a);
        let b = self.gcd(&a, &da);
        let mut c = self.div_exact(&a, &b).expect("gcd divides");
        let mut d = self.sub(&self.div_exact(&da, &b).expect("gcd divides"), &self.derivative(&c));
        let mut out = Vec::new();
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let g = self.gcd(&c, &d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            c = self.div_exact(&c, &g).expect("gcd divides");
            d = self.sub(&self.div_exact(&d, &g).expect("gcd divides"), &self.derivative(&c));
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self, a: &Poly<F::Elem>) -> bool {
        let g = self.gcd(a, &self.derivative(a));
        g.degree().unwrap_or(0) == 0
    }

    pub fn product<'a>(&self, polys: impl IntoIterator<Item = &'a Poly<F::Elem>>) -> Poly<F::Elem>
    where
        F::Elem: 'a,
    {
        polys.into_iter().fold(self.one(), |acc, p| self.mul(&acc, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn qp(c: &[i64]) -> Poly<BigRational> {
        PolyRing::new(Rationals).from_coeffs(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn div_rem_reconstructs() {
        let r = PolyRing::new(Rationals);
        let a = qp(&[3, 0, -2, 5, 1]);
        let b = qp(&[1, 2, 3]);
        let (quo, rem) = r.div_rem(&a, &b).unwrap();
        assert_eq!(r.add(&r.mul(&quo, &b), &rem), a);
        assert!(rem.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_xgcd() {
        let r = PolyRing::new(Rationals);
        let f = qp(&[-1, 1]); // t - 1
        let a = r.mul(&f, &qp(&[1, 1, 1]));
        let b = r.mul(&f, &qp(&[2, 0, 1]));
        assert_eq!(r.gcd(&a, &b), f);
        let (g, s, t) = r.xgcd(&a, &b);
        assert_eq!(g, f);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
    }

    #[test]
    fn shift_matches_compose() {
        let r = PolyRing::new(Rationals);
        let a = qp(&[5, -3, 0, 2, 7]);
        let c = q(-3);
        assert_eq!(r.shift(&a, &c), r.compose(&a, &qp(&[-3, 1])));
    }

    #[test]
    fn yun_decomposition() {
        let r = PolyRing::new(Rationals);
        let p1 = qp(&[1, 1]);
        let p2 = qp(&[-2, 0, 1]);
        let a = r.mul(&r.pow(&p1, 3), &p2);
        let dec = r.squarefree_decomposition(&a);
        assert_eq!(dec, vec![(p2, 1), (p1, 3)]);
    }
}
