//! Formal power products over the Galois conjugates of a Kummer pair.
//!
//! The norm map only multiplies conjugates of its input, so its output
//! can be tracked as an exponent vector over `g(a)` and `g(b)`. When every
//! exponent of such a product is divisible by `l`, dividing them gives an
//! explicit `l`-th root, which is far cheaper than root finding in `L`.

use exact::{Field, NfElem};

use crate::brauer::{nontrivial_subgroups, subfield_of, KummerPair, Lift, NormCertificate};
use crate::error::{CoreError, Result};
use crate::galois::{DivisionField, Representation};

/// `∏_i g_i(a)^{e_i} · ∏_i g_i(b)^{e_{n+i}}` with `g_i` the `i`-th
/// automorphism of the division field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerProduct {
    pub exponents: Vec<i64>,
}

impl PowerProduct {
    pub fn one(n: usize) -> PowerProduct {
        PowerProduct { exponents: vec![0; 2 * n] }
    }

    /// `a` itself.
    pub fn a(n: usize) -> PowerProduct {
        let mut p = PowerProduct::one(n);
        p.exponents[0] = 1;
        p
    }

    /// `b` itself.
    pub fn b(n: usize) -> PowerProduct {
        let mut p = PowerProduct::one(n);
        p.exponents[n] = 1;
        p
    }

    pub fn mul(&self, o: &PowerProduct) -> PowerProduct {
        PowerProduct { exponents: self.exponents.iter().zip(&o.exponents).map(|(x, y)| x + y).collect() }
    }

    pub fn pow(&self, k: i64) -> PowerProduct {
        PowerProduct { exponents: self.exponents.iter().map(|e| e * k).collect() }
    }

    pub fn is_lth_power(&self, l: u64) -> bool {
        self.exponents.iter().all(|e| e.rem_euclid(l as i64) == 0)
    }

    /// The product with every exponent divided by `l`, if exact.
    pub fn lth_root(&self, l: u64) -> Option<PowerProduct> {
        self.is_lth_power(l)
            .then(|| PowerProduct { exponents: self.exponents.iter().map(|e| e / l as i64).collect() })
    }
}

/// The conjugates `g(a)`, `g(b)` of one input pair and the composition
/// table of the automorphisms.
pub struct Conjugates {
    values: Vec<NfElem>,
    /// `compose[g][h]` is the index of `g ∘ h`.
    compose: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl Conjugates {
    pub fn new(df: &DivisionField, pair: &KummerPair) -> Result<Conjugates> {
        let auts = &df.automorphisms;
        let mut values: Vec<NfElem> = auts.iter().map(|g| g.apply(&pair.a)).collect();
        values.extend(auts.iter().map(|g| g.apply(&pair.b)));
        let index = |g: &exact::galois::Automorphism| {
            df.automorphism_index(g).ok_or_else(|| CoreError::Internal("automorphisms are not closed".into()))
        };
        let compose = auts
            .iter()
            .map(|g| auts.iter().map(|h| index(&g.compose(h))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let inverse = (0..auts.len())
            .map(|g| compose[g].iter().position(|&gh| gh == 0).expect("a group"))
            .collect();
        Ok(Conjugates { values, compose, inverse })
    }

    pub fn degree(&self) -> usize {
        self.compose.len()
    }

    /// `g(x)` for the automorphism with index `g`.
    pub fn act(&self, g: usize, x: &PowerProduct) -> PowerProduct {
        let n = self.degree();
        let mut out = PowerProduct::one(n);
        for (i, &e) in x.exponents.iter().enumerate() {
            let (part, h) = (i / n, i % n);
            out.exponents[part * n + self.compose[g][h]] += e;
        }
        out
    }

    pub fn evaluate(&self, df: &DivisionField, x: &PowerProduct) -> NfElem {
        let f = &df.field;
        x.exponents.iter().zip(&self.values).filter(|(e, _)| **e != 0).fold(f.one(), |acc, (&e, v)| {
            f.mul(&acc, &f.pow_signed(v, e).expect("conjugates of a nonzero pair"))
        })
    }

    /// `N_{P,Q}` on formal pairs; mirrors [`crate::brauer::norm_map`].
    pub fn norm_map(
        &self,
        df: &DivisionField,
        rep: &Representation,
        pair: &(PowerProduct, PowerProduct),
        lift: Lift,
    ) -> Result<(PowerProduct, PowerProduct)> {
        let n = self.degree();
        let l = df.l as u32;
        let mut a = PowerProduct::one(n);
        let mut b = PowerProduct::one(n);
        for g in 0..n {
            let inv = rep.matrices[g].inverse().ok_or_else(|| CoreError::Internal("singular Galois matrix".into()))?;
            let [c1, c3, c2, c4] = inv.entries();
            let gi = self.inverse[g];
            let (x, y) = (self.act(gi, &pair.0), self.act(gi, &pair.1));
            let e = |c| lift.apply(c, l);
            a = a.mul(&x.pow(e(c1))).mul(&y.pow(e(c3)));
            b = b.mul(&x.pow(e(c2))).mul(&y.pow(e(c4)));
        }
        Ok((a, b))
    }

    /// `∏_{h ∈ H} h(x)` for a subgroup given by automorphism indices.
    pub fn subgroup_norm(&self, subgroup: &[usize], x: &PowerProduct) -> PowerProduct {
        subgroup.iter().fold(PowerProduct::one(self.degree()), |acc, &h| acc.mul(&self.act(h, x)))
    }

    /// An explicit `l`-th root of the value of `x` when its exponents are
    /// all divisible by `l`, checked by raising it back to the `l`-th power.
    pub fn certified_root(&self, df: &DivisionField, x: &PowerProduct) -> Option<NfElem> {
        let root = x.lth_root(df.l)?;
        let r = self.evaluate(df, &root);
        let f = &df.field;
        (f.pow(&r, df.l) == self.evaluate(df, x)).then_some(r)
    }
}

/// Whether `x` is an `l`-th power in `L`: by an explicit root when the
/// exponents allow one, otherwise by the general test.
pub fn is_lth_power(df: &DivisionField, conj: &Conjugates, x: &PowerProduct) -> Result<bool> {
    if conj.certified_root(df, x).is_some() {
        return Ok(true);
    }
    Ok(exact::power::is_lth_power(&df.field, &conj.evaluate(df, x), df.l)?)
}

/// [`crate::brauer::check_asa`] on a formal pair; `sigma` is an index.
pub fn check_asa(
    df: &DivisionField,
    conj: &Conjugates,
    sigma: usize,
    pair: &(PowerProduct, PowerProduct),
) -> Result<bool> {
    let t = pair.1.mul(&conj.act(conj.inverse[sigma], &pair.0));
    is_lth_power(df, conj, &t)
}

/// [`crate::brauer::same_class`] on formal pairs.
pub fn same_class(
    df: &DivisionField,
    conj: &Conjugates,
    x: &(PowerProduct, PowerProduct),
    y: &(PowerProduct, PowerProduct),
) -> Result<bool> {
    Ok(is_lth_power(df, conj, &x.0.mul(&y.0.pow(-1)))? && is_lth_power(df, conj, &x.1.mul(&y.1.pow(-1)))?)
}

/// [`crate::brauer::norm_one_certificates`] on a formal pair.
///
/// A norm to `K' = L^H` with an explicit `l`-th root in `L` is an `l`-th
/// power in `K'` when `|H|` is prime to `l`: from `y = r^l` and
/// `u|H| + vl = 1` one gets `y = (N(r)^u y^v)^l`. Other cases descend and
/// use the general test.
pub fn norm_one_certificates(
    df: &DivisionField,
    conj: &Conjugates,
    pair: &(PowerProduct, PowerProduct),
) -> Result<Vec<NormCertificate>> {
    let l = df.l;
    let mut out = Vec::new();
    for h in nontrivial_subgroups(df) {
        let coprime = h.len() as u64 % l != 0;
        let mut sub = None;
        let mut norm = |x: &PowerProduct| -> Result<bool> {
            let n = conj.subgroup_norm(&h, x);
            if coprime && conj.certified_root(df, &n).is_some() {
                return Ok(true);
            }
            if sub.is_none() {
                sub = Some(subfield_of(df, &h, "k")?);
            }
            let sub = sub.as_ref().expect("just set");
            let down = sub
                .pullback(&conj.evaluate(df, &n))
                .map_err(|_| CoreError::Internal("norm does not descend".into()))?;
            Ok(exact::power::is_lth_power(&sub.field, &down, l)?)
        };
        let alpha_norm_is_power = norm(&pair.0)?;
        let beta_norm_is_power = norm(&pair.1)?;
        out.push(NormCertificate {
            subgroup_order: h.len(),
            subfield_degree: df.degree() / h.len(),
            alpha_norm_is_power,
            beta_norm_is_power,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::norm_map;
    use crate::curve::Curve;
    use crate::galois::{canonical_basis, division_field, representation};
    use exact::cyclotomic_field;

    #[test]
    fn formal_norm_map_matches_values() {
        let k = cyclotomic_field(3).unwrap();
        let c = Curve::new(&k, k.zero(), k.from_i64(128)).unwrap();
        let df = division_field(&c, 3).unwrap();
        let (p, q) = canonical_basis(&df);
        let rep = representation(&df, &p, &q).unwrap();
        let f = &df.field;
        let pair = KummerPair::new(f, f.add(&f.gen(), &f.from_i64(2)), f.sub(&df.zeta(), &f.gen())).unwrap();
        let conj = Conjugates::new(&df, &pair).unwrap();
        let n = df.degree();
        for lift in [Lift::NonNegative, Lift::Symmetric] {
            let direct = norm_map(&df, &rep, &pair, lift).unwrap();
            let (a, b) = conj.norm_map(&df, &rep, &(PowerProduct::a(n), PowerProduct::b(n)), lift).unwrap();
            assert_eq!(conj.evaluate(&df, &a), direct.a);
            assert_eq!(conj.evaluate(&df, &b), direct.b);
            let cube = a.pow(3).mul(&b.pow(-6));
            let r = conj.certified_root(&df, &cube).unwrap();
            assert_eq!(r, conj.evaluate(&df, &a.mul(&b.pow(-2))));
            let formal = norm_one_certificates(&df, &conj, &(a, b)).unwrap();
            assert_eq!(formal, crate::brauer::norm_one_certificates(&df, &direct).unwrap());
        }
        let g = conj.act(1, &PowerProduct::a(n));
        assert_eq!(conj.evaluate(&df, &g), df.automorphisms[1].apply(&pair.a));
        assert!(conj.certified_root(&df, &PowerProduct::a(n)).is_none());
    }
}
