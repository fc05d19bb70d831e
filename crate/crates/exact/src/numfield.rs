//! Towers of number fields `Q ⊂ F_1 ⊂ … ⊂ F_k` with explicit relative
//! structure.
//!
//! An element of a field whose base has absolute degree `m` and whose
//! relative degree is `n` is stored as a flat vector of `n·m` rationals:
//! block `i` (entries `i·m .. (i+1)·m`) holds the coefficient of `gen^i`,
//! itself laid out recursively as an element of the base. Embedding an
//! element of an ancestor field is therefore zero-padding.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ExactError, Result};
use crate::field::Field;
use crate::linalg::{self, Matrix};
use crate::poly::{Poly, PolyRing};
use crate::split::SplitPrime;

static NEXT_ID: AtomicUsize = AtomicUsize::new(1);
static RATIONALS: OnceLock<NumberField> = OnceLock::new();

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NfElem {
    coords: Vec<BigRational>,
}

impl NfElem {
    pub fn from_coords(coords: Vec<BigRational>) -> Self {
        NfElem { coords }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `(numerators, d)` with `self = numerators / d`.
    pub fn to_integer_vector(&self) -> (Vec<BigInt>, BigInt) {
        let d = self.denominator();
        let nums = self
            .coords
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        (nums, d)
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// One level of a tower as seen by the multiplication kernel: relative
/// degree, block size, and the non-leading coefficients of the monic
/// modulus flattened to coordinates over `Q`.
#[derive(Clone, Debug)]
pub(crate) struct Level<T> {
    pub n: usize,
    pub block: usize,
    pub modulus: Vec<Vec<T>>,
}

pub(crate) trait CoeffOps {
    type T: Clone;
    fn zero(&self) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn sub(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
}

pub(crate) struct IntOps;

impl CoeffOps for IntOps {
    type T = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

pub(crate) struct RatOps;

impl CoeffOps for RatOps {
    type T = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
}

/// Arithmetic modulo a prime below `2^32`.
pub(crate) struct ModOps(pub u64);

impl CoeffOps for ModOps {
    type T = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
}

/// Product in a tower given by `levels` (bottom level first).
pub(crate) fn tower_mul<C: CoeffOps>(
    ops: &C,
    levels: &[Level<C::T>],
    a: &[C::T],
    b: &[C::T],
) -> Vec<C::T> {
    let Some((top, below)) = levels.split_last() else {
        return vec![ops.mul(&a[0], &b[0])];
    };
    let (n, m) = (top.n, top.block);
    let blocks = |v: &'_ [C::T]| -> Vec<Option<Vec<C::T>>> {
        (0..n)
            .map(|i| {
                let s = &v[i * m..(i + 1) * m];
                if s.iter().all(|c| ops.is_zero(c)) {
                    None
                } else {
                    Some(s.to_vec())
                }
            })
            .collect()
    };
    let (ab, bb) = (blocks(a), blocks(b));
    let mut prod: Vec<Option<Vec<C::T>>> = vec![None; 2 * n - 1];
    let accumulate = |slot: &mut Option<Vec<C::T>>, v: Vec<C::T>, subtract: bool| match slot {
        None => {
            *slot = Some(if subtract { v.iter().map(|x| ops.sub(&ops.zero(), x)).collect() } else { v })
        }
        Some(acc) => {
            for (x, y) in acc.iter_mut().zip(&v) {
                *x = if subtract { ops.sub(x, y) } else { ops.add(x, y) };
            }
        }
    };
    for (i, ai) in ab.iter().enumerate() {
        let Some(ai) = ai else { continue };
        for (j, bj) in bb.iter().enumerate() {
            let Some(bj) = bj else { continue };
            let p = tower_mul(ops, below, ai, bj);
            accumulate(&mut prod[i + j], p, false);
        }
    }
    for k in (n..2 * n - 1).rev() {
        let Some(c) = prod[k].take() else { continue };
        if c.iter().all(|x| ops.is_zero(x)) {
            continue;
        }
        for (j, mj) in top.modulus.iter().enumerate() {
            if mj.iter().all(|x| ops.is_zero(x)) {
                continue;
            }
            let p = tower_mul(ops, below, &c, mj);
            accumulate(&mut prod[k - n + j], p, true);
        }
    }
    let mut out = Vec::with_capacity(n * m);
    for slot in prod.into_iter().take(n) {
        match slot {
            Some(v) => out.extend(v),
            None => out.extend((0..m).map(|_| ops.zero())),
        }
    }
    out
}

struct FieldData {
    id: usize,
    base: Option<NumberField>,
    /// Non-leading coefficients `h_0, …, h_{n-1}` of the monic modulus.
    modulus: Vec<NfElem>,
    rel_degree: usize,
    abs_degree: usize,
    label: String,
    depth: usize,
    rat_levels: Vec<Level<BigRational>>,
    int_levels: Option<Vec<Level<BigInt>>>,
    /// Split primes found so far and the next candidate to examine.
    split: Mutex<(Vec<Arc<SplitPrime>>, Option<u64>)>,
}

/// A field in a tower over `Q`; cheap to clone (shared handle).
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id
    }
}

impl Eq for NumberField {}

impl Hash for NumberField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField({}, degree {}/{})", self.0.label, self.0.rel_degree, self.0.abs_degree)
    }
}

impl NumberField {
    pub fn rationals() -> NumberField {
        RATIONALS
            .get_or_init(|| {
                NumberField(Arc::new(FieldData {
                    id: 0,
                    base: None,
                    modulus: Vec::new(),
                    rel_degree: 1,
                    abs_degree: 1,
                    label: "Q".into(),
                    depth: 0,
                    rat_levels: Vec::new(),
                    int_levels: Some(Vec::new()),
                    split: Mutex::new((Vec::new(), Some(crate::split::FIRST_PRIME))),
                }))
            })
            .clone()
    }

    /// Extension of `base` by a root of the monic polynomial `h`, trusting
    /// the caller that `h` is irreducible. See `factor::extend` for the
    /// checked constructor.
    pub fn extend_unchecked(base: &NumberField, h: &Poly<NfElem>, label: &str) -> Result<NumberField> {
        let ring = PolyRing::new(base.clone());
        let n = h.degree().ok_or(ExactError::ZeroPolynomial)?;
        if n == 0 {
            return Err(ExactError::ConstantPolynomial);
        }
        if !ring.is_monic(h) {
            return Err(ExactError::NotMonic);
        }
        let modulus: Vec<NfElem> = h.coeffs()[..n].to_vec();
        let m = base.abs_degree();
        let mut rat_levels = base.0.rat_levels.clone();
        rat_levels.push(Level {
            n,
            block: m,
            modulus: modulus.iter().map(|c| c.coords.clone()).collect(),
        });
        let int_levels = base.0.int_levels.as_ref().and_then(|below| {
            let mut flat = Vec::with_capacity(n);
            for c in &modulus {
                if c.coords.iter().any(|x| !x.is_integer()) {
                    return None;
                }
                flat.push(c.coords.iter().map(|x| x.to_integer()).collect());
            }
            let mut levels = below.clone();
            levels.push(Level { n, block: m, modulus: flat });
            Some(levels)
        });
        Ok(NumberField(Arc::new(FieldData {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            base: Some(base.clone()),
            modulus,
            rel_degree: n,
            abs_degree: n * m,
            label: label.to_string(),
            depth: base.0.depth + 1,
            rat_levels,
            int_levels,
            split: Mutex::new((Vec::new(), Some(crate::split::FIRST_PRIME))),
        })))
    }

    pub fn id(&self) -> usize {
        self.0.id
    }

    pub fn base(&self) -> Option<&NumberField> {
        self.0.base.as_ref()
    }

    pub fn is_rationals(&self) -> bool {
        self.0.base.is_none()
    }

    /// Degree over the immediate base.
    pub fn degree(&self) -> usize {
        self.0.rel_degree
    }

    pub fn abs_degree(&self) -> usize {
        self.0.abs_degree
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn depth(&self) -> usize {
        self.0.depth
    }

    /// Whether every modulus in the tower has integral coordinates.
    pub fn has_integral_tower(&self) -> bool {
        self.0.int_levels.is_some()
    }

    /// The `i`-th prime (from 2^28 upwards) at which every level of the
    /// tower splits into distinct linear factors, with the resulting maps to
    /// `F_p`; `None` once a search window finds nothing.
    pub fn split_prime_at(&self, i: usize) -> Option<Arc<SplitPrime>> {
        let mut state = self.0.split.lock().unwrap();
        while state.0.len() <= i {
            let start = state.1?;
            match SplitPrime::search(self, start) {
                Some(sp) => {
                    state.1 = Some(sp.fp.p + 1);
                    state.0.push(Arc::new(sp));
                }
                None => {
                    state.1 = None;
                    return None;
                }
            }
        }
        Some(state.0[i].clone())
    }

    pub(crate) fn rat_levels(&self) -> &[Level<BigRational>] {
        &self.0.rat_levels
    }

    pub(crate) fn int_levels(&self) -> Option<&[Level<BigInt>]> {
        self.0.int_levels.as_deref()
    }

    /// The monic defining polynomial over the base.
    pub fn defining_polynomial(&self) -> Poly<NfElem> {
        let base = self.base().cloned().unwrap_or_else(NumberField::rationals);
        let mut coeffs = self.0.modulus.clone();
        coeffs.push(base.one());
        PolyRing::new(base).from_coeffs(coeffs)
    }

    /// Fields of the tower from `Q` up to and including `self`.
    pub fn tower(&self) -> Vec<NumberField> {
        let mut out = vec![self.clone()];
        while let Some(b) = out.last().unwrap().base().cloned() {
            out.push(b);
        }
        out.reverse();
        out
    }

    pub fn has_ancestor(&self, other: &NumberField) -> bool {
        let mut cur = Some(self);
        while let Some(f) = cur {
            if f == other {
                return true;
            }
            cur = f.base();
        }
        false
    }

    fn check_ancestor(&self, other: &NumberField) -> Result<()> {
        if self.has_ancestor(other) {
            Ok(())
        } else {
            Err(ExactError::TowerMismatch)
        }
    }

    /// Degree of `self` over the ancestor `other`.
    pub fn degree_over(&self, other: &NumberField) -> Result<usize> {
        self.check_ancestor(other)?;
        Ok(self.abs_degree() / other.abs_degree())
    }

    pub fn gen(&self) -> NfElem {
        if self.is_rationals() {
            return self.one();
        }
        let m = self.abs_degree() / self.degree();
        let mut coords = vec![BigRational::zero(); self.abs_degree()];
        if self.degree() == 1 {
            // Degree-one extension: the generator is the root of z + h_0.
            let base = self.base().unwrap();
            return self.embed(base, &base.neg(&self.0.modulus[0]));
        }
        coords[m] = BigRational::one();
        NfElem { coords }
    }

    pub fn from_rational(&self, q: &BigRational) -> NfElem {
        let mut coords = vec![BigRational::zero(); self.abs_degree()];
        coords[0] = q.clone();
        NfElem { coords }
    }

    /// Image of an element of an ancestor field.
    pub fn embed(&self, ancestor: &NumberField, a: &NfElem) -> NfElem {
        debug_assert!(self.has_ancestor(ancestor));
        debug_assert_eq!(a.coords.len(), ancestor.abs_degree());
        let mut coords = a.coords.clone();
        coords.resize(self.abs_degree(), BigRational::zero());
        NfElem { coords }
    }

    /// Checked version of [`NumberField::embed`].
    pub fn embed_checked(&self, ancestor: &NumberField, a: &NfElem) -> Result<NfElem> {
        self.check_ancestor(ancestor)?;
        if a.coords.len() != ancestor.abs_degree() {
            return Err(ExactError::TowerMismatch);
        }
        Ok(self.embed(ancestor, a))
    }

    /// `a` as an element of the ancestor, if it lies there.
    pub fn restrict(&self, ancestor: &NumberField, a: &NfElem) -> Option<NfElem> {
        let m = ancestor.abs_degree();
        if a.coords[m..].iter().all(|c| c.is_zero()) {
            Some(NfElem { coords: a.coords[..m].to_vec() })
        } else {
            None
        }
    }

    /// Coordinates of `a` over an ancestor, in the basis of monomials in
    /// the intermediate generators.
    pub fn coords_over(&self, ancestor: &NumberField, a: &NfElem) -> Vec<NfElem> {
        let m = ancestor.abs_degree();
        a.coords.chunks(m).map(|c| NfElem { coords: c.to_vec() }).collect()
    }

    pub fn from_coords_over(&self, ancestor: &NumberField, coords: &[NfElem]) -> NfElem {
        debug_assert_eq!(coords.len() * ancestor.abs_degree(), self.abs_degree());
        NfElem { coords: coords.iter().flat_map(|c| c.coords.iter().cloned()).collect() }
    }

    /// The element as a polynomial in the top generator over the base.
    pub fn as_base_poly(&self, a: &NfElem) -> Poly<NfElem> {
        let base = self.base().cloned().unwrap_or_else(NumberField::rationals);
        let ring = PolyRing::new(base.clone());
        if self.is_rationals() {
            return ring.constant(a.clone());
        }
        ring.from_coeffs(self.coords_over(&base, a))
    }

    /// Reduce a polynomial over the base at the generator.
    pub fn from_base_poly(&self, p: &Poly<NfElem>) -> NfElem {
        let base = self.base().expect("not Q");
        let ring = PolyRing::new(base.clone());
        let r = ring.rem(p, &self.defining_polynomial()).expect("monic modulus");
        let mut coords: Vec<NfElem> = r.into_coeffs();
        coords.resize(self.degree(), base.zero());
        self.from_coords_over(base, &coords)
    }

    /// Matrix of multiplication by `a` over an ancestor (column `j` is the
    /// image of the `j`-th basis monomial).
    pub fn mult_matrix(&self, ancestor: &NumberField, a: &NfElem) -> Result<Matrix<NfElem>> {
        let d = self.degree_over(ancestor)?;
        let m = ancestor.abs_degree();
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            let mut e = vec![BigRational::zero(); self.abs_degree()];
            e[j * m] = BigRational::one();
            cols.push(self.coords_over(ancestor, &self.mul(a, &NfElem { coords: e })));
        }
        Ok((0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect())
    }

    /// Norm down to an ancestor field, as the determinant of multiplication.
    pub fn norm_over(&self, ancestor: &NumberField, a: &NfElem) -> Result<NfElem> {
        self.check_ancestor(ancestor)?;
        if ancestor == self {
            return Ok(a.clone());
        }
        if let Some(r) = self.restrict(ancestor, a) {
            let d = self.abs_degree() / ancestor.abs_degree();
            return Ok(ancestor.pow(&r, d as u64));
        }
        let mat = self.mult_matrix(ancestor, a)?;
        if ancestor.is_rationals() {
            let q: Matrix<BigRational> =
                mat.iter().map(|r| r.iter().map(|c| c.coords[0].clone()).collect()).collect();
            return Ok(ancestor.from_rational(&linalg::det_rational(&q)));
        }
        Ok(linalg::determinant(ancestor, &mat))
    }

    pub fn norm_to_q(&self, a: &NfElem) -> BigRational {
        self.norm_over(&NumberField::rationals(), a).expect("Q is in every tower").coords[0].clone()
    }

    pub fn trace_over(&self, ancestor: &NumberField, a: &NfElem) -> Result<NfElem> {
        let mat = self.mult_matrix(ancestor, a)?;
        Ok(mat.iter().enumerate().fold(ancestor.zero(), |acc, (i, r)| ancestor.add(&acc, &r[i])))
    }

    pub fn scale_rational(&self, a: &NfElem, q: &BigRational) -> NfElem {
        NfElem { coords: a.coords.iter().map(|c| c * q).collect() }
    }

    /// Render an element with the generator labels of the tower.
    pub fn format(&self, a: &NfElem) -> String {
        if self.is_rationals() {
            return a.coords[0].to_string();
        }
        let base = self.base().unwrap();
        let parts = self.coords_over(base, a);
        let mut terms = Vec::new();
        for (i, c) in parts.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let inner = base.format(c);
            let simple = c.as_rational().is_some();
            let coeff = if simple { inner } else { format!("({inner})") };
            terms.push(match i {
                0 => coeff,
                _ => {
                    let mono = if i == 1 { self.label().to_string() } else { format!("{}^{}", self.label(), i) };
                    if coeff == "1" {
                        mono
                    } else if coeff == "-1" {
                        format!("-{mono}")
                    } else {
                        format!("{coeff}*{mono}")
                    }
                }
            });
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    s.push_str(" - ");
                    s.push_str(rest);
                }
                None => {
                    s.push_str(" + ");
                    s.push_str(t);
                }
            }
        }
        s
    }

    /// A primitive `l`-th root of unity in the field, if `Q(ζ_l)` is one of
    /// its ancestors with the standard cyclotomic generator.
    pub fn cyclotomic_ancestor(&self, l: u64) -> Option<NumberField> {
        self.tower().into_iter().find(|f| {
            f.base().map_or(false, |b| b.is_rationals())
                && f.degree() as u64 == l - 1
                && f.defining_polynomial() == cyclotomic_polynomial(&NumberField::rationals(), l)
        })
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem { coords: vec![BigRational::zero(); self.abs_degree()] }
    }

    fn one(&self) -> NfElem {
        self.from_rational(&BigRational::one())
    }

    fn from_int(&self, n: &BigInt) -> NfElem {
        self.from_rational(&BigRational::from_integer(n.clone()))
    }

    fn is_zero(&self, a: &NfElem) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() }
    }

    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect() }
    }

    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem { coords: a.coords.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        if let Some(q) = a.as_rational() {
            return self.scale_rational(b, q);
        }
        if let Some(q) = b.as_rational() {
            return self.scale_rational(a, q);
        }
        match self.int_levels() {
            Some(levels) => {
                let (ai, da) = a.to_integer_vector();
                let (bi, db) = b.to_integer_vector();
                let prod = tower_mul(&IntOps, levels, &ai, &bi);
                let den = da * db;
                NfElem {
                    coords: prod.into_iter().map(|x| BigRational::new(x, den.clone())).collect(),
                }
            }
            None => NfElem { coords: tower_mul(&RatOps, self.rat_levels(), &a.coords, &b.coords) },
        }
    }

    fn fast_gcd(&self, a: &[NfElem], b: &[NfElem]) -> Option<Vec<NfElem>> {
        crate::split::modular_gcd(self, a, b)
    }

    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if a.is_zero() {
            return None;
        }
        if let Some(q) = a.as_rational() {
            return Some(self.from_rational(&q.recip()));
        }
        let base = self.base().expect("rational elements handled above");
        if let Some(r) = self.restrict(base, a) {
            return base.inv(&r).map(|i| self.embed(base, &i));
        }
        let ring = PolyRing::new(base.clone());
        let (g, s, _) = ring.xgcd(&self.as_base_poly(a), &self.defining_polynomial());
        debug_assert_eq!(g.degree(), Some(0), "modulus must be irreducible");
        let mut coords = s.into_coeffs();
        coords.resize(self.degree(), base.zero());
        Some(self.from_coords_over(base, &coords))
    }
}

pub fn is_odd_prime(l: i64) -> bool {
    l >= 3 && l % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= l).all(|d| l % d != 0)
}

/// `Φ_l(t) = 1 + t + … + t^{l-1}` for a prime `l`, over `field`.
pub fn cyclotomic_polynomial(field: &NumberField, l: u64) -> Poly<NfElem> {
    PolyRing::new(field.clone()).from_coeffs(vec![field.one(); l as usize])
}

/// `Q(ζ_l)` with generator `z` a root of the `l`-th cyclotomic polynomial.
pub fn cyclotomic_field(l: i64) -> Result<NumberField> {
    if !is_odd_prime(l) {
        return Err(ExactError::InvalidPrime(l));
    }
    let q = NumberField::rationals();
    NumberField::extend_unchecked(&q, &cyclotomic_polynomial(&q, l as u64), "z")
}

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_three() {
        let k = cyclotomic_field(3).unwrap();
        assert_eq!(k.degree(), 2);
        let z = k.gen();
        assert_eq!(k.pow(&z, 3), k.one());
        assert_ne!(z, k.one());
        // z^2 + z + 1 = 0
        let s = k.add(&k.add(&k.mul(&z, &z), &z), &k.one());
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_is_primitive() {
        for l in [3, 5, 7, 11] {
            let k = cyclotomic_field(l).unwrap();
            let z = k.gen();
            for e in 1..l as u64 {
                assert_ne!(k.pow(&z, e), k.one());
            }
            assert_eq!(k.pow(&z, l as u64), k.one());
        }
    }

    #[test]
    fn rejects_bad_primes() {
        for l in [-3, 0, 1, 2, 4, 9, 15] {
            assert_eq!(cyclotomic_field(l).unwrap_err(), ExactError::InvalidPrime(l));
        }
    }

    #[test]
    fn tower_inverse_and_norm() {
        let k = cyclotomic_field(5).unwrap();
        let ring = PolyRing::new(k.clone());
        // L = K(sqrt(z + 3))
        let h = ring.from_coeffs(vec![k.neg(&k.add(&k.gen(), &k.from_i64(3))), k.zero(), k.one()]);
        let l = NumberField::extend_unchecked(&k, &h, "w").unwrap();
        assert_eq!(l.abs_degree(), 8);
        let w = l.gen();
        let a = l.add(&w, &l.embed(&k, &k.gen()));
        let ai = l.inv(&a).unwrap();
        assert_eq!(l.mul(&a, &ai), l.one());
        // N_{L/K}(w) = -(z + 3)
        let n = l.norm_over(&k, &w).unwrap();
        assert_eq!(n, k.neg(&k.add(&k.gen(), &k.from_i64(3))));
        // transitivity of norms
        let direct = l.norm_to_q(&a);
        let stepwise = k.norm_to_q(&l.norm_over(&k, &a).unwrap());
        assert_eq!(direct, stepwise);
    }

    #[test]
    fn rational_modulus_path_matches() {
        let q = NumberField::rationals();
        let ring = PolyRing::new(q.clone());
        // t^2 - 1/2 versus the integral model u^2 - 2 with t = u/2
        let h = ring.from_coeffs(vec![q.from_rational(&rat(-1, 2)), q.zero(), q.one()]);
        let f = NumberField::extend_unchecked(&q, &h, "t").unwrap();
        assert!(!f.has_integral_tower());
        let t = f.gen();
        assert_eq!(f.mul(&t, &t), f.from_rational(&rat(1, 2)));
        let a = f.add(&t, &f.one());
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
    }
}
