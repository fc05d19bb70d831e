//! Reduction of a number-field tower modulo primes that split completely,
//! and the modular gcd built on it.
//!
//! When every defining polynomial of the tower is squarefree and splits into
//! linear factors modulo `p`, the power-basis order is `p`-maximal and the
//! `N = [F:Q]` choices of roots give ring maps to `F_p` which together
//! identify the order mod `p` with `F_p^N`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::modp::{primes_from, Fp, PolyP};
use crate::numfield::{NfElem, NumberField};

pub(crate) const FIRST_PRIME: u64 = 1 << 28;
/// Candidates examined per requested split prime before giving up.
pub(crate) const SEARCH_WINDOW: usize = 400;
const MAX_GCD_PRIMES: usize = 400;

#[derive(Clone, Debug)]
pub struct SplitPrime {
    pub fp: Fp,
    /// For each map to `F_p`, the images of the absolute basis.
    embeddings: Vec<Vec<u64>>,
    /// Inverse of the matrix `embeddings`: values back to coordinates.
    inverse: Vec<Vec<u64>>,
}

impl SplitPrime {
    /// First split prime `≥ start` within the search window.
    pub(crate) fn search(field: &NumberField, start: u64) -> Option<SplitPrime> {
        primes_from(start).take(SEARCH_WINDOW).find_map(|p| Self::at(field, p))
    }

    /// The maps to `F_p` if `p` splits every level completely.
    pub fn at(field: &NumberField, p: u64) -> Option<SplitPrime> {
        let fp = Fp::new(p);
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let mut embeddings: Vec<Vec<u64>> = vec![vec![1]];
        for level in field.tower().into_iter().skip(1) {
            let h = level.defining_polynomial();
            let n = h.degree()?;
            let mut next = Vec::new();
            for e in &embeddings {
                let image: PolyP = h.coeffs().iter().map(|c| reduce_with(&fp, e, c)).collect::<Option<_>>()?;
                let image = fp.trim(image);
                if image.len() != n + 1 || !fp.is_squarefree(&image) {
                    return None;
                }
                let dd = fp.distinct_degree(&image);
                if dd.len() != 1 || dd[0].1 != 1 {
                    return None;
                }
                for lin in fp.equal_degree(&image, 1, &mut rng) {
                    let r = fp.sub(0, lin[0]);
                    let mut basis = Vec::with_capacity(n * e.len());
                    let mut power = 1;
                    for _ in 0..n {
                        basis.extend(e.iter().map(|&b| fp.mul(b, power)));
                        power = fp.mul(power, r);
                    }
                    next.push(basis);
                }
            }
            embeddings = next;
        }
        let inverse = invert_mod(&fp, &embeddings)?;
        Some(SplitPrime { fp, embeddings, inverse })
    }

    pub fn embedding_count(&self) -> usize {
        self.embeddings.len()
    }

    /// Image of `a` under the `k`-th map, `None` if `a` is not `p`-integral.
    pub fn reduce(&self, k: usize, a: &NfElem) -> Option<u64> {
        reduce_with(&self.fp, &self.embeddings[k], a)
    }

    /// Coordinates mod `p` of the element with the given images.
    pub fn lift(&self, values: &[u64]) -> Vec<u64> {
        self.inverse
            .iter()
            .map(|row| row.iter().zip(values).fold(0, |acc, (&m, &v)| self.fp.add(acc, self.fp.mul(m, v))))
            .collect()
    }

    /// Image of a polynomial under the `k`-th map, `None` if a coefficient
    /// is not integral or the leading coefficient vanishes.
    fn reduce_poly(&self, k: usize, a: &[NfElem]) -> Option<PolyP> {
        let out: PolyP = a.iter().map(|c| self.reduce(k, c)).collect::<Option<_>>()?;
        (out.last() != Some(&0)).then_some(out)
    }

    /// Monic gcds of the images under every map, if all have one degree;
    /// `Some(vec![])` after a first map already shows the inputs coprime.
    fn image_gcds(&self, a: &[NfElem], b: &[NfElem]) -> Option<Vec<PolyP>> {
        let mut out: Vec<PolyP> = Vec::with_capacity(self.embeddings.len());
        for k in 0..self.embeddings.len() {
            let g = self.fp.gcd(&self.reduce_poly(k, a)?, &self.reduce_poly(k, b)?);
            if g.len() == 1 {
                return Some(Vec::new());
            }
            if out.first().is_some_and(|f| f.len() != g.len()) {
                return None;
            }
            out.push(g);
        }
        Some(out)
    }
}

fn invert_mod(fp: &Fp, m: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = fp.inv(a[col][col])?;
        for v in a[col].iter_mut() {
            *v = fp.mul(*v, inv);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && row[col] != 0 {
                let f = row[col];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = fp.sub(*v, fp.mul(f, pv));
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn reduce_rational(fp: &Fp, q: &BigRational) -> Option<u64> {
    let p = BigInt::from(fp.p);
    let den = q.denom().mod_floor(&p).to_u64()?;
    let num = q.numer().mod_floor(&p).to_u64()?;
    Some(fp.mul(num, fp.inv(den)?))
}

fn reduce_with(fp: &Fp, basis: &[u64], a: &NfElem) -> Option<u64> {
    a.coords().iter().zip(basis).try_fold(0, |acc, (c, &b)| {
        if c.is_zero() {
            return Some(acc);
        }
        Some(fp.add(acc, fp.mul(reduce_rational(fp, c)?, b)))
    })
}

/// `n/d ≡ u (mod m)` with `|n|, d ≤ √(m/2)`, if one exists.
pub fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Residues of the coordinates of a monic polynomial's lower coefficients.
struct Accumulated {
    degree: usize,
    modulus: BigInt,
    residues: Vec<Vec<BigInt>>,
}

impl Accumulated {
    fn absorb(&mut self, p: u64, coords: &[Vec<u64>]) {
        let pb = BigInt::from(p);
        let m_inv = BigInt::from(Fp::new(p).inv((&self.modulus % &pb).to_u64().unwrap()).unwrap());
        for (acc, new) in self.residues.iter_mut().zip(coords) {
            for (r, &v) in acc.iter_mut().zip(new) {
                let diff = (BigInt::from(v) - &*r).mod_floor(&pb);
                *r += &self.modulus * ((diff * &m_inv) % &pb);
            }
        }
        self.modulus *= pb;
    }

    fn reconstruct(&self) -> Option<Vec<NfElem>> {
        self.residues
            .iter()
            .map(|c| Some(NfElem::from_coords(c.iter().map(|u| rational_reconstruction(u, &self.modulus)).collect::<Option<_>>()?)))
            .collect()
    }
}

/// Monic gcd of two nonconstant polynomials over `field` by images modulo
/// split primes; `None` if the field has too few split primes.
pub fn modular_gcd(field: &NumberField, a: &[NfElem], b: &[NfElem]) -> Option<Vec<NfElem>> {
    use crate::field::Field;
    use crate::poly::PolyRing;
    let ring = PolyRing::new(field.clone());
    let (pa, pb) = (ring.from_coeffs(a.to_vec()), ring.from_coeffs(b.to_vec()));
    let mut acc: Option<Accumulated> = None;
    let mut previous: Option<Vec<NfElem>> = None;
    for i in 0..MAX_GCD_PRIMES {
        let sp = field.split_prime_at(i)?;
        let Some(gs) = sp.image_gcds(a, b) else { continue };
        if gs.is_empty() {
            return Some(vec![field.one()]);
        }
        let d = gs[0].len() - 1;
        let coords: Vec<Vec<u64>> = (0..d).map(|j| sp.lift(&gs.iter().map(|g| g[j]).collect::<Vec<_>>())).collect();
        match &mut acc {
            Some(st) if st.degree == d => st.absorb(sp.fp.p, &coords),
            Some(st) if st.degree < d => continue,
            _ => {
                acc = Some(Accumulated {
                    degree: d,
                    modulus: BigInt::from(sp.fp.p),
                    residues: coords.iter().map(|c| c.iter().map(|&v| BigInt::from(v)).collect()).collect(),
                });
                previous = None;
                continue;
            }
        }
        let Some(mut g) = acc.as_ref().unwrap().reconstruct() else { continue };
        if previous.as_ref() != Some(&g) {
            previous = Some(g);
            continue;
        }
        g.push(field.one());
        let cand = ring.from_coeffs(g);
        let divides = |p: &crate::poly::Poly<NfElem>| ring.rem(p, &cand).is_some_and(|r| r.is_zero());
        if divides(&pa) && divides(&pb) {
            return Some(cand.into_coeffs());
        }
    }
    None
}
