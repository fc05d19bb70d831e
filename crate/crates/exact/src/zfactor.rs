//! Factorization over `Z` and `Q`: squarefree decomposition, modular
//! factorization at a well-chosen prime, multifactor Hensel lifting and
//! recombination of lifted factors by subset search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Rationals;
use crate::modp::{primes_from, Fp, PolyP};
use crate::poly::{Poly, PolyRing};

/// Integer polynomial, ascending, trimmed.
pub type IntPoly = Vec<BigInt>;

fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub fn primitive_part(a: &[BigInt]) -> IntPoly {
    let mut c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Scale a rational polynomial to a primitive integer polynomial.
pub fn to_primitive_int(a: &Poly<BigRational>) -> IntPoly {
    let l = a.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = a.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    primitive_part(&ints)
}

pub fn to_rational_poly(a: &[BigInt]) -> Poly<BigRational> {
    PolyRing::new(Rationals).from_coeffs(a.iter().map(|c| BigRational::from_integer(c.clone())).collect())
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn modulo(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce(a: &[BigInt], m: &BigInt) -> IntPoly {
    trim(a.iter().map(|c| modulo(c, m)).collect())
}

/// Exact quotient over `Z`, `None` if `b` does not divide `a`.
pub fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    let lc = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &q * bj;
        }
        quot[k] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(trim(quot))
    } else {
        None
    }
}

// ---- arithmetic in (Z/m)[x] with m = p^k ----

struct ModRing {
    m: BigInt,
}

impl ModRing {
    fn add(&self, a: &[BigInt], b: &[BigInt]) -> IntPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        reduce(
            &(0..n).map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).collect::<Vec<_>>(),
            &self.m,
        )
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> IntPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        reduce(
            &(0..n).map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).collect::<Vec<_>>(),
            &self.m,
        )
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> IntPoly {
        reduce(&int_mul(a, b), &self.m)
    }

    /// Division by a monic polynomial.
    fn div_rem_monic(&self, a: &[BigInt], b: &[BigInt]) -> (IntPoly, IntPoly) {
        let db = b.len() - 1;
        if a.len() < b.len() {
            return (Vec::new(), reduce(a, &self.m));
        }
        let mut rem: IntPoly = a.iter().map(|c| modulo(c, &self.m)).collect();
        let mut quot = vec![BigInt::zero(); a.len() - db];
        for k in (0..quot.len()).rev() {
            let q = rem[k + db].clone();
            if q.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] = modulo(&(&rem[k + j] - &q * bj), &self.m);
            }
            quot[k] = q;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }
}

/// One quadratic Hensel step: from `f ≡ g h (mod m)` and `s g + t h ≡ 1
/// (mod m)` with `h` monic, produce the same relations modulo `m_new`
/// (which must divide `m^2`).
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m_new: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let r = ModRing { m: m_new.clone() };
    let e = r.sub(f, &r.mul(g, h));
    let (q, rem) = r.div_rem_monic(&r.mul(s, &e), h);
    let g2 = r.add(&r.add(g, &r.mul(t, &e)), &r.mul(&q, g));
    let h2 = r.add(h, &rem);
    let b = r.sub(&r.add(&r.mul(s, &g2), &r.mul(t, &h2)), &[BigInt::one()]);
    let (c, d) = r.div_rem_monic(&r.mul(s, &b), &h2);
    let s2 = r.sub(s, &d);
    let t2 = r.sub(&r.sub(t, &r.mul(t, &b)), &r.mul(&c, &g2));
    (g2, h2, s2, t2)
}

fn to_modp(a: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let v: PolyP = a.iter().map(|c| modulo(c, &pb).to_u64().unwrap()).collect();
    Fp::new(p).trim(v)
}

fn from_modp(a: &[u64]) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `f ≡ lc(f) · ∏ factors (mod p)` (factors monic) to modulus
/// `p^k`, splitting off one factor at a time.
fn multifactor_lift(f: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<IntPoly> {
    let fp = Fp::new(p);
    let pb = BigInt::from(p);
    let target = pb.pow(k);
    let mut out = Vec::with_capacity(factors.len());
    let mut current = reduce(f, &target);
    for (i, fac) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // The remaining cofactor is lc · fac; make it monic.
            let lc = current.last().unwrap().clone();
            let inv = lc.extended_gcd(&target).x;
            out.push(reduce(&current.iter().map(|c| c * &inv).collect::<Vec<_>>(), &target));
            break;
        }
        // h = fac (monic), g = the rest with the leading coefficient.
        let cur_p = to_modp(&current, p);
        let (g0, r0) = fp.div_rem(&cur_p, fac);
        debug_assert!(r0.is_empty());
        let (one, s0, t0) = fp.xgcd(&g0, fac);
        debug_assert_eq!(one, vec![1]);
        let (mut g, mut h, mut s, mut t) = (from_modp(&g0), from_modp(fac), from_modp(&s0), from_modp(&t0));
        let mut m = pb.clone();
        while m < target {
            let m_new = (&m * &m).min(target.clone());
            let cur = reduce(&current, &m_new);
            let res = hensel_step(&cur, &g, &h, &s, &t, &m_new);
            g = res.0;
            h = res.1;
            s = res.2;
            t = res.3;
            m = m_new;
        }
        out.push(h);
        current = g;
    }
    out
}

/// Landau–Mignotte style bound on coefficients of any factor of `f`,
/// multiplied by the leading coefficient.
fn factor_coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let n = f.len() - 1;
    (BigInt::one() << n) * norm * f.last().unwrap().abs()
}

/// Irreducible factors of a primitive squarefree integer polynomial of
/// positive degree with positive leading coefficient.
pub fn zassenhaus(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    // Choose the good prime with the fewest modular factors.
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in primes_from(11) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = fp.monic(&to_modp(f, p));
        if fbar.len() != f.len() || !fp.is_squarefree(&fbar) {
            continue;
        }
        let count = fp.count_factors(&fbar);
        if best.map_or(true, |(_, c)| count < c) {
            best = Some((p, count));
        }
        if count == 1 {
            return vec![f.to_vec()];
        }
        tried += 1;
        if tried >= 10 {
            break;
        }
    }
    let (p, _) = best.expect("some prime is good for a squarefree polynomial");
    let fp = Fp::new(p);
    let modular = fp.factor_squarefree(&fp.monic(&to_modp(f, p)));
    let bound = factor_coefficient_bound(f) * 2 + 1;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    while pb.pow(k) <= bound {
        k += 1;
    }
    let modulus = pb.pow(k);
    let lifted = multifactor_lift(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn recombine(f: &[BigInt], mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut progress = false;
        let r = lifted.len();
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let lc = remaining.last().unwrap().clone();
            let f0 = remaining[0].clone();
            // Constant-term filter.
            let mut c0 = lc.clone();
            for &i in &subset {
                c0 = modulo(&(c0 * lifted[i].first().cloned().unwrap_or_default()), modulus);
            }
            let c0 = symmetric(&c0, modulus);
            let plausible = c0.is_zero() && f0.is_zero()
                || !c0.is_zero() && (&f0 * &lc % &c0).is_zero();
            if plausible {
                let mut cand: IntPoly = vec![lc.clone()];
                for &i in &subset {
                    cand = reduce(&int_mul(&cand, &lifted[i]), modulus);
                }
                let cand = primitive_part(&cand.iter().map(|c| symmetric(c, modulus)).collect::<Vec<_>>());
                if let Some(q) = int_div_exact(&remaining, &cand) {
                    found.push(cand);
                    remaining = primitive_part(&q);
                    for &i in subset.iter().rev() {
                        lifted.remove(i);
                    }
                    progress = true;
                    break;
                }
            }
            if !next_subset(&mut subset, r) {
                break;
            }
        }
        if !progress {
            size += 1;
        }
    }
    if remaining.len() > 1 {
        found.push(remaining);
    }
    found
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Factor a nonzero rational polynomial into monic irreducibles with
/// multiplicities. Returns `(leading coefficient, factors)`.
pub fn factor_rational(a: &Poly<BigRational>) -> (BigRational, Vec<(Poly<BigRational>, usize)>) {
    let ring = PolyRing::new(Rationals);
    let lc = a.lc().cloned().expect("nonzero polynomial");
    let mut out = Vec::new();
    for (part, mult) in ring.squarefree_decomposition(a) {
        let int = to_primitive_int(&part);
        // Factor out powers of t first; they are cheap and keep f(0) != 0.
        let shift = int.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            out.push((ring.x(), mult));
        }
        let body: IntPoly = int[shift..].to_vec();
        if body.len() <= 1 {
            continue;
        }
        for g in zassenhaus(&body) {
            out.push((ring.monic(&to_rational_poly(&g)), mult));
        }
    }
    out.sort_by(|x, y| (x.0.degree(), &x.0).cmp(&(y.0.degree(), &y.0)));
    (lc, out)
}

/// Whether a squarefree-or-not rational polynomial is irreducible over `Q`.
pub fn is_irreducible_rational(a: &Poly<BigRational>) -> bool {
    let (_, f) = factor_rational(a);
    f.len() == 1 && f[0].1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn qp(c: &[i64]) -> Poly<BigRational> {
        to_rational_poly(&ip(c))
    }

    #[test]
    fn swinnerton_dyer_like_product() {
        // (t^4 - 10 t^2 + 1)(t^2 - 2)(3 t + 1)
        let a = int_mul(&int_mul(&ip(&[1, 0, -10, 0, 1]), &ip(&[-2, 0, 1])), &ip(&[1, 3]));
        let mut f = zassenhaus(&a);
        f.sort_by_key(|g| g.len());
        assert_eq!(f, vec![ip(&[1, 3]), ip(&[-2, 0, 1]), ip(&[1, 0, -10, 0, 1])]);
    }

    #[test]
    fn cyclotomic_irreducible() {
        for l in [3usize, 5, 7, 11, 13] {
            assert!(is_irreducible_rational(&qp(&vec![1; l])));
        }
    }

    #[test]
    fn multiplicities_and_powers_of_t() {
        let ring = PolyRing::new(Rationals);
        let a = ring.mul(&ring.pow(&qp(&[1, 1]), 2), &ring.mul(&qp(&[0, 0, 2]), &qp(&[5, 0, 1])));
        let (lc, f) = factor_rational(&a);
        assert_eq!(lc, BigRational::from_integer(2.into()));
        assert_eq!(f, vec![(qp(&[0, 1]), 2), (qp(&[1, 1]), 2), (qp(&[5, 0, 1]), 1)]);
    }

    #[test]
    fn many_linear_factors() {
        let mut a = ip(&[1]);
        for r in -6..=6 {
            a = int_mul(&a, &ip(&[r, 2]));
        }
        let a = primitive_part(&a);
        let f = zassenhaus(&a);
        assert_eq!(f.len(), 13);
        let back = f.iter().fold(ip(&[1]), |acc, g| int_mul(&acc, g));
        assert_eq!(primitive_part(&back), a);
    }
}
