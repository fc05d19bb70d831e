//! Polynomials over small prime fields `F_p` (`p < 2^31`) and their
//! factorization by distinct-degree and Cantor–Zassenhaus splitting.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coefficients in ascending order, trimmed.
pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn trim(&self, mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(out)
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(out)
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        // Accumulate in u128 and reduce once per output coefficient.
        let mut acc = vec![0u128; a.len() + b.len() - 1];
        let limit = u128::MAX - (self.p as u128) * (self.p as u128);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let slot = &mut acc[i + j];
                *slot += x as u128 * y as u128;
                if *slot > limit {
                    *slot %= self.p as u128;
                }
            }
        }
        self.trim(acc.into_iter().map(|c| (c % self.p as u128) as u64).collect())
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        self.trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let db = b.len() - 1;
        let lc_inv = self.inv(b[db]).expect("nonzero divisor");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let mut rem = a.to_vec();
        let mut quot = vec![0; a.len() - db];
        for k in (0..quot.len()).rev() {
            let top = rem[k + db];
            if top == 0 {
                continue;
            }
            let q = self.mul(top, lc_inv);
            quot[k] = q;
            for (j, &bj) in b.iter().enumerate() {
                rem[k + j] = self.sub(rem[k + j], self.mul(q, bj));
            }
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut r0 = self.trim(a.to_vec());
        let mut r1 = self.trim(b.to_vec());
        while !r1.is_empty() {
            let r = self.rem(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        self.monic(&r0)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("nonzero input")).unwrap();
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        self.trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect())
    }

    pub fn mul_mod(&self, a: &[u64], b: &[u64], m: &[u64]) -> PolyP {
        self.rem(&self.poly_mul(a, b), m)
    }

    pub fn pow_mod(&self, a: &[u64], mut e: u64, m: &[u64]) -> PolyP {
        let mut base = self.rem(a, m);
        let mut acc = self.rem(&[1], m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base, m);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_mod(&base, &base, m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self, a: &[u64]) -> bool {
        self.gcd(a, &self.derivative(a)).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                break;
            }
            h = self.pow_mod(&h, self.p, &rest);
            let g = self.gcd(&self.poly_sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Split a monic squarefree product of irreducibles of degree `d`.
    pub fn equal_degree(&self, f: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            // a^{(p^d - 1)/2} = (a · a^p · … · a^{p^{d-1}})^{(p-1)/2}
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = self.pow_mod(&t, self.p, f);
                norm = self.mul_mod(&norm, &t, f);
            }
            let b = self.pow_mod(&norm, (self.p - 1) / 2, f);
            let g = self.gcd(&self.poly_sub(&b, &[1]), f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial
    /// (odd `p` only).
    pub fn factor_squarefree(&self, f: &[u64]) -> Vec<PolyP> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.p ^ (f.len() as u64) << 32);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, &mut rng));
        }
        out.sort();
        out
    }

    /// Number of irreducible factors (from the distinct-degree split only).
    pub fn count_factors(&self, f: &[u64]) -> usize {
        self.distinct_degree(f).iter().map(|(g, d)| (g.len() - 1) / d).sum()
    }
}

/// Odd primes in increasing order starting at `start`.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(3)..).filter(|&n| n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_product_of_known_irreducibles() {
        let f = Fp::new(101);
        let a: PolyP = vec![2, 0, 1]; // t^2 + 2, irreducible mod 101 iff -2 is a non-residue
        let b: PolyP = vec![5, 1];
        let c: PolyP = vec![1, 1, 0, 1]; // t^3 + t + 1
        let prod = f.poly_mul(&f.poly_mul(&a, &b), &c);
        let factors = f.factor_squarefree(&prod);
        let back = factors.iter().fold(vec![1], |acc, g| f.poly_mul(&acc, g));
        assert_eq!(back, prod);
        assert!(factors.iter().all(|g| g.last() == Some(&1)));
    }

    #[test]
    fn cyclotomic_split_mod_one_mod_l() {
        // Φ_5 splits into linear factors modulo 11.
        let f = Fp::new(11);
        let phi = vec![1, 1, 1, 1, 1];
        let factors = f.factor_squarefree(&phi);
        assert_eq!(factors.len(), 4);
        assert!(factors.iter().all(|g| g.len() == 2));
        // and stays irreducible modulo 2 mod 5 primes of order 4, e.g. 7
        assert_eq!(Fp::new(7).count_factors(&phi), 1);
    }

    #[test]
    fn xgcd_identity() {
        let f = Fp::new(13);
        let a = vec![3, 4, 1, 7];
        let b = vec![1, 0, 5];
        let (g, s, t) = f.xgcd(&a, &b);
        assert_eq!(f.poly_add(&f.poly_mul(&s, &a), &f.poly_mul(&t, &b)), g);
    }
}
