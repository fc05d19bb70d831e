//! Detection of `l`-th powers in number fields.
//!
//! A cheap sieve reduces the element modulo primes `p ≡ 1 (mod l)` that
//! split completely in the field: there `F ⊗ F_p ≅ F_p^n`, and unless
//! `a^{(p-1)/l} = 1` componentwise, `a` is provably not an `l`-th power.
//! Survivors are settled exactly by finding a root of `t^l - a`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{ExactError, Result};
use crate::factor::roots;
use crate::field::Field;
use crate::modp::primes_from;
use crate::numfield::{tower_mul, Level, ModOps, NfElem, NumberField};
use crate::poly::PolyRing;

static SPLIT_PRIMES: Mutex<Option<HashMap<(usize, u64), Vec<u64>>>> = Mutex::new(None);

const SIEVE_PRIMES: usize = 6;
const SIEVE_SEARCH: usize = 3000;

fn residue_levels(field: &NumberField, p: u64) -> Option<Vec<Level<u64>>> {
    field
        .rat_levels()
        .iter()
        .map(|lvl| {
            let modulus = lvl
                .modulus
                .iter()
                .map(|v| v.iter().map(|q| reduce_rational(q, p)).collect::<Option<Vec<u64>>>())
                .collect::<Option<Vec<_>>>()?;
            Some(Level { n: lvl.n, block: lvl.block, modulus })
        })
        .collect()
}

fn reduce_rational(q: &num_rational::BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = (q.denom() % &pb).to_u64().unwrap();
    if den == 0 {
        return None;
    }
    let num = ((q.numer() % &pb) + &pb) % &pb;
    let inv = crate::modp::Fp::new(p).inv(den)?;
    Some(crate::modp::Fp::new(p).mul(num.to_u64().unwrap(), inv))
}

fn reduce_elem(a: &NfElem, p: u64) -> Option<Vec<u64>> {
    a.coords().iter().map(|q| reduce_rational(q, p)).collect()
}

fn pow_residue(ops: &ModOps, levels: &[Level<u64>], a: &[u64], mut e: u64) -> Vec<u64> {
    let mut acc = vec![0u64; a.len()];
    acc[0] = 1;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = tower_mul(ops, levels, &acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = tower_mul(ops, levels, &base, &base);
        }
    }
    acc
}

fn one_vec(n: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[0] = 1;
    v
}

/// Whether Frobenius fixes every generator of the tower modulo `p`, i.e.
/// `F ⊗ F_p` is a product of copies of `F_p`.
fn splits_completely(field: &NumberField, p: u64, levels: &[Level<u64>]) -> bool {
    let ops = ModOps(p);
    let n = field.abs_degree();
    for lvl in levels {
        if lvl.n == 1 {
            continue;
        }
        let mut g = vec![0u64; n];
        g[lvl.block] = 1;
        if pow_residue(&ops, levels, &g, p) != g {
            return false;
        }
    }
    true
}

fn split_primes(field: &NumberField, l: u64) -> Vec<u64> {
    let key = (field.id(), l);
    if let Some(v) = SPLIT_PRIMES.lock().unwrap().as_ref().and_then(|m| m.get(&key)) {
        return v.clone();
    }
    let mut found = Vec::new();
    for p in primes_from(10_007).filter(|p| p % l == 1).take(SIEVE_SEARCH) {
        let Some(levels) = residue_levels(field, p) else { continue };
        if splits_completely(field, p, &levels) {
            found.push(p);
            if found.len() == SIEVE_PRIMES {
                break;
            }
        }
    }
    SPLIT_PRIMES
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, found.clone());
    found
}

/// `false` only if `a` is certainly not an `l`-th power.
pub fn passes_power_sieve(field: &NumberField, a: &NfElem, l: u64) -> bool {
    let n = field.abs_degree();
    for p in split_primes(field, l) {
        let Some(ar) = reduce_elem(a, p) else { continue };
        let levels = residue_levels(field, p).expect("checked when the prime was chosen");
        let ops = ModOps(p);
        let b = pow_residue(&ops, &levels, &ar, (p - 1) / l);
        if b == one_vec(n) {
            continue;
        }
        // Only conclusive when `a` is a unit in every component.
        if pow_residue(&ops, &levels, &b, l) == one_vec(n) {
            return false;
        }
    }
    true
}

/// `Some(r)` with `r^l = a` if `a` is an `l`-th power in `field`.
pub fn lth_root(field: &NumberField, a: &NfElem, l: u64) -> Result<Option<NfElem>> {
    if a.is_zero() {
        return Err(ExactError::ZeroElement);
    }
    if *a == field.one() {
        return Ok(Some(field.one()));
    }
    if !passes_power_sieve(field, a, l) {
        return Ok(None);
    }
    let ring = PolyRing::new(field.clone());
    let mut coeffs = vec![field.zero(); l as usize + 1];
    coeffs[0] = field.neg(a);
    coeffs[l as usize] = field.one();
    let r = roots(field, &ring.from_coeffs(coeffs))?;
    Ok(r.into_iter().next())
}

pub fn is_lth_power(field: &NumberField, a: &NfElem, l: u64) -> Result<bool> {
    Ok(lth_root(field, a, l)?.is_some())
}

/// Whether `a / b` is an `l`-th power (equality in `F^×/(F^×)^l`).
pub fn same_lth_power_class(field: &NumberField, a: &NfElem, b: &NfElem, l: u64) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(ExactError::ZeroElement);
    }
    let q = field.div(a, b).unwrap();
    is_lth_power(field, &q, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::cyclotomic_field;

    #[test]
    fn powers_and_non_powers_in_q_zeta5() {
        let k = cyclotomic_field(5).unwrap();
        let z = k.gen();
        assert!(!is_lth_power(&k, &z, 5).unwrap());
        let c = k.add(&k.mul(&z, &z), &k.from_i64(3));
        let a = k.pow(&c, 5);
        let r = lth_root(&k, &a, 5).unwrap().unwrap();
        assert_eq!(k.pow(&r, 5), a);
        // the witness is c times a fifth root of unity
        let ratio = k.div(&r, &c).unwrap();
        assert!((0..5).any(|e| k.pow(&z, e) == ratio));
        assert_eq!(lth_root(&k, &k.one(), 5).unwrap(), Some(k.one()));
        assert_eq!(lth_root(&k, &k.zero(), 5).unwrap_err(), ExactError::ZeroElement);
        assert!(!is_lth_power(&k, &k.from_i64(2), 5).unwrap());
    }

    #[test]
    fn sieve_never_rejects_true_powers() {
        let k = cyclotomic_field(3).unwrap();
        for i in 1..20 {
            let c = k.add(&k.scale_rational(&k.gen(), &crate::numfield::rat(i, 7)), &k.from_i64(i - 9));
            assert!(passes_power_sieve(&k, &k.pow(&c, 3), 3));
        }
    }
}
