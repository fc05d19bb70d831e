//! 2×2 matrices over `F_l`, finite subgroups of `SL_2(F_l)` and the
//! symbol-length bounds attached to them.

use std::collections::{BTreeSet, VecDeque};

use serde_json::{json, Value};

use crate::error::{CoreError, Result};

/// Largest prime for which exhaustive conjugation is attempted.
pub const DESK_SCALE_MAX: u32 = 13;

/// Row-major `[[a, b], [c, d]]` with entries in `[0, l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatModL {
    l: u32,
    e: [u32; 4],
}

fn reduce(v: i64, l: u32) -> u32 {
    v.rem_euclid(l as i64) as u32
}

fn inv_mod(a: u32, l: u32) -> Option<u32> {
    if a % l == 0 {
        return None;
    }
    let mut r = 1u64;
    let mut b = a as u64;
    let mut e = l as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % l as u64;
        }
        b = b * b % l as u64;
        e >>= 1;
    }
    Some(r as u32)
}

/// Smallest positive quadratic non-residue modulo an odd prime.
pub fn smallest_nonresidue(l: u32) -> u32 {
    let squares: BTreeSet<u32> = (1..l).map(|x| x * x % l).collect();
    (2..l).find(|x| !squares.contains(x)).expect("odd prime has non-residues")
}

impl MatModL {
    pub fn new(l: u32, entries: [i64; 4]) -> Self {
        MatModL { l, e: entries.map(|v| reduce(v, l)) }
    }

    pub fn identity(l: u32) -> Self {
        Self::new(l, [1, 0, 0, 1])
    }

    pub fn scalar(l: u32, s: i64) -> Self {
        Self::new(l, [s, 0, 0, s])
    }

    pub fn zero(l: u32) -> Self {
        Self::new(l, [0, 0, 0, 0])
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    pub fn det(&self) -> u32 {
        let [a, b, c, d] = self.e.map(|v| v as i64);
        reduce(a * d - b * c, self.l)
    }

    pub fn trace(&self) -> u32 {
        (self.e[0] + self.e[3]) % self.l
    }

    pub fn is_scalar(&self) -> bool {
        self.e[1] == 0 && self.e[2] == 0 && self.e[0] == self.e[3]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.l)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.e.map(|v| v as i64);
        let [p, q, r, s] = o.e.map(|v| v as i64);
        Self::new(self.l, [a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s])
    }

    pub fn add(&self, o: &Self) -> Self {
        let e: Vec<i64> = (0..4).map(|i| self.e[i] as i64 + o.e[i] as i64).collect();
        Self::new(self.l, [e[0], e[1], e[2], e[3]])
    }

    pub fn neg(&self) -> Self {
        Self::new(self.l, self.e.map(|v| -(v as i64)))
    }

    pub fn inverse(&self) -> Option<Self> {
        let di = inv_mod(self.det(), self.l)? as i64;
        let [a, b, c, d] = self.e.map(|v| v as i64);
        Some(Self::new(self.l, [d * di, -b * di, -c * di, a * di]))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity(self.l);
        let mut base = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order; `None` for singular matrices.
    pub fn order(&self) -> Option<u64> {
        self.inverse()?;
        let mut m = *self;
        let mut k = 1;
        while !m.is_identity() {
            m = m.mul(self);
            k += 1;
        }
        Some(k)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse().expect("invertible conjugator"))
    }

    pub fn apply(&self, v: [u32; 2]) -> [u32; 2] {
        let [a, b, c, d] = self.e.map(|x| x as i64);
        let (x, y) = (v[0] as i64, v[1] as i64);
        [reduce(a * x + b * y, self.l), reduce(c * x + d * y, self.l)]
    }

    pub fn to_json(&self) -> Value {
        json!([[self.e[0], self.e[1]], [self.e[2], self.e[3]]])
    }

    pub fn from_json(l: u32, v: &Value) -> Result<Self> {
        let bad = || CoreError::InvalidInput(format!("expected a 2x2 integer matrix, got {v}"));
        let rows = v.as_array().filter(|r| r.len() == 2).ok_or_else(bad)?;
        let mut e = [0i64; 4];
        for (i, row) in rows.iter().enumerate() {
            let cols = row.as_array().filter(|c| c.len() == 2).ok_or_else(bad)?;
            for (j, x) in cols.iter().enumerate() {
                e[2 * i + j] = x.as_i64().ok_or_else(bad)?;
            }
        }
        Ok(Self::new(l, e))
    }
}

/// All elements of `GL_2(F_l)`.
pub fn general_linear(l: u32) -> Vec<MatModL> {
    let l64 = l as i64;
    let mut out = Vec::new();
    for a in 0..l64 {
        for b in 0..l64 {
            for c in 0..l64 {
                for d in 0..l64 {
                    let m = MatModL::new(l, [a, b, c, d]);
                    if m.det() != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// All elements of `SL_2(F_l)`.
pub fn special_linear(l: u32) -> Vec<MatModL> {
    general_linear(l).into_iter().filter(|m| m.det() == 1).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    Trivial,
    Borel,
    SplitCartan,
    NonsplitCartan,
    NormalizerSplit,
    NormalizerNonsplit,
    S4Type,
    FullSL2,
    Other,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Trivial => "Trivial",
            Classification::Borel => "Borel",
            Classification::SplitCartan => "SplitCartan",
            Classification::NonsplitCartan => "NonsplitCartan",
            Classification::NormalizerSplit => "NormalizerSplit",
            Classification::NormalizerNonsplit => "NormalizerNonsplit",
            Classification::S4Type => "S4Type",
            Classification::FullSL2 => "FullSL2",
            Classification::Other => "Other",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        use Classification::*;
        [Trivial, Borel, SplitCartan, NonsplitCartan, NormalizerSplit, NormalizerNonsplit, S4Type, FullSL2, Other]
            .into_iter()
            .find(|c| c.name() == s)
    }
}

/// Which standard subgroups some conjugate of the group lies in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Containment {
    pub borel: bool,
    pub split_cartan: bool,
    pub nonsplit_cartan: bool,
    pub normalizer_split: bool,
    pub normalizer_nonsplit: bool,
}

impl Containment {
    pub fn to_json(&self) -> Value {
        json!({
            "borel": self.borel,
            "split_cartan": self.split_cartan,
            "nonsplit_cartan": self.nonsplit_cartan,
            "normalizer_split": self.normalizer_split,
            "normalizer_nonsplit": self.normalizer_nonsplit,
        })
    }

    pub fn from_json(v: &Value) -> Result<Containment> {
        let flag = |k: &str| {
            v.get(k).and_then(Value::as_bool).ok_or_else(|| CoreError::InvalidInput(format!("missing flag {k}")))
        };
        Ok(Containment {
            borel: flag("borel")?,
            split_cartan: flag("split_cartan")?,
            nonsplit_cartan: flag("nonsplit_cartan")?,
            normalizer_split: flag("normalizer_split")?,
            normalizer_nonsplit: flag("normalizer_nonsplit")?,
        })
    }
}

/// A finite subgroup of `SL_2(F_l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupImage {
    pub l: u32,
    pub generators: Vec<MatModL>,
    /// Sorted.
    pub elements: Vec<MatModL>,
    pub classification: Classification,
    pub containment: Containment,
}

impl GroupImage {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &MatModL) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn has_element_of_order(&self, d: u64) -> bool {
        self.elements.iter().any(|m| m.order() == Some(d))
    }

    pub fn max_element_order(&self) -> u64 {
        self.elements.iter().filter_map(|m| m.order()).max().unwrap_or(1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "order": self.order(),
            "classification": self.classification.name(),
            "containment": self.containment.to_json(),
        })
    }
}

/// Subgroup generated by `generators`, classified.
pub fn closure(l: u32, generators: &[MatModL]) -> Result<GroupImage> {
    for g in generators {
        if g.det() != 1 {
            return Err(CoreError::NotSL2(g.det()));
        }
    }
    let elements = close(l, generators);
    let (classification, containment) = classify_elements(l, generators, &elements);
    Ok(GroupImage { l, generators: generators.to_vec(), elements, classification, containment })
}

fn close(l: u32, generators: &[MatModL]) -> Vec<MatModL> {
    let mut seen: BTreeSet<MatModL> = BTreeSet::new();
    let id = MatModL::identity(l);
    seen.insert(id);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let n = m.mul(g);
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    seen.into_iter().collect()
}

fn in_borel(m: &MatModL) -> bool {
    m.e[2] == 0
}

fn in_split(m: &MatModL) -> bool {
    m.e[1] == 0 && m.e[2] == 0
}

fn in_nonsplit(m: &MatModL, eps: u32) -> bool {
    m.e[0] == m.e[3] && m.e[1] == m.e[2] * eps % m.l
}

fn in_normalizer_split(m: &MatModL) -> bool {
    in_split(m) || (m.e[0] == 0 && m.e[3] == 0)
}

fn in_normalizer_nonsplit(m: &MatModL, eps: u32) -> bool {
    let l = m.l;
    in_nonsplit(m, eps) || ((m.e[0] + m.e[3]) % l == 0 && (m.e[1] + m.e[2] * eps) % l == 0)
}

/// Containment flags by exhaustive conjugation over `GL_2(F_l)`.
pub fn containment(l: u32, generators: &[MatModL]) -> Containment {
    let eps = smallest_nonresidue(l);
    let mut c = Containment::default();
    for g in general_linear(l) {
        let conj: Vec<MatModL> = generators.iter().map(|m| m.conjugate_by(&g)).collect();
        c.borel |= conj.iter().all(in_borel);
        c.split_cartan |= conj.iter().all(in_split);
        c.nonsplit_cartan |= conj.iter().all(|m| in_nonsplit(m, eps));
        c.normalizer_split |= conj.iter().all(in_normalizer_split);
        c.normalizer_nonsplit |= conj.iter().all(|m| in_normalizer_nonsplit(m, eps));
        if c.borel && c.split_cartan && c.nonsplit_cartan && c.normalizer_split && c.normalizer_nonsplit {
            break;
        }
    }
    c
}

fn classify_elements(l: u32, generators: &[MatModL], elements: &[MatModL]) -> (Classification, Containment) {
    let order = elements.len() as u64;
    let l64 = l as u64;
    let c = containment(l, generators);
    let tag = if order == 1 {
        Classification::Trivial
    } else if order == l64 * (l64 * l64 - 1) {
        Classification::FullSL2
    } else if c.split_cartan {
        Classification::SplitCartan
    } else if c.nonsplit_cartan {
        Classification::NonsplitCartan
    } else if c.borel {
        Classification::Borel
    } else if c.normalizer_split {
        Classification::NormalizerSplit
    } else if c.normalizer_nonsplit {
        Classification::NormalizerNonsplit
    } else if is_s4_type(elements) {
        Classification::S4Type
    } else {
        Classification::Other
    };
    (tag, c)
}

/// Projective image of order 24 with no element of order above 4.
fn is_s4_type(elements: &[MatModL]) -> bool {
    let l = elements[0].l;
    if elements.len() != 48 || !elements.contains(&MatModL::scalar(l, -1)) {
        return false;
    }
    let neg_id = MatModL::scalar(l, -1);
    elements.iter().all(|m| {
        let mut k = 1;
        let mut p = *m;
        while !(p.is_identity() || p == neg_id) {
            p = p.mul(m);
            k += 1;
        }
        k <= 4
    })
}

pub fn classify(group: &GroupImage) -> Classification {
    classify_elements(group.l, &group.generators, &group.elements).0
}

/// Entrywise sum of all elements.
pub fn matrix_sum(group: &GroupImage) -> MatModL {
    group.elements.iter().fold(MatModL::zero(group.l), |acc, m| acc.add(m))
}

/// Every cyclic subgroup of `SL_2(F_l)`, each listed once.
pub fn cyclic_subgroups(l: u32) -> Vec<GroupImage> {
    let mut seen: BTreeSet<Vec<MatModL>> = BTreeSet::new();
    let mut out = Vec::new();
    for m in special_linear(l) {
        let elems = close(l, &[m]);
        if seen.insert(elems.clone()) {
            out.push(GroupImage {
                l,
                generators: vec![m],
                elements: elems,
                classification: Classification::Other,
                containment: Containment::default(),
            });
        }
    }
    out
}

/// `(B, T)` with `T σ T⁻¹ = B = [[0, -1], [1, tr σ]]`; the columns of `T⁻¹`
/// are a vector `v` and `σ v`.
pub fn rational_canonical_basis(sigma: &MatModL) -> Result<(MatModL, MatModL)> {
    if sigma.is_scalar() {
        return Err(CoreError::ScalarMatrix);
    }
    let l = sigma.l;
    let v = [[1, 0], [0, 1], [1, 1]]
        .into_iter()
        .find(|v| {
            let w = sigma.apply(*v);
            (v[0] as i64 * w[1] as i64 - v[1] as i64 * w[0] as i64).rem_euclid(l as i64) != 0
        })
        .expect("non-scalar matrix has a cyclic vector");
    let w = sigma.apply(v);
    let t_inv = MatModL::new(l, [v[0] as i64, w[0] as i64, v[1] as i64, w[1] as i64]);
    let t = t_inv.inverse().expect("independent columns");
    let b = MatModL::new(l, [0, -(sigma.det() as i64), 1, sigma.trace() as i64]);
    debug_assert_eq!(t.mul(sigma).mul(&t_inv), b);
    Ok((b, t))
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|p| n % p == 0).unwrap()
}

/// Smallest prime `d` dividing `|G|` and a cyclic subgroup of order `d`.
pub fn best_subgroup_order(group: &GroupImage) -> Result<(u64, GroupImage)> {
    let n = group.order() as u64;
    if n == 1 {
        return Err(CoreError::TrivialGroup);
    }
    let d = smallest_prime_factor(n);
    let gen = group
        .elements
        .iter()
        .find(|m| m.order() == Some(d))
        .copied()
        .expect("Cauchy's theorem");
    Ok((d, closure(group.l, &[gen])?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRule {
    /// `E[l]` already rational: two symbols from the splitting map.
    EpsilonBar,
    /// `|G| = 2`: at most `2[L:K] - 2 = 2`.
    NaiveOrder2,
    /// An element of order above 2: at most `[L:K] - 1`.
    CyclicBasis,
    /// Factoring through a subgroup of order `d`: at most `(1 - 1/d)[L:K]`.
    Subfield,
}

impl BoundRule {
    pub fn name(&self) -> &'static str {
        match self {
            BoundRule::EpsilonBar => "epsilon-bar",
            BoundRule::NaiveOrder2 => "naive-order-2",
            BoundRule::CyclicBasis => "cyclic-basis",
            BoundRule::Subfield => "subfield",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        use BoundRule::*;
        [EpsilonBar, NaiveOrder2, CyclicBasis, Subfield].into_iter().find(|r| r.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolBound {
    pub bound: u64,
    pub rule: BoundRule,
    /// Order of the subgroup used by the subfield rule.
    pub subgroup_order: Option<u64>,
}

impl SymbolBound {
    pub fn to_json(&self) -> Value {
        json!({ "bound": self.bound, "rule": self.rule.name(), "subgroup_order": self.subgroup_order })
    }

    pub fn from_json(v: &Value) -> Result<SymbolBound> {
        let bad = || CoreError::InvalidInput("malformed symbol bound".into());
        Ok(SymbolBound {
            bound: v.get("bound").and_then(Value::as_u64).ok_or_else(bad)?,
            rule: v.get("rule").and_then(Value::as_str).and_then(BoundRule::from_name).ok_or_else(bad)?,
            subgroup_order: match v.get("subgroup_order") {
                None | Some(Value::Null) => None,
                Some(d) => Some(d.as_u64().ok_or_else(bad)?),
            },
        })
    }
}

/// Upper bound on the symbol length of `_lBr(E)/_lBr(K)` when the image
/// of the mod-`l` representation is `group` (so `[L:K] = |G|`).
pub fn symbol_length_bound(group: &GroupImage, l: u32) -> Result<SymbolBound> {
    let n = group.order() as u64;
    if n % l as u64 == 0 {
        return Err(CoreError::OutOfScope(format!("l = {l} divides [L:K] = {n}")));
    }
    match n {
        1 => Ok(SymbolBound { bound: 2, rule: BoundRule::EpsilonBar, subgroup_order: None }),
        2 => Ok(SymbolBound { bound: 2, rule: BoundRule::NaiveOrder2, subgroup_order: None }),
        _ => {
            let (d, _) = best_subgroup_order(group)?;
            let cyclic = n - 1;
            let subfield = n - n / d;
            Ok(if subfield < cyclic {
                SymbolBound { bound: subfield, rule: BoundRule::Subfield, subgroup_order: Some(d) }
            } else {
                SymbolBound { bound: cyclic, rule: BoundRule::CyclicBasis, subgroup_order: None }
            })
        }
    }
}

/// `SL_2 ∩` split Cartan: diagonal matrices of determinant 1; order `l - 1`.
pub fn split_cartan(l: u32) -> Result<GroupImage> {
    let g = primitive_root(l) as i64;
    let ginv = inv_mod(g as u32, l).unwrap() as i64;
    closure(l, &[MatModL::new(l, [g, 0, 0, ginv])])
}

/// `SL_2 ∩` nonsplit Cartan `{[[a, εb], [b, a]]}`; order `l + 1`.
pub fn nonsplit_cartan(l: u32) -> Result<GroupImage> {
    let eps = smallest_nonresidue(l);
    let gen = special_linear(l).into_iter().filter(|m| in_nonsplit(m, eps)).max_by_key(|m| m.order()).unwrap();
    closure(l, &[gen])
}

/// `SL_2 ∩` upper-triangular matrices; order `l(l - 1)`.
pub fn borel(l: u32) -> Result<GroupImage> {
    let g = primitive_root(l) as i64;
    let ginv = inv_mod(g as u32, l).unwrap() as i64;
    closure(l, &[MatModL::new(l, [g, 0, 0, ginv]), MatModL::new(l, [1, 1, 0, 1])])
}

/// All of `SL_2(F_l)`.
pub fn full_sl2(l: u32) -> Result<GroupImage> {
    closure(l, &[MatModL::new(l, [1, 1, 0, 1]), MatModL::new(l, [1, 0, 1, 1])])
}

/// `SL_2 ∩` normalizer of the split Cartan: diagonal and antidiagonal
/// matrices of determinant 1; order `2(l - 1)`.
pub fn split_normalizer(l: u32) -> Result<GroupImage> {
    let g = primitive_root(l) as i64;
    let ginv = inv_mod(g as u32, l).unwrap() as i64;
    closure(l, &[MatModL::new(l, [g, 0, 0, ginv]), MatModL::new(l, [0, -1, 1, 0])])
}

/// `SL_2 ∩` normalizer of the nonsplit Cartan `{[[a, εb], [b, a]]}`;
/// order `2(l + 1)`.
pub fn nonsplit_normalizer(l: u32) -> Result<GroupImage> {
    let eps = smallest_nonresidue(l);
    let cartan: Vec<MatModL> = special_linear(l).into_iter().filter(|m| in_nonsplit(m, eps)).collect();
    let gen = *cartan.iter().max_by_key(|m| m.order()).unwrap();
    // an element a + b√ε of norm -1 times the conjugation [[1,0],[0,-1]]
    let flip = special_linear(l)
        .into_iter()
        .find(|m| !in_nonsplit(m, eps) && in_normalizer_nonsplit(m, eps))
        .expect("normalizer is larger than the Cartan");
    closure(l, &[gen, flip])
}

fn primitive_root(l: u32) -> u32 {
    (2..l).find(|&g| (1..l - 1).all(|k| MatModL::scalar(l, g as i64).pow(k as u64).e[0] != 1)).unwrap_or(1)
}

/// `l ∓ 1` for images in the split / nonsplit Cartan normalizer.
pub fn cartan_normalizer_bound(l: u32, split: bool) -> u64 {
    if split {
        l as u64 - 1
    } else {
        l as u64 + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let g = closure(5, &[MatModL::identity(5)]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classification, Classification::Trivial);
        let w = MatModL::new(5, [0, -1, 1, 0]);
        let g = closure(5, &[w]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.contains(&MatModL::scalar(5, -1)));
        assert_eq!(closure(5, &[MatModL::new(5, [2, 0, 0, 2])]).unwrap_err(), CoreError::NotSL2(4));
    }

    #[test]
    fn classification_examples() {
        let diag = closure(5, &[MatModL::new(5, [2, 0, 0, 3])]).unwrap();
        assert_eq!(diag.classification, Classification::SplitCartan);
        let g = closure(5, &[MatModL::new(5, [0, -1, 1, 0]), MatModL::new(5, [2, 0, 0, 3])]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.classification, Classification::NormalizerSplit);
        let full = closure(3, &special_linear(3)).unwrap();
        assert_eq!(full.order(), 24);
        assert_eq!(full.classification, Classification::FullSL2);
        let ns = nonsplit_normalizer(5).unwrap();
        assert_eq!(ns.order(), 12);
        assert_eq!(ns.classification, Classification::NormalizerNonsplit);
        let sp = split_normalizer(7).unwrap();
        assert_eq!(sp.order(), 12);
        assert_eq!(sp.classification, Classification::NormalizerSplit);
    }

    #[test]
    fn s4_type_in_sl2_f7() {
        // SL_2(F_7) contains the binary octahedral group of order 48
        let all = special_linear(7);
        let g = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| (*a, *b)))
            .filter(|(a, b)| a.order() == Some(8) && b.order() == Some(6))
            .map(|(a, b)| close(7, &[a, b]))
            .find(|e| e.len() == 48)
            .unwrap();
        assert!(is_s4_type(&g));
    }

    #[test]
    fn matrix_sum_examples() {
        let pm = closure(5, &[MatModL::scalar(5, -1)]).unwrap();
        assert_eq!(matrix_sum(&pm), MatModL::zero(5));
        let triv = closure(5, &[MatModL::identity(5)]).unwrap();
        assert_eq!(matrix_sum(&triv), MatModL::identity(5));
        for a in cyclic_subgroups(7).iter().filter(|a| a.order() > 1) {
            assert_eq!(matrix_sum(a), MatModL::zero(7));
        }
    }

    #[test]
    fn canonical_basis() {
        let b0 = MatModL::new(5, [0, -1, 1, 3]);
        let (b, t) = rational_canonical_basis(&b0).unwrap();
        assert_eq!(b, b0);
        assert_eq!(t, MatModL::identity(5));
        let (b, _) = rational_canonical_basis(&MatModL::new(5, [2, 0, 0, 3])).unwrap();
        assert_eq!(b, MatModL::new(5, [0, -1, 1, 0]));
        assert_eq!(rational_canonical_basis(&MatModL::scalar(5, -1)).unwrap_err(), CoreError::ScalarMatrix);
        for s in special_linear(5).into_iter().filter(|s| !s.is_scalar()) {
            let (b, t) = rational_canonical_basis(&s).unwrap();
            assert_ne!(t.det(), 0);
            assert_eq!(s.conjugate_by(&t), b);
        }
    }

    #[test]
    fn standard_subgroups() {
        for l in [3u32, 5, 7] {
            let n = l as usize;
            let sc = split_cartan(l).unwrap();
            assert_eq!(sc.order(), n - 1);
            assert!(sc.containment.split_cartan);
            let nc = nonsplit_cartan(l).unwrap();
            assert_eq!(nc.order(), n + 1);
            assert!(nc.containment.nonsplit_cartan);
            assert_eq!(borel(l).unwrap().order(), n * (n - 1));
            assert_eq!(full_sl2(l).unwrap().order(), n * (n * n - 1));
            assert_eq!(full_sl2(l).unwrap().classification, Classification::FullSL2);
        }
    }

    #[test]
    fn bounds() {
        let c4 = closure(5, &[MatModL::new(5, [0, -1, 1, 0])]).unwrap();
        let (d, h) = best_subgroup_order(&c4).unwrap();
        assert_eq!(d, 2);
        assert_eq!(h.elements, vec![MatModL::identity(5), MatModL::scalar(5, -1)]);
        let b = symbol_length_bound(&c4, 5).unwrap();
        assert_eq!(b.bound, 2);
        assert_eq!(b.rule, BoundRule::Subfield);
        let ns = nonsplit_normalizer(5).unwrap();
        assert_eq!(symbol_length_bound(&ns, 5).unwrap().bound, 6);
        let two = closure(5, &[MatModL::scalar(5, -1)]).unwrap();
        assert_eq!(symbol_length_bound(&two, 5).unwrap().bound, 2);
        let triv = closure(5, &[MatModL::identity(5)]).unwrap();
        assert_eq!(symbol_length_bound(&triv, 5).unwrap().rule, BoundRule::EpsilonBar);
        assert_eq!(best_subgroup_order(&triv).unwrap_err(), CoreError::TrivialGroup);
        let borel = closure(5, &[MatModL::new(5, [1, 1, 0, 1])]).unwrap();
        assert!(matches!(symbol_length_bound(&borel, 5), Err(CoreError::OutOfScope(_))));
        let c3 = closure(7, &[MatModL::new(7, [0, -1, 1, -1])]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(symbol_length_bound(&c3, 7).unwrap().bound, 2);
    }

    #[test]
    fn json_round_trip() {
        let m = MatModL::new(7, [3, -1, 2, 5]);
        assert_eq!(MatModL::from_json(7, &m.to_json()).unwrap(), m);
        assert_eq!(m.to_json(), json!([[3, 6], [2, 5]]));
    }
}
