//! Kummer pairs and their norm map, symbols `(u, v)_l` over function
//! fields, the Rosset–Tate corestriction, and the ε-map producing
//! explicit generators of `_lBr(E)/_lBr(K)`.

use exact::galois::{fixed_field, Automorphism, Subfield};
use exact::power::is_lth_power;
use exact::serial::elem_to_json;
use exact::{Field, NfElem, NumberField, Poly, PolyRing};
use serde_json::{json, Value};

use crate::error::{CoreError, Result};
use crate::funcfield::{Descent, FfElem, FunctionField};
use crate::galois::{DivisionField, Representation};
use crate::modl::MatModL;

/// How residues mod `l` are lifted to integer exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Lift {
    /// `0 ≤ e < l`.
    #[default]
    NonNegative,
    /// `-l/2 < e < l/2`.
    Symmetric,
}

impl Lift {
    pub fn name(self) -> &'static str {
        match self {
            Lift::NonNegative => "nonnegative",
            Lift::Symmetric => "symmetric",
        }
    }

    pub fn from_name(s: &str) -> Option<Lift> {
        [Lift::NonNegative, Lift::Symmetric].into_iter().find(|l| l.name() == s)
    }

    pub fn apply(self, e: u32, l: u32) -> i64 {
        let e = (e % l) as i64;
        match self {
            Lift::NonNegative => e,
            Lift::Symmetric if 2 * e > l as i64 => e - l as i64,
            Lift::Symmetric => e,
        }
    }
}

/// A pair `(a, b)` of nonzero elements of `L`, read modulo `l`-th powers,
/// with respect to the basis of the representation it is used with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerPair {
    pub a: NfElem,
    pub b: NfElem,
}

impl KummerPair {
    pub fn new(field: &NumberField, a: NfElem, b: NfElem) -> Result<KummerPair> {
        if field.is_zero(&a) || field.is_zero(&b) {
            return Err(CoreError::DegenerateInput("Kummer pair entries must be nonzero".into()));
        }
        Ok(KummerPair { a, b })
    }

    pub fn to_json(&self, field: &NumberField) -> Value {
        json!({ "a": elem_to_json(field, &self.a), "b": elem_to_json(field, &self.b) })
    }
}

fn power_product(f: &NumberField, terms: &[(&NfElem, i64)]) -> NfElem {
    terms.iter().fold(f.one(), |acc, (x, e)| {
        let p = f.pow_signed(x, *e).expect("nonzero entries");
        f.mul(&acc, &p)
    })
}

/// `g·(a, b) = ((g⁻¹a)^{c1} (g⁻¹b)^{c3}, (g⁻¹a)^{c2} (g⁻¹b)^{c4})` where
/// `ρ(g)⁻¹ = [[c1, c3], [c2, c4]]`.
pub fn pair_action(
    df: &DivisionField,
    rep: &Representation,
    g: &Automorphism,
    pair: &KummerPair,
    lift: Lift,
) -> Result<KummerPair> {
    let m = rep.matrix_of(df, g).ok_or_else(|| CoreError::InvalidInput("automorphism is not in the group".into()))?;
    let inv: MatModL = m.inverse().ok_or_else(|| CoreError::Internal("singular Galois matrix".into()))?;
    let [c1, c3, c2, c4] = inv.entries();
    let l = df.l as u32;
    let gi = g.inverse();
    let a = gi.apply(&pair.a);
    let b = gi.apply(&pair.b);
    let f = &df.field;
    let e = |c| lift.apply(c, l);
    Ok(KummerPair {
        a: power_product(f, &[(&a, e(c1)), (&b, e(c3))]),
        b: power_product(f, &[(&a, e(c2)), (&b, e(c4))]),
    })
}

/// `N_{P,Q}(a, b) = ∏_{g ∈ G} g·(a, b)`.
pub fn norm_map(df: &DivisionField, rep: &Representation, pair: &KummerPair, lift: Lift) -> Result<KummerPair> {
    let f = &df.field;
    let mut a = f.one();
    let mut b = f.one();
    for g in &df.automorphisms {
        let t = pair_action(df, rep, g, pair, lift)?;
        a = f.mul(&a, &t.a);
        b = f.mul(&b, &t.b);
    }
    Ok(KummerPair { a, b })
}

/// Whether `(a, b)` and `(c, d)` agree modulo `l`-th powers.
pub fn same_class(df: &DivisionField, x: &KummerPair, y: &KummerPair) -> Result<bool> {
    let f = &df.field;
    let l = df.l;
    let ra = f.div(&x.a, &y.a).ok_or(CoreError::DivisionByZero)?;
    let rb = f.div(&x.b, &y.b).ok_or(CoreError::DivisionByZero)?;
    Ok(is_lth_power(f, &ra, l)? && is_lth_power(f, &rb, l)?)
}

/// `β·σ⁻¹(α)` is an `l`-th power, as holds for every element of the image
/// of the norm map in a basis `(P, σ(P))`.
pub fn check_asa(df: &DivisionField, sigma: &Automorphism, pair: &KummerPair) -> Result<bool> {
    let f = &df.field;
    let t = f.mul(&pair.b, &sigma.inverse().apply(&pair.a));
    Ok(is_lth_power(f, &t, df.l)?)
}

/// Norm-1 check of one component over one intermediate field.
#[derive(Clone, Debug, PartialEq)]
pub struct NormCertificate {
    /// Order of the subgroup `H` with `K' = L^H`.
    pub subgroup_order: usize,
    /// `[K' : K]`.
    pub subfield_degree: usize,
    pub alpha_norm_is_power: bool,
    pub beta_norm_is_power: bool,
}

impl NormCertificate {
    pub fn holds(&self) -> bool {
        self.alpha_norm_is_power && self.beta_norm_is_power
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subgroup_order": self.subgroup_order,
            "subfield_degree": self.subfield_degree,
            "alpha": self.alpha_norm_is_power,
            "beta": self.beta_norm_is_power,
        })
    }
}

/// Nontrivial subgroups of `Gal(L/K)` generated by at most two elements,
/// each as a sorted list of automorphism indices.
pub fn nontrivial_subgroups(df: &DivisionField) -> Vec<Vec<usize>> {
    let n = df.degree();
    let auts = &df.automorphisms;
    let generate = |gens: &[usize]| -> Vec<usize> {
        let mut set = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for &g in gens {
                let j = df.automorphism_index(&auts[g].compose(&auts[i])).expect("closed group");
                if !set.contains(&j) {
                    set.push(j);
                    frontier.push(j);
                }
            }
        }
        set.sort();
        set
    };
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 1..n {
        for j in i..n {
            let h = generate(&[i, j]);
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out.sort_by_key(|h| (h.len(), h.clone()));
    out
}

/// The fixed field of a subgroup given by automorphism indices.
pub fn subfield_of(df: &DivisionField, subgroup: &[usize], label: &str) -> Result<Subfield> {
    let group: Vec<Automorphism> = subgroup.iter().map(|&i| df.automorphisms[i].clone()).collect();
    Ok(fixed_field(&df.field, &group, label)?)
}

/// `Norm_{L/K'}(α)` and `Norm_{L/K'}(β)` are `l`-th powers in `K'`, for
/// every proper subfield `K' = L^H`.
pub fn norm_one_certificates(df: &DivisionField, pair: &KummerPair) -> Result<Vec<NormCertificate>> {
    let f = &df.field;
    let mut out = Vec::new();
    for h in nontrivial_subgroups(df) {
        let sub = subfield_of(df, &h, "k")?;
        let norm = |x: &NfElem| -> Result<bool> {
            let n = h.iter().fold(f.one(), |acc, &i| f.mul(&acc, &df.automorphisms[i].apply(x)));
            let down = sub.pullback(&n).map_err(|_| CoreError::Internal("norm does not descend".into()))?;
            Ok(is_lth_power(&sub.field, &down, df.l)?)
        };
        out.push(NormCertificate {
            subgroup_order: h.len(),
            subfield_degree: df.degree() / h.len(),
            alpha_norm_is_power: norm(&pair.a)?,
            beta_norm_is_power: norm(&pair.b)?,
        });
    }
    Ok(out)
}

/// The symbol algebra `(left, right)_l` over a function field; the
/// convention `xy = ζ yx` uses `ζ = ζ_l^κ` with `κ` the root exponent of
/// the enclosing tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symbol {
    pub left: FfElem,
    pub right: FfElem,
}

impl Symbol {
    pub fn new(ff: &FunctionField, left: FfElem, right: FfElem) -> Result<Symbol> {
        if ff.is_zero(&left) || ff.is_zero(&right) {
            return Err(CoreError::DegenerateInput("symbol slots must be nonzero".into()));
        }
        Ok(Symbol { left, right })
    }

    /// `-(u, v)`, written as the honest symbol `(u, v⁻¹)`.
    pub fn negate(&self, ff: &FunctionField) -> Symbol {
        Symbol { left: self.left.clone(), right: ff.inv(&self.right).expect("nonzero slot") }
    }

    pub fn to_json(&self, ff: &FunctionField) -> Value {
        json!({ "left": ff.to_json(&self.left), "right": ff.to_json(&self.right) })
    }

    pub fn display(&self, ff: &FunctionField) -> String {
        format!("({}, {})", ff.display(&self.left), ff.display(&self.right))
    }
}

/// An ordered tensor product of symbols over one function field.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolTensor {
    pub field: FunctionField,
    pub l: u64,
    pub root_exponent: u32,
    pub symbols: Vec<Symbol>,
}

impl SymbolTensor {
    pub fn new(field: &FunctionField, l: u64, root_exponent: u32) -> SymbolTensor {
        SymbolTensor { field: field.clone(), l, root_exponent, symbols: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "root_exponent": self.root_exponent,
            "field": exact::serial::tower_to_json(self.field.base()),
            "curve": {
                "a4": elem_to_json(self.field.base(), &self.field.a4),
                "a6": elem_to_json(self.field.base(), &self.field.a6),
            },
            "symbols": self.symbols.iter().map(|s| s.to_json(&self.field)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(field: &FunctionField, v: &Value) -> Result<SymbolTensor> {
        let bad = |what: &str| CoreError::InvalidInput(format!("symbol tensor: {what}"));
        let l = v.get("l").and_then(Value::as_u64).ok_or_else(|| bad("missing l"))?;
        let root_exponent = v.get("root_exponent").and_then(Value::as_u64).ok_or_else(|| bad("missing root_exponent"))? as u32;
        let symbols = v
            .get("symbols")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing symbols"))?
            .iter()
            .map(|s| {
                let left = field.from_json(s.get("left").ok_or_else(|| bad("missing left"))?)?;
                let right = field.from_json(s.get("right").ok_or_else(|| bad("missing right"))?)?;
                Symbol::new(field, left, right)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolTensor { field: field.clone(), l, root_exponent, symbols })
    }

    pub fn display(&self) -> String {
        if self.symbols.is_empty() {
            return "1".into();
        }
        self.symbols.iter().map(|s| s.display(&self.field)).collect::<Vec<_>>().join(" ⊗ ")
    }
}

/// Whether a slot is visibly an `l`-th power: `1`, or a constant that is
/// an `l`-th power in the constant field.
pub fn slot_is_lth_power(ff: &FunctionField, e: &FfElem, l: u64) -> Result<bool> {
    if ff.is_one(e) {
        return Ok(true);
    }
    match ff.as_constant(e) {
        Some(c) => Ok(is_lth_power(ff.base(), &c, l)?),
        None => Ok(false),
    }
}

/// Drop split symbols and merge symbols sharing a slot:
/// `(u, v)⊗(u, w) = (u, vw)` and `(u, w)⊗(v, w) = (uv, w)`.
pub fn prune(t: &SymbolTensor) -> Result<SymbolTensor> {
    let ff = &t.field;
    let mut merged: Vec<Symbol> = Vec::new();
    for s in &t.symbols {
        if let Some(m) = merged.iter_mut().find(|m| m.left == s.left) {
            m.right = ff.mul(&m.right, &s.right);
        } else if let Some(m) = merged.iter_mut().find(|m| m.right == s.right) {
            m.left = ff.mul(&m.left, &s.left);
        } else {
            merged.push(s.clone());
        }
    }
    let mut out = SymbolTensor { symbols: Vec::new(), ..t.clone() };
    for s in merged {
        if slot_is_lth_power(ff, &s.left, t.l)? || slot_is_lth_power(ff, &s.right, t.l)? {
            continue;
        }
        out.symbols.push(s);
    }
    Ok(out)
}

/// One run of the Rosset–Tate algorithm.
#[derive(Clone, Debug)]
pub struct RossetTateRun {
    /// `deg g_0, deg g_1, …, deg g_m`.
    pub degrees: Vec<usize>,
    /// The `m` emitted symbols over the bottom field, before pruning.
    pub symbols: Vec<Symbol>,
    /// Whether the first symbol is split (its slot `1/N(x)` is an `l`-th power).
    pub first_split: bool,
}

impl RossetTateRun {
    pub fn strictly_decreasing(&self) -> bool {
        self.degrees.windows(2).all(|w| w[1] < w[0])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degrees": self.degrees,
            "emitted": self.symbols.len(),
            "first_split": self.first_split,
            "strictly_decreasing": self.strictly_decreasing(),
        })
    }
}

/// `p* = p / (a_m t^m)` with `a_m` the lowest nonzero coefficient.
fn star(ring: &PolyRing<FunctionField>, p: &Poly<FfElem>) -> Poly<FfElem> {
    let ff = &ring.base;
    let m = p.coeffs().iter().position(|c| !ff.is_zero(c)).expect("nonzero polynomial");
    let inv = ff.inv(&p.coeffs()[m]).unwrap();
    ring.from_coeffs(p.coeffs()[m..].iter().map(|c| ff.mul(c, &inv)).collect())
}

/// `c(p) = (-1)^n a_n`.
fn leading_sign(ff: &FunctionField, p: &Poly<FfElem>) -> FfElem {
    let n = p.degree().expect("nonzero polynomial");
    let a = p.lc().unwrap().clone();
    if n % 2 == 0 {
        a
    } else {
        ff.neg(&a)
    }
}

/// `Cor_{F'/F}(x, y) = -Σ_{i=1}^{m} (c(g*_{i-1}), c(g_i))` with `g_0` the
/// minimal polynomial of `x` over `F`, `g_1 = f` where
/// `f(x) = Norm_{F'/F(x)}(y)`, and `g_{i+1} = g*_{i-1} mod g_i`.
pub fn rosset_tate(d: &Descent, x: &FfElem, y: &FfElem, l: u64) -> Result<RossetTateRun> {
    let top = &d.top;
    if top.is_zero(x) || top.is_zero(y) {
        return Err(CoreError::DegenerateInput("Rosset–Tate needs nonzero x and y".into()));
    }
    let bottom = &d.bottom;
    let ring = PolyRing::new(bottom.clone());
    let g0 = d.min_poly(x)?;
    let norm_y = d.stabilizer(x).iter().fold(top.one(), |acc, h| top.mul(&acc, &d.act(h, y)));
    let f = d.express_in_power_basis(&norm_y, x)?;
    if f.is_zero() {
        return Err(CoreError::DegenerateInput("y has zero norm".into()));
    }
    let mut gs = vec![g0, f];
    loop {
        let i = gs.len() - 1;
        let r = ring.rem(&star(&ring, &gs[i - 1]), &gs[i]).unwrap();
        if r.is_zero() {
            break;
        }
        gs.push(r);
    }
    let mut symbols = Vec::with_capacity(gs.len() - 1);
    for i in 1..gs.len() {
        let u = leading_sign(bottom, &star(&ring, &gs[i - 1]));
        let v = leading_sign(bottom, &gs[i]);
        symbols.push(Symbol::new(bottom, u, v)?.negate(bottom));
    }
    let first_split = slot_is_lth_power(bottom, &symbols[0].left, l)?;
    Ok(RossetTateRun { degrees: gs.iter().map(|g| g.degree().unwrap()).collect(), symbols, first_split })
}

/// `L(E)` over `K(E)` with the whole Galois group.
pub fn descent_to_base(df: &DivisionField) -> Result<Descent> {
    let top = df.lifted.function_field();
    Descent::new(&top, &Subfield::base_of(&df.field), df.automorphisms.clone())
}

/// `L(E)` over `K'(E)` for `K' = L^H`.
pub fn descent_to_subfield(df: &DivisionField, subgroup: &[usize], sub: &Subfield) -> Result<Descent> {
    let top = df.lifted.function_field();
    let group = subgroup.iter().map(|&i| df.automorphisms[i].clone()).collect();
    Descent::new(&top, sub, group)
}

/// `K'(E)` over `K(E)`, with `Gal(K'/K)` obtained by restriction.
pub fn descent_from_subfield(df: &DivisionField, sub: &Subfield, bottom_of_top: &FunctionField) -> Result<Descent> {
    let mut group: Vec<Automorphism> = Vec::new();
    for g in &df.automorphisms {
        let r = sub.restrict(g)?;
        if !group.contains(&r) {
            group.push(r);
        }
    }
    group.sort_by_key(|g| !g.is_identity());
    Descent::new(bottom_of_top, &Subfield::base_of(&sub.field), group)
}

/// One Rosset–Tate run inside a pipeline.
#[derive(Clone, Debug)]
pub struct StageRun {
    /// `"L/K"`, `"L/K'"` or `"K'/K"`.
    pub level: &'static str,
    pub run: RossetTateRun,
    /// Symbols surviving pruning.
    pub kept: usize,
}

impl StageRun {
    pub fn to_json(&self) -> Value {
        let mut v = self.run.to_json();
        v["level"] = json!(self.level);
        v["kept"] = json!(self.kept);
        v
    }
}

fn run_and_prune(
    d: &Descent,
    x: &FfElem,
    y: &FfElem,
    l: u64,
    kappa: u32,
    level: &'static str,
    runs: &mut Vec<StageRun>,
) -> Result<SymbolTensor> {
    let run = rosset_tate(d, x, y, l)?;
    let raw = SymbolTensor { field: d.bottom.clone(), l, root_exponent: kappa, symbols: run.symbols.clone() };
    let kept = prune(&raw)?;
    runs.push(StageRun { level, run, kept: kept.len() });
    Ok(kept)
}

/// `Cor_{L(E)/K(E)}(x, y)` computed through `K' = L^H`: Rosset–Tate down to
/// `K'(E)`, then each surviving symbol down to `K(E)`.
pub fn corestrict_via_intermediate(
    df: &DivisionField,
    subgroup: &[usize],
    x: &FfElem,
    y: &FfElem,
    kappa: u32,
) -> Result<(SymbolTensor, Vec<StageRun>)> {
    let l = df.l;
    let mut runs = Vec::new();
    if subgroup.iter().any(|&i| i >= df.degree()) || !subgroup.contains(&0) {
        return Err(CoreError::TowerMismatch);
    }
    if subgroup.len() == 1 || subgroup.len() == df.degree() {
        let d = descent_to_base(df)?;
        let t = run_and_prune(&d, x, y, l, kappa, "L/K", &mut runs)?;
        return Ok((t, runs));
    }
    let sub = subfield_of(df, subgroup, "k")?;
    let first = descent_to_subfield(df, subgroup, &sub)?;
    let middle = run_and_prune(&first, x, y, l, kappa, "L/K'", &mut runs)?;
    let second = descent_from_subfield(df, &sub, &first.bottom)?;
    let mut out = SymbolTensor::new(&second.bottom, l, kappa);
    for s in &middle.symbols {
        let t = run_and_prune(&second, &s.left, &s.right, l, kappa, "K'/K", &mut runs)?;
        out.symbols.extend(t.symbols);
    }
    Ok((prune(&out)?, runs))
}

/// Which construction of ε was used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonPath {
    /// `[L:K] = 1`: `(a, t_P) ⊗ (b, t_Q)` directly.
    EpsilonBar,
    /// `[L:K] = 2`: both symbols corestricted separately.
    Termwise,
    /// `Cor(α, t)` in one step with the basis `(P, σ(P))`.
    Direct,
    /// `Cor(α, t)` through an intermediate field.
    Intermediate,
}

impl EpsilonPath {
    pub fn name(self) -> &'static str {
        match self {
            EpsilonPath::EpsilonBar => "epsilon-bar",
            EpsilonPath::Termwise => "termwise",
            EpsilonPath::Direct => "direct",
            EpsilonPath::Intermediate => "intermediate",
        }
    }

    pub fn from_name(s: &str) -> Option<EpsilonPath> {
        use EpsilonPath::*;
        [EpsilonBar, Termwise, Direct, Intermediate].into_iter().find(|p| p.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct EpsilonOutput {
    pub path: EpsilonPath,
    /// The function paired with `α` on the σ-paths, e.g. `t_{2P}`.
    pub t_description: String,
    pub runs: Vec<StageRun>,
    pub tensor: SymbolTensor,
}

/// `r·P` when `ρ(σ²) = c·I` gives `t_P/σ²(t_P) = t_{(1-c)P}` up to `l`-th
/// powers and constants; otherwise `None`.
pub fn sigma_square_multiplier(rep: &Representation, df: &DivisionField, sigma: &Automorphism) -> Option<u32> {
    let m = rep.matrix_of(df, sigma)?;
    let sq = m.mul(&m);
    if !sq.is_scalar() {
        return None;
    }
    let c = sq.entries()[0];
    let l = df.l as u32;
    Some((1 + l - c) % l)
}

/// ε on an element `(α, β)` of the image of the norm map.
pub fn epsilon(
    df: &DivisionField,
    rep: &Representation,
    sigma: Option<&Automorphism>,
    pair: &KummerPair,
    intermediate: Option<&[usize]>,
) -> Result<EpsilonOutput> {
    let l = df.l;
    let kappa = rep.pairing_exponent;
    let c = &df.lifted;
    let top = c.function_field();
    let (p, q) = (&rep.basis.0, &rep.basis.1);
    match df.degree() {
        1 => {
            let d = descent_to_base(df)?;
            let tp = c.t_function(p, l)?;
            let tq = c.t_function(q, l)?;
            let mut t = SymbolTensor::new(&d.bottom, l, kappa);
            for (a, tf) in [(&pair.a, tp), (&pair.b, tq)] {
                let left = d.descend(&top.constant(a.clone()))?;
                t.symbols.push(Symbol::new(&d.bottom, left, d.descend(&tf)?)?);
            }
            Ok(EpsilonOutput { path: EpsilonPath::EpsilonBar, t_description: "t_P, t_Q".into(), runs: Vec::new(), tensor: prune(&t)? })
        }
        2 => {
            let d = descent_to_base(df)?;
            let mut runs = Vec::new();
            let mut t = SymbolTensor::new(&d.bottom, l, kappa);
            for (a, pt) in [(&pair.a, p), (&pair.b, q)] {
                let part = run_and_prune(&d, &top.constant(a.clone()), &c.t_function(pt, l)?, l, kappa, "L/K", &mut runs)?;
                t.symbols.extend(part.symbols);
            }
            Ok(EpsilonOutput { path: EpsilonPath::Termwise, t_description: "t_P, t_Q".into(), runs, tensor: prune(&t)? })
        }
        _ => {
            let sigma = sigma.ok_or_else(|| CoreError::InvalidInput("a basis (P, σ(P)) is required".into()))?;
            if c.add(&df.act(sigma, p), &c.neg(q)) != crate::curve::Point::Infinity {
                return Err(CoreError::InvalidInput("basis does not satisfy Q = σ(P)".into()));
            }
            if !check_asa(df, sigma, pair)? {
                return Err(CoreError::InvalidInput("(α, β) is not in the image of the norm map".into()));
            }
            let (y, t_description) = match sigma_square_multiplier(rep, df, sigma) {
                Some(r) => (c.t_function(&c.scalar_mul(r as i64, p), l)?, format!("t_{{{r}P}}")),
                None => {
                    let tp = c.t_function(p, l)?;
                    let s2 = sigma.compose(sigma);
                    let denom = crate::funcfield::coeff_galois(&top, &s2, &tp);
                    (top.div(&tp, &denom).ok_or(CoreError::DivisionByZero)?, "t_P/σ²(t_P)".into())
                }
            };
            let x = top.constant(pair.a.clone());
            let (path, (tensor, runs)) = match intermediate {
                Some(h) => (EpsilonPath::Intermediate, corestrict_via_intermediate(df, h, &x, &y, kappa)?),
                None => (EpsilonPath::Direct, corestrict_via_intermediate(df, &[0], &x, &y, kappa)?),
            };
            Ok(EpsilonOutput { path, t_description, runs, tensor })
        }
    }
}

/// The order-2 subgroup `{1, g}` when `G` has a unique involution
/// (`-I` in `SL_2`), as automorphism indices.
pub fn involution_subgroup(df: &DivisionField, rep: &Representation) -> Option<Vec<usize>> {
    let l = df.l as u32;
    let minus = MatModL::scalar(l, -1);
    rep.matrices.iter().position(|m| *m == minus).map(|i| vec![0, i])
}
