//! Versioned JSON reports for the three commands. Every report parses
//! back from its own output, and re-serializes to identical bytes.

use brauer_core::brauer::{EpsilonPath, Lift};
use brauer_core::modl::{Classification, Containment, MatModL, SymbolBound};
use serde_json::{json, Value};

use crate::error::{CliError, Result};

pub const ANALYZE_SCHEMA: &str = "brauer.analyze/1";
pub const SYMBOLS_SCHEMA: &str = "brauer.symbols/1";
pub const SL2_SCHEMA: &str = "brauer.sl2/1";

fn bad(what: &str) -> CliError {
    CliError::InvalidReport(what.to_string())
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k).ok_or_else(|| bad(&format!("missing {k}")))
}

fn u64_of(v: &Value, k: &str) -> Result<u64> {
    field(v, k)?.as_u64().ok_or_else(|| bad(&format!("{k} is not an integer")))
}

fn bool_of(v: &Value, k: &str) -> Result<bool> {
    field(v, k)?.as_bool().ok_or_else(|| bad(&format!("{k} is not a boolean")))
}

fn str_of(v: &Value, k: &str) -> Result<String> {
    field(v, k)?.as_str().map(str::to_string).ok_or_else(|| bad(&format!("{k} is not a string")))
}

fn array_of<'a>(v: &'a Value, k: &str) -> Result<&'a Vec<Value>> {
    field(v, k)?.as_array().ok_or_else(|| bad(&format!("{k} is not an array")))
}

fn check_schema(v: &Value, schema: &str) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(s) if s == schema => Ok(()),
        other => Err(bad(&format!("expected schema {schema}, found {other:?}"))),
    }
}

fn matrix_of(l: u32, v: &Value) -> Result<MatModL> {
    Ok(MatModL::from_json(l, v)?)
}

fn matrices_of(l: u32, v: &Value, k: &str) -> Result<Vec<MatModL>> {
    array_of(v, k)?.iter().map(|m| matrix_of(l, m)).collect()
}

fn matrices_json(ms: &[MatModL]) -> Value {
    Value::Array(ms.iter().map(|m| m.to_json()).collect())
}

/// `bound` for images contained in a Cartan normalizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerBound {
    /// `"split"` or `"nonsplit"`.
    pub cartan: String,
    pub bound: u64,
}

impl NormalizerBound {
    fn to_json(&self) -> Value {
        json!({ "cartan": self.cartan, "bound": self.bound })
    }

    fn from_json(v: &Value) -> Result<NormalizerBound> {
        Ok(NormalizerBound { cartan: str_of(v, "cartan")?, bound: u64_of(v, "bound")? })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalyzeReport {
    pub l: u64,
    pub a4: String,
    pub a6: String,
    /// Defining polynomial of `L` over `K` in `m`, with `z = ζ_l`.
    pub field_polynomial: String,
    /// Serialized tower of `L`.
    pub division_field: Value,
    pub degree: usize,
    pub tower_degrees: Vec<usize>,
    pub automorphism_images: Vec<Value>,
    /// `"sigma"` for a basis `(P, σ(P))`, `"canonical"` otherwise.
    pub basis_kind: String,
    pub basis: Vec<Value>,
    /// Index of `σ` among the automorphisms.
    pub sigma_index: Option<usize>,
    pub sigma_matrix: Option<MatModL>,
    pub pairing_exponent: u32,
    pub matrices: Vec<MatModL>,
    pub image_order: usize,
    pub max_element_order: u64,
    pub classification: Classification,
    pub containment: Containment,
    /// Bound for the actual image.
    pub bound: SymbolBound,
    pub cartan_normalizer_bounds: Vec<NormalizerBound>,
}

impl AnalyzeReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": ANALYZE_SCHEMA,
            "l": self.l,
            "curve": { "a4": self.a4, "a6": self.a6 },
            "field_polynomial": self.field_polynomial,
            "division_field": self.division_field,
            "degree": self.degree,
            "tower_degrees": self.tower_degrees,
            "automorphism_images": self.automorphism_images,
            "basis_kind": self.basis_kind,
            "basis": self.basis,
            "sigma_index": self.sigma_index,
            "sigma_matrix": self.sigma_matrix.map(|m| m.to_json()),
            "pairing_exponent": self.pairing_exponent,
            "matrices": matrices_json(&self.matrices),
            "image_order": self.image_order,
            "max_element_order": self.max_element_order,
            "classification": self.classification.name(),
            "containment": self.containment.to_json(),
            "bound": self.bound.to_json(),
            "cartan_normalizer_bounds": self.cartan_normalizer_bounds.iter().map(|b| b.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<AnalyzeReport> {
        check_schema(v, ANALYZE_SCHEMA)?;
        let l = u64_of(v, "l")?;
        let curve = field(v, "curve")?;
        let sigma_matrix = match field(v, "sigma_matrix")? {
            Value::Null => None,
            m => Some(matrix_of(l as u32, m)?),
        };
        Ok(AnalyzeReport {
            l,
            a4: str_of(curve, "a4")?,
            a6: str_of(curve, "a6")?,
            field_polynomial: str_of(v, "field_polynomial")?,
            division_field: field(v, "division_field")?.clone(),
            degree: u64_of(v, "degree")? as usize,
            tower_degrees: array_of(v, "tower_degrees")?
                .iter()
                .map(|d| d.as_u64().map(|d| d as usize).ok_or_else(|| bad("tower degree")))
                .collect::<Result<_>>()?,
            automorphism_images: array_of(v, "automorphism_images")?.clone(),
            basis_kind: str_of(v, "basis_kind")?,
            basis: array_of(v, "basis")?.clone(),
            sigma_index: field(v, "sigma_index")?.as_u64().map(|i| i as usize),
            sigma_matrix,
            pairing_exponent: u64_of(v, "pairing_exponent")? as u32,
            matrices: matrices_of(l as u32, v, "matrices")?,
            image_order: u64_of(v, "image_order")? as usize,
            max_element_order: u64_of(v, "max_element_order")?,
            classification: Classification::from_name(&str_of(v, "classification")?)
                .ok_or_else(|| bad("unknown classification"))?,
            containment: Containment::from_json(field(v, "containment")?)?,
            bound: SymbolBound::from_json(field(v, "bound")?)?,
            cartan_normalizer_bounds: array_of(v, "cartan_normalizer_bounds")?
                .iter()
                .map(NormalizerBound::from_json)
                .collect::<Result<_>>()?,
        })
    }
}

/// Invariant checks attached to a symbols run.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificates {
    /// `β·σ⁻¹(α)` is an `l`-th power; `None` without a basis `(P, σ(P))`.
    pub asa: Option<bool>,
    /// Serialized norm-1 checks, one per proper subfield.
    pub norm_one: Vec<Value>,
    /// Serialized degree logs of every Rosset–Tate run.
    pub runs: Vec<Value>,
    pub degrees_decrease: bool,
    pub within_bound: bool,
    pub slots_over_base: bool,
}

impl Certificates {
    fn to_json(&self) -> Value {
        json!({
            "asa": self.asa,
            "norm_one": self.norm_one,
            "rosset_tate": self.runs,
            "degrees_decrease": self.degrees_decrease,
            "within_bound": self.within_bound,
            "slots_over_base": self.slots_over_base,
        })
    }

    fn from_json(v: &Value) -> Result<Certificates> {
        Ok(Certificates {
            asa: field(v, "asa")?.as_bool(),
            norm_one: array_of(v, "norm_one")?.clone(),
            runs: array_of(v, "rosset_tate")?.clone(),
            degrees_decrease: bool_of(v, "degrees_decrease")?,
            within_bound: bool_of(v, "within_bound")?,
            slots_over_base: bool_of(v, "slots_over_base")?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolsReport {
    pub l: u64,
    pub a4: String,
    pub a6: String,
    pub field_polynomial: String,
    /// The pair as given, in `z` and `m`.
    pub input: (String, String),
    /// `N_{P,Q}(a, b)` serialized.
    pub norm_pair: Value,
    pub lift: Lift,
    pub path: EpsilonPath,
    pub t_function: String,
    /// Automorphism indices of `H` with `K' = L^H`, when one was used.
    pub intermediate_subgroup: Option<Vec<usize>>,
    pub intermediate_degree: Option<usize>,
    pub bound: SymbolBound,
    pub length: usize,
    pub tensor: Value,
    pub certificates: Option<Certificates>,
}

impl SymbolsReport {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SYMBOLS_SCHEMA,
            "l": self.l,
            "curve": { "a4": self.a4, "a6": self.a6 },
            "field_polynomial": self.field_polynomial,
            "input": [self.input.0, self.input.1],
            "norm_pair": self.norm_pair,
            "lift": self.lift.name(),
            "path": self.path.name(),
            "t_function": self.t_function,
            "intermediate": {
                "subgroup": self.intermediate_subgroup,
                "degree": self.intermediate_degree,
            },
            "bound": self.bound.to_json(),
            "length": self.length,
            "tensor": self.tensor,
            "certificates": self.certificates.as_ref().map(Certificates::to_json),
        })
    }

    pub fn from_json(v: &Value) -> Result<SymbolsReport> {
        check_schema(v, SYMBOLS_SCHEMA)?;
        let curve = field(v, "curve")?;
        let input = array_of(v, "input")?;
        let input_text = |i: usize| input.get(i).and_then(Value::as_str).map(str::to_string).ok_or_else(|| bad("input"));
        let inter = field(v, "intermediate")?;
        let subgroup = match field(inter, "subgroup")? {
            Value::Null => None,
            Value::Array(h) => {
                Some(h.iter().map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| bad("subgroup"))).collect::<Result<_>>()?)
            }
            _ => return Err(bad("subgroup")),
        };
        Ok(SymbolsReport {
            l: u64_of(v, "l")?,
            a4: str_of(curve, "a4")?,
            a6: str_of(curve, "a6")?,
            field_polynomial: str_of(v, "field_polynomial")?,
            input: (input_text(0)?, input_text(1)?),
            norm_pair: field(v, "norm_pair")?.clone(),
            lift: Lift::from_name(&str_of(v, "lift")?).ok_or_else(|| bad("unknown lift"))?,
            path: EpsilonPath::from_name(&str_of(v, "path")?).ok_or_else(|| bad("unknown path"))?,
            t_function: str_of(v, "t_function")?,
            intermediate_subgroup: subgroup,
            intermediate_degree: field(inter, "degree")?.as_u64().map(|d| d as usize),
            bound: SymbolBound::from_json(field(v, "bound")?)?,
            length: u64_of(v, "length")? as usize,
            tensor: field(v, "tensor")?.clone(),
            certificates: match field(v, "certificates")? {
                Value::Null => None,
                c => Some(Certificates::from_json(c)?),
            },
        })
    }
}

/// One row of the bound table: a standard subgroup of `SL_2(F_l)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub subgroup: String,
    pub order: usize,
    pub bound: Option<SymbolBound>,
    /// `l ∓ 1` for the Cartan normalizers.
    pub normalizer_bound: Option<u64>,
    pub out_of_scope: bool,
}

impl BoundRow {
    fn to_json(&self) -> Value {
        json!({
            "subgroup": self.subgroup,
            "order": self.order,
            "bound": self.bound.map(|b| b.to_json()),
            "normalizer_bound": self.normalizer_bound,
            "out_of_scope": self.out_of_scope,
        })
    }

    fn from_json(v: &Value) -> Result<BoundRow> {
        Ok(BoundRow {
            subgroup: str_of(v, "subgroup")?,
            order: u64_of(v, "order")? as usize,
            bound: match field(v, "bound")? {
                Value::Null => None,
                b => Some(SymbolBound::from_json(b)?),
            },
            normalizer_bound: field(v, "normalizer_bound")?.as_u64(),
            out_of_scope: bool_of(v, "out_of_scope")?,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Report {
    pub l: u64,
    /// `(order, count)` of cyclic subgroups, by increasing order.
    pub cyclic_subgroups: Vec<(u64, usize)>,
    pub subgroups_checked: usize,
    pub matrix_sums_zero: bool,
    pub rows: Vec<BoundRow>,
}

impl Sl2Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SL2_SCHEMA,
            "l": self.l,
            "cyclic_subgroups": self.cyclic_subgroups.iter().map(|(o, c)| json!({"order": o, "count": c})).collect::<Vec<_>>(),
            "matrix_sum": { "checked": self.subgroups_checked, "all_zero": self.matrix_sums_zero },
            "bounds": self.rows.iter().map(BoundRow::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Sl2Report> {
        check_schema(v, SL2_SCHEMA)?;
        let sums = field(v, "matrix_sum")?;
        Ok(Sl2Report {
            l: u64_of(v, "l")?,
            cyclic_subgroups: array_of(v, "cyclic_subgroups")?
                .iter()
                .map(|c| Ok((u64_of(c, "order")?, u64_of(c, "count")? as usize)))
                .collect::<Result<_>>()?,
            subgroups_checked: u64_of(sums, "checked")? as usize,
            matrix_sums_zero: bool_of(sums, "all_zero")?,
            rows: array_of(v, "bounds")?.iter().map(BoundRow::from_json).collect::<Result<_>>()?,
        })
    }
}

pub const PREVIEW_CHARS: usize = 500;

/// The first `PREVIEW_CHARS` characters of `text`, marked when cut.
pub fn preview(text: &str) -> String {
    match text.char_indices().nth(PREVIEW_CHARS) {
        None => text.to_string(),
        Some((i, _)) => format!("{}… ({} characters in total)", &text[..i], text.chars().count()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preview_cuts_long_text() {
        assert_eq!(preview("short"), "short");
        let long = "é".repeat(600);
        let p = preview(&long);
        assert!(p.starts_with(&"é".repeat(PREVIEW_CHARS)));
        assert!(p.ends_with("(600 characters in total)"));
    }

    #[test]
    fn schemas_are_checked() {
        assert!(Sl2Report::from_json(&json!({"schema": ANALYZE_SCHEMA})).is_err());
        assert!(AnalyzeReport::from_json(&json!({"schema": SL2_SCHEMA})).is_err());
        assert!(SymbolsReport::from_json(&json!({})).is_err());
    }
}
