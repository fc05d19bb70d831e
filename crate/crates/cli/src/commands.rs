//! The `analyze`, `symbols` and `sl2` commands.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use brauer_core::brauer::{
    epsilon, norm_map, EpsilonOutput, KummerPair, SymbolTensor,
};
use brauer_core::products::{self, Conjugates, PowerProduct};
use brauer_core::curve::Curve;
use brauer_core::galois::{canonical_basis, choose_sigma_basis, division_field, representation, DivisionField, Representation};
use brauer_core::modl::{
    self, best_subgroup_order, cartan_normalizer_bound, cyclic_subgroups, matrix_sum, symbol_length_bound, GroupImage,
    DESK_SCALE_MAX,
};
use brauer_core::CoreError;
use exact::galois::Automorphism;
use exact::serial::{display_poly, elem_to_json};
use exact::{NumberField, PolyRing};

use crate::error::{CliError, Result};
use crate::job::{Command, Intermediate, JobSpec};
use crate::parse::{parse_element, parse_polynomial};
use crate::report::{preview, AnalyzeReport, BoundRow, Certificates, NormalizerBound, Sl2Report, SymbolsReport, PREVIEW_CHARS};

/// Division field of a job's curve, with the basis the pipeline works in.
pub struct Setup {
    pub base: NumberField,
    pub df: DivisionField,
    /// `Some` when the basis is `(P, σ(P))`.
    pub sigma: Option<Automorphism>,
    pub rep: Representation,
}

impl Setup {
    pub fn new(job: &JobSpec) -> Result<Setup> {
        job.check_prime()?;
        let k = exact::cyclotomic_field(job.l as i64).map_err(CoreError::from)?;
        let kv = [("z", k.gen())];
        let a4 = parse_element(&k, &job.a4, &kv).map_err(|e| CliError::parse("a4", e))?;
        let a6 = parse_element(&k, &job.a6, &kv).map_err(|e| CliError::parse("a6", e))?;
        let curve = Curve::new(&k, a4, a6)?;
        let mut df = division_field(&curve, job.l)?;
        if let Some(text) = &job.field_polynomial {
            let p = parse_polynomial(&k, text, "x").map_err(|e| CliError::parse("field polynomial", e))?;
            df = df.with_generator(&p)?;
        }
        let (sigma, rep) = match choose_sigma_basis(&df) {
            Ok((s, rep)) => (Some(s), rep),
            Err(CoreError::NoActionNeeded) | Err(CoreError::FallbackOrder2) => {
                let (p, q) = canonical_basis(&df);
                (None, representation(&df, &p, &q)?)
            }
            Err(e) => return Err(e.into()),
        };
        Ok(Setup { base: k, df, sigma, rep })
    }

    pub fn field_polynomial(&self) -> String {
        display_poly(&self.base, &self.df.field.defining_polynomial(), "m")
    }

    /// Parse an element of `L` written in `z` and `m`.
    pub fn element(&self, what: &str, text: &str) -> Result<exact::NfElem> {
        let vars = [("z", self.df.zeta()), ("m", self.df.field.gen())];
        parse_element(&self.df.field, text, &vars).map_err(|e| CliError::parse(what, e))
    }

    /// Automorphism indices of `H` for the intermediate field `K' = L^H`,
    /// or `None` to corestrict in one step.
    pub fn intermediate_subgroup(&self, choice: &Intermediate) -> Result<Option<Vec<usize>>> {
        let df = &self.df;
        if df.degree() <= 2 {
            return Ok(None);
        }
        let h = match choice {
            Intermediate::Direct => return Ok(None),
            Intermediate::Auto => {
                let (_, sub) = best_subgroup_order(&self.rep.image)?;
                (0..df.degree()).filter(|&i| sub.contains(&self.rep.matrices[i])).collect::<Vec<_>>()
            }
            Intermediate::Generator(text) => {
                let p = parse_polynomial(&self.base, text, "x").map_err(|e| CliError::parse("intermediate", e))?;
                let l = &df.field;
                let lifted = PolyRing::new(l.clone()).from_coeffs(p.coeffs().iter().map(|c| l.embed(&self.base, c)).collect());
                let root = exact::factor::roots(l, &lifted)
                    .map_err(CoreError::from)?
                    .into_iter()
                    .next()
                    .ok_or(CoreError::TowerMismatch)?;
                (0..df.degree()).filter(|&i| df.automorphisms[i].apply(&root) == root).collect()
            }
        };
        Ok(if h.len() == 1 || h.len() == df.degree() { None } else { Some(h) })
    }
}

fn normalizer_bounds(l: u32, image: &GroupImage) -> Vec<NormalizerBound> {
    let mut out = Vec::new();
    if image.containment.normalizer_split {
        out.push(NormalizerBound { cartan: "split".into(), bound: cartan_normalizer_bound(l, true) });
    }
    if image.containment.normalizer_nonsplit {
        out.push(NormalizerBound { cartan: "nonsplit".into(), bound: cartan_normalizer_bound(l, false) });
    }
    out
}

pub fn analyze(job: &JobSpec) -> Result<AnalyzeReport> {
    let s = Setup::new(job)?;
    analyze_setup(job, &s)
}

pub fn analyze_setup(job: &JobSpec, s: &Setup) -> Result<AnalyzeReport> {
    let df = &s.df;
    let l = job.l as u32;
    let image = &s.rep.image;
    let bound = symbol_length_bound(image, l)?;
    let sigma_index = s.sigma.as_ref().and_then(|g| df.automorphism_index(g));
    Ok(AnalyzeReport {
        l: job.l,
        a4: job.a4.clone(),
        a6: job.a6.clone(),
        field_polynomial: s.field_polynomial(),
        division_field: df.to_json(),
        degree: df.degree(),
        tower_degrees: df.tower_degrees.clone(),
        automorphism_images: df.automorphisms.iter().map(|g| elem_to_json(&df.field, g.image())).collect(),
        basis_kind: if s.sigma.is_some() { "sigma" } else { "canonical" }.into(),
        basis: vec![df.lifted.point_to_json(&s.rep.basis.0), df.lifted.point_to_json(&s.rep.basis.1)],
        sigma_index,
        sigma_matrix: sigma_index.map(|i| s.rep.matrices[i]),
        pairing_exponent: s.rep.pairing_exponent,
        matrices: s.rep.matrices.clone(),
        image_order: image.order(),
        max_element_order: image.max_element_order(),
        classification: image.classification,
        containment: image.containment,
        bound,
        cartan_normalizer_bounds: normalizer_bounds(l, image),
    })
}

/// Result of `symbols`: the report and the tensor it serializes.
pub struct SymbolsRun {
    pub report: SymbolsReport,
    pub pair: KummerPair,
    pub output: EpsilonOutput,
}

pub fn symbols(job: &JobSpec) -> Result<SymbolsRun> {
    let s = Setup::new(job)?;
    symbols_setup(job, &s)
}

pub fn symbols_setup(job: &JobSpec, s: &Setup) -> Result<SymbolsRun> {
    let df = &s.df;
    let (a_text, b_text) = job.pair.clone().ok_or_else(|| CliError::InvalidJob("symbols needs a pair (a, b)".into()))?;
    let bound = symbol_length_bound(&s.rep.image, job.l as u32)?;
    let input = KummerPair::new(&df.field, s.element("a", &a_text)?, s.element("b", &b_text)?)?;
    let pair = norm_map(df, &s.rep, &input, job.lift)?;
    let subgroup = s.intermediate_subgroup(&job.intermediate)?;
    let output = epsilon(df, &s.rep, s.sigma.as_ref(), &pair, subgroup.as_deref())?;
    let tensor = &output.tensor;
    let certificates = if job.quiet {
        None
    } else {
        // certificates work on the image as a product of conjugates of the input
        let conj = Conjugates::new(df, &input)?;
        let n = df.degree();
        let image = conj.norm_map(df, &s.rep, &(PowerProduct::a(n), PowerProduct::b(n)), job.lift)?;
        let sigma = s.sigma.as_ref().and_then(|g| df.automorphism_index(g));
        Some(Certificates {
            asa: sigma.map(|g| products::check_asa(df, &conj, g, &image)).transpose()?,
            norm_one: products::norm_one_certificates(df, &conj, &image)?.iter().map(|c| c.to_json()).collect(),
            runs: output.runs.iter().map(|r| r.to_json()).collect(),
            degrees_decrease: output.runs.iter().all(|r| r.run.strictly_decreasing()),
            within_bound: tensor.len() as u64 <= bound.bound,
            slots_over_base: slots_over_base(s, tensor),
        })
    };
    let report = SymbolsReport {
        l: job.l,
        a4: job.a4.clone(),
        a6: job.a6.clone(),
        field_polynomial: s.field_polynomial(),
        input: (a_text, b_text),
        norm_pair: pair.to_json(&df.field),
        lift: job.lift,
        path: output.path,
        t_function: output.t_description.clone(),
        intermediate_degree: subgroup.as_ref().map(|h| df.degree() / h.len()),
        intermediate_subgroup: subgroup,
        bound,
        length: tensor.len(),
        tensor: tensor.to_json(),
        certificates,
    };
    Ok(SymbolsRun { report, pair, output })
}

/// The tensor lives over `K(E)`: its constant field is `K` and its curve
/// is `E` itself.
pub fn slots_over_base(s: &Setup, tensor: &SymbolTensor) -> bool {
    let base = tensor.field.base();
    let curve = &s.df.curve;
    base.abs_degree() == s.base.abs_degree()
        && base.defining_polynomial() == s.base.defining_polynomial()
        && tensor.field.a4 == curve.a4
        && tensor.field.a6 == curve.a6
}

pub fn sl2(l: u64) -> Result<Sl2Report> {
    if l > i64::MAX as u64 || !exact::numfield::is_odd_prime(l as i64) {
        return Err(CliError::InvalidPrime(l));
    }
    if l > DESK_SCALE_MAX as u64 {
        return Err(CoreError::DeskScaleLimit(l).into());
    }
    let l32 = l as u32;
    let subgroups = cyclic_subgroups(l32);
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for g in &subgroups {
        *counts.entry(g.order() as u64).or_default() += 1;
    }
    let nontrivial: Vec<&GroupImage> = subgroups.iter().filter(|g| g.order() > 1).collect();
    let all_zero = nontrivial.iter().all(|g| matrix_sum(g) == modl::MatModL::zero(l32));
    let standard: [(&str, fn(u32) -> brauer_core::Result<GroupImage>, Option<bool>); 6] = [
        ("SplitCartan", modl::split_cartan, None),
        ("NonsplitCartan", modl::nonsplit_cartan, None),
        ("NormalizerSplit", modl::split_normalizer, Some(true)),
        ("NormalizerNonsplit", modl::nonsplit_normalizer, Some(false)),
        ("Borel", modl::borel, None),
        ("FullSL2", modl::full_sl2, None),
    ];
    let mut rows = Vec::new();
    for (name, build, split) in standard {
        let g = build(l32)?;
        let (bound, out_of_scope) = match symbol_length_bound(&g, l32) {
            Ok(b) => (Some(b), false),
            Err(CoreError::OutOfScope(_)) => (None, true),
            Err(e) => return Err(e.into()),
        };
        rows.push(BoundRow {
            subgroup: name.into(),
            order: g.order(),
            bound,
            normalizer_bound: split.map(|s| cartan_normalizer_bound(l32, s)),
            out_of_scope,
        });
    }
    Ok(Sl2Report {
        l,
        cyclic_subgroups: counts.into_iter().collect(),
        subgroups_checked: nontrivial.len(),
        matrix_sums_zero: all_zero,
        rows,
    })
}

/// What a finished command shows on the terminal, and where the full
/// report went.
pub struct Rendered {
    pub summary: String,
    pub body: String,
    pub written_to: Option<PathBuf>,
}

impl Rendered {
    pub fn terminal_text(&self) -> String {
        let mut out = self.summary.clone();
        match &self.written_to {
            Some(p) => out.push_str(&format!("\nfull report: {}\n{}", p.display(), preview(&self.body))),
            None => out.push_str(&format!("\n{}", self.body)),
        }
        out
    }
}

fn default_path(job: &JobSpec) -> PathBuf {
    PathBuf::from(format!("brauer-{}-l{}.json", job.command.name(), job.l))
}

/// Write `body` to the job's output path, or to a default file when it
/// is too long for the terminal.
fn emit(job: &JobSpec, summary: String, body: String) -> Result<Rendered> {
    let target = match &job.out {
        Some(p) => Some(p.clone()),
        None if body.chars().count() > PREVIEW_CHARS => Some(default_path(job)),
        None => None,
    };
    if let Some(p) = &target {
        write_file(p, &body)?;
    }
    Ok(Rendered { summary, body, written_to: target })
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, format!("{body}\n"))?;
    Ok(())
}

pub fn run(job: &JobSpec) -> Result<Rendered> {
    match job.command {
        Command::Analyze => {
            let r = analyze(job)?;
            let mut summary = format!(
                "[L:K] = {}, image {} of order {}, bound {} ({})",
                r.degree,
                r.classification.name(),
                r.image_order,
                r.bound.bound,
                r.bound.rule.name()
            );
            for b in &r.cartan_normalizer_bounds {
                summary.push_str(&format!("; in the {} Cartan normalizer, bound {}", b.cartan, b.bound));
            }
            emit(job, summary, serde_json::to_string_pretty(&r.to_json())?)
        }
        Command::Symbols => {
            let r = symbols(job)?.report;
            let summary = format!(
                "{} symbols via {} ({}), bound {} ({})",
                r.length,
                r.path.name(),
                r.t_function,
                r.bound.bound,
                r.bound.rule.name()
            );
            emit(job, summary, serde_json::to_string_pretty(&r.to_json())?)
        }
        Command::Sl2 => {
            let r = sl2(job.l)?;
            let summary = format!(
                "{} nontrivial cyclic subgroups of SL_2(F_{}), matrix sums {}",
                r.subgroups_checked,
                r.l,
                if r.matrix_sums_zero { "all zero" } else { "NOT all zero" }
            );
            emit(job, summary, serde_json::to_string_pretty(&r.to_json())?)
        }
    }
}
