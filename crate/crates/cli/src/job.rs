//! Job files: everything one invocation needs, as JSON or flags.

use std::path::PathBuf;

use brauer_core::brauer::Lift;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

pub const JOB_SCHEMA: &str = "brauer.job/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Symbols,
    Sl2,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Symbols => "symbols",
            Command::Sl2 => "sl2",
        }
    }

    pub fn from_name(s: &str) -> Option<Command> {
        [Command::Analyze, Command::Symbols, Command::Sl2].into_iter().find(|c| c.name() == s)
    }
}

/// Which field `K ⊂ K' ⊂ L` the corestriction passes through.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum Intermediate {
    /// Fixed field of a subgroup of smallest prime order.
    #[default]
    Auto,
    /// Straight from `L(E)` to `K(E)`.
    Direct,
    /// `K' = K(r)` for a root `r ∈ L` of this polynomial in `x` over `K`.
    Generator(String),
}

impl Intermediate {
    pub fn parse(s: &str) -> Intermediate {
        match s.trim() {
            "auto" => Intermediate::Auto,
            "none" | "direct" => Intermediate::Direct,
            p => Intermediate::Generator(p.to_string()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Intermediate::Auto => json!("auto"),
            Intermediate::Direct => json!("none"),
            Intermediate::Generator(p) => json!(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub l: u64,
    pub a4: String,
    pub a6: String,
    pub command: Command,
    /// `(a, b)` as expressions in `z = ζ_l` and `m`, the generator of `L`.
    pub pair: Option<(String, String)>,
    pub intermediate: Intermediate,
    /// Alternative defining polynomial for `L` over `K`, in `x`.
    pub field_polynomial: Option<String>,
    pub lift: Lift,
    pub out: Option<PathBuf>,
    pub quiet: bool,
}

impl JobSpec {
    pub fn new(command: Command, l: u64) -> JobSpec {
        JobSpec {
            l,
            a4: "0".into(),
            a6: "0".into(),
            command,
            pair: None,
            intermediate: Intermediate::Auto,
            field_polynomial: None,
            lift: Lift::NonNegative,
            out: None,
            quiet: false,
        }
    }

    pub fn from_json(v: &Value) -> Result<JobSpec> {
        let bad = |m: &str| CliError::InvalidJob(m.to_string());
        if let Some(s) = v.get("schema") {
            if s.as_str() != Some(JOB_SCHEMA) {
                return Err(bad(&format!("unsupported schema {s}")));
            }
        }
        let text = |k: &str| -> Result<Option<String>> {
            match v.get(k) {
                None | Some(Value::Null) => Ok(None),
                Some(Value::String(s)) => Ok(Some(s.clone())),
                Some(Value::Number(n)) => Ok(Some(n.to_string())),
                Some(_) => Err(bad(&format!("{k} must be a string"))),
            }
        };
        let command = match text("command")? {
            Some(c) => Command::from_name(&c).ok_or_else(|| bad(&format!("unknown command {c}")))?,
            None => Command::Analyze,
        };
        let l = v.get("l").and_then(Value::as_u64).ok_or_else(|| bad("missing l"))?;
        let mut job = JobSpec::new(command, l);
        if let Some(a4) = text("a4")? {
            job.a4 = a4;
        }
        if let Some(a6) = text("a6")? {
            job.a6 = a6;
        }
        job.pair = match v.get("pair") {
            None | Some(Value::Null) => None,
            Some(Value::Array(items)) if items.len() == 2 => {
                let s = |i: usize| items[i].as_str().map(str::to_string).ok_or_else(|| bad("pair entries must be strings"));
                Some((s(0)?, s(1)?))
            }
            Some(Value::String(s)) => Some(split_pair(s)?),
            Some(_) => return Err(bad("pair must be [a, b]")),
        };
        if let Some(i) = text("intermediate")? {
            job.intermediate = Intermediate::parse(&i);
        }
        job.field_polynomial = text("field_polynomial")?;
        if let Some(lift) = text("lift")? {
            job.lift = Lift::from_name(&lift).ok_or_else(|| bad(&format!("unknown lift {lift}")))?;
        }
        job.out = text("out")?.map(PathBuf::from);
        job.quiet = v.get("quiet").and_then(Value::as_bool).unwrap_or(false);
        Ok(job)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": JOB_SCHEMA,
            "l": self.l,
            "a4": self.a4,
            "a6": self.a6,
            "command": self.command.name(),
            "pair": self.pair.as_ref().map(|(a, b)| vec![a.clone(), b.clone()]),
            "intermediate": self.intermediate.to_json(),
            "field_polynomial": self.field_polynomial,
            "lift": self.lift.name(),
            "out": self.out.as_ref().map(|p| p.display().to_string()),
            "quiet": self.quiet,
        })
    }

    /// `l` must be an odd prime.
    pub fn check_prime(&self) -> Result<()> {
        if self.l > i64::MAX as u64 || !exact::numfield::is_odd_prime(self.l as i64) {
            return Err(CliError::InvalidPrime(self.l));
        }
        Ok(())
    }
}

/// `"a,b"` into its two expressions.
pub fn split_pair(s: &str) -> Result<(String, String)> {
    match s.split_once(',') {
        Some((a, b)) if !a.trim().is_empty() && !b.trim().is_empty() => Ok((a.trim().into(), b.trim().into())),
        _ => Err(CliError::InvalidJob(format!("pair {s:?} is not of the form a,b"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn job_round_trip() {
        let mut job = JobSpec::new(Command::Symbols, 5);
        job.a6 = "10".into();
        job.pair = Some(("z + m".into(), "m".into()));
        job.intermediate = Intermediate::Generator("x^2 + x + 1".into());
        job.lift = Lift::Symmetric;
        let v = job.to_json();
        assert_eq!(JobSpec::from_json(&v).unwrap(), job);
        let minimal = JobSpec::from_json(&json!({"l": 5, "a4": 0, "a6": "10"})).unwrap();
        assert_eq!(minimal.command, Command::Analyze);
        assert_eq!(minimal.a4, "0");
        assert!(JobSpec::from_json(&json!({"l": 5, "schema": "other/1"})).is_err());
        assert!(JobSpec::from_json(&json!({"l": 5, "pair": "z"})).is_err());
    }

    #[test]
    fn primes() {
        for (l, ok) in [(2, false), (3, true), (4, false), (5, true), (9, false), (13, true)] {
            assert_eq!(JobSpec::new(Command::Analyze, l).check_prime().is_ok(), ok, "l = {l}");
        }
    }
}
