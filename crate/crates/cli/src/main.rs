use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use brauer_cli::commands;
use brauer_cli::error::{CliError, Result};
use brauer_cli::job::{split_pair, Command, Intermediate, JobSpec};
use brauer_core::brauer::Lift;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "brauer", version, about = "Division fields, mod-l Galois images and symbol lengths in Br(E)")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Division field, Galois image, classification and symbol-length bound.
    Analyze(JobArgs),
    /// Explicit symbols for the image of a pair (a, b) under the norm map.
    Symbols(JobArgs),
    /// Cyclic subgroups, matrix sums and the bound table for SL_2(F_l).
    Sl2(JobArgs),
    /// Run a job file; its "command" field selects the command.
    Run(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// JSON job file; flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    #[arg(long)]
    l: Option<u64>,
    /// Coefficient a4 in z = ζ_l, e.g. "0" or "6*z^3-6*z^2-6*z+6".
    #[arg(long, allow_hyphen_values = true)]
    a4: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a6: Option<String>,
    /// "a,b" in z and m, the generator of L.
    #[arg(long, allow_hyphen_values = true)]
    pair: Option<String>,
    /// "auto", "none", or a polynomial in x over K with a root generating K'.
    #[arg(long)]
    intermediate: Option<String>,
    /// Defining polynomial in x for presenting L over K.
    #[arg(long = "field-poly")]
    field_polynomial: Option<String>,
    /// "nonnegative" or "symmetric".
    #[arg(long)]
    lift: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit the certificate block.
    #[arg(long)]
    quiet: bool,
}

impl JobArgs {
    fn into_job(self, command: Option<Command>) -> Result<JobSpec> {
        let mut job = match &self.job {
            Some(path) => JobSpec::from_json(&serde_json::from_str(&std::fs::read_to_string(path)?)?)?,
            None => {
                let l = self.l.ok_or_else(|| CliError::InvalidJob("--l or --job is required".into()))?;
                JobSpec::new(command.unwrap_or(Command::Analyze), l)
            }
        };
        if let Some(c) = command {
            job.command = c;
        }
        if let Some(l) = self.l {
            job.l = l;
        }
        if let Some(a4) = self.a4 {
            job.a4 = a4;
        }
        if let Some(a6) = self.a6 {
            job.a6 = a6;
        }
        if let Some(p) = self.pair {
            job.pair = Some(split_pair(&p)?);
        }
        if let Some(i) = self.intermediate {
            job.intermediate = Intermediate::parse(&i);
        }
        if let Some(f) = self.field_polynomial {
            job.field_polynomial = Some(f);
        }
        if let Some(lift) = self.lift {
            job.lift = Lift::from_name(&lift).ok_or_else(|| CliError::InvalidJob(format!("unknown lift {lift}")))?;
        }
        if self.out.is_some() {
            job.out = self.out;
        }
        job.quiet |= self.quiet;
        Ok(job)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (args, command) = match cli.command {
        Cmd::Analyze(a) => (a, Some(Command::Analyze)),
        Cmd::Symbols(a) => (a, Some(Command::Symbols)),
        Cmd::Sl2(a) => (a, Some(Command::Sl2)),
        Cmd::Run(a) => (a, None),
    };
    match args.into_job(command).and_then(|job| commands::run(&job)) {
        Ok(r) => {
            // a closed pipe is not an error of the computation
            let _ = writeln!(std::io::stdout().lock(), "{}", r.terminal_text());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
