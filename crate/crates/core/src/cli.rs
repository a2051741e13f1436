//! Command-line front end. Exit codes: 0 success, 2 precondition
//! violation, 3 verification mismatch, 4 I/O error.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::analysis::analyze;
use crate::codegen::{build_code, CodeParams, Family, ENUMERATION_CAP};
use crate::reference::reference_reports;
use crate::registry::{export_report, import_json, search, BestKnownTable, RegistryError, ReportFormat, SearchOptions};
use crate::spectra::{lee_spectrum_bruteforce, lee_spectrum_closed_form};
use crate::sweep::{closed_form_evaluator, verify_family};

#[derive(Debug, Parser)]
#[command(name = "z4scx", version, about = "Quaternary codes from simplicial-complex defining sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and write its defining set, generator and summary
    Build {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Lee weight distribution
    Spectrum {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Print projectivity, Plotkin, Gray-image and minimality checks
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Compare closed-form spectra with enumeration for every valid set
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "m-max")]
        m_max: u32,
    },
    /// Sweep parameter sets and list the resulting codes
    Search {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long = "m-max")]
        m_max: u32,
        #[arg(long = "m-min", default_value_t = 1)]
        m_min: u32,
        #[arg(long = "projective-only")]
        projective_only: bool,
        /// best-known CSV to classify against
        #[arg(long)]
        classify: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Attach verdicts to records from a JSON file
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        db: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export records, or regenerate the reference tables
    Report {
        #[arg(long = "paper-tables")]
        paper_tables: bool,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        db: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub m: u32,
    #[arg(long = "A", default_value = "{}")]
    pub a: String,
    #[arg(long = "B", default_value = "{}")]
    pub b: String,
    #[arg(long = "C", default_value = "{}")]
    pub c: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, default_value = "json")]
    pub format: String,
    /// file (or directory for table reports); stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// A failure mapped to an exit code.
#[derive(Debug)]
pub enum CliError {
    Precondition(String),
    Mismatch(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Precondition(s) | CliError::Mismatch(s) | CliError::Io(s) => s,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<RegistryError> for CliError {
    fn from(e: RegistryError) -> Self {
        match e {
            RegistryError::Io(e) => CliError::Io(e.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

fn pre(e: impl std::fmt::Display) -> CliError {
    CliError::Precondition(e.to_string())
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, CliError> {
        let p = CodeParams::parse(self.family, self.m, &self.a, &self.b, &self.c).map_err(pre)?;
        p.validate().map_err(pre)?;
        Ok(p)
    }
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn std::io::Write) -> Result<(), CliError> {
    match out {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, text)?;
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load_table(path: Option<&Path>) -> Result<BestKnownTable, CliError> {
    match path {
        Some(p) if !p.exists() => Err(CliError::Io(format!("{}: no such file", p.display()))),
        Some(p) => Ok(BestKnownTable::load(p)?),
        None => Ok(BestKnownTable::bundled()),
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Runs a parsed command, writing human output to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn std::io::Write) -> Result<(), CliError> {
    match cli.command {
        Command::Build { code, out } => {
            let params = code.params()?;
            let (set, qc) = build_code(params).map_err(pre)?;
            let spectrum = lee_spectrum_bruteforce(&qc);
            let d_l = spectrum.min_distance().map_err(pre)?;
            let summary = json!({
                "family": params.family,
                "m": params.m(),
                "A": params.a.to_string(),
                "B": params.b.to_string(),
                "C": params.c.to_string(),
                "n": qc.n,
                "k1": qc.k1,
                "k2": qc.k2,
                "size": qc.size().to_string(),
                "dL": d_l,
                "spectrum": spectrum,
            });
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join("defining_set.json"), pretty(&set.to_json()))?;
                fs::write(dir.join("generator.json"), pretty(&qc.generator_json()))?;
                fs::write(dir.join("generator.txt"), qc.generator_grid())?;
                fs::write(dir.join("summary.json"), pretty(&summary))?;
            }
            writeln!(stdout, "n={} type=4^{} 2^{} dL={}", qc.n, qc.k1, qc.k2, d_l)?;
            Ok(())
        }
        Command::Spectrum { code, format } => {
            let params = code.params()?;
            let cf = lee_spectrum_closed_form(&params).map_err(pre)?;
            let n = params.profile().expected_length(params.family);
            let (dist, source) = if params.m() <= ENUMERATION_CAP {
                let (_, qc) = build_code(params).map_err(pre)?;
                (lee_spectrum_bruteforce(&qc), "enumeration")
            } else {
                (cf.distribution.clone(), "closed-form")
            };
            let text = match format.parse::<ReportFormat>()? {
                ReportFormat::Json => pretty(&json!({
                    "n": n,
                    "source": source,
                    "distribution": dist,
                    "closed_form": cf.distribution,
                    "agrees": cf.distribution == dist,
                    "nominal_type": cf.nominal_type,
                    "effective_type": cf.effective_type,
                    "enumerator": dist.enumerator(n),
                })),
                ReportFormat::Csv => dist.to_csv(),
                ReportFormat::Markdown => {
                    let mut s = String::from("| weight | count |\n|---|---|\n");
                    for (w, f) in dist.iter() {
                        s.push_str(&format!("| {w} | {f} |\n"));
                    }
                    s
                }
            };
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
        Command::Analyze { code } => {
            let params = code.params()?;
            let (set, qc) = build_code(params).map_err(pre)?;
            let report = analyze(&set, &qc);
            stdout.write_all(pretty(&serde_json::to_value(report).expect("report serializes")).as_bytes())?;
            Ok(())
        }
        Command::Verify { family, m_max } => {
            let summary = verify_family(family, m_max, closed_form_evaluator()).map_err(CliError::Precondition)?;
            writeln!(
                stdout,
                "{family}: {} parameter sets, {} mismatches, {} nominal types excused by folding",
                summary.checked,
                summary.mismatches.len(),
                summary.flagged.len()
            )?;
            match summary.mismatches.first() {
                None => Ok(()),
                Some(first) => Err(CliError::Mismatch(format!("first counterexample: {first}"))),
            }
        }
        Command::Search { family, m_max, m_min, projective_only, classify, output } => {
            let format: ReportFormat = output.format.parse()?;
            let table = classify.as_deref().map(|p| load_table(Some(p))).transpose()?;
            let options = SearchOptions { projective_only, ..Default::default() };
            let records = search(family, m_min..=m_max, &options, table.as_ref())?;
            emit(output.out.as_deref(), &export_report(&records, format)?, stdout)
        }
        Command::Classify { input, db, output } => {
            let format: ReportFormat = output.format.parse()?;
            let table = load_table(db.as_deref())?;
            let mut records = import_json(&fs::read_to_string(&input)?)?;
            for r in &mut records {
                r.classify(&table);
            }
            emit(output.out.as_deref(), &export_report(&records, format)?, stdout)
        }
        Command::Report { paper_tables, input, db, output } => {
            let table = load_table(db.as_deref())?;
            if paper_tables {
                let dir = output.out.unwrap_or_else(|| PathBuf::from("."));
                fs::create_dir_all(&dir)?;
                let mut failures = Vec::new();
                for (name, markdown, rows) in reference_reports(&table)? {
                    fs::write(dir.join(name), markdown)?;
                    let bad = rows.iter().filter(|r| !r.ok()).count();
                    writeln!(stdout, "{name}: {} rows, {bad} differ from the reference values", rows.len())?;
                    failures
                        .extend(rows.iter().filter(|r| !r.ok()).map(|r| format!("{:?}: {:?}", r.row, r.mismatches())));
                }
                return match failures.first() {
                    None => Ok(()),
                    Some(f) => Err(CliError::Mismatch(f.clone())),
                };
            }
            let Some(input) = input else {
                return Err(CliError::Precondition("report needs --input or --paper-tables".into()));
            };
            let format: ReportFormat = output.format.parse()?;
            let mut records = import_json(&fs::read_to_string(&input)?)?;
            if db.is_some() {
                for r in &mut records {
                    r.classify(&table);
                }
            }
            emit(output.out.as_deref(), &export_report(&records, format)?, stdout)
        }
    }
}

/// Caps the rayon pool from `Z4SCX_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("Z4SCX_THREADS") {
        let n: usize = v.parse().map_err(|_| pre(format!("Z4SCX_THREADS must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(pre("Z4SCX_THREADS must be a positive integer, got `0`"));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = configure_threads().and_then(|()| run(cli, &mut std::io::stdout().lock()));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}
