use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::json;

use quadpoisson::catalog::{dhc_catalog, dhc_info, parse_param_list, DHC_INFO};
use quadpoisson::report::{cohomology_report, spectrum_report, CohomologyReport};
use quadpoisson::structure_file::{parse_structure, LoadedStructure};
use quadpoisson::suites::{run_suite, SuiteReport, SUITES};
use quadpoisson::{Error, MultiVec, Rational, SrmiStructure};

/// Exact formal Poisson cohomology of quadratic Poisson tensors.
#[derive(Parser)]
#[command(name = "quadpoisson", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct StructureArgs {
    /// `dhc:<i>` for a catalog class, or `file:<path>` for a structure file.
    #[arg(long)]
    structure: String,
    /// Catalog parameter `k=v` with an exact rational value (repeatable).
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
}

#[derive(clap::Args)]
struct OutputArgs {
    /// Write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON to standard output instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the quadratic Poisson tensors of the classification.
    Catalog {
        #[arg(long)]
        index: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// LP-cohomology slices up to a degree bound.
    Cohomology {
        #[command(flatten)]
        structure: StructureArgs,
        /// Largest 𝓟-degree r (and coefficient degree d) computed.
        #[arg(long, default_value_t = 9)]
        rmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Joint spectrum and kernel tower of X_i − δ_i on degree-r polynomials.
    Spectrum {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(long, short = 'r', default_value_t = 3)]
        r: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a property suite (or all of them).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Failure classes mapped to exit codes: 1 for a failed mathematical check,
/// 2 for bad input or usage.
enum Failure {
    Math(anyhow::Error),
    Input(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.into())
        } else {
            Failure::Math(e.into())
        }
    }
}

struct Loaded {
    label: String,
    params: BTreeMap<String, Rational>,
    lambda: MultiVec<Rational>,
    srmi: Option<SrmiStructure<Rational>>,
}

fn load(args: &StructureArgs) -> Result<Loaded, Failure> {
    let params = parse_param_list(args.params.iter().map(String::as_str))?;
    if let Some(idx) = args.structure.strip_prefix("dhc:") {
        let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad catalog index `{idx}`")))?;
        let e = dhc_catalog(i, &params)?;
        Ok(Loaded { label: args.structure.clone(), params: e.params.clone(), lambda: e.lambda.clone(), srmi: e.certificate })
    } else if let Some(path) = args.structure.strip_prefix("file:") {
        if !params.is_empty() {
            return Err(Failure::Input(anyhow::anyhow!("--param applies only to catalog structures")));
        }
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading structure file {path}"))
            .map_err(Failure::Input)?;
        let s = parse_structure(&text)?;
        let lambda = s.lambda().clone();
        let srmi = match s {
            LoadedStructure::Srmi(s) => Some(*s),
            LoadedStructure::Bivector(_) => None,
        };
        Ok(Loaded { label: args.structure.clone(), params, lambda, srmi })
    } else {
        Err(Failure::Input(anyhow::anyhow!("--structure must be dhc:<i> or file:<path>")))
    }
}

/// Writes to stdout; a reader that closed the pipe early (`| head`) is not
/// an error.
fn write_stdout(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn emit(value: &serde_json::Value, output: &OutputArgs, table: impl FnOnce() -> String) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("report serializes") + "\n";
    if let Some(path) = &output.out {
        std::fs::write(path, &text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Input)?;
    }
    if output.json {
        write_stdout(&text);
    } else {
        write_stdout(&table());
    }
    Ok(())
}

fn catalog(index: Option<usize>, as_json: bool) -> Result<bool, Failure> {
    let infos: Vec<_> = match index {
        Some(i) => vec![dhc_info(i)?],
        None => DHC_INFO.iter().collect(),
    };
    if as_json {
        let v: Vec<_> = infos
            .iter()
            .map(|c| {
                json!({
                    "index": c.index,
                    "params": c.params,
                    "tensor": c.tensor,
                    "frame": c.frame,
                    "decomposition": c.decomposition,
                    "srmi": c.srmi_condition,
                })
            })
            .collect();
        write_stdout(&(serde_json::to_string_pretty(&v).expect("listing serializes") + "\n"));
    } else {
        let mut out = String::new();
        for c in infos {
            out.push_str(&format!("Λ{:<2} SRMI: {}\n", c.index, c.srmi_condition));
            out.push_str(&format!("    tensor:        {}\n", c.tensor));
            out.push_str(&format!("    frame:         {}\n", c.frame));
            out.push_str(&format!("    decomposition: {}\n", c.decomposition));
            let params = if c.params.is_empty() { "-".to_string() } else { c.params.join(", ") };
            out.push_str(&format!("    parameters:    {params}\n"));
        }
        write_stdout(&out);
    }
    Ok(true)
}

fn cohomology_table(rep: &CohomologyReport, n: usize) -> String {
    let mut out = format!("{} {:?}\n", rep.structure, rep.params);
    out.push_str("dim LH^{p,d}(R)      d =");
    for d in 0..=rep.r_max {
        out.push_str(&format!("{d:>4}"));
    }
    out.push('\n');
    for p in 0..=n {
        out.push_str(&format!("  p = {p}                  "));
        for d in 0..=rep.r_max {
            out.push_str(&format!("{:>4}", rep.real_dim(p, d).unwrap_or(0)));
        }
        out.push('\n');
    }
    if !rep.slices.is_empty() {
        out.push_str("slices (p, r): dim R / P / S, checks\n");
        for s in &rep.slices {
            if s.dim_r + s.dim_p + s.dim_s == 0 {
                continue;
            }
            let ok = s.checks.les && s.checks.assemble && s.checks.subcomplex && s.checks.complement_independent;
            out.push_str(&format!(
                "  ({}, {}): {} / {} / {}  {}\n",
                s.p,
                s.r,
                s.dim_r,
                s.dim_p,
                s.dim_s,
                if ok { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(&format!("all checks: {}\n", if rep.all_checks_pass() { "pass" } else { "FAIL" }));
    }
    out
}

fn suites_table(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        for c in &r.checks {
            let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
            out.push_str(&format!("[{}] {}: {}{}\n", if c.pass { "pass" } else { "FAIL" }, r.suite, c.name, detail));
        }
        out.push_str(&format!("suite {}: {}\n", r.suite, if r.passed() { "pass" } else { "FAIL" }));
    }
    out
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Catalog { index, json } => catalog(index, json),
        Command::Cohomology { structure, rmax, output } => {
            let l = load(&structure)?;
            let rep = cohomology_report(&l.label, &l.params, &l.lambda, l.srmi.as_ref(), rmax)?;
            let value = serde_json::to_value(&rep).expect("report serializes");
            emit(&value, &output, || cohomology_table(&rep, l.lambda.n()))?;
            Ok(rep.all_checks_pass())
        }
        Command::Spectrum { structure, r, output } => {
            let l = load(&structure)?;
            let s = l
                .srmi
                .ok_or_else(|| Failure::Input(anyhow::anyhow!("the spectrum needs an SRMI presentation (alpha and frame)")))?;
            let rep = spectrum_report(&l.label, &l.params, &s, r)?;
            let value = serde_json::to_value(&rep).expect("report serializes");
            emit(&value, &output, || {
                let mut t = format!("{} r = {}: μ = {}, s = {}, kernel dims {:?}\n", rep.structure, rep.r, rep.mu, rep.s, rep.kernel_dims);
                t.push_str(&format!("spectrum formula matches diagonals: {}\n", rep.formula_matches));
                for (a, level) in rep.kernel_lines.iter().enumerate() {
                    for line in level {
                        t.push_str(&format!("  ker^({}) line {:?}\n", a + 1, line));
                    }
                }
                t
            })?;
            Ok(rep.formula_matches)
        }
        Command::Verify { suite, output } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let reports = names.iter().map(|s| run_suite(s)).collect::<Result<Vec<_>, _>>()?;
            let value = serde_json::to_value(&reports).expect("report serializes");
            emit(&value, &output, || suites_table(&reports))?;
            Ok(reports.iter().all(SuiteReport::passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Math(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
