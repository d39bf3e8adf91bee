//! `collective`: decomposition tables, encoding, channel simulation and
//! verification suites for qubit codes under collective noise.
//!
//! Exit codes: 0 pass, 1 a checked claim failed, 2 usage or input error.

mod state;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use collective_core::channels::ChannelSpec;
use collective_core::codes::{build, build_gatelist, decode, encode, encode_input, Basis3Variant, CodeFamily, CodeSpec};
use collective_core::json::to_string_fixed;
use collective_core::linalg::{fidelity, von_neumann_entropy, DensityMatrix};
use collective_core::random::{random_density, random_pure, trial_rng};
use collective_core::su2::{multiplicities, MAX_DECOMPOSE_QUBITS};
use collective_core::verify::{check_rate, run_suite, Suite, MAX_RATE_QUBITS};

use state::parse_state;

/// Minimum recovered-data fidelity for `simulate` to pass is `1 − SIMULATE_TOL`.
const SIMULATE_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "collective", version, about = "Qubit codes under collective noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,
    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Original,
    Redefined,
}

impl From<VariantArg> for Basis3Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Original => Basis3Variant::Original,
            VariantArg::Redefined => Basis3Variant::Redefined,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Irrep decomposition of n qubits (CSV columns n,j,r,dim).
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Encode data (and gauge) states; writes the encoded density matrix.
    Encode(EncodeArgs),
    /// Encode, apply a channel from file, decode; report data fidelity per trial.
    Simulate(SimulateArgs),
    /// Run a verification suite.
    Verify {
        /// theorem1, ns3, dfs4, ns5, blocks, entropy, gatelist or rate.
        #[arg(long)]
        suite: String,
        /// Largest n in the rate table.
        #[arg(long, default_value_t = MAX_RATE_QUBITS)]
        n_max: usize,
    },
    /// Write encoder matrices, gate lists, logical vectors or wire layouts.
    Export {
        #[arg(long)]
        code: CodeFamily,
        #[arg(long, value_enum)]
        what: ExportKind,
        #[arg(long, value_enum, default_value = "redefined")]
        variant: VariantArg,
    },
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(long)]
    code: CodeFamily,
    /// Data state: inline (`0`, `1`, `+`, `-` per qubit, or `mixed`) or a JSON file.
    #[arg(long)]
    data: String,
    /// Gauge-wire state; `|0>` when omitted. Not accepted for dfs4.
    #[arg(long)]
    gauge: Option<String>,
    /// State of the zero-ancilla wires; rejected unless it is `|0..0>`.
    #[arg(long)]
    ancilla: Option<String>,
    #[arg(long, value_enum, default_value = "redefined")]
    variant: VariantArg,
    #[arg(long)]
    export_encoder: Option<PathBuf>,
    #[arg(long)]
    export_gates: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    code: CodeFamily,
    /// Channel JSON: `{"n": 3, "terms": [{"p": .., "kind": "identity|x|y|z|euler|matrix", ..}]}`.
    #[arg(long)]
    channel: PathBuf,
    /// Fixed data state; a random pure state per trial when omitted.
    #[arg(long)]
    data: Option<String>,
    /// Fixed gauge state; a random mixed state per trial when omitted.
    #[arg(long)]
    gauge: Option<String>,
    #[arg(long, value_enum, default_value = "redefined")]
    variant: VariantArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Encoder,
    Gates,
    Logical,
    Layout,
}

#[derive(Debug)]
struct UsageError(String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<collective_core::Error> for UsageError {
    fn from(e: collective_core::Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}

type CliResult<T> = Result<T, UsageError>;

/// Primary output plus an optional one-line summary.
struct Output {
    body: String,
    summary: Option<String>,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| write_output(&cli, out)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Decompose { n } => decompose(cli, *n),
        Command::Encode(args) => encode_cmd(cli, args),
        Command::Simulate(args) => simulate(cli, args),
        Command::Verify { suite, n_max } => verify(cli, suite, *n_max),
        Command::Export { code, what, variant } => export(cli, *code, *what, (*variant).into()),
    }
}

/// The JSON or CSV body goes to `--out` or stdout. The summary goes to stdout
/// when the body is in a file, otherwise to stderr.
fn write_output(cli: &Cli, out: Output) -> CliResult<bool> {
    match &cli.out {
        Some(path) => {
            fs::write(path, &out.body).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            if let Some(s) = &out.summary {
                println!("{s}");
            }
        }
        None => {
            print!("{}", out.body);
            if let Some(s) = &out.summary {
                eprintln!("{s}");
            }
        }
    }
    Ok(out.pass)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format], command: &str) -> CliResult<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        return Err(UsageError(format!("{command} does not support --format {}", f.name())));
    }
    Ok(f)
}

fn json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    Ok(to_string_fixed(value)?)
}

fn decompose(cli: &Cli, n: usize) -> CliResult<Output> {
    let format = format_or(cli, Format::Csv, &[Format::Csv, Format::Json, Format::Text], "decompose")?;
    if !(1..=MAX_DECOMPOSE_QUBITS).contains(&n) {
        return Err(UsageError(format!("--n must be in 1..={MAX_DECOMPOSE_QUBITS}, got {n}")));
    }
    let dec = multiplicities(n)?;
    let body = match format {
        Format::Csv => dec.to_csv(),
        Format::Json => json(&dec)?,
        Format::Text => format!("2^{n} = {dec}\n"),
    };
    Ok(Output { body, summary: None, pass: true })
}

fn parse_gauge(code: &CodeSpec, spec: Option<&String>) -> CliResult<Option<DensityMatrix>> {
    let wires = code.gauge_wires().len();
    match spec {
        Some(_) if wires == 0 => Err(UsageError(format!("{} has no gauge wire; drop --gauge", code.family))),
        Some(s) => Ok(Some(parse_state(s, wires, "gauge")?)),
        None => Ok(None),
    }
}

fn encode_cmd(cli: &Cli, args: &EncodeArgs) -> CliResult<Output> {
    format_or(cli, Format::Json, &[Format::Json], "encode")?;
    let variant: Basis3Variant = args.variant.into();
    if args.export_gates.is_some() && variant != Basis3Variant::Redefined {
        return Err(UsageError("gate lists exist for the redefined basis only".into()));
    }
    let code = build(args.code, variant);
    let data = parse_state(&args.data, code.data_wires().len(), "data")?;
    let gauge = parse_gauge(&code, args.gauge.as_ref())?;
    let encoded = match &args.ancilla {
        None => encode(&code, gauge.as_ref(), &data)?,
        Some(spec) => {
            let ancilla = parse_state(spec, code.zero_wires().len(), "ancilla")?;
            let input = code.assemble_register(gauge.as_ref(), &ancilla, &data)?;
            encode_input(&code, &input)?
        }
    };

    // everything is computed before any file is written
    let mut extra = Vec::new();
    if let Some(path) = &args.export_encoder {
        extra.push((path, json(&code.encoder)?));
    }
    if let Some(path) = &args.export_gates {
        extra.push((path, json(&build_gatelist(args.code)?)?));
    }
    let body = json(&encoded)?;
    for (path, text) in extra {
        fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(Output { body, summary: None, pass: true })
}

#[derive(Serialize)]
struct SimulationTrial {
    trial: u64,
    fidelity: f64,
    product_residual: f64,
    /// Entropy in bits of the decoded gauge state; absent without a gauge wire.
    gauge_entropy: Option<f64>,
}

#[derive(Serialize)]
struct SimulationReport {
    code: String,
    variant: Basis3Variant,
    seed: u64,
    trials: u64,
    channel_terms: usize,
    subnormalized: bool,
    min_fidelity: f64,
    max_product_residual: f64,
    pass: bool,
    details: Vec<SimulationTrial>,
}

fn simulate(cli: &Cli, args: &SimulateArgs) -> CliResult<Output> {
    let format = format_or(cli, Format::Json, &[Format::Json, Format::Text], "simulate")?;
    if cli.trials == 0 {
        return Err(UsageError("--trials must be at least 1".into()));
    }
    let variant: Basis3Variant = args.variant.into();
    let code = build(args.code, variant);
    let text = fs::read_to_string(&args.channel)
        .map_err(|e| format!("cannot read channel file {}: {e}", args.channel.display()))?;
    let channel = ChannelSpec::from_json(&text)?;
    if channel.n() != code.n {
        return Err(UsageError(format!(
            "channel acts on {} qubits, {} has {}",
            channel.n(),
            code.family,
            code.n
        )));
    }
    let data_qubits = code.data_wires().len();
    let fixed_data = args.data.as_ref().map(|s| parse_state(s, data_qubits, "data")).transpose()?;
    let fixed_gauge = parse_gauge(&code, args.gauge.as_ref())?;
    let has_gauge = !code.gauge_wires().is_empty();

    let mut details = Vec::with_capacity(cli.trials as usize);
    for t in 0..cli.trials {
        let mut rng = trial_rng(cli.seed, t);
        let data = match &fixed_data {
            Some(d) => d.clone(),
            None => random_pure(1 << data_qubits, &mut rng),
        };
        let gauge = match (&fixed_gauge, has_gauge) {
            (Some(g), _) => Some(g.clone()),
            (None, true) => Some(random_density(2, &mut rng)),
            (None, false) => None,
        };
        let encoded = encode(&code, gauge.as_ref(), &data)?;
        let out = decode(&code, &channel.apply(&encoded)?)?;
        details.push(SimulationTrial {
            trial: t,
            fidelity: fidelity(&out.data, &data)?,
            product_residual: out.product_residual,
            gauge_entropy: out.gauge.as_ref().map(von_neumann_entropy).transpose()?,
        });
    }
    let min_fidelity = details.iter().map(|d| d.fidelity).fold(f64::INFINITY, f64::min);
    let max_product_residual = details.iter().map(|d| d.product_residual).fold(0.0, f64::max);
    let pass = min_fidelity > 1.0 - SIMULATE_TOL;
    let summary = format!(
        "simulate {}: {} min_fidelity={:.12} max_product_residual={:.3e} trials={} seed={}",
        code.family,
        if pass { "PASS" } else { "FAIL" },
        min_fidelity,
        max_product_residual,
        cli.trials,
        cli.seed
    );
    let report = SimulationReport {
        code: code.family.to_string(),
        variant,
        seed: cli.seed,
        trials: cli.trials,
        channel_terms: channel.terms().len(),
        subnormalized: channel.is_subnormalized(),
        min_fidelity,
        max_product_residual,
        pass,
        details,
    };
    Ok(match format {
        Format::Text => Output { body: format!("{summary}\n"), summary: None, pass },
        _ => Output { body: json(&report)?, summary: Some(summary), pass },
    })
}

fn verify(cli: &Cli, suite: &str, n_max: usize) -> CliResult<Output> {
    let format = format_or(cli, Format::Json, &[Format::Json, Format::Text], "verify")?;
    let suite: Suite = suite.parse().map_err(UsageError)?;
    let report = match suite {
        Suite::Rate => check_rate(n_max)?,
        _ => run_suite(suite, cli.trials, cli.seed)?,
    };
    let summary = report.summary();
    Ok(match format {
        Format::Text => Output { body: format!("{summary}\n"), summary: None, pass: report.pass },
        _ => Output { body: report.to_json()?, summary: Some(summary), pass: report.pass },
    })
}

fn export(cli: &Cli, family: CodeFamily, what: ExportKind, variant: Basis3Variant) -> CliResult<Output> {
    let code = build(family, variant);
    let body = match what {
        ExportKind::Gates => {
            if variant != Basis3Variant::Redefined {
                return Err(UsageError("gate lists exist for the redefined basis only".into()));
            }
            let list = build_gatelist(family)?;
            match format_or(cli, Format::Json, &[Format::Json, Format::Text], "export --what gates")? {
                Format::Text => list.to_string(),
                _ => json(&list)?,
            }
        }
        ExportKind::Encoder => {
            format_or(cli, Format::Json, &[Format::Json], "export --what encoder")?;
            json(&code.encoder)?
        }
        ExportKind::Logical => {
            format_or(cli, Format::Json, &[Format::Json], "export --what logical")?;
            json(&code.logical_columns)?
        }
        ExportKind::Layout => {
            format_or(cli, Format::Json, &[Format::Json], "export --what layout")?;
            json(&code.layout)?
        }
    };
    Ok(Output { body, summary: None, pass: true })
}
