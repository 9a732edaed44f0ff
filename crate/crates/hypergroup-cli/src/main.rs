//! Command-line driver for finite hypergroup harmonic analysis.
//!
//! Subcommands mirror the library layers: `validate`/`haar`/`make` for the
//! hypergroups themselves, `cosets` for the double-coset structure,
//! `dual`/`fourier`/`ifourier`/`plancherel` for the spectral side, and
//! `sobolev`/`embed-report` for the weighted norms and the embedding
//! inequalities.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on
//! structural errors (unreadable files, schema violations, invalid
//! hypergroups, non-Gelfand pairs), 64 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use hypergroups::format;
use hypergroups::sampling::{random_biinvariant, seeded_rng};
use hypergroups::sobolev::{
    self, check_l2_embedding, check_modulus_bound, check_monotone_embedding,
    check_supnorm_embedding, EmbeddingReport, GammaPreset, SobolevParams,
};
use hypergroups::spectral::{self, compute_dual, DualData};
use hypergroups::{FiniteHypergroup, GelfandPair, PointFunction, ValidationReport};

#[derive(Parser)]
#[command(
    name = "hypergroup",
    about = "Harmonic analysis on finite hypergroups and Gelfand pairs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Numeric tolerance for validation and residual checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Project non-bi-invariant inputs through f ↦ f^♮ instead of erroring
    #[arg(long, global = true)]
    project: bool,

    /// Seed for randomized trials
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check a definition file against the hypergroup axioms
    Validate { file: PathBuf },
    /// Solve the left-invariance system for the Haar weights
    Haar { file: PathBuf },
    /// Emit a canonical hypergroup (cyclic N | hamming D | s3 | s3-classes |
    /// deformed-z3 T | group TABLE.json | classes TABLE.json)
    Make {
        family: String,
        params: Vec<String>,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Double cosets of K and the quotient hypergroup
    Cosets {
        file: PathBuf,
        /// Subhypergroup, as comma-separated labels
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
    },
    /// Characters and Plancherel weights of the dual
    Dual {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
    },
    /// Spherical Fourier transform of a function file
    Fourier {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
        /// Function file (label-keyed, values real or [re, im])
        #[arg(long = "f")]
        function: PathBuf,
    },
    /// Inverse transform of a coefficient file (array, one entry per character)
    Ifourier {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
        #[arg(long = "f")]
        function: PathBuf,
    },
    /// Plancherel-identity residuals over seeded random bi-invariant functions
    Plancherel {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Sobolev norm of a function
    Sobolev {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
        /// Gamma weights: zero | index | spectral-gap | FILE.json
        #[arg(long)]
        gamma: String,
        #[arg(long = "s")]
        s: f64,
        #[arg(long = "f")]
        function: PathBuf,
    },
    /// Embedding-inequality report over seeded random trials
    EmbedReport {
        file: PathBuf,
        #[arg(long = "k", value_delimiter = ',', required = true)]
        k: Vec<String>,
        #[arg(long)]
        gamma: String,
        #[arg(long = "s")]
        s: f64,
        /// Also check the monotone embedding H^s ↪ H^sigma
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Slack absorbing floating-point noise, scaled by the right-hand side
        #[arg(long, default_value_t = 1e-12)]
        slack: f64,
    },
}

/// Structural failures map to exit code 2.
struct Structural(String);

impl<E: std::fmt::Display> From<E> for Structural {
    fn from(e: E) -> Self {
        Structural(e.to_string())
    }
}

enum Outcome {
    Pass,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(Structural(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Structural> {
    match &cli.command {
        Command::Validate { file } => validate_cmd(cli, file),
        Command::Haar { file } => haar_cmd(cli, file),
        Command::Make { family, params, output } => make_cmd(family, params, output.as_deref()),
        Command::Cosets { file, k } => cosets_cmd(cli, file, k),
        Command::Dual { file, k } => dual_cmd(cli, file, k),
        Command::Fourier { file, k, function } => fourier_cmd(cli, file, k, function),
        Command::Ifourier { file, k, function } => ifourier_cmd(cli, file, k, function),
        Command::Plancherel { file, k, trials } => plancherel_cmd(cli, file, k, *trials),
        Command::Sobolev { file, k, gamma, s, function } => {
            sobolev_cmd(cli, file, k, gamma, *s, function)
        }
        Command::EmbedReport { file, k, gamma, s, sigma, trials, slack } => {
            embed_report_cmd(cli, file, k, gamma, *s, *sigma, *trials, *slack)
        }
    }
}

fn read(path: &Path) -> Result<String, Structural> {
    fs::read_to_string(path).map_err(|e| Structural(format!("{}: {e}", path.display())))
}

/// Load and fully validate a hypergroup; failures are structural here
/// because the caller needs a valid hypergroup to do anything else.
fn load(path: &Path, tol: f64) -> Result<FiniteHypergroup, Structural> {
    Ok(format::parse(&read(path)?, tol)?)
}

fn load_pair(path: &Path, k: &[String], tol: f64) -> Result<GelfandPair, Structural> {
    let base = load(path, tol)?;
    Ok(GelfandPair::from_labels(base, k, tol)?)
}

fn load_dual(pair: &GelfandPair, tol: f64) -> Result<DualData, Structural> {
    Ok(compute_dual(pair, tol)?)
}

fn complex_json(v: &Complex64) -> Value {
    json!([v.re, v.im])
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable report"));
}

fn report_json(report: &ValidationReport) -> Value {
    json!({
        "pass": report.pass(),
        "tol": report.tol,
        "checks": serde_json::to_value(&report.checks).expect("checks serialize"),
    })
}

fn print_report(report: &ValidationReport, format: Format) {
    match format {
        Format::Json => emit(&report_json(report)),
        Format::Csv => {
            println!("check,pass,residual");
            for c in &report.checks {
                println!("{},{},{}", c.name, c.pass, c.residual);
            }
        }
    }
}

fn validate_cmd(cli: &Cli, file: &Path) -> Result<Outcome, Structural> {
    let data = format::parse_data(&read(file)?)?;
    let report = data.validate_axioms(cli.tol)?;
    print_report(&report, cli.format);
    Ok(if report.pass() { Outcome::Pass } else { Outcome::CheckFailed })
}

fn haar_cmd(cli: &Cli, file: &Path) -> Result<Outcome, Structural> {
    let mut data = format::parse_data(&read(file)?)?;
    data.haar = None;
    let report = data.validate_axioms(cli.tol)?;
    if !report.pass() {
        print_report(&report, cli.format);
        return Ok(Outcome::CheckFailed);
    }
    let weights = data.solve_haar()?;
    let labels = data.labels.clone();
    data.haar = Some(weights.clone());
    let h = data.build(cli.tol)?;
    let residual = h.haar_residual(&weights);
    match cli.format {
        Format::Json => {
            let map: Map<String, Value> = labels
                .iter()
                .zip(&weights)
                .map(|(l, w)| (l.clone(), json!(w)))
                .collect();
            emit(&json!({ "weights": map, "residual": residual, "pass": residual <= cli.tol }));
        }
        Format::Csv => {
            println!("label,weight");
            for (l, w) in labels.iter().zip(&weights) {
                println!("{l},{w}");
            }
        }
    }
    Ok(if residual <= cli.tol { Outcome::Pass } else { Outcome::CheckFailed })
}

fn make_cmd(family: &str, params: &[String], output: Option<&Path>) -> Result<Outcome, Structural> {
    let arg = |i: usize| -> Result<&String, Structural> {
        params
            .get(i)
            .ok_or_else(|| Structural(format!("family `{family}` needs a parameter")))
    };
    let h = match family {
        "cyclic" => hypergroups::constructors::cyclic(arg(0)?.parse().map_err(Structural::from)?)?,
        "hamming" => {
            hypergroups::constructors::hamming(arg(0)?.parse().map_err(Structural::from)?)?
        }
        "s3" => hypergroups::constructors::s3()?,
        "s3-classes" => hypergroups::constructors::s3_classes()?,
        "deformed-z3" => {
            hypergroups::constructors::deformed_cyclic3(arg(0)?.parse().map_err(Structural::from)?)?
        }
        "group" | "classes" => {
            let (labels, table) = format::parse_cayley(&read(Path::new(arg(0)?))?)?;
            if family == "group" {
                hypergroups::constructors::from_cayley_table(labels, &table)?
            } else {
                hypergroups::constructors::conjugacy_class_hypergroup(labels, &table)?
            }
        }
        other => return Err(Structural(format!("unknown family `{other}`"))),
    };
    let text = format::serialize(&h);
    match output {
        Some(path) => fs::write(path, text + "\n").map_err(Structural::from)?,
        None => println!("{text}"),
    }
    Ok(Outcome::Pass)
}

fn block_labels(pair: &GelfandPair) -> Vec<Vec<String>> {
    pair.partition()
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| pair.base().label(x).to_string()).collect())
        .collect()
}

fn cosets_cmd(cli: &Cli, file: &Path, k: &[String]) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let quotient: Value = serde_json::from_str(&format::serialize(pair.quotient()))
        .expect("serialized quotient reparses");
    emit(&json!({
        "k": k,
        "blocks": block_labels(&pair),
        "gelfand": pair.is_gelfand(cli.tol),
        "commutativity_residual": pair.commutativity_residual(),
        "quotient": quotient,
    }));
    Ok(Outcome::Pass)
}

fn dual_cmd(cli: &Cli, file: &Path, k: &[String]) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    match cli.format {
        Format::Json => {
            let characters: Vec<Value> = dual
                .characters
                .iter()
                .map(|phi| Value::Array(phi.values.iter().map(complex_json).collect()))
                .collect();
            emit(&json!({
                "blocks": block_labels(&pair),
                "characters": characters,
                "plancherel": dual.plancherel,
            }));
        }
        Format::Csv => {
            let m = dual.len();
            let header: Vec<String> = (0..m)
                .flat_map(|b| [format!("block{b}_re"), format!("block{b}_im")])
                .collect();
            println!("character,{},plancherel", header.join(","));
            for (i, phi) in dual.characters.iter().enumerate() {
                let cells: Vec<String> = phi
                    .values
                    .iter()
                    .flat_map(|v| [v.re.to_string(), v.im.to_string()])
                    .collect();
                println!("{i},{},{}", cells.join(","), dual.plancherel[i]);
            }
        }
    }
    Ok(Outcome::Pass)
}

fn transform(
    cli: &Cli,
    pair: &GelfandPair,
    dual: &DualData,
    f: &PointFunction,
) -> Result<spectral::FourierCoefficients, Structural> {
    if cli.project {
        Ok(spectral::fourier_projected(pair, dual, f)?)
    } else {
        Ok(spectral::fourier(pair, dual, f)?)
    }
}

fn fourier_cmd(
    cli: &Cli,
    file: &Path,
    k: &[String],
    function: &Path,
) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    let f = format::parse_function(&read(function)?, pair.base())?;
    let coeffs = transform(cli, &pair, &dual, &f)?;
    emit(&json!({
        "coefficients": Value::Array(coeffs.values.iter().map(complex_json).collect()),
    }));
    Ok(Outcome::Pass)
}

fn ifourier_cmd(
    cli: &Cli,
    file: &Path,
    k: &[String],
    function: &Path,
) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    let values = format::parse_coefficients(&read(function)?, dual.len())?;
    let coeffs = spectral::FourierCoefficients { values };
    let f = spectral::inverse_fourier(&pair, &dual, &coeffs)?;
    let map: Map<String, Value> = pair
        .base()
        .labels()
        .iter()
        .zip(&f.values)
        .map(|(l, v)| (l.clone(), complex_json(v)))
        .collect();
    emit(&json!({ "values": map }));
    Ok(Outcome::Pass)
}

fn plancherel_cmd(
    cli: &Cli,
    file: &Path,
    k: &[String],
    trials: usize,
) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    let mut rng = seeded_rng(cli.seed);
    let mut worst = 0.0f64;
    let mut all_pass = true;
    for trial in 0..trials {
        let f = random_biinvariant(&pair, &mut rng);
        let residual = spectral::plancherel_residual(&pair, &dual, &f);
        let pass = residual <= cli.tol;
        all_pass &= pass;
        worst = worst.max(residual);
        match cli.format {
            Format::Json => emit(&json!({ "trial": trial, "residual": residual, "pass": pass })),
            Format::Csv => {
                if trial == 0 {
                    println!("trial,residual,pass");
                }
                println!("{trial},{residual},{pass}");
            }
        }
    }
    if cli.format == Format::Json {
        emit(&json!({ "trials": trials, "max_residual": worst, "pass": all_pass }));
    }
    Ok(if all_pass { Outcome::Pass } else { Outcome::CheckFailed })
}

fn resolve_gamma(spec: &str, dual: &DualData) -> Result<Vec<f64>, Structural> {
    if let Some(preset) = GammaPreset::parse(spec) {
        return Ok(sobolev::gamma_preset(dual, preset));
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Structural(format!(
            "--gamma must be zero | index | spectral-gap | an existing file, got `{spec}`"
        )));
    }
    Ok(format::parse_gamma(&read(path)?, dual.len())?)
}

fn sobolev_cmd(
    cli: &Cli,
    file: &Path,
    k: &[String],
    gamma: &str,
    s: f64,
    function: &Path,
) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    let gamma = resolve_gamma(gamma, &dual)?;
    let params = SobolevParams::new(s, gamma.clone()).map_err(Structural::from)?;
    let mut f = format::parse_function(&read(function)?, pair.base())?;
    if cli.project {
        f = pair.project(&f)?;
    }
    let norm = sobolev::sobolev_norm(&pair, &dual, &f, &params)?;
    emit(&json!({
        "s": s,
        "gamma": gamma,
        "sobolev_norm": norm,
        "l2_norm": pair.base().l2_norm(&f),
    }));
    Ok(Outcome::Pass)
}

fn embedding_json(report: &EmbeddingReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn embedding_csv_row(trial: usize, check: &str, report: &EmbeddingReport) -> String {
    format!(
        "{trial},{check},{},{},{},{},{}",
        report.lhs,
        report.rhs,
        report.constant.map(|c| c.to_string()).unwrap_or_default(),
        report.margin,
        report.pass
    )
}

#[allow(clippy::too_many_arguments)]
fn embed_report_cmd(
    cli: &Cli,
    file: &Path,
    k: &[String],
    gamma: &str,
    s: f64,
    sigma: Option<f64>,
    trials: usize,
    slack: f64,
) -> Result<Outcome, Structural> {
    let pair = load_pair(file, k, cli.tol)?;
    let dual = load_dual(&pair, cli.tol)?;
    let gamma = resolve_gamma(gamma, &dual)?;
    let params = SobolevParams::new(s, gamma.clone()).map_err(Structural::from)?;
    let mut rng = seeded_rng(cli.seed);
    let mut all_pass = true;
    if cli.format == Format::Csv {
        println!("trial,check,lhs,rhs,constant,margin,pass");
    }
    for trial in 0..trials {
        let f = random_biinvariant(&pair, &mut rng);
        let l2 = check_l2_embedding(&pair, &dual, &f, &params, slack).map_err(Structural::from)?;
        let sup =
            check_supnorm_embedding(&pair, &dual, &f, &params, slack).map_err(Structural::from)?;
        let osc =
            check_modulus_bound(&pair, &dual, &f, &params, slack).map_err(Structural::from)?;
        let monotone = match sigma {
            Some(sigma) => Some(
                check_monotone_embedding(&pair, &dual, &f, s, sigma, &gamma, slack)
                    .map_err(Structural::from)?,
            ),
            None => None,
        };
        let mut pass = l2.pass && sup.pass && osc.pass;
        if let Some(m) = &monotone {
            pass &= m.pass;
        }
        all_pass &= pass;
        match cli.format {
            Format::Json => {
                let mut obj = Map::new();
                obj.insert("trial".into(), json!(trial));
                obj.insert("l2".into(), embedding_json(&l2));
                if let Some(m) = &monotone {
                    obj.insert("monotone".into(), embedding_json(m));
                }
                obj.insert("supnorm".into(), embedding_json(&sup));
                obj.insert("modulus".into(), embedding_json(&osc));
                obj.insert("pass".into(), json!(pass));
                emit(&Value::Object(obj));
            }
            Format::Csv => {
                println!("{}", embedding_csv_row(trial, "l2", &l2));
                if let Some(m) = &monotone {
                    println!("{}", embedding_csv_row(trial, "monotone", m));
                }
                println!("{}", embedding_csv_row(trial, "supnorm", &sup));
                println!("{}", embedding_csv_row(trial, "modulus", &osc));
            }
        }
    }
    Ok(if all_pass { Outcome::Pass } else { Outcome::CheckFailed })
}
