//! Batch command-line driver. Each subcommand reads a configuration file
//! and writes one CSV or JSON table; all real work happens in the library.
//!
//! Exit codes: 0 on success, 2 on a configuration error, 3 on a numeric
//! failure.

use clap::{Args, Parser, Subcommand};
use eckart::centrifugal::ApproximationScheme;
use eckart::config::{self, ConfigError, OutputFormat, RunConfig};
use eckart::degeneracy::{self, AlphaLaw};
use eckart::model::EckartModel;
use eckart::numerov::{spectrum_table, CentrifugalMode};
use eckart::report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eckart",
    about = "Bound states of the D-dimensional Eckart potential under centrifugal-term approximations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy table: one row per state, one column per scheme.
    Energies(IoArgs),
    /// Pointwise centrifugal-approximation errors on the configured grids.
    ErrorProfile(IoArgs),
    /// Closed forms against the independent shooting-method eigensolver.
    CompareOracle(IoArgs),
    /// Zero-energy and degeneracy points in the range parameter.
    Degeneracy(IoArgs),
    /// Wavefunction normalization integrals and node counts.
    NormalizeCheck(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    /// Configuration file (INI-like, or JSON with a .json extension).
    #[arg(long)]
    config: PathBuf,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

enum RunError {
    Config(ConfigError),
    Numeric(String),
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e)
    }
}

fn built_schemes(
    cfg: &RunConfig,
    model: &EckartModel,
) -> Result<Vec<(String, ApproximationScheme)>, RunError> {
    cfg.schemes
        .iter()
        .map(|s| {
            s.spec
                .build(model)
                .map(|built| (s.name.clone(), built))
                .map_err(|e| RunError::Config(ConfigError::Invalid(e.to_string())))
        })
        .collect()
}

fn run_energies(cfg: &RunConfig) -> Result<String, RunError> {
    let model = cfg.model.build()?;
    let schemes = built_schemes(cfg, &model)?;
    let states = cfg.states.expand()?;
    let table = report::build_energies_table(&model, &schemes, &states);
    Ok(report::render_energies(&table, cfg.output.format, cfg.output.precision))
}

fn run_error_profile(cfg: &RunConfig) -> Result<String, RunError> {
    let model = cfg.model.build()?;
    let schemes = built_schemes(cfg, &model)?;
    let profile = cfg
        .profile
        .as_ref()
        .ok_or(RunError::Config(ConfigError::Invalid("missing [profile] section".into())))?;
    let grids = vec![
        ("near_origin".to_string(), profile.near_origin.points()?),
        ("near_r0".to_string(), profile.near_r0.points()?),
    ];
    let table = report::build_profile_table(&model, &schemes, profile.ell, profile.d, &grids)
        .map_err(|e| RunError::Numeric(e.to_string()))?;
    Ok(match cfg.output.format {
        OutputFormat::Csv => report::profile_csv(&table),
        OutputFormat::Json => report::profile_json(&table),
    })
}

fn run_compare_oracle(cfg: &RunConfig) -> Result<String, RunError> {
    let model = cfg.model.build()?;
    let schemes = built_schemes(cfg, &model)?;
    let states = cfg.states.expand()?;
    let solver = cfg.solver.build(&model);
    let mut modes = vec![("exact".to_string(), CentrifugalMode::Exact)];
    for (name, scheme) in &schemes {
        modes.push((name.clone(), CentrifugalMode::Approx(*scheme)));
    }
    let table = spectrum_table(&model, &modes, &states, &solver);
    Ok(match cfg.output.format {
        OutputFormat::Csv => report::comparison_csv(&table, cfg.output.precision),
        OutputFormat::Json => report::comparison_json(&table),
    })
}

fn run_degeneracy(cfg: &RunConfig) -> Result<String, RunError> {
    let model = cfg.model.build()?;
    let section = cfg
        .degeneracy
        .as_ref()
        .ok_or(RunError::Config(ConfigError::Invalid("missing [degeneracy] section".into())))?;
    let law: AlphaLaw = match &section.alpha {
        Some(spec) => spec.law()?,
        None => AlphaLaw::InverseA,
    };
    let beta = section.beta.unwrap_or(model.beta);
    let constants = model.constants;
    let mut rows = Vec::new();
    for state in &section.zero_energy {
        match degeneracy::zero_energy_a(
            state.n_r,
            state.ell,
            state.d,
            &law,
            beta,
            &constants,
            section.bracket,
        ) {
            Ok(a0) => {
                let residual = degeneracy::zero_energy_residual(
                    state.n_r, state.ell, state.d, &law, beta, &constants, a0,
                );
                let energy_at_root =
                    EckartModel::with_constants(law.value(a0), beta, a0, constants)
                        .ok()
                        .and_then(|m| {
                            eckart::spectrum::energy_formal(
                                &m,
                                &eckart::centrifugal::make_f1(),
                                state,
                            )
                            .ok()
                        })
                        .unwrap_or(f64::NAN);
                rows.push(report::DegeneracyRow::ZeroEnergy {
                    state: *state,
                    a0,
                    residual,
                    energy_at_root,
                });
            }
            Err(e) => rows.push(report::DegeneracyRow::ZeroEnergyFailed {
                state: *state,
                note: match e {
                    degeneracy::DegeneracyError::NoSignChange { .. } => "no_sign_change".into(),
                    other => other.to_string(),
                },
            }),
        }
    }
    let entries = degeneracy::scan_degeneracies(
        &section.pairs,
        &law,
        beta,
        &constants,
        section.bracket,
        section.n_samples,
    )
    .map_err(|e| RunError::Numeric(e.to_string()))?;
    rows.extend(report::scan_entries_to_rows(&entries, beta, &law, &constants));
    // pairs whose scan produced no root at all are reported explicitly
    for pair in &section.pairs {
        let seen = entries.iter().any(|e| e.pair == *pair);
        if !seen {
            rows.push(report::DegeneracyRow::PairFlagged {
                pair: *pair,
                note: "no_sign_change".into(),
            });
        }
    }
    Ok(match cfg.output.format {
        OutputFormat::Csv => report::degeneracy_csv(&rows),
        OutputFormat::Json => report::degeneracy_json(&rows),
    })
}

fn run_normalize_check(cfg: &RunConfig) -> Result<String, RunError> {
    let model = cfg.model.build()?;
    let schemes = built_schemes(cfg, &model)?;
    let states = cfg.states.expand()?;
    let r_max = cfg.solver.build(&model).r_max;
    let rows = report::build_normalize_rows(&model, &schemes, &states, r_max);
    Ok(match cfg.output.format {
        OutputFormat::Csv => report::normalize_csv(&rows),
        OutputFormat::Json => report::normalize_json(&rows),
    })
}

fn dispatch(command: &Command) -> Result<(), (RunError, PathBuf)> {
    let (args, runner): (&IoArgs, fn(&RunConfig) -> Result<String, RunError>) = match command {
        Command::Energies(a) => (a, run_energies),
        Command::ErrorProfile(a) => (a, run_error_profile),
        Command::CompareOracle(a) => (a, run_compare_oracle),
        Command::Degeneracy(a) => (a, run_degeneracy),
        Command::NormalizeCheck(a) => (a, run_normalize_check),
    };
    let cfg = config::load(&args.config).map_err(|e| (RunError::Config(e), args.out.clone()))?;
    let rendered = runner(&cfg).map_err(|e| (e, args.out.clone()))?;
    std::fs::write(&args.out, rendered)
        .map_err(|e| (RunError::Numeric(format!("cannot write output: {e}")), args.out.clone()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err((RunError::Config(e), _)) => {
            eprintln!("config error: {e}");
            ExitCode::from(2)
        }
        Err((RunError::Numeric(e), _)) => {
            eprintln!("numeric failure: {e}");
            ExitCode::from(3)
        }
    }
}
