//! The `cosmocap` command line: scenario loading, text and JSON rendering,
//! and exit codes (0 ok, 2 bad input, 3 physically invalid input).

mod render;
pub mod scenario;

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use cosmocap_core::baseline::{fleet_bits, fleet_ops, historical_fleet_ops, FleetSpec};
use cosmocap_core::bounds::max_ops_per_sec;
use cosmocap_core::constants::ProfileFile;
use cosmocap_core::cosmo::{
    self, full_report, CapacityReport, DensityMode, InflationBounds, MatterEpoch, Scenario,
};
use cosmocap_core::dimq::DEFAULT_TOLERANCE_DECADES;
use cosmocap_core::largenum::{identities, LargeNumberReport};
use cosmocap_core::{ConstantsProfile, Dimension, LogInterval, Quantity};
use serde::{Deserialize, Serialize};

pub use scenario::{resolve_profile, GrowthLog10, ScenarioFile};

/// Version of every JSON document the CLI writes.
pub const SCHEMA_VERSION: u32 = 1;

/// Relative tolerance for the exact large-number identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Engine(#[from] cosmocap_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use cosmocap_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Engine(
                E::Profile(_)
                | E::UnknownConstant(_)
                | E::InvalidSpecies { .. }
                | E::InvalidHalfwidth(_),
            ) => 2,
            CliError::Engine(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cosmocap",
    version,
    about = "Physical limits on computation, from laptops to the observable universe"
)]
struct Cli {
    /// Constants profile: "paper", "codata" or a profile file. Overrides the
    /// scenario's own choice.
    #[arg(long, global = true, value_name = "NAME|PATH")]
    profile: Option<String>,

    /// How far, in powers of ten, a headline value may sit from its
    /// order-of-magnitude anchor.
    #[arg(long, global = true, value_name = "DECADES", default_value_t = DEFAULT_TOLERANCE_DECADES)]
    tolerance_decades: f64,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full capacity report for a scenario file.
    Report {
        /// Scenario file (JSON).
        #[arg(required_unless_present = "default_paper")]
        path: Option<PathBuf>,
        /// Use the built-in present-day scenario instead of a file.
        #[arg(long, conflicts_with = "path")]
        default_paper: bool,
    },
    /// A single epoch in isolation.
    Epoch {
        #[command(subcommand)]
        epoch: Epoch,
    },
    /// The Eddington-Dirac large numbers and their relation to the
    /// operation count.
    LargeNumbers(Cosmology),
    /// Constants of a profile and the Planck-scale quantities they imply.
    Constants {
        /// Profile name or file; defaults to --profile, then "paper".
        #[arg(value_name = "PROFILE")]
        name: Option<String>,
    },
    /// Conventional computers, for comparison.
    Manmade(Fleet),
}

#[derive(Debug, Args)]
struct Cosmology {
    /// Mass density in kg/m^3.
    #[arg(long, allow_negative_numbers = true)]
    rho: Option<f64>,
    /// Age of the universe in years.
    #[arg(long, allow_negative_numbers = true, default_value_t = 1e10)]
    age_years: f64,
}

#[derive(Debug, Subcommand)]
enum Epoch {
    /// Matter-dominated horizon at the given density and age.
    Matter(Cosmology),
    /// Radiation-dominated comoving volume between t0 and t1.
    #[command(group(ArgGroup::new("energy").required(true).args(["e1", "e1_ratio"])))]
    Radiation {
        /// Energy at t1, in joules.
        #[arg(long = "E1", allow_negative_numbers = true)]
        e1: Option<f64>,
        /// Energy at t1 in units of πħ/2 J, so that 2E/πħ = 1 op/s.
        #[arg(long = "E1-ratio", allow_negative_numbers = true)]
        e1_ratio: Option<f64>,
        /// Later time, in seconds.
        #[arg(long, allow_negative_numbers = true)]
        t1: f64,
        /// Earlier time, in seconds; 0 means the big bang.
        #[arg(long, allow_negative_numbers = true)]
        t0: f64,
    },
    /// Inflationary horizon at Hubble rate H, or total ops for a horizon
    /// growth factor.
    #[command(group(ArgGroup::new("input").required(true).multiple(true).args(["hubble", "growth"])))]
    Inflation {
        /// Hubble rate during inflation, in 1/s.
        #[arg(long = "H", allow_negative_numbers = true)]
        hubble: Option<f64>,
        /// Horizon growth factor as log10 CENTER:HALFWIDTH, e.g. 10:6.
        #[arg(long, value_name = "CENTER:HALFWIDTH", allow_hyphen_values = true)]
        growth: Option<String>,
    },
}

#[derive(Debug, Args)]
struct Fleet {
    /// Number of machines.
    #[arg(long)]
    computers: Option<f64>,
    /// Clock rate in Hz.
    #[arg(long)]
    clock_hz: Option<f64>,
    /// Elementary operations per clock cycle.
    #[arg(long)]
    ops_per_cycle: Option<f64>,
    /// Running time in seconds.
    #[arg(long)]
    seconds: Option<f64>,
    /// Memory per machine in bits.
    #[arg(long)]
    bits_per_computer: Option<f64>,
}

/// Full JSON report: the effective scenario plus every computed value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub scenario: ScenarioFile,
    #[serde(flatten)]
    pub report: CapacityReport,
}

/// Runs the CLI on `args` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    if !(cli.tolerance_decades.is_finite() && cli.tolerance_decades >= 0.0) {
        return Err(CliError::Usage(format!(
            "--tolerance-decades must be a non-negative number, got {}",
            cli.tolerance_decades
        )));
    }
    match &cli.command {
        Command::Report {
            path,
            default_paper,
        } => cmd_report(cli, path.as_ref(), *default_paper),
        Command::Epoch { epoch } => cmd_epoch(cli, epoch),
        Command::LargeNumbers(args) => cmd_large_numbers(cli, args),
        Command::Constants { name } => cmd_constants(cli, name.as_deref()),
        Command::Manmade(args) => cmd_manmade(cli, args),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn profile(cli: &Cli) -> Result<ConstantsProfile, CliError> {
    resolve_profile(cli.profile.as_deref().unwrap_or("paper"), None)
}

/// Loads the scenario file (or the built-in one) with any --profile override
/// applied, returning both the effective file and the engine scenario.
pub fn load_scenario(
    path: Option<&std::path::Path>,
    profile_override: Option<&str>,
) -> Result<(ScenarioFile, Scenario), CliError> {
    let (mut file, base_dir) = match path {
        Some(p) => (ScenarioFile::read(p)?, p.parent().map(|d| d.to_path_buf())),
        None => (ScenarioFile::default(), None),
    };
    let mut base = base_dir;
    if let Some(name) = profile_override {
        file.constants_profile = name.to_string();
        base = None;
    }
    let scenario = file.to_scenario(base.as_deref())?;
    Ok((file, scenario))
}

struct Row<'a> {
    label: &'a str,
    value: String,
}

fn rows(title: &str, rows: &[Row<'_>]) -> String {
    let width = rows
        .iter()
        .map(|r| r.label.chars().count())
        .max()
        .unwrap_or(0);
    let mut s = format!("{title}\n");
    for r in rows {
        let pad = width - r.label.chars().count();
        s.push_str(&format!("  {}{}  {}\n", r.label, " ".repeat(pad), r.value));
    }
    s
}

fn row<'a>(label: &'a str, value: impl Into<String>) -> Row<'a> {
    Row {
        label,
        value: value.into(),
    }
}

/// `≈ 10^120  yes` or `≈ 10^120  no, 1.52 decades off`.
fn anchored(q: &Quantity, anchor: i32, tolerance: f64) -> String {
    let off = (q.log10() - f64::from(anchor)).abs();
    let verdict = if q.is_positive() && off <= tolerance {
        "within tolerance".to_string()
    } else {
        format!("{off:.2} decades off")
    };
    format!("{:<11} ≈ 10^{anchor:<4} {verdict}", render::number(q))
}

fn cmd_report(cli: &Cli, path: Option<&PathBuf>, default_paper: bool) -> Result<String, CliError> {
    let path = if default_paper {
        None
    } else {
        path.map(PathBuf::as_path)
    };
    let (file, scenario) = load_scenario(path, cli.profile.as_deref())?;
    let report = full_report(&scenario)?;
    if cli.json {
        return to_json(&ReportDocument {
            schema: SCHEMA_VERSION,
            scenario: file,
            report,
        });
    }
    Ok(render_report(
        &file,
        &scenario,
        &report,
        cli.tolerance_decades,
    ))
}

fn render_report(file: &ScenarioFile, scenario: &Scenario, r: &CapacityReport, tol: f64) -> String {
    let species: Vec<String> = scenario
        .species
        .species()
        .iter()
        .map(|s| format!("{} ({})", s.name(), s.n_eff()))
        .collect();
    let mut out = format!("Computational capacity report, profile {}\n\n", r.profile);
    out += &rows(
        "Scenario",
        &[
            row("density", render::quantity(&scenario.rho)),
            row(
                "age",
                format!(
                    "{} ({} years)",
                    render::quantity(&scenario.age),
                    render::trimmed_sci(file.age_years, 12)
                ),
            ),
            row("Hubble rate", render::quantity(&r.matter.hubble_rate)),
            row("radiation species (n_eff)", species.join(", ")),
            row(
                "gravitational energy",
                if scenario.include_gravity {
                    "counted"
                } else {
                    "not counted"
                },
            ),
        ],
    );
    out += "\n";
    out += &rows(
        &format!("Headline values (tolerance {tol} decades)"),
        &[
            row(
                "ops, matter in horizon: rho c^5 t^4 / hbar",
                anchored(&r.ops_matter, 120, tol),
            ),
            row(
                "ops, critical density: (t / t_P)^2",
                anchored(&r.ops_critical, 120, tol),
            ),
            row(
                "bits, thermalized matter",
                anchored(&r.bits_matter, 90, tol),
            ),
            row(
                "bits, horizon area / l_P^2",
                anchored(&r.bits_holographic, 120, tol),
            ),
            row(
                "Eddington-Dirac alpha",
                anchored(&r.large_numbers.alpha, 40, tol),
            ),
            row(
                "Eddington-Dirac beta",
                anchored(&r.large_numbers.beta, 40, tol),
            ),
            row(
                "Eddington-Dirac gamma",
                anchored(&r.large_numbers.gamma, 40, tol),
            ),
            row(
                "conventional computers, ops",
                anchored(&r.fleet.ops, 31, tol),
            ),
            row(
                "conventional computers, bits",
                anchored(&r.fleet.bits, 21, tol),
            ),
        ],
    );
    out += "\n";
    out += &rows(
        "Matter-dominated epoch",
        &[
            row(
                "critical density 3H^2 / 8 pi G",
                render::quantity(&r.matter.critical_density_exact),
            ),
            row(
                "critical density 1 / G t^2",
                render::quantity(&r.matter.critical_density_approx),
            ),
            row(
                "horizon volume (c t)^3",
                render::quantity(&r.matter.horizon_volume),
            ),
            row(
                "energy in horizon rho c^2 V",
                render::quantity(&r.matter.energy),
            ),
            row(
                "ops, gravitational energy applied",
                render::number(&r.ops_with_gravity),
            ),
            row(
                "blackbody temperature",
                render::quantity(&r.blackbody_temperature),
            ),
            row("entropy in horizon", render::quantity(&r.entropy_total)),
        ],
    );
    out += "\n";
    let gut = if r.radiation.bits.above_gut_threshold {
        "above grand unification scale; species table unreliable"
    } else {
        "below grand unification scale"
    };
    out += &rows(
        "Radiation",
        &[
            row(
                "matter-radiation transition",
                render::quantity(&r.radiation.transition_time),
            ),
            row(
                "D = (pi^2 / 30) sum n_eff",
                render::number(&r.radiation.d_factor),
            ),
            row(
                "bits, 4E / (3 ln2 k_B T)",
                render::number(&r.radiation.bits.bits),
            ),
            row("thermal energy scale", gut),
        ],
    );
    out += "\n";
    let l = &r.system_limits;
    let bek = if l.bekenstein.below_bound {
        "below 1/2pi: violates the Bekenstein bound"
    } else {
        "satisfies the Bekenstein bound"
    };
    out += &rows(
        "Horizon as a single system",
        &[
            row("max ops/s 2E / (pi hbar)", render::quantity(&l.ops_per_sec)),
            row("min flip time", render::quantity(&l.min_flip_time)),
            row("max bits S / (k_B ln2)", render::number(&l.bits)),
            row("max I/O c S / (k_B R)", render::quantity(&l.io_rate)),
            row(
                "Bekenstein ratio k_B E R / (hbar c S)",
                format!("{} ({bek})", render::number(&l.bekenstein.ratio)),
            ),
            row(
                "holographic bits R^2 / l_P^2",
                render::number(&l.holographic_bits),
            ),
        ],
    );
    out += "\n";
    let n = &r.large_numbers;
    let [p1, p2, p3] = n.residual_passes(IDENTITY_TOLERANCE);
    out += &rows(
        "Large numbers",
        &[
            row(
                "alpha beta / gamma^2, 1 at critical density",
                residual(&n.r1, p1),
            ),
            row("beta gamma^2 vs ops", residual(&n.r2, p2)),
            row("alpha beta^2 vs (t / t_P)^2", residual(&n.r3, p3)),
            row(
                "ops / (beta gamma^2)",
                render::four_digits(n.ops_over_beta_gamma2.value()),
            ),
        ],
    );
    out += "\n";
    let i = &r.inflation;
    out += &rows(
        "Inflation",
        &[
            row("horizon growth", render::interval(&i.growth)),
            row("total ops = growth^2", render::interval(&i.total_ops)),
            row("total bits", render::interval(&i.total_bits)),
            row(
                "ops per Hubble time at scenario H",
                render::number(&i.at_scenario_hubble.ops_per_hubble_time),
            ),
        ],
    );
    out += "\n";
    out += &rows(
        "Conventional computers",
        &[
            row("ops over the period", render::number(&r.fleet.ops)),
            row("ops, all time", render::number(&r.fleet.historical_ops)),
            row("bits", render::number(&r.fleet.bits)),
        ],
    );
    out
}

/// A residual with enough digits to show its deviation from 1.
fn residual(r: &Quantity, pass: bool) -> String {
    let value = if r.log10().abs() < 15.0 {
        format!("{:.12}", r.value())
    } else {
        render::number(r)
    };
    format!("{value}  {}", if pass { "PASS" } else { "FAIL" })
}

#[derive(Serialize)]
struct MatterDocument {
    schema: u32,
    epoch: &'static str,
    profile: String,
    rho: Quantity,
    age: Quantity,
    matter: MatterEpoch,
    ops_matter: Quantity,
    ops_critical: Quantity,
}

#[derive(Serialize)]
struct RadiationDocument {
    schema: u32,
    epoch: &'static str,
    profile: String,
    e1: Quantity,
    t1: Quantity,
    t0: Quantity,
    ops: Quantity,
    ops_at_constant_energy: Quantity,
    /// Absent for t0 = 0, where the energy diverges.
    energy_at_t0: Option<Quantity>,
}

#[derive(Serialize)]
struct InflationDocument {
    schema: u32,
    epoch: &'static str,
    profile: String,
    growth: Option<LogInterval>,
    total_ops: Option<LogInterval>,
    total_bits: Option<LogInterval>,
    hubble_rate: Option<Quantity>,
    horizon: Option<InflationBounds>,
}

fn cosmology(p: &ConstantsProfile, args: &Cosmology) -> Result<(Quantity, Quantity), CliError> {
    let age = p.years(args.age_years)?;
    let rho = match args.rho {
        Some(rho) => Quantity::new(rho, Dimension::MASS_DENSITY)?,
        None => Quantity::new(1e-27, Dimension::MASS_DENSITY)?,
    };
    Ok((rho, age))
}

fn cmd_epoch(cli: &Cli, epoch: &Epoch) -> Result<String, CliError> {
    let p = profile(cli)?;
    match epoch {
        Epoch::Matter(args) => {
            let (rho, age) = cosmology(&p, args)?;
            let hubble = age.recip()?;
            let doc = MatterDocument {
                schema: SCHEMA_VERSION,
                epoch: "matter",
                profile: p.name().to_string(),
                rho,
                age,
                matter: MatterEpoch {
                    hubble_rate: hubble,
                    critical_density_exact: cosmo::critical_density(
                        &p,
                        hubble,
                        DensityMode::Exact,
                    )?,
                    critical_density_approx: cosmo::critical_density(
                        &p,
                        hubble,
                        DensityMode::Approx,
                    )?,
                    horizon_volume: cosmo::horizon_volume(&p, age)?,
                    energy: rho * p.c().powi(2)? * cosmo::horizon_volume(&p, age)?,
                },
                ops_matter: cosmo::ops_matter(&p, rho, age)?,
                ops_critical: cosmo::ops_critical(&p, age)?,
            };
            if cli.json {
                return to_json(&doc);
            }
            Ok(rows(
                &format!("Matter-dominated epoch, profile {}", doc.profile),
                &[
                    row("density", render::quantity(&rho)),
                    row("age", render::quantity(&age)),
                    row("Hubble rate 1/t", render::quantity(&hubble)),
                    row(
                        "critical density 3H^2 / 8 pi G",
                        render::quantity(&doc.matter.critical_density_exact),
                    ),
                    row(
                        "critical density 1 / G t^2",
                        render::quantity(&doc.matter.critical_density_approx),
                    ),
                    row(
                        "horizon volume (c t)^3",
                        render::quantity(&doc.matter.horizon_volume),
                    ),
                    row(
                        "energy in horizon rho c^2 V",
                        render::quantity(&doc.matter.energy),
                    ),
                    row(
                        "ops, matter in horizon: rho c^5 t^4 / hbar",
                        render::number(&doc.ops_matter),
                    ),
                    row(
                        "ops, critical density: (t / t_P)^2",
                        render::number(&doc.ops_critical),
                    ),
                ],
            ))
        }
        Epoch::Radiation {
            e1,
            e1_ratio,
            t1,
            t0,
        } => {
            let e1 = match (e1, e1_ratio) {
                (Some(joules), _) => Quantity::new(*joules, Dimension::ENERGY)?,
                (None, Some(ratio)) => {
                    p.hbar() * (PI / 2.0) * Quantity::new(*ratio, Dimension::RATE)?
                }
                (None, None) => {
                    return Err(CliError::Usage("radiation needs --E1 or --E1-ratio".into()))
                }
            };
            let t1 = Quantity::new(*t1, Dimension::TIME)?;
            let t0 = Quantity::new(*t0, Dimension::TIME)?;
            let ops = cosmo::ops_radiation(&p, e1, t1, t0)?;
            let energy_at_t0 = if t0.is_zero() {
                None
            } else {
                Some(cosmo::radiation_energy_at(e1, t1, t0)?)
            };
            let doc = RadiationDocument {
                schema: SCHEMA_VERSION,
                epoch: "radiation",
                profile: p.name().to_string(),
                e1,
                t1,
                t0,
                ops,
                ops_at_constant_energy: max_ops_per_sec(&p, e1)? * t1.try_sub(t0)?,
                energy_at_t0,
            };
            if cli.json {
                return to_json(&doc);
            }
            Ok(rows(
                &format!("Radiation-dominated epoch, profile {}", doc.profile),
                &[
                    row("energy at t1", render::quantity(&e1)),
                    row("t1", render::quantity(&t1)),
                    row("t0", render::quantity(&t0)),
                    row(
                        "energy at t0 E1 (t1/t0)^1/2",
                        energy_at_t0.map_or("unbounded".to_string(), |e| render::quantity(&e)),
                    ),
                    row(
                        "ops (4 E1 / pi hbar)(t1 - sqrt(t1 t0))",
                        render::number(&ops),
                    ),
                    row(
                        "ops at constant energy E1",
                        render::number(&doc.ops_at_constant_energy),
                    ),
                ],
            ))
        }
        Epoch::Inflation { hubble, growth } => {
            let growth = growth.as_deref().map(parse_growth).transpose()?;
            let total_ops = growth
                .as_ref()
                .map(cosmo::inflation_total_ops)
                .transpose()?;
            let hubble = hubble
                .map(|h| Quantity::new(h, Dimension::RATE))
                .transpose()?;
            let horizon = hubble.map(|h| cosmo::inflation_bounds(&p, h)).transpose()?;
            let doc = InflationDocument {
                schema: SCHEMA_VERSION,
                epoch: "inflation",
                profile: p.name().to_string(),
                growth,
                total_ops,
                total_bits: total_ops,
                hubble_rate: hubble,
                horizon,
            };
            if cli.json {
                return to_json(&doc);
            }
            let mut r = Vec::new();
            if let (Some(g), Some(t)) = (&growth, &total_ops) {
                r.push(row("horizon growth", render::interval(g)));
                r.push(row("total ops = growth^2", render::interval(t)));
                r.push(row("total bits", render::interval(t)));
            }
            if let (Some(h), Some(b)) = (&hubble, &horizon) {
                r.push(row("Hubble rate", render::quantity(h)));
                r.push(row(
                    "ops/s in horizon c/H",
                    render::quantity(&b.ops_per_sec),
                ));
                r.push(row(
                    "ops per Hubble time",
                    render::number(&b.ops_per_hubble_time),
                ));
                r.push(row(
                    "bits, horizon area / l_P^2",
                    render::number(&b.bits_horizon),
                ));
            }
            Ok(rows(
                &format!("Inflationary epoch, profile {}", doc.profile),
                &r,
            ))
        }
    }
}

/// Parses `CENTER:HALFWIDTH` in decades.
fn parse_growth(s: &str) -> Result<LogInterval, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--growth expects CENTER:HALFWIDTH in decades, got {s:?}"
        ))
    };
    let (c, h) = s.split_once(':').ok_or_else(bad)?;
    let c: f64 = c.trim().parse().map_err(|_| bad())?;
    let h: f64 = h.trim().parse().map_err(|_| bad())?;
    LogInterval::new(c, h, Dimension::DIMENSIONLESS)
        .map_err(|e| CliError::Usage(format!("--growth: {e}")))
}

#[derive(Serialize)]
struct LargeNumbersDocument {
    schema: u32,
    profile: String,
    rho: Quantity,
    age: Quantity,
    #[serde(flatten)]
    report: LargeNumberReport,
    identity_tolerance: f64,
    r1_pass: bool,
    r2_pass: bool,
    r3_pass: bool,
}

fn cmd_large_numbers(cli: &Cli, args: &Cosmology) -> Result<String, CliError> {
    let p = profile(cli)?;
    let age = p.years(args.age_years)?;
    let rho = match args.rho {
        Some(rho) => Quantity::new(rho, Dimension::MASS_DENSITY)?,
        None => cosmo::critical_density(&p, age.recip()?, DensityMode::Approx)?,
    };
    let report = identities(&p, rho, age)?;
    let [r1_pass, r2_pass, r3_pass] = report.residual_passes(IDENTITY_TOLERANCE);
    if cli.json {
        return to_json(&LargeNumbersDocument {
            schema: SCHEMA_VERSION,
            profile: p.name().to_string(),
            rho,
            age,
            report,
            identity_tolerance: IDENTITY_TOLERANCE,
            r1_pass,
            r2_pass,
            r3_pass,
        });
    }
    let tol = cli.tolerance_decades;
    Ok(rows(
        &format!(
            "Large numbers, profile {}, density {}, age {}",
            p.name(),
            render::quantity(&rho),
            render::quantity(&age)
        ),
        &[
            row(
                "alpha = e^2 / (G m_e m_p)",
                anchored(&report.alpha, 40, tol),
            ),
            row(
                "beta = c t / (e^2 / m_e c^2)",
                anchored(&report.beta, 40, tol),
            ),
            row(
                "gamma = sqrt(rho (c t)^3 / m_p)",
                anchored(&report.gamma, 40, tol),
            ),
            row("r1 = alpha beta / gamma^2", residual(&report.r1, r1_pass)),
            row(
                "r2 = beta gamma^2 / (ops (hbar c / e^2)(m_e / m_p))",
                residual(&report.r2, r2_pass),
            ),
            row(
                "r3 = alpha beta^2 / ((t / t_P)^2 (hbar c / e^2)(m_e / m_p))",
                residual(&report.r3, r3_pass),
            ),
            row(
                "ops / (beta gamma^2)",
                render::four_digits(report.ops_over_beta_gamma2.value()),
            ),
        ],
    ))
}

#[derive(Serialize)]
struct ConstantsDocument {
    schema: u32,
    profile: ProfileFile,
    planck_time: Quantity,
    planck_length: Quantity,
    fine_structure_inverse: Quantity,
    mass_ratio: Quantity,
}

fn cmd_constants(cli: &Cli, name: Option<&str>) -> Result<String, CliError> {
    let name = name.or(cli.profile.as_deref()).unwrap_or("paper");
    let p = resolve_profile(name, None)?;
    let doc = ConstantsDocument {
        schema: SCHEMA_VERSION,
        profile: p.to_file(),
        planck_time: p.planck_time(),
        planck_length: p.planck_length(),
        fine_structure_inverse: p.fine_structure_inverse(),
        mass_ratio: p.mass_ratio(),
    };
    if cli.json {
        return to_json(&doc);
    }
    let stored: Vec<(String, String)> = p
        .iter()
        .map(|(id, q)| {
            let u = render::unit(q.dims());
            (
                id.name().to_string(),
                format!("{} {u}", render::trimmed_sci(q.value(), 12))
                    .trim_end()
                    .to_string(),
            )
        })
        .collect();
    let stored_rows: Vec<Row<'_>> = stored.iter().map(|(k, v)| row(k, v.clone())).collect();
    let mut out = rows(&format!("Constants, profile {}", p.name()), &stored_rows);
    out += "\n";
    out += &rows(
        "Derived",
        &[
            row(
                "Planck time sqrt(G hbar / c^5)",
                format!("{:.3e} s", doc.planck_time.value()),
            ),
            row(
                "Planck length sqrt(hbar G / c^3)",
                format!("{:.3e} m", doc.planck_length.value()),
            ),
            row(
                "hbar c / e^2",
                render::four_digits(doc.fine_structure_inverse.value()),
            ),
            row("m_p / m_e", render::four_digits(doc.mass_ratio.value())),
        ],
    );
    Ok(out)
}

#[derive(Serialize)]
struct FleetDocument {
    schema: u32,
    fleet: FleetSpec,
    ops: Quantity,
    historical_ops: Quantity,
    bits: Quantity,
}

fn cmd_manmade(cli: &Cli, args: &Fleet) -> Result<String, CliError> {
    let d = FleetSpec::default();
    let fleet = FleetSpec {
        n_computers: args.computers.unwrap_or(d.n_computers),
        clock_rate_hz: args.clock_hz.unwrap_or(d.clock_rate_hz),
        ops_per_cycle: args.ops_per_cycle.unwrap_or(d.ops_per_cycle),
        duration_s: args.seconds.unwrap_or(d.duration_s),
        bits_per_computer: args.bits_per_computer.unwrap_or(d.bits_per_computer),
    };
    let doc = FleetDocument {
        schema: SCHEMA_VERSION,
        fleet,
        ops: fleet_ops(&fleet)?,
        historical_ops: historical_fleet_ops(&fleet)?,
        bits: fleet_bits(&fleet)?,
    };
    if cli.json {
        return to_json(&doc);
    }
    let f = |v: f64| render::trimmed_sci(v, 12);
    Ok(rows(
        "Conventional computers",
        &[
            row("machines", f(fleet.n_computers)),
            row("clock rate", format!("{} Hz", f(fleet.clock_rate_hz))),
            row("ops per cycle", f(fleet.ops_per_cycle)),
            row("duration", format!("{} s", f(fleet.duration_s))),
            row("bits per machine", f(fleet.bits_per_computer)),
            row("ops over the period", render::number(&doc.ops)),
            row("ops, all time", render::number(&doc.historical_ops)),
            row("bits", render::number(&doc.bits)),
        ],
    ))
}
