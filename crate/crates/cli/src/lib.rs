//! Command-line surface over the `bentwave` library: mode tables, potential
//! profiles, phase-shift predictions, the anticentrifugal force, and a
//! closed-form-vs-oracle validation report.
//!
//! Exit codes: 0 success, 1 domain or I/O error, 2 validation failure, 64
//! usage error. Output is deterministic: a given invocation produces
//! byte-identical bytes (no timestamps, no machine metadata), so reports
//! can be diffed in CI. Everything works against standard output unless
//! `--output` names a file.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bentwave::oracle::{fd_eigenvalues, fd_eigenvalues_extrapolated, log_log_slope, FdGrid};
use bentwave::{
    anticentrifugal_force, bohm_profile, effective_profile, energy_closed_form, min_phase_shift,
    momentum_shift, solve_exact_modes, Error as CoreError, ModeIndex, PotentialProfile,
    RadialSolution, ShiftVariant, UnitSystem, WaveguideGeometry,
};

/// Validation thresholds are constants, not flags, so "pass" means the same
/// thing in every pipeline.
const VALIDATE_REL_TOL: f64 = 1e-6;
const VALIDATE_SLOPE: f64 = 2.0;
const VALIDATE_SLOPE_TOL: f64 = 0.05;

const EXIT_OK: i32 = 0;
const EXIT_ERROR: i32 = 1;
const EXIT_VALIDATION: i32 = 2;
const EXIT_USAGE: i32 = 64;

#[derive(Parser)]
#[command(
    name = "bentwave",
    version,
    args_override_self = true,
    about = "Bound modes, potentials, phase shifts, and forces of a circularly bent rectangular waveguide",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate bound transverse modes with exact and closed-form energies
    Modes(ModesArgs),
    /// Sample the effective or Bohm potential across the guide width
    Potential(PotentialArgs),
    /// Minimal interference phase shift for a de Broglie wavelength
    PhaseShift(PhaseShiftArgs),
    /// Mean anticentrifugal force kappa^3 / 2
    Force(ForceArgs),
    /// Cross-check closed-form and exact energies against the FD oracle
    Validate(ValidateArgs),
}

#[derive(Args)]
struct GeometryArgs {
    /// Bend radius R
    #[arg(long, allow_negative_numbers = true)]
    radius: f64,
    /// Cross-section side a (must satisfy a < 2R)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    width: f64,
}

impl GeometryArgs {
    fn build(&self) -> Result<WaveguideGeometry, CoreError> {
        WaveguideGeometry::new(self.radius, self.width)
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Planck constant; converts energies out of spectral units (with --mass)
    #[arg(long, requires = "mass", allow_negative_numbers = true)]
    hbar: Option<f64>,
    /// Particle mass; converts energies out of spectral units (with --hbar)
    #[arg(long, requires = "hbar", allow_negative_numbers = true)]
    mass: Option<f64>,
}

impl OutputArgs {
    fn units(&self) -> Result<UnitSystem, CoreError> {
        match (self.hbar, self.mass) {
            (Some(h), Some(m)) => UnitSystem::from_hbar_mass(h, m),
            _ => Ok(UnitSystem::spectral()),
        }
    }
}

#[derive(Args)]
struct ModesArgs {
    #[command(flatten)]
    geometry: GeometryArgs,
    /// Largest z quantum number n
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    nmax: u32,
    /// Radial modes per n
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PotentialArgs {
    #[command(flatten)]
    geometry: GeometryArgs,
    /// Which potential to sample
    #[arg(long, value_enum, default_value_t = Kind::Effective)]
    kind: Kind,
    /// z quantum number n of the mode
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    nmax: u32,
    /// Radial index w of the Bohm mode (the lower zero index is fixed at 1)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    /// Sample points across the width
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..))]
    samples: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PhaseShiftArgs {
    /// Bend radius R
    #[arg(long, allow_negative_numbers = true)]
    radius: f64,
    /// de Broglie wavelength
    #[arg(long, allow_negative_numbers = true)]
    wavelength: f64,
    /// Shift formula
    #[arg(long, value_enum, default_value_t = Variant::Paper)]
    variant: Variant,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ForceArgs {
    /// Bend radius R
    #[arg(long, allow_negative_numbers = true)]
    radius: f64,
    /// Cross-section side a; the force does not depend on it (default R/2)
    #[arg(long, allow_negative_numbers = true)]
    width: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    geometry: GeometryArgs,
    /// Interior grid points of the FD oracle (odd)
    #[arg(long, default_value_t = 8001, value_parser = clap::value_parser!(u32).range(3..))]
    grid: u32,
    /// Radial modes to check
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Paper,
    Corrected,
    Exact,
}

impl From<Variant> for ShiftVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Paper => ShiftVariant::Paper,
            Variant::Corrected => ShiftVariant::Corrected,
            Variant::Exact => ShiftVariant::Exact,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Effective,
    Bohm,
}

enum AppError {
    Core(CoreError),
    Io(std::io::Error),
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        AppError::Core(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> Self {
        AppError::Io(std::io::Error::other(e))
    }
}

/// Parses `argv` and executes one subcommand, returning the process exit
/// code instead of exiting, which keeps the whole surface testable in-process.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Modes(args) => cmd_modes(&args),
        Command::Potential(args) => cmd_potential(&args),
        Command::PhaseShift(args) => cmd_phase_shift(&args),
        Command::Force(args) => cmd_force(&args),
        Command::Validate(args) => cmd_validate(&args),
    };
    match result {
        Ok(code) => code,
        Err(AppError::Core(e)) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
        Err(AppError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

/// 12 significant digits, the CSV/table formatting contract.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn write_out(path: Option<&PathBuf>, text: &str) -> Result<(), AppError> {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct Report<'a, C: Serialize, R: Serialize, S: Serialize> {
    config: &'a C,
    results: &'a [R],
    summary: &'a S,
}

fn to_json<C: Serialize, R: Serialize, S: Serialize>(
    config: &C,
    results: &[R],
    summary: &S,
) -> Result<String, AppError> {
    let mut text = serde_json::to_string_pretty(&Report {
        config,
        results,
        summary,
    })?;
    text.push('\n');
    Ok(text)
}

fn csv_document(header: &str, rows: &[String]) -> String {
    let mut text = String::with_capacity(rows.len() * 64 + header.len() + 1);
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(row);
        text.push('\n');
    }
    text
}

/// Table output: metadata as `#` comments, then space-aligned columns that
/// gnuplot can consume directly.
fn table_document(meta: &[(&str, String)], header: &[&str], rows: &[Vec<String>]) -> String {
    let mut text = String::new();
    for (key, value) in meta {
        let _ = writeln!(text, "# {key} {value}");
    }
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([h.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut line = String::from("#");
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(line, " {h:>w$}");
    }
    text.push_str(line.trim_end());
    text.push('\n');
    for row in rows {
        let mut line = String::from(" ");
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(line, " {cell:>w$}");
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

#[derive(Serialize)]
struct ModesConfig {
    command: &'static str,
    radius: f64,
    width: f64,
    nmax: u32,
    count: u32,
    energy_scale: f64,
}

#[derive(Serialize)]
struct ModeRow {
    n: u32,
    l: u32,
    w: u32,
    epsilon: f64,
    energy_exact: f64,
    energy_closed_form: f64,
    rel_gap: f64,
}

#[derive(Serialize)]
struct ModesSummary {
    modes: usize,
    max_rel_gap: f64,
}

fn cmd_modes(args: &ModesArgs) -> Result<i32, AppError> {
    let geom = args.geometry.build()?;
    let units = args.out.units()?;
    let scale = units.energy_scale();
    let mut solutions: Vec<(RadialSolution, f64)> = Vec::new();
    for n in 1..=args.nmax {
        for sol in solve_exact_modes(&geom, n, args.count)? {
            let closed = energy_closed_form(&geom, sol.mode)?;
            solutions.push((sol, closed));
        }
    }
    solutions.sort_by(|a, b| a.0.energy.total_cmp(&b.0.energy));
    let rows: Vec<ModeRow> = solutions
        .iter()
        .map(|(sol, closed)| ModeRow {
            n: sol.mode.n(),
            l: sol.mode.l(),
            w: sol.mode.w(),
            epsilon: sol.epsilon,
            energy_exact: scale * sol.energy,
            energy_closed_form: scale * closed,
            rel_gap: ((closed - sol.energy) / sol.energy).abs(),
        })
        .collect();
    let summary = ModesSummary {
        modes: rows.len(),
        max_rel_gap: rows.iter().map(|r| r.rel_gap).fold(0.0, f64::max),
    };
    let config = ModesConfig {
        command: "modes",
        radius: geom.bend_radius(),
        width: geom.width(),
        nmax: args.nmax,
        count: args.count,
        energy_scale: scale,
    };
    let text = match args.out.format {
        Format::Json => to_json(&config, &rows, &summary)?,
        Format::Csv => {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{},{}",
                        r.n,
                        r.l,
                        r.w,
                        sig12(r.epsilon),
                        sig12(r.energy_exact),
                        sig12(r.energy_closed_form),
                        sig12(r.rel_gap)
                    )
                })
                .collect();
            csv_document(
                "n,l,w,epsilon,energy_exact,energy_closed_form,rel_gap",
                &lines,
            )
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.l.to_string(),
                        r.w.to_string(),
                        sig12(r.epsilon),
                        sig12(r.energy_exact),
                        sig12(r.energy_closed_form),
                        sig12(r.rel_gap),
                    ]
                })
                .collect();
            table_document(
                &[
                    ("command", "modes".into()),
                    ("radius", sig12(geom.bend_radius())),
                    ("width", sig12(geom.width())),
                    ("energy_scale", sig12(scale)),
                ],
                &[
                    "n",
                    "l",
                    "w",
                    "epsilon",
                    "energy_exact",
                    "energy_closed_form",
                    "rel_gap",
                ],
                &cells,
            )
        }
    };
    write_out(args.out.output.as_ref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PotentialConfig {
    command: &'static str,
    radius: f64,
    width: f64,
    kind: &'static str,
    n: u32,
    w: u32,
    samples: u32,
    energy_scale: f64,
}

#[derive(Serialize)]
struct PotentialRow {
    xi: f64,
    value: f64,
}

#[derive(Serialize)]
struct PotentialSummary {
    samples: usize,
    min: f64,
    max: f64,
}

fn cmd_potential(args: &PotentialArgs) -> Result<i32, AppError> {
    let geom = args.geometry.build()?;
    let units = args.out.units()?;
    let scale = units.energy_scale();
    let samples = args.samples as usize;
    let profile: PotentialProfile = match args.kind {
        Kind::Effective => effective_profile(&geom, args.nmax, samples)?,
        Kind::Bohm => bohm_profile(&geom, ModeIndex::new(args.nmax, 1, args.count)?, samples)?,
    };
    let kind = profile.kind().label();
    let rows: Vec<PotentialRow> = profile
        .xi_samples()
        .iter()
        .zip(profile.values())
        .map(|(&xi, &v)| PotentialRow {
            xi,
            value: scale * v,
        })
        .collect();
    let summary = PotentialSummary {
        samples: rows.len(),
        min: rows.iter().map(|r| r.value).fold(f64::INFINITY, f64::min),
        max: rows
            .iter()
            .map(|r| r.value)
            .fold(f64::NEG_INFINITY, f64::max),
    };
    let config = PotentialConfig {
        command: "potential",
        radius: geom.bend_radius(),
        width: geom.width(),
        kind,
        n: args.nmax,
        w: args.count,
        samples: args.samples,
        energy_scale: scale,
    };
    let text = match args.out.format {
        Format::Json => to_json(&config, &rows, &summary)?,
        Format::Csv => {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| format!("{},{},{kind}", sig12(r.xi), sig12(r.value)))
                .collect();
            csv_document("xi,value,kind", &lines)
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![sig12(r.xi), sig12(r.value)])
                .collect();
            table_document(
                &[
                    ("command", "potential".into()),
                    ("kind", kind.into()),
                    ("radius", sig12(geom.bend_radius())),
                    ("width", sig12(geom.width())),
                    ("energy_scale", sig12(scale)),
                ],
                &["xi", "value"],
                &cells,
            )
        }
    };
    write_out(args.out.output.as_ref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PhaseConfig {
    command: &'static str,
    radius: f64,
    wavelength: f64,
    variant: &'static str,
    momentum_scale: f64,
}

#[derive(Serialize)]
struct PhaseRow {
    kappa: f64,
    delta_p: f64,
    delta_phi: f64,
}

#[derive(Serialize)]
struct PhaseSummary {
    delta_phi: f64,
}

fn cmd_phase_shift(args: &PhaseShiftArgs) -> Result<i32, AppError> {
    if !args.radius.is_finite() || args.radius <= 0.0 {
        return Err(CoreError::Domain(format!(
            "bend radius must be finite and positive, got {}",
            args.radius
        ))
        .into());
    }
    args.out.units()?;
    // Phase is dimensionless; the momentum shift scales by hbar alone.
    let momentum_scale = args.out.hbar.unwrap_or(1.0);
    let kappa = 1.0 / args.radius;
    let variant: ShiftVariant = args.variant.into();
    let delta_phi = min_phase_shift(args.wavelength, kappa, variant)?;
    let p = 2.0 * std::f64::consts::PI / args.wavelength;
    let delta_p = momentum_shift(p * p, kappa * kappa / 4.0, variant)?;
    let rows = [PhaseRow {
        kappa,
        delta_p: momentum_scale * delta_p,
        delta_phi,
    }];
    let summary = PhaseSummary { delta_phi };
    let config = PhaseConfig {
        command: "phase-shift",
        radius: args.radius,
        wavelength: args.wavelength,
        variant: variant.label(),
        momentum_scale,
    };
    let text = match args.out.format {
        Format::Json => to_json(&config, &rows, &summary)?,
        Format::Csv => csv_document(
            "kappa,delta_p,delta_phi",
            &[format!(
                "{},{},{}",
                sig12(rows[0].kappa),
                sig12(rows[0].delta_p),
                sig12(rows[0].delta_phi)
            )],
        ),
        Format::Table => table_document(
            &[
                ("command", "phase-shift".into()),
                ("radius", sig12(args.radius)),
                ("wavelength", sig12(args.wavelength)),
                ("variant", variant.label().into()),
            ],
            &["kappa", "delta_p", "delta_phi"],
            &[vec![
                sig12(rows[0].kappa),
                sig12(rows[0].delta_p),
                sig12(rows[0].delta_phi),
            ]],
        ),
    };
    write_out(args.out.output.as_ref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ForceConfig {
    command: &'static str,
    radius: f64,
    width: f64,
    energy_scale: f64,
}

#[derive(Serialize)]
struct ForceRow {
    radius: f64,
    kappa: f64,
    force: f64,
}

#[derive(Serialize)]
struct ForceSummary {
    force: f64,
}

fn cmd_force(args: &ForceArgs) -> Result<i32, AppError> {
    let width = args.width.unwrap_or(args.radius / 2.0);
    let geom = WaveguideGeometry::new(args.radius, width)?;
    let units = args.out.units()?;
    let force = units.energy_scale() * anticentrifugal_force(&geom);
    let rows = [ForceRow {
        radius: geom.bend_radius(),
        kappa: geom.curvature(),
        force,
    }];
    let summary = ForceSummary { force };
    let config = ForceConfig {
        command: "force",
        radius: geom.bend_radius(),
        width: geom.width(),
        energy_scale: units.energy_scale(),
    };
    let text = match args.out.format {
        Format::Json => to_json(&config, &rows, &summary)?,
        Format::Csv => csv_document(
            "radius,kappa,force",
            &[format!(
                "{},{},{}",
                sig12(rows[0].radius),
                sig12(rows[0].kappa),
                sig12(rows[0].force)
            )],
        ),
        Format::Table => table_document(
            &[("command", "force".into())],
            &["radius", "kappa", "force"],
            &[vec![
                sig12(rows[0].radius),
                sig12(rows[0].kappa),
                sig12(rows[0].force),
            ]],
        ),
    };
    write_out(args.out.output.as_ref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ValidateConfig {
    command: &'static str,
    radius: f64,
    width: f64,
    grid: u32,
    count: u32,
    rel_tol: f64,
    slope_target: f64,
    slope_tol: f64,
}

#[derive(Serialize)]
struct ValidateRow {
    k: u32,
    energy_closed_form: f64,
    energy_exact: f64,
    energy_fd: f64,
    energy_extrapolated: f64,
    rel_closed_vs_exact: f64,
    rel_exact_vs_oracle: f64,
}

#[derive(Serialize)]
struct ValidateSummary {
    max_rel_exact_vs_oracle: f64,
    slope: f64,
    pass: bool,
}

fn odd_points(points: u32, divisor: u32) -> u32 {
    let mut p = points / divisor;
    if p.is_multiple_of(2) {
        p += 1;
    }
    p.max(3)
}

fn cmd_validate(args: &ValidateArgs) -> Result<i32, AppError> {
    let geom = args.geometry.build()?;
    args.out.units()?;
    let count = args.count as usize;
    let grid = FdGrid::new(args.grid as usize)?;
    let exact = solve_exact_modes(&geom, 1, args.count)?;
    let fd = fd_eigenvalues(&geom, 1, grid, count)?;
    let fdx = fd_eigenvalues_extrapolated(&geom, 1, grid, count)?;

    let mut rows = Vec::with_capacity(count);
    for (k, sol) in exact.iter().enumerate() {
        let closed = energy_closed_form(&geom, sol.mode)?;
        rows.push(ValidateRow {
            k: sol.mode.w(),
            energy_closed_form: closed,
            energy_exact: sol.energy,
            energy_fd: fd[k],
            energy_extrapolated: fdx[k],
            rel_closed_vs_exact: ((closed - sol.energy) / sol.energy).abs(),
            rel_exact_vs_oracle: ((fdx[k] - sol.energy) / sol.energy).abs(),
        });
    }
    let max_rel = rows
        .iter()
        .map(|r| r.rel_exact_vs_oracle)
        .fold(0.0, f64::max);

    // Convergence-order check on the ground state: errors against the
    // extrapolated reference over a 1:2:4:8 grid ladder must fall with
    // slope 2.
    let reference = fdx[0];
    let mut points = Vec::with_capacity(4);
    for divisor in [8u32, 4, 2, 1] {
        let sub = FdGrid::new(odd_points(args.grid, divisor) as usize)?;
        let e = fd_eigenvalues(&geom, 1, sub, 1)?[0];
        points.push((sub.spacing(&geom), (e - reference).abs()));
    }
    let slope = log_log_slope(&points)?;
    let pass = max_rel < VALIDATE_REL_TOL && (slope - VALIDATE_SLOPE).abs() <= VALIDATE_SLOPE_TOL;

    let summary = ValidateSummary {
        max_rel_exact_vs_oracle: max_rel,
        slope,
        pass,
    };
    let config = ValidateConfig {
        command: "validate",
        radius: geom.bend_radius(),
        width: geom.width(),
        grid: args.grid,
        count: args.count,
        rel_tol: VALIDATE_REL_TOL,
        slope_target: VALIDATE_SLOPE,
        slope_tol: VALIDATE_SLOPE_TOL,
    };
    let text = match args.out.format {
        Format::Json => to_json(&config, &rows, &summary)?,
        Format::Csv => {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{},{}",
                        r.k,
                        sig12(r.energy_closed_form),
                        sig12(r.energy_exact),
                        sig12(r.energy_fd),
                        sig12(r.energy_extrapolated),
                        sig12(r.rel_closed_vs_exact),
                        sig12(r.rel_exact_vs_oracle)
                    )
                })
                .collect();
            csv_document(
                "k,energy_closed_form,energy_exact,energy_fd,energy_extrapolated,rel_closed_vs_exact,rel_exact_vs_oracle",
                &lines,
            )
        }
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        sig12(r.energy_closed_form),
                        sig12(r.energy_exact),
                        sig12(r.energy_fd),
                        sig12(r.energy_extrapolated),
                        sig12(r.rel_closed_vs_exact),
                        sig12(r.rel_exact_vs_oracle),
                    ]
                })
                .collect();
            let mut text = table_document(
                &[
                    ("command", "validate".into()),
                    ("radius", sig12(geom.bend_radius())),
                    ("width", sig12(geom.width())),
                    ("grid", args.grid.to_string()),
                    ("rel_tol", sig12(VALIDATE_REL_TOL)),
                ],
                &[
                    "k",
                    "closed_form",
                    "exact",
                    "fd",
                    "extrapolated",
                    "rel_closed_vs_exact",
                    "rel_exact_vs_oracle",
                ],
                &cells,
            );
            let _ = writeln!(text, "# max_rel_exact_vs_oracle {}", sig12(max_rel));
            let _ = writeln!(text, "# slope {}", sig12(slope));
            let _ = writeln!(text, "# pass {pass}");
            text
        }
    };
    write_out(args.out.output.as_ref(), &text)?;
    Ok(if pass { EXIT_OK } else { EXIT_VALIDATION })
}
