//! `genuslab` command-line front end.
//!
//! All commands are pure compute-and-print. Exit codes: 0 on success (or
//! when every check passes), 1 when a verification fails, 2 on usage
//! errors and refused inputs.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use genuslab_core::closedform::{self, stahl_estimate_bouquet};
use genuslab_core::distributions;
use genuslab_core::oracle::{self, Ceilings};
use genuslab_core::powerseries::{self, TruncatedSeries};
use genuslab_core::rational::{self, to_fraction_string, Rational};
use genuslab_core::{Error, Family, MethodRegistry};

pub mod report;

use report::{strictly_decreasing_abs, AsymReport, AsymRow, DistRow, Format, Monotone, ReportRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "genuslab", version, about = "Exact genus distributions and average genus of bouquets and dipoles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus distribution, total and average genus of one family member.
    Dist(DistArgs),
    /// Exact average genus for n = 1..=n-max with asymptotic residuals.
    Avg(AvgArgs),
    /// Compare recurrence distributions with exhaustive enumeration.
    Verify(VerifyArgs),
    /// Check the generating-function ODE and its closed-form expansion.
    OdeCheck(OdeArgs),
    /// Residuals against the asymptotic estimates over a ladder of n.
    Asym(AsymArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AvgArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    /// A registered method name, or `all` to run every method and check
    /// that they agree.
    #[arg(long, default_value = "closed")]
    pub method: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = rational::DEFAULT_PRECISION)]
    pub precision: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub parallelism: u64,
    /// Perturbs the recurrence distribution of n-max before comparing.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct OdeArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(5..))]
    pub order: u64,
    /// Perturbs one coefficient of the sequence before checking.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long, value_delimiter = ',', default_value = "10,100,1000,10000")]
    pub ladder: Vec<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = rational::DEFAULT_PRECISION)]
    pub precision: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Dist(a) => cmd_dist(&a, out),
        Command::Avg(a) => cmd_avg(&a, out, err),
        Command::Verify(a) => cmd_verify(&a, Ceilings::from_env(), out, err),
        Command::OdeCheck(a) => cmd_ode_check(&a, out),
        Command::Asym(a) => cmd_asym(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
        Err(CliError::Refused(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Io(io::Error),
    Refused(Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Refused(e)
    }
}

type CmdResult = Result<i32, CliError>;

fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    out.write_all(b"\n")
}

pub fn dist_row(family: Family, n: u64) -> Result<DistRow, Error> {
    let d = distributions::distribution(family, n)?;
    Ok(DistRow {
        family: family.to_string(),
        n,
        distribution: d.coeffs().iter().map(ToString::to_string).collect(),
        total: d.total().to_string(),
        avg_exact: to_fraction_string(&d.average_genus()),
    })
}

pub fn cmd_dist(args: &DistArgs, out: &mut dyn Write) -> CmdResult {
    let row = dist_row(args.family, args.n)?;
    match args.format {
        Format::Json => write_json(out, &row)?,
        Format::Csv => {
            writeln!(out, "{}", DistRow::CSV_HEADER)?;
            writeln!(out, "{}", row.to_csv())?;
        }
    }
    Ok(EXIT_OK)
}

fn avg_row(
    family: Family,
    n: u64,
    method: &str,
    value: Result<Rational, Error>,
    precision: usize,
) -> ReportRow {
    let mut row = ReportRow {
        family: family.to_string(),
        n,
        method: method.to_string(),
        distribution: None,
        total: None,
        avg_exact: None,
        avg_decimal: None,
        estimate: None,
        residual: None,
        error: None,
    };
    match value {
        Ok(exact) => {
            let report = closedform::AvgGenusReport::new(family, n, exact, precision);
            row.avg_exact = Some(to_fraction_string(&report.exact));
            row.avg_decimal = Some(report.decimal);
            row.estimate = Some(report.asymptotic_estimate);
            row.residual = Some(report.residual);
            if method == "distribution" {
                row.total = Some(distributions::expected_total(family, n).to_string());
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

pub fn cmd_avg(args: &AvgArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let registry = MethodRegistry::with_defaults();
    let methods = if args.method == "all" {
        registry.iter().collect::<Vec<_>>()
    } else {
        vec![registry.get(&args.method)?]
    };
    let tables: Vec<_> = methods.iter().map(|m| m.table(args.family, args.n_max)).collect();

    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for i in 0..args.n_max as usize {
        let n = i as u64 + 1;
        let ok: Vec<&Rational> = tables.iter().filter_map(|t| t[i].as_ref().ok()).collect();
        if ok.windows(2).any(|w| w[0] != w[1]) {
            disagreements.push(n);
        }
        for (m, t) in methods.iter().zip(&tables) {
            rows.push(avg_row(args.family, n, m.name(), t[i].clone(), args.precision));
        }
    }
    match args.format {
        Format::Json => write_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "{}", ReportRow::CSV_HEADER)?;
            for r in &rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
    }
    if disagreements.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "methods disagree at n = {disagreements:?}")?;
        Ok(EXIT_FAILED)
    }
}

/// First coefficient where two distributions differ, as `(genus, left, right)`.
fn first_mismatch(
    left: &distributions::GenusDistribution,
    right: &distributions::GenusDistribution,
) -> Option<(usize, String, String)> {
    let len = left.coeffs().len().max(right.coeffs().len());
    (0..len as i64)
        .map(|k| (k as usize, left.coeff(k), right.coeff(k)))
        .find(|(_, a, b)| a != b)
        .map(|(k, a, b)| (k, a.to_string(), b.to_string()))
}

pub fn cmd_verify(args: &VerifyArgs, ceilings: Ceilings, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let family = args.family;
    let ceiling = ceilings.for_family(family);
    if args.n_max > ceiling {
        return Err(Error::AboveCeiling { family, n: args.n_max, ceiling }.into());
    }
    let table = match family {
        Family::Bouquet => distributions::bouquet_table(args.n_max)?,
        Family::Dipole => distributions::dipole_table(args.n_max)?,
    };
    let mut all_pass = true;
    for d in table {
        let n = d.n();
        let d = if args.inject_fault && n == args.n_max { perturb(&d) } else { d };
        let census = oracle::oracle_distribution_with(family, n, args.parallelism as usize, ceilings)?;
        let truth = census.to_distribution()?;
        match first_mismatch(&d, &truth) {
            None => writeln!(out, "{family} n={n} PASS")?,
            Some((k, got, want)) => {
                all_pass = false;
                writeln!(out, "{family} n={n} FAIL at genus {k}: recurrence {got}, enumeration {want}")?;
            }
        }
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_FAILED })
}

fn perturb(d: &distributions::GenusDistribution) -> distributions::GenusDistribution {
    let mut coeffs = d.coeffs().to_vec();
    let k = coeffs.len() / 2;
    coeffs[k] += 1u32;
    distributions::GenusDistribution::new(d.family(), d.n(), coeffs).expect("same shape")
}

fn report_zero(out: &mut dyn Write, label: &str, result: Result<(), Error>) -> io::Result<bool> {
    match result {
        Ok(()) => {
            writeln!(out, "{label}: PASS")?;
            Ok(true)
        }
        Err(Error::IdentityViolation { exponent, expected, actual }) => {
            writeln!(out, "{label}: FAIL at t^{exponent} (expected {expected}, got {actual})")?;
            Ok(false)
        }
        Err(e) => {
            writeln!(out, "{label}: FAIL ({e})")?;
            Ok(false)
        }
    }
}

pub fn cmd_ode_check(args: &OdeArgs, out: &mut dyn Write) -> CmdResult {
    let order = args.order as usize;
    let family = args.family;
    let (mut u, fault_at) = match family {
        Family::Bouquet => (powerseries::bouquet_u_from_sequence(order), 2),
        Family::Dipole => (powerseries::dipole_u_from_sequence(order), 1),
    };
    if args.inject_fault {
        let mut coeffs = u.coeffs().to_vec();
        coeffs[fault_at] += rational::int(1);
        u = TruncatedSeries::new(u.lowest(), coeffs);
    }
    let residual = match family {
        Family::Bouquet => powerseries::bouquet_ode_residual_of(&u),
        Family::Dipole => powerseries::dipole_ode_residual_of(&u),
    };
    let label = format!("{family} ODE residual below t^{}", residual.order());
    let ode_ok = report_zero(out, &label, residual.ensure_zero())?;
    let closed = match family {
        Family::Bouquet => powerseries::bouquet_u_closed(order).map(|_| ()),
        Family::Dipole => powerseries::dipole_u_closed(order).map(|_| ()),
    };
    let label = format!("{family} closed-form expansion below t^{order}");
    let closed_ok = report_zero(out, &label, closed)?;
    Ok(if ode_ok && closed_ok { EXIT_OK } else { EXIT_FAILED })
}

/// One ladder row; the exact values of both families are needed for the
/// difference column.
pub fn asym_row(family: Family, n: u64, precision: usize) -> Result<AsymRow, Error> {
    let exact = closedform::avg_genus_closed(family, n)?;
    let report = closedform::AvgGenusReport::new(family, n, exact.clone(), precision);
    let stahl_residual = match family {
        Family::Bouquet => Some(rational::to_f64(&(&exact - stahl_estimate_bouquet(n)?))),
        Family::Dipole => None,
    };
    let difference_residual = if n >= 3 {
        let (diff, limit) = closedform::difference_report(n)?;
        Some(diff - limit)
    } else {
        None
    };
    let max_genus = family.max_genus(n);
    let max_genus_ratio = (max_genus > 0).then(|| rational::to_f64(&(exact / rational::int(max_genus as i64))));
    Ok(AsymRow {
        family: family.to_string(),
        n,
        avg_decimal: report.decimal,
        estimate: report.asymptotic_estimate,
        residual: report.residual,
        stahl_residual,
        difference_residual,
        max_genus_ratio,
    })
}

pub fn asym_report(family: Family, ladder: &[u64], precision: usize) -> Result<AsymReport, Error> {
    let rows = ladder
        .iter()
        .map(|&n| asym_row(family, n, precision))
        .collect::<Result<Vec<_>, _>>()?;
    let column = |f: &dyn Fn(&AsymRow) -> Option<f64>| -> Option<bool> {
        let values: Option<Vec<f64>> = rows.iter().map(f).collect();
        values.map(|v| strictly_decreasing_abs(&v))
    };
    let monotone = Monotone {
        residual: column(&|r| Some(r.residual)).unwrap_or(false),
        stahl_residual: column(&|r| r.stahl_residual),
        difference_residual: column(&|r| r.difference_residual),
    };
    Ok(AsymReport { rows, monotone })
}

pub fn cmd_asym(args: &AsymArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if args.ladder.is_empty() || args.ladder.contains(&0) || args.ladder.windows(2).any(|w| w[1] <= w[0]) {
        writeln!(err, "error: --ladder needs positive values in strictly ascending order")?;
        return Ok(EXIT_USAGE);
    }
    let report = asym_report(args.family, &args.ladder, args.precision)?;
    match args.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv => {
            writeln!(out, "{}", AsymRow::CSV_HEADER)?;
            for r in &report.rows {
                writeln!(out, "{}", r.to_csv())?;
            }
        }
    }
    Ok(EXIT_OK)
}
