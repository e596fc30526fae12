mod cache;
mod output;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use integral_tqft::lie::{check_admissible, LieType};
use integral_tqft::modular::ModularData;
use integral_tqft::report::Report;
use integral_tqft::surgery::{check_integrality, invariant, lens_sweep, IntegralityReport, SurgeryFile};
use integral_tqft::verify::verify_all;
use output::Format;
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Exact modular data and integral surgery invariants for quantum groups at
/// a prime root of unity.
#[derive(Parser)]
#[command(name = "itqft", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for cached fusion tables.
    #[arg(long, global = true, env = "ITQFT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV (tabular commands only).
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Args, Clone, Copy)]
struct Session {
    /// Lie type, e.g. A2, B3, D4, E6.
    #[arg(long = "type", value_parser = parse_type)]
    lie_type: LieType,

    /// Odd prime exceeding m(type).
    #[arg(long)]
    r: u64,
}

fn parse_type(s: &str) -> std::result::Result<LieType, String> {
    s.parse().map_err(|e: integral_tqft::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite; exits 1 on any failure.
    Verify(Session),
    /// List the simple objects with their duals, twists and quantum dimensions.
    Alcove(Session),
    /// Print the fusion rules.
    Fusion(Session),
    /// Print the S-matrix.
    Smatrix(Session),
    /// Write fusion.json, smatrix.json and modular.json to a directory.
    Tables {
        #[command(flatten)]
        session: Session,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the invariant of a surgery presentation file.
    Invariant { file: PathBuf },
    /// Integrality table for the lens spaces L(p, 1), p = 1..=pmax.
    SweepLens {
        #[command(flatten)]
        session: Session,
        #[arg(long, default_value_t = 12)]
        pmax: i64,
    },
}

/// Input errors (bad parameters, unreadable or malformed files) exit with 2.
#[derive(Debug)]
struct UsageError(anyhow::Error);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<E: Into<anyhow::Error>>(e: E) -> anyhow::Error {
    UsageError(e.into()).into()
}

struct Ctx {
    cache_dir: Option<PathBuf>,
    format: Format,
}

impl Ctx {
    fn modular(&self, s: Session) -> Result<ModularData> {
        check_admissible(s.lie_type, s.r).map_err(usage)?;
        let table = cache::fusion_table(self.cache_dir.as_deref(), s.lie_type, s.r)?;
        Ok(ModularData::from_fusion(table)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match (cli.json, cli.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    };
    let ctx = Ctx {
        cache_dir: cli.cache_dir,
        format,
    };
    match run(&ctx, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// Returns whether every check passed.
fn run(ctx: &Ctx, command: Command) -> Result<bool> {
    match command {
        Command::Verify(s) => verify(ctx, s),
        Command::Alcove(s) => alcove(ctx, s).map(|_| true),
        Command::Fusion(s) => fusion(ctx, s).map(|_| true),
        Command::Smatrix(s) => smatrix(ctx, s).map(|_| true),
        Command::Tables { session, out } => tables(ctx, session, &out).map(|_| true),
        Command::Invariant { file } => invariant_cmd(ctx, &file),
        Command::SweepLens { session, pmax } => sweep(ctx, session, pmax),
    }
}

fn verify(ctx: &Ctx, s: Session) -> Result<bool> {
    check_admissible(s.lie_type, s.r).map_err(usage)?;
    let table = cache::fusion_table(ctx.cache_dir.as_deref(), s.lie_type, s.r)?;
    let reports = verify_all(s.lie_type, s.r, Some(table))?;
    let passed = reports.iter().all(Report::passed);
    match ctx.format {
        Format::Json => output::json(&reports)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                suite: &'a str,
                check: &'a str,
                passed: bool,
                detail: &'a str,
            }
            let rows: Vec<Row> = reports
                .iter()
                .flat_map(|rep| {
                    rep.checks.iter().map(|c| Row {
                        suite: &rep.title,
                        check: &c.name,
                        passed: c.passed,
                        detail: &c.detail,
                    })
                })
                .collect();
            output::csv(&rows)?;
        }
        Format::Text => {
            for rep in &reports {
                print!("{rep}");
            }
            println!("{}", if passed { "all checks passed" } else { "VERIFICATION FAILED" });
        }
    }
    Ok(passed)
}

#[derive(Serialize)]
struct LabelRow {
    index: usize,
    label: String,
    dual: String,
    twist_exponent: i64,
    qdim: String,
}

fn alcove(ctx: &Ctx, s: Session) -> Result<()> {
    let md = ctx.modular(s)?;
    let rows: Vec<LabelRow> = (0..md.len())
        .map(|i| LabelRow {
            index: i,
            label: md.labels[i].to_string(),
            dual: md.labels[md.fusion().dual(i)].to_string(),
            twist_exponent: md.twist_exponents[i],
            qdim: md.qdim[i].to_string(),
        })
        .collect();
    match ctx.format {
        Format::Json => output::json(&rows)?,
        Format::Csv => output::csv(&rows)?,
        Format::Text => {
            println!("{} at r = {}: {} simple objects (z{} = exp(2 pi i / {}))", md.lie_type, md.r, md.len(), md.r, md.r);
            for row in &rows {
                println!(
                    "{:>4}  {:<12} dual {:<12} twist z{}^{:<4} qdim {}",
                    row.index, row.label, row.dual, md.r, row.twist_exponent, row.qdim
                );
            }
        }
    }
    Ok(())
}

fn fusion(ctx: &Ctx, s: Session) -> Result<()> {
    check_admissible(s.lie_type, s.r).map_err(usage)?;
    let table = cache::fusion_table(ctx.cache_dir.as_deref(), s.lie_type, s.r)?;
    match ctx.format {
        Format::Json => output::json(&*table)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                lambda: String,
                mu: String,
                nu: String,
                n: u64,
            }
            let rows: Vec<Row> = table
                .entries()
                .into_iter()
                .map(|e| Row {
                    lambda: e.lambda.to_string(),
                    mu: e.mu.to_string(),
                    nu: e.nu.to_string(),
                    n: e.n as u64,
                })
                .collect();
            output::csv(&rows)?;
        }
        Format::Text => {
            let labels = table.labels();
            for i in 0..table.len() {
                for j in i..table.len() {
                    let terms: Vec<String> = table
                        .product(i, j)
                        .map(|(k, m)| if m == 1 { labels[k].to_string() } else { format!("{m} {}", labels[k]) })
                        .collect();
                    println!("{} x {} = {}", labels[i], labels[j], terms.join(" + "));
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SMatrix<'a> {
    lie_type: LieType,
    r: u64,
    labels: &'a [integral_tqft::lie::Weight],
    s: &'a [Vec<integral_tqft::rings::Cyclotomic>],
}

fn smatrix(ctx: &Ctx, s: Session) -> Result<()> {
    let md = ctx.modular(s)?;
    match ctx.format {
        Format::Json => output::json(&SMatrix {
            lie_type: md.lie_type,
            r: md.r,
            labels: &md.labels,
            s: &md.s,
        })?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                row: String,
                column: String,
                entry: String,
            }
            let rows: Vec<Row> = (0..md.len())
                .flat_map(|i| (0..md.len()).map(move |j| (i, j)))
                .map(|(i, j)| Row {
                    row: md.labels[i].to_string(),
                    column: md.labels[j].to_string(),
                    entry: md.s[i][j].to_string(),
                })
                .collect();
            output::csv(&rows)?;
        }
        Format::Text => {
            for (i, row) in md.s.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                println!("{:<12} {}", md.labels[i].to_string(), cells.join(" | "));
            }
        }
    }
    Ok(())
}

fn tables(ctx: &Ctx, s: Session, out: &Path) -> Result<()> {
    let md = ctx.modular(s)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let write = |name: &str, body: Vec<u8>| -> Result<()> {
        let path = out.join(name);
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))
    };
    write("fusion.json", serde_json::to_vec_pretty(md.fusion())?)?;
    write(
        "smatrix.json",
        serde_json::to_vec_pretty(&SMatrix {
            lie_type: md.lie_type,
            r: md.r,
            labels: &md.labels,
            s: &md.s,
        })?,
    )?;
    write("modular.json", serde_json::to_vec_pretty(&md)?)?;
    if ctx.format == Format::Text {
        println!("wrote fusion.json, smatrix.json, modular.json to {} ({} labels)", out.display(), md.len());
    }
    Ok(())
}

#[derive(Serialize)]
struct InvariantOutput {
    lie_type: LieType,
    r: u64,
    zeta_order: u64,
    value: integral_tqft::rings::Cyclotomic,
    rpow: u32,
    linking: integral_tqft::surgery::LinkingData,
    checks: IntegralityReport,
}

fn invariant_cmd(ctx: &Ctx, file: &Path) -> Result<bool> {
    let text = fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))
        .map_err(usage)?;
    let input = SurgeryFile::parse(&text)
        .with_context(|| file.display().to_string())
        .map_err(usage)?;
    let t = input.lie_type().map_err(usage)?;
    let md = ctx.modular(Session { lie_type: t, r: input.r })?;
    let p = input.presentation();
    let value = invariant(&md, &p)?;
    let checks = check_integrality(&md, &p)?;
    let passed = checks.passed();
    let out = InvariantOutput {
        lie_type: t,
        r: md.r,
        zeta_order: md.zeta_order,
        value: value.numerator().clone(),
        rpow: value.rpow(),
        linking: p.linking_data(),
        checks,
    };
    match ctx.format {
        Format::Json => output::json(&out)?,
        Format::Csv => output::csv(&[sweep_row(&out.checks)])?,
        Format::Text => {
            println!("[M] = {value}");
            println!("  (z{0} = exp(2 pi i / {0}))", md.zeta_order);
            let c = &out.checks;
            let tag = |b: bool| if b { "PASS" } else { "FAIL" };
            println!("  even: {}", c.is_even);
            println!("  [{}] F_L / (F_-^(s- + b1) F_+^(s+)) in Z[xi]", tag(c.ratio_in_z_xi));
            println!("  [{}] F_- [M] in Z[zeta]", tag(c.f_minus_m_in_z_zeta));
            println!(
                "  [{}] F_- [M] in Z[xi]{}",
                tag(c.f_minus_m_in_z_xi || !c.is_even),
                if c.is_even { "" } else { " (not required: odd weight)" }
            );
            println!("{}", if passed { "integrality checks passed" } else { "INTEGRALITY FAILED" });
        }
    }
    Ok(passed)
}

#[derive(Serialize)]
struct SweepRow {
    pieces: String,
    weight: i64,
    even: bool,
    ratio_in_z_xi: bool,
    f_minus_m_in_z_zeta: bool,
    f_minus_m_in_z_xi: bool,
    passed: bool,
    f_minus_m: String,
}

fn sweep_row(c: &IntegralityReport) -> SweepRow {
    SweepRow {
        pieces: serde_json::to_string(&c.presentation.pieces).unwrap_or_default(),
        weight: c.presentation.weight,
        even: c.is_even,
        ratio_in_z_xi: c.ratio_in_z_xi,
        f_minus_m_in_z_zeta: c.f_minus_m_in_z_zeta,
        f_minus_m_in_z_xi: c.f_minus_m_in_z_xi,
        passed: c.passed(),
        f_minus_m: c.f_minus_m.to_string(),
    }
}

fn sweep(ctx: &Ctx, s: Session, pmax: i64) -> Result<bool> {
    if pmax < 1 {
        return Err(usage(anyhow::anyhow!("--pmax must be at least 1")));
    }
    let md = ctx.modular(s)?;
    let reports = lens_sweep(&md, pmax)?;
    let passed = reports.iter().all(IntegralityReport::passed);
    let rows: Vec<SweepRow> = reports.iter().map(sweep_row).collect();
    match ctx.format {
        Format::Json => output::json(&reports)?,
        Format::Csv => output::csv(&rows)?,
        Format::Text => {
            println!("{:>4} {:>3} {:>5} {:>6} {:>7} {:>5}", "p", "w", "even", "ratio", "Z[zeta]", "Z[xi]");
            for (rep, row) in reports.iter().zip(&rows) {
                let p = match rep.presentation.pieces[0] {
                    integral_tqft::surgery::Piece::Unknot(p) => p,
                    integral_tqft::surgery::Piece::Hopf(_) => unreachable!("lens sweep uses unknots"),
                };
                println!(
                    "{:>4} {:>3} {:>5} {:>6} {:>7} {:>5}",
                    p, row.weight, row.even, row.ratio_in_z_xi, row.f_minus_m_in_z_zeta, row.f_minus_m_in_z_xi
                );
            }
            println!("{}", if passed { "integrality checks passed" } else { "INTEGRALITY FAILED" });
        }
    }
    Ok(passed)
}
