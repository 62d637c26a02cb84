//! `qdisc`: verification suites, tables, transforms, Green solves and limit sweeps.

mod config;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use config::{CommandName, Format, RunConfig};
use num_complex::Complex64;
use qdisc::discalg::ElementDoc;
use qdisc::green::{classical_limit_report, g_radial_values, green_solve, GreenOrder};
use qdisc::spherical::{transform_forward, PlancherelMeasure};
use qdisc::verify::run_all;
use serde::Serialize;

const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "qdisc", version, about = "Harmonic analysis on the quantum disc")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Deformation parameter, in [0.05, 0.995].
    #[arg(long, global = true)]
    q: Option<f64>,
    /// JSON run configuration; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every identity check and report residuals.
    Verify,
    /// Tabulate the radial Green functions g1, g2 on the grid.
    Tabulate {
        /// Number of grid rows, starting at n = 0.
        #[arg(long, default_value_t = 41)]
        rows: usize,
        /// Also write the Plancherel density table to this file.
        #[arg(long)]
        density_out: Option<PathBuf>,
        /// Number of spectral points in the density table.
        #[arg(long, default_value_t = 256)]
        density_points: usize,
    },
    /// Spherical transform of the sector-0 part of an element.
    Transform {
        /// Element in the JSON element format.
        #[arg(long)]
        input: PathBuf,
    },
    /// Solve Δ_q u = f (order 1) or Δ_q² u = f (order 2) through the Green kernels.
    Greens {
        /// Element in the JSON element format.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        order: u8,
    },
    /// Compare the kernel coefficient series with their q → 1 limits.
    Limit {
        /// Comma-separated deformation parameters, increasing.
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<f64>,
        /// Comma-separated arguments t in [0, 1).
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.25, 0.5, 0.75])]
        t_list: Vec<f64>,
    },
}

impl Command {
    fn name(&self) -> CommandName {
        match self {
            Command::Verify => CommandName::Verify,
            Command::Tabulate { .. } => CommandName::Tabulate,
            Command::Transform { .. } => CommandName::Transform,
            Command::Greens { .. } => CommandName::Greens,
            Command::Limit { .. } => CommandName::Limit,
        }
    }
}

enum Failure {
    Check(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => EXIT_CHECK,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

struct Output {
    path: Option<PathBuf>,
    format: Format,
}

impl Output {
    fn write(&self, text: &str) -> Result<(), Failure> {
        write_text(self.path.as_ref(), text)
    }
}

fn write_text(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn load_config(cli: &Cli) -> Result<RunConfig, Failure> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::from_json(&read_text(p)?).map_err(Failure::Usage)?,
        None => RunConfig::default(),
    };
    let name = cli.command.name();
    if let Some(c) = cfg.command {
        if c != name {
            return Err(Failure::Usage(format!("config is for {c:?}, command is {name:?}")));
        }
    }
    cfg.command = Some(name);
    if cli.q.is_some() {
        cfg.q = cli.q;
    }
    if cli.out.is_some() {
        cfg.output.path = cli.out.clone();
    }
    if cli.format.is_some() {
        cfg.output.format = cli.format;
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cfg = load_config(cli)?;
    let default_format = match cli.command {
        Command::Verify | Command::Greens { .. } => Format::Json,
        _ => Format::Csv,
    };
    let out = Output {
        path: cfg.output.path.clone(),
        format: cfg.output.format.unwrap_or(default_format),
    };
    match &cli.command {
        Command::Verify => cmd_verify(&cfg, &out),
        Command::Tabulate { rows, density_out, density_points } => {
            cmd_tabulate(&cfg, &out, *rows, density_out.as_ref(), *density_points)
        }
        Command::Transform { input } => cmd_transform(&cfg, &out, input),
        Command::Greens { input, order } => cmd_greens(&cfg, &out, input, *order),
        Command::Limit { q_list, t_list } => cmd_limit(&cfg, &out, q_list, t_list),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cmd_verify(cfg: &RunConfig, out: &Output) -> Result<(), Failure> {
    let ctx = cfg.context().map_err(Failure::Usage)?;
    let report = run_all(&ctx);
    let text = match out.format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = String::from("check_name,residual,tolerance,pass,paper_ref\n");
            for r in &report {
                let _ = writeln!(
                    s,
                    "{},{:e},{:e},{},{}",
                    r.check_name,
                    r.residual,
                    r.tolerance,
                    r.pass,
                    csv_field(&r.paper_ref)
                );
            }
            s
        }
    };
    out.write(&text)?;
    let failed: Vec<&str> = report.iter().filter(|r| !r.pass).map(|r| r.check_name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("failed checks: {}", failed.join(", "))))
    }
}

#[derive(Serialize)]
struct TabRow {
    n: usize,
    y: f64,
    g1: f64,
    g2: f64,
}

#[derive(Serialize)]
struct DensityRow {
    rho: f64,
    density: f64,
}

fn cmd_tabulate(
    cfg: &RunConfig,
    out: &Output,
    rows: usize,
    density_out: Option<&PathBuf>,
    density_points: usize,
) -> Result<(), Failure> {
    let ctx = cfg.context().map_err(Failure::Usage)?;
    let g1 = g_radial_values(GreenOrder::First, rows, &ctx);
    let g2 = g_radial_values(GreenOrder::Second, rows, &ctx);
    let table: Vec<TabRow> = (0..rows)
        .map(|n| TabRow {
            n,
            y: ctx.grid_point(n as i64),
            g1: g1.at(n as i64).re,
            g2: g2.at(n as i64).re,
        })
        .collect();
    let text = match out.format {
        Format::Json => to_json(&table),
        Format::Csv => {
            let mut s = String::from("n,y,g1,g2\n");
            for r in &table {
                let _ = writeln!(s, "{},{},{},{}", r.n, r.y, r.g1, r.g2);
            }
            s
        }
    };
    out.write(&text)?;
    if let Some(path) = density_out {
        let density: Vec<DensityRow> = PlancherelMeasure::new(&ctx)
            .table(density_points)
            .into_iter()
            .map(|(rho, density)| DensityRow { rho, density })
            .collect();
        let text = match out.format {
            Format::Json => to_json(&density),
            Format::Csv => {
                let mut s = String::from("rho,density\n");
                for r in &density {
                    let _ = writeln!(s, "{},{}", r.rho, r.density);
                }
                s
            }
        };
        write_text(Some(path), &text)?;
    }
    Ok(())
}

fn load_element(path: &PathBuf) -> Result<ElementDoc, Failure> {
    ElementDoc::from_json(&read_text(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Input documents may carry their own `q`; it must agree with the run.
fn check_doc_q(doc: &ElementDoc, q: f64) -> Result<(), Failure> {
    if (doc.q - q).abs() > 1e-15 {
        return Err(Failure::Usage(format!("input was written for q = {}, run uses q = {q}", doc.q)));
    }
    Ok(())
}

#[derive(Serialize)]
struct SpectralRow {
    rho: f64,
    re: f64,
    im: f64,
}

fn cmd_transform(cfg: &RunConfig, out: &Output, input: &PathBuf) -> Result<(), Failure> {
    let ctx = cfg.context().map_err(Failure::Usage)?;
    let doc = load_element(input)?;
    check_doc_q(&doc, ctx.q())?;
    let element = doc.to_element().map_err(|e| Failure::Usage(e.to_string()))?;
    if element.sector_labels().any(|m| m != 0) {
        return Err(Failure::Usage("transform takes a radial element (sector 0 only)".into()));
    }
    let radial = element.sector(0).cloned().unwrap_or_else(qdisc::GridFunction::zero);
    let spec = transform_forward(&radial, &ctx).map_err(|e| Failure::Check(e.to_string()))?;
    let rows: Vec<SpectralRow> = spec
        .nodes
        .iter()
        .zip(&spec.values)
        .map(|(&rho, v): (&f64, &Complex64)| SpectralRow { rho, re: v.re, im: v.im })
        .collect();
    let text = match out.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("rho,re,im\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{}", r.rho, r.re, r.im);
            }
            s
        }
    };
    out.write(&text)
}

fn cmd_greens(cfg: &RunConfig, out: &Output, input: &PathBuf, order: u8) -> Result<(), Failure> {
    let ctx = cfg.context().map_err(Failure::Usage)?;
    let doc = load_element(input)?;
    check_doc_q(&doc, ctx.q())?;
    let f = doc.to_element().map_err(|e| Failure::Usage(e.to_string()))?;
    let order = GreenOrder::from_int(order).ok_or_else(|| Failure::Usage(format!("order {order} not in {{1, 2}}")))?;
    let u = green_solve(&f, order, &ctx).map_err(|e| Failure::Check(e.to_string()))?;
    let text = match out.format {
        Format::Json => ElementDoc::from_element(ctx.q(), &u).to_json() + "\n",
        Format::Csv => {
            let mut s = String::from("m,n,re,im\n");
            for (m, g) in u.sectors() {
                for (n, v) in g.values().iter().enumerate() {
                    let _ = writeln!(s, "{m},{n},{},{}", v.re, v.im);
                }
            }
            s
        }
    };
    out.write(&text)
}

#[derive(Serialize)]
struct LimitOut {
    q: f64,
    t: f64,
    err1: f64,
    err2: f64,
    reflection: f64,
}

fn cmd_limit(cfg: &RunConfig, out: &Output, q_list: &[f64], t_list: &[f64]) -> Result<(), Failure> {
    let tol = cfg.series_tol().map_err(Failure::Usage)?;
    let report = classical_limit_report(t_list, q_list, tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let rows: Vec<LimitOut> = report
        .rows
        .iter()
        .map(|r| LimitOut { q: r.q, t: r.t, err1: r.err1, err2: r.err2, reflection: r.reflection_residual })
        .collect();
    let text = match out.format {
        Format::Json => to_json(&serde_json::json!({ "rows": rows, "monotone": report.monotone })),
        Format::Csv => {
            let mut s = String::from("q,t,err1,err2,reflection\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{:e},{:e},{:e}", r.q, r.t, r.err1, r.err2, r.reflection);
            }
            s
        }
    };
    out.write(&text)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qdisc: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
