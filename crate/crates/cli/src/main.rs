mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use csrbf::experiments::SweepAxis;
use csrbf::gas::GasProblem;
use csrbf::{reference, Execution, KernelFamily, ScaledKernel};
use serde::Serialize;

use commands::{Failure, Output};

const THREADS_ENV: &str = "CSRBF_THREADS";
const DEFAULT_RW: f64 = 2.5;

#[derive(Parser, Debug)]
#[command(name = "csrbf", version, about = "Compactly supported RBF collocation for the gas-flow problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunConfig,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one configuration and print its report.
    Solve,
    /// Rerun the configurations of a published table.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(5..=8))]
        which: u8,
    },
    /// One solve per grid value along an axis.
    Sweep {
        #[arg(long, value_enum)]
        axis: Axis,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true, allow_negative_numbers = true)]
        grid: Vec<f64>,
    },
    /// y(x) on a uniform grid over [0, L∞].
    Profile {
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
    /// Interpolate x,y pairs from a CSV file.
    Interp {
        #[arg(long)]
        input: PathBuf,
        /// Evaluation points; defaults to a uniform grid over the data range.
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
        grid: Option<Vec<f64>>,
        #[arg(long, default_value_t = 201)]
        points: usize,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Axis {
    Rw,
    Rho,
    N,
}

impl From<Axis> for SweepAxis {
    fn from(a: Axis) -> Self {
        match a {
            Axis::Rw => SweepAxis::Rw,
            Axis::Rho => SweepAxis::Rho,
            Axis::N => SweepAxis::N,
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args, Debug, Serialize)]
struct RunConfig {
    /// Kernel as family:params, e.g. wendland:3,5, wu:3,3, osc:3, buhmann:4.
    #[arg(long, global = true, default_value = "wendland:3,5")]
    kernel: KernelFamily,
    #[arg(long, global = true, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, global = true, default_value_t = 30)]
    n: usize,
    #[arg(long, global = true, default_value_t = 1.5)]
    rho: f64,
    /// Support radius; defaults to the tuned radius of a standard kernel, else 2.5.
    #[arg(long, global = true)]
    rw: Option<f64>,
    #[arg(long, global = true, default_value_t = 5.0)]
    linf: f64,
    /// Quadrature order m for the residual norm.
    #[arg(long, global = true, default_value_t = 60)]
    qm: usize,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Run independent solves one after another.
    #[arg(long, global = true)]
    sequential: bool,
}

impl RunConfig {
    fn r_omega(&self) -> f64 {
        self.rw.unwrap_or_else(|| {
            let name = self.kernel.to_string();
            reference::STANDARD_KERNELS
                .iter()
                .find(|(k, _)| *k == name)
                .map_or(DEFAULT_RW, |&(_, rw)| rw)
        })
    }

    fn kernel(&self) -> Result<ScaledKernel, Failure> {
        Ok(ScaledKernel::new(self.kernel, self.r_omega())?)
    }

    fn problem(&self) -> Result<GasProblem, Failure> {
        let p = GasProblem::new(self.kernel()?)
            .with_alpha(self.alpha)
            .with_n(self.n)
            .with_rho(self.rho)
            .with_l_inf(self.linf)
            .with_quadrature_m(self.qm);
        p.validate()?;
        Ok(p)
    }

    fn execution(&self) -> Execution {
        if self.sequential {
            Execution::Sequential
        } else {
            Execution::default()
        }
    }
}

#[derive(Serialize)]
struct Meta<'a> {
    command: &'a str,
    version: &'a str,
    config: &'a RunConfig,
    r_omega: f64,
    rows: usize,
    warnings: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(warnings) => {
            if warnings > 0 {
                eprintln!("warning: {warnings} cell(s) failed");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got '{raw}'"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn run(cli: &Cli) -> Result<usize, Failure> {
    let cfg = &cli.run;
    let exec = cfg.execution();
    let (name, output) = match &cli.command {
        Command::Solve => ("solve", commands::solve_cmd(&cfg.problem()?)?),
        Command::Table { which } => ("table", commands::table_cmd(*which, &cfg.problem()?, exec)?),
        Command::Sweep { axis, grid } => (
            "sweep",
            commands::sweep_cmd(&cfg.problem()?, (*axis).into(), grid, exec)?,
        ),
        Command::Profile { points } => ("profile", commands::profile_cmd(&cfg.problem()?, *points)?),
        Command::Interp {
            input,
            grid,
            points,
        } => (
            "interp",
            commands::interp_cmd(input, cfg.kernel()?, grid.as_deref(), *points)?,
        ),
    };

    let (rows, warnings) = match &output {
        Output::Report(r) => (r.y_samples.len(), 0),
        Output::Table(t) => (t.rows.len(), t.failures()),
    };
    match &cfg.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| io_failure(path, e))?;
            emit(&output, cfg.format, BufWriter::new(file)).map_err(|e| io_failure(path, e))?;
            let meta = Meta {
                command: name,
                version: env!("CARGO_PKG_VERSION"),
                config: cfg,
                r_omega: cfg.r_omega(),
                rows,
                warnings,
            };
            let meta_path = sidecar(path);
            let file = File::create(&meta_path).map_err(|e| io_failure(&meta_path, e))?;
            let mut w = BufWriter::new(file);
            serde_json::to_writer_pretty(&mut w, &meta)
                .map_err(io::Error::from)
                .and_then(|_| writeln!(w))
                .and_then(|_| w.flush())
                .map_err(|e| io_failure(&meta_path, e))?;
        }
        None => {
            let stdout = io::stdout();
            emit(&output, cfg.format, stdout.lock())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))?;
        }
    }
    Ok(warnings)
}

fn emit<W: Write>(output: &Output, format: Format, mut w: W) -> io::Result<()> {
    match (output, format) {
        (Output::Report(r), Format::Json) => {
            serde_json::to_writer_pretty(&mut w, r)?;
            writeln!(w)?;
        }
        (Output::Report(r), Format::Csv) => commands::report_table(r).write_csv(&mut w)?,
        (Output::Table(t), Format::Json) => {
            serde_json::to_writer_pretty(&mut w, &t.to_json())?;
            writeln!(w)?;
        }
        (Output::Table(t), Format::Csv) => t.write_csv(&mut w)?,
    }
    w.flush()
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".meta.json");
    PathBuf::from(s)
}

fn io_failure(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}
