//! The `gks` command line. Exit codes: 0 success, 1 a check failed (or an
//! output could not be written), 2 invalid usage or arguments.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use gks_core::color::{Classifier, ColorScheme};
use gks_core::equidistribution::build_s_q;
use gks_core::geometry::{boundary_samples, HypocycloidRegion};
use gks_core::kloosterman::{crt_decompose, gks, gks_grid_with, IDENTITY_TOL};
use gks_core::lucas::spider_table;
use gks_core::modular::{primitive_root, subgroup_from_generator, subgroup_of_order};
use gks_core::UnitSubgroup;

use crate::parallel::RayonExecutor;
use crate::render::{
    classify_points, format_fixed, read_csv, render_svg, write_boundary_csv, write_csv, write_point_set_csv,
    SvgOptions,
};
use crate::suites::{self, Suite, SuiteOptions};

/// Grids above this modulus need `--force`.
pub const FORCE_LIMIT: u64 = 20_000;

#[derive(Debug, Parser)]
#[command(name = "gks", version, about = "Generalized Kloosterman sums: evaluation, grids, plots and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Re and Im of K(a, b, m, <omega>).
    Eval {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        omega: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Evaluate a grid of sums and write it as CSV.
    Grid(GridArgs),
    /// Render a grid CSV as an SVG scatter plot.
    Plot(PlotArgs),
    /// Run a verification suite and print pass/fail counts.
    Verify(VerifyArgs),
    /// Print the table of Lucas numbers at prime indices.
    Spider {
        /// Number of rows, starting at n = 3.
        #[arg(long, default_value_t = 9)]
        rows: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Evaluate both CRT factors of K(a, b, m1*m2, <omega>) and their product.
    Decompose {
        #[arg(long)]
        m1: u64,
        #[arg(long)]
        m2: u64,
        #[arg(long)]
        omega: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Write the sampled boundary of H_d as CSV (theta, re, im).
    Boundary {
        #[arg(long)]
        d: u32,
        /// Sample count; defaults to the membership polygon's.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the point set S_q as CSV (a, x1, ...).
    PointSet {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeName {
    SumModK,
    LegendreAb,
    DlogDiffMod4,
    Constant,
}

#[derive(Debug, Args)]
struct SchemeArgs {
    /// Modulus for sum-mod-k.
    #[arg(long)]
    k: Option<u64>,
    /// Prime for legendre-ab and dlog-diff-mod-4.
    #[arg(long)]
    p: Option<u64>,
    /// Generator for dlog-diff-mod-4; defaults to the smallest primitive root.
    #[arg(long)]
    g: Option<u64>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("subgroup").required(true).args(["omega", "order"])))]
struct GridArgs {
    #[arg(long)]
    m: u64,
    /// Generator of the subgroup.
    #[arg(long)]
    omega: Option<u64>,
    /// Order of the subgroup (m must be an odd prime power).
    #[arg(long)]
    order: Option<u64>,
    /// Restrict to the single column b.
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    out: PathBuf,
    /// Worker threads; 0 uses the available parallelism.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Allow m above the size guard.
    #[arg(long)]
    force: bool,
    /// Store classes from this scheme in the class column.
    #[arg(long, value_enum)]
    scheme: Option<SchemeName>,
    #[command(flatten)]
    scheme_args: SchemeArgs,
}

#[derive(Debug, Args)]
struct PlotArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    scheme: SchemeName,
    #[command(flatten)]
    scheme_args: SchemeArgs,
    /// Draw the boundary of H_d.
    #[arg(long)]
    overlay_hypocycloid: Option<u32>,
    /// Drop points with p | ab (schemes with a prime only).
    #[arg(long)]
    units_only: bool,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1.5)]
    radius: f64,
    #[arg(long, default_value_t = 800)]
    canvas: u32,
    #[arg(long, default_value_t = 0.75)]
    opacity: f64,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Primes to check instead of the suite's defaults (comma separated).
    #[arg(long, value_delimiter = ',')]
    p: Vec<u64>,
    /// Subgroup order for `hypocycloid` with --p.
    #[arg(long, default_value_t = 3)]
    d: u64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    seed: Option<u64>,
}

enum Failure {
    Usage(String),
    Check(String),
    Runtime(String),
}

impl From<gks_core::Error> for Failure {
    fn from(e: gks_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<crate::render::RenderError> for Failure {
    fn from(e: crate::render::RenderError) -> Self {
        match e {
            crate::render::RenderError::Core(e) => e.into(),
            crate::render::RenderError::Parse { .. } | crate::render::RenderError::EmptyGrid => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<suites::SuiteError> for Failure {
    fn from(e: suites::SuiteError) -> Self {
        match e {
            suites::SuiteError::Core(e) => e.into(),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = execute(cli.command, stdout, stderr);
    let _ = stdout.flush();
    match result {
        Ok(()) => 0,
        Err(Failure::Check(message)) => {
            let _ = writeln!(stderr, "check failed: {message}");
            1
        }
        Err(Failure::Runtime(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            1
        }
        Err(Failure::Usage(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            2
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Eval { m, omega, a, b } => {
            let k = gks(a, b, &subgroup_from_generator(m, omega)?);
            writeln!(stdout, "{}, {}", format_fixed(k.re), format_fixed(k.im))?;
        }
        Command::Grid(args) => grid(args, stderr)?,
        Command::Plot(args) => plot(args, stderr)?,
        Command::Verify(args) => {
            let mut options = SuiteOptions {
                primes: args.p,
                d: args.d,
                threads: args.threads,
                ..SuiteOptions::default()
            };
            if let Some(seed) = args.seed {
                options.seed = seed;
            }
            let outcome = suites::run(args.suite, &options, stdout)?;
            if !outcome.all_passed() {
                return Err(Failure::Check(format!("{} of {} checks failed", outcome.failed, outcome.passed + outcome.failed)));
            }
        }
        Command::Spider { rows, csv } => {
            if rows == 0 {
                return Err(Failure::Usage("--rows must be at least 1".into()));
            }
            let table = spider_table(rows + 2)?;
            if csv {
                writeln!(stdout, "n,p_n,lucas,phi")?;
                for r in &table {
                    writeln!(stdout, "{},{},{},{}", r.n, r.p_n, r.lucas, r.phi)?;
                }
            } else {
                writeln!(stdout, "{:>3} {:>5} {:>20} {:>20}", "n", "p(n)", "L_p(n)", "phi(L_p(n))")?;
                for r in &table {
                    writeln!(stdout, "{:>3} {:>5} {:>20} {:>20}", r.n, r.p_n, r.lucas, r.phi)?;
                }
            }
        }
        Command::Decompose { m1, m2, omega, a, b } => {
            let m = m1.checked_mul(m2).ok_or(gks_core::Error::Overflow)?;
            let direct = gks(a, b, &subgroup_from_generator(m, omega)?);
            let dec = crt_decompose(a, b, m1, m2, omega)?;
            let show = |z: gks_core::ComplexValue| format!("{}, {}", format_fixed(z.re), format_fixed(z.im));
            writeln!(stdout, "left:    {}", show(dec.left))?;
            writeln!(stdout, "right:   {}", show(dec.right))?;
            writeln!(stdout, "product: {}", show(dec.product))?;
            writeln!(stdout, "direct:  {}", show(direct))?;
            writeln!(stdout, "splits:  {}", dec.splits)?;
            let gap = (dec.product - direct).norm();
            if !(gap <= IDENTITY_TOL) {
                return Err(Failure::Check(format!("|product - direct| = {gap:.3e} exceeds 1e-8")));
            }
        }
        Command::Boundary { d, samples, out } => {
            let region = match samples {
                Some(n) => boundary_samples(d, n)?,
                None => HypocycloidRegion::for_membership(d)?,
            };
            let n = write_boundary_csv(&region, BufWriter::new(File::create(&out)?))?;
            writeln!(stderr, "wrote {n} boundary samples to {}", out.display())?;
        }
        Command::PointSet { q, d, b, out } => {
            let set = build_s_q(q, d, b)?;
            let n = write_point_set_csv(&set, BufWriter::new(File::create(&out)?))?;
            writeln!(stderr, "wrote {n} points to {}", out.display())?;
        }
    }
    Ok(())
}

fn scheme_from(name: SchemeName, args: &SchemeArgs) -> Result<ColorScheme, Failure> {
    let need_p = || args.p.ok_or_else(|| Failure::Usage("this scheme needs --p".into()));
    Ok(match name {
        SchemeName::SumModK => ColorScheme::SumModK {
            k: args.k.ok_or_else(|| Failure::Usage("sum-mod-k needs --k".into()))?,
        },
        SchemeName::LegendreAb => ColorScheme::LegendreAb { p: need_p()? },
        SchemeName::DlogDiffMod4 => {
            let p = need_p()?;
            let g = match args.g {
                Some(g) => g,
                None => primitive_root(p)?,
            };
            ColorScheme::DlogDiffMod4 { p, g }
        }
        SchemeName::Constant => ColorScheme::Constant,
    })
}

fn scheme_prime(scheme: &ColorScheme) -> Option<u64> {
    match *scheme {
        ColorScheme::LegendreAb { p } | ColorScheme::DlogDiffMod4 { p, .. } => Some(p),
        _ => None,
    }
}

fn grid(args: GridArgs, stderr: &mut dyn Write) -> Result<(), Failure> {
    if args.m > FORCE_LIMIT && !args.force {
        return Err(Failure::Usage(format!("m = {} exceeds {FORCE_LIMIT}; pass --force to evaluate anyway", args.m)));
    }
    let subgroup: UnitSubgroup = match (args.omega, args.order) {
        (Some(omega), _) => subgroup_from_generator(args.m, omega)?,
        (None, Some(order)) => subgroup_of_order(args.m, order)?,
        (None, None) => unreachable!("clap requires --omega or --order"),
    };
    let b_range = match args.b {
        Some(b) if b >= args.m => return Err(Failure::Usage(format!("--b {b} is not below m = {}", args.m))),
        Some(b) => b..b + 1,
        None => 0..args.m,
    };
    let classifier = match args.scheme {
        Some(name) => Some(Classifier::new(&scheme_from(name, &args.scheme_args)?)?),
        None => None,
    };
    let executor = RayonExecutor::new(args.threads).map_err(|e| Failure::Runtime(e.to_string()))?;
    let mut grid = gks_grid_with(&subgroup, 0..args.m, b_range, &executor)?;
    if let Some(classifier) = classifier {
        grid.set_classes(|a, b| classifier.classify(a as i64, b as i64))?;
    }
    let rows = write_csv(&grid, BufWriter::new(File::create(&args.out)?))?;
    writeln!(
        stderr,
        "wrote {rows} rows (m = {}, |subgroup| = {}, {} threads) to {}",
        args.m,
        subgroup.order(),
        executor.threads(),
        args.out.display()
    )?;
    Ok(())
}

fn plot(args: PlotArgs, stderr: &mut dyn Write) -> Result<(), Failure> {
    let scheme = scheme_from(args.scheme, &args.scheme_args)?;
    let classifier = Classifier::new(&scheme)?;
    if !(args.radius > 0.0) || args.canvas == 0 || !(0.0..=1.0).contains(&args.opacity) {
        return Err(Failure::Usage("radius and canvas must be positive, opacity in [0, 1]".into()));
    }
    let overlay = match args.overlay_hypocycloid {
        Some(d) => Some(HypocycloidRegion::for_membership(d)?),
        None => None,
    };
    let mut points = read_csv(BufReader::new(File::open(&args.input)?))?;
    if let Some(p) = scheme_prime(&scheme) {
        let units = |a: u64, b: u64| a % p != 0 && b % p != 0;
        let dlog = matches!(scheme, ColorScheme::DlogDiffMod4 { .. });
        if args.units_only || dlog {
            let before = points.len();
            points.retain(|q| units(q.a, q.b));
            writeln!(stderr, "dropped {} points with p | ab", before - points.len())?;
        }
    }
    classify_points(&mut points, &classifier)?;
    let options = SvgOptions {
        radius: args.radius,
        canvas: args.canvas,
        opacity: args.opacity,
        overlay,
    };
    let bytes = render_svg(&points, &options, BufWriter::new(File::create(&args.out)?))?;
    writeln!(stderr, "wrote {bytes} bytes ({} points) to {}", points.len(), args.out.display())?;
    Ok(())
}
