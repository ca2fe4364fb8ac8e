//! Command-line front-end: theorem verification runs, reflection scans,
//! extremal searches and oracle access, with CSV/JSON reporting.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use simplex_hull::{
    format_float, hull_volume, is_admissible, reflected_configuration, reflection_hull_ratio,
    remark_upper_bound, run_all_checks, sampling, single_upper_facet_bound, CheckOptions, Error,
    IsometryFamily, PointSet, RunReport, SearchConfig, Simplex, Vector,
};

#[derive(Parser)]
#[command(
    name = "simplex-hull",
    about = "Hull volumes of congruent intersecting simplices: closed forms, oracle, searches",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full verification suite and report one verdict per check.
    VerifyTheorems(VerifyArgs),
    /// Sweep admissible reflection directions for one simplex, writing one
    /// CSV row per direction.
    ReflectScan(ReflectArgs),
    /// Maximize the hull ratio over one isometry family.
    Search(SearchArgs),
    /// Brute-force hull volume of a point set.
    OracleHull(OracleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension range, e.g. 2..4 or a single value.
    #[arg(long = "n-range", default_value = "2..4")]
    n_range: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Scales every per-check sample count.
    #[arg(long, default_value_t = 40)]
    samples: usize,
    /// Write the full report to this path.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct ReflectArgs {
    /// Simplex JSON file: {"n": 3, "vertices": [[...], ...]}.
    simplex_file: PathBuf,
    /// Number of sampled admissible directions.
    #[arg(long, default_value_t = 32)]
    grid: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also evaluate the hull oracle on every row.
    #[arg(long)]
    oracle_check: bool,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Simplex JSON file.
    simplex_file: PathBuf,
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coarse samples per sphere dimension.
    #[arg(long, default_value_t = 16)]
    resolution: usize,
    #[arg(long, default_value_t = 40)]
    iterations: usize,
    #[arg(long, default_value_t = 0.7)]
    shrink: f64,
    #[arg(long)]
    oracle_check: bool,
    /// Write the iteration trace as CSV.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Point-set JSON file: {"n": 3, "points": [[...], ...]}.
    points_file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Translation,
    Point,
    Hyperplane,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyTheorems(args) => cmd_verify(args),
        Command::ReflectScan(args) => cmd_reflect_scan(args),
        Command::Search(args) => cmd_search(args),
        Command::OracleHull(args) => cmd_oracle_hull(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Io(_) | Error::Json(_) | Error::InvalidInput(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), Error> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidInput(format!("bad dimension '{s}'")))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        Ok((parse_one(lo)?, parse_one(hi)?))
    } else {
        let n = parse_one(text)?;
        Ok((n, n))
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let (n_lo, n_hi) = parse_range(&args.n_range)?;
    let report = run_all_checks(&CheckOptions {
        n_lo,
        n_hi,
        seed: args.seed,
        samples: args.samples,
    })?;
    for line in report.verdict_lines() {
        println!("{line}");
    }
    let total = report.verdicts.len();
    let passed = report.verdicts.iter().filter(|v| v.pass).count();
    println!(
        "{passed}/{total} checks passed (inputs digest {})",
        report.inputs_digest
    );
    if let Some(path) = args.output {
        let body = match args.format {
            Format::Csv => report.to_csv(),
            Format::Json => report.to_json(),
        };
        fs::write(path, body)?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_reflect_scan(args: ReflectArgs) -> Result<ExitCode, Error> {
    if args.grid < 8 {
        return Err(Error::InvalidInput("grid must be at least 8".into()));
    }
    let text = fs::read_to_string(&args.simplex_file)?;
    let s = Simplex::from_json(&text)?;
    let n = s.dim();

    let mut report = RunReport::new(
        "reflect-scan",
        &format!(
            "reflect-scan grid={} seed={} oracle={} file={}",
            args.grid,
            args.seed,
            args.oracle_check,
            text.trim()
        ),
    );
    report.header = (0..n)
        .map(|i| format!("u_{i}"))
        .chain([
            "k".to_string(),
            "formula_ratio".to_string(),
            "oracle_ratio".to_string(),
            "remark_bound".to_string(),
            "single_upper_facet_bound".to_string(),
        ])
        .collect();

    // deterministic anchor directions first, then the seeded grid
    let mut directions = Vec::new();
    if let Ok(u) = s.vertex_sum().normalized() {
        if is_admissible(&s, &u) {
            directions.push(u);
        }
    }
    let t4 = single_upper_facet_bound(&s)?;
    if is_admissible(&s, &t4.optimal_u) {
        directions.push(t4.optimal_u.clone());
    }
    let mut rng = rand::SeedableRng::seed_from_u64(args.seed);
    for _ in 0..args.grid {
        directions.push(sampling::admissible_direction(&s, &mut rng));
    }

    for u in &directions {
        let breakdown = reflection_hull_ratio(&s, u)?;
        let k = breakdown.upper_side.k();
        let bound = remark_upper_bound(&s, &breakdown.upper_side)?;
        let oracle = if args.oracle_check {
            let pts = reflected_configuration(&s, u)?;
            format_float(hull_volume(&pts, n)?.volume / s.volume())
        } else {
            String::new()
        };
        let t4_cell = if k == 1 && breakdown.upper_side.facet_indices == [0] {
            format_float(t4.bound)
        } else {
            String::new()
        };
        let mut row: Vec<String> = (0..n).map(|i| format_float(u[i])).collect();
        row.push(k.to_string());
        row.push(format_float(breakdown.ratio));
        row.push(oracle);
        row.push(format_float(bound));
        row.push(t4_cell);
        report.rows.push(row);
    }

    let csv = report.to_csv();
    match args.output {
        Some(path) => fs::write(path, csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&args.simplex_file)?;
    let s = Simplex::from_json(&text)?;
    let cfg = SearchConfig {
        coarse_grid_resolution: args.resolution,
        refinement_iterations: args.iterations,
        refinement_shrink: args.shrink,
        seed: args.seed,
        oracle_check: args.oracle_check,
    };
    let result = match args.family {
        Family::Translation => simplex_hull::maximize_translation(&s, &cfg)?,
        Family::Point => simplex_hull::maximize_point_reflection(&s, &cfg)?,
        Family::Hyperplane => simplex_hull::maximize_hyperplane_reflection(&s, &cfg)?,
    };
    println!("{}", serde_json::to_string_pretty(&result)?);
    if let Some(path) = args.output {
        let mut csv = String::from("iteration,best_ratio\n");
        for entry in &result.trace {
            csv.push_str(&format!(
                "{},{}\n",
                entry.iteration,
                format_float(entry.best_ratio)
            ));
        }
        fs::write(path, csv)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle_hull(args: OracleArgs) -> Result<ExitCode, Error> {
    let text = fs::read_to_string(&args.points_file)?;
    let doc: PointSet = serde_json::from_str(&text)?;
    let points: Vec<Vector> = doc.points.into_iter().map(Vector::new).collect();
    let result = hull_volume(&points, doc.n)?;
    println!("volume = {}", format_float(result.volume));
    println!("facets = {}", result.facets.len());
    Ok(ExitCode::SUCCESS)
}
