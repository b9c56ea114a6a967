use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use magic_fill::census::{load_census, verify_row, Report};
use magic_fill::farey::{BoundaryClass, Slope};
use magic_fill::filling::{
    boundary_count, classify_pair, execute, plan_filling, plan_for_seed, secondary_slope, type_parameter, FillingPlan,
    KnotType,
};
use magic_fill::seeds::{build_seed, SeedId};
use magic_fill::triangulation::{
    export_gluing_table, export_json, first_homology, import_gluing_table, import_json, iso_signature, Triangulation,
};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "magic-fill", version, about = "Triangulated Dehn fillings of the magic manifold")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a triangulation of M(rs, tu) with its tetrahedron breakdown.
    Fill {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        rs: Slope,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        tu: Slope,
        /// `auto` or one of T1, T2, T2p, T3, T4h, T5h.
        #[arg(long, default_value = "auto")]
        seed: String,
        #[arg(long, value_enum, ignore_case = true, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the knot type of M(rs, tu), or "not a knot filling".
    Classify {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        rs: Slope,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        tu: Slope,
    },
    /// Tetrahedra needed to fill a boundary class along a slope.
    Count {
        /// P, Q, R, Rp, Uh or Vh.
        #[arg(long, value_parser = parse_boundary)]
        boundary: BoundaryClass,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        slope: Slope,
    },
    /// Secondary slopes and plan sizes along a family.
    Family {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_slope)]
        primary: Slope,
        #[arg(long = "type", value_enum, ignore_case = true, default_value_t = Kind::A)]
        kind: Kind,
        /// Inclusive index range `a..b`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: (i64, i64),
    },
    /// Rebuild and check every census row.
    VerifyCensus {
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// First homology of a gluing table (text or JSON).
    Homology { file: PathBuf },
    /// Canonical isomorphism signature of a gluing table (text or JSON).
    Isosig { file: PathBuf },
    /// Gluing table of a seed's core.
    ExportSeed {
        #[arg(value_parser = parse_seed)]
        id: SeedId,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    A,
    B,
    C,
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: magic_fill::Error| e.to_string())
}

fn parse_boundary(s: &str) -> Result<BoundaryClass, String> {
    s.parse().map_err(|e: magic_fill::Error| e.to_string())
}

fn parse_seed(s: &str) -> Result<SeedId, String> {
    s.parse().map_err(|e: magic_fill::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// A failed command: usage problems exit 2, failed verification exits 1.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<magic_fill::Error> for Failure {
    fn from(e: magic_fill::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Fill { rs, tu, seed, format, out } => {
            let plan = choose_plan(rs, tu, &seed)?;
            let result = execute(&plan)?;
            let text = match format {
                Format::Table => {
                    let (a, b, c) = result.actual_counts;
                    format!(
                        "# M({rs}, {tu}) via {}: {} + {} + {} = {} tetrahedra\n{}",
                        plan.seed,
                        a,
                        b,
                        c,
                        a + b + c,
                        export_gluing_table(&result.triangulation)
                    )
                }
                Format::Json => {
                    let (a, b, c) = result.actual_counts;
                    let triangulation: serde_json::Value =
                        serde_json::from_str(&export_json(&result.triangulation)).expect("valid JSON");
                    let doc = serde_json::json!({
                        "rs": rs.to_string(),
                        "tu": tu.to_string(),
                        "seed": plan.seed.name(),
                        "counts": [a, b, c],
                        "total": a + b + c,
                        "triangulation": triangulation,
                    });
                    serde_json::to_string_pretty(&doc).expect("serialisable") + "\n"
                }
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Classify { rs, tu } => match classify_pair(rs, tu) {
            Some(ty) => println!("{ty}"),
            None => println!("not a knot filling"),
        },
        Command::Count { boundary, slope } => match boundary_count(boundary, slope) {
            Some(n) => println!("{n}"),
            None => return Err(Failure::Usage(format!("{boundary} cannot be filled along {slope}"))),
        },
        Command::Family { primary, kind, range } => family(primary, kind, range)?,
        Command::VerifyCensus { parallel } => verify_census(parallel)?,
        Command::Homology { file } => println!("{}", first_homology(&read_triangulation(&file)?)?),
        Command::Isosig { file } => println!("{}", iso_signature(&read_triangulation(&file)?)?),
        Command::ExportSeed { id } => print!("{}", export_gluing_table(&build_seed(id).core)),
    }
    Ok(())
}

/// The automatic plan, or the cheaper slope order on a requested seed.
fn choose_plan(rs: Slope, tu: Slope, seed: &str) -> Result<FillingPlan, Failure> {
    if seed == "auto" {
        return Ok(plan_filling(rs, tu)?);
    }
    let id: SeedId = seed.parse()?;
    [(rs, tu), (tu, rs)]
        .into_iter()
        .filter_map(|(a, b)| plan_for_seed(id, a, b))
        .min_by_key(FillingPlan::total)
        .ok_or_else(|| Failure::Usage(format!("{id} cannot realise M({rs}, {tu})")))
}

fn family(primary: Slope, kind: Kind, (lo, hi): (i64, i64)) -> Result<(), Failure> {
    let ty = match kind {
        Kind::A => KnotType::A,
        Kind::B => KnotType::B(type_parameter(primary, 2).ok_or(magic_fill::Error::NotTypeParameter(primary, 2))?),
        Kind::C => KnotType::C(type_parameter(primary, 3).ok_or(magic_fill::Error::NotTypeParameter(primary, 3))?),
    };
    println!("{:>5}  {:>12}  {:>4}  plan", "n", "secondary", "tets");
    for n in lo..=hi {
        let s = secondary_slope(ty, primary, n)?;
        let shown = s.to_string();
        match plan_filling(primary, s) {
            Ok(plan) => {
                let (a, b, c) = plan.predicted_counts;
                println!("{n:>5}  {shown:>12}  {:>4}  {} {a}+{b}+{c}", plan.total(), plan.seed);
            }
            Err(_) => println!("{n:>5}  {shown:>12}  {:>4}  not a knot filling", "-"),
        }
    }
    Ok(())
}

fn verify_census(parallel: Option<usize>) -> Result<(), Failure> {
    let rows = load_census()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = parallel {
        if n == 0 {
            return Err(Failure::Usage("--parallel must be at least 1".into()));
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(e.to_string()))?;
    let reports: Vec<Report> = pool.install(|| rows.par_iter().map(verify_row).collect());
    for report in &reports {
        println!("{report}");
    }
    let ok = reports.iter().filter(|r| r.passed()).count();
    let summary = format!("{ok}/{} ok", reports.len());
    if ok == reports.len() {
        println!("{summary}");
        Ok(())
    } else {
        Err(Failure::Verification(summary))
    }
}

fn read_triangulation(path: &PathBuf) -> Result<Triangulation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    // `fill` output starts with a `#` summary line.
    let text: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    if !text.trim_start().starts_with('{') {
        return Ok(import_gluing_table(&text)?);
    }
    // Accept `fill --format json` output as well as a bare table.
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
    match value.get("triangulation") {
        Some(inner) => Ok(import_json(&inner.to_string())?),
        None => Ok(import_json(&text)?),
    }
}
