//! Thin command-line front end over the `islands` library.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a checked
//! property fails (a bound is violated or a certification does not pass).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use islands::bounds::{
    bound_corollary3, bound_planar4_improved, bound_theorem1, bound_theorem2,
    lower_bound_empty_simplices, lower_bound_islands, BoundValue,
};
use islands::canonical::{
    canonical_ordering, check_box_containment, check_canonical_conditions, delta_star_contains_all,
};
use islands::enumerate::{count_k_subsets, largest_hole_size, SubsetKind};
use islands::experiments::{growth_experiment, monte_carlo, GrowthSource};
use islands::horton::{horton_d, verify_horton_capped, HortonParams, VERIFY_DEFAULT_CAP};
use islands::pointset::{parse_pointset, pointset_from_json, pointset_to_json, serialize_pointset};
use islands::rational::{format_rational, to_f64};
use islands::sampler::{sample_set, ConvexBody};
use islands::{Error, PointSet, Result};

#[derive(Parser)]
#[command(name = "islands", version, about = "Exact holes and islands in finite point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Seed for anything randomized.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Size of the rayon thread pool (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Override the applicable size cap of the subcommand.
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Hole,
    Island,
    Convex,
}

impl From<Kind> for SubsetKind {
    fn from(k: Kind) -> SubsetKind {
        match k {
            Kind::Hole => SubsetKind::Hole,
            Kind::Island => SubsetKind::Island,
            Kind::Convex => SubsetKind::Convex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample n uniform points from a unit-volume convex body.
    Sample {
        /// Body: cube, simplex or ball.
        #[arg(long, default_value = "cube")]
        body: String,
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        #[arg(long, short)]
        n: usize,
    },
    /// Count k-holes, k-islands or convex-position k-subsets of a point set.
    Count {
        /// Point-set file (text or JSON); omit to sample instead.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "cube")]
        body: String,
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        /// Number of points when sampling.
        #[arg(long, short)]
        n: Option<usize>,
        #[arg(long, short)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Kind::Hole)]
        kind: Kind,
    },
    /// Canonical ordering of a point set, with both certificates.
    Canonical {
        #[arg(long)]
        input: PathBuf,
        /// Check a given ordering (comma-separated indices) instead of
        /// computing the canonical one.
        #[arg(long, value_delimiter = ',')]
        check: Option<Vec<usize>>,
        /// Enable the unit-volume clause of the box certificate.
        #[arg(long)]
        unit_volume: bool,
    },
    /// Construct a certified d-dimensional Horton set.
    Horton {
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        #[arg(long, short)]
        n: usize,
    },
    /// Certify that a point set satisfies the recursive Horton definition.
    VerifyHorton {
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate the closed-form expectation bounds for given d, k, n.
    Bounds {
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        #[arg(long, short)]
        k: usize,
        #[arg(long, short)]
        n: usize,
    },
    /// Monte Carlo estimate of the expected k-hole/k-island count, checked
    /// against the closed-form bounds.
    Estimate {
        #[arg(long, default_value = "cube")]
        body: String,
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        #[arg(long, short)]
        k: usize,
        #[arg(long, short)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Kind::Hole)]
        kind: Kind,
    },
    /// Growth of island counts across a range of sizes, with a fitted slope.
    Growth {
        /// random: all-island counts of sampled sets; horton: fixed-k counts.
        #[arg(long, default_value = "random")]
        source: String,
        #[arg(long, default_value = "cube")]
        body: String,
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        /// Island size for the horton source.
        #[arg(long, short)]
        k: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Size of the largest hole of a point set.
    LargestHole {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "cube")]
        body: String,
        #[arg(long, short, default_value_t = 2)]
        dim: usize,
        #[arg(long, short)]
        n: Option<usize>,
    },
}

fn read_pointset(path: &PathBuf) -> Result<PointSet> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        pointset_from_json(&text)
    } else {
        parse_pointset(&text)
    }
}

fn load_or_sample(
    input: &Option<PathBuf>,
    body: &str,
    dim: usize,
    n: Option<usize>,
    seed: u64,
) -> Result<PointSet> {
    match input {
        Some(path) => read_pointset(path),
        None => {
            let n = n.ok_or_else(|| {
                Error::InvalidArgument("need either --input or --n (to sample)".into())
            })?;
            sample_set(&ConvexBody::from_name(body, dim)?, n, seed)
        }
    }
}

fn emit(common: &Common, content: &str) -> Result<()> {
    match &common.out {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn format_pointset(set: &PointSet, format: Format) -> String {
    match format {
        Format::Text => serialize_pointset(set),
        Format::Json => pointset_to_json(set),
        Format::Csv => {
            let header: Vec<String> = (0..set.dim()).map(|i| format!("x{i}")).collect();
            let mut out = header.join(",");
            out.push('\n');
            for p in set.points() {
                let row: Vec<String> = p.coords().iter().map(format_rational).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
    }
}

fn bounds_table(d: usize, k: usize, n: usize) -> Result<Vec<BoundValue>> {
    let mut rows = vec![bound_theorem1(d, k, n)?, bound_theorem2(d, k, n)?];
    if k == d + 1 {
        rows.push(bound_corollary3(d, n)?);
        rows.push(lower_bound_empty_simplices(d, n)?);
    }
    if d == 2 && k == 4 {
        rows.push(bound_planar4_improved(n)?);
    }
    rows.push(lower_bound_islands(d, k, n)?);
    Ok(rows)
}

fn format_bounds(rows: &[BoundValue], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("formula,d,k,n,value,value_f64\n");
            for b in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    b.formula_id,
                    b.d,
                    b.k.map(|k| k.to_string()).unwrap_or_default(),
                    b.n,
                    format_rational(&b.value),
                    to_f64(&b.value),
                ));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|b| {
                    json!({
                        "formula": b.formula_id,
                        "d": b.d,
                        "k": b.k,
                        "n": b.n,
                        "value": format_rational(&b.value),
                        "value_f64": to_f64(&b.value),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&items).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            for b in rows {
                out.push_str(&format!(
                    "{:<22} {:>24}  ({:.6e})\n",
                    b.formula_id,
                    format_rational(&b.value),
                    to_f64(&b.value)
                ));
            }
            out
        }
    }
}

/// Runs one subcommand; Ok(true) means every checked property passed.
fn run(cli: &Cli) -> Result<bool> {
    let common = &cli.common;
    match &cli.command {
        Command::Sample { body, dim, n } => {
            let set = sample_set(&ConvexBody::from_name(body, *dim)?, *n, common.seed)?;
            emit(common, &format_pointset(&set, common.format))?;
            Ok(true)
        }
        Command::Count {
            input,
            body,
            dim,
            n,
            k,
            kind,
        } => {
            let set = load_or_sample(input, body, *dim, *n, common.seed)?;
            let result = count_k_subsets(&set, *k, (*kind).into())?;
            let content = match common.format {
                Format::Csv => format!(
                    "kind,d,k,n,count\n{},{},{},{},{}\n",
                    result.kind.name(),
                    set.dim(),
                    k,
                    result.n,
                    result.value
                ),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "kind": result.kind.name(),
                        "d": set.dim(),
                        "k": k,
                        "n": result.n,
                        "count": result.value.to_string(),
                    }))
                    .expect("serializable")
                ),
                Format::Text => format!(
                    "{} {}-{}s among {} points in R^{}\n",
                    result.value,
                    k,
                    result.kind.name(),
                    result.n,
                    set.dim()
                ),
            };
            emit(common, &content)?;
            Ok(true)
        }
        Command::Canonical {
            input,
            check,
            unit_volume,
        } => {
            let q = read_pointset(input)?;
            let (perm, a, volume, flags) = match check {
                Some(perm) => {
                    let report = check_canonical_conditions(&q, perm)?;
                    (perm.clone(), None, None, report.flags)
                }
                None => {
                    let report = canonical_ordering(&q)?;
                    (
                        report.permutation.clone(),
                        Some(report.a),
                        Some(report.delta_volume.clone()),
                        report.condition_flags,
                    )
                }
            };
            let all_pass = flags.iter().all(|&f| f);
            let delta_star = all_pass && delta_star_contains_all(&q, &perm)?;
            let box_ok = all_pass && check_box_containment(&q, &perm, *unit_volume)?;
            let content = match common.format {
                Format::Csv => format!(
                    "permutation,a,volume,conditions,delta_star,box\n{},{},{},{},{},{}\n",
                    perm.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "),
                    a.map(|a| a.to_string()).unwrap_or_default(),
                    volume.as_ref().map(format_rational).unwrap_or_default(),
                    all_pass,
                    delta_star,
                    box_ok
                ),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "permutation": perm,
                        "a": a,
                        "delta_volume": volume.as_ref().map(format_rational),
                        "condition_flags": flags,
                        "delta_star_contains_all": delta_star,
                        "box_containment": box_ok,
                    }))
                    .expect("serializable")
                ),
                Format::Text => {
                    let mut s = format!("ordering: {perm:?}\n");
                    if let Some(a) = a {
                        s.push_str(&format!("a (points inside the simplex): {a}\n"));
                    }
                    if let Some(v) = &volume {
                        s.push_str(&format!("simplex volume: {}\n", format_rational(v)));
                    }
                    s.push_str(&format!("conditions: {flags:?}\n"));
                    s.push_str(&format!("enlarged simplex contains Q: {delta_star}\n"));
                    s.push_str(&format!("box containment: {box_ok}\n"));
                    s
                }
            };
            emit(common, &content)?;
            Ok(all_pass && delta_star && box_ok)
        }
        Command::Horton { dim, n } => {
            let set = horton_d(*dim, *n, &HortonParams::new(*dim, *n))?;
            emit(common, &format_pointset(&set, common.format))?;
            Ok(true)
        }
        Command::VerifyHorton { input } => {
            let set = read_pointset(input)?;
            let cap = common.cap.unwrap_or(VERIFY_DEFAULT_CAP);
            let report = verify_horton_capped(&set, cap)?;
            let content = match common.format {
                Format::Csv => format!(
                    "strongly_general,projection_ok,classes_ok,partitions_ok,pass\n{},{},{},{},{}\n",
                    report.strongly_general,
                    report.projection_ok,
                    report.classes_ok,
                    report.partitions_ok,
                    report.all_ok()
                ),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report).expect("serializable")
                ),
                Format::Text => {
                    let mut s = format!(
                        "strongly general position: {}\nprojection clause: {}\nclass clause: {}\npartition clause: {}\n",
                        report.strongly_general,
                        report.projection_ok,
                        report.classes_ok,
                        report.partitions_ok
                    );
                    for w in &report.witnesses {
                        s.push_str(&format!("  witness: {w}\n"));
                    }
                    s.push_str(&format!("certified: {}\n", report.all_ok()));
                    s
                }
            };
            emit(common, &content)?;
            Ok(report.all_ok())
        }
        Command::Bounds { dim, k, n } => {
            let rows = bounds_table(*dim, *k, *n)?;
            emit(common, &format_bounds(&rows, common.format))?;
            Ok(true)
        }
        Command::Estimate {
            body,
            dim,
            k,
            n,
            trials,
            kind,
        } => {
            let body = ConvexBody::from_name(body, *dim)?;
            let report = monte_carlo(&body, *k, *n, *trials, common.seed, (*kind).into())?;
            let content = match common.format {
                Format::Csv => report.to_csv(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => report.to_text(),
            };
            emit(common, &content)?;
            Ok(report.pass())
        }
        Command::Growth {
            source,
            body,
            dim,
            k,
            sizes,
            trials,
        } => {
            let source = match source.as_str() {
                "random" => GrowthSource::RandomBody(ConvexBody::from_name(body, *dim)?),
                "horton" => GrowthSource::Horton {
                    d: *dim,
                    k: k.ok_or_else(|| {
                        Error::InvalidArgument("the horton source needs --k".into())
                    })?,
                },
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown source '{other}'; expected random or horton"
                    )))
                }
            };
            let report = growth_experiment(&source, sizes, *trials, common.seed, common.cap)?;
            let content = match common.format {
                Format::Csv => report.to_csv(),
                Format::Json => format!("{}\n", report.to_json()),
                Format::Text => report.to_text(),
            };
            emit(common, &content)?;
            Ok(true)
        }
        Command::LargestHole {
            input,
            body,
            dim,
            n,
        } => {
            let set = load_or_sample(input, body, *dim, *n, common.seed)?;
            let size = largest_hole_size(&set, common.cap)?;
            let content = match common.format {
                Format::Csv => format!("d,n,largest_hole\n{},{},{}\n", set.dim(), set.len(), size),
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "d": set.dim(),
                        "n": set.len(),
                        "largest_hole": size,
                    }))
                    .expect("serializable")
                ),
                Format::Text => format!(
                    "largest hole among {} points in R^{}: {}\n",
                    set.len(),
                    set.dim(),
                    size
                ),
            };
            emit(common, &content)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version output are not errors.
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(threads) = cli.common.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
