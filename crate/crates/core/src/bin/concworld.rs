//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when an analysis fails, 2 on a usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use concworld::communities::{remove_and_partition, CommunityOptions, Method, SummaryGraph};
use concworld::ensemble::{EnsembleOptions, ErParams};
use concworld::io::{load_graph, LoadedGraph};
use concworld::layout::{hemicycle_layout, ClubMean, HemicycleOptions, Neighborhood};
use concworld::metrics::{
    structural_summary, BetweennessNorm, PathMeanConvention, Scope, StructuralIndices,
    SummaryOptions, INDEX_NAMES,
};
use concworld::report::{
    baseline_for, baseline_from_params, digest, export_dot, full_report, hemicycle_svg,
    rich_club_report, FullParams, InputInfo, ReportDocument, SeedPlan,
};
use concworld::richclub::{centrality_rows_to_csv, DEFAULT_RMIN, DEFAULT_TAU};
use concworld::{Error, Graph, Result};

#[derive(Parser, Debug, Serialize)]
#[command(name = "concworld", version, about = "Structural analysis of small dense undirected graphs")]
struct Cli {
    /// Master seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    #[serde(skip)]
    threads: Option<usize>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "PATH")]
    #[serde(skip)]
    json: Option<PathBuf>,
    /// Suppress the human-readable summary.
    #[arg(short, long, global = true)]
    #[serde(skip)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
enum Command {
    /// Structural indices of a graph.
    Stats {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        summary: SummaryArgs,
    },
    /// Erdős–Rényi baseline matched to a graph, or to explicit --n/--p.
    Baseline(BaselineArgs),
    /// Degree-ordered density profile and rich-club detection.
    Richclub {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        club: ClubArgs,
        /// Write the profile as CSV.
        #[arg(long, value_name = "PATH")]
        #[serde(skip)]
        csv: Option<PathBuf>,
        /// Write betweenness/closeness by degree rank as CSV.
        #[arg(long, value_name = "PATH")]
        #[serde(skip)]
        centrality_csv: Option<PathBuf>,
    },
    /// Community detection, optionally with the rich club removed.
    Communities {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        args: CommunityArgs,
        /// Remove the detected rich club before partitioning.
        #[arg(long)]
        exclude_richclub: bool,
        /// Remove these labels before partitioning (comma separated).
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<String>,
        #[command(flatten)]
        club: ClubArgs,
        /// Write the summary graph (stable communities when available) as DOT.
        #[arg(long, value_name = "PATH")]
        #[serde(skip)]
        dot: Option<PathBuf>,
    },
    /// Hemicycle layout around a rich club.
    Hemicycle {
        #[command(flatten)]
        input: Input,
        /// Club labels (comma separated) or `auto` to detect it.
        #[arg(long, value_delimiter = ',', required = true)]
        club: Vec<String>,
        #[command(flatten)]
        club_args: ClubArgs,
        #[command(flatten)]
        layout: LayoutArgs,
        #[arg(long, value_name = "PATH")]
        #[serde(skip)]
        svg: Option<PathBuf>,
    },
    /// Full pipeline: stats, baseline, rich club, communities without the
    /// club, hemicycle.
    Report {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        summary: SummaryArgs,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long)]
        connected_only: bool,
        #[command(flatten)]
        club: ClubArgs,
        #[command(flatten)]
        args: CommunityArgs,
        #[command(flatten)]
        layout: LayoutArgs,
        /// Write report.json, summary DOT files, hemicycle.svg and CSVs here.
        #[arg(long, value_name = "DIR")]
        #[serde(skip)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Serialize)]
struct Input {
    /// Edge list (CSV or TSV, `#` comments).
    edges: PathBuf,
    /// Optional vertex registry (`label,name`).
    #[arg(long, value_name = "PATH")]
    registry: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ScopeArg {
    Whole,
    Lcc,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum PathMeanArg {
    RowMean,
    ExcludeSelf,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum NormArg {
    OrderedPairs,
    Pairs,
}

#[derive(Args, Debug, Serialize)]
struct SummaryArgs {
    #[arg(long, value_enum, default_value = "whole")]
    scope: ScopeArg,
    /// Per-vertex mean distance divisor: component size or size - 1.
    #[arg(long, value_enum, default_value = "row-mean")]
    path_mean: PathMeanArg,
    /// Betweenness centralization normalisation.
    #[arg(long, value_enum, default_value = "ordered-pairs")]
    betweenness_norm: NormArg,
}

impl SummaryArgs {
    fn options(&self) -> SummaryOptions {
        SummaryOptions {
            scope: match self.scope {
                ScopeArg::Whole => Scope::WholeGraph,
                ScopeArg::Lcc => Scope::LargestComponent,
            },
            path_mean: match self.path_mean {
                PathMeanArg::RowMean => PathMeanConvention::RowMean,
                PathMeanArg::ExcludeSelf => PathMeanConvention::ExcludeSelf,
            },
            betweenness_norm: match self.betweenness_norm {
                NormArg::OrderedPairs => BetweennessNorm::OrderedPairs,
                NormArg::Pairs => BetweennessNorm::Pairs,
            },
        }
    }
}

#[derive(Args, Debug, Serialize)]
struct BaselineArgs {
    /// Graph whose order and density the baseline matches.
    edges: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    registry: Option<PathBuf>,
    #[arg(long, required_unless_present = "edges", requires = "p")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "edges", requires = "n")]
    p: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Average path metrics over connected samples only.
    #[arg(long)]
    connected_only: bool,
    #[command(flatten)]
    summary: SummaryArgs,
}

#[derive(Args, Debug, Serialize)]
struct ClubArgs {
    /// Rich-club density threshold.
    #[arg(long, default_value_t = DEFAULT_TAU)]
    tau: f64,
    /// Smallest club size considered.
    #[arg(long, default_value_t = DEFAULT_RMIN)]
    rmin: usize,
}

fn parse_method(s: &str) -> std::result::Result<Method, String> {
    Method::parse(s).ok_or_else(|| format!("unknown algorithm `{s}` (fg, spectral, walktrap)"))
}

#[derive(Args, Debug, Serialize)]
struct CommunityArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_method, default_value = "fg,spectral,walktrap")]
    algorithms: Vec<Method>,
    /// Walktrap walk length.
    #[arg(long, default_value_t = 4)]
    t: usize,
    /// Largest spectral cluster count (default ceil(sqrt(n)) + 2).
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long, default_value_t = 16)]
    restarts: usize,
    /// Smallest stable community reported.
    #[arg(long, default_value_t = 3)]
    smin: usize,
}

impl CommunityArgs {
    fn options(&self, seeds: SeedPlan) -> CommunityOptions {
        CommunityOptions {
            algorithms: self.algorithms.clone(),
            t: self.t,
            kmax: self.kmax,
            restarts: self.restarts,
            seed: seeds.spectral,
            smin: self.smin,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ClubMeanArg {
    Delta,
    DeltaSquared,
}

#[derive(Args, Debug, Serialize)]
struct LayoutArgs {
    /// Use closed neighborhoods in the dissimilarity.
    #[arg(long)]
    closed_neighborhoods: bool,
    #[arg(long, value_enum, default_value = "delta")]
    club_mean: ClubMeanArg,
}

impl LayoutArgs {
    fn options(&self) -> HemicycleOptions {
        HemicycleOptions {
            neighborhood: if self.closed_neighborhoods {
                Neighborhood::Closed
            } else {
                Neighborhood::Open
            },
            club_mean: match self.club_mean {
                ClubMeanArg::Delta => ClubMean::Delta,
                ClubMeanArg::DeltaSquared => ClubMean::DeltaSquared,
            },
            ..HemicycleOptions::default()
        }
    }
}

struct Loaded {
    graph: Graph,
    info: InputInfo,
}

fn load(path: &Path, registry: Option<&Path>) -> Result<Loaded> {
    let bytes = fs::read(path)?;
    let LoadedGraph {
        graph,
        duplicate_edges,
        ..
    } = load_graph(path, registry)?;
    let info = InputInfo {
        path: path.display().to_string(),
        digest: digest(&bytes),
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        duplicate_edges,
    };
    Ok(Loaded { graph, info })
}

fn write(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text)?;
    Ok(())
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "undefined".into(), |v| format!("{v:.4}"))
}

fn print_indices(ix: &StructuralIndices) {
    for (name, value) in INDEX_NAMES.iter().zip(ix.values()) {
        println!("  {name:<4} {}", fmt_opt(value));
    }
}

fn club_for(g: &Graph, club: &ClubArgs) -> Result<Vec<String>> {
    let report = rich_club_report(g, club.tau, club.rmin)?;
    report.club.map(|c| c.members).ok_or_else(|| {
        Error::Degenerate(format!(
            "no rich club of size >= {} at tau = {}",
            club.rmin, club.tau
        ))
    })
}

fn summary_to_show(summaries: &[SummaryGraph]) -> Option<&SummaryGraph> {
    summaries.last()
}

fn run(cli: &Cli) -> Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    }
    let seeds = SeedPlan::new(cli.seed);
    let quiet = cli.quiet || cli.json.as_deref() == Some(Path::new("-"));
    let (input, result): (Option<InputInfo>, serde_json::Value) = match &cli.command {
        Command::Stats { input, summary } => {
            let l = load(&input.edges, input.registry.as_deref())?;
            let ix = structural_summary(&l.graph, summary.options())?;
            if !quiet {
                println!("{} vertices, {} edges", l.info.vertices, l.info.edges);
                print_indices(&ix);
            }
            (Some(l.info), serde_json::to_value(&ix)?)
        }
        Command::Baseline(b) => {
            let opts = EnsembleOptions {
                summary: b.summary.options(),
                connected_only_paths: b.connected_only,
            };
            let (info, report) = match (&b.edges, b.n, b.p) {
                (_, Some(n), Some(p)) => (
                    None,
                    baseline_from_params(
                        ErParams {
                            n,
                            p,
                            samples: b.samples,
                            seed: seeds.baseline,
                        },
                        opts,
                    )?,
                ),
                (Some(path), _, _) => {
                    let l = load(path, b.registry.as_deref())?;
                    (Some(l.info), baseline_for(&l.graph, b.samples, seeds.baseline, opts)?)
                }
                _ => unreachable!("clap enforces an input"),
            };
            if !quiet {
                println!(
                    "G(n={}, p={:.4}), {} samples",
                    report.params.n, report.params.p, report.params.samples
                );
                for s in &report.ensemble.indices {
                    println!("  {:<4} mean {} sd {}", s.name, fmt_opt(s.mean), fmt_opt(s.sd));
                }
            }
            (info, serde_json::to_value(&report)?)
        }
        Command::Richclub {
            input,
            club,
            csv,
            centrality_csv,
        } => {
            let l = load(&input.edges, input.registry.as_deref())?;
            let report = rich_club_report(&l.graph, club.tau, club.rmin)?;
            if let Some(p) = csv {
                write(p, &report.profile.to_csv())?;
            }
            if let Some(p) = centrality_csv {
                write(p, &centrality_rows_to_csv(&report.centrality))?;
            }
            if !quiet {
                match &report.club {
                    Some(c) => println!(
                        "rich club of {} (density {:.4}, {} missing edges): {}",
                        c.size,
                        c.internal_density,
                        c.missing_edges,
                        c.members.join(" ")
                    ),
                    None => println!("no rich club at tau = {}", club.tau),
                }
            }
            (Some(l.info), serde_json::to_value(&report)?)
        }
        Command::Communities {
            input,
            args,
            exclude_richclub,
            exclude,
            club,
            dot,
        } => {
            let l = load(&input.edges, input.registry.as_deref())?;
            let mut excluded = exclude.clone();
            if *exclude_richclub {
                excluded.extend(club_for(&l.graph, club)?);
            }
            let analysis = remove_and_partition(&l.graph, &excluded, &args.options(seeds))?;
            if let (Some(p), Some(s)) = (dot, summary_to_show(&analysis.summaries)) {
                write(p, &export_dot(s))?;
            }
            if !quiet {
                println!(
                    "{} vertices partitioned ({} excluded)",
                    analysis.analyzed_vertices,
                    analysis.excluded.len()
                );
                for p in &analysis.partitions {
                    println!("  {:<12} {} classes, M = {:.4}", p.method.name(), p.len(), p.modularity);
                }
                if let Some(stable) = &analysis.stable {
                    for (i, s) in stable.iter().enumerate() {
                        println!("  stable {}: {}", i + 1, s.join(" "));
                    }
                }
            }
            (Some(l.info), serde_json::to_value(&analysis)?)
        }
        Command::Hemicycle {
            input,
            club,
            club_args,
            layout,
            svg,
        } => {
            let l = load(&input.edges, input.registry.as_deref())?;
            let members = if club.len() == 1 && club[0] == "auto" {
                club_for(&l.graph, club_args)?
            } else {
                club.clone()
            };
            let lay = hemicycle_layout(&l.graph, &members, &layout.options())?;
            if let Some(p) = svg {
                write(p, &hemicycle_svg(&lay))?;
            }
            if !quiet {
                for v in &lay.skipped {
                    eprintln!("warning: isolated vertex `{v}` left out of the layout");
                }
                println!("club: {}", lay.club.join(" "));
                println!(
                    "{} vertices placed, first component vs club distance r = {}",
                    lay.points.len(),
                    fmt_opt(lay.diagnostic_correlation)
                );
            }
            (Some(l.info), serde_json::to_value(&lay)?)
        }
        Command::Report {
            input,
            summary,
            samples,
            connected_only,
            club,
            args,
            layout,
            out_dir,
        } => {
            let l = load(&input.edges, input.registry.as_deref())?;
            let params = FullParams {
                summary: summary.options(),
                samples: *samples,
                connected_only_paths: *connected_only,
                tau: club.tau,
                rmin: club.rmin,
                communities: args.options(seeds),
                hemicycle: layout.options(),
            };
            let report = full_report(&l.graph, &params, seeds)?;
            if let Some(dir) = out_dir {
                fs::create_dir_all(dir)?;
                for s in &report.communities.summaries {
                    write(&dir.join(format!("summary_{}.dot", s.title)), &export_dot(s))?;
                }
                if let Some(lay) = &report.hemicycle {
                    write(&dir.join("hemicycle.svg"), &hemicycle_svg(lay))?;
                }
                write(&dir.join("richclub.csv"), &report.richclub.profile.to_csv())?;
                write(
                    &dir.join("centrality.csv"),
                    &centrality_rows_to_csv(&report.richclub.centrality),
                )?;
                let doc = ReportDocument::new("report", Some(l.info.clone()), seeds, cli, &report)?;
                write(&dir.join("report.json"), &doc.to_json()?)?;
            }
            if !quiet {
                println!("{} vertices, {} edges", l.info.vertices, l.info.edges);
                print_indices(&report.stats);
                match &report.richclub.club {
                    Some(c) => println!("rich club ({}): {}", c.size, c.members.join(" ")),
                    None => println!("no rich club"),
                }
                if let Some(stable) = &report.communities.stable {
                    println!("{} stable communities", stable.len());
                }
                for n in &report.notes {
                    println!("note: {n}");
                }
            }
            (Some(l.info), serde_json::to_value(&report)?)
        }
    };
    if let Some(path) = &cli.json {
        let doc = ReportDocument::new(command_name(&cli.command), input, seeds, cli, &result)?;
        let text = doc.to_json()?;
        if path.as_os_str() == "-" {
            print!("{text}");
        } else {
            write(path, &text)?;
        }
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Stats { .. } => "stats",
        Command::Baseline(_) => "baseline",
        Command::Richclub { .. } => "richclub",
        Command::Communities { .. } => "communities",
        Command::Hemicycle { .. } => "hemicycle",
        Command::Report { .. } => "report",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
