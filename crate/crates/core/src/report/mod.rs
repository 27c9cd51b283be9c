//! Self-describing JSON reports, the full analysis pipeline, and the DOT and
//! SVG emitters.
//!
//! Every randomised step draws from one master seed. Module seeds are
//! `derive_seed(master, name)` with the names `"baseline"` (ER ensemble)
//! and `"communities.spectral"` (k-means restarts); see [`SeedPlan`].

mod dot;
mod svg;

pub use dot::export_dot;
pub use svg::hemicycle_svg;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::communities::{remove_and_partition, CommunityOptions, RemovalAnalysis};
use crate::ensemble::{ensemble_summary, EnsembleOptions, EnsembleSummary, ErParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{hemicycle_layout, HemicycleLayout, HemicycleOptions};
use crate::metrics::{density, structural_summary, StructuralIndices, SummaryOptions};
use crate::richclub::{
    centrality_by_degree_report, detect_rich_club, rich_club_profile, CentralityRow,
    RichClubProfile, RichClubResult,
};
use crate::rng::derive_seed;

pub const TOOL: &str = "concworld";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `sha256:<hex>` of the raw input bytes.
pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedPlan {
    pub master: u64,
    pub baseline: u64,
    pub spectral: u64,
}

impl SeedPlan {
    pub fn new(master: u64) -> Self {
        Self {
            master,
            baseline: derive_seed(master, "baseline"),
            spectral: derive_seed(master, "communities.spectral"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputInfo {
    pub path: String,
    pub digest: String,
    pub vertices: usize,
    pub edges: usize,
    pub duplicate_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: Option<InputInfo>,
    pub seeds: SeedPlan,
    pub parameters: serde_json::Value,
    pub result: serde_json::Value,
}

impl ReportDocument {
    pub fn new<P: Serialize, R: Serialize>(
        command: &str,
        input: Option<InputInfo>,
        seeds: SeedPlan,
        parameters: &P,
        result: &R,
    ) -> Result<Self> {
        Ok(Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            command: command.into(),
            input,
            seeds,
            parameters: serde_json::to_value(parameters)?,
            result: serde_json::to_value(result)?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineReport {
    pub params: ErParams,
    /// Indices of the analysed graph, when the baseline was derived from one.
    pub observed: Option<StructuralIndices>,
    pub ensemble: EnsembleSummary,
}

/// ER baseline `G(n, d)` matched to `g`'s order and density.
pub fn baseline_for(
    g: &Graph,
    samples: usize,
    seed: u64,
    opts: EnsembleOptions,
) -> Result<BaselineReport> {
    let params = ErParams {
        n: g.vertex_count(),
        p: density(g)?,
        samples,
        seed,
    };
    Ok(BaselineReport {
        observed: Some(structural_summary(g, opts.summary)?),
        ensemble: ensemble_summary(&params, opts)?,
        params,
    })
}

pub fn baseline_from_params(params: ErParams, opts: EnsembleOptions) -> Result<BaselineReport> {
    Ok(BaselineReport {
        observed: None,
        ensemble: ensemble_summary(&params, opts)?,
        params,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RichClubReport {
    pub tau: f64,
    pub rmin: usize,
    pub club: Option<RichClubResult>,
    pub profile: RichClubProfile,
    pub centrality: Vec<CentralityRow>,
}

pub fn rich_club_report(g: &Graph, tau: f64, rmin: usize) -> Result<RichClubReport> {
    let profile = rich_club_profile(g)?;
    Ok(RichClubReport {
        tau,
        rmin,
        club: detect_rich_club(&profile, tau, rmin)?,
        centrality: centrality_by_degree_report(g)?,
        profile,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullParams {
    pub summary: SummaryOptions,
    pub samples: usize,
    pub connected_only_paths: bool,
    pub tau: f64,
    pub rmin: usize,
    pub communities: CommunityOptions,
    pub hemicycle: HemicycleOptions,
}

impl FullParams {
    pub fn new(seeds: SeedPlan) -> Self {
        Self {
            summary: SummaryOptions::default(),
            samples: 10_000,
            connected_only_paths: false,
            tau: crate::richclub::DEFAULT_TAU,
            rmin: crate::richclub::DEFAULT_RMIN,
            communities: CommunityOptions {
                seed: seeds.spectral,
                ..CommunityOptions::default()
            },
            hemicycle: HemicycleOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub stats: StructuralIndices,
    pub baseline: BaselineReport,
    pub richclub: RichClubReport,
    pub communities: RemovalAnalysis,
    pub hemicycle: Option<HemicycleLayout>,
    pub notes: Vec<String>,
}

/// stats → baseline → rich club → communities without the club → hemicycle.
pub fn full_report(g: &Graph, params: &FullParams, seeds: SeedPlan) -> Result<FullReport> {
    let mut notes = Vec::new();
    let stats = structural_summary(g, params.summary)?;
    let baseline = baseline_for(
        g,
        params.samples,
        seeds.baseline,
        EnsembleOptions {
            summary: params.summary,
            connected_only_paths: params.connected_only_paths,
        },
    )?;
    let richclub = rich_club_report(g, params.tau, params.rmin)?;
    let club: Vec<String> = richclub
        .club
        .as_ref()
        .map(|c| c.members.clone())
        .unwrap_or_default();
    if club.is_empty() {
        notes.push(format!(
            "no rich club at tau = {}; communities use the whole graph and the hemicycle is skipped",
            params.tau
        ));
    }
    let communities = remove_and_partition(g, &club, &params.communities)?;
    let hemicycle = if club.is_empty() {
        None
    } else {
        match hemicycle_layout(g, &club, &params.hemicycle) {
            Ok(layout) => {
                for v in &layout.skipped {
                    notes.push(format!("isolated vertex `{v}` left out of the hemicycle"));
                }
                Some(layout)
            }
            Err(e @ (Error::Degenerate(_) | Error::InvalidParameter(_))) => {
                notes.push(format!("hemicycle skipped: {e}"));
                None
            }
            Err(e) => return Err(e),
        }
    };
    Ok(FullReport {
        stats,
        baseline,
        richclub,
        communities,
        hemicycle,
        notes,
    })
}
