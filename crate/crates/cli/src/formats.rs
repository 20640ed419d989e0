//! JSON file formats for clusters and column sets.

use std::path::Path;

use lenscluster_core::cluster2d::{Chamber, Edge, PolyCluster};
use lenscluster_core::symmetrize::{ColumnCluster, ColumnSet};
use lenscluster_core::weights::RawWeights;
use lenscluster_core::{Region, Vec2, WeightSystem};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChamberJson {
    pub id: u8,
    pub finite: bool,
    /// `null` for infinite chambers.
    pub target_volume: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub v: [usize; 2],
    pub label: [u8; 2],
}

/// Polygonal cluster file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClusterJson {
    #[serde(rename = "R_trunc")]
    pub r_trunc: f64,
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<EdgeJson>,
    pub chambers: Vec<ChamberJson>,
    #[serde(default)]
    pub pinned: Vec<usize>,
}

impl From<&PolyCluster> for ClusterJson {
    fn from(pc: &PolyCluster) -> Self {
        ClusterJson {
            r_trunc: pc.r_trunc,
            vertices: pc.vertices.iter().map(|p| [p.x, p.y]).collect(),
            edges: pc.edges.iter().map(|e| EdgeJson { v: e.v, label: [e.label.0, e.label.1] }).collect(),
            chambers: pc
                .chambers
                .iter()
                .map(|c| ChamberJson { id: c.id, finite: c.finite, target_volume: c.target_volume })
                .collect(),
            pinned: pc.pinned.clone(),
        }
    }
}

impl ClusterJson {
    /// Structural checks only; geometric validity is left to the
    /// cluster validator.
    pub fn into_cluster(self) -> CliResult<PolyCluster> {
        let n = self.vertices.len();
        let bad = |m: &str| Err(CliError::Usage(m.to_string()));
        if self.edges.iter().any(|e| e.v[0] >= n || e.v[1] >= n) || self.pinned.iter().any(|&v| v >= n) {
            return bad("edge or pinned index out of range");
        }
        if self.edges.iter().any(|e| e.label[0] == e.label[1] || e.label.iter().any(|&c| !(1..=3).contains(&c))) {
            return bad("edge labels must be two distinct chambers in 1..=3");
        }
        if !(self.r_trunc > 0.0) {
            return bad("R_trunc must be positive");
        }
        Ok(PolyCluster {
            r_trunc: self.r_trunc,
            vertices: self.vertices.iter().map(|p| Vec2::new(p[0], p[1])).collect(),
            edges: self.edges.iter().map(|e| Edge::new(e.v[0], e.v[1], e.label[0], e.label[1])).collect(),
            chambers: self
                .chambers
                .iter()
                .map(|c| Chamber { id: c.id, finite: c.finite, target_volume: c.target_volume })
                .collect(),
            pinned: self.pinned,
        })
    }
}

/// One base cell: chamber-1 intervals, or the interface height `t` when
/// the slice is empty and the file describes a cluster.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellJson {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub intervals: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
}

/// Column set file; with `a_strip` present it describes a column cluster.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColumnsJson {
    pub d: usize,
    pub h_base: f64,
    pub origin: [f64; 2],
    /// Required when `d = 2`; defaults to `[cells.len(), 1]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<[usize; 2]>,
    pub cells: Vec<CellJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_strip: Option<f64>,
}

pub enum Columns {
    Set(ColumnSet),
    Cluster(ColumnCluster),
}

impl ColumnsJson {
    pub fn from_set(e: &ColumnSet) -> Self {
        ColumnsJson {
            d: e.dim(),
            h_base: e.h_base(),
            origin: e.origin(),
            shape: (e.dim() == 2).then(|| e.shape()),
            cells: e
                .cells()
                .iter()
                .map(|c| CellJson { intervals: c.iter().map(|&(a, b)| [a, b]).collect(), t: None })
                .collect(),
            a_strip: None,
        }
    }

    pub fn from_cluster(x: &ColumnCluster) -> Self {
        let mut out = ColumnsJson::from_set(x.set1());
        for (cell, t) in out.cells.iter_mut().zip(x.heights()) {
            cell.t = *t;
        }
        out.a_strip = Some(x.a_strip());
        out
    }

    pub fn into_columns(self) -> CliResult<Columns> {
        let shape = match (self.shape, self.d) {
            (Some(s), _) => s,
            (None, 1) => [self.cells.len(), 1],
            (None, _) => return Err(CliError::Usage("shape is required for d = 2".into())),
        };
        let cells = self.cells.iter().map(|c| c.intervals.iter().map(|iv| (iv[0], iv[1])).collect()).collect();
        let set = ColumnSet::new(self.d, self.h_base, self.origin, shape, cells)?;
        match self.a_strip {
            None => {
                if self.cells.iter().any(|c| c.t.is_some()) {
                    return Err(CliError::Usage("interface heights need a_strip".into()));
                }
                Ok(Columns::Set(set))
            }
            Some(a) => {
                let heights = self.cells.iter().map(|c| c.t).collect();
                Ok(Columns::Cluster(ColumnCluster::new(set, heights, a)?))
            }
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

/// Pretty JSON with a trailing newline. serde_json prints the shortest
/// decimal that reads back to the same double.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn read_weights(path: &Path) -> CliResult<WeightSystem> {
    let raw: RawWeights = read_json(path)?;
    Ok(WeightSystem::try_from(raw)?)
}

pub fn read_cluster(path: &Path) -> CliResult<PolyCluster> {
    read_json::<ClusterJson>(path)?.into_cluster()
}

/// `ball:R`, `cyl:R` or `all`.
pub fn parse_region(s: &str) -> Result<Region, String> {
    if s == "all" {
        return Ok(Region::All);
    }
    let (kind, r) = s.split_once(':').ok_or_else(|| format!("expected ball:R, cyl:R or all, got {s:?}"))?;
    let r: f64 = r.parse().map_err(|_| format!("bad radius in {s:?}"))?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(format!("radius must be positive in {s:?}"));
    }
    match kind {
        "ball" => Ok(Region::Ball(r)),
        "cyl" | "cylinder" => Ok(Region::Cylinder(r)),
        _ => Err(format!("unknown region kind {kind:?}")),
    }
}
