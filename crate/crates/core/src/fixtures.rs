//! On-disk fixture bundles.
//!
//! A bundle directory holds `manifest.json`, `triangulations.json`, `curves.json`,
//! `graphs.json`, `flips.json`, `drawn.json` and one file per identity under
//! `identities/`. Graphs and identities belong to a named triangulation, whose
//! variable table they share.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::calculus::{CalculusError, Heights, Identity, IdentityJson, TermJson};
use crate::laurent::VarTable;
use crate::orbifold::{Curve, Triangulation};
use crate::snakegraph::Graph;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
    #[error("identity `{name}`: {source}")]
    Identity { name: String, source: CalculusError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Read off a published relation or drawing.
    Published,
    /// Computed by this crate or an independent oracle.
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub provenance: Provenance,
    pub source: String,
}

/// Keys are `<kind>:<name>` with kind one of triangulation, curve, graph, flips,
/// identity, drawn.
pub type Manifest = BTreeMap<String, ManifestEntry>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub triangulation: String,
    pub curve: Curve,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEntry {
    pub triangulation: String,
    pub graph: Graph,
}

/// A flip sequence from the initial seed reaching the variable of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipEntry {
    pub curve: String,
    pub sequence: Vec<usize>,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFile {
    pub triangulation: String,
    #[serde(flatten)]
    pub identity: IdentityJson,
}

/// A relation as drawn, with the conditions under which it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrawnEntry {
    pub triangulation: String,
    pub lhs: Vec<TermJson>,
    pub rhs: Vec<TermJson>,
    /// The verified identity this drawing corresponds to.
    pub reading_of: String,
    /// Conditions under which the drawn relation holds exactly.
    pub holds_with: Conditions,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Conditions {
    #[serde(default)]
    pub heights: Heights,
    /// x-variables set to 1.
    #[serde(default)]
    pub unit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Bundle {
    pub manifest: Manifest,
    pub triangulations: BTreeMap<String, Triangulation>,
    pub curves: BTreeMap<String, CurveEntry>,
    pub graphs: BTreeMap<String, GraphEntry>,
    pub flips: BTreeMap<String, FlipEntry>,
    pub identities: BTreeMap<String, IdentityFile>,
    pub drawn: BTreeMap<String, DrawnEntry>,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FixtureError> {
    let text = fs::read_to_string(path).map_err(|source| FixtureError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| FixtureError::Json { path: path.into(), source })
}

fn read_optional<T: DeserializeOwned + Default>(path: &Path) -> Result<T, FixtureError> {
    if path.exists() {
        read_json(path)
    } else {
        Ok(T::default())
    }
}

fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<(), FixtureError> {
    let mut text = serde_json::to_string_pretty(v).expect("fixtures serialize");
    text.push('\n');
    fs::write(path, text).map_err(|source| FixtureError::Io { path: path.into(), source })
}

pub fn read_identity_file(path: &Path) -> Result<IdentityFile, FixtureError> {
    read_json(path)
}

impl Bundle {
    pub fn load(dir: &Path) -> Result<Bundle, FixtureError> {
        let mut identities = BTreeMap::new();
        let idir = dir.join("identities");
        if idir.is_dir() {
            let mut paths: Vec<PathBuf> = fs::read_dir(&idir)
                .map_err(|source| FixtureError::Io { path: idir.clone(), source })?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            paths.sort();
            for p in paths {
                let f: IdentityFile = read_json(&p)?;
                if identities.insert(f.identity.name.clone(), f).is_some() {
                    return Err(FixtureError::Invalid(format!("{}: duplicate identity name", p.display())));
                }
            }
        }
        let b = Bundle {
            manifest: read_json(&dir.join("manifest.json"))?,
            triangulations: read_json(&dir.join("triangulations.json"))?,
            curves: read_optional(&dir.join("curves.json"))?,
            graphs: read_optional(&dir.join("graphs.json"))?,
            flips: read_optional(&dir.join("flips.json"))?,
            identities,
            drawn: read_optional(&dir.join("drawn.json"))?,
        };
        b.check()?;
        Ok(b)
    }

    pub fn save(&self, dir: &Path) -> Result<(), FixtureError> {
        let io = |path: &Path, source| FixtureError::Io { path: path.into(), source };
        let idir = dir.join("identities");
        fs::create_dir_all(&idir).map_err(|e| io(&idir, e))?;
        write_json(&dir.join("manifest.json"), &self.manifest)?;
        write_json(&dir.join("triangulations.json"), &self.triangulations)?;
        write_json(&dir.join("curves.json"), &self.curves)?;
        write_json(&dir.join("graphs.json"), &self.graphs)?;
        write_json(&dir.join("flips.json"), &self.flips)?;
        write_json(&dir.join("drawn.json"), &self.drawn)?;
        for (name, f) in &self.identities {
            write_json(&idir.join(format!("{name}.json")), f)?;
        }
        Ok(())
    }

    pub fn table(&self, triangulation: &str) -> Result<Arc<VarTable>, FixtureError> {
        self.triangulations
            .get(triangulation)
            .map(Triangulation::var_table)
            .ok_or_else(|| FixtureError::Invalid(format!("unknown triangulation `{triangulation}`")))
    }

    /// Graphs of one triangulation, by name.
    pub fn graphs_of(&self, triangulation: &str) -> BTreeMap<String, Graph> {
        self.graphs
            .iter()
            .filter(|(_, e)| e.triangulation == triangulation)
            .map(|(n, e)| (n.clone(), e.graph.clone()))
            .collect()
    }

    pub fn resolve(&self, f: &IdentityFile) -> Result<(Arc<VarTable>, Identity), FixtureError> {
        let table = self.table(&f.triangulation)?;
        let id = f
            .identity
            .resolve(&table, &self.graphs_of(&f.triangulation))
            .map_err(|source| FixtureError::Identity { name: f.identity.name.clone(), source })?;
        Ok((table, id))
    }

    pub fn resolve_drawn(&self, name: &str) -> Result<(Arc<VarTable>, Identity), FixtureError> {
        let d = self.drawn.get(name).ok_or_else(|| FixtureError::Invalid(format!("unknown drawing `{name}`")))?;
        self.resolve(&IdentityFile {
            triangulation: d.triangulation.clone(),
            identity: IdentityJson { name: name.to_string(), lhs: d.lhs.clone(), rhs: d.rhs.clone() },
        })
    }

    /// Every entry has a manifest line, every reference resolves, and every
    /// triangulation and graph is valid.
    pub fn check(&self) -> Result<(), FixtureError> {
        let bad = |m: String| Err(FixtureError::Invalid(m));
        let mut keys: Vec<String> = Vec::new();
        for (n, t) in &self.triangulations {
            t.validate().map_err(|e| FixtureError::Invalid(format!("triangulation `{n}`: {e}")))?;
            keys.push(format!("triangulation:{n}"));
        }
        for (n, c) in &self.curves {
            if !self.triangulations.contains_key(&c.triangulation) {
                return bad(format!("curve `{n}`: unknown triangulation `{}`", c.triangulation));
            }
            keys.push(format!("curve:{n}"));
        }
        for (n, g) in &self.graphs {
            if !self.triangulations.contains_key(&g.triangulation) {
                return bad(format!("graph `{n}`: unknown triangulation `{}`", g.triangulation));
            }
            g.graph.validate().map_err(|e| FixtureError::Invalid(format!("graph `{n}`: {e}")))?;
            keys.push(format!("graph:{n}"));
        }
        for (n, f) in &self.flips {
            if !self.curves.contains_key(&f.curve) {
                return bad(format!("flips `{n}`: unknown curve `{}`", f.curve));
            }
            keys.push(format!("flips:{n}"));
        }
        for (n, f) in &self.identities {
            self.resolve(f)?;
            keys.push(format!("identity:{n}"));
        }
        for (n, d) in &self.drawn {
            if !self.identities.contains_key(&d.reading_of) {
                return bad(format!("drawing `{n}`: unknown identity `{}`", d.reading_of));
            }
            self.resolve_drawn(n)?;
            keys.push(format!("drawn:{n}"));
        }
        for k in &keys {
            if !self.manifest.contains_key(k) {
                return bad(format!("no manifest entry for `{k}`"));
            }
        }
        for k in self.manifest.keys() {
            if !keys.contains(k) {
                return bad(format!("manifest entry `{k}` names nothing"));
            }
        }
        Ok(())
    }
}
