//! JSON file formats with canonical serialization and content digests.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gadget::Gadget;
use crate::grid::{Coord, GraphPatch, Mode, PatchKind};
use crate::solver::{Certificate, SearchConfig};
use crate::verify::Labeling;

pub const FORMAT_VERSION: u32 = 1;

/// Compact JSON with object keys sorted, so equal values give equal bytes.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Format(e.to_string()))?;
    serde_json::to_string(&v).map_err(|e| Error::Format(e.to_string()))
}

/// Hex SHA-256 of the canonical JSON of `value`.
pub fn digest_of<T: Serialize>(value: &T) -> Result<String> {
    Ok(hex::encode(Sha256::digest(canonical_json(value)?.as_bytes())))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub coord: Coord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub format_version: u32,
    pub kind: PatchKind,
    pub mode: Mode,
    pub h: u32,
    pub k: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<BTreeMap<String, Vec<usize>>>,
}

impl InstanceFile {
    pub fn from_patch(patch: &GraphPatch, mode: Mode, h: u32, k: u32) -> Self {
        InstanceFile {
            format_version: FORMAT_VERSION,
            kind: patch.kind(),
            mode,
            h,
            k,
            vertices: patch.vertices().iter().map(|v| VertexRecord { id: v.id, coord: v.coord }).collect(),
            edges: patch.edges().iter().map(|e| EdgeRecord { id: e.id, u: e.u, v: e.v }).collect(),
            partitions: None,
        }
    }

    pub fn from_gadget(g: &Gadget, h: u32, k: u32) -> Self {
        let mut f = InstanceFile::from_patch(&g.patch, g.mode, h, k);
        f.partitions = Some(g.partitions.clone());
        f
    }

    /// Rebuilds the patch, checking the version and that ids are dense and in order.
    pub fn to_patch(&self) -> Result<GraphPatch> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!("unsupported format_version {}", self.format_version)));
        }
        if let Some(v) = self.vertices.iter().enumerate().find(|(i, v)| v.id != *i) {
            return Err(Error::Format(format!("vertex ids must be dense from 0; found {} at position {}", v.1.id, v.0)));
        }
        if let Some(e) = self.edges.iter().enumerate().find(|(i, e)| e.id != *i) {
            return Err(Error::Format(format!("edge ids must be dense from 0; found {} at position {}", e.1.id, e.0)));
        }
        let coords = self.vertices.iter().map(|v| v.coord).collect();
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        let patch = GraphPatch::from_parts(self.kind, coords, &edges)?;
        if let Some(parts) = &self.partitions {
            let n = patch.element_count(self.mode);
            if let Some(&bad) = parts.values().flatten().find(|&&id| id >= n) {
                return Err(Error::Lookup(bad));
            }
        }
        Ok(patch)
    }

    pub fn element_count(&self) -> usize {
        match self.mode {
            Mode::Edge => self.edges.len(),
            Mode::Vertex => self.vertices.len(),
        }
    }

    pub fn digest(&self) -> Result<String> {
        digest_of(self)
    }

    pub fn to_json(&self) -> Result<String> {
        canonical_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingFile {
    pub format_version: u32,
    pub instance_digest: String,
    /// Element id to label. Missing ids are unlabeled.
    pub labels: BTreeMap<usize, i64>,
}

impl LabelingFile {
    pub fn new(instance: &InstanceFile, labeling: &Labeling) -> Result<Self> {
        Ok(LabelingFile {
            format_version: FORMAT_VERSION,
            instance_digest: instance.digest()?,
            labels: labeling.iter().filter_map(|(e, l)| l.map(|l| (e, i64::from(l)))).collect(),
        })
    }

    /// The labeling for `instance`, refusing files made for a different instance.
    pub fn labeling_for(&self, instance: &InstanceFile) -> Result<Labeling> {
        let expected = instance.digest()?;
        if self.instance_digest != expected {
            return Err(Error::DigestMismatch { expected, found: self.instance_digest.clone() });
        }
        let n = instance.element_count();
        let mut out = Labeling::empty(n);
        for (&e, &l) in &self.labels {
            if e >= n {
                return Err(Error::Lookup(e));
            }
            let l = u32::try_from(l).map_err(|_| Error::Format(format!("label {l} of element {e} is not a nonnegative integer")))?;
            out.set(e, Some(l));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Result<String> {
        canonical_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

/// An instance and a labeling of it in one document, so they can travel through a pipe.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub instance: InstanceFile,
    pub labeling: LabelingFile,
}

impl Bundle {
    pub fn new(instance: InstanceFile, labeling: &Labeling) -> Result<Self> {
        let labeling = LabelingFile::new(&instance, labeling)?;
        Ok(Bundle { instance, labeling })
    }

    pub fn to_json(&self) -> Result<String> {
        canonical_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CertificateVerdict {
    Unsat,
    Refuted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub instance_digest: String,
    pub palette_size: u32,
    pub verdict: CertificateVerdict,
    pub nodes: u64,
    pub wall_seconds: f64,
    pub config: SearchConfig,
    /// Present for `REFUTED`: a labeling that fits in the palette.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<LabelingFile>,
}

impl CertificateFile {
    pub fn unsat(instance: &InstanceFile, cert: &Certificate) -> Result<Self> {
        Ok(CertificateFile {
            instance_digest: instance.digest()?,
            palette_size: cert.palette_size,
            verdict: CertificateVerdict::Unsat,
            nodes: cert.nodes,
            wall_seconds: cert.wall_seconds,
            config: cert.config.clone(),
            witness: None,
        })
    }

    pub fn refuted(instance: &InstanceFile, palette_size: u32, nodes: u64, wall_seconds: f64, config: SearchConfig, witness: &Labeling) -> Result<Self> {
        Ok(CertificateFile {
            instance_digest: instance.digest()?,
            palette_size,
            verdict: CertificateVerdict::Refuted,
            nodes,
            wall_seconds,
            config,
            witness: Some(LabelingFile::new(instance, witness)?),
        })
    }

    pub fn to_json(&self) -> Result<String> {
        canonical_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }
}
