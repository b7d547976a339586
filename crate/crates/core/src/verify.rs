//! Labelings, constraint checking and periodic certification.

use serde::{Deserialize, Serialize};

use crate::conflict::{build_conflicts, ConflictModel, SeparationPair};
use crate::error::{Error, Result};
use crate::formula::{emit_with, ModularScheme};
use crate::grid::{axis_window, GridKind, Mode};

/// A partial or total assignment of labels to elements `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<Option<u32>>,
}

impl Labeling {
    pub fn empty(len: usize) -> Self {
        Labeling { labels: vec![None; len] }
    }

    pub fn complete(labels: Vec<u32>) -> Self {
        Labeling { labels: labels.into_iter().map(Some).collect() }
    }

    pub fn from_options(labels: Vec<Option<u32>>) -> Self {
        Labeling { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<u32> {
        self.labels.get(e).copied().flatten()
    }

    pub fn set(&mut self, e: usize, label: Option<u32>) {
        self.labels[e] = label;
    }

    pub fn is_complete(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Largest assigned label; labels start at 0, so this is the span.
    pub fn span(&self) -> Option<u32> {
        self.labels.iter().flatten().copied().max()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Option<u32>)> + '_ {
        self.labels.iter().copied().enumerate()
    }

    /// `s − L` for a total labeling of span at most `s`.
    pub fn complement(&self, s: u32) -> Labeling {
        Labeling { labels: self.labels.iter().map(|l| l.map(|x| s - x)).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub pair: SeparationPair,
    pub labels: (u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One stable line per violation.
    pub fn lines(&self) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| {
                format!(
                    "{} {}: labels {} {} differ by less than {}",
                    v.pair.a, v.pair.b, v.labels.0, v.labels.1, v.pair.min_sep
                )
            })
            .collect()
    }
}

/// Checks every pair whose two elements are both labeled.
pub fn verify(labeling: &Labeling, model: &ConflictModel) -> Result<ViolationReport> {
    if labeling.len() != model.element_count() {
        return Err(Error::Format(format!(
            "labeling covers {} elements but the model has {}",
            labeling.len(),
            model.element_count()
        )));
    }
    let mut violations: Vec<Violation> = model
        .pairs()
        .iter()
        .filter_map(|p| {
            let (x, y) = (labeling.get(p.a)?, labeling.get(p.b)?);
            (x.abs_diff(y) < p.min_sep).then_some(Violation { pair: *p, labels: (x, y) })
        })
        .collect();
    violations.sort_unstable();
    Ok(ViolationReport { violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicVerdict {
    pub period: i64,
    pub window_side: i64,
    pub max_label: u32,
    pub report: ViolationReport,
}

impl PeriodicVerdict {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Verifies a periodic L(T₃) scheme on the window of cells
/// `[−cap, p + cap)²`. Every cell shift along an L(T₃) edge is at most one in
/// each coordinate, so each constrained pair with one end in the fundamental
/// domain `[0, p)²` appears in the window together with a shortest path, and
/// a pass certifies the whole infinite labeling.
pub fn verify_periodic(scheme: &ModularScheme, kind: GridKind, cap: usize, h: u32, k: u32) -> Result<PeriodicVerdict> {
    if kind != GridKind::Hex3 {
        return Err(Error::Unsupported(format!("periodic schemes are defined on L(hex3), not {kind}")));
    }
    let period = scheme.period().ok_or_else(|| Error::Unsupported("scheme has no finite period".into()))?;
    verify_scheme_window(scheme, period, cap as i64, h, k)
}

/// Verifies `scheme` on the window with cell margin `margin` around `[0, period)²`.
pub fn verify_scheme_window(scheme: &ModularScheme, period: i64, margin: i64, h: u32, k: u32) -> Result<PeriodicVerdict> {
    let window_side = period + 2 * margin;
    let patch = axis_window(-margin, window_side)?;
    let model = build_conflicts(&patch, h, k, Mode::Vertex);
    let labeling = emit_with(scheme, &patch)?;
    let report = verify(&labeling, &model)?;
    Ok(PeriodicVerdict { period, window_side, max_label: labeling.span().unwrap_or(0), report })
}
