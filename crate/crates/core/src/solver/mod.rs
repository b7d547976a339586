//! Exact feasibility, minimum-span and lower-bound certification.
//!
//! The search is a depth-first branch-and-bound over 64-bit label domains
//! with forward checking. Two symmetry reductions are available:
//!
//! * complement: `s − L` is valid whenever `L` is, so the first branched
//!   element may be restricted to labels `≤ ⌊s/2⌋`;
//! * automorphism (opt-in): the first branched element may be required to
//!   carry the smallest label within its orbit. Combined with the complement
//!   rule this stays sound, since when every orbit label exceeds `s/2` the
//!   complement puts all of them below it.

mod search;
pub mod symmetry;

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::conflict::{clique_lower_bound, ConflictModel};
use crate::error::{Error, Result};
use crate::verify::{verify, Labeling};
use search::{Compiled, Flow, RootRule, Search};

pub const MAX_PALETTE: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VariableOrder {
    MostConstrained,
    Static,
}

/// Search parameters. Values are always tried in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_label: u32,
    pub time_budget_seconds: f64,
    pub variable_order: VariableOrder,
    pub symmetry_breaking: bool,
    pub automorphism_breaking: bool,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_label: 0,
            time_budget_seconds: 3600.0,
            variable_order: VariableOrder::MostConstrained,
            symmetry_breaking: true,
            automorphism_breaking: false,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_max_label(max_label: u32) -> Self {
        SearchConfig { max_label, ..SearchConfig::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_label >= MAX_PALETTE {
            return Err(Error::PaletteTooLarge(self.max_label + 1));
        }
        if self.time_budget_seconds.is_nan() || self.time_budget_seconds <= 0.0 {
            return Err(Error::Config("time budget must be positive".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("worker count must be at least 1".into()));
        }
        Ok(())
    }

    fn budget(&self) -> Duration {
        Duration::try_from_secs_f64(self.time_budget_seconds).unwrap_or(Duration::MAX)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Sat,
    Unsat,
    Timeout,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub max_depth: usize,
    pub wall_seconds: f64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.wall_seconds += other.wall_seconds;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub witness: Option<Labeling>,
    pub stats: SearchStats,
}

fn deadline_after(budget: Duration) -> Option<Instant> {
    Instant::now().checked_add(budget)
}

fn root_rule(model: &ConflictModel, compiled: &Compiled, cfg: &SearchConfig) -> RootRule {
    let mut rule = RootRule::default();
    if compiled.n == 0 {
        return rule;
    }
    if cfg.symmetry_breaking {
        rule.max_root_label = Some(cfg.max_label / 2);
    }
    if cfg.automorphism_breaking {
        // with full domains both orders pick the highest-degree, lowest-id element
        let root = compiled.static_order[0];
        rule.orbit = symmetry::orbit(model, root);
    }
    rule
}

fn finish(model: &ConflictModel, cfg: &SearchConfig, flow: Flow, labels: Option<Vec<u32>>, stats: SearchStats) -> SearchOutcome {
    match flow {
        Flow::Found => {
            let witness = Labeling::complete(labels.expect("found search carries labels"));
            let report = verify(&witness, model).expect("witness has one label per element");
            assert!(report.passed(), "solver produced an invalid witness: {:?}", report.lines());
            assert!(witness.span().unwrap_or(0) <= cfg.max_label);
            SearchOutcome { verdict: Verdict::Sat, witness: Some(witness), stats }
        }
        Flow::Exhausted => SearchOutcome { verdict: Verdict::Unsat, witness: None, stats },
        Flow::Stopped => SearchOutcome { verdict: Verdict::Timeout, witness: None, stats },
    }
}

/// Decides whether the model has a valid labeling with labels `0..=cfg.max_label`.
pub fn feasible(model: &ConflictModel, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let start = Instant::now();
    let deadline = deadline_after(cfg.budget());
    let compiled = Compiled::new(model, cfg.max_label, true);
    let rule = root_rule(model, &compiled, cfg);
    let most_constrained = cfg.variable_order == VariableOrder::MostConstrained;

    if cfg.workers == 1 {
        let mut s = Search::new(&compiled, most_constrained, rule).with_limits(deadline, None);
        let flow = s.run();
        let labels = (flow == Flow::Found).then(|| s.labels());
        let stats = SearchStats { nodes: s.nodes, max_depth: s.max_depth, wall_seconds: start.elapsed().as_secs_f64() };
        return Ok(finish(model, cfg, flow, labels, stats));
    }

    // Expand the tree sequentially until there are enough open subtrees to share out.
    let target = cfg.workers * 16;
    let mut frontier = vec![Vec::new()];
    let mut split_nodes = 0;
    for depth in 1..=compiled.n {
        let mut s = Search::new(&compiled, most_constrained, rule.clone()).with_split(depth).with_limits(deadline, None);
        let flow = s.run();
        split_nodes += s.nodes;
        match flow {
            Flow::Found => {
                let stats = SearchStats { nodes: split_nodes, max_depth: s.max_depth, wall_seconds: start.elapsed().as_secs_f64() };
                return Ok(finish(model, cfg, flow, Some(s.labels()), stats));
            }
            Flow::Stopped => {
                let stats = SearchStats { nodes: split_nodes, max_depth: s.max_depth, wall_seconds: start.elapsed().as_secs_f64() };
                return Ok(finish(model, cfg, flow, None, stats));
            }
            Flow::Exhausted => {}
        }
        frontier = std::mem::take(&mut s.frontier);
        if frontier.len() >= target || frontier.is_empty() {
            break;
        }
    }

    let next = AtomicUsize::new(0);
    let cancel = AtomicBool::new(false);
    let found: Mutex<Option<Vec<u32>>> = Mutex::new(None);
    let timed_out = AtomicBool::new(false);
    let totals: Mutex<SearchStats> = Mutex::new(SearchStats { nodes: split_nodes, ..SearchStats::default() });

    std::thread::scope(|scope| {
        for _ in 0..cfg.workers.min(frontier.len().max(1)) {
            scope.spawn(|| {
                let mut local = SearchStats::default();
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= frontier.len() || cancel.load(Ordering::Relaxed) {
                        break;
                    }
                    let mut s = Search::new(&compiled, most_constrained, rule.clone()).with_limits(deadline, Some(&cancel));
                    let flow = if s.replay(&frontier[i]) { s.run() } else { Flow::Exhausted };
                    local.nodes += s.nodes;
                    local.max_depth = local.max_depth.max(s.max_depth);
                    match flow {
                        Flow::Found => {
                            let mut slot = found.lock().expect("result lock");
                            if slot.is_none() {
                                *slot = Some(s.labels());
                            }
                            cancel.store(true, Ordering::Relaxed);
                            break;
                        }
                        Flow::Stopped => {
                            if s.timed_out {
                                timed_out.store(true, Ordering::Relaxed);
                                cancel.store(true, Ordering::Relaxed);
                            }
                            break;
                        }
                        Flow::Exhausted => {}
                    }
                }
                let mut t = totals.lock().expect("stats lock");
                t.nodes += local.nodes;
                t.max_depth = t.max_depth.max(local.max_depth);
            });
        }
    });

    let mut stats = totals.into_inner().expect("stats lock");
    stats.wall_seconds = start.elapsed().as_secs_f64();
    let labels = found.into_inner().expect("result lock");
    let flow = if labels.is_some() {
        Flow::Found
    } else if timed_out.load(Ordering::Relaxed) {
        Flow::Stopped
    } else {
        Flow::Exhausted
    };
    Ok(finish(model, cfg, flow, labels, stats))
}

/// Result of a minimum-span search over `[lb, ub]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum MinSpan {
    Found { span: u32, witness: Labeling, stats: SearchStats },
    /// No labeling with labels up to `ub`.
    Unsat { ub: u32, stats: SearchStats },
    /// The span lies in `[lower, upper]`; `upper` is `None` if nothing was found yet.
    Timeout { lower: u32, upper: Option<u32>, stats: SearchStats },
}

/// Smallest `s` in `[lb_hint, ub_hint]` admitting a labeling with labels `0..=s`.
///
/// Palettes below the clique bound are skipped; they are infeasible anyway.
/// `cfg.max_label` is ignored and `cfg.time_budget_seconds` covers the whole run.
pub fn min_span(model: &ConflictModel, lb_hint: u32, ub_hint: u32, cfg: &SearchConfig) -> Result<MinSpan> {
    if lb_hint > ub_hint {
        return Err(Error::Config(format!("lower hint {lb_hint} exceeds upper hint {ub_hint}")));
    }
    if ub_hint >= MAX_PALETTE {
        return Err(Error::PaletteTooLarge(ub_hint + 1));
    }
    SearchConfig { max_label: ub_hint, ..cfg.clone() }.validate()?;
    let deadline = deadline_after(cfg.budget());
    let mut stats = SearchStats::default();
    let mut s = lb_hint.max(clique_lower_bound(model).min(ub_hint));
    loop {
        let remaining = match deadline {
            Some(d) => d.saturating_duration_since(Instant::now()),
            None => cfg.budget(),
        };
        if remaining.is_zero() {
            return Ok(MinSpan::Timeout { lower: s, upper: None, stats });
        }
        let step = SearchConfig { max_label: s, time_budget_seconds: remaining.as_secs_f64(), ..cfg.clone() };
        let out = feasible(model, &step)?;
        stats.absorb(&out.stats);
        match out.verdict {
            Verdict::Sat => {
                let witness = out.witness.expect("sat outcome carries a witness");
                return Ok(MinSpan::Found { span: s, witness, stats });
            }
            Verdict::Timeout => return Ok(MinSpan::Timeout { lower: s, upper: None, stats }),
            Verdict::Unsat if s == ub_hint => return Ok(MinSpan::Unsat { ub: ub_hint, stats }),
            Verdict::Unsat => s += 1,
        }
    }
}

/// A machine-readable record that no labeling uses only `palette_size` labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub model_digest: String,
    pub palette_size: u32,
    pub verdict: Verdict,
    pub nodes: u64,
    pub wall_seconds: f64,
    pub config: SearchConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CertifyOutcome {
    Certified(Certificate),
    /// A labeling within the claimed bound exists.
    Refuted { witness: Labeling, stats: SearchStats },
    Inconclusive { stats: SearchStats },
}

/// Certifies that the minimum span is at least `claimed_lb` by exhausting
/// the palette `0..claimed_lb`.
pub fn certify_lb(model: &ConflictModel, claimed_lb: u32, cfg: &SearchConfig) -> Result<CertifyOutcome> {
    if claimed_lb < 1 {
        return Err(Error::Precondition("claimed lower bound must be at least 1".into()));
    }
    let run_cfg = SearchConfig { max_label: claimed_lb - 1, ..cfg.clone() };
    let out = feasible(model, &run_cfg)?;
    Ok(match out.verdict {
        Verdict::Unsat => CertifyOutcome::Certified(Certificate {
            model_digest: crate::io::digest_of(model)?,
            palette_size: claimed_lb,
            verdict: Verdict::Unsat,
            nodes: out.stats.nodes,
            wall_seconds: out.stats.wall_seconds,
            config: run_cfg,
        }),
        Verdict::Sat => CertifyOutcome::Refuted { witness: out.witness.expect("sat outcome carries a witness"), stats: out.stats },
        Verdict::Timeout => CertifyOutcome::Inconclusive { stats: out.stats },
    })
}
