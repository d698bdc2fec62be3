//! Branch-and-prune paving of fixed-point sets.
//!
//! Starting from a single box, each refinement level tests every live box
//! with [`fhat_status`], discards the boxes proved to contain no fixed
//! point, and bisects the rest. The result is an outer enclosure: the union
//! of candidate boxes contains every fixed point of the map inside the
//! requested region, at every level. An empty candidate list is therefore a
//! proof that the region contains no fixed point at all.

use crate::interval::BoxN;
use crate::multimap::{fhat_status, FhatStatus, ImageEnclosure, MapError, PointResidualOracle};
use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Debug, thiserror::Error)]
pub enum PaveError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("invalid paving configuration: {0}")]
    InvalidConfig(String),
    #[error("requested region {requested} is not inside the map domain {map_domain}")]
    DomainNotCovered { requested: String, map_domain: String },
}

/// Budgets and stopping thresholds for one paving run.
#[derive(Debug, Clone)]
pub struct PaveConfig {
    /// Refinement stops once every candidate has diameter at most this.
    pub delta_min: f64,
    /// Upper bound on live boxes (candidates plus still-active boxes).
    pub max_boxes: usize,
    /// Upper bound on membership tests across the whole run.
    pub max_oracle_calls: usize,
    /// Worker threads for the per-level tests; `0` and `1` both run serially.
    pub threads: usize,
    /// Keep the discarded boxes in [`Paving::pruned`] for inspection.
    pub retain_pruned: bool,
}

impl Default for PaveConfig {
    fn default() -> PaveConfig {
        PaveConfig {
            delta_min: 1.0 / 1024.0,
            max_boxes: 1 << 20,
            max_oracle_calls: 1 << 24,
            threads: 1,
            retain_pruned: false,
        }
    }
}

impl PaveConfig {
    fn validate(&self) -> Result<(), PaveError> {
        if !(self.delta_min > 0.0 && self.delta_min.is_finite()) {
            return Err(PaveError::InvalidConfig(format!(
                "delta_min must be positive and finite, got {}",
                self.delta_min
            )));
        }
        if self.max_boxes == 0 {
            return Err(PaveError::InvalidConfig(
                "max_boxes must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Work counters for a run; never part of the serialized result.
#[derive(Debug, Clone, Copy, Default)]
pub struct PaveStats {
    pub oracle_calls: usize,
    pub wall: Duration,
}

/// Outer enclosure of the fixed-point set at one refinement level.
#[derive(Debug, Clone, Serialize)]
pub struct Paving {
    /// Number of bisection rounds performed.
    pub level: u32,
    /// Largest candidate diameter, `0.0` when no candidates remain.
    pub delta: f64,
    /// Boxes that may still contain fixed points; their union does.
    pub candidates: Vec<BoxN>,
    /// Boxes proved to contain no fixed point.
    pub pruned_count: usize,
    /// `false` when a budget stopped refinement early; the candidate union
    /// is still an outer enclosure.
    pub complete: bool,
    /// The discarded boxes, populated only with [`PaveConfig::retain_pruned`].
    #[serde(skip)]
    pub pruned: Vec<BoxN>,
    #[serde(skip)]
    pub stats: PaveStats,
}

impl Paving {
    /// Field-wise equality of the serialized result (stats excluded).
    pub fn same_result(&self, other: &Paving) -> bool {
        self.level == other.level
            && self.delta.to_bits() == other.delta.to_bits()
            && self.candidates == other.candidates
            && self.pruned_count == other.pruned_count
            && self.complete == other.complete
    }
}

/// Outcome of an emptiness certification run.
#[derive(Debug, Clone)]
pub enum CertifyOutcome {
    /// Every box was discarded: the region provably contains no fixed point.
    EmptyCertified(Paving),
    /// Candidates survived to the stopping level; nothing is decided.
    CandidatesRemain(Paving),
}

impl CertifyOutcome {
    pub fn paving(&self) -> &Paving {
        match self {
            CertifyOutcome::EmptyCertified(p) => p,
            CertifyOutcome::CandidatesRemain(p) => p,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, CertifyOutcome::EmptyCertified(_))
    }
}

/// Pave `region` into boxes that may contain fixed points of `map`.
///
/// Every fixed point of `map` inside `region` lies in the union of the
/// returned candidates. Runs with the same inputs produce identical pavings
/// regardless of `threads`.
pub fn enclose_fixed_points<M: ImageEnclosure + ?Sized>(
    map: &M,
    region: &BoxN,
    cfg: &PaveConfig,
) -> Result<Paving, PaveError> {
    cfg.validate()?;
    if !map.domain().contains_box(region) {
        return Err(PaveError::DomainNotCovered {
            requested: region.to_string(),
            map_domain: map.domain().to_string(),
        });
    }
    let pool = if cfg.threads >= 2 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| PaveError::InvalidConfig(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let started = Instant::now();

    let mut active = vec![region.clone()];
    let mut done: Vec<BoxN> = Vec::new();
    let mut pruned: Vec<BoxN> = Vec::new();
    let mut pruned_count = 0usize;
    let mut oracle_calls = 0usize;
    let mut level = 0u32;
    let mut complete = true;

    while !active.is_empty() {
        let budget_left = cfg.max_oracle_calls.saturating_sub(oracle_calls);
        let untested = if active.len() > budget_left {
            complete = false;
            active.split_off(budget_left)
        } else {
            Vec::new()
        };
        let verdicts: Result<Vec<FhatStatus>, MapError> = match &pool {
            Some(p) => p.install(|| {
                active
                    .par_iter()
                    .map(|b| fhat_status(map, b))
                    .collect()
            }),
            None => active.iter().map(|b| fhat_status(map, b)).collect(),
        };
        let verdicts = verdicts?;
        oracle_calls += active.len();

        let mut splittable: Vec<BoxN> = Vec::new();
        for (b, verdict) in active.drain(..).zip(verdicts) {
            match verdict {
                FhatStatus::ProvedEmpty => {
                    pruned_count += 1;
                    if cfg.retain_pruned {
                        pruned.push(b);
                    }
                }
                FhatStatus::Candidate => {
                    if b.diameter() <= cfg.delta_min {
                        done.push(b);
                    } else {
                        splittable.push(b);
                    }
                }
            }
        }
        if !untested.is_empty() {
            done.extend(splittable);
            done.extend(untested);
            break;
        }
        if splittable.is_empty() {
            break;
        }
        if done.len() + 2 * splittable.len() > cfg.max_boxes {
            complete = false;
            done.extend(splittable);
            break;
        }
        for b in splittable {
            let (l, r) = b.bisect().expect("positive-diameter box must bisect");
            if l == b || r == b {
                done.push(b);
            } else {
                active.push(l);
                active.push(r);
            }
        }
        if active.is_empty() {
            break;
        }
        level += 1;
    }

    let delta = done.iter().map(BoxN::diameter).fold(0.0f64, f64::max);
    Ok(Paving {
        level,
        delta,
        candidates: done,
        pruned_count,
        complete,
        pruned,
        stats: PaveStats {
            oracle_calls,
            wall: started.elapsed(),
        },
    })
}

/// Try to prove that `region` contains no fixed point of `map`.
///
/// Certification succeeds exactly when some refinement level discards every
/// box; [`Paving::level`] then records that level.
pub fn certify_empty<M: ImageEnclosure + ?Sized>(
    map: &M,
    region: &BoxN,
    cfg: &PaveConfig,
) -> Result<CertifyOutcome, PaveError> {
    let paving = enclose_fixed_points(map, region, cfg)?;
    if paving.candidates.is_empty() {
        Ok(CertifyOutcome::EmptyCertified(paving))
    } else {
        Ok(CertifyOutcome::CandidatesRemain(paving))
    }
}

/// Search the paving for a point that is almost fixed.
///
/// Evaluates the residual at each candidate box's center, then at its
/// corners when the center fails — at most `2^n + 1` probes per box — and
/// returns the first point found with residual at most `delta`, together
/// with that residual. Boxes with more than 24 dimensions are probed at
/// their center only.
pub fn approx_fixed_point<O: PointResidualOracle + ?Sized>(
    oracle: &O,
    paving: &Paving,
    delta: f64,
) -> Option<(Vec<f64>, f64)> {
    for b in &paving.candidates {
        let center = b.midpoint();
        let r = oracle.residual(&center);
        if r <= delta {
            return Some((center, r));
        }
        if b.dim() <= 24 {
            for corner in b.corners() {
                let r = oracle.residual(&corner);
                if r <= delta {
                    return Some((corner, r));
                }
            }
        }
    }
    None
}
