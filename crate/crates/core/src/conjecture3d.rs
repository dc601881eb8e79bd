//! Numerical experiment for the three-dimensional case: does the
//! volume-minimizing anchor of a ball cover coincide with the Steiner point?
//!
//! Nothing here proves anything. The suite gate (normalized distance below
//! [`GATE_THRESHOLD`]) is a reproducibility gate for this tool and is
//! labelled as such in every summary.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cover_area::{build_cover, union_measure_mc_sharded, MIN_MC_SAMPLES};
use crate::error::{invalid, Result};
use crate::geom::{Dim, Point, PointSet};
use crate::nelder_mead::NMConfig;
use crate::optimizer::optimal_omega_numeric;
use crate::rng::{derive_seed, rng_from_seed};
use crate::steiner::steiner_point_directional_sharded;

pub const GATE_THRESHOLD: f64 = 0.05;
pub const GATE_LABEL: &str =
    "artifact-level reproducibility gate (normalized distance < 0.05); evidence only, not a proof or refutation";
pub const STEINER_DEFINITION: &str =
    "normal-cone measure: mean argmax point over uniformly random directions";
pub const MIN_TRIAL_SAMPLES: usize = 100_000;
/// Final volumes are re-measured with this many times the optimizer budget.
pub const REMEASURE_FACTOR: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureConfig {
    pub mc_samples: usize,
    pub dir_samples: usize,
    /// Monte Carlo shards inside one trial.
    pub shards: usize,
    /// Trials run concurrently by the suite driver.
    pub trial_workers: usize,
    pub nm_tol: f64,
    pub max_iter: usize,
}

impl Default for ConjectureConfig {
    fn default() -> Self {
        ConjectureConfig {
            mc_samples: 1_000_000,
            dir_samples: 1_000_000,
            shards: 1,
            trial_workers: 1,
            nm_tol: 1e-4,
            max_iter: 500,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplesUsed {
    pub optimizer_mc_samples: usize,
    pub dir_samples: usize,
    pub remeasure_mc_samples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub point_set: PointSet,
    pub omega_numeric: Point,
    pub optimizer_converged: bool,
    pub optimizer_iterations: usize,
    pub steiner_estimate: Point,
    /// Per-coordinate standard error of the directional estimate.
    pub steiner_stderr: Vec<f64>,
    pub distance: f64,
    pub bbox_diagonal: f64,
    pub normalized_distance: f64,
    pub volume_at_numeric: f64,
    pub volume_at_numeric_stderr: f64,
    pub volume_at_steiner: f64,
    pub volume_at_steiner_stderr: f64,
    /// Largest single ball; the union can never be smaller.
    pub max_ball_volume: f64,
    pub samples_used: SamplesUsed,
    pub seed: u64,
    pub steiner_definition: String,
}

impl ConjectureReport {
    pub fn combined_volume_stderr(&self) -> f64 {
        self.volume_at_numeric_stderr.hypot(self.volume_at_steiner_stderr)
    }

    /// The Steiner anchor measured smaller than the numeric argmin by more
    /// than four combined standard errors.
    pub fn steiner_beats_numeric(&self) -> bool {
        self.volume_at_steiner < self.volume_at_numeric - 4.0 * self.combined_volume_stderr()
    }
}

/// Orthonormal frame of a coplanar 3D point set and its planar coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarEmbedding {
    pub origin: Point,
    pub axes: [Point; 2],
    pub planar: PointSet,
}

impl PlanarEmbedding {
    pub fn lift(&self, p: &Point) -> Point {
        self.origin + self.axes[0] * p.x() + self.axes[1] * p.y()
    }
}

fn farthest(points: &[Point], key: impl Fn(&Point) -> f64) -> (&Point, f64) {
    points
        .iter()
        .map(|p| (p, key(p)))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .expect("point sets are non-empty")
}

/// Returns the planar frame when all points lie within a relative tolerance
/// of one plane; `None` for genuinely 3D sets.
pub fn planar_embedding(ps: &PointSet) -> Option<PlanarEmbedding> {
    if ps.dim() != Dim::Three {
        return None;
    }
    let pts = ps.points();
    let o = pts[0];
    let scale = ps.bbox_diagonal().max(f64::MIN_POSITIVE);
    let tol = 1e-9 * scale;

    let (a, da) = farthest(pts, |p| p.dist(&o));
    let e1 = if da > tol { (*a - o) * (1.0 / da) } else { Point::xyz(1., 0., 0.) };
    let off_line = |p: &Point| {
        let v = *p - o;
        (v - e1 * v.dot(&e1)).norm()
    };
    let (b, db) = farthest(pts, off_line);
    let e2 = if db > tol {
        let v = *b - o;
        let w = v - e1 * v.dot(&e1);
        w * (1.0 / w.norm())
    } else {
        // Collinear: any unit vector orthogonal to e1.
        let seed = if e1.x().abs() < 0.9 { Point::xyz(1., 0., 0.) } else { Point::xyz(0., 1., 0.) };
        let w = seed - e1 * seed.dot(&e1);
        w * (1.0 / w.norm())
    };
    let normal = e1.cross3(&e2);
    let (_, dn) = farthest(pts, |p| (*p - o).dot(&normal).abs());
    if dn > tol {
        return None;
    }
    let planar = PointSet::new(
        Dim::Two,
        pts.iter()
            .map(|p| {
                let v = *p - o;
                Point::xy(v.dot(&e1), v.dot(&e2))
            })
            .collect(),
    )
    .ok()?;
    Some(PlanarEmbedding { origin: o, axes: [e1, e2], planar })
}

fn ball_volume(r: f64) -> f64 {
    4.0 / 3.0 * std::f64::consts::PI * r.powi(3)
}

pub fn run_conjecture_trial(ps: &PointSet, config: &ConjectureConfig, seed: u64) -> Result<ConjectureReport> {
    ps.require_dim(Dim::Three)?;
    if ps.len() < 4 {
        return invalid(format!("conjecture trial needs at least 4 points, got {}", ps.len()));
    }
    if planar_embedding(ps).is_some() {
        return invalid("point set is coplanar; use the 2D pipeline (optimize / steiner on the planar coordinates)");
    }
    if config.mc_samples < MIN_TRIAL_SAMPLES || config.dir_samples < MIN_TRIAL_SAMPLES {
        return invalid(format!("conjecture trial needs mc_samples and dir_samples >= {MIN_TRIAL_SAMPLES}"));
    }

    let nm = NMConfig {
        tol: config.nm_tol,
        max_iter: config.max_iter,
        shards: config.shards,
        ..NMConfig::spatial(config.mc_samples, derive_seed(seed, 1))
    };
    let numeric = optimal_omega_numeric(ps, &nm)?;
    let steiner = steiner_point_directional_sharded(ps, config.dir_samples, derive_seed(seed, 2), config.shards)?;

    let remeasure = config.mc_samples * REMEASURE_FACTOR;
    let measure = |omega: &Point, stream: u64| -> Result<(f64, f64)> {
        let cover = build_cover(ps, omega)?;
        let r = union_measure_mc_sharded(&cover, remeasure.max(MIN_MC_SAMPLES), derive_seed(seed, stream), config.shards)?;
        Ok((r.union_area, r.stderr.unwrap_or(0.0)))
    };
    let (v_num, se_num) = measure(&numeric.omega_star, 3)?;
    let (v_st, se_st) = measure(&steiner.center, 4)?;

    let max_ball_volume = ps
        .points()
        .iter()
        .map(|p| ball_volume(0.5 * p.dist(&numeric.omega_star)))
        .fold(0.0, f64::max);
    let distance = numeric.omega_star.dist(&steiner.center);
    let diag = ps.bbox_diagonal();
    Ok(ConjectureReport {
        point_set: ps.clone(),
        omega_numeric: numeric.omega_star,
        optimizer_converged: numeric.converged,
        optimizer_iterations: numeric.iterations.unwrap_or(0),
        steiner_estimate: steiner.center,
        steiner_stderr: steiner.stderr.unwrap_or_default(),
        distance,
        bbox_diagonal: diag,
        normalized_distance: distance / diag,
        volume_at_numeric: v_num,
        volume_at_numeric_stderr: se_num,
        volume_at_steiner: v_st,
        volume_at_steiner_stderr: se_st,
        max_ball_volume,
        samples_used: SamplesUsed {
            optimizer_mc_samples: config.mc_samples,
            dir_samples: config.dir_samples,
            remeasure_mc_samples: remeasure,
        },
        seed,
        steiner_definition: STEINER_DEFINITION.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub trials: usize,
    pub max_normalized_distance: f64,
    pub mean_normalized_distance: f64,
    /// Trials where the Steiner anchor measured smaller than the numeric
    /// argmin beyond noise.
    pub steiner_beats_numeric: Vec<usize>,
    pub gate_threshold: f64,
    pub gate_passed: bool,
    pub gate_label: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureSuite {
    pub seed: u64,
    pub reports: Vec<ConjectureReport>,
    pub summary: SuiteSummary,
}

pub fn summarize(reports: &[ConjectureReport]) -> SuiteSummary {
    let dists: Vec<f64> = reports.iter().map(|r| r.normalized_distance).collect();
    let max = dists.iter().copied().fold(0.0, f64::max);
    let mean = if dists.is_empty() { 0.0 } else { dists.iter().sum::<f64>() / dists.len() as f64 };
    SuiteSummary {
        trials: reports.len(),
        max_normalized_distance: max,
        mean_normalized_distance: mean,
        steiner_beats_numeric: reports
            .iter()
            .enumerate()
            .filter(|(_, r)| r.steiner_beats_numeric())
            .map(|(i, _)| i)
            .collect(),
        gate_threshold: GATE_THRESHOLD,
        gate_passed: dists.iter().all(|&d| d < GATE_THRESHOLD),
        gate_label: GATE_LABEL.to_string(),
    }
}

/// `n_points` uniform points in the unit cube.
pub fn random_point_set(n_points: usize, seed: u64) -> Result<PointSet> {
    let mut rng = rng_from_seed(seed);
    let pts = (0..n_points)
        .map(|_| Point::xyz(rng.random(), rng.random(), rng.random()))
        .collect();
    PointSet::new(Dim::Three, pts)
}

/// Runs one trial per point set; trial `t` uses seed `derive_seed(seed, 1000 + t)`.
pub fn run_conjecture_sets(sets: Vec<PointSet>, config: &ConjectureConfig, seed: u64) -> Result<ConjectureSuite> {
    let seeds: Vec<u64> = (0..sets.len()).map(|t| derive_seed(seed, 1000 + t as u64)).collect();
    let workers = config.trial_workers.max(1).min(sets.len().max(1));
    let mut results: Vec<Option<Result<ConjectureReport>>> = (0..sets.len()).map(|_| None).collect();
    if workers == 1 {
        for (t, ps) in sets.iter().enumerate() {
            results[t] = Some(run_conjecture_trial(ps, config, seeds[t]));
        }
    } else {
        std::thread::scope(|scope| {
            let chunks: Vec<_> = results.chunks_mut(sets.len().div_ceil(workers)).collect();
            let mut offset = 0;
            for chunk in chunks {
                let start = offset;
                offset += chunk.len();
                let (sets, seeds) = (&sets, &seeds);
                scope.spawn(move || {
                    for (k, slot) in chunk.iter_mut().enumerate() {
                        let t = start + k;
                        *slot = Some(run_conjecture_trial(&sets[t], config, seeds[t]));
                    }
                });
            }
        });
    }
    let reports = results
        .into_iter()
        .map(|r| r.expect("every trial slot is filled"))
        .collect::<Result<Vec<_>>>()?;
    let summary = summarize(&reports);
    Ok(ConjectureSuite { seed, reports, summary })
}

/// Reproducible random suite: trial `t` draws its points with
/// `derive_seed(seed, 100 + t)`.
pub fn run_conjecture_suite(
    n_trials: usize,
    n_points: usize,
    seed: u64,
    config: &ConjectureConfig,
) -> Result<ConjectureSuite> {
    if n_trials == 0 {
        return invalid("suite needs at least one trial");
    }
    let sets = (0..n_trials)
        .map(|t| random_point_set(n_points, derive_seed(seed, 100 + t as u64)))
        .collect::<Result<Vec<_>>>()?;
    run_conjecture_sets(sets, config, seed)
}
