//! Nelder–Mead simplex minimization for low-dimensional objectives.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NMConfig {
    pub reflection: f64,
    pub expansion: f64,
    pub contraction: f64,
    pub shrink: f64,
    /// Initial simplex edge as a fraction of the input's bounding-box diagonal.
    pub initial_edge_fraction: f64,
    /// Stop once the simplex diameter falls below this.
    pub tol: f64,
    pub max_iter: usize,
    /// Monte Carlo samples per objective evaluation (3D only).
    pub mc_samples: usize,
    /// Seed reused by every 3D evaluation (common random numbers).
    pub seed: u64,
    pub shards: usize,
}

impl NMConfig {
    pub fn planar() -> NMConfig {
        NMConfig {
            reflection: 1.0,
            expansion: 2.0,
            contraction: 0.5,
            shrink: 0.5,
            initial_edge_fraction: 0.1,
            tol: 1e-10,
            max_iter: 500,
            mc_samples: 0,
            seed: 0,
            shards: 1,
        }
    }

    pub fn spatial(mc_samples: usize, seed: u64) -> NMConfig {
        NMConfig { tol: 1e-4, mc_samples, seed, ..NMConfig::planar() }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.reflection > 0.0
            && self.expansion > 1.0
            && self.expansion > self.reflection
            && self.contraction > 0.0
            && self.contraction < 1.0
            && self.shrink > 0.0
            && self.shrink < 1.0
            && self.initial_edge_fraction > 0.0
            && self.tol > 0.0
            && self.max_iter > 0;
        if !ok {
            return invalid(format!("invalid Nelder-Mead configuration {self:?}"));
        }
        Ok(())
    }
}

impl Default for NMConfig {
    fn default() -> Self {
        NMConfig::planar()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best value after each iteration.
    pub history: Vec<f64>,
}

fn diameter(simplex: &[Vec<f64>]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, a) in simplex.iter().enumerate() {
        for b in &simplex[i + 1..] {
            let s: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
            d = d.max(s.sqrt());
        }
    }
    d
}

/// Minimizes `f` from a simplex centered at `center` with the given edge.
pub fn minimize<F>(f: F, center: &[f64], edge: f64, cfg: &NMConfig) -> Minimum
where
    F: Fn(&[f64]) -> f64,
{
    let n = center.len();
    // Right-angle simplex, shifted so its centroid sits on `center`.
    let mut simplex: Vec<Vec<f64>> = (0..=n)
        .map(|k| {
            let mut x = center.to_vec();
            if k > 0 {
                x[k - 1] += edge;
            }
            x
        })
        .collect();
    let shift = edge / (n as f64 + 1.0);
    for x in simplex.iter_mut() {
        for v in x.iter_mut() {
            *v -= shift;
        }
    }
    let mut values: Vec<f64> = simplex.iter().map(|x| f(x)).collect();

    let combine = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
        a.iter().zip(b).map(|(a, b)| a + t * (b - a)).collect()
    };

    let mut history = Vec::new();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < cfg.max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        if diameter(&simplex) < cfg.tol {
            converged = true;
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; n];
        for x in &simplex[..n] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / n as f64;
            }
        }
        let worst = simplex[n].clone();
        let (f_best, f_second, f_worst) = (values[0], values[n - 1], values[n]);

        let reflected = combine(&centroid, &worst, -cfg.reflection);
        let f_r = f(&reflected);
        if f_r < f_best {
            let expanded = combine(&centroid, &worst, -cfg.reflection * cfg.expansion);
            let f_e = f(&expanded);
            if f_e < f_r {
                simplex[n] = expanded;
                values[n] = f_e;
            } else {
                simplex[n] = reflected;
                values[n] = f_r;
            }
        } else if f_r < f_second {
            simplex[n] = reflected;
            values[n] = f_r;
        } else {
            let (trial, f_t, accept) = if f_r < f_worst {
                let outside = combine(&centroid, &worst, -cfg.reflection * cfg.contraction);
                let f_o = f(&outside);
                (outside, f_o, f_o <= f_r)
            } else {
                let inside = combine(&centroid, &worst, cfg.contraction);
                let f_i = f(&inside);
                (inside, f_i, f_i < f_worst)
            };
            if accept {
                simplex[n] = trial;
                values[n] = f_t;
            } else {
                let best = simplex[0].clone();
                for k in 1..=n {
                    simplex[k] = combine(&best, &simplex[k], cfg.shrink);
                    values[k] = f(&simplex[k]);
                }
            }
        }
        history.push(values.iter().copied().fold(f64::INFINITY, f64::min));
    }

    let best = (0..=n).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap_or(0);
    Minimum {
        x: simplex[best].clone(),
        value: values[best],
        iterations,
        converged,
        history,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2);
        let m = minimize(f, &[0.0, 0.0], 0.5, &NMConfig::planar());
        assert!(m.converged);
        assert!((m.x[0] - 1.0).abs() < 1e-8 && (m.x[1] + 2.0).abs() < 1e-8);
    }

    #[test]
    fn rosenbrock_3d() {
        let f = |x: &[f64]| {
            (0..2)
                .map(|i| 100.0 * (x[i + 1] - x[i] * x[i]).powi(2) + (1.0 - x[i]).powi(2))
                .sum::<f64>()
        };
        let cfg = NMConfig { max_iter: 5000, tol: 1e-9, ..NMConfig::planar() };
        let m = minimize(f, &[-1.0, 1.0, 1.0], 0.5, &cfg);
        assert!(m.x.iter().all(|v| (v - 1.0).abs() < 1e-4), "{:?}", m.x);
    }

    #[test]
    fn reports_non_convergence() {
        let f = |x: &[f64]| x[0].abs() + x[1].abs();
        let cfg = NMConfig { max_iter: 3, ..NMConfig::planar() };
        let m = minimize(f, &[5.0, 5.0], 1.0, &cfg);
        assert!(!m.converged);
        assert_eq!(m.iterations, 3);
        assert_eq!(m.history.len(), 3);
    }

    #[test]
    fn config_validation() {
        assert!(NMConfig::planar().validate().is_ok());
        assert!(NMConfig { contraction: 1.5, ..NMConfig::planar() }.validate().is_err());
        assert!(NMConfig { tol: 0.0, ..NMConfig::planar() }.validate().is_err());
    }
}
