//! Synthetic assessor panels with a one-parameter agreement dial.
//!
//! Each item is unanimous with probability `p_unanimous` (one label drawn
//! and copied to every assessor); otherwise every assessor draws
//! independently from `label_weights`. The generator is a seeded ChaCha8
//! stream, so a fixed seed reproduces the same panel on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::judgment::{JudgmentLabel, JudgmentMatrix};

/// Parameters for one synthetic panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelConfig {
    /// Number of assessors (h ≥ 1).
    pub assessors: usize,
    /// Number of judged items (N ≥ 1).
    pub items: usize,
    /// Probability that an item is judged unanimously.
    pub p_unanimous: f64,
    /// Draw weights for R, P, I, N in that order; must sum to 1.
    pub label_weights: [f64; 4],
    pub seed: u64,
}

impl PanelConfig {
    /// Uniform label weights.
    pub fn uniform(assessors: usize, items: usize, p_unanimous: f64, seed: u64) -> Self {
        PanelConfig {
            assessors,
            items,
            p_unanimous,
            label_weights: [0.25; 4],
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.assessors == 0 {
            return Err(Error::InvalidInput(
                "panel needs at least one assessor".into(),
            ));
        }
        if self.items == 0 {
            return Err(Error::InvalidInput("panel needs at least one item".into()));
        }
        if !(0.0..=1.0).contains(&self.p_unanimous) {
            return Err(Error::InvalidInput(format!(
                "p_unanimous must lie in [0, 1], got {}",
                self.p_unanimous
            )));
        }
        if self
            .label_weights
            .iter()
            .any(|&w| !(0.0..=1.0).contains(&w))
        {
            return Err(Error::InvalidInput(
                "label weights must lie in [0, 1]".into(),
            ));
        }
        let total: f64 = self.label_weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "label weights must sum to 1, got {total}"
            )));
        }
        Ok(())
    }
}

fn draw_label(rng: &mut ChaCha8Rng, weights: &[f64; 4]) -> JudgmentLabel {
    let u: f64 = rng.gen();
    let mut cumulative = 0.0;
    for (label, &w) in JudgmentLabel::ALL.iter().zip(weights) {
        cumulative += w;
        if u < cumulative {
            return *label;
        }
    }
    // u landed in the residual left by weights summing to 1-epsilon
    JudgmentLabel::Insufficient
}

/// Generates one panel. Deterministic given the config (including seed).
pub fn simulate_panel(cfg: &PanelConfig) -> Result<JudgmentMatrix> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let rows = (0..cfg.items)
        .map(|_| {
            if rng.gen::<f64>() < cfg.p_unanimous {
                vec![draw_label(&mut rng, &cfg.label_weights); cfg.assessors]
            } else {
                (0..cfg.assessors)
                    .map(|_| draw_label(&mut rng, &cfg.label_weights))
                    .collect()
            }
        })
        .collect();
    let assessor_ids = (1..=cfg.assessors).map(|i| format!("a{i}")).collect();
    let query_id = format!("panel-s{}-p{:.2}", cfg.seed, cfg.p_unanimous);
    JudgmentMatrix::new(query_id, assessor_ids, rows)
}

/// One row of a simulation sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p_unanimous: f64,
    pub seed: u64,
    pub rho: f64,
    pub an: usize,
    pub jn: usize,
}

/// Simulates each config and reports its convergence score; the rows are
/// ready to feed into a correlation.
pub fn sweep(configs: &[PanelConfig]) -> Result<Vec<SweepRow>> {
    configs
        .iter()
        .map(|cfg| {
            let report = simulate_panel(cfg)?.rjcd();
            Ok(SweepRow {
                p_unanimous: cfg.p_unanimous,
                seed: cfg.seed,
                rho: report.rho,
                an: report.an,
                jn: report.jn,
            })
        })
        .collect()
}

/// Expected per-item (AN, JN) contribution under the mixture model,
/// by exhaustive enumeration of all label tuples. Used as an oracle for
/// the simulator.
pub fn expected_rho(assessors: usize, p_unanimous: f64, label_weights: &[f64; 4]) -> f64 {
    // enumerate all 4^h assessor tuples for the iid branch
    let mut p_unanimous_iid = 0.0;
    let mut expected_gamma = 0.0;
    let tuples = 4usize.pow(assessors as u32);
    for code in 0..tuples {
        let mut probability = 1.0;
        let mut seen = [false; 4];
        let mut rest = code;
        for _ in 0..assessors {
            let label = rest % 4;
            rest /= 4;
            probability *= label_weights[label];
            seen[label] = true;
        }
        let distinct = seen.iter().filter(|&&s| s).count() as f64;
        expected_gamma += probability * distinct;
        if distinct == 1.0 {
            p_unanimous_iid += probability;
        }
    }
    let expected_an = p_unanimous + (1.0 - p_unanimous) * p_unanimous_iid;
    let expected_jn = p_unanimous + (1.0 - p_unanimous) * expected_gamma;
    expected_an / expected_jn
}
