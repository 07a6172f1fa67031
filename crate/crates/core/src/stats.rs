//! Pearson correlation with Student-t significance testing.

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::error::{Error, Result};

/// Sample correlation between two series, with its t statistic and
/// two-tailed p-value at n−2 degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationResult {
    pub r: f64,
    pub n: usize,
    pub t_stat: f64,
    pub p_value: f64,
}

/// Sample Pearson correlation of two equally long series.
///
/// Needs at least three pairs and non-constant series. A perfectly
/// linear relation yields `r = ±1` with an infinite t statistic and a
/// p-value of zero.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<CorrelationResult> {
    if x.len() != y.len() {
        return Err(Error::InvalidInput(format!(
            "series lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "correlation needs at least 3 pairs, got {n}"
        )));
    }

    let mean_x = x.iter().sum::<f64>() / n as f64;
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::Numeric(
            "correlation undefined for a constant series".into(),
        ));
    }

    let r = (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0);
    let df = n - 2;
    let (t_stat, p_value) = if 1.0 - r * r == 0.0 {
        (f64::INFINITY.copysign(r), 0.0)
    } else {
        let t = r * (df as f64 / (1.0 - r * r)).sqrt();
        (t, student_t_two_tailed_p(t, df))
    };

    Ok(CorrelationResult {
        r,
        n,
        t_stat,
        p_value,
    })
}

/// Two-tailed tail mass of Student's t-distribution with `df` degrees of
/// freedom, evaluated at `t_stat`.
pub fn student_t_two_tailed_p(t_stat: f64, df: usize) -> f64 {
    let dist =
        StudentsT::new(0.0, 1.0, df as f64).expect("df >= 1 always yields a valid t-distribution");
    (2.0 * dist.sf(t_stat.abs())).clamp(0.0, 1.0)
}
