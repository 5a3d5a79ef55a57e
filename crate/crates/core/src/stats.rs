//! Uncertainty and cross-dataset analysis: node-subset bootstrap for
//! class-based scores, and log-log regression of one score family on
//! another with an r² and slope p-value.

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::labeling::ClassLabeling;
use crate::simplex::{NodeId, Simplex};
use crate::ssbm::mix_seed;

#[derive(Clone, Debug)]
pub struct BootstrapSpec {
    pub trials: usize,
    /// Fraction of nodes kept per trial, in (0, 1]. Subsets are drawn
    /// without replacement.
    pub node_fraction: f64,
    pub seed: u64,
}

impl Default for BootstrapSpec {
    fn default() -> Self {
        BootstrapSpec {
            trials: 50,
            node_fraction: 0.8,
            seed: 0,
        }
    }
}

/// Spread of one scored quantity across bootstrap trials. Trials where the
/// quantity was undefined are recorded as missing, not failures: `mean` is
/// `None` with no defined trials and `std_dev` needs at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct BootstrapStat {
    pub mean: Option<f64>,
    pub std_dev: Option<f64>,
    pub defined_trials: usize,
}

/// Resamples node subsets, rescores the induced sub-complex each time, and
/// reports the per-quantity spread. `score_fn` maps a sub-complex and its
/// restricted labeling to a fixed-length vector of optional scores; which
/// quantities those are is entirely the caller's choice (global scores,
/// per-class profiles, ...).
///
/// The sub-complex keeps exactly the simplices whose vertices were all
/// sampled, which preserves closure, and its nodes are remapped densely so
/// the restricted labeling lines up.
pub fn bootstrap_scores<F>(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    spec: &BootstrapSpec,
    score_fn: F,
) -> Result<Vec<BootstrapStat>>
where
    F: Fn(&SimplicialComplex, &ClassLabeling) -> Vec<Option<f64>>,
{
    if spec.trials < 2 {
        return Err(Error::Domain(format!(
            "bootstrap needs at least 2 trials, got {}",
            spec.trials
        )));
    }
    if !(spec.node_fraction > 0.0 && spec.node_fraction <= 1.0) {
        return Err(Error::Domain(format!(
            "node fraction must lie in (0, 1], got {}",
            spec.node_fraction
        )));
    }
    let vertices: Vec<NodeId> = x.vertices().collect();
    if vertices.is_empty() {
        return Err(Error::InvalidInput("empty complex".into()));
    }
    let keep = ((vertices.len() as f64 * spec.node_fraction).floor() as usize).max(1);

    let mut per_quantity: Vec<Vec<f64>> = Vec::new();
    let mut quantities = None;
    for trial in 0..spec.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(spec.seed, 0x5eed, trial as u64));
        let mut sampled = vertices.clone();
        sampled.partial_shuffle(&mut rng, keep);
        let mut sampled: Vec<NodeId> = sampled[..keep].to_vec();
        sampled.sort_unstable();

        let (sub, sub_labeling) = induced_subcomplex(x, labeling, &sampled)?;
        let scores = score_fn(&sub, &sub_labeling);
        let expected = *quantities.get_or_insert(scores.len());
        if scores.len() != expected {
            return Err(Error::InvalidInput(format!(
                "score_fn returned {} quantities, expected {expected}",
                scores.len()
            )));
        }
        per_quantity.resize_with(expected, Vec::new);
        for (bucket, s) in per_quantity.iter_mut().zip(scores) {
            if let Some(v) = s {
                bucket.push(v);
            }
        }
    }

    Ok(per_quantity
        .into_iter()
        .map(|values| {
            let defined = values.len();
            let mean = (defined > 0).then(|| values.iter().sum::<f64>() / defined as f64);
            let std_dev = (defined > 1).then(|| {
                let m = mean.unwrap();
                (values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (defined - 1) as f64)
                    .sqrt()
            });
            BootstrapStat {
                mean,
                std_dev,
                defined_trials: defined,
            }
        })
        .collect())
}

/// The node-induced sub-complex over `sampled` (sorted node list), with
/// nodes remapped to `0..sampled.len()` and the labeling restricted to
/// match.
pub fn induced_subcomplex(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    sampled: &[NodeId],
) -> Result<(SimplicialComplex, ClassLabeling)> {
    let sub_labeling = labeling.restrict(sampled)?;
    let remap = |v: NodeId| -> Option<NodeId> {
        sampled
            .binary_search(&v)
            .ok()
            .map(|i| NodeId(i as u32))
    };
    let mut kept: Vec<Simplex> = Vec::new();
    'simplex: for s in x.all_simplices() {
        let mut vs = Vec::with_capacity(s.len());
        for &v in s.vertices() {
            match remap(v) {
                Some(n) => vs.push(n),
                None => continue 'simplex,
            }
        }
        kept.push(Simplex::from_sorted(vs));
    }
    let sub = SimplicialComplex::from_simplices(kept)?;
    Ok((sub, sub_labeling))
}

/// One dataset's scores for the cross-dataset regression.
#[derive(Clone, Debug)]
pub struct ScorePair {
    pub name: String,
    /// Edge homophily score (the independent variable).
    pub graph_score: f64,
    /// Triangle score under whichever baseline is being explained.
    pub target_score: f64,
}

#[derive(Clone, Debug)]
pub struct RegressionResult {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Two-sided p-value of the slope coefficient (t distribution,
    /// `n - 2` degrees of freedom).
    pub p_value: f64,
    pub n: usize,
}

/// How much of the variation in one score family the edge score explains:
/// ordinary least squares of `log(target)` on `log(graph)` with an
/// intercept. Scores are ratio-scale and roughly exponential across
/// datasets, hence the logs; any nonpositive score is a domain error
/// naming the dataset.
pub fn explained_variance(pairs: &[ScorePair]) -> Result<RegressionResult> {
    if pairs.len() < 3 {
        return Err(Error::Domain(format!(
            "regression needs at least 3 datasets, got {}",
            pairs.len()
        )));
    }
    let mut xs = Vec::with_capacity(pairs.len());
    let mut ys = Vec::with_capacity(pairs.len());
    for p in pairs {
        if p.graph_score <= 0.0 || !p.graph_score.is_finite() {
            return Err(Error::Domain(format!(
                "dataset {} has nonpositive graph score {}",
                p.name, p.graph_score
            )));
        }
        if p.target_score <= 0.0 || !p.target_score.is_finite() {
            return Err(Error::Domain(format!(
                "dataset {} has nonpositive target score {}",
                p.name, p.target_score
            )));
        }
        xs.push(p.graph_score.ln());
        ys.push(p.target_score.ln());
    }
    ols(&xs, &ys)
}

/// Simple linear regression `y = intercept + slope * x` via centered sums.
pub fn ols(x: &[f64], y: &[f64]) -> Result<RegressionResult> {
    if x.len() != y.len() {
        return Err(Error::InvalidInput(format!(
            "{} x values but {} y values",
            x.len(),
            y.len()
        )));
    }
    let n = x.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "regression needs at least 3 points, got {n}"
        )));
    }
    let nf = n as f64;
    let mean_x = x.iter().sum::<f64>() / nf;
    let mean_y = y.iter().sum::<f64>() / nf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::Domain(
            "independent variable is constant; slope is undefined".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ssr = (syy - slope * sxy).max(0.0);
    let r_squared = if syy == 0.0 { 1.0 } else { 1.0 - ssr / syy };

    let df = (n - 2) as f64;
    let se = (ssr / df / sxx).sqrt();
    let p_value = if se == 0.0 {
        // exact fit: a nonzero slope is unambiguous
        if slope == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        let t = slope / se;
        let dist = StudentsT::new(0.0, 1.0, df)
            .map_err(|e| Error::Domain(format!("t distribution: {e}")))?;
        2.0 * (1.0 - dist.cdf(t.abs()))
    };
    Ok(RegressionResult {
        slope,
        intercept,
        r_squared,
        p_value,
        n,
    })
}
