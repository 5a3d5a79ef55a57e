//! Simplicial stochastic block model: community-dependent edges followed by
//! community-dependent triangle fills.
//!
//! Stage one draws each node pair independently with probability `p1`
//! (same community) or `q1` (different). Stage two visits every closed
//! triangle of the realized graph and fills it with probability `p2` when
//! all three nodes share a community, `q2` otherwise. The two stages
//! decouple pairwise homophily from group homophily, so the four
//! probabilities pin down exactly what each score family should detect.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homophily::{hypergraph_score_on_complex, simplicial_score};
use crate::labeling::ClassLabeling;
use crate::simplex::{NodeId, Simplex};

#[derive(Clone, Debug, PartialEq)]
pub struct SsbmParams {
    pub community_sizes: Vec<usize>,
    /// Edge probability within a community.
    pub p1: f64,
    /// Edge probability across communities.
    pub q1: f64,
    /// Fill probability for homogeneous closed triangles.
    pub p2: f64,
    /// Fill probability for all other closed triangles.
    pub q2: f64,
    pub seed: u64,
}

impl SsbmParams {
    fn validate(&self) -> Result<()> {
        if self.community_sizes.len() < 2 {
            return Err(Error::Domain(
                "the block model needs at least two communities".into(),
            ));
        }
        if self.community_sizes.iter().all(|&s| s == 0) {
            return Err(Error::Domain("all communities are empty".into()));
        }
        for (name, p) in [
            ("p1", self.p1),
            ("q1", self.q1),
            ("p2", self.p2),
            ("q2", self.q2),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Domain(format!("{name}={p} is not a probability")));
            }
        }
        Ok(())
    }

    pub fn num_nodes(&self) -> usize {
        self.community_sizes.iter().sum()
    }
}

/// A generated complex together with the community labeling that produced
/// it. Every 2-simplex's edges are present by construction.
#[derive(Clone, Debug)]
pub struct SsbmSample {
    pub complex: SimplicialComplex,
    pub labeling: ClassLabeling,
    pub params: SsbmParams,
}

/// Draws one sample. Deterministic given the seed: the edge stage consumes
/// a single sequential stream over node pairs in lexicographic order, and
/// each closed triangle draws from its own stream keyed by the seed and the
/// sorted triangle ids, so the fill stage does not depend on enumeration
/// order.
pub fn generate(params: &SsbmParams) -> Result<SsbmSample> {
    params.validate()?;
    let labeling = ClassLabeling::from_community_sizes(&params.community_sizes)?;
    let n = params.num_nodes();
    let labels = labeling.labels();

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            let p = if labels[u as usize] == labels[v as usize] {
                params.p1
            } else {
                params.q1
            };
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }

    let skeleton = SimplicialComplex::from_edges(n, &edges)?;
    let mut simplices: Vec<Simplex> = (0..n as u32)
        .map(|v| Simplex::from_ids([v]).expect("singleton"))
        .collect();
    for &(u, v) in &edges {
        simplices.push(Simplex::from_ids([u, v])?);
    }
    skeleton.for_each_potential_k_simplex(2, |t| {
        let homogeneous = labels[t[0].index()] == labels[t[1].index()]
            && labels[t[1].index()] == labels[t[2].index()];
        let p = if homogeneous { params.p2 } else { params.q2 };
        let mut tri_rng = ChaCha8Rng::seed_from_u64(triangle_key(params.seed, t));
        if tri_rng.gen::<f64>() < p {
            simplices.push(Simplex::from_sorted(t.to_vec()));
        }
    })?;

    let complex = SimplicialComplex::from_simplices(simplices)?;
    Ok(SsbmSample {
        complex,
        labeling,
        params: params.clone(),
    })
}

fn triangle_key(seed: u64, t: &[NodeId]) -> u64 {
    let mut x = splitmix64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for v in t {
        x = splitmix64(x ^ u64::from(v.0));
    }
    x
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub(crate) fn mix_seed(seed: u64, a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(seed ^ a.wrapping_mul(0x9e37_79b9)) ^ b)
}

/// Which score a sweep row refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SweepMetric {
    /// Triangle homophily against the node baseline.
    HypergraphG3,
    /// Triangle homophily against the skeleton baseline.
    SimplicialK2,
}

impl fmt::Display for SweepMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepMetric::HypergraphG3 => write!(f, "hypergraph_g3"),
            SweepMetric::SimplicialK2 => write!(f, "simplicial_k2"),
        }
    }
}

/// Mean and normal-approximation 95% confidence interval of one score at
/// one parameter ratio. `trials` counts the samples that produced a defined
/// score; `dropped` the degenerate ones (no triangles).
#[derive(Clone, Debug)]
pub struct SweepPoint {
    pub ratio: f64,
    pub metric: SweepMetric,
    pub mean: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub trials: usize,
    pub dropped: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SweepCurve {
    pub points: Vec<SweepPoint>,
}

impl SweepCurve {
    /// Plot-ready CSV: `ratio,metric,mean,ci_lo,ci_hi,trials`. Floats are
    /// printed with enough digits to round-trip.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("ratio,metric,mean,ci_lo,ci_hi,trials\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.ratio, p.metric, p.mean, p.ci_lo, p.ci_hi, p.trials
            ));
        }
        out
    }

    pub fn point(&self, ratio: f64, metric: SweepMetric) -> Option<&SweepPoint> {
        self.points
            .iter()
            .find(|p| p.metric == metric && (p.ratio - ratio).abs() < 1e-12)
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub community_sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if self.trials < 2 {
            return Err(Error::Domain(format!(
                "sweeps need at least 2 trials, got {}",
                self.trials
            )));
        }
        Ok(())
    }
}

/// Sweeps the within/across edge-probability ratio `p1/q1` at a fixed fill
/// probability `p2 = q2 = fill`. Group formation is class-blind by
/// construction, so the skeleton-baseline score should stay near 1 while
/// the node-baseline score inherits the edge homophily.
pub fn sweep_edge_ratio(
    cfg: &SweepConfig,
    q1: f64,
    ratios: &[f64],
    fill: f64,
) -> Result<SweepCurve> {
    sweep(cfg, ratios, |ratio| SsbmParams {
        community_sizes: cfg.community_sizes.clone(),
        p1: ratio * q1,
        q1,
        p2: fill,
        q2: fill,
        seed: 0,
    })
}

/// Sweeps the fill-probability ratio `p2/q2` at fixed edge probabilities
/// `p1 = edge_ratio * q1`. The skeleton-baseline score should cross 1
/// exactly where the ratio does, regardless of the edge homophily.
pub fn sweep_fill_ratio(
    cfg: &SweepConfig,
    q1: f64,
    edge_ratio: f64,
    q2: f64,
    ratios: &[f64],
) -> Result<SweepCurve> {
    sweep(cfg, ratios, |ratio| SsbmParams {
        community_sizes: cfg.community_sizes.clone(),
        p1: edge_ratio * q1,
        q1,
        p2: ratio * q2,
        q2,
        seed: 0,
    })
}

fn sweep<F>(cfg: &SweepConfig, ratios: &[f64], params_at: F) -> Result<SweepCurve>
where
    F: Fn(f64) -> SsbmParams,
{
    cfg.validate()?;
    let mut curve = SweepCurve::default();
    for (ri, &ratio) in ratios.iter().enumerate() {
        let template = params_at(ratio);
        template.validate()?;
        // Trials are independent seeds; parallel evaluation, deterministic
        // aggregation in trial order.
        let scores: Vec<(Option<f64>, Option<f64>)> = (0..cfg.trials)
            .into_par_iter()
            .map(|trial| {
                let mut params = template.clone();
                params.seed = mix_seed(cfg.seed, ri as u64, trial as u64);
                let sample = generate(&params)?;
                Ok(trial_scores(&sample))
            })
            .collect::<Result<_>>()?;

        let hyper: Vec<f64> = scores.iter().filter_map(|s| s.0).collect();
        let simp: Vec<f64> = scores.iter().filter_map(|s| s.1).collect();
        for (metric, defined) in [
            (SweepMetric::HypergraphG3, hyper),
            (SweepMetric::SimplicialK2, simp),
        ] {
            let dropped = scores.len() - defined.len();
            if defined.len() < 2 {
                return Err(Error::UndefinedScore(format!(
                    "fewer than two non-degenerate trials at ratio {ratio} for {metric}"
                )));
            }
            let (mean, lo, hi) = mean_ci95(&defined);
            curve.points.push(SweepPoint {
                ratio,
                metric,
                mean,
                ci_lo: lo,
                ci_hi: hi,
                trials: defined.len(),
                dropped,
            });
        }
    }
    Ok(curve)
}

/// Finite triangle scores of one sample, `None` when degenerate (no filled
/// or no closed triangles).
fn trial_scores(sample: &SsbmSample) -> (Option<f64>, Option<f64>) {
    let hyper = hypergraph_score_on_complex(&sample.complex, &sample.labeling, 3)
        .ok()
        .map(|r| r.score_f64())
        .filter(|s| s.is_finite());
    let simp = simplicial_score(&sample.complex, &sample.labeling, 2)
        .ok()
        .map(|r| r.score_f64())
        .filter(|s| s.is_finite());
    (hyper, simp)
}

/// Sample mean with a normal-approximation 95% interval.
pub fn mean_ci95(values: &[f64]) -> (f64, f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let half = 1.96 * (var / n).sqrt();
    (mean, mean - half, mean + half)
}
