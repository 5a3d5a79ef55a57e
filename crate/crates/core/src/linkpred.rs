//! Triangle-closure prediction: split a simplex stream in time, find the
//! closed-but-unfilled triangles of the training window, and predict which
//! of them appear inside a group interaction later.
//!
//! Two logistic models are trained per run: one on structural features
//! only, and one with an extra indicator for all-same-class candidates.
//! Performance is area under the precision-recall curve relative to the
//! positive prevalence, with bootstrap confidence intervals.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homophily::{hypergraph_score_on_complex, simplicial_score};
use crate::labeling::ClassLabeling;
use crate::simplex::{NodeId, Simplex, TimestampedSimplex};
use crate::ssbm::mix_seed;

/// A time-ordered simplex stream with a labeling covering every node in it.
#[derive(Clone, Debug)]
pub struct TemporalDataset {
    pub stream: Vec<TimestampedSimplex>,
    pub labeling: ClassLabeling,
}

/// Splits a stream by simplex count in time order. Ties at the boundary
/// timestamp resolve by stable input order. The stream must already be
/// sorted by time.
pub fn temporal_split(
    stream: &[TimestampedSimplex],
    fraction: f64,
) -> Result<(&[TimestampedSimplex], &[TimestampedSimplex])> {
    if stream.is_empty() {
        return Err(Error::InvalidInput("empty simplex stream".into()));
    }
    if !(0.0..=1.0).contains(&fraction) {
        return Err(Error::Domain(format!(
            "split fraction must lie in [0, 1], got {fraction}"
        )));
    }
    if stream.windows(2).any(|w| w[0].time > w[1].time) {
        return Err(Error::InvalidInput(
            "stream is not sorted by timestamp".into(),
        ));
    }
    let cut = (stream.len() as f64 * fraction).floor() as usize;
    Ok(stream.split_at(cut.min(stream.len())))
}

/// A closed-but-unfilled triangle of the training window, labeled positive
/// when the triple later appears as (or inside) a group interaction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidateTriangle {
    pub nodes: [NodeId; 3],
    pub positive: bool,
}

/// Everything the feature extractor needs about the training window:
/// the capped complex plus raw-stream tie and simplex counts (the stream
/// keeps multiplicity; the complex does not).
#[derive(Clone, Debug)]
pub struct TrainingWindow {
    complex: SimplicialComplex,
    tie_frequency: HashMap<(u32, u32), u64>,
    simplex_count_per_node: Vec<u64>,
}

impl TrainingWindow {
    pub fn build(train: &[TimestampedSimplex]) -> Result<Self> {
        let complex =
            SimplicialComplex::from_simplices_capped(train.iter().map(|t| t.simplex.clone()), 2)?;
        let mut tie_frequency: HashMap<(u32, u32), u64> = HashMap::new();
        let len = complex.vertices().last().map_or(0, |v| v.index() + 1);
        let mut simplex_count_per_node = vec![0u64; len];
        for record in train {
            let vs = record.simplex.vertices();
            for v in vs {
                simplex_count_per_node[v.index()] += 1;
            }
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    *tie_frequency
                        .entry((vs[i].0, vs[j].0))
                        .or_insert(0) += 1;
                }
            }
        }
        Ok(TrainingWindow {
            complex,
            tie_frequency,
            simplex_count_per_node,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Training simplices (size >= 2) containing both endpoints.
    pub fn tie_frequency(&self, u: NodeId, v: NodeId) -> u64 {
        let key = if u <= v { (u.0, v.0) } else { (v.0, u.0) };
        self.tie_frequency.get(&key).copied().unwrap_or(0)
    }

    /// Training simplices containing the node, multiplicity included.
    pub fn simplex_count(&self, v: NodeId) -> u64 {
        self.simplex_count_per_node
            .get(v.index())
            .copied()
            .unwrap_or(0)
    }

    /// All closed-unfilled triangles of the training complex, labeled
    /// positive when the triple is contained in any size >= 3 simplex of the
    /// test window. Canonical (lexicographic) order.
    pub fn candidates(&self, test: &[TimestampedSimplex]) -> Result<Vec<CandidateTriangle>> {
        let mut future_triples: BTreeSet<[NodeId; 3]> = BTreeSet::new();
        for record in test {
            let vs = record.simplex.vertices();
            if vs.len() < 3 {
                continue;
            }
            for triple in record.simplex.subsets_of_size(3) {
                let v = triple.vertices();
                future_triples.insert([v[0], v[1], v[2]]);
            }
        }
        let mut out = Vec::new();
        self.complex.for_each_potential_k_simplex(2, |t| {
            let triple = [t[0], t[1], t[2]];
            if self.complex.contains(&Simplex::from_sorted(t.to_vec())) {
                return; // already filled in training
            }
            out.push(CandidateTriangle {
                nodes: triple,
                positive: future_triples.contains(&triple),
            });
        })?;
        out.sort_unstable_by_key(|c| c.nodes);
        Ok(out)
    }

    /// Feature vector for one candidate. Within each group of three the
    /// values are sorted descending, which makes the vector invariant under
    /// relabeling the candidate's nodes. Layout:
    ///
    /// * 0..3   tie frequency per pair
    /// * 3..6   graph degree per node
    /// * 6..9   simplex-weighted degree per node
    /// * 9..12  common-neighbor count per pair
    /// * 12..24 `ln(1 + x)` of the twelve values above, same order
    /// * 24     (with labels only) 1 if all three nodes share a class
    pub fn extract_features(
        &self,
        nodes: [NodeId; 3],
        labels: Option<&ClassLabeling>,
    ) -> Result<Vec<f64>> {
        let [a, b, c] = nodes;
        let mut raw = [0f64; 12];
        let pairs = [(a, b), (a, c), (b, c)];
        for (i, (u, v)) in pairs.iter().enumerate() {
            raw[i] = self.tie_frequency(*u, *v) as f64;
        }
        for (i, v) in nodes.iter().enumerate() {
            raw[3 + i] = self.complex.degree(*v) as f64;
            raw[6 + i] = self.simplex_count(*v) as f64;
        }
        for (i, (u, v)) in pairs.iter().enumerate() {
            raw[9 + i] =
                count_common(self.complex.neighbors(*u), self.complex.neighbors(*v)) as f64;
        }
        for chunk in raw.chunks_mut(3) {
            chunk.sort_unstable_by(|x, y| y.partial_cmp(x).expect("counts are finite"));
        }
        let mut features = Vec::with_capacity(25);
        features.extend_from_slice(&raw);
        features.extend(raw.iter().map(|x| x.ln_1p()));
        if let Some(labeling) = labels {
            features.push(f64::from(labeling.is_homogeneous(&nodes)?));
        }
        Ok(features)
    }
}

/// Column names matching [`TrainingWindow::extract_features`].
pub fn feature_names(with_labels: bool) -> Vec<&'static str> {
    let mut names = vec![
        "tie_hi", "tie_mid", "tie_lo", "deg_hi", "deg_mid", "deg_lo", "sdeg_hi", "sdeg_mid",
        "sdeg_lo", "cn_hi", "cn_mid", "cn_lo", "log_tie_hi", "log_tie_mid", "log_tie_lo",
        "log_deg_hi", "log_deg_mid", "log_deg_lo", "log_sdeg_hi", "log_sdeg_mid", "log_sdeg_lo",
        "log_cn_hi", "log_cn_mid", "log_cn_lo",
    ];
    if with_labels {
        names.push("homogeneous");
    }
    names
}

fn count_common(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    n
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrainConfig {
    /// L2 penalty on the non-intercept weights (mean-log-loss scale).
    pub l2: f64,
    pub learning_rate: f64,
    pub max_iters: usize,
    /// Stop when the gradient infinity norm falls below this.
    pub tol: f64,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            l2: 1e-4,
            learning_rate: 0.5,
            max_iters: 5000,
            tol: 1e-8,
            seed: 0,
        }
    }
}

/// A trained logistic model plus the standardization fitted on its training
/// data. Training is deterministic: weights start at zero and plain batch
/// gradient descent has no stochastic component.
#[derive(Clone, Debug)]
pub struct LogisticModel {
    pub weights: Vec<f64>,
    pub intercept: f64,
    pub means: Vec<f64>,
    pub scales: Vec<f64>,
    pub config: TrainConfig,
    pub iterations: usize,
    pub converged: bool,
}

impl LogisticModel {
    /// Linear score (log-odds) of one raw feature vector.
    pub fn decision(&self, features: &[f64]) -> f64 {
        let mut z = self.intercept;
        for ((x, m), (s, w)) in features
            .iter()
            .zip(&self.means)
            .zip(self.scales.iter().zip(&self.weights))
        {
            z += w * (x - m) / s;
        }
        z
    }

    pub fn predict_proba(&self, features: &[f64]) -> f64 {
        sigmoid(self.decision(features))
    }

    /// Mean log-loss plus the L2 penalty, on the given data.
    pub fn penalized_log_loss(&self, features: &[Vec<f64>], labels: &[bool]) -> f64 {
        let n = labels.len() as f64;
        let mut loss = 0.0;
        for (x, &y) in features.iter().zip(labels) {
            let z = self.decision(x);
            // log(1 + exp(z)) - y z, computed stably
            loss += z.max(0.0) + (-z.abs()).exp().ln_1p() - f64::from(y) * z;
        }
        loss / n + 0.5 * self.config.l2 * self.weights.iter().map(|w| w * w).sum::<f64>()
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// Fits an L2-regularized logistic regression by batch gradient descent on
/// standardized features. The intercept is not penalized. Standardization
/// statistics come from the given data only, so there is no leakage when
/// the caller holds out an evaluation set.
pub fn train(
    features: &[Vec<f64>],
    labels: &[bool],
    config: &TrainConfig,
) -> Result<LogisticModel> {
    if features.len() != labels.len() {
        return Err(Error::InvalidInput(format!(
            "{} feature rows but {} labels",
            features.len(),
            labels.len()
        )));
    }
    let positives = labels.iter().filter(|&&y| y).count();
    if positives == 0 || positives == labels.len() {
        return Err(Error::InvalidInput(
            "training labels contain a single class".into(),
        ));
    }
    let dims = features[0].len();
    if features.iter().any(|row| row.len() != dims) {
        return Err(Error::InvalidInput("ragged feature matrix".into()));
    }

    let n = features.len() as f64;
    let mut means = vec![0.0; dims];
    for row in features {
        for (m, x) in means.iter_mut().zip(row) {
            *m += x;
        }
    }
    for m in &mut means {
        *m /= n;
    }
    let mut scales = vec![0.0; dims];
    for row in features {
        for ((s, m), x) in scales.iter_mut().zip(&means).zip(row) {
            *s += (x - m).powi(2);
        }
    }
    for s in &mut scales {
        *s = (*s / n).sqrt();
        if *s == 0.0 {
            *s = 1.0; // constant column: centered to zero, weight stays put
        }
    }

    let standardized: Vec<Vec<f64>> = features
        .iter()
        .map(|row| {
            row.iter()
                .zip(means.iter().zip(&scales))
                .map(|(x, (m, s))| (x - m) / s)
                .collect()
        })
        .collect();

    let mut weights = vec![0.0; dims];
    let mut intercept = 0.0;
    let mut grad = vec![0.0; dims];
    let mut iterations = 0;
    let mut converged = false;
    for _ in 0..config.max_iters {
        iterations += 1;
        grad.iter_mut().for_each(|g| *g = 0.0);
        let mut grad_intercept = 0.0;
        for (row, &y) in standardized.iter().zip(labels) {
            let z = intercept
                + row
                    .iter()
                    .zip(&weights)
                    .map(|(x, w)| x * w)
                    .sum::<f64>();
            let err = sigmoid(z) - f64::from(y);
            grad_intercept += err;
            for (g, x) in grad.iter_mut().zip(row) {
                *g += err * x;
            }
        }
        grad_intercept /= n;
        let mut max_grad = grad_intercept.abs();
        for (g, w) in grad.iter_mut().zip(&weights) {
            *g = *g / n + config.l2 * w;
            max_grad = max_grad.max(g.abs());
        }
        if max_grad < config.tol {
            converged = true;
            break;
        }
        intercept -= config.learning_rate * grad_intercept;
        for (w, g) in weights.iter_mut().zip(&grad) {
            *w -= config.learning_rate * g;
        }
    }

    Ok(LogisticModel {
        weights,
        intercept,
        means,
        scales,
        config: config.clone(),
        iterations,
        converged,
    })
}

/// Area under the precision-recall curve by descending-score threshold
/// sweep. Ties are handled as threshold blocks: precision and recall are
/// evaluated only after all items of equal score are admitted, and the
/// area is the step sum `(R_i - R_{i-1}) * P_i` over blocks (average
/// precision, no trapezoids).
pub fn auc_pr(scores: &[f64], labels: &[bool]) -> Result<f64> {
    if scores.len() != labels.len() || scores.is_empty() {
        return Err(Error::InvalidInput(format!(
            "{} scores but {} labels",
            scores.len(),
            labels.len()
        )));
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::Domain("scores must be finite".into()));
    }
    let total_pos = labels.iter().filter(|&&y| y).count() as f64;
    if total_pos == 0.0 {
        return Err(Error::UndefinedScore("no positive examples".into()));
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_unstable_by(|&i, &j| scores[j].partial_cmp(&scores[i]).expect("finite"));

    let mut area = 0.0;
    let mut tp = 0.0;
    let mut seen = 0.0;
    let mut prev_recall = 0.0;
    let mut idx = 0;
    while idx < order.len() {
        let threshold = scores[order[idx]];
        while idx < order.len() && scores[order[idx]] == threshold {
            seen += 1.0;
            if labels[order[idx]] {
                tp += 1.0;
            }
            idx += 1;
        }
        let recall = tp / total_pos;
        let precision = tp / seen;
        area += (recall - prev_recall) * precision;
        prev_recall = recall;
    }
    Ok(area)
}

/// AUC-PR, the positive prevalence it should be compared against, and their
/// ratio.
#[derive(Clone, Debug)]
pub struct EvalResult {
    pub auc_pr: f64,
    pub random_baseline: f64,
    pub relative_score: f64,
    pub ci: Option<(f64, f64)>,
}

pub fn evaluate(scores: &[f64], labels: &[bool]) -> Result<EvalResult> {
    let auc = auc_pr(scores, labels)?;
    let prevalence = labels.iter().filter(|&&y| y).count() as f64 / labels.len() as f64;
    Ok(EvalResult {
        auc_pr: auc,
        random_baseline: prevalence,
        relative_score: auc / prevalence,
        ci: None,
    })
}

/// Percentile bootstrap interval for the relative AUC-PR: resample the
/// evaluation examples with replacement, recompute the relative score per
/// trial, and take the 2.5% and 97.5% percentiles. Resamples without a
/// positive example are redrawn (bounded retries).
pub fn bootstrap_ci(
    scores: &[f64],
    labels: &[bool],
    trials: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if trials < 2 {
        return Err(Error::Domain(format!(
            "bootstrap needs at least 2 trials, got {trials}"
        )));
    }
    auc_pr(scores, labels)?; // validates inputs
    let n = scores.len();
    let values: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 0xb007, trial as u64));
            let mut rs = vec![0.0; n];
            let mut rl = vec![false; n];
            for attempt in 0.. {
                if attempt >= 200 {
                    return Err(Error::Domain(
                        "bootstrap kept drawing resamples without positives".into(),
                    ));
                }
                let mut pos = 0usize;
                for i in 0..n {
                    let j = rng.gen_range(0..n);
                    rs[i] = scores[j];
                    rl[i] = labels[j];
                    pos += usize::from(labels[j]);
                }
                if pos > 0 {
                    break;
                }
            }
            let auc = auc_pr(&rs, &rl)?;
            let prevalence = rl.iter().filter(|&&y| y).count() as f64 / n as f64;
            Ok(auc / prevalence)
        })
        .collect::<Result<_>>()?;
    let mut sorted = values;
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    Ok((percentile(&sorted, 0.025), percentile(&sorted, 0.975)))
}

fn percentile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

#[derive(Clone, Debug)]
pub struct BenchmarkConfig {
    pub train_fraction: f64,
    pub train: TrainConfig,
    pub bootstrap_trials: usize,
    pub seed: u64,
}

impl Default for BenchmarkConfig {
    fn default() -> Self {
        BenchmarkConfig {
            train_fraction: 0.5,
            train: TrainConfig::default(),
            bootstrap_trials: 1000,
            seed: 0,
        }
    }
}

/// One benchmark row: candidate statistics, relative AUC-PR with and
/// without the class indicator, and the triangle homophily of the training
/// window under both baselines.
#[derive(Clone, Debug)]
pub struct BenchmarkRow {
    pub candidates: usize,
    pub positives: usize,
    pub without_labels: EvalResult,
    pub with_labels: EvalResult,
    /// Skeleton-baseline triangle score of the training complex, when
    /// defined.
    pub simplicial_k2: Option<f64>,
    /// Node-baseline triangle score of the training complex, when defined.
    pub hypergraph_g3: Option<f64>,
}

/// Runs the full protocol: temporal split, candidate generation, feature
/// extraction, two model fits, in-sample PR evaluation with bootstrap
/// intervals, and training-window homophily scores.
pub fn run_benchmark(ds: &TemporalDataset, cfg: &BenchmarkConfig) -> Result<BenchmarkRow> {
    let (train_window, test_window) = temporal_split(&ds.stream, cfg.train_fraction)?;
    let window = TrainingWindow::build(train_window)?;
    let candidates = window.candidates(test_window)?;
    if candidates.is_empty() {
        return Err(Error::Domain(
            "training window has no closed-unfilled triangles to predict".into(),
        ));
    }
    let labels: Vec<bool> = candidates.iter().map(|c| c.positive).collect();
    let with_features: Vec<Vec<f64>> = candidates
        .par_iter()
        .map(|c| window.extract_features(c.nodes, Some(&ds.labeling)))
        .collect::<Result<_>>()?;
    // The structural feature set is the same vector minus the indicator.
    let without_features: Vec<Vec<f64>> = with_features
        .iter()
        .map(|row| row[..row.len() - 1].to_vec())
        .collect();

    let eval = |features: &[Vec<f64>]| -> Result<EvalResult> {
        let model = train(features, &labels, &cfg.train)?;
        let scores: Vec<f64> = features.iter().map(|row| model.decision(row)).collect();
        let mut result = evaluate(&scores, &labels)?;
        result.ci = Some(bootstrap_ci(
            &scores,
            &labels,
            cfg.bootstrap_trials,
            cfg.seed,
        )?);
        Ok(result)
    };
    let without_labels = eval(&without_features)?;
    let with_labels = eval(&with_features)?;

    let soft = |r: Result<f64>| match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::UndefinedScore(_)) | Err(Error::Domain(_)) => Ok(None),
        Err(e) => Err(e),
    };
    let simplicial_k2 = soft(
        simplicial_score(window.complex(), &ds.labeling, 2).map(|r| r.score_f64()),
    )?;
    let hypergraph_g3 = soft(
        hypergraph_score_on_complex(window.complex(), &ds.labeling, 3).map(|r| r.score_f64()),
    )?;

    Ok(BenchmarkRow {
        candidates: candidates.len(),
        positives: labels.iter().filter(|&&y| y).count(),
        without_labels,
        with_labels,
        simplicial_k2,
        hypergraph_g3,
    })
}
