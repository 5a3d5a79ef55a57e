//! Group homophily scores.
//!
//! Two families are provided. Homogeneous scores compare the fraction of
//! all-same-class groups against a baseline; heterogeneous scores do the
//! same per class and per type `t` (the number of group members in that
//! class). Each family has two baselines:
//!
//! * the *node baseline*: the chance a uniformly random node set of the
//!   same size is homogeneous (or of type `t`), which depends only on the
//!   class counts;
//! * the *skeleton baseline*: the same affinity evaluated over the set of
//!   potential `k`-simplices of a complex, i.e. conditioned on where a
//!   group could legally form given the lower-dimensional structure.
//!
//! The skeleton baseline isolates group-level effects from pairwise ones:
//! a score of 1 means groups are placed into the available positions as if
//! class-blind, even when the positions themselves are strongly assortative.
//!
//! All ratios are computed in exact rational arithmetic and converted to
//! floating point only for reporting.

use num::{BigInt, BigRational, ToPrimitive, Zero};

use crate::combin::{binomial, ratio, ratio_u64};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::labeling::ClassLabeling;
use crate::simplex::NodeId;

/// A homophily score. Scores are ratios of two group fractions, so the
/// degenerate zero-baseline-with-observations case is flagged instead of
/// being folded into a float infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ScoreValue {
    Finite(BigRational),
    /// Baseline zero with a nonzero affinity.
    Infinite,
}

impl ScoreValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ScoreValue::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
            ScoreValue::Infinite => f64::INFINITY,
        }
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ScoreValue::Finite(r) => Some(r),
            ScoreValue::Infinite => None,
        }
    }
}

/// An affinity / baseline / score triple, plus the raw counts behind the
/// two ratios. `score * baseline = affinity` holds exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScoreReport {
    pub affinity: BigRational,
    pub baseline: BigRational,
    pub score: ScoreValue,
    /// Homogeneous groups among the observed groups.
    pub homogeneous_groups: u64,
    /// Observed groups.
    pub total_groups: u64,
    pub baseline_numerator: BigInt,
    pub baseline_denominator: BigInt,
}

impl ScoreReport {
    fn build(
        homogeneous: u64,
        total: u64,
        baseline_numerator: BigInt,
        baseline_denominator: BigInt,
        what: &str,
    ) -> Result<Self> {
        let affinity = ratio_u64(homogeneous, total)
            .ok_or_else(|| Error::UndefinedScore(format!("no observed groups for {what}")))?;
        let baseline = ratio(baseline_numerator.clone(), baseline_denominator.clone())
            .ok_or_else(|| Error::UndefinedScore(format!("empty baseline set for {what}")))?;
        let score = if baseline.is_zero() {
            if affinity.is_zero() {
                return Err(Error::UndefinedScore(format!(
                    "baseline and affinity are both zero for {what}"
                )));
            }
            ScoreValue::Infinite
        } else {
            ScoreValue::Finite(&affinity / &baseline)
        };
        Ok(ScoreReport {
            affinity,
            baseline,
            score,
            homogeneous_groups: homogeneous,
            total_groups: total,
            baseline_numerator,
            baseline_denominator,
        })
    }

    pub fn affinity_f64(&self) -> f64 {
        self.affinity.to_f64().unwrap_or(f64::NAN)
    }

    pub fn baseline_f64(&self) -> f64 {
        self.baseline.to_f64().unwrap_or(f64::NAN)
    }

    pub fn score_f64(&self) -> f64 {
        self.score.to_f64()
    }
}

/// Counts homogeneous groups: `(homogeneous, total)`.
pub fn affinity_counts<I, S>(groups: I, labeling: &ClassLabeling) -> Result<(u64, u64)>
where
    I: IntoIterator<Item = S>,
    S: AsRef<[NodeId]>,
{
    let mut homogeneous = 0u64;
    let mut total = 0u64;
    for g in groups {
        total += 1;
        if labeling.is_homogeneous(g.as_ref())? {
            homogeneous += 1;
        }
    }
    Ok((homogeneous, total))
}

/// Fraction of groups whose members all share one class.
pub fn affinity<I, S>(groups: I, labeling: &ClassLabeling) -> Result<BigRational>
where
    I: IntoIterator<Item = S>,
    S: AsRef<[NodeId]>,
{
    let (h, t) = affinity_counts(groups, labeling)?;
    ratio_u64(h, t).ok_or_else(|| Error::UndefinedScore("no groups to score".into()))
}

fn node_baseline_counts(class_counts: &[u64], n: u64, g: usize) -> (BigInt, BigInt) {
    let numerator: BigInt = class_counts.iter().map(|&nc| binomial(nc, g as u64)).sum();
    (numerator, binomial(n, g as u64))
}

/// Probability that a uniformly random `g`-subset of the labeled nodes is
/// homogeneous.
pub fn hypergraph_baseline(labeling: &ClassLabeling, g: usize) -> Result<BigRational> {
    let n = labeling.num_nodes() as u64;
    check_group_size(g, n)?;
    let (num, den) = node_baseline_counts(labeling.class_counts(), n, g);
    ratio(num, den).ok_or_else(|| Error::UndefinedScore("no g-subsets exist".into()))
}

fn check_group_size(g: usize, n: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::Domain(format!("group size must be >= 2, got {g}")));
    }
    if g as u64 > n {
        return Err(Error::Domain(format!(
            "group size {g} exceeds the {n} labeled nodes"
        )));
    }
    Ok(())
}

/// Homophily of the size-`g` hyperedges against the node baseline over the
/// labeling's universe. Above 1 means homophily, below 1 anti-homophily.
/// With `g = 2` this is the classical graph homophily score.
pub fn hypergraph_score(
    h: &Hypergraph,
    labeling: &ClassLabeling,
    g: usize,
) -> Result<ScoreReport> {
    hypergraph_score_on_groups(
        h.edges_of_size(g).map(|s| s.vertices().to_vec()),
        labeling,
        labeling.class_counts().to_vec(),
        labeling.num_nodes() as u64,
        g,
    )
}

/// Homophily of the `(g-1)`-simplices of a complex against the node
/// baseline. The baseline universe is the complex's own vertex set, so
/// scoring a sub-window of a larger dataset conditions on the nodes that
/// actually appear there.
pub fn hypergraph_score_on_complex(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    g: usize,
) -> Result<ScoreReport> {
    let counts = labeling.counts_for(x.vertices())?;
    hypergraph_score_on_groups(
        x.simplices(g - 1).map(|s| s.vertices().to_vec()),
        labeling,
        counts,
        x.num_vertices() as u64,
        g,
    )
}

fn hypergraph_score_on_groups<I, S>(
    groups: I,
    labeling: &ClassLabeling,
    class_counts: Vec<u64>,
    n: u64,
    g: usize,
) -> Result<ScoreReport>
where
    I: IntoIterator<Item = S>,
    S: AsRef<[NodeId]>,
{
    check_group_size(g, n)?;
    let (homogeneous, total) = affinity_counts(groups, labeling)?;
    if total == 0 {
        return Err(Error::UndefinedScore(format!(
            "no groups of size {g} observed"
        )));
    }
    let (num, den) = node_baseline_counts(&class_counts, n, g);
    let report = ScoreReport::build(homogeneous, total, num, den, "the node baseline")?;
    if report.baseline.is_zero() {
        // Every class is smaller than g, so no homogeneous group can exist
        // under this labeling; a nonzero affinity would mean inconsistent
        // inputs. Either way the ratio is not a meaningful score.
        return Err(Error::UndefinedScore(format!(
            "node baseline is zero: every class has fewer than {g} nodes"
        )));
    }
    Ok(report)
}

/// Counts over the potential `k`-simplices: `(homogeneous, total)`.
pub fn skeleton_baseline_counts(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    k: usize,
) -> Result<(u64, u64)> {
    let mut homogeneous = 0u64;
    let mut total = 0u64;
    let mut first_err = None;
    x.for_each_potential_k_simplex(k, |vs| {
        if first_err.is_some() {
            return;
        }
        match labeling.is_homogeneous(vs) {
            Ok(true) => {
                homogeneous += 1;
                total += 1;
            }
            Ok(false) => total += 1,
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    Ok((homogeneous, total))
}

/// Fraction of potential `k`-simplices that are homogeneous: the chance a
/// `k`-simplex placed uniformly at random into the `(k-1)`-skeleton lands
/// on a homogeneous node set.
pub fn simplicial_baseline(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    k: usize,
) -> Result<BigRational> {
    let (h, t) = skeleton_baseline_counts(x, labeling, k)?;
    ratio_u64(h, t).ok_or_else(|| {
        Error::UndefinedScore(format!("no potential {k}-simplices in the skeleton"))
    })
}

/// The `k`-simplicial homophily score: affinity of the `k`-simplices over
/// the skeleton baseline.
pub fn simplicial_score(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    k: usize,
) -> Result<ScoreReport> {
    let (homogeneous, total) =
        affinity_counts(x.simplices(k).map(|s| s.vertices().to_vec()), labeling)?;
    if total == 0 {
        return Err(Error::UndefinedScore(format!("no {k}-simplices observed")));
    }
    let (bh, bt) = skeleton_baseline_counts(x, labeling, k)?;
    ScoreReport::build(
        homogeneous,
        total,
        BigInt::from(bh),
        BigInt::from(bt),
        "the skeleton baseline",
    )
}

/// Per-type observation counts for one class: `counts[t]` is the number of
/// size-`g` groups with exactly `t` members of the class, `t = 0..=g`.
pub fn type_counts<I, S>(
    groups: I,
    class: u32,
    g: usize,
    labeling: &ClassLabeling,
) -> Result<Vec<u64>>
where
    I: IntoIterator<Item = S>,
    S: AsRef<[NodeId]>,
{
    let mut counts = vec![0u64; g + 1];
    for group in groups {
        let vs = group.as_ref();
        if vs.len() != g {
            continue;
        }
        let t = labeling.type_count(vs, class)?;
        counts[t] += 1;
    }
    Ok(counts)
}

fn type_affinity_from_counts(counts: &[u64], t: usize) -> Option<BigRational> {
    let g = counts.len() - 1;
    let denominator: u64 = (1..=g).map(|i| i as u64 * counts[i]).sum();
    if denominator == 0 {
        return None;
    }
    ratio_u64(t as u64 * counts[t], denominator)
}

/// Type-`t` affinity for a class: among all group-membership slots occupied
/// by that class in size-`g` groups, the fraction sitting in groups with
/// exactly `t` members of the class. Sums to 1 over `t = 1..=g`.
pub fn type_affinity<I, S>(
    groups: I,
    class: u32,
    t: usize,
    g: usize,
    labeling: &ClassLabeling,
) -> Result<BigRational>
where
    I: IntoIterator<Item = S>,
    S: AsRef<[NodeId]>,
{
    check_type(t, g)?;
    let counts = type_counts(groups, class, g, labeling)?;
    type_affinity_from_counts(&counts, t).ok_or_else(|| {
        Error::UndefinedScore(format!(
            "class {class} does not appear in any group of size {g}"
        ))
    })
}

fn check_type(t: usize, g: usize) -> Result<()> {
    if t < 1 || t > g {
        return Err(Error::Domain(format!(
            "type must satisfy 1 <= t <= g, got t={t} g={g}"
        )));
    }
    Ok(())
}

/// Node baseline for type-`t` groups: the hypergeometric probability that a
/// random size-`g` group containing a fixed class member has exactly `t`
/// members of that class. Sums to 1 over `t = 1..=g`; parameters outside
/// the support yield 0.
pub fn hetero_hypergraph_baseline(
    labeling: &ClassLabeling,
    class: u32,
    t: usize,
    g: usize,
) -> Result<BigRational> {
    if class as usize >= labeling.num_classes() {
        return Err(Error::UnknownClass {
            class,
            classes: labeling.num_classes(),
        });
    }
    hetero_node_baseline_from_counts(
        labeling.num_nodes() as u64,
        labeling.class_counts()[class as usize],
        t,
        g,
    )
}

/// Same as [`hetero_hypergraph_baseline`] but over an explicit universe of
/// `n` nodes of which `n_c` carry the class.
pub fn hetero_node_baseline_from_counts(
    n: u64,
    n_c: u64,
    t: usize,
    g: usize,
) -> Result<BigRational> {
    check_type(t, g)?;
    check_group_size(g, n)?;
    if n_c == 0 {
        return Err(Error::Domain(
            "type baseline needs at least one node of the class".into(),
        ));
    }
    let numerator = binomial(n_c - 1, t as u64 - 1) * binomial(n - n_c, (g - t) as u64);
    let denominator = binomial(n - 1, g as u64 - 1);
    ratio(numerator, denominator)
        .ok_or_else(|| Error::Domain("fewer than g-1 other nodes exist".into()))
}

/// Per-type counts over the potential `k`-simplices.
pub fn type_counts_over_potentials(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    class: u32,
    k: usize,
) -> Result<Vec<u64>> {
    if class as usize >= labeling.num_classes() {
        return Err(Error::UnknownClass {
            class,
            classes: labeling.num_classes(),
        });
    }
    let g = k + 1;
    let mut counts = vec![0u64; g + 1];
    let mut first_err = None;
    x.for_each_potential_k_simplex(k, |vs| {
        if first_err.is_some() {
            return;
        }
        match labeling.type_count(vs, class) {
            Ok(t) => counts[t] += 1,
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    Ok(counts)
}

/// Skeleton baseline for type-`t` groups: the type-`t` affinity evaluated
/// over the potential `k`-simplices.
pub fn hetero_simplicial_baseline(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    class: u32,
    t: usize,
    k: usize,
) -> Result<BigRational> {
    check_type(t, k + 1)?;
    let counts = type_counts_over_potentials(x, labeling, class, k)?;
    type_affinity_from_counts(&counts, t).ok_or_else(|| {
        Error::UndefinedScore(format!(
            "class {class} absent from all potential {k}-simplices"
        ))
    })
}

/// One row of a heterogeneous score profile.
#[derive(Clone, Debug)]
pub struct TypeEntry {
    pub t: usize,
    /// Observed size-`g` groups with exactly `t` members of the class.
    pub count: u64,
    /// `None` when the class appears in no observed group of this size.
    pub affinity: Option<BigRational>,
    /// `None` when the baseline itself is undefined (e.g. class absent from
    /// every potential position).
    pub baseline: Option<BigRational>,
    /// `None` when either side is undefined; `Infinite` when the baseline is
    /// zero but the affinity is not.
    pub score: Option<ScoreValue>,
}

impl TypeEntry {
    fn from_parts(
        t: usize,
        count: u64,
        affinity: Option<BigRational>,
        baseline: Option<BigRational>,
    ) -> Self {
        let score = match (&affinity, &baseline) {
            (Some(a), Some(b)) => {
                if b.is_zero() {
                    if a.is_zero() {
                        None
                    } else {
                        Some(ScoreValue::Infinite)
                    }
                } else {
                    Some(ScoreValue::Finite(a / b))
                }
            }
            _ => None,
        };
        TypeEntry {
            t,
            count,
            affinity,
            baseline,
            score,
        }
    }
}

/// Heterogeneous homophily profile of one class at one group size: per-type
/// affinities, baselines, and scores for `t = 1..=g`.
#[derive(Clone, Debug)]
pub struct TypeProfile {
    pub class: u32,
    pub group_size: usize,
    pub entries: Vec<TypeEntry>,
}

/// Profile against the node baseline, over the size-`g` hyperedges.
pub fn hetero_hypergraph_profile(
    h: &Hypergraph,
    labeling: &ClassLabeling,
    class: u32,
    g: usize,
) -> Result<TypeProfile> {
    let counts = type_counts(
        h.edges_of_size(g).map(|s| s.vertices().to_vec()),
        class,
        g,
        labeling,
    )?;
    let mut entries = Vec::with_capacity(g);
    for t in 1..=g {
        let affinity = type_affinity_from_counts(&counts, t);
        let baseline = hetero_hypergraph_baseline(labeling, class, t, g).ok();
        entries.push(TypeEntry::from_parts(t, counts[t], affinity, baseline));
    }
    Ok(TypeProfile {
        class,
        group_size: g,
        entries,
    })
}

/// Profile against the node baseline, over the `(g-1)`-simplices of a
/// complex. As with [`hypergraph_score_on_complex`], the baseline universe
/// is the complex's own vertex set.
pub fn hetero_hypergraph_profile_on_complex(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    class: u32,
    g: usize,
) -> Result<TypeProfile> {
    if class as usize >= labeling.num_classes() {
        return Err(Error::UnknownClass {
            class,
            classes: labeling.num_classes(),
        });
    }
    let counts = type_counts(
        x.simplices(g - 1).map(|s| s.vertices().to_vec()),
        class,
        g,
        labeling,
    )?;
    let universe = labeling.counts_for(x.vertices())?;
    let n: u64 = universe.iter().sum();
    let n_c = universe[class as usize];
    let mut entries = Vec::with_capacity(g);
    for t in 1..=g {
        let affinity = type_affinity_from_counts(&counts, t);
        let baseline = hetero_node_baseline_from_counts(n, n_c, t, g).ok();
        entries.push(TypeEntry::from_parts(t, counts[t], affinity, baseline));
    }
    Ok(TypeProfile {
        class,
        group_size: g,
        entries,
    })
}

/// Profile against the skeleton baseline, over the `k`-simplices of a
/// complex.
pub fn hetero_simplicial_profile(
    x: &SimplicialComplex,
    labeling: &ClassLabeling,
    class: u32,
    k: usize,
) -> Result<TypeProfile> {
    let g = k + 1;
    let observed = type_counts(
        x.simplices(k).map(|s| s.vertices().to_vec()),
        class,
        g,
        labeling,
    )?;
    let potential = type_counts_over_potentials(x, labeling, class, k)?;
    let mut entries = Vec::with_capacity(g);
    for t in 1..=g {
        let affinity = type_affinity_from_counts(&observed, t);
        let baseline = type_affinity_from_counts(&potential, t);
        entries.push(TypeEntry::from_parts(t, observed[t], affinity, baseline));
    }
    Ok(TypeProfile {
        class,
        group_size: g,
        entries,
    })
}
