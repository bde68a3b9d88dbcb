//! Concept classes of small VC dimension, data distributions, exact labeling,
//! and empirical risk minimization that minimizes disagreements.
//!
//! Built-in classes are one-dimensional: thresholds (`+1` iff `x >= theta`,
//! `theta` in `[0,1]`, VC dimension 1) and intervals (`+1` iff `lo <= x <= hi`,
//! VC dimension 2), plus explicit finite hypothesis lists. ERM is exact, not
//! approximate: thresholds use a sorted sweep over the `m + 1` distinct cut
//! regions, intervals sweep all `O(m^2)` candidate endpoint pairs.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A binary label, written +1 / -1 throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Plus,
    Minus,
}

impl Label {
    pub fn sign(self) -> i8 {
        match self {
            Label::Plus => 1,
            Label::Minus => -1,
        }
    }

    pub fn from_sign(sign: i8) -> Result<Label> {
        match sign {
            1 => Ok(Label::Plus),
            -1 => Ok(Label::Minus),
            other => Err(Error::invalid(format!("label must be +1 or -1 (got {other})"))),
        }
    }

    pub fn flipped(self) -> Label {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.sign())
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.sign())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let sign = i8::deserialize(deserializer)?;
        Label::from_sign(sign).map_err(serde::de::Error::custom)
    }
}

/// A point in the example space, dimension 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq)]
#[derive(Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Point {
    dim: u8,
    coords: [f64; 2],
}

impl Point {
    pub fn one(x: f64) -> Point {
        Point { dim: 1, coords: [x, 0.0] }
    }

    pub fn two(x: f64, y: f64) -> Point {
        Point { dim: 2, coords: [x, y] }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// First coordinate.
    pub fn x(&self) -> f64 {
        self.coords[0]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords[..self.dim as usize]
    }
}

impl TryFrom<Vec<f64>> for Point {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Point> {
        if v.is_empty() || v.len() > 2 {
            return Err(Error::invalid(format!(
                "point must have 1 or 2 coordinates (got {})",
                v.len()
            )));
        }
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("point coordinates must be finite"));
        }
        Ok(if v.len() == 1 { Point::one(v[0]) } else { Point::two(v[0], v[1]) })
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Vec<f64> {
        p.coords().to_vec()
    }
}

/// A data point with a run-unique id. Worker labels are keyed on the id, which
/// is what makes re-queries of the same example persistent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Example {
    pub id: u64,
    pub point: Point,
}

/// Allocator for fresh example ids within a run.
#[derive(Debug, Default)]
pub struct ExampleIds {
    next: u64,
}

impl ExampleIds {
    pub fn new() -> ExampleIds {
        ExampleIds::default()
    }

    pub fn next_id(&mut self) -> u64 {
        let id = self.next;
        self.next += 1;
        id
    }
}

/// A single hypothesis. Thresholds label `+1` iff `x >= theta` (note the
/// boundary is positive); intervals label `+1` iff `lo <= x <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Hypothesis {
    Threshold(f64),
    Interval(f64, f64),
}

impl Hypothesis {
    pub fn threshold(theta: f64) -> Result<Hypothesis> {
        if !theta.is_finite() || !(0.0..=1.0).contains(&theta) {
            return Err(Error::invalid(format!("threshold must be in [0, 1] (got {theta})")));
        }
        Ok(Hypothesis::Threshold(theta))
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Hypothesis> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::invalid(format!(
                "interval endpoints must be finite with lo <= hi (got {lo}, {hi})"
            )));
        }
        Ok(Hypothesis::Interval(lo, hi))
    }

    pub fn evaluate(&self, point: &Point) -> Result<Label> {
        if point.dim() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: point.dim() });
        }
        let x = point.x();
        let positive = match *self {
            Hypothesis::Threshold(theta) => x >= theta,
            Hypothesis::Interval(lo, hi) => lo <= x && x <= hi,
        };
        Ok(if positive { Label::Plus } else { Label::Minus })
    }

    /// Positive region intersected with [0, 1], as (lo, hi) with hi >= lo
    /// (an empty region collapses to a zero-length pair).
    fn positive_region_unit(&self) -> (f64, f64) {
        let (lo, hi) = match *self {
            Hypothesis::Threshold(theta) => (theta, 1.0),
            Hypothesis::Interval(lo, hi) => (lo.max(0.0), hi.min(1.0)),
        };
        if hi < lo {
            (lo, lo)
        } else {
            (lo, hi)
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Hypothesis::Threshold(theta) => write!(f, "threshold:{theta}"),
            Hypothesis::Interval(lo, hi) => write!(f, "interval:{lo}:{hi}"),
        }
    }
}

impl FromStr for Hypothesis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Hypothesis> {
        let parts: Vec<&str> = s.split(':').collect();
        let parse = |t: &str| {
            t.parse::<f64>()
                .map_err(|_| Error::invalid(format!("bad hypothesis number `{t}` in `{s}`")))
        };
        match parts.as_slice() {
            ["threshold", t] => Hypothesis::threshold(parse(t)?),
            ["interval", lo, hi] => Hypothesis::interval(parse(lo)?, parse(hi)?),
            _ => Err(Error::invalid(format!(
                "bad hypothesis `{s}` (expected threshold:T or interval:LO:HI)"
            ))),
        }
    }
}

impl Serialize for Hypothesis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Hypothesis {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A hypothesis class with exact polynomial-time ERM.
#[derive(Debug, Clone, PartialEq)]
pub enum ConceptClass {
    Thresholds,
    Intervals,
    FiniteGrid(Vec<Hypothesis>),
}

impl ConceptClass {
    pub fn finite_grid(hypotheses: Vec<Hypothesis>) -> Result<ConceptClass> {
        if hypotheses.is_empty() {
            return Err(Error::invalid("finite grid must contain at least one hypothesis"));
        }
        Ok(ConceptClass::FiniteGrid(hypotheses))
    }

    /// VC dimension of the built-in classes; `None` for explicit grids, which
    /// use the finite-class sample bound instead.
    pub fn vc_dimension(&self) -> Option<usize> {
        match self {
            ConceptClass::Thresholds => Some(1),
            ConceptClass::Intervals => Some(2),
            ConceptClass::FiniteGrid(_) => None,
        }
    }

    /// Effective hypothesis count for the finite-class sample bound, given a
    /// per-parameter discretization grid of `grid` values.
    pub fn hypothesis_count(&self, grid: usize) -> usize {
        match self {
            ConceptClass::Thresholds => grid,
            ConceptClass::Intervals => grid * (grid + 1) / 2,
            ConceptClass::FiniteGrid(hs) => hs.len(),
        }
    }

    pub fn contains_dim(&self) -> usize {
        1
    }
}

/// The distribution unlabeled examples are drawn from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum DataDistribution {
    UniformUnitInterval,
    UniformUnitSquare,
    DiscreteWeighted { points: Vec<Point>, weights: Vec<f64> },
}

impl DataDistribution {
    pub fn discrete_weighted(points: Vec<Point>, weights: Vec<f64>) -> Result<DataDistribution> {
        let dist = DataDistribution::DiscreteWeighted { points, weights };
        dist.validate()?;
        Ok(dist)
    }

    /// Checks the structural invariants; discrete weights must be nonnegative
    /// and sum to 1 within 1e-12.
    pub fn validate(&self) -> Result<()> {
        if let DataDistribution::DiscreteWeighted { points, weights } = self {
            if points.is_empty() || points.len() != weights.len() {
                return Err(Error::invalid(
                    "discrete distribution needs matching, non-empty points and weights",
                ));
            }
            let dim = points[0].dim();
            if points.iter().any(|p| p.dim() != dim) {
                return Err(Error::invalid("discrete distribution points must share a dimension"));
            }
            if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
                return Err(Error::invalid("discrete weights must be nonnegative"));
            }
            let total: f64 = weights.iter().sum();
            if (total - 1.0).abs() > 1e-12 {
                return Err(Error::invalid(format!("discrete weights must sum to 1 (got {total})")));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        match self {
            DataDistribution::UniformUnitInterval => 1,
            DataDistribution::UniformUnitSquare => 2,
            DataDistribution::DiscreteWeighted { points, .. } => {
                points.first().map_or(1, |p| p.dim())
            }
        }
    }

    fn sample_point<R: Rng>(&self, rng: &mut R) -> Point {
        match self {
            DataDistribution::UniformUnitInterval => Point::one(rng.gen()),
            DataDistribution::UniformUnitSquare => Point::two(rng.gen(), rng.gen()),
            DataDistribution::DiscreteWeighted { points, weights } => {
                let u: f64 = rng.gen();
                let mut acc = 0.0;
                for (p, w) in points.iter().zip(weights) {
                    acc += w;
                    if u < acc {
                        return *p;
                    }
                }
                *points.last().expect("validated non-empty")
            }
        }
    }
}

/// Draws `m` i.i.d. examples with fresh unique ids.
pub fn sample_examples<R: Rng>(
    dist: &DataDistribution,
    m: usize,
    ids: &mut ExampleIds,
    rng: &mut R,
) -> Vec<Example> {
    (0..m)
        .map(|_| Example { id: ids.next_id(), point: dist.sample_point(rng) })
        .collect()
}

/// Evaluates the target concept on an example.
pub fn true_label(concept: &Hypothesis, example: &Example) -> Result<Label> {
    concept.evaluate(&example.point)
}

/// Probability mass of the positive class under `dist`, exact for the
/// built-in combinations.
pub fn positive_mass(concept: &Hypothesis, dist: &DataDistribution) -> Result<f64> {
    match dist {
        DataDistribution::UniformUnitInterval => {
            let (lo, hi) = concept.positive_region_unit();
            Ok(hi - lo)
        }
        DataDistribution::DiscreteWeighted { points, weights } => {
            let mut mass = 0.0;
            for (p, w) in points.iter().zip(weights) {
                if concept.evaluate(p)? == Label::Plus {
                    mass += w;
                }
            }
            Ok(mass)
        }
        DataDistribution::UniformUnitSquare => {
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        }
    }
}

/// Exact rate of disagreement between two hypotheses under `dist`.
///
/// Under the uniform unit interval this is the length of the symmetric
/// difference of the two positive regions; under a discrete distribution it is
/// the total weight of points where the labels differ. Combinations with no
/// closed form are served by [`disagreement_rate_monte_carlo`].
pub fn disagreement_rate(h1: &Hypothesis, h2: &Hypothesis, dist: &DataDistribution) -> Result<f64> {
    match dist {
        DataDistribution::UniformUnitInterval => {
            let (a_lo, a_hi) = h1.positive_region_unit();
            let (b_lo, b_hi) = h2.positive_region_unit();
            let len_a = a_hi - a_lo;
            let len_b = b_hi - b_lo;
            let overlap = (a_hi.min(b_hi) - a_lo.max(b_lo)).max(0.0);
            Ok((len_a + len_b - 2.0 * overlap).max(0.0))
        }
        DataDistribution::DiscreteWeighted { points, weights } => {
            let mut rate = 0.0;
            for (p, w) in points.iter().zip(weights) {
                if h1.evaluate(p)? != h2.evaluate(p)? {
                    rate += w;
                }
            }
            Ok(rate)
        }
        DataDistribution::UniformUnitSquare => {
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        }
    }
}

/// Monte Carlo disagreement estimate with its standard error.
pub fn disagreement_rate_monte_carlo<R: Rng>(
    h1: &Hypothesis,
    h2: &Hypothesis,
    dist: &DataDistribution,
    samples: usize,
    rng: &mut R,
) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::invalid("monte carlo disagreement needs at least one sample"));
    }
    let mut differ = 0usize;
    for _ in 0..samples {
        let p = dist.sample_point(rng);
        if h1.evaluate(&p)? != h2.evaluate(&p)? {
            differ += 1;
        }
    }
    let estimate = differ as f64 / samples as f64;
    let std_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok((estimate, std_error))
}

/// Returns a hypothesis in `class` achieving the minimum number of
/// disagreements with the sample. Ties break to the smallest canonical
/// parameter (lexicographic); the canonical parameter for a minimizing region
/// is its midpoint.
pub fn erm_min_disagreement(
    class: &ConceptClass,
    sample: &[(Example, Label)],
) -> Result<Hypothesis> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    match class {
        ConceptClass::Thresholds => erm_thresholds(sample),
        ConceptClass::Intervals => erm_intervals(sample),
        ConceptClass::FiniteGrid(hypotheses) => erm_grid(hypotheses, sample),
    }
}

/// Counts how many sample labels `h` disagrees with.
pub fn sample_disagreements(h: &Hypothesis, sample: &[(Example, Label)]) -> Result<usize> {
    let mut count = 0;
    for (example, label) in sample {
        if h.evaluate(&example.point)? != *label {
            count += 1;
        }
    }
    Ok(count)
}

struct SortedSample {
    /// (x, label) sorted by x.
    points: Vec<(f64, Label)>,
    /// pos_prefix[i] = number of Plus labels among the first i sorted points.
    pos_prefix: Vec<usize>,
    /// Region boundaries: {0, 1} plus every sample x inside [0, 1], sorted, deduped.
    bounds: Vec<f64>,
}

impl SortedSample {
    fn build(sample: &[(Example, Label)]) -> Result<SortedSample> {
        let mut points = Vec::with_capacity(sample.len());
        for (example, label) in sample {
            if example.point.dim() != 1 {
                return Err(Error::DimensionMismatch { expected: 1, got: example.point.dim() });
            }
            points.push((example.point.x(), *label));
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut pos_prefix = vec![0usize; points.len() + 1];
        for (i, &(_, label)) in points.iter().enumerate() {
            pos_prefix[i + 1] = pos_prefix[i] + usize::from(label == Label::Plus);
        }
        let mut bounds = vec![0.0, 1.0];
        bounds.extend(points.iter().map(|p| p.0).filter(|x| (0.0..=1.0).contains(x)));
        bounds.sort_by(f64::total_cmp);
        bounds.dedup();
        Ok(SortedSample { points, pos_prefix, bounds })
    }

    fn pos_total(&self) -> usize {
        self.pos_prefix[self.points.len()]
    }

    fn neg_total(&self) -> usize {
        self.points.len() - self.pos_total()
    }

    /// Index of the first point with x >= value.
    fn first_at_or_above(&self, value: f64) -> usize {
        self.points.partition_point(|p| p.0 < value)
    }

    /// Index one past the last point with x <= value.
    fn first_above(&self, value: f64) -> usize {
        self.points.partition_point(|p| p.0 <= value)
    }
}

fn erm_thresholds(sample: &[(Example, Label)]) -> Result<Hypothesis> {
    let s = SortedSample::build(sample)?;
    // theta = 0 is its own region (x = 0 is labeled +1 only there); every
    // other reachable labeling is represented by the midpoint of a region
    // between consecutive boundaries.
    let mut candidates = vec![0.0];
    candidates.extend(s.bounds.windows(2).map(|w| 0.5 * (w[0] + w[1])));

    let mut best_count = usize::MAX;
    let mut best_theta = 0.0;
    for &theta in &candidates {
        let idx = s.first_at_or_above(theta);
        // Points below theta are labeled Minus (Plus labels there disagree);
        // points at or above theta are labeled Plus (Minus labels disagree).
        let count = s.pos_prefix[idx] + (s.neg_total() - (idx - s.pos_prefix[idx]));
        if count < best_count {
            best_count = count;
            best_theta = theta;
        }
    }
    Hypothesis::threshold(best_theta)
}

fn erm_intervals(sample: &[(Example, Label)]) -> Result<Hypothesis> {
    let s = SortedSample::build(sample)?;
    let mut lo_candidates = vec![0.0];
    lo_candidates.extend(s.bounds.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    let mut hi_candidates: Vec<f64> = s.bounds.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    hi_candidates.push(1.0);

    let pos_total = s.pos_total();
    let mut best_count = usize::MAX;
    let mut best = (0.0, 0.0);
    for &lo in &lo_candidates {
        let lo_idx = s.first_at_or_above(lo);
        for &hi in &hi_candidates {
            if hi < lo {
                continue;
            }
            let hi_idx = s.first_above(hi);
            let pos_inside = s.pos_prefix[hi_idx] - s.pos_prefix[lo_idx];
            let neg_inside = (hi_idx - lo_idx) - pos_inside;
            let count = neg_inside + (pos_total - pos_inside);
            if count < best_count {
                best_count = count;
                best = (lo, hi);
            }
        }
    }
    Hypothesis::interval(best.0, best.1)
}

fn erm_grid(hypotheses: &[Hypothesis], sample: &[(Example, Label)]) -> Result<Hypothesis> {
    let mut best: Option<(usize, Hypothesis)> = None;
    for h in hypotheses {
        let count = sample_disagreements(h, sample)?;
        if best.as_ref().is_none_or(|(c, _)| count < *c) {
            best = Some((count, *h));
        }
    }
    best.map(|(_, h)| h).ok_or(Error::EmptySample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ex(id: u64, x: f64) -> Example {
        Example { id, point: Point::one(x) }
    }

    fn labeled(points: &[(f64, i8)]) -> Vec<(Example, Label)> {
        points
            .iter()
            .enumerate()
            .map(|(i, &(x, s))| (ex(i as u64, x), Label::from_sign(s).unwrap()))
            .collect()
    }

    #[test]
    fn sample_zero_is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut ids = ExampleIds::new();
        let out = sample_examples(&DataDistribution::UniformUnitInterval, 0, &mut ids, &mut rng);
        assert!(out.is_empty());
    }

    #[test]
    fn sample_uniform_mean_matches_clt_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut ids = ExampleIds::new();
        let out = sample_examples(&DataDistribution::UniformUnitInterval, 10_000, &mut ids, &mut rng);
        let mean: f64 = out.iter().map(|e| e.point.x()).sum::<f64>() / out.len() as f64;
        assert!((0.48..=0.52).contains(&mean), "mean {mean}");
    }

    #[test]
    fn sample_point_mass_repeats_point() {
        let dist = DataDistribution::discrete_weighted(vec![Point::one(0.3)], vec![1.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut ids = ExampleIds::new();
        let out = sample_examples(&dist, 3, &mut ids, &mut rng);
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|e| e.point == Point::one(0.3)));
        // Fresh unique ids even for identical points.
        assert_eq!(out.iter().map(|e| e.id).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn true_label_threshold_and_boundary() {
        let h = Hypothesis::threshold(0.5).unwrap();
        assert_eq!(true_label(&h, &ex(0, 0.7)).unwrap(), Label::Plus);
        assert_eq!(true_label(&h, &ex(1, 0.5)).unwrap(), Label::Plus);
        assert_eq!(true_label(&h, &ex(2, 0.49)).unwrap(), Label::Minus);
    }

    #[test]
    fn true_label_interval() {
        let h = Hypothesis::interval(0.2, 0.4).unwrap();
        assert_eq!(true_label(&h, &ex(0, 0.5)).unwrap(), Label::Minus);
        assert_eq!(true_label(&h, &ex(1, 0.2)).unwrap(), Label::Plus);
    }

    #[test]
    fn true_label_dimension_mismatch() {
        let h = Hypothesis::threshold(0.5).unwrap();
        let e = Example { id: 0, point: Point::two(0.1, 0.2) };
        assert_eq!(
            true_label(&h, &e),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        );
    }

    #[test]
    fn erm_realizable_threshold_returns_region_midpoint() {
        let sample = labeled(&[(0.2, -1), (0.4, -1), (0.6, 1)]);
        let h = erm_min_disagreement(&ConceptClass::Thresholds, &sample).unwrap();
        assert_eq!(h, Hypothesis::Threshold(0.5));
        assert_eq!(sample_disagreements(&h, &sample).unwrap(), 0);
    }

    #[test]
    fn erm_threshold_min_one_disagreement_takes_smallest_region() {
        let sample = labeled(&[(0.1, -1), (0.3, 1), (0.5, -1), (0.7, 1), (0.9, 1)]);
        let h = erm_min_disagreement(&ConceptClass::Thresholds, &sample).unwrap();
        assert_eq!(h, Hypothesis::Threshold(0.2));
        assert_eq!(sample_disagreements(&h, &sample).unwrap(), 1);
    }

    #[test]
    fn erm_single_grid_hypothesis_wins_regardless() {
        let only = Hypothesis::threshold(0.9).unwrap();
        let class = ConceptClass::finite_grid(vec![only]).unwrap();
        let sample = labeled(&[(0.1, 1), (0.2, 1)]);
        assert_eq!(erm_min_disagreement(&class, &sample).unwrap(), only);
    }

    #[test]
    fn erm_empty_sample_errors() {
        assert_eq!(
            erm_min_disagreement(&ConceptClass::Thresholds, &[]),
            Err(Error::EmptySample)
        );
    }

    #[test]
    fn erm_interval_realizable() {
        let target = Hypothesis::interval(0.3, 0.6).unwrap();
        let xs = [0.1, 0.25, 0.35, 0.4, 0.55, 0.7, 0.9];
        let sample: Vec<_> = xs
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let e = ex(i as u64, x);
                let l = target.evaluate(&e.point).unwrap();
                (e, l)
            })
            .collect();
        let h = erm_min_disagreement(&ConceptClass::Intervals, &sample).unwrap();
        assert_eq!(sample_disagreements(&h, &sample).unwrap(), 0);
    }

    #[test]
    fn erm_interval_all_negative_takes_lexicographic_smallest() {
        let sample = labeled(&[(0.4, -1), (0.8, -1)]);
        let h = erm_min_disagreement(&ConceptClass::Intervals, &sample).unwrap();
        // First zero-disagreement candidate: lo = 0, hi = midpoint of [0, 0.4).
        assert_eq!(h, Hypothesis::Interval(0.0, 0.2));
    }

    #[test]
    fn disagreement_rate_closed_forms() {
        let u = DataDistribution::UniformUnitInterval;
        let t1 = Hypothesis::threshold(0.2).unwrap();
        let t2 = Hypothesis::threshold(0.6).unwrap();
        assert_eq!(disagreement_rate(&t1, &t1, &u).unwrap(), 0.0);
        assert!((disagreement_rate(&t1, &t2, &u).unwrap() - 0.4).abs() < 1e-12);

        let i1 = Hypothesis::interval(0.1, 0.5).unwrap();
        let i2 = Hypothesis::interval(0.3, 0.7).unwrap();
        assert!((disagreement_rate(&i1, &i2, &u).unwrap() - 0.4).abs() < 1e-12);
    }

    #[test]
    fn disagreement_rate_discrete_exact() {
        let dist = DataDistribution::discrete_weighted(
            vec![Point::one(0.1), Point::one(0.9)],
            vec![0.25, 0.75],
        )
        .unwrap();
        let t1 = Hypothesis::threshold(0.0).unwrap();
        let t2 = Hypothesis::threshold(0.5).unwrap();
        // They differ only on x = 0.1.
        assert!((disagreement_rate(&t1, &t2, &dist).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn disagreement_rate_square_is_dimension_mismatch() {
        let t = Hypothesis::threshold(0.5).unwrap();
        assert!(matches!(
            disagreement_rate(&t, &t, &DataDistribution::UniformUnitSquare),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn monte_carlo_rate_agrees_with_closed_form() {
        let u = DataDistribution::UniformUnitInterval;
        let t1 = Hypothesis::threshold(0.25).unwrap();
        let i2 = Hypothesis::interval(0.5, 0.75).unwrap();
        let exact = disagreement_rate(&t1, &i2, &u).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (est, se) = disagreement_rate_monte_carlo(&t1, &i2, &u, 40_000, &mut rng).unwrap();
        assert!((est - exact).abs() < 4.0 * se + 1e-9, "est {est} exact {exact} se {se}");
    }

    #[test]
    fn positive_mass_closed_forms() {
        let u = DataDistribution::UniformUnitInterval;
        assert!((positive_mass(&Hypothesis::threshold(0.3).unwrap(), &u).unwrap() - 0.7).abs() < 1e-12);
        assert!((positive_mass(&Hypothesis::interval(0.2, 0.5).unwrap(), &u).unwrap() - 0.3).abs() < 1e-12);
    }

    #[test]
    fn weights_must_sum_to_one() {
        let bad = DataDistribution::discrete_weighted(
            vec![Point::one(0.1), Point::one(0.2)],
            vec![0.5, 0.6],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn hypothesis_text_round_trip() {
        for h in [
            Hypothesis::threshold(0.5).unwrap(),
            Hypothesis::interval(0.2, 0.4).unwrap(),
        ] {
            let text = h.to_string();
            let back: Hypothesis = text.parse().unwrap();
            assert_eq!(back, h);
        }
        assert_eq!(Hypothesis::threshold(0.5).unwrap().to_string(), "threshold:0.5");
        assert_eq!(
            Hypothesis::interval(0.2, 0.4).unwrap().to_string(),
            "interval:0.2:0.4"
        );
    }

    proptest! {
        // ERM consistency: labels generated by an in-class hypothesis are fit
        // with zero disagreements.
        #[test]
        fn erm_threshold_realizable_consistency(
            theta in 0.0..=1.0f64,
            xs in proptest::collection::vec(0.0..1.0f64, 1..40),
        ) {
            let target = Hypothesis::threshold(theta).unwrap();
            let sample: Vec<_> = xs
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    let e = ex(i as u64, x);
                    let l = target.evaluate(&e.point).unwrap();
                    (e, l)
                })
                .collect();
            let h = erm_min_disagreement(&ConceptClass::Thresholds, &sample).unwrap();
            prop_assert_eq!(sample_disagreements(&h, &sample).unwrap(), 0);
        }

        // disagreement_rate is a pseudometric under the uniform unit interval.
        #[test]
        fn disagreement_rate_pseudometric(
            t1 in 0.0..=1.0f64,
            t2 in 0.0..=1.0f64,
            lo in 0.0..=1.0f64,
            width in 0.0..=1.0f64,
        ) {
            let u = DataDistribution::UniformUnitInterval;
            let a = Hypothesis::threshold(t1).unwrap();
            let b = Hypothesis::threshold(t2).unwrap();
            let c = Hypothesis::interval(lo, (lo + width).min(1.0)).unwrap();
            let dab = disagreement_rate(&a, &b, &u).unwrap();
            let dba = disagreement_rate(&b, &a, &u).unwrap();
            let dac = disagreement_rate(&a, &c, &u).unwrap();
            let dcb = disagreement_rate(&c, &b, &u).unwrap();
            prop_assert!((dab - dba).abs() < 1e-12);
            prop_assert!(disagreement_rate(&a, &a, &u).unwrap().abs() < 1e-12);
            prop_assert!(dab <= dac + dcb + 1e-12);
        }
    }
}
