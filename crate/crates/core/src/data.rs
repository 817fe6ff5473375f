//! Non-physics data sources: a synthetic ambiguous-function generator with
//! known conditional mean and spread, and the credit-scoring pipeline
//! (ingestion, min-max normalization, stratified split, class-alternating
//! sampler).

use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::nn::Sample;
use crate::twin::IndexSampler;

/// A scalar function of `x` on [0, 1], used for both the conditional mean
/// and the spread amplitude of a synthetic mixture.
#[derive(Debug, Clone, PartialEq)]
pub enum FnSpec {
    Constant(f64),
    Linear { slope: f64, intercept: f64 },
    /// Right-continuous step function: `values[i]` applies on
    /// `[breaks[i-1], breaks[i])`, with `values.len() == breaks.len() + 1`.
    PiecewiseConstant { breaks: Vec<f64>, values: Vec<f64> },
}

impl FnSpec {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            FnSpec::Constant(c) => *c,
            FnSpec::Linear { slope, intercept } => slope * x + intercept,
            FnSpec::PiecewiseConstant { breaks, values } => {
                let piece = breaks.iter().take_while(|&&b| x >= b).count();
                values[piece]
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = |v: f64| v.is_finite();
        match self {
            FnSpec::Constant(c) if finite(*c) => Ok(()),
            FnSpec::Linear { slope, intercept } if finite(*slope) && finite(*intercept) => Ok(()),
            FnSpec::PiecewiseConstant { breaks, values } => {
                if values.len() != breaks.len() + 1 {
                    return Err(Error::Config(format!(
                        "piecewise spec needs breaks+1 values, got {} breaks and {} values",
                        breaks.len(),
                        values.len()
                    )));
                }
                if !breaks.windows(2).all(|w| w[0] < w[1])
                    || breaks.iter().any(|&b| !(0.0..=1.0).contains(&b))
                {
                    return Err(Error::Config(
                        "piecewise breaks must be strictly increasing within [0, 1]".into(),
                    ));
                }
                if values.iter().chain(breaks.iter()).any(|v| !finite(*v)) {
                    return Err(Error::Config("piecewise spec has non-finite entries".into()));
                }
                Ok(())
            }
            _ => Err(Error::Config("function spec has non-finite parameters".into())),
        }
    }

    fn breakpoints(&self) -> Vec<f64> {
        match self {
            FnSpec::PiecewiseConstant { breaks, .. } => breaks.clone(),
            _ => Vec::new(),
        }
    }

    /// Values approached at the left and right end of an interval on which
    /// this spec has no interior breakpoint.
    fn ends_on(&self, lo: f64, hi: f64) -> (f64, f64) {
        match self {
            FnSpec::Constant(c) => (*c, *c),
            FnSpec::Linear { slope, intercept } => {
                (slope * lo + intercept, slope * hi + intercept)
            }
            FnSpec::PiecewiseConstant { .. } => {
                let v = self.eval(0.5 * (lo + hi));
                (v, v)
            }
        }
    }
}

/// A symmetric two-point mixture: at each `x` the target is
/// `mean(x) + spread(x)` or `mean(x) - spread(x)` with probability 1/2.
/// The mixture's conditional mean is `mean(x)` and its expected absolute
/// deviation is `spread(x)`, which makes it an exact oracle for the twin
/// scheme's fixed points.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub mean_fn: FnSpec,
    pub spread_fn: FnSpec,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        self.mean_fn.validate()?;
        self.spread_fn.validate()?;
        let mut edges = vec![0.0, 1.0];
        edges.extend(self.mean_fn.breakpoints());
        edges.extend(self.spread_fn.breakpoints());
        edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
        edges.dedup();
        for w in edges.windows(2) {
            let (m_lo, m_hi) = self.mean_fn.ends_on(w[0], w[1]);
            let (a_lo, a_hi) = self.spread_fn.ends_on(w[0], w[1]);
            if a_lo < 0.0 || a_hi < 0.0 {
                return Err(Error::Config(format!(
                    "spread must be nonnegative, found {} on [{}, {}]",
                    a_lo.min(a_hi),
                    w[0],
                    w[1]
                )));
            }
            for (m, a) in [(m_lo, a_lo), (m_hi, a_hi)] {
                if m - a < 0.0 || m + a > 1.0 {
                    return Err(Error::Config(format!(
                        "targets escape [0, 1] near [{}, {}]: mean {m} with spread {a}",
                        w[0], w[1]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn conditional_mean(&self, x: f64) -> f64 {
        self.mean_fn.eval(x)
    }

    /// Expected absolute deviation from the conditional mean.
    pub fn abs_spread(&self, x: f64) -> f64 {
        self.spread_fn.eval(x)
    }
}

/// Draws `n` samples `(x, y)` with `x` uniform on [0, 1].
pub fn gen_synthetic(spec: &SyntheticSpec, n: usize, seed: u64) -> Result<Vec<Sample>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(n);
    for _ in 0..n {
        let x = rng.random_range(0.0..1.0);
        let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
        let y = spec.conditional_mean(x) + sign * spec.abs_spread(x);
        // Validation bounds the target; only float rounding can spill over.
        debug_assert!((-1e-9..=1.0 + 1e-9).contains(&y));
        samples.push(Sample {
            input: vec![x],
            target: y.clamp(0.0, 1.0),
        });
    }
    Ok(samples)
}

pub const CREDIT_ATTRIBUTES: usize = 24;

/// One applicant: 24 numeric attributes and a good (1) / bad (0) label.
#[derive(Debug, Clone, PartialEq)]
pub struct CreditRecord {
    pub attributes: Vec<f64>,
    pub label: u8,
}

/// Per-attribute range observed when a dataset was normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttrStats {
    pub min: f64,
    pub max: f64,
}

/// Records with attributes mapped into [0, 1], plus the ranges used, so
/// the same map can be replayed on new rows at inference time.
#[derive(Debug, Clone, PartialEq)]
pub struct TabularDataset {
    pub records: Vec<CreditRecord>,
    pub stats: Vec<AttrStats>,
}

/// Parses the whitespace-separated credit file: 24 numeric attributes plus
/// a class column, 1 for good and 2 for bad. Row order is preserved.
pub fn load_credit(path: impl AsRef<Path>) -> Result<Vec<CreditRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_credit(&text)
}

pub fn parse_credit(text: &str) -> Result<Vec<CreditRecord>> {
    let mut records = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let row = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != CREDIT_ATTRIBUTES + 1 {
            return Err(Error::Parse {
                row,
                msg: format!(
                    "expected {} columns, found {}",
                    CREDIT_ATTRIBUTES + 1,
                    toks.len()
                ),
            });
        }
        let mut attributes = Vec::with_capacity(CREDIT_ATTRIBUTES);
        for t in &toks[..CREDIT_ATTRIBUTES] {
            let v: f64 = t.parse().map_err(|_| Error::Parse {
                row,
                msg: format!("non-numeric attribute {t:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    row,
                    msg: format!("non-finite attribute {t:?}"),
                });
            }
            attributes.push(v);
        }
        let label = match toks[CREDIT_ATTRIBUTES] {
            "1" => 1,
            "2" => 0,
            other => {
                return Err(Error::Parse {
                    row,
                    msg: format!("class must be 1 (good) or 2 (bad), got {other:?}"),
                })
            }
        };
        records.push(CreditRecord { attributes, label });
    }
    if records.is_empty() {
        return Err(Error::Empty("credit file has no data rows".into()));
    }
    Ok(records)
}

/// Maps every attribute affinely onto [0, 1] using its observed range;
/// constant attributes map to 0.
pub fn normalize(records: &[CreditRecord]) -> Result<TabularDataset> {
    if records.is_empty() {
        return Err(Error::Empty("cannot normalize an empty record set".into()));
    }
    let width = records[0].attributes.len();
    let mut stats = vec![
        AttrStats {
            min: f64::MAX,
            max: f64::MIN,
        };
        width
    ];
    for (i, r) in records.iter().enumerate() {
        if r.attributes.len() != width {
            return Err(Error::Dimension(format!(
                "record {i} has {} attributes, expected {width}",
                r.attributes.len()
            )));
        }
        for (s, &v) in stats.iter_mut().zip(&r.attributes) {
            s.min = s.min.min(v);
            s.max = s.max.max(v);
        }
    }
    let records = normalize_with(&stats, records)?;
    Ok(TabularDataset { records, stats })
}

/// Replays a stored normalization on raw records.
pub fn normalize_with(stats: &[AttrStats], records: &[CreditRecord]) -> Result<Vec<CreditRecord>> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            if r.attributes.len() != stats.len() {
                return Err(Error::Dimension(format!(
                    "record {i} has {} attributes, stats cover {}",
                    r.attributes.len(),
                    stats.len()
                )));
            }
            let attributes = r
                .attributes
                .iter()
                .zip(stats)
                .map(|(&v, s)| {
                    if s.max > s.min {
                        (v - s.min) / (s.max - s.min)
                    } else {
                        0.0
                    }
                })
                .collect();
            Ok(CreditRecord {
                attributes,
                label: r.label,
            })
        })
        .collect()
}

impl TabularDataset {
    pub fn labels(&self) -> Vec<u8> {
        self.records.iter().map(|r| r.label).collect()
    }

    /// (good, bad) record counts.
    pub fn label_counts(&self) -> (usize, usize) {
        let good = self.records.iter().filter(|r| r.label == 1).count();
        (good, self.records.len() - good)
    }

    pub fn to_samples(&self) -> Vec<Sample> {
        self.records
            .iter()
            .map(|r| Sample {
                input: r.attributes.clone(),
                target: r.label as f64,
            })
            .collect()
    }
}

/// Strictly alternates between the good and bad class (good first),
/// drawing uniformly with replacement inside each class.
pub struct BalancedSampler {
    good: Vec<usize>,
    bad: Vec<usize>,
    rng: ChaCha8Rng,
    pick_good: bool,
}

impl BalancedSampler {
    pub fn new(labels: &[u8], seed: u64) -> Result<Self> {
        let good: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == 1).collect();
        let bad: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] != 1).collect();
        if good.is_empty() || bad.is_empty() {
            return Err(Error::Empty(
                "balanced sampler needs at least one record of each class".into(),
            ));
        }
        Ok(Self {
            good,
            bad,
            rng: ChaCha8Rng::seed_from_u64(seed),
            pick_good: true,
        })
    }
}

impl IndexSampler for BalancedSampler {
    fn next_index(&mut self) -> usize {
        let pool = if self.pick_good {
            &self.good
        } else {
            &self.bad
        };
        self.pick_good = !self.pick_good;
        pool[self.rng.random_range(0..pool.len())]
    }
}

/// Deterministic stratified split; `test_fraction` of each class (rounded)
/// goes to the test set. The two halves partition the dataset.
pub fn split(
    dataset: &TabularDataset,
    test_fraction: f64,
    seed: u64,
) -> Result<(TabularDataset, TabularDataset)> {
    if !(0.0..1.0).contains(&test_fraction) {
        return Err(Error::Config(format!(
            "test_fraction must lie in [0, 1), got {test_fraction}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut test_idx = Vec::new();
    let mut train_idx = Vec::new();
    for class in [1u8, 0u8] {
        let mut idx: Vec<usize> = (0..dataset.records.len())
            .filter(|&i| dataset.records[i].label == class)
            .collect();
        idx.shuffle(&mut rng);
        let n_test = (test_fraction * idx.len() as f64).round() as usize;
        test_idx.extend_from_slice(&idx[..n_test]);
        train_idx.extend_from_slice(&idx[n_test..]);
    }
    test_idx.sort_unstable();
    train_idx.sort_unstable();
    let pick = |idx: &[usize]| TabularDataset {
        records: idx.iter().map(|&i| dataset.records[i].clone()).collect(),
        stats: dataset.stats.clone(),
    };
    Ok((pick(&train_idx), pick(&test_idx)))
}
