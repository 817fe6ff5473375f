//! Evaluation statistics: binned error distributions, moments, rank
//! correlation, and the per-event series (error, delta, effective error)
//! behind the experiment plots.

use crate::error::{Error, Result};
use crate::straw::Event;
use crate::twin::TwinModel;

/// Fixed-width histogram over `[lo, hi]` with half-open bins; the last bin
/// is closed at `hi`. Out-of-range values land in underflow/overflow.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<u64>,
    pub underflow: u64,
    pub overflow: u64,
}

impl Histogram {
    pub fn n_bins(&self) -> usize {
        self.counts.len()
    }

    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.counts.len() as f64
    }

    pub fn bin_edges(&self, i: usize) -> (f64, f64) {
        let w = self.bin_width();
        (self.lo + i as f64 * w, self.lo + (i + 1) as f64 * w)
    }

    /// Total number of recorded values, in and out of range.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum::<u64>() + self.underflow + self.overflow
    }
}

/// Bin range and count for a histogram; kept separate so configurations
/// can carry it around without values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramSpec {
    pub lo: f64,
    pub hi: f64,
    pub n_bins: usize,
}

pub fn histogram(values: &[f64], lo: f64, hi: f64, n_bins: usize) -> Result<Histogram> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Config(format!(
            "histogram range needs finite lo < hi, got [{lo}, {hi}]"
        )));
    }
    if n_bins == 0 {
        return Err(Error::Config("histogram needs at least one bin".into()));
    }
    let mut h = Histogram {
        lo,
        hi,
        counts: vec![0; n_bins],
        underflow: 0,
        overflow: 0,
    };
    for &v in values {
        if !v.is_finite() {
            return Err(Error::Numeric(format!("non-finite value {v} in histogram")));
        }
        if v < lo {
            h.underflow += 1;
        } else if v > hi {
            h.overflow += 1;
        } else if v == hi {
            *h.counts.last_mut().unwrap() += 1;
        } else {
            let idx = ((v - lo) / (hi - lo) * n_bins as f64) as usize;
            h.counts[idx.min(n_bins - 1)] += 1;
        }
    }
    Ok(h)
}

/// Population moments of a value series. The excess kurtosis is only
/// defined for n >= 4 with nonzero variance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub n: usize,
    pub mean: f64,
    pub std: f64,
    pub excess_kurtosis: Option<f64>,
}

pub fn summary_stats(values: &[f64]) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::Empty("no values to summarize".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let m2 = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let std = m2.sqrt();
    let excess_kurtosis = if values.len() >= 4 && m2 > 0.0 {
        let m4 = values.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / n;
        Some(m4 / (m2 * m2) - 3.0)
    } else {
        None
    };
    Ok(SummaryStats {
        n: values.len(),
        mean,
        std,
        excess_kurtosis,
    })
}

/// Excess kurtosis `m4 / m2^2 - 3` with population moments. Errors on
/// fewer than four values or zero variance.
pub fn excess_kurtosis(values: &[f64]) -> Result<f64> {
    if values.len() < 4 {
        return Err(Error::UndefinedStat(format!(
            "kurtosis needs at least 4 values, got {}",
            values.len()
        )));
    }
    summary_stats(values)?
        .excess_kurtosis
        .ok_or_else(|| Error::UndefinedStat("kurtosis of a constant series".into()))
}

fn average_ranks(values: &[f64]) -> Result<Vec<f64>> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("non-finite value in rank computation".into()));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let shared = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = shared;
        }
        i = j + 1;
    }
    Ok(ranks)
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::Dimension(format!(
            "spearman needs equal lengths, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::UndefinedStat(
            "spearman needs at least two pairs".into(),
        ));
    }
    let rx = average_ranks(xs)?;
    let ry = average_ranks(ys)?;
    let n = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        cov += (a - mx) * (b - my);
        vx += (a - mx) * (a - mx);
        vy += (b - my) * (b - my);
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(Error::UndefinedStat(
            "spearman undefined when all ranks tie".into(),
        ));
    }
    Ok(cov / (vx * vy).sqrt())
}

/// An input with its true target in original units.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledCase {
    pub input: Vec<f64>,
    pub truth: f64,
}

impl From<&Event> for LabeledCase {
    fn from(e: &Event) -> Self {
        LabeledCase {
            input: e.inputs.clone(),
            truth: e.target_angle_deg,
        }
    }
}

pub fn cases_from_events(events: &[Event]) -> Vec<LabeledCase> {
    events.iter().map(LabeledCase::from).collect()
}

/// Per-event evaluation series plus the scalar summaries, with rows kept
/// in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    /// `truth - value` per case, original units.
    pub errors: Vec<f64>,
    /// Band half-width per case, original units.
    pub deltas: Vec<f64>,
    /// Signed distance outside the band; zero when covered.
    pub effective: Vec<f64>,
    /// Fraction of cases whose truth lies inside the band.
    pub coverage: f64,
    pub raw_stats: SummaryStats,
    pub effective_stats: SummaryStats,
    /// Rank correlation between |error| and delta; `None` when degenerate
    /// (for example a constant delta series).
    pub spearman_abs_error_delta: Option<f64>,
}

impl EvaluationReport {
    pub fn n(&self) -> usize {
        self.errors.len()
    }
}

pub fn evaluate_twin(model: &TwinModel, cases: &[LabeledCase]) -> Result<EvaluationReport> {
    if cases.is_empty() {
        return Err(Error::Empty("no cases to evaluate".into()));
    }
    let mut errors = Vec::with_capacity(cases.len());
    let mut deltas = Vec::with_capacity(cases.len());
    let mut effective = Vec::with_capacity(cases.len());
    let mut covered = 0usize;
    for case in cases {
        let band = model.predict_band(&case.input)?;
        errors.push(case.truth - band.value);
        deltas.push(band.delta);
        effective.push(band.effective_error(case.truth));
        if band.covers(case.truth) {
            covered += 1;
        }
    }
    let abs_errors: Vec<f64> = errors.iter().map(|e| e.abs()).collect();
    let spearman_abs_error_delta = match spearman(&abs_errors, &deltas) {
        Ok(r) => Some(r),
        Err(Error::UndefinedStat(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(EvaluationReport {
        coverage: covered as f64 / cases.len() as f64,
        raw_stats: summary_stats(&errors)?,
        effective_stats: summary_stats(&effective)?,
        spearman_abs_error_delta,
        errors,
        deltas,
        effective,
    })
}
