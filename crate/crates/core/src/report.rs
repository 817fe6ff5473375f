//! Plot-ready output for an evaluation: one CSV per series, histogram
//! CSVs, and a plain-text summary of the scalar statistics.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::metrics::{histogram, EvaluationReport, Histogram, HistogramSpec};

fn write_series_csv(path: &Path, header: &str, rows: impl Iterator<Item = String>) -> Result<()> {
    let mut buf = String::with_capacity(1 << 16);
    buf.push_str(header);
    buf.push('\n');
    for row in rows {
        buf.push_str(&row);
        buf.push('\n');
    }
    std::fs::write(path, buf)?;
    Ok(())
}

fn write_histogram_csv(path: &Path, h: &Histogram) -> Result<()> {
    let rows = (0..h.n_bins()).map(|i| {
        let (lo, hi) = h.bin_edges(i);
        format!("{lo:.16e},{hi:.16e},{}", h.counts[i])
    });
    write_series_csv(path, "bin_lo,bin_hi,count", rows)
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => format!("{v:.6}"),
        None => "undefined".into(),
    }
}

/// Writes `errors.csv`, `deltas.csv`, `effective.csv`,
/// `hist_raw_error.csv`, `hist_effective_error.csv` and `summary.txt`
/// into `dir` (created if missing). Output is byte-deterministic.
pub fn write_report(
    dir: impl AsRef<Path>,
    report: &EvaluationReport,
    raw_hist: HistogramSpec,
    eff_hist: HistogramSpec,
) -> Result<()> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;

    write_series_csv(
        &dir.join("errors.csv"),
        "index,error",
        report
            .errors
            .iter()
            .enumerate()
            .map(|(i, e)| format!("{i},{e:.16e}")),
    )?;
    write_series_csv(
        &dir.join("deltas.csv"),
        "index,abs_error,delta",
        report
            .errors
            .iter()
            .zip(&report.deltas)
            .enumerate()
            .map(|(i, (e, d))| format!("{i},{:.16e},{d:.16e}", e.abs())),
    )?;
    write_series_csv(
        &dir.join("effective.csv"),
        "index,error,delta,effective",
        report
            .errors
            .iter()
            .zip(&report.deltas)
            .zip(&report.effective)
            .enumerate()
            .map(|(i, ((e, d), f))| format!("{i},{e:.16e},{d:.16e},{f:.16e}")),
    )?;

    let raw = histogram(&report.errors, raw_hist.lo, raw_hist.hi, raw_hist.n_bins)?;
    let eff = histogram(&report.effective, eff_hist.lo, eff_hist.hi, eff_hist.n_bins)?;
    write_histogram_csv(&dir.join("hist_raw_error.csv"), &raw)?;
    write_histogram_csv(&dir.join("hist_effective_error.csv"), &eff)?;

    let mut s = String::new();
    let _ = writeln!(s, "n = {}", report.n());
    let _ = writeln!(s, "coverage = {:.6}", report.coverage);
    let _ = writeln!(
        s,
        "spearman_abs_error_delta = {}",
        fmt_opt(report.spearman_abs_error_delta)
    );
    let _ = writeln!(s, "raw_mean = {:.6}", report.raw_stats.mean);
    let _ = writeln!(s, "raw_std = {:.6}", report.raw_stats.std);
    let _ = writeln!(
        s,
        "raw_excess_kurtosis = {}",
        fmt_opt(report.raw_stats.excess_kurtosis)
    );
    let _ = writeln!(s, "effective_mean = {:.6}", report.effective_stats.mean);
    let _ = writeln!(s, "effective_std = {:.6}", report.effective_stats.std);
    let _ = writeln!(
        s,
        "effective_excess_kurtosis = {}",
        fmt_opt(report.effective_stats.excess_kurtosis)
    );
    let _ = writeln!(s, "raw_hist_underflow = {}", raw.underflow);
    let _ = writeln!(s, "raw_hist_overflow = {}", raw.overflow);
    let _ = writeln!(s, "effective_hist_underflow = {}", eff.underflow);
    let _ = writeln!(s, "effective_hist_overflow = {}", eff.overflow);
    std::fs::write(dir.join("summary.txt"), s)?;
    Ok(())
}
