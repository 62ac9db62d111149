use serde::{Deserialize, Serialize};

use super::domains::label_domains;
use super::grid::{sample_grid, SignGrid};
use super::length::{nodal_length, Disk};
use super::march::{extract_nodal, NodalCurveSet};
use crate::critical::{certify_no_critical_zero, Certificate, CertifyOptions};
use crate::error::Result;
use crate::field::Field;
use crate::geometry::Window;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskLength {
    pub radius: f64,
    pub length: f64,
}

/// Summary numbers for one sampled field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NodalStats {
    pub mu: usize,
    pub components: usize,
    pub arc_components: usize,
    pub crossings: usize,
    pub boundary_exits: usize,
    pub ambiguous: usize,
    pub resolution: usize,
    pub length_total: f64,
    pub length_in_disk: Option<DiskLength>,
    pub certification: Option<Certificate>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct AnalysisOptions {
    pub certify: Option<CertifyOptions>,
    pub length_disk: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct NodalAnalysis {
    pub grid: SignGrid,
    pub curves: NodalCurveSet,
    pub stats: NodalStats,
}

/// Samples `f` at `count²` points of `window`, extracts the zero set and
/// counts domains.
pub fn analyze<F: Field>(f: &F, window: &Window, count: usize, opts: AnalysisOptions) -> Result<NodalAnalysis> {
    let grid = sample_grid(f, window, count, count)?;
    let curves = extract_nodal(&grid);
    let labels = label_domains(&grid);
    let certification = opts.certify.map(|o| certify_no_critical_zero(f, window, count, o));
    let stats = NodalStats {
        mu: labels.count,
        components: curves.components,
        arc_components: curves.arc_components,
        crossings: curves.crossings.len(),
        boundary_exits: labels.boundary_exits,
        ambiguous: curves.ambiguous,
        resolution: count,
        length_total: nodal_length(&curves, None),
        length_in_disk: opts
            .length_disk
            .map(|r| DiskLength { radius: r, length: nodal_length(&curves, Some(Disk::centered(r))) }),
        certification,
    };
    Ok(NodalAnalysis { grid, curves, stats })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub count: usize,
    pub mu: usize,
    pub components: usize,
    pub arc_components: usize,
    pub crossings: usize,
    pub ambiguous: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    /// The last three resolutions agree on μ and the component count.
    pub stable: bool,
}

impl SweepReport {
    pub fn finest(&self) -> &SweepEntry {
        self.entries.last().expect("sweep has at least one entry")
    }
}

fn entry_of(count: usize, a: &NodalAnalysis) -> SweepEntry {
    SweepEntry {
        count,
        mu: a.stats.mu,
        components: a.stats.components,
        arc_components: a.stats.arc_components,
        crossings: a.stats.crossings,
        ambiguous: a.stats.ambiguous,
    }
}

fn stable_tail(entries: &[SweepEntry]) -> bool {
    entries.len() >= 3 && {
        let t = &entries[entries.len() - 3..];
        t.iter().all(|e| e.mu == t[0].mu && e.components == t[0].components)
    }
}

/// μ and component counts at each resolution in `counts`.
pub fn resolution_sweep<F: Field>(f: &F, window: &Window, counts: &[usize]) -> Result<SweepReport> {
    Ok(sweep_and_analyze(f, window, counts, AnalysisOptions::default())?.0)
}

/// Like [`resolution_sweep`] but also returns the full analysis at the
/// finest resolution (with `opts` applied there only).
pub fn sweep_and_analyze<F: Field>(
    f: &F,
    window: &Window,
    counts: &[usize],
    opts: AnalysisOptions,
) -> Result<(SweepReport, NodalAnalysis)> {
    let (last, rest) =
        counts.split_last().ok_or_else(|| crate::error::invalid("resolution sweep needs at least one count"))?;
    if counts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(crate::error::invalid("resolution counts must increase"));
    }
    let mut entries = Vec::with_capacity(counts.len());
    for &c in rest {
        let a = analyze(f, window, c, AnalysisOptions::default())?;
        entries.push(entry_of(c, &a));
    }
    let fin = analyze(f, window, *last, opts)?;
    entries.push(entry_of(*last, &fin));
    let stable = stable_tail(&entries);
    Ok((SweepReport { entries, stable }, fin))
}
