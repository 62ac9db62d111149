//! Sampling, zero-set extraction, domain counting and length measurement.

pub mod analysis;
pub mod barrier;
pub mod checks;
pub mod domains;
pub mod export;
pub mod grid;
pub mod length;
pub mod march;
pub mod singular;
pub mod union_find;

pub use analysis::{
    analyze, resolution_sweep, sweep_and_analyze, AnalysisOptions, NodalAnalysis, NodalStats, SweepEntry, SweepReport,
};
pub use barrier::{analysis_window, barrier_window, canonical_theta, lower_barrier, upper_barrier};
pub use checks::{asymptote_check, checkerboard_check, AsymptoteReport, CheckReport, Violation, ViolationKind};
pub use domains::{count_domains, label_domains, DomainLabels};
pub use export::{curves_to_json, curves_to_svg, GuideLines, SvgOptions};
pub use grid::{sample_grid, sample_grid_with, SampleOptions, SignGrid};
pub use length::{grid_length, nodal_length, richardson_length, Disk, LengthEstimate};
pub use march::{extract_nodal, NodalCurveSet, Polyline};
pub use singular::{SingularKind, SingularPoint};
pub use union_find::UnionFind;
