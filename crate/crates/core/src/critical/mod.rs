//! Critical values `θ(i,j)`, critical zeros and their Hessians, oval
//! critical-point candidates, and a numerical no-critical-zero certificate.

pub mod certify;
pub mod oval;
pub mod table;

pub use certify::{certify_no_critical_zero, Certificate, CertifyOptions};
pub use oval::{oval_a_bounds, oval_critical_candidates, OvalABounds, OvalCriticalCandidates};
pub use table::{
    critical_values, critical_zeros_at, hessian_classify, theta_c, CriticalValueTable, CriticalZero, HessianSignature,
    CRITICAL_THETA_TOL,
};
