//! Special functions: Hermite and generalized Laguerre polynomials (both in
//! Szegő normalization), their zeros, Gauss–Hermite quadrature and the first
//! zero of the Bessel function `J_0`.

pub mod bessel;
pub mod hermite;
pub mod laguerre;
pub mod quadrature;

use serde::{Deserialize, Serialize};

pub use bessel::{bessel_j0_first_zero, pleijel_gamma, J0_FIRST_ZERO};
pub use hermite::{
    hermite, hermite_deriv, hermite_eval, hermite_function, hermite_pair, hermite_second_deriv, hermite_table,
    hermite_zeros, ScaledHermiteValue,
};
pub use laguerre::{laguerre_deriv, laguerre_eval, laguerre_zeros};
pub use quadrature::{gauss_hermite, hermite_weighted_norm};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LadderFamily {
    Hermite,
    Laguerre { alpha: u32 },
}

/// The simple zeros of an orthogonal polynomial, in increasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroLadder {
    pub degree: u32,
    pub family: LadderFamily,
    pub zeros: Vec<f64>,
}

impl ZeroLadder {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// One-based access matching the usual `t_{n,i}` labelling.
    pub fn t(&self, i: usize) -> f64 {
        self.zeros[i - 1]
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.zeros.windows(2).all(|w| w[0] < w[1])
    }

    /// Largest scale-free residual over the ladder: the orthonormal Hermite
    /// function for Hermite ladders, `|L / (t L')|` for Laguerre ones.
    pub fn max_residual(&self) -> f64 {
        self.zeros
            .iter()
            .map(|&t| match self.family {
                LadderFamily::Hermite => hermite_function(self.degree, t).abs(),
                LadderFamily::Laguerre { alpha } => {
                    let v = laguerre_eval(self.degree, alpha, t);
                    let d = laguerre_deriv(self.degree, alpha, t);
                    (v / (t * d)).abs()
                }
            })
            .fold(0.0, f64::max)
    }
}

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and off-diagonal, sorted increasingly.
pub(crate) fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            diag[i]
        } else if i + 1 == j {
            off[i]
        } else if j + 1 == i {
            off[j]
        } else {
            0.0
        }
    });
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}
