use super::{tridiagonal_eigenvalues, LadderFamily, ZeroLadder};

/// `L_n^{(α)}(t)` by the three-term recurrence
/// `(k+1) L_{k+1} = (2k+1+α-t) L_k - (k+α) L_{k-1}`.
pub fn laguerre_eval(n: u32, alpha: u32, t: f64) -> f64 {
    laguerre_eval_real(n, f64::from(alpha), t)
}

pub(crate) fn laguerre_eval_real(n: u32, alpha: f64, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, 1.0 + alpha - t);
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - t) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `d/dt L_n^{(α)}(t) = -L_{n-1}^{(α+1)}(t)`; zero for `n = 0`.
pub fn laguerre_deriv(n: u32, alpha: u32, t: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre_eval(n - 1, alpha + 1, t)
    }
}

/// The `n` positive zeros of `L_n^{(α)}`, from the Jacobi matrix and then
/// Newton-polished.
pub fn laguerre_zeros(n: u32, alpha: u32) -> ZeroLadder {
    let a = f64::from(alpha);
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * f64::from(k) + a + 1.0).collect();
    let off: Vec<f64> = (1..n).map(|k| (f64::from(k) * (f64::from(k) + a)).sqrt()).collect();
    let mut z = if n == 0 { Vec::new() } else { tridiagonal_eigenvalues(&diag, &off) };
    for t in z.iter_mut() {
        for _ in 0..50 {
            let step = laguerre_eval(n, alpha, *t) / laguerre_deriv(n, alpha, *t);
            *t -= step;
            if step.abs() <= 1e-16 * t.abs() {
                break;
            }
        }
    }
    ZeroLadder { degree: n, family: LadderFamily::Laguerre { alpha }, zeros: z }
}
