mod common;

use std::f64::consts::{FRAC_PI_4, PI};

use common::flood_fill_count;
use qho_nodal::critical::{critical_values, theta_c};
use qho_nodal::eigenbasis::EigenFamily;
use qho_nodal::nodal::{analyze, AnalysisOptions};
use qho_nodal::specfun::{gauss_hermite, hermite, hermite_zeros};
use qho_nodal::{Window, WindowProvenance};

fn window(n: u32) -> Window {
    let top = hermite_zeros(n.max(1)).zeros.last().copied().unwrap_or(0.0);
    Window::centered(top + 2.0, WindowProvenance::User).unwrap()
}

fn product(m: u32, n: u32) -> EigenFamily {
    let mut c = vec![0.0; (m + n + 1) as usize];
    c[m as usize] = 1.0;
    EigenFamily::combination(m + n, c).unwrap()
}

fn library_mu(f: &EigenFamily, w: &Window, count: usize) -> usize {
    analyze(&f.nodal(), w, count, AnalysisOptions::default()).unwrap().stats.mu
}

fn oracle_mu(f: &EigenFamily, w: &Window, count: usize) -> usize {
    flood_fill_count(|x, y| f.nodal_value(qho_nodal::Point::new(x, y)), w.x_max, count)
}

#[test]
fn product_states_have_grid_domains() {
    for m in 0..=4 {
        for n in 0..=4 {
            let f = product(m, n);
            let w = window(m.max(n));
            let expected = ((m + 1) * (n + 1)) as usize;
            assert_eq!(library_mu(&f, &w, 256), expected, "H_{m} H_{n}");
            assert_eq!(oracle_mu(&f, &w, 300), expected, "oracle H_{m} H_{n}");
        }
    }
}

#[test]
fn difference_family_has_n_plus_one_domains() {
    for n in 1..=9 {
        let f = EigenFamily::difference(n);
        let w = window(n);
        let mu = library_mu(&f, &w, 384);
        // Even degrees also vanish on the anti-diagonal; only the oracle applies.
        if n % 2 == 1 {
            assert_eq!(mu, n as usize + 1, "n = {n}");
        }
        assert_eq!(oracle_mu(&f, &w, 500), mu, "oracle n = {n}");
    }
}

#[test]
fn regular_stern_counts_match_flood_fill() {
    for n in 2..=9 {
        let table = critical_values(n).unwrap();
        for &theta in &[0.05, 0.37, 0.61, 1.1, 1.9, 2.5, 2.9] {
            if table.nearest(theta).is_some_and(|(c, _, _)| (c - theta).abs() < 0.02) {
                continue;
            }
            let f = EigenFamily::stern(n, theta).unwrap();
            let w = window(n);
            let mu = library_mu(&f, &w, 384);
            assert_eq!(oracle_mu(&f, &w, 500), mu, "n = {n}, theta = {theta}");
        }
    }
}

// Reference zeros from the closed forms of H_3, H_4 and H_5.
#[test]
fn hermite_zeros_match_closed_forms() {
    let z3 = hermite_zeros(3).zeros;
    assert!((z3[2] - 1.5f64.sqrt()).abs() < 1e-14);
    let z4 = hermite_zeros(4).zeros;
    let inner = ((3.0 - 6.0f64.sqrt()) / 2.0).sqrt();
    let outer = ((3.0 + 6.0f64.sqrt()) / 2.0).sqrt();
    assert!((z4[2] - inner).abs() < 1e-14 && (z4[3] - outer).abs() < 1e-14);
    let z5 = hermite_zeros(5).zeros;
    let r = |s: f64| ((5.0 + s * 10.0f64.sqrt()) / 2.0).sqrt();
    assert!((z5[3] - r(-1.0)).abs() < 1e-14 && (z5[4] - r(1.0)).abs() < 1e-14);
    assert_eq!(hermite(5, 1.0), 32.0 - 160.0 + 120.0);
}

#[test]
fn gauss_hermite_integrates_polynomials() {
    let (x, w) = gauss_hermite(10);
    let moment = |k: i32| x.iter().zip(&w).map(|(x, w)| w.exp() * x.powi(k)).sum::<f64>();
    // ∫ x^{2j} e^{-x²} = Γ(j + 1/2)
    assert!((moment(0) - PI.sqrt()).abs() < 1e-13);
    assert!((moment(2) - PI.sqrt() / 2.0).abs() < 1e-13);
    assert!((moment(4) - 0.75 * PI.sqrt()).abs() < 1e-13);
    assert!(moment(3).abs() < 1e-13);
}

#[test]
fn degree_three_critical_values_by_hand() {
    // Zeros of H_2 are ±1/√2 and H_3(±1/√2) = ±(√2·2 - 6/√2) = ∓√2.
    let t = critical_values(3).unwrap();
    let mut all: Vec<f64> = t.values.iter().flatten().copied().collect();
    all.sort_by(f64::total_cmp);
    all.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    assert_eq!(all.len(), 2);
    assert!((all[0] - FRAC_PI_4).abs() < 1e-12 && (all[1] - 3.0 * FRAC_PI_4).abs() < 1e-12);
    assert!((theta_c(3).unwrap() - FRAC_PI_4).abs() < 1e-12);
}
