use proptest::prelude::*;
use qho_nodal::critical::critical_values;
use qho_nodal::eigenbasis::EigenFamily;
use qho_nodal::field::FnField;
use qho_nodal::nodal::{analyze, AnalysisOptions};
use qho_nodal::specfun::{hermite_pair, hermite_zeros};
use qho_nodal::{Field, Point, Window, WindowProvenance};

fn mu_of<F: Field>(f: &F, w: &Window) -> usize {
    analyze(f, w, 192, AnalysisOptions::default()).unwrap().stats.mu
}

fn window(n: u32) -> Window {
    Window::centered(hermite_zeros(n).zeros.last().unwrap() + 2.0, WindowProvenance::User).unwrap()
}

fn regular(n: u32, theta: f64) -> bool {
    let t = critical_values(n).unwrap();
    t.nearest(theta).is_none_or(|(c, _, _)| (c - theta).abs() > 0.03)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn negation_keeps_domain_count(n in 2u32..8, theta in 0.05f64..3.1) {
        prop_assume!(regular(n, theta));
        let fam = EigenFamily::stern(n, theta).unwrap();
        let f = fam.nodal();
        let neg = FnField {
            value: |p: Point| -fam.nodal_value(p),
            gradient: |p: Point| {
                let g = fam.nodal_gradient(p);
                [-g[0], -g[1]]
            },
        };
        let w = window(n);
        prop_assert_eq!(mu_of(&f, &w), mu_of(&neg, &w));
    }

    #[test]
    fn reflection_theta_to_pi_minus_theta(k in 1u32..4, theta in 0.05f64..1.5) {
        // For odd n, Φ^{π-θ}(x, y) = Φ^θ(-x, y).
        let n = 2 * k + 1;
        prop_assume!(regular(n, theta));
        let a = EigenFamily::stern(n, theta).unwrap();
        let b = EigenFamily::stern(n, std::f64::consts::PI - theta).unwrap();
        let p = Point::new(0.37, -1.21);
        prop_assert!((b.nodal_value(p) - a.nodal_value(Point::new(-p.x, p.y))).abs() < 1e-9 * (1.0 + a.nodal_value(p).abs()));
        let w = window(n);
        prop_assert_eq!(mu_of(&a.nodal(), &w), mu_of(&b.nodal(), &w));
    }

    #[test]
    fn hermite_pair_satisfies_recurrence(n in 1u32..40, t in -6.0f64..6.0) {
        // H_{n+1} = 2t H_n - 2n H_{n-1}
        let (h, hm1) = hermite_pair(n, t);
        let (hp1, h_again) = hermite_pair(n + 1, t);
        prop_assert_eq!(h, h_again);
        let rhs = 2.0 * t * h - 2.0 * n as f64 * hm1;
        prop_assert!((hp1 - rhs).abs() <= 1e-12 * (hp1.abs() + (2.0 * t * h).abs() + 1.0));
    }
}
