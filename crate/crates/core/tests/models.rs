mod models_hydrogen {
    
    
    
    
    
    use ncweyl::models::hydrogen::*;

    #[test]
    fn classical_limit() {
        let g = solve_ground_state(1.0, 1.0, 1.0, 0.0).unwrap();
        assert_eq!((g.sigma, g.e), (0.5, -0.25));
        let g = solve_ground_state(2.0, 3.0, 0.7, 0.0).unwrap();
        assert!((g.sigma - 0.7 / 6.0).abs() < 1e-15);
        assert!((g.e + 0.49 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn small_hbar() {
        let g = solve_ground_state(1.0, 1.0, 1.0, 1e-3).unwrap();
        assert!(g.residuals.iter().all(|r| *r < 1e-10), "{:?}", g.residuals);
        assert!((g.sigma - 0.5).abs() < 1e-2 && (g.e + 0.25).abs() < 1e-2);
        let c = g.cubic.as_ref().unwrap();
        assert!(c.roots.iter().any(|r| (r.re - g.y).abs() < 1e-9 && r.im == 0.0));
    }

    #[test]
    fn eigenfunction() {
        let hb = 0.05;
        let g = solve_ground_state(1.0, 1.0, 1.0, hb).unwrap();
        let nodes: Vec<(f64, f64)> = (0..4).flat_map(|i| (0..4).map(move |j| (0.1 * i as f64, 0.7 + 0.3 * j as f64))).collect();
        let good = g.eigenfunction_residual(&nodes).unwrap();
        assert!(good < 1e-8, "{good}");
        let bad = eigenfunction_residual(1.0, 1.0, 1.0, hb, g.sigma * 1.1, g.e, &nodes).unwrap();
        assert!(bad > 1e3 * good.max(1e-14));
        assert_eq!(eigenfunction_residual(1.0, 1.0, 0.0, hb, 0.0, 0.0, &nodes).unwrap(), 0.0);
    }
}

mod models_cubic {
    
    use ncweyl::models::cubic::*;

    #[test]
    fn factorized_cases() {
        let r = schrodinger_cubic_roots(0.0, 0.5);
        assert!(r.roots.iter().any(|y| y.norm() < 1e-14));
        let r = schrodinger_cubic_roots(0.5, 0.0);
        let mut re: Vec<f64> = r.roots.iter().map(|y| y.re).collect();
        re.sort_by(f64::total_cmp);
        assert!(re[0].abs() < 1e-12);
        assert!((re[1] - 2.0).abs() < 1e-6 && (re[2] - 2.0).abs() < 1e-6);
        let r = schrodinger_cubic_roots(0.5, 0.1);
        let c = cubic_coefficients(0.5, 0.1);
        assert_eq!(r.roots.len(), 3);
        assert!(r.roots.iter().all(|y| relative_residual(&c, *y) < 1e-12));
    }

    #[test]
    fn degenerate_leading_term() {
        // w/2 = 2 rho^2
        let r = schrodinger_cubic_roots(0.5, 1.0);
        assert!(r.degenerate);
        assert_eq!(r.roots.len(), 2);
        let c = cubic_coefficients(0.5, 1.0);
        assert!(r.roots.iter().all(|y| relative_residual(&c, *y) < 1e-12));
    }
}

mod models_kg {
    use num_complex::Complex64;
    
    
    
    use ncweyl::models::kg::*;

    fn c(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn residual_examples() {
        assert_eq!(kg_dispersion_residual(c(4.0), 5.0, 3.0, 0.0), c(0.0));
        assert_eq!(kg_dispersion_residual(c(0.0), 0.0, 0.0, 0.7), c(0.0));
        let (ep, em) = kg_energy_branches(5.0, 3.0, 0.2);
        assert!(kg_dispersion_residual(ep, 5.0, 3.0, 0.2).norm() < 1e-12);
        assert!(kg_dispersion_residual(em, 5.0, 3.0, 0.2).norm() < 1e-12);
    }

    #[test]
    fn branches() {
        assert_eq!(kg_energy_branches(5.0, 3.0, 0.0), (c(4.0), c(-4.0)));
        let (ep, _) = kg_energy_branches(5.0, 3.0, 0.01);
        assert!((ep.re - 4.0 - 0.125).abs() < 1e-3);
        let (ep, em) = kg_energy_branches(0.0, 2.0, 0.3);
        assert_eq!((ep, em), (Complex64::new(0.0, 2.0), Complex64::new(0.0, -2.0)));
    }

    #[test]
    fn plane_wave() {
        let nodes: Vec<(f64, f64)> = (0..5).flat_map(|i| (0..5).map(move |j| (0.3 * i as f64, 0.2 * j as f64 - 0.4))).collect();
        let (ep, _) = kg_energy_branches(5.0, 3.0, 0.2);
        assert!(plane_wave_check(ep, 5.0, 3.0, 0.2, &nodes).unwrap() < 1e-10);
        assert!(plane_wave_check(ep + 0.1, 5.0, 3.0, 0.2, &nodes).unwrap() > 1e-3);
        assert!(plane_wave_check(c(0.0), 0.0, 0.0, 0.2, &nodes).unwrap() < 1e-15);
        let b = plane_wave_bracket(ep, 5.0, 3.0, 0.2).unwrap();
        assert!(b.norm() < 1e-11);
    }
}
