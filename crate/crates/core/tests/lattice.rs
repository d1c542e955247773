mod lattice {
    
    
    use num_complex::Complex64;
    
    
    
    use ncweyl::lattice::*;
    use ncweyl::scalar::GaussRational;

    fn grid() -> LatticeGrid {
        LatticeGrid::new(0.125, 0.0, 0.25, (2, 12), (0, 6)).unwrap()
    }

    #[test]
    fn rejects_pole_nodes() {
        assert!(LatticeGrid::new(0.0, 0.0, 0.5, (0, 3), (0, 1)).is_err());
        assert!(LatticeGrid::new(0.5, 0.0, 0.5, (0, 3), (0, 1)).is_err());
    }

    #[test]
    fn stencils() {
        let g = grid();
        let one = GridFunction::<GaussRational>::sample(&g, |_, _| Ok(GaussRational::from_int(1))).unwrap();
        assert_eq!(one.restrict(LatticeOp::RadialLaplacian).unwrap().max_abs(), 0.0);
        let inv = GridFunction::<GaussRational>::sample(&g, |_, r| {
            Ok(GaussRational::from_f64(r).unwrap().inv().unwrap())
        })
        .unwrap();
        assert_eq!(inv.restrict(LatticeOp::RadialLaplacian).unwrap().max_abs(), 0.0);
        let r = GridFunction::<GaussRational>::sample(&g, |_, r| Ok(GaussRational::from_f64(r).unwrap())).unwrap();
        let d = r.restrict(LatticeOp::RadialDerivative).unwrap();
        assert!(d.nodes().all(|(_, _, v)| *v == GaussRational::from_int(1)));
        assert!(!is_harmonic(&r, 0.0).unwrap());
    }

    #[test]
    fn sublattice_pairs() {
        let g = grid();
        let q = |n| GaussRational::from_int(n);
        assert!(harmonic_coefficient_freedom_check(&g, [(q(1), q(0)), (q(1), q(0))], 0.0).unwrap());
        assert!(harmonic_coefficient_freedom_check(&g, [(q(1), q(2)), (q(3), q(-1))], 0.0).unwrap());
    }

    #[test]
    fn telescoping_examples() {
        let c = |v: f64| Complex64::new(v, 0.0);
        let lin = telescoping_sum(|_, r| c(r), 0.0, 1.0, 3.0, 0.5).unwrap();
        assert!((lin - c(2.0)).norm() < 1e-14);
        let quad = telescoping_sum(|_, r| c(r * r), 0.0, 1.0, 2.0, 0.25).unwrap();
        assert!((quad - c(3.0)).norm() < 1e-14);
        let k = telescoping_sum(|_, _| c(7.0), 0.0, 1.0, 2.0, 0.25).unwrap();
        assert_eq!(k, c(0.0));
    }

    #[test]
    fn verma() {
        assert!((verma_radius(0, 0.3) - 0.3).abs() < 1e-15);
        assert_eq!(verma_radius(3, 1.0), 4.0);
        assert!((verma_casimir(1, 0.5) - 3.0 * 0.25).abs() < 1e-15);
    }

    #[test]
    fn csv_round_trip() {
        let g = grid();
        let f = GridFunction::<Complex64>::sample(&g, |t, r| Ok(Complex64::new(t + r * r, 0.0))).unwrap();
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        assert!(String::from_utf8_lossy(&buf).starts_with("tau,r,value\n"));
        let back = GridFunction::<Complex64>::read_csv(&g, buf.as_slice()).unwrap();
        assert_eq!(back.len(), f.len());
        assert_eq!(back.get(4, 2).unwrap(), f.get(4, 2).unwrap());
    }
}
