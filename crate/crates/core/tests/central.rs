mod central_psi {
    
    
    
    use ncweyl::scalar::GaussRational;
    
    use ncweyl::central::psi::*;

    fn quad(mu2: i64, h2: i64) -> BiPoly {
        let q = GaussRational::ratio;
        BiPoly::term(2, 0, q(mu2, 4)).add(&BiPoly::term(0, 2, q(h2, 4)))
    }

    #[test]
    fn spectral_decomposition() {
        let (p1, p2) = projectors();
        let (l1, l2) = eigenvalues();
        assert!(mat_eq(&mat_add(&p1, &p2), &identity()));
        assert!(mat_eq(&mat_mul(&p1, &p1), &p1));
        assert!(mat_eq(
            &mat_add(&mat_scale(&p1, &l1), &mat_scale(&p2, &l2)),
            &psi_matrix()
        ));
    }

    #[test]
    fn entries() {
        let psi = psi_matrix();
        assert_eq!(psi[0][1], RatFn::poly(BiPoly::h()));
        let expect = BiPoly::h().mul(&quad(-1, 1)).neg();
        assert_eq!(psi[3][0], RatFn::poly(expect));
    }

    #[test]
    fn column_relation_in_the_algebra() {
        for e in theorem_residual() {
            assert!(e.is_zero(), "{e}");
        }
    }
}

mod central_function {
    
    
    use num_complex::Complex64;
    
    use ncweyl::error::Error;
    use ncweyl::central::function::*;

    fn c(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    fn close(a: Complex64, b: f64) -> bool {
        (a - c(b)).norm() < 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn examples() {
        let h = 0.25;
        let r = CentralFunction::power(0, 1);
        let d = radial_derivative(&r, h).unwrap();
        assert!(close(d.eval_real(0.3, 1.7).unwrap(), 1.0));
        let inv = radial_derivative(&CentralFunction::inv_r(), h).unwrap();
        let v = 1.3;
        assert!(close(inv.eval_real(0.0, v).unwrap(), -1.0 / (v * v - h * h)));
        let q = radial_q(&r, h).unwrap();
        assert!(close(q.eval_real(0.0, v).unwrap(), (v * v - h * h) / v));
        let lap = radial_laplacian(&CentralFunction::inv_r(), h).unwrap();
        assert!(lap.eval_real(0.4, 3.1).unwrap().norm() < 1e-12);
        assert!(matches!(
            act_dtau(&r, h).unwrap().eval_real(0.0, 0.0),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn boost_of_interval() {
        let h = 0.1;
        let f = CentralFunction::power(2, 0).add(&CentralFunction::power(0, 2).scale(c(-1.0)));
        let b = radial_boost(&f, h).unwrap();
        for (t, r) in [(0.3, 1.1), (-2.0, 0.7)] {
            assert!(close(b.eval_real(t, r).unwrap(), -2.0 * h * r));
        }
    }
}

mod central_line {
    
    use num_complex::Complex64;
    use ncweyl::central::line::*;

    #[test]
    fn second_differences() {
        let hb = 0.1;
        let g = plane(|_, x| Complex64::new(x.sin(), 0.0));
        let x0 = 0.37;
        let d2 = dx(&dx(&g, hb), hb)(0.0, x0);
        let expect = ((x0 + 2.0 * hb).sin() + (x0 - 2.0 * hb).sin() - 2.0 * x0.sin()) / (4.0 * hb * hb);
        assert!((d2.re - expect).abs() < 1e-12);
        let t2 = dtau(&dtau(&g, hb), hb)(0.0, x0);
        let f = |v: f64| v.sin();
        let five = (f(x0 + 2.0 * hb) - 4.0 * f(x0 + hb) + 6.0 * f(x0) - 4.0 * f(x0 - hb)
            + f(x0 - 2.0 * hb))
            / (4.0 * hb * hb);
        assert!((t2.re - five).abs() < 1e-10);
    }
}

mod central_poly {
    
    
    use num_complex::Complex64;
    
    use ncweyl::scalar::{GaussRational, Scalar};
    
    use ncweyl::central::poly::*;

    fn hb(k: i32) -> Scalar {
        Scalar::hbar_pow(k)
    }

    #[test]
    fn shifts() {
        let f = CentralPoly::r_pow(2);
        let s = f.shift(0, 1).unwrap();
        let expect = CentralPoly::r_pow(2)
            .add(&CentralPoly::monomial(0, 1, hb(1).scale(&GaussRational::from_int(2))))
            .add(&CentralPoly::constant(hb(2)));
        assert_eq!(s, expect);
        assert!(CentralPoly::r_pow(-1).shift(0, 1).is_err());
    }

    #[test]
    fn dtau_examples() {
        assert_eq!(act_dtau(&CentralPoly::tau()).unwrap(), CentralPoly::one());
        assert!(act_dtau(&CentralPoly::one()).unwrap().is_zero());
        let v = act_dtau(&CentralPoly::r_pow(2))
            .unwrap()
            .eval(Complex64::new(0.0, 0.0), Complex64::new(2.0, 0.0), 1.0)
            .unwrap();
        assert!((v - Complex64::new(3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn radial_examples() {
        assert_eq!(radial_derivative(&CentralPoly::r()).unwrap(), CentralPoly::one());
        assert_eq!(
            radial_derivative(&CentralPoly::r_pow(2)).unwrap(),
            CentralPoly::r().scale(&Scalar::int(2))
        );
        assert_eq!(
            radial_q(&CentralPoly::r()).unwrap(),
            CentralPoly::casimir().mul_r(-1)
        );
        assert!(radial_laplacian(&CentralPoly::one()).unwrap().is_zero());
    }

    #[test]
    fn boost_of_interval() {
        let f = CentralPoly::tau().pow(2).sub(&CentralPoly::r_pow(2));
        let expect = CentralPoly::monomial(0, 1, hb(1).scale(&GaussRational::from_int(-2)));
        assert_eq!(radial_boost(&f).unwrap(), expect);
    }

    #[test]
    fn laplacian_forms_agree() {
        let f = CentralPoly::tau()
            .mul(&CentralPoly::r_pow(3))
            .add(&CentralPoly::r_pow(2).scale(&Scalar::ratio(1, 3)))
            .add(&CentralPoly::tau().pow(2));
        assert_eq!(
            radial_laplacian(&f).unwrap(),
            radial_laplacian_via_derivative(&f).unwrap()
        );
        let inv_r = CentralPoly::r_pow(-1);
        assert!(radial_laplacian_via_derivative(&inv_r).unwrap().is_zero());
    }
}
