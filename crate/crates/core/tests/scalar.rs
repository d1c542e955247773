mod scalar {
    
    
    
    
    use num_complex::Complex64;
    
    use num_traits::{One, Zero};
    use ncweyl::error::Error;
    use ncweyl::scalar::*;

    #[test]
    fn cancellation_and_identity() {
        let s = &(&Scalar::hbar() + &Scalar::one()) + &(-Scalar::hbar());
        assert_eq!(s, Scalar::one());
        let t = Scalar::hbar_pow(-3);
        assert_eq!(&Scalar::zero() + &t, t);
    }

    #[test]
    fn like_terms() {
        let half_i = Scalar::monomial(GaussRational::complex((0, 1), (1, 2)), -1);
        let sum = &half_i + &half_i;
        assert_eq!(sum, Scalar::monomial(GaussRational::i(), -1));
    }

    #[test]
    fn products() {
        assert_eq!(&Scalar::hbar() * &Scalar::hbar_pow(-1), Scalar::one());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::int(-1));
        // 2 / h with h = 2 i hbar
        let two_over_h = Scalar::int(2).div_exact(&Scalar::h()).unwrap();
        assert_eq!(
            two_over_h,
            Scalar::monomial(GaussRational::complex((0, 1), (-1, 1)), -1)
        );
    }

    #[test]
    fn evaluation() {
        let v = Scalar::hbar_pow(2).eval(Complex64::new(0.5, 0.0)).unwrap();
        assert!((v - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        assert!(matches!(
            Scalar::hbar_pow(-1).eval(Complex64::new(0.0, 0.0)),
            Err(Error::Pole(_))
        ));
        // xi(E) = 1 + hbar E at E = 2, hbar = 0.1
        let xi = &Scalar::one() + &Scalar::monomial(GaussRational::from_int(2), 1);
        let v = xi.eval(Complex64::new(0.1, 0.0)).unwrap();
        assert!((v.re - 1.2).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn exact_division() {
        let a = &Scalar::one() + &Scalar::hbar();
        let b = &Scalar::one() - &Scalar::hbar();
        let p = &a * &b;
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(a.div_exact(&b).is_none());
        let lp = &Scalar::hbar_pow(-2) * &a;
        assert_eq!(lp.div_exact(&a).unwrap(), Scalar::hbar_pow(-2));
    }

    #[test]
    fn rendering() {
        let s = Scalar::monomial(GaussRational::complex((1, 2), (3, 4)), -2);
        assert_eq!(s.to_string(), "(1/2 + 3/4*i)*hbar^-2");
        assert_eq!(Scalar::hbar().to_string(), "hbar");
        assert_eq!(Scalar::ratio(1, 2).to_string(), "1/2");
        assert_eq!(
            (&Scalar::one() - &Scalar::hbar()).to_string(),
            "1 - hbar"
        );
        assert_eq!(Scalar::monomial(-GaussRational::i(), 0).to_string(), "-1*i");
    }
}
