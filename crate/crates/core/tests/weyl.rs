mod weyl_relations {
    
    use ncweyl::weyl::{Generator, WeylElement};
    
    use Generator::*;
    use ncweyl::weyl::*;

    #[test]
    fn antisymmetric() {
        for u in Generator::ALL {
            for v in Generator::ALL {
                let a = bracket(u, v);
                let b = bracket(v, u);
                assert_eq!(&a + &b, WeylElement::zero());
            }
            assert!(bracket(u, u).is_zero());
        }
    }

    #[test]
    fn derivatives_commute() {
        for u in [DTau, DX, DY, DZ] {
            for v in [DTau, DX, DY, DZ] {
                assert!(bracket(u, v).is_zero());
            }
        }
    }
}

mod weyl_normalize {
    
    
    
    use ncweyl::weyl::{Generator, WeylElement};
    
    use ncweyl::weyl::*;
    use Generator::*;

    #[test]
    fn rewriter_matches_product() {
        let words: &[&[Generator]] = &[
            &[DX, X],
            &[DTau, Tau],
            &[Z, Y, X],
            &[DX, DY, X, Y, Z],
            &[DZ, Z, DTau, Tau, X],
        ];
        for w in words {
            assert_eq!(
                normalize(&FreeElement::word(w)),
                WeylElement::from_word(w),
                "{w:?}"
            );
        }
    }

    #[test]
    fn idempotent() {
        let e = WeylElement::from_word(&[DX, DY, X, Y, Z, Tau]);
        assert_eq!(normalize(&FreeElement::from_element(&e)), e);
    }
}

mod weyl_mod {
    
    
    
    
    
    use ncweyl::scalar::{GaussRational, Scalar};
    use ncweyl::weyl::*;

    #[test]
    fn relation_examples() {
        let dx_x = &WeylElement::dx() * &WeylElement::x();
        let expect = &(&(&WeylElement::x() * &WeylElement::dx()) + &WeylElement::one())
            + &WeylElement::dtau().scale(&Scalar::hbar());
        assert_eq!(dx_x, expect);
        assert_eq!(
            WeylElement::x().commutator(&WeylElement::y()),
            WeylElement::z().scale(&Scalar::monomial(GaussRational::complex((0, 1), (2, 1)), 1))
        );
        assert!(WeylElement::dx().commutator(&WeylElement::dy()).is_zero());
        assert!(WeylElement::tau().commutator(&WeylElement::x()).is_zero());
    }

    #[test]
    fn casimir_is_central_in_u() {
        let cas = WeylElement::casimir();
        for g in [Generator::Tau, Generator::X, Generator::Y, Generator::Z] {
            assert!(cas.commutator(&WeylElement::gen(g)).is_zero(), "{g}");
        }
    }

    #[test]
    fn ch_identity() {
        for row in ch_residual() {
            for e in row {
                assert!(e.is_zero(), "{e}");
            }
        }
    }
}

mod weyl_display {
    
    
    
    use ncweyl::weyl::{Generator, Monomial, WeylElement};
    use ncweyl::scalar::Scalar;
    
    use ncweyl::scalar::GaussRational;

    #[test]
    fn canonical_text() {
        let e = &WeylElement::dx() * &WeylElement::x();
        assert_eq!(e.to_string(), "x*dx + 1 + hbar*dtau");
        let m = Monomial::from_pairs(&[(Generator::Tau, 2), (Generator::X, 1), (Generator::DX, 1)]);
        let e = &WeylElement::term(m, Scalar::int(3))
            + &WeylElement::dtau().scale(&Scalar::monomial(GaussRational::ratio(1, 2), 1));
        assert_eq!(e.to_string(), "3*tau^2*x*dx + (1/2)*hbar*dtau");
        assert_eq!((-WeylElement::x()).to_string(), "-1*x");
        assert_eq!(
            (&WeylElement::y() - &WeylElement::x()).to_string(),
            "-1*x + y"
        );
    }
}
