mod oracle_realization {
    
    
    
    
    
    use num_traits::One;
    use ncweyl::scalar::{GaussRational, Scalar};
    use ncweyl::weyl::WeylElement;
    use ncweyl::oracle::*;

    fn sc(re: i64, im: i64, k: i32) -> Scalar {
        Scalar::monomial(GaussRational::complex((re, 1), (im, 1)), k)
    }

    #[test]
    fn classical_basics() {
        let x2 = ClassicalPolynomial::monomial([0, 2, 0, 0], Scalar::one());
        let d = ClassicalOperator::partial(1).apply(&x2);
        assert_eq!(d, ClassicalPolynomial::monomial([0, 1, 0, 0], Scalar::int(2)));
        assert_eq!(ClassicalOperator::identity().apply(&x2), x2);
    }

    #[test]
    fn euler_operator_at_classical_limit() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        let z = WeylElement::z();
        let q = &(&(&x * &WeylElement::dx()) + &(&y * &WeylElement::dy()))
            + &(&z * &WeylElement::dz());
        let xy = ClassicalPolynomial::monomial([0, 1, 1, 0], Scalar::one());
        let r = realize(&q).hbar_order(0).apply(&xy);
        assert_eq!(r, xy.scale(&Scalar::int(2)));
    }

    #[test]
    fn relation_is_zero_operator() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        let z = WeylElement::z();
        let ihb2 = sc(0, 2, 1);
        let xy = realize(&x).compose(&realize(&y));
        let yx = realize(&y).compose(&realize(&x));
        let rel = xy.sub(&yx).sub(&realize(&z).scale(&ihb2));
        assert!(rel.is_zero());
    }
}
