mod selftest {
    
    
    
    
    
    
    
    
    
    
    
    
    use ncweyl::selftest::*;

    #[test]
    fn suite_passes() {
        for c in run(7, 8) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
