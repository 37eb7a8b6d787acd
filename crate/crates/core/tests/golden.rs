use cyclo_schur::golden;

#[test]
fn golden_examples_match() {
    for r in golden::suite() {
        assert!(r.pass, "{}:\nexpected:\n{}\nactual:\n{}", r.name, r.expected, r.actual);
    }
}
