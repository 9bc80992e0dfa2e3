use bisyz::exactnum::{rat, ExactMatrix};
use bisyz::fixtures;
use bisyz::{classify, resultant_21, InputTriple};
use num_traits::Zero;
use proptest::prelude::*;

fn invertible() -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(-3i64..=3, 9)
        .prop_map(|v| ExactMatrix::from_fn(3, 3, |i, j| rat(v[3 * i + j])))
        .prop_filter("invertible", |m| !m.det().unwrap().is_zero())
}

fn fixture() -> impl Strategy<Value = InputTriple> {
    prop_oneof![
        Just(fixtures::standard_example()),
        Just(fixtures::generic()),
        Just(fixtures::nongeneric()),
        Just(fixtures::planted_zero()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn classification_is_basis_invariant(p in fixture(), m in invertible()) {
        prop_assert_eq!(classify(&p.transform(&m)).unwrap(), classify(&p).unwrap());
    }

    #[test]
    fn resultant_is_basis_covariant(p in fixture(), m in invertible()) {
        let det = m.det().unwrap();
        let want = resultant_21(&p).unwrap().value * &det * &det * &det * &det;
        prop_assert_eq!(resultant_21(&p.transform(&m)).unwrap().value, want);
    }
}
