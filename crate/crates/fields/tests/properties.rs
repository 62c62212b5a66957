use fields::class_group::FormClassGroup;
use fields::{BinaryCubicForm, QuadForm};
use proptest::prelude::*;

fn fundamental() -> impl Strategy<Value = i64> {
    (-20_000i64..20_000).prop_filter("fundamental", |&d| arith::quadratic::is_fundamental(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn principal_is_neutral_and_inverses_cancel(d in fundamental()) {
        let g = FormClassGroup::new(d);
        let e = g.identity();
        for (i, f) in g.representatives().iter().enumerate() {
            prop_assert_eq!(g.class_of(&f.compose(&QuadForm::principal(d))), i);
            prop_assert_eq!(g.class_of(&f.compose(&f.inverse())), e);
        }
    }

    #[test]
    fn canonical_form_ignores_substitution(
        a in 1i64..6, b in -8i64..8, c in -8i64..8, d in -8i64..8,
        m in prop::sample::select(vec![[[1i64, 1], [0, 1]], [[0, -1], [1, 0]], [[1, 0], [2, 1]], [[-1, 0], [0, 1]], [[2, 1], [1, 1]]]),
    ) {
        let f = BinaryCubicForm::new(a, b, c, d);
        prop_assume!(f.disc() != 0 && f.is_irreducible());
        let g = f.substitute(&m).substitute(&m);
        prop_assert_eq!(g.canonical(), f.canonical());
        prop_assert_eq!(f.canonical().disc(), f.disc());
    }
}
