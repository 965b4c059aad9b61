use proptest::prelude::*;
use skewbound::Atom;
use skewbound_cli::{parse, ManifoldExpr};

fn plain_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1..40u32).prop_map(Atom::RealProjective),
        (1..20u32).prop_map(Atom::ComplexProjective),
        (1..40u32).prop_map(Atom::Sphere),
        (2..=3u32, 1..30u32).prop_map(|(k, extra)| Atom::Grassmannian {
            k,
            ambient: k + extra
        }),
    ]
}

fn expr() -> impl Strategy<Value = ManifoldExpr> {
    prop_oneof![
        prop::collection::vec(plain_atom(), 1..5).prop_map(|factors| ManifoldExpr { factors }),
        (2..=3u32, 1..30u32).prop_map(|(k, extra)| ManifoldExpr {
            factors: vec![Atom::OrientedGrassmannian {
                k,
                ambient: k + extra
            }],
        }),
    ]
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(e in expr()) {
        prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn whitespace_is_ignored(e in expr(), pad in "[ \t]{0,3}") {
        let mut spaced = pad.clone();
        for c in e.to_string().chars() {
            if "(),x".contains(c) {
                spaced.push_str(&pad);
                spaced.push(c);
                spaced.push_str(&pad);
            } else {
                spaced.push(c);
            }
        }
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }

    #[test]
    fn parse_never_panics(s in "[RPCSGx~(),0-9 ]{0,16}") {
        let _ = parse(&s);
    }
}
