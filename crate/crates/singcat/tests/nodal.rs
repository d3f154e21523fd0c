use proptest::prelude::*;
use singcat::nodal::*;
use singcat::quiver::path_in_ideal;

use Sign::{Minus, Plus};

fn p(s: Sign, n: i64) -> NodalIndecomposable {
    NodalIndecomposable::p(s, n)
}

fn s(t: Sign, l: u32, n: i64) -> NodalIndecomposable {
    NodalIndecomposable::s(t, l, n)
}

mod common;
use common::oracle;

#[test]
fn delta_examples() {
    assert_eq!(delta(0, Plus), Plus);
    assert_eq!(delta(-1, Plus), Minus);
    for n in -6..=6 {
        for x in Sign::ALL {
            assert_eq!(delta(n, delta(n, x)), x);
        }
    }
}

#[test]
fn hom_examples() {
    assert_eq!(hom_dim(&p(Plus, 0), &p(Plus, 0)), 1);
    assert_eq!(hom_dim(&p(Plus, 0), &p(Minus, -1)), 1);
    assert_eq!(hom_dim(&p(Plus, 0), &p(Plus, 1)), 0);
    assert_eq!(hom_dim(&s(Plus, 1, 0), &p(Minus, 2)), 1);
    assert_eq!(hom_dim(&p(Plus, 0), &s(Plus, 2, 0)), 1);
    assert_eq!(hom_dim(&s(Plus, 2, 0), &s(Plus, 2, 0)), 1);
}

#[test]
fn hom_sum_examples() {
    let zero = NodalObject::zero();
    let y: NodalObject = vec![p(Plus, 0)].into();
    assert_eq!(hom_dim_sum(&zero, &y), 0);
    let x: NodalObject = vec![p(Plus, 0), p(Minus, 0)].into();
    assert_eq!(hom_dim_sum(&x, &y), 1);
}

#[test]
fn hom_table_matches_oracle() {
    let w = NodalIndecomposable::window(4, 4);
    for x in &w {
        for y in &w {
            assert_eq!(hom_dim(x, y), oracle::hom(x, y), "Hom({x}, {y})");
            assert!(hom_dim(x, y) <= 1);
        }
    }
}

#[test]
fn indecomposables_are_separated() {
    let w = NodalIndecomposable::window(4, 4);
    let tests = NodalIndecomposable::window(8, 10);
    for (i, x) in w.iter().enumerate() {
        for y in &w[i + 1..] {
            assert!(
                tests.iter().any(|t| hom_dim(x, t) != hom_dim(y, t)),
                "{x} and {y} are not separated"
            );
        }
    }
}

#[test]
fn small_minimal_strings() {
    let c = minimal_string_complex(Plus, 1);
    let v: Vec<&str> = c.terms.iter().map(|t| t.projective.as_str()).collect();
    assert_eq!(v, ["-", "*", "+"]);
    let d: Vec<String> = c.differentials.iter().map(|d| d.path.display()).collect();
    assert_eq!(d, ["β", "γ"]);
    assert_eq!(c.terms[0].degree, -2);
    assert_eq!(c.terms[2].degree, 0);

    let c = minimal_string_complex(Plus, 2);
    let v: Vec<&str> = c.terms.iter().map(|t| t.projective.as_str()).collect();
    assert_eq!(v, ["+", "*", "*", "+"]);
    let d: Vec<String> = c.differentials.iter().map(|d| d.path.display()).collect();
    assert_eq!(d, ["δ", "αβ", "γ"]);
}

#[test]
fn minimal_strings_are_complexes() {
    let pres = nodal_presentation();
    for tau in Sign::ALL {
        for l in 1..=10 {
            let c = minimal_string_complex(tau, l);
            assert_eq!(c.terms.len(), l as usize + 2);
            assert_eq!(c.differentials.len(), l as usize + 1);
            assert!(c.is_complex(), "S{}({l})", tau.symbol());
            let sigma = if l % 2 == 0 { tau } else { tau.flip() };
            assert_eq!(c.terms[0].projective, sigma.symbol().to_string());
            for d in &c.differentials {
                assert!(!path_in_ideal(&d.path, &pres).unwrap());
                assert!(d.path.len() == 1 || d.path.len() == 2);
            }
        }
    }
    assert_eq!(minimal_string_complex(Plus, 3).terms[0].projective, "-");
}

#[test]
fn k0_examples() {
    let one = |x| k0_class(&NodalObject::from(vec![x])).to_pair();
    assert_eq!(one(p(Plus, 0)), [1, 0]);
    assert_eq!(one(s(Plus, 1, 0)), [1, 1]);
    assert_eq!(one(s(Plus, 2, 0)), [0, 0]);
    assert_eq!(
        minimal_string_complex(Plus, 1).euler_class().to_pair(),
        [1, 1]
    );
    assert_eq!(
        minimal_string_complex(Plus, 2).euler_class().to_pair(),
        [0, 0]
    );
    assert_eq!(K0_RANK, 2);
}

#[test]
fn k0_matches_the_complexes() {
    for tau in Sign::ALL {
        for l in 1..=10 {
            let closed = k0_indecomposable(&s(tau, l, 0));
            assert_eq!(closed, minimal_string_complex(tau, l).euler_class());
        }
    }
}

#[test]
fn cluster_membership_on_the_window() {
    for x in NodalIndecomposable::window(4, 4) {
        let expected = match x.kind {
            Kind::Projective { sign } => sign == Minus,
            Kind::MinimalString { sign, length } => sign == Minus && length % 2 == 0,
        };
        assert_eq!(cluster_member(&x), expected, "{x}");
        assert_eq!(cluster_member(&x.shifted(1)), expected);
        assert_eq!(cluster_member(&x.shifted(-3)), expected);
    }
    assert!(cluster_member(&p(Minus, 5)));
    assert!(cluster_member(&s(Minus, 4, -2)));
    assert!(!cluster_member(&s(Minus, 3, 0)));
    assert!(!cluster_member(&s(Plus, 2, 0)));
}

#[test]
fn zero_dimensional_block() {
    let pz = |n| ZeroIndecomposable {
        kind: ZeroKind::Projective,
        shift: n,
    };
    let sz = |l, n| ZeroIndecomposable {
        kind: ZeroKind::MinimalString { length: l },
        shift: n,
    };
    for n in -5..=5 {
        assert_eq!(hom_dim_zero(&pz(0), &pz(n)), u32::from(n <= 0));
    }
    assert_eq!(hom_dim_zero(&pz(1), &sz(3, 0)), 1);
    assert_eq!(hom_dim_zero(&sz(2, 0), &sz(2, 3)), 1);
    assert_eq!(hom_dim_zero(&sz(2, 0), &pz(3)), 1);
    assert_eq!(hom_dim_zero(&sz(2, 0), &pz(4)), 0);
}

#[test]
fn projective_component_window() {
    let f = ar_window(Component::ProjectivePlus, -2, 2, 0);
    let names: Vec<String> = f.vertices.iter().map(|x| x.to_string()).collect();
    assert_eq!(names, ["P+[2]", "P-[1]", "P+", "P-[-1]", "P+[-2]"]);
    assert_eq!(f.irreducible.len(), 4);
    let g = ar_window(Component::ProjectiveMinus, -2, 2, 0);
    assert_eq!(g.vertices[0].to_string(), "P-[2]");
    assert!(ar_window(Component::StringPlus, 1, 0, 3)
        .vertices
        .is_empty());
}

#[test]
fn string_component_window() {
    let f = ar_window(Component::StringPlus, -3, 3, 4);
    let tau_of =
        |x: NodalIndecomposable| f.translation.iter().find(|(a, _)| *a == x).map(|(_, b)| *b);
    assert_eq!(tau_of(s(Plus, 1, 0)), Some(s(Minus, 1, 1)));
    let twice = tau_of(tau_of(s(Plus, 1, 0)).unwrap()).unwrap();
    assert_eq!(twice, s(Plus, 1, 0).shifted(2));
    let m = ar_window(Component::StringMinus, 0, 0, 1);
    assert_eq!(m.vertices, vec![s(Minus, 1, 0)]);
}

#[test]
fn irreducible_maps_are_nonzero() {
    for c in [
        Component::StringPlus,
        Component::StringMinus,
        Component::ProjectivePlus,
        Component::ProjectiveMinus,
    ] {
        let f = ar_window(c, -3, 3, 5);
        for (x, y) in &f.irreducible {
            assert_eq!(hom_dim(x, y), 1, "{x} -> {y}");
            assert!(f.vertices.contains(x) && f.vertices.contains(y));
        }
    }
}

#[test]
fn components_partition_the_window() {
    let mut all = Vec::new();
    for c in [
        Component::StringPlus,
        Component::StringMinus,
        Component::ProjectivePlus,
        Component::ProjectiveMinus,
    ] {
        all.extend(ar_window(c, -3, 3, 4).vertices);
    }
    all.sort();
    let mut w = NodalIndecomposable::window(3, 4);
    w.sort();
    assert_eq!(all, w);
}

#[test]
fn object_syntax() {
    let parse = |t: &str| t.parse::<ParsedObject>().unwrap();
    assert_eq!(parse("P+"), ParsedObject::Nodal(p(Plus, 0)));
    assert_eq!(parse("P+ [1]"), ParsedObject::Nodal(p(Plus, 1)));
    assert_eq!(parse("S-(3)[-2]"), ParsedObject::Nodal(s(Minus, 3, -2)));
    assert_eq!(parse("S−(3)"), ParsedObject::Nodal(s(Minus, 3, 0)));
    assert!(matches!(parse("P2[4]"), ParsedObject::Zero(_)));
    assert!(matches!(parse("S(2)[1]"), ParsedObject::Zero(_)));
    for bad in ["Q+", "S+(0)", "P+[x]", "S+3", "P*"] {
        assert!(bad.parse::<ParsedObject>().is_err(), "{bad}");
    }
}

fn indecomposable() -> impl Strategy<Value = NodalIndecomposable> {
    (any::<bool>(), any::<bool>(), 1u32..8, -10i64..10).prop_map(|(proj, plus, l, n)| {
        let sign = if plus { Plus } else { Minus };
        if proj {
            p(sign, n)
        } else {
            s(sign, l, n)
        }
    })
}

proptest! {
    #[test]
    fn hom_is_shift_invariant(x in indecomposable(), y in indecomposable(), k in -6i64..6) {
        prop_assert_eq!(hom_dim(&x, &y), hom_dim(&x.shifted(k), &y.shifted(k)));
        prop_assert!(hom_dim(&x, &y) <= 1);
        let xs: NodalObject = vec![x].into();
        let ys: NodalObject = vec![y].into();
        let xk: NodalObject = vec![x.shifted(1)].into();
        let yk: NodalObject = vec![y.shifted(1)].into();
        prop_assert_eq!(hom_dim_sum(&xs, &ys), hom_dim_sum(&xk, &yk));
    }

    #[test]
    fn k0_changes_sign_under_shift(x in indecomposable()) {
        prop_assert_eq!(k0_indecomposable(&x.shifted(1)), -k0_indecomposable(&x));
    }

    #[test]
    fn hom_sum_is_additive(xs in prop::collection::vec(indecomposable(), 0..4), ys in prop::collection::vec(indecomposable(), 0..4)) {
        let total: u32 = xs.iter().flat_map(|a| ys.iter().map(move |b| hom_dim(a, b))).sum();
        prop_assert_eq!(hom_dim_sum(&xs.clone().into(), &ys.clone().into()), total);
    }
}
