mod common;

use common::*;
use rand::seq::SliceRandom;
use skewbound::algebra::{alpha, monomials_of_degree};
use skewbound::bound::{bound, dual_class, g_closed_form, j_criterion, j_table, kmax};
use skewbound::catalog::{
    complex_projective, grassmannian, oriented_grassmannian, real_projective, sphere,
};
use skewbound::{Atom, GradedSeries, Poly};

#[test]
fn massey_cap_and_report_invariants() {
    let mut all: Vec<Vec<Atom>> = plain_atoms().into_iter().map(|a| vec![a]).collect();
    all.extend(oriented_atoms().into_iter().map(|a| vec![a]));
    all.extend(sample_products());
    for atoms in all {
        let m = build(&atoms);
        let r = bound(&m).unwrap();
        if m.dimension <= 16 {
            assert!(
                r.kmax <= r.massey_cap,
                "{}: {} > {}",
                r.label,
                r.kmax,
                r.massey_cap
            );
        }
        assert!(r.kmax < m.dimension.max(1));
        assert!(r.lower_bound <= r.literature_upper);
        assert_eq!(r.witness.is_zero(), r.kmax == 0, "{}", r.label);
        assert_eq!(r.alpha, alpha(r.dimension as u64));
        assert_eq!(r.conjectured_upper, 4 * r.dimension - 2 * r.alpha + 1);
        assert_eq!(r.literature_upper, 4 * r.dimension + 1);
        // lower_bound - generic_lower = 2 kmax - 1
        assert_eq!(
            r.lower_bound as i64 - r.generic_lower as i64,
            2 * r.kmax as i64 - 1
        );
    }
}

#[test]
fn kmax_is_additive_over_products() {
    let mut rng = rng(7);
    let atoms: Vec<Atom> = plain_atoms()
        .into_iter()
        .filter(|a| a.dimension() <= 12)
        .collect();
    for _ in 0..10 {
        let a = *atoms.choose(&mut rng).unwrap();
        let b = *atoms.choose(&mut rng).unwrap();
        let ka = kmax(&build(&[a])).unwrap().0;
        let kb = kmax(&build(&[b])).unwrap().0;
        let kab = kmax(&build(&[a, b])).unwrap().0;
        assert_eq!(kab, ka + kb, "{a} x {b}");
    }
}

#[test]
fn real_projective_power_of_two_duals() {
    for r in 1..=4 {
        let n = 1u32 << r;
        let m = real_projective(n).unwrap();
        let dual = dual_class(&m).unwrap();
        let t = m.ring.table();
        for d in 0..n {
            assert_eq!(dual.component(d), parse(&format!("t^{d}"), t));
        }
        assert!(dual.component(n).is_zero());
        assert_eq!(kmax(&m).unwrap().0, n - 1);
    }
}

#[test]
fn complex_projective_duals() {
    let cp1 = complex_projective(1).unwrap();
    assert!(dual_class(&cp1).unwrap().is_one());
    let cp2 = complex_projective(2).unwrap();
    let d2 = dual_class(&cp2).unwrap();
    let t = cp2.ring.table();
    assert_eq!(d2.component(2), parse("t", t));
    assert!(d2.component(4).is_zero());
    for r in 0..=3 {
        let n = 1u32 << r;
        let m = complex_projective(n).unwrap();
        let expected: Vec<String> = (0..n).map(|j| format!("t^{j}")).collect();
        assert_eq!(
            dual_class(&m).unwrap().to_poly(),
            parse(&expected.join("+"), m.ring.table()),
            "CP({n})"
        );
    }
}

#[test]
fn sphere_duals_are_trivial() {
    for n in [1, 2, 7] {
        let r = bound(&sphere(n).unwrap()).unwrap();
        assert_eq!(r.kmax, 0);
        assert_eq!(r.lower_bound, 2 * n + 1);
        assert_eq!(r.best_lower(), 2 * n + 2);
    }
}

#[test]
fn g2_power_of_two_dual_class() {
    for r in 1..=3u32 {
        let ambient = (1 << r) + 2;
        let m = grassmannian(2, ambient).unwrap();
        let t = m.ring.table();
        let closed_form = parse("1+w1^2", t).mul_trunc(
            &parse("1+w1+w2", t).pow((1 << r) - 2, Some(m.dimension)),
            Some(m.dimension),
        );
        let dual = dual_class(&m).unwrap();
        assert_eq!(dual.to_poly(), m.ring.normal_form(&closed_form), "r={r}");
        let top = (2 << r) - 2;
        let (k, w) = kmax(&m).unwrap();
        assert_eq!(k, top);
        assert_eq!(
            w,
            m.ring
                .normal_form(&parse(&format!("w1^2*w2^{}", (1 << r) - 2), t))
        );
        assert_eq!(bound(&m).unwrap().lower_bound, 4 * (2 << r) - 3);
    }
    let g24 = grassmannian(2, 4).unwrap();
    assert_eq!(
        dual_class(&g24).unwrap().to_poly(),
        parse("1+w1^2", g24.ring.table())
    );
}

#[test]
fn oriented_g2_families_where_they_apply() {
    // 3*2^{r+1}+1 for ambient 2^r+2, r >= 2
    for r in 2..=4u32 {
        let m = oriented_grassmannian(2, (1 << r) + 2).unwrap();
        assert_eq!(bound(&m).unwrap().lower_bound, 3 * (2 << r) + 1, "r={r}");
        let (k, w) = kmax(&m).unwrap();
        assert_eq!(k, 1 << r);
        assert_eq!(w, parse(&format!("w2^{}", 1 << (r - 1)), m.ring.table()));
    }
    for r in 2..=4u32 {
        let m = oriented_grassmannian(2, (1 << r) + 1).unwrap();
        assert_eq!(bound(&m).unwrap().lower_bound, 3 * (2 << r) - 7, "r={r}");
    }
    // the +5 and +9 families need r >= 3
    for r in 3..=4u32 {
        let a = oriented_grassmannian(2, (1 << r) + 3).unwrap();
        assert_eq!(bound(&a).unwrap().lower_bound, 3 * (2 << r) + 5, "r={r}");
        let b = oriented_grassmannian(2, (1 << r) + 4).unwrap();
        assert_eq!(bound(&b).unwrap().lower_bound, 3 * (2 << r) + 9, "r={r}");
    }
}

#[test]
fn small_oriented_g2_cases_are_stably_trivial_in_the_image() {
    // (1+w2)^4 = 1 once w2^2 = 0, and similarly for ambient 7, 8
    for (ambient, expected_kmax) in [(4, 0), (7, 2), (8, 0)] {
        let m = oriented_grassmannian(2, ambient).unwrap();
        assert_eq!(kmax(&m).unwrap().0, expected_kmax, "G~(2,{ambient})");
        let raw = m.total_sw.inverse().unwrap();
        let kernel = m.oriented_kernel.clone().unwrap();
        for d in expected_kmax + 1..=m.dimension {
            assert!(skewbound::oracle::slice_ideal_test(
                m.ring.presentation(),
                &raw.component(d),
                &kernel
            ));
        }
    }
}

#[test]
fn oriented_g3_13() {
    let m = oriented_grassmannian(3, 13).unwrap();
    let raw = m.total_sw.inverse().unwrap();
    let kernel = m.oriented_kernel.clone().unwrap();
    assert!(m
        .ring
        .ideal_membership(&raw.component(15), &kernel)
        .unwrap());
    assert!(!m
        .ring
        .ideal_membership(&raw.component(14), &kernel)
        .unwrap());
    let t = m.ring.table();
    let (k, w) = kmax(&m).unwrap();
    assert_eq!((k, w), (14, parse("w2*w3^4", t)));
    // mod w1 the raw classes match the displayed closed form
    let closed = parse("1+w2^2+w3^2", t).mul_trunc(&parse("1+w2+w3", t).pow(3, None), None);
    assert_eq!(raw.to_poly().substitute_zero(0).truncate(15), closed);
    assert_eq!(bound(&m).unwrap().lower_bound, 89);
}

#[test]
fn closed_form_g_matches_series_inverse() {
    let table = j_table();
    let inv = GradedSeries::from_poly(&parse("1+w2+w3", &table), 16)
        .inverse()
        .unwrap();
    for k in 0..=16 {
        assert_eq!(g_closed_form(k, &table), inv.component(k), "g_{k}");
    }
    let c = j_criterion(13).unwrap();
    for (g, k) in c.generators.iter().zip([11, 12, 13]) {
        assert_eq!(g, &inv.component(k));
    }
}

#[test]
fn j_criterion_agrees_with_groebner_membership() {
    let m = grassmannian(3, 13).unwrap();
    let c = j_criterion(13).unwrap();
    let w1 = Poly::var(0, m.ring.table()).unwrap();
    for d in 0..=15 {
        for mono in monomials_of_degree(m.ring.table(), d) {
            if mono.exponent(0) > 0 {
                continue;
            }
            let p = Poly::from_monomial(mono);
            let in_j = c
                .contains(&c.from_w_poly(&p, m.ring.table()).unwrap())
                .unwrap();
            let in_kernel = m
                .ring
                .ideal_membership(&p, std::slice::from_ref(&w1))
                .unwrap();
            assert_eq!(in_j, in_kernel, "{}", p.display(m.ring.table()));
        }
    }
}

#[test]
fn from_w_poly_rejects_w1() {
    let m = grassmannian(3, 13).unwrap();
    let c = j_criterion(13).unwrap();
    assert!(c
        .from_w_poly(&parse("w1*w2", m.ring.table()), m.ring.table())
        .is_err());
}
