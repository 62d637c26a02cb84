mod common;

use common::{ctx, finite_element, spanning_set};
use num_complex::Complex64;
use proptest::prelude::*;
use qdisc::uqsl2::{
    act, casimir_apply, defining_relations, laplacian_apply, radial_laplacian, Generator, UqElement,
};
use qdisc::DiscElement;

const GENS: [Generator; 3] = [Generator::K, Generator::E, Generator::F];

#[test]
fn defining_relations_on_spanning_set() {
    let c = ctx(0.5);
    for (name, rel) in defining_relations(&c) {
        for f in spanning_set() {
            let r = rel.apply(&f, &c).unwrap();
            assert!(r.max_abs() < 1e-12 * (1.0 + f.max_abs()), "{name}: {}", r.max_abs());
        }
    }
}

#[test]
fn casimir_is_central() {
    let c = ctx(0.5);
    for f in spanning_set() {
        for g in GENS {
            let a = casimir_apply(&act(g, &f, &c).unwrap(), &c).unwrap();
            let b = act(g, &casimir_apply(&f, &c).unwrap(), &c).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-12 * (1.0 + a.max_abs()));
        }
    }
}

#[test]
fn laplacian_preserves_sectors_and_matches_radial_part() {
    let c = ctx(0.5);
    for f in spanning_set() {
        let l = laplacian_apply(&f, &c).unwrap();
        let labels: Vec<i64> = f.sector_labels().collect();
        assert!(l.sector_labels().all(|m| labels.contains(&m)));
        if labels == [0] {
            let r = radial_laplacian(f.sector(0).unwrap(), &c);
            assert!(l.sector(0).unwrap().max_abs_diff(&r) < 1e-12 * (1.0 + r.max_abs()));
        }
    }
}

#[test]
fn unit_is_annihilated_by_casimir() {
    let c = ctx(0.5);
    assert!(casimir_apply(&DiscElement::one(&c).scale_real(3.0), &c).unwrap().max_abs() < 1e-12);
}

fn adjoint(g: Generator) -> UqElement {
    UqElement::generator(g).star()
}

fn twisted(g: Generator) -> UqElement {
    UqElement::generator(g).antipode().star()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn module_algebra_law(f in finite_element(5), g in finite_element(5), q in 0.2f64..0.9) {
        let c = ctx(q);
        let fg = f.normal_mul(&g, &c).unwrap();
        let e = |x: &DiscElement| act(Generator::E, x, &c).unwrap();
        let k = |x: &DiscElement| act(Generator::K, x, &c).unwrap();
        let fi = |x: &DiscElement| act(Generator::F, x, &c).unwrap();
        let ki = |x: &DiscElement| act(Generator::KInv, x, &c).unwrap();
        let lhs = e(&fg);
        let rhs = e(&f).normal_mul(&g, &c).unwrap().add(&k(&f).normal_mul(&e(&g), &c).unwrap());
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
        let lhs = fi(&fg);
        let rhs = fi(&f).normal_mul(&ki(&g), &c).unwrap().add(&f.normal_mul(&fi(&g), &c).unwrap());
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
        let lhs = k(&fg);
        let rhs = k(&f).normal_mul(&k(&g), &c).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
    }

    #[test]
    fn involution_covariance(f in finite_element(5), q in 0.2f64..0.9) {
        let c = ctx(q);
        for g in GENS {
            let lhs = act(g, &f, &c).unwrap().star();
            let rhs = twisted(g).apply(&f.star(), &c).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * (1.0 + lhs.max_abs()));
        }
    }

    #[test]
    fn integral_is_invariant(f in finite_element(5), q in 0.2f64..0.9) {
        let c = ctx(q);
        let base = f.inv_integral(&c).unwrap();
        // The sum cancels exactly; rounding is relative to the weighted mass.
        let scale: f64 = f
            .sectors()
            .flat_map(|(_, g)| g.values().iter().enumerate().map(|(p, v)| v.norm() * c.q2().powi(-(p as i32))).collect::<Vec<_>>())
            .sum();
        for g in GENS {
            let v = act(g, &f, &c).unwrap().inv_integral(&c).unwrap();
            let want = base * g.counit();
            prop_assert!((v - want).norm() < 1e-12 * (1.0 + scale));
        }
    }

    #[test]
    fn adjoint_law(f in finite_element(5), g in finite_element(5), q in 0.2f64..0.9) {
        let c = ctx(q);
        for x in GENS {
            let l = act(x, &f, &c).unwrap().inner(&g, &c).unwrap();
            let r = f.inner(&adjoint(x).apply(&g, &c).unwrap(), &c).unwrap();
            prop_assert!((l - r).norm() < 1e-12 * (1.0 + l.norm()), "{x:?}: {l} vs {r}");
        }
    }
}

#[test]
fn twisted_star_tables() {
    let c = ctx(0.5);
    let q2 = c.q2();
    let f = common::basis_element(1, 3).add(&common::basis_element(-2, 1));
    let pairs = [
        (Generator::E, UqElement::word(1.0 / q2, &[Generator::F])),
        (Generator::F, UqElement::word(q2, &[Generator::E])),
        (Generator::K, UqElement::generator(Generator::KInv)),
    ];
    for (g, want) in pairs {
        let a = twisted(g).apply(&f, &c).unwrap();
        let b = want.apply(&f, &c).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-12, "{g:?}");
    }
    let _ = Complex64::new(0.0, 0.0);
}
