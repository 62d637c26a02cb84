#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use qdisc::{DiscElement, GridFunction, QContext};

pub fn ctx(q: f64) -> QContext {
    QContext::new(q).unwrap().with_grid_horizon(40)
}

/// Finite elements with sectors in `-3..=3` and support in `0..=support`.
pub fn finite_element(support: usize) -> impl Strategy<Value = DiscElement> {
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=support + 1)),
        1..4,
    )
    .prop_map(|parts| {
        let mut e = DiscElement::zero();
        for (m, vals) in parts {
            let f = GridFunction::finite(vals.into_iter().map(|(a, b)| Complex64::new(a, b)).collect());
            let acc = match e.sector(m) {
                Some(g) => g.add(&f),
                None => f,
            };
            e.insert(m, acc);
        }
        e
    })
}

/// Sector-`m` indicator at grid index `n`: the spanning set of finite elements.
pub fn basis_element(m: i64, n: usize) -> DiscElement {
    DiscElement::sector_element(m, GridFunction::indicator(n))
}

pub fn spanning_set() -> Vec<DiscElement> {
    let mut v = Vec::new();
    for m in -3..=3 {
        for n in 0..=10 {
            v.push(basis_element(m, n));
        }
    }
    v
}

pub fn max_sector(e: &DiscElement) -> usize {
    e.sector_labels().map(|m| m.unsigned_abs() as usize).max().unwrap_or(0)
}
