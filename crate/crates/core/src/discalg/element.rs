use std::collections::BTreeMap;

use num_complex::Complex64;

use super::grid::GridFunction;
use crate::context::QContext;
use crate::error::{Error, Result};

/// An element of the quantum disc algebra in normal form
/// `Σ_{m>0} z^m ψ_m(y) + ψ_0(y) + Σ_{m>0} ψ_{-m}(y) z*^m`.
///
/// Sector `m` holds `ψ_m`; absent sectors are zero. Sectors may be sampled
/// (non-finite) grid functions, which is how elements of the completion such as
/// `1`, `z` or Green function values are represented.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiscElement {
    sectors: BTreeMap<i64, GridFunction>,
}

impl DiscElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Element with a single sector.
    pub fn sector_element(m: i64, f: GridFunction) -> Self {
        let mut e = Self::zero();
        e.insert(m, f);
        e
    }

    /// Radial element `f(y)`.
    pub fn radial(f: GridFunction) -> Self {
        Self::sector_element(0, f)
    }

    /// The unit, sampled on the grid up to the horizon.
    pub fn one(ctx: &QContext) -> Self {
        Self::radial(GridFunction::constant(Complex64::new(1.0, 0.0), ctx.grid_horizon + 1))
    }

    /// The generator `z`.
    pub fn z(ctx: &QContext) -> Self {
        Self::sector_element(1, GridFunction::constant(Complex64::new(1.0, 0.0), ctx.grid_horizon + 1))
    }

    /// The generator `z*`.
    pub fn z_star(ctx: &QContext) -> Self {
        Self::sector_element(-1, GridFunction::constant(Complex64::new(1.0, 0.0), ctx.grid_horizon + 1))
    }

    /// `y = 1 - z z*`, with values `q^{2n}`.
    pub fn y(ctx: &QContext) -> Self {
        Self::radial(GridFunction::from_fn_truncated(ctx.grid_horizon + 1, |n| {
            Complex64::new(ctx.grid_point(n as i64), 0.0)
        }))
    }

    /// Radial indicator of the grid point `q^{2n}`; `n = 0` gives `f_0`.
    pub fn delta_fn(n: usize, ctx: &QContext) -> Result<Self> {
        if n > ctx.grid_horizon {
            return Err(Error::Range {
                index: n as i64,
                horizon: ctx.grid_horizon,
            });
        }
        Ok(Self::radial(GridFunction::indicator(n)))
    }

    /// Sets sector `m`, dropping it when the function is identically zero and finite.
    pub fn insert(&mut self, m: i64, f: GridFunction) {
        if f.is_finite() && f.is_zero() {
            self.sectors.remove(&m);
        } else {
            self.sectors.insert(m, f);
        }
    }

    pub fn sector(&self, m: i64) -> Option<&GridFunction> {
        self.sectors.get(&m)
    }

    pub fn sectors(&self) -> impl Iterator<Item = (i64, &GridFunction)> {
        self.sectors.iter().map(|(m, f)| (*m, f))
    }

    pub fn sector_labels(&self) -> impl Iterator<Item = i64> + '_ {
        self.sectors.keys().copied()
    }

    /// True when every sector is finitely supported.
    pub fn is_finite(&self) -> bool {
        self.sectors.values().all(GridFunction::is_finite)
    }

    pub fn is_zero(&self) -> bool {
        self.sectors.values().all(GridFunction::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, GridFunction::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, GridFunction::sub)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut out = Self::zero();
        for (m, f) in &self.sectors {
            out.insert(*m, f.scale(c));
        }
        out
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    fn merge(&self, other: &Self, op: impl Fn(&GridFunction, &GridFunction) -> GridFunction) -> Self {
        let zero = GridFunction::zero();
        let mut out = Self::zero();
        let labels: std::collections::BTreeSet<i64> =
            self.sector_labels().chain(other.sector_labels()).collect();
        for m in labels {
            let a = self.sector(m).unwrap_or(&zero);
            let b = other.sector(m).unwrap_or(&zero);
            out.insert(m, op(a, b));
        }
        out
    }

    /// Applies `f` to each sector function.
    pub fn map_sectors(&self, mut f: impl FnMut(i64, &GridFunction) -> GridFunction) -> Self {
        let mut out = Self::zero();
        for (m, g) in &self.sectors {
            out.insert(*m, f(*m, g));
        }
        out
    }

    /// Largest sector-wise difference over indices known for both sides.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let zero = GridFunction::zero();
        self.sector_labels()
            .chain(other.sector_labels())
            .map(|m| {
                let a = self.sector(m).unwrap_or(&zero);
                let b = other.sector(m).unwrap_or(&zero);
                a.max_abs_diff(b)
            })
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.sectors.values().map(GridFunction::max_abs).fold(0.0, f64::max)
    }

    /// Cuts every sector to its first `len` grid values.
    pub fn truncate(&self, len: usize) -> Self {
        self.map_sectors(|_, f| f.truncate(len))
    }

    /// The involution: sector `m` goes to sector `-m` with conjugated values.
    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, f) in &self.sectors {
            out.insert(-*m, f.conj());
        }
        out
    }

    /// Normal-ordered product `self · other`.
    pub fn normal_mul(&self, other: &Self, ctx: &QContext) -> Result<Self> {
        let mut out = Self::zero();
        for (&a, phi) in &self.sectors {
            for (&b, psi) in &other.sectors {
                let (m, prod) = mul_sectors(a, phi, b, psi, ctx.q2());
                prod.check_horizon(ctx)?;
                let acc = match out.sector(m) {
                    Some(f) => f.add(&prod),
                    None => prod,
                };
                out.insert(m, acc);
            }
        }
        Ok(out)
    }

    /// The invariant integral `(1-q^2) Σ ψ_0(q^{2n}) q^{-2n}`; only sector 0 contributes.
    pub fn inv_integral(&self, ctx: &QContext) -> Result<Complex64> {
        match self.sector(0) {
            None => Ok(Complex64::new(0.0, 0.0)),
            Some(f) if !f.is_finite() => Err(Error::Domain(
                "invariant integral needs a finitely supported radial part".into(),
            )),
            Some(f) => {
                let q2 = ctx.q2();
                let mut w = 1.0;
                let mut s = Complex64::new(0.0, 0.0);
                for v in f.values() {
                    s += v * w;
                    w /= q2;
                }
                Ok(s * (1.0 - q2))
            }
        }
    }

    /// `(f, g) = ∫ g* f dν`.
    pub fn inner(&self, other: &Self, ctx: &QContext) -> Result<Complex64> {
        other.star().normal_mul(self, ctx)?.inv_integral(ctx)
    }
}

/// `q^{2j}` products appearing when `z*^k z^k` or `z^k z*^k` are contracted.
fn contraction(q2: f64, n: i64, lo: i64, hi: i64) -> f64 {
    (lo..=hi).map(|j| 1.0 - q2.powi((n + j) as i32)).product()
}

/// Product of `sector a, function φ` with `sector b, function ψ` in normal form.
fn mul_sectors(a: i64, phi: &GridFunction, b: i64, psi: &GridFunction, q2: f64) -> (i64, GridFunction) {
    match (a >= 0, b >= 0) {
        // z^a φ z^b ψ = z^{a+b} φ(q^{2b}y) ψ(y)
        (true, true) => (a + b, GridFunction::combine(phi, b, psi, 0, |_| 1.0)),
        // φ z*^α ψ z*^β = φ(y) ψ(q^{2α}y) z*^{α+β}
        (false, false) => (a + b, GridFunction::combine(phi, 0, psi, -a, |_| 1.0)),
        // z^a χ(y) z*^β: contract c = min(a, β) pairs with z^c z*^c = Π_{j<c}(1 - q^{-2j}y)
        (true, false) => {
            let c = a.min(-b);
            let w = move |n: i64| contraction(q2, n, -(c - 1), 0);
            (a + b, GridFunction::combine(phi, -c, psi, -c, w))
        }
        // φ z*^α z^b ψ with z*^k z^k = Π_{j=1..k}(1 - q^{2j}y)
        (false, true) => {
            let alpha = -a;
            if alpha <= b {
                let d = b - alpha;
                let w = move |n: i64| contraction(q2, n + d, 1, alpha);
                (d, GridFunction::combine(phi, d, psi, 0, w))
            } else {
                let d = alpha - b;
                let w = move |n: i64| contraction(q2, n + d, 1, b);
                (-d, GridFunction::combine(phi, 0, psi, d, w))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> QContext {
        QContext::new(0.5).unwrap().with_grid_horizon(20)
    }

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn zstar_z_is_one_minus_q2y() {
        let c = ctx();
        let p = DiscElement::z_star(&c).normal_mul(&DiscElement::z(&c), &c).unwrap();
        let f = p.sector(0).unwrap();
        for n in 0..=20 {
            let want = 1.0 - c.q2() * c.grid_point(n);
            assert!((f.at(n) - want).norm() < 1e-15);
        }
        assert_eq!(p.sector_labels().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn z_zstar_is_one_minus_y() {
        let c = ctx();
        let p = DiscElement::z(&c).normal_mul(&DiscElement::z_star(&c), &c).unwrap();
        let f = p.sector(0).unwrap();
        for n in 0..=20 {
            assert!((f.at(n) - (1.0 - c.grid_point(n))).norm() < 1e-15);
        }
    }

    #[test]
    fn commutation_relation_holds() {
        let c = ctx();
        let (z, zs) = (DiscElement::z(&c), DiscElement::z_star(&c));
        let lhs = zs.normal_mul(&z, &c).unwrap();
        let rhs = z
            .normal_mul(&zs, &c)
            .unwrap()
            .scale_real(c.q2())
            .add(&DiscElement::one(&c).scale_real(1.0 - c.q2()));
        assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn zstar_shifts_radial_argument() {
        let c = ctx();
        let psi = GridFunction::finite(vec![re(1.0), re(2.0), re(3.0)]);
        let p = DiscElement::z_star(&c)
            .normal_mul(&DiscElement::radial(psi.clone()), &c)
            .unwrap();
        assert_eq!(p.sector(-1).unwrap().values(), &[re(2.0), re(3.0)]);
        // z ψ(y) is already normal; ψ(y) z = z ψ(q^2 y)
        let p = DiscElement::z(&c)
            .normal_mul(&DiscElement::radial(psi.clone()), &c)
            .unwrap();
        assert_eq!(p.sector(1).unwrap().values(), psi.values());
        let p = DiscElement::radial(psi).normal_mul(&DiscElement::z(&c), &c).unwrap();
        assert_eq!(p.sector(1).unwrap().values(), &[re(2.0), re(3.0)]);
    }

    #[test]
    fn integral_of_f0_and_deltas() {
        let c = ctx();
        let f0 = DiscElement::delta_fn(0, &c).unwrap();
        assert!((f0.inv_integral(&c).unwrap() - re(1.0 - c.q2())).norm() < 1e-15);
        let d3 = DiscElement::delta_fn(3, &c).unwrap();
        let want = (1.0 - c.q2()) * c.q2().powi(-3);
        assert!((d3.inv_integral(&c).unwrap() - re(want)).norm() < 1e-12);
        let zf0 = DiscElement::z(&c).normal_mul(&f0, &c).unwrap();
        assert_eq!(zf0.inv_integral(&c).unwrap(), re(0.0));
        assert!((f0.inner(&f0, &c).unwrap() - re(1.0 - c.q2())).norm() < 1e-15);
    }

    #[test]
    fn delta_fn_range() {
        let c = ctx();
        assert!(matches!(DiscElement::delta_fn(21, &c), Err(Error::Range { .. })));
    }

    #[test]
    fn product_past_horizon_is_capacity_error() {
        let c = ctx();
        let top = DiscElement::delta_fn(20, &c)
            .unwrap()
            .normal_mul(&DiscElement::z_star(&c), &c)
            .unwrap();
        assert!(matches!(
            DiscElement::z(&c).normal_mul(&top, &c),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn star_maps_sectors() {
        let c = ctx();
        let e = DiscElement::sector_element(2, GridFunction::finite(vec![Complex64::new(1.0, 2.0)]));
        let s = e.star();
        assert_eq!(s.sector(-2).unwrap().values(), &[Complex64::new(1.0, -2.0)]);
        assert_eq!(s.star(), e);
        assert_eq!(DiscElement::y(&c).star(), DiscElement::y(&c));
    }
}
