use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::context::QContext;
use crate::discalg::{DiscElement, GridFunction};
use crate::error::Result;

/// Generators of `U_q(sl2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    K,
    KInv,
    E,
    F,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::K, Generator::KInv, Generator::E, Generator::F];

    /// Counit: `ε(K^{±1}) = 1`, `ε(E) = ε(F) = 0`.
    pub fn counit(self) -> f64 {
        match self {
            Generator::K | Generator::KInv => 1.0,
            Generator::E | Generator::F => 0.0,
        }
    }

    /// Change of sector label under the action.
    pub fn sector_shift(self) -> i64 {
        match self {
            Generator::K | Generator::KInv => 0,
            Generator::E => 1,
            Generator::F => -1,
        }
    }
}

/// Covariant action of a generator on an element.
///
/// `K` scales sector `s` by `q^{2s}`; `E` and `F` raise and lower the sector by one
/// through two-point difference formulas in the radial variable.
pub fn act(g: Generator, f: &DiscElement, ctx: &QContext) -> Result<DiscElement> {
    let q = ctx.q();
    let q2 = ctx.q2();
    let mut out = DiscElement::zero();
    for (s, phi) in f.sectors() {
        let (target, img) = match g {
            Generator::K => (s, phi.scale(Complex64::new(q2.powi(s as i32), 0.0))),
            Generator::KInv => (s, phi.scale(Complex64::new(q2.powi(-s as i32), 0.0))),
            Generator::E => {
                let c = -q.sqrt() / (1.0 - q2);
                (s + 1, raise_or_lower(phi, s, c, q2, s >= 0))
            }
            Generator::F => {
                let c = -q.powf(2.5) / (1.0 - q2);
                (s - 1, raise_or_lower(phi, -s, c, q2, s <= 0))
            }
        };
        img.check_horizon(ctx)?;
        let acc = match out.sector(target) {
            Some(prev) => prev.add(&img),
            None => img,
        };
        out.insert(target, acc);
    }
    Ok(out)
}

/// The two difference stencils shared by `E` and `F`, with `j = |s|`:
/// * forward: `c (f(p) - q^{2j} f(p+1))`
/// * backward: `c ((q^{2p} - q^{-2j}) f(p) + (1 - q^{2p}) f(p-1))`
fn raise_or_lower(f: &GridFunction, signed_j: i64, c: f64, q2: f64, forward: bool) -> GridFunction {
    let j = signed_j.abs() as i32;
    if forward {
        let w = q2.powi(j);
        stencil(f, 1, |_| c, |_| -c * w)
    } else {
        let inv = q2.powi(-j);
        stencil(
            f,
            -1,
            |p| c * (q2.powi(p as i32) - inv),
            |p| c * (1.0 - q2.powi(p as i32)),
        )
    }
}

/// `p ↦ a(p) f(p) + b(p) f(p + d)` for `d = ±1`.
pub(crate) fn stencil(
    f: &GridFunction,
    d: i64,
    a: impl Fn(i64) -> f64,
    b: impl Fn(i64) -> f64,
) -> GridFunction {
    let len = f.len() as i64;
    let eval = |p: i64| f.at(p) * a(p) + f.at(p + d) * b(p);
    if f.is_finite() {
        let out_len = if d < 0 { len + 1 } else { len };
        GridFunction::finite((0..out_len).map(eval).collect())
    } else {
        let out_len = if d > 0 { (len - 1).max(0) } else { len };
        GridFunction::truncated((0..out_len).map(eval).collect())
    }
}

/// `t_φ`: multiplies sector `m` by `e^{imφ}`; intertwines the covariant action.
pub fn t_phi(f: &DiscElement, phi: f64) -> DiscElement {
    f.map_sectors(|m, g| g.scale(Complex64::from_polar(1.0, m as f64 * phi)))
}

/// The subspace `L_n` of elements concentrated in sector `n`, the
/// `q^{2n}`-eigenspace of `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectorSpace {
    pub n: i64,
}

impl SectorSpace {
    pub fn contains(&self, f: &DiscElement) -> bool {
        f.sectors().all(|(m, g)| m == self.n || g.is_zero())
    }

    pub fn project(&self, f: &DiscElement) -> DiscElement {
        match f.sector(self.n) {
            Some(g) => DiscElement::sector_element(self.n, g.clone()),
            None => DiscElement::zero(),
        }
    }

    /// `K`-eigenvalue `q^{2n}` of the subspace.
    pub fn k_eigenvalue(&self, ctx: &QContext) -> f64 {
        ctx.q2().powi(self.n as i32)
    }
}

/// Sector labels carrying a nonzero function.
pub fn sector_grading(f: &DiscElement) -> Vec<i64> {
    f.sectors().filter(|(_, g)| !g.is_zero()).map(|(m, _)| m).collect()
}
