use num_complex::Complex64;

use super::coefficients::{series_terms, GreenOrder};
use crate::context::QContext;
use crate::discalg::{DiscElement, GridFunction};
use crate::error::{Error, Result};
use crate::uqsl2::{KernelBlocks, TwoLeg};

/// Whether a power kernel is `G_l` itself or its `l`-derivative `Ĝ_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelMode {
    Plain,
    Derivative,
}

#[derive(Clone, Debug, PartialEq)]
pub enum KernelKind {
    /// `G_l = Σ_{k,n} coef_{k,n}(l) · z^n y^l z*^k ⊗ ζ^k η^l ζ*^n`, or its `l`-derivative.
    Power { l: Complex64, mode: KernelMode },
    /// The assembled Green kernel `𝔾₁` or `𝔾₂`.
    Green { order: GreenOrder },
}

/// A formal kernel on the double disc, materialised lazily term by term.
///
/// Term `(n, k)` has first leg in sector `n - k` and second leg in sector `k - n`;
/// both legs carry the radial function
/// `χ(p) = u(p - c) Π_{j<c} (1 - q^{2(p-j)})`, `c = min(n, k)`, `u(r) = q^{2rl}`
/// (times `ln y = -rh` on a differentiated leg).
#[derive(Clone, Debug)]
pub struct Kernel {
    pub kind: KernelKind,
    /// Largest `k` and `n` used when the term set is infinite.
    pub max_index: usize,
    /// Largest `m` used by the Green series.
    pub series_terms: usize,
    pub series_tol: f64,
    q: f64,
    h: f64,
}

/// A single term of an exact (finite) kernel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelTerm {
    pub n: usize,
    pub k: usize,
    pub coefficient: Complex64,
}

/// Contribution `weight · leg1 ⊗ leg2`, each leg possibly carrying `ln y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Piece {
    pub weight: Complex64,
    pub log1: bool,
    pub log2: bool,
}

/// `G_l` (plain) or `Ĝ_l` (derivative).
///
/// For `l = -l₀` with `l₀` a nonnegative integer the plain kernel is an exact
/// finite sum over `k, n ≤ l₀`.
pub fn kernel_g(l: Complex64, mode: KernelMode, ctx: &QContext) -> Result<Kernel> {
    if l.re < -(ctx.trunc_terms as f64) {
        return Err(Error::Capacity(format!(
            "|q^(2l)| exceeds q^(-2·{}) for l = {l}",
            ctx.trunc_terms
        )));
    }
    Ok(Kernel {
        kind: KernelKind::Power { l, mode },
        max_index: ctx.trunc_terms,
        series_terms: ctx.green_terms,
        series_tol: ctx.series_tol,
        q: ctx.q(),
        h: ctx.h(),
    })
}

/// The Green kernel `𝔾₁` (order 1) or `𝔾₂` (order 2).
pub fn kernel_assembled(order: GreenOrder, ctx: &QContext) -> Kernel {
    Kernel {
        kind: KernelKind::Green { order },
        max_index: ctx.trunc_terms,
        series_terms: ctx.green_terms,
        series_tol: ctx.series_tol,
        q: ctx.q(),
        h: ctx.h(),
    }
}

/// `Some(l₀)` when `l = -l₀` for a nonnegative integer `l₀`.
pub(crate) fn exact_order(l: Complex64) -> Option<usize> {
    let r = (-l.re).round();
    (l.im == 0.0 && r >= 0.0 && (l.re + r).abs() < 1e-12).then_some(r as usize)
}

/// `((a;q^2)_k, d/dl (a;q^2)_k)` for `a = q^{2l}`, without dividing by factors.
fn poch_with_derivative(a: Complex64, q2: f64, h: f64, k: usize) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut qj = 1.0;
    for _ in 0..k {
        let f = 1.0 - a * qj;
        // d/dl (1 - q^{2l+2j}) = h q^{2l+2j}
        dp = dp * f + p * (a * qj * h);
        p *= f;
        qj *= q2;
    }
    (p, dp)
}

fn q2_poch(q2: f64, k: usize) -> f64 {
    (1..=k).map(|j| 1.0 - q2.powi(j as i32)).product()
}

impl Kernel {
    pub fn q(&self) -> f64 {
        self.q
    }

    fn q2(&self) -> f64 {
        self.q * self.q
    }

    /// Coefficient of term `(n, k)` of `G_l`, and its `l`-derivative.
    pub fn power_coefficient(&self, l: Complex64, n: usize, k: usize) -> (Complex64, Complex64) {
        let q2 = self.q2();
        let a = (-l * self.h).exp();
        let (pk, dpk) = poch_with_derivative(a, q2, self.h, k);
        let (pn, dpn) = poch_with_derivative(a, q2, self.h, n);
        let den = q2.powi(k as i32) / (q2_poch(q2, k) * q2_poch(q2, n));
        (pk * pn * den, (dpk * pn + pk * dpn) * den)
    }

    pub(crate) fn pieces(&self, l: Complex64, mode: KernelMode, n: usize, k: usize) -> Vec<Piece> {
        let (c, dc) = self.power_coefficient(l, n, k);
        match mode {
            KernelMode::Plain => vec![Piece { weight: c, log1: false, log2: false }],
            KernelMode::Derivative => vec![
                Piece { weight: dc, log1: false, log2: false },
                Piece { weight: c, log1: true, log2: false },
                Piece { weight: c, log1: false, log2: true },
            ],
        }
    }

    /// Largest admissible `k` (and `n`) for a power kernel.
    pub(crate) fn index_limit(&self, l: Complex64, mode: KernelMode) -> usize {
        match (mode, exact_order(l)) {
            (KernelMode::Plain, Some(l0)) => l0,
            _ => self.max_index,
        }
    }

    /// Terms of an exact finite kernel, `None` when the term set is infinite.
    pub fn finite_terms(&self) -> Option<Vec<KernelTerm>> {
        let KernelKind::Power { l, mode: KernelMode::Plain } = self.kind else {
            return None;
        };
        let l0 = exact_order(l)?;
        let mut out = Vec::new();
        for n in 0..=l0 {
            for k in 0..=l0 {
                out.push(KernelTerm {
                    n,
                    k,
                    coefficient: self.power_coefficient(l, n, k).0,
                });
            }
        }
        Some(out)
    }

    /// Value `ψ_{i,j}(q^{2p}, q^{2p'})` of the kernel in the two-variable normal form;
    /// only blocks with `j = -i` are nonzero.
    pub fn value(&self, i: i64, j: i64, p: usize, pp: usize) -> Complex64 {
        if j != -i {
            return Complex64::new(0.0, 0.0);
        }
        match self.kind {
            KernelKind::Power { l, mode } => self.power_value(l, mode, i, p, pp),
            KernelKind::Green { order } => {
                let mut s = Complex64::new(0.0, 0.0);
                for m in 1..=self.series_terms {
                    for t in series_terms(order, m, self.q) {
                        let mode = if t.derivative { KernelMode::Derivative } else { KernelMode::Plain };
                        s += self.power_value(Complex64::new(m as f64, 0.0), mode, i, p, pp) * t.weight;
                    }
                }
                s
            }
        }
    }

    fn power_value(&self, l: Complex64, mode: KernelMode, i: i64, p: usize, pp: usize) -> Complex64 {
        let lim = self.index_limit(l, mode) as i64;
        let mut s = Complex64::new(0.0, 0.0);
        for k in (-i).max(0)..=lim {
            let n = k + i;
            if n > lim {
                break;
            }
            let (n, k) = (n as usize, k as usize);
            for pc in self.pieces(l, mode, n, k) {
                let a = leg_value(n, k, l, pc.log1, p, self.q2(), self.h);
                let b = leg_value(n, k, l, pc.log2, pp, self.q2(), self.h);
                s += pc.weight * a * b;
            }
        }
        s
    }

    /// The kernel as a sum of pure tensors, restricted to first-leg sectors
    /// `|i| ≤ max_sector` and, for Green kernels, to `m ≤ m_terms`; legs are
    /// sampled on `len` grid points.
    pub fn two_leg(&self, max_sector: i64, m_terms: usize, len: usize) -> TwoLeg {
        let mut terms = Vec::new();
        let push_power = |l: Complex64, mode: KernelMode, scale: f64, terms: &mut Vec<_>| {
            let lim = self.index_limit(l, mode) as i64;
            for i in -max_sector..=max_sector {
                for k in (-i).max(0)..=lim {
                    let n = k + i;
                    if n > lim {
                        break;
                    }
                    let (n, k) = (n as usize, k as usize);
                    for pc in self.pieces(l, mode, n, k) {
                        terms.push((
                            pc.weight * scale,
                            leg_element(n, k, l, pc.log1, true, len, self.q2(), self.h),
                            leg_element(n, k, l, pc.log2, false, len, self.q2(), self.h),
                        ));
                    }
                }
            }
        };
        match self.kind {
            KernelKind::Power { l, mode } => push_power(l, mode, 1.0, &mut terms),
            KernelKind::Green { order } => {
                for m in 1..=m_terms {
                    for t in series_terms(order, m, self.q) {
                        let mode = if t.derivative { KernelMode::Derivative } else { KernelMode::Plain };
                        push_power(Complex64::new(m as f64, 0.0), mode, t.weight, &mut terms);
                    }
                }
            }
        }
        TwoLeg { terms }
    }

    /// Bound on the kernel values dropped by cutting the Green series after `m_terms`
    /// (first-leg sectors `|i| ≤ max_sector`), or the power series at `max_index`.
    ///
    /// Green weights decay at least like `q^{2m}` and every `G_m` term is bounded by
    /// `q^{2k}/((q^2;q^2)_k (q^2;q^2)_n)`, times `h(L_k(q^2) + L_n(q^2)) + 2/e` for
    /// `Ĝ_m`, so the tail is the first dropped weight over `1 - q^2`.
    pub fn series_tail_bound(&self, m_terms: usize, max_sector: i64) -> f64 {
        let q2 = self.q2();
        match self.kind {
            KernelKind::Power { l, mode } => {
                if matches!(mode, KernelMode::Plain) && exact_order(l).is_some() {
                    return 0.0;
                }
                let k = self.max_index as i32 + 1;
                let pinf = q2_poch(q2, 200);
                let a = (-l * self.h).exp().norm();
                let grow = (1.0 + a).powi(2 * k);
                q2.powi(k) * grow / (pinf * pinf * (1.0 - q2))
            }
            KernelKind::Green { order } => {
                let (mut plain, mut der) = (0.0f64, 0.0f64);
                for i in -max_sector..=max_sector {
                    let (mut bp, mut bd) = (0.0, 0.0);
                    for k in (-i).max(0)..=(self.max_index as i64) {
                        let n = (k + i) as usize;
                        let k = k as usize;
                        let b = q2.powi(k as i32) / (q2_poch(q2, k) * q2_poch(q2, n));
                        let lsum = |t: usize| -> f64 { (0..t).map(|j| q2.powi(j as i32) / (1.0 - q2.powi(j as i32 + 1))).sum() };
                        bp += b;
                        bd += b * (self.h * (lsum(k) + lsum(n)) + 2.0 / std::f64::consts::E);
                    }
                    plain = plain.max(bp);
                    der = der.max(bd);
                }
                series_terms(order, m_terms + 1, self.q)
                    .iter()
                    .map(|t| t.weight.abs() * if t.derivative { der } else { plain })
                    .sum::<f64>()
                    / (1.0 - q2)
            }
        }
    }

    /// Two-variable blocks `(i, j) ↦ [ψ_{ij}(q^{2p}, q^{2p'})]` on the box `0..size`.
    pub fn blocks(&self, max_sector: i64, m_terms: usize, size: usize) -> KernelBlocks {
        self.two_leg(max_sector, m_terms, size).blocks(size)
    }
}

/// Leg function `χ(p)` of term `(n, k)`.
pub(crate) fn leg_value(n: usize, k: usize, l: Complex64, log: bool, p: usize, q2: f64, h: f64) -> Complex64 {
    let c = n.min(k);
    if p < c {
        return Complex64::new(0.0, 0.0);
    }
    let r = (p - c) as f64;
    let mut v = (-l * (r * h)).exp();
    if log {
        v *= -r * h;
    }
    for j in 0..c {
        v *= 1.0 - q2.powi((p - j) as i32);
    }
    v
}

/// Leg of term `(n, k)` as a sampled element: sector `n - k` on the first leg,
/// `k - n` on the second.
#[allow(clippy::too_many_arguments)]
pub(crate) fn leg_element(
    n: usize,
    k: usize,
    l: Complex64,
    log: bool,
    first: bool,
    len: usize,
    q2: f64,
    h: f64,
) -> DiscElement {
    let s = n as i64 - k as i64;
    let f = GridFunction::from_fn_truncated(len, |p| leg_value(n, k, l, log, p, q2, h));
    DiscElement::sector_element(if first { s } else { -s }, f)
}
