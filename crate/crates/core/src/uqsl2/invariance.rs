use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::action::{act, Generator};
use crate::context::QContext;
use crate::discalg::DiscElement;
use crate::error::Result;

/// `sup |ξ v - ε(ξ) v|` over `ξ ∈ {E, F, K - 1}`.
pub fn invariance_residual(v: &DiscElement, ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in [Generator::E, Generator::F, Generator::K] {
        let d = act(g, v, ctx)?.sub(&v.scale_real(g.counit()));
        worst = worst.max(d.max_abs());
    }
    Ok(worst)
}

/// A finite sum of pure tensors `c · a ⊗ b` of disc elements: a truncated kernel
/// on the double disc, with `U_q(sl2)` acting through the coproduct
/// `Δ(K) = K⊗K`, `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K^{-1} + 1⊗F`.
#[derive(Clone, Debug, Default)]
pub struct TwoLeg {
    pub terms: Vec<(Complex64, DiscElement, DiscElement)>,
}

/// Values of a two-leg tensor on a box of grid points, one dense block per
/// sector pair `(i, j)` with entry `[p, p']` at leg arguments `(q^{2p}, q^{2p'})`.
pub type KernelBlocks = BTreeMap<(i64, i64), DMatrix<Complex64>>;

impl TwoLeg {
    pub fn act(&self, g: Generator, ctx: &QContext) -> Result<Self> {
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for (c, a, b) in &self.terms {
            match g {
                Generator::K | Generator::KInv => {
                    terms.push((*c, act(g, a, ctx)?, act(g, b, ctx)?));
                }
                Generator::E => {
                    terms.push((*c, act(Generator::E, a, ctx)?, b.clone()));
                    terms.push((*c, act(Generator::K, a, ctx)?, act(Generator::E, b, ctx)?));
                }
                Generator::F => {
                    terms.push((*c, act(Generator::F, a, ctx)?, act(Generator::KInv, b, ctx)?));
                    terms.push((*c, a.clone(), act(Generator::F, b, ctx)?));
                }
            }
        }
        Ok(Self { terms })
    }

    /// Accumulates the tensor on the box `0..size` in both legs.
    pub fn blocks(&self, size: usize) -> KernelBlocks {
        let mut out = KernelBlocks::new();
        for (c, a, b) in &self.terms {
            for (i, fa) in a.sectors() {
                for (j, fb) in b.sectors() {
                    let blk = out
                        .entry((i, j))
                        .or_insert_with(|| DMatrix::from_element(size, size, Complex64::new(0.0, 0.0)));
                    for p in 0..size {
                        let x = fa.at(p as i64) * c;
                        if x == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        for pp in 0..size {
                            blk[(p, pp)] += x * fb.at(pp as i64);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Largest entry over all blocks.
pub fn blocks_sup(b: &KernelBlocks) -> f64 {
    b.values()
        .flat_map(|m| m.iter().map(|v| v.norm()))
        .fold(0.0, f64::max)
}

/// Largest entry of `a - c·b` over all blocks.
pub fn blocks_diff_sup(a: &KernelBlocks, b: &KernelBlocks, c: f64) -> f64 {
    let mut worst = 0.0f64;
    for (key, ma) in a {
        match b.get(key) {
            Some(mb) => {
                for (x, y) in ma.iter().zip(mb.iter()) {
                    worst = worst.max((x - y * c).norm());
                }
            }
            None => worst = worst.max(ma.iter().map(|v| v.norm()).fold(0.0, f64::max)),
        }
    }
    for (key, mb) in b {
        if !a.contains_key(key) {
            worst = worst.max(mb.iter().map(|v| (v * c).norm()).fold(0.0, f64::max));
        }
    }
    worst
}

/// Relative invariance residual of a truncated kernel on the box `0..size`:
/// `max_ξ sup |ξ T - ε(ξ) T| / max(1, sup |T|)`, over blocks with
/// `|i|, |j| ≤ max_block`.
///
/// Kernel values grow like `y^{-l}` for negative `l`, so the defect is measured
/// against the size of the kernel itself. When `T` was cut to first-leg sectors
/// `|i| ≤ I`, blocks outside `|i|, |j| < I` miss half of their coproduct terms and
/// must be excluded. Leg functions must be known on `0..size + 1` for the `E`,
/// `F` stencils to stay inside the sampled range.
pub fn kernel_invariance_residual(t: &TwoLeg, size: usize, max_block: i64, ctx: &QContext) -> Result<f64> {
    let keep = |b: KernelBlocks| -> KernelBlocks {
        b.into_iter()
            .filter(|((i, j), _)| i.abs() <= max_block && j.abs() <= max_block)
            .collect()
    };
    let base = keep(t.blocks(size));
    let scale = blocks_sup(&base).max(1.0);
    let mut worst = 0.0f64;
    for g in [Generator::E, Generator::F, Generator::K] {
        let img = keep(t.act(g, ctx)?.blocks(size));
        worst = worst.max(blocks_diff_sup(&img, &base, g.counit()));
    }
    Ok(worst / scale)
}
