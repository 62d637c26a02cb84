use nalgebra::DMatrix;
use num_complex::Complex64;

use super::element::DiscElement;
use crate::context::QContext;

/// Truncation to `span(e_0, …, e_{dim-1})` of the weighted-shift representation
/// `z e_k = sqrt(1 - q^{2(k+1)}) e_{k+1}`, in which `y e_k = q^{2k} e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    pub dim: usize,
    pub entries: DMatrix<Complex64>,
}

impl RepMatrix {
    /// Largest entry of `self - other` restricted to the first `cols` columns.
    pub fn max_abs_diff_cols(&self, other: &Self, cols: usize) -> f64 {
        let cols = cols.min(self.dim).min(other.dim);
        let mut worst = 0.0f64;
        for j in 0..cols {
            for i in 0..self.dim.min(other.dim) {
                worst = worst.max((self.entries[(i, j)] - other.entries[(i, j)]).norm());
            }
        }
        worst
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            dim: self.dim,
            entries: &self.entries * &other.entries,
        }
    }
}

/// Matrix of `f` on the first `dim` basis vectors.
///
/// Columns `k` with `k + max|m| < dim` are exact; products of truncations agree
/// with the truncation of the product on columns far enough from the edge.
pub fn rep_matrix(f: &DiscElement, dim: usize, ctx: &QContext) -> RepMatrix {
    let q2 = ctx.q2();
    let s = |k: usize| (1.0 - q2.powi(k as i32)).sqrt();
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for (sector, psi) in f.sectors() {
        let d = sector.unsigned_abs() as usize;
        for k in 0..dim {
            if sector >= 0 {
                // z^d ψ(y) e_k = ψ(q^{2k}) Π_{j=1..d} s_{k+j} e_{k+d}
                if k + d >= dim {
                    continue;
                }
                let w: f64 = (1..=d).map(|j| s(k + j)).product();
                m[(k + d, k)] = psi.at(k as i64) * w;
            } else {
                // ψ(y) z*^d e_k = ψ(q^{2(k-d)}) Π_{j<d} s_{k-j} e_{k-d}
                if k < d {
                    continue;
                }
                let w: f64 = (0..d).map(|j| s(k - j)).product();
                m[(k - d, k)] = psi.at((k - d) as i64) * w;
            }
        }
    }
    RepMatrix { dim, entries: m }
}
