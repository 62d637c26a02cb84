use num_complex::Complex64;

use crate::context::QContext;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A function on the grid `q^{2Z+}`; index `n` stands for the point `y = q^{2n}`.
///
/// Two flavours share the type:
/// * finitely supported functions, stored up to their last nonzero value and zero
///   beyond it;
/// * sampled functions (members of the formal completion), known on `0..len` only.
///
/// Negative indices evaluate to zero for both flavours; every product formula that
/// reaches below the grid carries a factor vanishing there.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    values: Vec<Complex64>,
    finite_support: bool,
}

impl GridFunction {
    /// Finitely supported function with the given leading values.
    pub fn finite(mut values: Vec<Complex64>) -> Self {
        while values.last() == Some(&ZERO) {
            values.pop();
        }
        Self {
            values,
            finite_support: true,
        }
    }

    /// Function known on `0..values.len()` and unspecified beyond.
    pub fn truncated(values: Vec<Complex64>) -> Self {
        Self {
            values,
            finite_support: false,
        }
    }

    pub fn zero() -> Self {
        Self::finite(Vec::new())
    }

    /// Indicator of the grid point `q^{2n}`.
    pub fn indicator(n: usize) -> Self {
        let mut v = vec![ZERO; n + 1];
        v[n] = Complex64::new(1.0, 0.0);
        Self::finite(v)
    }

    pub fn constant(c: Complex64, len: usize) -> Self {
        Self::truncated(vec![c; len])
    }

    pub fn from_fn_finite(len: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self::finite((0..len).map(f).collect())
    }

    pub fn from_fn_truncated(len: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self::truncated((0..len).map(f).collect())
    }

    pub fn is_finite(&self) -> bool {
        self.finite_support
    }

    /// Stored values; for finite functions the support ends with the last entry.
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of leading indices with a known value; `None` when every index is known.
    pub fn known_len(&self) -> Option<usize> {
        if self.finite_support {
            None
        } else {
            Some(self.values.len())
        }
    }

    /// Value at `n`, or `None` past the known range of a sampled function.
    pub fn get(&self, n: i64) -> Option<Complex64> {
        if n < 0 {
            return Some(ZERO);
        }
        let i = n as usize;
        match self.values.get(i) {
            Some(v) => Some(*v),
            None if self.finite_support => Some(ZERO),
            None => None,
        }
    }

    /// Value at `n` treating unknown entries as zero.
    pub fn at(&self, n: i64) -> Complex64 {
        self.get(n).unwrap_or(ZERO)
    }

    /// True when every value (inside the known range) is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == ZERO)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest index carrying a nonzero value of a finite function.
    pub fn support_max(&self) -> Option<usize> {
        self.values.iter().rposition(|v| *v != ZERO)
    }

    pub fn conj(&self) -> Self {
        Self {
            values: self.values.iter().map(|v| v.conj()).collect(),
            finite_support: self.finite_support,
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let g = Self {
            values: self.values.iter().map(|v| v * c).collect(),
            finite_support: self.finite_support,
        };
        g.normalized()
    }

    /// `n ↦ f(n + d)`.
    pub fn shifted(&self, d: i64) -> Self {
        let len = (self.values.len() as i64 - d).max(0) as usize;
        let values = (0..len).map(|n| self.at(n as i64 + d)).collect();
        Self {
            values,
            finite_support: self.finite_support,
        }
        .normalized()
    }

    /// Pointwise sum; the result is finite only if both terms are.
    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let finite = self.finite_support && other.finite_support;
        let len = match (self.known_len(), other.known_len()) {
            (None, None) => self.len().max(other.len()),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let values = (0..len as i64).map(|n| f(self.at(n), other.at(n))).collect();
        Self {
            values,
            finite_support: finite,
        }
        .normalized()
    }

    /// `n ↦ a(n + sa) · b(n + sb) · w(n)`, the shape of every normal-ordering product.
    ///
    /// The result is finite when either factor is finite and the other is known on
    /// the whole region where the finite one is nonzero.
    pub fn combine(
        a: &Self,
        sa: i64,
        b: &Self,
        sb: i64,
        w: impl Fn(i64) -> f64,
    ) -> Self {
        // One past the last index where each factor may be nonzero / is known.
        let reach = |g: &Self, s: i64| (g.values.len() as i64 - s).max(0);
        let (ra, rb) = (reach(a, sa), reach(b, sb));
        let (len, finite) = match (a.finite_support, b.finite_support) {
            (true, true) => (ra.min(rb), true),
            (true, false) => (ra.min(rb), ra <= rb),
            (false, true) => (ra.min(rb), rb <= ra),
            (false, false) => (ra.min(rb), false),
        };
        let values = (0..len)
            .map(|n| {
                let wn = w(n);
                if wn == 0.0 {
                    ZERO
                } else {
                    a.at(n + sa) * b.at(n + sb) * wn
                }
            })
            .collect();
        Self {
            values,
            finite_support: finite,
        }
        .normalized()
    }

    /// Limits a sampled function to its first `len` values (no-op on finite functions
    /// whose support already fits).
    pub fn truncate(&self, len: usize) -> Self {
        let mut values = self.values.clone();
        values.truncate(len);
        Self {
            values,
            finite_support: self.finite_support,
        }
        .normalized()
    }

    /// Reinterprets a sampled function as finitely supported (values beyond the
    /// known range are declared zero).
    pub fn into_finite(self) -> Self {
        Self::finite(self.values)
    }

    /// Capacity check: finite support must end within the grid horizon.
    pub fn check_horizon(&self, ctx: &QContext) -> Result<()> {
        if let Some(top) = self.support_max().filter(|_| self.finite_support) {
            if top > ctx.grid_horizon {
                return Err(Error::Capacity(format!(
                    "support reaches grid index {top} beyond horizon {}",
                    ctx.grid_horizon
                )));
            }
        }
        Ok(())
    }

    /// Largest difference on the indices known for both functions.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let len = match (self.known_len(), other.known_len()) {
            (None, None) => self.len().max(other.len()),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        (0..len as i64)
            .map(|n| (self.at(n) - other.at(n)).norm())
            .fold(0.0, f64::max)
    }

    fn normalized(self) -> Self {
        if self.finite_support {
            Self::finite(self.values)
        } else {
            self
        }
    }
}
