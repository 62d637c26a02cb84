use num_complex::Complex64;

use super::action::{act, Generator};
use crate::context::QContext;
use crate::discalg::DiscElement;
use crate::error::Result;

/// A noncommutative polynomial in the generators: a sum of coefficient·word terms.
///
/// Words act right to left, so `[F, E]` means `F·E`, i.e. first `E` then `F`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UqElement {
    pub terms: Vec<(Complex64, Vec<Generator>)>,
}

impl UqElement {
    pub fn unit() -> Self {
        Self::word(1.0, &[])
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(1.0, &[g])
    }

    pub fn word(c: f64, w: &[Generator]) -> Self {
        Self {
            terms: vec![(Complex64::new(c, 0.0), w.to_vec())],
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, w)| (a * c, w.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((a * b, w));
            }
        }
        Self { terms }
    }

    pub fn counit(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, w)| c * w.iter().map(|g| g.counit()).product::<f64>())
            .sum()
    }

    /// Antipode, an anti-homomorphism with `S(K) = K^{-1}`, `S(E) = -K^{-1}E`, `S(F) = -FK`.
    pub fn antipode(&self) -> Self {
        self.anti_map(|g| match g {
            Generator::K => Self::generator(Generator::KInv),
            Generator::KInv => Self::generator(Generator::K),
            Generator::E => Self::word(-1.0, &[Generator::KInv, Generator::E]),
            Generator::F => Self::word(-1.0, &[Generator::F, Generator::K]),
        }, false)
    }

    /// Involution compatible with the disc algebra: `K* = K`, `E* = -KF`, `F* = -EK^{-1}`.
    pub fn star(&self) -> Self {
        self.anti_map(|g| match g {
            Generator::K => Self::generator(Generator::K),
            Generator::KInv => Self::generator(Generator::KInv),
            Generator::E => Self::word(-1.0, &[Generator::K, Generator::F]),
            Generator::F => Self::word(-1.0, &[Generator::E, Generator::KInv]),
        }, true)
    }

    fn anti_map(&self, image: impl Fn(Generator) -> Self, conjugate: bool) -> Self {
        let mut out = Self { terms: Vec::new() };
        for (c, w) in &self.terms {
            let c = if conjugate { c.conj() } else { *c };
            let mut acc = Self {
                terms: vec![(c, Vec::new())],
            };
            for g in w.iter().rev() {
                acc = acc.mul(&image(*g));
            }
            out = out.add(&acc);
        }
        out
    }

    /// Action on an element.
    pub fn apply(&self, f: &DiscElement, ctx: &QContext) -> Result<DiscElement> {
        let mut out = DiscElement::zero();
        for (c, w) in &self.terms {
            let mut v = f.clone();
            for g in w.iter().rev() {
                v = act(*g, &v, ctx)?;
            }
            out = out.add(&v.scale(*c));
        }
        Ok(out)
    }
}

/// Casimir element `Ω = FE + (q^{-1}K^{-1} + qK - q - q^{-1})/(q^{-1} - q)^2`.
pub fn casimir(ctx: &QContext) -> UqElement {
    let q = ctx.q();
    let d = (1.0 / q - q).powi(2);
    UqElement::word(1.0, &[Generator::F, Generator::E])
        .add(&UqElement::word(1.0 / (q * d), &[Generator::KInv]))
        .add(&UqElement::word(q / d, &[Generator::K]))
        .add(&UqElement::word(-(q + 1.0 / q) / d, &[]))
}

/// `Ω f`.
pub fn casimir_apply(f: &DiscElement, ctx: &QContext) -> Result<DiscElement> {
    casimir(ctx).apply(f, ctx)
}

/// Defining-relation defects `KEK^{-1} - q^2E`, `KFK^{-1} - q^{-2}F`,
/// `EF - FE - (K - K^{-1})/(q - q^{-1})` and `KK^{-1} - 1`.
pub fn defining_relations(ctx: &QContext) -> Vec<(&'static str, UqElement)> {
    use Generator::*;
    let q = ctx.q();
    let q2 = ctx.q2();
    let c = 1.0 / (q - 1.0 / q);
    vec![
        (
            "KEK^-1 = q^2 E",
            UqElement::word(1.0, &[K, E, KInv]).add(&UqElement::word(-q2, &[E])),
        ),
        (
            "KFK^-1 = q^-2 F",
            UqElement::word(1.0, &[K, F, KInv]).add(&UqElement::word(-1.0 / q2, &[F])),
        ),
        (
            "EF - FE = (K - K^-1)/(q - q^-1)",
            UqElement::word(1.0, &[E, F])
                .add(&UqElement::word(-1.0, &[F, E]))
                .add(&UqElement::word(-c, &[K]))
                .add(&UqElement::word(c, &[KInv])),
        ),
        (
            "KK^-1 = 1",
            UqElement::word(1.0, &[K, KInv]).add(&UqElement::word(-1.0, &[])),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn antipode_tables() {
        let se = UqElement::generator(E).antipode();
        assert_eq!(se, UqElement::word(-1.0, &[KInv, E]));
        let sk = UqElement::generator(K).antipode();
        assert_eq!(sk, UqElement::generator(KInv));
    }

    #[test]
    fn star_is_antilinear_antimultiplicative() {
        let x = UqElement::word(1.0, &[E, F]).scale(Complex64::new(0.0, 2.0));
        let s = x.star();
        // (2i EF)* = -2i F* E* = -2i (-EK^{-1})(-KF)
        assert_eq!(s, UqElement {
            terms: vec![(Complex64::new(0.0, -2.0), vec![E, KInv, K, F])]
        });
    }

    #[test]
    fn counit_of_casimir_vanishes() {
        let ctx = QContext::new(0.4).unwrap();
        assert!(casimir(&ctx).counit().norm() < 1e-14);
    }
}
