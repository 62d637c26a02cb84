//! Coefficient families of the Green kernel series.

/// `c_m = (q^{-2} - 1)/(q^{-2m} - 1)`; `𝔾₁ = -Σ c_m G_m`.
pub fn green1_coefficient(m: usize, q: f64) -> f64 {
    let q2 = q * q;
    (1.0 / q2 - 1.0) / (q2.powi(-(m as i32)) - 1.0)
}

/// `a_m = q^{2m-2}(1 + q^{2m})(1 - q^2)^2/(1 - q^{2m})^2`, the `G_m` weights of `𝔾₂`.
pub fn green2_coefficient(m: usize, q: f64) -> f64 {
    let q2 = q * q;
    let q2m = q2.powi(m as i32);
    q2.powi(m as i32 - 1) * (1.0 + q2m) * (1.0 - q2).powi(2) / (1.0 - q2m).powi(2)
}

/// Order of the inverted Laplacian power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum GreenOrder {
    First,
    Second,
}

impl GreenOrder {
    pub fn from_int(k: u8) -> Option<Self> {
        match k {
            1 => Some(Self::First),
            2 => Some(Self::Second),
            _ => None,
        }
    }

    pub fn as_int(self) -> usize {
        match self {
            Self::First => 1,
            Self::Second => 2,
        }
    }
}

/// One summand `weight · G_m` (or `weight · Ĝ_m` when `derivative`) of a Green series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesTerm {
    pub m: usize,
    pub weight: f64,
    pub derivative: bool,
}

/// The terms of the Green series with index `m`.
///
/// `𝔾₁ = -Σ c_m G_m`, `𝔾₂ = Σ a_m G_m - ((1-q^2)/h) Σ c_m Ĝ_m`.
pub fn series_terms(order: GreenOrder, m: usize, q: f64) -> Vec<SeriesTerm> {
    let c = green1_coefficient(m, q);
    match order {
        GreenOrder::First => vec![SeriesTerm {
            m,
            weight: -c,
            derivative: false,
        }],
        GreenOrder::Second => {
            let h = -2.0 * q.ln();
            vec![
                SeriesTerm {
                    m,
                    weight: green2_coefficient(m, q),
                    derivative: false,
                },
                SeriesTerm {
                    m,
                    weight: -(1.0 - q * q) / h * c,
                    derivative: true,
                },
            ]
        }
    }
}
