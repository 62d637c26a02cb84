use std::f64::consts::PI;
use std::sync::OnceLock;

const TERMS: usize = 40;

// B_n / (n+1)! for n = 0..TERMS.
fn coefficients() -> &'static [f64; TERMS] {
    static COEFFS: OnceLock<[f64; TERMS]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut bernoulli = [0.0f64; TERMS];
        bernoulli[0] = 1.0;
        for n in 1..TERMS {
            // Σ_{k<=n} C(n+1, k) B_k = 0
            let mut s = 0.0;
            let mut binom = 1.0;
            for (k, b) in bernoulli.iter().enumerate().take(n) {
                s += binom * b;
                binom *= (n + 1 - k) as f64 / (k + 1) as f64;
            }
            bernoulli[n] = -s / (n + 1) as f64;
        }
        let mut out = [0.0; TERMS];
        let mut fact = 1.0;
        for n in 0..TERMS {
            fact *= (n + 1) as f64;
            out[n] = bernoulli[n] / fact;
        }
        out
    })
}

/// Euler's dilogarithm `Li₂(x) = Σ_{m>=1} x^m / m²` for real `x <= 1`.
///
/// On `[-1, 0.8]` the Bernoulli expansion in `u = -ln(1-x)` is used; larger
/// arguments go through the reflection `x ↦ 1-x` and arguments below `-1`
/// through the inversion `x ↦ 1/x`.
pub fn dilogarithm(x: f64) -> f64 {
    assert!(x <= 1.0, "dilogarithm is real only for x <= 1");
    if x == 1.0 {
        return PI * PI / 6.0;
    }
    if x == 0.0 {
        return 0.0;
    }
    if x < -1.0 {
        let l = (-x).ln();
        return -PI * PI / 6.0 - 0.5 * l * l - dilogarithm(1.0 / x);
    }
    if x > 0.8 {
        return PI * PI / 6.0 - x.ln() * (1.0 - x).ln() - dilogarithm(1.0 - x);
    }
    let u = -(-x).ln_1p();
    let coeffs = coefficients();
    let mut sum = 0.0;
    let mut pow = u;
    for (n, c) in coeffs.iter().enumerate() {
        if n > 1 && n % 2 == 1 {
            pow *= u;
            continue;
        }
        sum += c * pow;
        pow *= u;
    }
    sum
}
