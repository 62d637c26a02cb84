//! Registry of identity checks run by `qdisc verify`.
//!
//! Every check evaluates one identity on deterministic test data and reports the
//! largest residual found. Checks are independent and may run in parallel; the
//! report keeps registry order.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::context::QContext;
use crate::discalg::{rep_matrix, DiscElement, GridFunction};
use crate::error::Result;
use crate::exec::map_indexed;
use crate::green::{
    apply_kernel, classical_limit_report, g_radial, g_radial_values, gm_quadrature, green_solve,
    kernel_assembled, kernel_g, GreenOrder, KernelMode,
};
use crate::spherical::{
    c_function, lambda_rho, phi_rho_values, psi_rho, sigma_density, spectrum_probe,
    spectrum_segment, transform_forward, transform_inverse,
};
use crate::uqsl2::{
    act, casimir_apply, defining_relations, kernel_invariance_residual, laplacian_apply,
    laplacian_power, radial_laplacian, Generator, UqElement,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// The identity being checked, in words.
    pub paper_ref: String,
}

type CheckFn = fn(&QContext) -> Result<f64>;

struct Check {
    name: &'static str,
    tolerance: f64,
    identity: &'static str,
    run: CheckFn,
}

const GENS: [Generator; 3] = [Generator::K, Generator::E, Generator::F];

fn registry() -> Vec<Check> {
    vec![
        Check { name: "commutation_relation", tolerance: 1e-15, identity: "z* z = q^2 z z* + 1 - q^2", run: commutation_relation },
        Check { name: "radial_shift_rules", tolerance: 1e-15, identity: "z* f(y) = f(q^2 y) z*, z f(y) = f(q^-2 y) z", run: radial_shift_rules },
        Check { name: "representation_products", tolerance: 1e-12, identity: "weighted-shift representation is multiplicative and *-preserving", run: representation_products },
        Check { name: "associativity", tolerance: 1e-12, identity: "normal-ordered product is associative", run: associativity },
        Check { name: "star_antihomomorphism", tolerance: 1e-15, identity: "(fg)* = g* f*", run: star_antihomomorphism },
        Check { name: "hopf_defining_relations", tolerance: 1e-12, identity: "KEK^-1 = q^2 E, KFK^-1 = q^-2 F, [E,F] = (K - K^-1)/(q - q^-1)", run: hopf_relations },
        Check { name: "module_algebra_law", tolerance: 1e-12, identity: "E(fg) = E(f)g + K(f)E(g), F(fg) = F(f)K^-1(g) + fF(g)", run: module_algebra },
        Check { name: "involution_covariance", tolerance: 1e-12, identity: "(ξf)* = (S(ξ))* f*", run: involution_covariance },
        Check { name: "integral_invariance", tolerance: 1e-12, identity: "∫ ξf dν = ε(ξ) ∫ f dν", run: integral_invariance },
        Check { name: "adjoint_law", tolerance: 1e-12, identity: "(ξf, g) = (f, ξ* g)", run: adjoint_law },
        Check { name: "casimir_equals_laplacian", tolerance: 1e-12, identity: "Δ_q = q^-1 Ω, radial part q^-1 y^2 D(1 - qy) D", run: casimir_equals_laplacian },
        Check { name: "radial_three_term_stencil", tolerance: 1e-12, identity: "radial Laplacian as a three-term q-difference operator", run: radial_stencil },
        Check { name: "casimir_centrality", tolerance: 1e-12, identity: "Ω commutes with K, E, F", run: casimir_centrality },
        Check { name: "phi_eigen_equation", tolerance: 1e-9, identity: "Δ^(0) φ_ρ = λ(ρ) φ_ρ", run: phi_eigen },
        Check { name: "psi_eigen_equation", tolerance: 1e-9, identity: "Δ^(0) ψ_ρ = λ(ρ) ψ_ρ", run: psi_eigen },
        Check { name: "connection_formula", tolerance: 1e-9, identity: "φ_ρ = c(ρ) ψ_ρ + c(-ρ) ψ_-ρ", run: connection_formula },
        Check { name: "transform_round_trip", tolerance: 1e-8, identity: "inverse spherical transform inverts the forward transform", run: transform_round_trip },
        Check { name: "plancherel", tolerance: 1e-8, identity: "(f, g) = ∫ f^ conj(g^) dσ", run: plancherel },
        Check { name: "multiplication_law", tolerance: 1e-9, identity: "(Δ^(0) f)^ = λ f^", run: multiplication_law },
        Check { name: "radial_green_inversion", tolerance: 1e-10, identity: "Δ^(0) g1 = f0, (Δ^(0))^2 g2 = f0", run: radial_green_inversion },
        Check { name: "green_quadrature_oracle", tolerance: 1e-7, identity: "series g1, g2 equal inverse transforms of g^_1, g^_2", run: green_quadrature },
        Check { name: "green_kernel_on_f0", tolerance: 1e-10, identity: "∫ 𝔾_k f0 dν = g_k", run: green_kernel_f0 },
        Check { name: "green_kernel_inversion_1", tolerance: 1e-8, identity: "Δ_q ∫ 𝔾1 f dν = f", run: green_inversion_1 },
        Check { name: "green_kernel_inversion_2", tolerance: 1e-7, identity: "Δ_q^2 ∫ 𝔾2 f dν = f", run: green_inversion_2 },
        Check { name: "exact_kernel_invariance", tolerance: 1e-12, identity: "G_-l is U_q(sl2)-invariant for l = 1, 2, 3", run: exact_kernel_invariance },
        Check { name: "spectrum_inside_segment", tolerance: 1e-8, identity: "spectrum of Δ^(0) is [-1/(1-q)^2, -1/(1+q)^2]", run: spectrum_inside },
        Check { name: "dilogarithm_reflection", tolerance: 1e-12, identity: "Li2(t) + Li2(1-t) = π^2/6 - ln t ln(1-t)", run: dilog_reflection },
    ]
}

/// Runs every check at the given context.
pub fn run_all(ctx: &QContext) -> Vec<CheckResult> {
    let checks = registry();
    map_indexed(ctx.exec, checks.len(), |i| {
        let c = &checks[i];
        let residual = match (c.run)(ctx) {
            Ok(r) if r.is_finite() => r,
            _ => f64::MAX,
        };
        CheckResult {
            check_name: c.name.into(),
            residual,
            tolerance: c.tolerance,
            pass: residual <= c.tolerance,
            paper_ref: c.identity.into(),
        }
    })
}

pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name).collect()
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Deterministic finite elements spread over sectors `-3..=3`.
fn sample_elements() -> Vec<DiscElement> {
    (0..12)
        .map(|s| {
            let mut e = DiscElement::zero();
            for part in 0..3 {
                let m = ((s * 5 + part * 3) % 7) as i64 - 3;
                let len = 1 + (s + 2 * part) % 6;
                let f = GridFunction::finite(
                    (0..len)
                        .map(|n| {
                            let x = (s * 31 + part * 17 + n * 7) as f64;
                            Complex64::new(x.sin(), (1.3 * x).cos())
                        })
                        .collect(),
                );
                let acc = e.sector(m).map_or(f.clone(), |g| g.add(&f));
                e.insert(m, acc);
            }
            e
        })
        .collect()
}

fn spanning_set() -> Vec<DiscElement> {
    let mut v = Vec::new();
    for m in -3..=3 {
        for n in 0..=10 {
            v.push(DiscElement::sector_element(m, GridFunction::indicator(n)));
        }
    }
    v
}

fn work_ctx(ctx: &QContext) -> QContext {
    let mut c = ctx.clone();
    c.grid_horizon = c.grid_horizon.max(48);
    c
}

fn rel(d: f64, scale: f64) -> f64 {
    d / scale.max(1.0)
}

fn commutation_relation(ctx: &QContext) -> Result<f64> {
    let (z, zs) = (DiscElement::z(ctx), DiscElement::z_star(ctx));
    let lhs = zs.normal_mul(&z, ctx)?;
    let rhs = z
        .normal_mul(&zs, ctx)?
        .scale_real(ctx.q2())
        .add(&DiscElement::one(ctx).scale_real(1.0 - ctx.q2()));
    Ok(lhs.max_abs_diff(&rhs))
}

fn radial_shift_rules(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for e in sample_elements() {
        let Some(psi) = e.sector(e.sector_labels().next().unwrap_or(0)) else { continue };
        let radial = DiscElement::radial(psi.clone());
        let l = DiscElement::z_star(ctx).normal_mul(&radial, ctx)?;
        let r = DiscElement::radial(psi.shifted(1)).normal_mul(&DiscElement::z_star(ctx), ctx)?;
        worst = worst.max(l.max_abs_diff(&r));
        let l = DiscElement::z(ctx).normal_mul(&radial, ctx)?;
        let r = DiscElement::radial(psi.shifted(-1)).normal_mul(&DiscElement::z(ctx), ctx)?;
        worst = worst.max(l.max_abs_diff(&r));
    }
    Ok(worst)
}

fn representation_products(ctx: &QContext) -> Result<f64> {
    let dim = 24;
    let els = sample_elements();
    let mut worst = 0.0f64;
    for f in &els {
        for g in &els {
            let fg = f.normal_mul(g, ctx)?;
            let lhs = rep_matrix(&fg, dim, ctx);
            let rhs = rep_matrix(f, dim, ctx).mul(&rep_matrix(g, dim, ctx));
            let reach = g.sector_labels().map(|m| m.unsigned_abs() as usize).max().unwrap_or(0);
            worst = worst.max(rel(lhs.max_abs_diff_cols(&rhs, dim - reach - 1), fg.max_abs()));
        }
        let a = rep_matrix(&f.star(), dim, ctx).entries;
        let b = rep_matrix(f, dim, ctx).entries.adjoint();
        worst = worst.max((a - b).iter().map(|v| v.norm()).fold(0.0, f64::max));
    }
    Ok(worst)
}

fn associativity(ctx: &QContext) -> Result<f64> {
    let els = sample_elements();
    let mut worst = 0.0f64;
    for w in els.windows(3) {
        let l = w[0].normal_mul(&w[1], ctx)?.normal_mul(&w[2], ctx)?;
        let r = w[0].normal_mul(&w[1].normal_mul(&w[2], ctx)?, ctx)?;
        worst = worst.max(rel(l.max_abs_diff(&r), l.max_abs()));
    }
    Ok(worst)
}

fn star_antihomomorphism(ctx: &QContext) -> Result<f64> {
    let els = sample_elements();
    let mut worst = 0.0f64;
    for w in els.windows(2) {
        let l = w[0].normal_mul(&w[1], ctx)?.star();
        let r = w[1].star().normal_mul(&w[0].star(), ctx)?;
        worst = worst.max(l.max_abs_diff(&r));
    }
    Ok(worst)
}

fn hopf_relations(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for (_, rel_el) in defining_relations(ctx) {
        for f in spanning_set() {
            let scale = word_scale(&rel_el, &f, ctx)?;
            worst = worst.max(rel(rel_el.apply(&f, ctx)?.max_abs(), scale));
        }
    }
    Ok(worst)
}

/// Largest single-term magnitude `|c| |w(f)|` of `x f`.
fn word_scale(x: &UqElement, f: &DiscElement, ctx: &QContext) -> Result<f64> {
    let mut s = 0.0f64;
    for (c, w) in &x.terms {
        s = s.max(c.norm() * UqElement::word(1.0, w).apply(f, ctx)?.max_abs());
    }
    Ok(s)
}

fn module_algebra(ctx: &QContext) -> Result<f64> {
    let els = sample_elements();
    let a = |g, x: &DiscElement| act(g, x, ctx);
    let mut worst = 0.0f64;
    for w in els.windows(2) {
        let (f, g) = (&w[0], &w[1]);
        let fg = f.normal_mul(g, ctx)?;
        let lhs = a(Generator::E, &fg)?;
        let p1 = a(Generator::E, f)?.normal_mul(g, ctx)?;
        let p2 = a(Generator::K, f)?.normal_mul(&a(Generator::E, g)?, ctx)?;
        let scale = p1.max_abs().max(p2.max_abs());
        worst = worst.max(rel(lhs.max_abs_diff(&p1.add(&p2)), scale));
        let lhs = a(Generator::F, &fg)?;
        let p1 = a(Generator::F, f)?.normal_mul(&a(Generator::KInv, g)?, ctx)?;
        let p2 = f.normal_mul(&a(Generator::F, g)?, ctx)?;
        let scale = p1.max_abs().max(p2.max_abs());
        worst = worst.max(rel(lhs.max_abs_diff(&p1.add(&p2)), scale));
    }
    Ok(worst)
}

fn involution_covariance(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for f in sample_elements() {
        for g in GENS {
            let lhs = act(g, &f, ctx)?.star();
            let rhs = UqElement::generator(g).antipode().star().apply(&f.star(), ctx)?;
            worst = worst.max(rel(lhs.max_abs_diff(&rhs), lhs.max_abs()));
        }
    }
    Ok(worst)
}

/// `Σ_m Σ_p |ψ_m(p)| q^{-2p}`, the natural scale of invariant integrals.
fn weighted_mass(f: &DiscElement, ctx: &QContext) -> f64 {
    f.sectors()
        .flat_map(|(_, g)| g.values().iter().enumerate().map(|(p, v)| v.norm() * ctx.q2().powi(-(p as i32))).collect::<Vec<_>>())
        .sum()
}

fn integral_invariance(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for f in sample_elements() {
        let base = f.inv_integral(ctx)?;
        for g in GENS {
            let v = act(g, &f, ctx)?.inv_integral(ctx)?;
            worst = worst.max(rel((v - base * g.counit()).norm(), weighted_mass(&f, ctx)));
        }
    }
    Ok(worst)
}

fn adjoint_law(ctx: &QContext) -> Result<f64> {
    let els = sample_elements();
    let mut worst = 0.0f64;
    for w in els.windows(2) {
        let (f, g) = (&w[0], &w[1]);
        for x in GENS {
            let l = act(x, f, ctx)?.inner(g, ctx)?;
            let r = f.inner(&UqElement::generator(x).star().apply(g, ctx)?, ctx)?;
            let scale = weighted_mass(&act(x, f, ctx)?, ctx) * g.max_abs();
            worst = worst.max(rel((l - r).norm(), scale));
        }
    }
    Ok(worst)
}

fn casimir_equals_laplacian(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in 0..=10 {
        let g = GridFunction::indicator(n);
        let omega = casimir_apply(&DiscElement::radial(g.clone()), ctx)?.scale_real(1.0 / ctx.q());
        let d = radial_laplacian(&g, ctx);
        let diff = omega.sector(0).map_or(d.max_abs(), |o| o.max_abs_diff(&d));
        worst = worst.max(rel(diff, d.max_abs()));
    }
    // Δ_q and q^-1 Ω agree on every sector of the spanning set
    for f in spanning_set() {
        let a = laplacian_apply(&f, ctx)?;
        let b = casimir_apply(&f, ctx)?.scale_real(1.0 / ctx.q());
        worst = worst.max(rel(a.max_abs_diff(&b), a.max_abs()));
    }
    Ok(worst)
}

fn radial_stencil(ctx: &QContext) -> Result<f64> {
    let q2 = ctx.q2();
    let c = q2 / (1.0 - q2).powi(2);
    let g = GridFunction::from_fn_truncated(40, |n| {
        let x = n as f64;
        Complex64::new((0.7 * x).sin() + 0.3, (0.4 * x).cos())
    });
    let d = radial_laplacian(&g, ctx);
    let mut worst = 0.0f64;
    for n in 0..39i64 {
        let y = ctx.grid_point(n);
        let s = ((g.at(n - 1) - g.at(n)) * (1.0 - y) + (g.at(n) - g.at(n + 1)) * (y - 1.0 / q2)) * c;
        worst = worst.max(rel((d.at(n) - s).norm(), s.norm()));
    }
    Ok(worst)
}

fn casimir_centrality(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for f in sample_elements() {
        for g in GENS {
            let a = casimir_apply(&act(g, &f, ctx)?, ctx)?;
            let b = act(g, &casimir_apply(&f, ctx)?, ctx)?;
            let scale = word_scale(&casimir_word(ctx), &act(g, &f, ctx)?, ctx)?;
            worst = worst.max(rel(a.max_abs_diff(&b), scale));
        }
    }
    Ok(worst)
}

fn casimir_word(ctx: &QContext) -> UqElement {
    crate::uqsl2::casimir(ctx)
}

fn rho_samples(ctx: &QContext) -> Vec<f64> {
    (0..16).map(|j| (j as f64 + 0.5) * ctx.spectral_period() / 16.0).collect()
}

/// Operator norm bound of the three-term stencil times the sample size.
fn eigen_scale(vals: &[Complex64], ctx: &QContext) -> f64 {
    let m = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    m * (1.0 + ctx.q2()) / (1.0 - ctx.q2()).powi(2)
}

fn phi_eigen(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for rho in rho_samples(ctx) {
        let vals = phi_rho_values(re(rho), 31, ctx);
        let lap = radial_laplacian(&GridFunction::truncated(vals.clone()), ctx);
        let lam = lambda_rho(re(rho), ctx);
        let scale = eigen_scale(&vals, ctx);
        for (n, v) in vals.iter().enumerate().take(31) {
            worst = worst.max(rel((lap.at(n as i64) - lam * v).norm(), scale));
        }
    }
    Ok(worst)
}

fn psi_eigen(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for rho in rho_samples(ctx) {
        let vals = (0..=31).map(|n| psi_rho(re(rho), n, ctx)).collect::<Result<Vec<_>>>()?;
        let lap = radial_laplacian(&GridFunction::truncated(vals.clone()), ctx);
        let lam = lambda_rho(re(rho), ctx);
        let scale = eigen_scale(&vals, ctx);
        for (n, v) in vals.iter().enumerate().take(31).skip(1) {
            worst = worst.max(rel((lap.at(n as i64) - lam * v).norm(), scale));
        }
    }
    Ok(worst)
}

fn connection_formula(ctx: &QContext) -> Result<f64> {
    let half = std::f64::consts::PI / ctx.h();
    let mut worst = 0.0f64;
    for rho in rho_samples(ctx) {
        if [0.0, half, 2.0 * half].iter().any(|p| (rho - p).abs() < 0.05 * half) {
            continue;
        }
        let r = re(rho);
        let (cp, cm) = (c_function(r, ctx)?, c_function(-r, ctx)?);
        let phi = phi_rho_values(r, 30, ctx);
        for (n, v) in phi.iter().enumerate() {
            let (a, b) = (cp * psi_rho(r, n, ctx)?, cm * psi_rho(-r, n, ctx)?);
            worst = worst.max(rel((v - a - b).norm(), a.norm().max(b.norm())));
        }
    }
    Ok(worst)
}

fn transform_round_trip(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in 0..=20 {
        let g = GridFunction::indicator(n);
        let back = transform_inverse(&transform_forward(&g, ctx)?, 22, ctx)?;
        worst = worst.max(back.max_abs_diff(&g));
    }
    Ok(worst)
}

fn plancherel(ctx: &QContext) -> Result<f64> {
    let els: Vec<GridFunction> = sample_elements()
        .iter()
        .filter_map(|e| e.sectors().next().map(|(_, g)| g.clone()))
        .collect();
    let mut worst = 0.0f64;
    for w in els.windows(2) {
        let inner = DiscElement::radial(w[0].clone()).inner(&DiscElement::radial(w[1].clone()), ctx)?;
        let (a, b) = (transform_forward(&w[0], ctx)?, transform_forward(&w[1], ctx)?);
        let step = ctx.spectral_period() / a.nodes.len() as f64;
        let quad: Complex64 = a
            .nodes
            .iter()
            .enumerate()
            .map(|(j, r)| a.values[j] * b.values[j].conj() * sigma_density(*r, ctx) * step)
            .sum();
        worst = worst.max(rel((quad - inner).norm(), inner.norm()));
    }
    Ok(worst)
}

fn multiplication_law(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for e in sample_elements().iter().take(4) {
        let Some((_, g)) = e.sectors().next() else { continue };
        let lhs = transform_forward(&radial_laplacian(g, ctx), ctx)?;
        let rhs = transform_forward(g, ctx)?.multiply(|r| lambda_rho(re(r), ctx));
        let scale = rhs.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        worst = worst.max(rel(lhs.max_abs_diff(&rhs), scale));
    }
    Ok(worst)
}

fn radial_green_inversion(ctx: &QContext) -> Result<f64> {
    let g1 = g_radial_values(GreenOrder::First, 43, ctx);
    let g2 = g_radial_values(GreenOrder::Second, 43, ctx);
    let l1 = radial_laplacian(&g1, ctx);
    let ll2 = radial_laplacian(&radial_laplacian(&g2, ctx), ctx);
    let f0 = GridFunction::indicator(0);
    Ok(l1.truncate(41).max_abs_diff(&f0).max(ll2.truncate(41).max_abs_diff(&f0)))
}

fn green_quadrature(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for (m, order) in [(1, GreenOrder::First), (2, GreenOrder::Second)] {
        let quad = gm_quadrature(m, 20, ctx)?;
        for n in 0..=20 {
            worst = worst.max((quad.at(n as i64) - g_radial(order, n, ctx)).norm());
        }
    }
    Ok(worst)
}

fn green_kernel_f0(ctx: &QContext) -> Result<f64> {
    let c = work_ctx(ctx);
    let f0 = DiscElement::delta_fn(0, &c)?;
    let mut worst = 0.0f64;
    for order in [GreenOrder::First, GreenOrder::Second] {
        let out = apply_kernel(&kernel_assembled(order, &c), &f0, &c)?.element;
        let want = g_radial_values(order, c.grid_horizon + 1, &c);
        worst = worst.max(out.sector(0).map_or(f64::MAX, |g| g.max_abs_diff(&want)));
    }
    Ok(worst)
}

fn green_inversion(ctx: &QContext, order: GreenOrder) -> Result<f64> {
    let c = work_ctx(ctx);
    let mut worst = 0.0f64;
    for f in spanning_set() {
        let u = green_solve(&f, order, &c)?;
        let back = laplacian_power(&u, order.as_int(), &c)?;
        worst = worst.max(back.truncate(31).max_abs_diff(&f));
    }
    Ok(worst)
}

fn green_inversion_1(ctx: &QContext) -> Result<f64> {
    green_inversion(ctx, GreenOrder::First)
}

fn green_inversion_2(ctx: &QContext) -> Result<f64> {
    green_inversion(ctx, GreenOrder::Second)
}

fn exact_kernel_invariance(ctx: &QContext) -> Result<f64> {
    let mut worst = 0.0f64;
    for l in 1..=3i64 {
        let k = kernel_g(re(-(l as f64)), KernelMode::Plain, ctx)?;
        let t = k.two_leg(l + 1, 0, 10);
        worst = worst.max(kernel_invariance_residual(&t, 8, l + 1, ctx)?);
    }
    Ok(worst)
}

fn spectrum_inside(ctx: &QContext) -> Result<f64> {
    let (lo, hi) = spectrum_probe(200, ctx)?;
    let (s0, s1) = spectrum_segment(ctx);
    Ok((s0 - lo).max(hi - s1).max(0.0))
}

fn dilog_reflection(_ctx: &QContext) -> Result<f64> {
    let r = classical_limit_report(&[0.1, 0.25, 0.5, 0.75, 0.9], &[0.5], 1e-15)?;
    Ok(r.rows.iter().map(|r| r.reflection_residual).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names = check_names();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
        assert!(names.contains(&"casimir_equals_laplacian"));
    }
}
