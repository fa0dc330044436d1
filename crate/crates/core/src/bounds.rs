//! Generalized affinity coefficients `ρ_α^f` and the probability-of-error
//! upper bounds they induce.

use serde::Serialize;

use crate::distributions::{
    Distribution, MultivariateGaussian, MultivariateT, PearsonVii, UnivariateGaussian,
};
use crate::error::{domain, Error, Result};
use crate::linalg::SymMatrix;
use crate::means::{log_add_exp, MeanGenerator};
use crate::montecarlo::{check_priors, sharded_estimate, Estimate};
use crate::quadrature::{integrate_2d, integrate_line, QuadConfig};
use crate::search::golden_section_min;

/// One evaluation of an affinity at skew `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AffinityResult {
    pub alpha: f64,
    pub rho: f64,
    /// Upper bound on the probability of error, prior factor included.
    pub pe_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChernoffResult {
    pub alpha_star: f64,
    pub rho_star: f64,
    pub pe_bound: f64,
    /// `-ln ρ*`
    pub divergence: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffOptions {
    pub grid_points: usize,
    pub refine_tol: f64,
}

impl Default for ChernoffOptions {
    fn default() -> Self {
        Self {
            grid_points: 1001,
            refine_tol: 1e-8,
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return domain(format!("alpha must lie in [0, 1] (got {alpha})"));
    }
    Ok(())
}

fn check_dims(d1: usize, d2: usize) -> Result<()> {
    if d1 != d2 {
        return Err(Error::DimensionMismatch {
            expected: d1,
            got: d2,
        });
    }
    Ok(())
}

/// Chernoff α-coefficient `∫ p1^α p2^(1-α)` of two Gaussians, equal priors:
/// `|Σ1|^((1-α)/2) |Σ2|^(α/2) / |Σα|^(1/2) · exp(-α(1-α)/2 · Δμᵀ Σα⁻¹ Δμ)`
/// with `Σα = (1-α) Σ1 + α Σ2`.
pub fn rho_alpha_mvn(
    g1: &MultivariateGaussian,
    g2: &MultivariateGaussian,
    alpha: f64,
) -> Result<AffinityResult> {
    rho_alpha_mvn_weighted(g1, g2, 0.5, 0.5, alpha)
}

/// Gaussian α-coefficient with the bound `Pe ≤ w1^α w2^(1-α) ρ_α`.
pub fn rho_alpha_mvn_weighted(
    g1: &MultivariateGaussian,
    g2: &MultivariateGaussian,
    w1: f64,
    w2: f64,
    alpha: f64,
) -> Result<AffinityResult> {
    check_alpha(alpha)?;
    check_priors(w1, w2)?;
    check_dims(g1.dim(), g2.dim())?;
    let beta = 1.0 - alpha;
    let mixed = g1.cov().lin_comb(beta, g2.cov(), alpha)?;
    let chol_mixed = mixed.cholesky()?;
    let ld1 = g1.cov().cholesky()?.log_det();
    let ld2 = g2.cov().cholesky()?.log_det();
    let dmu: Vec<f64> = g1
        .mean()
        .iter()
        .zip(g2.mean())
        .map(|(a, b)| a - b)
        .collect();
    let mut scratch = vec![0.0; dmu.len()];
    let mahal = chol_mixed.inv_quad_form(&dmu, &mut scratch);
    let log_rho = 0.5 * beta * ld1 + 0.5 * alpha * ld2
        - 0.5 * chol_mixed.log_det()
        - 0.5 * alpha * beta * mahal;
    let rho = log_rho.exp();
    Ok(AffinityResult {
        alpha,
        rho,
        pe_bound: (alpha * w1.ln() + beta * w2.ln() + log_rho).exp(),
    })
}

/// `αF(θ1) + (1-α)F(θ2) - F(αθ1 + (1-α)θ2)` for a convex log-normalizer `F`.
/// The affinity of the exponential family is `exp(-J)`.
pub fn jensen_skew_divergence<F: Fn(&[f64]) -> f64>(
    f: F,
    theta1: &[f64],
    theta2: &[f64],
    alpha: f64,
) -> Result<f64> {
    check_alpha(alpha)?;
    check_dims(theta1.len(), theta2.len())?;
    if theta1 == theta2 || alpha == 0.0 || alpha == 1.0 {
        return Ok(0.0);
    }
    let mixed: Vec<f64> = theta1
        .iter()
        .zip(theta2)
        .map(|(a, b)| alpha * a + (1.0 - alpha) * b)
        .collect();
    let (f1, f2, fm) = (f(theta1), f(theta2), f(&mixed));
    if !(f1.is_finite() && f2.is_finite() && fm.is_finite()) {
        return domain("log-normalizer is not finite at the parameters or their combination");
    }
    let j = alpha * f1 + (1.0 - alpha) * f2 - fm;
    let slack = 1e-12 * (f1.abs() + f2.abs() + fm.abs()).max(1.0);
    if j < -slack {
        return domain(format!(
            "negative Jensen gap {j}: the log-normalizer is not convex"
        ));
    }
    Ok(j.max(0.0))
}

/// Cauchy bound from the weighted harmonic mean, together with the scale
/// `s_α` of the Cauchy density proportional to the harmonic mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CauchyBound {
    pub affinity: AffinityResult,
    pub s_alpha: f64,
}

/// `Pe ≤ (1/2) λ / √((1-α+αλ)((1-α)λ² + αλ))`, `λ = s2/s1`, equal priors.
pub fn cauchy_pe_bound(s1: f64, s2: f64, alpha: f64) -> Result<CauchyBound> {
    check_alpha(alpha)?;
    if !(s1 > 0.0 && s2 > 0.0 && s1.is_finite() && s2.is_finite()) {
        return domain(format!(
            "cauchy scales must be positive and finite (got {s1}, {s2})"
        ));
    }
    let beta = 1.0 - alpha;
    let lambda = s2 / s1;
    let rho = lambda / ((beta + alpha * lambda) * (beta * lambda * lambda + alpha * lambda)).sqrt();
    let s_alpha = ((beta * s1 * s2 * s2 + alpha * s2 * s1 * s1) / (beta * s1 + alpha * s2)).sqrt();
    Ok(CauchyBound {
        affinity: AffinityResult {
            alpha,
            rho,
            pe_bound: 0.5 * rho,
        },
        s_alpha,
    })
}

/// Shared elliptical power-mean affinity
/// `(α k1 + (1-α) k2)^(-λ) |Σα|^(1/2)` with `k_i = |Σ_i|^(1/(2λ))` and
/// `Σα⁻¹ = (α k1 Σ1⁻¹ + (1-α) k2 Σ2⁻¹) / (α k1 + (1-α) k2)`.
///
/// The value is invariant under a common rescaling of both matrices.
fn elliptical_rho(s1: &SymMatrix, s2: &SymMatrix, lambda: f64, alpha: f64) -> Result<f64> {
    let beta = 1.0 - alpha;
    let c1 = s1.cholesky()?;
    let c2 = s2.cholesky()?;
    let e = 0.5 / lambda;
    let (l1, l2) = (e * c1.log_det(), e * c2.log_det());
    let shift = l1.max(l2);
    let (k1, k2) = ((l1 - shift).exp(), (l2 - shift).exp());
    let k_alpha = alpha * k1 + beta * k2;
    let precision =
        c1.inverse()
            .lin_comb(alpha * k1 / k_alpha, &c2.inverse(), beta * k2 / k_alpha)?;
    let ld_precision = precision.cholesky()?.log_det();
    let log_rho = -lambda * (k_alpha.ln() + shift) - 0.5 * ld_precision;
    Ok(log_rho.exp())
}

/// Pearson type VII bound from the power mean with exponent `-1/λ`, equal priors.
pub fn pearson7_pe_bound(p1: &PearsonVii, p2: &PearsonVii, alpha: f64) -> Result<AffinityResult> {
    check_alpha(alpha)?;
    if p1.dim() != p2.dim() || p1.lambda() != p2.lambda() {
        return Err(Error::MismatchedFamily(format!(
            "pearson VII pair needs equal d and lambda (got d={}, {} and lambda={}, {})",
            p1.dim(),
            p2.dim(),
            p1.lambda(),
            p2.lambda()
        )));
    }
    let rho = elliptical_rho(p1.scale(), p2.scale(), p1.lambda(), alpha)?;
    Ok(AffinityResult {
        alpha,
        rho,
        pe_bound: 0.5 * rho,
    })
}

/// Multivariate t affinity from the power mean with exponent `1/t`,
/// `t = -(ν+d)/2`, equal priors.
pub fn mvt_rho_alpha(p1: &MultivariateT, p2: &MultivariateT, alpha: f64) -> Result<AffinityResult> {
    check_alpha(alpha)?;
    if p1.dim() != p2.dim() || p1.nu() != p2.nu() {
        return Err(Error::MismatchedFamily(format!(
            "multivariate t pair needs equal d and nu (got d={}, {} and nu={}, {})",
            p1.dim(),
            p2.dim(),
            p1.nu(),
            p2.nu()
        )));
    }
    let rho = elliptical_rho(p1.scale(), p2.scale(), -p1.kernel_exponent(), alpha)?;
    Ok(AffinityResult {
        alpha,
        rho,
        pe_bound: 0.5 * rho,
    })
}

/// The generator whose mean admits a closed-form affinity for the family.
pub fn default_generator(p: &Distribution) -> MeanGenerator {
    match p {
        Distribution::Gaussian(_) | Distribution::Mvn(_) => MeanGenerator::Geometric,
        Distribution::Cauchy(_) => MeanGenerator::Harmonic,
        Distribution::PearsonVii(q) => MeanGenerator::Power(-1.0 / q.lambda()),
        Distribution::Mvt(t) => MeanGenerator::Power(1.0 / t.kernel_exponent()),
    }
}

fn as_mvn(g: &UnivariateGaussian) -> MultivariateGaussian {
    MultivariateGaussian::new(vec![g.mu()], SymMatrix::diag(&[g.sigma() * g.sigma()]))
        .expect("a valid univariate gaussian is a valid 1-d gaussian")
}

fn require_equal_priors(w1: f64, w2: f64, family: &str) -> Result<()> {
    if w1 != w2 {
        return Err(Error::Unsupported(format!(
            "closed-form {family} bound is only available for equal priors; use the numeric path"
        )));
    }
    Ok(())
}

/// Closed-form affinity of a same-family pair with that family's default
/// generator.
pub fn closed_form_affinity(
    p1: &Distribution,
    p2: &Distribution,
    w1: f64,
    w2: f64,
    alpha: f64,
) -> Result<AffinityResult> {
    check_priors(w1, w2)?;
    match (p1, p2) {
        (Distribution::Gaussian(a), Distribution::Gaussian(b)) => {
            rho_alpha_mvn_weighted(&as_mvn(a), &as_mvn(b), w1, w2, alpha)
        }
        (Distribution::Mvn(a), Distribution::Mvn(b)) => rho_alpha_mvn_weighted(a, b, w1, w2, alpha),
        (Distribution::Cauchy(a), Distribution::Cauchy(b)) => {
            require_equal_priors(w1, w2, "cauchy")?;
            Ok(cauchy_pe_bound(a.scale(), b.scale(), alpha)?.affinity)
        }
        (Distribution::PearsonVii(a), Distribution::PearsonVii(b)) => {
            require_equal_priors(w1, w2, "pearson VII")?;
            pearson7_pe_bound(a, b, alpha)
        }
        (Distribution::Mvt(a), Distribution::Mvt(b)) => {
            require_equal_priors(w1, w2, "multivariate t")?;
            mvt_rho_alpha(a, b, alpha)
        }
        _ => Err(Error::Unsupported(format!(
            "no closed-form affinity for a {} / {} pair",
            p1.family_name(),
            p2.family_name()
        ))),
    }
}

/// Minimizes the bound over `α ∈ [0, 1]`: a uniform grid, then golden-section
/// refinement on the two cells around the best grid point. `α = 1/2` is always
/// evaluated, so the result never exceeds the Bhattacharyya-type bound. Ties go
/// to the leftmost grid point.
pub fn chernoff_optimize<F>(mut bound_at: F, opts: &ChernoffOptions) -> Result<ChernoffResult>
where
    F: FnMut(f64) -> Result<AffinityResult>,
{
    if opts.grid_points < 3 {
        return domain(format!(
            "chernoff grid needs at least 3 points (got {})",
            opts.grid_points
        ));
    }
    if !(opts.refine_tol > 0.0) {
        return domain(format!(
            "refinement tolerance must be positive (got {})",
            opts.refine_tol
        ));
    }
    let last = opts.grid_points - 1;
    let mut best_index = 0;
    let mut best = bound_at(0.0)?;
    for i in 1..=last {
        let r = bound_at(i as f64 / last as f64)?;
        if r.pe_bound < best.pe_bound {
            best = r;
            best_index = i;
        }
    }
    if last % 2 == 1 {
        let half = bound_at(0.5)?;
        if half.pe_bound < best.pe_bound {
            best = half;
            best_index = last / 2;
        }
    }
    let lo = best_index.saturating_sub(1) as f64 / last as f64;
    let hi = (best_index + 1).min(last) as f64 / last as f64;
    let mut failure = None;
    let (alpha, _) = golden_section_min(
        |a| match bound_at(a) {
            Ok(r) => r.pe_bound,
            Err(e) => {
                failure.get_or_insert(e);
                f64::INFINITY
            }
        },
        lo,
        hi,
        opts.refine_tol,
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let refined = bound_at(alpha)?;
    if refined.pe_bound < best.pe_bound {
        best = refined;
    }
    Ok(ChernoffResult {
        alpha_star: best.alpha,
        rho_star: best.rho,
        pe_bound: best.pe_bound,
        divergence: 0.0 - best.rho.ln(),
    })
}

/// Settings for [`rho_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig {
    pub line: QuadConfig,
    pub plane: QuadConfig,
    /// Importance-sampling draws for `d > 2`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        Self {
            line: QuadConfig::default(),
            plane: QuadConfig::two_d(),
            samples: 200_000,
            seed: 0,
        }
    }
}

/// `∫ M_f(w1 p1(x), w2 p2(x); α) dx` by quadrature for `d ≤ 2` and by
/// importance sampling from `(p1 + p2)/2` above that.
pub fn rho_numeric(
    p1: &Distribution,
    p2: &Distribution,
    w1: f64,
    w2: f64,
    g: MeanGenerator,
    alpha: f64,
    cfg: &NumericConfig,
) -> Result<Estimate> {
    check_alpha(alpha)?;
    g.validate()?;
    if !(w1 > 0.0 && w2 > 0.0 && w1.is_finite() && w2.is_finite()) {
        return domain(format!("weights must be positive (got {w1}, {w2})"));
    }
    let d = p1.dim();
    check_dims(d, p2.dim())?;
    let (lw1, lw2) = (w1.ln(), w2.ln());
    let log_integrand = |x: &[f64], scratch: &mut [f64]| {
        let a = lw1 + p1.log_pdf_with(x, scratch);
        let b = lw2 + p2.log_pdf_with(x, scratch);
        g.log_weighted_mean(a, b, alpha)
    };
    let (c1, s1) = p1.center_and_spread();
    let (c2, s2) = p2.center_and_spread();
    let center: Vec<f64> = c1.iter().zip(&c2).map(|(a, b)| 0.5 * (a + b)).collect();
    let spread: Vec<f64> = (0..d)
        .map(|i| s1[i].max(s2[i]).max(0.5 * (c1[i] - c2[i]).abs()))
        .collect();
    match d {
        1 => {
            let mut scratch = [0.0];
            let r = integrate_line(
                |x| log_integrand(&[x], &mut scratch).exp(),
                center[0],
                spread[0],
                &cfg.line,
            )?;
            Ok(Estimate::new(r.value, r.evaluations, cfg.seed, 0.0))
        }
        2 => {
            let mut scratch = [0.0; 2];
            let r = integrate_2d(
                |x| log_integrand(x, &mut scratch).exp(),
                [center[0], center[1]],
                [spread[0], spread[1]],
                &cfg.plane,
            )?;
            Ok(Estimate::new(r.value, r.evaluations, cfg.seed, 0.0))
        }
        _ => {
            if cfg.samples < 2 {
                return domain(format!("need at least two draws (got {})", cfg.samples));
            }
            let half_ln = std::f64::consts::LN_2;
            Ok(sharded_estimate(cfg.samples, cfg.seed, d, |rng, ws| {
                let src = if rng.uniform() < 0.5 { p1 } else { p2 };
                src.sample_into(rng, &mut ws.x, &mut ws.z);
                let l1 = p1.log_pdf_with(&ws.x, &mut ws.scratch);
                let l2 = p2.log_pdf_with(&ws.x, &mut ws.scratch);
                let log_proposal = log_add_exp(l1, l2) - half_ln;
                (g.log_weighted_mean(lw1 + l1, lw2 + l2, alpha) - log_proposal).exp()
            }))
        }
    }
}
