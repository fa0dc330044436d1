//! Exact Bayes error through the total variation identity
//! `B_e = (a1 + a2)/2 - TV(a1 p1, a2 p2)`.

use std::f64::consts::{FRAC_2_PI, SQRT_2};

use serde::{Deserialize, Serialize};

use crate::distributions::{erf, Distribution, UnivariateGaussian};
use crate::error::{domain, Error, Result};
use crate::linalg::{SymMatrix, PINV_REL_TOL};
use crate::search::golden_section_max;

/// Decision costs `c_ij` (cost of deciding class `i` when `j` is true) and
/// class priors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CostModel {
    pub c11: f64,
    pub c12: f64,
    pub c21: f64,
    pub c22: f64,
    pub w1: f64,
    pub w2: f64,
}

impl CostModel {
    pub fn new(costs: [[f64; 2]; 2], w1: f64, w2: f64) -> Result<Self> {
        let cm = Self {
            c11: costs[0][0],
            c12: costs[0][1],
            c21: costs[1][0],
            c22: costs[1][1],
            w1,
            w2,
        };
        cm.validate()?;
        Ok(cm)
    }

    /// Zero cost for a correct decision, unit cost for an error.
    pub fn error_model(w1: f64, w2: f64) -> Result<Self> {
        Self::new([[0.0, 1.0], [1.0, 0.0]], w1, w2)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.w1 > 0.0 && self.w2 > 0.0) || (self.w1 + self.w2 - 1.0).abs() > 1e-12 {
            return domain(format!(
                "priors must be positive and sum to 1 (got {}, {})",
                self.w1, self.w2
            ));
        }
        let (a1, a2) = derived_weights(self);
        if !(a1 >= 0.0 && a2 >= 0.0) || !a1.is_finite() || !a2.is_finite() {
            return domain(format!(
                "derived weights must be nonnegative (got {a1}, {a2})"
            ));
        }
        Ok(())
    }
}

/// `a1 = w1 (c11 + c21)`, `a2 = w2 (c12 + c22)`.
pub fn derived_weights(cm: &CostModel) -> (f64, f64) {
    (cm.w1 * (cm.c11 + cm.c21), cm.w2 * (cm.c12 + cm.c22))
}

/// Bayes error from the total variation of the scaled pair `(a1 p1, a2 p2)`.
pub fn bayes_error(cm: &CostModel, tv: f64) -> f64 {
    let (a1, a2) = derived_weights(cm);
    0.5 * (a1 + a2) - tv
}

/// Sorted abscissae where two scaled densities cross, plus the support ends.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossingSet {
    pub roots: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
}

impl CrossingSet {
    pub fn new(mut roots: Vec<f64>) -> Self {
        roots.sort_by(f64::total_cmp);
        roots.dedup();
        Self {
            roots,
            lower: f64::NEG_INFINITY,
            upper: f64::INFINITY,
        }
    }

    /// The segments `[x_{i-1}, x_i]` between consecutive breakpoints.
    pub fn segments(&self) -> Vec<(f64, f64)> {
        let mut points = Vec::with_capacity(self.roots.len() + 2);
        points.push(self.lower);
        points.extend_from_slice(&self.roots);
        points.push(self.upper);
        points.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// Real roots of `a x² + b x + c` without cancellation.
fn quadratic_roots(a: f64, b: f64, c: f64) -> Result<Vec<f64>> {
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Err(Error::NoCrossing);
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return Ok(vec![0.0]);
    }
    Ok(vec![q / a, c / q])
}

/// Crossings of `a1 N(μ1, σ1²)` and `a2 N(μ2, σ2²)`.
pub fn gaussian_crossings(
    a1: f64,
    g1: &UnivariateGaussian,
    a2: f64,
    g2: &UnivariateGaussian,
) -> Result<CrossingSet> {
    check_scales(a1, a2)?;
    let (m1, s1, m2, s2) = (g1.mu(), g1.sigma(), g2.mu(), g2.sigma());
    let k = 2.0 * (a1 * s2 / (a2 * s1)).ln();
    if s1 == s2 {
        if m1 == m2 {
            return Err(Error::DegenerateInput(
                "gaussians share mean and scale".into(),
            ));
        }
        let x = (m1 * m1 - m2 * m2 - k * s1 * s1) / (2.0 * (m1 - m2));
        return Ok(CrossingSet::new(vec![x]));
    }
    let (v1, v2) = (s1 * s1, s2 * s2);
    let a = 1.0 / v1 - 1.0 / v2;
    let b = 2.0 * (m2 / v2 - m1 / v1);
    let c = m1 * m1 / v1 - m2 * m2 / v2 - k;
    Ok(CrossingSet::new(quadratic_roots(a, b, c)?))
}

/// Crossings of `a1 Cauchy(s1)` and `a2 Cauchy(s2)`:
/// `x² = s1 s2 (a2 s1 - a1 s2) / (a1 s1 - a2 s2)`.
pub fn cauchy_crossings(a1: f64, s1: f64, a2: f64, s2: f64) -> Result<CrossingSet> {
    check_scales(a1, a2)?;
    if !(s1 > 0.0 && s2 > 0.0) {
        return domain(format!("cauchy scales must be positive (got {s1}, {s2})"));
    }
    if s1 == s2 {
        return Err(Error::DegenerateInput("cauchy scales are equal".into()));
    }
    let sq = s1 * s2 * (a2 * s1 - a1 * s2) / (a1 * s1 - a2 * s2);
    if !(sq > 0.0) || !sq.is_finite() {
        return Err(Error::NoCrossing);
    }
    let r = sq.sqrt();
    Ok(CrossingSet::new(vec![-r, r]))
}

fn check_scales(a1: f64, a2: f64) -> Result<()> {
    if !(a1 > 0.0 && a2 > 0.0 && a1.is_finite() && a2.is_finite()) {
        return domain(format!("density scales must be positive (got {a1}, {a2})"));
    }
    Ok(())
}

/// `TV(a1 p1, a2 p2) = (1/2) Σ |a1 ΔP1 - a2 ΔP2|` over the crossing segments,
/// with `ΔP` the CDF increments of the unscaled densities.
pub fn tv_univariate(
    a1: f64,
    p1: &Distribution,
    a2: f64,
    p2: &Distribution,
    crossings: &CrossingSet,
) -> Result<f64> {
    let mut total = 0.0;
    for (lo, hi) in crossings.segments() {
        let m1 = p1.cdf(hi)? - p1.cdf(lo)?;
        let m2 = p2.cdf(hi)? - p2.cdf(lo)?;
        total += (a1 * m1 - a2 * m2).abs();
    }
    Ok(0.5 * total)
}

/// Crossings of a same-family univariate pair.
pub fn crossings(a1: f64, p1: &Distribution, a2: f64, p2: &Distribution) -> Result<CrossingSet> {
    match (p1, p2) {
        (Distribution::Gaussian(g1), Distribution::Gaussian(g2)) => {
            gaussian_crossings(a1, g1, a2, g2)
        }
        (Distribution::Cauchy(c1), Distribution::Cauchy(c2)) => {
            cauchy_crossings(a1, c1.scale(), a2, c2.scale())
        }
        _ => Err(Error::Unsupported(format!(
            "exact total variation needs two gaussian1d or two cauchy densities (got {} / {})",
            p1.family_name(),
            p2.family_name()
        ))),
    }
}

/// `TV(a1 p1, a2 p2)` for a same-family univariate pair. Pairs whose scaled
/// densities never cross, including identical shapes, give `|a1 - a2| / 2`.
pub fn scaled_tv(a1: f64, p1: &Distribution, a2: f64, p2: &Distribution) -> Result<f64> {
    match crossings(a1, p1, a2, p2) {
        Ok(set) => tv_univariate(a1, p1, a2, p2, &set),
        Err(Error::NoCrossing) | Err(Error::DegenerateInput(_)) => Ok(0.5 * (a1 - a2).abs()),
        Err(e) => Err(e),
    }
}

/// Exact probability of error `1/2 - TV(w1 p1, w2 p2)`.
pub fn exact_pe(p1: &Distribution, p2: &Distribution, w1: f64, w2: f64) -> Result<f64> {
    let cm = CostModel::error_model(w1, w2)?;
    let tv = scaled_tv(w1, p1, w2, p2)?;
    Ok(bayes_error(&cm, tv))
}

/// Two-crossing Gaussian total variation written with `erf` directly.
pub fn gaussian_tv_closed_form(
    a1: f64,
    g1: &UnivariateGaussian,
    a2: f64,
    g2: &UnivariateGaussian,
) -> Result<f64> {
    let set = gaussian_crossings(a1, g1, a2, g2)?;
    let z = |g: &UnivariateGaussian, x: f64| erf((x - g.mu()) / (g.sigma() * SQRT_2));
    let mut edges1 = vec![-1.0];
    let mut edges2 = vec![-1.0];
    for &x in &set.roots {
        edges1.push(z(g1, x));
        edges2.push(z(g2, x));
    }
    edges1.push(1.0);
    edges2.push(1.0);
    let total: f64 = edges1
        .windows(2)
        .zip(edges2.windows(2))
        .map(|(e1, e2)| (a1 * (e1[1] - e1[0]) - a2 * (e2[1] - e2[0])).abs())
        .sum();
    Ok(0.25 * total)
}

/// `TV = |(2/π)(arctan √(s2/s1) - arctan √(s1/s2))|`.
pub fn cauchy_tv(s1: f64, s2: f64) -> Result<f64> {
    if !(s1 > 0.0 && s2 > 0.0) {
        return domain(format!("cauchy scales must be positive (got {s1}, {s2})"));
    }
    Ok((FRAC_2_PI * ((s2 / s1).sqrt().atan() - (s1 / s2).sqrt().atan())).abs())
}

/// Equal-prior Cauchy probability of error `1 - (2/π) arctan √λ`, using
/// `max(λ, 1/λ)`.
pub fn cauchy_pe(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return domain(format!("scale ratio must be positive (got {lambda})"));
    }
    let l = lambda.max(1.0 / lambda);
    Ok(1.0 - FRAC_2_PI * l.sqrt().atan())
}

/// Gap between the harmonic-mean bound at `α = 1/2` and the exact error:
/// `√λ/(1+λ) - 1 + (2/π) arctan √λ`.
pub fn cauchy_gap(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return domain(format!("scale ratio must be positive (got {lambda})"));
    }
    Ok(lambda.sqrt() / (1.0 + lambda) - 1.0 + FRAC_2_PI * lambda.sqrt().atan())
}

/// `(λ, Δ(λ))` at the maximum of [`cauchy_gap`] on `[1, 100]`.
pub fn cauchy_gap_maximizer() -> (f64, f64) {
    golden_section_max(
        |l| cauchy_gap(l).unwrap_or(f64::NEG_INFINITY),
        1.0,
        100.0,
        1e-10,
    )
}

/// Equal-prior error of two Gaussians sharing a (possibly singular)
/// covariance: `1/2 - (1/2) erf(‖(Σ⁺)^(1/2) Δμ‖ / (2√2))`.
pub fn mvn_equal_cov_pe(mu1: &[f64], mu2: &[f64], sigma: &SymMatrix) -> Result<f64> {
    if mu1.len() != mu2.len() || mu1.len() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            got: if mu1.len() != sigma.dim() {
                mu1.len()
            } else {
                mu2.len()
            },
        });
    }
    let dmu: Vec<f64> = mu2.iter().zip(mu1).map(|(a, b)| a - b).collect();
    let m = sigma.pseudo_inverse(PINV_REL_TOL).quad_form(&dmu)?.max(0.0);
    Ok(0.5 - 0.5 * erf(m.sqrt() / (2.0 * SQRT_2)))
}
