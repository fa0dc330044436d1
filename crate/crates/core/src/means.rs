//! Weighted quasi-arithmetic means `M_f(a, b; α) = f⁻¹(α f(a) + (1 - α) f(b))`.
//!
//! Weight `α` always sits on the first argument: `M_f(a, b; 1) = a` and
//! `M_f(a, b; 0) = b`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Strictly monotone generator of a quasi-arithmetic mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "p")]
pub enum MeanGenerator {
    /// `f(x) = x`
    Arithmetic,
    /// `f(x) = ln x`
    Geometric,
    /// `f(x) = 1/x`
    Harmonic,
    /// `f(x) = x^p`, `p ≠ 0`
    Power(f64),
}

impl MeanGenerator {
    pub fn validate(&self) -> Result<()> {
        match *self {
            MeanGenerator::Power(p) if p == 0.0 || !p.is_finite() => domain(format!(
                "power mean exponent must be finite and nonzero (got {p})"
            )),
            _ => Ok(()),
        }
    }

    /// The generator as a power exponent, `None` for the geometric mean.
    pub fn exponent(&self) -> Option<f64> {
        match *self {
            MeanGenerator::Arithmetic => Some(1.0),
            MeanGenerator::Geometric => None,
            MeanGenerator::Harmonic => Some(-1.0),
            MeanGenerator::Power(p) => Some(p),
        }
    }

    pub fn forward(&self, x: f64) -> f64 {
        match self.exponent() {
            None => x.ln(),
            Some(p) => x.powf(p),
        }
    }

    pub fn inverse(&self, y: f64) -> f64 {
        match self.exponent() {
            None => y.exp(),
            Some(p) => y.powf(1.0 / p),
        }
    }

    /// `ln M_f(e^la, e^lb; α)`. Arguments may be `-inf` (a zero density);
    /// `α` is not range-checked.
    pub fn log_weighted_mean(&self, la: f64, lb: f64, alpha: f64) -> f64 {
        if alpha == 1.0 {
            return la;
        }
        if alpha == 0.0 {
            return lb;
        }
        match self.exponent() {
            None => alpha * la + (1.0 - alpha) * lb,
            Some(p) => {
                let u = alpha.ln() + p * la;
                let v = (1.0 - alpha).ln() + p * lb;
                log_add_exp(u, v) / p
            }
        }
    }

    fn mean_unchecked(&self, a: f64, b: f64, alpha: f64) -> f64 {
        match self.exponent() {
            None => a.powf(alpha) * b.powf(1.0 - alpha),
            Some(_) if (0.0..=1.0).contains(&alpha) => {
                self.log_weighted_mean(a.ln(), b.ln(), alpha).exp()
            }
            // slight extrapolation for finite-difference stencils
            Some(p) => (alpha * a.powf(p) + (1.0 - alpha) * b.powf(p)).powf(1.0 / p),
        }
    }

    pub fn weighted_mean(&self, a: f64, b: f64, alpha: f64) -> Result<f64> {
        check_args(self, a, b, alpha)?;
        Ok(self.mean_unchecked(a, b, alpha))
    }

    /// `∂²/∂α² M_f(a, b; α)`. Closed forms for the geometric and harmonic
    /// means, a central difference with step `1e-4` otherwise.
    pub fn second_derivative_alpha(&self, a: f64, b: f64, alpha: f64) -> Result<f64> {
        check_args(self, a, b, alpha)?;
        Ok(match self {
            MeanGenerator::Geometric => (a / b).ln().powi(2) * self.mean_unchecked(a, b, alpha),
            MeanGenerator::Harmonic => {
                let den = alpha * b + (1.0 - alpha) * a;
                2.0 * a * b * (a - b).powi(2) / (den * den * den)
            }
            _ => finite_difference_second(|t| self.mean_unchecked(a, b, t), alpha, 1e-4),
        })
    }
}

fn check_args(g: &MeanGenerator, a: f64, b: f64, alpha: f64) -> Result<()> {
    g.validate()?;
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return domain(format!(
            "mean arguments must be positive and finite (got {a}, {b})"
        ));
    }
    if !(0.0..=1.0).contains(&alpha) {
        return domain(format!("alpha must lie in [0, 1] (got {alpha})"));
    }
    Ok(())
}

/// Second difference of `f` at `x`. At the ends of [0, 1] the stencil is
/// shifted inward.
pub(crate) fn finite_difference_second<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let c = x.clamp(h, 1.0 - h);
    (f(c + h) - 2.0 * f(c) + f(c - h)) / (h * h)
}

pub(crate) fn log_add_exp(u: f64, v: f64) -> f64 {
    let m = u.max(v);
    if m == f64::NEG_INFINITY {
        return m;
    }
    if m == f64::INFINITY {
        return m;
    }
    m + ((u - m).exp() + (v - m).exp()).ln()
}
