//! Class-conditional distribution families.
//!
//! Density ratios anywhere in the crate are formed as
//! `exp(log_pdf(p2) - log_pdf(p1))`; heavy-tailed densities underflow
//! otherwise.

mod config;
pub mod rng;
pub mod special;

use std::f64::consts::PI;

pub use config::DistributionConfig;
pub use rng::RandomStream;
pub use special::{erf, erfc, ln_gamma};

use crate::error::{domain, Error, Result};
use crate::linalg::{Cholesky, SymMatrix};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnivariateGaussian {
    mu: f64,
    sigma: f64,
}

impl UnivariateGaussian {
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma.is_finite()) || !mu.is_finite() {
            return domain(format!(
                "gaussian needs finite mu and sigma > 0 (got {mu}, {sigma})"
            ));
        }
        Ok(Self { mu, sigma })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn log_pdf(&self, x: f64) -> f64 {
        let z = (x - self.mu) / self.sigma;
        -0.5 * z * z - self.sigma.ln() - 0.5 * LN_2PI
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.log_pdf(x).exp()
    }

    /// `Φ((x - μ)/σ)`, evaluated through `erfc` so the lower tail keeps its
    /// relative precision.
    pub fn cdf(&self, x: f64) -> f64 {
        0.5 * erfc(-(x - self.mu) / (self.sigma * std::f64::consts::SQRT_2))
    }
}

/// Zero-centred Cauchy density `s / (π (x² + s²))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyScale {
    scale: f64,
}

impl CauchyScale {
    pub fn new(scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return domain(format!("cauchy scale must be positive (got {scale})"));
        }
        Ok(Self { scale })
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn log_pdf(&self, x: f64) -> f64 {
        let s = self.scale;
        s.ln() - PI.ln() - (x * x + s * s).ln()
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let s = self.scale;
        s / (PI * (x * x + s * s))
    }

    pub fn cdf(&self, x: f64) -> f64 {
        (x / self.scale).atan() / PI + 0.5
    }
}

#[derive(Debug, Clone)]
pub struct MultivariateGaussian {
    mean: Vec<f64>,
    cov: SymMatrix,
    chol: Cholesky,
    log_norm: f64,
}

impl MultivariateGaussian {
    pub fn new(mean: Vec<f64>, cov: SymMatrix) -> Result<Self> {
        if mean.len() != cov.dim() {
            return Err(Error::DimensionMismatch {
                expected: cov.dim(),
                got: mean.len(),
            });
        }
        let chol = cov.cholesky()?;
        let d = mean.len() as f64;
        let log_norm = -0.5 * d * LN_2PI - 0.5 * chol.log_det();
        Ok(Self {
            mean,
            cov,
            chol,
            log_norm,
        })
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn cov(&self) -> &SymMatrix {
        &self.cov
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    fn log_pdf_unchecked(&self, x: &[f64], scratch: &mut [f64]) -> f64 {
        for ((s, xi), mi) in scratch.iter_mut().zip(x).zip(&self.mean) {
            *s = xi - mi;
        }
        self.chol.forward_solve(scratch);
        let q: f64 = scratch.iter().map(|v| v * v).sum();
        self.log_norm - 0.5 * q
    }
}

/// Centred Pearson type VII density
/// `c_d(λ) |Σ|^{-1/2} (1 + xᵀΣ⁻¹x)^{-λ}` with `λ > d/2`.
#[derive(Debug, Clone)]
pub struct PearsonVii {
    lambda: f64,
    scale: SymMatrix,
    chol: Cholesky,
    log_norm: f64,
}

impl PearsonVii {
    pub fn new(lambda: f64, scale: SymMatrix) -> Result<Self> {
        let d = scale.dim() as f64;
        if !(lambda > 0.5 * d) || !lambda.is_finite() {
            return domain(format!(
                "pearson VII needs lambda > d/2 = {} (got {lambda})",
                0.5 * d
            ));
        }
        let chol = scale.cholesky()?;
        let log_norm = Self::log_normalizer(scale.dim(), lambda) - 0.5 * chol.log_det();
        Ok(Self {
            lambda,
            scale,
            chol,
            log_norm,
        })
    }

    /// `ln c_d(λ) = ln Γ(λ) - ln Γ(λ - d/2) - (d/2) ln π`.
    pub fn log_normalizer(dim: usize, lambda: f64) -> f64 {
        let half_d = 0.5 * dim as f64;
        ln_gamma(lambda) - ln_gamma(lambda - half_d) - half_d * PI.ln()
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn scale(&self) -> &SymMatrix {
        &self.scale
    }

    pub fn dim(&self) -> usize {
        self.scale.dim()
    }

    fn log_pdf_unchecked(&self, x: &[f64], scratch: &mut [f64]) -> f64 {
        let q = self.chol.inv_quad_form(x, scratch);
        self.log_norm - self.lambda * q.ln_1p()
    }
}

/// Centred multivariate t with `ν` degrees of freedom and scale matrix `Σ`.
#[derive(Debug, Clone)]
pub struct MultivariateT {
    nu: f64,
    scale: SymMatrix,
    chol: Cholesky,
    log_norm: f64,
}

impl MultivariateT {
    pub fn new(nu: f64, scale: SymMatrix) -> Result<Self> {
        if !(nu >= 1.0) || !nu.is_finite() {
            return domain(format!("multivariate t needs nu >= 1 (got {nu})"));
        }
        let chol = scale.cholesky()?;
        let log_norm = Self::log_normalizer(scale.dim(), nu) - 0.5 * chol.log_det();
        Ok(Self {
            nu,
            scale,
            chol,
            log_norm,
        })
    }

    /// `ln c_{d,ν} = ln Γ((ν+d)/2) - ln Γ(ν/2) - (d/2) ln(νπ)`.
    pub fn log_normalizer(dim: usize, nu: f64) -> f64 {
        let d = dim as f64;
        ln_gamma(0.5 * (nu + d)) - ln_gamma(0.5 * nu) - 0.5 * d * (nu * PI).ln()
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn scale(&self) -> &SymMatrix {
        &self.scale
    }

    pub fn dim(&self) -> usize {
        self.scale.dim()
    }

    /// The exponent `t = -(ν + d)/2` of the density kernel.
    pub fn kernel_exponent(&self) -> f64 {
        -0.5 * (self.nu + self.dim() as f64)
    }

    fn log_pdf_unchecked(&self, x: &[f64], scratch: &mut [f64]) -> f64 {
        let q = self.chol.inv_quad_form(x, scratch);
        self.log_norm + self.kernel_exponent() * (q / self.nu).ln_1p()
    }
}

/// A class-conditional distribution.
#[derive(Debug, Clone)]
pub enum Distribution {
    Gaussian(UnivariateGaussian),
    Cauchy(CauchyScale),
    Mvn(MultivariateGaussian),
    PearsonVii(PearsonVii),
    Mvt(MultivariateT),
}

impl From<UnivariateGaussian> for Distribution {
    fn from(d: UnivariateGaussian) -> Self {
        Distribution::Gaussian(d)
    }
}

impl From<CauchyScale> for Distribution {
    fn from(d: CauchyScale) -> Self {
        Distribution::Cauchy(d)
    }
}

impl From<MultivariateGaussian> for Distribution {
    fn from(d: MultivariateGaussian) -> Self {
        Distribution::Mvn(d)
    }
}

impl From<PearsonVii> for Distribution {
    fn from(d: PearsonVii) -> Self {
        Distribution::PearsonVii(d)
    }
}

impl From<MultivariateT> for Distribution {
    fn from(d: MultivariateT) -> Self {
        Distribution::Mvt(d)
    }
}

/// Sampled points, stored row-major with `dim` coordinates per point.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples {
    pub dim: usize,
    pub data: Vec<f64>,
}

impl Samples {
    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn iter(&self) -> std::slice::Chunks<'_, f64> {
        self.data.chunks(self.dim)
    }
}

impl Distribution {
    pub fn family_name(&self) -> &'static str {
        match self {
            Distribution::Gaussian(_) => "gaussian1d",
            Distribution::Cauchy(_) => "cauchy",
            Distribution::Mvn(_) => "mvn",
            Distribution::PearsonVii(_) => "pearson7",
            Distribution::Mvt(_) => "mvt",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Distribution::Gaussian(_) | Distribution::Cauchy(_) => 1,
            Distribution::Mvn(d) => d.dim(),
            Distribution::PearsonVii(d) => d.dim(),
            Distribution::Mvt(d) => d.dim(),
        }
    }

    pub fn is_univariate(&self) -> bool {
        matches!(self, Distribution::Gaussian(_) | Distribution::Cauchy(_))
    }

    /// A representative location and per-axis spread, used to place
    /// quadrature grids and proposal mixtures.
    pub(crate) fn center_and_spread(&self) -> (Vec<f64>, Vec<f64>) {
        match self {
            Distribution::Gaussian(g) => (vec![g.mu], vec![g.sigma]),
            Distribution::Cauchy(c) => (vec![0.0], vec![c.scale]),
            Distribution::Mvn(m) => (
                m.mean.clone(),
                (0..m.dim()).map(|i| m.cov.get(i, i).sqrt()).collect(),
            ),
            Distribution::PearsonVii(p) => (
                vec![0.0; p.dim()],
                (0..p.dim()).map(|i| p.scale.get(i, i).sqrt()).collect(),
            ),
            Distribution::Mvt(t) => (
                vec![0.0; t.dim()],
                (0..t.dim()).map(|i| t.scale.get(i, i).sqrt()).collect(),
            ),
        }
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }

    pub fn log_pdf(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x.len())?;
        let mut scratch = vec![0.0; x.len()];
        Ok(self.log_pdf_with(x, &mut scratch))
    }

    pub fn pdf(&self, x: &[f64]) -> Result<f64> {
        Ok(self.log_pdf(x)?.exp())
    }

    /// Log-density without the dimension check. `scratch` must have length
    /// `dim()`.
    pub(crate) fn log_pdf_with(&self, x: &[f64], scratch: &mut [f64]) -> f64 {
        match self {
            Distribution::Gaussian(g) => g.log_pdf(x[0]),
            Distribution::Cauchy(c) => c.log_pdf(x[0]),
            Distribution::Mvn(m) => m.log_pdf_unchecked(x, scratch),
            Distribution::PearsonVii(p) => p.log_pdf_unchecked(x, scratch),
            Distribution::Mvt(t) => t.log_pdf_unchecked(x, scratch),
        }
    }

    /// CDF of a univariate family.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        match self {
            Distribution::Gaussian(g) => Ok(g.cdf(x)),
            Distribution::Cauchy(c) => Ok(c.cdf(x)),
            other => Err(Error::Unsupported(format!(
                "no CDF for multivariate family {}",
                other.family_name()
            ))),
        }
    }

    /// Draws one variate into `out` (length `dim()`); `z` is scratch of the
    /// same length.
    pub(crate) fn sample_into(&self, rng: &mut RandomStream, out: &mut [f64], z: &mut [f64]) {
        match self {
            Distribution::Gaussian(g) => out[0] = g.mu + g.sigma * rng.normal(),
            Distribution::Cauchy(c) => {
                out[0] = c.scale * (PI * (rng.uniform() - 0.5)).tan();
            }
            Distribution::Mvn(m) => {
                z.iter_mut().for_each(|v| *v = rng.normal());
                m.chol.mul_lower(z, out);
                out.iter_mut().zip(&m.mean).for_each(|(o, mu)| *o += mu);
            }
            Distribution::Mvt(t) => {
                z.iter_mut().for_each(|v| *v = rng.normal());
                t.chol.mul_lower(z, out);
                let w = rng.chi_square(t.nu);
                let k = (t.nu / w).sqrt();
                out.iter_mut().for_each(|o| *o *= k);
            }
            Distribution::PearsonVii(p) => {
                // Pearson VII(λ, Σ) is a t with ν = 2λ - d and scale Σ/ν,
                // so x = L z / sqrt(W) with W ~ χ²(ν).
                let nu = 2.0 * p.lambda - p.dim() as f64;
                z.iter_mut().for_each(|v| *v = rng.normal());
                p.chol.mul_lower(z, out);
                let k = 1.0 / rng.chi_square(nu).sqrt();
                out.iter_mut().for_each(|o| *o *= k);
            }
        }
    }

    pub fn sample(&self, rng: &mut RandomStream, n: usize) -> Samples {
        let d = self.dim();
        let mut data = vec![0.0; n * d];
        let mut z = vec![0.0; d];
        for chunk in data.chunks_mut(d) {
            self.sample_into(rng, chunk, &mut z);
        }
        Samples { dim: d, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_2d, integrate_line, QuadConfig};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn mvt2(nu: f64, s: &[f64]) -> Distribution {
        MultivariateT::new(nu, SymMatrix::from_row_major(2, s).unwrap())
            .unwrap()
            .into()
    }

    #[test]
    fn pdf_examples() {
        let g: Distribution = UnivariateGaussian::new(0.0, 1.0).unwrap().into();
        assert_relative_eq!(
            g.pdf(&[0.0]).unwrap(),
            0.398_942_280_401_432_7,
            max_relative = 1e-14
        );
        for &s in &[0.5, 1.0, 3.0] {
            let c: Distribution = CauchyScale::new(s).unwrap().into();
            assert_relative_eq!(c.pdf(&[0.0]).unwrap(), 1.0 / (PI * s), max_relative = 1e-14);
        }
        let t = mvt2(6.0, &[1.0, 0.0, 0.0, 1.0]);
        assert_relative_eq!(
            t.pdf(&[0.0, 0.0]).unwrap(),
            1.0 / (2.0 * PI),
            max_relative = 1e-13
        );
        assert!(matches!(
            t.pdf(&[0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mvt_normalizes_numerically() {
        let t = mvt2(6.0, &[1.0, 0.0, 0.0, 1.0]);
        let cfg = QuadConfig::default();
        let mut scratch = vec![0.0; 2];
        let total = integrate_2d(
            |x| t.log_pdf_with(x, &mut scratch).exp(),
            [0.0, 0.0],
            [1.0, 1.0],
            &cfg,
        )
        .unwrap()
        .value;
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-6);
    }

    #[test]
    fn cdf_examples() {
        let c1: Distribution = CauchyScale::new(1.0).unwrap().into();
        assert_eq!(c1.cdf(0.0).unwrap(), 0.5);
        let c2: Distribution = CauchyScale::new(2.0).unwrap().into();
        assert_abs_diff_eq!(c2.cdf(2.0).unwrap(), 0.75, epsilon = 1e-15);
        let g: Distribution = UnivariateGaussian::new(0.0, 1.0).unwrap().into();
        // oracle: ∫_{-∞}^{0.5} φ by adaptive quadrature
        let oracle = 0.5
            + integrate_line(
                |x| {
                    if (0.0..=0.5).contains(&x) {
                        g.pdf(&[x]).unwrap()
                    } else {
                        0.0
                    }
                },
                0.25,
                0.25,
                &QuadConfig::default(),
            )
            .unwrap()
            .value;
        assert_abs_diff_eq!(oracle, 0.691_462_461_274_013_1, epsilon = 1e-9);
        assert_abs_diff_eq!(
            g.cdf(0.5).unwrap(),
            0.691_462_461_274_013_1,
            epsilon = 1e-14
        );
        assert!(matches!(
            mvt2(6.0, &[1.0, 0.0, 0.0, 1.0]).cdf(0.0),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn univariate_families_normalize_and_cdf_matches_pdf() {
        let cfg = QuadConfig::default();
        let fams: Vec<Distribution> = vec![
            UnivariateGaussian::new(1.5, 0.3).unwrap().into(),
            UnivariateGaussian::new(-4.0, 7.0).unwrap().into(),
            CauchyScale::new(0.2).unwrap().into(),
            CauchyScale::new(25.0).unwrap().into(),
        ];
        let mut s = RandomStream::new(5);
        for d in &fams {
            let (c, w) = d.center_and_spread();
            let total = integrate_line(|x| d.pdf(&[x]).unwrap(), c[0], w[0], &cfg)
                .unwrap()
                .value;
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-6);
            assert_eq!(d.cdf(f64::NEG_INFINITY).unwrap(), 0.0);
            assert_eq!(d.cdf(f64::INFINITY).unwrap(), 1.0);
            for _ in 0..100 {
                let x = c[0] + w[0] * 4.0 * (s.uniform() - 0.5);
                let h = 1e-5 * w[0];
                let num = (d.cdf(x + h).unwrap() - d.cdf(x - h).unwrap()) / (2.0 * h);
                assert_abs_diff_eq!(num, d.pdf(&[x]).unwrap(), epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn multivariate_families_normalize_in_2d() {
        let cfg = QuadConfig::default();
        let fams: Vec<Distribution> = vec![
            MultivariateGaussian::new(
                vec![0.3, -1.0],
                SymMatrix::from_row_major(2, &[2.0, 0.6, 0.6, 0.5]).unwrap(),
            )
            .unwrap()
            .into(),
            PearsonVii::new(
                2.5,
                SymMatrix::from_row_major(2, &[1.0, -0.3, -0.3, 2.0]).unwrap(),
            )
            .unwrap()
            .into(),
            mvt2(3.0, &[4.0, 1.0, 1.0, 1.0]),
        ];
        for d in &fams {
            let (c, w) = d.center_and_spread();
            let mut scratch = vec![0.0; 2];
            let total = integrate_2d(
                |x| d.log_pdf_with(x, &mut scratch).exp(),
                [c[0], c[1]],
                [w[0], w[1]],
                &cfg,
            )
            .unwrap()
            .value;
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let t = mvt2(6.0, &[1.0, 0.2, 0.2, 1.0]);
        let a = t.sample(&mut RandomStream::new(9), 50);
        let b = t.sample(&mut RandomStream::new(9), 50);
        assert_eq!(a, b);
    }

    #[test]
    fn gaussian_sample_mean_within_clt_bound() {
        let g: Distribution = UnivariateGaussian::new(0.0, 1.0).unwrap().into();
        let n = 100_000;
        let s = g.sample(&mut RandomStream::new(123), n);
        let mean = s.data.iter().sum::<f64>() / n as f64;
        assert!(mean.abs() < 4.0 / (n as f64).sqrt());
    }

    #[test]
    fn mvt_sample_covariance() {
        let t = mvt2(6.0, &[1.0, 0.0, 0.0, 1.0]);
        let n = 100_000;
        let s = t.sample(&mut RandomStream::new(77), n);
        let mut cov = [0.0; 4];
        for p in s.iter() {
            cov[0] += p[0] * p[0];
            cov[1] += p[0] * p[1];
            cov[3] += p[1] * p[1];
        }
        let cov: Vec<f64> = cov.iter().map(|c| c / n as f64).collect();
        assert!((cov[0] / 1.5 - 1.0).abs() < 0.1);
        assert!((cov[3] / 1.5 - 1.0).abs() < 0.1);
        assert!(cov[1].abs() < 0.15);
    }

    /// Histogram χ² test of the first sampled coordinate against masses
    /// integrated from the 2D density.
    fn marginal_chi_square(d: &Distribution, seed: u64) -> (f64, usize) {
        let cfg = QuadConfig::default();
        let n = 50_000;
        let s = d.sample(&mut RandomStream::new(seed), n);
        // bins on the first coordinate, expected masses from the 2D density
        let edges = [
            -f64::INFINITY,
            -3.0,
            -1.5,
            -0.75,
            -0.25,
            0.25,
            0.75,
            1.5,
            3.0,
            f64::INFINITY,
        ];
        let mut counts = vec![0usize; edges.len() - 1];
        for p in s.iter() {
            let k = edges
                .windows(2)
                .position(|e| p[0] > e[0] && p[0] <= e[1])
                .unwrap();
            counts[k] += 1;
        }
        let mut stat = 0.0;
        for (k, e) in edges.windows(2).enumerate() {
            let mut scratch = vec![0.0; 2];
            let mass = integrate_2d(
                |x| {
                    if x[0] > e[0] && x[0] <= e[1] {
                        d.log_pdf_with(x, &mut scratch).exp()
                    } else {
                        0.0
                    }
                },
                [0.0, 0.0],
                [1.0, 1.0],
                &cfg,
            )
            .unwrap()
            .value;
            let expected = mass * n as f64;
            stat += (counts[k] as f64 - expected).powi(2) / expected;
        }
        (stat, edges.len() - 2)
    }

    #[test]
    fn pearson_sampler_matches_density() {
        // 8 degrees of freedom: the 0.999 quantile of χ²(8) is 26.1
        for (lambda, seed) in [(1.6, 1u64), (3.0, 2), (7.5, 3)] {
            let p: Distribution = PearsonVii::new(
                lambda,
                SymMatrix::from_row_major(2, &[1.0, 0.3, 0.3, 0.8]).unwrap(),
            )
            .unwrap()
            .into();
            let (stat, dof) = marginal_chi_square(&p, seed);
            assert_eq!(dof, 8);
            assert!(stat < 26.1, "lambda {lambda}: chi2 {stat}");
        }
        let t = mvt2(6.0, &[1.0, 0.3, 0.3, 0.8]);
        let (stat, _) = marginal_chi_square(&t, 4);
        assert!(stat < 26.1, "mvt chi2 {stat}");
    }

    proptest! {
        #[test]
        fn cauchy_is_a_scale_family(s in 0.01f64..100.0, x in -1e3f64..1e3) {
            let c = CauchyScale::new(s).unwrap();
            let std = CauchyScale::new(1.0).unwrap();
            let lhs = c.pdf(x);
            let rhs = std.pdf(x / s) / s;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300));
        }

        #[test]
        fn log_pdf_consistent_with_pdf(x in -20.0f64..20.0, y in -20.0f64..20.0) {
            let fams: Vec<Distribution> = vec![
                UnivariateGaussian::new(0.5, 2.0).unwrap().into(),
                CauchyScale::new(3.0).unwrap().into(),
            ];
            for d in &fams {
                let p = d.pdf(&[x]).unwrap();
                if p > 1e-300 {
                    prop_assert!((d.log_pdf(&[x]).unwrap() - p.ln()).abs() < 1e-10);
                }
            }
            let t = mvt2(4.0, &[2.0, 0.5, 0.5, 1.0]);
            let p = t.pdf(&[x, y]).unwrap();
            prop_assert!((t.log_pdf(&[x, y]).unwrap() - p.ln()).abs() < 1e-10);
        }
    }

    #[test]
    fn constructors_validate() {
        assert!(UnivariateGaussian::new(0.0, 0.0).is_err());
        assert!(CauchyScale::new(-1.0).is_err());
        assert!(PearsonVii::new(1.0, SymMatrix::identity(2)).is_err());
        assert!(MultivariateT::new(0.5, SymMatrix::identity(2)).is_err());
        assert!(MultivariateGaussian::new(vec![0.0], SymMatrix::identity(2)).is_err());
        assert!(matches!(
            MultivariateT::new(3.0, SymMatrix::diag(&[1.0, 0.0])),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }
}
