#![allow(dead_code)]

use bayes_bounds::{
    CauchyScale, Distribution, MultivariateGaussian, MultivariateT, PearsonVii, RandomStream,
    SymMatrix,
};

pub fn uniform(rng: &mut RandomStream, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.uniform()
}

/// A random symmetric positive definite matrix with eigenvalues of order one.
pub fn random_spd(rng: &mut RandomStream, d: usize) -> SymMatrix {
    let a: Vec<f64> = (0..d * d).map(|_| 0.6 * rng.normal()).collect();
    let mut m = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            let dot: f64 = (0..d).map(|k| a[i * d + k] * a[j * d + k]).sum();
            m[i * d + j] = dot + if i == j { 0.3 } else { 0.0 };
        }
    }
    SymMatrix::from_row_major(d, &m).unwrap()
}

pub fn random_mvn(rng: &mut RandomStream, d: usize) -> MultivariateGaussian {
    let mean = (0..d).map(|_| rng.normal()).collect();
    MultivariateGaussian::new(mean, random_spd(rng, d)).unwrap()
}

pub fn random_cauchy(rng: &mut RandomStream) -> CauchyScale {
    CauchyScale::new(10f64.powf(uniform(rng, -1.0, 1.0))).unwrap()
}

pub fn random_pearson_pair(rng: &mut RandomStream, d: usize) -> (PearsonVii, PearsonVii) {
    let lambda = 0.5 * d as f64 + uniform(rng, 1.0, 4.0);
    (
        PearsonVii::new(lambda, random_spd(rng, d)).unwrap(),
        PearsonVii::new(lambda, random_spd(rng, d)).unwrap(),
    )
}

pub fn random_mvt_pair(rng: &mut RandomStream, d: usize) -> (MultivariateT, MultivariateT) {
    let nu = uniform(rng, 1.0, 12.0);
    (
        MultivariateT::new(nu, random_spd(rng, d)).unwrap(),
        MultivariateT::new(nu, random_spd(rng, d)).unwrap(),
    )
}

/// The isotropic pair `(I, λI)` with `ν = 6`.
pub fn mvt_isotropic(d: usize, lambda: f64) -> (Distribution, Distribution) {
    (
        MultivariateT::new(6.0, SymMatrix::identity(d))
            .unwrap()
            .into(),
        MultivariateT::new(6.0, SymMatrix::scaled_identity(d, lambda))
            .unwrap()
            .into(),
    )
}

/// Rows `(d, P̂e, ρ*/2, α*, ρ/2)` of the published multivariate t experiment.
pub const TABLE1: [(usize, f64, f64, f64, f64); 6] = [
    (2, 0.3302, 0.4471817, 0.455, 0.4475742),
    (3, 0.2578, 0.3951277, 0.462, 0.3956298),
    (5, 0.16215, 0.2943599, 0.487, 0.2944589),
    (10, 0.06045, 0.1400655, 0.548, 0.141438),
    (15, 0.02845, 0.07442729, 0.592, 0.07841622),
    (20, 0.0167, 0.04396945, 0.625, 0.04945252),
];
