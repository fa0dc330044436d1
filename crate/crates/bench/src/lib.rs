//! Shared fixtures for the benchmarks.

use bayes_bounds::{Distribution, MultivariateT, SymMatrix};

/// The isotropic multivariate t pair `(I, λI)` with `ν = 6`, `λ = d + 1`.
pub fn mvt_pair(d: usize) -> (MultivariateT, MultivariateT) {
    let lambda = (d + 1) as f64;
    (
        MultivariateT::new(6.0, SymMatrix::identity(d)).expect("identity is positive definite"),
        MultivariateT::new(6.0, SymMatrix::scaled_identity(d, lambda))
            .expect("scaled identity is positive definite"),
    )
}

pub fn as_distributions(pair: &(MultivariateT, MultivariateT)) -> (Distribution, Distribution) {
    (pair.0.clone().into(), pair.1.clone().into())
}
