//! Bayes error, total variation and generalized Bhattacharyya-type upper
//! bounds for pairs of class-conditional densities.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod distributions;
pub mod error;
pub mod exact;
pub mod linalg;
pub mod means;
pub mod montecarlo;
pub mod quadrature;
pub mod search;

pub use bounds::{AffinityResult, ChernoffOptions, ChernoffResult, NumericConfig};
pub use distributions::{
    CauchyScale, Distribution, DistributionConfig, MultivariateGaussian, MultivariateT, PearsonVii,
    RandomStream, UnivariateGaussian,
};
pub use error::{Error, Result};
pub use exact::{CostModel, CrossingSet};
pub use linalg::SymMatrix;
pub use means::MeanGenerator;
pub use montecarlo::Estimate;
