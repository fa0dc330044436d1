//! JSON description of a distribution.
//!
//! ```json
//! {"family": "gaussian1d", "mu": 0.0, "sigma": 1.0}
//! {"family": "cauchy", "scale": 10.0}
//! {"family": "mvn", "mean": [0.0, 0.0], "cov": [[1.0, 0.0], [0.0, 1.0]]}
//! {"family": "pearson7", "lambda": 2.0, "scale": [[1.0, 0.0], [0.0, 1.0]]}
//! {"family": "mvt", "nu": 6.0, "scale": [[1.0, 0.0], [0.0, 1.0]]}
//! ```
//!
//! Matrices are row-major: either an array of rows or one flat array of
//! `d * d` numbers.

use serde::{Deserialize, Serialize};

use super::{
    CauchyScale, Distribution, MultivariateGaussian, MultivariateT, PearsonVii, UnivariateGaussian,
};
use crate::error::{Error, Result};
use crate::linalg::SymMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixInput {
    Rows(Vec<Vec<f64>>),
    Flat(Vec<f64>),
}

impl MatrixInput {
    pub fn to_sym(&self) -> Result<SymMatrix> {
        match self {
            MatrixInput::Rows(rows) => SymMatrix::from_rows(rows),
            MatrixInput::Flat(flat) => {
                let d = (flat.len() as f64).sqrt().round() as usize;
                SymMatrix::from_row_major(d, flat)
            }
        }
    }
}

impl From<&SymMatrix> for MatrixInput {
    fn from(m: &SymMatrix) -> Self {
        MatrixInput::Rows(m.rows())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum DistributionConfig {
    #[serde(rename = "gaussian1d")]
    Gaussian1d {
        mu: f64,
        sigma: f64,
    },
    Cauchy {
        scale: f64,
    },
    Mvn {
        mean: Vec<f64>,
        cov: MatrixInput,
    },
    #[serde(rename = "pearson7")]
    Pearson7 {
        lambda: f64,
        scale: MatrixInput,
    },
    Mvt {
        nu: f64,
        scale: MatrixInput,
    },
}

impl DistributionConfig {
    pub fn build(&self) -> Result<Distribution> {
        Ok(match self {
            DistributionConfig::Gaussian1d { mu, sigma } => {
                UnivariateGaussian::new(*mu, *sigma)?.into()
            }
            DistributionConfig::Cauchy { scale } => CauchyScale::new(*scale)?.into(),
            DistributionConfig::Mvn { mean, cov } => {
                MultivariateGaussian::new(mean.clone(), cov.to_sym()?)?.into()
            }
            DistributionConfig::Pearson7 { lambda, scale } => {
                PearsonVii::new(*lambda, scale.to_sym()?)?.into()
            }
            DistributionConfig::Mvt { nu, scale } => {
                MultivariateT::new(*nu, scale.to_sym()?)?.into()
            }
        })
    }
}

impl TryFrom<&DistributionConfig> for Distribution {
    type Error = Error;

    fn try_from(c: &DistributionConfig) -> Result<Self> {
        c.build()
    }
}

impl From<&Distribution> for DistributionConfig {
    fn from(d: &Distribution) -> Self {
        match d {
            Distribution::Gaussian(g) => DistributionConfig::Gaussian1d {
                mu: g.mu(),
                sigma: g.sigma(),
            },
            Distribution::Cauchy(c) => DistributionConfig::Cauchy { scale: c.scale() },
            Distribution::Mvn(m) => DistributionConfig::Mvn {
                mean: m.mean().to_vec(),
                cov: m.cov().into(),
            },
            Distribution::PearsonVii(p) => DistributionConfig::Pearson7 {
                lambda: p.lambda(),
                scale: p.scale().into(),
            },
            Distribution::Mvt(t) => DistributionConfig::Mvt {
                nu: t.nu(),
                scale: t.scale().into(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        let docs = [
            (
                r#"{"family":"gaussian1d","mu":0.0,"sigma":1.0}"#,
                "gaussian1d",
                1,
            ),
            (r#"{"family":"cauchy","scale":10}"#, "cauchy", 1),
            (
                r#"{"family":"mvn","mean":[0,1],"cov":[[1,0.2],[0.2,2]]}"#,
                "mvn",
                2,
            ),
            (
                r#"{"family":"pearson7","lambda":2,"scale":[1,0,0,0,1,0,0,0,1]}"#,
                "pearson7",
                3,
            ),
            (r#"{"family":"mvt","nu":6,"scale":[[1,0],[0,3]]}"#, "mvt", 2),
        ];
        for (doc, family, dim) in docs {
            let cfg: DistributionConfig = serde_json::from_str(doc).unwrap();
            let d = cfg.build().unwrap();
            assert_eq!(d.family_name(), family);
            assert_eq!(d.dim(), dim);
            let back = serde_json::to_string(&DistributionConfig::from(&d)).unwrap();
            let again: DistributionConfig = serde_json::from_str(&back).unwrap();
            assert_eq!(again.build().unwrap().dim(), dim);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(serde_json::from_str::<DistributionConfig>(r#"{"family":"gamma","k":1}"#).is_err());
        assert!(serde_json::from_str::<DistributionConfig>(
            r#"{"family":"cauchy","scale":1,"loc":2}"#
        )
        .is_err());
        let bad: DistributionConfig =
            serde_json::from_str(r#"{"family":"mvt","nu":6,"scale":[[1,2],[0,1]]}"#).unwrap();
        assert!(bad.build().is_err());
    }
}
