//! Scenario files: two class-conditional densities, priors and costs.
//!
//! ```json
//! {
//!   "p1": {"family": "cauchy", "scale": 10},
//!   "p2": {"family": "cauchy", "scale": 50},
//!   "priors": [0.5, 0.5],
//!   "cost": [[0, 1], [1, 0]]
//! }
//! ```

use std::path::Path;

use bayes_bounds::{CostModel, Distribution, DistributionConfig};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub p1: DistributionConfig,
    pub p2: DistributionConfig,
    #[serde(default = "equal_priors")]
    pub priors: [f64; 2],
    #[serde(default)]
    pub cost: Option<[[f64; 2]; 2]>,
}

fn equal_priors() -> [f64; 2] {
    [0.5, 0.5]
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub p1: Distribution,
    pub p2: Distribution,
    pub w1: f64,
    pub w2: f64,
    pub cost: CostModel,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: ScenarioFile =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let p1 = file
            .p1
            .build()
            .map_err(|e| CliError::Parse(format!("p1: {e}")))?;
        let p2 = file
            .p2
            .build()
            .map_err(|e| CliError::Parse(format!("p2: {e}")))?;
        if p1.dim() != p2.dim() {
            return Err(CliError::Parse(format!(
                "p1 has dimension {} but p2 has dimension {}",
                p1.dim(),
                p2.dim()
            )));
        }
        let [w1, w2] = file.priors;
        let costs = file.cost.unwrap_or([[0.0, 1.0], [1.0, 0.0]]);
        let cost = CostModel::new(costs, w1, w2).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok(Self {
            p1,
            p2,
            w1,
            w2,
            cost,
        })
    }

    pub fn is_error_model(&self) -> bool {
        let c = &self.cost;
        c.c11 == 0.0 && c.c22 == 0.0 && c.c12 == 1.0 && c.c21 == 1.0
    }
}
