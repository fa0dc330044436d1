use bayes_bounds::bounds::{
    chernoff_optimize, closed_form_affinity, default_generator, rho_numeric, AffinityResult,
    ChernoffOptions, ChernoffResult, NumericConfig,
};
use bayes_bounds::exact::{
    bayes_error, cauchy_gap, cauchy_gap_maximizer, cauchy_pe, derived_weights, mvn_equal_cov_pe,
    scaled_tv,
};
use bayes_bounds::montecarlo::{convergence_table, estimate_pe, estimate_tv};
use bayes_bounds::{
    Distribution, Estimate, MeanGenerator, MultivariateT, SymMatrix, UnivariateGaussian,
};

use crate::error::CliError;
use crate::output::Table;
use crate::scenario::Scenario;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaChoice {
    Value(f64),
    Chernoff,
    Bhattacharyya,
}

pub fn parse_alpha(s: &str) -> Result<AlphaChoice, String> {
    match s {
        "chernoff" => Ok(AlphaChoice::Chernoff),
        "bhattacharyya" => Ok(AlphaChoice::Bhattacharyya),
        _ => {
            let a: f64 = s.parse().map_err(|_| {
                format!("expected a number in [0, 1], `chernoff` or `bhattacharyya` (got `{s}`)")
            })?;
            if !(0.0..=1.0).contains(&a) {
                return Err(format!("alpha must lie in [0, 1] (got {a})"));
            }
            Ok(AlphaChoice::Value(a))
        }
    }
}

/// `arithmetic`, `geometric`, `harmonic` or `power:<p>`.
pub fn parse_generator(s: &str) -> Result<MeanGenerator, String> {
    let g = match s {
        "arithmetic" => MeanGenerator::Arithmetic,
        "geometric" => MeanGenerator::Geometric,
        "harmonic" => MeanGenerator::Harmonic,
        _ => {
            let p = s.strip_prefix("power:").ok_or_else(|| {
                format!("unknown generator `{s}` (arithmetic, geometric, harmonic, power:<p>)")
            })?;
            MeanGenerator::Power(p.parse().map_err(|_| format!("bad power exponent `{p}`"))?)
        }
    };
    g.validate().map_err(|e| e.to_string())?;
    Ok(g)
}

pub fn generator_name(g: MeanGenerator) -> String {
    match g {
        MeanGenerator::Arithmetic => "arithmetic".into(),
        MeanGenerator::Geometric => "geometric".into(),
        MeanGenerator::Harmonic => "harmonic".into(),
        MeanGenerator::Power(p) => format!("power:{p}"),
    }
}

pub struct BoundArgs {
    pub alpha: AlphaChoice,
    pub numeric: bool,
    pub generator: Option<MeanGenerator>,
    pub n: usize,
    pub seed: u64,
}

pub fn bound(s: &Scenario, args: &BoundArgs) -> Result<Table, CliError> {
    let family_default = default_generator(&s.p1);
    let generator = args.generator.unwrap_or(family_default);
    let mut bound_at: Box<dyn FnMut(f64) -> bayes_bounds::Result<AffinityResult>> = if args.numeric
    {
        let cfg = NumericConfig {
            samples: args.n,
            seed: args.seed,
            ..NumericConfig::default()
        };
        let (p1, p2, w1, w2) = (s.p1.clone(), s.p2.clone(), s.w1, s.w2);
        Box::new(move |alpha| {
            let rho = rho_numeric(&p1, &p2, 1.0, 1.0, generator, alpha, &cfg)?.value;
            // Every quasi-arithmetic mean used here is homogeneous, so equal
            // priors only halve the affinity.
            let pe_bound = if w1 == w2 {
                w1 * rho
            } else {
                rho_numeric(&p1, &p2, w1, w2, generator, alpha, &cfg)?.value
            };
            Ok(AffinityResult {
                alpha,
                rho,
                pe_bound,
            })
        })
    } else {
        if generator != family_default {
            return Err(CliError::Unsupported(format!(
                "the closed-form {} bound uses the {} generator; pass --numeric to use {}",
                s.p1.family_name(),
                generator_name(family_default),
                generator_name(generator)
            )));
        }
        let (p1, p2, w1, w2) = (s.p1.clone(), s.p2.clone(), s.w1, s.w2);
        closed_form_affinity(&p1, &p2, w1, w2, 0.5)?;
        Box::new(move |alpha| closed_form_affinity(&p1, &p2, w1, w2, alpha))
    };
    match args.alpha {
        AlphaChoice::Value(a) => Ok(affinity_table(&bound_at(a)?)),
        AlphaChoice::Bhattacharyya => Ok(affinity_table(&bound_at(0.5)?)),
        AlphaChoice::Chernoff => Ok(chernoff_table(&chernoff_optimize(
            bound_at,
            &ChernoffOptions::default(),
        )?)),
    }
}

fn affinity_table(r: &AffinityResult) -> Table {
    let mut t = Table::new(&["alpha", "rho", "pe_bound"]);
    t.push(vec![r.alpha.into(), r.rho.into(), r.pe_bound.into()]);
    t
}

fn chernoff_table(r: &ChernoffResult) -> Table {
    let mut t = Table::new(&["alpha_star", "rho_star", "pe_bound", "divergence"]);
    t.push(vec![
        r.alpha_star.into(),
        r.rho_star.into(),
        r.pe_bound.into(),
        r.divergence.into(),
    ]);
    t
}

/// A one-dimensional Gaussian given in multivariate form is treated as univariate.
fn univariate_view(p: &Distribution) -> Option<Distribution> {
    match p {
        Distribution::Gaussian(_) | Distribution::Cauchy(_) => Some(p.clone()),
        Distribution::Mvn(m) if m.dim() == 1 => {
            UnivariateGaussian::new(m.mean()[0], m.cov().get(0, 0).sqrt())
                .ok()
                .map(Into::into)
        }
        _ => None,
    }
}

fn same_family(p: &Distribution, q: &Distribution) -> bool {
    std::mem::discriminant(p) == std::mem::discriminant(q)
}

pub fn exact(s: &Scenario) -> Result<Table, CliError> {
    let (tv, be, pe) = match (univariate_view(&s.p1), univariate_view(&s.p2)) {
        (Some(p1), Some(p2)) if same_family(&p1, &p2) => {
            let tv = scaled_tv(1.0, &p1, 1.0, &p2)?;
            let (a1, a2) = derived_weights(&s.cost);
            let tv_costs = if a1 == 0.0 || a2 == 0.0 {
                0.5 * (a1 + a2)
            } else {
                scaled_tv(a1, &p1, a2, &p2)?
            };
            let pe = 0.5 - scaled_tv(s.w1, &p1, s.w2, &p2)?;
            (tv, bayes_error(&s.cost, tv_costs), pe)
        }
        _ => match (&s.p1, &s.p2) {
            (Distribution::Mvn(a), Distribution::Mvn(b)) if a.cov() == b.cov() => {
                if s.w1 != s.w2 || !s.is_error_model() {
                    return Err(CliError::Unsupported(
                        "the equal-covariance gaussian formula needs equal priors and the error cost model".into(),
                    ));
                }
                let pe = mvn_equal_cov_pe(a.mean(), b.mean(), a.cov())?;
                (1.0 - 2.0 * pe, pe, pe)
            }
            _ => {
                return Err(CliError::Unsupported(format!(
                    "no exact path for a {} / {} pair; use `estimate`",
                    s.p1.family_name(),
                    s.p2.family_name()
                )))
            }
        },
    };
    let mut t = Table::new(&["tv", "bayes_error", "pe"]);
    t.push(vec![tv.into(), be.into(), pe.into()]);
    Ok(t)
}

fn estimate_row(t: &mut Table, quantity: &str, e: &Estimate) {
    t.push(vec![
        quantity.into(),
        e.value.into(),
        e.std_error.into(),
        e.ci95.0.into(),
        e.ci95.1.into(),
        e.n.into(),
        e.seed.into(),
    ]);
}

pub fn estimate(s: &Scenario, n: usize, seed: u64) -> Result<Table, CliError> {
    let mut t = Table::new(&[
        "quantity",
        "value",
        "std_error",
        "ci_low",
        "ci_high",
        "n",
        "seed",
    ]);
    estimate_row(&mut t, "tv", &estimate_tv(&s.p1, &s.p2, n, seed)?);
    estimate_row(
        &mut t,
        "pe",
        &estimate_pe(&s.p1, &s.p2, s.w1, s.w2, n, seed)?,
    );
    Ok(t)
}

pub fn convergence(s: &Scenario, n_list: &[usize], seed: u64) -> Result<Table, CliError> {
    let mut t = Table::new(&["n", "value", "std_error", "ci_low", "ci_high"]);
    for (n, e) in convergence_table(&s.p1, &s.p2, n_list, seed)? {
        t.push(vec![
            n.into(),
            e.value.into(),
            e.std_error.into(),
            e.ci95.0.into(),
            e.ci95.1.into(),
        ]);
    }
    Ok(t)
}

pub const TABLE1_DIMENSIONS: [usize; 6] = [2, 3, 5, 10, 15, 20];

pub fn table1(n: usize, seed: u64) -> Result<Table, CliError> {
    let mut t = Table::new(&[
        "d",
        "lambda",
        "pe_hat",
        "chernoff_bound",
        "alpha_star",
        "bhattacharyya_bound",
    ]);
    for d in TABLE1_DIMENSIONS {
        let lambda = (d + 1) as f64;
        let p = MultivariateT::new(6.0, SymMatrix::identity(d))?;
        let q = MultivariateT::new(6.0, SymMatrix::scaled_identity(d, lambda))?;
        let (dp, dq): (Distribution, Distribution) = (p.clone().into(), q.clone().into());
        let pe = estimate_pe(&dp, &dq, 0.5, 0.5, n, seed)?;
        let opt = chernoff_optimize(
            |a| bayes_bounds::bounds::mvt_rho_alpha(&p, &q, a),
            &ChernoffOptions::default(),
        )?;
        let half = bayes_bounds::bounds::mvt_rho_alpha(&p, &q, 0.5)?;
        t.push(vec![
            d.into(),
            lambda.into(),
            pe.value.into(),
            opt.pe_bound.into(),
            opt.alpha_star.into(),
            half.pe_bound.into(),
        ]);
    }
    Ok(t)
}

pub fn gap(lambda_max: f64, steps: usize) -> Result<Table, CliError> {
    if lambda_max.is_nan() || lambda_max <= 1.0 || !lambda_max.is_finite() {
        return Err(CliError::Parse(format!(
            "--lambda-max must exceed 1 (got {lambda_max})"
        )));
    }
    if steps == 0 {
        return Err(CliError::Parse("--steps must be positive".into()));
    }
    let mut t = Table::new(&["kind", "lambda", "pe", "bhattacharyya", "gap"]);
    let row = |t: &mut Table, kind: &str, lambda: f64| -> Result<(), CliError> {
        let pe = cauchy_pe(lambda)?;
        let gap = cauchy_gap(lambda)?;
        t.push(vec![
            kind.into(),
            lambda.into(),
            pe.into(),
            (pe + gap).into(),
            gap.into(),
        ]);
        Ok(())
    };
    for i in 0..=steps {
        let lambda = if i == steps {
            lambda_max
        } else {
            1.0 + (lambda_max - 1.0) * i as f64 / steps as f64
        };
        row(&mut t, "sample", lambda)?;
    }
    let (lambda_star, _) = cauchy_gap_maximizer();
    row(&mut t, "maximizer", lambda_star)?;
    Ok(t)
}
