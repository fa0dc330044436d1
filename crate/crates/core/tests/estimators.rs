mod common;

use bayes_bounds::bounds::{chernoff_optimize, mvt_rho_alpha, ChernoffOptions};
use bayes_bounds::exact::{cauchy_tv, exact_pe};
use bayes_bounds::montecarlo::{convergence_table, estimate_pe, estimate_pe_via_tv, estimate_tv};
use bayes_bounds::{CauchyScale, Distribution, MultivariateT, SymMatrix};
use common::{mvt_isotropic, TABLE1};
use rayon::prelude::*;

/// `TV(I, 10 I)` for the bivariate t with `ν = 6`, from radial quadrature.
const TV_MVT_NU6_SCALE10: f64 = 0.626_791_8;

fn cauchy(s: f64) -> Distribution {
    CauchyScale::new(s).unwrap().into()
}

#[test]
fn tv_estimator_is_unbiased_on_cauchy() {
    let (p, q) = (cauchy(1.0), cauchy(5.0));
    let exact = cauchy_tv(1.0, 5.0).unwrap();
    let runs: Vec<_> = (0..200u64)
        .into_par_iter()
        .map(|s| estimate_tv(&p, &q, 2000, s).unwrap())
        .collect();
    let mean = runs.iter().map(|e| e.value).sum::<f64>() / runs.len() as f64;
    let pooled = (runs.iter().map(|e| e.std_error.powi(2)).sum::<f64>()).sqrt() / runs.len() as f64;
    assert!(
        (mean - exact).abs() < 3.0 * pooled,
        "mean {mean} vs {exact} (pooled SE {pooled})"
    );
}

#[test]
fn ci95_is_calibrated() {
    let (p, q) = (cauchy(2.0), cauchy(7.0));
    let exact = cauchy_tv(2.0, 7.0).unwrap();
    let covered = (0..200u64)
        .into_par_iter()
        .filter(|s| estimate_tv(&p, &q, 5000, 1000 + s).unwrap().contains(exact))
        .count();
    assert!((176..=198).contains(&covered), "coverage {covered}/200");
}

#[test]
fn pe_paths_agree_and_match_exact() {
    let (p, q) = (cauchy(10.0), cauchy(50.0));
    let exact = exact_pe(&p, &q, 0.5, 0.5).unwrap();
    let a = estimate_pe(&p, &q, 0.5, 0.5, 100_000, 0).unwrap();
    let b = estimate_pe_via_tv(&p, &q, 100_000, 0).unwrap();
    assert!((a.value - 0.2677).abs() < 0.005);
    assert!((a.value - exact).abs() < 3.0 * a.std_error);
    assert!((b.value - exact).abs() < 3.0 * b.std_error);
}

#[test]
fn unequal_priors_match_exact() {
    let (p, q) = (cauchy(1.0), cauchy(4.0));
    let exact = exact_pe(&p, &q, 0.25, 0.75).unwrap();
    let e = estimate_pe(&p, &q, 0.25, 0.75, 200_000, 3).unwrap();
    assert!(
        (e.value - exact).abs() < 3.0 * e.std_error,
        "{} vs {exact}",
        e.value
    );
}

#[test]
fn mvt_pe_matches_published_row() {
    let (p, q) = mvt_isotropic(2, 3.0);
    let e = estimate_pe(&p, &q, 0.5, 0.5, 10_000, 0).unwrap();
    assert!((e.value - 0.3302).abs() < 0.02, "{}", e.value);
}

#[test]
fn mvt_tv_matches_quadrature() {
    let (p, q) = mvt_isotropic(2, 10.0);
    let e = estimate_tv(&p, &q, 100_000, 7).unwrap();
    assert!(
        (e.value - TV_MVT_NU6_SCALE10).abs() < 4.0 * e.std_error,
        "{} ± {}",
        e.value,
        e.std_error
    );
}

#[test]
fn convergence_table_shrinks() {
    let (p, q) = mvt_isotropic(2, 10.0);
    let table = convergence_table(&p, &q, &[100, 1000, 10_000, 100_000], 0).unwrap();
    assert_eq!(table.len(), 4);
    assert!(table.first().unwrap().1.std_error > table.last().unwrap().1.std_error);
    let last = table.last().unwrap().1;
    assert!((last.value - TV_MVT_NU6_SCALE10).abs() < 4.0 * last.std_error);
}

#[test]
fn chernoff_chain_over_table_rows() {
    for &(d, ..) in &TABLE1 {
        let (p, q) = mvt_isotropic(d, (d + 1) as f64);
        let e = estimate_pe(&p, &q, 0.5, 0.5, 10_000, 1).unwrap();
        let t1 = MultivariateT::new(6.0, SymMatrix::identity(d)).unwrap();
        let t2 = MultivariateT::new(6.0, SymMatrix::scaled_identity(d, (d + 1) as f64)).unwrap();
        let opt =
            chernoff_optimize(|a| mvt_rho_alpha(&t1, &t2, a), &ChernoffOptions::default()).unwrap();
        let half = mvt_rho_alpha(&t1, &t2, 0.5).unwrap();
        assert!(e.value <= opt.pe_bound + 3.0 * e.std_error, "d={d}");
        assert!(opt.pe_bound <= half.pe_bound + 1e-12, "d={d}");
        assert!(opt.divergence >= 0.0);
    }
}
