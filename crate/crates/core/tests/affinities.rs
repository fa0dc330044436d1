mod common;

use bayes_bounds::bounds::{closed_form_affinity, default_generator, rho_numeric, NumericConfig};
use bayes_bounds::{Distribution, MeanGenerator, RandomStream};
use common::*;

/// `ρ_α^f ≤ 1` for generators below the arithmetic mean.
#[test]
fn affinity_at_most_one_for_dominated_generators() {
    let mut rng = RandomStream::new(5);
    let cfg = NumericConfig::default();
    for i in 0..10 {
        let d = 1 + i % 2;
        let p: Distribution = random_mvn(&mut rng, d).into();
        let (a, b) = random_mvt_pair(&mut rng, d);
        let (a, b): (Distribution, Distribution) = (a.into(), b.into());
        for g in [
            MeanGenerator::Geometric,
            MeanGenerator::Harmonic,
            MeanGenerator::Power(0.5),
        ] {
            for alpha in [0.1, 0.5, 0.9] {
                let r = rho_numeric(&p, &a, 1.0, 1.0, g, alpha, &cfg).unwrap();
                assert!(r.value <= 1.0 + 1e-7, "mixed {g:?} {alpha}: {}", r.value);
                let r = rho_numeric(&a, &b, 1.0, 1.0, g, alpha, &cfg).unwrap();
                assert!(r.value <= 1.0 + 1e-7, "{g:?} {alpha}: {}", r.value);
            }
        }
    }
}

#[test]
fn unequal_prior_gaussian_bound_matches_numeric() {
    let mut rng = RandomStream::new(9);
    let cfg = NumericConfig::default();
    for _ in 0..5 {
        let p: Distribution = random_mvn(&mut rng, 2).into();
        let q: Distribution = random_mvn(&mut rng, 2).into();
        let w1 = uniform(&mut rng, 0.1, 0.9);
        for alpha in [0.0, 0.3, 0.7, 1.0] {
            let closed = closed_form_affinity(&p, &q, w1, 1.0 - w1, alpha)
                .unwrap()
                .pe_bound;
            let num = rho_numeric(&p, &q, w1, 1.0 - w1, default_generator(&p), alpha, &cfg)
                .unwrap()
                .value;
            assert!((closed - num).abs() < 1e-5, "{closed} vs {num}");
        }
    }
}

#[test]
fn endpoints_recover_prior_mass() {
    let mut rng = RandomStream::new(12);
    let cfg = NumericConfig::default();
    let (a, b) = random_pearson_pair(&mut rng, 2);
    let (a, b): (Distribution, Distribution) = (a.into(), b.into());
    for g in [
        MeanGenerator::Arithmetic,
        MeanGenerator::Harmonic,
        MeanGenerator::Power(-0.3),
    ] {
        let one = rho_numeric(&a, &b, 0.3, 0.7, g, 1.0, &cfg).unwrap().value;
        let zero = rho_numeric(&a, &b, 0.3, 0.7, g, 0.0, &cfg).unwrap().value;
        assert!(
            (one - 0.3).abs() < 1e-6 && (zero - 0.7).abs() < 1e-6,
            "{g:?}: {one} {zero}"
        );
    }
}
