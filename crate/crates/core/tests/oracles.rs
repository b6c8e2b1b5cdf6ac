use orlicz_core::oracle::{weak_norm_by_levels, weak_sup_grid};
use orlicz_core::sample::Sampler;
use orlicz_core::selftest::{mixed_systems, weak_sup_oracle_with};
use orlicz_core::{
    best_constant, indicator_sharpness, luxemburg_norm, weak_norm, weak_sup, AxisGrid, Ball, HolderSystem,
    SimpleFunction, YoungFunction,
};

// weak_sup built on the strict level sets |{f > v}|: always one step too low
fn strict_weak_sup(phi: &YoungFunction, f: &SimpleFunction, b: f64) -> f64 {
    let mut values: Vec<f64> = f.values().iter().copied().filter(|&v| v > 0.0).collect();
    values.dedup();
    values
        .iter()
        .map(|&v| phi.eval(v / b).unwrap() * f.distribution(v))
        .fold(0.0, f64::max)
}

#[test]
fn strict_superlevel_mutation_is_caught() {
    let outcome = weak_sup_oracle_with(0, strict_weak_sup);
    assert!(!outcome.passed);
    assert!(outcome.failures > 100, "{outcome:?}");
    assert!(weak_sup_oracle_with(0, |phi, f, b| weak_sup(phi, f, b).unwrap()).passed);
}

#[test]
fn single_level_weak_sup_is_exact() {
    // Φ(t)·|{f > tb}| = Φ(t)·μ for t < v/b, so the supremum is the left limit Φ(v/b)·μ
    let sq = YoungFunction::power(2.0).unwrap();
    let f = SimpleFunction::new(vec![3.0], vec![2.0]).unwrap();
    assert_eq!(weak_sup(&sq, &f, 1.0).unwrap(), 12.0);
    let g = weak_sup_grid(&sq, &f, 1.0, 100_000);
    assert!(g.lower < 12.0 && g.upper >= 12.0);
}

#[test]
fn weak_norm_matches_level_formula() {
    let mut s = Sampler::for_stream(11, 0);
    for _ in 0..300 {
        let phi = s.young();
        let f = s.simple_function();
        let bisected = weak_norm(&phi, &f).value;
        let closed = weak_norm_by_levels(&phi, &f);
        assert!(
            (bisected - closed).abs() <= 1e-11 * closed,
            "{phi:?} {f:?}: {bisected} vs {closed}"
        );
    }
}

#[test]
fn ball_indicators_respect_best_constant() {
    let s = AxisGrid::SWEEP;
    for sys in mixed_systems() {
        let c_hat = best_constant(&sys, s.t_min, s.t_max, s.points)
            .unwrap()
            .c_hat
            .value()
            .unwrap();
        for n in 1..=3 {
            for k in -20..=20 {
                let ball = Ball::new(n, 10f64.powf(k as f64 / 10.0)).unwrap();
                let ratio = indicator_sharpness(&sys, &ball);
                assert!(
                    ratio <= c_hat * (1.0 + 1e-6),
                    "{sys:?} n={n} r={}: {ratio} > {c_hat}",
                    ball.radius()
                );
            }
        }
    }
}

#[test]
fn splitting_a_cell_leaves_the_norm_unchanged() {
    let mut s = Sampler::for_stream(12, 0);
    for _ in 0..100 {
        let phi = s.young();
        let mu = s.log_uniform(1e-2, 1e2);
        let chi = SimpleFunction::new(vec![mu], vec![1.0]).unwrap();
        let split = SimpleFunction::new(vec![mu / 2.0, mu / 2.0], vec![1.0, 1.0]).unwrap();
        let want = 1.0 / phi.inverse_at(1.0 / mu).unwrap();
        for f in [&chi, &split] {
            let got = luxemburg_norm(&phi, f).value;
            assert!((got - want).abs() <= 1e-9 * want, "{phi:?} mu={mu}: {got} vs {want}");
        }
    }
}

#[test]
fn incompatible_ratio_keeps_growing_with_the_grid() {
    // p = 2 with p₁ = p₂ = 2: the ratio is t^(1/2), unbounded as t grows
    let sys = HolderSystem::powers(2.0, &[2.0, 2.0]).unwrap();
    let short = best_constant(&sys, 1e-8, 1e4, 400).unwrap();
    let long = best_constant(&sys, 1e-8, 1e8, 400).unwrap();
    assert!(!short.is_compatible() && !long.is_compatible());
    let (a, b) = (short.grid_max.unwrap(), long.grid_max.unwrap());
    assert!((a - 1e2).abs() < 1e-6 * 1e2 && (b - 1e4).abs() < 1e-6 * 1e4, "{a} {b}");
}
