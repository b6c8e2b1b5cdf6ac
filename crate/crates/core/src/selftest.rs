//! Randomized verification suites, one per acceptance criterion.
//!
//! Every suite draws from its own [`Sampler`] stream under the caller's seed,
//! so suites are independent of each other and reproducible.

use serde::Serialize;

use crate::holder::{
    best_constant, check_condition2, holder_test_strong, holder_test_weak, AxisGrid, ConstantEstimate, HolderSystem,
    HolderTest, Witness, WitnessKind,
};
use crate::norms::{lp_norm, luxemburg_norm, modular, weak_norm, weak_sup, wlp_norm};
use crate::oracle::weak_sup_grid;
use crate::sample::Sampler;
use crate::simple::SimpleFunction;
use crate::young::YoungFunction;
use crate::Result;

const MAX_RECORDED: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub id: String,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    /// Largest value of the suite's figure of merit (relative error, slack ratio, …).
    pub worst: f64,
    pub failing_cases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteOutcome>,
}

struct Tally {
    id: String,
    name: String,
    cases: usize,
    failures: usize,
    worst: f64,
    failing: Vec<String>,
}

impl Tally {
    fn new(id: &str, name: &str) -> Self {
        Self {
            id: id.into(),
            name: name.into(),
            cases: 0,
            failures: 0,
            worst: 0.0,
            failing: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, metric: f64, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if metric > self.worst || metric.is_nan() {
            self.worst = metric;
        }
        if !ok {
            self.failures += 1;
            if self.failing.len() < MAX_RECORDED {
                self.failing.push(describe());
            }
        }
    }

    fn finish(self) -> SuiteOutcome {
        SuiteOutcome {
            passed: self.failures == 0 && self.cases > 0,
            id: self.id,
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            worst: self.worst,
            failing_cases: self.failing,
        }
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if got == want {
        0.0
    } else {
        (got - want).abs() / want.abs()
    }
}

fn ball_pairs(seed: u64) -> Vec<(YoungFunction, crate::simple::Ball)> {
    let mut s = Sampler::for_stream(seed, 1);
    (0..100).map(|_| (s.young(), s.ball())).collect()
}

/// Criterion 1: Luxemburg norm of a ball indicator equals `1/Φ⁻¹(1/|B|)`.
pub fn ball_indicator_strong(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("1", "ball indicator, Luxemburg norm");
    for (phi, ball) in ball_pairs(seed) {
        let want = 1.0 / phi.inverse_at(1.0 / ball.volume()).unwrap();
        let got = luxemburg_norm(&phi, &ball.indicator()).value;
        let err = rel_err(got, want);
        t.record(err <= 1e-9, err, || format!("{phi:?} {ball:?}: {got} vs {want}"));
    }
    t.finish()
}

/// Criterion 2: weak quasi-norm of a ball indicator equals `1/Φ⁻¹(1/|B|)`.
pub fn ball_indicator_weak(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("2", "ball indicator, weak quasi-norm");
    for (phi, ball) in ball_pairs(seed) {
        let want = 1.0 / phi.inverse_at(1.0 / ball.volume()).unwrap();
        let got = weak_norm(&phi, &ball.indicator()).value;
        let err = rel_err(got, want);
        t.record(err <= 1e-9, err, || format!("{phi:?} {ball:?}: {got} vs {want}"));
    }
    t.finish()
}

/// Criterion 3: `Φ(Φ⁻¹(s)) ≤ s ≤ Φ⁻¹(Φ(s))` with `1e-9` relative and `1e-12` absolute slack.
pub fn inverse_sandwich(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("3", "generalized inverse sandwich");
    let mut s = Sampler::for_stream(seed, 3);
    for _ in 0..1000 {
        let phi = s.young();
        // keep Φ(s) finite so both sides are meaningful
        let top = phi.inverse_at(1e300).unwrap().min(1e6);
        let x = s.log_uniform(1e-6, top);
        let left = phi.value(phi.inverse_at(x).unwrap());
        let right = phi.inverse_at(phi.value(x)).unwrap();
        let ok = left <= x * (1.0 + 1e-9) + 1e-12 && x <= right * (1.0 + 1e-9) + 1e-12;
        let metric = (left / x - 1.0).max(x / right - 1.0).max(0.0);
        t.record(ok, metric, || {
            format!("{phi:?} s={x}: Φ(Φ⁻¹(s))={left}, Φ⁻¹(Φ(s))={right}")
        });
    }
    t.finish()
}

/// Criterion 4: modular at the norm is at most 1, and `‖f‖ ≤ 1 ⇔ modular(f, 1) ≤ 1`.
pub fn modular_at_norm(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("4", "modular at norm and unit-ball characterization");
    let mut s = Sampler::for_stream(seed, 4);
    for i in 0..500 {
        let phi = s.young();
        let mut f = s.simple_function();
        if i % 2 == 1 {
            // move the norm close to 1 so the biconditional is exercised near its edge
            let norm = luxemburg_norm(&phi, &f).value;
            f = f.scaled(s.log_uniform(0.5, 2.0) / norm).unwrap();
        }
        let norm = luxemburg_norm(&phi, &f).value;
        let at_norm = modular(&phi, &f, norm).unwrap();
        let at_one = modular(&phi, &f, 1.0).unwrap();
        let forward = !(norm <= 1.0) || at_one <= 1.0 + 1e-9;
        let backward = !(at_one <= 1.0) || norm <= 1.0 + 1e-9;
        let ok = at_norm <= 1.0 + 1e-9 && forward && backward;
        t.record(ok, (at_norm - 1.0).max(0.0), || {
            format!("{phi:?} {f:?}: norm={norm}, modular(norm)={at_norm}, modular(1)={at_one}")
        });
    }
    t.finish()
}

/// Criterion 5: weak quasi-norm never exceeds the Luxemburg norm.
pub fn embedding(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("5", "weak quasi-norm ≤ Luxemburg norm");
    let mut s = Sampler::for_stream(seed, 5);
    for _ in 0..500 {
        let phi = s.young();
        let f = s.simple_function();
        let weak = weak_norm(&phi, &f).value;
        let strong = luxemburg_norm(&phi, &f).value;
        t.record(weak <= strong * (1.0 + 2e-9), weak / strong, || {
            format!("{phi:?} {f:?}: weak={weak}, strong={strong}")
        });
    }
    t.finish()
}

/// Criterion 6 with the production `weak_sup`.
pub fn weak_sup_oracle(seed: u64) -> SuiteOutcome {
    weak_sup_oracle_with(seed, |phi, f, b| weak_sup(phi, f, b).unwrap())
}

/// Criterion 6: a closed-form weak supremum must lie inside the bracket
/// produced by a `10⁵`-point log grid of `Φ(t)·distribution(f, t·b)`, within
/// `1e-6` relative on each side.
pub fn weak_sup_oracle_with<W>(seed: u64, imp: W) -> SuiteOutcome
where
    W: Fn(&YoungFunction, &SimpleFunction, f64) -> f64,
{
    let mut t = Tally::new("6", "weak supremum reduction vs grid brute force");
    let mut s = Sampler::for_stream(seed, 6);
    for _ in 0..200 {
        let phi = s.young();
        let f = s.simple_function();
        let b = weak_norm(&phi, &f).value * s.log_uniform(0.5, 10.0);
        let closed = imp(&phi, &f, b);
        let grid = weak_sup_grid(&phi, &f, b, 100_000);
        let ok = grid.lower <= closed * (1.0 + 1e-6) && closed <= grid.upper * (1.0 + 1e-6);
        let metric = (grid.lower / closed - 1.0).max(1.0 - grid.upper / closed).max(0.0);
        t.record(ok, metric, || {
            format!(
                "{phi:?} {f:?} b={b}: closed={closed}, grid=[{}, {}]",
                grid.lower, grid.upper
            )
        });
    }
    t.finish()
}

/// Criterion 7: power Young functions reproduce the Lebesgue norms.
pub fn lebesgue_specialization(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("7", "Lebesgue specialization");
    let mut s = Sampler::for_stream(seed, 7);
    for _ in 0..200 {
        let p = s.uniform(1.0, 8.0);
        let phi = YoungFunction::power(p).unwrap();
        let f = s.simple_function();
        let e1 = rel_err(luxemburg_norm(&phi, &f).value, lp_norm(p, &f).unwrap());
        let e2 = rel_err(weak_norm(&phi, &f).value, wlp_norm(p, &f).unwrap());
        t.record(e1 <= 1e-9 && e2 <= 1e-9, e1.max(e2), || {
            format!("p={p} {f:?}: errors {e1}, {e2}")
        });
    }
    t.finish()
}

/// Results of the full chain of checks on one compatible system.
struct ChainTallies {
    constant: Tally,
    condition2: Tally,
    strong_unit: Option<Tally>,
    weak_unit: Option<Tally>,
    strong_mc: Tally,
    weak_mc: Tally,
}

impl ChainTallies {
    fn new(id: &str, unit: bool) -> Self {
        let t = |suffix: &str, name: &str| Tally::new(&format!("{id}{suffix}"), name);
        Self {
            constant: t("a", "best constant"),
            condition2: t("b", "condition 2 on tensor grid, C = c_hat·(1+1e-9)"),
            strong_unit: unit.then(|| t("c", "strong Hölder, M = 1")),
            weak_unit: unit.then(|| t("d", "weak Hölder, M = 1")),
            strong_mc: t("e", "strong Hölder, M = m·c_hat"),
            weak_mc: t("f", "weak Hölder, M = m·c_hat"),
        }
    }

    fn finish(self) -> Vec<SuiteOutcome> {
        [
            Some(self.constant),
            Some(self.condition2),
            self.strong_unit,
            self.weak_unit,
            Some(self.strong_mc),
            Some(self.weak_mc),
        ]
        .into_iter()
        .flatten()
        .map(Tally::finish)
        .collect()
    }
}

fn record_holder(t: &mut Tally, test: Result<HolderTest>, sys: &HolderSystem, fs: &[SimpleFunction]) {
    match test {
        Ok(h) => t.record(h.passed, h.slack_ratio, || {
            format!(
                "{sys:?} {fs:?}: lhs={}, M·rhs={}, slack={}",
                h.lhs,
                h.m_const * h.rhs,
                h.slack_ratio
            )
        }),
        Err(e) => t.record(false, f64::INFINITY, || format!("{sys:?}: {e}")),
    }
}

fn run_chain(
    chain: &mut ChainTallies,
    sys: &HolderSystem,
    expect_unit: bool,
    c_margin: f64,
    sampler: &mut Sampler,
    trials: usize,
) {
    let sweep = AxisGrid::SWEEP;
    let report = best_constant(sys, sweep.t_min, sweep.t_max, sweep.points).unwrap();
    let c_hat = match report.c_hat {
        ConstantEstimate::Finite(c) if report.is_compatible() => c,
        _ => {
            chain
                .constant
                .record(false, f64::INFINITY, || format!("{sys:?}: not compatible on grid"));
            return;
        }
    };
    let constant_ok = !expect_unit || (c_hat - 1.0).abs() <= 1e-6;
    chain
        .constant
        .record(constant_ok, (c_hat - 1.0).abs(), || format!("{sys:?}: c_hat={c_hat}"));

    match check_condition2(sys, c_hat * (1.0 + 1e-9), &AxisGrid::TENSOR_AXIS) {
        Ok(v) => chain.condition2.record(v.is_empty(), v.len() as f64, || {
            format!("{sys:?}: {} violations, first {:?}", v.len(), v.first())
        }),
        Err(e) => chain
            .condition2
            .record(false, f64::INFINITY, || format!("{sys:?}: {e}")),
    }

    let m_mc = sys.m() as f64 * c_hat * c_margin;
    for trial in 0..trials {
        let fs = sampler.tuple(sys.m(), trial);
        if let Some(t) = chain.strong_unit.as_mut() {
            record_holder(t, holder_test_strong(sys, &fs, 1.0), sys, &fs);
        }
        if let Some(t) = chain.weak_unit.as_mut() {
            record_holder(t, holder_test_weak(sys, &fs, 1.0), sys, &fs);
        }
        record_holder(&mut chain.strong_mc, holder_test_strong(sys, &fs, m_mc), sys, &fs);
        record_holder(&mut chain.weak_mc, holder_test_weak(sys, &fs, m_mc), sys, &fs);
    }
}

/// Draws `m ∈ {2, 3}` and `pᵢ ∈ [1.1, 8]` with `p = 1/Σ(1/pᵢ) ≥ 1`.
pub fn compatible_power_system(s: &mut Sampler) -> (f64, Vec<f64>) {
    loop {
        let m = 2 + s.index(2);
        let ps: Vec<f64> = (0..m).map(|_| s.uniform(1.1, 8.0)).collect();
        let p = 1.0 / ps.iter().map(|q| q.recip()).sum::<f64>();
        if p >= 1.0 {
            return (p, ps);
        }
    }
}

/// Draws `m ∈ {2, 3}`, `pᵢ ∈ [1.1, 8]`, `p ∈ [1, 8]` with `|Σ1/pᵢ − 1/p| ≥ 0.05`.
pub fn incompatible_power_system(s: &mut Sampler) -> (f64, Vec<f64>) {
    loop {
        let m = 2 + s.index(2);
        let ps: Vec<f64> = (0..m).map(|_| s.uniform(1.1, 8.0)).collect();
        let p = s.uniform(1.0, 8.0);
        if (ps.iter().map(|q| q.recip()).sum::<f64>() - p.recip()).abs() >= 0.05 {
            return (p, ps);
        }
    }
}

/// Criterion 8: compatible power systems pass the whole chain, with `M = 1`
/// and with `M = m·c_hat`.
pub fn compatible_powers(seed: u64) -> Vec<SuiteOutcome> {
    let mut s = Sampler::for_stream(seed, 8);
    let mut chain = ChainTallies::new("8", true);
    for _ in 0..50 {
        let (p, ps) = compatible_power_system(&mut s);
        let sys = HolderSystem::powers(p, &ps).unwrap();
        run_chain(&mut chain, &sys, true, 1.0, &mut s, 100);
    }
    chain.finish()
}

/// Criterion 9: systems with `|Σ1/pᵢ − 1/p| ≥ 0.05` never get a compatible verdict.
pub fn incompatible_powers(seed: u64) -> SuiteOutcome {
    let mut t = Tally::new("9", "incompatible power systems are flagged");
    let mut s = Sampler::for_stream(seed, 9);
    for _ in 0..50 {
        let (p, ps) = incompatible_power_system(&mut s);
        let sys = HolderSystem::powers(p, &ps).unwrap();
        let sweep = AxisGrid::SWEEP;
        let r = best_constant(&sys, sweep.t_min, sweep.t_max, sweep.points).unwrap();
        let flagged = r.c_hat == ConstantEstimate::Unbounded && !r.is_compatible();
        let slope = r
            .witnesses
            .iter()
            .find_map(|w: &Witness| match w.kind {
                WitnessKind::Divergence { log_slope, .. } => Some(log_slope.abs()),
                _ => None,
            })
            .unwrap_or(0.0);
        t.record(flagged, slope, || format!("p={p} ps={ps:?}: {:?}", r.c_hat));
    }
    t.finish()
}

/// Compatible systems mixing the non-power families.
pub fn mixed_systems() -> Vec<HolderSystem> {
    let power = |p| YoungFunction::power(p).unwrap();
    let hinge = |a, t0| YoungFunction::hinge(a, t0).unwrap();
    let exp = |p| YoungFunction::exp_power(p).unwrap();
    let pl = |k: &[(f64, f64)]| YoungFunction::piecewise_linear(k.to_vec()).unwrap();
    let sys = |target, factors| HolderSystem::new(target, factors).unwrap();
    vec![
        sys(hinge(1.0, 1.0), vec![power(2.0), power(2.0)]),
        sys(hinge(2.0, 0.5), vec![power(3.0), power(3.0), power(3.0)]),
        sys(hinge(1.0, 0.0), vec![power(3.0), power(1.5)]),
        sys(hinge(1.0, 1.0), vec![power(1.0)]),
        sys(exp(1.0), vec![exp(2.0), exp(2.0)]),
        sys(exp(1.0), vec![exp(3.0), exp(1.5)]),
        sys(power(1.0), vec![exp(2.0), exp(2.0)]),
        sys(pl(&[(0.0, 0.0), (1.0, 0.0), (2.0, 2.0)]), vec![power(2.0), power(2.0)]),
        sys(pl(&[(0.0, 0.0), (1.0, 1.0), (2.0, 3.0)]), vec![power(2.0), power(2.0)]),
        sys(pl(&[(0.0, 0.0), (1.0, 1.0), (2.0, 3.0)]), vec![exp(2.0), exp(2.0)]),
    ]
}

/// Criterion 10: the mixed-family systems pass the chain with their measured `c_hat`.
pub fn mixed_chain(seed: u64) -> Vec<SuiteOutcome> {
    let mut s = Sampler::for_stream(seed, 10);
    let mut chain = ChainTallies::new("10", false);
    for sys in mixed_systems() {
        run_chain(&mut chain, &sys, false, 1.0 + 1e-9, &mut s, 100);
    }
    chain.finish()
}

pub fn run_all(seed: u64) -> SelftestReport {
    let mut suites = vec![
        ball_indicator_strong(seed),
        ball_indicator_weak(seed),
        inverse_sandwich(seed),
        modular_at_norm(seed),
        embedding(seed),
        weak_sup_oracle(seed),
        lebesgue_specialization(seed),
    ];
    suites.extend(compatible_powers(seed));
    suites.push(incompatible_powers(seed));
    suites.extend(mixed_chain(seed));
    let passed = suites.iter().all(|s| s.passed);
    SelftestReport { seed, passed, suites }
}
