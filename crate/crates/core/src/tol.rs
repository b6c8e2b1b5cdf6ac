//! Numerical tolerances shared by all modules.

/// Relative width at which bisection stops.
pub const BISECT_REL: f64 = 1e-12;
/// Iteration cap for a single bisection.
pub const BISECT_MAX_ITER: usize = 200;
pub const ABS: f64 = 1e-12;
pub const REL: f64 = 1e-9;
/// Base of the midpoint-convexity slack, scaled by `1 + |Φ(s)| + |Φ(t)|`.
pub const CONVEX: f64 = 1e-9;
/// Relative tolerance between the closed-form weak supremum and the grid brute force.
pub const GRID: f64 = 1e-6;
/// Log-log slope above which a ratio is considered to diverge at a grid end.
pub const TREND: f64 = 0.01;
/// Largest tensor grid `check_condition2` will evaluate.
pub const TENSOR_BUDGET: u64 = 1_000_000;
