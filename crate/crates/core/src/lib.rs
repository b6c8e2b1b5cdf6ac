//! Young functions, Orlicz and weak Orlicz norms of simple functions, and
//! numerical checks of the generalized Hölder inequality.
//!
//! A Young function `Φ` is convex on `[0, ∞)`, vanishes at zero and grows
//! without bound. It defines two function spaces:
//!
//! * the Orlicz space, normed by the Luxemburg norm
//!   `‖f‖ = inf { b > 0 : ∫ Φ(|f|/b) ≤ 1 }`;
//! * the weak Orlicz space, quasi-normed by
//!   `inf { b > 0 : sup_t Φ(t)·|{ |f|/b > t }| ≤ 1 }`.
//!
//! Functions here are nonnegative simple functions over an abstract finite
//! partition, so every integral is a finite sum and every norm is exact up to
//! the bisection tolerance.
//!
//! The [`holder`] module decides whether a system `(Φ; Φ₁, …, Φ_m)` satisfies
//! `∏ Φᵢ⁻¹(t) ≤ C Φ⁻¹(t)`, estimates the best `C` on a grid, and verifies the
//! consequences in both strong and weak spaces.
//!
//! ```
//! use orlicz_core::{YoungFunction, SimpleFunction, luxemburg_norm};
//!
//! let phi = YoungFunction::power(2.0).unwrap();
//! let f = SimpleFunction::new(vec![1.0], vec![2.0]).unwrap();
//! let norm = luxemburg_norm(&phi, &f);
//! assert!((norm.value - 2.0).abs() < 1e-9);
//! ```

mod bisect;
mod error;
pub mod holder;
pub mod norms;
pub mod oracle;
pub mod sample;
pub mod selftest;
pub mod simple;
pub mod tol;
pub mod young;

pub use bisect::{infimum_of_feasible, Bracket};
pub use error::{Error, Result};
pub use holder::{
    best_constant, check_condition2, holder_test_strong, holder_test_weak, indicator_sharpness,
    lebesgue_exponent_check, AxisGrid, ConstantEstimate, HolderReport, HolderSystem, HolderTest, LebesgueCheck,
    Verdict, ViolationRecord,
};
pub use norms::{lp_norm, luxemburg_norm, modular, weak_norm, weak_sup, wlp_norm, NormResult};
pub use simple::{product, Ball, Partition, SimpleFunction};
pub use young::{Diagnostics, Family, InvariantCheck, InverseQuery, PiecewiseLinear, YoungFunction};
