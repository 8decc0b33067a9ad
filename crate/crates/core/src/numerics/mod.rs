//! Self-contained quadrature, ODE integration and finite differences.
//! Every geometric kernel phrases its integrals and flows through these
//! primitives; all operations are pure functions of their inputs.

mod fd;
mod ode;
mod quad;

pub use fd::{hessian_fd, hessian_step, jacobian_fd, jacobian_step};
pub use ode::{solve_ode, OdeControl, OdeMethod, StepStats, Trajectory};
pub use quad::{integrate, integrate_soft, Estimate, Quadrature, SoftEndpoint};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("tolerance not met: requested {requested:e}, achieved {achieved:e}")]
    ToleranceNotMet { requested: f64, achieved: f64 },
    #[error("non-finite sample at x = {x}")]
    NonFiniteSample { x: f64 },
    #[error("maximum step count {max} exceeded")]
    MaxStepsExceeded { max: usize },
    #[error("non-finite state at t = {t}")]
    NonFiniteState { t: f64 },
    #[error("{0}")]
    BadControl(String),
}
