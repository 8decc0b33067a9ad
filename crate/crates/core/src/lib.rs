//! Numerical contact geometry of vertically convex domains.
//!
//! The library computes contactomorphism invariants of shapes — umbilic
//! mean curvature, characteristic half-length `𝓛` and length `Σ`,
//! characteristic action `𝒜` and total action `𝒯` — in three model
//! contactizations:
//!
//! * [`euclid`] — the Darboux space `ℝ × ℝ^{2n}` with contact form
//!   `db + ½(x dy − y dx)`,
//! * [`cotangent`] — 1-jet spaces `ℝ × T*Q` over round spheres and flat
//!   tori, with closed-form cogeodesic flows,
//! * [`sympl`] — contactizations of symplectizations `ℝ × (ℝ × M)` with
//!   form `db + e^a α`.
//!
//! On top of the invariants it constructs the associated contact
//! isotopies (Moser flows, cogeodesic and Reeb twists) as integrable
//! vector fields and certifies each produced map against testable
//! identities: pullback proportionality, characteristic preservation and
//! equator monodromy. The [`decide`] module turns the invariant
//! comparisons into decision procedures, with Besse period ambiguities
//! handled against declared half-periods.

pub mod cotangent;
pub mod decide;
pub mod euclid;
pub mod moser;
pub mod numerics;
pub mod profiles;
pub mod report;
pub mod smooth;
pub mod sympl;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("radial coordinate {r} outside the profile domain")]
    OutOfDomain { r: f64 },
    #[error("derivative requested at singular endpoint r = {r}")]
    SingularEndpoint { r: f64 },
    #[error("derivative order {order} not supported")]
    UnsupportedOrder { order: u8 },
    #[error("sheet profile kind does not match the shadow")]
    WrongSheetKind,
    #[error("sheet ordering violated: minimal gap {min_gap}")]
    ViolatedOrdering { min_gap: f64 },
    #[error("sheets mismatch on the shadow boundary by {mismatch}")]
    BoundaryMismatch { mismatch: f64 },
    #[error("shapes live over different shadows")]
    ShadowMismatch,
    #[error("at least two samples required, got {n}")]
    BadSampleCount { n: usize },
    #[error("tabulated profile needs at least two strictly increasing knots")]
    BadSpline,
}

/// Errors shared by the geometry kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Numerics(#[from] numerics::NumericsError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("point does not lie on the requested sheet (offset {offset:e})")]
    PointNotOnSheet { offset: f64 },
    #[error("zero covector has no normalized flow")]
    ZeroCovector,
    #[error("radial coordinate {r} out of range (0, {r0})")]
    OutOfRange { r: f64, r0: f64 },
    #[error("cutoff bands collide: {0}")]
    BandCollision(String),
    #[error("shapes are not equivalent on the collar (discrepancy {discrepancy:e})")]
    InequivalentShapes { discrepancy: f64 },
    #[error("characteristic lengths differ: Σ(source) = {left}, Σ(target) = {right}")]
    SigmaMismatch { left: f64, right: f64 },
    #[error("total characteristic actions differ: 𝒯(source) = {left}, 𝒯(target) = {right}")]
    TotalActionMismatch { left: f64, right: f64 },
    #[error("pullback residual {residual:e} exceeds the hard cap {cap:e}")]
    ResidualCap { residual: f64, cap: f64 },
    #[error("invariant reports come from different geometries")]
    GeometryMismatch,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
