//! Shapes: a pair of sheet profiles over a shadow descriptor. The exit
//! sheet is the graph of `f_plus`, the entrance sheet the graph of
//! `f_minus`; both agree on the shadow boundary (the equator).

use serde::{Deserialize, Serialize};

use super::{Profile, RProfile};
use crate::ProfileError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseModel {
    Sphere { n: usize },
    FlatTorus { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContactModel {
    /// `α = dθ` on the circle; Reeb flow is rotation, Besse with minimal
    /// Reeb period 2π so the half-period is P = π.
    Circle,
}

impl ContactModel {
    pub fn besse_halfperiod(&self) -> f64 {
        match self {
            ContactModel::Circle => std::f64::consts::PI,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shadow {
    /// Round ball of radius `r0` in the Liouville hyperplane `ℝ^{2n}`.
    Ball { r0: f64 },
    /// Open codisc bundle of radius `r0` over a closed base.
    Codisc { r0: f64, base: BaseModel },
    /// `(a1, a0) × M` inside a symplectization.
    Interval { a1: f64, a0: f64, fiber: ContactModel },
}

/// One sheet function: radial for Ball/Codisc shadows, ℝ-symmetric for
/// Interval shadows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Sheet {
    Radial(Profile),
    RSym(RProfile),
}

impl Sheet {
    pub fn radial(&self) -> Result<&Profile, ProfileError> {
        match self {
            Sheet::Radial(p) => Ok(p),
            Sheet::RSym(_) => Err(ProfileError::WrongSheetKind),
        }
    }

    pub fn rsym(&self) -> Result<&RProfile, ProfileError> {
        match self {
            Sheet::RSym(p) => Ok(p),
            Sheet::Radial(_) => Err(ProfileError::WrongSheetKind),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Shape {
    pub shadow: Shadow,
    pub f_plus: Sheet,
    pub f_minus: Sheet,
}

/// Outcome of sampling the ordering and boundary-matching invariants.
#[derive(Debug, Clone, Serialize)]
pub struct ShapeReport {
    /// Smallest sampled value of `f_plus − f_minus` over the interior.
    pub min_gap: f64,
    /// Largest sampled boundary mismatch `|f_plus − f_minus|`.
    pub boundary_mismatch: f64,
}

/// C² agreement of two shapes on a boundary collar.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceWitness {
    pub collar_width: f64,
    pub max_discrepancy: f64,
}

impl EquivalenceWitness {
    pub fn is_equivalent(&self) -> bool {
        self.max_discrepancy <= 1e-12
    }
}

impl Shape {
    pub fn ball(r0: f64, f_plus: Profile, f_minus: Profile) -> Self {
        Shape {
            shadow: Shadow::Ball { r0 },
            f_plus: Sheet::Radial(f_plus),
            f_minus: Sheet::Radial(f_minus),
        }
    }

    pub fn codisc(r0: f64, base: BaseModel, f_plus: Profile, f_minus: Profile) -> Self {
        Shape {
            shadow: Shadow::Codisc { r0, base },
            f_plus: Sheet::Radial(f_plus),
            f_minus: Sheet::Radial(f_minus),
        }
    }

    pub fn interval(a1: f64, a0: f64, fiber: ContactModel, f_plus: RProfile, f_minus: RProfile) -> Self {
        Shape {
            shadow: Shadow::Interval { a1, a0, fiber },
            f_plus: Sheet::RSym(f_plus),
            f_minus: Sheet::RSym(f_minus),
        }
    }

    /// The round model shape over a ball or codisc: `f_± = ±√(r0² − r²)`.
    pub fn round_ball(r0: f64) -> Self {
        Shape::ball(r0, Profile::cap(r0), Profile::cap(r0).neg())
    }

    /// Sheet values at the radial/interval coordinate.
    pub fn sheet_values(&self, x: f64) -> Result<(f64, f64), ProfileError> {
        match (&self.f_plus, &self.f_minus) {
            (Sheet::Radial(p), Sheet::Radial(m)) => Ok((p.eval(x, 0)?, m.eval(x, 0)?)),
            (Sheet::RSym(p), Sheet::RSym(m)) => Ok((p.value(x), m.value(x))),
            _ => Err(ProfileError::WrongSheetKind),
        }
    }

    /// Interior sample coordinates plus the boundary coordinates.
    fn sample_coords(&self, n_samples: usize) -> (Vec<f64>, Vec<f64>) {
        match &self.shadow {
            Shadow::Ball { r0 } | Shadow::Codisc { r0, .. } => {
                let interior = (0..n_samples)
                    .map(|i| r0 * (i as f64 + 0.5) / n_samples as f64)
                    .collect();
                (interior, vec![*r0])
            }
            Shadow::Interval { a1, a0, .. } => {
                let interior = (0..n_samples)
                    .map(|i| a1 + (a0 - a1) * (i as f64 + 0.5) / n_samples as f64)
                    .collect();
                (interior, vec![*a1, *a0])
            }
        }
    }

    /// Checks `f_minus < f_plus` at `n_samples` interior points and
    /// `|f_plus − f_minus| ≤ 1e−12` at the boundary.
    pub fn validate(&self, n_samples: usize) -> Result<ShapeReport, ProfileError> {
        if n_samples < 2 {
            return Err(ProfileError::BadSampleCount { n: n_samples });
        }
        let (interior, boundary) = self.sample_coords(n_samples);
        let mut min_gap = f64::INFINITY;
        for x in interior {
            let (p, m) = self.sheet_values(x)?;
            min_gap = min_gap.min(p - m);
        }
        let mut mismatch: f64 = 0.0;
        for x in boundary {
            let (p, m) = self.sheet_values(x)?;
            mismatch = mismatch.max((p - m).abs());
        }
        let report = ShapeReport { min_gap, boundary_mismatch: mismatch };
        if min_gap <= 0.0 {
            return Err(ProfileError::ViolatedOrdering { min_gap });
        }
        if mismatch > 1e-12 {
            return Err(ProfileError::BoundaryMismatch { mismatch });
        }
        Ok(report)
    }

    /// Maximal C² discrepancy between corresponding sheets over the
    /// boundary collar of width `delta`.
    pub fn equivalence_check(
        &self,
        other: &Shape,
        delta: f64,
    ) -> Result<EquivalenceWitness, ProfileError> {
        if self.shadow != other.shadow {
            return Err(ProfileError::ShadowMismatch);
        }
        const COLLAR_SAMPLES: usize = 64;
        let mut max_d: f64 = 0.0;

        let mut probe = |x: f64, skip_derivs: bool| -> Result<(), ProfileError> {
            for (a, b) in [(&self.f_plus, &other.f_plus), (&self.f_minus, &other.f_minus)] {
                match (a, b) {
                    (Sheet::Radial(p), Sheet::Radial(q)) => {
                        let top = if skip_derivs { 0 } else { 2 };
                        for order in 0..=top {
                            max_d = max_d.max((p.eval(x, order)? - q.eval(x, order)?).abs());
                        }
                    }
                    (Sheet::RSym(p), Sheet::RSym(q)) => {
                        for order in 0..=2 {
                            max_d = max_d.max((p.eval(x, order)? - q.eval(x, order)?).abs());
                        }
                    }
                    _ => return Err(ProfileError::WrongSheetKind),
                }
            }
            Ok(())
        };

        match &self.shadow {
            Shadow::Ball { r0 } | Shadow::Codisc { r0, .. } => {
                // Derivatives are sampled strictly inside so that cap sheets
                // stay evaluable; the value is compared up to r0 itself.
                for i in 0..COLLAR_SAMPLES {
                    let r = (r0 - delta) + delta * i as f64 / COLLAR_SAMPLES as f64;
                    probe(r, false)?;
                }
                probe(*r0, true)?;
            }
            Shadow::Interval { a1, a0, .. } => {
                for i in 0..=COLLAR_SAMPLES {
                    let t = i as f64 / COLLAR_SAMPLES as f64;
                    probe(a1 + delta * t, false)?;
                    probe(a0 - delta * t, false)?;
                }
            }
        }
        Ok(EquivalenceWitness { collar_width: delta, max_discrepancy: max_d })
    }

    /// Default collar width used when callers do not supply one.
    pub fn default_collar(&self) -> f64 {
        match &self.shadow {
            Shadow::Ball { r0 } | Shadow::Codisc { r0, .. } => 0.05 * r0,
            Shadow::Interval { a1, a0, .. } => 0.05 * (a0 - a1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_shape_is_valid() {
        let s = Shape::round_ball(1.0);
        let r = s.validate(100).unwrap();
        assert!(r.min_gap > 0.0);
        assert!(r.boundary_mismatch <= 1e-12);
    }

    #[test]
    fn swapped_sheets_violate_ordering() {
        let s = Shape::ball(1.0, Profile::cap(1.0).neg(), Profile::cap(1.0));
        assert!(matches!(s.validate(10), Err(ProfileError::ViolatedOrdering { .. })));
    }

    #[test]
    fn tall_interior_bump_keeps_ordering() {
        // A bump of amplitude 10 in s at s_c = 0.5, w = 0.2: exp(-1/(1-u²))
        // is at most e^{-1}, and the bump only raises f_plus. Dense sampling
        // confirms the ordering.
        let s = Shape::ball(
            1.0,
            Profile::cap(1.0).plus(Profile::bump_even(0.5, 0.2, 10.0)),
            Profile::cap(1.0).neg(),
        );
        let r = s.validate(10_000).unwrap();
        assert!(r.min_gap > 0.0);
    }

    #[test]
    fn negative_bump_can_violate_ordering() {
        let s = Shape::ball(
            1.0,
            Profile::cap(1.0).plus(Profile::bump_even(0.5, 0.2, -10.0)),
            Profile::cap(1.0).neg(),
        );
        assert!(matches!(s.validate(10_000), Err(ProfileError::ViolatedOrdering { .. })));
    }

    #[test]
    fn equivalence_of_identical_shapes() {
        let s = Shape::round_ball(1.0);
        let w = s.equivalence_check(&s, 0.05).unwrap();
        assert_eq!(w.max_discrepancy, 0.0);
        assert!(w.is_equivalent());
    }

    #[test]
    fn interior_bump_is_invisible_on_collar() {
        // Support in s ∈ [0.2, 0.4] means r ≤ √0.4 ≈ 0.632, clear of the
        // collar [0.9, 1.0].
        let s = Shape::round_ball(1.0);
        let t = Shape::ball(
            1.0,
            Profile::cap(1.0).plus(Profile::bump_even(0.3, 0.1, 0.5)),
            Profile::cap(1.0).neg(),
        );
        let w = s.equivalence_check(&t, 0.1).unwrap();
        assert_eq!(w.max_discrepancy, 0.0);
    }

    #[test]
    fn boundary_touching_bump_is_detected() {
        let s = Shape::round_ball(1.0);
        let t = Shape::ball(
            1.0,
            Profile::cap(1.0).plus(Profile::bump_even(0.9, 0.15, 0.1)),
            Profile::cap(1.0).neg(),
        );
        let w = s.equivalence_check(&t, 0.1).unwrap();
        assert!(w.max_discrepancy > 0.0);
        assert!(!w.is_equivalent());
    }

    #[test]
    fn shadow_mismatch_is_an_error() {
        let s = Shape::round_ball(1.0);
        let t = Shape::round_ball(2.0);
        assert!(matches!(s.equivalence_check(&t, 0.05), Err(ProfileError::ShadowMismatch)));
    }

    #[test]
    fn shape_json_round_trip() {
        let s = Shape::codisc(
            1.0,
            BaseModel::Sphere { n: 2 },
            Profile::cap(1.0),
            Profile::cap(1.0).neg(),
        );
        let text = serde_json::to_string_pretty(&s).unwrap();
        let back: Shape = serde_json::from_str(&text).unwrap();
        assert_eq!(s, back);
    }
}
