//! Radially symmetric profiles represented in the squared variable
//! `s = r²`. Every kind is a smooth function of `s` by construction, which
//! turns the even-function root factorisation into a representation
//! invariant: `f(r) = f̃(r²)` holds exactly and `f'(r)/r = 2 f̃'(r²)` is
//! evaluable straight through `r = 0`.

use serde::{Deserialize, Serialize};

use crate::smooth::PolyRamp;
use crate::ProfileError;

/// Smooth even radial profile on `[0, r0]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Profile {
    /// `√(r0² − r²)`; the upper hemisphere profile.
    Cap { r0: f64 },
    /// Polynomial in `s = r²`: `f̃(s) = Σ c_k s^k`.
    PolyEven { coeffs: Vec<f64> },
    /// C∞ bump in `s`: `A · exp(−1/(1−u²))` with `u = (s − center)/halfwidth`.
    BumpEven { center: f64, halfwidth: f64, amplitude: f64 },
    Sum { terms: Vec<Profile> },
    Scaled { factor: f64, inner: Box<Profile> },
    /// The cogeodesic-twist compensation `Θ(r) = −∫_r^∞ τ θ'(τ) dτ`, with
    /// `θ` a [`PolyRamp`] in `r` that is constant near 0 and past its hi end.
    TwistShift { ramp: PolyRamp },
}

impl Profile {
    pub fn cap(r0: f64) -> Self {
        Profile::Cap { r0 }
    }

    pub fn poly_even(coeffs: &[f64]) -> Self {
        Profile::PolyEven { coeffs: coeffs.to_vec() }
    }

    pub fn bump_even(center: f64, halfwidth: f64, amplitude: f64) -> Self {
        Profile::BumpEven { center, halfwidth, amplitude }
    }

    pub fn constant(c: f64) -> Self {
        Profile::PolyEven { coeffs: vec![c] }
    }

    pub fn neg(self) -> Self {
        Profile::Scaled { factor: -1.0, inner: Box::new(self) }
    }

    pub fn plus(self, other: Profile) -> Self {
        Profile::Sum { terms: vec![self, other] }
    }

    pub fn minus(self, other: Profile) -> Self {
        self.plus(other.neg())
    }

    /// Value of `f̃` at `s = r²`.
    pub fn value_s(&self, s: f64) -> f64 {
        match self {
            Profile::Cap { r0 } => (r0 * r0 - s).max(0.0).sqrt(),
            Profile::PolyEven { coeffs } => coeffs.iter().rev().fold(0.0, |acc, c| acc * s + c),
            Profile::BumpEven { center, halfwidth, amplitude } => {
                bump(s, *center, *halfwidth, *amplitude).0
            }
            Profile::Sum { terms } => terms.iter().map(|p| p.value_s(s)).sum(),
            Profile::Scaled { factor, inner } => factor * inner.value_s(s),
            Profile::TwistShift { ramp } => {
                // Θ(r) = −∫_r^∞ τ θ'(τ) dτ is constant near 0 by construction.
                -ramp.moment_tail(s.max(0.0).sqrt())
            }
        }
    }

    /// `d f̃ / d s`; half the `(f')₁` divided difference, exactly.
    pub fn deriv1_s(&self, s: f64) -> f64 {
        match self {
            Profile::Cap { r0 } => -0.5 / (r0 * r0 - s).sqrt(),
            Profile::PolyEven { coeffs } => coeffs
                .iter()
                .enumerate()
                .skip(1)
                .rev()
                .fold(0.0, |acc, (k, c)| acc * s + k as f64 * c),
            Profile::BumpEven { center, halfwidth, amplitude } => {
                bump(s, *center, *halfwidth, *amplitude).1
            }
            Profile::Sum { terms } => terms.iter().map(|p| p.deriv1_s(s)).sum(),
            Profile::Scaled { factor, inner } => factor * inner.deriv1_s(s),
            // dΘ/ds = Θ'(r)/(2r) = θ'(r)/2 since Θ'(r) = r θ'(r).
            Profile::TwistShift { ramp } => 0.5 * ramp.deriv(s.max(0.0).sqrt()),
        }
    }

    /// `d² f̃ / d s²`.
    pub fn deriv2_s(&self, s: f64) -> f64 {
        match self {
            Profile::Cap { r0 } => -0.25 / (r0 * r0 - s).powf(1.5),
            Profile::PolyEven { coeffs } => coeffs
                .iter()
                .enumerate()
                .skip(2)
                .rev()
                .fold(0.0, |acc, (k, c)| acc * s + (k * (k - 1)) as f64 * c),
            Profile::BumpEven { center, halfwidth, amplitude } => {
                bump(s, *center, *halfwidth, *amplitude).2
            }
            Profile::Sum { terms } => terms.iter().map(|p| p.deriv2_s(s)).sum(),
            Profile::Scaled { factor, inner } => factor * inner.deriv2_s(s),
            Profile::TwistShift { ramp } => {
                let r = s.max(0.0).sqrt();
                // d/ds (θ'(r)/2) = θ''(r)/(4r); θ' vanishes identically near
                // r = 0, so the quotient is taken strictly inside the ramp.
                if r > 0.0 {
                    0.25 * ramp.deriv2(r) / r
                } else {
                    0.0
                }
            }
        }
    }

    /// Value, first or second derivative in the radial variable `r`.
    ///
    /// Differentiation is closed-form per kind; the cap endpoint `r = r0`
    /// has no finite derivative and is reported as an error rather than ∞.
    pub fn eval(&self, r: f64, order: u8) -> Result<f64, ProfileError> {
        if !(r >= 0.0) {
            return Err(ProfileError::OutOfDomain { r });
        }
        if order > 0 && self.singular_at(r) {
            return Err(ProfileError::SingularEndpoint { r });
        }
        let s = r * r;
        Ok(match order {
            0 => self.value_s(s),
            1 => 2.0 * r * self.deriv1_s(s),
            2 => 2.0 * self.deriv1_s(s) + 4.0 * s * self.deriv2_s(s),
            _ => return Err(ProfileError::UnsupportedOrder { order }),
        })
    }

    /// `f'(r)/r = 2 f̃'(r²)`, smooth through `r = 0`.
    pub fn slope_over_r(&self, r: f64) -> f64 {
        2.0 * self.deriv1_s(r * r)
    }

    /// Mean curvature datum `f''(0) = 2 f̃'(0)`.
    pub fn second_deriv_at_zero(&self) -> f64 {
        2.0 * self.deriv1_s(0.0)
    }

    /// The even factor `f̃` with `f̃(r²) = f(r)`, exact by representation.
    pub fn even_factor(&self) -> impl Fn(f64) -> f64 + '_ {
        move |s| self.value_s(s)
    }

    fn singular_at(&self, r: f64) -> bool {
        match self {
            Profile::Cap { r0 } => r >= *r0,
            Profile::Sum { terms } => terms.iter().any(|p| p.singular_at(r)),
            Profile::Scaled { inner, .. } => inner.singular_at(r),
            _ => false,
        }
    }

    /// Largest radius at which the profile (or a summand) loses smoothness,
    /// if any; quadrature up to this point must use the soft-endpoint path.
    pub fn singular_radius(&self) -> Option<f64> {
        match self {
            Profile::Cap { r0 } => Some(*r0),
            Profile::Sum { terms } => {
                terms.iter().filter_map(|p| p.singular_radius()).fold(None, |acc, r| {
                    Some(acc.map_or(r, |a: f64| a.max(r)))
                })
            }
            Profile::Scaled { inner, .. } => inner.singular_radius(),
            _ => None,
        }
    }
}

/// C∞ bump and its first two `s`-derivatives.
fn bump(s: f64, center: f64, halfwidth: f64, amplitude: f64) -> (f64, f64, f64) {
    let u = (s - center) / halfwidth;
    if u.abs() >= 1.0 {
        return (0.0, 0.0, 0.0);
    }
    let d = 1.0 - u * u;
    let v = amplitude * (-1.0 / d).exp();
    // logarithmic derivatives in u
    let l1 = -2.0 * u / (d * d);
    let l2 = -2.0 / (d * d) - 8.0 * u * u / (d * d * d);
    let dv = v * l1 / halfwidth;
    let ddv = v * (l1 * l1 + l2) / (halfwidth * halfwidth);
    (v, dv, ddv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn cap_values() {
        let c = Profile::cap(1.0);
        assert_eq!(c.eval(0.0, 0).unwrap(), 1.0);
        assert_abs_diff_eq!(c.eval(0.6, 0).unwrap(), 0.8, epsilon = 1e-15);
        // Taylor: √(1−r²) = 1 − r²/2 + O(r⁴) so f''(0) = −1.
        assert_abs_diff_eq!(c.eval(0.0, 2).unwrap(), -1.0, epsilon = 1e-15);
        assert!(matches!(c.eval(1.0, 1), Err(ProfileError::SingularEndpoint { .. })));
        assert!(c.eval(1.0, 0).is_ok());
    }

    #[test]
    fn poly_even_example() {
        // f̃(s) = 1 − s + s² at r = √2: f̃(2) = 3.
        let p = Profile::poly_even(&[1.0, -1.0, 1.0]);
        assert_abs_diff_eq!(p.eval(2.0f64.sqrt(), 0).unwrap(), 3.0, epsilon = 1e-12);
    }

    #[test]
    fn even_derivative_vanishes_at_origin() {
        for p in [
            Profile::cap(1.0),
            Profile::poly_even(&[1.0, -2.0, 0.5]),
            Profile::bump_even(0.5, 0.2, 10.0),
            Profile::cap(2.0).plus(Profile::bump_even(0.3, 0.1, 0.2)),
        ] {
            assert_eq!(p.eval(0.0, 1).unwrap(), 0.0);
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let p = Profile::cap(2.0)
            .plus(Profile::poly_even(&[0.0, 0.3, -0.05]))
            .plus(Profile::bump_even(0.8, 0.5, 0.7));
        let h = 1e-6;
        for &r in &[0.2, 0.7, 1.3] {
            let f = |r: f64| p.eval(r, 0).unwrap();
            let fd1 = (f(r + h) - f(r - h)) / (2.0 * h);
            let fd2 = (f(r + h) - 2.0 * f(r) + f(r - h)) / (h * h);
            assert_abs_diff_eq!(p.eval(r, 1).unwrap(), fd1, epsilon = 1e-7);
            assert_abs_diff_eq!(p.eval(r, 2).unwrap(), fd2, epsilon = 1e-4);
        }
    }

    #[test]
    fn even_factor_representation_identity() {
        let p = Profile::cap(1.0).plus(Profile::poly_even(&[1.0, -1.0, 1.0]));
        let f = p.even_factor();
        assert_abs_diff_eq!(
            f(0.25),
            0.75f64.sqrt() + (1.0 - 0.25 + 0.0625),
            epsilon = 1e-15
        );
        // f̃(r²) = f(r) at a spread of radii, exactly.
        for i in 0..64 {
            let r = 0.99 * i as f64 / 63.0;
            assert_eq!(f(r * r), p.eval(r, 0).unwrap());
        }
    }

    #[test]
    fn bump_support_is_sharp() {
        let b = Profile::bump_even(0.5, 0.2, 3.0);
        assert_eq!(b.value_s(0.29), 0.0);
        assert_eq!(b.value_s(0.71), 0.0);
        assert!(b.value_s(0.5) > 0.0);
    }

    #[test]
    fn twist_shift_matches_quadrature() {
        let ramp = PolyRamp::new(0.0, 0.4, 0.2, 0.9);
        let p = Profile::TwistShift { ramp: ramp.clone() };
        let q = crate::numerics::Quadrature::default();
        for &r in &[0.0, 0.3, 0.6, 0.95] {
            let theta = crate::numerics::integrate(|t| t * ramp.deriv(t), r, 1.0, &q).unwrap();
            assert_abs_diff_eq!(p.eval(r, 0).unwrap(), -theta.value, epsilon = 1e-10);
        }
        // Θ'(r) = r θ'(r)
        let r = 0.45;
        assert_abs_diff_eq!(p.eval(r, 1).unwrap(), r * ramp.deriv(r), epsilon = 1e-12);
    }

    #[test]
    fn json_round_trip() {
        let p = Profile::cap(1.5)
            .plus(Profile::bump_even(0.4, 0.1, -0.2))
            .plus(Profile::poly_even(&[0.0, 1.0]));
        let s = serde_json::to_string(&p).unwrap();
        let back: Profile = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }
}
