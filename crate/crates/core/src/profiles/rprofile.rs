//! ℝ-symmetric profiles `f ≡ f(a)` on an interval `[a1, a0]`, used by the
//! symplectization shapes.

use serde::{Deserialize, Serialize};

use crate::smooth::PolyRamp;
use crate::ProfileError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RProfile {
    Linear { slope: f64, offset: f64 },
    /// `amplitude · sin(π (a − a1)/(a0 − a1))`; vanishes at both ends.
    SinBridge { amplitude: f64, a1: f64, a0: f64 },
    /// Natural cubic spline through the given knots.
    Tabulated { knots: Vec<(f64, f64)> },
    /// C∞ bump in `a`.
    Bump { center: f64, halfwidth: f64, amplitude: f64 },
    Sum { terms: Vec<RProfile> },
    Scaled { factor: f64, inner: Box<RProfile> },
    /// Reeb-twist compensation `Θ(a) = −∫_a^∞ e^τ θ'(τ) dτ`.
    ReebShift { ramp: PolyRamp },
}

impl RProfile {
    pub fn linear(slope: f64, offset: f64) -> Self {
        RProfile::Linear { slope, offset }
    }

    pub fn constant(c: f64) -> Self {
        RProfile::Linear { slope: 0.0, offset: c }
    }

    pub fn sin_bridge(amplitude: f64, a1: f64, a0: f64) -> Self {
        RProfile::SinBridge { amplitude, a1, a0 }
    }

    pub fn bump(center: f64, halfwidth: f64, amplitude: f64) -> Self {
        RProfile::Bump { center, halfwidth, amplitude }
    }

    pub fn neg(self) -> Self {
        RProfile::Scaled { factor: -1.0, inner: Box::new(self) }
    }

    pub fn plus(self, other: RProfile) -> Self {
        RProfile::Sum { terms: vec![self, other] }
    }

    pub fn minus(self, other: RProfile) -> Self {
        self.plus(other.neg())
    }

    pub fn eval(&self, a: f64, order: u8) -> Result<f64, ProfileError> {
        if order > 2 {
            return Err(ProfileError::UnsupportedOrder { order });
        }
        Ok(match self {
            RProfile::Linear { slope, offset } => match order {
                0 => slope * a + offset,
                1 => *slope,
                _ => 0.0,
            },
            RProfile::SinBridge { amplitude, a1, a0 } => {
                let k = std::f64::consts::PI / (a0 - a1);
                let x = k * (a - a1);
                match order {
                    0 => amplitude * x.sin(),
                    1 => amplitude * k * x.cos(),
                    _ => -amplitude * k * k * x.sin(),
                }
            }
            RProfile::Tabulated { knots } => spline_eval(knots, a, order)?,
            RProfile::Bump { center, halfwidth, amplitude } => {
                let (v, d1, d2) = bump(a, *center, *halfwidth, *amplitude);
                match order {
                    0 => v,
                    1 => d1,
                    _ => d2,
                }
            }
            RProfile::Sum { terms } => {
                let mut acc = 0.0;
                for t in terms {
                    acc += t.eval(a, order)?;
                }
                acc
            }
            RProfile::Scaled { factor, inner } => factor * inner.eval(a, order)?,
            RProfile::ReebShift { ramp } => match order {
                0 => -ramp.exp_moment_tail(a),
                // Θ'(a) = e^a θ'(a)
                1 => a.exp() * ramp.deriv(a),
                _ => a.exp() * (ramp.deriv(a) + ramp.deriv2(a)),
            },
        })
    }

    pub fn value(&self, a: f64) -> f64 {
        self.eval(a, 0).expect("orders 0..=2 are always supported")
    }

    pub fn deriv(&self, a: f64) -> f64 {
        self.eval(a, 1).expect("orders 0..=2 are always supported")
    }
}

fn bump(a: f64, center: f64, halfwidth: f64, amplitude: f64) -> (f64, f64, f64) {
    let u = (a - center) / halfwidth;
    if u.abs() >= 1.0 {
        return (0.0, 0.0, 0.0);
    }
    let d = 1.0 - u * u;
    let v = amplitude * (-1.0 / d).exp();
    let l1 = -2.0 * u / (d * d);
    let l2 = -2.0 / (d * d) - 8.0 * u * u / (d * d * d);
    (v, v * l1 / halfwidth, v * (l1 * l1 + l2) / (halfwidth * halfwidth))
}

/// Natural cubic spline evaluation with first and second derivatives.
fn spline_eval(knots: &[(f64, f64)], a: f64, order: u8) -> Result<f64, ProfileError> {
    let n = knots.len();
    if n < 2 {
        return Err(ProfileError::BadSpline);
    }
    for w in knots.windows(2) {
        if w[1].0 <= w[0].0 {
            return Err(ProfileError::BadSpline);
        }
    }
    // Second derivatives at the knots (natural boundary conditions) by the
    // standard tridiagonal solve.
    let mut m = vec![0.0; n];
    if n > 2 {
        let mut sub = vec![0.0; n - 2];
        let mut diag = vec![0.0; n - 2];
        let mut sup = vec![0.0; n - 2];
        let mut rhs = vec![0.0; n - 2];
        for i in 1..n - 1 {
            let h0 = knots[i].0 - knots[i - 1].0;
            let h1 = knots[i + 1].0 - knots[i].0;
            sub[i - 1] = h0;
            diag[i - 1] = 2.0 * (h0 + h1);
            sup[i - 1] = h1;
            rhs[i - 1] = 6.0
                * ((knots[i + 1].1 - knots[i].1) / h1 - (knots[i].1 - knots[i - 1].1) / h0);
        }
        for i in 1..n - 2 {
            let w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        let mut interior = vec![0.0; n - 2];
        interior[n - 3] = rhs[n - 3] / diag[n - 3];
        for i in (0..n - 3).rev() {
            interior[i] = (rhs[i] - sup[i] * interior[i + 1]) / diag[i];
        }
        m[1..n - 1].copy_from_slice(&interior);
    }
    let idx = match knots.binary_search_by(|k| k.0.partial_cmp(&a).unwrap()) {
        Ok(i) => i.min(n - 2),
        Err(i) => i.clamp(1, n - 1) - 1,
    };
    let (x0, y0) = knots[idx];
    let (x1, y1) = knots[idx + 1];
    let h = x1 - x0;
    let t = a - x0;
    let (m0, m1) = (m[idx], m[idx + 1]);
    Ok(match order {
        0 => {
            let c = (y1 - y0) / h - h / 6.0 * (m1 + 2.0 * m0);
            y0 + c * t + 0.5 * m0 * t * t + (m1 - m0) / (6.0 * h) * t * t * t
        }
        1 => {
            let c = (y1 - y0) / h - h / 6.0 * (m1 + 2.0 * m0);
            c + m0 * t + 0.5 * (m1 - m0) / h * t * t
        }
        _ => m0 + (m1 - m0) / h * t,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn linear_and_sin_bridge() {
        let l = RProfile::linear(2.0, -1.0);
        assert_eq!(l.value(0.5), 0.0);
        assert_eq!(l.deriv(3.0), 2.0);

        let s = RProfile::sin_bridge(1.5, 0.0, 1.0);
        assert_abs_diff_eq!(s.value(0.5), 1.5, epsilon = 1e-15);
        assert_abs_diff_eq!(s.value(0.0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.deriv(0.5), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn spline_interpolates_knots() {
        let knots: Vec<(f64, f64)> =
            (0..=6).map(|i| (i as f64 / 6.0, (i as f64 / 2.0).sin())).collect();
        let t = RProfile::Tabulated { knots: knots.clone() };
        for (x, y) in &knots {
            assert_abs_diff_eq!(t.value(*x), *y, epsilon = 1e-12);
        }
        // derivative consistent with finite differences of the spline itself
        let h = 1e-6;
        let x = 0.41;
        let fd = (t.value(x + h) - t.value(x - h)) / (2.0 * h);
        assert_abs_diff_eq!(t.deriv(x), fd, epsilon = 1e-6);
    }

    #[test]
    fn reeb_shift_matches_quadrature() {
        let ramp = PolyRamp::new(0.0, 0.5, 0.2, 0.8);
        let p = RProfile::ReebShift { ramp: ramp.clone() };
        let q = crate::numerics::Quadrature::default();
        for &a in &[0.0, 0.3, 0.6, 0.9] {
            let theta =
                crate::numerics::integrate(|t| t.exp() * ramp.deriv(t), a, 1.0, &q).unwrap();
            assert_abs_diff_eq!(p.value(a), -theta.value, epsilon = 1e-10);
        }
        let a = 0.45;
        assert_abs_diff_eq!(p.deriv(a), a.exp() * ramp.deriv(a), epsilon = 1e-12);
    }

    #[test]
    fn bump_vanishes_outside_support() {
        let b = RProfile::bump(0.5, 0.1, 2.0);
        assert_eq!(b.value(0.39), 0.0);
        assert_eq!(b.value(0.61), 0.0);
        assert!(b.value(0.5) > 0.0);
        let h = 1e-7;
        let fd = (b.value(0.52 + h) - b.value(0.52 - h)) / (2.0 * h);
        assert_abs_diff_eq!(b.deriv(0.52), fd, epsilon = 1e-5);
    }
}
