//! Profile functions and shapes: the radially symmetric, fibred radially
//! symmetric and ℝ-symmetric sheet data that define vertically convex
//! hypersurfaces, together with the even-factor calculus and divided
//! differences behind their smoothness bookkeeping.

mod profile;
mod rprofile;
mod shape;

pub use profile::Profile;
pub use rprofile::RProfile;
pub use shape::{
    BaseModel, ContactModel, EquivalenceWitness, Shadow, Shape, ShapeReport, Sheet,
};

use crate::numerics::{integrate, NumericsError, Quadrature};

/// Morse divided difference: returns `f_k` with `f(t) − f(0) = t^k f_k(t)`,
/// valid when the derivatives of `f` at 0 vanish up to order `k − 1`.
///
/// Uses the Taylor remainder form
/// `f_k(t) = 1/(k−1)! ∫₀¹ (1−u)^{k−1} f^{(k)}(ut) du`
/// with the k-th derivative taken by central differences, so that
/// `f_k(0) = f^{(k)}(0)/k!` comes out of the same formula.
pub fn divided_difference<F>(
    f: F,
    k: u32,
    q: &Quadrature,
) -> impl Fn(f64) -> Result<f64, NumericsError>
where
    F: Fn(f64) -> f64,
{
    assert!(k >= 1, "divided difference order must be at least 1");
    let factorial: f64 = (1..k).map(|i| i as f64).product();
    move |t: f64| {
        let e = integrate(
            |u| (1.0 - u).powi(k as i32 - 1) * central_derivative(&f, u * t, k),
            0.0,
            1.0,
            q,
        )?;
        Ok(e.value / factorial)
    }
}

/// k-th derivative by central differences (k ≤ 4).
fn central_derivative<F: Fn(f64) -> f64>(f: &F, x: f64, k: u32) -> f64 {
    match k {
        1 => {
            let h = f64::EPSILON.powf(1.0 / 3.0) * x.abs().max(1.0);
            (f(x + h) - f(x - h)) / (2.0 * h)
        }
        2 => {
            let h = f64::EPSILON.powf(1.0 / 4.0) * x.abs().max(1.0);
            (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        }
        3 => {
            let h = f64::EPSILON.powf(1.0 / 5.0) * x.abs().max(1.0);
            (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h)
        }
        4 => {
            let h = f64::EPSILON.powf(1.0 / 6.0) * x.abs().max(1.0);
            (f(x + 2.0 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h))
                / (h * h * h * h)
        }
        _ => panic!("central derivatives implemented for k = 1..=4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn divided_difference_of_square() {
        // f(t) = t² has f₁(t) = t.
        let q = Quadrature::with_tol(1e-11);
        let f1 = divided_difference(|t| t * t, 1, &q);
        assert_abs_diff_eq!(f1(2.0).unwrap(), 2.0, epsilon = 1e-8);
    }

    #[test]
    fn divided_difference_of_sine_at_zero() {
        let q = Quadrature::with_tol(1e-11);
        let f1 = divided_difference(|t| t.sin(), 1, &q);
        assert_abs_diff_eq!(f1(0.0).unwrap(), 1.0, epsilon = 1e-9);
    }

    #[test]
    fn divided_difference_of_cosine_minus_one() {
        // (cos π − 1)/π = −2/π.
        let q = Quadrature::with_tol(1e-11);
        let f1 = divided_difference(|t| t.cos() - 1.0, 1, &q);
        assert_abs_diff_eq!(
            f1(std::f64::consts::PI).unwrap(),
            -2.0 / std::f64::consts::PI,
            epsilon = 1e-8
        );
    }

    #[test]
    fn second_order_matches_half_second_derivative() {
        // f(t) = cos t − 1 has f'(0) = 0 and f₂(0) = f''(0)/2 = −1/2.
        let q = Quadrature::with_tol(1e-10);
        let f2 = divided_difference(|t| t.cos() - 1.0, 2, &q);
        assert_abs_diff_eq!(f2(0.0).unwrap(), -0.5, epsilon = 1e-6);
    }

    #[test]
    fn divided_difference_agrees_with_profile_slope() {
        // (f')₁(0) = f''(0) for the named profiles.
        let q = Quadrature::with_tol(1e-10);
        for p in [
            Profile::cap(1.0),
            Profile::poly_even(&[1.0, -1.0, 1.0]),
            Profile::bump_even(0.5, 0.4, 0.8),
        ] {
            let fp = {
                let p = p.clone();
                move |t: f64| p.eval(t.abs(), 1).map(|v| v * t.signum()).unwrap_or(0.0)
            };
            let d1 = divided_difference(fp, 1, &q);
            assert_abs_diff_eq!(
                d1(0.0).unwrap(),
                p.second_deriv_at_zero(),
                epsilon = 1e-6
            );
        }
    }
}
