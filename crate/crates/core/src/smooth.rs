//! C∞ steps, plateaus and polynomial ramps shared by the profile kinds,
//! the vertical-diffeomorphism bands and the Moser cutoffs.

/// `e^{-1/x}` for `x > 0`, zero otherwise; the basic C∞ germ.
fn germ(x: f64) -> f64 {
    if x > 0.0 {
        (-1.0 / x).exp()
    } else {
        0.0
    }
}

fn germ_d(x: f64) -> f64 {
    if x > 0.0 {
        (-1.0 / x).exp() / (x * x)
    } else {
        0.0
    }
}

/// Smooth step: 0 for `x ≤ 0`, 1 for `x ≥ 1`, strictly increasing between.
pub fn step(x: f64) -> f64 {
    let a = germ(x);
    let b = germ(1.0 - x);
    if a == 0.0 {
        0.0
    } else if b == 0.0 {
        1.0
    } else {
        a / (a + b)
    }
}

/// Derivative of [`step`].
pub fn step_d(x: f64) -> f64 {
    let a = germ(x);
    let b = germ(1.0 - x);
    if a == 0.0 || b == 0.0 {
        0.0
    } else {
        let da = germ_d(x);
        let db = -germ_d(1.0 - x);
        (da * b - a * db) / ((a + b) * (a + b))
    }
}

/// C∞ plateau in one variable: 1 for `|u| ≤ w1`, 0 for `|u| ≥ w2`.
#[derive(Debug, Clone, Copy)]
pub struct Plateau {
    pub w1: f64,
    pub w2: f64,
}

impl Plateau {
    pub fn new(w1: f64, w2: f64) -> Self {
        assert!(0.0 < w1 && w1 < w2, "plateau widths must satisfy 0 < w1 < w2");
        Self { w1, w2 }
    }

    pub fn value(&self, u: f64) -> f64 {
        step((self.w2 - u.abs()) / (self.w2 - self.w1))
    }

    pub fn deriv(&self, u: f64) -> f64 {
        let ramp = self.w2 - self.w1;
        -u.signum() * step_d((self.w2 - u.abs()) / ramp) / ramp
    }

    /// Upper bound for `|deriv|`, used by band-collision checks.
    pub fn max_slope(&self) -> f64 {
        // The C∞ step has maximal slope 2 at x = 1/2.
        2.0 / (self.w2 - self.w1)
    }
}

/// Polynomial with real coefficients, `p(x) = Σ c_k x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<f64>);

impl Poly {
    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn deriv(&self) -> Poly {
        Poly(self.0.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect())
    }

    pub fn antideriv(&self) -> Poly {
        let mut v = vec![0.0];
        v.extend(self.0.iter().enumerate().map(|(k, c)| c / (k + 1) as f64));
        Poly(v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut v = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v)
    }

    pub fn scale(&self, c: f64) -> Poly {
        Poly(self.0.iter().map(|a| a * c).collect())
    }

    /// `∫ e^x p(x) dx = e^x Σ_k (-1)^k p^{(k)}(x)`, evaluated at `x`.
    pub fn exp_antideriv_at(&self, x: f64) -> f64 {
        let mut sum = 0.0;
        let mut p = self.clone();
        let mut sign = 1.0;
        while !p.0.is_empty() {
            sum += sign * p.eval(x);
            p = p.deriv();
            sign = -sign;
        }
        sum * x.exp()
    }
}

/// Polynomial ramp from `value_lo` on `(-∞, lo]` to `value_hi` on `[hi, ∞)`.
///
/// The derivative is the bump `c (x-lo)^m (hi-x)^m` on `[lo, hi]`, zero
/// outside, so the ramp is C^m and all the twist moment integrals
/// (`∫ τ θ'(τ) dτ`, `∫ e^τ θ'(τ) dτ`) stay closed-form.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PolyRamp {
    pub value_lo: f64,
    pub value_hi: f64,
    pub lo: f64,
    pub hi: f64,
    pub order: u32,
}

impl PolyRamp {
    pub fn new(value_lo: f64, value_hi: f64, lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "ramp interval must be non-degenerate");
        Self { value_lo, value_hi, lo, hi, order: 4 }
    }

    /// `(x-lo)^m (hi-x)^m` scaled so the ramp climbs by exactly `value_hi - value_lo`.
    fn deriv_poly(&self) -> Poly {
        let m = self.order as usize;
        let rise = Poly(vec![-self.lo, 1.0]);
        let fall = Poly(vec![self.hi, -1.0]);
        let mut p = Poly(vec![1.0]);
        for _ in 0..m {
            p = p.mul(&rise);
        }
        for _ in 0..m {
            p = p.mul(&fall);
        }
        let anti = p.antideriv();
        let total = anti.eval(self.hi) - anti.eval(self.lo);
        p.scale((self.value_hi - self.value_lo) / total)
    }

    pub fn value(&self, x: f64) -> f64 {
        if x <= self.lo {
            self.value_lo
        } else if x >= self.hi {
            self.value_hi
        } else {
            let anti = self.deriv_poly().antideriv();
            self.value_lo + anti.eval(x) - anti.eval(self.lo)
        }
    }

    pub fn deriv(&self, x: f64) -> f64 {
        if x <= self.lo || x >= self.hi {
            0.0
        } else {
            self.deriv_poly().eval(x)
        }
    }

    pub fn deriv2(&self, x: f64) -> f64 {
        if x <= self.lo || x >= self.hi {
            0.0
        } else {
            self.deriv_poly().deriv().eval(x)
        }
    }

    /// `∫_x^∞ τ θ'(τ) dτ` (the integrand vanishes above `hi`).
    pub fn moment_tail(&self, x: f64) -> f64 {
        if x >= self.hi {
            return 0.0;
        }
        let p = self.deriv_poly().mul(&Poly(vec![0.0, 1.0]));
        let anti = p.antideriv();
        anti.eval(self.hi) - anti.eval(x.max(self.lo))
    }

    /// `∫_x^∞ e^τ θ'(τ) dτ` (the integrand vanishes above `hi`).
    pub fn exp_moment_tail(&self, x: f64) -> f64 {
        if x >= self.hi {
            return 0.0;
        }
        let p = self.deriv_poly();
        p.exp_antideriv_at(self.hi) - p.exp_antideriv_at(x.max(self.lo))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn step_endpoints_and_monotonicity() {
        assert_eq!(step(-0.1), 0.0);
        assert_eq!(step(1.1), 1.0);
        let mut prev = 0.0;
        for i in 0..=100 {
            let v = step(i as f64 / 100.0);
            assert!(v >= prev);
            prev = v;
        }
        assert_abs_diff_eq!(step(0.5), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn step_derivative_matches_finite_difference() {
        let h = 1e-6;
        for &x in &[0.2, 0.5, 0.77] {
            let fd = (step(x + h) - step(x - h)) / (2.0 * h);
            assert_abs_diff_eq!(step_d(x), fd, epsilon = 1e-6);
        }
        assert_eq!(step_d(-1.0), 0.0);
        assert_eq!(step_d(2.0), 0.0);
    }

    #[test]
    fn plateau_shape() {
        let p = Plateau::new(0.5, 1.0);
        assert_eq!(p.value(0.0), 1.0);
        assert_eq!(p.value(0.49), 1.0);
        assert_eq!(p.value(1.01), 0.0);
        assert_eq!(p.value(-1.5), 0.0);
        assert!(p.value(0.75) > 0.0 && p.value(0.75) < 1.0);
        let h = 1e-6;
        let fd = (p.value(0.75 + h) - p.value(0.75 - h)) / (2.0 * h);
        assert_abs_diff_eq!(p.deriv(0.75), fd, epsilon = 1e-5);
        assert!(p.deriv(0.75).abs() <= p.max_slope());
    }

    #[test]
    fn ramp_is_exact_on_plateaus_and_climbs() {
        let r = PolyRamp::new(0.0, 2.5, 0.3, 0.8);
        assert_eq!(r.value(0.0), 0.0);
        assert_eq!(r.value(0.3), 0.0);
        assert_abs_diff_eq!(r.value(0.8), 2.5, epsilon = 1e-12);
        assert_eq!(r.value(1.0), 2.5);
        let h = 1e-6;
        let x = 0.55;
        let fd = (r.value(x + h) - r.value(x - h)) / (2.0 * h);
        assert_abs_diff_eq!(r.deriv(x), fd, epsilon = 1e-6);
    }

    #[test]
    fn moment_tails_match_quadrature() {
        let r = PolyRamp::new(0.0, 1.0, 0.2, 0.9);
        let q = crate::numerics::Quadrature::default();
        let m = crate::numerics::integrate(|t| t * r.deriv(t), 0.4, 0.9, &q).unwrap();
        assert_abs_diff_eq!(r.moment_tail(0.4), m.value, epsilon = 1e-10);
        let em = crate::numerics::integrate(|t| t.exp() * r.deriv(t), 0.4, 0.9, &q).unwrap();
        assert_abs_diff_eq!(r.exp_moment_tail(0.4), em.value, epsilon = 1e-10);
    }

    #[test]
    fn exp_antideriv_identity() {
        // ∫ e^x (x² + 1) dx = e^x (x² - 2x + 3)
        let p = Poly(vec![1.0, 0.0, 1.0]);
        let x = 0.7;
        assert_abs_diff_eq!(
            p.exp_antideriv_at(x),
            x.exp() * (x * x - 2.0 * x + 3.0),
            epsilon = 1e-12
        );
    }
}
