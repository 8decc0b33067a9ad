//! Adaptive Gauss–Kronrod 7-15 quadrature with interval bisection.
//!
//! Endpoint singularities of inverse-square-root type are handled by the
//! substitution `τ = b − u²` (resp. `τ = a + u²`) when the caller flags a
//! soft endpoint; the Kronrod nodes are open, so the singular point itself
//! is never sampled.

use super::NumericsError;

/// Tolerances and subdivision budget for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        // 1e-10 leaves two orders of headroom under the invariant thresholds.
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_depth: 60,
        }
    }
}

impl Quadrature {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: tol,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<(), NumericsError> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || self.max_depth < 1 {
            return Err(NumericsError::BadControl(
                "quadrature tolerances must be positive and max_depth >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Integral value together with its error bound.
#[derive(Debug, Clone, Copy)]
pub struct Estimate {
    pub value: f64,
    pub err_est: f64,
}

/// Which endpoint carries an integrable `(c − τ)^{-1/2}` singularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoftEndpoint {
    None,
    Lower,
    Upper,
    Both,
}

// 15-point Kronrod abscissae (positive half), QUADPACK qk15.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

// Kronrod weights.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_21,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

// 7-point Gauss weights (nodes are XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_98,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

/// One Gauss–Kronrod 7-15 panel; returns (kronrod, |kronrod − gauss|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64), NumericsError> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64, NumericsError> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(NumericsError::NonFiniteSample { x })
        }
    };

    let fc = eval(center)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    kronrod *= half;
    gauss *= half;
    let err = (kronrod - gauss).abs();
    // QUADPACK-style sharpening of the raw difference.
    let err = if err > 0.0 {
        err.min(err * (200.0 * err / kronrod.abs().max(1e-300)).sqrt().min(1.0)).max(err * 1e-3)
    } else {
        0.0
    };
    Ok((kronrod, err))
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
    depth: u32,
}

/// Adaptive integral of `f` over `[a, b]` (either orientation).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    q: &Quadrature,
) -> Result<Estimate, NumericsError> {
    q.validate()?;
    if a == b {
        return Ok(Estimate { value: 0.0, err_est: 0.0 });
    }
    if a > b {
        let e = integrate(f, b, a, q)?;
        return Ok(Estimate { value: -e.value, err_est: e.err_est });
    }

    let (v, e) = gk15(&f, a, b)?;
    let mut panels = vec![Panel { a, b, value: v, err: e, depth: 0 }];

    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err: f64 = panels.iter().map(|p| p.err).sum();
        let tol = q.abs_tol.max(q.rel_tol * total.abs());
        if err <= tol {
            return Ok(Estimate { value: total, err_est: err });
        }

        // Split the worst panel.
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).expect("finite errors"))
            .expect("non-empty panel list");
        let p = panels.swap_remove(worst);
        if p.depth >= q.max_depth {
            return Err(NumericsError::ToleranceNotMet { requested: tol, achieved: err });
        }
        let mid = 0.5 * (p.a + p.b);
        let (v1, e1) = gk15(&f, p.a, mid)?;
        let (v2, e2) = gk15(&f, mid, p.b)?;
        panels.push(Panel { a: p.a, b: mid, value: v1, err: e1, depth: p.depth + 1 });
        panels.push(Panel { a: mid, b: p.b, value: v2, err: e2, depth: p.depth + 1 });
    }
}

/// Adaptive integral with inverse-square-root endpoint handling.
///
/// A soft upper endpoint applies `τ = b − u²`, so that
/// `∫_a^b f(τ) dτ = ∫_0^√(b−a) 2u f(b − u²) du`; the lower case is mirrored.
pub fn integrate_soft<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    soft: SoftEndpoint,
    q: &Quadrature,
) -> Result<Estimate, NumericsError> {
    if a == b {
        return Ok(Estimate { value: 0.0, err_est: 0.0 });
    }
    if a > b {
        let e = integrate_soft(f, b, a, soft.flip(), q)?;
        return Ok(Estimate { value: -e.value, err_est: e.err_est });
    }
    match soft {
        SoftEndpoint::None => integrate(f, a, b, q),
        SoftEndpoint::Upper => {
            let len = b - a;
            integrate(|u| 2.0 * u * f(b - u * u), 0.0, len.sqrt(), q)
        }
        SoftEndpoint::Lower => {
            let len = b - a;
            integrate(|u| 2.0 * u * f(a + u * u), 0.0, len.sqrt(), q)
        }
        SoftEndpoint::Both => {
            let mid = 0.5 * (a + b);
            let lo = integrate_soft(&f, a, mid, SoftEndpoint::Lower, q)?;
            let hi = integrate_soft(&f, mid, b, SoftEndpoint::Upper, q)?;
            Ok(Estimate { value: lo.value + hi.value, err_est: lo.err_est + hi.err_est })
        }
    }
}

impl SoftEndpoint {
    fn flip(self) -> Self {
        match self {
            SoftEndpoint::Lower => SoftEndpoint::Upper,
            SoftEndpoint::Upper => SoftEndpoint::Lower,
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn arctan_pi() {
        let q = Quadrature::default();
        let e = integrate(|x| 4.0 / (1.0 + x * x), 0.0, 1.0, &q).unwrap();
        assert_abs_diff_eq!(e.value, std::f64::consts::PI, epsilon = 1e-12);
        assert!(e.err_est <= 1e-10);
    }

    #[test]
    fn zero_integrand() {
        let q = Quadrature::default();
        let e = integrate(|_| 0.0, -3.0, 7.5, &q).unwrap();
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn arcsin_endpoint_singularity() {
        let q = Quadrature::default();
        let e = integrate_soft(
            |t| 1.0 / (1.0 - t * t).sqrt(),
            0.0,
            1.0,
            SoftEndpoint::Upper,
            &q,
        )
        .unwrap();
        assert_abs_diff_eq!(e.value, std::f64::consts::FRAC_PI_2, epsilon = 1e-10);
    }

    #[test]
    fn reversed_interval_negates() {
        let q = Quadrature::default();
        let e = integrate(|x| x * x, 1.0, 0.0, &q).unwrap();
        assert_abs_diff_eq!(e.value, -1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn non_finite_sample_is_reported() {
        let q = Quadrature::default();
        let r = integrate(|x| 1.0 / x, 0.0, 1.0, &q);
        match r {
            Err(NumericsError::NonFiniteSample { .. }) | Err(NumericsError::ToleranceNotMet { .. }) => {}
            other => panic!("expected failure, got {:?}", other.map(|e| e.value)),
        }
    }

    #[test]
    fn tolerance_not_met_on_hard_singularity() {
        let q = Quadrature { abs_tol: 1e-14, rel_tol: 1e-14, max_depth: 8 };
        let r = integrate(|x| (1.0 - x).abs().powf(-0.5), 0.0, 0.999_999, &q);
        assert!(matches!(r, Err(NumericsError::ToleranceNotMet { .. })));
    }
}
