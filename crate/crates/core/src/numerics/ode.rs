//! Fixed-step RK4 and adaptive Dormand–Prince RK45 integrators on flat
//! state vectors. Geometry kernels pack and unpack their own coordinates.

use super::NumericsError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeMethod {
    /// Classic fixed-step fourth-order Runge–Kutta.
    Rk4,
    /// Dormand–Prince 5(4) with PI-free step control.
    Rk45,
}

#[derive(Debug, Clone, Copy)]
pub struct OdeControl {
    pub method: OdeMethod,
    /// Step size for [`OdeMethod::Rk4`]; initial step guess for RK45.
    pub step: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_steps: usize,
}

impl Default for OdeControl {
    fn default() -> Self {
        Self {
            method: OdeMethod::Rk45,
            step: 1e-2,
            abs_tol: 1e-8,
            rel_tol: 1e-8,
            max_steps: 1_000_000,
        }
    }
}

impl OdeControl {
    pub fn rk4_fixed(step: f64) -> Self {
        Self { method: OdeMethod::Rk4, step, ..Self::default() }
    }

    pub fn rk45(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: tol, ..Self::default() }
    }

    fn validate(&self) -> Result<(), NumericsError> {
        let ok = match self.method {
            OdeMethod::Rk4 => self.step > 0.0,
            OdeMethod::Rk45 => self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.step > 0.0,
        };
        if ok && self.max_steps > 0 {
            Ok(())
        } else {
            Err(NumericsError::BadControl("invalid ODE control parameters".into()))
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct StepStats {
    pub steps: usize,
    pub rejections: usize,
}

/// Time series of states, endpoints included.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    pub step_stats: StepStats,
}

impl Trajectory {
    pub fn final_state(&self) -> &[f64] {
        self.states.last().expect("trajectory holds both endpoints")
    }
}

fn check_finite(y: &[f64], t: f64) -> Result<(), NumericsError> {
    if y.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(NumericsError::NonFiniteState { t })
    }
}

/// Integrate `dy/dt = field(t, y)` from `t0` to `t1` (either order).
pub fn solve_ode<F>(
    field: F,
    y0: &[f64],
    t0: f64,
    t1: f64,
    ctl: &OdeControl,
) -> Result<Trajectory, NumericsError>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    ctl.validate()?;
    if t0 == t1 {
        return Err(NumericsError::BadControl("t0 and t1 must differ".into()));
    }
    check_finite(y0, t0)?;
    match ctl.method {
        OdeMethod::Rk4 => rk4_fixed(&field, y0, t0, t1, ctl),
        OdeMethod::Rk45 => rk45_adaptive(&field, y0, t0, t1, ctl),
    }
}

fn axpy(y: &[f64], scale: f64, k: &[f64]) -> Vec<f64> {
    y.iter().zip(k).map(|(a, b)| a + scale * b).collect()
}

fn rk4_fixed<F>(
    field: &F,
    y0: &[f64],
    t0: f64,
    t1: f64,
    ctl: &OdeControl,
) -> Result<Trajectory, NumericsError>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    let span = t1 - t0;
    let n_steps = (span.abs() / ctl.step).ceil().max(1.0) as usize;
    if n_steps > ctl.max_steps {
        return Err(NumericsError::MaxStepsExceeded { max: ctl.max_steps });
    }
    let h = span / n_steps as f64;

    let mut times = Vec::with_capacity(n_steps + 1);
    let mut states = Vec::with_capacity(n_steps + 1);
    times.push(t0);
    states.push(y0.to_vec());

    let mut t = t0;
    let mut y = y0.to_vec();
    for i in 0..n_steps {
        let k1 = field(t, &y);
        let k2 = field(t + 0.5 * h, &axpy(&y, 0.5 * h, &k1));
        let k3 = field(t + 0.5 * h, &axpy(&y, 0.5 * h, &k2));
        let k4 = field(t + h, &axpy(&y, h, &k3));
        for (j, yj) in y.iter_mut().enumerate() {
            *yj += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
        t = t0 + (i + 1) as f64 * h;
        check_finite(&y, t)?;
        times.push(t);
        states.push(y.clone());
    }
    // Pin the final time exactly.
    *times.last_mut().unwrap() = t1;

    Ok(Trajectory { times, states, step_stats: StepStats { steps: n_steps, rejections: 0 } })
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// Difference between the 5th- and 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

fn rk45_adaptive<F>(
    field: &F,
    y0: &[f64],
    t0: f64,
    t1: f64,
    ctl: &OdeControl,
) -> Result<Trajectory, NumericsError>
where
    F: Fn(f64, &[f64]) -> Vec<f64>,
{
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let dim = y0.len();

    let mut h = ctl.step.min(span) * dir;
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k1 = field(t, &y);

    let mut times = vec![t0];
    let mut states = vec![y.clone()];
    let mut stats = StepStats::default();

    while (t - t1) * dir < 0.0 {
        if stats.steps + stats.rejections >= ctl.max_steps {
            return Err(NumericsError::MaxStepsExceeded { max: ctl.max_steps });
        }
        // Do not overshoot the endpoint.
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }

        let mut k = vec![k1.clone()];
        for stage in 0..6 {
            let mut ys = y.clone();
            for (s, ks) in k.iter().enumerate() {
                let a = A[stage][s];
                if a != 0.0 {
                    for j in 0..dim {
                        ys[j] += h * a * ks[j];
                    }
                }
            }
            k.push(field(t + C[stage] * h, &ys));
        }
        // k[6] is f(t+h, y5) by the FSAL structure: A[5] row are the 5th-order weights.
        let mut y_new = y.clone();
        for (s, ks) in k.iter().take(6).enumerate() {
            let a = A[5][s];
            if a != 0.0 {
                for j in 0..dim {
                    y_new[j] += h * a * ks[j];
                }
            }
        }

        let mut err_sq = 0.0;
        for j in 0..dim {
            let mut e = 0.0;
            for (s, ks) in k.iter().enumerate() {
                e += E[s] * ks[j];
            }
            e *= h;
            let scale = ctl.abs_tol + ctl.rel_tol * y[j].abs().max(y_new[j].abs());
            err_sq += (e / scale) * (e / scale);
        }
        let err_norm = (err_sq / dim as f64).sqrt();

        if err_norm <= 1.0 {
            t += h;
            y = y_new;
            check_finite(&y, t)?;
            k1 = k.pop().expect("seven stages");
            times.push(t);
            states.push(y.clone());
            stats.steps += 1;
            let fac = (0.9 * err_norm.max(1e-10).powf(-0.2)).clamp(0.2, 5.0);
            h *= fac;
        } else {
            stats.rejections += 1;
            let fac = (0.9 * err_norm.powf(-0.2)).clamp(0.2, 1.0);
            h *= fac;
            if h.abs() < 1e-14 * span.max(1.0) {
                return Err(NumericsError::ToleranceNotMet {
                    requested: ctl.abs_tol,
                    achieved: err_norm * ctl.abs_tol,
                });
            }
        }
    }
    *times.last_mut().unwrap() = t1;

    Ok(Trajectory { times, states, step_stats: stats })
}
