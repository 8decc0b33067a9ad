//! Central-difference Jacobians and Hessians, used by the pullback
//! verifiers to approximate tangent maps.

use super::NumericsError;

/// Step balancing truncation against rounding for first derivatives.
pub fn jacobian_step(scale: f64) -> f64 {
    f64::EPSILON.powf(1.0 / 3.0) * scale.abs().max(1.0)
}

/// Step for second derivatives.
pub fn hessian_step(scale: f64) -> f64 {
    f64::EPSILON.powf(1.0 / 4.0) * scale.abs().max(1.0)
}

fn finite_or_err(v: f64) -> Result<f64, NumericsError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(NumericsError::NonFiniteSample { x: v })
    }
}

/// Central-difference Jacobian of `map` at `x`; row `i`, column `j` holds
/// `∂ map_i / ∂ x_j`, entrywise error `O(h²)`.
pub fn jacobian_fd<F>(map: F, x: &[f64], h: f64) -> Result<Vec<Vec<f64>>, NumericsError>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    if !(h > 0.0) {
        return Err(NumericsError::BadControl("finite-difference step must be positive".into()));
    }
    let n = x.len();
    let mut cols = Vec::with_capacity(n);
    let mut out_dim = None;
    for j in 0..n {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[j] += h;
        xm[j] -= h;
        let fp = map(&xp);
        let fm = map(&xm);
        let m = fp.len();
        *out_dim.get_or_insert(m) = m;
        let col: Result<Vec<f64>, _> = fp
            .iter()
            .zip(&fm)
            .map(|(p, q)| finite_or_err((p - q) / (2.0 * h)))
            .collect();
        cols.push(col?);
    }
    let m = out_dim.unwrap_or(0);
    let mut jac = vec![vec![0.0; n]; m];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            jac[i][j] = *v;
        }
    }
    Ok(jac)
}

/// Symmetric central-difference Hessian of `f` at `x`, error `O(h²)`.
pub fn hessian_fd<F>(f: F, x: &[f64], h: f64) -> Result<Vec<Vec<f64>>, NumericsError>
where
    F: Fn(&[f64]) -> f64,
{
    if !(h > 0.0) {
        return Err(NumericsError::BadControl("finite-difference step must be positive".into()));
    }
    let n = x.len();
    let f0 = finite_or_err(f(x))?;
    let mut hess = vec![vec![0.0; n]; n];

    let eval = |dx: &[(usize, f64)]| -> Result<f64, NumericsError> {
        let mut xs = x.to_vec();
        for &(j, d) in dx {
            xs[j] += d;
        }
        finite_or_err(f(&xs))
    };

    for i in 0..n {
        let fp = eval(&[(i, h)])?;
        let fm = eval(&[(i, -h)])?;
        hess[i][i] = (fp - 2.0 * f0 + fm) / (h * h);
        for j in (i + 1)..n {
            let fpp = eval(&[(i, h), (j, h)])?;
            let fpm = eval(&[(i, h), (j, -h)])?;
            let fmp = eval(&[(i, -h), (j, h)])?;
            let fmm = eval(&[(i, -h), (j, -h)])?;
            let v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    Ok(hess)
}
