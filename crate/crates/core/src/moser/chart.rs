//! Flat-coordinate charts for the three model contactizations. The Moser
//! machinery is generic over this trait: each chart provides its Liouville
//! form, Liouville vector field and the Hamiltonian fields of radially
//! symmetric functions.

/// Point of a contactization `ℝ × V` in flat coordinates `(b, v)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmbientPoint {
    pub b: f64,
    pub v: Vec<f64>,
}

impl AmbientPoint {
    pub fn new(b: f64, v: Vec<f64>) -> Self {
        Self { b, v }
    }

    pub fn flat(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(1 + self.v.len());
        out.push(self.b);
        out.extend_from_slice(&self.v);
        out
    }

    pub fn from_flat(x: &[f64]) -> Self {
        Self { b: x[0], v: x[1..].to_vec() }
    }
}

/// Radial derivative data of a symmetric function, carried in the form the
/// charts need: the plain derivative and the quotient `u'(r)/r`, which the
/// squared-variable profile representation evaluates smoothly through 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct RadialDeriv {
    pub d1: f64,
    pub d1_over_r: f64,
}

/// Chart of the symplectic factor `V` with its radial structure.
pub trait RadialChart {
    fn dim_v(&self) -> usize;

    /// The symmetry coordinate: `|z|`, `|p|`, or `a`.
    fn radial(&self, v: &[f64]) -> f64;

    /// `dr(w)` at `v`.
    fn dr(&self, v: &[f64], w: &[f64]) -> f64;

    /// `λ_v(w)`.
    fn lambda(&self, v: &[f64], w: &[f64]) -> f64;

    /// Liouville vector field, the `dλ`-dual of `λ`.
    fn y_lambda(&self, v: &[f64]) -> Vec<f64>;

    /// Hamiltonian vector field of a symmetric function with the given
    /// radial derivative, `i_{X_u} dλ = −du`.
    fn x_radial(&self, v: &[f64], d: RadialDeriv) -> Vec<f64>;

    /// Basis of the tangent space of `V` at `v` (orthonormal for embedded
    /// charts, canonical otherwise).
    fn tangent_basis(&self, v: &[f64]) -> Vec<Vec<f64>>;

    /// Project a near-miss back onto the chart's constraint manifold.
    fn renormalize(&self, _v: &mut [f64]) {}
}

/// Darboux space factor `ℝ^{2n}` with `λ = ½(x dy − y dx)`;
/// coordinates are `[x_1..x_n, y_1..y_n]`.
#[derive(Debug, Clone, Copy)]
pub struct EuclidChart {
    pub n: usize,
}

impl RadialChart for EuclidChart {
    fn dim_v(&self) -> usize {
        2 * self.n
    }

    fn radial(&self, v: &[f64]) -> f64 {
        v.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn dr(&self, v: &[f64], w: &[f64]) -> f64 {
        let r = self.radial(v);
        if r == 0.0 {
            return 0.0;
        }
        v.iter().zip(w).map(|(a, b)| a * b).sum::<f64>() / r
    }

    fn lambda(&self, v: &[f64], w: &[f64]) -> f64 {
        let n = self.n;
        let mut acc = 0.0;
        for i in 0..n {
            acc += v[i] * w[n + i] - v[n + i] * w[i];
        }
        0.5 * acc
    }

    fn y_lambda(&self, v: &[f64]) -> Vec<f64> {
        v.iter().map(|c| 0.5 * c).collect()
    }

    fn x_radial(&self, v: &[f64], d: RadialDeriv) -> Vec<f64> {
        // X_u = (u'(r)/r) (−y ∂x + x ∂y)
        let n = self.n;
        let mut out = vec![0.0; 2 * n];
        for i in 0..n {
            out[i] = -d.d1_over_r * v[n + i];
            out[n + i] = d.d1_over_r * v[i];
        }
        out
    }

    fn tangent_basis(&self, v: &[f64]) -> Vec<Vec<f64>> {
        canonical_basis(v.len())
    }
}

fn canonical_basis(dim: usize) -> Vec<Vec<f64>> {
    (0..dim)
        .map(|i| {
            let mut e = vec![0.0; dim];
            e[i] = 1.0;
            e
        })
        .collect()
}

/// Cotangent bundle of the round sphere `Sⁿ ⊂ ℝ^{n+1}`, realized as
/// `{(q, p) : |q| = 1, q·p = 0}` with coordinates `[q, p]` and `λ = p dq`.
#[derive(Debug, Clone, Copy)]
pub struct SphereChart {
    pub n: usize,
}

impl SphereChart {
    pub fn ambient(&self) -> usize {
        self.n + 1
    }

    pub fn split<'a>(&self, v: &'a [f64]) -> (&'a [f64], &'a [f64]) {
        v.split_at(self.ambient())
    }
}

impl RadialChart for SphereChart {
    fn dim_v(&self) -> usize {
        2 * self.ambient()
    }

    fn radial(&self, v: &[f64]) -> f64 {
        let (_, p) = self.split(v);
        p.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn dr(&self, v: &[f64], w: &[f64]) -> f64 {
        let m = self.ambient();
        let r = self.radial(v);
        if r == 0.0 {
            return 0.0;
        }
        let (_, p) = self.split(v);
        p.iter().zip(&w[m..]).map(|(a, b)| a * b).sum::<f64>() / r
    }

    fn lambda(&self, v: &[f64], w: &[f64]) -> f64 {
        let m = self.ambient();
        let (_, p) = self.split(v);
        p.iter().zip(&w[..m]).map(|(a, b)| a * b).sum()
    }

    fn y_lambda(&self, v: &[f64]) -> Vec<f64> {
        let m = self.ambient();
        let mut out = vec![0.0; 2 * m];
        out[m..].copy_from_slice(&v[m..]);
        out
    }

    fn x_radial(&self, v: &[f64], d: RadialDeriv) -> Vec<f64> {
        // X_u = (u'/r) X_ϱ with X_ϱ(q, p) = (p, −|p|² q).
        let m = self.ambient();
        let (q, p) = self.split(v);
        let p2 = p.iter().map(|c| c * c).sum::<f64>();
        let mut out = vec![0.0; 2 * m];
        for i in 0..m {
            out[i] = d.d1_over_r * p[i];
            out[m + i] = -d.d1_over_r * p2 * q[i];
        }
        out
    }

    fn tangent_basis(&self, v: &[f64]) -> Vec<Vec<f64>> {
        let m = self.ambient();
        let (q, p) = self.split(v);
        // Orthonormal basis u_1..u_n of q^⊥ by Gram–Schmidt over the
        // canonical vectors, skipping the one most parallel to q.
        let mut frame: Vec<Vec<f64>> = Vec::with_capacity(self.n);
        let mut skip = 0;
        for (i, c) in q.iter().enumerate() {
            if c.abs() > q[skip].abs() {
                skip = i;
            }
        }
        for i in 0..m {
            if i == skip {
                continue;
            }
            let mut u = vec![0.0; m];
            u[i] = 1.0;
            let qu: f64 = q.iter().zip(&u).map(|(a, b)| a * b).sum();
            for (uj, qj) in u.iter_mut().zip(q) {
                *uj -= qu * qj;
            }
            for prev in &frame {
                let d: f64 = prev.iter().zip(&u).map(|(a, b)| a * b).sum();
                for (uj, pj) in u.iter_mut().zip(prev) {
                    *uj -= d * pj;
                }
            }
            let norm = u.iter().map(|c| c * c).sum::<f64>().sqrt();
            for uj in u.iter_mut() {
                *uj /= norm;
            }
            frame.push(u);
        }
        // Tangent vectors: (u_i, −(p·u_i) q) and (0, u_i).
        let mut basis = Vec::with_capacity(2 * self.n);
        for u in &frame {
            let pu: f64 = p.iter().zip(u).map(|(a, b)| a * b).sum();
            let mut e = vec![0.0; 2 * m];
            e[..m].copy_from_slice(u);
            for i in 0..m {
                e[m + i] = -pu * q[i];
            }
            let norm = e.iter().map(|c| c * c).sum::<f64>().sqrt();
            for c in e.iter_mut() {
                *c /= norm;
            }
            basis.push(e);
        }
        for u in &frame {
            let mut e = vec![0.0; 2 * m];
            e[m..].copy_from_slice(u);
            basis.push(e);
        }
        basis
    }

    fn renormalize(&self, v: &mut [f64]) {
        let m = self.ambient();
        let qn = v[..m].iter().map(|c| c * c).sum::<f64>().sqrt();
        for c in v[..m].iter_mut() {
            *c /= qn;
        }
        let qp: f64 = v[..m].iter().zip(&v[m..]).map(|(a, b)| a * b).sum();
        for i in 0..m {
            v[m + i] -= qp * v[i];
        }
    }
}

/// Cotangent bundle of the flat torus `Tⁿ = ℝⁿ/ℤⁿ`, coordinates `[q, p]`
/// with `q` taken mod 1 only at the reporting boundary.
#[derive(Debug, Clone, Copy)]
pub struct TorusChart {
    pub n: usize,
}

impl RadialChart for TorusChart {
    fn dim_v(&self) -> usize {
        2 * self.n
    }

    fn radial(&self, v: &[f64]) -> f64 {
        v[self.n..].iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn dr(&self, v: &[f64], w: &[f64]) -> f64 {
        let n = self.n;
        let r = self.radial(v);
        if r == 0.0 {
            return 0.0;
        }
        v[n..].iter().zip(&w[n..]).map(|(a, b)| a * b).sum::<f64>() / r
    }

    fn lambda(&self, v: &[f64], w: &[f64]) -> f64 {
        let n = self.n;
        v[n..].iter().zip(&w[..n]).map(|(a, b)| a * b).sum()
    }

    fn y_lambda(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; 2 * n];
        out[n..].copy_from_slice(&v[n..]);
        out
    }

    fn x_radial(&self, v: &[f64], d: RadialDeriv) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; 2 * n];
        for i in 0..n {
            out[i] = d.d1_over_r * v[n + i];
        }
        out
    }

    fn tangent_basis(&self, v: &[f64]) -> Vec<Vec<f64>> {
        canonical_basis(v.len())
    }
}

/// Symplectization factor `ℝ × M` for `M` the circle: coordinates `[a, w]`
/// with `λ = e^a dw`; the symmetry coordinate is `a` itself.
#[derive(Debug, Clone, Copy)]
pub struct CircleChart;

impl RadialChart for CircleChart {
    fn dim_v(&self) -> usize {
        2
    }

    fn radial(&self, v: &[f64]) -> f64 {
        v[0]
    }

    fn dr(&self, _v: &[f64], w: &[f64]) -> f64 {
        w[0]
    }

    fn lambda(&self, v: &[f64], w: &[f64]) -> f64 {
        v[0].exp() * w[1]
    }

    fn y_lambda(&self, _v: &[f64]) -> Vec<f64> {
        vec![1.0, 0.0]
    }

    fn x_radial(&self, v: &[f64], d: RadialDeriv) -> Vec<f64> {
        vec![0.0, d.d1 * (-v[0]).exp()]
    }

    fn tangent_basis(&self, v: &[f64]) -> Vec<Vec<f64>> {
        canonical_basis(v.len())
    }
}
