use num_complex::Complex;
use num_traits::{Float, Zero};

use super::HermitianMatrix;
use crate::error::{Error, Result};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiOptions {
    /// Convergence when the off-diagonal Frobenius norm drops below
    /// `tolerance_per_row · n`.
    pub tolerance_per_row: f64,
    pub max_sweeps: usize,
    /// Largest imaginary part tolerated on the converged diagonal.
    pub max_imaginary_residue: f64,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions {
            tolerance_per_row: 1e-12,
            max_sweeps: 100,
            max_imaginary_residue: 1e-9,
        }
    }
}

pub fn eigenvalues<F: Float, T: Scalar>(h: &HermitianMatrix<T>) -> Result<Vec<F>> {
    eigenvalues_with(h, JacobiOptions::default())
}

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic two-sided
/// Jacobi rotations.
///
/// Each rotation first turns the pivot `a_pq = |a_pq|e^{iφ}` real by scaling
/// row and column `q` with `e^{∓iφ}`, then annihilates it with a real plane
/// rotation.
pub fn eigenvalues_with<F: Float, T: Scalar>(h: &HermitianMatrix<T>, opts: JacobiOptions) -> Result<Vec<F>> {
    let n = h.order();
    let mut a: Vec<Vec<Complex<F>>> = (0..n)
        .map(|u| (0..n).map(|v| h.get(u, v).to_complex()).collect())
        .collect();

    let per_row = F::from(opts.tolerance_per_row).unwrap();
    let frob = a
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .fold(F::zero(), |s, x| s + x)
        .sqrt();
    // keep the threshold reachable in low precision
    let floor = F::epsilon() * frob * F::from(4.0).unwrap();
    let tol = (per_row * F::from(n.max(1)).unwrap()).max(floor);

    let off_norm = |a: &[Vec<Complex<F>>]| {
        let mut s = F::zero();
        for (p, row) in a.iter().enumerate() {
            for (q, z) in row.iter().enumerate() {
                if p != q {
                    s = s + z.norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) >= tol {
        if sweeps == opts.max_sweeps {
            return Err(Error::Domain(format!(
                "Jacobi iteration did not converge in {sweeps} sweeps"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }

    let residue = F::from(opts.max_imaginary_residue).unwrap();
    let mut values = Vec::with_capacity(n);
    for (i, row) in a.iter().enumerate() {
        let d = row[i];
        if d.im.abs() >= residue {
            return Err(Error::Internal(format!(
                "diagonal entry {i} has imaginary part {:?}",
                d.im.to_f64()
            )));
        }
        values.push(d.re);
    }
    values.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(values)
}

fn rotate<F: Float>(a: &mut [Vec<Complex<F>>], p: usize, q: usize) {
    let g = a[p][q].norm();
    if g.is_zero() {
        return;
    }
    let n = a.len();
    let phase = a[p][q] / g;

    // column q *= ē, row q *= e, making a_pq = g
    for row in a.iter_mut() {
        row[q] = row[q] * phase.conj();
    }
    for x in a[q].iter_mut() {
        *x = *x * phase;
    }

    let two = F::one() + F::one();
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (two * g);
    let t = theta.signum() / (theta.abs() + (theta * theta + F::one()).sqrt());
    let c = F::one() / (t * t + F::one()).sqrt();
    let s = t * c;

    // A ← Jᵀ A J with J = [[c, s], [−s, c]] in the (p, q) plane
    for row in a.iter_mut() {
        let (x, y) = (row[p], row[q]);
        row[p] = x * c - y * s;
        row[q] = x * s + y * c;
    }
    #[allow(clippy::needless_range_loop)] // rows p and q are updated together
    for k in 0..n {
        let (x, y) = (a[p][k], a[q][k]);
        a[p][k] = x * c - y * s;
        a[q][k] = x * s + y * c;
    }
    a[p][q] = Complex::zero();
    a[q][p] = Complex::zero();
    a[p][p] = Complex::new(app - t * g, F::zero());
    a[q][q] = Complex::new(aqq + t * g, F::zero());
}
