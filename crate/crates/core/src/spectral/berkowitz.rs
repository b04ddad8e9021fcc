use num_traits::{One, Zero};

use super::{CharPoly, HermitianMatrix};
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::Scalar;

/// Characteristic polynomial `det(λI − H)` by Berkowitz's division-free
/// recurrence, carried out exactly in `Z[ω]`.
///
/// For each leading principal block `[[A, c], [r, a]]` the polynomial of the
/// block is the lower-triangular Toeplitz matrix with first column
/// `(1, −a, −rc, −rAc, −rA²c, …)` applied to the polynomial of `A`.
pub fn char_poly_det<T: Scalar>(h: &HermitianMatrix<T>) -> Result<CharPoly<T>> {
    let n = h.order();
    let mut poly: Vec<EisensteinInt<T>> = vec![EisensteinInt::one()];
    for k in 0..n {
        // column above the new diagonal entry and row to its left
        let col: Vec<_> = (0..k).map(|i| h.get(i, k).clone()).collect();
        let row: Vec<_> = (0..k).map(|j| h.get(k, j).clone()).collect();

        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(EisensteinInt::one());
        toeplitz.push(-h.get(k, k).clone());
        let mut power = col; // A^j c
        for _ in 0..k {
            let rv: EisensteinInt<T> = row.iter().zip(&power).map(|(r, p)| r * p).sum();
            toeplitz.push(-rv);
            power = (0..k).map(|i| (0..k).map(|j| h.get(i, j) * &power[j]).sum()).collect();
        }

        let mut next = vec![EisensteinInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * p;
            }
        }
        poly = next;
    }

    let coeffs = poly
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_real() {
                Ok(c.a)
            } else {
                Err(Error::Internal(format!("coefficient c_{i} = {c} is not real")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CharPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::parse_mmg;
    use crate::spectral::hermitian_matrix;
    use num_bigint::BigInt;

    fn det_poly(text: &str) -> String {
        let m = parse_mmg(&format!("mmg 1\n{text}")).unwrap();
        char_poly_det(&hermitian_matrix::<BigInt>(&m)).unwrap().to_string()
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(det_poly("vertices 3\ne 0 1\ne 1 2\ne 0 2\n"), "1 0 -3 -2");
        assert_eq!(det_poly("vertices 3\na 0 1\na 1 2\na 2 0\n"), "1 0 -3 2");
        assert_eq!(det_poly("vertices 1\n"), "1 0");
        assert_eq!(det_poly("vertices 2\ne 0 1\ne 0 1\n"), "1 0 -4");
        assert_eq!(det_poly("vertices 2\ne 0 1\na 0 1\n"), "1 0 -3");
        // disconnected: product of the parts
        assert_eq!(det_poly("vertices 4\ne 0 1\ne 2 3\n"), "1 0 -2 0 1");
    }

    /// Independent check: cofactor expansion of det(λI − H) for small H,
    /// evaluated at integer λ and compared with the polynomial.
    #[test]
    fn agrees_with_cofactor_expansion() {
        fn det(m: &[Vec<EisensteinInt<i64>>]) -> EisensteinInt<i64> {
            let n = m.len();
            if n == 0 {
                return EisensteinInt::one();
            }
            let mut acc = EisensteinInt::zero();
            for j in 0..n {
                let minor: Vec<Vec<_>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }

        let m = parse_mmg("mmg 1\nvertices 4\ne 0 1\na 1 2\na 1 2\ne 1 2\na 3 2\ne 0 3\na 0 2\n").unwrap();
        let h = hermitian_matrix::<i64>(&m);
        let p = char_poly_det(&h).unwrap();
        for lambda in -3i64..=3 {
            let rows: Vec<Vec<_>> = (0..4)
                .map(|u| {
                    (0..4)
                        .map(|v| {
                            let d = if u == v {
                                EisensteinInt::from_int(lambda)
                            } else {
                                EisensteinInt::zero()
                            };
                            d - h.get(u, v).clone()
                        })
                        .collect()
                })
                .collect();
            let value = p.coeffs().iter().fold(0i64, |acc, c| acc * lambda + c);
            assert_eq!(det(&rows), EisensteinInt::from_int(value), "λ = {lambda}");
        }
    }
}
