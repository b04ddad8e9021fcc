//! Hermitian adjacency matrices, characteristic polynomials and spectra.
//!
//! The characteristic polynomial is computed exactly in two unrelated ways:
//! a division-free determinant expansion over `Z[ω]` ([`char_poly_det`]) and
//! a sum over Sachs subgraphs ([`char_poly_sachs`]). Floating eigenvalues come
//! from a complex Jacobi iteration and are never used for equality decisions.

mod berkowitz;
mod jacobi;
mod sachs;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Float, Zero};

pub use berkowitz::char_poly_det;
pub use jacobi::{eigenvalues, eigenvalues_with, JacobiOptions};
pub use sachs::{char_poly_sachs, char_poly_sachs_capped, SACHS_MAX_ORDER};

use crate::eisenstein::{EisensteinInt, UnitExponent};
use crate::error::{Error, Result};
use crate::multigraph::{enumerate_simple_cycles, MixedMultigraph};
use crate::switching::cycle_weight;
use crate::Scalar;

/// Dense `n × n` Hermitian matrix with entries in `Z[ω]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix<T> {
    n: usize,
    entries: Vec<EisensteinInt<T>>,
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Row-major entries; fails unless the matrix is Hermitian with zero diagonal.
    pub fn from_rows(rows: Vec<Vec<EisensteinInt<T>>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("matrix is not square".into()));
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        let m = HermitianMatrix { n, entries };
        for u in 0..n {
            if !m.get(u, u).is_zero() {
                return Err(Error::Domain(format!("nonzero diagonal entry at {u}")));
            }
            for v in u + 1..n {
                if *m.get(v, u) != m.get(u, v).conj() {
                    return Err(Error::Domain(format!(
                        "entries ({u},{v}) and ({v},{u}) are not conjugate"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &EisensteinInt<T> {
        &self.entries[u * self.n + v]
    }

    /// `Σ_{u<v} |N_uv|²`; the trace of `N²` is twice this.
    pub fn off_diagonal_norm_sum(&self) -> T {
        let mut acc = T::zero();
        for u in 0..self.n {
            for v in u + 1..self.n {
                acc = acc + self.get(u, v).norm();
            }
        }
        acc
    }
}

/// `N_uv = e{u,v} + e(u,v)ω + e(v,u)ω̄`.
pub fn hermitian_matrix<T: Scalar>(graph: &MixedMultigraph) -> HermitianMatrix<T> {
    let n = graph.order();
    let mut entries = vec![EisensteinInt::zero(); n * n];
    let int = |k: usize| T::from_usize(k).expect("edge count does not fit the scalar type");
    for ((lo, hi), c) in graph.pairs() {
        let entry = EisensteinInt::new(int(c.und) + int(c.bwd), int(c.fwd) - int(c.bwd));
        entries[hi * n + lo] = entry.conj();
        entries[lo * n + hi] = entry;
    }
    HermitianMatrix { n, entries }
}

/// `Φ(λ) = Σ c_i λ^{n−i}`, stored as `c_0 … c_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> CharPoly<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.first().is_none_or(|c| !c.is_one()) {
            return Err(Error::Domain("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_i`.
    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    /// `Φ(−λ)·(−1)^n`, the polynomial of the negated spectrum.
    pub fn negated_roots(&self) -> Self {
        CharPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        CharPoly { coeffs }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Coefficients `c_0 … c_n` of the monic polynomial with the given roots.
pub fn poly_from_roots<F: Float>(roots: &[F]) -> Vec<F> {
    let mut coeffs = vec![F::one()];
    for &r in roots {
        coeffs.push(F::zero());
        for i in (1..coeffs.len()).rev() {
            coeffs[i] = coeffs[i] - r * coeffs[i - 1];
        }
    }
    coeffs
}

/// Space-separated coefficients, e.g. `1 0 -3 -2`.
impl<T: Scalar> fmt::Display for CharPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> FromStr for CharPoly<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|t| {
                t.parse::<T>().map_err(|_| Error::Parse {
                    line: 0,
                    message: format!("invalid coefficient {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CharPoly::new(coeffs)
    }
}

/// Exact characteristic polynomial of `N(M)` via the determinant route.
pub fn char_poly(graph: &MixedMultigraph) -> CharPoly<BigInt> {
    char_poly_det(&hermitian_matrix(graph)).expect("Hermitian input has a real characteristic polynomial")
}

/// Ascending eigenvalues of `N(M)`.
pub fn spectrum(graph: &MixedMultigraph) -> Result<Vec<f64>> {
    eigenvalues(&hermitian_matrix::<BigInt>(graph))
}

pub fn is_cospectral(a: &MixedMultigraph, b: &MixedMultigraph) -> bool {
    a.order() == b.order() && char_poly(a) == char_poly(b)
}

/// True when the spectrum of `b` is the negated spectrum of `a`.
pub fn is_antispectral(a: &MixedMultigraph, b: &MixedMultigraph) -> Result<bool> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(char_poly(b) == char_poly(a).negated_roots())
}

/// Every simple cycle has weight 1.
pub fn cospectral_to_underlying(graph: &MixedMultigraph) -> Result<bool> {
    Ok(enumerate_simple_cycles(graph)?.iter().all(|c| {
        cycle_weight(graph, c)
            .map(|w| w.exponent() == UnitExponent::ONE)
            .unwrap_or(false)
    }))
}

/// Every even simple cycle has weight 1 and every odd one weight −1.
pub fn antispectral_to_underlying(graph: &MixedMultigraph) -> Result<bool> {
    let minus_one = UnitExponent::new(3);
    Ok(enumerate_simple_cycles(graph)?.iter().all(|c| {
        let want = if c.len() % 2 == 0 { UnitExponent::ONE } else { minus_one };
        cycle_weight(graph, c).map(|w| w.exponent() == want).unwrap_or(false)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{parse_mmg, PairCounts};

    type E = EisensteinInt<BigInt>;

    fn e(a: i64, b: i64) -> E {
        EisensteinInt::new(a.into(), b.into())
    }

    fn g(text: &str) -> MixedMultigraph {
        parse_mmg(&format!("mmg 1\n{text}")).unwrap()
    }

    fn poly(s: &str) -> CharPoly<BigInt> {
        s.parse().unwrap()
    }

    #[test]
    fn matrix_entries() {
        let m = hermitian_matrix::<BigInt>(&g("vertices 2\ne 0 1\n"));
        assert_eq!((m.get(0, 1), m.get(1, 0), m.get(0, 0)), (&e(1, 0), &e(1, 0), &e(0, 0)));

        let m = hermitian_matrix::<BigInt>(&g("vertices 2\na 0 1\n"));
        assert_eq!((m.get(0, 1), m.get(1, 0)), (&e(0, 1), &e(1, -1)));

        let m = hermitian_matrix::<BigInt>(&g("vertices 2\ne 0 1\na 0 1\n"));
        assert_eq!(m.get(0, 1), &e(1, 1));

        let m = hermitian_matrix::<BigInt>(&g("vertices 2\ne 0 1\na 1 0\na 1 0\n"));
        assert_eq!(m.get(1, 0), &e(1, 2));
        assert_eq!(m.get(0, 1), &e(3, -2));
        assert!(
            HermitianMatrix::from_rows((0..2).map(|u| (0..2).map(|v| m.get(u, v).clone()).collect()).collect()).is_ok()
        );
    }

    #[test]
    fn rejects_non_hermitian_rows() {
        assert!(HermitianMatrix::from_rows(vec![vec![e(0, 0), e(0, 1)], vec![e(0, 1), e(0, 0)]]).is_err());
        assert!(HermitianMatrix::from_rows(vec![vec![e(1, 0)]]).is_err());
        assert!(HermitianMatrix::from_rows(vec![vec![e(0, 0), e(0, 0)]]).is_err());
    }

    #[test]
    fn poly_text() {
        let p = poly("1 0 -3 -2");
        assert_eq!(p.to_string(), "1 0 -3 -2");
        assert_eq!(p.degree(), 3);
        assert_eq!(p.negated_roots(), poly("1 0 -3 2"));
        assert!("2 1".parse::<CharPoly<BigInt>>().is_err());
        assert!("".parse::<CharPoly<BigInt>>().is_err());
        assert_eq!(poly("1 -1").mul(&poly("1 1")), poly("1 0 -1"));
    }

    #[test]
    fn roots_to_coefficients() {
        let c = poly_from_roots(&[-2.0, 1.0, 1.0]);
        assert_eq!(c, vec![1.0, 0.0, -3.0, 2.0]);
    }

    fn k3() -> MixedMultigraph {
        g("vertices 3\ne 0 1\ne 1 2\ne 0 2\n")
    }

    fn cyclic() -> MixedMultigraph {
        g("vertices 3\na 0 1\na 1 2\na 2 0\n")
    }

    #[test]
    fn cospectrality() {
        assert!(is_cospectral(&cyclic(), &cyclic().converse()));
        let double = g("vertices 2\ne 0 1\ne 0 1\n");
        let arcs = g("vertices 2\na 0 1\na 0 1\n");
        assert!(is_cospectral(&double, &arcs));
        assert!(!is_cospectral(&k3(), &cyclic()));
        assert!(!is_cospectral(&k3(), &g("vertices 4\ne 0 1\ne 1 2\ne 0 2\n")));
    }

    #[test]
    fn antispectrality() {
        assert!(is_antispectral(&cyclic(), &k3()).unwrap());
        assert!(!is_antispectral(&k3(), &k3()).unwrap());
        let edge = g("vertices 2\ne 0 1\n");
        let arc = g("vertices 2\na 0 1\n");
        assert!(is_antispectral(&edge, &arc).unwrap());
        assert!(is_cospectral(&edge, &arc));
        assert!(is_antispectral(&edge, &k3()).is_err());
    }

    #[test]
    fn cycle_conditions() {
        let forest = g("vertices 4\na 0 1\na 2 1\ne 2 3\n");
        assert!(cospectral_to_underlying(&forest).unwrap());
        assert!(antispectral_to_underlying(&forest).unwrap());
        assert!(!cospectral_to_underlying(&cyclic()).unwrap());
        assert!(antispectral_to_underlying(&cyclic()).unwrap());
        assert!(cospectral_to_underlying(&g("vertices 2\na 0 1\na 0 1\n")).unwrap());
        let one_arc = g("vertices 3\na 0 1\ne 1 2\ne 0 2\n");
        assert!(!antispectral_to_underlying(&one_arc).unwrap());
        assert!(!cospectral_to_underlying(&one_arc).unwrap());
    }

    #[test]
    fn second_coefficient_is_minus_norm_sum() {
        let mut m = k3();
        m.set_pair(0, 1, PairCounts::new(2, 1, 0)).unwrap();
        let h = hermitian_matrix::<BigInt>(&m);
        let p = char_poly_det(&h).unwrap();
        assert_eq!(p.coeff(1), &BigInt::from(0));
        assert_eq!(p.coeff(2), &-h.off_diagonal_norm_sum());
    }
}
