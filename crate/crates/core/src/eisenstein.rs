//! Exact arithmetic in the Eisenstein integers `Z[ω]`.
//!
//! Elements are stored as `a + bω` in the basis `{1, ω}` where
//! `ω = 1/2 + (√3/2)i` is the primitive sixth root of unity, so that
//! `ω² = ω − 1` and `ω̄ = 1 − ω`.
//!
//! | exponent | `ω^t` as `(a, b)` |
//! |----------|-------------------|
//! | 0        | `(1, 0)`          |
//! | 1        | `(0, 1)`          |
//! | 2        | `(−1, 1)`         |
//! | 3        | `(−1, 0)`         |
//! | 4        | `(0, −1)`         |
//! | 5        | `(1, −1)`         |

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{Float, One, Zero};

use crate::error::Error;
use crate::Scalar;

/// An Eisenstein integer `a + bω`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EisensteinInt<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> EisensteinInt<T> {
    pub fn new(a: T, b: T) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_int(a: T) -> Self {
        EisensteinInt { a, b: T::zero() }
    }

    pub fn omega() -> Self {
        EisensteinInt {
            a: T::zero(),
            b: T::one(),
        }
    }

    /// `ω^t`, with `t` reduced mod 6.
    pub fn unit_pow(t: i64) -> Self {
        UnitExponent::new(t).to_eisenstein()
    }

    /// Complex conjugate: `a + bω ↦ (a + b) − bω`.
    pub fn conj(&self) -> Self {
        EisensteinInt {
            a: self.a.clone() + self.b.clone(),
            b: -self.b.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    /// `x·x̄ = a² + ab + b²`, always a nonnegative integer.
    pub fn norm(&self) -> T {
        let (a, b) = (&self.a, &self.b);
        a.clone() * a.clone() + a.clone() * b.clone() + b.clone() * b.clone()
    }

    /// Returns `Some(t)` when `self = ω^t`.
    pub fn as_unit(&self) -> Option<UnitExponent> {
        (0..6).map(UnitExponent::new).find(|u| u.to_eisenstein::<T>() == *self)
    }

    pub fn to_complex<F: Float>(&self) -> Complex<F> {
        let a = F::from(self.a.clone()).expect("component does not fit the float type");
        let b = F::from(self.b.clone()).expect("component does not fit the float type");
        let half = F::from(0.5).unwrap();
        let s = F::from(3.0).unwrap().sqrt() * half;
        Complex::new(a + b * half, b * s)
    }
}

impl<T: Scalar> Zero for EisensteinInt<T> {
    fn zero() -> Self {
        EisensteinInt {
            a: T::zero(),
            b: T::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar> One for EisensteinInt<T> {
    fn one() -> Self {
        EisensteinInt::from_int(T::one())
    }
}

impl<T: Scalar> Add for EisensteinInt<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        EisensteinInt {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<'a, T: Scalar> Add<&'a EisensteinInt<T>> for &'a EisensteinInt<T> {
    type Output = EisensteinInt<T>;

    fn add(self, rhs: Self) -> EisensteinInt<T> {
        EisensteinInt {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
        }
    }
}

impl<T: Scalar> AddAssign for EisensteinInt<T> {
    fn add_assign(&mut self, rhs: Self) {
        self.a = self.a.clone() + rhs.a;
        self.b = self.b.clone() + rhs.b;
    }
}

impl<T: Scalar> Sub for EisensteinInt<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        EisensteinInt {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<T: Scalar> Neg for EisensteinInt<T> {
    type Output = Self;

    fn neg(self) -> Self {
        EisensteinInt { a: -self.a, b: -self.b }
    }
}

impl<'a, T: Scalar> Mul<&'a EisensteinInt<T>> for &'a EisensteinInt<T> {
    type Output = EisensteinInt<T>;

    // (a1 + b1ω)(a2 + b2ω) with ω² = ω − 1
    fn mul(self, rhs: Self) -> EisensteinInt<T> {
        let (a1, b1) = (&self.a, &self.b);
        let (a2, b2) = (&rhs.a, &rhs.b);
        let b1b2 = b1.clone() * b2.clone();
        EisensteinInt {
            a: a1.clone() * a2.clone() - b1b2.clone(),
            b: a1.clone() * b2.clone() + a2.clone() * b1.clone() + b1b2,
        }
    }
}

impl<T: Scalar> Mul for EisensteinInt<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Sum for EisensteinInt<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<T: Scalar> Product for EisensteinInt<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

/// Renders as `a+bw`, dropping zero parts: `3`, `1w`, `-1+1w`, `0`.
impl<T: Scalar + fmt::Display> fmt::Display for EisensteinInt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}w", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}{}w", self.a, self.b)
                } else {
                    write!(f, "{}+{}w", self.a, self.b)
                }
            }
        }
    }
}

impl<T: Scalar + FromStr> FromStr for EisensteinInt<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("malformed Eisenstein integer {s:?}"),
        };
        let int = |t: &str| -> Result<T, Error> {
            let t = t.strip_prefix('+').unwrap_or(t);
            if t.is_empty()
                || !t
                    .bytes()
                    .enumerate()
                    .all(|(i, c)| c.is_ascii_digit() || (i == 0 && c == b'-'))
            {
                return Err(bad());
            }
            t.parse::<T>().map_err(|_| bad())
        };
        let s = s.trim();
        match s.strip_suffix('w') {
            None => Ok(EisensteinInt::from_int(int(s)?)),
            Some(body) => {
                // split before the last sign that is not the leading one
                let split = body
                    .char_indices()
                    .skip(1)
                    .filter(|&(_, c)| c == '+' || c == '-')
                    .map(|(i, _)| i)
                    .last();
                match split {
                    Some(i) => Ok(EisensteinInt::new(int(&body[..i])?, int(&body[i..])?)),
                    None => Ok(EisensteinInt::new(T::zero(), int(body)?)),
                }
            }
        }
    }
}

/// An element `ω^t` of the unit group of `Z[ω]`, stored as `t ∈ 0..6`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitExponent(u8);

impl UnitExponent {
    pub const ONE: UnitExponent = UnitExponent(0);

    pub fn new(t: i64) -> Self {
        UnitExponent(t.rem_euclid(6) as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        UnitExponent::new(-(self.0 as i64))
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(3)
    }

    /// `ω^t + ω^{-t} = 2cos(tπ/3)`.
    pub fn real_part_doubled(self) -> i64 {
        match self.0 {
            0 => 2,
            1 | 5 => 1,
            2 | 4 => -1,
            _ => -2,
        }
    }

    pub fn to_eisenstein<T: Scalar>(self) -> EisensteinInt<T> {
        let (a, b) = match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            _ => (1, -1),
        };
        EisensteinInt::new(T::from_i64(a).unwrap(), T::from_i64(b).unwrap())
    }
}

impl Mul for UnitExponent {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        UnitExponent((self.0 + rhs.0) % 6)
    }
}

impl fmt::Display for UnitExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type E = EisensteinInt<BigInt>;

    fn e(a: i64, b: i64) -> E {
        EisensteinInt::new(a.into(), b.into())
    }

    #[test]
    fn addition() {
        assert_eq!(e(1, 0) + e(0, 1), e(1, 1));
        assert_eq!(e(2, -1) + e(-2, 1), e(0, 0));
        assert_eq!(e(3, 4) + e(5, -6), e(8, -2));
    }

    #[test]
    fn multiplication() {
        assert_eq!(e(0, 1) * e(0, 1), e(-1, 1));
        assert_eq!(e(1, 1) * e(2, -1), e(3, 0));
        assert_eq!(e(7, -4) * e(1, 0), e(7, -4));
    }

    #[test]
    fn conjugation() {
        assert_eq!(e(0, 1).conj(), e(1, -1));
        assert_eq!(e(5, 0).conj(), e(5, 0));
        assert_eq!(e(2, 3).conj().conj(), e(2, 3));
    }

    #[test]
    fn unit_powers() {
        assert_eq!(E::unit_pow(0), e(1, 0));
        assert_eq!(E::unit_pow(3), e(-1, 0));
        assert_eq!(E::unit_pow(7), e(0, 1));
        assert_eq!(E::unit_pow(-1), e(1, -1));
        let w = E::omega();
        let mut acc = E::one();
        for t in 0..6 {
            assert_eq!(E::unit_pow(t), acc);
            assert_eq!(E::unit_pow(t).as_unit(), Some(UnitExponent::new(t)));
            acc = acc * w.clone();
        }
        assert_eq!(acc, E::one());
        assert_eq!(e(2, 0).as_unit(), None);
    }

    #[test]
    fn complex_embedding() {
        let z: Complex<f64> = e(1, 0).to_complex();
        assert_eq!(z, Complex::new(1.0, 0.0));
        let z: Complex<f64> = e(0, 1).to_complex();
        assert!((z.re - 0.5).abs() < 1e-15 && (z.im - 0.8660254037844386).abs() < 1e-15);
        let z: Complex<f64> = e(2, -1).to_complex();
        assert!((z.re - 1.5).abs() < 1e-15 && (z.im + 0.8660254037844386).abs() < 1e-15);
    }

    #[test]
    fn text_round_trip() {
        for (x, s) in [
            (e(-1, 1), "-1+1w"),
            (e(3, 0), "3"),
            (e(0, 0), "0"),
            (e(0, -2), "-2w"),
            (e(1, -1), "1-1w"),
        ] {
            assert_eq!(x.to_string(), s);
            assert_eq!(s.parse::<E>().unwrap(), x);
        }
        assert!("1+w".parse::<E>().is_err());
        assert!("abc".parse::<E>().is_err());
        assert!("".parse::<E>().is_err());
    }

    #[test]
    fn works_over_machine_integers() {
        let x = EisensteinInt::<i64>::new(2, 3);
        assert_eq!((x.clone() * x.conj()).a, x.norm());
        assert_eq!(x.norm(), 4 + 6 + 9);
    }

    fn arb() -> impl Strategy<Value = E> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| e(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &y, &y + &x);
        }

        #[test]
        fn conj_is_multiplicative(x in arb(), y in arb()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }

        #[test]
        fn norm_form(x in arb()) {
            let n = &x * &x.conj();
            prop_assert!(n.is_real());
            prop_assert!(n.a >= BigInt::from(0));
            prop_assert_eq!(n.a, x.norm());
        }

        #[test]
        fn unit_inverse(t in -20i64..20) {
            let u = E::unit_pow(t);
            prop_assert_eq!(&u * &E::unit_pow((6 - t.rem_euclid(6)) % 6), E::one());
            let z: Complex<f64> = u.to_complex();
            prop_assert!((z.norm() - 1.0).abs() < 1e-15);
            prop_assert_eq!(UnitExponent::new(t).conj().to_eisenstein::<BigInt>(), u.conj());
        }
    }
}
