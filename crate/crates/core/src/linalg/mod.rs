//! Dense exact linear algebra over the rationals.
//!
//! Everything here works with [`Rational`] entries, so equalities are exact
//! and there are no tolerances anywhere downstream.

mod echelon;
mod matrix;
pub mod operators;
mod poly;
mod subspace;

pub use echelon::EchelonBuilder;
pub use matrix::{Matrix, Rref, Solution};
pub use poly::Polynomial;
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_traits::Zero;

pub type Rational = num_rational::BigRational;

/// Column vector of rationals.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` in dimension `n`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = int(1);
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn axpy(alpha: &Rational, x: &[Rational], y: &mut [Rational]) {
    debug_assert_eq!(x.len(), y.len());
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += alpha * xi;
        }
    }
}

pub fn add_vectors(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vector(alpha: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|a| alpha * a).collect()
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .zip(y)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Formats a rational as `p/q` (always with a denominator).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`. The denominator must be positive.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den <= BigInt::zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = frac(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&q), "-3/2");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("1/1"), Some(int(1)));
        assert_eq!(parse_rational("-4/6"), Some(frac(-2, 3)));
        assert_eq!(parse_rational(" 7 "), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
