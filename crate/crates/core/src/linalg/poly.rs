use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{EchelonBuilder, Matrix, Rational};

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Trial division stops here; larger cofactors are treated as prime.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    /// Minimal polynomial of a square matrix: the first linear dependency
    /// among `I, m, m^2, ...`.
    pub fn minimal_of(m: &Matrix) -> Polynomial {
        assert!(m.is_square(), "minimal polynomial needs a square matrix");
        let n = m.rows();
        let mut powers = vec![Matrix::identity(n)];
        let mut span = EchelonBuilder::new(n * n);
        span.insert(powers[0].entries());
        loop {
            let next = powers.last().map(|p| p * m).unwrap();
            if span.contains(next.entries()) {
                // Solve sum_i c_i m^i = m^k for the c_i.
                let k = powers.len();
                let columns: Vec<_> = powers.iter().map(|p| p.entries().to_vec()).collect();
                let a = Matrix::from_columns(&columns, n * n);
                let sol = a
                    .solve(next.entries())
                    .expect("shapes agree")
                    .expect("power lies in the span");
                let mut coeffs: Vec<Rational> = sol.particular.iter().map(|c| -c).collect();
                debug_assert_eq!(coeffs.len(), k);
                coeffs.push(Rational::one());
                return Polynomial::new(coeffs);
            }
            span.insert(next.entries());
            powers.push(next);
        }
    }

    /// Divides by `(t - root)`, assuming `root` is a root.
    pub fn deflate(&self, root: &Rational) -> Polynomial {
        let Some(deg) = self.degree() else {
            return self.clone();
        };
        if deg == 0 {
            return self.clone();
        }
        let mut out = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let c = &self.coeffs[i] + &carry;
            if i > 0 {
                out[i - 1] = c.clone();
                carry = c * root;
            }
        }
        Polynomial::new(out)
    }

    /// Distinct rational roots with multiplicities, ascending.
    ///
    /// Candidates come from the rational root theorem applied to the
    /// integer-cleared polynomial.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut p = self.clone();
        let mut roots = Vec::new();
        let mut zero_mult = 0;
        while p.degree().is_some_and(|d| d > 0) && p.coeffs[0].is_zero() {
            p.coeffs.remove(0);
            zero_mult += 1;
        }
        if zero_mult > 0 {
            roots.push((Rational::zero(), zero_mult));
        }
        if p.degree().is_none_or(|d| d == 0) {
            return roots;
        }
        let ints = p.integer_coefficients();
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let numerators = divisors(&constant);
        let denominators = divisors(&lead);
        let mut candidates = BTreeSet::new();
        for a in &numerators {
            for b in &denominators {
                let q = Rational::new(a.clone(), b.clone());
                candidates.insert(q.clone());
                candidates.insert(-q);
            }
        }
        for c in candidates {
            let mut mult = 0;
            while p.degree().is_some_and(|d| d > 0) && p.eval(&c).is_zero() {
                p = p.deflate(&c);
                mult += 1;
            }
            if mult > 0 {
                roots.push((c, mult));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        roots
    }

    /// Scales to coprime integer coefficients.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += 1;
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    #[test]
    fn minimal_polynomial_examples() {
        let id = Polynomial::minimal_of(&Matrix::identity(3));
        assert_eq!(id.coefficients(), &[int(-1), int(1)]);
        let z = Polynomial::minimal_of(&Matrix::zeros(2, 2));
        assert_eq!(z.coefficients(), &[int(0), int(1)]);
        let d = Polynomial::minimal_of(&Matrix::diagonal(&[int(1), int(2)]));
        assert_eq!(d.coefficients(), &[int(2), int(-3), int(1)]);
        assert_eq!(d.to_string(), "t^2 - 3t + 2");
    }

    #[test]
    fn nilpotent_jordan_block() {
        let j = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let p = Polynomial::minimal_of(&j);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.rational_roots(), vec![(int(0), 3)]);
    }

    #[test]
    fn rational_roots_with_fractions() {
        // (2t - 1)(t + 3)^2 = 2t^3 + 11t^2 + 12t - 9
        let p = Polynomial::new(vec![int(-9), int(12), int(11), int(2)]);
        assert_eq!(p.rational_roots(), vec![(int(-3), 2), (frac(1, 2), 1)]);
        // t^2 - 2 has no rational roots
        assert!(Polynomial::new(vec![int(-2), int(0), int(1)])
            .rational_roots()
            .is_empty());
    }
}
