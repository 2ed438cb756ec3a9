use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::{int, zero_vector, Matrix, Vector};

/// Outcome of the equivalence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// An invertible `phi` with `phi A1 = A2 phi` for every action matrix.
    Equivalent(Matrix),
    NotEquivalent,
    /// Intertwiners exist but none of the tried combinations is invertible.
    Undetermined,
}

impl Equivalence {
    pub fn label(&self) -> &'static str {
        match self {
            Equivalence::Equivalent(_) => "equivalent",
            Equivalence::NotEquivalent => "not_equivalent",
            Equivalence::Undetermined => "undetermined",
        }
    }
}

const COMBINATION_ATTEMPTS: usize = 64;
const COEFFICIENTS: [i64; 7] = [1, 2, -1, 3, -2, 5, -3];

impl Representation {
    /// Basis of all `phi` with `phi rho1_b = rho2_b phi` and
    /// `phi lambda1_b = lambda2_b phi`.
    pub fn intertwiners(&self, other: &Representation) -> Result<Vec<Matrix>> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let (d1, d2) = (self.module_dim, other.module_dim);
        // phi is d2 x d1; variable (i, r) sits at i * d1 + r.
        let vars = d1 * d2;
        let mut rows: Vec<Vector> = Vec::new();
        let pairs = self
            .rho
            .iter()
            .zip(&other.rho)
            .chain(self.lambda.iter().zip(&other.lambda));
        for (a1, a2) in pairs {
            for i in 0..d2 {
                for j in 0..d1 {
                    let mut row = zero_vector(vars);
                    for r in 0..d1 {
                        row[i * d1 + r] += &a1[(r, j)];
                    }
                    for r in 0..d2 {
                        row[r * d1 + j] -= &a2[(i, r)];
                    }
                    if !crate::linalg::is_zero_vector(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        Ok(Matrix::from_rows(rows, vars)
            .nullspace()
            .vectors()
            .map(|v| Matrix::from_entries(d2, d1, v.to_vec()))
            .collect())
    }

    pub fn equivalence(&self, other: &Representation) -> Result<Equivalence> {
        let basis = self.intertwiners(other)?;
        if self.module_dim != other.module_dim || basis.is_empty() {
            return Ok(Equivalence::NotEquivalent);
        }
        if let Some(phi) = basis.iter().find(|m| m.is_invertible()) {
            return Ok(Equivalence::Equivalent(phi.clone()));
        }
        let d = self.module_dim;
        // Each attempt starts one step further along the coefficient cycle
        // than a plain continuation would, so consecutive attempts differ.
        let stride = basis.len() + 1;
        for attempt in 0..COMBINATION_ATTEMPTS {
            let phi = basis
                .iter()
                .enumerate()
                .fold(Matrix::zeros(d, d), |acc, (k, m)| {
                    let c = int(COEFFICIENTS[(attempt * stride + k) % COEFFICIENTS.len()]);
                    &acc + &m.scale(&c)
                });
            if phi.is_invertible() {
                return Ok(Equivalence::Equivalent(phi));
            }
        }
        Ok(Equivalence::Undetermined)
    }

    /// Conjugates every action by an invertible `p`: `A -> p A p^-1`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))?;
        if p.rows() != self.module_dim {
            return Err(Error::DimensionMismatch {
                context: "conjugating matrix",
                expected: self.module_dim,
                found: p.rows(),
            });
        }
        let conj = |m: &Matrix| &(p * m) * &inv;
        Representation::new(
            self.algebra.clone(),
            self.rho.iter().map(conj).collect(),
            self.lambda.iter().map(conj).collect(),
        )
    }
}
