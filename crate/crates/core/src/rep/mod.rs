//! Leibniz bimodule representations `(rho, lambda)`.
//!
//! `rho_x` is the right action `m -> [m, x]` and `lambda_x` the left action
//! `m -> [x, m]`. The three axioms, for all `x, y` in `L`:
//!
//! 1. `rho_[x,y]    = rho_y rho_x - rho_x rho_y`
//! 2. `lambda_[x,y] = rho_y lambda_x - lambda_x rho_y`
//! 3. `lambda_[x,y] = rho_y lambda_x + lambda_x lambda_y`

mod equivalence;
mod irreducible;

pub use equivalence::Equivalence;
pub use irreducible::{DichotomyVerdict, Irreducibility};

use std::fmt;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::operators::restrict_operator;
use crate::linalg::{unit_vector, Matrix, Rational, Subspace};

/// How the left action relates to the right action on a Lie-type module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaVariant {
    /// `lambda = 0`
    ZeroLambda,
    /// `lambda = -rho`
    AntiSymmetric,
}

impl fmt::Display for LambdaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaVariant::ZeroLambda => "zero_lambda",
            LambdaVariant::AntiSymmetric => "anti_symmetric",
        })
    }
}

/// One failing axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: u8,
    pub left: usize,
    pub right: usize,
}

/// A validated representation of a Leibniz algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LeibnizAlgebra,
    module_dim: usize,
    rho: Vec<Matrix>,
    lambda: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: LeibnizAlgebra, rho: Vec<Matrix>, lambda: Vec<Matrix>) -> Result<Self> {
        let module_dim = Self::check_shapes(&algebra, &rho, &lambda)?;
        algebra.ensure_valid()?;
        if let Some(v) = Self::violations_unchecked(&algebra, &rho, &lambda).first() {
            return Err(Error::AxiomViolation {
                axiom: v.axiom,
                left: algebra.basis_names()[v.left].clone(),
                right: algebra.basis_names()[v.right].clone(),
            });
        }
        Ok(Self {
            algebra,
            module_dim,
            rho,
            lambda,
        })
    }

    /// All failing `(axiom, x, y)` instances over basis pairs, without
    /// building a representation. Shapes must already agree.
    pub fn axiom_violations(
        algebra: &LeibnizAlgebra,
        rho: &[Matrix],
        lambda: &[Matrix],
    ) -> Result<Vec<AxiomViolation>> {
        Self::check_shapes(algebra, rho, lambda)?;
        algebra.ensure_valid()?;
        Ok(Self::violations_unchecked(algebra, rho, lambda))
    }

    fn check_shapes(algebra: &LeibnizAlgebra, rho: &[Matrix], lambda: &[Matrix]) -> Result<usize> {
        let n = algebra.dim();
        if rho.len() != n || lambda.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} matrices for rho and lambda, found {} and {}",
                rho.len(),
                lambda.len()
            )));
        }
        let Some(d) = rho.first().map(Matrix::rows) else {
            return Err(Error::Shape("representation of the zero algebra".into()));
        };
        if d == 0 {
            return Err(Error::Shape("module dimension must be positive".into()));
        }
        if let Some(m) = rho
            .iter()
            .chain(lambda)
            .find(|m| m.rows() != d || m.cols() != d)
        {
            return Err(Error::Shape(format!(
                "all matrices must be {d}x{d}, found {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(d)
    }

    fn violations_unchecked(
        alg: &LeibnizAlgebra,
        rho: &[Matrix],
        lambda: &[Matrix],
    ) -> Vec<AxiomViolation> {
        let n = alg.dim();
        let combine = |mats: &[Matrix], coeffs: &[Rational]| -> Matrix {
            let d = mats[0].rows();
            coeffs
                .iter()
                .zip(mats)
                .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
                .fold(Matrix::zeros(d, d), |acc, (c, m)| &acc + &m.scale(c))
        };
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let c = alg.structure(x, y);
                let rho_xy = combine(rho, c);
                let lambda_xy = combine(lambda, c);
                let ryrx = &rho[y] * &rho[x];
                let rxry = &rho[x] * &rho[y];
                if rho_xy != &ryrx - &rxry {
                    out.push(AxiomViolation {
                        axiom: 1,
                        left: x,
                        right: y,
                    });
                }
                let rylx = &rho[y] * &lambda[x];
                if lambda_xy != &rylx - &(&lambda[x] * &rho[y]) {
                    out.push(AxiomViolation {
                        axiom: 2,
                        left: x,
                        right: y,
                    });
                }
                if lambda_xy != &rylx + &(&lambda[x] * &lambda[y]) {
                    out.push(AxiomViolation {
                        axiom: 3,
                        left: x,
                        right: y,
                    });
                }
            }
        }
        out
    }

    /// Leibniz representation built from a Lie representation `phi` of a
    /// Lie algebra: `(rho, lambda) = (-phi, phi)` or `(-phi, 0)`.
    pub fn from_lie_rep(
        algebra: LeibnizAlgebra,
        phi: Vec<Matrix>,
        variant: LambdaVariant,
    ) -> Result<Self> {
        algebra.ensure_valid()?;
        if !algebra.is_lie() {
            return Err(Error::NotLie(algebra.name().to_string()));
        }
        Self::check_shapes(&algebra, &phi, &phi)?;
        let n = algebra.dim();
        for x in 0..n {
            for y in 0..n {
                let d = phi[0].rows();
                let image = algebra
                    .structure(x, y)
                    .iter()
                    .zip(&phi)
                    .fold(Matrix::zeros(d, d), |acc, (c, m)| &acc + &m.scale(c));
                if image != phi[x].commutator(&phi[y]) {
                    return Err(Error::NotLieHomomorphism {
                        left: algebra.basis_names()[x].clone(),
                        right: algebra.basis_names()[y].clone(),
                    });
                }
            }
        }
        let rho: Vec<Matrix> = phi.iter().map(|m| -m).collect();
        let lambda = match variant {
            LambdaVariant::AntiSymmetric => phi,
            LambdaVariant::ZeroLambda => {
                let d = rho[0].rows();
                vec![Matrix::zeros(d, d); n]
            }
        };
        Self::new(algebra, rho, lambda)
    }

    /// The algebra as a module over itself: `rho_z(v) = [v,z]`,
    /// `lambda_z(v) = [z,v]`.
    pub fn adjoint(algebra: &LeibnizAlgebra) -> Result<Self> {
        algebra.ensure_valid()?;
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| algebra.right_mult(&unit_vector(n, i)))
            .collect();
        let lambda = (0..n)
            .map(|i| algebra.left_mult(&unit_vector(n, i)))
            .collect();
        Self::new(algebra.clone(), rho, lambda)
            .map_err(|e| Error::Internal(format!("adjoint representation invalid: {e}")))
    }

    /// The zero representation on a module of dimension `d`.
    pub fn zero(algebra: &LeibnizAlgebra, d: usize) -> Result<Self> {
        let zeros = vec![Matrix::zeros(d, d); algebra.dim()];
        Self::new(algebra.clone(), zeros.clone(), zeros)
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn lambda(&self) -> &[Matrix] {
        &self.lambda
    }

    /// `rho_v = sum v_i rho_{b_i}`.
    pub fn rho_of(&self, v: &[Rational]) -> Matrix {
        Self::combine(&self.rho, v, self.module_dim)
    }

    pub fn lambda_of(&self, v: &[Rational]) -> Matrix {
        Self::combine(&self.lambda, v, self.module_dim)
    }

    fn combine(mats: &[Matrix], v: &[Rational], d: usize) -> Matrix {
        assert_eq!(v.len(), mats.len(), "vector must live in the algebra");
        v.iter()
            .zip(mats)
            .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
            .fold(Matrix::zeros(d, d), |acc, (c, m)| &acc + &m.scale(c))
    }

    /// Every acting operator: all `rho_b` followed by all `lambda_b`.
    pub fn operators(&self) -> Vec<Matrix> {
        self.rho.iter().chain(&self.lambda).cloned().collect()
    }

    /// Restriction to a subalgebra, re-expressed on the subalgebra's
    /// echelon basis.
    pub fn restrict(&self, subalgebra: &Subspace) -> Result<Representation> {
        if !self.algebra.is_subalgebra(subalgebra)? {
            return Err(Error::NotASubalgebra);
        }
        let sub = self.algebra.subalgebra(subalgebra)?;
        let rho = subalgebra.vectors().map(|v| self.rho_of(v)).collect();
        let lambda = subalgebra.vectors().map(|v| self.lambda_of(v)).collect();
        Representation::new(sub, rho, lambda)
            .map_err(|e| Error::Internal(format!("restriction lost the axioms: {e}")))
    }

    /// The subrepresentation on an invariant subspace of the module, in
    /// the subspace's echelon basis.
    pub fn subrepresentation(&self, space: &Subspace) -> Result<Representation> {
        if space.ambient_dim() != self.module_dim {
            return Err(Error::DimensionMismatch {
                context: "module subspace",
                expected: self.module_dim,
                found: space.ambient_dim(),
            });
        }
        let restrict = |m: &Matrix| {
            restrict_operator(m, space)
                .ok_or_else(|| Error::Precondition("subspace is not invariant".into()))
        };
        let rho = self.rho.iter().map(restrict).collect::<Result<Vec<_>>>()?;
        let lambda = self
            .lambda
            .iter()
            .map(restrict)
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.algebra.clone(), rho, lambda)
    }

    /// Block-diagonal direct sum over the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.algebra.same_structure(&other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        let lambda = self
            .lambda
            .iter()
            .zip(&other.lambda)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Representation::new(self.algebra.clone(), rho, lambda)
    }

    /// `rho_b(U) <= U` and `lambda_b(U) <= U` for every basis element `b`.
    pub fn is_invariant(&self, space: &Subspace) -> Result<bool> {
        if space.ambient_dim() != self.module_dim {
            return Err(Error::DimensionMismatch {
                context: "module subspace",
                expected: self.module_dim,
                found: space.ambient_dim(),
            });
        }
        Ok(self
            .rho
            .iter()
            .chain(&self.lambda)
            .all(|m| space.is_invariant_under(m)))
    }
}
