use super::{LambdaVariant, Representation};
use crate::error::{Error, Result};
use crate::linalg::operators::{envelope, spin};
use crate::linalg::{unit_vector, Matrix, Polynomial, Subspace, Vector};

/// Outcome of the irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// The operators generate all of `End(M)`.
    AbsIrreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    /// The envelope is too small but no invariant subspace was found over
    /// the rationals.
    Undetermined,
}

impl Irreducibility {
    pub fn is_abs_irreducible(&self) -> bool {
        matches!(self, Irreducibility::AbsIrreducible)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Irreducibility::AbsIrreducible => "abs_irreducible",
            Irreducibility::Reducible(_) => "reducible",
            Irreducibility::Undetermined => "undetermined",
        }
    }
}

/// Which half of the dichotomy an irreducible representation falls in,
/// together with the span `V` of the symmetrized actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyVerdict {
    pub variant: LambdaVariant,
    pub v_span: Subspace,
}

impl Representation {
    /// Dimension of the associative algebra generated by the identity and
    /// every `rho_b`, `lambda_b`.
    pub fn envelope_dim(&self) -> usize {
        envelope(&self.operators(), self.module_dim).dim()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        let d = self.module_dim;
        let ops = self.operators();
        if envelope(&ops, d).dim() == d * d {
            return Irreducibility::AbsIrreducible;
        }
        let proper = |s: &Subspace| !s.is_zero() && !s.is_full();

        // Sum of images and common kernel are always invariant.
        let images: Vec<Vector> = ops
            .iter()
            .flat_map(|m| (0..d).map(|j| m.column(j)))
            .collect();
        let image = Subspace::span(d, &images);
        if proper(&image) {
            return Irreducibility::Reducible(image);
        }
        let stacked = ops
            .iter()
            .skip(1)
            .try_fold(ops[0].clone(), |acc, m| acc.vstack(m))
            .expect("operators share a shape");
        let kernel = stacked.nullspace();
        if proper(&kernel) {
            return Irreducibility::Reducible(kernel);
        }

        let mut candidates: Vec<Vector> = (0..d).map(|i| unit_vector(d, i)).collect();
        for m in &ops {
            candidates.extend(rational_eigenvectors(m));
        }
        for v in &candidates {
            let s = spin(std::slice::from_ref(v), &ops, d);
            if proper(&s) {
                return Irreducibility::Reducible(s);
            }
        }
        Irreducibility::Undetermined
    }

    /// `V = span{ (lambda_b + rho_b) m }` over basis elements `b` and module
    /// basis vectors `m`.
    pub fn sym_span(&self) -> Result<Subspace> {
        let d = self.module_dim;
        let mut vectors = Vec::new();
        for (r, l) in self.rho.iter().zip(&self.lambda) {
            let s = r + l;
            vectors.extend((0..d).map(|j| s.column(j)));
        }
        let v = Subspace::span(d, &vectors);
        if !self.is_invariant(&v)? {
            return Err(Error::Internal("symmetrized span is not invariant".into()));
        }
        Ok(v)
    }

    /// For an absolutely irreducible representation, decides whether
    /// `lambda = -rho` or `lambda = 0`.
    pub fn dichotomy_classify(&self) -> Result<DichotomyVerdict> {
        if !self.irreducibility().is_abs_irreducible() {
            return Err(Error::Precondition(
                "dichotomy needs an absolutely irreducible representation".into(),
            ));
        }
        let v_span = self.sym_span()?;
        if v_span.is_zero() {
            if self
                .rho
                .iter()
                .zip(&self.lambda)
                .any(|(r, l)| !(r + l).is_zero())
            {
                return Err(Error::Internal("V = 0 but lambda != -rho".into()));
            }
            return Ok(DichotomyVerdict {
                variant: LambdaVariant::AntiSymmetric,
                v_span,
            });
        }
        if v_span.is_full() {
            if self.lambda.iter().any(|l| !l.is_zero()) {
                return Err(Error::Internal("V = M but lambda != 0".into()));
            }
            return Ok(DichotomyVerdict {
                variant: LambdaVariant::ZeroLambda,
                v_span,
            });
        }
        Err(Error::Internal(format!(
            "symmetrized span has dimension {} in an irreducible module of dimension {}",
            v_span.dim(),
            self.module_dim
        )))
    }
}

/// Eigenvectors for every rational eigenvalue, as a basis of each
/// eigenspace.
pub(crate) fn rational_eigenvectors(m: &Matrix) -> Vec<Vector> {
    let n = m.rows();
    let minimal = Polynomial::minimal_of(m);
    let mut out = Vec::new();
    for (root, _) in minimal.rational_roots() {
        let shifted = m - &Matrix::identity(n).scale(&root);
        out.extend(shifted.nullspace().basis_vectors());
    }
    out
}
