//! Splitting representations into invariant summands.

use std::fmt;

use crate::error::Result;
use crate::linalg::operators::{commutant as commutant_of, embed};
use crate::linalg::{Matrix, Polynomial, Rational, Subspace, Vector};
use crate::rep::Representation;

/// A kernel element that acts nontrivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    /// Coordinates of the kernel vector in the algebra.
    pub vector: Vector,
    /// `"rho"` or `"lambda"`.
    pub action: &'static str,
    pub matrix: Matrix,
}

/// `rho_v = lambda_v = 0` for every `v` in the Leibniz kernel.
pub fn complete_reducibility_necessary(rep: &Representation) -> Result<Option<KernelWitness>> {
    let kernel = rep.algebra().leibniz_kernel()?;
    for v in kernel.vectors() {
        let rho = rep.rho_of(v);
        if !rho.is_zero() {
            return Ok(Some(KernelWitness {
                vector: v.to_vec(),
                action: "rho",
                matrix: rho,
            }));
        }
        let lambda = rep.lambda_of(v);
        if !lambda.is_zero() {
            return Ok(Some(KernelWitness {
                vector: v.to_vec(),
                action: "lambda",
                matrix: lambda,
            }));
        }
    }
    Ok(None)
}

/// Basis of the matrices commuting with every `rho_b` and `lambda_b`.
pub fn commutant(rep: &Representation) -> Vec<Matrix> {
    commutant_of(&rep.operators(), rep.module_dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Decomposed,
    Indecomposable,
    /// The kernel acts nontrivially, so no decomposition into irreducible
    /// summands exists. The module may still split in other ways.
    NoIrreducibleDecomposition,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Decomposed => "decomposed",
            Verdict::Indecomposable => "indecomposable",
            Verdict::NoIrreducibleDecomposition => "no_irreducible_decomposition",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub verdict: Verdict,
    /// Invariant subspaces whose direct sum is the module.
    pub components: Vec<Subspace>,
    pub obstruction: Option<String>,
}

pub fn decompose(rep: &Representation) -> Result<DecompositionResult> {
    let d = rep.module_dim();
    if let Some(w) = complete_reducibility_necessary(rep)? {
        return Ok(DecompositionResult {
            verdict: Verdict::NoIrreducibleDecomposition,
            components: vec![Subspace::full(d)],
            obstruction: Some(format!(
                "kernel acts nontrivially: {}|_I != 0 at {}",
                w.action,
                rep.algebra().format_vector(&w.vector)
            )),
        });
    }
    let mut leaves = Vec::new();
    let mut stuck = false;
    let mut pending = vec![Subspace::full(d)];
    while let Some(space) = pending.pop() {
        let sub = rep.subrepresentation(&space)?;
        let comm = commutant(&sub);
        if comm.len() <= 1 {
            leaves.push(space);
            continue;
        }
        match split_by_commutant(&comm, sub.module_dim()) {
            Some(pieces) => {
                for coords in pieces {
                    let vectors: Vec<Vector> = coords.vectors().map(|c| embed(&space, c)).collect();
                    pending.push(Subspace::span(d, &vectors));
                }
            }
            None => {
                stuck = true;
                leaves.push(space);
            }
        }
    }
    leaves.sort_by(|a, b| {
        b.dim()
            .cmp(&a.dim())
            .then_with(|| a.pivots().cmp(b.pivots()))
    });

    let (verdict, obstruction) = if stuck {
        (
            Verdict::Undetermined,
            Some("no rational idempotent found".to_string()),
        )
    } else if leaves.len() == 1 {
        (Verdict::Indecomposable, Some("commutant dim 1".to_string()))
    } else {
        (Verdict::Decomposed, None)
    };
    Ok(DecompositionResult {
        verdict,
        components: leaves,
        obstruction,
    })
}

/// Splits `Q^n` into generalized eigenspaces of a commutant element, trying
/// the weighted sum `sum (i+1) P_i` first and then each basis element.
fn split_by_commutant(comm: &[Matrix], n: usize) -> Option<Vec<Subspace>> {
    let generic = comm
        .iter()
        .enumerate()
        .fold(Matrix::zeros(n, n), |acc, (i, p)| {
            &acc + &p.scale(&Rational::from_integer((i as i64 + 1).into()))
        });
    std::iter::once(&generic)
        .chain(comm)
        .find_map(primary_split)
}

/// Generalized eigenspaces for the rational roots of the minimal polynomial
/// plus the kernel of the remaining factor. `None` when that is one piece.
fn primary_split(c: &Matrix) -> Option<Vec<Subspace>> {
    let n = c.rows();
    let minimal = Polynomial::minimal_of(c);
    let roots = minimal.rational_roots();
    let mut rest = minimal.clone();
    let mut pieces = Vec::new();
    for (root, mult) in &roots {
        let factor = c - &Matrix::identity(n).scale(root);
        pieces.push(factor.pow(*mult as u32).nullspace());
        for _ in 0..*mult {
            rest = rest.deflate(root);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        pieces.push(rest.eval_matrix(c).nullspace());
    }
    pieces.retain(|s| !s.is_zero());
    (pieces.len() > 1).then_some(pieces)
}

/// Pairs `(i, j)` in different blocks with `h_jj - h_ii = 2`, where `h` is
/// the block-diagonal `rho_h` of sl2 irreducibles of the given dimensions.
pub fn cross_block_weight_pairs(block_dims: &[usize]) -> Vec<(usize, usize)> {
    let mut weights: Vec<(usize, i64)> = Vec::new();
    for (b, &dim) in block_dims.iter().enumerate() {
        let m = dim as i64 - 1;
        weights.extend((1..=dim as i64).map(|i| (b, m + 2 - 2 * i)));
    }
    let mut out = Vec::new();
    for (i, (bi, wi)) in weights.iter().enumerate() {
        for (j, (bj, wj)) in weights.iter().enumerate() {
            if bi != bj && wj - wi == 2 {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{example_5_3, example_5_5};
    use crate::linalg::unit_vector;
    use crate::rep::LambdaVariant;
    use crate::sl2::{classify_extension_irreps, sl2_algebra, sl2_leibniz_irrep};

    #[test]
    fn necessary_condition() {
        let (alg, adj) = example_5_3();
        let w = complete_reducibility_necessary(&adj)
            .unwrap()
            .expect("kernel acts");
        assert!(alg.leibniz_kernel().unwrap().contains(&w.vector).unwrap());
        assert_eq!(w.action, "lambda");
        assert!(
            complete_reducibility_necessary(&sl2_leibniz_irrep(2, LambdaVariant::ZeroLambda))
                .unwrap()
                .is_none()
        );
        for r in classify_extension_irreps(6, 2).unwrap() {
            assert!(complete_reducibility_necessary(&r).unwrap().is_none());
        }
    }

    #[test]
    fn commutant_dimensions() {
        assert_eq!(
            commutant(&sl2_leibniz_irrep(2, LambdaVariant::ZeroLambda)).len(),
            1
        );
        let sum = example_5_5(LambdaVariant::ZeroLambda, LambdaVariant::ZeroLambda);
        assert_eq!(commutant(&sum).len(), 2);
        let zero = Representation::zero(&sl2_algebra(), 3).unwrap();
        assert_eq!(commutant(&zero).len(), 9);
    }

    #[test]
    fn example_5_5_splits_three_two() {
        let r = example_5_5(LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric);
        let result = decompose(&r).unwrap();
        assert_eq!(result.verdict, Verdict::Decomposed);
        let dims: Vec<usize> = result.components.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![3, 2]);
        let first: Vec<Vector> = (0..3).map(|i| unit_vector(5, i)).collect();
        assert_eq!(result.components[0], Subspace::span(5, &first));
    }

    #[test]
    fn irreducibles_are_indecomposable() {
        for m in 1..=3 {
            let r = sl2_leibniz_irrep(m, LambdaVariant::AntiSymmetric);
            assert_eq!(decompose(&r).unwrap().verdict, Verdict::Indecomposable);
        }
    }

    #[test]
    fn counterexample_has_no_irreducible_decomposition() {
        let (_, adj) = example_5_3();
        let result = decompose(&adj).unwrap();
        assert_eq!(result.verdict, Verdict::NoIrreducibleDecomposition);
        assert!(result.obstruction.unwrap().contains("lambda|_I != 0"));
    }

    #[test]
    fn zero_rep_splits_into_lines() {
        let zero = Representation::zero(&sl2_algebra(), 3).unwrap();
        let result = decompose(&zero).unwrap();
        assert_eq!(result.verdict, Verdict::Decomposed);
        assert_eq!(result.components.len(), 3);
    }

    #[test]
    fn equal_blocks_split() {
        // Two copies of the same irrep: the commutant is 2x2 matrices.
        let a = sl2_leibniz_irrep(1, LambdaVariant::ZeroLambda);
        let sum = a.direct_sum(&a).unwrap();
        let result = decompose(&sum).unwrap();
        assert_eq!(result.verdict, Verdict::Decomposed);
        assert!(result.components.iter().all(|c| c.dim() == 2));
    }

    #[test]
    fn weight_parity() {
        assert_eq!(cross_block_weight_pairs(&[3, 2]), vec![]);
        assert!(!cross_block_weight_pairs(&[3, 3]).is_empty());
    }
}
