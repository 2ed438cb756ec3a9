use super::sl2_algebra;
use crate::error::{Error, Result};
use crate::linalg::{int, zero_vector, Matrix, Subspace, Vector};
use crate::rep::Representation;

/// Which of the twelve sl2 constraint identities hold.
///
/// Identities 1-3 have one printed form; 4-12 each have two, the first
/// from axiom (2) and the second from axiom (3) or the reversed pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2ConstraintReport {
    /// `forms[i]` lists, for identity `i + 1`, whether each printed form
    /// holds exactly.
    pub forms: Vec<Vec<bool>>,
    /// 1-based indices of identities with at least one failing form.
    pub failing_identities: Vec<usize>,
}

impl Sl2ConstraintReport {
    pub fn holds(&self, identity: usize) -> bool {
        self.forms[identity - 1].iter().all(|&b| b)
    }

    pub fn all_hold(&self) -> bool {
        self.failing_identities.is_empty()
    }
}

/// Evaluates the twelve constraint identities on a representation of sl2.
pub fn check_sl2_constraints(rep: &Representation) -> Result<Sl2ConstraintReport> {
    if !rep.algebra().same_structure(&sl2_algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    check_sl2_matrices(rep.rho(), rep.lambda())
}

/// The same identities on raw `(rho, lambda)` triples in the order
/// `(e, f, h)`, which need not form a representation.
pub fn check_sl2_matrices(rho: &[Matrix], lambda: &[Matrix]) -> Result<Sl2ConstraintReport> {
    if rho.len() != 3 || lambda.len() != 3 {
        return Err(Error::Shape(
            "sl2 needs three rho and three lambda matrices".into(),
        ));
    }
    let d = rho[0].rows();
    if rho
        .iter()
        .chain(lambda)
        .any(|m| m.rows() != d || m.cols() != d)
    {
        return Err(Error::Shape(format!("all matrices must be {d}x{d}")));
    }
    let [re, rf, rh] = [&rho[0], &rho[1], &rho[2]];
    let [le, lf, lh] = [&lambda[0], &lambda[1], &lambda[2]];
    let zero = Matrix::zeros(d, d);
    let two = int(2);
    let twice = |m: &Matrix| m.scale(&two);
    let neg = |m: Matrix| -&m;

    // Each identity: a list of (lhs, rhs) pairs.
    let identities: Vec<Vec<(Matrix, Matrix)>> = vec![
        vec![(rh.clone(), &(rf * re) - &(re * rf))],
        vec![(twice(re), &(rh * re) - &(re * rh))],
        vec![(twice(rf), &(rf * rh) - &(rh * rf))],
        vec![
            (lh.clone(), &(rf * le) - &(le * rf)),
            (lh.clone(), &(lf * re) - &(re * lf)),
        ],
        vec![
            (lh.clone(), &(rf * le) + &(le * lf)),
            (lh.clone(), &neg(lf * le) - &(re * lf)),
        ],
        vec![
            (zero.clone(), &(rh * lh) - &(lh * rh)),
            (zero.clone(), &(rh * lh) + &(lh * lh)),
        ],
        vec![
            (twice(le), &(rh * le) - &(le * rh)),
            (twice(le), &(lh * re) - &(re * lh)),
        ],
        vec![
            (twice(le), &(rh * le) + &(le * lh)),
            (twice(le), &neg(lh * le) - &(re * lh)),
        ],
        vec![
            (zero.clone(), &(re * le) - &(le * re)),
            (zero.clone(), &(re * le) + &(le * le)),
        ],
        vec![
            (twice(lf), &(rf * lh) - &(lh * rf)),
            (twice(lf), &(lf * rh) - &(rh * lf)),
        ],
        vec![
            (twice(lf), &(rf * lh) + &(lh * lf)),
            (twice(lf), &neg(lf * lh) - &(rh * lf)),
        ],
        vec![
            (zero.clone(), &(rf * lf) - &(lf * rf)),
            (zero, &(rf * lf) + &(lf * lf)),
        ],
    ];
    let forms: Vec<Vec<bool>> = identities
        .iter()
        .map(|forms| forms.iter().map(|(l, r)| l == r).collect())
        .collect();
    let failing_identities = forms
        .iter()
        .enumerate()
        .filter(|(_, f)| f.iter().any(|ok| !ok))
        .map(|(i, _)| i + 1)
        .collect();
    Ok(Sl2ConstraintReport {
        forms,
        failing_identities,
    })
}

/// All `X` with `2X = X rho_h - rho_h X` (the second form of identity 10,
/// with `X` in place of `lambda_f`), as flattened row-major matrices.
pub fn lambda_f_solution_space(rho_h: &Matrix) -> Subspace {
    let d = rho_h.rows();
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut row = zero_vector(d * d);
            row[i * d + j] += int(2);
            // (X rho_h)_{ij} = sum_r X_ir (rho_h)_rj
            for r in 0..d {
                row[i * d + r] -= &rho_h[(r, j)];
            }
            // (rho_h X)_{ij} = sum_r (rho_h)_ir X_rj
            for r in 0..d {
                row[r * d + j] += &rho_h[(i, r)];
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(rows, d * d).nullspace()
}
