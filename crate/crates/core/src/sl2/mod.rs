//! The Lie algebra sl2, its Leibniz representations, and the family of
//! simple Leibniz algebras `sl2 + V` built on an irreducible sl2-module.

mod constraints;
mod extension;

pub use constraints::{
    check_sl2_constraints, check_sl2_matrices, lambda_f_solution_space, Sl2ConstraintReport,
};
pub use extension::{extension_rep_solve, ExtensionBranch, ExtensionSolution, ExtensionStatus};

use crate::algebra::{LeibnizAlgebra, SparseBracket};
use crate::error::{Error, Result};
use crate::linalg::{int, unit_vector, Matrix, Subspace, Vector};
use crate::rep::{LambdaVariant, Representation};

/// sl2 on the basis `(e, f, h)` with `[e,f] = h`, `[e,h] = 2e`,
/// `[h,f] = 2f` and antisymmetry.
pub fn sl2_algebra() -> LeibnizAlgebra {
    LeibnizAlgebra::from_brackets("sl2", &["e", "f", "h"], &sl2_brackets())
        .expect("sl2 table is well-formed")
}

fn sl2_brackets() -> Vec<SparseBracket> {
    vec![
        (0, 1, vec![(2, int(1))]),
        (1, 0, vec![(2, int(-1))]),
        (0, 2, vec![(0, int(2))]),
        (2, 0, vec![(0, int(-2))]),
        (2, 1, vec![(1, int(2))]),
        (1, 2, vec![(1, int(-2))]),
    ]
}

/// `(rho_e, rho_f, rho_h)` of the `(m+1)`-dimensional irreducible module.
/// With 1-based indices: `(rho_e)_{i,i+1} = i(m+1-i)`,
/// `(rho_f)_{i,i-1} = -1`, `(rho_h)_{i,i} = m+2-2i`.
pub fn sl2_irrep_rho(m: usize) -> [Matrix; 3] {
    let d = m + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let m = m as i64;
    for i in 1..=d {
        let ii = i as i64;
        if i < d {
            e[(i - 1, i)] = int(ii * (m + 1 - ii));
        }
        if i > 1 {
            f[(i - 1, i - 2)] = int(-1);
        }
        h[(i - 1, i - 1)] = int(m + 2 - 2 * ii);
    }
    [e, f, h]
}

/// The `(m+1)`-dimensional Leibniz representation of sl2 with `lambda = 0`
/// or `lambda = -rho`.
pub fn sl2_leibniz_irrep(m: usize, variant: LambdaVariant) -> Representation {
    let rho = sl2_irrep_rho(m).to_vec();
    let lambda = lambda_for(&rho, variant);
    Representation::new(sl2_algebra(), rho, lambda).expect("sl2 irreps satisfy the axioms")
}

fn lambda_for(rho: &[Matrix], variant: LambdaVariant) -> Vec<Matrix> {
    match variant {
        LambdaVariant::ZeroLambda => rho
            .iter()
            .map(|m| Matrix::zeros(m.rows(), m.cols()))
            .collect(),
        LambdaVariant::AntiSymmetric => rho.iter().map(|m| -m).collect(),
    }
}

/// The variants that give distinct representations in dimension `m+1`.
pub fn variants_for(m: usize) -> Vec<LambdaVariant> {
    if m == 0 {
        vec![LambdaVariant::ZeroLambda]
    } else {
        vec![LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric]
    }
}

/// The `n`-dimensional simple Leibniz algebra on `(e, f, h, x0, ..., x_{n-4})`:
/// sl2 plus `[x_k,h] = (n-4-2k) x_k`, `[x_k,f] = x_{k+1}`,
/// `[x_k,e] = k(k+3-n) x_{k-1}`.
pub fn simple_ext_algebra(n: usize) -> Result<LeibnizAlgebra> {
    if n < 5 {
        return Err(Error::Precondition(format!(
            "extension family needs n >= 5, got {n}"
        )));
    }
    let nx = n - 3;
    let mut labels: Vec<String> = vec!["e".into(), "f".into(), "h".into()];
    labels.extend((0..nx).map(|k| format!("x{k}")));
    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut brackets = sl2_brackets();
    let n_i = n as i64;
    for k in 0..nx {
        let ki = k as i64;
        let xk = 3 + k;
        let weight = n_i - 4 - 2 * ki;
        if weight != 0 {
            brackets.push((xk, 2, vec![(xk, int(weight))]));
        }
        if k + 1 < nx {
            brackets.push((xk, 1, vec![(xk + 1, int(1))]));
        }
        if k >= 1 {
            brackets.push((xk, 0, vec![(xk - 1, int(ki * (ki + 3 - n_i)))]));
        }
    }
    LeibnizAlgebra::from_brackets(format!("simple-ext-{n}"), &labels, &brackets)
}

/// The two `(m+1)`-dimensional representations of `simple_ext_algebra(n)`:
/// the sl2 irreps extended by zero on every `x_k`.
pub fn classify_extension_irreps(n: usize, m: usize) -> Result<Vec<Representation>> {
    classify_irreps(&simple_ext_algebra(n)?, m)
}

/// Irreducible `(m+1)`-dimensional representations of a semisimple Leibniz
/// algebra whose Levi complement is sl2 on the basis elements `e, f, h`:
/// `rho` and `lambda` vanish on the kernel and restrict on `span{e,f,h}`
/// to one of the two sl2 Leibniz irreps.
pub fn classify_irreps(alg: &LeibnizAlgebra, m: usize) -> Result<Vec<Representation>> {
    let n = alg.dim();
    let levi = alg.levi_subalgebra()?;
    let idx = ["e", "f", "h"]
        .iter()
        .map(|l| alg.index_of(l))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Precondition("algebra has no basis elements e, f, h".into()))?;
    let sl2_vectors: Vec<Vector> = idx.iter().map(|&i| unit_vector(n, i)).collect();
    let span = Subspace::span(n, &sl2_vectors);
    if span != levi || !alg.subalgebra(&span)?.same_structure(&sl2_algebra()) {
        return Err(Error::Precondition(
            "Levi complement is not sl2 on the basis elements e, f, h".into(),
        ));
    }
    // Coordinates of every basis element along e, f, h in L = S + I.
    let kernel = alg.leibniz_kernel()?;
    let mut columns = sl2_vectors.clone();
    columns.extend(kernel.basis_vectors());
    let frame = Matrix::from_columns(&columns, n).inverse().ok_or_else(|| {
        Error::Internal("Levi complement and kernel are not complementary".into())
    })?;

    let rho_s = sl2_irrep_rho(m);
    let mut reps = Vec::new();
    for variant in variants_for(m) {
        let lambda_s = lambda_for(&rho_s, variant);
        let lift = |mats: &[Matrix]| -> Vec<Matrix> {
            (0..n)
                .map(|b| {
                    let coords = frame.mul_vec(&unit_vector(n, b));
                    (0..3).fold(Matrix::zeros(m + 1, m + 1), |acc, s| {
                        &acc + &mats[s].scale(&coords[s])
                    })
                })
                .collect()
        };
        reps.push(Representation::new(
            alg.clone(),
            lift(&rho_s),
            lift(&lambda_s),
        )?);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Simplicity;
    use crate::linalg::{frac, Subspace};

    #[test]
    fn sl2_table() {
        let sl2 = sl2_algebra();
        assert!(sl2.check_leibniz().is_empty());
        assert!(sl2.is_lie());
        assert!(sl2.leibniz_kernel().unwrap().is_zero());
        assert_eq!(sl2.structure(0, 1), &[int(0), int(0), int(1)]);
        assert_eq!(sl2.structure(2, 0), &[int(-2), int(0), int(0)]);
        assert_eq!(sl2.structure(2, 1), &[int(0), int(2), int(0)]);
    }

    #[test]
    fn irrep_matrices() {
        let [e, f, h] = sl2_irrep_rho(1);
        assert_eq!(e, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(f, Matrix::from_i64(&[&[0, 0], &[-1, 0]]));
        assert_eq!(h, Matrix::from_i64(&[&[1, 0], &[0, -1]]));

        let [e, _, h] = sl2_irrep_rho(2);
        assert_eq!(e, Matrix::from_i64(&[&[0, 2, 0], &[0, 0, 2], &[0, 0, 0]]));
        assert_eq!(h, Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));

        for m in sl2_irrep_rho(0) {
            assert!(m.is_zero() && m.rows() == 1);
        }
    }

    #[test]
    fn superdiagonal_matches_display() {
        // m, 2(m-1), 3(m-2), ...
        let m = 6;
        let [e, _, _] = sl2_irrep_rho(m);
        for i in 1..=m {
            assert_eq!(e[(i - 1, i)], int((i * (m + 1 - i)) as i64));
        }
    }

    #[test]
    fn irrep_variants() {
        for v in [LambdaVariant::ZeroLambda, LambdaVariant::AntiSymmetric] {
            let r = sl2_leibniz_irrep(2, v);
            assert_eq!(r.dichotomy_classify().unwrap().variant, v);
        }
        assert_eq!(
            sl2_leibniz_irrep(0, LambdaVariant::ZeroLambda),
            sl2_leibniz_irrep(0, LambdaVariant::AntiSymmetric)
        );
    }

    #[test]
    fn extension_tables() {
        assert!(simple_ext_algebra(4).is_err());
        let a5 = simple_ext_algebra(5).unwrap();
        let x0 = unit_vector(5, 3);
        let x1 = unit_vector(5, 4);
        let e = unit_vector(5, 0);
        let f = unit_vector(5, 1);
        let h = unit_vector(5, 2);
        assert_eq!(a5.bracket(&x0, &h).unwrap(), x0);
        assert_eq!(
            a5.bracket(&x1, &h).unwrap(),
            crate::linalg::scale_vector(&int(-1), &x1)
        );
        assert_eq!(a5.bracket(&x0, &f).unwrap(), x1);
        assert_eq!(
            a5.bracket(&x1, &e).unwrap(),
            crate::linalg::scale_vector(&int(-1), &x0)
        );

        let a6 = simple_ext_algebra(6).unwrap();
        assert!(a6
            .bracket(&unit_vector(6, 4), &unit_vector(6, 2))
            .unwrap()
            .iter()
            .all(|c| *c == int(0)));
    }

    #[test]
    fn extension_structure() {
        for n in 5..=9 {
            let alg = simple_ext_algebra(n).unwrap();
            assert!(alg.check_leibniz().is_empty(), "n={n}");
            let kernel = alg.leibniz_kernel().unwrap();
            let xs: Vec<Vector> = (3..n).map(|i| unit_vector(n, i)).collect();
            assert_eq!(kernel, Subspace::span(n, &xs));
            assert_eq!(alg.is_simple().unwrap(), Simplicity::Yes, "n={n}");
            assert!(alg.is_semisimple().unwrap());
            assert_eq!(alg.radical().unwrap(), kernel);
            let (q, _) = alg.quotient(&kernel).unwrap();
            assert!(q.same_structure(&sl2_algebra()));
        }
    }

    #[test]
    fn classified_reps_vanish_on_kernel() {
        let reps = classify_extension_irreps(5, 2).unwrap();
        assert_eq!(reps.len(), 2);
        for r in &reps {
            assert_eq!(r.module_dim(), 3);
            for k in 3..5 {
                assert!(r.rho()[k].is_zero() && r.lambda()[k].is_zero());
            }
        }
        assert_eq!(classify_extension_irreps(7, 0).unwrap().len(), 1);
    }

    #[test]
    fn classify_on_a_rebased_kernel() {
        // Replace x0 by x0 + x1: the kernel is still spanned by the x's.
        let alg = simple_ext_algebra(5).unwrap();
        let mut p = Matrix::identity(5);
        p[(4, 3)] = frac(1, 1);
        let rebased = alg.change_basis(&p).unwrap();
        // Labels are lost by the change of basis, so classification refuses.
        assert!(matches!(
            classify_irreps(&rebased, 1),
            Err(Error::Precondition(_))
        ));
    }
}
