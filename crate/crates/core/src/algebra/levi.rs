use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, zero_vector, EchelonBuilder, Matrix, Subspace, Vector};

impl LeibnizAlgebra {
    /// Levi complement `S` with `L = S + I` for a semisimple algebra.
    ///
    /// Starts from the section `sigma` of `L/I` given by the non-pivot
    /// coordinates of `I` and solves for a correction `w: L/I -> I` making
    /// `sigma + w` a homomorphism. Since `[L, I] = 0` and `[I, I] = 0` the
    /// condition is linear in `w`:
    ///
    /// `[sigma a, sigma b] - sigma [a,b] + [w a, sigma b] - w [a,b] = 0`.
    pub fn levi_subalgebra(&self) -> Result<Subspace> {
        if !self.is_semisimple()? {
            return Err(Error::Precondition(
                "Levi complement is only computed for semisimple algebras".into(),
            ));
        }
        let n = self.dim();
        let kernel = self.leibniz_kernel()?;
        let (quotient, _) = self.quotient(&kernel)?;
        let comp = kernel.complement_coordinates();
        let q = comp.len();
        let k = kernel.dim();
        let kernel_vecs = kernel.basis_vectors();
        let section = |coords: &[crate::linalg::Rational]| -> Vector {
            let mut v = zero_vector(n);
            for (a, &c) in comp.iter().enumerate() {
                v[c] = coords[a].clone();
            }
            v
        };

        // Unknown W_{t,a}: coefficient of kernel basis vector t in w(a).
        let var = |t: usize, a: usize| t * q + a;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        for a in 0..q {
            for b in 0..q {
                let sa = unit_vector(n, comp[a]);
                let sb = unit_vector(n, comp[b]);
                let qab = quotient.structure(a, b);
                let mut constant = self.bracket_unchecked(&sa, &sb);
                let lifted = section(qab);
                for (c, l) in constant.iter_mut().zip(&lifted) {
                    *c -= l;
                }
                let kernel_brackets: Vec<Vector> = kernel_vecs
                    .iter()
                    .map(|kt| self.bracket_unchecked(kt, &sb))
                    .collect();
                for r in 0..n {
                    let mut row = zero_vector(k * q);
                    for t in 0..k {
                        row[var(t, a)] += &kernel_brackets[t][r];
                        for (c, coeff) in qab.iter().enumerate() {
                            row[var(t, c)] -= coeff * &kernel_vecs[t][r];
                        }
                    }
                    rows.push(row);
                    rhs.push(-constant[r].clone());
                }
            }
        }
        let w = if k == 0 {
            Vec::new()
        } else {
            let system = Matrix::from_rows(rows, k * q);
            system
                .solve(&rhs)?
                .ok_or_else(|| Error::Internal("Levi correction system is inconsistent".into()))?
                .particular
        };

        let mut span = EchelonBuilder::new(n);
        for a in 0..q {
            let mut v = unit_vector(n, comp[a]);
            for t in 0..k {
                crate::linalg::axpy(&w[var(t, a)], &kernel_vecs[t], &mut v);
            }
            span.insert(&v);
        }
        let levi = span.into_subspace();

        let complementary = levi.intersect(&kernel)?.is_zero() && levi.sum(&kernel)?.is_full();
        if !complementary || !self.is_subalgebra(&levi)? || !self.subalgebra(&levi)?.is_lie() {
            return Err(Error::Internal(
                "Levi complement failed verification".into(),
            ));
        }
        Ok(levi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example_5_3_algebra;
    use crate::sl2::{simple_ext_algebra, sl2_algebra};

    fn efh(n: usize) -> Subspace {
        Subspace::span(
            n,
            &[unit_vector(n, 0), unit_vector(n, 1), unit_vector(n, 2)],
        )
    }

    #[test]
    fn lie_input_is_its_own_complement() {
        assert!(sl2_algebra().levi_subalgebra().unwrap().is_full());
    }

    #[test]
    fn extension_family_complement_is_sl2() {
        for n in 5..=8 {
            assert_eq!(
                simple_ext_algebra(n).unwrap().levi_subalgebra().unwrap(),
                efh(n)
            );
        }
        let ex = example_5_3_algebra();
        let s = ex.levi_subalgebra().unwrap();
        assert_eq!(s, efh(5));
        assert_eq!(ex.subalgebra(&s).unwrap().table(), sl2_algebra().table());
    }

    #[test]
    fn non_semisimple_is_rejected() {
        let sum = sl2_algebra().direct_sum(&LeibnizAlgebra::abelian(1));
        assert!(matches!(sum.levi_subalgebra(), Err(Error::Precondition(_))));
    }
}
