use std::fmt;

use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::linalg::operators::{commutant, envelope, restrict_operator};
use crate::linalg::{add_vectors, unit_vector, EchelonBuilder, Matrix, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// `L^1 = L, L^{k+1} = [L^k, L]`
    LowerCentral,
    /// `L^[1] = L, L^[k+1] = [L^[k], L^[k]]`
    Derived,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::LowerCentral => "lower_central",
            SeriesKind::Derived => "derived",
        })
    }
}

/// Terms of a series up to the first repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    pub terminal_dim: usize,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.terminal_dim == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Yes,
    No { witness: Subspace, reason: String },
    Undetermined { blocking: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub is_lie: bool,
    pub kernel: Subspace,
    pub radical: Subspace,
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub simple: Simplicity,
    pub witnesses: Vec<(String, Subspace)>,
}

impl LeibnizAlgebra {
    /// `I = span{[b_i,b_j] + [b_j,b_i] : i <= j}`; in characteristic zero this
    /// is the span of all squares.
    pub fn leibniz_kernel(&self) -> Result<Subspace> {
        self.ensure_valid()?;
        let n = self.dim();
        let mut span = EchelonBuilder::new(n);
        for i in 0..n {
            for j in i..n {
                span.insert(&add_vectors(&self.table[i][j], &self.table[j][i]));
            }
        }
        Ok(span.into_subspace())
    }

    /// `[A, B]`: span of brackets of basis vectors.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.ensure_valid()?;
        self.check_ambient(a)?;
        self.check_ambient(b)?;
        let mut span = EchelonBuilder::new(self.dim());
        for x in a.vectors() {
            for y in b.vectors() {
                span.insert(&self.bracket_unchecked(x, y));
                if span.is_full() {
                    return Ok(span.into_subspace());
                }
            }
        }
        Ok(span.into_subspace())
    }

    /// Smallest two-sided ideal containing the seeds.
    pub fn ideal_closure(&self, seeds: &[Vector]) -> Result<Subspace> {
        self.ensure_valid()?;
        let n = self.dim();
        if let Some(s) = seeds.iter().find(|s| s.len() != n) {
            return Err(Error::DimensionMismatch {
                context: "ideal seed",
                expected: n,
                found: s.len(),
            });
        }
        let mut gens = Vec::with_capacity(2 * n);
        for j in 0..n {
            let b = unit_vector(n, j);
            gens.push(self.right_mult(&b));
            gens.push(self.left_mult(&b));
        }
        Ok(crate::linalg::operators::spin(seeds, &gens, n))
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        self.ensure_valid()?;
        self.check_ambient(u)?;
        let n = self.dim();
        for x in u.vectors() {
            for j in 0..n {
                let b = unit_vector(n, j);
                if !u.contains(&self.bracket_unchecked(x, &b))?
                    || !u.contains(&self.bracket_unchecked(&b, x))?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        self.ensure_valid()?;
        self.check_ambient(u)?;
        for x in u.vectors() {
            for y in u.vectors() {
                if !u.contains(&self.bracket_unchecked(x, y))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `L / ideal` on the standard basis vectors at the non-pivot
    /// coordinates of the ideal, together with the projection `L -> L/ideal`.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let comp = ideal.complement_coordinates();
        let q = comp.len();
        let project = |v: &[crate::linalg::Rational]| -> Vector {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let mut table = vec![vec![crate::linalg::zero_vector(q); q]; q];
        for (a, &ca) in comp.iter().enumerate() {
            for (b, &cb) in comp.iter().enumerate() {
                table[a][b] = project(&self.table[ca][cb]);
            }
        }
        let columns: Vec<Vector> = (0..n).map(|j| project(&unit_vector(n, j))).collect();
        let projection = Matrix::from_columns(&columns, q);
        let basis = comp.iter().map(|&c| self.basis[c].clone()).collect();
        let quotient = LeibnizAlgebra::new(format!("{} / ideal", self.name), basis, table)?;
        if !quotient.is_valid() {
            return Err(Error::Internal(
                "quotient by an ideal fails the Leibniz identity".into(),
            ));
        }
        Ok((quotient, projection))
    }

    pub fn lower_central_series(&self) -> Result<SeriesReport> {
        self.ensure_valid()?;
        let full = Subspace::full(self.dim());
        self.series(SeriesKind::LowerCentral, full, |alg, t| {
            alg.product_space(t, &Subspace::full(alg.dim()))
        })
    }

    pub fn derived_series(&self) -> Result<SeriesReport> {
        self.derived_series_of(&Subspace::full(self.dim()))
    }

    /// Derived series of a subalgebra `u`: `u, [u,u], [[u,u],[u,u]], ...`.
    pub fn derived_series_of(&self, u: &Subspace) -> Result<SeriesReport> {
        self.ensure_valid()?;
        self.check_ambient(u)?;
        self.series(SeriesKind::Derived, u.clone(), |alg, t| {
            alg.product_space(t, t)
        })
    }

    fn series(
        &self,
        kind: SeriesKind,
        first: Subspace,
        step: impl Fn(&Self, &Subspace) -> Result<Subspace>,
    ) -> Result<SeriesReport> {
        // Terms strictly decrease for subalgebras, so dim + 1 steps suffice;
        // the cap only matters for subspaces that are not closed.
        let mut terms = vec![first];
        let mut stabilized = false;
        for _ in 0..=self.dim() {
            let next = step(self, terms.last().unwrap())?;
            if &next == terms.last().unwrap() {
                stabilized = true;
                break;
            }
            terms.push(next);
        }
        let terminal_dim = terms.last().unwrap().dim();
        Ok(SeriesReport {
            kind,
            terms,
            stabilized,
            terminal_dim,
        })
    }

    pub fn is_solvable(&self) -> Result<bool> {
        Ok(self.derived_series()?.reaches_zero())
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.lower_central_series()?.reaches_zero())
    }

    /// `kappa(b_i, b_j) = trace(ad b_i ad b_j)`, for Lie algebras only.
    pub fn killing_form(&self) -> Result<Matrix> {
        self.ensure_valid()?;
        if !self.is_lie() {
            return Err(Error::NotLie(self.name.clone()));
        }
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n)
            .map(|i| self.right_mult(&unit_vector(n, i)))
            .collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        Ok(k)
    }

    /// Maximal solvable ideal.
    ///
    /// The radical of the Lie quotient `Q = L/I` is the Killing-orthogonal
    /// complement of `[Q,Q]`; its preimage in `L` is the radical of `L`.
    pub fn radical(&self) -> Result<Subspace> {
        let kernel = self.leibniz_kernel()?;
        let (q, _) = self.quotient(&kernel)?;
        let kappa = q.killing_form()?;
        let full_q = Subspace::full(q.dim());
        let derived_q = q.product_space(&full_q, &full_q)?;
        let constraints = derived_q.basis() * &kappa;
        let rad_q = constraints.nullspace();

        let comp = kernel.complement_coordinates();
        let mut span = EchelonBuilder::from_subspace(&kernel);
        for v in rad_q.vectors() {
            let mut lifted = crate::linalg::zero_vector(self.dim());
            for (a, &c) in comp.iter().enumerate() {
                lifted[c] = v[a].clone();
            }
            span.insert(&lifted);
        }
        let radical = span.into_subspace();
        if !self.is_ideal(&radical)? || !self.derived_series_of(&radical)?.reaches_zero() {
            return Err(Error::Internal(
                "computed radical is not a solvable ideal".into(),
            ));
        }
        Ok(radical)
    }

    /// Semisimple iff the radical equals the Leibniz kernel.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()? == self.leibniz_kernel()?)
    }

    /// Three-valued simplicity test (`[L,L] != I` and the only ideals are
    /// `0, I, L`).
    ///
    /// `No` is always backed by an explicit ideal. `Yes` requires that `L/I`
    /// has nondegenerate Killing form and one-dimensional adjoint commutant,
    /// and that `L` acts absolutely irreducibly on `I`.
    pub fn is_simple(&self) -> Result<Simplicity> {
        let n = self.dim();
        let kernel = self.leibniz_kernel()?;
        let full = Subspace::full(n);
        let derived = self.product_space(&full, &full)?;
        if derived == kernel {
            return Ok(Simplicity::No {
                witness: derived,
                reason: "[L,L] = I".into(),
            });
        }
        let is_trivial = |u: &Subspace| u.is_zero() || u == &kernel || u.is_full();

        if !is_trivial(&derived) {
            return Ok(Simplicity::No {
                witness: derived,
                reason: "[L,L] is a proper ideal".into(),
            });
        }
        let radical = self.radical()?;
        if !is_trivial(&radical) {
            return Ok(Simplicity::No {
                witness: radical,
                reason: "radical is a proper ideal".into(),
            });
        }
        for seed in Self::probe_vectors(n) {
            let closure = self.ideal_closure(std::slice::from_ref(&seed))?;
            if !is_trivial(&closure) {
                return Ok(Simplicity::No {
                    witness: closure,
                    reason: format!("ideal generated by {}", self.format_vector(&seed)),
                });
            }
        }

        let (q, _) = self.quotient(&kernel)?;
        let kappa = q.killing_form()?;
        if !kappa.is_invertible() {
            return Ok(Simplicity::Undetermined {
                blocking: "Killing form of L/I is degenerate".into(),
            });
        }
        let qn = q.dim();
        let ads: Vec<Matrix> = (0..qn).map(|i| q.right_mult(&unit_vector(qn, i))).collect();
        if commutant(&ads, qn).len() != 1 {
            return Ok(Simplicity::Undetermined {
                blocking: "adjoint commutant of L/I has dimension > 1".into(),
            });
        }
        if !kernel.is_zero() {
            let k = kernel.dim();
            let mut gens = Vec::with_capacity(n);
            for j in 0..n {
                let r = self.right_mult(&unit_vector(n, j));
                gens.push(
                    restrict_operator(&r, &kernel)
                        .ok_or_else(|| Error::Internal("Leibniz kernel is not invariant".into()))?,
                );
            }
            if envelope(&gens, k).dim() != k * k {
                return Ok(Simplicity::Undetermined {
                    blocking: "action of L on I is not absolutely irreducible".into(),
                });
            }
        }
        Ok(Simplicity::Yes)
    }

    /// Standard basis vectors followed by a few fixed combinations.
    fn probe_vectors(n: usize) -> Vec<Vector> {
        let mut out: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
        if n > 1 {
            out.push((0..n).map(|i| crate::linalg::int(i as i64 + 1)).collect());
            out.push(
                (0..n)
                    .map(|i| crate::linalg::int(if i % 2 == 0 { 1 } else { -1 }))
                    .collect(),
            );
        }
        out
    }

    pub fn structure_report(&self) -> Result<StructureReport> {
        let kernel = self.leibniz_kernel()?;
        let radical = self.radical()?;
        let lower = self.lower_central_series()?;
        let derived = self.derived_series()?;
        let simple = self.is_simple()?;
        let mut witnesses = vec![
            ("leibniz_kernel".to_string(), kernel.clone()),
            ("radical".to_string(), radical.clone()),
            (
                "derived_terminal".to_string(),
                derived.terms.last().unwrap().clone(),
            ),
            (
                "lower_central_terminal".to_string(),
                lower.terms.last().unwrap().clone(),
            ),
        ];
        if let Simplicity::No { witness, .. } = &simple {
            witnesses.push(("non_simple_ideal".to_string(), witness.clone()));
        }
        Ok(StructureReport {
            is_lie: self.is_lie(),
            semisimple: radical == kernel,
            kernel,
            radical,
            solvable: derived.reaches_zero(),
            nilpotent: lower.reaches_zero(),
            simple,
            witnesses,
        })
    }

    pub(crate) fn check_ambient(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "subspace of the algebra",
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example_5_3_algebra;
    use crate::linalg::{int, unit_vector};
    use crate::sl2::{simple_ext_algebra, sl2_algebra};

    fn span(n: usize, idx: &[usize]) -> Subspace {
        Subspace::span(
            n,
            &idx.iter().map(|&i| unit_vector(n, i)).collect::<Vec<_>>(),
        )
    }

    /// Two-dimensional non-abelian Lie algebra: [a,b] = b, [b,a] = -b.
    fn affine_line() -> LeibnizAlgebra {
        LeibnizAlgebra::from_brackets(
            "aff1",
            &["a", "b"],
            &[(0, 1, vec![(1, int(1))]), (1, 0, vec![(1, int(-1))])],
        )
        .unwrap()
    }

    #[test]
    fn kernel_examples() {
        assert!(sl2_algebra().leibniz_kernel().unwrap().is_zero());
        assert_eq!(
            example_5_3_algebra().leibniz_kernel().unwrap(),
            span(5, &[3, 4])
        );
        for n in 5..=9 {
            let alg = simple_ext_algebra(n).unwrap();
            assert_eq!(
                alg.leibniz_kernel().unwrap(),
                span(n, &(3..n).collect::<Vec<_>>())
            );
        }
    }

    #[test]
    fn product_space_examples() {
        let sl2 = sl2_algebra();
        assert!(sl2
            .product_space(&Subspace::full(3), &Subspace::zero(3))
            .unwrap()
            .is_zero());
        assert!(sl2
            .product_space(&Subspace::full(3), &Subspace::full(3))
            .unwrap()
            .is_full());
        let ex = example_5_3_algebra();
        let i = ex.leibniz_kernel().unwrap();
        assert!(ex.product_space(&i, &i).unwrap().is_zero());
    }

    #[test]
    fn ideal_closure_examples() {
        let ex = example_5_3_algebra();
        assert!(ex.ideal_closure(&[]).unwrap().is_zero());
        assert_eq!(
            ex.ideal_closure(&[unit_vector(5, 3)]).unwrap(),
            span(5, &[3, 4])
        );
        assert!(sl2_algebra()
            .ideal_closure(&[unit_vector(3, 0)])
            .unwrap()
            .is_full());
    }

    #[test]
    fn ideal_and_subalgebra_tests() {
        let sl2 = sl2_algebra();
        let e = span(3, &[0]);
        assert!(sl2.is_subalgebra(&e).unwrap());
        assert!(!sl2.is_ideal(&e).unwrap());
        assert!(sl2.is_ideal(&Subspace::full(3)).unwrap());
        let ex = example_5_3_algebra();
        assert!(ex.is_ideal(&ex.leibniz_kernel().unwrap()).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let sl2 = sl2_algebra();
        let (q, p) = sl2.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(q.table(), sl2.table());
        assert_eq!(p, Matrix::identity(3));

        for n in 5..=7 {
            let alg = simple_ext_algebra(n).unwrap();
            let (q, _) = alg.quotient(&alg.leibniz_kernel().unwrap()).unwrap();
            assert!(q.is_lie());
            assert_eq!(q.table(), sl2.table());
        }
        let ex = example_5_3_algebra();
        assert_eq!(
            ex.quotient(&ex.leibniz_kernel().unwrap()).unwrap().0.dim(),
            3
        );
        assert!(matches!(
            sl2.quotient(&span(3, &[0])),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn series_examples() {
        let ab = LeibnizAlgebra::abelian(2);
        let d = ab.derived_series().unwrap();
        assert_eq!(d.dims(), vec![2, 0]);
        assert!(d.stabilized);

        let sl2 = sl2_algebra();
        assert_eq!(sl2.lower_central_series().unwrap().dims(), vec![3]);
        assert_eq!(sl2.derived_series().unwrap().dims(), vec![3]);
        assert!(!sl2.is_solvable().unwrap());
        assert!(!sl2.is_nilpotent().unwrap());

        let ex = example_5_3_algebra();
        let i = ex.leibniz_kernel().unwrap();
        assert_eq!(ex.derived_series_of(&i).unwrap().dims(), vec![2, 0]);
    }

    #[test]
    fn killing_form_examples() {
        assert!(LeibnizAlgebra::abelian(3).killing_form().unwrap().is_zero());
        let k = sl2_algebra().killing_form().unwrap();
        // With [e,h] = 2e: ad_e ad_f sends e to -2e and h to -2h.
        assert_eq!(k, Matrix::from_i64(&[&[0, -4, 0], &[-4, 0, 0], &[0, 0, 8]]));
        assert!(affine_line().killing_form().unwrap().rank() < 2);
        assert!(matches!(
            simple_ext_algebra(5).unwrap().killing_form(),
            Err(Error::NotLie(_))
        ));
    }

    #[test]
    fn radical_examples() {
        assert!(sl2_algebra().radical().unwrap().is_zero());
        assert_eq!(
            simple_ext_algebra(5).unwrap().radical().unwrap(),
            span(5, &[3, 4])
        );
        let sum = sl2_algebra().direct_sum(&LeibnizAlgebra::abelian(1));
        assert_eq!(sum.radical().unwrap(), span(4, &[3]));
        assert!(affine_line().radical().unwrap().is_full());
    }

    #[test]
    fn semisimple_examples() {
        assert!(sl2_algebra().is_semisimple().unwrap());
        for n in 5..=7 {
            assert!(simple_ext_algebra(n).unwrap().is_semisimple().unwrap());
        }
        assert!(!LeibnizAlgebra::abelian(1).is_semisimple().unwrap());
    }

    #[test]
    fn simplicity_examples() {
        assert_eq!(sl2_algebra().is_simple().unwrap(), Simplicity::Yes);
        assert_eq!(
            simple_ext_algebra(5).unwrap().is_simple().unwrap(),
            Simplicity::Yes
        );
        assert_eq!(example_5_3_algebra().is_simple().unwrap(), Simplicity::Yes);
        let double = sl2_algebra().direct_sum(&sl2_algebra());
        match double.is_simple().unwrap() {
            Simplicity::No { witness, .. } => {
                assert_eq!(witness.dim(), 3);
                assert!(witness == span(6, &[0, 1, 2]) || witness == span(6, &[3, 4, 5]));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert!(matches!(
            LeibnizAlgebra::abelian(1).is_simple().unwrap(),
            Simplicity::No { .. }
        ));
    }
}
