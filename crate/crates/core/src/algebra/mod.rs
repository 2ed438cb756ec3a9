//! Finite-dimensional (right) Leibniz algebras given by structure constants.

mod derivations;
mod levi;
mod structure;

pub use structure::{SeriesKind, SeriesReport, Simplicity, StructureReport};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector,
};

/// `(i, j, [(k, c), ...])`: `[b_i, b_j] = sum c b_k`.
pub type SparseBracket = (usize, usize, Vec<(usize, Rational)>);

/// Leibniz algebra over Q in a named basis.
///
/// `table[i][j]` holds the coordinates of `[b_i, b_j]`. The Leibniz
/// identity `[[x,y],z] = [[x,z],y] + [x,[y,z]]` is checked on construction;
/// the violating triples are kept and every structural operation refuses an
/// algebra that has any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeibnizAlgebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<Vector>>,
    violations: Vec<(usize, usize, usize)>,
}

impl LeibnizAlgebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        let n = basis.len();
        if table.len() != n {
            return Err(Error::DimensionMismatch {
                context: "structure tensor rows",
                expected: n,
                found: table.len(),
            });
        }
        for row in &table {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "structure tensor columns",
                    expected: n,
                    found: row.len(),
                });
            }
            if let Some(v) = row.iter().find(|v| v.len() != n) {
                return Err(Error::DimensionMismatch {
                    context: "structure tensor entry",
                    expected: n,
                    found: v.len(),
                });
            }
        }
        for (i, label) in basis.iter().enumerate() {
            if basis[..i].contains(label) {
                return Err(Error::Shape(format!("duplicate basis label `{label}`")));
            }
        }
        let mut alg = Self {
            name: name.into(),
            basis,
            table,
            violations: Vec::new(),
        };
        alg.violations = alg.leibniz_violations();
        Ok(alg)
    }

    /// Builds an algebra from a sparse list of nonzero brackets
    /// `(i, j, [(k, coeff), ...])`, meaning `[b_i, b_j] = sum coeff * b_k`.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: &[&str],
        brackets: &[SparseBracket],
    ) -> Result<Self> {
        let n = basis.len();
        let mut table = vec![vec![zero_vector(n); n]; n];
        for (i, j, terms) in brackets {
            for (k, c) in terms {
                table[*i][*j][*k] += c;
            }
        }
        Self::new(name, basis.iter().map(|s| s.to_string()).collect(), table)
    }

    /// Abelian algebra of the given dimension with basis `a0, a1, ...`.
    pub fn abelian(dim: usize) -> Self {
        let basis = (0..dim).map(|i| format!("a{i}")).collect();
        Self::new(
            format!("abelian-{dim}"),
            basis,
            vec![vec![zero_vector(dim); dim]; dim],
        )
        .expect("abelian table is well-formed")
    }

    /// Direct sum; the second summand's labels get a suffix when they clash.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut basis = self.basis.clone();
        for label in &other.basis {
            let mut l = label.clone();
            while basis.contains(&l) {
                l.push('\'');
            }
            basis.push(l);
        }
        let mut table = vec![vec![zero_vector(n); n]; n];
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                table[i][j][..n1].clone_from_slice(v);
            }
        }
        for (i, row) in other.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                table[n1 + i][n1 + j][n1..].clone_from_slice(v);
            }
        }
        LeibnizAlgebra::new(format!("{} + {}", self.name, other.name), basis, table)
            .expect("direct sum table is well-formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == label)
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<Vector>] {
        &self.table
    }

    /// Basis triples where the Leibniz identity fails (empty for a valid
    /// algebra). Checking basis triples suffices by trilinearity.
    pub fn check_leibniz(&self) -> &[(usize, usize, usize)] {
        &self.violations
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(&t) => Err(Error::NotLeibniz(t)),
        }
    }

    /// Same algebra under a new name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Equal structure constants, ignoring the name and labels.
    pub fn same_structure(&self, other: &LeibnizAlgebra) -> bool {
        self.table == other.table
    }

    /// The same algebra in the basis given by the columns of `p`
    /// (`b'_i = sum_j p_ji b_j`). Labels become `b0, b1, ...`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LeibnizAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::Shape(format!("change of basis must be {n}x{n}")));
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let table = cols
            .iter()
            .map(|x| {
                cols.iter()
                    .map(|y| inv.mul_vec(&self.bracket_unchecked(x, y)))
                    .collect()
            })
            .collect();
        let basis = (0..n).map(|i| format!("b{i}")).collect();
        LeibnizAlgebra::new(format!("{} (rebased)", self.name), basis, table)
    }

    fn leibniz_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.bracket_unchecked(&self.table[i][j], &unit_vector(n, k));
                    let mut rhs = self.bracket_unchecked(&self.table[i][k], &unit_vector(n, j));
                    let tail = self.bracket_unchecked(&unit_vector(n, i), &self.table[j][k]);
                    axpy(&Rational::from_integer(1.into()), &tail, &mut rhs);
                    if lhs != rhs {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "bracket operand",
                    expected: n,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                axpy(&c, &self.table[i][j], &mut out);
            }
        }
        out
    }

    /// Matrix of right multiplication `v -> [v, x]`.
    pub fn right_mult(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| self.bracket_unchecked(&unit_vector(n, j), x))
            .collect();
        Matrix::from_columns(&columns, n)
    }

    /// Matrix of left multiplication `v -> [x, v]`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| self.bracket_unchecked(x, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(&columns, n)
    }

    /// True iff `[b_i, b_j] + [b_j, b_i] = 0` for all basis pairs.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (i..n).all(|j| {
                self.table[i][j]
                    .iter()
                    .zip(&self.table[j][i])
                    .all(|(a, b)| (a + b).is_zero())
            })
        })
    }

    /// The structure constants of the subalgebra `sub`, expressed in its
    /// echelon basis. Basis vectors that are standard basis vectors keep
    /// their label; others are named `s0, s1, ...`.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<LeibnizAlgebra> {
        self.ensure_valid()?;
        if sub.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "subalgebra ambient",
                expected: self.dim(),
                found: sub.ambient_dim(),
            });
        }
        let vectors = sub.basis_vectors();
        let k = vectors.len();
        let mut table = vec![vec![zero_vector(k); k]; k];
        for (a, va) in vectors.iter().enumerate() {
            for (b, vb) in vectors.iter().enumerate() {
                let w = self.bracket_unchecked(va, vb);
                table[a][b] = sub.coordinates(&w).ok_or(Error::NotASubalgebra)?;
            }
        }
        let basis = vectors
            .iter()
            .enumerate()
            .map(|(a, v)| self.label_of(v).unwrap_or_else(|| format!("s{a}")))
            .collect();
        LeibnizAlgebra::new(format!("{} (subalgebra)", self.name), basis, table)
    }

    /// Label for a vector that is exactly a standard basis vector.
    pub fn label_of(&self, v: &[Rational]) -> Option<String> {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        match nz.as_slice() {
            [i] if v[*i] == Rational::from_integer(1.into()) => Some(self.basis[*i].clone()),
            _ => None,
        }
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_vector(&self, v: &[Rational]) -> String {
        if is_zero_vector(v) {
            return "0".to_string();
        }
        let mut s = String::new();
        for (c, label) in v.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if abs != Rational::from_integer(1.into()) {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(label);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;
    use crate::sl2::sl2_algebra;

    #[test]
    fn sl2_bracket_e_f_is_h() {
        let sl2 = sl2_algebra();
        let (e, f, h) = (unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2));
        assert_eq!(sl2.bracket(&e, &f).unwrap(), h);
        assert_eq!(sl2.bracket(&e, &zero_vector(3)).unwrap(), zero_vector(3));
        assert!(sl2.bracket(&e, &[int(1)]).is_err());
    }

    #[test]
    fn detects_leibniz_violation() {
        // [a,a] = a: the left side is a, the right side 2a.
        let alg =
            LeibnizAlgebra::from_brackets("bad", &["a"], &[(0, 0, vec![(0, int(1))])]).unwrap();
        assert!(alg.check_leibniz().contains(&(0, 0, 0)));
        assert!(matches!(alg.ensure_valid(), Err(Error::NotLeibniz(_))));
        assert!(alg.leibniz_kernel().is_err());
    }

    #[test]
    fn lie_flags() {
        assert!(sl2_algebra().is_lie());
        assert!(LeibnizAlgebra::abelian(1).is_lie());
        assert!(!crate::sl2::simple_ext_algebra(5).unwrap().is_lie());
    }

    #[test]
    fn rejects_ragged_tensor() {
        let r = LeibnizAlgebra::new("x", vec!["a".into()], vec![vec![vec![int(0), int(1)]]]);
        assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn format_vector_reads_naturally() {
        let sl2 = sl2_algebra();
        assert_eq!(sl2.format_vector(&[int(1), int(0), int(-2)]), "e - 2*h");
        assert_eq!(sl2.format_vector(&zero_vector(3)), "0");
    }
}
