use num_traits::Zero;

use super::{axpy, EchelonBuilder, Matrix, Rational, Vector};
use crate::error::{Error, Result};

/// Linear subspace of `Q^n`, stored as a reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal and the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut b = EchelonBuilder::new(ambient);
        for v in vectors {
            b.insert(v);
        }
        b.into_subspace()
    }

    pub fn try_span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                context: "subspace span",
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Self::span(ambient, vectors))
    }

    pub(crate) fn from_echelon_rows(ambient: usize, rows: Vec<Vector>, pivots: Vec<usize>) -> Self {
        Self {
            ambient,
            basis: Matrix::from_rows(rows, ambient),
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis vectors as the rows of a reduced row-echelon matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Rational]> {
        self.basis.row_vectors()
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.vectors().map(<[Rational]>::to_vec).collect()
    }

    /// Coordinates that are not pivots. The corresponding standard basis
    /// vectors span a complement of `self`.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Residue of `v` after eliminating the pivot coordinates. Zero exactly
    /// when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(
            v.len(),
            self.ambient,
            "vector length must match ambient dim"
        );
        let mut r = v.to_vec();
        for (row, &p) in self.basis.row_vectors().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&c, row, &mut r);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.reduce(v).iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = super::zero_vector(self.ambient);
        for (c, row) in coords.iter().zip(self.basis.row_vectors()) {
            axpy(c, row, &mut rebuilt);
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut b = EchelonBuilder::from_subspace(self);
        for v in other.vectors() {
            b.insert(v);
        }
        Ok(b.into_subspace())
    }

    /// Vectors `a` with `a . u = 0` for every `u` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        self.basis.nullspace()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = self
            .annihilator()
            .basis()
            .vstack(other.annihilator().basis())?;
        Ok(stacked.nullspace())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self
            .vectors()
            .all(|v| other.reduce(v).iter().all(Zero::is_zero)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        if map.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace image",
                expected: self.ambient,
                found: map.cols(),
            });
        }
        let images: Vec<Vector> = self.vectors().map(|v| map.mul_vec(v)).collect();
        Ok(Subspace::span(map.rows(), &images))
    }

    /// True when `map` sends the subspace into itself.
    pub fn is_invariant_under(&self, map: &Matrix) -> bool {
        map.is_square()
            && map.cols() == self.ambient
            && self
                .vectors()
                .all(|v| self.reduce(&map.mul_vec(v)).iter().all(Zero::is_zero))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace membership",
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit_vector};

    #[test]
    fn lattice_examples() {
        let e1 = Subspace::span(2, &[unit_vector(2, 0)]);
        let e2 = Subspace::span(2, &[unit_vector(2, 1)]);
        let diag = Subspace::span(2, &[vec![int(1), int(1)]]);
        assert_eq!(e1.sum(&Subspace::zero(2)).unwrap(), e1);
        assert_eq!(e1.intersect(&e2).unwrap(), Subspace::zero(2));
        assert_eq!(e1.sum(&diag).unwrap(), Subspace::full(2));
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&[int(1)]).is_err());
    }

    #[test]
    fn coordinates_in_echelon_basis() {
        let s = Subspace::span(
            3,
            &[vec![int(1), int(0), int(2)], vec![int(0), int(1), int(3)]],
        );
        assert_eq!(
            s.coordinates(&[int(2), int(-1), int(1)]),
            Some(vec![int(2), int(-1)])
        );
        assert_eq!(s.coordinates(&[int(0), int(0), int(1)]), None);
        assert_eq!(s.complement_coordinates(), vec![2]);
    }
}
