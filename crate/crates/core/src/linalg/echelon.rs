use num_traits::{One, Zero};

use super::{axpy, Rational, Subspace, Vector};

/// Incrementally grown reduced row-echelon basis.
///
/// Used for spinning vectors and growing matrix envelopes, where vectors
/// arrive one at a time and most of them turn out to be dependent.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(space: &Subspace) -> Self {
        let mut b = Self::new(space.ambient_dim());
        for v in space.vectors() {
            b.insert(v);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Residue of `v` modulo the current span (zero iff `v` is contained).
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.dim, "vector length must match ambient dim");
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&c, row, &mut r);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &r[p];
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(&c, &r, row);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::from_echelon_rows(self.dim, self.rows, self.pivots)
    }

    pub fn to_subspace(&self) -> Subspace {
        self.clone().into_subspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn insert_tracks_rank() {
        let mut b = EchelonBuilder::new(3);
        assert!(b.insert(&[int(1), int(1), int(0)]));
        assert!(b.insert(&[int(0), int(2), int(2)]));
        assert!(!b.insert(&[int(1), int(3), int(2)]));
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&[int(2), int(0), int(-2)]));
        assert!(!b.contains(&[int(0), int(0), int(1)]));
    }
}
