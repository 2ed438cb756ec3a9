//! Spans generated by families of square matrices: spinning, associative
//! envelopes, commutants.

use std::collections::VecDeque;

use super::{EchelonBuilder, Matrix, Rational, Subspace, Vector};

/// Smallest subspace containing `seeds` and invariant under every generator.
pub fn spin(seeds: &[Vector], generators: &[Matrix], n: usize) -> Subspace {
    let mut span = EchelonBuilder::new(n);
    let mut queue: VecDeque<Vector> = VecDeque::new();
    for s in seeds {
        if span.insert(s) {
            queue.push_back(s.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in generators {
            let w = g.mul_vec(&v);
            if span.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    span.into_subspace()
}

/// The associative algebra generated by the identity and `generators`,
/// as a subspace of flattened `n x n` matrices. Grown breadth-first by
/// left-multiplying new elements with generators until the span is stable.
pub fn envelope(generators: &[Matrix], n: usize) -> Subspace {
    let mut span = EchelonBuilder::new(n * n);
    let mut queue: VecDeque<Matrix> = VecDeque::new();
    let id = Matrix::identity(n);
    span.insert(id.entries());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in generators {
            let w = g * &m;
            if span.insert(w.entries()) {
                queue.push_back(w);
            }
        }
    }
    span.into_subspace()
}

/// Basis of all `P` with `P g = g P` for every generator.
pub fn commutant(generators: &[Matrix], n: usize) -> Vec<Matrix> {
    let vars = n * n;
    let mut rows: Vec<Vector> = Vec::with_capacity(generators.len() * vars);
    for g in generators {
        for i in 0..n {
            for j in 0..n {
                let mut row = super::zero_vector(vars);
                // (P g)_{ij} = sum_r P_{ir} g_{rj}
                for r in 0..n {
                    row[i * n + r] += &g[(r, j)];
                }
                // (g P)_{ij} = sum_r g_{ir} P_{rj}
                for r in 0..n {
                    row[r * n + j] -= &g[(i, r)];
                }
                if !super::is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows, vars);
    system
        .nullspace()
        .vectors()
        .map(|v| Matrix::from_entries(n, n, v.to_vec()))
        .collect()
}

/// Matrix of `op` restricted to an invariant subspace, in the subspace's
/// echelon basis. `None` if the subspace is not invariant.
pub fn restrict_operator(op: &Matrix, space: &Subspace) -> Option<Matrix> {
    let k = space.dim();
    let mut columns: Vec<Vector> = Vec::with_capacity(k);
    for v in space.vectors() {
        columns.push(space.coordinates(&op.mul_vec(v))?);
    }
    Some(Matrix::from_columns(&columns, k))
}

/// Embeds coordinates with respect to the echelon basis of `space` back into
/// the ambient space.
pub fn embed(space: &Subspace, coords: &[Rational]) -> Vector {
    let mut v = super::zero_vector(space.ambient_dim());
    for (c, row) in coords.iter().zip(space.vectors()) {
        super::axpy(c, row, &mut v);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    #[test]
    fn spin_jordan_block() {
        let j = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            spin(&[unit_vector(3, 0)], std::slice::from_ref(&j), 3).dim(),
            1
        );
        assert_eq!(spin(&[unit_vector(3, 2)], &[j], 3).dim(), 3);
    }

    #[test]
    fn envelope_of_full_matrix_algebra() {
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(envelope(&[e.clone(), f], 2).dim(), 4);
        assert_eq!(envelope(&[e], 2).dim(), 2);
        assert_eq!(envelope(&[], 3).dim(), 1);
    }

    #[test]
    fn commutant_of_diagonal() {
        let d = Matrix::diagonal(&[crate::linalg::int(1), crate::linalg::int(2)]);
        assert_eq!(commutant(&[d], 2).len(), 2);
        assert_eq!(commutant(&[], 2).len(), 4);
    }
}
