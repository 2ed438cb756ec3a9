use super::LeibnizAlgebra;
use crate::error::Result;
use crate::linalg::{unit_vector, zero_vector, Matrix, Subspace, Vector};

impl LeibnizAlgebra {
    /// All derivations `d[x,y] = [dx,y] + [x,dy]`, as flattened row-major
    /// `n x n` matrices acting on column vectors.
    pub fn derivations(&self) -> Result<Subspace> {
        self.ensure_valid()?;
        let n = self.dim();
        let var = |p: usize, q: usize| p * n + q;
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut row = zero_vector(n * n);
                    // (d[b_i,b_j])_k = sum_l c_ij^l d_kl
                    for (l, c) in self.table[i][j].iter().enumerate() {
                        row[var(k, l)] += c;
                    }
                    // ([d b_i, b_j])_k = sum_p d_pi c_pj^k
                    for p in 0..n {
                        row[var(p, i)] -= &self.table[p][j][k];
                    }
                    // ([b_i, d b_j])_k = sum_p d_pj c_ip^k
                    for p in 0..n {
                        row[var(p, j)] -= &self.table[i][p][k];
                    }
                    if !crate::linalg::is_zero_vector(&row) {
                        rows.push(row);
                    }
                }
            }
        }
        Ok(Matrix::from_rows(rows, n * n).nullspace())
    }

    /// Span of the right multiplications `r_x = [., x]`.
    pub fn inner_derivations(&self) -> Result<Subspace> {
        self.ensure_valid()?;
        let n = self.dim();
        let flat: Vec<Vector> = (0..n)
            .map(|i| self.right_mult(&unit_vector(n, i)).into_entries())
            .collect();
        Ok(Subspace::span(n * n, &flat))
    }

    /// Checks `Inn(L) <= Der(L)` and `[Der(L), Inn(L)] <= Inn(L)` under the
    /// matrix commutator.
    pub fn check_inn_ideal(&self) -> Result<bool> {
        let n = self.dim();
        let der = self.derivations()?;
        let inn = self.inner_derivations()?;
        if !inn.is_subspace_of(&der)? {
            return Ok(false);
        }
        let inn_mats: Vec<Matrix> = inn
            .vectors()
            .map(|v| Matrix::from_entries(n, n, v.to_vec()))
            .collect();
        for d in der.vectors() {
            let d = Matrix::from_entries(n, n, d.to_vec());
            for r in &inn_mats {
                if !inn.contains(d.commutator(r).entries())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
