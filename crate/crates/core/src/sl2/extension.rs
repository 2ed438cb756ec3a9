//! Solving for every `(m+1)`-dimensional representation of
//! `simple_ext_algebra(n)` whose restriction to sl2 has `rho` equal to the
//! irreducible `sl2_irrep_rho(m)`.
//!
//! Unknowns are `rho_{x_k}`, `lambda_{x_k}` and `lambda_e, lambda_f,
//! lambda_h`. The axioms on all basis pairs give polynomial equations of
//! degree at most two in the matrix entries. The linear ones are solved
//! first; the rest are then reduced in the remaining parameters by three
//! exact moves: new linear equations, a rank-one form `q (l.z)^2 = 0`
//! giving `l.z = 0`, and a branch on a univariate quadratic with rational
//! roots. Anything else is reported as undetermined.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{simple_ext_algebra, sl2_irrep_rho};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vector, zero_vector, Matrix, Polynomial, Rational, Vector};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionStatus {
    Solved,
    Undetermined(String),
}

/// One solution family of the quadratic stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionBranch {
    /// `(lambda_e, lambda_f, lambda_h)` at the base point of the branch.
    pub lambda_sl2: Vec<Matrix>,
    pub free_parameters: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSolution {
    pub n: usize,
    pub m: usize,
    pub status: ExtensionStatus,
    /// `rho_{x_k}` for each `k`, when every branch pins it down.
    pub forced_rho_i: Vec<Matrix>,
    pub forced_lambda_i: Vec<Matrix>,
    /// Largest number of free parameters left in any branch.
    pub free_parameters: usize,
    /// Parameters left after the linear stage.
    pub stage1_parameters: usize,
    /// Whether the linear stage alone determined every `x_k` matrix.
    pub linear_stage_forced: bool,
    /// Number of rank-one quadratic eliminations used.
    pub quadratic_eliminations: usize,
    pub branches: Vec<ExtensionBranch>,
}

impl ExtensionSolution {
    pub fn all_forced_zero(&self) -> bool {
        self.status == ExtensionStatus::Solved
            && self.free_parameters == 0
            && !self.forced_rho_i.is_empty()
            && self
                .forced_rho_i
                .iter()
                .chain(&self.forced_lambda_i)
                .all(Matrix::is_zero)
    }
}

pub fn extension_rep_solve(n: usize, m: usize) -> Result<ExtensionSolution> {
    if m == 0 {
        return Err(Error::Precondition("extension solve needs m >= 1".into()));
    }
    let alg = simple_ext_algebra(n)?;
    let layout = Layout {
        nx: n - 3,
        d: m + 1,
    };
    let irrep = sl2_irrep_rho(m);

    let equations = build_equations(&alg, &layout, &irrep);
    let vars = layout.vars();

    // Stage 1: the equations with no quadratic part.
    let (linear, quadratic): (Vec<QuadPoly>, Vec<QuadPoly>) =
        equations.into_iter().partition(QuadPoly::is_linear);
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for p in &linear {
        let mut row = zero_vector(vars);
        for (&i, c) in &p.linear {
            row[i] = c.clone();
        }
        rows.push(row);
        rhs.push(-p.constant.clone());
    }
    let solution = Matrix::from_rows(rows, vars)
        .solve(&rhs)?
        .ok_or_else(|| Error::Internal("linear constraints are inconsistent".into()))?;
    let base = solution.particular;
    let dirs = solution.homogeneous.basis_vectors();
    let x_range = 0..layout.lambda_sl2_offset(0);
    let linear_stage_forced = dirs.iter().all(|v| is_zero_vector(&v[x_range.clone()]));

    // Stage 2 on the remaining parameters.
    let dense: Vec<Dense> = quadratic
        .iter()
        .map(|p| p.restrict(&base, &dirs))
        .filter(|p| !p.is_zero())
        .collect();
    let mut stats = Stats::default();
    let branches = match reduce(dense, base, dirs.clone(), &mut stats) {
        Ok(b) => b,
        Err(reason) => {
            return Ok(ExtensionSolution {
                n,
                m,
                status: ExtensionStatus::Undetermined(reason),
                forced_rho_i: Vec::new(),
                forced_lambda_i: Vec::new(),
                free_parameters: 0,
                stage1_parameters: dirs.len(),
                linear_stage_forced,
                quadratic_eliminations: stats.rank_one,
                branches: Vec::new(),
            })
        }
    };
    if branches.is_empty() {
        return Err(Error::Internal("no solution branch survived".into()));
    }

    let undetermined = |reason: &str| ExtensionStatus::Undetermined(reason.to_string());
    let mut status = ExtensionStatus::Solved;
    let first_x = &branches[0].0[x_range.clone()];
    if branches.iter().any(|(b, _)| &b[x_range.clone()] != first_x) {
        status = undetermined("branches disagree on the kernel matrices");
    }
    if branches
        .iter()
        .any(|(_, dirs)| dirs.iter().any(|v| !is_zero_vector(&v[x_range.clone()])))
    {
        status = undetermined("kernel matrices keep free parameters");
    }

    let base0 = &branches[0].0;
    let forced_rho_i = (0..layout.nx)
        .map(|k| layout.matrix(base0, layout.rho_x_offset(k)))
        .collect();
    let forced_lambda_i: Vec<Matrix> = (0..layout.nx)
        .map(|k| layout.matrix(base0, layout.lambda_x_offset(k)))
        .collect();
    let free_parameters = branches.iter().map(|(_, d)| d.len()).max().unwrap_or(0);

    let mut out_branches = Vec::new();
    for (b, d) in &branches {
        let lambda_sl2: Vec<Matrix> = (0..3)
            .map(|s| layout.matrix(b, layout.lambda_sl2_offset(s)))
            .collect();
        if d.is_empty() {
            let mut rho: Vec<Matrix> = irrep.to_vec();
            let mut lambda = lambda_sl2.clone();
            for k in 0..layout.nx {
                rho.push(layout.matrix(b, layout.rho_x_offset(k)));
                lambda.push(layout.matrix(b, layout.lambda_x_offset(k)));
            }
            Representation::new(alg.clone(), rho, lambda)
                .map_err(|e| Error::Internal(format!("solved branch fails the axioms: {e}")))?;
        }
        out_branches.push(ExtensionBranch {
            lambda_sl2,
            free_parameters: d.len(),
        });
    }

    Ok(ExtensionSolution {
        n,
        m,
        status,
        forced_rho_i,
        forced_lambda_i,
        free_parameters,
        stage1_parameters: dirs.len(),
        linear_stage_forced,
        quadratic_eliminations: stats.rank_one,
        branches: out_branches,
    })
}

/// Positions of the unknown matrices in the flat variable vector.
struct Layout {
    nx: usize,
    d: usize,
}

impl Layout {
    fn block(&self) -> usize {
        self.d * self.d
    }

    fn vars(&self) -> usize {
        (2 * self.nx + 3) * self.block()
    }

    fn rho_x_offset(&self, k: usize) -> usize {
        k * self.block()
    }

    fn lambda_x_offset(&self, k: usize) -> usize {
        (self.nx + k) * self.block()
    }

    fn lambda_sl2_offset(&self, s: usize) -> usize {
        (2 * self.nx + s) * self.block()
    }

    fn matrix(&self, values: &[Rational], offset: usize) -> Matrix {
        Matrix::from_entries(
            self.d,
            self.d,
            values[offset..offset + self.block()].to_vec(),
        )
    }
}

fn build_equations(
    alg: &crate::algebra::LeibnizAlgebra,
    layout: &Layout,
    irrep: &[Matrix; 3],
) -> Vec<QuadPoly> {
    let n = alg.dim();
    let d = layout.d;
    let rho: Vec<PolyMatrix> = (0..n)
        .map(|i| match i {
            0..=2 => PolyMatrix::known(&irrep[i]),
            _ => PolyMatrix::unknown(layout.rho_x_offset(i - 3), d),
        })
        .collect();
    let lambda: Vec<PolyMatrix> = (0..n)
        .map(|i| match i {
            0..=2 => PolyMatrix::unknown(layout.lambda_sl2_offset(i), d),
            _ => PolyMatrix::unknown(layout.lambda_x_offset(i - 3), d),
        })
        .collect();

    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = alg.structure(x, y);
            let rho_xy = PolyMatrix::combine(&rho, c, d);
            let lambda_xy = PolyMatrix::combine(&lambda, c, d);
            let ryrx = rho[y].mul(&rho[x]);
            let rxry = rho[x].mul(&rho[y]);
            let rylx = rho[y].mul(&lambda[x]);
            let lxry = lambda[x].mul(&rho[y]);
            let lxly = lambda[x].mul(&lambda[y]);
            // (1) rho_[x,y] - (rho_y rho_x - rho_x rho_y)
            out.extend(rho_xy.sub(&ryrx.sub(&rxry)).entries);
            // (2) lambda_[x,y] - (rho_y lambda_x - lambda_x rho_y)
            out.extend(lambda_xy.sub(&rylx.sub(&lxry)).entries);
            // (3) lambda_[x,y] - (rho_y lambda_x + lambda_x lambda_y)
            out.extend(lambda_xy.sub(&rylx.add(&lxly)).entries);
        }
    }
    out.retain(|p| !p.is_zero());
    out.sort();
    out.dedup();
    out
}

/// Sparse polynomial of degree at most two; quadratic keys have `a <= b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
struct QuadPoly {
    constant: Rational,
    linear: BTreeMap<usize, Rational>,
    quadratic: BTreeMap<(usize, usize), Rational>,
}

fn add_term<K: Ord + Copy>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

impl QuadPoly {
    fn constant(c: Rational) -> Self {
        Self {
            constant: c,
            ..Self::default()
        }
    }

    fn var(i: usize) -> Self {
        let mut p = Self::default();
        p.linear.insert(i, Rational::one());
        p
    }

    fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    fn is_linear(&self) -> bool {
        self.quadratic.is_empty()
    }

    fn add_scaled(&mut self, other: &QuadPoly, s: &Rational) {
        if s.is_zero() {
            return;
        }
        self.constant += &other.constant * s;
        for (&k, c) in &other.linear {
            add_term(&mut self.linear, k, c * s);
        }
        for (&k, c) in &other.quadratic {
            add_term(&mut self.quadratic, k, c * s);
        }
    }

    /// Product of two polynomials whose degrees add up to at most two.
    fn mul(&self, other: &QuadPoly) -> QuadPoly {
        let mut out = QuadPoly::default();
        if self.is_zero() || other.is_zero() {
            return out;
        }
        assert!(
            (self.quadratic.is_empty() || other.linear.is_empty() && other.quadratic.is_empty())
                && (other.quadratic.is_empty()
                    || self.linear.is_empty() && self.quadratic.is_empty()),
            "product exceeds degree two"
        );
        out.add_scaled(other, &self.constant);
        if !other.constant.is_zero() {
            for (&k, c) in &self.linear {
                add_term(&mut out.linear, k, c * &other.constant);
            }
            for (&k, c) in &self.quadratic {
                add_term(&mut out.quadratic, k, c * &other.constant);
            }
        }
        for (&a, ca) in &self.linear {
            for (&b, cb) in &other.linear {
                add_term(&mut out.quadratic, (a.min(b), a.max(b)), ca * cb);
            }
        }
        out
    }

    /// Substitutes `u = base + sum_t z_t dirs[t]`.
    fn restrict(&self, base: &[Rational], dirs: &[Vector]) -> Dense {
        let p = dirs.len();
        let mut out = Dense::zero(p);
        out.c = self.constant.clone();
        for (&i, c) in &self.linear {
            out.c += c * &base[i];
            for (t, dir) in dirs.iter().enumerate() {
                out.l[t] += c * &dir[i];
            }
        }
        for (&(a, b), c) in &self.quadratic {
            // (base_a + sum_t z_t dir_t[a]) (base_b + sum_s z_s dir_s[b])
            out.c += c * &base[a] * &base[b];
            for (t, dir) in dirs.iter().enumerate() {
                out.l[t] += c * (&dir[a] * &base[b] + &base[a] * &dir[b]);
            }
            for (t, dt) in dirs.iter().enumerate() {
                if dt[a].is_zero() {
                    continue;
                }
                for (s, ds) in dirs.iter().enumerate() {
                    if !ds[b].is_zero() {
                        out.q[t.min(s)][t.max(s)] += c * &dt[a] * &ds[b];
                    }
                }
            }
        }
        out
    }
}

/// Matrix whose entries are polynomials, stored row-major.
struct PolyMatrix {
    d: usize,
    entries: Vec<QuadPoly>,
}

impl PolyMatrix {
    fn known(m: &Matrix) -> Self {
        Self {
            d: m.rows(),
            entries: m
                .entries()
                .iter()
                .cloned()
                .map(QuadPoly::constant)
                .collect(),
        }
    }

    fn unknown(offset: usize, d: usize) -> Self {
        Self {
            d,
            entries: (0..d * d).map(|i| QuadPoly::var(offset + i)).collect(),
        }
    }

    fn combine(mats: &[PolyMatrix], coeffs: &[Rational], d: usize) -> Self {
        let mut entries = vec![QuadPoly::default(); d * d];
        for (m, c) in mats.iter().zip(coeffs) {
            for (e, p) in entries.iter_mut().zip(&m.entries) {
                e.add_scaled(p, c);
            }
        }
        Self { d, entries }
    }

    fn mul(&self, other: &PolyMatrix) -> Self {
        let d = self.d;
        let mut entries = vec![QuadPoly::default(); d * d];
        for i in 0..d {
            for r in 0..d {
                let a = &self.entries[i * d + r];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[r * d + j];
                    if !b.is_zero() {
                        entries[i * d + j].add_scaled(&a.mul(b), &Rational::one());
                    }
                }
            }
        }
        Self { d, entries }
    }

    fn add(&self, other: &PolyMatrix) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    fn sub(&self, other: &PolyMatrix) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    fn add_scaled(&self, other: &PolyMatrix, s: &Rational) -> Self {
        let mut entries = self.entries.clone();
        for (e, p) in entries.iter_mut().zip(&other.entries) {
            e.add_scaled(p, s);
        }
        Self { d: self.d, entries }
    }
}

/// Dense quadratic in a few parameters; only `q[i][j]` with `i <= j` is used.
#[derive(Clone, Debug)]
struct Dense {
    c: Rational,
    l: Vector,
    q: Vec<Vector>,
}

impl Dense {
    fn zero(p: usize) -> Self {
        Self {
            c: Rational::zero(),
            l: zero_vector(p),
            q: vec![zero_vector(p); p],
        }
    }

    fn is_zero(&self) -> bool {
        self.c.is_zero() && is_zero_vector(&self.l) && self.q.iter().all(|r| is_zero_vector(r))
    }

    fn is_linear(&self) -> bool {
        self.q.iter().all(|r| is_zero_vector(r))
    }

    fn is_homogeneous_quadratic(&self) -> bool {
        self.c.is_zero() && is_zero_vector(&self.l)
    }

    /// Symmetric matrix `S` with `z^T S z` equal to the quadratic part.
    fn symmetric(&self) -> Matrix {
        let p = self.l.len();
        let half = Rational::new(1.into(), 2.into());
        let mut s = Matrix::zeros(p, p);
        for i in 0..p {
            s[(i, i)] = self.q[i][i].clone();
            for j in i + 1..p {
                let v = &self.q[i][j] * &half;
                s[(i, j)] = v.clone();
                s[(j, i)] = v;
            }
        }
        s
    }

    /// The only variable this polynomial involves, if there is exactly one.
    fn single_variable(&self) -> Option<usize> {
        let p = self.l.len();
        let mut used: Vec<usize> = (0..p).filter(|&i| !self.l[i].is_zero()).collect();
        for i in 0..p {
            for j in i..p {
                if !self.q[i][j].is_zero() {
                    if i != j {
                        return None;
                    }
                    used.push(i);
                }
            }
        }
        used.sort_unstable();
        used.dedup();
        match used.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Substitutes `z = origin + sum_r s_r dirs[r]`.
    fn substitute(&self, origin: &[Rational], dirs: &[Vector]) -> Dense {
        let p = self.l.len();
        let mut as_poly = QuadPoly::constant(self.c.clone());
        for i in 0..p {
            add_term(&mut as_poly.linear, i, self.l[i].clone());
            for j in i..p {
                add_term(&mut as_poly.quadratic, (i, j), self.q[i][j].clone());
            }
        }
        as_poly.restrict(origin, dirs)
    }
}

#[derive(Default)]
struct Stats {
    rank_one: usize,
}

type Branch = (Vector, Vec<Vector>);

/// Reduces the system; `Err` carries the reason it got stuck.
fn reduce(
    polys: Vec<Dense>,
    base: Vector,
    dirs: Vec<Vector>,
    stats: &mut Stats,
) -> std::result::Result<Vec<Branch>, String> {
    let polys: Vec<Dense> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    if polys.is_empty() {
        return Ok(vec![(base, dirs)]);
    }
    let p = dirs.len();

    let linear: Vec<&Dense> = polys.iter().filter(|q| q.is_linear()).collect();
    if !linear.is_empty() {
        let rows: Vec<Vector> = linear.iter().map(|q| q.l.clone()).collect();
        let rhs: Vector = linear.iter().map(|q| -q.c.clone()).collect();
        return impose(&polys, base, dirs, rows, rhs, stats);
    }

    for q in &polys {
        if !q.is_homogeneous_quadratic() {
            continue;
        }
        let s = q.symmetric();
        if s.rank() == 1 {
            let row = s
                .row_vectors()
                .find(|r| !is_zero_vector(r))
                .expect("rank one has a nonzero row")
                .to_vec();
            stats.rank_one += 1;
            return impose(&polys, base, dirs, vec![row], vec![Rational::zero()], stats);
        }
    }

    for q in &polys {
        let Some(t) = q.single_variable() else {
            continue;
        };
        let poly = Polynomial::new(vec![q.c.clone(), q.l[t].clone(), q.q[t][t].clone()]);
        let roots = poly.rational_roots();
        if roots.iter().map(|(_, mult)| mult).sum::<usize>() < 2 {
            return Err(format!("quadratic `{poly}` has irrational roots"));
        }
        let mut out = Vec::new();
        for (root, _) in roots {
            let mut row = zero_vector(p);
            row[t] = Rational::one();
            out.extend(impose(
                &polys,
                base.clone(),
                dirs.clone(),
                vec![row],
                vec![root],
                stats,
            )?);
        }
        return Ok(out);
    }

    Err(format!(
        "{} quadratic equations in {p} parameters are not of a reducible form",
        polys.len()
    ))
}

/// Restricts to the affine subspace where `rows * z = rhs` and continues.
fn impose(
    polys: &[Dense],
    base: Vector,
    dirs: Vec<Vector>,
    rows: Vec<Vector>,
    rhs: Vector,
    stats: &mut Stats,
) -> std::result::Result<Vec<Branch>, String> {
    let p = dirs.len();
    if p == 0 {
        // Only constants remain; any nonzero one is a contradiction.
        return Ok(if rhs.iter().all(Zero::is_zero) {
            vec![(base, dirs)]
        } else {
            Vec::new()
        });
    }
    let Some(sol) = Matrix::from_rows(rows, p)
        .solve(&rhs)
        .map_err(|e| e.to_string())?
    else {
        return Ok(Vec::new());
    };
    let origin = sol.particular;
    let new_dirs_z = sol.homogeneous.basis_vectors();
    let mut new_base = base;
    for (t, dir) in dirs.iter().enumerate() {
        axpy(&origin[t], dir, &mut new_base);
    }
    let new_dirs: Vec<Vector> = new_dirs_z
        .iter()
        .map(|h| {
            let mut v = zero_vector(new_base.len());
            for (t, dir) in dirs.iter().enumerate() {
                axpy(&h[t], dir, &mut v);
            }
            v
        })
        .collect();
    let substituted: Vec<Dense> = polys
        .iter()
        .map(|q| q.substitute(&origin, &new_dirs_z))
        .collect();
    reduce(substituted, new_base, new_dirs, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn small_cases_force_zero() {
        for (n, m) in [(5, 1), (5, 2), (6, 1), (7, 1)] {
            let s = extension_rep_solve(n, m).unwrap();
            assert_eq!(s.status, ExtensionStatus::Solved, "n={n} m={m}");
            assert!(s.all_forced_zero(), "n={n} m={m}");
            assert_eq!(s.branches.len(), 2);
        }
    }

    #[test]
    fn branches_are_the_two_irreps() {
        let s = extension_rep_solve(6, 2).unwrap();
        let rho = sl2_irrep_rho(2);
        let mut found: Vec<bool> = s
            .branches
            .iter()
            .map(|b| b.lambda_sl2.iter().all(Matrix::is_zero))
            .collect();
        found.sort();
        assert_eq!(found, vec![false, true]);
        let anti = s
            .branches
            .iter()
            .find(|b| !b.lambda_sl2[0].is_zero())
            .unwrap();
        for (l, r) in anti.lambda_sl2.iter().zip(&rho) {
            assert_eq!(*l, -r);
        }
    }

    #[test]
    fn odd_dimension_needs_only_the_linear_stage() {
        let s = extension_rep_solve(7, 3).unwrap();
        assert!(s.linear_stage_forced);
        assert!(s.all_forced_zero());
    }

    #[test]
    fn even_dimension_uses_the_quadratic_stage() {
        let s = extension_rep_solve(6, 1).unwrap();
        assert!(!s.linear_stage_forced);
        assert!(s.quadratic_eliminations > 0);
        assert!(s.all_forced_zero());
    }

    #[test]
    fn poly_products() {
        let x = QuadPoly::var(0);
        let y = QuadPoly::var(1);
        let mut xp1 = x.clone();
        xp1.constant = int(1);
        let p = xp1.mul(&y);
        assert_eq!(p.linear.get(&1), Some(&int(1)));
        assert_eq!(p.quadratic.get(&(0, 1)), Some(&int(1)));
        assert!(QuadPoly::default().mul(&x).is_zero());
    }

    #[test]
    fn rank_one_then_branch() {
        // z0^2 = 0 and z1^2 + z1 = 0
        let mut a = Dense::zero(2);
        a.q[0][0] = int(3);
        let mut b = Dense::zero(2);
        b.q[1][1] = int(1);
        b.l[1] = int(1);
        let dirs = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        let mut stats = Stats::default();
        let out = reduce(vec![a, b], zero_vector(2), dirs, &mut stats).unwrap();
        assert_eq!(stats.rank_one, 1);
        let mut values: Vec<Vector> = out.into_iter().map(|(base, _)| base).collect();
        values.sort();
        assert_eq!(values, vec![vec![int(0), int(-1)], vec![int(0), int(0)]]);
    }

    #[test]
    fn irreducible_form_is_undetermined() {
        // z0 z1 = 0 is not rank one and involves two variables.
        let mut a = Dense::zero(2);
        a.q[0][1] = int(1);
        let dirs = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        let mut stats = Stats::default();
        assert!(reduce(vec![a], zero_vector(2), dirs, &mut stats).is_err());
    }
}
