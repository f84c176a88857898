//! Exact linear algebra over cyclotomic fields: ranks, kernels, fixed
//! subspaces, eigenvalue multiplicities and symplectic-form checks.
//!
//! Elimination uses the first nonzero entry in column order as the pivot;
//! with exact arithmetic no pivoting heuristics are needed, and the fixed
//! rule keeps reduced forms and kernel bases fully deterministic.

use num::integer::lcm;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// A dense matrix over Q(zeta_m); all entries carry the same conductor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    conductor: u64,
    entries: Vec<CycNum>,
}

impl CycMatrix {
    /// The zero matrix.
    pub fn zero(rows: usize, cols: usize, conductor: u64) -> Self {
        CycMatrix {
            rows,
            cols,
            conductor,
            entries: vec![CycNum::zero(conductor); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize, conductor: u64) -> Self {
        CycMatrix::scalar(n, &CycNum::one(conductor))
    }

    /// `lambda * I`.
    pub fn scalar(n: usize, lambda: &CycNum) -> Self {
        let mut out = CycMatrix::zero(n, n, lambda.conductor());
        for i in 0..n {
            out.set(i, i, lambda.clone());
        }
        out
    }

    /// Builds a matrix from rows; all entries must share one conductor.
    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let nrows = rows.len();
        assert!(nrows > 0, "from_rows: empty matrix");
        let ncols = rows[0].len();
        let conductor = rows[0][0].conductor();
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for e in row {
                if e.conductor() != conductor {
                    return Err(Error::ConductorMismatch(conductor, e.conductor()));
                }
                entries.push(e);
            }
        }
        Ok(CycMatrix {
            rows: nrows,
            cols: ncols,
            conductor,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        assert_eq!(v.conductor(), self.conductor, "conductor mismatch in set");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> CycMatrix {
        let mut out = CycMatrix::zero(self.cols, self.rows, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix product. Zero entries are skipped, which makes products of
    /// permutation-like matrices cheap.
    pub fn mul(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in mul");
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch in mul");
        let mut out = CycMatrix::zero(self.rows, rhs.cols, self.conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    let cur = out.get(i, j);
                    out.set(i, j, cur + &t);
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch in sub"
        );
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch in sub");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        CycMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries,
        }
    }

    /// `self^k` by binary exponentiation (square matrices).
    pub fn pow(&self, mut k: u64) -> CycMatrix {
        assert!(self.is_square(), "pow: matrix must be square");
        let mut base = self.clone();
        let mut acc = CycMatrix::identity(self.rows, self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Entrywise embedding into a larger conductor.
    pub fn embed(&self, target: u64) -> Result<CycMatrix> {
        if target == self.conductor {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(CycMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor: target,
            entries,
        })
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    fn to_row_vecs(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Rank over the cyclotomic field, by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.to_row_vecs())
    }

    /// A basis of the right kernel, read off the reduced row echelon form.
    pub fn kernel_basis(&self) -> Subspace {
        let mut rows = self.to_row_vecs();
        let pivots = rref(&mut rows, self.conductor);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![CycNum::zero(self.conductor); self.cols];
            v[f] = CycNum::one(self.conductor);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            basis.push(v);
        }
        Subspace {
            ambient_dim: self.cols,
            conductor: self.conductor,
            basis,
        }
    }

    /// The fixed subspace `V^g = ker(g - 1)`.
    pub fn fixed_space(&self) -> Result<Subspace> {
        self.require_square()?;
        let id = CycMatrix::identity(self.rows, self.conductor);
        Ok(self.sub(&id).kernel_basis())
    }

    /// Exact determinant via elimination, tracking row swaps and pivots.
    pub fn determinant(&self) -> Result<CycNum> {
        self.require_square()?;
        let n = self.rows;
        let mut rows = self.to_row_vecs();
        let mut det = CycNum::one(self.conductor);
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(CycNum::zero(self.conductor));
            };
            if r != col {
                rows.swap(col, r);
                det = -&det;
            }
            let pivot = rows[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for c in col..n {
                if !rows[col][c].is_zero() {
                    rows[col][c] = &rows[col][c] * &inv;
                }
            }
            for r2 in col + 1..n {
                if rows[r2][col].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut rows[r2][col], CycNum::zero(self.conductor));
                for c in col + 1..n {
                    if !rows[col][c].is_zero() {
                        let d = &rows[col][c] * &f;
                        rows[r2][c] = &rows[r2][c] - &d;
                    }
                }
            }
        }
        Ok(det)
    }
}

/// Rank by division-free forward elimination: rows are cross-multiplied
/// against the pivot row, so no pivot is ever inverted.
fn rank_of_rows(mut mat: Vec<Vec<CycNum>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank >= rows {
            break;
        }
        let Some(r) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, r);
        let pivot = mat[rank][col].clone();
        for r2 in rank + 1..rows {
            if mat[r2][col].is_zero() {
                continue;
            }
            let f = mat[r2][col].clone();
            for c in col..cols {
                let scaled = if mat[r2][c].is_zero() {
                    None
                } else {
                    Some(&pivot * &mat[r2][c])
                };
                let correction = if mat[rank][c].is_zero() {
                    None
                } else {
                    Some(&f * &mat[rank][c])
                };
                mat[r2][c] = match (scaled, correction) {
                    (Some(s), Some(t)) => &s - &t,
                    (Some(s), None) => s,
                    (None, Some(t)) => -&t,
                    (None, None) => continue,
                };
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(mat: &mut [Vec<CycNum>], conductor: u64) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr >= rows {
            break;
        }
        let Some(r) = (pr..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(pr, r);
        if !mat[pr][col].is_one() {
            let inv = mat[pr][col].inv().expect("nonzero pivot");
            for c in col..cols {
                if !mat[pr][c].is_zero() {
                    mat[pr][c] = &mat[pr][c] * &inv;
                }
            }
        }
        for r2 in 0..rows {
            if r2 == pr || mat[r2][col].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut mat[r2][col], CycNum::zero(conductor));
            for c in col + 1..cols {
                if !mat[pr][c].is_zero() {
                    let d = &mat[pr][c] * &f;
                    mat[r2][c] = &mat[r2][c] - &d;
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    pivots
}

/// A subspace of an ambient coordinate space, held as an explicit basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    conductor: u64,
    basis: Vec<Vec<CycNum>>,
}

impl Subspace {
    /// The full ambient space with the standard basis.
    pub fn full(ambient_dim: usize, conductor: u64) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![CycNum::zero(conductor); ambient_dim];
                v[i] = CycNum::one(conductor);
                v
            })
            .collect();
        Subspace {
            ambient_dim,
            conductor,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn basis(&self) -> &[Vec<CycNum>] {
        &self.basis
    }

    /// Membership test by a rank comparison against the basis.
    pub fn contains(&self, v: &[CycNum]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "ambient mismatch in contains");
        if self.basis.is_empty() {
            return v.iter().all(|c| c.is_zero());
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank_of_rows(rows) == self.basis.len()
    }

    /// True iff the two subspaces are equal (same dimension and mutual
    /// containment).
    pub fn same_space(&self, other: &Subspace) -> Result<bool> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
            && self.basis.iter().all(|v| other.contains(v)))
    }
}

/// `dim(U ∩ W)` via the kernel of the concatenated-basis system.
pub fn subspace_intersection_dim(u: &Subspace, w: &Subspace) -> Result<usize> {
    if u.ambient_dim != w.ambient_dim {
        return Err(Error::AmbientMismatch(u.ambient_dim, w.ambient_dim));
    }
    // dim(U) + dim(W) - dim(U + W), with dim(U + W) the rank of the stacked bases.
    if u.basis.is_empty() || w.basis.is_empty() {
        return Ok(0);
    }
    let mut rows = u.basis.clone();
    rows.extend(w.basis.iter().cloned());
    let sum_dim = rank_of_rows(rows);
    Ok(u.dim() + w.dim() - sum_dim)
}

/// An explicit basis of `U ∩ W`: kernel vectors of the column-stacked system
/// `[B_U | -B_W]`, pushed forward through the `U` coordinates.
pub fn subspace_intersection(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    if u.ambient_dim != w.ambient_dim {
        return Err(Error::AmbientMismatch(u.ambient_dim, w.ambient_dim));
    }
    let n = u.ambient_dim;
    let conductor = u.conductor;
    let (p, q) = (u.dim(), w.dim());
    if p == 0 || q == 0 {
        return Ok(Subspace {
            ambient_dim: n,
            conductor,
            basis: Vec::new(),
        });
    }
    let mut system = CycMatrix::zero(n, p + q, conductor);
    for (j, vec) in u.basis.iter().enumerate() {
        for i in 0..n {
            system.set(i, j, vec[i].clone());
        }
    }
    for (j, vec) in w.basis.iter().enumerate() {
        for i in 0..n {
            system.set(i, p + j, -&vec[i]);
        }
    }
    let kernel = system.kernel_basis();
    let basis = kernel
        .basis
        .iter()
        .map(|k| {
            let mut v = vec![CycNum::zero(conductor); n];
            for (j, coeff) in k[..p].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for i in 0..n {
                    if !u.basis[j][i].is_zero() {
                        let t = coeff * &u.basis[j][i];
                        v[i] = &v[i] + &t;
                    }
                }
            }
            v
        })
        .collect();
    Ok(Subspace {
        ambient_dim: n,
        conductor,
        basis,
    })
}

/// True iff `g` preserves `omega`, i.e. `g^T omega g = omega`.
///
/// Errors if `omega` is not a nondegenerate skew-symmetric square matrix of
/// the same size as `g`.
pub fn is_symplectic(g: &CycMatrix, omega: &CycMatrix) -> Result<bool> {
    g.require_square()?;
    omega.require_square()?;
    if g.rows() != omega.rows() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but omega is {}x{}",
            g.rows(),
            g.cols(),
            omega.rows(),
            omega.cols()
        )));
    }
    if g.conductor() != omega.conductor() {
        return Err(Error::ConductorMismatch(g.conductor(), omega.conductor()));
    }
    validate_symplectic_form(omega)?;
    let lhs = g.transpose().mul(omega).mul(g);
    Ok(lhs == *omega)
}

/// Checks that omega is skew-symmetric and nondegenerate.
pub fn validate_symplectic_form(omega: &CycMatrix) -> Result<()> {
    omega.require_square()?;
    let n = omega.rows();
    for i in 0..n {
        for j in i..n {
            if *omega.get(i, j) != -omega.get(j, i) {
                return Err(Error::InvalidSymplecticForm("not skew-symmetric"));
            }
        }
    }
    if omega.rank() != n {
        return Err(Error::InvalidSymplecticForm("degenerate"));
    }
    Ok(())
}

/// Eigenvalue multiplicities `m_j = dim ker(g - zeta_r^j)` for `j = 0..r`.
///
/// Requires `g^r = 1`; the computation runs at conductor `lcm(cond(g), r)`.
pub fn eigen_multiplicities(g: &CycMatrix, r: u64) -> Result<Vec<usize>> {
    g.require_square()?;
    assert!(r >= 1, "eigen_multiplicities: order must be positive");
    let n = g.rows();
    let target = lcm(g.conductor(), r);
    let ge = g.embed(target)?;
    if !ge.pow(r).is_identity() {
        return Err(Error::WrongOrder { order: r });
    }
    let step = target / r;
    let mut mults = Vec::with_capacity(r as usize);
    for j in 0..r {
        let lambda = CycNum::root_of_unity(target, step * j);
        let shifted = ge.sub(&CycMatrix::scalar(n, &lambda));
        mults.push(n - shifted.rank());
    }
    debug_assert_eq!(mults.iter().sum::<usize>(), n);
    Ok(mults)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{rat_int, CycNum};

    fn z(m: u64, k: u64) -> CycNum {
        CycNum::root_of_unity(m, k)
    }

    fn int_matrix(m: u64, rows: &[&[i64]]) -> CycMatrix {
        CycMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| CycNum::from_integer(m, v))
                        .collect::<Vec<_>>()
                })
                .collect(),
        )
        .unwrap()
    }

    fn standard_omega_2(m: u64) -> CycMatrix {
        int_matrix(m, &[&[0, 1], &[-1, 0]])
    }

    #[test]
    fn rank_examples() {
        assert_eq!(CycMatrix::identity(4, 1).rank(), 4);
        assert_eq!(CycMatrix::zero(3, 5, 1).rank(), 0);
        // diag(z3, z3^2) - I has two nonzero diagonal entries
        let g = CycMatrix::from_rows(vec![
            vec![z(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), z(3, 2)],
        ])
        .unwrap();
        assert_eq!(g.sub(&CycMatrix::identity(2, 3)).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(CycMatrix::zero(2, 2, 1).kernel_basis().dim(), 2);
        assert_eq!(CycMatrix::identity(3, 1).kernel_basis().dim(), 0);
        // rank-1 matrix with row 2 = z4 * row 1; kernel spanned by (-z4, 1)
        let a = CycMatrix::from_rows(vec![
            vec![CycNum::one(4), z(4, 1)],
            vec![z(4, 1), CycNum::from_integer(4, -1)],
        ])
        .unwrap();
        let kernel = a.kernel_basis();
        assert_eq!(kernel.dim(), 1);
        let expected = vec![-&z(4, 1), CycNum::one(4)];
        assert!(kernel.contains(&expected));
        // and A * v = 0 for the basis vector
        for v in kernel.basis() {
            for i in 0..2 {
                let mut acc = CycNum::zero(4);
                for j in 0..2 {
                    acc = &acc + &(a.get(i, j) * &v[j]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn fixed_space_examples() {
        assert_eq!(CycMatrix::identity(4, 1).fixed_space().unwrap().dim(), 4);
        let minus_i = int_matrix(1, &[&[-1, 0], &[0, -1]]);
        assert_eq!(minus_i.fixed_space().unwrap().dim(), 0);
        // doubled swap on C^2 + C^2
        let swap = int_matrix(
            1,
            &[
                &[0, 1, 0, 0],
                &[1, 0, 0, 0],
                &[0, 0, 0, 1],
                &[0, 0, 1, 0],
            ],
        );
        assert_eq!(swap.fixed_space().unwrap().dim(), 2);
    }

    #[test]
    fn intersection_examples() {
        let full = Subspace::full(3, 1);
        assert_eq!(subspace_intersection_dim(&full, &full).unwrap(), 3);

        // two transversal 4-dim subspaces of a 6-dim space meet in dim 2
        let mut u_rows = Vec::new();
        let mut w_rows = Vec::new();
        for i in 0..4 {
            let mut v = vec![CycNum::zero(1); 6];
            v[i] = CycNum::one(1);
            u_rows.push(v);
            let mut v = vec![CycNum::zero(1); 6];
            v[i + 2] = CycNum::one(1);
            w_rows.push(v);
        }
        let stack = |rows: &Vec<Vec<CycNum>>| {
            CycMatrix::from_rows(rows.clone()).unwrap()
        };
        // sanity: both are genuine 4-dim subspaces and their sum is everything
        assert_eq!(stack(&u_rows).rank(), 4);
        let mut sum_rows = u_rows.clone();
        sum_rows.extend(w_rows.iter().cloned());
        assert_eq!(stack(&sum_rows).rank(), 6);
        let u = Subspace {
            ambient_dim: 6,
            conductor: 1,
            basis: u_rows,
        };
        let w = Subspace {
            ambient_dim: 6,
            conductor: 1,
            basis: w_rows,
        };
        assert_eq!(subspace_intersection_dim(&u, &w).unwrap(), 2);
        let inter = subspace_intersection(&u, &w).unwrap();
        assert_eq!(inter.dim(), 2);
        for v in inter.basis() {
            assert!(u.contains(v) && w.contains(v));
        }

        // containment case
        let small = Subspace {
            ambient_dim: 6,
            conductor: 1,
            basis: u.basis()[..2].to_vec(),
        };
        assert_eq!(subspace_intersection_dim(&small, &u).unwrap(), 2);

        let wrong = Subspace::full(5, 1);
        assert!(matches!(
            subspace_intersection_dim(&u, &wrong),
            Err(Error::AmbientMismatch(6, 5))
        ));
    }

    #[test]
    fn symplectic_examples() {
        let omega = standard_omega_2(5);
        let g = CycMatrix::from_rows(vec![
            vec![z(5, 1), CycNum::zero(5)],
            vec![CycNum::zero(5), z(5, 4)],
        ])
        .unwrap();
        assert!(is_symplectic(&g, &omega).unwrap());

        let omega3 = standard_omega_2(3);
        let bad = CycMatrix::from_rows(vec![
            vec![z(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), z(3, 1)],
        ])
        .unwrap();
        assert!(!is_symplectic(&bad, &omega3).unwrap());

        let id = CycMatrix::identity(2, 5);
        assert!(is_symplectic(&id, &omega).unwrap());

        let degenerate = CycMatrix::zero(2, 2, 5);
        assert!(matches!(
            is_symplectic(&id, &degenerate),
            Err(Error::InvalidSymplecticForm("degenerate"))
        ));
        let not_skew = CycMatrix::identity(2, 5);
        assert!(matches!(
            is_symplectic(&id, &not_skew),
            Err(Error::InvalidSymplecticForm("not skew-symmetric"))
        ));
    }

    #[test]
    fn eigen_multiplicity_examples() {
        assert_eq!(
            eigen_multiplicities(&CycMatrix::identity(4, 1), 1).unwrap(),
            vec![4]
        );
        let g = CycMatrix::from_rows(vec![
            vec![z(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), z(3, 2)],
        ])
        .unwrap();
        assert_eq!(eigen_multiplicities(&g, 3).unwrap(), vec![0, 1, 1]);
        let minus_i = int_matrix(1, &[&[-1, 0], &[0, -1]]);
        assert_eq!(eigen_multiplicities(&minus_i, 2).unwrap(), vec![0, 2]);
        // g^r != 1 is rejected
        let h = CycMatrix::from_rows(vec![
            vec![z(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), CycNum::one(3)],
        ])
        .unwrap();
        assert!(matches!(
            eigen_multiplicities(&h, 2),
            Err(Error::WrongOrder { order: 2 })
        ));
    }

    #[test]
    fn determinant_examples() {
        let g = CycMatrix::from_rows(vec![
            vec![z(3, 1), CycNum::zero(3)],
            vec![CycNum::zero(3), z(3, 2)],
        ])
        .unwrap();
        assert!(g.determinant().unwrap().is_one());
        let swap = int_matrix(1, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant().unwrap(), CycNum::from_integer(1, -1));
        let singular = int_matrix(1, &[&[1, 2], &[2, 4]]);
        assert!(singular.determinant().unwrap().is_zero());
        // det of an upper-triangular mixed matrix
        let t = CycMatrix::from_rows(vec![
            vec![CycNum::from_rational(4, crate::cyclotomic::rat(1, 2)), z(4, 1)],
            vec![CycNum::zero(4), CycNum::from_integer(4, 6)],
        ])
        .unwrap();
        assert_eq!(
            t.determinant().unwrap(),
            CycNum::from_rational(4, rat_int(3))
        );
    }

    #[test]
    fn rank_nullity_on_a_rectangular_matrix() {
        let a = CycMatrix::from_rows(vec![
            vec![CycNum::one(4), z(4, 1), CycNum::zero(4)],
            vec![z(4, 1), CycNum::from_integer(4, -1), CycNum::zero(4)],
        ])
        .unwrap();
        assert_eq!(a.rank() + a.kernel_basis().dim(), a.cols());
    }
}
