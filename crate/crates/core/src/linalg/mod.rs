//! Exact rational linear algebra.
//!
//! Everything here works over ℚ with arbitrary-precision integers. Elimination
//! always picks the first nonzero entry of a column as pivot, so bases coming
//! out of [`kernel_basis`], [`image_basis`] and [`Subspace::span`] are
//! deterministic.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{fmt_vector, int, parse_scalar, ratio, Scalar};
pub use subspace::{quotient_dim, Subspace};

use crate::exec::Exec;

pub fn rank(m: &Matrix) -> usize {
    m.rref(Exec::default()).pivots.len()
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    kernel_basis_with(m, Exec::default())
}

/// Basis of `{v : m·v = 0}` read off the reduced row echelon form: one vector
/// per free column.
pub fn kernel_basis_with(m: &Matrix, exec: Exec) -> Subspace {
    let rref = m.rref(exec);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &rref.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::with_capacity(n - rref.pivots.len());
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::default(); n];
        v[free] = int(1);
        for (row, &p) in rref.pivots.iter().enumerate() {
            v[p] = -rref.matrix.get(row, free).clone();
        }
        basis.push(v);
    }
    Subspace::from_independent(n, basis)
}

/// Column space of `m`, spanned by the pivot columns of `m` itself.
pub fn image_basis(m: &Matrix) -> Subspace {
    image_basis_with(m, Exec::default())
}

pub fn image_basis_with(m: &Matrix, exec: Exec) -> Subspace {
    let rref = m.rref(exec);
    let basis = rref.pivots.iter().map(|&c| m.column(c)).collect();
    Subspace::from_independent(m.rows(), basis)
}

/// Solves `m·x = b`, returning one solution (free variables set to zero).
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    if b.len() != m.rows() {
        return None;
    }
    let aug = m.hstack(&Matrix::column_vector(b.to_vec()));
    let rref = aug.rref(Exec::Sequential);
    if rref.pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![Scalar::default(); m.cols()];
    for (row, &p) in rref.pivots.iter().enumerate() {
        x[p] = rref.matrix.get(row, m.cols()).clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(&[&[1, 1], &[0, 1]])), 2);
        assert_eq!(rank(&Matrix::zeros(3, 3)), 0);
        assert_eq!(rank(&m(&[&[1, -1]])), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&m(&[&[1, -1]]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[1, 1])).unwrap());
        assert_eq!(kernel_basis(&Matrix::identity(2)).dim(), 0);
        assert_eq!(kernel_basis(&Matrix::zeros(1, 2)).dim(), 2);
    }

    #[test]
    fn image_examples() {
        assert_eq!(image_basis(&m(&[&[1, 1], &[0, 1]])).dim(), 2);
        assert_eq!(image_basis(&Matrix::zeros(2, 3)).dim(), 0);
        let img = image_basis(&m(&[&[1], &[1]]));
        assert_eq!(img.basis(), &[v(&[1, 1])]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = solve(&a, &v(&[3, 6])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[3, 6]));
        assert!(solve(&a, &v(&[1, 0])).is_none());
    }

    #[test]
    fn kernel_of_wide_rational_matrix() {
        let a = Matrix::from_rows(vec![
            vec![ratio(1, 2), int(3), int(0), ratio(-7, 3)],
            vec![int(1), int(6), int(1), int(2)],
        ])
        .unwrap();
        let k = kernel_basis(&a);
        assert_eq!(k.dim(), 2);
        for b in k.basis() {
            assert!(a.mul_vec(b).iter().all(|x| *x == Scalar::default()));
        }
    }
}
