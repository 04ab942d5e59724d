use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::{kernel_basis, solve};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// A subspace of ℚ^ambient_dim given by a linearly independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ambient_dim];
                v[i] = Scalar::from_integer(1.into());
                v
            })
            .collect();
        Subspace { ambient_dim, basis }
    }

    /// Validating constructor: the vectors must be independent.
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        for v in &basis {
            Error::check_dim(ambient_dim, v.len())?;
        }
        let m = Matrix::from_columns(ambient_dim, &basis)?;
        if m.rref(Exec::Sequential).pivots.len() != basis.len() {
            return Err(Error::Invalid("basis vectors are linearly dependent".into()));
        }
        Ok(Subspace { ambient_dim, basis })
    }

    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Self {
        Subspace { ambient_dim, basis }
    }

    /// Span of arbitrary vectors. Keeps, in order, each vector that is not in
    /// the span of the ones kept before it.
    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        for v in vectors {
            Error::check_dim(ambient_dim, v.len())?;
        }
        let m = Matrix::from_columns(ambient_dim, vectors)?;
        let pivots = m.rref(Exec::default()).pivots;
        Ok(Subspace {
            ambient_dim,
            basis: pivots.into_iter().map(|c| vectors[c].clone()).collect(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis).expect("basis vectors have ambient length")
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coefficients `c` with `v = Σ c_i basis_i`, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        Error::check_dim(self.ambient_dim, v.len())?;
        if v.iter().all(Zero::is_zero) {
            return Ok(Some(vec![Scalar::zero(); self.dim()]));
        }
        if self.basis.is_empty() {
            return Ok(None);
        }
        Ok(solve(&self.basis_matrix(), v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient_dim, other.ambient_dim)?;
        let all: Vec<Vec<Scalar>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient_dim, &all)
    }

    /// `self ∩ other` from the kernel of `[B₁ | −B₂]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Error::check_dim(self.ambient_dim, other.ambient_dim)?;
        if self.basis.is_empty() || other.basis.is_empty() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let b1 = self.basis_matrix();
        let b2 = other.basis_matrix().scale(&Scalar::from_integer((-1).into()));
        let k = kernel_basis(&b1.hstack(&b2));
        let vectors: Vec<Vec<Scalar>> = k
            .basis()
            .iter()
            .map(|x| b1.mul_vec(&x[..self.dim()]))
            .collect();
        Subspace::span(self.ambient_dim, &vectors)
    }

    pub fn is_subspace_of(&self, big: &Subspace) -> Result<bool> {
        for v in &self.basis {
            if !big.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Vectors from `candidates` extending a basis of `self` to a basis of
    /// `self + span(candidates)`, chosen greedily in order.
    pub fn complement_in(&self, candidates: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
        let all: Vec<Vec<Scalar>> = self.basis.iter().chain(candidates).cloned().collect();
        for v in candidates {
            Error::check_dim(self.ambient_dim, v.len())?;
        }
        let m = Matrix::from_columns(self.ambient_dim, &all)?;
        let pivots = m.rref(Exec::default()).pivots;
        Ok(pivots
            .into_iter()
            .filter(|&c| c >= self.dim())
            .map(|c| all[c].clone())
            .collect())
    }
}

/// `dim big − dim small`, after checking `small ⊆ big`.
pub fn quotient_dim(big: &Subspace, small: &Subspace) -> Result<usize> {
    Error::check_dim(big.ambient_dim(), small.ambient_dim())?;
    if !small.is_subspace_of(big)? {
        return Err(Error::NotContained);
    }
    Ok(big.dim() - small.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn line(xs: &[i64]) -> Subspace {
        Subspace::new(xs.len(), vec![v(xs)]).unwrap()
    }

    #[test]
    fn contains_examples() {
        let s = line(&[1, 1]);
        assert!(s.contains(&v(&[2, 2])).unwrap());
        assert!(!s.contains(&v(&[1, 0])).unwrap());
        assert!(s.contains(&v(&[0, 0])).unwrap());
        assert!(Subspace::zero(2).contains(&v(&[0, 0])).unwrap());
        assert!(matches!(s.contains(&v(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(line(&[1, 0]).intersect(&line(&[0, 1])).unwrap().dim(), 0);
        let s = line(&[3, 5]);
        assert_eq!(s.intersect(&s).unwrap().dim(), 1);
        let i = Subspace::full(2).intersect(&line(&[1, 1])).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[1, 1])).unwrap());
        assert!(Subspace::full(2).intersect(&Subspace::full(3)).is_err());
    }

    #[test]
    fn quotient_dim_examples() {
        assert_eq!(quotient_dim(&Subspace::full(2), &line(&[1, 2])).unwrap(), 1);
        assert_eq!(quotient_dim(&line(&[1, 2]), &line(&[2, 4])).unwrap(), 0);
        assert_eq!(quotient_dim(&Subspace::full(3), &Subspace::zero(3)).unwrap(), 3);
        assert!(matches!(
            quotient_dim(&line(&[1, 0]), &line(&[0, 1])),
            Err(Error::NotContained)
        ));
    }

    #[test]
    fn new_rejects_dependent_vectors() {
        assert!(Subspace::new(2, vec![v(&[1, 2]), v(&[2, 4])]).is_err());
        let s = Subspace::span(2, &[v(&[1, 2]), v(&[2, 4]), v(&[0, 1])]).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2]), v(&[0, 1])]);
    }
}
