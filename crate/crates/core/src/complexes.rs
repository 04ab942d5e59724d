//! The Hom-Leibniz chain complex, its homology, and the complex of
//! α-equivariant cochains with values in a commutative Hom-associative algebra.
//!
//! Tensor bases are lexicographic with the leftmost factor most significant.
//! A cochain of degree `n` is stored flat: the value on basis tuple `t` sits
//! at `index(t)·dim A .. index(t)·dim A + dim A`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{
    check_commutative, check_hom_associative, check_hom_leibniz, check_multiplicative, AlgebraSpec,
    AxiomReport,
};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{int, kernel_basis_with, Matrix, Scalar, Subspace};

/// Largest number of flat coordinates any single space may have by default.
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub cap: usize,
    pub exec: Exec,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cap: DEFAULT_CAP,
            exec: Exec::default(),
        }
    }
}

impl Limits {
    pub fn with_exec(exec: Exec) -> Self {
        Limits {
            exec,
            ..Limits::default()
        }
    }

    /// `base^degree · factor`, or a cap error.
    pub fn check(&self, base: usize, degree: usize, factor: usize) -> Result<usize> {
        let needed = u32::try_from(degree)
            .ok()
            .and_then(|d| base.checked_pow(d))
            .and_then(|p| p.checked_mul(factor))
            .unwrap_or(usize::MAX);
        if needed > self.cap {
            Err(Error::ResourceCap {
                needed,
                cap: self.cap,
            })
        } else {
            Ok(needed)
        }
    }
}

/// `L^⊗n` with lexicographic basis of 0-based index tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorBasis {
    base_dim: usize,
    degree: usize,
}

impl TensorBasis {
    pub fn new(base_dim: usize, degree: usize) -> Self {
        TensorBasis { base_dim, degree }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.base_dim.pow(self.degree as u32)
    }

    pub fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &t| acc * self.base_dim + t)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut t = vec![0; self.degree];
        for slot in t.iter_mut().rev() {
            *slot = index % self.base_dim;
            index /= self.base_dim;
        }
        t
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.size()).map(move |i| self.tuple(i))
    }
}

/// Expands `v₁ ⊗ … ⊗ v_k` into sparse lexicographic coordinates.
pub(crate) fn expand_tensor(base_dim: usize, factors: &[&[Scalar]]) -> Vec<(usize, Scalar)> {
    let mut acc: Vec<(usize, Scalar)> = vec![(0, Scalar::one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * base_dim);
        for (idx, c) in &acc {
            for (k, x) in f.iter().enumerate() {
                if !x.is_zero() {
                    next.push((idx * base_dim + k, c * x));
                }
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    acc
}

pub(crate) fn require_leibniz(l: &AlgebraSpec) -> Result<()> {
    check_hom_leibniz(l).into_result("hom-Leibniz identity")?;
    check_multiplicative(l).into_result("multiplicativity of the twist")
}

pub(crate) fn require_coefficients(a: &AlgebraSpec) -> Result<()> {
    check_hom_associative(a).into_result("hom-associativity of the coefficients")?;
    check_commutative(a).into_result("commutativity of the coefficients")
}

/// Precomputed twist images and brackets of basis vectors.
pub(crate) struct Boundary {
    dim: usize,
    alpha: Vec<Vec<Scalar>>,
    bracket: Vec<Vec<Scalar>>,
}

impl Boundary {
    pub(crate) fn new(l: &AlgebraSpec) -> Self {
        let dim = l.dim();
        let alpha = (0..dim).map(|k| l.twist().column(k)).collect();
        let mut bracket = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                bracket.push(l.basis_product(i, j).to_vec());
            }
        }
        Boundary {
            dim,
            alpha,
            bracket,
        }
    }

    /// `d_n(e_{t₁},…,e_{tₙ})` as sparse coordinates in `L^⊗(n−1)`.
    pub(crate) fn image(&self, tuple: &[usize]) -> Vec<(usize, Scalar)> {
        let n = tuple.len();
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for j in 1..n {
            // 1-based position j+1, so the sign (−1)^{(j+1)+1} is (−1)^j
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            for i in 0..j {
                let bracket = &self.bracket[tuple[i] * self.dim + tuple[j]];
                if bracket.iter().all(Zero::is_zero) {
                    continue;
                }
                let factors: Vec<&[Scalar]> = (0..n)
                    .filter(|&k| k != j)
                    .map(|k| {
                        if k == i {
                            bracket.as_slice()
                        } else {
                            self.alpha[tuple[k]].as_slice()
                        }
                    })
                    .collect();
                for (idx, c) in expand_tensor(self.dim, &factors) {
                    *out.entry(idx).or_insert_with(Scalar::zero) += c * &sign;
                }
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Sparse columns of `d_n`, one per basis tuple of `L^⊗n`.
    pub(crate) fn columns(&self, n: usize, exec: Exec) -> Vec<Vec<(usize, Scalar)>> {
        let basis = TensorBasis::new(self.dim, n);
        exec.map_range(basis.size(), |c| self.image(&basis.tuple(c)))
    }
}

/// `d_n(e_{t₁},…,e_{tₙ})` for a 0-based index tuple, without axiom checks.
pub fn boundary_image(l: &AlgebraSpec, tuple: &[usize]) -> Vec<(usize, Scalar)> {
    Boundary::new(l).image(tuple)
}

fn sparse_to_matrix(rows: usize, columns: &[Vec<(usize, Scalar)>]) -> Matrix {
    let mut m = Matrix::zeros(rows, columns.len());
    for (c, col) in columns.iter().enumerate() {
        for (r, x) in col {
            m.set(*r, c, x.clone());
        }
    }
    m
}

/// Matrix of `d_n : L^⊗n → L^⊗(n−1)`.
pub fn boundary_matrix(l: &AlgebraSpec, n: usize) -> Result<Matrix> {
    boundary_matrix_with(l, n, Limits::default())
}

pub fn boundary_matrix_with(l: &AlgebraSpec, n: usize, limits: Limits) -> Result<Matrix> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    require_leibniz(l)?;
    limits.check(l.dim(), n, 1)?;
    let cols = Boundary::new(l).columns(n, limits.exec);
    Ok(sparse_to_matrix(l.dim().pow(n as u32 - 1), &cols))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDegree {
    pub degree: usize,
    pub chain_dim: usize,
    /// Rank of `d_n`.
    pub boundary_rank: usize,
    pub kernel_dim: usize,
    /// Rank of `d_{n+1}`.
    pub image_dim: usize,
    pub homology_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    pub degrees: Vec<HomologyDegree>,
}

impl ComplexReport {
    pub fn homology_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.homology_dim).collect()
    }
}

pub fn homology_dims(l: &AlgebraSpec, max_degree: usize) -> Result<ComplexReport> {
    homology_dims_with(l, max_degree, Limits::default())
}

pub fn homology_dims_with(l: &AlgebraSpec, max_degree: usize, limits: Limits) -> Result<ComplexReport> {
    homology_signed(l, max_degree, limits, &|_| int(1))
}

/// Homology with `d_n` replaced by `sign(n)·d_n`.
fn homology_signed(
    l: &AlgebraSpec,
    max_degree: usize,
    limits: Limits,
    sign: &dyn Fn(usize) -> Scalar,
) -> Result<ComplexReport> {
    require_leibniz(l)?;
    if max_degree == 0 {
        return Ok(ComplexReport { degrees: vec![] });
    }
    limits.check(l.dim(), max_degree + 1, 1)?;
    let boundary = Boundary::new(l);
    // ranks[n] = rank d_n for n = 1..=max_degree+1; d_1 = 0
    let mut ranks = vec![0usize; max_degree + 2];
    for n in 2..=max_degree + 1 {
        let cols = boundary.columns(n, limits.exec);
        let m = sparse_to_matrix(l.dim().pow(n as u32 - 1), &cols).scale(&sign(n));
        ranks[n] = m.rref(limits.exec).pivots.len();
    }
    let degrees = (1..=max_degree)
        .map(|n| {
            let chain_dim = l.dim().pow(n as u32);
            let kernel_dim = chain_dim - ranks[n];
            HomologyDegree {
                degree: n,
                chain_dim,
                boundary_rank: ranks[n],
                kernel_dim,
                image_dim: ranks[n + 1],
                homology_dim: kernel_dim - ranks[n + 1],
            }
        })
        .collect();
    Ok(ComplexReport { degrees })
}

/// An `n`-linear map `L^⊗n → A`, stored flat over lexicographic basis tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    base_dim: usize,
    coeff_dim: usize,
    values: Vec<Scalar>,
    equivariant: bool,
}

/// First tuple where `α₁∘f ≠ f∘α^⊗n`, with both sides.
fn equivariance_defect(
    l: &AlgebraSpec,
    a: &AlgebraSpec,
    degree: usize,
    values: &[Scalar],
) -> Option<(Vec<usize>, Vec<Scalar>, Vec<Scalar>)> {
    let basis = TensorBasis::new(l.dim(), degree);
    let alpha: Vec<Vec<Scalar>> = (0..l.dim()).map(|k| l.twist().column(k)).collect();
    let da = a.dim();
    for (idx, tuple) in basis.tuples().enumerate() {
        let lhs = a.apply_twist(&values[idx * da..(idx + 1) * da]);
        let factors: Vec<&[Scalar]> = tuple.iter().map(|&t| alpha[t].as_slice()).collect();
        let mut rhs = vec![Scalar::zero(); da];
        for (s, c) in expand_tensor(l.dim(), &factors) {
            for (r, v) in rhs.iter_mut().zip(&values[s * da..(s + 1) * da]) {
                *r += &c * v;
            }
        }
        if lhs != rhs {
            return Some((tuple, lhs, rhs));
        }
    }
    None
}

impl Cochain {
    /// Wraps flat values; the equivariance flag is computed here.
    pub fn new(l: &AlgebraSpec, a: &AlgebraSpec, degree: usize, values: Vec<Scalar>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        Error::check_dim(l.dim().pow(degree as u32) * a.dim(), values.len())?;
        let equivariant = equivariance_defect(l, a, degree, &values).is_none();
        Ok(Cochain {
            degree,
            base_dim: l.dim(),
            coeff_dim: a.dim(),
            values,
            equivariant,
        })
    }

    /// Like [`Cochain::new`] but rejects non-equivariant data.
    pub fn equivariant(l: &AlgebraSpec, a: &AlgebraSpec, degree: usize, values: Vec<Scalar>) -> Result<Self> {
        let c = Self::new(l, a, degree, values)?;
        c.require_equivariant()?;
        Ok(c)
    }

    /// Defines the cochain on basis tuples (0-based) by `f`.
    pub fn from_fn(
        l: &AlgebraSpec,
        a: &AlgebraSpec,
        degree: usize,
        f: impl Fn(&[usize]) -> Vec<Scalar>,
    ) -> Result<Self> {
        let basis = TensorBasis::new(l.dim(), degree);
        let mut values = Vec::with_capacity(basis.size() * a.dim());
        for t in basis.tuples() {
            let v = f(&t);
            Error::check_dim(a.dim(), v.len())?;
            values.extend(v);
        }
        Self::new(l, a, degree, values)
    }

    pub fn zero(l: &AlgebraSpec, a: &AlgebraSpec, degree: usize) -> Self {
        Cochain {
            degree,
            base_dim: l.dim(),
            coeff_dim: a.dim(),
            values: vec![Scalar::zero(); l.dim().pow(degree as u32) * a.dim()],
            equivariant: true,
        }
    }

    /// Trusted constructor for values already known to be equivariant or not.
    pub(crate) fn from_parts(
        degree: usize,
        base_dim: usize,
        coeff_dim: usize,
        values: Vec<Scalar>,
        equivariant: bool,
    ) -> Self {
        Cochain {
            degree,
            base_dim,
            coeff_dim,
            values,
            equivariant,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Scalar> {
        self.values
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariant
    }

    pub(crate) fn require_equivariant(&self) -> Result<()> {
        if self.equivariant {
            Ok(())
        } else {
            Err(Error::NotEquivariant {
                degree: self.degree,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn basis(&self) -> TensorBasis {
        TensorBasis::new(self.base_dim, self.degree)
    }

    /// Value on a 0-based basis tuple.
    pub fn value(&self, tuple: &[usize]) -> &[Scalar] {
        let idx = self.basis().index_of(tuple);
        &self.values[idx * self.coeff_dim..(idx + 1) * self.coeff_dim]
    }

    pub fn value_at(&self, index: usize) -> &[Scalar] {
        &self.values[index * self.coeff_dim..(index + 1) * self.coeff_dim]
    }

    /// Multilinear evaluation on arbitrary vectors of `L`.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        Error::check_dim(self.degree, args.len())?;
        for x in args {
            Error::check_dim(self.base_dim, x.len())?;
        }
        let factors: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
        let mut out = vec![Scalar::zero(); self.coeff_dim];
        for (s, c) in expand_tensor(self.base_dim, &factors) {
            for (o, v) in out.iter_mut().zip(self.value_at(s)) {
                *o += &c * v;
            }
        }
        Ok(out)
    }

    fn check_same_space(&self, other: &Cochain) -> Result<()> {
        Error::check_dim(self.degree, other.degree)?;
        Error::check_dim(self.base_dim, other.base_dim)?;
        Error::check_dim(self.coeff_dim, other.coeff_dim)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same_space(other)?;
        let values = self.values.iter().zip(&other.values).map(|(x, y)| x + y).collect();
        let equivariant = self.equivariant && other.equivariant;
        Ok(Cochain { values, equivariant, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        Cochain {
            values: self.values.iter().map(|x| x * s).collect(),
            equivariant: self.equivariant || s.is_zero(),
            ..self.clone()
        }
    }
}

/// `f ↦ f∘d_{n+1}` on flat values, with `d_{n+1}` given by its sparse columns.
pub(crate) fn coboundary_values(
    columns: &[Vec<(usize, Scalar)>],
    coeff_dim: usize,
    values: &[Scalar],
    exec: Exec,
) -> Vec<Scalar> {
    let per_tuple = exec.map_slice(columns, |col| {
        let mut out = vec![Scalar::zero(); coeff_dim];
        for (t, c) in col {
            for (o, v) in out.iter_mut().zip(&values[t * coeff_dim..(t + 1) * coeff_dim]) {
                if !v.is_zero() {
                    *o += c * v;
                }
            }
        }
        out
    });
    per_tuple.into_iter().flatten().collect()
}

/// `δf = f∘d_{n+1}`; the sum runs over all pairs `1 ≤ i < j ≤ n+1`.
pub fn coboundary(l: &AlgebraSpec, a: &AlgebraSpec, f: &Cochain) -> Result<Cochain> {
    coboundary_with(l, a, f, Limits::default())
}

pub fn coboundary_with(l: &AlgebraSpec, a: &AlgebraSpec, f: &Cochain, limits: Limits) -> Result<Cochain> {
    Error::check_dim(l.dim(), f.base_dim)?;
    Error::check_dim(a.dim(), f.coeff_dim)?;
    f.require_equivariant()?;
    require_leibniz(l)?;
    let n = f.degree + 1;
    limits.check(l.dim(), n, a.dim())?;
    let cols = Boundary::new(l).columns(n, limits.exec);
    let values = coboundary_values(&cols, a.dim(), &f.values, limits.exec);
    // closure under δ holds for multiplicative L, which require_leibniz checked
    Ok(Cochain::from_parts(n, l.dim(), a.dim(), values, true))
}

/// `α^⊗n` with the lexicographic ordering.
pub fn tensor_power(m: &Matrix, n: usize) -> Matrix {
    let mut out = Matrix::identity(1);
    for _ in 0..n {
        out = out.kron(m);
    }
    out
}

/// Matrix of `f ↦ α₁∘f − f∘α^⊗n` on flat cochain coordinates.
fn equivariance_operator(l: &AlgebraSpec, a: &AlgebraSpec, n: usize) -> Matrix {
    let size = l.dim().pow(n as u32);
    let left = Matrix::identity(size).kron(a.twist());
    let right = tensor_power(l.twist(), n).transpose().kron(&Matrix::identity(a.dim()));
    left.sub(&right).expect("operators share a shape")
}

/// Basis of `CLⁿ = {f : α₁∘f = f∘α^⊗n}` in flat cochain coordinates.
pub fn cochain_space_basis(l: &AlgebraSpec, a: &AlgebraSpec, n: usize) -> Result<Subspace> {
    cochain_space_basis_with(l, a, n, Limits::default())
}

pub fn cochain_space_basis_with(l: &AlgebraSpec, a: &AlgebraSpec, n: usize, limits: Limits) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    require_leibniz(l)?;
    require_coefficients(a)?;
    limits.check(l.dim(), n, a.dim())?;
    Ok(kernel_basis_with(&equivariance_operator(l, a, n), limits.exec))
}

/// A random element of `CLⁿ`: small integer combination of the basis.
pub fn random_equivariant<R: Rng + ?Sized>(
    l: &AlgebraSpec,
    a: &AlgebraSpec,
    n: usize,
    rng: &mut R,
) -> Result<Cochain> {
    let space = cochain_space_basis(l, a, n)?;
    let mut values = vec![Scalar::zero(); space.ambient_dim()];
    for b in space.basis() {
        let c = int(rng.gen_range(-3..=3));
        if c.is_zero() {
            continue;
        }
        for (v, x) in values.iter_mut().zip(b) {
            *v += &c * x;
        }
    }
    Ok(Cochain::from_parts(n, l.dim(), a.dim(), values, true))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyDegree {
    pub degree: usize,
    /// `dim L^n · dim A`.
    pub ambient_dim: usize,
    /// `dim CLⁿ`.
    pub cochain_dim: usize,
    /// Rank of `δⁿ` on `CLⁿ`.
    pub coboundary_rank: usize,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub cohomology_dim: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Cocycles completing a basis of `Bⁿ` to one of `Zⁿ`, chosen greedily.
    pub representatives: Vec<Cochain>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degrees: Vec<CohomologyDegree>,
}

impl CohomologyReport {
    pub fn cohomology_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cohomology_dim).collect()
    }

    pub fn cochain_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cochain_dim).collect()
    }

    pub fn degree(&self, n: usize) -> Option<&CohomologyDegree> {
        self.degrees.iter().find(|d| d.degree == n)
    }
}

pub fn cohomology_dims(l: &AlgebraSpec, a: &AlgebraSpec, max_degree: usize) -> Result<CohomologyReport> {
    cohomology_dims_with(l, a, max_degree, Limits::default())
}

pub fn cohomology_dims_with(
    l: &AlgebraSpec,
    a: &AlgebraSpec,
    max_degree: usize,
    limits: Limits,
) -> Result<CohomologyReport> {
    cohomology_signed(l, a, max_degree, limits, &|_| int(1))
}

/// Cohomology with `δⁿ` replaced by `sign(n)·δⁿ`.
fn cohomology_signed(
    l: &AlgebraSpec,
    a: &AlgebraSpec,
    max_degree: usize,
    limits: Limits,
    sign: &dyn Fn(usize) -> Scalar,
) -> Result<CohomologyReport> {
    require_leibniz(l)?;
    require_coefficients(a)?;
    if max_degree == 0 {
        return Ok(CohomologyReport { degrees: vec![] });
    }
    limits.check(l.dim(), max_degree + 1, a.dim())?;
    let boundary = Boundary::new(l);
    let mut degrees = Vec::with_capacity(max_degree);
    let mut coboundaries = Subspace::zero(l.dim() * a.dim());
    for n in 1..=max_degree {
        let ambient = l.dim().pow(n as u32) * a.dim();
        let space = cochain_space_basis_with(l, a, n, limits)?;
        let cols = boundary.columns(n + 1, limits.exec);
        let s = sign(n);
        let images: Vec<Vec<Scalar>> = limits.exec.map_slice(space.basis(), |b| {
            coboundary_values(&cols, a.dim(), b, Exec::Sequential)
                .into_iter()
                .map(|x| x * &s)
                .collect()
        });
        let next_ambient = ambient * l.dim();
        let delta = Matrix::from_columns(next_ambient, &images)?;
        let kernel = kernel_basis_with(&delta, limits.exec);
        let cocycle_vectors: Vec<Vec<Scalar>> = kernel
            .basis()
            .iter()
            .map(|coords| space.basis_matrix().mul_vec(coords))
            .collect();
        let cocycles = Subspace::new(ambient, cocycle_vectors)?;
        let representatives = coboundaries
            .complement_in(cocycles.basis())?
            .into_iter()
            .map(|v| Cochain::from_parts(n, l.dim(), a.dim(), v, true))
            .collect::<Vec<_>>();
        let coboundary_rank = space.dim() - cocycles.dim();
        let next_coboundaries = Subspace::span(next_ambient, &images)?;
        degrees.push(CohomologyDegree {
            degree: n,
            ambient_dim: ambient,
            cochain_dim: space.dim(),
            coboundary_rank,
            cocycle_dim: cocycles.dim(),
            coboundary_dim: coboundaries.dim(),
            cohomology_dim: cocycles.dim() - coboundaries.dim(),
            cocycles,
            coboundaries,
            representatives,
        });
        coboundaries = next_coboundaries;
    }
    Ok(CohomologyReport { degrees })
}

/// `Bⁿ = δ(CL^{n−1})` in flat coordinates; `B¹ = 0`.
pub fn coboundary_space(l: &AlgebraSpec, a: &AlgebraSpec, n: usize, limits: Limits) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let ambient = l.dim().pow(n as u32) * a.dim();
    if n == 1 {
        return Ok(Subspace::zero(ambient));
    }
    let space = cochain_space_basis_with(l, a, n - 1, limits)?;
    limits.check(l.dim(), n, a.dim())?;
    let cols = Boundary::new(l).columns(n, limits.exec);
    let images: Vec<Vec<Scalar>> = limits
        .exec
        .map_slice(space.basis(), |b| coboundary_values(&cols, a.dim(), b, Exec::Sequential));
    Subspace::span(ambient, &images)
}

/// Checks that `δ` maps every basis cochain of `CLⁿ` into `CL^{n+1}` for
/// `n ≤ max_degree`. Only shapes are checked up front, so this also runs on
/// non-multiplicative brackets, where it can fail.
pub fn check_subcomplex_closure(l: &AlgebraSpec, a: &AlgebraSpec, max_degree: usize) -> Result<AxiomReport> {
    let limits = Limits::default();
    let boundary = Boundary::new(l);
    for n in 1..=max_degree {
        limits.check(l.dim(), n + 1, a.dim())?;
        let space = kernel_basis_with(&equivariance_operator(l, a, n), limits.exec);
        let cols = boundary.columns(n + 1, limits.exec);
        for b in space.basis() {
            let image = coboundary_values(&cols, a.dim(), b, limits.exec);
            if let Some((tuple, lhs, rhs)) = equivariance_defect(l, a, n + 1, &image) {
                return Ok(AxiomReport::fail(
                    "coboundary preserves equivariance",
                    &tuple,
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Ok(AxiomReport::pass())
}
