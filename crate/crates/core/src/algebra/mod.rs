//! Finite-dimensional algebras given by structure constants and a twist map,
//! with exhaustive axiom checkers.
//!
//! Every identity checked here is multilinear, so it holds for all vectors as
//! soon as it holds on all tuples of basis vectors. Checkers walk basis tuples
//! in lexicographic order and report the first failure.

mod constructions;
pub mod fixtures;

use std::fmt;

use num_traits::{One, Zero};

pub use constructions::{diff_lie_twist, tensor_hom_lie, yau_twist, zinbiel_symmetrize};
pub use fixtures::{random_fixture, random_leibniz_with_hom, FixtureFamily};

use crate::error::{Error, Result};
use crate::linalg::{fmt_vector, Matrix, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    HomLeibniz,
    HomAssociative,
    HomZinbiel,
    HomLie,
    Untyped,
}

impl AlgebraKind {
    pub fn tag(self) -> &'static str {
        match self {
            AlgebraKind::HomLeibniz => "hom_leibniz",
            AlgebraKind::HomAssociative => "hom_associative",
            AlgebraKind::HomZinbiel => "hom_zinbiel",
            AlgebraKind::HomLie => "hom_lie",
            AlgebraKind::Untyped => "untyped",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Some(match tag {
            "hom_leibniz" => AlgebraKind::HomLeibniz,
            "hom_associative" => AlgebraKind::HomAssociative,
            "hom_zinbiel" => AlgebraKind::HomZinbiel,
            "hom_lie" => AlgebraKind::HomLie,
            "untyped" => AlgebraKind::Untyped,
            _ => return None,
        })
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A bilinear product `eᵢ·eⱼ = Σₖ c[i][j][k] eₖ` together with a twist
/// endomorphism (α for Hom-Leibniz/Hom-Lie, α₁ for Hom-associative and
/// Hom-Zinbiel algebras).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    kind: AlgebraKind,
    dim: usize,
    product: Vec<Scalar>,
    twist: Matrix,
}

/// First failing basis tuple of an identity, with both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: &'static str,
    /// 1-based basis indices.
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn pass() -> Self {
        AxiomReport {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(identity: &'static str, indices: &[usize], lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        AxiomReport {
            passed: false,
            witness: Some(Witness {
                identity,
                indices: indices.iter().map(|i| i + 1).collect(),
                lhs,
                rhs,
            }),
        }
    }

    /// Chains checks: keeps the first failure.
    pub fn and_then(self, next: impl FnOnce() -> AxiomReport) -> AxiomReport {
        if self.passed {
            next()
        } else {
            self
        }
    }

    pub(crate) fn into_result(self, what: &'static str) -> Result<()> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::axiom(what, self))
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("pass"),
            Some(w) => {
                let idx: Vec<String> = w.indices.iter().map(|i| format!("e{i}")).collect();
                write!(
                    f,
                    "{} fails at ({}): lhs {} != rhs {}",
                    w.identity,
                    idx.join(","),
                    fmt_vector(&w.lhs),
                    fmt_vector(&w.rhs)
                )
            }
        }
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn basis_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

impl AlgebraSpec {
    /// Validating constructor: shape checks plus the axiom checker for `kind`.
    pub fn new(kind: AlgebraKind, dim: usize, product: Vec<Scalar>, twist: Matrix) -> Result<Self> {
        let spec = Self::untyped(dim, product, twist)?;
        spec.with_kind(kind)
    }

    /// Shape-checked spec with no axioms enforced, for negative tests and
    /// freshly parsed input.
    pub fn untyped(dim: usize, product: Vec<Scalar>, twist: Matrix) -> Result<Self> {
        Error::check_dim(dim * dim * dim, product.len())?;
        Error::check_dim(dim, twist.rows())?;
        Error::check_dim(dim, twist.cols())?;
        Ok(AlgebraSpec {
            kind: AlgebraKind::Untyped,
            dim,
            product,
            twist,
        })
    }

    /// Builds the table from `f(i, j) = eᵢ·eⱼ` (0-based indices).
    pub fn from_fn(
        kind: AlgebraKind,
        dim: usize,
        twist: Matrix,
        f: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self> {
        let mut product = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let col = f(i, j);
                Error::check_dim(dim, col.len())?;
                product.extend(col);
            }
        }
        Self::new(kind, dim, product, twist)
    }

    /// Re-tags the spec, running the checker for the new kind.
    pub fn with_kind(mut self, kind: AlgebraKind) -> Result<Self> {
        match kind {
            AlgebraKind::HomLeibniz => check_hom_leibniz(&self).into_result("hom-Leibniz identity")?,
            AlgebraKind::HomAssociative => {
                check_hom_associative(&self).into_result("hom-associativity")?
            }
            AlgebraKind::HomZinbiel => check_hom_zinbiel(&self).into_result("hom-Zinbiel identity")?,
            AlgebraKind::HomLie => check_hom_lie(&self).into_result("hom-Lie axioms")?,
            AlgebraKind::Untyped => {}
        }
        self.kind = kind;
        Ok(self)
    }

    /// Same product, different twist; the result is untyped.
    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        Self::untyped(self.dim, self.product.clone(), twist)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.product
    }

    /// Coordinates of `eᵢ·eⱼ` (0-based).
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.product[start..start + self.dim]
    }

    pub fn is_abelian(&self) -> bool {
        self.product.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        out
    }

    pub fn apply_twist(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.twist.mul_vec(x)
    }

    fn twist_images(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|i| self.twist.column(i)).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.dim, i)
    }
}

/// Bilinear extension of the structure constants.
pub fn eval_product(a: &AlgebraSpec, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
    Error::check_dim(a.dim, x.len())?;
    Error::check_dim(a.dim, y.len())?;
    Ok(a.mul(x, y))
}

fn for_triples(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Option<AxiomReport>) -> AxiomReport {
    for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                if let Some(r) = f(x, y, z) {
                    return r;
                }
            }
        }
    }
    AxiomReport::pass()
}

fn for_pairs(dim: usize, mut f: impl FnMut(usize, usize) -> Option<AxiomReport>) -> AxiomReport {
    for x in 0..dim {
        for y in 0..dim {
            if let Some(r) = f(x, y) {
                return r;
            }
        }
    }
    AxiomReport::pass()
}

/// `[α(x),[y,z]] = [[x,y],α(z)] − [[x,z],α(y)]`.
pub fn check_hom_leibniz(a: &AlgebraSpec) -> AxiomReport {
    let al = a.twist_images();
    for_triples(a.dim, |x, y, z| {
        let lhs = a.mul(&al[x], a.basis_product(y, z));
        let rhs = sub(
            &a.mul(a.basis_product(x, y), &al[z]),
            &a.mul(a.basis_product(x, z), &al[y]),
        );
        (lhs != rhs).then(|| AxiomReport::fail("hom-Leibniz identity", &[x, y, z], lhs, rhs))
    })
}

/// `[α(x),α(y)] = α([x,y])`.
pub fn check_multiplicative(a: &AlgebraSpec) -> AxiomReport {
    let al = a.twist_images();
    for_pairs(a.dim, |x, y| {
        let lhs = a.mul(&al[x], &al[y]);
        let rhs = a.apply_twist(a.basis_product(x, y));
        (lhs != rhs).then(|| AxiomReport::fail("multiplicativity", &[x, y], lhs, rhs))
    })
}

/// `μ(α₁(x), μ(y,z)) = μ(μ(x,y), α₁(z))` on triples, then multiplicativity of α₁.
pub fn check_hom_associative(a: &AlgebraSpec) -> AxiomReport {
    let al = a.twist_images();
    for_triples(a.dim, |x, y, z| {
        let lhs = a.mul(&al[x], a.basis_product(y, z));
        let rhs = a.mul(a.basis_product(x, y), &al[z]);
        (lhs != rhs).then(|| AxiomReport::fail("hom-associativity", &[x, y, z], lhs, rhs))
    })
    .and_then(|| check_multiplicative(a))
}

pub fn check_commutative(a: &AlgebraSpec) -> AxiomReport {
    for_pairs(a.dim, |x, y| {
        let lhs = a.basis_product(x, y);
        let rhs = a.basis_product(y, x);
        (lhs != rhs).then(|| AxiomReport::fail("commutativity", &[x, y], lhs.to_vec(), rhs.to_vec()))
    })
}

/// Skew-symmetry on basis pairs (including `[eᵢ,eᵢ] = 0`), then the cyclic
/// Hom-Jacobi sum `[[x,y],α(z)] + [[y,z],α(x)] + [[z,x],α(y)] = 0`.
pub fn check_hom_lie(a: &AlgebraSpec) -> AxiomReport {
    let al = a.twist_images();
    let zero = vec![Scalar::zero(); a.dim];
    for_pairs(a.dim, |x, y| {
        let lhs = a.basis_product(x, y).to_vec();
        let rhs: Vec<Scalar> = a.basis_product(y, x).iter().map(|c| -c).collect();
        (lhs != rhs).then(|| AxiomReport::fail("skew-symmetry", &[x, y], lhs, rhs))
    })
    .and_then(|| {
        for_triples(a.dim, |x, y, z| {
            let s = add(
                &add(
                    &a.mul(a.basis_product(x, y), &al[z]),
                    &a.mul(a.basis_product(y, z), &al[x]),
                ),
                &a.mul(a.basis_product(z, x), &al[y]),
            );
            (s != zero).then(|| AxiomReport::fail("hom-Jacobi identity", &[x, y, z], s, zero.clone()))
        })
    })
}

/// `((xy)α₁(z)) = (α₁(x)(yz)) + (α₁(x)(zy))`.
pub fn check_hom_zinbiel(a: &AlgebraSpec) -> AxiomReport {
    let al = a.twist_images();
    for_triples(a.dim, |x, y, z| {
        let lhs = a.mul(a.basis_product(x, y), &al[z]);
        let rhs = add(
            &a.mul(&al[x], a.basis_product(y, z)),
            &a.mul(&al[x], a.basis_product(z, y)),
        );
        (lhs != rhs).then(|| AxiomReport::fail("hom-Zinbiel identity", &[x, y, z], lhs, rhs))
    })
}

/// A linear map between coordinate spaces; the matrix is `target × source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source_dim: usize, target_dim: usize, matrix: Matrix) -> Result<Self> {
        Error::check_dim(target_dim, matrix.rows())?;
        Error::check_dim(source_dim, matrix.cols())?;
        Ok(LinearMap { matrix })
    }

    pub fn from_matrix(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(target_dim, source_dim),
        }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap {
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }
}

/// `φ([x,y]₁) = [φ(x),φ(y)]₂` on basis pairs, then `φ∘α₁ = α₂∘φ` on basis vectors.
pub fn check_homomorphism(phi: &LinearMap, src: &AlgebraSpec, dst: &AlgebraSpec) -> Result<AxiomReport> {
    Error::check_dim(src.dim, phi.source_dim())?;
    Error::check_dim(dst.dim, phi.target_dim())?;
    let images: Vec<Vec<Scalar>> = (0..src.dim).map(|i| phi.matrix.column(i)).collect();
    let bracket = for_pairs(src.dim, |x, y| {
        let lhs = phi.apply(src.basis_product(x, y));
        let rhs = dst.mul(&images[x], &images[y]);
        (lhs != rhs).then(|| AxiomReport::fail("bracket preservation", &[x, y], lhs, rhs))
    });
    Ok(bracket.and_then(|| {
        for x in 0..src.dim {
            let lhs = phi.apply(&src.twist.column(x));
            let rhs = dst.apply_twist(&images[x]);
            if lhs != rhs {
                return AxiomReport::fail("twist intertwining", &[x], lhs, rhs);
            }
        }
        AxiomReport::pass()
    }))
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::linalg::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn paper_products() {
        let l = paper_l();
        assert_eq!(eval_product(&l, &v(&[0, 1]), &v(&[0, 1])).unwrap(), v(&[1, 0]));
        assert_eq!(eval_product(&l, &v(&[1, 0]), &v(&[0, 1])).unwrap(), v(&[0, 0]));
        let a = paper_a();
        assert_eq!(eval_product(&a, &v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[1, 0]));
        assert!(eval_product(&a, &v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn paper_l_axioms() {
        let l = paper_l();
        assert!(check_hom_leibniz(&l).passed);
        assert!(check_multiplicative(&l).passed);
        assert!(check_commutative(&l).passed);
        let lie = check_hom_lie(&l);
        let w = lie.witness.unwrap();
        assert_eq!(w.identity, "skew-symmetry");
        assert_eq!(w.indices, vec![2, 2]);
        assert_eq!(w.lhs, v(&[1, 0]));
    }

    fn brute_force_hom_leibniz(a: &AlgebraSpec) -> bool {
        let n = a.dim();
        (0..n * n * n).all(|t| {
            let (x, y, z) = (a.basis_vector(t / (n * n)), a.basis_vector(t / n % n), a.basis_vector(t % n));
            let ax = a.twist().mul_vec(&x);
            let ay = a.twist().mul_vec(&y);
            let az = a.twist().mul_vec(&z);
            let lhs = a.mul(&ax, &a.mul(&y, &z));
            let r1 = a.mul(&a.mul(&x, &y), &az);
            let r2 = a.mul(&a.mul(&x, &z), &ay);
            lhs.iter().zip(r1.iter().zip(&r2)).all(|(l, (p, q))| *l == p - q)
        })
    }

    #[test]
    fn paper_l_with_zero_twist() {
        // Brute force over the 8 triples: [L,L] = span(e1) is central, so every
        // term vanishes and the identity holds.
        let l = paper_l().with_twist(Matrix::zeros(2, 2)).unwrap();
        assert!(brute_force_hom_leibniz(&l));
        assert!(check_hom_leibniz(&l).passed);
        assert!(check_multiplicative(&l).passed);
    }

    #[test]
    fn paper_a_axioms() {
        let a = paper_a();
        assert!(check_hom_associative(&a).passed);
        assert!(check_commutative(&a).passed);
    }

    #[test]
    fn paper_a_with_identity_twist() {
        // Brute force: both bracketings give a1 exactly on (a1,a1,a1) and a2
        // elsewhere, so the untwisted product is associative.
        let a = paper_a().with_twist(Matrix::identity(2)).unwrap();
        assert!(brute_force_associative(&a));
        assert!(check_hom_associative(&a).passed);
    }

    fn brute_force_associative(a: &AlgebraSpec) -> bool {
        let e = |i: usize| {
            let mut x = vec![int(0); a.dim()];
            x[i] = int(1);
            x
        };
        (0..8).all(|t| {
            let (x, y, z) = (e(t >> 2 & 1), e(t >> 1 & 1), e(t & 1));
            a.mul(&x, &a.mul(&y, &z)) == a.mul(&a.mul(&x, &y), &z)
        })
    }

    #[test]
    fn commutative_failure_witness() {
        let mut product = vec![int(0); 8];
        product[(0 * 2 + 1) * 2] = int(1);
        let a = AlgebraSpec::untyped(2, product, Matrix::identity(2)).unwrap();
        let w = check_commutative(&a).witness.unwrap();
        assert_eq!(w.indices, vec![1, 2]);
    }

    #[test]
    fn abelian_passes_everything() {
        let a = abelian(3, Matrix::from_fn(3, 3, |r, c| int((r * 3 + c) as i64 - 4)));
        assert!(check_hom_leibniz(&a).passed);
        assert!(check_multiplicative(&a).passed);
        assert!(check_hom_lie(&a).passed);
        assert!(check_hom_zinbiel(&a).passed);
        assert!(check_hom_associative(&a).passed);
    }

    #[test]
    fn one_dim_idempotent_is_not_zinbiel() {
        // (x·x)·x = x but x·(x·x) + x·(x·x) = 2x.
        let a = AlgebraSpec::untyped(1, v(&[1]), Matrix::identity(1)).unwrap();
        let w = check_hom_zinbiel(&a).witness.unwrap();
        assert_eq!((w.lhs, w.rhs), (v(&[1]), v(&[2])));
    }

    #[test]
    fn truncated_half_shuffle_is_zinbiel() {
        for dim in 1..=4 {
            assert!(check_hom_zinbiel(&zinbiel_truncated(dim)).passed, "dim {dim}");
        }
    }

    #[test]
    fn homomorphism_examples() {
        let l = paper_l();
        assert!(check_homomorphism(&LinearMap::identity(2), &l, &l).unwrap().passed);
        assert!(check_homomorphism(&LinearMap::zero(2, 2), &l, &l).unwrap().passed);
        let alpha = LinearMap::from_matrix(l.twist().clone());
        assert!(check_homomorphism(&alpha, &l, &l).unwrap().passed);
        let swap = LinearMap::from_matrix(Matrix::from_rows(vec![v(&[0, 1]), v(&[1, 0])]).unwrap());
        assert!(!check_homomorphism(&swap, &l, &l).unwrap().passed);
        assert!(check_homomorphism(&LinearMap::identity(3), &l, &l).is_err());
    }

    #[test]
    fn typed_constructor_rejects_bad_kind() {
        let l = paper_l();
        let err = l.clone().with_kind(AlgebraKind::HomLie).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
        assert!(AlgebraSpec::untyped(2, vec![int(0); 7], Matrix::identity(2)).is_err());
    }

    #[test]
    fn hom_lie_fixtures_are_hom_leibniz() {
        let h = heisenberg();
        assert!(check_hom_lie(&h).passed);
        assert!(check_hom_leibniz(&h).passed);
    }
}
