//! New algebras from old: Yau twists, the differential-Lie twist, the tensor
//! product with a Hom-Zinbiel algebra and Zinbiel symmetrization.

use super::{
    check_hom_leibniz, check_hom_lie, check_hom_zinbiel, check_homomorphism, check_multiplicative,
    AlgebraKind, AlgebraSpec, AxiomReport, LinearMap,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

fn require_identity_twist(a: &AlgebraSpec, what: &str) -> Result<()> {
    if a.twist() != &Matrix::identity(a.dim()) {
        return Err(Error::Invalid(format!("{what} must have identity twist")));
    }
    Ok(())
}

/// `[x,y]_α = [α(x),α(y)]` with twist `α`, for a Leibniz algebra `leibniz`
/// and an algebra endomorphism `alpha`.
pub fn yau_twist(leibniz: &AlgebraSpec, alpha: &LinearMap) -> Result<AlgebraSpec> {
    require_identity_twist(leibniz, "yau_twist input")?;
    check_hom_leibniz(leibniz).into_result("yau_twist input: Leibniz identity")?;
    check_homomorphism(alpha, leibniz, leibniz)?.into_result("yau_twist: alpha is an endomorphism")?;
    let images: Vec<Vec<Scalar>> = (0..leibniz.dim()).map(|i| alpha.matrix().column(i)).collect();
    let out = AlgebraSpec::from_fn(AlgebraKind::HomLeibniz, leibniz.dim(), alpha.matrix().clone(), |i, j| {
        leibniz.mul(&images[i], &images[j])
    })?;
    check_multiplicative(&out).into_result("yau_twist output multiplicativity")?;
    Ok(out)
}

/// `[x,y]_{d,α} = [α(x), dα(y)]` for a Lie algebra with a square-zero
/// derivation `d` commuting with the Lie endomorphism `alpha`.
pub fn diff_lie_twist(lie: &AlgebraSpec, d: &LinearMap, alpha: &LinearMap) -> Result<AlgebraSpec> {
    let n = lie.dim();
    require_identity_twist(lie, "diff_lie_twist input")?;
    check_hom_lie(lie).into_result("diff_lie_twist input: Lie axioms")?;
    Error::check_dim(n, d.source_dim())?;
    Error::check_dim(n, d.target_dim())?;
    check_homomorphism(alpha, lie, lie)?.into_result("diff_lie_twist: alpha preserves the bracket")?;

    let ad = alpha.compose(d)?;
    let da = d.compose(alpha)?;
    if ad != da {
        return Err(Error::Invalid("alpha and d do not commute".into()));
    }
    if !d.compose(d)?.matrix().is_zero() {
        return Err(Error::Invalid("d is not square-zero".into()));
    }
    let dcols: Vec<Vec<Scalar>> = (0..n).map(|i| d.matrix().column(i)).collect();
    for x in 0..n {
        for y in 0..n {
            let lhs = d.apply(lie.basis_product(x, y));
            let rhs: Vec<Scalar> = lie
                .mul(&dcols[x], &lie.basis_vector(y))
                .iter()
                .zip(lie.mul(&lie.basis_vector(x), &dcols[y]))
                .map(|(a, b)| a + b)
                .collect();
            if lhs != rhs {
                return Err(Error::axiom(
                    "diff_lie_twist: d is a derivation",
                    AxiomReport::fail("derivation rule", &[x, y], lhs, rhs),
                ));
            }
        }
    }

    let a_images: Vec<Vec<Scalar>> = (0..n).map(|i| alpha.matrix().column(i)).collect();
    let da_images: Vec<Vec<Scalar>> = (0..n).map(|i| da.matrix().column(i)).collect();
    AlgebraSpec::from_fn(AlgebraKind::HomLeibniz, n, alpha.matrix().clone(), |i, j| {
        lie.mul(&a_images[i], &da_images[j])
    })
}

/// `L ⊗ R` with `[x⊗r, y⊗s] = [x,y]⊗(rs) − [y,x]⊗(sr)` and twist `α⊗α₁`.
/// Basis `eᵢ⊗r_a` has index `i·dim R + a`.
///
/// The output is validated as Hom-Lie; a failure is returned as an axiom
/// error carrying the counterexample.
pub fn tensor_hom_lie(l: &AlgebraSpec, r: &AlgebraSpec) -> Result<AlgebraSpec> {
    check_hom_leibniz(l).into_result("tensor_hom_lie: left factor is Hom-Leibniz")?;
    check_hom_zinbiel(r).into_result("tensor_hom_lie: right factor is Hom-Zinbiel")?;
    let (dl, dr) = (l.dim(), r.dim());
    let n = dl * dr;
    let twist = l.twist().kron(r.twist());
    let mut product = vec![Scalar::default(); n * n * n];
    for i in 0..dl {
        for a in 0..dr {
            for j in 0..dl {
                for b in 0..dr {
                    let row = ((i * dr + a) * n + (j * dr + b)) * n;
                    let xy = l.basis_product(i, j);
                    let yx = l.basis_product(j, i);
                    let rs = r.basis_product(a, b);
                    let sr = r.basis_product(b, a);
                    for k in 0..dl {
                        for c in 0..dr {
                            let v = &xy[k] * &rs[c] - &yx[k] * &sr[c];
                            product[row + k * dr + c] = v;
                        }
                    }
                }
            }
        }
    }
    AlgebraSpec::new(AlgebraKind::HomLie, n, product, twist)
}

/// `x ∗ y = xy + yx` with the same twist, validated as a Hom-associative
/// algebra (both clauses).
pub fn zinbiel_symmetrize(r: &AlgebraSpec) -> Result<AlgebraSpec> {
    check_hom_zinbiel(r).into_result("zinbiel_symmetrize input")?;
    let n = r.dim();
    AlgebraSpec::from_fn(AlgebraKind::HomAssociative, n, r.twist().clone(), |i, j| {
        r.basis_product(i, j)
            .iter()
            .zip(r.basis_product(j, i))
            .map(|(a, b)| a + b)
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::*;
    use crate::algebra::{check_commutative, check_hom_associative};
    use crate::linalg::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn yau_twist_reproduces_paper_l() {
        // [α(e2), α(e2)] = [e1+e2, e1+e2] = [e2,e2] = e1, all else zero.
        let base = paper_l().with_twist(Matrix::identity(2)).unwrap();
        let alpha = LinearMap::from_matrix(m(&[&[1, 1], &[0, 1]]));
        assert_eq!(yau_twist(&base, &alpha).unwrap(), paper_l());
    }

    #[test]
    fn yau_twist_by_identity_is_noop() {
        let base = leibniz_right_unit();
        assert_eq!(yau_twist(&base, &LinearMap::identity(2)).unwrap(), base);
    }

    #[test]
    fn yau_twist_of_abelian_is_abelian() {
        let base = abelian(2, Matrix::identity(2));
        let out = yau_twist(&base, &LinearMap::from_matrix(m(&[&[2, 1], &[0, 3]]))).unwrap();
        assert!(out.is_abelian());
    }

    #[test]
    fn yau_twist_rejects_non_homomorphism() {
        let base = leibniz_right_unit();
        let err = yau_twist(&base, &LinearMap::from_matrix(m(&[&[0, 1], &[1, 0]]))).unwrap_err();
        assert!(matches!(err, Error::Axiom { .. }));
        assert!(yau_twist(&paper_l(), &LinearMap::identity(2)).is_err());
    }

    #[test]
    fn diff_lie_twist_examples() {
        let h = heisenberg().with_kind(AlgebraKind::Untyped).unwrap();
        let zero = LinearMap::zero(3, 3);
        let out = diff_lie_twist(&h, &zero, &LinearMap::identity(3)).unwrap();
        assert!(out.is_abelian());

        // d(e1) = e2 is a square-zero derivation of the Heisenberg algebra;
        // α = diag(t, t, t²) preserves the bracket and commutes with d.
        let d = LinearMap::from_matrix(m(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]));
        let alpha = LinearMap::from_matrix(m(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 4]]));
        let out = diff_lie_twist(&h, &d, &alpha).unwrap();
        // [e1,e1]_{d,α} = [2e1, 2e2] = 4e3, nothing else.
        assert_eq!(out.basis_product(0, 0), &[int(0), int(0), int(4)]);
        assert_eq!(out.structure_constants().iter().filter(|c| **c != int(0)).count(), 1);
        assert!(check_hom_leibniz(&out).passed);

        let central_shift = LinearMap::from_matrix(m(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]));
        assert!(diff_lie_twist(&h, &central_shift, &LinearMap::identity(3)).is_ok());
        let bad = LinearMap::from_matrix(m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert!(diff_lie_twist(&h, &bad, &LinearMap::identity(3)).is_err());
    }

    #[test]
    fn abelian_lie_with_any_valid_data_is_abelian() {
        let a = abelian(2, Matrix::identity(2)).with_kind(AlgebraKind::HomLie).unwrap();
        let d = LinearMap::from_matrix(m(&[&[0, 1], &[0, 0]]));
        let alpha = LinearMap::from_matrix(m(&[&[3, 1], &[0, 3]]));
        assert!(diff_lie_twist(&a, &d, &alpha).unwrap().is_abelian());
    }

    #[test]
    fn tensor_with_abelian_factors_is_abelian() {
        let r = abelian(1, Matrix::identity(1)).with_kind(AlgebraKind::HomZinbiel).unwrap();
        assert!(tensor_hom_lie(&paper_l(), &r).unwrap().is_abelian());
        let out = tensor_hom_lie(&abelian(2, Matrix::identity(2)), &zinbiel_truncated(3)).unwrap();
        assert!(out.is_abelian());
    }

    #[test]
    fn tensor_paper_l_with_zinbiel() {
        let out = tensor_hom_lie(&paper_l(), &zinbiel_scaled(2, 3)).unwrap();
        assert_eq!(out.dim(), 4);
        assert!(check_hom_lie(&out).passed);
        assert!(tensor_hom_lie(&paper_a(), &zinbiel_truncated(2)).is_err());
    }

    #[test]
    fn symmetrization_examples() {
        let r = abelian(2, m(&[&[1, 2], &[3, 4]])).with_kind(AlgebraKind::HomZinbiel).unwrap();
        assert!(zinbiel_symmetrize(&r).unwrap().is_abelian());
        for dim in 1..=4 {
            let z = zinbiel_truncated(dim);
            let s = zinbiel_symmetrize(&z).unwrap();
            assert!(check_hom_associative(&s).passed);
            assert!(check_commutative(&s).passed);
        }
    }
}
