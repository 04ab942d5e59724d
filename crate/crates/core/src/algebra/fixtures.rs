//! Built-in algebras and seeded random generators for the test corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{yau_twist, AlgebraKind, AlgebraSpec, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar};

fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

fn int_matrix(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| ints(r)).collect()).expect("rectangular")
}

/// Builds a typed spec from an integer multiplication table given as a list of
/// nonzero entries `(i, j, k, c)` meaning `eᵢ·eⱼ += c·eₖ` (0-based).
fn from_entries(kind: AlgebraKind, dim: usize, entries: &[(usize, usize, usize, i64)], twist: Matrix) -> AlgebraSpec {
    let mut product = vec![int(0); dim * dim * dim];
    for &(i, j, k, c) in entries {
        product[(i * dim + j) * dim + k] += int(c);
    }
    AlgebraSpec::new(kind, dim, product, twist).expect("built-in fixture satisfies its axioms")
}

/// Two-dimensional Hom-Leibniz algebra with `[e₂,e₂] = e₁` and
/// `α = [[1,1],[0,1]]`, i.e. `α(e₁) = e₁`, `α(e₂) = e₁ + e₂`.
pub fn paper_l() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomLeibniz,
        2,
        &[(1, 1, 0, 1)],
        int_matrix(&[&[1, 1], &[0, 1]]),
    )
}

/// Two-dimensional Hom-associative commutative algebra: `μ(a₁,a₁) = a₁`,
/// every other basis product is `a₂`; `α₁(a₁) = a₁ − a₂`, `α₁(a₂) = 0`.
pub fn paper_a() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomAssociative,
        2,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)],
        int_matrix(&[&[1, 0], &[-1, 0]]),
    )
}

pub fn abelian(dim: usize, twist: Matrix) -> AlgebraSpec {
    AlgebraSpec::new(AlgebraKind::HomLeibniz, dim, vec![int(0); dim * dim * dim], twist)
        .expect("abelian algebras satisfy every identity")
}

/// The ground field as a one-dimensional coefficient algebra.
pub fn rational_unit() -> AlgebraSpec {
    from_entries(AlgebraKind::HomAssociative, 1, &[(0, 0, 0, 1)], Matrix::identity(1))
}

/// `ℚ[ε]/ε²` with identity twist.
pub fn dual_numbers() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomAssociative,
        2,
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        Matrix::identity(2),
    )
}

/// `ℚ[x]/x³` Yau-twisted by the algebra map `x ↦ c·x`: basis `1, x, x²`,
/// `μ(xᵖ, x^q) = c^{p+q} x^{p+q}`, `α₁ = diag(1, c, c²)`.
pub fn truncated_poly_scaled(c: i64) -> AlgebraSpec {
    let mut entries = Vec::new();
    for p in 0..3usize {
        for q in 0..3 - p {
            entries.push((p, q, p + q, c.pow((p + q) as u32)));
        }
    }
    from_entries(
        AlgebraKind::HomAssociative,
        3,
        &entries,
        int_matrix(&[&[1, 0, 0], &[0, c, 0], &[0, 0, c * c]]),
    )
}

/// Leibniz algebra `[e₁,e₂] = e₁` (not Lie: `[e₂,e₁] = 0`).
pub fn leibniz_right_unit() -> AlgebraSpec {
    from_entries(AlgebraKind::HomLeibniz, 2, &[(0, 1, 0, 1)], Matrix::identity(2))
}

/// Nilpotent Leibniz algebra with central `e₁`.
pub fn nilpotent_leibniz3() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomLeibniz,
        3,
        &[(1, 1, 0, 1), (1, 2, 0, 1), (2, 1, 0, 2)],
        Matrix::identity(3),
    )
}

/// Leibniz algebra `[e₁,e₃] = e₁`, `[e₂,e₃] = e₂`.
pub fn diagonal_leibniz3() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomLeibniz,
        3,
        &[(0, 2, 0, 1), (1, 2, 1, 1)],
        Matrix::identity(3),
    )
}

/// Heisenberg Lie algebra `[e₁,e₂] = e₃`.
pub fn heisenberg() -> AlgebraSpec {
    from_entries(
        AlgebraKind::HomLie,
        3,
        &[(0, 1, 2, 1), (1, 0, 2, -1)],
        Matrix::identity(3),
    )
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Half-shuffle algebra on one generator truncated above degree `dim`:
/// basis `x, x², …, x^dim`, `x^p · x^q = C(p+q−1, q) x^{p+q}`.
pub fn zinbiel_truncated(dim: usize) -> AlgebraSpec {
    zinbiel_scaled(dim, 1)
}

/// Yau twist of [`zinbiel_truncated`] by the algebra map `x^p ↦ c^p x^p`.
pub fn zinbiel_scaled(dim: usize, c: i64) -> AlgebraSpec {
    let mut entries = Vec::new();
    for p in 1..=dim {
        for q in 1..=dim {
            if p + q <= dim {
                let scale = c.pow((p + q) as u32);
                entries.push((p - 1, q - 1, p + q - 1, scale * binomial(p + q - 1, q)));
            }
        }
    }
    let twist = Matrix::from_fn(dim, dim, |r, col| {
        if r == col {
            int(c.pow(r as u32 + 1))
        } else {
            int(0)
        }
    });
    from_entries(AlgebraKind::HomZinbiel, dim, &entries, twist)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureFamily {
    AbelianWithRandomTwist,
    YauTwistOfFixedLeibniz,
    PaperL,
    PaperA,
}

impl FixtureFamily {
    pub fn tag(self) -> &'static str {
        match self {
            FixtureFamily::AbelianWithRandomTwist => "abelian_with_random_twist",
            FixtureFamily::YauTwistOfFixedLeibniz => "yau_twist_of_fixed_leibniz",
            FixtureFamily::PaperL => "paper_L",
            FixtureFamily::PaperA => "paper_A",
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> Matrix {
    let data: Vec<Scalar> = (0..dim * dim).map(|_| int(rng.gen_range(lo..=hi))).collect();
    Matrix::from_vec(dim, dim, data).expect("square")
}

/// Deterministic corpus member. `dim` is ignored for the `PaperL` and `PaperA` families.
pub fn random_fixture(seed: u64, dim: usize, family: FixtureFamily) -> Result<AlgebraSpec> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Invalid(format!("fixture dimension must be 1..=3, got {dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match family {
        FixtureFamily::PaperL => paper_l(),
        FixtureFamily::PaperA => paper_a(),
        FixtureFamily::AbelianWithRandomTwist => abelian(dim, random_matrix(&mut rng, dim, -2, 2)),
        FixtureFamily::YauTwistOfFixedLeibniz => {
            let (leibniz, alpha) = random_leibniz_with_hom(seed, dim)?;
            // The generator only returns verified homomorphisms, so this cannot
            // fail; fall back to the abelian family if it ever does.
            yau_twist(&leibniz, &alpha).unwrap_or_else(|_| abelian(dim, Matrix::identity(dim)))
        }
    })
}

fn base_leibniz(dim: usize, choice: u32) -> AlgebraSpec {
    match dim {
        1 => abelian(1, Matrix::identity(1)),
        2 => match choice % 2 {
            0 => paper_l().with_twist(Matrix::identity(2)).unwrap().with_kind(AlgebraKind::HomLeibniz).unwrap(),
            _ => leibniz_right_unit(),
        },
        _ => match choice % 3 {
            0 => nilpotent_leibniz3(),
            1 => diagonal_leibniz3(),
            _ => heisenberg().with_kind(AlgebraKind::HomLeibniz).unwrap(),
        },
    }
}

struct IntTable {
    dim: usize,
    c: Vec<i64>,
}

impl IntTable {
    fn of(a: &AlgebraSpec) -> Self {
        let c = a
            .structure_constants()
            .iter()
            .map(|x| i64::try_from(x.to_integer()).expect("small integer fixture"))
            .collect();
        IntTable { dim: a.dim(), c }
    }

    fn mul(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let d = self.dim;
        let mut out = vec![0; d];
        for i in 0..d {
            for j in 0..d {
                let s = x[i] * y[j];
                if s != 0 {
                    for k in 0..d {
                        out[k] += s * self.c[(i * d + j) * d + k];
                    }
                }
            }
        }
        out
    }

    /// Bracket preservation for the column-major map `m`.
    fn preserved_by(&self, m: &[i64]) -> bool {
        let d = self.dim;
        let col = |j: usize| (0..d).map(|i| m[i * d + j]).collect::<Vec<_>>();
        let apply = |v: &[i64]| (0..d).map(|i| (0..d).map(|j| m[i * d + j] * v[j]).sum()).collect::<Vec<i64>>();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = apply(&self.c[(i * d + j) * d..(i * d + j + 1) * d]);
                lhs == self.mul(&col(i), &col(j))
            })
        })
    }
}

const HOM_SAMPLE_ATTEMPTS: usize = 4000;

fn sample_entry(rng: &mut ChaCha8Rng, below_diagonal: bool) -> i64 {
    let zero_bias = if below_diagonal { 0.75 } else { 0.5 };
    if rng.gen_bool(zero_bias) {
        0
    } else {
        [-1, 1, 2][rng.gen_range(0..3)]
    }
}

/// Unit upper times unit lower triangular integer matrix: determinant 1, so
/// its inverse is integral too.
fn random_unimodular(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    let upper = Matrix::from_fn(dim, dim, |r, c| if r == c { int(1) } else { int(0) });
    let mut u = upper.clone();
    let mut l = upper;
    for r in 0..dim {
        for c in 0..dim {
            if r < c {
                u.set(r, c, int(rng.gen_range(-1..=1)));
            } else if r > c {
                l.set(r, c, int(rng.gen_range(-1..=1)));
            }
        }
    }
    u.mul(&l).expect("square")
}

/// A Leibniz algebra (identity twist) in a random basis together with a
/// verified endomorphism of it, both deterministic in `seed`.
///
/// The endomorphism is found by rejection sampling in the base algebra's own
/// coordinates; if no sample survives, the identity map is used.
pub fn random_leibniz_with_hom(seed: u64, dim: usize) -> Result<(AlgebraSpec, LinearMap)> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Invalid(format!("fixture dimension must be 1..=3, got {dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_1eb1);
    let base = base_leibniz(dim, rng.gen::<u32>());
    let table = IntTable::of(&base);
    let mut hom = None;
    for _ in 0..HOM_SAMPLE_ATTEMPTS {
        let m: Vec<i64> = (0..dim * dim).map(|k| sample_entry(&mut rng, k / dim > k % dim)).collect();
        if m.iter().all(|&x| x == 0) {
            continue;
        }
        if table.preserved_by(&m) {
            hom = Some(Matrix::from_vec(dim, dim, ints(&m))?);
            break;
        }
    }
    let alpha = hom.unwrap_or_else(|| Matrix::identity(dim));

    let p = random_unimodular(&mut rng, dim);
    let p_inv = p.inverse().expect("unimodular");
    let columns: Vec<Vec<Scalar>> = (0..dim).map(|i| p.column(i)).collect();
    let conjugated = AlgebraSpec::from_fn(AlgebraKind::HomLeibniz, dim, Matrix::identity(dim), |i, j| {
        p_inv.mul_vec(&base.mul(&columns[i], &columns[j]))
    })?;
    let alpha = p_inv.mul(&alpha)?.mul(&p)?;
    Ok((conjugated, LinearMap::from_matrix(alpha)))
}

fn named(name: &str, spec: AlgebraSpec) -> (String, AlgebraSpec) {
    (name.to_string(), spec)
}

fn jordan2() -> Matrix {
    int_matrix(&[&[1, 1], &[0, 1]])
}

/// Multiplicative Hom-Leibniz algebras used by the chain-complex suites:
/// the `paper_L` example, abelian algebras of dimensions 1 to 3 with seeded
/// twists, four fixed Leibniz algebras and five seeded Yau twists.
pub fn leibniz_corpus() -> Vec<(String, AlgebraSpec)> {
    let mut out = vec![named("paper_L", paper_l())];
    for dim in 1..=3 {
        let spec = random_fixture(dim as u64, dim, FixtureFamily::AbelianWithRandomTwist).expect("dim in range");
        out.push((format!("abelian{dim}_seed{dim}"), spec));
    }
    out.push(named("leibniz_right_unit", leibniz_right_unit()));
    out.push(named("nilpotent_leibniz3", nilpotent_leibniz3()));
    out.push(named("diagonal_leibniz3", diagonal_leibniz3()));
    out.push(named(
        "heisenberg",
        heisenberg().with_kind(AlgebraKind::HomLeibniz).expect("Lie algebras are Leibniz"),
    ));
    for seed in 0..5u64 {
        let dim = 2 + (seed as usize % 2);
        let spec = random_fixture(seed, dim, FixtureFamily::YauTwistOfFixedLeibniz).expect("dim in range");
        out.push((format!("yau{dim}_seed{seed}"), spec));
    }
    out
}

/// `(name, L, A)` pairs for the cup-product suites. The coefficient twists
/// here are idempotent or the identity.
pub fn cup_corpus() -> Vec<(String, AlgebraSpec, AlgebraSpec)> {
    let mut out = vec![
        ("paper".to_string(), paper_l(), paper_a()),
        ("abelian2_jordan/paper_A".to_string(), abelian(2, jordan2()), paper_a()),
        ("abelian1/Q".to_string(), abelian(1, Matrix::identity(1)), rational_unit()),
        ("abelian2/dual".to_string(), abelian(2, Matrix::identity(2)), dual_numbers()),
        ("abelian3/Q".to_string(), abelian(3, Matrix::identity(3)), rational_unit()),
        ("leibniz_right_unit/dual".to_string(), leibniz_right_unit(), dual_numbers()),
        ("nilpotent_leibniz3/Q".to_string(), nilpotent_leibniz3(), rational_unit()),
    ];
    for seed in [1u64, 3, 5] {
        let dim = 2 + (seed as usize % 2);
        let l = random_fixture(seed, dim, FixtureFamily::YauTwistOfFixedLeibniz).expect("dim in range");
        out.push((format!("yau{dim}_seed{seed}/paper_A"), l, paper_a()));
    }
    out
}

/// A verified homomorphism `phi: src → dst` with a shared coefficient algebra.
#[derive(Debug, Clone)]
pub struct HomCase {
    pub name: String,
    pub src: AlgebraSpec,
    pub dst: AlgebraSpec,
    pub phi: LinearMap,
    pub coefficients: AlgebraSpec,
}

/// Homomorphisms for the functoriality suite: the twist and the identity of
/// the `paper_L` example, polynomials in a shared twist between abelian algebras,
/// an injection of abelian algebras, and the defining endomorphism of seeded
/// Yau twists.
pub fn homomorphism_corpus() -> Vec<HomCase> {
    let mut out = vec![
        HomCase {
            name: "alpha on paper_L".into(),
            src: paper_l(),
            dst: paper_l(),
            phi: LinearMap::from_matrix(paper_l().twist().clone()),
            coefficients: paper_a(),
        },
        HomCase {
            name: "identity on paper_L".into(),
            src: paper_l(),
            dst: paper_l(),
            phi: LinearMap::identity(2),
            coefficients: paper_a(),
        },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xab);
    for k in 0..3 {
        let t = random_matrix(&mut rng, 2, -2, 2);
        // p(T) = T² + c₁T + c₀ commutes with T
        let (c1, c0) = (int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)));
        let phi = t
            .mul(&t)
            .expect("square")
            .sub(&t.scale(&-c1))
            .expect("square")
            .sub(&Matrix::identity(2).scale(&-c0))
            .expect("square");
        let l = abelian(2, t);
        out.push(HomCase {
            name: format!("polynomial in the twist, abelian2 #{k}"),
            src: l.clone(),
            dst: l,
            phi: LinearMap::from_matrix(phi),
            coefficients: if k == 0 { dual_numbers() } else { paper_a() },
        });
    }
    out.push(HomCase {
        name: "injection abelian1 -> abelian2".into(),
        src: abelian(1, Matrix::identity(1)),
        dst: abelian(2, Matrix::identity(2)),
        phi: LinearMap::from_matrix(int_matrix(&[&[1], &[-2]])),
        coefficients: dual_numbers(),
    });
    for seed in [1u64, 2, 3] {
        let dim = 2 + (seed as usize % 2);
        let (leibniz, beta) = random_leibniz_with_hom(seed, dim).expect("dim in range");
        let twisted = yau_twist(&leibniz, &beta).expect("verified homomorphism");
        out.push(HomCase {
            name: format!("defining map of yau{dim}_seed{seed}"),
            src: twisted.clone(),
            dst: twisted,
            phi: beta,
            coefficients: paper_a(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_hom_leibniz, check_homomorphism, check_multiplicative};

    #[test]
    fn paper_family_is_exact() {
        assert_eq!(random_fixture(7, 2, FixtureFamily::PaperL).unwrap(), paper_l());
        assert_eq!(random_fixture(7, 3, FixtureFamily::PaperA).unwrap(), paper_a());
    }

    #[test]
    fn corpora_are_valid() {
        let corpus = leibniz_corpus();
        assert!(corpus.len() >= 10);
        for (name, l) in &corpus {
            assert!(check_hom_leibniz(l).passed && check_multiplicative(l).passed, "{name}");
        }
        for (name, _, a) in cup_corpus() {
            assert!(crate::algebra::check_hom_associative(&a).passed, "{name}");
        }
        for case in homomorphism_corpus() {
            assert!(check_homomorphism(&case.phi, &case.src, &case.dst).unwrap().passed, "{}", case.name);
        }
    }

    #[test]
    fn truncated_poly_is_commutative_hom_associative() {
        for c in [1, 2, -3] {
            let a = truncated_poly_scaled(c);
            assert!(crate::algebra::check_commutative(&a).passed);
            assert!(crate::algebra::check_hom_associative(&a).passed);
        }
        assert_eq!(truncated_poly_scaled(2).basis_product(1, 1), ints(&[0, 0, 4]).as_slice());
    }

    #[test]
    fn seeded_fixtures_are_deterministic_and_valid() {
        for seed in 0..12 {
            for dim in 1..=3 {
                for fam in [FixtureFamily::AbelianWithRandomTwist, FixtureFamily::YauTwistOfFixedLeibniz] {
                    let a = random_fixture(seed, dim, fam).unwrap();
                    assert_eq!(a, random_fixture(seed, dim, fam).unwrap());
                    assert!(check_hom_leibniz(&a).passed);
                    assert!(check_multiplicative(&a).passed, "{fam:?} {seed} {dim}");
                }
            }
        }
        assert!(random_fixture(0, 4, FixtureFamily::PaperL).is_err());
    }

    #[test]
    fn sampled_homs_are_homs_and_often_nontrivial() {
        let mut nontrivial = 0;
        for seed in 0..20 {
            for dim in 2..=3 {
                let (l, alpha) = random_leibniz_with_hom(seed, dim).unwrap();
                assert!(check_homomorphism(&alpha, &l, &l).unwrap().passed);
                if alpha.matrix() != &Matrix::identity(dim) {
                    nontrivial += 1;
                }
            }
        }
        assert!(nontrivial >= 30, "only {nontrivial} of 40 samples found a non-identity hom");
    }
}
