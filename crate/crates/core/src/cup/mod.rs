//! The shuffle cup product on equivariant cochains and checkers for the
//! identities it satisfies.
//!
//! `f ∪ g` on `(x₁,…,x_{n+m})` sums, over the terms `c·σ` of `ρ_{n,m}`,
//! `c·μ(f∘(α^{m−1})^⊗n, g∘(α^{n−1})^⊗m)` evaluated on the permuted tuple.

mod audit;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

pub use audit::{audit_worked_example, AuditLine, AuditStatus, WorkedExampleAudit};

use crate::algebra::{check_homomorphism, AlgebraSpec, AxiomReport, LinearMap};
use crate::complexes::{
    coboundary_space, coboundary_with, cohomology_dims_with, expand_tensor, require_coefficients,
    require_leibniz, Cochain, Limits, TensorBasis,
};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar, Subspace};
use crate::shuffles::{pinned_variant, rho, Permutation, RelationVariant};

/// Which degree enters the sign of the Leibniz rule
/// `δ(f∪g) = δf∪g + (−1)^k f∪δg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeibnizSign {
    /// `k = n`, the arity of `f`.
    Arity,
    /// `k = n − 1`.
    ArityMinusOne,
}

impl LeibnizSign {
    pub fn sign(self, n: usize) -> Scalar {
        let k = match self {
            LeibnizSign::Arity => n,
            LeibnizSign::ArityMinusOne => n + 1,
        };
        if k % 2 == 0 {
            int(1)
        } else {
            int(-1)
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            LeibnizSign::Arity => "n",
            LeibnizSign::ArityMinusOne => "n-1",
        }
    }
}

/// Sign conventions in force for a context.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeConvention {
    pub leibniz_sign: LeibnizSign,
    /// Always the product of the two arities, `m·r`.
    pub zinbiel_sign_degrees: &'static str,
}

impl Default for DegreeConvention {
    fn default() -> Self {
        DegreeConvention {
            leibniz_sign: LeibnizSign::Arity,
            zinbiel_sign_degrees: "m*r",
        }
    }
}

/// A Hom-Leibniz algebra `L`, commutative Hom-associative coefficients `A`,
/// and the pinned reading of the shuffle relation.
pub struct CupContext {
    l: AlgebraSpec,
    a: AlgebraSpec,
    variant: RelationVariant,
    convention: DegreeConvention,
    limits: Limits,
    coboundaries: Mutex<BTreeMap<usize, Arc<Subspace>>>,
}

impl fmt::Debug for CupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CupContext")
            .field("l", &self.l)
            .field("a", &self.a)
            .field("variant", &self.variant)
            .field("convention", &self.convention)
            .field("limits", &self.limits)
            .finish()
    }
}

impl CupContext {
    pub fn new(l: AlgebraSpec, a: AlgebraSpec) -> Result<Self> {
        require_leibniz(&l)?;
        require_coefficients(&a)?;
        Ok(CupContext {
            l,
            a,
            variant: pinned_variant()?,
            convention: DegreeConvention::default(),
            limits: Limits::default(),
            coboundaries: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_convention(mut self, convention: DegreeConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn l(&self) -> &AlgebraSpec {
        &self.l
    }

    pub fn a(&self) -> &AlgebraSpec {
        &self.a
    }

    pub fn variant(&self) -> RelationVariant {
        self.variant
    }

    pub fn convention(&self) -> DegreeConvention {
        self.convention
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Sign of the block-swap term, `(−1)^{m·r}` for the pinned reading.
    pub fn zinbiel_sign(&self, m: usize, r: usize) -> Scalar {
        int(self.variant.swap_sign(m, r))
    }

    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        self.check_cochain(f)?;
        coboundary_with(&self.l, &self.a, f, self.limits)
    }

    /// `Bⁿ`, memoized per degree.
    pub fn coboundary_space(&self, n: usize) -> Result<Arc<Subspace>> {
        if let Some(b) = self.coboundaries.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(b));
        }
        let b = Arc::new(coboundary_space(&self.l, &self.a, n, self.limits)?);
        self.coboundaries
            .lock()
            .expect("cache lock")
            .insert(n, Arc::clone(&b));
        Ok(b)
    }

    pub fn is_coboundary(&self, f: &Cochain) -> Result<bool> {
        self.coboundary_space(f.degree())?.contains(f.values())
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.coboundary(f)?.is_zero())
    }

    fn check_cochain(&self, f: &Cochain) -> Result<()> {
        Error::check_dim(self.l.dim(), f.base_dim())?;
        Error::check_dim(self.a.dim(), f.coeff_dim())?;
        if f.degree() == 0 {
            return Err(Error::DegreeZero);
        }
        f.require_equivariant()
    }
}

/// `f∘(α^k)^⊗n` as flat values.
fn precompose_twist_power(l: &AlgebraSpec, f: &Cochain, k: usize) -> Vec<Scalar> {
    if k == 0 {
        return f.values().to_vec();
    }
    let power = l.twist().pow(k);
    let images: Vec<Vec<Scalar>> = (0..l.dim()).map(|i| power.column(i)).collect();
    let da = f.coeff_dim();
    let mut out = Vec::with_capacity(f.values().len());
    for t in f.basis().tuples() {
        let factors: Vec<&[Scalar]> = t.iter().map(|&i| images[i].as_slice()).collect();
        let mut v = vec![Scalar::zero(); da];
        for (s, c) in expand_tensor(l.dim(), &factors) {
            for (o, x) in v.iter_mut().zip(f.value_at(s)) {
                *o += &c * x;
            }
        }
        out.extend(v);
    }
    out
}

/// `α₁^k∘f` as flat values.
fn postcompose_twist_power(a: &AlgebraSpec, f: &Cochain, k: usize) -> Vec<Scalar> {
    if k == 0 {
        return f.values().to_vec();
    }
    let power: Matrix = a.twist().pow(k);
    (0..f.basis().size())
        .flat_map(|i| power.mul_vec(f.value_at(i)))
        .collect()
}

pub fn cup(ctx: &CupContext, f: &Cochain, g: &Cochain) -> Result<Cochain> {
    ctx.check_cochain(f)?;
    ctx.check_cochain(g)?;
    let (n, m) = (f.degree(), g.degree());
    let (l, a) = (&ctx.l, &ctx.a);
    let total = n + m;
    ctx.limits.check(l.dim(), total, a.dim())?;

    let ft = precompose_twist_power(l, f, m - 1);
    let gt = precompose_twist_power(l, g, n - 1);
    debug_assert_eq!(ft, postcompose_twist_power(a, f, m - 1));
    debug_assert_eq!(gt, postcompose_twist_power(a, g, n - 1));

    let terms: Vec<(Scalar, Permutation)> = rho(n, m)?.terms().map(|(c, p)| (c.clone(), p.clone())).collect();
    let out_basis = TensorBasis::new(l.dim(), total);
    let (fb, gb) = (TensorBasis::new(l.dim(), n), TensorBasis::new(l.dim(), m));
    let da = a.dim();
    let per_tuple = ctx.limits.exec.map_range(out_basis.size(), |idx| {
        let t = out_basis.tuple(idx);
        let mut v = vec![Scalar::zero(); da];
        for (c, p) in &terms {
            let u = p.act_on(&t);
            let fi = fb.index_of(&u[..n]);
            let gi = gb.index_of(&u[n..]);
            let fv = &ft[fi * da..(fi + 1) * da];
            let gv = &gt[gi * da..(gi + 1) * da];
            if fv.iter().all(Zero::is_zero) || gv.iter().all(Zero::is_zero) {
                continue;
            }
            for (o, x) in v.iter_mut().zip(a.mul(fv, gv)) {
                *o += c * x;
            }
        }
        v
    });
    let values = per_tuple.into_iter().flatten().collect();
    Ok(Cochain::from_parts(total, l.dim(), da, values, true))
}

/// `f ↦ α₁∘f`.
pub fn twist_cochain(ctx: &CupContext, f: &Cochain) -> Result<Cochain> {
    ctx.check_cochain(f)?;
    let values = postcompose_twist_power(&ctx.a, f, 1);
    Ok(Cochain::from_parts(f.degree(), f.base_dim(), f.coeff_dim(), values, true))
}

fn compare(identity: &'static str, lhs: &Cochain, rhs: &Cochain) -> AxiomReport {
    let basis = lhs.basis();
    for i in 0..basis.size() {
        if lhs.value_at(i) != rhs.value_at(i) {
            return AxiomReport::fail(identity, &basis.tuple(i), lhs.value_at(i).to_vec(), rhs.value_at(i).to_vec());
        }
    }
    AxiomReport::pass()
}

/// `δ(f∪g) = δf∪g + (−1)^k f∪δg` with `k` from the context's convention.
pub fn check_leibniz_rule(ctx: &CupContext, f: &Cochain, g: &Cochain) -> Result<AxiomReport> {
    check_leibniz_rule_signed(ctx, f, g, ctx.convention.leibniz_sign)
}

pub fn check_leibniz_rule_signed(ctx: &CupContext, f: &Cochain, g: &Cochain, sign: LeibnizSign) -> Result<AxiomReport> {
    let lhs = ctx.coboundary(&cup(ctx, f, g)?)?;
    let first = cup(ctx, &ctx.coboundary(f)?, g)?;
    let second = cup(ctx, f, &ctx.coboundary(g)?)?;
    let rhs = first.add(&second.scale(&sign.sign(f.degree())))?;
    Ok(compare("coboundary of a cup product", &lhs, &rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignValidation {
    pub cases: usize,
    pub arity_passes: usize,
    pub fallback_passes: usize,
    /// The convention that held on every case, preferring `Arity`.
    pub validated: Option<LeibnizSign>,
}

/// Tries `(−1)^n` on every case; only if that fails somewhere is `(−1)^{n−1}`
/// tried, and the outcome says which one held.
pub fn validate_leibniz_sign<'a>(
    cases: impl IntoIterator<Item = (&'a CupContext, &'a Cochain, &'a Cochain)>,
) -> Result<SignValidation> {
    let cases: Vec<_> = cases.into_iter().collect();
    let mut arity_passes = 0;
    for (ctx, f, g) in &cases {
        if check_leibniz_rule_signed(ctx, f, g, LeibnizSign::Arity)?.passed {
            arity_passes += 1;
        }
    }
    let mut fallback_passes = 0;
    let validated = if arity_passes == cases.len() {
        Some(LeibnizSign::Arity)
    } else {
        for (ctx, f, g) in &cases {
            if check_leibniz_rule_signed(ctx, f, g, LeibnizSign::ArityMinusOne)?.passed {
                fallback_passes += 1;
            }
        }
        (fallback_passes == cases.len()).then_some(LeibnizSign::ArityMinusOne)
    };
    Ok(SignValidation {
        cases: cases.len(),
        arity_passes,
        fallback_passes,
        validated,
    })
}

/// `φ*f = f∘φ^⊗n`, moving a cochain on `dst.l()` to one on `src.l()`.
pub fn pullback_cochain(src: &CupContext, dst: &CupContext, phi: &LinearMap, f: &Cochain) -> Result<Cochain> {
    if src.a != dst.a {
        return Err(Error::Invalid("pullback needs the same coefficient algebra on both sides".into()));
    }
    dst.check_cochain(f)?;
    check_homomorphism(phi, &src.l, &dst.l)?.into_result("homomorphism")?;
    let images: Vec<Vec<Scalar>> = (0..src.l.dim()).map(|i| phi.matrix().column(i)).collect();
    let basis = TensorBasis::new(src.l.dim(), f.degree());
    let da = f.coeff_dim();
    let mut values = Vec::with_capacity(basis.size() * da);
    for t in basis.tuples() {
        let factors: Vec<&[Scalar]> = t.iter().map(|&i| images[i].as_slice()).collect();
        let mut v = vec![Scalar::zero(); da];
        for (s, c) in expand_tensor(dst.l.dim(), &factors) {
            for (o, x) in v.iter_mut().zip(f.value_at(s)) {
                *o += &c * x;
            }
        }
        values.extend(v);
    }
    Cochain::equivariant(&src.l, &src.a, f.degree(), values)
}

/// `φ*(f∪g) = φ*f ∪ φ*g`.
pub fn check_functoriality(
    src: &CupContext,
    dst: &CupContext,
    phi: &LinearMap,
    f: &Cochain,
    g: &Cochain,
) -> Result<AxiomReport> {
    let lhs = pullback_cochain(src, dst, phi, &cup(dst, f, g)?)?;
    let rhs = cup(src, &pullback_cochain(src, dst, phi, f)?, &pullback_cochain(src, dst, phi, g)?)?;
    Ok(compare("pullback of a cup product", &lhs, &rhs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielReport {
    pub cochain_level: bool,
    pub cohomology_level: bool,
    /// `α₁(f∪g)∪h − f∪α₁(g∪h) − (−1)^{mr} f∪α₁(h∪g)`.
    pub defect: Cochain,
}

pub fn zinbiel_defect(ctx: &CupContext, f: &Cochain, g: &Cochain, h: &Cochain) -> Result<Cochain> {
    let (m, r) = (g.degree(), h.degree());
    let left = cup(ctx, &twist_cochain(ctx, &cup(ctx, f, g)?)?, h)?;
    let mid = cup(ctx, f, &twist_cochain(ctx, &cup(ctx, g, h)?)?)?;
    let right = cup(ctx, f, &twist_cochain(ctx, &cup(ctx, h, g)?)?)?;
    left.sub(&mid)?.sub(&right.scale(&ctx.zinbiel_sign(m, r)))
}

/// Graded Hom-Zinbiel relation for three cocycles, on cochains and on classes.
pub fn check_graded_zinbiel(ctx: &CupContext, f: &Cochain, g: &Cochain, h: &Cochain) -> Result<ZinbielReport> {
    for c in [f, g, h] {
        if !ctx.is_cocycle(c)? {
            return Err(Error::Invalid(format!("degree {} input is not a cocycle", c.degree())));
        }
    }
    let defect = zinbiel_defect(ctx, f, g, h)?;
    let cochain_level = defect.is_zero();
    let cohomology_level = cochain_level || ctx.is_coboundary(&defect)?;
    Ok(ZinbielReport {
        cochain_level,
        cohomology_level,
        defect,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareZeroEntry {
    pub degree: usize,
    pub class_count_checked: usize,
    pub all_squares_zero: bool,
    /// Per representative, whether `[e∪e] = 0`.
    pub squares_zero: Vec<bool>,
}

/// For each degree up to `max_degree`, whether every representative class
/// squares to zero in `HL^{2n}`.
pub fn square_zero_signature(ctx: &CupContext, max_degree: usize) -> Result<Vec<SquareZeroEntry>> {
    let report = cohomology_dims_with(&ctx.l, &ctx.a, max_degree, ctx.limits)?;
    report
        .degrees
        .iter()
        .map(|d| {
            let squares_zero = d
                .representatives
                .iter()
                .map(|e| ctx.is_coboundary(&cup(ctx, e, e)?))
                .collect::<Result<Vec<bool>>>()?;
            Ok(SquareZeroEntry {
                degree: d.degree,
                class_count_checked: squares_zero.len(),
                all_squares_zero: squares_zero.iter().all(|&b| b),
                squares_zero,
            })
        })
        .collect()
}

/// Coordinates of the class of a cocycle in the basis given by
/// `representatives`, modulo `coboundaries`.
pub fn class_coordinates(
    coboundaries: &Subspace,
    representatives: &[Cochain],
    cocycle: &Cochain,
) -> Result<Option<Vec<Scalar>>> {
    let mut vectors: Vec<Vec<Scalar>> = representatives.iter().map(|r| r.values().to_vec()).collect();
    vectors.extend(coboundaries.basis().iter().cloned());
    let basis = Subspace::new(cocycle.values().len(), vectors)?;
    Ok(basis
        .coordinates(cocycle.values())?
        .map(|c| c[..representatives.len()].to_vec()))
}

/// A basis-cocycle triple on which the graded Hom-Zinbiel relation was tested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielCase {
    /// Degrees `(n, m, r)` of `(f, g, h)`.
    pub degrees: (usize, usize, usize),
    /// Positions of `f, g, h` in the cocycle bases of their degrees.
    pub indices: (usize, usize, usize),
    pub cochain_level: bool,
    pub cohomology_level: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZinbielSummary {
    pub max_total: usize,
    pub cases: Vec<ZinbielCase>,
}

impl ZinbielSummary {
    pub fn cochain_level_passes(&self) -> usize {
        self.cases.iter().filter(|c| c.cochain_level).count()
    }

    pub fn cohomology_level_passes(&self) -> usize {
        self.cases.iter().filter(|c| c.cohomology_level).count()
    }

    pub fn all_cohomology_level(&self) -> bool {
        self.cases.iter().all(|c| c.cohomology_level)
    }
}

/// Checks the graded Hom-Zinbiel relation on every triple of basis cocycles
/// with `n + m + r ≤ max_total`.
pub fn zinbiel_basis_triples(ctx: &CupContext, max_total: usize) -> Result<ZinbielSummary> {
    if max_total < 3 {
        return Ok(ZinbielSummary { max_total, cases: vec![] });
    }
    let report = cohomology_dims_with(&ctx.l, &ctx.a, max_total - 2, ctx.limits)?;
    let bases: Vec<Vec<Cochain>> = report
        .degrees
        .iter()
        .map(|d| {
            d.cocycles
                .basis()
                .iter()
                .map(|v| Cochain::equivariant(&ctx.l, &ctx.a, d.degree, v.clone()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut jobs = Vec::new();
    for n in 1..=max_total - 2 {
        for m in 1..=max_total - 1 - n {
            for r in 1..=max_total - n - m {
                for i in 0..bases[n - 1].len() {
                    for j in 0..bases[m - 1].len() {
                        for k in 0..bases[r - 1].len() {
                            jobs.push(((n, m, r), (i, j, k)));
                        }
                    }
                }
            }
        }
    }
    let cases = ctx.limits.exec.map_slice(&jobs, |&((n, m, r), (i, j, k))| {
        let defect = zinbiel_defect(ctx, &bases[n - 1][i], &bases[m - 1][j], &bases[r - 1][k])?;
        let cochain_level = defect.is_zero();
        Ok(ZinbielCase {
            degrees: (n, m, r),
            indices: (i, j, k),
            cochain_level,
            cohomology_level: cochain_level || ctx.is_coboundary(&defect)?,
        })
    });
    Ok(ZinbielSummary {
        max_total,
        cases: cases.into_iter().collect::<Result<_>>()?,
    })
}

pub(crate) fn unit_vector(dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::fixtures::{abelian, dual_numbers, paper_a, paper_l, rational_unit};
    use crate::complexes::random_equivariant;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn paper_ctx() -> CupContext {
        CupContext::new(paper_l(), paper_a()).unwrap()
    }

    fn sample_f(ctx: &CupContext) -> Cochain {
        Cochain::equivariant(ctx.l(), ctx.a(), 1, v(&[0, 0, -1, 1])).unwrap()
    }

    #[test]
    fn context_pins_the_certified_reading() {
        let ctx = paper_ctx();
        assert_eq!(ctx.variant(), RelationVariant::TauAfterRho);
        assert_eq!(ctx.zinbiel_sign(1, 1), int(-1));
        assert_eq!(ctx.zinbiel_sign(2, 1), int(1));
    }

    #[test]
    fn paper_square() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        let ff = cup(&ctx, &f, &f).unwrap();
        assert_eq!(ff.value(&[0, 0]), v(&[0, 0]).as_slice());
        assert_eq!(ff.value(&[0, 1]), v(&[0, 0]).as_slice());
        assert_eq!(ff.value(&[1, 0]), v(&[0, 0]).as_slice());
        // μ(a₂−a₁, a₂−a₁) = a₁ − a₂
        assert_eq!(ff.value(&[1, 1]), v(&[1, -1]).as_slice());
        assert!(ff.is_equivariant());
        assert_eq!(Cochain::new(ctx.l(), ctx.a(), 2, ff.values().to_vec()).unwrap().is_equivariant(), true);
    }

    #[test]
    fn cup_with_zero_is_zero() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        let z = Cochain::zero(ctx.l(), ctx.a(), 2);
        assert!(cup(&ctx, &f, &z).unwrap().is_zero());
        assert!(cup(&ctx, &z, &f).unwrap().is_zero());
    }

    #[test]
    fn twist_examples() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        assert_eq!(twist_cochain(&ctx, &f).unwrap(), f);
        let ab = CupContext::new(abelian(2, Matrix::identity(2)), rational_unit()).unwrap();
        let g = Cochain::new(ab.l(), ab.a(), 1, v(&[3, -2])).unwrap();
        assert_eq!(twist_cochain(&ab, &g).unwrap(), g);
    }

    #[test]
    fn rejects_non_equivariant_and_degree_zero() {
        let ctx = paper_ctx();
        let bad = Cochain::new(ctx.l(), ctx.a(), 1, v(&[1, 0, 0, 0])).unwrap();
        let f = sample_f(&ctx);
        assert!(matches!(cup(&ctx, &bad, &f), Err(Error::NotEquivariant { .. })));
        assert!(twist_cochain(&ctx, &bad).is_err());
    }

    #[test]
    fn leibniz_rule_on_paper_and_dual_numbers() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        assert!(check_leibniz_rule(&ctx, &f, &f).unwrap().passed);
        let twist = Matrix::from_rows(vec![v(&[1, 1]), v(&[0, 1])]).unwrap();
        let l = crate::algebra::fixtures::paper_l().with_twist(twist).unwrap();
        let ctx = CupContext::new(l, dual_numbers()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, m) in [(1, 1), (1, 2), (2, 1)] {
            let f = random_equivariant(ctx.l(), ctx.a(), n, &mut rng).unwrap();
            let g = random_equivariant(ctx.l(), ctx.a(), m, &mut rng).unwrap();
            assert!(check_leibniz_rule(&ctx, &f, &g).unwrap().passed, "({n},{m})");
        }
    }

    #[test]
    fn pullback_along_twist_is_twist() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        let alpha = LinearMap::from_matrix(ctx.l().twist().clone());
        let pulled = pullback_cochain(&ctx, &ctx, &alpha, &f).unwrap();
        assert_eq!(pulled, twist_cochain(&ctx, &f).unwrap());
        assert!(check_functoriality(&ctx, &ctx, &alpha, &f, &f).unwrap().passed);
        let id = LinearMap::identity(2);
        assert_eq!(pullback_cochain(&ctx, &ctx, &id, &f).unwrap(), f);
    }

    #[test]
    fn graded_zinbiel_on_paper_cocycle() {
        let ctx = paper_ctx();
        let f = sample_f(&ctx);
        let report = check_graded_zinbiel(&ctx, &f, &f, &f).unwrap();
        assert!(report.cohomology_level);
        let z = Cochain::zero(ctx.l(), ctx.a(), 1);
        let zr = check_graded_zinbiel(&ctx, &z, &f, &f).unwrap();
        assert!(zr.cochain_level && zr.cohomology_level);
    }

    #[test]
    fn square_zero_signature_worked_example() {
        let ctx = paper_ctx();
        let sig = square_zero_signature(&ctx, 1).unwrap();
        assert_eq!(sig.len(), 1);
        assert_eq!(sig[0].class_count_checked, 1);
        // the degree-1 class is spanned by the sample cocycle, whose square is not a coboundary
        assert!(!sig[0].all_squares_zero);
    }

    #[test]
    fn class_coordinates_of_representative() {
        let ctx = paper_ctx();
        let r = cohomology_dims_with(ctx.l(), ctx.a(), 1, ctx.limits()).unwrap();
        let d = &r.degrees[0];
        let f = sample_f(&ctx);
        let coords = class_coordinates(&d.coboundaries, &d.representatives, &f).unwrap().unwrap();
        assert_eq!(coords.len(), 1);
        assert!(!coords[0].is_zero());
        let _ = unit_vector(2, 0);
    }
}
