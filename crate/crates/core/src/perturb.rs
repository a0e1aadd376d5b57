//! Perturbed Vandermonde constructions: GRS generator matrices (with the
//! point at infinity), symbolic perturbations `G + sum x^{s_ij} E_ij`, the
//! degree-bound MDS certificate, and the three explicit non-GRS families.
//!
//! The certificate: evaluating every k-column determinant of the symbolic
//! matrix gives polynomials over the base field; if all their degrees stay
//! strictly below the degree of the minimal polynomial of `beta`, no
//! determinant can vanish at `beta`, so the perturbed code is MDS.

use std::fmt;

use crate::code::{self, CodeError, GrsVerdict, LinearCode};
use crate::field::{embed, min_poly_degree, Field, FieldElement, FieldError};
use crate::linalg::{
    points_distinct, vandermonde, EvalPoint, Matrix, MatrixError, PolyMatrix, Subsets,
};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    SpecInvalid(String),
    PreconditionViolated(String),
    IndexOutOfRange,
    ResourceLimit { needed: u128, cap: u128 },
    ContextMismatch,
    VerificationFailed(String),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::SpecInvalid(msg) => write!(f, "invalid spec: {msg}"),
            BuildError::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
            BuildError::IndexOutOfRange => write!(f, "perturbation position out of range"),
            BuildError::ResourceLimit { needed, cap } => {
                write!(f, "minor enumeration needs {needed} subsets, cap is {cap}")
            }
            BuildError::ContextMismatch => write!(f, "incompatible field contexts"),
            BuildError::VerificationFailed(msg) => write!(f, "re-verification failed: {msg}"),
        }
    }
}

impl std::error::Error for BuildError {}

impl From<MatrixError> for BuildError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::IndexOutOfRange => BuildError::IndexOutOfRange,
            MatrixError::ContextMismatch => BuildError::ContextMismatch,
            other => BuildError::SpecInvalid(other.to_string()),
        }
    }
}

impl From<FieldError> for BuildError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ContextMismatch | FieldError::NoEmbedding => BuildError::ContextMismatch,
            other => BuildError::SpecInvalid(other.to_string()),
        }
    }
}

impl From<CodeError> for BuildError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::ResourceLimit { needed, cap } => BuildError::ResourceLimit { needed, cap },
            other => BuildError::VerificationFailed(other.to_string()),
        }
    }
}

/// Parameters of a `GRS_{n,k}(alpha, v)` code.
#[derive(Debug, Clone)]
pub struct GrsSpec {
    field: Field,
    alpha: Vec<EvalPoint>,
    v: Vec<FieldElement>,
    k: usize,
}

impl GrsSpec {
    pub fn new(
        field: &Field,
        alpha: Vec<EvalPoint>,
        v: Vec<FieldElement>,
        k: usize,
    ) -> Result<GrsSpec, BuildError> {
        let n = alpha.len();
        if v.len() != n {
            return Err(BuildError::SpecInvalid("alpha and v lengths differ".into()));
        }
        if k == 0 || k >= n {
            return Err(BuildError::SpecInvalid("need 1 <= k < n".into()));
        }
        if !points_distinct(&alpha) {
            return Err(BuildError::SpecInvalid(
                "alpha entries must be distinct".into(),
            ));
        }
        if v.iter().any(|x| x.is_zero()) {
            return Err(BuildError::SpecInvalid("v entries must be nonzero".into()));
        }
        let has_inf = alpha.iter().any(|a| a.is_infinity());
        let limit = field.order().saturating_add(has_inf as u128);
        if n as u128 > limit {
            return Err(BuildError::SpecInvalid(format!(
                "length {n} exceeds the number of available evaluation points"
            )));
        }
        for a in &alpha {
            if let EvalPoint::Finite(x) = a {
                if !x.field().same(field) {
                    return Err(BuildError::ContextMismatch);
                }
            }
        }
        Ok(GrsSpec {
            field: field.clone(),
            alpha,
            v,
            k,
        })
    }

    /// All-ones column multipliers.
    pub fn with_unit_v(
        field: &Field,
        alpha: Vec<EvalPoint>,
        k: usize,
    ) -> Result<GrsSpec, BuildError> {
        let v = vec![field.one(); alpha.len()];
        GrsSpec::new(field, alpha, v, k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[EvalPoint] {
        &self.alpha
    }

    pub fn v(&self) -> &[FieldElement] {
        &self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }
}

/// Generator matrix of `GRS_{n,k}(alpha, v)`: column `v_j (1, a_j, ..^{k-1})^T`
/// for finite points, `v_j (0, .., 0, 1)^T` for infinity.
pub fn grs_generator(spec: &GrsSpec) -> Matrix {
    let vm = vandermonde(&spec.field, &spec.alpha, spec.k).expect("validated points");
    vm.scale_columns(&spec.v).expect("validated lengths")
}

/// A perturbation position: 1-indexed row, 1-indexed column, exponent >= 1.
pub type Position = (usize, usize, u32);

/// `G_{alpha,v} + sum x^{s_ij} E_ij` as a polynomial matrix over the base
/// field. The constant part is exactly the GRS generator.
pub fn symbolic_perturbation(
    spec: &GrsSpec,
    positions: &[Position],
) -> Result<PolyMatrix, BuildError> {
    if positions.is_empty() {
        return Err(BuildError::SpecInvalid(
            "perturbation positions must be nonempty".into(),
        ));
    }
    let g = grs_generator(spec);
    let mut pm = PolyMatrix::from_matrix(&g);
    for &(i, j, s) in positions {
        if i == 0 || j == 0 || i > spec.k || j > spec.n() {
            return Err(BuildError::IndexOutOfRange);
        }
        if s == 0 {
            return Err(BuildError::SpecInvalid(
                "perturbation exponent must be >= 1".into(),
            ));
        }
        let mono = Polynomial::monomial(spec.field.one(), s as usize);
        let cur = pm.at(i - 1, j - 1).add(&mono);
        *pm.at_mut(i - 1, j - 1) = cur;
    }
    Ok(pm)
}

/// Outcome of the degree-bound certificate sweep over all k-column minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Largest determinant degree observed over all k-column subsets.
    pub max_degree: usize,
    /// Whether every determinant polynomial was nonzero.
    pub all_nonzero: bool,
}

/// Computes determinant degrees of every k-column subset of the symbolic
/// matrix.
pub fn mds_certificate(pm: &PolyMatrix, k: usize, cap: u128) -> Result<Certificate, BuildError> {
    assert_eq!(pm.rows(), k, "certificate needs a k-row matrix");
    let n = pm.cols();
    let needed = Subsets::count(n, k);
    if needed > cap {
        return Err(BuildError::ResourceLimit { needed, cap });
    }
    let mut max_degree = 0;
    let mut all_nonzero = true;
    for cols in Subsets::new(n, k) {
        let det = pm.columns_submatrix(&cols)?.det()?;
        match det.degree() {
            Some(d) => max_degree = max_degree.max(d),
            None => all_nonzero = false,
        }
    }
    Ok(Certificate {
        max_degree,
        all_nonzero,
    })
}

/// A perturbation by powers of a fixed extension element.
#[derive(Debug, Clone)]
pub struct Perturbation {
    positions: Vec<Position>,
    beta: FieldElement,
}

impl Perturbation {
    pub fn new(positions: Vec<Position>, beta: FieldElement) -> Result<Perturbation, BuildError> {
        if positions.is_empty() {
            return Err(BuildError::SpecInvalid(
                "perturbation positions must be nonempty".into(),
            ));
        }
        Ok(Perturbation { positions, beta })
    }

    pub fn positions(&self) -> &[Position] {
        &self.positions
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }
}

/// Result of building a perturbed code, with its certificate.
#[derive(Debug, Clone)]
pub struct PerturbedCode {
    pub code: LinearCode,
    pub certificate: Certificate,
    pub beta_degree: usize,
    /// True when `max_degree < beta_degree`: the degree bound proves MDS.
    pub certified_mds: bool,
}

/// Builds the code over `F_{q^b}` generated by `G_{alpha,v} + sum beta^{s} E`,
/// together with the symbolic certificate over `F_q`.
pub fn perturbed_code(
    spec: &GrsSpec,
    pert: &Perturbation,
    cap: u128,
) -> Result<PerturbedCode, BuildError> {
    let ext = pert.beta.field();
    if ext.characteristic() != spec.field.characteristic() {
        return Err(BuildError::ContextMismatch);
    }
    let base_degree = spec.field.extension_degree();
    if ext.extension_degree() % base_degree != 0 {
        return Err(BuildError::ContextMismatch);
    }
    let beta_degree = min_poly_degree(&pert.beta, base_degree)?;
    if beta_degree < 2 {
        return Err(BuildError::PreconditionViolated(
            "beta lies in base field".into(),
        ));
    }
    let symbolic = symbolic_perturbation(spec, &pert.positions)?;
    let certificate = mds_certificate(&symbolic, spec.k, cap)?;
    let mut g = grs_generator(spec).embed_into(ext)?;
    for &(i, j, s) in &pert.positions {
        let term = pert.beta.pow(s as u128);
        let cur = g.at(i - 1, j - 1).add(&term);
        *g.at_mut(i - 1, j - 1) = cur;
    }
    let certified_mds = certificate.all_nonzero && certificate.max_degree < beta_degree;
    let code = LinearCode::new(g).map_err(|e| BuildError::VerificationFailed(e.to_string()))?;
    Ok(PerturbedCode {
        code,
        certificate,
        beta_degree,
        certified_mds,
    })
}

/// Symbolic test for the consecutive-rows Schur condition: with `z_i` the 0/1
/// indicator of perturbed positions in row i, the vector
/// `e = g_j * g_{j+2} - g_{j+1} * g_{j+1}` (treating the perturbation value as
/// a formal symbol) must contain an entry whose linear coefficient is nonzero.
/// Rows are 1-indexed; all position exponents must be 1.
pub fn prop1_condition(
    spec: &GrsSpec,
    positions: &[Position],
    row_j: usize,
) -> Result<bool, BuildError> {
    if row_j == 0 || row_j + 2 > spec.k {
        return Err(BuildError::PreconditionViolated(format!(
            "rows {row_j}..{} must exist in a {}-row generator",
            row_j + 2,
            spec.k
        )));
    }
    if positions.iter().any(|&(_, _, s)| s != 1) {
        return Err(BuildError::PreconditionViolated(
            "all perturbation exponents must be 1".into(),
        ));
    }
    Ok(!linear_coeff_support(spec, positions, row_j)?.is_empty())
}

/// Column indices where the linear coefficient of `e` is nonzero.
fn linear_coeff_support(
    spec: &GrsSpec,
    positions: &[Position],
    row_j: usize,
) -> Result<Vec<usize>, BuildError> {
    let g = grs_generator(spec);
    let n = spec.n();
    let mut z = vec![vec![false; n]; spec.k];
    for &(i, j, _) in positions {
        if i == 0 || j == 0 || i > spec.k || j > n {
            return Err(BuildError::IndexOutOfRange);
        }
        z[i - 1][j - 1] = true;
    }
    let (r0, r1, r2) = (row_j - 1, row_j, row_j + 1);
    let mut support = Vec::new();
    for l in 0..n {
        // Linear coefficient of (g0 + z0 B)(g2 + z2 B) - (g1 + z1 B)^2.
        let mut lin = spec.field.zero();
        if z[r2][l] {
            lin = lin.add(g.at(r0, l));
        }
        if z[r0][l] {
            lin = lin.add(g.at(r2, l));
        }
        if z[r1][l] {
            let two = spec.field.from_u64(2);
            lin = lin.sub(&two.mul(g.at(r1, l)));
        }
        if !lin.is_zero() {
            support.push(l);
        }
    }
    Ok(support)
}

/// The explicit non-GRS families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Exponent-1 perturbations with the consecutive-rows Schur condition;
    /// needs `deg(min poly of beta) > 4k`. May adjust one `v` entry.
    Prop1,
    /// All perturbations in column 1, three consecutive rows present,
    /// `alpha_1` not in {0, 1, inf}.
    FirstColumn,
    /// A single `beta` added at one position of row 1 (column 1 as proven;
    /// the infinity column is covered by the proof's last case).
    SingleE11,
}

#[derive(Debug, Clone)]
pub struct FamilyParams {
    /// Perturbation positions for `Prop1` and `FirstColumn` (the latter
    /// requires column 1 and exponent 1 throughout). Ignored by `SingleE11`.
    pub positions: Vec<Position>,
    pub beta: FieldElement,
    /// Perturbed column for `SingleE11` (1-indexed, default 1).
    pub column: usize,
    /// Allows parameter ranges the propositions do not cover. Results are
    /// then re-verified but not backed by theory.
    pub allow_unproven: bool,
}

#[derive(Debug, Clone)]
pub struct FamilyCode {
    pub code: LinearCode,
    pub certificate: Certificate,
    pub certified_mds: bool,
    /// The v actually used (Prop1 may have adjusted one entry).
    pub v: Vec<FieldElement>,
    /// `dim(C^2)` when the GRS test ran its direct branch.
    pub square_dim: Option<usize>,
}

/// Builds one of the non-GRS MDS families and re-verifies both claims
/// (MDS by minors, non-GRS by square dimension) instead of trusting them.
pub fn construct_family(
    kind: FamilyKind,
    spec: &GrsSpec,
    params: &FamilyParams,
    cap: u128,
) -> Result<FamilyCode, BuildError> {
    let k = spec.k();
    let n = spec.n();
    if !params.allow_unproven && (k < 3 || 2 * k > n - 1) {
        return Err(BuildError::PreconditionViolated(
            "family needs 3 <= k <= (n-1)/2".into(),
        ));
    }
    let base_degree = spec.field.extension_degree();
    let beta_degree = min_poly_degree(&params.beta, base_degree)?;
    if beta_degree < 2 {
        return Err(BuildError::PreconditionViolated(
            "beta lies in base field".into(),
        ));
    }
    match kind {
        FamilyKind::Prop1 => construct_prop1(spec, params, beta_degree, cap),
        FamilyKind::FirstColumn => {
            let rows: Vec<usize> = params.positions.iter().map(|&(i, _, _)| i).collect();
            for &(_, j, s) in &params.positions {
                if j != 1 || s != 1 {
                    return Err(BuildError::PreconditionViolated(
                        "first-column family perturbs only column 1 with exponent 1".into(),
                    ));
                }
            }
            if !has_three_consecutive(&rows) {
                return Err(BuildError::PreconditionViolated(
                    "need three consecutive perturbed rows".into(),
                ));
            }
            match &spec.alpha()[0] {
                EvalPoint::Infinity => {
                    return Err(BuildError::PreconditionViolated(
                        "alpha_1 must not be infinity".into(),
                    ))
                }
                EvalPoint::Finite(a) => {
                    if a.is_zero() || *a == spec.field.one() {
                        return Err(BuildError::PreconditionViolated(
                            "alpha_1 must differ from 0 and 1".into(),
                        ));
                    }
                }
            }
            finish_family(spec, &params.positions, &params.beta, cap)
        }
        FamilyKind::SingleE11 => {
            let col = params.column;
            if col == 0 || col > n {
                return Err(BuildError::IndexOutOfRange);
            }
            match &spec.alpha()[col - 1] {
                EvalPoint::Finite(a) if a.is_zero() => {
                    return Err(BuildError::PreconditionViolated(
                        "perturbed coordinate of alpha must be nonzero".into(),
                    ));
                }
                EvalPoint::Infinity => {} // proof's last case
                EvalPoint::Finite(_) if col == 1 => {}
                EvalPoint::Finite(_) => {
                    if !params.allow_unproven {
                        return Err(BuildError::PreconditionViolated(
                            "columns other than 1 (or the infinity column) are unproven; \
                             pass allow_unproven to build anyway"
                                .into(),
                        ));
                    }
                }
            }
            finish_family(spec, &[(1, col, 1)], &params.beta, cap)
        }
    }
}

fn construct_prop1(
    spec: &GrsSpec,
    params: &FamilyParams,
    beta_degree: usize,
    cap: u128,
) -> Result<FamilyCode, BuildError> {
    let k = spec.k();
    if !params.allow_unproven && beta_degree <= 4 * k {
        return Err(BuildError::PreconditionViolated(format!(
            "minimal polynomial degree {beta_degree} must exceed 4k = {}",
            4 * k
        )));
    }
    let row_j = (1..=k.saturating_sub(2))
        .find(|&j| prop1_condition(spec, &params.positions, j).unwrap_or(false))
        .ok_or_else(|| {
            BuildError::PreconditionViolated(
                "no consecutive row triple satisfies the Schur condition".into(),
            )
        })?;
    // The proposition guarantees non-GRS only for some v; mirror the proof
    // constructively by rescaling the first supporting coordinate on failure.
    let support = linear_coeff_support(spec, &params.positions, row_j)?;
    let s1 = support[0];
    let original = spec.v()[s1].clone();
    let mut candidates = vec![original.clone()];
    if spec.field.order() <= 1 << 20 {
        candidates.extend(
            spec.field
                .iter_elements()
                .filter(|x| !x.is_zero() && *x != original),
        );
    }
    let mut last_err = None;
    for v_s1 in candidates {
        let mut v = spec.v().to_vec();
        v[s1] = v_s1;
        let attempt = GrsSpec::new(&spec.field, spec.alpha().to_vec(), v, k)?;
        match finish_family(&attempt, &params.positions, &params.beta, cap) {
            Ok(done) => return Ok(done),
            Err(e @ BuildError::VerificationFailed(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err
        .unwrap_or_else(|| BuildError::VerificationFailed("no v produced a non-GRS code".into())))
}

fn has_three_consecutive(rows: &[usize]) -> bool {
    rows.iter()
        .any(|&r| rows.contains(&(r + 1)) && rows.contains(&(r + 2)))
}

/// Builds, then re-verifies MDS and non-GRS-ness.
fn finish_family(
    spec: &GrsSpec,
    positions: &[Position],
    beta: &FieldElement,
    cap: u128,
) -> Result<FamilyCode, BuildError> {
    let pert = Perturbation::new(positions.to_vec(), beta.clone())?;
    let built = perturbed_code(spec, &pert, cap)?;
    let (mds, witness) = code::is_mds_capped(&built.code, cap)?;
    if !mds {
        return Err(BuildError::VerificationFailed(format!(
            "constructed code is not MDS, witness {witness:?}"
        )));
    }
    let outcome = code::grs_test_capped(&built.code, cap)?;
    if outcome.verdict != GrsVerdict::NonGrs {
        return Err(BuildError::VerificationFailed(format!(
            "constructed code is not non-GRS (verdict {})",
            outcome.verdict
        )));
    }
    Ok(FamilyCode {
        code: built.code,
        certificate: built.certificate,
        certified_mds: built.certified_mds,
        v: spec.v().to_vec(),
        square_dim: outcome.square_dim,
    })
}

/// Convenience: embeds a base-field element list into an extension.
pub fn embed_all(xs: &[FieldElement], target: &Field) -> Result<Vec<FieldElement>, FieldError> {
    xs.iter().map(|x| embed(x, target)).collect()
}
