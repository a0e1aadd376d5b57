//! Generalized twisted Reed-Solomon codes.
//!
//! A GTRS code evaluates twisted polynomials
//! `f(x) = sum f_i x^i + sum eta_j f_{h_j} x^{k-1+t_j}` at distinct finite
//! points. Its canonical generator factors as `(I_k | M) V_alpha D_v` with
//! `M` the k x (n-k) twist matrix holding `eta_j` at `(h_j, t_j - 1)`.
//! Recognition inverts that factorization: if the first k columns of
//! `G (V_alpha D_v)^{-1}` form an invertible block `A`, then `A^{-1} G` is a
//! canonical GTRS generator. The test is sufficient only - a failure is
//! reported as "not recognized", never as "not GTRS".

use std::fmt;

use crate::field::{Field, FieldElement};
use crate::linalg::{vandermonde_full, Matrix, MatrixError, Subsets};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GtrsError {
    SpecInvalid(String),
    DimensionMismatch,
    DuplicatePoints,
    PreconditionViolated(String),
}

impl fmt::Display for GtrsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GtrsError::SpecInvalid(msg) => write!(f, "invalid GTRS spec: {msg}"),
            GtrsError::DimensionMismatch => write!(f, "dimension mismatch"),
            GtrsError::DuplicatePoints => write!(f, "evaluation points are not distinct"),
            GtrsError::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl std::error::Error for GtrsError {}

impl From<MatrixError> for GtrsError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::DuplicatePoints => GtrsError::DuplicatePoints,
            MatrixError::DimensionMismatch => GtrsError::DimensionMismatch,
            other => GtrsError::SpecInvalid(other.to_string()),
        }
    }
}

/// One twist: coefficient `f_h` feeds the monomial `eta * x^{k-1+t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hook {
    pub h: usize,
    pub t: usize,
    pub eta: FieldElement,
}

/// Parameters of a `GTRS_{n,k,l}[alpha, t, h, eta, v]` code. Evaluation
/// points are finite and distinct, multipliers nonzero, hook positions
/// `(h, t)` pairwise distinct with `0 <= h < k` and `1 <= t <= n-k`.
#[derive(Debug, Clone)]
pub struct GtrsSpec {
    field: Field,
    alpha: Vec<FieldElement>,
    v: Vec<FieldElement>,
    k: usize,
    hooks: Vec<Hook>,
}

impl GtrsSpec {
    pub fn new(
        field: &Field,
        alpha: Vec<FieldElement>,
        v: Vec<FieldElement>,
        k: usize,
        hooks: Vec<Hook>,
    ) -> Result<GtrsSpec, GtrsError> {
        let n = alpha.len();
        if v.len() != n {
            return Err(GtrsError::SpecInvalid("alpha and v lengths differ".into()));
        }
        if k == 0 || k >= n {
            return Err(GtrsError::SpecInvalid("need 1 <= k < n".into()));
        }
        for (i, a) in alpha.iter().enumerate() {
            if !a.field().same(field) {
                return Err(GtrsError::SpecInvalid("alpha entry in wrong field".into()));
            }
            if alpha[..i].contains(a) {
                return Err(GtrsError::DuplicatePoints);
            }
        }
        if v.iter().any(|x| x.is_zero()) {
            return Err(GtrsError::SpecInvalid("v entries must be nonzero".into()));
        }
        for (i, hook) in hooks.iter().enumerate() {
            if hook.h >= k {
                return Err(GtrsError::SpecInvalid(format!(
                    "hook h={} out of range",
                    hook.h
                )));
            }
            if hook.t == 0 || hook.t > n - k {
                return Err(GtrsError::SpecInvalid(format!(
                    "hook t={} out of range",
                    hook.t
                )));
            }
            if hook.eta.is_zero() {
                return Err(GtrsError::SpecInvalid("hook eta must be nonzero".into()));
            }
            if hooks[..i].iter().any(|o| o.h == hook.h && o.t == hook.t) {
                return Err(GtrsError::SpecInvalid(format!(
                    "duplicate hook position ({}, {})",
                    hook.h, hook.t
                )));
            }
        }
        debug_assert!(hooks.len() <= k * (n - k));
        Ok(GtrsSpec {
            field: field.clone(),
            alpha,
            v,
            k,
            hooks,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alpha(&self) -> &[FieldElement] {
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

    /// Hooks in canonical row-major order over the twist matrix.
    pub fn hooks(&self) -> &[Hook] {
        &self.hooks
    }

    /// Number of twists `l`.
    pub fn num_hooks(&self) -> usize {
        self.hooks.len()
    }
}

/// The k x (n-k) twist matrix: `eta_j` at `(h_j, t_j - 1)`, zero elsewhere.
pub fn twist_matrix(spec: &GtrsSpec) -> Matrix {
    let mut m = Matrix::zeros(&spec.field, spec.k, spec.n() - spec.k);
    for hook in &spec.hooks {
        *m.at_mut(hook.h, hook.t - 1) = hook.eta.clone();
    }
    m
}

/// Reads a twist matrix back into a spec; hooks come out in row-major order.
pub fn spec_from_twist(
    m: &Matrix,
    alpha: &[FieldElement],
    v: &[FieldElement],
) -> Result<GtrsSpec, GtrsError> {
    let k = m.rows();
    let n = alpha.len();
    if m.cols() != n - k {
        return Err(GtrsError::DimensionMismatch);
    }
    let mut hooks = Vec::new();
    for h in 0..k {
        for t0 in 0..m.cols() {
            let eta = m.at(h, t0);
            if !eta.is_zero() {
                hooks.push(Hook {
                    h,
                    t: t0 + 1,
                    eta: eta.clone(),
                });
            }
        }
    }
    GtrsSpec::new(m.field(), alpha.to_vec(), v.to_vec(), k, hooks)
}

/// Canonical generator `(I_k | M) V_alpha D_v`; row `l` is the evaluation of
/// `x^l + sum_{h_j = l} eta_j x^{k-1+t_j}`, scaled columnwise by `v`.
pub fn gtrs_generator(spec: &GtrsSpec) -> Matrix {
    let k = spec.k;
    let n = spec.n();
    let field = &spec.field;
    let mut g = Matrix::zeros(field, k, n);
    for (j, (a, vj)) in spec.alpha.iter().zip(&spec.v).enumerate() {
        // Powers 1, a, ..., a^{n-1}.
        let mut powers = Vec::with_capacity(n);
        let mut acc = field.one();
        for _ in 0..n {
            powers.push(acc.clone());
            acc = acc.mul(a);
        }
        for l in 0..k {
            let mut val = powers[l].clone();
            for hook in &spec.hooks {
                if hook.h == l {
                    val = val.add(&hook.eta.mul(&powers[k - 1 + hook.t]));
                }
            }
            *g.at_mut(l, j) = val.mul(vj);
        }
    }
    g
}

/// Successful recognition: the factorization data and the canonical
/// generator `transform * G = (I | M) V D_v`.
#[derive(Debug, Clone)]
pub struct Recognition {
    pub spec: GtrsSpec,
    /// First k columns of `G (V D_v)^{-1}`.
    pub a: Matrix,
    /// Remaining n-k columns.
    pub b: Matrix,
    /// `A^{-1}`; left-multiplying G by this yields the canonical generator.
    pub transform: Matrix,
    /// `A^{-1} G`.
    pub canonical: Matrix,
}

/// First-k-columns GTRS recognition against a fixed `(alpha, v)`.
///
/// Returns `None` when the leading block is singular; that is not a proof
/// of non-GTRS-ness.
pub fn recognize(
    g: &Matrix,
    alpha: &[FieldElement],
    v: &[FieldElement],
) -> Result<Option<Recognition>, GtrsError> {
    let k = g.rows();
    let n = g.cols();
    if alpha.len() != n || v.len() != n {
        return Err(GtrsError::DimensionMismatch);
    }
    if k == 0 || k >= n {
        return Err(GtrsError::SpecInvalid("need 1 <= k < n".into()));
    }
    if v.iter().any(|x| x.is_zero()) {
        return Err(GtrsError::SpecInvalid("v entries must be nonzero".into()));
    }
    let field = g.field();
    let vm = vandermonde_full(field, alpha)?;
    let vd = vm.scale_columns(v)?;
    let vd_inv = vd.inverse().map_err(|e| match e {
        MatrixError::Singular => GtrsError::DuplicatePoints,
        other => GtrsError::from(other),
    })?;
    let ab = g.matmul(&vd_inv)?;
    let a = ab.columns_submatrix(&(0..k).collect::<Vec<_>>())?;
    let b = ab.columns_submatrix(&(k..n).collect::<Vec<_>>())?;
    let transform = match a.inverse() {
        Ok(inv) => inv,
        Err(MatrixError::Singular) => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let twist = transform.matmul(&b)?;
    let spec = spec_from_twist(&twist, alpha, v)?;
    let canonical = transform.matmul(g)?;
    Ok(Some(Recognition {
        spec,
        a,
        b,
        transform,
        canonical,
    }))
}

/// Retries recognition over all k-column anchors: for each k-subset of
/// coordinates, the code's columns are permuted to bring that subset first
/// (rest in original order) while `(alpha, v)` stay fixed.
///
/// This goes beyond the first-k-columns statement. Note that permuting `G`,
/// `alpha` and `v` simultaneously leaves `G (V D_v)^{-1}` unchanged, so only
/// a relative reordering of code coordinates against the evaluation points
/// can help. A hit therefore certifies that the COLUMN-PERMUTED code is GTRS
/// with respect to the given `(alpha, v)`.
pub fn recognize_exhaustive(
    g: &Matrix,
    alpha: &[FieldElement],
    v: &[FieldElement],
) -> Result<Option<(Vec<usize>, Recognition)>, GtrsError> {
    let k = g.rows();
    let n = g.cols();
    for anchor in Subsets::new(n, k) {
        let mut order = anchor.clone();
        order.extend((0..n).filter(|c| !anchor.contains(c)));
        let perm_g = permute_columns(g, &order);
        if let Some(rec) = recognize(&perm_g, alpha, v)? {
            return Ok(Some((order, rec)));
        }
    }
    Ok(None)
}

fn permute_columns(m: &Matrix, order: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(m.field(), m.rows(), order.len());
    for i in 0..m.rows() {
        for (jj, &j) in order.iter().enumerate() {
            *out.at_mut(i, jj) = m.at(i, j).clone();
        }
    }
    out
}

/// Canonical generator of the one-dimensional dual of `GRS_{n,n-1}(alpha, u)`:
/// `w_l = (u_l * prod_{m != l} (alpha_l - alpha_m))^{-1}`.
pub fn dual_grs_weight(
    alpha: &[FieldElement],
    u: &[FieldElement],
) -> Result<Vec<FieldElement>, GtrsError> {
    let n = alpha.len();
    if u.len() != n {
        return Err(GtrsError::DimensionMismatch);
    }
    let mut w = Vec::with_capacity(n);
    for l in 0..n {
        let mut denom = u[l].clone();
        for m in 0..n {
            if m == l {
                continue;
            }
            let diff = alpha[l].sub(&alpha[m]);
            if diff.is_zero() {
                return Err(GtrsError::DuplicatePoints);
            }
            denom = denom.mul(&diff);
        }
        w.push(
            denom
                .inv()
                .map_err(|_| GtrsError::SpecInvalid("u entries must be nonzero".into()))?,
        );
    }
    Ok(w)
}

/// Anti-diagonal parity-check test: computes
/// `(1; alpha; ...; alpha^{k-1}) D_w G^T` and reports whether it is
/// anti-diagonal with nonzero anti-diagonal entries.
///
/// `w` spans the dual of `GRS_{n,n-1}(alpha, alpha^k * v)` when all points
/// are nonzero; when some `alpha_i = 0` it is built on the punctured points
/// and extended by a zero in coordinate i.
pub fn antidiag_check(
    g: &Matrix,
    alpha: &[FieldElement],
    v: &[FieldElement],
) -> Result<bool, GtrsError> {
    let k = g.rows();
    let n = g.cols();
    if alpha.len() != n || v.len() != n {
        return Err(GtrsError::DimensionMismatch);
    }
    let field = g.field();
    let zero_positions: Vec<usize> = (0..n).filter(|&i| alpha[i].is_zero()).collect();
    let w = match zero_positions.as_slice() {
        [] => {
            let u: Vec<FieldElement> = alpha
                .iter()
                .zip(v)
                .map(|(a, vl)| a.pow(k as u128).mul(vl))
                .collect();
            dual_grs_weight(alpha, &u)?
        }
        [i0] => {
            let alpha_p: Vec<FieldElement> = alpha
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != *i0)
                .map(|(_, a)| a.clone())
                .collect();
            let u_p: Vec<FieldElement> = alpha_p
                .iter()
                .zip(
                    v.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != *i0)
                        .map(|(_, x)| x),
                )
                .map(|(a, vl)| a.pow(k as u128).mul(vl))
                .collect();
            let mut w_p = dual_grs_weight(&alpha_p, &u_p)?;
            w_p.insert(*i0, field.zero());
            w_p
        }
        _ => return Err(GtrsError::DuplicatePoints),
    };
    // H = (1; alpha; ...; alpha^{k-1}) D_w, product with G^T.
    let mut product = Matrix::zeros(field, k, k);
    for j in 0..k {
        for i in 0..k {
            let mut acc = field.zero();
            for l in 0..n {
                let term = w[l].mul(&alpha[l].pow(j as u128)).mul(g.at(i, l));
                acc = acc.add(&term);
            }
            *product.at_mut(j, i) = acc;
        }
    }
    for j in 0..k {
        for i in 0..k {
            let on_antidiag = j + i == k - 1;
            let is_zero = product.at(j, i).is_zero();
            if on_antidiag == is_zero {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Recognizes a single-position perturbed code (`G + beta E_11`, no infinity
/// in alpha) as GTRS with the same `(alpha, v)`. The leading block here is
/// upper triangular; its one non-unit pivot is `1 + v_1^{-1} m_0 beta` with
/// `m_0` the constant coefficient of the first Lagrange basis polynomial.
/// That pivot cannot vanish: either `m_0 = 0`, or `beta` lies outside the
/// base field while `-(v_1 m_0^{-1})` lies inside it. So recognition always
/// succeeds on valid inputs.
pub fn recognize_e11_family(
    g: &Matrix,
    alpha: &[FieldElement],
    v: &[FieldElement],
) -> Result<Recognition, GtrsError> {
    recognize(g, alpha, v)?.ok_or_else(|| {
        GtrsError::PreconditionViolated(
            "leading block singular; input is not a single-position perturbed code over these points"
                .into(),
        )
    })
}
