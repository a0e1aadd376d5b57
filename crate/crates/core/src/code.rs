//! Linear codes as generator matrices: MDS verification by minor enumeration,
//! dual codes, Schur squares, and the square-dimension GRS criterion.

use std::fmt;

use crate::field::{Field, FieldElement};
use crate::gtrs::{self, GtrsSpec};
use crate::linalg::{Matrix, MatrixError, Subsets};
use crate::DEFAULT_MINOR_CAP;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    NotFullRank,
    LengthMismatch,
    ResourceLimit { needed: u128, cap: u128 },
    NotMds,
    Matrix(MatrixError),
    Recognition(gtrs::GtrsError),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::NotFullRank => write!(f, "generator not full rank"),
            CodeError::LengthMismatch => write!(f, "vector lengths differ"),
            CodeError::ResourceLimit { needed, cap } => {
                write!(f, "minor enumeration needs {needed} subsets, cap is {cap}")
            }
            CodeError::NotMds => write!(f, "code is not MDS"),
            CodeError::Matrix(e) => write!(f, "{e}"),
            CodeError::Recognition(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CodeError {}

impl From<MatrixError> for CodeError {
    fn from(e: MatrixError) -> Self {
        CodeError::Matrix(e)
    }
}

impl From<gtrs::GtrsError> for CodeError {
    fn from(e: gtrs::GtrsError) -> Self {
        CodeError::Recognition(e)
    }
}

/// A linear `[n, k]` code, stored as a full-row-rank generator matrix.
/// The zero code (`k = 0`) is allowed so that duals are closed.
#[derive(Debug, Clone)]
pub struct LinearCode {
    generator: Matrix,
}

impl LinearCode {
    pub fn new(generator: Matrix) -> Result<LinearCode, CodeError> {
        if generator.rows() > generator.cols() || generator.rank() != generator.rows() {
            return Err(CodeError::NotFullRank);
        }
        Ok(LinearCode { generator })
    }

    /// The zero code of length `n`.
    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            generator: Matrix::zeros(field, 0, n),
        }
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// Codes are equal iff their generators have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.length() == other.length()
            && self.dimension() == other.dimension()
            && self.generator.rref() == other.generator.rref()
    }

    /// Dual code: kernel of the generator. Dimensions add up to `n`.
    pub fn dual(&self) -> LinearCode {
        if self.dimension() == 0 {
            return LinearCode {
                generator: Matrix::identity(self.field(), self.length()),
            };
        }
        LinearCode {
            generator: self.generator.kernel_basis(),
        }
    }
}

/// Componentwise (Schur) product of two vectors.
pub fn schur_product(
    x: &[FieldElement],
    y: &[FieldElement],
) -> Result<Vec<FieldElement>, CodeError> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch);
    }
    Ok(x.iter().zip(y).map(|(a, b)| a.mul(b)).collect())
}

/// The square code `C^2`, generated by all pairwise products of generator
/// rows; the result carries a canonical (rref) generator.
pub fn schur_square(code: &LinearCode) -> LinearCode {
    let g = code.generator();
    let k = g.rows();
    let n = g.cols();
    let field = code.field().clone();
    if k == 0 {
        return LinearCode::zero(&field, n);
    }
    let mut rows = Vec::with_capacity(k * (k + 1) / 2);
    for i in 0..k {
        for j in i..k {
            let prod = schur_product(g.row(i), g.row(j)).expect("equal lengths");
            rows.extend(prod);
        }
    }
    let span = Matrix::new(&field, k * (k + 1) / 2, n, rows);
    let reduced = span.rref();
    let rank = span.rank();
    let basis: Vec<FieldElement> = (0..rank).flat_map(|i| reduced.row(i).to_vec()).collect();
    LinearCode {
        generator: Matrix::new(&field, rank, n, basis),
    }
}

/// MDS check per the k-columns criterion: every k columns of the generator
/// must be linearly independent. Returns the lexicographically first singular
/// column set as witness on failure.
pub fn is_mds(code: &LinearCode) -> Result<(bool, Option<Vec<usize>>), CodeError> {
    is_mds_capped(code, DEFAULT_MINOR_CAP)
}

pub fn is_mds_capped(
    code: &LinearCode,
    cap: u128,
) -> Result<(bool, Option<Vec<usize>>), CodeError> {
    let k = code.dimension();
    let n = code.length();
    let needed = Subsets::count(n, k);
    if needed > cap {
        return Err(CodeError::ResourceLimit { needed, cap });
    }
    for cols in Subsets::new(n, k) {
        let minor = code.generator().columns_submatrix(&cols)?;
        if minor.det()?.is_zero() {
            return Ok((false, Some(cols)));
        }
    }
    Ok((true, None))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrsVerdict {
    Grs,
    NonGrs,
    Inconclusive,
}

impl fmt::Display for GrsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrsVerdict::Grs => write!(f, "GRS"),
            GrsVerdict::NonGrs => write!(f, "NonGRS"),
            GrsVerdict::Inconclusive => write!(f, "Inconclusive"),
        }
    }
}

/// Which route of the GRS criterion produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrsBranch {
    /// `dim(C^2) = 2k - 1` applied to the code itself (needs `2k <= n-1`).
    Direct,
    /// Criterion applied to the dual code.
    ViaDual,
    /// `k` in {1, 2, n-2, n-1}: settled classification, always GRS.
    SmallK,
}

impl fmt::Display for GrsBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrsBranch::Direct => write!(f, "direct"),
            GrsBranch::ViaDual => write!(f, "via-dual"),
            GrsBranch::SmallK => write!(f, "small-k"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GrsOutcome {
    pub verdict: GrsVerdict,
    pub branch: Option<GrsBranch>,
    /// `dim(C^2)` when the direct branch ran.
    pub square_dim: Option<usize>,
    /// Square dimension of the dual when the via-dual branch ran.
    pub dual_square_dim: Option<usize>,
}

/// Square-criterion GRS decision for an MDS code.
///
/// For `2k <= n-1` the code is GRS iff `dim(C^2) = 2k-1`. Dimensions
/// 1, 2, n-2, n-1 are settled (always GRS). Otherwise the criterion is
/// applied to the dual when that fits the dimension restriction; remaining
/// boundary cases are reported inconclusive.
pub fn grs_test(code: &LinearCode) -> Result<GrsOutcome, CodeError> {
    grs_test_capped(code, DEFAULT_MINOR_CAP)
}

pub fn grs_test_capped(code: &LinearCode, cap: u128) -> Result<GrsOutcome, CodeError> {
    let (mds, _) = is_mds_capped(code, cap)?;
    if !mds {
        return Err(CodeError::NotMds);
    }
    Ok(grs_test_assuming_mds(code))
}

fn grs_test_assuming_mds(code: &LinearCode) -> GrsOutcome {
    let k = code.dimension();
    let n = code.length();
    if k >= 1 && 2 * k < n {
        let sq = schur_square(code).dimension();
        let verdict = if sq == 2 * k - 1 {
            GrsVerdict::Grs
        } else {
            GrsVerdict::NonGrs
        };
        return GrsOutcome {
            verdict,
            branch: Some(GrsBranch::Direct),
            square_dim: Some(sq),
            dual_square_dim: None,
        };
    }
    if k < n && (k == 1 || k == 2 || k + 2 == n || k + 1 == n) {
        return GrsOutcome {
            verdict: GrsVerdict::Grs,
            branch: Some(GrsBranch::SmallK),
            square_dim: None,
            dual_square_dim: None,
        };
    }
    let dk = n - k;
    if dk >= 1 && 2 * dk < n {
        // Duals of GRS codes are GRS, and the dual of an MDS code is MDS,
        // so the criterion transfers.
        let dual = code.dual();
        let sq = schur_square(&dual).dimension();
        let verdict = if sq == 2 * dk - 1 {
            GrsVerdict::Grs
        } else {
            GrsVerdict::NonGrs
        };
        return GrsOutcome {
            verdict,
            branch: Some(GrsBranch::ViaDual),
            square_dim: None,
            dual_square_dim: Some(sq),
        };
    }
    GrsOutcome {
        verdict: GrsVerdict::Inconclusive,
        branch: None,
        square_dim: None,
        dual_square_dim: None,
    }
}

/// Aggregated classification of one code.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub is_mds: bool,
    pub witness: Option<Vec<usize>>,
    pub square_dim: Option<usize>,
    pub dual_square_dim: Option<usize>,
    pub grs_verdict: Option<GrsVerdict>,
    pub grs_branch: Option<GrsBranch>,
    pub gtrs_recognized: Option<GtrsSpec>,
}

/// Runs the MDS check, then the GRS test, then (when `alpha`, `v` are given
/// and applicable) GTRS recognition, aggregating everything into a report.
pub fn classify(
    code: &LinearCode,
    recognition_hint: Option<(&[FieldElement], &[FieldElement])>,
    cap: u128,
) -> Result<ClassificationReport, CodeError> {
    let (mds, witness) = is_mds_capped(code, cap)?;
    let mut report = ClassificationReport {
        is_mds: mds,
        witness,
        square_dim: None,
        dual_square_dim: None,
        grs_verdict: None,
        grs_branch: None,
        gtrs_recognized: None,
    };
    if !mds {
        return Ok(report);
    }
    let outcome = grs_test_assuming_mds(code);
    report.square_dim = outcome.square_dim;
    report.dual_square_dim = outcome.dual_square_dim;
    report.grs_verdict = Some(outcome.verdict);
    report.grs_branch = outcome.branch;
    if let Some((alpha, v)) = recognition_hint {
        // Absence is a valid outcome; malformed hints are not.
        let rec = gtrs::recognize(code.generator(), alpha, v)?;
        report.gtrs_recognized = rec.map(|r| r.spec);
    }
    Ok(report)
}
