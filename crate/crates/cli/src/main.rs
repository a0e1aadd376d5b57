//! `mdsforge`: build, classify and verify MDS / GRS / GTRS codes.
//!
//! Exit codes: 0 success, 1 verify-paper mismatch, 2 resource limit,
//! 3 parse error, 4 precondition violation. Stdout carries JSON (or the
//! verify-paper table); diagnostics go to stderr.

mod golden;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use mdsforge_core::code::{self, CodeError, LinearCode};
use mdsforge_core::field::{min_poly_degree, Field, FieldElement};
use mdsforge_core::gtrs::{self, GtrsSpec, Hook};
use mdsforge_core::json as mj;
use mdsforge_core::linalg::{EvalPoint, Matrix};
use mdsforge_core::perturb::{
    construct_family, grs_generator, perturbed_code, BuildError, FamilyKind, FamilyParams, GrsSpec,
    Perturbation, Position,
};
use mdsforge_core::DEFAULT_MINOR_CAP;

const EXIT_MISMATCH: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "mdsforge",
    version,
    about = "Exact constructions and classification of MDS, GRS and twisted Reed-Solomon codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print parameters of a finite field spec.
    FieldInfo(FieldInfoArgs),
    /// Build a code (GRS, GTRS, or a perturbed non-GRS family).
    Build(BuildArgs),
    /// Classify a code: MDS check, GRS verdict, optional GTRS recognition.
    Classify(ClassifyArgs),
    /// Recognize GTRS structure against explicit evaluation points.
    Recognize(RecognizeArgs),
    /// Schur square of a code.
    Schur(SchurArgs),
    /// Re-derive every worked example and compare against pinned matrices.
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct FieldInfoArgs {
    /// Field spec, e.g. "p=7", "p=7,b=2,mod=x^2+2", "p=11,b=13".
    #[arg(long)]
    field: String,
}

#[derive(Args)]
struct BuildArgs {
    /// grs | gtrs | custom | prop1 | first_column | single_e11.
    #[arg(long)]
    kind: Option<String>,
    /// Base field spec (the field of alpha and v). For perturbed kinds an
    /// extension spec here implies a prime base field.
    #[arg(long)]
    field: Option<String>,
    /// Extension field spec holding beta.
    #[arg(long)]
    ext: Option<String>,
    /// Evaluation points, comma separated; "inf" allowed (not for gtrs).
    #[arg(long)]
    alpha: Option<String>,
    /// Column multipliers; a single value broadcasts.
    #[arg(long, default_value = "1")]
    v: String,
    /// Code dimension.
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Perturbation element in the extension field, e.g. "t" or "1+2*t".
    #[arg(long)]
    beta: Option<String>,
    /// Perturbation positions "i,j,s;i,j,s;..." (1-indexed row, column,
    /// exponent). single_e11 takes one position (1,j,1).
    #[arg(long)]
    positions: Option<String>,
    /// GTRS hooks "h,t,eta;h,t,eta;..." (h 0-indexed, t 1-indexed).
    #[arg(long)]
    hooks: Option<String>,
    /// Build beyond the proven parameter ranges (still re-verified).
    #[arg(long)]
    allow_unproven: bool,
    /// Construction spec JSON file ("-" for stdin), alternative to flags.
    #[arg(long)]
    input: Option<String>,
    /// Name recorded in the emitted code document.
    #[arg(long)]
    name: Option<String>,
    /// Minor-enumeration cap (overrides MDSFORGE_CAP).
    #[arg(long)]
    cap: Option<u128>,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Code JSON file ("-" for stdin).
    #[arg(long)]
    input: String,
    /// Evaluation points for GTRS recognition (optional, finite).
    #[arg(long)]
    alpha: Option<String>,
    /// Multipliers for recognition; single value broadcasts.
    #[arg(long, default_value = "1")]
    v: String,
    #[arg(long)]
    cap: Option<u128>,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Code JSON file ("-" for stdin).
    #[arg(long)]
    input: String,
    /// Evaluation points (finite, distinct), required unless --search.
    #[arg(long)]
    alpha: Option<String>,
    /// Multipliers; single value broadcasts.
    #[arg(long, default_value = "1")]
    v: String,
    /// Retry over all k-column anchors (coordinate permutations).
    #[arg(long)]
    exhaustive: bool,
    /// Try this many random (alpha, v) candidates instead of explicit ones.
    #[arg(long)]
    search: Option<usize>,
    /// Seed for --search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct SchurArgs {
    /// Code JSON file ("-" for stdin).
    #[arg(long)]
    input: String,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only the named example.
    #[arg(long)]
    only: Option<String>,
    /// Corrupt one entry of the named example's computed matrix (self-test
    /// of the comparison harness).
    #[arg(long, hide = true)]
    tamper: Option<String>,
}

/// Error carrying its process exit code.
pub(crate) struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn parse(msg: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_PARSE,
            message: msg.into(),
        }
    }

    fn precondition(msg: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_PRECONDITION,
            message: msg.into(),
        }
    }
}

impl From<mj::ParseError> for CliError {
    fn from(e: mj::ParseError) -> Self {
        CliError::parse(e.to_string())
    }
}

impl From<BuildError> for CliError {
    fn from(e: BuildError) -> Self {
        let code = match e {
            BuildError::ResourceLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        let code = match e {
            CodeError::ResourceLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<gtrs::GtrsError> for CliError {
    fn from(e: gtrs::GtrsError) -> Self {
        CliError::precondition(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            if kind == ClapErrorKind::DisplayHelp || kind == ClapErrorKind::DisplayVersion {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let result = match cli.command {
        Command::FieldInfo(args) => cmd_field_info(args),
        Command::Build(args) => cmd_build(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Recognize(args) => cmd_recognize(args),
        Command::Schur(args) => cmd_schur(args),
        Command::VerifyPaper(args) => {
            return golden::run(args.only.as_deref(), args.tamper.as_deref())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::parse(format!("reading {path}: {e}")))
    }
}

fn read_json(path: &str) -> Result<Value, CliError> {
    serde_json::from_str(&read_input(path)?)
        .map_err(|e| CliError::parse(format!("bad JSON in {path}: {e}")))
}

fn emit(value: &Value, output: Option<&str>) -> Result<(), CliError> {
    let text = mj::to_canonical_string(value);
    match output {
        None => println!("{text}"),
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| CliError::parse(format!("writing {path}: {e}")))?,
    }
    Ok(())
}

fn effective_cap(flag: Option<u128>) -> u128 {
    flag.or_else(|| {
        std::env::var("MDSFORGE_CAP")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_MINOR_CAP)
}

/// Broadcasts a single multiplier to length n.
fn parse_multipliers(field: &Field, text: &str, n: usize) -> Result<Vec<FieldElement>, CliError> {
    let v = mj::parse_element_list(field, text)?;
    if v.len() == 1 && n > 1 {
        return Ok(vec![v[0].clone(); n]);
    }
    if v.len() != n {
        return Err(CliError::parse(format!(
            "expected {n} multipliers, found {}",
            v.len()
        )));
    }
    Ok(v)
}

fn parse_positions(text: &str) -> Result<Vec<Position>, CliError> {
    text.split(';')
        .map(|triple| {
            let parts: Vec<&str> = triple.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(CliError::parse(format!(
                    "bad position '{triple}', want i,j,s"
                )));
            }
            let i = parts[0]
                .parse()
                .map_err(|_| CliError::parse("bad row index"))?;
            let j = parts[1]
                .parse()
                .map_err(|_| CliError::parse("bad column index"))?;
            let s = parts[2]
                .parse()
                .map_err(|_| CliError::parse("bad exponent"))?;
            Ok((i, j, s))
        })
        .collect()
}

fn parse_hooks(field: &Field, text: &str) -> Result<Vec<Hook>, CliError> {
    text.split(';')
        .map(|triple| {
            let parts: Vec<&str> = triple.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(CliError::parse(format!(
                    "bad hook '{triple}', want h,t,eta"
                )));
            }
            let h = parts[0]
                .parse()
                .map_err(|_| CliError::parse("bad hook h"))?;
            let t = parts[1]
                .parse()
                .map_err(|_| CliError::parse("bad hook t"))?;
            let eta = mj::parse_element(field, parts[2])?;
            Ok(Hook { h, t, eta })
        })
        .collect()
}

fn cmd_field_info(args: FieldInfoArgs) -> Result<(), CliError> {
    let field = mj::parse_field_spec(&args.field)?;
    let order = field.order();
    let cardinality = if order == u128::MAX {
        format!("{}^{}", field.characteristic(), field.extension_degree())
    } else {
        order.to_string()
    };
    let doc = json!({
        "b": field.extension_degree(),
        "cardinality": cardinality,
        "modulus": field.modulus_coeffs().map(mj::modulus_string),
        "p": field.characteristic(),
        "spec": mj::field_spec_string(&field),
    });
    emit(&doc, None)
}

/// Flags and JSON spec normalized into one build description.
struct BuildSpec {
    kind: String,
    base: Field,
    ext: Option<Field>,
    alpha: Vec<EvalPoint>,
    v: Vec<FieldElement>,
    k: usize,
    beta: Option<FieldElement>,
    positions: Vec<Position>,
    hooks: Vec<Hook>,
    name: String,
    allow_unproven: bool,
}

fn build_spec_from_args(args: &BuildArgs) -> Result<BuildSpec, CliError> {
    if let Some(path) = &args.input {
        return build_spec_from_json(&read_json(path)?);
    }
    let kind = args
        .kind
        .clone()
        .ok_or_else(|| CliError::parse("--kind is required (or use --input)"))?;
    let field_spec = args
        .field
        .clone()
        .ok_or_else(|| CliError::parse("--field is required"))?;
    let field = mj::parse_field_spec(&field_spec)?;
    let (base, ext) = split_fields(&kind, &field, args.ext.as_deref())?;
    let alpha_text = args
        .alpha
        .clone()
        .ok_or_else(|| CliError::parse("--alpha is required"))?;
    let alpha = mj::parse_point_list(&base, &alpha_text)?;
    let v = parse_multipliers(&base, &args.v, alpha.len())?;
    let beta = match (&args.beta, &ext) {
        (Some(text), Some(e)) => Some(mj::parse_element(e, text)?),
        (Some(_), None) => return Err(CliError::parse("--beta needs an extension field")),
        (None, _) => None,
    };
    let positions = match &args.positions {
        Some(text) => parse_positions(text)?,
        None => Vec::new(),
    };
    let hooks = match &args.hooks {
        Some(text) => parse_hooks(&base, text)?,
        None => Vec::new(),
    };
    Ok(BuildSpec {
        kind,
        base,
        ext,
        alpha,
        v,
        k: args.k,
        beta,
        positions,
        hooks,
        name: args.name.clone().unwrap_or_else(|| "code".into()),
        allow_unproven: args.allow_unproven,
    })
}

/// For perturbed kinds, a lone extension --field implies a prime base.
fn split_fields(
    kind: &str,
    field: &Field,
    ext_spec: Option<&str>,
) -> Result<(Field, Option<Field>), CliError> {
    match (kind, ext_spec) {
        ("grs" | "gtrs", _) => Ok((field.clone(), None)),
        (_, Some(spec)) => Ok((field.clone(), Some(mj::parse_field_spec(spec)?))),
        (_, None) => {
            if field.extension_degree() > 1 {
                let prime = Field::prime(field.characteristic())
                    .map_err(|e| CliError::parse(e.to_string()))?;
                Ok((prime, Some(field.clone())))
            } else {
                Err(CliError::precondition(
                    "perturbed constructions need an extension field (--ext or an extension --field)",
                ))
            }
        }
    }
}

fn build_spec_from_json(doc: &Value) -> Result<BuildSpec, CliError> {
    let kind = doc
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::parse("spec needs a kind"))?
        .to_string();
    let field = mj::parse_field_spec(
        doc.get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::parse("spec needs a field"))?,
    )?;
    let ext_spec = doc.get("ext").and_then(Value::as_str);
    let (base, ext) = split_fields(&kind, &field, ext_spec)?;
    let alpha = doc
        .get("alpha")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::parse("spec needs alpha"))?
        .iter()
        .map(|x| mj::eval_point_from_json(&base, x))
        .collect::<Result<Vec<_>, _>>()?;
    let v = match doc.get("v") {
        None => vec![base.one(); alpha.len()],
        Some(Value::Array(items)) => {
            let parsed = items
                .iter()
                .map(|x| mj::element_from_json(&base, x))
                .collect::<Result<Vec<_>, _>>()?;
            if parsed.len() == 1 && alpha.len() > 1 {
                vec![parsed[0].clone(); alpha.len()]
            } else {
                parsed
            }
        }
        Some(other) => vec![mj::element_from_json(&base, other)?; alpha.len()],
    };
    let k = doc.get("k").and_then(Value::as_u64).unwrap_or(3) as usize;
    let beta = doc
        .get("beta")
        .map(|b| {
            let ext = ext
                .as_ref()
                .ok_or_else(|| CliError::parse("beta needs an ext field"))?;
            mj::element_from_json(ext, b).map_err(CliError::from)
        })
        .transpose()?;
    let positions = doc
        .get("positions")
        .and_then(Value::as_array)
        .map(|items| {
            items
                .iter()
                .map(|item| {
                    let triple = item
                        .as_array()
                        .filter(|t| t.len() == 3)
                        .ok_or_else(|| CliError::parse("position must be [i,j,s]"))?;
                    let get = |i: usize| {
                        triple[i]
                            .as_u64()
                            .ok_or_else(|| CliError::parse("bad position entry"))
                    };
                    Ok((get(0)? as usize, get(1)? as usize, get(2)? as u32))
                })
                .collect::<Result<Vec<Position>, CliError>>()
        })
        .transpose()?
        .unwrap_or_default();
    let hooks = doc
        .get("hooks")
        .and_then(Value::as_array)
        .map(|items| {
            items
                .iter()
                .map(|item| {
                    let triple = item
                        .as_array()
                        .filter(|t| t.len() == 3)
                        .ok_or_else(|| CliError::parse("hook must be [h,t,eta]"))?;
                    let h = triple[0]
                        .as_u64()
                        .ok_or_else(|| CliError::parse("bad hook h"))?
                        as usize;
                    let t = triple[1]
                        .as_u64()
                        .ok_or_else(|| CliError::parse("bad hook t"))?
                        as usize;
                    let eta = mj::element_from_json(&base, &triple[2])?;
                    Ok(Hook { h, t, eta })
                })
                .collect::<Result<Vec<Hook>, CliError>>()
        })
        .transpose()?
        .unwrap_or_default();
    Ok(BuildSpec {
        kind,
        base,
        ext,
        alpha,
        v,
        k,
        beta,
        positions,
        hooks,
        name: doc
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("code")
            .to_string(),
        allow_unproven: doc
            .get("allow_unproven")
            .and_then(Value::as_bool)
            .unwrap_or(false),
    })
}

fn cmd_build(args: BuildArgs) -> Result<(), CliError> {
    let cap = effective_cap(args.cap);
    let spec = build_spec_from_args(&args)?;
    let mut provenance = vec![
        ("kind", json!(spec.kind)),
        ("field", json!(mj::field_spec_string(&spec.base))),
        (
            "alpha",
            Value::Array(spec.alpha.iter().map(mj::eval_point_to_json).collect()),
        ),
        (
            "v",
            Value::Array(spec.v.iter().map(mj::element_to_json).collect()),
        ),
        ("k", json!(spec.k)),
    ];
    if let Some(ext) = &spec.ext {
        provenance.push(("ext", json!(mj::field_spec_string(ext))));
    }
    if let Some(beta) = &spec.beta {
        provenance.push(("beta", mj::element_to_json(beta)));
    }
    if !spec.positions.is_empty() {
        provenance.push((
            "positions",
            json!(spec
                .positions
                .iter()
                .map(|&(i, j, s)| vec![i as u64, j as u64, s as u64])
                .collect::<Vec<_>>()),
        ));
    }

    let generator: Matrix = match spec.kind.as_str() {
        "grs" => {
            let grs = GrsSpec::new(&spec.base, spec.alpha.clone(), spec.v.clone(), spec.k)?;
            grs_generator(&grs)
        }
        "gtrs" => {
            let finite: Option<Vec<FieldElement>> = spec
                .alpha
                .iter()
                .map(|pt| pt.as_finite().cloned())
                .collect();
            let finite = finite
                .ok_or_else(|| CliError::precondition("GTRS evaluation points must be finite"))?;
            let gs = GtrsSpec::new(
                &spec.base,
                finite,
                spec.v.clone(),
                spec.k,
                spec.hooks.clone(),
            )
            .map_err(CliError::from)?;
            let hook_values: Vec<Value> = gs
                .hooks()
                .iter()
                .map(|h| json!([h.h, h.t, mj::element_to_json(&h.eta)]))
                .collect();
            provenance.push(("hooks", Value::Array(hook_values)));
            gtrs::gtrs_generator(&gs)
        }
        "custom" | "prop1" | "first_column" | "single_e11" => {
            let beta = spec
                .beta
                .clone()
                .ok_or_else(|| CliError::parse("--beta is required for perturbed kinds"))?;
            let beta_degree = min_poly_degree(&beta, spec.base.extension_degree())
                .map_err(|e| CliError::precondition(e.to_string()))?;
            let grs = GrsSpec::new(&spec.base, spec.alpha.clone(), spec.v.clone(), spec.k)?;
            let (code, certificate, certified) = match spec.kind.as_str() {
                "custom" => {
                    let pert = Perturbation::new(spec.positions.clone(), beta)?;
                    let built = perturbed_code(&grs, &pert, cap)?;
                    (built.code, built.certificate, built.certified_mds)
                }
                kind => {
                    let (family, column) = match kind {
                        "prop1" => (FamilyKind::Prop1, 1),
                        "first_column" => (FamilyKind::FirstColumn, 1),
                        _ => {
                            let column = match spec.positions.as_slice() {
                                [] => 1,
                                [(1, j, 1)] => *j,
                                _ => {
                                    return Err(CliError::precondition(
                                        "single_e11 takes one position (1,j,1)",
                                    ))
                                }
                            };
                            (FamilyKind::SingleE11, column)
                        }
                    };
                    let params = FamilyParams {
                        positions: spec.positions.clone(),
                        beta,
                        column,
                        allow_unproven: spec.allow_unproven,
                    };
                    let fam = construct_family(family, &grs, &params, cap)?;
                    if let Some(sq) = fam.square_dim {
                        provenance.push(("square_dim", json!(sq)));
                    }
                    provenance.push((
                        "v_used",
                        Value::Array(fam.v.iter().map(mj::element_to_json).collect()),
                    ));
                    (fam.code, fam.certificate, fam.certified_mds)
                }
            };
            provenance.push((
                "certificate",
                json!({
                    "all_nonzero": certificate.all_nonzero,
                    "certified_mds": certified,
                    "max_degree": certificate.max_degree,
                    "min_poly_degree": beta_degree,
                }),
            ));
            code.generator().clone()
        }
        other => return Err(CliError::parse(format!("unknown kind '{other}'"))),
    };

    let doc = mj::code_to_json(&spec.name, &generator, Some(mj::object(provenance)));
    emit(&doc, args.output.as_deref())
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let cap = effective_cap(args.cap);
    let doc = read_json(&args.input)?;
    let (_name, generator) = mj::code_from_json(&doc)?;
    let code = LinearCode::new(generator).map_err(CliError::from)?;
    let hint = match &args.alpha {
        None => None,
        Some(text) => {
            let alpha = mj::parse_element_list(code.field(), text)?;
            let v = parse_multipliers(code.field(), &args.v, alpha.len())?;
            Some((alpha, v))
        }
    };
    let report = code::classify(
        &code,
        hint.as_ref().map(|(a, v)| (a.as_slice(), v.as_slice())),
        cap,
    )?;
    emit(&mj::report_to_json(&report), args.output.as_deref())
}

fn cmd_recognize(args: RecognizeArgs) -> Result<(), CliError> {
    let doc = read_json(&args.input)?;
    let (_name, generator) = mj::code_from_json(&doc)?;
    let field = generator.field().clone();
    let n = generator.cols();

    if let Some(trials) = args.search {
        return recognize_search(&args, &generator, trials);
    }

    let alpha_text = args
        .alpha
        .as_ref()
        .ok_or_else(|| CliError::parse("--alpha is required unless --search is used"))?;
    let alpha = mj::parse_element_list(&field, alpha_text)?;
    let v = parse_multipliers(&field, &args.v, n)?;
    let outcome = if args.exhaustive {
        match gtrs::recognize_exhaustive(&generator, &alpha, &v)? {
            Some((order, rec)) => {
                let mut out = mj::recognition_to_json(&rec);
                out.as_object_mut()
                    .unwrap()
                    .insert("anchor_order".into(), json!(order));
                Some(out)
            }
            None => None,
        }
    } else {
        gtrs::recognize(&generator, &alpha, &v)?.map(|rec| mj::recognition_to_json(&rec))
    };
    let result = outcome.unwrap_or_else(|| json!({ "recognized": false }));
    emit(&result, args.output.as_deref())
}

/// Bounded random search over (alpha, v) candidates; seed-deterministic.
fn recognize_search(
    args: &RecognizeArgs,
    generator: &Matrix,
    trials: usize,
) -> Result<(), CliError> {
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    let field = generator.field().clone();
    let n = generator.cols();
    if field.order() > 1 << 16 {
        return Err(CliError::precondition(
            "random search needs a small field to sample evaluation points",
        ));
    }
    let pool: Vec<FieldElement> = field.iter_elements().collect();
    if pool.len() < n {
        return Err(CliError::precondition(
            "field too small for the code length",
        ));
    }
    let mut rng = StdRng::seed_from_u64(args.seed);
    for trial in 0..trials {
        let mut points = pool.clone();
        points.shuffle(&mut rng);
        points.truncate(n);
        let v: Vec<FieldElement> = (0..n)
            .map(|_| loop {
                let x = &pool[rng.gen_range(0..pool.len())];
                if !x.is_zero() {
                    break x.clone();
                }
            })
            .collect();
        if let Some(rec) = gtrs::recognize(generator, &points, &v)? {
            let mut out = mj::recognition_to_json(&rec);
            let map = out.as_object_mut().unwrap();
            map.insert("search_trial".into(), json!(trial));
            map.insert(
                "alpha".into(),
                Value::Array(points.iter().map(mj::element_to_json).collect()),
            );
            map.insert(
                "v".into(),
                Value::Array(v.iter().map(mj::element_to_json).collect()),
            );
            return emit(&out, args.output.as_deref());
        }
    }
    emit(
        &json!({ "recognized": false, "trials": trials }),
        args.output.as_deref(),
    )
}

fn cmd_schur(args: SchurArgs) -> Result<(), CliError> {
    let doc = read_json(&args.input)?;
    let (_name, generator) = mj::code_from_json(&doc)?;
    let code = LinearCode::new(generator).map_err(CliError::from)?;
    let square = code::schur_square(&code);
    let out = json!({
        "square": mj::matrix_to_json(square.generator()),
        "square_dim": square.dimension(),
    });
    emit(&out, args.output.as_deref())
}
