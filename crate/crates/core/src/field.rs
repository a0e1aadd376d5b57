//! Prime fields `F_p` and extensions `F_{p^b}` in the polynomial basis.
//!
//! Elements are dense coefficient vectors over `F_p`, reduced modulo a monic
//! irreducible polynomial of degree `b`. Inversion runs the extended Euclidean
//! algorithm; no discrete-log tables are kept, so large extensions such as
//! `F_{11^13}` work out of the box.

use std::fmt;
use std::sync::Arc;

use crate::poly::Polynomial;

/// Largest supported characteristic (exclusive). Products of two reduced
/// coefficients must fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    ReducibleModulus,
    DegreeMismatch { expected: usize, found: usize },
    DivisionByZero,
    ContextMismatch,
    NoEmbedding,
    InvalidBaseDegree { base: usize, degree: usize },
    Unsupported(&'static str),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ReducibleModulus => write!(f, "modulus polynomial is reducible"),
            FieldError::DegreeMismatch { expected, found } => {
                write!(f, "modulus degree {found}, expected {expected}")
            }
            FieldError::DivisionByZero => write!(f, "division by zero"),
            FieldError::ContextMismatch => write!(f, "elements belong to different fields"),
            FieldError::NoEmbedding => write!(f, "no canonical embedding between these fields"),
            FieldError::InvalidBaseDegree { base, degree } => {
                write!(
                    f,
                    "base degree {base} does not divide extension degree {degree}"
                )
            }
            FieldError::Unsupported(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for FieldError {}

struct FieldCore {
    p: u64,
    degree: usize,
    /// Monic modulus of degree `degree`, lowest coefficient first, length
    /// `degree + 1`. Empty for prime fields.
    modulus: Vec<u64>,
}

/// A finite field `F_{p^b}`, cheap to clone and safe to share.
#[derive(Clone)]
pub struct Field(Arc<FieldCore>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{{{}^{}}}", self.0.p, self.0.degree)
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}
impl Eq for Field {}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    /// `F_{p^b}`. When `modulus` is `None` and `b > 1`, picks the
    /// lexicographically smallest monic irreducible of degree `b`
    /// (coefficients compared low-degree-first).
    pub fn new(p: u64, b: usize, modulus: Option<&Polynomial>) -> Result<Field, FieldError> {
        if p >= MAX_CHARACTERISTIC {
            return Err(FieldError::Unsupported("characteristic must be below 2^31"));
        }
        if b == 0 || b > MAX_EXTENSION_DEGREE {
            return Err(FieldError::Unsupported(
                "extension degree must be in 1..=64",
            ));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if b == 1 {
            if let Some(m) = modulus {
                // A degree-1 modulus is redundant; accept only a monic linear one.
                if m.degree() != Some(1) {
                    return Err(FieldError::DegreeMismatch {
                        expected: 1,
                        found: m.degree().unwrap_or(0),
                    });
                }
            }
            return Ok(Field(Arc::new(FieldCore {
                p,
                degree: 1,
                modulus: Vec::new(),
            })));
        }
        let raw = match modulus {
            Some(m) => {
                let raw = raw_from_polynomial(m, p)?;
                if raw.len() != b + 1 {
                    return Err(FieldError::DegreeMismatch {
                        expected: b,
                        found: raw.len().saturating_sub(1),
                    });
                }
                if *raw.last().unwrap() != 1 {
                    return Err(FieldError::Unsupported("modulus must be monic"));
                }
                if !raw_is_irreducible(&raw, p) {
                    return Err(FieldError::ReducibleModulus);
                }
                raw
            }
            None => smallest_irreducible(p, b),
        };
        Ok(Field(Arc::new(FieldCore {
            p,
            degree: b,
            modulus: raw,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn extension_degree(&self) -> usize {
        self.0.degree
    }

    /// Modulus coefficients (low degree first), `None` for prime fields.
    pub fn modulus_coeffs(&self) -> Option<&[u64]> {
        if self.0.degree == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    /// `p^b`, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        let mut acc: u128 = 1;
        for _ in 0..self.0.degree {
            acc = acc.saturating_mul(self.0.p as u128);
        }
        acc
    }

    /// Structural equality: same `(p, b, modulus)`.
    pub fn same(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.degree == other.0.degree
                && self.0.modulus == other.0.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.degree].into_boxed_slice(),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The constant element `c mod p`.
    pub fn from_u64(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.degree];
        coeffs[0] = c % self.0.p;
        FieldElement {
            field: self.clone(),
            coeffs: coeffs.into_boxed_slice(),
        }
    }

    /// Signed variant of [`Field::from_u64`].
    pub fn from_i64(&self, c: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.from_u64(c.rem_euclid(p) as u64)
    }

    /// Element from polynomial-basis coordinates, low degree first. Shorter
    /// slices are zero-padded; longer ones are rejected.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.degree {
            return Err(FieldError::DegreeMismatch {
                expected: self.0.degree,
                found: coeffs.len(),
            });
        }
        let mut full = vec![0; self.0.degree];
        for (slot, &c) in full.iter_mut().zip(coeffs) {
            *slot = c % self.0.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: full.into_boxed_slice(),
        })
    }

    /// The class of `x` modulo the field's defining polynomial.
    pub fn generator(&self) -> Result<FieldElement, FieldError> {
        if self.0.degree < 2 {
            return Err(FieldError::Unsupported(
                "prime fields have no polynomial generator",
            ));
        }
        self.element(&[0, 1])
    }

    /// All field elements, in base-`p` counter order. Only sensible for small
    /// fields; used by searches and the CLI.
    pub fn iter_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let n = self.order();
        assert!(n <= 1 << 20, "field too large to enumerate");
        let p = self.0.p as u128;
        let b = self.0.degree;
        (0..n).map(move |mut i| {
            let mut coeffs = vec![0u64; b];
            for c in coeffs.iter_mut() {
                *c = (i % p) as u64;
                i /= p;
            }
            FieldElement {
                field: self.clone(),
                coeffs: coeffs.into_boxed_slice(),
            }
        })
    }
}

/// An element of a [`Field`], carrying its context.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Box<[u64]>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same(&other.field) && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// Dispatch tag for [`FieldElement::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Polynomial-basis coordinates, low degree first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.checked(FieldOp::Add, other).expect("field op")
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.checked(FieldOp::Sub, other).expect("field op")
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.checked(FieldOp::Mul, other).expect("field op")
    }

    /// Binary field operation with context and zero-divisor checks.
    pub fn checked(&self, op: FieldOp, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check_same(other)?;
        let p = self.field.0.p;
        let out = match op {
            FieldOp::Add => {
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(other.coeffs.iter())
                    .map(|(&a, &b)| (a + b) % p)
                    .collect();
                FieldElement {
                    field: self.field.clone(),
                    coeffs,
                }
            }
            FieldOp::Sub => {
                let coeffs = self
                    .coeffs
                    .iter()
                    .zip(other.coeffs.iter())
                    .map(|(&a, &b)| (a + p - b) % p)
                    .collect();
                FieldElement {
                    field: self.field.clone(),
                    coeffs,
                }
            }
            FieldOp::Mul => {
                let raw = raw_mul_reduce(&self.coeffs, &other.coeffs, &self.field.0);
                FieldElement {
                    field: self.field.clone(),
                    coeffs: raw.into_boxed_slice(),
                }
            }
            FieldOp::Div => {
                let inv = other.inv()?;
                return self.checked(FieldOp::Mul, &inv);
            }
        };
        Ok(out)
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.0.p;
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let core = &self.field.0;
        if core.degree == 1 {
            let inv = mod_inverse_u64(self.coeffs[0], core.p);
            return self.field.element(&[inv]);
        }
        let a = raw_trim(self.coeffs.to_vec());
        let inv = raw_inverse(&a, &core.modulus, core.p).ok_or(FieldError::DivisionByZero)?;
        let mut full = vec![0; core.degree];
        full[..inv.len()].copy_from_slice(&inv);
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: full.into_boxed_slice(),
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.checked(FieldOp::Div, other)
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self^e` for signed exponents; negative exponents invert first.
    pub fn powi(&self, e: i128) -> Result<FieldElement, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u128))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// `self^(p^m)`, the m-fold Frobenius.
    pub fn frobenius(&self, m: usize) -> FieldElement {
        let p = self.field.0.p as u128;
        let mut out = self.clone();
        for _ in 0..m {
            out = out.pow(p);
        }
        out
    }
}

/// Degree of the minimal polynomial of `beta` over the subfield `F_{p^b0}`,
/// computed as the Frobenius orbit length.
pub fn min_poly_degree(beta: &FieldElement, base_degree: usize) -> Result<usize, FieldError> {
    let b = beta.field().extension_degree();
    if base_degree == 0 || b % base_degree != 0 {
        return Err(FieldError::InvalidBaseDegree {
            base: base_degree,
            degree: b,
        });
    }
    let mut gamma = beta.frobenius(base_degree);
    let mut d = 1;
    while gamma != *beta {
        gamma = gamma.frobenius(base_degree);
        d += 1;
        debug_assert!(
            d <= b / base_degree,
            "Frobenius orbit exceeded field degree"
        );
    }
    Ok(d)
}

/// Canonical embedding into an extension. Supported cases: identical fields,
/// and prime subfield into any extension of the same characteristic.
pub fn embed(a: &FieldElement, target: &Field) -> Result<FieldElement, FieldError> {
    if a.field().same(target) {
        return Ok(a.clone());
    }
    if a.field().characteristic() != target.characteristic() {
        return Err(FieldError::NoEmbedding);
    }
    if a.field().extension_degree() == 1 {
        return target.element(&[a.coeffs()[0]]);
    }
    Err(FieldError::NoEmbedding)
}

// ---------------------------------------------------------------------------
// Raw polynomial arithmetic over F_p (coefficient vectors, low degree first).
// ---------------------------------------------------------------------------

fn raw_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    raw_trim(out)
}

/// Remainder of `a` by monic `m`.
fn raw_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = raw_trim(a.to_vec());
    let md = m.len() - 1;
    while r.len() > md {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - md;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let idx = i + shift;
                r[idx] = (r[idx] + (p - (lead * mc) % p)) % p;
            }
        }
        r = raw_trim(r);
        if r.len() <= md {
            break;
        }
    }
    r
}

/// Product reduced by the field modulus, returned at full width `degree`.
fn raw_mul_reduce(a: &[u64], b: &[u64], core: &FieldCore) -> Vec<u64> {
    if core.degree == 1 {
        return vec![(a[0] * b[0]) % core.p];
    }
    let prod = raw_mul(a, b, core.p);
    let red = raw_rem(&prod, &core.modulus, core.p);
    let mut full = vec![0; core.degree];
    full[..red.len()].copy_from_slice(&red);
    full
}

/// Extended Euclid: inverse of `a` modulo the monic irreducible `m`.
fn raw_inverse(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = raw_trim(a.to_vec());
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = raw_divmod(&r0, &r1, p);
        let qs1 = raw_mul(&q, &s1, p);
        let s = raw_sub(&s0, &qs1, p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 = gcd; must be a nonzero constant for invertibility.
    if r0.len() != 1 {
        return None;
    }
    let c_inv = mod_inverse_u64(r0[0], p);
    Some(raw_trim(s0.iter().map(|&c| (c * c_inv) % p).collect()))
}

fn raw_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let av = a.get(i).copied().unwrap_or(0);
        let bv = b.get(i).copied().unwrap_or(0);
        *slot = (av + p - bv) % p;
    }
    raw_trim(out)
}

/// Division with remainder by an arbitrary nonzero divisor.
fn raw_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = raw_trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let bd = b.len() - 1;
    let lead_inv = mod_inverse_u64(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - bd];
    while r.len() >= b.len() {
        let shift = r.len() - 1 - bd;
        let c = (*r.last().unwrap() * lead_inv) % p;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            let idx = i + shift;
            r[idx] = (r[idx] + p - (c * bc) % p) % p;
        }
        r = raw_trim(r);
    }
    (raw_trim(q), r)
}

/// `x^e mod m` by square-and-multiply.
fn raw_pow_x(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = raw_rem(&[0, 1], m, p);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = raw_rem(&raw_mul(&result, &base, p), m, p);
        }
        base = raw_rem(&raw_mul(&base, &base, p), m, p);
        e >>= 1;
    }
    result
}

fn raw_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = raw_trim(a.to_vec());
    let mut r1 = raw_trim(b.to_vec());
    while !r1.is_empty() {
        let (_, r) = raw_divmod(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
    }
    r0
}

/// Rabin irreducibility test for a monic polynomial over `F_p`.
///
/// `f` of degree b is irreducible iff `x^{p^b} = x (mod f)` and for every
/// prime divisor r of b, `gcd(x^{p^{b/r}} - x, f) = 1`.
fn raw_is_irreducible(f: &[u64], p: u64) -> bool {
    let b = f.len() - 1;
    if b == 0 {
        return false;
    }
    if b == 1 {
        return true;
    }
    if f[0] == 0 {
        return false; // divisible by x
    }
    // Iterated Frobenius: frob[i] = x^{p^i} mod f, built by powering.
    let mut frob = raw_pow_x(p, f, p); // x^p
    let mut powers = vec![Vec::new(); b + 1];
    powers[1] = frob.clone();
    for slot in powers.iter_mut().skip(2) {
        frob = raw_pow_poly_p(&frob, p, f);
        *slot = frob.clone();
    }
    let x = raw_rem(&[0, 1], f, p);
    if powers[b] != x {
        return false;
    }
    for r in prime_divisors(b as u64) {
        let d = b / r as usize;
        let diff = raw_sub(&powers[d], &x, p);
        let g = raw_gcd(f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// `g(x)^p mod f` by square-and-multiply.
fn raw_pow_poly_p(g: &[u64], p: u64, f: &[u64]) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut base = g.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = raw_rem(&raw_mul(&result, &base, p), f, p);
        }
        base = raw_rem(&raw_mul(&base, &base, p), f, p);
        e >>= 1;
    }
    result
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Lexicographically smallest monic irreducible of degree `b` over `F_p`,
/// comparing coefficient tuples low-degree-first.
fn smallest_irreducible(p: u64, b: usize) -> Vec<u64> {
    // c0 = 0 makes the polynomial divisible by x, so start the odometer at
    // (1, 0, ..., 0); the highest-degree coefficient advances fastest.
    let mut coeffs = vec![0u64; b];
    coeffs[0] = 1;
    loop {
        let mut f = coeffs.clone();
        f.push(1);
        if raw_is_irreducible(&f, p) {
            return f;
        }
        // Advance the tuple (c_0, ..., c_{b-1}) in lexicographic order.
        let mut i = b - 1;
        loop {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            assert!(i > 0, "no irreducible polynomial found");
            i -= 1;
        }
    }
}

fn raw_from_polynomial(m: &Polynomial, p: u64) -> Result<Vec<u64>, FieldError> {
    let f = m.field();
    if f.characteristic() != p || f.extension_degree() != 1 {
        return Err(FieldError::ContextMismatch);
    }
    Ok(raw_trim(m.coeffs().iter().map(|c| c.coeffs()[0]).collect()))
}

// ---------------------------------------------------------------------------
// Integer helpers.
// ---------------------------------------------------------------------------

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    debug_assert!(a % p != 0);
    mod_pow_u64(a % p, p - 2, p)
}

fn mod_pow_u64(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all `n < 2^32` (bases 2, 7, 61).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
