//! Dense univariate polynomials with coefficients in a [`Field`].
//!
//! Trailing zero coefficients are trimmed, so the zero polynomial has an empty
//! coefficient vector and `degree()` returns `None` for it.

use std::fmt;

use crate::field::{embed, Field, FieldElement, FieldError};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format!("{c}");
            let needs_parens = cs.contains('+');
            terms.push(match i {
                0 => cs,
                _ => {
                    let var = if i == 1 {
                        "x".to_string()
                    } else {
                        format!("x^{i}")
                    };
                    if cs == "1" {
                        var
                    } else if needs_parens {
                        format!("({cs})*{var}")
                    } else {
                        format!("{cs}*{var}")
                    }
                }
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

impl Polynomial {
    pub fn zero(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        let field = c.field().clone();
        Polynomial::from_coeffs(&field, vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: FieldElement, deg: usize) -> Polynomial {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); deg];
        coeffs.push(c);
        Polynomial::from_coeffs(&field, coeffs)
    }

    /// Builds from low-degree-first coefficients, trimming trailing zeros.
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        debug_assert!(coeffs.iter().all(|c| c.field().same(field)));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_u64_coeffs(field: &Field, coeffs: &[u64]) -> Polynomial {
        Polynomial::from_coeffs(field, coeffs.iter().map(|&c| field.from_u64(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Polynomial::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Polynomial::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::from_coeffs(&self.field, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::from_coeffs(&self.field, out)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        Polynomial::from_coeffs(&self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divmod(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), FieldError> {
        if divisor.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading_coeff().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = rem.last().unwrap().mul(&lead_inv);
            let shift = rem.len() - 1 - dd;
            if !c.is_zero() {
                quot[shift] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[i + shift] = rem[i + shift].sub(&c.mul(b));
                }
            }
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((
            Polynomial::from_coeffs(&self.field, quot),
            Polynomial::from_coeffs(&self.field, rem),
        ))
    }

    /// Exact division; panics if the remainder is nonzero. Used by the
    /// fraction-free determinant where divisibility is guaranteed.
    pub fn exact_div(&self, divisor: &Polynomial) -> Polynomial {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, at: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Evaluation at a point of an extension field: coefficients are embedded
    /// first, so this realizes the evaluation homomorphism `F_q[x] -> F_{q^b}`.
    pub fn eval_in(&self, at: &FieldElement) -> Result<FieldElement, FieldError> {
        let target = at.field();
        let mut acc = target.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(&embed(c, target)?);
        }
        Ok(acc)
    }
}
