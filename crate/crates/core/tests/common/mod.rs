//! Shared helpers for the integration suites: seeded random generators for
//! fields, codes and specs, plus a test-local determinant oracle that stays
//! independent of the library's elimination paths.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use mdsforge_core::field::{Field, FieldElement};
use mdsforge_core::gtrs::{GtrsSpec, Hook};
use mdsforge_core::linalg::{EvalPoint, Matrix, PolyMatrix};
use mdsforge_core::perturb::GrsSpec;
use mdsforge_core::poly::Polynomial;

pub fn f49() -> Field {
    let f7 = Field::prime(7).unwrap();
    let m = Polynomial::from_u64_coeffs(&f7, &[2, 0, 1]);
    Field::new(7, 2, Some(&m)).unwrap()
}

pub fn rand_element(rng: &mut StdRng, field: &Field) -> FieldElement {
    let p = field.characteristic();
    let coeffs: Vec<u64> = (0..field.extension_degree())
        .map(|_| rng.gen_range(0..p))
        .collect();
    field.element(&coeffs).unwrap()
}

pub fn rand_nonzero(rng: &mut StdRng, field: &Field) -> FieldElement {
    loop {
        let x = rand_element(rng, field);
        if !x.is_zero() {
            return x;
        }
    }
}

/// n distinct random elements of a small prime field.
pub fn rand_distinct(rng: &mut StdRng, field: &Field, n: usize) -> Vec<FieldElement> {
    let p = field.characteristic();
    assert!(n as u64 <= p);
    let mut pool: Vec<u64> = (0..p).collect();
    pool.shuffle(rng);
    pool.truncate(n);
    pool.into_iter().map(|v| field.from_u64(v)).collect()
}

pub fn rand_nonzero_vec(rng: &mut StdRng, field: &Field, n: usize) -> Vec<FieldElement> {
    (0..n).map(|_| rand_nonzero(rng, field)).collect()
}

pub fn to_points(alpha: &[FieldElement]) -> Vec<EvalPoint> {
    alpha.iter().cloned().map(EvalPoint::Finite).collect()
}

/// Random GRS spec with `3 <= k <= (n-1)/2` over a random small prime field.
pub fn rand_grs_spec(rng: &mut StdRng) -> GrsSpec {
    let q = *[7u64, 11, 13].choose(rng).unwrap();
    let field = Field::prime(q).unwrap();
    let n = rng.gen_range(7..=q as usize);
    let k = rng.gen_range(3..=(n - 1) / 2);
    let alpha = rand_distinct(rng, &field, n);
    let v = rand_nonzero_vec(rng, &field, n);
    GrsSpec::new(&field, to_points(&alpha), v, k).unwrap()
}

/// A multiplicative generator of `F_q^*` for small prime q.
fn multiplicative_generator(field: &Field) -> FieldElement {
    let q = field.order() as u64;
    for g in 2..q {
        let elem = field.from_u64(g);
        let mut order = 1;
        let mut acc = elem.clone();
        while acc != field.one() {
            acc = acc.mul(&elem);
            order += 1;
        }
        if order == q - 1 {
            return elem;
        }
    }
    unreachable!("every prime field has a generator");
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// A random coset `c * H` of a multiplicative subgroup of order `m >= min_m`.
pub fn rand_coset(rng: &mut StdRng, field: &Field, min_m: usize) -> Vec<FieldElement> {
    let q1 = (field.order() - 1) as usize;
    let choices: Vec<usize> = divisors(q1).into_iter().filter(|&m| m >= min_m).collect();
    let m = *choices.choose(rng).unwrap();
    let g = multiplicative_generator(field);
    let h = g.pow((q1 / m) as u128);
    let c = rand_nonzero(rng, field);
    let mut coset = Vec::with_capacity(m);
    let mut acc = c;
    for _ in 0..m {
        coset.push(acc.clone());
        acc = acc.mul(&h);
    }
    coset.shuffle(rng);
    coset
}

/// Random GTRS spec within the regime where the anti-diagonal
/// characterization provably holds: evaluation points form a multiplicative
/// coset (optionally with 0 adjoined, in which case twists avoid the top
/// column of the twist matrix).
pub fn rand_gtrs_spec(rng: &mut StdRng) -> GtrsSpec {
    let q = *[7u64, 11, 13].choose(rng).unwrap();
    let field = Field::prime(q).unwrap();
    let with_zero = rng.gen_bool(0.5);
    let mut alpha = rand_coset(rng, &field, 3);
    if with_zero {
        alpha.push(field.zero());
        alpha.shuffle(rng);
    }
    let n = alpha.len();
    let k_hi = if with_zero { n - 2 } else { n - 1 };
    let k = rng.gen_range(1..=k_hi.min(6));
    let t_max = if with_zero { n - k - 1 } else { n - k };
    let v = rand_nonzero_vec(rng, &field, n);
    let mut positions: Vec<(usize, usize)> = (0..k)
        .flat_map(|h| (1..=t_max).map(move |t| (h, t)))
        .collect();
    positions.shuffle(rng);
    let l = rng.gen_range(0..=positions.len().min(2 * k));
    let hooks: Vec<Hook> = positions[..l]
        .iter()
        .map(|&(h, t)| Hook {
            h,
            t,
            eta: rand_nonzero(rng, &field),
        })
        .collect();
    GtrsSpec::new(&field, alpha, v, k, hooks).unwrap()
}

/// Random full-rank matrix.
pub fn rand_full_rank(rng: &mut StdRng, field: &Field, rows: usize, cols: usize) -> Matrix {
    loop {
        let data: Vec<FieldElement> = (0..rows * cols).map(|_| rand_element(rng, field)).collect();
        let m = Matrix::new(field, rows, cols, data);
        if m.rank() == rows {
            return m;
        }
    }
}

/// Random invertible square matrix.
pub fn rand_invertible(rng: &mut StdRng, field: &Field, n: usize) -> Matrix {
    rand_full_rank(rng, field, n, n)
}

pub fn rand_poly(rng: &mut StdRng, field: &Field, max_deg: usize) -> Polynomial {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<FieldElement> = (0..=deg).map(|_| rand_element(rng, field)).collect();
    Polynomial::from_coeffs(field, coeffs)
}

pub fn rand_poly_matrix(rng: &mut StdRng, field: &Field, n: usize, max_deg: usize) -> PolyMatrix {
    let data: Vec<Polynomial> = (0..n * n).map(|_| rand_poly(rng, field, max_deg)).collect();
    PolyMatrix::new(field, n, n, data)
}

/// Cofactor-expansion determinant over the polynomial ring, written directly
/// against `Polynomial` arithmetic so it shares nothing with the library's
/// Bareiss elimination.
pub fn laplace_oracle(m: &PolyMatrix) -> Polynomial {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let field = m.field();
    if n == 0 {
        return Polynomial::one(field);
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = Polynomial::zero(field);
    for j in 0..n {
        let entry = m.at(0, j);
        if entry.is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let mut data = Vec::with_capacity((n - 1) * (n - 1));
        for i in 1..n {
            for &c in &cols {
                data.push(m.at(i, c).clone());
            }
        }
        let minor = PolyMatrix::new(field, n - 1, n - 1, data);
        let term = entry.mul(&laplace_oracle(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}
