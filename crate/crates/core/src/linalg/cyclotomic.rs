//! Cyclotomic polynomials and the root-of-unity test for integer polynomials.

use super::poly::IntPolynomial;

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut n_left = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n_left {
        if n_left.is_multiple_of(p) {
            while n_left.is_multiple_of(p) {
                n_left /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n_left > 1 {
        result -= result / n_left;
    }
    result
}

/// `Φ_n`, built as `(x^n - 1) / ∏_{d | n, d < n} Φ_d`.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    assert!(n > 0, "cyclotomic index must be positive");
    let mut p = IntPolynomial::x_pow_minus_one(n);
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p
                .div_exact_monic(&cyclotomic(d))
                .expect("Φ_d divides x^n - 1 for d | n");
        }
    }
    p
}

/// Every `n` with `φ(n) ≤ degree`. Uses `φ(n) ≥ sqrt(n / 2)`, so `n ≤ 2·degree²`.
pub fn indices_up_to_totient(degree: usize) -> Vec<usize> {
    let limit = 2 * degree * degree + 2;
    (1..=limit)
        .filter(|&n| totient(n as u64) as usize <= degree)
        .collect()
}

/// Factors a monic integer polynomial into cyclotomic factors. Returns the
/// multiplicity of each `Φ_n` found and the cofactor left over.
pub fn strip_cyclotomic_factors(p: &IntPolynomial) -> (Vec<(usize, usize)>, IntPolynomial) {
    let degree = p.degree().unwrap_or(0);
    let mut rest = p.clone();
    let mut found = Vec::new();
    for n in indices_up_to_totient(degree) {
        let phi = cyclotomic(n);
        let mut mult = 0;
        while rest.degree().unwrap_or(0) >= phi.degree().unwrap() {
            match rest.div_exact_monic(&phi) {
                Some(q) => {
                    rest = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            found.push((n, mult));
        }
    }
    (found, rest)
}
