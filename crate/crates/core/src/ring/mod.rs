//! The twisted homogeneous coordinate ring of `P^m` under `x_i ↦ x_i^r`.
//!
//! Grade `n` is the space of forms of degree `e_n = 1 + r + ... + r^{n-1}`,
//! and for `u ∈ F_a`, `v ∈ F_b` the product is `u · σ^a(v)`, i.e. exponent
//! vectors combine as `exps(u) + r^a · exps(v)`. Products of monomials are
//! monomials with coefficient one, so questions about generation reduce to
//! combinatorics of exponent vectors.
//!
//! `r = p` prime is the relative Frobenius in characteristic `p`. Any
//! `r ≥ 2` gives a finite endomorphism over any field, so the code accepts
//! general `r`; `r = 1` is the ordinary polynomial ring.

mod decompose;
mod generators;

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

pub use decompose::{is_decomposable, is_decomposable_exhaustive, DecompositionWitness};
pub use generators::{
    associativity_check, dimension_table, generator_degrees, odd_exponent_family,
    top_residue_monomials, unit_law_check, AlgebraLawReport, GeneratorScan,
};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Default cap on the number of monomials enumerated per grade.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `P^m` with the power map `x_i ↦ x_i^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PowerRingSpec {
    m: usize,
    r: u64,
}

impl PowerRingSpec {
    pub fn new(m: usize, r: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        if r < 1 {
            return Err(Error::InvalidArgument("r must be at least 1".into()));
        }
        Ok(Self { m, r })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Number of coordinates, `m + 1`.
    pub fn vars(&self) -> usize {
        self.m + 1
    }

    /// `e_n = (r^n - 1)/(r - 1)`, or `n` when `r = 1`.
    pub fn twist_degree(&self, n: u32) -> BigUint {
        twist_degree(self.r, n)
    }

    pub fn r_pow(&self, a: u32) -> BigUint {
        Pow::pow(BigUint::from(self.r), a)
    }

    /// `e_n` as `u64`, when it fits.
    pub fn twist_degree_u64(&self, n: u32) -> Option<u64> {
        u64::try_from(self.twist_degree(n)).ok()
    }
}

pub fn twist_degree(r: u64, n: u32) -> BigUint {
    let r = BigUint::from(r);
    let mut e = BigUint::zero();
    for _ in 0..n {
        e = e * &r + 1u32;
    }
    e
}

/// A monomial `x_0^{e_0} ... x_m^{e_m}`, identified with its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<BigUint>,
}

impl Monomial {
    pub fn new(exps: Vec<BigUint>) -> Self {
        Self { exps }
    }

    pub fn from_u64(exps: &[u64]) -> Self {
        Self { exps: exps.iter().map(|&e| BigUint::from(e)).collect() }
    }

    pub fn one(vars: usize) -> Self {
        Self { exps: vec![BigUint::zero(); vars] }
    }

    pub fn exps(&self) -> &[BigUint] {
        &self.exps
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> BigUint {
        self.exps.iter().sum()
    }

    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.exps.iter().map(|e| u64::try_from(e).ok()).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e.is_one() {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = self.exps.iter().map(crate::json::uint).collect();
        v.serialize(s)
    }
}

fn check_grade(spec: &PowerRingSpec, grade: u32, mono: &Monomial) -> Result<()> {
    if mono.vars() != spec.vars() {
        return Err(Error::DimensionMismatch { expected: spec.vars(), got: mono.vars() });
    }
    let expected = spec.twist_degree(grade);
    let actual = mono.degree();
    if expected != actual {
        return Err(Error::DegreeMismatch {
            grade,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(())
}

/// Product `u · v` of `u ∈ F_a` and `v ∈ F_b`, landing in `F_{a+b}`.
pub fn twisted_product(
    spec: &PowerRingSpec,
    a: u32,
    u: &Monomial,
    b: u32,
    v: &Monomial,
) -> Result<Monomial> {
    check_grade(spec, a, u)?;
    check_grade(spec, b, v)?;
    let shift = spec.r_pow(a);
    Ok(Monomial::new(
        u.exps.iter().zip(&v.exps).map(|(x, y)| x + &shift * y).collect(),
    ))
}

/// `dim F_n = C(e_n + m, m)`.
pub fn grade_dimension(spec: &PowerRingSpec, n: u32) -> BigUint {
    binomial(&(spec.twist_degree(n) + spec.m), spec.m as u64)
}

/// All monomials of grade `n`, or `BudgetExceeded` when there are more
/// than `budget` of them.
pub fn monomials_of_grade(spec: &PowerRingSpec, n: u32, budget: u64) -> Result<Vec<Vec<u64>>> {
    let dim = grade_dimension(spec, n);
    if dim > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { budget, grade: n, reached: n.saturating_sub(1) });
    }
    let degree = spec.twist_degree_u64(n).expect("degree bounded by the budget");
    Ok(crate::combinatorics::Compositions::new(degree, spec.vars()).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GrowthClass {
    PolynomialBounded,
    Exponential,
}

/// `1 + 1/16`.
pub fn default_growth_threshold() -> BigRational {
    BigRational::new(17u32.into(), 16u32.into())
}

/// Classifies a dimension sequence with the default threshold.
pub fn growth_class(dims: &[BigUint]) -> Result<GrowthClass> {
    growth_class_with(dims, &default_growth_threshold())
}

/// Exponential iff the successive ratios over the last half of the window
/// stay at or above `threshold`, and so does their extrapolated limit.
///
/// The limit is read off the last two ratios with the model
/// `ρ_k ≈ 1 + A + B/k` (`k` the 1-based ratio index). Polynomial growth
/// `k^d` has `ρ_k - 1 ≈ d/k`, so `A ≈ 0` even when a short window still shows
/// large ratios, while exponential growth keeps `1 + A` near the base.
pub fn growth_class_with(dims: &[BigUint], threshold: &BigRational) -> Result<GrowthClass> {
    if dims.len() < 4 {
        return Err(Error::InvalidArgument(format!(
            "growth classification needs at least 4 terms, got {}",
            dims.len()
        )));
    }
    if dims.iter().any(Zero::is_zero) {
        return Err(Error::InvalidArgument("dimensions must be positive".into()));
    }
    let to_q = |v: &BigUint| BigRational::from_integer(v.clone().into());
    let ratios: Vec<BigRational> = dims.windows(2).map(|w| to_q(&w[1]) / to_q(&w[0])).collect();
    let tail = &ratios[ratios.len() / 2..];
    let min_tail_ok = tail.iter().all(|q| q >= threshold);

    let one = BigRational::one();
    let k = BigRational::from_integer(ratios.len().into());
    let k_prev = &k - &one;
    let last = &ratios[ratios.len() - 1];
    let prev = &ratios[ratios.len() - 2];
    let limit = &one + (&k * (last - &one) - &k_prev * (prev - &one));

    Ok(if min_tail_ok && &limit >= threshold {
        GrowthClass::Exponential
    } else {
        GrowthClass::PolynomialBounded
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: usize, r: u64) -> PowerRingSpec {
        PowerRingSpec::new(m, r).unwrap()
    }

    fn dims(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(PowerRingSpec::new(0, 2).is_err());
        assert!(PowerRingSpec::new(1, 0).is_err());
    }

    #[test]
    fn twist_degrees() {
        let s = spec(1, 3);
        let e: Vec<BigUint> = (0..5).map(|n| s.twist_degree(n)).collect();
        assert_eq!(e, dims(&[0, 1, 4, 13, 40]));
        assert_eq!(spec(2, 1).twist_degree(7), BigUint::from(7u32));
    }

    #[test]
    fn grading_identity() {
        for r in [1u64, 2, 3, 5] {
            let s = spec(1, r);
            for a in 0..=12 {
                for b in 0..=12 {
                    assert_eq!(s.twist_degree(a + b), s.twist_degree(a) + s.r_pow(a) * s.twist_degree(b));
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(grade_dimension(&spec(1, 2), 3), BigUint::from(8u32));
        assert_eq!(grade_dimension(&spec(4, 7), 0), BigUint::one());
        assert_eq!(grade_dimension(&spec(2, 3), 2), BigUint::from(15u32));
    }

    #[test]
    fn product_examples() {
        let s = spec(1, 2);
        let x = Monomial::from_u64(&[1, 0]);
        let y = Monomial::from_u64(&[0, 1]);
        assert_eq!(twisted_product(&s, 1, &x, 1, &y).unwrap(), Monomial::from_u64(&[1, 2]));
        let one = Monomial::one(2);
        assert_eq!(twisted_product(&s, 0, &one, 1, &y).unwrap(), y);
        let s3 = spec(1, 3);
        let v = Monomial::from_u64(&[1, 3]);
        let got = twisted_product(&s3, 1, &x, 2, &v).unwrap();
        assert_eq!(got, Monomial::from_u64(&[4, 9]));
        assert_eq!(got.degree(), s3.twist_degree(3));
    }

    #[test]
    fn product_rejects_wrong_grade() {
        let s = spec(1, 2);
        let e = twisted_product(&s, 2, &Monomial::from_u64(&[1, 0]), 1, &Monomial::from_u64(&[0, 1]));
        assert!(matches!(e, Err(Error::DegreeMismatch { grade: 2, .. })));
        let e = twisted_product(&s, 1, &Monomial::from_u64(&[1, 0, 0]), 1, &Monomial::from_u64(&[0, 1]));
        assert!(matches!(e, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn growth_examples() {
        assert_eq!(growth_class(&dims(&[1, 2, 4, 8, 16])).unwrap(), GrowthClass::Exponential);
        assert_eq!(growth_class(&dims(&[1, 4, 9, 16, 25])).unwrap(), GrowthClass::PolynomialBounded);
        let f: Vec<BigUint> = (0..=8).map(|n| grade_dimension(&spec(1, 2), n)).collect();
        assert_eq!(growth_class(&f).unwrap(), GrowthClass::Exponential);
        // r = 1 is the polynomial ring: C(n + 2, 2)
        let poly: Vec<BigUint> = (0..=10).map(|n| grade_dimension(&spec(2, 1), n)).collect();
        assert_eq!(growth_class(&poly).unwrap(), GrowthClass::PolynomialBounded);
        assert!(growth_class(&dims(&[1, 2, 4])).is_err());
        assert!(growth_class(&dims(&[1, 0, 4, 5])).is_err());
    }

    #[test]
    fn monomial_display() {
        assert_eq!(Monomial::from_u64(&[3, 1, 3]).to_string(), "x0^3*x1*x2^3");
        assert_eq!(Monomial::one(2).to_string(), "1");
    }

    #[test]
    fn enumeration_respects_budget() {
        let s = spec(1, 2);
        assert_eq!(monomials_of_grade(&s, 3, 100).unwrap().len(), 8);
        assert!(matches!(monomials_of_grade(&s, 8, 100), Err(Error::BudgetExceeded { grade: 8, .. })));
    }
}
