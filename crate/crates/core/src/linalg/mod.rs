//! Exact integer and rational matrix computations.
//!
//! Everything here is exact: characteristic polynomials come from the
//! Faddeev–LeVerrier recurrence (all divisions are exact over the integers),
//! spectral radii are certified rational enclosures from Sturm chains, and
//! ranks are computed by fraction-free elimination.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;
pub mod roots;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use matrix::IntMatrix;
pub use poly::{IntPolynomial, RatPolynomial};
pub use roots::{largest_real_root, RationalInterval, SturmChain};

use crate::error::{Error, Result};

/// Default enclosure width for spectral radii, `10^-9`.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// `det(xI - P)`, monic of degree `dim P`.
pub fn char_poly(p: &IntMatrix) -> IntPolynomial {
    let n = p.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n);
    for k in 1..=n {
        // M_k = P M_{k-1} + c_{n-k+1} I
        m = p.mul(&m).shift(&-coeffs[n - k + 1].clone());
        let t = p.mul(&m).trace();
        coeffs[n - k] = -(t / BigInt::from(k));
    }
    IntPolynomial::new(coeffs)
}

/// Certified enclosure of the spectral radius `max |λ|` of a nonsingular
/// integer matrix.
///
/// The eigenvalues of `P ⊗ P` are the products `λ_i λ_j`; the largest of
/// their moduli is `ρ²` and it is attained by the real eigenvalue
/// `λ · conj(λ)`. So `ρ` is the largest real root of `χ_{P⊗P}(x²)`. When
/// `P` preserves a cone (the case of a numerical action) this coincides with
/// the largest real root of `χ_P`.
pub fn spectral_radius_interval(p: &IntMatrix, width: &BigRational) -> Result<RationalInterval> {
    if width <= &BigRational::zero() {
        return Err(Error::InvalidArgument("width must be positive".into()));
    }
    if p.is_singular() {
        return Err(Error::SingularMatrix);
    }
    // P ⊗ P always has repeated eigenvalues; drop them before squaring x
    let q = char_poly(&p.kron(p)).to_rational().squarefree().primitive().compose_square();
    Ok(largest_real_root(&q, width).expect("ρ is a root of χ_{P⊗P}(x²)"))
}

/// True iff every eigenvalue is a root of unity, decided by stripping
/// cyclotomic factors from the characteristic polynomial.
pub fn is_quasi_unipotent(p: &IntMatrix) -> bool {
    let (_, rest) = cyclotomic::strip_cyclotomic_factors(&char_poly(p));
    rest.is_unit()
}

/// Size of the largest Jordan block for the integer eigenvalue `r`, minus one.
///
/// With `N = P - rI`, `rank N^k - rank N^{k+1}` counts blocks of size `> k`,
/// so the rank sequence stabilises exactly at the largest block size.
pub fn jordan_growth_exponent(p: &IntMatrix, r: &BigInt) -> Result<usize> {
    if !char_poly(p).eval(r).is_zero() {
        return Err(Error::NotEigenvalue { value: r.to_string() });
    }
    let n = p.shift(r);
    let mut power = n.clone();
    let mut rank = power.rank();
    let mut size = 1;
    loop {
        let next = power.mul(&n);
        let next_rank = next.rank();
        if next_rank == rank {
            return Ok(size - 1);
        }
        power = next;
        rank = next_rank;
        size += 1;
    }
}
