//! Identifiers for the results that back each reported verdict.

use serde::Serialize;

/// `r > 1` forbids left ampleness of the twisted sequence.
pub const NOT_LEFT_AMPLE: &str = "not-left-ample";
/// An ample eigenvector of the numerical action gives right ampleness.
pub const AMPLE_EIGENVECTOR: &str = "ample-eigenvector";
/// Automorphism case: left ⇔ right ⇔ (`L_n` eventually ample and `r = 1`).
pub const AUTOMORPHISM_CRITERION: &str = "automorphism-criterion";
/// Spectral radius is an eigenvalue and is at least 1; `r > 1` off automorphisms.
pub const SPECTRAL_RADIUS: &str = "spectral-radius-eigenvalue";
/// Growth of `(P^m D . C)` bounded by `c m^j r^m`.
pub const ORBIT_GROWTH: &str = "orbit-growth";
/// Growth of the partial sums `(Δ_m . C)` when `r > 1`.
pub const SUM_GROWTH: &str = "sum-growth";
/// Explicit ample `H` with `Δ_m - (σ^m)^* H` never ample.
pub const NON_LEFT_AMPLE_DIVISORS: &str = "non-left-ample-divisors";
/// Finite generation of the power-map ring on projective space.
pub const FROBENIUS_EXAMPLE: &str = "frobenius-example";
/// Exponential growth makes the ring neither left nor right noetherian.
pub const NONNOETHERIAN_RING: &str = "nonnoetherian-ring";
/// The graded pieces multiply into each other associatively.
pub const GRADED_ALGEBRA: &str = "graded-algebra";
/// `((P^m D)^{dim X}) = (deg σ)^m (D^{dim X})`.
pub const DEGREE_IDENTITY: &str = "degree-identity";
/// Ampleness of invertible twists decides sequence ampleness.
pub const AMPLENESS_EQUIVALENCES: &str = "ampleness-equivalences";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub id: &'static str,
    pub detail: String,
}

impl Reason {
    pub fn new(id: &'static str, detail: impl Into<String>) -> Self {
        Self { id, detail: detail.into() }
    }
}
