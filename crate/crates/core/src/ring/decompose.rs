//! Deciding whether a basis monomial of `F_n` is a product of lower grades.
//!
//! `z ∈ F_n` splits as `u · v` with `u ∈ F_a`, `v ∈ F_b`, `a + b = n`,
//! `a, b ≥ 1`, iff `exps(z) = α + r^a β` with `α, β ≥ 0`, `|α| = e_a` and
//! `|β| = e_b`. A longer product regroups into two factors, so a single split
//! decides generation in lower degrees.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{check_grade, Monomial, PowerRingSpec};
use crate::combinatorics::Compositions;
use crate::error::{Error, Result};

/// `z = u · v` with `u ∈ F_a`, `v ∈ F_b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionWitness {
    pub a: u32,
    pub b: u32,
    pub u: Monomial,
    pub v: Monomial,
}

impl DecompositionWitness {
    /// Recomputes the product and compares it with `z`.
    pub fn verify(&self, spec: &PowerRingSpec, z: &Monomial) -> bool {
        self.a >= 1
            && self.b >= 1
            && super::twisted_product(spec, self.a, &self.u, self.b, &self.v).is_ok_and(|p| &p == z)
    }
}

/// Residue solver.
///
/// Fix `a` and `q = r^a`. Each `α_i` must be `≡ z_i (mod q)` and at most
/// `z_i`, so `α_i = (z_i mod q) + k_i q` with `0 ≤ k_i ≤ ⌊z_i / q⌋`. The
/// split exists iff `K = (e_a - Σ (z_i mod q)) / q` is a nonnegative integer
/// no larger than `Σ ⌊z_i / q⌋`; `|β| = e_b` then follows from
/// `e_n = e_a + r^a e_b`.
pub fn is_decomposable(
    spec: &PowerRingSpec,
    z: &Monomial,
    n: u32,
) -> Result<Option<DecompositionWitness>> {
    check_grade(spec, n, z)?;
    for a in 1..n {
        let q = spec.r_pow(a);
        let e_a = spec.twist_degree(a);
        let (quots, rems): (Vec<BigUint>, Vec<BigUint>) =
            z.exps().iter().map(|e| e.div_rem(&q)).unzip();
        let rem_sum: BigUint = rems.iter().sum();
        if rem_sum > e_a {
            continue;
        }
        let (k, leftover) = (&e_a - &rem_sum).div_rem(&q);
        if !leftover.is_zero() || k > quots.iter().sum::<BigUint>() {
            continue;
        }
        let mut need = k;
        let mut alpha = rems;
        let mut beta = quots;
        for (al, be) in alpha.iter_mut().zip(beta.iter_mut()) {
            if need.is_zero() {
                break;
            }
            let take = need.clone().min(be.clone());
            *al += &take * &q;
            *be -= &take;
            need -= take;
        }
        return Ok(Some(DecompositionWitness {
            a,
            b: n - a,
            u: Monomial::new(alpha),
            v: Monomial::new(beta),
        }));
    }
    Ok(None)
}

/// Brute force: for each split `a`, run over every monomial `v` of degree
/// `e_b` and test whether `z - r^a v` is nonnegative. Independent of the
/// residue argument; only usable while `e_b` is small.
pub fn is_decomposable_exhaustive(
    spec: &PowerRingSpec,
    z: &Monomial,
    n: u32,
) -> Result<Option<DecompositionWitness>> {
    check_grade(spec, n, z)?;
    let zs = z
        .to_u64()
        .ok_or_else(|| Error::Unsupported("exhaustive search needs 64-bit exponents".into()))?;
    for a in 1..n {
        let b = n - a;
        let Ok(q) = u64::try_from(spec.r_pow(a)) else {
            continue;
        };
        let e_b = spec
            .twist_degree_u64(b)
            .ok_or_else(|| Error::Unsupported("exhaustive search needs 64-bit degrees".into()))?;
        for v in Compositions::new(e_b, spec.vars()) {
            let fits = zs
                .iter()
                .zip(&v)
                .all(|(&zi, &vi)| vi.checked_mul(q).is_some_and(|s| s <= zi));
            if fits {
                let u: Vec<u64> = zs.iter().zip(&v).map(|(&zi, &vi)| zi - vi * q).collect();
                return Ok(Some(DecompositionWitness {
                    a,
                    b,
                    u: Monomial::from_u64(&u),
                    v: Monomial::from_u64(&v),
                }));
            }
        }
    }
    Ok(None)
}
