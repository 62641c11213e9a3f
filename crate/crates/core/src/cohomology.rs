//! Cohomology of line bundles `O(d)` on `P^m`, and the vanishing scans used
//! as ampleness witnesses for the power-map sequence.
//!
//! For the power map `σ` of degree `r` on coordinates, `σ^* O(t) = O(r t)`
//! and `L_n = O(e_n)`. Twisting on the right by `O(t)` gives `O(t + e_n)`.
//! Twisting on the left pulls `O(t)` back through `σ^n` first, so the left
//! module `L_n ⊗ (σ^n)^* O(t)` is `O(e_n + r^n t)`. Both have the cohomology
//! of the corresponding bimodule tensor product because `(1, σ^n)` is finite.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ring::PowerRingSpec;

/// `dim H^q(P^m, O(d))`.
///
/// `h^0 = C(d + m, m)` for `d ≥ 0`, `h^m = C(-d - 1, m)` for `d ≤ -m - 1`,
/// and everything else vanishes.
pub fn h(m: usize, d: &BigInt, q: usize) -> Result<BigUint> {
    if m < 1 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    if q > m {
        return Err(Error::InvalidArgument(format!("q = {q} outside 0..={m}")));
    }
    let mm = BigInt::from(m);
    if q == 0 && !d.is_negative() {
        return Ok(binomial(&(d + &mm).magnitude().clone(), m as u64));
    }
    if q == m && *d <= -(&mm + 1u32) {
        let n: BigInt = -d - 1u32;
        return Ok(binomial(n.magnitude(), m as u64));
    }
    Ok(BigUint::zero())
}

/// `h^q` vanishes for every `q > 0`.
pub fn higher_vanishing(m: usize, d: &BigInt) -> bool {
    (1..=m).all(|q| h(m, d, q).expect("q in range").is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub n: u32,
    #[serde(serialize_with = "ser_display")]
    pub degree: BigInt,
    pub q: usize,
    #[serde(serialize_with = "ser_display")]
    pub h: BigUint,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `h^q(P^m, O(d_n))` for a sequence of degrees indexed by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub m: usize,
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn from_degrees(m: usize, degrees: impl IntoIterator<Item = (u32, BigInt)>) -> Result<Self> {
        let mut rows = Vec::new();
        for (n, d) in degrees {
            for q in 0..=m {
                rows.push(CohomologyRow { n, degree: d.clone(), q, h: h(m, &d, q)? });
            }
        }
        Ok(Self { m, rows })
    }

    pub fn get(&self, n: u32, q: usize) -> Option<&BigUint> {
        self.rows.iter().find(|r| r.n == n && r.q == q).map(|r| &r.h)
    }

    /// CSV with header `n,degree,q,h`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(["n", "degree", "q", "h"]).map_err(io)?;
        for r in &self.rows {
            w.write_record([r.n.to_string(), r.degree.to_string(), r.q.to_string(), r.h.to_string()])
                .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

fn require_power_map(spec: &PowerRingSpec) -> Result<()> {
    if spec.r() < 2 {
        return Err(Error::InvalidArgument("vanishing scans need r ≥ 2".into()));
    }
    Ok(())
}

/// Degree of `O(t) ⊗ L_n`.
pub fn right_twist_degree(spec: &PowerRingSpec, t: &BigInt, n: u32) -> BigInt {
    t + BigInt::from(spec.twist_degree(n))
}

/// Degree of `L_n ⊗ (σ^n)^* O(t)`.
pub fn left_twist_degree(spec: &PowerRingSpec, t: &BigInt, n: u32) -> BigInt {
    BigInt::from(spec.twist_degree(n)) + BigInt::from(Pow::pow(BigUint::from(spec.r()), n)) * t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightScan {
    #[serde(serialize_with = "ser_display")]
    pub t: BigInt,
    pub max_n: u32,
    /// Smallest `n₀` with higher cohomology vanishing for all `n₀ ≤ n ≤ max_n`;
    /// `None` when it fails at `max_n`.
    pub n0: Option<u32>,
    pub table: CohomologyTable,
}

/// Right twists `O(t + e_n)` for `n = 0..=max_n`.
pub fn right_vanishing_scan(spec: &PowerRingSpec, t: &BigInt, max_n: u32) -> Result<RightScan> {
    require_power_map(spec)?;
    let degrees: Vec<(u32, BigInt)> = (0..=max_n).map(|n| (n, right_twist_degree(spec, t, n))).collect();
    let mut n0 = None;
    for (n, d) in degrees.iter().rev() {
        if !higher_vanishing(spec.m(), d) {
            break;
        }
        n0 = Some(*n);
    }
    let table = CohomologyTable::from_degrees(spec.m(), degrees)?;
    Ok(RightScan { t: t.clone(), max_n, n0, table })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LeftVerdict {
    /// `h^q ≠ 0` for every `n` in the trailing window: left ampleness fails
    /// for the twist `O(t)`.
    NonVanishing { q: usize, from_n: u32 },
    /// Higher cohomology vanishes from `n0` on.
    Vanishing { n0: u32 },
    /// Neither pattern holds over the window.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeftScan {
    #[serde(serialize_with = "ser_display")]
    pub t: BigInt,
    pub max_n: u32,
    pub verdict: LeftVerdict,
    pub table: CohomologyTable,
}

/// Left twists `O(e_n + r^n t)` for `n = 0..=max_n`. The trailing window is
/// the upper half `⌈max_n/2⌉..=max_n`.
pub fn left_vanishing_scan(spec: &PowerRingSpec, t: &BigInt, max_n: u32) -> Result<LeftScan> {
    require_power_map(spec)?;
    let m = spec.m();
    let degrees: Vec<(u32, BigInt)> = (0..=max_n).map(|n| (n, left_twist_degree(spec, t, n))).collect();
    let from_n = max_n.div_ceil(2);
    let trailing = &degrees[from_n as usize..];
    let persistent = (1..=m).find(|&q| trailing.iter().all(|(_, d)| !h(m, d, q).unwrap().is_zero()));
    let verdict = match persistent {
        Some(q) => LeftVerdict::NonVanishing { q, from_n },
        None => {
            let mut n0 = None;
            for (n, d) in degrees.iter().rev() {
                if !higher_vanishing(m, d) {
                    break;
                }
                n0 = Some(*n);
            }
            match n0 {
                Some(n0) => LeftVerdict::Vanishing { n0 },
                None => LeftVerdict::Inconclusive,
            }
        }
    };
    let table = CohomologyTable::from_degrees(m, degrees)?;
    Ok(LeftScan { t: t.clone(), max_n, verdict, table })
}
