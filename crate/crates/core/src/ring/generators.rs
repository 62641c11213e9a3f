use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{grade_dimension, is_decomposable, monomials_of_grade, twisted_product, Monomial, PowerRingSpec};
use crate::error::{Error, Result};

/// Per-grade count of monomials that are not products of lower grades.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorScan {
    pub counts: BTreeMap<u32, u64>,
    pub dimensions: BTreeMap<u32, u64>,
    /// First non-decomposable monomial of each grade, in enumeration order.
    pub samples: BTreeMap<u32, Monomial>,
}

impl GeneratorScan {
    /// No new generators in grades `2..=max`.
    pub fn generated_in_degree_one(&self) -> bool {
        self.counts.iter().filter(|(&n, _)| n >= 2).all(|(_, &c)| c == 0)
    }

    /// New generators in every grade `2..=max`.
    pub fn new_generators_every_grade(&self) -> bool {
        self.counts.iter().filter(|(&n, _)| n >= 2).all(|(_, &c)| c > 0)
    }
}

/// Counts non-decomposable monomials in grades `1..=max_n`. Grade 1 has no
/// proper splits, so all of `F_1` is counted there.
///
/// The per-grade work runs in parallel; counts do not depend on the split.
pub fn generator_degrees(spec: &PowerRingSpec, max_n: u32, budget: u64) -> Result<GeneratorScan> {
    if max_n < 1 {
        return Err(Error::InvalidArgument("max grade must be at least 1".into()));
    }
    let mut scan = GeneratorScan {
        counts: BTreeMap::new(),
        dimensions: BTreeMap::new(),
        samples: BTreeMap::new(),
    };
    for n in 1..=max_n {
        let monos = monomials_of_grade(spec, n, budget).map_err(|e| match e {
            Error::BudgetExceeded { budget, grade, .. } => {
                Error::BudgetExceeded { budget, grade, reached: n - 1 }
            }
            other => other,
        })?;
        let flags: Vec<bool> = monos
            .par_iter()
            .map(|z| {
                is_decomposable(spec, &Monomial::from_u64(z), n)
                    .map(|w| w.is_none())
                    .expect("enumerated monomials have the right degree")
            })
            .collect();
        let count = flags.iter().filter(|&&f| f).count() as u64;
        if let Some(pos) = flags.iter().position(|&f| f) {
            scan.samples.insert(n, Monomial::from_u64(&monos[pos]));
        }
        scan.counts.insert(n, count);
        scan.dimensions.insert(n, monos.len() as u64);
    }
    Ok(scan)
}

/// Monomials of grade `n` whose `x_0` exponent is `r^{n-1} - 1`.
pub fn top_residue_monomials(spec: &PowerRingSpec, n: u32, budget: u64) -> Result<Vec<Monomial>> {
    if n < 1 {
        return Ok(Vec::new());
    }
    let lead = spec.r_pow(n - 1) - 1u32;
    Ok(monomials_of_grade(spec, n, budget)?
        .into_iter()
        .map(|z| Monomial::from_u64(&z))
        .filter(|z| z.exps()[0] == lead)
        .collect())
}

/// `x_0^{r^{n-1}-1} x_1^{2i+1} x_2^{2j+1}` of grade `n` for all `i, j ≥ 0`
/// (requires `m ≥ 2`; only meaningful for `r = 2`, where the degrees add up).
pub fn odd_exponent_family(spec: &PowerRingSpec, n: u32) -> Result<Vec<Monomial>> {
    if spec.m() < 2 || n < 2 {
        return Err(Error::InvalidArgument("family needs m ≥ 2 and n ≥ 2".into()));
    }
    let e_n = spec.twist_degree(n);
    let lead = spec.r_pow(n - 1) - 1u32;
    let rest = &e_n - &lead;
    let rest = u64::try_from(rest).map_err(|_| Error::Unsupported("grade too large".into()))?;
    let mut out = Vec::new();
    let mut x1 = 1u64;
    while x1 < rest {
        let x2 = rest - x1;
        if x2 % 2 == 1 {
            let mut exps = vec![BigUint::default(); spec.vars()];
            exps[0] = lead.clone();
            exps[1] = x1.into();
            exps[2] = x2.into();
            out.push(Monomial::new(exps));
        }
        x1 += 2;
    }
    Ok(out)
}

/// Outcome of a sampled algebra-law check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlgebraLawReport {
    pub trials: u64,
    pub seed: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl AlgebraLawReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Largest grade sampled; kept small enough that `e_n` fits in 62 bits.
fn max_sample_grade(spec: &PowerRingSpec) -> u32 {
    (0..=8u32)
        .rev()
        .find(|&n| spec.twist_degree(n) < BigUint::from(1u64 << 62))
        .unwrap_or(0)
}

fn random_monomial(spec: &PowerRingSpec, n: u32, rng: &mut ChaCha8Rng) -> Monomial {
    let degree = spec.twist_degree_u64(n).expect("sample grade fits in 64 bits");
    let mut cuts: Vec<u64> = (0..spec.m()).map(|_| rng.gen_range(0..=degree)).collect();
    cuts.sort_unstable();
    let mut exps = Vec::with_capacity(spec.vars());
    let mut prev = 0;
    for c in cuts {
        exps.push(c - prev);
        prev = c;
    }
    exps.push(degree - prev);
    Monomial::from_u64(&exps)
}

/// Samples triples `(u, v, w)` of random grades and checks
/// `(u·v)·w = u·(v·w)`.
pub fn associativity_check(spec: &PowerRingSpec, trials: u64, seed: u64) -> AlgebraLawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = max_sample_grade(spec);
    let mut report = AlgebraLawReport { trials, seed, failures: 0, first_failure: None };
    for _ in 0..trials {
        let (a, b, c) = (rng.gen_range(0..=top), rng.gen_range(0..=top), rng.gen_range(0..=top));
        let u = random_monomial(spec, a, &mut rng);
        let v = random_monomial(spec, b, &mut rng);
        let w = random_monomial(spec, c, &mut rng);
        let left = twisted_product(spec, a, &u, b, &v).and_then(|uv| twisted_product(spec, a + b, &uv, c, &w));
        let right = twisted_product(spec, b, &v, c, &w).and_then(|vw| twisted_product(spec, a, &u, b + c, &vw));
        let ok = matches!((&left, &right), (Ok(l), Ok(r)) if l == r && l.degree() == spec.twist_degree(a + b + c));
        if !ok {
            report.failures += 1;
            report
                .first_failure
                .get_or_insert_with(|| format!("grades ({a},{b},{c}): u={u} v={v} w={w}"));
        }
    }
    report
}

/// Samples `v` of random grade and checks `1·v = v = v·1`.
pub fn unit_law_check(spec: &PowerRingSpec, trials: u64, seed: u64) -> AlgebraLawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = max_sample_grade(spec);
    let one = Monomial::one(spec.vars());
    let mut report = AlgebraLawReport { trials, seed, failures: 0, first_failure: None };
    for _ in 0..trials {
        let b = rng.gen_range(0..=top);
        let v = random_monomial(spec, b, &mut rng);
        let left = twisted_product(spec, 0, &one, b, &v);
        let right = twisted_product(spec, b, &v, 0, &one);
        let ok = matches!((&left, &right), (Ok(l), Ok(r)) if *l == v && *r == v);
        if !ok {
            report.failures += 1;
            report.first_failure.get_or_insert_with(|| format!("grade {b}: v={v}"));
        }
    }
    report
}

/// `dim F_n` for `n = 0..=max_n`, as exact integers.
pub fn dimension_table(spec: &PowerRingSpec, max_n: u32) -> Vec<BigUint> {
    (0..=max_n).map(|n| grade_dimension(spec, n)).collect()
}
