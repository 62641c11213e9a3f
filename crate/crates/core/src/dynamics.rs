//! Divisor classes under a numerical action.
//!
//! A [`NumericalActionSpec`] fixes the integer matrix `P` by which pullback
//! acts on `Num(X) ≅ Z^ℓ`, together with a list of curve functionals. A class
//! is treated as ample iff it pairs strictly positively with every listed
//! curve. That is exact when the list is a full dual description of the nef
//! cone (toric inputs, Picard rank one) and an approximation otherwise.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::citation::{self, Reason};
use crate::error::{Error, Result};
use crate::json;
use crate::linalg::{self, IntMatrix, RationalInterval};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass(pub Vec<BigInt>);

impl DivisorClass {
    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|v| v * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveFunctional(pub Vec<BigInt>);

impl CurveFunctional {
    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Intersection number `(D . C)`.
    pub fn pair(&self, d: &DivisorClass) -> Result<BigInt> {
        if d.rank() != self.0.len() {
            return Err(Error::DimensionMismatch { expected: self.0.len(), got: d.rank() });
        }
        Ok(self.0.iter().zip(&d.0).map(|(a, b)| a * b).sum())
    }
}

/// Numerical action of an endomorphism on `Num(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalActionSpec {
    action: IntMatrix,
    curves: Vec<CurveFunctional>,
    dim_x: u32,
    deg_sigma: Option<BigInt>,
    ample_flag: Option<bool>,
}

impl NumericalActionSpec {
    pub fn new(action: IntMatrix, curves: Vec<CurveFunctional>, dim_x: u32) -> Result<Self> {
        if action.is_singular() {
            return Err(Error::SingularMatrix);
        }
        if curves.is_empty() {
            return Err(Error::InvalidArgument("at least one curve is required".into()));
        }
        for c in &curves {
            if c.0.len() != action.dim() {
                return Err(Error::DimensionMismatch { expected: action.dim(), got: c.0.len() });
            }
        }
        if dim_x == 0 {
            return Err(Error::InvalidArgument("dimX must be positive".into()));
        }
        Ok(Self { action, curves, dim_x, deg_sigma: None, ample_flag: None })
    }

    pub fn with_deg_sigma(mut self, deg: BigInt) -> Result<Self> {
        if !deg.is_positive() {
            return Err(Error::InvalidArgument("degSigma must be positive".into()));
        }
        self.deg_sigma = Some(deg);
        Ok(self)
    }

    pub fn with_ample_flag(mut self, flag: bool) -> Self {
        self.ample_flag = Some(flag);
        self
    }

    /// Reads `{"P": [[..]], "curves": [[..]], "dimX": n, "degSigma": n, "ampleFlag": bool}`.
    /// Only `P` and `curves` are required; `dimX` defaults to 1.
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("action spec must be a JSON object".into()))?;
        let action = json::parse_matrix(obj.get("P").ok_or_else(|| Error::Parse("missing \"P\"".into()))?)?;
        let curves = json::parse_vectors(
            obj.get("curves").ok_or_else(|| Error::Parse("missing \"curves\"".into()))?,
        )?
        .into_iter()
        .map(CurveFunctional)
        .collect();
        let dim_x = match obj.get("dimX") {
            None | Some(Value::Null) => 1,
            Some(v) => v
                .as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| Error::Parse("dimX must be a positive integer".into()))?,
        };
        let mut spec = Self::new(action, curves, dim_x)?;
        if let Some(d) = obj.get("degSigma").filter(|v| !v.is_null()) {
            spec = spec.with_deg_sigma(json::parse_int(d)?)?;
        }
        if let Some(f) = obj.get("ampleFlag").filter(|v| !v.is_null()) {
            let f = f.as_bool().ok_or_else(|| Error::Parse("ampleFlag must be a boolean".into()))?;
            spec = spec.with_ample_flag(f);
        }
        Ok(spec)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "P": json::matrix(&self.action),
            "curves": self.curves.iter().map(|c| json::vector(&c.0)).collect::<Vec<_>>(),
            "dimX": self.dim_x,
        });
        if let Some(d) = &self.deg_sigma {
            v["degSigma"] = json::int(d);
        }
        if let Some(f) = self.ample_flag {
            v["ampleFlag"] = Value::Bool(f);
        }
        v
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn curves(&self) -> &[CurveFunctional] {
        &self.curves
    }

    pub fn rank(&self) -> usize {
        self.action.dim()
    }

    pub fn dim_x(&self) -> u32 {
        self.dim_x
    }

    pub fn deg_sigma(&self) -> Option<&BigInt> {
        self.deg_sigma.as_ref()
    }

    pub fn ample_flag(&self) -> Option<bool> {
        self.ample_flag
    }

    fn check(&self, d: &DivisorClass) -> Result<()> {
        if d.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: d.rank() });
        }
        Ok(())
    }

    /// Strict positivity against every listed curve.
    pub fn is_ample(&self, d: &DivisorClass) -> Result<bool> {
        self.check(d)?;
        for c in &self.curves {
            if !c.pair(d)?.is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn apply(&self, d: &DivisorClass) -> Result<DivisorClass> {
        Ok(DivisorClass(self.action.mul_vec(&d.0)?))
    }

    /// `P^m D` for `m = 0..=max_m`.
    pub fn orbit(&self, d: &DivisorClass, max_m: usize) -> Result<Vec<DivisorClass>> {
        self.check(d)?;
        let mut out = Vec::with_capacity(max_m + 1);
        let mut cur = d.clone();
        for _ in 0..max_m {
            let next = self.apply(&cur)?;
            out.push(cur);
            cur = next;
        }
        out.push(cur);
        Ok(out)
    }
}

/// `[(P^m D . C)]` for `m = 0..=max_m`.
pub fn orbit_pairings(
    spec: &NumericalActionSpec,
    d: &DivisorClass,
    c: &CurveFunctional,
    max_m: usize,
) -> Result<Vec<BigInt>> {
    spec.check(&DivisorClass(c.0.clone()))?;
    spec.orbit(d, max_m)?.iter().map(|v| c.pair(v)).collect()
}

/// `[(Δ_m . C)]` for `m = 1..=max_m`, where `Δ_m = D + PD + ... + P^{m-1} D`.
pub fn delta_sequence(
    spec: &NumericalActionSpec,
    d: &DivisorClass,
    c: &CurveFunctional,
    max_m: usize,
) -> Result<Vec<BigInt>> {
    let orbit = orbit_pairings(spec, d, c, max_m.saturating_sub(1))?;
    let mut acc = BigInt::zero();
    Ok(orbit
        .into_iter()
        .take(max_m)
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect())
}

/// Fitted constant for `seq[i] ≤ c · m^j · r^m` with `m = first_m + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthFit {
    /// A finite constant always exists over a finite window.
    pub bounded: bool,
    /// Smallest `c` satisfying the bound over the window.
    pub constant: BigRational,
    /// Index of the term attaining `constant`.
    pub argmax: usize,
    pub j: u32,
}

/// Fits `seq[i] ≤ c m^j r^m` using the upper end of the radius enclosure.
///
/// Terms with `m = 0` are only constrained when `j = 0` (`0^0 = 1`).
pub fn growth_bound_check(
    seq: &[BigInt],
    first_m: usize,
    r: &RationalInterval,
    j: u32,
) -> Result<GrowthFit> {
    if seq.is_empty() {
        return Err(Error::InvalidArgument("growth check needs a nonempty sequence".into()));
    }
    if !r.lo().is_positive() {
        return Err(Error::InvalidArgument("radius enclosure must be positive".into()));
    }
    let mut best: Option<(BigRational, usize)> = None;
    let mut r_pow = Pow::pow(r.hi(), first_m);
    for (i, v) in seq.iter().enumerate() {
        let m = first_m + i;
        if m > 0 || j == 0 {
            let scale = BigRational::from_integer(BigInt::from(m).pow(j)) * &r_pow;
            let ratio = BigRational::from_integer(v.clone()) / scale;
            if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
                best = Some((ratio, i));
            }
        }
        r_pow *= r.hi();
    }
    let (constant, argmax) =
        best.ok_or_else(|| Error::InvalidArgument("no term with m ≥ 1 to fit".into()))?;
    Ok(GrowthFit { bounded: true, constant, argmax, j })
}

/// Search limits for [`non_left_ample_witness`].
#[derive(Debug, Clone)]
pub struct WitnessConfig {
    /// Largest multiple `k` of the ample class tried.
    pub max_multiplier: BigInt,
    /// Verified horizon `M₀`.
    pub horizon: usize,
    pub width: BigRational,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        Self {
            max_multiplier: BigInt::from(1u32 << 16),
            horizon: 64,
            width: linalg::default_width(),
        }
    }
}

/// Ample `H = k·A` and a curve `C` with `(Δ_m - P^m H . C) < 0` for
/// `1 ≤ m ≤ horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonLeftAmpleWitness {
    pub multiplier: BigInt,
    pub h: DivisorClass,
    pub curve_index: usize,
    pub curve: CurveFunctional,
    pub horizon: usize,
    pub jordan_exponent: u32,
    /// `false` when `r` is irrational and `j = 0` was assumed.
    pub jordan_exact: bool,
    /// Lower growth constant of `(P^m A . C)`.
    pub c2: BigRational,
    /// Upper growth constant of `(Δ_m . C)`.
    pub c3: BigRational,
    /// `(Δ_m - P^m H . C)` for `m = 1..=horizon`, all negative.
    pub margins: Vec<BigInt>,
}

/// Builds the witness by the constant comparison `k·c₂ > c₃`, then raises `k`
/// until the inequality is verified exactly over the horizon.
///
/// `c₃ = c₁ / (r - 1)` where `c₁` bounds `(P^i D . C) ≤ c₁ max(i,1)^j r^i`;
/// this is the geometric-series bound on `Σ_{i<m} i^j r^i`.
pub fn non_left_ample_witness(
    spec: &NumericalActionSpec,
    d: &DivisorClass,
    ample: &DivisorClass,
    config: &WitnessConfig,
) -> Result<NonLeftAmpleWitness> {
    spec.check(d)?;
    spec.check(ample)?;
    if config.horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    if !spec.is_ample(ample)? {
        return Err(Error::InvalidArgument("supplied class is not ample against the curve list".into()));
    }
    let r = linalg::spectral_radius_interval(spec.action(), &config.width)?;
    if r.lo() <= &BigRational::one() {
        return Err(Error::InvalidArgument(format!(
            "spectral radius {r} is not certified above 1"
        )));
    }
    let (j, jordan_exact) = match r.as_integer() {
        Some(k) => (linalg::jordan_growth_exponent(spec.action(), &k)? as u32, true),
        None => (0, false),
    };
    let horizon = config.horizon;
    let d_orbit = spec.orbit(d, horizon)?;
    let a_orbit = spec.orbit(ample, horizon)?;
    let r_hi = r.hi().clone();
    let growth = |m: usize| {
        BigRational::from_integer(BigInt::from(m.max(1)).pow(j)) * Pow::pow(&r_hi, m)
    };

    let mut best: Option<NonLeftAmpleWitness> = None;
    for (idx, c) in spec.curves().iter().enumerate() {
        let a: Vec<BigInt> = a_orbit.iter().map(|v| c.pair(v)).collect::<Result<_>>()?;
        let orbit: Vec<BigInt> = d_orbit.iter().map(|v| c.pair(v)).collect::<Result<_>>()?;
        let mut delta = Vec::with_capacity(horizon);
        let mut acc = BigInt::zero();
        for v in &orbit[..horizon] {
            acc += v;
            delta.push(acc.clone());
        }

        let c2 = (1..=horizon)
            .map(|m| BigRational::from_integer(a[m].clone()) / growth(m))
            .min()
            .unwrap();
        if !c2.is_positive() {
            continue;
        }
        let c1 = (0..horizon)
            .map(|i| BigRational::from_integer(orbit[i].clone()) / growth(i))
            .max()
            .unwrap()
            .max(BigRational::zero());
        let c3 = &c1 / (&r_hi - BigRational::one());

        let mut k = (&c3 / &c2).floor().to_integer() + 1;
        for m in 1..=horizon {
            let need = delta[m - 1].div_floor(&a[m]) + 1;
            if need > k {
                k = need;
            }
        }
        if k < BigInt::one() {
            k = BigInt::one();
        }
        if k > config.max_multiplier {
            continue;
        }
        let margins: Vec<BigInt> = (1..=horizon).map(|m| &delta[m - 1] - &k * &a[m]).collect();
        debug_assert!(margins.iter().all(Signed::is_negative));
        if best.as_ref().is_some_and(|b| b.multiplier <= k) {
            continue;
        }
        best = Some(NonLeftAmpleWitness {
            h: ample.scale(&k),
            multiplier: k,
            curve_index: idx,
            curve: c.clone(),
            horizon,
            jordan_exponent: j,
            jordan_exact,
            c2,
            c3,
            margins,
        });
    }
    best.ok_or_else(|| {
        Error::Undetermined(format!(
            "no curve gives a multiplier k ≤ {} over horizon {horizon}",
            config.max_multiplier
        ))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmplenessReport {
    pub left: Verdict,
    pub right: Verdict,
    pub spectral_radius: RationalInterval,
    pub quasi_unipotent: bool,
    pub ample_eigenvector: Option<DivisorClass>,
    pub reasons: Vec<Reason>,
}

/// `λ` with `P D = λ D`, if `D` is a nonzero eigenvector.
pub fn eigenvalue_of(p: &IntMatrix, d: &DivisorClass) -> Result<Option<BigRational>> {
    let image = p.mul_vec(&d.0)?;
    let Some(pivot) = d.0.iter().position(|v| !v.is_zero()) else {
        return Ok(None);
    };
    let lambda = BigRational::new(image[pivot].clone(), d.0[pivot].clone());
    let consistent = image
        .iter()
        .zip(&d.0)
        .all(|(y, x)| BigRational::from_integer(y.clone()) == &lambda * BigRational::from_integer(x.clone()));
    Ok(consistent.then_some(lambda))
}

/// Spectral radius enclosure refined until it separates from 1, unless the
/// action is quasi-unipotent (then `r = 1` exactly).
fn separated_radius(p: &IntMatrix, quasi_unipotent: bool) -> Result<RationalInterval> {
    let mut width = linalg::default_width();
    let mut r = linalg::spectral_radius_interval(p, &width)?;
    if quasi_unipotent {
        return Ok(r);
    }
    let shrink = BigRational::from_integer(BigInt::from(1u32 << 16));
    for _ in 0..16 {
        if r.lo() > &BigRational::one() {
            break;
        }
        width /= &shrink;
        r = linalg::spectral_radius_interval(p, &width)?;
    }
    Ok(r)
}

/// Three-valued left/right ampleness of the sequence attached to `O_X(D)`.
pub fn classify_ampleness(spec: &NumericalActionSpec, d: &DivisorClass) -> Result<AmplenessReport> {
    spec.check(d)?;
    let p = spec.action();
    let quasi_unipotent = linalg::is_quasi_unipotent(p);
    let r = separated_radius(p, quasi_unipotent)?;
    let d_ample = spec.is_ample(d)?;
    let mut reasons = Vec::new();
    let mut ample_eigenvector = None;

    let (left, right) = if quasi_unipotent {
        reasons.push(Reason::new(
            citation::SPECTRAL_RADIUS,
            "characteristic polynomial is a product of cyclotomic factors, so r = 1",
        ));
        match spec.ample_flag() {
            Some(true) => {
                reasons.push(Reason::new(
                    citation::AUTOMORPHISM_CRITERION,
                    "r = 1 and L_n is asserted eventually ample: left and right ample",
                ));
                (Verdict::Yes, Verdict::Yes)
            }
            Some(false) => {
                reasons.push(Reason::new(
                    citation::AUTOMORPHISM_CRITERION,
                    "r = 1 but L_n is asserted not eventually ample: neither left nor right ample",
                ));
                (Verdict::No, Verdict::No)
            }
            None => {
                reasons.push(Reason::new(
                    citation::AUTOMORPHISM_CRITERION,
                    "r = 1: the verdict depends on eventual ampleness of L_n, which was not supplied (ampleFlag)",
                ));
                (Verdict::Undetermined, Verdict::Undetermined)
            }
        }
    } else if r.lo() > &BigRational::one() {
        reasons.push(Reason::new(
            citation::NOT_LEFT_AMPLE,
            format!("certified spectral radius {r} exceeds 1"),
        ));
        let eigen = eigenvalue_of(p, d)?;
        let right = match (d_ample, eigen) {
            (true, Some(lambda)) if lambda.is_integer() && r.as_integer() == Some(lambda.to_integer()) => {
                reasons.push(Reason::new(
                    citation::AMPLE_EIGENVECTOR,
                    format!("D is ample and P·D = {lambda}·D with {lambda} = r"),
                ));
                ample_eigenvector = Some(d.clone());
                Verdict::Yes
            }
            (true, Some(lambda)) => {
                reasons.push(Reason::new(
                    citation::AMPLE_EIGENVECTOR,
                    format!(
                        "D is an eigenvector with eigenvalue {lambda} ≠ r; the curve list may not describe the ample cone"
                    ),
                ));
                Verdict::Undetermined
            }
            (true, None) => {
                reasons.push(Reason::new(
                    citation::AMPLE_EIGENVECTOR,
                    "D is ample but not an eigenvector of P; right ampleness is open",
                ));
                Verdict::Undetermined
            }
            (false, _) => {
                reasons.push(Reason::new(
                    citation::AMPLE_EIGENVECTOR,
                    "D is not ample against the curve list; right ampleness is open",
                ));
                Verdict::Undetermined
            }
        };
        (Verdict::No, right)
    } else {
        reasons.push(Reason::new(
            citation::SPECTRAL_RADIUS,
            format!("spectral radius {r} could not be separated from 1"),
        ));
        (Verdict::Undetermined, Verdict::Undetermined)
    };

    Ok(AmplenessReport {
        left,
        right,
        spectral_radius: r,
        quasi_unipotent,
        ample_eigenvector,
        reasons,
    })
}

/// Checks `((P^m D)^{dim X}) = deg(σ)^m (D^{dim X})` for `m = 1..=5`.
/// Self-intersection is only available on rank-one `Num(X)`.
pub fn degree_consistency(spec: &NumericalActionSpec, d: &DivisorClass) -> Result<bool> {
    spec.check(d)?;
    let deg = spec
        .deg_sigma()
        .ok_or_else(|| Error::InvalidArgument("degSigma is required".into()))?;
    if spec.rank() != 1 {
        return Err(Error::Unsupported(format!(
            "self-intersection on Num(X) of rank {} > 1",
            spec.rank()
        )));
    }
    let n = spec.dim_x();
    let base = d.0[0].clone().pow(n);
    let mut cur = d.clone();
    for m in 1..=5u32 {
        cur = spec.apply(&cur)?;
        if cur.0[0].clone().pow(n) != deg.clone().pow(m) * &base {
            return Ok(false);
        }
    }
    Ok(true)
}

impl AmplenessReport {
    pub fn to_json(&self) -> Value {
        json!({
            "left": self.left,
            "right": self.right,
            "spectralRadius": interval_json(&self.spectral_radius),
            "quasiUnipotent": self.quasi_unipotent,
            "ampleEigenvector": self.ample_eigenvector.as_ref().map(|d| json::vector(&d.0)),
            "reasons": self.reasons,
        })
    }
}

pub fn interval_json(r: &RationalInterval) -> Value {
    json!({
        "lo": r.lo().to_string(),
        "hi": r.hi().to_string(),
        "approx": r.midpoint_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: &[&[i64]], curves: &[&[i64]]) -> NumericalActionSpec {
        NumericalActionSpec::new(
            IntMatrix::from_i64_rows(p).unwrap(),
            curves.iter().map(|c| CurveFunctional::from_i64(c)).collect(),
            1,
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn orbit_examples() {
        let s = spec(&[&[2]], &[&[1]]);
        let c = CurveFunctional::from_i64(&[1]);
        assert_eq!(orbit_pairings(&s, &DivisorClass::from_i64(&[1]), &c, 3).unwrap(), ints(&[1, 2, 4, 8]));
        assert_eq!(orbit_pairings(&s, &DivisorClass::from_i64(&[0]), &c, 3).unwrap(), ints(&[0, 0, 0, 0]));
        let j = spec(&[&[1, 1], &[0, 1]], &[&[1, 0], &[0, 1]]);
        let got = orbit_pairings(&j, &DivisorClass::from_i64(&[0, 1]), &CurveFunctional::from_i64(&[1, 0]), 3);
        assert_eq!(got.unwrap(), ints(&[0, 1, 2, 3]));
    }

    #[test]
    fn delta_examples() {
        let s = spec(&[&[2]], &[&[1]]);
        let c = CurveFunctional::from_i64(&[1]);
        assert_eq!(delta_sequence(&s, &DivisorClass::from_i64(&[1]), &c, 4).unwrap(), ints(&[1, 3, 7, 15]));
        assert_eq!(delta_sequence(&s, &DivisorClass::from_i64(&[0]), &c, 4).unwrap(), ints(&[0, 0, 0, 0]));
        let j = spec(&[&[1, 1], &[0, 1]], &[&[1, 0], &[0, 1]]);
        let got = delta_sequence(&j, &DivisorClass::from_i64(&[0, 1]), &CurveFunctional::from_i64(&[1, 0]), 4);
        assert_eq!(got.unwrap(), ints(&[0, 1, 3, 6]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let s = spec(&[&[2]], &[&[1]]);
        let err = orbit_pairings(&s, &DivisorClass::from_i64(&[1, 0]), &CurveFunctional::from_i64(&[1]), 3);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn growth_fit_examples() {
        let two = RationalInterval::from_integer(2);
        let one = RationalInterval::from_integer(1);
        let fit = growth_bound_check(&ints(&[1, 2, 4, 8]), 0, &two, 0).unwrap();
        assert_eq!(fit.constant, BigRational::one());
        // partial sums 2^m - 1 for m = 1..4 sit under 2^m
        let fit = growth_bound_check(&ints(&[1, 3, 7, 15]), 1, &two, 0).unwrap();
        assert_eq!(fit.constant, BigRational::new(15.into(), 16.into()));
        assert!(fit.constant <= BigRational::one());
        // m(m-1)/2 against m: the constant keeps growing with the window
        let tri: Vec<BigInt> = (0..40i64).map(|m| BigInt::from(m * (m - 1) / 2)).collect();
        let short = growth_bound_check(&tri[..4], 0, &one, 1).unwrap().constant;
        let long = growth_bound_check(&tri, 0, &one, 1).unwrap().constant;
        assert_eq!(short, BigRational::from_integer(1.into()));
        assert_eq!(long, BigRational::from_integer(19.into()));
        // j = 2 bounds it uniformly
        assert!(growth_bound_check(&tri, 0, &one, 2).unwrap().constant < BigRational::one());
        assert!(growth_bound_check(&[], 0, &one, 0).is_err());
    }

    #[test]
    fn witness_examples() {
        let cfg = WitnessConfig::default();
        let one = DivisorClass::from_i64(&[1]);
        let w = non_left_ample_witness(&spec(&[&[2]], &[&[1]]), &one, &one, &cfg).unwrap();
        assert_eq!(w.h, DivisorClass::from_i64(&[2]));
        assert_eq!(w.c3, BigRational::one());
        assert!(w.margins.iter().all(Signed::is_negative));
        let w = non_left_ample_witness(&spec(&[&[3]], &[&[1]]), &one, &one, &cfg).unwrap();
        assert_eq!(w.h, DivisorClass::from_i64(&[1]));
        let e = non_left_ample_witness(&spec(&[&[1]], &[&[1]]), &one, &one, &cfg).unwrap_err();
        assert!(matches!(e, Error::InvalidArgument(_)));
    }

    #[test]
    fn witness_for_irrational_radius() {
        // Fibonacci-like action preserving the positive quadrant
        let s = spec(&[&[2, 1], &[1, 1]], &[&[1, 0], &[0, 1]]);
        let a = DivisorClass::from_i64(&[1, 1]);
        let w = non_left_ample_witness(&s, &DivisorClass::from_i64(&[3, -1]), &a, &WitnessConfig::default()).unwrap();
        assert!(!w.jordan_exact);
        assert!(w.margins.iter().all(Signed::is_negative));
    }

    #[test]
    fn classification_examples() {
        for p in [2, 3, 5] {
            let r = classify_ampleness(&spec(&[&[p]], &[&[1]]), &DivisorClass::from_i64(&[1])).unwrap();
            assert_eq!((r.left, r.right), (Verdict::No, Verdict::Yes));
            assert_eq!(r.ample_eigenvector, Some(DivisorClass::from_i64(&[1])));
        }
        let id = spec(&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]]).with_ample_flag(true);
        let r = classify_ampleness(&id, &DivisorClass::from_i64(&[1, 1])).unwrap();
        assert_eq!((r.left, r.right), (Verdict::Yes, Verdict::Yes));
        assert!(r.quasi_unipotent);
        let diag = spec(&[&[2, 0], &[0, 3]], &[&[1, 0], &[0, 1]]);
        let r = classify_ampleness(&diag, &DivisorClass::from_i64(&[1, 1])).unwrap();
        assert_eq!((r.left, r.right), (Verdict::No, Verdict::Undetermined));
    }

    #[test]
    fn automorphism_without_flag_is_undetermined() {
        let id = spec(&[&[1]], &[&[1]]);
        let r = classify_ampleness(&id, &DivisorClass::from_i64(&[1])).unwrap();
        assert_eq!((r.left, r.right), (Verdict::Undetermined, Verdict::Undetermined));
        let r = classify_ampleness(&id.with_ample_flag(false), &DivisorClass::from_i64(&[1])).unwrap();
        assert_eq!((r.left, r.right), (Verdict::No, Verdict::No));
    }

    #[test]
    fn degree_examples() {
        let mk = |dim_x, deg: i64| {
            NumericalActionSpec::new(IntMatrix::from_i64_rows(&[[2]]).unwrap(), vec![CurveFunctional::from_i64(&[1])], dim_x)
                .unwrap()
                .with_deg_sigma(deg.into())
                .unwrap()
        };
        let one = DivisorClass::from_i64(&[1]);
        assert!(degree_consistency(&mk(1, 2), &one).unwrap());
        assert!(degree_consistency(&mk(2, 4), &one).unwrap());
        assert!(!degree_consistency(&mk(2, 2), &one).unwrap());
        let wide = spec(&[&[2, 0], &[0, 2]], &[&[1, 0]]).with_deg_sigma(4.into()).unwrap();
        assert!(matches!(degree_consistency(&wide, &DivisorClass::from_i64(&[1, 0])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn spec_json_roundtrip() {
        let text = r#"{"P": [[2, 0], [0, 3]], "curves": [[1, 0], [0, 1]], "dimX": 2, "degSigma": 6, "ampleFlag": false}"#;
        let s = NumericalActionSpec::from_json_str(text).unwrap();
        assert_eq!(s.dim_x(), 2);
        assert_eq!(s.deg_sigma(), Some(&BigInt::from(6)));
        assert_eq!(NumericalActionSpec::from_json(&s.to_json()).unwrap(), s);
        assert!(NumericalActionSpec::from_json_str(r#"{"P": [[0]], "curves": [[1]]}"#).is_err());
        assert!(NumericalActionSpec::from_json_str(r#"{"P": [[2]], "curves": []}"#).is_err());
    }
}
