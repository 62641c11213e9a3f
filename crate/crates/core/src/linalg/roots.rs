//! Certified isolation of the largest real root via Sturm chains.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{IntPolynomial, RatPolynomial};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        Self { lo: v.clone(), hi: v }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, v: &BigRational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    /// The exact integer value, when the interval is a single integer point.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.is_point() && self.lo.is_integer()).then(|| self.lo.to_integer())
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "[{}]", self.lo)
        } else {
            write!(f, "[{:.12}, {:.12}]", self.lo_f64(), self.hi_f64())
        }
    }
}

/// Sturm chain of a squarefree polynomial; each member is scaled so its
/// leading coefficient is ±1 (positive scaling keeps sign counts intact).
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &RatPolynomial) -> Self {
        let mut chain = vec![p.primitive()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let (_, r) = chain[n - 2].to_rational().div_rem(&chain[n - 1].to_rational());
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-BigRational::one()).primitive());
        }
        Self { chain }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.chain
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| sign(p.leading().unwrap())))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = sign(p.leading().unwrap());
            if p.degree().unwrap() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots in `(x, ∞)`; `x` must not be a root.
    pub fn roots_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_pos_inf()
    }

    pub fn real_root_count(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

fn sign<T: Signed>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Cauchy bound: every root has absolute value below `1 + max |c_i / c_n|`.
pub fn cauchy_bound(p: &RatPolynomial) -> BigRational {
    let lc = p.leading().expect("zero polynomial has no root bound").abs();
    let n = p.degree().unwrap();
    let max = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    let b = BigRational::one() + max;
    // round up to an integer to keep bisection points dyadic
    BigRational::from_integer(b.ceil().to_integer())
}

/// Fractions of the current interval tried as split points, in order, so a
/// split never lands on a root.
const SPLITS: [(i64, i64); 7] = [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (4, 5)];

/// Isolates the largest real root of `p` to an interval of width at most
/// `width`. Returns `None` when `p` has no real roots. Because rational roots
/// of a monic integer polynomial are integers, an integer root is returned as
/// an exact point interval.
pub fn largest_real_root(p: &IntPolynomial, width: &BigRational) -> Option<RationalInterval> {
    assert!(width.is_positive(), "width must be positive");
    let sf = p.to_rational().squarefree();
    sf.degree().filter(|&d| d > 0)?;
    let chain = SturmChain::new(&sf);
    let sf = sf.primitive();
    if chain.real_root_count() == 0 {
        return None;
    }
    let monic_integer = p.leading().is_some_and(One::is_one);
    let bound = cauchy_bound(&sf.to_rational());
    let mut lo = -bound.clone();
    let mut hi = bound;
    let half = BigRational::new(1.into(), 2.into());
    loop {
        let isolated = chain.roots_above(&lo) == 1;
        let w = &hi - &lo;
        if isolated && w < BigRational::one() {
            let k = hi.floor();
            if k > lo && sf.sign_at(&k) == 0 {
                return Some(RationalInterval::point(k));
            }
        }
        if isolated && (w <= *width && (!monic_integer || w < half)) {
            return Some(RationalInterval::new(lo, hi));
        }
        let mid = SPLITS
            .iter()
            .map(|&(a, b)| &lo + &w * BigRational::new(a.into(), b.into()))
            .find(|m| sf.sign_at(m) != 0)
            .expect("a split point avoiding the finitely many roots");
        if chain.roots_above(&mid) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}
