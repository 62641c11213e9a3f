use num_bigint::BigUint;
use num_traits::One;

/// `C(n, k)` for arbitrary-precision `n` and small `k`.
pub fn binomial(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::default();
    }
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(n - k + i, i) after this step
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Weak compositions of `degree` into `parts` nonnegative parts, in
/// lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

impl Compositions {
    pub fn new(degree: u64, parts: usize) -> Self {
        assert!(parts > 0, "need at least one part");
        let mut first = vec![0; parts];
        first[0] = degree;
        Self { current: Some(first) }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.take()?;
        let n = out.len();
        if let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| out[k] > 0) {
            let mut next = out.clone();
            let tail = next[n - 1];
            next[n - 1] = 0;
            next[k] -= 1;
            next[k + 1] = tail + 1;
            self.current = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(&BigUint::from(5u32), 2), BigUint::from(10u32));
        assert_eq!(binomial(&BigUint::from(2u32), 3), BigUint::default());
        assert_eq!(binomial(&BigUint::from(7u32), 0), BigUint::one());
        let big = BigUint::from(1u32) << 100;
        assert_eq!(binomial(&big, 1), big);
    }

    #[test]
    fn compositions_are_complete_and_distinct() {
        let all: Vec<_> = Compositions::new(4, 3).collect();
        assert_eq!(all.len(), 15);
        assert_eq!(all[0], vec![4, 0, 0]);
        assert_eq!(all[14], vec![0, 0, 4]);
        assert!(all.iter().all(|c| c.iter().sum::<u64>() == 4));
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 15);
        assert_eq!(Compositions::new(3, 1).collect::<Vec<_>>(), vec![vec![3]]);
        assert_eq!(Compositions::new(0, 2).count(), 1);
    }
}
