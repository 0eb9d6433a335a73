//! Prime sets and the π-part / π-exponent of integers.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{GroupError, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut k = 0;
        while n % d == 0 {
            n /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// A finite set of primes π. The complement π′ is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<PrimeSet> {
        let mut v: Vec<u64> = primes.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&p| !is_prime(p)) {
            return Err(GroupError::NotPrime(bad));
        }
        v.sort_unstable();
        v.dedup();
        Ok(PrimeSet(v))
    }

    pub fn single(p: u64) -> Result<PrimeSet> {
        PrimeSet::new([p])
    }

    pub fn empty() -> PrimeSet {
        PrimeSet(Vec::new())
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// π′ restricted to the primes dividing `n`.
    pub fn complement_in(&self, n: u64) -> PrimeSet {
        PrimeSet(prime_divisors(n).into_iter().filter(|&p| !self.contains(p)).collect())
    }

    /// Every prime divisor of `n` lies in π.
    pub fn is_pi_number(&self, n: u64) -> bool {
        factorize(n).iter().all(|&(p, _)| self.contains(p))
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for PrimeSet {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<PrimeSet> {
        let mut primes = Vec::new();
        for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p: u64 = part
                .parse()
                .map_err(|_| GroupError::InvalidParameters(format!("bad prime `{part}`")))?;
            primes.push(p);
        }
        PrimeSet::new(primes)
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `n_π`: product of the prime powers of `n` over primes in π.
pub fn pi_part(n: u64, pi: &PrimeSet) -> u64 {
    assert!(n >= 1, "pi_part of zero");
    factorize(n)
        .into_iter()
        .filter(|&(p, _)| pi.contains(p))
        .map(|(p, k)| p.pow(k))
        .product()
}

/// `n_π′`.
pub fn pi_prime_part(n: u64, pi: &PrimeSet) -> u64 {
    n / pi_part(n, pi)
}

/// `exp_π(n)`: sum of the exponents of π-primes in `n`.
pub fn pi_exponent(n: u64, pi: &PrimeSet) -> u32 {
    assert!(n >= 1, "pi_exponent of zero");
    factorize(n)
        .into_iter()
        .filter(|&(p, _)| pi.contains(p))
        .map(|(_, k)| k)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pi(v: &[u64]) -> PrimeSet {
        PrimeSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn pi_parts() {
        assert_eq!(pi_part(1, &pi(&[2, 3])), 1);
        assert_eq!(pi_part(360, &pi(&[2, 3])), 72);
        assert_eq!(pi_part(360, &pi(&[5])), 5);
        assert_eq!(pi_prime_part(360, &pi(&[2, 3])), 5);
    }

    #[test]
    fn pi_exponents() {
        assert_eq!(pi_exponent(1, &pi(&[2])), 0);
        assert_eq!(pi_exponent(360, &pi(&[2, 3])), 5);
        assert_eq!(pi_exponent(6, &pi(&[2, 3])), 2);
    }

    #[test]
    fn prime_sets() {
        assert_eq!(PrimeSet::new([3, 2, 3]).unwrap().primes(), &[2, 3]);
        assert_eq!(PrimeSet::new([4]), Err(GroupError::NotPrime(4)));
        assert_eq!("2, 5".parse::<PrimeSet>().unwrap(), pi(&[2, 5]));
        assert_eq!(pi(&[2]).complement_in(360), pi(&[3, 5]));
        assert!(pi(&[2, 3]).is_pi_number(72));
        assert!(!pi(&[2, 3]).is_pi_number(10));
        assert!(PrimeSet::empty().is_pi_number(1));
        assert_eq!(pi(&[2, 3]).to_string(), "2,3");
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(prime_divisors(97), vec![97]);
    }

    proptest! {
        #[test]
        fn pi_and_complement_multiply_back(n in 1u64..100_000, mask in 0u8..16) {
            let primes: Vec<u64> = [2, 3, 5, 7]
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &p)| p)
                .collect();
            let pi = PrimeSet::new(primes).unwrap();
            let comp = pi.complement_in(n);
            prop_assert_eq!(pi_part(n, &pi) * pi_part(n, &comp), n);
            prop_assert_eq!(
                pi_exponent(n, &pi) + pi_exponent(n, &comp),
                factorize(n).iter().map(|&(_, k)| k).sum::<u32>()
            );
        }
    }
}
