//! Permutations of `{0..n-1}`.
//!
//! Composition is left to right: `a.compose(&b)` applies `a` first and then
//! `b`, so `a.compose(&b).apply(i) == b.apply(a.apply(i))`. Every group in
//! this crate multiplies in that order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};

/// A bijection of `{0..degree-1}` stored as its image array.
///
/// The derived ordering is lexicographic on the image array, which is the
/// canonical element order used by every group container.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, checking that it is a bijection.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {v} out of range for degree {n}"
                )));
            }
            if seen[v] {
                return Err(GroupError::InvalidPermutation(format!(
                    "image {v} appears twice"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `0 -> 1 -> 2 -> 0`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                if touched[a as usize] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {a} appears in two cycles"
                    )));
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`. Panics on degree mismatch; see [`Permutation::try_compose`].
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Permutation { images: inv.into() }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        result
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g^-1 self g)(i): apply g^-1, then self, then g; i.e. g(i) -> g(self(i)).
        let mut out = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[v as usize];
        }
        Permutation { images: out.into() }
    }

    /// Commutator `a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = GroupError;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images.into_vec()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let c = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(c.compose(&Permutation::identity(3)), c);
    }

    #[test]
    fn two_transpositions_make_a_three_cycle() {
        // a = (0 1) = [1,0,2], b = (1 2) = [0,2,1]; i -> b[a[i]]: 0->2, 1->0, 2->1
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        let ab = a.compose(&b);
        assert_eq!(ab.images(), &[2, 0, 1]);
        assert_eq!(ab.order(), 3);
    }

    #[test]
    fn inverse_of_three_cycle() {
        let c = Permutation::new(vec![1, 2, 0]).unwrap();
        assert_eq!(c.inverse().images(), &[2, 0, 1]);
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert_eq!(
            a.try_compose(&b),
            Err(GroupError::DegreeMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn orders_are_lcm_of_cycle_lengths() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(cyc(4, &[&[0, 1, 2, 3]]).order(), 4);
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).order(), 6);
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }

    #[test]
    fn serde_roundtrip_validates() {
        let p: Permutation = serde_json::from_str("[2,0,1]").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,0,1]");
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_law(a in arb_perm(6)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
        }

        #[test]
        fn composition_is_associative(a in arb_perm(5), b in arb_perm(5), c in arb_perm(5)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn conjugation_matches_product(a in arb_perm(6), g in arb_perm(6)) {
            let expected = g.inverse().compose(&a).compose(&g);
            prop_assert_eq!(a.conjugate_by(&g), expected);
        }

        #[test]
        fn pow_by_order_is_identity(a in arb_perm(7)) {
            prop_assert!(a.pow(a.order()).is_identity());
            for k in 1..a.order() {
                prop_assert!(!a.pow(k).is_identity());
            }
        }
    }
}
