//! Sylow subgroups, Frattini subgroups of p-groups and the Frattini series.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Closure, Group, Subgroup};
use crate::perm::Permutation;
use crate::primes::{is_prime, pi_part, PrimeSet};
use crate::structure::{agemo, derived_length, derived_subgroup, normalizer};

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

fn is_p_power(n: u64, p: u64) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn check_p_group(g: &Group, p: u64) -> Result<()> {
    check_prime(p)?;
    if is_p_power(g.order() as u64, p) {
        Ok(())
    } else {
        Err(GroupError::NotPGroup { order: g.order(), p })
    }
}

/// `|G|_p`.
pub fn sylow_order(g: &Group, p: u64) -> usize {
    pi_part(g.order() as u64, &PrimeSet::single(p).expect("prime")) as usize
}

/// Which p-element of maximal order seeds the normalizer-growth search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SylowSeed {
    /// Least such element in canonical order.
    First,
    /// Greatest such element in canonical order.
    Last,
}

/// A Sylow p-subgroup, grown from a cyclic p-subgroup through normalizers.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    sylow_subgroup_from(g, p, SylowSeed::First)
}

pub fn sylow_subgroup_from(g: &Group, p: u64, seed: SylowSeed) -> Result<Subgroup> {
    check_prime(p)?;
    let target = sylow_order(g, p);
    let p_elements = || g.iter().filter(|x| is_p_power(x.order(), p));
    let max_order = p_elements().map(Permutation::order).max().unwrap_or(1);
    let start = match seed {
        SylowSeed::First => p_elements().find(|x| x.order() == max_order),
        SylowSeed::Last => p_elements().filter(|x| x.order() == max_order).last(),
    }
    .cloned()
    .unwrap_or_else(|| g.identity());

    let mut closure = Closure::new(g.degree());
    closure.adjoin(&start);
    let mut current = closure.into_group();
    while current.order() < target {
        let n = normalizer(g, &current)?;
        // Some element of N \ P has p-power image in N/P; strip its p'-part.
        let step = n.iter().find_map(|y| {
            if current.contains(y) {
                return None;
            }
            let ord = y.order();
            let p_prime = ord / pi_part(ord, &PrimeSet::single(p).expect("prime"));
            let z = y.pow(p_prime);
            (!current.contains(&z)).then_some(z)
        });
        let z = step.expect("a non-Sylow p-subgroup has p dividing |N(P):P|");
        let mut seeds: Vec<Permutation> = current.generators().to_vec();
        seeds.push(z);
        current = g.subgroup_generated(&seeds)?.into_group();
    }
    Ok(Subgroup::new_unchecked(g, current))
}

/// `Φ(P) = [P,P] P^p` for a p-group `P`.
pub fn frattini_p(pg: &Group, p: u64) -> Result<Subgroup> {
    check_p_group(pg, p)?;
    let derived = derived_subgroup(pg);
    let power = agemo(pg, p)?;
    let seeds: Vec<Permutation> = derived
        .generators()
        .iter()
        .chain(power.generators())
        .cloned()
        .collect();
    pg.subgroup_generated(&seeds)
}

/// The chain `P = Φ_0(P) > Φ_1(P) > ... > 1`.
#[derive(Clone, Debug)]
pub struct FrattiniSeries {
    pub steps: Vec<Group>,
    pub length: u32,
}

impl FrattiniSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.steps.iter().map(Group::order).collect()
    }
}

impl Serialize for FrattiniSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FrattiniSeries", 2)?;
        st.serialize_field("orders", &self.orders())?;
        st.serialize_field("length", &self.length)?;
        st.end()
    }
}

pub fn frattini_series(pg: &Group, p: u64) -> Result<FrattiniSeries> {
    check_p_group(pg, p)?;
    let mut steps = vec![pg.clone()];
    while !steps.last().expect("nonempty").is_trivial() {
        let next = frattini_p(steps.last().expect("nonempty"), p)?.into_group();
        steps.push(next);
    }
    let length = steps.len() as u32 - 1;
    Ok(FrattiniSeries { steps, length })
}

/// `φ_p(G)`: Frattini length of a Sylow p-subgroup.
pub fn phi_length(g: &Group, p: u64) -> Result<u32> {
    let sylow = sylow_subgroup(g, p)?;
    Ok(frattini_series(&sylow, p)?.length)
}

/// `e_p(G)`: `p^e` is the largest element order in a Sylow p-subgroup.
pub fn sylow_exponent_length(g: &Group, p: u64) -> Result<u32> {
    let sylow = sylow_subgroup(g, p)?;
    let max = sylow.iter().map(Permutation::order).max().unwrap_or(1);
    Ok(max.ilog(p))
}

/// `d_p(G)`: derived length of a Sylow p-subgroup.
pub fn sylow_derived_length(g: &Group, p: u64) -> Result<u32> {
    let sylow = sylow_subgroup(g, p)?;
    Ok(derived_length(&sylow)
        .value()
        .expect("p-groups are solvable"))
}
