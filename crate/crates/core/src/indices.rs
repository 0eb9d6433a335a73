//! Class indices `|x^G|`, π-indices and the statistics `ε_π(x)`, `ε_π(G)`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::{pi_exponent, pi_part, PrimeSet};
use crate::structure::{centralizer, conjugacy_classes, ConjugacyClass};

/// `|x^G| = |G : C_G(x)|`.
pub fn class_index(g: &Group, x: &Permutation) -> Result<u64> {
    let c = centralizer(g, x)?;
    Ok((g.order() / c.order()) as u64)
}

pub fn pi_index(g: &Group, x: &Permutation, pi: &PrimeSet) -> Result<u64> {
    Ok(pi_part(class_index(g, x)?, pi))
}

/// `ε_π(x) = exp_π(|x^G|)`.
pub fn epsilon_element(g: &Group, x: &Permutation, pi: &PrimeSet) -> Result<u32> {
    Ok(pi_exponent(class_index(g, x)?, pi))
}

/// `ε_π(G)`, the maximum of `ε_π(x)` over class representatives.
pub fn epsilon_group(g: &Group, pi: &PrimeSet) -> u32 {
    let sizes: Vec<u64> = conjugacy_classes(g).iter().map(|c| c.size as u64).collect();
    epsilon_from_sizes(&sizes, pi)
}

pub fn epsilon_from_sizes(sizes: &[u64], pi: &PrimeSet) -> u32 {
    sizes.iter().map(|&s| pi_exponent(s, pi)).max().unwrap_or(0)
}

/// Some `z` conjugate to `x` with `|P : P ∩ C_G(z)| = p^m`, where `m = ε_p(x)`.
pub fn sylow_class_witness(g: &Group, x: &Permutation, sylow: &Group, p: u64) -> Result<Permutation> {
    let pi = PrimeSet::single(p)?;
    if !sylow.is_subset_of(g) || sylow.order() as u64 != pi_part(g.order() as u64, &pi) {
        return Err(GroupError::InvalidParameters(format!(
            "subgroup of order {} is not a Sylow {p}-subgroup",
            sylow.order()
        )));
    }
    let m = epsilon_element(g, x, &pi)?;
    let target = p.pow(m) as usize;
    let class = conjugacy_class_of(g, x)?;
    for z in &class.members {
        let fixed = sylow.iter().filter(|y| y.compose(z) == z.compose(y)).count();
        if sylow.order() / fixed == target {
            return Ok(z.clone());
        }
    }
    Err(GroupError::NoWitness(x.to_string()))
}

fn conjugacy_class_of(g: &Group, x: &Permutation) -> Result<ConjugacyClass> {
    g.check_member(x)?;
    let mut members = vec![x.clone()];
    let mut seen: HashSet<Permutation> = HashSet::from([x.clone()]);
    let mut head = 0;
    while head < members.len() {
        let y = members[head].clone();
        head += 1;
        for s in g.generators() {
            let z = y.conjugate_by(s);
            if seen.insert(z.clone()) {
                members.push(z);
            }
        }
    }
    members.sort_unstable();
    Ok(ConjugacyClass {
        representative: members[0].clone(),
        size: members.len(),
        members,
    })
}

/// π-index data of one class for one π.
#[derive(Clone, Debug, Serialize)]
pub struct PiIndexRecord {
    pub pi: PrimeSet,
    pub index: u64,
    pub epsilon: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub representative: Permutation,
    pub size: u64,
    pub pi: Vec<PiIndexRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EpsilonRecord {
    pub pi: PrimeSet,
    pub value: u32,
}

/// Per-class index data for a group and a list of prime sets.
#[derive(Clone, Debug, Serialize)]
pub struct IndexProfile {
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassRecord>,
    pub epsilon: Vec<EpsilonRecord>,
    #[serde(skip)]
    class_of: HashMap<Permutation, usize>,
}

impl IndexProfile {
    pub fn build(name: &str, g: &Group, pis: &[PrimeSet]) -> IndexProfile {
        IndexProfile::from_classes(name, g, &conjugacy_classes(g), pis)
    }

    pub fn from_classes(name: &str, g: &Group, classes: &[ConjugacyClass], pis: &[PrimeSet]) -> IndexProfile {
        let mut class_of = HashMap::with_capacity(g.order());
        let mut records = Vec::with_capacity(classes.len());
        for (k, c) in classes.iter().enumerate() {
            for m in &c.members {
                class_of.insert(m.clone(), k);
            }
            let size = c.size as u64;
            records.push(ClassRecord {
                representative: c.representative.clone(),
                size,
                pi: pis
                    .iter()
                    .map(|pi| PiIndexRecord {
                        pi: pi.clone(),
                        index: pi_part(size, pi),
                        epsilon: pi_exponent(size, pi),
                    })
                    .collect(),
            });
        }
        let sizes: Vec<u64> = records.iter().map(|r| r.size).collect();
        let epsilon = pis
            .iter()
            .map(|pi| EpsilonRecord {
                pi: pi.clone(),
                value: epsilon_from_sizes(&sizes, pi),
            })
            .collect();
        IndexProfile {
            group: name.to_string(),
            order: g.order(),
            classes: records,
            epsilon,
            class_of,
        }
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    /// `ε_π(G)` for any π, not only the ones recorded.
    pub fn epsilon_for(&self, pi: &PrimeSet) -> u32 {
        epsilon_from_sizes(&self.class_sizes(), pi)
    }

    /// Class record of an arbitrary element.
    pub fn class_of(&self, x: &Permutation) -> Result<&ClassRecord> {
        self.class_of
            .get(x)
            .map(|&k| &self.classes[k])
            .ok_or_else(|| GroupError::NotAnElement(x.to_string()))
    }

    pub fn epsilon_of(&self, x: &Permutation, pi: &PrimeSet) -> Result<u32> {
        Ok(pi_exponent(self.class_of(x)?.size, pi))
    }
}
