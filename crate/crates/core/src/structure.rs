//! Centralizers, conjugacy classes, normal closures, normalizers, derived
//! and power subgroups.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Closure, Group, Subgroup};
use crate::perm::Permutation;
use crate::primes::is_prime;

/// A conjugacy class `{ g^-1 x g : g in G }`, represented by its least member.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    pub size: usize,
}

/// Derived length of a group, or the marker for a series that stabilizes above 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedLength {
    Solvable(u32),
    Unsolvable,
}

impl DerivedLength {
    pub fn value(self) -> Option<u32> {
        match self {
            DerivedLength::Solvable(d) => Some(d),
            DerivedLength::Unsolvable => None,
        }
    }
}

fn commutes(a: &Permutation, b: &Permutation) -> bool {
    // a b = b a  <=>  b[a[i]] == a[b[i]] for all i
    let (ai, bi) = (a.images(), b.images());
    ai.iter().zip(bi).all(|(&x, &y)| bi[x as usize] == ai[y as usize])
}

pub fn centralizer(g: &Group, x: &Permutation) -> Result<Subgroup> {
    g.check_member(x)?;
    Ok(g.filter_subgroup(|y| commutes(x, y)))
}

pub fn centralizer_of_subgroup(g: &Group, h: &Group) -> Result<Subgroup> {
    if !h.is_subset_of(g) {
        return Err(GroupError::NotASubgroup);
    }
    let gens = h.generators();
    Ok(g.filter_subgroup(|y| gens.iter().all(|s| commutes(s, y))))
}

pub fn center(g: &Group) -> Subgroup {
    let gens = g.generators();
    g.filter_subgroup(|y| gens.iter().all(|s| commutes(s, y)))
}

/// Conjugacy classes sorted by canonical representative.
pub fn conjugacy_classes(g: &Group) -> Vec<ConjugacyClass> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes = Vec::new();
    for (i, x) in g.iter().enumerate() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[i] = id;
        let mut orbit = vec![x.clone()];
        let mut head = 0;
        while head < orbit.len() {
            let y = orbit[head].clone();
            head += 1;
            for s in g.generators() {
                let z = y.conjugate_by(s);
                let k = g.index_of(&z).expect("conjugate lies in the group");
                if class_of[k] == usize::MAX {
                    class_of[k] = id;
                    orbit.push(z);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(ConjugacyClass {
            representative: x.clone(),
            size: orbit.len(),
            members: orbit,
        });
    }
    classes
}

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure<'a, I>(g: &Group, seeds: I) -> Result<Subgroup>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut closure = Closure::new(g.degree());
    for s in seeds {
        g.check_member(s)?;
        closure.adjoin(s);
    }
    close_under_conjugation(&mut closure, g.generators());
    Ok(Subgroup::new_unchecked(g, closure.into_group()))
}

fn close_under_conjugation(closure: &mut Closure, by: &[Permutation]) {
    let mut i = 0;
    // Generators appended during the sweep are themselves conjugated later.
    while i < closure.generators().len() {
        let s = closure.generators()[i].clone();
        for g in by {
            let c = s.conjugate_by(g);
            if !closure.contains(&c) {
                closure.adjoin(&c);
            }
        }
        i += 1;
    }
}

pub fn is_normal(g: &Group, h: &Group) -> bool {
    h.is_subset_of(g)
        && g.generators()
            .iter()
            .all(|x| h.generators().iter().all(|s| h.contains(&s.conjugate_by(x))))
}

pub fn normalizer(g: &Group, h: &Group) -> Result<Subgroup> {
    if !h.is_subset_of(g) {
        return Err(GroupError::NotASubgroup);
    }
    let gens = h.generators();
    Ok(g.filter_subgroup(|x| gens.iter().all(|s| h.contains(&s.conjugate_by(x)))))
}

/// `[H, H]`, the normal closure in `H` of commutators of generator pairs.
pub fn derived_subgroup(h: &Group) -> Subgroup {
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            comms.push(Permutation::commutator(a, b));
        }
    }
    normal_closure(h, &comms).expect("commutators lie in the group")
}

pub fn derived_series(h: &Group) -> Vec<Group> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last).into_group();
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_length(h: &Group) -> DerivedLength {
    let series = derived_series(h);
    if series.last().expect("nonempty").is_trivial() {
        DerivedLength::Solvable(series.len() as u32 - 1)
    } else {
        DerivedLength::Unsolvable
    }
}

/// `H^p`, generated by all p-th powers.
pub fn agemo(h: &Group, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let powers: HashSet<Permutation> = h.iter().map(|x| x.pow(p)).collect();
    let mut powers: Vec<Permutation> = powers.into_iter().collect();
    powers.sort_unstable();
    h.subgroup_generated(&powers)
}

pub fn intersection(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if a.parent() != b.parent() {
        return Err(GroupError::ParentMismatch);
    }
    let parent = a.parent();
    Ok(parent.filter_subgroup(|x| a.contains(x) && b.contains(x)))
}

/// Intersection of two groups of the same degree, as a subgroup of `a`.
pub fn meet(a: &Group, b: &Group) -> Subgroup {
    a.filter_subgroup(|x| b.contains(x))
}

/// Some `g` with `a^g = b`, searched in canonical order.
pub fn conjugating_element(g: &Group, a: &Group, b: &Group) -> Option<Permutation> {
    if a.order() != b.order() {
        return None;
    }
    g.iter()
        .find(|x| a.generators().iter().all(|s| b.contains(&s.conjugate_by(x))))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, c).unwrap()
    }

    fn group(n: usize, gens: &[&[&[u32]]]) -> Group {
        Group::from_generators(n, gens.iter().map(|c| cyc(n, c)).collect()).unwrap()
    }

    fn s3() -> Group {
        group(3, &[&[&[0, 1]], &[&[0, 1, 2]]])
    }

    fn s4() -> Group {
        group(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]])
    }

    fn a5() -> Group {
        group(5, &[&[&[0, 1, 2]], &[&[0, 1, 3]], &[&[0, 1, 4]]])
    }

    // Q8 in its regular action; points are sign*4 + unit with units 1,i,j,k.
    fn q8() -> Group {
        crate::harness::corpus::quaternion8()
    }

    #[test]
    fn centralizers() {
        let g = s3();
        assert_eq!(centralizer(&g, &g.identity()).unwrap().order(), 6);
        let c = centralizer(&g, &cyc(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(c.order(), 3);
        let g = s4();
        assert_eq!(centralizer(&g, &cyc(4, &[&[0, 1, 2, 3]])).unwrap().order(), 4);
        assert!(centralizer(&s3(), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn centralizer_of_subgroups() {
        let g = q8();
        assert_eq!(centralizer_of_subgroup(&g, &Group::trivial(8)).unwrap().order(), 8);
        assert_eq!(centralizer_of_subgroup(&g, &g).unwrap().order(), 2);
        let sl = crate::harness::corpus::sl23();
        let p = crate::sylow::sylow_subgroup(&sl, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert_eq!(centralizer_of_subgroup(&sl, &p).unwrap().order(), 2);
        assert!(centralizer_of_subgroup(&s4(), &s3()).is_err());
    }

    #[test]
    fn centers() {
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert_eq!(center(&c4).order(), 4);
        assert_eq!(center(&s3()).order(), 1);
        assert_eq!(center(&q8()).order(), 2);
    }

    #[test]
    fn class_sizes() {
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert!(conjugacy_classes(&c4).iter().all(|c| c.size == 1));
        let sizes = |g: &Group| {
            let mut v: Vec<usize> = conjugacy_classes(g).iter().map(|c| c.size).collect();
            v.sort();
            v
        };
        assert_eq!(sizes(&s3()), vec![1, 2, 3]);
        assert_eq!(sizes(&s4()), vec![1, 3, 6, 6, 8]);
        let classes = conjugacy_classes(&s4());
        assert!(classes.windows(2).all(|w| w[0].representative < w[1].representative));
        for c in &classes {
            assert_eq!(c.members[0], c.representative);
        }
    }

    #[test]
    fn normal_closures() {
        let g = s4();
        assert_eq!(normal_closure(&g, [&g.identity()]).unwrap().order(), 1);
        assert_eq!(normal_closure(&g, [&cyc(4, &[&[0, 1], &[2, 3]])]).unwrap().order(), 4);
        assert_eq!(normal_closure(&g, [&cyc(4, &[&[0, 1]])]).unwrap().order(), 24);
    }

    #[test]
    fn normality() {
        let g = s3();
        assert!(is_normal(&g, &center(&g)));
        let a3 = group(3, &[&[&[0, 1, 2]]]);
        assert!(is_normal(&g, &a3));
        let t = group(3, &[&[&[0, 1]]]);
        assert!(!is_normal(&g, &t));
    }

    #[test]
    fn normalizers() {
        let g = s3();
        let a3 = group(3, &[&[&[0, 1, 2]]]);
        assert_eq!(normalizer(&g, &a3).unwrap().order(), 6);
        let t = group(3, &[&[&[0, 1]]]);
        assert_eq!(normalizer(&g, &t).unwrap().order(), 2);
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        let n = normalizer(&s4(), &c4).unwrap();
        assert_eq!(n.order(), 8);
        assert!(!n.is_abelian());
    }

    #[test]
    fn derived_subgroups() {
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert!(derived_subgroup(&c4).is_trivial());
        let a3 = group(3, &[&[&[0, 1, 2]]]);
        assert_eq!(derived_subgroup(&s3()).into_group(), a3);
        let q = q8();
        assert_eq!(derived_subgroup(&q).into_group(), center(&q).into_group());
    }

    #[test]
    fn derived_lengths() {
        assert_eq!(derived_length(&Group::trivial(1)), DerivedLength::Solvable(0));
        assert_eq!(derived_length(&s3()), DerivedLength::Solvable(2));
        assert_eq!(derived_length(&s4()), DerivedLength::Solvable(3));
        assert_eq!(derived_length(&a5()), DerivedLength::Unsolvable);
    }

    #[test]
    fn agemos() {
        let v4 = group(4, &[&[&[0, 1]], &[&[2, 3]]]);
        assert!(agemo(&v4, 2).unwrap().is_trivial());
        let c4 = group(4, &[&[&[0, 1, 2, 3]]]);
        assert_eq!(agemo(&c4, 2).unwrap().order(), 2);
        let q = q8();
        assert_eq!(agemo(&q, 2).unwrap().into_group(), center(&q).into_group());
        assert_eq!(agemo(&q, 4), Err(GroupError::NotPrime(4)));
    }

    #[test]
    fn intersections() {
        let g = s4();
        let c4 = g.subgroup_generated([&cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let d8 = normalizer(&g, &c4).unwrap();
        assert_eq!(intersection(&d8, &d8).unwrap(), d8);
        let cent = centralizer(&g, &cyc(4, &[&[0, 1, 2, 3]])).unwrap();
        assert_eq!(intersection(&d8, &cent).unwrap(), c4);

        let g = s3();
        let a3 = g.subgroup_generated([&cyc(3, &[&[0, 1, 2]])]).unwrap();
        let t = g.subgroup_generated([&cyc(3, &[&[0, 1]])]).unwrap();
        assert!(intersection(&a3, &t).unwrap().is_trivial());

        let other = s4().as_subgroup();
        assert_eq!(intersection(&a3, &other), Err(GroupError::ParentMismatch));
    }
}
