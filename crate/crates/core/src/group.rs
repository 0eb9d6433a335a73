//! Finite permutation groups, materialized as full sorted element sets.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use indexmap::IndexSet;

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Default refusal threshold for element enumeration.
pub const DEFAULT_ORDER_CAP: usize = 100_000;

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    /// Sorted lexicographically by image array.
    elements: IndexSet<Permutation>,
}

/// A finite permutation group with all of its elements enumerated.
///
/// Cloning is cheap: the element set is shared.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// Closure of `gens` under composition, refusing groups above [`DEFAULT_ORDER_CAP`].
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Group> {
        Group::from_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        gens: Vec<Permutation>,
        cap: usize,
    ) -> Result<Group> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for g in &gens {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            partial: seen.len(),
                        });
                    }
                    seen.insert(y.clone());
                    queue.push(y);
                }
            }
        }
        Ok(Group::assemble(degree, gens, queue))
    }

    /// The trivial group of the given degree.
    pub fn trivial(degree: usize) -> Group {
        Group::assemble(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn assemble(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Group {
        elements.sort_unstable();
        Group(Arc::new(GroupData {
            degree,
            generators,
            elements: elements.into_iter().collect(),
        }))
    }

    /// Builds a group from a set already known to be a subgroup, deriving a
    /// small generating set greedily in canonical order.
    pub(crate) fn from_closed_set(degree: usize, elements: Vec<Permutation>) -> Group {
        let mut closure = Closure::new(degree);
        let mut sorted = elements;
        sorted.sort_unstable();
        for x in &sorted {
            closure.adjoin(x);
        }
        debug_assert_eq!(closure.len(), sorted.len(), "set was not closed");
        Group(Arc::new(GroupData {
            degree,
            generators: closure.generators,
            elements: sorted.into_iter().collect(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    /// Elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &IndexSet<Permutation> {
        &self.0.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.0.elements.iter()
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.0.elements.contains(x)
    }

    /// Position of `x` in canonical order.
    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.0.elements.get_index_of(x)
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.0.elements[i]
    }

    pub fn check_member(&self, x: &Permutation) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(GroupError::NotAnElement(x.to_string()))
        }
    }

    /// Every element of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.order() <= other.order()
            && self.iter().all(|x| other.contains(x))
    }

    pub fn same_elements(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.order() == other.order() && self.is_subset_of(other))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Order of an element of this group.
    pub fn element_order(&self, x: &Permutation) -> Result<u64> {
        self.check_member(x)?;
        Ok(x.order())
    }

    /// The whole group viewed as a subgroup of itself.
    pub fn as_subgroup(&self) -> Subgroup {
        Subgroup {
            parent: self.clone(),
            group: self.clone(),
        }
    }

    /// Smallest subgroup containing `seeds`.
    pub fn subgroup_generated<'a, I>(&self, seeds: I) -> Result<Subgroup>
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut closure = Closure::new(self.degree());
        for s in seeds {
            self.check_member(s)?;
            closure.adjoin(s);
        }
        Ok(Subgroup {
            parent: self.clone(),
            group: closure.into_group(),
        })
    }

    /// Subgroup whose elements are exactly those of `self` satisfying `keep`.
    /// The caller guarantees that the filtered set is closed.
    pub(crate) fn filter_subgroup<F>(&self, keep: F) -> Subgroup
    where
        F: FnMut(&&Permutation) -> bool,
    {
        let elements: Vec<Permutation> = self.iter().filter(keep).cloned().collect();
        Subgroup {
            parent: self.clone(),
            group: Group::from_closed_set(self.degree(), elements),
        }
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.same_elements(other)
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

/// A group together with the group it was taken inside of.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Group,
    group: Group,
}

impl Subgroup {
    /// Wraps `group` as a subgroup of `parent`, checking containment.
    pub fn new(parent: &Group, group: Group) -> Result<Subgroup> {
        if !group.is_subset_of(parent) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(Subgroup {
            parent: parent.clone(),
            group,
        })
    }

    pub(crate) fn new_unchecked(parent: &Group, group: Group) -> Subgroup {
        debug_assert!(group.is_subset_of(parent));
        Subgroup {
            parent: parent.clone(),
            group,
        }
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.group.order()
    }

    /// True when `self` is a subgroup of the group `g` (by element set).
    pub fn lies_in(&self, g: &Group) -> bool {
        self.group.is_subset_of(g)
    }

    /// Re-homes this subgroup under another parent containing it.
    pub fn within(&self, parent: &Group) -> Result<Subgroup> {
        Subgroup::new(parent, self.group.clone())
    }
}

impl Deref for Subgroup {
    type Target = Group;

    fn deref(&self) -> &Group {
        &self.group
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
    }
}

/// Incremental subgroup closure (Dimino): adjoining a generator appends whole
/// right cosets of the current subgroup.
pub(crate) struct Closure {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    members: HashSet<Permutation>,
}

impl Closure {
    pub(crate) fn new(degree: usize) -> Closure {
        let id = Permutation::identity(degree);
        Closure {
            degree,
            generators: Vec::new(),
            elements: vec![id.clone()],
            members: HashSet::from([id]),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn contains(&self, x: &Permutation) -> bool {
        self.members.contains(x)
    }

    pub(crate) fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Adds `s` as a generator unless it already lies in the closure.
    /// Returns whether the closure grew.
    pub(crate) fn adjoin(&mut self, s: &Permutation) -> bool {
        if self.members.contains(s) {
            return false;
        }
        self.generators.push(s.clone());
        let base: Vec<Permutation> = self.elements.clone();
        self.add_coset(&base, s);
        // Walk coset representatives; each coset block has base.len() elements.
        let block = base.len();
        let mut rep_start = block;
        while rep_start < self.elements.len() {
            let rep = self.elements[rep_start].clone();
            for g in self.generators.clone() {
                let t = rep.compose(&g);
                if !self.members.contains(&t) {
                    self.add_coset(&base, &t);
                }
            }
            rep_start += block;
        }
        true
    }

    fn add_coset(&mut self, base: &[Permutation], t: &Permutation) {
        for h in base {
            let x = h.compose(t);
            self.members.insert(x.clone());
            self.elements.push(x);
        }
    }

    pub(crate) fn into_group(self) -> Group {
        Group::assemble(self.degree, self.generators, self.elements)
    }
}
