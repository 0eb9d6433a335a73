//! Quotient groups `G/N` realized as the action of `G` on the cosets of `N`.
//!
//! Cosets are indexed by their canonical-least element, so coset `0` is `N`
//! itself. An element `x` acts by `Nc -> Ncx`, which is a homomorphism under
//! the left-to-right composition convention.

use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::perm::Permutation;
use crate::structure::is_normal;

#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: Group,
    kernel: Subgroup,
    /// Canonical-least representative of each coset, in increasing order.
    coset_reps: Vec<Permutation>,
    /// Coset index of each source element, by canonical position.
    coset_of: Vec<u32>,
    image: Group,
}

pub fn quotient_group(g: &Group, n: &Group) -> Result<QuotientMap> {
    if !is_normal(g, n) {
        return Err(if n.is_subset_of(g) {
            GroupError::NotNormal
        } else {
            GroupError::NotASubgroup
        });
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut coset_reps = Vec::with_capacity(g.order() / n.order());
    for (i, x) in g.iter().enumerate() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = coset_reps.len() as u32;
        for k in n.iter() {
            let y = x.compose(k);
            coset_of[g.index_of(&y).expect("coset lies in G")] = c;
        }
        coset_reps.push(x.clone());
    }
    let mut map = QuotientMap {
        source: g.clone(),
        kernel: Subgroup::new_unchecked(g, n.clone()),
        coset_reps,
        coset_of,
        image: Group::trivial(1),
    };
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| map.project_unchecked(x))
        .filter(|y| !y.is_identity())
        .collect();
    map.image = Group::from_generators_capped(map.index(), gens, usize::MAX)?;
    debug_assert_eq!(map.image.order() * n.order(), g.order());
    Ok(map)
}

impl QuotientMap {
    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Group {
        &self.image
    }

    pub fn coset_reps(&self) -> &[Permutation] {
        &self.coset_reps
    }

    /// `|G:N|`, the degree of the image.
    pub fn index(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn coset_of(&self, x: &Permutation) -> Result<usize> {
        let i = self
            .source
            .index_of(x)
            .ok_or_else(|| GroupError::NotAnElement(x.to_string()))?;
        Ok(self.coset_of[i] as usize)
    }

    fn project_unchecked(&self, x: &Permutation) -> Permutation {
        let images = self
            .coset_reps
            .iter()
            .map(|r| {
                let y = r.compose(x);
                self.coset_of[self.source.index_of(&y).expect("closed")]
            })
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Image of `x` in `G/N`.
    pub fn project(&self, x: &Permutation) -> Result<Permutation> {
        self.source.check_member(x)?;
        Ok(self.project_unchecked(x))
    }

    /// `HN/N` as a subgroup of the image.
    pub fn project_subgroup(&self, h: &Group) -> Result<Subgroup> {
        if !h.is_subset_of(&self.source) {
            return Err(GroupError::NotASubgroup);
        }
        let projected: Vec<Permutation> =
            h.generators().iter().map(|x| self.project_unchecked(x)).collect();
        self.image.subgroup_generated(&projected)
    }

    /// Full preimage in `G` of a subgroup of the image.
    pub fn preimage(&self, hbar: &Group) -> Result<Subgroup> {
        if !hbar.is_subset_of(&self.image) {
            return Err(GroupError::NotASubgroup);
        }
        // An image element maps the kernel coset 0 to the coset it represents.
        let mut wanted = vec![false; self.index()];
        for y in hbar.iter() {
            wanted[y.apply(0)] = true;
        }
        Ok(self
            .source
            .filter_subgroup(|x| wanted[self.coset_of[self.source.index_of(x).expect("member")] as usize]))
    }

    /// Composite map `G -> (G/N)/M̄`, realized directly as `G/M` where `M` is
    /// the preimage of `M̄`.
    pub fn then(&self, mbar: &Group) -> Result<QuotientMap> {
        let m = self.preimage(mbar)?;
        quotient_group(&self.source, &m)
    }
}
