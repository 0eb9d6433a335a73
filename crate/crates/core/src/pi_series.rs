//! `O_π`, `O_{π′,π}`, the upper π-series, π-length and π-solvability.

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::perm::Permutation;
use crate::primes::PrimeSet;
use crate::quotient::quotient_group;
use crate::structure::{conjugacy_classes, derived_length, normal_closure};

/// `O_π(G)`, the largest normal π-subgroup.
///
/// An element lies in `O_π(G)` exactly when its normal closure is a
/// π-group, so `O_π(G)` is the normal closure of those class representatives.
pub fn o_pi(g: &Group, pi: &PrimeSet) -> Subgroup {
    let mut chosen: Vec<Permutation> = Vec::new();
    for class in conjugacy_classes(g) {
        let x = &class.representative;
        if x.is_identity() || !pi.is_pi_number(x.order()) {
            continue;
        }
        let closure = normal_closure(g, [x]).expect("member");
        if pi.is_pi_number(closure.order() as u64) {
            chosen.push(x.clone());
        }
    }
    normal_closure(g, &chosen).expect("members")
}

/// `O_π′(G)` with π′ taken inside the primes dividing `|G|`.
pub fn o_pi_prime(g: &Group, pi: &PrimeSet) -> Subgroup {
    o_pi(g, &pi.complement_in(g.order() as u64))
}

/// `O_{π′,π}(G)`: preimage of `O_π(G/O_π′(G))`.
pub fn o_pi_prime_pi(g: &Group, pi: &PrimeSet) -> Subgroup {
    let k = o_pi_prime(g, pi);
    let q = quotient_group(g, &k).expect("O_pi' is normal");
    let top = o_pi(q.image(), pi);
    q.preimage(&top).expect("subgroup of image")
}

/// Which kind of term first reached the whole group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesEnd {
    /// Some `K_i = G` with `P_i < G` (top factor a π′-group).
    PiPrime,
    /// Some `P_i = G` (top factor a π-group).
    Pi,
    /// The construction stalled below `G`.
    Stalled,
}

/// `1 = P_0 <= K_0 < P_1 < K_1 < ... <= K_l = G`.
#[derive(Clone, Debug)]
pub struct UpperPiSeries {
    pub pi: PrimeSet,
    /// Alternating `P_0, K_0, P_1, K_1, ...`; ends at `K_l = G` when separable,
    /// and at the last term computed before the stall otherwise.
    pub terms: Vec<Subgroup>,
    pub length: u32,
    pub separable: bool,
    pub end: SeriesEnd,
}

impl UpperPiSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    /// `P_i` terms.
    pub fn pi_terms(&self) -> impl Iterator<Item = &Subgroup> {
        self.terms.iter().step_by(2)
    }

    /// `K_i` terms.
    pub fn pi_prime_terms(&self) -> impl Iterator<Item = &Subgroup> {
        self.terms.iter().skip(1).step_by(2)
    }
}

impl Serialize for UpperPiSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("UpperPiSeries", 5)?;
        st.serialize_field("pi", &self.pi)?;
        st.serialize_field("orders", &self.orders())?;
        st.serialize_field("length", &self.length)?;
        st.serialize_field("separable", &self.separable)?;
        st.serialize_field("end", &self.end)?;
        st.end()
    }
}

pub fn upper_pi_series(g: &Group, pi: &PrimeSet) -> UpperPiSeries {
    let mut terms = vec![Subgroup::new_unchecked(g, Group::trivial(g.degree()))];
    let mut length = 0;
    loop {
        let p_i = terms.last().expect("nonempty").clone();
        if p_i.order() == g.order() {
            // P_l = G: record K_l = G as well.
            terms.push(p_i);
            return UpperPiSeries { pi: pi.clone(), terms, length, separable: true, end: SeriesEnd::Pi };
        }
        let q = quotient_group(g, &p_i).expect("series terms are normal");
        let k_i = q.preimage(&o_pi_prime(q.image(), pi)).expect("subgroup of image");
        terms.push(k_i.clone());
        if k_i.order() == g.order() {
            return UpperPiSeries {
                pi: pi.clone(),
                terms,
                length,
                separable: true,
                end: SeriesEnd::PiPrime,
            };
        }
        let q = quotient_group(g, &k_i).expect("series terms are normal");
        let p_next = q.preimage(&o_pi(q.image(), pi)).expect("subgroup of image");
        if p_next.order() == k_i.order() {
            return UpperPiSeries {
                pi: pi.clone(),
                terms,
                length,
                separable: false,
                end: SeriesEnd::Stalled,
            };
        }
        terms.push(p_next);
        length += 1;
    }
}

pub fn is_pi_separable(g: &Group, pi: &PrimeSet) -> bool {
    upper_pi_series(g, pi).separable
}

/// `l_π(G)`; only defined for π-separable groups.
pub fn pi_length(g: &Group, pi: &PrimeSet) -> Result<u32> {
    let series = upper_pi_series(g, pi);
    if series.separable {
        Ok(series.length)
    } else {
        Err(GroupError::NotSeparable(pi.to_string()))
    }
}

/// π-separable with solvable π-factors `P_{i+1}/K_i`.
pub fn is_pi_solvable(g: &Group, pi: &PrimeSet) -> bool {
    let series = upper_pi_series(g, pi);
    if !series.separable {
        return false;
    }
    // Pairs (K_i, P_{i+1}); the trailing K_l = G pairs with nothing.
    let t = &series.terms;
    (1..t.len().saturating_sub(1)).step_by(2).all(|i| {
        let (lower, upper) = (&t[i], &t[i + 1]);
        let factor = quotient_group(upper, lower).expect("K_i is normal in P_{i+1}");
        derived_length(factor.image()).value().is_some()
    })
}
