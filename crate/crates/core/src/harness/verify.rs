//! Verdicts for the main bounds, their corollary, the pq example, the
//! negative controls and the lemma suite.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::group::{Group, Subgroup};
use crate::harness::corpus::nonabelian_pq;
use crate::indices::{epsilon_from_sizes, sylow_class_witness};
use crate::perm::Permutation;
use crate::primes::{is_prime, pi_exponent, pi_part, prime_divisors, PrimeSet};
use crate::pi_series::{o_pi, o_pi_prime, o_pi_prime_pi, upper_pi_series, UpperPiSeries};
use crate::quotient::{quotient_group, QuotientMap};
use crate::structure::{
    center, centralizer, centralizer_of_subgroup, conjugacy_classes, conjugating_element,
    derived_length, derived_subgroup, is_normal, meet, normal_closure, ConjugacyClass,
};
use crate::sylow::{frattini_p, frattini_series, sylow_order, sylow_subgroup, sylow_subgroup_from, SylowSeed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Lt,
    Gt,
    Eq,
    Divides,
    ProperDivides,
}

impl Relation {
    pub fn check(self, lhs: u64, rhs: u64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
            Relation::Divides => lhs != 0 && rhs % lhs == 0,
            Relation::ProperDivides => lhs != 0 && rhs % lhs == 0 && lhs < rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Held,
    Failed,
    /// Preconditions unmet; nothing asserted.
    Skipped,
    /// Computed and recorded, but outside what the claim covers.
    Info,
}

/// Outcome of one claim on one group for one parameter choice.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub group: String,
    pub claim: String,
    pub params: String,
    pub lhs: Option<u64>,
    pub rhs: Option<u64>,
    pub relation: Relation,
    /// Exact `(lhs, rhs)` the claim pins, when it pins them.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<[u64; 2]>,
    pub holds: bool,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    fn compare(group: &str, claim: &str, params: String, lhs: u64, relation: Relation, rhs: u64, detail: String) -> Verdict {
        let holds = relation.check(lhs, rhs);
        Verdict {
            group: group.to_string(),
            claim: claim.to_string(),
            params,
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation,
            expected: None,
            holds,
            status: if holds { Status::Held } else { Status::Failed },
            detail,
        }
    }

    fn skipped(group: &str, claim: &str, params: String, relation: Relation, detail: &str) -> Verdict {
        Verdict {
            group: group.to_string(),
            claim: claim.to_string(),
            params,
            lhs: None,
            rhs: None,
            relation,
            expected: None,
            holds: false,
            status: Status::Skipped,
            detail: detail.to_string(),
        }
    }

    fn into_info(mut self) -> Verdict {
        self.status = Status::Info;
        self
    }

    fn with_expected(mut self, lhs: u64, rhs: u64) -> Verdict {
        self.expected = Some([lhs, rhs]);
        self.holds = self.holds && self.lhs == Some(lhs) && self.rhs == Some(rhs);
        self.status = if self.holds { Status::Held } else { Status::Failed };
        self
    }
}

fn p_param(p: u64) -> String {
    format!("p={p}")
}

fn pi_param(pi: &PrimeSet) -> String {
    format!("pi={pi}")
}

/// Counts instances of a family-wide lemma; recorded as `held == total`.
struct Tally {
    held: u64,
    total: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { held: 0, total: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.held += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn verdict(self, group: &str, claim: &str, params: String) -> Verdict {
        let detail = match self.first_failure {
            Some(f) => format!("first violation: {f}"),
            None if self.total == 0 => "vacuous".to_string(),
            None => format!("{} instances", self.total),
        };
        Verdict::compare(group, claim, params, self.held, Relation::Eq, self.total, detail)
    }
}

/// A normal subgroup together with its quotient data.
pub struct NormalCase {
    pub kernel: Subgroup,
    pub map: QuotientMap,
    /// Class sizes of `G/N`.
    pub image_class_sizes: Vec<u64>,
    /// For each class representative `x` of `G`, `|x̄^(G/N)|`.
    pub rep_image_sizes: Vec<u64>,
}

impl NormalCase {
    pub fn new(g: &Group, reps: &[Permutation], n: &Group) -> Result<NormalCase> {
        let map = quotient_group(g, n)?;
        let classes = conjugacy_classes(map.image());
        let mut size_of: HashMap<&Permutation, u64> = HashMap::new();
        for c in &classes {
            for m in &c.members {
                size_of.insert(m, c.size as u64);
            }
        }
        let rep_image_sizes = reps
            .iter()
            .map(|x| size_of[&map.project(x).expect("member")])
            .collect();
        Ok(NormalCase {
            kernel: Subgroup::new_unchecked(g, n.clone()),
            image_class_sizes: classes.iter().map(|c| c.size as u64).collect(),
            rep_image_sizes,
            map,
        })
    }
}

/// Cached structural data of one group, shared by all checks on it.
pub struct Analysis {
    pub name: String,
    pub group: Group,
    pub classes: Vec<ConjugacyClass>,
    pub center: Subgroup,
    sylows: Mutex<BTreeMap<u64, Subgroup>>,
    series: Mutex<BTreeMap<PrimeSet, UpperPiSeries>>,
    central: OnceLock<(QuotientMap, Box<Analysis>)>,
    normal_family: OnceLock<Vec<NormalCase>>,
}

impl Analysis {
    pub fn new(name: &str, group: &Group) -> Analysis {
        Analysis {
            name: name.to_string(),
            group: group.clone(),
            classes: conjugacy_classes(group),
            center: center(group),
            sylows: Mutex::new(BTreeMap::new()),
            series: Mutex::new(BTreeMap::new()),
            central: OnceLock::new(),
            normal_family: OnceLock::new(),
        }
    }

    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn primes(&self) -> Vec<u64> {
        prime_divisors(self.order())
    }

    pub fn reps(&self) -> Vec<Permutation> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size as u64).collect()
    }

    /// `ε_π(G)`.
    pub fn epsilon(&self, pi: &PrimeSet) -> u32 {
        epsilon_from_sizes(&self.class_sizes(), pi)
    }

    pub fn sylow(&self, p: u64) -> Subgroup {
        let mut cache = self.sylows.lock().expect("poisoned");
        cache
            .entry(p)
            .or_insert_with(|| sylow_subgroup(&self.group, p).expect("prime"))
            .clone()
    }

    pub fn series(&self, pi: &PrimeSet) -> UpperPiSeries {
        if let Some(s) = self.series.lock().expect("poisoned").get(pi) {
            return s.clone();
        }
        let s = upper_pi_series(&self.group, pi);
        self.series.lock().expect("poisoned").insert(pi.clone(), s.clone());
        s
    }

    fn central_pair(&self) -> &(QuotientMap, Box<Analysis>) {
        self.central.get_or_init(|| {
            let map = quotient_group(&self.group, &self.center).expect("center is normal");
            let inner = Analysis::new(&format!("{}/Z", self.name), map.image());
            (map, Box::new(inner))
        })
    }

    /// `G -> G/Z(G)`.
    pub fn central_map(&self) -> &QuotientMap {
        &self.central_pair().0
    }

    /// Analysis of `G/Z(G)`.
    pub fn central_quotient(&self) -> &Analysis {
        &self.central_pair().1
    }

    /// Distinct nontrivial normal closures of class representatives, plus the
    /// center and the derived subgroup, each with its quotient.
    pub fn normal_family(&self) -> &[NormalCase] {
        self.normal_family.get_or_init(|| {
            let g = &self.group;
            let mut candidates: Vec<Group> = Vec::new();
            for c in &self.classes {
                candidates.push(normal_closure(g, [&c.representative]).expect("member").into_group());
            }
            candidates.push(self.center.group().clone());
            candidates.push(derived_subgroup(g).into_group());
            let mut distinct: Vec<Group> = Vec::new();
            for n in candidates {
                if !n.is_trivial() && !distinct.iter().any(|m| *m == n) {
                    distinct.push(n);
                }
            }
            distinct.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.iter().cmp(b.iter())));
            let reps = self.reps();
            distinct
                .iter()
                .map(|n| NormalCase::new(g, &reps, n).expect("normal"))
                .collect()
        })
    }
}

fn frattini_length_of(pg: &Group, p: u64) -> u32 {
    frattini_series(pg, p).expect("Sylow subgroups are p-groups").length
}

fn max_exponent(pg: &Group, p: u64) -> u32 {
    pg.iter().map(Permutation::order).max().unwrap_or(1).ilog(p)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

/// `φ_p(G/Z(G)) <= ε_p(G)`.
pub fn verify_theorem1(a: &Analysis, p: u64) -> Result<Verdict> {
    check_prime(p)?;
    let q = a.central_quotient();
    let lhs = frattini_length_of(&q.sylow(p), p);
    let rhs = a.epsilon(&PrimeSet::single(p)?);
    Ok(Verdict::compare(
        &a.name,
        "t1",
        p_param(p),
        lhs as u64,
        Relation::Le,
        rhs as u64,
        format!("phi_p(G/Z)={lhs}, eps_p(G)={rhs}, |Z|={}", a.center.order()),
    ))
}

/// `d_p(G/Z(G)) <= ε_p(G)` and `e_p(G/Z(G)) <= ε_p(G)`.
pub fn verify_corollary(a: &Analysis, p: u64) -> Result<(Verdict, Verdict)> {
    check_prime(p)?;
    let q = a.central_quotient();
    let sylow = q.sylow(p);
    let d = derived_length(&sylow).value().expect("p-groups are solvable");
    let e = max_exponent(&sylow, p);
    let rhs = a.epsilon(&PrimeSet::single(p)?) as u64;
    Ok((
        Verdict::compare(&a.name, "cor-d", p_param(p), d as u64, Relation::Le, rhs, format!("d_p(G/Z)={d}, eps_p(G)={rhs}")),
        Verdict::compare(&a.name, "cor-e", p_param(p), e as u64, Relation::Le, rhs, format!("e_p(G/Z)={e}, eps_p(G)={rhs}")),
    ))
}

/// `l_π(G/Z(G)) <= ε_π(G)` for π-separable `G`.
///
/// When `G` is not π-separable but `G/Z(G)` is, the comparison is recorded
/// as informational only.
pub fn verify_theorem2(a: &Analysis, pi: &PrimeSet) -> Verdict {
    let on_g = a.series(pi);
    let on_q = a.central_quotient().series(pi);
    let rhs = a.epsilon(pi) as u64;
    if !on_q.separable {
        let detail = if on_g.separable {
            "G/Z not separable although G is"
        } else {
            "not separable"
        };
        if on_g.separable {
            // separability of G passes to G/Z; reaching here is a defect
            return Verdict {
                status: Status::Failed,
                ..Verdict::skipped(&a.name, "t2", pi_param(pi), Relation::Le, detail)
            };
        }
        return Verdict::skipped(&a.name, "t2", pi_param(pi), Relation::Le, detail);
    }
    let lhs = on_q.length as u64;
    let v = Verdict::compare(
        &a.name,
        "t2",
        pi_param(pi),
        lhs,
        Relation::Le,
        rhs,
        format!("l_pi(G/Z)={lhs} (series orders {:?}), eps_pi(G)={rhs}", on_q.orders()),
    );
    if on_g.separable {
        v
    } else {
        Verdict {
            claim: "t2-quotient-only".to_string(),
            ..v.into_info()
        }
    }
}

/// The nonabelian group of order `pq` with π = {p, q}: `d_π(G/Z) = 2 > ε_π(G) = 1`.
pub fn verify_example1(p: u64, q: u64) -> Result<Verdict> {
    let g = nonabelian_pq(p, q)?;
    let a = Analysis::new(&format!("pq({p},{q})"), &g);
    let pi = PrimeSet::new([p, q])?;
    let quotient = a.central_quotient();
    // G/Z is a π-group, so its Hall π-subgroup is all of G/Z.
    let d = derived_length(&quotient.group).value().expect("solvable") as u64;
    let eps = a.epsilon(&pi) as u64;
    let class_sizes = {
        let mut s = a.class_sizes();
        s.sort_unstable();
        s
    };
    Ok(Verdict::compare(
        &a.name,
        "example1",
        pi_param(&pi),
        d,
        Relation::Gt,
        eps,
        format!(
            "|Z|={}, d_pi(G/Z)=d(G)={d}, eps_pi(G)={eps}, class sizes {class_sizes:?}: gap confirmed",
            a.center.order()
        ),
    )
    .with_expected(2, 1))
}

/// `φ_p(G) > ε_p(G)`: the Frattini bound fails with `G` in place of `G/Z(G)`.
pub fn verify_negative_control(a: &Analysis, p: u64) -> Result<Verdict> {
    check_prime(p)?;
    if a.order() % p != 0 {
        return Err(GroupError::NotCounterexample(format!("{p} does not divide |G|")));
    }
    let lhs = frattini_length_of(&a.sylow(p), p) as u64;
    let rhs = a.epsilon(&PrimeSet::single(p)?) as u64;
    if lhs <= rhs {
        return Err(GroupError::NotCounterexample(format!(
            "phi_p(G)={lhs} <= eps_p(G)={rhs}"
        )));
    }
    Ok(Verdict::compare(
        &a.name,
        "neg-control-t1",
        p_param(p),
        lhs,
        Relation::Gt,
        rhs,
        format!("phi_p(G)={lhs} > eps_p(G)={rhs}"),
    ))
}

/// `l_π(G) > ε_π(G)`: the π-length bound fails with `G` in place of `G/Z(G)`.
pub fn verify_negative_control_pi(a: &Analysis, pi: &PrimeSet) -> Result<Verdict> {
    let series = a.series(pi);
    if !series.separable {
        return Err(GroupError::NotCounterexample("not separable".to_string()));
    }
    let lhs = series.length as u64;
    let rhs = a.epsilon(pi) as u64;
    if lhs <= rhs {
        return Err(GroupError::NotCounterexample(format!(
            "l_pi(G)={lhs} <= eps_pi(G)={rhs}"
        )));
    }
    Ok(Verdict::compare(
        &a.name,
        "neg-control-t2",
        pi_param(pi),
        lhs,
        Relation::Gt,
        rhs,
        format!("l_pi(G)={lhs} > eps_pi(G)={rhs}"),
    ))
}

/// Subgroups `<x, y>` of `pg` for a strided sample of element pairs, deduplicated.
pub fn pair_subgroups(pg: &Group, max_per_axis: usize) -> Vec<Group> {
    let n = pg.order();
    let stride = n.div_ceil(max_per_axis).max(1);
    let picks: Vec<&Permutation> = pg.iter().step_by(stride).collect();
    let mut out: Vec<Group> = Vec::new();
    for (i, x) in picks.iter().enumerate() {
        for y in &picks[i..] {
            let h = pg.subgroup_generated([*x, *y]).expect("members").into_group();
            if !out.iter().any(|k| *k == h) {
                out.push(h);
            }
        }
    }
    out
}

/// Lemmas that depend only on the group.
pub fn group_lemmas(a: &Analysis) -> Vec<Verdict> {
    let g = &a.group;
    let name = &a.name;
    let reps = a.reps();
    let mut out = Vec::new();

    let generated = g.subgroup_generated(&reps).expect("members");
    out.push(Verdict::compare(
        name,
        "burnside-gen",
        String::new(),
        generated.order() as u64,
        Relation::Eq,
        a.order(),
        format!("{} class representatives", reps.len()),
    ));

    let total: u64 = a.class_sizes().iter().sum();
    out.push(Verdict::compare(name, "class-partition", String::new(), total, Relation::Eq, a.order(), "sum of class sizes".into()));

    let mut t = Tally::new();
    let mut center_meet = g.clone();
    for c in &a.classes {
        let cent = centralizer(g, &c.representative).expect("member");
        t.record(cent.order() * c.size == g.order(), || format!("x={}", c.representative));
        center_meet = meet(&center_meet, &cent).into_group();
    }
    out.push(t.verdict(name, "orbit-stabilizer", String::new()));
    out.push(Verdict::compare(
        name,
        "center-meet",
        String::new(),
        a.center.order() as u64,
        Relation::Eq,
        center_meet.order() as u64,
        "Z(G) vs intersection of centralizers of representatives".into(),
    ));

    let derived = derived_subgroup(g);
    let mut t = Tally::new();
    t.record(is_normal(g, &derived), || "[G,G] not normal".into());
    let q = quotient_group(g, &derived).expect("normal");
    t.record(q.image().is_abelian(), || "G/[G,G] not abelian".into());
    out.push(t.verdict(name, "derived-normal", String::new()));

    let mut div = Tally::new();
    let mut strict = Tally::new();
    for case in a.normal_family() {
        let n = &case.kernel;
        for (k, c) in a.classes.iter().enumerate() {
            let (img, src) = (case.rep_image_sizes[k], c.size as u64);
            div.record(Relation::Divides.check(img, src), || {
                format!("|N|={}, x={}: {img} does not divide {src}", n.order(), c.representative)
            });
            let cent = centralizer(g, &c.representative).expect("member");
            if meet(n, &cent).order() < n.order() {
                strict.record(Relation::ProperDivides.check(img, src), || {
                    format!("|N|={}, x={}: {img} not a proper divisor of {src}", n.order(), c.representative)
                });
            }
        }
    }
    out.push(div.verdict(name, "class-div", String::new()));
    out.push(strict.verdict(name, "class-div-strict", String::new()));
    out
}

/// Lemmas about one prime `p`.
pub fn prime_lemmas(a: &Analysis, p: u64) -> Result<Vec<Verdict>> {
    check_prime(p)?;
    let g = &a.group;
    let name = &a.name;
    let param = p_param(p);
    let sp = PrimeSet::single(p)?;
    let sylow = a.sylow(p);
    let mut out = Vec::new();

    out.push(Verdict::compare(
        name,
        "sylow-order",
        param.clone(),
        sylow.order() as u64,
        Relation::Eq,
        sylow_order(g, p) as u64,
        String::new(),
    ));

    let other = sylow_subgroup_from(g, p, SylowSeed::Last)?;
    let mut t = Tally::new();
    t.record(conjugating_element(g, &sylow, &other).is_some(), || "no conjugating element".into());
    out.push(t.verdict(name, "sylow-conj", param.clone()));

    let series = frattini_series(&sylow, p)?;
    let phi = series.length as u64;
    out.push(Verdict::compare(
        name,
        "phi-welldef",
        param.clone(),
        phi,
        Relation::Eq,
        frattini_length_of(&other, p) as u64,
        "Frattini length over two Sylow subgroups".into(),
    ));

    let mut t = Tally::new();
    for c in &a.classes {
        let ok = sylow_class_witness(g, &c.representative, &sylow, p).is_ok();
        t.record(ok, || format!("x={}", c.representative));
    }
    out.push(t.verdict(name, "witness", param.clone()));

    let d = derived_length(&sylow).value().expect("p-group") as u64;
    let e = max_exponent(&sylow, p) as u64;
    out.push(Verdict::compare(name, "d-le-phi", param.clone(), d, Relation::Le, phi, format!("d_p={d}, phi_p={phi}")));
    out.push(Verdict::compare(name, "e-le-phi", param.clone(), e, Relation::Le, phi, format!("e_p={e}, phi_p={phi}")));

    let frattini = series.steps.get(1).cloned().unwrap_or_else(|| sylow.group().clone());
    let pairs = pair_subgroups(&sylow, 12);
    let mut t = Tally::new();
    for h in &pairs {
        let fh = frattini_p(h, p)?;
        t.record(fh.is_subset_of(&frattini), || format!("|H|={}", h.order()));
    }
    out.push(t.verdict(name, "phi-mono", param.clone()));

    let mut tested: Vec<Group> = pairs.clone();
    tested.extend(sylow.iter().map(|x| sylow.subgroup_generated([x]).expect("member").into_group()));
    tested.extend(series.steps.iter().cloned());
    let mut t = Tally::new();
    for h in &tested {
        let m = (sylow.order() / h.order()).ilog(p as usize) as usize;
        let step = series.steps.get(m).cloned().unwrap_or_else(|| Group::trivial(g.degree()));
        t.record(step.is_subset_of(h), || format!("|H|={}, m={m}", h.order()));
    }
    out.push(t.verdict(name, "phi-index", param.clone()));

    let map = a.central_map();
    let mut t = Tally::new();
    for h in std::iter::once(sylow.group()).chain(pairs.iter()) {
        let lhs = frattini_p(map.project_subgroup(h)?.group(), p)?;
        let rhs = map.project_subgroup(frattini_p(h, p)?.group())?;
        t.record(lhs.group() == rhs.group(), || format!("|H|={}", h.order()));
    }
    out.push(t.verdict(name, "phi-center", param.clone()));

    let projected = map.project_subgroup(&sylow)?;
    let projected_series = frattini_series(&projected, p)?;
    let steps = series.steps.len().max(projected_series.steps.len());
    let trivial_image = Group::trivial(map.image().degree());
    let mut t = Tally::new();
    for m in 0..steps {
        let lhs = projected_series.steps.get(m).unwrap_or(&trivial_image);
        let rhs = match series.steps.get(m) {
            Some(s) => map.project_subgroup(s)?.into_group(),
            None => trivial_image.clone(),
        };
        t.record(*lhs == rhs, || format!("m={m}"));
    }
    out.push(t.verdict(name, "phi-center-iter", param.clone()));

    if a.epsilon(&sp) == 0 {
        out.push(Verdict::compare(
            name,
            "camina",
            param,
            meet(&sylow, &a.center).order() as u64,
            Relation::Eq,
            sylow.order() as u64,
            "eps_p(G)=0: Sylow subgroup central".into(),
        ));
    } else {
        out.push(Verdict::skipped(name, "camina", param, Relation::Eq, "eps_p(G) > 0"));
    }
    Ok(out)
}

/// Lemmas about one prime set π.
pub fn pi_lemmas(a: &Analysis, pi: &PrimeSet) -> Vec<Verdict> {
    let g = &a.group;
    let name = &a.name;
    let param = pi_param(pi);
    let eps = a.epsilon(pi) as u64;
    let mut out = Vec::new();

    let mut t = Tally::new();
    for c in &a.classes {
        let whole = pi_exponent(c.size as u64, pi);
        let split: u32 = pi
            .primes()
            .iter()
            .map(|&p| pi_exponent(c.size as u64, &PrimeSet::single(p).expect("prime")))
            .sum();
        t.record(whole == split, || format!("x={}", c.representative));
    }
    out.push(t.verdict(name, "eps-additive", param.clone()));

    let opi = o_pi(g, pi);
    let mut t = Tally::new();
    t.record(is_normal(g, &opi), || "O_pi not normal".into());
    t.record(pi.is_pi_number(opi.order() as u64), || "O_pi not a pi-group".into());
    for case in a.normal_family() {
        let n = &case.kernel;
        if pi.is_pi_number(n.order() as u64) {
            t.record(n.is_subset_of(&opi), || format!("normal pi-subgroup of order {} outside O_pi", n.order()));
        }
    }
    out.push(t.verdict(name, "o-pi-largest", param.clone()));

    let mut mono = Tally::new();
    let mut strict = Tally::new();
    let mut strict_case = |n: &Group, image_eps: u64| {
        let proper_pi = n.order() < g.order() && pi.is_pi_number(n.order() as u64);
        if proper_pi && centralizer_of_subgroup(g, n).expect("subgroup").is_subset_of(n) {
            strict.record(image_eps < eps, || format!("|N|={}: {image_eps} !< {eps}", n.order()));
        }
    };
    for case in a.normal_family() {
        let image_eps = epsilon_from_sizes(&case.image_class_sizes, pi) as u64;
        mono.record(image_eps <= eps, || format!("|N|={}: {image_eps} > {eps}", case.kernel.order()));
        strict_case(&case.kernel, image_eps);
    }
    if !opi.is_trivial() && !a.normal_family().iter().any(|c| *c.kernel == *opi) {
        let q = quotient_group(g, &opi).expect("normal");
        let image_eps = epsilon_from_sizes(
            &conjugacy_classes(q.image()).iter().map(|c| c.size as u64).collect::<Vec<_>>(),
            pi,
        ) as u64;
        mono.record(image_eps <= eps, || format!("N=O_pi: {image_eps} > {eps}"));
        strict_case(&opi, image_eps);
    }
    out.push(mono.verdict(name, "eps-mono", param.clone()));
    out.push(strict.verdict(name, "eps-mono-strict", param.clone()));

    let series = a.series(pi);
    if series.separable {
        let k = o_pi_prime(g, pi);
        let q = quotient_group(g, &k).expect("normal");
        let top = o_pi(q.image(), pi);
        let cent = centralizer_of_subgroup(q.image(), &top).expect("subgroup");
        out.push(Verdict::compare(
            name,
            "hall-higman",
            param.clone(),
            cent.order() as u64,
            Relation::Eq,
            meet(&cent, &top).order() as u64,
            format!("|C(O_pi)|={} in G/O_pi' with |O_pi|={}", cent.order(), top.order()),
        ));

        let opp = o_pi_prime_pi(g, pi);
        let cent = centralizer_of_subgroup(g, &opp).expect("subgroup");
        let mut t = Tally::new();
        t.record(a.center.is_subset_of(&cent), || "Z not in C(O_pi',pi)".into());
        t.record(cent.is_subset_of(&opp), || "C(O_pi',pi) not in O_pi',pi".into());
        out.push(t.verdict(name, "center-in-opp", param.clone()));

        let mut t = Tally::new();
        if *a.center.group() == *opp.group() {
            t.record(g.is_abelian(), || "Z = O_pi',pi but G nonabelian".into());
        }
        out.push(t.verdict(name, "center-opp-abelian", param.clone()));

        let mut t = Tally::new();
        for (i, w) in series.terms.windows(2).enumerate() {
            let (lo, hi) = (&w[0], &w[1]);
            let factor = (hi.order() / lo.order()) as u64;
            t.record(lo.is_subset_of(hi) && is_normal(g, hi), || format!("term {i} not normal or not ascending"));
            let ok = if i % 2 == 0 {
                pi.complement_in(factor).is_pi_number(factor) && pi_part(factor, pi) == 1
            } else {
                pi.is_pi_number(factor)
            };
            t.record(ok, || format!("factor {i} of order {factor} has the wrong type"));
        }
        out.push(t.verdict(name, "series-shape", param.clone()));
    } else {
        for claim in ["hall-higman", "center-in-opp", "center-opp-abelian", "series-shape"] {
            out.push(Verdict::skipped(name, claim, param.clone(), Relation::Eq, "not separable"));
        }
    }

    if eps == 0 {
        let qz = a.central_quotient().order();
        out.push(Verdict::compare(
            name,
            "camina-pi",
            param,
            pi_part(qz, pi),
            Relation::Eq,
            1,
            "eps_pi(G)=0: G/Z is a pi'-group".into(),
        ));
    } else {
        out.push(Verdict::skipped(name, "camina-pi", param, Relation::Eq, "eps_pi(G) > 0"));
    }
    out
}

/// Every lemma check for `G` and π: group-level, per prime of π dividing `|G|`, and π-level.
pub fn verify_lemma_suite(a: &Analysis, pi: &PrimeSet) -> Vec<Verdict> {
    let mut out = group_lemmas(a);
    for &p in pi.primes() {
        if a.order() % p == 0 {
            out.extend(prime_lemmas(a, p).expect("prime"));
        }
    }
    out.extend(pi_lemmas(a, pi));
    out
}
