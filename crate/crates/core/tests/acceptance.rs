//! Acceptance criteria. Prints one PASS/FAIL line per criterion and fails
//! if any criterion fails. Run with `--nocapture` to see the lines.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use pi_index::harness::corpus::{builtin_corpus, builtin_by_name, Recipe};
use pi_index::harness::verify::{
    verify_example1, verify_negative_control, Analysis, Relation, Status, Verdict,
};
use pi_index::harness::{run_corpus, Checks, GroupReport, Report, RunConfig};
use pi_index::quotient::quotient_group;
use pi_index::structure::{conjugating_element, normal_closure};
use pi_index::sylow::{frattini_p, sylow_subgroup_from, SylowSeed};
use pi_index::{Group, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const CORPUS_BUDGET: Duration = Duration::from_secs(60);
const ORACLE_MAX_ORDER: usize = 64;
const RANDOM_PAIRS: usize = 100;
const RANDOM_PAIR_MAX_ORDER: usize = 1440;
const SEED: u64 = 0x5eed_0f_91;

struct Outcome {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(id: &'static str, failures: &[String], ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { id, pass: true, detail: ok_detail }
    } else {
        Outcome { id, pass: false, detail: failures.join("; ") }
    }
}

fn build(name: &str) -> Group {
    match builtin_by_name(name).expect("corpus name").recipe {
        Recipe::Named(c) => c.build().expect("builtin builds"),
        Recipe::File(_) => unreachable!(),
    }
}

fn find<'a>(report: &'a Report, group: &str) -> &'a GroupReport {
    report.groups.iter().find(|g| g.name == group).expect("group in report")
}

fn verdict<'a>(report: &'a Report, group: &str, claim: &str, params: &str) -> &'a Verdict {
    find(report, group)
        .verdicts
        .iter()
        .find(|v| v.claim == claim && v.params == params)
        .unwrap_or_else(|| panic!("no {claim} {params} verdict for {group}"))
}

fn check_pair(v: &Verdict, lhs: u64, rhs: u64, status: Status, failures: &mut Vec<String>) {
    if v.lhs != Some(lhs) || v.rhs != Some(rhs) || v.status != status {
        failures.push(format!(
            "{} {} {}: got {:?} vs {:?} ({:?}), expected {lhs} vs {rhs}",
            v.group, v.claim, v.params, v.lhs, v.rhs, v.status
        ));
    }
}

fn violations<'a>(report: &'a Report, claim: &str) -> Vec<&'a Verdict> {
    report.verdicts().filter(|v| v.claim == claim && v.status == Status::Failed).collect()
}

fn example_reproduction() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    for (p, q) in [(3, 2), (7, 3), (5, 2)] {
        let v = verify_example1(p, q).expect("valid parameters");
        if v.lhs != Some(2) || v.rhs != Some(1) || v.status != Status::Held {
            failures.push(format!("pq({p},{q}): d={:?} eps={:?}", v.lhs, v.rhs));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= EXAMPLE_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome("1 nonabelian pq: d=2, eps=1", &failures, format!("3 cases in {elapsed:?}"))
}

fn frattini_bound(report: &Report, elapsed: Duration) -> Outcome {
    let mut failures: Vec<String> = violations(report, "t1").iter().map(|v| v.detail.clone()).collect();
    let held = report.verdicts().filter(|v| v.claim == "t1" && v.status == Status::Held).count();
    let expected: usize = report.groups.iter().map(|g| g.primes.len()).sum();
    if held != expected {
        failures.push(format!("{held} t1 verdicts held, {expected} expected"));
    }
    check_pair(verdict(report, "Q8", "t1", "p=2"), 1, 1, Status::Held, &mut failures);
    if elapsed >= CORPUS_BUDGET {
        failures.push(format!("corpus took {elapsed:?}"));
    }
    outcome(
        "2 phi_p(G/Z) <= eps_p(G) over corpus",
        &failures,
        format!("{held} cases, Q8 p=2 equality 1=1, corpus in {elapsed:?}"),
    )
}

fn pi_length_bound(report: &Report) -> Outcome {
    let mut failures: Vec<String> = violations(report, "t2").iter().map(|v| v.detail.clone()).collect();
    let held = report.verdicts().filter(|v| v.claim == "t2" && v.status == Status::Held).count();
    check_pair(verdict(report, "S4", "t2", "pi=2"), 2, 3, Status::Held, &mut failures);
    check_pair(verdict(report, "SL(2,3)", "t2", "pi=2"), 1, 2, Status::Held, &mut failures);
    let mut sizes = Analysis::new("SL(2,3)", &build("SL(2,3)")).class_sizes();
    sizes.sort_unstable();
    if sizes != [1, 1, 4, 4, 4, 4, 6] {
        failures.push(format!("SL(2,3) class sizes {sizes:?}"));
    }
    outcome(
        "3 l_pi(G/Z) <= eps_pi(G) over separable cases",
        &failures,
        format!("{held} cases, l_2(S4)=2<=3, l_2(A4)=1<=eps_2(SL(2,3))=2"),
    )
}

fn negative_controls() -> Outcome {
    let mut failures = Vec::new();
    for (name, lhs, rhs) in [("C4", 2, 0), ("Q8", 2, 1)] {
        let a = Analysis::new(name, &build(name));
        match verify_negative_control(&a, 2) {
            Ok(v) => {
                if v.relation != Relation::Gt {
                    failures.push(format!("{name}: relation {:?}", v.relation));
                }
                check_pair(&v, lhs, rhs, Status::Held, &mut failures);
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    outcome("4 negative controls", &failures, "phi_2(C4)=2>0, phi_2(Q8)=2>1".to_string())
}

const REQUIRED_LEMMAS: &[&str] = &[
    "witness",
    "burnside-gen",
    "d-le-phi",
    "e-le-phi",
    "phi-mono",
    "phi-index",
    "phi-center",
    "phi-center-iter",
    "class-div",
    "class-div-strict",
    "eps-mono",
    "eps-mono-strict",
    "hall-higman",
    "center-in-opp",
    "camina",
    "camina-pi",
];

fn lemma_suite(report: &Report) -> Outcome {
    let mut failures = Vec::new();
    let mut held: HashMap<&str, usize> = HashMap::new();
    for v in report.verdicts() {
        if v.status == Status::Failed {
            failures.push(format!("{} {} {}: {}", v.group, v.claim, v.params, v.detail));
        }
        if v.status == Status::Held {
            *held.entry(v.claim.as_str()).or_default() += 1;
        }
    }
    for claim in REQUIRED_LEMMAS {
        if !held.contains_key(claim) {
            failures.push(format!("{claim} never exercised"));
        }
    }
    for claim in ["t2", "hall-higman", "center-in-opp"] {
        let v = verdict(report, "A5", claim, "pi=2");
        if v.status != Status::Skipped {
            failures.push(format!("A5 {claim} pi=2 is {:?}", v.status));
        }
    }
    let total: usize = REQUIRED_LEMMAS.iter().map(|c| held.get(c).copied().unwrap_or(0)).sum();
    outcome(
        "5 lemma suite",
        &failures,
        format!("{} lemmas, {total} instances held, A5 pi=2 skipped", REQUIRED_LEMMAS.len()),
    )
}

/// Multiplication table of a small group, elements indexed by position.
struct Table {
    mul: Vec<Vec<usize>>,
    identity: usize,
}

impl Table {
    fn new(elements: &[Permutation]) -> Table {
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let identity = elements.iter().position(Permutation::is_identity).expect("identity");
        Table { mul, identity }
    }

    fn close(&self, gens: &[usize]) -> u64 {
        let mut mask = 1u64 << self.identity;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul[x][g];
                if mask & (1 << y) == 0 {
                    mask |= 1 << y;
                    queue.push(y);
                }
            }
        }
        mask
    }
}

/// Intersection of the maximal subgroups, from the full subgroup lattice.
fn frattini_by_lattice(elements: &[Permutation]) -> u64 {
    let t = Table::new(elements);
    let n = elements.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut subgroups: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut frontier = Vec::new();
    let mut cyclic = Vec::new();
    for x in 0..n {
        let m = t.close(&[x]);
        if !subgroups.contains_key(&m) {
            subgroups.insert(m, vec![x]);
            frontier.push(m);
            cyclic.push((m, x));
        }
    }
    while let Some(h) = frontier.pop() {
        let gens = subgroups[&h].clone();
        for &(c, x) in &cyclic {
            if c & !h == 0 {
                continue;
            }
            let mut joined = gens.clone();
            joined.push(x);
            let m = t.close(&joined);
            if !subgroups.contains_key(&m) {
                subgroups.insert(m, joined);
                frontier.push(m);
            }
        }
    }
    let proper: Vec<u64> = subgroups.keys().copied().filter(|&m| m != full).collect();
    let maximal = proper
        .iter()
        .filter(|&&m| !proper.iter().any(|&k| k != m && m & !k == 0));
    maximal.fold(full, |acc, &m| acc & m)
}

fn mask_of(elements: &[Permutation], h: &Group) -> u64 {
    elements
        .iter()
        .enumerate()
        .filter(|(_, x)| h.contains(x))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn prime_of_p_group(order: usize) -> Option<u64> {
    if order < 2 {
        return None;
    }
    let p = (2..=order).find(|d| order % d == 0)?;
    let mut n = order;
    while n % p == 0 {
        n /= p;
    }
    (n == 1).then_some(p as u64)
}

fn oracles() -> Outcome {
    let mut failures = Vec::new();
    let groups: Vec<(String, Group)> = builtin_corpus()
        .into_iter()
        .filter(|e| e.order <= RANDOM_PAIR_MAX_ORDER)
        .map(|e| (e.name.clone(), build(&e.name)))
        .collect();

    let mut p_groups = 0;
    for (name, g) in &groups {
        let Some(p) = prime_of_p_group(g.order()) else { continue };
        if g.order() > ORACLE_MAX_ORDER {
            continue;
        }
        p_groups += 1;
        let elements: Vec<Permutation> = g.iter().cloned().collect();
        let phi = frattini_p(g, p).expect("p-group");
        if mask_of(&elements, phi.group()) != frattini_by_lattice(&elements) {
            failures.push(format!("{name}: Frattini subgroup disagrees with lattice"));
        }
    }

    let mut sylow_pairs = 0;
    for (name, g) in &groups {
        for p in pi_index::primes::prime_divisors(g.order() as u64) {
            let a = sylow_subgroup_from(g, p, SylowSeed::First).expect("prime");
            let b = sylow_subgroup_from(g, p, SylowSeed::Last).expect("prime");
            sylow_pairs += 1;
            let ok = conjugating_element(g, a.group(), b.group()).is_some_and(|x| {
                g.contains(&x) && a.iter().all(|y| b.contains(&y.conjugate_by(&x)))
            });
            if !ok || a.order() != b.order() {
                failures.push(format!("{name} p={p}: Sylow runs not conjugate"));
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut quotients = 0;
    while quotients < RANDOM_PAIRS {
        let (name, g) = &groups[rng.gen_range(0..groups.len())];
        let x = g.element(rng.gen_range(0..g.order())).clone();
        let n = normal_closure(g, [&x]).expect("member");
        let map = quotient_group(g, n.group()).expect("normal");
        quotients += 1;
        if map.image().order() * map.kernel().order() != g.order() {
            failures.push(format!(
                "{name}/<<{x}>>: {} * {} != {}",
                map.image().order(),
                map.kernel().order(),
                g.order()
            ));
        }
    }

    outcome(
        "6 oracle equivalences",
        &failures,
        format!("{p_groups} p-groups vs lattice, {sylow_pairs} Sylow pairs conjugate, {quotients} quotients"),
    )
}

fn cli_json() -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_pi-index"))
        .args(["verify", "--builtin", "--json"])
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

fn determinism() -> Outcome {
    let (first, code1) = cli_json();
    let (second, code2) = cli_json();
    let mut failures = Vec::new();
    if first != second {
        failures.push("outputs differ".to_string());
    }
    if first.is_empty() {
        failures.push("empty output".to_string());
    }
    if code1 != Some(0) || code2 != Some(0) {
        failures.push(format!("exit codes {code1:?}, {code2:?}"));
    }
    outcome("7 deterministic CLI report", &failures, format!("{} identical bytes, exit 0", first.len()))
}

#[test]
fn acceptance_criteria() {
    let mut results = vec![example_reproduction()];

    let start = Instant::now();
    let report = run_corpus(&RunConfig { checks: Checks::all(), ..RunConfig::default() }).expect("corpus runs");
    let elapsed = start.elapsed();
    results.push(frattini_bound(&report, elapsed));
    results.push(pi_length_bound(&report));
    results.push(negative_controls());
    results.push(lemma_suite(&report));
    results.push(oracles());
    results.push(determinism());

    for r in &results {
        println!("{} [{}] {}", if r.pass { "PASS" } else { "FAIL" }, r.id, r.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
