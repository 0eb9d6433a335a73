//! Built-in corpus, verdict computation and batch reports.

pub mod corpus;
pub mod verify;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::Context;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::GroupError;
use crate::group::DEFAULT_ORDER_CAP;
use crate::indices::IndexProfile;
use crate::primes::{prime_divisors, PrimeSet};
use corpus::{builtin_corpus, Constructor, CorpusEntry, GroupFile, Recipe};
use verify::{
    group_lemmas, pi_lemmas, prime_lemmas, verify_corollary, verify_example1,
    verify_negative_control, verify_negative_control_pi, verify_theorem1, verify_theorem2,
    Analysis, Status, Verdict,
};

/// Which families of claims to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub t1: bool,
    pub cor: bool,
    pub t2: bool,
    pub ex1: bool,
    pub neg: bool,
    pub lemmas: bool,
}

impl Checks {
    pub fn all() -> Checks {
        Checks { t1: true, cor: true, t2: true, ex1: true, neg: true, lemmas: true }
    }

    pub fn none() -> Checks {
        Checks { t1: false, cor: false, t2: false, ex1: false, neg: false, lemmas: false }
    }
}

impl FromStr for Checks {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Checks, GroupError> {
        let mut c = Checks::none();
        for part in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match part {
                "t1" => c.t1 = true,
                "cor" => c.cor = true,
                "t2" => c.t2 = true,
                "ex1" => c.ex1 = true,
                "neg" => c.neg = true,
                "lemmas" => c.lemmas = true,
                "all" => c = Checks::all(),
                other => return Err(GroupError::InvalidParameters(format!("unknown check `{other}`"))),
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub builtin: bool,
    pub corpus_dir: Option<PathBuf>,
    pub checks: Checks,
    /// Groups above this order are listed but not analysed.
    pub max_order: Option<usize>,
    /// Enumeration cap for constructing groups.
    pub order_cap: usize,
    /// Replaces the default π-sets when nonempty.
    pub pi_sets: Vec<PrimeSet>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            builtin: true,
            corpus_dir: None,
            checks: Checks::all(),
            max_order: None,
            order_cap: DEFAULT_ORDER_CAP,
            pi_sets: Vec::new(),
        }
    }
}

/// Singletons and pairs of primes dividing `order`, plus the full set when at most three primes divide it.
pub fn default_pi_sets(order: u64) -> Vec<PrimeSet> {
    let primes = prime_divisors(order);
    let mut sets: BTreeSet<Vec<u64>> = BTreeSet::new();
    for (i, &p) in primes.iter().enumerate() {
        sets.insert(vec![p]);
        for &q in &primes[i + 1..] {
            sets.insert(vec![p, q]);
        }
    }
    if !primes.is_empty() && primes.len() <= 3 {
        sets.insert(primes.clone());
    }
    let mut out: Vec<PrimeSet> = sets.into_iter().map(|v| PrimeSet::new(v).expect("primes")).collect();
    out.sort_by(|a, b| a.primes().len().cmp(&b.primes().len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub groups: usize,
    pub checked: usize,
    pub held: usize,
    pub failed: usize,
    pub skipped: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub recipe: String,
    pub order: usize,
    pub primes: Vec<u64>,
    pub profiles: Vec<IndexProfile>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub groups: Vec<GroupReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.groups.iter().flat_map(|g| g.verdicts.iter())
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        for g in &self.groups {
            let _ = writeln!(s, "== {} (order {}, {})", g.name, g.order, g.recipe);
            if let Some(note) = &g.note {
                let _ = writeln!(s, "   note: {note}");
            }
            for v in &g.verdicts {
                let lr = match (v.lhs, v.rhs) {
                    (Some(l), Some(r)) => format!("{l} {:?} {r}", v.relation).to_lowercase(),
                    _ => "-".to_string(),
                };
                let _ = writeln!(
                    s,
                    "   {:<8} {:<20} {:<10} {:<16} {}",
                    format!("{:?}", v.status).to_lowercase(),
                    v.claim,
                    v.params,
                    lr,
                    v.detail
                );
            }
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "groups={} checked={} held={} failed={} skipped={} info={}",
            m.groups, m.checked, m.held, m.failed, m.skipped, m.info
        );
        s
    }
}

fn summarize(groups: &[GroupReport]) -> Summary {
    let mut s = Summary { groups: groups.len(), ..Summary::default() };
    for v in groups.iter().flat_map(|g| &g.verdicts) {
        match v.status {
            Status::Held => {
                s.checked += 1;
                s.held += 1;
            }
            Status::Failed => {
                s.checked += 1;
                s.failed += 1;
            }
            Status::Skipped => s.skipped += 1,
            Status::Info => s.info += 1,
        }
    }
    s
}

/// All verdicts and profiles for one analysed group.
pub fn analyse_group(
    name: &str,
    recipe: &Recipe,
    group: &crate::group::Group,
    checks: Checks,
    pi_sets: &[PrimeSet],
) -> GroupReport {
    let a = Analysis::new(name, group);
    let primes = a.primes();
    let pis: Vec<PrimeSet> = if pi_sets.is_empty() {
        default_pi_sets(a.order())
    } else {
        pi_sets.to_vec()
    };
    let profiles = pis
        .iter()
        .map(|pi| IndexProfile::from_classes(name, group, &a.classes, std::slice::from_ref(pi)))
        .collect();

    let mut verdicts = Vec::new();
    for &p in &primes {
        if checks.t1 {
            verdicts.push(verify_theorem1(&a, p).expect("prime"));
        }
        if checks.cor {
            let (d, e) = verify_corollary(&a, p).expect("prime");
            verdicts.push(d);
            verdicts.push(e);
        }
        if checks.neg {
            if let Ok(v) = verify_negative_control(&a, p) {
                verdicts.push(v);
            }
        }
    }
    for pi in &pis {
        if checks.t2 {
            verdicts.push(verify_theorem2(&a, pi));
        }
        if checks.neg {
            if let Ok(v) = verify_negative_control_pi(&a, pi) {
                verdicts.push(v);
            }
        }
    }
    if checks.ex1 {
        if let Recipe::Named(Constructor::NonabelianPq(p, q)) = recipe {
            match verify_example1(*p, *q) {
                Ok(v) => verdicts.push(Verdict { group: name.to_string(), ..v }),
                Err(e) => verdicts.push(failed_example(name, &e.to_string())),
            }
        }
    }
    if checks.lemmas {
        verdicts.extend(group_lemmas(&a));
        for &p in &primes {
            verdicts.extend(prime_lemmas(&a, p).expect("prime"));
        }
        for pi in &pis {
            verdicts.extend(pi_lemmas(&a, pi));
        }
    }
    GroupReport {
        name: name.to_string(),
        recipe: recipe.to_string(),
        order: group.order(),
        primes,
        profiles,
        verdicts,
        note: None,
    }
}

fn failed_example(name: &str, detail: &str) -> Verdict {
    Verdict {
        group: name.to_string(),
        claim: "example1".to_string(),
        params: String::new(),
        lhs: None,
        rhs: None,
        relation: verify::Relation::Gt,
        expected: Some([2, 1]),
        holds: false,
        status: Status::Failed,
        detail: detail.to_string(),
    }
}

fn load_dir(dir: &PathBuf) -> anyhow::Result<Vec<(CorpusEntry, GroupFile)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading corpus directory {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let file = GroupFile::load(&path).with_context(|| format!("reading {}", path.display()))?;
        out.push((
            CorpusEntry {
                name: file.name.clone(),
                recipe: Recipe::File(path.clone()),
                order: 0,
                notes: String::new(),
            },
            file,
        ));
    }
    Ok(out)
}

fn skipped_report(entry: &CorpusEntry, order: usize, note: String) -> GroupReport {
    GroupReport {
        name: entry.name.clone(),
        recipe: entry.recipe.to_string(),
        order,
        primes: prime_divisors(order as u64),
        profiles: Vec::new(),
        verdicts: Vec::new(),
        note: Some(note),
    }
}

/// Runs every configured check over the corpus. Groups are processed in
/// parallel and reported sorted by name.
pub fn run_corpus(config: &RunConfig) -> anyhow::Result<Report> {
    let mut jobs: Vec<(CorpusEntry, Option<GroupFile>)> = Vec::new();
    if config.builtin {
        jobs.extend(builtin_corpus().into_iter().map(|e| (e, None)));
    }
    if let Some(dir) = &config.corpus_dir {
        jobs.extend(load_dir(dir)?.into_iter().map(|(e, f)| (e, Some(f))));
    }

    let mut groups: Vec<GroupReport> = jobs
        .par_iter()
        .map(|(entry, file)| {
            let built = match (&entry.recipe, file) {
                (Recipe::Named(c), _) => c.build_capped(config.order_cap),
                (Recipe::File(_), Some(f)) => f.build(config.order_cap),
                (Recipe::File(_), None) => unreachable!("file entries carry their contents"),
            };
            let group = match built {
                Ok(g) => g,
                Err(GroupError::CapExceeded { cap, .. }) => {
                    return skipped_report(entry, entry.order, format!("over order cap {cap}; skipped"));
                }
                Err(e) => return skipped_report(entry, entry.order, format!("construction failed: {e}")),
            };
            if let Some(max) = config.max_order {
                if group.order() > max {
                    return skipped_report(entry, group.order(), format!("order exceeds --max-order {max}; skipped"));
                }
            }
            analyse_group(&entry.name, &entry.recipe, &group, config.checks, &config.pi_sets)
        })
        .collect();
    groups.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.recipe.cmp(&b.recipe)));
    Ok(Report { summary: summarize(&groups), groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_set_defaults() {
        let sets: Vec<String> = default_pi_sets(24).iter().map(|p| p.to_string()).collect();
        assert_eq!(sets, vec!["2", "3", "2,3"]);
        let sets: Vec<String> = default_pi_sets(420).iter().map(|p| p.to_string()).collect();
        assert_eq!(sets.len(), 4 + 6);
        assert_eq!(default_pi_sets(30).len(), 3 + 3 + 1);
        assert!(default_pi_sets(1).is_empty());
    }

    #[test]
    fn checks_parse() {
        assert_eq!("all".parse::<Checks>().unwrap(), Checks::all());
        let c: Checks = "t1,neg".parse().unwrap();
        assert!(c.t1 && c.neg && !c.t2);
        assert!("t3".parse::<Checks>().is_err());
    }

    #[test]
    fn empty_corpus() {
        let config = RunConfig { builtin: false, ..RunConfig::default() };
        let report = run_corpus(&config).unwrap();
        assert!(report.groups.is_empty());
        assert_eq!(report.summary, Summary::default());
    }

    #[test]
    fn directory_corpus_and_max_order() {
        let dir = tempfile::tempdir().unwrap();
        let a5 = corpus::alternating(5).unwrap();
        GroupFile::from_group("A5", &a5).save(&dir.path().join("a5.json")).unwrap();
        let s4 = corpus::symmetric(4).unwrap();
        GroupFile::from_group("S4", &s4).save(&dir.path().join("s4.json")).unwrap();
        let config = RunConfig {
            builtin: false,
            corpus_dir: Some(dir.path().to_path_buf()),
            checks: "t2".parse().unwrap(),
            max_order: Some(30),
            pi_sets: vec![PrimeSet::single(2).unwrap()],
            ..RunConfig::default()
        };
        let report = run_corpus(&config).unwrap();
        assert_eq!(report.groups.len(), 2);
        assert_eq!(report.groups[0].name, "A5");
        assert!(report.groups[0].note.as_deref().unwrap().contains("max-order"));
        let config = RunConfig { max_order: None, ..config };
        let report = run_corpus(&config).unwrap();
        let t2 = &report.groups[0].verdicts[0];
        assert_eq!(t2.status, Status::Skipped);
        assert_eq!(t2.detail, "not separable");
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn unreadable_directory_is_an_error() {
        let config = RunConfig {
            builtin: false,
            corpus_dir: Some(PathBuf::from("/nonexistent/corpus")),
            ..RunConfig::default()
        };
        assert!(run_corpus(&config).is_err());
    }
}
