//! Named group constructors, the group file format and the built-in corpus.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};
use crate::perm::Permutation;
use crate::primes::is_prime;

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

fn from_images(images: Vec<u32>) -> Permutation {
    Permutation::new(images).expect("constructor builds a bijection")
}

pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(invalid("cyclic(0)"));
    }
    let gens = if n == 1 {
        vec![]
    } else {
        vec![from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())]
    };
    Group::from_generators(n, gens)
}

/// `(C_p)^k` acting on `k` disjoint blocks of `p` points.
pub fn elementary_abelian(p: u64, k: usize) -> Result<Group> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if k == 0 {
        return Ok(Group::trivial(1));
    }
    let p = p as u32;
    let degree = p as usize * k;
    let gens = (0..k as u32)
        .map(|b| {
            from_images(
                (0..degree as u32)
                    .map(|i| if i / p == b { b * p + (i % p + 1) % p } else { i })
                    .collect(),
            )
        })
        .collect();
    Group::from_generators(degree, gens)
}

/// Dihedral group of order `2n`, acting on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 3 {
        return Err(invalid(format!("dihedral({n}) needs n >= 3")));
    }
    let m = n as u32;
    let rotation = from_images((0..m).map(|i| (i + 1) % m).collect());
    let reflection = from_images((0..m).map(|i| (m - i) % m).collect());
    Group::from_generators(n, vec![rotation, reflection])
}

/// Quaternion product on units `1, i, j, k` (indices 0..4): `(sign, unit)`.
fn unit_product(a: usize, b: usize) -> (usize, usize) {
    const TABLE: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    TABLE[a][b]
}

/// `Q8` in its right regular action; point `4*sign + unit` is `±1, ±i, ±j, ±k`.
pub fn quaternion8() -> Group {
    let right_mult = |g: usize| {
        from_images(
            (0..8)
                .map(|x| {
                    let (sx, ux) = (x / 4, x % 4);
                    let (sg, ug) = (g / 4, g % 4);
                    let (s, u) = unit_product(ux, ug);
                    (((sx + sg + s) % 2) * 4 + u) as u32
                })
                .collect(),
        )
    };
    Group::from_generators(8, vec![right_mult(1), right_mult(2)]).expect("Q8")
}

pub fn symmetric(n: usize) -> Result<Group> {
    if n == 0 || n > 6 {
        return Err(invalid(format!("symmetric({n}) needs 1 <= n <= 6")));
    }
    if n == 1 {
        return Ok(Group::trivial(1));
    }
    let m = n as u32;
    let swap = Permutation::from_cycles(n, &[&[0, 1]])?;
    let cycle = from_images((0..m).map(|i| (i + 1) % m).collect());
    Group::from_generators(n, vec![swap, cycle])
}

pub fn alternating(n: usize) -> Result<Group> {
    if n == 0 || n > 6 {
        return Err(invalid(format!("alternating({n}) needs 1 <= n <= 6")));
    }
    let gens = (2..n as u32)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    Group::from_generators(n, gens)
}

fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    let mut b = base % m;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// `C_p ⋊ C_q` acting on `Z_p` by `x -> x + 1` and `x -> r x`, `r` of order `q`.
pub fn nonabelian_pq(p: u64, q: u64) -> Result<Group> {
    for v in [p, q] {
        if !is_prime(v) {
            return Err(GroupError::NotPrime(v));
        }
    }
    if p == q || (p - 1) % q != 0 {
        return Err(invalid(format!("nonabelian_pq({p},{q}) needs q | p-1")));
    }
    let r = (2..p)
        .find(|&r| pow_mod(r, q, p) == 1)
        .expect("Z_p^* is cyclic of order divisible by q");
    let translation = from_images((0..p).map(|x| ((x + 1) % p) as u32).collect());
    let scaling = from_images((0..p).map(|x| (x * r % p) as u32).collect());
    Group::from_generators(p as usize, vec![translation, scaling])
}

/// `SL(2,3)` in its right regular action on its 24 elements.
pub fn sl23() -> Group {
    let mut mats: Vec<[u8; 4]> = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    if (a * d + 6 - b * c) % 3 == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let mul = |x: [u8; 4], y: [u8; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    let right_mult = |g: [u8; 4]| {
        from_images(
            mats.iter()
                .map(|&x| mats.iter().position(|&y| y == mul(x, g)).expect("closed") as u32)
                .collect(),
        )
    };
    Group::from_generators(24, vec![right_mult([1, 1, 0, 1]), right_mult([1, 0, 1, 1])])
        .expect("SL(2,3)")
}

/// `A × B` acting on the disjoint union of the two point sets.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for x in a.generators() {
        let images = x.images().iter().copied().chain(da as u32..(da + db) as u32).collect();
        gens.push(from_images(images));
    }
    for y in b.generators() {
        let images = (0..da as u32).chain(y.images().iter().map(|&v| v + da as u32)).collect();
        gens.push(from_images(images));
    }
    Group::from_generators_capped(da + db, gens, usize::MAX).expect("degrees agree")
}

/// A constructor expression such as `direct_product(quaternion8, cyclic(3))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructor {
    Cyclic(usize),
    ElementaryAbelian(u64, usize),
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    NonabelianPq(u64, u64),
    Sl23,
    DirectProduct(Box<Constructor>, Box<Constructor>),
}

impl Constructor {
    pub fn build(&self) -> Result<Group> {
        self.build_capped(DEFAULT_ORDER_CAP)
    }

    pub fn build_capped(&self, cap: usize) -> Result<Group> {
        let g = match self {
            Constructor::Cyclic(n) => cyclic(*n)?,
            Constructor::ElementaryAbelian(p, k) => elementary_abelian(*p, *k)?,
            Constructor::Dihedral(n) => dihedral(*n)?,
            Constructor::Quaternion8 => quaternion8(),
            Constructor::Symmetric(n) => symmetric(*n)?,
            Constructor::Alternating(n) => alternating(*n)?,
            Constructor::NonabelianPq(p, q) => nonabelian_pq(*p, *q)?,
            Constructor::Sl23 => sl23(),
            Constructor::DirectProduct(a, b) => {
                let (a, b) = (a.build_capped(cap)?, b.build_capped(cap)?);
                if a.order().saturating_mul(b.order()) > cap {
                    return Err(GroupError::CapExceeded { cap, partial: 0 });
                }
                direct_product(&a, &b)
            }
        };
        if g.order() > cap {
            return Err(GroupError::CapExceeded { cap, partial: g.order() });
        }
        Ok(g)
    }
}

impl fmt::Display for Constructor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constructor::Cyclic(n) => write!(f, "cyclic({n})"),
            Constructor::ElementaryAbelian(p, k) => write!(f, "elementary_abelian({p},{k})"),
            Constructor::Dihedral(n) => write!(f, "dihedral({n})"),
            Constructor::Quaternion8 => write!(f, "quaternion8"),
            Constructor::Symmetric(n) => write!(f, "symmetric({n})"),
            Constructor::Alternating(n) => write!(f, "alternating({n})"),
            Constructor::NonabelianPq(p, q) => write!(f, "nonabelian_pq({p},{q})"),
            Constructor::Sl23 => write!(f, "sl23"),
            Constructor::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
        }
    }
}

enum Arg {
    Int(u64),
    Expr(Constructor),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn arg(&mut self) -> Result<Arg> {
        let w = self.word();
        if w.is_empty() {
            return Err(invalid("expected an argument"));
        }
        if let Ok(n) = w.parse::<u64>() {
            return Ok(Arg::Int(n));
        }
        Ok(Arg::Expr(self.constructor(w)?))
    }

    fn constructor(&mut self, name: &str) -> Result<Constructor> {
        let mut args = Vec::new();
        if self.eat(b'(') {
            if !self.eat(b')') {
                loop {
                    args.push(self.arg()?);
                    if self.eat(b')') {
                        break;
                    }
                    if !self.eat(b',') {
                        return Err(invalid(format!("malformed arguments to {name}")));
                    }
                }
            }
        }
        let ints = |args: &[Arg]| -> Result<Vec<u64>> {
            args.iter()
                .map(|a| match a {
                    Arg::Int(n) => Ok(*n),
                    Arg::Expr(_) => Err(invalid(format!("{name} takes integer arguments"))),
                })
                .collect()
        };
        let want = |n: usize, got: &[u64]| -> Result<()> {
            if got.len() == n {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {n} arguments, got {}", got.len())))
            }
        };
        Ok(match name {
            "cyclic" | "dihedral" | "symmetric" | "alternating" => {
                let v = ints(&args)?;
                want(1, &v)?;
                let n = v[0] as usize;
                match name {
                    "cyclic" => Constructor::Cyclic(n),
                    "dihedral" => Constructor::Dihedral(n),
                    "symmetric" => Constructor::Symmetric(n),
                    _ => Constructor::Alternating(n),
                }
            }
            "elementary_abelian" => {
                let v = ints(&args)?;
                want(2, &v)?;
                Constructor::ElementaryAbelian(v[0], v[1] as usize)
            }
            "nonabelian_pq" => {
                let v = ints(&args)?;
                want(2, &v)?;
                Constructor::NonabelianPq(v[0], v[1])
            }
            "quaternion8" | "sl23" => {
                if !args.is_empty() {
                    return Err(invalid(format!("{name} takes no arguments")));
                }
                if name == "sl23" {
                    Constructor::Sl23
                } else {
                    Constructor::Quaternion8
                }
            }
            "direct_product" => {
                if args.len() < 2 {
                    return Err(invalid("direct_product needs at least two factors"));
                }
                let mut factors = args.into_iter().map(|a| match a {
                    Arg::Expr(c) => Ok(c),
                    Arg::Int(_) => Err(invalid("direct_product takes group arguments")),
                });
                let mut acc = factors.next().expect("nonempty")?;
                for c in factors {
                    acc = Constructor::DirectProduct(Box::new(acc), Box::new(c?));
                }
                acc
            }
            other => return Err(GroupError::UnknownConstructor(other.to_string())),
        })
    }
}

impl FromStr for Constructor {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Constructor> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let name = p.word();
        if name.is_empty() {
            return Err(invalid(format!("cannot parse `{s}`")));
        }
        let c = p.constructor(name)?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(invalid(format!("trailing input in `{s}`")));
        }
        Ok(c)
    }
}

/// On-disk group description: generators as 0-based image arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupFile {
    pub fn from_group(name: &str, g: &Group) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|x| x.images().to_vec()).collect(),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .map(|v| Permutation::new(v.clone()))
            .collect::<Result<Vec<_>>>()?;
        Group::from_generators_capped(self.degree, gens, cap)
    }

    pub fn load(path: &Path) -> anyhow::Result<GroupFile> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: &Path) -> anyhow::Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Named(Constructor),
    File(PathBuf),
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Named(c) => write!(f, "{c}"),
            Recipe::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub recipe: Recipe,
    pub order: usize,
    pub notes: String,
}

fn entry(name: &str, expr: &str, order: usize, notes: &str) -> CorpusEntry {
    CorpusEntry {
        name: name.to_string(),
        recipe: Recipe::Named(expr.parse().expect("built-in expression parses")),
        order,
        notes: notes.to_string(),
    }
}

/// The curated built-in corpus.
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    vec![
        entry("C1", "cyclic(1)", 1, "trivial"),
        entry("C2", "cyclic(2)", 2, "abelian"),
        entry("C3", "cyclic(3)", 3, "abelian"),
        entry("C4", "cyclic(4)", 4, "abelian, Frattini length 2"),
        entry("C6", "cyclic(6)", 6, "abelian"),
        entry("C8", "cyclic(8)", 8, "abelian, Frattini length 3"),
        entry("C9", "cyclic(9)", 9, "abelian"),
        entry("C2^2", "elementary_abelian(2,2)", 4, "abelian"),
        entry("C2^3", "elementary_abelian(2,3)", 8, "abelian"),
        entry("C3^2", "elementary_abelian(3,2)", 9, "abelian"),
        entry("C4xC2", "direct_product(cyclic(4),cyclic(2))", 8, "abelian"),
        entry("D8", "dihedral(4)", 8, "nilpotent"),
        entry("D10", "dihedral(5)", 10, "Frobenius"),
        entry("D12", "dihedral(6)", 12, "solvable, center of order 2"),
        entry("D16", "dihedral(8)", 16, "nilpotent"),
        entry("Q8", "quaternion8", 8, "nilpotent, equality case of the Frattini bound"),
        entry("Q8xC2", "direct_product(quaternion8,cyclic(2))", 16, "nilpotent"),
        entry("Q8xC3", "direct_product(quaternion8,cyclic(3))", 24, "nilpotent"),
        entry("D8xC2", "direct_product(dihedral(4),cyclic(2))", 16, "nilpotent"),
        entry("D8xD8", "direct_product(dihedral(4),dihedral(4))", 64, "nilpotent"),
        entry("Q8xQ8", "direct_product(quaternion8,quaternion8)", 64, "nilpotent"),
        entry("S3", "symmetric(3)", 6, "nonabelian pq"),
        entry("S4", "symmetric(4)", 24, "solvable, 2-length 2"),
        entry("S5", "symmetric(5)", 120, "non-solvable"),
        entry("S6", "symmetric(6)", 720, "non-solvable"),
        entry("A4", "alternating(4)", 12, "solvable"),
        entry("A5", "alternating(5)", 60, "simple"),
        entry("A6", "alternating(6)", 360, "simple"),
        entry("pq(3,2)", "nonabelian_pq(3,2)", 6, "Example group, isomorphic to S3"),
        entry("pq(5,2)", "nonabelian_pq(5,2)", 10, "Frobenius"),
        entry("pq(7,3)", "nonabelian_pq(7,3)", 21, "Frobenius"),
        entry("pq(13,3)", "nonabelian_pq(13,3)", 39, "Frobenius"),
        entry("pq(11,5)", "nonabelian_pq(11,5)", 55, "Frobenius"),
        entry("SL(2,3)", "sl23", 24, "solvable, center of order 2"),
        entry("SL(2,3)xC2", "direct_product(sl23,cyclic(2))", 48, "solvable"),
        entry("SL(2,3)xC5", "direct_product(sl23,cyclic(5))", 120, "solvable"),
        entry("S3xC3", "direct_product(symmetric(3),cyclic(3))", 18, "solvable"),
        entry("S3xS3", "direct_product(symmetric(3),symmetric(3))", 36, "solvable"),
        entry("A4xC3", "direct_product(alternating(4),cyclic(3))", 36, "solvable"),
        entry("S4xC2", "direct_product(symmetric(4),cyclic(2))", 48, "solvable"),
        entry("Q8xS3", "direct_product(quaternion8,symmetric(3))", 48, "solvable"),
        entry("S4xS3", "direct_product(symmetric(4),symmetric(3))", 144, "solvable"),
        entry("A5xC2", "direct_product(alternating(5),cyclic(2))", 120, "non-solvable, center of order 2"),
        entry("A5xC7", "direct_product(alternating(5),cyclic(7))", 420, "non-solvable"),
        entry("S4xS4", "direct_product(symmetric(4),symmetric(4))", 576, "solvable"),
        entry("C4xC4", "direct_product(cyclic(4),cyclic(4))", 16, "abelian"),
        entry("Q8xD8", "direct_product(quaternion8,dihedral(4))", 64, "nilpotent"),
        entry("Q8xS4", "direct_product(quaternion8,symmetric(4))", 192, "solvable"),
        entry("D8xS4", "direct_product(dihedral(4),symmetric(4))", 192, "solvable"),
        entry("SL(2,3)xSL(2,3)", "direct_product(sl23,sl23)", 576, "solvable, center of order 4"),
        entry("A5xA4", "direct_product(alternating(5),alternating(4))", 720, "non-solvable"),
        entry("S6xC2", "direct_product(symmetric(6),cyclic(2))", 1440, "non-solvable, center of order 2"),
        entry("SL(2,3)xA5", "direct_product(sl23,alternating(5))", 1440, "non-solvable, center of order 2"),
    ]
}

pub fn builtin_by_name(name: &str) -> Option<CorpusEntry> {
    builtin_corpus().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::center;

    #[test]
    fn constructor_orders() {
        assert!(cyclic(1).unwrap().is_trivial());
        assert_eq!(cyclic(8).unwrap().order(), 8);
        assert_eq!(elementary_abelian(2, 3).unwrap().order(), 8);
        assert_eq!(elementary_abelian(2, 3).unwrap().degree(), 6);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(nonabelian_pq(3, 2).unwrap().order(), 6);
        assert_eq!(nonabelian_pq(7, 3).unwrap().order(), 21);
        let sl = sl23();
        assert_eq!(sl.order(), 24);
        assert_eq!(center(&sl).order(), 2);
    }

    #[test]
    fn q8_structure() {
        let q = quaternion8();
        assert!(!q.is_abelian());
        assert_eq!(q.iter().filter(|x| x.order() == 2).count(), 1);
        assert_eq!(q.iter().filter(|x| x.order() == 4).count(), 6);
    }

    #[test]
    fn invalid_parameters() {
        assert!(nonabelian_pq(5, 3).is_err());
        assert!(nonabelian_pq(4, 3).is_err());
        assert!(dihedral(2).is_err());
        assert!(symmetric(7).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn parse_and_display() {
        let c: Constructor = "direct_product(quaternion8, cyclic(3))".parse().unwrap();
        assert_eq!(c.to_string(), "direct_product(quaternion8,cyclic(3))");
        assert_eq!(c.build().unwrap().order(), 24);
        let c: Constructor = "direct_product(cyclic(2),cyclic(2),cyclic(2))".parse().unwrap();
        assert_eq!(c.build().unwrap().order(), 8);
        assert!(matches!(
            "frobenius(3)".parse::<Constructor>(),
            Err(GroupError::UnknownConstructor(_))
        ));
        assert!("cyclic(3".parse::<Constructor>().is_err());
        assert!("cyclic(3) x".parse::<Constructor>().is_err());
        assert!("sl23(1)".parse::<Constructor>().is_err());
    }

    #[test]
    fn builtin_orders_match() {
        for e in builtin_corpus() {
            let Recipe::Named(c) = &e.recipe else { unreachable!() };
            assert_eq!(c.build().unwrap().order(), e.order, "{}", e.name);
        }
    }

    #[test]
    fn group_file_roundtrip() {
        let g = symmetric(4).unwrap();
        let f = GroupFile::from_group("S4", &g);
        let json = serde_json::to_string(&f).unwrap();
        let back: GroupFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.build(DEFAULT_ORDER_CAP).unwrap(), g);
        let bad = GroupFile { name: "x".into(), degree: 3, generators: vec![vec![0, 0, 1]] };
        assert!(bad.build(DEFAULT_ORDER_CAP).is_err());
    }
}
