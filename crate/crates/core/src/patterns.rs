//! Induced-subgraph freeness: exact detectors for every pattern family the
//! survey filters on.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{parse_graph6, write_graph6, Graph, VertexSet, MAX_VERTICES};
use crate::named;

/// Largest explicit pattern accepted.
pub const MAX_EXPLICIT_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("empty pattern string")]
    Empty,
    #[error("cannot parse pattern {0:?}")]
    Syntax(String),
    #[error("pattern parameter out of range: {0}")]
    Range(String),
}

/// A named induced-subgraph family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    /// pK1
    IndependentSet(usize),
    /// qK2
    InducedMatching(usize),
    /// pK1 + qK2
    MixedPK1QK2(usize, usize),
    /// P_t on t vertices
    Path(usize),
    /// C_l
    Cycle(usize),
    /// complement of C_l
    CycleComplement(usize),
    Explicit(Graph),
}

impl PatternSpec {
    pub fn validate(&self) -> Result<(), PatternError> {
        let range = |msg: String| Err(PatternError::Range(msg));
        match *self {
            PatternSpec::IndependentSet(p) if p == 0 || p > MAX_VERTICES => range(format!("p = {p}")),
            PatternSpec::InducedMatching(q) if q == 0 || 2 * q > MAX_VERTICES => range(format!("q = {q}")),
            PatternSpec::MixedPK1QK2(p, q) if p == 0 || q == 0 || p + 2 * q > MAX_VERTICES => {
                range(format!("p = {p}, q = {q}"))
            }
            PatternSpec::Path(t) if t == 0 || t > MAX_VERTICES => range(format!("t = {t}")),
            PatternSpec::Cycle(l) | PatternSpec::CycleComplement(l) if !(3..=MAX_VERTICES).contains(&l) => {
                range(format!("l = {l}"))
            }
            PatternSpec::Explicit(ref g) if g.n() > MAX_EXPLICIT_VERTICES => {
                range(format!("explicit pattern has {} > {MAX_EXPLICIT_VERTICES} vertices", g.n()))
            }
            _ => Ok(()),
        }
    }

    /// The pattern as a concrete graph (vertex order used by embeddings).
    pub fn graph(&self) -> Graph {
        match self {
            PatternSpec::IndependentSet(p) => named::empty(*p),
            PatternSpec::InducedMatching(q) => named::pk1_qk2(0, *q),
            PatternSpec::MixedPK1QK2(p, q) => named::pk1_qk2(*p, *q),
            PatternSpec::Path(t) => named::path(*t),
            PatternSpec::Cycle(l) => named::cycle(*l),
            PatternSpec::CycleComplement(l) => named::cycle(*l).complement(),
            PatternSpec::Explicit(g) => g.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            PatternSpec::IndependentSet(p) => p,
            PatternSpec::InducedMatching(q) => 2 * q,
            PatternSpec::MixedPK1QK2(p, q) => p + 2 * q,
            PatternSpec::Path(t) => t,
            PatternSpec::Cycle(l) | PatternSpec::CycleComplement(l) => l,
            PatternSpec::Explicit(ref g) => g.n(),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let copies = |f: &mut fmt::Formatter<'_>, m: usize, base: &str| {
            if m == 1 {
                write!(f, "{base}")
            } else {
                write!(f, "{m}{base}")
            }
        };
        match *self {
            PatternSpec::IndependentSet(p) => copies(f, p, "K1"),
            PatternSpec::InducedMatching(q) => copies(f, q, "K2"),
            PatternSpec::MixedPK1QK2(p, q) => {
                copies(f, p, "K1")?;
                f.write_str("+")?;
                copies(f, q, "K2")
            }
            PatternSpec::Path(t) => write!(f, "P{t}"),
            PatternSpec::Cycle(l) => write!(f, "C{l}"),
            PatternSpec::CycleComplement(l) => write!(f, "co-C{l}"),
            PatternSpec::Explicit(ref g) => write!(f, "g6:{}", write_graph6(g)),
        }
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_count(prefix: &str) -> Option<usize> {
    if prefix.is_empty() {
        Some(1)
    } else {
        prefix.parse().ok()
    }
}

/// Accepts `4K1`, `3K2`, `2K1+K2`, `pK1+qK2:p=3,q=2`, `P5`, `C6`, `co-C6`,
/// `K4` (complete graph) and `g6:<graph6>`.
impl FromStr for PatternSpec {
    type Err = PatternError;

    fn from_str(text: &str) -> Result<Self, PatternError> {
        let s = text.trim();
        if s.is_empty() {
            return Err(PatternError::Empty);
        }
        let syntax = || PatternError::Syntax(text.to_string());
        let spec = if let Some(params) = s.strip_prefix("pK1+qK2:") {
            let (mut p, mut q) = (None, None);
            for kv in params.split(',') {
                let (k, v) = kv.split_once('=').ok_or_else(syntax)?;
                let v: usize = v.trim().parse().map_err(|_| syntax())?;
                match k.trim() {
                    "p" => p = Some(v),
                    "q" => q = Some(v),
                    _ => return Err(syntax()),
                }
            }
            PatternSpec::MixedPK1QK2(p.ok_or_else(syntax)?, q.ok_or_else(syntax)?)
        } else if let Some(g6) = s.strip_prefix("g6:") {
            PatternSpec::Explicit(parse_graph6(g6).map_err(|_| syntax())?)
        } else if let Some(l) = s.strip_prefix("co-C") {
            PatternSpec::CycleComplement(l.parse().map_err(|_| syntax())?)
        } else if let Some(t) = s.strip_prefix('P') {
            PatternSpec::Path(t.parse().map_err(|_| syntax())?)
        } else if let Some(l) = s.strip_prefix('C') {
            PatternSpec::Cycle(l.parse().map_err(|_| syntax())?)
        } else if let Some(n) = s.strip_prefix('K').and_then(|n| n.parse::<usize>().ok()) {
            if n > MAX_EXPLICIT_VERTICES || n == 0 {
                return Err(PatternError::Range(format!("K{n}")));
            }
            match n {
                1 => PatternSpec::IndependentSet(1),
                2 => PatternSpec::InducedMatching(1),
                _ => PatternSpec::Explicit(named::complete(n)),
            }
        } else {
            let (mut p, mut q) = (0usize, 0usize);
            for term in s.split('+') {
                let term = term.trim();
                if let Some(m) = term.strip_suffix("K1") {
                    p += parse_count(m).ok_or_else(syntax)?;
                } else if let Some(m) = term.strip_suffix("K2") {
                    q += parse_count(m).ok_or_else(syntax)?;
                } else {
                    return Err(syntax());
                }
            }
            match (p, q) {
                (0, 0) => return Err(syntax()),
                (p, 0) => PatternSpec::IndependentSet(p),
                (0, q) => PatternSpec::InducedMatching(q),
                (p, q) => PatternSpec::MixedPK1QK2(p, q),
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// A freeness condition: either a single pattern or "no induced cycle of
/// length >= min_len" (written `holes>=6`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    Pattern(PatternSpec),
    HolesAtLeast(usize),
}

impl Obstruction {
    pub fn find(&self, g: &Graph) -> Option<Embedding> {
        match self {
            Obstruction::Pattern(p) => contains_induced(g, p),
            Obstruction::HolesAtLeast(l) => has_long_induced_cycle(g, *l),
        }
    }
}

impl FromStr for Obstruction {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, PatternError> {
        match s.trim().strip_prefix("holes>=") {
            Some(l) => {
                let l: usize = l.parse().map_err(|_| PatternError::Syntax(s.to_string()))?;
                if l < 3 {
                    return Err(PatternError::Range(format!("hole length {l}")));
                }
                Ok(Obstruction::HolesAtLeast(l))
            }
            None => s.parse().map(Obstruction::Pattern),
        }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Pattern(p) => p.fmt(f),
            Obstruction::HolesAtLeast(l) => write!(f, "holes>={l}"),
        }
    }
}

impl Serialize for Obstruction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Obstruction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Host vertices for each pattern vertex, in pattern-vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Whether this is an injective induced embedding of `pattern` into `host`.
    pub fn verify(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = pattern.n();
        if self.map.len() != m || self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let image: VertexSet = self.map.iter().copied().collect();
        if image.len() != m {
            return false;
        }
        (0..m).all(|i| (i + 1..m).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j])))
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

// ---------------------------------------------------------------------------
// independent sets

struct IndependentSearch<'a> {
    g: &'a Graph,
    target: usize,
    best: VertexSet,
}

impl IndependentSearch<'_> {
    fn done(&self) -> bool {
        self.best.len() >= self.target
    }

    fn run(&mut self, chosen: VertexSet, cand: VertexSet) {
        if self.done() || chosen.len() + cand.len() <= self.best.len() {
            return;
        }
        if cand.is_empty() {
            self.best = chosen;
            return;
        }
        // min-degree vertex inside the candidate set
        let (v, deg) =
            cand.iter().map(|v| (v, (self.g.neighbors(v) & cand).len())).min_by_key(|&(_, d)| d).expect("nonempty");
        if deg <= 1 {
            // some maximum independent set of G[cand] contains v
            self.run(chosen.with(v), cand - self.g.closed_neighbors(v));
            return;
        }
        // every maximal independent set meets N[v]
        for w in self.g.closed_neighbors(v) & cand {
            self.run(chosen.with(w), cand - self.g.closed_neighbors(w));
            if self.done() {
                return;
            }
        }
    }
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut s = IndependentSearch { g, target: usize::MAX, best: VertexSet::new() };
    s.run(VertexSet::new(), g.all_vertices());
    s.best
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// An independent set of exactly `p` vertices, if one exists (smallest-first
/// search order, so results are deterministic).
pub fn find_independent_set(g: &Graph, p: usize) -> Option<VertexSet> {
    let mut s = IndependentSearch { g, target: p, best: VertexSet::new() };
    s.run(VertexSet::new(), g.all_vertices());
    if s.best.len() < p {
        return None;
    }
    Some(s.best.iter().take(p).collect())
}

// ---------------------------------------------------------------------------
// induced matchings

struct MatchingSearch<'a> {
    g: &'a Graph,
    target: usize,
    current: Vec<(usize, usize)>,
    best: Vec<(usize, usize)>,
}

impl MatchingSearch<'_> {
    fn run(&mut self, cand: VertexSet) {
        if self.best.len() >= self.target {
            return;
        }
        if self.current.len() > self.best.len() {
            self.best.clone_from(&self.current);
            if self.best.len() >= self.target {
                return;
            }
        }
        if self.current.len() + cand.len() / 2 <= self.best.len() {
            return;
        }
        // smallest candidate vertex with a neighbour among candidates
        let Some(u) = cand.iter().find(|&u| !(self.g.neighbors(u) & cand).is_empty()) else {
            return;
        };
        for w in self.g.neighbors(u) & cand {
            self.current.push((u, w));
            let rest = cand - self.g.closed_neighbors(u) - self.g.closed_neighbors(w);
            self.run(rest);
            self.current.pop();
        }
        self.run(cand.without(u));
    }
}

fn search_induced_matching(g: &Graph, target: usize) -> Vec<(usize, usize)> {
    let mut s = MatchingSearch { g, target, current: Vec::new(), best: Vec::new() };
    s.run(g.all_vertices());
    s.best
}

/// A maximum set of edges, pairwise vertex-disjoint with no edges between them.
pub fn maximum_induced_matching(g: &Graph) -> Vec<(usize, usize)> {
    search_induced_matching(g, usize::MAX)
}

pub fn max_induced_matching(g: &Graph) -> usize {
    maximum_induced_matching(g).len()
}

// ---------------------------------------------------------------------------
// generic induced embedding

/// Pattern vertices ordered so each one (after the first of its component)
/// has an already placed neighbour where possible; ties by higher degree then index.
fn placement_order(p: &Graph) -> Vec<usize> {
    let m = p.n();
    let mut placed = VertexSet::new();
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .filter(|&v| !placed.contains(v))
            .max_by_key(|&v| ((p.neighbors(v) & placed).len(), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct EmbedSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
}

impl EmbedSearch<'_> {
    fn run(&mut self, step: usize, used: VertexSet) -> bool {
        if step == self.order.len() {
            return true;
        }
        let x = self.order[step];
        let mut cand = self.host.all_vertices() - used;
        for &y in &self.order[..step] {
            let hy = self.map[y];
            if self.pattern.has_edge(x, y) {
                cand &= self.host.neighbors(hy);
            } else {
                cand = cand - self.host.closed_neighbors(hy);
            }
        }
        let need = self.pattern.degree(x);
        for h in cand {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[x] = h;
            if self.run(step + 1, used.with(h)) {
                return true;
            }
        }
        false
    }
}

/// Backtracking induced-subgraph search for an arbitrary pattern graph.
pub fn find_induced_embedding(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut s = EmbedSearch { host, pattern, order: placement_order(pattern), map: vec![usize::MAX; pattern.n()] };
    s.run(0, VertexSet::new()).then_some(Embedding { map: s.map })
}

/// An induced copy of `pattern` in `g`, or `None` when `g` is pattern-free.
///
/// Independent sets, induced matchings and cycles go through dedicated
/// searches; everything else uses the generic backtracking embedder.
pub fn contains_induced(g: &Graph, pattern: &PatternSpec) -> Option<Embedding> {
    match *pattern {
        PatternSpec::IndependentSet(p) => find_independent_set(g, p).map(|s| Embedding { map: s.to_vec() }),
        PatternSpec::InducedMatching(q) => {
            let m = search_induced_matching(g, q);
            (m.len() >= q).then(|| Embedding { map: m.iter().take(q).flat_map(|&(u, v)| [u, v]).collect() })
        }
        PatternSpec::Cycle(l) => find_induced_cycle(g, l),
        _ => find_induced_embedding(g, &pattern.graph()),
    }
}

// ---------------------------------------------------------------------------
// induced cycles

struct CycleSearch<'a> {
    g: &'a Graph,
    len: usize,
    path: Vec<usize>,
}

impl CycleSearch<'_> {
    /// `blocked`: path vertices plus closed neighbourhoods of interior path
    /// vertices other than the current end.
    fn extend(&mut self, allowed: VertexSet, blocked: VertexSet) -> bool {
        let start = self.path[0];
        let end = *self.path.last().expect("nonempty path");
        let k = self.path.len();
        let mut cand = self.g.neighbors(end) & (allowed - blocked);
        if k == self.len - 1 {
            cand &= self.g.neighbors(start);
            // orientation: second vertex below the closing vertex
            if let Some(x) = cand.iter().find(|&x| self.path[1] < x) {
                self.path.push(x);
                return true;
            }
            return false;
        }
        if k >= 2 {
            cand = cand - self.g.closed_neighbors(start);
        }
        let next_blocked = if k >= 2 { blocked | self.g.closed_neighbors(end) } else { blocked.with(end) };
        for x in cand {
            self.path.push(x);
            if self.extend(allowed, next_blocked.with(x)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// An induced cycle on exactly `len` vertices, listed in cycle order starting
/// at its smallest vertex.
pub fn find_induced_cycle(g: &Graph, len: usize) -> Option<Embedding> {
    if len < 3 || len > g.n() {
        return None;
    }
    for s in 0..g.n() {
        let allowed = g.all_vertices() - VertexSet::full(s + 1);
        if allowed.len() < len - 1 {
            break;
        }
        let mut search = CycleSearch { g, len, path: vec![s] };
        if search.extend(allowed, VertexSet::singleton(s)) {
            return Some(Embedding { map: search.path });
        }
    }
    None
}

/// Shortest induced cycle of length at least `min_len`, if any.
pub fn has_long_induced_cycle(g: &Graph, min_len: usize) -> Option<Embedding> {
    (min_len.max(3)..=g.n()).find_map(|len| find_induced_cycle(g, len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle, path, pk1_qk2};

    #[test]
    fn independence_numbers() {
        assert_eq!(independence_number(&complete(4)), 1);
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(independence_number(&cycle(6)), 3);
        assert_eq!(independence_number(&named::empty(5)), 5);
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(find_independent_set(&cycle(6), 3), Some(VertexSet::from_iter([0, 2, 4])));
        assert_eq!(find_independent_set(&cycle(5), 3), None);
    }

    #[test]
    fn induced_matchings() {
        assert_eq!(max_induced_matching(&complete(2)), 1);
        assert_eq!(max_induced_matching(&pk1_qk2(0, 3)), 3);
        assert_eq!(max_induced_matching(&cycle(5)), 1);
        assert_eq!(max_induced_matching(&cycle(6)), 2);
        assert_eq!(max_induced_matching(&named::empty(3)), 0);
        assert_eq!(max_induced_matching(&path(7)), 2);
    }

    #[test]
    fn pattern_strings_round_trip() {
        for s in ["4K1", "2K1+K2", "3K2", "P5", "C6", "co-C6", "K1", "K2"] {
            let p: PatternSpec = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!("pK1+qK2:p=3,q=2".parse::<PatternSpec>().unwrap(), PatternSpec::MixedPK1QK2(3, 2));
        assert_eq!("K4".parse::<PatternSpec>().unwrap(), PatternSpec::Explicit(complete(4)));
        assert_eq!("g6:Bw".parse::<PatternSpec>().unwrap(), PatternSpec::Explicit(complete(3)));
        assert_eq!("holes>=6".parse::<Obstruction>().unwrap(), Obstruction::HolesAtLeast(6));
        assert!("".parse::<PatternSpec>().is_err());
        assert!("C2".parse::<PatternSpec>().is_err());
        assert!("0K1".parse::<PatternSpec>().is_err());
        assert!("K11".parse::<PatternSpec>().is_err());
        assert!("Q5".parse::<PatternSpec>().is_err());
        assert!("holes>=2".parse::<Obstruction>().is_err());
        assert!("pK1+qK2:p=3".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn explicit_cap() {
        assert!(PatternSpec::Explicit(named::empty(11)).validate().is_err());
        assert!(PatternSpec::Explicit(named::empty(10)).validate().is_ok());
    }

    #[test]
    fn path_in_c6() {
        let e = contains_induced(&cycle(6), &PatternSpec::Path(5)).unwrap();
        assert!(e.verify(&cycle(6), &path(5)));
        assert!(contains_induced(&cycle(6), &PatternSpec::Path(6)).is_none());
    }

    #[test]
    fn seven_cycle_is_its_own_long_hole() {
        let e = has_long_induced_cycle(&cycle(7), 6).unwrap();
        assert_eq!(e.map.len(), 7);
        assert!(e.verify(&cycle(7), &cycle(7)));
        assert!(has_long_induced_cycle(&complete(7), 4).is_none());
        assert_eq!(find_induced_cycle(&complete(3), 3).unwrap().map, vec![0, 1, 2]);
    }

    #[test]
    fn cycle_complement_pattern() {
        let co_c6 = cycle(6).complement();
        let e = contains_induced(&co_c6, &PatternSpec::CycleComplement(6)).unwrap();
        assert!(e.verify(&co_c6, &co_c6));
        assert!(contains_induced(&cycle(6), &PatternSpec::CycleComplement(6)).is_none());
    }
}
