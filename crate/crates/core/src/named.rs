//! Named graphs: the Shrikhande graph and a few textbook fixtures.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::patterns::{self, PatternSpec};

/// A vertex of the Shrikhande graph, an element `(a, b)` of Z4 x Z4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShrikhandeVertex {
    pub a: u8,
    pub b: u8,
}

impl ShrikhandeVertex {
    /// Reduces both coordinates mod 4.
    pub fn new(a: i64, b: i64) -> Self {
        ShrikhandeVertex { a: a.rem_euclid(4) as u8, b: b.rem_euclid(4) as u8 }
    }

    pub fn index(self) -> usize {
        self.a as usize * 4 + self.b as usize
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 16, "Shrikhande vertex index {i} out of range");
        ShrikhandeVertex { a: (i / 4) as u8, b: (i % 4) as u8 }
    }

    pub fn offset(self, da: i64, db: i64) -> Self {
        Self::new(self.a as i64 + da, self.b as i64 + db)
    }
}

impl std::fmt::Display for ShrikhandeVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Whether `(a,b)` and `(c,d)` are adjacent: the difference is
/// (0,+-1), (+-1,0), (1,1) or (3,3) mod 4.
fn shrikhande_adjacent(x: ShrikhandeVertex, y: ShrikhandeVertex) -> bool {
    let da = (x.a + 4 - y.a) % 4;
    let db = (x.b + 4 - y.b) % 4;
    matches!((da, db), (0, 1) | (0, 3) | (1, 0) | (3, 0) | (1, 1) | (3, 3))
}

/// The Shrikhande graph with vertex `(a,b)` at index `4a + b`.
pub fn shrikhande() -> Graph {
    let edges: Vec<(usize, usize)> = (0..16)
        .flat_map(|i| (i + 1..16).map(move |j| (i, j)))
        .filter(|&(i, j)| shrikhande_adjacent(ShrikhandeVertex::from_index(i), ShrikhandeVertex::from_index(j)))
        .collect();
    Graph::from_edges(16, &edges).expect("valid construction")
}

pub fn shrikhande_complement() -> Graph {
    shrikhande().complement()
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges).expect("valid vertex count")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid vertex count")
}

/// Cycle on `n >= 3` vertices, `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid vertex count")
}

pub fn empty(n: usize) -> Graph {
    Graph::empty(n).expect("valid vertex count")
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - (i+5).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("valid construction")
}

/// `p` isolated vertices followed by `q` disjoint edges.
pub fn pk1_qk2(p: usize, q: usize) -> Graph {
    let edges: Vec<_> = (0..q).map(|i| (p + 2 * i, p + 2 * i + 1)).collect();
    Graph::from_edges(p + 2 * q, &edges).expect("valid vertex count")
}

/// Resolves a fixture name: `shrikhande`, `shrikhande-complement`,
/// `petersen`, `K<n>`, `P<n>`, `C<n>`, `E<n>` (edgeless).
pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "shrikhande" => return Some(shrikhande()),
        "shrikhande-complement" | "co-shrikhande" => return Some(shrikhande_complement()),
        "petersen" => return Some(petersen()),
        _ => {}
    }
    let (kind, digits) = name.split_at(1);
    let n: usize = digits.parse().ok()?;
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return None;
    }
    match kind {
        "K" => Some(complete(n)),
        "P" => Some(path(n)),
        "C" if n >= 3 => Some(cycle(n)),
        "E" => Some(empty(n)),
        _ => None,
    }
}

/// Outcome of one structural check: passed, or a witness describing the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub description: &'static str,
    pub passed: bool,
    /// Human-readable witnesses (vertex tuples) for failures.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertices: usize,
    pub edges: usize,
    pub checks: Vec<CheckOutcome>,
}

impl StructureReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const CHECK_K4_FREE: &str = "k4-free";
pub const CHECK_COMMON_NEIGHBORS: &str = "two-common-neighbors";
pub const CHECK_NO_LONG_ANTIHOLE: &str = "complement-hole-free";
pub const CHECK_NEIGHBORHOOD_C6: &str = "neighborhood-c6";

fn label(v: usize) -> String {
    if v < 16 {
        ShrikhandeVertex::from_index(v).to_string()
    } else {
        v.to_string()
    }
}

fn labels(vs: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = vs.into_iter().map(label).collect();
    format!("{{{}}}", parts.join(","))
}

/// Every 4-set of `h` that is a clique, by plain enumeration.
fn k4_witnesses(h: &Graph) -> Vec<String> {
    let n = h.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in h.neighbors(a).iter().filter(|&b| b > a) {
            let ab = h.neighbors(a) & h.neighbors(b);
            for c in ab.iter().filter(|&c| c > b) {
                for d in (ab & h.neighbors(c)).iter().filter(|&d| d > c) {
                    out.push(labels([a, b, c, d]));
                }
            }
        }
    }
    out
}

/// Runs the four structural checks on a 16-vertex candidate Shrikhande graph.
///
/// Each check is recomputed on its own: the K4 check enumerates cliques
/// directly and cross-checks with the induced-pattern search, common
/// neighbours are intersected pair by pair, long holes in the complement go
/// through the hole finder, and every open neighbourhood must induce a
/// connected 2-regular graph on 6 vertices.
pub fn verify_structure(h: &Graph) -> StructureReport {
    let mut checks = Vec::new();

    let mut k4 = k4_witnesses(h);
    if k4.is_empty() {
        if let Some(e) = patterns::contains_induced(h, &PatternSpec::Explicit(complete(4))) {
            k4.push(format!("pattern search disagrees: {}", labels(e.map)));
        }
    }
    checks.push(CheckOutcome {
        name: CHECK_K4_FREE,
        description: "no four pairwise adjacent vertices",
        passed: k4.is_empty(),
        witnesses: k4,
    });

    let mut bad_pairs = Vec::new();
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            let common = h.common_neighbors(u, v).expect("distinct in-range vertices");
            if common.len() != 2 {
                bad_pairs.push(format!("{} {} share {}", label(u), label(v), labels(common)));
            }
        }
    }
    checks.push(CheckOutcome {
        name: CHECK_COMMON_NEIGHBORS,
        description: "every pair of distinct vertices has exactly two common neighbours",
        passed: bad_pairs.is_empty(),
        witnesses: bad_pairs,
    });

    let holes = patterns::has_long_induced_cycle(&h.complement(), 6)
        .map(|e| vec![format!("induced C{} in complement: {}", e.map.len(), labels(e.map))])
        .unwrap_or_default();
    checks.push(CheckOutcome {
        name: CHECK_NO_LONG_ANTIHOLE,
        description: "complement has no induced cycle of length >= 6",
        passed: holes.is_empty(),
        witnesses: holes,
    });

    let mut bad_nbhd = Vec::new();
    for u in 0..h.n() {
        let nb = h.neighbors(u);
        let ok = nb.len() == 6
            && h.induced_subgraph(nb)
                .is_ok_and(|sub| sub.min_degree() == 2 && sub.max_degree() == 2 && sub.is_connected());
        if !ok {
            bad_nbhd.push(format!("N{} = {}", label(u), labels(nb)));
        }
    }
    checks.push(CheckOutcome {
        name: CHECK_NEIGHBORHOOD_C6,
        description: "every open neighbourhood induces a 6-cycle",
        passed: bad_nbhd.is_empty(),
        witnesses: bad_nbhd,
    });

    StructureReport { vertices: h.n(), edges: h.edge_count(), checks }
}

pub fn verify_shrikhande_structure() -> StructureReport {
    verify_structure(&shrikhande())
}

/// `N(u)` in Shrikhande coordinates, for display.
pub fn shrikhande_neighbors(v: ShrikhandeVertex) -> Vec<ShrikhandeVertex> {
    let h = shrikhande();
    h.neighbors(v.index()).iter().map(ShrikhandeVertex::from_index).collect()
}

/// A vertex set written in Shrikhande coordinates.
pub fn shrikhande_set(vs: &[(i64, i64)]) -> VertexSet {
    vs.iter().map(|&(a, b)| ShrikhandeVertex::new(a, b).index()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64) -> usize {
        ShrikhandeVertex::new(a, b).index()
    }

    #[test]
    fn neighbourhood_of_origin() {
        let h = shrikhande();
        let expected = shrikhande_set(&[(0, 1), (1, 0), (1, 1), (0, 3), (3, 0), (3, 3)]);
        assert_eq!(h.neighbors(v(0, 0)), expected);
    }

    #[test]
    fn six_regular_with_48_edges() {
        let h = shrikhande();
        assert!((0..16).all(|u| h.degree(u) == 6));
        assert_eq!(h.edge_count(), 48);
        let co = h.complement();
        assert!((0..16).all(|u| co.degree(u) == 9));
        assert_eq!(co.min_degree(), 9);
    }

    #[test]
    fn neighbourhood_formula_holds_everywhere() {
        let h = shrikhande();
        for i in 0..16 {
            let x = ShrikhandeVertex::from_index(i);
            let expected: VertexSet = [(0, 1), (1, 0), (1, 1), (0, 3), (3, 0), (3, 3)]
                .iter()
                .map(|&(da, db)| x.offset(da, db).index())
                .collect();
            assert_eq!(h.neighbors(i), expected, "at {x}");
        }
    }

    #[test]
    fn named_common_neighbour_pairs() {
        let h = shrikhande();
        assert_eq!(h.common_neighbors(v(0, 0), v(1, 0)).unwrap(), shrikhande_set(&[(1, 1), (0, 3)]));
        assert_eq!(h.common_neighbors(v(0, 0), v(2, 2)).unwrap(), shrikhande_set(&[(3, 3), (1, 1)]));
    }

    #[test]
    fn origin_neighbourhood_induces_c6() {
        let h = shrikhande();
        let sub = h.induced_subgraph(h.neighbors(0)).unwrap();
        assert!(crate::graph::is_isomorphic(&sub, &cycle(6)).unwrap());
    }

    #[test]
    fn structure_checks_all_pass() {
        let report = verify_shrikhande_structure();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.checks.len(), 4);
        assert!(report.check(CHECK_K4_FREE).unwrap().witnesses.is_empty());
    }

    #[test]
    fn mutated_adjacency_breaks_common_neighbours() {
        let h = shrikhande();
        let mut rows = h.rows().to_vec();
        // drop edge (0,0)-(0,1)
        rows[0] &= !(1 << 1);
        rows[1] &= !1;
        let broken = Graph::from_rows(rows).unwrap();
        let report = verify_structure(&broken);
        assert!(!report.check(CHECK_COMMON_NEIGHBORS).unwrap().passed);
        assert!(!report.check(CHECK_NEIGHBORHOOD_C6).unwrap().passed);
    }

    #[test]
    fn rook_graph_fails_hole_check_or_k4() {
        // the 4x4 rook's graph shares parameters with the Shrikhande graph but
        // contains K4 (each row)
        let mut edges = Vec::new();
        for i in 0..16 {
            for j in i + 1..16 {
                if i / 4 == j / 4 || i % 4 == j % 4 {
                    edges.push((i, j));
                }
            }
        }
        let rook = Graph::from_edges(16, &edges).unwrap();
        let report = verify_structure(&rook);
        assert!(report.check(CHECK_COMMON_NEIGHBORS).unwrap().passed);
        assert!(!report.check(CHECK_K4_FREE).unwrap().passed);
    }

    #[test]
    fn fixtures_by_name() {
        assert_eq!(by_name("C5").unwrap(), cycle(5));
        assert_eq!(by_name("K4").unwrap().edge_count(), 6);
        assert_eq!(by_name("petersen").unwrap().edge_count(), 15);
        assert!(by_name("C2").is_none());
        assert!(by_name("X3").is_none());
        assert!(by_name("K63").is_none());
        assert_eq!(pk1_qk2(2, 1).edge_count(), 1);
        let p = petersen();
        assert!((0..10).all(|u| p.degree(u) == 3));
    }
}
