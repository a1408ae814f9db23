use crate::graph::{Graph, VertexSet};

fn dominate(g: &Graph, undominated: VertexSet, budget: usize, max_cover: usize) -> Option<VertexSet> {
    if undominated.is_empty() {
        return Some(VertexSet::new());
    }
    if budget == 0 || undominated.len() > budget * max_cover {
        return None;
    }
    // the undominated vertex with the fewest possible dominators
    let v = undominated.iter().min_by_key(|&v| g.closed_neighbors(v).len()).expect("nonempty");
    let mut options: Vec<usize> = g.closed_neighbors(v).to_vec();
    options.sort_by_key(|&u| std::cmp::Reverse((g.closed_neighbors(u) & undominated).len()));
    for u in options {
        if let Some(rest) = dominate(g, undominated - g.closed_neighbors(u), budget - 1, max_cover) {
            return Some(rest.with(u));
        }
    }
    None
}

/// A dominating set of minimum size (iterative deepening branch and bound
/// over closed neighbourhoods).
pub fn minimum_dominating_set(g: &Graph) -> VertexSet {
    let max_cover = g.max_degree() + 1;
    (1..=g.n()).find_map(|k| dominate(g, g.all_vertices(), k, max_cover)).expect("the whole vertex set dominates")
}

pub fn domination_number(g: &Graph) -> usize {
    minimum_dominating_set(g).len()
}

/// Whether `g` has a dominating set of size at most `k`.
pub fn has_dominating_set(g: &Graph, k: usize) -> bool {
    dominate(g, g.all_vertices(), k, g.max_degree() + 1).is_some()
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    s.iter().fold(VertexSet::new(), |acc, u| acc | g.closed_neighbors(u)) == g.all_vertices()
}
