//! Exact canonical labelling for small graphs and the built-in generator.
//!
//! Vertices are first split into an ordered partition by colour refinement
//! (degree, then the multiset of neighbour colours, iterated to stability).
//! Refinement only uses isomorphism-invariant data, so the canonical code is
//! the minimum adjacency code over every labelling that lists the cells in
//! order; that minimum is searched depth-first with prefix pruning.

use std::collections::BTreeMap;

use super::{Graph, GraphError};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 11;

/// Ordered colour classes, each cell listing its vertices ascending.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&color);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(&s).expect("signature present")).collect();
        let next_classes = sorted.len();
        color = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn count_distinct(values: &[usize]) -> usize {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// cell index for each position
    slot_cell: Vec<usize>,
    cells: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    best_code: u64,
    best_order: Vec<usize>,
    found: bool,
}

impl Search<'_> {
    /// `code` holds the first `bits` bits of the current labelling's code,
    /// left-aligned to `total_bits`.
    fn run(&mut self, pos: usize, code: u64, bits: u32) {
        if pos == self.n {
            if !self.found || code < self.best_code {
                self.best_code = code;
                self.best_order.clone_from(&self.order);
                self.found = true;
            }
            return;
        }
        let cell = self.slot_cell[pos];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            // column `pos`: bits x(0,pos) .. x(pos-1,pos)
            let mut c = code;
            let mut b = bits;
            for i in 0..pos {
                b += 1;
                if self.g.has_edge(self.order[i], v) {
                    c |= 1 << (self.total_bits - b);
                }
            }
            if self.found && b > 0 {
                let shift = self.total_bits - b;
                if c >> shift > self.best_code >> shift {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, c, b);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

fn canonical_order(g: &Graph) -> Result<(u64, Vec<usize>), GraphError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(GraphError::CanonRange { n, max: CANON_MAX_VERTICES });
    }
    let cells = refined_cells(g);
    let slot_cell = cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.len())).collect();
    let mut search = Search {
        g,
        n,
        total_bits: (n * (n - 1) / 2) as u32,
        slot_cell,
        cells,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best_code: 0,
        best_order: Vec::new(),
        found: false,
    };
    search.run(0, 0, 0);
    Ok((search.best_code, search.best_order))
}

/// Canonical adjacency code: equal codes (for equal `n`) iff isomorphic.
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    canonical_order(g).map(|(code, _)| code)
}

/// The canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    let (_, order) = canonical_order(g)?;
    Ok(g.permuted(&order))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

/// One representative per isomorphism class on `n` vertices (1 <= n <= 7),
/// in canonical form, ordered by canonical code.
///
/// Level `n` is grown from level `n - 1` by attaching a new vertex with every
/// possible neighbourhood; deleting the last vertex of any graph lands in
/// some class of the previous level, so nothing is missed.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, GraphError> {
    if !(1..=7).contains(&n) {
        return Err(GraphError::EnumerationRange(n));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for m in 2..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for base in &level {
            for nbhd in 0u64..(1 << (m - 1)) {
                let mut rows: Vec<u64> = base.rows().to_vec();
                for (u, row) in rows.iter_mut().enumerate() {
                    *row |= (nbhd >> u & 1) << (m - 1);
                }
                rows.push(nbhd);
                let g = Graph::from_rows_unchecked(rows);
                let (code, order) = canonical_order(&g)?;
                next.entry(code).or_insert_with(|| g.permuted(&order));
            }
        }
        level = next.into_values().collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}
