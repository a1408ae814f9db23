use std::collections::HashMap;

use super::{check_instance, GameError};
use crate::graph::Graph;

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(n, k - 1) {
        let lo = rest.last().copied().unwrap_or(0);
        for v in lo..n {
            let mut t = rest.clone();
            t.push(v);
            out.push(t);
        }
    }
    out
}

fn ordered_moves(g: &Graph, cops: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &c in cops {
        out = out
            .into_iter()
            .flat_map(|p| {
                g.closed_neighbors(c).iter().map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    for m in &mut out {
        m.sort_unstable();
    }
    out
}

/// Independent oracle for [`super::cops_win`]: a full table of both
/// players' states re-evaluated in sweeps until nothing changes, with cop
/// moves recomputed from scratch on every visit.
pub fn cops_win_reference(g: &Graph, k: usize) -> Result<bool, GameError> {
    check_instance(g, k)?;
    let n = g.n();
    let configs = multisets(n, k);
    let mut cops_turn: HashMap<(Vec<usize>, usize), bool> = HashMap::new();
    let mut robber_turn: HashMap<(Vec<usize>, usize), bool> = HashMap::new();
    for c in &configs {
        for r in 0..n {
            let caught = c.contains(&r);
            cops_turn.insert((c.clone(), r), caught);
            robber_turn.insert((c.clone(), r), caught);
        }
    }
    loop {
        let mut changed = false;
        for c in &configs {
            for r in 0..n {
                if !cops_turn[&(c.clone(), r)] && ordered_moves(g, c).into_iter().any(|m| robber_turn[&(m, r)]) {
                    cops_turn.insert((c.clone(), r), true);
                    changed = true;
                }
                if !robber_turn[&(c.clone(), r)] && g.closed_neighbors(r).iter().all(|r2| cops_turn[&(c.clone(), r2)]) {
                    robber_turn.insert((c.clone(), r), true);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(configs.iter().any(|c| (0..n).all(|r| cops_turn[&(c.clone(), r)])))
}
