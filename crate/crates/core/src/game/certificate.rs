//! Certificates for both outcomes of the game, and checkers that replay them
//! against the rules without consulting the solver.

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate is for {found} vertices, graph has {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("cop configuration {0:?} is malformed")]
    BadConfiguration(Vec<usize>),
    #[error("no prescribed move at cops {cops:?}, robber {robber}")]
    MissingMove { cops: Vec<usize>, robber: usize },
    #[error("illegal cop move {from:?} -> {to:?}")]
    IllegalMove { from: Vec<usize>, to: Vec<usize> },
    #[error("strategy revisits cops {cops:?}, robber {robber} without capturing")]
    Cycle { cops: Vec<usize>, robber: usize },
    #[error("evasion region is empty")]
    EmptyRegion,
    #[error("region state cops {cops:?}, robber {robber} has no safe robber move")]
    NotClosed { cops: Vec<usize>, robber: usize },
    #[error("cop placement {0:?} leaves the robber no safe start")]
    NoSafePlacement(Vec<usize>),
}

/// One prescribed cop move: at `(cops, robber)` with the cops to move, go to `next`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyEntry {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub next: Vec<usize>,
}

/// A positional cop strategy: an opening placement plus one move for every
/// winning, not yet captured, cops-to-move state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategyTable {
    pub n: usize,
    pub k: usize,
    pub initial: Vec<usize>,
    pub entries: Vec<StrategyEntry>,
}

/// A robber-to-move state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RegionState {
    pub cops: Vec<usize>,
    pub robber: usize,
}

/// Robber-to-move states from which the robber survives forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvasionRegion {
    pub n: usize,
    pub k: usize,
    pub states: Vec<RegionState>,
}

impl EvasionRegion {
    pub fn contains(&self, cops: &[usize], robber: usize) -> bool {
        let mut c = cops.to_vec();
        c.sort_unstable();
        self.states.iter().any(|s| s.cops == c && s.robber == robber)
    }

    pub fn to_set(&self) -> HashSet<RegionState> {
        self.states.iter().cloned().collect()
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Certificate {
    CopStrategy(StrategyTable),
    EvasionRegion(EvasionRegion),
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Whether each cop in `from` can reach a distinct slot of `to` in one step
/// (bipartite matching on the closed-neighbourhood relation).
pub fn legal_cop_move(g: &Graph, from: &[usize], to: &[usize]) -> bool {
    if from.len() != to.len() {
        return false;
    }
    fn augment(
        g: &Graph,
        i: usize,
        from: &[usize],
        to: &[usize],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for j in 0..to.len() {
            if seen[j] || !g.closed_neighbors(from[i]).contains(to[j]) {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|o| augment(g, o, from, to, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; to.len()];
    (0..from.len()).all(|i| {
        let mut seen = vec![false; to.len()];
        augment(g, i, from, to, &mut seen, &mut owner)
    })
}

/// All sorted cop configurations reachable in one move, by plain cartesian
/// product over the cops' closed neighbourhoods.
pub fn all_cop_moves(g: &Graph, from: &[usize]) -> Vec<Vec<usize>> {
    let mut out: HashSet<Vec<usize>> = HashSet::new();
    let mut current = vec![0usize; from.len()];
    fn rec(g: &Graph, from: &[usize], i: usize, current: &mut Vec<usize>, out: &mut HashSet<Vec<usize>>) {
        if i == from.len() {
            out.insert(sorted(current));
            return;
        }
        for x in g.closed_neighbors(from[i]) {
            current[i] = x;
            rec(g, from, i + 1, current, out);
        }
    }
    rec(g, from, 0, &mut current, &mut out);
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    v
}

fn check_config(g: &Graph, k: usize, cops: &[usize]) -> Result<(), CertificateError> {
    if cops.len() != k || cops.iter().any(|&c| c >= g.n()) || cops.windows(2).any(|w| w[0] > w[1]) {
        return Err(CertificateError::BadConfiguration(cops.to_vec()));
    }
    Ok(())
}

/// Replays `table` against every robber placement and every robber reply.
/// Returns the worst-case number of rounds until capture.
pub fn verify_cop_strategy(g: &Graph, table: &StrategyTable) -> Result<usize, CertificateError> {
    if table.n != g.n() {
        return Err(CertificateError::VertexCount { expected: g.n(), found: table.n });
    }
    check_config(g, table.k, &table.initial)?;
    let mut moves: HashMap<(Vec<usize>, usize), &Vec<usize>> = HashMap::new();
    for e in &table.entries {
        check_config(g, table.k, &e.cops)?;
        check_config(g, table.k, &e.next)?;
        moves.insert((e.cops.clone(), e.robber), &e.next);
    }

    #[derive(Clone, Copy)]
    enum Mark {
        OnStack,
        Done(usize),
    }
    struct Replay<'a> {
        g: &'a Graph,
        moves: HashMap<(Vec<usize>, usize), &'a Vec<usize>>,
        memo: HashMap<(Vec<usize>, usize), Mark>,
    }
    impl Replay<'_> {
        /// Rounds to capture from a cops-to-move state, robber playing adversarially.
        fn rounds(&mut self, cops: Vec<usize>, robber: usize) -> Result<usize, CertificateError> {
            if cops.contains(&robber) {
                return Ok(0);
            }
            let key = (cops, robber);
            match self.memo.get(&key) {
                Some(Mark::Done(r)) => return Ok(*r),
                Some(Mark::OnStack) => {
                    return Err(CertificateError::Cycle { cops: key.0, robber });
                }
                None => {}
            }
            self.memo.insert(key.clone(), Mark::OnStack);
            let next = self
                .moves
                .get(&key)
                .map(|v| (*v).clone())
                .ok_or_else(|| CertificateError::MissingMove { cops: key.0.clone(), robber })?;
            if !legal_cop_move(self.g, &key.0, &next) {
                return Err(CertificateError::IllegalMove { from: key.0.clone(), to: next });
            }
            let mut worst = 1;
            if !next.contains(&robber) {
                for r in self.g.closed_neighbors(robber) {
                    if next.contains(&r) {
                        continue;
                    }
                    worst = worst.max(1 + self.rounds(next.clone(), r)?);
                }
            }
            self.memo.insert(key, Mark::Done(worst));
            Ok(worst)
        }
    }

    let mut replay = Replay { g, moves, memo: HashMap::new() };
    let mut worst = 0;
    for r in 0..g.n() {
        worst = worst.max(replay.rounds(table.initial.clone(), r)?);
    }
    Ok(worst)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionCheck {
    pub states: usize,
    pub placements_checked: usize,
}

/// Checks that `region` is nonempty, closed (from each state the robber has
/// a move that stays in the region against every cop reply), and that
/// every cop placement admits a robber placement leading into it.
pub fn verify_evasion_region(g: &Graph, region: &EvasionRegion) -> Result<RegionCheck, CertificateError> {
    if region.n != g.n() {
        return Err(CertificateError::VertexCount { expected: g.n(), found: region.n });
    }
    if region.states.is_empty() {
        return Err(CertificateError::EmptyRegion);
    }
    let set = region.to_set();
    let mut move_cache: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
    let mut moves_of = |cops: &Vec<usize>| -> Vec<Vec<usize>> {
        move_cache.entry(cops.clone()).or_insert_with(|| all_cop_moves(g, cops)).clone()
    };
    // robber standing at r with the cops to move at `cops`: safe iff every
    // cop reply leaves a region state with r uncaught
    let mut safe_spot = |cops: &Vec<usize>, r: usize| -> bool {
        !cops.contains(&r)
            && moves_of(cops)
                .iter()
                .all(|next| !next.contains(&r) && set.contains(&RegionState { cops: next.clone(), robber: r }))
    };

    for s in &region.states {
        check_config(g, region.k, &s.cops)?;
        if s.cops.contains(&s.robber) || !g.closed_neighbors(s.robber).iter().any(|r| safe_spot(&s.cops, r)) {
            return Err(CertificateError::NotClosed { cops: s.cops.clone(), robber: s.robber });
        }
    }

    let mut placements = 0;
    let mut cops = vec![0usize; region.k];
    loop {
        placements += 1;
        if !(0..g.n()).any(|r| safe_spot(&cops, r)) {
            return Err(CertificateError::NoSafePlacement(cops));
        }
        let Some(i) = (0..region.k).rev().find(|&i| cops[i] < g.n() - 1) else {
            break;
        };
        let v = cops[i] + 1;
        for c in &mut cops[i..] {
            *c = v;
        }
    }
    Ok(RegionCheck { states: region.states.len(), placements_checked: placements })
}
