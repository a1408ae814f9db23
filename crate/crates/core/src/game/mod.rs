//! The cops-and-robber game: exact solver, domination number and certificates.
//!
//! Rules: the cops (a multiset of `k` positions, stacking allowed) are placed
//! first, then the robber. Afterwards the cops move (each to its closed
//! neighbourhood), then the robber does; the cops win once a cop shares the
//! robber's vertex. The winning region of the cops is the least fixpoint of
//!
//! * cops to move at `(C, r)`: `r in C`, or some cop move `C -> C'` reaches a
//!   winning robber-to-move state `(C', r)`;
//! * robber to move at `(C, r)`: `r in C`, or every `r' in N[r]` gives a
//!   winning cops-to-move state `(C, r')`;
//!
//! and `k` cops win iff some placement `C` wins `(C, r)` for every robber
//! placement `r`. A robber whose every placement is dominated therefore loses.

mod certificate;
mod domination;
mod reference;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use certificate::{
    all_cop_moves, legal_cop_move, verify_cop_strategy, verify_evasion_region, Certificate, CertificateError,
    EvasionRegion, RegionCheck, RegionState, StrategyEntry, StrategyTable,
};
pub use domination::{domination_number, has_dominating_set, is_dominating, minimum_dominating_set};
pub use reference::cops_win_reference;

pub const DEFAULT_STATE_CAP: u64 = 500_000_000;
pub const STATE_CAP_ENV: &str = "PURSUITLAB_STATE_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("the game is only defined on connected graphs")]
    Disconnected,
    #[error("cop count {k} outside 1..={n}")]
    CopCount { k: usize, n: usize },
    #[error("state space of {states} states exceeds the cap of {cap} (set {STATE_CAP_ENV} to override)")]
    StateSpace { states: u128, cap: u64 },
    #[error("{k} cops win, so there is no evasion region")]
    CopsWin { k: usize },
    #[error("{k} cops do not win, so there is no cop strategy")]
    RobberWins { k: usize },
    #[error("no k <= domination number {gamma} lets the cops win")]
    DominationBoundViolated { gamma: usize },
}

/// The solver's state cap, honouring the environment override.
pub fn state_cap() -> u64 {
    std::env::var(STATE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_STATE_CAP)
}

/// Who moves next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Turn {
    CopsToMove,
    RobberToMove,
}

/// A node of the game graph: sorted cop positions, robber position, side to move.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub turn: Turn,
}

impl GameState {
    pub fn captured(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Number of game states for `k` cops on `n` vertices (both sides to move).
pub fn state_count(n: usize, k: usize) -> u128 {
    binomial((n + k - 1) as u128, k as u128).saturating_mul(2 * n as u128)
}

/// Every sorted `k`-multiset of cop positions, indexed by colex rank, with
/// its set of successor multisets after one cop move.
pub(crate) struct CopConfigs {
    k: usize,
    tuples: Vec<u8>,
    occupied: Vec<VertexSet>,
    moves: Vec<Vec<u32>>,
    binom: Vec<Vec<u64>>,
}

impl CopConfigs {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let top = n + k;
        let mut binom = vec![vec![0u64; k + 2]; top + 1];
        for (a, row) in binom.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = binomial(a as u128, b as u128) as u64;
            }
        }
        let count = binom[n + k - 1][k] as usize;
        let mut configs = CopConfigs {
            k,
            tuples: vec![0; count * k],
            occupied: vec![VertexSet::new(); count],
            moves: Vec::new(),
            binom,
        };

        let mut tuple = vec![0u8; k];
        let mut seen = 0usize;
        loop {
            let idx = configs.rank(&tuple);
            configs.tuples[idx * k..(idx + 1) * k].copy_from_slice(&tuple);
            configs.occupied[idx] = tuple.iter().map(|&c| c as usize).collect();
            seen += 1;
            // next nondecreasing tuple in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| (tuple[i] as usize) < n - 1) else {
                break;
            };
            let v = tuple[i] + 1;
            for c in &mut tuple[i..] {
                *c = v;
            }
        }
        debug_assert_eq!(seen, count);

        configs.moves = (0..count)
            .map(|idx| {
                let mut partial: BTreeSet<Vec<u8>> = BTreeSet::from([Vec::new()]);
                for &c in configs.tuple(idx) {
                    let mut next = BTreeSet::new();
                    for p in &partial {
                        for x in g.closed_neighbors(c as usize) {
                            let mut q = p.clone();
                            let at = q.partition_point(|&y| (y as usize) <= x);
                            q.insert(at, x as u8);
                            next.insert(q);
                        }
                    }
                    partial = next;
                }
                partial.iter().map(|t| configs.rank(t) as u32).collect()
            })
            .collect();
        configs
    }

    fn len(&self) -> usize {
        self.occupied.len()
    }

    /// Colex rank of the strictly increasing `c_i + i`.
    fn rank(&self, tuple: &[u8]) -> usize {
        tuple.iter().enumerate().map(|(i, &c)| self.binom[c as usize + i][i + 1] as usize).sum()
    }

    fn tuple(&self, idx: usize) -> &[u8] {
        &self.tuples[idx * self.k..(idx + 1) * self.k]
    }

    fn positions(&self, idx: usize) -> Vec<usize> {
        self.tuple(idx).iter().map(|&c| c as usize).collect()
    }
}

const LOSING: u32 = u32::MAX;

/// The solved game for one `(G, k)`.
pub struct Solution {
    n: usize,
    k: usize,
    configs: CopConfigs,
    /// order in which each cops-to-move state joined the attractor
    cop_order: Vec<u32>,
    robber_order: Vec<u32>,
    /// witness successor config for winning, uncaptured cops-to-move states
    cop_choice: Vec<u32>,
    initial: Option<usize>,
}

fn check_instance(g: &Graph, k: usize) -> Result<(), GameError> {
    if !g.is_connected() {
        return Err(GameError::Disconnected);
    }
    if k == 0 || k > g.n() {
        return Err(GameError::CopCount { k, n: g.n() });
    }
    let states = state_count(g.n(), k);
    let cap = state_cap();
    if states > cap as u128 {
        return Err(GameError::StateSpace { states, cap });
    }
    Ok(())
}

/// Solves the `k`-cop game on `g` by a worklist attractor computation.
pub fn solve(g: &Graph, k: usize) -> Result<Solution, GameError> {
    check_instance(g, k)?;
    let n = g.n();
    let configs = CopConfigs::new(g, k);
    let states = configs.len() * n;
    let mut cop_order = vec![LOSING; states];
    let mut robber_order = vec![LOSING; states];
    let mut cop_choice = vec![LOSING; states];
    let mut pending = vec![0u8; states];
    let mut queue: VecDeque<(Turn, usize)> = VecDeque::new();
    let mut counter = 0u32;

    for cfg in 0..configs.len() {
        for r in 0..n {
            let s = cfg * n + r;
            if configs.occupied[cfg].contains(r) {
                cop_order[s] = counter;
                robber_order[s] = counter;
                counter += 1;
                queue.push_back((Turn::CopsToMove, s));
                queue.push_back((Turn::RobberToMove, s));
            } else {
                pending[s] = g.closed_neighbors(r).len() as u8;
            }
        }
    }

    while let Some((turn, s)) = queue.pop_front() {
        let (cfg, r) = (s / n, s % n);
        match turn {
            Turn::RobberToMove => {
                // cop moves are symmetric, so predecessors are successors
                for &prev in &configs.moves[cfg] {
                    let p = prev as usize * n + r;
                    if cop_order[p] == LOSING {
                        cop_order[p] = counter;
                        counter += 1;
                        cop_choice[p] = cfg as u32;
                        queue.push_back((Turn::CopsToMove, p));
                    }
                }
            }
            Turn::CopsToMove => {
                for r0 in g.closed_neighbors(r) {
                    let p = cfg * n + r0;
                    if robber_order[p] == LOSING {
                        pending[p] -= 1;
                        if pending[p] == 0 {
                            robber_order[p] = counter;
                            counter += 1;
                            queue.push_back((Turn::RobberToMove, p));
                        }
                    }
                }
            }
        }
    }

    // placement: all robber replies must be winning; prefer the fastest
    let initial = (0..configs.len())
        .filter_map(|cfg| {
            let worst = (0..n).map(|r| cop_order[cfg * n + r]).max().expect("n >= 1");
            (worst != LOSING).then_some((worst, cfg))
        })
        .min()
        .map(|(_, cfg)| cfg);

    Ok(Solution { n, k, configs, cop_order, robber_order, cop_choice, initial })
}

impl Solution {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cops_win(&self) -> bool {
        self.initial.is_some()
    }

    pub fn state_count(&self) -> usize {
        2 * self.configs.len() * self.n
    }

    pub fn initial_placement(&self) -> Option<Vec<usize>> {
        self.initial.map(|cfg| self.configs.positions(cfg))
    }

    fn config_index(&self, cops: &[usize]) -> usize {
        let mut t: Vec<u8> = cops.iter().map(|&c| c as u8).collect();
        t.sort_unstable();
        self.configs.rank(&t)
    }

    /// Whether the robber, to move at `(cops, robber)`, survives forever.
    pub fn robber_survives(&self, cops: &[usize], robber: usize) -> bool {
        assert_eq!(cops.len(), self.k);
        self.robber_order[self.config_index(cops) * self.n + robber] == LOSING
    }

    /// Whether the cops, to move at `(cops, robber)`, can force capture.
    pub fn cops_to_move_wins(&self, cops: &[usize], robber: usize) -> bool {
        assert_eq!(cops.len(), self.k);
        self.cop_order[self.config_index(cops) * self.n + robber] != LOSING
    }

    pub fn strategy(&self) -> Result<StrategyTable, GameError> {
        let initial = self.initial_placement().ok_or(GameError::RobberWins { k: self.k })?;
        let n = self.n;
        let mut entries = Vec::new();
        for cfg in 0..self.configs.len() {
            for r in 0..n {
                let s = cfg * n + r;
                if self.cop_choice[s] != LOSING {
                    entries.push(StrategyEntry {
                        cops: self.configs.positions(cfg),
                        robber: r,
                        next: self.configs.positions(self.cop_choice[s] as usize),
                    });
                }
            }
        }
        Ok(StrategyTable { n, k: self.k, initial, entries })
    }

    pub fn evasion_region(&self) -> Result<EvasionRegion, GameError> {
        if self.cops_win() {
            return Err(GameError::CopsWin { k: self.k });
        }
        let n = self.n;
        let states = (0..self.configs.len() * n)
            .filter(|&s| self.robber_order[s] == LOSING)
            .map(|s| RegionState { cops: self.configs.positions(s / n), robber: s % n })
            .collect();
        Ok(EvasionRegion { n, k: self.k, states })
    }
}

pub fn cops_win(g: &Graph, k: usize) -> Result<bool, GameError> {
    Ok(solve(g, k)?.cops_win())
}

/// Least `k` for which `k` cops win, searching upward from 1. The
/// domination number caps the search.
pub fn cop_number(g: &Graph) -> Result<usize, GameError> {
    if !g.is_connected() {
        return Err(GameError::Disconnected);
    }
    let gamma = domination_number(g);
    for k in 1..=gamma {
        if cops_win(g, k)? {
            return Ok(k);
        }
    }
    Err(GameError::DominationBoundViolated { gamma })
}

/// Least `k` with `k` cops winning, found by running the solver for each
/// `k` with no domination cap.
pub fn cop_number_uncapped(g: &Graph) -> Result<usize, GameError> {
    for k in 1..=g.n() {
        if cops_win(g, k)? {
            return Ok(k);
        }
    }
    unreachable!("n cops always win on a connected graph")
}

pub fn extract_cop_strategy(g: &Graph, k: usize) -> Result<StrategyTable, GameError> {
    solve(g, k)?.strategy()
}

pub fn extract_evasion_region(g: &Graph, k: usize) -> Result<EvasionRegion, GameError> {
    solve(g, k)?.evasion_region()
}

/// Whichever certificate the game outcome admits.
pub fn certificate(g: &Graph, k: usize) -> Result<Certificate, GameError> {
    let sol = solve(g, k)?;
    Ok(if sol.cops_win() {
        Certificate::CopStrategy(sol.strategy()?)
    } else {
        Certificate::EvasionRegion(sol.evasion_region()?)
    })
}
