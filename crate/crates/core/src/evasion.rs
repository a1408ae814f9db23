//! The explicit robber strategy against two cops on the complement of the
//! Shrikhande graph, and an exhaustive check that it never gets caught.
//!
//! Write `H` for the Shrikhande graph and `G` for its complement (the board).
//! With the cops on `u, v` the robber always ends its turn on a vertex that
//! is `H`-adjacent to both cops, i.e. outside `N_G[u] ∪ N_G[v]`:
//!
//! * opening, stacked cops: the smallest `H`-neighbour of `u`;
//! * opening, distinct cops: `a`, the smaller common `H`-neighbour of `u, v`;
//! * later, no cop `G`-adjacent to the robber: stay;
//! * later, stacked cops: the smallest `w` that is `G`-adjacent to the robber
//!   and `H`-adjacent to `u` (four candidates, since `u` and the robber share
//!   exactly two `H`-neighbours);
//! * later, distinct cops: whichever of `a, b` is `G`-adjacent to the robber,
//!   preferring `a` (one of them is, or `a, b` would share three
//!   `H`-neighbours).

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::game::{self, Solution};
use crate::graph::{Graph, VertexSet};
use crate::named::{self, ShrikhandeVertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvasionError {
    #[error("vertex {0} is not a vertex of the Shrikhande complement")]
    VertexRange(usize),
    #[error("robber at {robber} already shares a vertex with a cop")]
    AlreadyCaught { robber: usize },
    #[error("cop move {from} -> {to} is not legal")]
    IllegalCopMove { from: usize, to: usize },
    #[error("no safe reply against cops {u}, {v} with robber at {prev:?}")]
    NoSafeReply { u: usize, v: usize, prev: Option<usize> },
    #[error("the evasion strategy is defined only on the Shrikhande complement")]
    WrongBoard,
}

struct Boards {
    h: Graph,
    board: Graph,
}

fn boards() -> &'static Boards {
    static BOARDS: OnceLock<Boards> = OnceLock::new();
    BOARDS.get_or_init(|| {
        let h = named::shrikhande();
        let board = h.complement();
        Boards { h, board }
    })
}

/// The board the strategy plays on.
pub fn board() -> &'static Graph {
    &boards().board
}

/// Cop positions after their move, the robber's previous position (absent
/// in the opening round) and, for distinct cops, their two common
/// neighbours in the Shrikhande graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EvasionContext {
    pub u: usize,
    pub v: usize,
    pub prev_robber: Option<usize>,
    pub common: Option<(usize, usize)>,
}

impl EvasionContext {
    pub fn new(u: usize, v: usize, prev_robber: Option<usize>) -> Result<Self, EvasionError> {
        for x in [Some(u), Some(v), prev_robber].into_iter().flatten() {
            if x >= 16 {
                return Err(EvasionError::VertexRange(x));
            }
        }
        if let Some(p) = prev_robber {
            if p == u || p == v {
                return Err(EvasionError::AlreadyCaught { robber: p });
            }
        }
        let common = (u != v).then(|| {
            let c = boards().h.common_neighbors(u, v).expect("distinct vertices");
            debug_assert_eq!(c.len(), 2);
            let mut it = c.iter();
            (it.next().expect("two"), it.next().expect("two"))
        });
        Ok(EvasionContext { u, v, prev_robber, common })
    }
}

/// Which case of the strategy produced a reply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReplyBranch {
    OpeningStacked,
    OpeningSplit,
    Stay,
    StackedDodge,
    SplitDodge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Reply {
    pub vertex: usize,
    pub branch: ReplyBranch,
}

pub fn robber_reply(ctx: &EvasionContext) -> Result<usize, EvasionError> {
    robber_reply_detailed(ctx).map(|r| r.vertex)
}

pub fn robber_reply_detailed(ctx: &EvasionContext) -> Result<Reply, EvasionError> {
    let Boards { h, board } = boards();
    let (u, v) = (ctx.u, ctx.v);
    let fail = || EvasionError::NoSafeReply { u, v, prev: ctx.prev_robber };
    let (vertex, branch) = match (ctx.prev_robber, ctx.common) {
        (None, None) => (h.neighbors(u).min().ok_or_else(fail)?, ReplyBranch::OpeningStacked),
        (None, Some((a, _))) => (a, ReplyBranch::OpeningSplit),
        (Some(p), common) => {
            let near = board.neighbors(p);
            if !near.contains(u) && !near.contains(v) {
                (p, ReplyBranch::Stay)
            } else if let Some((a, b)) = common {
                let w = [a, b].into_iter().find(|&x| near.contains(x)).ok_or_else(fail)?;
                (w, ReplyBranch::SplitDodge)
            } else {
                let w = (near - board.closed_neighbors(u)).min().ok_or_else(fail)?;
                (w, ReplyBranch::StackedDodge)
            }
        }
    };
    let danger = board.closed_neighbors(u) | board.closed_neighbors(v);
    if danger.contains(vertex) {
        return Err(fail());
    }
    if let Some(p) = ctx.prev_robber {
        if !board.closed_neighbors(p).contains(vertex) {
            return Err(fail());
        }
    }
    Ok(Reply { vertex, branch })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BranchCounts {
    pub opening_stacked: usize,
    pub opening_split: usize,
    pub stay: usize,
    pub stacked_dodge: usize,
    pub split_dodge: usize,
}

impl BranchCounts {
    fn record(&mut self, b: ReplyBranch) {
        match b {
            ReplyBranch::OpeningStacked => self.opening_stacked += 1,
            ReplyBranch::OpeningSplit => self.opening_split += 1,
            ReplyBranch::Stay => self.stay += 1,
            ReplyBranch::StackedDodge => self.stacked_dodge += 1,
            ReplyBranch::SplitDodge => self.split_dodge += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvasionReport {
    pub opening_placements: usize,
    /// (cops after moving, previous robber) contexts answered after the opening
    pub contexts_checked: usize,
    /// distinct (u, v, robber) positions the robber ends a turn on
    pub safe_states: usize,
    pub branches: BranchCounts,
    /// stacked-dodge replies whose candidate count was recomputed
    pub stacked_count_checks: usize,
    pub violations: Vec<String>,
    /// contexts checked against the solver's two-cop evasion region
    pub region_checks: usize,
    pub outside_region: Vec<String>,
}

impl EvasionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.outside_region.is_empty() && self.safe_states > 0
    }
}

fn show(v: usize) -> String {
    ShrikhandeVertex::from_index(v).to_string()
}

/// Plays the strategy against every opening placement and every sequence of
/// legal cop moves (the reachable (u, v, robber) positions are at most 16^3),
/// checking safety, legality and the four-candidate count, and that every
/// position lies in the exact solver's two-cop evasion region.
pub fn verify_evasion_closure() -> EvasionReport {
    let solution = game::solve(board(), 2).expect("two-cop game on 16 vertices is tiny");
    verify_closure_against(&solution)
}

fn verify_closure_against(solution: &Solution) -> EvasionReport {
    let Boards { h, board } = boards();
    let mut report = EvasionReport {
        opening_placements: 0,
        contexts_checked: 0,
        safe_states: 0,
        branches: BranchCounts::default(),
        stacked_count_checks: 0,
        violations: Vec::new(),
        region_checks: 0,
        outside_region: Vec::new(),
    };
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut queue = VecDeque::new();

    for u in 0..16 {
        for v in 0..16 {
            report.opening_placements += 1;
            let reply = EvasionContext::new(u, v, None).and_then(|c| robber_reply_detailed(&c));
            match reply {
                Ok(r) => {
                    report.branches.record(r.branch);
                    report.region_checks += 1;
                    if solution.cops_to_move_wins(&[u, v], r.vertex) {
                        report.outside_region.push(format!(
                            "opening: cops {} {} robber {} is cop-winning",
                            show(u),
                            show(v),
                            show(r.vertex)
                        ));
                    }
                    if seen.insert((u, v, r.vertex)) {
                        queue.push_back((u, v, r.vertex));
                    }
                }
                Err(e) => report.violations.push(format!("opening {} {}: {e}", show(u), show(v))),
            }
        }
    }

    while let Some((u0, v0, w)) = queue.pop_front() {
        for u in board.closed_neighbors(u0) {
            for v in board.closed_neighbors(v0) {
                report.contexts_checked += 1;
                report.region_checks += 1;
                if !solution.robber_survives(&[u, v], w) {
                    report.outside_region.push(format!(
                        "cops {} {} robber {} (to move) is not in the evasion region",
                        show(u),
                        show(v),
                        show(w)
                    ));
                }
                let reply = EvasionContext::new(u, v, Some(w)).and_then(|c| robber_reply_detailed(&c));
                let r = match reply {
                    Ok(r) => r,
                    Err(e) => {
                        report.violations.push(format!("cops {} {} robber {}: {e}", show(u), show(v), show(w)));
                        continue;
                    }
                };
                report.branches.record(r.branch);
                if r.branch == ReplyBranch::StackedDodge {
                    report.stacked_count_checks += 1;
                    let candidates = h.neighbors(u).len() - (h.neighbors(u) & h.neighbors(w)).len();
                    let direct = (board.neighbors(w) - board.closed_neighbors(u)).len();
                    if candidates != 4 || direct != 4 {
                        report.violations.push(format!(
                            "stacked cops {} robber {}: {candidates} / {direct} dodge candidates, expected 4",
                            show(u),
                            show(w)
                        ));
                    }
                }
                if seen.insert((u, v, r.vertex)) {
                    queue.push_back((u, v, r.vertex));
                }
            }
        }
    }
    report.safe_states = seen.len();
    report
}

/// One round of a played game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRound {
    pub round: usize,
    pub cops: (usize, usize),
    pub robber: usize,
    pub branch: ReplyBranch,
}

/// Plays `rounds` rounds; `cop_policy(round, previous cops, robber)` picks the
/// cops' positions and must respect the movement rule after the opening.
pub fn play<F>(rounds: usize, mut cop_policy: F) -> Result<Vec<TraceRound>, EvasionError>
where
    F: FnMut(usize, Option<(usize, usize)>, Option<usize>) -> (usize, usize),
{
    let board = board();
    let mut trace: Vec<TraceRound> = Vec::with_capacity(rounds);
    let mut last: Option<(usize, usize)> = None;
    let mut robber = None;
    for round in 1..=rounds {
        let (u, v) = cop_policy(round, last, robber);
        if let Some((u0, v0)) = last {
            for (from, to) in [(u0, u), (v0, v)] {
                if to >= 16 || !board.closed_neighbors(from).contains(to) {
                    return Err(EvasionError::IllegalCopMove { from, to });
                }
            }
        }
        let reply = robber_reply_detailed(&EvasionContext::new(u, v, robber)?)?;
        trace.push(TraceRound { round, cops: (u, v), robber: reply.vertex, branch: reply.branch });
        last = Some((u, v));
        robber = Some(reply.vertex);
    }
    Ok(trace)
}

/// Rejects boards other than the Shrikhande complement.
pub fn check_board(g: &Graph) -> Result<(), EvasionError> {
    if g == board() {
        Ok(())
    } else {
        Err(EvasionError::WrongBoard)
    }
}

/// The cop vertices a robber at `w` must avoid on the board.
pub fn danger_zone(u: usize, v: usize) -> VertexSet {
    board().closed_neighbors(u) | board().closed_neighbors(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(a: i64, b: i64) -> usize {
        ShrikhandeVertex::new(a, b).index()
    }

    #[test]
    fn opening_replies() {
        let stacked = EvasionContext::new(0, 0, None).unwrap();
        assert_eq!(robber_reply(&stacked).unwrap(), sv(0, 1));
        let ctx = EvasionContext::new(sv(0, 0), sv(1, 0), None).unwrap();
        assert_eq!(ctx.common, Some((sv(0, 3), sv(1, 1))));
        assert_eq!(robber_reply(&ctx).unwrap(), sv(0, 3));
    }

    #[test]
    fn stay_when_no_cop_is_adjacent() {
        // (0,1) is H-adjacent to (0,0) and (1,1), so not adjacent on the board
        let ctx = EvasionContext::new(sv(0, 0), sv(1, 1), Some(sv(0, 1))).unwrap();
        assert_eq!(robber_reply_detailed(&ctx).unwrap(), Reply { vertex: sv(0, 1), branch: ReplyBranch::Stay });
    }

    #[test]
    fn stacked_dodge_picks_smallest_candidate() {
        // cops stacked on (0,0); robber at (2,2), which is board-adjacent to (0,0)
        let ctx = EvasionContext::new(0, 0, Some(sv(2, 2))).unwrap();
        let r = robber_reply_detailed(&ctx).unwrap();
        assert_eq!(r.branch, ReplyBranch::StackedDodge);
        let b = board();
        let cands = b.neighbors(sv(2, 2)) - b.closed_neighbors(0);
        assert_eq!(cands.len(), 4);
        assert_eq!(Some(r.vertex), cands.min());
    }

    #[test]
    fn inconsistent_contexts() {
        assert_eq!(EvasionContext::new(16, 0, None), Err(EvasionError::VertexRange(16)));
        assert_eq!(EvasionContext::new(3, 4, Some(3)), Err(EvasionError::AlreadyCaught { robber: 3 }));
        assert_eq!(check_board(&named::petersen()), Err(EvasionError::WrongBoard));
        assert!(check_board(&named::shrikhande_complement()).is_ok());
    }

    #[test]
    fn play_rejects_illegal_cop_moves() {
        // (0,0) to (0,1) is an H-edge, hence not a board edge
        let err = play(2, |round, _, _| if round == 1 { (0, 0) } else { (sv(0, 1), 0) }).unwrap_err();
        assert_eq!(err, EvasionError::IllegalCopMove { from: 0, to: sv(0, 1) });
    }

    #[test]
    fn chasing_cops_never_catch() {
        // cops step onto the robber's board-neighbourhood whenever they can
        let b = board();
        let trace = play(50, |_, last, robber| match (last, robber) {
            (Some((u, v)), Some(r)) => {
                let step = |c: usize| (b.closed_neighbors(c) & b.closed_neighbors(r)).min().unwrap_or(c);
                (step(u), step(v))
            }
            _ => (0, 5),
        })
        .unwrap();
        assert_eq!(trace.len(), 50);
        for t in &trace {
            assert!(!danger_zone(t.cops.0, t.cops.1).contains(t.robber));
        }
    }
}
