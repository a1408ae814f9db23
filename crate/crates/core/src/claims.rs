//! Desk-scale claim ledger: every check that can be settled in minutes on one
//! machine, each reported as a named pass/fail verdict.

use std::time::Instant;

use serde::Serialize;

use crate::evasion;
use crate::game::{self, cops_win_reference};
use crate::graph::{enumerate_graphs, parse_graph6, write_graph6, Graph};
use crate::named;
use crate::patterns;
use crate::survey::{connected_graphs_up_to, structural_lemma_suite};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl ClaimResult {
    pub fn verdict_line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

fn timed(name: &str, f: impl FnOnce() -> (bool, String)) -> ClaimResult {
    let start = Instant::now();
    let (passed, detail) = f();
    ClaimResult { name: name.to_string(), passed, detail, seconds: start.elapsed().as_secs_f64() }
}

/// Structure checks of a (possibly mutated) Shrikhande graph, one claim per check.
pub fn structure_claims(h: &Graph) -> Vec<ClaimResult> {
    let start = Instant::now();
    let report = named::verify_structure(h);
    let seconds = start.elapsed().as_secs_f64();
    report
        .checks
        .iter()
        .map(|c| ClaimResult {
            name: c.name.to_string(),
            passed: c.passed,
            detail: if c.passed {
                c.description.to_string()
            } else {
                format!("{}; witnesses {:?}", c.description, c.witnesses)
            },
            seconds,
        })
        .collect()
}

/// Cop number and domination number of the complement of `h`.
pub fn cop_number_claims(h: &Graph) -> Vec<ClaimResult> {
    let g = h.complement();
    vec![
        timed("two-cops-lose", || match game::cops_win(&g, 2) {
            Ok(win) => (!win, format!("2 cops win: {win}")),
            Err(e) => (false, e.to_string()),
        }),
        timed("cop-number-three", || match game::cop_number(&g) {
            Ok(c) => (c == 3, format!("cop number {c}")),
            Err(e) => (false, e.to_string()),
        }),
        timed("domination-three", || {
            let gamma = game::domination_number(&g);
            (gamma == 3, format!("domination number {gamma}"))
        }),
    ]
}

pub fn evasion_claim() -> ClaimResult {
    timed("evasion-closure", || {
        let r = evasion::verify_evasion_closure();
        (
            r.passed(),
            format!(
                "{} contexts, {} safe states, {} violations, {} outside region",
                r.contexts_checked,
                r.safe_states,
                r.violations.len(),
                r.outside_region.len()
            ),
        )
    })
}

/// Fast solver against the naive oracle on all connected graphs up to `max_n`.
pub fn oracle_equivalence_claim(max_n: usize) -> ClaimResult {
    timed("oracle-equivalence", || {
        let family = match connected_graphs_up_to(max_n) {
            Ok(f) => f,
            Err(e) => return (false, e.to_string()),
        };
        let mut compared = 0usize;
        let mut mismatches = Vec::new();
        for g in &family {
            for k in 1..=3.min(g.n()) {
                compared += 1;
                match (game::cops_win(g, k), cops_win_reference(g, k)) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (a, b) => mismatches.push(format!("{} k={k}: {a:?} vs {b:?}", write_graph6(g))),
                }
            }
        }
        (mismatches.is_empty(), format!("{compared} instances, mismatches {mismatches:?}"))
    })
}

pub fn domination_bound_claim(max_n: usize) -> ClaimResult {
    timed("cop-number-at-most-domination", || {
        let family = match connected_graphs_up_to(max_n) {
            Ok(f) => f,
            Err(e) => return (false, e.to_string()),
        };
        let mut bad = Vec::new();
        for g in &family {
            match game::cop_number_uncapped(g) {
                Ok(c) if c <= game::domination_number(g) => {}
                other => bad.push(format!("{} {other:?}", write_graph6(g))),
            }
        }
        (bad.is_empty(), format!("{} graphs, counterexamples {bad:?}", family.len()))
    })
}

/// One claim per structural bound over all connected graphs up to `max_n`.
pub fn bound_suite_claims(max_n: usize) -> Vec<ClaimResult> {
    let start = Instant::now();
    let report = connected_graphs_up_to(max_n)
        .map_err(|e| e.to_string())
        .and_then(|f| structural_lemma_suite(&f).map_err(|e| e.to_string()));
    let seconds = start.elapsed().as_secs_f64();
    match report {
        Ok(r) => r
            .checks
            .into_iter()
            .filter(|c| c.name != "cop-number-at-most-domination")
            .map(|c| ClaimResult {
                passed: c.counterexamples.is_empty(),
                detail: format!(
                    "{}: {} applicable, counterexamples {:?}",
                    c.statement, c.applicable, c.counterexamples
                ),
                name: c.name,
                seconds,
            })
            .collect(),
        Err(e) => vec![ClaimResult { name: "bound-suites".into(), passed: false, detail: e, seconds }],
    }
}

pub fn enumeration_claim() -> ClaimResult {
    timed("graph6-enumeration", || {
        let all4 = enumerate_graphs(4, false).map(|v| v.len());
        let conn7 = enumerate_graphs(7, true).map(|v| v.len());
        let roundtrip = (1..=7).all(|n| {
            enumerate_graphs(n.min(6), false)
                .map(|v| v.iter().all(|g| parse_graph6(&write_graph6(g)).as_ref() == Ok(g)))
                .unwrap_or(false)
        });
        let ok = all4 == Ok(11) && conn7 == Ok(853) && roundtrip;
        (ok, format!("n=4: {all4:?} classes, n=7 connected: {conn7:?} classes, round-trip {roundtrip}"))
    })
}

pub fn hole_claim(h: &Graph) -> ClaimResult {
    timed("complement-no-long-hole", || {
        let found = patterns::has_long_induced_cycle(&h.complement(), 6);
        (found.is_none(), format!("induced cycle of length >= 6: {found:?}"))
    })
}

/// The full desk-scale ledger, with `h` standing in for the Shrikhande graph.
pub fn verify_all(h: &Graph) -> Vec<ClaimResult> {
    let mut out = structure_claims(h);
    out.extend(cop_number_claims(h));
    out.push(evasion_claim());
    out.push(oracle_equivalence_claim(6));
    out.push(domination_bound_claim(7));
    out.extend(bound_suite_claims(7));
    out.push(enumeration_claim());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_claims_name_the_failing_check() {
        let mut rows = named::shrikhande().rows().to_vec();
        // drop edge 0-1
        rows[0] &= !(1 << 1);
        rows[1] &= !1;
        let h = Graph::from_rows(rows).unwrap();
        let claims = structure_claims(&h);
        let failed: Vec<_> = claims.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&named::CHECK_COMMON_NEIGHBORS), "{failed:?}");
        assert!(structure_claims(&named::shrikhande()).iter().all(|c| c.passed));
    }

    #[test]
    fn small_claims_pass() {
        assert!(oracle_equivalence_claim(4).passed);
        assert!(domination_bound_claim(5).passed);
        assert!(bound_suite_claims(5).iter().all(|c| c.passed));
        assert!(hole_claim(&named::shrikhande()).passed);
    }
}
