//! Streaming filter pipelines over graph families.
//!
//! A pipeline is an ordered list of stage predicates; each graph flows through
//! the stages until one rejects it. Work is spread over graphs (never within
//! one graph) and per-stage counters are merged by addition, so the counts do
//! not depend on scheduling.

use std::fmt;
use std::io::BufRead;
use std::time::Instant;

use log::{info, warn};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{self, GameError};
use crate::graph::{enumerate_graphs, write_graph6, Graph, Graph6Reader, GraphError};
use crate::patterns::{self, Obstruction, PatternSpec};

const BATCH: usize = 4096;
/// Malformed line numbers kept in a report.
const MAX_MALFORMED_LINES: usize = 100;

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("pipeline has no stages")]
    NoStages,
    #[error("family is empty")]
    EmptyFamily,
    #[error("family member {0} is disconnected")]
    Disconnected(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

/// A stage predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Connected,
    MinDegreeAtLeast(usize),
    MaxDegreeAtMost(usize),
    PatternFree(Obstruction),
    Contains(Obstruction),
    DominationEquals(usize),
    CopNumberEquals(usize),
    CopNumberAtMost(usize),
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Connected => write!(f, "connected"),
            Predicate::MinDegreeAtLeast(d) => write!(f, "min_degree>={d}"),
            Predicate::MaxDegreeAtMost(d) => write!(f, "max_degree<={d}"),
            Predicate::PatternFree(p) => write!(f, "{p}-free"),
            Predicate::Contains(p) => write!(f, "contains {p}"),
            Predicate::DominationEquals(d) => write!(f, "domination={d}"),
            Predicate::CopNumberEquals(c) => write!(f, "cop_number={c}"),
            Predicate::CopNumberAtMost(c) => write!(f, "cop_number<={c}"),
        }
    }
}

/// `k` cops win, with `k >= n` always winning on connected graphs.
fn cops_win_clamped(g: &Graph, k: usize) -> Result<bool, GameError> {
    if k >= g.n() {
        return Ok(true);
    }
    game::cops_win(g, k)
}

impl Predicate {
    pub fn eval(&self, g: &Graph) -> Result<bool, GameError> {
        Ok(match self {
            Predicate::Connected => g.is_connected(),
            Predicate::MinDegreeAtLeast(d) => g.min_degree() >= *d,
            Predicate::MaxDegreeAtMost(d) => g.max_degree() <= *d,
            Predicate::PatternFree(p) => p.find(g).is_none(),
            Predicate::Contains(p) => p.find(g).is_some(),
            Predicate::DominationEquals(d) => {
                *d >= 1 && game::has_dominating_set(g, *d) && !game::has_dominating_set(g, d - 1)
            }
            Predicate::CopNumberEquals(c) => {
                g.is_connected() && *c >= 1 && cops_win_clamped(g, *c)? && (*c == 1 || !cops_win_clamped(g, c - 1)?)
            }
            Predicate::CopNumberAtMost(c) => g.is_connected() && *c >= 1 && cops_win_clamped(g, *c)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub predicate: Predicate,
}

impl StageSpec {
    pub fn new(predicate: Predicate) -> Self {
        StageSpec { name: None, predicate }
    }

    pub fn named(name: &str, predicate: Predicate) -> Self {
        StageSpec { name: Some(name.to_string()), predicate }
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.predicate.to_string())
    }
}

/// Where graphs come from.
pub enum Source {
    /// Built-in enumeration of one graph per isomorphism class.
    Enumerate {
        n: usize,
        connected_only: bool,
    },
    /// graph6 records, one per line.
    Graph6(Box<dyn BufRead + Send>),
    Graphs(Vec<Graph>),
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Enumerate { n, connected_only: true } => format!("enumerate n={n} connected"),
            Source::Enumerate { n, .. } => format!("enumerate n={n}"),
            Source::Graph6(_) => "graph6 stream".to_string(),
            Source::Graphs(v) => format!("{} in-memory graphs", v.len()),
        }
    }

    /// Feeds `(line, record)` batches to `sink`; in-memory sources number
    /// graphs from 1.
    fn batches<F>(self, mut sink: F) -> Result<(), SurveyError>
    where
        F: FnMut(Vec<(usize, Result<Graph, String>)>) -> Result<(), SurveyError>,
    {
        let in_memory = |graphs: Vec<Graph>, sink: &mut F| -> Result<(), SurveyError> {
            let items: Vec<_> = graphs.into_iter().enumerate().map(|(i, g)| (i + 1, Ok(g))).collect();
            for chunk in items.chunks(BATCH) {
                sink(chunk.to_vec())?;
            }
            Ok(())
        };
        match self {
            Source::Enumerate { n, connected_only } => in_memory(enumerate_graphs(n, connected_only)?, &mut sink),
            Source::Graphs(v) => in_memory(v, &mut sink),
            Source::Graph6(reader) => {
                let mut batch = Vec::with_capacity(BATCH);
                for (line, rec) in Graph6Reader::new(reader) {
                    batch.push((line, rec.map_err(|e| e.to_string())));
                    if batch.len() == BATCH {
                        sink(std::mem::take(&mut batch))?;
                    }
                }
                if !batch.is_empty() {
                    sink(batch)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub max_witnesses: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { jobs: None, max_witnesses: 1000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StageReport {
    pub name: String,
    pub predicate: String,
    pub input: u64,
    pub output: u64,
    /// summed worker time spent evaluating this stage
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyReport {
    pub source: String,
    pub records: u64,
    pub malformed: u64,
    pub malformed_lines: Vec<usize>,
    /// graphs dropped because a solver refused them (state cap)
    pub solver_errors: u64,
    pub stages: Vec<StageReport>,
    /// graph6 of the survivors of the last stage, sorted, capped
    pub witnesses: Vec<String>,
    pub witnesses_truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<CampaignLedger>,
}

impl SurveyReport {
    /// Stage outputs never exceed inputs and each stage consumes the previous output.
    pub fn counts_monotone(&self) -> bool {
        self.stages.iter().all(|s| s.output <= s.input) && self.stages.windows(2).all(|w| w[1].input == w[0].output)
    }

    pub fn stage(&self, name: &str) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.name == name)
    }
}

#[derive(Default, Clone)]
struct Tally {
    records: u64,
    malformed: u64,
    malformed_lines: Vec<usize>,
    solver_errors: u64,
    input: Vec<u64>,
    output: Vec<u64>,
    nanos: Vec<u128>,
    survivors: Vec<String>,
}

impl Tally {
    fn new(stages: usize) -> Self {
        Tally { input: vec![0; stages], output: vec![0; stages], nanos: vec![0; stages], ..Default::default() }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.records += other.records;
        self.malformed += other.malformed;
        self.malformed_lines.extend(other.malformed_lines);
        self.solver_errors += other.solver_errors;
        for i in 0..self.input.len() {
            self.input[i] += other.input[i];
            self.output[i] += other.output[i];
            self.nanos[i] += other.nanos[i];
        }
        self.survivors.extend(other.survivors);
        self
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, SurveyError> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| SurveyError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn process(stages: &[StageSpec], line: usize, rec: &Result<Graph, String>) -> Tally {
    let mut t = Tally::new(stages.len());
    t.records = 1;
    let g = match rec {
        Ok(g) => g,
        Err(e) => {
            warn!("skipping malformed record: {e}");
            t.malformed = 1;
            t.malformed_lines.push(line);
            return t;
        }
    };
    for (i, stage) in stages.iter().enumerate() {
        t.input[i] += 1;
        let start = Instant::now();
        let verdict = stage.predicate.eval(g);
        t.nanos[i] += start.elapsed().as_nanos();
        match verdict {
            Ok(true) => t.output[i] += 1,
            Ok(false) => return t,
            Err(e) => {
                warn!("line {line}: stage {} failed: {e}", stage.label());
                t.solver_errors += 1;
                return t;
            }
        }
    }
    t.survivors.push(write_graph6(g));
    t
}

/// Runs every graph of `source` through `stages` in order.
pub fn run_pipeline(
    source: Source,
    stages: &[StageSpec],
    options: &PipelineOptions,
) -> Result<SurveyReport, SurveyError> {
    if stages.is_empty() {
        return Err(SurveyError::NoStages);
    }
    let description = source.describe();
    let mut total = Tally::new(stages.len());
    source.batches(|batch| {
        let part = with_pool(options.jobs, || {
            batch
                .par_iter()
                .map(|(line, rec)| process(stages, *line, rec))
                .reduce(|| Tally::new(stages.len()), Tally::merge)
        })?;
        total = std::mem::take(&mut total).merge(part);
        Ok(())
    })?;
    info!("pipeline over {description}: {} records", total.records);

    total.survivors.sort();
    let truncated = total.survivors.len() > options.max_witnesses;
    total.survivors.truncate(options.max_witnesses);
    total.malformed_lines.sort_unstable();
    total.malformed_lines.truncate(MAX_MALFORMED_LINES);
    Ok(SurveyReport {
        source: description,
        records: total.records,
        malformed: total.malformed,
        malformed_lines: total.malformed_lines,
        solver_errors: total.solver_errors,
        stages: stages
            .iter()
            .enumerate()
            .map(|(i, s)| StageReport {
                name: s.label(),
                predicate: s.predicate.to_string(),
                input: total.input[i],
                output: total.output[i],
                seconds: total.nanos[i] as f64 * 1e-9,
            })
            .collect(),
        witnesses: total.survivors,
        witnesses_truncated: truncated,
        ledger: None,
    })
}

// ---------------------------------------------------------------------------
// the n = 12 campaign

/// Counters of the twelve-vertex campaign. Every count after the degree
/// tiers is taken inside the minimum-degree-3 tier.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CampaignLedger {
    /// records with n != 12, max degree > 5 or disconnected
    pub off_family: u64,
    /// disconnected records, excluded from every other counter
    pub disconnected: u64,
    pub min_degree_at_least_1: u64,
    pub min_degree_at_least_2: u64,
    pub min_degree_at_least_3: u64,
    pub four_k1_free: u64,
    pub domination_three: u64,
    /// (P5, 4K1)-free with domination number 3
    pub p5_free: u64,
    pub p5_free_witnesses: Vec<String>,
    pub with_c7: u64,
    pub c7_free_with_c6: u64,
    pub c7_c6_free_with_p5: u64,
    /// domination number 3 and two cops lose
    pub cop_number_three: u64,
    pub cop_number_three_witnesses: Vec<String>,
}

/// Published values for the twelve-vertex campaign, in ledger order.
pub const PUBLISHED_LEDGER: [(&str, u64); 11] = [
    ("min_degree_at_least_1", 471_142_472),
    ("min_degree_at_least_2", 333_204_830),
    ("min_degree_at_least_3", 96_689_615),
    ("four_k1_free", 31_155),
    ("domination_three", 24_455),
    ("p5_free", 1),
    ("with_c7", 10_067),
    ("c7_free_with_c6", 12_021),
    ("c7_c6_free_with_p5", 2_366),
    ("cop_number_three", 0),
    ("off_family", 0),
];

impl CampaignLedger {
    pub fn get(&self, name: &str) -> Option<u64> {
        Some(match name {
            "off_family" => self.off_family,
            "disconnected" => self.disconnected,
            "min_degree_at_least_1" => self.min_degree_at_least_1,
            "min_degree_at_least_2" => self.min_degree_at_least_2,
            "min_degree_at_least_3" => self.min_degree_at_least_3,
            "four_k1_free" => self.four_k1_free,
            "domination_three" => self.domination_three,
            "p5_free" => self.p5_free,
            "with_c7" => self.with_c7,
            "c7_free_with_c6" => self.c7_free_with_c6,
            "c7_c6_free_with_p5" => self.c7_c6_free_with_p5,
            "cop_number_three" => self.cop_number_three,
            _ => return None,
        })
    }

    /// `(name, published, observed)` for every entry that differs.
    pub fn mismatches(&self) -> Vec<(&'static str, u64, u64)> {
        PUBLISHED_LEDGER
            .iter()
            .filter_map(|&(name, want)| {
                let got = self.get(name).expect("known entry");
                (got != want).then_some((name, want, got))
            })
            .collect()
    }

    /// Sums two ledgers, e.g. from campaign runs over separate stream shards.
    pub fn merge(mut self, o: CampaignLedger) -> CampaignLedger {
        self.off_family += o.off_family;
        self.disconnected += o.disconnected;
        self.min_degree_at_least_1 += o.min_degree_at_least_1;
        self.min_degree_at_least_2 += o.min_degree_at_least_2;
        self.min_degree_at_least_3 += o.min_degree_at_least_3;
        self.four_k1_free += o.four_k1_free;
        self.domination_three += o.domination_three;
        self.p5_free += o.p5_free;
        self.p5_free_witnesses.extend(o.p5_free_witnesses);
        self.with_c7 += o.with_c7;
        self.c7_free_with_c6 += o.c7_free_with_c6;
        self.c7_c6_free_with_p5 += o.c7_c6_free_with_p5;
        self.cop_number_three += o.cop_number_three;
        self.cop_number_three_witnesses.extend(o.cop_number_three_witnesses);
        self
    }
}

fn classify(g: &Graph) -> Result<CampaignLedger, GameError> {
    let mut l = CampaignLedger::default();
    if !g.is_connected() {
        l.off_family = 1;
        l.disconnected = 1;
        return Ok(l);
    }
    if g.n() != 12 || g.max_degree() > 5 {
        l.off_family = 1;
    }
    let delta = g.min_degree();
    l.min_degree_at_least_1 = (delta >= 1) as u64;
    l.min_degree_at_least_2 = (delta >= 2) as u64;
    if delta < 3 {
        return Ok(l);
    }
    l.min_degree_at_least_3 = 1;
    if patterns::find_independent_set(g, 4).is_some() {
        return Ok(l);
    }
    l.four_k1_free = 1;
    if !(game::has_dominating_set(g, 3) && !game::has_dominating_set(g, 2)) {
        return Ok(l);
    }
    l.domination_three = 1;
    if patterns::contains_induced(g, &PatternSpec::Path(5)).is_none() {
        l.p5_free = 1;
        l.p5_free_witnesses.push(write_graph6(g));
    } else if patterns::find_induced_cycle(g, 7).is_some() {
        l.with_c7 = 1;
    } else if patterns::find_induced_cycle(g, 6).is_some() {
        l.c7_free_with_c6 = 1;
    } else {
        l.c7_c6_free_with_p5 = 1;
    }
    if !game::cops_win(g, 2)? {
        l.cop_number_three = 1;
        l.cop_number_three_witnesses.push(write_graph6(g));
    }
    Ok(l)
}

/// The twelve-vertex campaign: degree tiers, 4K1-freeness, domination number
/// 3, the P5 / C7 / C6 split and the final two-cop check, over a stream of
/// connected 12-vertex graphs with maximum degree at most 5.
pub fn paper_campaign(source: Source, options: &PipelineOptions) -> Result<SurveyReport, SurveyError> {
    let description = source.describe();
    let mut records = 0u64;
    let mut malformed = 0u64;
    let mut malformed_lines = Vec::new();
    let mut solver_errors = 0u64;
    let mut ledger = CampaignLedger::default();
    source.batches(|batch| {
        let part = with_pool(options.jobs, || {
            batch
                .par_iter()
                .map(|(line, rec)| match rec {
                    Ok(g) => match classify(g) {
                        Ok(l) => (l, None, false),
                        Err(e) => {
                            warn!("line {line}: {e}");
                            (CampaignLedger::default(), None, true)
                        }
                    },
                    Err(e) => {
                        warn!("skipping malformed record: {e}");
                        (CampaignLedger::default(), Some(*line), false)
                    }
                })
                .collect::<Vec<_>>()
        })?;
        for (l, bad_line, solver_error) in part {
            records += 1;
            if let Some(line) = bad_line {
                malformed += 1;
                malformed_lines.push(line);
            }
            solver_errors += solver_error as u64;
            ledger = std::mem::take(&mut ledger).merge(l);
        }
        Ok(())
    })?;
    ledger.p5_free_witnesses.sort();
    ledger.cop_number_three_witnesses.sort();
    malformed_lines.truncate(MAX_MALFORMED_LINES);

    let valid = records - malformed;
    let stage = |name: &str, predicate: &str, input: u64, output: u64| StageReport {
        name: name.to_string(),
        predicate: predicate.to_string(),
        input,
        output,
        seconds: 0.0,
    };
    let l = &ledger;
    let gamma3 = l.domination_three;
    let p5 = gamma3 - l.p5_free;
    let stages = vec![
        stage("min_degree_at_least_1", "min_degree>=1", valid - l.disconnected, l.min_degree_at_least_1),
        stage("min_degree_at_least_2", "min_degree>=2", l.min_degree_at_least_1, l.min_degree_at_least_2),
        stage("min_degree_at_least_3", "min_degree>=3", l.min_degree_at_least_2, l.min_degree_at_least_3),
        stage("four_k1_free", "4K1-free", l.min_degree_at_least_3, l.four_k1_free),
        stage("domination_three", "domination=3", l.four_k1_free, gamma3),
        stage("p5_free", "P5-free", gamma3, l.p5_free),
        stage("with_c7", "contains C7", p5, l.with_c7),
        stage("c7_free_with_c6", "C7-free, contains C6", p5 - l.with_c7, l.c7_free_with_c6),
        stage(
            "c7_c6_free_with_p5",
            "C7-free, C6-free, contains P5",
            p5 - l.with_c7 - l.c7_free_with_c6,
            l.c7_c6_free_with_p5,
        ),
        stage("cop_number_three", "cop_number=3", gamma3, l.cop_number_three),
    ];
    let witnesses = ledger.p5_free_witnesses.iter().chain(&ledger.cop_number_three_witnesses).cloned().collect();
    Ok(SurveyReport {
        source: description,
        records,
        malformed,
        malformed_lines,
        solver_errors,
        stages,
        witnesses,
        witnesses_truncated: false,
        ledger: Some(ledger),
    })
}

// ---------------------------------------------------------------------------
// threshold degrees

/// Note attached to every lower-threshold answer.
pub const LOWER_THRESHOLD_NOTE: &str = "lower threshold reported as the minimum degree over all \
    target-attaining members; the minimality-over-order clause of the definition is ambiguous and \
    is not applied";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub members: usize,
    pub target_cop_number: usize,
    pub attaining: usize,
    /// largest k such that every member with max degree >= n - k stays below
    /// the target, given a target-attaining member at max degree n - k - 1
    pub upper_threshold: Option<usize>,
    pub upper_witness: Option<String>,
    pub lower_threshold: Option<usize>,
    pub lower_witness: Option<String>,
    pub note: &'static str,
}

fn cop_numbers(family: &[Graph]) -> Result<Vec<usize>, SurveyError> {
    if family.is_empty() {
        return Err(SurveyError::EmptyFamily);
    }
    if let Some(g) = family.iter().find(|g| !g.is_connected()) {
        return Err(SurveyError::Disconnected(write_graph6(g)));
    }
    family.par_iter().map(|g| game::cop_number_uncapped(g).map_err(SurveyError::from)).collect()
}

/// Empirical upper and lower threshold degrees of a finite family for a
/// target cop number.
pub fn threshold_degrees(family: &[Graph], target_c: usize) -> Result<ThresholdReport, SurveyError> {
    let cs = cop_numbers(family)?;
    let attaining: Vec<&Graph> = family.iter().zip(&cs).filter(|&(_, &c)| c == target_c).map(|(g, _)| g).collect();
    let upper = attaining.iter().min_by_key(|g| g.n() - g.max_degree());
    let lower = attaining.iter().min_by_key(|g| g.min_degree());
    let upper_threshold = upper.map(|g| g.n() - g.max_degree() - 1);
    if let Some(ut) = upper_threshold {
        // by minimality nothing with slack <= ut attains the target
        debug_assert!(family.iter().zip(&cs).all(|(g, &c)| g.n() - g.max_degree() > ut || c != target_c));
    }
    Ok(ThresholdReport {
        members: family.len(),
        target_cop_number: target_c,
        attaining: attaining.len(),
        upper_threshold,
        upper_witness: upper.map(|g| write_graph6(g)),
        lower_threshold: lower.map(|g| g.min_degree()),
        lower_witness: lower.map(|g| write_graph6(g)),
        note: LOWER_THRESHOLD_NOTE,
    })
}

// ---------------------------------------------------------------------------
// structural bound suites

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub statement: String,
    pub applicable: usize,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSuiteReport {
    pub members: usize,
    pub skipped_disconnected: usize,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaSuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.counterexamples.is_empty())
    }

    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Facts {
    g: Graph,
    cop_number: usize,
    gamma: usize,
    four_k1_free: bool,
    free_2k2: bool,
    free_pk1_k2: [bool; 4],
    free_2k1_2k2: bool,
    free_3k1_2k2: bool,
    /// degree-2 vertices u with G - u connected and c(G - u) <= 2
    reducible_degree_two: usize,
}

fn free_of(g: &Graph, p: PatternSpec) -> bool {
    patterns::contains_induced(g, &p).is_none()
}

fn facts(g: &Graph) -> Result<Facts, GameError> {
    let cop_number = game::cop_number_uncapped(g)?;
    let four_k1_free = patterns::find_independent_set(g, 4).is_none();
    let mut reducible_degree_two = 0;
    if four_k1_free {
        for u in (0..g.n()).filter(|&u| g.degree(u) == 2) {
            let rest = g.remove_vertex(u).expect("n >= 3 when a degree-2 vertex exists");
            if rest.is_connected() && cops_win_clamped(&rest, 2)? {
                reducible_degree_two += 1;
            }
        }
    }
    let mut free_pk1_k2 = [false; 4];
    for (p, slot) in free_pk1_k2.iter_mut().enumerate().skip(1) {
        *slot = free_of(g, PatternSpec::MixedPK1QK2(p, 1));
    }
    Ok(Facts {
        g: g.clone(),
        cop_number,
        gamma: game::domination_number(g),
        four_k1_free,
        free_2k2: free_of(g, PatternSpec::InducedMatching(2)),
        free_pk1_k2,
        free_2k1_2k2: free_of(g, PatternSpec::MixedPK1QK2(2, 2)),
        free_3k1_2k2: free_of(g, PatternSpec::MixedPK1QK2(3, 2)),
        reducible_degree_two,
    })
}

type Rule = (&'static str, &'static str, fn(&Facts) -> bool, fn(&Facts) -> bool);

const RULES: [Rule; 11] = [
    ("cop-number-at-most-domination", "c(G) <= domination number", |_| true, |f| f.cop_number <= f.gamma),
    (
        "4k1-free-high-max-degree",
        "4K1-free, max degree >= n - 6 => c <= 2",
        |f| f.four_k1_free && f.g.max_degree() + 6 >= f.g.n(),
        |f| f.cop_number <= 2,
    ),
    (
        "4k1-free-min-degree-1",
        "4K1-free, min degree 1 => c <= 2",
        |f| f.four_k1_free && f.g.min_degree() == 1,
        |f| f.cop_number <= 2,
    ),
    (
        "4k1-free-cut-vertex",
        "4K1-free with a cut vertex => c <= 2",
        |f| f.four_k1_free && !f.g.cut_vertices().is_empty(),
        |f| f.cop_number <= 2,
    ),
    (
        "4k1-free-degree-2-reduction",
        "4K1-free, degree-2 vertex u, c(G - u) <= 2 => c <= 2",
        |f| f.reducible_degree_two > 0,
        |f| f.cop_number <= 2,
    ),
    ("4k1-free-not-three", "4K1-free => c != 3", |f| f.four_k1_free, |f| f.cop_number != 3),
    ("2k2-free", "2K2-free => c <= 2", |f| f.free_2k2, |f| f.cop_number <= 2),
    ("2k1+k2-free", "(2K1+K2)-free => c <= 3", |f| f.free_pk1_k2[2], |f| f.cop_number <= 3),
    ("3k1+k2-free", "(3K1+K2)-free => c <= 4", |f| f.free_pk1_k2[3], |f| f.cop_number <= 4),
    ("2k1+2k2-free", "(2K1+2K2)-free => c <= 4", |f| f.free_2k1_2k2, |f| f.cop_number <= 4),
    ("3k1+2k2-free", "(3K1+2K2)-free => c <= 5", |f| f.free_3k1_2k2, |f| f.cop_number <= 5),
];

/// Checks each structural bound on every connected member: hypothesis via
/// the pattern detectors, conclusion via the exact solver.
pub fn structural_lemma_suite(family: &[Graph]) -> Result<LemmaSuiteReport, SurveyError> {
    let connected: Vec<&Graph> = family.iter().filter(|g| g.is_connected()).collect();
    let all: Vec<Facts> = connected.par_iter().map(|g| facts(g)).collect::<Result<_, _>>()?;
    let checks = RULES
        .iter()
        .map(|&(name, statement, hypothesis, conclusion)| {
            let applicable: Vec<&Facts> = all.iter().filter(|f| hypothesis(f)).collect();
            let mut counterexamples: Vec<String> = applicable
                .iter()
                .filter(|f| !conclusion(f))
                .map(|f| format!("{} (c = {})", write_graph6(&f.g), f.cop_number))
                .collect();
            counterexamples.sort();
            LemmaCheck {
                name: name.to_string(),
                statement: statement.to_string(),
                applicable: applicable.len(),
                counterexamples,
            }
        })
        .collect();
    Ok(LemmaSuiteReport { members: family.len(), skipped_disconnected: family.len() - connected.len(), checks })
}

/// Every connected graph on 1..=max_n vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, true)?);
    }
    Ok(out)
}
