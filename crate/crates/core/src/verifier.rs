//! Statement-level verification of connectivity lemmas.
//!
//! Each suite sweeps the quantifiers of one lemma over a matroid:
//! exhaustively when the ground set has at most 8 elements, by seeded
//! sampling (at least 1000 instantiations, seed recorded in the report)
//! above that. Suites whose hypotheses are rare enumerate hypothesis
//! instances directly instead of sampling blind. A run with zero hypothesis
//! instances is a vacuous pass and says so in its stats; it is never a
//! silent pass.
//!
//! Every failed case carries a certificate whose ranks and λ values can be
//! recomputed from the matroid alone; `Certificate::revalidate` does exactly
//! that.

use std::cell::OnceCell;
use std::fmt;

use crate::catalog::CatalogEntry;
use crate::connectivity::{
    self, bixby_verdict, contraction_blocked, maximal_segments, normalize_vertical,
    vertical_3_partitions_through, VerticalPartition,
};
use crate::families;
use crate::matroid::{Matroid, RankTable};
use crate::rng::SplitMix64;
use crate::set::{subsets_of, subsets_of_size, ElementSet};
use crate::Error;

const EXHAUSTIVE_LIMIT: usize = 8;
const SAMPLE_TARGET: u64 = 1000;
const SAMPLE_TRY_CAP: u64 = 20_000;
const CERTIFICATE_CAP: usize = 16;

// ---------------------------------------------------------------------------
// report plumbing
// ---------------------------------------------------------------------------

/// Lemma suites by id; the id strings are what the CLI accepts for
/// `--which`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaId {
    L2_1,
    L2_2,
    L2_3,
    L2_4,
    L2_5,
    L2_6,
    L2_8,
    L2_9,
    L2_10,
    L2_11,
    L2_12,
    L2_13,
    L3_1,
    L3_2,
    L3_3,
    L3_4,
    L3_6,
    L3_7,
    L3_8,
}

impl LemmaId {
    pub const ALL: [LemmaId; 19] = [
        LemmaId::L2_1,
        LemmaId::L2_2,
        LemmaId::L2_3,
        LemmaId::L2_4,
        LemmaId::L2_5,
        LemmaId::L2_6,
        LemmaId::L2_8,
        LemmaId::L2_9,
        LemmaId::L2_10,
        LemmaId::L2_11,
        LemmaId::L2_12,
        LemmaId::L2_13,
        LemmaId::L3_1,
        LemmaId::L3_2,
        LemmaId::L3_3,
        LemmaId::L3_4,
        LemmaId::L3_6,
        LemmaId::L3_7,
        LemmaId::L3_8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            LemmaId::L2_1 => "2.1",
            LemmaId::L2_2 => "2.2",
            LemmaId::L2_3 => "2.3",
            LemmaId::L2_4 => "2.4",
            LemmaId::L2_5 => "2.5",
            LemmaId::L2_6 => "2.6",
            LemmaId::L2_8 => "2.8",
            LemmaId::L2_9 => "2.9",
            LemmaId::L2_10 => "2.10",
            LemmaId::L2_11 => "2.11",
            LemmaId::L2_12 => "2.12",
            LemmaId::L2_13 => "2.13",
            LemmaId::L3_1 => "3.1",
            LemmaId::L3_2 => "3.2",
            LemmaId::L3_3 => "3.3",
            LemmaId::L3_4 => "3.4",
            LemmaId::L3_6 => "3.6",
            LemmaId::L3_7 => "3.7",
            LemmaId::L3_8 => "3.8",
        }
    }

    pub fn parse(s: &str) -> Result<LemmaId, Error> {
        LemmaId::ALL
            .iter()
            .copied()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::UnknownLemma(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckId {
    MainTheorem,
    VerticalTheorem,
    Lemma(LemmaId),
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::MainTheorem => write!(f, "main_theorem"),
            CheckId::VerticalTheorem => write!(f, "vertical_theorem"),
            CheckId::Lemma(LemmaId::L3_1) => write!(f, "size_lemma"),
            CheckId::Lemma(id) => write!(f, "lemma_{}", id.as_str()),
        }
    }
}

/// A recomputable quantity cited by a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Rank(String),
    Lambda(String),
    LocalConn(String, String),
    Cardinality(String),
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Rank(s) => write!(f, "rank({s})"),
            Quantity::Lambda(s) => write!(f, "lambda({s})"),
            Quantity::LocalConn(a, b) => write!(f, "conn({a},{b})"),
            Quantity::Cardinality(s) => write!(f, "size({s})"),
        }
    }
}

/// Witness data for one failed case: named sets and elements, plus the rank
/// and λ values whose recomputation reproduces the violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub note: String,
    pub sets: Vec<(String, ElementSet)>,
    pub elements: Vec<(String, usize)>,
    pub values: Vec<(Quantity, i64)>,
}

impl Certificate {
    pub fn new(note: impl Into<String>) -> Certificate {
        Certificate {
            note: note.into(),
            sets: Vec::new(),
            elements: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn set(mut self, name: &str, s: ElementSet) -> Certificate {
        self.sets.push((name.to_string(), s));
        self
    }

    pub fn element(mut self, name: &str, e: usize) -> Certificate {
        self.elements.push((name.to_string(), e));
        self
    }

    pub fn rank(mut self, of: &str, value: usize) -> Certificate {
        self.values
            .push((Quantity::Rank(of.to_string()), value as i64));
        self
    }

    pub fn lambda(mut self, of: &str, value: usize) -> Certificate {
        self.values
            .push((Quantity::Lambda(of.to_string()), value as i64));
        self
    }

    pub fn local_conn(mut self, a: &str, b: &str, value: usize) -> Certificate {
        self.values.push((
            Quantity::LocalConn(a.to_string(), b.to_string()),
            value as i64,
        ));
        self
    }

    pub fn cardinality(mut self, of: &str, value: usize) -> Certificate {
        self.values
            .push((Quantity::Cardinality(of.to_string()), value as i64));
        self
    }

    fn lookup(&self, name: &str) -> Option<ElementSet> {
        self.sets.iter().find(|(n, _)| n == name).map(|&(_, s)| s)
    }

    /// Recompute every cited quantity from the matroid and compare.
    pub fn revalidate(&self, m: &Matroid) -> bool {
        for (q, expected) in &self.values {
            let actual = match q {
                Quantity::Rank(s) => match self.lookup(s) {
                    Some(a) => m.rank(a) as i64,
                    None => return false,
                },
                Quantity::Lambda(s) => match self.lookup(s) {
                    Some(a) => connectivity::lambda(m, a) as i64,
                    None => return false,
                },
                Quantity::LocalConn(a, b) => match (self.lookup(a), self.lookup(b)) {
                    (Some(a), Some(b)) => connectivity::local_connectivity(m, a, b) as i64,
                    _ => return false,
                },
                Quantity::Cardinality(s) => match self.lookup(s) {
                    Some(a) => a.len() as i64,
                    None => return false,
                },
            };
            if actual != *expected {
                return false;
            }
        }
        true
    }
}

/// Outcome of one check on one matroid.
#[derive(Clone, Debug)]
pub struct VerdictReport {
    pub check: CheckId,
    pub subject: String,
    pub passed: bool,
    /// Hypothesis-satisfying instantiations whose conclusion was verified.
    pub cases: u64,
    /// Instantiations examined whose hypothesis did not apply.
    pub vacuous: u64,
    /// Present exactly when seeded sampling was used.
    pub seed: Option<u64>,
    /// Extra deterministic key/value details.
    pub info: Vec<(String, String)>,
    pub certificates: Vec<Certificate>,
}

impl VerdictReport {
    fn new(check: CheckId, subject: &str) -> VerdictReport {
        VerdictReport {
            check,
            subject: subject.to_string(),
            passed: true,
            cases: 0,
            vacuous: 0,
            seed: None,
            info: Vec::new(),
            certificates: Vec::new(),
        }
    }

    fn fail(&mut self, cert: Certificate) {
        self.passed = false;
        if self.certificates.len() < CERTIFICATE_CAP {
            self.certificates.push(cert);
        }
    }

    fn info(&mut self, key: &str, value: impl ToString) {
        self.info.push((key.to_string(), value.to_string()));
    }

    /// One REPORT v1 block: a header line, then indented detail lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "check {} subject {} passed {} cases {} vacuous {}\n",
            self.check, self.subject, self.passed, self.cases, self.vacuous
        );
        if let Some(seed) = self.seed {
            out.push_str(&format!("  seed {seed}\n"));
        }
        for (k, v) in &self.info {
            out.push_str(&format!("  info {k} {v}\n"));
        }
        for c in &self.certificates {
            out.push_str(&format!("  cert {}\n", c.note));
            for (name, s) in &c.sets {
                let ids: Vec<String> = s.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("    set {name} {}\n", ids.join(" ")));
            }
            for (name, e) in &c.elements {
                out.push_str(&format!("    elem {name} {e}\n"));
            }
            for (q, v) in &c.values {
                out.push_str(&format!("    value {q} {v}\n"));
            }
        }
        out
    }

    /// One-line machine-readable variant.
    pub fn to_record(&self) -> String {
        fn esc(s: &str) -> String {
            s.replace('\\', "\\\\").replace('"', "\\\"")
        }
        let mut out = format!(
            "{{\"check\":\"{}\",\"subject\":\"{}\",\"passed\":{},\"cases\":{},\"vacuous\":{}",
            self.check,
            esc(&self.subject),
            self.passed,
            self.cases,
            self.vacuous
        );
        if let Some(seed) = self.seed {
            out.push_str(&format!(",\"seed\":{seed}"));
        }
        if !self.info.is_empty() {
            let items: Vec<String> = self
                .info
                .iter()
                .map(|(k, v)| format!("\"{}\":\"{}\"", esc(k), esc(v)))
                .collect();
            out.push_str(&format!(",\"info\":{{{}}}", items.join(",")));
        }
        if !self.certificates.is_empty() {
            let items: Vec<String> = self
                .certificates
                .iter()
                .map(|c| {
                    let sets: Vec<String> = c
                        .sets
                        .iter()
                        .map(|(n, s)| format!("\"{}\":{:?}", esc(n), s.to_vec()))
                        .collect();
                    let values: Vec<String> = c
                        .values
                        .iter()
                        .map(|(q, v)| format!("\"{}\":{v}", esc(&q.to_string())))
                        .collect();
                    format!(
                        "{{\"note\":\"{}\",\"sets\":{{{}}},\"values\":{{{}}}}}",
                        esc(&c.note),
                        sets.join(","),
                        values.join(",")
                    )
                })
                .collect();
            out.push_str(&format!(",\"certificates\":[{}]", items.join(",")));
        }
        out.push('}');
        out
    }
}

// ---------------------------------------------------------------------------
// per-matroid analysis cache
// ---------------------------------------------------------------------------

/// Lazily computed facts about one matroid, shared across suites.
pub struct Analysis<'a> {
    pub matroid: &'a Matroid,
    table: OnceCell<RankTable>,
    three_connected: OnceCell<bool>,
    connected: OnceCell<bool>,
    bad_contract: OnceCell<ElementSet>,
    bad_delete: OnceCell<ElementSet>,
    hyperplanes: OnceCell<Vec<ElementSet>>,
    cohyperplanes: OnceCell<Vec<ElementSet>>,
    vertical: OnceCell<Vec<Vec<VerticalPartition>>>,
    max_cosegments: OnceCell<Vec<ElementSet>>,
}

impl<'a> Analysis<'a> {
    pub fn new(matroid: &'a Matroid) -> Analysis<'a> {
        Analysis {
            matroid,
            table: OnceCell::new(),
            three_connected: OnceCell::new(),
            connected: OnceCell::new(),
            bad_contract: OnceCell::new(),
            bad_delete: OnceCell::new(),
            hyperplanes: OnceCell::new(),
            cohyperplanes: OnceCell::new(),
            vertical: OnceCell::new(),
            max_cosegments: OnceCell::new(),
        }
    }

    pub fn table(&self) -> &RankTable {
        self.table.get_or_init(|| RankTable::build(self.matroid))
    }

    pub fn is_three_connected(&self) -> bool {
        *self
            .three_connected
            .get_or_init(|| connectivity::is_k_connected(self.matroid, 3))
    }

    pub fn is_connected(&self) -> bool {
        *self
            .connected
            .get_or_init(|| connectivity::is_k_connected(self.matroid, 2))
    }

    /// Elements z with si(M/z) not 3-connected.
    pub fn bad_contract(&self) -> ElementSet {
        *self.bad_contract.get_or_init(|| {
            (0..self.matroid.size())
                .filter(|&z| contraction_blocked(self.matroid, z))
                .collect()
        })
    }

    /// Elements y with co(M\y) not 3-connected.
    pub fn bad_delete(&self) -> ElementSet {
        *self.bad_delete.get_or_init(|| {
            (0..self.matroid.size())
                .filter(|&y| {
                    let (del, _) = self
                        .matroid
                        .delete(ElementSet::singleton(y))
                        .expect("single-element deletion");
                    if del.size() == del.full_rank() {
                        return false; // all coloops, cosimplification undefined
                    }
                    let (cod, _) = del.cosimplify().expect("corank checked above");
                    !connectivity::is_k_connected(&cod, 3)
                })
                .collect()
        })
    }

    pub fn hyperplanes(&self) -> &[ElementSet] {
        self.hyperplanes.get_or_init(|| self.matroid.hyperplanes())
    }

    pub fn cohyperplanes(&self) -> &[ElementSet] {
        self.cohyperplanes
            .get_or_init(|| self.matroid.dual().hyperplanes())
    }

    pub fn vertical_through(&self, z: usize) -> &[VerticalPartition] {
        &self.vertical.get_or_init(|| {
            (0..self.matroid.size())
                .map(|z| vertical_3_partitions_through(self.matroid, z))
                .collect()
        })[z]
    }

    pub fn maximal_cosegments(&self) -> &[ElementSet] {
        self.max_cosegments
            .get_or_init(|| maximal_segments(self.matroid, true))
    }

    /// Hyperplanes whose every element has si(M/h) not 3-connected.
    pub fn property_hyperplanes(&self) -> Vec<ElementSet> {
        let bad = self.bad_contract();
        self.hyperplanes()
            .iter()
            .copied()
            .filter(|h| h.is_subset_of(bad) && !h.is_empty())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// the three spec-level checks
// ---------------------------------------------------------------------------

/// Hyperplanes H of a 3-connected matroid with si(M/h) not 3-connected for
/// every h in H, sorted by mask.
pub fn property_hyperplanes(m: &Matroid) -> Result<Vec<ElementSet>, Error> {
    let analysis = Analysis::new(m);
    if !analysis.is_three_connected() {
        return Err(Error::NotThreeConnected);
    }
    Ok(analysis.property_hyperplanes())
}

/// The hyperplane-contranction dichotomy: a 3-connected matroid has a
/// property hyperplane exactly when it belongs to the cographic family.
pub fn check_main_theorem(m: &Matroid, subject: &str) -> Result<VerdictReport, Error> {
    let analysis = Analysis::new(m);
    if !analysis.is_three_connected() {
        return Err(Error::NotThreeConnected);
    }
    Ok(main_theorem_report(&analysis, subject))
}

fn main_theorem_report(analysis: &Analysis<'_>, subject: &str) -> VerdictReport {
    let mut report = VerdictReport::new(CheckId::MainTheorem, subject);
    let property = analysis.property_hyperplanes();
    let witness = families::is_in_p_star(analysis.matroid);
    report.cases = analysis.hyperplanes().len() as u64;
    report.info("property_hyperplanes", property.len());
    match &witness {
        Some(w) => report.info("family_witness_n", w.n),
        None => report.info("family_witness_n", "none"),
    }
    match (property.is_empty(), &witness) {
        (false, None) => {
            let h = property[0];
            report.fail(
                Certificate::new("property hyperplane on a matroid outside the family")
                    .set("H", h)
                    .rank("H", analysis.matroid.rank(h))
                    .cardinality("H", h.len()),
            );
        }
        (true, Some(w)) => {
            let h = w.hyperplane;
            report.fail(
                Certificate::new("family member with no property hyperplane")
                    .set("H", h)
                    .rank("H", analysis.matroid.rank(h))
                    .cardinality("H", h.len()),
            );
        }
        _ => {}
    }
    report
}

/// Every vertical 3-partition (X1, x, X2) must have, on each side, an
/// element whose contraction keeps the simplification 3-connected.
pub fn check_vertical_theorem(m: &Matroid, subject: &str) -> Result<VerdictReport, Error> {
    let analysis = Analysis::new(m);
    if !analysis.is_three_connected() {
        return Err(Error::NotThreeConnected);
    }
    Ok(vertical_theorem_report(&analysis, subject))
}

fn vertical_theorem_report(analysis: &Analysis<'_>, subject: &str) -> VerdictReport {
    let m = analysis.matroid;
    let mut report = VerdictReport::new(CheckId::VerticalTheorem, subject);
    let good = analysis.bad_contract().complement(m.size());
    for z in 0..m.size() {
        for p in analysis.vertical_through(z) {
            report.cases += 1;
            let ok1 = p.x1.intersects(good);
            let ok2 = p.x2.intersects(good);
            if !(ok1 && ok2) {
                // the strong reading (a witness on each side) failed; whether
                // the weak reading survives is recorded for review
                let weak = p.x1.union(p.x2).intersects(good);
                report.fail(
                    Certificate::new(if weak {
                        "strong reading violated (weak reading holds); flag for review"
                    } else {
                        "no contraction witness on either side"
                    })
                    .set("X1", p.x1)
                    .set("X2", p.x2)
                    .element("x", p.x)
                    .rank("X1", p.rank_x1)
                    .rank("X2", p.rank_x2)
                    .lambda("X1", 2),
                );
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// suite machinery
// ---------------------------------------------------------------------------

struct Suite<'a, 'b> {
    analysis: &'b Analysis<'a>,
    report: VerdictReport,
    failures: u64,
}

impl<'a, 'b> Suite<'a, 'b> {
    fn new(analysis: &'b Analysis<'a>, id: LemmaId, subject: &str) -> Suite<'a, 'b> {
        Suite {
            analysis,
            report: VerdictReport::new(CheckId::Lemma(id), subject),
            failures: 0,
        }
    }

    fn m(&self) -> &'a Matroid {
        self.analysis.matroid
    }

    fn t(&self) -> &'b RankTable {
        self.analysis.table()
    }

    fn size(&self) -> usize {
        self.analysis.matroid.size()
    }

    fn exhaustive(&self) -> bool {
        self.size() <= EXHAUSTIVE_LIMIT
    }

    fn case(&mut self, ok: bool, cert: impl FnOnce() -> Certificate) {
        self.report.cases += 1;
        if !ok {
            self.failures += 1;
            let c = cert();
            debug_assert!(c.revalidate(self.analysis.matroid), "stale certificate");
            self.report.fail(c);
        }
    }

    fn vacuous(&mut self) {
        self.report.vacuous += 1;
    }

    fn vacuous_n(&mut self, n: u64) {
        self.report.vacuous += n;
    }

    fn finish(mut self) -> VerdictReport {
        if self.failures > self.report.certificates.len() as u64 {
            self.report.info("failures", self.failures);
        }
        if self.report.cases == 0 {
            self.report.info("hypothesis_instances", "0");
        }
        self.report
    }
}

fn derive_rng(seed: u64, subject: &str, id: LemmaId) -> SplitMix64 {
    SplitMix64::derived(seed, &format!("{subject}/{}", id.as_str()))
}

/// Run one lemma suite against a matroid.
pub fn run_lemma_suite(m: &Matroid, subject: &str, id: LemmaId, seed: u64) -> VerdictReport {
    let analysis = Analysis::new(m);
    run_suite_with(&analysis, subject, id, seed)
}

/// Run every suite, reusing one analysis cache.
pub fn run_all_lemma_suites(m: &Matroid, subject: &str, seed: u64) -> Vec<VerdictReport> {
    let analysis = Analysis::new(m);
    LemmaId::ALL
        .iter()
        .map(|&id| run_suite_with(&analysis, subject, id, seed))
        .collect()
}

fn run_suite_with(analysis: &Analysis<'_>, subject: &str, id: LemmaId, seed: u64) -> VerdictReport {
    let mut suite = Suite::new(analysis, id, subject);
    let rng = derive_rng(seed, subject, id);
    match id {
        LemmaId::L2_1 => suite_uncrossing(&mut suite, rng, seed),
        LemmaId::L2_2 => suite_series_circuit(&mut suite),
        LemmaId::L2_3 => suite_coclosure(&mut suite, rng, seed),
        LemmaId::L2_4 => suite_guts(&mut suite, rng, seed),
        LemmaId::L2_5 => suite_segment_closure(&mut suite, rng, seed),
        LemmaId::L2_6 => suite_cosegment_contraction(&mut suite),
        LemmaId::L2_8 => suite_blocked_contraction_partition(&mut suite),
        LemmaId::L2_9 => suite_normalize(&mut suite),
        LemmaId::L2_10 => suite_bixby(&mut suite),
        LemmaId::L2_11 => suite_exact_three_partition(&mut suite),
        LemmaId::L2_12 => suite_local_conn_monotone(&mut suite, rng, seed),
        LemmaId::L2_13 => suite_local_conn_transfer(&mut suite, rng, seed),
        LemmaId::L3_1 => suite_size_bound(&mut suite),
        LemmaId::L3_2 => suite_segment_cosegment(&mut suite),
        LemmaId::L3_3 => suite_segment_hyperplane(&mut suite),
        LemmaId::L3_4 => suite_minimal_partition(&mut suite),
        LemmaId::L3_6 => suite_partition_meets_cocircuit(&mut suite),
        LemmaId::L3_7 => suite_maximal_cosegment(&mut suite, rng, seed),
        LemmaId::L3_8 => suite_triangle_cohyperplane(&mut suite),
    }
    suite.finish()
}

// --- 2.1: uncrossing ---

fn three_separating_sets(t: &RankTable) -> Vec<ElementSet> {
    (0..1u32 << t.size())
        .map(ElementSet::from_bits)
        .filter(|&a| t.lambda(a) <= 2)
        .collect()
}

fn check_uncrossing_pair(suite: &mut Suite<'_, '_>, x: ElementSet, y: ElementSet) {
    let size = suite.size();
    let t = suite.t();
    let inter = x.intersect(y);
    let union = x.union(y);
    let outside = union.complement(size);
    let mut applied = false;
    let mut ok = true;
    let mut note = "";
    if inter.len() >= 2 {
        applied = true;
        if t.lambda(union) > 2 {
            ok = false;
            note = "union of 3-separators with 2+ shared elements is not 3-separating";
        }
    }
    if outside.len() >= 2 {
        applied = true;
        if t.lambda(inter) > 2 {
            ok = false;
            note = "intersection of 3-separators is not 3-separating";
        }
    }
    if inter.len() == 1 {
        applied = true;
        if t.lambda(union) > 3 {
            ok = false;
            note = "union of 3-separators sharing one element exceeds 4-separation";
        }
    }
    if !applied {
        suite.vacuous();
        return;
    }
    let (lu, li) = (suite.t().lambda(union), suite.t().lambda(inter));
    suite.case(ok, || {
        Certificate::new(note)
            .set("X", x)
            .set("Y", y)
            .set("XuY", union)
            .set("XnY", inter)
            .lambda("XuY", lu)
            .lambda("XnY", li)
    });
}

fn suite_uncrossing(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let sets = three_separating_sets(suite.t());
    if suite.exhaustive() {
        for &x in &sets {
            for &y in &sets {
                check_uncrossing_pair(suite, x, y);
            }
        }
    } else {
        suite.report.seed = Some(seed);
        let n = sets.len() as u64;
        for _ in 0..SAMPLE_TARGET {
            let x = sets[rng.below(n) as usize];
            let y = sets[rng.below(n) as usize];
            check_uncrossing_pair(suite, x, y);
        }
    }
}

// --- 2.2: series class plus closure element is a circuit ---

fn suite_series_circuit(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_connected() {
        return;
    }
    let t = suite.t();
    let classes = suite.m().series_classes();
    for class in classes {
        let around = t.closure(class).minus(class);
        for y in around.iter() {
            let candidate = class.with(y);
            let ok = t.is_circuit(candidate);
            suite.case(ok, || {
                Certificate::new("series class plus closure element is not a circuit")
                    .set("X", class)
                    .element("y", y)
                    .set("Xy", candidate)
                    .rank("Xy", t.rank(candidate))
                    .cardinality("Xy", candidate.len())
            });
        }
    }
}

// --- 2.3: z in cl*(Y) iff z not in cl(X) ---

fn check_coclosure_partition(suite: &mut Suite<'_, '_>, z: usize, x: ElementSet) {
    let size = suite.size();
    let y = x.complement(size).without(z);
    let t = suite.t();
    let in_coclosure = t.in_coclosure(z, y);
    let in_closure = t.in_closure(z, x);
    let ok = in_coclosure == !in_closure;
    suite.case(ok, || {
        Certificate::new("coclosure/closure dichotomy failed")
            .set("X", x)
            .set("Y", y)
            .element("z", z)
            .rank("X", t.rank(x))
            .rank("Y", t.rank(y))
    });
}

fn suite_coclosure(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    let size = suite.size();
    if size < 1 {
        return;
    }
    if suite.exhaustive() {
        for z in 0..size {
            let rest = ElementSet::full(size).without(z);
            for x in subsets_of(rest) {
                check_coclosure_partition(suite, z, x);
            }
        }
    } else {
        suite.report.seed = Some(seed);
        for _ in 0..SAMPLE_TARGET {
            let z = rng.below(size as u64) as usize;
            let x = ElementSet::from_bits(rng.mask(size)).without(z);
            check_coclosure_partition(suite, z, x);
        }
    }
}

// --- 2.4: equal λ forces guts or coguts ---

fn check_guts_partition(suite: &mut Suite<'_, '_>, z: usize, x: ElementSet) {
    let size = suite.size();
    let y = x.complement(size).without(z);
    let t = suite.t();
    if t.lambda(x) != t.lambda(y) {
        suite.vacuous();
        return;
    }
    let guts = t.in_closure(z, x) && t.in_closure(z, y);
    let coguts = t.in_coclosure(z, x) && t.in_coclosure(z, y);
    let (lx, ly) = (t.lambda(x), t.lambda(y));
    suite.case(guts || coguts, || {
        Certificate::new("z is in neither both closures nor both coclosures")
            .set("X", x)
            .set("Y", y)
            .element("z", z)
            .lambda("X", lx)
            .lambda("Y", ly)
    });
}

fn suite_guts(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    let size = suite.size();
    if size < 1 {
        return;
    }
    if suite.exhaustive() {
        for z in 0..size {
            let rest = ElementSet::full(size).without(z);
            for x in subsets_of(rest) {
                check_guts_partition(suite, z, x);
            }
        }
    } else {
        suite.report.seed = Some(seed);
        for _ in 0..SAMPLE_TARGET {
            let z = rng.below(size as u64) as usize;
            let x = ElementSet::from_bits(rng.mask(size)).without(z);
            check_guts_partition(suite, z, x);
        }
    }
}

// --- 2.5: closure points of a 3-separator form a segment ---

fn check_segment_closure(suite: &mut Suite<'_, '_>, a: ElementSet) {
    let t = suite.t();
    if t.lambda(a) > 2 {
        suite.vacuous();
        return;
    }
    let mut applied = false;
    // primal: everything outside A absorbed by cl(A)
    let absorbed = t.closure(a).minus(a);
    if absorbed.len() >= 3 {
        applied = true;
        let ok = subsets_of_size(absorbed, 3).all(|tri| t.is_circuit(tri));
        suite.case(ok, || {
            Certificate::new("closure points of a 3-separator do not form a segment")
                .set("A", a)
                .set("S", absorbed)
                .rank("S", t.rank(absorbed))
                .cardinality("S", absorbed.len())
        });
    }
    // dual: coclosure points form a cosegment
    let coabsorbed = t.coclosure(a).minus(a);
    if coabsorbed.len() >= 3 {
        applied = true;
        let ok = subsets_of_size(coabsorbed, 3).all(|tri| t.is_cocircuit(tri));
        suite.case(ok, || {
            Certificate::new("coclosure points of a 3-separator do not form a cosegment")
                .set("A", a)
                .set("S", coabsorbed)
                .cardinality("S", coabsorbed.len())
        });
    }
    if !applied {
        suite.vacuous();
    }
}

fn suite_segment_closure(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let size = suite.size();
    if suite.exhaustive() {
        for bits in 0..1u32 << size {
            check_segment_closure(suite, ElementSet::from_bits(bits));
        }
    } else {
        suite.report.seed = Some(seed);
        let sets = three_separating_sets(suite.t());
        let n = sets.len() as u64;
        for _ in 0..SAMPLE_TARGET {
            let a = sets[rng.below(n) as usize];
            check_segment_closure(suite, a);
        }
    }
}

// --- 2.6: contracting inside a 4+-cosegment keeps 3-connectivity ---

fn suite_cosegment_contraction(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let cosegments: Vec<ElementSet> = suite
        .analysis
        .maximal_cosegments()
        .iter()
        .copied()
        .filter(|d| d.len() >= 4)
        .collect();
    if cosegments.is_empty() {
        suite.vacuous();
        return;
    }
    for d in cosegments {
        for e in d.iter() {
            let (minor, _) = suite.m().contract(ElementSet::singleton(e)).expect("minor");
            let ok = connectivity::is_k_connected(&minor, 3);
            suite.case(ok, || {
                Certificate::new("contraction inside a large cosegment lost 3-connectivity")
                    .set("D", d)
                    .element("d", e)
                    .cardinality("D", d.len())
            });
        }
    }
}

// --- 2.8: blocked contraction yields a vertical 3-partition ---

fn suite_blocked_contraction_partition(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let bad = suite.analysis.bad_contract();
    for z in 0..suite.size() {
        if !bad.contains(z) {
            suite.vacuous();
            continue;
        }
        let ok = !suite.analysis.vertical_through(z).is_empty();
        suite.case(ok, || {
            Certificate::new("no vertical 3-partition despite blocked contraction").element("z", z)
        });
    }
}

// --- 2.9: normalization is again a vertical 3-partition ---

fn suite_normalize(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    for z in 0..suite.size() {
        for p in suite.analysis.vertical_through(z).to_vec() {
            let n = normalize_vertical(suite.m(), &p);
            let ok = n.is_valid_for(suite.m())
                && suite.m().is_closed(n.x2.with(n.x))
                && normalize_vertical(suite.m(), &n) == n;
            let (r1, r2) = (n.rank_x1, n.rank_x2);
            suite.case(ok, || {
                Certificate::new("normalized partition is not a vertical 3-partition")
                    .set("X1", p.x1)
                    .set("X2", p.x2)
                    .element("x", p.x)
                    .set("N1", n.x1)
                    .set("N2", n.x2)
                    .rank("N1", r1)
                    .rank("N2", r2)
            });
        }
    }
}

// --- 2.10: Bixby ---

fn suite_bixby(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() || suite.size() < 4 {
        return;
    }
    for x in 0..suite.size() {
        let ok = bixby_verdict(suite.m(), x).is_ok();
        suite.case(ok, || {
            Certificate::new("neither co(M\\x) nor si(M/x) is 3-connected").element("x", x)
        });
    }
}

// --- 2.11: exact 3-partitions equalize local connectivity ---

fn suite_exact_three_partition(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let size = suite.size();
    if size < 3 {
        return;
    }
    let full = ElementSet::full(size);
    // canonical: element 0 in X, the smallest leftover in Y
    for x_rest in subsets_of(full.without(0)) {
        let x = x_rest.with(0);
        if x == full {
            continue;
        }
        let rest = full.minus(x);
        let pivot = rest.min_element().unwrap();
        for y_rest in subsets_of(rest.without(pivot)) {
            let y = y_rest.with(pivot);
            let z = rest.minus(y);
            if z.is_empty() {
                continue;
            }
            let t = suite.t();
            if t.lambda(x) != 2 || t.lambda(y) != 2 || t.lambda(z) != 2 {
                suite.vacuous();
                continue;
            }
            let (xy, xz, yz) = (
                t.local_connectivity(x, y),
                t.local_connectivity(x, z),
                t.local_connectivity(y, z),
            );
            suite.case(xy == xz && xz == yz, || {
                Certificate::new("exact 3-partition with unequal local connectivity")
                    .set("X", x)
                    .set("Y", y)
                    .set("Z", z)
                    .local_conn("X", "Y", xy)
                    .local_conn("X", "Z", xz)
                    .local_conn("Y", "Z", yz)
            });
        }
    }
}

// --- 2.12: local connectivity is monotone under subsets ---

fn suite_local_conn_monotone(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    let size = suite.size();
    let t = suite.t();
    if suite.exhaustive() {
        // one-element steps; chains of these reach every nested pair
        for xb in 0..1u32 << size {
            let x = ElementSet::from_bits(xb);
            for yb in 0..1u32 << size {
                let y = ElementSet::from_bits(yb);
                let txy = t.local_connectivity(x, y);
                for e in x.iter() {
                    let smaller = x.without(e);
                    let t_small = t.local_connectivity(smaller, y);
                    suite.case(t_small <= txy, || {
                        Certificate::new("removing an element raised local connectivity")
                            .set("X", x)
                            .set("Xs", smaller)
                            .set("Y", y)
                            .local_conn("X", "Y", txy)
                            .local_conn("Xs", "Y", t_small)
                    });
                }
            }
        }
    }
    // random nested quadruples, run at every size
    suite.report.seed = Some(seed);
    for _ in 0..SAMPLE_TARGET {
        let x = ElementSet::from_bits(rng.mask(size));
        let y = ElementSet::from_bits(rng.mask(size));
        let xp = ElementSet::from_bits(rng.submask(x.bits()));
        let yp = ElementSet::from_bits(rng.submask(y.bits()));
        let big = t.local_connectivity(x, y);
        let small = t.local_connectivity(xp, yp);
        suite.case(small <= big, || {
            Certificate::new("nested pair exceeded enclosing local connectivity")
                .set("X", x)
                .set("Y", y)
                .set("Xp", xp)
                .set("Yp", yp)
                .local_conn("X", "Y", big)
                .local_conn("Xp", "Yp", small)
        });
    }
}

// --- 2.13: equality of local connectivity transfers closure points ---

fn check_conn_transfer(suite: &mut Suite<'_, '_>, x: ElementSet, xp: ElementSet, y: ElementSet) {
    let t = suite.t();
    if t.local_connectivity(xp, y) != t.local_connectivity(x, y) {
        suite.vacuous();
        return;
    }
    let mut any = false;
    for yy in y.iter() {
        if !t.in_closure(yy, x) {
            continue;
        }
        any = true;
        let ok = t.in_closure(yy, xp);
        let (rx, rxp) = (t.rank(x), t.rank(xp));
        suite.case(ok, || {
            Certificate::new("closure point of X escaped cl(X')")
                .set("X", x)
                .set("Xp", xp)
                .set("Y", y)
                .element("y", yy)
                .rank("X", rx)
                .rank("Xp", rxp)
        });
    }
    if !any {
        suite.vacuous();
    }
}

fn suite_local_conn_transfer(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    let size = suite.size();
    if suite.exhaustive() {
        let full = ElementSet::full(size);
        for xb in subsets_of(full) {
            for y in subsets_of(xb.complement(size)) {
                for xp in subsets_of(xb) {
                    check_conn_transfer(suite, xb, xp, y);
                }
            }
        }
    } else {
        suite.report.seed = Some(seed);
        let mut tries = 0;
        let mut cases = 0;
        while cases < SAMPLE_TARGET && tries < SAMPLE_TRY_CAP {
            tries += 1;
            let x = ElementSet::from_bits(rng.mask(size));
            let y = ElementSet::from_bits(rng.mask(size)).minus(x);
            let xp = ElementSet::from_bits(rng.submask(x.bits()));
            let before = suite.report.cases;
            check_conn_transfer(suite, x, xp, y);
            cases += suite.report.cases - before;
        }
    }
}

// --- 3.1: the size bound for property hyperplanes ---

fn suite_size_bound(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let property = suite.analysis.property_hyperplanes();
    let total = suite.analysis.hyperplanes().len() as u64;
    suite.vacuous_n(total - property.len() as u64);
    let size = suite.size();
    for h in property {
        suite.case(size >= 7, || {
            Certificate::new("property hyperplane in a matroid smaller than 7 elements")
                .set("H", h)
                .cardinality("H", h.len())
        });
    }
}

// --- shared geometry for 3.2 / 3.3 ---

/// Instances (A, e): a 3-separation (A, B) with both sides of size >= 3,
/// r(A) = 3, r(A - e) = 2 and at least three elements of A - e outside cl(B).
fn segment_geometry_instances(suite: &Suite<'_, '_>) -> Vec<(ElementSet, usize, usize)> {
    let size = suite.size();
    let t = suite.t();
    let mut out = Vec::new();
    for bits in 0..1u32 << size {
        let a = ElementSet::from_bits(bits);
        let b = a.complement(size);
        if a.len() < 3 || b.len() < 3 || t.lambda(a) > 2 || t.rank(a) != 3 {
            continue;
        }
        let cl_b = t.closure(b);
        for e in a.iter() {
            let rest = a.without(e);
            if t.rank(rest) != 2 {
                continue;
            }
            let outside = rest.minus(cl_b);
            if outside.len() >= 3 {
                out.push((a, e, outside.len()));
            }
        }
    }
    out
}

fn cosegment_candidates_through(suite: &Suite<'_, '_>, e: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for dm in suite.analysis.maximal_cosegments() {
        if !dm.contains(e) {
            continue;
        }
        for rest in subsets_of(dm.without(e)) {
            out.push(rest.with(e));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

// --- 3.2: all-blocked segment geometry forces a cosegment ---

fn suite_segment_cosegment(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let bad = suite.analysis.bad_contract();
    for (a, e, needed) in segment_geometry_instances(suite) {
        if !a.without(e).is_subset_of(bad) {
            suite.vacuous();
            continue;
        }
        let found = cosegment_candidates_through(suite, e)
            .into_iter()
            .any(|d| d.len() > needed && suite.t().lambda(a.union(d)) <= 2);
        suite.case(found, || {
            Certificate::new("no qualifying cosegment through e")
                .set("A", a)
                .element("e", e)
                .rank("A", 3)
                .cardinality("A", a.len())
        });
    }
}

// --- 3.3: a hyperplane over the segment geometry has a good contraction ---

fn suite_segment_hyperplane(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let bad = suite.analysis.bad_contract();
    let hyperplanes = suite.analysis.hyperplanes().to_vec();
    for (a, e, _) in segment_geometry_instances(suite) {
        let rest = a.without(e);
        let mut applicable = false;
        for &h in &hyperplanes {
            if !rest.is_subset_of(h) {
                continue;
            }
            applicable = true;
            let ok = !h.is_subset_of(bad);
            suite.case(ok, || {
                Certificate::new("every hyperplane element has blocked contraction")
                    .set("A", a)
                    .set("H", h)
                    .element("e", e)
                    .cardinality("H", h.len())
            });
        }
        if !applicable {
            suite.vacuous();
        }
    }
}

// --- 3.4: minimality of vertical 3-partitions over a blocked set ---

/// Both orientations of a stored partition.
fn orientations(p: &VerticalPartition) -> [(ElementSet, ElementSet); 2] {
    [(p.x1, p.x2), (p.x2, p.x1)]
}

fn suite_minimal_partition(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let j = suite.analysis.bad_contract();
    if j.is_empty() {
        suite.vacuous();
        return;
    }
    let m = suite.m();
    for x in j.iter() {
        for p in suite.analysis.vertical_through(x).to_vec() {
            for (p1, p2) in orientations(&p) {
                // hypothesis: every partition of a blocked y inside P1 ∪ {x}
                // keeps a blocked element on its P1-contained side
                let members = p1.with(x).intersect(j);
                let mut hypothesis = true;
                'outer: for y in members.iter() {
                    for q in suite.analysis.vertical_through(y) {
                        for (q1, _) in orientations(q) {
                            if q1.is_subset_of(p1) && !q1.intersects(j) {
                                hypothesis = false;
                                break 'outer;
                            }
                        }
                    }
                }
                if !hypothesis {
                    suite.vacuous();
                    continue;
                }
                let mut found = false;
                'search: for z in members.iter() {
                    for s in suite.analysis.vertical_through(z) {
                        for (s1, s2) in orientations(s) {
                            if !s1.is_subset_of(p1) || !s1.intersects(j) {
                                continue;
                            }
                            if !m.is_closed(s2.with(z)) {
                                continue;
                            }
                            // every blocked element inside the new small side
                            // has all its partitions meeting the new big side
                            // on both halves
                            let mut third = true;
                            'third: for jj in s1.intersect(j).iter() {
                                for q in suite.analysis.vertical_through(jj) {
                                    if !q.x1.intersects(s2) || !q.x2.intersects(s2) {
                                        third = false;
                                        break 'third;
                                    }
                                }
                            }
                            if third {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                }
                let (r1, r2) = (p.rank_x1, p.rank_x2);
                suite.case(found, || {
                    Certificate::new("no minimal vertical 3-partition inside X1")
                        .set("X1", p1)
                        .set("X2", p2)
                        .element("x", x)
                        .rank("X1", if p1 == p.x1 { r1 } else { r2 })
                        .rank("X2", if p1 == p.x1 { r2 } else { r1 })
                });
            }
        }
    }
}

// --- 3.6: vertical partitions meet both the hyperplane and its cocircuit ---

fn suite_partition_meets_cocircuit(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let property = suite.analysis.property_hyperplanes();
    if property.is_empty() {
        suite.vacuous();
        return;
    }
    let size = suite.size();
    for h in property {
        let c = h.complement(size);
        for x in h.iter() {
            for p in suite.analysis.vertical_through(x).to_vec() {
                let ok = p.x1.intersects(h)
                    && p.x1.intersects(c)
                    && p.x2.intersects(h)
                    && p.x2.intersects(c);
                suite.case(ok, || {
                    Certificate::new("vertical partition side avoids H or its cocircuit")
                        .set("H", h)
                        .set("C", c)
                        .set("X1", p.x1)
                        .set("X2", p.x2)
                        .element("x", p.x)
                });
            }
        }
    }
}

// --- 3.7: local connectivity pins maximal cosegments ---

fn is_cosegment_with(t: &RankTable, x: ElementSet, extra: usize) -> bool {
    // x is already a cosegment; check the triples brought in by `extra`
    let with = x.with(extra);
    subsets_of_size(x, 2).all(|pair| t.is_cocircuit(pair.with(extra))) && with.len() >= 3
}

fn all_cosegments(suite: &Suite<'_, '_>) -> Vec<ElementSet> {
    let mut out = Vec::new();
    for dm in suite.analysis.maximal_cosegments() {
        for d in subsets_of(*dm) {
            if d.len() >= 2 {
                out.push(d);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn suite_maximal_cosegment(suite: &mut Suite<'_, '_>, mut rng: SplitMix64, seed: u64) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let cosegments = all_cosegments(suite);
    if cosegments.is_empty() {
        suite.vacuous();
        return;
    }
    let size = suite.size();
    let exhaustive = suite.exhaustive();
    if !exhaustive {
        suite.report.seed = Some(seed);
    }
    let per_cosegment = (SAMPLE_TARGET as usize / cosegments.len() + 1).max(64);
    let t = suite.t();
    for x in cosegments {
        let outside = x.complement(size);
        let ys: Vec<ElementSet> = if exhaustive {
            subsets_of(outside).collect()
        } else {
            (0..per_cosegment)
                .map(|_| ElementSet::from_bits(rng.submask(outside.bits())))
                .collect()
        };
        for y in ys {
            if y.is_empty() {
                suite.vacuous();
                continue;
            }
            let mut applied = false;
            for xe in x.iter() {
                if t.local_connectivity(x.without(xe), y) < 1 {
                    continue;
                }
                applied = true;
                // x must be maximal among cosegments avoiding y
                let blocker = outside
                    .minus(y)
                    .iter()
                    .find(|&e| is_cosegment_with(t, x, e));
                suite.case(blocker.is_none(), || {
                    Certificate::new("cosegment extends despite positive local connectivity")
                        .set("X", x)
                        .set("Y", y)
                        .element("x", xe)
                        .element("extension", blocker.unwrap())
                        .local_conn("X", "Y", t.local_connectivity(x, y))
                });
                break;
            }
            if !applied {
                suite.vacuous();
            }
        }
    }
}

// --- 3.8: triangle-complement cohyperplanes force the dual family shape ---

fn suite_triangle_cohyperplane(suite: &mut Suite<'_, '_>) {
    if !suite.analysis.is_three_connected() {
        return;
    }
    let bad_delete = suite.analysis.bad_delete();
    let size = suite.size();
    let property: Vec<ElementSet> = suite
        .analysis
        .cohyperplanes()
        .iter()
        .copied()
        .filter(|h| !h.is_empty() && h.is_subset_of(bad_delete))
        .collect();
    if property.is_empty() {
        suite.vacuous();
        return;
    }
    for h in property {
        let c = h.complement(size);
        if c.len() != 3 {
            suite.vacuous();
            continue;
        }
        debug_assert!(
            suite.t().is_circuit(c),
            "cohyperplane complement is a circuit"
        );
        let ok = families::p_description_check(suite.m());
        suite.case(ok, || {
            Certificate::new("triangle-complement cohyperplane outside the dual family")
                .set("H", h)
                .set("C", c)
                .cardinality("C", c.len())
        });
    }
}

// ---------------------------------------------------------------------------
// catalog orchestration
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Main,
    Vertical,
    Lemmas(Option<LemmaId>),
}

/// Reports for one matroid. Non-3-connected subjects yield a vacuous report
/// for the gated main/vertical checks instead of an error, so catalog sweeps
/// can run start to finish.
pub fn reports_for(m: &Matroid, subject: &str, kind: CheckKind, seed: u64) -> Vec<VerdictReport> {
    match kind {
        CheckKind::Main => {
            let analysis = Analysis::new(m);
            if !analysis.is_three_connected() {
                let mut r = VerdictReport::new(CheckId::MainTheorem, subject);
                r.vacuous = 1;
                r.info("skipped", "not_3_connected");
                vec![r]
            } else {
                vec![main_theorem_report(&analysis, subject)]
            }
        }
        CheckKind::Vertical => {
            let analysis = Analysis::new(m);
            if !analysis.is_three_connected() {
                let mut r = VerdictReport::new(CheckId::VerticalTheorem, subject);
                r.vacuous = 1;
                r.info("skipped", "not_3_connected");
                vec![r]
            } else {
                vec![vertical_theorem_report(&analysis, subject)]
            }
        }
        CheckKind::Lemmas(which) => {
            let analysis = Analysis::new(m);
            match which {
                Some(id) => vec![run_suite_with(&analysis, subject, id, seed)],
                None => LemmaId::ALL
                    .iter()
                    .map(|&id| run_suite_with(&analysis, subject, id, seed))
                    .collect(),
            }
        }
    }
}

/// Reports over a whole catalog, in catalog order.
pub fn catalog_reports(entries: &[CatalogEntry], kind: CheckKind, seed: u64) -> Vec<VerdictReport> {
    entries
        .iter()
        .flat_map(|e| reports_for(&e.matroid, &e.name, kind, seed))
        .collect()
}
