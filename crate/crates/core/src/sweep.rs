//! Exhaustive verification sweeps and the two-marked-vertex catalog search.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::builders::{
    build_added_path_orientation, build_euler_lemma_orientation, build_t_orientation,
    build_t_plus_orientation, build_theta_orientation,
};
use crate::canon::canonical_form_colored;
use crate::classify::{classify_connected, classify_degree_at, classify_two_connected, find_at_witness_subgraph};
use crate::color::{bad_lists_for_pair, is_f_choosable, is_f_paintable};
use crate::compose::compose_cutvertex;
use crate::config::{guards, Guards};
use crate::error::{Error, Result};
use crate::euler::eulerian_counts;
use crate::exec::Exec;
use crate::enumerate::{enumerate_graphs, Filter};
use crate::graph::{Graph, LabeledPair};
use crate::graph6::emit_graph6;
use crate::orientation::Orientation;
use crate::patterns::{t_graph, theta_graph};
use crate::search::is_pair_at;
use crate::stretch::unstretch_candidates;
use crate::transfer::stretch_transfer_check;

/// Graphs per checkpointed chunk.
pub const CHUNK: usize = 64;
/// Largest order a sweep or catalog search accepts.
pub const SWEEP_MAX_N: usize = 7;
/// Largest order for the three-way equivalence sweep under default guards.
pub const HX_EQUIVALENCE_MAX_N: usize = 6;
/// Largest order the lemma suite accepts (it stretches every edge of every labeling).
pub const LEMMA_SUITE_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scope {
    #[serde(rename = "degree_at")]
    DegreeAt,
    #[serde(rename = "main_lemma")]
    MainLemma,
    #[serde(rename = "thm_1connected")]
    Connected,
    #[serde(rename = "hx_equivalence")]
    HxEquivalence,
    #[serde(rename = "lemma_suite")]
    LemmaSuite,
}

impl Scope {
    pub const ALL: [Scope; 5] = [
        Scope::DegreeAt,
        Scope::MainLemma,
        Scope::Connected,
        Scope::HxEquivalence,
        Scope::LemmaSuite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::DegreeAt => "degree_at",
            Scope::MainLemma => "main_lemma",
            Scope::Connected => "thm_1connected",
            Scope::HxEquivalence => "hx_equivalence",
            Scope::LemmaSuite => "lemma_suite",
        }
    }

    fn filter(self) -> Filter {
        match self {
            Scope::MainLemma => Filter::TwoConnected,
            _ => Filter::Connected,
        }
    }

    fn labeling(self) -> &'static str {
        match self {
            Scope::DegreeAt => "zero",
            Scope::LemmaSuite => "labels in {0,1,2} summing to at most 2",
            _ => "h_x for every x",
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown scope {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: usize,
    pub scope: Scope,
    pub exec: Exec,
    /// Completed chunks are stored here and skipped on the next run.
    pub checkpoint: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub graphs: u64,
    pub instances: u64,
    pub at: u64,
    pub not_at: u64,
    /// Instances per case tag or check name.
    pub cases: BTreeMap<String, u64>,
    /// Instances where a guard prevented one of the deciders from running.
    pub skipped: u64,
}

impl Counts {
    fn merge(&mut self, other: &Counts) {
        self.graphs += other.graphs;
        self.instances += other.instances;
        self.at += other.at;
        self.not_at += other.not_at;
        self.skipped += other.skipped;
        for (k, v) in &other.cases {
            *self.cases.entry(k.clone()).or_default() += v;
        }
    }

    fn case(&mut self, name: impl Into<String>) {
        *self.cases.entry(name.into()).or_default() += 1;
    }

    fn verdict(&mut self, at: bool) {
        self.instances += 1;
        if at {
            self.at += 1;
        } else {
            self.not_at += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub graph6: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    pub classifier: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    pub n_max: usize,
    pub scope: Scope,
    pub filter: Filter,
    pub labeling: String,
    pub parallel: bool,
    pub guards: Guards,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub parameters: SweepParams,
    pub counts: Counts,
    pub mismatches: Vec<Mismatch>,
    pub wall_time_secs: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Outcome {
    counts: Counts,
    mismatches: Vec<Mismatch>,
}

impl Outcome {
    fn merge(&mut self, other: &Outcome) {
        self.counts.merge(&other.counts);
        self.mismatches.extend(other.mismatches.iter().cloned());
    }

    fn mismatch(&mut self, g: &Graph, x: Option<usize>, classifier: impl Into<String>, oracle: impl Into<String>) {
        self.mismatches.push(Mismatch {
            graph6: emit_graph6(g),
            x,
            classifier: classifier.into(),
            oracle: oracle.into(),
        });
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct Checkpoint {
    fingerprint: String,
    done: BTreeMap<String, Outcome>,
}

fn fingerprint(scope: Scope) -> String {
    format!("{}:{}", scope.name(), serde_json::to_string(&guards()).unwrap_or_default())
}

fn load_checkpoint(path: &Option<PathBuf>, scope: Scope) -> Checkpoint {
    let fresh = Checkpoint {
        fingerprint: fingerprint(scope),
        done: BTreeMap::new(),
    };
    let Some(path) = path else {
        return fresh;
    };
    match std::fs::read_to_string(path).ok().and_then(|t| serde_json::from_str::<Checkpoint>(&t).ok()) {
        Some(c) if c.fingerprint == fresh.fingerprint => c,
        _ => fresh,
    }
}

fn save_checkpoint(path: &Option<PathBuf>, cp: &Checkpoint) -> Result<()> {
    if let Some(path) = path {
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_string(cp)?)?;
        std::fs::rename(&tmp, path)?;
    }
    Ok(())
}

fn check_sweep_guards(cfg: &SweepConfig) -> Result<()> {
    let gd = guards();
    let limit = match cfg.scope {
        Scope::HxEquivalence => HX_EQUIVALENCE_MAX_N.min(gd.choose_max_vertices).min(gd.paint_max_vertices),
        Scope::LemmaSuite => LEMMA_SUITE_MAX_N,
        _ => SWEEP_MAX_N,
    };
    if cfg.n_max > limit {
        return Err(Error::guard("sweep order", cfg.n_max, limit));
    }
    Ok(())
}

/// Run one verification scope over every graph with at most `n_max` vertices.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    check_sweep_guards(cfg)?;
    let start = Instant::now();
    let mut cp = load_checkpoint(&cfg.checkpoint, cfg.scope);
    let mut total = Outcome::default();
    if cfg.scope == Scope::LemmaSuite {
        total.merge(&builder_suite()?);
    }
    for n in 1..=cfg.n_max {
        let graphs = enumerate_graphs(n, cfg.scope.filter())?;
        for (ci, chunk) in graphs.chunks(CHUNK).enumerate() {
            let key = format!("{n}:{}", ci * CHUNK);
            if let Some(done) = cp.done.get(&key) {
                total.merge(done);
                continue;
            }
            let results = cfg.exec.map(chunk, |g| check_graph(cfg.scope, g));
            let mut out = Outcome::default();
            for r in results {
                out.merge(&r?);
            }
            total.merge(&out);
            cp.done.insert(key, out);
            save_checkpoint(&cfg.checkpoint, &cp)?;
        }
    }
    Ok(SweepReport {
        parameters: SweepParams {
            n_max: cfg.n_max,
            scope: cfg.scope,
            filter: cfg.scope.filter(),
            labeling: cfg.scope.labeling().into(),
            parallel: cfg.exec.is_parallel(),
            guards: guards(),
        },
        counts: total.counts,
        mismatches: total.mismatches,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

fn verdict(at: bool) -> &'static str {
    if at {
        "AT"
    } else {
        "not AT"
    }
}

fn check_graph(scope: Scope, g: &Graph) -> Result<Outcome> {
    let mut out = Outcome::default();
    out.counts.graphs = 1;
    match scope {
        Scope::DegreeAt => {
            let c = classify_degree_at(g)?;
            let oracle = is_pair_at(&LabeledPair::zero(g.clone()))?.is_some();
            out.counts.verdict(c.at);
            out.counts.case(format!("{:?}", c.case));
            if c.at != oracle {
                out.mismatch(g, None, verdict(c.at), verdict(oracle));
            }
        }
        Scope::MainLemma | Scope::Connected => {
            for x in 0..g.n() {
                let p = LabeledPair::marked(g.clone(), x)?;
                let c = if scope == Scope::MainLemma {
                    classify_two_connected(&p)?
                } else {
                    classify_connected(&p)?
                };
                let oracle = is_pair_at(&p)?.is_some();
                out.counts.verdict(c.at);
                out.counts.case(format!("{:?}", c.case));
                if c.at != oracle {
                    out.mismatch(g, Some(x), verdict(c.at), verdict(oracle));
                    continue;
                }
                if scope == Scope::Connected {
                    let constructive = if c.at {
                        find_at_witness_subgraph(&p).map(|_| ())
                    } else {
                        bad_lists_for_pair(&p).map(|_| ())
                    };
                    if let Err(e) = constructive {
                        out.mismatch(g, Some(x), format!("{} without certificate: {e}", verdict(c.at)), verdict(oracle));
                    }
                }
            }
        }
        Scope::HxEquivalence => {
            for x in 0..g.n() {
                let p = LabeledPair::marked(g.clone(), x)?;
                let f = p.degree_bound();
                let at = is_pair_at(&p)?.is_some();
                let paintable = is_f_paintable(g, &f)?;
                let choosable = match is_f_choosable(g, &f) {
                    Ok(bad) => Some(bad.is_none()),
                    Err(e) if e.is_guard() => None,
                    Err(e) => return Err(e),
                };
                out.counts.verdict(at);
                if choosable.is_none() {
                    out.counts.skipped += 1;
                }
                if at != paintable || choosable.is_some_and(|c| c != at) {
                    out.mismatch(
                        g,
                        Some(x),
                        verdict(at),
                        format!("paintable {paintable}, choosable {choosable:?}"),
                    );
                }
            }
        }
        Scope::LemmaSuite => lemma_checks(g, &mut out)?,
    }
    Ok(out)
}

/// Labelings with values in {0,1,2} summing to at most 2.
fn small_labelings(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for v in 0..n {
        for h in [1, 2] {
            let mut l = vec![0; n];
            l[v] = h;
            out.push(l);
        }
        for w in v + 1..n {
            let mut l = vec![0; n];
            l[v] = 1;
            l[w] = 1;
            out.push(l);
        }
    }
    out
}

fn lemma_checks(g: &Graph, out: &mut Outcome) -> Result<()> {
    // Stretching transfers AT-ness both ways.
    for labels in small_labelings(g.n()) {
        let p = LabeledPair::new(g.clone(), labels)?;
        for e in 0..g.m() {
            let r = stretch_transfer_check(&p, e)?;
            out.counts.verdict(r.base_at);
            out.counts.case("stretch_transfer");
            if !r.holds() {
                out.mismatch(g, None, format!("stretch of edge {e} with labels {:?}", p.labels), format!("{r:?}"));
            }
        }
    }
    // d(x) = 2: (G, h_x) is AT iff every component of G - x is degree-AT.
    for x in (0..g.n()).filter(|&x| g.degree(x) == 2) {
        let p = LabeledPair::marked(g.clone(), x)?;
        let at = is_pair_at(&p)?.is_some();
        let rest = g.vertex_mask() & !(1 << x);
        let mut all = true;
        for comp in g.components_within(rest) {
            let (c, _) = g.induced(comp);
            all &= is_pair_at(&LabeledPair::zero(c))?.is_some();
        }
        out.counts.verdict(at);
        out.counts.case("degree_two");
        if at != all {
            out.mismatch(g, Some(x), verdict(at), format!("components of G - x degree-AT: {all}"));
        }
    }
    // Gluing at a vertex multiplies EE - EO (checked inside compose_cutvertex).
    let d = match is_pair_at(&LabeledPair::zero(g.clone()))? {
        Some(d) => d,
        None => Orientation::forward(g.clone()),
    };
    let c4 = Orientation::from_arcs(Graph::cycle(4), [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    for v in 0..g.n() {
        out.counts.verdict(true);
        out.counts.case("cutvertex_product");
        if let Err(e) = compose_cutvertex(&d, &c4, v, 0) {
            out.mismatch(g, Some(v), "glued with a directed C4", e.to_string());
        }
    }
    Ok(())
}

/// One parameterised builder instance and what it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuilderCase {
    pub builder: String,
    pub parameters: String,
    pub even: u64,
    pub odd: u64,
    pub ok: bool,
    /// The built orientation; empty when the builder failed.
    pub graph6: String,
    pub orientation: String,
}

/// Parameter families for each orientation builder, with the promised counts checked.
pub fn builder_cases() -> Vec<BuilderCase> {
    let mut out = Vec::new();
    let mut record = |builder: &str, parameters: String, res: Result<Orientation>, want: &dyn Fn(u64, u64) -> bool| {
        let built = res.and_then(|d| eulerian_counts(&d).map(|c| (c, emit_graph6(d.graph()), d.bitstring())));
        let (even, odd, ok, graph6, orientation) = match built {
            Ok((c, g6, bits)) => (c.even, c.odd, want(c.even, c.odd), g6, bits),
            Err(_) => (0, 0, false, String::new(), String::new()),
        };
        out.push(BuilderCase {
            builder: builder.into(),
            parameters,
            even,
            odd,
            ok,
            graph6,
            orientation,
        });
    };
    for a in 1..=4 {
        for b in a..=4 {
            for c in b..=4 {
                if b == 1 {
                    continue;
                }
                let (g, w) = theta_graph([a, b, c]);
                let x = w.poles.0;
                record("theta", format!("{:?}", [a, b, c]), build_theta_orientation(&g, &w, x), &|e, o| e + o == 3);
            }
        }
    }
    for l in mixed_parity_lengths() {
        let (g, w) = t_graph(l);
        record("t_graph", format!("{l:?}"), build_t_orientation(&g, &w), &|e, o| e + o == 4 && e.abs_diff(o) == 2);
    }
    for k in 3..=6 {
        for j in 1..k {
            // x joined to the first j vertices of K_k; z1 = 0 and z2 = j are closed twins.
            let h = Graph::complete(k);
            let g = h.with_vertex((1u64 << j) - 1).unwrap();
            record("euler_lemma", format!("K{k}, x adjacent to {j}"), build_euler_lemma_orientation(&g, k, 0, j), &|e, o| e == o + 1);
        }
    }
    for l in [[1, 1, 1], [1, 3, 1], [3, 3, 3], [2, 2, 2], [2, 4, 2]] {
        let (g, w) = t_graph(l);
        let u = g.n();
        let tri = w.triangle.iter().fold(0u64, |acc, &z| acc | 1 << z);
        let g = g.with_vertex(tri).unwrap();
        record("t_plus", format!("{l:?}"), build_t_plus_orientation(&g, &w, u), &|e, o| (e + o) % 2 == 1);
    }
    for (l, i, lo, hi, plen) in added_path_params() {
        let (g, w) = t_graph(l);
        let p = &w.paths[i];
        let res = build_added_path_orientation(&g, &w, (p[lo], p[hi]), plen).map(|a| a.orientation);
        record("added_path", format!("{l:?} path {i} [{lo},{hi}] new length {plen}"), res, &|e, o| e.abs_diff(o) == 1);
    }
    out
}

fn mixed_parity_lengths() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in a..=4 {
            for c in b..=4 {
                if !(a % 2 == b % 2 && b % 2 == c % 2) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Same-parity T-graphs with a subpath `P` of one apex path that has an inner
/// end, and the length of the added path `P'`.
fn added_path_params() -> Vec<([usize; 3], usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for l in [[2, 2, 2], [3, 1, 1], [3, 3, 1], [2, 4, 2], [3, 3, 3]] {
        for i in 0..3 {
            let len = l[i];
            for lo in 0..=len {
                for hi in lo + 1..=len {
                    if lo == 0 && hi == len {
                        continue;
                    }
                    for plen in [2, 3] {
                        out.push((l, i, lo, hi, plen));
                    }
                }
            }
        }
    }
    out
}

fn builder_suite() -> Result<Outcome> {
    let mut out = Outcome::default();
    for c in builder_cases() {
        out.counts.verdict(c.ok);
        out.counts.case(format!("builder_{}", c.builder));
        if !c.ok {
            out.mismatches.push(Mismatch {
                graph6: String::new(),
                x: None,
                classifier: format!("{} {}", c.builder, c.parameters),
                oracle: format!("EE = {}, EO = {}", c.even, c.odd),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    At,
    Choosable,
    Paintable,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "at" => Ok(Mode::At),
            "choosable" => Ok(Mode::Choosable),
            "paintable" => Ok(Mode::Paintable),
            _ => Err(Error::precondition(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub two_connected: bool,
    /// No induced path `u1 v1 v2 u2` whose inner vertices have degree 2 and label 0.
    pub unstretched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub x: usize,
    pub y: usize,
    /// Marked pairs of this graph in the same automorphism orbit.
    pub orbit_size: usize,
}

/// Exceptional items counted three ways.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Aggregates {
    /// Graphs with at least one exceptional marked pair.
    pub graphs: usize,
    /// Graph plus marked-pair orbit.
    pub orbits: usize,
    /// Marked pairs `{x, y}` counted individually.
    pub pairs: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCounts {
    pub n: usize,
    pub graphs_tested: usize,
    pub orbits_tested: usize,
    pub exceptional: Aggregates,
    /// Orbits a guard kept the decider from evaluating.
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub n_max: usize,
    pub mode: Mode,
    pub constraints: Constraints,
    pub per_n: Vec<OrderCounts>,
    pub totals: Aggregates,
    pub entries: Vec<CatalogEntry>,
    pub wall_time_secs: f64,
}

/// Pairs of `g` that satisfy the constraints, grouped into orbits; each group
/// lists its pairs in lexicographic order.
fn pair_orbits(g: &Graph, constraints: Constraints) -> Result<Vec<Vec<(usize, usize)>>> {
    let mut groups: BTreeMap<Vec<u8>, Vec<(usize, usize)>> = BTreeMap::new();
    for x in 0..g.n() {
        for y in x + 1..g.n() {
            let p = LabeledPair::two_marked(g.clone(), x, y)?;
            if constraints.unstretched && !unstretch_candidates(&p).is_empty() {
                continue;
            }
            let key = canonical_form_colored(g, &p.labels)?;
            groups.entry(key).or_default().push((x, y));
        }
    }
    let mut out: Vec<Vec<(usize, usize)>> = groups.into_values().collect();
    out.sort();
    Ok(out)
}

/// `Some(true)` if the pair lacks the property, `None` when a guard refuses.
fn exceptional(p: &LabeledPair, mode: Mode) -> Result<Option<bool>> {
    let f = p.degree_bound();
    let res = match mode {
        Mode::At => is_pair_at(p).map(|d| d.is_none()),
        Mode::Choosable => is_f_choosable(&p.graph, &f).map(|bad| bad.is_some()),
        Mode::Paintable => is_f_paintable(&p.graph, &f).map(|w| !w),
    };
    match res {
        Ok(b) => Ok(Some(b)),
        Err(e) if e.is_guard() && mode == Mode::Choosable => Ok(None),
        Err(e) => Err(e),
    }
}

struct GraphResult {
    orbits: usize,
    skipped: usize,
    entries: Vec<CatalogEntry>,
}

/// Every marked pair `{x, y}` of every graph meeting the constraints whose
/// `(G, h_{x,y})` lacks the chosen property, one entry per orbit.
pub fn search_two_marked(n_max: usize, mode: Mode, constraints: Constraints, exec: Exec) -> Result<Catalog> {
    let limit = match mode {
        Mode::At => SWEEP_MAX_N,
        Mode::Choosable => guards().choose_max_vertices,
        Mode::Paintable => guards().paint_max_vertices,
    };
    if n_max > limit {
        return Err(Error::guard("search order", n_max, limit));
    }
    let start = Instant::now();
    let filter = if constraints.two_connected { Filter::TwoConnected } else { Filter::Connected };
    let mut per_n = Vec::new();
    let mut entries = Vec::new();
    for n in 2..=n_max {
        let graphs = enumerate_graphs(n, filter)?;
        let results = exec.map(&graphs, |g| -> Result<GraphResult> {
            let mut r = GraphResult {
                orbits: 0,
                skipped: 0,
                entries: Vec::new(),
            };
            for orbit in pair_orbits(g, constraints)? {
                r.orbits += 1;
                let (x, y) = orbit[0];
                match exceptional(&LabeledPair::two_marked(g.clone(), x, y)?, mode)? {
                    Some(true) => r.entries.push(CatalogEntry {
                        graph6: emit_graph6(g),
                        n: g.n(),
                        m: g.m(),
                        x,
                        y,
                        orbit_size: orbit.len(),
                    }),
                    Some(false) => {}
                    None => r.skipped += 1,
                }
            }
            Ok(r)
        });
        let mut oc = OrderCounts {
            n,
            graphs_tested: graphs.len(),
            ..Default::default()
        };
        for r in results {
            let r = r?;
            oc.orbits_tested += r.orbits;
            oc.skipped += r.skipped;
            if !r.entries.is_empty() {
                oc.exceptional.graphs += 1;
            }
            oc.exceptional.orbits += r.entries.len();
            oc.exceptional.pairs += r.entries.iter().map(|e| e.orbit_size).sum::<usize>();
            entries.extend(r.entries);
        }
        per_n.push(oc);
    }
    let totals = per_n.iter().fold(Aggregates::default(), |mut t, oc| {
        t.graphs += oc.exceptional.graphs;
        t.orbits += oc.exceptional.orbits;
        t.pairs += oc.exceptional.pairs;
        t
    });
    Ok(Catalog {
        n_max,
        mode,
        constraints,
        per_n,
        totals,
        entries,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}
