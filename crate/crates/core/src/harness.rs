//! Parameter sweeps, theorem verification and report formatting. The
//! thin binary is a wrapper around these functions.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{all_pairs_distances, Graph};
use crate::iso::are_isomorphic;
use crate::kernel::{Invariant, VertexSet};
use crate::solvers::{Method, MethodChoice, SolveResult, Solver};
use crate::theorems::{predicted_value, TheoremClaim, WitnessFixture};

/// Process exit status for an error, by category.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParam(_) | Error::InvalidSpec(_) | Error::Io(_) => 2,
        Error::InvalidVertex { .. }
        | Error::SelfLoopRejected(_)
        | Error::DisconnectedGraph
        | Error::TooFewVertices(_)
        | Error::DuplicateVertex(_)
        | Error::SetTooSmall(_)
        | Error::EdgeList { .. } => 3,
        Error::TooLargeForIso { .. }
        | Error::TooLargeForOracle { .. }
        | Error::MmdTooLarge { .. }
        | Error::GuardViolated(_) => 4,
    }
}

pub const EXIT_VERIFY_FAILED: i32 = 5;

/// Parses `3`, `3..5` (inclusive) or `8..12:2`.
pub fn parse_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParam(format!("bad range `{s}`, expected N, A..B or A..B:STEP"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (span, step) = match s.split_once(':') {
        Some((span, step)) => (span, num(step)?),
        None => (s, 1),
    };
    if step == 0 {
        return Err(bad());
    }
    match span.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).step_by(step).collect())
        }
        None => Ok(vec![num(span)?]),
    }
}

/// Comma-separated invariant names.
pub fn parse_invariants(s: &str) -> Result<Vec<Invariant>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

/// Families a sweep can range over. `Cp` takes the group order `n` and
/// builds `Cay(Z_n, S_(n/2-1))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepFamily {
    Jellyfish,
    Cp,
    CocktailParty,
    CayleyDihedral,
    Cycle,
    Complete,
}

impl SweepFamily {
    pub fn uses_m(self) -> bool {
        self == SweepFamily::Jellyfish
    }

    fn spec(self, n: usize, m: usize) -> FamilySpec {
        match self {
            SweepFamily::Jellyfish => FamilySpec::Jellyfish { n, m },
            SweepFamily::Cp => FamilySpec::CayleyZn { n, k: (n / 2).saturating_sub(1) },
            SweepFamily::CocktailParty => FamilySpec::CocktailParty { r: n },
            SweepFamily::CayleyDihedral => FamilySpec::CayleyDihedral { n },
            SweepFamily::Cycle => FamilySpec::Cycle { n },
            SweepFamily::Complete => FamilySpec::Complete { n },
        }
    }
}

impl FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "jfg" => SweepFamily::Jellyfish,
            "cp" => SweepFamily::Cp,
            "cocktail" => SweepFamily::CocktailParty,
            "cayley-d2n" => SweepFamily::CayleyDihedral,
            "cycle" => SweepFamily::Cycle,
            "complete" => SweepFamily::Complete,
            other => {
                return Err(Error::InvalidParam(format!(
                    "unknown sweep family `{other}` (jfg, cp, cocktail, cayley-d2n, cycle, complete)"
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub family: SweepFamily,
    pub n: Vec<usize>,
    /// Ignored unless the family takes a second parameter.
    pub m: Vec<usize>,
    pub invariants: Vec<Invariant>,
    pub method: MethodChoice,
}

impl SweepConfig {
    /// Instances in grid order: `n` outer, `m` inner.
    pub fn instances(&self) -> Vec<FamilySpec> {
        let ms: &[usize] = if self.family.uses_m() { &self.m } else { &[0] };
        self.n
            .iter()
            .flat_map(|&n| ms.iter().map(move |&m| self.family.spec(n, m)))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchStatus {
    Pass,
    Fail,
    OutsideGuard,
}

impl MatchStatus {
    pub fn of(solver: Option<usize>, closed_form: Option<usize>) -> Self {
        match (solver, closed_form) {
            (_, None) => MatchStatus::OutsideGuard,
            (Some(a), Some(b)) if a == b => MatchStatus::Pass,
            _ => MatchStatus::Fail,
        }
    }
}

impl fmt::Display for MatchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchStatus::Pass => "PASS",
            MatchStatus::Fail => "FAIL",
            MatchStatus::OutsideGuard => "OUTSIDE_GUARD",
        })
    }
}

/// One (instance, invariant) outcome of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub family: String,
    pub n_vertices: usize,
    pub invariant: Invariant,
    pub solver_value: Option<usize>,
    pub closed_form_value: Option<usize>,
    pub status: MatchStatus,
    pub witness: Option<VertexSet>,
    pub elapsed: Duration,
    pub nodes_explored: u64,
    pub method: Option<Method>,
    pub error: Option<String>,
}

impl SweepRow {
    pub const HEADER: [&'static str; 11] = [
        "family",
        "n_vertices",
        "invariant",
        "solver_value",
        "closed_form_value",
        "match",
        "witness",
        "elapsed_ms",
        "nodes_explored",
        "method",
        "error",
    ];

    pub fn record(&self) -> [String; 11] {
        let opt = |v: Option<usize>| v.map_or_else(|| "n/a".to_string(), |v| v.to_string());
        [
            self.family.clone(),
            self.n_vertices.to_string(),
            self.invariant.name().to_string(),
            opt(self.solver_value),
            opt(self.closed_form_value),
            self.status.to_string(),
            self.witness.as_ref().map(VertexSet::to_list_string).unwrap_or_default(),
            format!("{:.3}", self.elapsed.as_secs_f64() * 1e3),
            self.nodes_explored.to_string(),
            self.method.map(|m| m.name().to_string()).unwrap_or_default(),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Solves one instance; errors land in the row.
pub fn sweep_row(spec: &FamilySpec, invariant: Invariant, method: MethodChoice, solver: &Solver) -> SweepRow {
    let start = Instant::now();
    let closed_form_value = predicted_value(spec, invariant);
    let outcome = spec.validate().and_then(|()| {
        let g = spec.build()?;
        solve_graph(&g, invariant, method, solver)
    });
    let (solver_value, witness, nodes_explored, method, error) = match outcome {
        Ok(r) => (Some(r.value), Some(r.witness), r.nodes_explored, Some(r.method), None),
        Err(e) => (None, None, 0, None, Some(e.to_string())),
    };
    SweepRow {
        family: spec.to_string(),
        n_vertices: spec.vertex_count(),
        invariant,
        solver_value,
        closed_form_value,
        status: MatchStatus::of(solver_value, closed_form_value),
        witness,
        elapsed: start.elapsed(),
        nodes_explored,
        method,
        error,
    }
}

/// Computes distances when needed and dispatches to the solver.
pub fn solve_graph(g: &Graph, invariant: Invariant, method: MethodChoice, solver: &Solver) -> Result<SolveResult> {
    let dm = if invariant.needs_distances() { Some(all_pairs_distances(g)?) } else { None };
    solver.solve(g, dm.as_ref(), invariant, method)
}

/// Runs every row, possibly in parallel; rows come back in grid order,
/// then invariant order.
pub fn run_sweep(config: &SweepConfig, solver: &Solver) -> Vec<SweepRow> {
    let jobs: Vec<(FamilySpec, Invariant)> = config
        .instances()
        .into_iter()
        .flat_map(|spec| config.invariants.iter().map(move |&inv| (spec, inv)))
        .collect();
    let run = |&(spec, inv): &(FamilySpec, Invariant)| sweep_row(&spec, inv, config.method, solver);
    if solver.options().is_sequential() {
        jobs.iter().map(run).collect()
    } else {
        solver.options().install(|| jobs.par_iter().map(run).collect())
    }
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(SweepRow::HEADER).map_err(io)?;
    for row in rows {
        w.write_record(row.record()).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn sweep_markdown(rows: &[SweepRow]) -> String {
    let mut s = format!("| {} |\n", SweepRow::HEADER.join(" | "));
    s.push_str(&format!("|{}\n", "---|".repeat(SweepRow::HEADER.len())));
    for row in rows {
        s.push_str(&format!("| {} |\n", row.record().join(" | ")));
    }
    s
}

/// Result of a single `dim` computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub source: String,
    pub n_vertices: usize,
    pub invariant: Invariant,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub elapsed: Duration,
    pub nodes_explored: u64,
    pub closed_form_value: Option<usize>,
}

impl DimensionReport {
    pub const HEADER: [&'static str; 9] = [
        "source",
        "n_vertices",
        "invariant",
        "value",
        "witness",
        "method",
        "elapsed_ms",
        "nodes_explored",
        "closed_form_value",
    ];

    pub fn new(source: String, g: &Graph, result: SolveResult, closed_form_value: Option<usize>) -> Self {
        DimensionReport {
            source,
            n_vertices: g.vertex_count(),
            invariant: result.invariant,
            value: result.value,
            witness: result.witness,
            method: result.method,
            elapsed: result.elapsed,
            nodes_explored: result.nodes_explored,
            closed_form_value,
        }
    }

    pub fn record(&self) -> [String; 9] {
        [
            self.source.clone(),
            self.n_vertices.to_string(),
            self.invariant.name().to_string(),
            self.value.to_string(),
            self.witness.to_list_string(),
            self.method.name().to_string(),
            format!("{:.3}", self.elapsed.as_secs_f64() * 1e3),
            self.nodes_explored.to_string(),
            self.closed_form_value.map_or_else(|| "n/a".to_string(), |v| v.to_string()),
        ]
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(Self::HEADER).map_err(io)?;
        w.write_record(self.record()).map_err(io)?;
        w.flush()?;
        Ok(())
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph      {} ({} vertices)", self.source, self.n_vertices)?;
        writeln!(f, "invariant  {} = {}", self.invariant.symbol(), self.value)?;
        writeln!(f, "witness    {}", self.witness)?;
        writeln!(f, "method     {}", self.method)?;
        writeln!(f, "explored   {}", self.nodes_explored)?;
        writeln!(f, "elapsed    {:.3} ms", self.elapsed.as_secs_f64() * 1e3)?;
        if let Some(cf) = self.closed_form_value {
            writeln!(f, "formula    {cf}")?;
        }
        Ok(())
    }
}

/// Symbol legend for human-readable output.
pub fn legend() -> String {
    Invariant::ALL
        .iter()
        .map(|inv| format!("  {:<6} {:<4} {}", inv.name(), inv.symbol(), inv.description()))
        .collect::<Vec<_>>()
        .join("\n")
}

/// One verification check on one claim instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub claim: TheoremClaim,
    pub instance: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<10} {:<16} {:<18} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim.id(),
            self.instance,
            self.check,
            self.detail
        )
    }
}

fn check_fixture(g: &Graph, fx: &WitnessFixture) -> Result<bool> {
    if fx.invariant.needs_distances() {
        let dm = all_pairs_distances(g)?;
        fx.invariant.holds(g, &dm, &fx.set)
    } else {
        Ok(crate::kernel::is_adjacency_resolving_set(g, &fx.set))
    }
}

fn graph_diameter(g: &Graph) -> Result<usize> {
    Ok(all_pairs_distances(g)?.diameter() as usize)
}

/// Runs every check of `claim` at one parameter tuple.
pub fn verify_instance(claim: TheoremClaim, params: &[usize], solver: &Solver) -> Vec<CheckOutcome> {
    let specs = claim.instances(params);
    let instance = specs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ~ ");
    let mut out = Vec::new();
    let mut push = |check: &str, result: Result<(bool, String)>| {
        let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        out.push(CheckOutcome { claim, instance: instance.clone(), check: check.to_string(), passed, detail });
    };

    let formula = match claim.formula(params) {
        Ok(f) => f,
        Err(e) => {
            push("guard", Err(e));
            return out;
        }
    };
    let graphs: Result<Vec<Graph>> = specs.iter().map(FamilySpec::build).collect();
    let graphs = match graphs {
        Ok(gs) => gs,
        Err(e) => {
            push("build", Err(e));
            return out;
        }
    };
    let g = &graphs[0];

    match claim {
        TheoremClaim::JfgDiam | TheoremClaim::CpDiam => {
            push(
                "diameter",
                graph_diameter(g).map(|d| (d == formula, format!("bfs={d} formula={formula}"))),
            );
        }
        TheoremClaim::CpIsoZn | TheoremClaim::CpIsoD2n => {
            push(
                "isomorphism",
                are_isomorphic(&graphs[0], &graphs[1]).map(|iso| (iso, format!("isomorphic={iso}"))),
            );
        }
        _ => {
            let inv = claim.invariant().expect("dimension claims name an invariant");
            let value = solve_graph(g, inv, MethodChoice::Auto, solver);
            push(
                "value",
                value.map(|r| {
                    (r.value == formula, format!("solver={} formula={formula} method={}", r.value, r.method))
                }),
            );
            if inv == Invariant::StrongDim {
                let mmd = all_pairs_distances(g).and_then(|dm| solver.min_strong_resolving_via_mmd(g, &dm));
                push("mmd cover", mmd.map(|r| (r.value == formula, format!("cover={} formula={formula}", r.value))));
            }
            if claim == TheoremClaim::CpBeta {
                let adj = solve_graph(g, Invariant::AdjacencyDim, MethodChoice::Auto, solver);
                push("adjdim = beta", adj.map(|r| (r.value == formula, format!("adjdim={} beta={formula}", r.value))));
            }
            match claim.positive_witnesses(params) {
                Ok(fixtures) => {
                    for (i, fx) in fixtures.iter().enumerate() {
                        let sized = i > 0 || fx.set.len() == formula;
                        push(
                            "positive witness",
                            check_fixture(g, fx).map(|ok| {
                                (ok == fx.expected && sized, format!("{} |W|={} {}", fx.description, fx.set.len(), fx.set))
                            }),
                        );
                    }
                }
                Err(e) => push("positive witness", Err(e)),
            }
            match claim.negative_witnesses(params) {
                Ok(fixtures) => {
                    for fx in &fixtures {
                        push(
                            "negative witness",
                            check_fixture(g, fx).map(|ok| (ok == fx.expected, format!("{} {}", fx.description, fx.set))),
                        );
                    }
                }
                Err(e) => push("negative witness", Err(e)),
            }
        }
    }
    out
}

/// Runs the given claims at their default parameters.
pub fn verify_claims(claims: &[TheoremClaim], solver: &Solver) -> Vec<CheckOutcome> {
    claims
        .iter()
        .flat_map(|&claim| {
            claim.default_params().into_iter().flat_map(move |p| verify_instance(claim, &p, solver))
        })
        .collect()
}

/// Registry listing: id, subject, guard, formula.
pub fn claim_listing() -> String {
    TheoremClaim::ALL
        .iter()
        .map(|c| format!("{:<10}  {:<32}  guard: {:<16}  {}", c.id(), c.subject(), c.guard_text(), c.formula_text()))
        .collect::<Vec<_>>()
        .join("\n")
}
