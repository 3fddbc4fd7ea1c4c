use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use vca_core::covers::{
    algebra_generators_up_to, decompose, is_k_cover, is_standard_graded_up_to, minimal_k_covers,
};
use vca_core::ideals::{corollary_points_check, ideal_of, symbolic_power, Monomial, MonomialIdeal};
use vca_core::linalg::{enumerate_vertices, is_integral_polyhedron, Integrality, RationalPoint, TuVerdict};
use vca_core::mengerian::{blocker_crosscheck, is_mengerian_up_to, Agreement, MengerianReport};
use vca_core::verify::{find_veronese_degree, verify_main_theorem, ConverseOutcome, TheoremReport};
use vca_core::{CoverVector, GradingReport, Hypergraph, WeightFunction};

use crate::format::{parse_hypergraph, ParsedInput};
use crate::report::{digest, RunReport, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Blocker,
    TuCheck,
    IsCover,
    MinimalCovers,
    Decompose,
    StandardGraded,
    Generators,
    SymbolicPower,
    Power,
    IdealEqual,
    Vertices,
    Integrality,
    Mengerian,
    #[value(name = "hhtz-check")]
    BlockerCrosscheck,
    VerifyTheorem,
    Veronese,
    CorollaryPoints,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exact checks on weighted hypergraphs: blockers, total unimodularity,
/// k-covers, symbolic powers and Mengerian sweeps.
///
/// Exit status: 0 when the property holds or a value was computed, 1 when the
/// property is refuted (the report carries a witness), 2 on usage or input
/// errors.
#[derive(Clone, Debug, Parser)]
#[command(name = "vca", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Hypergraph file; not used by `corollary-points`.
    pub input: Option<PathBuf>,
    /// Degree bound for grading, generator, Veronese and theorem checks.
    #[arg(long, default_value_t = 3)]
    pub max_k: u64,
    /// Largest weight entry scanned by `verify-theorem`.
    #[arg(long, default_value_t = 3)]
    pub w_bound: u64,
    /// Largest cost entry scanned by `mengerian` and `hhtz-check`.
    #[arg(long, default_value_t = 2)]
    pub c_bound: u64,
    /// Largest constant weight tried by `veronese`.
    #[arg(long, default_value_t = 4)]
    pub d_max: u64,
    /// One weight per `edge` line in input order (overrides `weight` lines);
    /// for `corollary-points`, one weight per point.
    #[arg(long, value_delimiter = ',')]
    pub weights: Option<Vec<u64>>,
    /// Cover vector for `is-cover` and `decompose`.
    #[arg(long, value_delimiter = ',')]
    pub cover: Option<Vec<u64>>,
    /// Order k for cover and power commands.
    #[arg(long)]
    pub k: Option<u64>,
    /// Projective dimension for `corollary-points`.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Adds `elapsed_ms` to the report (breaks byte-identical output).
    #[arg(long)]
    pub timing: bool,
}

struct Outcome {
    verdict: Verdict,
    summary: String,
    result: Value,
}

fn outcome(verdict: Verdict, summary: impl Into<String>, result: Value) -> Outcome {
    Outcome {
        verdict,
        summary: summary.into(),
        result,
    }
}

type CmdResult = Result<Outcome, String>;

fn core<T>(r: vca_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs one command against the already-read input text (`None` when no file
/// was given) and builds its report.
pub fn run(cli: &Cli, input: Option<&str>) -> RunReport {
    let start = Instant::now();
    let command = cli.command.name();
    let mut warnings = Vec::new();
    let (input_digest, result) = if cli.command == Command::CorollaryPoints {
        let key = format!(
            "corollary-points n={:?} weights={:?} k={:?} max-k={}",
            cli.n, cli.weights, cli.k, cli.max_k
        );
        (digest(key.as_bytes()), corollary(cli))
    } else {
        match input {
            None => (
                digest(b""),
                Err(format!("`{command}` needs a hypergraph file")),
            ),
            Some(text) => {
                let d = digest(text.as_bytes());
                let res = parse_hypergraph(text)
                    .map_err(|e| e.to_string())
                    .and_then(|parsed| {
                        warnings.extend(parsed.warnings.iter().cloned());
                        dispatch(cli, &parsed)
                    });
                (d, res)
            }
        }
    };
    let out = result.unwrap_or_else(|message| outcome(Verdict::Error, message, Value::Null));
    RunReport {
        command,
        input_digest,
        verdict: out.verdict,
        summary: out.summary,
        warnings,
        result: out.result,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

fn dispatch(cli: &Cli, parsed: &ParsedInput) -> CmdResult {
    let h = &parsed.hypergraph;
    let w = match &cli.weights {
        Some(ws) => parsed.with_input_weights(ws).map_err(|e| e.to_string())?,
        None => parsed.weights.clone(),
    };
    match cli.command {
        Command::Blocker => blocker(h),
        Command::TuCheck => tu_check(h),
        Command::IsCover => is_cover(cli, h, &w),
        Command::MinimalCovers => minimal_covers(cli, h, &w),
        Command::Decompose => decompose_cmd(cli, h, &w),
        Command::StandardGraded => standard_graded(cli, h, &w),
        Command::Generators => generators(cli, h, &w),
        Command::SymbolicPower => symbolic(cli, h, &w),
        Command::Power => power(cli, h, &w),
        Command::IdealEqual => ideal_equal(cli, h, &w),
        Command::Vertices => vertices(h, &w),
        Command::Integrality => integrality(h, &w),
        Command::Mengerian => mengerian(cli, h),
        Command::BlockerCrosscheck => crosscheck(cli, h),
        Command::VerifyTheorem => theorem(cli, h),
        Command::Veronese => veronese(cli, h),
        Command::CorollaryPoints => unreachable!("handled without an input file"),
    }
}

fn edges_json(h: &Hypergraph) -> Value {
    json!(h.edges())
}

fn cover_json(c: &CoverVector) -> Value {
    json!({ "c": c.entries(), "k": c.order() })
}

fn monomial_json(m: &Monomial) -> Value {
    json!({ "monomial": m.to_string(), "exponents": m.exponents() })
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({
        "generators": i.generators().iter().map(Monomial::to_string).collect::<Vec<_>>(),
        "exponents": i.generators().iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
    })
}

fn point_json(p: &RationalPoint) -> Value {
    json!(p.to_strings())
}

fn grading_json(g: &GradingReport) -> Value {
    json!({
        "max_k": g.bound,
        "standard_graded": g.is_standard(),
        "failing_cover": g.failing_cover.as_ref().map(cover_json),
    })
}

fn mengerian_json(r: &MengerianReport) -> Value {
    json!({
        "c_bound": r.bound,
        "passes": r.passes(),
        "failure": r.failure.as_ref().map(|f| json!({
            "c": f.c, "min_value": f.min_value, "max_value": f.max_value,
        })),
    })
}

fn require_k(cli: &Cli) -> Result<u64, String> {
    cli.k.ok_or_else(|| "--k is required".to_string())
}

fn require_cover(cli: &Cli) -> Result<&[u64], String> {
    cli.cover
        .as_deref()
        .ok_or_else(|| "--cover is required".to_string())
}

fn blocker(h: &Hypergraph) -> CmdResult {
    let b = h.blocker();
    Ok(outcome(
        Verdict::Computed,
        format!("{} minimal vertex covers", b.edge_count()),
        json!({ "edges": edges_json(&b), "count": b.edge_count() }),
    ))
}

fn tu_check(h: &Hypergraph) -> CmdResult {
    let m = h.incidence_matrix();
    let verdict = core(m.is_totally_unimodular())?;
    let chain = h.find_odd_alternating_chain().map(|c| {
        json!({
            "vertices": c.vertices,
            "edges": c.edges.iter().map(|&i| h.edges()[i].clone()).collect::<Vec<_>>(),
        })
    });
    let common = json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "bipartite_graph": h.is_bipartite_graph(),
        "odd_alternating_chain": chain,
    });
    match verdict {
        TuVerdict::TotallyUnimodular => Ok(outcome(
            Verdict::Holds,
            "incidence matrix is totally unimodular",
            merge(common, json!({ "totally_unimodular": true, "witness": null })),
        )),
        TuVerdict::Violated(w) => {
            assert!(w.verify(&m), "witness does not recompute");
            let sub = m.submatrix(&w.rows, &w.cols);
            let sub_rows: Vec<Vec<String>> = sub
                .to_rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            Ok(outcome(
                Verdict::Refuted,
                format!(
                    "{0}x{0} submatrix with determinant {1}",
                    w.rows.len(),
                    w.determinant
                ),
                merge(
                    common,
                    json!({
                        "totally_unimodular": false,
                        "witness": {
                            "rows": w.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
                            "cols": w.cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
                            "determinant": w.determinant.to_string(),
                            "submatrix": sub_rows,
                        },
                    }),
                ),
            ))
        }
    }
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn is_cover(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let c = require_cover(cli)?;
    let k = cli.k.unwrap_or(1);
    let holds = core(is_k_cover(h, w, c, k))?;
    let verdict = if holds { Verdict::Holds } else { Verdict::Refuted };
    let violated: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .zip(w.weights())
        .filter(|(e, &wf)| e.iter().map(|&v| c[v - 1]).sum::<u64>() < k * wf)
        .map(|(e, _)| e.clone())
        .collect();
    Ok(outcome(
        verdict,
        if holds {
            format!("{c:?} is a {k}-cover")
        } else {
            format!("{c:?} is not a {k}-cover")
        },
        json!({ "c": c, "k": k, "is_cover": holds, "violated_edges": violated }),
    ))
}

fn minimal_covers(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let k = cli.k.unwrap_or(1);
    let covers = core(minimal_k_covers(h, w, k))?;
    Ok(outcome(
        Verdict::Computed,
        format!("{} minimal {k}-covers", covers.len()),
        json!({
            "k": k,
            "weights": w.weights(),
            "covers": covers.iter().map(|c| c.entries().to_vec()).collect::<Vec<_>>(),
        }),
    ))
}

fn decompose_cmd(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let c = require_cover(cli)?;
    let k = require_k(cli)?;
    let parts = core(decompose(h, w, c, k))?;
    Ok(match parts {
        Some(parts) => outcome(
            Verdict::Holds,
            format!("{c:?} is a sum of {k} 1-covers"),
            json!({ "c": c, "k": k, "parts": parts }),
        ),
        None => outcome(
            Verdict::Refuted,
            format!("{c:?} is not a sum of {k} 1-covers"),
            json!({ "c": c, "k": k, "parts": null }),
        ),
    })
}

fn standard_graded(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let report = core(is_standard_graded_up_to(h, w, cli.max_k))?;
    let (verdict, summary) = match &report.failing_cover {
        None => (
            Verdict::Holds,
            format!("standard graded up to degree {}", cli.max_k),
        ),
        Some(c) => (
            Verdict::Refuted,
            format!(
                "{:?} is a {}-cover that is not a sum of {} 1-covers",
                c.entries(),
                c.order(),
                c.order()
            ),
        ),
    };
    Ok(outcome(
        verdict,
        summary,
        merge(json!({ "weights": w.weights() }), grading_json(&report)),
    ))
}

fn generators(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let gens = core(algebra_generators_up_to(h, w, cli.max_k))?;
    let higher = gens.iter().filter(|g| g.k >= 2).count();
    let list: Vec<Value> = gens
        .iter()
        .map(|g| {
            let m = Monomial(g.c.clone());
            json!({ "c": g.c, "k": g.k, "monomial": format!("{}*t^{}", m, g.k) })
        })
        .collect();
    Ok(outcome(
        Verdict::Computed,
        format!(
            "{} generators up to degree {}, {} of degree >= 2",
            gens.len(),
            cli.max_k,
            higher
        ),
        json!({ "max_k": cli.max_k, "weights": w.weights(), "generators": list, "standard_graded": higher == 0 }),
    ))
}

fn symbolic(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let k = cli.k.unwrap_or(1);
    let ideal = core(symbolic_power(h, w, k))?;
    Ok(outcome(
        Verdict::Computed,
        format!("symbolic power {k}: {} generators", ideal.generators().len()),
        merge(json!({ "k": k, "weights": w.weights() }), ideal_json(&ideal)),
    ))
}

fn power(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let k = cli.k.unwrap_or(1);
    let ideal = core(ideal_of(h, w))?.power(k);
    Ok(outcome(
        Verdict::Computed,
        format!("ordinary power {k}: {} generators", ideal.generators().len()),
        merge(json!({ "k": k, "weights": w.weights() }), ideal_json(&ideal)),
    ))
}

fn ks(cli: &Cli) -> Vec<u64> {
    match cli.k {
        Some(k) => vec![k],
        None => (1..=cli.max_k).collect(),
    }
}

fn ideal_equal(cli: &Cli, h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let base = core(ideal_of(h, w))?;
    let mut checked = Vec::new();
    for k in ks(cli) {
        let sym = core(symbolic_power(h, w, k))?;
        let ord = base.power(k);
        let separating = sym
            .generators()
            .iter()
            .find(|g| !ord.contains(g).expect("same ring"))
            .cloned();
        checked.push(k);
        if let Some(m) = separating {
            return Ok(outcome(
                Verdict::Refuted,
                format!("symbolic and ordinary power {k} differ at {m}"),
                json!({
                    "weights": w.weights(),
                    "checked_k": checked,
                    "equal": false,
                    "k": k,
                    "separating": monomial_json(&m),
                }),
            ));
        }
    }
    Ok(outcome(
        Verdict::Holds,
        format!("symbolic and ordinary powers agree for k in {checked:?}"),
        json!({ "weights": w.weights(), "checked_k": checked, "equal": true, "separating": null }),
    ))
}

fn vertices(h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    let verts = core(enumerate_vertices(&h.incidence_matrix(), w.weights()))?;
    let fractional = verts.iter().filter(|v| !v.is_integral()).count();
    Ok(outcome(
        Verdict::Computed,
        format!("{} vertices, {} fractional", verts.len(), fractional),
        json!({
            "weights": w.weights(),
            "vertices": verts.iter().map(point_json).collect::<Vec<_>>(),
        }),
    ))
}

fn integrality(h: &Hypergraph, w: &WeightFunction) -> CmdResult {
    Ok(
        match core(is_integral_polyhedron(&h.incidence_matrix(), w.weights()))? {
            Integrality::Integral => outcome(
                Verdict::Holds,
                "every vertex of the cover polyhedron is integral",
                json!({ "weights": w.weights(), "integral": true, "fractional_vertex": null }),
            ),
            Integrality::Fractional(p) => outcome(
                Verdict::Refuted,
                format!("fractional vertex {p}"),
                json!({ "weights": w.weights(), "integral": false, "fractional_vertex": point_json(&p) }),
            ),
        },
    )
}

fn mengerian(cli: &Cli, h: &Hypergraph) -> CmdResult {
    let report = core(is_mengerian_up_to(h, cli.c_bound))?;
    let (verdict, summary) = match &report.failure {
        None => (
            Verdict::Holds,
            format!("min-max equality holds for all costs up to {}", cli.c_bound),
        ),
        Some(f) => (
            Verdict::Refuted,
            format!(
                "at c = {:?}: min cover {} vs max packing {}",
                f.c, f.min_value, f.max_value
            ),
        ),
    };
    Ok(outcome(verdict, summary, mengerian_json(&report)))
}

fn crosscheck(cli: &Cli, h: &Hypergraph) -> CmdResult {
    let r = core(blocker_crosscheck(h, cli.max_k, cli.c_bound))?;
    let (verdict, label) = match r.agreement {
        Agreement::Agree => (Verdict::Holds, "agree"),
        Agreement::OneSided => (Verdict::Refuted, "one-sided"),
        Agreement::HardInconsistency => (Verdict::Refuted, "hard-inconsistency"),
    };
    Ok(outcome(
        verdict,
        format!(
            "grading {} / blocker min-max {}: {label}",
            if r.grading.is_standard() { "passes" } else { "fails" },
            if r.blocker_mengerian.passes() { "passes" } else { "fails" },
        ),
        json!({
            "agreement": label,
            "grading": grading_json(&r.grading),
            "blocker": edges_json(&r.blocker),
            "blocker_mengerian": mengerian_json(&r.blocker_mengerian),
        }),
    ))
}

fn theorem(cli: &Cli, h: &Hypergraph) -> CmdResult {
    let report = core(verify_main_theorem(h, cli.w_bound, cli.max_k))?;
    let contradiction = report.is_contradiction();
    let verdict = if contradiction {
        Verdict::Refuted
    } else {
        Verdict::Holds
    };
    let (summary, result) = match &report {
        TheoremReport::Unimodular {
            weights_checked,
            violations,
        } => (
            if violations.is_empty() {
                format!(
                    "totally unimodular; all {weights_checked} weight vectors standard graded up to degree {}",
                    cli.max_k
                )
            } else {
                format!(
                    "CONTRADICTION: totally unimodular but {} weight vectors fail",
                    violations.len()
                )
            },
            json!({
                "branch": "unimodular",
                "w_bound": cli.w_bound,
                "max_k": cli.max_k,
                "weights_checked": weights_checked,
                "violations": violations.iter().map(|(w, c)| json!({ "weights": w, "cover": cover_json(c) })).collect::<Vec<_>>(),
            }),
        ),
        TheoremReport::NotUnimodular {
            tu_witness,
            outcome: converse,
        } => {
            let witness = json!({
                "rows": tu_witness.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
                "cols": tu_witness.cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
                "determinant": tu_witness.determinant.to_string(),
            });
            match converse {
                ConverseOutcome::Witness {
                    weights,
                    vertex,
                    cover,
                    decomposes,
                } => (
                    if *decomposes {
                        format!("CONTRADICTION: scaled fractional vertex {vertex} decomposes")
                    } else {
                        format!(
                            "not totally unimodular; weights {weights:?} give {:?}, a {}-cover that is not a sum of 1-covers",
                            cover.entries(),
                            cover.order()
                        )
                    },
                    json!({
                        "branch": "not-unimodular",
                        "w_bound": cli.w_bound,
                        "tu_witness": witness,
                        "converse": "witness-found",
                        "weights": weights,
                        "fractional_vertex": point_json(vertex),
                        "cover": cover_json(cover),
                        "decomposes": decomposes,
                    }),
                ),
                ConverseOutcome::Exhausted => (
                    format!(
                        "not totally unimodular; no fractional vertex for weights up to {} (not a refutation)",
                        cli.w_bound
                    ),
                    json!({
                        "branch": "not-unimodular",
                        "w_bound": cli.w_bound,
                        "tu_witness": witness,
                        "converse": "no-witness-within-bound",
                    }),
                ),
            }
        }
    };
    Ok(outcome(verdict, summary, result))
}

fn veronese(cli: &Cli, h: &Hypergraph) -> CmdResult {
    let found = core(find_veronese_degree(h, cli.max_k, cli.d_max))?;
    Ok(match found {
        Some(d) => outcome(
            Verdict::Holds,
            format!("constant weight {d} is standard graded up to degree {}", cli.max_k),
            json!({ "max_k": cli.max_k, "d_max": cli.d_max, "d": d }),
        ),
        None => outcome(
            Verdict::Refuted,
            format!("no constant weight up to {} is standard graded up to degree {}", cli.d_max, cli.max_k),
            json!({ "max_k": cli.max_k, "d_max": cli.d_max, "d": null }),
        ),
    })
}

fn corollary(cli: &Cli) -> CmdResult {
    let n = cli.n.ok_or_else(|| "--n is required".to_string())?;
    let weights = cli.weights.clone().unwrap_or_else(|| vec![1; n + 1]);
    let mut checked = Vec::new();
    let mut unimodular = None;
    for k in ks(cli) {
        let r = core(corollary_points_check(n, &weights, k))?;
        unimodular = Some(r.unimodular);
        checked.push(k);
        if let Some(m) = &r.separating_monomial {
            return Ok(outcome(
                Verdict::Refuted,
                format!(
                    "DISCREPANCY with the general-position points corollary: at n = {n}, k = {k}, \
                     {m} lies in the intersection of the powers but not in the power of the intersection \
                     (the {}-subset hypergraph on {} vertices is not unimodular)",
                    n,
                    n + 1
                ),
                json!({
                    "n": n,
                    "weights": weights,
                    "checked_k": checked,
                    "k": k,
                    "equal": false,
                    "separating": monomial_json(m),
                    "unimodular": r.unimodular,
                    "corollary_discrepancy": true,
                    "hypergraph": edges_json(&r.hypergraph),
                }),
            ));
        }
    }
    Ok(outcome(
        Verdict::Holds,
        format!("power of the intersection equals the intersection of powers for k in {checked:?}"),
        json!({
            "n": n,
            "weights": weights,
            "checked_k": checked,
            "equal": true,
            "separating": null,
            "unimodular": unimodular,
            "corollary_discrepancy": false,
        }),
    ))
}
