use crate::error::{usage, Result};
use crate::input::{GraphSource, Op};
use crate::names::NameTable;
use crate::{Cli, Command, Construction, Format, Output};
use gselc::graph::GraphFile;
use gselc::logical::{verify_chain_elc_steps, verify_cs2_equivalence, ClusterComparison, ConstructionSummary};
use gselc::suites;
use gselc::{Graph, OracleConfig, QuadraticForm, Report};
use serde::Serialize;
use std::fmt::Write;

const THEOREM1_MAX_PART: usize = 6;
const RANDOM_GRAPH_MAX_N: usize = 8;
const PROPERTY_MAX_N: usize = 5;

pub fn run(cli: &Cli) -> Result<Output> {
    let config = OracleConfig {
        max_qubits: cli.max_qubits as usize,
        tol: cli.tol,
    };
    match &cli.command {
        Command::Graph { spec } => {
            let g = GraphSource::parse(spec)?.load()?;
            render_graph(&g, cli.format, &NameTable::default())
        }
        Command::Export { input } => {
            let g = GraphSource::parse(input)?.load()?;
            render_graph(&g, cli.format, &NameTable::default())
        }
        Command::Apply {
            ops,
            graph,
            trace,
            names,
        } => {
            let names = match names {
                Some(list) => NameTable::parse(list)?,
                None => NameTable::default(),
            };
            let g = GraphSource::parse(graph)?.load()?;
            names.check_covers(g.n())?;
            let ops = ops.iter().map(|t| Op::parse(t, &names)).collect::<Result<Vec<_>>>()?;
            apply(g, &ops, *trace, cli.format, &names)
        }
        Command::Verify { suite, trials, seed } => {
            let report = verify(suite, *trials, *seed, &config)?;
            render_report(&report, cli.format)
        }
        Command::Encode {
            construction,
            n_logical,
        } => encode(*construction, *n_logical, &config, cli.format),
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn render_graph(g: &Graph, format: Option<Format>, names: &NameTable) -> Result<Output> {
    let body = match format.unwrap_or(Format::Json) {
        Format::Json => g.to_json() + "\n",
        Format::Dot => g.to_dot(),
        Format::Text => names.render_form(&QuadraticForm::from_graph(g)) + "\n",
    };
    Ok(Output { body, passed: true })
}

#[derive(Serialize)]
struct TraceStep {
    op: String,
    step: String,
    graph: GraphFile,
}

#[derive(Serialize)]
struct Traced {
    trace: Vec<TraceStep>,
    result: GraphFile,
}

fn apply(mut g: Graph, ops: &[Op], trace: bool, format: Option<Format>, names: &NameTable) -> Result<Output> {
    let mut steps = Vec::new();
    for op in ops {
        let next = match *op {
            Op::Lc(v) => g.local_complement(v)?,
            Op::Elc(a, b) => g.edge_local_complement(a, b)?,
        };
        if trace {
            match *op {
                Op::Lc(v) => steps.push((op.label(names), format!("lc:{}", names.label(v)), next.clone())),
                Op::Elc(a, b) => {
                    let graphs = g.edge_local_complement_trace(a, b)?;
                    for (vertex, graph) in [a, b, a].into_iter().zip(graphs) {
                        steps.push((op.label(names), format!("lc:{}", names.label(vertex)), graph));
                    }
                }
            }
        }
        g = next;
    }
    if !trace {
        return render_graph(&g, format, names);
    }

    let body = match format.unwrap_or(Format::Json) {
        Format::Json => {
            let trace = steps
                .into_iter()
                .map(|(op, step, graph)| TraceStep {
                    op,
                    step,
                    graph: GraphFile::from(&graph),
                })
                .collect();
            json_line(&Traced {
                trace,
                result: GraphFile::from(&g),
            })
        }
        Format::Dot => {
            let mut out = String::new();
            for (op, step, graph) in &steps {
                writeln!(out, "// {op}: after {step}").unwrap();
                out.push_str(&graph.to_dot());
            }
            out.push_str("// result\n");
            out.push_str(&g.to_dot());
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (op, step, graph) in &steps {
                writeln!(
                    out,
                    "{op}: after {step}: {}",
                    names.render_form(&QuadraticForm::from_graph(graph))
                )
                .unwrap();
            }
            writeln!(out, "result: {}", names.render_form(&QuadraticForm::from_graph(&g))).unwrap();
            out
        }
    };
    Ok(Output { body, passed: true })
}

fn verify(suite: &str, trials: Option<usize>, seed: u64, config: &OracleConfig<f64>) -> Result<Report> {
    let report = match suite {
        "theorem1" => suites::theorem1_suite(trials.unwrap_or(200), THEOREM1_MAX_PART, seed, config)?,
        "vertex-lc" => suites::vertex_lc_suite(trials.unwrap_or(100), RANDOM_GRAPH_MAX_N, seed, config)?,
        "stabilizers" => suites::stabilizer_suite(trials.unwrap_or(50), RANDOM_GRAPH_MAX_N, seed, config)?,
        "properties" => suites::lc_property_suite(PROPERTY_MAX_N),
        "cs2" => verify_cs2_equivalence(config)?,
        _ => match suite.strip_prefix("chain:") {
            Some(n) => {
                let n: usize = n
                    .parse()
                    .map_err(|_| usage(format!("expected chain:N, got {suite:?}")))?;
                let mut report = verify_chain_elc_steps(n, config)?;
                report.absorb("", ClusterComparison::run(n, config)?.report);
                report
            }
            None => {
                return Err(usage(format!(
                    "unknown suite {suite:?}; expected theorem1, vertex-lc, stabilizers, properties, cs2 or chain:N"
                )))
            }
        },
    };
    Ok(report)
}

fn render_report(report: &Report, format: Option<Format>) -> Result<Output> {
    let body = match format.unwrap_or(Format::Json) {
        Format::Json => json_line(report),
        Format::Text => {
            let mut out = String::new();
            for check in &report.checks {
                let status = match (check.asserted, check.passed) {
                    (false, _) => "NOTE",
                    (true, true) => "PASS",
                    (true, false) => "FAIL",
                };
                write!(out, "{status} {}", check.label).unwrap();
                if let (Some(d), Some(t)) = (check.max_diff, check.tol) {
                    write!(out, " (max diff {d:.3e}, tol {t:.0e})").unwrap();
                }
                out.push('\n');
            }
            for note in &report.notes {
                writeln!(out, "# {note}").unwrap();
            }
            let verdict = if report.passed { "passed" } else { "FAILED" };
            writeln!(out, "{}: {verdict}", report.suite).unwrap();
            out
        }
        Format::Dot => return Err(usage("reports render as json or text")),
    };
    Ok(Output {
        body,
        passed: report.passed,
    })
}

fn encode(which: Construction, n_logical: usize, config: &OracleConfig<f64>, format: Option<Format>) -> Result<Output> {
    let cmp = ClusterComparison::run(n_logical, config)?;
    let [direct, elc] = cmp.summaries();
    let chosen: Vec<ConstructionSummary> = match which {
        Construction::Direct => vec![direct],
        Construction::Elc => vec![elc],
        Construction::Both => vec![direct, elc],
    };
    let passed = cmp.report.passed;
    let body = match format.unwrap_or(Format::Json) {
        Format::Json if chosen.len() == 1 => json_line(&chosen[0]),
        Format::Json => json_line(&chosen),
        Format::Text => {
            let mut out = String::new();
            for s in &chosen {
                writeln!(
                    out,
                    "{}: n_logical {}, {} CZ, {} H, equal to reference: {} (max diff {:.3e})",
                    s.construction, s.n_logical, s.cz_count, s.hadamard_count, s.equal_to_reference, s.max_amp_diff
                )
                .unwrap();
            }
            out
        }
        Format::Dot => return Err(usage("encode reports render as json or text")),
    };
    Ok(Output { body, passed })
}
