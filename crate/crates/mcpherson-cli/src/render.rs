//! Text and JSON renderings of the reports.
//!
//! JSON objects use the fixed top-level fields `command`, `input`, `upsilon`,
//! `upsilon_star`, `discrepancy`, `stable`, `witness`,
//! `trace: [{vertex, arcs: [[u, v], ...]}]`, `table`, and `violations`;
//! sections a command does not produce are omitted. Text and JSON carry the
//! same data, and both are byte-identical across runs for the same inputs.

use std::fmt::Write as _;

use serde_json::{json, Value};

use mcpherson::engine::{GapReport, UpsilonCertificate};
use mcpherson::families::jaco::{ConjectureReport, JacoTableRow};
use mcpherson::graph::{ExplosionTrace, SimpleGraph, VertexId};

use crate::Format;

fn arcs_text(arcs: &[(VertexId, VertexId)]) -> String {
    arcs.iter()
        .map(|(a, b)| format!("({},{})", a.index(), b.index()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn trace_text(out: &mut String, trace: &ExplosionTrace) {
    for (i, step) in trace.steps().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {}: explode {} -> {}",
            i + 1,
            step.vertex(),
            arcs_text(step.arcs_added())
        );
    }
}

fn trace_json(trace: &ExplosionTrace) -> Value {
    Value::Array(
        trace
            .steps()
            .iter()
            .map(|step| {
                json!({
                    "vertex": step.vertex().index(),
                    "arcs": step
                        .arcs_added()
                        .iter()
                        .map(|(a, b)| json!([a.index(), b.index()]))
                        .collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn compute_report(
    input: &str,
    graph: &SimpleGraph,
    greedy: &ExplosionTrace,
    exact: Option<&(UpsilonCertificate, u32)>,
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "input: {input}");
            let _ = writeln!(out, "vertices: {}", graph.vertex_count());
            let _ = writeln!(out, "edges: {}", graph.edge_count());
            if let Some((certificate, star)) = exact {
                let upsilon = certificate.value();
                let _ = writeln!(out, "upsilon: {upsilon}");
                let _ = writeln!(out, "upsilon*: {star}");
                let _ = writeln!(out, "discrepancy: {}", star - upsilon);
                let _ = writeln!(out, "stable: {}", star - upsilon == 0);
                let witness = certificate
                    .witness_set()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(out, "witness: {witness}");
                let _ = writeln!(
                    out,
                    "mcpherson graph: {}",
                    arcs_text(&certificate.trace().explosion_arcs())
                );
                let _ = writeln!(out, "optimal trace ({upsilon} explosions):");
                trace_text(&mut out, certificate.trace());
            }
            let _ = writeln!(
                out,
                "greedy trace (lowest-index, {} explosions):",
                greedy.len()
            );
            trace_text(&mut out, greedy);
            out
        }
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert("command".into(), json!("compute"));
            object.insert("input".into(), json!(input));
            match exact {
                Some((certificate, star)) => {
                    let upsilon = certificate.value();
                    object.insert("upsilon".into(), json!(upsilon));
                    object.insert("upsilon_star".into(), json!(star));
                    object.insert("discrepancy".into(), json!(star - upsilon));
                    object.insert("stable".into(), json!(star - upsilon == 0));
                    object.insert(
                        "witness".into(),
                        json!(certificate
                            .witness_set()
                            .iter()
                            .map(|v| v.index())
                            .collect::<Vec<_>>()),
                    );
                    object.insert("trace".into(), trace_json(certificate.trace()));
                }
                None => {
                    object.insert("trace".into(), trace_json(greedy));
                }
            }
            format!("{}\n", Value::Object(object))
        }
    }
}

pub fn jaco_table_report(n_max: u32, rows: &[JacoTableRow], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::from("n    d-(v_n)  d+(v_n)  prime  upsilon\n");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:<4} {:<8} {:<8} {:<6} {}",
                    row.n,
                    row.in_degree,
                    row.out_degree,
                    row.prime_jaconian.to_string(),
                    row.upsilon
                );
            }
            out
        }
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "n": row.n,
                        "in_degree": row.in_degree,
                        "out_degree": row.out_degree,
                        "prime": row.prime_jaconian.index(),
                        "upsilon": row.upsilon,
                    })
                })
                .collect();
            format!(
                "{}\n",
                json!({
                    "command": "jaco-table",
                    "input": n_max.to_string(),
                    "table": table,
                })
            )
        }
    }
}

pub fn conjecture_report(report: &ConjectureReport, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "range: 3..={}", report.n_max);
            let _ = writeln!(
                out,
                "unique out-degree at: {}",
                join_u32(&report.unique_out_degree_indices())
            );
            let _ = writeln!(
                out,
                "unique upsilon at: {}",
                join_u32(&report.unique_upsilon_indices())
            );
            let _ = writeln!(out, "violations: {}", report.violations.len());
            for n in &report.violations {
                let _ = writeln!(out, "  biconditional fails at n = {n}");
            }
            let _ = writeln!(
                out,
                "note: uniqueness is judged within the scanned range only"
            );
            out
        }
        Format::Json => {
            let table: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "n": row.n,
                        "out_degree": row.out_degree,
                        "upsilon": row.upsilon,
                        "out_degree_unique": row.out_degree_unique,
                        "upsilon_unique": row.upsilon_unique,
                    })
                })
                .collect();
            format!(
                "{}\n",
                json!({
                    "command": "conjecture",
                    "input": report.n_max.to_string(),
                    "violations": report.violations,
                    "table": table,
                })
            )
        }
    }
}

fn join_u32(values: &[u32]) -> String {
    if values.is_empty() {
        "none".to_string()
    } else {
        values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn scan_report(input: &str, labels: &[String], report: &GapReport, format: Format) -> String {
    let policy_names: Vec<String> = report.policies.iter().map(|p| p.to_string()).collect();
    match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "scan: {input}");
            let _ = writeln!(out, "policies: {}", policy_names.join(" "));
            let _ = writeln!(
                out,
                "instance  n   m    exact  {}  best  worst  flags",
                policy_names.join("  ")
            );
            for row in &report.rows {
                let label = &labels[row.index];
                match &row.analysis {
                    Ok(analysis) => {
                        let lengths = analysis
                            .policy_lengths
                            .iter()
                            .zip(&policy_names)
                            .map(|(len, name)| {
                                let cell = match len {
                                    Some(l) => l.to_string(),
                                    None => "-".to_string(),
                                };
                                format!("{cell:<width$}", width = name.len())
                            })
                            .collect::<Vec<_>>()
                            .join("  ");
                        let mut flags = Vec::new();
                        if analysis.policy_sensitive() {
                            flags.push("policy-sensitive");
                        }
                        if analysis.hard_counterexample() {
                            flags.push("hard");
                        }
                        let flags = if flags.is_empty() {
                            "-".to_string()
                        } else {
                            flags.join(",")
                        };
                        let _ = writeln!(
                            out,
                            "{:<9} {:<3} {:<4} {:<6} {}  {:<5} {:<6} {}",
                            label,
                            row.vertex_count,
                            row.edge_count,
                            analysis.exact,
                            lengths,
                            analysis.best_respecting,
                            analysis.worst_respecting,
                            flags
                        );
                    }
                    Err(e) => {
                        let _ = writeln!(out, "{label:<9} {e}");
                    }
                }
            }
            let _ = writeln!(
                out,
                "summary: {} instances, {} policy-sensitive, {} hard counterexamples",
                report.rows.len(),
                report.policy_sensitive_count(),
                report.hard_counterexample_count()
            );
            out
        }
        Format::Json => {
            let table: Vec<Value> = report
                .rows
                .iter()
                .map(|row| {
                    let label = &labels[row.index];
                    match &row.analysis {
                        Ok(analysis) => {
                            let lengths: serde_json::Map<String, Value> = policy_names
                                .iter()
                                .zip(&analysis.policy_lengths)
                                .map(|(name, len)| (name.clone(), json!(len)))
                                .collect();
                            json!({
                                "instance": label,
                                "n": row.vertex_count,
                                "m": row.edge_count,
                                "exact": analysis.exact,
                                "lengths": lengths,
                                "best": analysis.best_respecting,
                                "worst": analysis.worst_respecting,
                                "policy_sensitive": analysis.policy_sensitive(),
                                "hard_counterexample": analysis.hard_counterexample(),
                            })
                        }
                        Err(e) => json!({
                            "instance": label,
                            "n": row.vertex_count,
                            "m": row.edge_count,
                            "error": e.to_string(),
                        }),
                    }
                })
                .collect();
            format!(
                "{}\n",
                json!({
                    "command": "scan",
                    "input": input,
                    "table": table,
                })
            )
        }
    }
}
