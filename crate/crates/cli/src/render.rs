//! Stable text, DOT, CSV and JSON renderings.

use std::fmt::Write;

use serde::Serialize;
use zdg_core::verify::{Discrepancy, VerificationReport};
use zdg_core::{CheckKind, Edge, Result, Vertex, ZdGraph};

/// `{a,b,c}`
pub fn vertex_set(vs: &[Vertex]) -> String {
    let body: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", body.join(","))
}

/// `{(a,b),(c,d)}`
pub fn edge_set(es: &[Edge]) -> String {
    let body: Vec<String> = es.iter().map(|e| format!("({},{})", e.lo, e.hi)).collect();
    format!("{{{}}}", body.join(","))
}

pub fn dot(g: &ZdGraph) -> Result<String> {
    let mut out = format!("graph zdg_{} {{\n", g.n());
    let edges: Vec<Edge> = g.edges()?.collect();
    let mut touched = vec![false; g.n() as usize];
    for e in &edges {
        touched[e.lo.0 as usize] = true;
        touched[e.hi.0 as usize] = true;
    }
    for v in g.vertices().filter(|v| !touched[v.0 as usize]) {
        writeln!(out, "  {v};").unwrap();
    }
    for e in &edges {
        writeln!(out, "  {} -- {};", e.lo, e.hi).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[derive(Serialize)]
struct GraphJson {
    n: u64,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

pub fn graph_json(g: &ZdGraph) -> Result<String> {
    let doc = GraphJson {
        n: g.n(),
        vertices: g.vertices().collect(),
        edges: g.edges()?.collect(),
    };
    Ok(serde_json::to_string(&doc).expect("plain data serializes") + "\n")
}

pub fn csv(g: &ZdGraph) -> Result<String> {
    let mut out = String::from("lo,hi\n");
    for e in g.edges()? {
        writeln!(out, "{},{}", e.lo, e.hi).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct ReportFile<'a> {
    range: [u64; 2],
    checks: Vec<CheckEntry<'a>>,
}

#[derive(Serialize)]
struct CheckEntry<'a> {
    check: CheckKind,
    agree: u64,
    disagree: u64,
    skipped: u64,
    discrepancies: &'a [Discrepancy],
}

/// The verify report file: one line of JSON, keys in fixed order.
pub fn report_json(range: (u64, u64), reports: &[VerificationReport]) -> String {
    let doc = ReportFile {
        range: [range.0, range.1],
        checks: reports
            .iter()
            .map(|r| CheckEntry {
                check: r.check,
                agree: r.summary.agree,
                disagree: r.summary.disagree,
                skipped: r.summary.skipped,
                discrepancies: &r.discrepancies,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}

pub fn report_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(
            out,
            "{:<15} agree {:>6}  disagree {:>6}  skipped {:>6}",
            r.check.name(),
            r.summary.agree,
            r.summary.disagree,
            r.summary.skipped
        )
        .unwrap();
        if r.has_disagreements() {
            let ns: Vec<String> = r.disagreeing_n().iter().map(u64::to_string).collect();
            writeln!(out, "  disagree at n = {}", ns.join(", ")).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u64) -> ZdGraph {
        ZdGraph::new(n).unwrap()
    }

    #[test]
    fn dot_output() {
        assert_eq!(
            dot(&g(8)).unwrap(),
            "graph zdg_8 {\n  2 -- 4;\n  4 -- 6;\n}\n"
        );
        assert_eq!(dot(&g(7)).unwrap(), "graph zdg_7 {\n}\n");
        assert_eq!(dot(&g(4)).unwrap(), "graph zdg_4 {\n  2;\n}\n");
    }

    #[test]
    fn json_and_csv_output() {
        assert_eq!(
            graph_json(&g(6)).unwrap(),
            "{\"n\":6,\"vertices\":[2,3,4],\"edges\":[[2,3],[3,4]]}\n"
        );
        assert_eq!(csv(&g(6)).unwrap(), "lo,hi\n2,3\n3,4\n");
        assert_eq!(csv(&g(5)).unwrap(), "lo,hi\n");
    }

    #[test]
    fn set_formatting() {
        assert_eq!(vertex_set(&[Vertex(2), Vertex(3), Vertex(4)]), "{2,3,4}");
        assert_eq!(vertex_set(&[]), "{}");
        assert_eq!(
            edge_set(&[Edge::new(2, 4), Edge::new(4, 6)]),
            "{(2,4),(4,6)}"
        );
    }

    #[test]
    fn report_layout() {
        let reports = zdg_core::verify::run_suite(2, 10, &[CheckKind::Center], 1, 100).unwrap();
        let json = report_json((2, 10), &reports);
        assert!(json.starts_with(
            "{\"range\":[2,10],\"checks\":[{\"check\":\"center\",\"agree\":7,\"disagree\":2,\"skipped\":0,\"discrepancies\":[{\"n\":6,\"theorem\":[2,3,4],\"oracle\":[3]}"
        ), "{json}");
    }
}
