use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};
use zdg_core::oracle::{self, Oracle};
use zdg_core::theorems::{self, DiameterAnswer};
use zdg_core::{verify, CheckKind, Error, Modulus, ZdGraph, DEFAULT_ORACLE_CAP};

use crate::args::{Command, Method, OutputFormat};
use crate::render;

pub const ORACLE_CAP_ENV: &str = "ZDG_ORACLE_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Disagree = 2,
    ResourceLimit = 3,
}

#[derive(Debug)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: ExitCode::Usage,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleCapExceeded { .. } => ExitCode::ResourceLimit,
            _ => ExitCode::Usage,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Text for stdout plus the exit code.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub code: ExitCode,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            code: ExitCode::Success,
        }
    }
}

pub struct Context {
    pub method: Option<Method>,
    pub format: Option<OutputFormat>,
    pub oracle_cap: u64,
}

/// Flag first, then the environment, then the built-in default.
pub fn resolve_oracle_cap(flag: Option<u64>, env: Option<String>) -> Result<u64, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match env {
        Some(raw) => raw.trim().parse::<u64>().map_err(|_| {
            Failure::usage(format!(
                "{ORACLE_CAP_ENV} must be a nonnegative integer, got `{raw}`"
            ))
        }),
        None => Ok(DEFAULT_ORACLE_CAP),
    }
}

impl Context {
    fn graph(&self, n: u64) -> Result<ZdGraph, Failure> {
        Ok(ZdGraph::new(n)?.with_oracle_cap(self.oracle_cap))
    }

    fn method_for(&self, n: u64) -> Method {
        self.method.unwrap_or(if n > self.oracle_cap {
            Method::Theorem
        } else {
            Method::Both
        })
    }

    fn json(&self) -> Result<bool, Failure> {
        match self.format {
            None | Some(OutputFormat::Text) => Ok(false),
            Some(OutputFormat::Json) => Ok(true),
            Some(f) => Err(Failure::usage(format!(
                "--format {f:?} is only valid for export"
            ))),
        }
    }
}

pub fn run(ctx: &Context, command: Command) -> Result<Output, Failure> {
    match command {
        Command::Info { n } => info(ctx, n),
        Command::Neighbors { n, a } => {
            let g = ctx.graph(n)?;
            query(
                ctx,
                &g,
                "neighbors",
                || Ok(Some(g.neighbors(a)?.collect::<Vec<_>>())),
                || oracle::neighbors_scan(&g, a),
                |v| render::vertex_set(v),
                |v| json!(v),
            )
        }
        Command::Degree { n, a } => {
            let g = ctx.graph(n)?;
            query(
                ctx,
                &g,
                "degree",
                || Ok(Some(theorems::degree_theorem(g.modulus(), a)?)),
                || Ok(oracle::neighbors_scan(&g, a)?.len() as u64),
                |d| d.to_string(),
                |d| json!(d),
            )
        }
        Command::Distance { n, a, b } => {
            let g = ctx.graph(n)?;
            query(
                ctx,
                &g,
                "distance",
                || {
                    g.vertex(a)?;
                    g.vertex(b)?;
                    Ok(theorems::prime_distance_theorem(g.modulus(), a, b)
                        .ok()
                        .map(Some))
                },
                || oracle::distance(&g, a, b),
                |d| d.map_or("unreachable".into(), |d| d.to_string()),
                |d| json!(d),
            )
        }
        Command::CutEdges { n } => {
            let g = ctx.graph(n)?;
            query(
                ctx,
                &g,
                "cut-edges",
                || Ok(Some(theorems::cut_edges_theorem(g.modulus()))),
                || Ok(oracle::bridges_oracle(&g)?.edges),
                |e| render::edge_set(e),
                |e| json!(e),
            )
        }
        Command::Center { n } => {
            let g = ctx.graph(n)?;
            query(
                ctx,
                &g,
                "center",
                || Ok(Some(theorems::center_theorem(g.modulus()).members)),
                || oracle::center_oracle(&g),
                |v| render::vertex_set(v),
                |v| json!(v),
            )
        }
        Command::Export { n, out } => export(ctx, n, out.as_deref()),
        Command::Verify {
            min,
            max,
            check,
            jobs,
            report,
        } => verify_cmd(ctx, min, max, check, jobs, report.as_deref()),
    }
}

/// Runs the requested engines and compares them when both ran.
/// `theorem` yields `None` when its closed form does not apply.
fn query<T: PartialEq>(
    ctx: &Context,
    g: &ZdGraph,
    name: &str,
    theorem: impl FnOnce() -> zdg_core::Result<Option<T>>,
    oracle: impl FnOnce() -> zdg_core::Result<T>,
    text: impl Fn(&T) -> String,
    to_json: impl Fn(&T) -> Value,
) -> Result<Output, Failure> {
    let json_out = ctx.json()?;
    let method = ctx.method_for(g.n());

    let closed = match method {
        Method::Theorem | Method::Both => Some(theorem()?),
        Method::Oracle => None,
    };
    let found = match method {
        Method::Oracle | Method::Both => Some(oracle()?),
        Method::Theorem => None,
    };
    if method == Method::Theorem && closed == Some(None) {
        return Err(Failure::usage(format!(
            "{name}: no closed form covers this input; try --method oracle"
        )));
    }
    let verdict = match (&closed, &found) {
        (Some(Some(t)), Some(o)) => Some(t == o),
        _ => None,
    };

    let stdout = if json_out {
        let mut obj = Map::new();
        obj.insert("n".into(), json!(g.n()));
        obj.insert("query".into(), json!(name));
        if let Some(t) = &closed {
            obj.insert(
                "theorem".into(),
                t.as_ref().map_or(json!("not-covered"), &to_json),
            );
        }
        if let Some(o) = &found {
            obj.insert("oracle".into(), to_json(o));
        }
        if let Some(agree) = verdict {
            obj.insert(
                "verdict".into(),
                json!(if agree { "agree" } else { "disagree" }),
            );
        }
        Value::Object(obj).to_string() + "\n"
    } else {
        let mut s = String::new();
        match (&closed, &found) {
            (Some(Some(t)), None) => writeln!(s, "{}", text(t)).unwrap(),
            (None, Some(o)) => writeln!(s, "{}", text(o)).unwrap(),
            _ => {
                let t = closed.as_ref().expect("both ran");
                let shown = t.as_ref().map_or("not covered".into(), &text);
                writeln!(s, "theorem: {shown}").unwrap();
                writeln!(s, "oracle:  {}", text(found.as_ref().expect("both ran"))).unwrap();
                if let Some(agree) = verdict {
                    s.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
                }
            }
        }
        s
    };
    Ok(Output {
        stdout,
        code: if verdict == Some(false) {
            ExitCode::Disagree
        } else {
            ExitCode::Success
        },
    })
}

fn info(ctx: &Context, n: u64) -> Result<Output, Failure> {
    let json_out = ctx.json()?;
    let g = ctx.graph(n)?;
    let m: &Modulus = g.modulus();
    let within_cap = g.ensure_within_cap();
    if ctx.method == Some(Method::Oracle) {
        within_cap.clone()?;
    }
    let oracle = match within_cap {
        Ok(()) if ctx.method != Some(Method::Theorem) => Some(Oracle::new(&g)?),
        _ => None,
    };

    let (diameter, source) = match theorems::diameter_theorem(m) {
        DiameterAnswer::Theorem(d) => (Some(Some(d)), "theorem"),
        DiameterAnswer::Extension(d) => (Some(d), "theorem"),
        DiameterAnswer::NotCovered => match &oracle {
            Some(o) => (Some(o.diameter()?), "oracle"),
            None => (None, "n/a"),
        },
    };
    let edges = oracle.as_ref().map(|o| o.edge_count() as u64);
    let center_size = theorems::center_theorem_size(m);
    let oracle_center = match &oracle {
        Some(o) => Some(o.center()?),
        None => None,
    };

    let stdout = if json_out {
        let factors: Vec<[u64; 2]> = m
            .factorization()
            .factors()
            .iter()
            .map(|&(p, e)| [p, u64::from(e)])
            .collect();
        let mut obj = Map::new();
        obj.insert("n".into(), json!(n));
        obj.insert("factorization".into(), json!(factors));
        obj.insert("vertices".into(), json!(g.vertex_count()));
        obj.insert("edges".into(), json!(edges));
        obj.insert("diameter".into(), json!(diameter.flatten()));
        obj.insert("diameter_source".into(), json!(source));
        obj.insert("center_theorem_size".into(), json!(center_size));
        obj.insert(
            "center_oracle_size".into(),
            json!(oracle_center.as_ref().map(Vec::len)),
        );
        Value::Object(obj).to_string() + "\n"
    } else {
        let mut s = String::new();
        writeln!(s, "n: {n}").unwrap();
        writeln!(s, "factorization: {}", m.factorization()).unwrap();
        writeln!(s, "vertices: {}", g.vertex_count()).unwrap();
        if g.is_empty() {
            s.push_str("empty graph\n");
            return Ok(Output::ok(s));
        }
        match edges {
            Some(e) => writeln!(s, "edges: {e}").unwrap(),
            None => s.push_str("edges: n/a (above oracle cap)\n"),
        }
        match diameter {
            Some(Some(d)) => writeln!(s, "diameter: {d} ({source})").unwrap(),
            Some(None) => s.push_str("diameter: none\n"),
            None => s.push_str("diameter: n/a\n"),
        }
        if center_size <= 32 {
            let members = theorems::center_theorem(m).members;
            writeln!(
                s,
                "center (theorem): {center_size} {}",
                render::vertex_set(&members)
            )
            .unwrap();
        } else {
            writeln!(s, "center (theorem): {center_size}").unwrap();
        }
        match &oracle_center {
            Some(c) if c.len() <= 32 => {
                writeln!(s, "center (oracle): {} {}", c.len(), render::vertex_set(c)).unwrap()
            }
            Some(c) => writeln!(s, "center (oracle): {}", c.len()).unwrap(),
            None => s.push_str("center (oracle): n/a\n"),
        }
        s
    };
    Ok(Output::ok(stdout))
}

fn export(ctx: &Context, n: u64, out: Option<&Path>) -> Result<Output, Failure> {
    let g = ctx.graph(n)?;
    let body = match ctx.format.unwrap_or(OutputFormat::Dot) {
        OutputFormat::Dot => render::dot(&g)?,
        OutputFormat::Json => render::graph_json(&g)?,
        OutputFormat::Csv => render::csv(&g)?,
        OutputFormat::Text => {
            return Err(Failure::usage("export supports --format dot, json or csv"))
        }
    };
    match out {
        Some(path) => {
            write_file(path, &body)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(body)),
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn verify_cmd(
    ctx: &Context,
    min: u64,
    max: u64,
    mut checks: Vec<CheckKind>,
    jobs: usize,
    report: Option<&Path>,
) -> Result<Output, Failure> {
    let json_out = ctx.json()?;
    if jobs == 0 {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    if checks.is_empty() {
        checks = CheckKind::ALL.to_vec();
    }
    let reports = verify::run_suite(min, max, &checks, jobs, ctx.oracle_cap)?;
    let doc = render::report_json((min, max), &reports);
    if let Some(path) = report {
        write_file(path, &doc)?;
    }
    let stdout = if json_out {
        doc
    } else {
        render::report_text(&reports)
    };
    let code = if reports.iter().any(|r| r.has_disagreements()) {
        ExitCode::Disagree
    } else {
        ExitCode::Success
    };
    Ok(Output { stdout, code })
}
