//! Sweep harness: run the theorem engine and the oracle side by side over a
//! range of moduli and record every disagreement.
//!
//! Each `n` is evaluated independently; results are merged in ascending `n`
//! so a report never depends on how many workers produced it.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::Modulus;
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::theorems::{self, DiameterAnswer};
use crate::zdgraph::{Edge, Vertex, ZdGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    CutEdges,
    Center,
    Degree,
    Diameter,
    Connectivity,
    PrimeDistance,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::CutEdges,
        CheckKind::Center,
        CheckKind::Degree,
        CheckKind::Diameter,
        CheckKind::Connectivity,
        CheckKind::PrimeDistance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::CutEdges => "cut-edges",
            CheckKind::Center => "center",
            CheckKind::Degree => "degree",
            CheckKind::Diameter => "diameter",
            CheckKind::Connectivity => "connectivity",
            CheckKind::PrimeDistance => "prime-distance",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_owned()))
    }
}

impl Serialize for CheckKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Disagree,
    Skipped,
}

/// One engine's answer, in a shape that serializes naturally to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Answer {
    Vertices(Vec<Vertex>),
    Edges(Vec<Edge>),
    Diameter(Option<u32>),
    /// `[vertex, degree]` pairs.
    Degrees(Vec<[u64; 2]>),
    /// `[p, q, distance]` triples; distance `None` if unreachable.
    Distances(Vec<(u64, u64, Option<u32>)>),
    Connectivity {
        connected: bool,
        diameter: Option<u32>,
    },
    /// A bound rather than a value.
    Claim(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NResult {
    pub n: u64,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: u64,
    pub theorem: Answer,
    pub oracle: Answer,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub agree: u64,
    pub disagree: u64,
    pub skipped: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub range: (u64, u64),
    pub check: CheckKind,
    pub per_n: Vec<NResult>,
    pub summary: Summary,
    pub discrepancies: Vec<Discrepancy>,
}

impl VerificationReport {
    pub fn has_disagreements(&self) -> bool {
        self.summary.disagree > 0
    }

    /// The `n` values that disagreed, ascending.
    pub fn disagreeing_n(&self) -> Vec<u64> {
        self.discrepancies.iter().map(|d| d.n).collect()
    }

    fn assemble(range: (u64, u64), check: CheckKind, rows: Vec<Outcome>) -> Self {
        let mut summary = Summary::default();
        let mut per_n = Vec::with_capacity(rows.len());
        let mut discrepancies = Vec::new();
        for (row, mismatch) in rows {
            match row.status {
                Status::Agree => summary.agree += 1,
                Status::Disagree => summary.disagree += 1,
                Status::Skipped => summary.skipped += 1,
            }
            per_n.push(row);
            discrepancies.extend(mismatch);
        }
        VerificationReport {
            range,
            check,
            per_n,
            summary,
            discrepancies,
        }
    }
}

type Outcome = (NResult, Option<Discrepancy>);

fn validate_range(n_min: u64, n_max: u64, oracle_cap: u64) -> Result<()> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidRange {
            min: n_min,
            max: n_max,
        });
    }
    if n_max > oracle_cap {
        return Err(Error::OracleCapExceeded {
            n: n_max,
            cap: oracle_cap,
        });
    }
    Ok(())
}

/// Runs one check over `[n_min, n_max]` on the current thread.
pub fn run_check(
    n_min: u64,
    n_max: u64,
    check: CheckKind,
    oracle_cap: u64,
) -> Result<VerificationReport> {
    validate_range(n_min, n_max, oracle_cap)?;
    let rows = (n_min..=n_max)
        .map(|n| evaluate(n, check, oracle_cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::assemble((n_min, n_max), check, rows))
}

/// Runs several checks with `parallelism` worker threads. The reports are
/// identical for every degree of parallelism.
pub fn run_suite(
    n_min: u64,
    n_max: u64,
    checks: &[CheckKind],
    parallelism: usize,
    oracle_cap: u64,
) -> Result<Vec<VerificationReport>> {
    validate_range(n_min, n_max, oracle_cap)?;
    if parallelism <= 1 {
        return checks
            .iter()
            .map(|&c| run_check(n_min, n_max, c, oracle_cap))
            .collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("failed to start worker pool");
    pool.install(|| {
        checks
            .iter()
            .map(|&check| {
                let rows = (n_min..=n_max)
                    .into_par_iter()
                    .map(|n| evaluate(n, check, oracle_cap))
                    .collect::<Result<Vec<_>>>()?;
                Ok(VerificationReport::assemble((n_min, n_max), check, rows))
            })
            .collect()
    })
}

fn verdict(n: u64, theorem: Answer, oracle: Answer, detail: String) -> Outcome {
    let agree = theorem == oracle;
    outcome(n, agree, theorem, oracle, detail)
}

fn outcome(n: u64, agree: bool, theorem: Answer, oracle: Answer, detail: String) -> Outcome {
    if agree {
        (
            NResult {
                n,
                status: Status::Agree,
                detail,
            },
            None,
        )
    } else {
        (
            NResult {
                n,
                status: Status::Disagree,
                detail,
            },
            Some(Discrepancy { n, theorem, oracle }),
        )
    }
}

fn skipped(n: u64, detail: impl Into<String>) -> Outcome {
    (
        NResult {
            n,
            status: Status::Skipped,
            detail: detail.into(),
        },
        None,
    )
}

/// Compares both engines on a single modulus.
pub fn evaluate(n: u64, check: CheckKind, oracle_cap: u64) -> Result<Outcome> {
    let modulus = Modulus::new(n)?;
    let graph = ZdGraph::from_modulus(modulus.clone()).with_oracle_cap(oracle_cap);
    let oracle = Oracle::new(&graph)?;

    Ok(match check {
        CheckKind::CutEdges => {
            let theorem = theorems::cut_edges_theorem(&modulus);
            let found = oracle.bridges().edges;
            let detail = format!("{} cut edges", found.len());
            verdict(n, Answer::Edges(theorem), Answer::Edges(found), detail)
        }
        CheckKind::Center => {
            let theorem = theorems::center_theorem(&modulus).members;
            let found = oracle.center()?;
            let detail = format!("center of {} vertices", found.len());
            verdict(
                n,
                Answer::Vertices(theorem),
                Answer::Vertices(found),
                detail,
            )
        }
        CheckKind::Degree => {
            let mut theorem = Vec::new();
            let mut found = Vec::new();
            for v in graph.vertices() {
                let closed = theorems::degree_theorem(&modulus, v.0)?;
                let counted = graph.neighbors(v.0)?.count() as u64;
                if closed != counted {
                    theorem.push([v.0, closed]);
                    found.push([v.0, counted]);
                }
            }
            let detail = format!("{} vertices", graph.vertex_count());
            verdict(n, Answer::Degrees(theorem), Answer::Degrees(found), detail)
        }
        CheckKind::Diameter => match theorems::diameter_theorem(&modulus) {
            DiameterAnswer::NotCovered => skipped(n, "not covered by closed form"),
            answer => {
                let closed = answer.value().expect("covered");
                let found = oracle.diameter()?;
                let detail = match answer {
                    DiameterAnswer::Extension(_) => "extension case",
                    _ => "two primes, n > pq",
                };
                verdict(
                    n,
                    Answer::Diameter(closed),
                    Answer::Diameter(found),
                    detail.into(),
                )
            }
        },
        CheckKind::Connectivity => {
            let connected = oracle.is_connected();
            let diameter = if connected { oracle.diameter()? } else { None };
            let bounded = connected && diameter.is_none_or(|d| d <= 3);
            outcome(
                n,
                bounded,
                Answer::Claim("connected, diameter <= 3".into()),
                Answer::Connectivity {
                    connected,
                    diameter,
                },
                format!("{} vertices", oracle.len()),
            )
        }
        CheckKind::PrimeDistance => {
            let pairs = theorems::eligible_prime_pairs(&modulus);
            if pairs.is_empty() {
                skipped(n, "no prime pair with n > pq")
            } else {
                let mut theorem = Vec::with_capacity(pairs.len());
                let mut found = Vec::with_capacity(pairs.len());
                for &(p, q) in &pairs {
                    let closed = theorems::prime_distance_theorem(&modulus, p, q)?;
                    theorem.push((p, q, Some(closed)));
                    found.push((p, q, oracle.distance(p, q)?));
                }
                let detail = format!("{} prime pairs", pairs.len());
                verdict(
                    n,
                    Answer::Distances(theorem),
                    Answer::Distances(found),
                    detail,
                )
            }
        }
    })
}
