//! Closed-form answers computed from the factorization of `n` and gcds.
//!
//! No graph traversal happens here, so everything runs for any modulus up to
//! `2^63 - 1` once it has been factored.

use serde::Serialize;

use crate::arith::{mulmod, Modulus};
use crate::error::{Error, Result};
use crate::zdgraph::{Edge, Vertex};

fn check_vertex(m: &Modulus, a: u64) -> Result<u64> {
    if a >= 1 && a < m.value() && m.gcd_with(a) > 1 {
        Ok(a)
    } else {
        Err(Error::NotAVertex {
            n: m.value(),
            value: a,
        })
    }
}

fn check_edge(m: &Modulus, a: u64, b: u64) -> Result<()> {
    check_vertex(m, a)?;
    check_vertex(m, b)?;
    if a == b || mulmod(a, b, m.value()) != 0 {
        return Err(Error::NotAnEdge { n: m.value(), a, b });
    }
    Ok(())
}

/// Whether the edge `(a, b)` is a cut edge: after ordering the endpoints,
/// `gcd(a, n) = 2`, `gcd(b, n) >= 3` and `2b = n`.
pub fn is_cut_edge_theorem(m: &Modulus, a: u64, b: u64) -> Result<bool> {
    check_edge(m, a, b)?;
    let n = m.value();
    let oriented = |x: u64, y: u64| m.gcd_with(x) == 2 && m.gcd_with(y) >= 3 && 2 * y == n;
    Ok(oriented(a, b) || oriented(b, a))
}

/// The shorter form of the cut-edge test, without the `gcd(b, n) >= 3`
/// clause. Agrees with [`is_cut_edge_theorem`] on every edge.
pub fn is_cut_edge_short_form(m: &Modulus, a: u64, b: u64) -> Result<bool> {
    check_edge(m, a, b)?;
    let n = m.value();
    let oriented = |x: u64, y: u64| m.gcd_with(x) == 2 && 2 * y == n;
    Ok(oriented(a, b) || oriented(b, a))
}

/// All cut edges: `(a, n/2)` for every `a` with `gcd(a, n) = 2`, provided
/// `gcd(n/2, n) >= 3`. Empty for odd `n`.
pub fn cut_edges_theorem(m: &Modulus) -> Vec<Edge> {
    let n = m.value();
    if !n.is_multiple_of(2) {
        return Vec::new();
    }
    let half = n / 2;
    // gcd(n/2, n) = n/2
    if half < 3 {
        return Vec::new();
    }
    // gcd(2k, n) = 2 * gcd(k, n/2)
    let mut edges: Vec<Edge> = (1..half)
        .filter(|&k| crate::arith::gcd_or_zero(k, half) == 1)
        .map(|k| Edge::new(2 * k, half))
        .collect();
    edges.sort_unstable();
    edges
}

/// The union of `ann(p) \ {0}` over the primes `p` dividing `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CenterFormula {
    pub members: Vec<Vertex>,
}

impl CenterFormula {
    pub fn contains(&self, a: u64) -> bool {
        self.members.binary_search(&Vertex(a)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumerates the center formula. The result has `sum(p - 1)` members, so
/// for huge prime factors prefer [`is_center_member`].
pub fn center_theorem(m: &Modulus) -> CenterFormula {
    if m.is_prime() {
        return CenterFormula {
            members: Vec::new(),
        };
    }
    let n = m.value();
    let mut members: Vec<Vertex> = m
        .primes()
        .flat_map(|p| {
            let step = n / p;
            (1..p).map(move |k| Vertex(k * step))
        })
        .collect();
    members.sort_unstable();
    members.dedup();
    CenterFormula { members }
}

/// Size of the center formula without enumerating it. For distinct primes
/// `p, q` the nonzero parts of `ann(p)` and `ann(q)` are disjoint, so this is
/// the sum of `p - 1`.
pub fn center_theorem_size(m: &Modulus) -> u64 {
    if m.is_prime() {
        return 0;
    }
    m.primes().map(|p| p - 1).sum()
}

/// Membership in the center formula: `a` is a vertex and `n/p` divides `a`
/// for some prime `p | n`.
pub fn is_center_member(m: &Modulus, a: u64) -> bool {
    if check_vertex(m, a).is_err() {
        return false;
    }
    let n = m.value();
    m.primes().any(|p| p != n && a.is_multiple_of(n / p))
}

/// Degree of `a`: `gcd(a, n) - 1`, minus one more when `a^2 = 0 (mod n)`.
pub fn degree_theorem(m: &Modulus, a: u64) -> Result<u64> {
    let a = check_vertex(m, a)?;
    let d = m.gcd_with(a);
    Ok(d - 1 - u64::from(mulmod(a, a, m.value()) == 0))
}

/// `gcd(a, n) - 1`, counting `a` as its own neighbour when `a^2 = 0`.
/// Kept only to show where it overcounts.
pub fn degree_uncorrected(m: &Modulus, a: u64) -> Result<u64> {
    let a = check_vertex(m, a)?;
    Ok(m.gcd_with(a) - 1)
}

/// Distance between distinct prime divisors `p`, `q` of `n` when `n > p*q`,
/// which is always 3.
pub fn prime_distance_theorem(m: &Modulus, p: u64, q: u64) -> Result<u32> {
    let n = m.value();
    let fail = |reason| Error::PrimeDistanceNotApplicable { n, p, q, reason };
    if p == q {
        return Err(fail("p and q must be distinct"));
    }
    let divides = |x: u64| m.primes().any(|r| r == x);
    if !divides(p) || !divides(q) {
        return Err(fail("p and q must be prime divisors of n"));
    }
    match p.checked_mul(q) {
        Some(pq) if n > pq => Ok(3),
        _ => Err(fail("need n > p*q")),
    }
}

/// Every `(p, q)`, `p < q`, of prime divisors with `n > p*q`.
pub fn eligible_prime_pairs(m: &Modulus) -> Vec<(u64, u64)> {
    let n = m.value();
    let primes: Vec<u64> = m.primes().collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if p.checked_mul(q).is_some_and(|pq| n > pq) {
                out.push((p, q));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiameterAnswer {
    /// At least two prime divisors and `n > p*q`: diameter 3.
    Theorem(u32),
    /// Closed cases outside the published claim: prime `n` (empty graph,
    /// no diameter) and `n = p^2` (complete graph on `p - 1` vertices).
    Extension(Option<u32>),
    /// Shapes the closed forms do not cover; ask the oracle.
    NotCovered,
}

impl DiameterAnswer {
    /// The closed-form value, if any. The outer `None` means not covered.
    pub fn value(self) -> Option<Option<u32>> {
        match self {
            DiameterAnswer::Theorem(d) => Some(Some(d)),
            DiameterAnswer::Extension(d) => Some(d),
            DiameterAnswer::NotCovered => None,
        }
    }
}

pub fn diameter_theorem(m: &Modulus) -> DiameterAnswer {
    let f = m.factorization();
    let n = m.value();
    match f.factors() {
        [(_, 1)] => DiameterAnswer::Extension(None),
        [(p, 2)] => DiameterAnswer::Extension(Some(if *p > 2 { 1 } else { 0 })),
        [(p, _), (q, _), ..] if n > p * q => DiameterAnswer::Theorem(3),
        _ => DiameterAnswer::NotCovered,
    }
}
