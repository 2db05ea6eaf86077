//! The zero-divisor graph of `Z_n` as an implicit graph.
//!
//! Nothing is stored per vertex. The neighbours of `a` are the nonzero
//! solutions of `a*x = 0 (mod n)`, i.e. the nonzero multiples of `n / d` with
//! `d = gcd(a, n)`, minus `a` itself when `a^2 = 0 (mod n)`.

use std::fmt;

use serde::Serialize;

use crate::arith::{mulmod, Modulus};
use crate::error::{Error, Result};

/// Default largest `n` for which the oracle may materialize the graph.
pub const DEFAULT_ORACLE_CAP: u64 = 50_000;

/// A nonzero zero divisor of `Z_n`, i.e. a residue in `[1, n-1]` sharing a
/// factor with `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Vertex(pub u64);

impl Vertex {
    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Canonical undirected edge, `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub lo: Vertex,
    pub hi: Vertex,
}

impl Edge {
    /// Orders the endpoints. Panics on a loop.
    pub fn new(a: u64, b: u64) -> Self {
        assert_ne!(a, b, "loops are not edges");
        Edge {
            lo: Vertex(a.min(b)),
            hi: Vertex(a.max(b)),
        }
    }

    pub fn as_pair(self) -> [u64; 2] {
        [self.lo.0, self.hi.0]
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_pair().serialize(s)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Handle on the zero-divisor graph of `Z_n`. Immutable once built.
#[derive(Clone, Debug)]
pub struct ZdGraph {
    modulus: Modulus,
    vertex_count: u64,
    oracle_cap: u64,
}

/// Builds the graph of `Z_n` with the default oracle cap.
pub fn build_graph(n: u64) -> Result<ZdGraph> {
    ZdGraph::new(n)
}

impl ZdGraph {
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self::from_modulus(Modulus::new(n)?))
    }

    pub fn from_modulus(modulus: Modulus) -> Self {
        // non-units below n: (n - 1) - phi(n)
        let vertex_count = modulus.value() - 1 - modulus.factorization().totient();
        ZdGraph {
            modulus,
            vertex_count,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }

    pub fn with_oracle_cap(mut self, cap: u64) -> Self {
        self.oracle_cap = cap;
        self
    }

    #[inline]
    pub fn n(&self) -> u64 {
        self.modulus.value()
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn oracle_cap(&self) -> u64 {
        self.oracle_cap
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    /// Fails with [`Error::OracleCapExceeded`] when `n` is above the cap.
    pub fn ensure_within_cap(&self) -> Result<()> {
        if self.n() > self.oracle_cap {
            return Err(Error::OracleCapExceeded {
                n: self.n(),
                cap: self.oracle_cap,
            });
        }
        Ok(())
    }

    #[inline]
    pub fn is_vertex(&self, a: u64) -> bool {
        a >= 1 && a < self.n() && self.modulus.gcd_with(a) > 1
    }

    pub fn vertex(&self, a: u64) -> Result<Vertex> {
        if self.is_vertex(a) {
            Ok(Vertex(a))
        } else {
            Err(Error::NotAVertex {
                n: self.n(),
                value: a,
            })
        }
    }

    /// All vertices in ascending order, found by scanning `[1, n-1]`.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..self.n()).filter(|&a| self.is_vertex(a)).map(Vertex)
    }

    /// Neighbours of `a` in ascending order, generated in `O(gcd(a, n))`.
    pub fn neighbors(&self, a: u64) -> Result<Neighbors> {
        let a = self.vertex(a)?.0;
        let d = self.modulus.gcd_with(a);
        Ok(Neighbors {
            step: self.n() / d,
            k: 1,
            end: d,
            skip: a,
        })
    }

    /// `gcd(a, n) - 1`, less one more when `a^2 = 0 (mod n)` since loops are
    /// not edges.
    pub fn degree(&self, a: u64) -> Result<u64> {
        let a = self.vertex(a)?.0;
        let d = self.modulus.gcd_with(a);
        let self_loop = mulmod(a, a, self.n()) == 0;
        Ok(d - 1 - u64::from(self_loop))
    }

    pub fn are_adjacent(&self, a: u64, b: u64) -> bool {
        a != b && self.is_vertex(a) && self.is_vertex(b) && mulmod(a, b, self.n()) == 0
    }

    /// Every edge once, ordered by `(lo, hi)`. Requires `n <= oracle_cap`.
    pub fn edges(&self) -> Result<impl Iterator<Item = Edge> + '_> {
        self.ensure_within_cap()?;
        Ok(self.vertices().flat_map(move |a| {
            self.neighbors(a.0)
                .expect("vertices() yields vertices")
                .skip_while(move |b| b.0 < a.0)
                .map(move |b| Edge { lo: a, hi: b })
        }))
    }

    pub fn edge_count(&self) -> Result<u64> {
        Ok(self.edges()?.count() as u64)
    }
}

/// Lazy iterator over the neighbours of one vertex.
#[derive(Clone, Debug)]
pub struct Neighbors {
    step: u64,
    k: u64,
    end: u64,
    skip: u64,
}

impl Iterator for Neighbors {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        while self.k < self.end {
            let v = self.k * self.step;
            self.k += 1;
            if v != self.skip {
                return Some(Vertex(v));
            }
        }
        None
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.k) as usize;
        (left.saturating_sub(1), Some(left))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(it: impl Iterator<Item = Vertex>) -> Vec<u64> {
        it.map(Vertex::get).collect()
    }

    /// Neighbours by scanning every residue.
    fn brute_neighbors(n: u64, a: u64) -> Vec<u64> {
        (1..n)
            .filter(|&x| x != a && (a * x).is_multiple_of(n))
            .collect()
    }

    #[test]
    fn build_examples() {
        let g = build_graph(12).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(values(g.vertices()), [2, 3, 4, 6, 8, 9, 10]);

        let g = build_graph(7).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert!(g.is_empty());
        assert_eq!(g.vertices().count(), 0);

        let g = build_graph(4).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(values(g.vertices()), [2]);

        assert_eq!(build_graph(1).unwrap_err(), Error::InvalidModulus(1));
    }

    #[test]
    fn vertex_membership() {
        let g = build_graph(12).unwrap();
        assert!(g.is_vertex(6));
        assert!(!g.is_vertex(5));
        assert!(!g.is_vertex(0));
        assert!(!g.is_vertex(12));
        assert_eq!(g.vertex(5), Err(Error::NotAVertex { n: 12, value: 5 }));
    }

    #[test]
    fn neighbor_examples() {
        let g12 = build_graph(12).unwrap();
        let g8 = build_graph(8).unwrap();
        assert_eq!(values(g12.neighbors(8).unwrap()), [3, 6, 9]);
        assert_eq!(values(g8.neighbors(4).unwrap()), [2, 6]);
        assert_eq!(values(g12.neighbors(2).unwrap()), [6]);
        assert_eq!(brute_neighbors(12, 8), [3, 6, 9]);
        assert_eq!(brute_neighbors(8, 4), [2, 6]);
        assert!(g12.neighbors(7).is_err());
    }

    #[test]
    fn degree_examples() {
        let g = build_graph(12).unwrap();
        assert_eq!(g.degree(8).unwrap(), 3);
        assert_eq!(g.degree(9).unwrap(), 2);
        let g = build_graph(8).unwrap();
        assert_eq!(g.degree(4).unwrap(), 2);
        assert_eq!(brute_neighbors(8, 4).len(), 2);
        let g = build_graph(4).unwrap();
        assert_eq!(g.degree(2).unwrap(), 0);
        assert_eq!(g.degree(3), Err(Error::NotAVertex { n: 4, value: 3 }));
    }

    #[test]
    fn adjacency_examples() {
        let g = build_graph(12).unwrap();
        assert!(g.are_adjacent(4, 9));
        assert!(!g.are_adjacent(2, 4));
        assert!(!g.are_adjacent(0, 4));
        let g = build_graph(8).unwrap();
        assert!(!g.are_adjacent(4, 4));
    }

    #[test]
    fn edge_examples() {
        let pairs = |n| {
            build_graph(n)
                .unwrap()
                .edges()
                .unwrap()
                .map(Edge::as_pair)
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs(8), [[2, 4], [4, 6]]);
        assert_eq!(pairs(6), [[2, 3], [3, 4]]);
        assert!(pairs(7).is_empty());
        assert_eq!(
            pairs(12),
            [
                [2, 6],
                [3, 4],
                [3, 8],
                [4, 6],
                [4, 9],
                [6, 8],
                [6, 10],
                [8, 9]
            ]
        );

        let capped = build_graph(100).unwrap().with_oracle_cap(50);
        assert_eq!(
            capped.edges().err(),
            Some(Error::OracleCapExceeded { n: 100, cap: 50 })
        );
    }

    #[test]
    fn neighbors_match_scan_and_are_symmetric() {
        for n in 2..=1000u64 {
            let g = build_graph(n).unwrap();
            for a in g.vertices() {
                let nb = values(g.neighbors(a.0).unwrap());
                assert_eq!(nb, brute_neighbors(n, a.0), "n={n} a={a}");
                for &b in &nb {
                    assert!(g.is_vertex(b));
                    assert!(g.neighbors(b).unwrap().any(|x| x == a), "n={n} {a}~{b}");
                }
                // anything adjacent to a is adjacent to n - a
                let mirror = n - a.0;
                if g.is_vertex(mirror) {
                    for &b in nb.iter().filter(|&&b| b != mirror) {
                        assert!(g.are_adjacent(mirror, b), "n={n} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_law_and_handshake() {
        for n in 2..=2000u64 {
            let g = build_graph(n).unwrap();
            let mut total = 0;
            for a in g.vertices() {
                let deg = g.degree(a.0).unwrap();
                assert_eq!(deg as usize, g.neighbors(a.0).unwrap().count());
                let d = g.modulus().gcd_with(a.0);
                if (a.0 * a.0) % n == 0 {
                    assert_eq!(deg, d - 2);
                } else {
                    assert_eq!(deg, d - 1);
                }
                total += deg;
            }
            assert_eq!(total % 2, 0, "n={n}");
            assert_eq!(g.vertices().count() as u64, g.vertex_count());
            if n <= 300 {
                assert_eq!(g.edge_count().unwrap() * 2, total);
            }
        }
    }
}
