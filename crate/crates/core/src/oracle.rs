//! Ground truth by direct graph search.
//!
//! Nothing in this module consults the closed forms in [`crate::theorems`].
//! The graph is materialized into a compressed adjacency list (only when
//! `n <= oracle_cap`) and then searched: BFS for distances, a staged
//! eccentricity test, and Tarjan's low-link method for bridges.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::arith::mulmod;
use crate::error::{Error, Result};
use crate::zdgraph::{Edge, Vertex, ZdGraph};

const UNSEEN: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityRecord {
    pub vertex: Vertex,
    pub eccentricity: u32,
}

/// The cut edges of a graph in canonical `(lo, hi)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BridgeSet {
    pub edges: Vec<Edge>,
}

impl BridgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }
}

/// Materialized adjacency of one graph, indexed densely by vertex rank.
pub struct Oracle<'g> {
    graph: &'g ZdGraph,
    vertices: Vec<u64>,
    index: Vec<u32>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl<'g> Oracle<'g> {
    pub fn new(graph: &'g ZdGraph) -> Result<Self> {
        graph.ensure_within_cap()?;
        let n = graph.n() as usize;
        let vertices: Vec<u64> = graph.vertices().map(Vertex::get).collect();
        let mut index = vec![UNSEEN; n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in &vertices {
            let nb = graph.neighbors(v)?;
            targets.extend(nb.map(|w| index[w.get() as usize]));
            offsets.push(targets.len());
        }
        Ok(Oracle {
            graph,
            vertices,
            index,
            offsets,
            targets,
        })
    }

    pub fn graph(&self) -> &ZdGraph {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    fn rank(&self, a: u64) -> Result<usize> {
        self.graph.vertex(a)?;
        Ok(self.index[a as usize] as usize)
    }

    #[inline]
    fn adj(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// BFS from rank `src`, writing hop counts into `dist` (UNSEEN if unreached).
    fn bfs(&self, src: usize, dist: &mut Vec<u32>) {
        dist.clear();
        dist.resize(self.len(), UNSEEN);
        let mut queue = std::collections::VecDeque::with_capacity(self.len());
        dist[src] = 0;
        queue.push_back(src as u32);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in self.adj(u as usize) {
                if dist[w as usize] == UNSEEN {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn distances_from(&self, a: u64) -> Result<BTreeMap<Vertex, u32>> {
        let src = self.rank(a)?;
        let mut dist = Vec::new();
        self.bfs(src, &mut dist);
        Ok(dist
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != UNSEEN)
            .map(|(i, &d)| (Vertex(self.vertices[i]), d))
            .collect())
    }

    /// Shortest-path length, `None` if `b` is unreachable from `a`.
    pub fn distance(&self, a: u64, b: u64) -> Result<Option<u32>> {
        let (src, dst) = (self.rank(a)?, self.rank(b)?);
        let mut dist = Vec::new();
        self.bfs(src, &mut dist);
        Ok((dist[dst] != UNSEEN).then_some(dist[dst]))
    }

    /// Eccentricity by full BFS.
    pub fn eccentricity_bfs(&self, a: u64) -> Result<u32> {
        let src = self.rank(a)?;
        let mut dist = Vec::new();
        self.bfs_eccentricity(src, &mut dist)
    }

    fn bfs_eccentricity(&self, src: usize, dist: &mut Vec<u32>) -> Result<u32> {
        self.bfs(src, dist);
        if dist.contains(&UNSEEN) {
            return Err(Error::Disconnected { n: self.graph.n() });
        }
        Ok(dist.iter().copied().max().unwrap_or(0))
    }

    /// Eccentricity by the staged test: 1 if `a` sees every other vertex,
    /// 2 if every other vertex is a neighbour or shares one with `a`,
    /// otherwise the exact BFS value.
    pub fn eccentricity(&self, a: u64) -> Result<u32> {
        let src = self.rank(a)?;
        let mut scratch = Scratch::new(self.len());
        self.staged_eccentricity(src, &mut scratch)
    }

    fn staged_eccentricity(&self, src: usize, scratch: &mut Scratch) -> Result<u32> {
        let v = self.len();
        if v == 1 {
            return Ok(0);
        }
        let near = self.adj(src);
        if near.len() == v - 1 {
            return Ok(1);
        }
        scratch.epoch += 1;
        let epoch = scratch.epoch;
        for &w in near {
            scratch.mark[w as usize] = epoch;
        }
        let within_two = (0..v).all(|j| {
            j == src
                || scratch.mark[j] == epoch
                || self
                    .adj(j)
                    .iter()
                    .any(|&k| scratch.mark[k as usize] == epoch)
        });
        if within_two {
            Ok(2)
        } else {
            self.bfs_eccentricity(src, &mut scratch.dist)
        }
    }

    /// Eccentricity of every vertex, ascending by vertex.
    ///
    /// Twins share an eccentricity: non-adjacent vertices with the same open
    /// neighbourhood, and adjacent ones with the same closed neighbourhood.
    /// Each twin class is searched once.
    pub fn eccentricities(&self) -> Result<Vec<EccentricityRecord>> {
        let mut scratch = Scratch::new(self.len());
        let mut by_open: HashMap<&[u32], u32> = HashMap::new();
        let mut by_closed: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut out = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let open = self.adj(i);
            let mut closed = Vec::with_capacity(open.len() + 1);
            let at = open.partition_point(|&w| (w as usize) < i);
            closed.extend_from_slice(&open[..at]);
            closed.push(i as u32);
            closed.extend_from_slice(&open[at..]);

            let ecc = match by_open.get(open).or_else(|| by_closed.get(&closed)) {
                Some(&e) => e,
                None => {
                    let e = self.staged_eccentricity(i, &mut scratch)?;
                    by_open.insert(open, e);
                    by_closed.insert(closed, e);
                    e
                }
            };
            out.push(EccentricityRecord {
                vertex: Vertex(self.vertices[i]),
                eccentricity: ecc,
            });
        }
        Ok(out)
    }

    /// Vertices of minimum eccentricity; empty for the empty graph.
    pub fn center(&self) -> Result<Vec<Vertex>> {
        let ecc = self.eccentricities()?;
        let Some(min) = ecc.iter().map(|r| r.eccentricity).min() else {
            return Ok(Vec::new());
        };
        Ok(ecc
            .into_iter()
            .filter(|r| r.eccentricity == min)
            .map(|r| r.vertex)
            .collect())
    }

    /// Maximum eccentricity; `None` for the empty graph.
    pub fn diameter(&self) -> Result<Option<u32>> {
        Ok(self.eccentricities()?.iter().map(|r| r.eccentricity).max())
    }

    pub fn is_connected(&self) -> bool {
        if self.len() <= 1 {
            return true;
        }
        let mut dist = Vec::new();
        self.bfs(0, &mut dist);
        !dist.contains(&UNSEEN)
    }

    /// Cut edges via iterative low-link DFS.
    pub fn bridges(&self) -> BridgeSet {
        let v = self.len();
        let mut disc = vec![UNSEEN; v];
        let mut low = vec![0u32; v];
        let mut clock = 0u32;
        let mut out = Vec::new();
        // (node, parent, next adjacency slot)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();

        for root in 0..v {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, usize::MAX, self.offsets[root]));

            while let Some(frame) = stack.last_mut() {
                let (u, parent) = (frame.0, frame.1);
                if frame.2 < self.offsets[u + 1] {
                    let w = self.targets[frame.2] as usize;
                    frame.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, u, self.offsets[w]));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            out.push(Edge::new(self.vertices[p], self.vertices[u]));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        BridgeSet { edges: out }
    }
}

struct Scratch {
    mark: Vec<u64>,
    epoch: u64,
    dist: Vec<u32>,
}

impl Scratch {
    fn new(v: usize) -> Self {
        Scratch {
            mark: vec![0; v],
            epoch: 0,
            dist: Vec::with_capacity(v),
        }
    }
}

pub fn distances_from(g: &ZdGraph, a: u64) -> Result<BTreeMap<Vertex, u32>> {
    Oracle::new(g)?.distances_from(a)
}

pub fn distance(g: &ZdGraph, a: u64, b: u64) -> Result<Option<u32>> {
    Oracle::new(g)?.distance(a, b)
}

pub fn eccentricity(g: &ZdGraph, a: u64) -> Result<u32> {
    Oracle::new(g)?.eccentricity(a)
}

pub fn center_oracle(g: &ZdGraph) -> Result<Vec<Vertex>> {
    Oracle::new(g)?.center()
}

pub fn diameter_oracle(g: &ZdGraph) -> Result<Option<u32>> {
    Oracle::new(g)?.diameter()
}

pub fn is_connected(g: &ZdGraph) -> Result<bool> {
    Ok(Oracle::new(g)?.is_connected())
}

pub fn bridges_oracle(g: &ZdGraph) -> Result<BridgeSet> {
    Ok(Oracle::new(g)?.bridges())
}

/// Neighbours of `a` found by multiplying against every residue.
pub fn neighbors_scan(g: &ZdGraph, a: u64) -> Result<Vec<Vertex>> {
    g.ensure_within_cap()?;
    g.vertex(a)?;
    let n = g.n();
    Ok((1..n)
        .filter(|&x| x != a && mulmod(a, x, n) == 0)
        .map(Vertex)
        .collect())
}
