//! The oracle's bridge finder against two slower, independent searches built
//! from pairwise multiplication.

use zdg_core::oracle::{bridges_oracle, Oracle};
use zdg_core::{Edge, ZdGraph};

struct Brute {
    verts: Vec<u64>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Brute {
    fn new(n: u64) -> Self {
        let verts: Vec<u64> = (1..n).filter(|&a| gcd(a, n) > 1).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        let mut edges = Vec::new();
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if (verts[i] * verts[j]).is_multiple_of(n) {
                    adj[i].push(j);
                    adj[j].push(i);
                    edges.push((i, j));
                }
            }
        }
        Brute { verts, adj, edges }
    }

    fn components_without(&self, skip: usize) -> usize {
        let mut parent: Vec<usize> = (0..self.verts.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut count = self.verts.len();
        for (k, &(i, j)) in self.edges.iter().enumerate() {
            if k == skip {
                continue;
            }
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
                count -= 1;
            }
        }
        count
    }

    /// Deletion raises the component count.
    fn bridges_by_removal(&self) -> Vec<Edge> {
        let base = self.components_without(usize::MAX);
        let mut out: Vec<Edge> = (0..self.edges.len())
            .filter(|&k| self.components_without(k) > base)
            .map(|k| self.edge(k))
            .collect();
        out.sort();
        out
    }

    /// No cycle passes through the edge: DFS for another u-v path.
    fn edges_on_no_cycle(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = (0..self.edges.len())
            .filter(|&k| !self.on_cycle(k))
            .map(|k| self.edge(k))
            .collect();
        out.sort();
        out
    }

    fn on_cycle(&self, k: usize) -> bool {
        let (u, v) = self.edges[k];
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![u];
        seen[u] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if x == u && y == v {
                    continue;
                }
                if y == v {
                    return true;
                }
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }

    fn edge(&self, k: usize) -> Edge {
        let (i, j) = self.edges[k];
        Edge::new(self.verts[i], self.verts[j])
    }
}

#[test]
fn bridges_match_edge_removal_up_to_500() {
    for n in 2..=500 {
        let g = ZdGraph::new(n).unwrap();
        let found = bridges_oracle(&g).unwrap().edges;
        assert_eq!(found, Brute::new(n).bridges_by_removal(), "n={n}");
    }
}

#[test]
fn bridges_are_edges_on_no_cycle_up_to_300() {
    for n in 2..=300 {
        let g = ZdGraph::new(n).unwrap();
        let found = bridges_oracle(&g).unwrap();
        assert_eq!(found.edges, Brute::new(n).edges_on_no_cycle(), "n={n}");
        for e in found.iter() {
            assert!(g.are_adjacent(e.lo.0, e.hi.0));
        }
    }
}

#[test]
fn edge_list_matches_pairwise_scan() {
    for n in 2..=400 {
        let g = ZdGraph::new(n).unwrap();
        let brute = Brute::new(n);
        let mut expect: Vec<Edge> = (0..brute.edges.len()).map(|k| brute.edge(k)).collect();
        expect.sort();
        let got: Vec<Edge> = g.edges().unwrap().collect();
        assert_eq!(got, expect, "n={n}");
        assert_eq!(Oracle::new(&g).unwrap().edge_count(), expect.len());
    }
}
