//! Closed forms against the oracle over exhaustive ranges.

use zdg_core::arith::{is_prime, Modulus};
use zdg_core::oracle::Oracle;
use zdg_core::theorems::{
    center_theorem, cut_edges_theorem, degree_theorem, eligible_prime_pairs,
    is_cut_edge_short_form, is_cut_edge_theorem, prime_distance_theorem,
};
use zdg_core::{Vertex, ZdGraph};

fn setup(n: u64) -> (Modulus, ZdGraph) {
    let m = Modulus::new(n).unwrap();
    let g = ZdGraph::from_modulus(m.clone());
    (m, g)
}

#[test]
fn cut_edges_agree_except_at_nine() {
    for n in 2..=2000 {
        let (m, g) = setup(n);
        let oracle = Oracle::new(&g).unwrap().bridges().edges;
        let closed = cut_edges_theorem(&m);
        if n == 9 {
            // Z_9: single edge 3 -- 6, a bridge with both gcds equal to 3
            assert!(closed.is_empty());
            assert_eq!(oracle.len(), 1);
        } else {
            assert_eq!(closed, oracle, "n={n}");
        }
    }
}

#[test]
fn predicate_forms_agree_on_every_edge() {
    for n in 2..=2000 {
        let (m, g) = setup(n);
        let listed = cut_edges_theorem(&m);
        for e in g.edges().unwrap() {
            let (a, b) = (e.lo.0, e.hi.0);
            let long = is_cut_edge_theorem(&m, a, b).unwrap();
            assert_eq!(long, is_cut_edge_short_form(&m, a, b).unwrap(), "n={n} {e}");
            assert_eq!(long, is_cut_edge_theorem(&m, b, a).unwrap());
            assert_eq!(long, listed.binary_search(&e).is_ok(), "n={n} {e}");
        }
    }
}

#[test]
fn degree_formula_counts_neighbors() {
    for n in 2..=2000 {
        let (m, g) = setup(n);
        for v in g.vertices() {
            let counted = g.neighbors(v.0).unwrap().count() as u64;
            assert_eq!(degree_theorem(&m, v.0).unwrap(), counted, "n={n} a={v}");
        }
    }
}

#[test]
fn prime_pairs_are_at_distance_three() {
    let mut checked = 0;
    for n in 2..=2000 {
        let (m, g) = setup(n);
        let pairs = eligible_prime_pairs(&m);
        if pairs.is_empty() {
            continue;
        }
        let oracle = Oracle::new(&g).unwrap();
        for (p, q) in pairs {
            let d = prime_distance_theorem(&m, p, q).unwrap();
            assert_eq!(Some(d), oracle.distance(p, q).unwrap(), "n={n} p={p} q={q}");
            checked += 1;
        }
        assert_eq!(oracle.diameter().unwrap(), Some(3), "n={n}");
    }
    assert!(checked > 1000);
}

#[test]
fn prime_power_centers() {
    for n in 4..=3125u64 {
        let (m, g) = setup(n);
        let Some((p, k)) = m.factorization().prime_power_base() else {
            continue;
        };
        if k < 2 {
            continue;
        }
        let top = p.pow(k - 1);
        let expected: Vec<Vertex> = (1..p).map(|i| Vertex(i * top)).collect();
        assert_eq!(center_theorem(&m).members, expected, "n={n}");
        assert_eq!(
            Oracle::new(&g).unwrap().center().unwrap(),
            expected,
            "n={n}"
        );
    }
}

#[test]
fn prime_moduli_give_empty_answers() {
    for n in (2..=500).filter(|&n| is_prime(n)) {
        let (m, g) = setup(n);
        assert!(center_theorem(&m).is_empty());
        assert!(cut_edges_theorem(&m).is_empty());
        let o = Oracle::new(&g).unwrap();
        assert!(o.center().unwrap().is_empty());
        assert_eq!(o.diameter().unwrap(), None);
        assert!(o.is_connected());
    }
}

#[test]
fn center_formula_overcounts_at_twice_an_odd_prime() {
    for p in (3..500u64).filter(|&p| is_prime(p)) {
        let (m, g) = setup(2 * p);
        // star with centre p
        assert_eq!(Oracle::new(&g).unwrap().center().unwrap(), [Vertex(p)]);
        assert_eq!(center_theorem(&m).len() as u64, g.vertex_count());
    }
}
