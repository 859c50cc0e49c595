use std::collections::VecDeque;

use proptest::prelude::*;

use roleprism::census;
use roleprism::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use roleprism::graph::is_complete_bipartite_component;
use roleprism::role::{self, quotient};
use roleprism::solver::{brute_force_solve, DEFAULT_BUDGET};
use roleprism::{complementary_prism, construct, decide, Assignment, Graph, Side, SolveOutcome, WitnessTrace};

fn graph(nmin: usize, nmax: usize) -> impl Strategy<Value = Graph> {
    (nmin..=nmax).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn graph_with_roles(nmax: usize, r: u8) -> impl Strategy<Value = (Graph, Vec<u8>)> {
    graph(1, nmax).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(1..=r, n))
    })
}

/// Walks BFS parents back to the root.
fn to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut path = vec![v];
    while parent[v] != v {
        v = parent[v];
        path.push(v);
    }
    path
}

/// An odd closed walk, found by BFS 2-colouring.
fn odd_closed_walk(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![0; n];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        parent[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for v in g.neighbors(u).iter() {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if depth[v] % 2 == depth[u] % 2 {
                    let mut walk = to_root(&parent, u);
                    walk.reverse();
                    let mut back = to_root(&parent, v);
                    back.pop();
                    walk.extend(back);
                    return Some(walk);
                }
            }
        }
    }
    None
}

/// Roles seen by each vertex, compared with what the quotient prescribes.
fn neighbourhoods_match(g: &Graph, roles: &[u8]) -> bool {
    let mut q = [[false; 4]; 4];
    for (u, v) in g.edges() {
        q[roles[u] as usize][roles[v] as usize] = true;
        q[roles[v] as usize][roles[u] as usize] = true;
    }
    (0..g.n()).all(|v| {
        let mut seen = [false; 4];
        for w in g.neighbors(v).iter() {
            seen[roles[w] as usize] = true;
        }
        seen == q[roles[v] as usize]
    })
}

fn surjective(roles: &[u8], r: u8) -> bool {
    (1..=r).all(|k| roles.contains(&k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph(0, 64)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }

    #[test]
    fn degree_sum_is_twice_the_edges(g in graph(0, 64)) {
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn bipartitions_are_certified(g in graph(1, 24)) {
        for c in g.components().components {
            let h = g.induced(&c.vertices);
            match &c.bipartition {
                Some(bp) => {
                    prop_assert_eq!(bp.a.len() + bp.b.len(), c.vertices.len());
                    for (u, v) in g.edges().filter(|(u, _)| c.vertices.contains(u)) {
                        prop_assert!(bp.a.contains(&u) != bp.a.contains(&v));
                    }
                }
                None => {
                    let walk = odd_closed_walk(&h).expect("non-bipartite component has an odd cycle");
                    prop_assert!(walk.len() % 2 == 1);
                    for i in 0..walk.len() {
                        prop_assert!(h.has_edge(walk[i], walk[(i + 1) % walk.len()]));
                    }
                }
            }
        }
    }

    #[test]
    fn prism_degree_identities(g in graph(1, 64)) {
        let n = g.n();
        let p = complementary_prism(&g).unwrap();
        let pg = p.graph();
        prop_assert_eq!(pg.n(), 2 * n);
        prop_assert_eq!(pg.edge_count(), n * (n - 1) / 2 + n);
        for v in 0..n {
            prop_assert_eq!(pg.degree(v), g.degree(v) + 1);
            prop_assert_eq!(pg.degree(n + v), n - g.degree(v));
            prop_assert_eq!(p.mirror(v), n + v);
            prop_assert!(pg.has_edge(v, n + v));
        }
        if n >= 2 {
            prop_assert!(pg.is_connected());
        }
    }

    #[test]
    fn decide_is_symmetric_under_complement(g in graph(1, 40)) {
        let a = decide(&g).unwrap();
        let b = decide(&g.complement()).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
    }

    #[test]
    fn no_instances_are_disconnected_bipartite_or_complete(g in graph(1, 40)) {
        let r = decide(&g).unwrap();
        if let Some(m) = r.matched {
            let side = match m.side {
                Side::Graph => g.clone(),
                Side::Complement => g.complement(),
            };
            let ok = side.is_complete() || (side.is_bipartite() && !side.is_connected());
            prop_assert!(ok, "{}", to_graph6(&g));
        }
    }

    #[test]
    fn witnesses_verify_beyond_the_census(g in graph(1, 24)) {
        if decide(&g).unwrap().has_assignment() {
            let t = construct(&g).unwrap();
            prop_assert!(!t.fallback, "{}", to_graph6(&g));
            let p = complementary_prism(&g).unwrap();
            prop_assert!(neighbourhoods_match(p.graph(), t.assignment.roles()));
            prop_assert!(surjective(t.assignment.roles(), 3));
            prop_assert_eq!(WitnessTrace::parse(&t.serialize()).unwrap(), t);
        } else {
            prop_assert!(construct(&g).is_err());
        }
    }

    #[test]
    fn verify_matches_neighbourhood_check((g, roles) in graph_with_roles(10, 3)) {
        let a = Assignment::new(roles.clone(), 3).unwrap();
        match quotient(&g, &a) {
            Ok(q) => {
                let verified = role::verify(&g, &a, &q).is_ok();
                prop_assert_eq!(verified, surjective(&roles, 3) && neighbourhoods_match(&g, &roles));
                if verified && g.is_connected() {
                    prop_assert!(q.is_connected());
                }
            }
            Err(_) => prop_assert!(!surjective(&roles, 3)),
        }
    }

    #[test]
    fn oracle_witnesses_verify(g in graph(1, 7)) {
        let first = brute_force_solve(&g, 3, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&first, &brute_force_solve(&g, 3, DEFAULT_BUDGET).unwrap());
        match first {
            SolveOutcome::Found { assignment, role_graph } => {
                prop_assert!(role::verify(&g, &assignment, &role_graph).is_ok());
                prop_assert!(neighbourhoods_match(&g, assignment.roles()));
                if role_graph.loops().is_empty() && role_graph.is_bipartite() {
                    prop_assert!(g.is_bipartite());
                }
            }
            SolveOutcome::NoAssignment => {}
            SolveOutcome::Unknown { .. } => prop_assert!(false, "budget exhausted on {}", to_graph6(&g)),
        }
    }

    #[test]
    fn graph6_round_trip(g in graph(0, 80)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(0, 40)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_relabeling_invariant(g in graph(1, 8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(census::certificate(&g), census::certificate(&g.permuted(&perm)));
    }
}

fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == g.n() {
            return true;
        }
        for j in 0..h.n() {
            if used[j] || g.degree(i) != h.degree(j) {
                continue;
            }
            if (0..i).all(|k| g.has_edge(k, i) == h.has_edge(map[k], j)) {
                map.push(j);
                used[j] = true;
                if go(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    g.n() == h.n() && g.edge_count() == h.edge_count() && go(g, h, &mut vec![], &mut vec![false; h.n()])
}

#[test]
fn complete_bipartite_recognition_matches_brute_force() {
    for g in census::census(7).unwrap().into_iter().flatten() {
        for c in g.components().components {
            let h = g.induced(&c.vertices);
            let brute = (1..c.order())
                .find(|&a| a <= c.order() - a && brute_isomorphic(&h, &Graph::complete_bipartite(a, c.order() - a)));
            let got = is_complete_bipartite_component(&c).map(|(a, b)| a.min(b));
            assert_eq!(got, brute, "{}", to_graph6(&g));
        }
    }
}

#[test]
fn prism_of_complement_is_isomorphic() {
    for g in census::census(8).unwrap().into_iter().flatten().filter(|g| g.n() > 0) {
        let p = complementary_prism(&g).unwrap();
        let q = complementary_prism(&g.complement()).unwrap();
        assert!(census::is_isomorphic(p.graph(), q.graph()), "{}", to_graph6(&g));
        if g.n() <= 5 {
            assert!(brute_isomorphic(p.graph(), q.graph()), "{}", to_graph6(&g));
        }
    }
}

#[test]
fn small_prisms_have_no_three_role_assignment() {
    for n in 1..=2 {
        for g in census::graphs_of_order(n).unwrap() {
            let p = complementary_prism(&g).unwrap();
            assert_eq!(brute_force_solve(p.graph(), 3, DEFAULT_BUDGET).unwrap(), SolveOutcome::NoAssignment);
            assert!(!decide(&g).unwrap().has_assignment());
        }
    }
}
