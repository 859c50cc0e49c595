//! Exhaustive search for `r`-role assignments.
//!
//! The outer loop walks the candidate role graphs in canonical order; for
//! each one a backtracking search assigns roles vertex by vertex, keeping
//! for every vertex the mask of roles already present in its neighbourhood
//! and the number of neighbours still unassigned. A branch dies as soon as
//! some vertex sees a role its own role does not neighbour, or can no longer
//! collect every role it must see.

use crate::error::RoleError;
use crate::graph::Graph;
use crate::role::{self, Assignment, RoleGraph};

/// Default node budget for the oracle.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Found {
        assignment: Assignment,
        role_graph: RoleGraph,
    },
    /// The search space was exhausted without a solution.
    NoAssignment,
    /// The node budget ran out first; nothing is known.
    Unknown { nodes: u64 },
}

impl SolveOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SolveOutcome::Found { .. })
    }
}

/// Searches for any `r`-role assignment of `g`. `budget` bounds the total
/// number of search nodes (role trials) across all candidate role graphs.
pub fn brute_force_solve(g: &Graph, r: usize, budget: u64) -> Result<SolveOutcome, RoleError> {
    let candidates = if g.is_connected() {
        role::enumerate_role_graphs(r)?
    } else {
        role::all_role_graphs(r)?
    };
    if g.n() < r {
        return Ok(SolveOutcome::NoAssignment);
    }
    let mut search = Search::new(g);
    for rg in &candidates {
        match search.run(rg, budget) {
            Some(roles) => {
                let assignment = Assignment::new(roles, r).expect("solver emits roles in range");
                let (role_graph, perm) = rg.canonical();
                let assignment = assignment.relabeled(&perm);
                debug_assert!(role::verify(g, &assignment, &role_graph).is_ok());
                return Ok(SolveOutcome::Found {
                    assignment,
                    role_graph,
                });
            }
            None if search.nodes > budget => {
                return Ok(SolveOutcome::Unknown {
                    nodes: search.nodes,
                })
            }
            None => {}
        }
    }
    Ok(SolveOutcome::NoAssignment)
}

/// Searches for an assignment realizing exactly `rg`.
pub fn solve_for_role_graph(g: &Graph, rg: &RoleGraph, budget: u64) -> SolveOutcome {
    if g.n() < rg.r() {
        return SolveOutcome::NoAssignment;
    }
    let mut search = Search::new(g);
    match search.run(rg, budget) {
        Some(roles) => SolveOutcome::Found {
            assignment: Assignment::new(roles, rg.r()).expect("solver emits roles in range"),
            role_graph: rg.clone(),
        },
        None if search.nodes > budget => SolveOutcome::Unknown {
            nodes: search.nodes,
        },
        None => SolveOutcome::NoAssignment,
    }
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    adj: Vec<Vec<usize>>,
    nodes: u64,
}

struct State<'r> {
    rg: &'r RoleGraph,
    r: usize,
    role: Vec<u8>,
    seen: Vec<u64>,
    open: Vec<usize>,
    used: Vec<usize>,
    distinct: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
        Search {
            g,
            order: search_order(g),
            adj,
            nodes: 0,
        }
    }

    fn run(&mut self, rg: &RoleGraph, budget: u64) -> Option<Vec<u8>> {
        let n = self.g.n();
        let mut st = State {
            rg,
            r: rg.r(),
            role: vec![0; n],
            seen: vec![0; n],
            open: (0..n).map(|v| self.g.degree(v)).collect(),
            used: vec![0; rg.r() + 1],
            distinct: 0,
        };
        if self.descend(&mut st, 0, budget) {
            Some(st.role)
        } else {
            None
        }
    }

    fn descend(&mut self, st: &mut State<'_>, depth: usize, budget: u64) -> bool {
        let n = self.g.n();
        if depth == n {
            return st.distinct == st.r;
        }
        // Too few vertices left to cover the unused roles.
        if st.r - st.distinct > n - depth {
            return false;
        }
        let v = self.order[depth];
        for k in 1..=st.r as u8 {
            self.nodes += 1;
            if self.nodes > budget {
                return false;
            }
            if !self.admissible(st, v, k) {
                continue;
            }
            self.assign(st, v, k);
            if self.consistent_around(st, v) && self.descend(st, depth + 1, budget) {
                return true;
            }
            self.unassign(st, v, k);
            if self.nodes > budget {
                return false;
            }
        }
        false
    }

    fn admissible(&self, st: &State<'_>, v: usize, k: u8) -> bool {
        let need = st.rg.neighbor_mask(k);
        st.seen[v] & !need == 0 && need.count_ones() as usize <= self.g.degree(v)
    }

    fn assign(&self, st: &mut State<'_>, v: usize, k: u8) {
        st.role[v] = k;
        if st.used[k as usize] == 0 {
            st.distinct += 1;
        }
        st.used[k as usize] += 1;
        for &w in &self.adj[v] {
            st.seen[w] |= 1 << (k - 1);
            st.open[w] -= 1;
        }
    }

    fn unassign(&self, st: &mut State<'_>, v: usize, k: u8) {
        st.role[v] = 0;
        st.used[k as usize] -= 1;
        if st.used[k as usize] == 0 {
            st.distinct -= 1;
        }
        for &w in &self.adj[v] {
            st.open[w] += 1;
            // Recompute: another neighbour may still carry role k.
            st.seen[w] = self.adj[w]
                .iter()
                .filter(|&&x| st.role[x] != 0)
                .fold(0, |m, &x| m | 1 << (st.role[x] - 1));
        }
    }

    /// After assigning `v`: every assigned vertex in `N[v]` still has only
    /// allowed roles around it and enough open neighbours to collect the
    /// rest; every unassigned neighbour still has some admissible role.
    fn consistent_around(&self, st: &State<'_>, v: usize) -> bool {
        let ok_assigned = |x: usize| {
            let need = st.rg.neighbor_mask(st.role[x]);
            st.seen[x] & !need == 0 && (need & !st.seen[x]).count_ones() as usize <= st.open[x]
        };
        if !ok_assigned(v) {
            return false;
        }
        for &w in &self.adj[v] {
            if st.role[w] != 0 {
                if !ok_assigned(w) {
                    return false;
                }
            } else if !(1..=st.r as u8).any(|k| self.admissible(st, w, k)) {
                return false;
            }
        }
        true
    }
}

/// Highest degree first, then repeatedly the vertex with the most already
/// ordered neighbours (ties: higher degree, then lower index), so that
/// neighbourhood constraints bite early.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            links[w] += 1;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prism::complementary_prism;

    fn prism(g: &Graph) -> Graph {
        complementary_prism(g).unwrap().into_graph()
    }

    #[test]
    fn prism_of_triangle_has_none() {
        let out = brute_force_solve(&prism(&Graph::complete(3)), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(out, SolveOutcome::NoAssignment);
    }

    #[test]
    fn petersen_has_one_with_connected_quotient() {
        let p = prism(&Graph::cycle(5));
        match brute_force_solve(&p, 3, DEFAULT_BUDGET).unwrap() {
            SolveOutcome::Found {
                assignment,
                role_graph,
            } => {
                assert!(role_graph.is_connected());
                assert!(role_graph.is_normalized());
                assert_eq!(role::verify(&p, &assignment, &role_graph), Ok(()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn too_few_vertices() {
        for n in 0..3 {
            let out = brute_force_solve(&Graph::complete(n), 3, DEFAULT_BUDGET).unwrap();
            assert_eq!(out, SolveOutcome::NoAssignment);
        }
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let p = prism(&Graph::disjoint_union(&vec![Graph::complete(2); 4]));
        let out = brute_force_solve(&p, 3, 50).unwrap();
        assert!(matches!(out, SolveOutcome::Unknown { .. }));
        let out = brute_force_solve(&p, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(out, SolveOutcome::NoAssignment);
    }

    #[test]
    fn deterministic() {
        let p = prism(&Graph::path(5));
        let a = brute_force_solve(&p, 3, DEFAULT_BUDGET).unwrap();
        let b = brute_force_solve(&p, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
        assert!(a.is_found());
    }

    #[test]
    fn disconnected_graph_uses_disconnected_role_graphs() {
        // Each edge takes a looped role; the isolated vertex needs a role
        // with no neighbours, so the quotient cannot be connected.
        let g = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(2), Graph::empty(1)]);
        let out = brute_force_solve(&g, 3, DEFAULT_BUDGET).unwrap();
        match out {
            SolveOutcome::Found {
                assignment,
                role_graph,
            } => {
                assert!(!role_graph.is_connected());
                assert_eq!(role::verify(&g, &assignment, &role_graph), Ok(()));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fixed_role_graph() {
        let path_loop = RoleGraph::from_edges(3, &[(1, 2), (2, 3), (3, 3)]);
        let p = prism(&Graph::cycle(5));
        let out = solve_for_role_graph(&p, &path_loop, DEFAULT_BUDGET);
        let SolveOutcome::Found { assignment, .. } = out else {
            panic!("no witness");
        };
        assert_eq!(role::verify(&p, &assignment, &path_loop), Ok(()));
    }
}
