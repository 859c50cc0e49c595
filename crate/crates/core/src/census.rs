//! Canonical labeling of small graphs, enumeration of all graphs up to
//! isomorphism, and the exhaustive cross-check of `decide` against the
//! oracle.
//!
//! Canonical form: colour refinement (1-WL) starting from the trivial
//! colouring, cells ordered by colour, then a branch-and-bound search over
//! orderings that respect the cells for the lexicographically smallest
//! column-major upper triangle. Refinement is isomorphism-invariant, so the
//! minimum is a canonical form. The search is exponential on highly
//! symmetric graphs; it is meant for the census sizes used here.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::characterization::decide;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::prism::complementary_prism;
use crate::role;
use crate::solver::{brute_force_solve, SolveOutcome};
use crate::witness::construct_with_budget;

/// Largest order the census will enumerate.
pub const MAX_CENSUS_ORDER: usize = 8;

/// Number of graphs on `n` unlabeled vertices, `n = 0..=8`.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census order {0} exceeds the limit of {MAX_CENSUS_ORDER}")]
    TooLarge(usize),
}

/// Stable colouring after refinement; colours are `0..k` and ordered by an
/// isomorphism-invariant key.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut classes = usize::from(n > 0);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'g> {
    g: &'g Graph,
    colour: Vec<usize>,
    /// Colour required at each position.
    slot: Vec<usize>,
    best: Option<(Vec<Vec<bool>>, Vec<usize>)>,
}

impl Search<'_> {
    fn go(&mut self, order: &mut Vec<usize>, used: &mut [bool], cols: &mut Vec<Vec<bool>>) {
        let n = self.g.n();
        let pos = order.len();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((b, _)) => *cols < *b,
            };
            if better {
                self.best = Some((cols.clone(), order.clone()));
            }
            return;
        }
        for v in 0..n {
            if used[v] || self.colour[v] != self.slot[pos] {
                continue;
            }
            let col: Vec<bool> = order.iter().map(|&u| self.g.has_edge(u, v)).collect();
            cols.push(col);
            let prune = match &self.best {
                None => false,
                Some((b, _)) => cols[..].cmp(&b[..=pos]) == Ordering::Greater,
            };
            if !prune {
                used[v] = true;
                order.push(v);
                self.go(order, used, cols);
                order.pop();
                used[v] = false;
            }
            cols.pop();
        }
    }
}

/// The canonical relabeling of `g` and the permutation used (`v` goes to
/// position `perm[v]`).
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    let colour = refine(g);
    let mut slot = colour.clone();
    slot.sort_unstable();
    let mut search = Search {
        g,
        colour,
        slot,
        best: None,
    };
    search.go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut Vec::with_capacity(n));
    let order = search.best.map(|b| b.1).unwrap_or_default();
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    (g.permuted(&perm), perm)
}

/// graph6 of the canonical form; equal iff the graphs are isomorphic.
pub fn certificate(g: &Graph) -> String {
    to_graph6(&canonical_form(g).0)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && certificate(g) == certificate(h)
}

/// All graphs on `n` vertices up to isomorphism, canonically labeled and
/// sorted by certificate.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>, CensusError> {
    Ok(census(n)?.pop().unwrap_or_default())
}

/// Graphs of every order `0..=nmax`, each layer as in [`graphs_of_order`].
/// Each layer extends the previous one by a vertex joined to every subset.
pub fn census(nmax: usize) -> Result<Vec<Vec<Graph>>, CensusError> {
    if nmax > MAX_CENSUS_ORDER {
        return Err(CensusError::TooLarge(nmax));
    }
    let mut layers = vec![vec![Graph::empty(0)]];
    for n in 1..=nmax {
        let parents = layers.last().unwrap();
        let mut next: Vec<(String, Graph)> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (0u32..1 << (n - 1)).map(move |mask| {
                    let g = Graph::from_fn(n, |u, v| {
                        if v == n - 1 {
                            mask >> u & 1 == 1
                        } else if u == n - 1 {
                            mask >> v & 1 == 1
                        } else {
                            p.has_edge(u, v)
                        }
                    });
                    let (c, _) = canonical_form(&g);
                    (to_graph6(&c), c)
                })
            })
            .collect();
        next.par_sort_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        layers.push(next.into_iter().map(|(_, g)| g).collect());
    }
    Ok(layers)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleVerdict {
    Found,
    None,
    Unknown,
}

/// One graph of the cross-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub graph6: String,
    /// The `decide` line, `YES` or `NO side=.. cond=..`.
    pub decide: String,
    pub oracle: OracleVerdict,
    /// `None` when the oracle ran out of budget.
    pub agree: Option<bool>,
    /// Construction id of the witness for YES-instances.
    pub construction: Option<String>,
    pub fallback: bool,
    /// Whether a witness was produced and re-verified; `None` for NO.
    pub witness_ok: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub nmax: usize,
    pub graphs: usize,
    pub yes: usize,
    pub no: usize,
    pub disagreements: usize,
    pub unknowns: usize,
    pub fallbacks: usize,
    pub witness_failures: usize,
}

impl CensusSummary {
    pub fn is_clean(&self) -> bool {
        self.disagreements == 0 && self.unknowns == 0 && self.fallbacks == 0 && self.witness_failures == 0
    }
}

fn check(g: &Graph, budget: u64) -> CensusRow {
    let report = decide(g).expect("census graphs are non-empty");
    let prism = complementary_prism(g).expect("non-empty");
    let oracle = match brute_force_solve(prism.graph(), 3, budget).expect("three roles are supported") {
        SolveOutcome::Found { .. } => OracleVerdict::Found,
        SolveOutcome::NoAssignment => OracleVerdict::None,
        SolveOutcome::Unknown { .. } => OracleVerdict::Unknown,
    };
    let agree = match oracle {
        OracleVerdict::Unknown => None,
        o => Some((o == OracleVerdict::Found) == report.has_assignment()),
    };
    let (construction, fallback, witness_ok) = if report.has_assignment() {
        match construct_with_budget(g, budget) {
            Ok(t) => {
                let ok = role::verify(prism.graph(), &t.assignment, &t.role_graph).is_ok();
                (Some(t.construction), t.fallback, Some(ok))
            }
            Err(_) => (None, false, Some(false)),
        }
    } else {
        (None, false, None)
    };
    CensusRow {
        n: g.n(),
        graph6: to_graph6(g),
        decide: report.line(),
        oracle,
        agree,
        construction,
        fallback,
        witness_ok,
    }
}

/// Runs decide, the oracle and the constructor on every graph with
/// `1 <= n <= nmax`. Rows are ordered by order, then certificate.
pub fn crosscheck(nmax: usize, budget: u64) -> Result<(Vec<CensusRow>, CensusSummary), CensusError> {
    let layers = census(nmax)?;
    let graphs: Vec<&Graph> = layers.iter().skip(1).flatten().collect();
    let rows: Vec<CensusRow> = graphs.par_iter().map(|g| check(g, budget)).collect();
    let mut s = CensusSummary {
        nmax,
        graphs: rows.len(),
        ..CensusSummary::default()
    };
    for r in &rows {
        if r.decide == "YES" {
            s.yes += 1;
        } else {
            s.no += 1;
        }
        match r.agree {
            Some(false) => s.disagreements += 1,
            None => s.unknowns += 1,
            Some(true) => {}
        }
        s.fallbacks += usize::from(r.fallback);
        s.witness_failures += usize::from(r.witness_ok == Some(false));
    }
    Ok((rows, s))
}
