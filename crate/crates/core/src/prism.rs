//! The complementary prism `G·Ḡ`: `G` and its complement side by side,
//! joined by the perfect matching of edges `v v̄`.
//!
//! Layout is fixed: original vertex `i` keeps index `i`, its mirror `ī` is
//! `n + i`.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::format::{self, Format};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Original(usize),
    Mirrored(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrismGraph {
    graph: Graph,
    base_n: usize,
}

impl PrismGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Order of the base graph; the prism has twice as many vertices.
    pub fn base_order(&self) -> usize {
        self.base_n
    }

    pub fn origin(&self, v: usize) -> Origin {
        assert!(v < 2 * self.base_n);
        if v < self.base_n {
            Origin::Original(v)
        } else {
            Origin::Mirrored(v - self.base_n)
        }
    }

    /// `v ↦ v̄` and back.
    pub fn mirror(&self, v: usize) -> usize {
        match self.origin(v) {
            Origin::Original(i) => i + self.base_n,
            Origin::Mirrored(i) => i,
        }
    }

    /// Edge list with an `i <-> n+i` sidecar header, or plain graph6.
    pub fn emit(&self, fmt: Format) -> String {
        match fmt {
            Format::Graph6 => format::emit(&self.graph, Format::Graph6),
            Format::Edgelist => {
                let mut out = String::new();
                let _ = writeln!(out, "# complementary prism of a graph on {} vertices", self.base_n);
                for i in 0..self.base_n {
                    let _ = writeln!(out, "# {} <-> {}", i, i + self.base_n);
                }
                out.push_str(&format::to_edge_list(&self.graph));
                out
            }
        }
    }
}

pub fn complementary_prism(g: &Graph) -> Result<PrismGraph, GraphError> {
    let n = g.n();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut p = Graph::empty(2 * n);
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                p.link(u, v);
            } else {
                p.link(n + u, n + v);
            }
        }
    }
    for i in 0..n {
        p.link(i, n + i);
    }
    Ok(PrismGraph { graph: p, base_n: n })
}
