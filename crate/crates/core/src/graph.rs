//! Finite simple undirected graphs with bitset adjacency.
//!
//! Vertices are the dense indices `0..n`. Each adjacency row is a
//! [`VertexSet`], so neighbourhood algebra (intersections, inclusion tests,
//! complements) is word-parallel.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// A set of vertices drawn from a fixed universe `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, items: I) -> Self {
        let mut s = Self::empty(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    fn trim(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip(other, |a, b| a & !b)
    }

    /// Members of the universe not in `self`.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn with(mut self, v: usize) -> VertexSet {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> VertexSet {
        self.remove(v);
        self
    }

    fn zip(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Immutable once built: every constructor validates its input, and no
/// method mutates the adjacency afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![VertexSet::empty(n); n],
            edges: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        g
    }

    // Duplicate edges are idempotent.
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.edges += 1;
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// `K_{a,b}` with the first `a` vertices forming one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
    }

    /// `K_{1,m}` with centre 0.
    pub fn star(m: usize) -> Self {
        Graph::complete_bipartite(1, m)
    }

    /// Disjoint union, numbering each part's vertices after the previous part.
    pub fn disjoint_union(parts: &[Graph]) -> Self {
        let n = parts.iter().map(Graph::n).sum();
        let mut g = Graph::empty(n);
        let mut offset = 0;
        for p in parts {
            for (u, v) in p.edges() {
                g.link(offset + u, offset + v);
            }
            offset += p.n();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// `N[v]`.
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.rows[v].clone().with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows: Vec<VertexSet> = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| row.complement().without(v))
            .collect();
        Graph {
            rows,
            edges: n * n.saturating_sub(1) / 2 - self.edges,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|v| set.clone().without(v).is_subset(&self.rows[v]))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    /// True iff every pair of distinct vertices is adjacent; vacuous for `n <= 1`.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edges == n * n.saturating_sub(1) / 2
    }

    pub fn is_bipartite(&self) -> bool {
        self.components().is_bipartite()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| !self.rows[u].is_disjoint(&self.rows[v]))
    }

    /// Triangles `(a, b, c)` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> impl Iterator<Item = [usize; 3]> + '_ {
        self.edges().flat_map(move |(a, b)| {
            self.rows[a]
                .intersection(&self.rows[b])
                .iter()
                .filter(move |&c| c > b)
                .map(move |c| [a, b, c])
                .collect::<Vec<_>>()
        })
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let of_degree = |d: usize| {
            VertexSet::from_iter(
                self.n(),
                degrees
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| x == d)
                    .map(|(v, _)| v),
            )
        };
        DegreeProfile {
            isolated: of_degree(0),
            leaves: of_degree(1),
            degrees,
        }
    }

    /// Connected components by breadth-first search, with a 2-colouring
    /// attempted per component.
    pub fn components(&self) -> ComponentDecomposition {
        let n = self.n();
        let mut component_of = vec![usize::MAX; n];
        let mut side = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if component_of[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            component_of[root] = id;
            queue.push_back(root);
            let mut vertices = Vec::new();
            let mut degree_sum = 0;
            let mut bipartite = true;
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                degree_sum += self.degree(v);
                for w in self.rows[v].iter() {
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        side[w] = !side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        bipartite = false;
                    }
                }
            }
            vertices.sort_unstable();
            let bipartition = bipartite.then(|| {
                let (a, b): (Vec<usize>, Vec<usize>) =
                    vertices.iter().partition(|&&v| !side[v]);
                Bipartition { a, b }
            });
            components.push(Component {
                vertices,
                edge_count: degree_sum / 2,
                bipartition,
            });
        }
        ComponentDecomposition {
            components,
            component_of,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Degrees together with `G₀` (isolated vertices) and `G₁` (leaves).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub isolated: VertexSet,
    pub leaves: VertexSet,
}

/// The two colour classes of a bipartite component. `a` holds the root's
/// class, so it is never empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
    /// Present iff the component has no odd cycle.
    pub bipartition: Option<Bipartition>,
}

impl Component {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// A component with at least two vertices.
    pub fn is_nontrivial(&self) -> bool {
        self.order() >= 2
    }

    /// Side sizes `(small, large)` when the component is `K_{small,large}`
    /// with both sides non-empty.
    pub fn complete_bipartite_sides(&self) -> Option<(usize, usize)> {
        let bp = self.bipartition.as_ref()?;
        let (x, y) = (bp.a.len(), bp.b.len());
        (x >= 1 && y >= 1 && self.edge_count == x * y).then_some((x.min(y), x.max(y)))
    }

    /// Number of leaves when the component is a star `K_{1,m}`, `m >= 1`.
    /// `K₂` reports `Some(1)`.
    pub fn star_leaves(&self) -> Option<usize> {
        match self.complete_bipartite_sides()? {
            (1, m) => Some(m),
            _ => None,
        }
    }

    /// The centre of a star component; the lower-indexed endpoint for `K₂`.
    pub fn star_center(&self) -> Option<usize> {
        self.star_leaves()?;
        let bp = self.bipartition.as_ref()?;
        match (bp.a.len(), bp.b.len()) {
            (1, 1) => Some(bp.a[0].min(bp.b[0])),
            (1, _) => Some(bp.a[0]),
            _ => Some(bp.b[0]),
        }
    }

    pub fn is_complete(&self) -> bool {
        let k = self.order();
        self.edge_count == k * (k - 1) / 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Component>,
    /// Index into `components` for each vertex.
    pub component_of: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_bipartite(&self) -> bool {
        self.components.iter().all(|c| c.bipartition.is_some())
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.is_nontrivial())
    }

    pub fn isolated_count(&self) -> usize {
        self.components.iter().filter(|c| c.order() == 1).count()
    }
}

/// `Some((n, m))` with `n <= m` iff the component is complete bipartite.
pub fn is_complete_bipartite_component(c: &Component) -> Option<(usize, usize)> {
    c.complete_bipartite_sides()
}

/// `Some(m)` iff the component is the star `K_{1,m}`.
pub fn is_star_component(c: &Component) -> Option<usize> {
    c.star_leaves()
}
