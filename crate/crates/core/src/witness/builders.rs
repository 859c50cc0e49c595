//! One builder per construction. Each checks its hypotheses clause by
//! clause, emits the two-half labeling (`p(x)` on the original vertices,
//! `p(x̄)` on the mirrors) and verifies it on the prism before returning.

use crate::error::WitnessError;
use crate::graph::{Graph, VertexSet};
use crate::prism::complementary_prism;
use crate::role::{self, Assignment};

use super::{Param, WitnessTrace};

pub const CLIQUE_PLUS_STAR: &str = "clique_plus_star";
pub const MAXIMAL_CLIQUE: &str = "maximal_clique";
pub const LEAF_INDEPENDENT: &str = "leaf_independent";
pub const PSEUDO_LEAF: &str = "pseudo_leaf";
pub const NO_TRIANGLE: &str = "no_triangle";
pub const COVERING_PAIR: &str = "covering_pair";
pub const BIPARTITE_SMALL_SIDE: &str = "bipartite_small_side";
pub const STAR: &str = "star";
pub const CLIQUE_NO_LEAF_NEIGHBORS: &str = "clique_no_leaf_neighbors";
pub const CLIQUE_TWO_LEAVES: &str = "clique_two_leaves";
pub const SINGLE_LEAF_DOMINATING: &str = "single_leaf_dominating";
pub const SINGLE_LEAF_SANDWICH: &str = "single_leaf_sandwich";
pub const LEAF_PATH_ATTACHMENT: &str = "leaf_path_attachment";
pub const LEAFLESS: &str = "leafless";
pub const SPECIAL_C5: &str = "special_c5";
pub const SPECIAL_K2_CUBED: &str = "special_k2_cubed";

fn ensure(ok: bool, construction: &'static str, clause: &'static str) -> Result<(), WitnessError> {
    if ok {
        Ok(())
    } else {
        Err(WitnessError::Hypothesis {
            construction,
            clause,
        })
    }
}

fn in_range(g: &Graph, vs: &[usize], construction: &'static str) -> Result<(), WitnessError> {
    ensure(
        vs.iter().all(|&v| v < g.n()),
        construction,
        "parameters are vertices of the graph",
    )
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, v)| !vs[i + 1..].contains(v))
}

fn is_triangle(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    distinct(&[a, b, c]) && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)
}

fn param(name: &str, vertices: impl IntoIterator<Item = usize>) -> Param {
    Param {
        name: name.to_string(),
        vertices: vertices.into_iter().collect(),
    }
}

/// Assembles `p(x)` and `p(x̄)` into an assignment of the prism and checks
/// it against its own quotient.
fn finish(
    construction: &'static str,
    g: &Graph,
    params: Vec<Param>,
    original: impl Fn(usize) -> u8,
    mirrored: impl Fn(usize) -> u8,
) -> Result<WitnessTrace, WitnessError> {
    let n = g.n();
    let roles: Vec<u8> = (0..n).map(&original).chain((0..n).map(&mirrored)).collect();
    let unverified = |detail: String| WitnessError::Unverified {
        construction,
        detail,
    };
    let assignment = Assignment::new(roles, 3).map_err(|e| unverified(e.to_string()))?;
    let prism = complementary_prism(g)?;
    let role_graph = role::quotient(prism.graph(), &assignment).map_err(|e| unverified(e.to_string()))?;
    role::verify(prism.graph(), &assignment, &role_graph).map_err(|e| unverified(e.to_string()))?;
    Ok(WitnessTrace {
        construction: construction.to_string(),
        side: crate::characterization::Side::Graph,
        route: Vec::new(),
        params,
        assignment,
        role_graph,
        fallback: false,
    })
}

/// `K_n ∪ K_{1,m}` with `u0` the centre of the star.
pub fn clique_plus_star(g: &Graph, u0: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = CLIQUE_PLUS_STAR;
    in_range(g, &[u0], NAME)?;
    let star = g.neighbors(u0);
    ensure(
        !star.is_empty() && star.iter().all(|x| g.degree(x) == 1),
        NAME,
        "u0 is the centre of a star component K_{1,m}, m >= 1",
    )?;
    let rest = g.closed_neighbors(u0).complement();
    ensure(
        !rest.is_empty() && g.is_clique(&rest),
        NAME,
        "the other vertices form a clique K_n, n >= 1",
    )?;
    let isolated = if rest.len() == 1 { rest.clone() } else { VertexSet::empty(g.n()) };
    finish(
        NAME,
        g,
        vec![param("u0", [u0])],
        |x| match x {
            _ if isolated.contains(x) => 1,
            _ if x == u0 => 2,
            _ => 3,
        },
        |x| match x {
            _ if x == u0 => 1,
            _ if !star.contains(x) => 2,
            _ => 3,
        },
    )
}

/// The three conditions on a maximal clique `C`, or the first one failing.
pub fn maximal_clique_clause(g: &Graph, c: &VertexSet) -> Option<&'static str> {
    if c.is_empty() || !g.is_clique(c) {
        return Some("C is a non-empty clique");
    }
    let outside = c.complement();
    if outside
        .iter()
        .any(|x| c.is_subset(g.neighbors(x)))
    {
        return Some("C is maximal");
    }
    if c.iter().any(|x| g.neighbors(x).is_disjoint(&outside)) {
        return Some("condition 1: every x in C has a neighbour outside C");
    }
    if outside
        .iter()
        .any(|x| outside.difference(g.neighbors(x)).without(x).is_empty())
    {
        return Some("condition 2: every x outside C has a non-neighbour outside C");
    }
    if outside.iter().any(|x| g.neighbors(x).is_disjoint(&outside)) {
        return Some("condition 3: every x outside C has a neighbour outside C");
    }
    None
}

pub fn maximal_clique(g: &Graph, c: &VertexSet) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = MAXIMAL_CLIQUE;
    ensure(c.universe() == g.n(), NAME, "C is a vertex set of the graph")?;
    if let Some(clause) = maximal_clique_clause(g, c) {
        return Err(WitnessError::Hypothesis {
            construction: NAME,
            clause,
        });
    }
    finish(
        NAME,
        g,
        vec![param("C", c.iter())],
        |x| if c.contains(x) { 2 } else { 3 },
        |x| if c.contains(x) { 1 } else { 2 },
    )
}

/// Mirror half shared by the leaf-like constructions: `1` at `a`, `2` off
/// `N[a]`, `3` on `N(a)`.
fn around_a(g: &Graph, a: usize) -> impl Fn(usize) -> u8 + '_ {
    move |x| match x {
        _ if x == a => 1,
        _ if g.has_edge(a, x) => 3,
        _ => 2,
    }
}

/// Leaf `f` hanging from `d`, `N(d)` independent, `a ∈ N(d)` not a leaf and
/// `V ≠ N[a] ∪ {f}`.
pub fn leaf_independent(g: &Graph, f: usize, d: usize, a: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = LEAF_INDEPENDENT;
    in_range(g, &[f, d, a], NAME)?;
    ensure(
        g.degree(f) == 1 && g.has_edge(f, d),
        NAME,
        "f is a leaf with N(f) = {d}",
    )?;
    ensure(g.is_independent(g.neighbors(d)), NAME, "N(d) is independent")?;
    ensure(g.has_edge(d, a), NAME, "a is a neighbour of d")?;
    ensure(g.degree(a) != 1, NAME, "a is not a leaf")?;
    ensure(
        g.closed_neighbors(a).with(f).len() != g.n(),
        NAME,
        "V != N[a] + {f}",
    )?;
    let profile = g.degree_profile();
    let ones = profile.isolated.union(&profile.leaves.intersection(g.neighbors(d)));
    finish(
        NAME,
        g,
        vec![param("f", [f]), param("d", [d]), param("a", [a]), param("I", profile.leaves.intersection(g.neighbors(d)).iter())],
        |x| match x {
            _ if ones.contains(x) => 1,
            _ if x == a || x == d => 2,
            _ => 3,
        },
        around_a(g, a),
    )
}

/// Hypotheses of the pseudo-leaf construction for the pair `(a, b)`.
pub fn pseudo_leaf_clause(g: &Graph, a: usize, b: usize) -> Option<&'static str> {
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    if a == b {
        Some("a != b")
    } else if na.is_empty() || nb.is_empty() {
        Some("a and b are not isolated")
    } else if g.has_edge(a, b) {
        Some("ab is not an edge")
    } else if !g.is_independent(na) {
        Some("N(a) is independent")
    } else if !nb.is_subset(na) || nb == na {
        Some("N(b) is a proper subset of N(a)")
    } else if g.closed_neighbors(a).with(b).len() == g.n() {
        Some("V != N[a] + {b}")
    } else {
        None
    }
}

/// Labeling shared by the pseudo-leaf and triangle-free constructions:
/// `I = {x : N(x) = N(b)}`.
fn pseudo_leaf_labeling(
    name: &'static str,
    g: &Graph,
    a: usize,
    b: usize,
) -> Result<WitnessTrace, WitnessError> {
    let nb = g.neighbors(b).clone();
    let profile = g.degree_profile();
    let twins = VertexSet::from_iter(g.n(), (0..g.n()).filter(|&x| *g.neighbors(x) == nb));
    let ones = profile.isolated.union(&twins);
    finish(
        name,
        g,
        vec![param("a", [a]), param("b", [b]), param("I", twins.iter())],
        |x| match x {
            _ if ones.contains(x) => 1,
            _ if x == a || nb.contains(x) => 2,
            _ => 3,
        },
        around_a(g, a),
    )
}

/// `N(b) ⊊ N(a)` with `N(a)` independent. The labeling needs `b` of
/// minimum degree among all valid pairs, so the pair is re-chosen: smallest
/// `deg(b)`, then lowest `b`, then lowest `a`.
pub fn pseudo_leaf(g: &Graph, a: usize, b: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = PSEUDO_LEAF;
    in_range(g, &[a, b], NAME)?;
    if let Some(clause) = pseudo_leaf_clause(g, a, b) {
        return Err(WitnessError::Hypothesis {
            construction: NAME,
            clause,
        });
    }
    let mut bs: Vec<usize> = (0..g.n()).collect();
    bs.sort_by_key(|&y| (g.degree(y), y));
    let (a, b) = bs
        .iter()
        .find_map(|&y| (0..g.n()).find(|&x| pseudo_leaf_clause(g, x, y).is_none()).map(|x| (x, y)))
        .expect("the given pair is valid");
    pseudo_leaf_labeling(NAME, g, a, b)
}

fn triangle_free_pair_clause(g: &Graph, a: usize, b: usize) -> Option<&'static str> {
    let (na, nb) = (g.neighbors(a), g.neighbors(b));
    if g.n() < 6 {
        Some("n >= 6")
    } else if g.has_triangle() {
        Some("no clique of order 3")
    } else if a == b || g.has_edge(a, b) {
        Some("a != b and ab is not an edge")
    } else if na.is_disjoint(nb) {
        Some("N(a) and N(b) intersect")
    } else if na.is_subset(nb) {
        Some("N(a) - N(b) is non-empty")
    } else {
        None
    }
}

/// Triangle-free, `n ≥ 6`, `ab ∉ E`, `N(a) ∩ N(b) ≠ ∅`, `N(a) − N(b) ≠ ∅`,
/// `V ≠ N[a] ∪ {b}`. Reduces to the pseudo-leaf and covering-pair
/// constructions where those apply.
pub fn no_triangle(g: &Graph, a: usize, b: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = NO_TRIANGLE;
    in_range(g, &[a, b], NAME)?;
    if let Some(clause) = triangle_free_pair_clause(g, a, b) {
        return Err(WitnessError::Hypothesis {
            construction: NAME,
            clause,
        });
    }
    ensure(
        g.closed_neighbors(a).with(b).len() != g.n(),
        NAME,
        "V != N[a] + {b}",
    )?;
    let reduced = |t: WitnessTrace| t.via(NAME);
    if g.neighbors(b).is_subset(g.neighbors(a)) {
        return pseudo_leaf(g, a, b).map(reduced);
    }
    let n = g.n();
    if let Some((x, y)) = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| pseudo_leaf_clause(g, x, y).is_none())
    {
        return pseudo_leaf(g, x, y).map(reduced);
    }
    if g.closed_neighbors(a).union(&g.closed_neighbors(b)).len() == n {
        return covering_pair(g, a, b).map(reduced);
    }
    pseudo_leaf_labeling(NAME, g, a, b)
}

/// Triangle-free, `n ≥ 6`, `a` and `b` non-adjacent with a common neighbour,
/// private neighbours on both sides and `V = N[a] ∪ N[b]`.
pub fn covering_pair(g: &Graph, a: usize, b: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = COVERING_PAIR;
    in_range(g, &[a, b], NAME)?;
    if let Some(clause) = triangle_free_pair_clause(g, a, b) {
        return Err(WitnessError::Hypothesis {
            construction: NAME,
            clause,
        });
    }
    ensure(
        !g.neighbors(b).is_subset(g.neighbors(a)),
        NAME,
        "N(b) - N(a) is non-empty",
    )?;
    ensure(
        g.closed_neighbors(a).union(&g.closed_neighbors(b)).len() == g.n(),
        NAME,
        "V = N[a] + N[b]",
    )?;
    let leaves = g.degree_profile().leaves;
    let (a, b) = match leaves.first() {
        Some(f) if g.has_edge(b, f) => (b, a),
        Some(_) => (a, b),
        None if g.degree(b) < 3 => (b, a),
        None => (a, b),
    };
    let u = g
        .neighbors(a)
        .intersection(g.neighbors(b))
        .first()
        .expect("common neighbour checked above");
    let t = match leaves.first() {
        Some(f) => leaf_independent(g, f, a, u)?,
        None => maximal_clique(g, &VertexSet::from_iter(g.n(), [a, u]))?,
    };
    Ok(t.via(NAME))
}

/// Connected bipartite graph whose smaller side is `B = {b1, b2}`, with `u`
/// a common neighbour of both.
pub fn bipartite_small_side(g: &Graph, b: [usize; 2], u: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = BIPARTITE_SMALL_SIDE;
    in_range(g, &[b[0], b[1], u], NAME)?;
    ensure(g.is_connected(), NAME, "G is connected")?;
    let cd = g.components();
    let bp = cd.components[0].bipartition.as_ref();
    ensure(bp.is_some(), NAME, "G is bipartite")?;
    let bp = bp.unwrap();
    let side = if bp.a.contains(&b[0]) { &bp.a } else { &bp.b };
    let other = if bp.a.contains(&b[0]) { &bp.b } else { &bp.a };
    ensure(
        b[0] != b[1] && side.len() == 2 && side.contains(&b[1]) && other.len() >= 2,
        NAME,
        "B is a side of the bipartition with |B| = 2 <= |A|",
    )?;
    ensure(
        g.has_edge(u, b[0]) && g.has_edge(u, b[1]),
        NAME,
        "u is a common neighbour of B",
    )?;
    finish(
        NAME,
        g,
        vec![param("A", other.iter().copied()), param("B", b), param("u", [u])],
        |x| match x {
            _ if x == u => 1,
            _ if b.contains(&x) => 2,
            _ => 3,
        },
        |x| if x == u { 2 } else { 3 },
    )
}

/// `K_{1,m}`, `m ≥ 2`, centred at `u0`.
pub fn star(g: &Graph, u0: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = STAR;
    in_range(g, &[u0], NAME)?;
    let n = g.n();
    ensure(
        n >= 3 && g.degree(u0) == n - 1 && g.edge_count() == n - 1,
        NAME,
        "G is K_{1,m}, m >= 2, centred at u0",
    )?;
    let u1 = g.neighbors(u0).first().expect("star has leaves");
    finish(
        NAME,
        g,
        vec![param("u0", [u0]), param("u1", [u1])],
        |x| match x {
            _ if x == u1 => 1,
            _ if x == u0 => 2,
            _ => 3,
        },
        |x| match x {
            _ if x == u0 => 1,
            _ if x == u1 => 2,
            _ => 3,
        },
    )
}

/// Mirror half of the triangle constructions: `1` on `{a, b}`, `2` off
/// `N[a] ∩ N[b]`, `3` on `N(a) ∩ N(b)`.
fn around_ab(core: &VertexSet, a: usize, b: usize) -> impl Fn(usize) -> u8 + '_ {
    move |x| match x {
        _ if x == a || x == b => 1,
        _ if core.contains(x) => 3,
        _ => 2,
    }
}

/// Triangle `{a, b, c}`, `a` and `b` without leaf neighbours, and every
/// `x ≠ a, b` has a non-neighbour `y ≠ x` outside `N[a] ∩ N[b]`.
pub fn clique_no_leaf_neighbors(g: &Graph, a: usize, b: usize, c: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = CLIQUE_NO_LEAF_NEIGHBORS;
    in_range(g, &[a, b, c], NAME)?;
    ensure(is_triangle(g, a, b, c), NAME, "{a, b, c} is a clique")?;
    let profile = g.degree_profile();
    ensure(
        g.neighbors(a).is_disjoint(&profile.leaves) && g.neighbors(b).is_disjoint(&profile.leaves),
        NAME,
        "a and b have no leaf neighbours",
    )?;
    let core = g.closed_neighbors(a).intersection(&g.closed_neighbors(b));
    let outer = core.complement();
    ensure(
        (0..g.n())
            .filter(|&x| x != a && x != b)
            .all(|x| !outer.difference(g.neighbors(x)).without(x).is_empty()),
        NAME,
        "every x != a, b has a non-neighbour y != x outside N[a] & N[b]",
    )?;
    let core = core.without(a).without(b);
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("c", [c])],
        |x| match x {
            _ if profile.isolated.contains(x) => 1,
            _ if x == a || x == b => 2,
            _ => 3,
        },
        around_ab(&core, a, b),
    )
}

/// Triangle `{a, b, c}` where `a` and `b` together have at least two leaf
/// neighbours.
pub fn clique_two_leaves(g: &Graph, a: usize, b: usize, c: usize) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = CLIQUE_TWO_LEAVES;
    in_range(g, &[a, b, c], NAME)?;
    ensure(is_triangle(g, a, b, c), NAME, "{a, b, c} is a clique")?;
    let profile = g.degree_profile();
    let fab = g.neighbors(a).union(g.neighbors(b)).intersection(&profile.leaves);
    ensure(fab.len() >= 2, NAME, "|F_a + F_b| >= 2")?;
    let ones = profile.isolated.union(&fab);
    let core = g.neighbors(a).intersection(g.neighbors(b));
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("c", [c]), param("F", fab.iter())],
        |x| match x {
            _ if ones.contains(x) => 1,
            _ if x == a || x == b => 2,
            _ => 3,
        },
        around_ab(&core, a, b),
    )
}

fn single_leaf(g: &Graph, f: usize, construction: &'static str) -> Result<(), WitnessError> {
    let profile = g.degree_profile();
    ensure(
        profile.leaves.len() == 1 && profile.leaves.contains(f),
        construction,
        "f is the only leaf",
    )?;
    ensure(profile.isolated.is_empty(), construction, "no isolated vertices")
}

/// Single leaf `f` on `c`, triangle `{a, b, c}`, `V ≠ N[a] ∪ {f}`, and `c`
/// adjacent to everything outside `N[a] ∩ N[b]`. `c` must not be universal
/// (otherwise the complement has an isolated vertex and another
/// construction applies).
pub fn single_leaf_dominating(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
    f: usize,
) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = SINGLE_LEAF_DOMINATING;
    in_range(g, &[a, b, c, f], NAME)?;
    single_leaf(g, f, NAME)?;
    ensure(is_triangle(g, a, b, c), NAME, "{a, b, c} is a clique")?;
    ensure(g.has_edge(c, f), NAME, "N(f) = {c}")?;
    let n = g.n();
    ensure(
        g.closed_neighbors(a).with(f).len() != n,
        NAME,
        "V != N[a] + {f}",
    )?;
    let core = g.closed_neighbors(a).intersection(&g.closed_neighbors(b));
    ensure(
        core.complement().is_subset(g.neighbors(c)),
        NAME,
        "c is adjacent to every y outside N[a] & N[b]",
    )?;
    ensure(g.degree(c) != n - 1, NAME, "c is not universal")?;
    let big = VertexSet::from_iter(n, (0..n).filter(|&x| x != f && g.degree(x) == n - 2 && !g.has_edge(x, f)));
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("c", [c]), param("f", [f]), param("C", big.iter())],
        |x| match x {
            _ if x == a || x == f => 1,
            _ if g.has_edge(a, x) => 2,
            _ => 3,
        },
        |x| match x {
            _ if big.contains(x) => 1,
            _ if x == a || x == f => 2,
            _ => 3,
        },
    )
}

/// Single leaf `f` on `d`, triangle `{a, b, d}`, `V = (N[a] ∩ N[b]) ∪ {f}`,
/// `d` not universal.
pub fn single_leaf_sandwich(
    g: &Graph,
    a: usize,
    b: usize,
    d: usize,
    f: usize,
) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = SINGLE_LEAF_SANDWICH;
    in_range(g, &[a, b, d, f], NAME)?;
    single_leaf(g, f, NAME)?;
    ensure(is_triangle(g, a, b, d), NAME, "{a, b, d} is a clique")?;
    ensure(g.has_edge(d, f), NAME, "N(f) = {d}")?;
    let core = g.closed_neighbors(a).intersection(&g.closed_neighbors(b));
    ensure(
        core.with(f).len() == g.n(),
        NAME,
        "V = (N[a] & N[b]) + {f}",
    )?;
    ensure(g.degree(d) != g.n() - 1, NAME, "d is not universal")?;
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("d", [d]), param("f", [f])],
        |x| match x {
            _ if x == f => 1,
            _ if x == a || x == d => 2,
            _ => 3,
        },
        |x| match x {
            _ if x == a || x == d => 1,
            _ if x == f || !g.has_edge(d, x) => 2,
            _ => 3,
        },
    )
}

/// Triangle `{a, b, c}`, leaf `f` on `d`, `N(d) = {a, f}`, `V = N[a] ∪ {f}`.
pub fn leaf_path_attachment(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    f: usize,
) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = LEAF_PATH_ATTACHMENT;
    in_range(g, &[a, b, c, d, f], NAME)?;
    ensure(distinct(&[a, b, c, d, f]), NAME, "a, b, c, d, f are distinct")?;
    ensure(is_triangle(g, a, b, c), NAME, "{a, b, c} is a clique")?;
    ensure(
        g.degree(f) == 1 && g.has_edge(f, d),
        NAME,
        "f is a leaf with N(f) = {d}",
    )?;
    ensure(
        g.degree(d) == 2 && g.has_edge(d, a),
        NAME,
        "N(d) = {a, f}",
    )?;
    ensure(
        g.closed_neighbors(a).with(f).len() == g.n(),
        NAME,
        "V = N[a] + {f}",
    )?;
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("c", [c]), param("d", [d]), param("f", [f])],
        |x| match x {
            _ if x == c => 1,
            _ if g.has_edge(c, x) => 2,
            _ => 3,
        },
        |x| match x {
            _ if x == a => 1,
            _ if x == c || x == f => 2,
            _ => 3,
        },
    )
}

/// Neither `G` nor `Ḡ` has leaves or isolated vertices; triangle
/// `{a, b, c}`; `d` adjacent to everything outside `N[a] ∩ N[b]` except
/// itself; `af ∉ E`; `a` or `f` shares a neighbour with `d`.
pub fn leafless(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    f: usize,
) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = LEAFLESS;
    in_range(g, &[a, b, c, d, f], NAME)?;
    let n = g.n();
    ensure(
        (0..n).all(|x| g.degree(x) >= 2 && g.degree(x) + 3 <= n),
        NAME,
        "no universal or isolated vertices and no leaves in G or its complement",
    )?;
    ensure(is_triangle(g, a, b, c), NAME, "{a, b, c} is a clique")?;
    ensure(
        distinct(&[a, b, d]) && distinct(&[a, b, f]) && d != f,
        NAME,
        "f, d are distinct and outside {a, b}",
    )?;
    let core = g.closed_neighbors(a).intersection(&g.closed_neighbors(b));
    ensure(
        core.complement().without(d).is_subset(g.neighbors(d)),
        NAME,
        "condition 1: d is adjacent to every y != d outside N[a] & N[b]",
    )?;
    ensure(!g.has_edge(a, f), NAME, "condition 2: af is not an edge")?;
    let naf = g.neighbors(a).union(g.neighbors(f));
    ensure(
        !naf.is_disjoint(g.neighbors(d)),
        NAME,
        "condition 3: N(a) + N(f) meets N(d)",
    )?;
    finish(
        NAME,
        g,
        vec![param("a", [a]), param("b", [b]), param("c", [c]), param("d", [d]), param("f", [f])],
        |x| match x {
            _ if x == a || x == f => 1,
            _ if naf.contains(x) => 2,
            _ => 3,
        },
        |x| if x == a || x == f { 2 } else { 3 },
    )
}

/// The lexicographically first labeling of the prism of the 5-cycle
/// `0-1-2-3-4-0` realizing the path `1-2-3` with a loop at `3`, found by
/// exhaustive search and frozen. Original half, then mirrored half.
pub const C5_GOLDEN: [u8; 10] = [1, 2, 3, 3, 2, 2, 3, 3, 3, 3];

/// Labeling of the prism of `u1v1 + u2v2 + u3v3` realizing the loopless
/// triangle: `(u1, v1, u2, v2, u3, v3)` then their mirrors.
pub const K2_CUBED_GOLDEN: [u8; 12] = [2, 3, 1, 3, 1, 2, 1, 1, 2, 2, 3, 3];

/// Vertices of a 5-cycle in cyclic order starting at 0, walking to the
/// lower neighbour first.
fn c5_order(g: &Graph) -> Option<[usize; 5]> {
    if g.n() != 5 || !(0..5).all(|v| g.degree(v) == 2) || !g.is_connected() {
        return None;
    }
    let mut order = [0usize; 5];
    order[1] = g.neighbors(0).first()?;
    for i in 2..5 {
        order[i] = g
            .neighbors(order[i - 1])
            .iter()
            .find(|&w| w != order[i - 2])?;
    }
    Some(order)
}

pub fn is_c5(g: &Graph) -> bool {
    c5_order(g).is_some()
}

/// The three edges of a perfect matching on six vertices, lower endpoint
/// first, ordered by lower endpoint.
fn k2_cubed_edges(g: &Graph) -> Option<Vec<(usize, usize)>> {
    if g.n() != 6 || g.edge_count() != 3 || !(0..6).all(|v| g.degree(v) == 1) {
        return None;
    }
    Some(g.edges().collect())
}

pub fn is_k2_cubed(g: &Graph) -> bool {
    k2_cubed_edges(g).is_some()
}

pub fn special_c5(g: &Graph) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = SPECIAL_C5;
    let order = c5_order(g).ok_or(WitnessError::Hypothesis {
        construction: NAME,
        clause: "G is a 5-cycle",
    })?;
    let pos = |x: usize| order.iter().position(|&v| v == x).unwrap();
    finish(
        NAME,
        g,
        vec![param("cycle", order)],
        |x| C5_GOLDEN[pos(x)],
        |x| C5_GOLDEN[5 + pos(x)],
    )
}

pub fn special_k2_cubed(g: &Graph) -> Result<WitnessTrace, WitnessError> {
    const NAME: &str = SPECIAL_K2_CUBED;
    let edges = k2_cubed_edges(g).ok_or(WitnessError::Hypothesis {
        construction: NAME,
        clause: "G is three disjoint edges",
    })?;
    let slot = |x: usize| {
        let i = edges.iter().position(|&(u, v)| u == x || v == x).unwrap();
        2 * i + usize::from(edges[i].1 == x)
    };
    finish(
        NAME,
        g,
        vec![param("u", edges.iter().map(|e| e.0)), param("v", edges.iter().map(|e| e.1))],
        |x| K2_CUBED_GOLDEN[slot(x)],
        |x| K2_CUBED_GOLDEN[6 + slot(x)],
    )
}
