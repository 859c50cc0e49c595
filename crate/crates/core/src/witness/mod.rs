//! Explicit 3-role assignments of complementary prisms.
//!
//! [`construct`] walks the case analysis behind the characterization:
//! the two sporadic graphs first, then bipartite `G` (or `Ḡ`), then the
//! non-bipartite stages (triangle-free, isolated vertices, leaves,
//! leafless). Inside a stage every builder is tried with its parameters
//! scanned in index order; the first tuple whose hypotheses hold wins.
//! Builders always verify their own output, and a labeling that fails
//! verification is reported as an error rather than skipped.

mod builders;

use std::fmt::{self, Write as _};

use crate::characterization::{decide, Side};
use crate::error::{ParseError, WitnessError};
use crate::graph::{Graph, VertexSet};
use crate::characterization::is_isolated_plus_star;
use crate::prism::complementary_prism;
use crate::role::{self, Assignment, RoleGraph};
use crate::solver::{self, SolveOutcome, DEFAULT_BUDGET};

pub use builders::*;

/// Construction id used when the dispatcher falls back to the oracle.
pub const ORACLE: &str = "oracle";

/// A named parameter of a construction: one vertex or a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub vertices: Vec<usize>,
}

/// A witness together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTrace {
    /// Id of the construction that emitted the labeling.
    pub construction: String,
    /// Whether the construction ran on `G` or on `Ḡ` (then mirrored).
    pub side: Side,
    /// Dispatch stages and reductions passed through, outermost first.
    pub route: Vec<String>,
    /// Parameters as vertices of the side the construction ran on; the
    /// vertex set is shared by `G` and `Ḡ`.
    pub params: Vec<Param>,
    /// Assignment of the prism of the input graph (`i` original, `n + i`
    /// mirror).
    pub assignment: Assignment,
    pub role_graph: RoleGraph,
    pub fallback: bool,
}

impl WitnessTrace {
    pub(crate) fn via(mut self, step: &str) -> Self {
        self.route.insert(0, step.to_string());
        self
    }

    /// The same witness for the prism of the complement: both prisms are
    /// the same graph with the halves swapped.
    fn mirrored(mut self, n: usize) -> Self {
        self.assignment = self.assignment.rotated(n);
        self.side = match self.side {
            Side::Graph => Side::Complement,
            Side::Complement => Side::Graph,
        };
        self
    }

    pub fn param(&self, name: &str) -> Option<&[usize]> {
        self.params
            .iter()
            .find(|p| p.name == name)
            .map(|p| p.vertices.as_slice())
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("lemma {}\nside {}\n", self.construction, self.side);
        let route = if self.route.is_empty() {
            "-".to_string()
        } else {
            self.route.join(" > ")
        };
        let _ = writeln!(out, "route {route}");
        let _ = writeln!(out, "fallback {}", self.fallback);
        for p in &self.params {
            let vs: Vec<String> = p.vertices.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "param {} = {}", p.name, vs.join(" "));
        }
        out.push_str(&role::serialize(&self.assignment, &self.role_graph));
        out
    }

    pub fn parse(input: &str) -> Result<WitnessTrace, ParseError> {
        let lines = role::numbered_lines(input);
        let err = |l: &role::Line<'_>, msg: &str| ParseError::new(l.number, l.offset, msg);
        let mut construction = None;
        let mut side = None;
        let mut route = Vec::new();
        let mut fallback = None;
        let mut params = Vec::new();
        let mut split = lines.len();
        for (i, l) in lines.iter().enumerate() {
            let (key, rest) = l.text.split_once(char::is_whitespace).unwrap_or((l.text, ""));
            let rest = rest.trim();
            match key {
                "lemma" if !rest.is_empty() => construction = Some(rest.to_string()),
                "side" => {
                    side = Some(match rest {
                        "G" => Side::Graph,
                        "Gc" => Side::Complement,
                        _ => return Err(err(l, "side must be G or Gc")),
                    })
                }
                "route" => {
                    route = match rest {
                        "-" => Vec::new(),
                        _ => rest.split('>').map(|s| s.trim().to_string()).collect(),
                    }
                }
                "fallback" => {
                    fallback = Some(rest.parse::<bool>().map_err(|_| err(l, "fallback must be true or false"))?)
                }
                "param" => {
                    let (name, vs) = rest
                        .split_once('=')
                        .ok_or_else(|| err(l, "expected 'param <name> = <vertices>'"))?;
                    let vertices = vs
                        .split_whitespace()
                        .map(str::parse)
                        .collect::<Result<Vec<usize>, _>>()
                        .map_err(|_| err(l, "parameter values must be vertex indices"))?;
                    params.push(Param {
                        name: name.trim().to_string(),
                        vertices,
                    });
                }
                "roles" => {
                    split = i;
                    break;
                }
                _ => return Err(err(l, "unexpected line in trace header")),
            }
        }
        let missing = |what: &str| ParseError::new(1, 0, format!("trace header lacks '{what}'"));
        let construction = construction.ok_or_else(|| missing("lemma"))?;
        let side = side.ok_or_else(|| missing("side"))?;
        let fallback = fallback.ok_or_else(|| missing("fallback"))?;
        let (assignment, role_graph) = role::parse_blocks(&lines[split..])?;
        Ok(WitnessTrace {
            construction,
            side,
            route,
            params,
            assignment,
            role_graph,
            fallback,
        })
    }
}

impl fmt::Display for WitnessTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Builds a verified witness, falling back to the oracle only if no case of
/// the analysis applies.
pub fn construct(g: &Graph) -> Result<WitnessTrace, WitnessError> {
    construct_with_budget(g, DEFAULT_BUDGET)
}

/// [`construct`] with an explicit node budget for the fallback search.
pub fn construct_with_budget(g: &Graph, budget: u64) -> Result<WitnessTrace, WitnessError> {
    let report = decide(g)?;
    if !report.has_assignment() {
        return Err(WitnessError::NoAssignment(report));
    }
    let prism = complementary_prism(g)?;
    if let Some(t) = dispatch(g, &g.complement())? {
        role::verify(prism.graph(), &t.assignment, &t.role_graph).map_err(|e| WitnessError::Unverified {
            construction: "dispatch",
            detail: format!("{}: {e}", t.construction),
        })?;
        return Ok(t);
    }
    let unresolved = |detail: String| WitnessError::Unverified {
        construction: ORACLE,
        detail,
    };
    match solver::brute_force_solve(prism.graph(), 3, budget).map_err(|e| unresolved(e.to_string()))? {
        SolveOutcome::Found {
            assignment,
            role_graph,
        } => Ok(WitnessTrace {
            construction: ORACLE.to_string(),
            side: Side::Graph,
            route: Vec::new(),
            params: Vec::new(),
            assignment,
            role_graph,
            fallback: true,
        }),
        SolveOutcome::NoAssignment => Err(unresolved("no case applies and the search found nothing".into())),
        SolveOutcome::Unknown { nodes } => Err(unresolved(format!(
            "no case applies and the search stopped after {nodes} nodes"
        ))),
    }
}

type Step = Result<Option<WitnessTrace>, WitnessError>;

/// Turns a hypothesis failure into "not applicable"; anything else is a
/// real error.
fn attempt(r: Result<WitnessTrace, WitnessError>) -> Step {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(WitnessError::Hypothesis { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Returns the first successful candidate.
fn first<I>(candidates: I) -> Step
where
    I: IntoIterator<Item = Result<WitnessTrace, WitnessError>>,
{
    for c in candidates {
        if let Some(t) = attempt(c)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Tries each step in turn.
macro_rules! chain {
    ($($step:expr),+ $(,)?) => {{
        $(
            if let Some(t) = $step? {
                return Ok(Some(t));
            }
        )+
        Ok(None)
    }};
}

fn dispatch(g: &Graph, gc: &Graph) -> Step {
    let n = g.n();
    if is_c5(g) {
        return special_c5(g).map(Some);
    }
    if is_k2_cubed(g) {
        return special_k2_cubed(g).map(Some);
    }
    if is_k2_cubed(gc) {
        return special_k2_cubed(gc).map(|t| Some(t.mirrored(n)));
    }
    if g.is_bipartite() {
        return Ok(bipartite(g)?.map(|t| t.via("bipartite")));
    }
    if gc.is_bipartite() {
        return Ok(bipartite(gc)?.map(|t| t.via("bipartite").mirrored(n)));
    }
    non_bipartite(g, gc)
}

fn bipartite(g: &Graph) -> Step {
    let cd = g.components();
    if cd.isolated_count() > 0 {
        if is_isolated_plus_star(&cd) {
            let centre = cd.nontrivial().find_map(|c| c.star_center()).expect("star component");
            return clique_plus_star(g, centre).map(Some);
        }
        return non_complete_component(g);
    }
    if cd.nontrivial().any(|c| c.complete_bipartite_sides().is_none()) {
        return non_complete_component(g);
    }
    if let Some(c) = cd
        .components
        .iter()
        .find(|c| matches!(c.complete_bipartite_sides(), Some((s, _)) if s >= 2))
    {
        if cd.len() == 1 && c.complete_bipartite_sides().unwrap().0 == 2 {
            return scan_bipartite_small_side(g);
        }
        let u = c.vertices[0];
        let v = g.neighbors(u).first().expect("non-trivial component");
        return maximal_clique(g, &VertexSet::from_iter(g.n(), [u, v])).map(Some);
    }
    // Every component is a star.
    let stars: Vec<(usize, usize)> = cd
        .components
        .iter()
        .map(|c| (c.star_leaves().unwrap(), c.star_center().unwrap()))
        .collect();
    match stars[..] {
        [(m, u0)] if m >= 2 => star(g, u0).map(Some),
        [(1, u0), (1, _)] => clique_plus_star(g, u0).map(Some),
        [(1, _), (m, u0)] | [(m, u0), (1, _)] if m >= 2 => clique_plus_star(g, u0).map(Some),
        _ => Ok(None),
    }
}

fn non_complete_component(g: &Graph) -> Step {
    chain!(
        scan_no_triangle(g),
        if g.is_connected() { scan_bipartite_small_side(g) } else { Ok(None) },
        scan_leaf_independent(g),
    )
}

fn non_bipartite(g: &Graph, gc: &Graph) -> Step {
    let n = g.n();
    let sides = [(g, false), (gc, true)];
    let on = |mirror: bool, stage: &str, step: Step| -> Step {
        Ok(step?.map(|t| {
            let t = t.via(stage).via("non_bipartite");
            if mirror {
                t.mirrored(n)
            } else {
                t
            }
        }))
    };
    for &(h, mirror) in &sides {
        if !h.has_triangle() {
            if let Some(t) = on(mirror, "triangle_free", scan_no_triangle(h))? {
                return Ok(Some(t));
            }
        }
    }
    for &(h, mirror) in &sides {
        if !h.degree_profile().isolated.is_empty() {
            let step = (|| chain!(scan_two_leaves(h), scan_no_leaf_neighbors(h)))();
            if let Some(t) = on(mirror, "isolated", step)? {
                return Ok(Some(t));
            }
        }
    }
    for &(h, mirror) in &sides {
        if !h.degree_profile().leaves.is_empty() {
            let step = (|| {
                chain!(
                    scan_two_leaves(h),
                    scan_no_leaf_neighbors(h),
                    scan_single_leaf_dominating(h),
                    scan_single_leaf_sandwich(h),
                    scan_leaf_independent(h),
                    scan_leaf_path_attachment(h),
                    first((0..h.n()).map(|u0| clique_plus_star(h, u0))),
                )
            })();
            if let Some(t) = on(mirror, "leaf", step)? {
                return Ok(Some(t));
            }
        }
    }
    for &(h, mirror) in &sides {
        let step = (|| {
            chain!(
                scan_no_leaf_neighbors(h),
                scan_leafless(h),
                first(h.edges().map(|(u, v)| maximal_clique(h, &VertexSet::from_iter(h.n(), [u, v])))),
            )
        })();
        if let Some(t) = on(mirror, "leafless", step)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// Triangles as `(a, b, c)` for each of the three choices of `c`.
fn oriented_triangles(g: &Graph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    g.triangles()
        .flat_map(|[x, y, z]| [(x, y, z), (x, z, y), (y, z, x)])
}

fn scan_no_triangle(g: &Graph) -> Step {
    if g.n() < 6 || g.has_triangle() {
        return Ok(None);
    }
    first(pairs(g.n()).map(|(a, b)| no_triangle(g, a, b)))
}

fn scan_bipartite_small_side(g: &Graph) -> Step {
    let cd = g.components();
    let Some(bp) = cd.components.first().and_then(|c| c.bipartition.as_ref()) else {
        return Ok(None);
    };
    for side in [&bp.a, &bp.b] {
        if let [b1, b2] = side[..] {
            let common = g.neighbors(b1).intersection(g.neighbors(b2));
            if let Some(u) = common.first() {
                if let Some(t) = attempt(bipartite_small_side(g, [b1, b2], u))? {
                    return Ok(Some(t));
                }
            }
        }
    }
    Ok(None)
}

fn scan_leaf_independent(g: &Graph) -> Step {
    let leaves = g.degree_profile().leaves;
    first(leaves.iter().flat_map(|f| {
        let d = g.neighbors(f).first().unwrap();
        g.neighbors(d).iter().map(move |a| leaf_independent(g, f, d, a))
    }))
}

fn scan_two_leaves(g: &Graph) -> Step {
    first(oriented_triangles(g).map(|(a, b, c)| clique_two_leaves(g, a, b, c)))
}

fn scan_no_leaf_neighbors(g: &Graph) -> Step {
    first(oriented_triangles(g).map(|(a, b, c)| clique_no_leaf_neighbors(g, a, b, c)))
}

fn sole_leaf(g: &Graph) -> Option<(usize, usize)> {
    let leaves = g.degree_profile().leaves;
    (leaves.len() == 1).then(|| {
        let f = leaves.first().unwrap();
        (f, g.neighbors(f).first().unwrap())
    })
}

/// Ordered pairs `(a, b)` completing a triangle with `c`.
fn triangles_at(g: &Graph, c: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.neighbors(c).iter().flat_map(move |a| {
        g.neighbors(c)
            .intersection(g.neighbors(a))
            .iter()
            .map(move |b| (a, b))
            .collect::<Vec<_>>()
    })
}

fn scan_single_leaf_dominating(g: &Graph) -> Step {
    let Some((f, c)) = sole_leaf(g) else {
        return Ok(None);
    };
    first(triangles_at(g, c).map(|(a, b)| single_leaf_dominating(g, a, b, c, f)))
}

fn scan_single_leaf_sandwich(g: &Graph) -> Step {
    let Some((f, d)) = sole_leaf(g) else {
        return Ok(None);
    };
    first(triangles_at(g, d).map(|(a, b)| single_leaf_sandwich(g, a, b, d, f)))
}

fn scan_leaf_path_attachment(g: &Graph) -> Step {
    let leaves = g.degree_profile().leaves;
    first(leaves.iter().flat_map(|f| {
        let d = g.neighbors(f).first().unwrap();
        let a = g.neighbors(d).iter().find(|&x| x != f);
        a.into_iter()
            .flat_map(move |a| triangles_at(g, a).map(move |(b, c)| leaf_path_attachment(g, a, b, c, d, f)))
            .collect::<Vec<_>>()
    }))
}

fn scan_leafless(g: &Graph) -> Step {
    let n = g.n();
    if (0..n).any(|x| g.degree(x) < 2 || g.degree(x) + 3 > n) {
        return Ok(None);
    }
    first(oriented_triangles(g).flat_map(|(a, b, c)| {
        pairs(n).map(move |(d, f)| leafless(g, a, b, c, d, f))
    }))
}

#[cfg(test)]
mod tests;
