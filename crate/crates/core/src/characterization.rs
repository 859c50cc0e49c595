//! Polynomial-time decision: the prism of `G` has a 3-role assignment iff
//! neither `G` nor `Ḡ` falls into one of five exceptional families.
//!
//! 1. `K_n`, `n ≥ 2`;
//! 2. isolated vertices present, every non-trivial component complete
//!    bipartite, and not `K₁ ∪ K_{1,m}`;
//! 3. `t·K₂`, `t ≥ 4`;
//! 4. a union of `t ≥ 3` stars, at least one with two or more leaves;
//! 5. `K_{1,m₁} ∪ K_{1,m₂}` with `m₁, m₂ ≥ 2`.
//!
//! Each recognizer is a scan over degrees and components, so `decide` is
//! dominated by materializing the complement: `O(n²)`.

use std::fmt;

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{ComponentDecomposition, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// The input graph.
    #[serde(rename = "G")]
    Graph,
    /// Its complement.
    #[serde(rename = "Gc")]
    Complement,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Graph => "G",
            Side::Complement => "Gc",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HasAssignment,
    NoAssignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionMatch {
    pub side: Side,
    /// Exceptional family, `1..=5`.
    pub condition: u8,
    /// Short component summary of the matched side.
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub matched: Option<ConditionMatch>,
}

impl DecisionReport {
    pub fn has_assignment(&self) -> bool {
        self.verdict == Verdict::HasAssignment
    }

    /// `YES`, or `NO side=<G|Gc> cond=<k>`.
    pub fn line(&self) -> String {
        match &self.matched {
            None => "YES".to_string(),
            Some(m) => format!("NO side={} cond={}", m.side, m.condition),
        }
    }
}

impl fmt::Display for DecisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())?;
        if let Some(m) = &self.matched {
            write!(f, " ({})", m.evidence)?;
        }
        Ok(())
    }
}

pub fn cond1_complete(g: &Graph) -> bool {
    g.n() >= 2 && g.is_complete()
}

pub fn cond2_isolated_union_complete_bipartite(g: &Graph) -> bool {
    cond2_on(&g.components())
}

pub fn cond3_matching(g: &Graph) -> bool {
    cond3_on(&g.components())
}

pub fn cond4_many_stars(g: &Graph) -> bool {
    cond4_on(&g.components())
}

pub fn cond5_two_stars(g: &Graph) -> bool {
    cond5_on(&g.components())
}

/// `K₁ ∪ K_{1,m}` for some `m ≥ 1`.
pub fn is_isolated_plus_star(cd: &ComponentDecomposition) -> bool {
    cd.len() == 2 && cd.isolated_count() == 1 && cd.nontrivial().all(|c| c.star_leaves().is_some())
}

fn cond2_on(cd: &ComponentDecomposition) -> bool {
    cd.isolated_count() > 0
        && cd.nontrivial().all(|c| c.complete_bipartite_sides().is_some())
        && !is_isolated_plus_star(cd)
}

fn cond3_on(cd: &ComponentDecomposition) -> bool {
    cd.len() >= 4 && cd.components.iter().all(|c| c.order() == 2)
}

fn star_sizes(cd: &ComponentDecomposition) -> Option<Vec<usize>> {
    cd.components.iter().map(|c| c.star_leaves()).collect()
}

fn cond4_on(cd: &ComponentDecomposition) -> bool {
    match star_sizes(cd) {
        Some(m) => m.len() >= 3 && m.iter().any(|&x| x >= 2),
        None => false,
    }
}

fn cond5_on(cd: &ComponentDecomposition) -> bool {
    match star_sizes(cd) {
        Some(m) => m.len() == 2 && m.iter().all(|&x| x >= 2),
        None => false,
    }
}

/// Component summary such as `K1 + K_{2,3} + K_{1,1}`.
fn summarize(g: &Graph, cd: &ComponentDecomposition) -> String {
    if cd.len() == 1 && g.is_complete() {
        return format!("K{}", g.n());
    }
    let parts: Vec<String> = cd
        .components
        .iter()
        .map(|c| match (c.order(), c.complete_bipartite_sides()) {
            (1, _) => "K1".to_string(),
            (_, Some((a, b))) => format!("K_{{{a},{b}}}"),
            (k, None) => format!("<{k} vertices, {} edges>", c.edge_count),
        })
        .collect();
    parts.join(" + ")
}

/// First of conditions 1..=5 that `g` satisfies.
pub fn first_condition(g: &Graph) -> Option<u8> {
    first_condition_on(g, &g.components())
}

fn first_condition_on(g: &Graph, cd: &ComponentDecomposition) -> Option<u8> {
    if cond1_complete(g) {
        Some(1)
    } else if cond2_on(cd) {
        Some(2)
    } else if cond3_on(cd) {
        Some(3)
    } else if cond4_on(cd) {
        Some(4)
    } else if cond5_on(cd) {
        Some(5)
    } else {
        None
    }
}

/// Scans `G` for conditions 1..5, then `Ḡ`, and reports the first match.
pub fn decide(g: &Graph) -> Result<DecisionReport, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::Empty);
    }
    if g.n() == 1 {
        // The prism is K₂: fewer than three vertices, so no three roles fit.
        return Ok(DecisionReport {
            verdict: Verdict::NoAssignment,
            matched: Some(ConditionMatch {
                side: Side::Graph,
                condition: 2,
                evidence: "K1; prism has fewer than 3 vertices".to_string(),
            }),
        });
    }
    let gc = g.complement();
    for (side, h) in [(Side::Graph, g), (Side::Complement, &gc)] {
        let cd = h.components();
        if let Some(condition) = first_condition_on(h, &cd) {
            return Ok(DecisionReport {
                verdict: Verdict::NoAssignment,
                matched: Some(ConditionMatch {
                    side,
                    condition,
                    evidence: summarize(h, &cd),
                }),
            });
        }
    }
    Ok(DecisionReport {
        verdict: Verdict::HasAssignment,
        matched: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn union(parts: &[Graph]) -> Graph {
        Graph::disjoint_union(parts)
    }

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    fn star(m: usize) -> Graph {
        Graph::star(m)
    }

    #[test]
    fn condition_one() {
        assert!(cond1_complete(&k(5)));
        assert!(!cond1_complete(&k(1)));
        assert!(!cond1_complete(&Graph::path(3)));
    }

    #[test]
    fn condition_two() {
        assert!(cond2_isolated_union_complete_bipartite(&union(&[
            k(1),
            Graph::complete_bipartite(2, 3)
        ])));
        assert!(!cond2_isolated_union_complete_bipartite(&union(&[k(1), star(4)])));
        assert!(cond2_isolated_union_complete_bipartite(&k(1)));
        assert!(cond2_isolated_union_complete_bipartite(&Graph::empty(3)));
        assert!(!cond2_isolated_union_complete_bipartite(&union(&[k(1), Graph::path(4)])));
    }

    #[test]
    fn condition_three() {
        assert!(cond3_matching(&union(&vec![k(2); 4])));
        assert!(!cond3_matching(&union(&vec![k(2); 3])));
        let with_isolated = union(&[union(&vec![k(2); 4]), k(1)]);
        assert!(!cond3_matching(&with_isolated));
        assert!(cond2_isolated_union_complete_bipartite(&with_isolated));
    }

    #[test]
    fn conditions_four_and_five() {
        assert!(cond4_many_stars(&union(&[star(2), k(2), k(2)])));
        assert!(!cond4_many_stars(&union(&[k(2), k(2), k(2)])));
        assert!(cond5_two_stars(&union(&[star(2), star(3)])));
        let g = union(&[k(2), star(3)]);
        assert!(!cond4_many_stars(&g) && !cond5_two_stars(&g));
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide(&Graph::cycle(5)).unwrap().line(), "YES");
        let r = decide(&k(3)).unwrap();
        assert_eq!(r.line(), "NO side=G cond=1");
        assert!(cond2_isolated_union_complete_bipartite(&k(3).complement()));
        let cocktail = union(&vec![k(2); 4]).complement();
        assert_eq!(decide(&cocktail).unwrap().line(), "NO side=Gc cond=3");
        assert_eq!(decide(&k(1)).unwrap().line(), "NO side=G cond=2");
        assert_eq!(decide(&Graph::empty(0)), Err(GraphError::Empty));
    }

    #[test]
    fn report_invariant() {
        for g in [k(2), Graph::path(4), Graph::empty(4), star(3)] {
            let r = decide(&g).unwrap();
            assert_eq!(r.verdict == Verdict::NoAssignment, r.matched.is_some());
        }
    }

    #[test]
    fn json_shape() {
        let r = decide(&union(&vec![k(2); 4])).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["verdict"], "no-assignment");
        assert_eq!(j["matched"]["side"], "G");
        assert_eq!(j["matched"]["condition"], 3);
        assert_eq!(j["matched"]["evidence"], "K_{1,1} + K_{1,1} + K_{1,1} + K_{1,1}");
    }
}
