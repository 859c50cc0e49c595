//! Role graphs, role assignments, quotients and verification.
//!
//! Roles are numbered `1..=r` everywhere in the public API. A role graph may
//! carry loops: role `i` neighbours itself when two adjacent vertices share
//! role `i`.

use std::fmt::{self, Write as _};

use crate::error::{ParseError, RoleError};
use crate::graph::Graph;

pub const MAX_ROLES: usize = 64;

/// Largest role count for which every role graph is enumerated.
pub const MAX_ENUMERATED_ROLES: usize = 5;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RoleGraph {
    /// Bit `j - 1` of `rows[i - 1]` is set iff roles `i` and `j` are adjacent.
    rows: Vec<u64>,
}

impl RoleGraph {
    pub fn new(r: usize) -> Self {
        assert!((1..=MAX_ROLES).contains(&r), "role count {r} out of range");
        RoleGraph { rows: vec![0; r] }
    }

    /// Builds from 1-based role pairs; `(i, i)` is a loop.
    pub fn from_edges(r: usize, edges: &[(u8, u8)]) -> Self {
        let mut rg = RoleGraph::new(r);
        for &(i, j) in edges {
            rg.add_edge(i, j);
        }
        rg
    }

    pub fn add_edge(&mut self, i: u8, j: u8) {
        let (a, b) = (i as usize - 1, j as usize - 1);
        self.rows[a] |= 1 << b;
        self.rows[b] |= 1 << a;
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, i: u8, j: u8) -> bool {
        self.rows[i as usize - 1] >> (j - 1) & 1 == 1
    }

    pub fn has_loop(&self, i: u8) -> bool {
        self.has_edge(i, i)
    }

    /// `N_R(i)` as a mask, bit `j - 1` for role `j`.
    #[inline]
    pub fn neighbor_mask(&self, i: u8) -> u64 {
        self.rows[i as usize - 1]
    }

    pub fn neighbors(&self, i: u8) -> Vec<u8> {
        mask_roles(self.neighbor_mask(i))
    }

    /// Edges `(i, j)` with `i <= j`, loops included, in lexicographic order.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let r = self.r() as u8;
        (1..=r)
            .flat_map(|i| (i..=r).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn loops(&self) -> Vec<u8> {
        (1..=self.r() as u8).filter(|&i| self.has_loop(i)).collect()
    }

    /// Connectivity of the underlying simple graph (loops ignored).
    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.r());
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for i in mask_roles(frontier) {
                next |= self.neighbor_mask(i);
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & full == full
    }

    /// Loop-free and 2-colourable.
    pub fn is_bipartite(&self) -> bool {
        if !self.loops().is_empty() {
            return false;
        }
        let r = self.r();
        let mut colour = vec![None; r];
        for root in 0..r {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut stack = vec![root];
            while let Some(i) = stack.pop() {
                let c = colour[i].unwrap();
                for j in mask_roles(self.rows[i]) {
                    let j = j as usize - 1;
                    match colour[j] {
                        None => {
                            colour[j] = Some(!c);
                            stack.push(j);
                        }
                        Some(d) if d == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Relabels role `i` as `perm[i - 1]`.
    pub fn relabeled(&self, perm: &[u8]) -> RoleGraph {
        let mut rg = RoleGraph::new(self.r());
        for (i, j) in self.edges() {
            rg.add_edge(perm[i as usize - 1], perm[j as usize - 1]);
        }
        rg
    }

    /// Adjacency matrix, row-major, diagonal included.
    fn matrix_key(&self) -> Vec<bool> {
        let r = self.r() as u8;
        (1..=r)
            .flat_map(|i| (1..=r).map(move |j| (i, j)))
            .map(|(i, j)| self.has_edge(i, j))
            .collect()
    }

    /// Whether the three-role normal form holds: `1, 3 ∈ N(2)`, and a loop
    /// at role 1 forces a loop at role 3.
    pub fn is_normalized(&self) -> bool {
        if self.r() != 3 {
            return true;
        }
        self.has_edge(2, 1)
            && self.has_edge(2, 3)
            && (!self.has_loop(1) || self.has_loop(3))
    }

    /// Canonical relabeling: the lexicographically smallest adjacency matrix,
    /// restricted to normalized labelings when one exists. Returns the
    /// relabeled graph and the permutation applied (`old role i ↦ perm[i-1]`).
    pub fn canonical(&self) -> (RoleGraph, Vec<u8>) {
        let r = self.r();
        if r > 8 {
            return (self.clone(), (1..=r as u8).collect());
        }
        let mut best: Option<(bool, Vec<bool>, RoleGraph, Vec<u8>)> = None;
        for perm in permutations(r) {
            let rg = self.relabeled(&perm);
            let rank = (!rg.is_normalized(), rg.matrix_key());
            if best
                .as_ref()
                .is_none_or(|(n, k, _, _)| rank < (*n, k.clone()))
            {
                best = Some((rank.0, rank.1, rg, perm));
            }
        }
        let (_, _, rg, perm) = best.unwrap();
        (rg, perm)
    }

    pub fn is_isomorphic(&self, other: &RoleGraph) -> bool {
        self.r() == other.r() && self.canonical().0 == other.canonical().0
    }

    /// A structural description such as `path 1-2-3, loops at 3`.
    pub fn describe(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .filter(|(i, j)| i != j)
            .map(|(i, j)| format!("{i}-{j}"))
            .collect();
        let loops = self.loops();
        let mut s = if edges.is_empty() {
            "no edges".to_string()
        } else {
            format!("edges {}", edges.join(" "))
        };
        if loops.is_empty() {
            s.push_str(", no loops");
        } else {
            let l: Vec<String> = loops.iter().map(u8::to_string).collect();
            let _ = write!(s, ", loops at {}", l.join(" "));
        }
        s
    }
}

impl fmt::Debug for RoleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RoleGraph(r={}; {})", self.r(), self.describe())
    }
}

pub(crate) fn full_mask(r: usize) -> u64 {
    if r == 64 {
        !0
    } else {
        (1u64 << r) - 1
    }
}

pub(crate) fn mask_roles(mask: u64) -> Vec<u8> {
    (0..64u8).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// All permutations of `1..=r` in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (1..=r as u8).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// A total map from the vertices of some graph to roles `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    roles: Vec<u8>,
    r: usize,
}

impl Assignment {
    pub fn new(roles: Vec<u8>, r: usize) -> Result<Self, RoleError> {
        if !(1..=MAX_ROLES).contains(&r) {
            return Err(RoleError::RoleCount(r));
        }
        if let Some((vertex, &role)) = roles
            .iter()
            .enumerate()
            .find(|(_, &x)| x == 0 || x as usize > r)
        {
            return Err(RoleError::RoleOutOfRange { vertex, role, r });
        }
        Ok(Assignment { roles, r })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn role(&self, v: usize) -> u8 {
        self.roles[v]
    }

    pub fn roles(&self) -> &[u8] {
        &self.roles
    }

    /// The first role in `1..=r` given to no vertex.
    pub fn missing_role(&self) -> Option<u8> {
        let used = self.roles.iter().fold(0u64, |m, &x| m | 1 << (x - 1));
        let missing = full_mask(self.r) & !used;
        (missing != 0).then(|| missing.trailing_zeros() as u8 + 1)
    }

    /// Relabels role `i` as `perm[i - 1]`.
    pub fn relabeled(&self, perm: &[u8]) -> Assignment {
        Assignment {
            roles: self.roles.iter().map(|&x| perm[x as usize - 1]).collect(),
            r: self.r,
        }
    }

    /// Rotates the vertex indices by `shift` modulo the length; used to move
    /// an assignment between the prisms of a graph and of its complement.
    pub(crate) fn rotated(&self, shift: usize) -> Assignment {
        let len = self.roles.len();
        let mut roles = vec![0; len];
        for (v, &x) in self.roles.iter().enumerate() {
            roles[(v + shift) % len] = x;
        }
        Assignment { roles, r: self.r }
    }
}

fn roles_seen(g: &Graph, a: &Assignment, v: usize) -> u64 {
    g.neighbors(v)
        .iter()
        .fold(0u64, |m, w| m | 1 << (a.role(w) - 1))
}

/// The role graph realized by `a`: roles `i ~ j` iff some edge of `g` joins
/// a vertex of role `i` to one of role `j`.
pub fn quotient(g: &Graph, a: &Assignment) -> Result<RoleGraph, RoleError> {
    if a.len() != g.n() {
        return Err(RoleError::Partial {
            expected: g.n(),
            got: a.len(),
        });
    }
    if let Some(role) = a.missing_role() {
        return Err(RoleError::NotSurjective(role));
    }
    let mut rg = RoleGraph::new(a.r());
    for (u, v) in g.edges() {
        rg.add_edge(a.role(u), a.role(v));
    }
    Ok(rg)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    Partial { expected: usize, got: usize },
    RoleCount { assignment: usize, role_graph: usize },
    NotSurjective(u8),
    /// The role graph differs from the quotient of the assignment.
    QuotientMismatch,
    /// `roles(N(vertex))` differs from `N_R(role)`.
    Neighborhood {
        vertex: usize,
        role: u8,
        expected: Vec<u8>,
        found: Vec<u8>,
    },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Partial { expected, got } => {
                write!(f, "assignment covers {got} of {expected} vertices")
            }
            VerifyFailure::RoleCount { assignment, role_graph } => write!(
                f,
                "assignment uses {assignment} roles but the role graph has {role_graph}"
            ),
            VerifyFailure::NotSurjective(role) => write!(f, "role {role} is unused"),
            VerifyFailure::QuotientMismatch => write!(f, "role graph is not the quotient"),
            VerifyFailure::Neighborhood {
                vertex,
                role,
                expected,
                found,
            } => write!(
                f,
                "vertex {vertex} (role {role}) sees roles {found:?}, role graph requires {expected:?}"
            ),
        }
    }
}

/// Checks that `a` is an `rg`-role assignment of `g`: surjective, and every
/// vertex sees exactly the roles its own role neighbours in `rg`.
pub fn verify(g: &Graph, a: &Assignment, rg: &RoleGraph) -> Result<(), VerifyFailure> {
    if a.len() != g.n() {
        return Err(VerifyFailure::Partial {
            expected: g.n(),
            got: a.len(),
        });
    }
    if a.r() != rg.r() {
        return Err(VerifyFailure::RoleCount {
            assignment: a.r(),
            role_graph: rg.r(),
        });
    }
    if let Some(role) = a.missing_role() {
        return Err(VerifyFailure::NotSurjective(role));
    }
    for v in 0..g.n() {
        let role = a.role(v);
        let seen = roles_seen(g, a, v);
        if seen != rg.neighbor_mask(role) {
            return Err(VerifyFailure::Neighborhood {
                vertex: v,
                role,
                expected: rg.neighbors(role),
                found: mask_roles(seen),
            });
        }
    }
    match quotient(g, a) {
        Ok(q) if q == *rg => Ok(()),
        _ => Err(VerifyFailure::QuotientMismatch),
    }
}

/// Every role graph on `r` roles up to isomorphism, each canonically
/// labeled, ordered by edge count (loops included) and then adjacency
/// matrix.
pub fn all_role_graphs(r: usize) -> Result<Vec<RoleGraph>, RoleError> {
    if !(1..=MAX_ENUMERATED_ROLES).contains(&r) {
        return Err(RoleError::RoleCount(r));
    }
    let slots: Vec<(u8, u8)> = (1..=r as u8)
        .flat_map(|i| (i..=r as u8).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for bits in 0u64..1 << slots.len() {
        let edges: Vec<(u8, u8)> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let (canon, _) = RoleGraph::from_edges(r, &edges).canonical();
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out.sort_by_key(|rg| (rg.edges().len(), rg.matrix_key()));
    Ok(out)
}

/// Connected role graphs on `r` roles up to isomorphism.
pub fn enumerate_role_graphs(r: usize) -> Result<Vec<RoleGraph>, RoleError> {
    Ok(all_role_graphs(r)?
        .into_iter()
        .filter(RoleGraph::is_connected)
        .collect())
}

/// `roles r`, one `i j` line per role-graph edge (`i i` for loops), then
/// `assignment n` and one `vertex role` line per vertex.
pub fn serialize(a: &Assignment, rg: &RoleGraph) -> String {
    let mut out = format!("roles {}\n", rg.r());
    for (i, j) in rg.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    let _ = writeln!(out, "assignment {}", a.len());
    for (v, &x) in a.roles().iter().enumerate() {
        let _ = writeln!(out, "{v} {x}");
    }
    out
}

/// Inverse of [`serialize`]. Lines outside the `roles` and `assignment`
/// blocks are rejected; blank lines and `#` comments are skipped.
pub fn deserialize(input: &str) -> Result<(Assignment, RoleGraph), ParseError> {
    let lines = numbered_lines(input);
    parse_blocks(&lines)
}

pub(crate) struct Line<'a> {
    pub number: usize,
    pub offset: usize,
    pub text: &'a str,
}

pub(crate) fn numbered_lines(input: &str) -> Vec<Line<'_>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for (i, raw) in input.split_inclusive('\n').enumerate() {
        let text = raw.split('#').next().unwrap_or("").trim();
        if !text.is_empty() {
            out.push(Line {
                number: i + 1,
                offset,
                text,
            });
        }
        offset += raw.len();
    }
    out
}

pub(crate) fn parse_blocks(lines: &[Line<'_>]) -> Result<(Assignment, RoleGraph), ParseError> {
    let err = |l: &Line<'_>, msg: String| ParseError::new(l.number, l.offset, msg);
    let mut it = lines.iter().peekable();
    let head = it
        .next()
        .ok_or_else(|| ParseError::new(1, 0, "missing 'roles' line"))?;
    let r: usize = match head.text.split_whitespace().collect::<Vec<_>>()[..] {
        ["roles", r] => r
            .parse()
            .ok()
            .filter(|r| (1..=MAX_ROLES).contains(r))
            .ok_or_else(|| err(head, format!("bad role count '{r}'")))?,
        _ => return Err(err(head, "expected 'roles <r>'".into())),
    };
    let mut rg = RoleGraph::new(r);
    let mut n = None;
    for l in it.by_ref() {
        let f: Vec<&str> = l.text.split_whitespace().collect();
        if f.first() == Some(&"assignment") {
            n = Some(
                f.get(1)
                    .and_then(|x| x.parse::<usize>().ok())
                    .filter(|_| f.len() == 2)
                    .ok_or_else(|| err(l, "expected 'assignment <n>'".into()))?,
            );
            break;
        }
        let (i, j) = pair(&f).ok_or_else(|| err(l, "expected a role pair 'i j'".into()))?;
        if i == 0 || j == 0 || i > r || j > r {
            return Err(err(l, format!("role pair {i} {j} outside 1..={r}")));
        }
        rg.add_edge(i as u8, j as u8);
    }
    let n = n.ok_or_else(|| {
        let (number, offset) = lines.last().map_or((1, 0), |l| (l.number, l.offset));
        ParseError::new(number, offset, "missing 'assignment' block")
    })?;
    let mut roles = vec![0u8; n];
    let mut filled = vec![false; n];
    for l in it {
        let f: Vec<&str> = l.text.split_whitespace().collect();
        let (v, x) = pair(&f).ok_or_else(|| err(l, "expected 'vertex role'".into()))?;
        if v >= n {
            return Err(err(l, format!("vertex {v} out of range for n = {n}")));
        }
        if x == 0 || x > r {
            return Err(err(l, format!("role {x} outside 1..={r}")));
        }
        if filled[v] {
            return Err(err(l, format!("vertex {v} assigned twice")));
        }
        filled[v] = true;
        roles[v] = x as u8;
    }
    if let Some(v) = filled.iter().position(|f| !f) {
        let (number, offset) = lines.last().map_or((1, 0), |l| (l.number, l.offset));
        return Err(ParseError::new(number, offset, format!("vertex {v} has no role")));
    }
    let a = Assignment::new(roles, r).expect("roles range-checked above");
    Ok((a, rg))
}

fn pair(fields: &[&str]) -> Option<(usize, usize)> {
    match fields {
        [a, b] => Some((a.parse().ok()?, b.parse().ok()?)),
        _ => None,
    }
}
