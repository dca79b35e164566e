use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type VertexSet = BTreeSet<VertexId>;
/// Undirected edge; invariant: `.0 < .1`.
pub type Edge = (VertexId, VertexId);
pub type EdgeSet = BTreeSet<Edge>;

#[inline]
pub fn edge(u: VertexId, v: VertexId) -> Edge {
    if u < v { (u, v) } else { (v, u) }
}

/// A finite simple graph with string-named vertices. Vertex ids are indices
/// into the lexicographically sorted name table, so iteration order (and
/// every derived output) is deterministic.
#[derive(Clone)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, VertexId>,
    adj: Vec<VertexSet>,
    edges: EdgeSet,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

impl Graph {
    pub fn from_named_edges<S: AsRef<str>>(pairs: &[(S, S)]) -> Result<Graph> {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for (u, v) in pairs {
            if u.as_ref() == v.as_ref() {
                return Err(Error::contract(format!("loop at `{}`", u.as_ref())));
            }
            names.insert(u.as_ref().to_string());
            names.insert(v.as_ref().to_string());
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<String, VertexId> =
            names.iter().enumerate().map(|(i, s)| (s.clone(), i as VertexId)).collect();
        let mut adj = vec![VertexSet::new(); names.len()];
        let mut edges = EdgeSet::new();
        for (u, v) in pairs {
            let (a, b) = (index[u.as_ref()], index[v.as_ref()]);
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
            edges.insert(edge(a, b));
        }
        Ok(Graph { names, index, adj, edges })
    }

    /// Parses the plain edge-list format: one `u v` pair per line, `#` starts
    /// a comment, blank lines ignored. Loops and malformed lines are reported
    /// with their 1-based line number. Duplicate edges collapse silently.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut it = content.split_whitespace();
            let (u, v) = match (it.next(), it.next()) {
                (Some(u), Some(v)) => (u, v),
                _ => {
                    return Err(Error::Parse { line, msg: format!("expected `u v`, got `{content}`") });
                }
            };
            if it.next().is_some() {
                return Err(Error::Parse { line, msg: format!("trailing tokens in `{content}`") });
            }
            if u == v {
                return Err(Error::Parse { line, msg: format!("loop at `{u}` not allowed") });
            }
            pairs.push((u.to_string(), v.to_string()));
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Graph::from_named_edges(&pairs)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n() as VertexId).into_iter()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v as usize]
    }

    pub fn names_of(&self, vs: &VertexSet) -> Vec<String> {
        vs.iter().map(|&v| self.name(v).to_string()).collect()
    }

    pub fn id(&self, name: &str) -> Result<VertexId> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn ids(&self, names: &[&str]) -> Result<VertexSet> {
        names.iter().map(|s| self.id(s)).collect()
    }

    pub fn adj(&self, v: VertexId) -> &VertexSet {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.edges.contains(&edge(u, v))
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn edge_by_names(&self, u: &str, v: &str) -> Result<Edge> {
        let (a, b) = (self.id(u)?, self.id(v)?);
        if !self.has_edge(a, b) {
            return Err(Error::contract(format!("no edge `{u} {v}`")));
        }
        Ok(edge(a, b))
    }

    /// Connected components of `G - forbidden`, each as a vertex set,
    /// ordered by smallest member.
    pub fn components(&self, forbidden: &VertexSet) -> Vec<VertexSet> {
        let mut seen: BTreeSet<VertexId> = forbidden.clone();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let comp = self.component_of(s, forbidden);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, start: VertexId, forbidden: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::new();
        if forbidden.contains(&start) {
            return comp;
        }
        let mut queue = VecDeque::from([start]);
        comp.insert(start);
        while let Some(v) = queue.pop_front() {
            for &w in self.adj(v) {
                if !forbidden.contains(&w) && comp.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_of(0, &VertexSet::new()).len() == self.n()
    }

    /// N(S): neighbours of `set` outside `set`.
    pub fn neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for &v in set {
            for &w in self.adj(v) {
                if !set.contains(&w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// ∂X: edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| x.contains(&u) != x.contains(&v))
            .collect()
    }

    /// Edges with both endpoints in `x`.
    pub fn induced_edges(&self, x: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| x.contains(&u) && x.contains(&v))
            .collect()
    }

    /// E(A, B): edges with one end in `a` and the other in `b`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> EdgeSet {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                (a.contains(&u) && b.contains(&v)) || (a.contains(&v) && b.contains(&u))
            })
            .collect()
    }

    /// BFS distances from `sources`; unreachable vertices are absent.
    pub fn bfs_depths(&self, sources: &VertexSet) -> BTreeMap<VertexId, u32> {
        let mut dist: BTreeMap<VertexId, u32> = sources.iter().map(|&v| (v, 0)).collect();
        let mut queue: VecDeque<VertexId> = sources.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &w in self.adj(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between two vertices inside the subgraph induced by `within`.
    pub fn dist_within(&self, within: &VertexSet, from: VertexId, to: VertexId) -> Option<u32> {
        if !within.contains(&from) || !within.contains(&to) {
            return None;
        }
        let mut dist: BTreeMap<VertexId, u32> = BTreeMap::from([(from, 0)]);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return Some(dist[&v]);
            }
            let d = dist[&v];
            for &w in self.adj(v) {
                if within.contains(&w) && !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// A subgraph given by explicit vertex and edge sets; the unit in which
/// decomposition parts are reported and compared.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Part {
    pub vertices: VertexSet,
    pub edges: EdgeSet,
}

impl Part {
    pub fn induced(g: &Graph, vs: &VertexSet) -> Part {
        Part { vertices: vs.clone(), edges: g.induced_edges(vs) }
    }

    pub fn union_with(&mut self, other: &Part) {
        self.vertices.extend(other.vertices.iter().copied());
        self.edges.extend(other.edges.iter().copied());
    }

    pub fn insert_edge(&mut self, e: Edge) {
        self.vertices.insert(e.0);
        self.vertices.insert(e.1);
        self.edges.insert(e);
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Components of `G - X` paired with their cuts E(K, X), ordered by the
/// smallest vertex of the component.
pub fn componental_cuts(g: &Graph, x: &VertexSet) -> Vec<(VertexSet, EdgeSet)> {
    g.components(x)
        .into_iter()
        .map(|k| {
            let cut = g.edges_between(&k, x);
            (k, cut)
        })
        .collect()
}

/// A component K of `G - X` is tight (for X) when N(K) is all of X.
pub fn is_tight_component(g: &Graph, x: &VertexSet, comp: &VertexSet) -> bool {
    &g.neighbourhood(comp) == x
}

/// All automorphisms, each as the image vector perm[v]. Plain backtracking
/// with degree pruning; fine for the graph sizes this crate handles.
pub fn automorphisms(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.n();
    let degs: Vec<usize> = (0..n).map(|v| g.degree(v as VertexId)).collect();
    let mut perm: Vec<Option<VertexId>> = vec![None; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn rec(
        g: &Graph,
        degs: &[usize],
        v: usize,
        perm: &mut Vec<Option<VertexId>>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let n = g.n();
        if v == n {
            out.push(perm.iter().map(|p| p.unwrap()).collect());
            return;
        }
        for w in 0..n {
            if used[w] || degs[v] != degs[w] {
                continue;
            }
            let ok = (0..v).all(|u| {
                g.has_edge(u as VertexId, v as VertexId)
                    == g.has_edge(perm[u].unwrap(), w as VertexId)
            });
            if ok {
                perm[v] = Some(w as VertexId);
                used[w] = true;
                rec(g, degs, v + 1, perm, used, out);
                used[w] = false;
                perm[v] = None;
            }
        }
    }
    rec(g, &degs, 0, &mut perm, &mut used, &mut out);
    out
}
